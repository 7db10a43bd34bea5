use serde::{Deserialize, Serialize};

use crate::error::{check_probability, Error, Result};
use crate::structures::{Color, ColoredDigraph, ColoredGraph, ColoredHost, RainbowCycle, VertexId};

/// Contraction of the colored edge `e* = {x, y}` (color `c1`) into ★.
///
/// Vertices other than `x, y` keep their order as `0..n − 2` and ★ is
/// `n − 2`. Colors other than `c1` are renumbered in order onto `0..n − 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ColoredContraction {
    n: usize,
    pub x: VertexId,
    pub y: VertexId,
    pub c1: Color,
    pub star_vertex: VertexId,
    pub vertex_map: Vec<Option<VertexId>>,
    /// Arc probability of the contracted digraph, `(1 − 1/n)·q`.
    pub s_prime: f64,
    original: Vec<VertexId>,
}

impl ColoredContraction {
    /// `q` is the arc probability of the round being contracted; the
    /// palette is assumed to be `0..n`.
    pub fn new(n: usize, x: VertexId, y: VertexId, c1: Color, q: f64) -> Result<Self> {
        check_probability("q", q)?;
        if n < 3 {
            return Err(Error::Parameter(format!("n = {n} must be at least 3")));
        }
        if x == y || x as usize >= n || y as usize >= n {
            return Err(Error::Parameter(format!(
                "e* = ({x},{y}) is not a pair of [{n}]"
            )));
        }
        if c1 as usize >= n {
            return Err(Error::Parameter(format!(
                "color {c1} outside the palette of {n}"
            )));
        }
        let original: Vec<VertexId> = (0..n as VertexId).filter(|&v| v != x && v != y).collect();
        let mut vertex_map = vec![None; n];
        for (new, &old) in original.iter().enumerate() {
            vertex_map[old as usize] = Some(new as VertexId);
        }
        Ok(ColoredContraction {
            n,
            x,
            y,
            c1,
            star_vertex: original.len() as VertexId,
            vertex_map,
            s_prime: (1.0 - 1.0 / n as f64) * q,
            original,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn reduced_n(&self) -> usize {
        self.n - 1
    }

    fn recolor(&self, color: Color) -> Option<Color> {
        match color.cmp(&self.c1) {
            std::cmp::Ordering::Less => Some(color),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(color - 1),
        }
    }

    fn uncolor(&self, color: Color) -> Color {
        if color < self.c1 {
            color
        } else {
            color + 1
        }
    }

    /// The contracted colored arc, or `None` if dropped. Kept: color other
    /// than `c1`, and either both ends outside `{x, y}`, or head `x` with
    /// tail outside, or tail `y` with head outside.
    pub fn image(
        &self,
        u: VertexId,
        v: VertexId,
        color: Color,
    ) -> Option<(VertexId, VertexId, Color)> {
        let color = self.recolor(color)?;
        let mu = self.vertex_map[u as usize];
        let mv = self.vertex_map[v as usize];
        let (u, v) = match (mu, mv) {
            (Some(a), Some(b)) => (a, b),
            (Some(a), None) if v == self.x => (a, self.star_vertex),
            (None, Some(b)) if u == self.y => (self.star_vertex, b),
            _ => return None,
        };
        Some((u, v, color))
    }

    fn original_of(&self, v: VertexId) -> Result<VertexId> {
        self.original
            .get(v as usize)
            .copied()
            .ok_or_else(|| Error::Structure(format!("vertex {v} outside V*")))
    }
}

/// The contracted digraph `D` on `n − 1` vertices with `n − 1` colors.
pub fn contract_colored(g2: &ColoredDigraph, ctr: &ColoredContraction) -> Result<ColoredDigraph> {
    if g2.n() != ctr.n() || g2.c() != ctr.n() {
        return Err(Error::Precondition(format!(
            "expected n = c = {}, got n = {}, c = {}",
            ctr.n(),
            g2.n(),
            g2.c()
        )));
    }
    let mut out = ColoredDigraph::new(ctr.reduced_n(), ctr.reduced_n())?;
    for ((u, v), color) in g2.arcs() {
        if let Some((a, b, c)) = ctr.image(u, v, color) {
            out.insert_unchecked(a, b, c);
        }
    }
    Ok(out)
}

/// Splits ★ back into `x` and `y`: the step into ★ now ends at `x`, the
/// edge `{x, y}` with color `c1` follows, and the step out of ★ leaves
/// from `y`.
pub fn lift_colored(w: &RainbowCycle, ctr: &ColoredContraction) -> Result<RainbowCycle> {
    let m = ctr.reduced_n();
    let malformed = |why: &str| Error::Precondition(format!("malformed witness: {why}"));
    if w.vertex_seq.len() != m || w.color_seq.len() != m {
        return Err(malformed("wrong length"));
    }
    let mut seen = vec![false; m];
    for &v in &w.vertex_seq {
        if v as usize >= m || std::mem::replace(&mut seen[v as usize], true) {
            return Err(malformed("not a permutation of V*"));
        }
    }
    let mut used = vec![false; m];
    for &c in &w.color_seq {
        if c as usize >= m || std::mem::replace(&mut used[c as usize], true) {
            return Err(malformed("colors repeat or leave the palette"));
        }
    }
    let start = w
        .vertex_seq
        .iter()
        .position(|&v| v == ctr.star_vertex)
        .ok_or_else(|| malformed("missing the contracted vertex"))?;
    let mut vertices = vec![ctr.y];
    let mut colors = Vec::with_capacity(m + 1);
    for j in 0..m {
        colors.push(ctr.uncolor(w.color_seq[(start + j) % m]));
        if j + 1 < m {
            vertices.push(ctr.original_of(w.vertex_seq[(start + j + 1) % m])?);
        }
    }
    vertices.push(ctr.x);
    colors.push(ctr.c1);
    Ok(RainbowCycle::new(vertices, colors))
}

/// `G_1 ∪ G_2` with every colored copy of a pair kept: a step is carried if
/// the edge of `G_1` or either arc of `G_2` between its ends has the color.
pub struct ColoredUnion<'a> {
    pub g1: &'a ColoredGraph,
    pub g2: &'a ColoredDigraph,
}

impl ColoredHost for ColoredUnion<'_> {
    fn vertex_count(&self) -> usize {
        self.g1.n()
    }

    fn palette(&self) -> usize {
        self.g1.c().max(self.g2.c())
    }

    fn carries(&self, u: VertexId, v: VertexId, color: Color) -> bool {
        self.g1.color(u, v) == Some(color)
            || self.g2.color(u, v) == Some(color)
            || self.g2.color(v, u) == Some(color)
    }
}

impl ColoredUnion<'_> {
    /// Simple colored graph keeping one copy per pair: `G_1`'s if present,
    /// else the arc of `G_2` listed first in `(min, max)`, `(max, min)`
    /// order. Every edge is present with probability `p` and its color is
    /// uniform, matching the single-color model.
    pub fn flattened(&self) -> ColoredGraph {
        let mut out = self.g1.clone();
        for ((u, v), color) in self.g2.arcs() {
            let (a, b) = (u.min(v), u.max(v));
            if out.color(a, b).is_some() {
                continue;
            }
            let chosen = self.g2.color(a, b).unwrap_or(color);
            out.insert_unchecked(a, b, chosen);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::verify_rainbow_hc;

    fn ctr() -> ColoredContraction {
        ColoredContraction::new(5, 1, 2, 3, 0.4).unwrap()
    }

    #[test]
    fn layout_and_effective_probability() {
        let c = ctr();
        assert_eq!(c.star_vertex, 3);
        assert_eq!(c.vertex_map, [Some(0), None, None, Some(1), Some(2)]);
        assert!((c.s_prime - 0.8 * 0.4).abs() < 1e-15);
        assert!(ColoredContraction::new(5, 1, 1, 0, 0.4).is_err());
        assert!(ColoredContraction::new(5, 1, 2, 5, 0.4).is_err());
    }

    #[test]
    fn filter_bullets() {
        let c = ctr();
        let m = |v: VertexId| c.vertex_map[v as usize].unwrap();
        let star = c.star_vertex;
        assert_eq!(c.image(3, 4, 2), Some((m(3), m(4), 2)));
        assert_eq!(c.image(3, 1, 0), Some((m(3), star, 0)));
        assert_eq!(c.image(2, 4, 1), Some((star, m(4), 1)));
        for col in 0..5 {
            assert_eq!(c.image(1, 3, col), None);
            assert_eq!(c.image(3, 2, col), None);
            assert_eq!(c.image(2, 1, col), None);
        }
        assert_eq!(c.image(3, 4, 3), None);
        assert_eq!(c.image(3, 4, 4), Some((m(3), m(4), 3)));
    }

    #[test]
    fn contraction_needs_full_palette() {
        let g = ColoredDigraph::new(5, 4).unwrap();
        assert!(matches!(
            contract_colored(&g, &ctr()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn contracted_complete_digraph() {
        let c = ctr();
        let mut g = ColoredDigraph::new(5, 5).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    g.insert(u, v, (u + v) % 5).unwrap();
                }
            }
        }
        let d = contract_colored(&g, &c).unwrap();
        assert_eq!((d.n(), d.c()), (4, 4));
        assert!(d.arcs().all(|(_, col)| col < 4));
    }

    #[test]
    fn toy_lift() {
        // n = 4, e* = (1, 2) with color 0; V* = {0, 3, ★}
        let c = ColoredContraction::new(4, 1, 2, 0, 0.5).unwrap();
        let star = c.star_vertex;
        let m = |v: VertexId| c.vertex_map[v as usize].unwrap();
        let w = RainbowCycle::new(vec![star, m(3), m(0)], vec![0, 1, 2]);
        let lifted = lift_colored(&w, &c).unwrap();
        assert_eq!(lifted.vertex_seq, vec![2, 3, 0, 1]);
        assert_eq!(lifted.color_seq, vec![1, 2, 3, 0]);

        let mut g1 = ColoredGraph::new(4, 4).unwrap();
        g1.insert(1, 2, 0).unwrap();
        let mut g2 = ColoredDigraph::new(4, 4).unwrap();
        g2.insert(2, 3, 1).unwrap();
        g2.insert(3, 0, 2).unwrap();
        g2.insert(0, 1, 3).unwrap();
        let d = contract_colored(&g2, &c).unwrap();
        assert!(verify_rainbow_hc(&d, &w));
        let union = ColoredUnion { g1: &g1, g2: &g2 };
        assert!(verify_rainbow_hc(&union, &lifted));
        assert!(verify_rainbow_hc(&union.flattened(), &lifted));
    }

    #[test]
    fn repeated_colors_rejected_before_lift() {
        let c = ColoredContraction::new(4, 1, 2, 0, 0.5).unwrap();
        let w = RainbowCycle::new(vec![2, 1, 0], vec![0, 0, 2]);
        assert!(matches!(lift_colored(&w, &c), Err(Error::Precondition(_))));
        let short = RainbowCycle::new(vec![2, 1], vec![0, 1]);
        assert!(lift_colored(&short, &c).is_err());
    }
}
