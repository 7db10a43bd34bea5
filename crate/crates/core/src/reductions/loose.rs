use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structures::{is_dir_loose_cycle, DirHypergraph, DirLooseCycle, LooseCycle, VertexId};

/// Contraction of the ordered edge `e* = (x_1, …, x_k)` into one vertex ★.
///
/// Vertices outside `e*` keep their relative order and become
/// `0..n − k`; ★ is the last vertex, `n − k`, of the contracted
/// structure on `n − (k − 1)` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LooseContraction {
    n: usize,
    pub estar: Vec<VertexId>,
    pub star_vertex: VertexId,
    /// `vertex_map[v]` is the contracted id of original vertex `v`;
    /// `None` for the members of `e*`.
    pub vertex_map: Vec<Option<VertexId>>,
    /// Inverse of `vertex_map` on the non-★ vertices.
    original: Vec<VertexId>,
}

impl LooseContraction {
    pub fn new(n: usize, estar: Vec<VertexId>) -> Result<Self> {
        let k = estar.len();
        if k < 2 || k > n {
            return Err(Error::Parameter(format!(
                "e* must have 2..={n} entries, got {k}"
            )));
        }
        let mut vertex_map = vec![None; n];
        let mut in_estar = vec![false; n];
        for &x in &estar {
            if x as usize >= n || in_estar[x as usize] {
                return Err(Error::Parameter(format!(
                    "e* = {estar:?} is not a k-tuple of distinct vertices of [{n}]"
                )));
            }
            in_estar[x as usize] = true;
        }
        let original: Vec<VertexId> = (0..n as VertexId)
            .filter(|&v| !in_estar[v as usize])
            .collect();
        for (new, &old) in original.iter().enumerate() {
            vertex_map[old as usize] = Some(new as VertexId);
        }
        Ok(LooseContraction {
            n,
            star_vertex: original.len() as VertexId,
            estar,
            vertex_map,
            original,
        })
    }

    pub fn k(&self) -> usize {
        self.estar.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `|V*| = n − (k − 1)`.
    pub fn reduced_n(&self) -> usize {
        self.n - (self.k() - 1)
    }

    /// The contracted arc, or `None` if the filter drops it. Kept arcs are
    /// those disjoint from `e*`, those meeting it only in `x_1` with `x_1`
    /// not first, and those meeting it only in `x_k` with `x_k` first.
    pub fn image(&self, arc: &[VertexId]) -> Option<Vec<VertexId>> {
        let x1 = self.estar[0];
        let xk = self.estar[self.k() - 1];
        let mut hit = None;
        for (pos, &v) in arc.iter().enumerate() {
            if self.vertex_map[v as usize].is_none() {
                if hit.is_some() {
                    return None;
                }
                hit = Some((pos, v));
            }
        }
        match hit {
            None => {}
            Some((pos, v)) if v == x1 && pos != 0 => {}
            Some((0, v)) if v == xk => {}
            Some(_) => return None,
        }
        Some(
            arc.iter()
                .map(|&v| self.vertex_map[v as usize].unwrap_or(self.star_vertex))
                .collect(),
        )
    }

    /// The unique original arc whose image is `arc`: ★ in first position
    /// came from `x_k`, ★ anywhere else came from `x_1`.
    pub fn preimage(&self, arc: &[VertexId]) -> Result<Vec<VertexId>> {
        if arc.len() != self.k() {
            return Err(Error::Structure(format!(
                "arc {arc:?} is not a {}-tuple",
                self.k()
            )));
        }
        let x1 = self.estar[0];
        let xk = self.estar[self.k() - 1];
        arc.iter()
            .enumerate()
            .map(|(pos, &v)| match v {
                _ if v == self.star_vertex => Ok(if pos == 0 { xk } else { x1 }),
                _ if (v as usize) < self.original.len() => Ok(self.original[v as usize]),
                _ => Err(Error::Structure(format!("vertex {v} outside V*"))),
            })
            .collect()
    }
}

/// `D_i`: the filtered, renamed copy of one directed round on `V*`.
pub fn contract_loose(round: &DirHypergraph, ctr: &LooseContraction) -> Result<DirHypergraph> {
    if round.k() != ctr.k() || round.n() != ctr.n() {
        return Err(Error::Parameter(format!(
            "round is ({}, {}) but the contraction expects ({}, {})",
            round.n(),
            round.k(),
            ctr.n(),
            ctr.k()
        )));
    }
    let mut out = DirHypergraph::new(ctr.reduced_n(), ctr.k())?;
    for arc in round.arcs() {
        if let Some(a) = ctr.image(arc) {
            out.insert_unchecked(a);
        }
    }
    Ok(out)
}

/// Expands ★ back into `e*`: the arc leaving ★ regains `x_k` in front, the
/// arc entering ★ regains `x_1` at its end, and `{x_1, …, x_k}` closes the
/// gap between them.
pub fn lift_loose(w: &DirLooseCycle, ctr: &LooseContraction) -> Result<LooseCycle> {
    if !is_dir_loose_cycle(ctr.reduced_n(), ctr.k(), w) {
        return Err(Error::Precondition(
            "witness is not a directed loose Hamilton cycle on V*".into(),
        ));
    }
    let start = w
        .arc_seq
        .iter()
        .position(|a| a[0] == ctr.star_vertex)
        .ok_or_else(|| Error::Precondition("the contracted vertex is not a link".into()))?;
    let mut edges = Vec::with_capacity(w.len() + 1);
    for j in 0..w.len() {
        let mut e = ctr.preimage(&w.arc_seq[(start + j) % w.len()])?;
        e.sort_unstable();
        edges.push(e);
    }
    let mut carrier = ctr.estar.clone();
    carrier.sort_unstable();
    edges.push(carrier);
    Ok(LooseCycle::new(edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::is_loose_cycle;

    fn ctr() -> LooseContraction {
        LooseContraction::new(8, vec![1, 2, 3]).unwrap()
    }

    #[test]
    fn layout_of_v_star() {
        let c = ctr();
        assert_eq!(c.reduced_n(), 6);
        assert_eq!(c.star_vertex, 5);
        assert_eq!(
            c.vertex_map,
            [
                Some(0),
                None,
                None,
                None,
                Some(1),
                Some(2),
                Some(3),
                Some(4)
            ]
        );
        assert!(LooseContraction::new(8, vec![1, 1, 3]).is_err());
        assert!(LooseContraction::new(8, vec![1, 2, 8]).is_err());
    }

    #[test]
    fn filter_bullets() {
        let c = ctr();
        let m = |v: VertexId| c.vertex_map[v as usize].unwrap();
        let star = c.star_vertex;
        assert_eq!(c.image(&[4, 5, 6]), Some(vec![m(4), m(5), m(6)]));
        assert_eq!(c.image(&[4, 1, 5]), Some(vec![m(4), star, m(5)]));
        assert_eq!(c.image(&[3, 4, 5]), Some(vec![star, m(4), m(5)]));
        assert_eq!(c.image(&[1, 4, 5]), None);
        assert_eq!(c.image(&[4, 5, 3]), None);
        assert_eq!(c.image(&[1, 2, 4]), None);
        assert_eq!(c.image(&[2, 4, 5]), None);
    }

    #[test]
    fn preimage_inverts_image() {
        let c = ctr();
        let complete = DirHypergraph::complete(8, 3).unwrap();
        let contracted = contract_loose(&complete, &c).unwrap();
        // 6 · 5 · 4 ordered triples of V*, each with exactly one preimage
        assert_eq!(contracted.len(), 120);
        for arc in contracted.arcs() {
            let back = c.preimage(arc).unwrap();
            assert_eq!(c.image(&back).as_deref(), Some(arc));
        }
    }

    #[test]
    fn lift_expands_star() {
        let c = ctr();
        let m = |v: VertexId| c.vertex_map[v as usize].unwrap();
        let star = c.star_vertex;
        let w = DirLooseCycle::new(vec![
            vec![star, m(4), m(5)],
            vec![m(5), m(6), m(7)],
            vec![m(7), m(0), star],
        ]);
        let lifted = lift_loose(&w, &c).unwrap();
        assert_eq!(
            lifted.edge_seq,
            vec![vec![3, 4, 5], vec![5, 6, 7], vec![0, 1, 7], vec![1, 2, 3]]
        );
        assert!(is_loose_cycle(8, 3, &lifted));
    }

    #[test]
    fn lift_needs_star_as_link() {
        let c = ctr();
        let m = |v: VertexId| c.vertex_map[v as usize].unwrap();
        let star = c.star_vertex;
        let w = DirLooseCycle::new(vec![
            vec![m(0), star, m(4)],
            vec![m(4), m(5), m(6)],
            vec![m(6), m(7), m(0)],
        ]);
        assert!(matches!(lift_loose(&w, &c), Err(Error::Precondition(_))));
        let broken = DirLooseCycle::new(vec![vec![star, m(4), m(5)]]);
        assert!(matches!(
            lift_loose(&broken, &c),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn mismatched_round_rejected() {
        let d = DirHypergraph::new(8, 4).unwrap();
        assert!(contract_loose(&d, &ctr()).is_err());
    }
}
