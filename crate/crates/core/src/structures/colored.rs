use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::VertexId;
use crate::error::{Error, Result};

pub type Color = u32;

/// Anything a rainbow Hamilton cycle can be checked against: a way to ask
/// whether the step `u -> v` is available with a given color.
pub trait ColoredHost {
    fn vertex_count(&self) -> usize;
    fn palette(&self) -> usize;
    fn carries(&self, u: VertexId, v: VertexId, color: Color) -> bool;
}

fn check_palette(c: usize) -> Result<()> {
    if c == 0 {
        return Err(Error::Parameter("color count c must be at least 1".into()));
    }
    if c > u32::MAX as usize {
        return Err(Error::Parameter(format!("color count c = {c} too large")));
    }
    Ok(())
}

fn check_pair(n: usize, c: usize, u: VertexId, v: VertexId, color: Color) -> Result<()> {
    if u == v {
        return Err(Error::Structure(format!("loop at {u}")));
    }
    if u as usize >= n || v as usize >= n {
        return Err(Error::Structure(format!(
            "({u},{v}) out of range for n = {n}"
        )));
    }
    if color as usize >= c {
        return Err(Error::Structure(format!(
            "color {color} out of range for c = {c}"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredEdge {
    pub edge: [VertexId; 2],
    pub color: Color,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredArc {
    pub arc: [VertexId; 2],
    pub color: Color,
}

/// Simple graph with one color in `0..c` per edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColoredGraphRepr", into = "ColoredGraphRepr")]
pub struct ColoredGraph {
    n: usize,
    c: usize,
    edges: BTreeMap<(VertexId, VertexId), Color>,
}

#[derive(Serialize, Deserialize)]
struct ColoredGraphRepr {
    n: usize,
    k: usize,
    c: usize,
    edges: Vec<ColoredEdge>,
}

impl TryFrom<ColoredGraphRepr> for ColoredGraph {
    type Error = Error;
    fn try_from(r: ColoredGraphRepr) -> Result<Self> {
        if r.k != 2 {
            return Err(Error::Structure(format!(
                "colored graph must have k = 2, got {}",
                r.k
            )));
        }
        let mut g = ColoredGraph::new(r.n, r.c)?;
        for e in r.edges {
            if !g.insert(e.edge[0], e.edge[1], e.color)? {
                return Err(Error::Structure(format!("duplicate edge {:?}", e.edge)));
            }
        }
        Ok(g)
    }
}

impl From<ColoredGraph> for ColoredGraphRepr {
    fn from(g: ColoredGraph) -> Self {
        ColoredGraphRepr {
            n: g.n,
            k: 2,
            c: g.c,
            edges: g
                .edges
                .into_iter()
                .map(|((u, v), color)| ColoredEdge {
                    edge: [u, v],
                    color,
                })
                .collect(),
        }
    }
}

impl ColoredGraph {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        check_palette(c)?;
        Ok(ColoredGraph {
            n,
            c,
            edges: BTreeMap::new(),
        })
    }

    /// Returns whether the edge was new; an existing edge keeps its color.
    pub fn insert(&mut self, u: VertexId, v: VertexId, color: Color) -> Result<bool> {
        check_pair(self.n, self.c, u, v, color)?;
        let key = (u.min(v), u.max(v));
        if self.edges.contains_key(&key) {
            return Ok(false);
        }
        self.edges.insert(key, color);
        Ok(true)
    }

    pub(crate) fn insert_unchecked(&mut self, u: VertexId, v: VertexId, color: Color) {
        self.edges.insert((u.min(v), u.max(v)), color);
    }

    pub fn set_color(&mut self, u: VertexId, v: VertexId, color: Color) -> Result<()> {
        check_pair(self.n, self.c, u, v, color)?;
        match self.edges.get_mut(&(u.min(v), u.max(v))) {
            Some(c) => {
                *c = color;
                Ok(())
            }
            None => Err(Error::Structure(format!("no edge {{{u},{v}}}"))),
        }
    }

    pub fn remove(&mut self, u: VertexId, v: VertexId) -> Option<Color> {
        self.edges.remove(&(u.min(v), u.max(v)))
    }

    pub fn color(&self, u: VertexId, v: VertexId) -> Option<Color> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `((u, v), color)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = ((VertexId, VertexId), Color)> + '_ {
        self.edges.iter().map(|(&e, &c)| (e, c))
    }

    pub fn relabel(&self, perm: &[VertexId]) -> ColoredGraph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|(&(u, v), &c)| {
                let (a, b) = (perm[u as usize], perm[v as usize]);
                ((a.min(b), a.max(b)), c)
            })
            .collect();
        ColoredGraph {
            n: self.n,
            c: self.c,
            edges,
        }
    }
}

impl ColoredHost for ColoredGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn palette(&self) -> usize {
        self.c
    }
    fn carries(&self, u: VertexId, v: VertexId, color: Color) -> bool {
        self.color(u, v) == Some(color)
    }
}

/// Digraph with one color per arc; both orientations of a pair may be
/// present with independent colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColoredDigraphRepr", into = "ColoredDigraphRepr")]
pub struct ColoredDigraph {
    n: usize,
    c: usize,
    arcs: BTreeMap<(VertexId, VertexId), Color>,
}

#[derive(Serialize, Deserialize)]
struct ColoredDigraphRepr {
    n: usize,
    k: usize,
    c: usize,
    arcs: Vec<ColoredArc>,
}

impl TryFrom<ColoredDigraphRepr> for ColoredDigraph {
    type Error = Error;
    fn try_from(r: ColoredDigraphRepr) -> Result<Self> {
        if r.k != 2 {
            return Err(Error::Structure(format!(
                "colored digraph must have k = 2, got {}",
                r.k
            )));
        }
        let mut g = ColoredDigraph::new(r.n, r.c)?;
        for a in r.arcs {
            if !g.insert(a.arc[0], a.arc[1], a.color)? {
                return Err(Error::Structure(format!("duplicate arc {:?}", a.arc)));
            }
        }
        Ok(g)
    }
}

impl From<ColoredDigraph> for ColoredDigraphRepr {
    fn from(g: ColoredDigraph) -> Self {
        ColoredDigraphRepr {
            n: g.n,
            k: 2,
            c: g.c,
            arcs: g
                .arcs
                .into_iter()
                .map(|((u, v), color)| ColoredArc { arc: [u, v], color })
                .collect(),
        }
    }
}

impl ColoredDigraph {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        check_palette(c)?;
        Ok(ColoredDigraph {
            n,
            c,
            arcs: BTreeMap::new(),
        })
    }

    pub fn insert(&mut self, u: VertexId, v: VertexId, color: Color) -> Result<bool> {
        check_pair(self.n, self.c, u, v, color)?;
        if self.arcs.contains_key(&(u, v)) {
            return Ok(false);
        }
        self.arcs.insert((u, v), color);
        Ok(true)
    }

    pub(crate) fn insert_unchecked(&mut self, u: VertexId, v: VertexId, color: Color) {
        self.arcs.insert((u, v), color);
    }

    pub fn set_color(&mut self, u: VertexId, v: VertexId, color: Color) -> Result<()> {
        check_pair(self.n, self.c, u, v, color)?;
        match self.arcs.get_mut(&(u, v)) {
            Some(c) => {
                *c = color;
                Ok(())
            }
            None => Err(Error::Structure(format!("no arc {u}->{v}"))),
        }
    }

    pub fn remove(&mut self, u: VertexId, v: VertexId) -> Option<Color> {
        self.arcs.remove(&(u, v))
    }

    pub fn color(&self, u: VertexId, v: VertexId) -> Option<Color> {
        self.arcs.get(&(u, v)).copied()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> impl Iterator<Item = ((VertexId, VertexId), Color)> + '_ {
        self.arcs.iter().map(|(&a, &c)| (a, c))
    }

    /// Both orientations of every edge of `g`, each carrying the edge's color.
    pub fn symmetric_of(g: &ColoredGraph) -> ColoredDigraph {
        let mut d = ColoredDigraph {
            n: g.n(),
            c: g.c(),
            arcs: BTreeMap::new(),
        };
        for ((u, v), c) in g.edges() {
            d.arcs.insert((u, v), c);
            d.arcs.insert((v, u), c);
        }
        d
    }

    pub fn relabel(&self, perm: &[VertexId]) -> ColoredDigraph {
        assert_eq!(perm.len(), self.n);
        let arcs = self
            .arcs
            .iter()
            .map(|(&(u, v), &c)| ((perm[u as usize], perm[v as usize]), c))
            .collect();
        ColoredDigraph {
            n: self.n,
            c: self.c,
            arcs,
        }
    }
}

impl ColoredHost for ColoredDigraph {
    fn vertex_count(&self) -> usize {
        self.n
    }
    fn palette(&self) -> usize {
        self.c
    }
    fn carries(&self, u: VertexId, v: VertexId, color: Color) -> bool {
        self.color(u, v) == Some(color)
    }
}
