//! Hamilton-cycle witnesses. These are plain data; a witness means nothing
//! until one of the verifiers in [`super::verify`] accepts it.

use serde::{Deserialize, Serialize};

use super::{Color, VertexId};

/// Cyclic sequence of k-sets, consecutive ones sharing exactly one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LooseCycle {
    pub edge_seq: Vec<Vec<VertexId>>,
}

/// Cyclic sequence of ordered k-tuples; the last vertex of each arc is the
/// first vertex of the next.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DirLooseCycle {
    pub arc_seq: Vec<Vec<VertexId>>,
}

/// Cyclic vertex order plus the color of each traversed edge:
/// `color_seq[i]` colors the step `vertex_seq[i] -> vertex_seq[i + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RainbowCycle {
    pub vertex_seq: Vec<VertexId>,
    pub color_seq: Vec<Color>,
}

fn shared_vertex(a: &[VertexId], b: &[VertexId]) -> Option<VertexId> {
    let mut it = a.iter().filter(|v| b.contains(v));
    match (it.next(), it.next()) {
        (Some(&v), None) => Some(v),
        _ => None,
    }
}

impl LooseCycle {
    pub fn new(edge_seq: Vec<Vec<VertexId>>) -> Self {
        LooseCycle { edge_seq }
    }

    pub fn len(&self) -> usize {
        self.edge_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_seq.is_empty()
    }

    /// `links()[i]` is the vertex shared by edges `i - 1` and `i`. `None`
    /// when some consecutive pair does not share exactly one vertex.
    pub fn links(&self) -> Option<Vec<VertexId>> {
        let m = self.edge_seq.len();
        if m == 0 {
            return Some(Vec::new());
        }
        (0..m)
            .map(|i| shared_vertex(&self.edge_seq[(i + m - 1) % m], &self.edge_seq[i]))
            .collect()
    }

    /// Rotated so the smallest link vertex leads, oriented toward its
    /// smaller neighbouring link, with every edge sorted. Two witnesses
    /// describe the same cycle iff their canonical forms are equal.
    /// Malformed sequences are returned with sorted edges only.
    pub fn canonical(&self) -> LooseCycle {
        let mut edges: Vec<Vec<VertexId>> = self
            .edge_seq
            .iter()
            .map(|e| {
                let mut e = e.clone();
                e.sort_unstable();
                e
            })
            .collect();
        let Some(links) = self.links() else {
            return LooseCycle { edge_seq: edges };
        };
        let m = edges.len();
        if m < 2 {
            return LooseCycle { edge_seq: edges };
        }
        // Edge i runs from links[i] to links[i + 1].
        let s = (0..m).min_by_key(|&i| links[i]).unwrap();
        let forward = links[(s + 1) % m];
        let backward = links[(s + m - 1) % m];
        if forward <= backward {
            edges.rotate_left(s);
        } else {
            // Walking backwards from links[s] starts with edge s - 1.
            edges.rotate_left(s);
            edges.reverse();
        }
        LooseCycle { edge_seq: edges }
    }

    pub fn relabel(&self, perm: &[VertexId]) -> LooseCycle {
        LooseCycle {
            edge_seq: self
                .edge_seq
                .iter()
                .map(|e| e.iter().map(|&v| perm[v as usize]).collect())
                .collect(),
        }
    }
}

impl DirLooseCycle {
    pub fn new(arc_seq: Vec<Vec<VertexId>>) -> Self {
        DirLooseCycle { arc_seq }
    }

    pub fn len(&self) -> usize {
        self.arc_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arc_seq.is_empty()
    }

    /// First vertices of the arcs, in cycle order.
    pub fn links(&self) -> Vec<VertexId> {
        self.arc_seq
            .iter()
            .filter_map(|a| a.first().copied())
            .collect()
    }

    pub fn is_link(&self, v: VertexId) -> bool {
        self.arc_seq.iter().any(|a| a.first() == Some(&v))
    }

    /// Rotated so the arc with the smallest first vertex leads.
    pub fn canonical(&self) -> DirLooseCycle {
        let mut arcs = self.arc_seq.clone();
        if let Some(s) = (0..arcs.len()).min_by_key(|&i| arcs[i].first().copied()) {
            arcs.rotate_left(s);
        }
        DirLooseCycle { arc_seq: arcs }
    }

    pub fn relabel(&self, perm: &[VertexId]) -> DirLooseCycle {
        DirLooseCycle {
            arc_seq: self
                .arc_seq
                .iter()
                .map(|a| a.iter().map(|&v| perm[v as usize]).collect())
                .collect(),
        }
    }

    /// The same cycle with orientations forgotten.
    pub fn undirected(&self) -> LooseCycle {
        LooseCycle {
            edge_seq: self
                .arc_seq
                .iter()
                .map(|a| {
                    let mut e = a.clone();
                    e.sort_unstable();
                    e
                })
                .collect(),
        }
    }
}

impl RainbowCycle {
    pub fn new(vertex_seq: Vec<VertexId>, color_seq: Vec<Color>) -> Self {
        RainbowCycle {
            vertex_seq,
            color_seq,
        }
    }

    pub fn len(&self) -> usize {
        self.vertex_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_seq.is_empty()
    }

    /// `(u, v, color)` for each traversed step.
    pub fn steps(&self) -> impl Iterator<Item = (VertexId, VertexId, Color)> + '_ {
        let n = self.vertex_seq.len();
        (0..n.min(self.color_seq.len())).map(move |i| {
            (
                self.vertex_seq[i],
                self.vertex_seq[(i + 1) % n],
                self.color_seq[i],
            )
        })
    }

    /// Smallest vertex first. With `undirected`, also oriented toward the
    /// smaller neighbour.
    pub fn canonical(&self, undirected: bool) -> RainbowCycle {
        let n = self.vertex_seq.len();
        if n == 0 || self.color_seq.len() != n {
            return self.clone();
        }
        let s = (0..n).min_by_key(|&i| self.vertex_seq[i]).unwrap();
        let mut vs = self.vertex_seq.clone();
        let mut cs = self.color_seq.clone();
        vs.rotate_left(s);
        cs.rotate_left(s);
        if undirected && n > 2 && vs[n - 1] < vs[1] {
            // v0 v_{n-1} ... v1; the step v0 -> v_{n-1} had color cs[n-1].
            let rv: Vec<_> = std::iter::once(vs[0])
                .chain(vs[1..].iter().rev().copied())
                .collect();
            let rc: Vec<_> = cs.iter().rev().copied().collect();
            vs = rv;
            cs = rc;
        }
        RainbowCycle {
            vertex_seq: vs,
            color_seq: cs,
        }
    }

    pub fn relabel(&self, perm: &[VertexId]) -> RainbowCycle {
        RainbowCycle {
            vertex_seq: self.vertex_seq.iter().map(|&v| perm[v as usize]).collect(),
            color_seq: self.color_seq.clone(),
        }
    }
}
