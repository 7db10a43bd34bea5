use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::VertexId;
use crate::error::{Error, Result};

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

pub fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// All k-subsets of `0..n` in lexicographic order. This is the one slot
/// enumeration shared by generators, chains and the exact engine.
pub fn slots(n: usize, k: usize) -> impl Iterator<Item = Vec<VertexId>> {
    (0..n as VertexId).combinations(k)
}

/// Position permutations of `0..k` in lexicographic order; applying
/// permutation `r` to a sorted slot gives its `r`-th orientation.
pub fn orientations(k: usize) -> Vec<Vec<usize>> {
    (0..k).permutations(k).collect()
}

pub(crate) fn check_params(n: usize, k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::Parameter(format!(
            "uniformity k = {k} must be at least 2"
        )));
    }
    if k > n {
        return Err(Error::Parameter(format!(
            "uniformity k = {k} exceeds n = {n}"
        )));
    }
    if n > u32::MAX as usize {
        return Err(Error::Parameter(format!("n = {n} too large")));
    }
    Ok(())
}

fn check_tuple(n: usize, k: usize, t: &[VertexId]) -> Result<()> {
    if t.len() != k {
        return Err(Error::Structure(format!(
            "{t:?} has {} entries, expected {k}",
            t.len()
        )));
    }
    if let Some(v) = t.iter().find(|&&v| v as usize >= n) {
        return Err(Error::Structure(format!(
            "vertex {v} out of range for n = {n}"
        )));
    }
    if !t.iter().all_unique() {
        return Err(Error::Structure(format!("{t:?} repeats a vertex")));
    }
    Ok(())
}

/// A k-uniform hypergraph; edges are stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphRepr", into = "HypergraphRepr")]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: BTreeSet<Vec<VertexId>>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    n: usize,
    k: usize,
    edges: Vec<Vec<VertexId>>,
}

impl TryFrom<HypergraphRepr> for Hypergraph {
    type Error = Error;
    fn try_from(r: HypergraphRepr) -> Result<Self> {
        Hypergraph::from_edges(r.n, r.k, r.edges)
    }
}

impl From<Hypergraph> for HypergraphRepr {
    fn from(h: Hypergraph) -> Self {
        HypergraphRepr {
            n: h.n,
            k: h.k,
            edges: h.edges.into_iter().collect(),
        }
    }
}

impl Hypergraph {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_params(n, k)?;
        Ok(Hypergraph {
            n,
            k,
            edges: BTreeSet::new(),
        })
    }

    pub fn complete(n: usize, k: usize) -> Result<Self> {
        check_params(n, k)?;
        Ok(Hypergraph {
            n,
            k,
            edges: slots(n, k).collect(),
        })
    }

    /// Builds from an edge list; duplicate edges (in any vertex order) are
    /// rejected.
    pub fn from_edges<I, E>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[VertexId]>,
    {
        let mut h = Hypergraph::new(n, k)?;
        for e in edges {
            if !h.insert(e.as_ref())? {
                return Err(Error::Structure(format!("duplicate edge {:?}", e.as_ref())));
            }
        }
        Ok(h)
    }

    /// Returns whether the edge was new.
    pub fn insert(&mut self, edge: &[VertexId]) -> Result<bool> {
        check_tuple(self.n, self.k, edge)?;
        let mut e = edge.to_vec();
        e.sort_unstable();
        Ok(self.edges.insert(e))
    }

    pub(crate) fn insert_sorted_unchecked(&mut self, edge: Vec<VertexId>) {
        debug_assert!(edge.windows(2).all(|w| w[0] < w[1]));
        self.edges.insert(edge);
    }

    pub fn remove(&mut self, edge: &[VertexId]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.remove(&e)
    }

    /// Order-insensitive membership.
    pub fn contains(&self, edge: &[VertexId]) -> bool {
        if edge.windows(2).all(|w| w[0] < w[1]) {
            return self.edges.contains(edge);
        }
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.contains(&e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = &[VertexId]> + '_ {
        self.edges.iter().map(Vec::as_slice)
    }

    pub fn union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if (self.n, self.k) != (other.n, other.k) {
            return Err(Error::Parameter(
                "union of hypergraphs with different n or k".into(),
            ));
        }
        let mut out = self.clone();
        out.edges.extend(other.edges.iter().cloned());
        Ok(out)
    }

    /// Image under the vertex map `v -> perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Hypergraph {
        assert_eq!(perm.len(), self.n);
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut m: Vec<_> = e.iter().map(|&v| perm[v as usize]).collect();
                m.sort_unstable();
                m
            })
            .collect();
        Hypergraph {
            n: self.n,
            k: self.k,
            edges,
        }
    }
}

/// A directed k-uniform hypergraph: arcs are ordered k-tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DirHypergraphRepr", into = "DirHypergraphRepr")]
pub struct DirHypergraph {
    n: usize,
    k: usize,
    arcs: BTreeSet<Vec<VertexId>>,
}

#[derive(Serialize, Deserialize)]
struct DirHypergraphRepr {
    n: usize,
    k: usize,
    arcs: Vec<Vec<VertexId>>,
}

impl TryFrom<DirHypergraphRepr> for DirHypergraph {
    type Error = Error;
    fn try_from(r: DirHypergraphRepr) -> Result<Self> {
        DirHypergraph::from_arcs(r.n, r.k, r.arcs)
    }
}

impl From<DirHypergraph> for DirHypergraphRepr {
    fn from(d: DirHypergraph) -> Self {
        DirHypergraphRepr {
            n: d.n,
            k: d.k,
            arcs: d.arcs.into_iter().collect(),
        }
    }
}

impl DirHypergraph {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        check_params(n, k)?;
        Ok(DirHypergraph {
            n,
            k,
            arcs: BTreeSet::new(),
        })
    }

    pub fn complete(n: usize, k: usize) -> Result<Self> {
        check_params(n, k)?;
        let arcs = (0..n as VertexId).permutations(k).collect();
        Ok(DirHypergraph { n, k, arcs })
    }

    pub fn from_arcs<I, A>(n: usize, k: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = A>,
        A: AsRef<[VertexId]>,
    {
        let mut d = DirHypergraph::new(n, k)?;
        for a in arcs {
            if !d.insert(a.as_ref())? {
                return Err(Error::Structure(format!("duplicate arc {:?}", a.as_ref())));
            }
        }
        Ok(d)
    }

    pub fn insert(&mut self, arc: &[VertexId]) -> Result<bool> {
        check_tuple(self.n, self.k, arc)?;
        Ok(self.arcs.insert(arc.to_vec()))
    }

    pub(crate) fn insert_unchecked(&mut self, arc: Vec<VertexId>) {
        self.arcs.insert(arc);
    }

    pub fn remove(&mut self, arc: &[VertexId]) -> bool {
        self.arcs.remove(arc)
    }

    pub fn contains(&self, arc: &[VertexId]) -> bool {
        self.arcs.contains(arc)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> impl Iterator<Item = &[VertexId]> + '_ {
        self.arcs.iter().map(Vec::as_slice)
    }

    /// Forgets orientations: a k-set is an edge iff at least one of its
    /// orderings is an arc.
    pub fn underlying(&self) -> Hypergraph {
        let mut h = Hypergraph {
            n: self.n,
            k: self.k,
            edges: BTreeSet::new(),
        };
        for a in &self.arcs {
            let mut e = a.clone();
            e.sort_unstable();
            h.edges.insert(e);
        }
        h
    }

    /// Every ordering of every edge of `h`.
    pub fn all_orientations_of(h: &Hypergraph) -> DirHypergraph {
        let arcs = h
            .edges()
            .flat_map(|e| e.iter().copied().permutations(e.len()))
            .collect();
        DirHypergraph {
            n: h.n(),
            k: h.k(),
            arcs,
        }
    }

    pub fn relabel(&self, perm: &[VertexId]) -> DirHypergraph {
        assert_eq!(perm.len(), self.n);
        let arcs = self
            .arcs
            .iter()
            .map(|a| a.iter().map(|&v| perm[v as usize]).collect())
            .collect();
        DirHypergraph {
            n: self.n,
            k: self.k,
            arcs,
        }
    }
}
