use std::collections::{HashMap, HashSet};

use super::{bits, full_mask, mask_of};
use crate::structures::{Hypergraph, LooseCycle, VertexId};

/// Loose cycles are grown as paths of edges between link vertices: the
/// path starts at link `a`, currently ends at link `b`, and closes with an
/// edge holding `b`, `a` and exactly the still-uncovered vertices.
pub(super) struct LooseSearch {
    k: usize,
    full: u64,
    incident: Vec<Vec<u64>>,
    edges: HashSet<u64>,
}

type State = (u32, u64, u32);

impl LooseSearch {
    pub(super) fn new(h: &Hypergraph) -> Self {
        let n = h.n();
        let mut incident = vec![Vec::new(); n];
        let mut edges = HashSet::with_capacity(h.len());
        for e in h.edges() {
            let m = mask_of(e);
            edges.insert(m);
            for &v in e {
                incident[v as usize].push(m);
            }
        }
        LooseSearch {
            k: h.k(),
            full: full_mask(n),
            incident,
            edges,
        }
    }

    fn closing_edge(&self, a: u32, used: u64, b: u32) -> Option<u64> {
        let rest = self.full & !used;
        if rest.count_ones() as usize != self.k - 2 {
            return None;
        }
        Some(rest | 1 << a | 1 << b)
    }

    /// Every uncovered vertex, and the start link, still has some edge
    /// inside the vertices that remain available to it.
    fn feasible(&self, a: u32, used: u64, b: u32) -> bool {
        let rest = self.full & !used;
        let allowed = rest | 1 << a | 1 << b;
        let coverable = |v: u32| self.incident[v as usize].iter().any(|&e| e & !allowed == 0);
        coverable(a) && bits(rest).all(coverable)
    }

    pub(super) fn find(&self) -> Option<LooseCycle> {
        let mut dead = HashSet::new();
        let mut path = Vec::new();
        for &e0 in &self.incident[0] {
            for a in bits(e0) {
                for b in bits(e0).filter(|&b| b != a) {
                    path.clear();
                    path.push(e0);
                    if self.extend(a, e0, b, &mut path, &mut dead) {
                        return Some(self.witness(&path));
                    }
                }
            }
        }
        None
    }

    fn extend(
        &self,
        a: u32,
        used: u64,
        b: u32,
        path: &mut Vec<u64>,
        dead: &mut HashSet<State>,
    ) -> bool {
        let rest = self.full & !used;
        if rest.count_ones() as usize == self.k - 2 {
            let closing = self.closing_edge(a, used, b).unwrap();
            if self.edges.contains(&closing) {
                path.push(closing);
                return true;
            }
            return false;
        }
        if dead.contains(&(a, used, b)) || !self.feasible(a, used, b) {
            return false;
        }
        for &e in &self.incident[b as usize] {
            if e & used != 1 << b {
                continue;
            }
            for next in bits(e & !(1 << b)) {
                path.push(e);
                if self.extend(a, used | e, next, path, dead) {
                    return true;
                }
                path.pop();
            }
        }
        dead.insert((a, used, b));
        false
    }

    fn witness(&self, path: &[u64]) -> LooseCycle {
        LooseCycle::new(
            path.iter()
                .map(|&e| bits(e).collect::<Vec<VertexId>>())
                .collect(),
        )
    }

    /// Number of distinct loose Hamilton cycles.
    ///
    /// A cycle is reached once per (edge through vertex 0, direction). That
    /// is 4 times when 0 is a link and 2 times when it is interior, so
    /// interior starts get weight 2 and the sum is divided by 4.
    pub(super) fn count(&self) -> u128 {
        let mut memo = HashMap::new();
        let mut total = 0u128;
        for &e0 in &self.incident[0] {
            for a in bits(e0) {
                for b in bits(e0).filter(|&b| b != a) {
                    let weight = if a == 0 || b == 0 { 1 } else { 2 };
                    total += weight * self.completions(a, e0, b, &mut memo);
                }
            }
        }
        debug_assert_eq!(total % 4, 0);
        total / 4
    }

    fn completions(&self, a: u32, used: u64, b: u32, memo: &mut HashMap<State, u128>) -> u128 {
        if let Some(closing) = self.closing_edge(a, used, b) {
            return self.edges.contains(&closing) as u128;
        }
        if let Some(&c) = memo.get(&(a, used, b)) {
            return c;
        }
        let mut total = 0;
        for &e in &self.incident[b as usize] {
            if e & used != 1 << b {
                continue;
            }
            for next in bits(e & !(1 << b)) {
                total += self.completions(a, used | e, next, memo);
            }
        }
        memo.insert((a, used, b), total);
        total
    }
}
