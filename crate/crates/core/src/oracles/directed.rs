use std::collections::{HashMap, HashSet};

use super::{bits, full_mask, mask_of};
use crate::structures::{DirHypergraph, DirLooseCycle, VertexId};

struct OutArc {
    /// Every vertex of the arc except its first.
    tail: u64,
    last: u32,
    index: usize,
}

pub(super) struct DirSearch<'a> {
    k: usize,
    full: u64,
    arcs: Vec<&'a [VertexId]>,
    out: Vec<Vec<OutArc>>,
    /// `(first, last, interior)` -> arc index.
    closing: HashMap<(u32, u32, u64), usize>,
    incident: Vec<Vec<u64>>,
}

impl<'a> DirSearch<'a> {
    pub(super) fn new(d: &'a DirHypergraph) -> Self {
        let n = d.n();
        let k = d.k();
        let arcs: Vec<&[VertexId]> = d.arcs().collect();
        let mut out: Vec<Vec<OutArc>> = (0..n).map(|_| Vec::new()).collect();
        let mut closing = HashMap::with_capacity(arcs.len());
        let mut incident = vec![Vec::new(); n];
        for (index, a) in arcs.iter().enumerate() {
            let first = a[0];
            let last = a[k - 1];
            let all = mask_of(a);
            out[first as usize].push(OutArc {
                tail: all & !(1 << first),
                last,
                index,
            });
            closing.insert((first, last, mask_of(&a[1..k - 1])), index);
            for &v in a.iter() {
                incident[v as usize].push(all);
            }
        }
        DirSearch {
            k,
            full: full_mask(n),
            arcs,
            out,
            closing,
            incident,
        }
    }

    fn feasible(&self, a: u32, used: u64, b: u32) -> bool {
        let rest = self.full & !used;
        let allowed = rest | 1 << a | 1 << b;
        bits(rest).all(|v| self.incident[v as usize].iter().any(|&e| e & !allowed == 0))
    }

    pub(super) fn find(&self, required_link: Option<VertexId>) -> Option<DirLooseCycle> {
        let starts: Vec<usize> = match required_link {
            Some(r) => self.out[r as usize].iter().map(|o| o.index).collect(),
            None => (0..self.arcs.len())
                .filter(|&i| self.arcs[i].contains(&0))
                .collect(),
        };
        let mut dead = HashSet::new();
        let mut path = Vec::new();
        for s in starts {
            let arc = self.arcs[s];
            path.clear();
            path.push(s);
            if self.extend(arc[0], mask_of(arc), arc[self.k - 1], &mut path, &mut dead) {
                return Some(DirLooseCycle::new(
                    path.iter().map(|&i| self.arcs[i].to_vec()).collect(),
                ));
            }
        }
        None
    }

    fn extend(
        &self,
        a: u32,
        used: u64,
        b: u32,
        path: &mut Vec<usize>,
        dead: &mut HashSet<(u32, u64, u32)>,
    ) -> bool {
        let rest = self.full & !used;
        if rest.count_ones() as usize == self.k - 2 {
            return match self.closing.get(&(b, a, rest)) {
                Some(&i) => {
                    path.push(i);
                    true
                }
                None => false,
            };
        }
        if dead.contains(&(a, used, b)) || !self.feasible(a, used, b) {
            return false;
        }
        for o in &self.out[b as usize] {
            if o.tail & used != 0 {
                continue;
            }
            path.push(o.index);
            if self.extend(a, used | o.tail, o.last, path, dead) {
                return true;
            }
            path.pop();
        }
        dead.insert((a, used, b));
        false
    }
}
