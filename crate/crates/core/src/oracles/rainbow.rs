use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::structures::{Color, RainbowCycle, VertexId};

const COLOR_WORDS: usize = 4;

/// Bitset over the densely re-indexed colors actually present.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
struct ColorSet([u64; COLOR_WORDS]);

impl ColorSet {
    fn contains(&self, c: u16) -> bool {
        self.0[c as usize / 64] >> (c % 64) & 1 == 1
    }

    fn with(mut self, c: u16) -> Self {
        self.0[c as usize / 64] |= 1 << (c % 64);
        self
    }

    fn len(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

/// Rainbow Hamilton cycle search over a list of directed colored steps
/// (an undirected edge contributes both directions).
pub(super) struct RainbowSearch {
    n: usize,
    adj: Vec<Vec<(u32, u16)>>,
    palette: Vec<Color>,
}

impl RainbowSearch {
    pub(super) fn new(
        n: usize,
        steps: impl IntoIterator<Item = (VertexId, VertexId, Color)>,
    ) -> Result<Self> {
        let steps: Vec<_> = steps.into_iter().collect();
        let dense: BTreeMap<Color, u16> = steps
            .iter()
            .map(|&(_, _, c)| c)
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i as u16))
            .collect();
        if dense.len() > 64 * COLOR_WORDS {
            return Err(Error::Capacity {
                what: "distinct colors in rainbow search",
                got: dense.len(),
                limit: 64 * COLOR_WORDS,
            });
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v, c) in steps {
            adj[u as usize].push((v, dense[&c]));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(RainbowSearch {
            n,
            adj,
            palette: dense.into_keys().collect(),
        })
    }

    pub(super) fn find(&self) -> Result<Option<RainbowCycle>> {
        if self.palette.len() < self.n {
            return Ok(None);
        }
        let mut dead = HashSet::new();
        let mut path = vec![0u32];
        let mut colors = Vec::with_capacity(self.n);
        if self.extend(1, ColorSet::default(), &mut path, &mut colors, &mut dead) {
            let color_seq = colors.iter().map(|&c| self.palette[c as usize]).collect();
            return Ok(Some(RainbowCycle::new(path, color_seq)));
        }
        Ok(None)
    }

    fn extend(
        &self,
        visited: u64,
        used: ColorSet,
        path: &mut Vec<u32>,
        colors: &mut Vec<u16>,
        dead: &mut HashSet<(u64, u32, ColorSet)>,
    ) -> bool {
        let cur = *path.last().unwrap();
        if path.len() == self.n {
            for &(v, c) in &self.adj[cur as usize] {
                if v == 0 && !used.contains(c) {
                    colors.push(c);
                    return true;
                }
            }
            return false;
        }
        let remaining_steps = (self.n - path.len() + 1) as u32;
        if self.palette.len() as u32 - used.len() < remaining_steps {
            return false;
        }
        let key = (visited, cur, used);
        if dead.contains(&key) {
            return false;
        }
        for &(v, c) in &self.adj[cur as usize] {
            if visited >> v & 1 == 1 || used.contains(c) {
                continue;
            }
            path.push(v);
            colors.push(c);
            if self.extend(visited | 1 << v, used.with(c), path, colors, dead) {
                return true;
            }
            path.pop();
            colors.pop();
        }
        dead.insert(key);
        false
    }
}
