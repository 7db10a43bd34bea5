//! Counter-based randomness.
//!
//! A [`Seed`] is a master value plus a derivation path. Every random
//! decision is a pure function of `(seed key, counter)`, so the outcome for
//! a given slot does not depend on the order in which slots are visited or
//! on how work is split across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fnv1a(label: &str) -> u64 {
    label.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// A derivation label: either a name or an index.
#[derive(Clone, Copy, Debug)]
pub enum Label<'a> {
    Name(&'a str),
    Index(u64),
}

impl<'a> From<&'a str> for Label<'a> {
    fn from(s: &'a str) -> Self {
        Label::Name(s)
    }
}

impl From<u64> for Label<'_> {
    fn from(i: u64) -> Self {
        Label::Index(i)
    }
}

impl From<usize> for Label<'_> {
    fn from(i: usize) -> Self {
        Label::Index(i as u64)
    }
}

impl Label<'_> {
    fn code(self) -> u64 {
        match self {
            // Names and indices live in disjoint halves of the code space.
            Label::Name(s) => fnv1a(s) | (1 << 63),
            Label::Index(i) => i & !(1 << 63),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub master: u64,
    pub path: Vec<u64>,
}

impl Seed {
    pub fn new(master: u64) -> Self {
        Seed {
            master,
            path: Vec::new(),
        }
    }

    /// Child seed one level down the derivation path.
    pub fn derive<'a>(&self, label: impl Into<Label<'a>>) -> Seed {
        let mut path = self.path.clone();
        path.push(label.into().code());
        Seed {
            master: self.master,
            path,
        }
    }

    pub fn key(&self) -> u64 {
        self.path.iter().fold(mix64(self.master ^ GOLDEN), |h, &l| {
            mix64(h ^ mix64(l.wrapping_add(GOLDEN)))
        })
    }

    pub fn stream(&self) -> Stream {
        Stream { key: self.key() }
    }

    /// Sequential generator for the rare places that need one (shuffles).
    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.key())
    }
}

/// Random-access source of independent draws indexed by a counter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stream {
    key: u64,
}

impl Stream {
    #[inline]
    pub fn bits(&self, counter: u64) -> u64 {
        let z = mix64(self.key.wrapping_add(counter.wrapping_mul(GOLDEN)));
        mix64(z ^ self.key.rotate_left(32))
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    #[inline]
    pub fn unit(&self, counter: u64) -> f64 {
        (self.bits(counter) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `true` with probability `p`; exact at `p = 0` and `p = 1`.
    #[inline]
    pub fn bernoulli(&self, counter: u64, p: f64) -> bool {
        self.unit(counter) < p
    }

    /// Uniform in `0..bound`.
    #[inline]
    pub fn below(&self, counter: u64, bound: u32) -> u32 {
        ((self.bits(counter) as u128 * bound as u128) >> 64) as u32
    }
}
