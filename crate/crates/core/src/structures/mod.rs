//! Core combinatorial types, seeded generators for the random models, and
//! certified cycle verifiers.

mod colored;
mod generate;
mod hyper;
mod seed;
mod verify;
mod witness;

pub use colored::{Color, ColoredArc, ColoredDigraph, ColoredEdge, ColoredGraph, ColoredHost};
pub use generate::{gen_colored_digraph, gen_colored_graph, gen_dir_hyper, gen_hyper};
pub(crate) use generate::{ARC, ARC_COLOR, SLOT, SLOT_COLOR};
pub(crate) use hyper::check_params;
pub use hyper::{binomial, factorial, orientations, slots, DirHypergraph, Hypergraph};
pub use seed::{Label, Seed, Stream};
pub use verify::{
    is_dir_loose_cycle, is_loose_cycle, verify_dir_loose_hc, verify_loose_hc, verify_rainbow_hc,
};
pub use witness::{DirLooseCycle, LooseCycle, RainbowCycle};

use serde::Serialize;

use crate::error::{Error, Result};

/// Index of a vertex in `0..n` of its enclosing structure.
pub type VertexId = u32;

/// Any of the four structure kinds, as read from the JSON edge-list format.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum AnyStructure {
    Hyper(Hypergraph),
    DirHyper(DirHypergraph),
    Colored(ColoredGraph),
    ColoredDir(ColoredDigraph),
}

impl AnyStructure {
    /// Dispatches on the keys present: `"c"` marks the colored variants and
    /// `"arcs"` versus `"edges"` the directed ones.
    pub fn from_value(v: serde_json::Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Structure("expected a JSON object".into()))?;
        let colored = obj.contains_key("c");
        let directed = obj.contains_key("arcs");
        if !directed && !obj.contains_key("edges") {
            return Err(Error::Structure("missing \"edges\" or \"arcs\"".into()));
        }
        let parsed = match (colored, directed) {
            (false, false) => serde_json::from_value(v).map(AnyStructure::Hyper),
            (false, true) => serde_json::from_value(v).map(AnyStructure::DirHyper),
            (true, false) => serde_json::from_value(v).map(AnyStructure::Colored),
            (true, true) => serde_json::from_value(v).map(AnyStructure::ColoredDir),
        };
        parsed.map_err(|e| Error::Structure(e.to_string()))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Structure(e.to_string()))?;
        Self::from_value(v)
    }

    pub fn n(&self) -> usize {
        match self {
            AnyStructure::Hyper(h) => h.n(),
            AnyStructure::DirHyper(d) => d.n(),
            AnyStructure::Colored(g) => g.n(),
            AnyStructure::ColoredDir(g) => g.n(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dispatch_on_keys() {
        let h = AnyStructure::from_json(r#"{"n":6,"k":3,"edges":[[0,1,2]]}"#).unwrap();
        assert!(matches!(h, AnyStructure::Hyper(_)));
        let d = AnyStructure::from_json(r#"{"n":6,"k":3,"arcs":[[2,1,0]]}"#).unwrap();
        assert!(matches!(d, AnyStructure::DirHyper(_)));
        let g = AnyStructure::from_json(r#"{"n":3,"k":2,"c":3,"edges":[]}"#).unwrap();
        assert!(matches!(g, AnyStructure::Colored(_)));
        let cd = AnyStructure::from_json(r#"{"n":3,"k":2,"c":3,"arcs":[]}"#).unwrap();
        assert!(matches!(cd, AnyStructure::ColoredDir(_)));
        assert!(AnyStructure::from_json(r#"{"n":3,"k":2}"#).is_err());
        assert!(AnyStructure::from_json("[1,2]").is_err());
    }

    #[test]
    fn serializes_untagged() {
        let h = Hypergraph::from_edges(4, 2, [[0, 1]]).unwrap();
        let s = serde_json::to_string(&AnyStructure::Hyper(h.clone())).unwrap();
        assert_eq!(s, serde_json::to_string(&h).unwrap());
    }
}
