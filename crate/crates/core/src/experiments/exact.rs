use serde::{Deserialize, Serialize};

use crate::coupling::{exact_event_counts, ChainEvent};
use crate::error::Result;

/// Rows are edge probabilities; columns are chain indices `0..=6`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactTable {
    pub n: usize,
    pub ps: Vec<f64>,
    pub rows: Vec<Vec<f64>>,
    pub nondecreasing: bool,
}

impl ExactTable {
    pub fn to_csv(&self) -> String {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut out = String::from("p");
        for i in 0..width {
            out.push_str(&format!(",i{i}"));
        }
        out.push('\n');
        for (p, row) in self.ps.iter().zip(&self.rows) {
            out.push_str(&p.to_string());
            for v in row {
                out.push_str(&format!(",{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Absolute slack for comparing neighbouring exact probabilities that went
/// through floating-point polynomial evaluation.
pub const EXACT_TOLERANCE: f64 = 1e-12;

/// Exact directed Hamilton cycle probability of every `Γ_i` on four
/// vertices at the given probabilities.
pub fn exact_dominance_table(ps: &[f64]) -> Result<ExactTable> {
    let n = 4;
    let counts = (0..=6)
        .map(|i| exact_event_counts(n, 2, i, ChainEvent::DirHc))
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<Vec<f64>> = ps
        .iter()
        .map(|&p| counts.iter().map(|c| c.probability(p)).collect())
        .collect();
    let nondecreasing = rows
        .iter()
        .all(|r| r.windows(2).all(|w| w[1] >= w[0] - EXACT_TOLERANCE));
    Ok(ExactTable {
        n,
        ps: ps.to_vec(),
        rows,
        nondecreasing,
    })
}

/// The 3 × 7 table at `p ∈ {0.2, 0.5, 0.8}`.
pub fn exact_dominance_suite() -> Result<ExactTable> {
    exact_dominance_table(&[0.2, 0.5, 0.8])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_shape_and_anchor() {
        let t = exact_dominance_suite().unwrap();
        assert_eq!(t.rows.len(), 3);
        assert!(t.rows.iter().all(|r| r.len() == 7));
        assert!((t.rows[1][0] - 10.0 / 64.0).abs() < EXACT_TOLERANCE);
        assert!(t.nondecreasing);
        assert!(t.to_csv().starts_with("p,i0,i1,i2,i3,i4,i5,i6\n0.2,"));
    }

    #[test]
    fn constant_rows_at_the_ends() {
        let t = exact_dominance_table(&[0.0, 1.0]).unwrap();
        assert!(t.rows[0].iter().all(|&v| v == 0.0));
        assert!(t.rows[1].iter().all(|&v| v == 1.0));
    }
}
