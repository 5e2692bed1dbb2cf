//! Per-rank dimension tables standing in for a tower's Grothendieck data:
//! one `(dim simple, dim projective)` pair per vertex of each rank.
//!
//! Reading the table off a dual graph pair uses the path-count dictionary
//! (`dim P = f_Gamma`, `dim S = f_Gamma'`); the dimension theorem check
//! compares `sum dimP*dimS` against `r^n n!` with `r` read from rank 1.
//! Tables can also be loaded from JSON without any graph, so the check is
//! usable on hypothetical dimension sequences.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::graph::GradedGraph;

/// One simple/projective-cover dimension pair.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DimPair {
    #[serde(rename = "dimS")]
    pub dim_simple: i64,
    #[serde(rename = "dimP")]
    pub dim_projective: i64,
}

/// Dimension pairs for ranks `0..=max_rank`, rank 0 pinned to `[(1,1)]`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TowerDims {
    ranks: Vec<Vec<DimPair>>,
}

impl TowerDims {
    pub fn new(ranks: Vec<Vec<DimPair>>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::InvalidTowerData("no ranks".into()));
        }
        if ranks[0] != vec![DimPair { dim_simple: 1, dim_projective: 1 }] {
            return Err(Error::InvalidTowerData(
                "rank 0 must be exactly [(dimS 1, dimP 1)]".into(),
            ));
        }
        for (n, rank) in ranks.iter().enumerate() {
            if rank.is_empty() {
                return Err(Error::InvalidTowerData(format!("rank {n} is empty")));
            }
            for pair in rank {
                if pair.dim_simple < 1 || pair.dim_projective < 1 {
                    return Err(Error::InvalidTowerData(format!(
                        "rank {n} has a dimension below 1"
                    )));
                }
            }
        }
        Ok(TowerDims { ranks })
    }

    /// Parses the JSON schema `{ranks: [[{dimS, dimP}, ...], ...]}` and
    /// validates the invariants.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: TowerDims =
            serde_json::from_str(s).map_err(|e| Error::InvalidTowerData(e.to_string()))?;
        TowerDims::new(raw.ranks)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serialization cannot fail")
    }

    pub fn max_rank(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, n: usize) -> Result<&[DimPair]> {
        self.ranks.get(n).map(|r| r.as_slice()).ok_or(Error::MissingRank(n))
    }

    /// `sum dimP * dimS` over the rank: the dimension the rank-n algebra
    /// would have to have.
    pub fn algebra_dimension(&self, n: usize) -> Result<i64> {
        let mut out = 0i64;
        for pair in self.rank(n)? {
            out = arith::add(out, arith::mul(pair.dim_projective, pair.dim_simple)?)?;
        }
        Ok(out)
    }

    /// Checks `algebra_dimension(n) = r^n n!` for all `n <= max_rank`,
    /// with `r = algebra_dimension(1)`. Mismatches are report rows, not
    /// errors.
    pub fn verify_dimension_theorem(&self, max_rank: usize) -> Result<DimensionReport> {
        if max_rank > self.max_rank() {
            return Err(Error::MissingRank(max_rank));
        }
        let r = if max_rank >= 1 { self.algebra_dimension(1)? } else { 1 };
        let mut rows = Vec::new();
        for n in 0..=max_rank {
            let dimension = self.algebra_dimension(n)?;
            let expected = arith::mul(arith::pow(r, n as u32)?, arith::factorial(n as u32)?)?;
            rows.push(DimensionRow { rank: n, dimension, expected });
        }
        Ok(DimensionReport { r, rows })
    }
}

/// Reads the dimension table off a dual graph pair: `dimP` from the path
/// counts of `gamma`, `dimS` from those of `gamma_prime`. A vertex with no
/// path from the root is an error — no module has dimension 0.
pub fn tower_from_graph_pair(
    gamma: &GradedGraph,
    gamma_prime: &GradedGraph,
    max_rank: usize,
) -> Result<TowerDims> {
    for n in 0..=max_rank {
        if gamma.vertices(n)? != gamma_prime.vertices(n)? {
            return Err(Error::VertexSetMismatch { rank: n });
        }
    }
    let f = gamma.path_counts(max_rank)?;
    let fp = gamma_prime.path_counts(max_rank)?;
    let mut ranks = Vec::with_capacity(max_rank + 1);
    for n in 0..=max_rank {
        let mut rank = Vec::with_capacity(f[n].len());
        for (i, (&dim_p, &dim_s)) in f[n].iter().zip(&fp[n]).enumerate() {
            if dim_p == 0 || dim_s == 0 {
                return Err(Error::ZeroPathCount {
                    rank: n,
                    vertex: gamma.vertices(n)?[i].clone(),
                });
            }
            rank.push(DimPair { dim_simple: dim_s, dim_projective: dim_p });
        }
        ranks.push(rank);
    }
    TowerDims::new(ranks)
}

/// Per-rank comparison of the bilinear dimension sum against `r^n n!`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionReport {
    pub r: i64,
    pub rows: Vec<DimensionRow>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionRow {
    pub rank: usize,
    pub dimension: i64,
    pub expected: i64,
}

impl DimensionReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|row| row.dimension == row.expected)
    }
}
