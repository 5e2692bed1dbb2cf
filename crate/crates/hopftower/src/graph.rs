//! Graded graphs materialized rank by rank: up/down operators, the
//! commutation check `D'U - UD' = r*Id`, root-to-vertex path counting,
//! Fomin's identity `r^n n! = sum_v f^v f'^v`, and deterministic DOT/JSON
//! emission.
//!
//! A graph holds ranks `0..=max_rank` and one multiplicity matrix between
//! each pair of consecutive ranks; `matrices[n][i][j]` is the number of
//! edges from vertex `i` of rank `n` up to vertex `j` of rank `n+1`.
//! Checking the commutator at rank `n` needs the matrix out of rank `n`,
//! so a check "up to N" covers ranks `0..=N-1` and requires graphs
//! materialized to rank `N`.

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedGraph {
    ranks: Vec<Vec<String>>,
    matrices: Vec<Vec<Vec<i64>>>,
}

/// An integer vector supported on one rank of a graph, indexed like that
/// rank's vertex list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankVector {
    pub rank: usize,
    pub coeffs: Vec<i64>,
}

impl GradedGraph {
    /// Validates shapes: exactly one root, one matrix per consecutive rank
    /// pair with matching dimensions, all multiplicities nonnegative.
    pub fn new(ranks: Vec<Vec<String>>, matrices: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        if ranks.is_empty() || ranks[0].len() != 1 {
            return Err(Error::GraphShape("expected exactly one vertex of height 0".into()));
        }
        if matrices.len() + 1 != ranks.len() {
            return Err(Error::GraphShape(format!(
                "{} ranks need {} matrices, found {}",
                ranks.len(),
                ranks.len() - 1,
                matrices.len()
            )));
        }
        for (n, m) in matrices.iter().enumerate() {
            if m.len() != ranks[n].len() {
                return Err(Error::GraphShape(format!(
                    "matrix {n} has {} rows, rank {n} has {} vertices",
                    m.len(),
                    ranks[n].len()
                )));
            }
            for row in m {
                if row.len() != ranks[n + 1].len() {
                    return Err(Error::GraphShape(format!(
                        "matrix {n} has a row of width {}, rank {} has {} vertices",
                        row.len(),
                        n + 1,
                        ranks[n + 1].len()
                    )));
                }
                if row.iter().any(|&x| x < 0) {
                    return Err(Error::GraphShape(format!(
                        "matrix {n} contains a negative multiplicity"
                    )));
                }
            }
        }
        Ok(GradedGraph { ranks, matrices })
    }

    /// Highest materialized rank.
    pub fn max_rank(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn vertices(&self, rank: usize) -> Result<&[String]> {
        self.ranks
            .get(rank)
            .map(|v| v.as_slice())
            .ok_or(Error::RankOutOfRange { rank, max: self.max_rank() })
    }

    /// Edge multiplicity between vertex `i` of `rank` and vertex `j` of
    /// `rank + 1`.
    pub fn multiplicity(&self, rank: usize, i: usize, j: usize) -> Result<i64> {
        let m = self
            .matrices
            .get(rank)
            .ok_or(Error::RankOutOfRange { rank, max: self.max_rank() })?;
        m.get(i)
            .and_then(|row| row.get(j))
            .copied()
            .ok_or_else(|| Error::GraphShape(format!("no vertex pair ({i},{j}) at rank {rank}")))
    }

    fn check_vector(&self, x: &RankVector) -> Result<()> {
        let verts = self.vertices(x.rank)?;
        if x.coeffs.len() != verts.len() {
            return Err(Error::GraphShape(format!(
                "vector of length {} at rank {} with {} vertices",
                x.coeffs.len(),
                x.rank,
                verts.len()
            )));
        }
        Ok(())
    }

    /// Up operator: `(Ux)_j = sum_i m(v_i, u_j) x_i`, landing at rank+1.
    pub fn up_apply(&self, x: &RankVector) -> Result<RankVector> {
        self.check_vector(x)?;
        let m = self
            .matrices
            .get(x.rank)
            .ok_or(Error::RankOutOfRange { rank: x.rank + 1, max: self.max_rank() })?;
        let mut out = vec![0i64; self.ranks[x.rank + 1].len()];
        for (i, &xi) in x.coeffs.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, out_j) in out.iter_mut().enumerate() {
                *out_j = arith::add(*out_j, arith::mul(m[i][j], xi)?)?;
            }
        }
        Ok(RankVector { rank: x.rank + 1, coeffs: out })
    }

    /// Down operator: `(Dx)_i = sum_j m(u_i, v_j) x_j`, landing at rank-1.
    /// Applying at rank 0 is an error.
    pub fn down_apply(&self, x: &RankVector) -> Result<RankVector> {
        self.check_vector(x)?;
        if x.rank == 0 {
            return Err(Error::RankOutOfRange { rank: 0, max: self.max_rank() });
        }
        let m = &self.matrices[x.rank - 1];
        let mut out = vec![0i64; self.ranks[x.rank - 1].len()];
        for (j, &xj) in x.coeffs.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for (i, out_i) in out.iter_mut().enumerate() {
                *out_i = arith::add(*out_i, arith::mul(m[i][j], xj)?)?;
            }
        }
        Ok(RankVector { rank: x.rank - 1, coeffs: out })
    }

    /// Multiplicity-weighted path counts from the root: `f^root = 1`,
    /// `f^u = sum_v m(v,u) f^v`, for every rank up to `max_rank`.
    pub fn path_counts(&self, max_rank: usize) -> Result<Vec<Vec<i64>>> {
        if max_rank > self.max_rank() {
            return Err(Error::RankOutOfRange { rank: max_rank, max: self.max_rank() });
        }
        let mut out = vec![vec![1i64]];
        for n in 0..max_rank {
            let prev = &out[n];
            let m = &self.matrices[n];
            let mut next = vec![0i64; self.ranks[n + 1].len()];
            for (i, &fi) in prev.iter().enumerate() {
                for (j, next_j) in next.iter_mut().enumerate() {
                    *next_j = arith::add(*next_j, arith::mul(m[i][j], fi)?)?;
                }
            }
            out.push(next);
        }
        Ok(out)
    }

    /// Graphviz digraph with one `rank=same` block per height and every
    /// edge labeled by its multiplicity. Byte-deterministic.
    pub fn to_dot(&self, name: &str, max_rank: usize) -> Result<String> {
        if max_rank > self.max_rank() {
            return Err(Error::RankOutOfRange { rank: max_rank, max: self.max_rank() });
        }
        let mut out = String::new();
        out.push_str(&format!("digraph {name} {{\n"));
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=box];\n");
        for n in 0..=max_rank {
            out.push_str("  { rank=same;");
            for (i, label) in self.ranks[n].iter().enumerate() {
                out.push_str(&format!(" \"v{n}_{i}\" [label=\"{label}\"];"));
            }
            out.push_str(" }\n");
        }
        for n in 0..max_rank.min(self.matrices.len()) {
            for (i, row) in self.matrices[n].iter().enumerate() {
                for (j, &mult) in row.iter().enumerate() {
                    if mult != 0 {
                        out.push_str(&format!(
                            "  \"v{n}_{i}\" -> \"v{}_{j}\" [label={mult}];\n",
                            n + 1
                        ));
                    }
                }
            }
        }
        out.push_str("}\n");
        Ok(out)
    }

    /// JSON rendering `{ranks: [{vertices, matrix}, ...]}`; the last rank
    /// carries an empty matrix.
    pub fn to_json_value(&self, max_rank: usize) -> Result<serde_json::Value> {
        if max_rank > self.max_rank() {
            return Err(Error::RankOutOfRange { rank: max_rank, max: self.max_rank() });
        }
        #[derive(Serialize)]
        struct RankJson<'a> {
            vertices: &'a [String],
            matrix: &'a [Vec<i64>],
        }
        #[derive(Serialize)]
        struct GraphJson<'a> {
            ranks: Vec<RankJson<'a>>,
        }
        let empty: Vec<Vec<i64>> = Vec::new();
        let ranks = (0..=max_rank)
            .map(|n| RankJson {
                vertices: &self.ranks[n],
                matrix: if n < max_rank { &self.matrices[n] } else { &empty },
            })
            .collect();
        serde_json::to_value(GraphJson { ranks }).map_err(|e| Error::GraphShape(e.to_string()))
    }

    /// Pretty-printed [`Self::to_json_value`]. Byte-deterministic.
    pub fn to_json_string(&self, max_rank: usize) -> Result<String> {
        serde_json::to_string_pretty(&self.to_json_value(max_rank)?)
            .map_err(|e| Error::GraphShape(e.to_string()))
    }
}

/// Result of the commutation check: either dual with one differential
/// coefficient, or the list of ranks where the commutator was not `r*Id`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DualityOutcome {
    Dual { r: i64 },
    NotDual { failures: Vec<CommutatorFailure> },
}

impl DualityOutcome {
    pub fn coefficient(&self) -> Option<i64> {
        match self {
            DualityOutcome::Dual { r } => Some(*r),
            DualityOutcome::NotDual { .. } => None,
        }
    }
}

/// One rank where `D'U - UD'` differed from `r*Id`; `expected_r` is the
/// coefficient established at rank 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommutatorFailure {
    pub rank: usize,
    pub expected_r: i64,
    pub commutator: Vec<Vec<i64>>,
}

/// Checks `D_{gamma'} U_gamma - U_gamma D_{gamma'} = r * Id` at every rank
/// `n <= max_rank - 1` (the commutator at rank n looks one rank up). The
/// two graphs must share vertex labels rank by rank; the coefficient `r`
/// is fixed by the root and must be constant across ranks. With
/// `max_rank` 0 there is nothing to check and the result is vacuously
/// `Dual { r: 0 }`.
pub fn check_duality(
    gamma: &GradedGraph,
    gamma_prime: &GradedGraph,
    max_rank: usize,
) -> Result<DualityOutcome> {
    if max_rank > gamma.max_rank() || max_rank > gamma_prime.max_rank() {
        return Err(Error::RankOutOfRange {
            rank: max_rank,
            max: gamma.max_rank().min(gamma_prime.max_rank()),
        });
    }
    for n in 0..=max_rank {
        if gamma.ranks[n] != gamma_prime.ranks[n] {
            return Err(Error::VertexSetMismatch { rank: n });
        }
    }
    let mut expected_r: Option<i64> = None;
    let mut failures = Vec::new();
    for n in 0..max_rank {
        let size = gamma.ranks[n].len();
        // A = M'_n * M_n^T  (down in gamma' after up in gamma)
        let m = &gamma.matrices[n];
        let mp = &gamma_prime.matrices[n];
        let mut commutator = vec![vec![0i64; size]; size];
        for i in 0..size {
            for j in 0..size {
                let mut acc = 0i64;
                for k in 0..gamma.ranks[n + 1].len() {
                    acc = arith::add(acc, arith::mul(mp[i][k], m[j][k])?)?;
                }
                commutator[i][j] = acc;
            }
        }
        // B = M_{n-1}^T * M'_{n-1} (up after down); zero at the root
        if n > 0 {
            let m_prev = &gamma.matrices[n - 1];
            let mp_prev = &gamma_prime.matrices[n - 1];
            for i in 0..size {
                for j in 0..size {
                    let mut acc = 0i64;
                    for k in 0..gamma.ranks[n - 1].len() {
                        acc = arith::add(acc, arith::mul(m_prev[k][i], mp_prev[k][j])?)?;
                    }
                    commutator[i][j] = arith::add(commutator[i][j], -acc)?;
                }
            }
        }
        let r = match expected_r {
            Some(r) => r,
            None => {
                let r = commutator[0][0];
                expected_r = Some(r);
                r
            }
        };
        let is_scalar = (0..size).all(|i| {
            (0..size).all(|j| commutator[i][j] == if i == j { r } else { 0 })
        });
        if !is_scalar {
            failures.push(CommutatorFailure { rank: n, expected_r: r, commutator });
        }
    }
    if failures.is_empty() {
        Ok(DualityOutcome::Dual { r: expected_r.unwrap_or(0) })
    } else {
        Ok(DualityOutcome::NotDual { failures })
    }
}

/// Per-rank comparison of `sum_v f^v_gamma f^v_gamma'` against `r^n n!`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FominReport {
    pub r: i64,
    pub rows: Vec<FominRow>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FominRow {
    pub rank: usize,
    pub path_product_sum: i64,
    pub factorial_side: i64,
}

impl FominReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|row| row.path_product_sum == row.factorial_side)
    }
}

/// Runs `check_duality` and then compares, for every `n <= max_rank`, the
/// bilinear path-count sum against `r^n n!` exactly. A non-dual pair is an
/// error (the identity is only asserted for dual pairs).
pub fn fomin_check(
    gamma: &GradedGraph,
    gamma_prime: &GradedGraph,
    max_rank: usize,
) -> Result<FominReport> {
    let r = match check_duality(gamma, gamma_prime, max_rank)? {
        DualityOutcome::Dual { r } => r,
        DualityOutcome::NotDual { failures } => {
            return Err(Error::NotDual { rank: failures[0].rank });
        }
    };
    let f = gamma.path_counts(max_rank)?;
    let fp = gamma_prime.path_counts(max_rank)?;
    let mut rows = Vec::new();
    for n in 0..=max_rank {
        let mut sum = 0i64;
        for (a, b) in f[n].iter().zip(&fp[n]) {
            sum = arith::add(sum, arith::mul(*a, *b)?)?;
        }
        let expected = arith::mul(arith::pow(r, n as u32)?, arith::factorial(n as u32)?)?;
        rows.push(FominRow { rank: n, path_product_sum: sum, factorial_side: expected });
    }
    Ok(FominReport { r, rows })
}

/// The Young graph up to `max_rank`, built straight from the cover
/// relation — a fixture independent of the Hopf machinery.
#[cfg(test)]
pub(crate) fn young_graph(max_rank: usize, multiplicity: i64) -> GradedGraph {
    use crate::combinat::{partitions_of, young_covers};
    let ranks: Vec<Vec<String>> = (0..=max_rank as u32)
        .map(|n| partitions_of(n).iter().map(|p| p.to_string()).collect())
        .collect();
    let mut matrices = Vec::new();
    for n in 0..max_rank as u32 {
        let lower = partitions_of(n);
        let upper = partitions_of(n + 1);
        let mut m = vec![vec![0i64; upper.len()]; lower.len()];
        for (i, lam) in lower.iter().enumerate() {
            for mu in young_covers(lam) {
                let j = upper.iter().position(|x| *x == mu).unwrap();
                m[i][j] = multiplicity;
            }
        }
        matrices.push(m);
    }
    GradedGraph::new(ranks, matrices).unwrap()
}
