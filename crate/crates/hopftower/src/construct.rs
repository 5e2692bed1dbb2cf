//! Building the graded graph pair from a Hopf pair and its degree-1
//! elements: `Gamma(beta)` has `m(s_lam, s_mu) = <p_mu, beta * s_lam>` and
//! `Gamma'(alpha)` has `m'(s_lam, s_mu) = <alpha * p_lam, s_mu>`; both
//! live on the upper basis labels with height equal to degree.
//!
//! `Left` multiplies by the distinguished element on the left, matching
//! the displayed formulas; `Right` uses `s_lam * beta` and `p_lam * alpha`
//! instead, which matters once the products stop being commutative.

use crate::element::{pair as pairing, Element, Side};
use crate::error::{Error, Result};
use crate::graph::GradedGraph;
use crate::hopf::HopfPair;
use crate::par;

/// Which side the degree-1 element multiplies on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphSide {
    Left,
    Right,
}

impl std::fmt::Display for GraphSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphSide::Left => write!(f, "left"),
            GraphSide::Right => write!(f, "right"),
        }
    }
}

fn check_degree_one(
    pair: &HopfPair,
    x: &Element,
    side: Side,
    context: &'static str,
) -> Result<()> {
    if x.is_zero() {
        return Err(Error::ZeroElement { context });
    }
    if let Some(f) = x.family() {
        if f != pair.family() {
            return Err(Error::FamilyMismatch { left: pair.family(), right: f });
        }
    }
    match x.side() {
        Some(s) if s == side => {}
        Some(s) => return Err(Error::SideMismatch { expected: side, found: s }),
        None => unreachable!("nonzero elements carry a side"),
    }
    if x.degree() != Some(1) {
        return Err(Error::DegreeNotOne { found: x.degree(), context });
    }
    if x.terms().any(|(_, c)| c < 0) {
        return Err(Error::NegativeCoefficient { context });
    }
    Ok(())
}

fn graph_on_basis(
    pair: &HopfPair,
    seed: &Element,
    product_side: Side,
    max_rank: usize,
    side: GraphSide,
) -> Result<GradedGraph> {
    let mut ranks = Vec::with_capacity(max_rank + 1);
    let mut label_lists = Vec::with_capacity(max_rank + 1);
    for n in 0..=max_rank as u32 {
        let labels = pair.basis_labels(product_side, n);
        ranks.push(labels.iter().map(|l| l.to_string()).collect::<Vec<String>>());
        label_lists.push(labels);
    }
    let mut matrices = Vec::with_capacity(max_rank);
    for n in 0..max_rank {
        let upper = &label_lists[n + 1];
        let rows = par::try_map_ordered(label_lists[n].clone(), |lam| -> Result<Vec<i64>> {
            let v = pair.basis_element(product_side, &lam);
            let product = match side {
                GraphSide::Left => pair.product(product_side, seed, &v)?,
                GraphSide::Right => pair.product(product_side, &v, seed)?,
            };
            Ok(upper.iter().map(|mu| product.coeff(mu)).collect())
        })?;
        matrices.push(rows);
    }
    GradedGraph::new(ranks, matrices)
}

/// `Gamma(beta)`: vertices are the upper basis labels graded by degree;
/// the multiplicity from `s_lam` to `s_mu` is the coefficient of `s_mu`
/// in `beta * s_lam` (or `s_lam * beta` for [`GraphSide::Right`]).
pub fn gamma_from_beta(
    pair: &HopfPair,
    beta: &Element,
    max_rank: usize,
    side: GraphSide,
) -> Result<GradedGraph> {
    check_degree_one(pair, beta, Side::Upper, "beta")?;
    graph_on_basis(pair, beta, Side::Upper, max_rank, side)
}

/// `Gamma'(alpha)`: same vertex set and heights as `Gamma(beta)`; the
/// multiplicity from `s_lam` to `s_mu` is the coefficient of `p_mu` in
/// `alpha * p_lam` (or `p_lam * alpha` for [`GraphSide::Right`]).
pub fn gamma_prime_from_alpha(
    pair: &HopfPair,
    alpha: &Element,
    max_rank: usize,
    side: GraphSide,
) -> Result<GradedGraph> {
    check_degree_one(pair, alpha, Side::Lower, "alpha")?;
    graph_on_basis(pair, alpha, Side::Lower, max_rank, side)
}

/// `<alpha, beta>`: the differential coefficient the constructed pair must
/// exhibit under `check_duality`.
pub fn differential_coefficient(
    pair: &HopfPair,
    alpha: &Element,
    beta: &Element,
) -> Result<i64> {
    check_degree_one(pair, alpha, Side::Lower, "alpha")?;
    check_degree_one(pair, beta, Side::Upper, "beta")?;
    pairing(alpha, beta)
}
