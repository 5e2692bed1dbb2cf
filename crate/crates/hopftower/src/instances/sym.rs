//! Symmetric functions in the Schur basis, as a self-dual pair.
//!
//! Product constants are Littlewood-Richardson coefficients computed by
//! direct enumeration of LR skew tableaux; the coproduct is the transpose
//! of the product. An independent route — Schur polynomials by
//! semistandard-tableau enumeration, multiplied as honest multivariate
//! polynomials and re-decomposed — lives in [`schur_polynomial`] /
//! [`expand_in_schur`] and exists only to cross-check the LR enumeration.

use std::collections::BTreeMap;

use crate::arith;
use crate::combinat::{partitions_of, Partition};
use crate::element::{Element, Family, Label, Side, TensorElement};
use crate::error::{Error, Result};
use crate::hopf::PairStructure;

pub const FAMILY: Family = Family("sym");

/// Littlewood-Richardson coefficients of `s_lam * s_mu`: the map
/// `nu -> c^nu_{lam,mu}` over all nu of size |lam| + |mu|, zeros omitted.
pub fn lr_coefficients(lam: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, i64>> {
    let total = lam.size() + mu.size();
    let mut out = BTreeMap::new();
    for nu in partitions_of(total) {
        if !nu.contains(lam) {
            continue;
        }
        if nu.num_parts() > lam.num_parts() + mu.num_parts() {
            continue;
        }
        if nu.part(0) > lam.part(0) + mu.part(0) {
            continue;
        }
        let c = lr_tableau_count(&nu, lam, mu)?;
        if c != 0 {
            out.insert(nu, c);
        }
    }
    Ok(out)
}

/// Number of Littlewood-Richardson tableaux of shape `outer/inner` with
/// content `content`: semistandard fillings whose reverse reading word is
/// a lattice word. Assumes `outer` contains `inner`.
fn lr_tableau_count(outer: &Partition, inner: &Partition, content: &Partition) -> Result<i64> {
    debug_assert!(outer.contains(inner));
    if outer.size() - inner.size() != content.size() {
        return Ok(0);
    }
    // cells in reading order: rows top to bottom, each row right to left,
    // so the lattice condition can be checked prefix by prefix
    let rows = outer.num_parts();
    let mut cells = Vec::new();
    for r in 0..rows {
        let lo = inner.part(r) as usize;
        let hi = outer.part(r) as usize;
        for col in (lo..hi).rev() {
            cells.push((r, col));
        }
    }
    if cells.is_empty() {
        return Ok(if content.num_parts() == 0 { 1 } else { 0 });
    }
    let width = outer.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut counts = vec![0u32; content.num_parts()];
    let mut total: i64 = 0;

    fn search(
        idx: usize,
        cells: &[(usize, usize)],
        content: &[u32],
        inner: &Partition,
        grid: &mut [Vec<u32>],
        counts: &mut [u32],
        total: &mut i64,
    ) -> Result<()> {
        if idx == cells.len() {
            *total = arith::add(*total, 1)?;
            return Ok(());
        }
        let (r, c) = cells[idx];
        for v in 1..=content.len() as u32 {
            let vi = (v - 1) as usize;
            if counts[vi] >= content[vi] {
                continue;
            }
            // lattice word: every prefix holds at least as many v-1 as v
            if v > 1 && counts[vi] >= counts[vi - 1] {
                continue;
            }
            // rows weakly increase; the right neighbour was filled earlier
            if c + 1 < grid[r].len() && grid[r][c + 1] != 0 && v > grid[r][c + 1] {
                continue;
            }
            // columns strictly increase within the skew shape
            if r > 0 && c >= inner.part(r - 1) as usize && v <= grid[r - 1][c] {
                continue;
            }
            grid[r][c] = v;
            counts[vi] += 1;
            search(idx + 1, cells, content, inner, grid, counts, total)?;
            grid[r][c] = 0;
            counts[vi] -= 1;
        }
        Ok(())
    }

    search(0, &cells, content.parts(), inner, &mut grid, &mut counts, &mut total)?;
    Ok(total)
}

/// Dense multivariate integer polynomial keyed by exponent vectors, used
/// by the Schur-polynomial oracle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    fn insert_add(&mut self, exponents: Vec<u32>, coeff: i64) -> Result<()> {
        let entry = self.terms.entry(exponents).or_insert(0);
        *entry = arith::add(*entry, coeff)?;
        Ok(())
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, c| *c != 0);
        self
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_add(exps, arith::mul(*ca, *cb)?)?;
            }
        }
        Ok(out.normalized())
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_add(e.clone(), arith::mul(*c, -1)?)?;
        }
        Ok(out.normalized())
    }

    pub fn scale(&self, c: i64) -> Result<MPoly> {
        if c == 0 {
            return Ok(MPoly::zero(self.nvars));
        }
        let mut out = MPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            out.terms.insert(e.clone(), arith::mul(*v, c)?);
        }
        Ok(out)
    }

    /// Lexicographically largest exponent vector and its coefficient.
    fn leading(&self) -> Option<(Vec<u32>, i64)> {
        self.terms.iter().next_back().map(|(e, c)| (e.clone(), *c))
    }
}

/// The Schur polynomial `s_lam(x_1..x_nvars)` by semistandard-tableau
/// enumeration: one monomial `x^content` per SSYT of shape `lam` with
/// entries at most `nvars`.
pub fn schur_polynomial(lam: &Partition, nvars: usize) -> Result<MPoly> {
    let mut out = MPoly::zero(nvars);
    if lam.num_parts() > nvars {
        return Ok(out); // no column-strict filling exists
    }
    if lam.num_parts() == 0 {
        out.insert_add(vec![0; nvars], 1)?;
        return Ok(out);
    }
    let rows = lam.num_parts();
    let width = lam.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in 0..lam.part(r) as usize {
            cells.push((r, c));
        }
    }

    fn search(
        idx: usize,
        cells: &[(usize, usize)],
        nvars: u32,
        grid: &mut [Vec<u32>],
        out: &mut MPoly,
    ) -> Result<()> {
        if idx == cells.len() {
            let mut exps = vec![0u32; nvars as usize];
            for row in grid.iter() {
                for &v in row.iter().filter(|&&v| v != 0) {
                    exps[(v - 1) as usize] += 1;
                }
            }
            out.insert_add(exps, 1)?;
            return Ok(());
        }
        let (r, c) = cells[idx];
        let min_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let min_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in min_row.max(min_col)..=nvars {
            grid[r][c] = v;
            search(idx + 1, cells, nvars, grid, out)?;
            grid[r][c] = 0;
        }
        Ok(())
    }

    search(0, &cells, nvars as u32, &mut grid, &mut out)?;
    Ok(out.normalized())
}

/// Decomposes a symmetric polynomial into Schur polynomials by repeatedly
/// stripping the lexicographically leading term: the leading exponent of a
/// symmetric polynomial is weakly decreasing and `s_nu` is unitriangular
/// with respect to that order.
pub fn expand_in_schur(p: &MPoly) -> Result<BTreeMap<Partition, i64>> {
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((exps, coeff)) = rest.leading() {
        if !exps.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::SchurExpansion(format!(
                "leading exponent {exps:?} is not a partition; input not symmetric"
            )));
        }
        let parts: Vec<u32> = exps.iter().copied().filter(|&e| e > 0).collect();
        let nu = Partition::new(parts)?;
        let s_nu = schur_polynomial(&nu, p.nvars())?;
        rest = rest.sub(&s_nu.scale(coeff)?)?;
        out.insert(nu, coeff);
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Self-dual pair: both sides carry the Schur basis indexed by partitions,
/// with identical structure constants.
pub struct SymStructure;

impl PairStructure for SymStructure {
    fn family(&self) -> Family {
        FAMILY
    }

    fn basis(&self, _side: Side, degree: u32) -> Vec<Label> {
        partitions_of(degree).into_iter().map(Label::Partition).collect()
    }

    fn unit_label(&self, _side: Side) -> Label {
        Label::Partition(Partition::empty())
    }

    fn product(&self, side: Side, a: &Label, b: &Label) -> Result<Element> {
        let (pa, pb) = match (a.partition(), b.partition()) {
            (Some(pa), Some(pb)) => (pa, pb),
            _ => {
                return Err(Error::UnknownLabel {
                    side,
                    label: a.partition().map_or(a.to_string(), |_| b.to_string()),
                })
            }
        };
        let coeffs = lr_coefficients(pa, pb)?;
        Element::from_terms(side, FAMILY, coeffs.into_iter().map(|(nu, c)| (nu.into(), c)))
    }

    fn coproduct(&self, side: Side, a: &Label) -> Result<TensorElement> {
        let nu = a
            .partition()
            .ok_or_else(|| Error::UnknownLabel { side, label: a.to_string() })?;
        let mut terms = Vec::new();
        for d in 0..=nu.size() {
            for lam in partitions_of(d) {
                if !nu.contains(&lam) {
                    continue;
                }
                for mu in partitions_of(nu.size() - d) {
                    if !nu.contains(&mu) {
                        continue;
                    }
                    let c = lr_tableau_count(nu, &lam, &mu)?;
                    if c != 0 {
                        terms.push(((lam.clone().into(), mu.into()), c));
                    }
                }
            }
        }
        TensorElement::from_terms(side, FAMILY, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::young_covers;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn unit_product_is_identity() {
        let out = lr_coefficients(&Partition::empty(), &p(&[2, 1])).unwrap();
        assert_eq!(out, BTreeMap::from([(p(&[2, 1]), 1)]));
    }

    #[test]
    fn s1_times_s1() {
        let out = lr_coefficients(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(out, BTreeMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)]));
    }

    #[test]
    fn s21_times_s1_is_the_pieri_set() {
        let out = lr_coefficients(&p(&[2, 1]), &p(&[1])).unwrap();
        assert_eq!(
            out,
            BTreeMap::from([(p(&[3, 1]), 1), (p(&[2, 2]), 1), (p(&[2, 1, 1]), 1)])
        );
    }

    #[test]
    fn pieri_specialization_equals_young_covers() {
        for n in 0..=6u32 {
            for lam in partitions_of(n) {
                let prod = lr_coefficients(&lam, &p(&[1])).unwrap();
                let covers: BTreeMap<Partition, i64> =
                    young_covers(&lam).into_iter().map(|mu| (mu, 1)).collect();
                assert_eq!(prod, covers, "lam = {lam}");
            }
        }
    }

    #[test]
    fn lr_is_symmetric_in_the_two_factors() {
        for a in 0..=3u32 {
            for b in 0..=(5 - a) {
                for lam in partitions_of(a) {
                    for mu in partitions_of(b) {
                        assert_eq!(
                            lr_coefficients(&lam, &mu).unwrap(),
                            lr_coefficients(&mu, &lam).unwrap(),
                            "lam = {lam}, mu = {mu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn schur_polynomial_small_cases() {
        let s1 = schur_polynomial(&p(&[1]), 2).unwrap();
        assert_eq!(s1.coeff(&[1, 0]), 1);
        assert_eq!(s1.coeff(&[0, 1]), 1);
        assert_eq!(s1.num_terms(), 2);

        let s11 = schur_polynomial(&p(&[1, 1]), 2).unwrap();
        assert_eq!(s11.coeff(&[1, 1]), 1);
        assert_eq!(s11.num_terms(), 1);

        let s2 = schur_polynomial(&p(&[2]), 2).unwrap();
        assert_eq!(s2.coeff(&[2, 0]), 1);
        assert_eq!(s2.coeff(&[1, 1]), 1);
        assert_eq!(s2.coeff(&[0, 2]), 1);
        assert_eq!(s2.num_terms(), 3);
    }

    #[test]
    fn schur_polynomial_vanishes_with_too_few_variables() {
        assert!(schur_polynomial(&p(&[1, 1, 1]), 2).unwrap().is_zero());
    }

    #[test]
    fn expand_in_schur_roundtrips_a_product() {
        let s1 = schur_polynomial(&p(&[1]), 3).unwrap();
        let sq = s1.mul(&s1).unwrap();
        let out = expand_in_schur(&sq).unwrap();
        assert_eq!(out, BTreeMap::from([(p(&[2]), 1), (p(&[1, 1]), 1)]));
    }

    #[test]
    fn expand_in_schur_rejects_non_symmetric_input() {
        let mut q = MPoly::zero(2);
        q.insert_add(vec![0, 1], 1).unwrap();
        assert!(matches!(expand_in_schur(&q), Err(Error::SchurExpansion(_))));
    }
}
