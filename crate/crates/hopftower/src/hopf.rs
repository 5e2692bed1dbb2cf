//! A pair of graded dual free modules with product, coproduct, and pairing
//! given by structure constants, plus empirical verifiers that check the
//! dual-Hopf axioms on all basis tuples up to a degree cutoff.
//!
//! Nothing here assumes the axioms hold: `verify_duality` and
//! `verify_bialgebra` test them and report every violated tuple, which is
//! how corrupted or buggy structure providers are caught.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use serde::Serialize;
use serde_json::Value;

use crate::arith;
use crate::element::{BasisId, Element, Family, Label, Side, TensorElement};
use crate::error::{Error, Result};
use crate::par;

/// Structure-constant provider for one dual pair.
///
/// `basis(side, d)` must enumerate the degree-`d` basis labels in canonical
/// order; the two sides share their index sets, with the pairing being the
/// dual-basis delta. Degree 0 must be spanned by `unit_label` alone.
pub trait PairStructure: Send + Sync {
    fn family(&self) -> Family;
    fn basis(&self, side: Side, degree: u32) -> Vec<Label>;
    fn unit_label(&self, side: Side) -> Label;
    /// Product of two basis elements on the given side.
    fn product(&self, side: Side, a: &Label, b: &Label) -> Result<Element>;
    /// Coproduct of a basis element on the given side.
    fn coproduct(&self, side: Side, a: &Label) -> Result<TensorElement>;
}

/// A `PairStructure` wrapped with validation and synchronized memo caches.
///
/// Every provider answer is checked before it is cached: products of
/// degrees m and n must be homogeneous of degree m+n, coproduct terms must
/// split the degree additively, and all structure constants must be
/// nonnegative (a negative constant is an error — the graph construction
/// is undefined for it). Caches are behind `RwLock`s, so concurrent use is
/// safe and semantically pure.
pub struct HopfPair {
    structure: Arc<dyn PairStructure>,
    products: RwLock<BTreeMap<(Side, Label, Label), Element>>,
    coproducts: RwLock<BTreeMap<(Side, Label), TensorElement>>,
    bases: RwLock<BTreeMap<(Side, u32), Vec<Label>>>,
}

impl HopfPair {
    pub fn new(structure: Arc<dyn PairStructure>) -> Self {
        HopfPair {
            structure,
            products: RwLock::new(BTreeMap::new()),
            coproducts: RwLock::new(BTreeMap::new()),
            bases: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn family(&self) -> Family {
        self.structure.family()
    }

    /// Degree-`d` basis labels in canonical order (memoized).
    pub fn basis_labels(&self, side: Side, degree: u32) -> Vec<Label> {
        if let Some(hit) = self.bases.read().unwrap().get(&(side, degree)) {
            return hit.clone();
        }
        let labels = self.structure.basis(side, degree);
        self.bases.write().unwrap().insert((side, degree), labels.clone());
        labels
    }

    pub fn unit_label(&self, side: Side) -> Label {
        self.structure.unit_label(side)
    }

    pub fn unit(&self, side: Side) -> Element {
        Element::basis(side, self.family(), self.unit_label(side))
    }

    pub fn basis_element(&self, side: Side, label: &Label) -> Element {
        Element::basis(side, self.family(), label.clone())
    }

    fn validated_basis_product(&self, side: Side, a: &Label, b: &Label) -> Result<Element> {
        let key = (side, a.clone(), b.clone());
        if let Some(hit) = self.products.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let result = self.structure.product(side, a, b)?;
        let expected_degree = a.size() + b.size();
        for (label, coeff) in result.terms() {
            if label.size() != expected_degree {
                return Err(Error::GraphShape(format!(
                    "product {a}*{b} on {side} side produced degree {} term {label}",
                    label.size()
                )));
            }
            if coeff < 0 {
                return Err(Error::NegativeStructureConstant {
                    side,
                    context: format!("product {a}*{b} -> {coeff}*{label}"),
                });
            }
        }
        self.products.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    fn validated_basis_coproduct(&self, side: Side, a: &Label) -> Result<TensorElement> {
        let key = (side, a.clone());
        if let Some(hit) = self.coproducts.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let result = self.structure.coproduct(side, a)?;
        for ((left, right), coeff) in result.terms() {
            if left.size() + right.size() != a.size() {
                return Err(Error::GraphShape(format!(
                    "coproduct of {a} on {side} side produced term {left}(x){right}",
                )));
            }
            if coeff < 0 {
                return Err(Error::NegativeStructureConstant {
                    side,
                    context: format!("coproduct {a} -> {coeff}*{left}(x){right}"),
                });
            }
        }
        self.coproducts.write().unwrap().insert(key, result.clone());
        Ok(result)
    }

    fn check_operand(&self, side: Side, x: &Element) -> Result<()> {
        if let Some(s) = x.side() {
            if s != side {
                return Err(Error::SideMismatch { expected: side, found: s });
            }
        }
        if let Some(f) = x.family() {
            if f != self.family() {
                return Err(Error::FamilyMismatch { left: self.family(), right: f });
            }
        }
        Ok(())
    }

    /// Bilinear extension of the basis product.
    pub fn product(&self, side: Side, x: &Element, y: &Element) -> Result<Element> {
        self.check_operand(side, x)?;
        self.check_operand(side, y)?;
        let mut acc = Element::zero();
        for (la, ca) in x.terms() {
            for (lb, cb) in y.terms() {
                let base = self.validated_basis_product(side, la, lb)?;
                acc = acc.add(&base.scale(arith::mul(ca, cb)?)?)?;
            }
        }
        Ok(acc)
    }

    /// Linear extension of the basis coproduct.
    pub fn coproduct(&self, side: Side, x: &Element) -> Result<TensorElement> {
        self.check_operand(side, x)?;
        let mut acc = TensorElement::zero();
        for (label, coeff) in x.terms() {
            let base = self.validated_basis_coproduct(side, label)?;
            acc = acc.add(&base.scale(coeff)?)?;
        }
        Ok(acc)
    }

    /// The degree-1 basis of one side; these are the ingredients for the
    /// distinguished elements alpha and beta.
    pub fn degree_one_elements(&self, side: Side) -> Vec<BasisId> {
        self.basis_labels(side, 1)
            .into_iter()
            .map(|label| BasisId { side, family: self.family(), label })
            .collect()
    }

    /// True iff `coproduct(x) = 1(x)x + x(x)1`. Every degree-1 element is
    /// primitive for degree reasons; the unit is not (its coproduct is the
    /// single term `1(x)1`).
    pub fn is_primitive(&self, side: Side, x: &Element) -> Result<bool> {
        self.check_operand(side, x)?;
        if !x.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let actual = self.coproduct(side, x)?;
        let unit = self.unit_label(side);
        let mut expected_terms = Vec::new();
        for (label, coeff) in x.terms() {
            expected_terms.push(((unit.clone(), label.clone()), coeff));
            expected_terms.push(((label.clone(), unit.clone()), coeff));
        }
        let expected = TensorElement::from_terms(side, self.family(), expected_terms)?;
        Ok(actual == expected)
    }

    /// Checks `<x*y, z> = <x(x)y, delta z>` and `<delta x, y(x)z> = <x, y*z>`
    /// for all basis triples with total degree at most `max_degree`; the
    /// report lists every violated triple.
    pub fn verify_duality(&self, max_degree: u32) -> Result<VerifyReport> {
        let mut violations = Vec::new();
        for d in 0..=max_degree {
            // <x*y, z> = <x (x) y, delta z>, x,y lower, z upper of degree d
            let upper_cops: Vec<(Label, TensorElement)> = {
                let mut v = Vec::new();
                for z in self.basis_labels(Side::Upper, d) {
                    let t = self.validated_basis_coproduct(Side::Upper, &z)?;
                    v.push((z, t));
                }
                v
            };
            let mut pairs = Vec::new();
            for dx in 0..=d {
                for x in self.basis_labels(Side::Lower, dx) {
                    for y in self.basis_labels(Side::Lower, d - dx) {
                        pairs.push((x.clone(), y));
                    }
                }
            }
            let found = par::try_map_ordered(pairs, |(x, y)| -> Result<Vec<Violation>> {
                let prod = self.validated_basis_product(Side::Lower, &x, &y)?;
                let mut out = Vec::new();
                for (z, cop) in &upper_cops {
                    let lhs = prod.coeff(z);
                    let rhs = cop.coeff(&x, &y);
                    if lhs != rhs {
                        out.push(Violation::triple(
                            "<x*y, z> = <x(x)y, delta z>",
                            Side::Lower,
                            [&x, &y, z],
                            lhs,
                            rhs,
                        ));
                    }
                }
                Ok(out)
            })?;
            violations.extend(found.into_iter().flatten());

            // <delta x, y (x) z> = <x, y*z>, x lower of degree d, y,z upper
            let lower_cops: Vec<(Label, TensorElement)> = {
                let mut v = Vec::new();
                for x in self.basis_labels(Side::Lower, d) {
                    let t = self.validated_basis_coproduct(Side::Lower, &x)?;
                    v.push((x, t));
                }
                v
            };
            let mut pairs = Vec::new();
            for dy in 0..=d {
                for y in self.basis_labels(Side::Upper, dy) {
                    for z in self.basis_labels(Side::Upper, d - dy) {
                        pairs.push((y.clone(), z));
                    }
                }
            }
            let found = par::try_map_ordered(pairs, |(y, z)| -> Result<Vec<Violation>> {
                let prod = self.validated_basis_product(Side::Upper, &y, &z)?;
                let mut out = Vec::new();
                for (x, cop) in &lower_cops {
                    let lhs = cop.coeff(&y, &z);
                    let rhs = prod.coeff(x);
                    if lhs != rhs {
                        out.push(Violation::triple(
                            "<delta x, y(x)z> = <x, y*z>",
                            Side::Upper,
                            [x, &y, &z],
                            lhs,
                            rhs,
                        ));
                    }
                }
                Ok(out)
            })?;
            violations.extend(found.into_iter().flatten());
        }
        Ok(VerifyReport { check: "duality".into(), rank: max_degree, violations })
    }

    /// Checks, on each side and up to total degree `max_degree`: the
    /// degree-0 basis is the unit alone, unit and counit laws,
    /// associativity, coassociativity, and the bialgebra compatibility
    /// `delta(x*y) = delta(x)*delta(y)`.
    pub fn verify_bialgebra(&self, max_degree: u32) -> Result<VerifyReport> {
        let mut violations = Vec::new();
        for side in [Side::Lower, Side::Upper] {
            self.check_unit_laws(side, max_degree, &mut violations)?;
            self.check_counit_laws(side, max_degree, &mut violations)?;
            self.check_associativity(side, max_degree, &mut violations)?;
            self.check_coassociativity(side, max_degree, &mut violations)?;
            self.check_compatibility(side, max_degree, &mut violations)?;
        }
        Ok(VerifyReport { check: "bialgebra".into(), rank: max_degree, violations })
    }

    fn check_unit_laws(
        &self,
        side: Side,
        max_degree: u32,
        violations: &mut Vec<Violation>,
    ) -> Result<()> {
        let unit = self.unit_label(side);
        let degree_zero = self.basis_labels(side, 0);
        if degree_zero != vec![unit.clone()] {
            violations.push(Violation {
                equation: "degree-0 basis = {1}".into(),
                side: side.to_string(),
                labels: degree_zero.iter().map(|l| l.to_string()).collect(),
                lhs: format!("{}", degree_zero.len()),
                rhs: "1".into(),
            });
        }
        for d in 0..=max_degree {
            for b in self.basis_labels(side, d) {
                let b_elem = self.basis_element(side, &b);
                let left = self.validated_basis_product(side, &unit, &b)?;
                if left != b_elem {
                    violations.push(Violation::pair("1*x = x", side, [&unit, &b], &left, &b_elem));
                }
                let right = self.validated_basis_product(side, &b, &unit)?;
                if right != b_elem {
                    violations.push(Violation::pair("x*1 = x", side, [&b, &unit], &right, &b_elem));
                }
            }
        }
        Ok(())
    }

    fn check_counit_laws(
        &self,
        side: Side,
        max_degree: u32,
        violations: &mut Vec<Violation>,
    ) -> Result<()> {
        let unit = self.unit_label(side);
        for d in 0..=max_degree {
            for b in self.basis_labels(side, d) {
                let cop = self.validated_basis_coproduct(side, &b)?;
                // counit picks the coefficient of the unit in the degree-0 leg
                let mut left_terms = Vec::new();
                let mut right_terms = Vec::new();
                for ((l, r), coeff) in cop.terms() {
                    if *l == unit {
                        left_terms.push((r.clone(), coeff));
                    }
                    if *r == unit {
                        right_terms.push((l.clone(), coeff));
                    }
                }
                let b_elem = self.basis_element(side, &b);
                let left = Element::from_terms(side, self.family(), left_terms)?;
                if left != b_elem {
                    violations.push(Violation::single("(eps(x)id)delta x = x", side, &b, &left, &b_elem));
                }
                let right = Element::from_terms(side, self.family(), right_terms)?;
                if right != b_elem {
                    violations.push(Violation::single("(id(x)eps)delta x = x", side, &b, &right, &b_elem));
                }
            }
        }
        Ok(())
    }

    fn check_associativity(
        &self,
        side: Side,
        max_degree: u32,
        violations: &mut Vec<Violation>,
    ) -> Result<()> {
        let mut triples = Vec::new();
        for da in 0..=max_degree {
            for db in 0..=(max_degree - da) {
                for dc in 0..=(max_degree - da - db) {
                    for a in self.basis_labels(side, da) {
                        for b in self.basis_labels(side, db) {
                            for c in self.basis_labels(side, dc) {
                                triples.push((a.clone(), b.clone(), c));
                            }
                        }
                    }
                }
            }
        }
        let found = par::try_map_ordered(triples, |(a, b, c)| -> Result<Vec<Violation>> {
            let ab = self.validated_basis_product(side, &a, &b)?;
            let bc = self.validated_basis_product(side, &b, &c)?;
            let left = self.product(side, &ab, &self.basis_element(side, &c))?;
            let right = self.product(side, &self.basis_element(side, &a), &bc)?;
            if left != right {
                Ok(vec![Violation::assoc(side, [&a, &b, &c], &left, &right)])
            } else {
                Ok(Vec::new())
            }
        })?;
        violations.extend(found.into_iter().flatten());
        Ok(())
    }

    fn check_coassociativity(
        &self,
        side: Side,
        max_degree: u32,
        violations: &mut Vec<Violation>,
    ) -> Result<()> {
        for d in 0..=max_degree {
            for a in self.basis_labels(side, d) {
                let cop = self.validated_basis_coproduct(side, &a)?;
                let mut left: BTreeMap<(Label, Label, Label), i64> = BTreeMap::new();
                let mut right: BTreeMap<(Label, Label, Label), i64> = BTreeMap::new();
                for ((x1, x2), c) in cop.terms() {
                    for ((y1, y2), c2) in self.validated_basis_coproduct(side, x1)?.terms() {
                        let entry = left.entry((y1.clone(), y2.clone(), x2.clone())).or_insert(0);
                        *entry = arith::add(*entry, arith::mul(c, c2)?)?;
                    }
                    for ((y1, y2), c2) in self.validated_basis_coproduct(side, x2)?.terms() {
                        let entry = right.entry((x1.clone(), y1.clone(), y2.clone())).or_insert(0);
                        *entry = arith::add(*entry, arith::mul(c, c2)?)?;
                    }
                }
                left.retain(|_, c| *c != 0);
                right.retain(|_, c| *c != 0);
                if left != right {
                    violations.push(Violation {
                        equation: "(delta(x)id)delta x = (id(x)delta)delta x".into(),
                        side: side.to_string(),
                        labels: vec![a.to_string()],
                        lhs: render_triple_tensor(&left),
                        rhs: render_triple_tensor(&right),
                    });
                }
            }
        }
        Ok(())
    }

    fn check_compatibility(
        &self,
        side: Side,
        max_degree: u32,
        violations: &mut Vec<Violation>,
    ) -> Result<()> {
        let mut pairs = Vec::new();
        for da in 0..=max_degree {
            for db in 0..=(max_degree - da) {
                for a in self.basis_labels(side, da) {
                    for b in self.basis_labels(side, db) {
                        pairs.push((a.clone(), b));
                    }
                }
            }
        }
        let found = par::try_map_ordered(pairs, |(a, b)| -> Result<Vec<Violation>> {
            let prod = self.validated_basis_product(side, &a, &b)?;
            let lhs = self.coproduct(side, &prod)?;
            let cop_a = self.validated_basis_coproduct(side, &a)?;
            let cop_b = self.validated_basis_coproduct(side, &b)?;
            let mut rhs = TensorElement::zero();
            for ((a1, a2), ca) in cop_a.terms() {
                for ((b1, b2), cb) in cop_b.terms() {
                    let first = self.validated_basis_product(side, a1, b1)?;
                    let second = self.validated_basis_product(side, a2, b2)?;
                    let scale = arith::mul(ca, cb)?;
                    let mut terms = Vec::new();
                    for (l1, c1) in first.terms() {
                        for (l2, c2) in second.terms() {
                            terms.push((
                                (l1.clone(), l2.clone()),
                                arith::mul(scale, arith::mul(c1, c2)?)?,
                            ));
                        }
                    }
                    rhs = rhs.add(&TensorElement::from_terms(side, self.family(), terms)?)?;
                }
            }
            if lhs != rhs {
                Ok(vec![Violation {
                    equation: "delta(x*y) = delta(x)*delta(y)".into(),
                    side: side.to_string(),
                    labels: vec![a.to_string(), b.to_string()],
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }])
            } else {
                Ok(Vec::new())
            }
        })?;
        violations.extend(found.into_iter().flatten());
        Ok(())
    }
}

fn render_triple_tensor(t: &BTreeMap<(Label, Label, Label), i64>) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|((a, b, c), coeff)| format!("{coeff}*{a}(x){b}(x){c}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// One violated law: the offending tuple of basis labels and the two
/// values that should have agreed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub equation: String,
    pub side: String,
    pub labels: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Violation {
    fn triple(equation: &str, side: Side, labels: [&Label; 3], lhs: i64, rhs: i64) -> Self {
        Violation {
            equation: equation.into(),
            side: side.to_string(),
            labels: labels.iter().map(|l| l.to_string()).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn pair(equation: &str, side: Side, labels: [&Label; 2], lhs: &Element, rhs: &Element) -> Self {
        Violation {
            equation: equation.into(),
            side: side.to_string(),
            labels: labels.iter().map(|l| l.to_string()).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn single(equation: &str, side: Side, label: &Label, lhs: &Element, rhs: &Element) -> Self {
        Violation {
            equation: equation.into(),
            side: side.to_string(),
            labels: vec![label.to_string()],
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    fn assoc(side: Side, labels: [&Label; 3], lhs: &Element, rhs: &Element) -> Self {
        Violation {
            equation: "(x*y)*z = x*(y*z)".into(),
            side: side.to_string(),
            labels: labels.iter().map(|l| l.to_string()).collect(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of one verification sweep up to a rank cutoff; empty
/// `violations` means the check passed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub rank: u32,
    pub violations: Vec<Violation>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serialization cannot fail")
    }
}
