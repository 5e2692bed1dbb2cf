//! The ribbon/fundamental dual pair: noncommutative symmetric functions
//! in the ribbon basis `R_alpha` on the lower side, quasisymmetric
//! functions in the fundamental basis `F_alpha` on the upper side, with
//! `<R_alpha, F_beta> = delta`.
//!
//! The ribbon product is concatenation plus near-concatenation; the
//! fundamental coproduct cuts a composition at every position. The other
//! two operations are forced by duality: the fundamental product is
//! computed by shuffling descent-class representative permutations, and
//! the ribbon coproduct is its transpose.

use std::collections::BTreeMap;

use crate::arith;
use crate::combinat::{compositions_of, descent_composition, Composition};
use crate::element::{Element, Family, Label, Side, TensorElement};
use crate::error::{Error, Result};
use crate::hopf::PairStructure;

pub const FAMILY: Family = Family("nsym-qsym");

/// `R_a * R_b = R_{a.b} + R_{a(.)b}`: concatenation and near-concatenation
/// (last part of `a` merged with first part of `b`). Each label appears
/// with coefficient 1.
pub fn ribbon_product(a: &Composition, b: &Composition) -> Result<Vec<Composition>> {
    if a.num_parts() == 0 {
        return Ok(vec![b.clone()]);
    }
    if b.num_parts() == 0 {
        return Ok(vec![a.clone()]);
    }
    let mut concat = a.parts().to_vec();
    concat.extend_from_slice(b.parts());
    let mut near = a.parts().to_vec();
    *near.last_mut().unwrap() += b.parts()[0];
    near.extend_from_slice(&b.parts()[1..]);
    Ok(vec![Composition::new(concat)?, Composition::new(near)?])
}

/// `delta F_a`: one term `F_left (x) F_right` for each of the size+1 ways
/// to cut `a`, either between two parts or inside one part.
pub fn fundamental_coproduct(a: &Composition) -> Result<Vec<(Composition, Composition)>> {
    let n = a.size();
    let mut out = Vec::new();
    for cut in 0..=n {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut remaining = cut;
        for &part in a.parts() {
            if remaining >= part {
                left.push(part);
                remaining -= part;
            } else {
                if remaining > 0 {
                    left.push(remaining);
                    right.push(part - remaining);
                    remaining = 0;
                } else {
                    right.push(part);
                }
            }
        }
        out.push((Composition::new(left)?, Composition::new(right)?));
    }
    Ok(out)
}

/// A permutation of {1..n} whose descent composition is exactly `a`:
/// increasing blocks of the sizes of `a`, each block using larger values
/// than the next one.
fn descent_class_representative(a: &Composition) -> Vec<u32> {
    let n = a.size();
    let mut out = Vec::with_capacity(n as usize);
    let mut upper = n;
    for &part in a.parts() {
        for v in (upper - part + 1)..=upper {
            out.push(v);
        }
        upper -= part;
    }
    out
}

/// All interleavings of two sequences that preserve both internal orders.
fn shuffles(u: &[u32], v: &[u32]) -> Vec<Vec<u32>> {
    fn rec(u: &[u32], v: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if u.is_empty() && v.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let Some((&head, rest)) = u.split_first() {
            cur.push(head);
            rec(rest, v, cur, out);
            cur.pop();
        }
        if let Some((&head, rest)) = v.split_first() {
            cur.push(head);
            rec(u, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(u, v, &mut Vec::new(), &mut out);
    out
}

/// `F_a * F_b`: shuffle a descent-class representative of `a` on {1..m}
/// with one of `b` shifted to {m+1..m+n} and group the shuffles by their
/// descent composition.
pub fn fundamental_product(
    a: &Composition,
    b: &Composition,
) -> Result<BTreeMap<Composition, i64>> {
    let u = descent_class_representative(a);
    let v: Vec<u32> = descent_class_representative(b)
        .into_iter()
        .map(|x| x + a.size())
        .collect();
    let mut out: BTreeMap<Composition, i64> = BTreeMap::new();
    for word in shuffles(&u, &v) {
        let comp = descent_composition(&word)?;
        let entry = out.entry(comp).or_insert(0);
        *entry = arith::add(*entry, 1)?;
    }
    Ok(out)
}

/// `delta R_c` as the duality transpose of the fundamental product: the
/// coefficient of `R_a (x) R_b` is the coefficient of `F_c` in `F_a * F_b`.
pub fn ribbon_coproduct(c: &Composition) -> Result<BTreeMap<(Composition, Composition), i64>> {
    let n = c.size();
    let mut out = BTreeMap::new();
    for left_size in 0..=n {
        for a in compositions_of(left_size) {
            for b in compositions_of(n - left_size) {
                let coeff = fundamental_product(&a, &b)?.get(c).copied().unwrap_or(0);
                if coeff != 0 {
                    out.insert((a.clone(), b), coeff);
                }
            }
        }
    }
    Ok(out)
}

/// Ribbon basis below, fundamental basis above; duality holds by
/// construction since each operation is the transpose of its partner.
pub struct NsymQsymStructure;

impl NsymQsymStructure {
    fn composition<'a>(&self, side: Side, label: &'a Label) -> Result<&'a Composition> {
        label
            .composition()
            .ok_or_else(|| Error::UnknownLabel { side, label: label.to_string() })
    }
}

impl PairStructure for NsymQsymStructure {
    fn family(&self) -> Family {
        FAMILY
    }

    fn basis(&self, _side: Side, degree: u32) -> Vec<Label> {
        compositions_of(degree).into_iter().map(Label::Composition).collect()
    }

    fn unit_label(&self, _side: Side) -> Label {
        Label::Composition(Composition::empty())
    }

    fn product(&self, side: Side, a: &Label, b: &Label) -> Result<Element> {
        let ca = self.composition(side, a)?;
        let cb = self.composition(side, b)?;
        match side {
            Side::Lower => {
                let labels = ribbon_product(ca, cb)?;
                Element::from_terms(side, FAMILY, labels.into_iter().map(|c| (c.into(), 1)))
            }
            Side::Upper => {
                let coeffs = fundamental_product(ca, cb)?;
                Element::from_terms(side, FAMILY, coeffs.into_iter().map(|(c, n)| (c.into(), n)))
            }
        }
    }

    fn coproduct(&self, side: Side, a: &Label) -> Result<TensorElement> {
        let ca = self.composition(side, a)?;
        match side {
            Side::Upper => {
                let cuts = fundamental_coproduct(ca)?;
                TensorElement::from_terms(
                    side,
                    FAMILY,
                    cuts.into_iter().map(|(l, r)| ((l.into(), r.into()), 1)),
                )
            }
            Side::Lower => {
                let terms = ribbon_coproduct(ca)?;
                TensorElement::from_terms(
                    side,
                    FAMILY,
                    terms.into_iter().map(|((l, r), c)| ((l.into(), r.into()), c)),
                )
            }
        }
    }
}
