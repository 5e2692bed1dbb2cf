//! Sparse exact-integer linear combinations over graded labeled bases,
//! tensor squares of those, and the dual-basis pairing between the two
//! sides of an instance.
//!
//! The two sides are `Lower` (H_bullet, the "p" side) and `Upper`
//! (H^bullet, the "s" side); the pairing is the bilinear extension of
//! `<p_lam, s_mu> = delta_{lam,mu}`. Coefficients are checked `i64`:
//! overflow raises an error instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::arith;
use crate::combinat::{Composition, Partition};
use crate::error::{Error, Result};

/// Which member of the dual pair an element lives in.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Side {
    /// H_bullet, spanned by the `p` generators (projective classes).
    Lower,
    /// H^bullet, spanned by the `s` generators (simple classes).
    Upper,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Lower => Side::Upper,
            Side::Upper => Side::Lower,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Lower => write!(f, "lower"),
            Side::Upper => write!(f, "upper"),
        }
    }
}

/// Tag identifying one instance (one dual pair); elements of different
/// families never combine.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Family(pub &'static str);

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Index label of a basis element: a partition or a composition. `Ord` is
/// the canonical enumeration order graded by size.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Label {
    Partition(Partition),
    Composition(Composition),
}

impl Label {
    pub fn size(&self) -> u32 {
        match self {
            Label::Partition(p) => p.size(),
            Label::Composition(c) => c.size(),
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            Label::Partition(p) => Some(p),
            Label::Composition(_) => None,
        }
    }

    pub fn composition(&self) -> Option<&Composition> {
        match self {
            Label::Composition(c) => Some(c),
            Label::Partition(_) => None,
        }
    }
}

impl Ord for Label {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Label::*;
        self.size().cmp(&other.size()).then_with(|| match (self, other) {
            (Partition(a), Partition(b)) => a.cmp(b),
            (Composition(a), Composition(b)) => a.cmp(b),
            (Partition(_), Composition(_)) => std::cmp::Ordering::Less,
            (Composition(_), Partition(_)) => std::cmp::Ordering::Greater,
        })
    }
}

impl PartialOrd for Label {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(p) => write!(f, "{p}"),
            Label::Composition(c) => write!(f, "{c}"),
        }
    }
}

impl From<Partition> for Label {
    fn from(p: Partition) -> Self {
        Label::Partition(p)
    }
}

impl From<Composition> for Label {
    fn from(c: Composition) -> Self {
        Label::Composition(c)
    }
}

/// Fully qualified identity of a basis element.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BasisId {
    pub side: Side,
    pub family: Family,
    pub label: Label,
}

impl BasisId {
    /// The grading degree: the size of the label.
    pub fn degree(&self) -> u32 {
        self.label.size()
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.family, self.side, self.label)
    }
}

/// Sparse integer linear combination of basis elements, all on one side of
/// one family. The zero element carries no side or family until combined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    ctx: Option<(Side, Family)>,
    terms: BTreeMap<Label, i64>,
}

impl Element {
    pub fn zero() -> Self {
        Element { ctx: None, terms: BTreeMap::new() }
    }

    /// A single basis element with coefficient 1.
    pub fn basis(side: Side, family: Family, label: Label) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(label, 1);
        Element { ctx: Some((side, family)), terms }
    }

    /// Builds from (label, coefficient) pairs, accumulating duplicates with
    /// checked arithmetic and dropping zeros.
    pub fn from_terms<I>(side: Side, family: Family, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, i64)>,
    {
        let mut map = BTreeMap::new();
        for (label, coeff) in terms {
            let entry = map.entry(label).or_insert(0i64);
            *entry = arith::add(*entry, coeff)?;
        }
        map.retain(|_, c| *c != 0);
        if map.is_empty() {
            return Ok(Element::zero());
        }
        Ok(Element { ctx: Some((side, family)), terms: map })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn side(&self) -> Option<Side> {
        self.ctx.map(|(s, _)| s)
    }

    pub fn family(&self) -> Option<Family> {
        self.ctx.map(|(_, f)| f)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in canonical label order.
    pub fn terms(&self) -> impl Iterator<Item = (&Label, i64)> {
        self.terms.iter().map(|(l, &c)| (l, c))
    }

    pub fn coeff(&self, label: &Label) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    /// True when every stored term has one common degree; the zero element
    /// is homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.degree().is_some() || self.is_zero()
    }

    /// The common degree of all terms, or None when zero or mixed.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let first = it.next()?.size();
        if it.all(|l| l.size() == first) {
            Some(first)
        } else {
            None
        }
    }

    fn merged_ctx(&self, other: &Element) -> Result<Option<(Side, Family)>> {
        match (self.ctx, other.ctx) {
            (None, c) | (c, None) => Ok(c),
            (Some((s1, f1)), Some((s2, f2))) => {
                if s1 != s2 {
                    Err(Error::SideMismatch { expected: s1, found: s2 })
                } else if f1 != f2 {
                    Err(Error::FamilyMismatch { left: f1, right: f2 })
                } else {
                    Ok(Some((s1, f1)))
                }
            }
        }
    }

    /// Coefficient-wise sum; requires matching side and family.
    pub fn add(&self, other: &Element) -> Result<Element> {
        let ctx = self.merged_ctx(other)?;
        let mut terms = self.terms.clone();
        for (label, coeff) in &other.terms {
            let entry = terms.entry(label.clone()).or_insert(0);
            *entry = arith::add(*entry, *coeff)?;
        }
        terms.retain(|_, c| *c != 0);
        if terms.is_empty() {
            return Ok(Element::zero());
        }
        Ok(Element { ctx, terms })
    }

    pub fn scale(&self, c: i64) -> Result<Element> {
        if c == 0 {
            return Ok(Element::zero());
        }
        let mut terms = BTreeMap::new();
        for (label, coeff) in &self.terms {
            terms.insert(label.clone(), arith::mul(*coeff, c)?);
        }
        Ok(Element { ctx: self.ctx, terms })
    }

    /// JSON rendering: a sorted array of `{label, coeff}` objects.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(l, c)| json!({ "label": l.to_string(), "coeff": c }))
                .collect(),
        )
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (label, coeff)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}*{label}")?;
        }
        Ok(())
    }
}

/// Sparse integer combination of pure tensors `label (x) label`, both
/// factors on one side of one family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    ctx: Option<(Side, Family)>,
    terms: BTreeMap<(Label, Label), i64>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement { ctx: None, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(side: Side, family: Family, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((Label, Label), i64)>,
    {
        let mut map = BTreeMap::new();
        for (key, coeff) in terms {
            let entry = map.entry(key).or_insert(0i64);
            *entry = arith::add(*entry, coeff)?;
        }
        map.retain(|_, c| *c != 0);
        if map.is_empty() {
            return Ok(TensorElement::zero());
        }
        Ok(TensorElement { ctx: Some((side, family)), terms: map })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn side(&self) -> Option<Side> {
        self.ctx.map(|(s, _)| s)
    }

    pub fn family(&self) -> Option<Family> {
        self.ctx.map(|(_, f)| f)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Label, Label), i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn coeff(&self, left: &Label, right: &Label) -> i64 {
        self.terms.get(&(left.clone(), right.clone())).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        let ctx = match (self.ctx, other.ctx) {
            (None, c) | (c, None) => c,
            (Some((s1, f1)), Some((s2, f2))) => {
                if s1 != s2 {
                    return Err(Error::SideMismatch { expected: s1, found: s2 });
                }
                if f1 != f2 {
                    return Err(Error::FamilyMismatch { left: f1, right: f2 });
                }
                Some((s1, f1))
            }
        };
        let mut terms = self.terms.clone();
        for (key, coeff) in &other.terms {
            let entry = terms.entry(key.clone()).or_insert(0);
            *entry = arith::add(*entry, *coeff)?;
        }
        terms.retain(|_, c| *c != 0);
        if terms.is_empty() {
            return Ok(TensorElement::zero());
        }
        Ok(TensorElement { ctx, terms })
    }

    pub fn scale(&self, c: i64) -> Result<TensorElement> {
        if c == 0 {
            return Ok(TensorElement::zero());
        }
        let mut terms = BTreeMap::new();
        for (key, coeff) in &self.terms {
            terms.insert(key.clone(), arith::mul(*coeff, c)?);
        }
        Ok(TensorElement { ctx: self.ctx, terms })
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((l, r), coeff)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}*{l}(x){r}")?;
        }
        Ok(())
    }
}

fn check_pairable(
    x_ctx: Option<(Side, Family)>,
    y_ctx: Option<(Side, Family)>,
) -> Result<()> {
    if let Some((sx, fx)) = x_ctx {
        if sx != Side::Lower {
            return Err(Error::SideMismatch { expected: Side::Lower, found: sx });
        }
        if let Some((_, fy)) = y_ctx {
            if fx != fy {
                return Err(Error::FamilyMismatch { left: fx, right: fy });
            }
        }
    }
    if let Some((sy, _)) = y_ctx {
        if sy != Side::Upper {
            return Err(Error::SideMismatch { expected: Side::Upper, found: sy });
        }
    }
    Ok(())
}

/// Dual-basis pairing `<x, y>`: bilinear extension of
/// `<p_lam, s_mu> = delta_{lam,mu}`. `x` lives on the lower side, `y` on
/// the upper side of the same family; terms of different degree (hence
/// different labels) contribute nothing.
pub fn pair(x: &Element, y: &Element) -> Result<i64> {
    check_pairable(x.ctx, y.ctx)?;
    let mut out: i64 = 0;
    for (label, cx) in x.terms() {
        let cy = y.coeff(label);
        if cy != 0 {
            out = arith::add(out, arith::mul(cx, cy)?)?;
        }
    }
    Ok(out)
}

/// Factor-wise pairing of tensors: `<a(x)b, c(x)d> = <a,c><b,d>` extended
/// bilinearly.
pub fn pair_tensor(x: &TensorElement, y: &TensorElement) -> Result<i64> {
    check_pairable(x.ctx, y.ctx)?;
    let mut out: i64 = 0;
    for (key, cx) in x.terms() {
        let cy = y.terms.get(key).copied().unwrap_or(0);
        if cy != 0 {
            out = arith::add(out, arith::mul(cx, cy)?)?;
        }
    }
    Ok(out)
}
