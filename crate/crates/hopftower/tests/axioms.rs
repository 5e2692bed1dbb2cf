//! Empirical dual-Hopf axiom checks on the shipped instances, plus fault
//! injection: a corrupted structure constant must be detected with the
//! exact offending tuple.

use std::sync::Arc;

use hopftower::combinat::{Composition, Partition};
use hopftower::element::{Element, Family, Label, Side, TensorElement};
use hopftower::error::Error;
use hopftower::hopf::{HopfPair, PairStructure};
use hopftower::instances::{by_key, nsym_qsym, sym};

#[test]
fn duality_passes_on_both_instances_to_degree_six() {
    for key in ["sym", "nsym-qsym"] {
        let pair = by_key(key).unwrap();
        let report = pair.verify_duality(6).unwrap();
        assert!(report.passed(), "{key}: {:?}", report.violations.first());
        assert_eq!(report.check, "duality");
        assert_eq!(report.rank, 6);
    }
}

#[test]
fn bialgebra_passes_on_both_instances_to_degree_five() {
    for key in ["sym", "nsym-qsym"] {
        let pair = by_key(key).unwrap();
        let report = pair.verify_bialgebra(5).unwrap();
        assert!(report.passed(), "{key}: {:?}", report.violations.first());
    }
}

#[test]
fn report_json_shape() {
    let pair = sym();
    let report = pair.verify_duality(2).unwrap();
    let json = report.to_json();
    assert_eq!(json["check"], "duality");
    assert_eq!(json["rank"], 2);
    assert_eq!(json["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn every_degree_one_basis_element_is_primitive() {
    for key in ["sym", "nsym-qsym"] {
        let pair = by_key(key).unwrap();
        for side in [Side::Lower, Side::Upper] {
            for id in pair.degree_one_elements(side) {
                let elem = pair.basis_element(side, &id.label);
                assert!(pair.is_primitive(side, &elem).unwrap(), "{key} {id}");
            }
        }
    }
}

#[test]
fn s2_and_the_unit_are_not_primitive() {
    let pair = sym();
    let s2 = pair.basis_element(
        Side::Upper,
        &Label::Partition(Partition::new(vec![2]).unwrap()),
    );
    assert!(!pair.is_primitive(Side::Upper, &s2).unwrap());
    let unit = pair.unit(Side::Upper);
    assert!(!pair.is_primitive(Side::Upper, &unit).unwrap());
}

#[test]
fn is_primitive_requires_homogeneous_input() {
    let pair = sym();
    let s1 = pair.basis_element(
        Side::Upper,
        &Label::Partition(Partition::new(vec![1]).unwrap()),
    );
    let mixed = s1.add(&pair.unit(Side::Upper)).unwrap();
    assert!(matches!(
        pair.is_primitive(Side::Upper, &mixed),
        Err(Error::NotHomogeneous)
    ));
}

#[test]
fn product_and_coproduct_match_the_expected_small_values() {
    let pair = sym();
    let lab = |parts: &[u32]| Label::Partition(Partition::new(parts.to_vec()).unwrap());
    let s1 = pair.basis_element(Side::Upper, &lab(&[1]));
    let square = pair.product(Side::Upper, &s1, &s1).unwrap();
    let expected = Element::from_terms(
        Side::Upper,
        pair.family(),
        [(lab(&[2]), 1), (lab(&[1, 1]), 1)],
    )
    .unwrap();
    assert_eq!(square, expected);

    // unit product leaves anything unchanged
    assert_eq!(pair.product(Side::Upper, &pair.unit(Side::Upper), &square).unwrap(), square);

    // coproduct of the unit is 1 (x) 1
    let unit_label = pair.unit_label(Side::Upper);
    let cop = pair.coproduct(Side::Upper, &pair.unit(Side::Upper)).unwrap();
    let expected = TensorElement::from_terms(
        Side::Upper,
        pair.family(),
        [((unit_label.clone(), unit_label.clone()), 1)],
    )
    .unwrap();
    assert_eq!(cop, expected);

    // coproduct of s_(2): s_() (x) s_(2) + s_(1) (x) s_(1) + s_(2) (x) s_()
    let cop = pair
        .coproduct(Side::Upper, &pair.basis_element(Side::Upper, &lab(&[2])))
        .unwrap();
    let expected = TensorElement::from_terms(
        Side::Upper,
        pair.family(),
        [
            ((lab(&[]), lab(&[2])), 1),
            ((lab(&[1]), lab(&[1])), 1),
            ((lab(&[2]), lab(&[])), 1),
        ],
    )
    .unwrap();
    assert_eq!(cop, expected);
}

#[test]
fn ribbon_product_through_the_pair_matches_the_transpose_route() {
    let pair = nsym_qsym();
    let lab = |parts: &[u32]| Label::Composition(Composition::new(parts.to_vec()).unwrap());
    let r1 = pair.basis_element(Side::Lower, &lab(&[1]));
    let square = pair.product(Side::Lower, &r1, &r1).unwrap();
    let expected = Element::from_terms(
        Side::Lower,
        pair.family(),
        [(lab(&[2]), 1), (lab(&[1, 1]), 1)],
    )
    .unwrap();
    assert_eq!(square, expected);

    // noncommutativity witness
    let r21 = pair.basis_element(Side::Lower, &lab(&[2, 1]));
    let left = pair.product(Side::Lower, &r21, &r1).unwrap();
    let right = pair.product(Side::Lower, &r1, &r21).unwrap();
    assert_ne!(left, right);
}

/// Wraps a structure and overrides one upper product: `s_(1) * s_(1)`
/// loses its `s_(1,1)` term.
struct CorruptUpperProduct(Arc<dyn PairStructure>);

impl PairStructure for CorruptUpperProduct {
    fn family(&self) -> Family {
        self.0.family()
    }
    fn basis(&self, side: Side, degree: u32) -> Vec<Label> {
        self.0.basis(side, degree)
    }
    fn unit_label(&self, side: Side) -> Label {
        self.0.unit_label(side)
    }
    fn product(&self, side: Side, a: &Label, b: &Label) -> hopftower::Result<Element> {
        let one = Label::Partition(Partition::new(vec![1]).unwrap());
        if side == Side::Upper && *a == one && *b == one {
            let two = Label::Partition(Partition::new(vec![2]).unwrap());
            return Element::from_terms(side, self.family(), [(two, 1)]);
        }
        self.0.product(side, a, b)
    }
    fn coproduct(&self, side: Side, a: &Label) -> hopftower::Result<TensorElement> {
        self.0.coproduct(side, a)
    }
}

#[test]
fn corrupted_product_constant_is_reported_with_the_exact_triple() {
    let pair = HopfPair::new(Arc::new(CorruptUpperProduct(Arc::new(
        hopftower::instances::sym::SymStructure,
    ))));
    let report = pair.verify_duality(2).unwrap();
    assert_eq!(report.violations.len(), 1, "{:?}", report.violations);
    let v = &report.violations[0];
    assert_eq!(v.equation, "<delta x, y(x)z> = <x, y*z>");
    assert_eq!(v.labels, vec!["[1,1]", "[1]", "[1]"]);
    assert_eq!(v.lhs, "1");
    assert_eq!(v.rhs, "0");

    // the bialgebra sweep flags it too (compatibility breaks)
    let report = pair.verify_bialgebra(2).unwrap();
    assert!(!report.passed());
}

/// Drops the middle cut from `delta F_(2)`.
struct CorruptUpperCoproduct(Arc<dyn PairStructure>);

impl PairStructure for CorruptUpperCoproduct {
    fn family(&self) -> Family {
        self.0.family()
    }
    fn basis(&self, side: Side, degree: u32) -> Vec<Label> {
        self.0.basis(side, degree)
    }
    fn unit_label(&self, side: Side) -> Label {
        self.0.unit_label(side)
    }
    fn product(&self, side: Side, a: &Label, b: &Label) -> hopftower::Result<Element> {
        self.0.product(side, a, b)
    }
    fn coproduct(&self, side: Side, a: &Label) -> hopftower::Result<TensorElement> {
        let two = Label::Composition(Composition::new(vec![2]).unwrap());
        if side == Side::Upper && *a == two {
            let unit = self.unit_label(side);
            return TensorElement::from_terms(
                side,
                self.family(),
                [((unit.clone(), two.clone()), 1), ((two.clone(), unit), 1)],
            );
        }
        self.0.coproduct(side, a)
    }
}

#[test]
fn corrupted_coproduct_constant_is_reported_with_the_exact_triple() {
    let pair = HopfPair::new(Arc::new(CorruptUpperCoproduct(Arc::new(
        hopftower::instances::nsym_qsym::NsymQsymStructure,
    ))));
    let report = pair.verify_duality(2).unwrap();
    assert_eq!(report.violations.len(), 1, "{:?}", report.violations);
    let v = &report.violations[0];
    assert_eq!(v.equation, "<x*y, z> = <x(x)y, delta z>");
    assert_eq!(v.labels, vec!["(1)", "(1)", "(2)"]);
    assert_eq!(v.lhs, "1");
    assert_eq!(v.rhs, "0");
}

/// Produces a negative constant, which must be rejected outright.
struct NegativeConstant(Arc<dyn PairStructure>);

impl PairStructure for NegativeConstant {
    fn family(&self) -> Family {
        self.0.family()
    }
    fn basis(&self, side: Side, degree: u32) -> Vec<Label> {
        self.0.basis(side, degree)
    }
    fn unit_label(&self, side: Side) -> Label {
        self.0.unit_label(side)
    }
    fn product(&self, side: Side, a: &Label, b: &Label) -> hopftower::Result<Element> {
        let one = Label::Partition(Partition::new(vec![1]).unwrap());
        if side == Side::Upper && *a == one && *b == one {
            let two = Label::Partition(Partition::new(vec![2]).unwrap());
            return Element::from_terms(side, self.family(), [(two, -1)]);
        }
        self.0.product(side, a, b)
    }
    fn coproduct(&self, side: Side, a: &Label) -> hopftower::Result<TensorElement> {
        self.0.coproduct(side, a)
    }
}

#[test]
fn negative_structure_constants_are_errors_not_data() {
    let pair = HopfPair::new(Arc::new(NegativeConstant(Arc::new(
        hopftower::instances::sym::SymStructure,
    ))));
    assert!(matches!(
        pair.verify_duality(2),
        Err(Error::NegativeStructureConstant { .. })
    ));
}
