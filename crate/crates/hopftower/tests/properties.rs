//! Property-based tests for the algebraic laws the crate leans on.

use proptest::prelude::*;

use hopftower::combinat::{
    compositions_of, descent_composition, partitions_of, young_covers, Composition, Partition,
};
use hopftower::element::{pair as pairing, Element, Family, Label, Side};
use hopftower::graph::{check_duality, fomin_check, DualityOutcome, GradedGraph};
use hopftower::instances::nsym_qsym::{fundamental_coproduct, ribbon_product};

const FAM: Family = Family("prop");

fn partition_strategy(max_size: u32) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| prop::sample::select(partitions_of(n)))
}

fn composition_strategy(max_size: u32) -> impl Strategy<Value = Composition> {
    (0..=max_size).prop_flat_map(|n| prop::sample::select(compositions_of(n)))
}

fn element_strategy(side: Side, max_size: u32) -> impl Strategy<Value = Element> {
    prop::collection::vec((partition_strategy(max_size), -4i64..=4), 0..4).prop_map(
        move |terms| {
            Element::from_terms(
                side,
                FAM,
                terms.into_iter().map(|(p, c)| (Label::Partition(p), c)),
            )
            .unwrap()
        },
    )
}

/// Young graph with every multiplicity scaled by `k`, from the cover
/// relation directly.
fn scaled_young_graph(max_rank: usize, k: i64) -> GradedGraph {
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
                m[i][j] = k;
            }
        }
        matrices.push(m);
    }
    GradedGraph::new(ranks, matrices).unwrap()
}

proptest! {
    #[test]
    fn element_addition_is_commutative_and_associative(
        x in element_strategy(Side::Upper, 4),
        y in element_strategy(Side::Upper, 4),
        z in element_strategy(Side::Upper, 4),
    ) {
        prop_assert_eq!(x.add(&y).unwrap(), y.add(&x).unwrap());
        prop_assert_eq!(
            x.add(&y).unwrap().add(&z).unwrap(),
            x.add(&y.add(&z).unwrap()).unwrap()
        );
    }

    #[test]
    fn scaling_distributes_over_addition(
        x in element_strategy(Side::Upper, 4),
        y in element_strategy(Side::Upper, 4),
        c in -5i64..=5,
    ) {
        let lhs = x.add(&y).unwrap().scale(c).unwrap();
        let rhs = x.scale(c).unwrap().add(&y.scale(c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_is_bilinear(
        x in element_strategy(Side::Lower, 4),
        y in element_strategy(Side::Lower, 4),
        z in element_strategy(Side::Upper, 4),
        a in -3i64..=3,
        b in -3i64..=3,
    ) {
        let combined = x.scale(a).unwrap().add(&y.scale(b).unwrap()).unwrap();
        let lhs = pairing(&combined, &z).unwrap();
        let rhs = a * pairing(&x, &z).unwrap() + b * pairing(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_vanishes_across_degrees(
        lam in partition_strategy(5),
        mu in partition_strategy(5),
    ) {
        prop_assume!(lam.size() != mu.size());
        let x = Element::basis(Side::Lower, FAM, Label::Partition(lam));
        let y = Element::basis(Side::Upper, FAM, Label::Partition(mu));
        prop_assert_eq!(pairing(&x, &y).unwrap(), 0);
    }

    #[test]
    fn young_covers_grow_by_one_cell(lam in partition_strategy(8)) {
        for mu in young_covers(&lam) {
            prop_assert_eq!(mu.size(), lam.size() + 1);
            prop_assert!(mu.contains(&lam));
        }
    }

    #[test]
    fn descent_composition_recovers_the_descent_set(
        w in Just((1u32..=7).collect::<Vec<u32>>()).prop_shuffle()
    ) {
        let comp = descent_composition(&w).unwrap();
        prop_assert_eq!(comp.size() as usize, w.len());
        let mut boundary = 0usize;
        let mut descents = Vec::new();
        for part in comp.parts() {
            boundary += *part as usize;
            if boundary < w.len() {
                descents.push(boundary);
            }
        }
        for i in 1..w.len() {
            let is_descent = w[i - 1] > w[i];
            prop_assert_eq!(is_descent, descents.contains(&i));
        }
    }

    /// The ribbon product and the fundamental coproduct are transposes:
    /// `c` appears in `R_a * R_b` iff `(a, b)` is a cut of `c`.
    #[test]
    fn ribbon_product_transposes_fundamental_coproduct(
        a in composition_strategy(4),
        b in composition_strategy(4),
        c in composition_strategy(6),
    ) {
        let lhs = ribbon_product(&a, &b).unwrap().contains(&c);
        let rhs = fundamental_coproduct(&c)
            .unwrap()
            .contains(&(a.clone(), b.clone()));
        prop_assert_eq!(lhs, rhs);
    }

    /// Scaling one side of a dual pair scales the differential coefficient
    /// and keeps the path-count identity exact.
    #[test]
    fn scaled_young_pairs_stay_dual_and_satisfy_fomin(k in 1i64..=3) {
        let gamma = scaled_young_graph(5, k);
        let gamma_prime = scaled_young_graph(5, 1);
        prop_assert_eq!(
            check_duality(&gamma, &gamma_prime, 5).unwrap(),
            DualityOutcome::Dual { r: k }
        );
        let report = fomin_check(&gamma, &gamma_prime, 5).unwrap();
        prop_assert_eq!(report.r, k);
        prop_assert!(report.passed());
    }
}
