//! Shipped structure-constant instances and the weighted degree-1
//! elements used to seed the graph construction.

use std::sync::Arc;

use crate::element::{Element, Side};
use crate::error::{Error, Result};
use crate::hopf::HopfPair;

pub mod nsym_qsym;
pub mod sym;

/// Keys accepted by [`by_key`].
pub const KEYS: [&str; 2] = ["sym", "nsym-qsym"];

/// Instance registry: `"sym"` (self-dual Schur) or `"nsym-qsym"`
/// (ribbon/fundamental).
pub fn by_key(key: &str) -> Result<HopfPair> {
    match key {
        "sym" => Ok(sym()),
        "nsym-qsym" => Ok(nsym_qsym()),
        other => Err(Error::UnknownInstance(other.to_string())),
    }
}

pub fn sym() -> HopfPair {
    HopfPair::new(Arc::new(sym::SymStructure))
}

pub fn nsym_qsym() -> HopfPair {
    HopfPair::new(Arc::new(nsym_qsym::NsymQsymStructure))
}

/// The weighted degree-1 elements `alpha = sum a_i p_i` (lower side) and
/// `beta = sum b_i s_i` (upper side). One weight pair per degree-1 basis
/// element, all weights >= 1; the differential coefficient of the graph
/// pair they generate is `<alpha, beta> = sum a_i b_i`.
pub fn canonical_alpha_beta(
    pair: &HopfPair,
    weights: &[(i64, i64)],
) -> Result<(Element, Element)> {
    let lower = pair.degree_one_elements(Side::Lower);
    let upper = pair.degree_one_elements(Side::Upper);
    debug_assert_eq!(lower.len(), upper.len());
    if weights.len() != lower.len() {
        return Err(Error::WeightCount { expected: lower.len(), found: weights.len() });
    }
    for &(a, b) in weights {
        if a < 1 {
            return Err(Error::NonpositiveWeight(a));
        }
        if b < 1 {
            return Err(Error::NonpositiveWeight(b));
        }
    }
    let alpha = Element::from_terms(
        Side::Lower,
        pair.family(),
        lower.into_iter().zip(weights).map(|(id, &(a, _))| (id.label, a)),
    )?;
    let beta = Element::from_terms(
        Side::Upper,
        pair.family(),
        upper.into_iter().zip(weights).map(|(id, &(_, b))| (id.label, b)),
    )?;
    Ok((alpha, beta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{Composition, Partition};
    use crate::element::{pair as pairing, Label};

    #[test]
    fn registry_resolves_known_keys_only() {
        assert!(by_key("sym").is_ok());
        assert!(by_key("nsym-qsym").is_ok());
        assert!(matches!(by_key("qsym"), Err(Error::UnknownInstance(_))));
    }

    #[test]
    fn degree_one_bases_are_singletons() {
        let s = sym();
        let ids = s.degree_one_elements(Side::Upper);
        assert_eq!(ids.len(), 1);
        assert_eq!(ids[0].label, Label::Partition(Partition::new(vec![1]).unwrap()));

        let nq = nsym_qsym();
        for side in [Side::Lower, Side::Upper] {
            let ids = nq.degree_one_elements(side);
            assert_eq!(ids.len(), 1);
            assert_eq!(ids[0].label, Label::Composition(Composition::new(vec![1]).unwrap()));
        }
    }

    #[test]
    fn alpha_beta_pair_to_the_weight_product() {
        let s = sym();
        let (alpha, beta) = canonical_alpha_beta(&s, &[(1, 1)]).unwrap();
        assert_eq!(pairing(&alpha, &beta).unwrap(), 1);
        let (alpha, beta) = canonical_alpha_beta(&s, &[(1, 2)]).unwrap();
        assert_eq!(pairing(&alpha, &beta).unwrap(), 2);
        let nq = nsym_qsym();
        let (alpha, beta) = canonical_alpha_beta(&nq, &[(2, 3)]).unwrap();
        assert_eq!(pairing(&alpha, &beta).unwrap(), 6);
    }

    #[test]
    fn alpha_beta_rejects_bad_weights() {
        let s = sym();
        assert!(matches!(
            canonical_alpha_beta(&s, &[]),
            Err(Error::WeightCount { expected: 1, found: 0 })
        ));
        assert!(matches!(
            canonical_alpha_beta(&s, &[(0, 1)]),
            Err(Error::NonpositiveWeight(0))
        ));
        assert!(matches!(
            canonical_alpha_beta(&s, &[(1, -2)]),
            Err(Error::NonpositiveWeight(-2))
        ));
    }
}
