//! `λ = 10` certificates: a verified span-10 closed-form labeling for the
//! upper bound and the three-vertex degree lemma for the lower bound.

use serde::{Deserialize, Serialize};

use crate::bundle::{make_bundle, BundleSpec};
use crate::error::{Error, Result};
use crate::labeling::{span, verify_l21};
use crate::solver::{lower_bound, Justification};
use crate::theorem::{generate_labeling, Family, FormulaParams};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub m: usize,
    pub n: usize,
    pub shift: usize,
    pub family: Family,
    pub a: u8,
    pub upper: u32,
    pub lower: u32,
    pub witness: Vec<u32>,
}

pub const CERTIFIED_LAMBDA: u32 = 10;

pub fn certify_theorem_instance(m: usize, n: usize, shift: usize) -> Result<Certificate> {
    let params = FormulaParams::classified(m, n, shift)?;
    let graph = make_bundle(&BundleSpec::shifted(m, n, shift)?)?;
    let labeling = generate_labeling(&params);

    let violations = verify_l21(&graph, &labeling)?;
    if !violations.is_empty() {
        return Err(Error::VerificationFailed(violations.len()));
    }
    let upper = span(&labeling)?;
    if upper != CERTIFIED_LAMBDA {
        return Err(Error::VerificationFailed(0));
    }
    let bound = lower_bound(&graph);
    if bound.justification != Justification::Lemma1 || bound.value != CERTIFIED_LAMBDA {
        return Err(Error::LowerBoundMismatch(bound.value));
    }

    let formula = params.formula();
    Ok(Certificate {
        m,
        n,
        shift,
        family: formula.family(),
        a: formula.a(),
        upper,
        lower: bound.value,
        witness: labeling.labels().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certifies_qualifying_instances() {
        let c = certify_theorem_instance(13, 11, 3).unwrap();
        assert_eq!((c.family, c.a, c.upper, c.lower), (Family::F, 1, 10, 10));
        assert_eq!(c.witness.len(), 143);
        let c = certify_theorem_instance(3, 11, 10).unwrap();
        assert_eq!((c.upper, c.lower), (10, 10));
    }

    #[test]
    fn refuses_unqualified_shift() {
        assert_eq!(
            certify_theorem_instance(13, 11, 7),
            Err(Error::UnqualifiedShift {
                m: 13,
                n: 11,
                shift: 7
            })
        );
    }

    #[test]
    fn json_field_order() {
        let c = certify_theorem_instance(3, 11, 10).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.starts_with(
            r#"{"m":3,"n":11,"shift":10,"family":"F","a":1,"upper":10,"lower":10,"witness":[0,"#
        ));
    }
}
