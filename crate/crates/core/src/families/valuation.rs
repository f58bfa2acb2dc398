use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{monomials_of_degree, Monomial, Polynomial};
use crate::error::{BudgetReport, Error, Result};
use crate::groebner::IdealPresentation;

const SPAN_LIMIT: usize = 2_000_000;

/// Values of the Gröbner valuation (exponent of the least term) on the
/// degree-`d` piece of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationTable {
    pub ideal: String,
    pub degree: u32,
    /// Distinct least-term exponents, sorted. Their number is `dim_k I_d`.
    pub values: Vec<Vec<u32>>,
    /// Degree-`d` exponents outside the value set; their number is
    /// `dim_k (R/I)_d`.
    pub complement: Vec<Vec<u32>>,
}

impl ValuationTable {
    pub fn dim(&self) -> usize {
        self.values.len()
    }
}

/// Triangularizes a spanning set of `I_d` with pivots on least terms.
pub fn groebner_valuation_values(ideal: &IdealPresentation, d: u32) -> Result<ValuationTable> {
    let ring = ideal.ring();
    if !ideal.gens().iter().all(|g| g.is_homogeneous()) {
        return Err(Error::InvalidArgument("valuation tables need homogeneous generators".into()));
    }
    let field = ring.field();
    let arity = ring.arity();
    let mut pivots: HashMap<Monomial, Polynomial> = HashMap::new();
    let mut spanned = 0usize;
    for g in ideal.gens() {
        let gd = g.degree().expect("nonzero generator");
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(arity, d - gd) {
            spanned += 1;
            if spanned > SPAN_LIMIT {
                return Err(Error::Budget(BudgetReport {
                    what: format!("degree-{d} spanning set"),
                    steps: spanned as u64,
                    degree: d,
                    basis_size: pivots.len(),
                    pending_pairs: 0,
                }));
            }
            let mut p = g.mul_monomial(&m);
            while let Some(t) = p.least_term().cloned() {
                match pivots.get(&t.mono) {
                    Some(piv) => p = p.sub(&piv.scale(&t.coeff)),
                    None => {
                        let inv = field.inv(&t.coeff).expect("nonzero coefficient");
                        pivots.insert(t.mono.clone(), p.scale(&inv));
                        break;
                    }
                }
            }
        }
    }
    let mut values: Vec<Vec<u32>> = pivots.keys().map(|m| m.exps().to_vec()).collect();
    values.sort();
    let complement = monomials_of_degree(arity, d)
        .into_iter()
        .filter(|m| !pivots.contains_key(m))
        .map(|m| m.exps().to_vec())
        .collect();
    let ideal_text = ideal.gens().iter().map(|g| g.render()).collect::<Vec<_>>().join(", ");
    Ok(ValuationTable { ideal: ideal_text, degree: d, values, complement })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingSpec;
    use proptest::prelude::*;

    #[test]
    fn hand_examples() {
        let r = RingSpec::degrevlex(0, &["x", "y"]).unwrap();
        let m2 = IdealPresentation::parse(&r, "x^2, x*y, y^2").unwrap();
        let t = groebner_valuation_values(&m2, 2).unwrap();
        assert_eq!(t.values, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert!(t.complement.is_empty());
        let i = IdealPresentation::parse(&r, "x^2 + y^2, x*y").unwrap();
        let t = groebner_valuation_values(&i, 2).unwrap();
        assert_eq!(t.values, vec![vec![0, 2], vec![1, 1]]);
        assert_eq!(t.complement, vec![vec![2, 0]]);
        assert!(groebner_valuation_values(&i, 1).unwrap().values.is_empty());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn hilbert_identity_two_variables(c in 1i64..7, e in 2u32..5, k in 0u32..9) {
            let r = RingSpec::degrevlex(7, &["x", "y"]).unwrap();
            let text = format!("x^{e} + {c}*y^{e}, x*y^{}", e - 1);
            let i = IdealPresentation::parse(&r, &text).unwrap();
            let t = groebner_valuation_values(&i, k).unwrap();
            prop_assert_eq!(t.complement.len() as u64, i.graded_dimension(k).unwrap());
            prop_assert_eq!(t.values.len() + t.complement.len(), k as usize + 1);
        }
    }
}
