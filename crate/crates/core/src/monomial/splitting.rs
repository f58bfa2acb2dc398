use serde::{Deserialize, Serialize};

use super::betti::cm_regularity;
use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::groebner::RegBracket;

/// One splitting step: peel off `v^q` where `v` is the variable index and
/// `q` defaults to the least positive exponent of `v` among the generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitStep {
    pub var: usize,
    pub power: Option<u32>,
}

/// Upper bound via `reg(J + v^q L) ≤ max{reg J + q − 1, reg(J + L) + q}`
/// where `J` is generated by the `v`-free generators (so `v^q` is regular on
/// `R/J`). `None` stands for the zero or unit ideal.
fn split_upper(ideal: &MonomialIdeal, hint: &[SplitStep]) -> Result<Option<i64>> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(None);
    }
    let field = ideal.ring().field();
    let Some((step, rest)) = hint.split_first() else {
        return cm_regularity(ideal, field).map(Some);
    };
    if ideal.support().len() <= 2 {
        return cm_regularity(ideal, field).map(Some);
    }
    let v = step.var;
    if v >= ideal.ring().arity() {
        return Err(Error::InvalidHint(format!("variable index {v} out of range")));
    }
    let positive: Vec<u32> = ideal.gens().iter().map(|g| g.exp(v)).filter(|&e| e > 0).collect();
    let Some(&least) = positive.iter().min() else {
        return split_upper(ideal, rest);
    };
    let q = step.power.unwrap_or(least);
    if q == 0 || q > least {
        let name = &ideal.ring().vars()[v];
        return Err(Error::InvalidHint(format!(
            "{name}^{q} does not divide every generator involving {name} (least exponent {least})"
        )));
    }
    let (free, rest_gens): (Vec<_>, Vec<_>) = ideal.gens().iter().cloned().partition(|g| g.exp(v) == 0);
    let j = MonomialIdeal::from_minimal(ideal.ring(), free);
    let l_gens = rest_gens.iter().map(|g| g.with_exp(v, g.exp(v) - q)).collect();
    let l = MonomialIdeal::from_minimal(ideal.ring(), l_gens);
    let jl = j.sum(&l)?;
    let a = split_upper(&j, rest)?.map(|r| r + q as i64 - 1);
    let b = split_upper(&jl, rest)?.map(|r| r + q as i64);
    Ok(a.into_iter().chain(b).max())
}

/// Regularity bracket for a monomial ideal: the upper side from the
/// splitting recursion driven by `hint` (exact engine at the leaves), the
/// lower side from the largest socle degree plus one, or `d(I)`.
pub fn reg_bracket_splitting(ideal: &MonomialIdeal, hint: &[SplitStep]) -> Result<RegBracket> {
    let d = ideal.max_gen_degree()? as i64;
    let upper = split_upper(ideal, hint)?.expect("proper nonzero ideal");
    let socle = ideal.socle_generators().iter().map(|g| g.degree() as i64 + 1).max();
    let (lower, lower_method) = match socle {
        Some(s) if s >= d => (s, "socle-degree+1".to_string()),
        _ => (d, "max-generator-degree".to_string()),
    };
    let upper_method = if hint.is_empty() { "exact-betti" } else { "splitting" };
    Ok(RegBracket { lower, upper, lower_method, upper_method: upper_method.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingSpec;

    #[test]
    fn splitting_bound_for_power_plus_monomial() {
        let r = RingSpec::degrevlex(2, &["x", "y", "a", "b"]).unwrap();
        let (n, q) = (4u32, 4u32);
        let qn = MonomialIdeal::parse(&r, "x^3, y^3").unwrap().power(n).unwrap();
        let u = qn.sum(&MonomialIdeal::parse(&r, "x^4*y^4*a^4").unwrap()).unwrap();
        let b = reg_bracket_splitting(&u, &[SplitStep { var: 2, power: None }]).unwrap();
        assert!(b.upper <= (3 * n + q + 2) as i64);
        let exact = cm_regularity(&u, r.field()).unwrap();
        assert!(b.lower <= exact && exact <= b.upper);
    }

    #[test]
    fn invalid_hint() {
        let r = RingSpec::degrevlex(2, &["x", "y", "a"]).unwrap();
        let i = MonomialIdeal::parse(&r, "x^3, y^3, x*a^2, y*a^5").unwrap();
        assert!(matches!(
            reg_bracket_splitting(&i, &[SplitStep { var: 2, power: Some(3) }]),
            Err(Error::InvalidHint(_))
        ));
        assert!(reg_bracket_splitting(&i, &[SplitStep { var: 2, power: Some(2) }]).is_ok());
    }
}
