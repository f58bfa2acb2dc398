use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use super::{delta_family_sample, noetherian_stabilization_test, DeltaSample, GradedFamily, Member, Stabilization};
use crate::error::{Error, Result};
use crate::groebner::RegBracket;
use crate::monomial::cm_regularity;
use crate::polyhedra::Rational;

pub(crate) fn ser_rationals<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegMode {
    /// Exact regularity for monomial members under the generator threshold,
    /// a bracket otherwise.
    Exact,
    /// Initial-ideal upper bound and socle lower bound for every member.
    Bracket,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum RegValue {
    Exact(i64),
    Bracket(RegBracket),
}

impl RegValue {
    pub fn exact(&self) -> Option<i64> {
        match self {
            RegValue::Exact(r) => Some(*r),
            RegValue::Bracket(b) if b.is_exact() => Some(b.lower),
            RegValue::Bracket(_) => None,
        }
    }

    pub fn bounds(&self) -> (i64, i64) {
        match self {
            RegValue::Exact(r) => (*r, *r),
            RegValue::Bracket(b) => (b.lower, b.upper),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticRecord {
    pub n: usize,
    pub reg: RegValue,
    pub d: u32,
    pub mu: usize,
    pub reg_over_n: String,
    pub d_over_n: String,
}

/// Finite-sample asymptotic data for `n = 1..=N`. Nothing here asserts that
/// a limit exists.
#[derive(Clone, Debug, Serialize)]
pub struct AsymptoticReport {
    pub family: String,
    pub n_max: usize,
    pub reg_mode: RegMode,
    pub records: Vec<AsymptoticRecord>,
    /// `min_n d(I_n)/n` over the sample and the index attaining it.
    pub fekete_inf_d_over_n: String,
    pub fekete_argmin: usize,
    pub delta: Option<DeltaSample>,
    pub stabilization: Option<Stabilization>,
}

fn frac(num: i64, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn member_reg(member: &Member, mode: RegMode) -> Result<RegValue> {
    if let (RegMode::Exact, Member::Monomial(m)) = (mode, member) {
        match cm_regularity(m, m.ring().field()) {
            Ok(r) => return Ok(RegValue::Exact(r)),
            Err(Error::Threshold { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let p = member.presentation();
    let d = member.max_generator_degree()?.unwrap_or(0);
    Ok(RegValue::Bracket(p.reg_bracket(Some(4 * d + 64))?))
}

pub fn asymptotic_report(family: &GradedFamily, max_n: usize, mode: RegMode) -> Result<AsymptoticReport> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let members: Vec<Member> = (1..=max_n).map(|n| family.member(n)).collect::<Result<_>>()?;
    let records: Vec<AsymptoticRecord> = members
        .par_iter()
        .enumerate()
        .map(|(k, m)| {
            let n = k + 1;
            let reg = member_reg(m, mode)?;
            let d = m.max_generator_degree()?.ok_or_else(|| Error::InvalidArgument(format!("I_{n} is zero")))?;
            let mu = m.num_min_gens()?;
            let reg_over_n = match &reg {
                RegValue::Exact(r) => frac(*r, n).to_string(),
                RegValue::Bracket(b) => format!("[{}, {}]", frac(b.lower, n), frac(b.upper, n)),
            };
            Ok(AsymptoticRecord { n, reg, d, mu, reg_over_n, d_over_n: frac(d as i64, n).to_string() })
        })
        .collect::<Result<_>>()?;
    let (fekete_argmin, inf) = records
        .iter()
        .map(|r| (r.n, frac(r.d as i64, r.n)))
        .fold(None, |best: Option<(usize, Rational)>, (n, v)| match best {
            Some((bn, bv)) if bv <= v => Some((bn, bv)),
            _ => Some((n, v)),
        })
        .expect("nonempty sample");
    let monomial = members.iter().all(|m| m.as_monomial().is_some());
    let (delta, stabilization) = if monomial {
        (Some(delta_family_sample(family, max_n)?), Some(noetherian_stabilization_test(family, max_n)?))
    } else {
        (None, None)
    };
    Ok(AsymptoticReport {
        family: family.name().to_string(),
        n_max: max_n,
        reg_mode: mode,
        records,
        fekete_inf_d_over_n: inf.to_string(),
        fekete_argmin,
        delta,
        stabilization,
    })
}

impl AsymptoticReport {
    /// Aligned text table, one row per `n`.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "family: {}", self.family);
        let _ = writeln!(out, "{:>4}  {:>12}  {:>6}  {:>6}  {:>18}  {:>8}", "n", "reg", "d", "mu", "reg/n", "d/n");
        for r in &self.records {
            let reg = match &r.reg {
                RegValue::Exact(v) => v.to_string(),
                RegValue::Bracket(b) => b.to_string(),
            };
            let _ = writeln!(
                out,
                "{:>4}  {:>12}  {:>6}  {:>6}  {:>18}  {:>8}",
                r.n, reg, r.d, r.mu, r.reg_over_n, r.d_over_n
            );
        }
        let _ = writeln!(out, "inf d/n = {} (at n = {})", self.fekete_inf_d_over_n, self.fekete_argmin);
        if let Some(d) = &self.delta {
            let per: Vec<String> = d.per_n.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "delta per n: {}", per.join(" "));
            let _ = writeln!(out, "inf delta = {}", d.inf());
            let _ = writeln!(out, "sampled region delta = {}", d.sampled_delta());
            let _ = writeln!(out, "extrapolated region delta = {}", d.extrapolated_delta());
        }
        if let Some(s) = &self.stabilization {
            match s.stabilized_at {
                Some(c) => {
                    let _ = writeln!(out, "scaled Newton polyhedra stable along multiples of {c} up to {}", s.n_max);
                }
                None => {
                    let _ = writeln!(out, "no stabilization up to {}", s.n_max);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Preset;

    #[test]
    fn q_powers_ratios() {
        let f = GradedFamily::preset(Preset::QPowers, 2).unwrap();
        let r = asymptotic_report(&f, 5, RegMode::Exact).unwrap();
        let ratios: Vec<&str> = r.records.iter().map(|x| x.reg_over_n.as_str()).collect();
        assert_eq!(ratios, vec!["5", "4", "11/3", "7/2", "17/5"]);
        assert_eq!(r.fekete_inf_d_over_n, "3");
        assert_eq!(r.stabilization.as_ref().unwrap().stabilized_at, Some(1));
        assert!(r.render_table().contains("17/5"));
    }

    #[test]
    fn bracket_mode_agrees_on_monomial_members() {
        let f = GradedFamily::preset(Preset::QPowers, 2).unwrap();
        let r = asymptotic_report(&f, 3, RegMode::Bracket).unwrap();
        // Q^n is not m-primary in four variables: no socle, so the lower end is d(Q^n).
        for rec in &r.records {
            assert_eq!(rec.reg.bounds(), (3 * rec.n as i64, 3 * rec.n as i64 + 2));
        }
    }
}
