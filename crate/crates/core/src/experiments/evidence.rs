//! Ratios `reg/n` along the two explicit sequences, and the brackets
//! compared against the characteristic-zero closed-form guess.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::Serialize;
use serde_json::{json, Value};

use super::report::{ExperimentReport, Verdict};
use super::setting::Setting;
use super::theorems::{TheoremFamilySpec, TheoremId};
use super::verify::{verify_theorem, RunOptions};
use crate::error::{Error, Result};
use crate::groebner::RegBracket;

#[derive(Clone, Debug, Serialize)]
pub struct RatioRow {
    pub theorem: String,
    pub n: u32,
    pub bracket: RegBracket,
    /// `lower/n` and `upper/n` as reduced fractions.
    pub lower_ratio: String,
    pub upper_ratio: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionRow {
    pub n: u32,
    /// `direct` (formed and bracketed) or `identity` (sum bracket plus one).
    pub method: String,
    pub sum: RegBracket,
    pub intersection: RegBracket,
}

#[derive(Clone, Debug, Serialize)]
pub struct NoLimitOutcome {
    pub rows: Vec<RatioRow>,
    pub intersection: Vec<IntersectionRow>,
    /// Smallest upper ratio along `n = 2^s`.
    pub min_upper_ratio: String,
    /// Largest lower ratio along `n = 3·2^s`.
    pub max_lower_ratio: String,
    pub gap: bool,
}

fn ratio(v: i64, n: u32) -> Ratio<i64> {
    Ratio::new(v, n as i64)
}

fn bracket_of(report: &ExperimentReport) -> Result<RegBracket> {
    let v = report.artifacts.get("reg_bracket").cloned().ok_or_else(|| Error::InvalidArgument("missing reg_bracket".into()))?;
    serde_json::from_value(v).map_err(|e| Error::InvalidArgument(e.to_string()))
}

/// `reg(Q^n + (f^n))/n` for `n = 2^s` and `n = 3·2^s` (odd `s`), `3 ≤ s ≤ max_s`,
/// and the matching intersections `Q^n ∩ (f^n)`.
pub fn nolimit_evidence(max_s: u32, opts: &RunOptions) -> Result<(NoLimitOutcome, ExperimentReport)> {
    if !(3..=12).contains(&max_s) {
        return Err(Error::InvalidArgument("max_s must lie in 3..=12".into()));
    }
    let params: BTreeMap<String, Value> = [("max_s".to_string(), json!(max_s))].into_iter().collect();
    let mut report = ExperimentReport::new("nolimit", params);
    let mut rows = Vec::new();
    let mut cases: Vec<(TheoremId, u32)> = (3..=max_s).map(|s| (TheoremId::PowerOfTwo, 1 << s)).collect();
    cases.extend((3..=max_s).filter(|s| s % 2 == 1).map(|s| (TheoremId::ThreeTimesPowerOfTwo, 3 << s)));
    for (id, n) in cases {
        let spec = TheoremFamilySpec::new(id, n, None)?;
        let sub = report.timed(&format!("{}.{n}", id.name()), || verify_theorem(&spec, opts))?;
        report.cache_hits += sub.cache_hits;
        report.assert(&format!("{}.n={n}.replicated", id.name()), true, sub.passed(), sub.passed());
        let b = bracket_of(&sub)?;
        let (lo, hi) = (ratio(b.lower, n), ratio(b.upper, n));
        match id {
            TheoremId::PowerOfTwo => {
                let ok = lo >= Ratio::from_integer(5) && hi <= Ratio::new(5 * n as i64 + 2, n as i64);
                report.assert(&format!("ratio.n={n}"), format!("[5, {}]", Ratio::new(5 * n as i64 + 2, n as i64)), format!("[{lo}, {hi}]"), ok);
            }
            _ => {
                let ok = lo >= Ratio::from_integer(6);
                report.assert(&format!("ratio.n={n}"), "lower ≥ 6", format!("[{lo}, {hi}]"), ok);
            }
        }
        rows.push(RatioRow { theorem: id.name().into(), n, bracket: b, lower_ratio: lo.to_string(), upper_ratio: hi.to_string() });
    }
    let min_upper = rows.iter().filter(|r| r.theorem == TheoremId::PowerOfTwo.name()).map(|r| ratio(r.bracket.upper, r.n)).min().expect("s = 3 present");
    let max_lower = rows.iter().filter(|r| r.theorem != TheoremId::PowerOfTwo.name()).map(|r| ratio(r.bracket.lower, r.n)).max();
    let gap = max_lower.is_some_and(|m| min_upper < m);
    let max_lower_text = max_lower.map_or("none".to_string(), |m| m.to_string());
    report.assert("gap", "min upper ratio over 2^s < max lower ratio over 3·2^s", format!("{min_upper} < {max_lower_text}"), gap);

    let st = Setting::new(2)?;
    let mut intersection = Vec::new();
    for row in &rows {
        let sum = row.bracket.clone();
        if row.n <= 8 {
            let ideal = st.intersection_ideal(row.n, row.n)?.with_budget(opts.budget);
            let d = ideal.max_generator_degree()?.unwrap_or(0);
            let direct = report.timed(&format!("intersection.{}", row.n), || ideal.reg_bracket(Some(4 * d + 64)))?;
            let expected = sum.shifted(1);
            let ok = direct.lower <= expected.upper && expected.lower <= direct.upper;
            report.assert(&format!("intersection.n={}", row.n), expected.to_string(), direct.to_string(), ok);
            intersection.push(IntersectionRow { n: row.n, method: "direct".into(), sum, intersection: direct });
        } else {
            let bound = 3 * row.n as i64 + 2;
            let holds = sum.lower > bound;
            report.assert(&format!("intersection.n={}.hypothesis", row.n), format!("reg(Q^n + (f^n)) > {bound}"), sum.lower, holds);
            if holds {
                let mut b = sum.shifted(1);
                b.lower_method = "sum plus one".into();
                b.upper_method = "sum plus one".into();
                intersection.push(IntersectionRow { n: row.n, method: "identity".into(), sum, intersection: b });
            }
        }
    }
    report.artifact("rows", &rows);
    report.artifact("intersection", &intersection);
    let outcome = NoLimitOutcome { rows, intersection, min_upper_ratio: min_upper.to_string(), max_lower_ratio: max_lower_text, gap };
    Ok((outcome, report))
}

/// Closed-form guess for `reg(Q^n + (f^n))` over a field of characteristic 0.
pub fn conjectured_char0_reg(n: u32) -> i64 {
    let h = (n / 2) as i64;
    let g = if n % 2 == 1 { h * h + 5 * h + 1 } else { h * h + 3 * h - 1 };
    g + 3 * n as i64 + 1
}

#[derive(Clone, Debug, Serialize)]
pub struct Char0Row {
    pub n: u32,
    pub bracket: RegBracket,
    pub conjectured: i64,
    pub inside: bool,
}

/// Brackets `reg(Q^n + (f^n))` over `Q` for `1 ≤ n ≤ n_max` and records where
/// the closed-form guess falls. The guess is evidence only, never a verdict.
pub fn conjecture_char0_harness(n_max: u32, opts: &RunOptions) -> Result<(Vec<Char0Row>, ExperimentReport)> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be positive".into()));
    }
    let st = Setting::new(0)?;
    let params: BTreeMap<String, Value> = [("n_max".to_string(), json!(n_max))].into_iter().collect();
    let mut report = ExperimentReport::new("conj-char0", params);
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let ideal = st.sum_ideal(n, n)?.with_budget(opts.budget);
        let d = 3 * n;
        let bracket = report.timed(&format!("n={n}"), || ideal.reg_bracket(Some(4 * d + 64)))?;
        report.assert(&format!("bracket_valid.n={n}"), "lower ≤ upper", bracket.to_string(), bracket.is_valid());
        let conjectured = conjectured_char0_reg(n);
        let inside = bracket.contains(conjectured);
        report.push(
            &format!("conjecture.n={n}"),
            conjectured,
            bracket.to_string(),
            Verdict::Evidence,
            Some(format!("EVIDENCE: guess {}", if inside { "inside the bracket" } else { "outside the bracket" })),
        );
        rows.push(Char0Row { n, bracket, conjectured, inside });
    }
    report.artifact("rows", &rows);
    Ok((rows, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guess_values() {
        // n = 1: h = 0, 1 + 4; n = 2: h = 1, 3 + 7; n = 3: h = 1, 7 + 10.
        assert_eq!(conjectured_char0_reg(1), 5);
        assert_eq!(conjectured_char0_reg(2), 10);
        assert_eq!(conjectured_char0_reg(3), 17);
    }
}
