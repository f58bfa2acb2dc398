//! Graded families of ideals `(I_n)_{n ≥ 0}` with `I_0 = R`: built-in
//! rules, gradedness checks, truncations, Newton-polyhedron sampling and
//! asymptotic reports.

mod growth;
mod report;
mod spec;
mod valuation;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub use growth::GrowthExpr;
pub use report::{asymptotic_report, AsymptoticRecord, AsymptoticReport, RegMode, RegValue};
pub use valuation::{groebner_valuation_values, ValuationTable};

use crate::algebra::{Ring, RingSpec};
use crate::error::{Error, Result};
use crate::groebner::IdealPresentation;
use crate::monomial::MonomialIdeal;
use crate::polyhedra::{MonoPolyhedron, PolyhedronSummary, Rational};

/// One member `I_n` of a family.
#[derive(Clone, Debug)]
pub enum Member {
    Monomial(Arc<MonomialIdeal>),
    General(Arc<IdealPresentation>),
}

impl Member {
    pub fn monomial(ideal: MonomialIdeal) -> Member {
        Member::Monomial(Arc::new(ideal))
    }

    /// Monomial when every generator is a monomial.
    pub fn from_presentation(ideal: IdealPresentation) -> Result<Member> {
        if ideal.gens().iter().all(|g| g.is_monomial()) {
            let gens = ideal.gens().iter().map(|g| g.lm().clone()).collect();
            return Ok(Member::monomial(MonomialIdeal::new(ideal.ring(), gens)?));
        }
        Ok(Member::General(Arc::new(ideal)))
    }

    pub fn ring(&self) -> &Ring {
        match self {
            Member::Monomial(m) => m.ring(),
            Member::General(p) => p.ring(),
        }
    }

    pub fn as_monomial(&self) -> Option<&MonomialIdeal> {
        match self {
            Member::Monomial(m) => Some(m),
            Member::General(_) => None,
        }
    }

    pub fn presentation(&self) -> IdealPresentation {
        match self {
            Member::Monomial(m) => IdealPresentation::from_monomial(m),
            Member::General(p) => (**p).clone(),
        }
    }

    pub fn product(&self, other: &Member) -> Result<Member> {
        match (self, other) {
            (Member::Monomial(a), Member::Monomial(b)) => Ok(Member::monomial(a.product(b)?)),
            _ => Member::from_presentation(self.presentation().product(&other.presentation())?),
        }
    }

    pub fn sum(&self, other: &Member) -> Result<Member> {
        match (self, other) {
            (Member::Monomial(a), Member::Monomial(b)) => Ok(Member::monomial(a.sum(b)?)),
            _ => Member::from_presentation(self.presentation().sum(&other.presentation())?),
        }
    }

    pub fn power(&self, e: u32) -> Result<Member> {
        match self {
            Member::Monomial(a) => Ok(Member::monomial(a.power(e)?)),
            Member::General(p) => Member::from_presentation(p.power(e)?),
        }
    }

    /// True when `self ⊇ other`.
    pub fn contains(&self, other: &Member) -> Result<bool> {
        match (self, other) {
            (Member::Monomial(a), Member::Monomial(b)) => Ok(a.contains_ideal(b)),
            _ => self.presentation().contains_ideal(&other.presentation()),
        }
    }

    pub fn equals(&self, other: &Member) -> Result<bool> {
        match (self, other) {
            (Member::Monomial(a), Member::Monomial(b)) => Ok(a == b),
            _ => self.presentation().ideal_equal(&other.presentation()),
        }
    }

    /// `d(I)`, or `None` for the zero ideal.
    pub fn max_generator_degree(&self) -> Result<Option<u32>> {
        match self {
            Member::Monomial(m) => Ok(if m.is_zero() { None } else { Some(m.max_gen_degree()?) }),
            Member::General(p) => p.max_generator_degree(),
        }
    }

    /// `μ(I)`.
    pub fn num_min_gens(&self) -> Result<usize> {
        match self {
            Member::Monomial(m) => Ok(m.len()),
            Member::General(p) => Ok(p.minimal_generators()?.len()),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Member::Monomial(m) => m.render(),
            Member::General(p) => format!("({})", p.gens().iter().map(|g| g.render()).collect::<Vec<_>>().join(", ")),
        }
    }

    fn unit(ring: &Ring) -> Member {
        Member::monomial(MonomialIdeal::unit(ring))
    }

    fn newton(&self) -> Result<MonoPolyhedron> {
        match self {
            Member::Monomial(m) => MonoPolyhedron::newton(m),
            Member::General(_) => Err(Error::InvalidArgument("Newton polyhedra need monomial members".into())),
        }
    }
}

/// Built-in families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `(a⁴,a³b,ab³,b⁴)(x,y)^n + a²b²(x,y)^{f(n)}` with `f` non-decreasing
    /// and `f(n) ≥ n`.
    ExDiverge { f: GrowthExpr },
    /// `(a⁴,a³b,ab³,b⁴)(x,y)^n + a²b²(x^n,y^n)`.
    ExDistinctLims,
    /// Lattice points of `conv{(5n,0),(3n+1,1),(0,2n)} + R²_{≥0}` in `k[x,y]`.
    MPrimaryCounter,
    /// Powers of `(x³,y³)` in `k[x,y,a,b]`.
    QPowers,
    /// In `k[x,a,b]` modulo `(xa)`: `(a⁵,b²)^n + (xa)` for even `n` and
    /// `(xb^{2n}) + (xa)` for odd `n`.
    AnnNot0,
    /// Minimal symbolic powers of `(xy,xz,yz)`.
    TriangleSymbolic,
}

impl Preset {
    pub fn name(&self) -> &'static str {
        match self {
            Preset::ExDiverge { .. } => "ex-diverge",
            Preset::ExDistinctLims => "ex-distinct-lims",
            Preset::MPrimaryCounter => "mprimary-counter",
            Preset::QPowers => "q-powers",
            Preset::AnnNot0 => "ann-not0",
            Preset::TriangleSymbolic => "triangle-symbolic",
        }
    }

    /// Looks a preset up by name; `f` is the growth rule for `ex-diverge`
    /// (default `n^2`).
    pub fn by_name(name: &str, f: Option<&str>) -> Result<Preset> {
        Ok(match name {
            "ex-diverge" => Preset::ExDiverge { f: GrowthExpr::parse(f.unwrap_or("n^2"))? },
            "ex-distinct-lims" => Preset::ExDistinctLims,
            "mprimary-counter" => Preset::MPrimaryCounter,
            "q-powers" => Preset::QPowers,
            "ann-not0" => Preset::AnnNot0,
            "triangle-symbolic" => Preset::TriangleSymbolic,
            other => return Err(Error::InvalidArgument(format!("unknown preset `{other}`"))),
        })
    }

    pub const NAMES: [&'static str; 6] =
        ["ex-diverge", "ex-distinct-lims", "mprimary-counter", "q-powers", "ann-not0", "triangle-symbolic"];

    fn ring(&self, characteristic: u64) -> Result<Ring> {
        match self {
            Preset::ExDiverge { .. } | Preset::ExDistinctLims | Preset::QPowers => {
                RingSpec::degrevlex(characteristic, &["x", "y", "a", "b"])
            }
            Preset::MPrimaryCounter => RingSpec::degrevlex(characteristic, &["x", "y"]),
            Preset::AnnNot0 => RingSpec::degrevlex(characteristic, &["x", "a", "b"]),
            Preset::TriangleSymbolic => RingSpec::degrevlex(characteristic, &["x", "y", "z"]),
        }
    }

    fn member(&self, ring: &Ring, n: usize) -> Result<MonomialIdeal> {
        let n32 = u32::try_from(n).map_err(|_| Error::InvalidArgument("index too large".into()))?;
        let mono = |s: &str| MonomialIdeal::parse(ring, s);
        match self {
            Preset::ExDiverge { f } => {
                let fn_ = f.eval(n as u64)?;
                if fn_ < n as u64 {
                    return Err(Error::Eval(format!("f({n}) = {fn_} is smaller than {n}")));
                }
                if n >= 2 && f.eval(n as u64 - 1)? > fn_ {
                    return Err(Error::Eval(format!("f is decreasing at {n}")));
                }
                let fn32 = u32::try_from(fn_).map_err(|_| Error::Eval(format!("f({n}) = {fn_} is too large")))?;
                let head = mono("a^4, a^3*b, a*b^3, b^4")?.product(&mono("x, y")?.power(n32)?)?;
                let tail = mono("a^2*b^2")?.product(&mono("x, y")?.power(fn32)?)?;
                head.sum(&tail)
            }
            Preset::ExDistinctLims => {
                let head = mono("a^4, a^3*b, a*b^3, b^4")?.product(&mono("x, y")?.power(n32)?)?;
                let tail = mono(&format!("a^2*b^2*x^{n}, a^2*b^2*y^{n}"))?;
                head.sum(&tail)
            }
            Preset::MPrimaryCounter => {
                let n = n as i64;
                MonoPolyhedron::from_integer_points(2, &[vec![5 * n, 0], vec![3 * n + 1, 1], vec![0, 2 * n]])?
                    .lattice_ideal(ring)
            }
            Preset::QPowers => mono("x^3, y^3")?.power(n32),
            Preset::AnnNot0 => {
                if n % 2 == 0 {
                    mono("a^5, b^2")?.power(n32)?.sum(&mono("x*a")?)
                } else {
                    mono(&format!("x*b^{}, x*a", 2 * n))
                }
            }
            Preset::TriangleSymbolic => mono("x*y, x*z, y*z")?.symbolic_power_min(n32),
        }
    }
}

/// Rule `n ↦ I_n` supplied by the caller.
pub type ExplicitRule = Arc<dyn Fn(usize) -> Result<Member> + Send + Sync>;

#[derive(Clone)]
pub enum FamilyKind {
    Powers(Member),
    ClosurePowers(Arc<MonomialIdeal>),
    SymbolicMin(Arc<MonomialIdeal>),
    /// `J^{a_n} I^n`.
    Mixed { j: Member, i: Member, a: GrowthExpr },
    /// `I_{a,n} = I_n` for `n ≤ a`, else `Σ_{i+j=n} I_{a,i} I_{a,j}`.
    Truncation { base: Arc<GradedFamily>, a: usize },
    /// Integral closures `Ī_n` of a monomial family.
    Closure(Arc<GradedFamily>),
    Explicit(ExplicitRule),
    Preset(Preset),
}

impl fmt::Debug for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Powers(i) => write!(f, "Powers({})", i.render()),
            FamilyKind::ClosurePowers(i) => write!(f, "ClosurePowers({})", i.render()),
            FamilyKind::SymbolicMin(i) => write!(f, "SymbolicMin({})", i.render()),
            FamilyKind::Mixed { j, i, a } => write!(f, "Mixed({}, {}, {a})", j.render(), i.render()),
            FamilyKind::Truncation { base, a } => write!(f, "Truncation({}, {a})", base.name()),
            FamilyKind::Closure(base) => write!(f, "Closure({})", base.name()),
            FamilyKind::Explicit(_) => f.write_str("Explicit"),
            FamilyKind::Preset(p) => write!(f, "Preset({})", p.name()),
        }
    }
}

/// A graded family with a publish-once memo of computed members.
#[derive(Debug)]
pub struct GradedFamily {
    name: String,
    ring: Ring,
    kind: FamilyKind,
    memo: Mutex<BTreeMap<usize, Member>>,
}

impl GradedFamily {
    fn build(name: String, ring: Ring, kind: FamilyKind) -> Arc<GradedFamily> {
        Arc::new(GradedFamily { name, ring, kind, memo: Mutex::new(BTreeMap::new()) })
    }

    pub fn powers(ideal: Member) -> Arc<GradedFamily> {
        let name = format!("powers({})", ideal.render());
        GradedFamily::build(name, ideal.ring().clone(), FamilyKind::Powers(ideal))
    }

    pub fn closure_powers(ideal: MonomialIdeal) -> Arc<GradedFamily> {
        let name = format!("closure_powers({})", ideal.render());
        GradedFamily::build(name, ideal.ring().clone(), FamilyKind::ClosurePowers(Arc::new(ideal)))
    }

    pub fn symbolic_min(ideal: MonomialIdeal) -> Arc<GradedFamily> {
        let name = format!("symbolic_min({})", ideal.render());
        GradedFamily::build(name, ideal.ring().clone(), FamilyKind::SymbolicMin(Arc::new(ideal)))
    }

    pub fn mixed(j: Member, i: Member, a: GrowthExpr) -> Result<Arc<GradedFamily>> {
        if !crate::algebra::same_ring(j.ring(), i.ring()) {
            return Err(Error::RingMismatch);
        }
        let name = format!("mixed({}; {}; a_n = {a})", j.render(), i.render());
        Ok(GradedFamily::build(name, i.ring().clone(), FamilyKind::Mixed { j, i, a }))
    }

    pub fn closure(base: Arc<GradedFamily>) -> Arc<GradedFamily> {
        let name = format!("closure({})", base.name);
        GradedFamily::build(name, base.ring.clone(), FamilyKind::Closure(base))
    }

    pub fn explicit(name: &str, ring: &Ring, rule: ExplicitRule) -> Arc<GradedFamily> {
        GradedFamily::build(name.to_string(), ring.clone(), FamilyKind::Explicit(rule))
    }

    /// Explicit family with `I_1, ..., I_m` listed; larger indices fail.
    pub fn listed(name: &str, ring: &Ring, members: Vec<Member>) -> Arc<GradedFamily> {
        let members = Arc::new(members);
        let rule: ExplicitRule = Arc::new(move |n| {
            members.get(n - 1).cloned().ok_or_else(|| Error::Eval(format!("no member listed for n = {n}")))
        });
        GradedFamily::explicit(name, ring, rule)
    }

    pub fn preset(preset: Preset, characteristic: u64) -> Result<Arc<GradedFamily>> {
        let ring = preset.ring(characteristic)?;
        let name = match &preset {
            Preset::ExDiverge { f } => format!("ex-diverge(f(n) = {f})"),
            p => p.name().to_string(),
        };
        Ok(GradedFamily::build(name, ring, FamilyKind::Preset(preset)))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn kind(&self) -> &FamilyKind {
        &self.kind
    }

    /// `I_n`, memoized. `I_0` is the unit ideal.
    pub fn member(&self, n: usize) -> Result<Member> {
        if n == 0 {
            return Ok(Member::unit(&self.ring));
        }
        if let Some(m) = self.memo.lock().expect("memo lock").get(&n) {
            return Ok(m.clone());
        }
        let computed = self.compute(n)?;
        let mut memo = self.memo.lock().expect("memo lock");
        Ok(memo.entry(n).or_insert(computed).clone())
    }

    fn compute(&self, n: usize) -> Result<Member> {
        let e = u32::try_from(n).map_err(|_| Error::InvalidArgument("index too large".into()))?;
        match &self.kind {
            FamilyKind::Powers(i) => i.power(e),
            FamilyKind::ClosurePowers(i) => Ok(Member::monomial(i.power(e)?.integral_closure()?)),
            FamilyKind::SymbolicMin(i) => Ok(Member::monomial(i.symbolic_power_min(e)?)),
            FamilyKind::Mixed { j, i, a } => {
                let an = u32::try_from(a.eval(n as u64)?).map_err(|_| Error::Eval("a_n too large".into()))?;
                j.power(an)?.product(&i.power(e)?)
            }
            FamilyKind::Truncation { base, a } => {
                if n <= *a {
                    return base.member(n);
                }
                let mut acc = self.member(1)?.product(&self.member(n - 1)?)?;
                for i in 2..=n / 2 {
                    acc = acc.sum(&self.member(i)?.product(&self.member(n - i)?)?)?;
                }
                Ok(acc)
            }
            FamilyKind::Closure(base) => match base.member(n)? {
                Member::Monomial(m) => Ok(Member::monomial(m.integral_closure()?)),
                Member::General(_) => Err(Error::InvalidArgument("closure families need monomial members".into())),
            },
            FamilyKind::Explicit(rule) => {
                let m = rule(n)?;
                if !crate::algebra::same_ring(m.ring(), &self.ring) {
                    return Err(Error::RingMismatch);
                }
                Ok(m)
            }
            FamilyKind::Preset(p) => Ok(Member::monomial(p.member(&self.ring, n)?)),
        }
    }

    /// Indices computed so far.
    pub fn memoized(&self) -> Vec<usize> {
        self.memo.lock().expect("memo lock").keys().copied().collect()
    }
}

/// Outcome of [`check_graded`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GradedCheck {
    Pass { pairs_checked: usize },
    Counterexample { p: usize, q: usize },
}

impl GradedCheck {
    pub fn passed(&self) -> bool {
        matches!(self, GradedCheck::Pass { .. })
    }
}

/// Checks `I_p · I_q ⊆ I_{p+q}` for all `p, q ≥ 1` with `p + q ≤ max_n`.
pub fn check_graded(family: &GradedFamily, max_n: usize) -> Result<GradedCheck> {
    if max_n < 2 {
        return Err(Error::InvalidArgument("gradedness check needs N ≥ 2".into()));
    }
    let mut pairs = 0;
    for total in 2..=max_n {
        let target = family.member(total)?;
        for p in 1..=total / 2 {
            let prod = family.member(p)?.product(&family.member(total - p)?)?;
            pairs += 1;
            if !target.contains(&prod)? {
                return Ok(GradedCheck::Counterexample { p, q: total - p });
            }
        }
    }
    Ok(GradedCheck::Pass { pairs_checked: pairs })
}

/// The `a`-th truncation of a family.
pub fn truncation_family(base: Arc<GradedFamily>, a: usize) -> Result<Arc<GradedFamily>> {
    if a == 0 {
        return Err(Error::InvalidArgument("truncation index must be at least 1".into()));
    }
    let name = format!("truncation({}, {a})", base.name);
    let ring = base.ring.clone();
    Ok(GradedFamily::build(name, ring, FamilyKind::Truncation { base, a }))
}

/// Verdict of [`noetherian_stabilization_test`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    /// Smallest `c` with `(1/c)NP(I_c) = (1/(mc))NP(I_{mc})` for every tested
    /// multiple `mc ≤ N`, if any.
    pub stabilized_at: Option<usize>,
    pub n_max: usize,
    /// `(c, m, equal)` for every comparison made.
    pub comparisons: Vec<(usize, usize, bool)>,
}

fn ratio(num: usize, den: usize) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

fn scaled_newton(family: &GradedFamily, n: usize) -> Result<MonoPolyhedron> {
    family.member(n)?.newton()?.scale(&ratio(1, n))
}

/// Finite search for a `c` at which the scaled Newton polyhedra stop
/// changing along multiples of `c`. Only `c` with `2c ≤ N` are tried.
pub fn noetherian_stabilization_test(family: &GradedFamily, max_n: usize) -> Result<Stabilization> {
    let mut comparisons = Vec::new();
    let mut stabilized_at = None;
    for c in 1..=max_n / 2 {
        let base = scaled_newton(family, c)?;
        let mut ok = true;
        for m in 2..=max_n / c {
            let equal = base.equals(&scaled_newton(family, m * c)?)?;
            comparisons.push((c, m, equal));
            if !equal {
                ok = false;
                break;
            }
        }
        if ok {
            stabilized_at = Some(c);
            break;
        }
    }
    Ok(Stabilization { stabilized_at, n_max: max_n, comparisons })
}

/// Output of [`delta_family_sample`].
#[derive(Clone, Debug, Serialize)]
pub struct DeltaSample {
    pub n_max: usize,
    /// `δ((1/n)NP(I_n))` for `n = 1..=N`.
    #[serde(serialize_with = "crate::families::report::ser_rationals")]
    pub per_n: Vec<Rational>,
    #[serde(serialize_with = "crate::families::report::ser_rationals")]
    pub running_inf: Vec<Rational>,
    /// Hull of all scaled vertices for `n ≤ N`.
    pub sampled: PolyhedronSummary,
    /// Sampled hull together with the slopes of vertex tracks that are
    /// affine in `n` over the last three sampled indices.
    pub extrapolated: PolyhedronSummary,
    pub limit_points: Vec<Vec<String>>,
}

impl DeltaSample {
    pub fn inf(&self) -> &Rational {
        self.running_inf.last().expect("nonempty sample")
    }

    pub fn sampled_delta(&self) -> &str {
        &self.sampled.delta
    }

    pub fn extrapolated_delta(&self) -> &str {
        &self.extrapolated.delta
    }
}

/// Slopes `(v − w)/c` for vertices `v` of `NP(I_N)` and `w` of `NP(I_{N−c})`
/// such that `2w − v` is a vertex of `NP(I_{N−2c})` and the slope is
/// nonnegative.
fn affine_slopes(family: &GradedFamily, max_n: usize, c: usize) -> Result<Vec<Vec<Rational>>> {
    if max_n <= 2 * c {
        return Ok(Vec::new());
    }
    let top = family.member(max_n)?.newton()?;
    let mid = family.member(max_n - c)?.newton()?;
    let low = family.member(max_n - 2 * c)?.newton()?;
    let cq = ratio(c, 1);
    let mut out = Vec::new();
    for v in top.vertices() {
        for w in mid.vertices() {
            let d: Vec<Rational> = v.iter().zip(w).map(|(a, b)| a - b).collect();
            if d.iter().any(|x| x.is_negative()) || d.iter().all(|x| x.is_zero()) {
                continue;
            }
            let u: Vec<Rational> = w.iter().zip(&d).map(|(a, b)| a - b).collect();
            if low.vertices().contains(&u) {
                out.push(d.iter().map(|x| x / &cq).collect());
            }
        }
    }
    Ok(out)
}

/// Samples `δ((1/n)NP(I_n))` for `n ≤ N` and the region spanned by the
/// scaled polyhedra.
pub fn delta_family_sample(family: &GradedFamily, max_n: usize) -> Result<DeltaSample> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("N must be at least 1".into()));
    }
    let mut per_n = Vec::with_capacity(max_n);
    let mut running_inf: Vec<Rational> = Vec::with_capacity(max_n);
    let mut scaled = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let p = scaled_newton(family, n)?;
        let d = p.delta();
        let inf = match running_inf.last() {
            Some(prev) if prev < &d => prev.clone(),
            _ => d.clone(),
        };
        per_n.push(d);
        running_inf.push(inf);
        scaled.push(p);
    }
    let sampled = MonoPolyhedron::hull_union(&scaled)?;
    let mut limits = affine_slopes(family, max_n, 1)?;
    for s in affine_slopes(family, max_n, 2)? {
        if !limits.contains(&s) {
            limits.push(s);
        }
    }
    let mut pts: Vec<Vec<Rational>> = sampled.vertices().to_vec();
    pts.extend(limits.iter().cloned());
    let extrapolated = MonoPolyhedron::new(sampled.dim(), pts)?;
    Ok(DeltaSample {
        n_max: max_n,
        per_n,
        running_inf,
        sampled: sampled.summary(),
        extrapolated: extrapolated.summary(),
        limit_points: limits.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect(),
    })
}

pub use spec::family_from_json;

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn powers_member() {
        let f = GradedFamily::preset(Preset::QPowers, 2).unwrap();
        let r = f.ring().clone();
        assert_eq!(f.member(2).unwrap().as_monomial().unwrap(), &mono(&r, "x^6, x^3*y^3, y^6"));
        assert!(f.member(0).unwrap().as_monomial().unwrap().is_unit());
        assert_eq!(f.memoized(), vec![2]);
    }

    #[test]
    fn mprimary_counter_first_member() {
        let f = GradedFamily::preset(Preset::MPrimaryCounter, 2).unwrap();
        let m = f.member(1).unwrap();
        let i = m.as_monomial().unwrap();
        // P_1 = {u ≥ 0 : 2u_1 + 5u_2 ≥ 10}; (4,1) lies above that edge.
        let inside = |a: u32, b: u32| 2 * a + 5 * b >= 10;
        let mut pts = Vec::new();
        for a in 0..=5u32 {
            for b in 0..=2u32 {
                if inside(a, b) && !(a > 0 && inside(a - 1, b)) && !(b > 0 && inside(a, b - 1)) {
                    pts.push(crate::algebra::Monomial::from_exps(&[a, b]));
                }
            }
        }
        assert_eq!(i, &MonomialIdeal::new(f.ring(), pts).unwrap());
        assert_eq!(i.rendered_gens(), vec!["y^2", "x^3*y", "x^5"]);
    }

    #[test]
    fn mixed_unfolds() {
        let r = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
        let j = Member::monomial(mono(&r, "x"));
        let i = Member::monomial(mono(&r, "x, y"));
        let fam = GradedFamily::mixed(j.clone(), i.clone(), GrowthExpr::parse("isqrt(n)").unwrap()).unwrap();
        let expect = j.power(2).unwrap().product(&i.power(4).unwrap()).unwrap();
        assert!(fam.member(4).unwrap().equals(&expect).unwrap());
    }

    #[test]
    fn graded_checks() {
        let f = GradedFamily::preset(Preset::by_name("ex-diverge", Some("n^2")).unwrap(), 2).unwrap();
        assert!(check_graded(&f, 6).unwrap().passed());
        let r = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
        let bad = GradedFamily::listed(
            "x then y",
            &r,
            vec![Member::monomial(mono(&r, "x")), Member::monomial(mono(&r, "y"))],
        );
        assert_eq!(check_graded(&bad, 2).unwrap(), GradedCheck::Counterexample { p: 1, q: 1 });
        assert!(check_graded(&bad, 1).is_err());
    }

    #[test]
    fn ex_diverge_rejects_slow_growth() {
        let f = GradedFamily::preset(Preset::by_name("ex-diverge", Some("isqrt(n)")).unwrap(), 2).unwrap();
        assert!(matches!(f.member(4), Err(Error::Eval(_))));
    }

    #[test]
    fn truncations() {
        let q = GradedFamily::preset(Preset::QPowers, 2).unwrap();
        let t = truncation_family(q.clone(), 3).unwrap();
        for n in 1..=9 {
            assert!(t.member(n).unwrap().equals(&q.member(n).unwrap()).unwrap(), "n = {n}");
        }
        let c = GradedFamily::preset(Preset::MPrimaryCounter, 2).unwrap();
        let t1 = truncation_family(c.clone(), 1).unwrap();
        for n in 1..=4 {
            let expect = c.member(1).unwrap().power(n as u32).unwrap();
            assert!(t1.member(n).unwrap().equals(&expect).unwrap());
        }
        assert!(check_graded(&truncation_family(c, 2).unwrap(), 6).unwrap().passed());
        assert!(truncation_family(q, 0).is_err());
    }

    #[test]
    fn stabilization() {
        let q = GradedFamily::preset(Preset::QPowers, 2).unwrap();
        assert_eq!(noetherian_stabilization_test(&q, 4).unwrap().stabilized_at, Some(1));
        let t = GradedFamily::preset(Preset::TriangleSymbolic, 2).unwrap();
        assert_eq!(noetherian_stabilization_test(&t, 6).unwrap().stabilized_at, Some(2));
        let c = GradedFamily::preset(Preset::MPrimaryCounter, 2).unwrap();
        let v = noetherian_stabilization_test(&c, 12).unwrap();
        assert_eq!(v.stabilized_at, None);
        assert!(v.comparisons.iter().all(|&(_, _, eq)| !eq));
    }

    #[test]
    fn delta_samples() {
        let qp = GradedFamily::preset(Preset::QPowers, 2).unwrap();
        let s = delta_family_sample(&qp, 4).unwrap();
        assert!(s.per_n.iter().all(|d| *d == q(3, 1)));
        let c = GradedFamily::preset(Preset::MPrimaryCounter, 2).unwrap();
        let s = delta_family_sample(&c, 12).unwrap();
        assert!(s.per_n.iter().all(|d| *d == q(5, 1)));
        assert_eq!(s.extrapolated_delta(), "3");
        assert_eq!(s.sampled_delta(), "5");
        let w = GradedFamily::closure(GradedFamily::preset(Preset::ExDistinctLims, 2).unwrap());
        let s = delta_family_sample(&w, 5).unwrap();
        for (k, d) in s.per_n.iter().enumerate() {
            let n = k as i64 + 1;
            assert_eq!(*d, q(n + 4, n));
        }
    }
}
