//! Explicit Gröbner bases of `Q^n + (f^k)` over `F_2` for the parameter
//! families where a closed form is known, with their initial ideals,
//! socle witnesses and regularity intervals.

use serde::{Deserialize, Serialize};

use super::setting::Setting;
use crate::algebra::{parse_polynomial, Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    /// `k = n = 2^s`, `s ≥ 3`.
    PowerOfTwo,
    /// `k = n = 3·2^s`, `s ≥ 3` odd.
    ThreeTimesPowerOfTwo,
    /// `n = 2^s > k = 2^u`, `u ≥ 3` odd.
    MixedOddLog,
    /// `n = 2^s > k = 2^u`, `u ≥ 2` even.
    MixedEvenLog,
    /// `n = 2^s`, `s ≥ 2`, `k ∈ {1, 2}`.
    MixedSmallK,
}

impl TheoremId {
    pub const ALL: [TheoremId; 5] = [
        TheoremId::PowerOfTwo,
        TheoremId::ThreeTimesPowerOfTwo,
        TheoremId::MixedOddLog,
        TheoremId::MixedEvenLog,
        TheoremId::MixedSmallK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::PowerOfTwo => "gb2powers",
            TheoremId::ThreeTimesPowerOfTwo => "gb3times2power",
            TheoremId::MixedOddLog => "double2powers-odd",
            TheoremId::MixedEvenLog => "double2powers-even",
            TheoremId::MixedSmallK => "double2powers-12",
        }
    }

    pub fn by_name(name: &str) -> Result<TheoremId> {
        let squash = |s: &str| s.to_ascii_lowercase().replace(['_', '-'], "");
        let key = squash(name);
        TheoremId::ALL.into_iter().find(|t| squash(t.name()) == key).ok_or_else(|| {
            let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
            Error::InvalidArgument(format!("unknown theorem `{name}`; expected one of {}", names.join(", ")))
        })
    }
}

/// Exact base-2 logarithm.
fn log2_exact(v: u32) -> Option<u32> {
    (v > 0 && v.is_power_of_two()).then(|| v.trailing_zeros())
}

/// A validated parameter set for one of the explicit families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremFamilySpec {
    pub id: TheoremId,
    pub n: u32,
    pub k: u32,
    /// `log2 n`, or `log2 (n/3)` for the `3·2^s` family.
    pub s: u32,
    /// `log2 k` for the mixed families.
    pub u: Option<u32>,
}

/// Generators of one type, in table order.
#[derive(Clone, Debug)]
pub struct GeneratorType {
    pub label: String,
    pub gens: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct TheoremFamily {
    pub spec: TheoremFamilySpec,
    pub types: Vec<GeneratorType>,
}

impl TheoremFamily {
    pub fn all(&self) -> Vec<Polynomial> {
        self.types.iter().flat_map(|t| t.gens.iter().cloned()).collect()
    }

    pub fn len(&self) -> usize {
        self.types.iter().map(|t| t.gens.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn max_degree(&self) -> u32 {
        self.types.iter().flat_map(|t| t.gens.iter()).filter_map(|g| g.degree()).max().unwrap_or(0)
    }
}

fn hyp(msg: String) -> Error {
    Error::Hypothesis(msg)
}

/// Exponent lists standing for monomial ideals; `None` is the zero ideal.
type Gens = Option<Vec<[u32; 4]>>;

fn single(e: [u32; 4]) -> Gens {
    Some(vec![e])
}

fn q_pow(m: i64) -> Gens {
    (m >= 0).then(|| Setting::q_power_exps(m as u32))
}

/// `(x^d, y^d)^m`.
fn pair_pow(d: u32, m: i64) -> Gens {
    (m >= 0).then(|| (0..=m as u32).map(|i| [d * i, d * (m as u32 - i), 0, 0]).collect())
}

fn times(factors: &[Gens]) -> Gens {
    let mut acc = vec![[0u32; 4]];
    for f in factors {
        let f = f.as_ref()?;
        acc = acc.iter().flat_map(|a| f.iter().map(move |b| [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]])).collect();
    }
    Some(acc)
}

impl TheoremFamilySpec {
    /// Validates `(n, k)` against the family's hypotheses. `k` defaults to
    /// `n` for the two diagonal families, where any other value is rejected.
    pub fn new(id: TheoremId, n: u32, k: Option<u32>) -> Result<TheoremFamilySpec> {
        match id {
            TheoremId::PowerOfTwo => {
                let s = log2_exact(n).filter(|&s| s >= 3).ok_or_else(|| hyp(format!("n = {n} is not 2^s with s ≥ 3")))?;
                if k.is_some_and(|k| k != n) {
                    return Err(hyp("this family has k = n".into()));
                }
                Ok(TheoremFamilySpec { id, n, k: n, s, u: None })
            }
            TheoremId::ThreeTimesPowerOfTwo => {
                if n % 3 != 0 {
                    return Err(hyp(format!("n = {n} is not 3·2^s")));
                }
                let s = log2_exact(n / 3).ok_or_else(|| hyp(format!("n = {n} is not 3·2^s")))?;
                if s < 3 || s % 2 == 0 {
                    return Err(hyp(format!("n = 3·2^{s} needs s odd and s ≥ 3")));
                }
                if k.is_some_and(|k| k != n) {
                    return Err(hyp("this family has k = n".into()));
                }
                Ok(TheoremFamilySpec { id, n, k: n, s, u: None })
            }
            TheoremId::MixedOddLog | TheoremId::MixedEvenLog | TheoremId::MixedSmallK => {
                let k = k.ok_or_else(|| hyp("this family needs k".into()))?;
                let s = log2_exact(n).ok_or_else(|| hyp(format!("n = {n} is not a power of 2")))?;
                let u = log2_exact(k).ok_or_else(|| hyp(format!("k = {k} is not a power of 2")))?;
                let ok = match id {
                    TheoremId::MixedOddLog => u >= 3 && u % 2 == 1 && u < s,
                    TheoremId::MixedEvenLog => u >= 2 && u % 2 == 0 && u < s,
                    _ => u <= 1 && s >= 2,
                };
                if !ok {
                    let need = match id {
                        TheoremId::MixedOddLog => "log2 k odd, 3 ≤ log2 k < log2 n",
                        TheoremId::MixedEvenLog => "log2 k even, 2 ≤ log2 k < log2 n",
                        _ => "k ∈ {1, 2} and n ≥ 4",
                    };
                    return Err(hyp(format!("(n, k) = ({n}, {k}) violates {need}")));
                }
                Ok(TheoremFamilySpec { id, n, k, s, u: Some(u) })
            }
        }
    }

    /// Every family whose hypotheses `(n, k)` satisfies.
    pub fn matching(n: u32, k: u32) -> Vec<TheoremFamilySpec> {
        TheoremId::ALL.into_iter().filter_map(|id| TheoremFamilySpec::new(id, n, Some(k)).ok()).collect()
    }

    fn t(&self) -> u32 {
        self.n / 3
    }

    /// Cardinality of the explicit basis.
    pub fn expected_count(&self) -> usize {
        let (n, k) = (self.n as usize, self.k as usize);
        match self.id {
            TheoremId::PowerOfTwo if self.s % 2 == 1 => (5 * n + 8) / 3,
            TheoremId::PowerOfTwo => (5 * n + 10) / 3,
            TheoremId::ThreeTimesPowerOfTwo => (19 * n + 111) / 9,
            TheoremId::MixedOddLog => 3 * n + 1 - (2 * k - 1) / 3,
            TheoremId::MixedEvenLog => 3 * n + 1 - (2 * k - 2) / 3,
            TheoremId::MixedSmallK if k == 1 => 3 * n + 1,
            TheoremId::MixedSmallK => 3 * n,
        }
    }

    /// Largest generator degree of the explicit basis.
    pub fn expected_max_degree(&self) -> u32 {
        let (n, k) = (self.n, self.k);
        match self.id {
            TheoremId::PowerOfTwo => 4 * n + 1,
            TheoremId::ThreeTimesPowerOfTwo => 17 * n / 3 + 1,
            TheoremId::MixedOddLog | TheoremId::MixedEvenLog => 3 * (n + k),
            TheoremId::MixedSmallK => 3 * n + 2 * k,
        }
    }

    pub fn build(&self, st: &Setting) -> Result<TheoremFamily> {
        if st.ring().characteristic() != 2 {
            return Err(hyp("the explicit bases live in characteristic 2".into()));
        }
        let types = match self.id {
            TheoremId::PowerOfTwo => self.build_power_of_two(st),
            TheoremId::ThreeTimesPowerOfTwo => self.build_three_times(st)?,
            TheoremId::MixedOddLog => self.build_mixed_odd(st),
            TheoremId::MixedEvenLog => self.build_mixed_even(st),
            TheoremId::MixedSmallK => self.build_small_k(st)?,
        };
        Ok(TheoremFamily { spec: self.clone(), types })
    }

    fn build_power_of_two(&self, st: &Setting) -> Vec<GeneratorType> {
        let n = self.n;
        let mut out = vec![ty("T1", st.q_power_gens(n)), ty("T2", vec![st.f().pow(n)])];
        let b = st.xy_binomial(2 * n);
        if self.s % 2 == 1 {
            let m = (n - 2) / 3;
            out.push(ty("T3", st.times_q_power(&b.mul(&st.mono([1, 1, 0, n])), m)));
            out.push(ty("T4", st.times_q_power(&st.mono([2, 2 * n + 1, 0, n]), m)));
        } else {
            out.push(ty("T3", st.times_q_power(&b.mul(&st.mono([2, 2, 0, n])), (n - 4) / 3)));
            let mut t4 = st.times_q_power(&st.mono([2, 2 * n, 0, n]), (n - 1) / 3);
            t4.push(st.mono([2 * n, n + 1, 0, n]));
            out.push(ty("T4", t4));
        }
        out
    }

    fn build_three_times(&self, st: &Setting) -> Result<Vec<GeneratorType>> {
        let (n, t) = (self.n, self.t());
        let r = st.ring();
        let p = |s: &str| parse_polynomial(r, s);
        let f3 = p("(x^3*y + x*y^3)*a^2 + (x^4 + y^4)*a*b + (x^3*y + x*y^3)*b^2")?.pow(t);
        let f5 = p("y^3*a^2 + x^3*a*b + y^3*b^2")?.pow(t);
        let f7 = p("x*y^5*a^3 + y^6*a^2*b + x^3*y^3*a*b^2 + (x^6 + x^4*y^2 + y^6)*b^3")?.pow(t);
        let f9 = p("y^6*a^2 + x^3*y^3*a*b + x^6*b^2")?.pow(t);
        let f10 = p("y^6*a^2 + x^3*y^3*a*b + (x^6 + y^6)*b^2")?.pow(t);
        let f12 = p("y^3*a + x^3*b")?.pow(t);
        let f13 = p("x^3*a + y^3*b")?.pow(t);
        let m = |e: [u32; 4]| st.mono(e);
        Ok(vec![
            ty("T1", st.q_power_gens(n)),
            ty("T2", vec![st.f().pow(n)]),
            ty("T3", st.times_q_power(&f3.mul(&m([t, t, 0, t])), t)),
            ty("T4", st.times_q_power(&st.xy_binomial(6 * t).mul(&m([t, t, t, 2 * t])), (t + 1) / 3)),
            ty("T5", st.times_q_power(&f5.mul(&m([2 * t + 1, 2 * t + 4, 0, t])), (2 * t - 4) / 3)),
            ty("T6", st.times_q_power(&st.xy_binomial(8 * t).mul(&m([1, 1, 0, 4 * t])), (t - 2) / 3)),
            ty("T7", st.times_q_power(&f7.mul(&m([t, t + 2, 0, t])), (t - 2) / 3)),
            ty("T8", st.times_q_power(&m([2, 8 * t + 1, 0, 4 * t]), (t - 2) / 3)),
            ty("T9", vec![f9.mul(&m([t, 2 * t + 1, 0, 2 * t]))]),
            ty("T10", st.times_q_power(&f10.mul(&m([t + 3, t + 3, 0, 2 * t])), (t - 5) / 3)),
            ty("T11", vec![m([2 * t + 1, 7 * t, t, 4 * t])]),
            ty("T12", vec![f12.mul(&m([4 * t, 2 * t + 1, 0, 5 * t]))]),
            ty("T13", vec![f13.mul(&m([2 * t + 1, 4 * t, 0, 5 * t]))]),
            ty("T14", vec![m([5 * t + 1, 4 * t, 0, 7 * t]), m([4 * t, 5 * t + 1, 0, 7 * t])]),
            ty("T15", vec![m([7 * t, 2 * t + 1, 0, 8 * t]), m([2 * t + 1, 7 * t, 0, 8 * t])]),
        ])
    }

    fn build_mixed_odd(&self, st: &Setting) -> Vec<GeneratorType> {
        let (n, k) = (self.n, self.k);
        let m = |e: [u32; 4]| st.mono(e);
        let mut out = vec![ty("T1", st.q_power_gens(n)), ty("T2", vec![st.f().pow(k)])];
        out.push(ty("T3", st.times_q_power(&st.xy_binomial(2 * k).mul(&m([1, 1, 0, k])), n - (2 * k + 2) / 3)));
        out.push(ty("T4", st.times_q_power(&m([2, 3 * n - 2 * k + 3, 0, k]), (2 * k - 4) / 3)));
        let mut t5 = Vec::new();
        for tau in 0..n / (2 * k) {
            let base = st.xy_binomial(6 * k * tau + 4 * k).mul(&m([2, 3 * n - 6 * k + 2 - 6 * k * tau, 0, 2 * k]));
            t5.extend(st.times_q_power(&base, (2 * k - 4) / 3));
        }
        out.push(ty("T5", t5));
        let mut t6 = Vec::new();
        for l in 1..n / (2 * k) {
            let base = st.xy_binomial(6 * k * l).mul(&m([1, 3 * n - 4 * k + 1 - 6 * k * l, 0, 2 * k]));
            t6.extend(st.times_q_power(&base, (4 * k - 2) / 3));
        }
        out.push(ty("T6", t6));
        let c7 = m([0, 3 * k, k, 0]).add(&m([3 * k, 0, 0, k]));
        out.push(ty("T7", st.times_q_power(&c7.mul(&m([1, 3 * n - 4 * k + 1, 0, k])), (k - 2) / 3)));
        let c8 = m([0, k, k, 0]).add(&m([k, 0, 0, k]));
        out.push(ty("T8", st.times_q_power(&c8.mul(&m([2, 3 * n - 2 * k + 3, 0, 2 * k])), (k - 5) / 3)));
        out
    }

    fn build_mixed_even(&self, st: &Setting) -> Vec<GeneratorType> {
        let (n, k) = (self.n, self.k);
        let m = |e: [u32; 4]| st.mono(e);
        let mut out = vec![ty("T1", st.q_power_gens(n)), ty("T2", vec![st.f().pow(k)])];
        out.push(ty("T3", st.times_q_power(&st.xy_binomial(2 * k).mul(&m([2, 2, 0, k])), n - (2 * k + 4) / 3)));
        out.push(ty("T4", st.times_q_power(&m([2, 3 * n - 2 * k + 1, 0, k]), (2 * k - 2) / 3)));
        let mut t5 = Vec::new();
        for tau in 0..n / (2 * k) {
            let base = st.xy_binomial(6 * k * tau + 4 * k).mul(&m([1, 3 * n - 6 * k + 1 - 6 * k * tau, 0, 2 * k]));
            t5.extend(st.times_q_power(&base, (2 * k - 2) / 3));
        }
        out.push(ty("T5", t5));
        let mut t6 = Vec::new();
        for l in 1..n / (2 * k) {
            let base = st.xy_binomial(6 * k * l).mul(&m([2, 3 * n - 4 * k + 2 - 6 * k * l, 0, 2 * k]));
            t6.extend(st.times_q_power(&base, (4 * k - 4) / 3));
        }
        out.push(ty("T6", t6));
        let c7 = m([0, 3 * k, k, 0]).add(&m([3 * k, 0, 0, k]));
        out.push(ty("T7", st.times_q_power(&c7.mul(&m([2, 3 * n - 4 * k + 2, 0, k])), (k - 4) / 3)));
        let c8 = m([0, k, k, 0]).add(&m([k, 0, 0, k]));
        out.push(ty("T8", st.times_q_power(&c8.mul(&m([1, 3 * n - 2 * k + 3, 0, 2 * k])), (k - 4) / 3)));
        out
    }

    fn build_small_k(&self, st: &Setting) -> Result<Vec<GeneratorType>> {
        let n = self.n;
        let m = |e: [u32; 4]| st.mono(e);
        let mut out = vec![ty("T1", st.q_power_gens(n)), ty("T2", vec![st.f().pow(self.k)])];
        if self.k == 1 {
            out.push(ty("T3", st.times_q_power(&st.xy_binomial(2).mul(&m([2, 2, 0, 1])), n - 2)));
            out.push(ty("T4", vec![m([2, 3 * n - 1, 0, 1])]));
            let t5 = (0..n / 2).map(|tau| st.xy_binomial(6 * tau + 4).mul(&m([1, 3 * n - 5 - 6 * tau, 0, 2]))).collect();
            out.push(ty("T5", t5));
            let t6 = (1..n / 2).map(|l| st.xy_binomial(6 * l).mul(&m([2, 3 * n - 2 - 6 * l, 0, 2]))).collect();
            out.push(ty("T6", t6));
        } else {
            out.push(ty("T3", st.times_q_power(&st.xy_binomial(4).mul(&m([1, 1, 0, 2])), n - 2)));
            out.push(ty("T4", vec![m([2, 3 * n - 1, 0, 2])]));
            let t5 = (0..n / 4).map(|tau| st.xy_binomial(12 * tau + 8).mul(&m([2, 3 * n - 10 - 12 * tau, 0, 4]))).collect();
            out.push(ty("T5", t5));
            let mut t6 = Vec::new();
            for l in 1..n / 4 {
                t6.extend(st.times_q_power(&st.xy_binomial(12 * l).mul(&m([1, 3 * n - 7 - 12 * l, 0, 4])), 2));
            }
            out.push(ty("T6", t6));
            let c7 = parse_polynomial(st.ring(), "y^6*a^2 + x^6*b^2")?;
            out.push(ty("T7", vec![c7.mul(&m([1, 3 * n - 7, 0, 2]))]));
        }
        Ok(out)
    }

    /// The closed-form initial ideal of `Q^n + (f^k)`.
    pub fn expected_initial_ideal(&self, st: &Setting) -> Result<MonomialIdeal> {
        let (n, k) = (self.n as i64, self.k as i64);
        let (nu, ku) = (self.n, self.k);
        let mut parts: Vec<Gens> = vec![q_pow(n)];
        match self.id {
            TheoremId::PowerOfTwo => {
                parts.push(single([nu, nu, nu, 0]));
                if self.s % 2 == 1 {
                    parts.push(times(&[single([2 * nu + 1, 1, 0, nu]), q_pow((n - 2) / 3)]));
                    parts.push(times(&[single([2, 2 * nu + 1, 0, nu]), q_pow((n - 2) / 3)]));
                } else {
                    parts.push(times(&[single([2 * nu + 2, 2, 0, nu]), q_pow((n - 4) / 3)]));
                    parts.push(times(&[single([2, 2 * nu, 0, nu]), q_pow((n - 1) / 3)]));
                    parts.push(single([2 * nu, nu + 1, 0, nu]));
                }
            }
            TheoremId::ThreeTimesPowerOfTwo => {
                let t = self.t();
                let ti = t as i64;
                parts.push(single([nu, nu, nu, 0]));
                parts.push(times(&[single([4 * t, 2 * t, 2 * t, t]), q_pow(ti)]));
                parts.push(times(&[single([7 * t, t, t, 2 * t]), q_pow((ti + 1) / 3)]));
                parts.push(times(&[single([2 * t + 1, 5 * t + 4, 2 * t, t]), q_pow((2 * ti - 4) / 3)]));
                parts.push(times(&[single([8 * t + 1, 1, 0, 4 * t]), q_pow((ti - 2) / 3)]));
                parts.push(times(&[single([2 * t, 6 * t + 2, 3 * t, t]), q_pow((ti - 2) / 3)]));
                parts.push(times(&[single([2, 8 * t + 1, 0, 4 * t]), q_pow((ti - 2) / 3)]));
                parts.push(single([t, 8 * t + 1, 2 * t, 2 * t]));
                parts.push(times(&[single([t + 3, 7 * t + 3, 2 * t, 2 * t]), q_pow((ti - 5) / 3)]));
                parts.push(single([2 * t + 1, 7 * t, t, 4 * t]));
                parts.push(single([4 * t, 5 * t + 1, t, 5 * t]));
                parts.push(single([5 * t + 1, 4 * t, t, 5 * t]));
                parts.push(Some(vec![[5 * t + 1, 4 * t, 0, 7 * t], [4 * t, 5 * t + 1, 0, 7 * t]]));
                parts.push(Some(vec![[7 * t, 2 * t + 1, 0, 8 * t], [2 * t + 1, 7 * t, 0, 8 * t]]));
            }
            TheoremId::MixedOddLog | TheoremId::MixedEvenLog | TheoremId::MixedSmallK => {
                parts.push(single([ku, ku, ku, 0]));
                // k = 1 is the even-logarithm pattern, k = 2 the odd one.
                let odd = self.u.expect("mixed family") % 2 == 1;
                let pairs = |e: i64| pair_pow(6 * ku, e);
                let h = n / (2 * k);
                let y = |v: i64| v as u32;
                if odd {
                    parts.push(times(&[single([2 * ku + 1, 1, 0, ku]), q_pow(n - (2 * k + 2) / 3)]));
                    parts.push(times(&[single([2, y(3 * n - 2 * k + 3), 0, ku]), q_pow((2 * k - 4) / 3)]));
                    parts.push(times(&[single([4 * ku + 2, 2, 0, 2 * ku]), pairs(h - 1), q_pow((2 * k - 4) / 3)]));
                    parts.push(times(&[single([6 * ku + 1, 2 * ku + 1, 0, 2 * ku]), pairs(h - 2), q_pow((4 * k - 2) / 3)]));
                    parts.push(times(&[single([1, y(3 * n - k + 1), ku, ku]), q_pow(div_floor(k - 2, 3))]));
                    parts.push(times(&[single([2, y(3 * n - k + 3), ku, 2 * ku]), q_pow(div_floor(k - 5, 3))]));
                } else {
                    parts.push(times(&[single([2 * ku + 2, 2, 0, ku]), q_pow(n - (2 * k + 4) / 3)]));
                    parts.push(times(&[single([2, y(3 * n - 2 * k + 1), 0, ku]), q_pow((2 * k - 2) / 3)]));
                    parts.push(times(&[single([4 * ku + 1, 1, 0, 2 * ku]), pairs(h - 1), q_pow((2 * k - 2) / 3)]));
                    parts.push(times(&[single([6 * ku + 2, 2 * ku + 2, 0, 2 * ku]), pairs(h - 2), q_pow((4 * k - 4) / 3)]));
                    parts.push(times(&[single([2, y(3 * n - k + 2), ku, ku]), q_pow(div_floor(k - 4, 3))]));
                    parts.push(times(&[single([1, y(3 * n - k + 3), ku, 2 * ku]), q_pow(div_floor(k - 4, 3))]));
                }
            }
        }
        let gens: Vec<Monomial> = parts.into_iter().flatten().flatten().map(|e| Monomial::from_exps(&e)).collect();
        MonomialIdeal::new(st.ring(), gens)
    }

    /// Homogeneous element of `(I : m) \ I` for `I = Q^n + (f^k)`.
    pub fn witness(&self, st: &Setting) -> Polynomial {
        let (n, k) = (self.n, self.k);
        match self.id {
            TheoremId::PowerOfTwo if self.s % 2 == 1 => st.mono([n, 2 * n + 1, n - 1, n - 1]),
            TheoremId::PowerOfTwo => st.mono([n + 1, 2 * n, n - 1, n - 1]),
            TheoremId::ThreeTimesPowerOfTwo => {
                let t = self.t();
                st.mono([2 * t + 1, 7 * t, t - 1, 8 * t - 1])
            }
            _ => st.mono([3 * n - k, k, k - 1, 2 * k - 1]).add(&st.mono([k, 3 * n - k, k - 1, 2 * k - 1])),
        }
    }

    pub fn witness_degree(&self) -> u32 {
        match self.id {
            TheoremId::PowerOfTwo => 5 * self.n - 1,
            TheoremId::ThreeTimesPowerOfTwo => 6 * self.n - 1,
            _ => 3 * self.n + 3 * self.k - 2,
        }
    }

    /// Stated interval for `reg(Q^n + (f^k))`; the `3·2^s` family has a
    /// lower bound only.
    pub fn stated_interval(&self) -> (i64, Option<i64>) {
        let (n, k) = (self.n as i64, self.k as i64);
        match self.id {
            TheoremId::PowerOfTwo => (5 * n, Some(5 * n + 2)),
            TheoremId::ThreeTimesPowerOfTwo => (6 * n, None),
            _ => (3 * n + 3 * k - 1, Some(3 * n + 3 * k + 2)),
        }
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ty(label: &str, gens: Vec<Polynomial>) -> GeneratorType {
    GeneratorType { label: label.to_string(), gens }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(id: TheoremId, n: u32, k: Option<u32>) -> TheoremFamilySpec {
        TheoremFamilySpec::new(id, n, k).unwrap()
    }

    #[test]
    fn counts_and_degrees_match_the_formulas() {
        let st = Setting::new(2).unwrap();
        for (id, n, k, count) in [
            (TheoremId::PowerOfTwo, 8, None, 16),
            (TheoremId::PowerOfTwo, 16, None, 30),
            (TheoremId::ThreeTimesPowerOfTwo, 24, None, 63),
            (TheoremId::MixedOddLog, 16, Some(8), 44),
            (TheoremId::MixedEvenLog, 8, Some(4), 23),
            (TheoremId::MixedSmallK, 8, Some(1), 25),
            (TheoremId::MixedSmallK, 8, Some(2), 24),
        ] {
            let sp = spec(id, n, k);
            assert_eq!(sp.expected_count(), count, "{id:?} n={n}");
            let fam = sp.build(&st).unwrap();
            assert_eq!(fam.len(), count, "{id:?} n={n}");
            assert_eq!(fam.max_degree(), sp.expected_max_degree(), "{id:?} n={n}");
            assert!(fam.all().iter().all(|g| g.is_homogeneous()));
        }
        assert_eq!(spec(TheoremId::PowerOfTwo, 8, None).expected_max_degree(), 33);
        assert_eq!(spec(TheoremId::ThreeTimesPowerOfTwo, 24, None).expected_max_degree(), 137);
    }

    #[test]
    fn hypotheses_are_enforced() {
        use TheoremId::*;
        for (id, n, k) in [
            (PowerOfTwo, 4, None),
            (PowerOfTwo, 12, None),
            (PowerOfTwo, 8, Some(4)),
            (ThreeTimesPowerOfTwo, 48, None),
            (ThreeTimesPowerOfTwo, 12, None),
            (ThreeTimesPowerOfTwo, 25, None),
            (MixedOddLog, 16, Some(4)),
            (MixedOddLog, 8, Some(8)),
            (MixedEvenLog, 16, Some(8)),
            (MixedEvenLog, 4, Some(4)),
            (MixedSmallK, 2, Some(1)),
            (MixedSmallK, 8, Some(4)),
            (MixedSmallK, 8, None),
        ] {
            assert!(matches!(TheoremFamilySpec::new(id, n, k), Err(Error::Hypothesis(_))), "{id:?} {n} {k:?}");
        }
        assert_eq!(TheoremId::by_name("GB_2powers").unwrap(), PowerOfTwo);
        assert!(TheoremId::by_name("nope").is_err());
    }

    #[test]
    fn witnesses_have_the_stated_degrees() {
        let st = Setting::new(2).unwrap();
        let w = spec(TheoremId::PowerOfTwo, 8, None).witness(&st);
        assert_eq!(w.render(), "x^8*y^17*a^7*b^7");
        let w = spec(TheoremId::ThreeTimesPowerOfTwo, 24, None).witness(&st);
        assert_eq!(w.render(), "x^17*y^56*a^7*b^63");
        let sp = spec(TheoremId::MixedOddLog, 16, Some(8));
        assert_eq!(sp.witness(&st).render(), "x^40*y^8*a^7*b^15 + x^8*y^40*a^7*b^15");
        for sp in [sp, spec(TheoremId::MixedEvenLog, 8, Some(4)), spec(TheoremId::PowerOfTwo, 16, None)] {
            assert_eq!(sp.witness(&st).degree(), Some(sp.witness_degree()));
        }
    }
}
