use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{monomials_of_degree, parse_polynomial_list, same_ring, Monomial, Polynomial, Ring, RingSpec};
use crate::error::{Error, Result};

/// Monomial ideal stored by its minimal generators.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialIdealJson {
    ring: Value,
    gens: Vec<String>,
}

/// Canonical generator order: degree ascending, then term order descending.
fn canonical_cmp(ring: &Ring, a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| ring.order().cmp(b, a))
}

/// Drops generators divisible by others and sorts canonically.
pub fn minimalize(ring: &Ring, mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| canonical_cmp(ring, a, b));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    let mut masks: Vec<u64> = Vec::with_capacity(gens.len());
    for g in gens {
        let mask = g.divmask();
        // Sorted by degree, so only earlier entries can divide `g`.
        if !kept.iter().zip(&masks).any(|(k, &mk)| mk & !mask == 0 && k.divides(&g)) {
            kept.push(g);
            masks.push(mask);
        }
    }
    kept
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        if let Some(g) = gens.iter().find(|g| g.arity() != ring.arity()) {
            return Err(Error::ArityMismatch(g.arity(), ring.arity()));
        }
        Ok(MonomialIdeal { ring: ring.clone(), gens: minimalize(ring, gens) })
    }

    pub(crate) fn from_minimal(ring: &Ring, gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal { ring: ring.clone(), gens: minimalize(ring, gens) }
    }

    pub fn zero(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &Ring) -> MonomialIdeal {
        MonomialIdeal { ring: ring.clone(), gens: vec![Monomial::one(ring.arity())] }
    }

    /// The ideal generated by the variables with the given indices.
    pub fn variables(ring: &Ring, vars: &[usize]) -> MonomialIdeal {
        let gens = vars.iter().map(|&i| Monomial::var(ring.arity(), i, 1)).collect();
        MonomialIdeal::from_minimal(ring, gens)
    }

    /// Parses a comma-separated list of monomials, e.g. `"x^3, y^3"`.
    pub fn parse(ring: &Ring, text: &str) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for p in parse_polynomial_list(ring, text)? {
            if p.is_zero() {
                continue;
            }
            if !p.is_monomial() {
                return Err(Error::InvalidArgument(format!("`{}` is not a monomial", p.render())));
            }
            gens.push(p.lm().clone());
        }
        MonomialIdeal::new(ring, gens)
    }

    /// `{"ring": <ring spec>, "gens": ["x^3", "y^3"]}`.
    pub fn from_json(text: &str) -> Result<MonomialIdeal> {
        let raw: MonomialIdealJson = serde_json::from_str(text)?;
        let ring = RingSpec::from_value(&raw.ring)?;
        let joined = raw.gens.join(",");
        if raw.gens.is_empty() {
            return Ok(MonomialIdeal::zero(&ring));
        }
        MonomialIdeal::parse(&ring, &joined)
    }

    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(MonomialIdealJson { ring: self.ring.to_json_value(), gens: self.rendered_gens() })
            .expect("json")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().map(|g| g.is_one()).unwrap_or(false)
    }

    pub fn rendered_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.render(self.ring.vars())).collect()
    }

    pub fn render(&self) -> String {
        format!("({})", self.rendered_gens().join(", "))
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.gens.iter().map(|g| Polynomial::monomial(&self.ring, g.clone())).collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.divmask();
        self.gens.iter().any(|g| g.divmask() & !mask == 0 && g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn check(&self, other: &MonomialIdeal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::from_minimal(&self.ring, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        Ok(MonomialIdeal::from_minimal(&self.ring, gens))
    }

    pub fn power(&self, e: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(&self.ring);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Intersection via pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::from_minimal(&self.ring, gens))
    }

    /// `I : m`, by exponent subtraction.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        MonomialIdeal::from_minimal(&self.ring, gens)
    }

    /// `I : J` as the intersection of `I : g` over generators of `J`.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check(other)?;
        let mut acc = MonomialIdeal::unit(&self.ring);
        for g in &other.gens {
            acc = acc.intersect(&self.colon(g))?;
        }
        Ok(acc)
    }

    /// `(I : m) \ I` restricted to minimal generators of `I : m`, where `m` is
    /// the homogeneous maximal ideal.
    pub fn socle_generators(&self) -> Vec<Monomial> {
        let all: Vec<usize> = (0..self.ring.arity()).collect();
        let m = MonomialIdeal::variables(&self.ring, &all);
        let colon = self.colon_ideal(&m).expect("same ring");
        colon.gens.into_iter().filter(|g| !self.contains(g)).collect()
    }

    fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::InvalidArgument("zero ideal".into()))
        } else if self.is_unit() {
            Err(Error::InvalidArgument("unit ideal".into()))
        } else {
            Ok(())
        }
    }

    /// `d(I)`: largest degree of a minimal generator.
    pub fn max_gen_degree(&self) -> Result<u32> {
        self.require_proper_nonzero()?;
        Ok(self.gens.iter().map(|g| g.degree()).max().expect("nonzero"))
    }

    /// `μ(I)`: number of minimal generators.
    pub fn num_min_gens(&self) -> Result<usize> {
        self.require_proper_nonzero()?;
        Ok(self.gens.len())
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        (0..self.ring.arity()).filter(|&i| self.gens.iter().any(|g| g.exp(i) > 0)).collect()
    }

    /// True when a pure power of every variable lies in the ideal.
    pub fn is_artinian(&self) -> bool {
        (0..self.ring.arity()).all(|i| self.gens.iter().any(|g| g.support() == [i]))
    }

    /// `dim_k (R/I)_d`: degree-`d` monomials outside the ideal.
    pub fn quotient_dimension(&self, d: u32) -> u64 {
        monomials_of_degree(self.ring.arity(), d).iter().filter(|m| !self.contains(m)).count() as u64
    }

    /// Minimal vertex covers of the supports of the generators, each as a
    /// sorted list of variable indices; the list is sorted.
    pub fn minimal_primes(&self) -> Result<Vec<Vec<usize>>> {
        self.require_proper_nonzero()?;
        let edges: Vec<u64> = self
            .gens
            .iter()
            .map(|g| g.support().iter().fold(0u64, |acc, &i| acc | (1 << i)))
            .collect();
        if self.ring.arity() > 63 {
            return Err(Error::InvalidArgument("too many variables for cover enumeration".into()));
        }
        let mut covers = Vec::new();
        cover_search(&edges, 0, &mut covers);
        covers.sort_unstable();
        covers.dedup();
        let minimal: Vec<u64> =
            covers.iter().copied().filter(|&c| !covers.iter().any(|&d| d != c && d & c == d)).collect();
        let mut out: Vec<Vec<usize>> =
            minimal.iter().map(|&c| (0..64).filter(|i| c & (1 << i) != 0).collect()).collect();
        out.sort();
        Ok(out)
    }

    /// Contraction of the localization at the prime generated by `prime`:
    /// exponents of variables outside `prime` are erased.
    pub fn localize_at_prime(&self, prime: &[usize]) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let e: Vec<u32> =
                    (0..g.arity()).map(|i| if prime.contains(&i) { g.exp(i) } else { 0 }).collect();
                Monomial::from_exps(&e)
            })
            .collect();
        MonomialIdeal::from_minimal(&self.ring, gens)
    }

    /// Minimal symbolic power: the intersection over minimal primes of the
    /// localized ordinary powers.
    pub fn symbolic_power_min(&self, n: u32) -> Result<MonomialIdeal> {
        let primes = self.minimal_primes()?;
        let pow = self.power(n)?;
        let mut acc = MonomialIdeal::unit(&self.ring);
        for p in &primes {
            acc = acc.intersect(&pow.localize_at_prime(p))?;
        }
        Ok(acc)
    }

    /// Integral closure: minimal lattice points of the Newton polyhedron.
    pub fn integral_closure(&self) -> Result<MonomialIdeal> {
        self.require_proper_nonzero()?;
        let np = crate::polyhedra::MonoPolyhedron::newton(self)?;
        np.lattice_ideal(&self.ring)
    }

    /// Same generators in another ring of the same arity.
    pub fn in_ring(&self, ring: &Ring) -> Result<MonomialIdeal> {
        if ring.arity() != self.ring.arity() {
            return Err(Error::ArityMismatch(ring.arity(), self.ring.arity()));
        }
        Ok(MonomialIdeal::from_minimal(ring, self.gens.clone()))
    }
}

/// Branches on the vertices of the first uncovered edge.
fn cover_search(edges: &[u64], chosen: u64, out: &mut Vec<u64>) {
    match edges.iter().find(|&&e| e & chosen == 0) {
        None => out.push(chosen),
        Some(&e) => {
            // Prune: a superset of an already found cover is never minimal.
            if out.iter().any(|&c| c & chosen == c) {
                return;
            }
            for i in 0..64 {
                if e & (1 << i) != 0 {
                    cover_search(edges, chosen | (1 << i), out);
                }
            }
        }
    }
}

/// `x^i y^j ∈ Q^n` for `Q = (x³, y³)`. For `i + j ≥ 3n` this uses the
/// residue criterion: outside exactly when `i+j = 3n` with `ij ≢ 0 (mod 3)`,
/// or `i+j = 3n+1` with `i ≡ j ≡ 2 (mod 3)`. Below that range it falls back
/// to counting cube factors.
pub fn q_power_membership(i: u32, j: u32, n: u32) -> bool {
    let (i, j, n) = (i as u64, j as u64, n as u64);
    if i + j < 3 * n {
        return i / 3 + j / 3 >= n;
    }
    let outside = (i + j == 3 * n && (i * j) % 3 != 0) || (i + j == 3 * n + 1 && i % 3 == 2 && j % 3 == 2);
    !outside
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        RingSpec::degrevlex(2, &["x", "y", "z"]).unwrap()
    }

    fn ideal(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    #[test]
    fn combinatorial_operations() {
        let r = ring();
        assert_eq!(ideal(&r, "x^3").intersect(&ideal(&r, "y^3")).unwrap(), ideal(&r, "x^3*y^3"));
        let q = ideal(&r, "x^3, y^3");
        assert_eq!(q.colon(&Monomial::var(3, 0, 1)), ideal(&r, "x^2, y^3"));
        assert_eq!(q.power(2).unwrap(), ideal(&r, "x^6, x^3*y^3, y^6"));
        assert_eq!(ideal(&r, "x^3, y^3, x^2*y^2, x^3*y").len(), 3);
        let s = RingSpec::degrevlex(2, &["x", "y", "a", "b"]).unwrap();
        let p = ideal(&s, "a^4, a^3*b, a*b^3, b^4").product(&ideal(&s, "x, y").power(2).unwrap()).unwrap();
        assert_eq!(p.len(), 12);
        let p1 = ideal(&s, "a^4, a^3*b, a*b^3, b^4").product(&ideal(&s, "x, y")).unwrap();
        assert_eq!(p1.len(), 8);
    }

    #[test]
    fn degrees_and_counts() {
        let r = ring();
        let q = ideal(&r, "x^3, y^3");
        for n in 1..5 {
            assert_eq!(q.power(n).unwrap().max_gen_degree().unwrap(), 3 * n);
        }
        assert_eq!(ideal(&r, "x").max_gen_degree().unwrap(), 1);
        assert!(MonomialIdeal::zero(&r).max_gen_degree().is_err());
        assert!(MonomialIdeal::unit(&r).num_min_gens().is_err());
    }

    #[test]
    fn minimal_primes_and_localization() {
        let r = ring();
        let t = ideal(&r, "x*y, x*z, y*z");
        assert_eq!(t.minimal_primes().unwrap(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(ideal(&r, "x^3, y^3").minimal_primes().unwrap(), vec![vec![0, 1]]);
        assert_eq!(ideal(&r, "x").minimal_primes().unwrap(), vec![vec![0]]);
        assert_eq!(ideal(&r, "x^2*y, z^3").localize_at_prime(&[0, 2]), ideal(&r, "x^2, z^3"));
        assert_eq!(t.localize_at_prime(&[0, 1]), ideal(&r, "x, y"));
        assert_eq!(t.localize_at_prime(&[0, 1, 2]), t);
    }

    #[test]
    fn symbolic_powers() {
        let r = ring();
        let t = ideal(&r, "x*y, x*z, y*z");
        let expected = t.power(2).unwrap().sum(&ideal(&r, "x*y*z")).unwrap();
        assert_eq!(t.symbolic_power_min(2).unwrap(), expected);
        // Brute force over the box: m is in the symbolic square iff it has
        // order ≥ 2 along each coordinate pair.
        for a in 0..4u32 {
            for b in 0..4u32 {
                for c in 0..4u32 {
                    let m = Monomial::from_exps(&[a, b, c]);
                    let brute = a + b >= 2 && a + c >= 2 && b + c >= 2;
                    assert_eq!(expected.contains(&m), brute, "{a} {b} {c}");
                }
            }
        }
        let q = ideal(&r, "x^3, y^3");
        assert_eq!(q.symbolic_power_min(3).unwrap(), q.power(3).unwrap());
    }

    #[test]
    fn q_power_examples() {
        assert!(!q_power_membership(2, 1, 1));
        assert!(q_power_membership(15, 9, 8));
        assert!(!q_power_membership(14, 11, 8));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"ring": {"char": 2, "vars": ["x","y"]}, "gens": ["x^3", "y^3"]}"#;
        let i = MonomialIdeal::from_json(text).unwrap();
        assert_eq!(i.rendered_gens(), vec!["x^3", "y^3"]);
        let back = MonomialIdeal::from_json(&i.to_json_value().to_string()).unwrap();
        assert_eq!(back, i);
    }
}
