use crate::algebra::{parse_polynomial, Monomial, Polynomial, Ring, RingSpec};
use crate::error::Result;
use crate::groebner::IdealPresentation;
use crate::monomial::MonomialIdeal;

/// `k[x,y,a,b]` with degrevlex `x > y > a > b`, `Q = (x^3, y^3)` and
/// `f = xya - (x^2+y^2)b`.
#[derive(Clone, Debug)]
pub struct Setting {
    ring: Ring,
    f: Polynomial,
}

impl Setting {
    pub fn new(characteristic: u64) -> Result<Setting> {
        let ring = RingSpec::degrevlex(characteristic, &["x", "y", "a", "b"])?;
        let f = parse_polynomial(&ring, "x*y*a - (x^2 + y^2)*b")?;
        Ok(Setting { ring, f })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn mono(&self, e: [u32; 4]) -> Polynomial {
        Polynomial::monomial(&self.ring, Monomial::from_exps(&e))
    }

    /// `x^e + y^e`.
    pub fn xy_binomial(&self, e: u32) -> Polynomial {
        self.mono([e, 0, 0, 0]).add(&self.mono([0, e, 0, 0]))
    }

    /// Exponents of the minimal generators `x^{3i} y^{3(m-i)}` of `Q^m`, by
    /// increasing `i`.
    pub fn q_power_exps(m: u32) -> Vec<[u32; 4]> {
        (0..=m).map(|i| [3 * i, 3 * (m - i), 0, 0]).collect()
    }

    pub fn q_power(&self, m: u32) -> MonomialIdeal {
        let gens = Self::q_power_exps(m).iter().map(|e| Monomial::from_exps(e)).collect();
        MonomialIdeal::new(&self.ring, gens).expect("arity 4")
    }

    pub fn q_power_gens(&self, m: u32) -> Vec<Polynomial> {
        Self::q_power_exps(m).into_iter().map(|e| self.mono(e)).collect()
    }

    /// `base · g` for every minimal generator `g` of `Q^m`.
    pub fn times_q_power(&self, base: &Polynomial, m: u32) -> Vec<Polynomial> {
        Self::q_power_exps(m).iter().map(|e| base.mul_monomial(&Monomial::from_exps(e))).collect()
    }

    /// `Q^n + (f^k)`.
    pub fn sum_ideal(&self, n: u32, k: u32) -> Result<IdealPresentation> {
        let mut gens = self.q_power_gens(n);
        gens.push(self.f.pow(k));
        Ok(IdealPresentation::new(&self.ring, gens)?.with_provenance(&format!("Q^{n} + (f^{k})")))
    }

    /// `Q^n ∩ (f^k)`.
    pub fn intersection_ideal(&self, n: u32, k: u32) -> Result<IdealPresentation> {
        let q = IdealPresentation::new(&self.ring, self.q_power_gens(n))?;
        let fk = IdealPresentation::new(&self.ring, vec![self.f.pow(k)])?;
        Ok(q.intersect(&fk)?.with_provenance(&format!("Q^{n} ∩ (f^{k})")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_is_the_same_polynomial_in_both_characteristics() {
        assert_eq!(Setting::new(2).unwrap().f().render(), "x*y*a + x^2*b + y^2*b");
        assert_eq!(Setting::new(0).unwrap().f().render(), "x*y*a - x^2*b - y^2*b");
        let s = Setting::new(2).unwrap();
        assert_eq!(s.q_power(2).len(), 3);
        assert_eq!(s.times_q_power(&s.mono([0, 0, 0, 1]), 1)[0].render(), "y^3*b");
    }
}
