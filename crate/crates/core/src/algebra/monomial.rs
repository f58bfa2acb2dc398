use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u32; 6]>;

/// Exponent vector with cached total degree. The derived `Ord` is a structural
/// order for use as a map key; term orders live in [`crate::algebra::TermOrder`].
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn one(arity: usize) -> Monomial {
        Monomial { deg: 0, exps: SmallVec::from_elem(0, arity) }
    }

    pub fn new(exps: &[u32]) -> Result<Monomial> {
        let mut deg = 0u32;
        for &e in exps {
            deg = deg.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial { deg, exps: SmallVec::from_slice(exps) })
    }

    /// Panics on degree overflow; use [`Monomial::new`] for untrusted input.
    pub fn from_exps(exps: &[u32]) -> Monomial {
        Monomial::new(exps).expect("exponent overflow")
    }

    pub fn var(arity: usize, index: usize, power: u32) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, arity);
        exps[index] = power;
        Monomial { deg: power, exps }
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_arity(self, other)?;
        let mut exps = self.exps.clone();
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        let deg = self.deg.checked_add(other.deg).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { deg, exps })
    }

    /// Product; panics on exponent overflow.
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let mut exps = self.exps.clone();
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial { deg: self.deg.checked_add(other.deg).expect("exponent overflow"), exps }
    }

    pub fn try_pow(&self, e: u32) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        for a in exps.iter_mut() {
            *a = a.checked_mul(e).ok_or(Error::ExponentOverflow)?;
        }
        let deg = self.deg.checked_mul(e).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial { deg, exps })
    }

    pub fn pow(&self, e: u32) -> Monomial {
        self.try_pow(e).expect("exponent overflow")
    }

    /// True iff `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        Some(Monomial { deg: self.deg - other.deg, exps })
    }

    /// Quotient by the largest divisor of `self` that divides `other`:
    /// the monomial colon `self : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        let exps: Exponents =
            self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a.saturating_sub(*b)).collect();
        let deg = exps.iter().sum();
        Monomial { deg, exps }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.max(b)).collect();
        let deg = exps.iter().sum();
        Monomial { deg, exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect();
        let deg = exps.iter().sum();
        Monomial { deg, exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Sum of exponents over the given variable indices.
    pub fn partial_degree(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exps[i]).sum()
    }

    /// Bidegree under a per-variable weight table.
    pub fn bidegree(&self, grading: &[[u32; 2]]) -> [u32; 2] {
        let mut out = [0u32; 2];
        for (e, w) in self.exps.iter().zip(grading.iter()) {
            out[0] += e * w[0];
            out[1] += e * w[1];
        }
        out
    }

    /// Variable indices with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect()
    }

    /// Same exponents with `extra` zero slots inserted in front.
    pub fn shifted(&self, extra: usize) -> Monomial {
        let mut exps: Exponents = SmallVec::from_elem(0, extra);
        exps.extend_from_slice(&self.exps);
        Monomial { deg: self.deg, exps }
    }

    /// Drops the first `count` slots.
    pub fn unshifted(&self, count: usize) -> Monomial {
        Monomial::from_exps(&self.exps[count..])
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = e;
        Monomial::from_exps(&exps)
    }

    /// Bit signature: if `a | b` then `a.divmask() & !b.divmask() == 0`.
    pub fn divmask(&self) -> u64 {
        const THRESHOLDS: [u32; 16] = [1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 192, 256];
        let n = self.exps.len().max(1);
        let per = (64 / n).clamp(1, 16);
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if i * per >= 64 {
                break;
            }
            for (k, &t) in THRESHOLDS.iter().take(per).enumerate() {
                if e >= t {
                    mask |= 1u64 << (i * per + k);
                } else {
                    break;
                }
            }
        }
        mask
    }

    /// Renders with the given names, e.g. `x^2*y`; `1` for the unit monomial.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (e, name) in self.exps.iter().zip(names.iter()) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

fn check_arity(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch(a.arity(), b.arity()));
    }
    Ok(())
}

/// All monomials of total degree `d` in `arity` variables, in lexicographic order
/// of exponent vectors (descending first exponent).
pub fn monomials_of_degree(arity: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; arity];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if arity == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_laws() {
        let m = Monomial::from_exps(&[2, 0, 1]);
        let n = Monomial::from_exps(&[1, 3, 0]);
        assert_eq!(m.lcm(&m), m);
        assert!(m.divides(&m.lcm(&n)));
        assert!(n.divides(&m.lcm(&n)));
        assert_eq!(m.gcd(&n), Monomial::from_exps(&[1, 0, 0]));
        assert_eq!(m.mul(&n).div(&n), Some(m.clone()));
        assert_eq!(m.div(&n), None);
    }

    #[test]
    fn overflow_is_reported() {
        let m = Monomial::from_exps(&[u32::MAX, 0]);
        assert_eq!(m.try_mul(&Monomial::from_exps(&[1, 0])), Err(Error::ExponentOverflow));
        assert!(Monomial::new(&[u32::MAX, 1]).is_err());
    }

    #[test]
    fn divmask_respects_divisibility() {
        let a = Monomial::from_exps(&[3, 1, 0, 5]);
        let b = Monomial::from_exps(&[4, 1, 2, 9]);
        assert_eq!(a.divmask() & !b.divmask(), 0);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
        assert_eq!(monomials_of_degree(1, 7), vec![Monomial::from_exps(&[7])]);
    }
}
