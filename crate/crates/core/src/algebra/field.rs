use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A field element. Residues are kept in `0..p`, rationals in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Mod(u64),
    Rational(Box<BigRational>),
}

/// Coefficient field of a ring: F_p or Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rationals,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Characteristic 0 gives Q; otherwise the argument must be prime.
    pub fn new(characteristic: u64) -> Result<Field> {
        if characteristic == 0 {
            Ok(Field::Rationals)
        } else if characteristic > u32::MAX as u64 {
            Err(Error::InvalidRing(format!(
                "characteristic {characteristic} is too large"
            )))
        } else if is_prime(characteristic) {
            Ok(Field::Prime(characteristic))
        } else {
            Err(Error::InvalidRing(format!(
                "characteristic {characteristic} is neither 0 nor prime"
            )))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Coefficient {
        match self {
            Field::Prime(_) => Coefficient::Mod(0),
            Field::Rationals => Coefficient::Rational(Box::new(BigRational::zero())),
        }
    }

    pub fn one(&self) -> Coefficient {
        match self {
            Field::Prime(_) => Coefficient::Mod(1),
            Field::Rationals => Coefficient::Rational(Box::new(BigRational::one())),
        }
    }

    pub fn from_i64(&self, v: i64) -> Coefficient {
        match self {
            Field::Prime(p) => Coefficient::Mod(v.rem_euclid(*p as i64) as u64),
            Field::Rationals => Coefficient::Rational(Box::new(BigRational::from_integer(v.into()))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coefficient {
        match self {
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Coefficient::Mod(r.to_u64().expect("residue fits"))
            }
            Field::Rationals => Coefficient::Rational(Box::new(BigRational::from_integer(v.clone()))),
        }
    }

    /// Maps `num/den`; fails when the denominator vanishes in the field.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Coefficient> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        match self {
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                let inv = self
                    .inv(&d)
                    .ok_or_else(|| Error::InvalidArgument("denominator vanishes mod p".into()))?;
                Ok(self.mul(&self.from_bigint(num), &inv))
            }
            Field::Rationals => Ok(Coefficient::Rational(Box::new(BigRational::new(
                num.clone(),
                den.clone(),
            )))),
        }
    }

    pub fn is_zero(&self, a: &Coefficient) -> bool {
        match a {
            Coefficient::Mod(v) => *v == 0,
            Coefficient::Rational(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Coefficient) -> bool {
        match a {
            Coefficient::Mod(v) => *v == 1,
            Coefficient::Rational(q) => q.is_one(),
        }
    }

    pub fn add(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        match (self, a, b) {
            (Field::Prime(2), Coefficient::Mod(x), Coefficient::Mod(y)) => Coefficient::Mod(x ^ y),
            (Field::Prime(p), Coefficient::Mod(x), Coefficient::Mod(y)) => {
                Coefficient::Mod(((*x as u128 + *y as u128) % *p as u128) as u64)
            }
            (Field::Rationals, Coefficient::Rational(x), Coefficient::Rational(y)) => {
                Coefficient::Rational(Box::new(x.as_ref() + y.as_ref()))
            }
            _ => panic!("coefficient does not belong to the field"),
        }
    }

    pub fn neg(&self, a: &Coefficient) -> Coefficient {
        match (self, a) {
            (Field::Prime(p), Coefficient::Mod(x)) => Coefficient::Mod(if *x == 0 { 0 } else { p - x }),
            (Field::Rationals, Coefficient::Rational(x)) => Coefficient::Rational(Box::new(-x.as_ref())),
            _ => panic!("coefficient does not belong to the field"),
        }
    }

    pub fn sub(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        match (self, a, b) {
            (Field::Prime(p), Coefficient::Mod(x), Coefficient::Mod(y)) => {
                Coefficient::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (Field::Rationals, Coefficient::Rational(x), Coefficient::Rational(y)) => {
                Coefficient::Rational(Box::new(x.as_ref() * y.as_ref()))
            }
            _ => panic!("coefficient does not belong to the field"),
        }
    }

    pub fn inv(&self, a: &Coefficient) -> Option<Coefficient> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (Field::Prime(p), Coefficient::Mod(x)) => Some(Coefficient::Mod(mod_pow(*x, p - 2, *p))),
            (Field::Rationals, Coefficient::Rational(x)) => Some(Coefficient::Rational(Box::new(x.recip()))),
            _ => panic!("coefficient does not belong to the field"),
        }
    }

    pub fn div(&self, a: &Coefficient, b: &Coefficient) -> Coefficient {
        self.mul(a, &self.inv(b).expect("division by zero coefficient"))
    }

    pub fn pow(&self, a: &Coefficient, e: u64) -> Coefficient {
        match (self, a) {
            (Field::Prime(p), Coefficient::Mod(x)) => Coefficient::Mod(mod_pow(*x, e, *p)),
            (Field::Rationals, Coefficient::Rational(x)) => {
                let e = i32::try_from(e).expect("exponent fits in i32");
                Coefficient::Rational(Box::new(num_traits::Pow::pow(x.as_ref(), e)))
            }
            _ => panic!("coefficient does not belong to the field"),
        }
    }

    /// True when `a` would print with a leading minus sign.
    pub fn is_negative(&self, a: &Coefficient) -> bool {
        matches!(a, Coefficient::Rational(q) if q.is_negative())
    }

    pub fn render(&self, a: &Coefficient) -> String {
        match a {
            Coefficient::Mod(v) => v.to_string(),
            Coefficient::Rational(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

fn mod_pow(b: u64, mut e: u64, p: u64) -> u64 {
    let m = p as u128;
    let mut r: u128 = 1 % m;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    r as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_must_be_prime_or_zero() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert_eq!(Field::new(0).unwrap(), Field::Rationals);
        assert_eq!(Field::new(7).unwrap(), Field::Prime(7));
    }

    #[test]
    fn f2_addition_is_parity() {
        let f = Field::Prime(2);
        let one = f.one();
        assert!(f.is_zero(&f.add(&one, &one)));
        assert_eq!(f.neg(&one), one);
    }

    #[test]
    fn fp_inverse() {
        let f = Field::Prime(7);
        for v in 1..7 {
            let c = f.from_i64(v);
            assert!(f.is_one(&f.mul(&c, &f.inv(&c).unwrap())));
        }
        assert_eq!(f.from_i64(-1), Coefficient::Mod(6));
    }

    #[test]
    fn rational_lowest_terms() {
        let f = Field::Rationals;
        let c = f.from_ratio(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(f.render(&c), "-3/2");
    }

    #[test]
    fn ratio_mod_p() {
        let f = Field::Prime(5);
        let c = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(c, Coefficient::Mod(3));
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(5)).is_err());
    }
}
