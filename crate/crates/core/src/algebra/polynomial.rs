use std::cmp::Ordering;
use std::fmt;

use super::field::{Coefficient, Field};
use super::monomial::Monomial;
use super::order::TermOrder;
use super::ring::{same_ring, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Coefficient,
}

/// Sparse polynomial with terms in strictly descending term order.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state)
    }
}

/// Merges two descending term lists, adding coefficients of equal monomials.
pub(crate) fn merge_terms(field: Field, order: &TermOrder, a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(&a[i].mono, &b[j].mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].coeff, &b[j].coeff);
                if !field.is_zero(&c) {
                    out.push(Term { mono: a[i].mono.clone(), coeff: c });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `a - c*m*b`, with `a` and `b` descending.
pub(crate) fn sub_scaled(
    field: Field,
    order: &TermOrder,
    a: &[Term],
    c: &Coefficient,
    m: &Monomial,
    b: &[Term],
) -> Vec<Term> {
    let negc = field.neg(c);
    let one = field.is_one(&negc);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut jt = b.iter().map(|t| Term {
        mono: t.mono.mul(m),
        coeff: if one { t.coeff.clone() } else { field.mul(&t.coeff, &negc) },
    });
    let mut next_b = jt.next();
    while let Some(tb) = next_b.take() {
        if i >= a.len() {
            out.push(tb);
            out.extend(jt);
            return out;
        }
        match order.cmp(&a[i].mono, &tb.mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
                next_b = Some(tb);
            }
            Ordering::Less => {
                out.push(tb);
                next_b = jt.next();
            }
            Ordering::Equal => {
                let s = field.add(&a[i].coeff, &tb.coeff);
                if !field.is_zero(&s) {
                    out.push(Term { mono: tb.mono, coeff: s });
                }
                i += 1;
                next_b = jt.next();
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::monomial(ring, Monomial::one(ring.arity()))
    }

    pub fn constant(ring: &Ring, c: Coefficient) -> Polynomial {
        Polynomial::term(ring, Monomial::one(ring.arity()), c)
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Polynomial {
        let c = ring.field().one();
        Polynomial::term(ring, m, c)
    }

    pub fn term(ring: &Ring, m: Monomial, c: Coefficient) -> Polynomial {
        assert_eq!(m.arity(), ring.arity(), "monomial arity differs from ring arity");
        if ring.field().is_zero(&c) {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![Term { mono: m, coeff: c }] }
    }

    pub fn variable(ring: &Ring, name: &str) -> Result<Polynomial> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable { name: name.to_string(), pos: 0 })?;
        Ok(Polynomial::monomial(ring, Monomial::var(ring.arity(), i, 1)))
    }

    /// Builds from arbitrary terms: sorts, combines equal monomials, drops zeros.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Coefficient)>) -> Polynomial {
        let field = ring.field();
        let order = ring.order();
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(mono, coeff)| {
                assert_eq!(mono.arity(), ring.arity(), "monomial arity differs from ring arity");
                Term { mono, coeff }
            })
            .collect();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = field.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !field.is_zero(&t.coeff));
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Caller guarantees strictly descending, nonzero terms.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Leading monomial; panics on the zero polynomial.
    #[inline]
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    pub fn leading_coeff(&self) -> Option<&Coefficient> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn least_term(&self) -> Option<&Term> {
        self.terms.last()
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree() == t.mono.degree()),
        }
    }

    /// Homogeneous for the ring's bigrading (true when the ring has none).
    pub fn is_bihomogeneous(&self) -> bool {
        match (self.ring.bigrading(), self.terms.first()) {
            (Some(g), Some(t)) => {
                let d = t.mono.bidegree(g);
                self.terms.iter().all(|s| s.mono.bidegree(g) == d)
            }
            _ => true,
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.add(other))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let terms = merge_terms(self.ring.field(), self.ring.order(), &self.terms, &other.terms);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: field.neg(&t.coeff) }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: field.mul(&t.coeff, c) }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplication by a monomial keeps the term order, so no re-sorting.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let terms = self.terms.iter().map(|t| Term { mono: t.mono.mul(m), coeff: t.coeff.clone() }).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coefficient) -> Polynomial {
        self.mul_monomial(m).scale(c)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let field = self.ring.field();
        let mut acc: Vec<Term> = Vec::new();
        for t in &small.terms {
            let part: Vec<Term> = big
                .terms
                .iter()
                .map(|s| Term { mono: s.mono.mul(&t.mono), coeff: field.mul(&s.coeff, &t.coeff) })
                .filter(|s| !field.is_zero(&s.coeff))
                .collect();
            acc = merge_terms(field, self.ring.order(), &acc, &part);
        }
        Polynomial { ring: self.ring.clone(), terms: acc }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `p^(char^e)`, computed term-wise.
    pub fn frobenius_power(&self, e: u32) -> Result<Polynomial> {
        let p = self.ring.characteristic();
        if p == 0 {
            return Err(Error::CharacteristicZero);
        }
        let q = p.checked_pow(e).filter(|q| *q <= u32::MAX as u64).ok_or(Error::ExponentOverflow)? as u32;
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push(Term { mono: t.mono.try_pow(q)?, coeff: field.pow(&t.coeff, q as u64) });
        }
        // m -> m^q is strictly monotone for monomial orders, so the order is preserved.
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if self.ring.field().is_one(c) => self.clone(),
            Some(c) => self.scale(&self.ring.field().inv(c).expect("nonzero")),
        }
    }

    /// Copy into `ring`, which has `shift` extra leading variables.
    pub fn embed(&self, ring: &Ring, shift: usize) -> Polynomial {
        assert_eq!(ring.arity(), self.ring.arity() + shift);
        let terms = self.terms.iter().map(|t| (t.mono.shifted(shift), t.coeff.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Copy into `ring` obtained by dropping the first `count` variables,
    /// which must not occur.
    pub fn project(&self, ring: &Ring, count: usize) -> Result<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.mono.exps()[..count].iter().any(|&e| e > 0) {
                return Err(Error::Internal("projected polynomial involves a dropped variable".into()));
            }
            terms.push((t.mono.unshifted(count), t.coeff.clone()));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Reinterprets the same terms in another ring with the same variables
    /// (for example a different term order).
    pub fn reorder(&self, ring: &Ring) -> Polynomial {
        assert_eq!(ring.arity(), self.ring.arity());
        let terms = self.terms.iter().map(|t| (t.mono.clone(), t.coeff.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Copy into `ring` where variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute(&self, ring: &Ring, perm: &[usize]) -> Polynomial {
        assert_eq!(ring.arity(), self.ring.arity());
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut e = vec![0u32; perm.len()];
                for (i, &x) in t.mono.exps().iter().enumerate() {
                    e[perm[i]] = x;
                }
                (Monomial::from_exps(&e), t.coeff.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        if g.is_zero() {
            return None;
        }
        let field = self.ring.field();
        let order = self.ring.order();
        let lt = &g.terms[0];
        let inv = field.inv(&lt.coeff)?;
        let mut rem = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some(t) = rem.first() {
            let m = t.mono.div(&lt.mono)?;
            let c = field.mul(&t.coeff, &inv);
            rem = sub_scaled(field, order, &rem[1..], &c, &m, &g.terms[1..]);
            quot.push(Term { mono: m, coeff: c });
        }
        // Quotient terms arrive in descending order.
        Some(Polynomial { ring: self.ring.clone(), terms: quot })
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let field = self.ring.field();
        let names = self.ring.vars();
        let mut out = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            let neg = field.is_negative(&t.coeff);
            let c = if neg { field.neg(&t.coeff) } else { t.coeff.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = t.mono.render(names);
            if field.is_one(&c) {
                out.push_str(&mono);
            } else if t.mono.is_one() {
                out.push_str(&field.render(&c));
            } else {
                out.push_str(&field.render(&c));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
