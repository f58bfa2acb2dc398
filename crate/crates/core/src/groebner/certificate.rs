use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::reduce::{s_poly_terms, Reducer};
use crate::algebra::{sub_scaled, Polynomial, Term};

/// Record of one S-pair reduction against the candidate basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SPairCertificate {
    pub i: usize,
    pub j: usize,
    /// Basis indices used at each division step, in order.
    pub divisors: Vec<usize>,
    /// Rendered remainder; `"0"` for a pair that reduces to zero.
    pub remainder: String,
    pub steps: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateVerdict {
    Pass { pairs: usize },
    Fail(Box<SPairCertificate>),
}

impl CertificateVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, CertificateVerdict::Pass { .. })
    }
}

/// Buchberger criterion: every S-pair of `basis` reduces to zero modulo
/// `basis` (in its stored order). Returns the first failing pair in
/// `(i, j)` order with its full remainder.
pub fn verify_gb_certificate(basis: &[Polynomial]) -> CertificateVerdict {
    let gens: Vec<Polynomial> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return CertificateVerdict::Pass { pairs: 0 };
    }
    let ring = gens[0].ring().clone();
    let reducer = Reducer::from_basis(&ring, &gens);
    let pairs: Vec<(usize, usize)> = (0..gens.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let failure = pairs.par_iter().find_map_first(|&(i, j)| {
        let s = s_poly_terms(&gens[i], &gens[j]);
        let mut steps = 0;
        let top = reducer.reduce(s, false, None, &mut steps, u64::MAX).expect("unbounded");
        if top.is_empty() {
            None
        } else {
            Some((i, j))
        }
    });
    match failure {
        None => CertificateVerdict::Pass { pairs: pairs.len() },
        Some((i, j)) => CertificateVerdict::Fail(Box::new(certify_pair(&gens, i, j))),
    }
}

/// Full reduction of `S(basis[i], basis[j])` with the divisor trace.
pub fn certify_pair(basis: &[Polynomial], i: usize, j: usize) -> SPairCertificate {
    let ring = basis[i].ring().clone();
    let reducer = Reducer::from_basis(&ring, basis);
    let mut trace = Vec::new();
    let mut steps = 0;
    let s = s_poly_terms(&basis[i], &basis[j]);
    let rem = reducer.reduce(s, true, Some(&mut trace), &mut steps, u64::MAX).expect("unbounded");
    let divisors = trace.iter().map(|&k| reducer.ids()[k]).collect();
    SPairCertificate { i, j, divisors, remainder: Polynomial::from_sorted(&ring, rem).render(), steps }
}

impl SPairCertificate {
    /// Replays the recorded division steps from the S-polynomial and returns
    /// the resulting remainder. Each step cancels the largest term divisible
    /// by the recorded divisor's leading monomial.
    pub fn replay(&self, basis: &[Polynomial]) -> Option<Polynomial> {
        let ring = basis.get(self.i)?.ring().clone();
        let field = ring.field();
        let order = ring.order();
        let mut cur: Vec<Term> = s_poly_terms(&basis[self.i], basis.get(self.j)?);
        for &k in &self.divisors {
            let g = basis.get(k)?;
            let lt = g.leading_term()?;
            let pos = cur.iter().position(|t| lt.mono.divides(&t.mono))?;
            let m = cur[pos].mono.div(&lt.mono)?;
            let c = field.mul(&cur[pos].coeff, &field.inv(&lt.coeff)?);
            let (head, tail) = cur.split_at(pos);
            let rest = sub_scaled(field, order, &tail[1..], &c, &m, &g.terms()[1..]);
            let mut next = head.to_vec();
            next.extend(rest);
            cur = next;
        }
        Some(Polynomial::from_sorted(&ring, cur))
    }

    /// True when replaying the recorded steps reproduces the recorded remainder.
    pub fn replays(&self, basis: &[Polynomial]) -> bool {
        self.replay(basis).map(|r| r.render() == self.remainder).unwrap_or(false)
    }
}
