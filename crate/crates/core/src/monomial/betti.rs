use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::MonomialIdeal;
use crate::algebra::{Field, Monomial};
use crate::error::{Error, Result};

/// Default cap on minimal generators for the exact engine.
pub const DEFAULT_GENERATOR_THRESHOLD: usize = 256;
/// Cap on the number of candidate multidegrees examined.
const GRID_CAP: u64 = 50_000_000;

/// Graded Betti numbers `β_{i,m}(R/I)`, keyed by homological index and
/// multidegree (`β_{0,0} = 1` included).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, Vec<u32>), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, m: &[u32]) -> u64 {
        self.entries.get(&(i, m.to_vec())).copied().unwrap_or(0)
    }

    /// Total Betti numbers by homological index and total degree.
    pub fn graded(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for ((i, m), b) in &self.entries {
            *out.entry((*i, m.iter().sum::<u32>())).or_insert(0) += b;
        }
        out
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `reg(R/I) = max{|m| − i}`; `None` for the zero table.
    pub fn quotient_regularity(&self) -> Option<i64> {
        self.entries.keys().map(|(i, m)| m.iter().sum::<u32>() as i64 - *i as i64).max()
    }

    /// Macaulay-style table: row `j` column `i` holds `Σ_{|m| = i + j} β_{i,m}`.
    pub fn render(&self) -> String {
        let graded = self.graded();
        let pd = self.projective_dimension();
        let rows: Vec<i64> = graded.keys().map(|(i, d)| *d as i64 - *i as i64).collect();
        let (lo, hi) = (rows.iter().copied().min().unwrap_or(0), rows.iter().copied().max().unwrap_or(0));
        let mut out = String::from("      ");
        for i in 0..=pd {
            out.push_str(&format!("{i:>6}"));
        }
        out.push('\n');
        for j in lo..=hi {
            out.push_str(&format!("{:>4}: ", j));
            for i in 0..=pd {
                let d = i as i64 + j;
                let v = if d < 0 { 0 } else { graded.get(&(i, d as u32)).copied().unwrap_or(0) };
                if v == 0 {
                    out.push_str(&format!("{:>6}", "."));
                } else {
                    out.push_str(&format!("{v:>6}"));
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Rank of a dense integer matrix over the field.
fn rank(field: Field, rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    match field.characteristic() {
        0 => rank_rational(rows),
        p => rank_mod_p(rows, p),
    }
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> =
        rows.iter().map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect()).collect();
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&k| a[k][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = mod_inverse(a[r][c], p);
        for k in 0..a.len() {
            if k != r && a[k][c] != 0 {
                let f = (a[k][c] as u128 * inv as u128 % p as u128) as u64;
                for cc in c..cols {
                    let sub = (f as u128 * a[r][cc] as u128 % p as u128) as u64;
                    a[k][cc] = (a[k][cc] + p - sub) % p;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t, mut r, mut new_r) = (0i128, 1i128, p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i128) as u64
}

/// Fraction-free (Bareiss) elimination over the integers.
fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&k| !a[k][c].is_zero()) else { continue };
        a.swap(r, piv);
        for k in r + 1..a.len() {
            for cc in c + 1..cols {
                let v = (&a[r][c] * &a[k][cc] - &a[k][c] * &a[r][cc]) / &prev;
                a[k][cc] = v;
            }
            a[k][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Reduced homology dimensions `h̃_k` for `k = -1..=dim` of the simplicial
/// complex on `n` vertices whose faces are the bitmasks in `faces`
/// (closed under subsets, containing the empty face).
fn reduced_homology(field: Field, n: usize, faces: &[u32]) -> Vec<u64> {
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for &f in faces {
        by_dim[f.count_ones() as usize].push(f);
    }
    // ranks[k] = rank of ∂ from k-element faces to (k−1)-element faces.
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        if by_dim[k].is_empty() || by_dim[k - 1].is_empty() {
            continue;
        }
        let index: BTreeMap<u32, usize> = by_dim[k - 1].iter().enumerate().map(|(i, &f)| (f, i)).collect();
        let mut rows = Vec::with_capacity(by_dim[k].len());
        for &f in &by_dim[k] {
            let mut row = vec![0i64; by_dim[k - 1].len()];
            let mut sign = 1i64;
            for v in 0..n {
                if f & (1 << v) != 0 {
                    row[index[&(f & !(1 << v))]] = sign;
                    sign = -sign;
                }
            }
            rows.push(row);
        }
        ranks[k] = rank(field, &rows);
    }
    (0..=n).map(|k| (by_dim[k].len() - ranks[k] - ranks[k + 1]) as u64).collect()
}

/// Candidate multidegrees: each coordinate is one of the values taken by the
/// generators in that variable.
fn lattice_candidates(ideal: &MonomialIdeal) -> Result<Vec<Vec<u32>>> {
    let arity = ideal.ring().arity();
    let mut values: Vec<Vec<u32>> = vec![Vec::new(); arity];
    for (i, vals) in values.iter_mut().enumerate() {
        let mut v: Vec<u32> = ideal.gens().iter().map(|g| g.exp(i)).collect();
        v.push(0);
        v.sort_unstable();
        v.dedup();
        *vals = v;
    }
    let total: u64 = values.iter().map(|v| v.len() as u64).product();
    if total > GRID_CAP {
        return Err(Error::Threshold { count: ideal.len(), limit: ideal.len().saturating_sub(1) });
    }
    let gens = ideal.gens();
    let mut out = Vec::new();
    let mut idx = vec![0usize; arity];
    loop {
        let m: Vec<u32> = (0..arity).map(|i| values[i][idx[i]]).collect();
        let mono = Monomial::from_exps(&m);
        // Keep m only if it is the lcm of the generators dividing it.
        let mut l = vec![0u32; arity];
        let mut any = false;
        for g in gens {
            if g.divides(&mono) {
                any = true;
                for (li, &e) in l.iter_mut().zip(g.exps()) {
                    *li = (*li).max(e);
                }
            }
        }
        if any && l == m {
            out.push(m);
        }
        let mut k = 0;
        loop {
            if k == arity {
                return Ok(out);
            }
            idx[k] += 1;
            if idx[k] < values[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Multigraded Betti numbers of `R/I` over `field`.
///
/// For `m` in the lcm lattice, `β_{i+1,m}(R/I) = h̃_{i−1}(K^m)` where
/// `K^m = {W ⊆ supp(m) : x^{m−W} ∈ I}` is the upper Koszul simplicial complex.
pub fn betti_numbers_with(ideal: &MonomialIdeal, field: Field, threshold: usize) -> Result<BettiTable> {
    if ideal.len() > threshold {
        return Err(Error::Threshold { count: ideal.len(), limit: threshold });
    }
    let mut table = BettiTable::default();
    let arity = ideal.ring().arity();
    table.entries.insert((0, vec![0; arity]), 1);
    if ideal.is_zero() {
        return Ok(table);
    }
    if ideal.is_unit() {
        table.entries.clear();
        return Ok(table);
    }
    let candidates = lattice_candidates(ideal)?;
    let per_m: Vec<Vec<((usize, Vec<u32>), u64)>> = candidates
        .par_iter()
        .map(|m| {
            let supp: Vec<usize> = (0..arity).filter(|&i| m[i] > 0).collect();
            let n = supp.len();
            let mut faces = Vec::new();
            for w in 0u32..(1 << n) {
                let e: Vec<u32> = (0..arity)
                    .map(|i| match supp.iter().position(|&s| s == i) {
                        Some(k) if w & (1 << k) != 0 => m[i] - 1,
                        _ => m[i],
                    })
                    .collect();
                if ideal.contains(&Monomial::from_exps(&e)) {
                    faces.push(w);
                }
            }
            let h = reduced_homology(field, n, &faces);
            // h[k] is h̃_{k−1}; it contributes to β_{k+1}(R/I).
            h.iter()
                .enumerate()
                .filter(|(_, &b)| b > 0)
                .map(|(k, &b)| ((k + 1, m.clone()), b))
                .collect()
        })
        .collect();
    for entries in per_m {
        table.entries.extend(entries);
    }
    Ok(table)
}

pub fn betti_numbers(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    betti_numbers_with(ideal, field, DEFAULT_GENERATOR_THRESHOLD)
}

/// Regularity of the ideal, `reg I = reg(R/I) + 1`, over `field`.
pub fn cm_regularity_with(ideal: &MonomialIdeal, field: Field, threshold: usize) -> Result<i64> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::InvalidArgument("regularity of the zero or unit ideal".into()));
    }
    let table = betti_numbers_with(ideal, field, threshold)?;
    Ok(table.quotient_regularity().expect("nonzero table") + 1)
}

pub fn cm_regularity(ideal: &MonomialIdeal, field: Field) -> Result<i64> {
    cm_regularity_with(ideal, field, DEFAULT_GENERATOR_THRESHOLD)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Ring, RingSpec};

    fn ideal(r: &Ring, s: &str) -> MonomialIdeal {
        MonomialIdeal::parse(r, s).unwrap()
    }

    #[test]
    fn koszul_examples() {
        let r = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
        let f = r.field();
        let b = betti_numbers(&ideal(&r, "x, y"), f).unwrap();
        assert_eq!(b.get(1, &[1, 0]), 1);
        assert_eq!(b.get(1, &[0, 1]), 1);
        assert_eq!(b.get(2, &[1, 1]), 1);
        assert_eq!(b.entries.len(), 4);
        let b = betti_numbers(&ideal(&r, "x"), f).unwrap();
        assert_eq!(b.entries.len(), 2);
        assert_eq!(b.get(1, &[1, 0]), 1);
        let b = betti_numbers(&ideal(&r, "x^3, y^3"), f).unwrap();
        let g = b.graded();
        assert_eq!(g.get(&(1, 3)), Some(&2));
        assert_eq!(g.get(&(2, 6)), Some(&1));
        assert_eq!(cm_regularity(&ideal(&r, "x^3, y^3"), f).unwrap(), 5);
    }

    #[test]
    fn powers_of_the_maximal_ideal_are_linear() {
        let r = RingSpec::degrevlex(0, &["x", "y", "z"]).unwrap();
        for d in 1..5 {
            let m = ideal(&r, "x, y, z").power(d).unwrap();
            assert_eq!(cm_regularity(&m, r.field()).unwrap(), d as i64);
        }
    }

    #[test]
    fn threshold_is_enforced() {
        let r = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
        let m = ideal(&r, "x, y").power(5).unwrap();
        assert!(matches!(betti_numbers_with(&m, r.field(), 3), Err(Error::Threshold { count: 6, limit: 3 })));
    }

    #[test]
    fn homology_field_matters_for_the_projective_plane() {
        // Stanley–Reisner ideal of the six-vertex triangulation of RP².
        let names = ["a", "b", "c", "d", "e", "f"];
        let gens = "a*b*c, a*b*f, a*c*e, a*d*e, a*d*f, b*c*d, b*d*e, b*e*f, c*d*f, c*e*f";
        let r2 = RingSpec::degrevlex(2, &names).unwrap();
        let r0 = RingSpec::degrevlex(0, &names).unwrap();
        let reg2 = cm_regularity(&ideal(&r2, gens), r2.field()).unwrap();
        let reg0 = cm_regularity(&ideal(&r0, gens), r0.field()).unwrap();
        assert_eq!(reg0, 3);
        assert_eq!(reg2, 4);
    }
}
