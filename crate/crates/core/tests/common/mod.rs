//! Property checks shared by the proptest suite and the acceptance runner.
//! Each check returns `Err` with a description of the first disagreement.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use reglab_core::algebra::{monomials_of_degree, Monomial, Polynomial, Ring, RingSpec};
use reglab_core::families::{groebner_valuation_values, GradedFamily, Member};
use reglab_core::groebner::{normal_form, verify_gb_certificate, CertificateVerdict, IdealPresentation};
use reglab_core::monomial::{cm_regularity, q_power_membership, MonomialIdeal};

pub type Check = Result<(), String>;

/// `(i, j, c)`: coefficient `c` on `x^i y^j z^{d-i-j}`, exponents folded into range.
pub type RawTerm = (u32, u32, i64);
/// Degree and terms of one homogeneous generator.
pub type RawGen = (u32, Vec<RawTerm>);

pub fn ring3(p: u64) -> Ring {
    RingSpec::degrevlex(p, &["x", "y", "z"]).unwrap()
}

pub fn binom2(k: u32) -> usize {
    ((k + 1) * (k + 2) / 2) as usize
}

pub fn homogeneous(ring: &Ring, (d, terms): &RawGen) -> Polynomial {
    let field = ring.field();
    let d = *d;
    let terms = terms
        .iter()
        .map(|&(i, j, c)| {
            let i = i % (d + 1);
            let j = j % (d + 1 - i);
            (Monomial::from_exps(&[i, j, d - i - j]), field.from_i64(c))
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Terms with free exponents `(i, j, k, c)`, not necessarily homogeneous.
pub fn inhomogeneous(ring: &Ring, terms: &[(u32, u32, u32, i64)]) -> Polynomial {
    let field = ring.field();
    Polynomial::from_terms(ring, terms.iter().map(|&(i, j, k, c)| (Monomial::from_exps(&[i, j, k]), field.from_i64(c))).collect())
}

pub fn ideal(ring: &Ring, gens: Vec<Polynomial>) -> IdealPresentation {
    IdealPresentation::new(ring, gens).unwrap()
}

/// The reduced basis is a certified Gröbner basis of the input.
pub fn self_certification(i: &IdealPresentation) -> Check {
    let gb = i.groebner().map_err(|e| e.to_string())?;
    if let CertificateVerdict::Fail(c) = verify_gb_certificate(gb.basis()) {
        return Err(format!("S({}, {}) leaves {}", c.i, c.j, c.remainder));
    }
    for g in i.gens() {
        let r = normal_form(g, gb.basis());
        if !r.is_zero() {
            return Err(format!("{} reduces to {}", g.render(), r.render()));
        }
    }
    let field = i.ring().field();
    for (a, g) in gb.basis().iter().enumerate() {
        if !g.leading_coeff().is_some_and(|c| field.is_one(c)) {
            return Err(format!("{} is not monic", g.render()));
        }
        for (b, h) in gb.basis().iter().enumerate() {
            if a != b && g.terms().iter().any(|t| h.lm().divides(&t.mono)) {
                return Err(format!("{} is not reduced by {}", g.render(), h.render()));
            }
        }
    }
    Ok(())
}

/// Same reduced basis for the generators in another order.
pub fn permutation_invariance(ring: &Ring, gens: &[Polynomial], perm: &[usize]) -> Check {
    let a = ideal(ring, gens.to_vec()).groebner().map_err(|e| e.to_string())?;
    let shuffled: Vec<Polynomial> = perm.iter().map(|&k| gens[k].clone()).collect();
    let b = ideal(ring, shuffled).groebner().map_err(|e| e.to_string())?;
    if a.basis() != b.basis() {
        let r = |g: &[Polynomial]| g.iter().map(|p| p.render()).collect::<Vec<_>>().join(", ");
        return Err(format!("[{}] vs [{}]", r(a.basis()), r(b.basis())));
    }
    Ok(())
}

/// Leading monomials of the degree-`d` piece of a homogeneous ideal, by
/// Gaussian elimination on the products `m·g` with pivots on leading terms.
pub fn leading_monomials_in_degree(i: &IdealPresentation, d: u32) -> BTreeSet<Monomial> {
    let ring = i.ring();
    let field = ring.field();
    let mut pivots: HashMap<Monomial, Polynomial> = HashMap::new();
    for g in i.gens() {
        let gd = g.degree().unwrap();
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(ring.arity(), d - gd) {
            let mut p = g.mul_monomial(&m);
            while let Some(t) = p.leading_term().cloned() {
                match pivots.get(&t.mono) {
                    Some(piv) => p = p.sub(&piv.scale(&t.coeff)),
                    None => {
                        pivots.insert(t.mono.clone(), p.scale(&field.inv(&t.coeff).unwrap()));
                        break;
                    }
                }
            }
        }
    }
    pivots.into_keys().collect()
}

/// `in(I)_d` from the reduced basis equals the span's leading monomials,
/// and `dim (R/I)_d` is the complementary count.
pub fn macaulay(i: &IdealPresentation, d: u32) -> Check {
    let init = i.initial_ideal().map_err(|e| e.to_string())?;
    let from_basis: BTreeSet<Monomial> =
        monomials_of_degree(i.ring().arity(), d).into_iter().filter(|m| init.contains(m)).collect();
    let from_span = leading_monomials_in_degree(i, d);
    if from_basis != from_span {
        return Err(format!("degree {d}: {} monomials from the basis, {} from the span", from_basis.len(), from_span.len()));
    }
    let hd = i.graded_dimension(d).map_err(|e| e.to_string())?;
    let total = monomials_of_degree(i.ring().arity(), d).len();
    if hd as usize + from_span.len() != total {
        return Err(format!("degree {d}: dim (R/I)_d = {hd} but dim I_d = {}", from_span.len()));
    }
    Ok(())
}

/// `dim (R/J)_k = C(k+2, 2) - |values of the least-term valuation on J_k|`.
pub fn hilbert_valuation(j: &IdealPresentation, k: u32) -> Check {
    let t = groebner_valuation_values(j, k).map_err(|e| e.to_string())?;
    let hd = j.graded_dimension(k).map_err(|e| e.to_string())? as usize;
    if t.values.len() + t.complement.len() != binom2(k) {
        return Err(format!("k = {k}: values and complement do not partition the degree-{k} monomials"));
    }
    if hd != binom2(k) - t.values.len() {
        return Err(format!("k = {k}: dim (R/J)_k = {hd}, valuation count {}", t.values.len()));
    }
    Ok(())
}

/// Three routes to `x^i y^j ∈ (x^3, y^3)^n`.
pub fn q_power_agreement(max_exp: u32, max_n: u32) -> Check {
    let ring = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
    let q = MonomialIdeal::parse(&ring, "x^3, y^3").unwrap();
    for n in 1..=max_n {
        let qn = q.power(n).unwrap();
        for i in 0..=max_exp {
            for j in 0..=max_exp {
                let direct = qn.contains(&Monomial::from_exps(&[i, j]));
                let counted = i / 3 + j / 3 >= n;
                let closed = q_power_membership(i, j, n);
                if direct != counted || direct != closed {
                    return Err(format!("x^{i} y^{j} in Q^{n}: ideal {direct}, cube count {counted}, closed form {closed}"));
                }
            }
        }
    }
    Ok(())
}

/// For artinian `I`, `reg I` is one more than the top degree of a standard
/// monomial `m` with `m·x_v ∈ I` for every variable.
pub fn artinian_regularity(i: &MonomialIdeal) -> Check {
    let arity = i.ring().arity();
    let bounds: Vec<u32> = (0..arity)
        .map(|v| i.gens().iter().filter(|g| g.support() == vec![v]).map(|g| g.exp(v)).min().expect("artinian"))
        .collect();
    let mut top = None;
    let mut stack = vec![vec![0u32; arity]];
    let mut seen = BTreeSet::new();
    while let Some(e) = stack.pop() {
        if !seen.insert(e.clone()) {
            continue;
        }
        let m = Monomial::from_exps(&e);
        if i.contains(&m) {
            continue;
        }
        let mut socle = true;
        for v in 0..arity {
            let mut f = e.clone();
            f[v] += 1;
            if f[v] < bounds[v] && !i.contains(&Monomial::from_exps(&f)) {
                socle = false;
            }
            if f[v] < bounds[v] {
                stack.push(f);
            }
        }
        if socle {
            top = top.max(Some(m.degree() as i64));
        }
    }
    let expected = top.expect("1 is standard") + 1;
    let reg = cm_regularity(i, i.ring().field()).map_err(|e| e.to_string())?;
    if reg != expected {
        return Err(format!("{}: reg {reg}, socle oracle {expected}", i.render()));
    }
    Ok(())
}

/// `reg I_{p+q} ≤ reg I_p + reg I_q` for `p + q ≤ max_n`.
pub fn subadditivity(family: &GradedFamily, max_n: usize) -> Check {
    let regs: Vec<i64> = (1..=max_n)
        .map(|n| {
            let m = family.member(n).map_err(|e| e.to_string())?;
            let mono = m.as_monomial().ok_or("non-monomial member")?;
            cm_regularity(mono, mono.ring().field()).map_err(|e| e.to_string())
        })
        .collect::<Result<_, String>>()?;
    for p in 1..=max_n {
        for q in p..=max_n - p {
            if regs[p + q - 1] > regs[p - 1] + regs[q - 1] {
                return Err(format!("reg I_{} = {} > {} + {}", p + q, regs[p + q - 1], regs[p - 1], regs[q - 1]));
            }
        }
    }
    Ok(())
}

/// `(x^a, y^b, z^c)` plus extra monomials.
pub fn artinian_monomial(ring: &Ring, pure: [u32; 3], extra: &[[u32; 3]]) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = (0..3).map(|v| Monomial::var(3, v, pure[v].max(1))).collect();
    gens.extend(extra.iter().map(|e| Monomial::from_exps(e)));
    MonomialIdeal::new(ring, gens).unwrap()
}

/// Powers of an m-primary monomial ideal of `k[x, y]`.
pub fn mprimary_powers(a: u32, b: u32, extra: &[[u32; 2]]) -> std::sync::Arc<GradedFamily> {
    let ring = RingSpec::degrevlex(0, &["x", "y"]).unwrap();
    let mut gens = vec![Monomial::from_exps(&[a.max(1), 0]), Monomial::from_exps(&[0, b.max(1)])];
    gens.extend(extra.iter().map(|e| Monomial::from_exps(e)));
    GradedFamily::powers(Member::monomial(MonomialIdeal::new(&ring, gens).unwrap()))
}
