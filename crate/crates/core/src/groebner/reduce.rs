use crate::algebra::{sub_scaled, Coefficient, Monomial, Polynomial, Ring, Term};

/// Reduction basis with leading data cached for divisor search.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    ring: Ring,
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    masks: Vec<u64>,
    lc_inv: Vec<Coefficient>,
    /// Caller-side identifier of each slot (e.g. index into a store).
    ids: Vec<usize>,
}

/// Raised when a reduction exceeds its step allowance.
#[derive(Debug, Clone, Copy)]
pub(crate) struct StepLimit;

impl Reducer {
    pub fn new(ring: &Ring) -> Reducer {
        Reducer {
            ring: ring.clone(),
            polys: Vec::new(),
            lms: Vec::new(),
            masks: Vec::new(),
            lc_inv: Vec::new(),
            ids: Vec::new(),
        }
    }

    /// Reducer over `basis` in its stored order; slot ids are positions.
    pub fn from_basis(ring: &Ring, basis: &[Polynomial]) -> Reducer {
        let mut r = Reducer::new(ring);
        for (i, g) in basis.iter().enumerate() {
            if !g.is_zero() {
                r.push(g.clone(), i);
            }
        }
        r
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    fn slot(&self, g: &Polynomial) -> (Monomial, u64, Coefficient) {
        let t = g.leading_term().expect("nonzero reducer");
        let inv = self.ring.field().inv(&t.coeff).expect("nonzero");
        (t.mono.clone(), t.mono.divmask(), inv)
    }

    pub fn push(&mut self, g: Polynomial, id: usize) {
        let (lm, mask, inv) = self.slot(&g);
        self.polys.push(g);
        self.lms.push(lm);
        self.masks.push(mask);
        self.lc_inv.push(inv);
        self.ids.push(id);
    }

    pub fn insert(&mut self, pos: usize, g: Polynomial, id: usize) {
        let (lm, mask, inv) = self.slot(&g);
        self.polys.insert(pos, g);
        self.lms.insert(pos, lm);
        self.masks.insert(pos, mask);
        self.lc_inv.insert(pos, inv);
        self.ids.insert(pos, id);
    }

    pub fn remove_where(&mut self, mut drop: impl FnMut(usize, &Monomial) -> bool) {
        let keep: Vec<bool> = (0..self.polys.len()).map(|k| !drop(self.ids[k], &self.lms[k])).collect();
        let mut k = 0;
        self.polys.retain(|_| {
            k += 1;
            keep[k - 1]
        });
        for v in [&mut self.lms as &mut dyn VecRetain, &mut self.masks, &mut self.lc_inv, &mut self.ids] {
            v.retain_mask(&keep);
        }
    }

    pub fn lms(&self) -> &[Monomial] {
        &self.lms
    }

    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    #[inline]
    pub fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.divmask();
        (0..self.lms.len()).find(|&k| self.masks[k] & !mask == 0 && self.lms[k].divides(m))
    }

    /// Division with remainder. With `full == false` stops at the first
    /// irreducible leading term (top reduction). Divisor slots are appended to
    /// `trace` when given.
    pub fn reduce(
        &self,
        terms: Vec<Term>,
        full: bool,
        mut trace: Option<&mut Vec<usize>>,
        steps: &mut u64,
        max_steps: u64,
    ) -> Result<Vec<Term>, StepLimit> {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut rem = terms;
        let mut start = 0usize;
        let mut out: Vec<Term> = Vec::new();
        while start < rem.len() {
            let t = &rem[start];
            match self.find_divisor(&t.mono) {
                Some(k) => {
                    if *steps >= max_steps {
                        return Err(StepLimit);
                    }
                    *steps += 1;
                    if let Some(tr) = trace.as_deref_mut() {
                        tr.push(k);
                    }
                    let m = t.mono.div(&self.lms[k]).expect("divisor");
                    let c = field.mul(&t.coeff, &self.lc_inv[k]);
                    rem = sub_scaled(field, order, &rem[start + 1..], &c, &m, &self.polys[k].terms()[1..]);
                    start = 0;
                }
                None => {
                    if !full {
                        break;
                    }
                    out.push(rem[start].clone());
                    start += 1;
                }
            }
        }
        if full {
            Ok(out)
        } else {
            out.extend_from_slice(&rem[start..]);
            Ok(out)
        }
    }
}

trait VecRetain {
    fn retain_mask(&mut self, keep: &[bool]);
}

impl<T> VecRetain for Vec<T> {
    fn retain_mask(&mut self, keep: &[bool]) {
        let mut k = 0;
        self.retain(|_| {
            k += 1;
            keep[k - 1]
        });
    }
}

/// Remainder of `p` on division by `basis`; at each step the leading
/// reducible term is reduced by the first eligible divisor in stored order.
pub fn normal_form(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let r = Reducer::from_basis(p.ring(), basis);
    let mut steps = 0;
    let terms = r.reduce(p.terms().to_vec(), true, None, &mut steps, u64::MAX).expect("unbounded");
    Polynomial::from_sorted(p.ring(), terms)
}

/// `lcm/LT(g)·g − lcm/LT(h)·h` (leading terms include coefficients).
pub fn s_polynomial(g: &Polynomial, h: &Polynomial) -> Polynomial {
    if g.is_zero() || h.is_zero() {
        return Polynomial::zero(g.ring());
    }
    let ring = g.ring();
    let field = ring.field();
    let (tg, th) = (&g.terms()[0], &h.terms()[0]);
    let l = tg.mono.lcm(&th.mono);
    let mg = l.div(&tg.mono).expect("lcm");
    let mh = l.div(&th.mono).expect("lcm");
    let a = g.mul_term(&mg, &field.inv(&tg.coeff).expect("nonzero"));
    let b = h.mul_term(&mh, &field.inv(&th.coeff).expect("nonzero"));
    a.sub(&b)
}

/// S-polynomial of two monic polynomials without the leading cancellation work.
pub(crate) fn s_poly_terms(g: &Polynomial, h: &Polynomial) -> Vec<Term> {
    let ring = g.ring();
    let field = ring.field();
    let l = g.lm().lcm(h.lm());
    let mg = l.div(g.lm()).expect("lcm");
    let mh = l.div(h.lm()).expect("lcm");
    let ig = field.inv(&g.terms()[0].coeff).expect("nonzero");
    let ih = field.inv(&h.terms()[0].coeff).expect("nonzero");
    let a: Vec<Term> = g.terms()[1..]
        .iter()
        .map(|t| Term { mono: t.mono.mul(&mg), coeff: field.mul(&t.coeff, &ig) })
        .collect();
    crate::algebra::sub_scaled(field, ring.order(), &a, &ih, &mh, &h.terms()[1..])
}
