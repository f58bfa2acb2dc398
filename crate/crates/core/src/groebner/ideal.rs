use std::sync::{Arc, OnceLock};

use super::buchberger::{buchberger_extend, buchberger_gens, Budget, GbStats, GroebnerBasis};
use super::cache::GbCache;
use super::reduce::normal_form;
use super::RegBracket;
use crate::algebra::{parse_polynomial_list, same_ring, Monomial, Polynomial, Ring, TermOrder};
use crate::error::{Error, Result};
use crate::monomial::{cm_regularity, MonomialIdeal};

/// Generators of an ideal with a lazily computed reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
    budget: Budget,
    provenance: String,
}

impl IdealPresentation {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<IdealPresentation> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let mut seen = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_zero() && !seen.contains(&g) {
                seen.push(g);
            }
        }
        Ok(IdealPresentation {
            ring: ring.clone(),
            gens: seen,
            gb: OnceLock::new(),
            budget: Budget::default(),
            provenance: String::new(),
        })
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<IdealPresentation> {
        IdealPresentation::new(ring, parse_polynomial_list(ring, text)?)
    }

    pub fn from_monomial(ideal: &MonomialIdeal) -> IdealPresentation {
        IdealPresentation::new(ideal.ring(), ideal.polynomials()).expect("same ring")
    }

    pub fn with_budget(mut self, budget: Budget) -> IdealPresentation {
        self.budget = budget;
        self
    }

    pub fn with_provenance(mut self, note: &str) -> IdealPresentation {
        self.provenance = note.to_string();
        self
    }

    /// Installs a basis computed elsewhere. The caller guarantees it is the
    /// reduced Gröbner basis of this ideal.
    pub(crate) fn with_basis(self, gb: GroebnerBasis) -> IdealPresentation {
        let _ = self.gb.set(Arc::new(gb));
        self
    }

    fn derived(&self, gens: Vec<Polynomial>, note: &str) -> Result<IdealPresentation> {
        Ok(IdealPresentation::new(&self.ring, gens)?.with_budget(self.budget).with_provenance(note))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn has_basis(&self) -> bool {
        self.gb.get().is_some()
    }

    /// Reduced Gröbner basis, computed on first use.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger_gens(&self.ring, &self.gens, &self.budget)?);
        Ok(self.gb.get_or_init(|| gb).clone())
    }

    /// As [`groebner`](Self::groebner), consulting and filling `cache`.
    pub fn groebner_cached(&self, cache: &GbCache) -> Result<(Arc<GroebnerBasis>, bool)> {
        if let Some(gb) = self.gb.get() {
            return Ok((gb.clone(), false));
        }
        if let Some(gb) = cache.load(&self.ring, &self.gens)? {
            return Ok((self.gb.get_or_init(|| Arc::new(gb)).clone(), true));
        }
        let gb = self.groebner()?;
        cache.store(&self.ring, &self.gens, &gb)?;
        Ok((gb, false))
    }

    pub fn initial_ideal(&self) -> Result<MonomialIdeal> {
        let gb = self.groebner()?;
        MonomialIdeal::new(&self.ring, gb.leading_monomials())
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(normal_form(p, self.groebner()?.basis()))
    }

    pub fn membership(&self, p: &Polynomial) -> Result<bool> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(self.normal_form(p)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &IdealPresentation) -> Result<bool> {
        for g in &other.gens {
            if !self.membership(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by mutual membership of generators.
    pub fn ideal_equal(&self, other: &IdealPresentation) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    fn check(&self, other: &IdealPresentation) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.check(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        self.derived(gens, "sum")
    }

    pub fn product(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.try_mul(b)?);
            }
        }
        self.derived(gens, "product")
    }

    /// `I^e` by repeated products; duplicate generators are dropped.
    pub fn power(&self, e: u32) -> Result<IdealPresentation> {
        let mut acc = self.derived(vec![Polynomial::one(&self.ring)], "power")?;
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc.with_provenance(&format!("power {e}")))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        self.intersect_over(other, &[])
    }

    /// Intersection where `common` is a reduced Gröbner basis of an ideal
    /// contained in both operands; its S-pairs are not revisited.
    fn intersect_over(&self, other: &IdealPresentation, common: &[Polynomial]) -> Result<IdealPresentation> {
        self.check(other)?;
        let t_ring = self.ring.with_elimination_variable()?;
        let t = Polynomial::monomial(&t_ring, Monomial::var(t_ring.arity(), 0, 1));
        let one_minus_t = Polynomial::one(&t_ring).sub(&t);
        let known: Vec<Polynomial> = common.iter().map(|g| g.embed(&t_ring, 1)).collect();
        let mut extra = Vec::new();
        for g in &self.gens {
            extra.push(t.mul(&g.embed(&t_ring, 1)));
        }
        for h in &other.gens {
            extra.push(one_minus_t.mul(&h.embed(&t_ring, 1)));
        }
        let gb = buchberger_extend(&t_ring, &known, &extra, &self.budget)?;
        let mut basis = Vec::new();
        for g in gb.basis() {
            if g.terms().iter().all(|term| term.mono.exp(0) == 0) {
                basis.push(g.project(&self.ring, 1)?);
            }
        }
        let out = self.derived(basis.clone(), "intersection")?;
        // The t-free part of the block-order basis is the reduced basis for
        // degrevlex on the remaining variables.
        if *self.ring.order() == TermOrder::Degrevlex {
            let stats = GbStats { reduction_steps: gb.stats.reduction_steps, ..Default::default() };
            return Ok(out.with_basis(GroebnerBasis::from_parts(&self.ring, basis, stats)));
        }
        Ok(out)
    }

    /// `I : g` via `I ∩ (g)` followed by exact division by `g`.
    pub fn colon_element(&self, g: &Polynomial) -> Result<IdealPresentation> {
        if g.is_zero() {
            return Err(Error::InvalidArgument("colon by zero".into()));
        }
        if !same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let principal = self.derived(vec![g.clone()], "principal")?;
        let both = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(both.gens.len());
        for h in &both.gens {
            gens.push(
                h.div_exact(g)
                    .ok_or_else(|| Error::Internal(format!("{} is not divisible by {}", h.render(), g.render())))?,
            );
        }
        self.derived(gens, "colon")
    }

    /// `I : x_v`. For homogeneous generators under degrevlex this moves `x_v`
    /// last and divides the reduced basis by `x_v` where possible; otherwise
    /// it falls back to [`colon_element`](Self::colon_element).
    pub fn colon_variable(&self, v: usize) -> Result<IdealPresentation> {
        let arity = self.ring.arity();
        if v >= arity {
            return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
        }
        let x_v = Polynomial::monomial(&self.ring, Monomial::var(arity, v, 1));
        if *self.ring.order() != TermOrder::Degrevlex || !self.gens.iter().all(|g| g.is_homogeneous()) {
            return self.colon_element(&x_v);
        }
        // perm[i] = new position of variable i.
        let perm: Vec<usize> = (0..arity).map(|i| if i == v { arity - 1 } else if i > v { i - 1 } else { i }).collect();
        let mut inverse = vec![0; arity];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let moved_ring = self.ring.with_permuted_variables(&perm)?;
        let moved: Vec<Polynomial> = self.gens.iter().map(|g| g.permute(&moved_ring, &perm)).collect();
        let gb = buchberger_gens(&moved_ring, &moved, &self.budget)?;
        let last = Monomial::var(arity, arity - 1, 1);
        let last_poly = Polynomial::monomial(&moved_ring, last.clone());
        let mut gens = Vec::with_capacity(gb.len());
        for g in gb.basis() {
            let q = if last.divides(g.lm()) {
                g.div_exact(&last_poly).ok_or_else(|| Error::Internal("homogeneous division".into()))?
            } else {
                g.clone()
            };
            gens.push(q.permute(&self.ring, &inverse));
        }
        self.derived(gens, "colon by variable")
    }

    /// `I : m` for the homogeneous maximal ideal `m`, as the intersection of
    /// the colons by each variable.
    pub fn colon_maximal(&self) -> Result<IdealPresentation> {
        let common = self.groebner()?;
        let mut acc = self.colon_variable(0)?;
        for v in 1..self.ring.arity() {
            let next = self.colon_variable(v)?;
            acc = acc.intersect_over(&next, common.basis())?;
        }
        Ok(acc.with_provenance("colon by the maximal ideal"))
    }

    /// True when `h ∉ I` and `h·x_v ∈ I` for every variable.
    pub fn socle_witness_check(&self, h: &Polynomial) -> Result<bool> {
        if self.membership(h)? {
            return Ok(false);
        }
        for v in 0..self.ring.arity() {
            let hv = h.mul_monomial(&Monomial::var(self.ring.arity(), v, 1));
            if !self.membership(&hv)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Largest degree of an element of `(I : m) \ I`, or `None` when
    /// `I : m = I`. Buchberger runs are capped at `degree_budget`.
    pub fn socle_degree_max(&self, degree_budget: u32) -> Result<Option<u32>> {
        let capped = self.clone().with_budget(Budget { max_degree: Some(degree_budget), ..self.budget });
        let colon = capped.colon_maximal()?;
        let gb = self.groebner()?;
        let mut best = None;
        for g in colon.gens() {
            if !normal_form(g, gb.basis()).is_zero() {
                best = best.max(g.degree());
            }
        }
        Ok(best)
    }

    /// `dim_k (R/I)_d`, counted as standard monomials of the initial ideal.
    pub fn graded_dimension(&self, d: u32) -> Result<u64> {
        Ok(self.initial_ideal()?.quotient_dimension(d))
    }

    /// A minimal generating subset of a homogeneous generating set, taken
    /// greedily in ascending degree.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        if !self.gens.iter().all(|g| g.is_homogeneous()) {
            return Err(Error::InvalidArgument("minimal generators need homogeneous input".into()));
        }
        let mut sorted = self.gens.clone();
        sorted.sort_by_key(|g| g.degree());
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut basis: Vec<Polynomial> = Vec::new();
        for g in sorted {
            if normal_form(&g, &basis).is_zero() {
                continue;
            }
            basis = buchberger_extend(&self.ring, &basis, std::slice::from_ref(&g), &self.budget)?.basis().to_vec();
            kept.push(g);
        }
        Ok(kept)
    }

    /// `d(I)`: the largest degree of a minimal homogeneous generator.
    pub fn max_generator_degree(&self) -> Result<Option<u32>> {
        Ok(self.minimal_generators()?.iter().filter_map(|g| g.degree()).max())
    }

    /// Regularity bracket: upper from the exact regularity of the initial
    /// ideal, lower from the socle (when `socle_budget` is given and the
    /// search succeeds) or `d(I)`.
    pub fn reg_bracket(&self, socle_budget: Option<u32>) -> Result<RegBracket> {
        let initial = self.initial_ideal()?;
        let upper = cm_regularity(&initial, self.ring.field())?;
        let d = self.max_generator_degree()?.unwrap_or(0) as i64;
        let mut lower = (d, "max-generator-degree");
        if let Some(budget) = socle_budget {
            match self.socle_degree_max(budget) {
                Ok(Some(s)) if s as i64 + 1 > lower.0 => lower = (s as i64 + 1, "socle-degree+1"),
                Ok(_) => {}
                Err(e) if e.is_budget() => {}
                Err(e) => return Err(e),
            }
        }
        RegBracket::new(lower.0, upper, lower.1, "initial-ideal-exact")
    }
}
