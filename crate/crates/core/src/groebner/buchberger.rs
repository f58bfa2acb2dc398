use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::reduce::{s_poly_terms, Reducer, StepLimit};
use crate::algebra::{Monomial, Polynomial, Ring, TermOrder};
use crate::error::{BudgetReport, Error, Result};

/// Resource limits for Buchberger runs. Exceeding either is a hard error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest S-pair degree that may be processed; `None` derives the default
    /// `4·(input max degree) + 64`.
    pub max_degree: Option<u32>,
    pub max_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_degree: None, max_steps: 10_000_000 }
    }
}

impl Budget {
    pub fn degree_limit(&self, gens: &[Polynomial]) -> u32 {
        self.max_degree.unwrap_or_else(|| {
            let d = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
            4 * d + 64
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbStats {
    pub pairs_created: u64,
    pub pairs_reduced: u64,
    pub zero_reductions: u64,
    pub coprime_skipped: u64,
    pub gm_pruned: u64,
    pub reduction_steps: u64,
    pub max_pair_degree: u32,
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by leading monomial descending.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    basis: Vec<Polynomial>,
    pub stats: GbStats,
}

impl GroebnerBasis {
    pub(crate) fn from_parts(ring: &Ring, basis: Vec<Polynomial>, stats: GbStats) -> GroebnerBasis {
        GroebnerBasis { ring: ring.clone(), basis, stats }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        super::reduce::normal_form(p, &self.basis)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine {
    ring: Ring,
    store: Vec<Polynomial>,
    active: Vec<bool>,
    reducer: Reducer,
    pairs: Vec<Pair>,
    stats: GbStats,
    max_steps: u64,
    max_degree: u32,
}

impl Engine {
    fn budget_error(&self, what: &str, degree: u32) -> Error {
        Error::Budget(BudgetReport {
            what: what.to_string(),
            steps: self.stats.reduction_steps,
            degree,
            basis_size: self.active.iter().filter(|a| **a).count(),
            pending_pairs: self.pairs.len(),
        })
    }

    fn reduce(&mut self, terms: Vec<crate::algebra::Term>) -> Result<Polynomial> {
        let mut steps = self.stats.reduction_steps;
        let out = self.reducer.reduce(terms, true, None, &mut steps, self.max_steps);
        self.stats.reduction_steps = steps;
        match out {
            Ok(t) => Ok(Polynomial::from_sorted(&self.ring, t).monic()),
            Err(StepLimit) => Err(self.budget_error("reduction step budget", 0)),
        }
    }

    /// Adds an element of a basis that is already known to be Gröbner
    /// together with the earlier known elements; no pairs among them.
    fn insert_known(&mut self, h: Polynomial) {
        let k = self.store.len();
        let hk = h.lm().clone();
        self.store.push(h.clone());
        self.active.push(true);
        let order = self.ring.order().clone();
        let pos = self
            .reducer
            .lms()
            .iter()
            .position(|m| order.cmp(m, &hk) == Ordering::Less)
            .unwrap_or(self.reducer.len());
        self.reducer.insert(pos, h, k);
    }

    /// Gebauer–Möller update for the new element `k`.
    fn insert(&mut self, h: Polynomial) {
        let k = self.store.len();
        let hk = h.lm().clone();
        self.store.push(h.clone());
        self.active.push(true);

        let mut cands: Vec<(usize, Monomial, bool)> = Vec::new();
        for (i, g) in self.store.iter().enumerate().take(k) {
            if self.active[i] {
                let lm = g.lm();
                cands.push((i, lm.lcm(&hk), lm.is_coprime(&hk)));
            }
        }
        self.stats.pairs_created += cands.len() as u64;
        // Drop (i,k) when another candidate lcm divides it, unless coprime.
        let mut kept: Vec<bool> = vec![true; cands.len()];
        for a in 0..cands.len() {
            if cands[a].2 {
                continue;
            }
            let la = &cands[a].1;
            let dominated = (0..cands.len()).any(|b| {
                b != a && kept[b] && cands[b].1.divides(la) && (cands[b].1 != *la || b > a || cands[b].2)
            });
            if dominated {
                kept[a] = false;
                self.stats.gm_pruned += 1;
            }
        }
        // Old pairs (i,j) whose lcm is strictly divisible via k.
        let before = self.pairs.len();
        let store = &self.store;
        self.pairs.retain(|p| {
            !(hk.divides(&p.lcm)
                && store[p.i].lm().lcm(&hk) != p.lcm
                && store[p.j].lm().lcm(&hk) != p.lcm)
        });
        self.stats.gm_pruned += (before - self.pairs.len()) as u64;
        for (a, (i, l, coprime)) in cands.into_iter().enumerate() {
            if !kept[a] {
                continue;
            }
            if coprime {
                self.stats.coprime_skipped += 1;
                continue;
            }
            self.pairs.push(Pair { i, j: k, lcm: l });
        }
        // Retire elements whose leading monomial is now redundant.
        for i in 0..k {
            if self.active[i] && hk.divides(self.store[i].lm()) {
                self.active[i] = false;
            }
        }
        let active = &self.active;
        self.reducer.remove_where(|id, _| !active[id]);
        let order = self.ring.order().clone();
        let pos = self
            .reducer
            .lms()
            .iter()
            .position(|m| order.cmp(m, &hk) == Ordering::Less)
            .unwrap_or(self.reducer.len());
        self.reducer.insert(pos, h, k);
    }

    fn select(&mut self) -> Option<Pair> {
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            sel_degree(&self.ring, &pa.lcm)
                .cmp(&sel_degree(&self.ring, &pb.lcm))
                .then_with(|| self.ring.order().cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(idx))
    }

    fn run(&mut self) -> Result<()> {
        while let Some(p) = self.select() {
            let d = sel_degree(&self.ring, &p.lcm);
            if d > self.max_degree {
                return Err(self.budget_error("S-pair degree budget", d));
            }
            self.stats.max_pair_degree = self.stats.max_pair_degree.max(d);
            self.stats.pairs_reduced += 1;
            let s = s_poly_terms(&self.store[p.i], &self.store[p.j]);
            let r = self.reduce(s)?;
            if r.is_zero() {
                self.stats.zero_reductions += 1;
            } else {
                self.insert(r);
            }
        }
        Ok(())
    }

    /// Inter-reduces the active set into the reduced basis.
    fn finish(self) -> Result<GroebnerBasis> {
        let mut steps = self.stats.reduction_steps;
        let mut basis = Vec::new();
        for g in self.reducer.polys() {
            let lead = g.terms()[0].clone();
            let tail = self
                .reducer
                .reduce(g.terms()[1..].to_vec(), true, None, &mut steps, u64::MAX)
                .map_err(|_| Error::Internal("unbounded reduction hit a limit".into()))?;
            let mut terms = vec![lead];
            terms.extend(tail);
            basis.push(Polynomial::from_sorted(&self.ring, terms).monic());
        }
        let mut stats = self.stats;
        stats.reduction_steps = steps;
        let order = self.ring.order().clone();
        basis.sort_by(|a, b| order.cmp(b.lm(), a.lm()));
        Ok(GroebnerBasis::from_parts(&self.ring, basis, stats))
    }
}

/// Degree used for pair selection and the degree budget. Variables of an
/// elimination block carry weight 0, so `t·I + (1−t)·J` is homogeneous.
fn sel_degree(ring: &Ring, m: &Monomial) -> u32 {
    match ring.order() {
        TermOrder::Degrevlex => m.degree(),
        TermOrder::Eliminate(block) => m.degree() - block.iter().map(|&i| m.exp(i)).sum::<u32>(),
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger_gens(ring: &Ring, gens: &[Polynomial], budget: &Budget) -> Result<GroebnerBasis> {
    buchberger_extend(ring, &[], gens, budget)
}

/// Reduced Gröbner basis of `known + (extra)`, where `known` is already a
/// reduced Gröbner basis (its internal S-pairs are not revisited).
pub fn buchberger_extend(
    ring: &Ring,
    known: &[Polynomial],
    extra: &[Polynomial],
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let all: Vec<Polynomial> = known.iter().chain(extra.iter()).cloned().collect();
    let max_degree = budget.degree_limit(&all);
    let mut engine = Engine {
        ring: ring.clone(),
        store: Vec::new(),
        active: Vec::new(),
        reducer: Reducer::new(ring),
        pairs: Vec::new(),
        stats: GbStats::default(),
        max_steps: budget.max_steps,
        max_degree,
    };
    for g in known.iter().filter(|g| !g.is_zero()) {
        if g.ring().arity() != ring.arity() {
            return Err(Error::RingMismatch);
        }
        engine.insert_known(g.monic());
    }
    let mut input: Vec<&Polynomial> = extra.iter().filter(|g| !g.is_zero()).collect();
    let order = ring.order().clone();
    input.sort_by(|a, b| {
        a.degree().cmp(&b.degree()).then_with(|| order.cmp(a.lm(), b.lm()))
    });
    for g in input {
        if g.ring().arity() != ring.arity() {
            return Err(Error::RingMismatch);
        }
        let r = engine.reduce(g.terms().to_vec())?;
        if !r.is_zero() {
            engine.insert(r);
        }
    }
    engine.run()?;
    engine.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_polynomial_list, RingSpec};

    #[test]
    fn hand_example_over_q() {
        let r = RingSpec::degrevlex(0, &["x", "y"]).unwrap();
        let g = parse_polynomial_list(&r, "x^2+y^2, x*y").unwrap();
        let gb = buchberger_gens(&r, &g, &Budget::default()).unwrap();
        let rendered: Vec<String> = gb.basis().iter().map(|p| p.render()).collect();
        assert_eq!(rendered, vec!["y^3", "x^2 + y^2", "x*y"]);
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        let r = RingSpec::degrevlex(2, &["x", "y"]).unwrap();
        let g = parse_polynomial_list(&r, "y^3, x^3, x^3*y").unwrap();
        let gb = buchberger_gens(&r, &g, &Budget::default()).unwrap();
        let rendered: Vec<String> = gb.basis().iter().map(|p| p.render()).collect();
        assert_eq!(rendered, vec!["x^3", "y^3"]);
    }

    #[test]
    fn budget_is_a_hard_error() {
        let r = RingSpec::degrevlex(0, &["x", "y", "z"]).unwrap();
        let g = parse_polynomial_list(&r, "x^2 - y*z, y^2 - x*z, z^2 - x*y + x^2").unwrap();
        let tight = Budget { max_degree: Some(2), max_steps: 1_000_000 };
        assert!(buchberger_gens(&r, &g, &tight).unwrap_err().is_budget());
        let few = Budget { max_degree: None, max_steps: 1 };
        assert!(buchberger_gens(&r, &g, &few).unwrap_err().is_budget());
    }
}
