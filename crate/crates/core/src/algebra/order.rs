use std::cmp::Ordering;

use super::monomial::Monomial;

/// Degrevlex, or a block order whose leading block is compared first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Degrevlex,
    /// Sorted indices of the leading block. Both blocks use degrevlex internally.
    Eliminate(Vec<usize>),
}

#[inline]
fn revlex_tail(a: &[u32], b: &[u32]) -> Ordering {
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return if a[i] < b[i] { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

#[inline]
fn block_cmp(a: &[u32], b: &[u32], in_block: impl Fn(usize) -> bool) -> Ordering {
    let mut da = 0u64;
    let mut db = 0u64;
    for i in 0..a.len() {
        if in_block(i) {
            da += a[i] as u64;
            db += b[i] as u64;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if in_block(i) && a[i] != b[i] {
            return if a[i] < b[i] { Ordering::Greater } else { Ordering::Less };
        }
    }
    Ordering::Equal
}

impl TermOrder {
    /// `Greater` means `a` is the larger monomial.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Degrevlex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => revlex_tail(a.exps(), b.exps()),
                o => o,
            },
            TermOrder::Eliminate(block) => {
                let (ea, eb) = (a.exps(), b.exps());
                match block_cmp(ea, eb, |i| block.contains(&i)) {
                    Ordering::Equal => block_cmp(ea, eb, |i| !block.contains(&i)),
                    o => o,
                }
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, TermOrder::Degrevlex)
    }
}
