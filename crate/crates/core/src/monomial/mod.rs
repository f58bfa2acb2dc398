//! Monomial ideals: combinatorics, symbolic powers, integral closure and
//! exact regularity.

mod betti;
mod ideal;
mod splitting;

pub use betti::{
    betti_numbers, betti_numbers_with, cm_regularity, cm_regularity_with, BettiTable, DEFAULT_GENERATOR_THRESHOLD,
};
pub use ideal::{minimalize, q_power_membership, MonomialIdeal};
pub use splitting::{reg_bracket_splitting, SplitStep};
