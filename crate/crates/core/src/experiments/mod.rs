//! Replication drivers for the `Q = (x^3, y^3)`, `f = xya + (x^2+y^2)b`
//! example: explicit Gröbner bases, regularity brackets, the symbolic-power
//! decomposition and the characteristic-zero evidence harness.

mod evidence;
mod report;
mod setting;
mod symbolic;
mod theorems;
mod verify;

pub use evidence::{conjecture_char0_harness, conjectured_char0_reg, nolimit_evidence, Char0Row, IntersectionRow, NoLimitOutcome, RatioRow};
pub use report::{Assertion, ExperimentReport, Verdict, REPORT_VERSION};
pub use setting::Setting;
pub use symbolic::{symbolic_reg_bracket, DirectCheck, KTerm, SymbolicOutcome};
pub use theorems::{GeneratorType, TheoremFamily, TheoremFamilySpec, TheoremId};
pub use verify::{verify_theorem, CrossCheck, RunOptions};
