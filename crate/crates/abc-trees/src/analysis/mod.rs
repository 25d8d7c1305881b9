//! Numeric verification of the analytic groundwork behind the
//! transformation catalogue.
//!
//! Three layers:
//!
//! * [`monotonicity_scan`] checks the sign and monotonicity claims for the
//!   five helper functions ([`PropFunction`]) over a dense grid;
//! * [`sign_change_scan`] and [`limit_eval`] locate roots and tail limits
//!   of the one-variable profiles ([`Expression`]) the closed-form deltas
//!   reduce to;
//! * [`constant_table`] recomputes every quoted constant and root from its
//!   defining expression and compares against the expected value.

mod constants;
mod expressions;
mod propositions;

pub use constants::{constant_table, ConstantRecord};
pub use expressions::{limit_eval, sign_change_scan, Expression, LimitTrace, SignChange};
pub use propositions::{monotonicity_scan, GridSpec, PropFunction, ScanReport};
