//! A catalogue of local tree surgeries that strictly decrease the ABC
//! index, each paired with a closed-form delta.
//!
//! Every kind follows the same recipe: pendant material is cut from one or
//! more "donor" branches and reassembled elsewhere so that almost every
//! touched edge keeps the weight `1/sqrt(2)` — the weight of any edge with
//! a degree-2 endpoint. The few edges that do change weight give a small
//! closed-form expression for the index change; for six kinds that
//! expression is exact, for the rest it is a proven upper bound (still
//! strictly negative on the kind's domain).
//!
//! The workflow is: [`find_configuration`] reports where a kind applies,
//! [`apply`] performs the surgery and returns a [`TransformOutcome`] whose
//! recomputed delta can be compared against the closed form, and
//! [`verify_decrease`] sweeps constructed instances of a kind across hub
//! degrees to confirm decrease, exactness, and bound soundness in bulk.
//!
//! The multi-donor kinds assemble one of three reference shapes from the
//! cut material — see [`StarBranchKind`].

mod apply;
pub mod instances;
mod kind;
mod locate;
mod verify;

pub use apply::{apply, StarBranch, StarBranchKind, TransformOutcome};
pub(crate) use kind::sup_drop_6_to_5;
pub use kind::{delta_closed_form, BoundKind, TransformKind};
pub use locate::{find_configuration, Location};
pub use verify::{verify_all, verify_decrease, SweepReport};
