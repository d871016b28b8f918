//! Empirical checks of the main equivalence.

pub mod enumerate;
pub mod laws;
pub mod random;
pub mod sweep;
pub mod verify;

pub use laws::{check_order_laws, LawReport};
pub use random::{random_instance, RandomParams};
pub use sweep::{equivalence_sweep, SweepConfig, SweepSummary, Witness};
pub use verify::{examine, verify, verify_backward, verify_forward, Direction, VerifyReport};
