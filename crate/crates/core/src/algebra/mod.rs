//! Path algebras, parallel ideals, and the monomial order.

pub mod element;
pub mod ideal;
pub mod incidence;
pub mod order;

pub use element::{multiply, truncate, AlgebraElement, Scalar};
pub use ideal::{in_parallel_ideal, parallel_ideal_generators};
pub use incidence::{graded_product, incidence_product};
pub use order::{MonomialOrder, Rule};
