//! Instance files and report documents.

mod instance;
mod report;

pub use instance::{digest, digest_value, instance_to_value, parse_instance, serialize_instance};
pub use report::{basis_document, complex_document, monomial_convention, parse_basis_file, Report};
