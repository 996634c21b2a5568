//! Exact algebra for the torus-fixed coordinate ring of `C^{2n}/((Z/rZ) ≀ S_n)`.
//!
//! The ring `S` of symmetric functions in triples of variables `(x_i, y_i, z_i)`
//! with `x_i y_i = z_i^r` is handled in its monomial basis `m_Λ`. Reducing
//! modulo the ideal generated by the `m_{(a,b,c)}` with `a ≠ b` gives the
//! coordinate ring of the torus-fixed locus, which has a canonical basis
//! indexed by r-tuples of partitions. The crate computes in that basis,
//! checks it against a brute-force model in `n` explicit sites, and compares
//! the resulting Hilbert series with Betti numbers of the framed moduli space
//! of sheaves on the projective plane.

pub mod arith;
pub mod betti;
pub mod coeffs;
pub mod error;
pub mod fixedring;
pub mod graded;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod quotient;
pub mod symfun;

pub use arith::Coeff;
pub use error::{Error, Result};
pub use graded::GradedDims;
pub use partitions::{PaddedPartition, Partition, RTuple, TriPartition, Triple};
pub use quotient::{FixedElement, Reducer};
pub use symfun::SymElement;
