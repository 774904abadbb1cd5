//! Exact intersection calculus on Grassmann bundles.
//!
//! The crate is organized bottom-up:
//!
//! * [`partition`]: partitions, conjugation, one-box Pieri steps and
//!   standard Young tableau counts (closed formula and brute force).
//! * [`chow`]: truncated graded polynomial rings over `Q`, total
//!   Chern/Segre series, Jacobi–Trudi determinants and the discriminant.
//! * [`grass`]: classes on `Gr_d(E)` built from `χ = c1(Q)` and pullbacks,
//!   and their push-forward to the base.
//! * [`verify`]: exact reproductions of the push-forward identities, each
//!   producing a [`verify::VerificationReport`].
//! * [`ineq`]: Segre-class inequality expressions and their evaluation on
//!   intersection-number tables.
//! * [`cli`]: the `gysin` command-line front end.

pub mod chow;
pub mod cli;
pub mod error;
pub mod grass;
pub mod ineq;
pub mod partition;
pub mod verify;

pub use chow::{
    discriminant, rat, schur_det, ClassSeries, GeneratorTable, GradedElement, Rational, Ring,
    RingExt,
};
pub use error::{Error, Result};
pub use grass::{FiberedClass, GrassSetup};
pub use partition::Partition;
