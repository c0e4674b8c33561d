//! Exact-arithmetic p-adic wavelet analysis.
//!
//! Numbers live in `Z[1/p]` (finite p-adic expansions), scalars in the
//! cyclotomic fields `Q(zeta_{p^m})` extended by exact powers `p^{re + i im}`,
//! and functions are finite combinations of modulated ball indicators.  On
//! top of that sit Haar/Kozyrev wavelet bases, multiresolution
//! decomposition, an exact Fourier transform, and pseudo-differential
//! operators diagonal in the wavelet basis.

pub mod cli;
pub mod cyclo;
pub mod error;
pub mod mbf;
pub mod mra;
pub mod padic;
pub mod psdo;
pub mod wavelets;

pub use cyclo::{CycloScalar, PowerScalar};
pub use error::QpwError;
pub use mbf::{Mbf, MbfTerm};
pub use padic::{Angle, Ball, BallRelation, PAdicPoint, PAdicVector};
