//! Growth polynomials and Gelfand-Kirillov dimensions of admissible
//! representations of `GL_n` over a nonarchimedean local field, indexed by
//! multisegments, with finite-ring brute-force checks.

pub mod cuspidal;
pub mod error;
pub mod growth;
pub mod oracle;
pub mod orbits;
pub mod qring;
pub mod segments;
pub mod sln;

pub use cuspidal::{CuspidalGrowth, Gl2Case, SourceMap};
pub use error::{Error, Result};
pub use growth::LeadingTerm;
pub use orbits::{CharacterExpansion, Partition};
pub use qring::{QPoly, QRat, XLaurent};
pub use segments::{Multisegment, Poset, Segment, Symbol};
pub use sln::TwistActionTable;
