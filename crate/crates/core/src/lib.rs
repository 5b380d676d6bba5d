//! Exact computations in the multi-virtual twin group `M_k VT_n`.
//!
//! The crate covers the defining presentation of `M_k VT_n` and of its pure
//! (`M_k VPT_n`) and semi-pure (`M_k VHT_n`) subgroups, the two quotient maps
//! onto the symmetric group, Reidemeister–Schreier rewriting, and the eight
//! families of homogeneous 2-local matrix representations together with
//! relation checks, unfaithfulness witnesses and a Burnside irreducibility
//! test. All arithmetic is exact over the rationals.
//!
//! Words are written in a small textual grammar, see [`words::parse_word`]:
//!
//! ```
//! use mvtwin::words::{parse_word, render_word, GroupCtx};
//!
//! let ctx = GroupCtx::mvt(3, 2).unwrap();
//! let w = parse_word("s1 p2.1 s1 p2.1", &ctx).unwrap();
//! assert_eq!(render_word(&w), "s1 p2.1 s1 p2.1");
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod perm;
pub mod presentations;
pub mod reps;
pub mod schreier;
pub mod words;

pub use error::{Error, Result};
pub use exact::{Matrix, Scalar};
pub use perm::{Permutation, QuotientMap};
pub use reps::{RepFamily, RepInstance, RepParams};
pub use words::{Family, GenSym, GroupCtx, Letter, Word};
