//! Club-parameterized combinatory completeness.
//!
//! A polynomial over an applicative system is a term built from variables
//! and application. Which combinators are needed to represent it depends
//! on how it uses its variables: in order and once each (`B`, `I`),
//! permuted (`C`), discarded (`K`) or duplicated (`W`). The usage
//! function of a term is a finite function; the least club containing it
//! names the variable discipline, and the compiler produces a closed
//! witness over that club's combinator basis.
//!
//! ```
//! use clubcomb::{compiler, poly, Club};
//!
//! let s = poly::parse("x, y |- y x").unwrap();
//! let report = compiler::compile(&s, None, Default::default()).unwrap();
//! assert_eq!(report.club_used, Club::Bij);
//! assert!(report.verified);
//! ```

pub mod cli;
pub mod comb;
pub mod compiler;
pub mod diagram;
pub mod finord;
mod lex;
pub mod poly;

pub use comb::{CombTerm, Prim};
pub use compiler::{compile, CompileReport};
pub use finord::{Club, FinFun, Generator, GeneratorKind};
pub use poly::{Bracketing, PolyTerm, Sequent};
