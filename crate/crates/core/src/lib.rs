//! Exact computations in free compatible associative algebras on colored
//! planar rooted trees, their infinitesimal bialgebra structure, the
//! N-algebra of primitive elements, matching dialgebras and the path algebra
//! of a finite set.
//!
//! ```
//! use cab_core::prelude::*;
//!
//! let p = Palette::letters(2).unwrap();
//! let a = Elem::parse(&p, "(a)").unwrap();
//! let b = Elem::parse(&p, "(b)").unwrap();
//! assert_eq!(a.circle(&b).unwrap().to_string(), "(b(a))");
//! assert_eq!(a.dot(&b).unwrap().to_string(), "(a,b)");
//! ```

pub mod alphabet;
pub mod compat;
pub mod counting;
pub mod element;
pub mod error;
pub mod expr;
pub mod infinitesimal;
pub mod linear;
pub mod matching;
pub mod path;
pub mod rational;
pub mod tree;
pub mod verify;

pub use alphabet::{Alphabet, Color, Palette, Point, Symbol};
pub use element::{Elem, Element, PathElem, RenderKey, TensorElem, WordElem};
pub use error::{Error, ParseError, Result};
pub use linear::{LinComb, TensorKey};
pub use rational::Rational;
pub use tree::{Tree, VertexId};

pub mod prelude {
    pub use crate::alphabet::{Alphabet, Color, Palette, Point};
    pub use crate::compat::{FinAlgebra, LieKind, Product};
    pub use crate::element::{Elem, Element, PathElem, RenderKey, TensorElem, WordElem};
    pub use crate::infinitesimal::{NAuxId, NRelationId};
    pub use crate::linear::{LinComb, TensorKey};
    pub use crate::matching::{Composition, Word};
    pub use crate::path::{Path, PathAlgebra};
    pub use crate::rational::Rational;
    pub use crate::tree::{Tree, VertexId};
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/trees.md")]
    mod trees {}
    #[doc = include_str!("../../../book/src/linear.md")]
    mod linear {}
    #[doc = include_str!("../../../book/src/products.md")]
    mod products {}
    #[doc = include_str!("../../../book/src/coproduct.md")]
    mod coproduct {}
    #[doc = include_str!("../../../book/src/primitives.md")]
    mod primitives {}
    #[doc = include_str!("../../../book/src/matching.md")]
    mod matching {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
