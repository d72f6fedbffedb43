//! Linear combinations tagged with the alphabet their keys are drawn from.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::linear::{Key, LinComb, Record, TensorKey};
use crate::matching::Word;
use crate::path::Path;
use crate::rational::Rational;
use crate::tree::Tree;

/// A basis key that can be printed once its alphabet is known.
pub trait RenderKey: Key {
    fn render_key(&self, alphabet: &Alphabet) -> String;
}

impl RenderKey for Tree {
    fn render_key(&self, alphabet: &Alphabet) -> String {
        self.render(alphabet)
    }
}

impl<K: RenderKey> RenderKey for TensorKey<K> {
    fn render_key(&self, alphabet: &Alphabet) -> String {
        let legs: Vec<String> = self.legs().iter().map(|k| k.render_key(alphabet)).collect();
        legs.join(" ⊗ ")
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Element<K: Key> {
    alphabet: Alphabet,
    terms: LinComb<K>,
}

/// An element of the free compatible algebra.
pub type Elem = Element<Tree>;
/// An element of the tensor square of the free compatible algebra.
pub type TensorElem = Element<TensorKey<Tree>>;
/// An element of the free matching dialgebra.
pub type WordElem = Element<Word>;
/// An element of a path algebra.
pub type PathElem = Element<Path>;

impl<K: Key> Element<K> {
    pub fn new(alphabet: Alphabet, terms: LinComb<K>) -> Self {
        Element { alphabet, terms }
    }

    pub fn zero(alphabet: Alphabet) -> Self {
        Element::new(alphabet, LinComb::zero())
    }

    pub fn basis(alphabet: Alphabet, key: K) -> Self {
        Element::new(alphabet, LinComb::basis(key))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &LinComb<K> {
        &self.terms
    }

    pub fn into_terms(self) -> LinComb<K> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub(crate) fn check_same(&self, other: &Alphabet) -> Result<()> {
        if &self.alphabet == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    /// Applies a bilinear operation after checking both alphabets agree.
    pub fn combine<K2: Key>(
        &self,
        other: &Element<K>,
        f: impl FnOnce(&LinComb<K>, &LinComb<K>) -> LinComb<K2>,
    ) -> Result<Element<K2>> {
        self.check_same(&other.alphabet)?;
        Ok(Element::new(self.alphabet.clone(), f(&self.terms, &other.terms)))
    }

    /// Applies a linear operation.
    pub fn map<K2: Key>(&self, f: impl FnOnce(&LinComb<K>) -> LinComb<K2>) -> Element<K2> {
        Element::new(self.alphabet.clone(), f(&self.terms))
    }

    pub fn add(&self, other: &Element<K>) -> Result<Self> {
        self.combine(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Element<K>) -> Result<Self> {
        self.combine(other, |x, y| x - y)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|x| x.scale(c))
    }
}

impl<K: RenderKey> Element<K> {
    /// One `coeff key` line per term, or `0`.
    pub fn render_lines(&self) -> String {
        self.terms.render_lines(|k| k.render_key(&self.alphabet))
    }

    pub fn to_records(&self) -> Vec<Record> {
        self.terms.to_records(|k| k.render_key(&self.alphabet))
    }
}

impl<K: RenderKey> fmt::Display for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.terms.render_inline(|k| k.render_key(&self.alphabet)))
    }
}

impl<K: RenderKey> fmt::Debug for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.alphabet)
    }
}
