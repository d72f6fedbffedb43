//! Finite named alphabets: the color palette of a tree algebra, or the point
//! set `S` of a path algebra.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, ParseError, Result};

/// Index of a letter inside its [`Alphabet`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol(pub(crate) u16);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A vertex color.
pub type Color = Symbol;

/// A point of the set `S` underlying a path algebra.
pub type Point = Symbol;

/// An ordered list of distinct identifiers over `[A-Za-z0-9_]`.
///
/// Letter order is declaration order; it fixes the enumeration and
/// term-iteration order of everything built over the alphabet.
#[derive(Clone)]
pub struct Alphabet {
    names: Arc<[String]>,
}

/// The color set of a tree algebra.
pub type Palette = Alphabet;

pub(crate) fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_'
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::Overflow("alphabet size"));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.bytes().all(is_ident_byte) {
                return Err(ParseError::new(0, format!("invalid symbol `{n}`")).into());
            }
            if names[..i].contains(n) {
                return Err(ParseError::new(0, format!("duplicate symbol `{n}`")).into());
            }
        }
        Ok(Alphabet {
            names: names.into(),
        })
    }

    /// `a, b, c, …` for up to 26 letters, `c0, c1, …` beyond that.
    pub fn letters(count: usize) -> Result<Self> {
        if count <= 26 {
            Self::new((0..count).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            Self::new((0..count).map(|i| format!("c{i}")))
        }
    }

    /// Parses a comma-separated list, optionally wrapped as `S = {a,b,c}` or
    /// `{a,b,c}`.
    pub fn parse_list(text: &str) -> Result<Self> {
        let mut body = text.trim();
        if let Some((lhs, rhs)) = body.split_once('=') {
            if lhs.trim() != "S" {
                return Err(ParseError::new(0, "expected `S = {...}`").into());
            }
            body = rhs.trim();
        }
        if let Some(inner) = body.strip_prefix('{') {
            body = inner
                .strip_suffix('}')
                .ok_or_else(|| ParseError::new(text.len(), "missing `}`"))?;
        }
        Self::new(body.split(',').map(|s| s.trim().to_string()))
    }

    /// Collects every identifier appearing in the given key literals, sorted.
    ///
    /// Coefficients and literal prefixes must already be stripped.
    pub fn infer<'a>(literals: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut found: Vec<String> = Vec::new();
        for lit in literals {
            let bytes = lit.as_bytes();
            let mut i = 0;
            while i < bytes.len() {
                if is_ident_byte(bytes[i]) {
                    let start = i;
                    while i < bytes.len() && is_ident_byte(bytes[i]) {
                        i += 1;
                    }
                    found.push(lit[start..i].to_string());
                } else {
                    i += 1;
                }
            }
        }
        found.sort();
        found.dedup();
        Self::new(found)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Symbol> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Symbol(i as u16))
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(|i| Symbol(i as u16))
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.index() < self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Alphabet {}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_and_lookup() {
        let p = Alphabet::letters(3).unwrap();
        assert_eq!(p.names(), ["a", "b", "c"]);
        assert_eq!(p.lookup("b"), Some(Symbol(1)));
        assert_eq!(p.lookup("z"), None);
        assert_eq!(Alphabet::letters(30).unwrap().name(Symbol(29)), "c29");
    }

    #[test]
    fn rejects_bad_names() {
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a-b"]).is_err());
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
    }

    #[test]
    fn parse_point_set() {
        let s = Alphabet::parse_list("S = {a, b, c}").unwrap();
        assert_eq!(s.names(), ["a", "b", "c"]);
        assert_eq!(Alphabet::parse_list("x,y").unwrap().len(), 2);
        assert!(Alphabet::parse_list("T = {a}").is_err());
    }

    #[test]
    fn infer_collects_identifiers() {
        let p = Alphabet::infer(["(b(a))", "(c)", "(a,d)"]).unwrap();
        assert_eq!(p.names(), ["a", "b", "c", "d"]);
    }
}
