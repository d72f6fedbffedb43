//! Text syntax for linear combinations.
//!
//! ```text
//! expr := ['+'|'-'] term (('+'|'-') term)*
//! term := [COEFF ['*']] KEY
//! ```
//!
//! `COEFF` is an integer or `p/q`. Trees and paths open with `(` or `p[`, so
//! the coefficient may be followed directly by the key (`2(a)`, `1/2 p[a,b]`);
//! a word key needs the `*` (`3*a.b|c`), since a color may itself be numeric.

use crate::alphabet::{is_ident_byte, Alphabet};
use crate::error::{ParseError, Result};
use crate::linear::{Key, LinComb};
use crate::rational::Rational;
use crate::tree::{parse_tree, Tree};

/// A key type with a literal syntax.
pub trait KeySyntax: Key {
    /// Length of the literal starting at `src[0]`, or an error offset.
    fn literal_len(src: &[u8]) -> std::result::Result<usize, usize>;
    /// True when a literal can start with this byte.
    fn opens(byte: u8, next: Option<u8>) -> bool;
    /// The part of the literal that names alphabet symbols.
    fn symbol_text(literal: &str) -> &str {
        literal
    }
    fn parse_literal(alphabet: &Alphabet, literal: &str) -> std::result::Result<Self, ParseError>;
}

impl KeySyntax for Tree {
    fn literal_len(src: &[u8]) -> std::result::Result<usize, usize> {
        let mut depth = 0usize;
        for (i, &b) in src.iter().enumerate() {
            match b {
                b'(' => depth += 1,
                b')' => {
                    depth = depth.checked_sub(1).ok_or(i)?;
                    if depth == 0 {
                        return Ok(i + 1);
                    }
                }
                _ => {}
            }
        }
        Err(src.len())
    }

    fn opens(byte: u8, _: Option<u8>) -> bool {
        byte == b'('
    }

    fn parse_literal(alphabet: &Alphabet, literal: &str) -> std::result::Result<Self, ParseError> {
        parse_tree(alphabet, literal)
    }
}

struct RawTerm<'a> {
    coeff: Rational,
    literal: &'a str,
    offset: usize,
}

fn skip_ws(src: &[u8], mut i: usize) -> usize {
    while i < src.len() && src[i].is_ascii_whitespace() {
        i += 1;
    }
    i
}

fn split_terms<K: KeySyntax>(text: &str) -> std::result::Result<Vec<RawTerm<'_>>, ParseError> {
    let src = text.as_bytes();
    let mut terms = Vec::new();
    let mut i = skip_ws(src, 0);
    if i == src.len() {
        return Err(ParseError::new(i, "empty expression"));
    }
    let mut first = true;
    while i < src.len() {
        let mut negative = false;
        match src[i] {
            b'+' | b'-' => {
                negative = src[i] == b'-';
                i = skip_ws(src, i + 1);
            }
            _ if !first => return Err(ParseError::new(i, "expected `+` or `-`")),
            _ => {}
        }
        first = false;
        let mut coeff = Rational::ONE;
        // a coefficient is a run of digits (optionally `p/q`) that is followed
        // by `*` or by the opening of a literal
        let mut j = i;
        while j < src.len() && (src[j].is_ascii_digit() || src[j] == b'/') {
            j += 1;
        }
        if j > i {
            let after = skip_ws(src, j);
            let starred = src.get(after) == Some(&b'*');
            let opens = after < src.len() && K::opens(src[after], src.get(after + 1).copied());
            let not_ident = j == src.len() || !is_ident_byte(src[j]);
            if starred || (opens && not_ident) {
                coeff = text[i..j]
                    .parse()
                    .map_err(|_| ParseError::new(i, format!("bad coefficient `{}`", &text[i..j])))?;
                i = if starred { skip_ws(src, after + 1) } else { after };
            }
        }
        if i >= src.len() {
            return Err(ParseError::new(i, "expected a basis literal"));
        }
        let len = K::literal_len(&src[i..]).map_err(|e| ParseError::new(i + e, "malformed literal"))?;
        if len == 0 {
            return Err(ParseError::new(i, "expected a basis literal"));
        }
        if negative {
            coeff = -coeff;
        }
        terms.push(RawTerm {
            coeff,
            literal: &text[i..i + len],
            offset: i,
        });
        i = skip_ws(src, i + len);
    }
    Ok(terms)
}

fn shift(e: ParseError, by: usize) -> ParseError {
    ParseError::new(e.offset + by, e.message)
}

/// Parses an expression over a known alphabet.
pub fn parse_terms<K: KeySyntax>(alphabet: &Alphabet, text: &str) -> Result<LinComb<K>> {
    let mut out = LinComb::zero();
    for t in split_terms::<K>(text)? {
        let key = K::parse_literal(alphabet, t.literal).map_err(|e| shift(e, t.offset))?;
        out.add_term(key, t.coeff);
    }
    Ok(out)
}

/// Infers a sorted alphabet from the symbols used in all `texts`.
pub fn infer_alphabet<K: KeySyntax>(texts: &[&str]) -> Result<Alphabet> {
    let mut literals = Vec::new();
    for text in texts {
        for t in split_terms::<K>(text)? {
            literals.push(K::symbol_text(t.literal));
        }
    }
    Alphabet::infer(literals)
}
