//! The path algebra `P(S)` of a finite set `S`.
//!
//! Basis: symbols `p[s₀,…,sₙ]` with `n ≥ 1`. The product joins paths whose
//! endpoints meet and forgets the meeting point, the coproduct splits the
//! interior into a subsequence and its complement, and `R` doubles the first
//! point.

use std::fmt;

use smallvec::SmallVec;

use crate::alphabet::{Alphabet, Point};
use crate::element::{Element, PathElem, RenderKey};
use crate::error::{ParseError, Result};
use crate::expr::KeySyntax;
use crate::linear::{LinComb, TensorKey};
use crate::matching::{Dialgebra, SemiHomBialgebra};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    points: SmallVec<[Point; 6]>,
}

impl Path {
    /// Panics if fewer than two points are given.
    pub fn new(points: impl IntoIterator<Item = Point>) -> Path {
        let points: SmallVec<[Point; 6]> = points.into_iter().collect();
        assert!(points.len() >= 2, "a path needs two endpoints");
        Path { points }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn start(&self) -> Point {
        self.points[0]
    }

    pub fn end(&self) -> Point {
        *self.points.last().unwrap()
    }

    pub fn interior(&self) -> &[Point] {
        &self.points[1..self.points.len() - 1]
    }

    pub fn parse(set: &Alphabet, text: &str) -> Result<Path, ParseError> {
        let t = text.trim_end();
        let lead = text.len() - text.trim_start().len();
        let body = t[lead..]
            .strip_prefix("p[")
            .ok_or_else(|| ParseError::new(lead, "expected `p[`"))?;
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| ParseError::new(t.len(), "expected `]`"))?;
        let mut points = SmallVec::new();
        let mut offset = lead + 2;
        for name in body.split(',') {
            let at = offset + (name.len() - name.trim_start().len());
            let name_t = name.trim();
            let p = set
                .lookup(name_t)
                .ok_or_else(|| ParseError::new(at, format!("point `{name_t}` is not in S")))?;
            points.push(p);
            offset += name.len() + 1;
        }
        if points.len() < 2 {
            return Err(ParseError::new(lead, "a path needs at least two points"));
        }
        Ok(Path { points })
    }

    pub fn render(&self, set: &Alphabet) -> String {
        let names: Vec<&str> = self.points.iter().map(|&p| set.name(p)).collect();
        format!("p[{}]", names.join(","))
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.points.iter().map(|p| p.index().to_string()).collect();
        write!(f, "p[{}]", names.join(","))
    }
}

impl RenderKey for Path {
    fn render_key(&self, alphabet: &Alphabet) -> String {
        self.render(alphabet)
    }
}

impl KeySyntax for Path {
    fn literal_len(src: &[u8]) -> std::result::Result<usize, usize> {
        if !src.starts_with(b"p[") {
            return Err(0);
        }
        match src.iter().position(|&b| b == b']') {
            Some(i) => Ok(i + 1),
            None => Err(src.len()),
        }
    }

    fn opens(byte: u8, next: Option<u8>) -> bool {
        byte == b'p' && next == Some(b'[')
    }

    fn symbol_text(literal: &str) -> &str {
        literal
            .trim()
            .strip_prefix("p[")
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(literal)
    }

    fn parse_literal(alphabet: &Alphabet, literal: &str) -> std::result::Result<Self, ParseError> {
        Path::parse(alphabet, literal)
    }
}

/// `p[a,X,b]·p[b,Y,d] = p[a,X,Y,d]`; zero when the endpoints differ.
pub fn mul_paths(x: &Path, y: &Path) -> Option<Path> {
    (x.end() == y.start()).then(|| {
        let mut points: SmallVec<[Point; 6]> = SmallVec::from_slice(&x.points[..x.points.len() - 1]);
        points.extend_from_slice(&y.points[1..]);
        Path { points }
    })
}

/// `R(p[a,X,b]) = p[a,a,X,b]`.
pub fn r_path(x: &Path) -> Path {
    let mut points = SmallVec::with_capacity(x.points.len() + 1);
    points.push(x.start());
    points.extend_from_slice(&x.points);
    Path { points }
}

/// `p[X,b]∘p[b,Y] = p[X,b,Y]`; zero when the endpoints differ.
pub fn circ_paths(x: &Path, y: &Path) -> Option<Path> {
    (x.end() == y.start()).then(|| {
        let mut points = x.points.clone();
        points.extend_from_slice(&y.points[1..]);
        Path { points }
    })
}

/// Sum over all splittings of the interior into a subsequence and its
/// complement; both sides keep the endpoints.
pub fn coproduct_path(x: &Path) -> LinComb<TensorKey<Path>> {
    let interior = x.interior();
    let n = interior.len();
    assert!(n < 32, "interior too long");
    let mut out = LinComb::zero();
    for mask in 0u32..(1 << n) {
        let mut left = SmallVec::new();
        let mut right = SmallVec::new();
        left.push(x.start());
        right.push(x.start());
        for (i, &p) in interior.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(p);
            } else {
                right.push(p);
            }
        }
        left.push(x.end());
        right.push(x.end());
        out.add_term(
            TensorKey::pair(Path { points: left }, Path { points: right }),
            Rational::ONE,
        );
    }
    out
}

/// `P(S)` for a declared point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAlgebra {
    points: Alphabet,
}

impl PathAlgebra {
    pub fn new(points: Alphabet) -> Self {
        PathAlgebra { points }
    }

    pub fn points(&self) -> &Alphabet {
        &self.points
    }

    /// `e = Σ_{i∈S} p[i,i]`.
    pub fn unit(&self) -> LinComb<Path> {
        self.points
            .symbols()
            .map(|i| (Path::new([i, i]), Rational::ONE))
            .collect()
    }

    /// All basis paths with at most `max_interior` interior points.
    pub fn basis_paths(&self, max_interior: usize) -> Vec<Path> {
        let syms: Vec<Point> = self.points.symbols().collect();
        let mut out = Vec::new();
        let mut layer: Vec<SmallVec<[Point; 6]>> = vec![SmallVec::new()];
        for len in 0..=max_interior {
            for interior in &layer {
                for &a in &syms {
                    for &b in &syms {
                        let mut points = SmallVec::with_capacity(len + 2);
                        points.push(a);
                        points.extend_from_slice(interior);
                        points.push(b);
                        out.push(Path { points });
                    }
                }
            }
            layer = layer
                .iter()
                .flat_map(|w| {
                    syms.iter().map(move |&s| {
                        let mut v = w.clone();
                        v.push(s);
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn element(&self, terms: LinComb<Path>) -> PathElem {
        PathElem::new(self.points.clone(), terms)
    }

    pub fn parse(&self, text: &str) -> Result<PathElem> {
        Ok(self.element(crate::expr::parse_terms(&self.points, text)?))
    }
}

impl Dialgebra for PathAlgebra {
    type Key = Path;

    fn dot_basis(&self, x: &Path, y: &Path) -> LinComb<Path> {
        mul_paths(x, y).map(LinComb::basis).unwrap_or_default()
    }

    fn circ_basis(&self, x: &Path, y: &Path) -> LinComb<Path> {
        circ_paths(x, y).map(LinComb::basis).unwrap_or_default()
    }
}

impl SemiHomBialgebra for PathAlgebra {
    fn r_basis(&self, x: &Path) -> LinComb<Path> {
        LinComb::basis(r_path(x))
    }

    fn coproduct_basis(&self, x: &Path) -> LinComb<TensorKey<Path>> {
        coproduct_path(x)
    }
}

impl PathElem {
    fn algebra(&self) -> PathAlgebra {
        PathAlgebra::new(self.alphabet().clone())
    }

    pub fn mul(&self, other: &PathElem) -> Result<PathElem> {
        let alg = self.algebra();
        self.combine(other, |x, y| alg.dot(x, y))
    }

    pub fn circ(&self, other: &PathElem) -> Result<PathElem> {
        let alg = self.algebra();
        self.combine(other, |x, y| alg.circ(x, y))
    }

    pub fn r(&self) -> PathElem {
        let alg = self.algebra();
        self.map(|x| alg.r(x))
    }

    pub fn coproduct(&self) -> Element<TensorKey<Path>> {
        self.map(|x| x.map_linear(coproduct_path))
    }

    pub fn coderivation_residual(&self) -> Element<TensorKey<Path>> {
        let alg = self.algebra();
        self.map(|x| alg.coderivation_residual(x))
    }

    pub fn bimatching_residual(&self, other: &PathElem) -> Result<Element<TensorKey<Path>>> {
        let alg = self.algebra();
        self.combine(other, |x, y| alg.bimatching_residual(x, y))
    }

    pub fn multiplicativity_residual(&self, other: &PathElem) -> Result<Element<TensorKey<Path>>> {
        let alg = self.algebra();
        self.combine(other, |x, y| alg.multiplicativity_residual(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg() -> PathAlgebra {
        PathAlgebra::new(Alphabet::new(["a", "b", "c", "x"]).unwrap())
    }

    fn p(s: &str) -> LinComb<Path> {
        crate::expr::parse_terms(alg().points(), s).unwrap()
    }

    fn pp(a: &str, b: &str) -> LinComb<TensorKey<Path>> {
        crate::linear::tensor(&p(a), &p(b))
    }

    #[test]
    fn parse_and_render() {
        let s = alg();
        let x = Path::parse(s.points(), "p[a, x,b]").unwrap();
        assert_eq!(x.render(s.points()), "p[a,x,b]");
        assert!(Path::parse(s.points(), "p[a]").is_err());
        assert_eq!(Path::parse(s.points(), "p[a,z]").unwrap_err().offset, 4);
        assert!(Path::parse(s.points(), "q[a,b]").is_err());
    }

    #[test]
    fn products() {
        let s = alg();
        assert_eq!(s.dot(&p("p[a,x]"), &p("p[x,b]")), p("p[a,b]"));
        assert!(s.dot(&p("p[a,b]"), &p("p[c,x]")).is_zero());
        let x = p("p[a,x,b] + 2 p[c,a]");
        assert_eq!(s.dot(&s.unit(), &x), x);
        assert_eq!(s.dot(&x, &s.unit()), x);
        assert_eq!(s.circ(&p("p[a,b]"), &p("p[b,c]")), p("p[a,b,c]"));
    }

    #[test]
    fn r_examples() {
        let s = alg();
        assert_eq!(s.r(&p("p[a,b]")), p("p[a,a,b]"));
        assert_eq!(s.r(&s.unit()), p("p[a,a,a] + p[b,b,b] + p[c,c,c] + p[x,x,x]"));
    }

    #[test]
    fn coproduct_examples() {
        let s = alg();
        assert_eq!(s.coproduct(&p("p[a,b]")), pp("p[a,b]", "p[a,b]"));
        let de = s.coproduct(&s.unit());
        assert_eq!(de.len(), 4);
        assert_ne!(de, crate::linear::tensor(&s.unit(), &s.unit()));
        assert_eq!(
            s.coproduct(&p("p[a,a,a]")),
            &pp("p[a,a,a]", "p[a,a]") + &pp("p[a,a]", "p[a,a,a]")
        );
    }

    #[test]
    fn coderivation_examples() {
        let s = alg();
        for x in ["p[a,b]", "p[a,x,c,b]", "p[a,a]"] {
            assert!(s.coderivation_residual(&p(x)).is_zero(), "{x}");
        }
        assert!(s.coderivation_residual(&s.unit()).is_zero());
    }

    #[test]
    fn grouplike_bimatching() {
        let s = alg();
        assert!(s.bimatching_residual(&p("p[a,b]"), &p("p[b,c]")).is_zero());
    }

    #[test]
    fn basis_path_count() {
        let s = PathAlgebra::new(Alphabet::letters(3).unwrap());
        // 9 · (1 + 3 + 9)
        assert_eq!(s.basis_paths(2).len(), 117);
    }
}
