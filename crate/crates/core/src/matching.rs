//! Matching dialgebras: the free one on words of blocks, the one-color
//! partition algebra, generic product checks, the tensor-square structure,
//! and algebras whose second product comes from a right semi-homomorphism.
//!
//! A [`Word`] `[[a,b],[c]]` stands for `(a∘b)·c`. Its text form is `a.b|c`.

use std::fmt;

use crate::alphabet::{is_ident_byte, Alphabet, Color, Palette};
use crate::compat::{circle_trees, FinAlgebra, TreeComb, Vector};
use crate::element::{Elem, RenderKey, WordElem};
use crate::error::{Error, ParseError, Result};
use crate::expr::KeySyntax;
use crate::linear::{Key, LinComb, TensorKey};
use crate::rational::Rational;
use crate::tree::Tree;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    blocks: Vec<Vec<Color>>,
}

impl Word {
    /// Panics on an empty word or an empty block.
    pub fn new(blocks: Vec<Vec<Color>>) -> Word {
        assert!(!blocks.is_empty() && blocks.iter().all(|b| !b.is_empty()));
        Word { blocks }
    }

    pub fn letter(a: Color) -> Word {
        Word { blocks: vec![vec![a]] }
    }

    pub fn blocks(&self) -> &[Vec<Color>] {
        &self.blocks
    }

    pub fn degree(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block lengths, the image in the partition algebra.
    pub fn shape(&self) -> Composition {
        Composition(self.blocks.iter().map(Vec::len).collect())
    }

    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Word, ParseError> {
        let mut blocks = Vec::new();
        let mut offset = 0;
        for block in text.split('|') {
            let mut letters = Vec::new();
            let mut inner = offset;
            for name in block.split('.') {
                let trimmed = name.trim();
                let at = inner + (name.len() - name.trim_start().len());
                if trimmed.is_empty() {
                    return Err(ParseError::new(at, "empty letter"));
                }
                let c = alphabet
                    .lookup(trimmed)
                    .ok_or_else(|| ParseError::new(at, format!("symbol `{trimmed}` is not in the alphabet")))?;
                letters.push(c);
                inner += name.len() + 1;
            }
            blocks.push(letters);
            offset += block.len() + 1;
        }
        Ok(Word { blocks })
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&c| alphabet.name(c)).collect::<Vec<_>>().join("."))
            .collect::<Vec<_>>()
            .join("|")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|c| c.index().to_string()).collect::<Vec<_>>().join("."))
            .collect();
        write!(f, "{}", s.join("|"))
    }
}

impl RenderKey for Word {
    fn render_key(&self, alphabet: &Alphabet) -> String {
        self.render(alphabet)
    }
}

impl KeySyntax for Word {
    fn literal_len(src: &[u8]) -> std::result::Result<usize, usize> {
        let len = src
            .iter()
            .position(|&b| !(is_ident_byte(b) || b == b'.' || b == b'|'))
            .unwrap_or(src.len());
        Ok(len)
    }

    fn opens(byte: u8, _: Option<u8>) -> bool {
        is_ident_byte(byte)
    }

    fn parse_literal(alphabet: &Alphabet, literal: &str) -> std::result::Result<Self, ParseError> {
        Word::parse(alphabet, literal)
    }
}

/// `u·w`: concatenation of block lists.
pub fn m_dot(u: &Word, w: &Word) -> Word {
    let mut blocks = u.blocks.clone();
    blocks.extend(w.blocks.iter().cloned());
    Word { blocks }
}

/// `u∘w`: concatenation merging the last block of `u` with the first of `w`.
pub fn m_circ(u: &Word, w: &Word) -> Word {
    let mut blocks = u.blocks.clone();
    let mut rest = w.blocks.iter();
    blocks
        .last_mut()
        .unwrap()
        .extend(rest.next().unwrap().iter().copied());
    blocks.extend(rest.cloned());
    Word { blocks }
}

/// Image of a tree in the free matching dialgebra.
pub fn normalize(t: &Tree) -> Word {
    match t.split_irreducible() {
        Some((None, a)) => Word::letter(a),
        // (t'₁⋯t'ᵣ)∘a = t'₁⋯(t'ᵣ∘a)
        Some((Some(u), a)) => m_circ(&normalize(&u), &Word::letter(a)),
        None => {
            let mut fs = t.factorize().into_iter();
            let first = normalize(&fs.next().unwrap());
            fs.fold(first, |acc, f| m_dot(&acc, &normalize(&f)))
        }
    }
}

pub fn normalize_comb(x: &TreeComb) -> LinComb<Word> {
    x.map_keys(normalize)
}

/// Cut the letter sequence at each of the `n − 1` inner positions; a cut
/// inside a block splits that block between the two sides.
pub fn m_coproduct(w: &Word) -> LinComb<TensorKey<Word>> {
    let mut out = LinComb::zero();
    for (b, block) in w.blocks.iter().enumerate() {
        for cut in 0..block.len() {
            if b == 0 && cut == 0 {
                continue;
            }
            let (left, right) = if cut == 0 {
                (w.blocks[..b].to_vec(), w.blocks[b..].to_vec())
            } else {
                let mut left = w.blocks[..b].to_vec();
                left.push(block[..cut].to_vec());
                let mut right = vec![block[cut..].to_vec()];
                right.extend(w.blocks[b + 1..].iter().cloned());
                (left, right)
            };
            out.add_term(
                TensorKey::pair(Word { blocks: left }, Word { blocks: right }),
                Rational::ONE,
            );
        }
    }
    out
}

pub fn m_coproduct_comb(x: &LinComb<Word>) -> LinComb<TensorKey<Word>> {
    x.map_linear(m_coproduct)
}

/// All words of degree `n`: compositions of `n` in lexicographic order, then
/// letters in palette-lexicographic order.
pub fn enumerate_words(n: usize, palette: &Palette) -> Result<Vec<Word>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let letters: Vec<Color> = palette.symbols().collect();
    let mut out = Vec::new();
    for comp in crate::counting::compositions(n) {
        let mut digits = vec![0usize; n];
        loop {
            let mut it = digits.iter();
            let blocks = comp
                .iter()
                .map(|&len| (0..len).map(|_| letters[*it.next().unwrap()]).collect())
                .collect();
            out.push(Word { blocks });
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < letters.len() {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// An ordered partition `n = n₁ + … + n_l`, the one-color word with blocks
/// of these sizes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Parses `(2,1)`.
    pub fn parse(text: &str) -> Result<Composition, ParseError> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| ParseError::new(0, "expected `(n1,...,nl)`"))?;
        let mut parts = Vec::new();
        for p in inner.split(',') {
            let v: usize = p
                .trim()
                .parse()
                .map_err(|_| ParseError::new(0, format!("bad part `{}`", p.trim())))?;
            if v == 0 {
                return Err(ParseError::new(0, "parts must be positive"));
            }
            parts.push(v);
        }
        Ok(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn comp_dot(c: &Composition, d: &Composition) -> Composition {
    Composition(c.0.iter().chain(&d.0).copied().collect())
}

pub fn comp_circ(c: &Composition, d: &Composition) -> Composition {
    let mut parts = c.0.clone();
    *parts.last_mut().unwrap() += d.0[0];
    parts.extend_from_slice(&d.0[1..]);
    Composition(parts)
}

/// A vector space with two bilinear products given on a basis.
pub trait Dialgebra {
    type Key: Key;

    fn dot_basis(&self, x: &Self::Key, y: &Self::Key) -> LinComb<Self::Key>;
    fn circ_basis(&self, x: &Self::Key, y: &Self::Key) -> LinComb<Self::Key>;

    fn dot(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        x.bilinear(y, |s, t| self.dot_basis(s, t))
    }

    fn circ(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        x.bilinear(y, |s, t| self.circ_basis(s, t))
    }

    /// `x∘y − x·y`.
    fn star(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        &self.circ(x, y) - &self.dot(x, y)
    }
}

type Comb<D> = LinComb<<D as Dialgebra>::Key>;

/// `[(x·y)·z − x·(y·z), (x∘y)∘z − x∘(y∘z)]`.
pub fn associativity_residuals<D: Dialgebra>(alg: &D, x: &Comb<D>, y: &Comb<D>, z: &Comb<D>) -> [Comb<D>; 2] {
    [
        &alg.dot(&alg.dot(x, y), z) - &alg.dot(x, &alg.dot(y, z)),
        &alg.circ(&alg.circ(x, y), z) - &alg.circ(x, &alg.circ(y, z)),
    ]
}

/// `(x∘y)·z + (x·y)∘z − x∘(y·z) − x·(y∘z)`.
pub fn compatibility_residual<D: Dialgebra>(alg: &D, x: &Comb<D>, y: &Comb<D>, z: &Comb<D>) -> Comb<D> {
    let mut r = alg.dot(&alg.circ(x, y), z);
    r += &alg.circ(&alg.dot(x, y), z);
    r -= &alg.circ(x, &alg.dot(y, z));
    r -= &alg.dot(x, &alg.circ(y, z));
    r
}

/// `[(x·y)∘z − x·(y∘z), (x∘y)·z − x∘(y·z)]`.
pub fn matching_residuals<D: Dialgebra>(alg: &D, x: &Comb<D>, y: &Comb<D>, z: &Comb<D>) -> [Comb<D>; 2] {
    [
        &alg.circ(&alg.dot(x, y), z) - &alg.dot(x, &alg.circ(y, z)),
        &alg.dot(&alg.circ(x, y), z) - &alg.circ(x, &alg.dot(y, z)),
    ]
}

/// `(x∗y)∗z − x∗(y∗z)` for `∗ = ∘ − ·`.
pub fn star_associativity_residual<D: Dialgebra>(alg: &D, x: &Comb<D>, y: &Comb<D>, z: &Comb<D>) -> Comb<D> {
    &alg.star(&alg.star(x, y), z) - &alg.star(x, &alg.star(y, z))
}

/// The free matching dialgebra on words.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeMatching;

impl Dialgebra for FreeMatching {
    type Key = Word;

    fn dot_basis(&self, x: &Word, y: &Word) -> LinComb<Word> {
        LinComb::basis(m_dot(x, y))
    }

    fn circ_basis(&self, x: &Word, y: &Word) -> LinComb<Word> {
        LinComb::basis(m_circ(x, y))
    }
}

/// The free compatible algebra on trees. It is not a matching dialgebra.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeCompatible;

impl Dialgebra for FreeCompatible {
    type Key = Tree;

    fn dot_basis(&self, x: &Tree, y: &Tree) -> TreeComb {
        LinComb::basis(x.dot(y))
    }

    fn circ_basis(&self, x: &Tree, y: &Tree) -> TreeComb {
        circle_trees(x, y)
    }
}

/// The one-color partition algebra on compositions.
#[derive(Clone, Copy, Debug, Default)]
pub struct PartitionAlgebra;

impl Dialgebra for PartitionAlgebra {
    type Key = Composition;

    fn dot_basis(&self, x: &Composition, y: &Composition) -> LinComb<Composition> {
        LinComb::basis(comp_dot(x, y))
    }

    fn circ_basis(&self, x: &Composition, y: &Composition) -> LinComb<Composition> {
        LinComb::basis(comp_circ(x, y))
    }
}

/// Plain words with `x·y = xy` and `x∘y = yx`. Both products are associative
/// but the pair is neither compatible nor matching.
#[derive(Clone, Copy, Debug, Default)]
pub struct OppositeConcat;

impl Dialgebra for OppositeConcat {
    type Key = Vec<Color>;

    fn dot_basis(&self, x: &Vec<Color>, y: &Vec<Color>) -> LinComb<Vec<Color>> {
        LinComb::basis(x.iter().chain(y).copied().collect())
    }

    fn circ_basis(&self, x: &Vec<Color>, y: &Vec<Color>) -> LinComb<Vec<Color>> {
        LinComb::basis(y.iter().chain(x).copied().collect())
    }
}

impl Dialgebra for FinAlgebra {
    type Key = usize;

    fn dot_basis(&self, x: &usize, y: &usize) -> LinComb<usize> {
        to_comb(&FinAlgebra::dot(self, &self.unit_vector(*x), &self.unit_vector(*y)))
    }

    fn circ_basis(&self, x: &usize, y: &usize) -> LinComb<usize> {
        to_comb(&FinAlgebra::circ(self, &self.unit_vector(*x), &self.unit_vector(*y)))
    }
}

pub fn to_comb(v: &[Rational]) -> LinComb<usize> {
    v.iter().enumerate().map(|(i, c)| (i, c.clone())).collect()
}

pub fn to_vector(x: &LinComb<usize>, dim: usize) -> Vector {
    let mut v = vec![Rational::ZERO; dim];
    for (i, c) in x.iter() {
        v[*i] = c.clone();
    }
    v
}

/// The two products on `H⊗H` built from a dialgebra `H`:
/// `(a₁⊗a₂)·(b₁⊗b₂) = a₁·b₁ ⊗ a₂·b₂` and
/// `(a₁⊗a₂)∗(b₁⊗b₂) = a₁·b₁ ⊗ a₂∘b₂ + a₁∘b₁ ⊗ a₂·b₂`.
///
/// As a [`Dialgebra`] its `dot` is the first and its `circ` the second.
#[derive(Clone, Copy, Debug)]
pub struct TensorSquare<'a, D>(pub &'a D);

fn legs<K>(k: &TensorKey<K>) -> (&K, &K) {
    match k.legs() {
        [a, b] => (a, b),
        _ => panic!("expected a rank-two tensor"),
    }
}

fn outer<K: Key>(x: &LinComb<K>, y: &LinComb<K>) -> LinComb<TensorKey<K>> {
    crate::linear::tensor(x, y)
}

impl<D: Dialgebra> Dialgebra for TensorSquare<'_, D> {
    type Key = TensorKey<D::Key>;

    fn dot_basis(&self, x: &Self::Key, y: &Self::Key) -> LinComb<Self::Key> {
        let ((a1, a2), (b1, b2)) = (legs(x), legs(y));
        outer(&self.0.dot_basis(a1, b1), &self.0.dot_basis(a2, b2))
    }

    fn circ_basis(&self, x: &Self::Key, y: &Self::Key) -> LinComb<Self::Key> {
        let ((a1, a2), (b1, b2)) = (legs(x), legs(y));
        let mut out = outer(&self.0.dot_basis(a1, b1), &self.0.circ_basis(a2, b2));
        out += &outer(&self.0.circ_basis(a1, b1), &self.0.dot_basis(a2, b2));
        out
    }
}

/// Which product [`tensor_square_product`] takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorSquareKind {
    Dot,
    Star,
}

pub fn tensor_square_product<D: Dialgebra>(
    alg: &D,
    kind: TensorSquareKind,
    x: &LinComb<TensorKey<D::Key>>,
    y: &LinComb<TensorKey<D::Key>>,
) -> LinComb<TensorKey<D::Key>> {
    let sq = TensorSquare(alg);
    match kind {
        TensorSquareKind::Dot => sq.dot(x, y),
        TensorSquareKind::Star => sq.circ(x, y),
    }
}

/// `(x∗y)∗z − x∗(y∗z)` for the tensor-square `∗`.
pub fn tensor_square_star_residual<D: Dialgebra>(
    alg: &D,
    x: &LinComb<TensorKey<D::Key>>,
    y: &LinComb<TensorKey<D::Key>>,
    z: &LinComb<TensorKey<D::Key>>,
) -> LinComb<TensorKey<D::Key>> {
    associativity_residuals(&TensorSquare(alg), x, y, z)[1].clone()
}

/// A finite-dimensional associative algebra with a right semi-homomorphism
/// `R`, that is `R(x·y) = R(x)·y`, and the induced `x∘y = x·R(y)`.
#[derive(Clone, Debug)]
pub struct SemiHomAlgebra {
    dim: usize,
    mul: Vec<Vec<Vector>>,
    unit: Option<Vector>,
    /// `r[j]` is `R(e_j)`.
    r: Vec<Vector>,
}

impl SemiHomAlgebra {
    pub fn new(dim: usize, mul: Vec<Vec<Vector>>, unit: Option<Vector>, r: Vec<Vector>) -> Result<Self> {
        let bad = |got: usize| Error::Dimension { expected: dim, got };
        if mul.len() != dim || r.len() != dim {
            return Err(bad(mul.len().min(r.len())));
        }
        for row in &mul {
            if row.len() != dim || row.iter().any(|v| v.len() != dim) {
                return Err(bad(row.len()));
            }
        }
        if r.iter().any(|v| v.len() != dim) || unit.as_ref().is_some_and(|u| u.len() != dim) {
            return Err(bad(0));
        }
        let alg = SemiHomAlgebra { dim, mul, unit, r };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let e = |i: usize| self.unit_vector(i);
        for i in 0..self.dim {
            if let Some(u) = &self.unit {
                if self.mul(u, &e(i)) != e(i) || self.mul(&e(i), u) != e(i) {
                    return Err(Error::NotCompatible(format!("the unit at e{i}")));
                }
            }
            for j in 0..self.dim {
                let xy = self.mul(&e(i), &e(j));
                if self.apply_r(&xy) != self.mul(&self.apply_r(&e(i)), &e(j)) {
                    return Err(Error::NotSemiHomomorphism(format!("R(e{i}·e{j}) ≠ R(e{i})·e{j}")));
                }
                for k in 0..self.dim {
                    if self.mul(&xy, &e(k)) != self.mul(&e(i), &self.mul(&e(j), &e(k))) {
                        return Err(Error::NotCompatible(format!("associativity at ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// `K[X]/(X^m)` with basis `1, X, …, X^{m−1}` and `R(Xⁿ) = Xⁿ⁺¹`.
    pub fn truncated_polynomial(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let e = |i: usize| {
            let mut v = vec![Rational::ZERO; m];
            if i < m {
                v[i] = Rational::ONE;
            }
            v
        };
        let mul = (0..m).map(|i| (0..m).map(|j| e(i + j)).collect()).collect();
        let r = (0..m).map(|i| e(i + 1)).collect();
        SemiHomAlgebra::new(m, mul, Some(e(0)), r)
    }

    /// `R(x) = a·x` over an associative algebra, so that `x∘y = x·a·y`.
    pub fn left_multiplication(dim: usize, mul: Vec<Vec<Vector>>, unit: Option<Vector>, a: &[Rational]) -> Result<Self> {
        if a.len() != dim {
            return Err(Error::Dimension { expected: dim, got: a.len() });
        }
        let probe = SemiHomAlgebra {
            dim,
            mul,
            unit: None,
            r: Vec::new(),
        };
        let r = (0..dim).map(|j| probe.mul(a, &probe.unit_vector(j))).collect();
        SemiHomAlgebra::new(dim, probe.mul, unit, r)
    }

    /// `k×k` matrices under matrix multiplication.
    pub fn matrix_algebra_tables(k: usize) -> (usize, Vec<Vec<Vector>>, Vector) {
        let dim = k * k;
        let mul = (0..dim)
            .map(|p| {
                (0..dim)
                    .map(|q| {
                        let mut v = vec![Rational::ZERO; dim];
                        if p % k == q / k {
                            v[(p / k) * k + q % k] = Rational::ONE;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut unit = vec![Rational::ZERO; dim];
        for i in 0..k {
            unit[i * k + i] = Rational::ONE;
        }
        (dim, mul, unit)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn unit_vector(&self, i: usize) -> Vector {
        let mut v = vec![Rational::ZERO; self.dim];
        v[i] = Rational::ONE;
        v
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec![Rational::ZERO; self.dim];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in self.mul[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    pub fn apply_r(&self, x: &[Rational]) -> Vector {
        let mut out = vec![Rational::ZERO; self.dim];
        for (j, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (k, c) in self.r[j].iter().enumerate() {
                if !c.is_zero() {
                    out[k] += &(a * c);
                }
            }
        }
        out
    }

    /// `x∘y = x·R(y)`.
    pub fn circ(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::Dimension { expected: self.dim, got: v.len() });
            }
        }
        Ok(self.mul(x, &self.apply_r(y)))
    }
}

impl Dialgebra for SemiHomAlgebra {
    type Key = usize;

    fn dot_basis(&self, x: &usize, y: &usize) -> LinComb<usize> {
        to_comb(&self.mul(&self.unit_vector(*x), &self.unit_vector(*y)))
    }

    fn circ_basis(&self, x: &usize, y: &usize) -> LinComb<usize> {
        to_comb(&self.mul(&self.unit_vector(*x), &self.apply_r(&self.unit_vector(*y))))
    }
}

/// An algebra with a right semi-homomorphism `R` and a coproduct, given on a
/// basis. Its [`Dialgebra`] `circ` must be `x·R(y)`.
pub trait SemiHomBialgebra: Dialgebra + Sized {
    fn r_basis(&self, x: &Self::Key) -> LinComb<Self::Key>;
    fn coproduct_basis(&self, x: &Self::Key) -> LinComb<TensorKey<Self::Key>>;

    fn r(&self, x: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        x.map_linear(|k| self.r_basis(k))
    }

    fn coproduct(&self, x: &LinComb<Self::Key>) -> LinComb<TensorKey<Self::Key>> {
        x.map_linear(|k| self.coproduct_basis(k))
    }

    /// `x∘y − x·R(y)`; zero by definition of `circ`.
    fn circ_consistency_residual(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        &self.circ(x, y) - &self.dot(x, &self.r(y))
    }

    /// `R(x·y) − R(x)·y`.
    fn semihom_residual(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<Self::Key> {
        &self.r(&self.dot(x, y)) - &self.dot(&self.r(x), y)
    }

    /// `(Δ⊗id)Δ(x) − (id⊗Δ)Δ(x)`.
    fn coassociativity_residual(&self, x: &LinComb<Self::Key>) -> LinComb<TensorKey<Self::Key>> {
        let d = self.coproduct(x);
        let split = |k: &Self::Key| self.coproduct_basis(k);
        &crate::linear::expand_leg(&d, 0, split) - &crate::linear::expand_leg(&d, 1, split)
    }

    /// `Δ(R(x)) − (R⊗id + id⊗R)(Δ(x))`.
    fn coderivation_residual(&self, x: &LinComb<Self::Key>) -> LinComb<TensorKey<Self::Key>> {
        let d = self.coproduct(x);
        let mut r = self.coproduct(&self.r(x));
        r -= &crate::linear::map_leg(&d, 0, |k| self.r_basis(k));
        r -= &crate::linear::map_leg(&d, 1, |k| self.r_basis(k));
        r
    }

    /// `Δ(x·y) − Δ(x)·Δ(y)`.
    fn multiplicativity_residual(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<TensorKey<Self::Key>> {
        let sq = TensorSquare(self);
        &self.coproduct(&self.dot(x, y)) - &sq.dot(&self.coproduct(x), &self.coproduct(y))
    }

    /// `Δ(x∘y) − Δ(x)∗Δ(y)`.
    fn bimatching_residual(&self, x: &LinComb<Self::Key>, y: &LinComb<Self::Key>) -> LinComb<TensorKey<Self::Key>> {
        let sq = TensorSquare(self);
        &self.coproduct(&self.circ(x, y)) - &sq.circ(&self.coproduct(x), &self.coproduct(y))
    }
}

/// The polynomial algebra `K[X]` with `Δ(Xⁿ) = Σᵢ C(n,i) Xⁿ⁻ⁱ ⊗ Xⁱ` and
/// `R(Xⁿ) = Xⁿ⁺¹`. Keys are exponents.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolynomialBialgebra;

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = Rational::ONE;
    for i in 0..k {
        acc = acc * Rational::new((n - i) as i64, (i + 1) as i64);
    }
    acc
}

impl Dialgebra for PolynomialBialgebra {
    type Key = u32;

    fn dot_basis(&self, x: &u32, y: &u32) -> LinComb<u32> {
        LinComb::basis(x + y)
    }

    fn circ_basis(&self, x: &u32, y: &u32) -> LinComb<u32> {
        LinComb::basis(x + y + 1)
    }
}

impl SemiHomBialgebra for PolynomialBialgebra {
    fn r_basis(&self, x: &u32) -> LinComb<u32> {
        LinComb::basis(x + 1)
    }

    fn coproduct_basis(&self, x: &u32) -> LinComb<TensorKey<u32>> {
        (0..=*x)
            .map(|i| (TensorKey::pair(x - i, i), binomial(*x, i)))
            .collect()
    }
}

impl WordElem {
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<WordElem> {
        Ok(WordElem::new(alphabet.clone(), crate::expr::parse_terms(alphabet, text)?))
    }

    pub fn m_dot(&self, other: &WordElem) -> Result<WordElem> {
        self.combine(other, |x, y| FreeMatching.dot(x, y))
    }

    pub fn m_circ(&self, other: &WordElem) -> Result<WordElem> {
        self.combine(other, |x, y| FreeMatching.circ(x, y))
    }

    pub fn coproduct(&self) -> crate::element::Element<TensorKey<Word>> {
        self.map(m_coproduct_comb)
    }
}

impl Elem {
    /// Image in the free matching dialgebra.
    pub fn normalize(&self) -> WordElem {
        self.map(normalize_comb)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    fn pal() -> Palette {
        Palette::letters(4).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(&pal(), s).unwrap()
    }

    fn r(x: &Word) -> String {
        x.render(&pal())
    }

    fn norm(s: &str) -> String {
        r(&normalize(&parse_tree(&pal(), s).unwrap()))
    }

    #[test]
    fn parse_and_render() {
        let x = w("a.b|c");
        assert_eq!(x.blocks().len(), 2);
        assert_eq!(x.degree(), 3);
        assert_eq!(r(&x), "a.b|c");
        assert!(Word::parse(&pal(), "a||b").is_err());
        assert_eq!(Word::parse(&pal(), "a|z").unwrap_err().offset, 2);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(norm("(a,b)"), "a|b");
        // (a·b)∘c
        assert_eq!(norm("(c(a,b))"), "a|b.c");
        // ((a·b)∘c)∘d
        assert_eq!(norm("(d(c(a,b)))"), "a|b.c.d");
        assert_eq!(norm("(b(a))"), "a.b");
    }

    #[test]
    fn word_products() {
        assert_eq!(r(&m_dot(&w("a"), &w("b"))), "a|b");
        assert_eq!(r(&m_dot(&w("a.b"), &w("c|d"))), "a.b|c|d");
        assert_eq!(r(&m_circ(&w("a"), &w("b"))), "a.b");
        assert_eq!(r(&m_circ(&w("a|b"), &w("c|d"))), "a|b.c|d");
    }

    #[test]
    fn word_coproduct_examples() {
        assert!(m_coproduct(&w("a")).is_zero());
        let pair = |a: &str, b: &str| LinComb::basis(TensorKey::pair(w(a), w(b)));
        assert_eq!(m_coproduct(&w("a.b")), pair("a", "b"));
        assert_eq!(m_coproduct(&w("a|b")), pair("a", "b"));
        assert_eq!(
            m_coproduct(&w("a.b|c")),
            &pair("a", "b|c") + &pair("a.b", "c")
        );
    }

    #[test]
    fn compositions() {
        let c = |s: &str| Composition::parse(s).unwrap();
        assert_eq!(comp_dot(&c("(1)"), &c("(1)")), c("(1,1)"));
        assert_eq!(comp_circ(&c("(2,1)"), &c("(3)")), c("(2,4)"));
        assert_eq!(c("(2,4)").to_string(), "(2,4)");
        assert!(Composition::parse("(0)").is_err());
    }

    #[test]
    fn word_enumeration_counts() {
        let one = Palette::letters(1).unwrap();
        for n in 1..=8 {
            assert_eq!(enumerate_words(n, &one).unwrap().len(), 1 << (n - 1));
        }
        let two = Palette::letters(2).unwrap();
        assert_eq!(enumerate_words(3, &two).unwrap().len(), 4 * 8);
    }

    #[test]
    fn tensor_square_on_single_tensors() {
        let t = |a: &str, b: &str| LinComb::basis(TensorKey::pair(w(a), w(b)));
        let x = t("a", "b");
        let y = t("c", "d");
        assert_eq!(
            tensor_square_product(&FreeMatching, TensorSquareKind::Dot, &x, &y),
            t("a|c", "b|d")
        );
        assert_eq!(
            tensor_square_product(&FreeMatching, TensorSquareKind::Star, &x, &y),
            &t("a|c", "b.d") + &t("a.c", "b|d")
        );
    }

    #[test]
    fn negative_control_is_not_matching() {
        let a = |s: &[u16]| LinComb::basis(s.iter().map(|&i| crate::alphabet::Symbol(i)).collect::<Vec<_>>());
        let t = |x: &LinComb<Vec<Color>>, y: &LinComb<Vec<Color>>| crate::linear::tensor(x, y);
        let (x, y, z) = (t(&a(&[0]), &a(&[1])), t(&a(&[2]), &a(&[0])), t(&a(&[1]), &a(&[2])));
        assert!(!tensor_square_star_residual(&OppositeConcat, &x, &y, &z).is_zero());
        let xs = (a(&[0]), a(&[1]), a(&[2]));
        assert!(!matching_residuals(&OppositeConcat, &xs.0, &xs.1, &xs.2)[0].is_zero());
    }

    #[test]
    fn truncated_polynomial_semihom() {
        let p = SemiHomAlgebra::truncated_polynomial(6).unwrap();
        let x = p.unit_vector(2);
        let y = p.unit_vector(1);
        // X²∘X = X²·X² = X⁴
        assert_eq!(p.circ(&x, &y).unwrap(), p.unit_vector(4));
        assert!(matches!(p.circ(&x, &[Rational::ONE]), Err(Error::Dimension { .. })));
    }

    #[test]
    fn left_multiplication_semihom() {
        let (dim, mul, unit) = SemiHomAlgebra::matrix_algebra_tables(2);
        let a: Vector = [1, 2, 0, -1].iter().map(|&v| Rational::from(v)).collect();
        let alg = SemiHomAlgebra::left_multiplication(dim, mul, Some(unit), &a).unwrap();
        for i in 0..dim {
            for j in 0..dim {
                let (x, y) = (alg.unit_vector(i), alg.unit_vector(j));
                assert_eq!(alg.circ(&x, &y).unwrap(), alg.mul(&alg.mul(&x, &a), &y));
            }
        }
    }

    #[test]
    fn bad_r_is_rejected() {
        // right multiplication by a non-central matrix
        let (dim, mul, unit) = SemiHomAlgebra::matrix_algebra_tables(2);
        let probe = SemiHomAlgebra::left_multiplication(dim, mul.clone(), Some(unit.clone()), &unit).unwrap();
        let a: Vector = [0, 1, 0, 0].iter().map(|&v| Rational::from(v)).collect();
        let r = (0..dim).map(|j| probe.mul(&probe.unit_vector(j), &a)).collect();
        assert!(matches!(
            SemiHomAlgebra::new(dim, mul, Some(unit), r),
            Err(Error::NotSemiHomomorphism(_))
        ));
    }

    #[test]
    fn polynomial_coderivation() {
        let p = PolynomialBialgebra;
        let x = |n: u32| LinComb::basis(n);
        assert!(p.coderivation_residual(&x(0)).is_zero());
        assert!(p.coderivation_residual(&x(2)).is_zero());
        assert!(p.bimatching_residual(&x(1), &x(1)).is_zero());
        assert_eq!(
            p.coproduct(&x(2)),
            [(TensorKey::pair(2, 0), Rational::ONE), (TensorKey::pair(1, 1), Rational::from(2)), (TensorKey::pair(0, 2), Rational::ONE)]
                .into_iter()
                .collect()
        );
    }
}
