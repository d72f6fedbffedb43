//! Sparse linear combinations with exact rational coefficients.
//!
//! [`LinComb`] is the vector space spanned by any ordered key type: trees,
//! words, paths, or [`TensorKey`]s built from them. Terms are stored in a
//! `BTreeMap`, so iteration is always in ascending key order and zero
//! coefficients are never stored.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// Anything usable as a basis key.
pub trait Key: Ord + Clone + fmt::Debug {}

impl<T: Ord + Clone + fmt::Debug> Key for T {}

/// An elementary tensor `k₁ ⊗ … ⊗ k_r` with `r ≥ 2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorKey<K>(Vec<K>);

impl<K> TensorKey<K> {
    pub fn new(legs: Vec<K>) -> Self {
        assert!(legs.len() >= 2, "a tensor key needs at least two legs");
        TensorKey(legs)
    }

    pub fn pair(a: K, b: K) -> Self {
        TensorKey(vec![a, b])
    }

    pub fn legs(&self) -> &[K] {
        &self.0
    }

    pub fn into_legs(self) -> Vec<K> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

/// A finite formal sum `Σ cᵢ·kᵢ` with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Key> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Key> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Key> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `1·key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::ONE)
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Rational)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or(Rational::ZERO)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, Rational)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += coeff · other`.
    pub fn add_scaled(&mut self, other: &LinComb<K>, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            let c = if coeff.is_one() { c.clone() } else { c * coeff };
            self.add_term(k.clone(), c);
        }
    }

    pub fn scale(&self, coeff: &Rational) -> LinComb<K> {
        if coeff.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * coeff)).collect(),
        }
    }

    /// Extends a basis-level linear map `f` by linearity.
    pub fn map_linear<K2: Key>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Applies a map sending basis keys to basis keys.
    pub fn map_keys<K2: Key>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> LinComb<K> {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Audit walk: true when no stored coefficient is zero.
    pub fn is_normalized(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero())
    }

    /// `Σ coef_x(s)·coef_y(t)·f(s,t)`.
    pub fn bilinear<K2: Key, K3: Key>(
        &self,
        other: &LinComb<K2>,
        mut f: impl FnMut(&K, &K2) -> LinComb<K3>,
    ) -> LinComb<K3> {
        let mut out = LinComb::zero();
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                out.add_scaled(&f(s, t), &(a * b));
            }
        }
        out
    }

    /// Serialized form: one record per term, sorted by key.
    pub fn to_records(&self, mut render: impl FnMut(&K) -> String) -> Vec<Record> {
        self.terms
            .iter()
            .map(|(k, c)| Record {
                coeff: c.to_fraction_string(),
                key: render(k),
            })
            .collect()
    }

    /// One `coeff key` line per term, or `0` for the zero vector.
    pub fn render_lines(&self, mut render: impl FnMut(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(k, c)| format!("{c} {}", render(k)))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Single-line rendering such as `(a,b) - 2 (b(a))`.
    pub fn render_inline(&self, mut render: impl FnMut(&K) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs} "));
            }
            out.push_str(&render(k));
        }
        out
    }
}

/// Kronecker product of two sparse vectors.
pub fn tensor<K: Key>(x: &LinComb<K>, y: &LinComb<K>) -> LinComb<TensorKey<K>> {
    x.bilinear(y, |s, t| LinComb::basis(TensorKey::pair(s.clone(), t.clone())))
}

/// Applies the linear map `f` to leg `leg` of every elementary tensor.
pub fn map_leg<K: Key>(
    x: &LinComb<TensorKey<K>>,
    leg: usize,
    mut f: impl FnMut(&K) -> LinComb<K>,
) -> LinComb<TensorKey<K>> {
    x.map_linear(|key| {
        f(&key.0[leg]).map_keys(|img| {
            let mut legs = key.0.clone();
            legs[leg] = img.clone();
            TensorKey(legs)
        })
    })
}

/// Replaces leg `leg` by the legs of `f(leg)`, raising the tensor rank.
pub fn expand_leg<K: Key>(
    x: &LinComb<TensorKey<K>>,
    leg: usize,
    mut f: impl FnMut(&K) -> LinComb<TensorKey<K>>,
) -> LinComb<TensorKey<K>> {
    x.map_linear(|key| {
        f(&key.0[leg]).map_keys(|inner| {
            let mut legs = Vec::with_capacity(key.0.len() + inner.0.len() - 1);
            legs.extend_from_slice(&key.0[..leg]);
            legs.extend_from_slice(&inner.0);
            legs.extend_from_slice(&key.0[leg + 1..]);
            TensorKey(legs)
        })
    })
}

/// Rank over ℚ of a family of vectors, by exact sparse Gaussian elimination.
pub fn rank<K: Key>(vectors: &[LinComb<K>]) -> usize {
    let mut columns: BTreeMap<&K, usize> = BTreeMap::new();
    for v in vectors {
        for k in v.keys() {
            columns.entry(k).or_insert(0);
        }
    }
    for (i, idx) in columns.values_mut().enumerate() {
        *idx = i;
    }
    let rows: Vec<SparseRow> = vectors
        .iter()
        .map(|v| v.iter().map(|(k, c)| (columns[k], c.clone())).collect())
        .collect();
    sparse_rank(rows)
}

type SparseRow = Vec<(usize, Rational)>;

fn sparse_rank(rows: Vec<SparseRow>) -> usize {
    // pivot column -> row whose leading entry is that column, scaled to 1
    let mut pivots: HashMap<usize, SparseRow> = HashMap::new();
    for mut row in rows {
        while let Some((lead, c)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => row = axpy(&row, p, &-c),
                None => {
                    let inv = c.recip();
                    let row = row.into_iter().map(|(j, v)| (j, v * &inv)).collect();
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `x + a·y` for rows sorted by column.
fn axpy(x: &[(usize, Rational)], y: &[(usize, Rational)], a: &Rational) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        match (x.get(i), y.get(j)) {
            (Some((cx, vx)), Some((cy, vy))) if cx == cy => {
                let v = vx + &(vy * a);
                if !v.is_zero() {
                    out.push((*cx, v));
                }
                i += 1;
                j += 1;
            }
            (Some((cx, vx)), Some((cy, _))) if cx < cy => {
                out.push((*cx, vx.clone()));
                i += 1;
            }
            (Some((cx, vx)), None) => {
                out.push((*cx, vx.clone()));
                i += 1;
            }
            (_, Some((cy, vy))) => {
                out.push((*cy, vy * a));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// One term of the machine-readable serialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub coeff: String,
    pub key: String,
}

impl<K: Key> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(k, c)| (k, c))).finish()
    }
}

impl<K: Key> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        self.add_scaled(rhs, &Rational::ONE);
    }
}

impl<K: Key> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        self.add_scaled(rhs, &-Rational::ONE);
    }
}

impl<K: Key> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Key> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Key> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self += &rhs;
        self
    }
}

impl<K: Key> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Key> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&-Rational::ONE)
    }
}

impl<K: Key> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -&self
    }
}

impl<K: Key> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn v(terms: &[(&'static str, i64)]) -> LinComb<&'static str> {
        terms.iter().map(|&(k, c)| (k, Rational::from(c))).collect()
    }

    #[test]
    fn add_identity_and_cancellation() {
        let x = v(&[("t", 3), ("u", -1)]);
        assert_eq!(&x + &LinComb::zero(), x);
        let t = LinComb::basis("t");
        assert!((&t - &t).is_zero());
        let half = LinComb::term("t", r(1, 2));
        assert_eq!(&half + &half, t);
    }

    #[test]
    fn bilinear_examples() {
        let f = |s: &&str, t: &&str| LinComb::basis(format!("{s}{t}"));
        let zero: LinComb<&str> = LinComb::zero();
        assert!(zero.bilinear(&v(&[("a", 1)]), f).is_zero());
        let st = LinComb::basis("s").bilinear(&LinComb::basis("t"), f);
        assert_eq!(st, LinComb::basis("st".to_string()));
        let lhs = v(&[("s", 1), ("u", 1)]).bilinear(&LinComb::basis("t"), f);
        let rhs = &LinComb::basis("st".to_string()) + &LinComb::basis("ut".to_string());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_examples() {
        let zero: LinComb<&str> = LinComb::zero();
        assert!(tensor(&zero, &LinComb::basis("u")).is_zero());
        let st = tensor(&LinComb::basis("s"), &LinComb::basis("t"));
        assert_eq!(st, LinComb::basis(TensorKey::pair("s", "t")));
        let lhs = tensor(&v(&[("s", 1), ("t", 1)]), &LinComb::basis("u"));
        let rhs: LinComb<_> = [
            (TensorKey::pair("s", "u"), Rational::ONE),
            (TensorKey::pair("t", "u"), Rational::ONE),
        ]
        .into_iter()
        .collect();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_examples() {
        let empty: Vec<LinComb<&str>> = vec![];
        assert_eq!(rank(&empty), 0);
        assert_eq!(rank(&[v(&[("t", 1)]), v(&[("t", 2)])]), 1);
        assert_eq!(rank(&[v(&[("t", 1), ("u", 1)]), v(&[("t", 1), ("u", -1)])]), 2);
        assert_eq!(rank(&[LinComb::<&str>::zero()]), 0);
    }

    #[test]
    fn leg_maps() {
        let x = LinComb::basis(TensorKey::pair(1u32, 2u32));
        let doubled = map_leg(&x, 1, |k| LinComb::term(k * 10, Rational::from(2)));
        assert_eq!(doubled, LinComb::term(TensorKey::pair(1, 20), Rational::from(2)));
        let split = expand_leg(&x, 0, |k| LinComb::basis(TensorKey::pair(*k, *k)));
        assert_eq!(split, LinComb::basis(TensorKey::new(vec![1, 1, 2])));
    }

    #[test]
    fn inline_rendering() {
        let x = v(&[("a", -1), ("b", 2), ("c", 1)]);
        assert_eq!(x.render_inline(|k| k.to_string()), "-a + 2 b + c");
        assert_eq!(LinComb::<&str>::zero().render_inline(|k| k.to_string()), "0");
    }
}
