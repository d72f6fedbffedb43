//! The coproduct of the free compatible algebra, its primitive elements and
//! the N-ary operations among them.

use std::fmt;
use std::sync::OnceLock;

use dashmap::DashMap;
use serde::Serialize;

use crate::alphabet::Palette;
use crate::compat::{circle, dot, Product, TreeComb};
use crate::counting::{catalan_table, checked_pow, compositions, free_n_dimensions};
use crate::element::{Elem, TensorElem};
use crate::error::{Error, Result};
use crate::linear::{expand_leg, tensor, LinComb, TensorKey};
use crate::rational::Rational;
use crate::tree::{enumerate_irreducible_trees, Tree};

pub type TensorComb = LinComb<TensorKey<Tree>>;

fn coproduct_cache() -> &'static DashMap<Tree, TensorComb> {
    static CACHE: OnceLock<DashMap<Tree, TensorComb>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// `Δ(t)` by recursion on the last grafted vertex and on factorization.
pub fn coproduct_tree(t: &Tree) -> TensorComb {
    if t.degree() == 1 {
        return LinComb::zero();
    }
    if let Some(hit) = coproduct_cache().get(t) {
        return hit.clone();
    }
    let out = coproduct_uncached(t);
    coproduct_cache().insert(t.clone(), out.clone());
    out
}

fn coproduct_uncached(t: &Tree) -> TensorComb {
    let pair = |a: Tree, b: Tree| TensorKey::pair(a, b);
    let mut out = LinComb::zero();
    match t.split_irreducible() {
        Some((Some(u), a)) => {
            // Δ(u∘a) = u₍₁₎ ⊗ (u₍₂₎∘a) + u ⊗ a
            for (k, c) in coproduct_tree(&u).iter() {
                let [l, r] = legs2(k);
                out.add_term(pair(l.clone(), r.graft(a)), c.clone());
            }
            out.add_term(pair(u, Tree::generator(a)), Rational::ONE);
        }
        Some((None, _)) => unreachable!("degree one handled by caller"),
        None => {
            // Δ(t'·t'') = t'₍₁₎ ⊗ t'₍₂₎·t'' + t'·t''₍₁₎ ⊗ t''₍₂₎ + t' ⊗ t''
            let offs = t.factor_offsets();
            let head = t.slice(0, offs[1]).unwrap();
            let tail = t.slice(offs[1], t.degree()).unwrap();
            for (k, c) in coproduct_tree(&head).iter() {
                let [l, r] = legs2(k);
                out.add_term(pair(l.clone(), r.dot(&tail)), c.clone());
            }
            for (k, c) in coproduct_tree(&tail).iter() {
                let [l, r] = legs2(k);
                out.add_term(pair(head.dot(l), r.clone()), c.clone());
            }
            out.add_term(pair(head, tail), Rational::ONE);
        }
    }
    out
}

fn legs2(k: &TensorKey<Tree>) -> [&Tree; 2] {
    match k.legs() {
        [l, r] => [l, r],
        _ => panic!("expected a rank-two tensor"),
    }
}

pub fn coproduct(x: &TreeComb) -> TensorComb {
    x.map_linear(coproduct_tree)
}

/// `Δ(t) = Σ_{i=1}^{n-1} t_{v₁..vᵢ} ⊗ t_{vᵢ₊₁..vₙ}` over the canonical vertex
/// order `v₁ < … < vₙ`, each side a contraction.
pub fn coproduct_closed(t: &Tree) -> TensorComb {
    let order = t.postorder();
    let n = order.len();
    let mut left = vec![false; n];
    let mut out = LinComb::zero();
    for &v in &order[..n.saturating_sub(1)] {
        left[v] = true;
        let right: Vec<bool> = left.iter().map(|b| !b).collect();
        out.add_term(
            TensorKey::pair(t.contract_mask(&left), t.contract_mask(&right)),
            Rational::ONE,
        );
    }
    out
}

/// `(Δ⊗id)Δ(x) − (id⊗Δ)Δ(x)`.
pub fn coassociativity_residual(x: &TreeComb) -> TensorComb {
    let d = coproduct(x);
    let split = |t: &Tree| coproduct_tree(t);
    &expand_leg(&d, 0, split) - &expand_leg(&d, 1, split)
}

/// `Δ(x∙y) − x₍₁₎⊗(x₍₂₎∙y) − (x∙y₍₁₎)⊗y₍₂₎ − (α+β)·x⊗y` for `∙ = α·dot + β·circle`.
pub fn infinitesimal_residual(product: &Product, x: &TreeComb, y: &TreeComb) -> TensorComb {
    let (alpha, beta) = product.weights();
    let mut r = coproduct(&product.apply(x, y));
    let dx = coproduct(x);
    for (k, c) in dx.iter() {
        let [l, m] = legs2(k);
        let right = product.apply(&LinComb::basis(m.clone()), y);
        r -= &tensor(&LinComb::basis(l.clone()), &right).scale(c);
    }
    let dy = coproduct(y);
    for (k, c) in dy.iter() {
        let [m, rgt] = legs2(k);
        let left = product.apply(x, &LinComb::basis(m.clone()));
        r -= &tensor(&left, &LinComb::basis(rgt.clone())).scale(c);
    }
    let w = &alpha + &beta;
    if !w.is_zero() {
        r -= &tensor(x, y).scale(&w);
    }
    r
}

/// `Δ` applied to `(x·y)∘z + (x∘y)·z − x·(y∘z) − x∘(y·z)`; zero in any
/// compatible infinitesimal bialgebra.
pub fn compatibility_coproduct_residual(x: &TreeComb, y: &TreeComb, z: &TreeComb) -> TensorComb {
    let mut w = circle(&dot(x, y), z);
    w += &dot(&circle(x, y), z);
    w -= &dot(x, &circle(y, z));
    w -= &circle(x, &dot(y, z));
    coproduct(&w)
}

fn projector_cache() -> &'static DashMap<Tree, TreeComb> {
    static CACHE: OnceLock<DashMap<Tree, TreeComb>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// `e(t) = t − t₍₁₎·e(t₍₂₎)`.
pub fn primitive_projector_tree(t: &Tree) -> TreeComb {
    if t.degree() == 1 {
        return LinComb::basis(t.clone());
    }
    if let Some(hit) = projector_cache().get(t) {
        return hit.clone();
    }
    let mut out = LinComb::basis(t.clone());
    for (k, c) in coproduct_tree(t).iter() {
        let [l, r] = legs2(k);
        for (p, d) in primitive_projector_tree(r).iter() {
            out.add_term(l.dot(p), -(c * d));
        }
    }
    projector_cache().insert(t.clone(), out.clone());
    out
}

pub fn primitive_projector(x: &TreeComb) -> TreeComb {
    x.map_linear(primitive_projector_tree)
}

/// `Σ_{k≥1} (−1)^{k−1} μ^{(k−1)} Δ^{(k−1)}(x)`, with `μ` the iterated dot
/// product.
pub fn primitive_projector_alternating(x: &TreeComb) -> TreeComb {
    let mut level: LinComb<Vec<Tree>> = x.map_keys(|t| vec![t.clone()]);
    let mut out = LinComb::zero();
    let mut sign = Rational::ONE;
    while !level.is_zero() {
        for (legs, c) in level.iter() {
            let prod = legs[1..].iter().fold(legs[0].clone(), |acc, t| acc.dot(t));
            out.add_term(prod, &sign * c);
        }
        level = level.map_linear(|legs| {
            let last = legs.last().unwrap();
            coproduct_tree(last).map_keys(|k| {
                let mut v = legs[..legs.len() - 1].to_vec();
                v.extend(k.legs().iter().cloned());
                v
            })
        });
        sign = -sign;
    }
    out
}

fn dot_fold(xs: &[TreeComb]) -> TreeComb {
    let mut acc = xs[0].clone();
    for x in &xs[1..] {
        acc = dot(&acc, x);
    }
    acc
}

/// `N_n(x₁,…,xₙ) = (x₁⋯xₙ₋₁)∘xₙ − x₁·((x₂⋯xₙ₋₁)∘xₙ)`, with
/// `N₂(x,y) = x∘y − x·y`.
pub fn n_op(xs: &[TreeComb]) -> Result<TreeComb> {
    let n = xs.len();
    if n < 2 {
        return Err(Error::Arity { expected: 2, got: n });
    }
    if n == 2 {
        return Ok(&circle(&xs[0], &xs[1]) - &dot(&xs[0], &xs[1]));
    }
    let last = &xs[n - 1];
    let lhs = circle(&dot_fold(&xs[..n - 1]), last);
    let rhs = dot(&xs[0], &circle(&dot_fold(&xs[1..n - 1]), last));
    Ok(&lhs - &rhs)
}

fn nn(xs: &[&TreeComb]) -> TreeComb {
    let owned: Vec<TreeComb> = xs.iter().map(|x| (*x).clone()).collect();
    n_op(&owned).expect("arity at least two")
}

/// The defining relations of N-algebras, and the low-degree instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NRelationId {
    /// `N_n(x₁,…,N₂(xₙ,xₙ₊₁)) = Σ_{i=1}^{n-1} N_{i+1}(x₁,…,N_{n-i+1}(xᵢ,…,xₙ),xₙ₊₁)`, `n ≥ 2`.
    R1(usize),
    /// `N₂(x₁,N_n(x₂,…,xₙ₊₁)) = N_n(N₂(x₁,x₂),x₃,…) − Σ_{i=3}^{n} N_i(x₁,N_{n+2-i}(x₂,…,x_{n+3-i}),x_{n+4-i},…,xₙ₊₁)`, `n ≥ 3`.
    R2(usize),
    /// `N_n(x,y⃗,N_r(z,t⃗,w))` expanded as a sum of nested `N`s, `n, r ≥ 3`.
    R3(usize, usize),
    /// `N₂` is associative.
    Low1,
    /// `N₃(x,y,N₂(z,t)) = N₂(N₃(x,y,z),t) + N₃(x,N₂(y,z),t)`.
    Low2,
    /// `N₂(x,N₃(y,z,t)) = N₃(N₂(x,y),z,t) − N₃(x,N₂(y,z),t)`.
    Low3,
    /// `N₃(x,y,N₃(z,t,w)) = N₃(N₃(x,y,z),t,w) + N₄(x,N₂(y,z),t,w) − N₄(x,y,N₂(z,t),w)`.
    Low4,
}

impl NRelationId {
    pub fn arity(self) -> usize {
        match self {
            NRelationId::R1(n) | NRelationId::R2(n) => n + 1,
            NRelationId::R3(n, r) => n + r - 1,
            NRelationId::Low1 => 3,
            NRelationId::Low2 | NRelationId::Low3 => 4,
            NRelationId::Low4 => 5,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            NRelationId::R1(n) => n >= 2,
            NRelationId::R2(n) => n >= 3,
            NRelationId::R3(n, r) => n >= 3 && r >= 3,
            _ => true,
        }
    }

    /// `LHS − RHS` evaluated with [`n_op`].
    pub fn residual(self, xs: &[TreeComb]) -> Result<TreeComb> {
        if !self.is_valid() {
            return Err(Error::Arity { expected: 3, got: self.arity() });
        }
        if xs.len() != self.arity() {
            return Err(Error::Arity { expected: self.arity(), got: xs.len() });
        }
        let x: Vec<&TreeComb> = xs.iter().collect();
        Ok(match self {
            NRelationId::R1(n) => {
                let inner = nn(&[x[n - 1], x[n]]);
                let mut lhs_args: Vec<&TreeComb> = x[..n - 1].to_vec();
                lhs_args.push(&inner);
                let mut r = nn(&lhs_args);
                for i in 1..n {
                    // 1-based xᵢ..xₙ is x[i-1..n]
                    let inner = nn(&x[i - 1..n]);
                    let mut args: Vec<&TreeComb> = x[..i - 1].to_vec();
                    args.push(&inner);
                    args.push(x[n]);
                    r -= &nn(&args);
                }
                r
            }
            NRelationId::R2(n) => {
                let lhs = nn(&[x[0], &nn(&x[1..=n])]);
                let head = nn(&[x[0], x[1]]);
                let mut args: Vec<&TreeComb> = vec![&head];
                args.extend_from_slice(&x[2..=n]);
                let mut r = &lhs - &nn(&args);
                for i in 3..=n {
                    // N_{n+2-i}(x₂,…,x_{n+3-i}), then x_{n+4-i},…,x_{n+1}
                    let inner = nn(&x[1..n + 3 - i]);
                    let mut args: Vec<&TreeComb> = vec![x[0], &inner];
                    args.extend_from_slice(&x[n + 3 - i..=n]);
                    r += &nn(&args);
                }
                r
            }
            NRelationId::R3(n, rr) => {
                let xx = x[0];
                let ys = &x[1..n - 1];
                let z = x[n - 1];
                let ts = &x[n..n + rr - 2];
                let w = x[n + rr - 2];
                let mut inner_args = vec![z];
                inner_args.extend_from_slice(ts);
                inner_args.push(w);
                let inner = nn(&inner_args);
                let mut lhs_args = vec![xx];
                lhs_args.extend_from_slice(ys);
                lhs_args.push(&inner);
                let mut r = nn(&lhs_args);

                let mut first_args = vec![xx];
                first_args.extend_from_slice(ys);
                first_args.push(z);
                let first = nn(&first_args);
                let mut args = vec![&first];
                args.extend_from_slice(ts);
                args.push(w);
                r -= &nn(&args);

                for i in 1..=n - 2 {
                    // N_{n-i}(yᵢ,…,y_{n-2},z)
                    let mut inner_args: Vec<&TreeComb> = ys[i - 1..].to_vec();
                    inner_args.push(z);
                    let inner = nn(&inner_args);
                    let mut args = vec![xx];
                    args.extend_from_slice(&ys[..i - 1]);
                    args.push(&inner);
                    args.extend_from_slice(ts);
                    args.push(w);
                    r -= &nn(&args);
                }
                for i in 1..=rr - 2 {
                    // N_{i+1}(z,t₁,…,tᵢ)
                    let mut inner_args = vec![z];
                    inner_args.extend_from_slice(&ts[..i]);
                    let inner = nn(&inner_args);
                    let mut args = vec![xx];
                    args.extend_from_slice(ys);
                    args.push(&inner);
                    args.extend_from_slice(&ts[i..]);
                    args.push(w);
                    r += &nn(&args);
                }
                r
            }
            NRelationId::Low1 => {
                &nn(&[&nn(&[x[0], x[1]]), x[2]]) - &nn(&[x[0], &nn(&[x[1], x[2]])])
            }
            NRelationId::Low2 => {
                let lhs = nn(&[x[0], x[1], &nn(&[x[2], x[3]])]);
                let a = nn(&[&nn(&[x[0], x[1], x[2]]), x[3]]);
                let b = nn(&[x[0], &nn(&[x[1], x[2]]), x[3]]);
                &(&lhs - &a) - &b
            }
            NRelationId::Low3 => {
                let lhs = nn(&[x[0], &nn(&[x[1], x[2], x[3]])]);
                let a = nn(&[&nn(&[x[0], x[1]]), x[2], x[3]]);
                let b = nn(&[x[0], &nn(&[x[1], x[2]]), x[3]]);
                &(&lhs - &a) + &b
            }
            NRelationId::Low4 => {
                let lhs = nn(&[x[0], x[1], &nn(&[x[2], x[3], x[4]])]);
                let a = nn(&[&nn(&[x[0], x[1], x[2]]), x[3], x[4]]);
                let b = nn(&[x[0], &nn(&[x[1], x[2]]), x[3], x[4]]);
                let c = nn(&[x[0], x[1], &nn(&[x[2], x[3]]), x[4]]);
                &(&(&lhs - &a) - &b) + &c
            }
        })
    }
}

impl fmt::Display for NRelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NRelationId::R1(n) => write!(f, "R1({n})"),
            NRelationId::R2(n) => write!(f, "R2({n})"),
            NRelationId::R3(n, r) => write!(f, "R3({n},{r})"),
            NRelationId::Low1 => write!(f, "low1"),
            NRelationId::Low2 => write!(f, "low2"),
            NRelationId::Low3 => write!(f, "low3"),
            NRelationId::Low4 => write!(f, "low4"),
        }
    }
}

/// Identities relating `N₂` of products to the higher `N_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum NAuxId {
    /// `N₂(x·y,z) = N₃(x,y,z) + x·N₂(y,z)`.
    LemmaI,
    /// `N₂(x,y·z) = N₃(x,y,z) + N₂(x,y)·z`.
    LemmaII,
    /// `N₂(x₁⋯xₙ₋₁,xₙ) = Σ_{k=1}^{n-1} x₁⋯x_{k-1}·N_{n-k+1}(x_k,…,xₙ)`.
    IndI(usize),
    /// `N₂(x₁,x₂⋯xₙ) = Σ_{k=2}^{n} N_k(x₁,…,x_k)·x_{k+1}⋯xₙ`.
    IndII(usize),
}

impl NAuxId {
    pub fn arity(self) -> usize {
        match self {
            NAuxId::LemmaI | NAuxId::LemmaII => 3,
            NAuxId::IndI(n) | NAuxId::IndII(n) => n,
        }
    }

    pub fn residual(self, xs: &[TreeComb]) -> Result<TreeComb> {
        let n = self.arity();
        if n < 3 {
            return Err(Error::Arity { expected: 3, got: n });
        }
        if xs.len() != n {
            return Err(Error::Arity { expected: n, got: xs.len() });
        }
        let x: Vec<&TreeComb> = xs.iter().collect();
        Ok(match self {
            NAuxId::LemmaI => {
                let lhs = nn(&[&dot(x[0], x[1]), x[2]]);
                &(&lhs - &nn(&[x[0], x[1], x[2]])) - &dot(x[0], &nn(&[x[1], x[2]]))
            }
            NAuxId::LemmaII => {
                let lhs = nn(&[x[0], &dot(x[1], x[2])]);
                &(&lhs - &nn(&[x[0], x[1], x[2]])) - &dot(&nn(&[x[0], x[1]]), x[2])
            }
            NAuxId::IndI(n) => {
                let mut r = nn(&[&dot_fold(&xs[..n - 1]), x[n - 1]]);
                for k in 1..n {
                    let term = nn(&x[k - 1..]);
                    let term = if k == 1 { term } else { dot(&dot_fold(&xs[..k - 1]), &term) };
                    r -= &term;
                }
                r
            }
            NAuxId::IndII(n) => {
                let mut r = nn(&[x[0], &dot_fold(&xs[1..])]);
                for k in 2..=n {
                    let term = nn(&x[..k]);
                    let term = if k == n { term } else { dot(&term, &dot_fold(&xs[k..])) };
                    r -= &term;
                }
                r
            }
        })
    }
}

impl fmt::Display for NAuxId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NAuxId::LemmaI => write!(f, "lemma_i"),
            NAuxId::LemmaII => write!(f, "lemma_ii"),
            NAuxId::IndI(n) => write!(f, "ind_i({n})"),
            NAuxId::IndII(n) => write!(f, "ind_ii({n})"),
        }
    }
}

/// `{ e(t) : t irreducible of degree n }`.
pub fn primitive_basis(n: usize, palette: &Palette) -> Result<Vec<TreeComb>> {
    Ok(enumerate_irreducible_trees(n, palette)?
        .iter()
        .map(primitive_projector_tree)
        .collect())
}

/// One row of [`dimension_report`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub n: usize,
    /// `dⁿ·cₙ`, the number of trees of degree `n`.
    pub trees: u128,
    /// `dⁿ·|N_n|` from the free N-algebra recursion.
    pub primitives: u128,
    /// `Σ_{m₁+…+m_k=n} Π d^{mᵢ}|N_{mᵢ}|`, the graded dimension of `T^c(N(V))`.
    pub cofree: u128,
    /// `primitives = dⁿ·c_{n−1}` and `cofree = trees`.
    pub consistent: bool,
}

pub fn dimension_report(max_n: usize, d: usize) -> Result<Vec<DimensionRow>> {
    if max_n == 0 {
        return Err(Error::ZeroDegree);
    }
    if d == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let c = catalan_table(max_n)?;
    let nd = free_n_dimensions(max_n)?;
    let d = d as u128;
    let overflow = || Error::Overflow("dimension report");
    let mut weighted = vec![0u128; max_n + 1];
    for m in 1..=max_n {
        weighted[m] = checked_pow(d, m)?.checked_mul(nd[m]).ok_or_else(overflow)?;
    }
    let mut rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let trees = checked_pow(d, n)?.checked_mul(c[n]).ok_or_else(overflow)?;
        let mut cofree = 0u128;
        for comp in compositions(n) {
            let mut prod = 1u128;
            for m in comp {
                prod = prod.checked_mul(weighted[m]).ok_or_else(overflow)?;
            }
            cofree = cofree.checked_add(prod).ok_or_else(overflow)?;
        }
        let expected = checked_pow(d, n)?.checked_mul(c[n - 1]).ok_or_else(overflow)?;
        rows.push(DimensionRow {
            n,
            trees,
            primitives: weighted[n],
            cofree,
            consistent: weighted[n] == expected && cofree == trees,
        });
    }
    Ok(rows)
}

/// Aligned text rendering of [`dimension_report`].
pub fn render_dimension_table(rows: &[DimensionRow]) -> String {
    let header = ["n", "trees", "primitives", "cofree", "ok"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.n.to_string(),
                r.trees.to_string(),
                r.primitives.to_string(),
                r.cofree.to_string(),
                if r.consistent { "yes" } else { "NO" }.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |cols: Vec<&str>, out: &mut String| {
        let parts: Vec<String> = cols
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec(), &mut out);
    for row in &cells {
        line(row.iter().map(String::as_str).collect(), &mut out);
    }
    out
}

impl Elem {
    pub fn coproduct(&self) -> TensorElem {
        self.map(coproduct)
    }

    pub fn primitive_projection(&self) -> Elem {
        self.map(primitive_projector)
    }

    /// `N_n` applied to `xs`, all over the same palette.
    pub fn n_op(xs: &[Elem]) -> Result<Elem> {
        let first = xs.first().ok_or(Error::Arity { expected: 2, got: 0 })?;
        for x in xs {
            x.check_same(first.alphabet())?;
        }
        let terms: Vec<TreeComb> = xs.iter().map(|x| x.terms().clone()).collect();
        Ok(Elem::new(first.alphabet().clone(), n_op(&terms)?))
    }
}

/// Closed-form coproduct of a basis tree over `palette`.
pub fn coproduct_closed_elem(palette: &Palette, t: &Tree) -> TensorElem {
    TensorElem::new(palette.clone(), coproduct_closed(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_terms;
    use crate::tree::{enumerate_trees, parse_tree};

    fn pal() -> Palette {
        Palette::letters(6).unwrap()
    }

    fn e(s: &str) -> TreeComb {
        parse_terms(&pal(), s).unwrap()
    }

    fn t(s: &str) -> Tree {
        parse_tree(&pal(), s).unwrap()
    }

    fn tt(a: &str, b: &str) -> TensorComb {
        tensor(&e(a), &e(b))
    }

    #[test]
    fn coproduct_examples() {
        assert!(coproduct(&e("(a)")).is_zero());
        assert_eq!(coproduct(&e("(a,b)")), tt("(a)", "(b)"));
        assert_eq!(coproduct(&e("(b(a))")), tt("(a)", "(b)"));
    }

    #[test]
    fn closed_form_examples() {
        assert!(coproduct_closed(&t("(a)")).is_zero());
        assert_eq!(
            coproduct_closed(&t("(a,b,c)")),
            &tt("(a)", "(b,c)") + &tt("(a,b)", "(c)")
        );
        assert_eq!(coproduct_closed(&t("(b(a))")), tt("(a)", "(b)"));
    }

    #[test]
    fn closed_form_matches_recursion() {
        let p = Palette::letters(2).unwrap();
        for n in 1..=5 {
            for tree in enumerate_trees(n, &p).unwrap() {
                assert_eq!(coproduct_closed(&tree), coproduct_tree(&tree), "{tree:?}");
            }
        }
    }

    #[test]
    fn projector_examples() {
        assert_eq!(primitive_projector(&e("(a)")), e("(a)"));
        assert!(primitive_projector(&e("(a,b)")).is_zero());
        assert_eq!(primitive_projector(&e("(b(a))")), e("(b(a)) - (a,b)"));
    }

    #[test]
    fn projector_agrees_with_alternating_sum() {
        let p = Palette::letters(1).unwrap();
        for n in 1..=5 {
            for tree in enumerate_trees(n, &p).unwrap() {
                let x = LinComb::basis(tree);
                assert_eq!(primitive_projector(&x), primitive_projector_alternating(&x));
            }
        }
    }

    #[test]
    fn n_op_examples() {
        let (a, b, c, d) = (e("(a)"), e("(b)"), e("(c)"), e("(d)"));
        assert_eq!(n_op(&[a.clone(), b.clone()]).unwrap(), e("(b(a)) - (a,b)"));
        let n3 = &circle(&dot(&a, &b), &c) - &dot(&a, &circle(&b, &c));
        assert_eq!(n_op(&[a.clone(), b.clone(), c.clone()]).unwrap(), n3);
        assert_eq!(
            n_op(&[a.clone(), b.clone(), c.clone(), d.clone()]).unwrap(),
            n_op(&[a.clone(), dot(&b, &c), d]).unwrap()
        );
        assert!(matches!(n_op(&[a]), Err(Error::Arity { .. })));
    }

    #[test]
    fn relations_on_generators() {
        let gens: Vec<TreeComb> = ["(a)", "(b)", "(c)", "(d)", "(e)", "(f)"].iter().map(|s| e(s)).collect();
        for rel in [
            NRelationId::Low1,
            NRelationId::Low2,
            NRelationId::Low3,
            NRelationId::Low4,
            NRelationId::R1(2),
            NRelationId::R1(3),
            NRelationId::R1(4),
            NRelationId::R2(3),
            NRelationId::R2(4),
            NRelationId::R3(3, 3),
            NRelationId::R3(3, 4),
            NRelationId::R3(4, 3),
        ] {
            let xs = &gens[..rel.arity()];
            assert!(rel.residual(xs).unwrap().is_zero(), "{rel}");
        }
        assert!(matches!(NRelationId::Low2.residual(&gens[..3]), Err(Error::Arity { .. })));
    }

    #[test]
    fn auxiliary_identities_on_generators() {
        let gens: Vec<TreeComb> = ["(a)", "(b)", "(c)", "(d)", "(e)"].iter().map(|s| e(s)).collect();
        for id in [NAuxId::LemmaI, NAuxId::LemmaII, NAuxId::IndI(4), NAuxId::IndII(4), NAuxId::IndI(5)] {
            assert!(id.residual(&gens[..id.arity()]).unwrap().is_zero(), "{id}");
        }
    }

    #[test]
    fn low_relations_agree_with_general_forms() {
        let gens: Vec<TreeComb> = ["(a)", "(b(c))", "(d)", "(e,f)", "(a)"].iter().map(|s| e(s)).collect();
        assert_eq!(
            NRelationId::Low2.residual(&gens[..4]).unwrap(),
            NRelationId::R1(3).residual(&gens[..4]).unwrap()
        );
        assert_eq!(
            NRelationId::Low3.residual(&gens[..4]).unwrap(),
            NRelationId::R2(3).residual(&gens[..4]).unwrap()
        );
        assert_eq!(
            NRelationId::Low4.residual(&gens).unwrap(),
            NRelationId::R3(3, 3).residual(&gens).unwrap()
        );
    }

    #[test]
    fn primitive_basis_small() {
        let one = Palette::letters(1).unwrap();
        let b2 = primitive_basis(2, &one).unwrap();
        assert_eq!(b2, vec![parse_terms(&one, "(a(a)) - (a,a)").unwrap()]);
        assert_eq!(crate::linear::rank(&primitive_basis(4, &one).unwrap()), 5);
    }

    #[test]
    fn dimension_rows() {
        let r = dimension_report(4, 1).unwrap();
        assert_eq!((r[0].trees, r[0].primitives, r[0].cofree), (1, 1, 1));
        assert_eq!((r[3].trees, r[3].primitives, r[3].cofree), (14, 5, 14));
        let r = dimension_report(3, 2).unwrap();
        assert_eq!((r[2].trees, r[2].primitives, r[2].cofree), (40, 16, 40));
        assert!(r.iter().all(|row| row.consistent));
    }
}
