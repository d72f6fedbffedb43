//! The free compatible associative algebra on colored planar rooted trees.
//!
//! `x · y` identifies roots. `x ∘ y` is defined by recursion on the right
//! factor:
//!
//! * `t ∘ a = ` the tree obtained by putting a new vertex `a` between the root
//!   of `t` and all of its children;
//! * `t ∘ (u ∘ a) = (t ∘ u) ∘ a` when the right factor is irreducible;
//! * for `w = w¹ · … · wᵐ` with `m > 1`,
//!   `t ∘ w = Σ_{i≥1} ((t·w¹⋯wⁱ⁻¹) ∘ wⁱ)·wⁱ⁺¹⋯wᵐ − Σ_{i≥2} t·((w¹⋯wⁱ⁻¹) ∘ wⁱ)·wⁱ⁺¹⋯wᵐ`.

use std::collections::HashMap;
use std::sync::OnceLock;

use dashmap::DashMap;

use crate::alphabet::{Color, Palette};
use crate::element::Elem;
use crate::error::{Error, Result};
use crate::expr;
use crate::linear::LinComb;
use crate::rational::Rational;
use crate::tree::{enumerate_trees, Tree};

pub type TreeComb = LinComb<Tree>;

/// Root identification on basis trees.
pub fn dot_trees(t: &Tree, w: &Tree) -> Tree {
    t.dot(w)
}

fn circle_cache() -> &'static DashMap<(Tree, Tree), TreeComb> {
    static CACHE: OnceLock<DashMap<(Tree, Tree), TreeComb>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// `t ∘ w` on basis trees. Results are memoized process-wide.
pub fn circle_trees(t: &Tree, w: &Tree) -> TreeComb {
    if w.degree() == 1 {
        return LinComb::basis(t.graft(w.color_at(0)));
    }
    let key = (t.clone(), w.clone());
    if let Some(hit) = circle_cache().get(&key) {
        return hit.clone();
    }
    let out = circle_uncached(t, w);
    circle_cache().insert(key, out.clone());
    out
}

fn circle_uncached(t: &Tree, w: &Tree) -> TreeComb {
    if let Some((u, a)) = w.split_irreducible() {
        let u = u.expect("degree > 1");
        return circle_trees(t, &u).map_keys(|k| k.graft(a));
    }
    let offs = w.factor_offsets();
    let m = offs.len() - 1;
    let end = w.degree();
    let mut out = LinComb::zero();
    for i in 0..m {
        let factor = w.slice(offs[i], offs[i + 1]).unwrap();
        let left = match w.slice(0, offs[i]) {
            Some(prefix) => t.dot(&prefix),
            None => t.clone(),
        };
        let suffix = w.slice(offs[i + 1], end);
        for (k, c) in circle_trees(&left, &factor).iter() {
            let key = match &suffix {
                Some(s) => k.dot(s),
                None => k.clone(),
            };
            out.add_term(key, c.clone());
        }
        if i >= 1 {
            let prefix = w.slice(0, offs[i]).unwrap();
            for (k, c) in circle_trees(&prefix, &factor).iter() {
                let mut key = t.dot(k);
                if let Some(s) = &suffix {
                    key = key.dot(s);
                }
                out.add_term(key, -c);
            }
        }
    }
    out
}

pub fn dot(x: &TreeComb, y: &TreeComb) -> TreeComb {
    x.bilinear(y, |s, t| LinComb::basis(s.dot(t)))
}

pub fn circle(x: &TreeComb, y: &TreeComb) -> TreeComb {
    x.bilinear(y, circle_trees)
}

/// `α·(x·y) + β·(x∘y)`.
pub fn star(x: &TreeComb, y: &TreeComb, alpha: &Rational, beta: &Rational) -> TreeComb {
    let mut out = LinComb::zero();
    if !alpha.is_zero() {
        out.add_scaled(&dot(x, y), alpha);
    }
    if !beta.is_zero() {
        out.add_scaled(&circle(x, y), beta);
    }
    out
}

/// A bilinear product on the free algebra: `Star(α, β)` is `α·dot + β·circle`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Product {
    Dot,
    Circle,
    Star(Rational, Rational),
}

impl Product {
    pub fn weights(&self) -> (Rational, Rational) {
        match self {
            Product::Dot => (Rational::ONE, Rational::ZERO),
            Product::Circle => (Rational::ZERO, Rational::ONE),
            Product::Star(a, b) => (a.clone(), b.clone()),
        }
    }

    pub fn apply(&self, x: &TreeComb, y: &TreeComb) -> TreeComb {
        match self {
            Product::Dot => dot(x, y),
            Product::Circle => circle(x, y),
            Product::Star(a, b) => star(x, y, a, b),
        }
    }
}

/// Which commutator [`lie_bracket`] takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LieKind {
    Dot,
    Circle,
    Sum,
}

pub fn lie_bracket(kind: LieKind, x: &TreeComb, y: &TreeComb) -> TreeComb {
    let p = match kind {
        LieKind::Dot => Product::Dot,
        LieKind::Circle => Product::Circle,
        LieKind::Sum => Product::Star(Rational::ONE, Rational::ONE),
    };
    &p.apply(x, y) - &p.apply(y, x)
}

/// `x∘(y·z) + x·(y∘z) − (x∘y)·z − (x·y)∘z`.
pub fn compatibility_residual(x: &TreeComb, y: &TreeComb, z: &TreeComb) -> TreeComb {
    let mut r = circle(x, &dot(y, z));
    r += &dot(x, &circle(y, z));
    r -= &dot(&circle(x, y), z);
    r -= &circle(&dot(x, y), z);
    r
}

impl Elem {
    /// Parses a linear combination of tree literals over `palette`.
    pub fn parse(palette: &Palette, text: &str) -> Result<Elem> {
        Ok(Elem::new(palette.clone(), expr::parse_terms(palette, text)?))
    }

    /// The generator `(a)` for the color named `name`.
    pub fn generator(palette: &Palette, name: &str) -> Result<Elem> {
        let c = palette
            .lookup(name)
            .ok_or_else(|| Error::UnassignedColor(name.to_string()))?;
        Ok(Elem::basis(palette.clone(), Tree::generator(c)))
    }

    pub fn dot(&self, other: &Elem) -> Result<Elem> {
        self.combine(other, dot)
    }

    pub fn circle(&self, other: &Elem) -> Result<Elem> {
        self.combine(other, circle)
    }

    pub fn star(&self, other: &Elem, alpha: &Rational, beta: &Rational) -> Result<Elem> {
        self.combine(other, |x, y| star(x, y, alpha, beta))
    }

    pub fn product(&self, product: &Product, other: &Elem) -> Result<Elem> {
        self.combine(other, |x, y| product.apply(x, y))
    }

    pub fn lie_bracket(&self, kind: LieKind, other: &Elem) -> Result<Elem> {
        self.combine(other, |x, y| lie_bracket(kind, x, y))
    }
}

/// A finite-dimensional compatible associative algebra given by structure
/// constants: `dot[i][j]` and `circ[i][j]` are the coordinate vectors of
/// `eᵢ·eⱼ` and `eᵢ∘eⱼ`.
#[derive(Clone, Debug)]
pub struct FinAlgebra {
    dim: usize,
    dot: Vec<Vec<Vec<Rational>>>,
    circ: Vec<Vec<Vec<Rational>>>,
}

pub type Vector = Vec<Rational>;

impl FinAlgebra {
    /// Builds the algebra after checking both products are associative and
    /// satisfy the compatibility identity on all basis triples.
    pub fn new(
        dim: usize,
        dot: Vec<Vec<Vector>>,
        circ: Vec<Vec<Vector>>,
    ) -> Result<FinAlgebra> {
        for table in [&dot, &circ] {
            if table.len() != dim {
                return Err(Error::Dimension { expected: dim, got: table.len() });
            }
            for row in table {
                if row.len() != dim {
                    return Err(Error::Dimension { expected: dim, got: row.len() });
                }
                for v in row {
                    if v.len() != dim {
                        return Err(Error::Dimension { expected: dim, got: v.len() });
                    }
                }
            }
        }
        let alg = FinAlgebra { dim, dot, circ };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<()> {
        let basis: Vec<Vector> = (0..self.dim).map(|i| self.unit_vector(i)).collect();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                for (k, z) in basis.iter().enumerate() {
                    let xy = self.dot(x, y);
                    let yz = self.dot(y, z);
                    let xoy = self.circ(x, y);
                    let yoz = self.circ(y, z);
                    if self.dot(&xy, z) != self.dot(x, &yz) {
                        return Err(Error::NotCompatible(format!("dot associativity at ({i},{j},{k})")));
                    }
                    if self.circ(&xoy, z) != self.circ(x, &yoz) {
                        return Err(Error::NotCompatible(format!("circle associativity at ({i},{j},{k})")));
                    }
                    let lhs = add(&self.circ(x, &yz), &self.dot(x, &yoz));
                    let rhs = add(&self.dot(&xoy, z), &self.circ(&xy, z));
                    if lhs != rhs {
                        return Err(Error::NotCompatible(format!("the compatibility identity at ({i},{j},{k})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit_vector(&self, i: usize) -> Vector {
        let mut v = vec![Rational::ZERO; self.dim];
        v[i] = Rational::ONE;
        v
    }

    pub fn zero_vector(&self) -> Vector {
        vec![Rational::ZERO; self.dim]
    }

    fn apply(&self, table: &[Vec<Vector>], x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &(&ab * c);
                    }
                }
            }
        }
        out
    }

    pub fn dot(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.apply(&self.dot, x, y)
    }

    pub fn circ(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.apply(&self.circ, x, y)
    }

    /// `k×k` matrices with `x·y = xAy` and `x∘y = xBy`.
    ///
    /// Any pair of sandwich products is compatible, and in fact a matching
    /// pair.
    pub fn matrix_sandwich(k: usize, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Result<FinAlgebra> {
        for m in [a, b] {
            if m.len() != k || m.iter().any(|r| r.len() != k) {
                return Err(Error::Dimension { expected: k, got: m.len() });
            }
        }
        let dim = k * k;
        // E_ij M E_kl = M_jk E_il
        let table = |m: &[Vec<Rational>]| -> Vec<Vec<Vector>> {
            (0..dim)
                .map(|p| {
                    (0..dim)
                        .map(|q| {
                            let (i, j) = (p / k, p % k);
                            let (kk, l) = (q / k, q % k);
                            let mut v = vec![Rational::ZERO; dim];
                            v[i * k + l] = m[j][kk].clone();
                            v
                        })
                        .collect()
                })
                .collect()
        };
        FinAlgebra::new(dim, table(a), table(b))
    }

    /// The free compatible algebra on `colors` generators modulo all trees of
    /// degree above `max_degree`. Returns the algebra and its tree basis.
    pub fn truncated_free(colors: usize, max_degree: usize) -> Result<(FinAlgebra, Vec<Tree>)> {
        let palette = Palette::letters(colors)?;
        let mut basis = Vec::new();
        for n in 1..=max_degree {
            basis.extend(enumerate_trees(n, &palette)?);
        }
        let index: HashMap<&Tree, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let dim = basis.len();
        let to_vec = |x: &TreeComb| -> Vector {
            let mut v = vec![Rational::ZERO; dim];
            for (t, c) in x.iter() {
                if let Some(&i) = index.get(t) {
                    v[i] = c.clone();
                }
            }
            v
        };
        let mut dt = Vec::with_capacity(dim);
        let mut ct = Vec::with_capacity(dim);
        for s in &basis {
            let mut drow = Vec::with_capacity(dim);
            let mut crow = Vec::with_capacity(dim);
            for t in &basis {
                if s.degree() + t.degree() > max_degree {
                    drow.push(vec![Rational::ZERO; dim]);
                    crow.push(vec![Rational::ZERO; dim]);
                } else {
                    drow.push(to_vec(&LinComb::basis(s.dot(t))));
                    crow.push(to_vec(&circle_trees(s, t)));
                }
            }
            dt.push(drow);
            ct.push(crow);
        }
        let alg = FinAlgebra::new(dim, dt, ct)?;
        Ok((alg, basis))
    }
}

fn add(x: &[Rational], y: &[Rational]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

/// The unique homomorphism for both products extending `assign`, which maps
/// the color with index `i` to `assign[i]`.
pub fn evaluate(target: &FinAlgebra, assign: &[Vector], x: &Elem) -> Result<Vector> {
    let palette = x.alphabet();
    for v in assign {
        if v.len() != target.dim() {
            return Err(Error::Dimension { expected: target.dim(), got: v.len() });
        }
    }
    let mut memo: HashMap<Tree, Vector> = HashMap::new();
    let mut out = target.zero_vector();
    for (t, c) in x.terms().iter() {
        let v = evaluate_tree(target, palette, assign, t, &mut memo)?;
        for (o, vi) in out.iter_mut().zip(&v) {
            *o += &(c * vi);
        }
    }
    Ok(out)
}

fn evaluate_tree(
    target: &FinAlgebra,
    palette: &Palette,
    assign: &[Vector],
    t: &Tree,
    memo: &mut HashMap<Tree, Vector>,
) -> Result<Vector> {
    if let Some(v) = memo.get(t) {
        return Ok(v.clone());
    }
    let image = |a: Color| {
        assign
            .get(a.index())
            .cloned()
            .ok_or_else(|| Error::UnassignedColor(palette.name(a).to_string()))
    };
    let v = match t.split_irreducible() {
        Some((None, a)) => image(a)?,
        Some((Some(u), a)) => {
            let fu = evaluate_tree(target, palette, assign, &u, memo)?;
            target.circ(&fu, &image(a)?)
        }
        None => {
            let mut acc: Option<Vector> = None;
            for f in t.factorize() {
                let fv = evaluate_tree(target, palette, assign, &f, memo)?;
                acc = Some(match acc {
                    None => fv,
                    Some(a) => target.dot(&a, &fv),
                });
            }
            acc.expect("nonempty")
        }
    };
    memo.insert(t.clone(), v.clone());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    fn pal() -> Palette {
        Palette::letters(4).unwrap()
    }

    fn e(s: &str) -> TreeComb {
        expr::parse_terms(&pal(), s).unwrap()
    }

    #[test]
    fn dot_identifies_roots() {
        assert_eq!(dot(&e("(a)"), &e("(b)")), e("(a,b)"));
        assert_eq!(dot(&dot(&e("(a)"), &e("(b)")), &e("(c)")), e("(a,b,c)"));
        assert!(dot(&e("(a)"), &LinComb::zero()).is_zero());
    }

    #[test]
    fn circle_base_case() {
        assert_eq!(circle(&e("(a)"), &e("(b)")), e("(b(a))"));
        assert_eq!(circle(&e("(a,c)"), &e("(b)")), e("(b(a,c))"));
    }

    #[test]
    fn circle_on_a_product_of_generators() {
        for t in ["(c)", "(d(c))", "(c,d)"] {
            let t = e(t);
            let (a1, a2) = (e("(a)"), e("(b)"));
            let expected = &(&dot(&circle(&t, &a1), &a2) - &dot(&t, &circle(&a1, &a2)))
                + &circle(&dot(&t, &a1), &a2);
            assert_eq!(circle(&t, &dot(&a1, &a2)), expected);
        }
    }

    #[test]
    fn circle_irreducible_right_factor() {
        // (a) ∘ (c(b)) = ((a) ∘ (b)) ∘ c
        assert_eq!(circle(&e("(a)"), &e("(c(b))")), e("(c(b(a)))"));
    }

    #[test]
    fn circle_small_associativity() {
        let gens = ["(a)", "(b)", "(a,b)", "(b(a))"];
        for x in gens {
            for y in gens {
                for z in gens {
                    let (x, y, z) = (e(x), e(y), e(z));
                    assert_eq!(circle(&circle(&x, &y), &z), circle(&x, &circle(&y, &z)));
                    assert!(compatibility_residual(&x, &y, &z).is_zero());
                }
            }
        }
    }

    #[test]
    fn brackets() {
        let (a, b) = (e("(a)"), e("(b)"));
        assert!(lie_bracket(LieKind::Sum, &a, &a).is_zero());
        assert_eq!(lie_bracket(LieKind::Dot, &a, &b), e("(a,b) - (b,a)"));
        assert_eq!(lie_bracket(LieKind::Circle, &a, &b), e("(b(a)) - (a(b))"));
    }

    #[test]
    fn star_specializations() {
        let (a, b) = (e("(a)"), e("(b)"));
        assert_eq!(star(&a, &b, &Rational::ONE, &Rational::ZERO), dot(&a, &b));
        assert_eq!(star(&a, &b, &Rational::from(-1), &Rational::ONE), e("(b(a)) - (a,b)"));
    }

    #[test]
    fn elem_rejects_mixed_palettes() {
        let p = Palette::letters(2).unwrap();
        let q = Palette::new(["x", "y"]).unwrap();
        let a = Elem::generator(&p, "a").unwrap();
        let x = Elem::generator(&q, "x").unwrap();
        assert_eq!(a.dot(&x), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn fin_algebra_rejects_non_associative_tables() {
        // e0·e0 = e1, everything else zero except e1·e0 = e0: not associative
        let z = || vec![Rational::ZERO; 2];
        let v = |i: usize| {
            let mut x = z();
            x[i] = Rational::ONE;
            x
        };
        let dot = vec![vec![v(1), z()], vec![v(0), z()]];
        let circ = vec![vec![z(), z()], vec![z(), z()]];
        assert!(matches!(FinAlgebra::new(2, dot, circ), Err(Error::NotCompatible(_))));
    }

    #[test]
    fn evaluation_into_truncated_free_algebra_is_the_identity() {
        let (alg, basis) = FinAlgebra::truncated_free(1, 4).unwrap();
        let p = Palette::letters(1).unwrap();
        let assign = vec![alg.unit_vector(0)];
        for (i, t) in basis.iter().enumerate() {
            let x = Elem::basis(p.clone(), t.clone());
            assert_eq!(evaluate(&alg, &assign, &x).unwrap(), alg.unit_vector(i));
        }
    }

    #[test]
    fn evaluation_errors() {
        let (alg, _) = FinAlgebra::truncated_free(1, 2).unwrap();
        let p = Palette::letters(2).unwrap();
        let x = Elem::basis(p.clone(), parse_tree(&p, "(b)").unwrap());
        let assign = vec![alg.unit_vector(0)];
        assert!(matches!(evaluate(&alg, &assign, &x), Err(Error::UnassignedColor(_))));
        assert!(matches!(
            evaluate(&alg, &[vec![Rational::ONE]], &x),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn sandwich_algebra_is_compatible() {
        let r = |v: i64| Rational::from(v);
        let a = vec![vec![r(1), r(2)], vec![r(0), r(-1)]];
        let b = vec![vec![r(0), r(1)], vec![r(3), r(1)]];
        assert_eq!(FinAlgebra::matrix_sandwich(2, &a, &b).unwrap().dim(), 4);
    }
}
