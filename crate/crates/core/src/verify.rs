//! Verification sweeps.
//!
//! Every check enumerates its cases up front, evaluates them in parallel and
//! returns a [`CheckReport`] whose content does not depend on scheduling.
//! Randomized checks draw from a `ChaCha8Rng` seeded explicitly.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::alphabet::{Alphabet, Palette};
use crate::compat::{self, circle, circle_trees, dot, evaluate, FinAlgebra, LieKind, Product, TreeComb, Vector};
use crate::counting::{catalan_table, free_n_dimensions};
use crate::element::Elem;
use crate::infinitesimal::{
    coassociativity_residual, compatibility_coproduct_residual, coproduct, coproduct_closed, coproduct_tree,
    dimension_report, infinitesimal_residual, n_op, primitive_basis, primitive_projector,
    primitive_projector_alternating, NAuxId, NRelationId,
};
use crate::linear::{rank, tensor, Key, LinComb, TensorKey};
use crate::matching::{
    associativity_residuals, compatibility_residual, comp_circ, comp_dot, enumerate_words, m_circ, m_coproduct,
    m_coproduct_comb, m_dot, matching_residuals, normalize, normalize_comb, star_associativity_residual,
    Dialgebra, FreeMatching, OppositeConcat, PolynomialBialgebra, SemiHomAlgebra, SemiHomBialgebra, TensorSquare,
    Word,
};
use crate::path::{Path, PathAlgebra};
use crate::rational::Rational;
use crate::tree::{enumerate_trees, parse_tree, Tree};

/// Whether a report gates success or only records a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportKind {
    Check,
    Diagnostic,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub name: String,
    pub kind: ReportKind,
    pub cases: usize,
    pub failures: usize,
    /// Up to three failing cases.
    pub examples: Vec<String>,
    pub note: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.kind == ReportKind::Diagnostic || self.failures == 0
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.kind, self.failures) {
            (ReportKind::Diagnostic, _) => "INFO",
            (_, 0) => "ok",
            _ => "FAIL",
        };
        write!(
            f,
            "[{status}] {}: {} ({} cases, {} nonzero)",
            self.suite, self.name, self.cases, self.failures
        )?;
        if let Some(n) = &self.note {
            write!(f, "\n       note: {n}")?;
        }
        for e in &self.examples {
            write!(f, "\n       {e}")?;
        }
        Ok(())
    }
}

fn run<T: Sync>(
    suite: &str,
    name: &str,
    cases: &[T],
    f: impl Fn(&T) -> Option<String> + Sync + Send,
) -> CheckReport {
    let failures: Vec<String> = cases.par_iter().filter_map(f).collect();
    CheckReport {
        suite: suite.to_string(),
        name: name.to_string(),
        kind: ReportKind::Check,
        cases: cases.len(),
        failures: failures.len(),
        examples: failures.into_iter().take(3).collect(),
        note: None,
    }
}

fn nonzero<K: Key>(r: &LinComb<K>, describe: impl FnOnce() -> String) -> Option<String> {
    (!r.is_zero()).then(describe)
}

/// Sizes of a sweep. `max_degree` bounds exhaustive enumerations and
/// `random_cases` the number of random draws per randomized check.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_degree: usize,
    pub seed: u64,
    pub random_cases: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_degree: 5,
            seed: 7,
            random_cases: 100,
        }
    }
}

/// Verification suites selectable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Coalgebra,
    NAlgebra,
    Matching,
    Path,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "axioms" => Suite::Axioms,
            "coalgebra" => Suite::Coalgebra,
            "nalgebra" => Suite::NAlgebra,
            "matching" => Suite::Matching,
            "path" => Suite::Path,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckReport> {
    match suite {
        Suite::Axioms => axioms_suite(cfg),
        Suite::Coalgebra => coalgebra_suite(cfg),
        Suite::NAlgebra => nalgebra_suite(cfg),
        Suite::Matching => matching_suite(cfg),
        Suite::Path => path_suite(cfg),
        Suite::All => [Suite::Axioms, Suite::Coalgebra, Suite::NAlgebra, Suite::Matching, Suite::Path]
            .iter()
            .flat_map(|&s| run_suite(s, cfg))
            .collect(),
    }
}

// ---------------------------------------------------------------- sampling

/// All trees of degree `1..=max` over `palette`, grouped by degree.
pub struct TreePool {
    pub palette: Palette,
    by_degree: Vec<Vec<Tree>>,
}

impl TreePool {
    pub fn new(palette: Palette, max: usize) -> TreePool {
        let mut by_degree = vec![Vec::new()];
        for n in 1..=max {
            by_degree.push(enumerate_trees(n, &palette).expect("n ≥ 1"));
        }
        TreePool { palette, by_degree }
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.len() - 1
    }

    pub fn of_degree(&self, n: usize) -> &[Tree] {
        &self.by_degree[n]
    }

    pub fn all(&self) -> impl Iterator<Item = &Tree> {
        self.by_degree.iter().flatten()
    }

    pub fn random_tree(&self, rng: &mut impl Rng, degree: usize) -> Tree {
        self.by_degree[degree].choose(rng).unwrap().clone()
    }

    /// A random homogeneous combination of up to three trees with small
    /// integer coefficients.
    pub fn random_element(&self, rng: &mut impl Rng, degree: usize) -> TreeComb {
        let terms = rng.gen_range(1..=3);
        let mut out = LinComb::zero();
        for _ in 0..terms {
            let c = rng.gen_range(-3..=3);
            out.add_term(self.random_tree(rng, degree), Rational::from(c));
        }
        if out.is_zero() {
            out = LinComb::basis(self.random_tree(rng, degree));
        }
        out
    }
}

/// Random degrees `≥ 1`, one per slot, summing to at most `max_total`.
pub fn random_degrees(rng: &mut impl Rng, slots: usize, max_total: usize) -> Vec<usize> {
    assert!(max_total >= slots);
    let total = rng.gen_range(slots..=max_total);
    let mut cuts: Vec<usize> = (1..total).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(slots - 1).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(slots);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(total)) {
        out.push(c - prev);
        prev = c;
    }
    out
}

/// All ordered triples of basis trees with total degree at most `max_total`.
pub fn basis_triples(pool: &TreePool, max_total: usize) -> Vec<[Tree; 3]> {
    let mut out = Vec::new();
    for a in 1..=max_total.min(pool.max_degree()) {
        for b in 1..=(max_total - a).min(pool.max_degree()) {
            for c in 1..=(max_total - a - b).min(pool.max_degree()) {
                for t in pool.of_degree(a) {
                    for u in pool.of_degree(b) {
                        for w in pool.of_degree(c) {
                            out.push([t.clone(), u.clone(), w.clone()]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// All ordered pairs of basis trees with total degree at most `max_total`.
pub fn basis_pairs(pool: &TreePool, max_total: usize) -> Vec<[Tree; 2]> {
    let mut out = Vec::new();
    for a in 1..max_total.min(pool.max_degree() + 1) {
        for b in 1..=(max_total - a).min(pool.max_degree()) {
            for t in pool.of_degree(a) {
                for u in pool.of_degree(b) {
                    out.push([t.clone(), u.clone()]);
                }
            }
        }
    }
    out
}

fn random_triples(pool: &TreePool, count: usize, max_total: usize, seed: u64) -> Vec<[TreeComb; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = random_degrees(&mut rng, 3, max_total);
            [
                pool.random_element(&mut rng, d[0]),
                pool.random_element(&mut rng, d[1]),
                pool.random_element(&mut rng, d[2]),
            ]
        })
        .collect()
}

fn show(p: &Palette, x: &TreeComb) -> String {
    x.render_inline(|t| t.render(p))
}

fn basis(t: &Tree) -> TreeComb {
    LinComb::basis(t.clone())
}

// ---------------------------------------------------------------- trees

/// `|enumerate_trees(n, d)| = dⁿ·cₙ` for `n ≤ max_n`, with a parse/render
/// round trip of every tree.
pub fn check_tree_counts(max_n: usize, d: usize) -> CheckReport {
    let palette = Palette::letters(d).unwrap();
    let c = catalan_table(max_n).unwrap();
    let ns: Vec<usize> = (1..=max_n).collect();
    run("trees", &format!("tree count d^n c_n (d={d})"), &ns, |&n| {
        let trees = enumerate_trees(n, &palette).unwrap();
        let expected = (d as u128).pow(n as u32) * c[n];
        if trees.len() as u128 != expected {
            return Some(format!("n={n}: {} trees, expected {expected}", trees.len()));
        }
        trees.iter().find_map(|t| {
            let s = t.render(&palette);
            (parse_tree(&palette, &s).as_ref() != Ok(t)).then(|| format!("round trip failed on {s}"))
        })
    })
}

/// Factorization, canonical vertex order and contraction laws on every tree
/// of degree at most `max_n`.
pub fn check_tree_structure(max_n: usize, d: usize) -> CheckReport {
    let palette = Palette::letters(d).unwrap();
    let pool = TreePool::new(palette.clone(), max_n);
    let trees: Vec<Tree> = pool.all().cloned().collect();
    run("trees", "factorization, vertex order and contraction", &trees, |t| {
        let s = t.render(&palette);
        let factors = t.factorize();
        if factors.iter().map(Tree::degree).sum::<usize>() != t.degree()
            || !factors.iter().all(Tree::is_irreducible)
            || factors[1..].iter().fold(factors[0].clone(), |a, f| a.dot(f)) != *t
        {
            return Some(format!("factorization of {s}"));
        }
        let order = t.postorder();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        if sorted != (0..t.degree()).collect::<Vec<_>>() {
            return Some(format!("vertex order of {s} is not a bijection"));
        }
        if t.is_irreducible() && *order.last().unwrap() != 0 {
            return Some(format!("root child of {s} is not last"));
        }
        let n = t.degree();
        if t.contract_mask(&vec![true; n]) != *t {
            return Some(format!("full contraction of {s}"));
        }
        // contract(contract(t, A), B) = contract(t, B) for B ⊆ A
        let limit = if n <= 5 { 1u32 << n } else { 64 };
        for a_bits in 1..limit {
            let a: Vec<bool> = (0..n).map(|i| a_bits & (1 << i) != 0).collect();
            let ta = t.contract_mask(&a);
            let kept: Vec<usize> = (0..n).filter(|&i| a[i]).collect();
            for b_bits in 1u32..(1 << kept.len()) {
                let b_inner: Vec<bool> = (0..kept.len()).map(|i| b_bits & (1 << i) != 0).collect();
                let mut b_outer = vec![false; n];
                for (j, &i) in kept.iter().enumerate() {
                    b_outer[i] = b_inner[j];
                }
                if ta.contract_mask(&b_inner) != t.contract_mask(&b_outer) {
                    return Some(format!("contraction composition on {s}"));
                }
            }
        }
        None
    })
}

// ---------------------------------------------------------------- axioms

/// Circle associativity, the compatibility identity and degree/integrality
/// of `t∘w` on all triples of basis trees with total degree `≤ max_total`.
pub fn check_axioms_exhaustive(d: usize, max_total: usize) -> Vec<CheckReport> {
    let palette = Palette::letters(d).unwrap();
    let pool = TreePool::new(palette.clone(), max_total.saturating_sub(2).max(1));
    let triples = basis_triples(&pool, max_total);
    let label = format!("(d={d}, total degree ≤ {max_total})");
    let pairs = basis_pairs(&pool, max_total);
    vec![
        run("axioms", &format!("circle associativity {label}"), &triples, |[t, u, w]| {
            let (t, u, w) = (basis(t), basis(u), basis(w));
            let r = &circle(&circle(&t, &u), &w) - &circle(&t, &circle(&u, &w));
            nonzero(&r, || format!("{} ; {} ; {}", show(&palette, &t), show(&palette, &u), show(&palette, &w)))
        }),
        run("axioms", &format!("compatibility identity {label}"), &triples, |[t, u, w]| {
            let (t, u, w) = (basis(t), basis(u), basis(w));
            let r = compat::compatibility_residual(&t, &u, &w);
            nonzero(&r, || format!("{} ; {} ; {}", show(&palette, &t), show(&palette, &u), show(&palette, &w)))
        }),
        run("axioms", &format!("circle is homogeneous with integer coefficients {label}"), &pairs, |[t, w]| {
            let r = circle_trees(t, w);
            let bad = r
                .iter()
                .any(|(k, c)| k.degree() != t.degree() + w.degree() || !c.is_integer());
            bad.then(|| format!("{} ∘ {}", t.render(&palette), w.render(&palette)))
        }),
    ]
}

/// The same identities on `count` random colored triples.
pub fn check_axioms_random(d: usize, max_total: usize, count: usize, seed: u64) -> Vec<CheckReport> {
    let palette = Palette::letters(d).unwrap();
    let pool = TreePool::new(palette.clone(), max_total - 2);
    let triples = random_triples(&pool, count, max_total, seed);
    let label = format!("random (d={d}, total degree ≤ {max_total}, seed {seed})");
    vec![
        run("axioms", &format!("circle associativity {label}"), &triples, |[x, y, z]| {
            let r = &circle(&circle(x, y), z) - &circle(x, &circle(y, z));
            nonzero(&r, || format!("{} ; {} ; {}", show(&palette, x), show(&palette, y), show(&palette, z)))
        }),
        run("axioms", &format!("compatibility identity {label}"), &triples, |[x, y, z]| {
            let r = compat::compatibility_residual(x, y, z);
            nonzero(&r, || format!("{} ; {} ; {}", show(&palette, x), show(&palette, y), show(&palette, z)))
        }),
    ]
}

/// Associativity of `α·dot + β·circle` for random rational `(α, β)`.
pub fn check_star_associativity(pairs: usize, per_pair: usize, max_total: usize, seed: u64) -> CheckReport {
    let palette = Palette::letters(2).unwrap();
    let pool = TreePool::new(palette.clone(), max_total - 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for _ in 0..pairs {
        let alpha = Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        let beta = Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=4));
        for t in random_triples(&pool, per_pair, max_total, rng.gen()) {
            cases.push((alpha.clone(), beta.clone(), t));
        }
    }
    run("axioms", &format!("star(α,β) associativity (total degree ≤ {max_total})"), &cases, |(a, b, [x, y, z])| {
        let p = Product::Star(a.clone(), b.clone());
        let r = &p.apply(&p.apply(x, y), z) - &p.apply(x, &p.apply(y, z));
        nonzero(&r, || format!("α={a}, β={b}: {}", show(&palette, x)))
    })
}

/// Antisymmetry and the Jacobi identity for the three brackets.
pub fn check_lie(count: usize, seed: u64) -> CheckReport {
    let palette = Palette::letters(2).unwrap();
    let pool = TreePool::new(palette.clone(), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cases: Vec<(LieKind, [TreeComb; 3])> = (0..count)
        .flat_map(|_| {
            let t: [TreeComb; 3] = std::array::from_fn(|_| {
                let d = rng.gen_range(1..=2);
                pool.random_element(&mut rng, d)
            });
            [LieKind::Dot, LieKind::Circle, LieKind::Sum].map(|k| (k, t.clone()))
        })
        .collect();
    run("axioms", "Lie brackets: antisymmetry and Jacobi", &cases, |(k, [x, y, z])| {
        let b = |p: &TreeComb, q: &TreeComb| compat::lie_bracket(*k, p, q);
        let anti = &b(x, y) + &b(y, x);
        let mut jac = b(x, &b(y, z));
        jac += &b(y, &b(z, x));
        jac += &b(z, &b(x, y));
        (!anti.is_zero() || !jac.is_zero()).then(|| format!("{k:?}: {}", show(&palette, x)))
    })
}

fn random_vector(rng: &mut impl Rng, dim: usize) -> Vector {
    (0..dim).map(|_| Rational::from(rng.gen_range(-2..=2))).collect()
}

/// `evaluate` is a homomorphism for both products into several targets.
pub fn check_evaluation(count: usize, seed: u64) -> CheckReport {
    let palette = Palette::letters(2).unwrap();
    let pool = TreePool::new(palette.clone(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = |rng: &mut ChaCha8Rng| -> Vec<Vector> { (0..2).map(|_| random_vector(rng, 2)).collect() };
    let (a, b) = (m(&mut rng), m(&mut rng));
    let targets = vec![
        FinAlgebra::truncated_free(1, 4).unwrap().0,
        FinAlgebra::truncated_free(2, 2).unwrap().0,
        FinAlgebra::matrix_sandwich(2, &a, &b).unwrap(),
    ];
    let mut cases = Vec::new();
    for (ti, target) in targets.iter().enumerate() {
        for _ in 0..count {
            let assign: Vec<Vector> = (0..2).map(|_| random_vector(&mut rng, target.dim())).collect();
            let (dx, dy) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            let x = pool.random_element(&mut rng, dx);
            let y = pool.random_element(&mut rng, dy);
            cases.push((ti, assign, x, y));
        }
    }
    run("axioms", "evaluation is a homomorphism for both products", &cases, |(ti, assign, x, y)| {
        let target = &targets[*ti];
        let ev = |z: &TreeComb| evaluate(target, assign, &Elem::new(palette.clone(), z.clone())).unwrap();
        let (fx, fy) = (ev(x), ev(y));
        let ok = ev(&dot(x, y)) == target.dot(&fx, &fy) && ev(&circle(x, y)) == target.circ(&fx, &fy);
        (!ok).then(|| format!("target {ti}: {} ; {}", show(&palette, x), show(&palette, y)))
    })
}

pub fn axioms_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let n = cfg.max_degree;
    let mut out = vec![check_tree_counts(n.max(1), 1), check_tree_counts(n.clamp(1, 6), 2)];
    out.push(check_tree_structure(n.min(6), 2));
    out.extend(check_axioms_exhaustive(1, n.max(3)));
    out.extend(check_axioms_random(2, n.max(3), cfg.random_cases, cfg.seed));
    out.push(check_star_associativity(5, cfg.random_cases / 5 + 1, n.max(3), cfg.seed));
    out.push(check_lie(cfg.random_cases, cfg.seed));
    out.push(check_evaluation(cfg.random_cases / 2 + 1, cfg.seed));
    out
}

// ---------------------------------------------------------------- coalgebra

/// Coassociativity and closed-form agreement on every tree of degree
/// `≤ max_n` over `d` colors.
pub fn check_coalgebra_trees(d: usize, max_n: usize) -> Vec<CheckReport> {
    let palette = Palette::letters(d).unwrap();
    let pool = TreePool::new(palette.clone(), max_n);
    let trees: Vec<Tree> = pool.all().cloned().collect();
    let label = format!("(d={d}, degree ≤ {max_n})");
    vec![
        run("coalgebra", &format!("coassociativity {label}"), &trees, |t| {
            nonzero(&coassociativity_residual(&basis(t)), || t.render(&palette))
        }),
        run("coalgebra", &format!("closed formula equals recursion {label}"), &trees, |t| {
            nonzero(&(&coproduct_closed(t) - &coproduct_tree(t)), || t.render(&palette))
        }),
        run("coalgebra", &format!("coproduct legs have smaller positive degree {label}"), &trees, |t| {
            coproduct_tree(t)
                .keys()
                .any(|k| {
                    let l = k.legs();
                    l[0].degree() + l[1].degree() != t.degree()
                })
                .then(|| t.render(&palette))
        }),
    ]
}

/// Both infinitesimal laws on all basis pairs with total degree `≤ max_total`.
pub fn check_infinitesimal_exhaustive(d: usize, max_total: usize) -> Vec<CheckReport> {
    let palette = Palette::letters(d).unwrap();
    let pool = TreePool::new(palette.clone(), max_total - 1);
    let pairs = basis_pairs(&pool, max_total);
    let label = format!("(d={d}, total degree ≤ {max_total})");
    let law = |p: Product, name: &str| {
        run("coalgebra", &format!("{name} {label}"), &pairs, |[t, u]| {
            nonzero(&infinitesimal_residual(&p, &basis(t), &basis(u)), || {
                format!("{} ; {}", t.render(&palette), u.render(&palette))
            })
        })
    };
    vec![
        law(Product::Dot, "infinitesimal law for dot"),
        law(Product::Circle, "infinitesimal law for circle"),
        law(Product::Star(Rational::from(-1), Rational::ONE), "Joni-Rota law for circle - dot"),
    ]
}

/// The infinitesimal laws and the coproduct of the compatibility defect on
/// random colored inputs.
pub fn check_infinitesimal_random(count: usize, max_total: usize, seed: u64) -> Vec<CheckReport> {
    let palette = Palette::letters(2).unwrap();
    let pool = TreePool::new(palette.clone(), max_total - 2);
    let triples = random_triples(&pool, count, max_total, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let weights: Vec<(Rational, Rational)> = (0..count)
        .map(|_| (Rational::from(rng.gen_range(-3..=3)), Rational::from(rng.gen_range(-3..=3))))
        .collect();
    let cases: Vec<_> = triples.iter().zip(&weights).collect();
    vec![
        run("coalgebra", "infinitesimal law for star(α,β), random", &cases, |([x, y, _], (a, b))| {
            let p = Product::Star(a.clone(), b.clone());
            nonzero(&infinitesimal_residual(&p, x, y), || format!("α={a}, β={b}: {}", show(&palette, x)))
        }),
        run("coalgebra", "coproduct kills the compatibility defect, random", &cases, |([x, y, z], _)| {
            nonzero(&compatibility_coproduct_residual(x, y, z), || show(&palette, x))
        }),
        run("coalgebra", "coassociativity, random", &cases, |([x, _, _], _)| {
            nonzero(&coassociativity_residual(x), || show(&palette, x))
        }),
    ]
}

/// `e` is idempotent, lands in primitives, kills products and agrees with the
/// alternating sum, on every tree of degree `≤ max_n`.
pub fn check_projector(d: usize, max_n: usize) -> CheckReport {
    let palette = Palette::letters(d).unwrap();
    let pool = TreePool::new(palette.clone(), max_n);
    let trees: Vec<Tree> = pool.all().cloned().collect();
    run("coalgebra", &format!("primitive projector (d={d}, degree ≤ {max_n})"), &trees, |t| {
        let x = basis(t);
        let e = primitive_projector(&x);
        let s = t.render(&palette);
        if !coproduct(&e).is_zero() {
            return Some(format!("e({s}) is not primitive"));
        }
        if primitive_projector(&e) != e {
            return Some(format!("e is not idempotent at {s}"));
        }
        if !t.is_irreducible() && !e.is_zero() {
            return Some(format!("e({s}) ≠ 0 on a product"));
        }
        if primitive_projector_alternating(&x) != e {
            return Some(format!("alternating sum differs at {s}"));
        }
        None
    })
}

pub fn coalgebra_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let n = cfg.max_degree.max(2);
    let mut out = check_coalgebra_trees(1, n + 1);
    out.extend(check_coalgebra_trees(2, n));
    out.extend(check_infinitesimal_exhaustive(1, n + 1));
    out.extend(check_infinitesimal_random(cfg.random_cases, n.max(3), cfg.seed));
    out.push(check_projector(1, n + 1));
    out.push(check_projector(2, n.min(5)));
    out
}

// ---------------------------------------------------------------- N-algebra

/// `rank(primitive_basis(n, d)) = dⁿ·c_{n−1}`, each element primitive.
pub fn check_primitive_ranks(max_n: usize, colors: &[usize]) -> CheckReport {
    let c = catalan_table(max_n).unwrap();
    let cases: Vec<(usize, usize)> = colors.iter().flat_map(|&d| (1..=max_n).map(move |n| (d, n))).collect();
    run("nalgebra", &format!("primitive basis rank d^n c_(n-1) (n ≤ {max_n})"), &cases, |&(d, n)| {
        let palette = Palette::letters(d).unwrap();
        let b = primitive_basis(n, &palette).unwrap();
        if let Some(bad) = b.iter().find(|x| !coproduct(x).is_zero()) {
            return Some(format!("non-primitive basis element {}", show(&palette, bad)));
        }
        let expected = (d as u128).pow(n as u32) * c[n - 1];
        let r = rank(&b) as u128;
        (r != expected).then(|| format!("d={d}, n={n}: rank {r}, expected {expected}"))
    })
}

/// Random primitive elements: combinations of `e(t)` for irreducible `t`.
pub struct PrimitivePool {
    palette: Palette,
    by_degree: Vec<Vec<TreeComb>>,
}

impl PrimitivePool {
    pub fn new(palette: Palette, max: usize) -> Self {
        let mut by_degree = vec![Vec::new()];
        for n in 1..=max {
            by_degree.push(primitive_basis(n, &palette).unwrap());
        }
        PrimitivePool { palette, by_degree }
    }

    pub fn random(&self, rng: &mut impl Rng, degree: usize) -> TreeComb {
        let pool = &self.by_degree[degree];
        let mut out = LinComb::zero();
        for _ in 0..rng.gen_range(1..=2) {
            let c = Rational::from(rng.gen_range(1..=3) * if rng.gen() { 1 } else { -1 });
            out.add_scaled(pool.choose(rng).unwrap(), &c);
        }
        if out.is_zero() {
            out = pool[0].clone();
        }
        out
    }

    /// `k` random primitives of degree ≤ 2 with total degree ≤ `max_total`.
    pub fn random_tuple(&self, rng: &mut impl Rng, k: usize, max_total: usize) -> Vec<TreeComb> {
        let mut budget = max_total.saturating_sub(k);
        (0..k)
            .map(|_| {
                let extra = if budget > 0 && self.by_degree.len() > 2 && rng.gen_bool(0.5) { 1 } else { 0 };
                budget -= extra;
                self.random(rng, 1 + extra)
            })
            .collect()
    }
}

fn generator_tuples(d: usize, k: usize, limit: usize) -> Vec<Vec<TreeComb>> {
    // all tuples of generators over d colors, capped at `limit` (lexicographic)
    let gens: Vec<TreeComb> = Palette::letters(d)
        .unwrap()
        .symbols()
        .map(|c| LinComb::basis(Tree::generator(c)))
        .collect();
    let mut out = Vec::new();
    let mut digits = vec![0usize; k];
    loop {
        out.push(digits.iter().map(|&i| gens[i].clone()).collect());
        if out.len() >= limit {
            return out;
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < d {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub enum Identity {
    Relation(NRelationId),
    Aux(NAuxId),
}

impl Identity {
    fn arity(self) -> usize {
        match self {
            Identity::Relation(r) => r.arity(),
            Identity::Aux(a) => a.arity(),
        }
    }

    fn residual(self, xs: &[TreeComb]) -> TreeComb {
        match self {
            Identity::Relation(r) => r.residual(xs),
            Identity::Aux(a) => a.residual(xs),
        }
        .expect("arity checked")
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Identity::Relation(r) => r.fmt(f),
            Identity::Aux(a) => a.fmt(f),
        }
    }
}

/// Residual zero on generator tuples (all distinct-color assignments over
/// `arity` colors, plus one-color and two-color tuples) and on `random`
/// tuples of primitives.
pub fn check_identity(id: Identity, random: usize, seed: u64) -> CheckReport {
    let k = id.arity();
    let mut cases = generator_tuples(1, k, 1);
    cases.extend(generator_tuples(2, k, 1 << k));
    let distinct: Vec<TreeComb> = Palette::letters(k)
        .unwrap()
        .symbols()
        .map(|c| LinComb::basis(Tree::generator(c)))
        .collect();
    cases.push(distinct);
    let prims = PrimitivePool::new(Palette::letters(2).unwrap(), 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        cases.push(prims.random_tuple(&mut rng, k, k + 2));
    }
    let palette = Palette::letters(k.max(2)).unwrap();
    run("nalgebra", &format!("{id} (generators and {random} random primitive tuples)"), &cases, |xs| {
        nonzero(&id.residual(xs), || {
            xs.iter().map(|x| show(&palette, x)).collect::<Vec<_>>().join(" ; ")
        })
    })
}

/// `Δ(N_n(p₁,…,pₙ)) = 0` for random primitives.
pub fn check_primitives_closed(max_n: usize, per_n: usize, seed: u64) -> CheckReport {
    let prims = PrimitivePool::new(Palette::letters(2).unwrap(), 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for n in 2..=max_n {
        for _ in 0..per_n {
            let mut xs = prims.random_tuple(&mut rng, n, n + 2);
            if n == 2 && rng.gen_bool(0.5) {
                xs[0] = prims.random(&mut rng, 3);
            }
            cases.push(xs);
        }
    }
    let palette = prims.palette.clone();
    run("nalgebra", &format!("N_n of primitives is primitive (n ≤ {max_n})"), &cases, |xs| {
        nonzero(&coproduct(&n_op(xs).unwrap()), || {
            xs.iter().map(|x| show(&palette, x)).collect::<Vec<_>>().join(" ; ")
        })
    })
}

/// The dimension table identities, and the free N-algebra recursion against
/// the shifted Catalan numbers.
pub fn check_dimensions(max_n: usize, max_d: usize, recursion_n: usize) -> CheckReport {
    let c = catalan_table(recursion_n).unwrap();
    let free = free_n_dimensions(recursion_n).unwrap();
    let mut cases: Vec<(usize, usize)> = (1..=max_d).map(|d| (0, d)).collect();
    cases.push((1, 0));
    run(
        "nalgebra",
        &format!("dimension table (n ≤ {max_n}, d ≤ {max_d}; recursion to {recursion_n})"),
        &cases,
        |&(kind, d)| {
            if kind == 1 {
                return (1..=recursion_n)
                    .find(|&n| free[n] != c[n - 1])
                    .map(|n| format!("|N_{n}| = {} ≠ c_{} = {}", free[n], n - 1, c[n - 1]));
            }
            dimension_report(max_n, d)
                .unwrap()
                .into_iter()
                .find(|r| !r.consistent)
                .map(|r| format!("d={d}: {r:?}"))
        },
    )
}

pub fn nalgebra_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let n = cfg.max_degree.max(3);
    let mut out = vec![check_primitive_ranks(n.min(6), &[1, 2])];
    let mut ids: Vec<Identity> = [NRelationId::Low1, NRelationId::Low2, NRelationId::Low3, NRelationId::Low4]
        .map(Identity::Relation)
        .to_vec();
    ids.extend((2..=n.min(6)).map(|k| Identity::Relation(NRelationId::R1(k))));
    ids.extend((3..=n.min(5)).map(|k| Identity::Relation(NRelationId::R2(k))));
    for a in 3..=n.min(5) {
        for b in 3..=n.min(5) {
            ids.push(Identity::Relation(NRelationId::R3(a, b)));
        }
    }
    ids.extend([NAuxId::LemmaI, NAuxId::LemmaII].map(Identity::Aux));
    ids.extend((3..=n.min(6)).flat_map(|k| [Identity::Aux(NAuxId::IndI(k)), Identity::Aux(NAuxId::IndII(k))]));
    let random = cfg.random_cases;
    for (i, id) in ids.into_iter().enumerate() {
        out.push(check_identity(id, random, cfg.seed.wrapping_add(i as u64)));
    }
    out.push(check_primitives_closed(n.min(5), cfg.random_cases / 4 + 1, cfg.seed));
    out.push(check_dimensions(10, 3, 12));
    out
}

// ---------------------------------------------------------------- matching

fn word_triples(max_total: usize) -> Vec<[Word; 3]> {
    let palette = Palette::letters(1).unwrap();
    let words: Vec<Vec<Word>> = (0..=max_total)
        .map(|n| if n == 0 { Vec::new() } else { enumerate_words(n, &palette).unwrap() })
        .collect();
    let mut out = Vec::new();
    for a in 1..=max_total {
        for b in 1..=max_total.saturating_sub(a) {
            for c in 1..=max_total.saturating_sub(a + b) {
                for x in &words[a] {
                    for y in &words[b] {
                        for z in &words[c] {
                            out.push([x.clone(), y.clone(), z.clone()]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// The matching laws hold on the nose, `∗ = ∘ − ·` is associative and the
/// word coproduct satisfies the Joni–Rota law for `∗`, on all one-color word
/// triples (pairs) of total degree `≤ max_total`.
pub fn check_word_laws(max_total: usize) -> Vec<CheckReport> {
    let triples = word_triples(max_total);
    let label = format!("(one color, total degree ≤ {max_total})");
    let pairs: Vec<[Word; 2]> = word_triples(max_total + 1)
        .into_iter()
        .filter(|[_, _, z]| z.degree() == 1)
        .map(|[x, y, _]| [x, y])
        .collect();
    let p = Palette::letters(1).unwrap();
    vec![
        run("matching", &format!("matching laws hold exactly {label}"), &triples, |[x, y, z]| {
            let ok = m_circ(&m_dot(x, y), z) == m_dot(x, &m_circ(y, z))
                && m_dot(&m_circ(x, y), z) == m_circ(x, &m_dot(y, z))
                && m_dot(&m_dot(x, y), z) == m_dot(x, &m_dot(y, z))
                && m_circ(&m_circ(x, y), z) == m_circ(x, &m_circ(y, z));
            (!ok).then(|| format!("{} ; {} ; {}", x.render(&p), y.render(&p), z.render(&p)))
        }),
        run("matching", &format!("circ - dot is associative {label}"), &triples, |[x, y, z]| {
            let b = |w: &Word| LinComb::basis(w.clone());
            nonzero(&star_associativity_residual(&FreeMatching, &b(x), &b(y), &b(z)), || {
                format!("{} ; {} ; {}", x.render(&p), y.render(&p), z.render(&p))
            })
        }),
        run("matching", &format!("Joni-Rota law for circ - dot {label}"), &pairs, |[x, y]| {
            let (bx, by) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
            let star = |a: &LinComb<Word>, b: &LinComb<Word>| FreeMatching.star(a, b);
            let mut r = m_coproduct_comb(&star(&bx, &by));
            for (k, c) in m_coproduct(x).iter() {
                let l = k.legs();
                r -= &tensor(&LinComb::basis(l[0].clone()), &star(&LinComb::basis(l[1].clone()), &by)).scale(c);
            }
            for (k, c) in m_coproduct(y).iter() {
                let l = k.legs();
                r -= &tensor(&star(&bx, &LinComb::basis(l[0].clone())), &LinComb::basis(l[1].clone())).scale(c);
            }
            nonzero(&r, || format!("{} ; {}", x.render(&p), y.render(&p)))
        }),
        run("matching", &format!("word coproduct is coassociative {label}"), &word_triples(max_total + 2)
            .into_iter()
            .filter(|[_, y, z]| y.degree() == 1 && z.degree() == 1)
            .map(|[x, _, _]| x)
            .collect::<Vec<_>>(), |x| {
            let d = m_coproduct(x);
            let r = &crate::linear::expand_leg(&d, 0, m_coproduct) - &crate::linear::expand_leg(&d, 1, m_coproduct);
            nonzero(&r, || x.render(&p))
        }),
    ]
}

/// `normalize` intertwines both products and the two coproducts on all trees
/// (pairs) of degree `≤ max_n`.
pub fn check_normalize_square(d: usize, max_n: usize) -> Vec<CheckReport> {
    let palette = Palette::letters(d).unwrap();
    let pool = TreePool::new(palette.clone(), max_n);
    let pairs = basis_pairs(&pool, max_n);
    let trees: Vec<Tree> = pool.all().cloned().collect();
    let label = format!("(d={d}, degree ≤ {max_n})");
    vec![
        run("matching", &format!("normalize is a homomorphism for both products {label}"), &pairs, |[t, u]| {
            let (nt, nu) = (normalize(t), normalize(u));
            let ok = normalize(&t.dot(u)) == m_dot(&nt, &nu)
                && normalize_comb(&circle_trees(t, u)) == LinComb::basis(m_circ(&nt, &nu));
            (!ok).then(|| format!("{} ; {}", t.render(&palette), u.render(&palette)))
        }),
        run("matching", &format!("normalize intertwines the coproducts {label}"), &trees, |t| {
            let lhs = m_coproduct(&normalize(t));
            let rhs = coproduct_tree(t).map_keys(|k| {
                let l = k.legs();
                TensorKey::pair(normalize(&l[0]), normalize(&l[1]))
            });
            nonzero(&(&lhs - &rhs), || t.render(&palette))
        }),
    ]
}

/// The number of one-color words of degree `n` is `2^(n−1)`, and the degree
/// map to compositions is a homomorphism.
pub fn check_word_counts(max_n: usize) -> Vec<CheckReport> {
    let palette = Palette::letters(1).unwrap();
    let ns: Vec<usize> = (1..=max_n).collect();
    let count = run("matching", &format!("one-color words of degree n number 2^(n-1) (n ≤ {max_n})"), &ns, |&n| {
        let words = enumerate_words(n, &palette).unwrap().len();
        let comps = crate::counting::compositions(n).len();
        (words != 1 << (n - 1) || comps != words).then(|| format!("n={n}: {words} words, {comps} compositions"))
    })
    .with_note("enumeration gives 2^(n-1); a count of 2^n for degree n does not match");
    let triples = word_triples(max_n.min(6));
    let shape = run("matching", "word shape is a homomorphism to compositions", &triples, |[x, y, _]| {
        let ok = m_dot(x, y).shape() == comp_dot(&x.shape(), &y.shape())
            && m_circ(x, y).shape() == comp_circ(&x.shape(), &y.shape());
        (!ok).then(|| format!("{} ; {}", x.render(&palette), y.render(&palette)))
    });
    vec![count, shape]
}

fn dialgebra_laws<D>(name: &str, alg: &D, cases: &[[LinComb<D::Key>; 3]], matching: bool) -> CheckReport
where
    D: Dialgebra + Sync,
    D::Key: Send + Sync,
{
    run("matching", name, cases, |[x, y, z]| {
        let [a, b] = associativity_residuals(alg, x, y, z);
        let c = compatibility_residual(alg, x, y, z);
        let [m1, m2] = if matching {
            matching_residuals(alg, x, y, z)
        } else {
            [LinComb::zero(), LinComb::zero()]
        };
        let bad = [a, b, c, m1, m2].iter().position(|r| !r.is_zero());
        bad.map(|i| format!("law #{i} fails on {x:?} ; {y:?} ; {z:?}"))
    })
}

fn tensor_square_laws<D>(name: &str, alg: &D, cases: &[[LinComb<TensorKey<D::Key>>; 3]]) -> CheckReport
where
    D: Dialgebra + Sync,
    D::Key: Send + Sync,
{
    dialgebra_laws(name, &TensorSquare(alg), cases, true)
}

fn random_comb<K: Key>(rng: &mut impl Rng, keys: &[K], terms: usize) -> LinComb<K> {
    let mut out = LinComb::zero();
    for _ in 0..terms {
        out.add_term(keys.choose(rng).unwrap().clone(), Rational::from(rng.gen_range(-2..=3)));
    }
    out
}

fn random_tensor<K: Key>(rng: &mut impl Rng, keys: &[K], terms: usize) -> LinComb<TensorKey<K>> {
    let mut out = LinComb::zero();
    for _ in 0..terms {
        let a = keys.choose(rng).unwrap().clone();
        let b = keys.choose(rng).unwrap().clone();
        out.add_term(TensorKey::pair(a, b), Rational::from(rng.gen_range(1..=3)));
    }
    out
}

fn triples_of<T>(rng: &mut ChaCha8Rng, count: usize, mut gen: impl FnMut(&mut ChaCha8Rng) -> T) -> Vec<[T; 3]> {
    (0..count).map(|_| [gen(rng), gen(rng), gen(rng)]).collect()
}

/// Matching-dialgebra laws for several constructed algebras, the same laws
/// for `(·, ∗)` on their tensor squares, and the negative control.
pub fn check_constructed_dialgebras(count: usize, seed: u64) -> Vec<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = Palette::letters(2).unwrap();
    let words: Vec<Word> = (1..=3).flat_map(|n| enumerate_words(n, &two).unwrap()).collect();
    let poly = SemiHomAlgebra::truncated_polynomial(6).unwrap();
    let (dim, mul, unit) = SemiHomAlgebra::matrix_algebra_tables(2);
    let a: Vector = random_vector(&mut rng, dim);
    let leftmul = SemiHomAlgebra::left_multiplication(dim, mul, Some(unit), &a).unwrap();
    let m = |rng: &mut ChaCha8Rng| -> Vec<Vector> { (0..2).map(|_| random_vector(rng, 2)).collect() };
    let (ma, mb) = (m(&mut rng), m(&mut rng));
    let sandwich = FinAlgebra::matrix_sandwich(2, &ma, &mb).unwrap();
    let paths = PathAlgebra::new(Alphabet::letters(2).unwrap());
    let path_keys = paths.basis_paths(1);
    let idx = |n: usize| (0..n).collect::<Vec<usize>>();

    let mut out = Vec::new();
    let w3 = triples_of(&mut rng, count, |r| random_comb(r, &words, 2));
    out.push(dialgebra_laws("free matching dialgebra: all laws, random", &FreeMatching, &w3, true));
    let p3 = triples_of(&mut rng, count, |r| random_comb(r, &idx(6), 2));
    out.push(dialgebra_laws("K[X]/(X^6) with R = X·: all laws, random", &poly, &p3, true));
    let l3 = triples_of(&mut rng, count, |r| random_comb(r, &idx(dim), 3));
    out.push(dialgebra_laws("2x2 matrices with R = a·: all laws, random", &leftmul, &l3, true));
    let s3 = triples_of(&mut rng, count, |r| random_comb(r, &idx(4), 3));
    out.push(dialgebra_laws("sandwich products xAy, xBy: all laws, random", &sandwich, &s3, true));
    let q3 = triples_of(&mut rng, count, |r| random_comb(r, &path_keys, 3));
    out.push(dialgebra_laws("path algebra: all laws, random", &paths, &q3, true));

    let tw = triples_of(&mut rng, count, |r| random_tensor(r, &words, 2));
    out.push(tensor_square_laws("tensor square of the free matching dialgebra", &FreeMatching, &tw));
    let tp = triples_of(&mut rng, count, |r| random_tensor(r, &idx(6), 2));
    out.push(tensor_square_laws("tensor square of K[X]/(X^6)", &poly, &tp));
    let tl = triples_of(&mut rng, count, |r| random_tensor(r, &idx(dim), 2));
    out.push(tensor_square_laws("tensor square of 2x2 matrices with R = a·", &leftmul, &tl));
    let ts = triples_of(&mut rng, count, |r| random_tensor(r, &idx(4), 2));
    out.push(tensor_square_laws("tensor square of the sandwich algebra", &sandwich, &ts));
    out.push(check_negative_control(count, seed));
    out
}

/// On `x·y = xy`, `x∘y = yx` the tensor-square `∗` must fail associativity;
/// the check passes when a nonzero residual is found.
pub fn check_negative_control(count: usize, seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbad);
    let letters: Vec<Vec<crate::alphabet::Color>> = Palette::letters(2)
        .unwrap()
        .symbols()
        .flat_map(|a| [vec![a], vec![a, a]])
        .collect();
    let cases = triples_of(&mut rng, count.max(1), |r| random_tensor(r, &letters, 1));
    let sq = TensorSquare(&OppositeConcat);
    let nonzero_found = cases
        .iter()
        .filter(|[x, y, z]| !associativity_residuals(&sq, x, y, z)[1].is_zero())
        .count();
    CheckReport {
        suite: "matching".into(),
        name: "negative control: tensor-square star on a non-compatible pair".into(),
        kind: ReportKind::Check,
        cases: cases.len(),
        failures: usize::from(nonzero_found == 0),
        examples: if nonzero_found == 0 {
            vec!["every associativity residual vanished".into()]
        } else {
            Vec::new()
        },
        note: Some(format!("{nonzero_found} of {} triples have a nonzero residual", cases.len())),
    }
}

/// Coderivation and bimatching identities for `K[X]` with the binomial
/// coproduct, on exponents `0..m`.
pub fn check_polynomial_bialgebra(m: u32) -> Vec<CheckReport> {
    let p = PolynomialBialgebra;
    let singles: Vec<u32> = (0..m).collect();
    let pairs: Vec<(u32, u32)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let b = |n: u32| LinComb::basis(n);
    vec![
        run("matching", &format!("K[X]: R is a coderivation (X^0..X^{})", m - 1), &singles, |&n| {
            nonzero(&p.coderivation_residual(&b(n)), || format!("X^{n}"))
        }),
        run("matching", &format!("K[X]: coproduct is coassociative (X^0..X^{})", m - 1), &singles, |&n| {
            nonzero(&p.coassociativity_residual(&b(n)), || format!("X^{n}"))
        }),
        run("matching", &format!("K[X]: coproduct is multiplicative (X^0..X^{})", m - 1), &pairs, |&(i, j)| {
            nonzero(&p.multiplicativity_residual(&b(i), &b(j)), || format!("X^{i}, X^{j}"))
        }),
        run("matching", &format!("K[X]: Δ(x∘y) = Δ(x)∗Δ(y) (X^0..X^{})", m - 1), &pairs, |&(i, j)| {
            nonzero(&p.bimatching_residual(&b(i), &b(j)), || format!("X^{i}, X^{j}"))
        }),
    ]
}

pub fn matching_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let n = cfg.max_degree.max(3);
    let mut out = check_word_laws(n + 1);
    out.extend(check_normalize_square(1, n + 1));
    out.extend(check_normalize_square(2, n.min(4)));
    out.extend(check_word_counts(12));
    out.extend(check_constructed_dialgebras(cfg.random_cases, cfg.seed));
    out.extend(check_polynomial_bialgebra(8));
    out
}

// ---------------------------------------------------------------- paths

fn path_triples(paths: &[Path], max_total_interior: usize) -> Vec<[Path; 3]> {
    let mut by_len: HashMap<usize, Vec<&Path>> = HashMap::new();
    for p in paths {
        by_len.entry(p.interior().len()).or_default().push(p);
    }
    let mut out = Vec::new();
    for i in 0..=max_total_interior {
        for j in 0..=max_total_interior - i {
            for k in 0..=max_total_interior - i - j {
                let (Some(a), Some(b), Some(c)) = (by_len.get(&i), by_len.get(&j), by_len.get(&k)) else {
                    continue;
                };
                for x in a {
                    for y in b {
                        for z in c {
                            out.push([(*x).clone(), (*y).clone(), (*z).clone()]);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Exhaustive path-algebra laws over `|S| = points`: products on triples
/// with total interior length `≤ triple_interior`, coalgebra laws on paths
/// with interior length `≤ max_interior`.
pub fn check_path_algebra(points: usize, triple_interior: usize, max_interior: usize) -> Vec<CheckReport> {
    let alg = PathAlgebra::new(Alphabet::letters(points).unwrap());
    let s = alg.points().clone();
    let label = format!("(|S|={points}, total interior ≤ {triple_interior})");
    let basis_paths = alg.basis_paths(max_interior);
    let small = alg.basis_paths(triple_interior);
    let triples = path_triples(&small, triple_interior);
    let e = alg.unit();
    let b = |p: &Path| LinComb::basis(p.clone());
    let r = |p: &Path| p.render(&s);
    vec![
        run("path", &format!("product associative and unital {label}"), &triples, |[x, y, z]| {
            let (x, y, z) = (b(x), b(y), b(z));
            let [a, _] = associativity_residuals(&alg, &x, &y, &z);
            let ok = a.is_zero() && alg.dot(&e, &x) == x && alg.dot(&x, &e) == x;
            (!ok).then(|| format!("{x:?} ; {y:?} ; {z:?}"))
        }),
        run("path", &format!("circ associative, matching and compatible {label}"), &triples, |[x, y, z]| {
            let (x, y, z) = (b(x), b(y), b(z));
            let [_, c] = associativity_residuals(&alg, &x, &y, &z);
            let [m1, m2] = matching_residuals(&alg, &x, &y, &z);
            let comp = compatibility_residual(&alg, &x, &y, &z);
            let ok = c.is_zero() && m1.is_zero() && m2.is_zero() && comp.is_zero();
            (!ok).then(|| format!("{x:?} ; {y:?} ; {z:?}"))
        }),
        run("path", &format!("R is a right semi-homomorphism and x∘y = x·R(y) {label}"), &triples, |[x, y, _]| {
            let (x, y) = (b(x), b(y));
            let ok = alg.semihom_residual(&x, &y).is_zero() && alg.circ_consistency_residual(&x, &y).is_zero();
            (!ok).then(|| format!("{x:?} ; {y:?}"))
        }),
        run("path", &format!("coproduct coassociative (|S|={points}, interior ≤ {max_interior})"), &basis_paths, |p| {
            nonzero(&alg.coassociativity_residual(&b(p)), || r(p))
        }),
        run("path", &format!("R is a coderivation (|S|={points}, interior ≤ {max_interior})"), &basis_paths, |p| {
            nonzero(&alg.coderivation_residual(&b(p)), || r(p))
        }),
        run("path", &format!("p[a,b] is grouplike (|S|={points})"), &alg.basis_paths(0), |p| {
            let d = alg.coproduct(&b(p));
            (d != LinComb::basis(TensorKey::pair(p.clone(), p.clone()))).then(|| r(p))
        }),
    ]
}

/// `Δ(x·y) − Δ(x)·Δ(y)` and `Δ(x∘y) − Δ(x)∗Δ(y)` on all basis pairs with
/// total interior `≤ max_interior`, reported with the number of nonzero
/// residuals.
pub fn path_diagnostics(points: usize, max_interior: usize) -> Vec<CheckReport> {
    let alg = PathAlgebra::new(Alphabet::letters(points).unwrap());
    let paths = alg.basis_paths(max_interior);
    let pairs: Vec<[Path; 2]> = path_triples(&paths, max_interior)
        .into_iter()
        .filter(|[_, _, z]| z.interior().is_empty() && z.start() == z.end() && z.start().index() == 0)
        .map(|[x, y, _]| [x, y])
        .collect();
    let b = |p: &Path| LinComb::basis(p.clone());
    let s = alg.points().clone();
    let mut mult = run("path", &format!("diagnostic Δ(x·y) - Δ(x)·Δ(y) (|S|={points}, interior ≤ {max_interior})"), &pairs, |[x, y]| {
        nonzero(&alg.multiplicativity_residual(&b(x), &b(y)), || format!("{} ; {}", x.render(&s), y.render(&s)))
    });
    mult.kind = ReportKind::Diagnostic;
    let mut bim = run("path", &format!("diagnostic Δ(x∘y) - Δ(x)∗Δ(y) (|S|={points}, interior ≤ {max_interior})"), &pairs, |[x, y]| {
        nonzero(&alg.bimatching_residual(&b(x), &b(y)), || format!("{} ; {}", x.render(&s), y.render(&s)))
    });
    bim.kind = ReportKind::Diagnostic;
    let e = alg.unit();
    let ee = alg.bimatching_residual(&e, &e);
    let unit = CheckReport {
        suite: "path".into(),
        name: "diagnostic Δ(e∘e) - Δ(e)∗Δ(e)".into(),
        kind: ReportKind::Diagnostic,
        cases: 1,
        failures: usize::from(!ee.is_zero()),
        examples: Vec::new(),
        note: Some(format!("residual = {}", ee.render_inline(|k| {
            let l = k.legs();
            format!("{} ⊗ {}", l[0].render(&s), l[1].render(&s))
        }))),
    };
    vec![mult, bim, unit]
}

pub fn path_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let interior = cfg.max_degree.clamp(1, 4);
    let mut out = check_path_algebra(3, interior, interior + 1);
    out.extend(path_diagnostics(3, interior.min(3)));
    out
}
