//! Acceptance criteria AC1–AC10. Prints one line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use cab_core::counting::catalan;
use cab_core::infinitesimal::{NAuxId, NRelationId};
use cab_core::tree::enumerate_trees;
use cab_core::verify::{self, CheckReport, Identity};
use cab_core::{Alphabet, Element, LinComb, Palette, TensorKey};
use cab_core::matching::{Dialgebra, SemiHomBialgebra};
use cab_core::path::{Path, PathAlgebra};

const SEED: u64 = 20_240_611;

struct Outcome {
    ok: bool,
    detail: String,
}

fn reports(rs: Vec<CheckReport>) -> Outcome {
    let bad: Vec<String> = rs.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    let cases: usize = rs.iter().map(|r| r.cases).sum();
    let notes: Vec<String> = rs.iter().filter_map(|r| r.note.clone()).collect();
    let mut detail = format!("{} checks, {cases} cases", rs.len());
    for n in notes {
        detail.push_str(&format!("; note: {n}"));
    }
    if !bad.is_empty() {
        detail.push_str(&format!("; failing: {}", bad.join(" | ")));
    }
    Outcome { ok: bad.is_empty(), detail }
}

/// `c_{n+1} = Σ c_i c_{n−i}` computed here, independently of the library.
fn catalan_oracle(max: usize) -> Vec<u128> {
    let mut c = vec![1u128];
    for n in 0..max {
        c.push((0..=n).map(|i| c[i] * c[n - i]).sum());
    }
    c
}

fn ac1() -> Outcome {
    let c = catalan_oracle(10);
    let listed = [1u128, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    let p = Palette::letters(1).unwrap();
    let counts: Vec<u128> = (1..=10).map(|n| enumerate_trees(n, &p).unwrap().len() as u128).collect();
    let ok = counts == c[1..] && counts == listed;
    Outcome { ok, detail: format!("counts {counts:?}") }
}

fn ac2() -> Outcome {
    let mut rs = verify::check_axioms_exhaustive(1, 6);
    rs.extend(verify::check_axioms_random(2, 7, 500, SEED));
    reports(rs)
}

fn ac3() -> Outcome {
    let mut rs = verify::check_coalgebra_trees(1, 7);
    rs.extend(verify::check_infinitesimal_exhaustive(1, 7));
    reports(rs)
}

fn ac4() -> Outcome {
    // oracle: d^n · binom(2n−2, n−1)/n, cross-checked against the library value
    let binom_oracle = |m: u128| -> u128 {
        let mut b = 1u128;
        for i in 0..m {
            b = b * (2 * m - i) / (i + 1);
        }
        b / (m + 1)
    };
    let agree = (1..=6).all(|n| binom_oracle(n as u128 - 1) == catalan(n - 1).unwrap());
    let mut out = reports(vec![verify::check_primitive_ranks(6, &[1, 2])]);
    out.ok &= agree;
    out
}

fn ac5() -> Outcome {
    let mut ids: Vec<Identity> = (2..=6).map(|n| Identity::Relation(NRelationId::R1(n))).collect();
    ids.extend(
        [NRelationId::Low1, NRelationId::Low2, NRelationId::Low3, NRelationId::Low4].map(Identity::Relation),
    );
    ids.extend([NAuxId::LemmaI, NAuxId::LemmaII].map(Identity::Aux));
    ids.extend((3..=6).flat_map(|n| [Identity::Aux(NAuxId::IndI(n)), Identity::Aux(NAuxId::IndII(n))]));
    reports(
        ids.into_iter()
            .enumerate()
            .map(|(i, id)| verify::check_identity(id, 100, SEED + i as u64))
            .collect(),
    )
}

fn ac6() -> Outcome {
    // Σ over compositions of n of Π d^{m}·c_{m−1}, by the recursion on the last part
    let c = catalan_oracle(10);
    let mut ok = true;
    for d in 1..=3u128 {
        let mut s = vec![1u128; 11];
        for n in 1..=10 {
            s[n] = (1..=n).map(|m| s[n - m] * d.pow(m as u32) * c[m - 1]).sum();
            ok &= s[n] == d.pow(n as u32) * c[n];
        }
    }
    let mut out = reports(vec![verify::check_dimensions(10, 3, 12)]);
    out.ok &= ok;
    out
}

fn ac7() -> Outcome {
    let mut rs = verify::check_word_laws(7);
    rs.extend(verify::check_normalize_square(1, 6));
    rs.extend(verify::check_word_counts(12));
    reports(rs)
}

fn ac8() -> Outcome {
    reports(verify::check_polynomial_bialgebra(8))
}

fn ac9() -> Outcome {
    let mut out = reports(verify::check_path_algebra(3, 4, 4));
    let alg = PathAlgebra::new(Alphabet::parse_list("S = {a,b,x}").unwrap());
    let p = |s: &str| alg.parse(s).unwrap();
    let residual = p("p[a,x]").multiplicativity_residual(&p("p[x,b]")).unwrap();
    let key = |s: &str| Path::parse(alg.points(), s).unwrap();
    let t = |l: &str, r: &str| TensorKey::pair(key(l), key(r));
    let mut expected = LinComb::zero();
    expected.add_term(t("p[a,b]", "p[a,x,b]"), 1.into());
    expected.add_term(t("p[a,x,b]", "p[a,b]"), 1.into());
    expected.add_term(t("p[a,x,b]", "p[a,x,b]"), (-1).into());
    let expected = Element::new(alg.points().clone(), expected);
    let matches = residual == expected;
    // the componentwise-∘ analogue Δ(x∘y) − Σ (x₁∘y₁)⊗(x₂∘y₂), for comparison
    let (x, y) = (p("p[a,x]").into_terms(), p("p[x,b]").into_terms());
    let (dx, dy) = (alg.coproduct(&x), alg.coproduct(&y));
    let mut circ_wise = alg.coproduct(&alg.circ(&x, &y));
    for (kx, cx) in dx.iter() {
        for (ky, cy) in dy.iter() {
            let (lx, ly) = (kx.legs(), ky.legs());
            let b = |k: &Path| LinComb::basis(k.clone());
            let c = cx * cy;
            circ_wise -= &cab_core::linear::tensor(&alg.circ(&b(&lx[0]), &b(&ly[0])), &alg.circ(&b(&lx[1]), &b(&ly[1])))
                .scale(&c);
        }
    }
    let circ_wise = Element::new(alg.points().clone(), circ_wise);
    out.detail.push_str(&format!(
        "; multiplicativity at p[a,x]·p[x,b]: computed [{residual}], expected [{expected}]"
    ));
    out.detail.push_str(&format!("; componentwise-circ analogue: [{circ_wise}]"));
    out.ok &= matches;
    out
}

fn ac10() -> Outcome {
    reports(vec![verify::check_negative_control(200, SEED)])
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 10] = [
        ("AC1 Catalan basis counts", ac1, 10),
        ("AC2 circle associativity and compatibility", ac2, 60),
        ("AC3 coalgebra suite", ac3, 60),
        ("AC4 primitive dimensions", ac4, 120),
        ("AC5 N-algebra relations", ac5, 120),
        ("AC6 cofree dimension identities", ac6, 5),
        ("AC7 matching suite", ac7, 60),
        ("AC8 semi-homomorphism examples", ac8, 5),
        ("AC9 path suite", ac9, 120),
        ("AC10 negative control", ac10, 60),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let mut out = f();
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(limit) {
            out.ok = false;
            out.detail.push_str(&format!("; exceeded {limit}s"));
        }
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!("{status} {name} ({:.2}s): {}", elapsed.as_secs_f64(), out.detail);
        failed += usize::from(!out.ok);
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
