use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cab_core::compat::Product;
use cab_core::element::RenderKey;
use cab_core::expr::{infer_alphabet, parse_terms, KeySyntax};
use cab_core::infinitesimal::{coproduct_closed, dimension_report, primitive_basis, render_dimension_table};
use cab_core::linear::{Key, LinComb, Record};
use cab_core::matching::Word;
use cab_core::path::{Path, PathAlgebra};
use cab_core::tree::enumerate_trees;
use cab_core::verify::{run_suite, Suite, SuiteConfig};
use cab_core::{Alphabet, Elem, Element, Error, Rational, Tree};

/// Exact arithmetic with colored planar rooted trees, words and paths.
#[derive(Parser)]
#[command(name = "cab", version)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ColorArg {
    /// Color count (`3` means a,b,c) or a list such as `a,b,x`; inferred
    /// from the inputs when omitted.
    #[arg(long)]
    colors: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Tree enumeration.
    Trees {
        #[command(subcommand)]
        command: TreesCommand,
    },
    /// Product of two tree expressions.
    Mul {
        /// `dot`, `circle` or `star:A,B` for A·dot + B·circle.
        #[arg(long)]
        op: String,
        #[command(flatten)]
        colors: ColorArg,
        x: String,
        y: String,
    },
    /// Coproduct of a tree expression.
    Coproduct {
        /// Use the prefix-split closed formula instead of the recursion.
        #[arg(long)]
        closed: bool,
        #[command(flatten)]
        colors: ColorArg,
        x: String,
    },
    /// Projections of the irreducible trees of one degree onto primitives.
    PrimBasis {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        colors: String,
    },
    /// The n-ary operation N_n on primitive inputs.
    Nop {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        colors: ColorArg,
        xs: Vec<String>,
    },
    /// Image of a tree expression in the free matching dialgebra.
    Normalize {
        #[command(flatten)]
        colors: ColorArg,
        x: String,
    },
    /// Product of two word expressions.
    WordMul {
        #[arg(long, value_enum)]
        op: WordOp,
        #[command(flatten)]
        colors: ColorArg,
        x: String,
        y: String,
    },
    /// Path algebra operations.
    Path {
        #[arg(value_enum)]
        op: PathOp,
        /// Point set, e.g. `a,b,c` or `S = {a,b,c}`.
        #[arg(long)]
        points: String,
        args: Vec<String>,
    },
    /// Table of tree, primitive and cofree dimensions.
    Dims {
        #[arg(long)]
        max: usize,
        #[arg(long, default_value_t = 1)]
        colors: usize,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Random draws per randomized check.
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

#[derive(Subcommand)]
enum TreesCommand {
    /// List all trees of a degree.
    Enum {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        colors: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum WordOp {
    Dot,
    Circ,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathOp {
    Mul,
    Circ,
    Coproduct,
    #[value(name = "R", alias = "r")]
    R,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Axioms,
    Coalgebra,
    Nalgebra,
    Matching,
    Path,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Axioms => Suite::Axioms,
            SuiteArg::Coalgebra => Suite::Coalgebra,
            SuiteArg::Nalgebra => Suite::NAlgebra,
            SuiteArg::Matching => Suite::Matching,
            SuiteArg::Path => Suite::Path,
            SuiteArg::All => Suite::All,
        }
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: impl Serialize) -> Output {
        Output {
            text,
            json: serde_json::to_value(json).expect("serializable"),
            code: 0,
        }
    }

    fn element<K: RenderKey>(x: &Element<K>) -> Output {
        Output::ok(format!("{}\n", x.render_lines()), x.to_records())
    }
}

fn parse_colors(spec: &str) -> Result<Alphabet, Error> {
    match spec.trim().parse::<usize>() {
        Ok(n) => Alphabet::letters(n),
        Err(_) => Alphabet::parse_list(spec),
    }
}

fn alphabet_for<K: KeySyntax>(arg: &ColorArg, texts: &[&str]) -> Result<Alphabet, Error> {
    match &arg.colors {
        Some(c) => parse_colors(c),
        None => infer_alphabet::<K>(texts),
    }
}

fn parse_all<K: KeySyntax>(alphabet: &Alphabet, texts: &[&str]) -> Result<Vec<Element<K>>, Error> {
    texts
        .iter()
        .map(|t| Ok(Element::new(alphabet.clone(), parse_terms::<K>(alphabet, t)?)))
        .collect()
}

fn parse_product(op: &str) -> Result<Product, String> {
    match op {
        "dot" => Ok(Product::Dot),
        "circle" | "circ" => Ok(Product::Circle),
        _ => {
            let weights = op.strip_prefix("star:").ok_or_else(|| format!("unknown product `{op}`"))?;
            let (a, b) = weights
                .split_once(',')
                .ok_or_else(|| "expected `star:A,B`".to_string())?;
            let parse = |s: &str| s.trim().parse::<Rational>().map_err(|_| format!("bad weight `{s}`"));
            Ok(Product::Star(parse(a)?, parse(b)?))
        }
    }
}

fn arity(args: &[String], n: usize, what: &str) -> Result<(), String> {
    if args.len() == n {
        Ok(())
    } else {
        Err(format!("{what} takes {n} argument(s), got {}", args.len()))
    }
}

fn element_output<K: RenderKey + Key>(alphabet: &Alphabet, terms: LinComb<K>) -> Output {
    Output::element(&Element::new(alphabet.clone(), terms))
}

#[derive(Serialize)]
struct PrimRecord {
    tree: String,
    terms: Vec<Record>,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    reports: &'a [cab_core::verify::CheckReport],
}

fn run(cli: Cli) -> Result<Output, String> {
    let e = |err: Error| err.to_string();
    Ok(match cli.command {
        Command::Trees {
            command: TreesCommand::Enum { degree, colors },
        } => {
            let palette = parse_colors(&colors).map_err(e)?;
            let trees: Vec<String> = enumerate_trees(degree, &palette)
                .map_err(e)?
                .iter()
                .map(|t| t.render(&palette))
                .collect();
            let mut text = trees.join("\n");
            text.push('\n');
            Output::ok(text, trees)
        }
        Command::Mul { op, colors, x, y } => {
            let product = parse_product(&op)?;
            let alphabet = alphabet_for::<Tree>(&colors, &[&x, &y]).map_err(e)?;
            let xs = parse_all::<Tree>(&alphabet, &[&x, &y]).map_err(e)?;
            Output::element(&xs[0].product(&product, &xs[1]).map_err(e)?)
        }
        Command::Coproduct { closed, colors, x } => {
            let alphabet = alphabet_for::<Tree>(&colors, &[&x]).map_err(e)?;
            let x: Elem = parse_all::<Tree>(&alphabet, &[&x]).map_err(e)?.remove(0);
            if closed {
                let mut out = LinComb::zero();
                for (t, c) in x.terms().iter() {
                    out.add_scaled(&coproduct_closed(t), c);
                }
                element_output(&alphabet, out)
            } else {
                Output::element(&x.coproduct())
            }
        }
        Command::PrimBasis { degree, colors } => {
            let palette = parse_colors(&colors).map_err(e)?;
            let basis = primitive_basis(degree, &palette).map_err(e)?;
            let irreducible: Vec<Tree> = enumerate_trees(degree, &palette)
                .map_err(e)?
                .into_iter()
                .filter(Tree::is_irreducible)
                .collect();
            let mut text = String::new();
            let mut json = Vec::new();
            for (t, p) in irreducible.iter().zip(&basis) {
                let el = Element::new(palette.clone(), p.clone());
                text.push_str(&format!("e({}) = {}\n", t.render(&palette), el));
                json.push(PrimRecord {
                    tree: t.render(&palette),
                    terms: el.to_records(),
                });
            }
            Output::ok(text, json)
        }
        Command::Nop { n, colors, xs } => {
            arity(&xs, n, "nop")?;
            let texts: Vec<&str> = xs.iter().map(String::as_str).collect();
            let alphabet = alphabet_for::<Tree>(&colors, &texts).map_err(e)?;
            let xs = parse_all::<Tree>(&alphabet, &texts).map_err(e)?;
            Output::element(&Elem::n_op(&xs).map_err(e)?)
        }
        Command::Normalize { colors, x } => {
            let alphabet = alphabet_for::<Tree>(&colors, &[&x]).map_err(e)?;
            let x: Elem = parse_all::<Tree>(&alphabet, &[&x]).map_err(e)?.remove(0);
            Output::element(&x.normalize())
        }
        Command::WordMul { op, colors, x, y } => {
            let alphabet = alphabet_for::<Word>(&colors, &[&x, &y]).map_err(e)?;
            let xs = parse_all::<Word>(&alphabet, &[&x, &y]).map_err(e)?;
            let r = match op {
                WordOp::Dot => xs[0].m_dot(&xs[1]),
                WordOp::Circ => xs[0].m_circ(&xs[1]),
            };
            Output::element(&r.map_err(e)?)
        }
        Command::Path { op, points, args } => {
            let alg = PathAlgebra::new(Alphabet::parse_list(&points).map_err(e)?);
            let texts: Vec<&str> = args.iter().map(String::as_str).collect();
            let xs: Vec<Element<Path>> = parse_all::<Path>(alg.points(), &texts).map_err(e)?;
            match op {
                PathOp::Mul => {
                    arity(&args, 2, "path mul")?;
                    Output::element(&xs[0].mul(&xs[1]).map_err(e)?)
                }
                PathOp::Circ => {
                    arity(&args, 2, "path circ")?;
                    Output::element(&xs[0].circ(&xs[1]).map_err(e)?)
                }
                PathOp::Coproduct => {
                    arity(&args, 1, "path coproduct")?;
                    Output::element(&xs[0].coproduct())
                }
                PathOp::R => {
                    arity(&args, 1, "path R")?;
                    Output::element(&xs[0].r())
                }
            }
        }
        Command::Dims { max, colors } => {
            let rows = dimension_report(max, colors).map_err(e)?;
            let code = if rows.iter().all(|r| r.consistent) { 0 } else { 2 };
            Output {
                code,
                ..Output::ok(render_dimension_table(&rows), &rows)
            }
        }
        Command::Verify {
            suite,
            max_degree,
            seed,
            cases,
        } => {
            let cfg = SuiteConfig {
                max_degree,
                seed,
                random_cases: cases,
            };
            let reports = run_suite(suite.into(), &cfg);
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!("{r}\n"));
            }
            text.push_str(&format!(
                "{} checks, {} failed (max degree {max_degree}, seed {seed})\n",
                reports.len(),
                failed
            ));
            Output {
                code: if failed == 0 { 0 } else { 2 },
                ..Output::ok(
                    text,
                    VerifyJson {
                        passed: failed == 0,
                        reports: &reports,
                    },
                )
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
