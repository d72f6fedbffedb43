use std::process::{Command, Output};

fn cab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cab")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn circle_of_generators() {
    assert_eq!(stdout(&["mul", "--op", "circle", "(a)", "(b)"]), "1 (b(a))\n");
    assert_eq!(stdout(&["mul", "--op", "dot", "(a)", "(b)"]), "1 (a,b)\n");
    assert_eq!(stdout(&["mul", "--op", "star:-1,1", "(a)", "(b)"]), "-1 (a,b)\n1 (b(a))\n");
}

#[test]
fn dims_table() {
    let out = stdout(&["dims", "--max", "6", "--colors", "1"]);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[3], ["4", "14", "5", "14", "yes"]);
    assert_eq!(rows[5], ["6", "132", "42", "132", "yes"]);
}

#[test]
fn coproduct_both_ways() {
    let rec = stdout(&["coproduct", "(a,b,c)"]);
    let closed = stdout(&["coproduct", "--closed", "(a,b,c)"]);
    assert_eq!(rec, closed);
    assert_eq!(rec, "1 (a) ⊗ (b,c)\n1 (a,b) ⊗ (c)\n");
    assert_eq!(stdout(&["coproduct", "(a)"]), "0\n");
}

#[test]
fn json_records() {
    let out = stdout(&["--json", "mul", "--op", "circle", "(a)", "(b)"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v, serde_json::json!([{"coeff": "1/1", "key": "(b(a))"}]));
}

#[test]
fn trees_and_primitives() {
    assert_eq!(stdout(&["trees", "enum", "--degree", "3", "--colors", "1"]).lines().count(), 5);
    assert_eq!(stdout(&["trees", "enum", "--degree", "2", "--colors", "a,b"]).lines().count(), 8);
    assert_eq!(stdout(&["prim-basis", "--degree", "2", "--colors", "1"]), "e((a(a))) = -(a,a) + (a(a))\n");
    assert_eq!(stdout(&["nop", "--n", "2", "(a)", "(b)"]), "-1 (a,b)\n1 (b(a))\n");
}

#[test]
fn words_and_normal_forms() {
    assert_eq!(stdout(&["word-mul", "--op", "circ", "a|b", "c|d"]), "1 a|b.c|d\n");
    assert_eq!(stdout(&["word-mul", "--op", "dot", "a.b", "c|d"]), "1 a.b|c|d\n");
    assert_eq!(stdout(&["normalize", "(c(a,b))"]), "1 a|b.c\n");
}

#[test]
fn paths() {
    let s = ["--points", "S = {a,b,c,x}"];
    let run = |op: &str, args: &[&str]| {
        let mut v = vec!["path", op];
        v.extend(s);
        v.extend(args);
        stdout(&v)
    };
    assert_eq!(run("mul", &["p[a,x]", "p[x,b]"]), "1 p[a,b]\n");
    assert_eq!(run("mul", &["p[a,b]", "p[c,b]"]), "0\n");
    assert_eq!(run("circ", &["p[a,b]", "p[b,c]"]), "1 p[a,b,c]\n");
    assert_eq!(run("R", &["p[a,b]"]), "1 p[a,a,b]\n");
    assert_eq!(run("coproduct", &["p[a,b]"]), "1 p[a,b] ⊗ p[a,b]\n");
}

#[test]
fn errors_exit_one() {
    assert_eq!(cab(&["mul", "--op", "dot", "(a", "(b)"]).status.code(), Some(1));
    assert_eq!(cab(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(cab(&["mul", "--op", "cross", "(a)", "(b)"]).status.code(), Some(1));
    assert_eq!(cab(&["path", "mul", "--points", "a,b", "p[a,z]", "p[a,b]"]).status.code(), Some(1));
    assert_eq!(cab(&["mul", "--op", "dot", "--colors", "1", "(a)", "(b)"]).status.code(), Some(1));
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "--suite", "matching", "--max-degree", "3", "--seed", "11", "--cases", "10"];
    let a = cab(&args);
    let b = cab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_all_default_flags() {
    let out = cab(&["verify", "--suite", "all", "--max-degree", "5", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("2^(n-1)"));
    assert!(text.ends_with("0 failed (max degree 5, seed 7)\n"));
}

/// Splits a console line into arguments, honoring double quotes.
fn shell_words(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut started = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                started = true;
            }
            c if c.is_whitespace() && !quoted => {
                if started {
                    out.push(std::mem::take(&mut cur));
                    started = false;
                }
            }
            c => {
                cur.push(c);
                started = true;
            }
        }
    }
    if started {
        out.push(cur);
    }
    out
}

#[test]
fn book_transcript_matches() {
    let book = include_str!("../../../book/src/cli.md");
    let mut checked = 0;
    let mut in_console = false;
    let mut pending: Option<(Vec<String>, String)> = None;
    let mut flush = |p: &mut Option<(Vec<String>, String)>| {
        if let Some((args, expected)) = p.take() {
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            assert_eq!(stdout(&args), expected, "cab {args:?}");
            checked += 1;
        }
    };
    for line in book.lines() {
        if line.starts_with("```") {
            flush(&mut pending);
            in_console = line == "```console";
            continue;
        }
        if !in_console {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ cab ") {
            flush(&mut pending);
            pending = Some((shell_words(cmd), String::new()));
        } else if let Some((_, expected)) = pending.as_mut() {
            expected.push_str(line);
            expected.push('\n');
        }
    }
    flush(&mut pending);
    assert!(checked >= 10);
}
