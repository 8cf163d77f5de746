//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test -p solvrep-cli --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use solvrep_core::checks::{instance, property, run_instance, CheckConfig, Property};
use solvrep_core::classes::{r_class, spec_tensor_space};
use solvrep_core::exact::{int, rat, vector};
use solvrep_core::pbw::{InducedModule, ModuleElement, Monomial};
use solvrep_core::polar::vergne_polarization;
use solvrep_core::problem::{builtin, builtin_source, parse, BUILTIN_NAMES};
use solvrep_core::{AffineSubspace, FilteredAlgebra, Functional, Rational, Subspace};

const SEED: u64 = 42;
const INSTANCES: usize = 100;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// Runs the named properties over the fixed instance set.
fn suite(names: &[&str]) -> Outcome {
    let config = CheckConfig::default();
    let props: Vec<&Property> = names.iter().map(|n| property(n).expect("known property")).collect();
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut max_dim = 0;
    for i in 0..INSTANCES {
        let inst = instance(SEED, i, &config).expect("instance generates");
        max_dim = max_dim.max(inst.algebra.dim());
        for (name, tally) in run_instance(&inst, &props, &config).results {
            checked += tally.checked;
            failures.extend(tally.failures.iter().map(|f| format!("instance {i}, {name}: {f}")));
        }
    }
    let mut detail = format!("{INSTANCES} instances (dim <= {max_dim}), {checked} checks, {} failures", failures.len());
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first: {first}"));
    }
    outcome(failures.is_empty() && checked > 0, detail)
}

fn span(n: usize, rows: &[&[i64]]) -> Subspace {
    Subspace::span(n, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect::<Vec<_>>())).unwrap()
}

fn affine(point: Vec<Rational>, direction: Subspace) -> AffineSubspace {
    AffineSubspace::new(point, direction).unwrap()
}

fn algebra(name: &str) -> FilteredAlgebra {
    builtin(name).unwrap().algebra
}

fn example_1() -> Outcome {
    let g = algebra("axb");
    let mut ok = true;
    let f = Functional::new(vec![int(0), int(1)]);
    let c = r_class(&g, &f).unwrap();
    ok &= *c.polarization().space() == span(2, &[&[0, 1]]);
    ok &= *c.set() == affine(vec![int(0), int(1)], span(2, &[&[1, 0]]));
    for alpha in [int(0), int(7), rat(-3, 2)] {
        let f = Functional::new(vec![alpha.clone(), int(0)]);
        let c = r_class(&g, &f).unwrap();
        ok &= c.polarization().space().is_full();
        ok &= *c.set() == AffineSubspace::singleton(vec![alpha, int(0)]);
    }
    outcome(ok, "axb: (0, 1) and (a, 0) for a in {0, 7, -3/2}")
}

fn example_2() -> Outcome {
    let g = algebra("heisenberg");
    let mut ok = true;
    for (y0, z0) in [(int(0), int(1)), (int(2), rat(-1, 3)), (rat(5, 2), int(4))] {
        let f = Functional::new(vec![int(0), y0.clone(), z0.clone()]);
        let c = r_class(&g, &f).unwrap();
        ok &= *c.polarization().space() == span(3, &[&[0, 1, 0], &[0, 0, 1]]);
        ok &= *c.set() == affine(vec![int(0), y0, z0], span(3, &[&[1, 0, 0]]));
    }
    for y0 in [int(0), int(1), rat(-2, 5)] {
        let f = Functional::new(vec![int(0), y0.clone(), int(0)]);
        let c = r_class(&g, &f).unwrap();
        ok &= c.polarization().space().is_full();
        ok &= *c.set() == AffineSubspace::singleton(vec![int(0), y0, int(0)]);
    }
    outcome(ok, "heisenberg: three values with z0 != 0, three with z0 = 0")
}

fn weyl() -> Outcome {
    let g = algebra("heisenberg");
    let f = Functional::new(vec![int(0), int(0), int(1)]);
    let m = InducedModule::vergne(&g, &f).unwrap();
    let xk = |k: u32| ModuleElement::monomial(Monomial::from_exponents(vec![k]));
    let mut ok = m.vars() == 1 && vergne_polarization(&g, &f).unwrap().space() == &span(3, &[&[0, 1, 0], &[0, 0, 1]]);
    for k in 0..=10u32 {
        let expected = if k == 0 {
            ModuleElement::zero(1)
        } else {
            ModuleElement::term(Monomial::from_exponents(vec![k - 1]), int(-(k as i64)))
        };
        ok &= m.act(&vector::unit(3, 1), &xk(k)).unwrap() == expected;
        ok &= m.act(&vector::unit(3, 2), &xk(k)).unwrap() == xk(k);
    }
    outcome(ok, "y x^k l = -k x^(k-1) l and z x^k l = x^k l for k <= 10")
}

fn spectra() -> Outcome {
    let base = suite(&["classes.induced", "classes.restriction", "classes.tensor"]);
    let g = algebra("heisenberg");
    let space = spec_tensor_space(
        &g,
        &Functional::new(vec![int(0), int(0), int(1)]),
        &Functional::new(vec![int(0), int(0), int(-1)]),
    )
    .unwrap();
    let expected = affine(vec![int(0); 3], span(3, &[&[1, 0, 0]]));
    let tensor_ok = space == expected;
    outcome(
        base.passed && tensor_ok,
        format!("{}; heisenberg tensor example {}", base.detail, if tensor_ok { "exact" } else { "WRONG" }),
    )
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_solvrep"))
}

fn cli() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for name in BUILTIN_NAMES {
        let text = builtin_source(name).unwrap();
        let first = parse(text).unwrap();
        let printed = first.to_string();
        let same = parse(&printed).map(|second| second == first && second.to_string() == printed);
        let out = binary().args(["--example", name, "print"]).output().unwrap();
        let via_cli = String::from_utf8(out.stdout).unwrap() == printed;
        ok &= same == Ok(true) && via_cli && out.status.code() == Some(0);
    }
    notes.push("round trip on bundled files");

    let run = || binary().args(["check-all", "--seed", "42", "-n", "100"]).output().unwrap();
    let (a, b) = (run(), run());
    let deterministic = a.stdout == b.stdout && !a.stdout.is_empty();
    ok &= deterministic && a.status.code() == Some(0);
    notes.push(if deterministic { "check-all deterministic" } else { "check-all NOT deterministic" });

    let dir = tempfile::tempdir().unwrap();
    let bad_parse = dir.path().join("parse.lie");
    std::fs::write(&bad_parse, "algebra\n  basis x y\n  [x, w] = y\nend\n").unwrap();
    let non_ideal = dir.path().join("ideal.lie");
    std::fs::write(
        &non_ideal,
        "algebra\n  basis x y\n  [x, y] = y\nend\nfiltration\n  ideal x, y\n  ideal x\n  ideal 0\nend\n",
    )
    .unwrap();
    let code = |args: &[&str]| binary().args(args).output().unwrap().status.code();
    let codes = [
        (code(&["--example", "heisenberg", "validate"]), Some(0)),
        (code(&["--file", non_ideal.to_str().unwrap(), "validate"]), Some(1)),
        (code(&["--example", "heisenberg", "pv", "1, 2"]), Some(1)),
        (code(&["--file", bad_parse.to_str().unwrap(), "validate"]), Some(2)),
        (code(&["--example", "heisenberg", "act", "f", "x +"]), Some(2)),
    ];
    let codes_ok = codes.iter().all(|(got, want)| got == want);
    ok &= codes_ok;
    notes.push(if codes_ok { "exit codes 0/1/2 conform" } else { "exit codes WRONG" });
    outcome(ok, notes.join(", "))
}

fn main() {
    let second = Duration::from_secs(1);
    let half_minute = Duration::from_secs(30);
    type Criterion = (&'static str, Box<dyn Fn() -> Outcome>, Option<Duration>);
    let criteria: Vec<Criterion> = vec![
        ("axb classes", Box::new(example_1), Some(second)),
        ("heisenberg classes", Box::new(example_2), Some(second)),
        (
            "polarization suite",
            Box::new(|| suite(&["polar.vergne_polarization", "polar.compatibility"])),
            Some(half_minute),
        ),
        ("class membership and equivalence", Box::new(|| suite(&["classes.membership"])), None),
        ("representation identity", Box::new(|| suite(&["pbw.representation"])), None),
        ("Weyl realization", Box::new(weyl), None),
        ("highest vectors", Box::new(|| suite(&["pbw.highest_vectors"])), None),
        ("shifted generator meets K[t] l", Box::new(|| suite(&["pbw.shifted_generator"])), None),
        ("spectra cross-check", Box::new(spectra), None),
        (
            "stabilizer extension and slice properties",
            Box::new(|| suite(&["polar.stabilizer_extension", "pbw.slice_exhausted", "pbw.t_filtration"])),
            None,
        ),
        ("constancy on classes", Box::new(|| suite(&["classes.constancy"])), None),
        ("CLI round trip, determinism, exit codes", Box::new(cli), None),
    ];
    let mut failed = Vec::new();
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let elapsed = start.elapsed();
        let in_time = limit.map_or(true, |l| elapsed < l);
        let passed = out.passed && in_time;
        let limit_note = limit.map_or(String::new(), |l| format!(", limit {} s", l.as_secs()));
        println!(
            "[{}] {:>2}. {name}: {} ({:.2} s{limit_note})",
            if passed { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            elapsed.as_secs_f64()
        );
        if !passed {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
