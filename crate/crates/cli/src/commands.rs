use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};
use solvrep_core::checks::{instance, run_instance, CheckConfig, InstanceReport, Property, PROPERTIES};
use solvrep_core::classes::{
    modules_equivalent, r_class, spec_induced_space, spec_restrict_space, spec_tensor_member,
    spec_tensor_member_diagonal, spec_tensor_space,
};
use solvrep_core::pbw::highest_vectors;
use solvrep_core::polar::{stabilizer, theta, twisted_character, vergne_polarization};
use solvrep_core::problem::expr::{parse_uea, parse_values};
use solvrep_core::problem::{parse, Problem};
use solvrep_core::{Error, FilteredAlgebra, Functional, InducedModule, Subalgebra, Subspace};

use crate::render;

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Parse(String),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "validation error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => CliError::Internal(e.to_string()),
            Error::InvalidRational(_) => CliError::Parse(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Human-readable lines, the structured report and the exit status.
pub struct Output {
    pub lines: Vec<String>,
    pub report: Value,
    pub status: i32,
}

impl Output {
    fn ok(lines: Vec<String>, report: Value) -> Self {
        Self { lines, report, status: 0 }
    }
}

pub fn load_text(text: &str) -> CliResult<Problem> {
    let file = parse(text).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(file.build()?)
}

/// A functional given by name or as a comma-separated list of values.
pub fn functional(problem: &Problem, arg: &str, dim: usize) -> CliResult<Functional> {
    let f = match problem.functional(arg) {
        Some(f) => f.clone(),
        None if arg.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) => {
            return Err(CliError::Validation(format!("unknown functional {arg:?}")))
        }
        None => Functional::new(parse_values(arg).map_err(|e| CliError::Parse(format!("{arg:?}: {e}")))?),
    };
    if f.dim() != dim {
        return Err(CliError::Validation(format!(
            "functional {arg:?} has {} values, expected {dim}",
            f.dim()
        )));
    }
    Ok(f)
}

fn subalgebra<'a>(problem: &'a Problem, name: &str) -> CliResult<&'a Subalgebra> {
    problem
        .subalgebra(name)
        .ok_or_else(|| CliError::Validation(format!("unknown subalgebra {name:?}")))
}

/// A functional on a subalgebra: a literal in its local basis, or a
/// functional of 𝔤 restricted to it.
fn local_functional(problem: &Problem, sub: &Subalgebra, arg: &str) -> CliResult<Functional> {
    if let Some(f) = problem.functional(arg) {
        return Ok(Functional::new(sub.restrict(f.coords())?));
    }
    functional(problem, arg, sub.dim())
}

fn names(fa: &FilteredAlgebra) -> &[String] {
    fa.algebra().names()
}

pub fn validate(problem: &Problem) -> CliResult<Output> {
    let fa = &problem.algebra;
    let alg = fa.algebra().validate();
    let filt = fa.filtration().validate(fa.algebra());
    let mut lines = vec![
        format!("algebra: dim {}, basis {}", fa.dim(), names(fa).join(" ")),
        format!("filtration: length {}", fa.filtration().len()),
    ];
    for (i, m) in fa.filtration().members().iter().enumerate() {
        lines.push(format!("  g{i} = {}", render::span(names(fa), m)));
    }
    lines.push(format!("algebra axioms {}", render::yes(alg.is_valid())));
    lines.push(format!("filtration axioms {}", render::yes(filt.is_valid())));
    lines.extend(alg.messages());
    lines.extend(filt.messages());
    for (name, f) in &problem.functionals {
        lines.push(format!("functional {name} = {}", render::tuple(f.coords())));
    }
    for (name, s) in &problem.subalgebras {
        lines.push(format!("subalgebra {name} = {}", render::span(names(fa), s.space())));
    }
    let valid = alg.is_valid() && filt.is_valid();
    let report = json!({
        "command": "validate",
        "valid": valid,
        "dim": fa.dim(),
        "basis": names(fa),
        "filtration_length": fa.filtration().len(),
        "violations": alg.messages().into_iter().chain(filt.messages()).collect::<Vec<_>>(),
    });
    Ok(Output {
        lines,
        report,
        status: if valid { 0 } else { 1 },
    })
}

pub fn print(problem: &Problem) -> CliResult<Output> {
    let text = problem.source.to_string();
    let report = json!({ "command": "print", "text": text });
    Ok(Output::ok(text.lines().map(String::from).collect(), report))
}

pub fn pv(problem: &Problem, f_arg: &str) -> CliResult<Output> {
    let fa = &problem.algebra;
    let g = fa.algebra();
    let f = functional(problem, f_arg, fa.dim())?;
    let p = vergne_polarization(fa, &f)?;
    let space = p.space();
    let stab = stabilizer(g, &f, &Subspace::full(fa.dim()))?;
    let subalg = g.is_subalgebra(space)?;
    let iso = f.is_character_on(g, space)?;
    let dims = 2 * space.dim() == fa.dim() + stab.dim();
    let lines = vec![
        format!("f = {}", render::tuple(f.coords())),
        format!("polarization {}", render::span(names(fa), space)),
        format!("dim {}", space.dim()),
        format!("subalgebra {}", render::yes(subalg)),
        format!("isotropy {}", render::yes(iso)),
        format!("stabilizer {}, dim {}", render::span(names(fa), &stab), stab.dim()),
        format!("dimension formula {}", render::yes(dims)),
    ];
    let report = json!({
        "command": "pv",
        "functional": render::vector(f.coords()),
        "polarization": render::subspace(space),
        "dim": space.dim(),
        "subalgebra": subalg,
        "isotropic": iso,
        "stabilizer": render::subspace(&stab),
        "dimension_formula": dims,
    });
    let ok = subalg && iso && dims;
    Ok(Output {
        lines,
        report,
        status: if ok { 0 } else { 3 },
    })
}

pub fn class(problem: &Problem, f_arg: &str) -> CliResult<Output> {
    let fa = &problem.algebra;
    let f = functional(problem, f_arg, fa.dim())?;
    let c = r_class(fa, &f)?;
    let lines = vec![
        format!("f = {}", render::tuple(f.coords())),
        format!("polarization {}", render::span(names(fa), c.polarization().space())),
        format!("class {}", render::affine(names(fa), c.set())),
        format!("dim {}", c.set().dim()),
    ];
    let report = json!({
        "command": "class",
        "functional": render::vector(f.coords()),
        "polarization": render::subspace(c.polarization().space()),
        "restriction": render::vector(c.restriction()),
        "class": render::affine_json(c.set()),
    });
    Ok(Output::ok(lines, report))
}

pub fn equiv(problem: &Problem, f_arg: &str, g_arg: &str) -> CliResult<Output> {
    let fa = &problem.algebra;
    let f = functional(problem, f_arg, fa.dim())?;
    let g = functional(problem, g_arg, fa.dim())?;
    let eq = modules_equivalent(fa, &f, &g)?;
    let word = if eq { "equivalent" } else { "not equivalent" };
    let lines = vec![format!("M({}) and M({}) are {word}", render::tuple(f.coords()), render::tuple(g.coords()))];
    let report = json!({
        "command": "equiv",
        "f": render::vector(f.coords()),
        "g": render::vector(g.coords()),
        "equivalent": eq,
    });
    Ok(Output::ok(lines, report))
}

pub fn spec_ind(problem: &Problem, h_arg: &str, sub_name: &str) -> CliResult<Output> {
    let fa = &problem.algebra;
    let sub = subalgebra(problem, sub_name)?;
    let h = local_functional(problem, sub, h_arg)?;
    let space = spec_induced_space(fa, sub, &h)?;
    let lines = vec![
        format!("h = {} on {sub_name} = {}", render::tuple(h.coords()), render::span(names(fa), sub.space())),
        format!("spectrum {}", render::affine(names(fa), &space)),
        format!("dim {}", space.dim()),
    ];
    let report = json!({
        "command": "spec-ind",
        "subalgebra": render::subspace(sub.space()),
        "h": render::vector(h.coords()),
        "spectrum": render::affine_json(&space),
    });
    Ok(Output::ok(lines, report))
}

pub fn spec_res(problem: &Problem, f_arg: &str, sub_name: &str) -> CliResult<Output> {
    let fa = &problem.algebra;
    let sub = subalgebra(problem, sub_name)?;
    let f = functional(problem, f_arg, fa.dim())?;
    let space = spec_restrict_space(fa, &f, sub)?;
    let local = sub.algebra().names();
    let basis: Vec<String> = sub
        .space()
        .basis_vectors()
        .zip(local)
        .map(|(v, n)| format!("{n} = {}", solvrep_core::lie::format_linear(names(fa), v)))
        .collect();
    let lines = vec![
        format!("f = {}", render::tuple(f.coords())),
        format!("{sub_name} basis: {}", basis.join(", ")),
        format!("spectrum {}", render::affine(local, &space)),
        format!("dim {}", space.dim()),
    ];
    let report = json!({
        "command": "spec-res",
        "functional": render::vector(f.coords()),
        "subalgebra": render::subspace(sub.space()),
        "spectrum": render::affine_json(&space),
    });
    Ok(Output::ok(lines, report))
}

pub fn spec_tensor(problem: &Problem, f_arg: &str, g_arg: &str, candidate: Option<&str>) -> CliResult<Output> {
    let fa = &problem.algebra;
    let f1 = functional(problem, f_arg, fa.dim())?;
    let f2 = functional(problem, g_arg, fa.dim())?;
    let space = spec_tensor_space(fa, &f1, &f2)?;
    let mut lines = vec![
        format!("f' = {}, f'' = {}", render::tuple(f1.coords()), render::tuple(f2.coords())),
        format!("spectrum {}", render::affine(names(fa), &space)),
        format!("dim {}", space.dim()),
    ];
    let mut report = json!({
        "command": "spec-tensor",
        "f1": render::vector(f1.coords()),
        "f2": render::vector(f2.coords()),
        "spectrum": render::affine_json(&space),
    });
    let mut status = 0;
    if let Some(c) = candidate {
        let g = functional(problem, c, fa.dim())?;
        let by_containment = spec_tensor_member(fa, &f1, &f2, &g)?;
        let by_diagonal = spec_tensor_member_diagonal(fa, &f1, &f2, &g)?;
        lines.push(format!("candidate {}", render::tuple(g.coords())));
        lines.push(format!("member (affine containment): {by_containment}"));
        lines.push(format!("member (diagonal restriction): {by_diagonal}"));
        if by_containment != by_diagonal {
            lines.push("the two membership tests disagree".into());
            status = 3;
        }
        report["candidate"] = json!({
            "g": render::vector(g.coords()),
            "member_affine": by_containment,
            "member_diagonal": by_diagonal,
        });
    }
    Ok(Output { lines, report, status })
}

pub fn act(problem: &Problem, f_arg: &str, expr: &str) -> CliResult<Output> {
    let fa = &problem.algebra;
    let f = functional(problem, f_arg, fa.dim())?;
    let u = parse_uea(names(fa), expr).map_err(|e| CliError::Parse(format!("{expr:?}: {e}")))?;
    let m = InducedModule::vergne(fa, &f)?;
    let v = m.act_uea(&u, &m.cyclic())?;
    let rendered = m.render(&v);
    let lines = vec![
        format!("M(f) for f = {}, variables {}", render::tuple(f.coords()), m.variable_names().join(" ")),
        format!("({}) l = {rendered}", u.render(names(fa))),
    ];
    let terms: Vec<Value> = v
        .terms()
        .map(|(mono, c)| json!({ "monomial": mono.render(m.variable_names()), "coefficient": render::rational(c) }))
        .collect();
    let report = json!({
        "command": "act",
        "functional": render::vector(f.coords()),
        "element": expr,
        "variables": m.variable_names(),
        "result": rendered,
        "terms": terms,
    });
    Ok(Output::ok(lines, report))
}

pub fn highest(problem: &Problem, f_arg: &str, degree: u32) -> CliResult<Output> {
    let fa = &problem.algebra;
    let f = functional(problem, f_arg, fa.dim())?;
    if degree == 0 {
        return Err(CliError::Validation("degree must be at least 1".into()));
    }
    let m = InducedModule::vergne(fa, &f)?;
    let hv = highest_vectors(&m, degree)?;
    let n = fa.dim();
    let mut lines = vec![format!("f = {}, D = {degree}: {} solutions (v, c) of (v - c) l = 0", render::tuple(f.coords()), hv.dim())];
    for row in hv.basis_vectors() {
        lines.push(format!(
            "  v = {}, c = {}",
            solvrep_core::lie::format_linear(names(fa), &row[..n]),
            row[n]
        ));
    }
    let projected = Subspace::span(n, hv.basis_vectors().map(|r| r[..n].to_vec()))?;
    let p = vergne_polarization(fa, &f)?;
    let matches = projected == *p.space() && hv.dim() == p.space().dim();
    lines.push(format!("v ranges over pv(f) = {}: {}", render::span(names(fa), p.space()), render::yes(matches)));
    let report = json!({
        "command": "highest",
        "functional": render::vector(f.coords()),
        "degree": degree,
        "solutions": render::subspace(&hv),
        "matches_polarization": matches,
    });
    Ok(Output {
        lines,
        report,
        status: if matches { 0 } else { 3 },
    })
}

pub fn theta_cmd(problem: &Problem, f_arg: &str) -> CliResult<Output> {
    let fa = &problem.algebra;
    let g = fa.algebra();
    let f = functional(problem, f_arg, fa.dim())?;
    let p = vergne_polarization(fa, &f)?;
    let th = theta(g, p.space())?;
    let twisted = twisted_character(g, &f, p.space())?;
    let mut lines = vec![
        format!("f = {}, pv(f) = {}", render::tuple(f.coords()), render::span(names(fa), p.space())),
        "theta on the basis of pv(f):".into(),
    ];
    for (v, c) in p.space().basis_vectors().zip(&th) {
        lines.push(format!("  theta({}) = {c}", solvrep_core::lie::format_linear(names(fa), v)));
    }
    lines.push(format!("twisted character f - theta on pv(f): {}", render::tuple(&twisted)));
    let report = json!({
        "command": "theta",
        "functional": render::vector(f.coords()),
        "polarization": render::subspace(p.space()),
        "theta": render::vector(&th),
        "twisted": render::vector(&twisted),
    });
    Ok(Output::ok(lines, report))
}

/// Runs every property on instances `0..n`; reports are ordered by
/// instance seed.
pub fn check_reports(seed: u64, n: usize, config: &CheckConfig, properties: &[&Property]) -> CliResult<Vec<InstanceReport>> {
    let mut reports = (0..n)
        .into_par_iter()
        .map(|i| {
            let inst = instance(seed, i, config)?;
            Ok(run_instance(&inst, properties, config))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    reports.sort_by_key(|r| (r.seed, r.index));
    Ok(reports)
}

pub fn check_all(seed: u64, n: usize, degree: u32) -> CliResult<Output> {
    let config = CheckConfig {
        degree,
        ..CheckConfig::default()
    };
    let properties: Vec<&Property> = PROPERTIES.iter().collect();
    let reports = check_reports(seed, n, &config, &properties)?;
    let mut lines = vec![format!("check-all: seed {seed}, {n} instances, degree {degree}")];
    let mut failures = 0;
    let mut instances = Vec::new();
    for r in &reports {
        let bad: Vec<&str> = r.results.iter().filter(|(_, t)| !t.passed()).map(|(n, _)| *n).collect();
        let checked: usize = r.results.iter().map(|(_, t)| t.checked).sum();
        lines.push(format!(
            "instance {:>3} seed {:016x} family {} dim {}: {} ({checked} checks)",
            r.index,
            r.seed,
            r.family.name(),
            r.dim,
            if bad.is_empty() { "ok".to_string() } else { format!("FAILED {}", bad.join(", ")) }
        ));
        for (name, t) in &r.results {
            for msg in &t.failures {
                lines.push(format!("    {name}: {msg}"));
            }
        }
        failures += r.results.iter().map(|(_, t)| t.failures.len()).sum::<usize>();
        instances.push(json!({
            "index": r.index,
            "seed": r.seed.to_string(),
            "family": r.family.name(),
            "dim": r.dim,
            "results": r.results.iter().map(|(name, t)| json!({
                "property": name,
                "checked": t.checked,
                "skipped": t.skipped,
                "failures": t.failures,
            })).collect::<Vec<_>>(),
        }));
    }
    lines.push("summary:".into());
    let mut summary = Vec::new();
    for p in &properties {
        let (mut checked, mut skipped, mut failed) = (0, 0, 0);
        for r in &reports {
            if let Some((_, t)) = r.results.iter().find(|(name, _)| name == &p.name) {
                checked += t.checked;
                skipped += t.skipped;
                failed += t.failures.len();
            }
        }
        lines.push(format!(
            "  {:<32} checked {checked:>6}  skipped {skipped:>4}  failed {failed}",
            p.name
        ));
        summary.push(json!({
            "property": p.name,
            "description": p.description,
            "checked": checked,
            "skipped": skipped,
            "failed": failed,
        }));
    }
    lines.push(if failures == 0 {
        "all properties hold".to_string()
    } else {
        format!("{failures} failures")
    });
    let report = json!({
        "command": "check-all",
        "seed": seed.to_string(),
        "instances": n,
        "degree": degree,
        "failures": failures,
        "summary": summary,
        "results": instances,
    });
    Ok(Output {
        lines,
        report,
        status: if failures == 0 { 0 } else { 3 },
    })
}
