//! Line-oriented problem files.
//!
//! ```text
//! # comment
//! algebra
//!   basis x y z
//!   [x, y] = z
//! end
//! filtration
//!   ideal x, y, z
//!   ideal y, z
//!   ideal z
//!   ideal 0
//! end
//! functional f = 0, 0, 1
//! subalgebra h = x
//! ```
//!
//! Brackets not listed are zero. Ideals are listed outermost first by a
//! spanning set; `ideal y, z repeat 2` writes a repeated member once.

pub mod expr;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Subspace, Vector};
use crate::lie::{format_linear, FilteredAlgebra, Filtration, LieAlgebra, Subalgebra};
use crate::polar::Functional;

pub use expr::{parse_linear, parse_uea, parse_values, ParseError};
use expr::{tokenize, Tok};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bracket {
    pub left: usize,
    pub right: usize,
    pub value: Vector,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ideal {
    pub span: Vec<Vector>,
    pub repeat: usize,
}

/// Parsed but not yet validated contents of a problem file.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ProblemFile {
    pub basis: Vec<String>,
    pub brackets: Vec<Bracket>,
    pub filtration: Vec<Ideal>,
    pub functionals: Vec<(String, Vector)>,
    pub subalgebras: Vec<(String, Vec<Vector>)>,
}

#[derive(PartialEq)]
enum Block {
    Top,
    Algebra,
    Filtration,
}

pub fn parse(text: &str) -> Result<ProblemFile, ParseError> {
    let mut file = ProblemFile::default();
    let mut block = Block::Top;
    let mut block_start = 0;
    let mut seen_algebra = false;
    let mut seen_filtration = false;
    let mut seen_basis = false;
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut objects: HashSet<String> = HashSet::new();
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let mut t = tokenize(line_no, raw)?;
        if t.is_empty() {
            continue;
        }
        match block {
            Block::Top => {
                let col = t.column();
                let kw = t.ident()?;
                match kw.as_str() {
                    "algebra" => {
                        if seen_algebra {
                            return Err(ParseError::new(line_no, col, "second algebra block"));
                        }
                        t.finish()?;
                        seen_algebra = true;
                        block = Block::Algebra;
                        block_start = line_no;
                    }
                    "filtration" => {
                        if !seen_algebra {
                            return Err(ParseError::new(line_no, col, "filtration before the algebra block"));
                        }
                        if seen_filtration {
                            return Err(ParseError::new(line_no, col, "second filtration block"));
                        }
                        t.finish()?;
                        seen_filtration = true;
                        block = Block::Filtration;
                        block_start = line_no;
                    }
                    "functional" | "subalgebra" => {
                        if !seen_algebra {
                            return Err(ParseError::new(line_no, col, format!("{kw} before the algebra block")));
                        }
                        let name_col = t.column();
                        let name = t.ident()?;
                        if !objects.insert(name.clone()) {
                            return Err(ParseError::new(line_no, name_col, format!("name {name:?} defined twice")));
                        }
                        t.expect('=')?;
                        if kw == "functional" {
                            let vals_col = t.column();
                            let mut vals = vec![t.signed_number()?];
                            while t.eat(',') {
                                vals.push(t.signed_number()?);
                            }
                            t.finish()?;
                            if vals.len() != file.basis.len() {
                                return Err(ParseError::new(
                                    line_no,
                                    vals_col,
                                    format!("functional has {} values, algebra has dimension {}", vals.len(), file.basis.len()),
                                ));
                            }
                            file.functionals.push((name, vals));
                        } else {
                            let span = vector_list(&mut t, &file.basis)?;
                            t.finish()?;
                            file.subalgebras.push((name, span));
                        }
                    }
                    _ => return Err(ParseError::new(line_no, col, format!("unknown statement {kw:?}"))),
                }
            }
            Block::Algebra => {
                if t.keyword("end") {
                    t.finish()?;
                    if !seen_basis {
                        return Err(ParseError::new(line_no, 1, "algebra block without a basis line"));
                    }
                    block = Block::Top;
                } else if t.keyword("basis") {
                    if seen_basis {
                        return Err(t.error("second basis line"));
                    }
                    let mut names: Vec<String> = Vec::new();
                    while !t.at_end() {
                        let col = t.column();
                        let name = t.ident()?;
                        if names.contains(&name) {
                            return Err(ParseError::new(line_no, col, format!("basis name {name:?} repeated")));
                        }
                        names.push(name);
                    }
                    file.basis = names;
                    seen_basis = true;
                } else if t.peek() == Some(&Tok::Sym('[')) {
                    if !seen_basis {
                        return Err(t.error("bracket before the basis line"));
                    }
                    t.expect('[')?;
                    let left = basis_index(&mut t, &file.basis)?;
                    t.expect(',')?;
                    let right_col = t.column();
                    let right = basis_index(&mut t, &file.basis)?;
                    t.expect(']')?;
                    t.expect('=')?;
                    let value = t.linear(&file.basis)?;
                    t.finish()?;
                    if left == right {
                        return Err(ParseError::new(line_no, right_col, "bracket of a basis element with itself"));
                    }
                    if !pairs.insert((left.min(right), left.max(right))) {
                        return Err(ParseError::new(line_no, 1, "bracket given twice"));
                    }
                    file.brackets.push(Bracket { left, right, value });
                } else {
                    return Err(t.unexpected("'basis', a bracket or 'end'"));
                }
            }
            Block::Filtration => {
                if t.keyword("end") {
                    t.finish()?;
                    block = Block::Top;
                } else if t.keyword("ideal") {
                    let span = vector_list(&mut t, &file.basis)?;
                    let repeat = if t.keyword("repeat") {
                        let col = t.column();
                        let n = t.count()?;
                        if n == 0 {
                            return Err(ParseError::new(line_no, col, "repeat count must be positive"));
                        }
                        n
                    } else {
                        1
                    };
                    t.finish()?;
                    file.filtration.push(Ideal { span, repeat });
                } else {
                    return Err(t.unexpected("'ideal' or 'end'"));
                }
            }
        }
    }
    if block != Block::Top {
        return Err(ParseError::new(block_start, 1, "block is not closed by 'end'"));
    }
    if !seen_algebra {
        return Err(ParseError::new(last_line.max(1), 1, "missing algebra block"));
    }
    if !seen_filtration {
        return Err(ParseError::new(last_line.max(1), 1, "missing filtration block"));
    }
    Ok(file)
}

fn basis_index(t: &mut expr::Tokens, names: &[String]) -> Result<usize, ParseError> {
    let col = t.column();
    let name = t.ident()?;
    names
        .iter()
        .position(|n| *n == name)
        .ok_or_else(|| t_error(t, col, format!("unknown basis element {name:?}")))
}

fn t_error(t: &expr::Tokens, col: usize, msg: String) -> ParseError {
    let mut e = t.error(msg);
    e.column = col;
    e
}

fn vector_list(t: &mut expr::Tokens, names: &[String]) -> Result<Vec<Vector>, ParseError> {
    let mut out = vec![t.linear(names)?];
    while t.eat(',') {
        out.push(t.linear(names)?);
    }
    Ok(out)
}

impl fmt::Display for ProblemFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[Vector]| vs.iter().map(|v| format_linear(&self.basis, v)).collect::<Vec<_>>().join(", ");
        writeln!(f, "algebra")?;
        writeln!(f, "  basis {}", self.basis.join(" "))?;
        for b in &self.brackets {
            writeln!(
                f,
                "  [{}, {}] = {}",
                self.basis[b.left],
                self.basis[b.right],
                format_linear(&self.basis, &b.value)
            )?;
        }
        writeln!(f, "end")?;
        writeln!(f, "filtration")?;
        for ideal in &self.filtration {
            write!(f, "  ideal {}", list(&ideal.span))?;
            if ideal.repeat > 1 {
                write!(f, " repeat {}", ideal.repeat)?;
            }
            writeln!(f)?;
        }
        writeln!(f, "end")?;
        for (name, vals) in &self.functionals {
            let vals: Vec<String> = vals.iter().map(ToString::to_string).collect();
            writeln!(f, "functional {name} = {}", vals.join(", "))?;
        }
        for (name, span) in &self.subalgebras {
            writeln!(f, "subalgebra {name} = {}", list(span))?;
        }
        Ok(())
    }
}

/// A validated problem: the filtered algebra and its named objects.
#[derive(Clone, Debug)]
pub struct Problem {
    pub source: ProblemFile,
    pub algebra: FilteredAlgebra,
    pub functionals: Vec<(String, Functional)>,
    pub subalgebras: Vec<(String, Subalgebra)>,
}

impl ProblemFile {
    /// Describes an existing filtered algebra; each member is written by
    /// its RREF basis.
    pub fn from_algebra(fa: &FilteredAlgebra) -> Self {
        let g = fa.algebra();
        let n = g.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = g.basis_bracket(i, j);
                if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                    brackets.push(Bracket {
                        left: i,
                        right: j,
                        value: v.to_vec(),
                    });
                }
            }
        }
        let mut filtration: Vec<Ideal> = Vec::new();
        for m in fa.filtration().members() {
            let span: Vec<Vector> = if m.is_zero() {
                vec![vec![num_traits::Zero::zero(); n]]
            } else {
                m.basis_vectors().map(<[_]>::to_vec).collect()
            };
            match filtration.last_mut() {
                Some(last) if last.span == span => last.repeat += 1,
                _ => filtration.push(Ideal { span, repeat: 1 }),
            }
        }
        Self {
            basis: g.names().to_vec(),
            brackets,
            filtration,
            functionals: Vec::new(),
            subalgebras: Vec::new(),
        }
    }

    pub fn build(&self) -> Result<Problem> {
        let n = self.basis.len();
        let brackets: Vec<(usize, usize, Vector)> =
            self.brackets.iter().map(|b| (b.left, b.right, b.value.clone())).collect();
        let g = LieAlgebra::from_brackets(self.basis.clone(), &brackets)?;
        let mut members = Vec::new();
        for ideal in &self.filtration {
            let s = Subspace::span(n, ideal.span.iter().cloned())?;
            members.extend(std::iter::repeat(s).take(ideal.repeat));
        }
        let fa = FilteredAlgebra::new(g, Filtration::new(members))?;
        let functionals = self
            .functionals
            .iter()
            .map(|(name, v)| (name.clone(), Functional::new(v.clone())))
            .collect();
        let mut subalgebras = Vec::new();
        for (name, span) in &self.subalgebras {
            let space = Subspace::span(n, span.iter().cloned())?;
            match Subalgebra::new(fa.algebra(), space.clone()) {
                Ok(s) => subalgebras.push((name.clone(), s)),
                Err(Error::NotSubalgebra) => {
                    return Err(Error::InvalidSubalgebra {
                        name: name.clone(),
                        witness: closure_witness(fa.algebra(), &space),
                    })
                }
                Err(e) => return Err(e),
            }
        }
        Ok(Problem {
            source: self.clone(),
            algebra: fa,
            functionals,
            subalgebras,
        })
    }
}

fn closure_witness(g: &LieAlgebra, space: &Subspace) -> String {
    let basis: Vec<&[crate::exact::Rational]> = space.basis_vectors().collect();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            let br = g.bracket(a, b).expect("same dimension");
            if !space.contains(&br).expect("same dimension") {
                return format!(
                    "[{}, {}] = {}",
                    format_linear(g.names(), a),
                    format_linear(g.names(), b),
                    format_linear(g.names(), &br)
                );
            }
        }
    }
    "no witness".to_string()
}

impl Problem {
    pub fn functional(&self, name: &str) -> Option<&Functional> {
        self.functionals.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn subalgebra(&self, name: &str) -> Option<&Subalgebra> {
        self.subalgebras.iter().find(|(n, _)| n == name).map(|(_, s)| s)
    }
}

pub const BUILTIN_NAMES: [&str; 2] = ["axb", "heisenberg"];

/// Source text of a bundled example.
pub fn builtin_source(name: &str) -> Option<&'static str> {
    match name {
        "axb" => Some(include_str!("../../data/axb.lie")),
        "heisenberg" => Some(include_str!("../../data/heisenberg.lie")),
        _ => None,
    }
}

pub fn builtin(name: &str) -> Option<Problem> {
    let text = builtin_source(name)?;
    Some(parse(text).expect("bundled file parses").build().expect("bundled file validates"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn bundled_files_round_trip() {
        for name in BUILTIN_NAMES {
            let parsed = parse(builtin_source(name).unwrap()).unwrap();
            let printed = parsed.to_string();
            assert_eq!(parse(&printed).unwrap(), parsed, "{name}");
        }
    }

    #[test]
    fn heisenberg_file() {
        let p = builtin("heisenberg").unwrap();
        assert_eq!(p.algebra.dim(), 3);
        assert_eq!(p.algebra.filtration().len(), 3);
        assert_eq!(p.functional("f").unwrap().coords(), &[int(0), int(0), int(1)]);
    }

    #[test]
    fn unknown_name_in_bracket() {
        let text = "algebra\n  basis x y\n  [x, w] = y\nend\nfiltration\n  ideal x, y\n  ideal 0\nend\n";
        let e = parse(text).unwrap_err();
        assert_eq!((e.line, e.column), (3, 7));
    }

    #[test]
    fn non_ideal_member_names_the_bracket() {
        let text = "algebra\n basis x y z\n [x, y] = z\nend\nfiltration\n ideal x, y, z\n ideal x, z\n ideal x\n ideal 0\nend\n";
        let err = parse(text).unwrap().build().unwrap_err();
        let Error::InvalidFiltration(report) = &err else {
            panic!("expected a filtration error, got {err:?}");
        };
        let msg = report.messages().join("\n");
        assert!(msg.contains("[y, x] = -z"), "{msg}");
    }

    #[test]
    fn repeats_and_comments() {
        let text = "# ax+b\nalgebra\n basis x y\n [x, y] = y # the bracket\nend\nfiltration\n ideal x, y repeat 2\n ideal y\n ideal 0\nend\n";
        let file = parse(text).unwrap();
        assert_eq!(file.filtration[0].repeat, 2);
        let p = file.build().unwrap();
        assert_eq!(p.algebra.filtration().len(), 3);
        assert_eq!(parse(&file.to_string()).unwrap(), file);
    }

    #[test]
    fn from_algebra_round_trips() {
        let p = builtin("heisenberg").unwrap();
        let file = ProblemFile::from_algebra(&p.algebra);
        let rebuilt = parse(&file.to_string()).unwrap().build().unwrap();
        assert_eq!(rebuilt.algebra, p.algebra);
    }

    #[test]
    fn structural_errors() {
        assert!(parse("filtration\nend\n").is_err());
        assert!(parse("algebra\n basis x\n").is_err());
        assert!(parse("algebra\n basis x x\nend\n").is_err());
        let dup = "algebra\n basis x y\n [x, y] = y\n [y, x] = -y\nend\nfiltration\n ideal x, y\n ideal 0\nend\n";
        assert_eq!(parse(dup).unwrap_err().line, 4);
        let short = "algebra\n basis x y\nend\nfiltration\n ideal x, y\n ideal 0\nend\nfunctional f = 1\n";
        assert_eq!(parse(short).unwrap_err().line, 8);
    }

    #[test]
    fn open_subalgebra_is_reported() {
        let text = "algebra\n basis x y z\n [x, y] = z\nend\nfiltration\n ideal x, y, z\n ideal y, z\n ideal z\n ideal 0\nend\nsubalgebra h = x, y\n";
        let err = parse(text).unwrap().build().unwrap_err();
        assert!(matches!(err, Error::InvalidSubalgebra { .. }), "{err:?}");
    }
}
