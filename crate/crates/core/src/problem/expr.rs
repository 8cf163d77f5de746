//! Line lexer and the expression grammar shared by the file format and the
//! command line.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := number | number '*' word | word
//! word   := factor ('*' factor)*
//! factor := name ('^' digits)?
//! ```

use std::fmt;

use crate::exact::{int, parse_rational, vector, Rational, Vector};
use crate::pbw::UeaElement;

/// Parse failure with a 1-based source position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Num(String),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Num(s) => write!(f, "{s:?}"),
            Tok::Sym(c) => write!(f, "'{c}'"),
        }
    }
}

/// Tokens of one line with their columns, comments removed.
#[derive(Clone, Debug)]
pub struct Tokens {
    line: usize,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

pub fn tokenize(line_no: usize, text: &str) -> Result<Tokens, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                let den = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if den == i {
                    return Err(ParseError::new(line_no, i + 1, "expected a denominator after '/'"));
                }
            }
            toks.push((col, Tok::Num(chars[start..i].iter().collect())));
        } else if "[],=+-*^".contains(c) {
            toks.push((col, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::new(line_no, col, format!("unexpected character '{c}'")));
        }
    }
    Ok(Tokens {
        line: line_no,
        toks,
        pos: 0,
        end_col: chars.len() + 1,
    })
}

impl Tokens {
    pub fn is_empty(&self) -> bool {
        self.toks.is_empty()
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    pub fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.column(), message)
    }

    pub fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    pub fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of line")),
        }
    }

    pub fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("a name")),
        }
    }

    pub fn keyword(&mut self, word: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == word) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn finish(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of line"))
        }
    }

    pub fn number(&mut self) -> Result<Rational, ParseError> {
        let col = self.column();
        match self.peek() {
            Some(Tok::Num(s)) => {
                let s = s.clone();
                self.pos += 1;
                parse_rational(&s).map_err(|e| ParseError::new(self.line, col, e.to_string()))
            }
            _ => Err(self.unexpected("a number")),
        }
    }

    pub fn signed_number(&mut self) -> Result<Rational, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let x = self.number()?;
        Ok(if negative { -x } else { x })
    }

    pub fn count(&mut self) -> Result<usize, ParseError> {
        let col = self.column();
        match self.peek() {
            Some(Tok::Num(s)) if !s.contains('/') => {
                let s = s.clone();
                self.pos += 1;
                s.parse().map_err(|_| ParseError::new(self.line, col, "count out of range"))
            }
            _ => Err(self.unexpected("a nonnegative integer")),
        }
    }

    /// An element of U(𝔤) in the basis `names`; stops before `,`, `]` or
    /// end of line.
    pub fn uea(&mut self, names: &[String]) -> Result<UeaElement, ParseError> {
        let mut out = UeaElement::zero();
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') {
                false
            } else if first {
                false
            } else {
                break;
            };
            first = false;
            let (coef, word) = self.term(names)?;
            out.add_term(word, if negative { -coef } else { coef });
            if !matches!(self.peek(), Some(Tok::Sym('+' | '-'))) {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self, names: &[String]) -> Result<(Rational, Vec<usize>), ParseError> {
        let coef = if matches!(self.peek(), Some(Tok::Num(_))) {
            let c = self.number()?;
            if !self.eat('*') {
                return Ok((c, Vec::new()));
            }
            c
        } else {
            int(1)
        };
        let mut word = Vec::new();
        loop {
            let col = self.column();
            let name = self.ident()?;
            let idx = names
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| ParseError::new(self.line, col, format!("unknown basis element {name:?}")))?;
            let power = if self.eat('^') { self.count()? } else { 1 };
            word.extend(std::iter::repeat(idx).take(power));
            if !self.eat('*') {
                break;
            }
        }
        Ok((coef, word))
    }

    /// A vector of 𝔤: a linear expression such as `2*x - 1/2*y`, or `0`.
    pub fn linear(&mut self, names: &[String]) -> Result<Vector, ParseError> {
        let col = self.column();
        let lone_zero = matches!(self.peek(), Some(Tok::Num(s)) if s == "0")
            && matches!(self.toks.get(self.pos + 1), None | Some((_, Tok::Sym(',' | ']'))));
        if lone_zero {
            self.pos += 1;
            return Ok(vector::zeros(names.len()));
        }
        let u = self.uea(names)?;
        let mut v = vector::zeros(names.len());
        for (word, c) in u.terms() {
            match word {
                [i] => v[*i] += c,
                [] => {
                    return Err(ParseError::new(
                        self.line,
                        col,
                        "constant term in a linear expression (only `0` is allowed)",
                    ))
                }
                _ => return Err(ParseError::new(self.line, col, "product of basis elements in a linear expression")),
            }
        }
        Ok(v)
    }
}

/// Parses a whole string as a linear expression over `names`.
pub fn parse_linear(names: &[String], text: &str) -> Result<Vector, ParseError> {
    let mut t = tokenize(1, text)?;
    let v = t.linear(names)?;
    t.finish()?;
    Ok(v)
}

/// Parses a whole string as an element of U(𝔤) over `names`.
pub fn parse_uea(names: &[String], text: &str) -> Result<UeaElement, ParseError> {
    let mut t = tokenize(1, text)?;
    if t.is_empty() {
        return Err(t.error("empty expression"));
    }
    let u = t.uea(names)?;
    t.finish()?;
    Ok(u)
}

/// Comma-separated rationals, e.g. `0, 1/2, -3`.
pub fn parse_values(text: &str) -> Result<Vector, ParseError> {
    let mut t = tokenize(1, text)?;
    let mut out = vec![t.signed_number()?];
    while t.eat(',') {
        out.push(t.signed_number()?);
    }
    t.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    #[test]
    fn linear_expressions() {
        assert_eq!(parse_linear(&names(), "2*x - 1/2*y").unwrap(), vec![int(2), rat(-1, 2), int(0)]);
        assert_eq!(parse_linear(&names(), "-z + z + y").unwrap(), vec![int(0), int(1), int(0)]);
        assert_eq!(parse_linear(&names(), "0").unwrap(), vec![int(0); 3]);
        let e = parse_linear(&names(), "x + w").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
        assert!(parse_linear(&names(), "x + 3").is_err());
        assert!(parse_linear(&names(), "x*y").is_err());
    }

    #[test]
    fn uea_expressions() {
        let u = parse_uea(&names(), "y*x - 2*z^2 + 3").unwrap();
        assert_eq!(u.coefficient(&[1, 0]), int(1));
        assert_eq!(u.coefficient(&[2, 2]), int(-2));
        assert_eq!(u.coefficient(&[]), int(3));
        assert!(parse_uea(&names(), "").is_err());
        assert!(parse_uea(&names(), "x y").is_err());
    }

    #[test]
    fn value_lists() {
        assert_eq!(parse_values("0, -1/2, 3").unwrap(), vec![int(0), rat(-1, 2), int(3)]);
        assert!(parse_values("1,,2").is_err());
        assert!(parse_values("1/0").is_err());
    }
}
