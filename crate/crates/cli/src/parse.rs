//! Ideal files:
//!
//! ```text
//! ring p=32749 vars=x0,x1,x2,x3
//! ideal:
//! x0*x3 - x1*x2
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::sync::Arc;

use csmcalc::{FieldSpec, Ideal, Monomial, MonomialOrder, Polynomial, Ring};

use crate::error::CliError;

/// A parsed ideal file.
#[derive(Clone, Debug)]
pub struct SchemeInput {
    pub ideal: Ideal,
    /// Source line of each generator.
    pub lines: Vec<usize>,
}

impl SchemeInput {
    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    pub fn n(&self) -> usize {
        self.ring().n()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.ideal.degrees().unwrap_or_default()
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses an ideal file. `prime` overrides the modulus given in the header.
pub fn parse_ideal_file(text: &str, prime: Option<u64>) -> Result<SchemeInput, CliError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));

    let (hline, header) = lines
        .next()
        .ok_or_else(|| syntax(1, 1, "empty input, expected `ring p=<prime> vars=<list>`"))?;
    let (p, names) = parse_header(hline, header)?;
    let p = prime.unwrap_or(p);
    let field = FieldSpec::new(p).map_err(|_| CliError::NotPrime(p))?;
    if names.len() < 2 {
        return Err(syntax(hline, 1, "at least two variables are needed"));
    }
    let ring = Ring::new(field, names, false, MonomialOrder::GrevLex)
        .map_err(|e| syntax(hline, 1, e.to_string()))?;

    match lines.next() {
        Some((_, l)) if l.trim() == "ideal:" => {}
        Some((i, l)) => {
            let col = l.find(|c: char| !c.is_whitespace()).unwrap_or(0) + 1;
            return Err(syntax(i, col, "expected `ideal:`"));
        }
        None => return Err(syntax(hline + 1, 1, "missing `ideal:` line")),
    }

    let mut gens = Vec::new();
    let mut src = Vec::new();
    for (i, l) in lines {
        let f = Parser::new(&ring, l, i).parse_line()?;
        if f.is_zero() {
            return Err(CliError::ZeroGenerator { line: i });
        }
        check_homogeneous(&ring, &f, i)?;
        gens.push(f);
        src.push(i);
    }
    let ideal = Ideal::new(&ring, gens).map_err(CliError::Core)?;
    Ok(SchemeInput { ideal, lines: src })
}

fn parse_header(line: usize, header: &str) -> Result<(u64, Vec<String>), CliError> {
    let mut words = header.split_whitespace();
    if words.next() != Some("ring") {
        return Err(syntax(line, 1, "expected `ring`"));
    }
    let mut p = None;
    let mut vars = None;
    for w in words {
        let col = header.find(w).unwrap_or(0) + 1;
        if let Some(v) = w.strip_prefix("p=") {
            p = Some(
                v.parse::<u64>()
                    .map_err(|_| syntax(line, col + 2, format!("bad prime `{v}`")))?,
            );
        } else if let Some(v) = w.strip_prefix("vars=") {
            let names: Vec<String> = v.split(',').map(|s| s.trim().to_string()).collect();
            for (k, name) in names.iter().enumerate() {
                let ok = name
                    .chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                    && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !ok || names[..k].contains(name) {
                    return Err(syntax(line, col + 5, format!("bad variable name `{name}`")));
                }
            }
            vars = Some(names);
        } else {
            return Err(syntax(line, col, format!("unexpected `{w}`")));
        }
    }
    let p = p.ok_or_else(|| syntax(line, header.len() + 1, "missing p=<prime>"))?;
    let vars = vars.ok_or_else(|| syntax(line, header.len() + 1, "missing vars=<list>"))?;
    Ok((p, vars))
}

fn check_homogeneous(ring: &Arc<Ring>, f: &Polynomial, line: usize) -> Result<(), CliError> {
    let Some(lead) = f.leading_term() else {
        return Ok(());
    };
    let want = lead.mono.degree();
    if let Some(bad) = f.terms().iter().find(|t| t.mono.degree() != want) {
        let term = Polynomial::monomial(ring, bad.mono, bad.coeff).to_string();
        return Err(CliError::Inhomogeneous {
            line,
            term,
            degree: bad.mono.degree(),
            expected: want,
        });
    }
    Ok(())
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Arc<Ring>, text: &str, line: usize) -> Self {
        Parser {
            ring,
            chars: text.chars().collect(),
            pos: 0,
            line,
        }
    }

    fn err(&self, message: impl Into<String>) -> CliError {
        syntax(self.line, self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_line(mut self) -> Result<Polynomial, CliError> {
        let f = self.expr()?;
        match self.peek() {
            None => Ok(f),
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, CliError> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, CliError> {
        let mut acc = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, CliError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, CliError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected a non-negative integer exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| syntax(self.line, start + 1, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<Polynomial, CliError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.ring.field().modulus() as u64;
                let value = self
                    .digits()
                    .bytes()
                    .fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p);
                Ok(Polynomial::constant(self.ring, value as i64))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.ring.names().iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::monomial(self.ring, Monomial::var(i), 1)),
                    None => Err(syntax(
                        self.line,
                        start + 1,
                        format!("unknown variable `{name}`"),
                    )),
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of line")),
        }
    }
}

/// Writes an ideal back in the file format.
pub fn render_ideal(ideal: &Ideal) -> String {
    let ring = ideal.ring();
    let mut out = format!(
        "ring p={} vars={}\nideal:\n",
        ring.field().modulus(),
        ring.names().join(",")
    );
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
