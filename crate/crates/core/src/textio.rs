//! Text rendering (polyform and index table) and a parser for polyform text.
//!
//! Polyform output looks like `-3*z -3*y +13*z^2 +17*x^6*y^-7*z^8`: the
//! constant term, when present, comes first without a leading `+`; unit
//! coefficients are omitted on non-constant terms. The zero polynomial
//! renders as `the NULL multinomial of arity N`.

use std::cmp::Reverse;
use std::fmt::{self, Write as _};

use crate::error::{Result, SprayError};
use crate::index::{Exponent, MultiIndex};
use crate::poly::{Backend, SparsePoly};

const NULL_PREFIX: &str = "the NULL multinomial of arity";

/// Rendering and parsing options.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormatOptions {
    /// Signed monomial list when true, index/value table when false.
    pub polyform: bool,
    /// Variable names; `None` means `x, y, z` up to arity 3 and `x1, x2, ...` beyond.
    pub variable_names: Option<Vec<String>>,
    /// Canonical term order instead of backend iteration order.
    pub sort_terms: bool,
}

impl Default for FormatOptions {
    fn default() -> Self {
        FormatOptions {
            polyform: true,
            variable_names: None,
            sort_terms: true,
        }
    }
}

impl FormatOptions {
    pub fn table() -> Self {
        FormatOptions {
            polyform: false,
            ..Self::default()
        }
    }

    pub fn with_names<S: Into<String>>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.variable_names = Some(names.into_iter().map(Into::into).collect());
        self
    }

    /// Names `a` through `z`.
    pub fn letters() -> Self {
        Self::default().with_names(('a'..='z').map(String::from))
    }

    pub fn names_for(&self, arity: usize) -> Result<Vec<String>> {
        match &self.variable_names {
            Some(names) if names.len() < arity => Err(SprayError::Format(format!(
                "{} variable names supplied for arity {arity}",
                names.len()
            ))),
            Some(names) => Ok(names[..arity].to_vec()),
            None if arity <= 3 => Ok(["x", "y", "z"][..arity]
                .iter()
                .map(|s| s.to_string())
                .collect()),
            None => Ok((1..=arity).map(|i| format!("x{i}")).collect()),
        }
    }
}

/// Canonical polyform order: by total degree, then lexicographically
/// descending so that `x` precedes `y`.
fn canonical_order(terms: &mut [(&MultiIndex, f64)]) {
    terms.sort_by_key(|(idx, _)| {
        let degree: i64 = idx.iter().map(|&e| i64::from(e)).sum();
        (degree, Reverse((*idx).clone()))
    });
}

fn write_coefficient(out: &mut String, v: f64) {
    // `{}` on f64 is the shortest representation that round-trips.
    let _ = write!(out, "{v}");
}

fn write_monomial(out: &mut String, idx: &MultiIndex, names: &[String]) {
    let mut first = true;
    for (name, &e) in names.iter().zip(idx.iter()) {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(name);
        if e != 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

fn render_polyform(terms: &[(&MultiIndex, f64)], names: &[String]) -> String {
    let mut out = String::new();
    let (constants, others): (Vec<_>, Vec<_>) = terms.iter().partition(|(idx, _)| idx.is_zero());
    for (_, v) in &constants {
        write_coefficient(&mut out, *v);
    }
    for (idx, v) in others {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push(if v < 0.0 { '-' } else { '+' });
        let magnitude = v.abs();
        if magnitude != 1.0 {
            write_coefficient(&mut out, magnitude);
            out.push('*');
        }
        write_monomial(&mut out, idx, names);
    }
    out
}

fn render_table(terms: &[(&MultiIndex, f64)], arity: usize) -> String {
    let cells: Vec<Vec<String>> = terms
        .iter()
        .map(|(idx, _)| idx.iter().map(|e| e.to_string()).collect())
        .collect();
    let values: Vec<String> = terms.iter().map(|(_, v)| format!("{v}")).collect();
    let widths: Vec<usize> = (0..arity)
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
        .collect();
    let value_width = values.iter().map(String::len).max().unwrap_or(0).max(4);
    let row_width = widths.iter().map(|w| w + 1).sum::<usize>() + 3 + 1 + value_width;

    let mut out = format!("{:>row_width$}\n", "val");
    for (row, value) in cells.iter().zip(&values) {
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(out, " {cell:>w$}");
        }
        let _ = writeln!(out, "  = {value:>value_width$}");
    }
    out.pop();
    out
}

/// Renders `p` according to `opts`.
pub fn render(p: &SparsePoly, opts: &FormatOptions) -> Result<String> {
    let names = opts.names_for(p.arity())?;
    if p.is_zero() {
        return Ok(format!("{NULL_PREFIX} {}", p.arity()));
    }
    let mut terms: Vec<_> = p.iter().collect();
    if opts.sort_terms {
        if opts.polyform {
            canonical_order(&mut terms);
        } else {
            terms.sort_by(|a, b| a.0.cmp(b.0));
        }
    }
    Ok(if opts.polyform {
        render_polyform(&terms, &names)
    } else {
        render_table(&terms, p.arity())
    })
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = render(self, &FormatOptions::default()).map_err(|_| fmt::Error)?;
        f.write_str(&text)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(SprayError::parse(self.pos, msg))
    }

    fn digits(&mut self) -> usize {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        self.pos - start
    }

    fn number(&mut self) -> Result<f64> {
        let start = self.pos;
        let mut n = self.digits();
        if self.eat('.') {
            n += self.digits();
        }
        if n == 0 {
            return self.error("expected a number");
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            let mark = self.pos;
            self.bump();
            if !self.eat('+') {
                self.eat('-');
            }
            if self.digits() == 0 {
                self.pos = mark;
            }
        }
        let text = &self.src[start..self.pos];
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(SprayError::parse(start, format!("invalid number `{text}`"))),
        }
    }

    fn identifier(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn exponent(&mut self) -> Result<Exponent> {
        self.skip_ws();
        let parenthesised = self.eat('(');
        self.skip_ws();
        let start = self.pos;
        if !self.eat('-') {
            self.eat('+');
        }
        if self.digits() == 0 {
            return self.error("expected an integer exponent");
        }
        let text = &self.src[start..self.pos];
        let e = text
            .parse::<Exponent>()
            .map_err(|_| SprayError::parse(start, format!("exponent `{text}` out of range")))?;
        if parenthesised {
            self.skip_ws();
            if !self.eat(')') {
                return self.error("expected `)`");
            }
        }
        Ok(e)
    }

    /// One `*`-separated product of numbers and powers of variables.
    fn term(&mut self, arity: usize) -> Result<(MultiIndex, f64)> {
        let mut idx = MultiIndex::zeros(arity);
        let mut coef = 1.0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() || c == '.' => coef *= self.number()?,
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let start = self.pos;
                    let name = self.identifier();
                    let dim = self
                        .names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| SprayError::Name(name.to_string()))?;
                    self.skip_ws();
                    let e = if self.eat('^') { self.exponent()? } else { 1 };
                    let slot = &mut idx.as_mut_slice()[dim];
                    *slot = slot.checked_add(e).ok_or_else(|| {
                        SprayError::parse(start, format!("exponent of `{name}` out of range"))
                    })?;
                }
                Some(c) => return self.error(format!("unexpected `{c}`")),
                None => return self.error("unexpected end of input"),
            }
            self.skip_ws();
            if !self.eat('*') {
                return Ok((idx, coef));
            }
        }
    }
}

/// Parses polyform text into a polynomial of the given arity.
///
/// Accepts what [`render`] emits, plus spaces around signs and
/// parenthesised exponents such as `y^(-7)`.
pub fn parse(text: &str, arity: usize, opts: &FormatOptions) -> Result<SparsePoly> {
    parse_in(text, arity, opts, Backend::default())
}

pub fn parse_in(
    text: &str,
    arity: usize,
    opts: &FormatOptions,
    backend: Backend,
) -> Result<SparsePoly> {
    let names = opts.names_for(arity)?;
    let trimmed = text.trim();
    if let Some(rest) = trimmed.strip_prefix(NULL_PREFIX) {
        let stated: usize = rest
            .trim()
            .parse()
            .map_err(|_| SprayError::parse(NULL_PREFIX.len(), "expected an arity"))?;
        if stated != arity {
            return Err(SprayError::Arity {
                expected: arity,
                found: stated,
            });
        }
        return SparsePoly::empty(arity, backend);
    }

    let mut parser = Parser {
        src: text,
        pos: 0,
        names: &names,
    };
    let mut terms = Vec::new();
    parser.skip_ws();
    if parser.peek().is_none() {
        return parser.error("empty expression");
    }
    let mut sign = if parser.eat('-') {
        -1.0
    } else {
        parser.eat('+');
        1.0
    };
    loop {
        let (idx, coef) = parser.term(arity)?;
        terms.push((idx, sign * coef));
        parser.skip_ws();
        sign = match parser.bump() {
            None => break,
            Some('+') => 1.0,
            Some('-') => -1.0,
            Some(c) => {
                parser.pos -= c.len_utf8();
                return parser.error(format!("expected `+` or `-`, found `{c}`"));
            }
        };
    }
    SparsePoly::from_pairs(terms, arity, backend)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, arity: usize) -> SparsePoly {
        parse(text, arity, &FormatOptions::default()).unwrap()
    }

    #[test]
    fn renders_polyform() {
        let s = SparsePoly::from_terms(
            [[0, 0, 1], [0, 1, 0], [0, 0, 2], [1, 0, 0], [6, -7, 8]],
            &[-3.0, -3.0, 13.0, -3.0, 17.0],
            3,
            Backend::Hashed,
        )
        .unwrap();
        assert_eq!(s.to_string(), "-3*x -3*y -3*z +13*z^2 +17*x^6*y^-7*z^8");
        let cube = (SparsePoly::unit(3).unwrap() + SparsePoly::lone(1, 3).unwrap())
            .pow(2)
            .unwrap();
        assert_eq!(cube.to_string(), "1 +2*x +x^2");
        assert_eq!(
            SparsePoly::zero(3).unwrap().to_string(),
            "the NULL multinomial of arity 3"
        );
        assert_eq!((-SparsePoly::xyz(3).unwrap()).to_string(), "-x*y*z");
    }

    #[test]
    fn renders_table() {
        let k = SparsePoly::knight(2).unwrap();
        let t = render(&k, &FormatOptions::table()).unwrap();
        let lines: Vec<_> = t.lines().collect();
        assert_eq!(lines.len(), 9);
        assert_eq!(lines[0], "           val");
        assert!(lines.contains(&"  1  2  =    1"));
        assert!(lines.contains(&" -2 -1  =    1"));
        let s2 = SparsePoly::from_terms(
            [[6, -7, 8], [0, 0, 2], [1, 1, 3]],
            &[17.0, 11.0, -4.0],
            3,
            Backend::Hashed,
        )
        .unwrap();
        let t = render(&s2, &FormatOptions::table()).unwrap();
        assert_eq!(
            t,
            "            val\n 0  0 2  =   11\n 1  1 3  =   -4\n 6 -7 8  =   17"
        );
    }

    #[test]
    fn default_names() {
        let names = FormatOptions::default().names_for(4).unwrap();
        assert_eq!(names, vec!["x1", "x2", "x3", "x4"]);
        let err = FormatOptions::default().with_names(["a"]).names_for(2);
        assert!(matches!(err, Err(SprayError::Format(_))));
        assert!(render(
            &SparsePoly::unit(2).unwrap(),
            &FormatOptions::default().with_names(["a"])
        )
        .is_err());
    }

    #[test]
    fn parses_terms() {
        let want = SparsePoly::from_terms([[1, 1, 1]], &[-1.0], 3, Backend::Hashed).unwrap();
        assert_eq!(p("-x*y*z", 3), want);
        assert_eq!(p("1", 3), SparsePoly::unit(3).unwrap());
        assert_eq!(p("  x*y^3 + 2*x^2*y^2 + 3*x^3*y ", 2).num_terms(), 3);
        assert_eq!(p("17*x^6*y^-7*z^8", 3), p("17*x^6*y^(-7)*z^8", 3));
        assert_eq!(p("x*x", 1), p("x^2", 1));
        assert_eq!(p("x - x", 1), SparsePoly::zero(1).unwrap());
        assert_eq!(p("2.5e-3*x", 1).get(&[1]).unwrap(), 2.5e-3);
        assert_eq!(
            p("the NULL multinomial of arity 3", 3),
            SparsePoly::zero(3).unwrap()
        );
    }

    #[test]
    fn parse_errors() {
        let opts = FormatOptions::default();
        assert!(matches!(parse("x + w", 2, &opts), Err(SprayError::Name(n)) if n == "w"));
        assert!(matches!(parse("", 2, &opts), Err(SprayError::Parse { .. })));
        assert!(matches!(
            parse("x +", 2, &opts),
            Err(SprayError::Parse { .. })
        ));
        assert!(matches!(
            parse("x ^", 2, &opts),
            Err(SprayError::Parse { .. })
        ));
        assert!(matches!(
            parse("x y", 2, &opts),
            Err(SprayError::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            parse("x^(2", 2, &opts),
            Err(SprayError::Parse { .. })
        ));
        assert!(matches!(
            parse("x^99999999999", 1, &opts),
            Err(SprayError::Parse { .. })
        ));
        assert!(matches!(
            parse("the NULL multinomial of arity 2", 3, &opts),
            Err(SprayError::Arity { .. })
        ));
    }

    #[test]
    fn letters_for_cyclic_example() {
        let c = SparsePoly::cyclic_squares().unwrap();
        let text = render(&c, &FormatOptions::letters()).unwrap();
        assert!(text.contains("+a*b^2"));
        assert!(text.contains("+a^2*z"));
        assert!(text.contains("+y*z^2"));
        assert_eq!(parse(&text, 26, &FormatOptions::letters()).unwrap(), c);
    }
}
