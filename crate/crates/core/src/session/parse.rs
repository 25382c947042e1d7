use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Coeff, ModuleElement, Monomial, OrderSpec, PolyRing, Polynomial, PrimeField, Term, DEFAULT_CHARACTERISTIC};

pub const DEFAULT_TRUNCATION: u32 = 12;
pub const DEFAULT_MAX_HOMDEG: usize = 8;
pub const DEFAULT_REGULARITY_BOUND: i64 = 10;

pub const COMMANDS: &[&str] = &[
    "purity",
    "betti",
    "hilbert",
    "fstar",
    "hk",
    "equigen",
    "tangent_cone",
    "invariants",
    "cm_purity",
    "pdim",
    "filtration",
    "koszul_fp",
    "poincare",
    "resolution",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SessionFlavor {
    Local,
    Graded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionOptions {
    pub characteristic: u64,
    pub truncation: u32,
    pub max_homdeg: usize,
    pub regularity_bound: i64,
}

impl Default for SessionOptions {
    fn default() -> Self {
        SessionOptions {
            characteristic: DEFAULT_CHARACTERISTIC as u64,
            truncation: DEFAULT_TRUNCATION,
            max_homdeg: DEFAULT_MAX_HOMDEG,
            regularity_bound: DEFAULT_REGULARITY_BOUND,
        }
    }
}

/// Command-line values that take precedence over the session file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub characteristic: Option<u64>,
    pub truncation: Option<u32>,
    pub max_homdeg: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct FreeDecl {
    pub rank: usize,
    pub twists: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct SubmoduleDecl {
    pub free: String,
    pub generators: Vec<ModuleElement>,
    pub text: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct ModuleDecl {
    pub free: String,
    pub submodule: Option<String>,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub module: String,
    pub command: String,
    pub line: usize,
}

/// A validated session.
#[derive(Clone, Debug)]
pub struct Session {
    pub options: SessionOptions,
    pub vars: Vec<String>,
    pub flavor: SessionFlavor,
    pub ideal_name: Option<String>,
    pub ideal: Vec<Polynomial>,
    pub ideal_text: Vec<String>,
    pub fibre_vars: Vec<String>,
    pub fibre_ideal: Vec<Polynomial>,
    pub fibre_text: Vec<String>,
    /// The ring of all variables, local or global order by flavor.
    pub ring: PolyRing,
    pub frees: BTreeMap<String, FreeDecl>,
    pub submodules: BTreeMap<String, SubmoduleDecl>,
    pub modules: BTreeMap<String, ModuleDecl>,
    pub analyses: Vec<Analysis>,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A piece of a line together with its 1-based starting column.
#[derive(Clone, Copy, Debug)]
struct Span<'a> {
    text: &'a str,
    column: usize,
}

impl<'a> Span<'a> {
    fn trim(self) -> Span<'a> {
        let lead = self.text.len() - self.text.trim_start().len();
        Span {
            text: self.text.trim(),
            column: self.column + self.text[..lead].chars().count(),
        }
    }

    fn split_once(self, pat: char) -> Option<(Span<'a>, Span<'a>)> {
        let i = self.text.find(pat)?;
        let left = Span { text: &self.text[..i], column: self.column };
        let right = Span {
            text: &self.text[i + pat.len_utf8()..],
            column: self.column + self.text[..=i].chars().count(),
        };
        Some((left, right))
    }

    /// Split on commas that are not nested in brackets or parentheses.
    fn split_top(self) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        let mut col = self.column;
        let mut start_col = col;
        for (i, ch) in self.text.char_indices() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                ',' if depth == 0 => {
                    out.push(Span { text: &self.text[start..i], column: start_col });
                    start = i + 1;
                    start_col = col + 1;
                }
                _ => {}
            }
            col += 1;
        }
        out.push(Span { text: &self.text[start..], column: start_col });
        out.into_iter().map(|s| s.trim()).collect()
    }

    fn words(self) -> Vec<Span<'a>> {
        let mut out = Vec::new();
        let mut col = self.column;
        let mut cur: Option<(usize, usize)> = None;
        for (i, ch) in self.text.char_indices() {
            if ch.is_whitespace() {
                if let Some((s, c)) = cur.take() {
                    out.push(Span { text: &self.text[s..i], column: c });
                }
            } else if cur.is_none() {
                cur = Some((i, col));
            }
            col += 1;
        }
        if let Some((s, c)) = cur {
            out.push(Span { text: &self.text[s..], column: c });
        }
        out
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Recursive-descent parser for polynomial expressions over a ring.
struct PolyParser<'a> {
    ring: &'a PolyRing,
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> PolyParser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        perr(self.line, self.column + self.pos, message)
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

    fn expr(&mut self) -> Result<Polynomial> {
        let r = self.ring;
        let mut acc = Polynomial::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { r.psub(&acc, &t) } else { r.padd(&acc, &t) };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.ring.pmul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(self.ring.ppow(&base, e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| perr(self.line, self.column + start, "integer too large"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let f = self.ring.field();
                let c: Coeff = (v % f.modulus() as u64) as Coeff;
                Ok(self.ring.poly_from_coeffs(vec![(c, Monomial::one(self.ring.nvars()))]))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() && is_ident_char(self.chars[self.pos]) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.ring.var_index(&name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => Err(perr(self.line, self.column + start, format!("unknown variable `{name}`"))),
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn parse_poly(ring: &PolyRing, span: Span, line: usize) -> Result<Polynomial> {
    let mut p = PolyParser {
        ring,
        chars: span.text.chars().collect(),
        pos: 0,
        line,
        column: span.column,
    };
    if span.text.trim().is_empty() {
        return Err(perr(line, span.column, "empty expression"));
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

/// Parse a polynomial in the given ring; used by tests and examples.
pub fn parse_polynomial(ring: &PolyRing, text: &str) -> Result<Polynomial> {
    parse_poly(ring, Span { text, column: 1 }, 1)
}

fn parse_vector(ring: &PolyRing, span: Span, line: usize, rank: usize) -> Result<ModuleElement> {
    let s = span.trim();
    if !s.text.starts_with('[') || !s.text.ends_with(']') {
        return Err(perr(line, s.column, "expected a bracketed vector `[f1, f2, …]`"));
    }
    let inner = Span {
        text: &s.text[1..s.text.len() - 1],
        column: s.column + 1,
    };
    let entries = inner.split_top();
    if entries.len() != rank {
        return Err(perr(
            line,
            s.column,
            format!("vector has {} entries, the free module has rank {rank}", entries.len()),
        ));
    }
    let mut terms = Vec::new();
    for (c, e) in entries.iter().enumerate() {
        let p = parse_poly(ring, *e, line)?;
        if p.constant_term() != 0 {
            return Err(perr(
                line,
                e.column,
                "N ⊆ mF required: entry has a nonzero constant term",
            ));
        }
        terms.extend(p.terms().iter().map(|(a, m)| Term { coeff: *a, mon: m.clone(), comp: c }));
    }
    Ok(ring.element_from_terms(terms))
}

enum Line<'a> {
    Char(Span<'a>),
    Vars(Vec<Span<'a>>),
    Flavor(Span<'a>),
    Ideal(Span<'a>, Span<'a>),
    Fibre(Vec<Span<'a>>, Option<Span<'a>>),
    Free(Span<'a>, Span<'a>),
    Submodule(Span<'a>, Span<'a>, Span<'a>),
    Module(Span<'a>, Span<'a>, Option<Span<'a>>),
    Option(Span<'a>, Span<'a>),
    Analyze(Span<'a>, Span<'a>),
}

fn expect_name(s: Span, line: usize, what: &str) -> Result<()> {
    if s.text.is_empty() || !s.text.chars().all(is_ident_char) {
        return Err(perr(line, s.column, format!("expected {what}")));
    }
    Ok(())
}

fn classify(line: usize, raw: &str) -> Result<Option<Line<'_>>> {
    let body = raw.split('#').next().unwrap_or("");
    let span = Span { text: body, column: 1 }.trim();
    if span.text.is_empty() {
        return Ok(None);
    }
    let words = span.words();
    let kw = words[0];
    let rest = Span {
        text: &span.text[kw.text.len()..],
        column: kw.column + kw.text.chars().count(),
    }
    .trim();
    let head_colon = |what: &str| -> Result<(Span, Span)> {
        let (h, b) = rest
            .split_once(':')
            .ok_or_else(|| perr(line, rest.column, format!("expected `:` after the {what} name")))?;
        let h = h.trim();
        expect_name(h, line, &format!("a {what} name"))?;
        Ok((h, b.trim()))
    };
    Ok(Some(match kw.text {
        "char" => Line::Char(rest),
        "vars" => Line::Vars(rest.words()),
        "flavor" => Line::Flavor(rest),
        "ideal" => {
            let (h, b) = head_colon("ideal")?;
            Line::Ideal(h, b)
        }
        "fibre" | "fiber" => match rest.split_once(':') {
            Some((v, b)) => Line::Fibre(v.trim().words(), Some(b.trim())),
            None => Line::Fibre(rest.words(), None),
        },
        "free" => {
            let (h, b) = head_colon("free module")?;
            Line::Free(h, b)
        }
        "submodule" => {
            let (h, b) = rest
                .split_once(':')
                .ok_or_else(|| perr(line, rest.column, "expected `submodule N in F : …`"))?;
            let hw = h.trim().words();
            if hw.len() != 3 || hw[1].text != "in" {
                return Err(perr(line, h.column, "expected `submodule N in F : …`"));
            }
            expect_name(hw[0], line, "a submodule name")?;
            Line::Submodule(hw[0], hw[2], b.trim())
        }
        "module" => {
            let (h, b) = rest
                .split_once('=')
                .ok_or_else(|| perr(line, rest.column, "expected `module M = F / N`"))?;
            let h = h.trim();
            expect_name(h, line, "a module name")?;
            match b.split_once('/') {
                Some((f, n)) => Line::Module(h, f.trim(), Some(n.trim())),
                None => Line::Module(h, b.trim(), None),
            }
        }
        "option" => {
            let w = rest.words();
            if w.len() != 2 {
                return Err(perr(line, rest.column, "expected `option NAME VALUE`"));
            }
            Line::Option(w[0], w[1])
        }
        "analyze" => {
            let (h, b) = head_colon("module")?;
            Line::Analyze(h, b)
        }
        other => return Err(perr(line, kw.column, format!("unknown directive `{other}`"))),
    }))
}

fn parse_num<T: std::str::FromStr>(s: Span, line: usize, what: &str) -> Result<T> {
    s.text
        .parse()
        .map_err(|_| perr(line, s.column, format!("expected {what}, found `{}`", s.text)))
}

pub fn parse_session(text: &str) -> Result<Session> {
    parse_session_with(text, &Overrides::default())
}

/// Parse and validate a session; `overrides` replace the corresponding
/// `char` and `option` lines.
pub fn parse_session_with(text: &str, overrides: &Overrides) -> Result<Session> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if let Some(l) = classify(i + 1, raw)? {
            lines.push((i + 1, l));
        }
    }
    let mut options = SessionOptions::default();
    let mut vars: Option<Vec<String>> = None;
    let mut flavor = SessionFlavor::Local;
    for (ln, l) in &lines {
        match l {
            Line::Char(s) => {
                let p: u64 = parse_num(*s, *ln, "a prime")?;
                if !is_prime(p) || p >= 1 << 31 {
                    return Err(perr(*ln, s.column, format!("characteristic {p} is not a prime below 2^31")));
                }
                options.characteristic = p;
            }
            Line::Vars(ws) => {
                if vars.is_some() {
                    return Err(perr(*ln, 1, "duplicate `vars` line"));
                }
                if ws.is_empty() {
                    return Err(perr(*ln, 1, "`vars` needs at least one variable"));
                }
                let mut names: Vec<String> = Vec::new();
                for w in ws {
                    expect_name(*w, *ln, "a variable name")?;
                    if !w.text.starts_with(|c: char| c.is_alphabetic() || c == '_') {
                        return Err(perr(*ln, w.column, "variable names start with a letter"));
                    }
                    if names.iter().any(|n| n == w.text) {
                        return Err(perr(*ln, w.column, format!("duplicate variable `{}`", w.text)));
                    }
                    names.push(w.text.to_string());
                }
                vars = Some(names);
            }
            Line::Flavor(s) => {
                flavor = match s.text {
                    "local" => SessionFlavor::Local,
                    "graded" => SessionFlavor::Graded,
                    other => return Err(perr(*ln, s.column, format!("unknown flavor `{other}`"))),
                }
            }
            Line::Option(k, v) => match k.text {
                "truncation" => options.truncation = parse_num(*v, *ln, "a truncation")?,
                "max_homdeg" => options.max_homdeg = parse_num(*v, *ln, "a homological degree")?,
                "regularity_bound" => options.regularity_bound = parse_num(*v, *ln, "an integer")?,
                other => return Err(perr(*ln, k.column, format!("unknown option `{other}`"))),
            },
            _ => {}
        }
    }
    if let Some(p) = overrides.characteristic {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        options.characteristic = p;
    }
    if let Some(t) = overrides.truncation {
        options.truncation = t;
    }
    if let Some(d) = overrides.max_homdeg {
        options.max_homdeg = d;
    }
    let Some(vars) = vars else {
        let first = lines
            .iter()
            .find(|(_, l)| !matches!(l, Line::Char(_) | Line::Flavor(_) | Line::Option(..)))
            .map(|(ln, _)| *ln);
        return Err(match first {
            Some(ln) => perr(ln, 1, "missing `vars` line: variables must be declared before this line"),
            None => perr(text.lines().count().max(1), 1, "missing `vars` line"),
        });
    };
    let field = PrimeField::new(options.characteristic)?;
    let order = match flavor {
        SessionFlavor::Local => OrderSpec::local(),
        SessionFlavor::Graded => OrderSpec::global(),
    };
    let base = PolyRing::new(field, vars.clone(), order.clone());

    let mut ideal_name = None;
    let mut ideal = Vec::new();
    let mut ideal_text = Vec::new();
    let mut fibre_vars: Vec<String> = Vec::new();
    let mut fibre_ideal = Vec::new();
    let mut fibre_text = Vec::new();
    let mut ring: Option<PolyRing> = None;
    let mut frees = BTreeMap::new();
    let mut submodules = BTreeMap::new();
    let mut modules: BTreeMap<String, ModuleDecl> = BTreeMap::new();
    let mut analyses = Vec::new();
    let mut seen_vars = false;
    for (ln, l) in &lines {
        let ln = *ln;
        match l {
            Line::Vars(_) => seen_vars = true,
            Line::Ideal(h, b) => {
                if !seen_vars {
                    return Err(perr(ln, 1, "`ideal` must follow the `vars` line"));
                }
                if ring.is_some() || ideal_name.is_some() {
                    return Err(perr(ln, 1, "the ideal must be declared once, before any module"));
                }
                ideal_name = Some(h.text.to_string());
                for g in b.split_top() {
                    ideal.push(parse_poly(&base, g, ln)?);
                    ideal_text.push(g.text.to_string());
                }
            }
            Line::Fibre(ws, b) => {
                if ring.is_some() || !fibre_vars.is_empty() {
                    return Err(perr(ln, 1, "`fibre` must appear once, before any module"));
                }
                if flavor != SessionFlavor::Local {
                    return Err(perr(ln, 1, "`fibre` needs flavor local"));
                }
                if ws.is_empty() {
                    return Err(perr(ln, 1, "`fibre` needs at least one variable"));
                }
                for w in ws {
                    expect_name(*w, ln, "a variable name")?;
                    if vars.iter().chain(&fibre_vars).any(|n| n == w.text) {
                        return Err(perr(ln, w.column, format!("duplicate variable `{}`", w.text)));
                    }
                    fibre_vars.push(w.text.to_string());
                }
                let second = PolyRing::new(field, fibre_vars.clone(), order.clone());
                if let Some(b) = b {
                    for g in b.split_top() {
                        fibre_ideal.push(parse_poly(&second, g, ln)?);
                        fibre_text.push(g.text.to_string());
                    }
                }
            }
            Line::Free(h, b) => {
                ring.get_or_insert_with(|| {
                    let mut all = vars.clone();
                    all.extend(fibre_vars.iter().cloned());
                    PolyRing::new(field, all, order.clone())
                });
                let ws = b.words();
                if ws.len() < 2 || ws[0].text != "rank" {
                    return Err(perr(ln, b.column, "expected `rank r [twists t1 … tr]`"));
                }
                let rank: usize = parse_num(ws[1], ln, "a rank")?;
                let twists = if ws.len() > 2 {
                    if ws[2].text != "twists" {
                        return Err(perr(ln, ws[2].column, "expected `twists`"));
                    }
                    let t: Vec<i64> = ws[3..]
                        .iter()
                        .map(|w| parse_num(*w, ln, "an integer twist"))
                        .collect::<Result<_>>()?;
                    if t.len() != rank {
                        return Err(perr(ln, ws[2].column, format!("expected {rank} twists, found {}", t.len())));
                    }
                    if flavor == SessionFlavor::Local && t.iter().any(|&x| x != 0) {
                        return Err(perr(ln, ws[2].column, "twists need flavor graded"));
                    }
                    t
                } else {
                    vec![0; rank]
                };
                frees.insert(h.text.to_string(), FreeDecl { rank, twists });
            }
            Line::Submodule(n, f, b) => {
                let decl = frees
                    .get(f.text)
                    .ok_or_else(|| perr(ln, f.column, format!("unknown free module `{}`", f.text)))?;
                let full = ring.as_ref().expect("set with the free module");
                let mut gens = Vec::new();
                let mut text = Vec::new();
                for g in b.split_top() {
                    gens.push(parse_vector(full, g, ln, decl.rank)?);
                    text.push(g.text.to_string());
                }
                submodules.insert(
                    n.text.to_string(),
                    SubmoduleDecl {
                        free: f.text.to_string(),
                        generators: gens,
                        text,
                    },
                );
            }
            Line::Module(m, f, n) => {
                if !frees.contains_key(f.text) {
                    return Err(perr(ln, f.column, format!("unknown free module `{}`", f.text)));
                }
                if let Some(n) = n {
                    let sub = submodules
                        .get(n.text)
                        .ok_or_else(|| perr(ln, n.column, format!("unknown submodule `{}`", n.text)))?;
                    if sub.free != f.text {
                        return Err(perr(ln, n.column, format!("`{}` is not a submodule of `{}`", n.text, f.text)));
                    }
                }
                modules.insert(
                    m.text.to_string(),
                    ModuleDecl {
                        free: f.text.to_string(),
                        submodule: n.map(|n| n.text.to_string()),
                    },
                );
            }
            Line::Analyze(m, b) => {
                if !modules.contains_key(m.text) {
                    return Err(perr(ln, m.column, format!("unknown module `{}`", m.text)));
                }
                for c in b.split_top() {
                    if !COMMANDS.contains(&c.text) {
                        return Err(perr(ln, c.column, format!("unknown analysis `{}`", c.text)));
                    }
                    analyses.push(Analysis {
                        module: m.text.to_string(),
                        command: c.text.to_string(),
                        line: ln,
                    });
                }
            }
            Line::Char(_) | Line::Flavor(_) | Line::Option(..) => {}
        }
    }
    let ring = ring.unwrap_or_else(|| {
        let mut all = vars.clone();
        all.extend(fibre_vars.iter().cloned());
        PolyRing::new(field, all, order)
    });
    Ok(Session {
        options,
        vars,
        flavor,
        ideal_name,
        ideal,
        ideal_text,
        fibre_vars,
        fibre_ideal,
        fibre_text,
        ring,
        frees,
        submodules,
        modules,
        analyses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = "char 32003
vars X Y Z
flavor local
ideal I : X*Z - Y^3, Y*Z - X^4, Z^2 - X^3*Y^2
free F : rank 1
submodule N in F : [X]
module M = F / N
option truncation 12
option max_homdeg 8
analyze M : purity, betti, hilbert, fstar, hk, equigen
";

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_session(text) {
            Err(Error::Parse { line, column, message }) => (line, column, message),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn example_session_parses() {
        let s = parse_session(EXAMPLE).unwrap();
        assert_eq!(s.vars, vec!["X", "Y", "Z"]);
        assert_eq!(s.ideal.len(), 3);
        assert_eq!(s.modules.len(), 1);
        assert_eq!(s.analyses.len(), 6);
        assert_eq!(s.options.truncation, 12);
    }

    #[test]
    fn missing_vars_names_the_line() {
        let (line, _, msg) = parse_err("char 7\nideal I : x^2\n");
        assert_eq!(line, 2);
        assert!(msg.contains("vars"));
    }

    #[test]
    fn unit_entry_is_rejected() {
        let (line, column, msg) = parse_err("vars x\nfree F : rank 1\nsubmodule N in F : [1 + x]\n");
        assert_eq!((line, column), (3, 21));
        assert!(msg.contains("N ⊆ mF required"));
    }

    #[test]
    fn non_prime_characteristic() {
        let (line, _, msg) = parse_err("char 12\nvars x\n");
        assert_eq!(line, 1);
        assert!(msg.contains("not a prime"));
    }

    #[test]
    fn unknown_identifier_has_position() {
        let (line, column, msg) = parse_err("vars x y\nideal I : x^2 + w\n");
        assert_eq!((line, column), (2, 17));
        assert!(msg.contains("`w`"));
    }

    #[test]
    fn polynomial_syntax() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), vec!["x".into(), "y".into()], OrderSpec::global());
        let p = parse_polynomial(&r, "(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(r.fmt_poly(&p), "x^2 + y^2");
        assert!(parse_polynomial(&r, "x +").is_err());
    }
}
