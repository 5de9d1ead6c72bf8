//! Textual polynomial grammar, `.ideal` documents, JSON documents, and
//! Betti-table rendering.
//!
//! The `.ideal` format is deliberately diff-friendly: a ring header line,
//! optional `meta key value` lines, `#` comments, and one generator per
//! line. JSON documents carry a pinned `format_version`.
//!
//! Polynomial grammar (whitespace insensitive, no juxtaposition):
//!
//! ```text
//! expr   := [sign] term { sign term }
//! term   := factor { '*' factor }
//! factor := INT | VAR [ '^' INT ]
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::catalogue::{Component, CurveBundle, CurveType, IncidentPair, LiaisonData};
use crate::deform::{det3, DeformationFamily};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Poly;
use crate::resolution::BettiTable;
use crate::ring::{Ring, RingRef};
use crate::verifier::VerificationReport;

pub const FORMAT_VERSION: u32 = 1;

// ---------------------------------------------------------------------------
// polynomial parser

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(i128),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
}

struct Lexer<'a> {
    text: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
    ring: &'a RingRef,
}

impl<'a> Lexer<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            col: self.col,
            msg: msg.into(),
        }
    }

    fn bump(&mut self) {
        if self.text[self.pos] == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        self.pos += 1;
    }

    fn next_token(&mut self) -> Result<Option<(Tok, usize, usize)>> {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.bump();
        }
        if self.pos >= self.text.len() {
            return Ok(None);
        }
        let (line, col) = (self.line, self.col);
        let c = self.text[self.pos];
        let tok = match c {
            b'+' => {
                self.bump();
                Tok::Plus
            }
            b'-' => {
                self.bump();
                Tok::Minus
            }
            b'*' => {
                self.bump();
                Tok::Star
            }
            b'^' => {
                self.bump();
                Tok::Caret
            }
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
                    self.bump();
                }
                let s = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                let n: i128 = s
                    .parse()
                    .map_err(|_| self.err(format!("integer literal `{s}` is too large")))?;
                Tok::Int(n)
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.text.len()
                    && (self.text[self.pos].is_ascii_alphanumeric() || self.text[self.pos] == b'_')
                {
                    self.bump();
                }
                let name = std::str::from_utf8(&self.text[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Tok::Var(i),
                    None => return Err(self.err(format!("unknown variable `{name}`"))),
                }
            }
            other => return Err(self.err(format!("unexpected character `{}`", other as char))),
        };
        Ok(Some((tok, line, col)))
    }
}

/// Parses the textual grammar into a canonical polynomial, coefficients
/// reduced mod p.
pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Poly> {
    let mut lexer = Lexer {
        text: text.as_bytes(),
        pos: 0,
        line: 1,
        col: 1,
        ring,
    };
    let mut tokens: Vec<(Tok, usize, usize)> = Vec::new();
    while let Some(t) = lexer.next_token()? {
        tokens.push(t);
    }
    let end_pos = (lexer.line, lexer.col);
    let perr = |idx: usize, msg: &str| -> Error {
        let (line, col) = tokens.get(idx).map(|&(_, l, c)| (l, c)).unwrap_or(end_pos);
        Error::Parse {
            line,
            col,
            msg: msg.to_string(),
        }
    };

    let p = ring.field().modulus() as i128;
    let mut acc = Poly::zero(ring);
    let mut idx = 0usize;
    if tokens.is_empty() {
        return Err(perr(0, "empty polynomial"));
    }
    loop {
        // sign prefix
        let mut negative = false;
        while let Some((tok, _, _)) = tokens.get(idx) {
            match tok {
                Tok::Plus => idx += 1,
                Tok::Minus => {
                    negative = !negative;
                    idx += 1;
                }
                _ => break,
            }
        }
        // term: factor { '*' factor }
        let mut coeff: i128 = 1;
        let mut mono = crate::monomial::Monomial::one();
        loop {
            match tokens.get(idx) {
                Some((Tok::Int(n), _, _)) => {
                    coeff = coeff * (n % p) % p;
                    idx += 1;
                }
                Some((Tok::Var(v), _, _)) => {
                    let v = *v;
                    idx += 1;
                    let mut exp: u32 = 1;
                    if let Some((Tok::Caret, _, _)) = tokens.get(idx) {
                        idx += 1;
                        match tokens.get(idx) {
                            Some((Tok::Int(n), _, _)) => {
                                if *n < 0 || *n > 255 {
                                    return Err(perr(idx, "exponent out of range (0..=255)"));
                                }
                                exp = *n as u32;
                                idx += 1;
                            }
                            _ => return Err(perr(idx, "expected integer exponent after `^`")),
                        }
                    }
                    let total = mono.exp(v) + exp;
                    if total > 255 {
                        return Err(perr(idx, "exponent overflow in monomial"));
                    }
                    mono.set_exp(v, total);
                }
                _ => return Err(perr(idx, "expected a coefficient or variable")),
            }
            match tokens.get(idx) {
                Some((Tok::Star, _, _)) => idx += 1,
                _ => break,
            }
        }
        let signed = if negative { -coeff } else { coeff };
        let reduced = signed.rem_euclid(p) as i64;
        acc = acc.add(&Poly::term(ring, mono, reduced));

        match tokens.get(idx) {
            None => break,
            Some((Tok::Plus | Tok::Minus, _, _)) => continue,
            Some(_) => return Err(perr(idx, "expected `+` or `-` between terms")),
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// .ideal documents

/// A parsed `.ideal` file: ring description, metadata, generator text.
/// `parse(render(doc)) == doc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDocument {
    pub nvars: usize,
    pub characteristic: u64,
    pub metadata: BTreeMap<String, String>,
    pub generators: Vec<String>,
}

impl IdealDocument {
    pub fn from_ideal(ideal: &Ideal, metadata: BTreeMap<String, String>) -> IdealDocument {
        IdealDocument {
            nvars: ideal.ring().nvars(),
            characteristic: ideal.ring().field().modulus(),
            metadata,
            generators: ideal.gens().iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "ring x0..x{} char {} order grevlex\n",
            self.nvars - 1,
            self.characteristic
        ));
        for (k, v) in &self.metadata {
            out.push_str(&format!("meta {k} {v}\n"));
        }
        for g in &self.generators {
            out.push_str(g);
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<IdealDocument> {
        let mut nvars = None;
        let mut characteristic = None;
        let mut metadata = BTreeMap::new();
        let mut generators = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let err = |msg: String| Error::Parse {
                line: lineno + 1,
                col: 1,
                msg,
            };
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("ring ") {
                let parts: Vec<&str> = rest.split_whitespace().collect();
                if parts.len() != 5 || parts[1] != "char" || parts[3] != "order" {
                    return Err(err(format!("malformed ring header `{line}`")));
                }
                let range = parts[0];
                let (lo, hi) = range
                    .split_once("..")
                    .ok_or_else(|| err(format!("malformed variable range `{range}`")))?;
                if !lo.starts_with('x') || !hi.starts_with('x') {
                    return Err(err(format!("variables must be x0..xN, got `{range}`")));
                }
                let lo_n: usize = lo[1..]
                    .parse()
                    .map_err(|_| err(format!("bad variable `{lo}`")))?;
                let hi_n: usize = hi[1..]
                    .parse()
                    .map_err(|_| err(format!("bad variable `{hi}`")))?;
                if lo_n != 0 || hi_n < 1 {
                    return Err(err("variable range must start at x0".into()));
                }
                nvars = Some(hi_n + 1);
                characteristic = Some(
                    parts[2]
                        .parse::<u64>()
                        .map_err(|_| err(format!("bad characteristic `{}`", parts[2])))?,
                );
                if parts[4] != "grevlex" {
                    return Err(err(format!("unsupported order `{}`", parts[4])));
                }
                continue;
            }
            if let Some(rest) = line.strip_prefix("meta ") {
                match rest.split_once(' ') {
                    Some((k, v)) => {
                        metadata.insert(k.trim().to_string(), v.trim().to_string());
                    }
                    None => return Err(err(format!("malformed meta line `{line}`"))),
                }
                continue;
            }
            if nvars.is_none() {
                return Err(err("generator before ring header".into()));
            }
            generators.push(line.to_string());
        }
        let nvars = nvars.ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "missing ring header".into(),
        })?;
        Ok(IdealDocument {
            nvars,
            characteristic: characteristic.unwrap(),
            metadata,
            generators,
        })
    }

    pub fn ring(&self) -> Result<RingRef> {
        Ring::grevlex(self.nvars, self.characteristic)
    }

    pub fn to_ideal(&self) -> Result<(RingRef, Ideal)> {
        let ring = self.ring()?;
        let gens = self
            .generators
            .iter()
            .map(|g| parse_polynomial(&ring, g))
            .collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::new(&ring, gens)?;
        Ok((ring, ideal))
    }
}

// ---------------------------------------------------------------------------
// Betti rendering

/// Fixed-width grid in the display convention of the tables: rows labelled
/// 0..R, columns 0..c, `-` for zeros.
pub fn render_betti(table: &BettiTable) -> String {
    let mut out = String::new();
    out.push_str("    ");
    for c in 0..table.cols() {
        out.push_str(&format!("{c:>5}"));
    }
    out.push('\n');
    for r in 0..table.rows() {
        out.push_str(&format!("{r:>3} "));
        for c in 0..table.cols() {
            let b = table.entry(r, c);
            if b == 0 {
                out.push_str(&format!("{:>5}", "-"));
            } else {
                out.push_str(&format!("{b:>5}"));
            }
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BettiJson {
    pub format_version: u32,
    pub rows: usize,
    pub cols: usize,
    pub grid: Vec<Vec<u64>>,
}

impl BettiJson {
    pub fn from_table(table: &BettiTable) -> BettiJson {
        BettiJson {
            format_version: FORMAT_VERSION,
            rows: table.rows(),
            cols: table.cols(),
            grid: table.grid().to_vec(),
        }
    }

    pub fn to_table(&self) -> BettiTable {
        BettiTable::from_grid(self.grid.clone())
    }
}

// ---------------------------------------------------------------------------
// JSON bundle documents

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComponentJson {
    pub name: String,
    pub span_zero_vars: Vec<usize>,
    pub expected_degree: i64,
    pub expected_genus: i64,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairJson {
    pub a: usize,
    pub b: usize,
    pub expected_points: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LiaisonJson {
    pub gamma: Vec<String>,
    pub linker: Vec<String>,
    pub residual: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeformationJson {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub c: Vec<String>,
    pub g: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BundleJson {
    pub format_version: u32,
    pub curve_type: String,
    pub seed: u64,
    pub characteristic: u64,
    pub attempts_used: u32,
    pub components: Vec<ComponentJson>,
    pub union_generators: Vec<String>,
    pub pairs: Vec<PairJson>,
    pub liaison: Option<LiaisonJson>,
    pub deformation: Option<DeformationJson>,
}

fn render_polys(polys: &[Poly]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

fn parse_polys(ring: &RingRef, texts: &[String]) -> Result<Vec<Poly>> {
    texts.iter().map(|t| parse_polynomial(ring, t)).collect()
}

impl BundleJson {
    pub fn from_bundle(bundle: &CurveBundle) -> BundleJson {
        BundleJson {
            format_version: FORMAT_VERSION,
            curve_type: bundle.curve_type.tag().to_string(),
            seed: bundle.seed,
            characteristic: bundle.characteristic,
            attempts_used: bundle.attempts_used,
            components: bundle
                .components
                .iter()
                .map(|c| ComponentJson {
                    name: c.name.clone(),
                    span_zero_vars: c.span_zero_vars.clone(),
                    expected_degree: c.expected_degree,
                    expected_genus: c.expected_genus,
                    generators: render_polys(c.ideal.gens()),
                })
                .collect(),
            union_generators: render_polys(bundle.union_ideal.gens()),
            pairs: bundle
                .pairs
                .iter()
                .map(|p| PairJson {
                    a: p.a,
                    b: p.b,
                    expected_points: p.expected_points,
                })
                .collect(),
            liaison: bundle.liaison.as_ref().map(|l| LiaisonJson {
                gamma: render_polys(l.gamma.gens()),
                linker: render_polys(l.linker.gens()),
                residual: l.residual,
            }),
            deformation: bundle.deformation.as_ref().map(|d| DeformationJson {
                a: d.a.iter().map(|p| p.to_string()).collect(),
                b: d.b.iter().map(|p| p.to_string()).collect(),
                c: d.c.iter().map(|p| p.to_string()).collect(),
                g: d.g.to_string(),
            }),
        }
    }

    pub fn to_bundle(&self) -> Result<CurveBundle> {
        let curve_type = CurveType::parse(&self.curve_type)?;
        let ring = Ring::p5(self.characteristic)?;
        let components = self
            .components
            .iter()
            .map(|c| {
                Ok(Component {
                    name: c.name.clone(),
                    span_zero_vars: c.span_zero_vars.clone(),
                    ideal: Ideal::new(&ring, parse_polys(&ring, &c.generators)?)?,
                    expected_degree: c.expected_degree,
                    expected_genus: c.expected_genus,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let union_ideal = Ideal::new(&ring, parse_polys(&ring, &self.union_generators)?)?;
        let pairs = self
            .pairs
            .iter()
            .map(|p| IncidentPair {
                a: p.a,
                b: p.b,
                expected_points: p.expected_points,
            })
            .collect();
        let liaison = match &self.liaison {
            None => None,
            Some(l) => Some(LiaisonData {
                gamma: Ideal::new(&ring, parse_polys(&ring, &l.gamma)?)?,
                linker: Ideal::new(&ring, parse_polys(&ring, &l.linker)?)?,
                residual: l.residual,
            }),
        };
        let deformation = match &self.deformation {
            None => None,
            Some(d) => {
                let triple = |v: &Vec<String>| -> Result<[Poly; 3]> {
                    let polys = parse_polys(&ring, v)?;
                    if polys.len() != 3 {
                        return Err(Error::Other("deformation forms come in triples".into()));
                    }
                    Ok([polys[0].clone(), polys[1].clone(), polys[2].clone()])
                };
                let a = triple(&d.a)?;
                let b = triple(&d.b)?;
                let c = triple(&d.c)?;
                let g = parse_polynomial(&ring, &d.g)?;
                let x = |i| Poly::var(&ring, i);
                let f_cubic = c[0].mul(&x(0)).add(&c[1].mul(&x(1))).add(&c[2].mul(&x(2)));
                let det_n = det3(&a, &b, &c);
                let quartic = det_n.add(&g.mul(&x(5)));
                Some(DeformationFamily {
                    ring: ring.clone(),
                    a,
                    b,
                    c,
                    g,
                    f_cubic,
                    det_n,
                    quartic,
                })
            }
        };
        Ok(CurveBundle {
            curve_type,
            seed: self.seed,
            characteristic: self.characteristic,
            ring,
            components,
            union_ideal,
            pairs,
            liaison,
            deformation,
            attempts_used: self.attempts_used,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub format_version: u32,
    #[serde(flatten)]
    pub report: VerificationReport,
}

impl ReportJson {
    pub fn new(report: VerificationReport) -> ReportJson {
        ReportJson {
            format_version: FORMAT_VERSION,
            report,
        }
    }
}

/// Human-readable report rendering: one line per check plus the verdict.
pub fn render_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "type {} seed {} char {} (aux seed {})\n",
        report.type_tag, report.seed, report.characteristic, report.aux_seed
    ));
    for r in &report.records {
        let flag = if r.passed { "pass" } else { "FAIL" };
        let prob = if r.probabilistic { " [probabilistic]" } else { "" };
        out.push_str(&format!("  {flag}  {}{prob}", r.name));
        if !r.passed {
            out.push_str(&format!("  (got {}, expected {})", r.computed, r.expected));
        }
        out.push('\n');
    }
    out.push_str(&format!(
        "verdict: {}\n",
        if report.verdict { "PASS" } else { "FAIL" }
    ));
    out
}
