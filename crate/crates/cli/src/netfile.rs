//! Line-oriented network description files.
//!
//! ```text
//! # comment
//! mode A pure 0.3 0
//! mode C mixed 1.0 0.7 0
//! bs BS1 A B theta=0.7853981633974483 phi=0
//! bs BS2 B C theta=$theta2 phi=matched
//! report xi A:B
//! report logneg A:B,C
//! ```
//!
//! Angles are radians. A party is a comma-separated list of mode names; the
//! commas may be dropped when the concatenation splits unambiguously into
//! declared names (`A:BC`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use gaussnet_core::entanglement::{Metric, ReportRequest};
use gaussnet_core::gaussian::{make_state, pure_state, SingleModeCM};
use gaussnet_core::network::{NetworkSpec, PhaseSetting, SplitterSpec};

use crate::error::{CliError, Result};

/// A real literal or a `$name` placeholder bound at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Literal(f64),
    Var(String),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Phase {
    Value(Value),
    Matched,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModeKind {
    Pure { b_mag: f64, b_arg: f64 },
    Mixed { a: f64, b_mag: f64, b_arg: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModeDecl {
    pub name: String,
    pub kind: ModeKind,
    pub state: SingleModeCM,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BsDecl {
    pub name: String,
    pub modes: (String, String),
    pub theta: Value,
    pub phi: Phase,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Netfile {
    pub modes: Vec<ModeDecl>,
    pub splitters: Vec<BsDecl>,
    pub reports: Vec<ReportRequest>,
}

pub type Bindings = BTreeMap<String, f64>;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
    end_column: usize,
}

impl<'a> Line<'a> {
    fn split(number: usize, raw: &'a str) -> Self {
        let code = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in code.char_indices().chain([(code.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &code[s..i],
                        column: code[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        Self {
            number,
            tokens,
            end_column: code.chars().count() + 1,
        }
    }

    fn error(&self, column: usize, message: impl Into<String>) -> CliError {
        CliError::Syntax {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn token(&self, i: usize, what: &str) -> Result<&Token<'a>> {
        self.tokens
            .get(i)
            .ok_or_else(|| self.error(self.end_column, format!("expected {what}")))
    }

    fn expect_len(&self, n: usize, usage: &str) -> Result<()> {
        match self.tokens.get(n) {
            Some(extra) => Err(self.error(extra.column, format!("unexpected `{}`; usage: {usage}", extra.text))),
            None if self.tokens.len() < n => {
                Err(self.error(self.end_column, format!("missing fields; usage: {usage}")))
            }
            None => Ok(()),
        }
    }

    fn real(&self, i: usize, what: &str) -> Result<f64> {
        let t = self.token(i, what)?;
        parse_real(t.text).ok_or_else(|| self.error(t.column, format!("expected {what}, found `{}`", t.text)))
    }

    fn name(&self, i: usize, what: &str) -> Result<&'a str> {
        let t = self.token(i, what)?;
        if is_identifier(t.text) {
            Ok(t.text)
        } else {
            Err(self.error(t.column, format!("invalid {what} `{}`", t.text)))
        }
    }

    fn invalid(&self, source: gaussnet_core::Error) -> CliError {
        CliError::Invalid {
            line: self.number,
            source,
        }
    }
}

fn parse_real(text: &str) -> Option<f64> {
    f64::from_str(text).ok().filter(|v| v.is_finite())
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_value(line: &Line, token: &Token, text: &str, offset: usize) -> Result<Value> {
    if let Some(var) = text.strip_prefix('$') {
        if is_identifier(var) {
            return Ok(Value::Var(var.to_string()));
        }
    } else if let Some(v) = parse_real(text) {
        return Ok(Value::Literal(v));
    }
    Err(line.error(
        token.column + offset,
        format!("expected a real or `$name`, found `{text}`"),
    ))
}

pub fn parse_netfile(text: &str) -> Result<Netfile> {
    let mut net = Netfile::default();
    for (i, raw) in text.lines().enumerate() {
        let line = Line::split(i + 1, raw);
        let Some(head) = line.tokens.first() else {
            continue;
        };
        match head.text {
            "mode" => {
                let decl = parse_mode(&line)?;
                if net.modes.iter().any(|m| m.name == decl.name) {
                    return Err(CliError::DuplicateMode {
                        line: line.number,
                        name: decl.name,
                    });
                }
                net.modes.push(decl);
            }
            "bs" => {
                let decl = parse_bs(&line, &net)?;
                net.splitters.push(decl);
            }
            "report" => {
                let req = parse_report(&line, &net)?;
                net.reports.push(req);
            }
            other => {
                return Err(line.error(
                    head.column,
                    format!("unknown directive `{other}`; expected mode, bs or report"),
                ))
            }
        }
    }
    Ok(net)
}

fn parse_mode(line: &Line) -> Result<ModeDecl> {
    let name = line.name(1, "mode name")?.to_string();
    let kind_tok = line.token(2, "`pure` or `mixed`")?;
    let kind = match kind_tok.text {
        "pure" => {
            line.expect_len(5, "mode <name> pure <|b|> <arg_b>")?;
            ModeKind::Pure {
                b_mag: line.real(3, "|b|")?,
                b_arg: line.real(4, "arg b")?,
            }
        }
        "mixed" => {
            line.expect_len(6, "mode <name> mixed <a> <|b|> <arg_b>")?;
            ModeKind::Mixed {
                a: line.real(3, "a")?,
                b_mag: line.real(4, "|b|")?,
                b_arg: line.real(5, "arg b")?,
            }
        }
        other => return Err(line.error(kind_tok.column, format!("expected `pure` or `mixed`, found `{other}`"))),
    };
    let state = match kind {
        ModeKind::Pure { b_mag, b_arg } => {
            if b_mag < 0.0 {
                return Err(line.invalid(gaussnet_core::Error::NonPositive(b_mag)));
            }
            pure_state(b_mag, b_arg)
        }
        ModeKind::Mixed { a, b_mag, b_arg } => make_state(a, b_mag, b_arg).map_err(|e| line.invalid(e))?,
    };
    Ok(ModeDecl { name, kind, state })
}

fn declared<'a>(line: &Line, net: &Netfile, token: &Token<'a>) -> Result<&'a str> {
    if net.modes.iter().any(|m| m.name == token.text) {
        Ok(token.text)
    } else {
        Err(CliError::UnknownLabel {
            line: line.number,
            label: token.text.to_string(),
        })
    }
}

fn parse_bs(line: &Line, net: &Netfile) -> Result<BsDecl> {
    let usage = "bs <name> <modeX> <modeY> theta=<value> phi=<value|matched>";
    let name = line.name(1, "splitter name")?.to_string();
    let x = declared(line, net, line.token(2, "first mode")?)?;
    let y = declared(line, net, line.token(3, "second mode")?)?;
    line.expect_len(6, usage)?;
    if x == y {
        return Err(CliError::DuplicateModePair {
            line: line.number,
            name: x.to_string(),
        });
    }
    let (mut theta, mut phi) = (None, None);
    for t in &line.tokens[4..6] {
        let Some((key, raw)) = t.text.split_once('=') else {
            return Err(line.error(t.column, format!("expected key=value, found `{}`", t.text)));
        };
        let offset = key.chars().count() + 1;
        match key {
            "theta" if theta.is_none() => theta = Some(parse_value(line, t, raw, offset)?),
            "phi" if phi.is_none() => {
                phi = Some(if raw == "matched" {
                    Phase::Matched
                } else {
                    Phase::Value(parse_value(line, t, raw, offset)?)
                })
            }
            "theta" | "phi" => return Err(line.error(t.column, format!("`{key}` given twice"))),
            _ => return Err(line.error(t.column, format!("unknown key `{key}`; usage: {usage}"))),
        }
    }
    Ok(BsDecl {
        name,
        modes: (x.to_string(), y.to_string()),
        theta: theta.expect("two distinct keys among theta, phi"),
        phi: phi.expect("two distinct keys among theta, phi"),
    })
}

/// Splits `text` into declared mode names: on commas if present, otherwise
/// by trying every segmentation of the concatenation, longest names first.
fn parse_party(text: &str, names: &[&str]) -> Option<Vec<String>> {
    if text.contains(',') {
        let parts: Vec<&str> = text.split(',').collect();
        return parts
            .iter()
            .all(|p| names.contains(p))
            .then(|| parts.iter().map(|p| p.to_string()).collect());
    }
    fn segment(rest: &str, names: &[&str], acc: &mut Vec<String>) -> bool {
        if rest.is_empty() {
            return !acc.is_empty();
        }
        let mut candidates: Vec<&&str> = names.iter().filter(|n| rest.starts_with(**n)).collect();
        candidates.sort_by_key(|n| std::cmp::Reverse(n.len()));
        for n in candidates {
            acc.push(n.to_string());
            if segment(&rest[n.len()..], names, acc) {
                return true;
            }
            acc.pop();
        }
        false
    }
    let mut acc = Vec::new();
    segment(text, names, &mut acc).then_some(acc)
}

fn parse_report(line: &Line, net: &Netfile) -> Result<ReportRequest> {
    let usage = "report <logneg|xi|sn|contangle|residual> <labels>:<labels>";
    let metric_tok = line.token(1, "metric")?;
    let metric = Metric::from_str(metric_tok.text)
        .map_err(|_| line.error(metric_tok.column, format!("unknown metric `{}`", metric_tok.text)))?;
    let parties = line.token(2, "bipartition")?;
    line.expect_len(3, usage)?;
    let Some((a, b)) = parties.text.split_once(':') else {
        return Err(line.error(
            parties.column,
            format!("expected <labels>:<labels>, found `{}`", parties.text),
        ));
    };
    let names: Vec<&str> = net.modes.iter().map(|m| m.name.as_str()).collect();
    let resolve = |text: &str| {
        parse_party(text, &names).ok_or_else(|| CliError::UnknownLabel {
            line: line.number,
            label: text.to_string(),
        })
    };
    let req = ReportRequest {
        metric,
        party_a: resolve(a)?,
        party_b: resolve(b)?,
    };
    req.validate().map_err(|e| line.invalid(e))?;
    Ok(req)
}

impl Netfile {
    /// Names of all `$` placeholders.
    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = BTreeSet::new();
        for s in &self.splitters {
            if let Value::Var(v) = &s.theta {
                vars.insert(v.clone());
            }
            if let Phase::Value(Value::Var(v)) = &s.phi {
                vars.insert(v.clone());
            }
        }
        vars
    }

    /// Substitutes every placeholder. Missing bindings and bindings for
    /// names that do not occur are both errors.
    pub fn bind(&self, bindings: &Bindings) -> Result<NetworkSpec> {
        let vars = self.variables();
        if let Some(extra) = bindings.keys().find(|k| !vars.contains(*k)) {
            return Err(CliError::UnknownVariable(extra.clone()));
        }
        let value = |v: &Value| match v {
            Value::Literal(x) => Ok(*x),
            Value::Var(name) => bindings
                .get(name)
                .copied()
                .ok_or_else(|| CliError::UnboundVariable(name.clone())),
        };
        let splitters = self
            .splitters
            .iter()
            .map(|s| {
                Ok(SplitterSpec {
                    name: s.name.clone(),
                    modes: s.modes.clone(),
                    theta: value(&s.theta)?,
                    phi: match &s.phi {
                        Phase::Matched => PhaseSetting::Matched,
                        Phase::Value(v) => PhaseSetting::Fixed(value(v)?),
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NetworkSpec {
            inputs: self.modes.iter().map(|m| (m.name.clone(), m.state)).collect(),
            splitters,
            reports: self.reports.clone(),
        })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Literal(x) => write!(f, "{x:?}"),
            Value::Var(v) => write!(f, "${v}"),
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::Matched => f.write_str("matched"),
            Phase::Value(v) => v.fmt(f),
        }
    }
}

/// Canonical text form; parties are always written with commas.
impl fmt::Display for Netfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.modes {
            match m.kind {
                ModeKind::Pure { b_mag, b_arg } => writeln!(f, "mode {} pure {b_mag:?} {b_arg:?}", m.name)?,
                ModeKind::Mixed { a, b_mag, b_arg } => writeln!(f, "mode {} mixed {a:?} {b_mag:?} {b_arg:?}", m.name)?,
            }
        }
        for s in &self.splitters {
            writeln!(
                f,
                "bs {} {} {} theta={} phi={}",
                s.name, s.modes.0, s.modes.1, s.theta, s.phi
            )?;
        }
        for r in &self.reports {
            writeln!(f, "report {} {}:{}", r.metric, r.party_a.join(","), r.party_b.join(","))?;
        }
        Ok(())
    }
}
