//! Line-oriented text formats.
//!
//! Parameter files:
//!
//! ```text
//! # comment
//! rho r dim=1 selfdual=orth dual=r unramified=false
//! block r a=3 b=2 mult=1
//! ```
//!
//! `dual` defaults to the label's own name and `unramified` to `false`;
//! `mult` defaults to 1. Keys may come in any order.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::parameters::{is_identifier, ArthurParameter, CuspidalLabel, SelfDualType};

/// A whitespace-separated token with its 1-based column.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

/// One non-blank, non-comment line split into tokens.
#[derive(Debug)]
pub(crate) struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<Token<'a>>,
}

impl<'a> Line<'a> {
    pub fn error(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    /// Parses `key=value` tokens after the first `skip` tokens. Keys outside
    /// `allowed` and repeated keys are errors.
    pub fn fields(&self, skip: usize, allowed: &[&str]) -> Result<BTreeMap<&'a str, Token<'a>>> {
        let mut out = BTreeMap::new();
        for tok in &self.tokens[skip..] {
            let (key, value) = tok
                .text
                .split_once('=')
                .ok_or_else(|| self.error(tok.column, format!("expected key=value, found `{}`", tok.text)))?;
            if !allowed.contains(&key) {
                return Err(self.error(tok.column, format!("unknown key `{key}`")));
            }
            let value_tok = Token {
                text: value,
                column: tok.column + key.len() + 1,
            };
            if out.insert(key, value_tok).is_some() {
                return Err(self.error(tok.column, format!("key `{key}` given twice")));
            }
        }
        Ok(out)
    }

    pub fn value<T: FromStr>(
        &self,
        fields: &BTreeMap<&str, Token<'_>>,
        key: &str,
    ) -> Result<Option<T>> {
        fields
            .get(key)
            .map(|tok| {
                tok.text
                    .parse()
                    .map_err(|_| self.error(tok.column, format!("invalid value `{}` for {key}", tok.text)))
            })
            .transpose()
    }

    pub fn required<T: FromStr>(&self, fields: &BTreeMap<&str, Token<'_>>, key: &str) -> Result<T> {
        self.value(fields, key)?
            .ok_or_else(|| self.error(self.end_column(), format!("missing {key}=")))
    }

    /// Second token, required to be an identifier.
    pub fn name(&self, what: &str) -> Result<Token<'a>> {
        let tok = self
            .tokens
            .get(1)
            .copied()
            .ok_or_else(|| self.error(self.end_column(), format!("missing {what} name")))?;
        if tok.text.contains('=') || !is_identifier(tok.text) {
            return Err(self.error(tok.column, format!("invalid {what} name `{}`", tok.text)));
        }
        Ok(tok)
    }

    fn end_column(&self) -> usize {
        self.tokens
            .last()
            .map_or(1, |t| t.column + t.text.chars().count())
    }
}

/// Splits text into meaningful lines; `#` starts a comment.
pub(crate) fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..col],
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some(Line {
            number: i + 1,
            tokens,
        })
    })
}

fn parse_bool(line: &Line<'_>, tok: Option<&Token<'_>>) -> Result<bool> {
    match tok.map(|t| (t.text, t.column)) {
        None => Ok(false),
        Some(("true", _)) => Ok(true),
        Some(("false", _)) => Ok(false),
        Some((other, col)) => Err(line.error(col, format!("expected true or false, found `{other}`"))),
    }
}

/// Parses a parameter file. Duplicate `block` lines accumulate.
pub fn parse_parameter(text: &str) -> Result<ArthurParameter> {
    let all: Vec<Line<'_>> = lines(text).collect();
    let mut labels = Vec::new();
    let mut seen = BTreeMap::new();
    for line in all.iter().filter(|l| l.tokens[0].text == "rho") {
        let name = line.name("rho")?;
        if seen.insert(name.text, line.number).is_some() {
            return Err(line.error(name.column, format!("label `{}` declared twice", name.text)));
        }
        let fields = line.fields(2, &["dim", "selfdual", "dual", "unramified"])?;
        let dim: u32 = line.required(&fields, "dim")?;
        let kind: SelfDualType = line.required(&fields, "selfdual")?;
        let dual: String = line
            .value(&fields, "dual")?
            .unwrap_or_else(|| name.text.to_string());
        let unramified = parse_bool(line, fields.get("unramified"))?;
        let label = CuspidalLabel::new(name.text, dim, kind, dual, unramified)
            .map_err(|e| line.error(name.column, e.to_string()))?;
        labels.push(label);
    }
    let first_line = all.first().map_or(1, |l| l.number);
    let mut psi = ArthurParameter::new(labels).map_err(|e| Error::Parse {
        line: first_line,
        column: 1,
        message: e.to_string(),
    })?;
    for line in &all {
        match line.tokens[0].text {
            "rho" => {}
            "block" => {
                let rho = line.name("block label")?;
                if psi.label(rho.text).is_err() {
                    return Err(line.error(rho.column, format!("unknown cuspidal label `{}`", rho.text)));
                }
                let fields = line.fields(2, &["a", "b", "mult"])?;
                let a: u32 = line.required(&fields, "a")?;
                let b: u32 = line.required(&fields, "b")?;
                let mult: u32 = line.value(&fields, "mult")?.unwrap_or(1);
                if mult == 0 {
                    return Err(line.error(fields["mult"].column, "mult must be positive"));
                }
                for _ in 0..mult {
                    psi.push_block(rho.text, a, b)
                        .map_err(|e| line.error(rho.column, e.to_string()))?;
                }
            }
            other => {
                return Err(line.error(1, format!("unknown directive `{other}`")));
            }
        }
    }
    Ok(psi)
}

/// Canonical text form: labels by name, then blocks by label with `a` and
/// `b` descending, equal blocks merged into `mult`.
pub fn serialize_parameter(psi: &ArthurParameter) -> String {
    let mut out = String::new();
    for label in psi.labels() {
        let _ = writeln!(
            out,
            "rho {} dim={} selfdual={} dual={} unramified={}",
            label.name(),
            label.dim(),
            label.self_dual_type().keyword(),
            label.dual_name(),
            label.is_unramified()
        );
    }
    let blocks = psi.sorted_blocks();
    let mut i = 0;
    while i < blocks.len() {
        let run = blocks[i..]
            .iter()
            .take_while(|b| b.same_shape(blocks[i]))
            .count();
        let b = blocks[i];
        let _ = writeln!(out, "block {} a={} b={} mult={}", b.rho, b.a, b.b, run);
        i += run;
    }
    out
}
