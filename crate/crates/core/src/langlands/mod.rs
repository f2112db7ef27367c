//! Induced data, their normalization into Langlands order, orbit and
//! exponent extraction, the orbit lemmas and instance verifiers.

mod csq;
mod exchange;
mod verify;

use std::fmt;

use serde::Serialize;

use crate::combinatorics::{DescMultiset, HalfInt, Partition};
use crate::error::{Error, Result};
use crate::packets::{LanglandsData, TemperedPart, TwistedSteinberg};
use crate::paramfile::lines;
use crate::parameters::ArthurParameter;

pub use csq::{admissible_lists, csq_orbit_lemma, CsqKind, CsqOutcome};
pub use exchange::{
    exchange_step, inv_count, linked, normalize_all, normalize_canonical, successors, x_inversions,
    ExchangeOutcome, ExchangeStep, ExchangeTrace, StepKind,
};
pub use verify::{
    verify_clozel, verify_exp_proposition, verify_normalization, verify_orbit_theorem,
};

/// An ordered product of twisted Steinberg factors times a tempered part.
/// Factors need not be in Langlands order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct InducedDatum {
    pub factors: Vec<TwistedSteinberg>,
    pub tempered: Vec<TemperedPart>,
}

impl InducedDatum {
    pub fn is_langlands_ordered(&self) -> bool {
        self.factors.windows(2).all(|w| w[0].x >= w[1].x)
    }
}

impl From<LanglandsData> for InducedDatum {
    fn from(d: LanglandsData) -> Self {
        InducedDatum {
            factors: d.twisted,
            tempered: d.tempered,
        }
    }
}

impl fmt::Display for InducedDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fs: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        let ts: Vec<String> = self.tempered.iter().map(ToString::to_string).collect();
        write!(f, "factors=[{}] tempered={{{}}}", fs.join(","), ts.join(","))
    }
}

/// Anything that lists twisted Steinberg factors and a tempered part.
pub trait SteinbergData {
    fn factors(&self) -> &[TwistedSteinberg];
    fn tempered(&self) -> &[TemperedPart];
}

impl SteinbergData for LanglandsData {
    fn factors(&self) -> &[TwistedSteinberg] {
        &self.twisted
    }

    fn tempered(&self) -> &[TemperedPart] {
        &self.tempered
    }
}

impl SteinbergData for InducedDatum {
    fn factors(&self) -> &[TwistedSteinberg] {
        &self.factors
    }

    fn tempered(&self) -> &[TemperedPart] {
        &self.tempered
    }
}

/// Two parts `a` per factor with label `rho` and one part `c` per tempered
/// entry with label `rho`.
pub fn orbit_from_langlands(d: &impl SteinbergData, rho: &str) -> Partition {
    let twisted = d
        .factors()
        .iter()
        .filter(|f| f.rho == rho)
        .map(|f| (f.a, 2));
    let tempered = d
        .tempered()
        .iter()
        .filter(|t| t.rho == rho)
        .map(|t| (t.c, 1));
    Partition::from_multiplicities(twisted.chain(tempered))
}

/// The strictly positive twists, optionally for one label.
pub fn exponents_from_langlands(d: &impl SteinbergData, rho: Option<&str>) -> DescMultiset {
    d.factors()
        .iter()
        .filter(|f| rho.is_none_or(|r| f.rho == r) && f.x.is_positive())
        .map(|f| f.x)
        .collect()
}

/// Part `beta` with multiplicity `alpha` for each pair.
pub fn chain_orbit(pairs: &[(u32, u32)]) -> Partition {
    Partition::from_multiplicities(pairs.iter().map(|&(alpha, beta)| (beta, alpha)))
}

/// `beta <= max b` over the `rho`-blocks of `psi` (zero when there are none).
pub fn max_exponent_bound(psi: &ArthurParameter, rho: &str, beta: u32) -> bool {
    beta <= psi.blocks_of(rho).map(|b| b.b).max().unwrap_or(0)
}

/// Parses `factor RHO a=INT x=HALFINT` and `temp RHO c=INT` lines; factor
/// order is kept.
pub fn parse_induced_datum(text: &str) -> Result<InducedDatum> {
    let mut d = InducedDatum::default();
    for line in lines(text) {
        let kind = line.tokens[0].text;
        let rho = line.name(kind)?;
        match kind {
            "factor" => {
                let fields = line.fields(2, &["a", "x"])?;
                let a: u32 = line.required(&fields, "a")?;
                let x: HalfInt = line.required(&fields, "x")?;
                if a == 0 {
                    return Err(line.error(fields["a"].column, "a must be positive"));
                }
                if x.is_negative() {
                    return Err(line.error(fields["x"].column, "x must be non-negative"));
                }
                d.factors.push(TwistedSteinberg {
                    rho: rho.text.to_string(),
                    a,
                    x,
                });
            }
            "temp" => {
                let fields = line.fields(2, &["c"])?;
                let c: u32 = line.required(&fields, "c")?;
                if c == 0 {
                    return Err(line.error(fields["c"].column, "c must be positive"));
                }
                d.tempered.push(TemperedPart {
                    rho: rho.text.to_string(),
                    c,
                });
            }
            other => return Err(line.error(1, format!("unknown directive `{other}`"))),
        }
    }
    Ok(d)
}

/// Text form read by [`parse_induced_datum`].
pub fn serialize_induced_datum(d: &InducedDatum) -> String {
    let mut out = String::new();
    for f in &d.factors {
        out.push_str(&format!("factor {} a={} x={}\n", f.rho, f.a, f.x));
    }
    for t in &d.tempered {
        out.push_str(&format!("temp {} c={}\n", t.rho, t.c));
    }
    out
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
