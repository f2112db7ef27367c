//! The `arthur` command line: argument parsing, dispatch and output.
//!
//! Exit status is 0 when everything ran and every check passed, 1 when a
//! check failed and 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::combinatorics::{parse_halfint_list, DescMultiset, HalfInt};
use crate::error::{Error, Result};
use crate::langlands::{
    admissible_lists, csq_orbit_lemma, normalize_all, normalize_canonical, parse_induced_datum,
    verify_clozel, verify_exp_proposition, verify_normalization, verify_orbit_theorem, CsqKind,
    InducedDatum,
};
use crate::packets::{
    enumerate_packet_params, langlands_data_explicit, langlands_membership, PacketParams,
    TwistedSteinberg,
};
use crate::paramfile::{parse_parameter, serialize_parameter};
use crate::parameters::{
    block_sl2_sign, diagonal_restriction, ell, exponents_of_parameter, extended_cuspidal_support,
    is_discrete_diagonal, orbit_first_sl2, orbit_second_sl2, ArthurParameter, GroupSign,
    JordanBlock, SelfDualType, Sign,
};
use crate::report::Report;
use crate::speh::prefix_decompositions;

pub const SEED_VAR: &str = "ARTHUR_SEED";

#[derive(Debug, Parser)]
#[command(name = "arthur", version, about = "Exact combinatorics of Arthur parameters")]
pub struct RunConfig {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized sweeps; `ARTHUR_SEED` takes precedence.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonical form of a parameter file.
    Show { file: PathBuf },
    /// Restriction to the diagonal SL(2).
    Diag { file: PathBuf },
    /// Extended cuspidal support.
    Support { file: PathBuf },
    /// Unipotent orbit of one SL(2) factor, for one label.
    Orbit {
        file: PathBuf,
        #[arg(long, value_enum)]
        sl2: Sl2,
        #[arg(long)]
        rho: String,
    },
    /// Exponents of the parameter.
    Exp {
        file: PathBuf,
        #[arg(long)]
        rho: Option<String>,
    },
    /// Jacquet module recipes.
    #[command(subcommand)]
    Jac(JacCommand),
    /// Packet members and their Langlands data.
    #[command(subcommand)]
    Packet(PacketCommand),
    /// Instance verifiers.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Bring an induced datum into Langlands order.
    Normalize {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Canonical)]
        mode: Mode,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sl2 {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Canonical,
    All,
}

#[derive(Debug, Subcommand)]
pub enum JacCommand {
    /// Ways to write E as initial runs of the blocks' E-segments.
    Prefix {
        file: PathBuf,
        /// Comma separated half-integers, e.g. `1/2,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long)]
        rho: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct SignArg {
    /// Group sign, `+1` or `-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub sign: Sign,
}

#[derive(Debug, Subcommand)]
pub enum PacketCommand {
    /// All `(t, eta)` with the given sign.
    Enumerate {
        file: PathBuf,
        #[command(flatten)]
        sign: SignArg,
    },
    /// Langlands data of every member.
    Langlands {
        file: PathBuf,
        #[command(flatten)]
        sign: SignArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Orbit comparison along the Jacquet chain of B inside A.
    Clozel {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        rho: String,
    },
    /// Orbit of every member against the first SL(2).
    Orbit {
        file: PathBuf,
        #[command(flatten)]
        sign: SignArg,
        #[arg(long)]
        rho: String,
    },
    /// Exponents of every member against those of the parameter.
    Exp {
        file: PathBuf,
        #[command(flatten)]
        sign: SignArg,
        #[arg(long)]
        rho: String,
    },
    /// Exhaustive sweep of one dominance lemma over `a + b <= max`.
    Csq {
        #[arg(long)]
        kind: CsqKind,
        #[arg(long, default_value_t = 20)]
        max: u32,
    },
    /// Every exchange sequence of an induced datum.
    Normalize { file: PathBuf },
    /// Random parameters and induced data through all verifiers.
    Sweep {
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

/// What a command produced.
enum Output {
    Text(String, serde_json::Value),
    Report(Report),
}

/// Parses `args` (program name first), runs the command and writes to
/// `out` and `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let env_seed = std::env::var(SEED_VAR).ok();
    match execute(&config, env_seed.as_deref()) {
        Ok(Output::Text(text, value)) => {
            emit_plain(out, config.json, &text, &value);
            0
        }
        Ok(Output::Report(report)) => {
            let _ = out.write_all(emit(&report, config.json).as_bytes());
            if report.all_passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Text or JSON form of a report.
pub fn emit(report: &Report, json: bool) -> String {
    if json {
        format!("{}\n", report.to_json())
    } else {
        report.to_string()
    }
}

fn emit_plain(out: &mut dyn Write, json: bool, text: &str, value: &serde_json::Value) {
    let _ = if json {
        writeln!(out, "{}", serde_json::to_string_pretty(value).expect("value serializes"))
    } else {
        out.write_all(text.as_bytes())
    };
}

fn input_error(path: &Path, message: impl ToString) -> Error {
    Error::Input {
        path: path.display().to_string(),
        message: message.to_string(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| input_error(path, e))
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| input_error(path, e))
}

fn load(path: &Path) -> Result<ArthurParameter> {
    with_path(path, parse_parameter(&read(path)?))
}

fn load_induced(path: &Path) -> Result<InducedDatum> {
    with_path(path, parse_induced_datum(&read(path)?))
}

fn seed(config: &RunConfig, env: Option<&str>) -> Result<u64> {
    match env {
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidValue(format!("{SEED_VAR}=`{s}` is not an unsigned integer"))),
        None => Ok(config.seed.unwrap_or(0)),
    }
}

fn lines<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|i| format!("{i}\n")).collect()
}

fn execute(config: &RunConfig, env_seed: Option<&str>) -> Result<Output> {
    match &config.command {
        Command::Show { file } => {
            let psi = load(file)?;
            let text = serialize_parameter(&psi);
            let value = json!({
                "parameter": psi.to_string(),
                "dimension": psi.dimension(),
                "ell": ell(&psi),
                "discrete_diagonal": is_discrete_diagonal(&psi),
                "canonical": text,
            });
            Ok(Output::Text(text, value))
        }
        Command::Diag { file } => {
            let psi = load(file)?;
            let diag = diagonal_restriction(&psi);
            let text = lines(diag.iter().map(|(rho, c)| format!("{rho} {c}")));
            Ok(Output::Text(text, json!(diag)))
        }
        Command::Support { file } => {
            let psi = load(file)?;
            let support = extended_cuspidal_support(&psi);
            let text = lines(support.iter().map(|(rho, x)| format!("{rho} {x}")));
            Ok(Output::Text(text, json!(support)))
        }
        Command::Orbit { file, sl2, rho } => {
            let psi = load(file)?;
            psi.label(rho)?;
            let orbit = match sl2 {
                Sl2::First => orbit_first_sl2(&psi, rho),
                Sl2::Second => orbit_second_sl2(&psi, rho),
            };
            Ok(Output::Text(format!("{orbit}\n"), json!(orbit)))
        }
        Command::Exp { file, rho } => {
            let psi = load(file)?;
            if let Some(r) = rho {
                psi.label(r)?;
            }
            let exps = exponents_of_parameter(&psi, rho.as_deref());
            Ok(Output::Text(format!("{exps}\n"), json!(exps)))
        }
        Command::Jac(JacCommand::Prefix { file, e, rho }) => {
            let psi = load(file)?;
            let e: DescMultiset = parse_halfint_list(e)?.into_iter().collect();
            jac_prefix(&psi, &e, rho.as_deref())
        }
        Command::Packet(PacketCommand::Enumerate { file, sign }) => {
            let psi = load(file)?;
            packet_enumerate(&psi, sign.sign, false)
        }
        Command::Packet(PacketCommand::Langlands { file, sign }) => {
            let psi = load(file)?;
            packet_enumerate(&psi, sign.sign, true)
        }
        Command::Check(CheckCommand::Clozel { a, b, rho }) => {
            let (psi, psi_prime) = (load(a)?, load(b)?);
            psi.label(rho)?;
            Ok(Output::Report(verify_clozel(&psi, &psi_prime, rho)?))
        }
        Command::Check(CheckCommand::Orbit { file, sign, rho }) => {
            let psi = load(file)?;
            Ok(Output::Report(verify_orbit_theorem(&psi, rho, sign.sign)?))
        }
        Command::Check(CheckCommand::Exp { file, sign, rho }) => {
            let psi = load(file)?;
            Ok(Output::Report(verify_exp_proposition(&psi, rho, sign.sign)?))
        }
        Command::Check(CheckCommand::Csq { kind, max }) => Ok(Output::Report(csq_sweep(*kind, *max)?)),
        Command::Check(CheckCommand::Normalize { file }) => {
            Ok(Output::Report(verify_normalization(&load_induced(file)?)?))
        }
        Command::Check(CheckCommand::Sweep { cases }) => {
            Ok(Output::Report(sweep(seed(config, env_seed)?, *cases)?))
        }
        Command::Normalize { file, mode } => {
            let d = load_induced(file)?;
            Ok(normalize(&d, *mode))
        }
    }
}

fn jac_prefix(psi: &ArthurParameter, e: &DescMultiset, rho: Option<&str>) -> Result<Output> {
    if let Some(r) = rho {
        psi.label(r)?;
    }
    let blocks: Vec<&JordanBlock> = psi
        .sorted_blocks()
        .into_iter()
        .filter(|b| rho.is_none_or(|r| b.rho == r))
        .collect();
    let found = prefix_decompositions(e, &blocks);
    let mut text = String::new();
    let mut rows = Vec::new();
    for split in &found {
        let used: Vec<String> = blocks
            .iter()
            .zip(&split.prefix)
            .filter(|(_, &m)| m > 0)
            .map(|(b, m)| format!("{b}:{m}"))
            .collect();
        text.push_str(&format!("{}\n", used.join(" ")));
        rows.push(blocks.iter().zip(&split.prefix).map(|(b, m)| (b.to_string(), *m)).collect::<Vec<_>>());
    }
    text.push_str(&format!("{} decomposition(s) of {e}\n", found.len()));
    Ok(Output::Text(text, json!({ "e": e, "decompositions": rows })))
}

#[derive(Serialize)]
struct MemberRow {
    t: Vec<(String, u32)>,
    eta: Vec<(String, Sign)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    langlands: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    subpacket_of: Option<String>,
}

fn packet_enumerate(psi: &ArthurParameter, g: GroupSign, require_explicit: bool) -> Result<Output> {
    let members = enumerate_packet_params(psi, g)?;
    let explicit = psi.blocks().iter().all(|b| b.a >= b.b);
    if require_explicit && !explicit {
        return Err(Error::Precondition(
            "Langlands data need a >= b on every block".into(),
        ));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for p in &members {
        let blocks = psi.sorted_blocks();
        let mut row = MemberRow {
            t: blocks.iter().map(|b| (b.to_string(), p.t_of(b))).collect(),
            eta: blocks.iter().map(|b| (b.to_string(), p.eta_of(b))).collect(),
            langlands: None,
            subpacket_of: None,
        };
        text.push_str(&p.describe(psi));
        text.push('\n');
        if explicit {
            let data = langlands_data_explicit(psi, p)?;
            row.langlands = Some(json!({
                "twisted": data.twisted.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "tempered": data.tempered.iter().map(|t| format!("({},{})", t.rho, t.c)).collect::<Vec<_>>(),
            }));
            if require_explicit {
                text.push_str(&format!("  {data}\n"));
                row.subpacket_of = langlands_membership(psi, p)?.map(|m| m.to_string());
                if let Some(m) = &row.subpacket_of {
                    text.push_str(&format!("  subpacket of {m}\n"));
                }
            }
        }
        rows.push(row);
    }
    text.push_str(&format!("{} member(s)\n", members.len()));
    Ok(Output::Text(text, json!({ "parameter": psi.to_string(), "sign": g, "members": rows })))
}

fn csq_sweep(kind: CsqKind, max: u32) -> Result<Report> {
    if max > 30 {
        return Err(Error::InvalidValue(format!("--max {max} is above 30")));
    }
    let mut report = Report::new(format!("lemma {kind}, a + b <= {max}"));
    for a in 1..max {
        for b in 1..=max - a {
            let lists = admissible_lists(kind, a, b);
            if lists.is_empty() {
                continue;
            }
            let mut failure = None;
            for list in &lists {
                let outcome = csq_orbit_lemma(kind, a, b, list)?;
                if !outcome.holds {
                    failure = Some(format!(
                        "{list:?}: {} does not dominate {}",
                        outcome.constructed, outcome.target
                    ));
                    break;
                }
            }
            let ok = failure.is_none();
            let detail = failure.unwrap_or_else(|| format!("{} lists", lists.len()));
            report.check(format!("a={a} b={b}"), detail, ok);
        }
    }
    Ok(report)
}

fn normalize(d: &InducedDatum, mode: Mode) -> Output {
    match mode {
        Mode::Canonical => {
            let trace = normalize_canonical(d);
            let mut text = String::new();
            for step in &trace.steps {
                let after: Vec<String> = step.after.iter().map(ToString::to_string).collect();
                text.push_str(&format!(
                    "{:?} at {}: {},{} -> {}\n",
                    step.kind,
                    step.position,
                    step.before.0,
                    step.before.1,
                    after.join(",")
                ));
            }
            text.push_str(&format!("final {}\n", trace.final_datum));
            Output::Text(text, json!(trace))
        }
        Mode::All => {
            let terminals = normalize_all(d);
            let text = lines(&terminals);
            Output::Text(text, json!(terminals))
        }
    }
}

/// A random parameter with one label whose blocks all have good parity for
/// `g`, `a >= b`, `a + b <= 14` and a multiplicity free diagonal.
fn random_explicit(rng: &mut ChaCha8Rng, g: GroupSign) -> Result<ArthurParameter> {
    loop {
        let count = rng.gen_range(1..=3);
        let parity = rng.gen_range(0..2u32);
        let mut shapes = Vec::new();
        while shapes.len() < count {
            let b = rng.gen_range(1..=6u32);
            let a = rng.gen_range(b..=14 - b);
            if (a + b) % 2 == parity {
                shapes.push((a, b));
            }
        }
        let (a, b) = shapes[0];
        let kind = match g * block_sl2_sign(a) * block_sl2_sign(b) {
            Sign::Plus => SelfDualType::Orthogonal,
            Sign::Minus => SelfDualType::Symplectic,
        };
        let psi = ArthurParameter::single("r", kind, &shapes)?;
        if is_discrete_diagonal(&psi) {
            return Ok(psi);
        }
    }
}

fn random_induced(rng: &mut ChaCha8Rng) -> InducedDatum {
    let n = rng.gen_range(0..=6);
    InducedDatum {
        factors: (0..n)
            .map(|_| TwistedSteinberg {
                rho: ["r", "s"][rng.gen_range(0..2)].to_string(),
                a: rng.gen_range(1..=6),
                x: HalfInt::from_twice(rng.gen_range(0..=12)),
            })
            .collect(),
        tempered: Vec::new(),
    }
}

fn summarize(report: &Report) -> String {
    match report.first_failure() {
        Some(c) => format!("{} {}", c.name, c.detail),
        None => format!("{} checks", report.passed()),
    }
}

/// Clozel checks against every member whose `t` is 0 or maximal.
fn clozel_members(psi: &ArthurParameter, members: &[PacketParams]) -> Result<Report> {
    let mut all = Report::default();
    for p in members {
        if let Some(psi_prime) = langlands_membership(psi, p)? {
            all.extend(verify_clozel(psi, &psi_prime, "r")?);
        }
    }
    Ok(all)
}

fn sweep(seed: u64, cases: usize) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new(format!("sweep seed={seed} cases={cases}"));
    for k in 0..cases {
        let g = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let psi = random_explicit(&mut rng, g)?;
        let orbit = verify_orbit_theorem(&psi, "r", g)?;
        report.check(format!("case {k} orbit {psi} {g}"), summarize(&orbit), orbit.all_passed());
        let exp = verify_exp_proposition(&psi, "r", g)?;
        report.check(format!("case {k} exp {psi} {g}"), summarize(&exp), exp.all_passed());
        let members = enumerate_packet_params(&psi, g)?;
        let clozel = clozel_members(&psi, &members)?;
        report.check(format!("case {k} clozel {psi} {g}"), summarize(&clozel), clozel.all_passed());
        let d = random_induced(&mut rng);
        let norm = verify_normalization(&d)?;
        report.check(format!("case {k} normalize"), summarize(&norm), norm.all_passed());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fs;

    fn call(args: &[&str]) -> (u8, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("arthur").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
        let path = dir.path().join(name);
        fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }

    const PSI: &str = "rho r dim=1 selfdual=orth dual=r unramified=false\nblock r a=3 b=2 mult=1\n";

    #[test]
    fn orbit_and_show() {
        let dir = tempfile::tempdir().unwrap();
        let f = write(&dir, "p.txt", PSI);
        assert_eq!(call(&["orbit", &f, "--sl2", "second", "--rho", "r"]), (0, "[2,2,2]\n".into(), String::new()));
        assert_eq!(call(&["orbit", &f, "--sl2", "first", "--rho", "r"]).1, "[3,3]\n");
        assert_eq!(call(&["show", &f]).1, PSI);
        assert_eq!(call(&["diag", &f]).1, "r 2\nr 4\n");
        assert_eq!(call(&["exp", &f]).1, "{1/2}\n");
    }

    #[test]
    fn checks_and_exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let symp = write(&dir, "s.txt", &PSI.replace("orth", "symp"));
        let (code, out, _) = call(&["check", "orbit", &symp, "--sign", "+1", "--rho", "r"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS"));
        let orth = write(&dir, "o.txt", PSI);
        let other = write(&dir, "q.txt", &PSI.replace("b=2", "b=1"));
        let (code, _, err) = call(&["check", "clozel", &orth, &other, "--rho", "r"]);
        assert_eq!(code, 2);
        assert!(err.contains("diagonal"));
        let split = write(
            &dir,
            "split.txt",
            "rho r dim=1 selfdual=orth\nblock r a=2 b=1\nblock r a=4 b=1\n",
        );
        let (code, out, _) = call(&["check", "clozel", &split, &orth, "--rho", "r"]);
        assert_eq!(code, 1);
        assert!(out.starts_with("# clozel"));
        assert!(out.lines().nth(1).unwrap().starts_with("FAIL"));
        assert_eq!(call(&["check", "orbit", &orth, "--sign", "+1", "--rho", "r"]).0, 2);
    }

    #[test]
    fn input_errors() {
        let dir = tempfile::tempdir().unwrap();
        let bad = write(&dir, "bad.txt", "block s a=1 b=1\n");
        let (code, _, err) = call(&["show", &bad]);
        assert_eq!(code, 2);
        assert!(err.contains("bad.txt: line 1, column 7"), "{err}");
        assert_eq!(call(&["show", "/nonexistent/file"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn json_and_seeded_sweep() {
        let dir = tempfile::tempdir().unwrap();
        let f = write(&dir, "p.txt", &PSI.replace("orth", "symp"));
        let (_, out, _) = call(&["--json", "packet", "enumerate", &f, "--sign", "+1"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["members"].as_array().unwrap().len(), 1);
        assert!(v["members"][0]["langlands"]["twisted"].is_array());
        let config = RunConfig::try_parse_from(["arthur", "--seed", "5", "check", "sweep", "--cases", "3"]).unwrap();
        assert_eq!(seed(&config, None).unwrap(), 5);
        assert_eq!(seed(&config, Some("9")).unwrap(), 9);
        assert!(seed(&config, Some("x")).is_err());
        let first = sweep(7, 5).unwrap();
        assert!(first.all_passed(), "{first}");
        assert_eq!(first, sweep(7, 5).unwrap());
    }

    #[test]
    fn normalize_modes() {
        let dir = tempfile::tempdir().unwrap();
        let f = write(&dir, "d.txt", "factor r a=2 x=1/2\nfactor r a=2 x=3/2\n");
        let (code, out, _) = call(&["normalize", &f]);
        assert_eq!(code, 0);
        assert!(out.ends_with("final factors=[(r,3,1),(r,1,1)] tempered={}\n"), "{out}");
        let (_, out, _) = call(&["normalize", &f, "--mode", "all"]);
        assert_eq!(out.lines().count(), 2);
        assert_eq!(call(&["check", "normalize", &f]).0, 0);
        assert_eq!(call(&["check", "csq", "--kind", "3", "--max", "10"]).0, 0);
    }

    #[test]
    fn jac_prefix_lists_splits() {
        let dir = tempfile::tempdir().unwrap();
        let f = write(&dir, "p.txt", PSI);
        let (code, out, _) = call(&["jac", "prefix", &f, "--e", "1/2,-1/2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "(r,3,2):2\n1 decomposition(s) of {1/2,-1/2}\n");
        let (_, out, _) = call(&["jac", "prefix", &f, "--e", "-1/2"]);
        assert_eq!(out, "0 decomposition(s) of {-1/2}\n");
    }
}
