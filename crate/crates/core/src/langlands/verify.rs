//! Instance checks of the orbit and exponent comparisons. Each returns a
//! [`Report`] with one verdict per instantiated inequality.

use crate::combinatorics::{dominates, partial_sums_leq, DescMultiset, HalfInt};
use crate::error::{Error, Result};
use crate::packets::{enumerate_packet_params, langlands_data_explicit, PacketParams};
use crate::parameters::{
    block_exponents, diagonal_restriction, exponents_of_parameter, orbit_first_sl2,
    orbit_second_sl2, ArthurParameter, GroupSign, JordanBlock,
};
use crate::report::Report;
use crate::speh::{block_e_segment, chain_blocks, e_set, first_prefix_decomposition};

use super::{
    exponents_from_langlands, inv_count, normalize_all, orbit_from_langlands, precondition,
    successors, x_inversions, InducedDatum, StepKind,
};

/// Walks the chain of `rho`-blocks of `psi_prime` with `b > 1`, largest `b`
/// first. At step `j` the E-set of the first `j` blocks must split into
/// initial runs of the E-segments of the `rho`-blocks of `psi`; the
/// inequalities that follow from such a split are checked one by one and
/// the report ends with the orbit dominance.
pub fn verify_clozel(psi: &ArthurParameter, psi_prime: &ArthurParameter, rho: &str) -> Result<Report> {
    let (d, d_prime) = (diagonal_restriction(psi), diagonal_restriction(psi_prime));
    if d != d_prime {
        return Err(Error::DiagonalMismatch(format!(
            "{psi} and {psi_prime} restrict differently to the diagonal SL(2)"
        )));
    }
    let orbit = orbit_second_sl2(psi, rho);
    let orbit_prime = orbit_second_sl2(psi_prime, rho);
    let chain = chain_blocks(psi_prime, rho);
    let targets: Vec<&JordanBlock> = psi.blocks_of(rho).collect();
    let mut report = Report::new(format!("clozel {psi} vs {psi_prime} at {rho}"));
    for j in 1..=chain.len() {
        let head = &chain[..j];
        let e = e_set(head.iter().copied());
        let Some(split) = first_prefix_decomposition(&e, &targets) else {
            report.check(format!("j={j} decomposition"), format!("E={e} has no prefix split"), false);
            continue;
        };
        let pieces: Vec<String> = targets
            .iter()
            .zip(&split.prefix)
            .filter(|(_, &m)| m > 0)
            .map(|(b, m)| format!("{m} from {b}"))
            .collect();
        report.check(
            format!("j={j} decomposition"),
            format!("E={e} = {}", pieces.join(" + ")),
            true,
        );

        let a_sum: u64 = head.iter().map(|b| u64::from(b.a)).sum();
        let ab_sum: u64 = head.iter().map(|b| u64::from(b.a) * u64::from(b.b)).sum();
        let m_sum = split.total();
        report.check(
            format!("j={j} cardinality"),
            format!("sum m = {m_sum} = {a_sum} = sum a'"),
            m_sum == a_sum,
        );

        let twice_e: i64 = e.iter().map(HalfInt::twice).sum();
        let expected: i64 = -head
            .iter()
            .map(|b| i64::from(b.a) * (i64::from(b.b) - 1))
            .sum::<i64>();
        report.check(
            format!("j={j} E sum"),
            format!("2 sum E = {twice_e} = {expected} = -sum a'(b'-1)"),
            twice_e == expected,
        );

        let mut middle_ok = true;
        let mut weighted: u64 = 0;
        for (block, &m) in targets.iter().zip(&split.prefix) {
            let taken: i64 = block_e_segment(block)
                .iter()
                .take(m as usize)
                .map(|x| x.twice())
                .sum();
            middle_ok &= taken >= -i64::from(m) * (i64::from(block.b) - 1);
            weighted += u64::from(m) * u64::from(block.b);
        }
        report.check(
            format!("j={j} prefix means"),
            "each run averages at least -(b-1)/2",
            middle_ok,
        );
        report.check(
            format!("j={j} weighted"),
            format!("sum m b = {weighted} >= {ab_sum} = sum a'b'"),
            weighted >= ab_sum,
        );
        let top = orbit.top_sum(a_sum as usize);
        report.check(
            format!("j={j} top parts"),
            format!("top {a_sum} parts of {orbit} sum to {top} >= {ab_sum}"),
            top >= ab_sum,
        );
    }
    report.check(
        "dominance",
        format!("{orbit} >= {orbit_prime}"),
        dominates(&orbit, &orbit_prime),
    );
    Ok(report)
}

fn require_explicit(psi: &ArthurParameter, rho: &str) -> Result<()> {
    psi.label(rho)?;
    if let Some(b) = psi.blocks().iter().find(|b| b.a < b.b) {
        return Err(precondition(format!("{b} has a < b")));
    }
    Ok(())
}

fn maximal_t(psi: &ArthurParameter, p: &PacketParams) -> bool {
    psi.blocks().iter().all(|b| p.t_of(b) == b.b / 2)
}

/// For every member, the orbit read off its Langlands data dominates the
/// orbit of the first `SL(2)`; for the member with `t = floor(b/2)`
/// everywhere the two are equal.
pub fn verify_orbit_theorem(psi: &ArthurParameter, rho: &str, g: GroupSign) -> Result<Report> {
    require_explicit(psi, rho)?;
    let members = enumerate_packet_params(psi, g)?;
    let target = orbit_first_sl2(psi, rho);
    let mut report = Report::new(format!("orbit {psi} at {rho}, sign {g}"));
    let mut saw_maximal = false;
    for p in &members {
        let data = langlands_data_explicit(psi, p)?;
        let orbit = orbit_from_langlands(&data, rho);
        let name = p.describe(psi);
        report.check(
            format!("member {name}"),
            format!("{orbit} >= {target}"),
            dominates(&orbit, &target),
        );
        if maximal_t(psi, p) {
            saw_maximal = true;
            report.check(
                format!("equality {name}"),
                format!("{orbit} = {target}"),
                orbit == target,
            );
        }
    }
    if !saw_maximal {
        report.skip("equality", format!("no member with t = floor(b/2) for sign {g}"));
    }
    Ok(report)
}

/// For every member, its `rho`-exponents are majorized by those of `psi`,
/// and the exponents carried by each block are majorized by the block's own.
pub fn verify_exp_proposition(psi: &ArthurParameter, rho: &str, g: GroupSign) -> Result<Report> {
    require_explicit(psi, rho)?;
    let members = enumerate_packet_params(psi, g)?;
    let bound = exponents_of_parameter(psi, Some(rho));
    let mut report = Report::new(format!("exp {psi} at {rho}, sign {g}"));
    for p in &members {
        let data = langlands_data_explicit(psi, p)?;
        let exps = exponents_from_langlands(&data, Some(rho));
        let name = p.describe(psi);
        report.check(
            format!("member {name}"),
            format!("{exps} <= {bound}"),
            partial_sums_leq(&exps, &bound)?,
        );
        let mut carried = Vec::new();
        for block in psi.blocks_of(rho) {
            let own: DescMultiset = block_exponents(block.b).collect();
            let used: DescMultiset = own.iter().take(p.t_of(block) as usize).collect();
            report.check(
                format!("member {name} block {block}"),
                format!("{used} <= {own}"),
                partial_sums_leq(&used, &own)?,
            );
            carried.push(used);
        }
        let union = crate::combinatorics::merge_descending(&carried);
        report.check(
            format!("member {name} accounting"),
            format!("{exps} = {union}"),
            exps == union,
        );
    }
    Ok(report)
}

/// Explores every exchange sequence from `d`. Each link must keep the total
/// length and the twist sum (the twist of a dropped empty segment counted),
/// produce a longest factor at least as long as both inputs and no twist
/// above the old maximum; swaps must remove an inversion. Every terminal
/// must dominate `d` in orbit and be majorized by it in exponents.
pub fn verify_normalization(d: &InducedDatum) -> Result<Report> {
    let mut report = Report::new(format!("normalize {d}"));
    let mut stack = vec![d.clone()];
    let mut seen = std::collections::HashSet::new();
    let (mut links, mut swaps, mut bad_links, mut bad_swaps) = (0usize, 0usize, Vec::new(), Vec::new());
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        for (step, next) in successors(&cur) {
            let (f1, f2) = &step.before;
            let ok = match step.kind {
                StepKind::Link => {
                    links += 1;
                    let lengths: u32 = step.after.iter().map(|f| f.a).sum();
                    let longest = step.after.iter().map(|f| f.a).max().unwrap_or(0);
                    let mut twists: HalfInt = step.after.iter().map(|f| f.x).sum();
                    if step.after.len() == 1 {
                        let (d2, e1) = (f2.segment().start(), f1.segment().end());
                        if let (Some(d2), Some(e1)) = (d2, e1) {
                            twists -= (d2 + e1).checked_half().unwrap_or(HalfInt::ZERO);
                        }
                    }
                    let top = f1.x.max(f2.x);
                    lengths == f1.a + f2.a
                        && longest >= f1.a.max(f2.a)
                        && twists == f1.x + f2.x
                        && step.after.iter().all(|f| f.x <= top)
                        && (next.factors.len(), inv_count(&next)) < (cur.factors.len(), inv_count(&cur))
                }
                StepKind::Swap => {
                    swaps += 1;
                    x_inversions(&next) < x_inversions(&cur)
                }
            };
            if !ok {
                let moved: Vec<String> = step.after.iter().map(ToString::to_string).collect();
                let entry = format!("{f1},{f2} -> {}", moved.join(","));
                match step.kind {
                    StepKind::Link => bad_links.push(entry),
                    StepKind::Swap => bad_swaps.push(entry),
                }
            }
            stack.push(next);
        }
    }
    report.check(
        "links",
        bad_links.first().cloned().unwrap_or_else(|| format!("{links} conserve length and twist sum")),
        bad_links.is_empty(),
    );
    report.check(
        "swaps",
        bad_swaps.first().cloned().unwrap_or_else(|| format!("{swaps} remove an inversion")),
        bad_swaps.is_empty(),
    );
    let exps = exponents_from_langlands(d, None);
    let rhos: std::collections::BTreeSet<&str> = d
        .factors
        .iter()
        .map(|f| f.rho.as_str())
        .chain(d.tempered.iter().map(|t| t.rho.as_str()))
        .collect();
    for t in normalize_all(d) {
        report.check(format!("terminal {t}"), "in Langlands order", t.is_langlands_ordered());
        for rho in &rhos {
            let (before, after) = (orbit_from_langlands(d, rho), orbit_from_langlands(&t, rho));
            report.check(
                format!("terminal {t} orbit {rho}"),
                format!("{after} >= {before}"),
                dominates(&after, &before),
            );
        }
        let after = exponents_from_langlands(&t, None);
        report.check(
            format!("terminal {t} exponents"),
            format!("{after} <= {exps}"),
            partial_sums_leq(&after, &exps)?,
        );
    }
    Ok(report)
}
