//! Packet members through `(t, eta)` data, their Langlands data in the
//! explicit case, the Langlands subpacket and unramified detection.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{HalfInt, Segment};
use crate::error::{Error, Result};
use crate::parameters::{
    block_exponents, block_sl2_sign, clebsch_gordan, has_good_parity, is_discrete_diagonal,
    ArthurParameter, GroupSign, JordanBlock, Sign,
};

/// `t` and `eta` for every block, keyed by instance id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PacketParams {
    pub t: BTreeMap<usize, u32>,
    pub eta: BTreeMap<usize, Sign>,
}

impl PacketParams {
    /// The same `t` and `eta = +` on every block.
    pub fn uniform(psi: &ArthurParameter, t: impl Fn(&JordanBlock) -> u32) -> Self {
        PacketParams {
            t: psi.blocks().iter().map(|b| (b.id, t(b))).collect(),
            eta: psi.blocks().iter().map(|b| (b.id, Sign::Plus)).collect(),
        }
    }

    pub fn t_of(&self, block: &JordanBlock) -> u32 {
        self.t.get(&block.id).copied().unwrap_or(0)
    }

    pub fn eta_of(&self, block: &JordanBlock) -> Sign {
        self.eta.get(&block.id).copied().unwrap_or_default()
    }

    /// Checks the range of `t` and the forcing of `eta`: `eta = +` whenever
    /// `2t = min(a, b)`, where no tempered part is left to carry a sign.
    pub fn validate(&self, psi: &ArthurParameter) -> Result<()> {
        for block in psi.blocks() {
            let min = block.a.min(block.b);
            let t = self.t_of(block);
            if t > min / 2 {
                return Err(Error::Precondition(format!(
                    "t = {t} exceeds floor(min(a,b)/2) for {block}"
                )));
            }
            if 2 * t == min && self.eta_of(block) == Sign::Minus {
                return Err(Error::Precondition(format!(
                    "eta must be + when 2t = min(a,b) for {block}"
                )));
            }
        }
        Ok(())
    }

    /// `block:t=..,eta=..` in canonical block order.
    pub fn describe(&self, psi: &ArthurParameter) -> String {
        psi.sorted_blocks()
            .into_iter()
            .map(|b| format!("{b}:t={},eta={}", self.t_of(b), self.eta_of(b)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// `prod eta^min(a,b) * (-1)^(floor(min(a,b)/2) + t)` over the blocks.
pub fn packet_sign(psi: &ArthurParameter, p: &PacketParams) -> Sign {
    psi.blocks()
        .iter()
        .map(|b| {
            let min = u64::from(b.a.min(b.b));
            p.eta_of(b).pow(min) * Sign::parity(min / 2 + u64::from(p.t_of(b)))
        })
        .product()
}

fn require_explicit_shape(psi: &ArthurParameter) -> Result<()> {
    if !is_discrete_diagonal(psi) {
        return Err(Error::Precondition(
            "the diagonal restriction is not multiplicity free".into(),
        ));
    }
    Ok(())
}

/// All `(t, eta)` with the range and forcing constraints and sign `g`.
///
/// Blocks are taken in canonical order; `t` vectors run lexicographically
/// and, for each, `eta` vectors with `+` before `-`.
pub fn enumerate_packet_params(psi: &ArthurParameter, g: GroupSign) -> Result<Vec<PacketParams>> {
    require_explicit_shape(psi)?;
    if let Some(bad) = psi.blocks().iter().find(|b| !has_good_parity(psi, b, g)) {
        return Err(Error::Precondition(format!(
            "{bad} does not have good parity for sign {g}"
        )));
    }
    let blocks = psi.sorted_blocks();
    let mut out = Vec::new();
    let mut ts = vec![0u32; blocks.len()];
    loop {
        // eta is free exactly where the tempered part survives.
        let free: Vec<usize> = (0..blocks.len())
            .filter(|&i| 2 * ts[i] != blocks[i].a.min(blocks[i].b))
            .collect();
        for mask in 0u64..(1u64 << free.len()) {
            let mut eta: BTreeMap<usize, Sign> = blocks.iter().map(|b| (b.id, Sign::Plus)).collect();
            for (bit, &i) in free.iter().enumerate() {
                if mask & (1 << (free.len() - 1 - bit)) != 0 {
                    eta.insert(blocks[i].id, Sign::Minus);
                }
            }
            let p = PacketParams {
                t: blocks.iter().zip(&ts).map(|(b, &t)| (b.id, t)).collect(),
                eta,
            };
            if packet_sign(psi, &p) == g {
                out.push(p);
            }
        }
        // next t vector, last block fastest
        let mut i = blocks.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if ts[i] < blocks[i].a.min(blocks[i].b) / 2 {
                ts[i] += 1;
                break;
            }
            ts[i] = 0;
        }
    }
}

/// `St(rho, a)` twisted by `|.|^-x`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TwistedSteinberg {
    pub rho: String,
    pub a: u32,
    pub x: HalfInt,
}

impl TwistedSteinberg {
    /// `[(a-1)/2 - x, -(a-1)/2 - x]`, centred at `-x`.
    pub fn segment(&self) -> Segment {
        Segment::from_start(HalfInt::centred_top(self.a) - self.x, self.a)
    }

    /// Langlands order: `x` descending, then label, then `a` descending.
    pub fn langlands_key(&self) -> (std::cmp::Reverse<HalfInt>, &str, std::cmp::Reverse<u32>) {
        (std::cmp::Reverse(self.x), &self.rho, std::cmp::Reverse(self.a))
    }
}

impl fmt::Display for TwistedSteinberg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.rho, self.a, self.x)
    }
}

/// A summand `rho ⊗ rep_c` of the tempered support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TemperedPart {
    pub rho: String,
    pub c: u32,
}

impl fmt::Display for TemperedPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.rho, self.c)
    }
}

/// Twisted Steinberg factors in Langlands order plus a tempered support.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LanglandsData {
    pub twisted: Vec<TwistedSteinberg>,
    pub tempered: Vec<TemperedPart>,
}

impl LanglandsData {
    /// Sorts both parts into their canonical order.
    pub fn normalized(mut self) -> Self {
        self.twisted.sort_by(|x, y| x.langlands_key().cmp(&y.langlands_key()));
        self.tempered.sort_by(|x, y| x.rho.cmp(&y.rho).then(y.c.cmp(&x.c)));
        self
    }

    /// `sum 2 dim(rho) a` over twisted factors plus `sum dim(rho) c` over
    /// the tempered part.
    pub fn dimension(&self, psi: &ArthurParameter) -> Result<u64> {
        let mut total = 0u64;
        for f in &self.twisted {
            total += 2 * u64::from(psi.label(&f.rho)?.dim()) * u64::from(f.a);
        }
        for t in &self.tempered {
            total += u64::from(psi.label(&t.rho)?.dim()) * u64::from(t.c);
        }
        Ok(total)
    }
}

impl fmt::Display for LanglandsData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tw: Vec<String> = self.twisted.iter().map(ToString::to_string).collect();
        let te: Vec<String> = self.tempered.iter().map(ToString::to_string).collect();
        write!(f, "twisted=[{}] tempered={{{}}}", tw.join(","), te.join(","))
    }
}

/// `c` in `[low, high]` with the parity of `a + b - 1`, descending.
fn tempered_range(rho: &str, a: u32, b: u32, t: u32) -> impl Iterator<Item = TemperedPart> + '_ {
    let low = i64::from(a) - i64::from(b) + 1 + 2 * i64::from(t);
    let high = i64::from(a) + i64::from(b) - 1 - 2 * i64::from(t);
    (0..)
        .map(move |k| high - 2 * k)
        .take_while(move |&c| c >= low)
        .map(move |c| TemperedPart {
            rho: rho.to_string(),
            c: c as u32,
        })
}

/// Langlands data of the member `p` when `a >= b` on every block.
pub fn langlands_data_explicit(psi: &ArthurParameter, p: &PacketParams) -> Result<LanglandsData> {
    require_explicit_shape(psi)?;
    let mut parity = psi.blocks().iter().map(|b| {
        psi.label(&b.rho)
            .ok()
            .and_then(|l| l.self_dual_type().sign())
            .map(|s| s * block_sl2_sign(b.a) * block_sl2_sign(b.b))
    });
    if let Some(first) = parity.next() {
        if first.is_none() || parity.any(|s| s != first) {
            return Err(Error::Precondition(
                "the blocks do not share one good parity".into(),
            ));
        }
    }
    if let Some(b) = psi.blocks().iter().find(|b| b.a < b.b) {
        return Err(Error::Precondition(format!("{b} has a < b")));
    }
    p.validate(psi)?;
    let mut data = LanglandsData::default();
    for block in psi.blocks() {
        let t = p.t_of(block);
        let top = HalfInt::centred_top(block.b);
        data.twisted.extend((0..t).map(|k| TwistedSteinberg {
            rho: block.rho.clone(),
            a: block.a,
            x: top - HalfInt::from_int(i64::from(k)),
        }));
        data.tempered.extend(tempered_range(&block.rho, block.a, block.b, t));
    }
    Ok(data.normalized())
}

/// Langlands data of the distinguished member: factors `(rho, a, x)` for
/// `x = (b-1)/2 .. delta(b)` and tempered `(rho, a)` for odd `b`.
pub fn langlands_subpacket_data(psi: &ArthurParameter) -> LanglandsData {
    let mut data = LanglandsData::default();
    for block in psi.blocks() {
        data.twisted.extend(block_exponents(block.b).map(|x| TwistedSteinberg {
            rho: block.rho.clone(),
            a: block.a,
            x,
        }));
        if block.b % 2 == 1 {
            data.tempered.push(TemperedPart {
                rho: block.rho.clone(),
                c: block.a,
            });
        }
    }
    data.normalized()
}

/// When every `t` lies in `{0, floor(b/2)}`, the parameter whose Langlands
/// subpacket contains the member: each `t = 0` block `(rho, a, b)` becomes
/// the blocks `(rho, c, 1)` for `c` in its diagonal range.
pub fn langlands_membership(psi: &ArthurParameter, p: &PacketParams) -> Result<Option<ArthurParameter>> {
    require_explicit_shape(psi)?;
    if let Some(b) = psi.blocks().iter().find(|b| b.a < b.b) {
        return Err(Error::Precondition(format!("{b} has a < b")));
    }
    p.validate(psi)?;
    if psi
        .blocks()
        .iter()
        .any(|b| p.t_of(b) != 0 && p.t_of(b) != b.b / 2)
    {
        return Ok(None);
    }
    let mut out = psi.empty_like();
    for block in psi.sorted_blocks() {
        if p.t_of(block) == 0 {
            for c in clebsch_gordan(block.a, block.b).collect::<Vec<_>>().into_iter().rev() {
                out.push_block(&block.rho, c, 1)?;
            }
        } else {
            out.push_block(&block.rho, block.a, block.b)?;
        }
    }
    Ok(Some(out))
}

/// Trivial on the first `SL(2)` and unramified on the Weil group.
pub fn unramified_status(psi: &ArthurParameter) -> bool {
    psi.blocks()
        .iter()
        .all(|b| b.a == 1 && psi.label(&b.rho).is_ok_and(|l| l.is_unramified()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::{exponents_of_parameter, CuspidalLabel, SelfDualType};

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn orth(blocks: &[(u32, u32)]) -> ArthurParameter {
        ArthurParameter::single("r", SelfDualType::Orthogonal, blocks).unwrap()
    }

    fn params(psi: &ArthurParameter, t: &[u32], eta: &[Sign]) -> PacketParams {
        PacketParams {
            t: psi.blocks().iter().zip(t).map(|(b, &t)| (b.id, t)).collect(),
            eta: psi.blocks().iter().zip(eta).map(|(b, &e)| (b.id, e)).collect(),
        }
    }

    fn tw(data: &LanglandsData) -> Vec<(u32, HalfInt)> {
        data.twisted.iter().map(|f| (f.a, f.x)).collect()
    }

    fn te(data: &LanglandsData) -> Vec<u32> {
        data.tempered.iter().map(|t| t.c).collect()
    }

    use Sign::{Minus, Plus};

    #[test]
    fn sign_examples() {
        let psi = orth(&[(2, 2)]);
        assert_eq!(packet_sign(&psi, &params(&psi, &[1], &[Plus])), Plus);
        assert_eq!(packet_sign(&psi, &params(&psi, &[0], &[Minus])), Minus);
        let one = orth(&[(1, 1)]);
        assert_eq!(packet_sign(&one, &params(&one, &[0], &[Plus])), Plus);
    }

    fn enumerate(psi: &ArthurParameter, g: Sign) -> Vec<(Vec<u32>, Vec<Sign>)> {
        enumerate_packet_params(psi, g)
            .unwrap()
            .into_iter()
            .map(|p| (p.t.values().copied().collect(), p.eta.values().copied().collect()))
            .collect()
    }

    #[test]
    fn enumeration_examples() {
        let psi = orth(&[(2, 2)]);
        assert_eq!(enumerate(&psi, Plus), vec![(vec![1], vec![Plus])]);
        let symp = ArthurParameter::single("r", SelfDualType::Symplectic, &[(2, 2)]).unwrap();
        assert_eq!(
            enumerate(&symp, Minus),
            vec![(vec![0], vec![Plus]), (vec![0], vec![Minus])]
        );
        assert_eq!(enumerate(&orth(&[(3, 1)]), Plus), vec![(vec![0], vec![Plus])]);
        let symp51 = ArthurParameter::single("r", SelfDualType::Symplectic, &[(5, 1)]).unwrap();
        assert_eq!(enumerate(&symp51, Minus), vec![(vec![0], vec![Minus])]);
    }

    #[test]
    fn enumeration_refuses_bad_input() {
        assert!(enumerate_packet_params(&orth(&[(2, 2)]), Minus).is_err());
        assert!(enumerate_packet_params(&orth(&[(2, 2), (3, 1)]), Plus).is_err());
        assert!(enumerate_packet_params(&orth(&[(1, 1), (1, 1)]), Plus).is_err());
    }

    #[test]
    fn explicit_examples() {
        let psi = orth(&[(3, 2)]);
        let d = langlands_data_explicit(&psi, &params(&psi, &[1], &[Plus])).unwrap();
        assert_eq!(tw(&d), vec![(3, h(1))]);
        assert!(te(&d).is_empty());
        let d = langlands_data_explicit(&psi, &params(&psi, &[0], &[Minus])).unwrap();
        assert!(tw(&d).is_empty());
        assert_eq!(te(&d), vec![4, 2]);
        let five = orth(&[(5, 1)]);
        let d = langlands_data_explicit(&five, &params(&five, &[0], &[Plus])).unwrap();
        assert_eq!(te(&d), vec![5]);
        assert!(langlands_data_explicit(&orth(&[(2, 3)]), &params(&psi, &[0], &[Plus])).is_err());
        assert!(langlands_data_explicit(&psi, &params(&psi, &[2], &[Plus])).is_err());
        assert!(langlands_data_explicit(&psi, &params(&psi, &[1], &[Minus])).is_err());
    }

    #[test]
    fn explicit_dimension_is_conserved() {
        for a in 1..=15u32 {
            for b in 1..=a.min(16 - a) {
                let psi = orth(&[(a, b)]);
                for t in 0..=b / 2 {
                    let p = params(&psi, &[t], &[Plus]);
                    let d = langlands_data_explicit(&psi, &p).unwrap();
                    assert_eq!(d.dimension(&psi).unwrap(), psi.dimension(), "a={a} b={b} t={t}");
                }
            }
        }
    }

    #[test]
    fn subpacket_examples() {
        let d = langlands_subpacket_data(&orth(&[(3, 2)]));
        assert_eq!(tw(&d), vec![(3, h(1))]);
        assert!(te(&d).is_empty());
        let d = langlands_subpacket_data(&orth(&[(1, 3)]));
        assert_eq!(tw(&d), vec![(1, h(2))]);
        assert_eq!(te(&d), vec![1]);
        let d = langlands_subpacket_data(&orth(&[(4, 1)]));
        assert!(tw(&d).is_empty());
        assert_eq!(te(&d), vec![4]);
    }

    #[test]
    fn subpacket_matches_maximal_t() {
        for a in 1..=13u32 {
            for b in 1..=a.min(14 - a) {
                let psi = orth(&[(a, b)]);
                let p = PacketParams::uniform(&psi, |b| b.b / 2);
                assert_eq!(
                    langlands_data_explicit(&psi, &p).unwrap(),
                    langlands_subpacket_data(&psi)
                );
            }
        }
    }

    #[test]
    fn subpacket_exponents_match_parameter() {
        for blocks in [&[(3, 2), (1, 4)][..], &[(2, 5), (2, 2), (7, 3)], &[(1, 1)]] {
            let psi = orth(blocks);
            let xs: crate::combinatorics::DescMultiset =
                langlands_subpacket_data(&psi).twisted.iter().map(|f| f.x).collect();
            assert_eq!(xs, exponents_of_parameter(&psi, None));
        }
    }

    #[test]
    fn membership_examples() {
        let psi = orth(&[(3, 2)]);
        let same = langlands_membership(&psi, &params(&psi, &[1], &[Plus])).unwrap().unwrap();
        assert_eq!(same.to_string(), "{(r,3,2)}");
        let split = langlands_membership(&psi, &params(&psi, &[0], &[Plus])).unwrap().unwrap();
        assert_eq!(split.to_string(), "{(r,4,1),(r,2,1)}");
        let big = orth(&[(4, 4)]);
        assert_eq!(langlands_membership(&big, &params(&big, &[1], &[Plus])).unwrap(), None);
    }

    #[test]
    fn unramified_examples() {
        let chi = CuspidalLabel::new("chi", 1, SelfDualType::Orthogonal, "chi", true).unwrap();
        let base = ArthurParameter::new([chi]).unwrap();
        assert!(unramified_status(&base.clone().with_block("chi", 1, 5).unwrap()));
        assert!(!unramified_status(&base.with_block("chi", 2, 4).unwrap()));
        assert!(!unramified_status(&orth(&[(1, 1)])));
    }
}
