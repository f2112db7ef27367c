//! Arthur parameters: cuspidal labels, Jordan blocks, restrictions, orbits,
//! exponents, parity split, good orders and dominant parameters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::{DescMultiset, HalfInt, Partition, Segment};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SelfDualType {
    Orthogonal,
    Symplectic,
    NotSelfDual,
}

impl SelfDualType {
    /// `+` for orthogonal, `-` for symplectic.
    pub fn sign(self) -> Option<Sign> {
        match self {
            SelfDualType::Orthogonal => Some(Sign::Plus),
            SelfDualType::Symplectic => Some(Sign::Minus),
            SelfDualType::NotSelfDual => None,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            SelfDualType::Orthogonal => "orth",
            SelfDualType::Symplectic => "symp",
            SelfDualType::NotSelfDual => "no",
        }
    }
}

impl FromStr for SelfDualType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orth" => Ok(SelfDualType::Orthogonal),
            "symp" => Ok(SelfDualType::Symplectic),
            "no" => Ok(SelfDualType::NotSelfDual),
            _ => Err(Error::InvalidValue(format!(
                "self-duality `{s}` (expected orth, symp or no)"
            ))),
        }
    }
}

/// A sign `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

/// The sign selecting the type of the target dual group: `+1` orthogonal,
/// `-1` symplectic.
pub type GroupSign = Sign;

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `(-1)^n`.
    pub fn parity(n: u64) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn pow(self, n: u64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::parity(n),
        }
    }

    /// Sign of a non-zero integer; `None` for zero.
    pub fn of(n: i64) -> Option<Sign> {
        match n.cmp(&0) {
            std::cmp::Ordering::Greater => Some(Sign::Plus),
            std::cmp::Ordering::Less => Some(Sign::Minus),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn all() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl std::iter::Product for Sign {
    fn product<I: Iterator<Item = Sign>>(iter: I) -> Sign {
        iter.fold(Sign::Plus, Mul::mul)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(Error::InvalidValue(format!(
                "sign `{other}` (expected +1 or -1)"
            ))),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Self-duality type of the irreducible representation of dimension `n` of
/// `SL(2)`: `+` (orthogonal) for odd `n`, `-` (symplectic) for even `n`.
pub fn block_sl2_sign(n: u32) -> Sign {
    if n % 2 == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// An opaque cuspidal representation with its metadata.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CuspidalLabel {
    name: String,
    dim: u32,
    self_dual: SelfDualType,
    dual_name: String,
    unramified: bool,
}

impl CuspidalLabel {
    pub fn new(
        name: impl Into<String>,
        dim: u32,
        self_dual: SelfDualType,
        dual_name: impl Into<String>,
        unramified: bool,
    ) -> Result<Self> {
        let name = name.into();
        let dual_name = dual_name.into();
        if !is_identifier(&name) {
            return Err(Error::InvalidValue(format!("label name `{name}`")));
        }
        if !is_identifier(&dual_name) {
            return Err(Error::InvalidValue(format!("dual name `{dual_name}`")));
        }
        if dim == 0 {
            return Err(Error::InvalidValue(format!("{name}: dimension must be positive")));
        }
        if (self_dual == SelfDualType::NotSelfDual) != (dual_name != name) {
            return Err(Error::InvalidValue(format!(
                "{name}: dual name `{dual_name}` disagrees with self-duality `{}`",
                self_dual.keyword()
            )));
        }
        if unramified && dim != 1 {
            return Err(Error::InvalidValue(format!(
                "{name}: an unramified label has dimension 1"
            )));
        }
        Ok(CuspidalLabel {
            name,
            dim,
            self_dual,
            dual_name,
            unramified,
        })
    }

    /// A self-dual label of dimension 1.
    pub fn self_dual(name: impl Into<String>, kind: SelfDualType) -> Result<Self> {
        let name = name.into();
        CuspidalLabel::new(name.clone(), 1, kind, name, false)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn self_dual_type(&self) -> SelfDualType {
        self.self_dual
    }

    pub fn dual_name(&self) -> &str {
        &self.dual_name
    }

    pub fn is_self_dual(&self) -> bool {
        self.self_dual != SelfDualType::NotSelfDual
    }

    pub fn is_unramified(&self) -> bool {
        self.unramified
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'' || c == '*')
}

/// One Jordan block `(rho, a, b)`; `id` tells equal blocks apart.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct JordanBlock {
    pub rho: String,
    pub a: u32,
    pub b: u32,
    pub id: usize,
}

impl JordanBlock {
    /// Canonical sort key: label ascending, then `a` and `b` descending.
    pub fn canonical_key(&self) -> (&str, std::cmp::Reverse<u32>, std::cmp::Reverse<u32>, usize) {
        (
            &self.rho,
            std::cmp::Reverse(self.a),
            std::cmp::Reverse(self.b),
            self.id,
        )
    }

    pub fn same_shape(&self, other: &JordanBlock) -> bool {
        self.rho == other.rho && self.a == other.a && self.b == other.b
    }

    /// `[|a-b|+1, a+b-1]`, the range of the diagonal restriction.
    pub fn diagonal_range(&self) -> (u32, u32) {
        (self.a.abs_diff(self.b) + 1, self.a + self.b - 1)
    }
}

impl fmt::Display for JordanBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.rho, self.a, self.b)
    }
}

/// A multiset of Jordan blocks together with the labels they reference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArthurParameter {
    labels: BTreeMap<String, CuspidalLabel>,
    blocks: Vec<JordanBlock>,
}

impl ArthurParameter {
    /// An empty parameter over the given labels. Every non-self-dual label
    /// must come with its dual.
    pub fn new(labels: impl IntoIterator<Item = CuspidalLabel>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for label in labels {
            let name = label.name.clone();
            if table.insert(name.clone(), label).is_some() {
                return Err(Error::InvalidValue(format!("label `{name}` declared twice")));
            }
        }
        for label in table.values() {
            if label.is_self_dual() {
                continue;
            }
            let dual = table
                .get(&label.dual_name)
                .ok_or_else(|| Error::UnknownLabel(label.dual_name.clone()))?;
            if dual.dual_name != label.name || dual.dim != label.dim {
                return Err(Error::InvalidValue(format!(
                    "labels `{}` and `{}` are not mutually dual",
                    label.name, dual.name
                )));
            }
        }
        Ok(ArthurParameter {
            labels: table,
            blocks: Vec::new(),
        })
    }

    /// Convenience constructor over a single dimension-1 self-dual label.
    pub fn single(rho: &str, kind: SelfDualType, blocks: &[(u32, u32)]) -> Result<Self> {
        let mut psi = ArthurParameter::new([CuspidalLabel::self_dual(rho, kind)?])?;
        for &(a, b) in blocks {
            psi.push_block(rho, a, b)?;
        }
        Ok(psi)
    }

    /// Same labels, no blocks.
    pub fn empty_like(&self) -> Self {
        ArthurParameter {
            labels: self.labels.clone(),
            blocks: Vec::new(),
        }
    }

    /// Adds a block with a fresh instance id and returns that id.
    pub fn push_block(&mut self, rho: &str, a: u32, b: u32) -> Result<usize> {
        if !self.labels.contains_key(rho) {
            return Err(Error::UnknownLabel(rho.to_string()));
        }
        if a == 0 || b == 0 {
            return Err(Error::InvalidValue(format!(
                "block ({rho},{a},{b}): dimensions must be positive"
            )));
        }
        let id = self.blocks.iter().map(|b| b.id + 1).max().unwrap_or(0);
        self.blocks.push(JordanBlock {
            rho: rho.to_string(),
            a,
            b,
            id,
        });
        Ok(id)
    }

    pub fn with_block(mut self, rho: &str, a: u32, b: u32) -> Result<Self> {
        self.push_block(rho, a, b)?;
        Ok(self)
    }

    /// Keeps a copy of `block` including its id; used to build sub-parameters.
    pub(crate) fn push_existing(&mut self, block: JordanBlock) {
        debug_assert!(self.blocks.iter().all(|b| b.id != block.id));
        self.blocks.push(block);
    }

    pub fn blocks(&self) -> &[JordanBlock] {
        &self.blocks
    }

    pub fn block(&self, id: usize) -> Option<&JordanBlock> {
        self.blocks.iter().find(|b| b.id == id)
    }

    /// Blocks in canonical order: label, then `a` and `b` descending, then id.
    pub fn sorted_blocks(&self) -> Vec<&JordanBlock> {
        let mut out: Vec<&JordanBlock> = self.blocks.iter().collect();
        out.sort_by(|x, y| x.canonical_key().cmp(&y.canonical_key()));
        out
    }

    pub fn blocks_of<'a>(&'a self, rho: &'a str) -> impl Iterator<Item = &'a JordanBlock> + 'a {
        self.blocks.iter().filter(move |b| b.rho == rho)
    }

    pub fn labels(&self) -> impl Iterator<Item = &CuspidalLabel> {
        self.labels.values()
    }

    pub fn label(&self, name: &str) -> Result<&CuspidalLabel> {
        self.labels
            .get(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// Labels used by at least one block, sorted.
    pub fn used_rhos(&self) -> BTreeSet<&str> {
        self.blocks.iter().map(|b| b.rho.as_str()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// Total dimension `sum dim(rho) * a * b`.
    pub fn dimension(&self) -> u64 {
        self.blocks
            .iter()
            .map(|b| u64::from(self.labels[&b.rho].dim) * u64::from(b.a) * u64::from(b.b))
            .sum()
    }

    /// Shapes `(rho, a, b)` as a sorted multiset, ignoring instance ids.
    pub fn shapes(&self) -> Vec<(String, u32, u32)> {
        let mut out: Vec<_> = self
            .blocks
            .iter()
            .map(|b| (b.rho.clone(), b.a, b.b))
            .collect();
        out.sort();
        out
    }

    /// Equality as multisets of shapes over identical label tables.
    pub fn same_blocks(&self, other: &ArthurParameter) -> bool {
        self.labels == other.labels && self.shapes() == other.shapes()
    }
}

impl fmt::Display for ArthurParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.sorted_blocks().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, "}}")
    }
}

/// One summand `rho ⊗ rep_a` twisted by `|.|^shift`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TwistedBlock {
    pub rho: String,
    pub a: u32,
    pub shift: HalfInt,
}

/// Restriction along the Langlands embedding: each block `(rho, a, b)` gives
/// `(rho, a, c)` for `c` from `-(b-1)/2` up to `(b-1)/2`.
pub fn langlands_restriction(psi: &ArthurParameter) -> Vec<TwistedBlock> {
    let mut out = Vec::new();
    for block in psi.sorted_blocks() {
        let top = HalfInt::centred_top(block.b);
        out.extend((0..block.b).map(|k| TwistedBlock {
            rho: block.rho.clone(),
            a: block.a,
            shift: -top + HalfInt::from_int(i64::from(k)),
        }));
    }
    out
}

/// The Clebsch-Gordan degrees of one block: `|a-b|+1, |a-b|+3, ..., a+b-1`.
pub fn clebsch_gordan(a: u32, b: u32) -> impl Iterator<Item = u32> {
    let low = a.abs_diff(b) + 1;
    (0..a.min(b)).map(move |k| low + 2 * k)
}

/// Restriction to the diagonal `SL(2)`, as a sorted multiset of `(rho, c)`.
pub fn diagonal_restriction(psi: &ArthurParameter) -> Vec<(String, u32)> {
    let mut out: Vec<(String, u32)> = psi
        .blocks
        .iter()
        .flat_map(|b| clebsch_gordan(b.a, b.b).map(move |c| (b.rho.clone(), c)))
        .collect();
    out.sort();
    out
}

/// Sorted multiset of `(rho, x)` with `x` running over `[-(c-1)/2, (c-1)/2]`
/// for each diagonal summand `(rho, c)`.
pub fn extended_cuspidal_support(psi: &ArthurParameter) -> Vec<(String, HalfInt)> {
    let mut out: Vec<(String, HalfInt)> = diagonal_restriction(psi)
        .into_iter()
        .flat_map(|(rho, c)| {
            let top = HalfInt::centred_top(c);
            (0..c).map(move |k| (rho.clone(), top - HalfInt::from_int(i64::from(k))))
        })
        .collect();
    out.sort();
    out
}

/// Part `b` with multiplicity `a`, over the blocks with label `rho`.
pub fn orbit_second_sl2(psi: &ArthurParameter, rho: &str) -> Partition {
    Partition::from_multiplicities(psi.blocks_of(rho).map(|b| (b.b, b.a)))
}

/// Part `a` with multiplicity `b`, over the blocks with label `rho`.
pub fn orbit_first_sl2(psi: &ArthurParameter, rho: &str) -> Partition {
    Partition::from_multiplicities(psi.blocks_of(rho).map(|b| (b.a, b.b)))
}

/// `1/2` when `b` is even, `1` when `b` is odd.
pub fn delta(b: u32) -> HalfInt {
    if b.is_multiple_of(2) {
        HalfInt::HALF
    } else {
        HalfInt::ONE
    }
}

/// `(b-1)/2, (b-3)/2, ..., delta(b)`; empty for `b = 1`.
pub fn block_exponents(b: u32) -> impl Iterator<Item = HalfInt> {
    let top = HalfInt::centred_top(b);
    (0..b / 2).map(move |k| top - HalfInt::from_int(i64::from(k)))
}

/// Exponents of the parameter, optionally restricted to one label.
pub fn exponents_of_parameter(psi: &ArthurParameter, rho: Option<&str>) -> DescMultiset {
    psi.blocks
        .iter()
        .filter(|b| rho.is_none_or(|r| b.rho == r))
        .flat_map(|b| block_exponents(b.b))
        .collect()
}

/// Whether `block` has good parity for the group sign `g`.
pub fn has_good_parity(psi: &ArthurParameter, block: &JordanBlock, g: GroupSign) -> bool {
    psi.labels
        .get(&block.rho)
        .and_then(|l| l.self_dual.sign())
        .is_some_and(|s| s * block_sl2_sign(block.a) * block_sl2_sign(block.b) == g)
}

pub fn is_good_parity(psi: &ArthurParameter, g: GroupSign) -> bool {
    psi.blocks.iter().all(|b| has_good_parity(psi, b, g))
}

/// Splits off the good-parity blocks. The remaining blocks must pair up as
/// `psi_half ⊕ dual(psi_half)`; the second component is `psi_half`.
pub fn good_parity_split(
    psi: &ArthurParameter,
    g: GroupSign,
) -> Result<(ArthurParameter, ArthurParameter)> {
    let mut good = psi.empty_like();
    let mut bad: BTreeMap<(String, u32, u32), Vec<&JordanBlock>> = BTreeMap::new();
    for block in psi.sorted_blocks() {
        if has_good_parity(psi, block, g) {
            good.push_existing(block.clone());
        } else {
            bad.entry((block.rho.clone(), block.a, block.b))
                .or_default()
                .push(block);
        }
    }
    let mut half = psi.empty_like();
    for ((rho, a, b), copies) in &bad {
        let label = &psi.labels[rho];
        if label.is_self_dual() {
            if copies.len() % 2 != 0 {
                return Err(Error::Pairing(copies[0].to_string()));
            }
            for block in &copies[..copies.len() / 2] {
                half.push_existing((*block).clone());
            }
        } else {
            let partner = bad
                .get(&(label.dual_name.clone(), *a, *b))
                .map_or(0, Vec::len);
            if partner != copies.len() {
                return Err(Error::Pairing(copies[0].to_string()));
            }
            if rho < &label.dual_name {
                for block in copies {
                    half.push_existing((*block).clone());
                }
            }
        }
    }
    Ok((good, half))
}

/// `sum (min(a,b) - 1)`; zero exactly for elementary parameters.
pub fn ell(psi: &ArthurParameter) -> u64 {
    psi.blocks
        .iter()
        .map(|b| u64::from(b.a.min(b.b) - 1))
        .sum()
}

/// True when the diagonal restriction is multiplicity free.
pub fn is_discrete_diagonal(psi: &ArthurParameter) -> bool {
    let mut seen = BTreeSet::new();
    psi.blocks
        .iter()
        .all(|b| clebsch_gordan(b.a, b.b).all(|c| seen.insert((b.rho.as_str(), c))))
}

/// A total order on the block instances, listed from smallest to largest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockOrder(Vec<usize>);

impl BlockOrder {
    /// Validates that `ids` lists every block of `psi` exactly once.
    pub fn new(psi: &ArthurParameter, ids: Vec<usize>) -> Result<Self> {
        let given: BTreeSet<usize> = ids.iter().copied().collect();
        let expected: BTreeSet<usize> = psi.blocks.iter().map(|b| b.id).collect();
        if given != expected || given.len() != ids.len() {
            return Err(Error::Precondition(
                "the order must list every block instance exactly once".into(),
            ));
        }
        Ok(BlockOrder(ids))
    }

    /// Blocks ordered by increasing `a + b`, then increasing `|a - b|`.
    /// This is always a good order.
    pub fn natural(psi: &ArthurParameter) -> Self {
        let mut blocks: Vec<&JordanBlock> = psi.blocks.iter().collect();
        blocks.sort_by_key(|b| (b.a + b.b, b.a.abs_diff(b.b), b.id));
        BlockOrder(blocks.into_iter().map(|b| b.id).collect())
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    fn position(&self, id: usize) -> Option<usize> {
        self.0.iter().position(|&x| x == id)
    }
}

/// For same-label blocks with `(a-b)(a'-b') > 0`, `|a-b| > |a'-b'|` together
/// with `a+b > a'+b'` must put the first block above the second.
pub fn is_good_order(psi: &ArthurParameter, order: &BlockOrder) -> bool {
    let pos = |id| order.position(id).unwrap_or(usize::MAX);
    psi.blocks.iter().all(|x| {
        psi.blocks.iter().all(|y| {
            let dx = i64::from(x.a) - i64::from(x.b);
            let dy = i64::from(y.a) - i64::from(y.b);
            let constrained = x.rho == y.rho
                && x.id != y.id
                && dx * dy > 0
                && dx.abs() > dy.abs()
                && x.a + x.b > y.a + y.b;
            !constrained || pos(x.id) > pos(y.id)
        })
    })
}

/// The sign attached to a block for domination: `sign(a-b)`, or the free
/// choice in `zeta` when `a = b` (default `+`).
pub fn zeta_of(block: &JordanBlock, zeta: &BTreeMap<usize, Sign>) -> Result<Sign> {
    let forced = Sign::of(i64::from(block.a) - i64::from(block.b));
    match (forced, zeta.get(&block.id)) {
        (Some(f), Some(&z)) if f != z => Err(Error::ZetaInconsistent(block.to_string())),
        (Some(f), _) => Ok(f),
        (None, z) => Ok(z.copied().unwrap_or_default()),
    }
}

/// Replaces each block by `(rho, a+2T, b)` when its sign is `+` and by
/// `(rho, a, b+2T)` when it is `-`. Instance ids are kept, so `order`
/// carries over unchanged.
pub fn dominant_parameter(
    psi: &ArthurParameter,
    order: &BlockOrder,
    zeta: &BTreeMap<usize, Sign>,
    shift: &BTreeMap<usize, u32>,
) -> Result<ArthurParameter> {
    BlockOrder::new(psi, order.0.clone())?;
    if !is_good_order(psi, order) {
        return Err(Error::Precondition("the block order is not a good order".into()));
    }
    let mut out = psi.empty_like();
    for block in &psi.blocks {
        let z = zeta_of(block, zeta)?;
        let t = shift.get(&block.id).copied().unwrap_or(0);
        let mut new = block.clone();
        match z {
            Sign::Plus => new.a += 2 * t,
            Sign::Minus => new.b += 2 * t,
        }
        out.push_existing(new);
    }
    Ok(out)
}

/// A run of half-integers from `from` to `to` in unit steps, in whichever
/// direction `to` lies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct JacRun {
    pub from: HalfInt,
    pub to: HalfInt,
}

impl JacRun {
    pub fn len(&self) -> u32 {
        ((self.to - self.from).abs().twice() / 2 + 1) as u32
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> Vec<HalfInt> {
        let step = if self.to >= self.from {
            HalfInt::ONE
        } else {
            -HalfInt::ONE
        };
        (0..self.len())
            .map(|k| self.from + step * i64::from(k))
            .collect()
    }

    /// The run as a decreasing segment, when it runs downward.
    pub fn as_segment(&self) -> Option<Segment> {
        (self.from >= self.to)
            .then(|| Segment::new(self.from, self.to).ok())
            .flatten()
    }
}

impl fmt::Display for JacRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},...,{}>", self.from, self.to)
    }
}

/// The Jacquet runs taking the dominant block back to `block`, listed for
/// `l = T` down to `1`: the `l`-th run goes from `(a-b)/2 + zeta*l` to
/// `zeta*((a+b)/2 - 1 + l)`.
pub fn descent_segments(block: &JordanBlock, zeta: Sign, t: u32) -> Result<Vec<JacRun>> {
    if Sign::of(i64::from(block.a) - i64::from(block.b)).is_some_and(|s| s != zeta) {
        return Err(Error::ZetaInconsistent(block.to_string()));
    }
    let diff = HalfInt::from_twice(i64::from(block.a) - i64::from(block.b));
    let half_sum = HalfInt::from_twice(i64::from(block.a + block.b)) - HalfInt::ONE;
    Ok((1..=t)
        .rev()
        .map(|l| {
            let l = HalfInt::from_int(i64::from(l));
            let z = HalfInt::from_int(zeta.value());
            let from = diff + z.checked_mul(l).expect("integer product");
            let to = z.checked_mul(half_sum + l).expect("integer times half-integer");
            JacRun { from, to }
        })
        .collect())
}
