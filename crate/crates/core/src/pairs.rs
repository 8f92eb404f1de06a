//! Integer-pair multisets and the index sets built from them.
//!
//! A [`PairSet`] is a multiset of pairs `(a, b)` with `a >= 0`, `0 <= b <= 3`
//! and `(a, b) != (0, 0)`, kept in decreasing standard order: `(a, b) > (a', b')`
//! iff `a > a'`, or `a == a'` and `b > b'`. `a` is the length of the psi-class
//! product in an insertion and `b` its hyperplane power.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{factorial, Rational};
use crate::error::{Error, Result};

pub const MAX_HYPERPLANE_POWER: u8 = 3;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntegerPair {
    pub a: u32,
    pub b: u8,
}

impl IntegerPair {
    pub fn new(a: u32, b: u8) -> Result<Self> {
        if b > MAX_HYPERPLANE_POWER {
            return Err(Error::Argument(format!(
                "hyperplane power {b} out of range 0..=3 in pair ({a},{b})"
            )));
        }
        if a == 0 && b == 0 {
            return Err(Error::Argument("pair (0,0) is not allowed".into()));
        }
        Ok(IntegerPair { a, b })
    }

    pub fn weight(&self) -> u64 {
        self.a as u64 + self.b as u64
    }

    /// Contact order `a + 1` of the matching relative marking.
    pub fn contact(&self) -> u64 {
        self.a as u64 + 1
    }
}

impl fmt::Display for IntegerPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Canonically ordered multiset of [`IntegerPair`]s.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PairSet {
    pairs: Vec<IntegerPair>,
}

impl PairSet {
    pub fn from_pairs(mut pairs: Vec<IntegerPair>) -> Self {
        pairs.sort_unstable_by(|x, y| y.cmp(x));
        PairSet { pairs }
    }

    /// Validates and canonicalizes raw `(a, b)` tuples.
    pub fn new(raw: &[(u32, u8)]) -> Result<Self> {
        let pairs = raw
            .iter()
            .map(|&(a, b)| IntegerPair::new(a, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(PairSet::from_pairs(pairs))
    }

    /// Like [`PairSet::new`] but accepts signed entries, rejecting negatives.
    pub fn from_signed(raw: &[(i64, i64)]) -> Result<Self> {
        let mut v = Vec::with_capacity(raw.len());
        for &(a, b) in raw {
            let a = u32::try_from(a)
                .map_err(|_| Error::Argument(format!("pair ({a},{b}) has negative or oversized a")))?;
            let b = u8::try_from(b)
                .map_err(|_| Error::Argument(format!("pair ({a},{b}) has b outside 0..=3")))?;
            v.push((a, b));
        }
        PairSet::new(&v)
    }

    pub fn empty() -> Self {
        PairSet::default()
    }

    pub fn pairs(&self) -> &[IntegerPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `sum (a_i + b_i)`.
    pub fn weight(&self) -> u64 {
        self.pairs.iter().map(IntegerPair::weight).sum()
    }

    /// `sum (a_i + 1)`.
    pub fn contact_sum(&self) -> u64 {
        self.pairs.iter().map(IntegerPair::contact).sum()
    }

    /// Distinct pairs with multiplicities.
    pub fn multiplicities(&self) -> BTreeMap<IntegerPair, usize> {
        let mut m = BTreeMap::new();
        for p in &self.pairs {
            *m.entry(*p).or_insert(0) += 1;
        }
        m
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("pair sets always serialize")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::parse("pairset", e.to_string()))
    }
}

impl fmt::Display for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for PairSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<[u32; 2]> = self.pairs.iter().map(|p| [p.a, p.b as u32]).collect();
        raw.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PairSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<[i64; 2]> = Vec::deserialize(deserializer)?;
        let tuples: Vec<(i64, i64)> = raw.into_iter().map(|[a, b]| (a, b)).collect();
        PairSet::from_signed(&tuples).map_err(serde::de::Error::custom)
    }
}

/// Genus and degree. The degree is positive.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct GdKey {
    pub g: u32,
    pub d: u32,
}

impl GdKey {
    pub fn new(g: u32, d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Argument("degree must be positive".into()));
        }
        Ok(GdKey { g, d })
    }

    /// Required total weight `5d + 1 - g` of every element of `S_{g,d}`.
    pub fn weight(&self) -> i64 {
        5 * self.d as i64 + 1 - self.g as i64
    }

    /// Upper bound `5d` on the contact sum of elements of `S'_{g,d}`.
    pub fn contact_bound(&self) -> u64 {
        5 * self.d as u64
    }

    pub fn in_s(&self, set: &PairSet) -> bool {
        !set.is_empty() && set.weight() as i64 == self.weight()
    }

    pub fn in_s_prime(&self, set: &PairSet) -> bool {
        self.in_s(set) && set.contact_sum() <= self.contact_bound()
    }
}

impl fmt::Display for GdKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(g={}, d={})", self.g, self.d)
    }
}

/// Bound on the total weight `5d + 1 - g` accepted by full enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_weight: u32,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits { max_weight: 24 }
    }
}

fn pairs_up_to_weight(w: u64) -> Vec<IntegerPair> {
    let mut v = Vec::new();
    for a in 0..=w as u32 {
        for b in 0..=MAX_HYPERPLANE_POWER {
            if (a, b) != (0, 0) && a as u64 + b as u64 <= w {
                v.push(IntegerPair { a, b });
            }
        }
    }
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

fn enumerate(key: GdKey, limits: EnumerationLimits, contact_bound: Option<u64>) -> Result<Vec<PairSet>> {
    let w = key.weight();
    if w <= 0 {
        return Ok(Vec::new());
    }
    if w > limits.max_weight as i64 {
        return Err(Error::ResourceLimit(format!(
            "enumerating {key} needs weight {w}, above the configured limit {}",
            limits.max_weight
        )));
    }
    let candidates = pairs_up_to_weight(w as u64);
    let mut out = Vec::new();
    let mut current = Vec::new();

    // Pairs are chosen in non-increasing order, so each multiset appears once
    // and already in canonical order.
    fn rec(
        rem: u64,
        start: usize,
        contact: u64,
        bound: Option<u64>,
        cands: &[IntegerPair],
        current: &mut Vec<IntegerPair>,
        out: &mut Vec<PairSet>,
    ) {
        if rem == 0 {
            out.push(PairSet { pairs: current.clone() });
            return;
        }
        for (i, p) in cands.iter().enumerate().skip(start) {
            if p.weight() > rem {
                continue;
            }
            let c = contact + p.contact();
            if bound.is_some_and(|b| c > b) {
                continue;
            }
            current.push(*p);
            rec(rem - p.weight(), i, c, bound, cands, current, out);
            current.pop();
        }
    }

    rec(w as u64, 0, 0, contact_bound, &candidates, &mut current, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// All of `S_{g,d}`: nonempty multisets of legal pairs with weight `5d+1-g`.
pub fn enumerate_s(key: GdKey, limits: EnumerationLimits) -> Result<Vec<PairSet>> {
    enumerate(key, limits, None)
}

/// `S'_{g,d}`: the elements of `S_{g,d}` with contact sum at most `5d`.
pub fn enumerate_s_prime(key: GdKey, limits: EnumerationLimits) -> Result<Vec<PairSet>> {
    enumerate(key, limits, Some(key.contact_bound()))
}

/// Size of the permutation symmetry group: product of multiplicity factorials.
pub fn aut_order(set: &PairSet) -> BigInt {
    set.multiplicities()
        .values()
        .fold(BigInt::one(), |acc, &m| acc * factorial(m))
}

/// Whether `S_{g,d}` has an element outside `S'_{g,d}`.
///
/// The largest contact sum in `S_{g,d}` is `2(5d+1-g)`, reached by taking
/// every pair equal to `(1,0)`, so the question reduces to
/// `2(5d+1-g) >= 5d+1`, i.e. `5d >= 2g - 1`.
pub fn has_outside_element(key: GdKey) -> bool {
    let w = key.weight();
    w >= 1 && 2 * w > key.contact_bound() as i64
}

/// Cohomology label of a weighted-partition part.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ClassLabel {
    /// `H^m`, `0 <= m <= 3`.
    H(u8),
    Id,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightedPartition {
    /// `(contact order, label)` parts, excluding the `(1, Id)` copies.
    pub parts: Vec<(u64, ClassLabel)>,
    /// Number of `(1, Id)` parts.
    pub id_count: u64,
}

impl WeightedPartition {
    pub fn total_contact(&self) -> u64 {
        self.parts.iter().map(|p| p.0).sum::<u64>() + self.id_count
    }
}

/// Rewrites `rho` as the weighted partition `{(a_i+1, H^{b_i})} + (1,Id)^k`
/// of total contact `5d`.
pub fn rho_to_eta(rho: &PairSet, key: GdKey) -> Result<WeightedPartition> {
    let cs = rho.contact_sum();
    if cs > key.contact_bound() {
        return Err(Error::Precondition(format!(
            "{rho} has contact sum {cs} > 5d = {}",
            key.contact_bound()
        )));
    }
    Ok(WeightedPartition {
        parts: rho
            .pairs()
            .iter()
            .map(|p| (p.contact(), ClassLabel::H(p.b)))
            .collect(),
        id_count: key.contact_bound() - cs,
    })
}

/// `C_eta = prod(contact orders) * |Aut(eta)|`.
pub fn c_eta(eta: &WeightedPartition) -> Rational {
    let mut mult: BTreeMap<(u64, ClassLabel), usize> = BTreeMap::new();
    for p in &eta.parts {
        *mult.entry(*p).or_insert(0) += 1;
    }
    if eta.id_count > 0 {
        *mult.entry((1, ClassLabel::Id)).or_insert(0) += eta.id_count as usize;
    }
    let aut = mult.values().fold(BigInt::one(), |acc, &m| acc * factorial(m));
    let prod = eta
        .parts
        .iter()
        .fold(BigInt::one(), |acc, p| acc * BigInt::from(p.0));
    Rational::from(prod * aut)
}

/// Every multiset reachable from `zeta` by merging blocks of a set partition
/// of its pairs into single pairs `(r, n)` of the same total weight, keeping
/// `n` at least the block's hyperplane total.
///
/// These are the only `rho` for which the disconnected fiber pairing
/// `F(rho | zeta)` can be nonzero, and the relation is transitive.
pub fn coarsenings(zeta: &PairSet) -> Vec<PairSet> {
    let items = zeta.pairs();
    let q = items.len();
    let mut seen: HashSet<PairSet> = HashSet::new();
    if q == 0 {
        return Vec::new();
    }
    let mut labels = vec![0usize; q];

    fn merge_choices(blocks: &[(u64, u64)], idx: usize, cur: &mut Vec<IntegerPair>, seen: &mut HashSet<PairSet>) {
        if idx == blocks.len() {
            seen.insert(PairSet::from_pairs(cur.clone()));
            return;
        }
        let (w, hsum) = blocks[idx];
        for n in hsum..=(MAX_HYPERPLANE_POWER as u64).min(w) {
            let r = w - n;
            if r == 0 && n == 0 {
                continue;
            }
            cur.push(IntegerPair { a: r as u32, b: n as u8 });
            merge_choices(blocks, idx + 1, cur, seen);
            cur.pop();
        }
    }

    // Restricted growth strings enumerate set partitions once each; only
    // the sorted (weight, H-total) summary of the blocks matters after that.
    fn rec(
        i: usize,
        nblocks: usize,
        labels: &mut Vec<usize>,
        items: &[IntegerPair],
        summaries: &mut HashSet<Vec<(u64, u64)>>,
    ) {
        if i == items.len() {
            let mut blocks = vec![(0u64, 0u64); nblocks];
            for (p, &l) in items.iter().zip(labels.iter()) {
                blocks[l].0 += p.weight();
                blocks[l].1 += p.b as u64;
            }
            blocks.sort_unstable();
            summaries.insert(blocks);
            return;
        }
        for l in 0..=nblocks {
            labels[i] = l;
            rec(i + 1, nblocks.max(l + 1), labels, items, summaries);
        }
    }

    let mut summaries = HashSet::new();
    rec(0, 0, &mut labels, items, &mut summaries);
    for blocks in &summaries {
        merge_choices(blocks, 0, &mut Vec::new(), &mut seen);
    }
    let mut out: Vec<PairSet> = seen.into_iter().collect();
    out.sort_unstable();
    out
}
