//! Index combinatorics for Schubert classes on `Gr(r, n)`.
//!
//! A class σ(I) is indexed by an `r`-element subset `I = {i_1 < … < i_r}` of
//! `{1, …, n}`. The fundamental class is `{n-r+1, …, n}` and the point class is
//! `{1, …, r}`. The equivalent partition has parts `a_k = n - r + k - i_k`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest ambient dimension representable by the bitmask encoding.
pub const MAX_N: u32 = 63;

/// The Grassmannian `Gr(r, n)` of `r`-planes in `n`-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrContext {
    n: u32,
    r: u32,
}

impl GrContext {
    pub fn new(n: u32, r: u32) -> Result<Self> {
        if r == 0 || r >= n || n > MAX_N {
            return Err(Error::InvalidContext { n, r });
        }
        Ok(GrContext { n, r })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Complex dimension `r(n-r)`.
    pub fn dim(&self) -> u32 {
        self.r * (self.n - self.r)
    }

    /// All Schubert indices, in lexicographic order of their element lists.
    pub fn basis(&self) -> Vec<SchubertIndex> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.r as usize);
        self.collect_subsets(1, &mut current, &mut out);
        out
    }

    fn collect_subsets(&self, start: u32, current: &mut Vec<u32>, out: &mut Vec<SchubertIndex>) {
        if current.len() == self.r as usize {
            let mask = current.iter().fold(0u64, |m, &i| m | bit(i));
            out.push(SchubertIndex { ctx: *self, mask });
            return;
        }
        let remaining = self.r - current.len() as u32;
        for i in start..=(self.n + 1 - remaining) {
            current.push(i);
            self.collect_subsets(i + 1, current, out);
            current.pop();
        }
    }

    /// The fundamental class `{n-r+1, …, n}` (codimension 0).
    pub fn fundamental(&self) -> SchubertIndex {
        let mask = (self.n - self.r + 1..=self.n).fold(0, |m, i| m | bit(i));
        SchubertIndex { ctx: *self, mask }
    }

    /// The point class `{1, …, r}` (codimension `r(n-r)`).
    pub fn point(&self) -> SchubertIndex {
        let mask = (1..=self.r).fold(0, |m, i| m | bit(i));
        SchubertIndex { ctx: *self, mask }
    }

    pub(crate) fn ensure_same(&self, other: &GrContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for GrContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gr({},{})", self.r, self.n)
    }
}

#[inline]
fn bit(i: u32) -> u64 {
    1u64 << (i - 1)
}

/// An `r`-subset of `{1, …, n}` indexing the Schubert class σ(I).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchubertIndex {
    ctx: GrContext,
    mask: u64,
}

/// Result of a cyclic shift `I - k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ShiftResult {
    pub index: SchubertIndex,
    /// Number of elements of the original index that are `<= k`.
    pub count: u32,
}

impl SchubertIndex {
    pub fn new(ctx: GrContext, elements: &[u32]) -> Result<Self> {
        if elements.len() != ctx.r as usize {
            return Err(Error::InvalidIndex(format!(
                "expected {} elements for {ctx}, got {}",
                ctx.r,
                elements.len()
            )));
        }
        if !elements.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidIndex(format!("{elements:?} is not strictly increasing")));
        }
        if elements.iter().any(|&i| i < 1 || i > ctx.n) {
            return Err(Error::InvalidIndex(format!("{elements:?} leaves 1..={}", ctx.n)));
        }
        let mask = elements.iter().fold(0, |m, &i| m | bit(i));
        Ok(SchubertIndex { ctx, mask })
    }

    pub fn ctx(&self) -> GrContext {
        self.ctx
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = u32> + '_ {
        let mask = self.mask;
        (1..=self.ctx.n).filter(move |&i| mask & bit(i) != 0)
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.elements().collect()
    }

    pub fn contains(&self, i: u32) -> bool {
        (1..=self.ctx.n).contains(&i) && self.mask & bit(i) != 0
    }

    /// Number of pairs `(j, i)` with `j ∉ I`, `i ∈ I` and `j > i`.
    pub fn codim(&self) -> u32 {
        let mut total = 0;
        let mut outside_above = 0;
        for j in (1..=self.ctx.n).rev() {
            if self.contains(j) {
                total += outside_above;
            } else {
                outside_above += 1;
            }
        }
        total
    }

    pub fn to_partition(&self) -> Partition {
        let (n, r) = (self.ctx.n, self.ctx.r);
        let parts = self
            .elements()
            .enumerate()
            .map(|(k, i)| n - r + (k as u32 + 1) - i)
            .collect();
        Partition::from_parts_unchecked(parts)
    }

    /// Inverse of [`to_partition`](Self::to_partition). A partition that does
    /// not fit the `r × (n-r)` box indexes the zero class and yields `None`.
    pub fn from_partition(ctx: GrContext, partition: &Partition) -> Option<Self> {
        if partition.len() > ctx.r as usize || partition.first() > ctx.n - ctx.r {
            return None;
        }
        let mask = (1..=ctx.r).fold(0, |m, k| {
            let i = ctx.n - ctx.r + k - partition.part(k as usize - 1);
            m | bit(i)
        });
        Some(SchubertIndex { ctx, mask })
    }

    /// Subtract `k` from every element modulo `n`, writing `0` as `n`.
    pub fn shift(&self, k: u32) -> Result<ShiftResult> {
        let n = self.ctx.n;
        if k > n {
            return Err(Error::ShiftOutOfRange { k, n });
        }
        let mut mask = 0;
        let mut count = 0;
        for i in self.elements() {
            if i <= k {
                count += 1;
            }
            let j = (i + n - k - 1) % n + 1;
            mask |= bit(j);
        }
        Ok(ShiftResult {
            index: SchubertIndex { ctx: self.ctx, mask },
            count,
        })
    }

    /// Number of elements `<= k`.
    pub fn count_le(&self, k: u32) -> u32 {
        self.elements().take_while(|&i| i <= k).count() as u32
    }

    /// The Poincaré dual `{n + 1 - i}`.
    pub fn dual(&self) -> Self {
        let n = self.ctx.n;
        let mask = self.elements().fold(0, |m, i| m | bit(n + 1 - i));
        SchubertIndex { ctx: self.ctx, mask }
    }

    /// Index of the special class σ_a, i.e. the partition `(a, 0, …, 0)`.
    pub fn special(ctx: GrContext, a: i64) -> Result<Self> {
        let max = ctx.n - ctx.r;
        if a < 0 || a > max as i64 {
            return Err(Error::SpecialOutOfRange { a, max });
        }
        let partition = Partition::new(vec![a as u32])?;
        Ok(Self::from_partition(ctx, &partition).expect("special partition fits the box"))
    }

    pub fn is_fundamental(&self) -> bool {
        *self == self.ctx.fundamental()
    }
}

impl PartialOrd for SchubertIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SchubertIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .cmp(&other.ctx)
            .then_with(|| self.elements().cmp(other.elements()))
    }
}

impl fmt::Debug for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={},r={}:{{", self.ctx.n, self.ctx.r)?;
        for (k, i) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for SchubertIndex {
    type Err = Error;

    /// Parses the canonical form `n=4,r=2:{1,3}`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `n=<n>,r=<r>:{{i,…}}`, got `{s}`"));
        let (head, body) = s.trim().split_once(':').ok_or_else(bad)?;
        let (n_part, r_part) = head.split_once(',').ok_or_else(bad)?;
        let n = n_part
            .trim()
            .strip_prefix("n=")
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let r = r_part
            .trim()
            .strip_prefix("r=")
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let body = body
            .trim()
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(bad)?;
        let ctx = GrContext::new(n, r)?;
        let elements = parse_element_list(body)?;
        SchubertIndex::new(ctx, &elements)
    }
}

/// Parses a comma-separated list such as `1,3`. The empty string is the empty list.
pub fn parse_element_list(s: &str) -> Result<Vec<u32>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad element `{t}`")))
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct IndexRepr {
    n: u32,
    r: u32,
    elements: Vec<u32>,
}

impl Serialize for SchubertIndex {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IndexRepr {
            n: self.ctx.n,
            r: self.ctx.r,
            elements: self.to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchubertIndex {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = IndexRepr::deserialize(deserializer)?;
        let ctx = GrContext::new(repr.n, repr.r).map_err(serde::de::Error::custom)?;
        SchubertIndex::new(ctx, &repr.elements).map_err(serde::de::Error::custom)
    }
}

/// A weakly decreasing sequence of nonnegative parts. Trailing zeros are not
/// stored, so `(2,1,0)` and `(2,1)` compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndex(format!(
                "partition {parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `k` (0-based); zero past the end.
    pub fn part(&self, k: usize) -> u32 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Parts padded with zeros to length `r`.
    pub fn padded(&self, r: usize) -> Vec<u32> {
        (0..r.max(self.len())).map(|k| self.part(k)).collect()
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|k| other.part(k) <= self.part(k))
    }
}

impl fmt::Display for Partition {
    /// Renders as `σ[a₁,a₂,…]` with zero parts suppressed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("σ[")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}
