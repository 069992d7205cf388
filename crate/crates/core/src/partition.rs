//! Partitions, strict partitions and the (skew) diagrams built from them.
//!
//! Coordinates are 1-based `(row, column)` pairs. Row `i` of the shifted diagram of a
//! strict partition occupies columns `i ..= λ_i + i - 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts descending and drops zeros. Negative entries are rejected.
    pub fn new(parts: &[i64]) -> Result<Self> {
        if let Some(&bad) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::NonPositivePart(bad));
        }
        Ok(Self::from_usizes(parts.iter().map(|&p| p as usize).collect()))
    }

    pub fn from_usizes(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `(1, 1, ..., 1)` with `k` ones.
    pub fn ones(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`-th part, 1-based, with zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `self ⊆ other`: every part of `self` is at most the matching part of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.is_contained_in(self)
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_usizes(parts)
    }

    /// Dominance order restricted to equal weights; `None` when incomparable.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        let (mut a, mut b) = (0usize, 0usize);
        let mut ord = Ordering::Equal;
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            match (ord, a.cmp(&b)) {
                (_, Ordering::Equal) => {}
                (Ordering::Equal, o) => ord = o,
                (o1, o2) if o1 != o2 => return None,
                _ => {}
            }
        }
        Some(ord)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidArgument(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&parts)
    }
}

/// A partition with pairwise distinct parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: &[i64]) -> Result<Self> {
        Self::try_from(Partition::new(parts)?)
    }

    pub fn empty() -> Self {
        StrictPartition(Partition::empty())
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_partition(self) -> Partition {
        self.0
    }

    /// Strict partitions obtained by removing one box: each part is lowered by one,
    /// keeping only strict results (a part equal to one disappears).
    pub fn covers_below(&self) -> Vec<StrictPartition> {
        let parts = self.parts();
        let mut out = Vec::new();
        for i in 0..parts.len() {
            let lowered = parts[i] - 1;
            let next = parts.get(i + 1).copied().unwrap_or(0);
            if lowered > next || lowered == 0 {
                let mut v = parts.to_vec();
                v[i] = lowered;
                out.push(StrictPartition(Partition::from_usizes(v)));
            }
        }
        out
    }

    /// Strict partitions obtained by adding one box.
    pub fn covers_above(&self) -> Vec<StrictPartition> {
        let parts = self.parts();
        let mut out = Vec::new();
        for i in 0..parts.len() {
            if i == 0 || parts[i] + 1 < parts[i - 1] {
                let mut v = parts.to_vec();
                v[i] += 1;
                out.push(StrictPartition(Partition { parts: v }));
            }
        }
        if parts.last().map_or(true, |&p| p > 1) {
            let mut v = parts.to_vec();
            v.push(1);
            out.push(StrictPartition(Partition { parts: v }));
        }
        out
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::NotStrict { which: "input" })
        }
    }
}

impl Deref for StrictPartition {
    type Target = Partition;

    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::try_from(s.parse::<Partition>()?)
    }
}

/// Normalizes an integer sequence into a partition, optionally requiring strictness.
pub fn make_partition(parts: &[i64], strict_required: bool) -> Result<Partition> {
    let p = Partition::new(parts)?;
    if strict_required && !p.is_strict() {
        return Err(Error::NotStrict { which: "input" });
    }
    Ok(p)
}

/// Cells `(row, column)` of `D'_λ \ D'_μ`, sorted row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftedSkewShape {
    outer: StrictPartition,
    inner: StrictPartition,
    cells: Vec<(usize, usize)>,
}

impl ShiftedSkewShape {
    pub fn new(outer: &StrictPartition, inner: &StrictPartition) -> Result<Self> {
        if !inner.is_contained_in(outer) {
            return Err(Error::NotContained);
        }
        let mut cells = Vec::with_capacity(outer.weight() - inner.weight());
        for i in 1..=outer.len() {
            for j in inner.part(i) + i..=outer.part(i) + i - 1 {
                cells.push((i, j));
            }
        }
        Ok(ShiftedSkewShape { outer: outer.clone(), inner: inner.clone(), cells })
    }

    pub fn outer(&self) -> &StrictPartition {
        &self.outer
    }

    pub fn inner(&self) -> &StrictPartition {
        &self.inner
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Cells of `D_η \ D_ν` for ordinary partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinarySkewShape {
    outer: Partition,
    inner: Partition,
    cells: Vec<(usize, usize)>,
}

impl OrdinarySkewShape {
    pub fn new(outer: &Partition, inner: &Partition) -> Result<Self> {
        if !inner.is_contained_in(outer) {
            return Err(Error::NotContained);
        }
        let mut cells = Vec::with_capacity(outer.weight() - inner.weight());
        for i in 1..=outer.len() {
            for j in inner.part(i) + 1..=outer.part(i) {
                cells.push((i, j));
            }
        }
        Ok(OrdinarySkewShape { outer: outer.clone(), inner: inner.clone(), cells })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// The ordinary pair `(η, ν)` whose skew diagram equals `D'_{λ/μ}`, defined when
/// `l(λ) - l(μ) ∈ {0, 1}`: `η_i = λ_i + i - 1`, `ν_i = μ_i + i - 1` for `i ≤ l(λ)`.
pub fn shifted_to_ordinary(
    outer: &StrictPartition,
    inner: &StrictPartition,
) -> Result<(Partition, Partition)> {
    if !inner.is_contained_in(outer) {
        return Err(Error::NotContained);
    }
    let (lo, li) = (outer.len(), inner.len());
    if lo != li && lo != li + 1 {
        return Err(Error::LengthCondition { outer: lo, inner: li });
    }
    let eta = (1..=lo).map(|i| outer.part(i) + i - 1).collect();
    let nu = (1..=lo).map(|i| inner.part(i) + i - 1).collect();
    Ok((Partition::from_usizes(eta), Partition::from_usizes(nu)))
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` with at most `max_len` parts, reverse lexicographic order.
pub fn partitions_with_max_len(n: usize, max_len: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| p.len() <= max_len).collect()
}

/// All strict partitions of `n`, reverse lexicographic order.
pub fn strict_partitions_of(n: usize) -> Vec<StrictPartition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
        if rem == 0 {
            out.push(StrictPartition(Partition { parts: cur.clone() }));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into odd parts, reverse lexicographic order.
pub fn odd_partitions_of(n: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(Partition::is_odd).collect()
}

/// Every partition contained in `outer` (including `∅` and `outer` itself).
pub fn partitions_below(outer: &Partition) -> Vec<Partition> {
    fn rec(outer: &[usize], i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == outer.len() {
            out.push(Partition::from_usizes(cur.clone()));
            return;
        }
        for p in 0..=outer[i].min(cap) {
            cur.push(p);
            rec(outer, i + 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(outer.parts(), 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

/// Every strict partition contained in `outer`.
pub fn strict_partitions_below(outer: &StrictPartition) -> Vec<StrictPartition> {
    partitions_below(outer)
        .into_iter()
        .filter_map(|p| StrictPartition::try_from(p).ok())
        .collect()
}
