//! Partitions, strict partitions and (shifted) skew diagrams.
//!
//! Rows and columns are 1-based throughout, matching the way tableaux are
//! usually drawn. Cell lists are always row-major.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
        .collect()
}

fn fmt_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates `parts`. Trailing zeros are dropped; a zero followed by a
    /// positive part is rejected like any other increase.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Parts padded with zeros to length `n` (never truncated).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|c| self.0.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition(parts)
    }

    /// Ordinary (unshifted) diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
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
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct StrictPartition(Vec<usize>);

impl StrictPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let p = Partition::new(parts.clone()).map_err(|_| Error::NotStrict(parts.clone()))?;
        if !p.is_strict() {
            return Err(Error::NotStrict(parts));
        }
        Ok(StrictPartition(p.0))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Vec<usize> {
        self.as_partition().padded(n)
    }

    pub fn as_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    /// Shifted diagram containment `D⁺_other ⊆ D⁺_self`; for strict
    /// partitions this is the same as row-wise comparison.
    pub fn contains(&self, other: &StrictPartition) -> bool {
        self.as_partition().contains(&other.as_partition())
    }

    /// All strict partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<StrictPartition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<StrictPartition>) {
            if rem == 0 {
                out.push(StrictPartition(cur.clone()));
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

    /// All strict partitions of size at most `n`, smallest sizes first.
    pub fn all_up_to(n: usize) -> Vec<StrictPartition> {
        (0..=n).flat_map(StrictPartition::all_of_size).collect()
    }
}

/// Largest possible length of a strict partition of `n`.
pub fn max_strict_length(n: usize) -> usize {
    let mut len = 0;
    while (len + 1) * (len + 2) / 2 <= n {
        len += 1;
    }
    len
}

impl TryFrom<Vec<usize>> for StrictPartition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        StrictPartition::new(v)
    }
}

impl From<StrictPartition> for Vec<usize> {
    fn from(p: StrictPartition) -> Self {
        p.0
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;
    fn try_from(p: Partition) -> Result<Self> {
        StrictPartition::new(p.0)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StrictPartition::new(parse_parts(s)?)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.0, f)
    }
}

/// `outer / inner`, shifted or not. Only the cells of the outer diagram not
/// in the inner one are "in" the shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSkewShape", into = "RawSkewShape")]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
    shifted: bool,
}

#[derive(Serialize, Deserialize)]
struct RawSkewShape {
    outer: Vec<usize>,
    #[serde(default)]
    inner: Vec<usize>,
    #[serde(default)]
    shifted: bool,
}

impl TryFrom<RawSkewShape> for SkewShape {
    type Error = Error;
    fn try_from(r: RawSkewShape) -> Result<Self> {
        SkewShape::new(Partition::new(r.outer)?, Partition::new(r.inner)?, r.shifted)
    }
}

impl From<SkewShape> for RawSkewShape {
    fn from(s: SkewShape) -> Self {
        RawSkewShape {
            outer: s.outer.0,
            inner: s.inner.0,
            shifted: s.shifted,
        }
    }
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition, shifted: bool) -> Result<Self> {
        if shifted && (!outer.is_strict() || !inner.is_strict()) {
            let bad = if outer.is_strict() { &inner } else { &outer };
            return Err(Error::NotStrict(bad.0.clone()));
        }
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(SkewShape {
            outer,
            inner,
            shifted,
        })
    }

    pub fn shifted(outer: &StrictPartition, inner: &StrictPartition) -> Result<Self> {
        SkewShape::new(outer.as_partition(), inner.as_partition(), true)
    }

    pub fn shifted_straight(outer: &StrictPartition) -> Self {
        SkewShape {
            outer: outer.as_partition(),
            inner: Partition::empty(),
            shifted: true,
        }
    }

    pub fn unshifted(outer: &Partition, inner: &Partition) -> Result<Self> {
        SkewShape::new(outer.clone(), inner.clone(), false)
    }

    pub fn unshifted_straight(outer: &Partition) -> Self {
        SkewShape {
            outer: outer.clone(),
            inner: Partition::empty(),
            shifted: false,
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_shifted(&self) -> bool {
        self.shifted
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of rows of the outer diagram (some may be empty in the skew shape).
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.outer.part(row) - self.inner.part(row)
    }

    /// First column of row `row` that belongs to the skew shape.
    pub fn row_start(&self, row: usize) -> usize {
        let indent = if self.shifted { row - 1 } else { 0 };
        indent + self.inner.part(row) + 1
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        if row == 0 || row > self.num_rows() {
            return false;
        }
        let start = self.row_start(row);
        col >= start && col < start + self.row_len(row)
    }

    /// All cells, row-major top-to-bottom and left-to-right.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for row in 1..=self.num_rows() {
            let start = self.row_start(row);
            out.extend((start..start + self.row_len(row)).map(|c| (row, c)));
        }
        out
    }
}

/// `δ_r = (r, r−1, …, 1)`; empty for `r = 0`.
pub fn staircase(r: usize) -> StrictPartition {
    StrictPartition((1..=r).rev().collect())
}

/// Complement of `λ` in the `(r+1) × (r+1)` square, read back as a partition.
pub fn complement_in_rectangle(lambda: &Partition, r: usize) -> Result<Partition> {
    let side = r + 1;
    if lambda.part(1) > side || lambda.len() > side {
        return Err(Error::Precondition(format!(
            "{lambda:?} does not fit in the {side}x{side} square"
        )));
    }
    Partition::new((1..=side).map(|i| side - lambda.part(side + 1 - i)).collect())
}

/// Column counts of `D⁺_{δ_{r+1}} ∖ D⁺_λ`, rightmost column first.
pub fn shifted_complement(lambda: &StrictPartition, r: usize) -> Result<StrictPartition> {
    let side = r + 1;
    if !staircase(side).contains(lambda) {
        return Err(Error::NotContained {
            outer: staircase(side).0,
            inner: lambda.0.clone(),
        });
    }
    let shape = SkewShape::shifted_straight(lambda);
    let counts: Vec<usize> = (1..=side)
        .rev()
        .map(|col| (1..=col).filter(|&row| !shape.contains_cell(row, col)).count())
        .collect();
    StrictPartition::new(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn staircase_values() {
        assert_eq!(staircase(0), StrictPartition::empty());
        assert_eq!(staircase(1), sp(&[1]));
        assert_eq!(staircase(4), sp(&[4, 3, 2, 1]));
    }

    #[test]
    fn rectangle_complement() {
        let c = complement_in_rectangle(&p(&[5, 4, 4, 4, 2]), 4).unwrap();
        assert_eq!(c, p(&[3, 1, 1, 1]));
        assert_eq!(c.size() + 19, 25);
        assert!(complement_in_rectangle(&p(&[3, 3, 3]), 2).unwrap().is_empty());
        assert_eq!(complement_in_rectangle(&p(&[]), 2).unwrap(), p(&[3, 3, 3]));
        assert!(complement_in_rectangle(&p(&[4]), 2).is_err());
    }

    #[test]
    fn shifted_complement_values() {
        assert_eq!(shifted_complement(&sp(&[]), 0).unwrap(), sp(&[1]));
        assert_eq!(shifted_complement(&sp(&[3, 2, 1]), 2).unwrap(), sp(&[]));
        assert_eq!(shifted_complement(&sp(&[2]), 1).unwrap(), sp(&[1]));
        assert!(shifted_complement(&sp(&[3]), 1).is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[4, 4, 2]).conjugate(), p(&[3, 3, 2, 2]));
    }

    #[test]
    fn cell_lists() {
        let s = SkewShape::shifted_straight(&sp(&[3, 1]));
        assert_eq!(s.cells(), vec![(1, 1), (1, 2), (1, 3), (2, 2)]);
        let s = SkewShape::unshifted(&p(&[2]), &p(&[1])).unwrap();
        assert_eq!(s.cells(), vec![(1, 2)]);
        let s = SkewShape::shifted(&sp(&[4, 3, 1]), &sp(&[3, 1])).unwrap();
        assert_eq!(s.cells(), vec![(1, 4), (2, 3), (2, 4), (3, 3)]);
    }

    #[test]
    fn validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(StrictPartition::new(vec![2, 2]).is_err());
        assert!("3,1".parse::<StrictPartition>().is_ok());
        assert!("1,3".parse::<Partition>().is_err());
        assert!(SkewShape::shifted(&sp(&[2]), &sp(&[3])).is_err());
    }

    #[test]
    fn counts_of_partitions() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        let strict: Vec<usize> = (0..=8).map(|n| StrictPartition::all_of_size(n).len()).collect();
        assert_eq!(strict, vec![1, 1, 1, 2, 2, 3, 4, 5, 6]);
        assert_eq!(max_strict_length(8), 3);
        assert_eq!(max_strict_length(10), 4);
    }

    #[test]
    fn json_forms() {
        let s = SkewShape::shifted(&sp(&[4, 3, 1]), &sp(&[3, 1])).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"outer":[4,3,1],"inner":[3,1],"shifted":true}"#);
        let back: SkewShape = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&p(&[4, 3, 1])).unwrap(), "[4,3,1]");
        assert!(serde_json::from_str::<StrictPartition>("[2,2]").is_err());
    }
}
