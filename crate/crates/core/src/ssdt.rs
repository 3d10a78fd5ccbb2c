//! Semistandard decomposition tableaux: shifted fillings whose rows are
//! hook words, subject to pairwise conditions on adjacent rows.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{SkewShape, StrictPartition};
use crate::tableaux::check_row_lengths;

/// A filling of a shifted (skew) shape by positive integers. Row `i` holds
/// `T_{i,1} … T_{i,len}` left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecompTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct RawDecomp {
    shape: SkewShape,
    rows: Vec<Vec<String>>,
}

impl Serialize for DecompTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawDecomp {
            shape: self.shape.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(u32::to_string).collect()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecompTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDecomp::deserialize(d)?;
        let rows = raw
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| match x.trim().parse::<u32>() {
                        Ok(v) if v >= 1 => Ok(v),
                        _ => Err(Error::Parse(x.clone())),
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        DecompTableau::new(raw.shape, rows).map_err(serde::de::Error::custom)
    }
}

impl DecompTableau {
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<u32>>) -> Result<Self> {
        if !shape.is_shifted() {
            return Err(Error::Precondition("decomposition tableaux live on shifted shapes".into()));
        }
        check_row_lengths(&shape, &mut rows)?;
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::Parse("0".into()));
        }
        Ok(DecompTableau { shape, rows })
    }

    /// Straight shifted shape read off the row lengths.
    pub fn straight(rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = StrictPartition::new(rows.iter().map(Vec::len).collect())?;
        DecompTableau::new(SkewShape::shifted_straight(&outer), rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `T_{i,j}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        self.rows.get(i.checked_sub(1)?)?.get(j.checked_sub(1)?).copied()
    }

    /// `T(p, q)`: row `p`, `q`-th diagonal, i.e. absolute column `p+q−1`.
    pub fn diag(&self, p: usize, q: usize) -> Option<u32> {
        let offset = self.shape.inner().part(p);
        if q <= offset {
            return None;
        }
        self.entry(p, q - offset)
    }

    /// Rows top to bottom, each right to left.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// `T^{(ℓ)} ⋯ T^{(1)}`, each row left to right.
    pub fn reverse_reading_word(&self) -> Vec<u32> {
        let mut w = self.reading_word();
        w.reverse();
        w
    }

    /// `(c_1, …, c_n)`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &x in self.rows.iter().flatten() {
            let x = x as usize;
            if x > c.len() {
                c.resize(x, 0);
            }
            c[x - 1] += 1;
        }
        c
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rebuild from a reverse reading word, splitting by the row lengths.
    pub fn from_reverse_reading_word(shape: &SkewShape, word: &[u32]) -> Result<Self> {
        let mut rows = vec![Vec::new(); shape.num_rows()];
        let mut pos = 0;
        for row in (1..=shape.num_rows()).rev() {
            let len = shape.row_len(row);
            let Some(chunk) = word.get(pos..pos + len) else {
                return Err(Error::Precondition("word shorter than the shape".into()));
            };
            rows[row - 1] = chunk.to_vec();
            pos += len;
        }
        if pos != word.len() {
            return Err(Error::Precondition("word longer than the shape".into()));
        }
        DecompTableau::new(shape.clone(), rows)
    }
}

/// Length of the maximal weakly decreasing prefix, or `None` if the rest is
/// not strictly increasing. The empty word gives `Some(0)`.
pub fn hook_down_len(u: &[u32]) -> Option<usize> {
    let mut k = 1.min(u.len());
    while k < u.len() && u[k] <= u[k - 1] {
        k += 1;
    }
    if u[k.min(u.len())..].windows(2).all(|w| w[0] < w[1]) {
        Some(k)
    } else {
        None
    }
}

/// `(u↓, u↑)`, or `None` for a word that is not a hook word.
pub fn hook_split(u: &[u32]) -> Result<Option<(Vec<u32>, Vec<u32>)>> {
    if u.is_empty() {
        return Err(Error::Precondition("hook_split needs a nonempty word".into()));
    }
    Ok(hook_down_len(u).map(|k| (u[..k].to_vec(), u[k..].to_vec())))
}

pub fn is_hook_word(u: &[u32]) -> bool {
    hook_down_len(u).is_some()
}

/// Does an adjacent pair of rows (`upper` above `lower`) exhibit one of the
/// three forbidden patterns?
pub fn has_forbidden_pattern(upper: &[u32], lower: &[u32]) -> bool {
    let t = |j: usize| upper[j - 1];
    let b = |j: usize| lower[j - 1];
    let len = lower.len();
    if (1..=len).any(|i| t(1) <= b(i)) {
        return true;
    }
    for i in 1..=len {
        for j in i..=len {
            if j > i && b(i) >= b(j) && b(j) >= t(i + 1) {
                return true;
            }
            if b(j) < t(i) && t(i) < t(j + 1) {
                return true;
            }
        }
    }
    false
}

/// The implication form of the pair condition. The first implication uses a
/// strict inequality; see [`has_forbidden_pattern`] for the equivalent
/// negative form.
pub fn satisfies_pair_implications(upper: &[u32], lower: &[u32]) -> bool {
    let t = |j: usize| upper[j - 1];
    let b = |j: usize| lower[j - 1];
    let len = lower.len();
    for i in 1..=len {
        for j in i..=len {
            if t(i) <= b(j) && (i == 1 || b(i - 1) >= b(j)) {
                return false;
            }
            if t(i) > b(j) && t(i) < t(j + 1) {
                return false;
            }
        }
    }
    true
}

fn check_straight(shape: &SkewShape) -> Result<()> {
    if !shape.is_shifted() || !shape.is_straight() {
        return Err(Error::Precondition("expected a straight shifted shape".into()));
    }
    Ok(())
}

/// Membership in `SSDT(λ)` for a straight shape. Both formulations of the
/// pair condition are evaluated; they must agree.
pub fn is_ssdt(t: &DecompTableau) -> Result<bool> {
    check_straight(&t.shape)?;
    if !t.rows.iter().all(|r| is_hook_word(r)) {
        return Ok(false);
    }
    let mut ok = true;
    for k in 1..t.rows.len() {
        let (up, low) = (&t.rows[k - 1], &t.rows[k]);
        let negative = !has_forbidden_pattern(up, low);
        debug_assert_eq!(negative, satisfies_pair_implications(up, low));
        ok &= negative;
    }
    Ok(ok)
}

/// The skew shape must have a strictly longer first row and strictly more
/// rows than the inner shape (or an empty inner shape).
pub fn check_skew_assumption(shape: &SkewShape) -> Result<()> {
    if !shape.is_shifted() {
        return Err(Error::Precondition("expected a shifted shape".into()));
    }
    let (outer, inner) = (shape.outer(), shape.inner());
    if inner.is_empty() || (outer.part(1) > inner.part(1) && outer.len() > inner.len()) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "skew shape {outer}/{inner} needs a longer first row and more rows than the inner shape"
        )))
    }
}

/// Pair condition between rows `k` and `k+1` of a skew shape, written on
/// diagonals. `upper`/`lower` start on diagonals `a+1` and `b+1`.
fn skew_pair_ok(upper: &[u32], a: usize, lower: &[u32], b: usize, lower_outer: usize) -> bool {
    let tu = |q: usize| (q > a && q <= a + upper.len()).then(|| upper[q - a - 1]);
    let tl = |q: usize| (q > b && q <= b + lower.len()).then(|| lower[q - b - 1]);
    for i in 1..=lower_outer {
        let Some(x) = tu(i) else { continue };
        for j in i..=lower_outer {
            let Some(y) = tl(j) else { continue };
            if x <= y {
                match tl(i.wrapping_sub(1)) {
                    Some(z) if i != 1 && z < y => {}
                    _ => return false,
                }
            } else if let Some(z) = tu(j + 1) {
                if x < z {
                    return false;
                }
            }
        }
    }
    true
}

/// Membership in `SSDT(λ/μ)`. Empty rows count as (vacuous) hook words.
pub fn is_skew_ssdt(t: &DecompTableau) -> Result<bool> {
    check_skew_assumption(&t.shape)?;
    if !t.rows.iter().all(|r| is_hook_word(r)) {
        return Ok(false);
    }
    let inner = t.shape.inner();
    let outer = t.shape.outer();
    Ok((1..t.rows.len()).all(|k| {
        skew_pair_ok(&t.rows[k - 1], inner.part(k), &t.rows[k], inner.part(k + 1), outer.part(k + 1))
    }))
}

/// `L^μ_M ∗ T`: the inner cells filled with the lowest tableau of rank `m`.
pub fn join_lowest(t: &DecompTableau, m: u32) -> Result<DecompTableau> {
    let inner = t.shape.inner();
    let outer = StrictPartition::try_from(t.shape.outer().clone())?;
    if inner.len() as u32 > m {
        return Err(Error::Precondition("rank too small for the inner shape".into()));
    }
    let rows = (1..=outer.len())
        .map(|i| {
            let mut r = vec![m + 1 - i as u32; inner.part(i)];
            r.extend_from_slice(&t.rows[i - 1]);
            r
        })
        .collect();
    DecompTableau::new(SkewShape::shifted_straight(&outer), rows)
}

fn check_rank(lambda: &StrictPartition, n: usize) -> Result<()> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("length of {lambda} exceeds n = {n}")));
    }
    Ok(())
}

/// The tableau whose entry `ℓ−i+1` fills a border strip of size `λ_{ℓ−i+1}`
/// grown from the diagonal cell `(i, i)`; its content is `λ`.
pub fn highest_tableau(lambda: &StrictPartition, n: usize) -> Result<DecompTableau> {
    check_rank(lambda, n)?;
    let l = lambda.len();
    let mut grid: Vec<Vec<u32>> = (1..=l).map(|i| vec![0; lambda.part(i)]).collect();
    let inside = |r: usize, c: usize| r >= 1 && r <= l && c >= r && c < r + lambda.part(r);
    for i in 1..=l {
        let entry = (l - i + 1) as u32;
        let (mut r, mut c) = (i, i);
        for step in 0..lambda.part(l - i + 1) {
            if step > 0 {
                if r > 1 && inside(r - 1, c) && grid[r - 2][c - r + 1] == 0 {
                    r -= 1;
                } else {
                    c += 1;
                }
            }
            if !inside(r, c) || grid[r - 1][c - r] != 0 {
                return Err(Error::Precondition(format!("border strip for {lambda} left the diagram")));
            }
            grid[r - 1][c - r] = entry;
        }
    }
    DecompTableau::straight(grid)
}

/// Row `i` constant equal to `n−i+1`; content `w₀λ`.
pub fn lowest_tableau(lambda: &StrictPartition, n: usize) -> Result<DecompTableau> {
    check_rank(lambda, n)?;
    DecompTableau::straight((1..=lambda.len()).map(|i| vec![(n + 1 - i) as u32; lambda.part(i)]).collect())
}

/// All hook words of length `len` over `1..=n`, lexicographically.
pub fn hook_words(len: usize, n: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, n: u32, rising: bool, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let last = cur.last().copied();
        for x in 1..=n {
            let next_rising = match last {
                None => false,
                Some(p) if rising => {
                    if x <= p {
                        continue;
                    }
                    true
                }
                Some(p) => x > p,
            };
            cur.push(x);
            rec(len, n, next_rising, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, n, false, &mut Vec::new(), &mut out);
    out
}

/// Visits every (skew) decomposition tableau of `shape` with entries in
/// `1..=n`, passing its rows top to bottom. Rows are chosen bottom-up and
/// each new row is checked against the one below it.
pub fn for_each_ssdt(shape: &SkewShape, n: u32, mut visit: impl FnMut(&[&[u32]])) -> Result<()> {
    check_skew_assumption(shape)?;
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let rows = shape.num_rows();
    if shape.is_straight() && rows > n as usize {
        return Ok(());
    }
    let mut cache: HashMap<usize, Vec<Vec<u32>>> = HashMap::new();
    for r in 1..=rows {
        cache.entry(shape.row_len(r)).or_insert_with(|| hook_words(shape.row_len(r), n));
    }
    let straight = shape.is_straight();
    let inner = shape.inner().clone();
    let outer = shape.outer().clone();
    let pair_ok = |k: usize, up: &[u32], low: &[u32]| {
        if straight {
            satisfies_pair_implications(up, low)
        } else {
            skew_pair_ok(up, inner.part(k), low, inner.part(k + 1), outer.part(k + 1))
        }
    };
    let mut chosen: Vec<&[u32]> = vec![&[]; rows];
    #[allow(clippy::type_complexity)]
    fn rec<'a>(
        row: usize,
        shape: &SkewShape,
        cache: &'a HashMap<usize, Vec<Vec<u32>>>,
        chosen: &mut Vec<&'a [u32]>,
        pair_ok: &dyn Fn(usize, &[u32], &[u32]) -> bool,
        visit: &mut dyn FnMut(&[&[u32]]),
    ) {
        if row == 0 {
            visit(chosen);
            return;
        }
        for cand in &cache[&shape.row_len(row)] {
            if row < chosen.len() && !pair_ok(row, cand, chosen[row]) {
                continue;
            }
            chosen[row - 1] = cand;
            rec(row - 1, shape, cache, chosen, pair_ok, visit);
        }
    }
    rec(rows, shape, &cache, &mut chosen, &pair_ok, &mut visit);
    Ok(())
}

/// All (skew) decomposition tableaux of `shape` with entries in `1..=n`,
/// sorted by rows top to bottom.
pub fn enumerate_ssdt(shape: &SkewShape, n: u32) -> Result<Vec<DecompTableau>> {
    let mut out = Vec::new();
    for_each_ssdt(shape, n, |rows| {
        out.push(DecompTableau {
            shape: shape.clone(),
            rows: rows.iter().map(|r| r.to_vec()).collect(),
        })
    })?;
    out.sort();
    Ok(out)
}

/// Straight-shape convenience wrapper.
pub fn enumerate_straight(lambda: &StrictPartition, n: u32) -> Vec<DecompTableau> {
    enumerate_ssdt(&SkewShape::shifted_straight(lambda), n).expect("straight shapes are always admissible")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    fn dt(rows: &[&[u32]]) -> DecompTableau {
        DecompTableau::straight(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn hook_splits() {
        assert_eq!(hook_split(&[3, 2, 2, 1]).unwrap(), Some((vec![3, 2, 2, 1], vec![])));
        assert_eq!(hook_split(&[4, 2, 3]).unwrap(), Some((vec![4, 2], vec![3])));
        assert_eq!(hook_split(&[1, 2, 1]).unwrap(), None);
        assert!(hook_split(&[]).is_err());
    }

    #[test]
    fn membership_examples() {
        assert!(is_ssdt(&dt(&[&[3, 2, 2, 1], &[2, 1, 1], &[1]])).unwrap());
        assert!(is_ssdt(&dt(&[&[2, 3]])).unwrap());
        assert!(!is_ssdt(&dt(&[&[2, 2, 3], &[2]])).unwrap());
        let skew = SkewShape::shifted(&sp("3"), &sp("")).unwrap();
        let t = DecompTableau::new(skew, vec![vec![1, 3, 2]]).unwrap();
        assert!(!is_skew_ssdt(&t).unwrap());
    }

    #[test]
    fn printed_weak_inequality_would_accept_a_forbidden_pair() {
        // With `≤` in the first implication this pair would pass, although it
        // contains the second forbidden pattern.
        let (up, low) = ([3, 1, 2], [2, 2]);
        assert!(has_forbidden_pattern(&up, &low));
        assert!(!satisfies_pair_implications(&up, &low));
    }

    #[test]
    fn distinguished_tableaux() {
        assert_eq!(highest_tableau(&sp("4,3,1"), 4).unwrap(), dt(&[&[3, 2, 2, 1], &[2, 1, 1], &[1]]));
        assert_eq!(highest_tableau(&sp("1"), 3).unwrap(), dt(&[&[1]]));
        assert_eq!(highest_tableau(&sp("3,1"), 3).unwrap(), dt(&[&[2, 1, 1], &[1]]));
        assert_eq!(lowest_tableau(&sp("4,3,1"), 4).unwrap(), dt(&[&[4, 4, 4, 4], &[3, 3, 3], &[2]]));
        assert_eq!(lowest_tableau(&sp("3,1"), 3).unwrap(), dt(&[&[3, 3, 3], &[2]]));
        assert_eq!(lowest_tableau(&sp("1"), 1).unwrap(), dt(&[&[1]]));
        assert!(highest_tableau(&sp("3,2,1"), 2).is_err());
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_straight(&sp("3,1"), 3).len(), 24);
        assert!(enumerate_straight(&sp("3,2,1"), 2).is_empty());
        let two = enumerate_straight(&sp("2"), 2);
        assert_eq!(two, vec![dt(&[&[1, 1]]), dt(&[&[1, 2]]), dt(&[&[2, 1]]), dt(&[&[2, 2]])]);
    }

    #[test]
    fn skew_assumption_is_enforced() {
        let bad = SkewShape::shifted(&sp("3,1"), &sp("3")).unwrap();
        assert!(enumerate_ssdt(&bad, 3).is_err());
        let ok = SkewShape::shifted(&sp("4,1"), &sp("2")).unwrap();
        assert!(enumerate_ssdt(&ok, 3).is_ok());
    }

    #[test]
    fn diagonal_indexing() {
        let shape = SkewShape::shifted(&sp("5,4,2"), &sp("3,1")).unwrap();
        let t = DecompTableau::new(shape, vec![vec![1, 2], vec![3, 4, 5], vec![6, 7]]).unwrap();
        assert_eq!(t.diag(1, 4), Some(1));
        assert_eq!(t.diag(1, 3), None);
        assert_eq!(t.diag(2, 2), Some(3));
        assert_eq!(t.diag(3, 1), Some(6));
        assert_eq!(t.entry(2, 1), Some(3));
    }

    #[test]
    fn json_round_trip() {
        let t = dt(&[&[2, 1, 1], &[1]]);
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, r#"{"shape":{"outer":[3,1],"inner":[],"shifted":true},"rows":[["2","1","1"],["1"]]}"#);
        assert_eq!(serde_json::from_str::<DecompTableau>(&j).unwrap(), t);
    }
}
