//! Fillings of (skew, shifted or unshifted) shapes by primed letters.
//!
//! `rows[i-1][j-1]` is `T_{i,j}`, the `j`-th filled entry of row `i`, not
//! the entry at grid position `(i, j)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::SkewShape;
use crate::words::{PrimedLetter, PrimedWord};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawTableau")]
pub struct PrimedTableau {
    shape: SkewShape,
    rows: Vec<Vec<PrimedLetter>>,
}

#[derive(Deserialize)]
struct RawTableau {
    shape: SkewShape,
    rows: Vec<Vec<PrimedLetter>>,
}

impl TryFrom<RawTableau> for PrimedTableau {
    type Error = Error;
    fn try_from(r: RawTableau) -> Result<Self> {
        PrimedTableau::new(r.shape, r.rows)
    }
}

pub(crate) fn check_row_lengths<T>(shape: &SkewShape, rows: &mut Vec<Vec<T>>) -> Result<()> {
    // Trailing rows that are empty in the skew shape may be omitted.
    while rows.len() < shape.num_rows() && (rows.len()..shape.num_rows()).all(|r| shape.row_len(r + 1) == 0) {
        rows.push(Vec::new());
    }
    if rows.len() != shape.num_rows() {
        return Err(Error::RowLength {
            row: rows.len().min(shape.num_rows()) + 1,
            expected: shape.num_rows(),
            got: rows.len(),
        });
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != shape.row_len(i + 1) {
            return Err(Error::RowLength {
                row: i + 1,
                expected: shape.row_len(i + 1),
                got: row.len(),
            });
        }
    }
    Ok(())
}

impl PrimedTableau {
    pub fn new(shape: SkewShape, mut rows: Vec<Vec<PrimedLetter>>) -> Result<Self> {
        check_row_lengths(&shape, &mut rows)?;
        Ok(PrimedTableau { shape, rows })
    }

    /// Rows given as whitespace-separated letters, e.g. `["1' 1", "2"]`.
    pub fn from_strs(shape: SkewShape, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.parse::<PrimedWord>().map(|w| w.0))
            .collect::<Result<Vec<_>>>()?;
        PrimedTableau::new(shape, rows)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<PrimedLetter>] {
        &self.rows
    }

    /// `T_{i,j}`.
    pub fn entry(&self, i: usize, j: usize) -> Option<PrimedLetter> {
        self.rows.get(i.checked_sub(1)?)?.get(j.checked_sub(1)?).copied()
    }

    /// The entry at grid position `(row, col)`.
    pub fn at(&self, row: usize, col: usize) -> Option<PrimedLetter> {
        if !self.shape.contains_cell(row, col) {
            return None;
        }
        Some(self.rows[row - 1][col - self.shape.row_start(row)])
    }

    /// Cells with their letters, row-major.
    pub fn cells(&self) -> Vec<((usize, usize), PrimedLetter)> {
        self.shape
            .cells()
            .into_iter()
            .map(|(r, c)| ((r, c), self.rows[r - 1][c - self.shape.row_start(r)]))
            .collect()
    }

    /// Rows top to bottom, each read right to left.
    pub fn reading_word(&self) -> PrimedWord {
        PrimedWord(self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect())
    }

    /// Cells in reading-word order.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.shape.size());
        for row in 1..=self.shape.num_rows() {
            let start = self.shape.row_start(row);
            out.extend((start..start + self.shape.row_len(row)).rev().map(|c| (row, c)));
        }
        out
    }

    pub fn reverse_reading_word(&self) -> PrimedWord {
        self.reading_word().reversed()
    }

    /// Letter multiplicities with primes pooled.
    pub fn content(&self) -> Vec<usize> {
        crate::words::content(&self.reading_word())
    }

    pub fn is_semistandard(&self) -> bool {
        self.cells().into_iter().all(|((r, c), x)| {
            let left_ok = match self.at(r, c.wrapping_sub(1)) {
                Some(l) => l < x || (l == x && !l.primed),
                None => true,
            };
            let up_ok = match self.at(r.wrapping_sub(1), c) {
                Some(u) => u < x || (u == x && u.primed),
                None => true,
            };
            left_ok && up_ok
        })
    }
}

/// Which letters an enumeration may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    Primed,
    Unprimed,
    Both,
}

/// Backtracking enumeration of semistandard fillings in row-major
/// lexicographic order of the letter keys.
pub struct SemistandardIter {
    shape: SkewShape,
    cells: Vec<(usize, usize)>,
    /// Index of the left and upper neighbour in `cells`, if in the shape.
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    letters: Vec<PrimedLetter>,
    content: Option<Vec<usize>>,
    used: Vec<usize>,
    chosen: Vec<usize>,
    next_try: Vec<usize>,
    depth: usize,
    done: bool,
}

impl SemistandardIter {
    fn admissible(&self, depth: usize, cand: PrimedLetter) -> bool {
        if let Some(content) = &self.content {
            let v = cand.value as usize;
            if v > content.len() || self.used[v - 1] >= content[v - 1] {
                return false;
            }
        }
        if let Some(l) = self.left[depth] {
            let l = self.letters[self.chosen[l]];
            if cand < l || (cand == l && l.primed) {
                return false;
            }
        }
        if let Some(u) = self.up[depth] {
            let u = self.letters[self.chosen[u]];
            if cand < u || (cand == u && !u.primed) {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, depth: usize, idx: usize) {
        self.chosen[depth] = idx;
        self.used[self.letters[idx].value as usize - 1] += 1;
    }

    fn unassign(&mut self, depth: usize) {
        let v = self.letters[self.chosen[depth]].value as usize;
        self.used[v - 1] -= 1;
    }

    fn build(&self) -> PrimedTableau {
        let mut rows: Vec<Vec<PrimedLetter>> =
            (1..=self.shape.num_rows()).map(|r| Vec::with_capacity(self.shape.row_len(r))).collect();
        for (k, &(r, _)) in self.cells.iter().enumerate() {
            rows[r - 1].push(self.letters[self.chosen[k]]);
        }
        PrimedTableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl Iterator for SemistandardIter {
    type Item = PrimedTableau;

    fn next(&mut self) -> Option<PrimedTableau> {
        let n = self.cells.len();
        while !self.done {
            if self.depth == n {
                let t = self.build();
                if n == 0 {
                    self.done = true;
                } else {
                    self.depth -= 1;
                    self.unassign(self.depth);
                }
                return Some(t);
            }
            let d = self.depth;
            let found = (self.next_try[d]..self.letters.len()).find(|&i| self.admissible(d, self.letters[i]));
            match found {
                Some(i) => {
                    self.assign(d, i);
                    self.next_try[d] = i + 1;
                    self.depth += 1;
                    if self.depth < n {
                        self.next_try[self.depth] = 0;
                    }
                }
                None => {
                    if d == 0 {
                        self.done = true;
                    } else {
                        self.depth -= 1;
                        self.unassign(self.depth);
                    }
                }
            }
        }
        None
    }
}

/// All semistandard fillings of `shape` with letters of value at most
/// `max_value`. With `content`, only fillings with `c_k + c_{k'} = content[k-1]`.
pub fn enumerate_semistandard(
    shape: &SkewShape,
    max_value: u32,
    content: Option<&[usize]>,
    alphabet: Alphabet,
) -> SemistandardIter {
    let cells = shape.cells();
    let index = |rc: (usize, usize)| cells.iter().position(|&x| x == rc);
    let left = cells.iter().map(|&(r, c)| index((r, c.wrapping_sub(1)))).collect();
    let up = cells.iter().map(|&(r, c)| index((r.wrapping_sub(1), c))).collect();
    let letters: Vec<PrimedLetter> = (1..=2 * max_value)
        .map(PrimedLetter::from_key)
        .filter(|l| match alphabet {
            Alphabet::Primed => l.primed,
            Alphabet::Unprimed => !l.primed,
            Alphabet::Both => true,
        })
        .collect();
    let mut content = content.map(|c| c.to_vec());
    let infeasible = match &content {
        Some(c) => c.iter().sum::<usize>() != cells.len() || c.len() > max_value as usize,
        None => false,
    };
    if let Some(c) = content.as_mut() {
        c.resize(max_value as usize, 0);
    }
    let n = cells.len();
    SemistandardIter {
        shape: shape.clone(),
        cells,
        left,
        up,
        letters,
        content,
        used: vec![0; max_value as usize],
        chosen: vec![0; n],
        next_try: vec![0; n.max(1)],
        depth: 0,
        done: infeasible || (max_value == 0 && n > 0),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{Partition, StrictPartition};

    fn shifted(outer: &str, inner: &str) -> SkewShape {
        SkewShape::shifted(&outer.parse().unwrap(), &inner.parse().unwrap()).unwrap()
    }

    fn straight(outer: &str) -> SkewShape {
        SkewShape::unshifted_straight(&outer.parse().unwrap())
    }

    #[test]
    fn reading_words() {
        let t = PrimedTableau::from_strs(shifted("4,3,1", "3,1"), &["1'", "1 1", "2"]).unwrap();
        assert_eq!(t.reading_word().to_string(), "1' 1 1 2");
        let t = PrimedTableau::from_strs(straight("2,1"), &["1 1", "2"]).unwrap();
        assert_eq!(t.reading_word().to_string(), "1 1 2");
        let t = PrimedTableau::from_strs(shifted("3,1", ""), &["2 1 1", "1"]).unwrap();
        assert_eq!(t.reverse_reading_word().to_string(), "1 2 1 1");
        let t = PrimedTableau::from_strs(straight("1"), &["5"]).unwrap();
        assert_eq!(t.reading_word().to_string(), "5");
        let e = PrimedTableau::new(straight(""), vec![]).unwrap();
        assert!(e.reverse_reading_word().is_empty());
    }

    #[test]
    fn semistandardness() {
        let t = PrimedTableau::from_strs(straight("2,1,1"), &["1' 1", "1", "2"]).unwrap();
        assert!(t.is_semistandard());
        let t = PrimedTableau::from_strs(straight("2"), &["1' 1'"]).unwrap();
        assert!(!t.is_semistandard());
        let t = PrimedTableau::from_strs(straight("1,1"), &["1", "1"]).unwrap();
        assert!(!t.is_semistandard());
        let t = PrimedTableau::from_strs(straight("1,1"), &["1'", "1'"]).unwrap();
        assert!(t.is_semistandard());
    }

    #[test]
    fn enumeration_counts() {
        let s = SkewShape::shifted_straight(&StrictPartition::new(vec![1]).unwrap());
        assert_eq!(enumerate_semistandard(&s, 2, None, Alphabet::Unprimed).count(), 2);
        assert_eq!(enumerate_semistandard(&straight("3,1"), 3, None, Alphabet::Unprimed).count(), 15);
        let empty = SkewShape::unshifted_straight(&Partition::empty());
        assert_eq!(enumerate_semistandard(&empty, 3, None, Alphabet::Both).count(), 1);
    }

    #[test]
    fn enumeration_is_sorted_and_semistandard() {
        let all: Vec<_> = enumerate_semistandard(&shifted("3,1", ""), 3, None, Alphabet::Both).collect();
        assert!(all.iter().all(PrimedTableau::is_semistandard));
        let keys: Vec<Vec<u32>> = all
            .iter()
            .map(|t| t.cells().iter().map(|(_, l)| l.key()).collect())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn content_filter_contains_recording_tableaux() {
        let s = shifted("4,3,1", "3,1");
        let all: Vec<_> = enumerate_semistandard(&s, 2, Some(&[3, 1]), Alphabet::Both).collect();
        let q1 = PrimedTableau::from_strs(s.clone(), &["1'", "1 1", "2"]).unwrap();
        let q2 = PrimedTableau::from_strs(s, &["1", "1' 2", "1"]).unwrap();
        assert!(all.contains(&q1) && all.contains(&q2));
    }

    #[test]
    fn json_round_trip() {
        let t = PrimedTableau::from_strs(shifted("3,1", ""), &["1' 1 2", "2"]).unwrap();
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(
            j,
            r#"{"shape":{"outer":[3,1],"inner":[],"shifted":true},"rows":[["1'","1","2"],["2"]]}"#
        );
        assert_eq!(serde_json::from_str::<PrimedTableau>(&j).unwrap(), t);
        assert!(serde_json::from_str::<PrimedTableau>(
            r#"{"shape":{"outer":[3,1],"inner":[],"shifted":true},"rows":[["1"],["2"]]}"#
        )
        .is_err());
    }
}
