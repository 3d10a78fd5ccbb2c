//! Primed letters, words over them, the starred labeling and the three
//! lattice-type predicates used to cut recording tableaux out of
//! semistandard ones.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::StrictPartition;

/// A letter of `1' < 1 < 2' < 2 < …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct PrimedLetter {
    pub value: u32,
    pub primed: bool,
}

impl PrimedLetter {
    pub fn new(value: u32, primed: bool) -> Self {
        assert!(value >= 1, "letters are positive");
        PrimedLetter { value, primed }
    }

    pub fn unprimed(value: u32) -> Self {
        PrimedLetter::new(value, false)
    }

    pub fn primed(value: u32) -> Self {
        PrimedLetter::new(value, true)
    }

    /// `2k−1` for `k'`, `2k` for `k`.
    pub fn key(self) -> u32 {
        2 * self.value - u32::from(self.primed)
    }

    pub fn from_key(key: u32) -> Self {
        PrimedLetter::new(key.div_ceil(2), key % 2 == 1)
    }
}

impl Ord for PrimedLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for PrimedLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl FromStr for PrimedLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (digits, primed) = match t.strip_suffix('\'').or_else(|| t.strip_suffix('p')) {
            Some(d) => (d, true),
            None => (t, false),
        };
        match digits.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(PrimedLetter::new(v, primed)),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl TryFrom<String> for PrimedLetter {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PrimedLetter> for String {
    fn from(l: PrimedLetter) -> Self {
        l.to_string()
    }
}

/// A finite word over the primed alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimedWord(pub Vec<PrimedLetter>);

impl PrimedWord {
    pub fn letters(&self) -> &[PrimedLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> PrimedWord {
        PrimedWord(self.0.iter().rev().copied().collect())
    }
}

impl FromStr for PrimedWord {
    type Err = Error;
    /// Whitespace-separated letters, e.g. `"2 1' 1"`.
    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace().map(str::parse).collect::<Result<_>>().map(PrimedWord)
    }
}

impl fmt::Display for PrimedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A word whose letters carry labels: value `k` with label `j` is `k_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledWord {
    pub entries: Vec<(u32, usize)>,
}

impl LabeledWord {
    /// Position of `value_label`, if it occurs.
    pub fn position(&self, value: u32, label: usize) -> Option<usize> {
        self.entries.iter().position(|&e| e == (value, label))
    }

    fn positions(&self) -> HashMap<(u32, usize), usize> {
        self.entries.iter().enumerate().map(|(i, &e)| (e, i)).collect()
    }
}

/// `m_k = c_k(w) + c_{k'}(w)`, trailing zeros dropped.
pub fn content(w: &PrimedWord) -> Vec<usize> {
    let mut counts = Vec::new();
    for l in &w.0 {
        let k = l.value as usize;
        if counts.len() < k {
            counts.resize(k, 0);
        }
        counts[k - 1] += 1;
    }
    counts
}

/// Labels the `k`s of `w`: unprimed ones left to right first, then primed
/// ones right to left; primes are then dropped.
pub fn star_labeling(w: &PrimedWord) -> LabeledWord {
    let mut entries = vec![(0u32, 0usize); w.len()];
    let mut next: HashMap<u32, usize> = HashMap::new();
    for (i, l) in w.0.iter().enumerate() {
        if !l.primed {
            let c = next.entry(l.value).or_insert(0);
            *c += 1;
            entries[i] = (l.value, *c);
        }
    }
    for (i, l) in w.0.iter().enumerate().rev() {
        if l.primed {
            let c = next.entry(l.value).or_insert(0);
            *c += 1;
            entries[i] = (l.value, *c);
        }
    }
    LabeledWord { entries }
}

fn max_value(w: &PrimedWord) -> u32 {
    w.0.iter().map(|l| l.value).max().unwrap_or(0)
}

/// Is there a letter `value_j` with `j` in `labels` at a position in `range`?
fn occurs_in(
    star: &LabeledWord,
    range: std::ops::RangeInclusive<usize>,
    value: u32,
    labels: impl Fn(usize) -> bool,
) -> bool {
    star.entries[range].iter().any(|&(v, j)| v == value && labels(j))
}

/// The labeled-word lattice condition (three rules per value `k`).
///
/// A `k+1` anywhere with no `k_1` at all breaks the first rule. Pairs whose
/// companion label does not occur impose nothing.
pub fn has_lattice_property(w: &PrimedWord) -> bool {
    let star = star_labeling(w);
    let pos = star.positions();
    let top = max_value(w);
    for k in 1..top {
        let first_kp1 = star.entries.iter().position(|&(v, _)| v == k + 1);
        if let Some(f) = first_kp1 {
            match pos.get(&(k, 1)) {
                Some(&p) if p < f => {}
                _ => return false,
            }
        }
        let m_next = star.entries.iter().filter(|&&(v, _)| v == k + 1).count();
        let m_k = star.entries.iter().filter(|&&(v, _)| v == k).count();
        for i in 1..=m_next {
            if let (Some(&s), Some(&t)) = (pos.get(&(k + 1, i)), pos.get(&(k, i + 1))) {
                if s < t && occurs_in(&star, s..=t, k + 1, |j| j > i) {
                    return false;
                }
            }
        }
        for j in 1..=m_k {
            if let (Some(&s), Some(&t)) = (pos.get(&(k, j + 1)), pos.get(&(k + 1, j))) {
                if s < t && occurs_in(&star, s..=t, k, |i| i <= j) {
                    return false;
                }
            }
        }
    }
    true
}

/// The lattice condition relative to `μ`: the first rule only applies past
/// `ℓ(μ)` and the pairings are shifted by `α_k = μ_k − μ_{k+1}`.
pub fn has_mu_lattice_property(w: &PrimedWord, mu: &StrictPartition) -> bool {
    let star = star_labeling(w);
    let pos = star.positions();
    let top = max_value(w);
    for k in 1..top {
        let ku = k as usize;
        let alpha = mu.part(ku) - mu.part(ku + 1);
        if ku > mu.len() {
            let first_kp1 = star.entries.iter().position(|&(v, _)| v == k + 1);
            if let Some(f) = first_kp1 {
                match pos.get(&(k, 1)) {
                    Some(&p) if p < f => {}
                    _ => return false,
                }
            }
        }
        let m_next = star.entries.iter().filter(|&&(v, _)| v == k + 1).count();
        for i in (alpha + 1)..=m_next {
            if let (Some(&s), Some(&t)) = (pos.get(&(k + 1, i)), pos.get(&(k, i + 1 - alpha))) {
                if s < t && occurs_in(&star, s..=t, k + 1, |j| j > i) {
                    return false;
                }
            }
        }
        for j in (alpha + 1)..=m_next {
            if let (Some(&s), Some(&t)) = (pos.get(&(k, j + 1 - alpha)), pos.get(&(k + 1, j))) {
                if s < t && occurs_in(&star, s..=t, k, |i| i <= j - alpha) {
                    return false;
                }
            }
        }
    }
    true
}

/// The μ-relative lattice condition with one more pairing per `k`: when
/// `(k+1)_α` (or the start of the word, for `α = 0`) precedes `k_1`, no
/// `(k+1)_j` with `j > α` lies between them. For `α = 0` this is the first
/// rule; for `α > 0` it ties the first `k` of a row to the last free
/// `k+1` of the row below, which the printed rules leave unconstrained.
pub fn has_mu_lattice_property_corrected(w: &PrimedWord, mu: &StrictPartition) -> bool {
    if !has_mu_lattice_property(w, mu) {
        return false;
    }
    let star = star_labeling(w);
    let pos = star.positions();
    for k in 1..max_value(w) {
        let alpha = mu.part(k as usize) - mu.part(k as usize + 1);
        let Some(&t) = pos.get(&(k, 1)) else { continue };
        let s = if alpha == 0 {
            0
        } else {
            match pos.get(&(k + 1, alpha)) {
                Some(&s) => s,
                None => continue,
            }
        };
        if s <= t && occurs_in(&star, s..=t, k + 1, |j| j > alpha) {
            return false;
        }
    }
    true
}

/// `ŵ`: `k ↦ (k+1)'` and `k' ↦ k`.
pub fn hat(w: &PrimedWord) -> PrimedWord {
    PrimedWord(
        w.0.iter()
            .map(|l| {
                if l.primed {
                    PrimedLetter::unprimed(l.value)
                } else {
                    PrimedLetter::primed(l.value + 1)
                }
            })
            .collect(),
    )
}

/// The doubled word `w · reverse(ŵ)`.
pub fn doubled_word(w: &PrimedWord) -> PrimedWord {
    let mut a = w.0.clone();
    a.extend(hat(w).0.into_iter().rev());
    PrimedWord(a)
}

/// The doubled-word lattice condition: whenever the prefix of length `i`
/// holds as many unprimed `k+1` as unprimed `k`, the next letter must not
/// have value `k+1`. Only unprimed letters are counted.
pub fn has_stembridge_lattice_property(w: &PrimedWord) -> bool {
    let a = doubled_word(w);
    let top = a.0.iter().map(|l| l.value as usize).max().unwrap_or(0);
    let mut m = vec![0usize; top + 2];
    for l in &a.0 {
        let v = l.value as usize;
        if v >= 2 && m[v] == m[v - 1] {
            return false;
        }
        if !l.primed {
            m[v] += 1;
        }
    }
    true
}

/// For every value present, its last occurrence is unprimed.
pub fn rightmost_unprimed(w: &PrimedWord) -> bool {
    let mut seen: Vec<u32> = Vec::new();
    for l in w.0.iter().rev() {
        if !seen.contains(&l.value) {
            if l.primed {
                return false;
            }
            seen.push(l.value);
        }
    }
    true
}

/// Is `content` (as produced by [`content`]) a strict partition?
pub fn content_is_strict(content: &[usize]) -> bool {
    content.iter().all(|&c| c > 0) && content.windows(2).all(|p| p[0] > p[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PrimedWord {
        s.parse().unwrap()
    }

    fn labels(s: &str) -> Vec<(u32, usize)> {
        star_labeling(&w(s)).entries
    }

    #[test]
    fn letter_order_and_syntax() {
        let a: PrimedLetter = "1'".parse().unwrap();
        let b: PrimedLetter = "1".parse().unwrap();
        let c: PrimedLetter = "2p".parse().unwrap();
        assert!(a < b && b < c);
        assert_eq!(c.to_string(), "2'");
        assert_eq!(PrimedLetter::from_key(c.key()), c);
        assert!("0".parse::<PrimedLetter>().is_err());
        assert!("x".parse::<PrimedLetter>().is_err());
        let j = serde_json::to_string(&w("2 1' 1")).unwrap();
        assert_eq!(j, r#"["2","1'","1"]"#);
    }

    #[test]
    fn contents() {
        assert_eq!(content(&w("1 1' 1 1' 1")), vec![5]);
        assert_eq!(content(&w("")), Vec::<usize>::new());
        assert_eq!(content(&w("2 1' 1 2' 2' 1 2 1")), vec![4, 4]);
    }

    #[test]
    fn star_labels() {
        assert_eq!(labels("1 1' 1 1' 1"), vec![(1, 1), (1, 5), (1, 2), (1, 4), (1, 3)]);
        assert_eq!(
            labels("2 1' 1 2' 2' 1 2 1"),
            vec![(2, 1), (1, 4), (1, 1), (2, 4), (2, 3), (1, 2), (2, 2), (1, 3)]
        );
        assert_eq!(labels("1"), vec![(1, 1)]);
    }

    #[test]
    fn lattice_examples() {
        assert!(has_lattice_property(&w("1' 1 1 2")));
        assert!(!has_lattice_property(&w("2")));
        assert!(has_stembridge_lattice_property(&w("1' 1 1 2")));
        assert!(has_stembridge_lattice_property(&w("")));
        assert!(!has_stembridge_lattice_property(&w("2")));
        assert_eq!(doubled_word(&w("1' 1 1 2")).to_string(), "1' 1 1 2 3' 2' 2' 1");
    }

    #[test]
    fn degenerate_pairs_are_vacuous() {
        // 1_1 2_1 2_2: the pair (2_1, 1_2) never forms because 1_2 is absent.
        assert!(has_lattice_property(&w("1 2 2")));
        // The doubled-word condition does see the shortage of 1s.
        assert!(!has_stembridge_lattice_property(&w("1 2 2")));
    }

    #[test]
    fn mu_lattice_examples() {
        let mu: StrictPartition = "4,2".parse().unwrap();
        // Reading word of the shifted tableau [1,1,2',2,3,3],[2,4].
        assert!(has_mu_lattice_property(&w("3 3 2 2' 1 1 4 2"), &mu));
        assert!(!has_mu_lattice_property(&w("4"), &mu));
        assert!(has_mu_lattice_property(&w("1' 1 1 2"), &StrictPartition::empty()));
        // Two free 2s, but the third one sits before the first 1.
        let mu = StrictPartition::new(vec![4, 2]).unwrap();
        assert!(has_mu_lattice_property(&w("2 2 2 1 1"), &mu));
        assert!(!has_mu_lattice_property_corrected(&w("2 2 2 1 1"), &mu));
        assert!(has_mu_lattice_property_corrected(&w("2 2 1 1 2"), &mu));
    }

    #[test]
    fn rightmost_letters() {
        assert!(rightmost_unprimed(&w("1' 1 1 2")));
        assert!(!rightmost_unprimed(&w("1 1'")));
        assert!(rightmost_unprimed(&w("")));
    }
}
