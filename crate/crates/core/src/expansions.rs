//! Coefficient sets for Schur P-expansions, each computable by several
//! independent methods, and the recording bijections from crystal lowest
//! weight vectors to tableaux.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crystal::{self, CrystalWord};
use crate::error::{Error, Result};
use crate::oracle::{self, Basis};
use crate::par;
use crate::shapes::{complement_in_rectangle, max_strict_length, staircase, Partition, SkewShape, StrictPartition};
use crate::ssdt::{self, hook_down_len, DecompTableau};
use crate::tableaux::{enumerate_semistandard, Alphabet, PrimedTableau};
use crate::words::{self, PrimedLetter, PrimedWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Count the tableau set directly.
    Enumeration,
    /// Shifted LR only: the doubled-word lattice set.
    Stembridge,
    /// Count lowest weight vectors in a crystal.
    Crystal,
    /// Expand explicit polynomials.
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Enumeration, Method::Stembridge, Method::Crystal, Method::Oracle];
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enum" | "enumeration" => Ok(Method::Enumeration),
            "stembridge" | "lrs" => Ok(Method::Stembridge),
            "crystal" => Ok(Method::Crystal),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::Stembridge => "stembridge",
            Method::Crystal => "crystal",
            Method::Oracle => "oracle",
        })
    }
}

// ---------------------------------------------------------------------------
// Growth sequences

/// Row `n+1−u` receives the next box. `strict` keeps the shape strict,
/// otherwise it only has to stay a partition.
struct Growth {
    n: usize,
    rows: Vec<usize>,
    strict: bool,
    shifted: bool,
    step: usize,
}

impl Growth {
    fn new(n: usize, start: &[usize], strict: bool, shifted: bool) -> Result<Self> {
        if start.len() > n {
            return Err(Error::RankMismatch(start.len(), n));
        }
        let mut rows = start.to_vec();
        rows.resize(n, 0);
        Ok(Growth { n, rows, strict, shifted, step: 0 })
    }

    /// Adds the box for letter `u` and returns its cell.
    fn add(&mut self, u: u32) -> Result<(usize, usize)> {
        self.step += 1;
        let u = u as usize;
        if u == 0 || u > self.n {
            return Err(Error::LetterOutOfRange { letter: u, n: self.n });
        }
        let rho = self.n + 1 - u;
        let k = self.rows[rho - 1];
        let gap = if self.strict { 2 } else { 1 };
        if rho > 1 && self.rows[rho - 2] < k + gap {
            return Err(Error::Growth { step: self.step, row: rho });
        }
        self.rows[rho - 1] += 1;
        Ok((rho, if self.shifted { rho + k } else { k + 1 }))
    }

    fn shape(&self) -> Vec<usize> {
        self.rows.iter().copied().take_while(|&x| x > 0).collect()
    }
}

/// Feeds `letters` (value, label) into a growth and returns the final shape
/// with the labeled cells.
/// Filled cells keyed by `(row, col)`.
type CellMap = BTreeMap<(usize, usize), PrimedLetter>;

fn record(
    n: usize,
    start: &[usize],
    strict: bool,
    shifted: bool,
    letters: impl IntoIterator<Item = (u32, PrimedLetter)>,
) -> Result<(Vec<usize>, CellMap)> {
    let mut g = Growth::new(n, start, strict, shifted)?;
    let mut cells = BTreeMap::new();
    for (u, label) in letters {
        cells.insert(g.add(u)?, label);
    }
    Ok((g.shape(), cells))
}

fn tableau_from_cells(shape: SkewShape, cells: &BTreeMap<(usize, usize), PrimedLetter>) -> Result<PrimedTableau> {
    let rows = (1..=shape.num_rows())
        .map(|r| {
            let s = shape.row_start(r);
            (s..s + shape.row_len(r))
                .map(|c| cells.get(&(r, c)).copied().ok_or_else(|| Error::Precondition(format!("cell ({r},{c}) unfilled"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PrimedTableau::new(shape, rows)
}

/// Letters of a (skew) decomposition tableau in the order the growth
/// consumes them: rows top to bottom, each right to left. The label is
/// `k` for the decreasing part of row `k` and `k'` for the increasing part.
fn ssdt_letters(t: &DecompTableau) -> Vec<(u32, PrimedLetter)> {
    let mut out = Vec::new();
    for (i, row) in t.rows().iter().enumerate() {
        let k = (i + 1) as u32;
        let down = hook_down_len(row).unwrap_or(row.len());
        for (j, &x) in row.iter().enumerate().rev() {
            out.push((x, PrimedLetter::new(k, j >= down)));
        }
    }
    out
}

fn check_ranges(t: &DecompTableau, n: usize) -> Result<()> {
    match t.rows().iter().flatten().find(|&&x| x == 0 || x as usize > n) {
        Some(&x) => Err(Error::LetterOutOfRange { letter: x as usize, n }),
        None => Ok(()),
    }
}

/// Rebuilds a decomposition tableau from a recording tableau through the
/// star labeling: the cell labeled `k_j` at row `ρ` gives `T_{k,j} = n+1−ρ`.
fn decomp_from_star(q: &PrimedTableau, n: usize, shape: SkewShape) -> Result<DecompTableau> {
    let w = q.reading_word();
    let star = words::star_labeling(&w);
    let mut rows: Vec<Vec<u32>> = (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
    for (&(row, _), &(k, j)) in q.reading_cells().iter().zip(&star.entries) {
        if row > n {
            return Err(Error::RankMismatch(row, n));
        }
        let slot = rows
            .get_mut(k as usize - 1)
            .and_then(|r| r.get_mut(j - 1))
            .ok_or_else(|| Error::Precondition(format!("label {k}_{j} does not fit the target shape")))?;
        *slot = (n + 1 - row) as u32;
    }
    if rows.iter().flatten().any(|&x| x == 0) {
        return Err(Error::Precondition("content does not match the target shape".into()));
    }
    DecompTableau::new(shape, rows)
}

fn strict_of(parts: Vec<usize>) -> Result<StrictPartition> {
    StrictPartition::new(parts)
}

fn to_u8(word: &[u32]) -> Vec<u8> {
    word.iter().map(|&x| x as u8).collect()
}

fn strict_keys(m: BTreeMap<Partition, u64>) -> Result<BTreeMap<StrictPartition, u64>> {
    m.into_iter().map(|(k, v)| Ok((StrictPartition::try_from(k)?, v))).collect()
}

fn tally<K: Ord>(keys: impl IntoIterator<Item = K>) -> BTreeMap<K, u64> {
    let mut out = BTreeMap::new();
    for k in keys {
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Shifted Littlewood-Richardson coefficients

/// Candidates shared by the F and LRS sets: fillings of `λ/μ` with content
/// `ν` whose reading word ends every value unprimed.
fn lr_candidates(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> Vec<PrimedTableau> {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) {
        return Vec::new();
    }
    let shape = SkewShape::shifted(lambda, mu).expect("containment checked");
    enumerate_semistandard(&shape, nu.len() as u32, Some(nu.parts()), Alphabet::Both)
        .filter(|q| words::rightmost_unprimed(&q.reading_word()))
        .collect()
}

/// Tableaux counted by the labeled lattice condition.
pub fn enum_f(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> Vec<PrimedTableau> {
    lr_candidates(lambda, mu, nu)
        .into_iter()
        .filter(|q| words::has_lattice_property(&q.reading_word()))
        .collect()
}

/// Tableaux counted by the doubled-word lattice condition.
pub fn enum_lrs(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> Vec<PrimedTableau> {
    lr_candidates(lambda, mu, nu)
        .into_iter()
        .filter(|q| words::has_stembridge_lattice_property(&q.reading_word()))
        .collect()
}

/// Smallest rank used by the crystal method for a single triple.
pub fn lr_rank(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> usize {
    2.max(lambda.len()).max(mu.len()).max(nu.len())
}

fn lr_rank_check(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition, n: usize) -> Result<()> {
    for p in [lambda, mu, nu] {
        if p.len() > n {
            return Err(Error::RankMismatch(p.len(), n));
        }
    }
    Ok(())
}

/// `T ∈ SSDT_n(ν)` with `w_rev(T)·w_rev(L^μ_n)` q-lowest of shape `λ`.
pub fn enum_lset(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    n: usize,
) -> Result<Vec<DecompTableau>> {
    lr_rank_check(lambda, mu, nu, n)?;
    if lambda.size() != mu.size() + nu.size() {
        return Ok(Vec::new());
    }
    let tail = ssdt::lowest_tableau(mu, n)?.reverse_reading_word();
    let cands = ssdt::enumerate_straight(nu, n as u32);
    let keep = par::map(&cands, |t| {
        let mut w = to_u8(&t.reverse_reading_word());
        w.extend(to_u8(&tail));
        crystal::q_lowest_shape_raw(&w, n).as_ref() == Some(lambda)
    });
    Ok(cands.into_iter().zip(keep).filter_map(|(t, k)| k.then_some(t)).collect())
}

/// `Q_T`: the labeled recording tableau of `T` grown from `μ`.
pub fn bij_q(t: &DecompTableau, lambda: &StrictPartition, mu: &StrictPartition, n: usize) -> Result<PrimedTableau> {
    check_ranges(t, n)?;
    let (shape, cells) = record(n, mu.parts(), true, true, ssdt_letters(t))?;
    if shape != lambda.parts() {
        return Err(Error::Precondition(format!("growth ends at {shape:?}, expected {lambda}")));
    }
    tableau_from_cells(SkewShape::shifted(lambda, mu)?, &cells)
}

/// Inverse of [`bij_q`].
pub fn bij_q_inverse(q: &PrimedTableau, n: usize) -> Result<DecompTableau> {
    let nu = strict_of(q.content())?;
    decomp_from_star(q, n, SkewShape::shifted_straight(&nu))
}

/// `Q̂_T`: the same growth recorded with step numbers.
pub fn bij_qhat(t: &DecompTableau, lambda: &StrictPartition, mu: &StrictPartition, n: usize) -> Result<PrimedTableau> {
    check_ranges(t, n)?;
    let steps = ssdt_letters(t).into_iter().enumerate().map(|(m, (u, _))| (u, PrimedLetter::unprimed(m as u32 + 1)));
    let (shape, cells) = record(n, mu.parts(), true, true, steps)?;
    if shape != lambda.parts() {
        return Err(Error::Precondition(format!("growth ends at {shape:?}, expected {lambda}")));
    }
    tableau_from_cells(SkewShape::shifted(lambda, mu)?, &cells)
}

/// Inverse of [`bij_qhat`]; `ν` is the shape of the tableau to rebuild.
pub fn bij_qhat_inverse(q: &PrimedTableau, nu: &StrictPartition, n: usize) -> Result<DecompTableau> {
    let word = steps_to_word(q, n)?;
    // Step m consumed w(T)_m, which is w_rev(T)_{N−m+1}.
    let rev: Vec<u32> = word.into_iter().rev().collect();
    DecompTableau::from_reverse_reading_word(&SkewShape::shifted_straight(nu), &rev)
}

/// For a standard recording tableau, the letter consumed at each step.
fn steps_to_word(q: &PrimedTableau, n: usize) -> Result<Vec<u32>> {
    let cells = q.cells();
    let big = cells.len();
    let mut word = vec![0u32; big];
    for ((row, _), l) in cells {
        let m = l.value as usize;
        if l.primed || m == 0 || m > big || word[m - 1] != 0 {
            return Err(Error::Precondition("recording tableau is not standard".into()));
        }
        if row > n {
            return Err(Error::RankMismatch(row, n));
        }
        word[m - 1] = (n + 1 - row) as u32;
    }
    Ok(word)
}

/// Ranks used by the expansion-level crystal method for `P_μ P_ν`.
pub fn lr_expansion_rank(mu: &StrictPartition, nu: &StrictPartition) -> usize {
    2.max(mu.len() + nu.len())
}

/// `f^λ_{μν}` by the requested method.
pub fn shifted_lr(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition, method: Method) -> Result<u64> {
    Ok(match method {
        Method::Enumeration => enum_f(lambda, mu, nu).len() as u64,
        Method::Stembridge => enum_lrs(lambda, mu, nu).len() as u64,
        Method::Crystal => enum_lset(lambda, mu, nu, lr_rank(lambda, mu, nu))?.len() as u64,
        Method::Oracle => shifted_lr_expansion(mu, nu, Method::Oracle)?.get(lambda).copied().unwrap_or(0),
    })
}

/// `P_μ P_ν = Σ f^λ_{μν} P_λ`, zero terms dropped.
pub fn shifted_lr_expansion(
    mu: &StrictPartition,
    nu: &StrictPartition,
    method: Method,
) -> Result<BTreeMap<StrictPartition, u64>> {
    let size = mu.size() + nu.size();
    if method == Method::Oracle {
        let n = 1.max(max_strict_length(size));
        let p = oracle::multiply(&*oracle::schur_p_poly(mu, n)?, &*oracle::schur_p_poly(nu, n)?)?;
        return strict_keys(oracle::to_counts(&oracle::expand_in_basis(&p, Basis::SchurP)?)?);
    }
    if method == Method::Crystal {
        // The whole product as one tensor power: B(ν) ⊗ L^μ.
        let n = lr_expansion_rank(mu, nu);
        let tail = to_u8(&ssdt::lowest_tableau(mu, n)?.reverse_reading_word());
        let cands = ssdt::enumerate_straight(nu, n as u32);
        let shapes = par::map(&cands, |t| {
            let mut w = to_u8(&t.reverse_reading_word());
            w.extend(&tail);
            crystal::q_lowest_shape_raw(&w, n)
        });
        return Ok(tally(shapes.into_iter().flatten()));
    }
    let lambdas: Vec<StrictPartition> =
        StrictPartition::all_of_size(size).into_iter().filter(|l| l.contains(mu) && l.contains(nu)).collect();
    let counts = par::map(&lambdas, |l| shifted_lr(l, mu, nu, method));
    let mut out = BTreeMap::new();
    for (l, c) in lambdas.into_iter().zip(counts) {
        let c = c?;
        if c > 0 {
            out.insert(l, c);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Skew Schur functions of staircase-skew shapes

fn check_staircase_frame(lambda: &Partition, r: usize) -> Result<()> {
    let delta = staircase(r).as_partition();
    if !lambda.contains(&delta) {
        return Err(Error::NotContained { outer: lambda.parts().to_vec(), inner: delta.parts().to_vec() });
    }
    let square = Partition::new(vec![r + 1; r + 1])?;
    if !square.contains(lambda) {
        return Err(Error::NotContained { outer: square.parts().to_vec(), inner: lambda.parts().to_vec() });
    }
    Ok(())
}

/// The unshifted shape `λ/δ_r`.
pub fn staircase_skew(lambda: &Partition, r: usize) -> Result<SkewShape> {
    check_staircase_frame(lambda, r)?;
    SkewShape::unshifted(lambda, &staircase(r).as_partition())
}

/// `c_k = λ_{r+2−k} − k + 1` for `k = 1..=r+1`.
pub fn a_content(lambda: &Partition, r: usize) -> Result<Vec<usize>> {
    check_staircase_frame(lambda, r)?;
    Ok((1..=r + 1).map(|k| lambda.part(r + 2 - k) + 1 - k).collect())
}

fn a_prefix_condition(w: &PrimedWord, r: usize) -> bool {
    let mut m = vec![0usize; r + 3];
    for l in &w.0 {
        m[l.value as usize] += 1;
        if (1..=r).any(|k| m[k] > m[k + 1] + 1) {
            return false;
        }
    }
    true
}

/// Unprimed shifted tableaux of shape `ν` counting `s_{λ/δ_r}` in the P-basis.
pub fn enum_a(lambda: &Partition, r: usize, nu: &StrictPartition) -> Result<Vec<PrimedTableau>> {
    let content = a_content(lambda, r)?;
    if content.iter().sum::<usize>() != nu.size() {
        return Ok(Vec::new());
    }
    Ok(enumerate_semistandard(&SkewShape::shifted_straight(nu), (r + 1) as u32, Some(&content), Alphabet::Unprimed)
        .filter(|q| a_prefix_condition(&q.reverse_reading_word(), r))
        .collect())
}

/// Rank used by the crystal method on `SST_{[n]}(λ/δ_r)`.
pub fn a_rank(lambda: &Partition, r: usize) -> usize {
    let cells = lambda.size() - staircase(r).size().min(lambda.size());
    2.max(lambda.len()).max(max_strict_length(cells))
}

/// Crystal word `w(T)` of an unprimed tableau.
pub fn sst_word(t: &PrimedTableau, n: usize) -> Result<CrystalWord> {
    CrystalWord::new(n, t.reading_word().0.iter().map(|l| l.value as u8).collect())
}

/// All unprimed semistandard tableaux of `λ/δ_r` with entries `≤ n`.
pub fn staircase_sst(lambda: &Partition, r: usize, n: usize) -> Result<Vec<PrimedTableau>> {
    let shape = staircase_skew(lambda, r)?;
    Ok(enumerate_semistandard(&shape, n as u32, None, Alphabet::Unprimed).collect())
}

/// Tableaux of `λ/δ_r` whose word is q-lowest of shape `ν`.
pub fn enum_a_lset(lambda: &Partition, r: usize, nu: &StrictPartition, n: usize) -> Result<Vec<PrimedTableau>> {
    let all = staircase_sst(lambda, r, n)?;
    let keep = par::map(&all, |t| {
        let w: Vec<u8> = t.reading_word().0.iter().map(|l| l.value as u8).collect();
        crystal::q_lowest_shape_raw(&w, n).as_ref() == Some(nu)
    });
    Ok(all.into_iter().zip(keep).filter_map(|(t, k)| k.then_some(t)).collect())
}

pub fn a_expansion(lambda: &Partition, r: usize, method: Method) -> Result<BTreeMap<StrictPartition, u64>> {
    let cells = lambda.size().saturating_sub(staircase(r).size());
    match method {
        Method::Enumeration => {
            a_content(lambda, r)?;
            let nus = StrictPartition::all_of_size(cells);
            let counts = par::map(&nus, |nu| enum_a(lambda, r, nu).map(|v| v.len() as u64));
            let mut out = BTreeMap::new();
            for (nu, c) in nus.into_iter().zip(counts) {
                let c = c?;
                if c > 0 {
                    out.insert(nu, c);
                }
            }
            Ok(out)
        }
        Method::Crystal => a_expansion_at_rank(lambda, r, a_rank(lambda, r)),
        Method::Oracle => {
            let shape = staircase_skew(lambda, r)?;
            let n = 1.max(max_strict_length(cells));
            let p = oracle::skew_schur_poly(&shape, n)?;
            strict_keys(oracle::to_counts(&oracle::expand_in_basis(&p, Basis::SchurP)?)?)
        }
        Method::Stembridge => Err(unsupported("skew-schur-staircase", method)),
    }
}

/// Crystal decomposition of `SST_{[n]}(λ/δ_r)` at a chosen rank.
pub fn a_expansion_at_rank(lambda: &Partition, r: usize, n: usize) -> Result<BTreeMap<StrictPartition, u64>> {
    let words = staircase_sst(lambda, r, n)?
        .iter()
        .map(|t| sst_word(t, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(crystal::decompose(&words)?.into_iter().map(|(k, v)| (k, v as u64)).collect())
}

pub fn a_coefficient(lambda: &Partition, r: usize, nu: &StrictPartition, method: Method) -> Result<u64> {
    if method == Method::Enumeration {
        return Ok(enum_a(lambda, r, nu)?.len() as u64);
    }
    Ok(a_expansion(lambda, r, method)?.get(nu).copied().unwrap_or(0))
}

/// Letters of `T` on `λ/δ_r` in growth order (last row first, each left to
/// right) with the row they came from.
fn sst_letters(t: &PrimedTableau) -> Vec<(u32, usize)> {
    let mut out = Vec::new();
    for (i, row) in t.rows().iter().enumerate().rev() {
        out.extend(row.iter().map(|l| (l.value, i + 1)));
    }
    out
}

fn check_unprimed(t: &PrimedTableau, n: usize) -> Result<()> {
    for l in t.rows().iter().flatten() {
        if l.primed || l.value == 0 || l.value as usize > n {
            return Err(Error::LetterOutOfRange { letter: l.value as usize, n });
        }
    }
    Ok(())
}

/// `Q_T` for the staircase-skew family: row `l` of `T` records as `r+2−l`.
pub fn bij_a(t: &PrimedTableau, r: usize, n: usize) -> Result<PrimedTableau> {
    check_unprimed(t, n)?;
    let letters = sst_letters(t).into_iter().map(|(u, l)| (u, PrimedLetter::unprimed((r + 2 - l) as u32)));
    let (shape, cells) = record(n, &[], true, true, letters)?;
    tableau_from_cells(SkewShape::shifted_straight(&strict_of(shape)?), &cells)
}

/// Inverse of [`bij_a`]: the `k`s, taken by increasing column, refill row
/// `r+2−k` of `T` from left to right.
pub fn bij_a_inverse(q: &PrimedTableau, lambda: &Partition, r: usize, n: usize) -> Result<PrimedTableau> {
    let shape = staircase_skew(lambda, r)?;
    let mut by_label: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for ((row, col), l) in q.cells() {
        if row > n {
            return Err(Error::RankMismatch(row, n));
        }
        by_label.entry(l.value).or_default().push((col, row));
    }
    let mut rows: Vec<Vec<PrimedLetter>> = (1..=shape.num_rows()).map(|l| Vec::with_capacity(shape.row_len(l))).collect();
    for (k, mut cells) in by_label {
        let k = k as usize;
        if k == 0 || k > r + 1 {
            return Err(Error::Precondition(format!("label {k} outside 1..={}", r + 1)));
        }
        cells.sort();
        let l = r + 2 - k;
        if l > rows.len() {
            return Err(Error::Precondition(format!("label {k} has no row in the skew shape")));
        }
        rows[l - 1] = cells.into_iter().map(|(_, row)| PrimedLetter::unprimed((n + 1 - row) as u32)).collect();
    }
    PrimedTableau::new(shape, rows)
}

/// Cells of a skew shape numbered column by column, left to right, each
/// column bottom to top.
fn column_numbering(shape: &SkewShape) -> BTreeMap<(usize, usize), u32> {
    let mut cells = shape.cells();
    cells.sort_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
    cells.into_iter().zip(1..).collect()
}

/// `Q'_T`: the growth of [`bij_a`], each new box filled with the column
/// number of the cell of `T` that produced it.
pub fn bij_qprime(t: &PrimedTableau, n: usize) -> Result<PrimedTableau> {
    check_unprimed(t, n)?;
    let number = column_numbering(t.shape());
    let mut cells = t.cells();
    cells.sort_by(|a, b| b.0 .0.cmp(&a.0 .0).then(a.0 .1.cmp(&b.0 .1)));
    let steps = cells.into_iter().map(|(rc, l)| (l.value, PrimedLetter::unprimed(number[&rc])));
    let (shape, cells) = record(n, &[], true, true, steps)?;
    tableau_from_cells(SkewShape::shifted_straight(&strict_of(shape)?), &cells)
}

/// Inverse of [`bij_qprime`].
pub fn bij_qprime_inverse(q: &PrimedTableau, lambda: &Partition, r: usize, n: usize) -> Result<PrimedTableau> {
    let shape = staircase_skew(lambda, r)?;
    let word = steps_to_word(q, n)?;
    if word.len() != shape.size() {
        return Err(Error::Precondition("recording tableau has the wrong size".into()));
    }
    let number = column_numbering(&shape);
    let rows = (1..=shape.num_rows())
        .map(|l| {
            let s = shape.row_start(l);
            (s..s + shape.row_len(l)).map(|c| PrimedLetter::unprimed(word[number[&(l, c)] as usize - 1])).collect()
        })
        .collect();
    PrimedTableau::new(shape, rows)
}

/// The numbering of `δ_{r+1}/μ` (unshifted) from the bottom row up, each
/// row left to right.
pub fn staircase_filling(mu: &Partition, r: usize) -> Result<PrimedTableau> {
    let outer = staircase(r + 1).as_partition();
    if !outer.contains(mu) {
        return Err(Error::NotContained { outer: outer.parts().to_vec(), inner: mu.parts().to_vec() });
    }
    let shape = SkewShape::unshifted(&outer, mu)?;
    let mut next = 0u32;
    let mut rows = vec![Vec::new(); shape.num_rows()];
    for l in (1..=shape.num_rows()).rev() {
        rows[l - 1] = (0..shape.row_len(l))
            .map(|_| {
                next += 1;
                PrimedLetter::unprimed(next)
            })
            .collect();
    }
    PrimedTableau::new(shape, rows)
}

/// Standard shifted tableaux of shape `ν` constrained by the staircase
/// numbering of `δ_{r+1}/μ`: a label directly above another sits in a
/// later column, and horizontal neighbours `i, i+1` go to a later row.
pub fn enum_b(mu: &Partition, r: usize, nu: &StrictPartition) -> Result<Vec<PrimedTableau>> {
    let fill = staircase_filling(mu, r)?;
    let big = fill.shape().size();
    if nu.size() != big {
        return Ok(Vec::new());
    }
    let mut above = Vec::new();
    let mut beside = Vec::new();
    for ((row, col), x) in fill.cells() {
        if let Some(y) = fill.at(row.wrapping_sub(1), col) {
            above.push((y.value, x.value));
        }
        if let Some(y) = fill.at(row, col + 1) {
            beside.push((x.value, y.value));
        }
    }
    let ones = vec![1usize; big];
    Ok(enumerate_semistandard(&SkewShape::shifted_straight(nu), big as u32, Some(&ones), Alphabet::Unprimed)
        .filter(|q| {
            let mut pos = vec![(0, 0); big + 1];
            for ((row, col), l) in q.cells() {
                pos[l.value as usize] = (row, col);
            }
            above.iter().all(|&(j, i)| pos[j as usize].1 > pos[i as usize].1)
                && beside.iter().all(|&(i, j)| pos[j as usize].0 > pos[i as usize].0)
        })
        .collect())
}

/// `(λ^c)'` for `λ` inside the `(r+1)`-square.
pub fn conjugate_complement(lambda: &Partition, r: usize) -> Result<Partition> {
    Ok(complement_in_rectangle(lambda, r)?.conjugate())
}

/// Pairs an element of the A set with an element of the B set for
/// `μ = (λ^c)'` by passing through the common crystal tableau.
pub fn pair_a_to_b(q: &PrimedTableau, lambda: &Partition, r: usize, n: usize) -> Result<PrimedTableau> {
    bij_qprime(&bij_a_inverse(q, lambda, r, n)?, n)
}

pub fn pair_b_to_a(q: &PrimedTableau, lambda: &Partition, r: usize, n: usize) -> Result<PrimedTableau> {
    bij_a(&bij_qprime_inverse(q, lambda, r, n)?, r, n)
}

// ---------------------------------------------------------------------------
// Schur expansion of P_λ

/// Unshifted primed tableaux of shape `μ` counting `s_μ` in `P_λ`.
pub fn enum_g(lambda: &StrictPartition, mu: &Partition) -> Vec<PrimedTableau> {
    if lambda.size() != mu.size() {
        return Vec::new();
    }
    enumerate_semistandard(&SkewShape::unshifted_straight(mu), lambda.len() as u32, Some(lambda.parts()), Alphabet::Both)
        .filter(|q| {
            let w = q.reading_word();
            words::rightmost_unprimed(&w) && words::has_stembridge_lattice_property(&w)
        })
        .collect()
}

/// Rank for the gl-lowest count; large enough for every Schur term.
pub fn g_rank(lambda: &StrictPartition) -> usize {
    2.max(lambda.size())
}

/// `T ∈ SSDT_n(λ)` that are gl-lowest of weight `w₀μ`.
pub fn enum_g_lset(lambda: &StrictPartition, mu: &Partition, n: usize) -> Result<Vec<DecompTableau>> {
    if mu.len() > n || lambda.len() > n {
        return Err(Error::RankMismatch(mu.len().max(lambda.len()), n));
    }
    let target: Vec<usize> = mu.padded(n).into_iter().rev().collect();
    let cands = ssdt::enumerate_straight(lambda, n as u32);
    let keep = par::map(&cands, |t| {
        let w = to_u8(&t.reverse_reading_word());
        crystal::weight(&w, n) == target && crystal::is_gl_lowest_raw(&w, n)
    });
    Ok(cands.into_iter().zip(keep).filter_map(|(t, k)| k.then_some(t)).collect())
}

pub fn g_expansion(lambda: &StrictPartition, method: Method) -> Result<BTreeMap<Partition, u64>> {
    match method {
        Method::Enumeration => {
            let mus = Partition::all_of_size(lambda.size());
            let counts = par::map(&mus, |mu| enum_g(lambda, mu).len() as u64);
            Ok(mus.into_iter().zip(counts).filter(|&(_, c)| c > 0).collect())
        }
        Method::Crystal => g_expansion_at_rank(lambda, g_rank(lambda)),
        Method::Oracle => {
            let n = 1.max(lambda.size());
            oracle::to_counts(&oracle::expand_in_basis(&*oracle::schur_p_poly(lambda, n)?, Basis::Schur)?)
        }
        Method::Stembridge => Err(unsupported("schur-expansion", method)),
    }
}

/// gl-lowest vectors of `B_n(λ)` tallied by reversed weight.
pub fn g_expansion_at_rank(lambda: &StrictPartition, n: usize) -> Result<BTreeMap<Partition, u64>> {
    if lambda.len() > n {
        return Err(Error::RankMismatch(lambda.len(), n));
    }
    let cands = ssdt::enumerate_straight(lambda, n as u32);
    let mus = par::map(&cands, |t| {
        let w = to_u8(&t.reverse_reading_word());
        crystal::is_gl_lowest_raw(&w, n).then(|| {
            Partition::new(crystal::weight(&w, n).into_iter().rev().collect()).expect("gl-lowest weights are antidominant")
        })
    });
    Ok(tally(mus.into_iter().flatten()))
}

pub fn g_coefficient(lambda: &StrictPartition, mu: &Partition, method: Method) -> Result<u64> {
    match method {
        Method::Enumeration => Ok(enum_g(lambda, mu).len() as u64),
        Method::Crystal => Ok(enum_g_lset(lambda, mu, g_rank(lambda).max(mu.len()))?.len() as u64),
        _ => Ok(g_expansion(lambda, method)?.get(mu).copied().unwrap_or(0)),
    }
}

/// Recording tableau of a gl-lowest `T`, grown as a partition from `∅`.
pub fn bij_g(t: &DecompTableau, n: usize) -> Result<PrimedTableau> {
    check_ranges(t, n)?;
    let (shape, cells) = record(n, &[], false, false, ssdt_letters(t))?;
    tableau_from_cells(SkewShape::unshifted_straight(&Partition::new(shape)?), &cells)
}

/// Inverse of [`bij_g`].
pub fn bij_g_inverse(q: &PrimedTableau, n: usize) -> Result<DecompTableau> {
    let lambda = strict_of(q.content())?;
    decomp_from_star(q, n, SkewShape::shifted_straight(&lambda))
}

// ---------------------------------------------------------------------------
// Skew decomposition tableaux

/// Content `λ_k − μ_k` of the skew family.
fn fskew_content(lambda: &StrictPartition, mu: &StrictPartition) -> Vec<usize> {
    (1..=lambda.len()).map(|k| lambda.part(k) - mu.part(k)).collect()
}

fn fskew_shape(lambda: &StrictPartition, mu: &StrictPartition) -> Result<SkewShape> {
    let shape = SkewShape::shifted(lambda, mu)?;
    ssdt::check_skew_assumption(&shape)?;
    Ok(shape)
}

/// Straight shifted tableaux of shape `ν` counting `P_ν` in the skew
/// decomposition-tableau function of `λ/μ`. Uses the corrected μ-lattice
/// rule; [`enum_fskew_printed`] keeps the three printed rules only.
pub fn enum_fskew(lambda: &StrictPartition, mu: &StrictPartition, nu: &StrictPartition) -> Result<Vec<PrimedTableau>> {
    fskew_filter(lambda, mu, nu, words::has_mu_lattice_property_corrected)
}

pub fn enum_fskew_printed(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
) -> Result<Vec<PrimedTableau>> {
    fskew_filter(lambda, mu, nu, words::has_mu_lattice_property)
}

fn fskew_filter(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    lattice: fn(&PrimedWord, &StrictPartition) -> bool,
) -> Result<Vec<PrimedTableau>> {
    fskew_shape(lambda, mu)?;
    let content = fskew_content(lambda, mu);
    if content.iter().sum::<usize>() != nu.size() {
        return Ok(Vec::new());
    }
    let cands: Vec<PrimedTableau> =
        enumerate_semistandard(&SkewShape::shifted_straight(nu), content.len() as u32, Some(&content), Alphabet::Both)
            .filter(|q| words::rightmost_unprimed(&q.reading_word()))
            .collect();
    let keep = par::map(&cands, |q| lattice(&q.reading_word(), mu));
    Ok(cands.into_iter().zip(keep).filter_map(|(q, k)| k.then_some(q)).collect())
}

pub fn fskew_rank(lambda: &StrictPartition, mu: &StrictPartition) -> usize {
    2.max(lambda.len()).max(max_strict_length(lambda.size() - mu.size().min(lambda.size())))
}

/// Skew tableaux of `λ/μ` whose reverse reading word is q-lowest of shape `ν`.
pub fn enum_fskew_lset(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    n: usize,
) -> Result<Vec<DecompTableau>> {
    let all = ssdt::enumerate_ssdt(&fskew_shape(lambda, mu)?, n as u32)?;
    let keep = par::map(&all, |t| crystal::q_lowest_shape_raw(&to_u8(&t.reverse_reading_word()), n).as_ref() == Some(nu));
    Ok(all.into_iter().zip(keep).filter_map(|(t, k)| k.then_some(t)).collect())
}

pub fn fskew_expansion(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    method: Method,
) -> Result<BTreeMap<StrictPartition, u64>> {
    let shape = fskew_shape(lambda, mu)?;
    let cells = shape.size();
    match method {
        Method::Enumeration => {
            let nus = StrictPartition::all_of_size(cells);
            let mut out = BTreeMap::new();
            for nu in nus {
                let c = enum_fskew(lambda, mu, &nu)?.len() as u64;
                if c > 0 {
                    out.insert(nu, c);
                }
            }
            Ok(out)
        }
        Method::Crystal => fskew_expansion_at_rank(lambda, mu, fskew_rank(lambda, mu)),
        Method::Oracle => {
            let n = 1.max(max_strict_length(cells));
            let p = oracle::skew_ssdt_char(&shape, n)?;
            strict_keys(oracle::to_counts(&oracle::expand_in_basis(&p, Basis::SchurP)?)?)
        }
        Method::Stembridge => Err(unsupported("skew-ssdt", method)),
    }
}

/// Crystal decomposition of the skew tableaux at a chosen rank.
pub fn fskew_expansion_at_rank(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    n: usize,
) -> Result<BTreeMap<StrictPartition, u64>> {
    let all = ssdt::enumerate_ssdt(&fskew_shape(lambda, mu)?, n as u32)?;
    let words = all.iter().map(|t| CrystalWord::from_ssdt(t, n)).collect::<Result<Vec<_>>>()?;
    Ok(crystal::decompose(&words)?.into_iter().map(|(k, v)| (k, v as u64)).collect())
}

pub fn fskew_coefficient(
    lambda: &StrictPartition,
    mu: &StrictPartition,
    nu: &StrictPartition,
    method: Method,
) -> Result<u64> {
    match method {
        Method::Enumeration => Ok(enum_fskew(lambda, mu, nu)?.len() as u64),
        _ => Ok(fskew_expansion(lambda, mu, method)?.get(nu).copied().unwrap_or(0)),
    }
}

/// Recording tableau of a q-lowest skew tableau, grown from `∅`.
pub fn bij_fskew(t: &DecompTableau, n: usize) -> Result<PrimedTableau> {
    check_ranges(t, n)?;
    let (shape, cells) = record(n, &[], true, true, ssdt_letters(t))?;
    tableau_from_cells(SkewShape::shifted_straight(&strict_of(shape)?), &cells)
}

/// Inverse of [`bij_fskew`] onto the skew shape `λ/μ`.
pub fn bij_fskew_inverse(
    q: &PrimedTableau,
    lambda: &StrictPartition,
    mu: &StrictPartition,
    n: usize,
) -> Result<DecompTableau> {
    decomp_from_star(q, n, fskew_shape(lambda, mu)?)
}

// ---------------------------------------------------------------------------
// Requests

fn unsupported(family: &str, method: Method) -> Error {
    Error::Precondition(format!("method {method} is not available for {family}"))
}

/// One coefficient family with its shape parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum CoefficientRequest {
    /// `P_μ P_ν` in the P-basis.
    ShiftedLr { mu: StrictPartition, nu: StrictPartition },
    /// `s_{λ/δ_r}` in the P-basis.
    SkewSchurStaircase { lambda: Partition, r: usize },
    /// `s_{δ_{r+1}/μ}` in the P-basis, via the B set.
    ArdilaSerrano { mu: Partition, r: usize },
    /// `P_λ` in the Schur basis.
    SchurExpansion { lambda: StrictPartition },
    /// The skew decomposition-tableau function of `λ/μ` in the P-basis.
    SkewSsdt { lambda: StrictPartition, mu: StrictPartition },
}

impl CoefficientRequest {
    pub fn family(&self) -> &'static str {
        match self {
            CoefficientRequest::ShiftedLr { .. } => "shifted-lr",
            CoefficientRequest::SkewSchurStaircase { .. } => "skew-schur-staircase",
            CoefficientRequest::ArdilaSerrano { .. } => "ardila-serrano",
            CoefficientRequest::SchurExpansion { .. } => "schur-expansion",
            CoefficientRequest::SkewSsdt { .. } => "skew-ssdt",
        }
    }

    /// Methods that apply to this family.
    pub fn methods(&self) -> Vec<Method> {
        match self {
            CoefficientRequest::ShiftedLr { .. } => Method::ALL.to_vec(),
            _ => vec![Method::Enumeration, Method::Crystal, Method::Oracle],
        }
    }

    /// Nonzero coefficients keyed by the basis partition.
    pub fn expand(&self, method: Method) -> Result<BTreeMap<Partition, u64>> {
        fn widen(m: BTreeMap<StrictPartition, u64>) -> BTreeMap<Partition, u64> {
            m.into_iter().map(|(k, v)| (k.as_partition(), v)).collect()
        }
        match self {
            CoefficientRequest::ShiftedLr { mu, nu } => shifted_lr_expansion(mu, nu, method).map(widen),
            CoefficientRequest::SkewSchurStaircase { lambda, r } => a_expansion(lambda, *r, method).map(widen),
            CoefficientRequest::ArdilaSerrano { mu, r } => {
                let lambda = conjugate_complement(mu, *r)?;
                if method != Method::Enumeration {
                    return a_expansion(&lambda, *r, method).map(widen);
                }
                let fill = staircase_filling(mu, *r)?;
                let mut out = BTreeMap::new();
                for nu in StrictPartition::all_of_size(fill.shape().size()) {
                    let c = enum_b(mu, *r, &nu)?.len() as u64;
                    if c > 0 {
                        out.insert(nu.as_partition(), c);
                    }
                }
                Ok(out)
            }
            CoefficientRequest::SchurExpansion { lambda } => g_expansion(lambda, method),
            CoefficientRequest::SkewSsdt { lambda, mu } => fskew_expansion(lambda, mu, method).map(widen),
        }
    }
}

/// Sorted, deduplicated copy; enumerations are compared as sets.
pub fn as_set<T: Ord + Clone>(items: &[T]) -> BTreeSet<T> {
    items.iter().cloned().collect()
}
