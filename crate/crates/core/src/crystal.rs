//! gl(n)- and q(n)-crystal operators on words over `{1..n}`.
//!
//! A word `w₁…w_N` stands for `w₁ ⊗ ⋯ ⊗ w_N`. The gl(n) operators use the
//! bracketing form of the tensor rule: an `i` to the left of an `i+1`
//! cancels. [`tensor_rule`] keeps the literal recursive rule as an oracle.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par;
use crate::shapes::{SkewShape, StrictPartition};
use crate::ssdt::DecompTableau;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawWord")]
pub struct CrystalWord {
    n: usize,
    letters: Vec<u8>,
}

#[derive(Deserialize)]
struct RawWord {
    n: usize,
    letters: Vec<u8>,
}

impl TryFrom<RawWord> for CrystalWord {
    type Error = Error;
    fn try_from(raw: RawWord) -> Result<Self> {
        CrystalWord::new(raw.n, raw.letters)
    }
}

impl CrystalWord {
    pub fn new(n: usize, letters: Vec<u8>) -> Result<Self> {
        if !(2..=u8::MAX as usize).contains(&n) {
            return Err(Error::Precondition(format!("rank n = {n} must be in 2..=255")));
        }
        if let Some(&x) = letters.iter().find(|&&x| x == 0 || x as usize > n) {
            return Err(Error::LetterOutOfRange { letter: x as usize, n });
        }
        Ok(CrystalWord { n, letters })
    }

    /// Whitespace-separated letters.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| t.parse::<u8>().map_err(|_| Error::Parse(t.to_string())))
            .collect::<Result<Vec<_>>>()?;
        CrystalWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w_rev(T)`.
    pub fn from_ssdt(t: &DecompTableau, n: usize) -> Result<Self> {
        CrystalWord::new(n, t.reverse_reading_word().into_iter().map(|x| x as u8).collect())
    }

    /// Inverse of [`CrystalWord::from_ssdt`] for a given shape.
    pub fn to_ssdt(&self, shape: &SkewShape) -> Result<DecompTableau> {
        let w: Vec<u32> = self.letters.iter().map(|&x| x as u32).collect();
        DecompTableau::from_reverse_reading_word(shape, &w)
    }

    fn with(&self, letters: Vec<u8>) -> Self {
        CrystalWord { n: self.n, letters }
    }

    fn check_index(&self, i: usize, lo: usize) -> Result<()> {
        if i < lo || i >= self.n {
            return Err(Error::IndexOutOfRange { i, n: self.n });
        }
        Ok(())
    }

    pub fn weight(&self) -> Vec<usize> {
        weight(&self.letters, self.n)
    }

    pub fn f(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i, 1)?;
        Ok(f_raw(&self.letters, i).map(|l| self.with(l)))
    }

    pub fn e(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i, 1)?;
        Ok(e_raw(&self.letters, i).map(|l| self.with(l)))
    }

    pub fn phi(&self, i: usize) -> Result<usize> {
        self.check_index(i, 1)?;
        Ok(signature(&self.letters, i).phi())
    }

    pub fn epsilon(&self, i: usize) -> Result<usize> {
        self.check_index(i, 1)?;
        Ok(signature(&self.letters, i).eps())
    }

    pub fn f_1bar(&self) -> Option<Self> {
        f1bar_raw(&self.letters).map(|l| self.with(l))
    }

    pub fn e_1bar(&self) -> Option<Self> {
        e1bar_raw(&self.letters).map(|l| self.with(l))
    }

    /// `S_{r_i}`.
    pub fn weyl_reflect(&self, i: usize) -> Result<Self> {
        self.check_index(i, 1)?;
        Ok(self.with(reflect_raw(&self.letters, i)))
    }

    /// `f̃_ī` for `1 ≤ i ≤ n−1` (`i = 1` is the direct rule).
    pub fn f_ibar(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i, 1)?;
        Ok(bar_raw(&self.letters, i, true).map(|l| self.with(l)))
    }

    pub fn e_ibar(&self, i: usize) -> Result<Option<Self>> {
        self.check_index(i, 1)?;
        Ok(bar_raw(&self.letters, i, false).map(|l| self.with(l)))
    }

    /// `f̃_ī` conjugated by `S_w` for an explicit `w` with `w(i)=1`,
    /// `w(i+1)=2`. `perm[k-1]` is the image of `k`.
    pub fn f_ibar_via(&self, i: usize, perm: &[usize]) -> Result<Option<Self>> {
        let seq = self.conjugating_sequence(i, perm)?;
        Ok(conjugated(&self.letters, &seq, f1bar_raw).map(|l| self.with(l)))
    }

    pub fn e_ibar_via(&self, i: usize, perm: &[usize]) -> Result<Option<Self>> {
        let seq = self.conjugating_sequence(i, perm)?;
        Ok(conjugated(&self.letters, &seq, e1bar_raw).map(|l| self.with(l)))
    }

    fn conjugating_sequence(&self, i: usize, perm: &[usize]) -> Result<Vec<usize>> {
        self.check_index(i, 1)?;
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if perm.len() != self.n || sorted != (1..=self.n).collect::<Vec<_>>() {
            return Err(Error::Precondition(format!("{perm:?} is not a permutation of 1..={}", self.n)));
        }
        if perm[i - 1] != 1 || perm[i] != 2 {
            return Err(Error::Precondition(format!("{perm:?} must send {i} to 1 and {} to 2", i + 1)));
        }
        Ok(reflection_sequence(perm))
    }

    pub fn apply(&self, op: Op) -> Result<Option<Self>> {
        match op {
            Op::E(i) => self.e(i),
            Op::F(i) => self.f(i),
            Op::EBar(i) => self.e_ibar(i),
            Op::FBar(i) => self.f_ibar(i),
        }
    }

    /// `S_{w₀}`, reversing the weight.
    pub fn longest_reflect(&self) -> Self {
        self.with(longest_raw(&self.letters, self.n))
    }

    pub fn is_q_lowest(&self) -> bool {
        is_q_lowest_raw(&self.letters, self.n)
    }

    /// The shape `λ` with `wt = w₀λ` when the word is q-lowest.
    pub fn q_lowest_shape(&self) -> Option<StrictPartition> {
        q_lowest_shape_raw(&self.letters, self.n)
    }

    /// Through the definition: `S_{w₀} w` is q-highest.
    pub fn is_q_lowest_definitional(&self) -> bool {
        self.longest_reflect().is_q_highest()
    }

    pub fn is_q_highest(&self) -> bool {
        (1..self.n).all(|i| e_raw(&self.letters, i).is_none() && bar_raw(&self.letters, i, false).is_none())
    }

    /// Every `f̃_i` is null.
    pub fn is_gl_lowest(&self) -> bool {
        is_gl_lowest_raw(&self.letters, self.n)
    }

    pub fn is_gl_highest(&self) -> bool {
        (1..self.n).all(|i| e_raw(&self.letters, i).is_none())
    }

    /// `ψ_t`: every letter shifted by `t`, rank `n+t`.
    pub fn psi_shift(&self, t: usize) -> Result<Self> {
        CrystalWord::new(self.n + t, self.letters.iter().map(|&x| x + t as u8).collect())
    }

    pub fn concat(&self, other: &CrystalWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut l = self.letters.clone();
        l.extend_from_slice(&other.letters);
        Ok(self.with(l))
    }
}

impl fmt::Display for CrystalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// `"n:letters"`, e.g. `"3:1 2 1 1"`.
impl FromStr for CrystalWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (n, w) = s.split_once(':').ok_or_else(|| Error::Parse(s.to_string()))?;
        let n = n.trim().parse().map_err(|_| Error::Parse(s.to_string()))?;
        CrystalWord::parse(n, w)
    }
}

/// `ψ_t` as a free function.
pub fn psi_shift(w: &CrystalWord, t: usize) -> Result<CrystalWord> {
    w.psi_shift(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    E(usize),
    F(usize),
    EBar(usize),
    FBar(usize),
}

pub fn weight(letters: &[u8], n: usize) -> Vec<usize> {
    let mut wt = vec![0; n];
    for &x in letters {
        wt[x as usize - 1] += 1;
    }
    wt
}

/// Unmatched positions after cancelling `i … i+1` pairs.
struct Signature {
    /// Unmatched `i+1`, left to right.
    plus: Vec<usize>,
    /// Unmatched `i`, left to right.
    minus: Vec<usize>,
}

impl Signature {
    fn phi(&self) -> usize {
        self.minus.len()
    }
    fn eps(&self) -> usize {
        self.plus.len()
    }
}

fn signature(letters: &[u8], i: usize) -> Signature {
    let (a, b) = (i as u8, i as u8 + 1);
    let mut sig = Signature { plus: Vec::new(), minus: Vec::new() };
    for (p, &x) in letters.iter().enumerate() {
        if x == a {
            sig.minus.push(p);
        } else if x == b && sig.minus.pop().is_none() {
            sig.plus.push(p);
        }
    }
    sig
}

pub(crate) fn f_raw(letters: &[u8], i: usize) -> Option<Vec<u8>> {
    let p = *signature(letters, i).minus.first()?;
    let mut out = letters.to_vec();
    out[p] += 1;
    Some(out)
}

pub(crate) fn e_raw(letters: &[u8], i: usize) -> Option<Vec<u8>> {
    let p = *signature(letters, i).plus.last()?;
    let mut out = letters.to_vec();
    out[p] -= 1;
    Some(out)
}

/// Position of the rightmost letter in `{1,2}`.
fn last_12(letters: &[u8]) -> Option<usize> {
    letters.iter().rposition(|&x| x <= 2)
}

pub(crate) fn f1bar_raw(letters: &[u8]) -> Option<Vec<u8>> {
    let p = last_12(letters)?;
    (letters[p] == 1).then(|| {
        let mut out = letters.to_vec();
        out[p] = 2;
        out
    })
}

pub(crate) fn e1bar_raw(letters: &[u8]) -> Option<Vec<u8>> {
    let p = last_12(letters)?;
    (letters[p] == 2).then(|| {
        let mut out = letters.to_vec();
        out[p] = 1;
        out
    })
}

/// `S_{r_i}` in one pass: the unmatched block `(i+1)^ε i^φ` becomes
/// `(i+1)^φ i^ε`.
pub(crate) fn reflect_raw(letters: &[u8], i: usize) -> Vec<u8> {
    let sig = signature(letters, i);
    let mut out = letters.to_vec();
    let phi = sig.phi();
    for (k, &p) in sig.plus.iter().chain(sig.minus.iter()).enumerate() {
        out[p] = if k < phi { i as u8 + 1 } else { i as u8 };
    }
    out
}

fn longest_raw(letters: &[u8], n: usize) -> Vec<u8> {
    let mut w = letters.to_vec();
    for top in (1..n).rev() {
        for i in 1..=top {
            w = reflect_raw(&w, i);
        }
    }
    w
}

/// Application order of reflections realising `S_{w_i}` for the standard
/// `w_i`: bubble `i` down to the first slot, then `i+1` to the second.
pub fn standard_sequence(i: usize) -> Vec<usize> {
    (1..i).rev().chain((2..=i).rev()).collect()
}

/// Adjacent reflections, in application order, that move weight coordinate
/// `k` to position `perm[k-1]`.
pub fn reflection_sequence(perm: &[usize]) -> Vec<usize> {
    let mut arr: Vec<usize> = (1..=perm.len()).collect();
    let mut seq = Vec::new();
    let mut swapped = true;
    while swapped {
        swapped = false;
        for j in 0..arr.len().saturating_sub(1) {
            if perm[arr[j] - 1] > perm[arr[j + 1] - 1] {
                arr.swap(j, j + 1);
                seq.push(j + 1);
                swapped = true;
            }
        }
    }
    seq
}

fn conjugated(letters: &[u8], seq: &[usize], op: fn(&[u8]) -> Option<Vec<u8>>) -> Option<Vec<u8>> {
    let mut w = letters.to_vec();
    for &j in seq {
        w = reflect_raw(&w, j);
    }
    let mut w = op(&w)?;
    for &j in seq.iter().rev() {
        w = reflect_raw(&w, j);
    }
    Some(w)
}

pub(crate) fn bar_raw(letters: &[u8], i: usize, lower: bool) -> Option<Vec<u8>> {
    let op = if lower { f1bar_raw } else { e1bar_raw };
    if i == 1 {
        op(letters)
    } else {
        conjugated(letters, &standard_sequence(i), op)
    }
}

/// Suffix scan: after each letter `u < n` read from the right, the count
/// of `u` must stay below the count of `u+1`.
pub(crate) fn is_q_lowest_raw(letters: &[u8], n: usize) -> bool {
    let mut wt = vec![0usize; n + 1];
    for &u in letters.iter().rev() {
        let u = u as usize;
        wt[u] += 1;
        if u < n && wt[u] >= wt[u + 1] {
            return false;
        }
    }
    true
}

pub(crate) fn q_lowest_shape_raw(letters: &[u8], n: usize) -> Option<StrictPartition> {
    if !is_q_lowest_raw(letters, n) {
        return None;
    }
    let wt = weight(letters, n);
    Some(StrictPartition::new(wt.into_iter().rev().filter(|&x| x > 0).collect()).expect("suffix scan ensures strictness"))
}

pub(crate) fn is_gl_lowest_raw(letters: &[u8], n: usize) -> bool {
    (1..n).all(|i| signature(letters, i).minus.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorSet {
    /// `ẽ_i, f̃_i` for `1 ≤ i < n`.
    Gl,
    /// The gl(n) operators together with `ẽ_1̄, f̃_1̄`.
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    Plain(usize),
    Bar,
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Plain(i) => write!(f, "{i}"),
            EdgeLabel::Bar => f.write_str("1bar"),
        }
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: EdgeLabel,
}

/// Vertices sorted lexicographically; edges point along `f̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub vertices: Vec<CrystalWord>,
    pub edges: Vec<Edge>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            n: usize,
            vertices: Vec<&'a [u8]>,
            edges: &'a [Edge],
        }
        Raw { n: self.n, vertices: self.vertices.iter().map(|v| v.letters()).collect(), edges: &self.edges }
            .serialize(s)
    }
}

impl Graph {
    pub fn index_of(&self, w: &CrystalWord) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    pub fn has_edge(&self, from: &CrystalWord, to: &CrystalWord, label: EdgeLabel) -> bool {
        match (self.index_of(from), self.index_of(to)) {
            (Some(a), Some(b)) => self.edges.iter().any(|e| e.from == a && e.to == b && e.label == label),
            _ => false,
        }
    }
}

type RawOp = fn(&[u8], usize) -> Option<Vec<u8>>;

fn lowering_ops(set: OperatorSet, n: usize) -> Vec<(EdgeLabel, RawOp)> {
    let mut ops: Vec<(EdgeLabel, RawOp)> = (1..n).map(|i| (EdgeLabel::Plain(i), f_raw as RawOp)).collect();
    if set == OperatorSet::Q {
        ops.push((EdgeLabel::Bar, |w, _| f1bar_raw(w)));
    }
    ops
}

fn raising_images(set: OperatorSet, w: &[u8], n: usize) -> Vec<Vec<u8>> {
    let mut out: Vec<Vec<u8>> = (1..n).filter_map(|i| e_raw(w, i)).collect();
    if set == OperatorSet::Q {
        out.extend(e1bar_raw(w));
    }
    out
}

/// Connected component of `w`, explored frontier by frontier. Each frontier
/// is expanded in parallel; the result is sorted, so it does not depend on
/// scheduling.
pub fn component_closure(w: &CrystalWord, set: OperatorSet) -> Graph {
    component_closure_with(par::Execution::default_for_build(), w, set)
}

pub fn component_closure_with(exec: par::Execution, w: &CrystalWord, set: OperatorSet) -> Graph {
    let n = w.n;
    let mut seen: HashSet<Vec<u8>> = HashSet::from([w.letters.clone()]);
    let mut frontier = vec![w.letters.clone()];
    let mut raw_edges: Vec<(Vec<u8>, Vec<u8>, EdgeLabel)> = Vec::new();
    while !frontier.is_empty() {
        let expanded = par::map_with(exec, &frontier, |v| {
            let down: Vec<(EdgeLabel, Vec<u8>)> =
                lowering_ops(set, n).into_iter().filter_map(|(l, op)| op(v, l_index(l)).map(|t| (l, t))).collect();
            (down, raising_images(set, v, n))
        });
        let mut next = Vec::new();
        for (v, (down, up)) in frontier.iter().zip(expanded) {
            for (l, t) in down {
                if seen.insert(t.clone()) {
                    next.push(t.clone());
                }
                raw_edges.push((v.clone(), t, l));
            }
            for t in up {
                if seen.insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    let mut vertices: Vec<CrystalWord> = seen.into_iter().map(|l| CrystalWord { n, letters: l }).collect();
    vertices.sort();
    let idx = |l: Vec<u8>| vertices.binary_search(&CrystalWord { n, letters: l }).expect("edge endpoint is a vertex");
    let mut edges: Vec<Edge> =
        raw_edges.into_iter().map(|(a, b, label)| Edge { from: idx(a), to: idx(b), label }).collect();
    edges.sort_by_key(|e| (e.from, e.label, e.to));
    Graph { n, vertices, edges }
}

fn l_index(l: EdgeLabel) -> usize {
    match l {
        EdgeLabel::Plain(i) => i,
        EdgeLabel::Bar => 1,
    }
}

/// Checks that `words` is closed under every q(n) operator.
pub fn check_closed(words: &[CrystalWord]) -> Result<()> {
    let Some(first) = words.first() else { return Ok(()) };
    let n = first.n;
    if let Some(w) = words.iter().find(|w| w.n != n) {
        return Err(Error::RankMismatch(n, w.n));
    }
    let set: HashSet<&[u8]> = words.iter().map(|w| w.letters.as_slice()).collect();
    if set.len() != words.len() {
        return Err(Error::Precondition("word list contains duplicates".into()));
    }
    let bad = par::map(words, |w| {
        let mut images: Vec<(String, Option<Vec<u8>>)> = Vec::new();
        for i in 1..n {
            images.push((format!("f{i}"), f_raw(&w.letters, i)));
            images.push((format!("e{i}"), e_raw(&w.letters, i)));
        }
        images.push(("f1bar".into(), f1bar_raw(&w.letters)));
        images.push(("e1bar".into(), e1bar_raw(&w.letters)));
        images
            .into_iter()
            .find(|(_, img)| img.as_ref().is_some_and(|x| !set.contains(x.as_slice())))
            .map(|(name, _)| format!("{name} sends {w} outside the set"))
    });
    match bad.into_iter().flatten().next() {
        Some(msg) => Err(Error::NotClosed(msg)),
        None => Ok(()),
    }
}

/// The q(n)-crystal graph on a closed set of words.
pub fn graph_of(words: &[CrystalWord]) -> Result<Graph> {
    check_closed(words)?;
    let n = words.first().map_or(1, |w| w.n);
    let mut vertices = words.to_vec();
    vertices.sort();
    let edges = par::flat_map(&vertices, |v| {
        lowering_ops(OperatorSet::Q, n)
            .into_iter()
            .filter_map(|(label, op)| op(&v.letters, l_index(label)).map(|t| (v.clone(), t, label)))
            .collect::<Vec<_>>()
    });
    let idx = |w: &CrystalWord| vertices.binary_search(w).expect("closed set");
    let mut edges: Vec<Edge> = edges
        .into_iter()
        .map(|(v, t, label)| Edge { from: idx(&v), to: idx(&CrystalWord { n, letters: t }), label })
        .collect();
    edges.sort_by_key(|e| (e.from, e.label, e.to));
    Ok(Graph { n, vertices, edges })
}

/// Highest weights of the connected components, read off the q-lowest
/// elements via the suffix criterion. The set must be closed.
pub fn decompose(words: &[CrystalWord]) -> Result<BTreeMap<StrictPartition, usize>> {
    check_closed(words)?;
    let shapes = par::map(words, CrystalWord::q_lowest_shape);
    let mut out = BTreeMap::new();
    for s in shapes.into_iter().flatten() {
        *out.entry(s).or_insert(0) += 1;
    }
    Ok(out)
}

/// Deterministic DOT text with vertices labeled by their words.
pub fn export_dot(g: &Graph) -> String {
    export_dot_with(g, |w| w.to_string())
}

pub fn export_dot_with(g: &Graph, label: impl Fn(&CrystalWord) -> String) -> String {
    let esc = |s: String| s.replace('\\', "\\\\").replace('"', "\\\"");
    let mut out = String::from("digraph crystal {\n  node [shape=box];\n");
    for (k, v) in g.vertices.iter().enumerate() {
        out.push_str(&format!("  v{k} [label=\"{}\"];\n", esc(label(v))));
    }
    for e in &g.edges {
        let style = if e.label == EdgeLabel::Bar { ", style=dashed" } else { "" };
        out.push_str(&format!("  v{} -> v{} [label=\"{}\"{style}];\n", e.from, e.to, e.label));
    }
    out.push_str("}\n");
    out
}

/// The tensor product rule applied literally, splitting off the first
/// letter at each step. Quadratic; used only to check the bracketing code.
pub mod tensor_rule {
    fn phi_eps(w: &[u8], i: u8) -> (usize, usize) {
        match w {
            [] => (0, 0),
            [x] => ((*x == i) as usize, (*x == i + 1) as usize),
            [x, rest @ ..] => {
                let (p1, e1) = phi_eps(std::slice::from_ref(x), i);
                let (p2, e2) = phi_eps(rest, i);
                (p2 + p1.saturating_sub(e2), e1 + e2.saturating_sub(p1))
            }
        }
    }

    pub fn f(w: &[u8], i: usize) -> Option<Vec<u8>> {
        let i = i as u8;
        let (first, rest) = w.split_first()?;
        let (p1, _) = phi_eps(&[*first], i);
        let (_, e2) = phi_eps(rest, i);
        if p1 > e2 {
            let mut out = w.to_vec();
            out[0] = i + 1;
            Some(out)
        } else {
            let tail = f(rest, i as usize)?;
            Some(std::iter::once(*first).chain(tail).collect())
        }
    }

    pub fn e(w: &[u8], i: usize) -> Option<Vec<u8>> {
        let i = i as u8;
        let (first, rest) = w.split_first()?;
        let (p1, e1) = phi_eps(&[*first], i);
        let (_, e2) = phi_eps(rest, i);
        if p1 >= e2 {
            (e1 == 1).then(|| std::iter::once(i).chain(rest.iter().copied()).collect())
        } else {
            let tail = e(rest, i as usize)?;
            Some(std::iter::once(*first).chain(tail).collect())
        }
    }

    fn bar(w: &[u8], from: u8, to: u8) -> Option<Vec<u8>> {
        let (first, rest) = w.split_first()?;
        if rest.iter().all(|&x| x > 2) {
            (*first == from).then(|| std::iter::once(to).chain(rest.iter().copied()).collect())
        } else {
            let tail = bar(rest, from, to)?;
            Some(std::iter::once(*first).chain(tail).collect())
        }
    }

    pub fn f_1bar(w: &[u8]) -> Option<Vec<u8>> {
        bar(w, 1, 2)
    }

    pub fn e_1bar(w: &[u8]) -> Option<Vec<u8>> {
        bar(w, 2, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ssdt::{enumerate_straight, highest_tableau, lowest_tableau};

    fn w(n: usize, s: &str) -> CrystalWord {
        CrystalWord::parse(n, s).unwrap()
    }

    #[test]
    fn operators_on_small_words() {
        let x = w(3, "1 2 1 1");
        assert_eq!(x.weight(), vec![3, 1, 0]);
        assert_eq!(x.f(1).unwrap(), Some(w(3, "1 2 2 1")));
        assert_eq!(x.f(2).unwrap(), Some(w(3, "1 3 1 1")));
        assert_eq!(x.f_1bar(), Some(w(3, "1 2 1 2")));
        assert_eq!(w(3, "2").f(1).unwrap(), None);
        assert_eq!(w(3, "1 3").f_1bar(), Some(w(3, "2 3")));
        assert_eq!(w(3, "3 2").f_1bar(), None);
        assert_eq!(w(3, "").weight(), vec![0, 0, 0]);
        assert!(x.f(3).is_err());
        assert!(x.f(0).is_err());
    }

    #[test]
    fn reflections() {
        assert_eq!(w(2, "1").weyl_reflect(1).unwrap(), w(2, "2"));
        let r = w(3, "2 3 3 3").weyl_reflect(2).unwrap();
        assert_eq!(r.weight(), vec![0, 3, 1]);
        let mut by_ops = w(3, "2 3 3 3");
        for _ in 0..2 {
            by_ops = by_ops.e(2).unwrap().unwrap();
        }
        assert_eq!(r, by_ops);
    }

    #[test]
    fn lowest_and_highest() {
        assert!(w(3, "2 3 3 3").is_q_lowest());
        assert!(!w(2, "1").is_q_lowest());
        assert!(w(4, "2 4 3 3 4 4 4 4").is_q_lowest());
        assert!(w(3, "1 2 1 1").is_q_highest());
        assert!(!w(3, "2").is_q_highest());
        assert_eq!(w(3, "2 3 3 3").q_lowest_shape(), Some("3,1".parse().unwrap()));
    }

    #[test]
    fn bar_operator_ignores_words_without_i_and_next() {
        let x = w(4, "1 4 1 4");
        assert_eq!(x.f_ibar(2).unwrap(), None);
        assert_eq!(x.e_ibar(2).unwrap(), None);
        assert!(x.f_ibar(4).is_err());
    }

    #[test]
    fn sequences_move_the_right_coordinates() {
        assert_eq!(standard_sequence(1), Vec::<usize>::new());
        assert_eq!(standard_sequence(3), vec![2, 1, 3, 2]);
        let seq = reflection_sequence(&[3, 1, 2, 4]);
        let mut arr = vec![1, 2, 3, 4];
        for j in seq {
            arr.swap(j - 1, j);
        }
        assert_eq!(arr, vec![2, 3, 1, 4]);
    }

    #[test]
    fn rank_three_component_has_one_top_and_one_bottom() {
        let lambda: StrictPartition = "3,1".parse().unwrap();
        let top = CrystalWord::from_ssdt(&highest_tableau(&lambda, 3).unwrap(), 3).unwrap();
        let g = component_closure(&top, OperatorSet::Q);
        assert_eq!(g.vertices.len(), 24);
        assert_eq!(g.edges.len(), 38);
        let expected: Vec<CrystalWord> =
            enumerate_straight(&lambda, 3).iter().map(|t| CrystalWord::from_ssdt(t, 3).unwrap()).collect();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(g.vertices, expected_sorted);
        let lows: Vec<_> = g.vertices.iter().filter(|v| v.is_q_lowest()).collect();
        assert_eq!(lows, vec![&CrystalWord::from_ssdt(&lowest_tableau(&lambda, 3).unwrap(), 3).unwrap()]);
        assert_eq!(g.vertices.iter().filter(|v| v.is_q_highest()).count(), 1);
        assert_eq!(decompose(&expected).unwrap(), BTreeMap::from([(lambda, 1)]));
    }

    #[test]
    fn gl_chain() {
        let g = component_closure(&w(3, "1"), OperatorSet::Gl);
        assert_eq!(g.vertices.len(), 3);
        assert_eq!(g.edges.len(), 2);
    }

    #[test]
    fn dot_is_deterministic() {
        let g = component_closure(&w(2, "1"), OperatorSet::Q);
        let dot = export_dot(&g);
        assert_eq!(dot, export_dot(&g));
        assert!(dot.contains("v0 -> v1 [label=\"1\"];"));
        assert!(dot.contains("v0 -> v1 [label=\"1bar\", style=dashed];"));
        let single = Graph { n: 2, vertices: vec![w(2, "1 2")], edges: vec![] };
        assert!(!export_dot(&single).contains("->"));
    }

    #[test]
    fn decompose_rejects_open_sets() {
        assert!(matches!(decompose(&[w(2, "1")]), Err(Error::NotClosed(_))));
        let prod = [w(2, "1 1"), w(2, "1 2"), w(2, "2 1"), w(2, "2 2")];
        let d = decompose(&prod).unwrap();
        // P₁² = P₂: all four words lie in one component.
        assert_eq!(d, BTreeMap::from([("2".parse().unwrap(), 1)]));
    }

    #[test]
    fn psi() {
        assert_eq!(w(2, "1 2").psi_shift(1).unwrap(), w(3, "2 3"));
        assert_eq!(w(2, "1 2").psi_shift(0).unwrap(), w(2, "1 2"));
    }

    #[test]
    fn json_forms() {
        let x = w(3, "1 2");
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"{"n":3,"letters":[1,2]}"#);
        assert!(serde_json::from_str::<CrystalWord>(r#"{"n":2,"letters":[3]}"#).is_err());
        let g = component_closure(&w(2, "1"), OperatorSet::Q);
        let j = serde_json::to_string(&g).unwrap();
        assert!(j.contains(r#""label":"1bar""#));
    }
}
