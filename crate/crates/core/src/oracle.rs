//! Explicit symmetric polynomials in finitely many variables, used as
//! ground truth for every coefficient family.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape, StrictPartition};
use crate::ssdt::for_each_ssdt;
use crate::tableaux::{enumerate_semistandard, Alphabet};

/// Exact polynomial in `x₁ … x_n`; no zero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn zero(n: usize) -> Self {
        SparsePoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], BigInt::one())
    }

    pub fn monomial(exp: Vec<u32>, coef: BigInt) -> Self {
        let mut p = SparsePoly::zero(exp.len());
        p.add_term(exp, coef);
        p
    }

    /// `Σ x^c` over a stream of exponent vectors.
    pub fn from_exponents<I: IntoIterator<Item = Vec<u32>>>(n: usize, exps: I) -> Self {
        let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
        for e in exps {
            *counts.entry(e).or_insert(0) += 1;
        }
        SparsePoly { n, terms: counts.into_iter().map(|(e, c)| (e, BigInt::from(c))).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    /// Lexicographically greatest exponent with its coefficient.
    pub fn leading(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Sum of all coefficients, i.e. the value at `(1, …, 1)`.
    pub fn mass(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coef: BigInt) {
        assert_eq!(exp.len(), self.n, "exponent length must equal the variable count");
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coef;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    fn check_rank(&self, other: &SparsePoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// `self + c·other`.
    pub fn add_scaled(&mut self, other: &SparsePoly, c: &BigInt) -> Result<()> {
        self.check_rank(other)?;
        for (e, k) in &other.terms {
            let slot = self.terms.entry(e.clone()).or_default();
            *slot += k * c;
        }
        self.terms.retain(|_, c| !c.is_zero());
        Ok(())
    }

    pub fn multiply(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_rank(other)?;
        let mut out: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *out.entry(e).or_default() += x * y;
            }
        }
        Ok(SparsePoly { n: self.n, terms: out.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// A monomial whose adjacent transposition has a different coefficient.
    pub fn asymmetry_witness(&self) -> Option<Vec<u32>> {
        for (e, c) in &self.terms {
            for i in 0..self.n.saturating_sub(1) {
                if e[i] == e[i + 1] {
                    continue;
                }
                let mut s = e.clone();
                s.swap(i, i + 1);
                if self.terms.get(&s) != Some(c) {
                    return Some(e.clone());
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry_witness().is_none()
    }
}

/// Free-function form of [`SparsePoly::multiply`].
pub fn multiply(p: &SparsePoly, q: &SparsePoly) -> Result<SparsePoly> {
    p.multiply(q)
}

pub fn is_symmetric(p: &SparsePoly) -> bool {
    p.is_symmetric()
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    exp: Vec<u32>,
    coef: RawCoef,
}

/// Small coefficients are plain JSON numbers, large ones decimal strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawCoef {
    Small(i64),
    Big(String),
}

impl Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let raw: Vec<RawTerm> = self
            .terms
            .iter()
            .map(|(e, c)| RawTerm {
                exp: e.clone(),
                coef: i64::try_from(c).map(RawCoef::Small).unwrap_or_else(|_| RawCoef::Big(c.to_string())),
            })
            .collect();
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = Vec::<RawTerm>::deserialize(d)?;
        let n = raw.first().map_or(0, |t| t.exp.len());
        let mut p = SparsePoly::zero(n);
        for t in raw {
            if t.exp.len() != n {
                return Err(D::Error::custom("exponent vectors differ in length"));
            }
            let c = match t.coef {
                RawCoef::Small(k) => BigInt::from(k),
                RawCoef::Big(s) => s.parse().map_err(D::Error::custom)?,
            };
            p.add_term(t.exp, c);
        }
        Ok(p)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    SchurP,
    Schur,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum CacheKey {
    SchurP(Vec<usize>, usize),
    Schur(Vec<usize>, usize),
}

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<SparsePoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<SparsePoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(key: CacheKey, build: impl FnOnce() -> Result<SparsePoly>) -> Result<Arc<SparsePoly>> {
    if let Some(p) = cache().lock().expect("oracle cache poisoned").get(&key) {
        return Ok(p.clone());
    }
    let p = Arc::new(build()?);
    cache().lock().expect("oracle cache poisoned").insert(key, p.clone());
    Ok(p)
}

fn exponent_of_rows(rows: &[&[u32]], n: usize) -> Vec<u32> {
    let mut e = vec![0u32; n];
    for &x in rows.iter().flat_map(|r| r.iter()) {
        e[x as usize - 1] += 1;
    }
    e
}

/// `Σ x^T` over skew decomposition tableaux with entries `≤ n`.
pub fn skew_ssdt_char(shape: &SkewShape, n: usize) -> Result<SparsePoly> {
    let mut exps = Vec::new();
    for_each_ssdt(shape, n as u32, |rows| exps.push(exponent_of_rows(rows, n)))?;
    Ok(SparsePoly::from_exponents(n, exps))
}

/// `P_λ(x₁,…,x_n)` from decomposition tableaux, cross-checked against the
/// shifted primed-tableau model with an unprimed main diagonal.
pub fn schur_p_poly(lambda: &StrictPartition, n: usize) -> Result<Arc<SparsePoly>> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!("length of {lambda} exceeds n = {n}")));
    }
    cached(CacheKey::SchurP(lambda.parts().to_vec(), n), || {
        let shape = SkewShape::shifted_straight(lambda);
        let from_ssdt = skew_ssdt_char(&shape, n)?;
        let from_primed = SparsePoly::from_exponents(
            n,
            enumerate_semistandard(&shape, n as u32, None, Alphabet::Both)
                .filter(|t| (1..=lambda.len()).all(|r| !t.at(r, r).is_some_and(|l| l.primed)))
                .map(|t| t.content().iter().map(|&c| c as u32).chain(std::iter::repeat(0)).take(n).collect()),
        );
        if from_ssdt != from_primed {
            return Err(Error::ModelMismatch(format!("two models of P_{lambda} in {n} variables differ")));
        }
        Ok(from_ssdt)
    })
}

/// `s_{λ/μ}(x₁,…,x_n)` from semistandard Young tableaux.
pub fn skew_schur_poly(shape: &SkewShape, n: usize) -> Result<SparsePoly> {
    if shape.is_shifted() {
        return Err(Error::Precondition("expected an unshifted shape".into()));
    }
    Ok(SparsePoly::from_exponents(
        n,
        enumerate_semistandard(shape, n as u32, None, Alphabet::Unprimed)
            .map(|t| t.content().iter().map(|&c| c as u32).chain(std::iter::repeat(0)).take(n).collect()),
    ))
}

/// `Q_{λ/μ}(x₁ … x_n)`: marked shifted tableaux, primes allowed on the diagonal.
pub fn skew_schur_q_poly(shape: &SkewShape, n: usize) -> Result<SparsePoly> {
    if !shape.is_shifted() {
        return Err(Error::Precondition("expected a shifted shape".into()));
    }
    Ok(SparsePoly::from_exponents(
        n,
        enumerate_semistandard(shape, n as u32, None, Alphabet::Both)
            .map(|t| t.content().iter().map(|&c| c as u32).chain(std::iter::repeat(0)).take(n).collect()),
    ))
}

pub fn schur_poly(mu: &Partition, n: usize) -> Result<Arc<SparsePoly>> {
    if mu.len() > n {
        return Ok(Arc::new(SparsePoly::zero(n)));
    }
    cached(CacheKey::Schur(mu.parts().to_vec(), n), || skew_schur_poly(&SkewShape::unshifted_straight(mu), n))
}

/// Greedy triangular expansion: peel off the lexicographically leading
/// monomial, read it as a partition, subtract the matching basis element.
pub fn expand_in_basis(p: &SparsePoly, basis: Basis) -> Result<BTreeMap<Partition, BigInt>> {
    if let Some(m) = p.asymmetry_witness() {
        return Err(Error::NotSymmetric(m));
    }
    let n = p.n();
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((exp, coef)) = rest.leading() {
        let (exp, coef) = (exp.clone(), coef.clone());
        let parts: Vec<usize> = exp.iter().map(|&x| x as usize).collect();
        let part = Partition::new(parts).map_err(|_| Error::InvalidLeading(exp.clone()))?;
        let b = match basis {
            Basis::SchurP => {
                let sp = StrictPartition::try_from(part.clone()).map_err(|_| Error::InvalidLeading(exp.clone()))?;
                schur_p_poly(&sp, n)?
            }
            Basis::Schur => schur_poly(&part, n)?,
        };
        match b.leading() {
            Some((e, c)) if *e == exp && c.is_one() => {}
            _ => return Err(Error::ModelMismatch(format!("basis element {part} is not unitriangular"))),
        }
        rest.add_scaled(&b, &-&coef)?;
        out.insert(part, coef);
    }
    Ok(out)
}

/// `Σ c_λ·basis_λ`; used to round-trip expansions.
pub fn combine(coeffs: &BTreeMap<Partition, BigInt>, basis: Basis, n: usize) -> Result<SparsePoly> {
    let mut p = SparsePoly::zero(n);
    for (part, c) in coeffs {
        let b = match basis {
            Basis::SchurP => schur_p_poly(&StrictPartition::try_from(part.clone())?, n)?,
            Basis::Schur => schur_poly(part, n)?,
        };
        p.add_scaled(&b, c)?;
    }
    Ok(p)
}

/// Converts an expansion to non-negative machine integers.
pub fn to_counts(coeffs: &BTreeMap<Partition, BigInt>) -> Result<BTreeMap<Partition, u64>> {
    coeffs
        .iter()
        .map(|(k, c)| {
            if c.is_negative() {
                return Err(Error::ModelMismatch(format!("negative coefficient {c} at {k}")));
            }
            u64::try_from(c).map(|v| (k.clone(), v)).map_err(|_| Error::ModelMismatch(format!("coefficient {c} too large")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(n: usize, i: usize) -> SparsePoly {
        let mut e = vec![0; n];
        e[i] = 1;
        SparsePoly::monomial(e, BigInt::one())
    }

    #[test]
    fn small_p_functions() {
        let mut lin = x(2, 0);
        lin.add_scaled(&x(2, 1), &BigInt::one()).unwrap();
        assert_eq!(*schur_p_poly(&sp("1"), 2).unwrap(), lin);
        let p2 = schur_p_poly(&sp("2"), 2).unwrap();
        assert_eq!(p2.coefficient(&[1, 1]), BigInt::from(2));
        assert_eq!(p2.mass(), BigInt::from(4));
        assert_eq!(schur_p_poly(&sp("3,1"), 3).unwrap().mass(), BigInt::from(24));
        assert!(schur_p_poly(&sp("3,2,1"), 2).is_err());
    }

    #[test]
    fn p_function_of_three_one_in_schur_basis() {
        let e = expand_in_basis(&schur_p_poly(&sp("3,1"), 4).unwrap(), Basis::Schur).unwrap();
        let want: BTreeMap<Partition, BigInt> =
            [("3,1", 1), ("2,2", 1), ("2,1,1", 1)].iter().map(|(k, v)| (p(k), BigInt::from(*v))).collect();
        assert_eq!(e, want);
    }

    #[test]
    fn products_and_symmetry() {
        let p1 = schur_p_poly(&sp("1"), 2).unwrap();
        let sq = p1.multiply(&p1).unwrap();
        assert_eq!(sq, *schur_p_poly(&sp("2"), 2).unwrap());
        assert_eq!(p1.multiply(&SparsePoly::one(2)).unwrap(), *p1);
        assert!(!x(2, 0).is_symmetric());
        assert!(matches!(expand_in_basis(&x(2, 0), Basis::Schur), Err(Error::NotSymmetric(_))));
        assert!(p1.multiply(&SparsePoly::one(3)).is_err());
    }

    #[test]
    fn schur_expands_to_itself() {
        let s = schur_poly(&p("2,1"), 3).unwrap();
        let e = expand_in_basis(&s, Basis::Schur).unwrap();
        assert_eq!(e, BTreeMap::from([(p("2,1"), BigInt::one())]));
        // s_{(1,1)} has non-strict leading exponent.
        let s11 = schur_poly(&p("1,1"), 2).unwrap();
        assert!(matches!(expand_in_basis(&s11, Basis::SchurP), Err(Error::InvalidLeading(_))));
    }

    #[test]
    fn json_round_trip() {
        let q = schur_p_poly(&sp("2"), 2).unwrap();
        let j = serde_json::to_string(&*q).unwrap();
        assert!(j.starts_with(r#"[{"exp":[0,2],"coef":1}"#));
        assert_eq!(serde_json::from_str::<SparsePoly>(&j).unwrap(), *q);
    }
}
