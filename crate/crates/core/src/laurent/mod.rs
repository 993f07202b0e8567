//! Sparse multivariate Laurent polynomials in `x_1..x_n` over `Z[q, q^-1]`.

mod symmetric;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qring::QLaurentPoly;

pub use symmetric::{h_lambda, h_r_of_alphabet, h_up_to};

/// Exponents of `x_1..x_n`, negative entries allowed.
///
/// Ordered graded-lexicographically: total degree first, then the
/// exponent sequence lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn new(exps: Vec<i32>) -> Self {
        Self(exps)
    }

    pub fn zero(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// `x_num / x_den`.
    pub fn ratio(nvars: usize, num: usize, den: usize) -> Self {
        let mut e = vec![0; nvars];
        e[num] += 1;
        e[den] -= 1;
        Self(e)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn scaled(&self, k: i32) -> Self {
        Self(self.0.iter().map(|&e| e * k).collect())
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<i32>> for ExponentVector {
    fn from(v: Vec<i32>) -> Self {
        Self(v)
    }
}

/// A Laurent polynomial in `nvars` variables with [`QLaurentPoly`]
/// coefficients. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<ExponentVector, QLaurentPoly>,
}

/// Below this many coefficient products a multiplication stays sequential.
#[cfg(feature = "parallel")]
const PAR_MUL_THRESHOLD: usize = 4096;

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, QLaurentPoly::one())
    }

    pub fn constant(nvars: usize, c: QLaurentPoly) -> Self {
        Self::term(ExponentVector::zero(nvars), c)
    }

    /// A single term `c * x^e`.
    pub fn term(e: ExponentVector, c: QLaurentPoly) -> Self {
        let mut out = Self::zero(e.len());
        if !c.is_zero() {
            out.terms.insert(e, c);
        }
        out
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (ExponentVector, QLaurentPoly)>,
    ) -> Result<Self> {
        let mut acc: HashMap<ExponentVector, QLaurentPoly> = HashMap::new();
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            *acc.entry(e).or_default() += &c;
        }
        Ok(Self::collect(nvars, acc))
    }

    fn collect(nvars: usize, acc: HashMap<ExponentVector, QLaurentPoly>) -> Self {
        Self {
            nvars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &QLaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, e: &ExponentVector) -> QLaurentPoly {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> QLaurentPoly {
        self.coefficient_of(&ExponentVector::zero(self.nvars))
    }

    /// Smallest exponent of variable `var` over all terms (`None` if zero).
    pub fn min_exponent_of(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|e| e.0[var]).min()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    fn add_term(&mut self, e: ExponentVector, c: &QLaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QLaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiplies by the monomial `q^qshift * x^e`.
    pub fn mul_monomial(&self, e: &ExponentVector, qshift: i64) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.add(e), c.shift(qshift)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        #[cfg(feature = "parallel")]
        if self.len() * other.len() >= PAR_MUL_THRESHOLD {
            return Ok(self.mul_parallel(other));
        }
        Ok(Self::collect(self.nvars, self.mul_partial(self.terms.iter(), other)))
    }

    fn mul_partial<'a>(
        &self,
        lhs: impl Iterator<Item = (&'a ExponentVector, &'a QLaurentPoly)>,
        other: &Self,
    ) -> HashMap<ExponentVector, QLaurentPoly> {
        let mut acc: HashMap<ExponentVector, QLaurentPoly> = HashMap::new();
        for (e1, c1) in lhs {
            for (e2, c2) in &other.terms {
                *acc.entry(e1.add(e2)).or_default() += &(c1 * c2);
            }
        }
        acc
    }

    /// Outer loop split across the rayon pool; coefficient addition is exact
    /// and commutative, so the merged map does not depend on scheduling.
    #[cfg(feature = "parallel")]
    fn mul_parallel(&self, other: &Self) -> Self {
        use rayon::prelude::*;
        let lhs: Vec<_> = self.terms.iter().collect();
        let chunk = lhs.len().div_ceil(rayon::current_num_threads().max(1) * 4).max(1);
        let acc = lhs
            .par_chunks(chunk)
            .map(|part| self.mul_partial(part.iter().copied(), other))
            .reduce(HashMap::new, |mut a, b| {
                for (e, c) in b {
                    *a.entry(e).or_default() += &c;
                }
                a
            });
        Self::collect(self.nvars, acc)
    }

    /// Coefficient of `x^e` in `self * other` without forming the full
    /// product.
    pub fn coefficient_of_product(&self, other: &Self, e: &ExponentVector) -> Result<QLaurentPoly> {
        self.check(other)?;
        let mut acc = QLaurentPoly::zero();
        for (e1, c1) in &self.terms {
            if let Some(c2) = other.terms.get(&e.sub(e1)) {
                acc += &(c1 * c2);
            }
        }
        Ok(acc)
    }

    /// Appends `extra` variables that do not occur.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let nvars = self.nvars + extra;
        Self {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.0.clone();
                    v.resize(nvars, 0);
                    (ExponentVector(v), c.clone())
                })
                .collect(),
        }
    }

    /// Re-embeds into `nvars` variables, sending variable `k` to `map[k]`.
    pub fn relabel(&self, nvars: usize, map: &[usize]) -> Self {
        Self {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = vec![0; nvars];
                    for (k, &x) in e.0.iter().enumerate() {
                        v[map[k]] += x;
                    }
                    (ExponentVector(v), c.clone())
                })
                .collect(),
        }
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(QLaurentPoly::has_nonnegative_coeffs)
    }
}

/// `(q^qshift * x^base; q)_k`, expanded.
pub fn pochhammer(base: &ExponentVector, qshift: i64, k: u32) -> MultiLaurent {
    // Expand as a univariate polynomial in t = x^base first.
    let mut coeffs: Vec<QLaurentPoly> = vec![QLaurentPoly::one()];
    for i in 0..k {
        let factor = QLaurentPoly::monomial(-1, qshift + i as i64);
        let mut next = vec![QLaurentPoly::zero(); coeffs.len() + 1];
        for (m, c) in coeffs.iter().enumerate() {
            next[m] += c;
            next[m + 1] += &(c * &factor);
        }
        coeffs = next;
    }
    let nvars = base.len();
    let mut out = MultiLaurent::zero(nvars);
    for (m, c) in coeffs.into_iter().enumerate() {
        out.add_term(base.scaled(m as i32), &c);
    }
    out
}

/// `(q^qshift * x_num / x_den; q)_k` in `nvars` variables.
pub fn pochhammer_factor(nvars: usize, num_var: usize, den_var: usize, qshift: i64, k: u32) -> Result<MultiLaurent> {
    if num_var == den_var {
        return Err(Error::invalid("pochhammer factor needs two distinct variables"));
    }
    if num_var >= nvars || den_var >= nvars {
        return Err(Error::invalid("variable index out of range"));
    }
    Ok(pochhammer(&ExponentVector::ratio(nvars, num_var, den_var), qshift, k))
}

/// The q-Dyson kernel `prod_{i<j} (x_i/x_j)_{a_i} (q x_j/x_i)_{a_j}` placed in
/// `nvars >= a.len()` variables (the first `a.len()` slots are used).
pub fn dyson_kernel_in(a: &[u32], nvars: usize) -> MultiLaurent {
    let n = a.len();
    let mut acc = MultiLaurent::one(nvars);
    for i in 0..n {
        for j in (i + 1)..n {
            let f1 = pochhammer(&ExponentVector::ratio(nvars, i, j), 0, a[i]);
            let f2 = pochhammer(&ExponentVector::ratio(nvars, j, i), 1, a[j]);
            acc = acc.mul(&f1).expect("same ring");
            acc = acc.mul(&f2).expect("same ring");
        }
    }
    acc
}

/// The fully expanded q-Dyson kernel for `a`; `1` when `a` has one part.
pub fn dyson_product(a: &[u32]) -> MultiLaurent {
    dyson_kernel_in(a, a.len())
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(v, &x)| match x {
                    1 => format!("x{}", v + 1),
                    x => format!("x{}^{}", v + 1, x),
                })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermJson<'a> {
    exps: &'a [i32],
    coeff: &'a QLaurentPoly,
}

impl Serialize for MultiLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&TermJson { exps: &e.0, coeff: c })?;
        }
        seq.end()
    }
}
