//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Z[q, q^-1]`.
///
/// Storage is dense with an exponent offset: `coeffs[i]` is the coefficient
/// of `q^(min_exp + i)`. The first and last stored coefficients are non-zero,
/// and zero is the empty vector with `min_exp == 0`, so derived equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QLaurentPoly {
    min_exp: i64,
    coeffs: Vec<BigInt>,
}

impl QLaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds a polynomial from dense coefficients starting at `q^min_exp`,
    /// trimming zeros at both ends.
    pub fn from_coeffs(min_exp: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self {
            min_exp: min_exp + lead as i64,
            coeffs,
        }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_i64s(min_exp: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(min_exp, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min_exp == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Highest exponent present, `None` for zero.
    pub fn max_exp(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min_exp;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Non-zero `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.shift_in_place(k);
        out
    }

    pub fn shift_in_place(&mut self, k: i64) {
        if !self.is_zero() {
            self.min_exp += k;
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn sum_coeffs(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// True when every coefficient is `>= 0`.
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Integer gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides all coefficients by their content and makes the leading
    /// coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    /// Exact quotient in `Z[q, q^-1]`, or `None` when `divisor` does not
    /// divide `self` there.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem_laurent(divisor)?;
        r.is_zero().then_some(q)
    }

    /// Long division aligned at the bottom exponents, so that `q` acts as a
    /// unit. Returns `None` on a zero divisor. When a leading coefficient
    /// fails to divide, the division stops and the partial remainder is
    /// returned with the partial quotient.
    pub fn div_rem_laurent(&self, divisor: &Self) -> Option<(Self, Self)> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some((Self::zero(), Self::zero()));
        }
        let d = &divisor.coeffs;
        let dl = d.len();
        let d_lead = &d[dl - 1];
        let mut rem = self.coeffs.clone();
        if rem.len() < dl {
            return Some((Self::zero(), self.clone()));
        }
        let qlen = rem.len() - dl + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for k in (0..qlen).rev() {
            let top = &rem[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(d_lead);
            if !r.is_zero() {
                let partial_q = Self::from_coeffs(self.min_exp - divisor.min_exp, quot);
                let partial_r = Self::from_coeffs(self.min_exp, rem);
                return Some((partial_q, partial_r));
            }
            for (i, dc) in d.iter().enumerate() {
                rem[k + i] -= &qc * dc;
            }
            quot[k] = qc;
        }
        Some((
            Self::from_coeffs(self.min_exp - divisor.min_exp, quot),
            Self::from_coeffs(self.min_exp, rem),
        ))
    }

    /// Strips the `q`-power so the lowest exponent is zero.
    pub(crate) fn strip_q_power(&self) -> (Self, i64) {
        if self.is_zero() {
            return (Self::zero(), 0);
        }
        (
            Self {
                min_exp: 0,
                coeffs: self.coeffs.clone(),
            },
            self.min_exp,
        )
    }

    /// Pseudo-remainder of `self` by `divisor`, both taken as elements of
    /// `Z[q]` after stripping `q`-powers.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d = &divisor.coeffs;
        let dl = d.len();
        let d_lead = &d[dl - 1];
        let mut rem = self.coeffs.clone();
        while rem.len() >= dl && !rem.is_empty() {
            let top = rem.last().cloned().unwrap();
            let off = rem.len() - dl;
            for c in rem.iter_mut() {
                *c *= d_lead;
            }
            for (i, dc) in d.iter().enumerate() {
                rem[off + i] -= &top * dc;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Self::from_coeffs(0, rem)
    }

    /// Greatest common divisor in `Z[q, q^-1]`, normalised to a polynomial
    /// with zero lowest exponent and positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (a, _) = self.strip_q_power();
        let (b, _) = other.strip_q_power();
        if a.is_zero() {
            return b.primitive_part().scale(&b.content());
        }
        if b.is_zero() {
            return a.primitive_part().scale(&a.content());
        }
        let content = a.content().gcd(&b.content());
        let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
        if x.coeffs.len() < y.coeffs.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_zero() {
            let r = x.pseudo_rem(&y).strip_q_power().0;
            x = y;
            y = r.primitive_part();
        }
        x.strip_q_power().0.primitive_part().scale(&content)
    }

    /// Evaluates at an integer point when no negative powers are present.
    pub fn eval_at(&self, q: &BigInt) -> Option<BigInt> {
        if self.min_exp < 0 && !self.is_zero() {
            return None;
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        let base: BigInt = num_traits::pow(q.clone(), self.min_exp as usize);
        Some(acc * base)
    }
}

fn add_into(dst: &mut Vec<BigInt>, dst_min: &mut i64, src: &QLaurentPoly, negate: bool) {
    if src.is_zero() {
        return;
    }
    if dst.is_empty() {
        *dst_min = src.min_exp;
    }
    if src.min_exp < *dst_min {
        let pad = (*dst_min - src.min_exp) as usize;
        dst.splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
        *dst_min = src.min_exp;
    }
    let off = (src.min_exp - *dst_min) as usize;
    let need = off + src.coeffs.len();
    if dst.len() < need {
        dst.resize(need, BigInt::zero());
    }
    for (i, c) in src.coeffs.iter().enumerate() {
        if negate {
            dst[off + i] -= c;
        } else {
            dst[off + i] += c;
        }
    }
}

impl AddAssign<&QLaurentPoly> for QLaurentPoly {
    fn add_assign(&mut self, rhs: &QLaurentPoly) {
        let mut coeffs = std::mem::take(&mut self.coeffs);
        let mut min = self.min_exp;
        add_into(&mut coeffs, &mut min, rhs, false);
        *self = Self::from_coeffs(min, coeffs);
    }
}

impl SubAssign<&QLaurentPoly> for QLaurentPoly {
    fn sub_assign(&mut self, rhs: &QLaurentPoly) {
        let mut coeffs = std::mem::take(&mut self.coeffs);
        let mut min = self.min_exp;
        add_into(&mut coeffs, &mut min, rhs, true);
        *self = Self::from_coeffs(min, coeffs);
    }
}

impl Add<&QLaurentPoly> for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn add(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&QLaurentPoly> for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn sub(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&QLaurentPoly> for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn mul(self, rhs: &QLaurentPoly) -> QLaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return QLaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QLaurentPoly::from_coeffs(self.min_exp + rhs.min_exp, out)
    }
}

impl Neg for &QLaurentPoly {
    type Output = QLaurentPoly;
    fn neg(self) -> QLaurentPoly {
        QLaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QLaurentPoly> for QLaurentPoly {
            type Output = QLaurentPoly;
            fn $m(self, rhs: QLaurentPoly) -> QLaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QLaurentPoly> for QLaurentPoly {
            type Output = QLaurentPoly;
            fn $m(self, rhs: &QLaurentPoly) -> QLaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<QLaurentPoly> for &QLaurentPoly {
            type Output = QLaurentPoly;
            fn $m(self, rhs: QLaurentPoly) -> QLaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QLaurentPoly {
    type Output = QLaurentPoly;
    fn neg(self) -> QLaurentPoly {
        -&self
    }
}

impl std::iter::Sum for QLaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl std::iter::Product for QLaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| &acc * &x)
    }
}

impl From<i64> for QLaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

/// Renders as `q^{-1} + 1 + 2*q^3`, exponents ascending.
impl fmt::Display for QLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let power = match e {
                0 => String::new(),
                1 => "q".to_string(),
                e if e < 0 => format!("q^{{{e}}}"),
                e => format!("q^{e}"),
            };
            if power.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{abs}*{power}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QLaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurentPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    min_exp: i64,
    coeffs: Vec<String>,
}

impl Serialize for QLaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QLaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        let p = QLaurentPoly::from_coeffs(raw.min_exp, coeffs);
        if p.coeffs.len() != raw.coeffs.len() {
            return Err(D::Error::custom("coefficients are not in canonical form"));
        }
        Ok(p)
    }
}
