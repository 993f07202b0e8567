use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::Signed;
use serde::Serialize;

use super::QLaurentPoly;
use crate::error::{Error, Result};

/// A reduced quotient of two Laurent polynomials in `q`.
///
/// Canonical form: `num` and `den` have non-negative exponents, share no
/// non-unit factor in `Z[q]`, and `den` has a positive leading coefficient.
/// Zero is `0 / 1`. Two values are equal iff their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct QRat {
    num: QLaurentPoly,
    den: QLaurentPoly,
}

impl QRat {
    pub fn new(num: QLaurentPoly, den: QLaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self::from_poly(QLaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(QLaurentPoly::one())
    }

    pub fn from_poly(p: QLaurentPoly) -> Self {
        Self::reduce(p, QLaurentPoly::one())
    }

    /// `1 / p`.
    pub fn recip_poly(p: &QLaurentPoly) -> Result<Self> {
        Self::new(QLaurentPoly::one(), p.clone())
    }

    fn reduce(num: QLaurentPoly, den: QLaurentPoly) -> Self {
        if num.is_zero() {
            return Self {
                num,
                den: QLaurentPoly::one(),
            };
        }
        let (n0, ne) = num.strip_q_power();
        let (d0, de) = den.strip_q_power();
        let g = n0.gcd(&d0);
        let mut n = n0.div_exact(&g).expect("gcd divides numerator");
        let mut d = d0.div_exact(&g).expect("gcd divides denominator");
        let shift = ne - de;
        if shift >= 0 {
            n.shift_in_place(shift);
        } else {
            d.shift_in_place(-shift);
        }
        if d.leading_coeff().is_some_and(Signed::is_negative) {
            n = -n;
            d = -d;
        }
        Self { num: n, den: d }
    }

    pub fn numer(&self) -> &QLaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &QLaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// The Laurent polynomial equal to this quotient, or
    /// [`Error::NonPolynomial`] carrying the division remainder.
    pub fn to_polynomial(&self) -> Result<QLaurentPoly> {
        if self.den.is_one() {
            return Ok(self.num.clone());
        }
        // q is a unit: a pure power of q in the denominator is fine.
        if self.den.coeffs().len() == 1 && self.den.coeffs()[0] == 1.into() {
            return Ok(self.num.shift(-self.den.min_exp()));
        }
        let (_, rem) = self
            .num
            .div_rem_laurent(&self.den)
            .expect("denominator is non-zero");
        Err(Error::NonPolynomial { remainder: rem })
    }
}

impl From<QLaurentPoly> for QRat {
    fn from(p: QLaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add<&QRat> for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        if self.den == rhs.den {
            return QRat::reduce(&self.num + &rhs.num, self.den.clone());
        }
        QRat::reduce(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&QRat> for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self + &(-rhs)
    }
}

impl Mul<&QRat> for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        QRat::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div<&QRat> for &QRat {
    type Output = Result<QRat>;
    fn div(self, rhs: &QRat) -> Result<QRat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QRat::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: QRat) -> QRat {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRat> for QRat {
            type Output = QRat;
            fn $m(self, rhs: &QRat) -> QRat {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for QRat {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(QRat::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
