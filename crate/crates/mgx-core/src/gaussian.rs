//! Exact scalars for Hermitian adjacency computations: Gaussian integers
//! (arbitrary-precision) and Gaussian rationals for congruence elimination.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of Z[i] with arbitrary-precision components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussianInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussianInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussianInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussianInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianInt {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Exact division by a nonzero integer; `None` when not divisible.
    pub fn checked_div_int(&self, d: &BigInt) -> Option<Self> {
        if (&self.re % d).is_zero() && (&self.im % d).is_zero() {
            Some(GaussianInt {
                re: &self.re / d,
                im: &self.im / d,
            })
        } else {
            None
        }
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", self.im)
        };
        if self.re.is_zero() {
            write!(f, "{im}")
        } else if self.im.is_negative() {
            write!(f, "{}{im}", self.re)
        } else {
            write!(f, "{}+{im}", self.re)
        }
    }
}

impl Add for &GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: &GaussianInt) -> GaussianInt {
        GaussianInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> GaussianInt {
        GaussianInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl AddAssign<&GaussianInt> for GaussianInt {
    fn add_assign(&mut self, rhs: &GaussianInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianInt> for GaussianInt {
    fn sub_assign(&mut self, rhs: &GaussianInt) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

/// An element of Q(i); the working scalar of congruence elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn from_int(g: &GaussianInt) -> Self {
        GaussianRational {
            re: BigRational::from_integer(g.re.clone()),
            im: BigRational::from_integer(g.im.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    /// Division by a nonzero real rational.
    pub fn div_real(&self, d: &BigRational) -> Self {
        GaussianRational {
            re: &self.re / d,
            im: &self.im / d,
        }
    }

    /// Division by a nonzero Gaussian rational: multiply by the conjugate and
    /// divide by the norm.
    pub fn div(&self, rhs: &Self) -> Self {
        let num = self.mul(&rhs.conj());
        num.div_real(&rhs.norm_sq())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_int_arithmetic() {
        let i = GaussianInt::i();
        let minus_one = &i * &i;
        assert_eq!(minus_one, GaussianInt::new(-1, 0));
        assert_eq!(i.conj(), GaussianInt::new(0, -1));
        assert_eq!(&i * &i.conj(), GaussianInt::one());
        assert_eq!(format!("{}", GaussianInt::new(2, -3)), "2-3i");
        assert_eq!(format!("{}", GaussianInt::new(0, -1)), "-i");
    }

    #[test]
    fn exact_int_division() {
        let g = GaussianInt::new(6, -9);
        assert_eq!(
            g.checked_div_int(&BigInt::from(3)),
            Some(GaussianInt::new(2, -3))
        );
        assert_eq!(g.checked_div_int(&BigInt::from(4)), None);
    }

    #[test]
    fn gaussian_rational_division() {
        let a = GaussianRational::from_int(&GaussianInt::new(1, 1));
        let b = GaussianRational::from_int(&GaussianInt::new(0, 2));
        let q = a.div(&b);
        // (1+i)/(2i) = (1-i)/2
        assert_eq!(q.re, BigRational::new(1.into(), 2.into()));
        assert_eq!(q.im, BigRational::new((-1).into(), 2.into()));
        assert_eq!(q.mul(&b), a);
    }
}
