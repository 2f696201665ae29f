//! Exact scalars in the real quadratic extension Q(sqrt r).
//!
//! A [`Scalar`] is `a + b*sqrt(r)` with `a`, `b` arbitrary-precision
//! rationals and `r` a positive integer. If `r` is a perfect square the
//! root part is folded into the rational part, so scalars over Q(sqrt 4)
//! are plain rationals. Scalars with `b = 0` are root-agnostic and combine
//! with any context; combining two scalars with distinct non-trivial roots
//! is a programming error and panics.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// The coefficient field abstraction used by matrices and linear
/// combinations. Implemented by [`Scalar`] and by plain `BigRational`.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    /// The natural number `v` as a field element.
    fn nat(v: u64) -> Self;

    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
}

impl Field for BigRational {
    fn nat(v: u64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Self {
        BigRational::one() / self
    }
}

/// Exact element `a + b*sqrt(root)` of a real quadratic extension of Q.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
    root: u32,
}

fn isqrt_exact(n: u32) -> Option<u32> {
    let s = (n as f64).sqrt().round() as u32;
    for c in s.saturating_sub(1)..=s + 1 {
        if c * c == n {
            return Some(c);
        }
    }
    None
}

impl Scalar {
    /// Build `a + b*sqrt(root)`, folding perfect-square roots into `a`.
    pub fn new(a: BigRational, b: BigRational, root: u32) -> Self {
        assert!(root >= 1, "root parameter must be positive");
        let mut s = Scalar { a, b, root };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.b.is_zero() {
            self.root = 1;
            return;
        }
        if let Some(c) = isqrt_exact(self.root) {
            self.a += &self.b * BigRational::from_integer(BigInt::from(c));
            self.b = BigRational::zero();
            self.root = 1;
        }
    }

    /// The rational `q` as a scalar.
    pub fn from_rational(q: BigRational) -> Self {
        Scalar { a: q, b: BigRational::zero(), root: 1 }
    }

    /// The integer `v` as a scalar.
    pub fn from_integer(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// The fraction `num/den` as a scalar.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `sqrt(n)` as an exact scalar (rational when `n` is a perfect square).
    pub fn sqrt(n: u32) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), n)
    }

    /// `n^e` for integer `e` (negative exponents allowed).
    pub fn nat_pow(n: u32, e: i32) -> Self {
        let p = BigRational::from_integer(BigInt::from(n)).pow(e);
        Self::from_rational(p)
    }

    /// Rational part `a`.
    pub fn rat_part(&self) -> &BigRational {
        &self.a
    }

    /// Root coefficient `b`.
    pub fn root_part(&self) -> &BigRational {
        &self.b
    }

    /// The root parameter (1 when the scalar is rational).
    pub fn root(&self) -> u32 {
        self.root
    }

    /// True if the scalar is a plain rational.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn common_root(&self, rhs: &Self) -> u32 {
        match (self.b.is_zero(), rhs.b.is_zero()) {
            (true, _) => rhs.root,
            (false, true) => self.root,
            (false, false) => {
                assert_eq!(
                    self.root, rhs.root,
                    "scalar roots differ: sqrt{} vs sqrt{}",
                    self.root, rhs.root
                );
                self.root
            }
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        if self.b.is_zero() {
            return Self::from_rational(BigRational::one() / &self.a);
        }
        // 1/(a+b√r) = (a-b√r)/(a²-b²r)
        let r = BigRational::from_integer(BigInt::from(self.root));
        let den = &self.a * &self.a - &self.b * &self.b * r;
        assert!(!den.is_zero(), "norm is zero: root must be square-free non-square");
        Scalar::new(&self.a / &den, -&self.b / &den, self.root)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Self::from_integer(0)
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Self::from_integer(1)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        let root = self.common_root(&rhs);
        Scalar::new(self.a + rhs.a, self.b + rhs.b, root)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        let root = self.common_root(&rhs);
        Scalar::new(self.a - rhs.a, self.b - rhs.b, root)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        let root = self.common_root(&rhs);
        let r = BigRational::from_integer(BigInt::from(root));
        let a = &self.a * &rhs.a + &self.b * &rhs.b * r;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Scalar::new(a, b, root)
    }
}

impl Div for Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Scalar) -> Scalar {
        self * rhs.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b, root: self.root }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.clone() + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = self.clone() - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = self.clone() * rhs;
    }
}

impl Field for Scalar {
    fn nat(v: u64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn inv(&self) -> Self {
        Scalar::inv(self)
    }
}

impl fmt::Display for Scalar {
    /// Rationals print as `p/q`, proper quadratic scalars as `(a+b*sqrtN)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn rat(q: &BigRational) -> String {
            if q.is_integer() {
                q.numer().to_string()
            } else {
                format!("{}/{}", q.numer(), q.denom())
            }
        }
        if self.b.is_zero() {
            write!(f, "{}", rat(&self.a))
        } else if self.b.is_negative() {
            write!(f, "({}-{}*sqrtN)", rat(&self.a), rat(&(-&self.b)))
        } else {
            write!(f, "({}+{}*sqrtN)", rat(&self.a), rat(&self.b))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_square_folds() {
        let s = Scalar::sqrt(4);
        assert_eq!(s, Scalar::from_integer(2));
        assert!(s.is_rational());
        let t = Scalar::sqrt(9) + Scalar::from_integer(1);
        assert_eq!(t, Scalar::from_integer(4));
    }

    #[test]
    fn field_axioms_sqrt3() {
        let x = Scalar::new(BigRational::new(1.into(), 2.into()), BigRational::new(3.into(), 5.into()), 3);
        let y = Scalar::new(BigRational::new((-2).into(), 7.into()), BigRational::one(), 3);
        // distributivity and inverses, exactly
        let lhs = x.clone() * (y.clone() + Scalar::one());
        let rhs = x.clone() * y.clone() + x.clone();
        assert_eq!(lhs, rhs);
        assert_eq!(x.clone() * x.inv(), Scalar::one());
        assert_eq!(y.clone() - y, Scalar::zero());
    }

    #[test]
    fn sqrt_multiplies_to_base() {
        let s = Scalar::sqrt(3);
        assert_eq!(s.clone() * s, Scalar::from_integer(3));
    }

    #[test]
    fn zero_is_both_parts_zero() {
        let z = Scalar::sqrt(5) - Scalar::sqrt(5);
        assert!(z.is_zero());
        assert_eq!(z.root(), 1);
    }

    #[test]
    fn rational_scalars_mix_with_any_root() {
        let a = Scalar::from_integer(2) * Scalar::sqrt(5);
        let b = Scalar::sqrt(5) + Scalar::from_integer(1);
        assert_eq!(a + b, Scalar::new(BigRational::one(), BigRational::from_integer(3.into()), 5));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::ratio(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::from_integer(9).to_string(), "9");
        let s = Scalar::from_integer(1) + Scalar::sqrt(2);
        assert_eq!(s.to_string(), "(1+1*sqrtN)");
        let t = Scalar::from_integer(1) - Scalar::sqrt(2);
        assert_eq!(t.to_string(), "(1-1*sqrtN)");
    }
}
