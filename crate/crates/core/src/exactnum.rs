//! Exact scalars: big rationals, Gaussian rationals and rational quaternions.
//!
//! Quaternions use the basis `e0, e1, e2, e3` with `e1 e2 = e3`, `e2 e3 = e1`,
//! `e3 e1 = e2` and `ei^2 = -e0`. A quaternion is identified with a pair of
//! complex numbers through the basis `e0, e2`, where the complex unit acts by
//! left multiplication with `e1`:
//!
//! ```text
//! q = (f.re + f.im e1) e0 + (g.re + g.im e1) e2
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Arbitrary precision rational number, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("invalid rational {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                Ok(Rational::new(parse_int(n)?, d))
            }
            None => Ok(Rational::from_int(parse_int(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Implements the four owned/borrowed combinations of a binary operator by
/// delegating to the `&T op &T` implementation.
macro_rules! forward_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $trait<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

forward_binop!(Rational, Add, add);
forward_binop!(Rational, Sub, sub);
forward_binop!(Rational, Mul, mul);
forward_binop!(Rational, Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

/// Complex number `re + im i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(re.into(), im.into())
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        GaussianRational::default()
    }

    pub fn one() -> Self {
        GaussianRational::real(Rational::one())
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational::new(&self.re * r, &self.im * r)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = GaussianRational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// The quaternion `re + im e1`.
    pub fn to_quaternion(&self) -> RationalQuaternion {
        RationalQuaternion::new(
            self.re.clone(),
            self.im.clone(),
            Rational::zero(),
            Rational::zero(),
        )
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::real(n.into())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                if self.im.as_big().is_negative() {
                    write!(f, "({}-{}i)", self.re, self.im.abs())
                } else {
                    write!(f, "({}+{}i)", self.re, self.im)
                }
            }
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv().expect("division by zero Gaussian rational")
    }
}

forward_binop!(GaussianRational, Add, add);
forward_binop!(GaussianRational, Sub, sub);
forward_binop!(GaussianRational, Mul, mul);
forward_binop!(GaussianRational, Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

/// One of the imaginary units `e1, e2, e3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    E1,
    E2,
    E3,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::E1, Axis::E2, Axis::E3];

    pub fn new(i: usize) -> Result<Axis, Error> {
        match i {
            1 => Ok(Axis::E1),
            2 => Ok(Axis::E2),
            3 => Ok(Axis::E3),
            _ => Err(Error::InvalidAxis(i)),
        }
    }

    pub fn index(self) -> usize {
        match self {
            Axis::E1 => 1,
            Axis::E2 => 2,
            Axis::E3 => 3,
        }
    }

    pub fn unit(self) -> RationalQuaternion {
        RationalQuaternion::basis(self.index())
    }
}

/// Quaternion `c0 e0 + c1 e1 + c2 e2 + c3 e3` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalQuaternion {
    pub c: [Rational; 4],
}

impl RationalQuaternion {
    pub fn new(c0: Rational, c1: Rational, c2: Rational, c3: Rational) -> Self {
        RationalQuaternion {
            c: [c0, c1, c2, c3],
        }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        RationalQuaternion::new(c[0].into(), c[1].into(), c[2].into(), c[3].into())
    }

    pub fn zero() -> Self {
        RationalQuaternion::default()
    }

    pub fn one() -> Self {
        RationalQuaternion::basis(0)
    }

    /// `e_i` for `i` in `0..4`.
    pub fn basis(i: usize) -> Self {
        let mut c = [0i64; 4];
        c[i] = 1;
        RationalQuaternion::from_ints(c)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rational::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.c[0].is_zero()
    }

    pub fn conj(&self) -> Self {
        RationalQuaternion::new(self.c[0].clone(), -&self.c[1], -&self.c[2], -&self.c[3])
    }

    /// The norm form `c0^2 + c1^2 + c2^2 + c3^2`.
    pub fn norm(&self) -> Rational {
        self.c.iter().fold(Rational::zero(), |acc, x| acc + x * x)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        RationalQuaternion {
            c: self.c.clone().map(|x| &x * r),
        }
    }

    /// Euclidean inner product of coefficient vectors.
    pub fn dot(&self, other: &Self) -> Rational {
        self.c
            .iter()
            .zip(&other.c)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Hamilton product with `e1 e2 = e3`.
    pub fn multiply(&self, rhs: &Self) -> Self {
        let [a1, b1, c1, d1] = &self.c;
        let [a2, b2, c2, d2] = &rhs.c;
        RationalQuaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }

    /// Splits `q` into `(f, g)` with `q = f e0 + g e2`, complex scalars acting
    /// by left multiplication with `a + b e1`.
    pub fn complex_split(&self) -> (GaussianRational, GaussianRational) {
        let [c0, c1, c2, c3] = self.c.clone();
        (GaussianRational::new(c0, c1), GaussianRational::new(c2, c3))
    }

    /// Inverse of [`RationalQuaternion::complex_split`].
    pub fn assemble(f: &GaussianRational, g: &GaussianRational) -> Self {
        let e2 = RationalQuaternion::basis(2);
        &f.to_quaternion() + &g.to_quaternion().multiply(&e2)
    }

    /// Clifford multiplication by `e_i` on the spinor module: `q -> q (-e_i)`.
    pub fn clifford_multiply(&self, axis: Axis) -> Self {
        self.multiply(&-axis.unit())
    }

    /// Left multiplication by a complex scalar `a + b e1`.
    pub fn complex_scale(&self, z: &GaussianRational) -> Self {
        z.to_quaternion().multiply(self)
    }
}

pub fn quat_multiply(a: &RationalQuaternion, b: &RationalQuaternion) -> RationalQuaternion {
    a.multiply(b)
}

impl Add for &RationalQuaternion {
    type Output = RationalQuaternion;
    fn add(self, rhs: &RationalQuaternion) -> RationalQuaternion {
        RationalQuaternion {
            c: std::array::from_fn(|i| &self.c[i] + &rhs.c[i]),
        }
    }
}

impl Sub for &RationalQuaternion {
    type Output = RationalQuaternion;
    fn sub(self, rhs: &RationalQuaternion) -> RationalQuaternion {
        RationalQuaternion {
            c: std::array::from_fn(|i| &self.c[i] - &rhs.c[i]),
        }
    }
}

impl Mul for &RationalQuaternion {
    type Output = RationalQuaternion;
    fn mul(self, rhs: &RationalQuaternion) -> RationalQuaternion {
        self.multiply(rhs)
    }
}

forward_binop!(RationalQuaternion, Add, add);
forward_binop!(RationalQuaternion, Sub, sub);
forward_binop!(RationalQuaternion, Mul, mul);

impl Neg for RationalQuaternion {
    type Output = RationalQuaternion;
    fn neg(self) -> RationalQuaternion {
        RationalQuaternion {
            c: self.c.map(|x| -x),
        }
    }
}

impl Neg for &RationalQuaternion {
    type Output = RationalQuaternion;
    fn neg(self) -> RationalQuaternion {
        -(self.clone())
    }
}

impl fmt::Debug for RationalQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}]",
            self.c[0], self.c[1], self.c[2], self.c[3]
        )
    }
}

impl Serialize for RationalQuaternion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.c.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalQuaternion {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let c = <[Rational; 4]>::deserialize(deserializer)?;
        Ok(RationalQuaternion { c })
    }
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}
