//! Geometric operators on polynomial sections over `S^3 = Sp(1)`: Killing
//! derivatives, the Dirac and Laplace operators, the connection constants of
//! the round metric and integration over the sphere.
//!
//! Integrals are kept exact in units of the volume `2 pi^2`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, Axis, GaussianRational, Rational, RationalQuaternion};
use crate::linalg::Matrix;
use crate::polyring::{Derivation, Polynomial, SpinorSection, View};

/// Generator of the isometry flow `x -> t^{-1} x s`; the associated vector
/// field is `x -> x S - T x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KillingPair {
    pub left: RationalQuaternion,
    pub right: RationalQuaternion,
}

impl KillingPair {
    pub fn new(left: RationalQuaternion, right: RationalQuaternion) -> Self {
        KillingPair { left, right }
    }

    /// `(e_i, 0)`: the left-invariant field `l_{e_i}`.
    pub fn left_invariant(axis: Axis) -> Self {
        KillingPair::new(axis.unit(), RationalQuaternion::zero())
    }

    /// `(0, e_i)`.
    pub fn right_invariant(axis: Axis) -> Self {
        KillingPair::new(RationalQuaternion::zero(), axis.unit())
    }

    /// Value of the field at `x`.
    pub fn field_at(&self, x: &RationalQuaternion) -> RationalQuaternion {
        x.multiply(&self.left) - self.right.multiply(x)
    }

    /// Real 4x4 matrix `M` with `(x S - T x)_a = sum_b M[a][b] x_b`.
    pub fn field_matrix(&self) -> [[Rational; 4]; 4] {
        let columns: Vec<RationalQuaternion> = (0..4)
            .map(|b| self.field_at(&RationalQuaternion::basis(b)))
            .collect();
        std::array::from_fn(|a| std::array::from_fn(|b| columns[b].c[a].clone()))
    }

    pub fn derivation(&self, view: View) -> Derivation {
        Derivation::from_linear_field(&self.field_matrix(), view)
    }

    /// `<x, x S - T x> = 0` at the point `x`.
    pub fn is_tangent_at(&self, x: &RationalQuaternion) -> bool {
        x.dot(&self.field_at(x)).is_zero()
    }
}

/// Things a Killing field can differentiate.
pub trait KillingDerivative: Sized {
    fn derive_along(&self, d: &Derivation) -> Self;
}

impl KillingDerivative for Polynomial {
    fn derive_along(&self, d: &Derivation) -> Self {
        self.derive(d)
    }
}

impl KillingDerivative for SpinorSection {
    fn derive_along(&self, d: &Derivation) -> Self {
        self.map(|p| p.derive(d))
    }
}

/// `sigma -> (x -> d sigma_x(x S - T x))`.
pub fn killing_derivative<T: KillingDerivative>(sigma: &T, pair: &KillingPair) -> T {
    sigma.derive_along(&pair.derivation(View::X))
}

fn left_derivations(view: View) -> [Derivation; 3] {
    Axis::ALL.map(|a| KillingPair::left_invariant(a).derivation(view))
}

/// `Dbar sigma = -sum_i (l_{e_i} sigma) e_i`, with the right multiplications
/// carried out on the quaternion-valued form of `sigma`.
pub fn dbar_section(sigma: &SpinorSection) -> SpinorSection {
    let q = sigma.to_quaternion_polynomial();
    let ds = left_derivations(sigma.view());
    let mut acc = q.scale_rational(&Rational::zero());
    for (axis, d) in Axis::ALL.into_iter().zip(&ds) {
        acc = acc.add(&q.derive(d).right_multiply(&axis.unit()));
    }
    acc.scale_rational(&Rational::from_int(-1))
        .to_section(sigma.k)
}

/// The Dirac operator `D = Dbar - 3/2`.
pub fn dirac_section(sigma: &SpinorSection) -> SpinorSection {
    let shift = sigma.scale_rational(&Rational::new(3, 2));
    &dbar_section(sigma) - &shift
}

/// `Delta = sum_i l_{e_i} l_{e_i}`; eigenvalue `1 - (k+1)^2` on degree `k`.
pub fn laplace_section(sigma: &SpinorSection) -> SpinorSection {
    let ds = left_derivations(sigma.view());
    let mut acc = sigma.scale_rational(&Rational::zero());
    for d in &ds {
        acc = &acc + &sigma.derive_along(d).derive_along(d);
    }
    acc
}

/// Levi-Civita connection of left-invariant fields: `e_i e_j` off the
/// diagonal, zero on it.
pub fn levi_civita(i: Axis, j: Axis) -> RationalQuaternion {
    if i == j {
        RationalQuaternion::zero()
    } else {
        i.unit().multiply(&j.unit())
    }
}

/// `nabla_X Y` for arbitrary constant imaginary quaternions, by bilinear
/// extension of [`levi_civita`].
pub fn covariant_derivative(x: &RationalQuaternion, y: &RationalQuaternion) -> RationalQuaternion {
    let mut out = RationalQuaternion::zero();
    for i in Axis::ALL {
        for j in Axis::ALL {
            let c = &x.c[i.index()] * &y.c[j.index()];
            if !c.is_zero() {
                out = out + levi_civita(i, j).scale(&c);
            }
        }
    }
    out
}

/// `l_v sigma` for an imaginary quaternion `v`.
fn left_derivative(sigma: &SpinorSection, v: &RationalQuaternion) -> SpinorSection {
    killing_derivative(
        sigma,
        &KillingPair::new(v.clone(), RationalQuaternion::zero()),
    )
}

/// Trace of the Hessian `nabla^2_{X,X} = l_X l_X - l_{nabla_X X}` over the
/// orthonormal frame `frame`.
pub fn laplace_section_hessian(
    sigma: &SpinorSection,
    frame: &[RationalQuaternion; 3],
) -> SpinorSection {
    let mut acc = sigma.scale_rational(&Rational::zero());
    for v in frame {
        let second = left_derivative(&left_derivative(sigma, v), v);
        let correction = left_derivative(sigma, &covariant_derivative(v, v));
        acc = &acc + &(&second - &correction);
    }
    acc
}

/// Spin connection on the constant spinor `e0` along `e_h`:
/// `1/4 sum_{i,j} <nabla_{e_h} e_i, e_j> c_i c_j e0`.
pub fn spin_connection(h: Axis) -> RationalQuaternion {
    let e0 = RationalQuaternion::one();
    let mut out = RationalQuaternion::zero();
    for i in Axis::ALL {
        for j in Axis::ALL {
            let omega = levi_civita(h, i).dot(&j.unit());
            if omega.is_zero() {
                continue;
            }
            let term = e0.clifford_multiply(j).clifford_multiply(i);
            out = out + term.scale(&(omega * Rational::new(1, 4)));
        }
    }
    out
}

/// `sum_h e_h . nabla_{e_h} e0`, the zeroth-order part of the Dirac operator.
pub fn spin_connection_constant() -> RationalQuaternion {
    Axis::ALL
        .into_iter()
        .fold(RationalQuaternion::zero(), |acc, h| {
            acc + spin_connection(h).clifford_multiply(h)
        })
}

/// An exact integral over `S^3`, stored as a multiple of `2 pi^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralValue {
    pub coefficient: GaussianRational,
}

impl IntegralValue {
    pub const UNIT: &'static str = "2pi^2";

    pub fn new(coefficient: GaussianRational) -> Self {
        IntegralValue { coefficient }
    }

    pub fn zero() -> Self {
        IntegralValue::new(GaussianRational::zero())
    }

    pub fn to_complex(&self) -> Complex64 {
        let scale = 2.0 * PI * PI;
        Complex64::new(
            self.coefficient.re.to_f64() * scale,
            self.coefficient.im.to_f64() * scale,
        )
    }
}

#[derive(Serialize, Deserialize)]
struct IntegralValueJson {
    unit: String,
    value: GaussianRational,
}

impl Serialize for IntegralValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        IntegralValueJson {
            unit: Self::UNIT.to_string(),
            value: self.coefficient.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IntegralValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = IntegralValueJson::deserialize(deserializer)?;
        if j.unit != Self::UNIT {
            return Err(serde::de::Error::custom(format!(
                "unsupported unit {:?}",
                j.unit
            )));
        }
        Ok(IntegralValue::new(j.value))
    }
}

/// `int g2^l1 g2b^l2 gm1^l3 g1b^l4 = 2 pi^2 (-1)^l4 l1! l3! / (l1 + l3 + 1)!`
/// when `l1 = l2` and `l3 = l4`, zero otherwise.
pub fn monomial_integral(l: [u32; 4]) -> IntegralValue {
    let [l1, l2, l3, l4] = l;
    if l1 != l2 || l3 != l4 {
        return IntegralValue::zero();
    }
    let sign: i64 = if l4 % 2 == 0 { 1 } else { -1 };
    let num = factorial(l1) * factorial(l3) * BigInt::from(sign);
    let den = factorial(l1 + l3 + 1);
    IntegralValue::new(GaussianRational::real(
        Rational::from(num) / Rational::from(den),
    ))
}

/// `<a, b> = int conj(a) b` over the unit sphere.
pub fn l2_inner_product(a: &Polynomial, b: &Polynomial) -> IntegralValue {
    let a = a.change_view(View::Z).conj();
    let b = b.change_view(View::Z);
    let mut total = GaussianRational::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let e: [u32; 4] = std::array::from_fn(|j| ma.0[j] + mb.0[j]);
            if e[0] != e[1] || e[2] != e[3] {
                continue;
            }
            total += &(&(ca * cb) * &monomial_integral(e).coefficient);
        }
    }
    IntegralValue::new(total)
}

/// How to discretize the parametrization
/// `eta(t, s, rho) = (e^{it} sqrt(rho), e^{is} sqrt(1 - rho))`, whose volume
/// form is `dt ds drho / 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "lowercase")]
pub enum QuadratureSpec {
    /// Trapezoid in both angles, Gauss-Legendre in `rho`.
    Tensor { n_angular: usize, n_radial: usize },
    /// Uniform samples of `(t, s, rho)`.
    Mc { samples: u64, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureEstimate {
    pub value: Complex64,
    /// Estimated standard error; only for Monte Carlo.
    pub std_error: Option<f64>,
}

/// Samples per Monte Carlo chunk. Chunk `c` draws from the ChaCha8 stream
/// `c` of the given seed and chunks are reduced in order, so the estimate
/// does not depend on the thread count.
pub const MC_CHUNK: u64 = 1 << 16;

/// Gauss-Legendre nodes and weights on `[0, 1]`.
pub fn gauss_legendre(n: usize) -> Result<Vec<(f64, f64)>> {
    if n == 0 {
        return Err(Error::InvalidNodes(
            "Gauss-Legendre needs at least one node".into(),
        ));
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let p = if n == 1 { x } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = n as f64 * (x * p - pm) / (x * x - 1.0);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        out.push(((1.0 - x) / 2.0, w / 2.0));
    }
    out.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(out)
}

/// A polynomial flattened for fast floating-point evaluation at
/// `(z1, z2)`.
struct CompiledPolynomial {
    terms: Vec<([u32; 4], Complex64)>,
}

impl CompiledPolynomial {
    fn new(p: &Polynomial) -> Self {
        let z = p.change_view(View::Z);
        let terms = z
            .terms()
            .map(|(m, c)| (m.0, Complex64::new(c.re.to_f64(), c.im.to_f64())))
            .collect();
        CompiledPolynomial { terms }
    }

    fn eval(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        let vars = [z2, z2.conj(), -z1, z1.conj()];
        self.terms
            .iter()
            .map(|(e, c)| (0..4).fold(*c, |acc, a| acc * vars[a].powu(e[a])))
            .sum()
    }

    fn eval_eta(&self, t: f64, s: f64, rho: f64) -> Complex64 {
        let z1 = Complex64::from_polar(rho.sqrt(), t);
        let z2 = Complex64::from_polar((1.0 - rho).max(0.0).sqrt(), s);
        self.eval(z1, z2)
    }
}

/// Numerical estimate of `int_{S^3} f`.
pub fn eta_quadrature(f: &Polynomial, spec: &QuadratureSpec) -> Result<QuadratureEstimate> {
    let poly = CompiledPolynomial::new(f);
    match *spec {
        QuadratureSpec::Tensor {
            n_angular,
            n_radial,
        } => {
            if n_angular == 0 {
                return Err(Error::InvalidNodes("n_angular must be positive".into()));
            }
            let radial = gauss_legendre(n_radial)?;
            let h = 2.0 * PI / n_angular as f64;
            let rows: Vec<Complex64> = (0..n_angular)
                .into_par_iter()
                .map(|a| {
                    let t = a as f64 * h;
                    let mut acc = Complex64::new(0.0, 0.0);
                    for b in 0..n_angular {
                        let s = b as f64 * h;
                        for &(rho, w) in &radial {
                            acc += poly.eval_eta(t, s, rho) * w;
                        }
                    }
                    acc
                })
                .collect();
            let sum: Complex64 = rows.into_iter().sum();
            Ok(QuadratureEstimate {
                value: sum * (0.5 * h * h),
                std_error: None,
            })
        }
        QuadratureSpec::Mc { samples, seed } => {
            if samples < 2 {
                return Err(Error::InvalidNodes(
                    "Monte Carlo needs at least two samples".into(),
                ));
            }
            let chunks = samples.div_ceil(MC_CHUNK);
            let partial: Vec<(Complex64, f64)> = (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(c);
                    let n = MC_CHUNK.min(samples - c * MC_CHUNK);
                    let mut sum = Complex64::new(0.0, 0.0);
                    let mut sum_sq = 0.0;
                    for _ in 0..n {
                        let t = rng.random::<f64>() * 2.0 * PI;
                        let s = rng.random::<f64>() * 2.0 * PI;
                        let rho = rng.random::<f64>();
                        let v = poly.eval_eta(t, s, rho);
                        sum += v;
                        sum_sq += v.norm_sqr();
                    }
                    (sum, sum_sq)
                })
                .collect();
            let (sum, sum_sq) = partial
                .into_iter()
                .fold((Complex64::new(0.0, 0.0), 0.0), |(a, b), (c, d)| {
                    (a + c, b + d)
                });
            let n = samples as f64;
            let mean = sum / n;
            let var = ((sum_sq - n * mean.norm_sqr()) / (n - 1.0)).max(0.0);
            let volume = 2.0 * PI * PI;
            Ok(QuadratureEstimate {
                value: mean * volume,
                std_error: Some(volume * (var / n).sqrt()),
            })
        }
    }
}

/// Tensor rule that integrates every polynomial of total degree `<= d`
/// exactly up to round-off.
pub fn exact_tensor_rule(d: u32) -> QuadratureSpec {
    QuadratureSpec::Tensor {
        n_angular: d as usize + 1,
        n_radial: (d as usize + 3) / 2,
    }
}

/// Exact Gram matrix of the images `I(|p>|q>)`, rows and columns indexed by
/// `p (k+1) + q`, in units of `2 pi^2`.
pub fn gram_matrix(k: usize) -> Matrix {
    let images: Vec<Polynomial> = (0..=k)
        .flat_map(|p| (0..=k).map(move |q| (p, q)))
        .map(|(p, q)| {
            crate::transfer::iso_closed_form(k, p, q)
                .expect("in range")
                .poly
        })
        .collect();
    let n = images.len();
    let entries: Vec<GaussianRational> = (0..n * n)
        .into_par_iter()
        .map(|idx| l2_inner_product(&images[idx / n], &images[idx % n]).coefficient)
        .collect();
    Matrix::from_fn(n, n, |i, j| entries[i * n + j].clone())
}

/// Squared norms predicted from the unitary structure: `|p>` in `H_k` has
/// squared norm proportional to `1 / C(k, p)`, so `I(|p>|q>)` should have
/// squared norm `c / (C(k,p) C(k,q))` for one constant `c` per `k`.
pub fn gram_prediction(k: usize) -> Vec<Rational> {
    use crate::exactnum::binomial;
    (0..=k)
        .flat_map(|p| (0..=k).map(move |q| (p, q)))
        .map(|(p, q)| {
            let d = binomial(k as u32, p as u32) * binomial(k as u32, q as u32);
            Rational::from(BigInt::from(1)) / Rational::from(d)
        })
        .collect()
}

/// The Gram matrix is diagonal with diagonal proportional to
/// [`gram_prediction`]; returns the constant of proportionality.
pub fn gram_proportionality(k: usize) -> Option<Rational> {
    let g = gram_matrix(k);
    if !g.is_diagonal() {
        return None;
    }
    let pred = gram_prediction(k);
    let mut ratio: Option<Rational> = None;
    for (d, p) in g.diagonal().iter().zip(&pred) {
        if !d.is_real() {
            return None;
        }
        let r = d.re.clone() / p.clone();
        match &ratio {
            None => ratio = Some(r),
            Some(prev) if *prev != r => return None,
            _ => {}
        }
    }
    ratio
}
