//! The equivariant isomorphism `I : H_k (x) H_k -> W_k` onto the harmonic
//! polynomials of degree `k` on `R^4`, and the resulting polynomial eigenbasis
//! of the Dirac operator.
//!
//! Images are written in the `g`-variables `(g2, g2b, gm1, g1b)` and carry no
//! normalization; the unit-norm scalar is `sqrt((k+1) / 2 pi^2)`, recorded as
//! `norm_factor_squared = k + 1` against the `2 pi^2` integration unit.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::dirac::{eigenbasis_abstract, Family, Slot};
use crate::error::{Error, Result};
use crate::exactnum::{binomial, factorial, Axis, GaussianRational, Rational};
use crate::geometry::KillingPair;
use crate::linalg::Matrix;
use crate::polyring::{Derivation, Monomial, Polynomial, SpinorSection, View};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferImage {
    pub k: usize,
    pub p: usize,
    pub q: usize,
    pub norm_factor_squared: Rational,
    #[serde(flatten)]
    pub poly: Polynomial,
}

fn check_indices(k: usize, p: usize, q: usize) -> Result<()> {
    if p > k {
        return Err(Error::IndexOutOfRange {
            what: "p",
            value: p,
            max: k,
        });
    }
    if q > k {
        return Err(Error::IndexOutOfRange {
            what: "q",
            value: q,
            max: k,
        });
    }
    Ok(())
}

fn image(k: usize, p: usize, q: usize, poly: Polynomial) -> TransferImage {
    TransferImage {
        k,
        p,
        q,
        norm_factor_squared: Rational::from_int(k as i64 + 1),
        poly,
    }
}

/// `I(|p>|q>) = C(k,p)^-1 C(k,q)^-1 sum_i k! / ((k-q-i)! (p-i)! i! (q-p+i)!)
/// g2^{k-q-i} g2b^{p-i} gm1^i g1b^{q-p+i}`.
pub fn iso_closed_form(k: usize, p: usize, q: usize) -> Result<TransferImage> {
    check_indices(k, p, q)?;
    let (kk, pp, qq) = (k as u32, p as u32, q as u32);
    let scale =
        Rational::from(BigInt::from(1)) / Rational::from(binomial(kk, pp) * binomial(kk, qq));
    let lo = pp.saturating_sub(qq);
    let hi = pp.min(kk - qq);
    let terms = (lo..=hi).map(|i| {
        let exps = [kk - qq - i, pp - i, i, qq + i - pp];
        let den: BigInt = exps.iter().map(|&e| factorial(e)).product();
        let c = Rational::from(factorial(kk)) / Rational::from(den) * scale.clone();
        (exps, GaussianRational::real(c))
    });
    Ok(image(k, p, q, Polynomial::from_terms(View::Z, terms)))
}

/// Which tensor factor a lowering operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoweringOperator {
    /// `beta(Y, 0)`, from the right translations `x -> x s`.
    Left,
    /// `beta(0, Y)`, from the left translations `x -> t^{-1} x`.
    Right,
}

impl LoweringOperator {
    /// `Y = -1/2 beta(e2) + i/2 beta(e3)` on the chosen slot, as a complex
    /// derivation in the `g`-variables.
    pub fn derivation(self) -> Derivation {
        let pair = |a: Axis| match self {
            LoweringOperator::Left => KillingPair::left_invariant(a),
            LoweringOperator::Right => KillingPair::right_invariant(a),
        };
        let d2 = pair(Axis::E2).derivation(View::Z);
        let d3 = pair(Axis::E3).derivation(View::Z);
        let minus_half = GaussianRational::real(Rational::new(-1, 2));
        let half_i = GaussianRational::new(Rational::zero(), Rational::half());
        Derivation::linear_combination(View::Z, &[(minus_half, &d2), (half_i, &d3)])
    }

    pub fn apply(self, p: &Polynomial) -> Polynomial {
        p.derive(&self.derivation())
    }
}

pub fn beta_lower(side: LoweringOperator, p: &Polynomial) -> Polynomial {
    side.apply(p)
}

/// Product `k (k-1) ... (k-n+1)`.
fn falling(k: usize, n: usize) -> Rational {
    (0..n).fold(Rational::one(), |acc, j| {
        acc * Rational::from_int((k - j) as i64)
    })
}

/// `I(|p>|q>)` by lowering `g2^k` with `p` left and `q` right steps, in the
/// given order.
pub fn iso_recursive_ordered(
    k: usize,
    p: usize,
    q: usize,
    left_first: bool,
) -> Result<TransferImage> {
    check_indices(k, p, q)?;
    let left = LoweringOperator::Left.derivation();
    let right = LoweringOperator::Right.derivation();
    let mut steps = vec![(&left, p), (&right, q)];
    if !left_first {
        steps.reverse();
    }
    let mut poly = Polynomial::g2().pow(k as u32);
    for (d, n) in steps {
        for _ in 0..n {
            poly = poly.derive(d);
        }
    }
    let norm = falling(k, p) * falling(k, q);
    Ok(image(k, p, q, poly.scale_rational(&norm.recip())))
}

pub fn iso_recursive(k: usize, p: usize, q: usize) -> Result<TransferImage> {
    iso_recursive_ordered(k, p, q, true)
}

/// All `(k+1)^2` images ordered by `(p, q)`.
pub fn all_images(k: usize) -> Vec<TransferImage> {
    (0..=k)
        .flat_map(|p| (0..=k).map(move |q| (p, q)))
        .map(|(p, q)| iso_closed_form(k, p, q).expect("in range"))
        .collect()
}

/// `Y_L I(|p>|q>) = (k-p) I(|p+1>|q>)` and `Y_R I(|p>|q>) = (k-q) I(|p>|q+1>)`
/// for all indices, plus annihilation at the bottom of each string.
pub fn equivariance_holds(k: usize) -> bool {
    let left = LoweringOperator::Left.derivation();
    let right = LoweringOperator::Right.derivation();
    let get = |p, q| iso_closed_form(k, p, q).expect("in range").poly;
    for p in 0..=k {
        for q in 0..=k {
            let v = get(p, q);
            let yl = v.derive(&left);
            let yr = v.derive(&right);
            let expect_l = if p < k {
                get(p + 1, q).scale_rational(&Rational::from_int((k - p) as i64))
            } else {
                Polynomial::zero(View::Z)
            };
            let expect_r = if q < k {
                get(p, q + 1).scale_rational(&Rational::from_int((k - q) as i64))
            } else {
                Polynomial::zero(View::Z)
            };
            if yl != expect_l || yr != expect_r {
                return false;
            }
        }
    }
    true
}

/// Every term of every image has nonnegative exponents summing to `k`.
pub fn exponents_balanced(k: usize) -> bool {
    all_images(k).iter().all(|im| {
        im.poly
            .terms()
            .all(|(m, _): (&Monomial, _)| m.degree() == k as u32)
    })
}

/// Rank of the images as vectors of coefficients.
pub fn image_rank(k: usize) -> usize {
    let images = all_images(k);
    let mut monomials: Vec<Monomial> = images
        .iter()
        .flat_map(|im| im.poly.terms().map(|(m, _)| *m))
        .collect();
    monomials.sort();
    monomials.dedup();
    let rows = images
        .iter()
        .map(|im| monomials.iter().map(|m| im.poly.coefficient(m.0)).collect())
        .collect();
    Matrix::from_rows(rows).expect("rectangular").rank()
}

/// A Dirac eigenvector on `V_k` as a concrete polynomial section.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferredEigenvector {
    pub family: Family,
    pub p: usize,
    pub q: usize,
    pub eigenvalue: Rational,
    pub section: SpinorSection,
}

/// Transfer of the explicit eigenvectors: `sum c_{r,p} e_r (x) |p>|q>` goes
/// to `f = sum c_{0,p} I(|p>|q>)`, `g = sum c_{2,p} I(|p>|q>)`. Ordered by
/// family, then `q`, then `p`; `2 (k+1)^2` sections in total.
pub fn transfer_eigenbasis(k: usize) -> Vec<TransferredEigenvector> {
    let images = all_images(k);
    let img = |p: usize, q: usize| &images[p * (k + 1) + q].poly;
    let (plus, minus) = eigenbasis_abstract(k);
    let mut out = Vec::with_capacity(2 * (k + 1) * (k + 1));
    for fam in [plus, minus] {
        for m in &fam.members {
            let mut f = Polynomial::zero(View::Z);
            let mut g = Polynomial::zero(View::Z);
            for (slot, p, c) in m.vector.entries() {
                let term = img(p, m.q).scale(c);
                match slot {
                    Slot::E0 => f = &f + &term,
                    Slot::E2 => g = &g + &term,
                }
            }
            out.push(TransferredEigenvector {
                family: fam.label,
                p: m.p,
                q: m.q,
                eigenvalue: fam.dirac_eigenvalue.clone(),
                section: SpinorSection::new(k as u32, f, g),
            });
        }
    }
    out
}
