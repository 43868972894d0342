//! The irreducible representation `H_k` of `Sp(1)`: the k-th complex
//! symmetric power of `H = C^2` with basis `|p>`, `p = 0..=k` (the symmetric
//! tensor with `k - p` factors `e0` and `p` factors `e2`).
//!
//! `Sp(1)` acts on each factor by inverse right multiplication, so an
//! imaginary unit `e_i` acts infinitesimally as `v -> -v e_i`:
//!
//! ```text
//! l1 |p> = (2p - k) i |p>
//! l2 |p> = (p - k) |p+1> + p |p-1>
//! l3 |p> = (p - k) i |p+1> - p i |p-1>
//! ```
//!
//! with `|-1> = |k+1> = 0`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{Axis, GaussianRational, Rational};
use crate::linalg::Matrix;

/// Element of `H_k` in the `|p>` basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KetVector {
    k: usize,
    coeffs: Vec<GaussianRational>,
}

impl KetVector {
    pub fn zero(k: usize) -> Self {
        KetVector {
            k,
            coeffs: vec![GaussianRational::zero(); k + 1],
        }
    }

    pub fn basis(k: usize, p: usize) -> Result<Self> {
        if p > k {
            return Err(Error::IndexOutOfRange {
                what: "p",
                value: p,
                max: k,
            });
        }
        let mut v = KetVector::zero(k);
        v.coeffs[p] = GaussianRational::one();
        Ok(v)
    }

    pub fn from_coeffs(k: usize, coeffs: Vec<GaussianRational>) -> Result<Self> {
        if coeffs.len() != k + 1 {
            return Err(Error::Dimension(format!(
                "H_{k} needs {} coefficients, got {}",
                k + 1,
                coeffs.len()
            )));
        }
        Ok(KetVector { k, coeffs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Coefficient of `|p>`; zero outside `0..=k`.
    pub fn coeff(&self, p: isize) -> GaussianRational {
        usize::try_from(p)
            .ok()
            .and_then(|p| self.coeffs.get(p))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_zero)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        KetVector {
            k: self.k,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.k, other.k);
        KetVector {
            k: self.k,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn add_at(&mut self, p: isize, c: GaussianRational) {
        if let Ok(p) = usize::try_from(p) {
            if p <= self.k {
                self.coeffs[p] += &c;
            }
        }
    }
}

/// Infinitesimal action of `e_i` on `H_k`.
pub fn apply_l(axis: Axis, v: &KetVector) -> KetVector {
    let k = v.k as i64;
    let mut out = KetVector::zero(v.k);
    for (p, c) in v.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let pi = p as isize;
        let pz = p as i64;
        match axis {
            Axis::E1 => out.add_at(pi, c * &GaussianRational::from_ints(0, 2 * pz - k)),
            Axis::E2 => {
                out.add_at(pi + 1, c * &GaussianRational::from_ints(pz - k, 0));
                out.add_at(pi - 1, c * &GaussianRational::from_ints(pz, 0));
            }
            Axis::E3 => {
                out.add_at(pi + 1, c * &GaussianRational::from_ints(0, pz - k));
                out.add_at(pi - 1, c * &GaussianRational::from_ints(0, -pz));
            }
        }
    }
    out
}

/// Standard basis of `sl(2, C) = C (x) sp(1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl2 {
    /// `i e1`, diagonal with `H |p> = (k - 2p) |p>`.
    H,
    /// `(e2 + i e3) / 2`, lowers the ket index: `X |p> = p |p-1>`.
    X,
    /// `(-e2 + i e3) / 2`, raises the ket index: `Y |p> = (k - p) |p+1>`.
    Y,
}

pub fn apply_sl2(which: Sl2, v: &KetVector) -> KetVector {
    let i = GaussianRational::i();
    let half = GaussianRational::real(Rational::half());
    let half_i = GaussianRational::new(Rational::zero(), Rational::half());
    match which {
        Sl2::H => apply_l(Axis::E1, v).scale(&i),
        Sl2::X => apply_l(Axis::E2, v)
            .scale(&half)
            .add(&apply_l(Axis::E3, v).scale(&half_i)),
        Sl2::Y => apply_l(Axis::E2, v)
            .scale(&-half)
            .add(&apply_l(Axis::E3, v).scale(&half_i)),
    }
}

/// Exact matrix of an operator on `H_k` in the `|p>` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub k: usize,
    pub matrix: Matrix,
}

impl RepMatrix {
    fn from_operator(k: usize, op: impl Fn(&KetVector) -> KetVector) -> Self {
        let columns: Vec<KetVector> = (0..=k)
            .map(|p| op(&KetVector::basis(k, p).expect("p <= k")))
            .collect();
        RepMatrix {
            k,
            matrix: Matrix::from_fn(k + 1, k + 1, |i, j| columns[j].coeffs[i].clone()),
        }
    }

    pub fn is_scalar(&self, c: &GaussianRational) -> bool {
        self.matrix == Matrix::identity(self.k + 1).scale(c)
    }
}

#[derive(Serialize, Deserialize)]
struct RepMatrixJson {
    k: usize,
    entries: Vec<GaussianRational>,
}

impl Serialize for RepMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RepMatrixJson {
            k: self.k,
            entries: self.matrix.to_rows().into_iter().flatten().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RepMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = RepMatrixJson::deserialize(deserializer)?;
        let n = j.k + 1;
        if j.entries.len() != n * n {
            return Err(serde::de::Error::custom(format!(
                "expected {} entries for k = {}",
                n * n,
                j.k
            )));
        }
        Ok(RepMatrix {
            k: j.k,
            matrix: Matrix::from_fn(n, n, |r, c| j.entries[r * n + c].clone()),
        })
    }
}

pub fn l_matrix(axis: Axis, k: usize) -> RepMatrix {
    RepMatrix::from_operator(k, |v| apply_l(axis, v))
}

pub fn sl2_matrix(which: Sl2, k: usize) -> RepMatrix {
    RepMatrix::from_operator(k, |v| apply_sl2(which, v))
}

/// `-(l1^2 + l2^2 + l3^2)` on `H_k`.
pub fn casimir(k: usize) -> RepMatrix {
    let sum = Axis::ALL
        .iter()
        .fold(Matrix::zeros(k + 1, k + 1), |acc, &a| {
            let m = l_matrix(a, k).matrix;
            &acc + &(&m * &m)
        });
    RepMatrix {
        k,
        matrix: sum.scale(&-GaussianRational::one()),
    }
}

/// `e_a e_b = sign * e_c` for distinct imaginary units.
pub fn unit_product(a: Axis, b: Axis) -> Option<(i64, Axis)> {
    use Axis::*;
    match (a, b) {
        (E1, E2) => Some((1, E3)),
        (E2, E3) => Some((1, E1)),
        (E3, E1) => Some((1, E2)),
        (E2, E1) => Some((-1, E3)),
        (E3, E2) => Some((-1, E1)),
        (E1, E3) => Some((-1, E2)),
        _ => None,
    }
}

/// Checks `[l_a, l_b] = 2 l_{e_a e_b}` for every pair of distinct axes.
pub fn commutators_hold(k: usize) -> bool {
    Axis::ALL.iter().all(|&a| {
        Axis::ALL.iter().all(|&b| {
            let lhs = l_matrix(a, k).matrix.commutator(&l_matrix(b, k).matrix);
            match unit_product(a, b) {
                Some((sign, c)) => {
                    lhs == l_matrix(c, k)
                        .matrix
                        .scale(&GaussianRational::from(2 * sign))
                }
                None => lhs.is_zero(),
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ket(k: usize, coeffs: &[(usize, GaussianRational)]) -> KetVector {
        let mut v = KetVector::zero(k);
        for (p, c) in coeffs {
            v.coeffs[*p] = c.clone();
        }
        v
    }

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn l_examples() {
        let b = |k, p| KetVector::basis(k, p).unwrap();
        assert_eq!(
            apply_l(Axis::E2, &b(2, 1)),
            ket(2, &[(0, gi(1, 0)), (2, gi(-1, 0))])
        );
        assert!(apply_l(Axis::E1, &b(2, 1)).is_zero());
        assert_eq!(apply_l(Axis::E3, &b(2, 0)), ket(2, &[(1, gi(0, -2))]));
    }

    #[test]
    fn sl2_examples() {
        let b = |k, p| KetVector::basis(k, p).unwrap();
        assert_eq!(apply_sl2(Sl2::Y, &b(3, 0)), ket(3, &[(1, gi(3, 0))]));
        // |0> is the highest weight vector, weight k
        assert_eq!(apply_sl2(Sl2::H, &b(2, 0)), b(2, 0).scale(&gi(2, 0)));
        for k in 0..6 {
            assert!(apply_sl2(Sl2::Y, &b(k, k)).is_zero());
            assert!(apply_sl2(Sl2::X, &b(k, 0)).is_zero());
        }
    }

    #[test]
    fn sl2_relations_and_grading() {
        for k in 0..8 {
            let h = sl2_matrix(Sl2::H, k).matrix;
            let x = sl2_matrix(Sl2::X, k).matrix;
            let y = sl2_matrix(Sl2::Y, k).matrix;
            assert_eq!(h.commutator(&x), x.scale(&gi(2, 0)));
            assert_eq!(h.commutator(&y), y.scale(&gi(-2, 0)));
            assert_eq!(x.commutator(&y), h);
            assert!(h.is_diagonal());
            for p in 0..=k {
                assert_eq!(h.get(p, p), &gi(k as i64 - 2 * p as i64, 0));
                for q in 0..=k {
                    if !y.get(q, p).is_zero() {
                        assert_eq!(q, p + 1);
                    }
                    if !x.get(q, p).is_zero() {
                        assert_eq!(q + 1, p);
                    }
                }
            }
            // weight of |0>|0> on H_k (x) H_k
            assert_eq!(h.get(0, 0) + h.get(0, 0), gi(2 * k as i64, 0));
        }
    }

    #[test]
    fn casimir_examples() {
        assert!(casimir(0).matrix.is_zero());
        assert!(casimir(2).is_scalar(&gi(8, 0)));
        assert!(casimir(3).is_scalar(&gi(15, 0)));
    }

    /// Brute-force Casimir at k = 2 written out by hand from the action on
    /// each basis vector, independent of the matrix helpers.
    #[test]
    fn casimir_k2_by_hand() {
        for p in 0..=2 {
            let v = KetVector::basis(2, p).unwrap();
            let mut total = KetVector::zero(2);
            for a in Axis::ALL {
                total = total.add(&apply_l(a, &apply_l(a, &v)));
            }
            assert_eq!(total.scale(&gi(-1, 0)), v.scale(&gi(8, 0)));
        }
    }

    #[test]
    fn printed_l3_coefficient_breaks_casimir() {
        // l3 |p> = (p - 1) i |p+1> - p i |p-1> at k = 2
        let k = 2usize;
        let l3_printed = RepMatrix::from_operator(k, |v| {
            let mut out = KetVector::zero(k);
            for (p, c) in v.coeffs.iter().enumerate() {
                let p = p as isize;
                out.add_at(p + 1, c * &gi(0, p as i64 - 1));
                out.add_at(p - 1, c * &gi(0, -(p as i64)));
            }
            out
        })
        .matrix;
        let l1 = l_matrix(Axis::E1, k).matrix;
        let l2 = l_matrix(Axis::E2, k).matrix;
        let c = &(&(&l1 * &l1) + &(&l2 * &l2)) + &(&l3_printed * &l3_printed);
        assert_ne!(c.scale(&gi(-1, 0)), Matrix::identity(3).scale(&gi(8, 0)));
        assert_ne!(l2.commutator(&l3_printed), l1.scale(&gi(2, 0)));
    }

    #[test]
    fn l_matrices_are_banded() {
        for k in 0..10 {
            for a in Axis::ALL {
                assert!(l_matrix(a, k).matrix.is_banded(1));
            }
        }
    }

    #[test]
    fn commutators_small_k() {
        for k in 0..6 {
            assert!(commutators_hold(k), "k = {k}");
        }
    }

    #[test]
    fn out_of_range() {
        assert!(KetVector::basis(2, 3).is_err());
        assert_eq!(
            KetVector::basis(2, 2).unwrap().coeff(-1),
            GaussianRational::zero()
        );
        assert_eq!(
            KetVector::basis(2, 2).unwrap().coeff(3),
            GaussianRational::zero()
        );
    }

    #[test]
    fn rep_matrix_json() {
        let m = l_matrix(Axis::E3, 1);
        let s = serde_json::to_string(&m).unwrap();
        assert!(s.starts_with(r#"{"k":1,"entries":[{"re":"0","im":"0"}"#));
        assert_eq!(serde_json::from_str::<RepMatrix>(&s).unwrap(), m);
    }
}
