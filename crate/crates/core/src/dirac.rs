//! The shifted Dirac operator `Dbar = -sum_i (l_i .) e_i` on
//! `H (x)_C (H_k (x) H_k)`.
//!
//! `Dbar` only acts on the first ket factor, so the space splits into blocks
//! `H^q_k = H (x)_C (H_k (x) |q>)` of complex dimension `2(k+1)` with basis
//! `e_r (x) |p>`, `r in {0, 2}`. On a block
//!
//! ```text
//! Dbar(e0 (x) |p>) =  (2p - k) e0 (x) |p> - 2p      e2 (x) |p-1>
//! Dbar(e2 (x) |p>) = -(2p - k) e2 (x) |p> - 2(k - p) e0 (x) |p+1>
//! ```
//!
//! and the Dirac operator itself is `D = Dbar - 3/2`.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{Axis, GaussianRational, Rational, RationalQuaternion};
use crate::linalg::{integer_spectrum, IntegerSpectrum, Matrix};
use crate::repspace::{apply_l, KetVector};

/// The quaternion slot `e_r` of a basis vector `e_r (x) |p>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    E0,
    E2,
}

impl Slot {
    pub const ALL: [Slot; 2] = [Slot::E0, Slot::E2];

    fn offset(self, k: usize) -> usize {
        match self {
            Slot::E0 => 0,
            Slot::E2 => k + 1,
        }
    }

    pub fn quaternion_index(self) -> usize {
        match self {
            Slot::E0 => 0,
            Slot::E2 => 2,
        }
    }
}

/// Element of the block `H^q_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorVector {
    k: usize,
    q: usize,
    coeffs: Vec<GaussianRational>,
}

impl SpinorVector {
    pub fn zero(k: usize, q: usize) -> Self {
        SpinorVector {
            k,
            q,
            coeffs: vec![GaussianRational::zero(); 2 * (k + 1)],
        }
    }

    pub fn basis(k: usize, q: usize, slot: Slot, p: usize) -> Result<Self> {
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
        let mut v = SpinorVector::zero(k, q);
        v.coeffs[slot.offset(k) + p] = GaussianRational::one();
        Ok(v)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn coeff(&self, slot: Slot, p: usize) -> &GaussianRational {
        &self.coeffs[slot.offset(self.k) + p]
    }

    /// Coefficients ordered `e0 (x) |0..=k>` then `e2 (x) |0..=k>`.
    pub fn as_slice(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_zero)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        SpinorVector {
            k: self.k,
            q: self.q,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.k, self.q), (other.k, other.q));
        SpinorVector {
            k: self.k,
            q: self.q,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    fn add_at(&mut self, slot: Slot, p: isize, c: GaussianRational) {
        if let Ok(p) = usize::try_from(p) {
            if p <= self.k && !c.is_zero() {
                let idx = slot.offset(self.k) + p;
                self.coeffs[idx] += &c;
            }
        }
    }

    /// Nonzero `(slot, p, coefficient)` entries.
    pub fn entries(&self) -> impl Iterator<Item = (Slot, usize, &GaussianRational)> {
        Slot::ALL
            .into_iter()
            .flat_map(move |s| (0..=self.k).map(move |p| (s, p, self.coeff(s, p))))
            .filter(|(_, _, c)| !c.is_zero())
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    r: usize,
    p: usize,
    c: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct SpinorVectorJson {
    k: usize,
    q: usize,
    coeffs: Vec<EntryJson>,
}

impl Serialize for SpinorVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SpinorVectorJson {
            k: self.k,
            q: self.q,
            coeffs: self
                .entries()
                .map(|(s, p, c)| EntryJson {
                    r: s.quaternion_index(),
                    p,
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SpinorVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let j = SpinorVectorJson::deserialize(deserializer)?;
        let mut v = SpinorVector::zero(j.k, j.q);
        for e in j.coeffs {
            let slot = match e.r {
                0 => Slot::E0,
                2 => Slot::E2,
                r => {
                    return Err(serde::de::Error::custom(format!(
                        "slot r must be 0 or 2, got {r}"
                    )))
                }
            };
            if e.p > j.k {
                return Err(serde::de::Error::custom(format!(
                    "p = {} exceeds k = {}",
                    e.p, j.k
                )));
            }
            v.add_at(slot, e.p as isize, e.c);
        }
        Ok(v)
    }
}

/// `Dbar` from the closed basis formulas.
pub fn dbar_apply(v: &SpinorVector) -> SpinorVector {
    let k = v.k as i64;
    let mut out = SpinorVector::zero(v.k, v.q);
    for (slot, p, c) in v.entries() {
        let pz = p as i64;
        let pi = p as isize;
        match slot {
            Slot::E0 => {
                out.add_at(Slot::E0, pi, c * &GaussianRational::from(2 * pz - k));
                out.add_at(Slot::E2, pi - 1, c * &GaussianRational::from(-2 * pz));
            }
            Slot::E2 => {
                out.add_at(Slot::E2, pi, c * &GaussianRational::from(k - 2 * pz));
                out.add_at(Slot::E0, pi + 1, c * &GaussianRational::from(-2 * (k - pz)));
            }
        }
    }
    out
}

/// `Dbar` evaluated from its definition `-sum_i (l_i sigma) e_i`, using the
/// ket action and literal quaternion products.
pub fn dbar_first_principles(v: &SpinorVector) -> SpinorVector {
    let mut out = SpinorVector::zero(v.k, v.q);
    for (slot, p, c) in v.entries() {
        let e_r = RationalQuaternion::basis(slot.quaternion_index());
        let ket = KetVector::basis(v.k, p).expect("p <= k");
        for axis in Axis::ALL {
            let image = apply_l(axis, &ket);
            for (target, m) in image.coeffs().iter().enumerate() {
                if m.is_zero() {
                    continue;
                }
                let h = (c * m)
                    .to_quaternion()
                    .multiply(&e_r)
                    .multiply(&axis.unit());
                let (f, g) = h.complex_split();
                out.add_at(Slot::E0, target as isize, -f);
                out.add_at(Slot::E2, target as isize, -g);
            }
        }
    }
    out
}

/// Matrix of `Dbar` on one block; the same for every `q`.
pub fn dbar_block_matrix(k: usize) -> Matrix {
    let n = 2 * (k + 1);
    let columns: Vec<SpinorVector> = Slot::ALL
        .into_iter()
        .flat_map(|s| {
            (0..=k).map(move |p| dbar_apply(&SpinorVector::basis(k, 0, s, p).expect("in range")))
        })
        .collect();
    Matrix::from_fn(n, n, |i, j| columns[j].coeffs[i].clone())
}

/// `(Dbar + k)(Dbar - (k + 2)) = 0` on the block, as an exact matrix identity.
pub fn quadratic_check(k: usize) -> bool {
    let m = dbar_block_matrix(k);
    let n = m.rows();
    let id = Matrix::identity(n);
    let kk = k as i64;
    let a = &m + &id.scale(&GaussianRational::from(kk));
    let b = &m - &id.scale(&GaussianRational::from(kk + 2));
    (&a * &b).is_zero()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Dirac eigenvalue `k + 1/2`.
    Plus,
    /// Dirac eigenvalue `-k - 3/2`.
    Minus,
}

impl Family {
    /// Eigenvalue of `D = Dbar - 3/2` on `V_k`.
    pub fn dirac_eigenvalue(self, k: usize) -> Rational {
        let k = Rational::from_int(k as i64);
        match self {
            Family::Plus => k + Rational::half(),
            Family::Minus => -k - Rational::new(3, 2),
        }
    }

    /// Eigenvalue of `Dbar`.
    pub fn dbar_eigenvalue(self, k: usize) -> i64 {
        match self {
            Family::Plus => k as i64 + 2,
            Family::Minus => -(k as i64),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Plus => "plus",
            Family::Minus => "minus",
        })
    }
}

/// One eigenvector, labelled by the invariant span
/// `{e0 (x) |p>, e2 (x) |p-1>}` it lives in (`p = 0..=k+1`) and by `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub p: usize,
    pub q: usize,
    pub vector: SpinorVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenFamily {
    pub k: usize,
    pub label: Family,
    pub dirac_eigenvalue: Rational,
    pub members: Vec<FamilyMember>,
}

impl EigenFamily {
    /// Every member satisfies `Dbar v = (eigenvalue + 3/2) v` exactly.
    pub fn verify(&self) -> bool {
        let lambda = GaussianRational::from(self.label.dbar_eigenvalue(self.k));
        self.members
            .iter()
            .all(|m| !m.vector.is_zero() && dbar_apply(&m.vector) == m.vector.scale(&lambda))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The explicit eigenvectors on `H (x) (H_k (x) H_k)`, ordered by `(q, p)`.
pub fn eigenbasis_abstract(k: usize) -> (EigenFamily, EigenFamily) {
    let basis = |q, s, p| SpinorVector::basis(k, q, s, p).expect("in range");
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for q in 0..=k {
        for p in 1..=k {
            let v = basis(q, Slot::E0, p).sub(&basis(q, Slot::E2, p - 1));
            plus.push(FamilyMember { p, q, vector: v });
        }
        minus.push(FamilyMember {
            p: 0,
            q,
            vector: basis(q, Slot::E0, 0),
        });
        for p in 1..=k {
            let a = GaussianRational::from(p as i64 - k as i64 - 1);
            let b = GaussianRational::from(p as i64);
            let v = basis(q, Slot::E0, p)
                .scale(&a)
                .sub(&basis(q, Slot::E2, p - 1).scale(&b));
            minus.push(FamilyMember { p, q, vector: v });
        }
        minus.push(FamilyMember {
            p: k + 1,
            q,
            vector: basis(q, Slot::E2, k),
        });
    }
    let family = |label: Family, members| EigenFamily {
        k,
        label,
        dirac_eigenvalue: label.dirac_eigenvalue(k),
        members,
    };
    (family(Family::Plus, plus), family(Family::Minus, minus))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub k: usize,
    pub eigenvalue: Rational,
    pub multiplicity: usize,
}

/// Dirac eigenvalues on each `V_k`, `k = 0..=k_max`, with complex
/// multiplicities counted from the explicit families. Families with no
/// members produce no row.
pub fn spectrum_table(k_max: usize) -> Vec<SpectrumRow> {
    let mut rows = Vec::new();
    for k in 0..=k_max {
        let (plus, minus) = eigenbasis_abstract(k);
        for fam in [plus, minus] {
            if !fam.is_empty() {
                rows.push(SpectrumRow {
                    k,
                    multiplicity: fam.len(),
                    eigenvalue: fam.dirac_eigenvalue,
                });
            }
        }
    }
    rows
}

/// Exact eigen-analysis of the `Dbar` block, independent of the family lists.
pub fn block_spectrum(k: usize) -> IntegerSpectrum {
    integer_spectrum(&dbar_block_matrix(k)).expect("block matrix is square")
}

/// Spectrum rows for `V_k` obtained from [`block_spectrum`]: each block
/// eigenvalue `mu` gives the Dirac eigenvalue `mu - 3/2` with multiplicity
/// multiplied by the `k + 1` values of `q`. `None` if the block is not
/// diagonalizable over the integers.
pub fn spectrum_from_blocks(k: usize) -> Option<Vec<SpectrumRow>> {
    let s = block_spectrum(k);
    if !s.is_diagonalizable() {
        return None;
    }
    let mut rows: Vec<SpectrumRow> = s
        .eigenvalues
        .iter()
        .map(|e| SpectrumRow {
            k,
            eigenvalue: Rational::from(e.value.clone()) - Rational::new(3, 2),
            multiplicity: e.geometric * (k + 1),
        })
        .collect();
    rows.sort_by(|a, b| b.eigenvalue.cmp(&a.eigenvalue));
    Some(rows)
}
