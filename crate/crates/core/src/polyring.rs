//! Polynomials on R^4 with Gaussian-rational coefficients.
//!
//! A polynomial is stored in one of two coordinate systems:
//!
//! * the x-view, monomials in `x0, x1, x2, x3`;
//! * the z-view, monomials in the generators `g2 = z2`, `g2b = conj(z2)`,
//!   `gm1 = -z1` and `g1b = conj(z1)`, where `z1 = x0 + x1 i` and
//!   `z2 = x2 + x3 i`.
//!
//! Both views describe the same functions; [`Polynomial::change_view`] is an
//! exact ring isomorphism between them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::exactnum::{GaussianRational, Rational, RationalQuaternion};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum View {
    X,
    Z,
}

impl View {
    pub fn variable_names(self) -> [&'static str; 4] {
        match self {
            View::X => ["x0", "x1", "x2", "x3"],
            View::Z => ["g2", "g2b", "gm1", "g1b"],
        }
    }
}

/// Exponent tuple. Ordered graded-lexicographically: first by total degree,
/// then lexicographically on the exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> [u32; 4] {
        self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    view: View,
    terms: BTreeMap<Monomial, GaussianRational>,
}

fn accumulate(terms: &mut BTreeMap<Monomial, GaussianRational>, m: Monomial, c: GaussianRational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl Polynomial {
    pub fn zero(view: View) -> Self {
        Polynomial {
            view,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(view: View, c: GaussianRational) -> Self {
        Polynomial::term(view, [0; 4], c)
    }

    pub fn one(view: View) -> Self {
        Polynomial::constant(view, GaussianRational::one())
    }

    pub fn term(view: View, exps: [u32; 4], c: GaussianRational) -> Self {
        let mut p = Polynomial::zero(view);
        accumulate(&mut p.terms, Monomial(exps), c);
        p
    }

    /// The `idx`-th coordinate function of `view`.
    pub fn variable(view: View, idx: usize) -> Self {
        let mut e = [0; 4];
        e[idx] = 1;
        Polynomial::term(view, e, GaussianRational::one())
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms(
        view: View,
        terms: impl IntoIterator<Item = ([u32; 4], GaussianRational)>,
    ) -> Self {
        let mut p = Polynomial::zero(view);
        for (e, c) in terms {
            accumulate(&mut p.terms, Monomial(e), c);
        }
        p
    }

    pub fn g2() -> Self {
        Polynomial::variable(View::Z, 0)
    }

    pub fn g2_bar() -> Self {
        Polynomial::variable(View::Z, 1)
    }

    pub fn g_minus1() -> Self {
        Polynomial::variable(View::Z, 2)
    }

    pub fn g1_bar() -> Self {
        Polynomial::variable(View::Z, 3)
    }

    /// `z1 = x0 + x1 i`, stored in the z-view as `-gm1`.
    pub fn z1() -> Self {
        -Polynomial::g_minus1()
    }

    /// `z2 = x2 + x3 i`.
    pub fn z2() -> Self {
        Polynomial::g2()
    }

    pub fn x(idx: usize) -> Self {
        Polynomial::variable(View::X, idx)
    }

    pub fn view(&self) -> View {
        self.view
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: [u32; 4]) -> GaussianRational {
        self.terms.get(&Monomial(exps)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree if every term has the same total degree. The zero polynomial
    /// is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn is_homogeneous_of_degree(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.view);
        }
        Polynomial {
            view: self.view,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GaussianRational::real(r.clone()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Polynomial::one(self.view);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Returns `self` expressed in `target`, leaving the function unchanged.
    pub fn change_view(&self, target: View) -> Self {
        if target == self.view {
            return self.clone();
        }
        let images = substitution_images(self.view);
        self.substitute(&images, target)
    }

    /// Replaces the `a`-th variable by `images[a]` (all in view `target`).
    fn substitute(&self, images: &[Polynomial; 4], target: View) -> Self {
        let max_exp: [u32; 4] =
            std::array::from_fn(|a| self.terms.keys().map(|m| m.0[a]).max().unwrap_or(0));
        let powers: Vec<Vec<Polynomial>> = (0..4)
            .map(|a| {
                let mut v = vec![Polynomial::one(target)];
                for e in 1..=max_exp[a] as usize {
                    let next = &v[e - 1] * &images[a];
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let [a, b, cc, d] = m.0;
            let prod = &(&powers[0][a as usize] * &powers[1][b as usize])
                * &(&powers[2][cc as usize] * &powers[3][d as usize]);
            for (pm, pc) in prod.terms {
                accumulate(&mut out, pm, &pc * c);
            }
        }
        Polynomial {
            view: target,
            terms: out,
        }
    }

    /// Complex conjugate of the function.
    pub fn conj(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| match self.view {
            View::X => (m.0, c.conj()),
            View::Z => {
                let [a, b, gm, gb] = m.0;
                // conj(gm1) = -g1b and conj(g1b) = -gm1
                let c = if (gm + gb) % 2 == 1 {
                    -c.conj()
                } else {
                    c.conj()
                };
                ([b, a, gb, gm], c)
            }
        });
        Polynomial::from_terms(self.view, terms)
    }

    /// Pointwise real part `(p + conj p) / 2`.
    pub fn real_part(&self) -> Self {
        (self + &self.conj()).scale_rational(&Rational::half())
    }

    /// Pointwise imaginary part `(p - conj p) / (2i)`.
    pub fn imag_part(&self) -> Self {
        (self - &self.conj()).scale(&GaussianRational::new(
            Rational::zero(),
            Rational::new(-1, 2),
        ))
    }

    /// Partial derivative with respect to the `idx`-th variable of the
    /// current view.
    pub fn partial(&self, idx: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[idx] > 0)
            .map(|(m, c)| {
                let mut e = m.0;
                let n = e[idx];
                e[idx] -= 1;
                (e, c.scale(&Rational::from(n as i64)))
            });
        Polynomial::from_terms(self.view, terms)
    }

    /// Euclidean Laplacian `sum_j d^2/dx_j^2`, returned in the input view.
    pub fn laplacian_r4(&self) -> Self {
        let x = self.change_view(View::X);
        let lap = (0..4).fold(Polynomial::zero(View::X), |acc, j| {
            &acc + &x.partial(j).partial(j)
        });
        lap.change_view(self.view)
    }

    pub fn is_harmonic(&self) -> bool {
        self.laplacian_r4().is_zero()
    }

    /// Applies a derivation of the polynomial ring.
    pub fn derive(&self, d: &Derivation) -> Self {
        let d = d.in_view(self.view);
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            for a in 0..4 {
                let n = m.0[a];
                if n == 0 {
                    continue;
                }
                let base = c.scale(&Rational::from(n as i64));
                for (im, ic) in &d.images[a].terms {
                    let mut e = m.0;
                    e[a] -= 1;
                    for j in 0..4 {
                        e[j] += im.0[j];
                    }
                    accumulate(&mut out, Monomial(e), &base * ic);
                }
            }
        }
        Polynomial {
            view: self.view,
            terms: out,
        }
    }

    /// Exact value at the point `x = (x0, x1, x2, x3)`.
    pub fn evaluate(&self, x: &[Rational; 4]) -> GaussianRational {
        let values: [GaussianRational; 4] = match self.view {
            View::X => x.clone().map(GaussianRational::real),
            View::Z => {
                let [x0, x1, x2, x3] = x.clone();
                [
                    GaussianRational::new(x2.clone(), x3.clone()),
                    GaussianRational::new(x2, -&x3),
                    GaussianRational::new(-&x0, -&x1),
                    GaussianRational::new(x0, -x1),
                ]
            }
        };
        let mut total = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for a in 0..4 {
                if m.0[a] > 0 {
                    v = &v * &values[a].pow(m.0[a]);
                }
            }
            total += &v;
        }
        total
    }

    /// Floating-point value at the point with complex coordinates `(z1, z2)`.
    pub fn evaluate_complex(&self, z1: Complex64, z2: Complex64) -> Complex64 {
        let values: [Complex64; 4] = match self.view {
            View::X => [
                Complex64::from(z1.re),
                Complex64::from(z1.im),
                Complex64::from(z2.re),
                Complex64::from(z2.im),
            ],
            View::Z => [z2, z2.conj(), -z1, z1.conj()],
        };
        self.terms
            .iter()
            .map(|(m, c)| {
                let coeff = Complex64::new(c.re.to_f64(), c.im.to_f64());
                (0..4).fold(coeff, |acc, a| acc * values[a].powu(m.0[a]))
            })
            .sum()
    }

    fn combine(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let other = other.change_view(self.view);
        let mut terms = self.terms.clone();
        for (m, c) in other.terms {
            accumulate(&mut terms, m, if negate { -c } else { c });
        }
        Polynomial {
            view: self.view,
            terms,
        }
    }
}

/// Images of the variables of `from` written in the other view.
fn substitution_images(from: View) -> [Polynomial; 4] {
    let g = |re: i64, im: i64| GaussianRational::from_ints(re, im);
    let half = |re: i64, im: i64| GaussianRational::new(Rational::new(re, 2), Rational::new(im, 2));
    match from {
        View::Z => [
            // g2 = x2 + i x3
            Polynomial::from_terms(View::X, [([0, 0, 1, 0], g(1, 0)), ([0, 0, 0, 1], g(0, 1))]),
            // g2b = x2 - i x3
            Polynomial::from_terms(View::X, [([0, 0, 1, 0], g(1, 0)), ([0, 0, 0, 1], g(0, -1))]),
            // gm1 = -x0 - i x1
            Polynomial::from_terms(
                View::X,
                [([1, 0, 0, 0], g(-1, 0)), ([0, 1, 0, 0], g(0, -1))],
            ),
            // g1b = x0 - i x1
            Polynomial::from_terms(View::X, [([1, 0, 0, 0], g(1, 0)), ([0, 1, 0, 0], g(0, -1))]),
        ],
        View::X => [
            // x0 = (g1b - gm1) / 2
            Polynomial::from_terms(
                View::Z,
                [([0, 0, 1, 0], half(-1, 0)), ([0, 0, 0, 1], half(1, 0))],
            ),
            // x1 = i (gm1 + g1b) / 2
            Polynomial::from_terms(
                View::Z,
                [([0, 0, 1, 0], half(0, 1)), ([0, 0, 0, 1], half(0, 1))],
            ),
            // x2 = (g2 + g2b) / 2
            Polynomial::from_terms(
                View::Z,
                [([1, 0, 0, 0], half(1, 0)), ([0, 1, 0, 0], half(1, 0))],
            ),
            // x3 = -i (g2 - g2b) / 2
            Polynomial::from_terms(
                View::Z,
                [([1, 0, 0, 0], half(0, -1)), ([0, 1, 0, 0], half(0, 1))],
            ),
        ],
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.combine(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let rhs = rhs.change_view(self.view);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e = std::array::from_fn(|i| ma.0[i] + mb.0[i]);
                accumulate(&mut terms, Monomial(e), ca * cb);
            }
        }
        Polynomial {
            view: self.view,
            terms,
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            view: self.view,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -(self.clone())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = self.view.variable_names();
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut s = c.to_string();
                for (a, name) in names.iter().enumerate() {
                    match m.0[a] {
                        0 => {}
                        1 => s.push_str(&format!("*{name}")),
                        n => s.push_str(&format!("*{name}^{n}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.view, self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: [u32; 4],
    coeff: GaussianRational,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    view: View,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialJson {
            view: self.view,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    exp: m.0,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let p = PolynomialJson::deserialize(deserializer)?;
        Ok(Polynomial::from_terms(
            p.view,
            p.terms.into_iter().map(|t| (t.exp, t.coeff)),
        ))
    }
}

/// A derivation of the polynomial ring, determined by the images of the four
/// variables of `view`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    view: View,
    images: [Polynomial; 4],
}

impl Derivation {
    pub fn new(view: View, images: [Polynomial; 4]) -> Self {
        let images = images.map(|p| p.change_view(view));
        Derivation { view, images }
    }

    /// The derivation `p -> dp(A x)` for the linear vector field `x -> A x`
    /// on R^4.
    pub fn from_linear_field(matrix: &[[Rational; 4]; 4], view: View) -> Self {
        let images: [Polynomial; 4] = std::array::from_fn(|a| {
            Polynomial::from_terms(
                View::X,
                (0..4).map(|b| {
                    let mut e = [0; 4];
                    e[b] = 1;
                    (e, GaussianRational::real(matrix[a][b].clone()))
                }),
            )
        });
        Derivation {
            view: View::X,
            images,
        }
        .in_view(view)
    }

    pub fn view(&self) -> View {
        self.view
    }

    pub fn images(&self) -> &[Polynomial; 4] {
        &self.images
    }

    /// Same derivation, acting on the variables of `target`.
    pub fn in_view(&self, target: View) -> Derivation {
        if target == self.view {
            return self.clone();
        }
        let images = std::array::from_fn(|a| {
            Polynomial::variable(target, a)
                .change_view(self.view)
                .derive(self)
                .change_view(target)
        });
        Derivation {
            view: target,
            images,
        }
    }

    /// Complex linear combination `sum c_j d_j`.
    pub fn linear_combination(view: View, parts: &[(GaussianRational, &Derivation)]) -> Derivation {
        let mut images: [Polynomial; 4] = std::array::from_fn(|_| Polynomial::zero(view));
        for (c, d) in parts {
            let d = d.in_view(view);
            for a in 0..4 {
                images[a] = &images[a] + &d.images[a].scale(c);
            }
        }
        Derivation { view, images }
    }
}

/// An H-valued polynomial map `sigma = f e0 + g e2`, complex scalars acting by
/// left multiplication with `a + b e1`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinorSection {
    pub k: u32,
    pub f: Polynomial,
    pub g: Polynomial,
}

impl SpinorSection {
    pub fn new(k: u32, f: Polynomial, g: Polynomial) -> Self {
        let g = g.change_view(f.view());
        SpinorSection { k, f, g }
    }

    /// The constant section with value `q`.
    pub fn constant(view: View, q: &RationalQuaternion) -> Self {
        let (f, g) = q.complex_split();
        SpinorSection::new(
            0,
            Polynomial::constant(view, f),
            Polynomial::constant(view, g),
        )
    }

    pub fn view(&self) -> View {
        self.f.view()
    }

    pub fn change_view(&self, view: View) -> Self {
        SpinorSection {
            k: self.k,
            f: self.f.change_view(view),
            g: self.g.change_view(view),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    pub fn evaluate(&self, x: &[Rational; 4]) -> RationalQuaternion {
        RationalQuaternion::assemble(&self.f.evaluate(x), &self.g.evaluate(x))
    }

    /// Left multiplication by a complex scalar (acts on both components).
    pub fn scale(&self, c: &GaussianRational) -> Self {
        SpinorSection {
            k: self.k,
            f: self.f.scale(c),
            g: self.g.scale(c),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&GaussianRational::real(r.clone()))
    }

    pub fn is_homogeneous_of_degree(&self, k: u32) -> bool {
        self.f.is_homogeneous_of_degree(k) && self.g.is_homogeneous_of_degree(k)
    }

    pub fn is_harmonic(&self) -> bool {
        self.f.is_harmonic() && self.g.is_harmonic()
    }

    pub fn map(&self, mut op: impl FnMut(&Polynomial) -> Polynomial) -> Self {
        SpinorSection {
            k: self.k,
            f: op(&self.f),
            g: op(&self.g),
        }
    }

    pub fn to_quaternion_polynomial(&self) -> QuaternionPolynomial {
        QuaternionPolynomial {
            c: [
                self.f.real_part(),
                self.f.imag_part(),
                self.g.real_part(),
                self.g.imag_part(),
            ],
        }
    }
}

impl Add for &SpinorSection {
    type Output = SpinorSection;
    fn add(self, rhs: &SpinorSection) -> SpinorSection {
        SpinorSection {
            k: self.k,
            f: &self.f + &rhs.f,
            g: &self.g + &rhs.g,
        }
    }
}

impl Sub for &SpinorSection {
    type Output = SpinorSection;
    fn sub(self, rhs: &SpinorSection) -> SpinorSection {
        SpinorSection {
            k: self.k,
            f: &self.f - &rhs.f,
            g: &self.g - &rhs.g,
        }
    }
}

impl fmt::Debug for SpinorSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SpinorSection(k={}, f={:?}, g={:?})",
            self.k, self.f, self.g
        )
    }
}

/// Quaternion-valued polynomial `sum_a c[a] e_a` with real-valued component
/// functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionPolynomial {
    pub c: [Polynomial; 4],
}

impl QuaternionPolynomial {
    /// Pointwise right multiplication by a constant quaternion, expanded
    /// through the Hamilton product of basis units.
    pub fn right_multiply(&self, q: &RationalQuaternion) -> Self {
        let view = self.c[0].view();
        let mut out: [Polynomial; 4] = std::array::from_fn(|_| Polynomial::zero(view));
        for a in 0..4 {
            let prod = RationalQuaternion::basis(a).multiply(q);
            for b in 0..4 {
                if !prod.c[b].is_zero() {
                    out[b] = &out[b] + &self.c[a].scale_rational(&prod.c[b]);
                }
            }
        }
        QuaternionPolynomial { c: out }
    }

    pub fn derive(&self, d: &Derivation) -> Self {
        QuaternionPolynomial {
            c: std::array::from_fn(|a| self.c[a].derive(d)),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        QuaternionPolynomial {
            c: std::array::from_fn(|a| &self.c[a] + &other.c[a]),
        }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        QuaternionPolynomial {
            c: std::array::from_fn(|a| self.c[a].scale_rational(r)),
        }
    }

    /// Back to `(f, g)` form: `f = c0 + i c1`, `g = c2 + i c3`.
    pub fn to_section(&self, k: u32) -> SpinorSection {
        let i = GaussianRational::i();
        SpinorSection::new(
            k,
            &self.c[0] + &self.c[1].scale(&i),
            &self.c[2] + &self.c[3].scale(&i),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn arb_poly(view: View, max_deg: u32) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(
            (prop::array::uniform4(0..=max_deg), -5i64..5, -5i64..5),
            0..6,
        )
        .prop_map(move |ts| {
            Polynomial::from_terms(
                view,
                ts.into_iter()
                    .filter(|(e, _, _)| e.iter().sum::<u32>() <= max_deg)
                    .map(|(e, a, b)| (e, gi(a, b))),
            )
        })
    }

    fn arb_homogeneous(view: View, k: u32) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((0..=k, 0..=k, 0..=k, -5i64..5, -5i64..5), 1..5).prop_map(move |ts| {
            Polynomial::from_terms(
                view,
                ts.into_iter()
                    .filter(|(a, b, c, _, _)| a + b + c <= k)
                    .map(|(a, b, c, re, im)| ([a, b, c, k - a - b - c], gi(re, im))),
            )
        })
    }

    fn arb_point() -> impl Strategy<Value = [Rational; 4]> {
        prop::array::uniform4((-6i64..6, 1i64..5).prop_map(|(n, d)| Rational::new(n, d)))
    }

    #[test]
    fn arithmetic_examples() {
        let g2 = Polynomial::g2();
        assert_eq!(&g2 * &g2, Polynomial::term(View::Z, [2, 0, 0, 0], 1.into()));

        let z1 = Polynomial::z1();
        let z2 = Polynomial::z2();
        let lhs = &(&z1 + &z2) * &(&z1 - &z2);
        assert_eq!(lhs, &(&z1 * &z1) - &(&z2 * &z2));

        let i = GaussianRational::i();
        assert_eq!(g2.scale(&i).scale(&i), -g2.clone());
    }

    #[test]
    fn view_change_examples() {
        let x2 = Polynomial::x(2).change_view(View::Z);
        let expected =
            (&Polynomial::g2() + &Polynomial::g2_bar()).scale_rational(&Rational::half());
        assert_eq!(x2, expected);

        let gm1 = Polynomial::g_minus1().change_view(View::X);
        assert_eq!(
            gm1,
            Polynomial::from_terms(
                View::X,
                [([1, 0, 0, 0], gi(-1, 0)), ([0, 1, 0, 0], gi(0, -1))]
            )
        );
    }

    #[test]
    fn laplacian_examples() {
        let x0 = Polynomial::x(0);
        let x1 = Polynomial::x(1);
        assert!((&(&x0 * &x0) - &(&x1 * &x1)).laplacian_r4().is_zero());
        assert_eq!(
            (&x0 * &x0).laplacian_r4(),
            Polynomial::constant(View::X, 2.into())
        );
        for k in 0..=8 {
            assert!(Polynomial::g2().pow(k).laplacian_r4().is_zero(), "g2^{k}");
        }
        // |z2|^2 is not harmonic: 4 d_z2 d_z2b
        assert_eq!(
            (&Polynomial::g2() * &Polynomial::g2_bar()).laplacian_r4(),
            Polynomial::constant(View::Z, 4.into())
        );
    }

    #[test]
    fn evaluation_examples() {
        let r = |n| Rational::from_int(n);
        assert_eq!(
            Polynomial::g2().evaluate(&[r(0), r(0), r(1), r(0)]),
            GaussianRational::one()
        );
        assert_eq!(
            Polynomial::g_minus1().evaluate(&[r(1), r(0), r(0), r(0)]),
            -GaussianRational::one()
        );
        let p = &Polynomial::g1_bar() * &Polynomial::g2();
        let z = p.evaluate_complex(Complex64::new(0.0, 1.0), Complex64::new(2.0, 0.0));
        assert!((z - Complex64::new(0.0, -2.0)).norm() < 1e-12);
    }

    #[test]
    fn conjugation_and_parts() {
        let p = &Polynomial::g_minus1().scale(&gi(2, 3)) + &Polynomial::g2().pow(2);
        let x = p.change_view(View::X);
        assert_eq!(p.conj().change_view(View::X), x.conj());
        let sum = &p.real_part() + &p.imag_part().scale(&GaussianRational::i());
        assert_eq!(sum, p);
    }

    #[test]
    fn json_schema() {
        let p = Polynomial::g2().scale(&gi(0, -1));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"view":"z","terms":[{"exp":[1,0,0,0],"coeff":{"re":"0","im":"-1"}}]}"#
        );
        let back: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let sec = SpinorSection::new(1, Polynomial::g2(), Polynomial::zero(View::Z));
        let s = serde_json::to_string(&sec).unwrap();
        assert!(s.starts_with(r#"{"k":1,"f":{"view":"z""#));
        assert_eq!(serde_json::from_str::<SpinorSection>(&s).unwrap(), sec);
    }

    #[test]
    fn term_order_is_graded() {
        let p = Polynomial::from_terms(
            View::X,
            [
                ([2, 0, 0, 0], gi(1, 0)),
                ([0, 0, 0, 1], gi(1, 0)),
                ([0, 1, 0, 0], gi(1, 0)),
            ],
        );
        let order: Vec<[u32; 4]> = p.terms().map(|(m, _)| m.0).collect();
        assert_eq!(order, vec![[0, 0, 0, 1], [0, 1, 0, 0], [2, 0, 0, 0]]);
    }

    #[test]
    fn quaternion_polynomial_roundtrip() {
        let sec = SpinorSection::new(1, Polynomial::g2().scale(&gi(1, 2)), Polynomial::g1_bar());
        assert_eq!(sec.to_quaternion_polynomial().to_section(1), sec);
        let r = |n| Rational::from_int(n);
        let x = [r(1), r(2), r(-1), r(3)];
        let q = RationalQuaternion::from_ints([1, -1, 2, 5]);
        let lhs = sec
            .to_quaternion_polynomial()
            .right_multiply(&q)
            .to_section(1)
            .evaluate(&x);
        assert_eq!(lhs, sec.evaluate(&x).multiply(&q));
    }

    proptest! {
        #[test]
        fn view_roundtrip(p in arb_poly(View::X, 4), q in arb_poly(View::Z, 4)) {
            prop_assert_eq!(p.change_view(View::Z).change_view(View::X), p.clone());
            prop_assert_eq!(q.change_view(View::X).change_view(View::Z), q.clone());
        }

        #[test]
        fn view_change_is_ring_isomorphism(a in arb_poly(View::Z, 3), b in arb_poly(View::Z, 3)) {
            let (ax, bx) = (a.change_view(View::X), b.change_view(View::X));
            prop_assert_eq!((&a * &b).change_view(View::X), &ax * &bx);
            prop_assert_eq!((&a + &b).change_view(View::X), &ax + &bx);
        }

        #[test]
        fn evaluation_agrees_across_views(p in arb_poly(View::Z, 4), x in arb_point()) {
            prop_assert_eq!(p.evaluate(&x), p.change_view(View::X).evaluate(&x));
        }

        #[test]
        fn laplacian_is_linear_and_lowers_degree(a in arb_homogeneous(View::X, 4), b in arb_homogeneous(View::X, 4)) {
            let la = a.laplacian_r4();
            prop_assert!(la.is_zero() || la.homogeneous_degree() == Some(2));
            prop_assert_eq!((&a + &b).laplacian_r4(), &la + &b.laplacian_r4());
        }

        #[test]
        fn homogeneous_scaling(p in arb_homogeneous(View::Z, 3), x in arb_point(), t in (-4i64..4, 1i64..4)) {
            let t = Rational::new(t.0, t.1);
            let tx = x.clone().map(|c| &c * &t);
            let expected = p.evaluate(&x).scale(&t.pow(3));
            prop_assert_eq!(p.evaluate(&tx), expected);
        }
    }
}
