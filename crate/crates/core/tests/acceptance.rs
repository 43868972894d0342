//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::time::Instant;

use num_bigint::BigInt;
use spinor_s3::dirac::{
    eigenbasis_abstract, quadratic_check, spectrum_from_blocks, Family, SpectrumRow,
};
use spinor_s3::exactnum::{binomial, factorial, GaussianRational, Rational};
use spinor_s3::geometry::{
    dirac_section, eta_quadrature, exact_tensor_rule, gram_matrix, gram_prediction,
    l2_inner_product, laplace_section, monomial_integral, QuadratureSpec,
};
use spinor_s3::polyring::{Polynomial, SpinorSection, View};
use spinor_s3::repspace::{casimir, commutators_hold};
use spinor_s3::transfer::{
    equivariance_holds, iso_closed_form, iso_recursive, transfer_eigenbasis,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn casimir_scalar() -> Outcome {
    for k in 0..=12usize {
        let value = (k * (k + 2)) as i64;
        ensure(casimir(k).is_scalar(&GaussianRational::from(value)), || {
            format!("k={k}: not {value} Id")
        })?;
    }
    Ok("-(l1^2+l2^2+l3^2) = k(k+2) Id, k = 0..12".into())
}

fn commutators() -> Outcome {
    for k in 0..=12 {
        ensure(commutators_hold(k), || format!("k={k}"))?;
    }
    Ok("[l_i, l_j] = 2 l_{e_i e_j}, k = 0..12".into())
}

fn quadratic() -> Outcome {
    for k in 0..=12 {
        ensure(quadratic_check(k), || format!("k={k}"))?;
    }
    Ok("(Dbar + k)(Dbar - (k+2)) = 0, k = 0..12".into())
}

fn spectrum() -> Outcome {
    for k in 0..=8usize {
        let kr = Rational::from_int(k as i64);
        let plus_value = kr.clone() + Rational::half();
        let minus_value = -kr - Rational::new(3, 2);
        let plus_mult = k * (k + 1);
        let minus_mult = (k + 1) * (k + 2);

        // (a) explicit families
        let (plus, minus) = eigenbasis_abstract(k);
        ensure(
            plus.label == Family::Plus && plus.dirac_eigenvalue == plus_value,
            || format!("k={k}: plus label"),
        )?;
        ensure(minus.dirac_eigenvalue == minus_value, || {
            format!("k={k}: minus label")
        })?;
        ensure(plus.len() == plus_mult && minus.len() == minus_mult, || {
            format!("k={k}: family sizes {} and {}", plus.len(), minus.len())
        })?;
        ensure(plus.verify() && minus.verify(), || {
            format!("k={k}: family member is not an eigenvector")
        })?;

        // (b) brute-force block diagonalization
        let mut expected = Vec::new();
        if plus_mult > 0 {
            expected.push(SpectrumRow {
                k,
                eigenvalue: plus_value,
                multiplicity: plus_mult,
            });
        }
        expected.push(SpectrumRow {
            k,
            eigenvalue: minus_value,
            multiplicity: minus_mult,
        });
        let brute = spectrum_from_blocks(k);
        ensure(brute.as_ref() == Some(&expected), || {
            format!("k={k}: brute force gave {brute:?}")
        })?;
    }
    Ok(
        "k+1/2 (x k(k+1)) and -k-3/2 (x (k+1)(k+2)) by families and by block charpoly, k = 0..8"
            .into(),
    )
}

fn transfer() -> Outcome {
    for k in 0..=8 {
        for p in 0..=k {
            for q in 0..=k {
                let closed = iso_closed_form(k, p, q).map_err(|e| e.to_string())?;
                let rec = iso_recursive(k, p, q).map_err(|e| e.to_string())?;
                ensure(closed == rec, || {
                    format!("k={k} p={p} q={q}: closed form differs from lowering")
                })?;
            }
        }
        ensure(equivariance_holds(k), || format!("k={k}: equivariance"))?;
    }
    Ok("closed form = recursive lowering and equivariance, k = 0..8".into())
}

fn harmonicity() -> Outcome {
    let mut count = 0;
    for k in 0..=8 {
        for p in 0..=k {
            for q in 0..=k {
                let poly = iso_closed_form(k, p, q).map_err(|e| e.to_string())?.poly;
                ensure(poly.laplacian_r4().is_zero(), || {
                    format!("k={k} p={p} q={q}")
                })?;
                ensure(poly.is_homogeneous_of_degree(k as u32), || {
                    format!("k={k} p={p} q={q}: degree")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} images harmonic and homogeneous, k = 0..8"))
}

fn dirac_end_to_end() -> Outcome {
    let e0 = SpinorSection::new(0, Polynomial::one(View::Z), Polynomial::zero(View::Z));
    ensure(
        dirac_section(&e0) == e0.scale_rational(&Rational::new(-3, 2)),
        || "D e0 != -3/2 e0".into(),
    )?;
    let mut count = 0;
    for k in 0..=6 {
        let sections = transfer_eigenbasis(k);
        ensure(sections.len() == 2 * (k + 1) * (k + 1), || {
            format!("k={k}: {} sections", sections.len())
        })?;
        for v in &sections {
            ensure(
                dirac_section(&v.section) == v.section.scale_rational(&v.eigenvalue),
                || format!("k={k} {} q={} p={}", v.family, v.q, v.p),
            )?;
            count += 1;
        }
    }
    Ok(format!(
        "D sigma = lambda sigma exactly for {count} sections, k = 0..6"
    ))
}

fn laplace() -> Outcome {
    let mut count = 0;
    for k in 0..=6i64 {
        let lambda = Rational::from_int(1 - (k + 1) * (k + 1));
        for v in transfer_eigenbasis(k as usize) {
            let s = &v.section;
            ensure(laplace_section(s) == s.scale_rational(&lambda), || {
                format!("k={k} {} q={} p={}", v.family, v.q, v.p)
            })?;
            ensure(
                laplace_section(&dirac_section(s)) == dirac_section(&laplace_section(s)),
                || format!("k={k}: D and Delta do not commute"),
            )?;
            count += 1;
        }
    }
    Ok(format!(
        "Delta sigma = (1-(k+1)^2) sigma and D Delta = Delta D on {count} sections, k = 0..6"
    ))
}

/// `int_0^1 rho^a (1-rho)^b drho` by expanding `(1-rho)^b`.
fn beta_by_expansion(a: u32, b: u32) -> Rational {
    (0..=b).fold(Rational::zero(), |acc, j| {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        acc + Rational::from(binomial(b, j) * BigInt::from(sign))
            / Rational::from_int((a + j + 1) as i64)
    })
}

fn monomials_up_to(d: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for c in 0..=d - a - b {
                for e in 0..=d - a - b - c {
                    out.push([a, b, c, e]);
                }
            }
        }
    }
    out
}

fn integration() -> Outcome {
    let monomials = monomials_up_to(8);
    for &l in &monomials {
        // Hopf coordinates: the angles force l1 = l2 and l3 = l4, gm1 = -z1
        // contributes (-1)^l3, and the radial part is a Beta integral.
        let expect = if l[0] == l[1] && l[2] == l[3] {
            let sign = if l[2] % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            sign * beta_by_expansion(l[2], l[0])
        } else {
            Rational::zero()
        };
        ensure(
            monomial_integral(l).coefficient == GaussianRational::real(expect.clone()),
            || format!("{l:?}"),
        )?;
        if l[0] == l[1] && l[2] == l[3] {
            let factorial_form = Rational::from(factorial(l[0]) * factorial(l[2]))
                / Rational::from(factorial(l[0] + l[2] + 1));
            let sign = if l[3] % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            ensure(expect == sign * factorial_form, || {
                format!("{l:?}: factorial formula")
            })?;
        }
    }
    for k in 0..=12u32 {
        let g = Polynomial::g2().pow(k);
        ensure(
            l2_inner_product(&g, &g).coefficient
                == GaussianRational::real(Rational::new(1, k as i64 + 1)),
            || format!("|g2^{k}|^2"),
        )?;
    }

    let rule = exact_tensor_rule(8);
    let mut worst_rel: f64 = 0.0;
    for &l in &monomials {
        let f = Polynomial::term(View::Z, l, GaussianRational::one());
        let num = eta_quadrature(&f, &rule).map_err(|e| e.to_string())?.value;
        let exact = monomial_integral(l).to_complex();
        let rel = (num - exact).norm() / (1.0 + exact.norm());
        worst_rel = worst_rel.max(rel);
        ensure(rel <= 1e-8, || {
            format!("{l:?}: tensor rule relative error {rel:e}")
        })?;
    }

    let mc = QuadratureSpec::Mc {
        samples: 1_000_000,
        seed: 1,
    };
    let mut worst_z: f64 = 0.0;
    for l in [
        [0, 0, 0, 0],
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [1, 1, 1, 1],
        [2, 2, 0, 0],
        [1, 0, 0, 0],
        [2, 1, 0, 1],
    ] {
        let f = Polynomial::term(View::Z, l, GaussianRational::one());
        let est = eta_quadrature(&f, &mc).map_err(|e| e.to_string())?;
        let se = est.std_error.ok_or("missing standard error")?;
        let dev = (est.value - monomial_integral(l).to_complex()).norm();
        ensure(dev <= 3.0 * se + 1e-12, || {
            format!("{l:?}: Monte Carlo off by {dev:e}, se {se:e}")
        })?;
        if se > 0.0 {
            worst_z = worst_z.max(dev / se);
        }
    }
    Ok(format!(
        "{} monomials exact; tensor rule max rel err {worst_rel:.1e}; MC 1e6 samples within {worst_z:.2} se",
        monomials.len()
    ))
}

fn gram() -> Outcome {
    for k in 0..=5usize {
        let g = gram_matrix(k);
        ensure(g.is_diagonal(), || format!("k={k}: not diagonal"))?;
        let pred = gram_prediction(k);
        let diag = g.diagonal();
        let ratio = diag[0].re.clone() / pred[0].clone();
        for (d, p) in diag.iter().zip(&pred) {
            ensure(d.is_real() && d.re.clone() / p.clone() == ratio, || {
                format!("k={k}: not proportional")
            })?;
        }
    }
    Ok("diagonal and proportional to 1/(C(k,p) C(k,q)), k = 0..5".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("casimir", casimir_scalar),
        ("commutators", commutators),
        ("quadratic relation", quadratic),
        ("spectrum", spectrum),
        ("transfer", transfer),
        ("harmonicity", harmonicity),
        ("dirac eigen-identity", dirac_end_to_end),
        ("laplace eigenvalue", laplace),
        ("integration", integration),
        ("gram structure", gram),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "{}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
