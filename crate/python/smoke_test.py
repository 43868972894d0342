"""Smoke test for the spinor_s3 extension module.

Build and install first, e.g.
    pip install maturin
    maturin build --release -m crates/python/Cargo.toml
    pip install target/wheels/spinor_s3-*.whl
"""

import cmath
import json
import math

import spinor_s3 as s


def main():
    e1, e2, e3 = (s.Quaternion.basis(i) for i in (1, 2, 3))
    assert e1 * e2 == e3
    assert e2 * e1 == s.Quaternion(0, 0, 0, -1)
    assert s.Quaternion(1, 2, 3, 4).norm() == "30"
    assert s.Quaternion(1, 2, 3, 4).complex_split() == (("1", "2"), ("3", "4"))

    rows = s.spectrum_table(2)
    assert rows == [(0, "-3/2", 2), (1, "3/2", 2), (1, "-5/2", 6), (2, "5/2", 6), (2, "-7/2", 12)], rows
    assert s.spectrum_brute_force(2) == [(2, "5/2", 6), (2, "-7/2", 12)]
    assert all(s.casimir_is_scalar(k) and s.commutators_hold(k) and s.quadratic_check(k) for k in range(6))

    plus, minus = s.eigenbasis_abstract(1)
    assert plus["label"] == "plus" and plus["dirac_eigenvalue"] == "3/2" and len(plus["members"]) == 2
    assert len(minus["members"]) == 6

    g2, gm1 = s.Polynomial.g2(), s.Polynomial.g_minus1()
    assert s.beta_lower("left", g2) == gm1
    assert s.beta_lower("left", gm1).is_zero()
    for p in range(4):
        for q in range(4):
            img = s.iso_closed_form(3, p, q)
            assert img == s.iso_recursive(3, p, q)
            assert img.is_harmonic() and img.degree() == 3

    sections = s.transfer_eigenbasis(2)
    assert len(sections) == 18
    for family, p, q, eigenvalue, section in sections:
        assert section.dirac() == section.scale(eigenvalue), (family, p, q)
        assert section.laplace() == section.scale(-8)

    assert s.monomial_integral(0, 0, 0, 0) == ("1", "0")
    assert s.monomial_integral(2, 2, 0, 0) == ("1/3", "0")
    assert s.l2_inner_product(g2 ** 3, g2 ** 3) == ("1/4", "0")

    value, se = s.eta_quadrature(g2 * s.Polynomial.g2_bar(), json.dumps({"rule": "tensor", "n_angular": 4, "n_radial": 3}))
    assert se is None and abs(value - math.pi ** 2) < 1e-9
    value, se = s.eta_quadrature(s.Polynomial.constant(1), json.dumps({"rule": "mc", "samples": 10000, "seed": 5}))
    assert abs(value - 2 * math.pi ** 2) < 1e-9 and se == 0.0

    z = cmath.exp(0.3j) * math.sqrt(0.4)
    w = cmath.exp(-1.1j) * math.sqrt(0.6)
    assert abs(gm1.evaluate(z, w) + z) < 1e-12

    gram = s.gram_matrix(1)
    assert gram[0][0] == ("1/2", "0") and gram[0][1] == ("0", "0")

    code, out, _ = s.run_cli(["spectrum", "--k-max", "0", "--format", "json"])
    assert code == 0 and json.loads(out) == [{"k": 0, "eigenvalue": "-3/2", "multiplicity": 2}]
    code, _, err = s.run_cli(["spectrum", "--k-max", "999"])
    assert code == 2 and "cap" in err

    print("python smoke test passed")


if __name__ == "__main__":
    main()
