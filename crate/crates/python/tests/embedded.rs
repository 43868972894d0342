use spinor_s3_py::python_module;
use pyo3::prelude::*;

#[test]
fn module_works_inside_an_embedded_interpreter() {
    pyo3::append_to_inittab!(python_module);
    Python::initialize();
    Python::attach(|py| {
        py.run(
            c"
import spinor_s3 as s
e1, e2, e3 = (s.Quaternion.basis(i) for i in (1, 2, 3))
assert e1 * e2 == e3
assert s.spectrum_table(1) == [(0, '-3/2', 2), (1, '3/2', 2), (1, '-5/2', 6)]
assert s.beta_lower('left', s.Polynomial.g2()) == s.Polynomial.g_minus1()
for family, p, q, ev, sec in s.transfer_eigenbasis(1):
    assert sec.dirac() == sec.scale(ev)
assert s.monomial_integral(1, 1, 0, 0) == ('1/2', '0')
try:
    s.iso_closed_form(1, 2, 0)
except ValueError:
    pass
else:
    raise AssertionError('out-of-range index accepted')
",
            None,
            None,
        )
        .unwrap();
    });
}
