use pyo3::prelude::*;

fn with_module(code: &std::ffi::CStr) {
    static INIT: std::sync::Once = std::sync::Once::new();
    INIT.call_once(|| {
        pyo3::append_to_inittab!(nichols);
        Python::initialize();
    });
    Python::attach(|py| py.run(code, None, None).map_err(|e| e.display(py)).unwrap());
}

use nichols::nichols;

#[test]
fn scalars_and_labels() {
    with_module(
        c"
import nichols
f = nichols.Field(4)
assert f.zeta_pow(8) == f.integer(1) * f.zeta_pow(-8) * f.zeta_pow(16)
assert f.q_int(4).is_zero()
m = nichols.classify(0, 0, 2, 5)
assert (m.kind, m.r, m.nu, m.dim) == ('L', 2, 1, 5), m
",
    );
}

#[test]
fn fusion_ring_and_suites() {
    with_module(
        c"
import nichols
a = nichols.fuse(2, 0, 2, 0, 2)
b = nichols.fuse(2, 0, 2, 0, 2, brute=True)
assert [repr(x) for x in a] == [repr(x) for x in b]
x = nichols.RingElt.simple(2, 2, 0)
assert x * x == nichols.RingElt.projective(2, 1, 0)
assert all(failed == 0 for _, _, failed, _ in nichols.verify('fusion', 2))
try:
    nichols.verify('nope', 2)
    raise AssertionError('accepted an unknown suite')
except ValueError:
    pass
",
    );
}
