//! The 2p-dimensional fusion algebra on generators `𝔛(r)_ν`, `ν ∈ Z₂`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::classify::Kind;
use crate::cyclo::CycNum;
use crate::fusion::fuse_simples;
use crate::loop_op::{lambda_closed, simples};
use crate::report::CheckReport;

/// Integer combination of the generators `𝔛(r)_ν`, keyed by `(r, ν mod 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingElt {
    pub p: u32,
    pub coeffs: BTreeMap<(u32, u8), i64>,
}

fn nu2(nu: i64) -> u8 {
    nu.rem_euclid(2) as u8
}

impl RingElt {
    pub fn zero(p: u32) -> Self {
        RingElt { p, coeffs: BTreeMap::new() }
    }

    /// `𝔛(r)_ν`.
    pub fn simple(p: u32, r: u32, nu: i64) -> Self {
        assert!((1..=p).contains(&r), "r={r} outside 1..={p}");
        let mut x = RingElt::zero(p);
        x.add_term(r, nu, 1);
        x
    }

    /// `𝔓(r)_ν = 2𝔛(r)_ν + 2𝔛(p-r)_{ν+1}` for `r < p`, `𝔛(p)_ν` for `r = p`.
    pub fn projective(p: u32, r: u32, nu: i64) -> Self {
        assert!((1..=p).contains(&r), "r={r} outside 1..={p}");
        let mut x = RingElt::zero(p);
        if r == p {
            x.add_term(p, nu, 1);
        } else {
            x.add_term(r, nu, 2);
            x.add_term(p - r, nu + 1, 2);
        }
        x
    }

    pub fn unit(p: u32) -> Self {
        RingElt::simple(p, 1, 0)
    }

    pub fn add_term(&mut self, r: u32, nu: i64, c: i64) {
        let key = (r, nu2(nu));
        let e = self.coeffs.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&key);
        }
    }

    pub fn add(&self, other: &RingElt) -> RingElt {
        let mut out = self.clone();
        for (&(r, n), &c) in &other.coeffs {
            out.add_term(r, n as i64, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> RingElt {
        let mut out = RingElt::zero(self.p);
        for (&(r, n), &c) in &self.coeffs {
            out.add_term(r, n as i64, c * k);
        }
        out
    }

    /// All `2p` generators in `(r, ν)` order.
    pub fn basis(p: u32) -> Vec<RingElt> {
        (1..=p).flat_map(|r| (0..2).map(move |n| RingElt::simple(p, r, n))).collect()
    }
}

impl fmt::Display for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&(r, n), &c)| if c == 1 { format!("X({r})_{n}") } else { format!("{c}X({r})_{n}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Product of two generators.
pub fn basis_product(p: u32, r1: u32, nu1: i64, r2: u32, nu2: i64) -> RingElt {
    let (p, r1, r2) = (p as i64, r1 as i64, r2 as i64);
    let nu = nu1 + nu2;
    let mut out = RingElt::zero(p as u32);
    let mut s = (r1 - r2).abs() + 1;
    while s <= p - 1 - (r1 + r2 - p).abs() {
        out.add_term(s as u32, nu, 1);
        s += 2;
    }
    let mut s = 2 * p - r1 - r2 + 1;
    while s <= p {
        out = out.add(&RingElt::projective(p as u32, s as u32, nu));
        s += 2;
    }
    out
}

/// Bilinear extension of [`basis_product`].
pub fn ring_multiply(x: &RingElt, y: &RingElt) -> RingElt {
    assert_eq!(x.p, y.p, "ring elements over different p");
    let mut out = RingElt::zero(x.p);
    for (&(r1, n1), &c1) in &x.coeffs {
        for (&(r2, n2), &c2) in &y.coeffs {
            out = out.add(&basis_product(x.p, r1, n1 as i64, r2, n2 as i64).scale(c1 * c2));
        }
    }
    out
}

/// Unit, simple current, non-negativity, grading, commutativity and
/// associativity over all generator pairs and triples.
pub fn verify_ring(p: u32) -> CheckReport {
    let mut rep = CheckReport::new(format!("ring p={p}"));
    let basis = RingElt::basis(p);
    let unit = RingElt::unit(p);
    let current = RingElt::simple(p, 1, 1);
    rep.record(ring_multiply(&current, &current) == unit, || "X(1)_1 squared".into());
    // graded by the parity of the charge r-1-νp
    let grade = |x: &RingElt| -> Option<u8> {
        let g: Vec<u8> = x.coeffs.keys().map(|&(r, n)| ((r as i64 - 1 + n as i64 * p as i64).rem_euclid(2)) as u8).collect();
        g.first().copied().filter(|g0| g.iter().all(|gi| gi == g0))
    };
    let products: Vec<Vec<RingElt>> = basis.iter().map(|x| basis.iter().map(|y| ring_multiply(x, y)).collect()).collect();
    for (i, x) in basis.iter().enumerate() {
        rep.record(ring_multiply(&unit, x) == *x, || format!("unit on {x}"));
        for (j, y) in basis.iter().enumerate() {
            let xy = &products[i][j];
            rep.record(*xy == products[j][i], || format!("{x} * {y} commutes"));
            rep.record(xy.coeffs.values().all(|&c| c > 0), || format!("{x} * {y} non-negative"));
            let (gx, gy) = (grade(x).unwrap(), grade(y).unwrap());
            rep.record(grade(xy) == Some((gx + gy) % 2), || format!("{x} * {y} graded"));
            for (k, z) in basis.iter().enumerate() {
                let left = ring_multiply(xy, z);
                let right = ring_multiply(x, &products[j][k]);
                rep.record(left == right, || format!("({x} * {y}) * {z}"));
            }
        }
    }
    rep
}

/// Module-level fusion of simples, with `X ↦ 𝔛`, `P ↦ 𝔓` and `ν` mod 2,
/// against [`ring_multiply`], over `ν ∈ 0..4`.
pub fn verify_against_fusion(p: u32) -> CheckReport {
    let mut rep = CheckReport::new(format!("ring vs fusion p={p}"));
    for (r1, n1) in simples(p) {
        for (r2, n2) in simples(p) {
            let case = || format!("X({r1})_{n1} * X({r2})_{n2}");
            let Ok(fused) = fuse_simples(r1, n1, r2, n2, p) else {
                rep.record(false, case);
                continue;
            };
            let mut image = RingElt::zero(p);
            for d in &fused.summands {
                image = image.add(&match d.kind {
                    Kind::P => RingElt::projective(p, d.r, d.nu_raw),
                    _ => RingElt::simple(p, d.r, d.nu_raw),
                });
            }
            rep.record(image == basis_product(p, r1, n1, r2, n2), case);
        }
    }
    rep
}

/// Evaluates a ring element under `𝔛(r)_ν ↦ λ(Y; X(r)_ν)` for the simple
/// `Y = X(r1)_{ν1}`.
pub fn character(x: &RingElt, r1: u32, nu1: i64) -> CycNum {
    let field = crate::cyclo::Field::new(x.p).expect("p >= 2");
    let mut out = field.zero();
    for (&(r, n), &c) in &x.coeffs {
        out += &lambda_closed(r1, nu1, r, n as i64, x.p).expect("valid generator").scale(c);
    }
    out
}

/// For every simple `Y`, the assignment `𝔛(r)_ν ↦ λ(Y; X(r)_ν)` is
/// multiplicative on all generator products.
pub fn verify_against_lambda(p: u32) -> CheckReport {
    let mut rep = CheckReport::new(format!("ring characters p={p}"));
    let basis = RingElt::basis(p);
    for (r1, n1) in simples(p) {
        let vals: Vec<CycNum> = basis.iter().map(|x| character(x, r1, n1)).collect();
        rep.record(character(&RingElt::unit(p), r1, n1).is_one(), || format!("unit at Y=X({r1})_{n1}"));
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let ok = character(&ring_multiply(x, y), r1, n1) == &vals[i] * &vals[j];
                rep.record(ok, || format!("character of {x} * {y} at Y=X({r1})_{n1}"));
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_products() {
        let x = RingElt::simple(2, 2, 0);
        let mut want = RingElt::zero(2);
        want.add_term(1, 0, 2);
        want.add_term(1, 1, 2);
        assert_eq!(ring_multiply(&x, &x), want);
        let x = RingElt::simple(3, 2, 0);
        let mut want = RingElt::zero(3);
        want.add_term(1, 0, 1);
        want.add_term(3, 0, 1);
        assert_eq!(ring_multiply(&x, &x), want);
        let y = RingElt::simple(5, 3, 1);
        assert_eq!(ring_multiply(&RingElt::unit(5), &y), y);
    }

    #[test]
    fn axioms_small() {
        for p in 2..=4 {
            assert!(verify_ring(p).passed());
        }
    }
}
