//! Verification suites over a fixed `p`, as run by `nichols verify`.

use clap::ValueEnum;
use rayon::prelude::*;
use serde::Serialize;

use crate::cyclo::Field;
use crate::fusion::{fusion_map, fusion_map_basis, verify_fusion};
use crate::fusionring::{verify_against_fusion, verify_against_lambda, verify_ring};
use crate::linalg::{accumulate, Vector};
use crate::loop_op::{
    charge_of, coev_coefficient, mu_uv_basis, simples, two_vertex_identification, verify_c_symmetry,
    verify_dual_descriptors, verify_dual_identification, verify_ev_equivariance, verify_loop_projectives,
    verify_loop_simples, verify_multiplicativity, verify_two_vertex_identification, verify_two_vertex_pairing,
    verify_zigzag,
};
use crate::nichols::{verify_hopf, verify_oracles, NicholsElt};
use crate::report::CheckReport;
use crate::ydspace::{
    act_fr, braid_b, braid_b2, braid_b2_diagram, braid_b_inv, coact_vec, monodromy_closed_form, unit_vec,
    yd_axiom_check, BasisVector, MonodromyForm, Tensor, TensorVec, Vertices, YDVec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Hopf,
    Yd,
    Braiding,
    Ribbon,
    Duality,
    Fusion,
    Loop,
    Ring,
    All,
}

impl Suite {
    /// The individual suites `self` stands for, in run order.
    pub fn expand(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![Hopf, Yd, Braiding, Ribbon, Duality, Fusion, Loop, Ring],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        use Suite::*;
        match self {
            Hopf => "hopf",
            Yd => "yd",
            Braiding => "braiding",
            Ribbon => "ribbon",
            Duality => "duality",
            Fusion => "fusion",
            Loop => "loop",
            Ring => "ring",
            All => "all",
        }
    }
}

/// Runs one suite (not `All`) at `p`.
pub fn run_suite(suite: Suite, p: u32) -> Vec<CheckReport> {
    let field = Field::new(p).expect("p >= 2");
    match suite {
        Suite::Hopf => vec![verify_hopf(&field), verify_oracles(&field, 6)],
        Suite::Yd => vec![verify_yd_sectors(p), verify_yd_simple_tensors(p)],
        Suite::Braiding => vec![verify_braiding(p), verify_monodromy(p, MonodromyForm::SignCorrected, MonodromyReading::TensorLevel)],
        Suite::Ribbon => vec![verify_ribbon_morphism(p), verify_ribbon_axiom(p)],
        Suite::Duality => verify_duality(p),
        Suite::Fusion => vec![verify_fusion(p)],
        Suite::Loop => vec![verify_loop_simples(p), verify_loop_projectives(p, mu_uv_basis), verify_multiplicativity(p)],
        Suite::Ring => vec![verify_ring(p), verify_against_fusion(p), verify_against_lambda(p)],
        Suite::All => suite.expand().into_iter().flat_map(|s| run_suite(s, p)).collect(),
    }
}

fn charges(p: u32) -> std::ops::Range<i64> {
    0..2 * p as i64
}

/// Yetter-Drinfeld axiom for every `F(r)` on every basis vector of the one-
/// and two-vertex sectors with charges in `0..2p`.
pub fn verify_yd_sectors(p: u32) -> CheckReport {
    let field = Field::new(p).expect("p >= 2");
    let sp = Vertices::new(&field);
    let mut vectors: Vec<BasisVector> = Vec::new();
    for a in charges(p) {
        vectors.extend((0..p).map(|s| BasisVector::one(a, s)));
        for b in charges(p) {
            vectors.extend(crate::ydspace::two_vertex_basis(p, a, b));
        }
    }
    let oks: Vec<Vec<bool>> = vectors
        .par_iter()
        .map(|v| {
            let u = unit_vec(&field, *v);
            (0..p as usize).map(|r| yd_axiom_check(&sp, &NicholsElt::basis(&field, r), &u)).collect()
        })
        .collect();
    let mut rep = CheckReport::new(format!("yd axiom on sectors p={p}"));
    for (v, ok) in vectors.iter().zip(oks) {
        for (r, ok) in ok.into_iter().enumerate() {
            rep.record(ok, || format!("F({r}) on {v:?}"));
        }
    }
    rep
}

/// Basis of the simple `X(r)_ν` inside `V^a`, `a = r-1-νp`.
fn simple_vectors(r: u32, nu: i64, p: u32) -> Vec<BasisVector> {
    let a = charge_of(r, nu, p);
    (0..r).map(|s| BasisVector::one(a, s)).collect()
}

/// Yetter-Drinfeld axiom on `X(r1)_{ν1} ⊗ X(r2)_{ν2}` for all simples.
pub fn verify_yd_simple_tensors(p: u32) -> CheckReport {
    let field = Field::new(p).expect("p >= 2");
    let sp = Vertices::new(&field);
    let tp = Tensor::new(&sp, &sp);
    let mut rep = CheckReport::new(format!("yd axiom on tensor products of simples p={p}"));
    for (r1, n1) in simples(p) {
        for (r2, n2) in simples(p) {
            for y in simple_vectors(r1, n1, p) {
                for z in simple_vectors(r2, n2, p) {
                    let v = unit_vec(&field, (y, z));
                    for r in 0..p as usize {
                        let ok = yd_axiom_check(&tp, &NicholsElt::basis(&field, r), &v);
                        rep.record(ok, || format!("F({r}) on {y:?} ⊗ {z:?}"));
                    }
                }
            }
        }
    }
    rep
}

fn one_vertex_pairs(p: u32) -> Vec<(BasisVector, BasisVector)> {
    let mut out = Vec::new();
    for a in charges(p) {
        for b in charges(p) {
            for s in 0..p {
                for t in 0..p {
                    out.push((BasisVector::one(a, s), BasisVector::one(b, t)));
                }
            }
        }
    }
    out
}

/// `B` against `B⁻¹` on both sides, `B²` against the single-diagram form,
/// and `B` as a module and comodule map, on all one-vertex pairs.
pub fn verify_braiding(p: u32) -> CheckReport {
    let field = Field::new(p).expect("p >= 2");
    let sp = Vertices::new(&field);
    let tp = Tensor::new(&sp, &sp);
    let mut rep = CheckReport::new(format!("braiding p={p}"));
    let results: Vec<_> = one_vertex_pairs(p)
        .par_iter()
        .map(|&x| {
            let v = unit_vec(&field, x);
            let b = braid_b(&sp, &sp, &v);
            let inverse = braid_b_inv(&sp, &sp, &b) == v && braid_b(&sp, &sp, &braid_b_inv(&sp, &sp, &v)) == v;
            let diagram = braid_b2_diagram(&sp, &sp, &v) == braid_b2(&sp, &sp, &v);
            let module = (1..p as usize).all(|r| braid_b(&sp, &sp, &act_fr(&tp, r, &v)) == act_fr(&tp, r, &b));
            let mut lhs = Vector::new();
            for ((r, w), c) in coact_vec(&tp, &v) {
                for (w2, k) in braid_b(&sp, &sp, &unit_vec(&field, w)) {
                    accumulate(&mut lhs, (r, w2), &(&c * &k));
                }
            }
            let comodule = lhs == coact_vec(&tp, &b);
            (x, [inverse, diagram, module, comodule])
        })
        .collect();
    for (x, oks) in results {
        for (ok, what) in oks.into_iter().zip(["inverse", "diagram form of B²", "module map", "comodule map"]) {
            rep.record(ok, || format!("{what} at {x:?}"));
        }
    }
    rep
}

/// Where the monodromy closed form is compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonodromyReading {
    /// `fusion_map(B²(y ⊗ z))` against the closed form read as two-vertex vectors.
    AfterFusion,
    /// `B²(y ⊗ z)` against the closed form read as one-vertex tensors.
    TensorLevel,
}

/// The closed form of `B²` on every one-vertex basis pair.
pub fn verify_monodromy(p: u32, form: MonodromyForm, reading: MonodromyReading) -> CheckReport {
    let field = Field::new(p).expect("p >= 2");
    let sp = Vertices::new(&field);
    let pi = p as i64;
    let mut rep = CheckReport::new(format!("monodromy closed form ({form:?}, {reading:?}) p={p}"));
    let results: Vec<_> = one_vertex_pairs(p)
        .par_iter()
        .map(|&(y, z)| {
            let (a, s) = (y.charges[0], y.crosses[0] as i64);
            let (b, t) = (z.charges[0], z.crosses[0] as i64);
            let b2 = braid_b2(&sp, &sp, &unit_vec(&field, (y, z)));
            let coeffs = monodromy_closed_form(&field, a, b, s, t, form);
            let mut tensor = TensorVec::new();
            let mut two = YDVec::new();
            let mut in_range = true;
            for (n, c) in coeffs.iter().enumerate() {
                let (n, m) = (n as i64, s + t - n as i64);
                if m >= pi || n >= pi {
                    in_range &= c.is_zero();
                    continue;
                }
                accumulate(&mut tensor, (BasisVector::one(a, m as u32), BasisVector::one(b, n as u32)), c);
                accumulate(&mut two, BasisVector::two(a, b, m as u32, n as u32), c);
            }
            let ok = in_range
                && match reading {
                    MonodromyReading::AfterFusion => two == fusion_map(&field, &b2),
                    MonodromyReading::TensorLevel => tensor == b2,
                };
            ((y, z), ok)
        })
        .collect();
    for (x, ok) in results {
        rep.record(ok, || format!("{x:?}"));
    }
    rep
}

/// `θ` commutes with the action and the coaction on one- and two-vertex
/// sectors.
pub fn verify_ribbon_morphism(p: u32) -> CheckReport {
    let field = Field::new(p).expect("p >= 2");
    let sp = Vertices::new(&field);
    let mut rep = CheckReport::new(format!("ribbon is a module-comodule map p={p}"));
    for a in charges(p) {
        for b in charges(p) {
            for s in 0..p {
                for t in 0..p {
                    for v in [BasisVector::two(a, b, s, t), BasisVector::one(a, s)] {
                        if v.n == 1 && b != 0 {
                            continue;
                        }
                        let u = unit_vec(&field, v);
                        let th = sp.ribbon(&u).expect("one or two vertices");
                        for r in 1..p as usize {
                            let ok = sp.ribbon(&act_fr(&sp, r, &u)).ok() == Some(act_fr(&sp, r, &th));
                            rep.record(ok, || format!("F({r}) at {v:?}"));
                        }
                        let mut lhs = Vector::new();
                        for ((r, w), c) in coact_vec(&sp, &u) {
                            for (w2, k) in sp.ribbon(&unit_vec(&field, w)).expect("one or two vertices") {
                                accumulate(&mut lhs, (r, w2), &(&c * &k));
                            }
                        }
                        rep.record(lhs == coact_vec(&sp, &th), || format!("coaction at {v:?}"));
                    }
                }
            }
        }
    }
    rep
}

/// `θ_{Y⊗Z} = B² ∘ (θ_Y ⊗ θ_Z)`, evaluated through the fusion map, on all
/// `X(r1)_{ν1} ⊗ X(r2)_{ν2}`.
pub fn verify_ribbon_axiom(p: u32) -> CheckReport {
    let field = Field::new(p).expect("p >= 2");
    let sp = Vertices::new(&field);
    let mut rep = CheckReport::new(format!("ribbon axiom p={p}"));
    let th = |w: &BasisVector| sp.ribbon(&unit_vec(&field, *w)).expect("one vertex");
    for (r1, n1) in simples(p) {
        for (r2, n2) in simples(p) {
            for y in simple_vectors(r1, n1, p) {
                for z in simple_vectors(r2, n2, p) {
                    let mut tt = TensorVec::new();
                    for (y2, c) in th(&y) {
                        for (z2, k) in th(&z) {
                            accumulate(&mut tt, (y2, z2), &(&c * &k));
                        }
                    }
                    let lhs = fusion_map(&field, &braid_b2(&sp, &sp, &tt));
                    let rhs = sp.ribbon(&fusion_map_basis(&field, &y, &z)).ok();
                    rep.record(Some(lhs) == rhs, || format!("{y:?} ⊗ {z:?}"));
                }
            }
        }
    }
    rep
}

/// One-vertex zigzags, dual identification and pairing equivariance on every
/// simple; the two-vertex pairing and identification on sectors with
/// charges in `0..p`; coefficient symmetry; dual descriptors.
pub fn verify_duality(p: u32) -> Vec<CheckReport> {
    let field = Field::new(p).expect("p >= 2");
    let mut zig = CheckReport::new(format!("zigzag p={p}"));
    let mut ident = CheckReport::new(format!("one-vertex dual identification p={p}"));
    let mut equi = CheckReport::new(format!("one-vertex pairing equivariance p={p}"));
    for (r, nu) in simples(p) {
        let a = charge_of(r, nu, p);
        zig.merge(verify_zigzag(&field, a));
        ident.merge(verify_dual_identification(&field, a, |s| coev_coefficient(&field, a, s)));
        equi.merge(verify_ev_equivariance(&field, a));
    }
    let mut pairing = CheckReport::new(format!("two-vertex pairing equivariance p={p}"));
    let mut ident2 = CheckReport::new(format!("two-vertex dual identification p={p}"));
    let pi = p as i64;
    for a in 0..pi {
        for b in 0..pi {
            pairing.merge(verify_two_vertex_pairing(&field, a, b));
            ident2.merge(verify_two_vertex_identification(&field, a, b, |s, t| {
                two_vertex_identification(&field, a, b, s, t)
            }));
        }
    }
    vec![zig, ident, equi, pairing, ident2, verify_c_symmetry(&field), verify_dual_descriptors(p)]
}
