//! The twelve acceptance criteria, each at its stated range and time limit.
//! Every test writes one `PASS`/`FAIL` line straight to stderr so the lines
//! show up even when libtest captures output.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use nichols_core::classify::{classify_coinvariant, decompose_space, Kind, REFERENCE_TABLE_P5};
use nichols_core::cyclo::Field;
use nichols_core::fusion::verify_fusion;
use nichols_core::fusionring::{verify_against_fusion, verify_against_lambda, verify_ring};
use nichols_core::loop_op::{
    charge_of, coev_coefficient, mu_closed, simples, two_vertex_identification_printed, verify_c_symmetry,
    verify_dual_descriptors, verify_dual_identification, verify_loop_projectives, verify_loop_simples,
    verify_multiplicativity, verify_two_vertex_identification, verify_zigzag,
};
use nichols_core::nichols::{verify_hopf, verify_oracles};
use nichols_core::report::CheckReport;
use nichols_core::suites::{verify_monodromy, verify_ribbon_axiom, verify_yd_sectors, verify_yd_simple_tensors, MonodromyReading};
use nichols_core::ydspace::MonodromyForm;

fn report(criterion: u32, title: &str, limit: Duration, run: impl FnOnce() -> (bool, String)) {
    let start = Instant::now();
    let (ok, detail) = run();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let status = if ok && in_time { "PASS" } else { "FAIL" };
    let timing = format!("{:.2}s of {}s", elapsed.as_secs_f64(), limit.as_secs());
    let _ = writeln!(std::io::stderr(), "criterion {criterion:>2} {status}: {title} ({timing}) {detail}");
    assert!(ok, "criterion {criterion} failed: {detail}");
    assert!(in_time, "criterion {criterion} exceeded its time limit: {timing}");
}

/// Merged outcome of several reports, with the first failures listed.
fn summarize(reports: Vec<CheckReport>) -> (bool, String) {
    let ok = reports.iter().all(|r| r.passed());
    let total: usize = reports.iter().map(|r| r.total).sum();
    let failed: usize = reports.iter().map(|r| r.failed).sum();
    let mut detail = format!("[{} checks, {} failed]", total, failed);
    for r in reports.iter().filter(|r| !r.passed()).take(4) {
        detail += &format!(" {}: {}/{} failed, e.g. {:?};", r.name, r.failed, r.total, r.failures.first());
    }
    (ok, detail)
}

#[test]
fn criterion_01_hopf_axioms() {
    report(1, "Hopf axioms p=2..6, shuffle and half-twist oracles to degree 6", Duration::from_secs(10), || {
        let mut reps = Vec::new();
        for p in 2..=6 {
            let f = Field::new(p).unwrap();
            reps.push(verify_hopf(&f));
            reps.push(verify_oracles(&f, 6));
        }
        summarize(reps)
    });
}

#[test]
fn criterion_02_yetter_drinfeld_axiom() {
    report(2, "YD axiom on 1- and 2-vertex sectors p=2..5, simple tensors p=2..3", Duration::from_secs(60), || {
        let mut reps: Vec<CheckReport> = (2..=5).map(verify_yd_sectors).collect();
        reps.extend((2..=3).map(verify_yd_simple_tensors));
        summarize(reps)
    });
}

#[test]
fn criterion_03_decomposition_counts() {
    report(3, "one- and two-vertex decomposition counts p=2..6", Duration::from_secs(60), || {
        let mut rep = CheckReport::new("decomposition");
        for p in 2..=6u32 {
            let pu = p as u64;
            let one = decompose_space(1, p).unwrap();
            rep.record(one.total_dim == pu * pu, || format!("one-vertex total p={p}"));
            rep.record(one.count(Kind::S, p) == 1, || format!("one-vertex S p={p}"));
            for r in 1..p {
                rep.record(one.count(Kind::V, r) == 1, || format!("one-vertex V[{r}] p={p}"));
            }
            let two = decompose_space(2, p).unwrap();
            rep.record(two.total_dim == pu.pow(4), || format!("two-vertex total p={p}"));
            rep.record(two.count(Kind::S, p) == pu * pu, || format!("two-vertex S p={p}"));
            for r in 1..p {
                let ru = r as u64;
                rep.record(two.count(Kind::V, r) == 2 * ru * (pu - ru), || format!("V[{r}] p={p}"));
                rep.record(two.count(Kind::P, r) == (pu - ru).pow(2), || format!("P[{r}] p={p}"));
            }
            // aggregates from the actual counts
            let v_total = two.modules_of(Kind::V);
            let p_total = two.modules_of(Kind::P);
            rep.record(3 * v_total == pu * (pu * pu - 1), || format!("V aggregate p={p}: {v_total}"));
            rep.record(6 * p_total == pu * (pu - 1) * (2 * pu - 1), || format!("P aggregate p={p}: {p_total}"));
        }
        summarize(vec![rep])
    });
}

#[test]
fn criterion_04_classification_table() {
    report(4, "classification table at p=5 against the 75 published cells", Duration::from_secs(5), || {
        let mut rep = CheckReport::new("classification table");
        for &(a, b, t, kind, r, nu) in REFERENCE_TABLE_P5.iter() {
            let d = classify_coinvariant(a, b, t, 5).unwrap();
            rep.record((d.kind, d.r, d.nu_raw) == (kind, r, nu), || format!("({a},{b},{t}): got {d}, published {kind}{r}_{nu}"));
        }
        summarize(vec![rep])
    });
}

#[test]
fn criterion_05_fusion_theorem() {
    report(5, "closed fusion equals brute-force decomposition p=2..5", Duration::from_secs(300), || {
        summarize((2..=5).map(verify_fusion).collect())
    });
}

#[test]
fn criterion_06_monodromy_closed_form() {
    report(6, "monodromy closed form as printed, p=2..4", Duration::from_secs(120), || {
        let readings = [MonodromyReading::AfterFusion, MonodromyReading::TensorLevel];
        let mut matching = Vec::new();
        let mut all = Vec::new();
        for reading in readings {
            let reps: Vec<CheckReport> = (2..=4).map(|p| verify_monodromy(p, MonodromyForm::Printed, reading)).collect();
            if reps.iter().all(|r| r.passed()) {
                matching.push(format!("{reading:?}"));
            }
            all.extend(reps);
        }
        let (_, detail) = summarize(all);
        (!matching.is_empty(), format!("matching reading: {:?} {detail}", matching))
    });
}

#[test]
fn criterion_07_ribbon_axiom() {
    report(7, "ribbon axiom through the fusion map on simple pairs p=2..4", Duration::from_secs(120), || {
        summarize((2..=4).map(verify_ribbon_axiom).collect())
    });
}

#[test]
fn criterion_08_duality() {
    report(8, "zigzags, dual-basis identifications, c-symmetry, dual descriptors p=2..4", Duration::from_secs(120), || {
        let mut reps = Vec::new();
        for p in 2..=4u32 {
            let field = Field::new(p).unwrap();
            for (r, nu) in simples(p) {
                let a = charge_of(r, nu, p);
                reps.push(verify_zigzag(&field, a));
                reps.push(verify_dual_identification(&field, a, |s| coev_coefficient(&field, a, s)));
            }
            let pi = p as i64;
            for a in 0..pi {
                for b in 0..pi {
                    reps.push(verify_two_vertex_identification(&field, a, b, |s, t| {
                        two_vertex_identification_printed(&field, a, b, s, t)
                    }));
                }
            }
            reps.push(verify_c_symmetry(&field));
            reps.push(verify_dual_descriptors(p));
        }
        summarize(reps)
    });
}

#[test]
fn criterion_09_loop_operator() {
    report(9, "loop operator on simples and projectives with the closed λ and μ, p=2..4", Duration::from_secs(300), || {
        let mut reps = Vec::new();
        for p in 2..=4 {
            reps.push(verify_loop_simples(p));
            reps.push(verify_loop_projectives(p, mu_closed));
        }
        summarize(reps)
    });
}

#[test]
fn criterion_10_multiplicativity() {
    report(10, "χ_W∘χ_Z = χ_{W⊗Z} on all simple triples p=2..4", Duration::from_secs(120), || {
        summarize((2..=4).map(verify_multiplicativity).collect())
    });
}

#[test]
fn criterion_11_fusion_ring() {
    report(11, "fusion ring axioms p<=10, against fusion p=2..5, against λ p=2..4", Duration::from_secs(30), || {
        let mut reps: Vec<CheckReport> = (2..=10).map(verify_ring).collect();
        reps.extend((2..=5).map(verify_against_fusion));
        reps.extend((2..=4).map(verify_against_lambda));
        summarize(reps)
    });
}

#[test]
fn criterion_12_cli_determinism() {
    report(12, "two runs of `verify --p 3 --suite all` are byte-identical and exit 0", Duration::from_secs(600), || {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_nichols"))
                .args(["verify", "--p", "3", "--suite", "all", "--no-cache"])
                .output()
                .expect("binary runs")
        };
        let (first, second) = (run(), run());
        let same = first.stdout == second.stdout;
        let codes = (first.status.code(), second.status.code());
        (same && codes == (Some(0), Some(0)) && !first.stdout.is_empty(), format!("identical={same} exit codes={codes:?}"))
    });
}
