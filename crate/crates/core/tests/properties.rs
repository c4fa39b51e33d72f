use proptest::prelude::*;

use nichols_core::classify::{classify_coinvariant, condition_families, generate_submodule, Kind};
use nichols_core::cli::{render, Cli, Document, Format};
use nichols_core::cyclo::{CycNum, Field};
use nichols_core::fusion::fuse_closed;
use nichols_core::fusionring::{ring_multiply, RingElt};
use nichols_core::loop_op::{charge_of, chi_apply, LoopForm};
use nichols_core::nichols::NicholsElt;
use nichols_core::ydspace::{act_fr, coact_vec, unit_vec, BasisVector, Vertices, YdSpace};

use clap::Parser;

fn element(field: &Field, coeffs: &[i64]) -> CycNum {
    let mut x = field.zero();
    for (k, c) in coeffs.iter().enumerate() {
        x += &(field.from_int(*c) * field.zeta_pow(k as i64));
    }
    x
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    let scale = 1.0 + a.0.abs().max(a.1.abs());
    (a.0 - b.0).abs() <= 1e-9 * scale && (a.1 - b.1).abs() <= 1e-9 * scale
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(p in 2u32..=7, x in prop::collection::vec(-5i64..=5, 1..8),
                    y in prop::collection::vec(-5i64..=5, 1..8), z in prop::collection::vec(-5i64..=5, 1..8)) {
        let f = Field::new(p).unwrap();
        let (x, y, z) = (element(&f, &x), element(&f, &y), element(&f, &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        // floating-point embedding
        let (xr, xi) = x.to_complex();
        let (yr, yi) = y.to_complex();
        prop_assert!(close((&x * &y).to_complex(), (xr * yr - xi * yi, xr * yi + xi * yr)));
    }

    #[test]
    fn zeta_pow_is_a_homomorphism(p in 2u32..=8, j in -60i64..60, k in -60i64..60) {
        let f = Field::new(p).unwrap();
        prop_assert_eq!(f.zeta_pow(j) * f.zeta_pow(k), f.zeta_pow(j + k));
        prop_assert!(f.zeta_pow(4 * p as i64).is_one());
    }

    #[test]
    fn divided_powers_multiply(p in 2u32..=7, r in 0usize..7, s in 0usize..7) {
        let f = Field::new(p).unwrap();
        let p = p as usize;
        prop_assume!(r < p && s < p);
        let prod = NicholsElt::basis(&f, r).product(&NicholsElt::basis(&f, s));
        if r + s < p {
            let want = NicholsElt::basis(&f, r + s).scale(&f.q_binom((r + s) as i64, r as i64));
            prop_assert_eq!(prod, want);
        } else {
            prop_assert!(prod.is_zero());
        }
    }

    #[test]
    fn action_is_a_module(p in 2u32..=5, a in -10i64..10, b in -10i64..10, s in 0u32..5, t in 0u32..5,
                          r in 0usize..5, m in 0usize..5, two in any::<bool>()) {
        prop_assume!(s < p && t < p && r < p as usize && m < p as usize && r + m < p as usize);
        let f = Field::new(p).unwrap();
        let sp = Vertices::new(&f);
        let v = unit_vec(&f, if two { BasisVector::two(a, b, s, t) } else { BasisVector::one(a, s) });
        let lhs = act_fr(&sp, r, &act_fr(&sp, m, &v));
        let rhs: nichols_core::ydspace::YDVec = act_fr(&sp, r + m, &v)
            .into_iter()
            .map(|(k, c)| (k, c * f.q_binom((r + m) as i64, r as i64)))
            .collect();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(act_fr(&sp, r, &v), sp.act_fr_iterated(r, &v));
    }

    #[test]
    fn coaction_is_coassociative(p in 2u32..=5, a in -10i64..10, b in -10i64..10, s in 0u32..5, t in 0u32..5) {
        prop_assume!(s < p && t < p);
        let f = Field::new(p).unwrap();
        let sp = Vertices::new(&f);
        let v = BasisVector::two(a, b, s, t);
        // (Δ ⊗ id)δ = (id ⊗ δ)δ, compared as maps (i, j, basis) → coefficient
        let mut left = std::collections::BTreeMap::new();
        for (r, w, c) in sp.coact(&v) {
            for (&(i, j), k) in NicholsElt::basis(&f, r).coproduct().terms() {
                let e = left.entry((i, j, w)).or_insert_with(|| f.zero());
                *e += &(&c * k);
            }
        }
        let mut right = std::collections::BTreeMap::new();
        for (i, w, c) in sp.coact(&v) {
            for ((j, w2), k) in coact_vec(&sp, &unit_vec(&f, w)) {
                let e = right.entry((i, j, w2)).or_insert_with(|| f.zero());
                *e += &(&c * &k);
            }
        }
        left.retain(|_, c: &mut CycNum| !c.is_zero());
        right.retain(|_, c: &mut CycNum| !c.is_zero());
        prop_assert_eq!(left, right);
        // counit
        let zero_part: Vec<_> = sp.coact(&v).into_iter().filter(|(r, _, _)| *r == 0).collect();
        prop_assert_eq!(zero_part.len(), 1);
        prop_assert_eq!(zero_part[0].1, v);
    }

    #[test]
    fn one_vertex_action_depends_on_charge_mod_p(p in 2u32..=6, a in -12i64..12, s in 0u32..6, r in 0usize..6) {
        prop_assume!(s < p && r < p as usize);
        let f = Field::new(p).unwrap();
        let sp = Vertices::new(&f);
        let strip = |v: Vec<(BasisVector, CycNum)>| -> Vec<(u32, CycNum)> {
            v.into_iter().map(|(b, c)| (b.crosses[0], c)).collect()
        };
        let here = strip(sp.act_basis(r, &BasisVector::one(a, s)));
        let shifted = strip(sp.act_basis(r, &BasisVector::one(a + p as i64, s)));
        prop_assert_eq!(here, shifted);
    }

    #[test]
    fn classification_is_consistent(p in 2u32..=6, a in 0i64..6, b in 0i64..6, t in 0i64..6) {
        prop_assume!(a < p as i64 && b < p as i64 && t < p as i64);
        let fam = condition_families(a, b, t, p);
        prop_assert_eq!(fam.iter().filter(|x| **x).count(), 1);
        let f = Field::new(p).unwrap();
        let sp = Vertices::new(&f);
        let d = classify_coinvariant(a, b, t, p).unwrap();
        let (_, g) = generate_submodule(&sp, &BasisVector::two(a, b, 0, t as u32)).unwrap();
        prop_assert_eq!((d.kind, d.r, d.nu()), (g.kind, g.r, g.nu()));
        if d.kind == Kind::L {
            // its bottom partner sits r steps further down the column
            let partner = classify_coinvariant(a, b, t + d.r as i64, p).unwrap();
            prop_assert_eq!((partner.kind, partner.r), (Kind::B, p - d.r));
        }
    }

    #[test]
    fn fusion_closed_form_invariants(p in 2u32..=8, r1 in 1u32..=8, r2 in 1u32..=8, n1 in -4i64..4, n2 in -4i64..4) {
        prop_assume!(r1 <= p && r2 <= p);
        let x = fuse_closed(r1, n1, r2, n2, p).unwrap();
        let y = fuse_closed(r2, n2, r1, n1, p).unwrap();
        prop_assert_eq!(x.key(), y.key());
        prop_assert_eq!(x.dim(), r1 * r2);
        for d in &x.summands {
            prop_assert_eq!(d.nu(), (n1 + n2).rem_euclid(4) as u8);
        }
    }

    #[test]
    fn loop_commutes_with_the_action(p in 2u32..=3, rz in 1u32..=3, nz in 0i64..4,
                                     a in 0i64..6, b in 0i64..6, s in 0u32..3, t in 0u32..3) {
        prop_assume!(rz <= p && s < p && t < p);
        let f = Field::new(p).unwrap();
        let sp = Vertices::new(&f);
        let az = charge_of(rz, nz, p);
        let y = unit_vec(&f, BasisVector::two(a, b, s, t));
        let chi = |v: &nichols_core::ydspace::YDVec| chi_apply(&sp, az, v, LoopForm::RelativeAntipode);
        prop_assert_eq!(chi(&act_fr(&sp, 1, &y)), act_fr(&sp, 1, &chi(&y)));
        let mut lhs = nichols_core::linalg::Vector::new();
        for ((r, w), c) in coact_vec(&sp, &y) {
            for (w2, k) in chi(&unit_vec(&f, w)) {
                nichols_core::linalg::accumulate(&mut lhs, (r, w2), &(&c * &k));
            }
        }
        prop_assert_eq!(lhs, coact_vec(&sp, &chi(&y)));
    }

    #[test]
    fn ring_axioms_on_random_elements(p in 2u32..=7,
                                      x in prop::collection::vec((1u32..=7, 0i64..2, -3i64..=3), 0..5),
                                      y in prop::collection::vec((1u32..=7, 0i64..2, -3i64..=3), 0..5),
                                      z in prop::collection::vec((1u32..=7, 0i64..2, -3i64..=3), 0..5)) {
        let build = |terms: &[(u32, i64, i64)]| {
            let mut e = RingElt::zero(p);
            for &(r, n, c) in terms {
                if r <= p {
                    e.add_term(r, n, c);
                }
            }
            e
        };
        let (x, y, z) = (build(&x), build(&y), build(&z));
        prop_assert_eq!(ring_multiply(&ring_multiply(&x, &y), &z), ring_multiply(&x, &ring_multiply(&y, &z)));
        prop_assert_eq!(ring_multiply(&x, &y), ring_multiply(&y, &x));
        prop_assert_eq!(ring_multiply(&x, &y.add(&z)), ring_multiply(&x, &y).add(&ring_multiply(&x, &z)));
        prop_assert_eq!(ring_multiply(&RingElt::unit(p), &x), x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn json_round_trips(p in 2u32..=4, which in 0usize..4, nu_mod in prop::sample::select(vec!["2", "4"])) {
        let ps = p.to_string();
        let args: Vec<&str> = match which {
            0 => vec!["nichols", "classify", "--p", &ps],
            1 => vec!["nichols", "decompose", "--p", &ps, "--vertices", "2"],
            2 => vec!["nichols", "loop", "--p", &ps],
            _ => vec!["nichols", "verify", "--p", &ps, "--suite", "ring"],
        };
        let mut args = args;
        args.extend(["--nu-mod", nu_mod, "--no-cache"]);
        let cli = Cli::try_parse_from(args).unwrap();
        let doc = nichols_core::cli::compute(&cli).unwrap();
        let text = render(&doc, Format::Json);
        let back: Document = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(render(&back, Format::Json), text);
    }
}
