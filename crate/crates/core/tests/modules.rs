use nichols_core::classify::{classify_coinvariant, extend_to_p, extend_to_v, figure1_table, Kind};
use nichols_core::cyclo::Field;
use nichols_core::ydspace::Vertices;

#[test]
fn every_simple_extends_to_v_and_every_l_to_p() {
    for p in 2..=5u32 {
        let field = Field::new(p).unwrap();
        let sp = Vertices::new(&field);
        for d in figure1_table(p).unwrap() {
            match d.kind {
                Kind::X => {
                    let (v, basis) = extend_to_v(&sp, &d).unwrap();
                    assert_eq!((v.kind, v.r), (Kind::V, d.r), "{d}");
                    assert_eq!(basis.len() as u32, p);
                }
                Kind::L => {
                    let (pm, basis) = extend_to_p(&sp, &d).unwrap();
                    assert_eq!((pm.kind, pm.r), (Kind::P, d.r), "{d}");
                    assert_eq!(basis.len() as u32, 2 * p);
                }
                _ => {}
            }
        }
    }
}

#[test]
fn sector_labels_follow_the_charge() {
    // ν is read off from a + b - 2t = r - 1 - νp
    for p in 2..=6u32 {
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                for t in 0..p as i64 {
                    let d = classify_coinvariant(a, b, t, p).unwrap();
                    if d.kind != Kind::B {
                        assert_eq!(a + b - 2 * t, d.r as i64 - 1 - d.nu_raw * p as i64, "({a},{b},{t}) p={p}");
                    }
                }
            }
        }
    }
}
