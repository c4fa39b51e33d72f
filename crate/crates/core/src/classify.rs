//! Submodules generated from left coinvariants, their classification into
//! simple (`X`, `S`), two-floor (`V`, `L`), bottom (`B`) and projective
//! (`P`) types, braiding sectors, and the decomposition of the one- and
//! two-vertex spaces.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cyclo::Field;
use crate::error::{AlgebraError, Result};
use crate::linalg::{accumulate, scaled, Subspace, Vector};
use crate::ydspace::{act_fr, coact_vec, is_coinvariant, unit_vec, BasisVector, Vertices, YDVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Kind {
    X,
    S,
    V,
    L,
    B,
    P,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Coinvariant that generates a module: `V^a_0` or `V^{a,b}_{0,t}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Labels {
    None,
    One { a: i64 },
    Two { a: i64, b: i64, t: i64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleDescriptor {
    pub kind: Kind,
    pub r: u32,
    /// Signed sector index as it comes out of `x = r - 1 - νp`.
    pub nu_raw: i64,
    pub labels: Labels,
}

impl ModuleDescriptor {
    pub fn new(kind: Kind, r: u32, nu_raw: i64) -> Self {
        ModuleDescriptor { kind, r, nu_raw, labels: Labels::None }
    }

    /// Sector index in `Z₄`.
    pub fn nu(&self) -> u8 {
        self.nu_raw.rem_euclid(4) as u8
    }

    pub fn dim(&self, p: u32) -> u32 {
        match self.kind {
            Kind::X | Kind::B => self.r,
            Kind::S | Kind::V | Kind::L => p,
            Kind::P => 2 * p,
        }
    }
}

impl fmt::Display for ModuleDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::V | Kind::L | Kind::P => write!(f, "{}[{}]_{}", self.kind, self.r, self.nu_raw),
            _ => write!(f, "{}({})_{}", self.kind, self.r, self.nu_raw),
        }
    }
}

impl Serialize for ModuleDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ModuleDescriptor", 4)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("r", &self.r)?;
        st.serialize_field("nu", &self.nu())?;
        st.serialize_field("nu_raw", &self.nu_raw)?;
        st.end()
    }
}

pub fn residue(x: i64, p: u32) -> i64 {
    x.rem_euclid(p as i64)
}

/// `β = (a + b - 2t)_p + 1`.
pub fn beta_param(a: i64, b: i64, t: i64, p: u32) -> u32 {
    residue(a + b - 2 * t, p) as u32 + 1
}

/// `ν` with `x = r - 1 - νp`.
pub fn nu_from(x: i64, r: u32, p: u32) -> Result<i64> {
    let d = r as i64 - 1 - x;
    if d % p as i64 != 0 {
        return Err(AlgebraError::Precondition(format!("{x} is not congruent to r-1={} mod {p}", r as i64 - 1)));
    }
    Ok(d / p as i64)
}

/// Braiding sector of an effective charge: `a_eff = r - 1 - νp`, `ν ∈ Z₄`.
pub fn braiding_sector(a_eff: i64, r: u32, p: u32) -> Result<u8> {
    Ok(nu_from(a_eff, r, p)?.rem_euclid(4) as u8)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMode {
    ModuleComodule,
    Braided,
    Entwined,
}

pub fn iso_check(d1: &ModuleDescriptor, d2: &ModuleDescriptor, mode: IsoMode) -> bool {
    if d1.kind != d2.kind || d1.r != d2.r {
        return false;
    }
    match mode {
        IsoMode::ModuleComodule => true,
        IsoMode::Braided => d1.nu() == d2.nu(),
        IsoMode::Entwined => d1.nu() % 2 == d2.nu() % 2,
    }
}

/// Which of the three condition families hold at `(a, b, t)`:
/// simple of dimension `p`, simple `X` not in the image of `F`, and the
/// four conditions of the three-floor case.
pub fn condition_families(a: i64, b: i64, t: i64, p: u32) -> [bool; 3] {
    let r = beta_param(a, b, t, p) as i64;
    let p = p as i64;
    let am = residue(a, p as u32);
    let s = r == p;
    let xi = t <= am && am - r + 1 <= t && t <= p - 1 - r;
    let xii = t >= am + 1 && p - r <= t && t <= p - r + am;
    let pc = r <= p - 1
        && (t >= p - r + am + 1 || (p - r <= t && t <= am) || t <= am - r || (am + 1 <= t && t <= p - r - 1));
    [s, (xi || xii) && !s, pc]
}

/// Whether `(a, t, b)` carries a projective module (the `L` case).
pub fn projective_q(a: i64, b: i64, t: i64, p: u32) -> bool {
    let r = beta_param(a, b, t, p) as i64;
    let am = residue(a, p);
    1 <= r && r <= p as i64 - 1 && (t <= am - r || (am + 1 <= t && t <= p as i64 - r - 1))
}

/// Type of the module generated from `V^{a,b}_{0,t}`.
pub fn classify_coinvariant(a: i64, b: i64, t: i64, p: u32) -> Result<ModuleDescriptor> {
    if t < 0 || t >= p as i64 {
        return Err(AlgebraError::OutOfRange(format!("t={t} outside 0..{p}")));
    }
    let r = beta_param(a, b, t, p);
    let [s, x, _] = condition_families(a, b, t, p);
    let kind = if s {
        Kind::S
    } else if x {
        Kind::X
    } else if t + r as i64 >= p as i64 {
        Kind::B
    } else {
        Kind::L
    };
    let nu_raw = nu_from(a + b - 2 * t, r, p)?;
    Ok(ModuleDescriptor { kind, r, nu_raw, labels: Labels::Two { a, b, t } })
}

/// Type of the module generated from `V^a_0`.
pub fn classify_one_vertex(a: i64, p: u32) -> ModuleDescriptor {
    let r = residue(a, p) as u32 + 1;
    let kind = if r == p { Kind::S } else { Kind::X };
    let nu_raw = nu_from(a, r, p).expect("r-1 ≡ a mod p by construction");
    ModuleDescriptor { kind, r, nu_raw, labels: Labels::One { a } }
}

/// `F ▶ v`.
pub fn act_f(space: &Vertices, v: &YDVec) -> YDVec {
    act_fr(space, 1, v)
}

/// `v, F▶v, F²▶v, …` up to the first zero vector.
pub fn f_orbit(space: &Vertices, v: &YDVec) -> Vec<YDVec> {
    let mut out = Vec::new();
    let mut cur = v.clone();
    while !cur.is_empty() {
        out.push(cur.clone());
        cur = act_f(space, &cur);
    }
    out
}

/// Whether the span of `basis` is closed under `F` and the coaction.
pub fn is_sub_yd(space: &Vertices, basis: &[YDVec]) -> bool {
    let mut sub = Subspace::new();
    for v in basis {
        sub.insert(v);
    }
    for v in basis {
        if !sub.contains(&act_f(space, v)) {
            return false;
        }
        let mut parts: BTreeMap<usize, YDVec> = BTreeMap::new();
        for ((r, w), c) in coact_vec(space, v) {
            accumulate(parts.entry(r).or_default(), w, &c);
        }
        if parts.values().any(|w| !sub.contains(w)) {
            return false;
        }
    }
    true
}

fn independent(basis: &[YDVec]) -> usize {
    let mut sub = Subspace::new();
    basis.iter().filter(|v| sub.insert(v)).count()
}

/// Whether `V^{a,b}_{0,t}` lies in the image of `F` on its sector.
fn coinvariant_in_image(space: &Vertices, a: i64, b: i64, t: u32) -> bool {
    if t == 0 {
        return false;
    }
    let f = space_field(space);
    let mut img = Subspace::new();
    for x in 0..t {
        let y = t - 1 - x;
        img.insert(&act_f(space, &unit_vec(&f, BasisVector::two(a, b, x, y))));
    }
    img.contains(&unit_vec(&f, BasisVector::two(a, b, 0, t)))
}

fn space_field(space: &Vertices) -> Field {
    use crate::ydspace::YdSpace;
    space.field().clone()
}

/// Orbit basis of the module generated from a coinvariant, and its type
/// determined from the orbit alone.
pub fn generate_submodule(space: &Vertices, coinv: &BasisVector) -> Result<(Vec<YDVec>, ModuleDescriptor)> {
    let f = space_field(space);
    let p = f.p();
    if !coinv.is_coinvariant() || coinv.floor != 0 {
        return Err(AlgebraError::Precondition(format!("{coinv:?} is not a left coinvariant")));
    }
    let orbit = f_orbit(space, &unit_vec(&f, *coinv));
    let len = orbit.len() as u32;
    match coinv.n {
        1 => {
            let a = coinv.charges[0];
            let kind = if len == p { Kind::S } else { Kind::X };
            let nu_raw = nu_from(a, len, p).unwrap_or(i64::MIN);
            Ok((orbit, ModuleDescriptor { kind, r: len, nu_raw, labels: Labels::One { a } }))
        }
        2 => {
            let [a, b, _] = coinv.charges;
            let t = coinv.crosses[1];
            let inner = orbit.iter().skip(1).position(|v| is_coinvariant(space, v)).map(|k| k as u32 + 1);
            let (kind, r) = match inner {
                Some(k) => (Kind::L, k),
                None if len == p => (Kind::S, p),
                None if coinvariant_in_image(space, a, b, t) => (Kind::B, len),
                None => (Kind::X, len),
            };
            let nu_raw = nu_from(a + b - 2 * t as i64, r, p).unwrap_or(i64::MIN);
            Ok((orbit, ModuleDescriptor { kind, r, nu_raw, labels: Labels::Two { a, b, t: t as i64 } }))
        }
        _ => Err(AlgebraError::Unsupported("three-vertex decomposition".into())),
    }
}

/// `T = Σ_{s<r} ⟦r-1⟧! c_t(r-1, s) V^{a,b}_{r-s,t+s}`, the lift sitting one
/// step above the end of the `r`-step orbit of `V^{a,b}_{0,t}`.
pub fn top_element(space: &Vertices, a: i64, b: i64, t: i64, r: u32) -> YDVec {
    let f = space_field(space);
    let p = f.p() as i64;
    let r = r as i64;
    let fact = f.q_fact(r - 1);
    let mut out = Vector::new();
    for s in 0..r {
        if r - s >= p || t + s >= p {
            continue;
        }
        let c = &fact * space.two_vertex_coeff(a, b, 0, t, r - 1, s);
        accumulate(&mut out, BasisVector::two(a, b, (r - s) as u32, (t + s) as u32), &c);
    }
    out
}

/// Extension of a simple `X(r)` by the quotient `X(p-r)`, with its basis.
pub fn extend_to_v(space: &Vertices, desc: &ModuleDescriptor) -> Result<(ModuleDescriptor, Vec<YDVec>)> {
    let f = space_field(space);
    let p = f.p();
    if desc.kind != Kind::X {
        return Err(AlgebraError::Precondition(format!("V-extension needs an X module, got {desc}")));
    }
    let r = desc.r;
    let (coinv, lift) = match desc.labels {
        Labels::One { a } => (BasisVector::one(a, 0), unit_vec(&f, BasisVector::one(a, r))),
        Labels::Two { a, b, t } => (BasisVector::two(a, b, 0, t as u32), top_element(space, a, b, t, r)),
        Labels::None => return Err(AlgebraError::Precondition("descriptor without coinvariant labels".into())),
    };
    let mut basis = f_orbit(space, &unit_vec(&f, coinv));
    basis.extend(f_orbit(space, &lift));
    if basis.len() as u32 != p || independent(&basis) as u32 != p || !is_sub_yd(space, &basis) {
        return Err(AlgebraError::Precondition(format!("coaction closure of {desc} is not {p}-dimensional")));
    }
    Ok((ModuleDescriptor { kind: Kind::V, ..*desc }, basis))
}

/// Basis of the projective cover of an `L` module: bottom elements
/// `v(i) = F^{i-1} ▶ V_{0,t}` followed by top elements `u(i) = F^{i-1} ▶ T`.
pub fn projective_basis(space: &Vertices, a: i64, b: i64, t: i64, r: u32) -> (Vec<YDVec>, Vec<YDVec>) {
    let f = space_field(space);
    let v = f_orbit(space, &unit_vec(&f, BasisVector::two(a, b, 0, t as u32)));
    let u = f_orbit(space, &top_element(space, a, b, t, r));
    (v, u)
}

pub fn extend_to_p(space: &Vertices, desc: &ModuleDescriptor) -> Result<(ModuleDescriptor, Vec<YDVec>)> {
    let f = space_field(space);
    let p = f.p();
    let Labels::Two { a, b, t } = desc.labels else {
        return Err(AlgebraError::Precondition("P-extension needs two-vertex labels".into()));
    };
    if desc.kind != Kind::L {
        return Err(AlgebraError::Precondition(format!("P-extension needs an L module, got {desc}")));
    }
    let (v, u) = projective_basis(space, a, b, t, desc.r);
    let mut basis = v;
    basis.extend(u);
    if basis.len() as u32 != 2 * p || independent(&basis) as u32 != 2 * p || !is_sub_yd(space, &basis) {
        return Err(AlgebraError::Precondition(format!("coaction closure of {desc} is not {}-dimensional", 2 * p)));
    }
    Ok((ModuleDescriptor { kind: Kind::P, ..*desc }, basis))
}

/// Multiplicities of indecomposable summands of a vertex space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub p: u32,
    pub vertices: u32,
    /// `(kind, r) → multiplicity`, sorted.
    pub multiplicities: Vec<(Kind, u32, u64)>,
    pub total_dim: u64,
}

impl Decomposition {
    pub fn count(&self, kind: Kind, r: u32) -> u64 {
        self.multiplicities.iter().find(|(k, rr, _)| *k == kind && *rr == r).map_or(0, |x| x.2)
    }

    pub fn modules_of(&self, kind: Kind) -> u64 {
        self.multiplicities.iter().filter(|(k, _, _)| *k == kind).map(|x| x.2).sum()
    }
}

/// Decomposes the one- or two-vertex space by classifying every coinvariant
/// (charges `0..p` for each vertex).
pub fn decompose_space(n: u32, p: u32) -> Result<Decomposition> {
    let mut counts: BTreeMap<(Kind, u32), u64> = BTreeMap::new();
    let mut add = |d: ModuleDescriptor| match d.kind {
        Kind::S => *counts.entry((Kind::S, p)).or_default() += 1,
        Kind::X => *counts.entry((Kind::V, d.r)).or_default() += 1,
        Kind::L => *counts.entry((Kind::P, d.r)).or_default() += 1,
        Kind::B => {}
        other => unreachable!("coinvariants never generate {other:?}"),
    };
    let pi = p as i64;
    match n {
        1 => (0..pi).for_each(|a| add(classify_one_vertex(a, p))),
        2 => {
            for a in 0..pi {
                for b in 0..pi {
                    for t in 0..pi {
                        add(classify_coinvariant(a, b, t, p)?);
                    }
                }
            }
        }
        _ => return Err(AlgebraError::Unsupported(format!("{n}-vertex decomposition"))),
    }
    let multiplicities: Vec<(Kind, u32, u64)> = counts.into_iter().map(|((k, r), m)| (k, r, m)).collect();
    let total_dim = multiplicities
        .iter()
        .map(|&(k, r, m)| m * ModuleDescriptor::new(k, r, 0).dim(p) as u64)
        .sum();
    Ok(Decomposition { p, vertices: n, multiplicities, total_dim })
}

/// Classification of every `(a, b, t)` with `0 <= a, b, t < p`.
pub fn figure1_table(p: u32) -> Result<Vec<ModuleDescriptor>> {
    let pi = p as i64;
    let mut out = Vec::new();
    for a in 0..pi {
        for b in 0..pi {
            for t in 0..pi {
                out.push(classify_coinvariant(a, b, t, p)?);
            }
        }
    }
    Ok(out)
}

/// Published table at `p = 5` for `a ∈ {0, 1, 4}`: `(a, b, t, kind, r, ν)`.
pub const REFERENCE_TABLE_P5: [(i64, i64, i64, Kind, u32, i64); 75] = {
    use Kind::*;
    [
        (0, 0, 0, X, 1, 0), (0, 0, 1, X, 4, 1), (0, 0, 2, L, 2, 1), (0, 0, 3, S, 5, 2), (0, 0, 4, B, 3, 2),
        (0, 1, 0, X, 2, 0), (0, 1, 1, S, 5, 1), (0, 1, 2, X, 3, 1), (0, 1, 3, L, 1, 1), (0, 1, 4, B, 4, 2),
        (0, 2, 0, X, 3, 0), (0, 2, 1, L, 1, 0), (0, 2, 2, B, 4, 1), (0, 2, 3, X, 2, 1), (0, 2, 4, S, 5, 2),
        (0, 3, 0, X, 4, 0), (0, 3, 1, L, 2, 0), (0, 3, 2, S, 5, 1), (0, 3, 3, B, 3, 1), (0, 3, 4, X, 1, 1),
        (0, 4, 0, S, 5, 0), (0, 4, 1, L, 3, 0), (0, 4, 2, L, 1, 0), (0, 4, 3, B, 4, 1), (0, 4, 4, B, 2, 1),
        (1, 0, 0, X, 2, 0), (1, 0, 1, S, 5, 1), (1, 0, 2, X, 3, 1), (1, 0, 3, L, 1, 1), (1, 0, 4, B, 4, 2),
        (1, 1, 0, X, 3, 0), (1, 1, 1, X, 1, 0), (1, 1, 2, X, 4, 1), (1, 1, 3, X, 2, 1), (1, 1, 4, S, 5, 2),
        (1, 2, 0, X, 4, 0), (1, 2, 1, X, 2, 0), (1, 2, 2, S, 5, 1), (1, 2, 3, X, 3, 1), (1, 2, 4, X, 1, 1),
        (1, 3, 0, S, 5, 0), (1, 3, 1, X, 3, 0), (1, 3, 2, L, 1, 0), (1, 3, 3, B, 4, 1), (1, 3, 4, X, 2, 1),
        (1, 4, 0, L, 1, -1), (1, 4, 1, B, 4, 0), (1, 4, 2, L, 2, 0), (1, 4, 3, S, 5, 1), (1, 4, 4, B, 3, 1),
        (4, 0, 0, S, 5, 0), (4, 0, 1, L, 3, 0), (4, 0, 2, L, 1, 0), (4, 0, 3, B, 4, 1), (4, 0, 4, B, 2, 1),
        (4, 1, 0, L, 1, -1), (4, 1, 1, B, 4, 0), (4, 1, 2, L, 2, 0), (4, 1, 3, S, 5, 1), (4, 1, 4, B, 3, 1),
        (4, 2, 0, L, 2, -1), (4, 2, 1, S, 5, 0), (4, 2, 2, B, 3, 0), (4, 2, 3, L, 1, 0), (4, 2, 4, B, 4, 1),
        (4, 3, 0, L, 3, -1), (4, 3, 1, L, 1, -1), (4, 3, 2, B, 4, 0), (4, 3, 3, B, 2, 0), (4, 3, 4, S, 5, 1),
        (4, 4, 0, L, 4, -1), (4, 4, 1, L, 2, -1), (4, 4, 2, S, 5, 0), (4, 4, 3, B, 3, 0), (4, 4, 4, B, 1, 0),
    ]
};

/// Rescales `v` so that its coefficient at `key` is one.
pub fn normalize_at(v: &YDVec, key: &BasisVector) -> Option<YDVec> {
    let c = v.get(key)?;
    Some(scaled(v, &c.inv().ok()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_examples() {
        assert_eq!(beta_param(0, 0, 0, 7), 1);
        assert_eq!(beta_param(0, 0, 3, 5), 5);
        assert_eq!(beta_param(0, 2, 1, 5), 1);
    }

    #[test]
    fn sector_examples() {
        assert_eq!(braiding_sector(3, 4, 5).unwrap(), 0);
        assert_eq!(braiding_sector(-6, 5, 5).unwrap(), 2);
        assert!(braiding_sector(1, 4, 5).is_err());
        let x0 = ModuleDescriptor::new(Kind::X, 3, 0);
        let x2 = ModuleDescriptor::new(Kind::X, 3, 2);
        assert!(iso_check(&x0, &x2, IsoMode::Entwined));
        assert!(!iso_check(&x0, &x2, IsoMode::Braided));
        assert!(iso_check(&x0, &x2, IsoMode::ModuleComodule));
    }

    #[test]
    fn classify_examples() {
        let d = classify_coinvariant(0, 0, 2, 5).unwrap();
        assert_eq!((d.kind, d.r, d.nu()), (Kind::L, 2, 1));
        let d = classify_coinvariant(0, 4, 0, 5).unwrap();
        assert_eq!((d.kind, d.r, d.nu()), (Kind::S, 5, 0));
        let d = classify_coinvariant(4, 4, 4, 5).unwrap();
        assert_eq!((d.kind, d.r, d.nu()), (Kind::B, 1, 0));
        assert!(classify_coinvariant(0, 0, 5, 5).is_err());
    }

    #[test]
    fn generate_examples() {
        let f = Field::new(5).unwrap();
        let sp = Vertices::new(&f);
        let (basis, d) = generate_submodule(&sp, &BasisVector::one(0, 0)).unwrap();
        assert_eq!((basis.len(), d.kind, d.r), (1, Kind::X, 1));
        let (basis, d) = generate_submodule(&sp, &BasisVector::one(4, 0)).unwrap();
        assert_eq!((basis.len(), d.kind), (5, Kind::S));
        let (basis, d) = generate_submodule(&sp, &BasisVector::two(0, 0, 0, 2)).unwrap();
        assert_eq!((basis.len(), d.kind, d.r), (5, Kind::L, 2));
        assert!(is_coinvariant(&sp, &basis[2]));
        let (ext, pb) = extend_to_p(&sp, &d).unwrap();
        assert_eq!((ext.kind, ext.r, ext.nu(), pb.len()), (Kind::P, 2, 1, 10));
        assert!(generate_submodule(&sp, &BasisVector::one(0, 1)).is_err());
    }

    #[test]
    fn decomposition_small() {
        let d = decompose_space(1, 2).unwrap();
        assert_eq!(d.multiplicities, vec![(Kind::S, 2, 1), (Kind::V, 1, 1)]);
        assert_eq!(d.total_dim, 4);
        let d = decompose_space(2, 5).unwrap();
        assert_eq!(d.count(Kind::S, 5), 25);
        assert_eq!((1..5).map(|r| d.count(Kind::V, r)).collect::<Vec<_>>(), vec![8, 12, 12, 8]);
        assert_eq!((1..5).map(|r| d.count(Kind::P, r)).collect::<Vec<_>>(), vec![16, 9, 4, 1]);
        assert_eq!(d.total_dim, 625);
    }
}
