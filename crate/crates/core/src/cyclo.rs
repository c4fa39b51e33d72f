//! Exact arithmetic in the cyclotomic field `Q(ζ)` with `ζ` a primitive
//! `4p`-th root of unity.
//!
//! The deformation parameter is `q = ζ²`, a primitive `2p`-th root of unity,
//! so every half-integer power `q^{x/2}` is the integer power `ζ^x`.
//! Elements are stored as integer coefficient vectors over a common
//! denominator, reduced modulo the cyclotomic polynomial `Φ_{4p}`; the
//! representation is canonical, so equality and the zero test are exact.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{AlgebraError, Result};

/// Raw canonical data of a field element, used by the memo tables.
type Raw = (Vec<BigInt>, BigInt);

struct FieldData {
    p: u32,
    order: u32,
    phi: usize,
    /// Coefficients of `Φ_{4p}`, lowest degree first (monic).
    modulus: Vec<BigInt>,
    /// `ζ^k` reduced, for `0 <= k < 4p`.
    powers: Vec<Vec<BigInt>>,
    q_ints: RwLock<HashMap<i64, Raw>>,
    q_binoms: RwLock<HashMap<(i64, i64), Raw>>,
}

/// Handle to the field `Q(ζ_{4p})` for a fixed `p`. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(p={})", self.0.p)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p
    }
}
impl Eq for Field {}

fn registry() -> &'static Mutex<HashMap<u32, Field>> {
    static REG: OnceLock<Mutex<HashMap<u32, Field>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer polynomial division by a monic divisor; panics if not exact.
fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    if rem.len() <= dn {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// `Φ_n` with integer coefficients, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            poly = div_exact_monic(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

fn totient(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

impl Field {
    /// The field for `p >= 2`, shared across callers.
    pub fn new(p: u32) -> Result<Field> {
        if p < 2 {
            return Err(AlgebraError::OutOfRange(format!("p must be at least 2, got {p}")));
        }
        let mut reg = registry().lock().expect("field registry poisoned");
        if let Some(f) = reg.get(&p) {
            return Ok(f.clone());
        }
        let f = Field::build(p);
        reg.insert(p, f.clone());
        Ok(f)
    }

    fn build(p: u32) -> Field {
        let order = 4 * p;
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        debug_assert_eq!(phi, totient(order));
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and reduce
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            next[1..phi].clone_from_slice(&cur[..(phi - 1)]);
            if !top.is_zero() {
                for (j, m) in modulus.iter().take(phi).enumerate() {
                    next[j] -= &top * m;
                }
            }
            cur = next;
        }
        Field(Arc::new(FieldData {
            p,
            order,
            phi,
            modulus,
            powers,
            q_ints: RwLock::new(HashMap::new()),
            q_binoms: RwLock::new(HashMap::new()),
        }))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    /// Order `4p` of `ζ`.
    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Degree `φ(4p)` of the field.
    pub fn degree(&self) -> usize {
        self.0.phi
    }

    pub fn zero(&self) -> CycNum {
        CycNum { field: self.clone(), num: vec![BigInt::zero(); self.0.phi], den: BigInt::one() }
    }

    pub fn one(&self) -> CycNum {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> CycNum {
        let mut x = self.zero();
        x.num[0] = BigInt::from(n);
        x
    }

    pub fn from_rational(&self, r: &BigRational) -> CycNum {
        let mut x = self.zero();
        x.num[0] = r.numer().clone();
        x.den = r.denom().clone();
        x.normalize();
        x
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CycNum {
        let idx = k.rem_euclid(self.0.order as i64) as usize;
        CycNum { field: self.clone(), num: self.0.powers[idx].clone(), den: BigInt::one() }
    }

    /// `q^k = ζ^{2k}`.
    pub fn q_pow(&self, k: i64) -> CycNum {
        self.zeta_pow(2 * k)
    }

    /// `(-1)^k` as a field element.
    pub fn sign(&self, k: i64) -> CycNum {
        self.from_int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// `ξ = 1 - q²`.
    pub fn xi(&self) -> CycNum {
        self.one() - self.q_pow(2)
    }

    /// The q-integer `⟦r⟧ = (q^{2r} - 1)/(q² - 1)`, evaluated as a sum of
    /// powers. Negative arguments use `⟦-r⟧ = -q^{-2r}⟦r⟧`.
    pub fn q_int(&self, r: i64) -> CycNum {
        if let Some(raw) = self.0.q_ints.read().expect("cache poisoned").get(&r) {
            return self.from_raw(raw);
        }
        let mut acc = self.zero();
        if r >= 0 {
            for k in 0..r {
                acc += &self.q_pow(2 * k);
            }
        } else {
            for k in r..0 {
                acc -= &self.q_pow(2 * k);
            }
        }
        self.0.q_ints.write().expect("cache poisoned").insert(r, acc.raw());
        acc
    }

    /// `⟦r⟧! = ⟦1⟧⟦2⟧…⟦r⟧`; `⟦0⟧! = 1`. Requires `r >= 0`.
    pub fn q_fact(&self, r: i64) -> CycNum {
        assert!(r >= 0, "q_fact of negative argument {r}");
        let mut acc = self.one();
        for i in 1..=r {
            acc *= &self.q_int(i);
        }
        acc
    }

    /// Gaussian binomial in `q²`, by the q-Pascal rule
    /// `C(n,k) = C(n-1,k-1) + q^{2k} C(n-1,k)`. Zero outside `0 <= k <= n`.
    pub fn q_binom(&self, n: i64, k: i64) -> CycNum {
        if k < 0 || n < 0 || k > n {
            return self.zero();
        }
        if k == 0 || k == n {
            return self.one();
        }
        if let Some(raw) = self.0.q_binoms.read().expect("cache poisoned").get(&(n, k)) {
            return self.from_raw(raw);
        }
        // fill row by row up to n so the recursion depth stays flat
        let mut prev = vec![self.one()];
        for m in 1..=n {
            let mut row = Vec::with_capacity(m as usize + 1);
            for j in 0..=m {
                let left = if j >= 1 { prev.get(j as usize - 1).cloned() } else { None };
                let right = prev.get(j as usize).cloned();
                let v = match (left, right) {
                    (Some(l), Some(r)) => l + self.q_pow(2 * j) * r,
                    (Some(l), None) => l,
                    (None, Some(r)) => r,
                    (None, None) => self.zero(),
                };
                row.push(v);
            }
            prev = row;
        }
        let mut cache = self.0.q_binoms.write().expect("cache poisoned");
        for (j, v) in prev.iter().enumerate() {
            cache.insert((n, j as i64), v.raw());
        }
        prev[k as usize].clone()
    }

    fn from_raw(&self, raw: &Raw) -> CycNum {
        CycNum { field: self.clone(), num: raw.0.clone(), den: raw.1.clone() }
    }

    /// Numerical value of `ζ` used by the floating-point embedding.
    pub fn zeta_complex(&self) -> (f64, f64) {
        let ang = std::f64::consts::PI / (2.0 * self.0.p as f64);
        (ang.cos(), ang.sin())
    }
}

/// An element of `Q(ζ_{4p})`: `(Σ num[k] ζ^k) / den`, canonical.
#[derive(Clone)]
pub struct CycNum {
    field: Field,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn field(&self) -> &Field {
        &self.field
    }

    fn raw(&self) -> Raw {
        (self.num.clone(), self.den.clone())
    }

    fn normalize(&mut self) {
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        if self.den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// Coefficients over the power basis `1, ζ, …, ζ^{φ-1}`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    /// Coefficients as reduced fraction strings, e.g. `"-3/2"`.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs().iter().map(|c| c.to_string()).collect()
    }

    /// If the element is rational, return it.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Multiply by an integer.
    pub fn scale(&self, k: i64) -> CycNum {
        let mut out = self.clone();
        for c in out.num.iter_mut() {
            *c *= k;
        }
        out.normalize();
        out
    }

    /// Floating-point value at `ζ = e^{iπ/(2p)}`.
    pub fn to_complex(&self) -> (f64, f64) {
        let (zr, zi) = self.field.zeta_complex();
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let (mut re, mut im) = (0.0, 0.0);
        let (mut pr, mut pi) = (1.0f64, 0.0f64);
        for c in &self.num {
            let cf = c.to_f64().unwrap_or(f64::NAN) / den;
            re += cf * pr;
            im += cf * pi;
            let nr = pr * zr - pi * zi;
            pi = pr * zi + pi * zr;
            pr = nr;
        }
        (re, im)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_{4p}`.
    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        type Poly = Vec<BigRational>;
        fn trim(p: &mut Poly) {
            while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
                p.pop();
            }
        }
        fn deg(p: &Poly) -> usize {
            p.len() - 1
        }
        fn sub_mul(a: &Poly, q: &Poly, b: &Poly) -> Poly {
            // a - q*b
            let mut out = a.clone();
            let n = (q.len() + b.len()).max(a.len());
            out.resize(n, BigRational::zero());
            for (i, qi) in q.iter().enumerate() {
                if qi.is_zero() {
                    continue;
                }
                for (j, bj) in b.iter().enumerate() {
                    out[i + j] -= qi * bj;
                }
            }
            trim(&mut out);
            out
        }
        fn divmod(a: &Poly, b: &Poly) -> (Poly, Poly) {
            let mut rem = a.clone();
            trim(&mut rem);
            let db = deg(b);
            if rem.len() <= db {
                return (vec![BigRational::zero()], rem);
            }
            let lead = b[db].clone();
            let mut quot = vec![BigRational::zero(); rem.len() - db];
            for shift in (0..quot.len()).rev() {
                let c = &rem[shift + db] / &lead;
                if c.is_zero() {
                    continue;
                }
                for (j, bj) in b.iter().enumerate() {
                    rem[shift + j] -= &c * bj;
                }
                quot[shift] = c;
            }
            rem.truncate(db.max(1));
            trim(&mut rem);
            (quot, rem)
        }
        let fd = &self.field.0;
        let mut r0: Poly = fd.modulus.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let mut r1: Poly = self.coeffs();
        trim(&mut r1);
        let mut s0: Poly = vec![BigRational::zero()];
        let mut s1: Poly = vec![BigRational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = divmod(&r0, &r1);
            let s2 = sub_mul(&s0, &q, &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        // r0 is a nonzero constant since Φ is irreducible
        assert_eq!(r0.len(), 1, "gcd with the cyclotomic polynomial must be constant");
        let c = r0[0].clone();
        let mut out = self.field.zero();
        let mut den = BigInt::one();
        for v in &s0 {
            den = den.lcm(v.denom());
        }
        let cden = BigRational::from_integer(den.clone()) * &c;
        // out = s0 / c, written over a common denominator
        for (i, v) in s0.iter().enumerate().take(fd.phi) {
            let scaled = v * BigRational::from_integer(den.clone());
            debug_assert!(scaled.is_integer());
            out.num[i] = scaled.to_integer();
        }
        let cn = cden.numer().clone();
        let cd = cden.denom().clone();
        for x in out.num.iter_mut() {
            *x *= &cd;
        }
        out.den = cn;
        out.normalize();
        debug_assert!((&out * self).is_one());
        Ok(out)
    }

    /// `self / other`.
    pub fn div(&self, other: &CycNum) -> Result<CycNum> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> CycNum {
        let mut acc = self.field.one();
        for _ in 0..e {
            acc *= self;
        }
        acc
    }

    fn check_field(&self, other: &CycNum) {
        assert!(self.field == other.field, "mixing elements of different cyclotomic fields");
    }
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.den == other.den && self.num == other.num
    }
}
impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.0.p.hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let wrap = !self.den.is_one();
        if wrap {
            write!(f, "(")?;
        }
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        if wrap {
            write!(f, ")/{}", self.den)?;
        }
        Ok(())
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        self.check_field(rhs);
        if rhs.is_zero() {
            return;
        }
        if self.den == rhs.den {
            for (a, b) in self.num.iter_mut().zip(&rhs.num) {
                *a += b;
            }
        } else {
            for (a, b) in self.num.iter_mut().zip(&rhs.num) {
                *a = &*a * &rhs.den + b * &self.den;
            }
            self.den = &self.den * &rhs.den;
        }
        self.normalize();
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        let n = -rhs;
        *self += &n;
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        let mut out = self.clone();
        for c in out.num.iter_mut() {
            *c = -&*c;
        }
        out
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        self.check_field(rhs);
        let fd = &self.field.0;
        let phi = fd.phi;
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut num: Vec<BigInt> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (slot, pw) in num.iter_mut().zip(&fd.powers[k]) {
                if !pw.is_zero() {
                    *slot += c * pw;
                }
            }
        }
        let mut out = CycNum { field: self.field.clone(), num, den: &self.den * &rhs.den };
        out.normalize();
        out
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                (&self).$m(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        let phi8: Vec<i64> = cyclotomic_polynomial(8).iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(phi8, vec![1, 0, 0, 0, 1]);
        let phi12: Vec<i64> = cyclotomic_polynomial(12).iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(phi12, vec![1, 0, -1, 0, 1]);
        for p in 2..=12 {
            assert_eq!(cyclotomic_polynomial(4 * p).len() - 1, totient(4 * p));
        }
    }

    #[test]
    fn zeta_relations() {
        for p in 2..=7 {
            let f = Field::new(p).unwrap();
            assert!(f.zeta_pow(0).is_one());
            assert_eq!(f.zeta_pow(2 * p as i64), -f.one());
            assert!(f.zeta_pow(4 * p as i64).is_one());
            assert_eq!(f.q_pow(p as i64), -f.one());
            for a in -9..9 {
                for b in -9..9 {
                    assert_eq!(f.zeta_pow(a) * f.zeta_pow(b), f.zeta_pow(a + b));
                }
            }
        }
    }

    #[test]
    fn p2_q_is_i() {
        let f = Field::new(2).unwrap();
        let q = f.zeta_pow(2);
        assert_eq!(q.coeff_strings(), vec!["0", "0", "1", "0"]);
        assert_eq!(&q * &q, -f.one());
    }

    #[test]
    fn q_integers() {
        for p in 2..=7i64 {
            let f = Field::new(p as u32).unwrap();
            assert!(f.q_int(0).is_zero());
            assert!(f.q_int(1).is_one());
            assert!(f.q_int(p).is_zero());
            assert_eq!(f.q_int(-1), -f.q_pow(-2));
            for r in -2 * p..2 * p {
                // (q² - 1)⟦r⟧ = q^{2r} - 1
                let lhs = (f.q_pow(2) - f.one()) * f.q_int(r);
                assert_eq!(lhs, f.q_pow(2 * r) - f.one(), "r={r}");
            }
        }
    }

    #[test]
    fn q_binomials() {
        let f2 = Field::new(2).unwrap();
        assert!(f2.q_binom(2, 1).is_zero());
        for p in 2..=7i64 {
            let f = Field::new(p as u32).unwrap();
            for n in 0..p {
                assert!(f.q_binom(n, 0).is_one());
                for k in 0..=n {
                    let lhs = f.q_binom(n, k) * f.q_fact(k) * f.q_fact(n - k);
                    assert_eq!(lhs, f.q_fact(n));
                }
            }
            assert!(f.q_binom(3, 5).is_zero());
            assert!(f.q_binom(3, -1).is_zero());
        }
    }

    #[test]
    fn inverse_and_embedding() {
        for p in 2..=7 {
            let f = Field::new(p).unwrap();
            assert!(f.one().inv().unwrap().is_one());
            let xi = f.xi();
            assert!((&xi * &xi.inv().unwrap()).is_one());
            let x = f.from_int(3) + f.zeta_pow(1) - f.zeta_pow(5).scale(7);
            assert!((&x * &x.inv().unwrap()).is_one());
        }
        let f = Field::new(3).unwrap();
        let (re, im) = f.xi().to_complex();
        assert!(((re * re + im * im).sqrt() - 1.7320508075688772).abs() < 1e-9);
        assert!(matches!(f.zero().inv(), Err(AlgebraError::DivisionByZero)));
    }
}
