//! The rank-one Nichols algebra `B_p`: divided powers `F(0), …, F(p-1)`
//! with `F(r)F(s) = ⟦r+s choose r⟧ F(r+s)`, deconcatenation coproduct and
//! braiding `Ψ(F(r)⊗F(s)) = q^{2rs} F(s)⊗F(r)`.
//!
//! The shuffle and half-twist oracles evaluate braid words letter by letter
//! and are used only to cross-check the closed forms.

use std::collections::BTreeMap;

use crate::cyclo::{CycNum, Field};
use crate::report::CheckReport;

/// Charge of the generator `F`; braiding scalars are `ζ^{c c'}`.
pub const F_CHARGE: i64 = -2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NicholsElt {
    field: Field,
    coeffs: Vec<CycNum>,
}

impl NicholsElt {
    pub fn zero(field: &Field) -> Self {
        NicholsElt { field: field.clone(), coeffs: vec![field.zero(); field.p() as usize] }
    }

    /// The divided power `F(r)`; zero for `r >= p`.
    pub fn basis(field: &Field, r: usize) -> Self {
        let mut x = Self::zero(field);
        if r < x.coeffs.len() {
            x.coeffs[r] = field.one();
        }
        x
    }

    pub fn unit(field: &Field) -> Self {
        Self::basis(field, 0)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeff(&self, r: usize) -> &CycNum {
        &self.coeffs[r]
    }

    /// Nonzero `(degree, coefficient)` pairs in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &CycNum)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycNum::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        NicholsElt { field: self.field.clone(), coeffs }
    }

    pub fn scale(&self, c: &CycNum) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        NicholsElt { field: self.field.clone(), coeffs }
    }

    pub fn product(&self, other: &Self) -> Self {
        let f = &self.field;
        let p = f.p() as usize;
        let mut out = Self::zero(f);
        for (r, a) in self.terms() {
            for (s, b) in other.terms() {
                if r + s < p {
                    let c = f.q_binom((r + s) as i64, r as i64) * a * b;
                    out.coeffs[r + s] += &c;
                }
            }
        }
        out
    }

    pub fn coproduct(&self) -> TensorSquare {
        let mut out = TensorSquare::zero(&self.field);
        for (r, a) in self.terms() {
            for s in 0..=r {
                out.add_term(s, r - s, a);
            }
        }
        out
    }

    /// `A(F(r)) = (-1)^r q^{r(r-1)} F(r)`.
    pub fn antipode(&self) -> Self {
        self.map_diag(|f, r| f.sign(r) * f.q_pow(r * (r - 1)))
    }

    /// `A^{-1}(F(r)) = (-1)^r q^{-r(r-1)} F(r)`.
    pub fn antipode_inv(&self) -> Self {
        self.map_diag(|f, r| f.sign(r) * f.q_pow(-r * (r - 1)))
    }

    pub fn counit(&self) -> CycNum {
        self.coeffs[0].clone()
    }

    fn map_diag(&self, g: impl Fn(&Field, i64) -> CycNum) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(r, c)| if c.is_zero() { c.clone() } else { c * g(&self.field, r as i64) })
            .collect();
        NicholsElt { field: self.field.clone(), coeffs }
    }
}

/// `A(F(r))` as a scalar multiple of `F(r)`.
pub fn antipode_scalar(field: &Field, r: usize) -> CycNum {
    let r = r as i64;
    field.sign(r) * field.q_pow(r * (r - 1))
}

/// `A^{-1}(F(r))` as a scalar multiple of `F(r)`.
pub fn antipode_inv_scalar(field: &Field, r: usize) -> CycNum {
    let r = r as i64;
    field.sign(r) * field.q_pow(-r * (r - 1))
}

/// Element of `B_p ⊗ B_p`, keyed by degree pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSquare {
    field: Field,
    terms: BTreeMap<(usize, usize), CycNum>,
}

impl TensorSquare {
    pub fn zero(field: &Field) -> Self {
        TensorSquare { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, r: usize, s: usize, c: &CycNum) {
        if c.is_zero() || r >= self.field.p() as usize || s >= self.field.p() as usize {
            return;
        }
        let e = self.terms.entry((r, s)).or_insert_with(|| self.field.zero());
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(r, s));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), CycNum> {
        &self.terms
    }

    /// Product in the braided tensor square:
    /// `(a⊗b)(c⊗d) = q^{2 deg b deg c} ac ⊗ bd`.
    pub fn braided_mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f);
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &other.terms {
                let ac = f.q_binom((a + c) as i64, a as i64);
                let bd = f.q_binom((b + d) as i64, b as i64);
                let coeff = x * y * f.q_pow(2 * (b * c) as i64) * ac * bd;
                out.add_term(a + c, b + d, &coeff);
            }
        }
        out
    }
}

/// Scalar of a braid word on letters with the given charges, where the
/// generator `i` crosses positions `i` and `i+1` with scalar `ζ^{c c'}`.
pub fn braid_word_scalar(field: &Field, charges: &[i64], word: &[usize]) -> CycNum {
    let mut letters = charges.to_vec();
    let mut acc = field.one();
    for &i in word {
        acc *= &field.zeta_pow(letters[i] * letters[i + 1]);
        letters.swap(i, i + 1);
    }
    acc
}

/// A reduced braid word lifting the permutation that sorts `targets`
/// (bubble sort: each adjacent swap is one positive crossing).
fn sorting_word(targets: &[usize]) -> Vec<usize> {
    let mut t = targets.to_vec();
    let mut word = Vec::new();
    loop {
        let mut swapped = false;
        for i in 0..t.len().saturating_sub(1) {
            if t[i] > t[i + 1] {
                t.swap(i, i + 1);
                word.push(i);
                swapped = true;
            }
        }
        if !swapped {
            return word;
        }
    }
}

/// The quantum shuffle of `F^{⊗r}` with `F^{⊗s}`: sum over all `(r,s)`
/// shuffles of the lifted braid acting on the rank-one word of length
/// `r+s`. Equals `⟦r+s choose r⟧`.
pub fn shuffle_product_oracle(field: &Field, r: usize, s: usize) -> CycNum {
    let n = r + s;
    let charges = vec![F_CHARGE; n];
    let mut acc = field.zero();
    // a shuffle is a choice of the r target slots for the first block
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let first: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let second: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
        let targets: Vec<usize> = first.into_iter().chain(second).collect();
        acc += &braid_word_scalar(field, &charges, &sorting_word(&targets));
    }
    acc
}

/// `(-1)^r` times the half twist `Ψ₁(Ψ₂Ψ₁)(Ψ₃Ψ₂Ψ₁)…` on `F^{⊗r}`.
pub fn half_twist_oracle(field: &Field, r: usize) -> CycNum {
    let mut word = Vec::new();
    for k in 1..r {
        word.extend((0..k).rev());
    }
    field.sign(r as i64) * braid_word_scalar(field, &vec![F_CHARGE; r], &word)
}

/// Bialgebra, antipode, counit and coassociativity axioms, exhaustively on
/// basis elements.
pub fn verify_hopf(field: &Field) -> CheckReport {
    let p = field.p() as usize;
    let mut rep = CheckReport::new(format!("hopf axioms p={p}"));
    let basis: Vec<NicholsElt> = (0..p).map(|r| NicholsElt::basis(field, r)).collect();
    for (r, x) in basis.iter().enumerate() {
        for (s, y) in basis.iter().enumerate() {
            let lhs = x.product(y).coproduct();
            let rhs = x.coproduct().braided_mul(&y.coproduct());
            rep.record(lhs == rhs, || format!("bialgebra F({r})F({s})"));
        }
        // antipode: m(A⊗id)Δ = m(id⊗A)Δ = ε
        let mut left = NicholsElt::zero(field);
        let mut right = NicholsElt::zero(field);
        for (&(a, b), c) in x.coproduct().terms() {
            let fa = NicholsElt::basis(field, a);
            let fb = NicholsElt::basis(field, b);
            left = left.add(&fa.antipode().product(&fb).scale(c));
            right = right.add(&fa.product(&fb.antipode()).scale(c));
        }
        let expect = NicholsElt::unit(field).scale(&x.counit());
        rep.record(left == expect && right == expect, || format!("antipode F({r})"));
        // counit
        let mut cl = NicholsElt::zero(field);
        let mut cr = NicholsElt::zero(field);
        for (&(a, b), c) in x.coproduct().terms() {
            if a == 0 {
                cl = cl.add(&NicholsElt::basis(field, b).scale(c));
            }
            if b == 0 {
                cr = cr.add(&NicholsElt::basis(field, a).scale(c));
            }
        }
        rep.record(cl == *x && cr == *x, || format!("counit F({r})"));
        // coassociativity on degree triples
        let mut l3: BTreeMap<(usize, usize, usize), CycNum> = BTreeMap::new();
        let mut r3: BTreeMap<(usize, usize, usize), CycNum> = BTreeMap::new();
        for (&(a, b), c) in x.coproduct().terms() {
            for (&(a1, a2), c2) in NicholsElt::basis(field, a).coproduct().terms() {
                *l3.entry((a1, a2, b)).or_insert_with(|| field.zero()) += &(c * c2);
            }
            for (&(b1, b2), c2) in NicholsElt::basis(field, b).coproduct().terms() {
                *r3.entry((a, b1, b2)).or_insert_with(|| field.zero()) += &(c * c2);
            }
        }
        rep.record(l3 == r3, || format!("coassociativity F({r})"));
        // F(r) = F^r / ⟦r⟧!
        let mut power = NicholsElt::unit(field);
        for _ in 0..r {
            power = power.product(&basis[1]);
        }
        let fact_inv = field.q_fact(r as i64).inv().expect("⟦r⟧! is invertible below p");
        rep.record(power.scale(&fact_inv) == *x, || format!("divided power F({r})"));
    }
    let mut power = NicholsElt::unit(field);
    for _ in 0..p {
        power = power.product(&basis[1]);
    }
    rep.record(power.is_zero(), || "F^p = 0".to_string());
    rep
}

/// Shuffle and half-twist oracles against the closed forms.
pub fn verify_oracles(field: &Field, max_degree: usize) -> CheckReport {
    let p = field.p() as usize;
    let mut rep = CheckReport::new(format!("shuffle and half-twist oracles p={p}"));
    for n in 0..=max_degree {
        for r in 0..=n {
            let got = shuffle_product_oracle(field, r, n - r);
            let want = field.q_binom(n as i64, r as i64);
            rep.record(got == want, || format!("shuffle ({r},{})", n - r));
        }
        let r = n as i64;
        let want = field.sign(r) * field.q_pow(r * (r - 1));
        rep.record(half_twist_oracle(field, n) == want, || format!("half twist {n}"));
        if n < p {
            rep.record(
                NicholsElt::basis(field, n).antipode() == NicholsElt::basis(field, n).scale(&want),
                || format!("antipode closed form {n}"),
            );
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_coproducts() {
        let f = Field::new(3).unwrap();
        let f1 = NicholsElt::basis(&f, 1);
        let f2 = NicholsElt::basis(&f, 2);
        assert_eq!(NicholsElt::unit(&f).product(&f2), f2);
        assert_eq!(f1.product(&f1), f2.scale(&f.q_int(2)));
        assert!(f1.product(&f2).is_zero());
        let d2 = f2.coproduct();
        assert_eq!(d2.terms().keys().copied().collect::<Vec<_>>(), vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(f1.antipode(), f1.scale(&f.from_int(-1)));
        assert_eq!(NicholsElt::unit(&f).antipode(), NicholsElt::unit(&f));
    }

    #[test]
    fn antipode_squared() {
        for p in 2..=5 {
            let f = Field::new(p).unwrap();
            for r in 0..p as usize {
                let x = NicholsElt::basis(&f, r);
                let r = r as i64;
                assert_eq!(x.antipode().antipode(), x.scale(&f.q_pow(2 * r * (r - 1))));
                assert_eq!(x.antipode().antipode_inv(), x);
            }
        }
    }

    #[test]
    fn oracle_small_values() {
        let f = Field::new(4).unwrap();
        assert!(shuffle_product_oracle(&f, 1, 0).is_one());
        assert_eq!(shuffle_product_oracle(&f, 1, 1), f.q_int(2));
        assert!(half_twist_oracle(&f, 0).is_one());
        assert_eq!(half_twist_oracle(&f, 1), -f.one());
    }

    #[test]
    fn hopf_axioms_small() {
        for p in 2..=4 {
            let f = Field::new(p).unwrap();
            let rep = verify_hopf(&f);
            assert!(rep.passed(), "{rep:?}");
            let rep = verify_oracles(&f, 5);
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
