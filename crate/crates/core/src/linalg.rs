//! Sparse Gaussian elimination over the cyclotomic field.

use std::collections::BTreeMap;

use crate::cyclo::CycNum;

pub type Vector<K> = BTreeMap<K, CycNum>;

/// `v[key] += c`, keeping the map free of explicit zeros.
pub fn accumulate<K: Ord>(v: &mut Vector<K>, key: K, c: &CycNum) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&key) {
        Some(e) => {
            *e += c;
            if e.is_zero() {
                v.remove(&key);
            }
        }
        None => {
            v.insert(key, c.clone());
        }
    }
}

pub fn add_scaled<K: Ord + Clone>(v: &mut Vector<K>, w: &Vector<K>, c: &CycNum) {
    for (k, x) in w {
        accumulate(v, k.clone(), &(x * c));
    }
}

pub fn scaled<K: Ord + Clone>(w: &Vector<K>, c: &CycNum) -> Vector<K> {
    let mut v = Vector::new();
    add_scaled(&mut v, w, c);
    v
}

pub fn sub<K: Ord + Clone>(a: &Vector<K>, b: &Vector<K>) -> Vector<K> {
    let mut v = a.clone();
    for (k, x) in b {
        accumulate(&mut v, k.clone(), &(-x));
    }
    v
}

/// A subspace kept as rows with distinct pivots, each row zero at the
/// pivots of earlier rows and normalized to 1 at its own pivot.
#[derive(Clone, Debug, Default)]
pub struct Subspace<K: Ord + Clone> {
    rows: Vec<(K, Vector<K>)>,
}

impl<K: Ord + Clone> Subspace<K> {
    pub fn new() -> Self {
        Subspace { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, v: &Vector<K>) -> Vector<K> {
        let mut v = v.clone();
        for (piv, row) in &self.rows {
            if let Some(c) = v.get(piv).cloned() {
                add_scaled(&mut v, row, &(-c));
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v`; returns whether it was independent.
    pub fn insert(&mut self, v: &Vector<K>) -> bool {
        let r = self.reduce(v);
        let Some((piv, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.inv().expect("pivot is nonzero");
        self.rows.push((piv, scaled(&r, &inv)));
        true
    }

    /// Coordinates of `v` in the basis `vs` if `v` lies in their span.
    pub fn solve_in_span(vs: &[Vector<K>], v: &Vector<K>) -> Option<Vec<CycNum>>
    where
        K: std::fmt::Debug,
    {
        // augment each generator with a tag coordinate to track combinations
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
        enum Slot<K> {
            Main(K),
            Tag(usize),
        }
        let field = v.values().next().or_else(|| vs.iter().flat_map(|w| w.values()).next())?.field().clone();
        let mut rows: Vec<(Slot<K>, Vector<Slot<K>>)> = Vec::new();
        let reduce = |rows: &Vec<(Slot<K>, Vector<Slot<K>>)>, w: &Vector<Slot<K>>| {
            let mut w = w.clone();
            for (piv, row) in rows {
                if let Some(c) = w.get(piv).cloned() {
                    add_scaled(&mut w, row, &(-c));
                }
            }
            w
        };
        for (i, g) in vs.iter().enumerate() {
            let mut w: Vector<Slot<K>> = g.iter().map(|(k, c)| (Slot::Main(k.clone()), c.clone())).collect();
            w.insert(Slot::Tag(i), field.one());
            let r = reduce(&rows, &w);
            if let Some((piv, c)) = r.iter().find(|(k, _)| matches!(k, Slot::Main(_))).map(|(k, c)| (k.clone(), c.clone())) {
                let inv = c.inv().expect("pivot is nonzero");
                rows.push((piv, scaled(&r, &inv)));
            }
        }
        let target: Vector<Slot<K>> = v.iter().map(|(k, c)| (Slot::Main(k.clone()), c.clone())).collect();
        let r = reduce(&rows, &target);
        if r.keys().any(|k| matches!(k, Slot::Main(_))) {
            return None;
        }
        // target - Σ c_i tag_i was eliminated: target = -Σ (tag coefficients) g_i
        let mut out = vec![field.zero(); vs.len()];
        for (k, c) in r {
            if let Slot::Tag(i) = k {
                out[i] = -c;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::Field;

    #[test]
    fn span_membership() {
        let f = Field::new(3).unwrap();
        let v1: Vector<u32> = [(0, f.one()), (1, f.q_pow(1))].into_iter().collect();
        let v2: Vector<u32> = [(1, f.one()), (2, f.xi())].into_iter().collect();
        let mut s = Subspace::new();
        assert!(s.insert(&v1));
        assert!(s.insert(&v2));
        let mut comb = scaled(&v1, &f.from_int(3));
        add_scaled(&mut comb, &v2, &f.q_pow(5));
        assert!(!s.insert(&comb));
        let coords = Subspace::solve_in_span(&[v1.clone(), v2.clone()], &comb).unwrap();
        assert_eq!(coords, vec![f.from_int(3), f.q_pow(5)]);
        let e2: Vector<u32> = [(2, f.one())].into_iter().collect();
        assert!(Subspace::solve_in_span(&[v1], &e2).is_none());
    }
}
