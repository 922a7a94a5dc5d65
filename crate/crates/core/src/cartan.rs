//! Type C_n root and weight combinatorics, plus a concrete matrix model of
//! sp(2n) that supplies all structure constants.
//!
//! Weights live in the epsilon-coordinate lattice: a weight is an integer
//! vector (c_1, ..., c_n) meaning c_1 e_1 + ... + c_n e_n. Simple roots are
//! a_i = e_i - e_{i+1} for i < n and a_n = 2 e_n. In these coordinates every
//! coroot pairing is an integer with no denominators:
//!   <l, a_i^> = l_i - l_{i+1}   (i < n),      <l, a_n^> = l_n.

use crate::linalg::{q, Q, QMat};
use num::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// A weight in epsilon-coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

impl std::fmt::Debug for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| c * a).collect())
    }

    /// Exact coroot pairing <self, a_i^> for a simple root index 1 <= i <= n.
    pub fn pairing(&self, i: usize) -> i64 {
        let n = self.rank();
        assert!((1..=n).contains(&i), "simple root index out of range");
        if i < n {
            self.0[i - 1] - self.0[i]
        } else {
            self.0[n - 1]
        }
    }

    /// Simple reflection s_i applied to the weight.
    pub fn reflect(&self, i: usize) -> Weight {
        let n = self.rank();
        assert!((1..=n).contains(&i), "simple root index out of range");
        let mut c = self.0.clone();
        if i < n {
            c.swap(i - 1, i);
        } else {
            c[n - 1] = -c[n - 1];
        }
        Weight(c)
    }

    /// Dot action s_i . l = s_i(l + rho) - rho.
    pub fn dot_reflect(&self, i: usize) -> Weight {
        let rho = rho(self.rank());
        self.add(&rho).reflect(i).sub(&rho)
    }

    /// Coordinates in the simple-root basis, if the weight lies in the root
    /// lattice: self = sum_i c_i a_i. Returns None when c_n would be a half
    /// integer.
    pub fn root_coords(&self) -> Option<Vec<i64>> {
        let n = self.rank();
        let mut c = Vec::with_capacity(n);
        let mut partial = 0i64;
        for j in 0..n - 1 {
            partial += self.0[j];
            c.push(partial);
        }
        partial += self.0[n - 1];
        if partial % 2 != 0 {
            return None;
        }
        c.push(partial / 2);
        Some(c)
    }
}

pub fn simple_root(n: usize, i: usize) -> Weight {
    assert!((1..=n).contains(&i));
    let mut c = vec![0; n];
    if i < n {
        c[i - 1] = 1;
        c[i] = -1;
    } else {
        c[n - 1] = 2;
    }
    Weight(c)
}

pub fn fundamental_weight(n: usize, i: usize) -> Weight {
    assert!((1..=n).contains(&i));
    let mut c = vec![0; n];
    c[..i].fill(1);
    Weight(c)
}

/// Half sum of positive roots: (n, n-1, ..., 1).
pub fn rho(n: usize) -> Weight {
    Weight((0..n).map(|j| (n - j) as i64).collect())
}

/// Root data of type C_n.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub n: usize,
    /// All positive roots in a fixed order: e_i - e_j (i<j), e_i + e_j (i<j),
    /// then the long roots 2 e_i.
    pub positive_roots: Vec<Weight>,
}

#[derive(Debug, thiserror::Error)]
pub enum CartanError {
    #[error("rank unsupported: need n >= 2, got {0}")]
    RankUnsupported(usize),
    #[error("mismatched realization: elements have ranks {0} and {1}")]
    MismatchedRealization(usize, usize),
}

/// Build the C_n root system. Needs n >= 2.
pub fn build(n: usize) -> Result<RootSystem, CartanError> {
    if n < 2 {
        return Err(CartanError::RankUnsupported(n));
    }
    let mut positive_roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut c = vec![0; n];
            c[i] = 1;
            c[j] = -1;
            positive_roots.push(Weight(c));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let mut c = vec![0; n];
            c[i] = 1;
            c[j] = 1;
            positive_roots.push(Weight(c));
        }
    }
    for i in 0..n {
        let mut c = vec![0; n];
        c[i] = 2;
        positive_roots.push(Weight(c));
    }
    debug_assert_eq!(positive_roots.len(), n * n);
    Ok(RootSystem { n, positive_roots })
}

impl RootSystem {
    pub fn all_roots(&self) -> Vec<Weight> {
        let mut v = self.positive_roots.clone();
        v.extend(self.positive_roots.iter().map(Weight::neg));
        v
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.positive_roots.contains(w) || self.positive_roots.contains(&w.neg())
    }

    pub fn is_short(&self, w: &Weight) -> bool {
        self.is_root(w) && w.0.iter().all(|&c| c.abs() <= 1)
    }

    pub fn is_long(&self, w: &Weight) -> bool {
        self.is_root(w) && !self.is_short(w)
    }

    /// Highest (long) root 2 e_1.
    pub fn highest_root(&self) -> Weight {
        let mut c = vec![0; self.n];
        c[0] = 2;
        Weight(c)
    }

    /// Highest short root e_1 + e_2 (= omega_2 as a weight).
    pub fn highest_short_root(&self) -> Weight {
        let mut c = vec![0; self.n];
        c[0] = 1;
        c[1] = 1;
        Weight(c)
    }

    /// Partial root order: a <= b iff b - a is a nonnegative integer
    /// combination of simple roots.
    pub fn le(&self, a: &Weight, b: &Weight) -> bool {
        match b.sub(a).root_coords() {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    pub fn negative_short_roots(&self) -> Vec<Weight> {
        self.positive_roots
            .iter()
            .filter(|r| self.is_short(r))
            .map(Weight::neg)
            .collect()
    }
}

/// An element of the matrix model of sp(2n), tagged with its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElt {
    pub n: usize,
    pub mat: QMat,
}

/// sp(2n) realized as 2n x 2n matrices preserving the symplectic form
/// J = [[0, I], [-I, 0]]: block matrices [[A, B], [C, -A^T]] with B, C
/// symmetric. Root vectors are (sums of) elementary matrices, so all
/// structure constants come out of commutators with no sign tables.
#[derive(Clone, Debug)]
pub struct ChevalleyRealization {
    pub n: usize,
    /// e_b for every root b (positive and negative).
    root_vectors: BTreeMap<Weight, QMat>,
}

impl ChevalleyRealization {
    pub fn new(roots: &RootSystem) -> Self {
        let n = roots.n;
        let d = 2 * n;
        let em = |i: usize, j: usize| -> QMat {
            let mut m = QMat::zero(d, d);
            m[(i, j)] = Q::one();
            m
        };
        let mut root_vectors = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                // e_{e_i - e_j} = E_ij - E_{n+j, n+i}
                let mut c = vec![0; n];
                c[i] = 1;
                c[j] = -1;
                root_vectors.insert(Weight(c), em(i, j).sub(&em(n + j, n + i)));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                // e_{e_i + e_j} = E_{i, n+j} + E_{j, n+i}; negative mirrored
                let mut c = vec![0; n];
                c[i] = 1;
                c[j] = 1;
                root_vectors.insert(Weight(c.clone()), em(i, n + j).add(&em(j, n + i)));
                root_vectors.insert(Weight(c).neg(), em(n + j, i).add(&em(n + i, j)));
            }
        }
        for i in 0..n {
            let mut c = vec![0; n];
            c[i] = 2;
            root_vectors.insert(Weight(c.clone()), em(i, n + i));
            root_vectors.insert(Weight(c).neg(), em(n + i, i));
        }
        ChevalleyRealization { n, root_vectors }
    }

    pub fn e(&self, root: &Weight) -> AlgElt {
        AlgElt {
            n: self.n,
            mat: self.root_vectors.get(root).expect("not a root").clone(),
        }
    }

    /// Cartan element with diagonal (t_1..t_n, -t_1..-t_n).
    pub fn cartan(&self, ts: &[Q]) -> AlgElt {
        assert_eq!(ts.len(), self.n);
        let mut m = QMat::zero(2 * self.n, 2 * self.n);
        for (i, t) in ts.iter().enumerate() {
            m[(i, i)] = t.clone();
            m[(self.n + i, self.n + i)] = -t.clone();
        }
        AlgElt { n: self.n, mat: m }
    }

    /// Coroot h_{a_i}, normalized so that a_i(h_{a_i}) = 2.
    pub fn coroot(&self, i: usize) -> AlgElt {
        let n = self.n;
        assert!((1..=n).contains(&i));
        let mut ts = vec![Q::zero(); n];
        if i < n {
            ts[i - 1] = Q::one();
            ts[i] = -Q::one();
        } else {
            ts[n - 1] = Q::one();
        }
        self.cartan(&ts)
    }

    /// Fundamental dominant coweight h(a_n): a_n(h) = 1, a_i(h) = 0 for i < n.
    pub fn fundamental_coweight_n(&self) -> AlgElt {
        let half = Q::one() / q(2);
        self.cartan(&vec![half; self.n])
    }

    /// Evaluate a weight on a Cartan element (which must be diagonal).
    pub fn eval_weight(&self, w: &Weight, h: &AlgElt) -> Q {
        let mut s = Q::zero();
        for i in 0..self.n {
            if w.0[i] != 0 {
                s += q(w.0[i]) * h.mat[(i, i)].clone();
            }
        }
        s
    }

    /// Matrix commutator [x, y].
    pub fn bracket(&self, x: &AlgElt, y: &AlgElt) -> Result<AlgElt, CartanError> {
        if x.n != y.n {
            return Err(CartanError::MismatchedRealization(x.n, y.n));
        }
        Ok(AlgElt { n: x.n, mat: x.mat.commutator(&y.mat) })
    }

    /// Express an algebra element in the root-space / Cartan basis:
    /// returns (diagonal entries t_1..t_n, coefficient of e_b per root b).
    /// Panics if the element is not in the span (signals a bug upstream).
    pub fn decompose(&self, x: &AlgElt) -> (Vec<Q>, BTreeMap<Weight, Q>) {
        let n = self.n;
        let ts: Vec<Q> = (0..n).map(|i| x.mat[(i, i)].clone()).collect();
        let mut coeffs = BTreeMap::new();
        let mut recon = self.cartan(&ts).mat;
        for (root, mat) in &self.root_vectors {
            // every root vector has a distinguished entry with coefficient 1
            let (pi, pj) = Self::probe(n, root);
            let c = x.mat[(pi, pj)].clone();
            if !c.is_zero() {
                recon = recon.add(&mat.scale(&c));
                coeffs.insert(root.clone(), c);
            }
        }
        assert!(recon == x.mat, "element not in the realized algebra span");
        (ts, coeffs)
    }

    /// Matrix position whose entry carries the coefficient of e_root.
    fn probe(n: usize, root: &Weight) -> (usize, usize) {
        let pos: Vec<usize> = (0..n).filter(|&i| root.0[i] > 0).collect();
        let neg: Vec<usize> = (0..n).filter(|&i| root.0[i] < 0).collect();
        match (pos.as_slice(), neg.as_slice()) {
            ([i], [j]) if root.0[*i] == 1 && root.0[*j] == -1 => (*i, *j), // e_i - e_j
            ([i], []) if root.0[*i] == 2 => (*i, n + *i),                  // 2 e_i
            ([], [i]) if root.0[*i] == -2 => (n + *i, *i),                 // -2 e_i
            ([i, j], []) => (*i, n + *j),                                  // e_i + e_j, i < j
            ([], [i, j]) => (n + *j, *i),                                  // -(e_i + e_j)
            _ => panic!("not a C_n root: {:?}", root),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_special_roots() {
        let r3 = build(3).unwrap();
        assert_eq!(r3.positive_roots.len(), 9);
        assert_eq!(r3.highest_short_root(), fundamental_weight(3, 2));
        let r2 = build(2).unwrap();
        assert_eq!(r2.positive_roots.len(), 4);
        assert!(build(1).is_err());
    }

    #[test]
    fn pairings() {
        let n = 3;
        // <a_n, a_{n-1}^> = -2
        assert_eq!(simple_root(n, 3).pairing(2), -2);
        // <a_{n-1}, a_{n-2}^> = -1
        assert_eq!(simple_root(n, 2).pairing(1), -1);
        // <w_1, a_1^> = 1
        assert_eq!(fundamental_weight(n, 1).pairing(1), 1);
        // full Cartan matrix row check: <w_i, a_j^> = delta_ij
        for i in 1..=n {
            for j in 1..=n {
                assert_eq!(
                    fundamental_weight(n, i).pairing(j),
                    if i == j { 1 } else { 0 }
                );
            }
        }
    }

    #[test]
    fn reflections() {
        let n = 3;
        // s_{n-1} . a_n = a_{n-1} + a_n
        assert_eq!(
            simple_root(n, 3).dot_reflect(2),
            simple_root(n, 2).add(&simple_root(n, 3))
        );
        // s_3(a_2) = a_2 + a_3 in C_3
        assert_eq!(
            simple_root(n, 2).reflect(3),
            simple_root(n, 2).add(&simple_root(n, 3))
        );
        // s_i . (-a_i) = 0: <-a_i + rho, a_i^> = -1, so the dot reflection
        // adds a_i back
        for i in 1..=n {
            let m = simple_root(n, i).neg();
            assert_eq!(m.dot_reflect(i), Weight::zero(n));
        }
        // the dot-fixed weights of s_i are those with pairing -1
        assert_eq!(
            Weight(vec![0, 0, -1]).dot_reflect(3),
            Weight(vec![0, 0, -1])
        );
    }

    #[test]
    fn rho_is_half_sum() {
        for n in 2..=5 {
            let rs = build(n).unwrap();
            let mut total = Weight::zero(n);
            for r in &rs.positive_roots {
                total = total.add(r);
            }
            assert_eq!(total, rho(n).scaled(2));
        }
    }

    #[test]
    fn sl2_triples_and_weights() {
        let rs = build(3).unwrap();
        let ch = ChevalleyRealization::new(&rs);
        let an = simple_root(3, 3);
        // [e_{a_n}, e_{-a_n}] = h with a_n(h) = 2
        let h = ch.bracket(&ch.e(&an), &ch.e(&an.neg())).unwrap();
        assert_eq!(ch.eval_weight(&an, &h), q(2));
        // [h, e_b] = b(h) e_b for every Cartan h and root b
        for i in 1..=3 {
            let hi = ch.coroot(i);
            for b in rs.all_roots() {
                let lhs = ch.bracket(&hi, &ch.e(&b)).unwrap();
                let expected = ch.e(&b).mat.scale(&ch.eval_weight(&b, &hi));
                assert!(lhs.mat == expected, "[h_{i}, e_{b}] mismatch");
            }
        }
    }

    #[test]
    fn fundamental_coweight() {
        let rs = build(4).unwrap();
        let ch = ChevalleyRealization::new(&rs);
        let h = ch.fundamental_coweight_n();
        assert_eq!(ch.eval_weight(&simple_root(4, 4), &h), q(1));
        for i in 1..4 {
            assert_eq!(ch.eval_weight(&simple_root(4, i), &h), q(0));
        }
        // [h(a_n), e_{-a_n}] = -e_{-a_n}
        let f = ch.e(&simple_root(4, 4).neg());
        let br = ch.bracket(&h, &f).unwrap();
        assert!(br.mat == f.mat.neg());
    }

    #[test]
    fn bracket_structure_constants_exhaustive() {
        // For roots b, c with b + c a root, [e_b, e_c] is a nonzero multiple
        // of e_{b+c}; when b + c is neither a root nor 0, the bracket is 0.
        for n in [3usize, 4] {
            let rs = build(n).unwrap();
            let ch = ChevalleyRealization::new(&rs);
            let all = rs.all_roots();
            for b in &all {
                for c in &all {
                    let s = b.add(c);
                    let br = ch.bracket(&ch.e(b), &ch.e(c)).unwrap();
                    if rs.is_root(&s) {
                        let (ts, coeffs) = ch.decompose(&br);
                        assert!(ts.iter().all(|t| t.is_zero()));
                        assert_eq!(coeffs.len(), 1);
                        let (w, coef) = coeffs.iter().next().unwrap();
                        assert_eq!(w, &s);
                        assert!(!coef.is_zero());
                    } else if !s.is_zero() {
                        assert!(br.mat.is_zero(), "[e_{b}, e_{c}] should vanish");
                    }
                }
            }
        }
    }

    #[test]
    fn bracket_ej_with_f_n() {
        // [e_{a_j}, e_{-a_n}] = 0 for j != n (a_j - a_n is never a root),
        // while [e_{a_n}, e_{-a_n}] is the coroot of a_n
        let rs = build(4).unwrap();
        let ch = ChevalleyRealization::new(&rs);
        let f = ch.e(&simple_root(4, 4).neg());
        for j in 1..=3 {
            let br = ch.bracket(&ch.e(&simple_root(4, j)), &f).unwrap();
            assert!(br.mat.is_zero());
        }
        let br = ch.bracket(&ch.e(&simple_root(4, 4)), &f).unwrap();
        assert!(!br.mat.is_zero());
    }

    #[test]
    fn dimension_count() {
        // dim sp(2n) = n(2n+1): 2n^2 root vectors plus n Cartan directions
        for n in [2usize, 3, 5] {
            let rs = build(n).unwrap();
            assert_eq!(2 * rs.positive_roots.len() + n, n * (2 * n + 1));
        }
    }

    #[test]
    fn reflect_involution_sweep() {
        // 1000-sample lattice sweep: s_i(s_i(l)) = l
        let n = 4;
        let mut x: i64 = 1;
        for k in 0..1000 {
            // cheap deterministic pseudo-random lattice points
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let l = Weight((0..n).map(|j| ((x >> (8 * j)) & 0xf) as i64 - 8).collect());
            let i = (k % n) + 1;
            assert_eq!(l.reflect(i).reflect(i), l);
        }
    }

    #[test]
    fn root_order() {
        let rs = build(3).unwrap();
        let a3 = simple_root(3, 3);
        // exactly 6 roots >= a_3 in C_3
        let above: Vec<_> = rs
            .positive_roots
            .iter()
            .filter(|r| rs.le(&a3, r))
            .collect();
        assert_eq!(above.len(), 6);
    }
}
