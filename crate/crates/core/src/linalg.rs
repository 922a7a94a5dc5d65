//! Dense exact-rational linear algebra.
//!
//! Everything here is small (dimensions in the low hundreds), so plain
//! Gaussian elimination over `BigRational` with deterministic pivoting
//! (first nonzero entry, scanning columns left to right) is plenty.

use num::rational::BigRational;
use num::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Dense matrix, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl std::fmt::Debug for QMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= y;
        }
        out
    }

    pub fn scale(&self, c: &Q) -> QMat {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn neg(&self) -> QMat {
        self.scale(&-Q::one())
    }

    /// [A, B] = AB - BA.
    pub fn commutator(&self, other: &QMat) -> QMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> QMat {
        let mut out = QMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = Q::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        s += &self[(i, j)] * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // deterministic pivot: first row at or below r with a nonzero entry
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, p * self.cols + j);
                }
            }
            let inv = self[(r, c)].clone();
            for j in c..self.cols {
                let v = self[(r, j)].clone() / inv.clone();
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = self[(i, j)].clone() - &f * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel, as rows of the returned matrix.
    pub fn kernel(&self) -> QMat {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Q::zero(); self.cols];
            v[fc] = Q::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[(ri, fc)].clone();
            }
            rows.push(v);
        }
        QMat::from_rows(rows).pad_cols(self.cols)
    }
}

/// A linear subspace of Q^n, stored as an RREF basis (rows). The RREF form
/// makes equality of subspaces plain matrix equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    pub ambient: usize,
    /// RREF matrix whose rows form a basis.
    pub basis: QMat,
}

impl Subspace {
    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<Q>>) -> Self {
        let mut m = if vectors.is_empty() {
            QMat::zero(0, ambient)
        } else {
            QMat::from_rows(vectors)
        };
        let pivots = m.rref();
        let dim = pivots.len();
        let rows = (0..dim).map(|i| m.row(i).to_vec()).collect();
        Subspace { ambient, basis: QMat::from_rows(rows).pad_cols(ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: QMat::identity(ambient) }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        reduce_mod(v, self).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        (0..other.basis.rows).all(|i| self.contains(other.basis.row(i)))
    }

    /// Preimage {v in self : op(v) in target}, for op acting on the ambient space.
    pub fn stable_part(&self, op: &QMat, target: &Subspace) -> Subspace {
        // rows of C = images of our basis vectors under op
        let imgs = self.basis.mul(&op.transpose());
        // coefficients x (w.r.t. our basis) with x * imgs in target:
        // imgs_reduced = imgs modulo target; kernel of imgs_reduced^T applied from the left
        let mut rows = Vec::new();
        for i in 0..imgs.rows {
            rows.push(reduce_mod(imgs.row(i), target));
        }
        let m = QMat::from_rows(rows); // dim(self) x ambient
        let coeffs = m.transpose().kernel(); // rows: coefficient vectors
        let vecs = coeffs.mul(&self.basis);
        Subspace::from_spanning(
            self.ambient,
            (0..vecs.rows).map(|i| vecs.row(i).to_vec()).collect(),
        )
    }
}

impl QMat {
    fn pad_cols(self, cols: usize) -> QMat {
        if self.cols == cols {
            return self;
        }
        assert!(self.rows == 0, "pad_cols only for empty matrices");
        QMat::zero(0, cols)
    }
}

/// Reduce v modulo the subspace (RREF basis), returning the remainder.
pub fn reduce_mod(v: &[Q], space: &Subspace) -> Vec<Q> {
    let mut v = v.to_vec();
    for i in 0..space.basis.rows {
        // pivot of an RREF row = its first nonzero entry
        let pc = (0..space.ambient)
            .find(|&j| !space.basis[(i, j)].is_zero())
            .expect("rref row has a pivot");
        if !v[pc].is_zero() {
            let f = v[pc].clone();
            for j in 0..space.ambient {
                let d = &f * &space.basis[(i, j)];
                v[j] -= d;
            }
        }
    }
    v
}

/// Solve xs * basis = v for v in the row space; None if inconsistent.
pub fn coords_in_basis(v: &[Q], basis: &QMat) -> Option<Vec<Q>> {
    // Solve basis^T x = v by elimination on the augmented matrix.
    let n = basis.cols;
    assert_eq!(v.len(), n);
    let mut aug = QMat::zero(n, basis.rows + 1);
    for i in 0..n {
        for j in 0..basis.rows {
            aug[(i, j)] = basis[(j, i)].clone();
        }
        aug[(i, basis.rows)] = v[i].clone();
    }
    let pivots = aug.rref();
    if pivots.contains(&basis.rows) {
        return None; // pivot in augmented column: inconsistent
    }
    let mut x = vec![Q::zero(); basis.rows];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[(ri, basis.rows)].clone();
    }
    Some(x)
}

pub fn is_nilpotent(m: &QMat) -> bool {
    assert_eq!(m.rows, m.cols);
    let mut p = m.clone();
    for _ in 0..m.rows {
        if p.is_zero() {
            return true;
        }
        p = p.mul(m);
    }
    p.is_zero()
}

pub fn abs_max_num(m: &QMat) -> Q {
    m.data.iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_and_kernel() {
        let m = QMat::from_rows(vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(1), q(0), q(1)],
        ]);
        let pivots = m.clone().rref();
        assert_eq!(pivots, vec![0, 1]);
        let k = m.kernel();
        assert_eq!(k.rows, 1);
        // kernel vector v satisfies m v = 0
        let v: Vec<Q> = k.row(0).to_vec();
        assert!(m.apply(&v).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn subspace_ops() {
        let s = Subspace::from_spanning(3, vec![vec![q(1), q(1), q(0)], vec![q(2), q(2), q(0)]]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[q(3), q(3), q(0)]));
        assert!(!s.contains(&[q(1), q(0), q(0)]));
    }

    #[test]
    fn stable_part_shrinks() {
        // shift operator on Q^3: e1->e2->e3->0; largest subspace S of span{e1,e2}
        // with op(S) in span{e1,e2} is span{e2}... op(e2)=e3 not in span, so S={0}? No:
        // op(e2)=e3, not in target; op(e1)=e2 in span. S = {v=a e1 + b e2 : a e2 + b e3 in target}
        // => b=0 => span{e1}.
        let mut op = QMat::zero(3, 3);
        op[(1, 0)] = q(1);
        op[(2, 1)] = q(1);
        let s = Subspace::from_spanning(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let t = s.stable_part(&op, &s);
        assert_eq!(t.dim(), 1);
        assert!(t.contains(&[q(1), q(0), q(0)]));
    }
}
