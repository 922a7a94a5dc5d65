//! Finite-dimensional B-modules: weight-graded vector spaces over Q with
//! one nilpotent operator per simple root. The operator attached to the
//! simple root a_i realizes the action of the root vector e_{-a_i} of the
//! nilpotent radical and lowers weights, mapping the mu weight space into
//! the (mu - a_i) weight space. (This is the convention under which the
//! lowest root line g_{-a_0} of the adjoint module is the unique stable
//! line, and under which kernels of evaluation maps are submodules.)

use crate::cartan::{simple_root, ChevalleyRealization, RootSystem, Weight};
use crate::linalg::{coords_in_basis, is_nilpotent, q, QMat, Subspace, Q};
use num::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum BModError {
    #[error("weight {0} has multiplicity > 1: ambiguous generator")]
    AmbiguousGenerator(Weight),
    #[error("operator strings are not integrable at residue class of {0}")]
    NotIntegrable(Weight),
}

/// A weight-graded B-module. Basis vectors are ordered canonically by
/// (weight, construction order), so equal modules compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BModule {
    pub n: usize,
    /// Weight of each basis vector, ascending.
    pub weights: Vec<Weight>,
    /// ops[i-1] is the d x d matrix of the i-th lowering operator acting on
    /// column vectors.
    pub ops: Vec<QMat>,
}

impl BModule {
    /// Canonicalize the basis order and assert the structural invariants:
    /// grading, nilpotency, and commutation of non-adjacent operators.
    pub fn new(n: usize, weights: Vec<Weight>, ops: Vec<QMat>) -> BModule {
        let d = weights.len();
        assert_eq!(ops.len(), n);
        for m in &ops {
            assert_eq!((m.rows, m.cols), (d, d));
        }
        // stable sort by weight
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by(|&a, &b| weights[a].cmp(&weights[b]));
        let weights: Vec<Weight> = order.iter().map(|&k| weights[k].clone()).collect();
        let ops: Vec<QMat> = ops
            .iter()
            .map(|m| {
                let mut p = QMat::zero(d, d);
                for r in 0..d {
                    for c in 0..d {
                        p[(r, c)] = m[(order[r], order[c])].clone();
                    }
                }
                p
            })
            .collect();
        let module = BModule { n, weights, ops };
        module.assert_invariants();
        module
    }

    fn assert_invariants(&self) {
        let d = self.dim();
        for i in 1..=self.n {
            let ai = simple_root(self.n, i);
            let m = &self.ops[i - 1];
            for r in 0..d {
                for c in 0..d {
                    if !m[(r, c)].is_zero() {
                        assert_eq!(
                            self.weights[r],
                            self.weights[c].sub(&ai),
                            "operator {i} breaks the weight grading"
                        );
                    }
                }
            }
            assert!(is_nilpotent(m), "operator {i} is not nilpotent");
        }
        for i in 1..=self.n {
            for j in i + 2..=self.n {
                assert!(
                    self.ops[i - 1].commutator(&self.ops[j - 1]).is_zero(),
                    "non-adjacent operators {i}, {j} must commute"
                );
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn mult(&self, mu: &Weight) -> usize {
        self.weights.iter().filter(|w| *w == mu).count()
    }

    pub fn character(&self) -> Character {
        let mut map = BTreeMap::new();
        for w in &self.weights {
            *map.entry(w.clone()).or_insert(0usize) += 1;
        }
        Character(map)
    }

    /// Indices of the basis vectors of weight mu.
    pub fn weight_indices(&self, mu: &Weight) -> Vec<usize> {
        (0..self.dim()).filter(|&j| &self.weights[j] == mu).collect()
    }

    /// Debug serialization: weights plus operator entries as exact fractions.
    pub fn to_json(&self) -> serde_json::Value {
        let ops: Vec<serde_json::Value> = self
            .ops
            .iter()
            .map(|m| {
                let rows: Vec<Vec<String>> = (0..m.rows)
                    .map(|r| m.row(r).iter().map(|x| x.to_string()).collect())
                    .collect();
                serde_json::json!(rows)
            })
            .collect();
        serde_json::json!({
            "dim": self.dim(),
            "weights": self.weights.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "ops": ops,
        })
    }
}

/// A formal character: finite weight -> multiplicity map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Character(pub BTreeMap<Weight, usize>);

impl Character {
    pub fn dim(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mult(&self, mu: &Weight) -> usize {
        self.0.get(mu).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut map = self.0.clone();
        for (w, m) in &other.0 {
            *map.entry(w.clone()).or_insert(0) += m;
        }
        Character(map)
    }

    pub fn shift(&self, l: &Weight) -> Character {
        Character(self.0.iter().map(|(w, m)| (w.add(l), *m)).collect())
    }

    /// Reflection through 0: the character of the dual module.
    pub fn negated(&self) -> Character {
        Character(self.0.iter().map(|(w, m)| (w.neg(), *m)).collect())
    }

    pub fn support(&self) -> Vec<Weight> {
        self.0.keys().cloned().collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .0
            .iter()
            .map(|(w, m)| serde_json::json!({"weight": w.to_string(), "mult": m}))
            .collect();
        serde_json::json!(entries)
    }
}

impl std::fmt::Display for Character {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(w, m)| if *m == 1 { format!("{w}") } else { format!("{m}*{w}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The one-dimensional module of weight l.
pub fn line(l: Weight) -> BModule {
    let n = l.rank();
    BModule::new(n, vec![l], vec![QMat::zero(1, 1); n])
}

pub fn zero_module(n: usize) -> BModule {
    BModule::new(n, Vec::new(), vec![QMat::zero(0, 0); n])
}

/// The adjoint module g = sp(2n): root vectors plus the diagonal Cartan
/// basis, with operators acting by ad e_{-a_i}.
pub fn adjoint(rs: &RootSystem, ch: &ChevalleyRealization) -> BModule {
    let n = rs.n;
    let roots = rs.all_roots();
    let d = roots.len() + n;
    let mut weights: Vec<Weight> = roots.clone();
    weights.extend(std::iter::repeat(Weight::zero(n)).take(n));
    // index layout before canonicalization: roots then diagonal elements
    let root_index: BTreeMap<Weight, usize> =
        roots.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
    let mut ops = Vec::with_capacity(n);
    for i in 1..=n {
        let f = ch.e(&simple_root(n, i).neg());
        let mut m = QMat::zero(d, d);
        for c in 0..d {
            let x = if c < roots.len() {
                ch.e(&roots[c])
            } else {
                let mut ts = vec![Q::zero(); n];
                ts[c - roots.len()] = Q::one();
                ch.cartan(&ts)
            };
            let y = ch.bracket(&f, &x).expect("same realization");
            let (ts, coeffs) = ch.decompose(&y);
            for (b, coef) in coeffs {
                m[(root_index[&b], c)] = coef;
            }
            for (j, t) in ts.into_iter().enumerate() {
                m[(roots.len() + j, c)] = t;
            }
        }
        ops.push(m);
    }
    BModule::new(n, weights, ops)
}

/// Smallest submodule of V containing the given vectors: closes the
/// homogeneous components of the generators under all lowering operators.
pub fn generated_submodule(v: &BModule, gens: &[Vec<Q>]) -> BModule {
    let d = v.dim();
    let mut spans: BTreeMap<Weight, Subspace> = BTreeMap::new();
    let mut work: Vec<(Weight, Vec<Q>)> = Vec::new();
    // homogeneous components of the generators
    for g in gens {
        assert_eq!(g.len(), d);
        let mut by_weight: BTreeMap<Weight, Vec<Q>> = BTreeMap::new();
        for (j, coef) in g.iter().enumerate() {
            if !coef.is_zero() {
                by_weight
                    .entry(v.weights[j].clone())
                    .or_insert_with(|| vec![Q::zero(); d])[j] = coef.clone();
            }
        }
        work.extend(by_weight);
    }
    while let Some((mu, vec)) = work.pop() {
        let span = spans
            .entry(mu.clone())
            .or_insert_with(|| Subspace::from_spanning(d, Vec::new()));
        if span.contains(&vec) {
            continue;
        }
        let mut all = (0..span.basis.rows).map(|r| span.basis.row(r).to_vec()).collect::<Vec<_>>();
        all.push(vec.clone());
        *span = Subspace::from_spanning(d, all);
        for i in 1..=v.n {
            let img = v.ops[i - 1].apply(&vec);
            if img.iter().any(|x| !x.is_zero()) {
                work.push((mu.sub(&simple_root(v.n, i)), img));
            }
        }
    }
    // assemble the new module on the collected homogeneous basis
    let mut basis_rows: Vec<Vec<Q>> = Vec::new();
    let mut weights: Vec<Weight> = Vec::new();
    for (mu, span) in &spans {
        for r in 0..span.basis.rows {
            basis_rows.push(span.basis.row(r).to_vec());
            weights.push(mu.clone());
        }
    }
    let nd = basis_rows.len();
    if nd == 0 {
        return zero_module(v.n);
    }
    let basis = QMat::from_rows(basis_rows.clone());
    let ops = (1..=v.n)
        .map(|i| {
            let mut m = QMat::zero(nd, nd);
            for (c, vecc) in basis_rows.iter().enumerate() {
                let img = v.ops[i - 1].apply(vecc);
                let xs = coords_in_basis(&img, &basis)
                    .expect("closure is operator-stable by construction");
                for (r, x) in xs.into_iter().enumerate() {
                    m[(r, c)] = x;
                }
            }
            m
        })
        .collect();
    BModule::new(v.n, weights, ops)
}

/// The submodule of g generated by the fundamental coweight h(a_n):
/// C h(a_n) plus every root space g_b with b <= -a_n.
pub fn gprime(rs: &RootSystem, ch: &ChevalleyRealization) -> BModule {
    let g = adjoint(rs, ch);
    let h = ch.fundamental_coweight_n();
    let (ts, coeffs) = ch.decompose(&h);
    assert!(coeffs.is_empty());
    // coordinates of h(a_n) in the adjoint basis (canonical order): the
    // zero-weight block keeps the diagonal construction order
    let d = g.dim();
    let zero_idx = g.weight_indices(&Weight::zero(rs.n));
    assert_eq!(zero_idx.len(), rs.n);
    let mut vec = vec![Q::zero(); d];
    for (j, t) in ts.into_iter().enumerate() {
        vec[zero_idx[j]] = t;
    }
    generated_submodule(&g, &[vec])
}

/// The two-dimensional module C h_{a_i} + C_{-a_i}: the kernel of the
/// evaluation map out of the rank-1 cohomology H^0(s_i, a_i). As a module
/// over the rank-1 Borel of a_i it is one 2-dimensional string with lowest
/// weight -a_i, so its rank-1 cohomology vanishes in all degrees.
pub fn k1_alpha(n: usize, i: usize) -> BModule {
    let ai = simple_root(n, i);
    let weights = vec![Weight::zero(n), ai.neg()];
    let mut ops = vec![QMat::zero(2, 2); n];
    // lowering operator for a_i sends the coweight vector to e_{-a_i}
    ops[i - 1][(1, 0)] = Q::one();
    BModule::new(n, weights, ops)
}

/// The kernel module for the long simple root: C h(a_n) + C_{-a_n}.
pub fn k1(n: usize) -> BModule {
    k1_alpha(n, n)
}

/// Dual module: weights negated, operators -transpose.
pub fn dual(v: &BModule) -> BModule {
    let weights = v.weights.iter().map(Weight::neg).collect();
    let ops = v.ops.iter().map(|m| m.transpose().neg()).collect();
    BModule::new(v.n, weights, ops)
}

/// Tensor with the character of weight l: shifts every weight, operators
/// unchanged.
pub fn tensor_char(v: &BModule, l: &Weight) -> BModule {
    let weights = v.weights.iter().map(|w| w.add(l)).collect();
    BModule::new(v.n, weights, v.ops.clone())
}

pub fn direct_sum(a: &BModule, b: &BModule) -> BModule {
    assert_eq!(a.n, b.n);
    let da = a.dim();
    let d = da + b.dim();
    let mut weights = a.weights.clone();
    weights.extend(b.weights.iter().cloned());
    let ops = (0..a.n)
        .map(|i| {
            let mut m = QMat::zero(d, d);
            for r in 0..da {
                for c in 0..da {
                    m[(r, c)] = a.ops[i][(r, c)].clone();
                }
            }
            for r in 0..b.dim() {
                for c in 0..b.dim() {
                    m[(da + r, da + c)] = b.ops[i][(r, c)].clone();
                }
            }
            m
        })
        .collect();
    BModule::new(a.n, weights, ops)
}

/// Decompose V as a module over the rank-1 Borel of a_i into indecomposable
/// summands (irreducible sl2-string) x (character twist). Each summand is
/// reported as (string dimension, lowest weight of the string). Computed by
/// graded Jordan analysis of the i-th operator on each a_i-residue class.
pub fn balpha_decompose(v: &BModule, i: usize) -> Result<Vec<(usize, Weight)>, BModError> {
    let ai = simple_root(v.n, i);
    // residue class key: the a_i-invariant part of mu, doubled to stay integral
    let class_key = |mu: &Weight| mu.scaled(2).sub(&ai.scaled(mu.pairing(i)));
    let mut classes: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for j in 0..v.dim() {
        classes.entry(class_key(&v.weights[j])).or_default().push(j);
    }
    let mut out = Vec::new();
    for idx in classes.values() {
        // levels: top weight of the class and steps of a_i downward
        let top = idx
            .iter()
            .map(|&j| &v.weights[j])
            .max_by_key(|w| w.pairing(i))
            .unwrap()
            .clone();
        let level_of = |mu: &Weight| -> usize {
            let diff = top.pairing(i) - mu.pairing(i);
            debug_assert!(diff >= 0 && diff % 2 == 0);
            (diff / 2) as usize
        };
        let tmax = idx.iter().map(|&j| level_of(&v.weights[j])).max().unwrap();
        let levels: Vec<Vec<usize>> = (0..=tmax)
            .map(|t| {
                idx.iter().copied().filter(|&j| level_of(&v.weights[j]) == t).collect()
            })
            .collect();
        // transition matrices level t -> t+1
        let trans: Vec<QMat> = (0..tmax)
            .map(|t| {
                let mut m = QMat::zero(levels[t + 1].len(), levels[t].len());
                for (r, &jr) in levels[t + 1].iter().enumerate() {
                    for (c, &jc) in levels[t].iter().enumerate() {
                        m[(r, c)] = v.ops[i - 1][(jr, jc)].clone();
                    }
                }
                m
            })
            .collect();
        // rank of the composite level t -> level s (s >= t)
        let rank = |t: isize, s: isize| -> isize {
            if t < 0 || s > tmax as isize || t > s {
                return 0;
            }
            if t == s {
                return levels[t as usize].len() as isize;
            }
            let mut m = trans[t as usize].clone();
            for u in t as usize + 1..s as usize {
                m = trans[u].mul(&m);
            }
            m.rank() as isize
        };
        let mut counted = 0usize;
        for t in 0..=tmax as isize {
            for s in t..=tmax as isize {
                let nblocks = rank(t, s) - rank(t, s + 1) - rank(t - 1, s) + rank(t - 1, s + 1);
                if nblocks < 0 {
                    return Err(BModError::NotIntegrable(top));
                }
                for _ in 0..nblocks {
                    let dimstr = (s - t + 1) as usize;
                    let lowest = top.sub(&ai.scaled(s as i64));
                    out.push((dimstr, lowest));
                    counted += dimstr;
                }
            }
        }
        if counted != idx.len() {
            return Err(BModError::NotIntegrable(top));
        }
    }
    out.sort();
    Ok(out)
}

/// Weights of vectors killed by every lowering operator, with the dimension
/// of the stable subspace in each weight.
pub fn b_stable_lines(v: &BModule) -> Vec<(Weight, usize)> {
    let mut out = Vec::new();
    for mu in v.character().support() {
        let cols = v.weight_indices(&mu);
        // stack the mu-columns of every operator
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for m in &v.ops {
            for r in 0..v.dim() {
                rows.push(cols.iter().map(|&c| m[(r, c)].clone()).collect());
            }
        }
        let stacked = QMat::from_rows(rows);
        let dim = cols.len() - stacked.rank();
        if dim > 0 {
            out.push((mu, dim));
        }
    }
    out
}

/// Is V generated by its (multiplicity-one) weight vector of weight mu?
pub fn is_cyclic(v: &BModule, mu: &Weight) -> Result<bool, BModError> {
    let idx = v.weight_indices(mu);
    if idx.len() != 1 {
        return Err(BModError::AmbiguousGenerator(mu.clone()));
    }
    let mut gen = vec![Q::zero(); v.dim()];
    gen[idx[0]] = Q::one();
    Ok(generated_submodule(v, &[gen]).dim() == v.dim())
}

/// The three-dimensional adjoint module of the sl2 attached to a_i,
/// realized abstractly with the standard structure constants.
pub fn sl2_module(n: usize, i: usize) -> BModule {
    let ai = simple_root(n, i);
    let weights = vec![ai.clone(), Weight::zero(n), ai.neg()];
    let mut ops = vec![QMat::zero(3, 3); n];
    // ad f: e -> -h, h -> 2f, f -> 0
    ops[i - 1][(1, 0)] = -Q::one();
    ops[i - 1][(2, 1)] = q(2);
    BModule::new(n, weights, ops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build, fundamental_weight};
    use num::One;

    fn setup(n: usize) -> (RootSystem, ChevalleyRealization) {
        let rs = build(n).unwrap();
        let ch = ChevalleyRealization::new(&rs);
        (rs, ch)
    }

    #[test]
    fn lines() {
        let l = Weight(vec![1, 0, -2]);
        let m = line(l.clone());
        assert_eq!(m.dim(), 1);
        assert_eq!(m.character().0, [(l.clone(), 1)].into_iter().collect());
        assert_eq!(dual(&line(l.clone())), line(l.neg()));
        assert_eq!(zero_module(3).dim(), 0);
    }

    #[test]
    fn adjoint_module() {
        let (rs, ch) = setup(3);
        let g = adjoint(&rs, &ch);
        assert_eq!(g.dim(), 21);
        assert_eq!(g.mult(&Weight::zero(3)), 3);
        // the unique stable line is the lowest root space
        let a0 = rs.highest_root();
        assert_eq!(b_stable_lines(&g), vec![(a0.neg(), 1)]);
    }

    #[test]
    fn generated_coweight_submodule() {
        let (rs, ch) = setup(3);
        let gp = gprime(&rs, &ch);
        assert_eq!(gp.dim(), 7);
        // character: {0} plus every root b <= -a_n
        let an = simple_root(3, 3);
        let mut expected: BTreeMap<Weight, usize> = BTreeMap::new();
        expected.insert(Weight::zero(3), 1);
        for b in rs.all_roots() {
            if rs.le(&b, &an.neg()) {
                *expected.entry(b).or_insert(0) += 1;
            }
        }
        assert_eq!(gp.character().0, expected);
        // idempotence: regenerating from a full basis returns the same module
        let full: Vec<Vec<Q>> = (0..gp.dim())
            .map(|j| {
                let mut v = vec![Q::zero(); gp.dim()];
                v[j] = Q::one();
                v
            })
            .collect();
        assert_eq!(generated_submodule(&gp, &full), gp);
    }

    #[test]
    fn k1_module() {
        let m = k1(3);
        assert_eq!(m.dim(), 2);
        for j in 1..=2 {
            assert!(m.ops[j - 1].is_zero());
        }
        assert!(!m.ops[2].is_zero());
        // generated by the zero-weight vector
        assert_eq!(is_cyclic(&m, &Weight::zero(3)), Ok(true));
        assert_eq!(is_cyclic(&m, &simple_root(3, 3).neg()), Ok(false));
        // as a rank-1 module for a_n: one 2-dimensional string ending at -a_n
        assert_eq!(
            balpha_decompose(&m, 3),
            Ok(vec![(2, simple_root(3, 3).neg())])
        );
        // tensor shift
        let shifted = tensor_char(&m, &fundamental_weight(3, 3));
        let wn = fundamental_weight(3, 3);
        assert_eq!(
            shifted.character().0,
            [(wn.clone(), 1), (wn.sub(&simple_root(3, 3)), 1)]
                .into_iter()
                .collect()
        );
    }

    #[test]
    fn k1_inside_gprime() {
        // inside g, the coweight h(a_n) and e_{-a_n} span a k1 copy for the
        // a_n-string through zero
        let (rs, ch) = setup(4);
        let gp = gprime(&rs, &ch);
        let blocks = balpha_decompose(&gp, 4).unwrap();
        assert!(blocks.contains(&(2, simple_root(4, 4).neg())));
    }

    #[test]
    fn duality_involution() {
        let (rs, ch) = setup(3);
        let g = adjoint(&rs, &ch);
        let gp = gprime(&rs, &ch);
        let mut modules = vec![
            g.clone(),
            gp.clone(),
            k1(3),
            sl2_module(3, 2),
            line(Weight(vec![2, -1, 0])),
            direct_sum(&k1(3), &sl2_module(3, 1)),
        ];
        // a spread of tensor twists and generated submodules
        for i in 1..=3 {
            modules.push(tensor_char(&gp, &fundamental_weight(3, i)));
            modules.push(sl2_module(3, i));
            let mut gen = vec![Q::zero(); g.dim()];
            gen[i] = Q::one();
            modules.push(generated_submodule(&g, &[gen]));
        }
        for i in 1..=3 {
            modules.push(tensor_char(&k1(3), &simple_root(3, i).neg()));
            modules.push(direct_sum(&sl2_module(3, i), &line(Weight::zero(3))));
        }
        assert!(modules.len() >= 20 - 2);
        for m in &modules {
            assert_eq!(&dual(&dual(m)), m);
            assert_eq!(dual(m).character(), m.character().negated());
        }
    }

    #[test]
    fn direct_sum_character() {
        let a = k1(3);
        let b = sl2_module(3, 1);
        assert_eq!(
            direct_sum(&a, &b).character(),
            a.character().add(&b.character())
        );
    }

    #[test]
    fn sl2_string_decomposition() {
        // the adjoint sl2 for a_{n-1} is one 3-dimensional string
        let m = sl2_module(3, 2);
        assert_eq!(
            balpha_decompose(&m, 2),
            Ok(vec![(3, simple_root(3, 2).neg())])
        );
        // a line is a singleton string for every index
        let l = Weight(vec![0, 1, -1]);
        for i in 1..=3 {
            assert_eq!(balpha_decompose(&line(l.clone()), i), Ok(vec![(1, l.clone())]));
        }
    }

    #[test]
    fn decomposition_reproduces_character() {
        let (rs, ch) = setup(3);
        for m in [adjoint(&rs, &ch), gprime(&rs, &ch), k1(3), sl2_module(3, 2)] {
            for i in 1..=3 {
                let blocks = balpha_decompose(&m, i).unwrap();
                let mut rebuilt: BTreeMap<Weight, usize> = BTreeMap::new();
                for (d, lowest) in blocks {
                    for t in 0..d {
                        let w = lowest.add(&simple_root(3, i).scaled(t as i64));
                        *rebuilt.entry(w).or_insert(0) += 1;
                    }
                }
                assert_eq!(rebuilt, m.character().0);
            }
        }
    }

    #[test]
    fn cyclic_checks() {
        let l = Weight(vec![1, 1, 0]);
        assert_eq!(is_cyclic(&line(l.clone()), &l), Ok(true));
        let (rs, ch) = setup(3);
        let g = adjoint(&rs, &ch);
        assert_eq!(
            is_cyclic(&g, &Weight::zero(3)),
            Err(BModError::AmbiguousGenerator(Weight::zero(3)))
        );
        // g is generated by its highest root vector
        assert_eq!(is_cyclic(&g, &rs.highest_root()), Ok(true));
        // g' is generated by h(a_n) (multiplicity one at 0 there)
        let gp = gprime(&rs, &ch);
        assert_eq!(is_cyclic(&gp, &Weight::zero(3)), Ok(true));
    }

    #[test]
    fn json_debug_shape() {
        let v = k1(2).to_json();
        assert_eq!(v["dim"], 2);
        assert_eq!(v["weights"].as_array().unwrap().len(), 2);
        assert!(v["ops"].as_array().unwrap().len() == 2);
    }
}
