//! The Weyl group of type C_n as signed permutations of {1..n}, together
//! with the word combinatorics the verification suite runs on: reduced
//! words, Bruhat order, commutation classes, and the interval-word normal
//! forms attached to a Coxeter shape.
//!
//! Words multiply left to right as written: the word (i_1, ..., i_r) acts on
//! weights as s_{i_1}(s_{i_2}(... s_{i_r}(l))). All cohomology recursions in
//! this crate peel the leftmost letter, consistent with this convention.

use crate::cartan::{fundamental_weight, RootSystem, Weight};
use std::collections::{BTreeSet, HashMap, VecDeque};

pub type Word = Vec<usize>;

/// Signed permutation: w(e_j) = sign(map[j-1]) * e_{|map[j-1]|}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeylElement {
    map: Vec<i64>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { map: (1..=n as i64).collect() }
    }

    pub fn rank(&self) -> usize {
        self.map.len()
    }

    pub fn generator(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "generator index out of range");
        let mut map: Vec<i64> = (1..=n as i64).collect();
        if i < n {
            map.swap(i - 1, i);
        } else {
            map[n - 1] = -(n as i64);
        }
        WeylElement { map }
    }

    pub fn longest(n: usize) -> Self {
        // w_0 = -id in type C
        WeylElement { map: (1..=n as i64).map(|j| -j).collect() }
    }

    /// Composition: (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank(), other.rank());
        let map = other
            .map
            .iter()
            .map(|&m| {
                let s = m.signum();
                s * self.map[(m.abs() - 1) as usize]
            })
            .collect();
        WeylElement { map }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut map = vec![0i64; n];
        for (j, &m) in self.map.iter().enumerate() {
            map[(m.abs() - 1) as usize] = m.signum() * (j as i64 + 1);
        }
        WeylElement { map }
    }

    pub fn act(&self, l: &Weight) -> Weight {
        assert_eq!(self.rank(), l.rank());
        let mut out = vec![0i64; self.rank()];
        for (j, &m) in self.map.iter().enumerate() {
            out[(m.abs() - 1) as usize] += m.signum() * l.0[j];
        }
        Weight(out)
    }

    /// Dot action w . l = w(l + rho) - rho.
    pub fn dot_act(&self, l: &Weight) -> Weight {
        let rho = crate::cartan::rho(self.rank());
        self.act(&l.add(&rho)).sub(&rho)
    }

    pub fn from_word(n: usize, word: &[usize]) -> WeylElement {
        let mut w = WeylElement::identity(n);
        for &i in word {
            w = w.compose(&WeylElement::generator(n, i));
        }
        w
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(j, &m)| m == j as i64 + 1)
    }
}

fn weight_is_negative(w: &Weight) -> bool {
    match w.0.iter().find(|&&c| c != 0) {
        Some(&c) => c < 0,
        None => false,
    }
}

/// {b in R^+ : w(b) < 0}; its size is the length of w.
pub fn inversion_set(roots: &RootSystem, w: &WeylElement) -> Vec<Weight> {
    roots
        .positive_roots
        .iter()
        .filter(|b| weight_is_negative(&w.act(b)))
        .cloned()
        .collect()
}

pub fn length(roots: &RootSystem, w: &WeylElement) -> usize {
    inversion_set(roots, w).len()
}

pub fn is_reduced(roots: &RootSystem, word: &[usize]) -> bool {
    let w = WeylElement::from_word(roots.n, word);
    length(roots, &w) == word.len()
}

/// Smallest i with l(s_i w) < l(w), i.e. w^{-1}(a_i) < 0. None for identity.
pub fn left_descent(roots: &RootSystem, w: &WeylElement) -> Option<usize> {
    let winv = w.inverse();
    (1..=roots.n).find(|&i| weight_is_negative(&winv.act(&crate::cartan::simple_root(roots.n, i))))
}

/// Canonical reduced word: repeatedly strip the smallest left descent.
pub fn reduced_word(roots: &RootSystem, w: &WeylElement) -> Word {
    let mut out = Vec::new();
    let mut cur = w.clone();
    while let Some(i) = left_descent(roots, &cur) {
        out.push(i);
        cur = WeylElement::generator(roots.n, i).compose(&cur);
    }
    out
}

/// Bruhat order via the lifting property along a fixed reduced word of w.
pub fn bruhat_leq(roots: &RootSystem, u: &WeylElement, w: &WeylElement) -> bool {
    fn go(roots: &RootSystem, u: &WeylElement, w: &WeylElement, word: &[usize]) -> bool {
        if u.is_identity() {
            return true;
        }
        let Some((&s, rest)) = word.split_first() else {
            return false; // w = id but u != id
        };
        let sw = WeylElement::generator(roots.n, s).compose(w);
        let su = WeylElement::generator(roots.n, s).compose(u);
        if length(roots, &su) < length(roots, u) {
            go(roots, &su, &sw, rest)
        } else {
            go(roots, u, &sw, rest)
        }
    }
    let word = reduced_word(roots, w);
    go(roots, u, w, &word)
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("not reduced")]
    NotReduced,
    #[error("not same element")]
    NotSameElement,
    #[error("malformed shape: {0}")]
    MalformedShape(String),
    #[error("index out of range")]
    OutOfRange,
}

/// Do the two letters commute in W(C_n)? (s_i s_j = s_j s_i iff |i-j| >= 2.)
fn letters_commute(i: usize, j: usize) -> bool {
    i.abs_diff(j) >= 2
}

/// Closure of a reduced word under swaps of adjacent commuting letters.
pub fn commutation_class(word: &[usize]) -> BTreeSet<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(cur) = queue.pop_front() {
        for t in 0..cur.len().saturating_sub(1) {
            if letters_commute(cur[t], cur[t + 1]) {
                let mut next = cur.clone();
                next.swap(t, t + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// Are two reduced words of the same element related by commuting moves only?
pub fn comm_class_eq(roots: &RootSystem, w1: &[usize], w2: &[usize]) -> Result<bool, WeylError> {
    if !is_reduced(roots, w1) || !is_reduced(roots, w2) {
        return Err(WeylError::NotReduced);
    }
    if WeylElement::from_word(roots.n, w1) != WeylElement::from_word(roots.n, w2) {
        return Err(WeylError::NotSameElement);
    }
    if w1.len() != w2.len() {
        return Ok(false);
    }
    // breadth-first closure; early exit when w2 shows up
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut queue: VecDeque<Word> = VecDeque::new();
    seen.insert(w1.to_vec());
    queue.push_back(w1.to_vec());
    while let Some(cur) = queue.pop_front() {
        if cur == w2 {
            return Ok(true);
        }
        for t in 0..cur.len() - 1 {
            if letters_commute(cur[t], cur[t + 1]) {
                let mut next = cur.clone();
                next.swap(t, t + 1);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(false)
}

/// All reduced words of w (desk scale only).
pub fn all_reduced_words(roots: &RootSystem, w: &WeylElement) -> Vec<Word> {
    fn go(
        roots: &RootSystem,
        w: &WeylElement,
        memo: &mut HashMap<WeylElement, Vec<Word>>,
    ) -> Vec<Word> {
        if w.is_identity() {
            return vec![vec![]];
        }
        if let Some(v) = memo.get(w) {
            return v.clone();
        }
        let winv = w.inverse();
        let mut out = Vec::new();
        for i in 1..=roots.n {
            if weight_is_negative(&winv.act(&crate::cartan::simple_root(roots.n, i))) {
                let rest = WeylElement::generator(roots.n, i).compose(w);
                for mut tail in go(roots, &rest, memo) {
                    tail.insert(0, i);
                    out.push(tail);
                }
            }
        }
        memo.insert(w.clone(), out.clone());
        out
    }
    go(roots, w, &mut HashMap::new())
}

/// True iff all reduced words of w form a single commutation class.
pub fn is_fully_commutative(roots: &RootSystem, w: &WeylElement) -> bool {
    let words = all_reduced_words(roots, w);
    match words.first() {
        None => true,
        Some(first) => commutation_class(first).len() == words.len(),
    }
}

/// A Coxeter shape: strictly decreasing a_1 > ... > a_k = 1 classifying a
/// Coxeter element c = [a_1, n][a_2, a_1 - 1]...[a_k, a_{k-1} - 1], where
/// [i, j] = s_i s_{i+1} ... s_j.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, serde::Serialize)]
pub struct CoxeterShape(pub Vec<usize>);

impl std::fmt::Display for CoxeterShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl CoxeterShape {
    pub fn new(n: usize, seq: Vec<usize>) -> Result<Self, WeylError> {
        if seq.is_empty() || *seq.last().unwrap() != 1 {
            return Err(WeylError::MalformedShape("must end in 1".into()));
        }
        if seq.iter().any(|&a| a < 1 || a > n) {
            return Err(WeylError::MalformedShape("entry out of [1, n]".into()));
        }
        if !seq.windows(2).all(|w| w[0] > w[1]) {
            return Err(WeylError::MalformedShape("must be strictly decreasing".into()));
        }
        Ok(CoxeterShape(seq))
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn a(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    /// a_1 != n-1 and a_2 <= n-2: the closed-form vanishing predicate the
    /// engine's verdicts are compared against.
    pub fn vanishing_predicate(&self, n: usize) -> bool {
        let a1 = self.a(1);
        let a2 = if self.k() >= 2 { self.a(2) } else { 0 };
        a1 != n - 1 && a2 <= n.saturating_sub(2)
    }
}

/// The interval word [i, j] = (i, i+1, ..., j); empty when i > j.
pub fn interval(i: usize, j: usize) -> Word {
    if i > j {
        Vec::new()
    } else {
        (i..=j).collect()
    }
}

/// All 2^{n-1} Coxeter shapes, in lexicographic order of the a-sequence.
pub fn coxeter_shapes(n: usize) -> Vec<CoxeterShape> {
    assert!(n >= 2);
    let mut out = Vec::new();
    // choose any subset of {2..n} to precede the mandatory final 1
    for mask in 0u32..(1 << (n - 1)) {
        let mut seq: Vec<usize> = (2..=n).rev().filter(|&a| mask & (1 << (a - 2)) != 0).collect();
        seq.push(1);
        out.push(CoxeterShape(seq));
    }
    out.sort();
    out
}

/// The defining reduced word of the Coxeter element of a shape.
pub fn shape_to_word(n: usize, shape: &CoxeterShape) -> Word {
    let k = shape.k();
    let mut word = interval(shape.a(1), n);
    for j in 2..=k {
        word.extend(interval(shape.a(j), shape.a(j - 1) - 1));
    }
    word
}

/// The normal-form reduced word for c^i (1 <= i <= n): block product of
/// interval words, one form for i < k and another for i >= k.
pub fn coxeter_power_word(n: usize, shape: &CoxeterShape, i: usize) -> Result<Word, WeylError> {
    if i < 1 || i > n {
        return Err(WeylError::OutOfRange);
    }
    let k = shape.k();
    let mut word = Vec::new();
    if i <= k - 1 {
        for l in 1..=i {
            word.extend(interval(shape.a(l), n));
        }
        for l in i + 1..=k {
            word.extend(interval(shape.a(l), shape.a(l - i) - 1));
        }
        for l in 1..=i - 1 {
            word.extend(interval(shape.a(k), shape.a(k - i + l) - 1));
        }
    } else {
        for l in 1..=k - 1 {
            word.extend(interval(shape.a(l), n));
        }
        for _ in 0..=i - k {
            word.extend(interval(shape.a(k), n));
        }
        for l in 1..=k - 1 {
            word.extend(interval(shape.a(k), shape.a(l) - 1));
        }
    }
    Ok(word)
}

/// The full-length word for w_0 = c^n used by the tangent-bundle ledger.
pub fn theorem_word(n: usize, shape: &CoxeterShape) -> Word {
    coxeter_power_word(n, shape, n).expect("n is in range")
}

/// w_r = [a_1, n][a_2, n]...[a_r, n].
pub fn word_w(n: usize, shape: &CoxeterShape, r: usize) -> Result<Word, WeylError> {
    if r < 1 || r > shape.k() {
        return Err(WeylError::OutOfRange);
    }
    let mut word = Vec::new();
    for j in 1..=r {
        word.extend(interval(shape.a(j), n));
    }
    Ok(word)
}

/// tau_r = [a_1, n]...[a_{r-1}, n][a_r, n-1]: w_r with the last letter cut.
pub fn word_tau(n: usize, shape: &CoxeterShape, r: usize) -> Result<Word, WeylError> {
    let mut word = word_w(n, shape, r)?;
    word.pop();
    Ok(word)
}

/// u_1 = w_k [a_k, n].
pub fn word_u1(n: usize, shape: &CoxeterShape) -> Word {
    let mut word = word_w(n, shape, shape.k()).expect("k in range");
    word.extend(interval(shape.a(shape.k()), n));
    word
}

/// u_1' = w_k [a_k, n-1].
pub fn word_u1_prime(n: usize, shape: &CoxeterShape) -> Word {
    let mut word = word_w(n, shape, shape.k()).expect("k in range");
    word.extend(interval(shape.a(shape.k()), n - 1));
    word
}

/// u_j = w_k [a_k, n]^j.
pub fn word_uj(n: usize, shape: &CoxeterShape, j: usize) -> Word {
    let mut word = word_w(n, shape, shape.k()).expect("k in range");
    for _ in 0..j {
        word.extend(interval(shape.a(shape.k()), n));
    }
    word
}

/// Least h >= 1 with c^h(w_i) = w_0(w_i) = -w_i.
pub fn h_exponent(roots: &RootSystem, shape: &CoxeterShape, i: usize) -> usize {
    let n = roots.n;
    let c = WeylElement::from_word(n, &shape_to_word(n, shape));
    let omega = fundamental_weight(n, i);
    let target = omega.neg();
    let mut cur = omega;
    for h in 1..=2 * n {
        cur = c.act(&cur);
        if cur == target {
            return h;
        }
    }
    panic!("Coxeter power never reached -omega_i; not a Coxeter element?");
}
