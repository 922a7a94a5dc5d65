//! Tangent-bundle bookkeeping for iterated P^1-bundles over a word. The
//! six-term sequence relating the tangent cohomology of the full tower to
//! the one-step-shorter tower and the relative line bundle is folded per
//! weight as interval arithmetic on dimensions. Connecting-map ranks are
//! unknown in general; at prefixes where a dimension-count argument forces
//! the connecting map to be surjective (with the external structure results
//! recorded as trust annotations), the fold absorbs the relative H^1 and
//! stays exact. The lemma suite re-checks the closed-form weight supports
//! that feed those dimension counts, and the verdict runs the whole chain
//! for one (n, shape).

use crate::bmod::{gprime, k1, line, BModule, Character};
use crate::cartan::{simple_root, ChevalleyRealization, RootSystem, Weight};
use crate::coh::{h0_word, word_cohomology, CohError, DegreeState};
use crate::linalg::QMat;
use num::Zero;
use crate::weyl::{
    interval, reduced_word, theorem_word, word_tau, word_u1_prime, word_uj,
    word_w, CoxeterShape, WeylElement, Word,
};
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LedgerError {
    #[error("word is not reduced")]
    NonReducedWord,
    #[error("inconclusive ledger: relative H^1 extension-ambiguous at prefix {0}")]
    Inconclusive(usize),
    #[error("surjectivity certificate at prefix {0} is inconsistent with the bounds")]
    BadCertificate(usize),
    #[error("words are not commutation-equivalent")]
    NotCommEquivalent,
}

impl From<CohError> for LedgerError {
    fn from(_: CohError) -> LedgerError {
        LedgerError::NonReducedWord
    }
}

/// Relative cohomology along every prefix of a word: exact H^0, certified
/// H^1 data, and the re-verified degree-2 vanishing.
pub struct PrefixStep {
    pub letter: usize,
    pub h0: BModule,
    pub h1: DegreeState,
    pub h2_verified_zero: bool,
}

pub struct RelativeLedger {
    pub n: usize,
    pub word: Word,
    pub steps: Vec<PrefixStep>,
}

pub fn relative_ledger(rs: &RootSystem, word: &[usize]) -> Result<RelativeLedger, LedgerError> {
    let n = rs.n;
    let mut steps = Vec::with_capacity(word.len());
    for t in 0..word.len() {
        let prefix = &word[..=t];
        let fiber = line(simple_root(n, word[t]));
        let wc = word_cohomology(rs, prefix, &fiber, 2)?;
        let h1 = wc.degree(1).clone();
        let h2_verified_zero = wc.degree(2).is_verified_zero();
        steps.push(PrefixStep { letter: word[t], h0: wc.h0, h1, h2_verified_zero });
    }
    Ok(RelativeLedger { n, word: word.to_vec(), steps })
}

/// Per-weight dimension intervals for H^0 and H^1 of the tangent bundle of
/// the tower. Weights absent from a map are exactly zero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TangentBounds {
    pub h0: BTreeMap<Weight, (usize, usize)>,
    pub h1: BTreeMap<Weight, (usize, usize)>,
}

impl TangentBounds {
    fn get(map: &BTreeMap<Weight, (usize, usize)>, w: &Weight) -> (usize, usize) {
        map.get(w).copied().unwrap_or((0, 0))
    }

    pub fn h0_at(&self, w: &Weight) -> (usize, usize) {
        Self::get(&self.h0, w)
    }

    pub fn h1_at(&self, w: &Weight) -> (usize, usize) {
        Self::get(&self.h1, w)
    }

    pub fn h0_exact(&self) -> Option<Character> {
        let mut out = BTreeMap::new();
        for (w, (lo, hi)) in &self.h0 {
            if lo != hi {
                return None;
            }
            if *lo > 0 {
                out.insert(w.clone(), *lo);
            }
        }
        Some(Character(out))
    }

    pub fn h1_all_zero(&self) -> bool {
        self.h1.values().all(|&(_, hi)| hi == 0)
    }

    pub fn h1_forced_nonzero(&self) -> Vec<Weight> {
        self.h1.iter().filter(|(_, &(lo, _))| lo > 0).map(|(w, _)| w.clone()).collect()
    }

    /// One six-term step. With a = dim H^0(w, a_i)_mu, b = dim H^1(w, a_i)_mu
    /// and prior bounds p, q, the connecting rank ranges over [0, min(b, p)];
    /// a certified-surjective step pins it at b.
    fn step(
        &mut self,
        a_ch: &Character,
        b_ch: &Character,
        certified: bool,
        prefix: usize,
    ) -> Result<(), LedgerError> {
        let mut universe: BTreeSet<Weight> = self.h0.keys().cloned().collect();
        universe.extend(self.h1.keys().cloned());
        universe.extend(a_ch.0.keys().cloned());
        universe.extend(b_ch.0.keys().cloned());
        let mut h0 = BTreeMap::new();
        let mut h1 = BTreeMap::new();
        for w in universe {
            let a = a_ch.mult(&w);
            let b = b_ch.mult(&w);
            let (p_lo, p_hi) = self.h0_at(&w);
            let (q_lo, q_hi) = self.h1_at(&w);
            let (nh0, nh1) = if certified && b > 0 {
                if p_lo < b {
                    return Err(LedgerError::BadCertificate(prefix));
                }
                ((a + p_lo - b, a + p_hi - b), (q_lo, q_hi))
            } else {
                (
                    (a + p_lo - b.min(p_lo), a + p_hi),
                    (q_lo + b - b.min(p_hi), q_hi + b),
                )
            };
            if nh0 != (0, 0) {
                h0.insert(w.clone(), nh0);
            }
            if nh1 != (0, 0) {
                h1.insert(w, nh1);
            }
        }
        self.h0 = h0;
        self.h1 = h1;
        Ok(())
    }
}

fn step_chars(step: &PrefixStep, prefix: usize) -> Result<(Character, Character), LedgerError> {
    let b = step.h1.character().ok_or(LedgerError::Inconclusive(prefix))?;
    Ok((step.h0.character(), b))
}

/// Fold the six-term sequence along the ledger with no certificates: exact
/// where every relative H^1 vanishes, interval bounds elsewhere.
pub fn tangent_bounds(ledger: &RelativeLedger) -> Result<TangentBounds, LedgerError> {
    tangent_bounds_with(ledger, &BTreeSet::new())
}

/// Same fold, treating the listed prefix indices (0-based) as having a
/// surjective connecting map.
pub fn tangent_bounds_with(
    ledger: &RelativeLedger,
    certified: &BTreeSet<usize>,
) -> Result<TangentBounds, LedgerError> {
    let mut bounds = TangentBounds::default();
    for (t, step) in ledger.steps.iter().enumerate() {
        let (a, b) = step_chars(step, t + 1)?;
        bounds.step(&a, &b, certified.contains(&t), t + 1)?;
    }
    Ok(bounds)
}

// ---------------------------------------------------------------------------
// closed-form weight families used by the lemma suite

fn sum_roots(n: usize, from: usize, to: usize) -> Weight {
    let mut w = Weight::zero(n);
    for j in from..=to.min(n) {
        if j >= from {
            w = w.add(&simple_root(n, j));
        }
    }
    w
}

/// -(a_t + ... + a_n)
fn chain_weight(n: usize, t: usize) -> Weight {
    sum_roots(n, t, n).neg()
}

/// -(a_n + 2(a_t + ... + a_{n-1}))
fn long_tail_weight(n: usize, t: usize) -> Weight {
    simple_root(n, n).add(&sum_roots(n, t, n - 1).scaled(2)).neg()
}

/// -(a_n + 2(a_{t1} + ... + a_{n-1}) + (a_{t2} + ... + a_{t1-1}))
fn double_tail_weight(n: usize, t1: usize, t2: usize) -> Weight {
    simple_root(n, n)
        .add(&sum_roots(n, t1, n - 1).scaled(2))
        .add(&sum_roots(n, t2, t1 - 1))
        .neg()
}

fn is_short_neg_nonsimple(rs: &RootSystem, w: &Weight) -> bool {
    let neg = w.neg();
    rs.is_root(&neg) && rs.is_short(&neg) && rs.positive_roots.contains(&neg) && {
        let coords = neg.root_coords().unwrap_or_default();
        coords.iter().sum::<i64>() > 1
    }
}

fn support_set(ch: &Character) -> BTreeSet<Weight> {
    ch.0.keys().cloned().collect()
}

fn all_mult_one(ch: &Character) -> bool {
    ch.0.values().all(|&m| m == 1)
}

// ---------------------------------------------------------------------------
// lemma suite

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckStatus {
    Verified,
    Failed,
    TrustedStructural,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct LemmaCheck {
    pub id: String,
    pub instance: String,
    pub status: CheckStatus,
    pub witnesses: Vec<Weight>,
}

fn check(
    out: &mut Vec<LemmaCheck>,
    id: &str,
    instance: String,
    ok: bool,
    witnesses: Vec<Weight>,
) {
    out.push(LemmaCheck {
        id: id.to_string(),
        instance,
        status: if ok { CheckStatus::Verified } else { CheckStatus::Failed },
        witnesses,
    });
}

fn h0_char(rs: &RootSystem, word: &[usize], v: &BModule) -> Character {
    h0_word(rs, word, v).expect("reduced word").character()
}

fn h1_state(rs: &RootSystem, word: &[usize], v: &BModule) -> DegreeState {
    word_cohomology(rs, word, v, 1).expect("reduced word").degree(1).clone()
}

fn h1_char(rs: &RootSystem, word: &[usize], v: &BModule) -> Option<Character> {
    h1_state(rs, word, v).character()
}

fn act_on(n: usize, word: &[usize], w: &Weight) -> Weight {
    WeylElement::from_word(n, word).act(w)
}

/// Restrict a module to the basis vectors whose weights satisfy the
/// predicate, checking that the span really is operator-stable.
pub fn submodule_by_weights(m: &BModule, keep: impl Fn(&Weight) -> bool) -> BModule {
    let idx: Vec<usize> = (0..m.dim()).filter(|&j| keep(&m.weights[j])).collect();
    let inside: BTreeSet<usize> = idx.iter().copied().collect();
    for op in &m.ops {
        for r in 0..m.dim() {
            for &c in &idx {
                assert!(
                    inside.contains(&r) || op[(r, c)].is_zero(),
                    "weight set is not operator-stable"
                );
            }
        }
    }
    let weights = idx.iter().map(|&j| m.weights[j].clone()).collect();
    let ops = m
        .ops
        .iter()
        .map(|op| {
            let mut s = QMat::zero(idx.len(), idx.len());
            for (r, &jr) in idx.iter().enumerate() {
                for (c, &jc) in idx.iter().enumerate() {
                    s[(r, c)] = op[(jr, jc)].clone();
                }
            }
            s
        })
        .collect();
    BModule::new(m.n, weights, ops)
}

/// u_1 = w_k [a_k, n] as a Weyl element; the concatenated word is reduced
/// exactly when k < n, so cohomology is computed from a canonical reduced
/// word of the element.
fn u1_reduced_word(rs: &RootSystem, shape: &CoxeterShape) -> Word {
    let n = rs.n;
    let mut concat = word_w(n, shape, shape.k()).unwrap();
    concat.extend(interval(shape.a(shape.k()), n));
    reduced_word(rs, &WeylElement::from_word(n, &concat))
}

/// The kernel-module tower V_r = H^0(s_n s_{a_r} ... s_{n-1}, K) where K is
/// the two-dimensional kernel of the evaluation of H^0(s_n, a_n).
fn kernel_tower(rs: &RootSystem, a_r: usize) -> BModule {
    let n = rs.n;
    let mut word = vec![n];
    word.extend(interval(a_r, n - 1));
    h0_word(rs, &word, &k1(n)).expect("reduced word")
}

/// Re-check the closed-form weight supports of the relative cohomology
/// modules along the shape's words. Every failure is a report entry, never
/// a panic.
pub fn lemma_suite(rs: &RootSystem, shape: &CoxeterShape) -> Vec<LemmaCheck> {
    let n = rs.n;
    let k = shape.k();
    let an1 = simple_root(n, n - 1);
    let an = simple_root(n, n);
    let mut out = Vec::new();

    // string supports of H^0 along [j, n-1] and s_n [j, n-1]
    for r in 1..=k {
        let j = shape.a(r);
        if j > n - 2 {
            continue;
        }
        let mut expect: BTreeSet<Weight> = [Weight::zero(n)].into();
        for t in j..=n - 1 {
            expect.insert(act_on(n, &interval(t, n - 1), &an1));
        }
        let got = support_set(&h0_char(rs, &interval(j, n - 1), &line(an1.clone())));
        check(&mut out, "h0-string-support", format!("tail [{j}, {}]", n - 1), got == expect, got.into_iter().collect());

        let mut expect2 = expect.clone();
        for t in j..=n - 1 {
            let base = act_on(n, &interval(t, n - 1), &an1);
            expect2.insert(base.reflect(n));
        }
        let mut word2 = vec![n];
        word2.extend(interval(j, n - 1));
        let got2 = support_set(&h0_char(rs, &word2, &line(an1.clone())));
        check(&mut out, "h0-string-support", format!("top-reflected tail [{j}, {}]", n - 1), got2 == expect2, got2.into_iter().collect());
    }
    // two-block H^0 support; with the first block reduced to the long
    // letter alone the word degenerates to the reflected-tail case above,
    // which keeps the zero weight, so that instance is excluded here
    for r1 in 1..=k {
        for r2 in r1 + 1..=k {
            let (b1, b2) = (shape.a(r1), shape.a(r2));
            if b1 == n {
                continue;
            }
            let mut expect = BTreeSet::new();
            for j in b2..=n - 1 {
                for t in b1..=n {
                    if t > j {
                        let mut w = interval(t, n);
                        w.extend(interval(j, n - 1));
                        expect.insert(act_on(n, &w, &an1));
                    }
                }
            }
            let mut word = interval(b1, n);
            word.extend(interval(b2, n - 1));
            let got = support_set(&h0_char(rs, &word, &line(an1.clone())));
            check(&mut out, "h0-two-block-support", format!("blocks [{b1}, n][{b2}, n-1]"), got == expect, got.into_iter().collect());
        }
    }

    // tau_r weights: multiplicity one, a rectangle of double-tail weights,
    // cyclic over the top corner
    for r in 3..=k {
        let (lo1, hi1) = (shape.a(r - 1), shape.a(r - 2) - 1);
        let mut expect = BTreeSet::new();
        for t1 in lo1..=hi1 {
            for t2 in shape.a(r)..t1 {
                expect.insert(double_tail_weight(n, t1, t2));
            }
        }
        let tau = word_tau(n, shape, r).unwrap();
        let m = h0_word(rs, &tau, &line(an1.clone())).expect("reduced");
        let got = support_set(&m.character());
        let ok = got == expect && all_mult_one(&m.character());
        check(&mut out, "tau-h0-weights", format!("r = {r}"), ok, got.into_iter().collect());
        if hi1 >= 2 {
            let gen = double_tail_weight(n, hi1, hi1 - 1);
            let cyclic = crate::bmod::is_cyclic(&m, &gen) == Ok(true);
            check(&mut out, "tau-h0-cyclic", format!("r = {r}"), cyclic, vec![gen]);
        }
    }

    // u_1' weights
    if k >= 2 {
        let mut expect = BTreeSet::new();
        for t1 in shape.a(k)..=shape.a(k - 1) - 1 {
            for t2 in shape.a(k)..t1 {
                expect.insert(double_tail_weight(n, t1, t2));
            }
        }
        let ch = h0_char(rs, &word_u1_prime(n, shape), &line(an1.clone()));
        let ok = support_set(&ch) == expect && all_mult_one(&ch);
        check(&mut out, "u1-prime-h0-weights", "u_1'".into(), ok, ch.support());
    }

    // kernel-module towers
    for r in 1..=k {
        let a_r = shape.a(r);
        let vprime = h0_char(rs, &interval(a_r, n - 1), &k1(n));
        let mut expect: BTreeSet<Weight> = [Weight::zero(n), an.neg()].into();
        for t in a_r..n {
            expect.insert(chain_weight(n, t));
        }
        for t in a_r..=n - 1 {
            expect.insert(long_tail_weight(n, t));
        }
        for t1 in a_r..=n - 1 {
            for t2 in a_r..t1 {
                expect.insert(double_tail_weight(n, t1, t2));
            }
        }
        let ok = support_set(&vprime) == expect && all_mult_one(&vprime);
        check(&mut out, "kernel-tower-sections", format!("r = {r}, open tower"), ok, vprime.support());

        let v = kernel_tower(rs, a_r);
        let mut expect2 = BTreeSet::new();
        for t in a_r..=n - 1 {
            expect2.insert(long_tail_weight(n, t));
        }
        for t1 in a_r..=n - 1 {
            for t2 in a_r..t1 {
                expect2.insert(double_tail_weight(n, t1, t2));
            }
        }
        let ok = support_set(&v.character()) == expect2 && all_mult_one(&v.character());
        check(&mut out, "kernel-tower-sections", format!("r = {r}, closed tower"), ok, v.character().support());
    }

    // window cut by the next block, for H^0 and for w_r itself
    for r in 2..=k {
        let v = kernel_tower(rs, shape.a(r));
        let mut expect = BTreeSet::new();
        for t in shape.a(r)..=shape.a(r - 1) - 1 {
            expect.insert(long_tail_weight(n, t));
        }
        for t1 in shape.a(r)..=shape.a(r - 1) - 1 {
            for t2 in shape.a(r)..t1 {
                expect.insert(double_tail_weight(n, t1, t2));
            }
        }
        let got = support_set(&h0_char(rs, &interval(shape.a(r - 1), n - 1), &v));
        check(&mut out, "kernel-h0-window", format!("r = {r}"), got == expect, got.clone().into_iter().collect());

        let wr = word_w(n, shape, r).unwrap();
        let ch = h0_char(rs, &wr, &line(an.clone()));
        let ok = support_set(&ch) == expect && all_mult_one(&ch);
        check(&mut out, "wr-h0-weights", format!("r = {r}"), ok, ch.support());

        // H^1 of the window
        let mut expect1 = BTreeSet::new();
        for t in shape.a(r - 1)..=n - 1 {
            expect1.insert(chain_weight(n, t));
        }
        for t1 in shape.a(r - 1)..=n - 1 {
            for t2 in shape.a(r - 1)..t1 {
                expect1.insert(double_tail_weight(n, t1, t2));
            }
        }
        match h1_char(rs, &interval(shape.a(r - 1), n - 1), &v) {
            Some(ch) => check(&mut out, "kernel-h1-window", format!("r = {r}"), support_set(&ch) == expect1, ch.support()),
            None => out.push(LemmaCheck { id: "kernel-h1-window".into(), instance: format!("r = {r}"), status: CheckStatus::Inconclusive, witnesses: vec![] }),
        }

        // the same support through the full two-block word; the reduction
        // to the kernel fiber needs the appended block to start at n-2 or
        // lower (otherwise the H^1 picks up positive weights, the nonzero
        // witness of the boundary shapes)
        if shape.a(r) > n - 2 {
            continue;
        }
        let mut two = interval(shape.a(r - 1), n);
        two.extend(interval(shape.a(r), n));
        match h1_char(rs, &two, &line(an.clone())) {
            Some(ch) => check(&mut out, "two-block-h1-weights", format!("r = {r}"), support_set(&ch) == expect1, ch.support()),
            None => out.push(LemmaCheck { id: "two-block-h1-weights".into(), instance: format!("r = {r}"), status: CheckStatus::Inconclusive, witnesses: vec![] }),
        }
    }

    // three-block H^1 and the w_r H^1 rectangle
    for r in 3..=k {
        let mut expect = BTreeSet::new();
        for t1 in shape.a(r - 1)..=shape.a(r - 2) - 1 {
            for t2 in shape.a(r - 1)..t1 {
                expect.insert(double_tail_weight(n, t1, t2));
            }
        }
        let mut three = interval(shape.a(r - 2), n);
        three.extend(interval(shape.a(r - 1), n));
        three.extend(interval(shape.a(r), n));
        match h1_char(rs, &three, &line(an.clone())) {
            Some(ch) => check(&mut out, "three-block-h1-weights", format!("r = {r}"), support_set(&ch) == expect, ch.support()),
            None => out.push(LemmaCheck { id: "three-block-h1-weights".into(), instance: format!("r = {r}"), status: CheckStatus::Inconclusive, witnesses: vec![] }),
        }

        let wr = word_w(n, shape, r).unwrap();
        match h1_char(rs, &wr, &line(an.clone())) {
            Some(ch) => {
                let ok = support_set(&ch) == expect && all_mult_one(&ch);
                check(&mut out, "wr-h1-weights", format!("r = {r}"), ok, ch.support());
            }
            None => out.push(LemmaCheck { id: "wr-h1-weights".into(), instance: format!("r = {r}"), status: CheckStatus::Inconclusive, witnesses: vec![] }),
        }
    }

    // short-root support guard for H^1 of submodules of the h(a_n)-generated
    // algebra
    let ch_real = ChevalleyRealization::new(rs);
    let gp = gprime(rs, &ch_real);
    let below = submodule_by_weights(&gp, |w| !w.is_zero() && *w != an.neg());
    for (vname, v) in [("full", &gp), ("below-kernel", &below)] {
        for r in 1..=k {
            let wr = word_w(n, shape, r).unwrap();
            match h1_char(rs, &wr, v) {
                Some(ch) => {
                    let bad: Vec<Weight> = ch.support().into_iter().filter(|w| !is_short_neg_nonsimple(rs, w)).collect();
                    check(&mut out, "h1-support-guard", format!("{vname}, r = {r}"), bad.is_empty(), bad);
                }
                None => out.push(LemmaCheck { id: "h1-support-guard".into(), instance: format!("{vname}, r = {r}"), status: CheckStatus::Inconclusive, witnesses: vec![] }),
            }
        }
    }

    // block-extension reductions for fibers ending in the long letter
    for r in 1..=k {
        if shape.a(r) > n - 2 {
            continue;
        }
        let wr = word_w(n, shape, r).unwrap();
        // the truncated word kills every degree
        let mut trunc = wr.clone();
        trunc.pop();
        let wc = word_cohomology(rs, &trunc, &line(an.clone()), 2).expect("reduced");
        let dead = wc.h0.is_zero() && wc.degree(1).is_verified_zero() && wc.degree(2).is_verified_zero();
        check(&mut out, "truncated-block-vanishing", format!("r = {r}"), dead, vec![]);
        // H^1 of the block word equals H^1 of the truncated word with the
        // two-dimensional kernel fiber
        let lhs = h1_char(rs, &wr, &line(an.clone()));
        let rhs = h1_char(rs, &trunc, &k1(n));
        match (lhs, rhs) {
            (Some(a), Some(b)) => {
                check(&mut out, "h1-kernel-transfer", format!("r = {r}"), a == b, a.support());
                if r == 1 {
                    check(&mut out, "first-block-h1-vanishing", "r = 1".into(), a.is_zero(), a.support());
                }
                let bad: Vec<Weight> = a.support().into_iter().filter(|w| !is_short_neg_nonsimple(rs, w)).collect();
                check(&mut out, "h1-support-guard", format!("block word, r = {r}"), bad.is_empty(), bad);
            }
            _ => out.push(LemmaCheck { id: "h1-kernel-transfer".into(), instance: format!("r = {r}"), status: CheckStatus::Inconclusive, witnesses: vec![] }),
        }
    }

    // inclusion of the H^1 support in the two reference H^0 supports (again
    // only meaningful when the last block starts at n-2 or lower)
    for r in 2..=k {
        if shape.a(r) > n - 2 {
            continue;
        }
        let wr = word_w(n, shape, r).unwrap();
        if let Some(h1) = h1_char(rs, &wr, &line(an.clone())) {
            let tau = support_set(&h0_char(rs, &word_tau(n, shape, r).unwrap(), &line(an1.clone())));
            let prev = support_set(&h0_char(rs, &word_w(n, shape, r - 1).unwrap(), &line(an.clone())));
            let s = support_set(&h1);
            check(&mut out, "h1-inside-tau-h0", format!("r = {r}"), s.is_subset(&tau), s.iter().cloned().collect());
            check(&mut out, "h1-inside-prev-h0", format!("r = {r}"), s.is_subset(&prev), s.into_iter().collect());
        }
    }

    // extended-word H^1 equals the cut-word H^0 (character identity)
    {
        let u1 = u1_reduced_word(rs, shape);
        let lhs = h1_char(rs, &u1, &line(an.clone()));
        let rhs = h0_char(rs, &word_u1_prime(n, shape), &line(an1.clone()));
        match lhs {
            Some(a) => check(&mut out, "extended-h1-character", "u_1".into(), a == rhs, a.support()),
            None => out.push(LemmaCheck { id: "extended-h1-character".into(), instance: "u_1".into(), status: CheckStatus::Inconclusive, witnesses: vec![] }),
        }
    }

    // disjointness of the H^1 weight sets across levels
    {
        let mut sets: Vec<(String, BTreeSet<Weight>)> = Vec::new();
        let mut conclusive = true;
        for r in 1..=k {
            match h1_char(rs, &word_w(n, shape, r).unwrap(), &line(an.clone())) {
                Some(ch) => sets.push((format!("level {r}"), support_set(&ch))),
                None => conclusive = false,
            }
        }
        match h1_char(rs, &u1_reduced_word(rs, shape), &line(an.clone())) {
            Some(ch) => sets.push(("extended level".into(), support_set(&ch))),
            None => conclusive = false,
        }
        let mut overlap = Vec::new();
        for i in 0..sets.len() {
            for j in i + 1..sets.len() {
                overlap.extend(sets[i].1.intersection(&sets[j].1).cloned());
            }
        }
        if conclusive {
            check(&mut out, "h1-weight-sets-disjoint", "all levels".into(), overlap.is_empty(), overlap);
        } else {
            out.push(LemmaCheck { id: "h1-weight-sets-disjoint".into(), instance: "all levels".into(), status: CheckStatus::Inconclusive, witnesses: vec![] });
        }
    }

    // vanishing for words carrying three or more full staircase powers
    for j in 2..=n.saturating_sub(k) {
        let uj = word_uj(n, shape, j);
        let wc = word_cohomology(rs, &uj, &line(an.clone()), 2).expect("reduced");
        let dead = wc.h0.is_zero() && wc.degree(1).is_verified_zero() && wc.degree(2).is_verified_zero();
        check(&mut out, "staircase-power-vanishing", format!("power {}", j + 1), dead, vec![]);
    }

    // the terminal cut word avoids the long letter entirely
    {
        let tau1 = word_tau(n, shape, 1).unwrap();
        let ok = tau1.iter().all(|&l| l < n);
        check(&mut out, "terminal-word-short", "tau_1".into(), ok, vec![]);
    }

    out
}

// ---------------------------------------------------------------------------
// verdict

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Vanishes,
    Nonzero,
    Inconclusive,
}

pub struct VerdictReport {
    pub n: usize,
    pub shape: CoxeterShape,
    pub lemmas: Vec<LemmaCheck>,
    pub verdict: Verdict,
    pub trusted: Vec<String>,
    pub wall_time_ms: u128,
    pub bounds: Option<TangentBounds>,
}

impl VerdictReport {
    pub fn failed(&self) -> bool {
        self.lemmas.iter().any(|l| l.status == CheckStatus::Failed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let lemmas: Vec<serde_json::Value> = self
            .lemmas
            .iter()
            .map(|l| {
                serde_json::json!({
                    "id": l.id,
                    "instance": l.instance,
                    "status": match l.status {
                        CheckStatus::Verified => "verified",
                        CheckStatus::Failed => "failed",
                        CheckStatus::TrustedStructural => "trusted-structural",
                        CheckStatus::Inconclusive => "inconclusive",
                    },
                    "witnesses": l.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "shape": self.shape.0,
            "lemmas": lemmas,
            "verdict": match self.verdict {
                Verdict::Vanishes => "H1-vanishes",
                Verdict::Nonzero => "H1-nonzero",
                Verdict::Inconclusive => "inconclusive",
            },
            "trusted": self.trusted,
            "wall_time_ms": self.wall_time_ms,
        })
    }
}

/// Try to certify that the connecting map at prefix `t` (a nonzero relative
/// H^1 at a long-letter fiber) is surjective, by the dimension-count
/// argument: multiplicity-one support inside the negative non-simple short
/// roots, a nonzero section below it in the previous prefix, and a second
/// independent section from the shorter tower; the cap that closes the
/// count is the external parabolic structure of the full tower, recorded as
/// a trust annotation by the caller.
#[allow(clippy::too_many_arguments)]
fn certify_absorption(
    rs: &RootSystem,
    shape: &CoxeterShape,
    ledger: &RelativeLedger,
    t: usize,
    b: &Character,
    block_ends: &BTreeMap<usize, usize>,
    u1_end: usize,
    lemmas: &mut Vec<LemmaCheck>,
) -> bool {
    let n = rs.n;
    let an = simple_root(n, n);
    if ledger.steps[t].letter != n {
        return false;
    }
    if !all_mult_one(b) || !b.support().iter().all(|w| is_short_neg_nonsimple(rs, w)) {
        return false;
    }
    // the sub H^0 of the previous prefix must hit every weight
    let prev = &ledger.steps[t - 1].h0;
    if !b.support().iter().all(|w| prev.mult(w) >= 1) {
        return false;
    }
    if t == u1_end {
        // the extended-level absorption: character identity with the cut
        // word plus the stable-line separation
        if prev.character() != *b {
            return false;
        }
        let alpha0 = rs.highest_root();
        if prev.mult(&alpha0.neg()) != 0 {
            return false;
        }
        let u1 = WeylElement::from_word(n, &ledger.word[..=t]);
        if !rs.positive_roots.contains(&u1.inverse().act(&alpha0).neg()) {
            return false;
        }
        lemmas.push(LemmaCheck {
            id: "extended-level-absorption".into(),
            instance: format!("prefix {}", t + 1),
            status: CheckStatus::Verified,
            witnesses: b.support(),
        });
        true
    } else if let Some(&r) = block_ends.get(&t) {
        if r < 2 {
            return false;
        }
        // second independent section from the shorter tower
        let prev_h0 = h0_char(rs, &word_w(n, shape, r - 1).unwrap(), &line(an));
        if !b.support().iter().all(|w| prev_h0.mult(w) >= 1) {
            return false;
        }
        lemmas.push(LemmaCheck {
            id: "level-absorption".into(),
            instance: format!("level {r}, prefix {}", t + 1),
            status: CheckStatus::Verified,
            witnesses: b.support(),
        });
        true
    } else {
        false
    }
}

/// Full verdict for one (n, shape): fold the tangent ledger of the normal-
/// form word for the longest element, absorbing relative H^1 where the
/// dimension-count certificates apply, and read the final H^1 bounds.
pub fn theorem_verdict(rs: &RootSystem, shape: &CoxeterShape) -> VerdictReport {
    let started = Instant::now();
    let n = rs.n;
    let mut lemmas = lemma_suite(rs, shape);
    let mut trusted = Vec::new();
    let word = theorem_word(n, shape);

    // block-end prefix indices: prefix ending block r is w_r
    let mut block_ends = BTreeMap::new();
    let mut pos = 0;
    for r in 1..=shape.k() {
        pos += n - shape.a(r) + 1;
        block_ends.insert(pos - 1, r);
    }
    let u1_end = pos + (n - shape.a(shape.k())); // end of the next full block

    let finish = |lemmas: Vec<LemmaCheck>, trusted: Vec<String>, verdict, bounds| VerdictReport {
        n,
        shape: shape.clone(),
        lemmas,
        verdict,
        trusted,
        wall_time_ms: started.elapsed().as_millis(),
        bounds,
    };

    let ledger = match relative_ledger(rs, &word) {
        Ok(l) => l,
        Err(_) => return finish(lemmas, trusted, Verdict::Inconclusive, None),
    };
    let h2_ok = ledger.steps.iter().all(|s| s.h2_verified_zero);
    lemmas.push(LemmaCheck {
        id: "higher-degree-vanishing".into(),
        instance: "all prefixes".into(),
        status: if h2_ok { CheckStatus::Verified } else { CheckStatus::Inconclusive },
        witnesses: vec![],
    });
    if !h2_ok {
        return finish(lemmas, trusted, Verdict::Inconclusive, None);
    }

    let mut bounds = TangentBounds::default();
    let mut all_certified = true;
    for t in 0..word.len() {
        let (a, b) = match step_chars(&ledger.steps[t], t + 1) {
            Ok(v) => v,
            Err(_) => return finish(lemmas, trusted, Verdict::Inconclusive, None),
        };
        let certified = !b.is_zero()
            && certify_absorption(rs, shape, &ledger, t, &b, &block_ends, u1_end, &mut lemmas);
        if certified {
            trusted.push(format!(
                "dimension cap at prefix {}: parabolic structure of the full-tower sections",
                t + 1
            ));
        } else if !b.is_zero() {
            all_certified = false;
        }
        if bounds.step(&a, &b, certified, t + 1).is_err() {
            return finish(lemmas, trusted, Verdict::Inconclusive, None);
        }
    }

    let verdict = if all_certified && bounds.h1_all_zero() {
        Verdict::Vanishes
    } else if !bounds.h1_forced_nonzero().is_empty() {
        lemmas.push(LemmaCheck {
            id: "h1-nonzero-witness".into(),
            instance: "full word".into(),
            status: CheckStatus::Verified,
            witnesses: bounds.h1_forced_nonzero(),
        });
        Verdict::Nonzero
    } else {
        Verdict::Inconclusive
    };
    finish(lemmas, trusted, verdict, Some(bounds))
}

/// Render a verdict matrix as a fixed-width text table.
pub fn render_table(reports: &[VerdictReport]) -> String {
    let mut out = String::from("shape            verdict        failed  time_ms\n");
    for r in reports {
        let verdict = match r.verdict {
            Verdict::Vanishes => "vanishes",
            Verdict::Nonzero => "nonzero",
            Verdict::Inconclusive => "inconclusive",
        };
        out.push_str(&format!(
            "{:<16} {:<14} {:<7} {}\n",
            r.shape.to_string(),
            verdict,
            r.lemmas.iter().filter(|l| l.status == CheckStatus::Failed).count(),
            r.wall_time_ms
        ));
    }
    out
}

/// Commutation-equivalent words carry isomorphic towers: compare the two
/// ledgers and bound folds weight by weight.
#[derive(Debug)]
pub struct CommInvariance {
    pub agree: bool,
    pub h0_match: bool,
    pub h1_match: bool,
    pub bounds_match: bool,
}

pub fn commutation_invariance_check(
    rs: &RootSystem,
    word1: &[usize],
    word2: &[usize],
) -> Result<CommInvariance, LedgerError> {
    match crate::weyl::comm_class_eq(rs, word1, word2) {
        Ok(true) => {}
        _ => return Err(LedgerError::NotCommEquivalent),
    }
    let l1 = relative_ledger(rs, word1)?;
    let l2 = relative_ledger(rs, word2)?;
    let last1 = l1.steps.last().expect("nonempty word");
    let last2 = l2.steps.last().expect("nonempty word");
    let h0_match = last1.h0.character() == last2.h0.character();
    let h1_match = last1.h1.character() == last2.h1.character();
    let bounds_match = tangent_bounds(&l1)? == tangent_bounds(&l2)?;
    Ok(CommInvariance { agree: h0_match && h1_match && bounds_match, h0_match, h1_match, bounds_match })
}

/// Character of the parabolic subalgebra extending the (negative) Borel by
/// the positive root spaces spanned by the subset I of simple roots.
pub fn parabolic_character(rs: &RootSystem, subset: &BTreeSet<usize>) -> Character {
    let n = rs.n;
    let mut ch: BTreeMap<Weight, usize> = BTreeMap::new();
    ch.insert(Weight::zero(n), n);
    for beta in &rs.positive_roots {
        *ch.entry(beta.neg()).or_insert(0) += 1;
        let coords = beta.root_coords().expect("positive root");
        let supported = coords
            .iter()
            .enumerate()
            .all(|(j, &c)| c == 0 || subset.contains(&(j + 1)));
        if supported {
            *ch.entry(beta.clone()).or_insert(0) += 1;
        }
    }
    Character(ch)
}

/// Search all 2^n subsets of simple roots for a parabolic whose character
/// matches.
pub fn matching_parabolic(rs: &RootSystem, ch: &Character) -> Option<BTreeSet<usize>> {
    let n = rs.n;
    for mask in 0u32..(1 << n) {
        let subset: BTreeSet<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        if parabolic_character(rs, &subset) == *ch {
            return Some(subset);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::build;
    use crate::weyl::shape_to_word;

    #[test]
    fn single_letter_bounds() {
        let rs = build(3).unwrap();
        for i in 1..=3 {
            let ledger = relative_ledger(&rs, &[i]).unwrap();
            let b = tangent_bounds(&ledger).unwrap();
            let ch = h0_char(&rs, &[i], &line(simple_root(3, i)));
            assert_eq!(b.h0_exact(), Some(ch));
            assert!(b.h1_all_zero());
        }
    }

    #[test]
    fn coxeter_extension_witness() {
        // for the shape (3, 1) at n = 3, the tower over the bare Coxeter
        // word has no sections of weight a_2
        let rs = build(3).unwrap();
        let shape = CoxeterShape::new(3, vec![3, 1]).unwrap();
        let word = shape_to_word(3, &shape);
        assert_eq!(word, vec![3, 1, 2]);
        let b = tangent_bounds(&relative_ledger(&rs, &word).unwrap()).unwrap();
        assert_eq!(b.h0_at(&simple_root(3, 2)), (0, 0));
    }

    #[test]
    fn verdict_matrix_n3() {
        let rs = build(3).unwrap();
        let expect = [
            (vec![1], Verdict::Vanishes),
            (vec![2, 1], Verdict::Nonzero),
            (vec![3, 1], Verdict::Vanishes),
            (vec![3, 2, 1], Verdict::Nonzero),
        ];
        for (seq, verdict) in expect {
            let shape = CoxeterShape::new(3, seq.clone()).unwrap();
            let report = theorem_verdict(&rs, &shape);
            assert_eq!(report.verdict, verdict, "shape {seq:?}");
            assert!(!report.failed(), "failed checks at shape {seq:?}");
        }
    }

    #[test]
    fn vanishing_bounds_are_parabolic() {
        let rs = build(3).unwrap();
        let shape = CoxeterShape::new(3, vec![1]).unwrap();
        let report = theorem_verdict(&rs, &shape);
        assert_eq!(report.verdict, Verdict::Vanishes);
        let bounds = report.bounds.unwrap();
        let h0 = bounds.h0_exact().expect("exact collapse");
        assert!(h0.dim() >= 12);
        assert_eq!(h0.mult(&rs.highest_root().neg()), 1);
        assert!(matching_parabolic(&rs, &h0).is_some());
    }

    #[test]
    fn lemma_suite_clean_n3() {
        let rs = build(3).unwrap();
        for shape in crate::weyl::coxeter_shapes(3) {
            let checks = lemma_suite(&rs, &shape);
            let failed: Vec<_> = checks
                .iter()
                .filter(|c| c.status == CheckStatus::Failed)
                .map(|c| format!("{} [{}]", c.id, c.instance))
                .collect();
            assert!(failed.is_empty(), "shape {shape}: {failed:?}");
        }
    }

    #[test]
    fn staircase_shape_examples() {
        let rs = build(3).unwrap();
        let shape = CoxeterShape::new(3, vec![3, 2, 1]).unwrap();
        // tau_3 sections live on the single weight -(a_1 + 2a_2 + a_3)
        let tau = word_tau(3, &shape, 3).unwrap();
        let ch = h0_char(&rs, &tau, &line(simple_root(3, 2)));
        let mu = double_tail_weight(3, 2, 1);
        assert_eq!(ch.support(), vec![mu.clone()]);
        assert_eq!(ch.mult(&mu), 1);
        // w_2 sections: the single weight -(a_3 + 2a_2), multiplicity one
        let w2 = word_w(3, &shape, 2).unwrap();
        let ch = h0_char(&rs, &w2, &line(simple_root(3, 3)));
        assert_eq!(ch.support(), vec![long_tail_weight(3, 2)]);
        assert!(all_mult_one(&ch));
    }

    #[test]
    fn disjoint_and_transfer_all_shapes_n3() {
        let rs = build(3).unwrap();
        let an = simple_root(3, 3);
        let an1 = simple_root(3, 2);
        for shape in crate::weyl::coxeter_shapes(3) {
            // extended-level H^1 equals the cut-word H^0, as characters
            let u1 = u1_reduced_word(&rs, &shape);
            let lhs = h1_char(&rs, &u1, &line(an.clone())).expect("tame");
            let rhs = h0_char(&rs, &word_u1_prime(3, &shape), &line(an1.clone()));
            assert_eq!(lhs, rhs, "shape {shape}");
            // all H^1 weight sets pairwise disjoint
            let mut sets = vec![support_set(&lhs)];
            for r in 1..=shape.k() {
                let ch = h1_char(&rs, &word_w(3, &shape, r).unwrap(), &line(an.clone())).expect("tame");
                sets.push(support_set(&ch));
            }
            for i in 0..sets.len() {
                for j in i + 1..sets.len() {
                    assert!(sets[i].is_disjoint(&sets[j]), "shape {shape}: sets {i}, {j}");
                }
            }
        }
    }

    #[test]
    fn commutation_invariance() {
        let rs = build(3).unwrap();
        let w1 = vec![3, 1, 2, 3, 1, 2];
        let report = commutation_invariance_check(&rs, &w1, &w1).unwrap();
        assert!(report.agree);
        // a genuine distant swap at n = 4
        let rs4 = build(4).unwrap();
        let report = commutation_invariance_check(&rs4, &[1, 3, 2, 4], &[3, 1, 2, 4]).unwrap();
        assert!(report.agree);
        // non-equivalent words are rejected
        assert_eq!(
            commutation_invariance_check(&rs, &[1, 2, 1], &[2, 1, 2]).unwrap_err(),
            LedgerError::NotCommEquivalent
        );
    }
}
