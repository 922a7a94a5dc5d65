//! Seeded random sweeps shared by the acceptance and property test targets.

use bsdh_core::bmod::{line, BModule, Character};
use bsdh_core::cartan::{fundamental_weight, RootSystem, Weight};
use bsdh_core::coh::{demazure_char, demazure_word, h0_step, h0_word, h1_step, h1_twist_sign, word_cohomology, SignedChar};
use bsdh_core::linalg::QMat;
use bsdh_core::weyl::{reduced_word, WeylElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_element(rs: &RootSystem, rng: &mut ChaCha8Rng) -> WeylElement {
    let n = rs.n;
    let mut w = WeylElement::identity(n);
    for _ in 0..rng.gen_range(0..=2 * n) {
        w = w.compose(&WeylElement::generator(n, rng.gen_range(1..=n)));
    }
    w
}

pub fn random_descent_word(rs: &RootSystem, elem: &WeylElement, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = rs.n;
    let mut w = elem.clone();
    let mut word = Vec::new();
    while !w.is_identity() {
        let len = bsdh_core::weyl::length(rs, &w);
        let descents: Vec<usize> = (1..=n)
            .filter(|&i| bsdh_core::weyl::length(rs, &WeylElement::generator(n, i).compose(&w)) < len)
            .collect();
        let i = descents[rng.gen_range(0..descents.len())];
        word.push(i);
        w = WeylElement::generator(n, i).compose(&w);
    }
    word
}

fn demazure_cost(word: &[usize], lambda: &Weight) -> usize {
    let mut ch = SignedChar::line(lambda.clone());
    let mut cost: usize = ch.0.values().map(|m| m.unsigned_abs() as usize).sum();
    for &i in word.iter().rev() {
        ch = demazure_char(i, &ch);
        cost = cost.max(ch.0.values().map(|m| m.unsigned_abs() as usize).sum::<usize>());
    }
    cost
}

pub fn random_bounded_weight(n: usize, word: &[usize], rng: &mut ChaCha8Rng) -> Weight {
    for _ in 0..200 {
        let mut w = Weight::zero(n);
        for i in 1..=n {
            w = w.add(&fundamental_weight(n, i).scaled(rng.gen_range(-3..=3)));
        }
        if demazure_cost(word, &w) <= 40 {
            return w;
        }
    }
    Weight::zero(n)
}

pub fn in_short_region(rs: &RootSystem, w: &Weight) -> bool {
    let neg = w.neg();
    rs.is_root(&neg)
        && rs.is_short(&neg)
        && rs.positive_roots.contains(&neg)
        && neg.root_coords().map_or(false, |c| c.iter().sum::<i64>() > 1)
}

/// Direct sum of lines over the negative non-simple short roots: the exact
/// hypothesis of the weight-support guard.
pub fn short_region_module(rs: &RootSystem) -> BModule {
    let weights: Vec<Weight> = rs
        .negative_short_roots()
        .into_iter()
        .filter(|w| in_short_region(rs, w))
        .collect();
    let d = weights.len();
    BModule::new(rs.n, weights, vec![QMat::zero(d, d); rs.n])
}

pub struct SweepResult {
    pub euler: usize,
    pub independence: usize,
    pub rank_one: usize,
    pub support: usize,
    pub failures: Vec<String>,
}

/// Run all five seeded property checks; every drawn sample is checked
/// (identity words and folds with an extension-ambiguous degree are
/// redrawn), so each counter reaches `samples`.
pub fn property_sweep(rs: &RootSystem, samples: usize, seed: u64) -> SweepResult {
    let n = rs.n;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = SweepResult { euler: 0, independence: 0, rank_one: 0, support: 0, failures: Vec::new() };
    assert_eq!(h1_twist_sign(), -1, "duality-twist validation");
    let guard = short_region_module(rs);

    while out.euler < samples {
        let elem = random_element(rs, &mut rng);
        if elem.is_identity() {
            continue;
        }
        let word = reduced_word(rs, &elem);
        let lambda = random_bounded_weight(n, &word, &mut rng);

        // Euler identity: alternating character sum equals the
        // divided-difference image of the fiber
        let jmax = word.len();
        let wc = word_cohomology(rs, &word, &line(lambda.clone()), jmax).expect("reduced word");
        let chars: Option<Vec<Character>> = (1..=jmax).map(|j| wc.degree(j).character()).collect();
        match chars {
            Some(chars) => {
                let mut alt = SignedChar::from_character(&wc.h0.character());
                let mut sign = -1i64;
                for ch in &chars {
                    for (w, &m) in &ch.0 {
                        alt.add_term(w.clone(), sign * m as i64);
                    }
                    sign = -sign;
                }
                let expect = demazure_word(&word, &SignedChar::line(lambda.clone()));
                if alt.sub(&expect).is_zero() {
                    out.euler += 1;
                } else {
                    out.failures.push(format!("euler: word {word:?}, weight {lambda}"));
                    break;
                }
            }
            None => {
                // an extension-ambiguous peel left a degree without a
                // character; the identity cannot be evaluated, so redraw
                continue;
            }
        }

        // H^0 word-independence across two random reduced words
        let w1 = random_descent_word(rs, &elem, &mut rng);
        let w2 = random_descent_word(rs, &elem, &mut rng);
        let c1 = h0_word(rs, &w1, &line(lambda.clone())).expect("reduced").character();
        let c2 = h0_word(rs, &w2, &line(lambda.clone())).expect("reduced").character();
        if c1 == c2 {
            out.independence += 1;
        } else {
            out.failures.push(format!("independence: {w1:?} vs {w2:?}, weight {lambda}"));
            break;
        }

        // pairing -1 kills both degrees of the one-step recursion
        let i = rng.gen_range(1..=n);
        let mut mu = random_bounded_weight(n, &[], &mut rng);
        let excess = mu.pairing(i) + 1;
        mu = mu.sub(&fundamental_weight(n, i).scaled(excess));
        assert_eq!(mu.pairing(i), -1);
        if h0_step(i, &line(mu.clone())).h0.is_zero() && h1_step(i, &line(mu.clone())).is_zero() {
            out.rank_one += 1;
        } else {
            out.failures.push(format!("rank-one: letter {i}, weight {mu}"));
            break;
        }

        // sections of the short-region module stay in the short region
        let h0 = h0_word(rs, &word, &guard).expect("reduced");
        if h0.character().support().iter().all(|w| in_short_region(rs, w)) {
            out.support += 1;
        } else {
            out.failures.push(format!("support-guard: word {word:?}"));
            break;
        }
    }
    out
}
