//! Two independent Alexander polynomial evaluators for cross-checking the
//! pipeline in [`crate::invariant`]. Neither touches Yang–Baxter operators.
//!
//! The skein evaluator is Conway-normalized: `Δ(unknot) = 1` and
//! `Δ(L₊) − Δ(L₋) = (s − s⁻¹)·Δ(L₀)` with `s = t^{1/2}`. Split links have
//! `Δ = 0`: put a kink in a component of `L`. Both signs of the kink undo by a
//! Reidemeister I move, so `L₊ = L₋ = L`, while smoothing it gives `L ⊔ O`.
//! Hence `(s − s⁻¹)·Δ(L ⊔ O) = 0`, and the `n`-unlink has `Δ = 0` for `n ≥ 2`.
//!
//! The Burau evaluator returns `Δ` only up to a unit `±s^k`.

use std::collections::HashMap;

use num_traits::Signed;
use thiserror::Error;

use crate::braid::BraidWord;
use crate::ring::{determinant, identity_matrix, matrix_mul, Monomial, RingError, Scalar, Var};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("skein recursion exceeded depth {0}")]
    RecursionBudgetExceeded(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
}

fn s() -> Scalar {
    Scalar::var(Var::S)
}

fn s_inv() -> Scalar {
    Scalar::monomial(Monomial::var(Var::S).inv())
}

/// Position in the word of the first crossing met from below while walking
/// the closure, or `None` when the diagram is descending.
///
/// Strands run top to bottom through the letters and the closure joins bottom
/// position `p` to top position `p`. Components are walked in order of their
/// smallest top position, each starting there. In `σ_i` the strand entering at
/// the left position passes over; in `σ_i⁻¹` the one entering at the right.
fn first_ascending_crossing(b: &BraidWord) -> Option<usize> {
    let letters = b.letters();
    let perm = b.permutation();
    let mut seen = vec![false; letters.len()];
    let mut started = vec![false; b.strands()];
    for start in 0..b.strands() {
        if started[start] {
            continue;
        }
        let mut top = start;
        loop {
            started[top] = true;
            let mut pos = top;
            for (j, &l) in letters.iter().enumerate() {
                let left = l.unsigned_abs() as usize - 1;
                let from_left = if pos == left {
                    true
                } else if pos == left + 1 {
                    false
                } else {
                    continue;
                };
                pos = if from_left { left + 1 } else { left };
                if !seen[j] {
                    seen[j] = true;
                    let over = from_left == (l > 0);
                    if !over {
                        return Some(j);
                    }
                }
            }
            top = perm[top];
            if top == start {
                break;
            }
        }
    }
    None
}

/// Conway-normalized `Δ` of the closure of `b`, as a polynomial in `s = t^{1/2}`.
///
/// Switches the first crossing that breaks descent and recurses on the
/// switched and smoothed words, memoized on freely reduced words. Every
/// switch removes one ascending crossing and every smoothing removes a
/// letter, so the depth never exceeds twice the word length.
pub fn alexander_skein(b: &BraidWord) -> Result<Scalar, OracleError> {
    let budget = 2 * b.len() + 1;
    let mut memo = HashMap::new();
    skein_rec(&b.free_reduce(), 0, budget, &mut memo)
}

fn skein_rec(
    b: &BraidWord,
    depth: usize,
    budget: usize,
    memo: &mut HashMap<BraidWord, Scalar>,
) -> Result<Scalar, OracleError> {
    if depth > budget {
        return Err(OracleError::RecursionBudgetExceeded(budget));
    }
    if let Some(v) = memo.get(b) {
        return Ok(v.clone());
    }
    let value = match first_ascending_crossing(b) {
        None => {
            let components = count_cycles(&b.permutation());
            if components == 1 { Scalar::one() } else { Scalar::zero() }
        }
        Some(j) => {
            let eps = b.letters()[j].signum();
            let switched = skein_rec(&b.switched_at(j).free_reduce(), depth + 1, budget, memo)?;
            let smoothed = skein_rec(&b.smoothed_at(j).free_reduce(), depth + 1, budget, memo)?;
            let z = &s() - &s_inv();
            let term = &z * &smoothed;
            if eps > 0 { &switched + &term } else { &switched - &term }
        }
    };
    memo.insert(b.clone(), value.clone());
    Ok(value)
}

fn count_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
        }
    }
    cycles
}

/// Reduced Burau image of a single letter, an `(n−1)×(n−1)` matrix over `ℚ[t^{±1}]`.
pub fn burau_generator(strands: usize, letter: i32) -> Vec<Vec<Scalar>> {
    let size = strands - 1;
    let mut m = identity_matrix(size);
    let i = letter.unsigned_abs() as usize - 1;
    let t = Scalar::t();
    let t_inv = t.inv().expect("t is a unit");
    let (diag, above, below) = if letter > 0 { (-&t, t.clone(), Scalar::one()) } else { (-&t_inv, Scalar::one(), t_inv) };
    m[i][i] = diag;
    if i > 0 {
        m[i - 1][i] = above;
    }
    if i + 1 < size {
        m[i + 1][i] = below;
    }
    m
}

/// Product of the generator images in word order.
pub fn burau_matrix(b: &BraidWord) -> Vec<Vec<Scalar>> {
    let n = b.strands();
    b.letters().iter().fold(identity_matrix(n - 1), |acc, &l| matrix_mul(&acc, &burau_generator(n, l)))
}

/// `det(ρ̄(b) − I)·(1 − t)/(1 − tⁿ)`, equal to `Δ` up to a factor `±s^k`.
pub fn alexander_burau(b: &BraidWord) -> Result<Scalar, OracleError> {
    let mut m = burau_matrix(b);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= &Scalar::one();
    }
    let det = determinant(&m)?;
    if det.is_zero() {
        return Ok(Scalar::zero());
    }
    let n = i32::try_from(b.strands()).expect("strand count fits in i32");
    let t = Scalar::t();
    let numerator = &det * &(&Scalar::one() - &t);
    let denominator = &Scalar::one() - &t.pow(n)?;
    Ok(numerator.div_exact(&denominator)?)
}

/// Whether `p = ±s^k·q` for some integer `k`.
pub fn units_equal(p: &Scalar, q: &Scalar) -> bool {
    fn normalize(p: &Scalar) -> Scalar {
        let Some((low, c)) = p.terms().next() else {
            return Scalar::zero();
        };
        let shifted = p.mul_monomial(&low.inv());
        if c.is_negative() { -shifted } else { shifted }
    }
    normalize(p) == normalize(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::fixtures;
    use crate::ring::Substitution;
    use proptest::prelude::*;

    fn sc(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn w(text: &str) -> BraidWord {
        text.parse().unwrap()
    }

    #[test]
    fn skein_examples() {
        assert_eq!(alexander_skein(&w("1:")).unwrap(), Scalar::one());
        assert_eq!(alexander_skein(&w("2:")).unwrap(), Scalar::zero());
        assert_eq!(alexander_skein(&w("3:")).unwrap(), Scalar::zero());
        assert_eq!(alexander_skein(&w("2: 1")).unwrap(), Scalar::one());
        assert_eq!(alexander_skein(&w("2: -1")).unwrap(), Scalar::one());
        assert_eq!(alexander_skein(&w("2: 1 1")).unwrap(), sc("t^1/2 - t^-1/2"));
        assert_eq!(alexander_skein(&w("2: -1 -1")).unwrap(), sc("t^-1/2 - t^1/2"));
        assert_eq!(alexander_skein(&w("2: 1 1 1")).unwrap(), sc("t - 1 + t^-1"));
        assert_eq!(alexander_skein(&w("3: 1 -2 1 -2")).unwrap(), sc("-t + 3 - t^-1"));
    }

    #[test]
    fn descent_detection() {
        assert_eq!(first_ascending_crossing(&w("2: 1 1")), Some(1));
        assert_eq!(first_ascending_crossing(&w("2: 1 -1")), None);
        assert_eq!(first_ascending_crossing(&w("3: 1 2")), None);
    }

    #[test]
    fn burau_examples() {
        assert_eq!(burau_matrix(&w("2: 1")), vec![vec![sc("-t")]]);
        assert_eq!(alexander_burau(&w("2: 1 1 1")).unwrap(), sc("-t^2 + t - 1"));
        assert!(units_equal(&alexander_burau(&w("2: 1 1 1")).unwrap(), &sc("t - 1 + t^-1")));
        assert!(units_equal(&alexander_burau(&w("3: 1 -2 1 -2")).unwrap(), &sc("-t + 3 - t^-1")));
        assert!(alexander_burau(&w("2:")).unwrap().is_zero());
        assert_eq!(alexander_burau(&w("1:")).unwrap(), Scalar::one());
    }

    #[test]
    fn burau_generators_invert_and_braid() {
        for n in 2..=4usize {
            for i in 1..n as i32 {
                let prod = matrix_mul(&burau_generator(n, i), &burau_generator(n, -i));
                assert_eq!(prod, identity_matrix(n - 1));
            }
        }
        assert_eq!(burau_matrix(&w("4: 1 2 1")), burau_matrix(&w("4: 2 1 2")));
        assert_eq!(burau_matrix(&w("4: 1 3")), burau_matrix(&w("4: 3 1")));
    }

    #[test]
    fn units_equal_examples() {
        let p = sc("t - 1 + t^-1");
        assert!(units_equal(&p, &(&sc("-t") * &p)));
        assert!(units_equal(&p, &(&sc("t^-1/2") * &p)));
        assert!(units_equal(&Scalar::zero(), &Scalar::zero()));
        assert!(!units_equal(&sc("t^1/2 - t^-1/2"), &sc("t^1/2 + t^-1/2")));
        assert!(!units_equal(&p, &Scalar::zero()));
        assert!(!units_equal(&p, &(&sc("2") * &p)));
    }

    #[test]
    fn knot_fixtures_are_symmetric() {
        let mut flip = Substitution::new();
        flip.insert(Var::S, s_inv());
        for b in ["2: 1 1 1", "3: 1 -2 1 -2"] {
            let d = alexander_skein(&w(b)).unwrap();
            assert_eq!(d.substitute(&flip).unwrap(), d, "{b}");
        }
    }

    #[test]
    fn fixtures_agree_across_oracles() {
        for (name, b) in fixtures() {
            let skein = alexander_skein(&b).unwrap();
            assert!(units_equal(&skein, &alexander_burau(&b).unwrap()), "{name}");
        }
    }

    fn arb_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        (2..=max_n).prop_flat_map(move |n| {
            let gens: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
            prop::collection::vec(prop::sample::select(gens), 0..=max_len)
                .prop_map(move |l| BraidWord::new(n, l).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn skein_agrees_with_burau(b in arb_word(3, 6)) {
            let skein = alexander_skein(&b).unwrap();
            let burau = alexander_burau(&b).unwrap();
            prop_assert!(units_equal(&skein, &burau), "{} vs {}", skein, burau);
        }

        #[test]
        fn skein_is_markov_invariant(b in arb_word(3, 6), g in arb_word(3, 3), positive: bool) {
            prop_assume!(g.strands() == b.strands());
            let d = alexander_skein(&b).unwrap();
            prop_assert_eq!(alexander_skein(&b.conjugate(&g).unwrap()).unwrap(), d.clone());
            prop_assert_eq!(alexander_skein(&b.stabilize(positive)).unwrap(), d);
        }

        #[test]
        fn skein_relation_holds(b in arb_word(4, 7), at in 0usize..8, i in 1i32..4) {
            prop_assume!(i < b.strands() as i32);
            let at = at.min(b.len());
            let mut plus = b.letters().to_vec();
            plus.insert(at, i);
            let mut minus = b.letters().to_vec();
            minus.insert(at, -i);
            let n = b.strands();
            let lhs = &alexander_skein(&BraidWord::new(n, plus).unwrap()).unwrap()
                - &alexander_skein(&BraidWord::new(n, minus).unwrap()).unwrap();
            let rhs = &(&s() - &s_inv()) * &alexander_skein(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
