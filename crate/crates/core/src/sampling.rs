//! Seeded random weight sampling for sweeps and acceptance runs. Free
//! coordinates are small integers in [-10, 10]; the coordinate constrained
//! by atypicality is solved exactly from `(lambda + rho, beta) = 0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::SuperAlgebra;
use crate::coeff::Rat;
use crate::glmn::beta_st;
use crate::weight::{Root, Weight};

pub type SweepRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SweepRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn draw(rng: &mut SweepRng) -> Rat {
    Rat::int(rng.random_range(-10..=10))
}

/// The value of `b_t` making `lambda` atypical for `beta = delta_s - eps_t`:
/// `(lambda + rho, beta) = (a_s + rho_s) + (b_t + rho_t) = 0`.
fn constrained_eps(alg: &SuperAlgebra, s: usize, t: usize, a_s: &Rat) -> Rat {
    let rho_d = &alg.rho.delta[s - 1];
    let rho_e = &alg.rho.eps[t - 1];
    -(a_s + rho_d) - rho_e
}

/// Integer-coordinate weight, atypical for the minus-case odd root `beta`.
pub fn atypical_weight(alg: &SuperAlgebra, beta: &Root, rng: &mut SweepRng) -> Weight {
    let (s, t) = beta_st(alg, beta).expect("minus-case odd root");
    let delta: Vec<Rat> = (0..alg.delta_rank).map(|_| draw(rng)).collect();
    let mut eps: Vec<Rat> = (0..alg.eps_rank).map(|_| draw(rng)).collect();
    eps[t - 1] = constrained_eps(alg, s, t, &delta[s - 1]);
    Weight { delta, eps }
}

/// Integer-coordinate weight with `(lambda + rho, beta) != 0`.
pub fn non_atypical_weight(alg: &SuperAlgebra, beta: &Root, rng: &mut SweepRng) -> Weight {
    loop {
        let lam = Weight {
            delta: (0..alg.delta_rank).map(|_| draw(rng)).collect(),
            eps: (0..alg.eps_rank).map(|_| draw(rng)).collect(),
        };
        if !alg
            .is_atypical(&lam, beta)
            .expect("odd positive root")
        {
            return lam;
        }
    }
}

/// Dominant integral beta-atypical lambda with lambda - beta also dominant
/// integral, generated constructively with gap-respecting draws.
pub fn dominant_atypical_pair(alg: &SuperAlgebra, beta: &Root, rng: &mut SweepRng) -> Weight {
    let (s, t) = beta_st(alg, beta).expect("minus-case odd root");
    let m = alg.delta_rank;
    let n = alg.eps_rank;
    let mut delta = vec![Rat::zero(); m];
    delta[s - 1] = draw(rng);
    let mut gap = |lo: i64| Rat::int(lo + rng.random_range(0..=3));
    // Above s: weakly increasing; below s: a strict drop first (so that
    // a_s - 1 >= a_{s-1} keeps lambda - beta dominant).
    for i in s..m {
        delta[i] = &delta[i - 1] + &gap(0);
    }
    for i in (1..s).rev() {
        let lo = if i == s - 1 { 1 } else { 0 };
        delta[i - 1] = &delta[i] - &gap(lo);
    }

    let mut eps = vec![Rat::zero(); n];
    eps[t - 1] = constrained_eps(alg, s, t, &delta[s - 1]);
    for j in (1..t).rev() {
        let lo = if j == t - 1 { 1 } else { 0 };
        eps[j - 1] = &eps[j] + &gap(lo);
    }
    for j in t..n {
        eps[j] = &eps[j - 1] - &gap(0);
    }

    let lam = Weight { delta, eps };
    debug_assert!(lam.is_dominant_integral());
    debug_assert!(lam.sub(&beta.weight).is_dominant_integral());
    lam
}

/// Small random rational with denominator in {1, 2, 3}.
pub fn rational(rng: &mut SweepRng) -> Rat {
    let numer = rng.random_range(-8..=8);
    let denom = rng.random_range(1..=3);
    Rat::new(numer, denom).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gl_cached;
    use crate::glmn::odd_root;

    #[test]
    fn sampled_weights_meet_their_constraints() {
        let alg = gl_cached(3, 2);
        let beta = odd_root(&alg, 2, 2).unwrap();
        let mut r = rng(42);
        for _ in 0..20 {
            let lam = atypical_weight(&alg, &beta, &mut r);
            assert!(alg.is_atypical(&lam, &beta).unwrap());
            let non = non_atypical_weight(&alg, &beta, &mut r);
            assert!(!alg.is_atypical(&non, &beta).unwrap());
            let dom = dominant_atypical_pair(&alg, &beta, &mut r);
            assert!(alg.is_atypical(&dom, &beta).unwrap());
            assert!(dom.is_dominant_integral());
            assert!(dom.sub(&beta.weight).is_dominant_integral());
        }
    }

    #[test]
    fn sampling_is_reproducible() {
        let alg = gl_cached(2, 2);
        let beta = odd_root(&alg, 2, 1).unwrap();
        let a = atypical_weight(&alg, &beta, &mut rng(7));
        let b = atypical_weight(&alg, &beta, &mut rng(7));
        assert_eq!(a, b);
    }
}
