//! Seeded random inputs. Trial `t` of a run with seed `s` draws from
//! `ChaCha8Rng::seed_from_u64(s + t)`, so any single trial can be replayed.

use minrep_core::field::{q, Q};
use minrep_core::linalg::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

/// Numerator in `-3..=3`, denominator in `1..=4`.
pub fn small_rational(rng: &mut impl Rng) -> Q {
    q(rng.gen_range(-3..=3), rng.gen_range(1..=4))
}

pub fn random_matrix(rng: &mut impl Rng, l: usize) -> Matrix<Q> {
    Matrix::from_fn(l, l, |_, _| small_rational(rng))
}

/// Numerator in `-9..=9`, denominator in `1..=5`.
pub fn random_point(rng: &mut impl Rng) -> [Q; 4] {
    std::array::from_fn(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replayable() {
        let a = random_matrix(&mut trial_rng(5, 3), 3);
        let b = random_matrix(&mut trial_rng(7, 1), 3);
        assert_eq!(a, b);
    }
}
