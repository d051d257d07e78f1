//! Seeded inputs shared by the benchmarks.

use pbounded::thompson::{f, g, random_word, rank_four_images};
use pbounded::PLMap;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The six built-in elements of `F'`.
pub fn generators() -> Vec<PLMap> {
    let mut gens = vec![f(), g()];
    gens.extend(rank_four_images());
    gens
}

/// `n` reproducible pairs of words of length at most `max_len`.
pub fn word_pairs(seed: u64, n: usize, max_len: usize) -> Vec<(PLMap, PLMap)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = generators();
    (0..n)
        .map(|_| {
            (
                random_word(&mut rng, &gens, max_len),
                random_word(&mut rng, &gens, max_len),
            )
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
