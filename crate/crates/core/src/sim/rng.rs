use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random stream owned by one trial.
pub type TrialRng = ChaCha8Rng;

/// SplitMix64 finaliser.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for trial `t`: SplitMix64 of the master seed advanced `t + 1` steps.
/// Depends only on `(seed, t)`, so results do not depend on how trials are
/// split across threads.
pub fn trial_seed(seed: u64, t: u64) -> u64 {
    mix(seed.wrapping_add(t.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

pub fn trial_rng(seed: u64, t: u64) -> TrialRng {
    ChaCha8Rng::seed_from_u64(trial_seed(seed, t))
}
