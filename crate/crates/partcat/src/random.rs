//! Seeded random partitions for property checks. ChaCha keeps the streams
//! stable across platforms, so `--seed`-driven runs are byte-reproducible.

use crate::partition::{Color, Partition, Regime};
use crate::signature::Signature;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The deterministic RNG used throughout.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random color admissible in the regime.
pub fn random_color<R: Rng>(rng: &mut R, regime: Regime) -> Color {
    match regime {
        Regime::Plain => Color::Line,
        Regime::Extra => {
            if rng.gen_bool(0.3) {
                Color::Extra
            } else {
                Color::Line
            }
        }
        Regime::TwoColored => {
            if rng.gen_bool(0.5) {
                Color::White
            } else {
                Color::Black
            }
        }
    }
}

/// A random signature with `k + l <= max_points`.
pub fn random_signature<R: Rng>(rng: &mut R, regime: Regime, max_points: usize) -> Signature {
    let total = rng.gen_range(0..=max_points);
    let k = rng.gen_range(0..=total);
    let upper = (0..k).map(|_| random_color(rng, regime)).collect();
    let lower = (0..total - k).map(|_| random_color(rng, regime)).collect();
    Signature::new(upper, lower)
}

/// A random partition of a fixed signature: a random restricted-growth
/// assignment with extra singletons kept in their own blocks.
pub fn random_partition_of<R: Rng>(rng: &mut R, sig: &Signature) -> Partition {
    let colors: Vec<Color> = sig.upper().iter().chain(sig.lower().iter()).copied().collect();
    let n = colors.len();
    let mut ids: Vec<usize> = Vec::with_capacity(n);
    let mut joinable: Vec<usize> = Vec::new(); // block ids open to new points
    let mut next = 0usize;
    for (pt, &c) in colors.iter().enumerate() {
        let _ = pt;
        if c == Color::Extra {
            ids.push(next);
            next += 1;
            continue;
        }
        let choice = rng.gen_range(0..=joinable.len());
        if choice == joinable.len() {
            joinable.push(next);
            ids.push(next);
            next += 1;
        } else {
            ids.push(joinable[choice]);
        }
    }
    let mut blocks = vec![Vec::new(); next];
    for (pt, &b) in ids.iter().enumerate() {
        blocks[b].push(pt);
    }
    blocks.retain(|b| !b.is_empty());
    Partition::make(sig.upper(), sig.lower(), &blocks).expect("random assignment is valid")
}

/// A random partition in the regime with at most `max_points` points.
pub fn random_partition<R: Rng>(rng: &mut R, regime: Regime, max_points: usize) -> Partition {
    let sig = random_signature(rng, regime, max_points);
    random_partition_of(rng, &sig)
}

/// A random partition with even total length.
pub fn random_even_partition<R: Rng>(rng: &mut R, regime: Regime, max_points: usize) -> Partition {
    loop {
        let p = random_partition(rng, regime, max_points);
        if p.len() % 2 == 0 {
            return p;
        }
    }
}

/// A composable pair `(q, p)`: the lower word of `p` equals the upper word
/// of `q`.
pub fn random_composable_pair<R: Rng>(
    rng: &mut R,
    regime: Regime,
    max_points: usize,
) -> (Partition, Partition) {
    let p = random_partition(rng, regime, max_points);
    let mid = p.lower().to_vec();
    let m = rng.gen_range(0..=max_points.saturating_sub(mid.len()));
    let lower: Vec<Color> = (0..m).map(|_| random_color(rng, regime)).collect();
    let q = random_partition_of(rng, &Signature::new(mid, lower));
    (q, p)
}
