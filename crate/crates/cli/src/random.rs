//! Seeded random delta-matroids for scans and the acceptance suite.

use deltamat::ground::{enumerate_transversals, SignedPermutation};
use deltamat::matroid::{dm_from_gf2, dm_from_matroid, FromMatroid, Gf2SymMatrix};
use deltamat::{DeltaMatroid, Ground, Matroid, ValidationMethod};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Distribution {
    /// Bernoulli(1/2) families of size-n admissible sets, kept if valid.
    Uniform,
    /// Principal-minor delta-matroids of random symmetric GF(2) matrices.
    Gf2,
    /// Random binary matroids, converted by bases or independents, then twisted.
    Twist,
}

impl Distribution {
    pub const ALL: [Distribution; 3] = [Distribution::Uniform, Distribution::Gf2, Distribution::Twist];

    pub fn name(self) -> &'static str {
        match self {
            Distribution::Uniform => "uniform",
            Distribution::Gf2 => "gf2",
            Distribution::Twist => "twist",
        }
    }
}

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

const UNIFORM_ATTEMPTS: usize = 10_000;

/// Bernoulli(1/2) family over the size-`n` admissible sets, rejected until valid;
/// falls back to a single random feasible set.
pub fn uniform_family(n: usize, rng: &mut impl Rng) -> Option<DeltaMatroid> {
    let sets = enumerate_transversals(n).ok()?;
    for _ in 0..UNIFORM_ATTEMPTS {
        let chosen: Vec<_> = sets.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
        if let Ok(d) = DeltaMatroid::new(n, chosen) {
            if d.validate(ValidationMethod::Exchange).ok()?.is_valid() {
                return Some(d);
            }
        }
    }
    DeltaMatroid::new(n, [sets[rng.random_range(0..sets.len())]]).ok()
}

/// Any family of size-`n` admissible sets, valid or not (nonempty).
pub fn any_family(n: usize, rng: &mut impl Rng) -> DeltaMatroid {
    let sets = enumerate_transversals(n).expect("n within guard");
    loop {
        let chosen: Vec<_> = sets.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
        if let Ok(d) = DeltaMatroid::new(n, chosen) {
            return d;
        }
    }
}

#[allow(clippy::needless_range_loop)]
pub fn gf2_matrix(n: usize, rng: &mut impl Rng) -> Gf2SymMatrix {
    let mut rows = vec![vec![0u8; n]; n];
    for i in 0..n {
        for j in i..n {
            let b = rng.random_bool(0.5) as u8;
            rows[i][j] = b;
            rows[j][i] = b;
        }
    }
    Gf2SymMatrix::new(rows).expect("symmetric by construction")
}

/// Column matroid of a random `r × n` binary matrix.
pub fn binary_matroid(n: usize, rng: &mut impl Rng) -> Matroid {
    let r = rng.random_range(0..=n);
    let cols: Vec<u32> = (0..n).map(|_| rng.random_range(0..1u32 << r)).collect();
    let independent = |mask: u64| -> bool {
        // Row-echelon basis keyed by leading bit.
        let mut lead = [0u32; 32];
        for (i, &c) in cols.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            let mut v = c;
            while v != 0 {
                let top = 31 - v.leading_zeros() as usize;
                if lead[top] == 0 {
                    lead[top] = v;
                    break;
                }
                v ^= lead[top];
            }
            if v == 0 {
                return false;
            }
        }
        true
    };
    let all: Vec<u64> = (0..1u64 << n).filter(|&m| independent(m)).collect();
    let rank = all.iter().map(|m| m.count_ones()).max().unwrap_or(0);
    let bases = all.into_iter().filter(|m| m.count_ones() == rank).collect();
    Matroid::new(Ground::Plain(n), bases).expect("column matroid")
}

pub fn signed_permutation(n: usize, rng: &mut impl Rng) -> SignedPermutation {
    let mut image: Vec<i64> = (1..=n as i64).collect();
    image.shuffle(rng);
    for x in image.iter_mut() {
        if rng.random_bool(0.5) {
            *x = -*x;
        }
    }
    SignedPermutation::new(image).expect("signed permutation by construction")
}

pub fn twisted_matroid(n: usize, rng: &mut impl Rng) -> DeltaMatroid {
    let m = binary_matroid(n, rng);
    let mode = if rng.random_bool(0.5) { FromMatroid::Bases } else { FromMatroid::Independents };
    let d = dm_from_matroid(&m, mode).expect("valid matroid");
    d.twist(&signed_permutation(n, rng)).expect("sizes match")
}

pub fn sample(dist: Distribution, n: usize, rng: &mut impl Rng) -> DeltaMatroid {
    match dist {
        Distribution::Uniform => uniform_family(n, rng).expect("n within guard"),
        Distribution::Gf2 => dm_from_gf2(&gf2_matrix(n, rng)).expect("symmetric"),
        Distribution::Twist => twisted_matroid(n, rng),
    }
}

/// The `i`-th draw of a seeded scan cycles through the distributions, each draw
/// on its own stream so results do not depend on evaluation order.
pub fn scan_sample(seed: u64, i: u64, n: usize) -> (Distribution, DeltaMatroid) {
    let dist = Distribution::ALL[(i % 3) as usize];
    let mut r = rng(seed, i);
    (dist, sample(dist, n, &mut r))
}
