#![allow(dead_code)]

pub mod printed;

use perioband::gen::generate;
use perioband::oracle::oracle_det;
use perioband::{factorize, PeriodicBandMatrix, Rational, SubstitutionKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const BANDWIDTHS: [usize; 4] = [3, 5, 7, 9];

/// Random nonsingular instance with `n` in `[5, 40]` and `k ≤ n - 1`, by rejection.
pub fn random_nonsingular(seed: u64) -> PeriodicBandMatrix<Rational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let k = BANDWIDTHS[rng.gen_range(0..BANDWIDTHS.len())];
        let n = rng.gen_range((k + 1).max(5)..=40);
        let m = generate(n, k, rng.gen(), 0.0).unwrap();
        if !oracle_det(&m.to_dense()).unwrap().is_zero() {
            return m;
        }
    }
}

/// Which substitutions an adversarial instance must exercise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    BandSuper,
    BandSub,
    Pivot,
    All,
}

fn kinds(m: &PeriodicBandMatrix<Rational>) -> Vec<SubstitutionKind> {
    let mut k: Vec<_> = factorize(m).unwrap().substitutions().iter().map(|s| s.kind).collect();
    k.sort_by_key(|s| *s as u8);
    k.dedup();
    k
}

fn zero_super(m: &mut PeriodicBandMatrix<Rational>, rng: &mut ChaCha8Rng) {
    let (n, h) = (m.n(), m.half_bandwidth());
    let i = rng.gen_range(1..=n - h - 1);
    m.set(i, i + h, Rational::zero()).unwrap();
}

fn zero_sub(m: &mut PeriodicBandMatrix<Rational>, rng: &mut ChaCha8Rng) {
    let (n, h) = (m.n(), m.half_bandwidth());
    let i = rng.gen_range(h + 2..=n);
    m.set(i, i - h, Rational::zero()).unwrap();
}

/// Chooses `a(i,i)` so that pivot `u(i,i)` comes out exactly zero.
fn zero_pivot(m: &mut PeriodicBandMatrix<Rational>, rng: &mut ChaCha8Rng) {
    let i = rng.gen_range(1..=m.n());
    m.set(i, i, Rational::zero()).unwrap();
    let pivot = factorize(m).unwrap().u(i, i).unwrap();
    if let Some(p) = pivot.as_constant() {
        m.set(i, i, -p.clone()).unwrap();
    }
}

/// A nonsingular instance whose factorization uses exactly the targeted substitutions.
pub fn adversarial(seed: u64, target: Target) -> PeriodicBandMatrix<Rational> {
    use SubstitutionKind::*;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let want: Vec<SubstitutionKind> = match target {
        Target::BandSuper => vec![BandSuper],
        Target::BandSub => vec![BandSub],
        Target::Pivot => vec![Pivot],
        Target::All => vec![BandSuper, BandSub, Pivot],
    };
    loop {
        let k = BANDWIDTHS[rng.gen_range(0..BANDWIDTHS.len())];
        let n = rng.gen_range((k + 1).max(5)..=24);
        // start from a matrix with no accidental zeros in the band
        let mut m = generate(n, k, rng.gen(), 0.0).unwrap();
        let filled = m.map(|v| if v.is_zero() { Rational::one() } else { v.clone() });
        m = filled;
        if want.contains(&BandSuper) {
            zero_super(&mut m, &mut rng);
        }
        if want.contains(&BandSub) {
            zero_sub(&mut m, &mut rng);
        }
        if want.contains(&Pivot) {
            zero_pivot(&mut m, &mut rng);
        }
        if kinds(&m) == want && !oracle_det(&m.to_dense()).unwrap().is_zero() {
            return m;
        }
    }
}

/// The 50 adversarial instances: individual and joint substitution patterns.
pub fn adversarial_suite() -> Vec<(Target, PeriodicBandMatrix<Rational>)> {
    let targets = [Target::BandSuper, Target::BandSub, Target::Pivot, Target::All];
    (0..50u64).map(|s| {
        let t = targets[s as usize % 4];
        (t, adversarial(1000 + s, t))
    })
    .collect()
}
