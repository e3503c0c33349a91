//! Fixed-weight symbol-error channel.
//!
//! Exactly `t` positions are corrupted per transmission, each replaced by a
//! uniformly chosen different symbol. Exhaustive sweeps walk every weight-`t`
//! pattern; Monte Carlo draws from a seeded ChaCha stream.

use std::ops::Add;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{DecodeStatus, LinearCode};
use crate::error::{Error, Result};
use crate::linalg::Vector;

/// Work cap for exhaustive sweeps.
pub const SWEEP_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ChannelStats {
    pub trials: u64,
    pub successes: u64,
    pub ambiguous: u64,
    pub miscorrected: u64,
}

impl ChannelStats {
    pub fn all_succeeded(&self) -> bool {
        self.successes == self.trials
    }

    fn record(&mut self, outcome: Outcome) {
        self.trials += 1;
        match outcome {
            Outcome::Success => self.successes += 1,
            Outcome::Ambiguous => self.ambiguous += 1,
            Outcome::Miscorrected => self.miscorrected += 1,
        }
    }
}

impl Add for ChannelStats {
    type Output = ChannelStats;
    fn add(self, o: ChannelStats) -> ChannelStats {
        ChannelStats {
            trials: self.trials + o.trials,
            successes: self.successes + o.successes,
            ambiguous: self.ambiguous + o.ambiguous,
            miscorrected: self.miscorrected + o.miscorrected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Success,
    Ambiguous,
    Miscorrected,
}

fn classify(code: &LinearCode, msg: &Vector, received: &Vector) -> Result<Outcome> {
    let r = code.decode_nearest(received)?;
    Ok(match r.status {
        DecodeStatus::Ambiguous => Outcome::Ambiguous,
        DecodeStatus::Unique if &r.message == msg => Outcome::Success,
        DecodeStatus::Unique => Outcome::Miscorrected,
    })
}

/// Corrupts exactly `t` distinct positions of `word`.
pub fn inject_errors<R: Rng + ?Sized>(word: &Vector, t: usize, rng: &mut R) -> Result<Vector> {
    if t > word.len() {
        return Err(Error::TooManyErrors { t, len: word.len() });
    }
    let q = word.prime().get() as u64;
    let mut values: Vec<u64> = word.values().iter().map(|&v| v as u64).collect();
    for pos in sample(rng, word.len(), t) {
        values[pos] = (values[pos] + rng.gen_range(1..q)) % q;
    }
    Ok(Vector::from_values(word.prime(), &values))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_guard(what: &'static str, work: Option<u128>) -> Result<()> {
    match work {
        Some(w) if w <= SWEEP_LIMIT => Ok(()),
        other => Err(Error::GuardExceeded {
            what,
            work: other.unwrap_or(u128::MAX),
            limit: SWEEP_LIMIT,
        }),
    }
}

/// Number of weight-`w` error patterns of length `len` over GF(q): `C(len, w)·(q−1)^w`.
fn pattern_count(len: usize, w: usize, q: u64) -> Option<u128> {
    binomial(len, w).checked_mul(((q - 1) as u128).checked_pow(w as u32)?)
}

/// Calls `f` with every weight-`w` error vector (as raw symbol offsets) on the given support.
fn for_each_pattern(support: &[usize], len: usize, q: u64, mut f: impl FnMut(&[u64]) -> Result<()>) -> Result<()> {
    let w = support.len();
    let mut digits = vec![1u64; w];
    let mut err = vec![0u64; len];
    loop {
        for (&pos, &d) in support.iter().zip(&digits) {
            err[pos] = d;
        }
        f(&err)?;
        // odometer over {1, ..., q-1}^w
        let mut i = 0;
        loop {
            if i == w {
                return Ok(());
            }
            if digits[i] + 1 < q {
                digits[i] += 1;
                break;
            }
            digits[i] = 1;
            i += 1;
        }
    }
}

/// Decodes every codeword under every weight-`t` error pattern.
///
/// Work is `C(N, t)·(p−1)^t·p^k`, capped at [`SWEEP_LIMIT`].
pub fn exhaustive_correction_stats(code: &LinearCode, t: usize) -> Result<ChannelStats> {
    let len = code.length();
    if t > len {
        return Err(Error::TooManyErrors { t, len });
    }
    let q = code.prime().get() as u64;
    let work = pattern_count(len, t, q).and_then(|w| w.checked_mul(code.size()?));
    check_guard("exhaustive correction C(N,t)(p-1)^t p^k; use monte_carlo", work)?;

    let words = code.codewords()?;
    let supports: Vec<Vec<usize>> = (0..len).combinations(t).collect();
    supports
        .par_iter()
        .map(|support| {
            let mut stats = ChannelStats::default();
            for_each_pattern(support, len, q, |err| {
                for (msg, cw) in &words {
                    let received: Vec<u64> = cw
                        .values()
                        .iter()
                        .zip(err)
                        .map(|(&c, &e)| c as u64 + e)
                        .collect();
                    let received = Vector::from_values(code.prime(), &received);
                    stats.record(classify(code, msg, &received)?);
                }
                Ok(())
            })?;
            Ok(stats)
        })
        .try_reduce(ChannelStats::default, |a, b| Ok(a + b))
}

/// True iff every message survives every weight-`t` error pattern.
pub fn exhaustive_correction_check(code: &LinearCode, t: usize) -> Result<bool> {
    Ok(exhaustive_correction_stats(code, t)?.all_succeeded())
}

/// True iff no error pattern of weight `1..=t` carries a codeword onto another codeword.
///
/// For a linear code `c + e` is a codeword exactly when `e` is, for every
/// codeword `c`, so only the patterns themselves are tested. Work is
/// `Σ_{w=1..t} C(N, w)·(p−1)^w`, capped at [`SWEEP_LIMIT`].
pub fn exhaustive_detection_check(code: &LinearCode, t: usize) -> Result<bool> {
    let len = code.length();
    if t > len {
        return Err(Error::TooManyErrors { t, len });
    }
    let q = code.prime().get() as u64;
    let work = (1..=t).try_fold(0u128, |acc, w| acc.checked_add(pattern_count(len, w, q)?));
    check_guard("exhaustive detection sum C(N,w)(p-1)^w", work)?;

    for w in 1..=t {
        let supports: Vec<Vec<usize>> = (0..len).combinations(w).collect();
        let hit = supports.par_iter().map(|support| {
            let mut found = false;
            for_each_pattern(support, len, q, |err| {
                if !found {
                    found = code.contains(&Vector::from_values(code.prime(), err))?;
                }
                Ok(())
            })?;
            Ok(found)
        });
        if hit.try_reduce(|| false, |a, b| Ok(a || b))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Seeded Monte Carlo over uniformly random messages and weight-`t` patterns.
pub fn monte_carlo(code: &LinearCode, t: usize, trials: u64, seed: u64) -> Result<ChannelStats> {
    if t > code.length() {
        return Err(Error::TooManyErrors {
            t,
            len: code.length(),
        });
    }
    let p = code.prime();
    let q = p.get() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = ChannelStats::default();
    for _ in 0..trials {
        let digits: Vec<u64> = (0..code.dimension()).map(|_| rng.gen_range(0..q)).collect();
        let msg = Vector::from_values(p, &digits);
        let sent = code.encode(&msg)?;
        let received = inject_errors(&sent, t, &mut rng)?;
        stats.record(classify(code, &msg, &received)?);
    }
    Ok(stats)
}
