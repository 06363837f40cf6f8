//! Fixed-weight channel simulation, brute-force oracles and trial runs.
//!
//! Randomness is ChaCha8 keyed by `(seed, purpose)` with the trial index as
//! the stream number, so any single trial can be replayed on any platform.

use std::fmt;
use std::time::{Duration, Instant};

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::codes::{distance, Code, CodeError, Word};
use crate::decoder::{
    decode_word, Algorithm, DecodeError, DecodeResult, Decoded, FailureReason, InvariantChecker, IterationCounter,
    StepObserver,
};
use crate::field::Elem;
use crate::poly::Poly;

/// Largest codebook the exhaustive routines will walk.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

const CHANNEL_STREAM: u64 = 1;
const MESSAGE_STREAM: u64 = 2;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("code has {0} codewords, more than the enumeration limit")]
    TooLargeToEnumerate(u128),
    #[error("cannot place {t} errors in a word of length {n}")]
    WeightTooLarge { t: usize, n: usize },
    #[error("code has no nonzero codewords")]
    EmptyCode,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Decode(#[from] DecodeError),
}

/// A channel that corrupts exactly `weight` symbols with nonzero values drawn
/// uniformly from the code's symbol alphabet.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ChannelSpec {
    pub weight: usize,
    pub seed: u64,
}

fn rng_for(seed: u64, purpose: u64, trial: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&purpose.to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(trial);
    rng
}

fn random_symbol(code: &Code, rng: &mut ChaCha8Rng, nonzero: bool) -> Elem {
    let lo = nonzero as usize;
    match code.alt() {
        Some(alt) => {
            let alphabet = alt.alphabet();
            alphabet[rng.random_range(lo..alphabet.len())]
        }
        None => Elem(rng.random_range(lo as u32..code.field().order() as u32)),
    }
}

/// Returns `(r, e)` with `r = c + e` and `wt(e) = channel.weight`.
pub fn inject_errors(code: &Code, c: &[Elem], channel: &ChannelSpec, trial: u64) -> Result<(Word, Word), HarnessError> {
    let n = c.len();
    if channel.weight > n {
        return Err(HarnessError::WeightTooLarge { t: channel.weight, n });
    }
    let mut rng = rng_for(channel.seed, CHANNEL_STREAM, trial);
    let mut e = vec![Elem::ZERO; n];
    for pos in index::sample(&mut rng, n, channel.weight) {
        e[pos] = random_symbol(code, &mut rng, true);
    }
    let f = code.field();
    let r = c.iter().zip(&e).map(|(&a, &b)| f.add(a, b)).collect();
    Ok((r, e))
}

/// A uniformly random message and its codeword, deterministic in `(seed, trial)`.
pub fn random_codeword(code: &Code, seed: u64, trial: u64) -> Result<(Vec<Elem>, Word), HarnessError> {
    let mut rng = rng_for(seed, MESSAGE_STREAM, trial);
    let message: Vec<Elem> = (0..code.dimension()).map(|_| random_symbol(code, &mut rng, false)).collect();
    let word = code.encode(&message)?;
    Ok((message, word))
}

/// Number of codewords, `|alphabet|^dimension`.
pub fn codeword_count(code: &Code) -> u128 {
    (code.symbol_order() as u128).saturating_pow(code.dimension() as u32)
}

/// Calls `visit` on every codeword, in message order.
pub fn for_each_codeword(code: &Code, mut visit: impl FnMut(&[Elem])) -> Result<(), HarnessError> {
    let count = codeword_count(code);
    if count > ENUMERATION_LIMIT as u128 {
        return Err(HarnessError::TooLargeToEnumerate(count));
    }
    let alphabet: Vec<Elem> = match code.alt() {
        Some(a) => a.alphabet().to_vec(),
        None => code.field().elements().collect(),
    };
    let dim = code.dimension();
    let mut digits = vec![0usize; dim];
    for _ in 0..count {
        let message: Vec<Elem> = digits.iter().map(|&d| alphabet[d]).collect();
        visit(&code.encode(&message)?);
        for d in digits.iter_mut() {
            *d += 1;
            if *d < alphabet.len() {
                break;
            }
            *d = 0;
        }
    }
    Ok(())
}

/// Nearest-codeword decoding by exhaustive search: succeeds when exactly one
/// codeword is nearest and it lies within `floor((n - k) / 2)` of `r`.
pub fn oracle_decode(code: &Code, r: &[Elem]) -> Result<DecodeResult, HarnessError> {
    let mut best: Option<(usize, Word)> = None;
    let mut ties = 0;
    for_each_codeword(code, |c| {
        let dist = distance(c, r);
        match &best {
            Some((d, _)) if dist > *d => {}
            Some((d, _)) if dist == *d => ties += 1,
            _ => {
                best = Some((dist, c.to_vec()));
                ties = 0;
            }
        }
    })?;
    let Some((dist, codeword)) = best else {
        return Ok(DecodeResult::Failure(FailureReason::RadiusExceeded));
    };
    if ties > 0 || dist > code.radius() {
        return Ok(DecodeResult::Failure(FailureReason::RadiusExceeded));
    }
    let grs = code.grs();
    let message = grs.message_of(&codeword).expect("enumerated words are codewords");
    let error_positions: Vec<usize> = (0..r.len()).filter(|&i| r[i] != codeword[i]).collect();
    let roots: Vec<Elem> = error_positions.iter().map(|&i| grs.alpha()[i]).collect();
    let error_locator = Poly::from_roots(code.field(), &roots);
    Ok(DecodeResult::Success(Decoded { message, codeword, error_positions, error_locator }))
}

/// Minimum weight over the nonzero codewords.
pub fn min_distance_exhaustive(code: &Code) -> Result<usize, HarnessError> {
    let mut min: Option<usize> = None;
    for_each_codeword(code, |c| {
        let w = crate::codes::weight(c);
        if w > 0 && min.is_none_or(|m| w < m) {
            min = Some(w);
        }
    })?;
    min.ok_or(HarnessError::EmptyCode)
}

/// Aggregate of a batch of channel trials.
#[derive(Clone, Debug)]
pub struct TrialReport {
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub algorithm: Algorithm,
    pub trials: u64,
    pub successes: u64,
    pub failures: u64,
    /// Successes that returned a codeword other than the one sent.
    pub miscorrections: u64,
    pub total_iterations: u64,
    /// Invariant violations seen by the step checker (only counted when checking).
    pub invariant_violations: u64,
    pub elapsed: Duration,
}

pub const CSV_HEADER: &str = "n,k,t,algorithm,trials,successes,failures,miscorrections,mean_iters,ms";

impl TrialReport {
    pub fn mean_iterations(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.total_iterations as f64 / self.trials as f64
        }
    }

    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            1.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }

    /// Everything except the wall time.
    pub fn counts(&self) -> (usize, usize, usize, Algorithm, u64, u64, u64, u64, u64, u64) {
        (
            self.n,
            self.k,
            self.t,
            self.algorithm,
            self.trials,
            self.successes,
            self.failures,
            self.miscorrections,
            self.total_iterations,
            self.invariant_violations,
        )
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{:.3},{}",
            self.n,
            self.k,
            self.t,
            self.algorithm,
            self.trials,
            self.successes,
            self.failures,
            self.miscorrections,
            self.mean_iterations(),
            self.elapsed.as_millis()
        )
    }
}

impl fmt::Display for TrialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{CSV_HEADER}")?;
        write!(f, "{}", self.csv_row())
    }
}

pub fn run_trials(
    code: &Code,
    channel: &ChannelSpec,
    trials: u64,
    algorithm: Algorithm,
) -> Result<TrialReport, HarnessError> {
    run(code, channel, trials, algorithm, false)
}

/// Like [`run_trials`], but every basis update is re-checked by an
/// [`InvariantChecker`] and violations are counted in the report.
pub fn run_trials_checked(
    code: &Code,
    channel: &ChannelSpec,
    trials: u64,
    algorithm: Algorithm,
) -> Result<TrialReport, HarnessError> {
    run(code, channel, trials, algorithm, true)
}

fn run(
    code: &Code,
    channel: &ChannelSpec,
    trials: u64,
    algorithm: Algorithm,
    check: bool,
) -> Result<TrialReport, HarnessError> {
    let start = Instant::now();
    let mut report = TrialReport {
        n: code.n(),
        k: code.k(),
        t: channel.weight,
        algorithm,
        trials,
        successes: 0,
        failures: 0,
        miscorrections: 0,
        total_iterations: 0,
        invariant_violations: 0,
        elapsed: Duration::ZERO,
    };
    for trial in 0..trials {
        let (_, c) = random_codeword(code, channel.seed, trial)?;
        let (r, _) = inject_errors(code, &c, channel, trial)?;
        let (result, steps) = if check {
            let mut checker = InvariantChecker::new(code.grs(), &r);
            let result = decode_word(code, &r, algorithm, &mut checker)?;
            report.invariant_violations += checker.violations.len() as u64;
            (result, checker.steps)
        } else {
            let mut counter = IterationCounter::default();
            let result = decode_word(code, &r, algorithm, &mut counter as &mut dyn StepObserver)?;
            (result, counter.steps)
        };
        report.total_iterations += steps as u64;
        match result.codeword() {
            Some(w) if *w == c => report.successes += 1,
            Some(_) => report.miscorrections += 1,
            None => report.failures += 1,
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
