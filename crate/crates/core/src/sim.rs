//! Channel model and decoder simulation.
//!
//! Trial `i` of a run with master seed `s` draws all of its randomness
//! from a ChaCha8 generator seeded with [`trial_seed`]`(s, i)`, so results
//! do not depend on how trials are spread over threads.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{CodeSpec, Codeword};
use crate::decoder::{
    build_candidate_list, decode, list_decode, Candidate, DecodeOptions, DEFAULT_CANDIDATE_CAP,
};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Upper bound on the number of trials of an exhaustive run.
pub const EXHAUSTIVE_TRIAL_CAP: u128 = 10_000_000;

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `mix64(master + (index + 1) * golden_gamma)`.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    mix64(master.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

pub fn trial_rng(master: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(master, index))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChannelKind {
    /// Nonzero errors at exactly these positions.
    FixedPositions(Vec<usize>),
    /// A uniformly chosen support of this many positions.
    RandomHammingWeight(usize),
    /// A uniformly chosen support of this total modulus degree.
    RandomDegreeWeight(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChannelModel {
    pub kind: ChannelKind,
    pub master_seed: u64,
}

/// `counts[i][w]`: number of subsets of positions `i..n` with degree weight `w`.
fn subset_counts(degrees: &[usize], target: usize) -> Vec<Vec<f64>> {
    let n = degrees.len();
    let mut counts = vec![vec![0.0; target + 1]; n + 1];
    counts[n][0] = 1.0;
    for i in (0..n).rev() {
        for w in 0..=target {
            let skip = counts[i + 1][w];
            let take = if w >= degrees[i] {
                counts[i + 1][w - degrees[i]]
            } else {
                0.0
            };
            counts[i][w] = skip + take;
        }
    }
    counts
}

impl ChannelModel {
    pub fn check(&self, spec: &CodeSpec) -> Result<()> {
        match &self.kind {
            ChannelKind::FixedPositions(pos) => {
                if let Some(&index) = pos.iter().find(|&&i| i >= spec.n()) {
                    return Err(Error::IndexOutOfRange { index, n: spec.n() });
                }
                let mut p = pos.clone();
                p.sort_unstable();
                p.dedup();
                if p.len() != pos.len() {
                    return Err(Error::InfeasibleWeight("repeated position".into()));
                }
            }
            ChannelKind::RandomHammingWeight(w) => {
                if *w > spec.n() {
                    return Err(Error::InfeasibleWeight(format!(
                        "Hamming weight {w} exceeds n = {}",
                        spec.n()
                    )));
                }
            }
            ChannelKind::RandomDegreeWeight(w) => {
                if *w > spec.big_n() || subset_counts(spec.degrees(), *w)[0][*w] == 0.0 {
                    return Err(Error::InfeasibleWeight(format!(
                        "no position set has degree weight {w}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Error support for one trial, sorted.
    fn support(&self, spec: &CodeSpec, rng: &mut impl Rng) -> Vec<usize> {
        let mut s = match &self.kind {
            ChannelKind::FixedPositions(pos) => pos.clone(),
            ChannelKind::RandomHammingWeight(w) => sample(rng, spec.n(), *w).into_vec(),
            ChannelKind::RandomDegreeWeight(w) => {
                let degrees = spec.degrees();
                let counts = subset_counts(degrees, *w);
                let mut rest = *w;
                let mut out = Vec::new();
                for i in 0..degrees.len() {
                    if rest == 0 {
                        break;
                    }
                    let take = if rest >= degrees[i] {
                        counts[i + 1][rest - degrees[i]]
                    } else {
                        0.0
                    };
                    let total = counts[i][rest];
                    if take > 0.0 && rng.gen::<f64>() * total < take {
                        out.push(i);
                        rest -= degrees[i];
                    }
                }
                out
            }
        };
        s.sort_unstable();
        s
    }
}

/// Uniform nonzero residue modulo a polynomial of degree `d`.
pub fn random_nonzero_residue(spec: &CodeSpec, d: usize, rng: &mut impl Rng) -> Poly {
    let q = spec.field().size();
    loop {
        let c: Vec<u32> = (0..d).map(|_| rng.gen_range(0..q)).collect();
        if c.iter().any(|&v| v != 0) {
            return Poly::from_coeffs(spec.field(), c).expect("in range");
        }
    }
}

pub fn random_message(spec: &CodeSpec, rng: &mut impl Rng) -> Poly {
    let q = spec.field().size();
    let c = (0..spec.big_k()).map(|_| rng.gen_range(0..q)).collect();
    Poly::from_coeffs(spec.field(), c).expect("in range")
}

/// `y = c + e` for trial `trial_index`; returns `(y, e)`.
pub fn corrupt(
    spec: &CodeSpec,
    c: &Codeword,
    model: &ChannelModel,
    trial_index: u64,
) -> Result<(Codeword, Codeword)> {
    spec.check_word(c)?;
    model.check(spec)?;
    let mut rng = trial_rng(model.master_seed, trial_index);
    let e = random_error(spec, model, &mut rng);
    Ok((c.add(&e), e))
}

fn random_error(spec: &CodeSpec, model: &ChannelModel, rng: &mut impl Rng) -> Codeword {
    let mut e = spec.zero_word();
    for i in model.support(spec, rng) {
        e.symbols[i] = random_nonzero_residue(spec, spec.degrees()[i], rng);
    }
    e
}

/// A decoder under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecoderKind {
    Gcd(DecodeOptions),
    /// GCD decoding with the candidate-list fallback.
    List(DecodeOptions),
}

impl fmt::Display for DecoderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, o) = match self {
            DecoderKind::Gcd(o) => ("gcd", o),
            DecoderKind::List(o) => ("list", o),
        };
        write!(
            f,
            "{name}[{:?}/{:?}/{:?}]",
            o.algorithm, o.stopping, o.recovery
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimMode {
    /// Independent draws from the channel model.
    MonteCarlo { trials: u64 },
    /// Every nonzero error value on each listed support, against
    /// `messages` random messages.
    Exhaustive {
        supports: Vec<Vec<usize>>,
        messages: u64,
    },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub success: u64,
    pub failure: u64,
    pub miscorrect: u64,
}

impl Counts {
    pub fn total(&self) -> u64 {
        self.success + self.failure + self.miscorrect
    }

    fn merge(&mut self, other: &Counts) {
        self.success += other.success;
        self.failure += other.failure;
        self.miscorrect += other.miscorrect;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimReport {
    pub trials: u64,
    pub decoders: Vec<String>,
    /// Per decoder, in the order of `decoders`.
    pub totals: Vec<Counts>,
    /// Per error support, per decoder.
    pub by_support: BTreeMap<Vec<usize>, Vec<Counts>>,
}

impl SimReport {
    fn empty(decoders: &[DecoderKind]) -> SimReport {
        SimReport {
            trials: 0,
            decoders: decoders.iter().map(|d| d.to_string()).collect(),
            totals: vec![Counts::default(); decoders.len()],
            by_support: BTreeMap::new(),
        }
    }

    fn merge(mut self, other: SimReport) -> SimReport {
        self.trials += other.trials;
        for (a, b) in self.totals.iter_mut().zip(&other.totals) {
            a.merge(b);
        }
        for (k, v) in other.by_support {
            let entry = self
                .by_support
                .entry(k)
                .or_insert_with(|| vec![Counts::default(); v.len()]);
            for (a, b) in entry.iter_mut().zip(&v) {
                a.merge(b);
            }
        }
        self
    }
}

impl fmt::Display for SimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "trials: {}", self.trials)?;
        for (name, c) in self.decoders.iter().zip(&self.totals) {
            writeln!(
                f,
                "{name}: success {} failure {} miscorrect {}",
                c.success, c.failure, c.miscorrect
            )?;
        }
        for (support, counts) in &self.by_support {
            for (name, c) in self.decoders.iter().zip(counts) {
                writeln!(
                    f,
                    "support {support:?} {name}: success {} failure {} miscorrect {}",
                    c.success, c.failure, c.miscorrect
                )?;
            }
        }
        Ok(())
    }
}

struct Runner<'a> {
    spec: &'a CodeSpec,
    decoders: &'a [DecoderKind],
    candidates: Vec<Candidate>,
}

impl Runner<'_> {
    fn trial(&self, message: &Poly, e: &Codeword) -> SimReport {
        let y = self.spec.encode(message).expect("message fits").add(e);
        let mut report = SimReport::empty(self.decoders);
        report.trials = 1;
        let row: Vec<Counts> = self
            .decoders
            .iter()
            .map(|d| {
                let out = match d {
                    DecoderKind::Gcd(o) => decode(self.spec, &y, o),
                    DecoderKind::List(o) => list_decode(self.spec, &y, &self.candidates, o),
                }
                .expect("received word conforms to the spec");
                let mut c = Counts::default();
                match out.message() {
                    Some(m) if m == message => c.success = 1,
                    Some(_) => c.miscorrect = 1,
                    None => c.failure = 1,
                }
                c
            })
            .collect();
        report.totals = row.clone();
        report.by_support.insert(e.support(), row);
        report
    }
}

/// Run `decoders` against the channel and classify each trial as success,
/// failure or miscorrection.
pub fn simulate(
    spec: &CodeSpec,
    model: &ChannelModel,
    mode: &SimMode,
    decoders: &[DecoderKind],
) -> Result<SimReport> {
    for d in decoders {
        let (DecoderKind::Gcd(o) | DecoderKind::List(o)) = d;
        o.validate()?;
    }
    let needs_list = decoders.iter().any(|d| matches!(d, DecoderKind::List(_)));
    let runner = Runner {
        spec,
        decoders,
        candidates: if needs_list {
            build_candidate_list(spec, DEFAULT_CANDIDATE_CAP)?
        } else {
            Vec::new()
        },
    };
    let seed = model.master_seed;
    let empty = || SimReport::empty(decoders);

    match mode {
        SimMode::MonteCarlo { trials } => {
            model.check(spec)?;
            Ok((0..*trials)
                .into_par_iter()
                .map(|i| {
                    let mut rng = trial_rng(seed, i);
                    let message = random_message(spec, &mut rng);
                    let e = random_error(spec, model, &mut rng);
                    runner.trial(&message, &e)
                })
                .reduce(empty, SimReport::merge))
        }
        SimMode::Exhaustive { supports, messages } => {
            let q = spec.field().size() as u128;
            let mut per_support = Vec::new();
            let mut total: u128 = 0;
            for s in supports {
                ChannelModel {
                    kind: ChannelKind::FixedPositions(s.clone()),
                    master_seed: seed,
                }
                .check(spec)?;
                let mut values: u128 = 1;
                for &i in s {
                    let d = spec.degrees()[i] as u32;
                    let size = q.checked_pow(d).map(|v| v - 1);
                    values = size
                        .and_then(|v| values.checked_mul(v))
                        .unwrap_or(u128::MAX);
                }
                per_support.push(values);
                total = total.saturating_add(values.saturating_mul(*messages as u128));
            }
            if total > EXHAUSTIVE_TRIAL_CAP {
                return Err(Error::SearchSpaceTooLarge {
                    size: total,
                    cap: EXHAUSTIVE_TRIAL_CAP,
                });
            }
            let msgs: Vec<Poly> = (0..*messages)
                .map(|i| random_message(spec, &mut trial_rng(seed, i)))
                .collect();
            let mut report = empty();
            for (s, &values) in supports.iter().zip(&per_support) {
                let part = (0..values as u64)
                    .into_par_iter()
                    .map(|v| {
                        let e = error_at(spec, s, v);
                        msgs.iter()
                            .map(|m| runner.trial(m, &e))
                            .fold(empty(), SimReport::merge)
                    })
                    .reduce(empty, SimReport::merge);
                report = report.merge(part);
            }
            Ok(report)
        }
    }
}

/// The `index`-th error with nonzero symbols exactly at `support`, in
/// mixed-radix order over the nonzero residues of each position.
pub fn error_at(spec: &CodeSpec, support: &[usize], mut index: u64) -> Codeword {
    let q = spec.field().size() as u64;
    let mut e = spec.zero_word();
    for &i in support {
        let d = spec.degrees()[i] as u32;
        let radix = q.pow(d) - 1;
        let mut v = index % radix + 1;
        index /= radix;
        let coeffs = (0..d)
            .map(|_| {
                let c = (v % q) as u32;
                v /= q;
                c
            })
            .collect();
        e.symbols[i] = Poly::from_coeffs(spec.field(), coeffs).expect("in range");
    }
    e
}
