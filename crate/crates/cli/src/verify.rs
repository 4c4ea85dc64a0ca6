//! Batch verification sweeps, data-parallel over contiguous subranges.

use num_bigint::BigInt;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use phibase::reconstruct::{self, ParityHint};
use phibase::zeckendorf::{
    phi_sum_check, shift_expansion, shifted_fib_sum, shifted_lucas_sum, ZeckendorfRep,
};
use phibase::sequences::{fib, lucas};
use phibase::{IndexSet, PhiDigits};

use crate::reference;
use crate::report::{CheckRecord, PaperDiscrepancy, VerifyReport};

/// Shift window swept by the `prop1` suite.
pub const PROP1_SHIFTS: std::ops::RangeInclusive<i64> = -15..=15;

/// Sample count and seed for the `lemmas` suite; fixed so runs are
/// reproducible regardless of worker count.
pub const LEMMA_SAMPLES: usize = 10_000;
const LEMMA_SEED: u64 = 0x5eed_f1b5;
const LEMMA_MAX_SIZE: usize = 12;
const LEMMA_INDEX_RANGE: (i64, i64) = (-30, 30);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    /// Digit-string and Zeckendorf codecs invert exactly.
    Roundtrip,
    /// Reconstruction from the digits at indices ≥ 0.
    Thm1,
    /// Reconstruction from the fractional digits plus the parity hint.
    Thm2,
    /// The doubling identity 2N from the whole digit string.
    Corollary,
    /// The three equivalent readings of the shift-expansion offsets.
    Prop1,
    /// Exact sign predicates on randomized gap-valid index sets.
    Lemmas,
}

pub const ALL_SUITES: [Suite; 6] = [
    Suite::Roundtrip,
    Suite::Thm1,
    Suite::Thm2,
    Suite::Corollary,
    Suite::Prop1,
    Suite::Lemmas,
];

pub struct VerifyOptions {
    pub lo: u64,
    pub hi: u64,
    pub suites: Vec<Suite>,
    pub workers: usize,
}

/// Run the selected suites over [lo, hi]. Suites execute in canonical order
/// and each partitions its work into contiguous chunks merged back in order,
/// so the report is identical for any worker count.
pub fn run(opts: &VerifyOptions) -> VerifyReport {
    let workers = opts.workers.max(1);
    let mut checks = Vec::new();
    let mut discrepancies: Vec<PaperDiscrepancy> = Vec::new();
    for suite in ALL_SUITES {
        if !opts.suites.contains(&suite) {
            continue;
        }
        match suite {
            Suite::Roundtrip => {
                checks.extend(sweep_range(opts.lo, opts.hi, workers, roundtrip_checks));
                discrepancies.extend(reference::zeckendorf_row_discrepancies(opts.lo, opts.hi));
            }
            Suite::Thm1 => checks.extend(sweep_range(opts.lo, opts.hi, workers, thm1_checks)),
            Suite::Thm2 => checks.extend(sweep_range(opts.lo, opts.hi, workers, thm2_checks)),
            Suite::Corollary => {
                checks.extend(sweep_range(opts.lo, opts.hi, workers, corollary_checks))
            }
            Suite::Prop1 => {
                checks.extend(sweep_range(opts.lo, opts.hi, workers, prop1_checks));
                discrepancies.extend(reference::shift_row_discrepancies(opts.lo, opts.hi));
            }
            Suite::Lemmas => checks.extend(lemma_checks(workers)),
        }
    }
    VerifyReport::new((opts.lo, opts.hi), checks, discrepancies)
}

/// Apply `per_n` to every N in [lo, hi], chunked across `workers` threads
/// and merged in range order.
fn sweep_range(
    lo: u64,
    hi: u64,
    workers: usize,
    per_n: fn(u64) -> Vec<CheckRecord>,
) -> Vec<CheckRecord> {
    let len = hi - lo + 1;
    let chunk = len.div_ceil(workers as u64);
    let bounds: Vec<(u64, u64)> = (0..workers as u64)
        .map(|w| (lo + w * chunk, (lo + (w + 1) * chunk - 1).min(hi)))
        .filter(|(a, b)| a <= b)
        .collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(a, b)| scope.spawn(move || (a..=b).flat_map(per_n).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn roundtrip_checks(n: u64) -> Vec<CheckRecord> {
    let big = BigInt::from(n);
    let digits = PhiDigits::encode(&big).expect("n >= 1");
    let decoded = digits.decode_integer().expect("encodes decode");
    let zeck = ZeckendorfRep::encode(&big).expect("n >= 1").decode();
    vec![
        CheckRecord::new(n, "roundtrip", &decoded, &big, decoded == big),
        CheckRecord::new(n, "zeck_roundtrip", &zeck, &big, zeck == big),
    ]
}

fn thm1_checks(n: u64) -> Vec<CheckRecord> {
    let big = BigInt::from(n);
    let split = PhiDigits::encode(&big).expect("n >= 1").split();
    let value = reconstruct::from_positive(&split.beta_plus, split.d0).expect("valid split");
    vec![CheckRecord::new(n, "thm1", &value, &big, value == big)]
}

fn thm2_checks(n: u64) -> Vec<CheckRecord> {
    let big = BigInt::from(n);
    let digits = PhiDigits::encode(&big).expect("n >= 1");
    let split = digits.split();
    let hint = ParityHint::of(digits.first_positive_index());
    let value =
        reconstruct::from_negative(&split.beta_minus, split.d0, hint).expect("valid split");
    vec![CheckRecord::new(n, "thm2", &value, &big, value == big)]
}

fn corollary_checks(n: u64) -> Vec<CheckRecord> {
    let big = BigInt::from(n);
    let report = reconstruct::theorem_consistency(&big).expect("n >= 1");
    let double = &big * 2;
    let sum = &report.from_positive + &report.from_negative;
    vec![
        CheckRecord::new(n, "corollary", &report.doubled, &double, report.doubled == double),
        CheckRecord::new(n, "corollary_sum", &sum, &report.doubled, sum == report.doubled),
    ]
}

fn prop1_checks(n: u64) -> Vec<CheckRecord> {
    let big = BigInt::from(n);
    let idx = shift_expansion(&big).expect("n >= 1");
    let mut out = Vec::with_capacity(2 * 31 + 1);
    let phi_total = idx.phi_sum();
    out.push(CheckRecord::new(
        n,
        "phi_sum",
        &phi_total,
        &big,
        phi_sum_check(&idx, &big),
    ));
    for shift in PROP1_SHIFTS {
        let lhs = &big * fib(shift);
        let rhs = shifted_fib_sum(&idx, shift);
        out.push(CheckRecord::new(n, format!("nf_identity[n={shift}]"), &lhs, &rhs, lhs == rhs));
        let lhs = &big * lucas(shift);
        let rhs = shifted_lucas_sum(&idx, shift);
        out.push(CheckRecord::new(n, format!("nl_identity[n={shift}]"), &lhs, &rhs, lhs == rhs));
    }
    out
}

/// Deterministic sample of gap-valid index sets, shared by every run.
pub fn lemma_sample_sets() -> Vec<IndexSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(LEMMA_SEED);
    let (lo, hi) = LEMMA_INDEX_RANGE;
    (0..LEMMA_SAMPLES).map(|_| IndexSet::sample(&mut rng, LEMMA_MAX_SIZE, lo, hi)).collect()
}

fn lemma_checks(workers: usize) -> Vec<CheckRecord> {
    let sets = lemma_sample_sets();
    let chunk = sets.len().div_ceil(workers);
    std::thread::scope(|scope| {
        let handles: Vec<_> = sets
            .chunks(chunk)
            .enumerate()
            .map(|(w, slice)| {
                scope.spawn(move || {
                    slice
                        .iter()
                        .enumerate()
                        .flat_map(|(j, idx)| lemma_checks_for((w * chunk + j) as u64, idx))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

fn lemma_checks_for(sample: u64, idx: &IndexSet) -> Vec<CheckRecord> {
    let rendered = format!(
        "{{{}}}",
        idx.exponents().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")
    );
    let below = reconstruct::lemma1_check(idx).expect("nonempty");
    let sign = reconstruct::lemma2_sign(idx).expect("nonempty");
    let expected = if idx.max().expect("nonempty") % 2 == 0 { 1 } else { -1 };
    vec![
        CheckRecord::new(sample, format!("lemma1[{rendered}]"), below, true, below),
        CheckRecord::new(
            sample,
            format!("lemma2[{rendered}]"),
            sign,
            expected,
            sign == expected,
        ),
    ]
}
