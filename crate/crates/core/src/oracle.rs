//! Brute-force ground truth.
//!
//! Every count here comes from generating the objects and filtering them.
//! Nothing in this module evaluates a closed form; the closed forms under
//! test are passed in through [`ClosedForms`] so that a deliberately broken
//! one can be swapped in and must be caught.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::caput::{CaputSpec, HeadMode};
use crate::error::{Error, Result};
use crate::perm::{CycleType, Permutation};
use crate::{caput, partitions, problems};

/// Largest degree [`enumerate_sn`] will walk.
pub const SN_CEILING: usize = 9;

/// Degrees above this get sampled heads instead of every subset.
pub const EXHAUSTIVE_HEAD_DEGREE: usize = 6;
pub const SAMPLED_HEADS: usize = 200;
pub const HEAD_SAMPLE_SEED: u64 = 1666;

/// Streams Sₙ in lexicographic order of one-line form.
pub fn enumerate_sn(n: usize) -> Result<SymmetricGroup> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    if n > SN_CEILING {
        return Err(Error::EnumerationTooLarge {
            what: "symmetric group",
            size: n,
            ceiling: SN_CEILING,
        });
    }
    Ok(SymmetricGroup {
        next: Some((0..n).collect()),
    })
}

#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    next: Option<Vec<usize>>,
}

impl Iterator for SymmetricGroup {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_zero_based_unchecked(cur))
    }
}

/// Classic in-place successor; false once `v` is the last permutation.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap_or(i);
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn for_each_perm(n: usize, mut f: impl FnMut(&[usize])) {
    let mut v: Vec<usize> = (0..n).collect();
    loop {
        f(&v);
        if !next_permutation(&mut v) {
            break;
        }
    }
}

// alpha[i] = number of (i+1)-cycles, by walking orbits
fn orbit_lengths(p: &[usize]) -> Vec<usize> {
    let mut alpha = vec![0; p.len()];
    let mut seen = vec![false; p.len()];
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            alpha[len - 1] += 1;
        }
    }
    alpha
}

/// The closed forms a verification run checks.
#[derive(Clone, Copy)]
pub struct ClosedForms {
    pub class_order: fn(&CycleType) -> BigUint,
    pub count_caput: fn(&CaputSpec) -> BigUint,
    pub derangements: fn(usize) -> BigUint,
    pub vicinity_variations: fn(usize) -> BigUint,
    pub vicinity_class_count: fn(usize) -> BigUint,
    pub complexions: fn(usize, usize) -> BigUint,
    pub simpliciter: fn(usize) -> BigUint,
    pub count_partitions: fn(usize) -> BigUint,
    pub partition_list_len: fn(usize) -> BigUint,
    pub two_part_count: fn(u64) -> u64,
}

impl Default for ClosedForms {
    fn default() -> Self {
        ClosedForms {
            class_order: |t| partitions::class_order(t).order,
            count_caput: caput::count_caput,
            derangements: caput::derangements,
            vicinity_variations: |n| problems::vicinity_variations(n).unwrap_or_default(),
            vicinity_class_count: |n| {
                problems::vicinity_classes(n)
                    .map(|it| BigUint::from(it.count()))
                    .unwrap_or_default()
            },
            complexions: problems::complexions,
            simpliciter: |n| problems::complexiones_simpliciter(n, false),
            count_partitions: partitions::count_partitions,
            partition_list_len: |n| {
                partitions::enumerate_partitions(n)
                    .map(|v| BigUint::from(v.len()))
                    .unwrap_or_default()
            },
            two_part_count: partitions::two_part_count,
        }
    }
}

/// Faults that can be injected to show the oracle notices them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Drops the `αᵢ!` factors from the Cauchy denominator.
    CauchyDenominator,
}

impl ClosedForms {
    pub fn with_fault(fault: Fault) -> Self {
        match fault {
            Fault::CauchyDenominator => ClosedForms {
                class_order: corrupted_class_order,
                ..ClosedForms::default()
            },
        }
    }
}

/// `n! / Π i^{αᵢ}`, the class order with the `αᵢ!` factors missing.
pub fn corrupted_class_order(t: &CycleType) -> BigUint {
    let denom = t.alpha().iter().enumerate().fold(BigUint::from(1u32), |acc, (i, &a)| {
        acc * BigUint::from(i + 1).pow(a as u32)
    });
    crate::arith::factorial(t.degree()) / denom
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub claim: &'static str,
    /// Inclusive range of sizes tested; `None` when the run was empty.
    pub n_range: Option<(usize, usize)>,
    pub cases: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let range = match self.n_range {
            Some((lo, hi)) => format!("{lo}..={hi}"),
            None => "-".into(),
        };
        write!(
            f,
            "{:<22} {:<8} {:>8} cases  {:?}",
            self.claim, range, self.cases, self.verdict
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "  counterexample: {c}")?;
        }
        Ok(())
    }
}

// Accumulates cases and the first mismatch.
struct Tally {
    claim: &'static str,
    range: Option<(usize, usize)>,
    cases: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(claim: &'static str, lo: usize, hi: usize) -> Self {
        Tally {
            claim,
            range: (lo <= hi).then_some((lo, hi)),
            cases: 0,
            counterexample: None,
        }
    }

    fn check<T: PartialEq + fmt::Display>(&mut self, what: impl FnOnce() -> String, closed: T, brute: T) {
        self.cases += 1;
        if closed != brute && self.counterexample.is_none() {
            self.counterexample = Some(format!("{}: closed form {closed}, enumeration {brute}", what()));
        }
    }

    fn finish(self) -> OracleReport {
        OracleReport {
            claim: self.claim,
            n_range: self.range,
            cases: self.cases,
            verdict: if self.counterexample.is_some() {
                Verdict::Fail
            } else {
                Verdict::Pass
            },
            counterexample: self.counterexample,
        }
    }
}

type Suite = fn(usize, &ClosedForms) -> OracleReport;

// Registration order fixes report order.
const SUITES: [Suite; 9] = [
    cauchy_class_order,
    class_equation,
    caput_all_modes,
    derangement_counts,
    vicinity_counts,
    complexion_counts,
    simpliciter_counts,
    partition_counts,
    two_part_counts,
];

/// Runs every registered comparison up to degree `max_n` (permutation
/// suites stop at [`SN_CEILING`]). Deterministic; suites run on separate
/// threads but reports come back in registration order.
pub fn verify_all(max_n: usize) -> Vec<OracleReport> {
    verify_with(max_n, &ClosedForms::default())
}

pub fn verify_with(max_n: usize, forms: &ClosedForms) -> Vec<OracleReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = SUITES
            .iter()
            .map(|suite| s.spawn(move || suite(max_n, forms)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle suite panicked"))
            .collect()
    })
}

fn perm_degrees(max_n: usize) -> (usize, usize) {
    (1, max_n.min(SN_CEILING))
}

// Partition suites run over 0..=2·max_n, empty when max_n = 0.
fn partition_sizes(max_n: usize) -> (usize, usize) {
    if max_n == 0 {
        (1, 0)
    } else {
        (0, 2 * max_n)
    }
}

fn cycle_type_tally(n: usize) -> HashMap<Vec<usize>, u64> {
    let mut tally = HashMap::new();
    for_each_perm(n, |p| *tally.entry(orbit_lengths(p)).or_insert(0) += 1);
    tally
}

fn cauchy_class_order(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = perm_degrees(max_n);
    let mut t = Tally::new("cauchy-class-order", lo, hi);
    for n in lo..=hi {
        let tally = cycle_type_tally(n);
        let types = partitions::cycle_types_of(n).unwrap_or_default();
        t.check(|| format!("number of classes of S{n}"), types.len(), tally.len());
        for ty in types {
            let brute = tally.get(ty.alpha()).copied().unwrap_or(0);
            t.check(
                || format!("cycle type {ty} (n={n})"),
                (f.class_order)(&ty),
                BigUint::from(brute),
            );
        }
    }
    t.finish()
}

fn class_equation(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = perm_degrees(max_n);
    let mut t = Tally::new("class-equation", lo, hi);
    for n in lo..=hi {
        let sum: BigUint = partitions::cycle_types_of(n)
            .unwrap_or_default()
            .iter()
            .map(|ty| (f.class_order)(ty))
            .sum();
        let mut order = 0u64;
        for_each_perm(n, |_| order += 1);
        t.check(|| format!("sum of class orders of S{n}"), sum, BigUint::from(order));
    }
    t.finish()
}

/// Head subsets checked at degree `n`, as bitmasks over positions.
pub fn head_subsets(n: usize) -> Vec<u32> {
    if n <= EXHAUSTIVE_HEAD_DEGREE {
        return (0..1u32 << n).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(HEAD_SAMPLE_SEED ^ n as u64);
    let total = 1usize << n;
    let mut picked: Vec<u32> = sample(&mut rng, total, SAMPLED_HEADS.min(total))
        .into_iter()
        .map(|i| i as u32)
        .collect();
    picked.sort_unstable();
    picked
}

fn caput_all_modes(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = perm_degrees(max_n.min(8));
    let mut t = Tally::new("caput-loose-exact-set", lo, hi);
    for n in lo..=hi {
        let heads = head_subsets(n);
        // [loose, exact, setwise] per head
        let mut counts = vec![[0u64; 3]; heads.len()];
        for_each_perm(n, |p| {
            let fixed: u32 = (0..n).filter(|&i| p[i] == i).fold(0, |m, i| m | 1 << i);
            for (c, &h) in counts.iter_mut().zip(&heads) {
                if fixed & h == h {
                    c[0] += 1;
                }
                if fixed == h {
                    c[1] += 1;
                }
                if (0..n).filter(|i| h >> i & 1 == 1).all(|i| h >> p[i] & 1 == 1) {
                    c[2] += 1;
                }
            }
        });
        for (&h, c) in heads.iter().zip(&counts) {
            let positions: Vec<usize> = (0..n).filter(|i| h >> i & 1 == 1).map(|i| i + 1).collect();
            for (mode, &brute) in HeadMode::ALL.iter().zip(c) {
                let spec = CaputSpec::fixing(n, positions.iter().copied(), *mode).expect("positions lie in 1..=n");
                t.check(|| spec.to_string(), (f.count_caput)(&spec), BigUint::from(brute));
            }
        }
    }
    t.finish()
}

fn derangement_counts(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = perm_degrees(max_n);
    let mut t = Tally::new("derangements", lo, hi);
    for n in lo..=hi {
        let mut count = 0u64;
        for_each_perm(n, |p| {
            if p.iter().enumerate().all(|(i, &v)| i != v) {
                count += 1;
            }
        });
        t.check(|| format!("D({n})"), (f.derangements)(n), BigUint::from(count));
    }
    t.finish()
}

fn vicinity_counts(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = perm_degrees(max_n.min(8));
    let mut t = Tally::new("vicinity-classes", lo, hi);
    for n in lo..=hi {
        let mut classes: HashSet<Vec<usize>> = HashSet::new();
        for_each_perm(n, |p| {
            let least = (0..n)
                .map(|r| p[r..].iter().chain(&p[..r]).copied().collect::<Vec<_>>())
                .min()
                .unwrap_or_default();
            classes.insert(least);
        });
        let brute = BigUint::from(classes.len());
        t.check(
            || format!("rotation classes, n={n}"),
            (f.vicinity_variations)(n),
            brute.clone(),
        );
        t.check(
            || format!("class representatives, n={n}"),
            (f.vicinity_class_count)(n),
            brute.clone(),
        );
        let mut alpha = vec![0; n];
        alpha[n - 1] = 1;
        let single_cycle = CycleType::new(n, &alpha).expect("one n-cycle");
        t.check(
            || format!("order of class {single_cycle}"),
            (f.class_order)(&single_cycle),
            brute,
        );
    }
    t.finish()
}

fn complexion_counts(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = (1, max_n.min(20));
    let mut t = Tally::new("complexions", lo, hi);
    for n in lo..=hi {
        let mut by_size = vec![0u64; n + 1];
        for m in 0..1u32 << n {
            by_size[m.count_ones() as usize] += 1;
        }
        for (k, &c) in by_size.iter().enumerate() {
            t.check(|| format!("C({n},{k})"), (f.complexions)(n, k), BigUint::from(c));
        }
    }
    t.finish()
}

fn simpliciter_counts(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = (1, max_n.min(20));
    let mut t = Tally::new("complexio-simpliciter", lo, hi);
    for n in lo..=hi {
        let nonempty = (0..1u32 << n).filter(|&m| m != 0).count();
        t.check(
            || format!("non-empty subsets of {n}"),
            (f.simpliciter)(n),
            BigUint::from(nonempty),
        );
    }
    t.finish()
}

// Non-increasing compositions of `total`, found by walking all 2^(total-1)
// compositions (bit i set = cut after position i).
fn brute_partitions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for cuts in 0..1u64 << (total - 1) {
        let mut parts = Vec::new();
        let mut run = 1;
        for i in 0..total - 1 {
            if cuts >> i & 1 == 1 {
                parts.push(run);
                run = 1;
            } else {
                run += 1;
            }
        }
        parts.push(run);
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            out.push(parts);
        }
    }
    out
}

fn partition_counts(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = partition_sizes(max_n.min(12));
    let mut t = Tally::new("partition-count", lo, hi);
    for n in lo..=hi {
        let brute = BigUint::from(brute_partitions(n).len());
        t.check(|| format!("p({n})"), (f.count_partitions)(n), brute.clone());
        t.check(|| format!("listed partitions of {n}"), (f.partition_list_len)(n), brute);
    }
    t.finish()
}

fn two_part_counts(max_n: usize, f: &ClosedForms) -> OracleReport {
    let (lo, hi) = partition_sizes(max_n);
    let mut t = Tally::new("two-part-count", lo.max(2), hi);
    if hi >= 2 {
        for n in 2..=hi {
            let pairs = (1..n).filter(|&b| n - b >= b).count() as u64;
            t.check(
                || format!("two-part partitions of {n}"),
                (f.two_part_count)(n as u64),
                pairs,
            );
        }
    }
    t.finish()
}
