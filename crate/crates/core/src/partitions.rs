//! Integer partitions and conjugacy classes of Sₙ.
//!
//! Partitions are listed in reverse-lexicographic order (largest first part
//! first), so the partitions of 6 come out as
//! `6; 5,1; 4,2; 4,1,1; 3,3; 3,2,1; 3,1,1,1; 2,2,2; 2,2,1,1; 2,1,1,1,1; 1,1,1,1,1,1`.
//! A partition of n read as a list of cycle lengths is a cycle type of Sₙ, so
//! the classes of Sₙ are indexed by the partitions of n.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::perm::CycleType;

/// Default bound on the `N` for which partition lists are materialized.
pub const DEFAULT_PARTITION_CEILING: usize = 64;

/// Non-increasing positive parts. The empty partition is the sole partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not non-increasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The cycle type whose cycle lengths are these parts. `None` for the
    /// empty partition, since S₀ is not modelled.
    pub fn cycle_type(&self) -> Option<CycleType> {
        CycleType::from_cycle_lengths(&self.parts).ok()
    }
}

impl fmt::Display for Partition {
    /// `3,2,1`; the empty partition prints as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

/// Streams the partitions of `n` in reverse-lexicographic order.
pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: if n == 0 { Some(Vec::new()) } else { Some(vec![n]) },
    }
}

#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // Split off the trailing 1s, lower the last part above 1, then refill
        // greedily with copies of the lowered value.
        let ones = next.iter().rev().take_while(|&&p| p == 1).count();
        next.truncate(next.len() - ones);
        if let Some(last) = next.pop() {
            let v = last - 1;
            let mut rest = ones + last;
            while rest > 0 {
                let take = v.min(rest);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(Partition { parts: out })
    }
}

/// Streams the partitions of `n` into exactly `k` parts, reverse-lexicographic.
pub fn partitions_into(n: usize, k: usize) -> PartitionsInto {
    let first = if k == 0 {
        (n == 0).then(Vec::new)
    } else if k <= n {
        let mut v = vec![1; k];
        v[0] = n - k + 1;
        Some(v)
    } else {
        None
    };
    PartitionsInto { current: first }
}

#[derive(Clone, Debug)]
pub struct PartitionsInto {
    current: Option<Vec<usize>>,
}

impl Iterator for PartitionsInto {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        let k = out.len();
        // Find the rightmost position whose part can drop by one while the
        // suffix is refilled with parts in 1..=new value.
        let mut suffix = out.last().copied().unwrap_or(0);
        for j in (0..k.saturating_sub(1)).rev() {
            suffix += out[j];
            let v = out[j] - 1;
            let slots = k - j - 1;
            let rem = suffix - v;
            if v >= 1 && rem >= slots && rem <= slots * v {
                let mut next = out[..j].to_vec();
                next.push(v);
                let mut left = rem;
                for s in (0..slots).rev() {
                    let take = v.min(left - s);
                    next.push(take);
                    left -= take;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(Partition { parts: out })
    }
}

/// All partitions of `n`, refusing `n` above [`DEFAULT_PARTITION_CEILING`].
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    enumerate_partitions_with_ceiling(n, DEFAULT_PARTITION_CEILING)
}

pub fn enumerate_partitions_with_ceiling(n: usize, ceiling: usize) -> Result<Vec<Partition>> {
    if n > ceiling {
        return Err(Error::EnumerationTooLarge {
            what: "partition list",
            size: n,
            ceiling,
        });
    }
    Ok(partitions(n).collect())
}

/// p(n), by Euler's pentagonal-number recurrence
/// `p(m) = Σ_{k≥1} (-1)^{k+1} [p(m - k(3k-1)/2) + p(m - k(3k+1)/2)]`.
pub fn count_partitions(n: usize) -> BigUint {
    let mut table: Vec<BigInt> = Vec::with_capacity(n + 1);
    table.push(BigInt::one());
    for m in 1..=n {
        let mut sum = BigInt::zero();
        for k in 1usize.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = table[m - g1].clone();
            if g2 <= m {
                term += &table[m - g2];
            }
            if k % 2 == 1 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        table.push(sum);
    }
    let (sign, mag) = table.swap_remove(n).into_parts();
    debug_assert_ne!(sign, Sign::Minus);
    mag
}

/// Partitions of `n` into exactly two parts: `n/2` for even `n`,
/// `(n - 1)/2` for odd `n`, and 0 below 2.
pub fn two_part_count(n: u64) -> u64 {
    if n < 2 {
        0
    } else if n.is_multiple_of(2) {
        n / 2
    } else {
        (n - 1) / 2
    }
}

/// A conjugacy class of Sₙ together with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassOrder {
    pub cycle_type: CycleType,
    pub order: BigUint,
}

impl ClassOrder {
    pub fn degree(&self) -> usize {
        self.cycle_type.degree()
    }
}

/// Cauchy's formula `n! / Π i^{αᵢ} αᵢ!`.
pub fn class_order(t: &CycleType) -> ClassOrder {
    ClassOrder {
        cycle_type: t.clone(),
        order: factorial(t.degree()) / cauchy_denominator(t),
    }
}

/// Raw entry point: validates `Σ i·αᵢ = n` first.
pub fn class_order_of(degree: usize, alpha: &[usize]) -> Result<ClassOrder> {
    Ok(class_order(&CycleType::new(degree, alpha)?))
}

/// `Π i^{αᵢ} αᵢ!`, the order of the centralizer of any element of the class.
pub fn cauchy_denominator(t: &CycleType) -> BigUint {
    t.alpha().iter().enumerate().fold(BigUint::one(), |acc, (i, &a)| {
        acc * BigUint::from(i + 1).pow(a as u32) * factorial(a)
    })
}

/// One cycle type per partition of `n`, in the partition order.
pub fn cycle_types_of(n: usize) -> Result<Vec<CycleType>> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    Ok(enumerate_partitions(n)?
        .into_iter()
        .filter_map(|p| p.cycle_type())
        .collect())
}
