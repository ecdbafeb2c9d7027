//! Consanguinity-tree counts and coordinates.
//!
//! At degree (gradus) `n` there are `N = n + 1` kinship ranks (cognationes) and
//! `2ⁿ · N` persons. Each person sits at an ordered pair
//! `(antecedens, sequens)`.
//!
//! The point layout is a reconstruction (`reconstructed-v1`): `antecedens`
//! ranges over `0..2ⁿ` and encodes the ancestral path as a bit string, and
//! `sequens` ranges over `0..=n` and is the rank index. Pairs are listed in
//! lexicographic order.

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::pow2;
use crate::error::{Error, Result};
use crate::partitions::two_part_count;

pub const LAYOUT: &str = "reconstructed-v1";

/// Largest degree for which [`coordinates`] materializes its list.
pub const MAX_COORDINATE_GRADUS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TreeCoordinate {
    pub antecedens: u32,
    pub sequens: u32,
}

impl TreeCoordinate {
    pub fn new(antecedens: u32, sequens: u32) -> Self {
        TreeCoordinate { antecedens, sequens }
    }

    pub fn swapped(self) -> Self {
        TreeCoordinate::new(self.sequens, self.antecedens)
    }
}

impl Serialize for TreeCoordinate {
    /// `[a, s]`
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.antecedens, self.sequens].serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GradusModel {
    pub gradus: usize,
    pub cognationes: usize,
}

impl GradusModel {
    pub fn new(gradus: usize) -> Self {
        GradusModel {
            gradus,
            cognationes: gradus + 1,
        }
    }

    pub fn personae(&self) -> BigUint {
        personae_count(self.gradus)
    }
}

/// `2ⁿ · (n + 1)`
pub fn personae_count(gradus: usize) -> BigUint {
    pow2(gradus) * (gradus + 1)
}

/// Partitions of the rank count `N` into two parts; shares
/// [`two_part_count`] with the partitions module.
pub fn discerptiones_two(cognationes: u64) -> u64 {
    two_part_count(cognationes)
}

/// Every point at degree `gradus`, in lexicographic order.
pub fn coordinates(gradus: usize) -> Result<Vec<TreeCoordinate>> {
    Ok(coordinate_iter(gradus)?.collect())
}

pub fn coordinate_iter(gradus: usize) -> Result<impl Iterator<Item = TreeCoordinate>> {
    if gradus > MAX_COORDINATE_GRADUS {
        return Err(Error::EnumerationTooLarge {
            what: "coordinate list",
            size: gradus,
            ceiling: MAX_COORDINATE_GRADUS,
        });
    }
    let paths = 1u32 << gradus;
    let ranks = gradus as u32;
    Ok((0..paths).flat_map(move |a| (0..=ranks).map(move |s| TreeCoordinate::new(a, s))))
}
