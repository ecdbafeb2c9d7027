//! Fixed heads ("caput") of permutations.
//!
//! A head is a set of positions, each with a required occupant. Arrangements
//! are read against the reference arrangement `1, 2, …, n` (letters `a, b, …`),
//! so the head `1=a` asks for `a` to stay in first place. Three regimes:
//!
//! * [`HeadMode::Loose`]: every head position holds its occupant, the rest is free;
//! * [`HeadMode::Exact`]: as loose, and no position outside the head keeps its
//!   reference occupant;
//! * [`HeadMode::Setwise`]: the head positions hold the head's occupants in any order.
//!
//! Writing `k` for the head size, `r = n - k` for the free positions and `m`
//! for the free positions whose own reference occupant is also free, the
//! counts are `r!`, `Σ_j (-1)^j C(m, j) (r - j)!` and `k!·r!`. When every head
//! occupant is its own position's reference occupant, `m = r` and the exact
//! count is the derangement number `D(n - k)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{binomial, factorial};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default bound on the degree for which heads are enumerated.
pub const DEFAULT_CAPUT_CEILING: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum HeadMode {
    Loose,
    Exact,
    Setwise,
}

impl HeadMode {
    pub const ALL: [HeadMode; 3] = [HeadMode::Loose, HeadMode::Exact, HeadMode::Setwise];

    pub fn as_str(self) -> &'static str {
        match self {
            HeadMode::Loose => "loose",
            HeadMode::Exact => "exact",
            HeadMode::Setwise => "setwise",
        }
    }
}

impl fmt::Display for HeadMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HeadMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "loose" => Ok(HeadMode::Loose),
            "exact" => Ok(HeadMode::Exact),
            "setwise" => Ok(HeadMode::Setwise),
            _ => Err(Error::parse(s, "mode must be loose, exact or setwise")),
        }
    }
}

/// Positions with required occupants over the ground set `{1, …, n}`.
/// Occupants are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Head {
    degree: usize,
    slots: BTreeMap<usize, usize>,
}

impl Head {
    pub fn new(degree: usize, slots: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut used = BTreeSet::new();
        for (pos, occ) in slots {
            for (what, v) in [("position", pos), ("occupant", occ)] {
                if v == 0 || v > degree {
                    return Err(Error::InvalidHead(format!("{what} {v} is outside 1..={degree}")));
                }
            }
            if !used.insert(occ) {
                return Err(Error::InvalidHead(format!(
                    "occupant {} is required twice",
                    symbol(occ)
                )));
            }
            if map.insert(pos, occ).is_some() {
                return Err(Error::InvalidHead(format!("position {pos} is constrained twice")));
            }
        }
        Ok(Head { degree, slots: map })
    }

    /// Each listed position keeps its reference occupant.
    pub fn fixing_positions(degree: usize, positions: impl IntoIterator<Item = usize>) -> Result<Self> {
        Head::new(degree, positions.into_iter().map(|p| (p, p)))
    }

    /// Fixes each symbol where it stands in the reference arrangement.
    pub fn fixing_symbols(degree: usize, symbols: &[&str]) -> Result<Self> {
        let pts = symbols.iter().map(|s| parse_symbol(s)).collect::<Result<Vec<_>>>()?;
        Head::fixing_positions(degree, pts)
    }

    /// The empty head.
    pub fn empty(degree: usize) -> Self {
        Head {
            degree,
            slots: BTreeMap::new(),
        }
    }

    /// Parses `1=a,3=c`; occupants are letters (`a` = 1) or numbers.
    /// An empty string is the empty head.
    pub fn parse(degree: usize, s: &str) -> Result<Self> {
        let mut slots = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (pos, occ) = item
                .split_once('=')
                .ok_or_else(|| Error::parse(s, format!("{item:?} is not position=symbol")))?;
            let pos = pos
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::parse(s, format!("position {pos:?}: {e}")))?;
            slots.push((pos, parse_symbol(occ.trim())?));
        }
        Head::new(degree, slots)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    /// A head holding exactly one thing.
    pub fn is_monadic(&self) -> bool {
        self.slots.len() == 1
    }

    pub fn slots(&self) -> &BTreeMap<usize, usize> {
        &self.slots
    }

    pub fn occupant(&self, position: usize) -> Option<usize> {
        self.slots.get(&position).copied()
    }

    /// True when every head position holds its own reference occupant.
    pub fn is_pointwise(&self) -> bool {
        self.slots.iter().all(|(p, o)| p == o)
    }
}

impl fmt::Display for Head {
    /// `1=a,3=c`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.slots.iter().map(|(p, o)| format!("{p}={}", symbol(*o))).collect();
        f.write_str(&items.join(","))
    }
}

impl Serialize for Head {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Letter for points up to 26, decimal beyond.
pub fn symbol(point: usize) -> String {
    if (1..=26).contains(&point) {
        ((b'a' + (point - 1) as u8) as char).to_string()
    } else {
        point.to_string()
    }
}

pub fn parse_symbol(s: &str) -> Result<usize> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) if c.is_ascii_lowercase() => Ok((c as u8 - b'a') as usize + 1),
        _ => s
            .parse::<usize>()
            .map_err(|_| Error::parse(s, "symbol must be a letter a-z or a positive number")),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CaputSpec {
    degree: usize,
    head: Head,
    mode: HeadMode,
}

impl CaputSpec {
    pub fn new(head: Head, mode: HeadMode) -> Result<Self> {
        if head.degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        Ok(CaputSpec {
            degree: head.degree,
            head,
            mode,
        })
    }

    /// Pointwise head on `positions`.
    pub fn fixing(degree: usize, positions: impl IntoIterator<Item = usize>, mode: HeadMode) -> Result<Self> {
        CaputSpec::new(Head::fixing_positions(degree, positions)?, mode)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn head(&self) -> &Head {
        &self.head
    }

    pub fn mode(&self) -> HeadMode {
        self.mode
    }

    /// Whether `p` satisfies the head under this mode.
    pub fn admits(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        match self.mode {
            HeadMode::Loose => self.head.slots.iter().all(|(&pos, &occ)| p.apply(pos) == occ),
            HeadMode::Exact => (1..=self.degree).all(|i| match self.head.occupant(i) {
                Some(occ) => p.apply(i) == occ,
                None => p.apply(i) != i,
            }),
            HeadMode::Setwise => {
                let want: BTreeSet<usize> = self.head.slots.values().copied().collect();
                self.head.slots.keys().all(|&pos| want.contains(&p.apply(pos)))
            }
        }
    }

    // (free positions, free positions whose own occupant is also free)
    fn free_counts(&self) -> (usize, usize) {
        let used: BTreeSet<usize> = self.head.slots.values().copied().collect();
        let free = self.degree - self.head.len();
        let self_free = (1..=self.degree)
            .filter(|i| !self.head.slots.contains_key(i) && !used.contains(i))
            .count();
        (free, self_free)
    }
}

impl fmt::Display for CaputSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} head={{{}}} mode={}", self.degree, self.head, self.mode)
    }
}

/// Number of permutations satisfying `spec`.
pub fn count_caput(spec: &CaputSpec) -> BigUint {
    let k = spec.head.len();
    let (free, self_free) = spec.free_counts();
    match spec.mode {
        HeadMode::Loose => factorial(free),
        HeadMode::Setwise => factorial(k) * factorial(free),
        HeadMode::Exact if self_free == free => derangements(free),
        HeadMode::Exact => forbidden_fixed_count(free, self_free),
    }
}

// Bijections of `free` positions onto `free` occupants that avoid `m` given
// position/occupant coincidences, by inclusion-exclusion.
fn forbidden_fixed_count(free: usize, m: usize) -> BigUint {
    let mut total = BigInt::zero();
    for j in 0..=m {
        let term = BigInt::from(binomial(m, j) * factorial(free - j));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    debug_assert!(!total.is_negative());
    total.magnitude().clone()
}

/// D(m): permutations of m points without fixed points.
/// D(0) = 1, D(1) = 0, D(m) = (m - 1)(D(m - 1) + D(m - 2)).
pub fn derangements(m: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::zero());
    if m == 0 {
        return prev;
    }
    for i in 2..=m {
        let next = (&prev + &cur) * (i - 1);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// D(m) by inclusion-exclusion, `Σ_j (-1)^j m!/j!`.
pub fn derangements_inclusion_exclusion(m: usize) -> BigUint {
    forbidden_fixed_count(m, m)
}

/// Streams the permutations satisfying `spec` in lexicographic order of
/// their one-line form, refusing degrees above [`DEFAULT_CAPUT_CEILING`].
pub fn enumerate_caput(spec: &CaputSpec) -> Result<CaputIter> {
    enumerate_caput_with_ceiling(spec, DEFAULT_CAPUT_CEILING)
}

pub fn enumerate_caput_with_ceiling(spec: &CaputSpec, ceiling: usize) -> Result<CaputIter> {
    if spec.degree > ceiling {
        return Err(Error::EnumerationTooLarge {
            what: "caput enumeration",
            size: spec.degree,
            ceiling,
        });
    }
    Ok(CaputIter::new(spec))
}

/// Depth-first, smallest value first; memory is O(n).
#[derive(Clone, Debug)]
pub struct CaputIter {
    n: usize,
    // allowed[pos] lists the 0-based values position `pos` may take, ascending
    allowed: Vec<Vec<usize>>,
    image: Vec<usize>,
    // index into allowed[pos] to try next
    cursor: Vec<usize>,
    used: Vec<bool>,
    depth: usize,
    done: bool,
}

impl CaputIter {
    fn new(spec: &CaputSpec) -> Self {
        let n = spec.degree;
        let head = &spec.head;
        let head_occ: BTreeSet<usize> = head.slots.values().map(|o| o - 1).collect();
        let allowed = (0..n)
            .map(|pos| match (head.occupant(pos + 1), spec.mode) {
                (Some(occ), HeadMode::Loose | HeadMode::Exact) => vec![occ - 1],
                (Some(_), HeadMode::Setwise) => head_occ.iter().copied().collect(),
                (None, mode) => (0..n)
                    .filter(|v| !head_occ.contains(v))
                    .filter(|&v| mode != HeadMode::Exact || v != pos)
                    .collect(),
            })
            .collect();
        CaputIter {
            n,
            allowed,
            image: vec![0; n],
            cursor: vec![0; n],
            used: vec![false; n],
            depth: 0,
            done: false,
        }
    }
}

impl Iterator for CaputIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        // Resume: after a yield every position is placed; release the last one.
        if self.depth == self.n {
            self.depth -= 1;
            self.used[self.image[self.depth]] = false;
        }
        loop {
            let d = self.depth;
            let mut placed = false;
            while self.cursor[d] < self.allowed[d].len() {
                let v = self.allowed[d][self.cursor[d]];
                self.cursor[d] += 1;
                if !self.used[v] {
                    self.used[v] = true;
                    self.image[d] = v;
                    placed = true;
                    break;
                }
            }
            if placed {
                self.depth += 1;
                if self.depth == self.n {
                    return Some(Permutation::from_zero_based_unchecked(self.image.clone()));
                }
                self.cursor[self.depth] = 0;
            } else {
                if d == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
                self.used[self.image[self.depth]] = false;
            }
        }
    }
}

/// Whether every position/occupant pair of `sub` also holds in `whole`.
pub fn is_caput_of(sub: &Head, whole: &Permutation) -> Result<bool> {
    if sub.degree != whole.degree() {
        return Err(Error::GroundSetMismatch {
            left: sub.degree,
            right: whole.degree(),
        });
    }
    Ok(sub.slots.iter().all(|(&pos, &occ)| whole.apply(pos) == occ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixed_a(mode: HeadMode) -> CaputSpec {
        CaputSpec::new(Head::parse(4, "1=a").unwrap(), mode).unwrap()
    }

    #[test]
    fn fixed_a_table() {
        let rows: Vec<String> = enumerate_caput(&fixed_a(HeadMode::Loose))
            .unwrap()
            .map(|p| p.to_letters().unwrap())
            .collect();
        assert_eq!(rows, ["abcd", "abdc", "acbd", "acdb", "adbc", "adcb"]);
        assert_eq!(count_caput(&fixed_a(HeadMode::Loose)), BigUint::from(6u32));

        // rows (4) and (5) are the only ones where a alone stays put
        let exact: Vec<String> = enumerate_caput(&fixed_a(HeadMode::Exact))
            .unwrap()
            .map(|p| p.to_letters().unwrap())
            .collect();
        assert_eq!(exact, ["acdb", "adbc"]);
        assert_eq!(count_caput(&fixed_a(HeadMode::Exact)), BigUint::from(2u32));
    }

    #[test]
    fn derangement_values() {
        let expect = [1u64, 0, 1, 2, 9, 44, 265, 1854, 14833];
        for (m, &d) in expect.iter().enumerate() {
            assert_eq!(derangements(m), BigUint::from(d));
            assert_eq!(derangements_inclusion_exclusion(m), BigUint::from(d));
        }
        for m in 0..60 {
            assert_eq!(derangements(m), derangements_inclusion_exclusion(m));
        }
    }

    #[test]
    fn degenerate_heads() {
        let full = CaputSpec::fixing(3, [1, 2, 3], HeadMode::Exact).unwrap();
        assert_eq!(count_caput(&full), BigUint::one());
        let all: Vec<_> = enumerate_caput(&full).unwrap().collect();
        assert_eq!(all, vec![Permutation::identity(3).unwrap()]);

        let near_full = CaputSpec::fixing(4, [1, 2, 3], HeadMode::Exact).unwrap();
        assert_eq!(count_caput(&near_full), BigUint::zero());
        assert_eq!(enumerate_caput(&near_full).unwrap().count(), 0);

        let empty = CaputSpec::new(Head::empty(5), HeadMode::Loose).unwrap();
        assert_eq!(count_caput(&empty), BigUint::from(120u32));
        let loose_full = CaputSpec::fixing(3, [1, 2, 3], HeadMode::Loose).unwrap();
        assert_eq!(enumerate_caput(&loose_full).unwrap().count(), 1);
    }

    #[test]
    fn non_pointwise_heads() {
        // b in first place among three letters: bac, bca
        let spec = CaputSpec::new(Head::parse(3, "1=b").unwrap(), HeadMode::Loose).unwrap();
        let rows: Vec<String> = enumerate_caput(&spec)
            .unwrap()
            .map(|p| p.to_letters().unwrap())
            .collect();
        assert_eq!(rows, ["bac", "bca"]);
        // exact: position 3 must not keep c, leaving only bca
        let spec = CaputSpec::new(Head::parse(3, "1=b").unwrap(), HeadMode::Exact).unwrap();
        assert_eq!(count_caput(&spec), BigUint::one());
        let spec = CaputSpec::new(Head::parse(2, "1=b").unwrap(), HeadMode::Exact).unwrap();
        assert_eq!(count_caput(&spec), BigUint::one());
    }

    #[test]
    fn setwise_pair_in_s4() {
        let spec = CaputSpec::fixing(4, [1, 2], HeadMode::Setwise).unwrap();
        assert_eq!(count_caput(&spec), BigUint::from(4u32));
        let rows: Vec<String> = enumerate_caput(&spec)
            .unwrap()
            .map(|p| p.to_letters().unwrap())
            .collect();
        assert_eq!(rows, ["abcd", "abdc", "bacd", "badc"]);
    }

    #[test]
    fn head_parsing() {
        let h = Head::parse(4, "1=a, 3=c").unwrap();
        assert_eq!(h.to_string(), "1=a,3=c");
        assert!(h.is_pointwise());
        assert!(Head::parse(4, "").unwrap().is_empty());
        assert!(Head::parse(4, "5=a").is_err());
        assert!(Head::parse(4, "1=a,2=a").is_err());
        assert!(Head::parse(4, "1=a,1=b").is_err());
        assert!(Head::parse(4, "1").is_err());
        assert!(Head::parse(4, "1=e").is_err());
        assert_eq!(Head::parse(30, "28=28").unwrap().to_string(), "28=28");
        assert_eq!(Head::fixing_symbols(4, &["a"]).unwrap(), Head::parse(4, "1=a").unwrap());
        assert!("sideways".parse::<HeadMode>().is_err());
        assert_eq!("EXACT".parse::<HeadMode>().unwrap(), HeadMode::Exact);
    }

    #[test]
    fn containment() {
        let sub = Head::parse(4, "1=a").unwrap();
        for p in enumerate_caput(&fixed_a(HeadMode::Loose)).unwrap() {
            assert!(is_caput_of(&sub, &p).unwrap());
        }
        assert!(is_caput_of(&Head::empty(4), &Permutation::from_letters("dcba").unwrap()).unwrap());
        assert!(!is_caput_of(&sub, &Permutation::from_letters("badc").unwrap()).unwrap());
        assert_eq!(
            is_caput_of(&sub, &Permutation::identity(5).unwrap()),
            Err(Error::GroundSetMismatch { left: 4, right: 5 })
        );
    }

    #[test]
    fn ceiling() {
        let spec = CaputSpec::fixing(13, [1], HeadMode::Loose).unwrap();
        assert!(matches!(enumerate_caput(&spec), Err(Error::EnumerationTooLarge { .. })));
        assert_eq!(count_caput(&spec), factorial(12));
    }
}
