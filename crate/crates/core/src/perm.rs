//! Permutations of `{1, …, n}`, their cycles, and cycle types.
//!
//! Two textual forms are understood, both 1-based:
//!
//! * one-line form `[1,4,3,6,5,2]`: position `i` maps to the `i`-th entry;
//! * cycle form `(1)(3)(5)(246)`: fixed points are written out, each cycle
//!   starts at its smallest point, and cycles are ordered by length and then
//!   by smallest point, so 1-cycles lead.
//!
//! In cycle form the points of a cycle are written back to back when the
//! degree is at most 9 and separated by commas otherwise, e.g. `(2,10,4)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{1, …, n}`, `n >= 1`. Immutable once built.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    // 0-based images: image[i] = p(i + 1) - 1
    image: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its 1-based one-line form.
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut seen = vec![false; n];
        let mut image = one_line;
        for v in image.iter_mut() {
            if *v == 0 || *v > n {
                return Err(Error::NotABijection(format!("point {v} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[*v - 1], true) {
                return Err(Error::NotABijection(format!("point {v} appears twice")));
            }
            *v -= 1;
        }
        Ok(Permutation { image })
    }

    /// Caller guarantees `image` is a 0-based bijection of non-zero length.
    pub(crate) fn from_zero_based_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(!image.is_empty());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        Ok(Permutation {
            image: (0..n).collect(),
        })
    }

    /// Rebuilds a permutation of degree `n` from disjoint cycles. Points not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Cycle]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut image: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &pt in cycle.points() {
                if pt == 0 || pt > n {
                    return Err(Error::NotABijection(format!("point {pt} is outside 1..={n}")));
                }
                if std::mem::replace(&mut seen[pt - 1], true) {
                    return Err(Error::NotABijection(format!("point {pt} lies in two cycles")));
                }
            }
            let pts = cycle.points();
            for (i, &pt) in pts.iter().enumerate() {
                image[pt - 1] = pts[(i + 1) % pts.len()] - 1;
            }
        }
        Ok(Permutation { image })
    }

    /// Reads an arrangement of the first `n` letters, e.g. `"badc"`.
    pub fn from_letters(word: &str) -> Result<Self> {
        let one_line = word
            .chars()
            .map(|c| letter_index(c).ok_or_else(|| Error::parse(word, format!("{c:?} is not a letter a-z"))))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(one_line)
    }

    /// Parses cycle form with an explicit degree, so `(12)` can live in S₃.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(s)?;
        Permutation::from_cycles(degree, &cycles)
    }

    /// Parses either textual form. `degree` is needed only when a cycle form
    /// omits trailing fixed points; when given it must match a one-line form.
    pub fn parse(s: &str, degree: Option<usize>) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let p: Permutation = t.parse()?;
            match degree {
                Some(d) if d != p.degree() => Err(Error::IncompatibleDegrees {
                    left: p.degree(),
                    right: d,
                }),
                _ => Ok(p),
            }
        } else if t.starts_with('(') {
            let cycles = parse_cycle_list(t)?;
            let max = cycles
                .iter()
                .flat_map(|c| c.points().iter().copied())
                .max()
                .unwrap_or(0);
            let n = degree.unwrap_or(max);
            Permutation::from_cycles(n, &cycles)
        } else if !t.is_empty() && t.chars().all(|c| c.is_ascii_lowercase()) {
            Permutation::from_letters(t)
        } else {
            Err(Error::parse(
                s,
                "expected one-line form [..], cycle form (..) or a word of letters",
            ))
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.image[point - 1] + 1
    }

    /// 1-based one-line form.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|v| v + 1).collect()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// Canonical cycle decomposition: every point appears, fixed points as
    /// 1-cycles, cycles ordered by length, then by smallest point.
    pub fn cycles(&self) -> Vec<Cycle> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut points = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                points.push(x + 1);
                x = self.image[x];
            }
            // start is the smallest unseen point, so the cycle is already canonical
            out.push(Cycle { points });
        }
        out.sort_by_key(|c| (c.len(), c.points[0]));
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.image.len();
        let mut alpha = vec![0; n];
        for c in self.cycles() {
            alpha[c.len() - 1] += 1;
        }
        CycleType { degree: n, alpha }
    }

    pub fn fixed_points(&self) -> BTreeSet<usize> {
        self.image
            .iter()
            .enumerate()
            .filter(|(i, v)| i == *v)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `[1,4,3,6,5,2]`
    pub fn to_one_line_string(&self) -> String {
        let body: Vec<String> = self.image.iter().map(|v| (v + 1).to_string()).collect();
        format!("[{}]", body.join(","))
    }

    /// The arrangement as letters, `abcd` for the identity of S₄. `None` past 26 points.
    pub fn to_letters(&self) -> Option<String> {
        if self.degree() > 26 {
            return None;
        }
        Some(self.image.iter().map(|&v| (b'a' + v as u8) as char).collect())
    }
}

/// `r = p ∘ q`, i.e. `r(i) = p(q(i))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::IncompatibleDegrees {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(Permutation {
        image: q.image.iter().map(|&j| p.image[j]).collect(),
    })
}

fn letter_index(c: char) -> Option<usize> {
    c.is_ascii_lowercase().then(|| (c as u8 - b'a') as usize + 1)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.degree() <= 9;
        for c in self.cycles() {
            c.write(f, compact)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// One-line form, or cycle form whose degree is the largest point mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(body) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let one_line = body
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|e| Error::parse(s, e.to_string())))
                .collect::<Result<Vec<_>>>()?;
            return Permutation::new(one_line);
        }
        if t.starts_with('(') {
            return Permutation::parse(t, None);
        }
        Err(Error::parse(s, "expected [..] or (..)"))
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_one_line_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A cycle of distinct 1-based points, rotated so the smallest comes first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    points: Vec<usize>,
}

impl Cycle {
    pub fn new(mut points: Vec<usize>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::NotABijection("empty cycle".into()));
        }
        let distinct: BTreeSet<_> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::NotABijection(format!("repeated point in cycle {points:?}")));
        }
        if points.contains(&0) {
            return Err(Error::NotABijection("point 0 in cycle; points are 1-based".into()));
        }
        let min_at = (0..points.len()).min_by_key(|&i| points[i]).unwrap_or(0);
        points.rotate_left(min_at);
        Ok(Cycle { points })
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, compact: bool) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.points.iter().all(|&p| p <= 9))
    }
}

// With a comma anywhere in the string every cycle body is a comma list (a
// body without commas is one point); otherwise each digit is a point, and if
// that reading fails, bodies are read as whole numbers.
fn parse_cycle_list(s: &str) -> Result<Vec<Cycle>> {
    if s.contains(',') {
        return parse_cycles_as(s, true);
    }
    parse_cycles_as(s, false).or_else(|e| parse_cycles_as(s, true).map_err(|_| e))
}

fn parse_cycles_as(s: &str, wide: bool) -> Result<Vec<Cycle>> {
    let mut rest = s.trim();
    let mut cycles = Vec::new();
    let mut seen = BTreeSet::new();
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::parse(s, "cycle must start with '('"))?;
        let close = body_start.find(')').ok_or_else(|| Error::parse(s, "unclosed '('"))?;
        let body = body_start[..close].trim();
        let points = if wide || body.contains(char::is_whitespace) {
            body.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|e| Error::parse(s, e.to_string())))
                .collect::<Result<Vec<_>>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(s, format!("{c:?} is not a digit")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        for &pt in &points {
            if !seen.insert(pt) {
                return Err(Error::parse(s, format!("point {pt} appears twice")));
            }
        }
        cycles.push(Cycle::new(points).map_err(|e| Error::parse(s, e.to_string()))?);
        rest = body_start[close + 1..].trim_start();
    }
    if cycles.is_empty() {
        return Err(Error::parse(s, "no cycles"));
    }
    Ok(cycles)
}

/// `(α₁, …, αₙ)`: αᵢ counts the `i`-cycles. Always satisfies `Σ i·αᵢ = n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    degree: usize,
    alpha: Vec<usize>,
}

impl CycleType {
    /// `alpha[i - 1]` is the number of `i`-cycles. Trailing zeros may be
    /// omitted, but the vector may not be longer than `degree`.
    pub fn new(degree: usize, alpha: &[usize]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if alpha.len() > degree && alpha[degree..].iter().any(|&a| a != 0) {
            return Err(Error::InvalidCycleType(format!(
                "cycle of length > {degree} in a permutation of degree {degree}"
            )));
        }
        let weight: usize = alpha.iter().enumerate().map(|(i, a)| (i + 1) * a).sum();
        if weight != degree {
            return Err(Error::InvalidCycleType(format!(
                "sum of i*alpha_i is {weight}, expected {degree}"
            )));
        }
        let mut a = alpha[..alpha.len().min(degree)].to_vec();
        a.resize(degree, 0);
        Ok(CycleType { degree, alpha: a })
    }

    /// The class whose cycle lengths are the parts of `parts`.
    pub fn from_cycle_lengths(parts: &[usize]) -> Result<Self> {
        let degree: usize = parts.iter().sum();
        if degree == 0 {
            return Err(Error::InvalidDegree(0));
        }
        let mut alpha = vec![0; degree];
        for &p in parts {
            if p == 0 {
                return Err(Error::InvalidCycleType("zero-length cycle".into()));
            }
            alpha[p - 1] += 1;
        }
        Ok(CycleType { degree, alpha })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Counts of `i`-cycles, index `i - 1`; always `degree` entries long.
    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    /// αᵢ, 1-based; zero past the degree.
    pub fn count(&self, len: usize) -> usize {
        len.checked_sub(1).and_then(|i| self.alpha.get(i)).copied().unwrap_or(0)
    }

    /// Cycle lengths in non-increasing order, i.e. the matching partition of n.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.alpha.iter().sum());
        for (i, &a) in self.alpha.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i + 1, a));
        }
        out
    }

    /// Sparse form with ASCII subscripts, `a1=3 a3=1`.
    pub fn to_ascii(&self) -> String {
        self.sparse(|i| format!("a{i}"))
    }

    fn sparse(&self, label: impl Fn(usize) -> String) -> String {
        self.alpha
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, a)| format!("{}={a}", label(i + 1)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap_or(0) as usize])
        .collect()
}

impl fmt::Display for CycleType {
    /// `α₁=3 α₃=1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sparse(|i| format!("α{}", subscript(i))))
    }
}
