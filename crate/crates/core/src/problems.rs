//! The problem catalogue: complexions, variations of order and of vicinity,
//! and the fixed-head problem that the others reduce to.
//!
//! Only some of the twelve problems are pinned down well enough to compute:
//! the complexion family (`complexions`, `simpliciter`), problem 4 (order),
//! problem 5 (vicinity), problem 7 (given head, find the variations) and
//! problem 10 (containment). Other numbers are reserved and report
//! [`Status::NotSpecified`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::arith::{binomial, factorial};
use crate::caput::{count_caput, enumerate_caput, is_caput_of, symbol, CaputSpec, Head, HeadMode};
use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProblemId {
    Complexions,
    Simpliciter,
    Order,
    Vicinity,
    Caput,
    Containment,
    Reserved(u8),
}

impl ProblemId {
    pub fn number(self) -> Option<u8> {
        match self {
            ProblemId::Order => Some(4),
            ProblemId::Vicinity => Some(5),
            ProblemId::Caput => Some(7),
            ProblemId::Containment => Some(10),
            ProblemId::Reserved(n) => Some(n),
            ProblemId::Complexions | ProblemId::Simpliciter => None,
        }
    }
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemId::Complexions => f.write_str("complexions"),
            ProblemId::Simpliciter => f.write_str("simpliciter"),
            other => write!(f, "{}", other.number().unwrap_or(0)),
        }
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "complexions" => ProblemId::Complexions,
            "simpliciter" => ProblemId::Simpliciter,
            "4" | "order" => ProblemId::Order,
            "5" | "vicinity" => ProblemId::Vicinity,
            "7" | "caput" => ProblemId::Caput,
            "10" | "containment" => ProblemId::Containment,
            other => match other.parse::<u8>() {
                Ok(n @ 1..=12) => ProblemId::Reserved(n),
                _ => return Err(Error::parse(s, "problem id must be 1-12, complexions or simpliciter")),
            },
        })
    }
}

impl Serialize for ProblemId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A fully parameterized problem instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Complexions { n: usize, k: usize },
    Simpliciter { n: usize, include_empty: bool },
    Order { n: usize },
    Vicinity { n: usize },
    Caput { spec: CaputSpec },
    Containment { sub: Head, whole: Permutation },
    Reserved { id: u8 },
}

impl Query {
    pub fn id(&self) -> ProblemId {
        match self {
            Query::Complexions { .. } => ProblemId::Complexions,
            Query::Simpliciter { .. } => ProblemId::Simpliciter,
            Query::Order { .. } => ProblemId::Order,
            Query::Vicinity { .. } => ProblemId::Vicinity,
            Query::Caput { .. } => ProblemId::Caput,
            Query::Containment { .. } => ProblemId::Containment,
            Query::Reserved { id } => ProblemId::Reserved(*id),
        }
    }

    pub fn inputs(&self) -> Inputs {
        let mut i = Inputs::default();
        match self {
            Query::Complexions { n, k } => {
                i.n = Some(*n);
                i.k = Some(*k);
            }
            Query::Simpliciter { n, include_empty } => {
                i.n = Some(*n);
                i.include_empty = Some(*include_empty);
            }
            Query::Order { n } | Query::Vicinity { n } => i.n = Some(*n),
            Query::Caput { spec } => {
                i.n = Some(spec.degree());
                i.head = Some(spec.head().to_string());
                i.mode = Some(spec.mode());
            }
            Query::Containment { sub, whole } => {
                i.n = Some(whole.degree());
                i.sub = Some(sub.to_string());
                i.whole = Some(arrangement(whole));
            }
            Query::Reserved { .. } => {}
        }
        i
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub include_empty: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub head: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<HeadMode>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub whole: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Solved,
    Reduced,
    NotReducible,
    NotSpecified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProblemResult {
    pub problem_id: ProblemId,
    pub status: Status,
    pub inputs: Inputs,
    #[serde(serialize_with = "opt_decimal", skip_serializing_if = "Option::is_none")]
    pub count: Option<BigUint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub contained: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<String>>,
    /// Set when `witnesses` stops short of `count`.
    pub truncated: bool,
}

pub(crate) fn opt_decimal<S: Serializer>(v: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&x.to_string()),
        None => s.serialize_none(),
    }
}

/// C(n, k): the complexions of exponent `k` of `n` things; zero when `k > n`.
pub fn complexions(n: usize, k: usize) -> BigUint {
    binomial(n, k)
}

/// Sum of the complexions of every exponent from 1 to `n`, i.e. `2ⁿ - 1`;
/// with `include_empty` the empty complexion is counted too.
pub fn complexiones_simpliciter(n: usize, include_empty: bool) -> BigUint {
    let first = if include_empty { 0 } else { 1 };
    (first..=n).map(|k| complexions(n, k)).sum()
}

/// n!
pub fn variations_of_order(n: usize) -> BigUint {
    factorial(n)
}

/// Arrangements on a circle up to rotation: `n!/n = (n - 1)!`.
pub fn vicinity_variations(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidDegree(0));
    }
    Ok(factorial(n) / n)
}

/// Rotates an arrangement so that the first symbol leads.
pub fn canonical_rotation(arrangement: &Permutation) -> Permutation {
    let mut line = arrangement.one_line();
    let at = line.iter().position(|&v| v == 1).unwrap_or(0);
    line.rotate_left(at);
    Permutation::new(line).expect("rotation of a permutation is a permutation")
}

/// One representative per rotation class, each starting with the first
/// symbol, in lexicographic order. Streams; refuses degrees above the caput
/// ceiling.
pub fn vicinity_classes(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    enumerate_caput(&CaputSpec::fixing(n, [1], HeadMode::Loose)?)
}

/// The product `(n - k)!`: the exterior things varied among themselves while
/// a head of `k` things stays put.
pub fn problem7_product(n: usize, head_size: usize) -> Result<BigUint> {
    if head_size > n {
        return Err(Error::InvalidArgument(format!("head of {head_size} things out of {n}")));
    }
    Ok(factorial(n - head_size))
}

/// Letters for up to 26 points, one-line form beyond.
pub fn arrangement(p: &Permutation) -> String {
    p.to_letters().unwrap_or_else(|| p.to_one_line_string())
}

fn subset_string(mask: u64, n: usize) -> String {
    let items: Vec<String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| symbol(i + 1)).collect();
    format!("{{{}}}", items.join(","))
}

// k-subsets of n in colexicographic order via Gosper's hack; n <= 63.
fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let mut cur = if k > n { None } else { Some((1u64 << k) - 1) };
    std::iter::from_fn(move || {
        let x = cur?;
        if x >= limit {
            return None;
        }
        cur = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x + c;
            Some((((r ^ x) >> 2) / c) | r)
        };
        Some(x)
    })
}

/// Solves a query, optionally listing up to `witness_limit` witnesses.
pub fn solve(query: &Query, witness_limit: Option<usize>) -> Result<ProblemResult> {
    let mut result = ProblemResult {
        problem_id: query.id(),
        status: Status::Solved,
        inputs: query.inputs(),
        count: None,
        contained: None,
        witnesses: None,
        truncated: false,
    };
    let listing: Option<Box<dyn Iterator<Item = String>>> = match query {
        Query::Complexions { n, k } => {
            result.count = Some(complexions(*n, *k));
            witness_limit.map(|_| subset_listing(*n, *k..=*k)).transpose()?
        }
        Query::Simpliciter { n, include_empty } => {
            result.count = Some(complexiones_simpliciter(*n, *include_empty));
            let first = if *include_empty { 0 } else { 1 };
            witness_limit.map(|_| subset_listing(*n, first..=*n)).transpose()?
        }
        Query::Order { n } => {
            result.count = Some(variations_of_order(*n));
            witness_limit
                .map(|_| -> Result<Box<dyn Iterator<Item = String>>> {
                    let spec = CaputSpec::new(Head::empty(*n), HeadMode::Loose)?;
                    Ok(Box::new(enumerate_caput(&spec)?.map(|p| arrangement(&p))))
                })
                .transpose()?
        }
        Query::Vicinity { n } => {
            result.count = Some(vicinity_variations(*n)?);
            witness_limit
                .map(|_| -> Result<Box<dyn Iterator<Item = String>>> {
                    Ok(Box::new(vicinity_classes(*n)?.map(|p| arrangement(&p))))
                })
                .transpose()?
        }
        Query::Caput { spec } => {
            result.count = Some(count_caput(spec));
            witness_limit
                .map(|_| -> Result<Box<dyn Iterator<Item = String>>> {
                    Ok(Box::new(enumerate_caput(spec)?.map(|p| arrangement(&p))))
                })
                .transpose()?
        }
        Query::Containment { sub, whole } => {
            result.contained = Some(is_caput_of(sub, whole)?);
            None
        }
        Query::Reserved { .. } => {
            result.status = Status::NotSpecified;
            None
        }
    };
    if let (Some(limit), Some(mut items)) = (witness_limit, listing) {
        let taken: Vec<String> = items.by_ref().take(limit).collect();
        result.truncated = items.next().is_some();
        result.witnesses = Some(taken);
    }
    Ok(result)
}

fn subset_listing(n: usize, sizes: std::ops::RangeInclusive<usize>) -> Result<Box<dyn Iterator<Item = String>>> {
    if n > 63 {
        return Err(Error::EnumerationTooLarge {
            what: "subset listing",
            size: n,
            ceiling: 63,
        });
    }
    Ok(Box::new(
        sizes.flat_map(move |k| k_subsets(n, k).map(move |m| subset_string(m, n))),
    ))
}

/// How a problem's count is recovered through a fixed head.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub problem_id: ProblemId,
    pub status: Status,
    pub inputs: Inputs,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub caput: Option<CaputSpec>,
    #[serde(serialize_with = "opt_decimal", skip_serializing_if = "Option::is_none")]
    pub direct_count: Option<BigUint>,
    #[serde(serialize_with = "opt_decimal", skip_serializing_if = "Option::is_none")]
    pub caput_count: Option<BigUint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
    pub derivation: String,
}

impl Reduction {
    pub fn is_not_reducible(&self) -> bool {
        self.status == Status::NotReducible
    }

    fn new(query: &Query, status: Status, derivation: impl Into<String>) -> Self {
        Reduction {
            problem_id: query.id(),
            status,
            inputs: query.inputs(),
            caput: None,
            direct_count: None,
            caput_count: None,
            agrees: None,
            derivation: derivation.into(),
        }
    }

    fn reduced(mut self, spec: Option<CaputSpec>, direct: BigUint, via_caput: BigUint) -> Self {
        self.agrees = Some(direct == via_caput);
        self.caput = spec;
        self.direct_count = Some(direct);
        self.caput_count = Some(via_caput);
        self
    }
}

/// Re-derives a problem of the first two groups from the fixed-head count,
/// computing both the direct and the head-based value.
pub fn reduce_to_caput(query: &Query) -> Result<Reduction> {
    Ok(match query {
        Query::Order { n } => {
            let spec = CaputSpec::new(Head::empty(*n), HeadMode::Loose)?;
            let via = count_caput(&spec);
            Reduction::new(
                query,
                Status::Reduced,
                "variations of order = loose count of the empty head",
            )
            .reduced(Some(spec), variations_of_order(*n), via)
        }
        Query::Vicinity { n } => {
            let spec = CaputSpec::fixing(*n, [1], HeadMode::Loose)?;
            let via = count_caput(&spec);
            Reduction::new(
                query,
                Status::Reduced,
                "vicinity variations = loose count of a monadic head (one symbol pinned, the rest varied)",
            )
            .reduced(Some(spec), vicinity_variations(*n)?, via)
        }
        Query::Complexions { n, k } => {
            if *n == 0 {
                return Err(Error::InvalidDegree(0));
            }
            let direct = complexions(*n, *k);
            if k > n {
                return Ok(
                    Reduction::new(query, Status::Reduced, "no head of that size exists").reduced(
                        None,
                        direct,
                        BigUint::zero(),
                    ),
                );
            }
            let spec = CaputSpec::fixing(*n, 1..=*k, HeadMode::Setwise)?;
            let via = factorial(*n) / count_caput(&spec);
            Reduction::new(
                query,
                Status::Reduced,
                "complexions of exponent k = distinct heads of size k = n! / setwise count of one such head",
            )
            .reduced(Some(spec), direct, via)
        }
        Query::Simpliciter { .. } => Reduction::new(
            query,
            Status::NotReducible,
            "complexions taken over every exponent at once are not reached by any single head",
        ),
        Query::Reserved { id } => Reduction::new(query, Status::NotSpecified, format!("problem {id} is not specified")),
        Query::Caput { .. } | Query::Containment { .. } => {
            return Err(Error::InvalidArgument(format!(
                "problem {} is not among the problems reduced to the head problem",
                query.id()
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn complexion_family() {
        assert_eq!(complexions(4, 2), big(6));
        assert_eq!(complexions(5, 0), big(1));
        assert_eq!(complexions(4, 1), big(4));
        assert_eq!(complexions(3, 5), big(0));
        assert_eq!(complexiones_simpliciter(4, false), big(15));
        assert_eq!(complexiones_simpliciter(4, true), big(16));
        assert_eq!(complexiones_simpliciter(1, false), big(1));
        assert_eq!(complexiones_simpliciter(6, false), big(63));
    }

    #[test]
    fn order_and_vicinity() {
        assert_eq!(variations_of_order(4), big(24));
        assert_eq!(variations_of_order(1), big(1));
        assert_eq!(vicinity_variations(4).unwrap(), big(6));
        assert_eq!(vicinity_variations(1).unwrap(), big(1));
        assert!(vicinity_variations(0).is_err());
        assert_eq!(problem7_product(4, 1).unwrap(), big(6));
        assert_eq!(problem7_product(5, 5).unwrap(), big(1));
        assert!(problem7_product(2, 3).is_err());
    }

    #[test]
    fn one_neighbourhood() {
        let reps: Vec<Permutation> = ["abcd", "bcda", "cdab", "dabc"]
            .iter()
            .map(|w| canonical_rotation(&Permutation::from_letters(w).unwrap()))
            .collect();
        assert!(reps.iter().all(|r| r == &reps[0]));
        assert_eq!(arrangement(&reps[0]), "abcd");
        assert_eq!(vicinity_classes(2).unwrap().count(), 1);
        let four: Vec<String> = vicinity_classes(4).unwrap().map(|p| arrangement(&p)).collect();
        assert_eq!(four, ["abcd", "abdc", "acbd", "acdb", "adbc", "adcb"]);
    }

    #[test]
    fn ids() {
        assert_eq!("5".parse::<ProblemId>().unwrap(), ProblemId::Vicinity);
        assert_eq!("simpliciter".parse::<ProblemId>().unwrap(), ProblemId::Simpliciter);
        assert_eq!("8".parse::<ProblemId>().unwrap(), ProblemId::Reserved(8));
        assert!("13".parse::<ProblemId>().is_err());
        assert_eq!(ProblemId::Containment.to_string(), "10");
    }

    #[test]
    fn reductions() {
        let r = reduce_to_caput(&Query::Order { n: 4 }).unwrap();
        assert_eq!(r.caput_count, Some(big(24)));
        assert_eq!(r.agrees, Some(true));
        let r = reduce_to_caput(&Query::Vicinity { n: 4 }).unwrap();
        assert_eq!(r.caput_count, Some(big(6)));
        assert_eq!(r.agrees, Some(true));
        let r = reduce_to_caput(&Query::Simpliciter {
            n: 4,
            include_empty: false,
        })
        .unwrap();
        assert!(r.is_not_reducible());
        assert_eq!(r.caput_count, None);
        for n in 1..=9 {
            for k in 0..=n + 1 {
                let r = reduce_to_caput(&Query::Complexions { n, k }).unwrap();
                assert_eq!(r.agrees, Some(true), "n={n} k={k}");
            }
        }
        let r = reduce_to_caput(&Query::Reserved { id: 6 }).unwrap();
        assert_eq!(r.status, Status::NotSpecified);
        let spec = CaputSpec::fixing(3, [1], HeadMode::Loose).unwrap();
        assert!(reduce_to_caput(&Query::Caput { spec }).is_err());
    }

    #[test]
    fn solve_with_witnesses() {
        let r = solve(&Query::Complexions { n: 4, k: 2 }, Some(10)).unwrap();
        assert_eq!(r.count, Some(big(6)));
        assert_eq!(
            r.witnesses.unwrap(),
            ["{a,b}", "{a,c}", "{b,c}", "{a,d}", "{b,d}", "{c,d}"]
        );
        assert!(!r.truncated);

        let r = solve(&Query::Order { n: 4 }, Some(5)).unwrap();
        assert_eq!(r.witnesses.as_ref().unwrap().len(), 5);
        assert!(r.truncated);

        let r = solve(
            &Query::Simpliciter {
                n: 4,
                include_empty: false,
            },
            Some(100),
        )
        .unwrap();
        assert_eq!(r.witnesses.unwrap().len(), 15);

        let r = solve(
            &Query::Containment {
                sub: Head::parse(4, "1=a").unwrap(),
                whole: Permutation::from_letters("badc").unwrap(),
            },
            None,
        )
        .unwrap();
        assert_eq!(r.contained, Some(false));

        let r = solve(&Query::Reserved { id: 9 }, None).unwrap();
        assert_eq!(r.status, Status::NotSpecified);
        assert_eq!(r.count, None);
    }
}
