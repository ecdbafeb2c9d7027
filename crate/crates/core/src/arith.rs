//! Exact big-integer helpers shared by the closed forms.

use num_bigint::BigUint;
use num_traits::One;

pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// C(n, k), zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..k as u64).fold(BigUint::one(), |acc, i| acc * (n as u64 - i) / (i + 1))
}

pub fn pow2(n: usize) -> BigUint {
    BigUint::one() << n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        let expect = [1u64, 1, 2, 6, 24, 120, 720, 5040, 40320];
        for (n, &f) in expect.iter().enumerate() {
            assert_eq!(factorial(n), BigUint::from(f));
        }
        assert_eq!(factorial(21).to_string(), "51090942171709440000");
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![BigUint::one()];
        for n in 0..40 {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k), v, "C({n},{k})");
            }
            assert_eq!(binomial(n, n + 1), BigUint::from(0u32));
            let mut next = vec![BigUint::one(); n + 2];
            for k in 1..=n {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
    }
}
