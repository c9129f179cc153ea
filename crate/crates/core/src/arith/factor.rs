//! Factorization of 64-bit integers: trial division by small candidates,
//! Brent-cycle Pollard rho for large cofactors, and deterministic
//! Miller–Rabin primality testing.

use std::collections::BTreeMap;

use num_integer::gcd;

use super::Factorization;

/// Witness set making Miller–Rabin deterministic for every `u64`.
const MILLER_RABIN_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Largest candidate attempted by trial division before handing the cofactor
/// to Pollard rho.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin primality test for `u64`.
pub fn is_prime(n: u64) -> bool {
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    if n < 37 * 37 {
        return n > 1;
    }
    let trailing = (n - 1).trailing_zeros();
    let odd = (n - 1) >> trailing;
    'bases: for &base in &MILLER_RABIN_BASES {
        let base = base % n;
        if base == 0 {
            continue;
        }
        let mut x = pow_mod(base, odd, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..trailing {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// One attempt at splitting an odd composite `n` with Brent's cycle variant
/// of Pollard rho using the polynomial `y² + c`. Returns a nontrivial factor
/// or `None` when this `c` degenerates.
fn pollard_rho_brent(n: u64, c: u64) -> Option<u64> {
    let step = |y: u64| (mul_mod(y, y, n) + c) % n;
    let mut y: u64 = 2;
    let mut x: u64 = 2;
    let mut ys: u64 = 2;
    let mut r: u64 = 1;
    let mut q: u64 = 1;
    let mut g: u64 = 1;
    const BATCH: u64 = 128;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = gcd(q, n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        // The batched gcd overshot; replay one step at a time.
        loop {
            ys = step(ys);
            g = gcd(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

/// Nontrivial factor of an odd composite `n` with no divisor below
/// [`TRIAL_DIVISION_LIMIT`].
fn split_composite(n: u64) -> u64 {
    for c in 1.. {
        if let Some(f) = pollard_rho_brent(n, c) {
            return f;
        }
    }
    unreachable!("every odd composite splits for some polynomial shift");
}

/// Full prime factorization of `n ≥ 1`, primes ascending.
pub fn factorize(n: u64) -> Factorization {
    let mut counts: BTreeMap<u64, u32> = BTreeMap::new();
    let mut rest = n;
    for p in [2u64, 3, 5] {
        while rest % p == 0 {
            rest /= p;
            *counts.entry(p).or_insert(0) += 1;
        }
    }
    let mut p: u64 = 7;
    // 2/4-alternating wheel over candidates coprime to 2 and 3.
    let mut stride: u64 = 4;
    while p <= TRIAL_DIVISION_LIMIT && p * p <= rest {
        while rest % p == 0 {
            rest /= p;
            *counts.entry(p).or_insert(0) += 1;
        }
        p += stride;
        stride = 6 - stride;
    }
    if rest > 1 {
        let mut pending = vec![rest];
        while let Some(m) = pending.pop() {
            if is_prime(m) {
                *counts.entry(m).or_insert(0) += 1;
            } else {
                let f = split_composite(m);
                pending.push(f);
                pending.push(m / f);
            }
        }
    }
    Factorization::from_parts(n, counts.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Miller–Rabin oracle with the 12-prime witness set
    /// (deterministic far beyond `u64`), coded separately from `is_prime`.
    fn is_prime_oracle(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            if n % p == 0 {
                return n == p;
            }
        }
        let s = (n - 1).trailing_zeros();
        let d = (n - 1) >> s;
        [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
            .iter()
            .all(|&a| {
                let mut x = pow_mod(a, d, n);
                if x == 1 || x == n - 1 {
                    return true;
                }
                for _ in 1..s {
                    x = mul_mod(x, x, n);
                    if x == n - 1 {
                        return true;
                    }
                }
                false
            })
    }

    #[test]
    fn factorize_trivial_and_small() {
        assert!(factorize(1).factors().is_empty());
        assert_eq!(factorize(2).factors(), &[(2, 1)]);
        assert_eq!(factorize(12).factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(360).factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1_000_003).factors(), &[(1_000_003, 1)]);
    }

    #[test]
    fn factorize_mersenne_prime() {
        let m61 = (1u64 << 61) - 1;
        assert!(is_prime_oracle(m61));
        assert_eq!(factorize(m61).factors(), &[(m61, 1)]);
    }

    #[test]
    fn factorize_known_large_composites() {
        // 600851475143 = 71 · 839 · 1471 · 6857.
        assert_eq!(
            factorize(600_851_475_143).factors(),
            &[(71, 1), (839, 1), (1471, 1), (6857, 1)]
        );
        // Semiprime with both factors above the trial-division limit.
        let p = 1_000_000_007u64;
        let q = 1_000_000_009u64;
        assert_eq!(factorize(p * q).factors(), &[(p, 1), (q, 1)]);
        // Square of a large prime.
        assert_eq!(factorize(p * p).factors(), &[(p, 2)]);
    }

    #[test]
    fn factorization_invariants_hold() {
        for n in (1..2000).chain([2u64.pow(32) - 1, 999_999_937 * 2, 2 * 3 * 5 * 7 * 11 * 13]) {
            let f = factorize(n);
            assert_eq!(f.n(), n);
            let mut product: u64 = 1;
            let mut last = 0;
            for &(p, e) in f.factors() {
                assert!(p > last, "primes ascending for n={n}");
                assert!(is_prime_oracle(p), "p={p} must be prime for n={n}");
                product *= p.pow(e);
                last = p;
            }
            assert_eq!(product, n);
        }
    }

    #[test]
    fn primality_matches_oracle() {
        for n in 0..5000 {
            assert_eq!(is_prime(n), is_prime_oracle(n), "n={n}");
        }
        for n in [
            2u64.pow(61) - 1,
            2u64.pow(61) + 1,
            561,       // Carmichael
            1_373_653, // strong-pseudoprime boundary case
            25_326_001,
            3_215_031_751,
            u64::MAX,
            u64::MAX - 58, // largest u64 prime
        ] {
            assert_eq!(is_prime(n), is_prime_oracle(n), "n={n}");
        }
    }
}
