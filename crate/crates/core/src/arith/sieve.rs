//! Linear sieve over an initial segment, precomputing the multiplicative
//! profile (ω, d, φ, μ) of every index so the exhaustive sweeps never
//! factorize the same integer twice.

use super::{ArithProfile, Factorization};

/// Profiles of every integer in `1..=limit`, built in O(limit).
pub struct Sieve {
    limit: usize,
    smallest_prime: Vec<u32>,
    omega: Vec<u8>,
    d: Vec<u32>,
    phi: Vec<u64>,
    mu: Vec<i8>,
}

impl Sieve {
    /// Sieve `1..=limit`. Requires `limit ≥ 1`.
    pub fn new(limit: usize) -> Sieve {
        assert!(limit >= 1, "sieve limit must be positive");
        let n = limit + 1;
        let mut smallest_prime = vec![0u32; n];
        let mut omega = vec![0u8; n];
        let mut d = vec![0u32; n];
        let mut phi = vec![0u64; n];
        let mut mu = vec![0i8; n];
        // Exponent of smallest_prime[i] in i; only needed while sieving.
        let mut spf_exp = vec![0u8; n];
        let mut primes: Vec<usize> = Vec::new();
        d[1] = 1;
        phi[1] = 1;
        mu[1] = 1;
        for i in 2..n {
            if smallest_prime[i] == 0 {
                smallest_prime[i] = i as u32;
                primes.push(i);
                omega[i] = 1;
                d[i] = 2;
                phi[i] = (i - 1) as u64;
                mu[i] = -1;
                spf_exp[i] = 1;
            }
            for &p in &primes {
                let m = match p.checked_mul(i) {
                    Some(m) if m < n => m,
                    _ => break,
                };
                smallest_prime[m] = p as u32;
                if i % p == 0 {
                    omega[m] = omega[i];
                    spf_exp[m] = spf_exp[i] + 1;
                    d[m] = d[i] / (spf_exp[i] as u32 + 1) * (spf_exp[i] as u32 + 2);
                    phi[m] = phi[i] * p as u64;
                    mu[m] = 0;
                    break;
                }
                omega[m] = omega[i] + 1;
                spf_exp[m] = 1;
                d[m] = d[i] * 2;
                phi[m] = phi[i] * (p as u64 - 1);
                mu[m] = -mu[i];
            }
        }
        Sieve { limit, smallest_prime, omega, d, phi, mu }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check(&self, n: u64) {
        assert!(n >= 1 && n as usize <= self.limit, "n={n} outside sieve range");
    }

    pub fn omega(&self, n: u64) -> u32 {
        self.check(n);
        self.omega[n as usize] as u32
    }

    pub fn d(&self, n: u64) -> u64 {
        self.check(n);
        self.d[n as usize] as u64
    }

    pub fn phi(&self, n: u64) -> u64 {
        self.check(n);
        self.phi[n as usize]
    }

    pub fn mu(&self, n: u64) -> i8 {
        self.check(n);
        self.mu[n as usize]
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.check(n);
        n >= 2 && self.smallest_prime[n as usize] as u64 == n
    }

    pub fn profile(&self, n: u64) -> ArithProfile {
        self.check(n);
        ArithProfile {
            n,
            omega: self.omega(n),
            d: self.d(n),
            phi: self.phi(n),
            mu: self.mu(n),
        }
    }

    /// Factorization of `n` by repeated smallest-prime division.
    pub fn factorize(&self, n: u64) -> Factorization {
        self.check(n);
        let mut rest = n as usize;
        let mut factors: Vec<(u64, u32)> = Vec::new();
        while rest > 1 {
            let p = self.smallest_prime[rest] as usize;
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p as u64, e));
        }
        Factorization::from_parts(n, factors)
    }
}
