//! Deterministic primality testing and generation of word-sized primes.

/// Witnesses sufficient for a deterministic Miller-Rabin test over all u64.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
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

/// Deterministic Miller-Rabin primality test for `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in MR_BASES.iter() {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Iterator over primes p <= start in descending order.
pub struct DescendingPrimes {
    next: u64,
}

impl Iterator for DescendingPrimes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next >= 2 {
            let candidate = self.next;
            self.next = candidate.saturating_sub(1);
            if is_prime(candidate) {
                return Some(candidate);
            }
        }
        None
    }
}

pub fn descending_primes(start: u64) -> DescendingPrimes {
    DescendingPrimes { next: start }
}

/// Default modulus pool: word-sized primes counting down from `u64::MAX`.
pub fn default_prime_pool() -> DescendingPrimes {
    descending_primes(u64::MAX)
}
