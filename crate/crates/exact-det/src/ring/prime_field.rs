//! Prime fields Z/p with a word-sized modulus.

use crate::error::{Error, Result};
use crate::primes::is_prime;
use crate::ring::CoeffRing;
use crate::tally::OpTally;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::Rng;

/// Arithmetic modulo a prime that fits one machine word. Elements are kept
/// reduced to `[0, modulus)`. Division is field division (multiply by the
/// inverse) and counts as one coefficient division.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeFieldRing {
    modulus: u64,
}

impl PrimeFieldRing {
    /// Constructs the field, verifying the modulus with a deterministic
    /// primality test. Moduli below 3 are rejected.
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 3 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(PrimeFieldRing { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce_i64(&self, v: i64) -> u64 {
        let m = self.modulus as i128;
        (((v as i128 % m) + m) % m) as u64
    }

    pub fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        v.mod_floor(&m).to_u64().expect("reduced residue fits u64")
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let m = self.modulus as i128;
        let (mut r0, mut r1) = (m, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, any nonzero element is a unit");
        Ok((((s0 % m) + m) % m) as u64)
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.modulus as u128) as u64
    }
}

impl CoeffRing for PrimeFieldRing {
    type Coeff = u64;

    fn czero(&self) -> u64 {
        0
    }

    fn cone(&self) -> u64 {
        1
    }

    fn cis_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn cneg(&self, a: &u64) -> Result<u64> {
        Ok(if *a == 0 { 0 } else { self.modulus - a })
    }

    fn cadd(&self, a: &u64, b: &u64, t: &mut OpTally) -> Result<u64> {
        t.c_add += 1;
        // the modulus may use the full word, so the sum needs 65 bits
        let s = *a as u128 + *b as u128;
        let m = self.modulus as u128;
        Ok(if s >= m { (s - m) as u64 } else { s as u64 })
    }

    fn csub(&self, a: &u64, b: &u64, t: &mut OpTally) -> Result<u64> {
        t.c_add += 1;
        Ok(if a >= b { a - b } else { self.modulus - (b - a) })
    }

    fn cmul(&self, a: &u64, b: &u64, t: &mut OpTally) -> Result<u64> {
        t.c_mul += 1;
        Ok(self.mul_raw(*a, *b))
    }

    fn cdiv_exact(&self, a: &u64, b: &u64, t: &mut OpTally) -> Result<u64> {
        t.c_div += 1;
        let inv = self.inv(*b)?;
        Ok(self.mul_raw(*a, inv))
    }

    fn cfrom_i64(&self, v: i64) -> Result<u64> {
        Ok(self.reduce_i64(v))
    }

    fn ctext(&self, a: &u64) -> String {
        a.to_string()
    }

    fn csample<R: Rng + ?Sized>(&self, rng: &mut R, _bound: i64, nonzero: bool) -> u64 {
        loop {
            let v = rng.gen_range(0..self.modulus);
            if !nonzero || v != 0 {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn construction_validates_modulus() {
        assert!(PrimeFieldRing::new(7).is_ok());
        assert_eq!(PrimeFieldRing::new(2), Err(Error::ModulusTooSmall(2)));
        assert_eq!(PrimeFieldRing::new(9), Err(Error::NotPrime(9)));
        assert!(PrimeFieldRing::new(18446744073709551557).is_ok());
    }

    #[test]
    fn inverse_round_trip() {
        let f = PrimeFieldRing::new(1_000_003).unwrap();
        let mut t = OpTally::new();
        for x in [1u64, 2, 999_999, 123_456] {
            let inv = f.exact_div(&1, &x, &mut t).unwrap();
            assert_eq!(f.mul(&inv, &x, &mut t).unwrap(), 1);
        }
        assert_eq!(f.exact_div(&1, &0, &mut t), Err(Error::DivisionByZero));
    }

    #[test]
    fn arithmetic_near_word_boundary() {
        let p = 18446744073709551557; // largest u64 prime
        let f = PrimeFieldRing::new(p).unwrap();
        let mut t = OpTally::new();
        let a = p - 1;
        let b = p - 2;
        let s = f.add(&a, &b, &mut t).unwrap();
        assert_eq!(s, p - 3);
        let prod = f.mul(&a, &a, &mut t).unwrap();
        assert_eq!(prod, 1); // (-1)^2
    }

    #[test]
    fn reduce_signed() {
        let f = PrimeFieldRing::new(7).unwrap();
        assert_eq!(f.reduce_i64(-2), 5);
        assert_eq!(f.reduce_bigint(&BigInt::from(-2)), 5);
    }
}
