//! Integer coefficient rings: checked machine words and arbitrary precision.

use crate::error::{Error, Result};
use crate::ring::CoeffRing;
use crate::tally::OpTally;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;

/// Signed 64-bit integers with checked arithmetic. Overflow is an error, not
/// a silent wrap, so the single-word cost model stays honest.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MachineIntRing;

impl CoeffRing for MachineIntRing {
    type Coeff = i64;

    fn czero(&self) -> i64 {
        0
    }

    fn cone(&self) -> i64 {
        1
    }

    fn cis_zero(&self, a: &i64) -> bool {
        *a == 0
    }

    fn cneg(&self, a: &i64) -> Result<i64> {
        a.checked_neg().ok_or(Error::Overflow)
    }

    fn cadd(&self, a: &i64, b: &i64, t: &mut OpTally) -> Result<i64> {
        t.c_add += 1;
        a.checked_add(*b).ok_or(Error::Overflow)
    }

    fn csub(&self, a: &i64, b: &i64, t: &mut OpTally) -> Result<i64> {
        t.c_add += 1;
        a.checked_sub(*b).ok_or(Error::Overflow)
    }

    fn cmul(&self, a: &i64, b: &i64, t: &mut OpTally) -> Result<i64> {
        t.c_mul += 1;
        a.checked_mul(*b).ok_or(Error::Overflow)
    }

    fn cdiv_exact(&self, a: &i64, b: &i64, t: &mut OpTally) -> Result<i64> {
        if *b == 0 {
            return Err(Error::DivisionByZero);
        }
        t.c_div += 1;
        if a % b != 0 {
            return Err(Error::InexactDivision);
        }
        a.checked_div(*b).ok_or(Error::Overflow)
    }

    fn cfrom_i64(&self, v: i64) -> Result<i64> {
        Ok(v)
    }

    fn ctext(&self, a: &i64) -> String {
        a.to_string()
    }

    fn csample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64, nonzero: bool) -> i64 {
        let bound = bound.max(1);
        loop {
            let v = rng.gen_range(-bound..=bound);
            if !nonzero || v != 0 {
                return v;
            }
        }
    }
}

/// Number of 64-bit words in the magnitude of `x`; zero occupies one word.
pub(crate) fn bigint_words(x: &BigInt) -> u64 {
    x.bits().div_ceil(64).max(1)
}

/// Arbitrary-precision integers. Word-level costs follow the classical
/// algorithms: a product of wa-word by wb-word operands counts wa*wb word
/// multiplications (each with two carried additions), a division counts one
/// word division plus wb multiply/adds per quotient word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BigIntRing;

impl CoeffRing for BigIntRing {
    type Coeff = BigInt;

    fn czero(&self) -> BigInt {
        BigInt::zero()
    }

    fn cone(&self) -> BigInt {
        BigInt::from(1)
    }

    fn cis_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn cneg(&self, a: &BigInt) -> Result<BigInt> {
        Ok(-a)
    }

    fn cadd(&self, a: &BigInt, b: &BigInt, t: &mut OpTally) -> Result<BigInt> {
        t.c_add += bigint_words(a).max(bigint_words(b));
        Ok(a + b)
    }

    fn csub(&self, a: &BigInt, b: &BigInt, t: &mut OpTally) -> Result<BigInt> {
        t.c_add += bigint_words(a).max(bigint_words(b));
        Ok(a - b)
    }

    fn cmul(&self, a: &BigInt, b: &BigInt, t: &mut OpTally) -> Result<BigInt> {
        let (wa, wb) = (bigint_words(a), bigint_words(b));
        t.c_mul += wa * wb;
        t.c_add += 2 * wa * wb;
        Ok(a * b)
    }

    fn cdiv_exact(&self, a: &BigInt, b: &BigInt, t: &mut OpTally) -> Result<BigInt> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (wa, wb) = (bigint_words(a), bigint_words(b));
        let wq = (wa.saturating_sub(wb) + 1).max(1);
        t.c_div += wq;
        t.c_mul += wq * wb;
        t.c_add += 2 * wq * wb;
        let (q, r) = a.div_rem(b);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        Ok(q)
    }

    fn cfrom_i64(&self, v: i64) -> Result<BigInt> {
        Ok(BigInt::from(v))
    }

    fn ctext(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn csample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64, nonzero: bool) -> BigInt {
        BigInt::from(MachineIntRing.csample(rng, bound, nonzero))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn machine_int_counts_and_overflow() {
        let ring = MachineIntRing;
        let mut t = OpTally::new();
        assert_eq!(ring.mul(&7, &6, &mut t).unwrap(), 42);
        assert_eq!((t.n_mul, t.c_mul), (1, 1));
        assert_eq!(ring.exact_div(&42, &7, &mut t).unwrap(), 6);
        assert_eq!(ring.exact_div(&5, &2, &mut t), Err(Error::InexactDivision));
        assert_eq!(ring.exact_div(&5, &0, &mut t), Err(Error::DivisionByZero));
        assert_eq!(ring.mul(&i64::MAX, &2, &mut t), Err(Error::Overflow));
        assert_eq!(ring.neg(&i64::MIN), Err(Error::Overflow));
    }

    #[test]
    fn bigint_word_counting() {
        let ring = BigIntRing;
        let mut t = OpTally::new();
        let big = BigInt::from(1u64) << 200; // 4 words
        let small = BigInt::from(3);
        ring.cmul(&big, &small, &mut t).unwrap();
        assert_eq!(t.c_mul, 4);
        assert_eq!(t.c_add, 8);
        let mut t = OpTally::new();
        ring.cdiv_exact(&(&big * 3), &small, &mut t).unwrap();
        assert_eq!(t.c_div, 4);
    }

    #[test]
    fn bigint_exactness() {
        let ring = BigIntRing;
        let mut t = OpTally::new();
        let a = BigInt::from(91);
        let b = BigInt::from(7);
        assert_eq!(ring.cdiv_exact(&a, &b, &mut t).unwrap(), BigInt::from(13));
        assert_eq!(
            ring.cdiv_exact(&BigInt::from(5), &BigInt::from(2), &mut t),
            Err(Error::InexactDivision)
        );
    }
}
