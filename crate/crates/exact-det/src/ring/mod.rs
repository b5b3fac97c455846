//! Integral-domain element contracts and the concrete rings the determinant
//! algorithms run over.
//!
//! Counting happens at two layers. [`CoeffRing`] operations tally only
//! coefficient-level work (`c_mul`/`c_div`/`c_add`); they are what polynomial
//! arithmetic calls internally. [`Ring`] operations are what the determinant
//! algorithms call: each one additionally tallies exactly one ring-level
//! operation (`n_mul`/`n_div`/`n_add`). Scalar rings implement [`CoeffRing`]
//! and get the [`Ring`] view through a blanket impl, so a machine integer
//! multiply counts one `n_mul` and one `c_mul`, while a polynomial multiply
//! counts one `n_mul` and one `c_mul` per coefficient product formed.
//!
//! Elements are immutable after construction and safe to share across
//! threads; tallies are single-owner.

mod int;
mod poly;
mod prime_field;

pub(crate) use int::bigint_words;
pub use int::{BigIntRing, MachineIntRing};
pub use poly::{MultiPoly, PolyRing};
pub use prime_field::PrimeFieldRing;

use crate::error::Result;
use crate::tally::OpTally;
use rand::Rng;
use std::fmt::Debug;

/// A coefficient domain: operations count at coefficient/word granularity.
pub trait CoeffRing: Clone + Send + Sync {
    type Coeff: Clone + PartialEq + Debug + Send + Sync;

    fn czero(&self) -> Self::Coeff;
    fn cone(&self) -> Self::Coeff;
    fn cis_zero(&self, a: &Self::Coeff) -> bool;
    /// Negation is treated as free (sign bookkeeping, not arithmetic).
    fn cneg(&self, a: &Self::Coeff) -> Result<Self::Coeff>;
    fn cadd(&self, a: &Self::Coeff, b: &Self::Coeff, t: &mut OpTally) -> Result<Self::Coeff>;
    fn csub(&self, a: &Self::Coeff, b: &Self::Coeff, t: &mut OpTally) -> Result<Self::Coeff>;
    fn cmul(&self, a: &Self::Coeff, b: &Self::Coeff, t: &mut OpTally) -> Result<Self::Coeff>;
    /// Division that must be exact in the domain; `InexactDivision` otherwise.
    fn cdiv_exact(&self, a: &Self::Coeff, b: &Self::Coeff, t: &mut OpTally)
        -> Result<Self::Coeff>;
    fn cfrom_i64(&self, v: i64) -> Result<Self::Coeff>;
    fn ctext(&self, a: &Self::Coeff) -> String;
    /// Uniform sample with |value| <= bound (or a uniform field element).
    fn csample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64, nonzero: bool) -> Self::Coeff;
}

/// An integral-domain element contract as the determinant algorithms use it.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem>;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem>;
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem>;
    /// Canonical text form, also used for result digests.
    fn text(&self, a: &Self::Elem) -> String;
    /// Element construction needs the ring context (modulus, variable count).
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Result<Self::Elem>;
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Self::Elem;
}

// Every scalar coefficient ring is itself a ring; its ring-level ops count
// one n_* each on top of the coefficient-level tally.
impl<C: CoeffRing> Ring for C {
    type Elem = C::Coeff;

    fn zero(&self) -> Self::Elem {
        self.czero()
    }

    fn one(&self) -> Self::Elem {
        self.cone()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.cis_zero(a)
    }

    fn neg(&self, a: &Self::Elem) -> Result<Self::Elem> {
        self.cneg(a)
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem> {
        t.n_add += 1;
        self.cadd(a, b, t)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem> {
        t.n_add += 1;
        self.csub(a, b, t)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem> {
        t.n_mul += 1;
        self.cmul(a, b, t)
    }

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem> {
        t.n_div += 1;
        self.cdiv_exact(a, b, t)
    }

    fn text(&self, a: &Self::Elem) -> String {
        self.ctext(a)
    }

    fn from_i64(&self, v: i64) -> Result<Self::Elem> {
        self.cfrom_i64(v)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Self::Elem {
        self.csample(rng, bound, false)
    }
}
