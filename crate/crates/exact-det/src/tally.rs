//! Operation counters at two granularities: ring-level operations as the
//! determinant algorithms see them (`n_*`), and the coefficient- or
//! word-level operations performed inside polynomial and long-integer
//! arithmetic (`c_*`).
//!
//! A tally is single-owner: concurrent computations each keep their own and
//! merge afterwards.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpTally {
    pub n_mul: u64,
    pub n_div: u64,
    pub n_add: u64,
    pub c_mul: u64,
    pub c_div: u64,
    pub c_add: u64,
}

impl OpTally {
    pub const fn new() -> Self {
        OpTally { n_mul: 0, n_div: 0, n_add: 0, c_mul: 0, c_div: 0, c_add: 0 }
    }

    /// Componentwise sum; associative and commutative with `new()` as identity.
    pub fn merge(mut self, other: &OpTally) -> OpTally {
        self.merge_from(other);
        self
    }

    pub fn merge_from(&mut self, other: &OpTally) {
        self.n_mul += other.n_mul;
        self.n_div += other.n_div;
        self.n_add += other.n_add;
        self.c_mul += other.c_mul;
        self.c_div += other.c_div;
        self.c_add += other.c_add;
    }

    /// Ring-level triple (multiplications, divisions, additions/subtractions).
    pub fn ring_triple(&self) -> (u64, u64, u64) {
        (self.n_mul, self.n_div, self.n_add)
    }
}
