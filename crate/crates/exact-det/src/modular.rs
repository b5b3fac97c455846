//! Modular determinant pipeline for integer and integer-polynomial matrices:
//! rigorous magnitude bounds, prime planning, per-prime (and per evaluation
//! point) determinants through the combined algorithm, Newton interpolation
//! over the prime field, and Chinese-remainder reconstruction with symmetric
//! lifting.
//!
//! Planning never relies on the published asymptotic moduli estimate; the
//! bounds here are rigorous, so reconstruction is exact by construction and
//! additionally validated by re-reduction. Every (prime, point) determinant
//! job is independent and side-effect-free.

use crate::complexity::auto_switch_point;
use crate::det::{det_combined, DetResult};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::primes::{default_prime_pool, is_prime};
use crate::ring::{bigint_words, BigIntRing, CoeffRing, MultiPoly, PolyRing, PrimeFieldRing, Ring};
use crate::tally::OpTally;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// Prime plan backing one modular determinant: enough word-sized primes for
/// the coefficient bound, plus per-variable evaluation grids sized by the
/// output degree bounds.
#[derive(Clone, Debug)]
pub struct ModulusPlan {
    pub primes: Vec<u64>,
    /// Evaluation-point count per variable, each degree bound + 1.
    pub points_per_variable: Vec<usize>,
    /// Rigorous bound on the magnitude of any determinant coefficient.
    pub coefficient_bound: BigInt,
    /// Per-variable degree bound of the determinant (n * input degree).
    pub degree_bounds: Vec<usize>,
}

/// Upper bound on |det A| from the product of Euclidean row norms, rounded
/// up to an integer: ceil(sqrt(prod_i sum_j a_ij^2)).
pub fn hadamard_bound(a: &Matrix<BigIntRing>) -> Result<BigInt> {
    a.require_square()?;
    let mut product = BigInt::from(1);
    for i in 0..a.rows() {
        let mut norm_sq = BigInt::zero();
        for j in 0..a.cols() {
            let v = a.at(i, j);
            norm_sq += v * v;
        }
        product *= norm_sq;
    }
    if product.is_zero() {
        return Ok(BigInt::zero());
    }
    let root = product.sqrt();
    Ok(if &root * &root < product { root + 1 } else { root })
}

fn bigint_pow(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Rigorous bound on every coefficient magnitude of det A for a polynomial
/// matrix with s variables, degree at most p per variable and coefficients
/// bounded by B: n! * B^n * (p+1)^(s(n-1)). Each of the n! permutation terms
/// is a product of n entries; a fixed output monomial collects at most
/// (p+1)^(s(n-1)) coefficient products, each of magnitude at most B^n.
pub fn coeff_bound_poly(a: &Matrix<PolyRing<BigIntRing>>) -> Result<BigInt> {
    let n = a.require_square()?;
    let s = a.ring().vars();
    let mut max_coeff = BigInt::zero();
    let mut p = 0usize;
    for e in a.entries() {
        for b in e.bounds() {
            p = p.max(*b);
        }
        for c in e.coeffs() {
            let m = c.abs();
            if m > max_coeff {
                max_coeff = m;
            }
        }
    }
    let mut factorial = BigInt::from(1);
    for k in 2..=n {
        factorial *= BigInt::from(k);
    }
    let bound = factorial
        * bigint_pow(&max_coeff, n)
        * bigint_pow(&BigInt::from(p as u64 + 1), s * (n.saturating_sub(1)));
    Ok(bound)
}

/// Evaluation grid of the requested size: 0, 1, -1, 2, -2, ...
pub fn grid_points(count: usize) -> Vec<i64> {
    (0..count)
        .map(|k| {
            let magnitude = k.div_ceil(2) as i64;
            if k % 2 == 1 {
                magnitude
            } else {
                -magnitude
            }
        })
        .collect()
}

/// Greedily selects the fewest leading pool primes whose product exceeds
/// twice the coefficient bound (the factor 2 accommodates signed results
/// under symmetric lifting), and validates the per-variable grids against
/// every chosen prime.
pub fn plan_moduli(
    bound: &BigInt,
    degree_bounds: &[usize],
    pool: Option<&[u64]>,
) -> Result<ModulusPlan> {
    if bound.is_negative() {
        return Err(Error::BadParameter("coefficient bound must be nonnegative".into()));
    }
    if let Some(pool) = pool {
        let mut seen = std::collections::HashSet::new();
        for &p in pool {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            if !seen.insert(p) {
                return Err(Error::NonCoprimeModuli);
            }
        }
    }
    let target = bound * 2;
    let mut primes = Vec::new();
    let mut product = BigInt::from(1);

    let push = |p: u64, primes: &mut Vec<u64>, product: &mut BigInt| {
        primes.push(p);
        *product *= BigInt::from(p);
    };
    match pool {
        Some(pool) => {
            let mut it = pool.iter().copied();
            while primes.is_empty() || product <= target {
                match it.next() {
                    Some(p) => push(p, &mut primes, &mut product),
                    None => return Err(Error::PoolExhausted),
                }
            }
        }
        None => {
            let mut it = default_prime_pool();
            while primes.is_empty() || product <= target {
                match it.next() {
                    Some(p) => push(p, &mut primes, &mut product),
                    None => return Err(Error::PoolExhausted),
                }
            }
        }
    }

    let points_per_variable: Vec<usize> = degree_bounds.iter().map(|d| d + 1).collect();
    // all grid values must stay pairwise distinct modulo every prime
    let max_magnitude =
        points_per_variable.iter().map(|&c| grid_points(c).iter().map(|v| v.abs()).max().unwrap_or(0)).max().unwrap_or(0);
    for &p in &primes {
        if (p as i128) <= 2 * max_magnitude as i128 {
            return Err(Error::CoincidentPoints);
        }
    }

    Ok(ModulusPlan {
        primes,
        points_per_variable,
        coefficient_bound: bound.clone(),
        degree_bounds: degree_bounds.to_vec(),
    })
}

/// Determinant over the prime field by the combined algorithm at the
/// count-optimal switch point (field division stands in for exact division,
/// same recurrences).
pub fn det_mod_prime(a: &Matrix<PrimeFieldRing>) -> Result<DetResult<PrimeFieldRing>> {
    let n = a.require_square()?;
    det_combined(a, auto_switch_point(n as u64) as usize)
}

/// Newton divided-difference interpolation over the prime field. Returns the
/// monomial coefficients (ascending degree, length = number of points) of
/// the unique polynomial through the given values.
pub fn interpolate_univariate(
    field: &PrimeFieldRing,
    xs: &[u64],
    ys: &[u64],
    t: &mut OpTally,
) -> Result<Vec<u64>> {
    if xs.is_empty() || xs.len() != ys.len() {
        return Err(Error::BadParameter(format!(
            "interpolation needs matching nonempty grids, got {} points and {} values",
            xs.len(),
            ys.len()
        )));
    }
    let k = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..k {
        for i in (j..k).rev() {
            let dx = field.csub(&xs[i], &xs[i - j], t)?;
            if dx == 0 {
                return Err(Error::CoincidentPoints);
            }
            let inv = field.inv(dx)?;
            let dy = field.csub(&coef[i], &coef[i - 1], t)?;
            coef[i] = field.cmul(&dy, &inv, t)?;
        }
    }
    // expand the Newton form to monomial coefficients
    let mut mono = vec![0u64; k];
    mono[0] = coef[k - 1];
    for i in (0..k - 1).rev() {
        // mono = mono * (x - xs[i]) + coef[i]; mono holds k-1-i coefficients
        for d in (0..k - 1 - i).rev() {
            let old = mono[d];
            let scaled = field.cmul(&old, &xs[i], t)?;
            mono[d + 1] = field.cadd(&mono[d + 1], &old, t)?;
            mono[d] = field.cneg(&scaled)?;
        }
        mono[0] = field.cadd(&mono[0], &coef[i], t)?;
    }
    Ok(mono)
}

fn poly_scale(
    ring: &PolyRing<PrimeFieldRing>,
    a: &MultiPoly<u64>,
    by: u64,
    t: &mut OpTally,
) -> Result<MultiPoly<u64>> {
    let terms: Result<Vec<(u64, Vec<usize>)>> = a
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let scaled = ring.base().cmul(c, &by, t)?;
            Ok((scaled, decode_exps(a.bounds(), i)))
        })
        .collect();
    ring.from_terms(&terms?)
}

fn decode_exps(bounds: &[usize], mut idx: usize) -> Vec<usize> {
    let mut exps = vec![0usize; bounds.len()];
    for v in (0..bounds.len()).rev() {
        let radix = bounds[v] + 1;
        exps[v] = idx % radix;
        idx /= radix;
    }
    exps
}

/// Multivariate interpolation: Newton along variable 0 with polynomial-valued
/// divided differences, recursing on the remaining variables. `values` is
/// dense over the grid tuples with variable 0 slowest.
fn interpolate_multi(
    field: &PrimeFieldRing,
    grids: &[Vec<u64>],
    values: &[u64],
    t: &mut OpTally,
) -> Result<MultiPoly<u64>> {
    let s = grids.len();
    debug_assert_eq!(values.len(), grids.iter().map(|g| g.len()).product::<usize>());
    if s == 1 {
        let mono = interpolate_univariate(field, &grids[0], values, t)?;
        let ring = PolyRing::new(*field, 1);
        let terms: Vec<(u64, Vec<usize>)> =
            mono.into_iter().enumerate().map(|(e, c)| (c, vec![e])).collect();
        return ring.from_terms(&terms);
    }
    let ring = PolyRing::new(*field, s);
    let l0 = grids[0].len();
    let chunk = values.len() / l0;
    let mut diffs: Vec<MultiPoly<u64>> = Vec::with_capacity(l0);
    for slice in values.chunks(chunk) {
        let sub = interpolate_multi(field, &grids[1..], slice, t)?;
        // lift to s variables with degree 0 in variable 0
        let terms: Vec<(u64, Vec<usize>)> = sub
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| {
                let mut e = vec![0usize];
                e.extend(decode_exps(sub.bounds(), i));
                (*c, e)
            })
            .collect();
        diffs.push(ring.from_terms(&terms)?);
    }
    let xs = &grids[0];
    for j in 1..l0 {
        for i in (j..l0).rev() {
            let dx = field.csub(&xs[i], &xs[i - j], t)?;
            if dx == 0 {
                return Err(Error::CoincidentPoints);
            }
            let inv = field.inv(dx)?;
            let dy = ring.sub(&diffs[i], &diffs[i - 1], t)?;
            diffs[i] = poly_scale(&ring, &dy, inv, t)?;
        }
    }
    let mut result = diffs[l0 - 1].clone();
    for i in (0..l0 - 1).rev() {
        let lin = ring.from_terms(&[
            (1u64, {
                let mut e = vec![0usize; s];
                e[0] = 1;
                e
            }),
            (field.cneg(&xs[i])?, vec![0usize; s]),
        ])?;
        let prod = ring.mul(&result, &lin, t)?;
        result = ring.add(&prod, &diffs[i], t)?;
    }
    Ok(result)
}

/// Incremental Chinese-remainder state: after folding k primes the value is
/// the canonical residue of the target modulo their product.
#[derive(Clone, Debug)]
pub struct ReconstructionState {
    value: BigInt,
    modulus: BigInt,
}

impl Default for ReconstructionState {
    fn default() -> Self {
        Self::new()
    }
}

impl ReconstructionState {
    pub fn new() -> Self {
        ReconstructionState { value: BigInt::zero(), modulus: BigInt::from(1) }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Folds one residue/prime pair into the state.
    pub fn fold(&mut self, residue: u64, prime: u64, t: &mut OpTally) -> Result<()> {
        let field = PrimeFieldRing::new(prime)?;
        let p = BigInt::from(prime);
        let m_mod_p = self.modulus.mod_floor(&p).to_u64().expect("fits word");
        if m_mod_p == 0 {
            return Err(Error::NonCoprimeModuli);
        }
        let v_mod_p = self.value.mod_floor(&p).to_u64().expect("fits word");
        let delta = field.csub(&(residue % prime), &v_mod_p, t)?;
        let k = field.cmul(&delta, &field.inv(m_mod_p)?, t)?;
        let big = BigIntRing;
        let step = big.cmul(&self.modulus, &BigInt::from(k), t)?;
        self.value = big.cadd(&self.value, &step, t)?;
        self.modulus *= &p;
        debug_assert!(self.value >= BigInt::zero() && self.value < self.modulus);
        Ok(())
    }
}

/// Representative of a residue in the symmetric range (-m/2, m/2].
pub fn symmetric_lift(residue: &BigInt, modulus: &BigInt) -> BigInt {
    if residue * 2 > *modulus {
        residue - modulus
    } else {
        residue.clone()
    }
}

/// Full modular determinant outcome: the exact value plus the plan and the
/// separated operation tallies. `det_tally` covers only the per-prime
/// determinant work, the quantity the cost comparison is about;
/// `conversion_tally` covers reduction, evaluation, interpolation and
/// reconstruction, reported separately.
#[derive(Clone, Debug)]
pub struct ModularReport<V> {
    pub value: V,
    pub plan: ModulusPlan,
    pub det_tally: OpTally,
    pub conversion_tally: OpTally,
    /// Number of (prime, evaluation-point) determinant jobs executed.
    pub jobs: usize,
    pub pivot_events: usize,
}

/// Exact determinant of an integer matrix by the modular method.
pub fn det_modular_int(
    a: &Matrix<BigIntRing>,
    pool: Option<&[u64]>,
) -> Result<ModularReport<BigInt>> {
    a.require_square()?;
    let bound = hadamard_bound(a)?;
    let plan = plan_moduli(&bound, &[], pool)?;
    let mut det_tally = OpTally::new();
    let mut conversion = OpTally::new();
    let mut jobs = 0usize;
    let mut pivot_events = 0usize;
    let mut residues: Vec<(u64, u64)> = Vec::with_capacity(plan.primes.len());

    for &prime in &plan.primes {
        let field = PrimeFieldRing::new(prime)?;
        let reduced = a.map(field, |v| {
            conversion.c_div += bigint_words(v);
            field.reduce_bigint(v)
        });
        let res = det_mod_prime(&reduced)?;
        det_tally.merge_from(&res.tally);
        jobs += 1;
        if res.pivoted() {
            pivot_events += 1;
        }
        residues.push((prime, res.value));
    }

    let mut state = ReconstructionState::new();
    for &(prime, residue) in &residues {
        state.fold(residue, prime, &mut conversion)?;
    }
    let value = symmetric_lift(state.value(), state.modulus());

    for &(prime, residue) in &residues {
        if value.mod_floor(&BigInt::from(prime)).to_u64() != Some(residue) {
            return Err(Error::ReconstructionMismatch);
        }
    }

    Ok(ModularReport { value, plan, det_tally, conversion_tally: conversion, jobs, pivot_events })
}

/// Exact determinant of an integer-coefficient polynomial matrix by
/// evaluation, per-prime determinants, interpolation and CRT. A matrix with
/// zero variables takes the integer path (no interpolation).
pub fn det_modular_poly(
    a: &Matrix<PolyRing<BigIntRing>>,
    pool: Option<&[u64]>,
) -> Result<ModularReport<MultiPoly<BigInt>>> {
    let n = a.require_square()?;
    let s = a.ring().vars();
    let out_ring = PolyRing::new(BigIntRing, s);

    if s == 0 {
        let ints = a.map(BigIntRing, |p| p.constant_value().clone());
        let report = det_modular_int(&ints, pool)?;
        return Ok(ModularReport {
            value: out_ring.constant(report.value),
            plan: report.plan,
            det_tally: report.det_tally,
            conversion_tally: report.conversion_tally,
            jobs: report.jobs,
            pivot_events: report.pivot_events,
        });
    }

    let mut p_cap = 0usize;
    for e in a.entries() {
        for &b in e.bounds() {
            p_cap = p_cap.max(b);
        }
    }
    let bound = coeff_bound_poly(a)?;
    let degree_bounds = vec![n * p_cap; s];
    let plan = plan_moduli(&bound, &degree_bounds, pool)?;

    let mut det_tally = OpTally::new();
    let mut conversion = OpTally::new();
    let mut jobs = 0usize;
    let mut pivot_events = 0usize;
    let mut per_prime: Vec<(u64, MultiPoly<u64>)> = Vec::with_capacity(plan.primes.len());

    for &prime in &plan.primes {
        let field = PrimeFieldRing::new(prime)?;
        let mod_ring = PolyRing::new(field, s);
        let reduced: Vec<MultiPoly<u64>> = a
            .entries()
            .iter()
            .map(|e| {
                let terms: Vec<(u64, Vec<usize>)> = e
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        conversion.c_div += bigint_words(c);
                        (field.reduce_bigint(c), decode_exps(e.bounds(), i))
                    })
                    .collect();
                mod_ring.from_terms(&terms)
            })
            .collect::<Result<_>>()?;

        let grids: Vec<Vec<u64>> = plan
            .points_per_variable
            .iter()
            .map(|&count| grid_points(count).into_iter().map(|v| field.reduce_i64(v)).collect())
            .collect();

        // dense tuple sweep, variable 0 slowest (matching interpolation)
        let total: usize = plan.points_per_variable.iter().product();
        let mut values = Vec::with_capacity(total);
        let mut tuple = vec![0usize; s];
        for flat in 0..total {
            let mut rem = flat;
            for v in (0..s).rev() {
                tuple[v] = rem % plan.points_per_variable[v];
                rem /= plan.points_per_variable[v];
            }
            let pts: Vec<u64> = (0..s).map(|v| grids[v][tuple[v]]).collect();
            let scalar_entries: Vec<u64> = reduced
                .iter()
                .map(|e| eval_at_tuple(&mod_ring, e, &pts, &mut conversion))
                .collect::<Result<_>>()?;
            let scalar_matrix = Matrix::new(field, n, n, scalar_entries)?;
            let res = det_mod_prime(&scalar_matrix)?;
            det_tally.merge_from(&res.tally);
            jobs += 1;
            if res.pivoted() {
                pivot_events += 1;
            }
            values.push(res.value);
        }

        let interpolated = interpolate_multi(&field, &grids, &values, &mut conversion)?;
        per_prime.push((prime, interpolated));
    }

    // CRT per coefficient slot over the full degree-bound box
    let box_total: usize = degree_bounds.iter().map(|d| d + 1).product();
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(box_total);
    for flat in 0..box_total {
        let exps = decode_exps(&degree_bounds, flat);
        let mut state = ReconstructionState::new();
        for (prime, poly) in &per_prime {
            let residue = poly.coeff_at(&exps, &0u64);
            state.fold(residue, *prime, &mut conversion)?;
        }
        coeffs.push(symmetric_lift(state.value(), state.modulus()));
    }
    let value = out_ring.normalize(raw_poly(degree_bounds.clone(), coeffs));

    // validation: the reconstruction must re-reduce to each prime's result
    for (prime, poly) in &per_prime {
        let field = PrimeFieldRing::new(*prime)?;
        for flat in 0..box_total {
            let exps = decode_exps(&degree_bounds, flat);
            let lifted = value.coeff_at(&exps, &BigInt::zero());
            if field.reduce_bigint(&lifted) != poly.coeff_at(&exps, &0u64) {
                return Err(Error::ReconstructionMismatch);
            }
        }
    }

    Ok(ModularReport { value, plan, det_tally, conversion_tally: conversion, jobs, pivot_events })
}

fn raw_poly(bounds: Vec<usize>, coeffs: Vec<BigInt>) -> MultiPoly<BigInt> {
    // from_terms would re-accumulate; build through the ring to keep the
    // normalized invariant
    let ring = PolyRing::new(BigIntRing, bounds.len());
    let terms: Vec<(BigInt, Vec<usize>)> = coeffs
        .into_iter()
        .enumerate()
        .map(|(i, c)| (c, decode_exps(&bounds, i)))
        .collect();
    ring.from_terms(&terms).expect("consistent shape")
}

fn eval_at_tuple(
    ring: &PolyRing<PrimeFieldRing>,
    e: &MultiPoly<u64>,
    pts: &[u64],
    t: &mut OpTally,
) -> Result<u64> {
    let mut cur = e.clone();
    let mut r = *ring;
    for &pt in pts {
        cur = r.poly_eval(&cur, 0, &pt, t)?;
        r = PolyRing::new(*r.base(), r.vars() - 1);
    }
    Ok(*cur.constant_value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::det::{det_dodgson, det_one_pass, det_oracle};
    use rand::Rng;
    use rand::SeedableRng;

    fn bigint_matrix(rows: &[Vec<i64>]) -> Matrix<BigIntRing> {
        Matrix::from_i64_rows(BigIntRing, rows).unwrap()
    }

    #[test]
    fn hadamard_examples() {
        let id = bigint_matrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(hadamard_bound(&id).unwrap(), BigInt::from(1));
        let m = bigint_matrix(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(hadamard_bound(&m).unwrap(), BigInt::from(12));
        let z = bigint_matrix(&[vec![0, 0], vec![0, 0]]);
        assert_eq!(hadamard_bound(&z).unwrap(), BigInt::from(0));
    }

    #[test]
    fn poly_coeff_bound_examples() {
        let r1 = PolyRing::new(BigIntRing, 1);
        let single = Matrix::from_rows(
            r1,
            vec![vec![r1.from_terms(&[(BigInt::from(7), vec![1])]).unwrap()]],
        )
        .unwrap();
        assert_eq!(coeff_bound_poly(&single).unwrap(), BigInt::from(7));

        let zero = Matrix::from_rows(r1, vec![vec![r1.zero_poly()]]).unwrap();
        assert_eq!(coeff_bound_poly(&zero).unwrap(), BigInt::from(0));
    }

    #[test]
    fn poly_coeff_bound_dominates_exhaustive_2x2() {
        // all 2x2 matrices of degree-1 polynomials with coefficients in
        // {-1, 0, 1}: the bound 2 * 1^2 * (1+1)^1 = 4 must dominate
        let r1 = PolyRing::new(BigIntRing, 1);
        let mut max_seen = BigInt::zero();
        let vals = [-1i64, 0, 1];
        let mut t = OpTally::new();
        for a0 in vals {
            for a1 in vals {
                for b0 in vals {
                    for b1 in vals {
                        for c0 in vals {
                            for c1 in vals {
                                for d0 in vals {
                                    for d1 in vals {
                                        let poly = |x: i64, y: i64| {
                                            r1.from_terms(&[
                                                (BigInt::from(x), vec![0]),
                                                (BigInt::from(y), vec![1]),
                                            ])
                                            .unwrap()
                                        };
                                        let ad = r1.poly_mul(&poly(a0, a1), &poly(d0, d1), &mut t).unwrap();
                                        let bc = r1.poly_mul(&poly(b0, b1), &poly(c0, c1), &mut t).unwrap();
                                        let det = r1.sub(&ad, &bc, &mut t).unwrap();
                                        for c in det.coeffs() {
                                            let m = c.abs();
                                            if m > max_seen {
                                                max_seen = m.clone();
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        // the bound 4 is attained (e.g. (1+x)(1+x) - (-1+x)(-1+x) = 4x)
        assert_eq!(max_seen, BigInt::from(4));
        // any matrix from that family has bound 4
        let m = Matrix::from_rows(
            r1,
            vec![
                vec![
                    r1.from_terms(&[(BigInt::from(1), vec![0]), (BigInt::from(1), vec![1])]).unwrap(),
                    r1.from_terms(&[(BigInt::from(-1), vec![1])]).unwrap(),
                ],
                vec![
                    r1.from_terms(&[(BigInt::from(1), vec![1])]).unwrap(),
                    r1.from_terms(&[(BigInt::from(1), vec![0]), (BigInt::from(-1), vec![1])]).unwrap(),
                ],
            ],
        )
        .unwrap();
        assert_eq!(coeff_bound_poly(&m).unwrap(), BigInt::from(4));
    }

    #[test]
    fn plan_examples() {
        let m = bigint_matrix(&[vec![1, 2], vec![3, 4]]);
        let bound = hadamard_bound(&m).unwrap();
        let plan = plan_moduli(&bound, &[], Some(&[7, 5, 3])).unwrap();
        assert_eq!(plan.primes, vec![7, 5]); // 35 > 24
        // greedy minimality: dropping the last prime no longer clears 2*bound
        assert!(BigInt::from(7) <= &bound * 2);

        let id = bigint_matrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let plan = plan_moduli(&hadamard_bound(&id).unwrap(), &[], None).unwrap();
        assert_eq!(plan.primes.len(), 1);

        // polynomial shape: s=1, p=1, n=3 means one grid of 4 points
        let plan = plan_moduli(&BigInt::from(100), &[3], None).unwrap();
        assert_eq!(plan.points_per_variable, vec![4]);
        assert_eq!(plan.degree_bounds, vec![3]);

        assert_eq!(
            plan_moduli(&BigInt::from(100), &[], Some(&[3])).unwrap_err(),
            Error::PoolExhausted
        );
        assert_eq!(plan_moduli(&BigInt::from(1), &[], Some(&[9])).unwrap_err(), Error::NotPrime(9));
        assert_eq!(
            plan_moduli(&BigInt::from(100), &[], Some(&[7, 7, 5])).unwrap_err(),
            Error::NonCoprimeModuli
        );
    }

    #[test]
    fn det_mod_prime_examples() {
        let f7 = PrimeFieldRing::new(7).unwrap();
        let m = Matrix::from_i64_rows(f7, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(det_mod_prime(&m).unwrap().value, 5); // -2 mod 7

        let id = Matrix::from_i64_rows(f7, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(det_mod_prime(&id).unwrap().value, 1);

        let singular = Matrix::from_i64_rows(f7, &[vec![1, 2], vec![1, 2]]).unwrap();
        assert_eq!(det_mod_prime(&singular).unwrap().value, 0);
    }

    #[test]
    fn interpolation_examples() {
        let f7 = PrimeFieldRing::new(7).unwrap();
        let mut t = OpTally::new();
        // constant
        assert_eq!(interpolate_univariate(&f7, &[0, 1, 2], &[3, 3, 3], &mut t).unwrap(), vec![3, 0, 0]);
        // f(x) = x^2 on {0, 1, 2}
        assert_eq!(interpolate_univariate(&f7, &[0, 1, 2], &[0, 1, 4], &mut t).unwrap(), vec![0, 0, 1]);
        // single point
        assert_eq!(interpolate_univariate(&f7, &[5], &[2], &mut t).unwrap(), vec![2]);
        // coincident points
        assert_eq!(
            interpolate_univariate(&f7, &[1, 1], &[2, 3], &mut t),
            Err(Error::CoincidentPoints)
        );
    }

    #[test]
    fn evaluate_interpolate_round_trip() {
        let prime = 1_000_003u64;
        let field = PrimeFieldRing::new(prime).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut t = OpTally::new();
        for _ in 0..20 {
            let deg = rng.gen_range(0..=4usize);
            let coeffs: Vec<u64> = (0..=deg).map(|_| rng.gen_range(0..prime)).collect();
            let xs: Vec<u64> = grid_points(deg + 1).iter().map(|&v| field.reduce_i64(v)).collect();
            let ys: Vec<u64> = xs
                .iter()
                .map(|&x| {
                    let mut acc = 0u64;
                    for c in coeffs.iter().rev() {
                        acc = field.cmul(&acc, &x, &mut t).unwrap();
                        acc = field.cadd(&acc, c, &mut t).unwrap();
                    }
                    acc
                })
                .collect();
            let mono = interpolate_univariate(&field, &xs, &ys, &mut t).unwrap();
            assert_eq!(&mono[..coeffs.len()], &coeffs[..]);
            assert!(mono[coeffs.len()..].iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn crt_examples() {
        let mut t = OpTally::new();
        let mut state = ReconstructionState::new();
        state.fold(2, 3, &mut t).unwrap();
        assert_eq!(state.value(), &BigInt::from(2)); // single prime: the residue
        state.fold(3, 5, &mut t).unwrap();
        assert_eq!(state.value(), &BigInt::from(8));
        assert_eq!(state.modulus(), &BigInt::from(15));
        assert_eq!(state.fold(1, 3, &mut t), Err(Error::NonCoprimeModuli));

        assert_eq!(symmetric_lift(&BigInt::from(13), &BigInt::from(15)), BigInt::from(-2));
        assert_eq!(symmetric_lift(&BigInt::from(7), &BigInt::from(15)), BigInt::from(7));
    }

    #[test]
    fn modular_int_examples() {
        let m = bigint_matrix(&[vec![1, 2], vec![3, 4]]);
        let report = det_modular_int(&m, None).unwrap();
        assert_eq!(report.value, BigInt::from(-2));
        assert_eq!(report.jobs, report.plan.primes.len());
        assert!(report.conversion_tally.c_div > 0);

        // same result through a small explicit pool
        let report = det_modular_int(&m, Some(&[7, 5, 3])).unwrap();
        assert_eq!(report.value, BigInt::from(-2));
        assert_eq!(report.plan.primes, vec![7, 5]);
    }

    #[test]
    fn modular_int_matches_direct_on_random_5x5() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..5 {
            let m = Matrix::random(BigIntRing, 5, 5, &mut rng, 1_000_000).unwrap();
            let direct = det_dodgson(&m).unwrap().value;
            let report = det_modular_int(&m, None).unwrap();
            assert_eq!(report.value, direct);
            assert!(direct.abs() <= hadamard_bound(&m).unwrap());
        }
    }

    #[test]
    fn modular_poly_matches_symbolic_3x3() {
        let r1 = PolyRing::new(BigIntRing, 1);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..3 {
            let m = Matrix::from_rows(
                r1,
                (0..3)
                    .map(|_| (0..3).map(|_| r1.sample_dense(&mut rng, 1, 9)).collect())
                    .collect(),
            )
            .unwrap();
            let direct = det_one_pass(&m).unwrap().value;
            let report = det_modular_poly(&m, None).unwrap();
            assert_eq!(report.value, direct);
        }
    }

    #[test]
    fn modular_poly_two_variables() {
        let r2 = PolyRing::new(BigIntRing, 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let m = Matrix::from_rows(
            r2,
            (0..3).map(|_| (0..3).map(|_| r2.sample_dense(&mut rng, 2, 5)).collect()).collect(),
        )
        .unwrap();
        let direct = det_one_pass(&m).unwrap().value;
        let report = det_modular_poly(&m, None).unwrap();
        assert_eq!(report.value, direct);
        // reconstructed coefficients respect the bound
        let bound = coeff_bound_poly(&m).unwrap();
        for c in report.value.coeffs() {
            assert!(c.abs() <= bound);
        }
    }

    #[test]
    fn modular_poly_zero_variable_path() {
        let r0 = PolyRing::new(BigIntRing, 0);
        let m = Matrix::from_rows(
            r0,
            vec![
                vec![r0.constant(BigInt::from(1)), r0.constant(BigInt::from(2))],
                vec![r0.constant(BigInt::from(3)), r0.constant(BigInt::from(4))],
            ],
        )
        .unwrap();
        let report = det_modular_poly(&m, None).unwrap();
        assert_eq!(*report.value.constant_value(), BigInt::from(-2));
    }

    #[test]
    fn modular_matches_oracle_on_singular_matrix() {
        let m = bigint_matrix(&[vec![1, 2, 3], vec![2, 4, 6], vec![5, 1, 0]]);
        assert_eq!(det_oracle(&m).unwrap(), BigInt::from(0));
        assert_eq!(det_modular_int(&m, None).unwrap().value, BigInt::from(0));
    }
}
