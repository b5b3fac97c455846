//! Fraction-free determinant algorithms over an integral domain: repeated
//! condensation of surrounding minors, the one-pass minor-by-minor scheme,
//! and the combined scheme that switches from one to the other at order r.
//!
//! All three maintain the invariant that every corner minor of order below n
//! is nonzero, enforced by row pivoting with sign tracking. Every division
//! they perform is exact in the ring; an `InexactDivision` escaping one of
//! these routines indicates a bug, not a data condition.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::Ring;
use crate::tally::OpTally;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Dodgson,
    OnePass,
    Combined,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Dodgson => "dodgson",
            Algorithm::OnePass => "one-pass",
            Algorithm::Combined => "combined",
        }
    }
}

/// Result of a determinant computation. The value is the determinant of the
/// original matrix: the sign of any row interchanges is already folded in.
#[derive(Clone, Debug)]
pub struct DetResult<R: Ring> {
    pub value: R::Elem,
    pub algorithm: Algorithm,
    /// Switch point actually used by the combined scheme (1 means it ran as
    /// pure condensation, n-1 as pure one-pass).
    pub switch_r: Option<usize>,
    /// Row interchanges applied, as (position, row brought in) pairs.
    pub pivot_log: Vec<(usize, usize)>,
    /// True when pivot exhaustion proved the determinant zero before the
    /// final step; operation counts are then not comparable to the
    /// closed-form models.
    pub early_zero: bool,
    pub tally: OpTally,
}

impl<R: Ring> DetResult<R> {
    /// A pivot event invalidates count-formula comparison for this run.
    pub fn pivoted(&self) -> bool {
        !self.pivot_log.is_empty() || self.early_zero
    }
}

/// Result of rectangular condensation: the determinant of the leading n
/// columns followed by the column-substituted minors for each extra column.
#[derive(Clone, Debug)]
pub struct RectResult<R: Ring> {
    pub values: Vec<R::Elem>,
    pub pivot_log: Vec<(usize, usize)>,
    pub early_zero: bool,
    pub tally: OpTally,
}

struct CondensationState<R: Ring> {
    last_row: Vec<R::Elem>,
    sign_neg: bool,
    pivot_log: Vec<(usize, usize)>,
    early_zero: bool,
}

/// Condensation of surrounding minors on an n x m working matrix (m >= n).
/// After step k the working entry (i, j) is the order-(k+1) minor on rows
/// 1..k,i and columns 1..k,j of the row-permuted input. Step 1 is division
/// free; later steps divide exactly by the previous corner minor.
fn condensation_engine<R: Ring>(
    input: &Matrix<R>,
    t: &mut OpTally,
    mut observe: impl FnMut(usize, &Matrix<R>),
) -> Result<CondensationState<R>> {
    let ring = input.ring().clone();
    let n = input.rows();
    let m = input.cols();
    debug_assert!(m >= n);
    let mut w = input.clone();
    let mut sign_neg = false;
    let mut pivot_log = Vec::new();
    let mut prev_corner: Option<R::Elem> = None;

    for step in 0..n.saturating_sub(1) {
        if ring.is_zero(w.at(step, step)) {
            match (step + 1..n).find(|&i| !ring.is_zero(w.at(i, step))) {
                Some(i) => {
                    w.swap_rows(step, i);
                    sign_neg = !sign_neg;
                    pivot_log.push((step, i));
                }
                None => {
                    // the leading step+1 columns are linearly dependent, so
                    // every order-n minor containing them vanishes
                    return Ok(CondensationState {
                        last_row: vec![ring.zero(); m - n + 1],
                        sign_neg,
                        pivot_log,
                        early_zero: true,
                    });
                }
            }
        }
        let corner = w.at(step, step).clone();
        for i in step + 1..n {
            for j in step + 1..m {
                let lhs = ring.mul(&corner, w.at(i, j), t)?;
                let rhs = ring.mul(w.at(i, step), w.at(step, j), t)?;
                let num = ring.sub(&lhs, &rhs, t)?;
                let next = match &prev_corner {
                    None => num,
                    Some(d) => ring.exact_div(&num, d, t)?,
                };
                w.set(i, j, next);
            }
        }
        prev_corner = Some(corner);
        observe(step, &w);
    }

    let last_row = (n - 1..m).map(|j| w.at(n - 1, j).clone()).collect();
    Ok(CondensationState { last_row, sign_neg, pivot_log, early_zero: false })
}

fn fold_sign<R: Ring>(ring: &R, v: R::Elem, sign_neg: bool) -> Result<R::Elem> {
    if sign_neg {
        ring.neg(&v)
    } else {
        Ok(v)
    }
}

/// Exact determinant by condensation (n-1 steps of surrounding minors).
pub fn det_dodgson<R: Ring>(a: &Matrix<R>) -> Result<DetResult<R>> {
    a.require_square()?;
    let mut tally = OpTally::new();
    let state = condensation_engine(a, &mut tally, |_, _| {})?;
    let value = fold_sign(a.ring(), state.last_row.into_iter().next().unwrap(), state.sign_neg)?;
    Ok(DetResult {
        value,
        algorithm: Algorithm::Dodgson,
        switch_r: None,
        pivot_log: state.pivot_log,
        early_zero: state.early_zero,
        tally,
    })
}

/// Rectangular condensation: for an n x m input (m >= n) returns the
/// determinant of the leading n columns followed by the minors with column n
/// replaced by each of columns n+1..m, enabling Cramer-style exact solving.
pub fn det_dodgson_rect<R: Ring>(a: &Matrix<R>) -> Result<RectResult<R>> {
    if a.cols() < a.rows() {
        return Err(Error::ColumnsBelowRows { rows: a.rows(), cols: a.cols() });
    }
    let mut tally = OpTally::new();
    let state = condensation_engine(a, &mut tally, |_, _| {})?;
    let ring = a.ring();
    let values: Result<Vec<R::Elem>> =
        state.last_row.into_iter().map(|v| fold_sign(ring, v, state.sign_neg)).collect();
    Ok(RectResult {
        values: values?,
        pivot_log: state.pivot_log,
        early_zero: state.early_zero,
        tally,
    })
}

struct OnePassPhase<R: Ring> {
    /// Row-permuted working copy of the input.
    a: Matrix<R>,
    /// table[p][j] holds the order-q substituted minor with column p+1
    /// replaced by column j+1, valid for p < q and j >= q.
    table: Vec<Vec<R::Elem>>,
    /// Corner minor of order q.
    corner: R::Elem,
    sign_neg: bool,
    pivot_log: Vec<(usize, usize)>,
    early_zero: bool,
}

/// Runs one-pass steps until the substituted-minor table reaches order
/// `stop` (2 <= stop <= n). Corners of every order below n are kept nonzero
/// by row pivoting; a zero corner of order n is the determinant itself.
fn one_pass_phase<R: Ring>(
    input: &Matrix<R>,
    stop: usize,
    t: &mut OpTally,
    mut observe: impl FnMut(usize, &[Vec<R::Elem>], &R::Elem),
) -> Result<OnePassPhase<R>> {
    let ring = input.ring().clone();
    let n = input.rows();
    debug_assert!((2..=n).contains(&stop));
    let mut a = input.clone();
    let mut sign_neg = false;
    let mut pivot_log = Vec::new();

    let early = |a: Matrix<R>, sign_neg, pivot_log| OnePassPhase {
        a,
        table: Vec::new(),
        corner: ring.zero(),
        sign_neg,
        pivot_log,
        early_zero: true,
    };

    // order-1 corner: required nonzero before any later pivot search can
    // conclude anything from exhaustion
    if n >= 3 && ring.is_zero(a.at(0, 0)) {
        match (1..n).find(|&i| !ring.is_zero(a.at(i, 0))) {
            Some(i) => {
                a.swap_rows(0, i);
                sign_neg = !sign_neg;
                pivot_log.push((0, i));
            }
            None => return Ok(early(a, sign_neg, pivot_log)), // zero first column
        }
    }

    // order-1 state: corner a_11, row 0 of the substituted-minor table is
    // row 1 of the matrix itself
    let mut table: Vec<Vec<R::Elem>> = vec![vec![ring.zero(); n]; n];
    for j in 0..n {
        table[0][j] = a.at(0, j).clone();
    }
    let mut corner = a.at(0, 0).clone();

    for q in 2..=stop {
        // extension row: order-q minors from row q of the matrix and the
        // order-(q-1) table; q multiplications and q-1 subtractions each
        let mut ext: Vec<R::Elem>;
        let mut candidate = q; // next untried row position for pivoting
        loop {
            ext = vec![ring.zero(); n];
            for j in q - 1..n {
                let mut acc = ring.mul(a.at(q - 1, j), &corner, t)?;
                for p in 0..q - 1 {
                    let term = ring.mul(a.at(q - 1, p), &table[p][j], t)?;
                    acc = ring.sub(&acc, &term, t)?;
                }
                ext[j] = acc;
            }
            if q == n || !ring.is_zero(&ext[q - 1]) {
                break;
            }
            if candidate >= n {
                // every remaining row extends to a singular corner: the
                // leading q columns are linearly dependent
                return Ok(early(a, sign_neg, pivot_log));
            }
            a.swap_rows(q - 1, candidate);
            sign_neg = !sign_neg;
            pivot_log.push((q - 1, candidate));
            candidate += 1;
        }

        if q == 2 {
            // division-free second family of order-2 minors
            for j in 2..n {
                let lhs = ring.mul(a.at(0, j), a.at(1, 1), t)?;
                let rhs = ring.mul(a.at(1, j), a.at(0, 1), t)?;
                table[0][j] = ring.sub(&lhs, &rhs, t)?;
            }
        } else {
            // division update: order-q substituted minors for rows above,
            // dividing exactly by the order-(q-1) corner
            for p in 0..q - 1 {
                for j in q..n {
                    let lhs = ring.mul(&ext[q - 1], &table[p][j], t)?;
                    let rhs = ring.mul(&ext[j], &table[p][q - 1], t)?;
                    let num = ring.sub(&lhs, &rhs, t)?;
                    table[p][j] = ring.exact_div(&num, &corner, t)?;
                }
            }
        }
        corner = ext[q - 1].clone();
        table[q - 1][q..n].clone_from_slice(&ext[q..n]);
        observe(q, &table, &corner);
    }

    Ok(OnePassPhase { a, table, corner, sign_neg, pivot_log, early_zero: false })
}

/// Exact determinant by the one-pass scheme: diagonalisation minor-by-minor,
/// keeping the whole substituted-minor table and extending one row per step.
pub fn det_one_pass<R: Ring>(a: &Matrix<R>) -> Result<DetResult<R>> {
    let n = a.require_square()?;
    let mut tally = OpTally::new();
    if n == 1 {
        return Ok(DetResult {
            value: a.at(0, 0).clone(),
            algorithm: Algorithm::OnePass,
            switch_r: None,
            pivot_log: Vec::new(),
            early_zero: false,
            tally,
        });
    }
    let phase = one_pass_phase(a, n, &mut tally, |_, _, _| {})?;
    let value = if phase.early_zero {
        a.ring().zero()
    } else {
        fold_sign(a.ring(), phase.corner, phase.sign_neg)?
    };
    Ok(DetResult {
        value,
        algorithm: Algorithm::OnePass,
        switch_r: None,
        pivot_log: phase.pivot_log,
        early_zero: phase.early_zero,
        tally,
    })
}

/// Exact determinant by the combined scheme: one-pass steps up to order r, a
/// division-free transition producing every order-(r+1) surrounding minor,
/// then condensation steps down to order n.
///
/// The switch point is clamped: r <= 1 runs as pure condensation (identical
/// recurrences), r >= n-1 as pure one-pass.
pub fn det_combined<R: Ring>(a: &Matrix<R>, r: usize) -> Result<DetResult<R>> {
    let n = a.require_square()?;
    if r <= 1 {
        let mut res = det_dodgson(a)?;
        res.algorithm = Algorithm::Combined;
        res.switch_r = Some(1);
        return Ok(res);
    }
    if r + 1 >= n {
        let mut res = det_one_pass(a)?;
        res.algorithm = Algorithm::Combined;
        res.switch_r = Some(n.saturating_sub(1).max(1));
        return Ok(res);
    }

    let ring = a.ring().clone();
    let mut tally = OpTally::new();
    let zero_result = |pivot_log, tally| DetResult {
        value: ring.zero(),
        algorithm: Algorithm::Combined,
        switch_r: Some(r),
        pivot_log,
        early_zero: true,
        tally,
    };

    let phase = one_pass_phase(a, r, &mut tally, |_, _, _| {})?;
    if phase.early_zero {
        return Ok(zero_result(phase.pivot_log, tally));
    }
    let mut sign_neg = phase.sign_neg;
    let mut pivot_log = phase.pivot_log;

    // transition: all order-(r+1) minors surrounding the order-r corner,
    // division free; r+1 multiplications and r subtractions per entry
    let wn = n - r;
    let mut w: Vec<Vec<R::Elem>> = vec![vec![ring.zero(); wn]; wn];
    for i in r..n {
        for j in r..n {
            let mut acc = ring.mul(phase.a.at(i, j), &phase.corner, &mut tally)?;
            for p in 0..r {
                let term = ring.mul(phase.a.at(i, p), &phase.table[p][j], &mut tally)?;
                acc = ring.sub(&acc, &term, &mut tally)?;
            }
            w[i - r][j - r] = acc;
        }
    }

    // condensation tail: steps producing orders r+2..n, first dividing by
    // the order-r corner carried over from the one-pass part
    let mut prev_corner = phase.corner;
    for step in 0..wn - 1 {
        if ring.is_zero(&w[step][step]) {
            match (step + 1..wn).find(|&i| !ring.is_zero(&w[i][step])) {
                Some(i) => {
                    w.swap(step, i);
                    sign_neg = !sign_neg;
                    pivot_log.push((r + step, r + i));
                }
                None => return Ok(zero_result(pivot_log, tally)),
            }
        }
        let corner = w[step][step].clone();
        for i in step + 1..wn {
            for j in step + 1..wn {
                let lhs = ring.mul(&corner, &w[i][j], &mut tally)?;
                let rhs = ring.mul(&w[i][step], &w[step][j], &mut tally)?;
                let num = ring.sub(&lhs, &rhs, &mut tally)?;
                w[i][j] = ring.exact_div(&num, &prev_corner, &mut tally)?;
            }
        }
        prev_corner = corner;
    }

    let value = fold_sign(&ring, w[wn - 1][wn - 1].clone(), sign_neg)?;
    Ok(DetResult {
        value,
        algorithm: Algorithm::Combined,
        switch_r: Some(r),
        pivot_log,
        early_zero: false,
        tally,
    })
}

/// Factorial-cost guard for the cofactor oracle.
pub const ORACLE_LIMIT: usize = 8;

/// Division-free determinant by recursive cofactor expansion. Independent of
/// the condensation/one-pass code paths; used to verify them.
pub fn det_oracle<R: Ring>(a: &Matrix<R>) -> Result<R::Elem> {
    let n = a.require_square()?;
    if n > ORACLE_LIMIT {
        return Err(Error::OracleLimit { n, limit: ORACLE_LIMIT });
    }
    let idx: Vec<usize> = (0..n).collect();
    let mut scratch = OpTally::new();
    cofactor(a, &idx, &idx, &mut scratch)
}

/// Determinant of the submatrix given by ordered row and column index lists.
/// The arrangement matters: permuted lists change the sign accordingly.
pub fn minor_oracle<R: Ring>(a: &Matrix<R>, rows: &[usize], cols: &[usize]) -> Result<R::Elem> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(Error::BadParameter(format!(
            "minor needs equal nonempty row/col lists, got {} and {}",
            rows.len(),
            cols.len()
        )));
    }
    if rows.len() > ORACLE_LIMIT {
        return Err(Error::OracleLimit { n: rows.len(), limit: ORACLE_LIMIT });
    }
    if rows.iter().any(|&i| i >= a.rows()) || cols.iter().any(|&j| j >= a.cols()) {
        return Err(Error::BadParameter("minor index out of range".into()));
    }
    let mut scratch = OpTally::new();
    cofactor(a, rows, cols, &mut scratch)
}

fn cofactor<R: Ring>(
    a: &Matrix<R>,
    rows: &[usize],
    cols: &[usize],
    t: &mut OpTally,
) -> Result<R::Elem> {
    let ring = a.ring();
    if rows.len() == 1 {
        return Ok(a.at(rows[0], cols[0]).clone());
    }
    let mut acc: Option<R::Elem> = None;
    for (idx, &c) in cols.iter().enumerate() {
        let lead = a.at(rows[0], c);
        if ring.is_zero(lead) {
            continue;
        }
        let rest: Vec<usize> =
            cols.iter().enumerate().filter(|&(k, _)| k != idx).map(|(_, &v)| v).collect();
        let minor = cofactor(a, &rows[1..], &rest, t)?;
        let term = ring.mul(lead, &minor, t)?;
        acc = Some(match acc {
            None => {
                if idx % 2 == 0 {
                    term
                } else {
                    ring.neg(&term)?
                }
            }
            Some(cur) => {
                if idx % 2 == 0 {
                    ring.add(&cur, &term, t)?
                } else {
                    ring.sub(&cur, &term, t)?
                }
            }
        });
    }
    Ok(acc.unwrap_or_else(|| ring.zero()))
}
