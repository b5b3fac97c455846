//! Dense multivariate polynomials over a scalar coefficient ring.
//!
//! Coefficients are stored in a dense mixed-radix box indexed by exponent
//! vectors, variable 0 most significant. That makes numeric order on flat
//! indices agree with lexicographic order on exponent tuples, which is the
//! monomial order used for exact division. Values are normalized: each
//! per-variable bound is attained by some monomial, and the zero polynomial
//! has all bounds 0 with a single zero coefficient.

use crate::error::{Error, Result};
use crate::ring::{CoeffRing, Ring};
use crate::tally::OpTally;
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<C> {
    bounds: Vec<usize>,
    coeffs: Vec<C>,
}

fn box_len(bounds: &[usize]) -> usize {
    bounds.iter().map(|b| b + 1).product()
}

fn index_of(bounds: &[usize], exps: &[usize]) -> usize {
    debug_assert_eq!(bounds.len(), exps.len());
    let mut idx = 0;
    for (e, b) in exps.iter().zip(bounds) {
        debug_assert!(e <= b);
        idx = idx * (b + 1) + e;
    }
    idx
}

fn decode(bounds: &[usize], mut idx: usize) -> Vec<usize> {
    let mut exps = vec![0usize; bounds.len()];
    for v in (0..bounds.len()).rev() {
        let radix = bounds[v] + 1;
        exps[v] = idx % radix;
        idx /= radix;
    }
    exps
}

fn all_exponents(bounds: &[usize]) -> Vec<Vec<usize>> {
    (0..box_len(bounds)).map(|i| decode(bounds, i)).collect()
}

impl<C: Clone + PartialEq> MultiPoly<C> {
    pub fn vars(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of the given exponent vector; zero slots outside the box.
    pub fn coeff_at(&self, exps: &[usize], zero: &C) -> C {
        if exps.iter().zip(&self.bounds).any(|(e, b)| e > b) {
            return zero.clone();
        }
        self.coeffs[index_of(&self.bounds, exps)].clone()
    }

    pub fn is_constant(&self) -> bool {
        self.bounds.iter().all(|&b| b == 0)
    }

    /// The constant value of a zero-degree polynomial.
    pub fn constant_value(&self) -> &C {
        debug_assert!(self.is_constant());
        &self.coeffs[0]
    }
}

/// The ring of dense polynomials in a fixed number of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRing<B: CoeffRing> {
    base: B,
    vars: usize,
}

impl<B: CoeffRing> PolyRing<B> {
    pub fn new(base: B, vars: usize) -> Self {
        PolyRing { base, vars }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    fn shape_check(&self, a: &MultiPoly<B::Coeff>, b: &MultiPoly<B::Coeff>) -> Result<()> {
        if a.vars() != b.vars() {
            return Err(Error::VarMismatch { left: a.vars(), right: b.vars() });
        }
        if a.vars() != self.vars {
            return Err(Error::VarMismatch { left: a.vars(), right: self.vars });
        }
        Ok(())
    }

    /// Trims bounds so each one is attained; canonicalizes zero.
    pub fn normalize(&self, poly: MultiPoly<B::Coeff>) -> MultiPoly<B::Coeff> {
        let s = poly.bounds.len();
        let mut tight = vec![0usize; s];
        let mut any_nonzero = false;
        for (i, c) in poly.coeffs.iter().enumerate() {
            if !self.base.cis_zero(c) {
                any_nonzero = true;
                let exps = decode(&poly.bounds, i);
                for v in 0..s {
                    tight[v] = tight[v].max(exps[v]);
                }
            }
        }
        if !any_nonzero {
            return MultiPoly { bounds: vec![0; s], coeffs: vec![self.base.czero()] };
        }
        if tight == poly.bounds {
            return poly;
        }
        let mut coeffs = vec![self.base.czero(); box_len(&tight)];
        for (i, c) in poly.coeffs.iter().enumerate() {
            if !self.base.cis_zero(c) {
                let exps = decode(&poly.bounds, i);
                coeffs[index_of(&tight, &exps)] = c.clone();
            }
        }
        MultiPoly { bounds: tight, coeffs }
    }

    pub fn zero_poly(&self) -> MultiPoly<B::Coeff> {
        MultiPoly { bounds: vec![0; self.vars], coeffs: vec![self.base.czero()] }
    }

    pub fn constant(&self, c: B::Coeff) -> MultiPoly<B::Coeff> {
        MultiPoly { bounds: vec![0; self.vars], coeffs: vec![c] }
    }

    /// The monomial x_v.
    pub fn var(&self, v: usize) -> Result<MultiPoly<B::Coeff>> {
        self.monomial(self.base.cone(), &{
            let mut e = vec![0; self.vars];
            if v >= self.vars {
                return Err(Error::VarIndex { index: v, vars: self.vars });
            }
            e[v] = 1;
            e
        })
    }

    pub fn monomial(&self, c: B::Coeff, exps: &[usize]) -> Result<MultiPoly<B::Coeff>> {
        if exps.len() != self.vars {
            return Err(Error::VarMismatch { left: exps.len(), right: self.vars });
        }
        let bounds = exps.to_vec();
        let mut coeffs = vec![self.base.czero(); box_len(&bounds)];
        let last = coeffs.len() - 1;
        coeffs[last] = c;
        Ok(self.normalize(MultiPoly { bounds, coeffs }))
    }

    /// Builds a polynomial from (coefficient, exponent vector) terms,
    /// accumulating duplicates.
    pub fn from_terms(&self, terms: &[(B::Coeff, Vec<usize>)]) -> Result<MultiPoly<B::Coeff>> {
        let mut bounds = vec![0usize; self.vars];
        for (_, exps) in terms {
            if exps.len() != self.vars {
                return Err(Error::VarMismatch { left: exps.len(), right: self.vars });
            }
            for v in 0..self.vars {
                bounds[v] = bounds[v].max(exps[v]);
            }
        }
        let mut coeffs = vec![self.base.czero(); box_len(&bounds)];
        let mut scratch = OpTally::new();
        for (c, exps) in terms {
            let idx = index_of(&bounds, exps);
            coeffs[idx] = self.base.cadd(&coeffs[idx], c, &mut scratch)?;
        }
        Ok(self.normalize(MultiPoly { bounds, coeffs }))
    }

    fn add_sub(
        &self,
        a: &MultiPoly<B::Coeff>,
        b: &MultiPoly<B::Coeff>,
        t: &mut OpTally,
        subtract: bool,
    ) -> Result<MultiPoly<B::Coeff>> {
        self.shape_check(a, b)?;
        let s = self.vars;
        let bounds: Vec<usize> =
            (0..s).map(|v| a.bounds[v].max(b.bounds[v])).collect();
        let mut coeffs = Vec::with_capacity(box_len(&bounds));
        for exps in all_exponents(&bounds) {
            let in_a = exps.iter().zip(&a.bounds).all(|(e, b)| e <= b);
            let in_b = exps.iter().zip(&b.bounds).all(|(e, b)| e <= b);
            let c = match (in_a, in_b) {
                (true, true) => {
                    let ca = &a.coeffs[index_of(&a.bounds, &exps)];
                    let cb = &b.coeffs[index_of(&b.bounds, &exps)];
                    if subtract {
                        self.base.csub(ca, cb, t)?
                    } else {
                        self.base.cadd(ca, cb, t)?
                    }
                }
                (true, false) => a.coeffs[index_of(&a.bounds, &exps)].clone(),
                (false, true) => {
                    let cb = &b.coeffs[index_of(&b.bounds, &exps)];
                    if subtract {
                        self.base.cneg(cb)?
                    } else {
                        cb.clone()
                    }
                }
                // outside both boxes (mixed-max corners): no contribution
                (false, false) => self.base.czero(),
            };
            coeffs.push(c);
        }
        Ok(self.normalize(MultiPoly { bounds, coeffs }))
    }

    /// Classical dense product: every pair of stored coefficients forms one
    /// product and one accumulation, so the coefficient tally grows by
    /// exactly len(a)*len(b) of each.
    pub fn poly_mul(
        &self,
        a: &MultiPoly<B::Coeff>,
        b: &MultiPoly<B::Coeff>,
        t: &mut OpTally,
    ) -> Result<MultiPoly<B::Coeff>> {
        self.shape_check(a, b)?;
        let s = self.vars;
        let bounds: Vec<usize> = (0..s).map(|v| a.bounds[v] + b.bounds[v]).collect();
        let mut coeffs = vec![self.base.czero(); box_len(&bounds)];
        let a_exps = all_exponents(&a.bounds);
        let b_exps = all_exponents(&b.bounds);
        let mut sum = vec![0usize; s];
        for (ia, ea) in a_exps.iter().enumerate() {
            for (ib, eb) in b_exps.iter().enumerate() {
                for v in 0..s {
                    sum[v] = ea[v] + eb[v];
                }
                let prod = self.base.cmul(&a.coeffs[ia], &b.coeffs[ib], t)?;
                let idx = index_of(&bounds, &sum);
                coeffs[idx] = self.base.cadd(&coeffs[idx], &prod, t)?;
            }
        }
        Ok(self.normalize(MultiPoly { bounds, coeffs }))
    }

    /// Classical dense long division under lexicographic order. The divisor
    /// must divide exactly; a nonzero remainder (or a coefficient that does
    /// not divide) reports `InexactDivision`. Each dense quotient slot costs
    /// one coefficient division plus len(b) multiply/subtract pairs.
    pub fn poly_exact_div(
        &self,
        a: &MultiPoly<B::Coeff>,
        b: &MultiPoly<B::Coeff>,
        t: &mut OpTally,
    ) -> Result<MultiPoly<B::Coeff>> {
        self.shape_check(a, b)?;
        if self.is_zero_poly(b) {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero_poly(a) {
            return Ok(self.zero_poly());
        }
        let s = self.vars;
        let mut q_bounds = vec![0usize; s];
        for v in 0..s {
            q_bounds[v] = a.bounds[v].checked_sub(b.bounds[v]).ok_or(Error::InexactDivision)?;
        }
        // lex-leading term of b: highest flat index with a nonzero coefficient
        let lead_idx = (0..b.coeffs.len())
            .rev()
            .find(|&i| !self.base.cis_zero(&b.coeffs[i]))
            .expect("b is nonzero");
        let lead_exp = decode(&b.bounds, lead_idx);
        let lead_coeff = b.coeffs[lead_idx].clone();

        let mut rem = a.coeffs.clone();
        let mut q_coeffs = vec![self.base.czero(); box_len(&q_bounds)];
        let b_exps = all_exponents(&b.bounds);
        let mut target = vec![0usize; s];
        for qi in (0..q_coeffs.len()).rev() {
            let q_exp = decode(&q_bounds, qi);
            for v in 0..s {
                target[v] = q_exp[v] + lead_exp[v];
            }
            let num = rem[index_of(&a.bounds, &target)].clone();
            let qc = self.base.cdiv_exact(&num, &lead_coeff, t)?;
            for (bi, be) in b_exps.iter().enumerate() {
                for v in 0..s {
                    target[v] = q_exp[v] + be[v];
                }
                let prod = self.base.cmul(&qc, &b.coeffs[bi], t)?;
                let ti = index_of(&a.bounds, &target);
                rem[ti] = self.base.csub(&rem[ti], &prod, t)?;
            }
            q_coeffs[qi] = qc;
        }
        if rem.iter().any(|c| !self.base.cis_zero(c)) {
            return Err(Error::InexactDivision);
        }
        Ok(self.normalize(MultiPoly { bounds: q_bounds, coeffs: q_coeffs }))
    }

    /// Substitutes a scalar for one variable; the result has one variable
    /// fewer. Horner evaluation along the chosen axis.
    pub fn poly_eval(
        &self,
        a: &MultiPoly<B::Coeff>,
        var: usize,
        point: &B::Coeff,
        t: &mut OpTally,
    ) -> Result<MultiPoly<B::Coeff>> {
        if var >= a.vars() {
            return Err(Error::VarIndex { index: var, vars: a.vars() });
        }
        let deg = a.bounds[var];
        let mut rest_bounds = a.bounds.clone();
        rest_bounds.remove(var);
        let mut coeffs = Vec::with_capacity(box_len(&rest_bounds));
        let mut full = vec![0usize; a.vars()];
        for rest in all_exponents(&rest_bounds) {
            for (i, e) in rest.iter().enumerate() {
                full[if i < var { i } else { i + 1 }] = *e;
            }
            full[var] = deg;
            let mut acc = a.coeffs[index_of(&a.bounds, &full)].clone();
            for e in (0..deg).rev() {
                full[var] = e;
                acc = self.base.cmul(&acc, point, t)?;
                acc = self.base.cadd(&acc, &a.coeffs[index_of(&a.bounds, &full)], t)?;
            }
            coeffs.push(acc);
        }
        let rest_ring = PolyRing::new(self.base.clone(), self.vars - 1);
        Ok(rest_ring.normalize(MultiPoly { bounds: rest_bounds, coeffs }))
    }

    fn is_zero_poly(&self, a: &MultiPoly<B::Coeff>) -> bool {
        a.coeffs.iter().all(|c| self.base.cis_zero(c))
    }

    /// Canonical text: terms in ascending index order, explicit coefficients,
    /// variables named x1..xs.
    pub fn poly_text(&self, a: &MultiPoly<B::Coeff>) -> String {
        let mut terms = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if self.base.cis_zero(c) {
                continue;
            }
            let exps = decode(&a.bounds, i);
            let mut term = self.base.ctext(c);
            for (v, &e) in exps.iter().enumerate() {
                if e == 1 {
                    term.push_str(&format!("*x{}", v + 1));
                } else if e > 1 {
                    term.push_str(&format!("*x{}^{}", v + 1, e));
                }
            }
            terms.push(term);
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// Fully dense sample: every coefficient in the degree box is a nonzero
    /// uniform draw, so per-variable bounds are tight.
    pub fn sample_dense<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        degree: usize,
        coeff_bound: i64,
    ) -> MultiPoly<B::Coeff> {
        let bounds = vec![degree; self.vars];
        let coeffs = (0..box_len(&bounds))
            .map(|_| self.base.csample(rng, coeff_bound, true))
            .collect();
        MultiPoly { bounds, coeffs }
    }
}

impl<B: CoeffRing> Ring for PolyRing<B> {
    type Elem = MultiPoly<B::Coeff>;

    fn zero(&self) -> Self::Elem {
        self.zero_poly()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.cone())
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.is_zero_poly(a)
    }

    fn neg(&self, a: &Self::Elem) -> Result<Self::Elem> {
        let coeffs: Result<Vec<_>> = a.coeffs.iter().map(|c| self.base.cneg(c)).collect();
        Ok(MultiPoly { bounds: a.bounds.clone(), coeffs: coeffs? })
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem> {
        t.n_add += 1;
        self.add_sub(a, b, t, false)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem> {
        t.n_add += 1;
        self.add_sub(a, b, t, true)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem> {
        t.n_mul += 1;
        self.poly_mul(a, b, t)
    }

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem, t: &mut OpTally) -> Result<Self::Elem> {
        t.n_div += 1;
        self.poly_exact_div(a, b, t)
    }

    fn text(&self, a: &Self::Elem) -> String {
        self.poly_text(a)
    }

    fn from_i64(&self, v: i64) -> Result<Self::Elem> {
        Ok(self.constant(self.base.cfrom_i64(v)?))
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R, bound: i64) -> Self::Elem {
        // degree 1 per variable unless the caller builds shapes explicitly
        self.sample_dense(rng, 1, bound)
    }
}
