//! Closed-form hypergeometric routes to `g_R`: Rahman's terminating `9F8`
//! representations (in their corrected form) and Dougall's formula for the
//! ultraspherical case.
//!
//! Several well-poised pairs in these series read `0/0` at special but
//! admissible parameters (for instance `alpha = 0`, where `(alpha)_k` and
//! `(alpha/2)_k` vanish together). Every series parameter is an affine
//! function of `(alpha, beta)`, so each one is carried as a first-order
//! perturbation `v + d*eps` along a fixed direction into the validity
//! region, and each term is reduced to its leading order in `eps`. Terms
//! of positive order drop out, terms of order zero are the exact limit,
//! and a term of negative order means the series itself is singular.

use num_traits::{One, Zero};

use crate::coeffs::{CoeffVector, Family};
use crate::error::FormulaError;
use crate::kernel::{factorial, gen_binomial, int, pochhammer, rat, Rational};
use crate::params::JacobiParams;

/// `v + d*eps`, exact in `eps` for affine expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Dual {
    v: Rational,
    d: Rational,
}

impl Dual {
    fn new(v: Rational, d: Rational) -> Self {
        Self { v, d }
    }
    fn constant(v: Rational) -> Self {
        Self { v, d: Rational::zero() }
    }
    fn add(&self, other: &Dual) -> Dual {
        Dual::new(&self.v + &other.v, &self.d + &other.d)
    }
    fn sub(&self, other: &Dual) -> Dual {
        Dual::new(&self.v - &other.v, &self.d - &other.d)
    }
    fn plus(&self, c: &Rational) -> Dual {
        Dual::new(&self.v + c, self.d.clone())
    }
    fn scale(&self, c: &Rational) -> Dual {
        Dual::new(&self.v * c, &self.d * c)
    }
    fn neg(&self) -> Dual {
        Dual::new(-&self.v, -&self.d)
    }
    fn leading(&self) -> Lead {
        if !self.v.is_zero() {
            Lead { coeff: self.v.clone(), order: 0 }
        } else {
            Lead { coeff: self.d.clone(), order: 1 }
        }
    }
}

/// `coeff * eps^order`; `coeff == 0` is an exact zero.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Lead {
    coeff: Rational,
    order: i32,
}

impl Lead {
    fn one() -> Self {
        Lead { coeff: Rational::one(), order: 0 }
    }
    fn exact(c: Rational) -> Self {
        Lead { coeff: c, order: 0 }
    }
    fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }
    fn mul(&self, other: &Lead) -> Lead {
        Lead { coeff: &self.coeff * &other.coeff, order: self.order + other.order }
    }
    fn div(&self, other: &Lead) -> Result<Lead, FormulaError> {
        if other.is_zero() {
            return Err(FormulaError::LimitRequired);
        }
        Ok(Lead { coeff: &self.coeff / &other.coeff, order: self.order - other.order })
    }
}

fn poch_lead(x: &Dual, n: u32) -> Lead {
    let mut acc = Lead::one();
    let mut f = x.clone();
    for _ in 0..n {
        acc = acc.mul(&f.leading());
        if acc.is_zero() {
            return acc;
        }
        f = f.plus(&Rational::one());
    }
    acc
}

/// Ratio of products of leading-order factors.
struct Ratio {
    acc: Lead,
    den: Lead,
}

impl Ratio {
    fn new() -> Self {
        Ratio { acc: Lead::one(), den: Lead::one() }
    }
    fn num(mut self, l: Lead) -> Self {
        self.acc = self.acc.mul(&l);
        self
    }
    fn den(mut self, l: Lead) -> Self {
        self.den = self.den.mul(&l);
        self
    }
    fn poch(self, x: &Dual, n: u32) -> Self {
        self.num(poch_lead(x, n))
    }
    fn inv_poch(self, x: &Dual, n: u32) -> Self {
        self.den(poch_lead(x, n))
    }
    fn finish(self) -> Result<Lead, FormulaError> {
        self.acc.div(&self.den)
    }
}

/// A terminating `pFq` at unit argument:
/// `sum_{k=0}^{term_count} prod (a_i)_k / (prod (b_i)_k k!)`.
///
/// `term_count` comes from an explicit nonpositive-integer numerator
/// parameter `-term_count`, so the sum is exact and never truncated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypTermSum {
    numer: Vec<Dual>,
    denom: Vec<Dual>,
    term_count: u32,
}

impl HypTermSum {
    /// Errors if no numerator parameter equals `-term_count`.
    pub fn new(
        numerator_params: Vec<Rational>,
        denominator_params: Vec<Rational>,
        term_count: u32,
    ) -> Result<Self, FormulaError> {
        Self::from_duals(
            numerator_params.into_iter().map(Dual::constant).collect(),
            denominator_params.into_iter().map(Dual::constant).collect(),
            term_count,
        )
    }

    fn from_duals(numer: Vec<Dual>, denom: Vec<Dual>, term_count: u32) -> Result<Self, FormulaError> {
        let stop = -int(i64::from(term_count));
        if !numer.iter().any(|x| x.v == stop) {
            return Err(FormulaError::BadIndex("series does not terminate at the stated term count"));
        }
        Ok(Self { numer, denom, term_count })
    }

    pub fn numerator_params(&self) -> Vec<Rational> {
        self.numer.iter().map(|x| x.v.clone()).collect()
    }

    pub fn denominator_params(&self) -> Vec<Rational> {
        self.denom.iter().map(|x| x.v.clone()).collect()
    }

    pub fn term_count(&self) -> u32 {
        self.term_count
    }

    /// Leading-order value of each term `k = 0 ..= term_count`.
    fn terms(&self) -> Result<Vec<Lead>, FormulaError> {
        (0..=self.term_count)
            .map(|k| {
                let mut r = Ratio::new().den(Lead::exact(factorial(k)));
                for a in &self.numer {
                    r = r.poch(a, k);
                }
                for b in &self.denom {
                    r = r.inv_poch(b, k);
                }
                r.finish()
            })
            .collect()
    }

    /// Exact value; errors if a denominator Pochhammer symbol vanishes
    /// before the series terminates.
    pub fn evaluate(&self) -> Result<Rational, FormulaError> {
        sum_finite(self.terms()?.iter().cloned())
    }
}

/// Sums order-zero parts; positive orders vanish in the limit, negative
/// orders are a genuine singularity.
fn sum_finite(terms: impl Iterator<Item = Lead>) -> Result<Rational, FormulaError> {
    let mut total = Rational::zero();
    for t in terms {
        if t.is_zero() || t.order > 0 {
            continue;
        }
        if t.order < 0 {
            return Err(FormulaError::LimitRequired);
        }
        total += t.coeff;
    }
    Ok(total)
}

struct Perturbed {
    alpha: Dual,
    beta: Dual,
}

impl Perturbed {
    fn new(p: &JacobiParams, d_alpha: Rational, d_beta: Rational) -> Self {
        Self {
            alpha: Dual::new(p.alpha().clone(), d_alpha),
            beta: Dual::new(p.beta().clone(), d_beta),
        }
    }
    /// `alpha + beta`
    fn sum(&self) -> Dual {
        self.alpha.add(&self.beta)
    }
}

fn c(x: i64) -> Dual {
    Dual::constant(int(x))
}

fn half(x: &Dual) -> Dual {
    x.scale(&rat(1, 2))
}

fn check_indices(m: u32, j: u32) -> Result<(), FormulaError> {
    if m == 0 {
        return Err(FormulaError::BadIndex("m must be at least 1"));
    }
    if j > 2 * m {
        return Err(FormulaError::BadIndex("j must not exceed 2m"));
    }
    Ok(())
}

/// Prefactor shared by the even and odd representations.
fn rahman_common(pt: &Perturbed, m: u32, s: u32, j: u32) -> Ratio {
    let (al, be) = (&pt.alpha, &pt.beta);
    let ab = pt.sum();
    let a = ab.plus(&Rational::one());
    Ratio::new()
        .num(a.plus(&int(i64::from(2 * s + 2 * j))).leading())
        .den(a.leading())
        .poch(&ab.plus(&int(i64::from(m + 1))), m)
        .poch(&al.plus(&Rational::one()), s + j)
        .poch(&be.plus(&Rational::one()), m + s)
        .poch(&a, 2 * s + j)
        .poch(&a, j)
        .num(Lead::exact(factorial(m + s)))
        .inv_poch(&al.plus(&Rational::one()), s)
        .inv_poch(&al.plus(&Rational::one()), m)
        .inv_poch(&be.plus(&Rational::one()), s + j)
        .inv_poch(&ab.plus(&int(2)), 2 * m + 2 * s + j)
        .den(Lead::exact(factorial(s) * factorial(j)))
}

fn rahman_even(pt: &Perturbed, m: u32, s: u32, j: u32) -> Result<Rational, FormulaError> {
    let (al, be) = (&pt.alpha, &pt.beta);
    let ab = pt.sum();
    let t = j / 2;
    let (mi, si, ti) = (i64::from(m), i64::from(s), i64::from(t));
    let half_ab = half(&ab);
    let pre = rahman_common(pt, m, s, j)
        .poch(&c(-mi), t)
        .poch(&ab.plus(&int(mi + si + 1)), t)
        .inv_poch(&half_ab.neg().plus(&int(-mi)), t)
        .inv_poch(&al.plus(&int(si + 1)), t)
        .poch(&al.neg().plus(&int(-mi)), t)
        .poch(&be.plus(&int(mi + si + 1)), t)
        .poch(&Dual::constant(rat(1, 2)), t)
        .inv_poch(&half_ab.neg().plus(&(rat(1, 2) - int(mi))), t)
        .inv_poch(&c(si + 1), t)
        .inv_poch(&al.plus(&Rational::one()), t)
        .finish()?;
    let amb = al.sub(be);
    let numer = vec![
        al.clone(),
        half(al).plus(&Rational::one()),
        al.plus(&rat(1, 2)),
        half(&amb),
        half(&amb.plus(&Rational::one())),
        ab.plus(&int(mi + si + 1 + ti)),
        c(-mi + ti),
        c(-si - ti),
        c(-ti),
    ];
    let denom = vec![
        half(al),
        Dual::constant(rat(1, 2)),
        half_ab.plus(&Rational::one()),
        half(&ab.plus(&Rational::one())),
        be.neg().plus(&int(-mi - si - ti)),
        al.plus(&int(mi + 1 - ti)),
        al.plus(&int(si + 1 + ti)),
        al.plus(&int(1 + ti)),
    ];
    let series = HypTermSum::from_duals(numer, denom, t)?;
    sum_finite(series.terms()?.iter().map(|x| pre.mul(x)))
}

fn rahman_odd(pt: &Perturbed, m: u32, s: u32, j: u32) -> Result<Rational, FormulaError> {
    let (al, be) = (&pt.alpha, &pt.beta);
    let ab = pt.sum();
    let t = (j - 1) / 2;
    let (mi, si) = (i64::from(m), i64::from(s));
    let jh = rat(i64::from(j), 2);
    let half_ab = half(&ab);
    let pre = rahman_common(pt, m, s, j)
        .poch(&c(-mi), t + 1)
        .poch(&ab.plus(&int(mi + si + 1)), t + 1)
        .inv_poch(&half_ab.neg().plus(&int(-mi)), t + 1)
        .inv_poch(&al.plus(&int(si + 1)), t + 1)
        .poch(&al.neg().plus(&int(-mi)), t)
        .poch(&be.plus(&int(mi + si + 1)), t)
        .poch(&Dual::constant(rat(3, 2)), t)
        .inv_poch(&half_ab.neg().plus(&(rat(1, 2) - int(mi))), t)
        .inv_poch(&c(si + 1), t)
        .inv_poch(&al.plus(&int(2)), t)
        .num(al.sub(be).leading())
        .den(ab.plus(&Rational::one()).leading())
        .finish()?;
    let amb = al.sub(be);
    let one_minus_j = rat(1 - i64::from(j), 2);
    let numer = vec![
        al.plus(&Rational::one()),
        half(&al.plus(&int(3))),
        al.plus(&rat(1, 2)),
        half(&amb).plus(&Rational::one()),
        half(&amb.plus(&Rational::one())),
        ab.plus(&(int(mi + si) + rat(3, 2) + &jh)),
        Dual::constant(int(-mi) + rat(1, 2) + &jh),
        Dual::constant(rat(1, 2) - int(si) - &jh),
        Dual::constant(one_minus_j.clone()),
    ];
    let denom = vec![
        half(&al.plus(&Rational::one())),
        Dual::constant(rat(3, 2)),
        half_ab.plus(&Rational::one()),
        half(&ab.plus(&int(3))),
        be.neg().plus(&(&one_minus_j - int(mi + si))),
        al.plus(&(int(mi) + rat(3, 2) - &jh)),
        al.plus(&(int(si) + rat(3, 2) + &jh)),
        al.plus(&(rat(3, 2) + &jh)),
    ];
    let series = HypTermSum::from_duals(numer, denom, t)?;
    sum_finite(series.terms()?.iter().map(|x| pre.mul(x)))
}

/// `g_R(m, m+s; s+j)` from the parity-appropriate corrected Rahman `9F8`
/// representation. Requires `(alpha, beta)` strictly inside `Delta`
/// (`a > 0` and `b > 0`); on the boundary the formulas only make sense as
/// limits and are refused.
pub fn rahman_coefficient(p: &JacobiParams, m: u32, s: u32, j: u32) -> Result<Rational, FormulaError> {
    check_indices(m, j)?;
    if !(p.a() > &Rational::zero() && p.b() > &Rational::zero()) {
        return Err(FormulaError::BoundaryOfDelta);
    }
    // alpha -> alpha + eps stays inside the open set
    let pt = Perturbed::new(p, Rational::one(), Rational::zero());
    if j % 2 == 0 {
        rahman_even(&pt, m, s, j)
    } else {
        rahman_odd(&pt, m, s, j)
    }
}

/// `true` when `alpha >= beta >= -1/2`, the range of [`rahman_special`].
pub fn in_special_range(p: &JacobiParams) -> bool {
    p.alpha() >= p.beta() && p.beta() >= &rat(-1, 2)
}

/// `g_R(m, m+s; s+j)` from the single corrected Rahman representation valid
/// for `alpha >= beta >= -1/2`. On the edges `alpha = beta` and
/// `beta = -1/2` the series is evaluated as the limit approached from
/// inside the range.
pub fn rahman_special(p: &JacobiParams, m: u32, s: u32, j: u32) -> Result<Rational, FormulaError> {
    check_indices(m, j)?;
    if !in_special_range(p) {
        return Err(FormulaError::OutOfRange("requires alpha >= beta >= -1/2"));
    }
    let pt = Perturbed::new(p, int(2), Rational::one());
    let (al, be) = (&pt.alpha, &pt.beta);
    let ab = pt.sum();
    let a = ab.plus(&Rational::one());
    let (mi, si, ji) = (i64::from(m), i64::from(s), i64::from(j));
    let jh = rat(ji, 2);
    let pre = Ratio::new()
        .num(a.plus(&int(2 * si + 2 * ji)).leading())
        .den(a.leading())
        .num(Lead::exact(factorial(m + s)))
        .den(Lead::exact(factorial(s) * factorial(j)))
        .poch(&be.plus(&Rational::one()), m + s)
        .poch(&a, 2 * m)
        .inv_poch(&al.plus(&Rational::one()), m)
        .inv_poch(&be.plus(&Rational::one()), s)
        .inv_poch(&a, m)
        .poch(&a, 2 * s + j)
        .poch(&c(-2 * mi), j)
        .poch(&ab.scale(&int(2)).plus(&int(2 * mi + 2 * si + 2)), j)
        .inv_poch(&ab.plus(&int(2)), 2 * m + 2 * s + j)
        .inv_poch(&ab.neg().plus(&int(-2 * mi)), j)
        .poch(&al.sub(be), j)
        .inv_poch(&be.scale(&int(2)).plus(&int(2 * si + 2)), j)
        .finish()?;

    let bs = be.plus(&(int(si) + rat(1, 2)));
    let bma = be.sub(al);
    let t = j / 2; // -j/2 or (1-j)/2, whichever is an integer
    let numer = vec![
        bs.clone(),
        half(&bs).plus(&Rational::one()),
        be.plus(&rat(1, 2)),
        be.plus(&int(mi + si + 1)),
        al.neg().plus(&int(-mi)),
        half(&a).plus(&(int(si) + &jh)),
        half(&ab.plus(&int(2))).plus(&(int(si) + &jh)),
        Dual::constant(rat(1 - ji, 2)),
        Dual::constant(rat(-ji, 2)),
    ];
    let denom = vec![
        half(&bs),
        c(si + 1),
        Dual::constant(rat(1 - 2 * mi, 2)),
        ab.plus(&(int(mi + si) + rat(3, 2))),
        half(&bma).plus(&rat(2 - ji, 2)),
        half(&bma).plus(&rat(1 - ji, 2)),
        be.plus(&(int(si + 1) + &jh)),
        be.plus(&(int(si) + rat(3, 2) + &jh)),
    ];
    let series = HypTermSum::from_duals(numer, denom, t)?;
    sum_finite(series.terms()?.iter().map(|x| pre.mul(x)))
}

/// Full vector `g_R(m, n; .)` from the Rahman representations: the
/// parity-split pair inside `Delta`, otherwise the single representation
/// when `alpha >= beta >= -1/2`.
pub fn rahman_linearize(p: &JacobiParams, m: u32, n: u32) -> Result<CoeffVector, FormulaError> {
    let (lo, s) = (m.min(n), m.abs_diff(n));
    if lo == 0 {
        return Ok(CoeffVector::new(m, n, Family::Jacobi, vec![Rational::one()]));
    }
    let interior = p.a() > &Rational::zero() && p.b() > &Rational::zero();
    let values = (0..=2 * lo)
        .map(|j| {
            if interior {
                rahman_coefficient(p, lo, s, j)
            } else {
                rahman_special(p, lo, s, j)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CoeffVector::new(m, n, Family::Jacobi, values))
}

/// Full ultraspherical linearization vector for `R_m^(alpha,alpha)
/// R_n^(alpha,alpha)` by Dougall's formula, `alpha > -1/2`.
pub fn dougall_coefficient(alpha: &Rational, m: u32, n: u32) -> Result<CoeffVector, FormulaError> {
    let h = rat(1, 2);
    if alpha <= &-h.clone() {
        return Err(FormulaError::OutOfRange("Dougall's formula requires alpha > -1/2"));
    }
    let lam = alpha + &h; // alpha + 1/2
    let two_a1 = int(2) * alpha + Rational::one();
    let lo = m.abs_diff(n);
    let mut values = vec![Rational::zero(); (m + n - lo + 1) as usize];
    let mn = int(i64::from(m + n));
    for j in 0..=m.min(n) {
        let jr = int(i64::from(j));
        let v = factorial(j)
            * pochhammer(&lam, j)
            * gen_binomial(&int(i64::from(m)), j)
            * gen_binomial(&int(i64::from(n)), j)
            * (&mn + &lam - int(2) * &jr)
            * pochhammer(&lam, m - j)
            * pochhammer(&lam, n - j)
            * pochhammer(&two_a1, m + n - j)
            / ((&mn + &lam - &jr)
                * pochhammer(&lam, m + n - j)
                * pochhammer(&two_a1, m)
                * pochhammer(&two_a1, n));
        values[(m + n - 2 * j - lo) as usize] = v;
    }
    Ok(CoeffVector::new(m, n, Family::Jacobi, values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::{gasper_boundary, linearize_jacobi};

    fn params(a: (i64, i64), b: (i64, i64)) -> JacobiParams {
        JacobiParams::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    #[test]
    fn hyp_sum_basics() {
        // 2F1(-2, 1; 1; 1) = (1 - 1)^2 = 0 by Chu-Vandermonde
        let s = HypTermSum::new(vec![int(-2), int(1)], vec![int(1)], 2).unwrap();
        assert_eq!(s.evaluate().unwrap(), int(0));
        // 2F1(-3, 2; 4; 1) = (2)_3/(4)_3 = 24/120
        let s = HypTermSum::new(vec![int(-3), int(2)], vec![int(4)], 3).unwrap();
        assert_eq!(s.evaluate().unwrap(), rat(1, 5));
        assert!(HypTermSum::new(vec![int(2)], vec![int(1)], 2).is_err());
        let s = HypTermSum::new(vec![int(-2)], vec![int(-1)], 2).unwrap();
        assert_eq!(s.evaluate(), Err(FormulaError::LimitRequired));
    }

    #[test]
    fn rahman_examples() {
        let p = params((1, 1), (0, 1));
        assert_eq!(rahman_coefficient(&p, 1, 0, 1).unwrap(), rat(1, 5));
        assert_eq!(rahman_coefficient(&p, 2, 0, 2).unwrap(), rat(8, 35));
        let q = params((1, 2), (1, 4));
        assert_eq!(rahman_coefficient(&q, 3, 1, 4).unwrap(), linearize_jacobi(&q, 3, 4).get(5));
    }

    #[test]
    fn rahman_rejects_boundary() {
        assert_eq!(
            rahman_coefficient(&params((0, 1), (0, 1)), 1, 0, 1),
            Err(FormulaError::BoundaryOfDelta)
        );
        assert_eq!(
            rahman_coefficient(&params((-1, 4), (-3, 4)), 1, 0, 1),
            Err(FormulaError::BoundaryOfDelta)
        );
        assert!(matches!(
            rahman_coefficient(&params((1, 1), (0, 1)), 1, 0, 3),
            Err(FormulaError::BadIndex(_))
        ));
    }

    #[test]
    fn rahman_alpha_zero_needs_the_limit() {
        // a = 1/2, b = 1/2: interior of Delta with alpha = 0
        let p = params((0, 1), (-1, 2));
        for m in 1..4 {
            let g = linearize_jacobi(&p, m, m + 1);
            for j in 0..=2 * m {
                assert_eq!(rahman_coefficient(&p, m, 1, j).unwrap(), g.get(1 + j));
            }
        }
    }

    #[test]
    fn rahman_special_examples() {
        let p = params((1, 1), (0, 1));
        assert_eq!(rahman_special(&p, 1, 0, 1).unwrap(), rat(1, 5));
        assert_eq!(rahman_special(&p, 2, 1, 0).unwrap(), gasper_boundary(&p, 2, 1).low);
        let u = params((1, 2), (1, 2));
        assert_eq!(rahman_special(&u, 2, 0, 2).unwrap(), linearize_jacobi(&u, 2, 2).get(2));
        assert!(matches!(
            rahman_special(&params((0, 1), (1, 2)), 1, 0, 1),
            Err(FormulaError::OutOfRange(_))
        ));
    }

    #[test]
    fn dougall_examples() {
        let v = dougall_coefficient(&int(0), 1, 1).unwrap();
        assert_eq!(v.values(), &[rat(1, 3), int(0), rat(2, 3)]);
        let v = dougall_coefficient(&int(1), 1, 2).unwrap();
        assert_eq!(v, linearize_jacobi(&params((1, 1), (1, 1)), 1, 2));
        assert_eq!(dougall_coefficient(&rat(3, 7), 0, 4).unwrap().values(), &[int(1)]);
        assert!(dougall_coefficient(&rat(-1, 2), 1, 1).is_err());
    }
}
