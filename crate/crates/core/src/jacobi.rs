//! Jacobi polynomials `R_n^(alpha, beta)` normalized by `R_n(1) = 1`, and
//! their linearization coefficients `g_R(m, n; k)`.
//!
//! Coefficients are computed with Gasper's three-point recursion in `k`.
//! Writing `n = m + s` and `k = s + j`, for `1 <= j <= 2m - 1`
//!
//! ```text
//! theta(j) g(s+j+1) = iota(j) g(s+j) + kappa(j) g(s+j-1)
//! ```
//!
//! The two lowest and two highest coefficients have closed forms; everything
//! in between is filled by running the recursion upward over
//! `j = 1 ..= 2m - 2`, where `theta > 0` for every admissible parameter.
//! `theta(2m - 1)` carries the factor `a` and may vanish, so the last
//! instance of the recursion is checked against the closed-form top values
//! instead of being divided through.

use num_traits::{One, Zero};

use crate::coeffs::{CoeffVector, Family};
use crate::error::LinearizeError;
use crate::kernel::{format_rational, gen_binomial, int, pochhammer, sign_power, Rational};
use crate::params::JacobiParams;

fn nat(n: u32) -> Rational {
    int(i64::from(n))
}

/// Three-term recurrence coefficients of `R_n`:
/// `R_1 R_n = a_n R_{n+1} + b_n R_n + c_n R_{n-1}`, with
/// `R_1(x) = (x - b_0) / a_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceCoeffs {
    pub degree: u32,
    pub a: Rational,
    pub b: Rational,
    /// Absent for `n = 0`.
    pub c: Option<Rational>,
}

fn rec_coeffs_alpha_beta(p: &JacobiParams, n: u32) -> RecurrenceCoeffs {
    let (al, be) = (p.alpha(), p.beta());
    let one = Rational::one();
    let two = int(2);
    let s = al + be;
    if n == 0 {
        return RecurrenceCoeffs {
            degree: 0,
            a: (&two * al + &two) / (&s + &two),
            b: -(al - be) / (&s + &two),
            c: None,
        };
    }
    let n = nat(n);
    let tn = &two * &n;
    let a = (&s + &two) * (&n + &s + &one) * (&n + al + &one)
        / ((al + &one) * (&tn + &s + &one) * (&tn + &s + &two));
    let b = &two * (al - be) * &n * (&n + &s + &one)
        / ((al + &one) * (&tn + &s) * (&tn + &s + &two));
    let c = (&s + &two) * &n * (&n + be) / ((al + &one) * (&tn + &s) * (&tn + &s + &one));
    RecurrenceCoeffs { degree: 0, a, b, c: Some(c) }
}

fn rec_coeffs_ab(p: &JacobiParams, n: u32) -> RecurrenceCoeffs {
    let (a, b) = (p.a(), p.b());
    let one = Rational::one();
    if n == 0 {
        return RecurrenceCoeffs {
            degree: 0,
            a: (a + b + &one) / (a + &one),
            b: -b / (a + &one),
            c: None,
        };
    }
    let n = nat(n);
    let tn = int(2) * &n;
    let ab1 = a + b + &one;
    let an = (a + &one) * (&n + a) * (&tn + &ab1) / (&ab1 * (&tn + a) * (&tn + a + &one));
    let bn = int(4) * b * &n * (&n + a) / (&ab1 * (&tn + a - &one) * (&tn + a + &one));
    let cn = (a + &one) * &n * (&tn + a - b - &one) / (&ab1 * (&tn + a - &one) * (&tn + a));
    RecurrenceCoeffs { degree: 0, a: an, b: bn, c: Some(cn) }
}

/// Recurrence coefficients of degree `n`. Both closed forms (in `(alpha,
/// beta)` and in `(a, b)`) are evaluated and must agree exactly.
pub fn jacobi_rec_coeffs(p: &JacobiParams, n: u32) -> RecurrenceCoeffs {
    let mut x = rec_coeffs_alpha_beta(p, n);
    let y = rec_coeffs_ab(p, n);
    assert_eq!(x, y, "recurrence closed forms disagree at {p}, n = {n}");
    x.degree = n;
    x
}

/// `R_n^(alpha, beta)(x)` by running the recurrence upward.
pub fn jacobi_eval(p: &JacobiParams, n: u32, x: &Rational) -> Rational {
    let r0 = jacobi_rec_coeffs(p, 0);
    let r1 = (x - &r0.b) / &r0.a;
    if n == 0 {
        return Rational::one();
    }
    let (mut prev, mut cur) = (Rational::one(), r1.clone());
    for k in 1..n {
        let rc = jacobi_rec_coeffs(p, k);
        let next = ((&r1 - &rc.b) * &cur - rc.c.unwrap() * &prev) / &rc.a;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `theta(m, m+s; j)`. Defined for real `j`; positive for integer
/// `j` in `1 ..= 2m - 2`.
pub fn theta(p: &JacobiParams, m: u32, s: u32, j: &Rational) -> Rational {
    let (a, b) = (p.a(), p.b());
    let (m2, s2) = (nat(2 * m), nat(2 * s));
    let one = Rational::one();
    let two_j = int(2) * j;
    (&m2 - j + a - &one)
        * (&m2 + &s2 + j + a + &one)
        * (&s2 + j + &one)
        * (&s2 + &two_j + a - b + &one)
        / ((&s2 + &two_j + a + &one) * (&s2 + &two_j + a + int(2)))
        * (j + &one)
}

/// `iota(m, m+s; j)`. Carries the factor `b`; its denominators are positive
/// for every real `j >= 1`.
pub fn iota(p: &JacobiParams, m: u32, s: u32, j: &Rational) -> Rational {
    let (a, b) = (p.a(), p.b());
    let (m2, s2) = (nat(2 * m), nat(2 * s));
    let one = Rational::one();
    let two_a = int(2) * a;
    let two_j = int(2) * j;
    let up = (&m2 - j) * (&m2 + &s2 + j + &two_a) * (&s2 + j + &one) / (&s2 + &two_j + a + &one)
        * (j + &one);
    let down = (&m2 - j + &one) * (&m2 + &s2 + j + &two_a - &one) * (&s2 + j)
        / (&s2 + &two_j + a - &one)
        * j;
    b * (up - down)
}

/// `kappa(m, m+s; j)`, including the explicit zero at `j = 1, s = 0, a = 0`
/// where the generic expression is `0/0`. Errors at the (non-integer) pole
/// `2s + 2j + a = 2`.
pub fn kappa(p: &JacobiParams, m: u32, s: u32, j: &Rational) -> Result<Rational, LinearizeError> {
    let (a, b) = (p.a(), p.b());
    let (m2, s2) = (nat(2 * m), nat(2 * s));
    let one = Rational::one();
    let two_a = int(2) * a;
    let two_j = int(2) * j;
    let head = (&m2 - j + &one) * (&m2 + &s2 + j + &two_a - &one);
    if j.is_one() && s == 0 && a.is_zero() {
        return Ok(Rational::zero());
    }
    let den = (&s2 + &two_j + a - int(2)) * (&s2 + &two_j + a - &one);
    if den.is_zero() {
        return Err(LinearizeError::SingularPoint(format_rational(j)));
    }
    Ok(head * (&s2 + j + a - &one) * (&s2 + &two_j + a + b - &one) / den * (j + a - &one))
}

/// `(theta, iota, kappa)` at one point `j` of `[1, 2m - 1]`.
pub fn theta_iota_kappa(
    p: &JacobiParams,
    m: u32,
    s: u32,
    j: &Rational,
) -> Result<(Rational, Rational, Rational), LinearizeError> {
    Ok((theta(p, m, s, j), iota(p, m, s, j), kappa(p, m, s, j)?))
}

/// The four closed-form coefficients at the ends of `g_R(m, m+s; .)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCoeffs {
    /// `g_R(m, m+s; s)`
    pub low: Rational,
    /// `g_R(m, m+s; s+1)`
    pub low_next: Rational,
    /// `g_R(m, m+s; s+2m-1)`
    pub high_prev: Rational,
    /// `g_R(m, m+s; s+2m)`
    pub high: Rational,
}

/// Closed forms for the two lowest and two highest coefficients of
/// `R_m R_{m+s}`, `m >= 1`. Every denominator is a product of factors of the
/// form `alpha + 1 + i`, `a + 1 + i` or `beta + 1 + i` (`i >= 0`), all
/// positive on the parameter range, so nothing here can divide by zero.
pub fn gasper_boundary(p: &JacobiParams, m: u32, s: u32) -> BoundaryCoeffs {
    assert!(m >= 1, "boundary coefficients need m >= 1");
    let (a, b) = (p.a(), p.b());
    let one = Rational::one();
    let two = int(2);
    let (mm, ss) = (nat(m), nat(s));
    let half_amb = (a - b - &one) / &two; // (a-b-1)/2 = beta
    let half_apb = (a + b - &one) / &two; // (a+b-1)/2 = alpha

    let low = gen_binomial(&nat(m + s), m)
        * gen_binomial(&(nat(2 * m) + a - &one), m)
        * gen_binomial(&(&mm + &ss + &half_amb), m)
        / (gen_binomial(&nat(2 * m), m)
            * gen_binomial(&(nat(2 * m + 2 * s) + a), 2 * m)
            * gen_binomial(&(&mm + &half_apb), m));

    let high = gen_binomial(&(nat(2 * m + 2 * s) + a - &one), m + s)
        * gen_binomial(&(nat(2 * m) + a - &one), m)
        * gen_binomial(&(nat(2 * m + s) + &half_apb), 2 * m + s)
        / (gen_binomial(&(nat(4 * m + 2 * s) + a - &one), 2 * m + s)
            * gen_binomial(&(&mm + &ss + &half_apb), m + s)
            * gen_binomial(&(&mm + &half_apb), m));

    let low_next = int(4) * b * &mm * (&mm + &ss + a) * (nat(2 * s + 2) + a)
        / ((nat(2 * m + 2 * s + 1) + a) * (nat(2 * m) + a - &one) * (nat(2 * s + 1) + a - b))
        * &low;

    let high_prev = int(4) * b * &mm * (&mm + &ss) * (nat(4 * m + 2 * s) + a - &two)
        / ((nat(4 * m + 2 * s) + a + b - &one)
            * (nat(2 * m + 2 * s) + a - &one)
            * (nat(2 * m) + a - &one))
        * &high;

    BoundaryCoeffs { low, low_next, high_prev, high }
}

/// All `g_R(m, n; k)`, `|m-n| <= k <= m+n`.
pub fn linearize_jacobi(p: &JacobiParams, m: u32, n: u32) -> CoeffVector {
    linearize_with_family(p, m, n, Family::Jacobi)
}

/// Linearization for `R^(alpha, beta+1)`, the sequence behind the odd
/// generalized Chebyshev polynomials.
pub fn linearize_jacobi_plus(p: &JacobiParams, m: u32, n: u32) -> CoeffVector {
    linearize_with_family(&p.plus(), m, n, Family::JacobiPlus)
}

fn linearize_with_family(p: &JacobiParams, m: u32, n: u32, family: Family) -> CoeffVector {
    let (m_in, n_in) = (m, n);
    let (m, n) = (m.min(n), m.max(n));
    if m == 0 {
        return CoeffVector::new(m_in, n_in, family, vec![Rational::one()]);
    }
    let s = n - m;
    let top = 2 * m as usize;
    let bc = gasper_boundary(p, m, s);
    let mut g = vec![Rational::zero(); top + 1];
    g[0] = bc.low;
    g[1] = bc.low_next;
    g[top] = bc.high;

    if m == 1 {
        assert_eq!(g[1], bc.high_prev, "closed forms for g_R(1, 1+s; s+1) disagree at {p}");
    } else {
        for j in 1..top - 1 {
            let jr = nat(j as u32);
            let (th, io, ka) = theta_iota_kappa(p, m, s, &jr).expect("integer j is never a pole");
            g[j + 1] = (io * &g[j] + ka * &g[j - 1]) / th;
        }
        assert_eq!(
            g[top - 1],
            bc.high_prev,
            "recursion disagrees with closed form g_R({m}, {n}; {}) at {p}",
            s + 2 * m - 1
        );
    }
    // last recursion instance, never divided through
    let jr = nat(2 * m - 1);
    let (th, io, ka) = theta_iota_kappa(p, m, s, &jr).expect("integer j is never a pole");
    assert_eq!(
        th * &g[top],
        io * &g[top - 1] + ka * &g[top - 2],
        "recursion identity fails at j = 2m-1 for ({m}, {n}) at {p}"
    );
    CoeffVector::new(m_in, n_in, family, g)
}

/// Coefficients of the swapped sequence `R_n^(beta, alpha)`, from those of
/// `R_n^(alpha, beta)`:
///
/// ```text
/// (-1)^(m+n+k) g~(m,n;k) = (alpha+1)_m (alpha+1)_n (beta+1)_k
///                          / ((alpha+1)_k (beta+1)_m (beta+1)_n) * g(m,n;k)
/// ```
pub fn reflect_coeffs(p: &JacobiParams, cv: &CoeffVector) -> Result<CoeffVector, LinearizeError> {
    if cv.family() != Family::Jacobi {
        return Err(LinearizeError::WrongFamily { expected: "jacobi", got: cv.family().as_str() });
    }
    let (m, n) = (cv.m(), cv.n());
    let a1 = p.alpha() + Rational::one();
    let b1 = p.beta() + Rational::one();
    let head = pochhammer(&a1, m) * pochhammer(&a1, n) / (pochhammer(&b1, m) * pochhammer(&b1, n));
    let values = cv
        .iter()
        .map(|(k, g)| {
            sign_power(u64::from(m + n + k)) * &head * pochhammer(&b1, k) / pochhammer(&a1, k) * g
        })
        .collect();
    Ok(CoeffVector::new(m, n, Family::Jacobi, values))
}

/// `(-1)^(m+n+k) g~(m,n;k)` for every `k`; nonnegative for all `m, n` exactly
/// when `(alpha, beta)` lies in `V`.
pub fn oscillation_values(p: &JacobiParams, cv: &CoeffVector) -> Result<Vec<Rational>, LinearizeError> {
    let refl = reflect_coeffs(p, cv)?;
    Ok(refl
        .iter()
        .map(|(k, v)| sign_power(u64::from(cv.m() + cv.n() + k)) * v)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn params(a: (i64, i64), b: (i64, i64)) -> JacobiParams {
        JacobiParams::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    #[test]
    fn rec_coeff_examples() {
        let rc = jacobi_rec_coeffs(&params((1, 1), (0, 1)), 1);
        assert_eq!((rc.a, rc.b, rc.c), (rat(27, 40), rat(1, 5), Some(rat(1, 8))));
        let rc = jacobi_rec_coeffs(&params((0, 1), (0, 1)), 1);
        assert_eq!((rc.a, rc.b, rc.c), (rat(2, 3), int(0), Some(rat(1, 3))));
        let rc = jacobi_rec_coeffs(&params((-1, 2), (-1, 2)), 2);
        assert_eq!((rc.a, rc.b, rc.c), (rat(1, 2), int(0), Some(rat(1, 2))));
        let rc0 = jacobi_rec_coeffs(&params((1, 1), (0, 1)), 0);
        assert_eq!((rc0.a, rc0.b, rc0.c), (rat(4, 3), rat(-1, 3), None));
    }

    #[test]
    fn eval_examples() {
        let p = params((1, 1), (0, 1));
        assert_eq!(jacobi_eval(&p, 1, &int(0)), rat(1, 4));
        for n in 0..7 {
            assert_eq!(jacobi_eval(&p, n, &int(1)), int(1));
        }
        assert_eq!(jacobi_eval(&params((0, 1), (0, 1)), 2, &int(0)), rat(-1, 2));
    }

    #[test]
    fn kappa_special_case_and_pole() {
        // a = 0
        let p = params((-1, 4), (-3, 4));
        assert_eq!(kappa(&p, 2, 0, &int(1)).unwrap(), int(0));
        // a = -1/5: pole at 2j + a = 2, i.e. j = 11/10
        let q = params((-33, 100), (-87, 100));
        assert!(kappa(&q, 2, 0, &rat(11, 10)).is_err());
        assert!(kappa(&q, 2, 0, &int(1)).unwrap() != int(0));
    }

    #[test]
    fn theta_kappa_positive_on_integer_ranges() {
        for p in [params((1, 1), (0, 1)), params((-33, 100), (-87, 100)), params((-1, 2), (-1, 2))] {
            for m in 2..6 {
                for s in 0..4 {
                    for j in 1..=2 * m - 2 {
                        assert!(theta(&p, m, s, &nat(j)) > int(0));
                    }
                    for j in 2..=2 * m - 1 {
                        assert!(kappa(&p, m, s, &nat(j)).unwrap() > int(0));
                    }
                }
            }
        }
    }

    #[test]
    fn iota_vanishes_for_ultraspherical() {
        let p = params((3, 7), (3, 7));
        for j in [int(1), rat(3, 2), int(3)] {
            assert_eq!(iota(&p, 2, 1, &j), int(0));
        }
    }

    #[test]
    fn boundary_examples() {
        let p = params((1, 1), (0, 1));
        let bc = gasper_boundary(&p, 1, 0);
        assert_eq!(
            (bc.low, bc.low_next, bc.high_prev, bc.high),
            (rat(1, 8), rat(1, 5), rat(1, 5), rat(27, 40))
        );
        let bc = gasper_boundary(&params((1, 2), (1, 2)), 3, 2);
        assert_eq!((bc.low_next, bc.high_prev), (int(0), int(0)));
    }

    #[test]
    fn linearize_examples() {
        let p = params((1, 1), (0, 1));
        assert_eq!(linearize_jacobi(&p, 1, 1).values(), &[rat(1, 8), rat(1, 5), rat(27, 40)]);
        assert_eq!(linearize_jacobi(&p, 2, 2).get(2), rat(8, 35));
        let q = params((-1, 2), (0, 1));
        assert_eq!(linearize_jacobi(&q, 1, 1).get(1), rat(-4, 7));
        assert_eq!(linearize_jacobi(&p, 0, 5).values(), &[int(1)]);
    }

    #[test]
    fn vector_invariants() {
        let p = params((-3, 10), (-4, 5));
        for m in 0..6 {
            for n in 0..6 {
                let cv = linearize_jacobi(&p, m, n);
                assert_eq!(cv.sum(), int(1));
                assert!(cv.get(cv.k_min()) > int(0));
                assert!(cv.get(cv.k_max()) > int(0));
                assert_eq!(cv.values(), linearize_jacobi(&p, n, m).values());
            }
        }
    }

    #[test]
    fn reflect_examples() {
        let p = params((1, 1), (0, 1));
        let r = reflect_coeffs(&p, &linearize_jacobi(&p, 1, 1)).unwrap();
        assert_eq!(r, linearize_jacobi(&p.swapped(), 1, 1));
        let r = reflect_coeffs(&p, &linearize_jacobi(&p, 1, 2)).unwrap();
        assert_eq!(r, linearize_jacobi(&p.swapped(), 1, 2));
        let u = params((2, 3), (2, 3));
        let cv = linearize_jacobi(&u, 2, 3);
        assert_eq!(reflect_coeffs(&u, &cv).unwrap(), cv);
        let plus = linearize_jacobi_plus(&p, 1, 1);
        assert!(reflect_coeffs(&p, &plus).is_err());
    }
}
