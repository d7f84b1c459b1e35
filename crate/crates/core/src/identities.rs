//! Exact audits of closed forms that tie the recursion to explicit
//! polynomials in `(a, b, m, s)`. Each audit reassembles its left-hand side
//! from linearization coefficients and recursion data and pairs it with the
//! polynomial right-hand side; the two must agree exactly.

use num_traits::{One, Zero};

use crate::error::AnalysisError;
use crate::gencheb::gencheb_rec_coeffs;
use crate::jacobi::{kappa, linearize_jacobi, linearize_jacobi_plus, theta, iota};
use crate::kernel::{int, Rational};
use crate::params::JacobiParams;

/// Both sides of one exact identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `Err(IdentityFailed)` unless both sides agree.
    pub fn require(self) -> Result<Self, AnalysisError> {
        if self.holds() {
            Ok(self)
        } else {
            Err(AnalysisError::IdentityFailed(format!("{}: {} != {}", self.name, self.lhs, self.rhs)))
        }
    }
}

fn nat(n: u32) -> Rational {
    int(i64::from(n))
}

fn check_m(m: u32, min: u32) -> Result<(), AnalysisError> {
    if m < min {
        return Err(AnalysisError::BadIndex("m too small for this identity"));
    }
    Ok(())
}

/// `g_R(1, 1; 1)` by the recursion and by `4b / ((a+3)(a+b+1))`.
pub fn closed_form_g111(p: &JacobiParams) -> IdentityCheck {
    let (a, b) = (p.a(), p.b());
    IdentityCheck {
        name: "g_R(1,1;1)",
        lhs: linearize_jacobi(p, 1, 1).get(1),
        rhs: int(4) * b / ((a + int(3)) * (a + b + int(1))),
    }
}

/// `g_R(2, 2; 2)` by the recursion and by its explicit rational form, whose
/// numerator is the quartic defining `V`.
pub fn closed_form_g222(p: &JacobiParams) -> IdentityCheck {
    let (a, b) = (p.a(), p.b());
    let num = int(4) * p.v_form();
    let den = (a + int(3)) * (a + int(5)) * (a + int(6)) * (a + b + int(1)) * (a + b + int(3));
    IdentityCheck { name: "g_R(2,2;2)", lhs: linearize_jacobi(p, 2, 2).get(2), rhs: num / den }
}

/// The normalized lowest-end recursion step, `m >= 2`:
/// a positive multiple of `theta(1) g_R(m, m+s; s+2)` expanded as a
/// polynomial that is visibly positive on `V`.
pub fn gasper_low_end(p: &JacobiParams, m: u32, s: u32) -> Result<IdentityCheck, AnalysisError> {
    check_m(m, 2)?;
    let (a, b) = (p.a(), p.b());
    let (mm, ss) = (nat(m), nat(s));
    let one = Rational::one();
    let g = linearize_jacobi(p, m, m + s);
    let (g0, g1, g2) = (g.get(s), g.get(s + 1), g.get(s + 2));
    let j = one.clone();
    let scale = (int(2) * &mm + a - &one)
        * (int(2) * &ss + a - b + &one)
        * (int(2) * &mm + int(2) * &ss + a + &one)
        * (int(2) * &ss + a + int(3))
        / (int(4) * &mm * (&mm + &ss + a) * (int(2) * &ss + a + &one) * &g0);
    let via_theta = &scale * theta(p, m, s, &j) * &g2;
    let ka = kappa(p, m, s, &j).map_err(|e| AnalysisError::Singular(e.to_string()))?;
    let via_sum = &scale * (iota(p, m, s, &j) * &g1 + ka * &g0);
    if via_theta != via_sum {
        return Err(AnalysisError::IdentityFailed("recursion step at j = 1".into()));
    }
    let m4 = int(2) * &mm - int(4);
    let vp = p.vprime_form();
    let rhs = (b * b + a) * &m4 * (int(2) * &mm + int(2) * &ss + int(2) * a + int(4)) * int(2) * &ss
        + &vp
            * (&m4 * (int(2) * &mm + int(2) * &ss + int(2) * a + int(4))
                + int(2) * &ss * (int(2) * &ss + int(2) * a + int(8))
                + (a + int(3)) * (a + int(5)))
        - int(3) * (a + &one) * (a + int(2)) * b * b;
    Ok(IdentityCheck { name: "low-end recursion step", lhs: via_theta, rhs })
}

/// The top-end counterpart of [`gasper_low_end`] for
/// `kappa(2m-1) g_R(m, m+s; s+2m-2)`, `m >= 2`.
pub fn gasper_high_end(p: &JacobiParams, m: u32, s: u32) -> Result<IdentityCheck, AnalysisError> {
    check_m(m, 2)?;
    let (a, b) = (p.a(), p.b());
    let (mm, ss) = (nat(m), nat(s));
    let one = Rational::one();
    let g = linearize_jacobi(p, m, m + s);
    let top = s + 2 * m;
    let (gt, gt1, gt2) = (g.get(top), g.get(top - 1), g.get(top - 2));
    let j = nat(2 * m - 1);
    let scale = (int(2) * &mm + a - &one)
        * (int(2) * &mm + int(2) * &ss + a - &one)
        * (int(4) * &mm + int(2) * &ss + a - int(3))
        * (int(4) * &mm + int(2) * &ss + a + b - &one)
        / (int(4) * &mm * (&mm + &ss) * (int(4) * &mm + int(2) * &ss + a - &one) * &gt);
    let ka = kappa(p, m, s, &j).map_err(|e| AnalysisError::Singular(e.to_string()))?;
    let via_kappa = &scale * ka * &gt2;
    let via_diff = &scale * (theta(p, m, s, &j) * &gt - iota(p, m, s, &j) * &gt1);
    if via_kappa != via_diff {
        return Err(AnalysisError::IdentityFailed("recursion step at j = 2m-1".into()));
    }
    let m4 = int(2) * &mm - int(4);
    let vp = p.vprime_form();
    let rhs = (b * b + a)
        * &m4
        * (int(2) * &mm + int(2) * &ss - int(4))
        * (int(4) * &mm + int(2) * &ss + int(2) * a)
        + &vp
            * (&m4 * (int(6) * &mm + int(6) * &ss + int(4) * a + int(4))
                + int(2) * &ss * (int(2) * &ss + int(2) * a + int(8))
                + (a + int(3)) * (a + int(5)))
        - int(3) * (a + &one) * (a + int(2)) * b * b;
    Ok(IdentityCheck { name: "high-end recursion step", lhs: via_kappa, rhs })
}

/// First necessary-condition identity for the odd generalized Chebyshev
/// coefficients: the sign of `g_T(2m+1, 2m+2s+1; 2s+2)` is carried by
/// `4bm^2 + 4b(s+a+1)m + a(2s+a+b+1)`. `m >= 1`.
pub fn nec_first(p: &JacobiParams, m: u32, s: u32) -> Result<IdentityCheck, AnalysisError> {
    check_m(m, 1)?;
    let (a, b) = (p.a(), p.b());
    let (mm, ss) = (nat(m), nat(s));
    let one = Rational::one();
    let gp = linearize_jacobi_plus(p, m, m + s);
    let ratio = gencheb_rec_coeffs(p, 2 * s + 3).c / gencheb_rec_coeffs(p, 2 * s + 1).a * gp.get(s + 1)
        / gp.get(s);
    let lhs = (int(2) * &mm + a)
        * (int(2) * &mm + int(2) * &ss + a + int(2))
        * (int(2) * &ss + a + b + &one)
        / (int(2) * &ss + a + int(2))
        * (ratio + &one);
    let rhs = int(4) * b * &mm * &mm
        + int(4) * b * (&ss + a + &one) * &mm
        + a * (int(2) * &ss + a + b + &one);
    Ok(IdentityCheck { name: "first necessary condition", lhs, rhs })
}

/// Second necessary-condition identity, for `g_T(2m+1, 2m+2s+1; 2s+4)`.
/// Requires `b != 1`, where `g_R^+(m, m+s; s+1)` vanishes.
pub fn nec_second(p: &JacobiParams, m: u32, s: u32) -> Result<IdentityCheck, AnalysisError> {
    check_m(m, 1)?;
    let (a, b) = (p.a(), p.b());
    let one = Rational::one();
    if b == &one {
        return Err(AnalysisError::Singular("b = 1".into()));
    }
    let (mm, ss) = (nat(m), nat(s));
    let gp = linearize_jacobi_plus(p, m, m + s);
    let ratio = gencheb_rec_coeffs(p, 2 * s + 5).c / gencheb_rec_coeffs(p, 2 * s + 3).a * gp.get(s + 2)
        / gp.get(s + 1);
    let lhs = int(4)
        * (b - &one)
        * (int(2) * &mm + a - &one)
        * (int(2) * &mm + int(2) * &ss + a + int(3))
        * (&ss + &one)
        * (int(2) * &ss + a + b + int(3))
        / (int(2) * &ss + a + int(4))
        * (ratio + &one);
    let vp = p.vprime_form();
    let rhs = (int(4) * &mm - int(4))
        * (&mm + &ss + a + int(2))
        * (&vp * (&ss + &one) - a * (a + &one) * &ss)
        + (a + &one)
            * (int(2) * &ss + a + b + int(3))
            * ((a + int(2) * b) * (int(2) * &ss + int(2) - b) + &vp);
    Ok(IdentityCheck { name: "second necessary condition", lhs, rhs })
}

/// Every identity above at one `(p, m, s)`; skips those whose preconditions
/// fail (`m < 2`, `b = 1`).
pub fn all_identities(p: &JacobiParams, m: u32, s: u32) -> Result<Vec<IdentityCheck>, AnalysisError> {
    let mut out = vec![closed_form_g111(p), closed_form_g222(p)];
    if m >= 2 {
        out.push(gasper_low_end(p, m, s)?);
        out.push(gasper_high_end(p, m, s)?);
    }
    if m >= 1 {
        out.push(nec_first(p, m, s)?);
        if !(p.b() - Rational::one()).is_zero() {
            out.push(nec_second(p, m, s)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rat;

    fn params(a: (i64, i64), b: (i64, i64)) -> JacobiParams {
        JacobiParams::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    #[test]
    fn identities_hold_on_a_few_points() {
        for p in [params((1, 1), (0, 1)), params((-33, 100), (-87, 100)), params((-1, 2), (0, 1)), params((2, 3), (5, 2))] {
            for m in 1..5 {
                for s in 0..4 {
                    for c in all_identities(&p, m, s).unwrap() {
                        assert!(c.holds(), "{} at {p}, m={m}, s={s}", c.name);
                    }
                }
            }
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(closed_form_g111(&params((-1, 2), (0, 1))).lhs, rat(-4, 7));
        assert_eq!(closed_form_g222(&params((1, 1), (0, 1))).rhs, rat(8, 35));
    }

    #[test]
    fn preconditions() {
        let p = params((1, 1), (0, 1)); // b = 1
        assert!(nec_second(&p, 2, 0).is_err());
        assert!(gasper_low_end(&p, 1, 0).is_err());
    }
}
