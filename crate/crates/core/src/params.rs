//! Jacobi parameters, the `(a, b)` reparametrization and region membership.
//!
//! With `a = alpha + beta + 1` and `b = alpha - beta` the regions are plain
//! polynomial sign conditions:
//!
//! * `Delta = { a >= 0, b >= 0 }`
//! * `V = { b >= 0, (a^2 + 2b^2 + 3a)(a+3)(a+5) >= 3(a+1)(a+2) b^2 }`
//! * `V' = { b >= 0, a^2 + 2b^2 + 3a >= 0 }`
//!
//! and `Delta ⊂ V ⊂ V'`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::ParamError;
use crate::kernel::{int, Rational};

/// Validated `(alpha, beta)` with `alpha, beta > -1`, plus the derived
/// `a = alpha + beta + 1` and `b = alpha - beta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JacobiParams {
    alpha: Rational,
    beta: Rational,
    a: Rational,
    b: Rational,
}

impl JacobiParams {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self, ParamError> {
        let minus_one = -Rational::one();
        if alpha <= minus_one || beta <= minus_one {
            return Err(ParamError::OutOfRange);
        }
        let a = &alpha + &beta + Rational::one();
        let b = &alpha - &beta;
        Ok(Self { alpha, beta, a, b })
    }

    /// Inverse of the reparametrization: `alpha = (a+b-1)/2`, `beta = (a-b-1)/2`.
    pub fn from_ab(a: Rational, b: Rational) -> Result<Self, ParamError> {
        let two = int(2);
        let alpha = (&a + &b - Rational::one()) / &two;
        let beta = (&a - &b - Rational::one()) / &two;
        Self::new(alpha, beta)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }
    pub fn beta(&self) -> &Rational {
        &self.beta
    }
    pub fn a(&self) -> &Rational {
        &self.a
    }
    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `(alpha, beta + 1)`, the parameters of the odd-degree generalized
    /// Chebyshev polynomials. In `(a, b)` terms this is `(a + 1, b - 1)`.
    pub fn plus(&self) -> Self {
        Self::new(self.alpha.clone(), &self.beta + Rational::one())
            .expect("beta + 1 > -1 whenever beta > -1")
    }

    /// `(beta, alpha)`.
    pub fn swapped(&self) -> Self {
        Self::new(self.beta.clone(), self.alpha.clone()).expect("swap preserves range")
    }

    /// `a^2 + 2b^2 + 3a`, the quantity defining `V'`.
    pub fn vprime_form(&self) -> Rational {
        &self.a * &self.a + int(2) * &self.b * &self.b + int(3) * &self.a
    }

    /// `(a^2+2b^2+3a)(a+3)(a+5) - 3(a+1)(a+2)b^2`; `V` is where this and
    /// `b` are both nonnegative.
    pub fn v_form(&self) -> Rational {
        let a = &self.a;
        let b2 = &self.b * &self.b;
        self.vprime_form() * (a + int(3)) * (a + int(5))
            - int(3) * (a + int(1)) * (a + int(2)) * b2
    }

    /// `4a^2 + 11a + 3`. For `a > -1` it is positive exactly when
    /// `a > (-11 + sqrt 73) / 8`.
    pub fn iota_threshold_form(&self) -> Rational {
        int(4) * &self.a * &self.a + int(11) * &self.a + int(3)
    }
}

impl fmt::Display for JacobiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::kernel::format_rational as fr;
        write!(f, "(alpha, beta) = ({}, {})", fr(&self.alpha), fr(&self.beta))
    }
}

/// Free-function spelling of [`JacobiParams::new`].
pub fn make_params(alpha: Rational, beta: Rational) -> Result<JacobiParams, ParamError> {
    JacobiParams::new(alpha, beta)
}

/// Finest region class of a parameter point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    /// Interior of `Delta`.
    DeltaInterior,
    /// Boundary of `Delta` (every such point lies in `V`).
    DeltaBoundary,
    /// Interior of `V` minus `Delta`.
    VInteriorMinusDelta,
    /// Boundary of `V` outside `Delta`.
    VBoundary,
    /// `V' \ V`.
    VPrimeMinusV,
    /// Outside `V'`.
    OutsideVPrime,
}

impl RegionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::DeltaInterior => "Δ°",
            RegionLabel::DeltaBoundary => "∂Δ∩V",
            RegionLabel::VInteriorMinusDelta => "V°\\Δ",
            RegionLabel::VBoundary => "∂V",
            RegionLabel::VPrimeMinusV => "V′\\V",
            RegionLabel::OutsideVPrime => "outside V′",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionReport {
    pub in_delta: bool,
    pub in_delta_interior: bool,
    pub in_v: bool,
    pub in_v_interior: bool,
    pub in_vprime: bool,
    /// `4a^2 + 11a + 3 > 0`. Equality cannot happen at rational `a` (the
    /// roots are irrational), so this is a clean two-way split.
    pub above_iota_threshold: bool,
    pub label: RegionLabel,
}

pub fn classify_region(p: &JacobiParams) -> RegionReport {
    let zero = Rational::zero();
    let (a, b) = (p.a(), p.b());
    let in_delta = *a >= zero && *b >= zero;
    let in_delta_interior = *a > zero && *b > zero;
    let v_form = p.v_form();
    let in_v = *b >= zero && v_form >= zero;
    let in_v_interior = *b > zero && v_form > zero;
    let in_vprime = *b >= zero && p.vprime_form() >= zero;
    let above_iota_threshold = p.iota_threshold_form() > zero;

    let label = if in_delta_interior {
        RegionLabel::DeltaInterior
    } else if in_delta {
        RegionLabel::DeltaBoundary
    } else if in_v_interior {
        RegionLabel::VInteriorMinusDelta
    } else if in_v {
        RegionLabel::VBoundary
    } else if in_vprime {
        RegionLabel::VPrimeMinusV
    } else {
        RegionLabel::OutsideVPrime
    };

    RegionReport {
        in_delta,
        in_delta_interior,
        in_v,
        in_v_interior,
        in_vprime,
        above_iota_threshold,
        label,
    }
}
