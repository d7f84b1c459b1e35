//! Generalized Chebyshev polynomials
//!
//! ```text
//! T_2n(x)   = R_n^(alpha, beta)(2x^2 - 1)
//! T_2n+1(x) = x R_n^(alpha, beta+1)(2x^2 - 1)
//! ```
//!
//! and their linearization coefficients `g_T`, assembled from `g_R` (even
//! products), `g_R^+` (odd products) and the normalization `h_T` (mixed
//! products).

use num_traits::{One, Zero};

use crate::coeffs::{CoeffVector, Family};
use crate::jacobi::{gasper_boundary, jacobi_eval, linearize_jacobi, linearize_jacobi_plus};
use crate::kernel::{int, Rational};
use crate::params::JacobiParams;

/// `x T_n = a_n T_{n+1} + c_n T_{n-1}`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenChebCoeffs {
    pub degree: u32,
    pub a: Rational,
    pub c: Rational,
}

/// Parity-split closed forms, evaluated in both the `(alpha, beta)` and the
/// `(a, b)` spelling and cross-checked. Panics for `n = 0`.
pub fn gencheb_rec_coeffs(p: &JacobiParams, n: u32) -> GenChebCoeffs {
    assert!(n >= 1, "generalized Chebyshev recurrence starts at n = 1");
    let (al, be) = (p.alpha(), p.beta());
    let (a, b) = (p.a(), p.b());
    let one = Rational::one();
    let half = int(i64::from(n.div_ceil(2)));
    let (ca, cc, ab_a, ab_c) = if n % 2 == 1 {
        let den = int(2) * &half + al + be;
        let ab_den = int(4) * &half + int(2) * a - int(2);
        (
            (&half + al) / &den,
            (&half + be) / &den,
            (int(2) * &half + a + b - &one) / &ab_den,
            (int(2) * &half + a - b - &one) / &ab_den,
        )
    } else {
        let den = int(2) * &half + al + be + &one;
        let ab_den = int(2) * &half + a;
        (
            (&half + al + be + &one) / &den,
            &half / &den,
            (&half + a) / &ab_den,
            &half / &ab_den,
        )
    };
    assert_eq!((&ca, &cc), (&ab_a, &ab_c), "generalized Chebyshev closed forms disagree at {p}, n = {n}");
    GenChebCoeffs { degree: n, a: ca, c: cc }
}

fn eval_by_recurrence(p: &JacobiParams, n: u32, x: &Rational) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let (mut prev, mut cur) = (Rational::one(), x.clone());
    for k in 1..n {
        let rc = gencheb_rec_coeffs(p, k);
        let next = (x * &cur - rc.c * &prev) / rc.a;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `T_n(x)` via the quadratic transformation, checked against the
/// three-term recurrence.
pub fn gencheb_eval(p: &JacobiParams, n: u32, x: &Rational) -> Rational {
    let y = int(2) * x * x - Rational::one();
    let value = if n % 2 == 0 {
        jacobi_eval(p, n / 2, &y)
    } else {
        x * jacobi_eval(&p.plus(), n / 2, &y)
    };
    assert_eq!(value, eval_by_recurrence(p, n, x), "T_{n} evaluations disagree at {p}");
    value
}

/// `h_T(0) ..= h_T(N)` with `h_T(n) = 1 / g_T(n, n; 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormTable {
    values: Vec<Rational>,
}

impl NormTable {
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Panics beyond the table length.
    pub fn get(&self, n: u32) -> &Rational {
        &self.values[n as usize]
    }

    pub fn max_degree(&self) -> u32 {
        self.values.len() as u32 - 1
    }
}

/// `g_T(n, n; 0)` straight from the closed-form lowest coefficients:
/// `g_R(r, r; 0)` for `n = 2r`, `c_1^T g_R^+(r, r; 0)` for `n = 2r + 1`.
fn diagonal_lowest(p: &JacobiParams, n: u32) -> Rational {
    let r = n / 2;
    if n % 2 == 0 {
        if r == 0 {
            Rational::one()
        } else {
            gasper_boundary(p, r, 0).low
        }
    } else {
        let plus_low = if r == 0 { Rational::one() } else { gasper_boundary(&p.plus(), r, 0).low };
        gencheb_rec_coeffs(p, 1).c * plus_low
    }
}

pub fn gencheb_norm_h(p: &JacobiParams, max_degree: u32) -> NormTable {
    NormTable { values: (0..=max_degree).map(|n| diagonal_lowest(p, n).recip()).collect() }
}

/// Generalized Chebyshev linearization at one parameter point. The norm
/// table is built once, up front, so a linearizer can be shared freely
/// between threads.
#[derive(Clone, Debug)]
pub struct GenChebLinearizer {
    params: JacobiParams,
    norm: NormTable,
}

impl GenChebLinearizer {
    /// Supports every product with `m + n <= max_degree`.
    pub fn new(params: &JacobiParams, max_degree: u32) -> Self {
        Self { params: params.clone(), norm: gencheb_norm_h(params, max_degree) }
    }

    pub fn params(&self) -> &JacobiParams {
        &self.params
    }

    pub fn norm(&self) -> &NormTable {
        &self.norm
    }

    pub fn linearize(&self, m: u32, n: u32) -> CoeffVector {
        assert!(
            m + n <= self.norm.max_degree(),
            "product degree {} exceeds linearizer capacity {}",
            m + n,
            self.norm.max_degree()
        );
        if m == 0 || n == 0 {
            return CoeffVector::new(m, n, Family::GenCheb, vec![Rational::one()]);
        }
        let values = match (m % 2, n % 2) {
            (0, 0) => self.even_even(m / 2, n / 2),
            (1, 1) => self.odd_odd(m / 2, n / 2),
            (1, 0) => self.odd_even(m / 2, n / 2),
            // g_T(2m, 2n+1; 2k+1) = g_T(2n+1, 2m; 2k+1)
            _ => self.odd_even(n / 2, m / 2),
        };
        CoeffVector::new(m, n, Family::GenCheb, values)
    }

    /// `g_T(2m, 2n; 2k) = g_R(m, n; k)`, zeros at odd offsets.
    fn even_even(&self, m: u32, n: u32) -> Vec<Rational> {
        let gr = linearize_jacobi(&self.params, m, n);
        interleave(gr.values())
    }

    /// `g_T(2m+1, 2n+1; 2k)` from `g_R^+(m, n; .)`.
    fn odd_odd(&self, m: u32, n: u32) -> Vec<Rational> {
        let gp = linearize_jacobi_plus(&self.params, m, n);
        let lo = m.abs_diff(n);
        let hi = m + n;
        let mut out = Vec::with_capacity(2 * (hi - lo + 1) as usize + 1);
        for k in lo..=hi + 1 {
            if k > lo {
                out.push(Rational::zero());
            }
            let mut v = Rational::zero();
            if k > lo {
                v += gencheb_rec_coeffs(&self.params, 2 * k - 1).a * gp.get(k - 1);
            }
            if k <= hi {
                v += gencheb_rec_coeffs(&self.params, 2 * k + 1).c * gp.get(k);
            }
            out.push(v);
        }
        out
    }

    /// `g_T(2m+1, 2n; 2k+1) = h_T(2k+1) / h_T(2n) * g_T(2m+1, 2k+1; 2n)`.
    fn odd_even(&self, m: u32, n: u32) -> Vec<Rational> {
        let (big_m, big_n) = (2 * m + 1, 2 * n);
        let lo = big_m.abs_diff(big_n);
        let hi = big_m + big_n;
        (lo..=hi)
            .map(|kk| {
                if (big_m + big_n - kk) % 2 == 1 {
                    return Rational::zero();
                }
                let k = kk / 2;
                let odd = self.odd_odd(m, k);
                // odd_odd(m, k) starts at index 2|m - k|
                let idx = (big_n - 2 * m.abs_diff(k)) as usize;
                self.norm.get(kk) / self.norm.get(big_n) * &odd[idx]
            })
            .collect()
    }
}

fn interleave(values: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(2 * values.len());
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            out.push(Rational::zero());
        }
        out.push(v.clone());
    }
    out
}

/// All `g_T(m, n; k)`, structural zeros included.
pub fn linearize_gencheb(p: &JacobiParams, m: u32, n: u32) -> CoeffVector {
    GenChebLinearizer::new(p, m + n).linearize(m, n)
}
