//! Independent oracle: expand both factors in monomials, multiply, and peel
//! the product back into the orthogonal basis from the top degree down.
//!
//! Shares nothing with the recursion-based routes except the three-term
//! recurrence coefficients used to build the basis.

use num_traits::{One, Zero};

use crate::coeffs::{CoeffVector, Family};
use crate::gencheb::gencheb_rec_coeffs;
use crate::jacobi::jacobi_rec_coeffs;
use crate::kernel::{Rational, RationalPolynomial};
use crate::params::JacobiParams;

/// Monomial expansions of `P_0 ..= P_N` for one family at one parameter point.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    family: Family,
    polys: Vec<RationalPolynomial>,
}

impl MonomialBasis {
    pub fn new(p: &JacobiParams, family: Family, max_degree: u32) -> Self {
        let polys = match family {
            Family::Jacobi => jacobi_basis(p, max_degree),
            Family::JacobiPlus => jacobi_basis(&p.plus(), max_degree),
            Family::GenCheb => gencheb_basis(p, max_degree),
        };
        Self { family, polys }
    }

    pub fn poly(&self, n: u32) -> &RationalPolynomial {
        &self.polys[n as usize]
    }

    pub fn max_degree(&self) -> u32 {
        self.polys.len() as u32 - 1
    }

    /// Coefficients of `f` in the basis, top degree first eliminated.
    /// Panics if `f` has degree above the basis.
    pub fn expand(&self, f: &RationalPolynomial) -> Vec<Rational> {
        let Some(deg) = f.degree() else {
            return Vec::new();
        };
        assert!(deg <= self.max_degree() as usize, "degree {deg} beyond basis");
        let mut rest = f.clone();
        let mut out = vec![Rational::zero(); deg + 1];
        for k in (0..=deg).rev() {
            let c = rest.coeff(k) / self.polys[k].leading().expect("basis polynomials are nonzero");
            if !c.is_zero() {
                rest = &rest - &self.polys[k].scale(&c);
            }
            out[k] = c;
        }
        debug_assert!(rest.is_zero());
        out
    }

    /// `P_m P_n` expanded back into the basis.
    pub fn linearize(&self, m: u32, n: u32) -> CoeffVector {
        let prod = self.poly(m) * self.poly(n);
        let full = self.expand(&prod);
        let lo = m.abs_diff(n) as usize;
        assert!(
            full[..lo].iter().all(Zero::is_zero),
            "product P_{m} P_{n} has components below |m - n|"
        );
        CoeffVector::new(m, n, self.family, full[lo..].to_vec())
    }
}

fn jacobi_basis(p: &JacobiParams, max_degree: u32) -> Vec<RationalPolynomial> {
    let mut polys = vec![RationalPolynomial::constant(Rational::one())];
    if max_degree == 0 {
        return polys;
    }
    let r0 = jacobi_rec_coeffs(p, 0);
    let inv = r0.a.recip();
    let r1 = RationalPolynomial::linear(-&r0.b * &inv, inv);
    polys.push(r1.clone());
    for k in 1..max_degree {
        let rc = jacobi_rec_coeffs(p, k);
        let shifted = &r1 - &RationalPolynomial::constant(rc.b);
        let k = k as usize;
        let num = &(&shifted * &polys[k]) - &polys[k - 1].scale(&rc.c.unwrap());
        polys.push(num.scale(&rc.a.recip()));
    }
    polys
}

fn gencheb_basis(p: &JacobiParams, max_degree: u32) -> Vec<RationalPolynomial> {
    let mut polys = vec![RationalPolynomial::constant(Rational::one())];
    if max_degree == 0 {
        return polys;
    }
    let x = RationalPolynomial::x();
    polys.push(x.clone());
    for k in 1..max_degree {
        let rc = gencheb_rec_coeffs(p, k);
        let k = k as usize;
        let num = &(&x * &polys[k]) - &polys[k - 1].scale(&rc.c);
        polys.push(num.scale(&rc.a.recip()));
    }
    polys
}

/// One-shot oracle linearization.
pub fn linearize_bruteforce(p: &JacobiParams, m: u32, n: u32, family: Family) -> CoeffVector {
    MonomialBasis::new(p, family, m + n).linearize(m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, rat};

    fn params(a: (i64, i64), b: (i64, i64)) -> JacobiParams {
        JacobiParams::new(rat(a.0, a.1), rat(b.0, b.1)).unwrap()
    }

    #[test]
    fn examples() {
        let p = params((1, 1), (0, 1));
        assert_eq!(
            linearize_bruteforce(&p, 1, 1, Family::Jacobi).values(),
            &[rat(1, 8), rat(1, 5), rat(27, 40)]
        );
        let cheb = params((-1, 2), (-1, 2));
        let v = linearize_bruteforce(&cheb, 1, 2, Family::Jacobi);
        assert_eq!(v.values(), &[rat(1, 2), int(0), rat(1, 2)]);
        for n in 0..5 {
            assert_eq!(linearize_bruteforce(&p, 0, n, Family::GenCheb).values(), &[int(1)]);
        }
    }

    #[test]
    fn basis_normalized_at_one() {
        let p = params((-33, 100), (-87, 100));
        for fam in [Family::Jacobi, Family::JacobiPlus, Family::GenCheb] {
            let basis = MonomialBasis::new(&p, fam, 9);
            for n in 0..=9 {
                assert_eq!(basis.poly(n).eval(&int(1)), int(1));
                assert_eq!(basis.poly(n).degree(), Some(n as usize));
            }
        }
    }
}
