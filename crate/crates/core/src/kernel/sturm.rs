//! Exact real-root counting by Sturm sequences.

use num_traits::Zero;

use super::poly::RationalPolynomial;
use super::rational::{signum, Rational};
use crate::error::KernelError;

/// Sturm chain `p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i)`.
pub fn sturm_sequence(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut seq = vec![p.clone()];
    if p.is_zero() {
        return seq;
    }
    let mut prev = p.clone();
    let mut cur = p.derivative();
    while !cur.is_zero() {
        let rem = prev.div_rem(&cur).1;
        seq.push(cur.clone());
        prev = cur;
        cur = -&rem;
    }
    seq
}

fn sign_changes(seq: &[RationalPolynomial], x: &Rational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|q| signum(&q.eval(x)))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
///
/// A root sitting exactly at `lo` is not counted, one at `hi` is. Multiple
/// roots count once: the chain is built on the square-free part.
pub fn count_real_roots(
    p: &RationalPolynomial,
    lo: &Rational,
    hi: &Rational,
) -> Result<usize, KernelError> {
    if p.is_zero() {
        return Err(KernelError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(KernelError::EmptyInterval);
    }
    let sf = p.square_free_part();
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    let seq = sturm_sequence(&sf);
    let v_lo = sign_changes(&seq, lo);
    let v_hi = sign_changes(&seq, hi);
    debug_assert!(v_lo >= v_hi);
    Ok(v_lo - v_hi)
}

/// Roots in the closed interval `[lo, hi]`.
pub fn count_real_roots_closed(
    p: &RationalPolynomial,
    lo: &Rational,
    hi: &Rational,
) -> Result<usize, KernelError> {
    let at_lo = usize::from(p.eval(lo).is_zero() && !p.is_zero());
    Ok(count_real_roots(p, lo, hi)? + at_lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{int, rat};

    fn from_roots(roots: &[Rational]) -> RationalPolynomial {
        roots.iter().fold(RationalPolynomial::constant(int(1)), |acc, r| {
            &acc * &RationalPolynomial::linear(-r.clone(), int(1))
        })
    }

    #[test]
    fn spec_examples() {
        let p = RationalPolynomial::new(vec![int(2), int(-3), int(1)]);
        assert_eq!(count_real_roots(&p, &int(0), &rat(5, 2)).unwrap(), 2);
        let q = RationalPolynomial::new(vec![int(1), int(0), int(1)]);
        assert_eq!(count_real_roots(&q, &int(-10), &int(10)).unwrap(), 0);
    }

    #[test]
    fn endpoint_convention() {
        let p = from_roots(&[int(1), int(2)]);
        // root at lo excluded, root at hi included
        assert_eq!(count_real_roots(&p, &int(1), &int(2)).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &int(0), &int(1)).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &int(2), &int(3)).unwrap(), 0);
        assert_eq!(count_real_roots_closed(&p, &int(1), &int(2)).unwrap(), 2);
    }

    #[test]
    fn multiple_roots_count_once() {
        let p = from_roots(&[int(1), int(1), int(1), rat(-1, 2), rat(-1, 2)]);
        assert_eq!(count_real_roots(&p, &int(-5), &int(5)).unwrap(), 2);
    }

    #[test]
    fn errors() {
        assert_eq!(
            count_real_roots(&RationalPolynomial::zero(), &int(0), &int(1)),
            Err(KernelError::ZeroPolynomial)
        );
        let p = from_roots(&[int(1)]);
        assert_eq!(count_real_roots(&p, &int(1), &int(1)), Err(KernelError::EmptyInterval));
        assert_eq!(count_real_roots(&RationalPolynomial::constant(int(3)), &int(0), &int(1)), Ok(0));
    }
}
