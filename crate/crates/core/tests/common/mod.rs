//! Fixed parameter grid shared by the integration tests, grouped by region.
#![allow(dead_code)]

use linprod::kernel::{parse_rational, rat, Rational};
use linprod::{classify_region, JacobiParams, RegionLabel};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn p(alpha: &str, beta: &str) -> JacobiParams {
    JacobiParams::new(parse_rational(alpha).unwrap(), parse_rational(beta).unwrap()).unwrap()
}

/// `a > 0`, `b > 0`.
pub fn delta_interior() -> Vec<JacobiParams> {
    vec![p("1", "0"), p("1/2", "1/4"), p("1/2", "-1/2"), p("3", "1"), p("0", "-1/2"), p("-1/4", "-1/2")]
}

/// `a = 0`, `b > 0`: edge of `Delta` inside `V°`.
pub fn delta_edge_in_v_interior() -> Vec<JacobiParams> {
    vec![p("-1/4", "-3/4"), p("-1/8", "-7/8")]
}

/// `V° \ Delta`.
pub fn v_interior_minus_delta() -> Vec<JacobiParams> {
    vec![p("-3/10", "-4/5"), p("-7/20", "-7/10"), p("-1/4", "-4/5"), p("-3/10", "-3/4"), p("-3/10", "-9/10")]
}

/// `V \ V°`: the ultraspherical line `b = 0` with `a >= 0` and exact points
/// on the curved part of the boundary.
pub fn v_boundary() -> Vec<JacobiParams> {
    vec![
        p("-346/1057", "-1333/1661"),
        p("-106407/327574", "-1034081/1272499"),
        p("0", "0"),
        p("1", "1"),
        p("-1/2", "-1/2"),
        p("1/2", "1/2"),
    ]
}

/// `V' \ V`.
pub fn vprime_minus_v() -> Vec<JacobiParams> {
    vec![p("-33/100", "-87/100"), p("-7/20", "-3/4"), p("-8/25", "-22/25")]
}

/// `b > 0` but `a^2 + 2b^2 + 3a < 0`.
pub fn outside_vprime_b_pos() -> Vec<JacobiParams> {
    vec![p("-81/200", "-181/200"), p("-2/5", "-4/5"), p("-9/20", "-9/10")]
}

/// `b < 0`.
pub fn b_negative() -> Vec<JacobiParams> {
    vec![p("-1/2", "0"), p("0", "1/2"), p("0", "1"), p("-3/4", "1/2")]
}

pub fn in_v() -> Vec<JacobiParams> {
    [delta_interior(), delta_edge_in_v_interior(), v_interior_minus_delta(), v_boundary()].concat()
}

pub fn in_v_interior() -> Vec<JacobiParams> {
    [delta_interior(), delta_edge_in_v_interior(), v_interior_minus_delta()].concat()
}

/// `V' \ Delta`.
pub fn vprime_minus_delta() -> Vec<JacobiParams> {
    let curve: Vec<_> = v_boundary().into_iter().filter(|q| q.a() < &Rational::from_integer(0.into())).collect();
    [v_interior_minus_delta(), curve, vprime_minus_v()].concat()
}

pub fn all() -> Vec<JacobiParams> {
    [in_v(), vprime_minus_v(), outside_vprime_b_pos(), b_negative()].concat()
}

/// Expected finest label of every grid point, for a sanity check.
pub fn labelled() -> Vec<(JacobiParams, RegionLabel)> {
    let tag = |v: Vec<JacobiParams>, l: RegionLabel| v.into_iter().map(move |q| (q, l));
    tag(delta_interior(), RegionLabel::DeltaInterior)
        .chain(tag(delta_edge_in_v_interior(), RegionLabel::DeltaBoundary))
        .chain(tag(v_interior_minus_delta(), RegionLabel::VInteriorMinusDelta))
        .chain(v_boundary().into_iter().map(|q| {
            let l = if classify_region(&q).in_delta { RegionLabel::DeltaBoundary } else { RegionLabel::VBoundary };
            (q, l)
        }))
        .chain(tag(vprime_minus_v(), RegionLabel::VPrimeMinusV))
        .chain(tag(outside_vprime_b_pos(), RegionLabel::OutsideVPrime))
        .chain(tag(b_negative(), RegionLabel::OutsideVPrime))
        .collect()
}

/// A rational in `(lo, lo + span]` with a small random denominator.
pub fn random_rational(rng: &mut ChaCha8Rng, lo: i64, span: i64) -> Rational {
    let den = rng.gen_range(1..=24i64);
    let num = rng.gen_range(1..=span * den);
    Rational::from_integer(lo.into()) + rat(num, den)
}

/// Random admissible parameters, `alpha, beta in (-1, 3]`.
pub fn random_params(rng: &mut ChaCha8Rng) -> JacobiParams {
    JacobiParams::new(random_rational(rng, -1, 4), random_rational(rng, -1, 4)).unwrap()
}
