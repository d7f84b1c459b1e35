//! Sign scans, zero counting for `iota`, and the `p`, `q`, `phi` machinery
//! behind positivity of the odd generalized Chebyshev coefficients.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bruteforce::MonomialBasis;
use crate::coeffs::{CoeffVector, Family};
use crate::error::AnalysisError;
use crate::gencheb::{gencheb_rec_coeffs, GenChebLinearizer};
use crate::jacobi::{iota, kappa, linearize_jacobi, linearize_jacobi_plus, oscillation_values, theta};
use crate::kernel::{count_real_roots, int, Rational, RationalPolynomial};
use crate::params::JacobiParams;

/// Which coefficients a sign scan looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScanMode {
    /// `g_R(m, n; k) >= 0`.
    JacobiNonneg,
    /// `g_R(m, n; k) > 0`.
    JacobiStrict,
    /// Every `g_T(m, n; k)` off the structural zeros.
    GenChebAll,
    /// `g_T(m, n; k)` with `m` or `n` odd.
    GenChebOdd,
    /// `(-1)^(m+n+k)` times the coefficients of the swapped sequence.
    Oscillation,
}

impl ScanMode {
    pub const ALL: [ScanMode; 5] = [
        ScanMode::JacobiNonneg,
        ScanMode::JacobiStrict,
        ScanMode::GenChebAll,
        ScanMode::GenChebOdd,
        ScanMode::Oscillation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ScanMode::JacobiNonneg => "jacobi_nonneg",
            ScanMode::JacobiStrict => "jacobi_strict",
            ScanMode::GenChebAll => "gencheb_all",
            ScanMode::GenChebOdd => "gencheb_odd",
            ScanMode::Oscillation => "oscillation",
        }
    }
}

impl fmt::Display for ScanMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    AllNonneg,
    AllPositiveOnSupport,
    Violation,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::AllNonneg => "all_nonneg",
            Verdict::AllPositiveOnSupport => "all_positive_on_support",
            Verdict::Violation => "violation",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One coefficient `(m, n, k)` and its value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub value: Rational,
}

/// Outcome of a sign scan. `witness` is the first negative entry in
/// `(m, n, k)` order and `first_zero` the first vanishing one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignReport {
    pub mode: ScanMode,
    pub verdict: Verdict,
    pub min_value: Rational,
    pub witness: Option<Entry>,
    pub first_zero: Option<Entry>,
    pub degrees_scanned: u32,
    pub entries_checked: usize,
}

impl SignReport {
    /// Strict mode needs strict positivity, every other mode only the
    /// absence of negative entries.
    pub fn passes(&self) -> bool {
        match self.mode {
            ScanMode::JacobiStrict => self.verdict == Verdict::AllPositiveOnSupport,
            _ => self.verdict != Verdict::Violation,
        }
    }
}

fn pair_entries(p: &JacobiParams, lin: Option<&GenChebLinearizer>, mode: ScanMode, m: u32, n: u32) -> Vec<Entry> {
    let entry = |k: u32, value: Rational| Entry { m, n, k, value };
    match mode {
        ScanMode::JacobiNonneg | ScanMode::JacobiStrict => {
            linearize_jacobi(p, m, n).iter().map(|(k, v)| entry(k, v.clone())).collect()
        }
        ScanMode::GenChebAll | ScanMode::GenChebOdd => {
            if mode == ScanMode::GenChebOdd && m % 2 == 0 && n % 2 == 0 {
                return Vec::new();
            }
            let cv = lin.expect("generalized Chebyshev scans carry a linearizer").linearize(m, n);
            cv.iter()
                .filter(|(k, _)| !cv.is_structural_zero(*k))
                .map(|(k, v)| entry(k, v.clone()))
                .collect()
        }
        ScanMode::Oscillation => {
            let cv = linearize_jacobi(p, m, n);
            let vals = oscillation_values(p, &cv).expect("Jacobi vector");
            cv.iter().zip(vals).map(|((k, _), v)| entry(k, v)).collect()
        }
    }
}

/// Scans every coefficient of the mode's family for `m <= n <= max_degree`.
/// Pairs run in parallel; the reduction walks them in `(m, n, k)` order so
/// the report is deterministic.
pub fn scan_sign_pattern(p: &JacobiParams, max_degree: u32, mode: ScanMode) -> SignReport {
    let lin = matches!(mode, ScanMode::GenChebAll | ScanMode::GenChebOdd)
        .then(|| GenChebLinearizer::new(p, 2 * max_degree));
    let pairs: Vec<(u32, u32)> =
        (0..=max_degree).flat_map(|n| (0..=n).map(move |m| (m, n))).collect();
    let mut per_pair: Vec<Vec<Entry>> = pairs
        .par_iter()
        .map(|&(m, n)| pair_entries(p, lin.as_ref(), mode, m, n))
        .collect();
    let mut entries: Vec<Entry> = per_pair.drain(..).flatten().collect();
    entries.sort_by_key(|e| (e.m, e.n, e.k));

    let mut min_value: Option<Rational> = None;
    let mut witness = None;
    let mut first_zero = None;
    for e in &entries {
        if min_value.as_ref().is_none_or(|mv| &e.value < mv) {
            min_value = Some(e.value.clone());
        }
        if witness.is_none() && e.value < Rational::zero() {
            witness = Some(e.clone());
        }
        if first_zero.is_none() && e.value.is_zero() {
            first_zero = Some(e.clone());
        }
    }
    let verdict = if witness.is_some() {
        Verdict::Violation
    } else if first_zero.is_some() {
        Verdict::AllNonneg
    } else {
        Verdict::AllPositiveOnSupport
    };
    SignReport {
        mode,
        verdict,
        min_value: min_value.unwrap_or_else(Rational::one),
        witness,
        first_zero,
        degrees_scanned: max_degree,
        entries_checked: entries.len(),
    }
}

fn nat(n: u32) -> Rational {
    int(i64::from(n))
}

/// `iota(m, m+s; j)` times its two positive denominators, as a polynomial
/// in real `j`.
pub fn iota_numerator_poly(p: &JacobiParams, m: u32, s: u32) -> RationalPolynomial {
    let (a, b) = (p.a(), p.b());
    let (m2, s2) = (nat(2 * m), nat(2 * s));
    let one = Rational::one();
    let j = RationalPolynomial::x();
    let lin = |c0: Rational, c1: i64| RationalPolynomial::linear(c0, int(c1));
    let two_a = int(2) * a;
    let up = lin(m2.clone(), -1)
        * lin(&m2 + &s2 + &two_a, 1)
        * lin(&s2 + &one, 1)
        * lin(one.clone(), 1);
    let down = lin(&m2 + &one, -1) * lin(&m2 + &s2 + &two_a - &one, 1) * lin(s2.clone(), 1) * j;
    let d_up = lin(&s2 + a + &one, 2);
    let d_down = lin(&s2 + a - &one, 2);
    (up * d_down - down * d_up).scale(b)
}

/// Number of distinct zeros of `j -> iota(m, m+s; j)` on the real interval
/// `[1, 2m - 1]`.
pub fn iota_zero_count(p: &JacobiParams, m: u32, s: u32) -> Result<usize, AnalysisError> {
    if m == 0 {
        return Err(AnalysisError::BadIndex("m must be at least 1"));
    }
    if p.b().is_zero() {
        return Err(AnalysisError::Degenerate);
    }
    let poly = iota_numerator_poly(p, m, s);
    let one = Rational::one();
    let at_one = usize::from(poly.eval(&one).is_zero());
    if m == 1 {
        return Ok(at_one);
    }
    let inner = count_real_roots(&poly, &one, &nat(2 * m - 1))
        .map_err(|e| AnalysisError::Singular(e.to_string()))?;
    Ok(at_one + inner)
}

/// `chi_m(j)`, the quartic with `iota(m, m; j)(2j+a-1)(2j+a+1) = -b chi_m(j)`.
pub fn chi_m_poly(p: &JacobiParams, m: u32) -> RationalPolynomial {
    let a = p.a();
    let one = Rational::one();
    let m2 = nat(2 * m);
    let two_a = int(2) * a;
    let lin = |c0: Rational, c1: i64| RationalPolynomial::linear(c0, int(c1));
    let j = RationalPolynomial::x();
    let j1 = lin(one.clone(), 1);
    let first = lin(&m2 + &one, -1) * lin(&m2 + &two_a - &one, 1) * (&j * &j) * lin(a + &one, 2);
    let second = lin(m2.clone(), -1) * lin(&m2 + &two_a, 1) * (&j1 * &j1) * lin(a - &one, 2);
    first - second
}

/// The auxiliary quantities at one `(m, s, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQRecord {
    pub m: u32,
    pub s: u32,
    pub j: u32,
    pub p: Rational,
    pub q: Rational,
    pub p_inf: Rational,
    pub p_star: Rational,
    pub q_inf: Rational,
    pub q_star: Rational,
}

fn common_den(p: &JacobiParams, s: u32, j: u32) -> Rational {
    let (a, b) = (p.a(), p.b());
    let (ss, jj) = (nat(2 * s), nat(j));
    (&ss + &jj + int(1)) * (&ss + int(2) * &jj + a) * (&ss + int(2) * &jj + a + b + int(1)) * (&jj + int(1))
}

/// `m`-independent limit of `p(j)`.
pub fn p_inf(p: &JacobiParams, s: u32, j: u32) -> Rational {
    let (a, b) = (p.a(), p.b());
    let (ss, jj) = (nat(2 * s), nat(j));
    let one = Rational::one();
    let bracket = b * (&ss + &jj + &one) * (&ss + int(2) * &jj + a) * (&jj + &one)
        + (&one - b) * (&ss + &jj) * (&ss + int(2) * &jj + a + &one) * &jj;
    -one + (&ss + int(2) * &jj + a + int(2)) * bracket / common_den(p, s, j)
}

pub fn p_star(p: &JacobiParams, s: u32, j: u32) -> Rational {
    let (a, b) = (p.a(), p.b());
    let (ss, jj) = (nat(2 * s), nat(j));
    let one = Rational::one();
    (&one - b)
        * (&ss + &jj + a)
        * (&ss + int(2) * &jj + a + &one)
        * (&ss + int(2) * &jj + a + int(2))
        * (&jj + a)
        * (&ss + int(2) * &jj + &one)
        / common_den(p, s, j)
}

/// `m`-independent limit of `q(j)`.
pub fn q_inf(p: &JacobiParams, s: u32, j: u32) -> Rational {
    let (a, b) = (p.a(), p.b());
    let (ss, jj) = (nat(2 * s), nat(j));
    (&ss + int(2) * &jj + a + int(2))
        * (&ss + &jj + a)
        * (&ss + int(2) * &jj + a - b + int(1))
        * (&jj + a)
        / common_den(p, s, j)
}

pub fn q_star(p: &JacobiParams, s: u32, j: u32) -> Rational {
    let a = p.a();
    (Rational::one() - a) * q_inf(p, s, j) * (nat(2 * s + 2 * j) + a + int(1))
}

/// `q_inf(j+1) - (1 + p_inf(j+1)) (q_inf(j) - p_inf(j))` in its factored
/// form.
pub fn omega(p: &JacobiParams, s: u32, j: u32) -> Rational {
    let (a, b) = (p.a(), p.b());
    let (ss, jj) = (nat(2 * s), nat(j));
    let one = Rational::one();
    (b - a) * b * (&ss * (&ss + int(2) * &jj + a + int(2)) + (&jj + a) * (int(2) * &jj + int(4)) + &one - a)
        / ((&ss + &jj + &one) * (&ss + &jj + int(2)) * (&jj + &one) * (&jj + int(2)))
        * (&ss + int(2) * &jj + a + int(2))
        * (&ss + int(2) * &jj + a + int(4))
        / ((&ss + int(2) * &jj + a + b + &one) * (&ss + int(2) * &jj + a + b + int(3)))
}

/// `p(j)`, `q(j)` and their decomposition into `m`-free parts, for
/// `1 <= j <= 2m - 1`. The decomposition is checked exactly.
pub fn pq_values(p: &JacobiParams, m: u32, s: u32, j: u32) -> Result<PQRecord, AnalysisError> {
    if m == 0 || j == 0 || j > 2 * m - 1 {
        return Err(AnalysisError::BadIndex("need 1 <= j <= 2m - 1"));
    }
    let plus = p.plus();
    let jr = nat(j);
    let th = theta(&plus, m, s, &jr);
    if th.is_zero() {
        return Err(AnalysisError::Singular(format!("theta+ vanishes at j = {j}")));
    }
    let io = iota(&plus, m, s, &jr);
    let ka = kappa(&plus, m, s, &jr).map_err(|e| AnalysisError::Singular(e.to_string()))?;
    let t = |n: u32| gencheb_rec_coeffs(p, n);
    let k = 2 * s + 2 * j;
    let pv = t(k + 3).c / t(k + 1).a * io / &th;
    let qv = t(k + 1).c * t(k + 3).c / (t(k - 1).a * t(k + 1).a) * ka / &th;

    let rec = PQRecord {
        m,
        s,
        j,
        p_inf: p_inf(p, s, j),
        p_star: p_star(p, s, j),
        q_inf: q_inf(p, s, j),
        q_star: q_star(p, s, j),
        p: pv,
        q: qv,
    };
    let a = p.a();
    let den = (nat(2 * m) - &jr + a) * (nat(2 * m + 2 * s + j) + a + int(2));
    if rec.p != &rec.p_inf + &rec.p_star / &den || rec.q != &rec.q_inf + &rec.q_star / &den {
        return Err(AnalysisError::IdentityFailed(format!("p/q decomposition at m={m}, s={s}, j={j}")));
    }
    Ok(rec)
}

/// One instance of `(1 + p(j+1)) (q(j) - p(j)) < q(j+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQInequality {
    pub j: u32,
    pub lhs: Rational,
    pub rhs: Rational,
    pub omega: Rational,
}

impl PQInequality {
    pub fn holds(&self) -> bool {
        self.lhs < self.rhs && self.omega > Rational::zero()
    }
}

/// Evaluates the inequality at every `j` in `1 ..= 2m - 2` and checks the
/// factored form of `omega_j`. `m >= 2`.
pub fn pq_inequality_check(p: &JacobiParams, m: u32, s: u32) -> Result<Vec<PQInequality>, AnalysisError> {
    if m < 2 {
        return Err(AnalysisError::BadIndex("m must be at least 2"));
    }
    let recs = (1..2 * m).map(|j| pq_values(p, m, s, j)).collect::<Result<Vec<_>, _>>()?;
    let one = Rational::one();
    recs.windows(2)
        .map(|w| {
            let (r, r1) = (&w[0], &w[1]);
            let om = omega(p, s, r.j);
            let om_direct = &r1.q_inf - (&one + &r1.p_inf) * (&r.q_inf - &r.p_inf);
            if om != om_direct {
                return Err(AnalysisError::IdentityFailed(format!("omega at j={}", r.j)));
            }
            Ok(PQInequality { j: r.j, lhs: (&one + &r1.p) * (&r.q - &r.p), rhs: r1.q.clone(), omega: om })
        })
        .collect()
}

/// `phi(1) ..= phi(2m)`, the scaled consecutive ratios of `g_R^+(m, m+s; .)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiSequence {
    pub m: u32,
    pub s: u32,
    pub values: Vec<Rational>,
}

impl PhiSequence {
    /// `phi(j)`, `1 <= j <= 2m`.
    pub fn get(&self, j: u32) -> &Rational {
        &self.values[(j - 1) as usize]
    }

    pub fn all_negative(&self) -> bool {
        self.values.iter().all(|v| v < &Rational::zero())
    }

    /// First `j` breaking `phi(2i) < -1`, `phi(2i-1) > -1`.
    pub fn alternation_failure(&self) -> Option<u32> {
        let minus_one = -Rational::one();
        (1..=2 * self.m).find(|&j| {
            let v = self.get(j);
            if j % 2 == 0 {
                v >= &minus_one
            } else {
                v <= &minus_one
            }
        })
    }

    pub fn alternates(&self) -> bool {
        self.alternation_failure().is_none()
    }
}

pub fn phi_sequence(p: &JacobiParams, m: u32, s: u32) -> Result<PhiSequence, AnalysisError> {
    if m == 0 {
        return Err(AnalysisError::BadIndex("m must be at least 1"));
    }
    let gp = linearize_jacobi_plus(p, m, m + s);
    let values = (1..=2 * m)
        .map(|j| {
            let prev = gp.get(s + j - 1);
            if prev.is_zero() {
                return Err(AnalysisError::Singular(format!("g_R^+ vanishes at k = {}", s + j - 1)));
            }
            let k = 2 * s + 2 * j;
            Ok(gencheb_rec_coeffs(p, k + 1).c / gencheb_rec_coeffs(p, k - 1).a * gp.get(s + j) / prev)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PhiSequence { m, s, values })
}

/// Checks `phi(j+1) = p(j) + q(j) / phi(j)` for `1 <= j <= 2m - 1`.
pub fn phi_recurrence_check(p: &JacobiParams, phi: &PhiSequence) -> Result<(), AnalysisError> {
    for j in 1..2 * phi.m {
        let r = pq_values(p, phi.m, phi.s, j)?;
        if phi.get(j + 1) != &(&r.p + &r.q / phi.get(j)) {
            return Err(AnalysisError::IdentityFailed(format!("phi recurrence at j = {j}")));
        }
    }
    Ok(())
}

/// `g_T(2m+1, 2m+2s+1; 2s+2j) = a_{2s+2j-1} g_R^+(m, m+s; s+j-1) (1 + phi(j))`
/// for `j = 1 ..= 2m`.
pub fn reconstruct_odd_gt(p: &JacobiParams, phi: &PhiSequence) -> Vec<Rational> {
    let gp = linearize_jacobi_plus(p, phi.m, phi.m + phi.s);
    (1..=2 * phi.m)
        .map(|j| {
            let k = 2 * phi.s + 2 * j;
            gencheb_rec_coeffs(p, k - 1).a * gp.get(phi.s + j - 1) * (Rational::one() + phi.get(j))
        })
        .collect()
}

/// Looks for a negative `g_T(m, n; k)` with `m` or `n` odd, `n <= max_degree`.
///
/// Outside `V'` the search first follows the two known families,
/// `g_T(2m+1, 2m+1; 2)` when `b < 0` and `g_T(2m+1, 2m+1; 4)` when
/// `a^2 + 2b^2 + 3a < 0`, in increasing `m`; then it falls back to a full scan
/// in increasing `(n, m, k)`. `None` means nothing was found within the bound,
/// not that none exists.
pub fn find_negativity_witness(p: &JacobiParams, max_degree: u32) -> Option<Entry> {
    let lin = GenChebLinearizer::new(p, 2 * max_degree);
    let zero = Rational::zero();
    let mut guided: Vec<u32> = Vec::new();
    if p.b() < &zero {
        guided.push(2);
    }
    if p.vprime_form() < zero {
        guided.push(4);
    }
    for k in guided {
        let mut m = 1;
        while m <= max_degree {
            let v = lin.linearize(m, m).get(k);
            if v < zero {
                return Some(Entry { m, n: m, k, value: v });
            }
            m += 2;
        }
    }
    for n in 1..=max_degree {
        let found = (0..=n).filter(|m| m % 2 == 1 || n % 2 == 1).find_map(|m| {
            let cv = lin.linearize(m, n);
            let hit = cv.iter().find(|(_, v)| *v < &zero).map(|(k, v)| Entry { m, n, k, value: v.clone() });
            hit
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Every recursion-based route against the monomial oracle, all
/// `m <= n <= max_degree`. Returns the number of vectors compared.
pub fn recursion_consistency(p: &JacobiParams, max_degree: u32) -> Result<usize, AnalysisError> {
    let lin = &GenChebLinearizer::new(p, 2 * max_degree);
    let checks: Vec<(Family, MonomialBasis)> = [Family::Jacobi, Family::JacobiPlus, Family::GenCheb]
        .into_par_iter()
        .map(|f| (f, MonomialBasis::new(p, f, 2 * max_degree)))
        .collect();
    let pairs: Vec<(u32, u32)> =
        (0..=max_degree).flat_map(|n| (0..=n).map(move |m| (m, n))).collect();
    let failures: Vec<String> = checks
        .par_iter()
        .flat_map(|(family, basis)| {
            pairs.par_iter().filter_map(move |&(m, n)| {
                let fast: CoeffVector = match family {
                    Family::Jacobi => linearize_jacobi(p, m, n),
                    Family::JacobiPlus => linearize_jacobi_plus(p, m, n),
                    Family::GenCheb => lin.linearize(m, n),
                };
                (fast != basis.linearize(m, n)).then(|| format!("{family} ({m}, {n})"))
            })
        })
        .collect();
    match failures.into_iter().next() {
        Some(f) => Err(AnalysisError::IdentityFailed(format!("recursion differs from oracle at {f}"))),
        None => Ok(3 * pairs.len()),
    }
}
