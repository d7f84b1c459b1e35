//! Exact linearization coefficients for products of Jacobi polynomials
//! `R_n^(alpha, beta)` and generalized Chebyshev polynomials
//! `T_n^(alpha, beta)`, together with the machinery to check their signs.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point enters a result, so sign questions are decided exactly.

pub mod analysis;
pub mod bruteforce;
pub mod coeffs;
pub mod error;
pub mod gencheb;
pub mod hypergeom;
pub mod identities;
pub mod jacobi;
pub mod kernel;
pub mod params;

pub use analysis::{
    chi_m_poly, find_negativity_witness, iota_zero_count, phi_recurrence_check, phi_sequence,
    pq_inequality_check, pq_values, recursion_consistency, reconstruct_odd_gt,
    scan_sign_pattern, Entry, PQInequality, PQRecord, PhiSequence, ScanMode, SignReport, Verdict,
};
pub use bruteforce::{linearize_bruteforce, MonomialBasis};
pub use coeffs::{CoeffVector, Family};
pub use error::{AnalysisError, FormulaError, KernelError, LinearizeError, ParamError, ParseRationalError};
pub use gencheb::{
    gencheb_eval, gencheb_norm_h, gencheb_rec_coeffs, linearize_gencheb, GenChebCoeffs,
    GenChebLinearizer, NormTable,
};
pub use hypergeom::{
    dougall_coefficient, in_special_range, rahman_coefficient, rahman_linearize, rahman_special,
    HypTermSum,
};
pub use identities::IdentityCheck;
pub use jacobi::{
    gasper_boundary, jacobi_eval, jacobi_rec_coeffs, linearize_jacobi, linearize_jacobi_plus,
    reflect_coeffs, theta_iota_kappa, BoundaryCoeffs, RecurrenceCoeffs,
};
pub use kernel::{Rational, RationalPolynomial};
pub use params::{classify_region, make_params, JacobiParams, RegionLabel, RegionReport};
