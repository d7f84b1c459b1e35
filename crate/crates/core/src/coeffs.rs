use std::fmt;

use num_traits::Zero;

use crate::kernel::Rational;

/// Which orthogonal polynomial sequence a coefficient vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `R_n^(alpha, beta)`.
    Jacobi,
    /// `R_n^(alpha, beta + 1)`.
    JacobiPlus,
    /// Generalized Chebyshev `T_n^(alpha, beta)`.
    GenCheb,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Jacobi => "jacobi",
            Family::JacobiPlus => "jacobi-plus",
            Family::GenCheb => "gencheb",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Linearization coefficients `g(m, n; k)` of one product `P_m P_n`, for
/// `k = |m - n| ..= m + n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffVector {
    m: u32,
    n: u32,
    family: Family,
    values: Vec<Rational>,
}

impl CoeffVector {
    /// Panics if `values` does not have exactly `m + n - |m - n| + 1` entries.
    pub fn new(m: u32, n: u32, family: Family, values: Vec<Rational>) -> Self {
        assert_eq!(
            values.len(),
            (m + n - m.abs_diff(n) + 1) as usize,
            "coefficient vector length mismatch for ({m}, {n})"
        );
        Self { m, n, family, values }
    }

    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn family(&self) -> Family {
        self.family
    }

    /// Smallest index, `|m - n|`.
    pub fn k_min(&self) -> u32 {
        self.m.abs_diff(self.n)
    }

    /// Largest index, `m + n`.
    pub fn k_max(&self) -> u32 {
        self.m + self.n
    }

    /// Values in index order, starting at `k_min`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.values
    }

    /// `g(m, n; k)`; zero outside `k_min ..= k_max`.
    pub fn get(&self, k: u32) -> Rational {
        k.checked_sub(self.k_min())
            .and_then(|i| self.values.get(i as usize))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `(k, g(m, n; k))` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> + '_ {
        let lo = self.k_min();
        self.values.iter().enumerate().map(move |(i, v)| (lo + i as u32, v))
    }

    pub fn sum(&self) -> Rational {
        self.values.iter().fold(Rational::zero(), |acc, v| acc + v)
    }

    /// For generalized Chebyshev products, `g(m, n; k)` vanishes by symmetry
    /// whenever `m + n - k` is odd.
    pub fn is_structural_zero(&self, k: u32) -> bool {
        self.family == Family::GenCheb && (self.m + self.n + k) % 2 == 1
    }
}
