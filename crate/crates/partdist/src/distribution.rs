//! The probability distribution that a uniform random permutation of S_n
//! induces on partitions of n via its cycle type.
//!
//! A partition with multiplicities (m_1, ..., m_n) occurs with probability
//! 1 / (1^{m_1} 2^{m_2} ... n^{m_n} m_1! ... m_n!), i.e. the number of
//! permutations of that cycle type divided by n!. The closed-form moments of
//! the multiplicity vector Y are implemented next to exhaustive-enumeration
//! oracles so each formula can be checked exactly.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{factorial, int, recip, Integer, Rational};
use crate::partitions::{count_permutations_of_type, enumerate_partitions, Partition};

/// Probability of drawing a permutation whose cycle type is `p`.
pub fn pmf_of(p: &Partition) -> Rational {
    let mut denom = Integer::one();
    for (part, mult) in p.part_multiplicities() {
        denom *= Integer::from(part).pow(mult as u32) * factorial(mult);
    }
    Rational::new(Integer::one(), denom)
}

/// Result of summing the pmf over all partitions of n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FineReport {
    pub n: usize,
    pub sum: Rational,
    pub ok: bool,
}

/// Sums `pmf_of` over every partition of n exactly; the sum must be 1.
pub fn verify_fine_identity(n: usize) -> FineReport {
    let sum: Rational = enumerate_partitions(n).map(|p| pmf_of(&p)).sum();
    let ok = sum == int(1);
    FineReport { n, sum, ok }
}

/// E(Y) = (1, 1/2, ..., 1/n).
pub fn expectation_y(n: usize) -> Vec<Rational> {
    (1..=n).map(recip).collect()
}

/// E(Y) computed by exhaustive enumeration: E(Y_i) = sum over partitions of
/// m_i * pmf.
pub fn expectation_y_oracle(n: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); n];
    for p in enumerate_partitions(n) {
        let prob = pmf_of(&p);
        for (part, mult) in p.part_multiplicities() {
            acc[part - 1] += &prob * int(mult as i64);
        }
    }
    acc
}

/// Dense square matrix of exact rationals, row-major, 0-based indexing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(dim: usize) -> Self {
        Self { dim, data: vec![Rational::zero(); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.data[row * self.dim + col] = value;
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Self { dim: self.dim, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Self { dim: self.dim, data }
    }

    /// v * v' for a column vector v.
    pub fn outer(v: &[Rational]) -> Self {
        let dim = v.len();
        let mut m = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.set(i, j, &v[i] * &v[j]);
            }
        }
        m
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Entries in row-major order.
    pub fn row_major(&self) -> &[Rational] {
        &self.data
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            if i + 1 < self.dim {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// E(YY') = A + B: A holds the cross products, a_ij = 1/(ij) iff i + j <= n,
/// and B is diagonal with b_ii = 1/i.
///
/// The i + j <= n cutoff for A is the one consistent with the covariance
/// closed form and with the enumeration oracle; see
/// [`a_matrix_excluding_boundary`] for the variant that drops the boundary
/// and demonstrably fails the cross-check.
pub fn second_moment_decomposition(n: usize) -> (RationalMatrix, RationalMatrix) {
    let mut a = RationalMatrix::zero(n);
    let mut b = RationalMatrix::zero(n);
    for i in 1..=n {
        b.set(i - 1, i - 1, recip(i));
        for j in 1..=n {
            if i + j <= n {
                a.set(i - 1, j - 1, recip(i * j));
            }
        }
    }
    (a, b)
}

/// A-matrix variant with a_ij = 1/(ij) only when i + j < n (strict).
///
/// Kept for comparison tests: it disagrees with the enumeration oracle, e.g.
/// at n = 3, (i, j) = (1, 2), where E(Y_1 Y_2) = 1/2 but this variant gives 0.
pub fn a_matrix_excluding_boundary(n: usize) -> RationalMatrix {
    let mut a = RationalMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            if i + j < n {
                a.set(i - 1, j - 1, recip(i * j));
            }
        }
    }
    a
}

/// E(YY') by exhaustive enumeration: entry (i, j) is sum over partitions of
/// m_i * m_j * pmf.
pub fn second_moment_oracle(n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zero(n);
    for p in enumerate_partitions(n) {
        let prob = pmf_of(&p);
        let runs: Vec<(usize, usize)> = p.part_multiplicities().collect();
        for &(i, mi) in &runs {
            for &(j, mj) in &runs {
                let term = &prob * int((mi * mj) as i64);
                let cur = m.get(i - 1, j - 1) + term;
                m.set(i - 1, j - 1, cur);
            }
        }
    }
    m
}

/// Closed-form covariance of Y: the diagonal is 1/i for 2i <= n and
/// (i-1)/i^2 otherwise; off-diagonal entries are 0 for i + j <= n and
/// -1/(ij) otherwise.
pub fn covariance_y(n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            let value = if i == j {
                if 2 * i <= n {
                    recip(i)
                } else {
                    Rational::new(Integer::from(i as i64 - 1), Integer::from((i * i) as i64))
                }
            } else if i + j <= n {
                Rational::zero()
            } else {
                -recip(i * j)
            };
            m.set(i - 1, j - 1, value);
        }
    }
    m
}

/// Covariance by enumeration: oracle E(YY') minus E(Y)E(Y)'.
pub fn covariance_oracle(n: usize) -> RationalMatrix {
    let e = expectation_y_oracle(n);
    second_moment_oracle(n).sub(&RationalMatrix::outer(&e))
}

/// Exact moments of Y: expectation, the A + B decomposition of E(YY'), and
/// the covariance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub n: usize,
    pub expectation: Vec<Rational>,
    pub a_matrix: RationalMatrix,
    pub b_matrix: RationalMatrix,
    pub second_moment: RationalMatrix,
    pub covariance: RationalMatrix,
}

pub fn moment_report(n: usize) -> MomentReport {
    let expectation = expectation_y(n);
    let (a_matrix, b_matrix) = second_moment_decomposition(n);
    let second_moment = a_matrix.add(&b_matrix);
    let covariance = covariance_y(n);
    MomentReport { n, expectation, a_matrix, b_matrix, second_moment, covariance }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{quantity} mismatch at n={n}, entry ({i},{j}): closed form {closed}, oracle {oracle}")]
pub struct MomentMismatch {
    pub n: usize,
    pub quantity: &'static str,
    /// 1-based indices; j = 0 for vector quantities.
    pub i: usize,
    pub j: usize,
    pub closed: Rational,
    pub oracle: Rational,
}

/// Builds the closed-form moment report and checks every entry against the
/// enumeration oracles, returning the first exact mismatch if any.
pub fn verify_moments(n: usize) -> Result<MomentReport, MomentMismatch> {
    let report = moment_report(n);
    let e_oracle = expectation_y_oracle(n);
    for i in 0..n {
        if report.expectation[i] != e_oracle[i] {
            return Err(MomentMismatch {
                n,
                quantity: "E(Y)",
                i: i + 1,
                j: 0,
                closed: report.expectation[i].clone(),
                oracle: e_oracle[i].clone(),
            });
        }
    }
    let m_oracle = second_moment_oracle(n);
    let cov_oracle = m_oracle.sub(&RationalMatrix::outer(&e_oracle));
    for i in 0..n {
        for j in 0..n {
            if report.second_moment.get(i, j) != m_oracle.get(i, j) {
                return Err(MomentMismatch {
                    n,
                    quantity: "E(YY')",
                    i: i + 1,
                    j: j + 1,
                    closed: report.second_moment.get(i, j).clone(),
                    oracle: m_oracle.get(i, j).clone(),
                });
            }
            if report.covariance.get(i, j) != cov_oracle.get(i, j) {
                return Err(MomentMismatch {
                    n,
                    quantity: "covariance",
                    i: i + 1,
                    j: j + 1,
                    closed: report.covariance.get(i, j).clone(),
                    oracle: cov_oracle.get(i, j).clone(),
                });
            }
        }
    }
    Ok(report)
}

/// pmf * n! equals the permutation count of the type, exactly.
pub fn pmf_matches_permutation_count(n: usize) -> bool {
    enumerate_partitions(n).all(|p| {
        pmf_of(&p) * Rational::from_integer(factorial(n))
            == Rational::from_integer(count_permutations_of_type(&p))
    })
}
