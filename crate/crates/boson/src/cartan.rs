//! Symmetrizable generalized Cartan matrices, q-integer combinatorics, and
//! the symmetric bilinear form on the weight lattice Z[I].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{CartanError, ScalarError};
use crate::scalar::{LaurentPoly, RatScalar};

/// A symmetrizable generalized Cartan matrix together with its symmetrizers.
///
/// Vertices are addressed by index into `labels`; every invariant is checked
/// at construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    labels: Vec<String>,
    entries: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
}

impl CartanMatrix {
    pub fn new(
        labels: Vec<String>,
        entries: Vec<Vec<i64>>,
        symmetrizers: Vec<i64>,
    ) -> Result<Self, CartanError> {
        let c = CartanMatrix {
            labels,
            entries,
            symmetrizers,
        };
        c.validate()?;
        Ok(c)
    }

    /// Check every axiom; reports the first violation found.
    pub fn validate(&self) -> Result<(), CartanError> {
        let n = self.labels.len();
        if n == 0 {
            return Err(CartanError::EmptyLabels);
        }
        for (k, l) in self.labels.iter().enumerate() {
            if self.labels[..k].contains(l) {
                return Err(CartanError::DuplicateLabel(l.clone()));
            }
        }
        if self.entries.len() != n || self.entries.iter().any(|r| r.len() != n) {
            return Err(CartanError::NotSquare {
                rows: self.entries.len(),
                cols: n,
            });
        }
        if self.symmetrizers.len() != n {
            return Err(CartanError::SymmetrizerLength {
                got: self.symmetrizers.len(),
                expected: n,
            });
        }
        for i in 0..n {
            if self.entries[i][i] != 2 {
                return Err(CartanError::DiagonalNotTwo {
                    i,
                    value: self.entries[i][i],
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.entries[i][j] > 0 {
                    return Err(CartanError::OffDiagonalPositive {
                        i,
                        j,
                        value: self.entries[i][j],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if (self.entries[i][j] == 0) != (self.entries[j][i] == 0) {
                    return Err(CartanError::AsymmetricZero { i, j });
                }
            }
        }
        for (i, d) in self.symmetrizers.iter().enumerate() {
            if *d <= 0 {
                return Err(CartanError::SymmetrizerNotPositive { i, value: *d });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if self.symmetrizers[i] * self.entries[i][j]
                    != self.symmetrizers[j] * self.entries[j][i]
                {
                    return Err(CartanError::NotSymmetrizable { i, j });
                }
            }
        }
        let gcd = self
            .symmetrizers
            .iter()
            .fold(0i64, |acc, d| acc.gcd(d));
        if gcd != 1 {
            return Err(CartanError::SymmetrizerGcd { gcd });
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, CartanError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| CartanError::UnknownLabel(label.to_string()))
    }

    /// Entry C_ij.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// Symmetrizer d_i.
    pub fn sym(&self, i: usize) -> i64 {
        self.symmetrizers[i]
    }

    /// q_i^n = q^(d_i * n).
    pub fn q_power_i(&self, i: usize, n: i64) -> RatScalar {
        RatScalar::q_power(self.symmetrizers[i] * n)
    }

    /// The quantum integer [n]_i = q_i^(n-1) + q_i^(n-3) + ... + q_i^(1-n).
    pub fn q_int(&self, i: usize, n: u32) -> RatScalar {
        let d = self.symmetrizers[i];
        let mut p = LaurentPoly::zero();
        let n = n as i64;
        let mut e = n - 1;
        while e >= 1 - n {
            p.add_term(d * e, BigInt::one());
            e -= 2;
        }
        RatScalar::from_laurent(p)
    }

    /// [n]_i! = [n]_i [n-1]_i ... [1]_i.
    pub fn q_fact(&self, i: usize, n: u32) -> RatScalar {
        let mut out = RatScalar::one();
        for k in 1..=n {
            out = &out * &self.q_int(i, k);
        }
        out
    }

    /// Gaussian binomial [n choose k]_i; always a Laurent polynomial.
    pub fn q_binom(&self, i: usize, n: u32, k: u32) -> Result<RatScalar, ScalarError> {
        if k > n {
            return Err(ScalarError::BinomialRange { n, k });
        }
        let num = self.q_fact(i, n);
        let den = &self.q_fact(i, k) * &self.q_fact(i, n - k);
        num.div(&den)
    }

    /// The symmetric bilinear form on Z[I] with (alpha_i, alpha_j) = d_i C_ij.
    pub fn weight_form(&self, a: &Weight, b: &Weight) -> i64 {
        let n = self.rank();
        let mut out = 0;
        for i in 0..n {
            if a.coords[i] == 0 {
                continue;
            }
            for j in 0..n {
                out += a.coords[i] * b.coords[j] * self.symmetrizers[i] * self.entries[i][j];
            }
        }
        out
    }
}

/// Element of the weight lattice Z[I], stored against a fixed rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![0; rank],
        }
    }

    /// alpha_i
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.coords[i] = 1;
        w
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

/// Builtin test matrices.
pub fn sl2() -> CartanMatrix {
    CartanMatrix::new(vec!["i".into()], vec![vec![2]], vec![1]).unwrap()
}

pub fn a2() -> CartanMatrix {
    CartanMatrix::new(
        vec!["i".into(), "j".into()],
        vec![vec![2, -1], vec![-1, 2]],
        vec![1, 1],
    )
    .unwrap()
}

pub fn b2() -> CartanMatrix {
    CartanMatrix::new(
        vec!["i".into(), "j".into()],
        vec![vec![2, -2], vec![-1, 2]],
        vec![1, 2],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_standard_matrices() {
        assert!(sl2().validate().is_ok());
        assert!(a2().validate().is_ok());
        // d_i C_ij = d_j C_ji: 1*(-2) = 2*(-1)
        assert!(b2().validate().is_ok());
    }

    #[test]
    fn rejects_asymmetric_zero_pattern() {
        let r = CartanMatrix::new(
            vec!["i".into(), "j".into()],
            vec![vec![2, -1], vec![0, 2]],
            vec![1, 1],
        );
        assert_eq!(r.unwrap_err(), CartanError::AsymmetricZero { i: 0, j: 1 });
    }

    #[test]
    fn rejects_bad_diagonal_and_positive_offdiagonal() {
        let r = CartanMatrix::new(vec!["i".into()], vec![vec![1]], vec![1]);
        assert!(matches!(r, Err(CartanError::DiagonalNotTwo { .. })));
        let r = CartanMatrix::new(
            vec!["i".into(), "j".into()],
            vec![vec![2, 1], vec![1, 2]],
            vec![1, 1],
        );
        assert!(matches!(r, Err(CartanError::OffDiagonalPositive { .. })));
    }

    #[test]
    fn rejects_non_symmetrizable_and_bad_gcd() {
        let r = CartanMatrix::new(
            vec!["i".into(), "j".into()],
            vec![vec![2, -2], vec![-1, 2]],
            vec![1, 1],
        );
        assert!(matches!(r, Err(CartanError::NotSymmetrizable { .. })));
        let r = CartanMatrix::new(
            vec!["i".into(), "j".into()],
            vec![vec![2, -1], vec![-1, 2]],
            vec![2, 2],
        );
        assert!(matches!(r, Err(CartanError::SymmetrizerGcd { gcd: 2 })));
    }

    #[test]
    fn q_powers() {
        let c = a2();
        assert_eq!(c.q_power_i(0, 2), RatScalar::q_power(2));
        assert_eq!(c.q_power_i(0, 0), RatScalar::one());
        // B2 has d_2 = 2, so q_2 = q^2
        let c = b2();
        assert_eq!(c.q_power_i(1, 1), RatScalar::q_power(2));
    }

    #[test]
    fn quantum_integers() {
        let c = a2();
        // [2]_i = q + q^-1
        let expected = &RatScalar::q_power(1) + &RatScalar::q_power(-1);
        assert_eq!(c.q_int(0, 2), expected);
        assert_eq!(c.q_fact(0, 0), RatScalar::one());
        assert_eq!(c.q_binom(0, 2, 1).unwrap(), c.q_int(0, 2));
        assert!(c.q_binom(0, 2, 3).is_err());
    }

    #[test]
    fn binomials_match_factorial_ratio() {
        let c = b2();
        for i in 0..2 {
            for n in 0..=8u32 {
                for k in 0..=n {
                    let direct = c.q_binom(i, n, k).unwrap();
                    let ratio = c
                        .q_fact(i, n)
                        .div(&(&c.q_fact(i, k) * &c.q_fact(i, n - k)))
                        .unwrap();
                    assert_eq!(direct, ratio);
                    // binomials clear denominators
                    assert!(direct.as_laurent().is_some(), "n={} k={}", n, k);
                }
            }
        }
    }

    #[test]
    fn weight_form_values() {
        let c = a2();
        let a0 = Weight::simple(2, 0);
        let a1 = Weight::simple(2, 1);
        assert_eq!(c.weight_form(&a0, &a0), 2);
        assert_eq!(c.weight_form(&a0, &a1), -1);
        let c = b2();
        let a0 = Weight::simple(2, 0);
        let a1 = Weight::simple(2, 1);
        // d_2 C_21 = 2 * (-1)
        assert_eq!(c.weight_form(&a1, &a0), -2);
        assert_eq!(c.weight_form(&a0, &a1), c.weight_form(&a1, &a0));
    }
}
