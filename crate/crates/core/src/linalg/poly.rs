use std::fmt;

use super::{QMatrix, Rational};
use crate::error::Result;

/// Polynomial in one variable with exact rational coefficients, lowest
/// degree first. Trailing zero coefficients are trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn identity() -> Self {
        Self::new(vec![Rational::ZERO, Rational::ONE])
    }

    /// `(t - r_1)(t - r_2)...`
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots.into_iter().fold(Self::constant(Rational::ONE), |acc, r| acc.mul(&Self::new(vec![-r, Rational::ONE])))
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or(Rational::ZERO)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Polynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or(Rational::ZERO);
        Self::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&Rational::from(-1i64)))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_mul(a, b);
            }
        }
        Self::new(out)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::ZERO, |acc, c| acc * t + c)
    }

    /// Evaluates the polynomial at a linear operator applied to `v`, using
    /// Horner's rule with `op` as the multiplication.
    pub fn apply_to_vector(&self, mut op: impl FnMut(&[Rational]) -> Vec<Rational>, v: &[Rational]) -> Vec<Rational> {
        let mut acc = vec![Rational::ZERO; v.len()];
        for c in self.coeffs.iter().rev() {
            acc = op(&acc);
            for (a, x) in acc.iter_mut().zip(v) {
                a.add_mul(c, x);
            }
        }
        acc
    }

    pub fn eval_matrix(&self, m: &QMatrix) -> Result<QMatrix> {
        m.eval_poly(&self.coeffs)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn roots_and_evaluation() {
        let p = Polynomial::from_roots(&[r(1), r(-2)]);
        assert_eq!(p.coeffs(), &[r(-2), r(1), r(1)]);
        assert!(p.eval(&r(1)).is_zero());
        assert_eq!(p.eval(&r(0)), r(-2));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn vector_application_matches_matrix_evaluation() {
        let m = QMatrix::from_i64_rows(&[vec![0, 1, 0], vec![1, 0, 1], vec![0, 1, 0]]);
        let p = Polynomial::new(vec![r(3), r(-1), Rational::new(1, 2)]);
        let v = vec![r(1), r(2), r(-1)];
        let via_vec = p.apply_to_vector(|x| m.mul_vec(x).unwrap(), &v);
        let via_mat = p.eval_matrix(&m).unwrap().mul_vec(&v).unwrap();
        assert_eq!(via_vec, via_mat);
    }

    #[test]
    fn arithmetic_trims() {
        let p = Polynomial::new(vec![r(1), r(1)]);
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.mul(&p).coeffs(), &[r(1), r(2), r(1)]);
    }
}
