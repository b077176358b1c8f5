use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Diagonal;
use crate::linalg::{binomial, Polynomial, QMatrix, Rational};

/// The three kinds of irreducible modules: `L_k` of the hypercube, `M_k`
/// and `N_k` of the halved cube.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ModuleFamily {
    L,
    M,
    N,
}

impl fmt::Display for ModuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ModuleFamily::L => "L",
            ModuleFamily::M => "M",
            ModuleFamily::N => "N",
        };
        f.write_str(s)
    }
}

/// Representing matrices of `A` and `A*` on an irreducible module in its
/// shell-graded basis: `A` is tridiagonal with diagonal `alpha`, subdiagonal
/// `beta` and superdiagonal `gamma`, `A*` is `diag(theta_star)`.
///
/// `beta[i]` is the entry `(i + 1, i)` and `gamma[i - 1]` the entry
/// `(i - 1, i)`, so both have length `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TridiagonalModel {
    pub family: ModuleFamily,
    pub k: usize,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
    pub gamma: Vec<Rational>,
    pub theta_star: Vec<Rational>,
}

fn r(n: i64) -> Rational {
    Rational::from(n)
}

fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

impl TridiagonalModel {
    /// `L_k` of `H(D,2)`, for `0 <= k <= D/2`.
    pub fn l_module(d: usize, k: usize) -> Result<Self> {
        if 2 * k > d {
            return Err(Error::InvalidArgument(format!("L_{k} needs k <= D/2 (D = {d})")));
        }
        let (dd, k) = (d as i64, k as i64);
        let top = dd - 2 * k;
        Ok(TridiagonalModel {
            family: ModuleFamily::L,
            k: k as usize,
            alpha: (0..=top).map(|_| Rational::ZERO).collect(),
            beta: (0..top).map(|i| r(i + 1)).collect(),
            gamma: (1..=top).map(|i| r(dd - i - 2 * k + 1)).collect(),
            theta_star: (0..=top).map(|i| r(dd - 2 * (i + k))).collect(),
        })
    }

    /// `M_k` of `½H(D,2)`, for even `k <= ⌊D/2⌋`.
    pub fn m_module(d: usize, k: usize) -> Result<Self> {
        if !k.is_multiple_of(2) || k > d / 2 {
            return Err(Error::InvalidArgument(format!("M_{k} needs even k <= ⌊D/2⌋ (D = {d})")));
        }
        let (dd, k) = (d as i64, k as i64);
        let top = dd / 2 - k;
        Ok(TridiagonalModel {
            family: ModuleFamily::M,
            k: k as usize,
            alpha: (0..=top).map(|i| r(2 * i * (dd - 2 * i - 2 * k) - k)).collect(),
            beta: (0..top).map(|i| r((i + 1) * (2 * i + 1))).collect(),
            gamma: (1..=top).map(|i| half((dd - 2 * i - 2 * k + 1) * (dd - 2 * i - 2 * k + 2))).collect(),
            theta_star: (0..=top).map(|i| r(dd - 2 * (2 * i + k))).collect(),
        })
    }

    /// `N_k` of `½H(D,2)`, for even `k` with `2 <= k <= ⌈D/2⌉`.
    pub fn n_module(d: usize, k: usize) -> Result<Self> {
        if !k.is_multiple_of(2) || k < 2 || k > d.div_ceil(2) {
            return Err(Error::InvalidArgument(format!("N_{k} needs even 2 <= k <= ⌈D/2⌉ (D = {d})")));
        }
        let (dd, k) = (d as i64, k as i64);
        let top = (dd + 1) / 2 - k;
        Ok(TridiagonalModel {
            family: ModuleFamily::N,
            k: k as usize,
            alpha: (0..=top).map(|i| r((2 * i + 1) * (dd - 2 * i - 2 * k + 1) - k + 1)).collect(),
            beta: (0..top).map(|i| r((i + 1) * (2 * i + 3))).collect(),
            gamma: (1..=top).map(|i| half((dd - 2 * i - 2 * k + 2) * (dd - 2 * i - 2 * k + 3))).collect(),
            theta_star: (0..=top).map(|i| r(dd - 2 * (2 * i + k))).collect(),
        })
    }

    pub fn formula(family: ModuleFamily, d: usize, k: usize) -> Result<Self> {
        match family {
            ModuleFamily::L => Self::l_module(d, k),
            ModuleFamily::M => Self::m_module(d, k),
            ModuleFamily::N => Self::n_module(d, k),
        }
    }

    /// Reads a model off representing matrices.
    pub fn from_matrices(family: ModuleFamily, k: usize, a: &QMatrix, astar: &QMatrix) -> Result<Self> {
        let n = a.rows();
        if !a.is_square() || astar.rows() != n || !astar.is_square() {
            return Err(Error::ShapeMismatch("representing matrices must be square of equal size".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) > 1 && !a[(i, j)].is_zero() {
                    return Err(Error::Verification(format!("representing matrix of A has entry at ({i},{j})")));
                }
            }
        }
        if !astar.is_diagonal() {
            return Err(Error::Verification("representing matrix of A* is not diagonal".into()));
        }
        Ok(TridiagonalModel {
            family,
            k,
            alpha: a.diagonal_entries(),
            beta: (1..n).map(|i| a[(i, i - 1)].clone()).collect(),
            gamma: (1..n).map(|i| a[(i - 1, i)].clone()).collect(),
            theta_star: astar.diagonal_entries(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.alpha.len()
    }

    /// Diameter `d` of the module: its dimension minus one.
    pub fn diameter(&self) -> usize {
        self.alpha.len() - 1
    }

    pub fn label(&self) -> String {
        format!("{}_{}", self.family, self.k)
    }

    /// The tridiagonal representing matrix of `A`.
    pub fn a_matrix(&self) -> QMatrix {
        let n = self.dimension();
        QMatrix::from_fn(n, n, |i, j| {
            if i == j {
                self.alpha[i].clone()
            } else if i == j + 1 {
                self.beta[j].clone()
            } else if j == i + 1 {
                self.gamma[i].clone()
            } else {
                Rational::ZERO
            }
        })
    }

    /// The diagonal representing matrix of `A*`.
    pub fn astar_matrix(&self) -> QMatrix {
        QMatrix::diagonal(&self.theta_star)
    }

    pub fn astar_diagonal(&self) -> Diagonal {
        Diagonal(self.theta_star.clone())
    }

    /// Lengths agree, `beta` and `gamma` are positive and `theta_star` is
    /// strictly decreasing.
    pub fn is_well_formed(&self) -> bool {
        let n = self.dimension();
        n >= 1
            && self.theta_star.len() == n
            && self.beta.len() == n - 1
            && self.gamma.len() == n - 1
            && self.beta.iter().chain(&self.gamma).all(Rational::is_positive)
            && self.theta_star.windows(2).all(|w| w[0] > w[1])
    }

    /// Characteristic polynomial of the tridiagonal matrix by the continuant
    /// recurrence `p_{i+1} = (t - α_i) p_i - β_{i-1} γ_i p_{i-1}`.
    pub fn characteristic_polynomial(&self) -> Polynomial {
        let mut prev = Polynomial::constant(Rational::ONE);
        let mut cur = Polynomial::new(vec![-&self.alpha[0], Rational::ONE]);
        for i in 1..self.dimension() {
            let shifted = Polynomial::new(vec![-&self.alpha[i], Rational::ONE]).mul(&cur);
            let coupling = &self.beta[i - 1] * &self.gamma[i - 1];
            let next = shifted.sub(&prev.scale(&coupling));
            prev = cur;
            cur = next;
        }
        cur
    }

    /// The eigenvalues of the tridiagonal matrix among `candidates`, or
    /// `None` if it has an eigenvalue outside them.
    pub fn eigenvalues_among(&self, candidates: &[Rational]) -> Option<Vec<Rational>> {
        let p = self.characteristic_polynomial();
        let roots: Vec<Rational> = candidates.iter().filter(|t| p.eval(t).is_zero()).cloned().collect();
        (Polynomial::from_roots(&roots) == p).then_some(roots)
    }
}

/// `(D - 2k + 1) / (D - k + 1) * C(D, k)`: multiplicity of `L_k` and of `M_k`.
pub fn l_multiplicity(d: usize, k: usize) -> Rational {
    let (dd, k) = (d as i64, k as i64);
    Rational::new(dd - 2 * k + 1, dd - k + 1) * Rational::from(binomial(dd, k))
}

/// `(D - 2k + 3) / (D - k + 2) * C(D, k - 1)`: multiplicity of `N_k`.
pub fn n_multiplicity(d: usize, k: usize) -> Rational {
    let (dd, k) = (d as i64, k as i64);
    Rational::new(dd - 2 * k + 3, dd - k + 2) * Rational::from(binomial(dd, k - 1))
}

/// The isomorphism classes of irreducible modules of the halved cube, in
/// order `M_0, M_2, ..., N_2, N_4, ...`, each with its multiplicity.
pub fn halved_classes(d: usize) -> Vec<(TridiagonalModel, Rational)> {
    let m =
        (0..=d / 2).step_by(2).map(|k| (TridiagonalModel::m_module(d, k).expect("k in range"), l_multiplicity(d, k)));
    let n = (2..=d.div_ceil(2))
        .step_by(2)
        .map(|k| (TridiagonalModel::n_module(d, k).expect("k in range"), n_multiplicity(d, k)));
    m.chain(n).collect()
}

/// The isomorphism classes `L_0, ..., L_{⌊D/2⌋}` of the hypercube.
pub fn hypercube_classes(d: usize) -> Vec<(TridiagonalModel, Rational)> {
    (0..=d / 2).map(|k| (TridiagonalModel::l_module(d, k).expect("k in range"), l_multiplicity(d, k))).collect()
}

/// `C(⌊D/2⌋ + 3, 3) + C(⌈D/2⌉ + 1, 3)`.
pub fn halved_algebra_dimension_formula(d: usize) -> u64 {
    let lo = binomial((d / 2 + 3) as i64, 3);
    let hi = binomial((d.div_ceil(2) + 1) as i64, 3);
    u64::try_from(lo + hi).expect("small")
}

/// `C(D + 3, 3)`.
pub fn hypercube_algebra_dimension_formula(d: usize) -> u64 {
    u64::try_from(binomial(d as i64 + 3, 3)).expect("small")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::Family;
    use crate::graph::eigenvalues_formula;

    fn rs(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn m0_at_five() {
        let m = TridiagonalModel::m_module(5, 0).unwrap();
        assert_eq!(m.alpha, rs(&[0, 6, 4]));
        assert_eq!(m.beta, rs(&[1, 6]));
        assert_eq!(m.gamma, rs(&[10, 3]));
        assert_eq!(m.theta_star, rs(&[5, 1, -3]));
        let trace: Rational = m.alpha.iter().cloned().sum();
        assert_eq!(trace, eigenvalues_formula(5, Family::HalvedCube).into_iter().sum());
    }

    #[test]
    fn n2_at_six() {
        let n = TridiagonalModel::n_module(6, 2).unwrap();
        assert_eq!(n.dimension(), 2);
        assert_eq!(n.theta_star, rs(&[2, -2]));
        assert_eq!(n.alpha[0], Rational::from(2i64));
        assert_eq!(TridiagonalModel::m_module(6, 2).unwrap().alpha[0], Rational::from(-2i64));
    }

    #[test]
    fn l_module_examples() {
        let l = TridiagonalModel::l_module(3, 0).unwrap();
        assert_eq!(l.theta_star, rs(&[3, 1, -1, -3]));
        let l = TridiagonalModel::l_module(4, 2).unwrap();
        assert_eq!(l.dimension(), 1);
        assert_eq!(l.alpha, rs(&[0]));
        assert!(TridiagonalModel::l_module(4, 3).is_err());
        assert!(TridiagonalModel::m_module(6, 1).is_err());
        assert!(TridiagonalModel::n_module(6, 0).is_err());
        assert!(TridiagonalModel::n_module(6, 4).is_err());
    }

    #[test]
    fn multiplicities() {
        let six: Vec<_> = (0..=3).map(|k| l_multiplicity(6, k)).collect();
        assert_eq!(six, rs(&[1, 5, 9, 5]));
        assert_eq!(n_multiplicity(6, 2), Rational::from(5i64));
        assert_eq!(n_multiplicity(3, 2), Rational::from(2i64));
        for d in 3..=24 {
            for (model, mult) in halved_classes(d).iter().chain(&hypercube_classes(d)) {
                assert!(mult.is_integer() && mult.is_positive(), "D={d} {}", model.label());
            }
            let halved: Rational =
                halved_classes(d).iter().map(|(m, c)| c * Rational::from(m.dimension() as i64)).sum();
            assert_eq!(halved, Rational::from(1i64 << (d - 1)));
            let cube: Rational =
                hypercube_classes(d).iter().map(|(m, c)| c * Rational::from(m.dimension() as i64)).sum();
            assert_eq!(cube, Rational::from(1i64 << d));
        }
    }

    #[test]
    fn dimension_formulas_and_sums_of_squares() {
        assert_eq!(halved_algebra_dimension_formula(3), 5);
        assert_eq!(halved_algebra_dimension_formula(6), 24);
        assert_eq!(halved_algebra_dimension_formula(8), 45);
        assert_eq!(hypercube_algebra_dimension_formula(4), 35);
        for d in 3..=24 {
            let sq = |cls: Vec<(TridiagonalModel, Rational)>| -> u64 {
                cls.iter().map(|(m, _)| (m.dimension() as u64).pow(2)).sum()
            };
            assert_eq!(sq(halved_classes(d)), halved_algebra_dimension_formula(d));
            assert_eq!(sq(hypercube_classes(d)), hypercube_algebra_dimension_formula(d));
        }
    }

    #[test]
    fn models_are_well_formed_with_spectra_inside_the_graph_spectrum() {
        for d in 3..=12 {
            let halved = eigenvalues_formula(d, Family::HalvedCube);
            for (m, _) in halved_classes(d) {
                assert!(m.is_well_formed(), "D={d} {}", m.label());
                assert!(m.eigenvalues_among(&halved).is_some(), "D={d} {}", m.label());
            }
            let cube = eigenvalues_formula(d, Family::Hypercube);
            for (m, _) in hypercube_classes(d) {
                assert!(m.is_well_formed());
                assert!(m.eigenvalues_among(&cube).is_some());
            }
        }
    }

    #[test]
    fn matrices_round_trip() {
        let m = TridiagonalModel::n_module(9, 4).unwrap();
        let back = TridiagonalModel::from_matrices(m.family, m.k, &m.a_matrix(), &m.astar_matrix()).unwrap();
        assert_eq!(back, m);
    }
}
