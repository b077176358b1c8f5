use serde::{Deserialize, Serialize};

use super::decompose::DecompositionReport;
use super::model::{halved_algebra_dimension_formula, hypercube_algebra_dimension_formula, ModuleFamily};
use crate::binary::{Family, GraphContext};
use crate::ensure;
use crate::error::{Error, Result};
use crate::graph::{adjacency, dual_adjacency};
use crate::linalg::{span_closure, QMatrix, Rational};

/// Default largest `D` at which the algebra dimension is computed by span
/// closure.
pub const DEFAULT_CLOSURE_CAP: usize = 8;

/// Dimension of the Terwilliger algebra: computed by closure (when within the
/// cap), the closed form, and the sum of squared dimensions of the
/// isomorphism classes of irreducible modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDimension {
    pub computed: Option<u64>,
    pub formula: u64,
    pub sum_of_squares: Option<u64>,
}

impl AlgebraDimension {
    pub fn passed(&self) -> bool {
        self.computed.is_none_or(|c| c == self.formula) && self.sum_of_squares.is_none_or(|s| s == self.formula)
    }
}

pub fn algebra_dimension_formula(d: usize, family: Family) -> u64 {
    match family {
        Family::Hypercube => hypercube_algebra_dimension_formula(d),
        Family::HalvedCube => halved_algebra_dimension_formula(d),
    }
}

/// Dimension of the algebra generated by `A` and `A*`, by span closure.
pub fn closure_dimension(ctx: &GraphContext) -> Result<u64> {
    let span = span_closure(&[adjacency(ctx), dual_adjacency(ctx).to_dense()])?;
    Ok(span.dim() as u64)
}

/// The algebra dimension of `ctx`. The closure is computed only when
/// `D <= closure_cap`; the sum of squares is taken from `classification`
/// when given.
pub fn algebra_dimension(
    ctx: &GraphContext,
    closure_cap: usize,
    classification: Option<&Classification>,
) -> Result<AlgebraDimension> {
    let computed = if ctx.d() <= closure_cap { Some(closure_dimension(ctx)?) } else { None };
    Ok(AlgebraDimension {
        computed,
        formula: algebra_dimension_formula(ctx.d(), ctx.family()),
        sum_of_squares: classification.map(|c| c.sum_of_squares),
    })
}

/// The raising and lowering parts `R = ∑ F*_{i+1} A F*_i` and
/// `L = ∑ F*_{i-1} A F*_i` of the hypercube adjacency matrix, with `F*_i` the
/// projection onto weight shell `i`. Checks `R + L = A`.
pub fn raising_lowering(ctx: &GraphContext) -> Result<(QMatrix, QMatrix)> {
    if ctx.family() != Family::Hypercube {
        return Err(Error::InvalidArgument("raising and lowering maps are built on the hypercube".into()));
    }
    let a = adjacency(ctx);
    let shells: Vec<usize> = ctx.vertices().iter().map(|&y| ctx.shell_of(y)).collect();
    let n = ctx.vertex_count();
    let part = |up: bool| {
        QMatrix::from_fn(n, n, |i, j| {
            let step = if up { shells[j] + 1 } else { shells[j].wrapping_sub(1) };
            if shells[i] == step {
                a[(i, j)].clone()
            } else {
                Rational::ZERO
            }
        })
    };
    let (r, l) = (part(true), part(false));
    ensure!(r.try_add(&l)? == a, "R + L differs from A at D={}", ctx.d());
    Ok((r, l))
}

/// One isomorphism class of irreducible modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub family: ModuleFamily,
    pub k: usize,
    pub dimension: usize,
    pub multiplicity: usize,
    pub alpha: Vec<Rational>,
    pub theta_star: Vec<Rational>,
}

impl ClassRow {
    pub fn label(&self) -> String {
        format!("{}_{}", self.family, self.k)
    }
}

/// What separates two classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distinction {
    Dimension,
    DualEigenvalues,
    Diagonal,
    /// Identical models: the classification fails.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDistinction {
    pub first: String,
    pub second: String,
    pub by: Distinction,
}

/// The classes found in a decomposition, with a pairwise comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub classes: Vec<ClassRow>,
    pub pairs: Vec<PairDistinction>,
    /// Every group has a single model.
    pub consistent_within_groups: bool,
    pub sum_of_squares: u64,
}

impl Classification {
    pub fn pairwise_distinct(&self) -> bool {
        self.pairs.iter().all(|p| p.by != Distinction::None)
    }

    pub fn passed(&self) -> bool {
        self.consistent_within_groups && self.pairwise_distinct()
    }
}

/// Groups the modules of a decomposition by `(family, k)` and compares the
/// groups pairwise by dimension, then by `A*` diagonal, then by `A`
/// diagonal.
pub fn classify_modules(report: &DecompositionReport) -> Classification {
    let classes: Vec<ClassRow> = report
        .modules
        .iter()
        .map(|m| ClassRow {
            family: m.family,
            k: m.k,
            dimension: m.dimension,
            multiplicity: m.multiplicity,
            alpha: m.model.alpha.clone(),
            theta_star: m.model.theta_star.clone(),
        })
        .collect();
    let mut pairs = Vec::new();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            let by = if a.dimension != b.dimension {
                Distinction::Dimension
            } else if a.theta_star != b.theta_star {
                Distinction::DualEigenvalues
            } else if a.alpha != b.alpha {
                Distinction::Diagonal
            } else {
                Distinction::None
            };
            pairs.push(PairDistinction { first: a.label(), second: b.label(), by });
        }
    }
    Classification {
        sum_of_squares: classes.iter().map(|c| (c.dimension as u64).pow(2)).sum(),
        consistent_within_groups: report.modules.iter().all(|m| m.distinct_models == 1),
        classes,
        pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{kernel_basis, rank};
    use crate::terwilliger::decompose_halved;

    #[test]
    fn closure_examples() {
        assert_eq!(closure_dimension(&GraphContext::new(3, Family::HalvedCube).unwrap()).unwrap(), 5);
        assert_eq!(closure_dimension(&GraphContext::new(4, Family::Hypercube).unwrap()).unwrap(), 35);
        for d in 3..=6 {
            let ctx = GraphContext::new(d, Family::HalvedCube).unwrap();
            let dim = algebra_dimension(&ctx, DEFAULT_CLOSURE_CAP, None).unwrap();
            assert_eq!(dim.computed, Some(dim.formula), "D={d}");
        }
    }

    #[test]
    fn cap_skips_the_closure() {
        let ctx = GraphContext::new(9, Family::HalvedCube).unwrap();
        let dim = algebra_dimension(&ctx, DEFAULT_CLOSURE_CAP, None).unwrap();
        assert_eq!(dim.computed, None);
        assert_eq!(dim.formula, 35 + 20);
    }

    #[test]
    fn raising_and_lowering() {
        let ctx = GraphContext::new(4, Family::Hypercube).unwrap();
        let (r, l) = raising_lowering(&ctx).unwrap();
        assert!(r.transpose() == l);
        // Shell 2 of H(4,2) holds the six words of weight two.
        let shell2: Vec<usize> = (0..16).filter(|i: &usize| i.count_ones() == 2).collect();
        let shell1: Vec<usize> = (0..16).filter(|i: &usize| i.count_ones() == 1).collect();
        let block = l.submatrix(&shell1, &shell2);
        assert_eq!(rank(&block), 4);
        assert_eq!(kernel_basis(&block).len(), 2);
        let zero = vec![0usize];
        let all: Vec<usize> = (0..16).collect();
        assert!(l.submatrix(&all, &zero).is_zero());
        assert!(raising_lowering(&GraphContext::new(4, Family::HalvedCube).unwrap()).is_err());
    }

    #[test]
    fn classification_examples() {
        let report = decompose_halved(&GraphContext::new(6, Family::HalvedCube).unwrap()).unwrap();
        let c = classify_modules(&report);
        assert!(c.passed());
        assert_eq!(c.classes.len(), 3);
        assert_eq!(c.sum_of_squares, 24);
        let m2_n2 = c.pairs.iter().find(|p| p.first == "M_2" && p.second == "N_2").unwrap();
        assert_eq!(m2_n2.by, Distinction::Diagonal);

        let report = decompose_halved(&GraphContext::new(3, Family::HalvedCube).unwrap()).unwrap();
        assert_eq!(classify_modules(&report).classes.len(), 2);
    }

    #[test]
    fn identical_models_fail_classification() {
        let mut report = decompose_halved(&GraphContext::new(6, Family::HalvedCube).unwrap()).unwrap();
        let mut copy = report.modules[1].model.clone();
        copy.family = ModuleFamily::N;
        report.modules[2].model = copy;
        assert!(!classify_modules(&report).pairwise_distinct());
    }
}
