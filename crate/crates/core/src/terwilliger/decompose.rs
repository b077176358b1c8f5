use serde::{Deserialize, Serialize};

use super::model::{halved_classes, hypercube_classes, ModuleFamily, TridiagonalModel};
use super::shells::{ShellIndex, ShellVector};
use crate::binary::{Family, GraphContext};
use crate::ensure;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, rank_of_rows, QMatrix, Rational};

/// One irreducible module inside a standard module, given by a basis of
/// shell-supported vectors on strictly increasing shells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleModuleInstance {
    /// The model read off this basis.
    pub model: TridiagonalModel,
    pub endpoint_shell: usize,
    pub basis: Vec<ShellVector>,
}

/// Representing matrix of an operator on a module basis. `apply` returns
/// the image of a vector split into shell components; each component must be
/// a multiple of the basis vector on that shell, or zero.
fn representing_matrix(
    basis: &[ShellVector],
    label: &str,
    apply: impl Fn(&ShellVector) -> Vec<ShellVector>,
) -> Result<QMatrix> {
    let n = basis.len();
    let mut m = QMatrix::zeros(n, n);
    for (col, w) in basis.iter().enumerate() {
        for part in apply(w) {
            if part.is_zero() {
                continue;
            }
            let row = basis.iter().position(|b| b.shell == part.shell).ok_or_else(|| {
                Error::Verification(format!("{label}: column {col} leaves the module at shell {}", part.shell))
            })?;
            let c = part.ratio_to(&basis[row]).ok_or_else(|| {
                Error::Verification(format!(
                    "{label}: image of basis vector {col} on shell {} is not a multiple of basis vector {row}",
                    part.shell
                ))
            })?;
            m[(row, col)] += &c;
        }
    }
    Ok(m)
}

/// Representing matrix of `A*`: a shell-`s` vector is an eigenvector for
/// `D - 2s`.
fn dual_representing_matrix(d: usize, basis: &[ShellVector]) -> QMatrix {
    let diag: Vec<Rational> = basis.iter().map(|w| Rational::from(d as i64 - 2 * w.shell as i64)).collect();
    QMatrix::diagonal(&diag)
}

fn hypercube_model(index: &ShellIndex, k: usize, basis: &[ShellVector]) -> Result<TridiagonalModel> {
    let label = format!("L_{k}");
    let a = representing_matrix(basis, &label, |w| vec![index.lower(w), index.raise(w)])?;
    TridiagonalModel::from_matrices(ModuleFamily::L, k, &a, &dual_representing_matrix(index.d(), basis))
}

fn halved_model(index: &ShellIndex, family: ModuleFamily, k: usize, basis: &[ShellVector]) -> Result<TridiagonalModel> {
    let label = format!("{family}_{k}");
    let a = representing_matrix(basis, &label, |w| index.halved_adjacency(w).to_vec())?;
    TridiagonalModel::from_matrices(family, k, &a, &dual_representing_matrix(index.d(), basis))
}

/// Lowest-weight vectors on shell `k`: an exact basis of the kernel of the
/// lowering map restricted to the shell.
pub fn lowest_weight_vectors(index: &ShellIndex, k: usize) -> Vec<ShellVector> {
    let coords = if k == 0 { vec![vec![Rational::ONE]] } else { kernel_basis(&index.lowering_block(k)) };
    coords.into_iter().map(|coords| ShellVector { shell: k, coords }).collect()
}

/// Decomposes the standard module of `H(D,2)` into irreducible modules.
///
/// For each `k <= D/2` the kernel of the lowering map on shell `k` must have
/// the dimension of the `L_k` multiplicity; each kernel vector `w_0` is
/// raised as `w_{i+1} = R w_i / (i + 1)` and the representing matrices of
/// `A` and `A*` on the result must equal the `L_k` model. Spanning of the
/// union is checked by [`combined_rank`].
pub fn decompose_hypercube(ctx: &GraphContext) -> Result<Vec<IrreducibleModuleInstance>> {
    if ctx.family() != Family::Hypercube {
        return Err(Error::InvalidArgument("decompose_hypercube needs a hypercube context".into()));
    }
    let d = ctx.d();
    let index = ShellIndex::for_context(ctx);
    let mut out = Vec::new();
    for (target, multiplicity) in hypercube_classes(d) {
        let k = target.k;
        let kernel = lowest_weight_vectors(&index, k);
        ensure!(
            Rational::from(kernel.len()) == multiplicity,
            "D={d}: lowering kernel on shell {k} has dimension {}, expected {multiplicity}",
            kernel.len()
        );
        for w0 in kernel {
            let mut basis = vec![w0];
            for beta in &target.beta {
                let next = index.raise(basis.last().expect("nonempty")).scale(&beta.recip());
                basis.push(next);
            }
            let model = hypercube_model(&index, k, &basis)?;
            ensure!(model == target, "D={d}: measured {model:?} differs from the L_{k} model {target:?}");
            out.push(IrreducibleModuleInstance { model, endpoint_shell: k, basis });
        }
    }
    Ok(out)
}

/// `true` when every basis vector is supported entirely on even-weight
/// vertices or entirely on odd-weight vertices.
pub fn splits_cleanly(index: &ShellIndex, instance: &IrreducibleModuleInstance) -> bool {
    instance.basis.iter().all(|v| {
        let mut parities =
            index.shell_vertices(v.shell).zip(&v.coords).filter(|(_, c)| !c.is_zero()).map(|(y, _)| y.is_even());
        match parities.next() {
            None => true,
            Some(first) => parities.all(|p| p == first),
        }
    })
}

/// `L ∩ C^X` for a hypercube module `L = L_k` and an even base vertex.
///
/// The basis vectors on even shells are kept: `v_0, v_2, ...` for even `k`
/// (giving `M_k`) and `v_1, v_3, ...` for odd `k` (giving `N_{k+1}`). There
/// are none when `k = D/2` is odd. The kept vectors are renormalized by
/// `u_{i+1} = (shell part of A u_i) / β_i` with `A` the halved-cube
/// adjacency, each `u_i` must be a nonzero multiple of the kept vector on
/// its shell, and the representing matrices of `A` and `A*` must equal the
/// target model.
pub fn restrict_to_halved(
    index: &ShellIndex,
    instance: &IrreducibleModuleInstance,
) -> Result<Option<IrreducibleModuleInstance>> {
    if instance.model.family != ModuleFamily::L {
        return Err(Error::InvalidArgument("only hypercube modules restrict to the halved cube".into()));
    }
    ensure!(index.base().is_even(), "base vertex must have even weight");
    let d = index.d();
    let k = instance.model.k;
    let kept: Vec<&ShellVector> = instance.basis.iter().filter(|v| v.shell % 2 == 0).collect();
    if kept.is_empty() {
        return Ok(None);
    }
    let target =
        if k.is_multiple_of(2) { TridiagonalModel::m_module(d, k)? } else { TridiagonalModel::n_module(d, k + 1)? };
    let label = target.label();
    ensure!(
        kept.len() == target.dimension(),
        "D={d}: L_{k} keeps {} vectors, {label} has dimension {}",
        kept.len(),
        target.dimension()
    );
    let mut basis = vec![kept[0].clone()];
    for (i, beta) in target.beta.iter().enumerate() {
        let [_, _, up] = index.halved_adjacency(&basis[i]);
        let next = up.scale(&beta.recip());
        let ratio = next.ratio_to(kept[i + 1]);
        ensure!(
            ratio.as_ref().is_some_and(|c| !c.is_zero()),
            "D={d}: {label} vector {} is not a nonzero multiple of the kept hypercube vector",
            i + 1
        );
        basis.push(next);
    }
    let model = halved_model(index, target.family, target.k, &basis)?;
    ensure!(model == target, "D={d}: measured {model:?} differs from the {label} model {target:?}");
    Ok(Some(IrreducibleModuleInstance { model, endpoint_shell: basis[0].shell, basis }))
}

/// Rank of the union of module bases, shell by shell. Vectors on different
/// shells have disjoint supports, so the ranks add.
pub fn combined_rank(index: &ShellIndex, instances: &[IrreducibleModuleInstance]) -> usize {
    let mut by_shell: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); index.d() + 1];
    for v in instances.iter().flat_map(|m| &m.basis) {
        by_shell[v.shell].push(v.coords.clone());
    }
    by_shell.into_iter().map(rank_of_rows).sum()
}

/// One isomorphism class in a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleTally {
    pub family: ModuleFamily,
    pub k: usize,
    pub dimension: usize,
    pub multiplicity: usize,
    pub expected_multiplicity: Rational,
    /// The model of the first instance found.
    pub model: TridiagonalModel,
    /// Number of different models measured over the instances.
    pub distinct_models: usize,
}

impl ModuleTally {
    pub fn label(&self) -> String {
        format!("{}_{}", self.family, self.k)
    }
}

/// A named pass/fail flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckFlag {
    pub name: String,
    pub passed: bool,
}

/// Summary of a decomposition of a standard module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub d: usize,
    pub family: Family,
    pub base_vertex: String,
    pub modules: Vec<ModuleTally>,
    pub total_dimension: usize,
    pub vertex_count: usize,
    pub combined_rank: usize,
    pub algebra_dimension: Option<super::AlgebraDimension>,
    pub checks: Vec<CheckFlag>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.algebra_dimension.as_ref().is_none_or(|a| a.passed())
    }

    pub fn module(&self, family: ModuleFamily, k: usize) -> Option<&ModuleTally> {
        self.modules.iter().find(|m| m.family == family && m.k == k)
    }

    /// The decomposition without the base vertex, for comparing reports
    /// taken at different base vertices.
    pub fn modules_summary(&self) -> Vec<(ModuleFamily, usize, usize, usize)> {
        self.modules.iter().map(|m| (m.family, m.k, m.multiplicity, m.dimension)).collect()
    }
}

fn tally(
    instances: &[IrreducibleModuleInstance],
    expected: Vec<(TridiagonalModel, Rational)>,
) -> (Vec<ModuleTally>, bool) {
    let mut modules = Vec::new();
    let mut all_expected_present = true;
    for (target, expected_multiplicity) in expected {
        let found: Vec<&TridiagonalModel> =
            instances.iter().map(|m| &m.model).filter(|m| m.family == target.family && m.k == target.k).collect();
        let Some(first) = found.first() else {
            all_expected_present = false;
            continue;
        };
        let mut distinct: Vec<&TridiagonalModel> = Vec::new();
        for m in &found {
            if !distinct.contains(m) {
                distinct.push(m);
            }
        }
        modules.push(ModuleTally {
            family: target.family,
            k: target.k,
            dimension: first.dimension(),
            multiplicity: found.len(),
            expected_multiplicity,
            model: (*first).clone(),
            distinct_models: distinct.len(),
        });
    }
    let accounted: usize = modules.iter().map(|m| m.multiplicity).sum();
    (modules, all_expected_present && accounted == instances.len())
}

fn build_report(
    ctx: &GraphContext,
    index: &ShellIndex,
    instances: &[IrreducibleModuleInstance],
    expected: Vec<(TridiagonalModel, Rational)>,
    clean_split: Option<bool>,
) -> DecompositionReport {
    let (modules, classes_match) = tally(instances, expected);
    let total_dimension = modules.iter().map(|m| m.multiplicity * m.dimension).sum();
    let vertex_count = ctx.vertex_count();
    let rank = combined_rank(index, instances);
    let mut checks = vec![
        CheckFlag {
            name: "multiplicities".into(),
            passed: classes_match && modules.iter().all(|m| Rational::from(m.multiplicity) == m.expected_multiplicity),
        },
        CheckFlag { name: "models".into(), passed: modules.iter().all(|m| m.distinct_models == 1) },
        CheckFlag { name: "dimension-sum".into(), passed: total_dimension == vertex_count },
        CheckFlag { name: "full-rank".into(), passed: rank == vertex_count },
    ];
    if let Some(clean) = clean_split {
        checks.push(CheckFlag { name: "clean-split".into(), passed: clean });
    }
    DecompositionReport {
        d: ctx.d(),
        family: ctx.family(),
        base_vertex: ctx.base_vertex().to_bit_string(ctx.d()),
        modules,
        total_dimension,
        vertex_count,
        combined_rank: rank,
        algebra_dimension: None,
        checks,
    }
}

/// Decomposition of the hypercube standard module, tallied against the
/// `L_k` multiplicities.
pub fn hypercube_report(ctx: &GraphContext) -> Result<(DecompositionReport, Vec<IrreducibleModuleInstance>)> {
    let instances = decompose_hypercube(ctx)?;
    let index = ShellIndex::for_context(ctx);
    let report = build_report(ctx, &index, &instances, hypercube_classes(ctx.d()), None);
    Ok((report, instances))
}

/// Decomposes the standard module of `½H(D,2)` by restricting the
/// decomposition of the parent hypercube at the same base vertex, and tallies
/// the result against the `M_k` and `N_k` multiplicities.
pub fn decompose_halved(ctx: &GraphContext) -> Result<DecompositionReport> {
    decompose_halved_with_instances(ctx).map(|(report, _)| report)
}

/// [`decompose_halved`], also returning the restricted instances.
pub fn decompose_halved_with_instances(
    ctx: &GraphContext,
) -> Result<(DecompositionReport, Vec<IrreducibleModuleInstance>)> {
    if ctx.family() != Family::HalvedCube {
        return Err(Error::InvalidArgument("decompose_halved needs a halved-cube context".into()));
    }
    let cube = ctx.sibling(Family::Hypercube)?;
    let index = ShellIndex::for_context(ctx);
    let parents = decompose_hypercube(&cube)?;
    let clean = parents.iter().all(|m| splits_cleanly(&index, m));
    let mut restricted = Vec::new();
    for parent in &parents {
        if let Some(m) = restrict_to_halved(&index, parent)? {
            restricted.push(m);
        }
    }
    let report = build_report(ctx, &index, &restricted, halved_classes(ctx.d()), Some(clean));
    Ok((report, restricted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::BitVector;
    use crate::graph::{adjacency, dual_adjacency};

    fn halved(d: usize) -> GraphContext {
        GraphContext::new(d, Family::HalvedCube).unwrap()
    }

    #[test]
    fn hypercube_examples() {
        let cube = GraphContext::new(4, Family::Hypercube).unwrap();
        let inst = decompose_hypercube(&cube).unwrap();
        let top: Vec<_> = inst.iter().filter(|m| m.model.k == 2).collect();
        assert_eq!(top.len(), 2);
        assert!(top.iter().all(|m| m.basis.len() == 1 && m.model.alpha == [Rational::ZERO]));

        let cube = GraphContext::new(3, Family::Hypercube).unwrap();
        let inst = decompose_hypercube(&cube).unwrap();
        let l0: Vec<_> = inst.iter().filter(|m| m.model.k == 0).collect();
        assert_eq!(l0.len(), 1);
        let ts: Vec<i64> = l0[0].model.theta_star.iter().map(|t| t.to_i64().unwrap()).collect();
        assert_eq!(ts, [3, 1, -1, -3]);

        let (report, _) = hypercube_report(&GraphContext::new(6, Family::Hypercube).unwrap()).unwrap();
        let mults: Vec<_> = report.modules.iter().map(|m| (m.multiplicity, m.dimension)).collect();
        assert_eq!(mults, [(1, 7), (5, 5), (9, 3), (5, 1)]);
        assert_eq!(report.total_dimension, 64);
        assert!(report.passed());
    }

    #[test]
    fn halved_six() {
        let report = decompose_halved(&halved(6)).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(
            report.modules_summary(),
            [(ModuleFamily::M, 0, 1, 4), (ModuleFamily::M, 2, 9, 2), (ModuleFamily::N, 2, 5, 2)]
        );
        assert_eq!(report.total_dimension, 32);
    }

    #[test]
    fn halved_three() {
        let report = decompose_halved(&halved(3)).unwrap();
        assert!(report.passed());
        assert_eq!(report.modules_summary(), [(ModuleFamily::M, 0, 1, 2), (ModuleFamily::N, 2, 2, 1)]);
    }

    #[test]
    fn restriction_examples() {
        let cube = GraphContext::new(6, Family::Hypercube).unwrap();
        let index = ShellIndex::for_context(&cube);
        let inst = decompose_hypercube(&cube).unwrap();
        for m in &inst {
            let r = restrict_to_halved(&index, m).unwrap();
            match m.model.k {
                3 => assert!(r.is_none()),
                1 => {
                    let r = r.unwrap();
                    assert_eq!((r.model.family, r.model.k, r.basis.len()), (ModuleFamily::N, 2, 2));
                    assert_eq!(r.model.theta_star, [Rational::from(2i64), Rational::from(-2i64)]);
                }
                k => assert_eq!(r.unwrap().model.family, if k % 2 == 0 { ModuleFamily::M } else { ModuleFamily::N }),
            }
        }
        let five = GraphContext::new(5, Family::Hypercube).unwrap();
        let index = ShellIndex::for_context(&five);
        let l0 = decompose_hypercube(&five).unwrap().into_iter().find(|m| m.model.k == 0).unwrap();
        assert_eq!(restrict_to_halved(&index, &l0).unwrap().unwrap().model, TridiagonalModel::m_module(5, 0).unwrap());
    }

    /// Representing matrices recomputed with dense matrices on the standard
    /// module: `A B = B [A]` and `A* B = B [A*]` for the basis matrix `B`.
    #[test]
    fn dense_representing_matrices() {
        for d in 3..=6 {
            let ctx = halved(d);
            let index = ShellIndex::for_context(&ctx);
            let a = adjacency(&ctx);
            let astar = dual_adjacency(&ctx).to_dense();
            let (_, instances) = decompose_halved_with_instances(&ctx).unwrap();
            for m in &instances {
                let cols: Vec<Vec<Rational>> = m.basis.iter().map(|v| index.to_standard(v, &ctx).unwrap()).collect();
                let b = QMatrix::from_columns(&cols, ctx.vertex_count()).unwrap();
                assert_eq!(a.try_mul(&b).unwrap(), b.try_mul(&m.model.a_matrix()).unwrap());
                assert_eq!(astar.try_mul(&b).unwrap(), b.try_mul(&m.model.astar_matrix()).unwrap());
            }
        }
    }

    #[test]
    fn decomposition_is_base_vertex_equivariant() {
        for d in 3..=6 {
            let reference = decompose_halved(&halved(d)).unwrap();
            for v in halved(d).vertices() {
                let ctx = GraphContext::with_base(d, Family::HalvedCube, *v).unwrap();
                let report = decompose_halved(&ctx).unwrap();
                assert!(report.passed());
                assert_eq!(report.modules, reference.modules, "D={d} base {}", v.to_bit_string(d));
            }
        }
    }

    #[test]
    fn odd_base_vertex_is_rejected_for_restriction() {
        let cube = GraphContext::with_base(4, Family::Hypercube, BitVector::new(1)).unwrap();
        let index = ShellIndex::for_context(&cube);
        let inst = decompose_hypercube(&cube).unwrap();
        assert!(restrict_to_halved(&index, &inst[0]).is_err());
    }

    #[test]
    fn a_wrong_model_is_caught() {
        let cube = GraphContext::new(4, Family::Hypercube).unwrap();
        let index = ShellIndex::for_context(&cube);
        let mut inst = decompose_hypercube(&cube).unwrap().remove(0);
        inst.basis[1] = inst.basis[1].scale(&Rational::from(2i64));
        let err = hypercube_model(&index, 0, &inst.basis).unwrap();
        assert_ne!(err, TridiagonalModel::l_module(4, 0).unwrap());
        inst.basis[2].coords[0] += Rational::ONE;
        assert!(hypercube_model(&index, 0, &inst.basis).is_err());
    }
}
