//! Terwilliger algebras of the hypercube and the halved cube, and the
//! decomposition of their standard modules into irreducible modules.
//!
//! Vectors of the standard module are handled shell by shell: every basis
//! vector of an irreducible module lies in one weight shell around the base
//! vertex, so the hypercube adjacency splits into raising and lowering maps
//! between neighbouring shells and the halved-cube adjacency moves a vector
//! by at most two shells.

mod algebra;
mod decompose;
mod model;
mod shells;

pub use algebra::{
    algebra_dimension, algebra_dimension_formula, classify_modules, closure_dimension, raising_lowering,
    AlgebraDimension, ClassRow, Classification, Distinction, PairDistinction, DEFAULT_CLOSURE_CAP,
};
pub use decompose::{
    combined_rank, decompose_halved, decompose_halved_with_instances, decompose_hypercube, hypercube_report,
    lowest_weight_vectors, restrict_to_halved, splits_cleanly, CheckFlag, DecompositionReport,
    IrreducibleModuleInstance, ModuleTally,
};
pub use model::{
    halved_algebra_dimension_formula, halved_classes, hypercube_algebra_dimension_formula, hypercube_classes,
    l_multiplicity, n_multiplicity, ModuleFamily, TridiagonalModel,
};
pub use shells::{ShellIndex, ShellVector};
