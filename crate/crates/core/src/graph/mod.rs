//! Adjacency, distance, idempotent and dual matrices of the hypercube and
//! the halved cube, and checks of their parameters.
//!
//! Dense [`QMatrix`] constructors are provided for every matrix. The checks
//! themselves mostly run on [`CayleyMatrix`] kernels and on diagonals, which
//! keeps them exact and cheap enough to reach `D = 12`.

mod cayley;
mod params;
mod restriction;
mod spectral;

pub use cayley::CayleyMatrix;
pub use params::{
    check_distance_recurrence, check_distance_schur, intersection_numbers, intersection_numbers_formula,
    IntersectionArray, EXHAUSTIVE_COUNT_MAX_D,
};
pub use restriction::{check_adjacency_restriction, check_dual_adjacency_restriction, check_idempotent_folding};
pub use spectral::{
    check_dual_adjacency, check_dual_recurrence, dual_adjacency, dual_distance_matrices, dual_intersection_formula,
    eigenvalues, eigenvalues_formula, primitive_idempotents, q_polynomial_check, Diagonal, DualIntersectionArray,
    SpectralData,
};

use crate::binary::GraphContext;
use crate::linalg::{QMatrix, Rational};

/// Dense adjacency matrix in canonical vertex order.
pub fn adjacency(ctx: &GraphContext) -> QMatrix {
    let n = ctx.vertex_count();
    let mut a = QMatrix::zeros(n, n);
    for (i, &y) in ctx.vertices().iter().enumerate() {
        for z in ctx.neighbors(y) {
            a[(i, ctx.index_of(z).expect("neighbors stay in the vertex set"))] = Rational::ONE;
        }
    }
    a
}

/// Adjacency matrix as a Cayley kernel: the indicator of the neighbor masks.
pub fn adjacency_kernel(ctx: &GraphContext) -> CayleyMatrix {
    let masks = ctx.neighbor_masks();
    CayleyMatrix::from_fn(ctx, |w| if masks.contains(&w) { Rational::ONE } else { Rational::ZERO })
}

/// `A v` without materializing `A`.
pub fn apply_adjacency(ctx: &GraphContext, v: &[Rational]) -> Vec<Rational> {
    assert_eq!(v.len(), ctx.vertex_count(), "vector length");
    let family = ctx.family();
    ctx.vertices()
        .iter()
        .map(|y| {
            let mut acc = Rational::ZERO;
            for m in ctx.neighbor_masks() {
                let x = &v[family.word_index(y.bits() ^ m)];
                if !x.is_zero() {
                    acc += x;
                }
            }
            acc
        })
        .collect()
}

/// Distance matrices `A_0, ..., A_diameter` as Cayley kernels.
pub fn distance_kernels(ctx: &GraphContext) -> Vec<CayleyMatrix> {
    (0..=ctx.diameter())
        .map(|i| {
            CayleyMatrix::from_fn(ctx, |w| {
                let dist = ctx.distance(crate::binary::BitVector::ZERO, crate::binary::BitVector::new(w));
                if dist.ok() == Some(i) {
                    Rational::ONE
                } else {
                    Rational::ZERO
                }
            })
        })
        .collect()
}

/// Dense distance matrices `A_0, ..., A_diameter`.
pub fn distance_matrices(ctx: &GraphContext) -> Vec<QMatrix> {
    let vs = ctx.vertices();
    (0..=ctx.diameter())
        .map(|i| {
            QMatrix::from_fn(vs.len(), vs.len(), |a, b| {
                if ctx.distance(vs[a], vs[b]).expect("vertices of the family") == i {
                    Rational::ONE
                } else {
                    Rational::ZERO
                }
            })
        })
        .collect()
}

/// Unit vector at the zero word.
pub fn unit_at_zero(ctx: &GraphContext) -> Vec<Rational> {
    let mut e = vec![Rational::ZERO; ctx.vertex_count()];
    e[0] = Rational::ONE;
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::Family;

    fn ctx(d: usize, f: Family) -> GraphContext {
        GraphContext::new(d, f).unwrap()
    }

    #[test]
    fn halved_three_is_complete_graph_on_four_vertices() {
        let a = adjacency(&ctx(3, Family::HalvedCube));
        let k4 = QMatrix::from_fn(4, 4, |i, j| if i == j { Rational::ZERO } else { Rational::ONE });
        assert_eq!(a, k4);
    }

    #[test]
    fn adjacency_row_sums() {
        let a = adjacency(&ctx(6, Family::HalvedCube));
        assert!(a.is_symmetric());
        assert!(a.row_sums().iter().all(|s| *s == Rational::from(15i64)));
        let a = adjacency(&ctx(4, Family::Hypercube));
        assert!(a.row_sums().iter().all(|s| *s == Rational::from(4i64)));
    }

    #[test]
    fn distance_matrix_examples() {
        // In the halved 4-cube each vertex has exactly one vertex at distance
        // 2, its complement; count it by brute force.
        let c = ctx(4, Family::HalvedCube);
        let brute: Vec<usize> =
            c.vertices().iter().map(|&x| c.vertices().iter().filter(|&&y| x.xor(y).weight() == 4).count()).collect();
        assert!(brute.iter().all(|&k| k == 1));
        let am = distance_matrices(&c);
        assert!(am[2].row_sums().iter().all(|s| s.is_one()));
        assert_eq!(am[0], QMatrix::identity(8));

        let h = distance_matrices(&ctx(3, Family::Hypercube));
        assert!(h[3].row_sums().iter().all(|s| s.is_one()));
    }

    #[test]
    fn distance_matrices_partition_all_ones() {
        for family in [Family::Hypercube, Family::HalvedCube] {
            let c = ctx(5, family);
            let am = distance_matrices(&c);
            let mut total = QMatrix::zeros(c.vertex_count(), c.vertex_count());
            for m in &am {
                total = total.try_add(m).unwrap();
            }
            assert!(total.as_flat().iter().all(Rational::is_one));
        }
    }

    #[test]
    fn kernels_agree_with_dense_constructions() {
        for d in 3..=6 {
            for family in [Family::Hypercube, Family::HalvedCube] {
                let c = ctx(d, family);
                assert_eq!(adjacency_kernel(&c).to_dense(&c), adjacency(&c));
                let dense = distance_matrices(&c);
                for (k, m) in distance_kernels(&c).iter().zip(&dense) {
                    assert_eq!(&k.to_dense(&c), m);
                }
                let v: Vec<Rational> = (0..c.vertex_count()).map(|i| Rational::from(i as i64 % 5 - 2)).collect();
                assert_eq!(apply_adjacency(&c, &v), adjacency(&c).mul_vec(&v).unwrap());
            }
        }
    }
}
