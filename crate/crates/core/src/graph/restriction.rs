//! Restriction of hypercube matrices to the even-weight subspace `C^X`.

use super::{
    adjacency, adjacency_kernel, distance_kernels, distance_matrices, dual_adjacency, dual_distance_matrices,
    primitive_idempotents, Diagonal,
};
use crate::binary::{BitVector, Family, GraphContext};
use crate::ensure;
use crate::error::Result;

/// Above this `D` the dense form of the adjacency restriction is skipped;
/// the Cayley-kernel form is checked at every `D`.
pub const DENSE_RESTRICTION_MAX_D: usize = 8;

fn pair(d: usize, base: BitVector) -> Result<(GraphContext, GraphContext)> {
    Ok((GraphContext::with_base(d, Family::Hypercube, base)?, GraphContext::with_base(d, Family::HalvedCube, base)?))
}

/// The halved-cube adjacency matrix is the distance-2 matrix of the
/// hypercube restricted to `C^X`, and `C^X` is invariant under it.
pub fn check_adjacency_restriction(d: usize) -> Result<()> {
    let (cube, halved) = pair(d, BitVector::ZERO)?;
    let a2 = &distance_kernels(&cube)[2];
    let restricted = a2.restrict_to_even(&halved)?;
    ensure!(restricted == adjacency_kernel(&halved), "D={d}: A differs from the restriction of A_2");

    if d <= DENSE_RESTRICTION_MAX_D {
        let dense = &distance_matrices(&cube)[2];
        let even = cube.even_indices();
        let odd: Vec<usize> = (0..cube.vertex_count()).filter(|i| !even.contains(i)).collect();
        ensure!(dense.submatrix(&even, &odd).is_zero(), "D={d}: A_2 mixes even and odd words");
        ensure!(dense.submatrix(&odd, &even).is_zero(), "D={d}: A_2 mixes odd and even words");
        let sub = dense.principal_submatrix(&even);
        let a = adjacency(&halved);
        ensure!(sub == a, "D={d}: dense A differs from A_2 restricted at {:?}", sub.first_difference(&a));
    }
    Ok(())
}

/// `E_i = (E_i + E_{D-i})|_X` for hypercube idempotents `E_j`, except
/// `E_{D/2} = E_{D/2}|_X` when `D` is even.
pub fn check_idempotent_folding(d: usize) -> Result<()> {
    let (cube, halved) = pair(d, BitVector::ZERO)?;
    let big = primitive_idempotents(&cube)?;
    let small = primitive_idempotents(&halved)?;
    for (i, e) in small.idempotents.iter().enumerate() {
        let folded = if d.is_multiple_of(2) && 2 * i == d {
            big.idempotents[i].clone()
        } else {
            big.idempotents[i].try_add(&big.idempotents[d - i])?
        };
        let restricted = folded.restrict_to_even(&halved)?;
        ensure!(&restricted == e, "D={d}: halved-cube E_{i} is not the folded hypercube idempotent");
    }
    Ok(())
}

/// The halved-cube dual adjacency matrix, taken from its definition through
/// `E_1`, equals the hypercube `A*` restricted to `C^X`. Also checks the
/// intermediate fact that `A*_{D-1}` agrees with `A*` on even words.
pub fn check_dual_adjacency_restriction(d: usize, base: BitVector) -> Result<Diagonal> {
    let (cube, halved) = pair(d, base)?;
    let small = primitive_idempotents(&halved)?;
    let from_definition = dual_distance_matrices(&halved, &small).swap_remove(1);

    let cube_dual = dual_adjacency(&cube);
    let even = cube.even_indices();
    let restricted = cube_dual.restrict(&even);
    ensure!(from_definition == restricted, "D={d}: A* differs from the restricted hypercube A*");

    let big = primitive_idempotents(&cube)?;
    let cube_duals = dual_distance_matrices(&cube, &big);
    ensure!(cube_duals[d - 1].restrict(&even) == restricted, "D={d}: A*_(D-1) and A* disagree on even words");
    Ok(from_definition)
}
