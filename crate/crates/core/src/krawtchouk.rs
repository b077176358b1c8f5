//! The polynomials `v_i(t)` attached to the hypercube and their
//! Krawtchouk form.
//!
//! `v_0 = 1`, `v_1 = t` and `t v_i = (D - i + 1) v_{i-1} + (i + 1) v_{i+1}`.
//! They turn the adjacency and dual adjacency matrices of `H(D,2)` into
//! the distance and dual distance matrices.

use crate::binary::{Family, GraphContext};
use crate::error::{Error, Result};
use crate::graph::{
    apply_adjacency, distance_kernels, dual_adjacency, dual_distance_matrices, primitive_idempotents, unit_at_zero,
};
use crate::linalg::{binomial, binomial_rational, Polynomial, Rational};

/// `v_i(t)` for a fixed `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolynomial {
    pub d: usize,
    pub i: usize,
    pub poly: Polynomial,
}

impl VPolynomial {
    pub fn eval(&self, t: &Rational) -> Rational {
        self.poly.eval(t)
    }
}

/// All of `v_0, ..., v_D`.
pub fn v_polys(d: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::constant(Rational::ONE)];
    if d == 0 {
        return out;
    }
    out.push(Polynomial::identity());
    let t = Polynomial::identity();
    for i in 1..d {
        let next = t
            .mul(&out[i])
            .sub(&out[i - 1].scale(&Rational::from((d - i + 1) as i64)))
            .scale(&Rational::new(1, (i + 1) as i64));
        out.push(next);
    }
    out
}

pub fn v_poly(d: usize, i: usize) -> Result<VPolynomial> {
    if i > d {
        return Err(Error::IndexOutOfRange { index: i, max: d });
    }
    let poly = v_polys(d).swap_remove(i);
    Ok(VPolynomial { d, i, poly })
}

/// `K_i(t; q, n) = ∑_{j=0}^{i} (-q)^j C(i,j) C(t,j) / C(n,j)`, with the
/// generalized binomial `C(t, j)` for rational `t`.
pub fn krawtchouk_eval(i: usize, t: &Rational, q: &Rational, n: usize) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::InvalidArgument("Krawtchouk parameter q must be nonzero".into()));
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, max: n });
    }
    let neg_q = -q;
    let mut sum = Rational::ZERO;
    for j in 0..=i {
        let num = Rational::from(binomial(i as i64, j as i64)) * binomial_rational(t, j as u32);
        let den = Rational::from(binomial(n as i64, j as i64));
        sum += neg_q.pow(j as u32) * num / den;
    }
    Ok(sum)
}

/// `v_i(t) = C(D,i) K_i((D - t)/2; 2, D)` at the `D + 1` points
/// `t = D - 2n`; as both sides have degree at most `D` this proves the
/// polynomial identity.
pub fn krawtchouk_identity_check(d: usize) -> Result<bool> {
    let vs = v_polys(d);
    let two = Rational::from(2i64);
    for (i, v) in vs.iter().enumerate() {
        let c = Rational::from(binomial(d as i64, i as i64));
        for n in 0..=d {
            let t = Rational::from(d as i64 - 2 * n as i64);
            let arg = (Rational::from(d as i64) - &t) / &two;
            if v.eval(&t) != &c * &krawtchouk_eval(i, &arg, &two, d)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `v_{D-1}(D - 2n) = (-1)^n (D - 2n)` for every `n = 0..=D`.
pub fn v_eval_identity_check(d: usize) -> bool {
    if d < 1 {
        return false;
    }
    let v = &v_polys(d)[d - 1];
    (0..=d).all(|n| {
        let x = d as i64 - 2 * n as i64;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        v.eval(&Rational::from(x)) == Rational::from(sign * x)
    })
}

/// `A_i = v_i(A)` and `A*_i = v_i(A*)` on the hypercube, for all `i`.
///
/// `v_i(A)` is a polynomial in a Cayley adjacency matrix, so comparing its
/// column at the zero word with the distance-`i` indicator decides the matrix
/// identity. `A*_i` is taken from its definition through `E_i`.
pub fn distance_matrix_identity_check(ctx: &GraphContext) -> Result<bool> {
    if ctx.family() != Family::Hypercube {
        return Err(Error::InvalidArgument("the v_i identities are stated for the hypercube".into()));
    }
    let vs = v_polys(ctx.d());
    let e0 = unit_at_zero(ctx);
    let distance = distance_kernels(ctx);
    let spectral = primitive_idempotents(ctx)?;
    let duals = dual_distance_matrices(ctx, &spectral);
    let astar = dual_adjacency(ctx);
    for (i, v) in vs.iter().enumerate() {
        let column = v.apply_to_vector(|x| apply_adjacency(ctx, x), &e0);
        if column != distance[i].kernel() {
            return Ok(false);
        }
        if astar.eval_poly(v) != duals[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{adjacency, distance_matrices, eigenvalues_formula};
    use crate::linalg::QMatrix;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn low_degree_polynomials() {
        for d in 3..=9 {
            assert_eq!(v_poly(d, 0).unwrap().poly, Polynomial::constant(Rational::ONE));
            // One recurrence step by hand: v_2 = (t^2 - D) / 2.
            let v2 = Polynomial::new(vec![Rational::new(-(d as i64), 2), Rational::ZERO, Rational::new(1, 2)]);
            assert_eq!(v_poly(d, 2).unwrap().poly, v2);
        }
        assert!(v_poly(3, 4).is_err());
    }

    #[test]
    fn v2_maps_cube_eigenvalues_to_halved_eigenvalues() {
        assert_eq!(v_poly(6, 2).unwrap().eval(&r(4)), r(5));
        for d in 3..=12 {
            let v2 = v_poly(d, 2).unwrap();
            let cube = eigenvalues_formula(d, Family::Hypercube);
            let halved = eigenvalues_formula(d, Family::HalvedCube);
            for (i, h) in halved.iter().enumerate() {
                assert_eq!(&v2.eval(&cube[i]), h);
            }
        }
    }

    #[test]
    fn degree_leading_coefficient_and_valency() {
        for d in 3..=10 {
            let vs = v_polys(d);
            let mut fact = Rational::ONE;
            for (i, v) in vs.iter().enumerate() {
                if i > 0 {
                    fact *= Rational::from(i as i64);
                }
                assert_eq!(v.degree(), Some(i));
                assert_eq!(v.leading_coefficient(), fact.recip());
                assert_eq!(v.eval(&r(d as i64)), Rational::from(binomial(d as i64, i as i64)));
            }
        }
    }

    #[test]
    fn krawtchouk_examples() {
        let q = r(2);
        assert_eq!(krawtchouk_eval(0, &Rational::new(7, 3), &q, 5).unwrap(), Rational::ONE);
        // 1 - 2 * (1 * 3 / 5)
        assert_eq!(krawtchouk_eval(1, &r(3), &q, 5).unwrap(), Rational::new(-1, 5));
        assert!(krawtchouk_eval(1, &r(3), &Rational::ZERO, 5).is_err());
        assert!(krawtchouk_eval(6, &r(3), &q, 5).is_err());
    }

    #[test]
    fn krawtchouk_form_of_v() {
        for d in 3..=10 {
            assert!(krawtchouk_identity_check(d).unwrap(), "D={d}");
        }
    }

    #[test]
    fn last_but_one_polynomial() {
        assert_eq!(v_poly(4, 3).unwrap().eval(&r(2)), r(-2));
        assert_eq!(v_poly(5, 4).unwrap().eval(&r(5)), r(5));
        assert_eq!(v_poly(5, 4).unwrap().eval(&r(5)), r(5) * krawtchouk_eval(4, &r(0), &r(2), 5).unwrap());
        assert_eq!(v_poly(7, 6).unwrap().eval(&r(-1)), r(-1));
        for d in 3..=12 {
            assert!(v_eval_identity_check(d));
        }
    }

    #[test]
    fn dense_distance_polynomials() {
        let c = GraphContext::new(3, Family::Hypercube).unwrap();
        let a = adjacency(&c);
        let am = distance_matrices(&c);
        let expected =
            a.try_mul(&a).unwrap().try_sub(&QMatrix::identity(8).scale(&r(3))).unwrap().scale(&Rational::new(1, 2));
        assert_eq!(am[2], expected);
        let c4 = GraphContext::new(4, Family::Hypercube).unwrap();
        let a4 = adjacency(&c4);
        let am4 = distance_matrices(&c4);
        for (i, v) in v_polys(4).iter().enumerate() {
            assert_eq!(v.eval_matrix(&a4).unwrap(), am4[i]);
        }
        assert_eq!(v_polys(4)[0].eval_matrix(&a4).unwrap(), QMatrix::identity(16));
    }

    #[test]
    fn distance_identities_hold() {
        for d in 3..=10 {
            let c = GraphContext::new(d, Family::Hypercube).unwrap();
            assert!(distance_matrix_identity_check(&c).unwrap(), "D={d}");
        }
        let halved = GraphContext::new(4, Family::HalvedCube).unwrap();
        assert!(distance_matrix_identity_check(&halved).is_err());
    }
}
