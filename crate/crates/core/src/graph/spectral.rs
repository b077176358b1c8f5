use serde::{Deserialize, Serialize};

use super::{apply_adjacency, unit_at_zero, CayleyMatrix};
use crate::binary::{Family, GraphContext};
use crate::ensure;
use crate::error::Result;
use crate::linalg::{rank, solve, Polynomial, QMatrix, Rational};

/// A diagonal matrix, stored as its diagonal in canonical vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagonal(pub Vec<Rational>);

impl Diagonal {
    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn to_dense(&self) -> QMatrix {
        QMatrix::diagonal(&self.0)
    }

    /// Principal submatrix on the given indices.
    pub fn restrict(&self, indices: &[usize]) -> Diagonal {
        Diagonal(indices.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn mul(&self, other: &Diagonal) -> Diagonal {
        Diagonal(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    pub fn eval_poly(&self, p: &Polynomial) -> Diagonal {
        Diagonal(self.0.iter().map(|x| p.eval(x)).collect())
    }
}

/// Closed-form eigenvalues in decreasing order.
pub fn eigenvalues_formula(d: usize, family: Family) -> Vec<Rational> {
    let dd = d as i64;
    (0..=family.diameter(d) as i64)
        .map(|i| match family {
            Family::Hypercube => Rational::from(dd - 2 * i),
            Family::HalvedCube => Rational::new((dd - 2 * i).pow(2) - dd, 2),
        })
        .collect()
}

/// Eigenvalues and primitive idempotents of the adjacency matrix.
#[derive(Clone, Debug)]
pub struct SpectralData {
    /// `θ_0 > θ_1 > ...`
    pub eigenvalues: Vec<Rational>,
    /// `rank E_i = trace E_i`.
    pub multiplicities: Vec<usize>,
    pub idempotents: Vec<CayleyMatrix>,
    /// `E_i = p_i(A)` with `p_i` the Lagrange interpolant at `θ_i`.
    pub interpolants: Vec<Polynomial>,
}

impl SpectralData {
    pub fn dense_idempotents(&self, ctx: &GraphContext) -> Vec<QMatrix> {
        self.idempotents.iter().map(|e| e.to_dense(ctx)).collect()
    }
}

/// Primitive idempotents `E_i = ∏_{j≠i} (A - θ_j I) / (θ_i - θ_j)`.
///
/// Each `E_i` is a polynomial in `A`, hence a Cayley matrix, and is computed
/// as `p_i(A)` applied to the unit vector at the zero word. Verified exactly:
/// the eigenvalues are distinct, `∏ (A - θ_j I) = 0`, `∑ E_i = I`,
/// `A E_i = θ_i E_i`, `E_i E_j = δ_ij E_i`, and each trace is a positive
/// integer, with the traces summing to the vertex count.
pub fn primitive_idempotents(ctx: &GraphContext) -> Result<SpectralData> {
    let thetas = eigenvalues_formula(ctx.d(), ctx.family());
    ensure!(thetas.windows(2).all(|w| w[0] > w[1]), "eigenvalues are not strictly decreasing");
    let n = ctx.vertex_count();
    let e0 = unit_at_zero(ctx);
    let apply = |v: &[Rational]| apply_adjacency(ctx, v);

    let minimal = Polynomial::from_roots(&thetas);
    ensure!(
        minimal.apply_to_vector(apply, &e0).iter().all(Rational::is_zero),
        "{} D={}: the closed-form eigenvalues do not annihilate A",
        ctx.family(),
        ctx.d()
    );

    let interpolants: Vec<Polynomial> = thetas
        .iter()
        .enumerate()
        .map(|(i, ti)| {
            let others: Vec<&Rational> = thetas.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, t)| t).collect();
            let denom: Rational = others.iter().map(|tj| ti - *tj).product();
            Polynomial::from_roots(others.iter().copied()).scale(&denom.recip())
        })
        .collect();
    let kernels: Vec<Vec<Rational>> = interpolants.iter().map(|p| p.apply_to_vector(apply, &e0)).collect();

    let mut total = vec![Rational::ZERO; n];
    for k in &kernels {
        for (t, x) in total.iter_mut().zip(k) {
            *t += x;
        }
    }
    ensure!(total == e0, "idempotents do not sum to the identity");

    for (i, (k, theta)) in kernels.iter().zip(&thetas).enumerate() {
        let ak = apply(k);
        ensure!(ak.iter().zip(k).all(|(a, x)| *a == theta * x), "A E_{i} != θ_{i} E_{i}");
        for (j, kj) in kernels.iter().enumerate() {
            let prod = interpolants[i].apply_to_vector(apply, kj);
            let ok = if i == j { prod == *k } else { prod.iter().all(Rational::is_zero) };
            ensure!(ok, "E_{i} E_{j} != δ E_{i}");
        }
    }

    let mut multiplicities = Vec::with_capacity(kernels.len());
    for (i, k) in kernels.iter().enumerate() {
        let tr = &k[0] * &Rational::from(n);
        let m = tr.to_i64().filter(|&m| m > 0);
        ensure!(m.is_some(), "trace of E_{i} is {tr}, not a positive integer");
        multiplicities.push(m.unwrap() as usize);
    }
    ensure!(multiplicities.iter().sum::<usize>() == n, "multiplicities do not sum to |X|");

    let idempotents = kernels.into_iter().map(|k| CayleyMatrix::from_kernel(ctx, k)).collect::<Result<Vec<_>>>()?;
    Ok(SpectralData { eigenvalues: thetas, multiplicities, idempotents, interpolants })
}

/// The closed-form eigenvalues, after checking they are exactly the spectrum
/// of the adjacency matrix (with multiplicities the idempotent traces).
pub fn eigenvalues(ctx: &GraphContext) -> Result<Vec<Rational>> {
    Ok(primitive_idempotents(ctx)?.eigenvalues)
}

/// `A*` with `A*_yy = D - 2 w(x - y)` for the base vertex `x`.
pub fn dual_adjacency(ctx: &GraphContext) -> Diagonal {
    let d = ctx.d() as i64;
    Diagonal(ctx.vertices().iter().map(|&y| Rational::from(d - 2 * ctx.shell_of(y) as i64)).collect())
}

/// Dual distance matrices `(A*_i)_yy = |X| (E_i)_xy`.
pub fn dual_distance_matrices(ctx: &GraphContext, spectral: &SpectralData) -> Vec<Diagonal> {
    let n = Rational::from(ctx.vertex_count());
    let x = ctx.base_vertex().bits();
    spectral
        .idempotents
        .iter()
        .map(|e| Diagonal(ctx.vertices().iter().map(|y| &n * e.entry(x, y.bits())).collect()))
        .collect()
}

/// Dual intersection numbers `a*_i`, `b*_i`, `c*_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualIntersectionArray {
    pub a_star: Vec<Rational>,
    pub b_star: Vec<Rational>,
    pub c_star: Vec<Rational>,
}

/// Closed-form dual intersection numbers, including the parity split at the
/// last index for the halved cube.
pub fn dual_intersection_formula(d: usize, family: Family) -> DualIntersectionArray {
    let diam = family.diameter(d);
    let dd = d as i64;
    let mut out = DualIntersectionArray {
        a_star: (0..=diam).map(|_| Rational::ZERO).collect(),
        b_star: (0..=diam).map(|i| Rational::from(dd - i as i64)).collect(),
        c_star: (0..=diam).map(|i| Rational::from(i as i64)).collect(),
    };
    if family == Family::HalvedCube {
        let (a, c) = if d.is_multiple_of(2) { (0, dd) } else { ((dd + 1) / 2, (dd - 1) / 2) };
        out.a_star[diam] = Rational::from(a);
        out.b_star[diam] = Rational::ZERO;
        out.c_star[diam] = Rational::from(c);
    }
    out
}

/// Solves `|X| E_i ∘ E_1 = b*_{i-1} E_{i-1} + a*_i E_i + c*_{i+1} E_{i+1}`
/// for the dual intersection numbers and compares them with the closed forms.
///
/// Each relation is an exact linear solve against the (independent) kernels
/// of all `E_j`; coefficients outside the three-term band must vanish.
pub fn q_polynomial_check(ctx: &GraphContext, spectral: &SpectralData) -> Result<DualIntersectionArray> {
    let n = ctx.vertex_count();
    let diam = ctx.diameter();
    let columns: Vec<Vec<Rational>> = spectral.idempotents.iter().map(|e| e.kernel().to_vec()).collect();
    let basis = QMatrix::from_columns(&columns, n)?;
    ensure!(rank(&basis) == diam + 1, "idempotent kernels are not independent");
    let scale = Rational::from(n);
    let e1 = &spectral.idempotents[1];

    let zero = || vec![Rational::ZERO; diam + 1];
    let mut arr = DualIntersectionArray { a_star: zero(), b_star: zero(), c_star: zero() };
    for i in 0..=diam {
        let rhs = spectral.idempotents[i].hadamard(e1)?.scale(&scale);
        let coeffs = solve(&basis, rhs.kernel());
        ensure!(coeffs.is_some(), "E_{i} ∘ E_1 is not in the span of the idempotents");
        let coeffs = coeffs.unwrap();
        for (j, c) in coeffs.iter().enumerate() {
            if j + 1 < i || j > i + 1 {
                ensure!(c.is_zero(), "E_{i} ∘ E_1 has a coefficient on E_{j}");
            }
        }
        arr.a_star[i] = coeffs[i].clone();
        if i > 0 {
            arr.b_star[i - 1] = coeffs[i - 1].clone();
        }
        if i < diam {
            arr.c_star[i + 1] = coeffs[i + 1].clone();
        }
    }
    // The last relation pins b*_{diam - 1}; b*_diam = c*_0 = 0 by convention.
    for i in 1..=diam {
        ensure!(!(&arr.b_star[i - 1] * &arr.c_star[i]).is_zero(), "b*_{} c*_{i} vanishes", i - 1);
    }
    let formula = dual_intersection_formula(ctx.d(), ctx.family());
    ensure!(
        arr == formula,
        "{} D={}: solved dual intersection numbers {arr:?} differ from closed form {formula:?}",
        ctx.family(),
        ctx.d()
    );
    Ok(arr)
}

/// `A*_i A* = b*_{i-1} A*_{i-1} + a*_i A*_i + c*_{i+1} A*_{i+1}`.
pub fn check_dual_recurrence(duals: &[Diagonal], arr: &DualIntersectionArray) -> Result<()> {
    let diam = duals.len() - 1;
    let a1 = &duals[1];
    for i in 0..=diam {
        let lhs = duals[i].mul(a1);
        let mut rhs = vec![Rational::ZERO; lhs.0.len()];
        let mut add = |c: &Rational, j: usize| {
            for (r, x) in rhs.iter_mut().zip(&duals[j].0) {
                r.add_mul(c, x);
            }
        };
        if i > 0 {
            add(&arr.b_star[i - 1], i - 1);
        }
        add(&arr.a_star[i], i);
        if i < diam {
            add(&arr.c_star[i + 1], i + 1);
        }
        ensure!(lhs.0 == rhs, "dual three-term relation fails at i={i}");
    }
    Ok(())
}

/// `A*` from the closed form equals `|X|` times the base row of `E_1`.
pub fn check_dual_adjacency(ctx: &GraphContext, spectral: &SpectralData) -> Result<Diagonal> {
    let closed = dual_adjacency(ctx);
    let from_idempotent = &dual_distance_matrices(ctx, spectral)[1];
    ensure!(
        &closed == from_idempotent,
        "{} D={} base {}: A* differs from |X| diag(E_1 row x)",
        ctx.family(),
        ctx.d(),
        ctx.base_vertex().to_bit_string(ctx.d())
    );
    Ok(closed)
}
