use super::{QMatrix, Rational};

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: QMatrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

fn nonzero_positions(row: &[Rational], from: usize) -> Vec<usize> {
    (from..row.len()).filter(|&j| !row[j].is_zero()).collect()
}

/// `target -= factor * source`, touching only the listed columns of `source`.
fn eliminate(target: &mut [Rational], source: &[Rational], support: &[usize], factor: &Rational) {
    let neg = -factor;
    for &j in support {
        target[j].add_mul(&neg, &source[j]);
    }
}

/// Picks the pivot row for `col` among `rows[start..]`: the sparsest
/// candidate, lowest index on ties, so the choice is deterministic.
fn choose_pivot(rows: &[Vec<Rational>], start: usize, col: usize) -> Option<usize> {
    (start..rows.len())
        .filter(|&r| !rows[r][col].is_zero())
        .min_by_key(|&r| (rows[r][col..].iter().filter(|x| !x.is_zero()).count(), r))
}

/// Gauss-Jordan elimination over the rationals.
pub fn rref(m: &QMatrix) -> Rref {
    let (nrows, ncols) = (m.rows(), m.cols());
    let mut rows = m.row_vecs();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = choose_pivot(&rows, r, col) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        let support = nonzero_positions(&rows[r], col);
        for &j in &support {
            let v = &rows[r][j] * &inv;
            rows[r][j] = v;
        }
        let (pivot_row, others) = {
            let pivot_row = std::mem::take(&mut rows[r]);
            (pivot_row, &mut rows)
        };
        for (i, row) in others.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            eliminate(row, &pivot_row, &support, &factor);
        }
        rows[r] = pivot_row;
        pivots.push(col);
        r += 1;
    }
    let matrix = QMatrix::from_row_vecs(rows, ncols).expect("rows keep their length");
    Rref { matrix, rank: r, pivots }
}

/// Rank by forward elimination only.
pub fn rank(m: &QMatrix) -> usize {
    rank_of_rows(m.row_vecs())
}

/// Rank of a list of equal-length vectors.
pub fn rank_of_rows(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = choose_pivot(&rows, r, col) else { continue };
        rows.swap(r, p);
        let pivot_row = std::mem::take(&mut rows[r]);
        let inv = pivot_row[col].recip();
        let support = nonzero_positions(&pivot_row, col);
        for row in rows[r + 1..].iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            eliminate(row, &pivot_row, &support, &factor);
        }
        r += 1;
    }
    r
}

/// Basis of the right null space `{v : M v = 0}`, one vector per free column,
/// in increasing free-column order.
pub fn kernel_basis(m: &QMatrix) -> Vec<Vec<Rational>> {
    let Rref { matrix, pivots, .. } = rref(m);
    let ncols = m.cols();
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::ZERO; ncols];
            v[f] = Rational::ONE;
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&matrix[(r, f)];
            }
            v
        })
        .collect()
}

/// Solves `M x = b`, returning one solution (free variables set to zero) or
/// `None` when the system is inconsistent.
pub fn solve(m: &QMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(m.rows(), b.len(), "right-hand side length");
    let ncols = m.cols();
    let augmented =
        QMatrix::from_fn(m.rows(), ncols + 1, |i, j| if j < ncols { m[(i, j)].clone() } else { b[i].clone() });
    let Rref { matrix, pivots, .. } = rref(&augmented);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::ZERO; ncols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = matrix[(r, ncols)].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(rows: &[Vec<i64>]) -> QMatrix {
        QMatrix::from_i64_rows(rows)
    }

    #[test]
    fn identity_is_its_own_rref() {
        let id = QMatrix::identity(3);
        let r = rref(&id);
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let z = QMatrix::zeros(2, 3);
        let r = rref(&z);
        assert_eq!(r.rank, 0);
        assert!(r.matrix.is_zero());
        assert_eq!(kernel_basis(&z).len(), 3);
    }

    #[test]
    fn dependent_rows() {
        let r = rref(&q(&[vec![1, 2], vec![2, 4]]));
        assert_eq!(r.matrix, q(&[vec![1, 2], vec![0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&QMatrix::identity(4)).is_empty());
        let k = kernel_basis(&q(&[vec![1, 1]]));
        assert_eq!(k, vec![vec![Rational::from(-1i64), Rational::ONE]]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = q(&[vec![1, 1], vec![2, 2]]);
        assert!(solve(&m, &[Rational::ONE, Rational::ONE]).is_none());
        let x = solve(&m, &[Rational::ONE, Rational::from(2i64)]).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), vec![Rational::ONE, Rational::from(2i64)]);
    }

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |v| QMatrix::from_fn(r, c, |i, j| Rational::from(v[i * c + j])))
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let once = rref(&m);
            let twice = rref(&once.matrix);
            prop_assert_eq!(&once.matrix, &twice.matrix);
            prop_assert_eq!(once.rank, rank(&m));
        }

        #[test]
        fn kernel_is_exact_and_rank_nullity_holds(m in small_matrix()) {
            let ker = kernel_basis(&m);
            prop_assert_eq!(ker.len() + rank(&m), m.cols());
            for v in &ker {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Rational::is_zero));
            }
            if !ker.is_empty() {
                let stacked = QMatrix::from_row_vecs(ker.clone(), m.cols()).unwrap();
                prop_assert_eq!(rank(&stacked), ker.len());
            }
        }
    }
}
