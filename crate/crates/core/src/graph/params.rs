use serde::{Deserialize, Serialize};

use super::{apply_adjacency, distance_kernels};
use crate::binary::{BitVector, Family, GraphContext};
use crate::ensure;
use crate::error::Result;
use crate::linalg::Rational;

/// Intersection numbers `a_i`, `b_i`, `c_i` for `i = 0..=diameter`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionArray {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.a.len() - 1
    }

    /// Valency `b_0`.
    pub fn valency(&self) -> i64 {
        self.b[0]
    }

    /// `a_i + b_i + c_i = b_0`, `c_0 = 0`, `b_diameter = 0`.
    pub fn is_consistent(&self) -> bool {
        let k = self.valency();
        let d = self.diameter();
        self.c[0] == 0 && self.b[d] == 0 && (0..=d).all(|i| self.a[i] + self.b[i] + self.c[i] == k)
    }
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Closed-form intersection numbers.
pub fn intersection_numbers_formula(d: usize, family: Family) -> IntersectionArray {
    let dd = d as i64;
    let range = 0..=family.diameter(d) as i64;
    match family {
        Family::Hypercube => IntersectionArray {
            a: range.clone().map(|_| 0).collect(),
            b: range.clone().map(|i| dd - i).collect(),
            c: range.collect(),
        },
        Family::HalvedCube => IntersectionArray {
            a: range.clone().map(|i| 2 * i * (dd - 2 * i)).collect(),
            b: range.clone().map(|i| choose2(dd - 2 * i)).collect(),
            c: range.map(|i| choose2(2 * i)).collect(),
        },
    }
}

/// Largest `D` at which constancy is checked over every vertex pair.
pub const EXHAUSTIVE_COUNT_MAX_D: usize = 8;

/// Counts `(|G_i(x) ∩ G(y)|, |G_{i+1}(x) ∩ G(y)|, |G_{i-1}(x) ∩ G(y)|)`.
fn count_at(ctx: &GraphContext, x: BitVector, y: BitVector) -> Result<(usize, [i64; 3])> {
    let i = ctx.distance(x, y)?;
    let mut counts = [0i64; 3];
    for z in ctx.neighbors(y) {
        let j = ctx.distance(x, z)?;
        if j == i {
            counts[0] += 1;
        } else if j == i + 1 {
            counts[1] += 1;
        } else if j + 1 == i {
            counts[2] += 1;
        }
    }
    Ok((i, counts))
}

/// Intersection numbers obtained by counting in the graph, compared with the
/// closed forms.
///
/// Up to [`EXHAUSTIVE_COUNT_MAX_D`] every ordered vertex pair is counted and
/// the counts must be constant on each distance class; above it one pair per
/// distance (the base vertex against the first vertex of each class) is
/// counted.
pub fn intersection_numbers(ctx: &GraphContext) -> Result<IntersectionArray> {
    let diam = ctx.diameter();
    let mut found: Vec<Option<[i64; 3]>> = vec![None; diam + 1];
    let exhaustive = ctx.d() <= EXHAUSTIVE_COUNT_MAX_D;
    let sources: Vec<BitVector> = if exhaustive { ctx.vertices().to_vec() } else { vec![ctx.base_vertex()] };
    for &x in &sources {
        for &y in ctx.vertices() {
            let (i, counts) = count_at(ctx, x, y)?;
            match found[i] {
                None => found[i] = Some(counts),
                Some(prev) => ensure!(
                    prev == counts,
                    "{} D={}: intersection counts at distance {i} differ ({prev:?} vs {counts:?})",
                    ctx.family(),
                    ctx.d()
                ),
            }
            if !exhaustive && found.iter().all(Option::is_some) {
                break;
            }
        }
    }
    let found: Vec<[i64; 3]> = found.into_iter().map(|f| f.expect("every distance occurs")).collect();
    let counted = IntersectionArray {
        a: found.iter().map(|f| f[0]).collect(),
        b: found.iter().map(|f| f[1]).collect(),
        c: found.iter().map(|f| f[2]).collect(),
    };
    let formula = intersection_numbers_formula(ctx.d(), ctx.family());
    ensure!(counted == formula, "{} D={}: counted {counted:?}, closed form {formula:?}", ctx.family(), ctx.d());
    ensure!(counted.is_consistent(), "inconsistent intersection array {counted:?}");
    Ok(counted)
}

/// `A_i A = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}` for every `i`,
/// compared on Cayley kernels (the product kernel is `A` applied to the
/// kernel of `A_i`).
pub fn check_distance_recurrence(ctx: &GraphContext, array: &IntersectionArray) -> Result<()> {
    let kernels = distance_kernels(ctx);
    let diam = ctx.diameter();
    for i in 0..=diam {
        let lhs = apply_adjacency(ctx, kernels[i].kernel());
        let mut rhs = vec![Rational::ZERO; ctx.vertex_count()];
        let mut add = |coef: i64, j: usize| {
            let c = Rational::from(coef);
            for (r, x) in rhs.iter_mut().zip(kernels[j].kernel()) {
                r.add_mul(&c, x);
            }
        };
        if i > 0 {
            add(array.b[i - 1], i - 1);
        }
        add(array.a[i], i);
        if i < diam {
            add(array.c[i + 1], i + 1);
        }
        ensure!(lhs == rhs, "{} D={}: three-term distance relation fails at i={i}", ctx.family(), ctx.d());
    }
    Ok(())
}

/// `A_i ∘ A_j = δ_ij A_i`.
pub fn check_distance_schur(ctx: &GraphContext) -> Result<()> {
    let kernels = distance_kernels(ctx);
    for (i, ki) in kernels.iter().enumerate() {
        for (j, kj) in kernels.iter().enumerate() {
            let prod = ki.hadamard(kj)?;
            let expected = if i == j { ki.clone() } else { ki.scale(&Rational::ZERO) };
            ensure!(prod == expected, "A_{i} ∘ A_{j} is wrong");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{adjacency, distance_matrices};
    use crate::linalg::QMatrix;

    fn ctx(d: usize, f: Family) -> GraphContext {
        GraphContext::new(d, f).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        let h6 = intersection_numbers_formula(6, Family::HalvedCube);
        assert_eq!((h6.a[1], h6.b[1], h6.c[1]), (8, 6, 1));
        assert_eq!(intersection_numbers_formula(5, Family::HalvedCube).c[2], 6);
        let q5 = intersection_numbers_formula(5, Family::Hypercube);
        assert_eq!((q5.b[2], q5.c[2]), (3, 2));
    }

    #[test]
    fn counted_numbers_match_for_small_d() {
        for d in 3..=8 {
            for f in [Family::Hypercube, Family::HalvedCube] {
                let c = ctx(d, f);
                let arr = intersection_numbers(&c).unwrap();
                check_distance_recurrence(&c, &arr).unwrap();
                check_distance_schur(&c).unwrap();
            }
        }
    }

    #[test]
    fn counting_above_the_exhaustive_cap() {
        let c = ctx(10, Family::HalvedCube);
        assert_eq!(intersection_numbers(&c).unwrap(), intersection_numbers_formula(10, Family::HalvedCube));
    }

    #[test]
    fn dense_recurrence_matches_for_small_d() {
        for f in [Family::Hypercube, Family::HalvedCube] {
            let c = ctx(5, f);
            let arr = intersection_numbers_formula(5, f);
            let a = adjacency(&c);
            let am = distance_matrices(&c);
            let n = c.vertex_count();
            for i in 0..am.len() {
                let lhs = am[i].try_mul(&a).unwrap();
                let mut rhs = QMatrix::zeros(n, n);
                if i > 0 {
                    rhs.add_scaled(&Rational::from(arr.b[i - 1]), &am[i - 1]).unwrap();
                }
                rhs.add_scaled(&Rational::from(arr.a[i]), &am[i]).unwrap();
                if i + 1 < am.len() {
                    rhs.add_scaled(&Rational::from(arr.c[i + 1]), &am[i + 1]).unwrap();
                }
                assert_eq!(lhs, rhs);
            }
        }
    }
}
