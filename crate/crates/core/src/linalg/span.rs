use super::{QMatrix, Rational};
use crate::error::{Error, Result};

/// A reduced echelon row: pivot position and sparse support with pivot entry 1.
#[derive(Clone, Debug, PartialEq, Eq)]
struct EchelonRow {
    pivot: usize,
    entries: Vec<(usize, Rational)>,
}

impl EchelonRow {
    fn coefficient_at(&self, j: usize) -> Option<&Rational> {
        self.entries.binary_search_by_key(&j, |(k, _)| *k).ok().map(|p| &self.entries[p].1)
    }

    /// `self -= factor * other`, as a sparse merge.
    fn subtract_scaled(&mut self, factor: &Rational, other: &EchelonRow) {
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, va)), Some((ib, vb))) => {
                    if ia < ib {
                        merged.push((*ia, va.clone()));
                        a.next();
                    } else if ib < ia {
                        merged.push((*ib, -(factor * vb)));
                        b.next();
                    } else {
                        let v = va - &(factor * vb);
                        if !v.is_zero() {
                            merged.push((*ia, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, va)), None) => {
                    merged.push((*ia, va.clone()));
                    a.next();
                }
                (None, Some((ib, vb))) => {
                    merged.push((*ib, -(factor * vb)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }
}

/// An exact linear span of vectors (matrices are flattened row-major).
///
/// Holds the linearly independent members that were inserted, plus a fully
/// reduced echelon basis of the same span used for membership tests.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    ambient: usize,
    members: Vec<Vec<Rational>>,
    echelon: Vec<EchelonRow>,
}

impl SpanBasis {
    pub fn new(ambient: usize) -> Self {
        SpanBasis { ambient, members: Vec::new(), echelon: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Vec<Rational>] {
        &self.members
    }

    /// Members reshaped into `n x n` matrices.
    pub fn member_matrices(&self, n: usize) -> Result<Vec<QMatrix>> {
        self.members.iter().map(|m| QMatrix::from_flat(n, n, m.clone())).collect()
    }

    /// Residue of `v` after reduction against the echelon basis; `None` if zero.
    fn reduce(&self, v: &[Rational]) -> Option<EchelonRow> {
        let mut dense = v.to_vec();
        for row in &self.echelon {
            if dense[row.pivot].is_zero() {
                continue;
            }
            let factor = -&dense[row.pivot];
            for (j, x) in &row.entries {
                dense[*j].add_mul(&factor, x);
            }
        }
        let pivot = dense.iter().position(|x| !x.is_zero())?;
        let inv = dense[pivot].recip();
        let entries = dense
            .into_iter()
            .enumerate()
            .skip(pivot)
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x * &inv))
            .collect();
        Some(EchelonRow { pivot, entries })
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} in a span of ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.reduce(v).is_none())
    }

    /// Adds `v` if it enlarges the span; returns whether it did.
    pub fn insert(&mut self, v: Vec<Rational>) -> Result<bool> {
        self.check_len(&v)?;
        let Some(new_row) = self.reduce(&v) else { return Ok(false) };
        for row in &mut self.echelon {
            if let Some(c) = row.coefficient_at(new_row.pivot).cloned() {
                row.subtract_scaled(&c, &new_row);
            }
        }
        let at = self.echelon.partition_point(|r| r.pivot < new_row.pivot);
        self.echelon.insert(at, new_row);
        self.members.push(v);
        Ok(true)
    }

    /// Canonical description of the span: the reduced echelon rows in pivot
    /// order. Two spans are equal iff their canonical forms are equal.
    pub fn canonical_form(&self) -> Vec<Vec<(usize, Rational)>> {
        self.echelon.iter().map(|r| r.entries.clone()).collect()
    }
}

/// Basis of the smallest unital algebra containing `generators`.
///
/// The span of all words in the generators is built by left-multiplying
/// every basis member by every generator, in insertion order, until no new
/// product enlarges the span. A span closed under left multiplication by the
/// generators and containing `I` is closed under all products.
pub fn span_closure(generators: &[QMatrix]) -> Result<SpanBasis> {
    let n = match generators.first() {
        Some(g) => g.rows(),
        None => return Err(Error::InvalidArgument("span_closure needs at least one generator".into())),
    };
    if generators.iter().any(|g| g.rows() != n || g.cols() != n) {
        return Err(Error::ShapeMismatch("generators must be square of equal size".into()));
    }
    let mut span = SpanBasis::new(n * n);
    let mut queue: Vec<QMatrix> = Vec::new();
    for m in std::iter::once(QMatrix::identity(n)).chain(generators.iter().cloned()) {
        if span.insert(m.as_flat().to_vec())? {
            queue.push(m);
        }
    }
    let mut next = 0;
    while next < queue.len() {
        let member = queue[next].clone();
        next += 1;
        for g in generators {
            let product = g.try_mul(&member)?;
            if span.insert(product.as_flat().to_vec())? {
                queue.push(product);
            }
        }
    }
    Ok(span)
}

/// Checks that every product of two basis members lies in the span.
pub fn is_multiplicatively_closed(span: &SpanBasis, n: usize) -> Result<bool> {
    let members = span.member_matrices(n)?;
    for a in &members {
        for b in &members {
            if !span.contains(a.try_mul(b)?.as_flat())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k4() -> QMatrix {
        QMatrix::from_fn(4, 4, |i, j| if i == j { Rational::ZERO } else { Rational::ONE })
    }

    #[test]
    fn identity_generates_dimension_one() {
        let span = span_closure(&[QMatrix::identity(3)]).unwrap();
        assert_eq!(span.dim(), 1);
    }

    #[test]
    fn complete_graph_bose_mesner_has_dimension_two() {
        let span = span_closure(&[k4()]).unwrap();
        assert_eq!(span.dim(), 2);
        assert!(is_multiplicatively_closed(&span, 4).unwrap());
    }

    #[test]
    fn rejects_mismatched_generators() {
        assert!(span_closure(&[QMatrix::identity(2), QMatrix::identity(3)]).is_err());
        assert!(span_closure(&[]).is_err());
    }

    #[test]
    fn membership_is_exact() {
        let mut span = SpanBasis::new(3);
        assert!(span.insert(vec![1i64.into(), 2i64.into(), 0i64.into()]).unwrap());
        assert!(span.insert(vec![0i64.into(), 1i64.into(), 1i64.into()]).unwrap());
        assert!(!span.insert(vec![1i64.into(), 3i64.into(), 1i64.into()]).unwrap());
        assert!(span.contains(&[2i64.into(), 3i64.into(), (-1i64).into()]).unwrap());
        assert!(!span.contains(&[0i64.into(), 0i64.into(), 1i64.into()]).unwrap());
        assert!(span.contains(&[Rational::ZERO; 2]).is_err());
    }

    fn small_square(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(-1i64..=1, n * n)
            .prop_map(move |v| QMatrix::from_fn(n, n, |i, j| Rational::from(v[i * n + j])))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn closure_is_an_algebra_and_order_invariant(a in small_square(3), b in small_square(3)) {
            let ab = span_closure(&[a.clone(), b.clone()]).unwrap();
            let ba = span_closure(&[b, a]).unwrap();
            prop_assert!(is_multiplicatively_closed(&ab, 3).unwrap());
            prop_assert_eq!(ab.canonical_form(), ba.canonical_form());
        }
    }
}
