use proptest::prelude::*;

use terwilliger::binary::{BitVector, Family, GraphContext};
use terwilliger::graph::eigenvalues_formula;
use terwilliger::krawtchouk::v_polys;
use terwilliger::linalg::{binomial, dot};
use terwilliger::terwilliger::{decompose_halved, halved_classes, hypercube_classes, ShellIndex, ShellVector};
use terwilliger::Rational;

fn q(n: i64) -> Rational {
    Rational::from(n)
}

fn c(n: usize, k: usize) -> Rational {
    Rational::from(binomial(n as i64, k as i64))
}

fn even_base(d: usize) -> impl Strategy<Value = u32> {
    (0u32..1 << d).prop_map(|x| if x.count_ones() % 2 == 1 { x ^ 1 } else { x })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn krawtchouk_reciprocity(d in 1usize..=14, i in 0usize..=14, n in 0usize..=14) {
        prop_assume!(i <= d && n <= d);
        let v = v_polys(d);
        let lhs = &c(d, n) * &v[i].eval(&q(d as i64 - 2 * n as i64));
        let rhs = &c(d, i) * &v[n].eval(&q(d as i64 - 2 * i as i64));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn krawtchouk_orthogonality(d in 1usize..=12, i in 0usize..=12, j in 0usize..=12) {
        prop_assume!(i <= d && j <= d);
        let v = v_polys(d);
        let sum: Rational = (0..=d)
            .map(|n| {
                let t = q(d as i64 - 2 * n as i64);
                &(&c(d, n) * &v[i].eval(&t)) * &v[j].eval(&t)
            })
            .sum();
        let expected = if i == j { &q(1 << d) * &c(d, i) } else { Rational::ZERO };
        prop_assert_eq!(sum, expected);
    }

    #[test]
    fn raise_and_lower_are_adjoint(
        (d, s, base, seed) in (3usize..=9).prop_flat_map(|d| (Just(d), 0..d, 0u32..1 << d, any::<u64>()))
    ) {
        let index = ShellIndex::new(d, BitVector::new(base));
        let fill = |shell: usize, salt: u64| ShellVector {
            shell,
            coords: (0..index.shell_size(shell))
                .map(|p| q(((seed ^ salt).wrapping_mul(p as u64 + 7) % 11) as i64 - 5))
                .collect(),
        };
        let u = fill(s, 1);
        let w = fill(s + 1, 2);
        let ru = index.raise(&u);
        let lw = index.lower(&w);
        prop_assert_eq!(ru.shell, s + 1);
        prop_assert_eq!(dot(&ru.coords, &w.coords), dot(&u.coords, &lw.coords));
    }

    #[test]
    fn model_spectra_lie_in_the_graph_spectrum(d in 3usize..=16) {
        let halved = eigenvalues_formula(d, Family::HalvedCube);
        for (m, mult) in halved_classes(d) {
            prop_assert!(mult.is_integer() && mult.is_positive());
            prop_assert!(m.eigenvalues_among(&halved).is_some(), "{}", m.label());
        }
        let cube = eigenvalues_formula(d, Family::Hypercube);
        for (m, _) in hypercube_classes(d) {
            prop_assert!(m.eigenvalues_among(&cube).is_some(), "{}", m.label());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn decomposition_is_independent_of_the_base(
        (d, base) in (3usize..=7).prop_flat_map(|d| (Just(d), even_base(d)))
    ) {
        let at_zero = decompose_halved(&GraphContext::new(d, Family::HalvedCube).unwrap()).unwrap();
        let ctx = GraphContext::with_base(d, Family::HalvedCube, BitVector::new(base)).unwrap();
        let moved = decompose_halved(&ctx).unwrap();
        prop_assert!(moved.passed());
        prop_assert_eq!(moved.modules_summary(), at_zero.modules_summary());
        let models: Vec<_> = moved.modules.iter().map(|m| &m.model).collect();
        let zero_models: Vec<_> = at_zero.modules.iter().map(|m| &m.model).collect();
        prop_assert_eq!(models, zero_models);
    }
}
