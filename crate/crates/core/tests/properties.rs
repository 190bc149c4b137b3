mod common;

use common::random_type;
use dimcalc::expr::{evaluate, parse, render, Env, Format, Value};
use dimcalc::{bockstein_basis, dim_with_coefficients, smith_normal_form, AbelianGroupExpr, BocksteinGroup, SigmaSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

fn dimension_type() -> impl Strategy<Value = dimcalc::DimensionType> {
    (any::<u64>(), 1..40u64).prop_map(|(seed, max)| random_type(&mut ChaCha8Rng::seed_from_u64(seed), max, false))
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(PRIMES.to_vec())
}

fn presentation() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..4usize, 0..4usize).prop_flat_map(|(rows, cols)| prop::collection::vec(prop::collection::vec(-9..=9i64, cols), rows))
}

fn finitely_generated() -> impl Strategy<Value = AbelianGroupExpr> {
    let leaf = prop_oneof![
        presentation().prop_map(AbelianGroupExpr::presentation),
        (0..3usize).prop_map(AbelianGroupExpr::FreePart),
        (2..60u64).prop_map(AbelianGroupExpr::Cyclic),
    ];
    leaf.prop_recursive(2, 8, 3, |inner| prop::collection::vec(inner, 1..4).prop_map(AbelianGroupExpr::DirectSum))
}

fn group() -> impl Strategy<Value = AbelianGroupExpr> {
    let leaf = prop_oneof![
        presentation().prop_map(AbelianGroupExpr::presentation),
        (0..3usize).prop_map(AbelianGroupExpr::FreePart),
        (2..60u64).prop_map(AbelianGroupExpr::Cyclic),
        Just(AbelianGroupExpr::Rationals),
        prime().prop_map(AbelianGroupExpr::PAdicCircle),
        prime().prop_map(AbelianGroupExpr::PLocalIntegers),
    ];
    leaf.prop_recursive(2, 8, 3, |inner| prop::collection::vec(inner, 1..4).prop_map(AbelianGroupExpr::DirectSum))
}

/// Applies one unimodular row or column operation to a relation matrix.
fn elementary(m: &mut [Vec<i64>], op: (bool, usize, usize, i64)) {
    let (on_rows, a, b, k) = op;
    if on_rows {
        let (a, b) = (a % m.len(), b % m.len());
        if a == b {
            m.swap(0, a);
        } else {
            let src = m[b].clone();
            m[a].iter_mut().zip(src).for_each(|(x, y)| *x += k * y);
        }
    } else if let Some(cols) = m.first().map(Vec::len).filter(|&c| c > 0) {
        let (a, b) = (a % cols, b % cols);
        for row in m.iter_mut() {
            if a == b {
                row[a] = -row[a];
            } else {
                row[a] += k * row[b];
            }
        }
    }
}

proptest! {
    #[test]
    fn pretty_rendering_parses_back(d in dimension_type()) {
        let text = render(&Value::Type(d.clone()), Format::Pretty);
        let back = evaluate(&parse(&text).unwrap(), &Env::new()).unwrap();
        prop_assert_eq!(back, Value::Type(d));
    }

    #[test]
    fn integer_coefficients_give_the_dimension(d in dimension_type()) {
        prop_assert_eq!(dim_with_coefficients(&d, &AbelianGroupExpr::FreePart(1)).unwrap(), d.dim());
    }

    #[test]
    fn coefficient_dimension_is_at_most_dimension(d in dimension_type(), g in group()) {
        prop_assert!(dim_with_coefficients(&d, &g).unwrap() <= d.dim());
    }

    #[test]
    fn direct_sum_order_is_irrelevant(parts in prop::collection::vec(group(), 1..5), rot in 0..5usize) {
        let mut rotated = parts.clone();
        rotated.rotate_left(rot % parts.len());
        rotated.reverse();
        prop_assert_eq!(
            bockstein_basis(&AbelianGroupExpr::DirectSum(parts)).unwrap(),
            bockstein_basis(&AbelianGroupExpr::DirectSum(rotated)).unwrap()
        );
    }

    #[test]
    fn elementary_operations_preserve_the_group(
        m in presentation(),
        ops in prop::collection::vec((any::<bool>(), 0..4usize, 0..4usize, -3..=3i64), 0..6),
    ) {
        let mut changed = m.clone();
        for op in ops {
            elementary(&mut changed, op);
        }
        let (g, h) = (AbelianGroupExpr::presentation(m.clone()), AbelianGroupExpr::presentation(changed.clone()));
        prop_assert_eq!(smith_normal_form(&m, m.len()).unwrap(), smith_normal_form(&changed, changed.len()).unwrap());
        prop_assert_eq!(bockstein_basis(&g).unwrap(), bockstein_basis(&h).unwrap());
    }

    #[test]
    fn finitely_generated_groups_avoid_rationals_and_circles(g in finitely_generated(), p in prime()) {
        let s = bockstein_basis(&g).unwrap();
        prop_assert!(!s.contains(BocksteinGroup::Q));
        prop_assert!(!s.contains(BocksteinGroup::ZpInfinity(p)));
    }

    #[test]
    fn basis_groups_are_their_own_basis(p in prime()) {
        let cases = [
            (AbelianGroupExpr::Cyclic(p), BocksteinGroup::Zp(p)),
            (AbelianGroupExpr::PAdicCircle(p), BocksteinGroup::ZpInfinity(p)),
            (AbelianGroupExpr::PLocalIntegers(p), BocksteinGroup::ZpLocal(p)),
            (AbelianGroupExpr::Rationals, BocksteinGroup::Q),
        ];
        for (g, b) in cases {
            prop_assert_eq!(bockstein_basis(&g).unwrap(), SigmaSet::from_groups([b]).unwrap());
        }
    }
}
