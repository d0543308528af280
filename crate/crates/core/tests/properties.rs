use std::sync::Arc;

use kerind::action::RingAction;
use kerind::group::FiniteGroup;
use kerind::h1::class::{add_classes, det_push, h1_classes};
use kerind::h1::{MatrixCoefficients, MatrixKind};
use kerind::lattice::smith::{smith_normal_form, IntMatrix};
use kerind::ring::FiniteCommRing;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const CAP: usize = 1_000_000;

fn trivial_units_action(k: u32, m: usize) -> Arc<RingAction> {
    let ring = FiniteCommRing::parse(&[&format!("Z/{k}")]).unwrap();
    RingAction::trivial(Arc::new(FiniteGroup::cyclic(m)), ring, false).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Z/m acting trivially on the abelian group U(Z/k): classes are the
    // homomorphisms Z/m → U, i.e. the solutions of u^m = 1
    #[test]
    fn trivial_cyclic_action_counts_homomorphisms(k in 2u32..40, m in 1usize..7) {
        let act = trivial_units_action(k, m);
        let ring = act.ring().clone();
        let classes = h1_classes(&MatrixCoefficients::new(Arc::clone(&act), 1, MatrixKind::General), CAP).unwrap();
        let roots = ring.units().into_iter().filter(|&u| ring.pow(u, m as u64) == ring.one()).count();
        prop_assert_eq!(classes.len(), roots);
        if (ring.units().len() as u64).gcd(&(m as u64)) == 1 {
            prop_assert_eq!(classes.len(), 1);
        }
    }

    #[test]
    fn determinant_of_block_sum_is_the_product(k in 2u32..12, m in 2usize..4, i in 0usize..64, j in 0usize..64) {
        let act = trivial_units_action(k, m);
        let classes = h1_classes(&MatrixCoefficients::new(Arc::clone(&act), 1, MatrixKind::General), CAP).unwrap();
        let (a, b) = (&classes[i % classes.len()].0, &classes[j % classes.len()].0);
        let sum = det_push(&add_classes(a, b).unwrap());
        let ring = act.ring();
        for g in act.group().elements() {
            let lhs = sum.representative().value(g).get(0, 0);
            let rhs = ring.mul(a.representative().value(g).get(0, 0), b.representative().value(g).get(0, 0));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn smith_invariants_divide_and_multiply_to_the_determinant(entries in proptest::collection::vec(-9i64..10, 9)) {
        let rows: Vec<Vec<i64>> = entries.chunks(3).map(|r| r.to_vec()).collect();
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        let diag = s.diagonal();
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (&w[1] % &w[0]).is_zero());
        }
        let det = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
            - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
            + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])).abs();
        let product: BigInt = diag.iter().map(|d| d.abs()).product();
        prop_assert_eq!(product, BigInt::from(det));
        prop_assert_eq!(s.rank == 3, det != 0);
    }
}
