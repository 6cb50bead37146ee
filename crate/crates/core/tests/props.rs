//! Property-based invariants over randomly drawn parameters.

use dwf_core::states::{QubitBloch, QutritBloch};
use dwf_core::*;
use proptest::prelude::*;

proptest! {
    #[test]
    fn qubit_dwf_normalized_and_roundtrips(
        a1 in -0.57f64..0.57,
        a2 in -0.57f64..0.57,
        a3 in -0.57f64..0.57,
    ) {
        let b = QubitBloch { a1, a2, a3 };
        prop_assume!(b.norm() <= 1.0);
        let rho = qubit_from_bloch(&b).unwrap();
        let ops = phase_point_operators(&net::default_net(2).unwrap());
        let table = dwf(&rho, &ops).unwrap();
        prop_assert!((table.sum() - 1.0).abs() < 1e-12);
        let back = reconstruct(&table, &ops).unwrap();
        prop_assert!(dwf_core::linalg::max_abs_diff(&rho, &back) < 1e-10);
        // purity identity
        prop_assert!((states::purity(&rho) - (1.0 + b.norm().powi(2)) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn qutrit_closed_form_always_normalized(ns in proptest::array::uniform8(-1.0f64..1.0)) {
        // normalization is an identity of the printed coefficients, valid
        // even for unphysical parameter vectors
        let table = closed_form_qutrit_dwf(&QutritBloch { n: ns });
        prop_assert!((table.sum() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mana_identity_holds_for_any_normalized_table(
        raw in proptest::collection::vec(-1.0f64..1.0, 9)
    ) {
        let total: f64 = raw.iter().sum();
        prop_assume!(total.abs() > 0.1);
        let values: Vec<f64> = raw.iter().map(|x| x / total).collect();
        let table = wigner::DwfTable { dim: 3, values };
        let sn = sum_negativity(&table);
        prop_assert!((mana(&table) - (2.0 * sn + 1.0).ln()).abs() < 1e-12);
    }

    #[test]
    fn rtn_kernel_bounded_and_initial(gamma in 0.001f64..5.0, b in 0.001f64..5.0, t in 0.0f64..100.0) {
        let p = RtnParams::new(gamma, b).unwrap();
        let lam = rtn_kernel(t, &p).unwrap();
        prop_assert!(lam.abs() <= 1.0);
        prop_assert!((rtn_kernel(0.0, &p).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ad_decay_in_unit_interval(gamma in 0.001f64..60.0, g in 0.001f64..5.0, t in 0.0f64..100.0) {
        let p = AdParams::new(gamma, g).unwrap();
        let lam = ad_decay(t, &p).unwrap();
        prop_assert!((0.0..=1.0).contains(&lam));
        prop_assert!(ad_decay(0.0, &p).unwrap().abs() < 1e-15);
    }
}
