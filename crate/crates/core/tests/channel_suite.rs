//! Kernel branch values (root-finding oracles), CPTP behaviour, unitality
//! and two-qubit lifts.

use dwf_core::linalg::{cr, identity, max_abs_diff};
use dwf_core::verify::random_density;
use dwf_core::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let mut flo = f(lo);
    assert!(flo * f(hi) < 0.0, "root not bracketed");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if flo * fm <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn rtn_first_zero_matches_analytic_root() {
    let p = RtnParams::new(0.001, 0.05).unwrap();
    let root = bisect(10.0, 20.0, |t| rtn_kernel(t, &p).unwrap());
    // analytic: (π − arctan ζ)/(ζγ)
    let zeta = ((2.0 * p.b / p.gamma).powi(2) - 1.0).sqrt();
    let analytic = (std::f64::consts::PI - zeta.atan()) / (zeta * p.gamma);
    assert!((root - analytic).abs() < 1e-9);
    assert!((root - 15.80875539).abs() < 1e-6);
    assert!((root - 15.81).abs() < 0.05);
}

#[test]
fn ad_first_full_damping_matches_analytic_root() {
    let p = AdParams::new(50.0, 0.01).unwrap();
    // λ = 1 exactly where the bracket (g/l)sin(lt/2) + cos(lt/2) vanishes
    let l = (2.0 * p.gamma * p.g - p.g * p.g).sqrt();
    assert!((l - 0.99995).abs() < 1e-5);
    let root = bisect(2.0, 4.0, |t| (p.g / l) * (l * t / 2.0).sin() + (l * t / 2.0).cos());
    let analytic = 2.0 * (std::f64::consts::PI - (l / p.g).atan()) / l;
    assert!((root - analytic).abs() < 1e-9);
    assert!((root - 3.16175108).abs() < 1e-6);
    assert!((root - 3.16).abs() < 0.02);
    assert!((ad_decay(root, &p).unwrap() - 1.0).abs() < 1e-10);
}

#[test]
fn markovian_rtn_kernel_positive_and_nonincreasing() {
    let p = RtnParams::new(1.0, 0.07).unwrap();
    assert_eq!(classify_rtn(&p), Regime::Markovian);
    let mut prev = f64::INFINITY;
    for i in 0..=2000 {
        let t = 50.0 * i as f64 / 2000.0;
        let lam = rtn_kernel(t, &p).unwrap();
        assert!(lam > 0.0, "t={t}");
        assert!(lam <= prev + 1e-15, "t={t}");
        prev = lam;
    }
}

#[test]
fn nonmarkovian_rtn_kernel_changes_sign_repeatedly() {
    let p = RtnParams::new(0.001, 0.05).unwrap();
    assert_eq!(classify_rtn(&p), Regime::NonMarkovian);
    let mut signs = 0;
    let mut prev = rtn_kernel(0.0, &p).unwrap();
    for i in 1..=2000 {
        let t = 200.0 * i as f64 / 2000.0;
        let lam = rtn_kernel(t, &p).unwrap();
        if lam.signum() != prev.signum() && lam != 0.0 {
            signs += 1;
        }
        prev = lam;
    }
    assert!(signs >= 2, "only {signs} sign changes on [0, 200]");
}

#[test]
fn markovian_ad_decay_monotone_to_one() {
    let p = AdParams::new(0.01, 1.0).unwrap();
    assert_eq!(classify_ad(&p), Regime::Markovian);
    let mut prev = -1.0;
    for i in 0..=2000 {
        let t = 800.0 * i as f64 / 2000.0;
        let lam = ad_decay(t, &p).unwrap();
        assert!((0.0..=1.0).contains(&lam));
        assert!(lam >= prev - 1e-15);
        prev = lam;
    }
    assert!(prev > 0.999);
}

#[test]
fn kernels_bounded_on_wide_parameter_scan() {
    for (gamma, b) in [(0.001, 0.05), (1.0, 0.07), (0.5, 0.500001), (2.0, 10.0)] {
        let p = RtnParams::new(gamma, b).unwrap();
        for i in 0..500 {
            let lam = rtn_kernel(i as f64 * 0.37, &p).unwrap();
            assert!(lam.abs() <= 1.0);
        }
    }
    for (gamma, g) in [(50.0, 0.01), (0.01, 1.0), (1.0, 0.005), (0.5, 1.0000001), (50.0, 10.0)] {
        let p = AdParams::new(gamma, g).unwrap();
        for i in 0..500 {
            let lam = ad_decay(i as f64 * 0.11, &p).unwrap();
            assert!((0.0..=1.0).contains(&lam));
        }
    }
}

#[test]
fn cptp_on_100_random_states_all_families_and_lifts() {
    let rtn = RtnParams::new(0.001, 0.05).unwrap();
    let ad = AdParams::new(50.0, 0.01).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    for _ in 0..100 {
        for d in [2usize, 3] {
            let rho = random_density(&mut rng, d);
            for t in [0.0, 1.3, 8.0, 120.0] {
                for ks in [kraus_rtn(d, t, &rtn).unwrap(), kraus_ad(d, t, &ad).unwrap()] {
                    assert!(ks.completeness_deviation() < 1e-10);
                    let out = apply_channel(&rho, &ks).unwrap();
                    assert!(dwf_core::linalg::hermiticity_deviation(&out) < 1e-12);
                    assert!((dwf_core::linalg::trace(&out).re - 1.0).abs() < 1e-10);
                    let eig = eigh(&out).unwrap();
                    assert!(eig.values[0] > -1e-10);
                }
            }
        }
        let rho4 = random_density(&mut rng, 4);
        for t in [0.0, 2.2, 60.0] {
            for base in [kraus_rtn(2, t, &rtn).unwrap(), kraus_ad(2, t, &ad).unwrap()] {
                let ks = lift_two_qubit(&base).unwrap();
                assert!(ks.completeness_deviation() < 1e-10);
                let out = apply_channel(&rho4, &ks).unwrap();
                assert!((dwf_core::linalg::trace(&out).re - 1.0).abs() < 1e-10);
                let eig = eigh(&out).unwrap();
                assert!(eig.values[0] > -1e-10);
            }
        }
    }
}

#[test]
fn lifted_channel_factorizes_on_product_states() {
    let rtn = RtnParams::new(0.001, 0.05).unwrap();
    let a = qubit_from_bloch(&QubitBloch { a1: 0.3, a2: -0.2, a3: 0.4 }).unwrap();
    let b = qubit_from_bloch(&QubitBloch { a1: -0.1, a2: 0.5, a3: 0.2 }).unwrap();
    let joint = dwf_core::linalg::kron(&a, &b);
    for t in [0.0, 3.0, 47.0] {
        let base = kraus_rtn(2, t, &rtn).unwrap();
        let lifted = lift_two_qubit(&base).unwrap();
        let lhs = apply_channel(&joint, &lifted).unwrap();
        let rhs = dwf_core::linalg::kron(
            &apply_channel(&a, &base).unwrap(),
            &apply_channel(&b, &base).unwrap(),
        );
        assert!(max_abs_diff(&lhs, &rhs) < 1e-12);
    }
}

#[test]
fn ad_is_not_unital() {
    let p = AdParams::new(0.01, 1.0).unwrap();
    let mixed = identity(2).mapv(|z| z * cr(0.5));
    let mut prev = 0.0;
    for t in [0.0, 1.0, 5.0, 20.0] {
        let out = apply_channel(&mixed, &kraus_ad(2, t, &p).unwrap()).unwrap();
        let eig = eigh(&(&out - &mixed)).unwrap();
        let dist: f64 = eig.values.iter().map(|v| v.abs()).sum::<f64>() / 2.0;
        assert!(dist >= prev - 1e-15, "trace distance should grow");
        prev = dist;
    }
    assert!(prev > 0.05);
}

#[test]
fn boundary_classification_and_limits() {
    assert_eq!(classify_rtn(&RtnParams::new(1.0, 0.5).unwrap()), Regime::Boundary);
    assert_eq!(classify_ad(&AdParams::new(0.5, 1.0).unwrap()), Regime::Boundary);
    // closed-form limits at the boundary
    let p = RtnParams::new(1.0, 0.5).unwrap();
    for t in [0.0, 0.7, 3.0] {
        assert!((rtn_kernel(t, &p).unwrap() - (-t).exp() * (1.0 + t)).abs() < 1e-14);
    }
    let p = AdParams::new(0.5, 1.0).unwrap();
    for t in [0.0f64, 0.7, 3.0] {
        let expect = 1.0 - (-t).exp() * (1.0 + t / 2.0).powi(2);
        assert!((ad_decay(t, &p).unwrap() - expect).abs() < 1e-14);
    }
}
