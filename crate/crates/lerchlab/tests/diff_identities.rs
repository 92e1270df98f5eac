use lerchlab::diff_ops::*;
use lerchlab::lerch::{lerch_zeta, LerchParams, StrategyConfig};
use lerchlab::special_functions::expi2pi;
use lerchlab::twisted::{BumpSum, OperatorSpec, TwistedFn};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use OperatorSpec::*;

const PAIRS: [(OperatorSpec, OperatorSpec); 7] = [
    (DPlus, DMinus),
    (DPlus, RPow(1)),
    (DMinus, RPow(1)),
    (DL, RPow(1)),
    (DL, RPow(2)),
    (DeltaL, RPow(1)),
    (DeltaL, J),
];

const POINTS: [(f64, f64); 3] = [(0.4, 0.45), (0.55, 0.6), (0.3, 0.7)];

fn bump(seed: u64) -> TwistedFn {
    BumpSum::random(&mut ChaCha8Rng::seed_from_u64(seed)).into_twisted(format!("bump{seed}"))
}

fn zeta_fn(s: Complex64) -> TwistedFn {
    TwistedFn::new(format!("zeta({s})"), 1, move |a, c| {
        Ok(lerch_zeta(&LerchParams::new(s, a, c), &StrategyConfig::default())?.value)
    })
}

#[test]
fn commutation_relations_at_small_step() {
    for seed in 0..5 {
        let f = bump(seed);
        for (a, b) in PAIRS {
            let r = commutator_residual(a, b, &f, &POINTS, StencilConfig::default()).unwrap();
            assert!(r.passed && r.residual < 1e-5, "{} seed {seed}: {:e}", r.identity, r.residual);
        }
    }
}

#[test]
fn fourth_order_convergence() {
    let f = bump(7);
    for (a, b) in PAIRS {
        let res: Vec<f64> = [0.04, 0.02, 0.01]
            .iter()
            .map(|&h| commutator_residual(a, b, &f, &POINTS, StencilConfig::new(h, StencilOrder::Fourth)).unwrap().residual)
            .collect();
        for w in res.windows(2) {
            let ratio = w[0] / w[1];
            assert!((12.0..20.0).contains(&ratio), "{a} {b}: ratio {ratio}");
        }
    }
}

#[test]
fn second_order_convergence() {
    let f = bump(8);
    let res: Vec<f64> = [0.02, 0.01]
        .iter()
        .map(|&h| commutator_residual(DPlus, DMinus, &f, &POINTS, StencilConfig::new(h, StencilOrder::Second)).unwrap().residual)
        .collect();
    let ratio = res[0] / res[1];
    assert!((3.0..5.0).contains(&ratio), "ratio {ratio}");
}

#[test]
fn raising_and_lowering_on_zeta() {
    let cfg = StencilConfig::default();
    for s in [2.5, 1.7, 0.5] {
        let s = Complex64::new(s, 0.0);
        let (z, up, down) = (zeta_fn(s), zeta_fn(s + 1.0), zeta_fn(s - 1.0));
        for &(a, c) in &POINTS {
            let dp = apply_d(DiffKind::DPlus, &z, a, c, &cfg).unwrap();
            let want = -s * up.eval(a, c).unwrap();
            assert!((dp - want).norm() < 1e-6 * (1.0 + want.norm()), "D+ s={s}");
            let dm = apply_d(DiffKind::DMinus, &z, a, c, &cfg).unwrap();
            let want = down.eval(a, c).unwrap();
            assert!((dm - want).norm() < 1e-6 * (1.0 + want.norm()), "D- s={s}");
        }
    }
}

#[test]
fn raising_lowering_and_eigenvalues_on_l() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let samples: Vec<(f64, f64)> = (0..20)
        .map(|_| (rand::Rng::gen_range(&mut rng, 0.05..0.95), rand::Rng::gen_range(&mut rng, 0.05..0.95)))
        .collect();
    for s in [2.5, 1.7, 0.5] {
        let s = Complex64::new(s, 0.0);
        let r = raising_lowering_scan(s, &samples, StencilConfig::default()).unwrap();
        assert!(r.residual < 1e-6, "{r:?}");
        let e = eigenvalue_scan(s, &samples, StencilConfig::default()).unwrap();
        assert!(e.residual < 1e-5, "{e:?}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn delta_l_forms_agree(seed in 0u64..500, a in 0.2f64..0.8, c in 0.2f64..0.8) {
        let f = bump(seed);
        let cfg = StencilConfig::default();
        let sym = symmetrized_delta_l(&f, a, c, &cfg).unwrap();
        let direct = apply_d(DiffKind::DeltaL, &f, a, c, &cfg).unwrap();
        prop_assert!((sym - direct).norm() < 1e-6 * (1.0 + direct.norm()));
    }

    #[test]
    fn d_l_preserves_twisted_periodicity(seed in 0u64..500, a in 0.1f64..0.9, c in 0.1f64..0.9) {
        let f = bump(seed);
        let g = d_fn(DiffKind::DL, &f, StencilConfig::default());
        let base = g.eval_unreduced(a, c).unwrap();
        let up = g.eval_unreduced(a, c + 1.0).unwrap();
        prop_assert!((up - expi2pi(-a) * base).norm() < 1e-6 * (1.0 + base.norm()));
    }
}
