use lerchlab::diff_ops::{apply_d, DiffKind, StencilConfig};
use lerchlab::lerch::*;
use lerchlab::special_functions::*;
use lerchlab::twisted::TwistedFn;
use num_complex::Complex64;
use proptest::prelude::*;

fn cfg() -> StrategyConfig {
    StrategyConfig::default()
}

fn off_integers(z: Complex64) -> bool {
    (z.re - z.re.round()).abs() > 1e-3 || z.im.abs() > 1e-3
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tate_gamma_reflection(re in -3.0f64..4.0, im in -10.0f64..10.0) {
        let s = Complex64::new(re, im);
        prop_assume!(off_integers(s));
        for p in Parity::BOTH {
            let v = tate_gamma(s, p).value * tate_gamma(1.0 - s, p).value;
            prop_assert!((v - 1.0).norm() < 1e-10, "{s} {p:?}: {v}");
        }
    }

    #[test]
    fn gamma_recurrence(re in -3.0f64..4.0, im in -10.0f64..10.0) {
        let z = Complex64::new(re, im);
        prop_assume!(off_integers(z));
        let next = complex_gamma(z + 1.0).value;
        prop_assert!((next - z * complex_gamma(z).value).norm() / next.norm() < 1e-11);
    }

    #[test]
    fn gamma_r_minus_is_shifted_plus(re in -3.0f64..4.0, im in -10.0f64..10.0) {
        let s = Complex64::new(re, im);
        let minus = gamma_r(s, Parity::Minus);
        let plus = gamma_r(s + 1.0, Parity::Plus);
        prop_assert_eq!(minus.is_pole, plus.is_pole);
        if !minus.is_pole {
            prop_assert_eq!(minus.value, plus.value);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn strip_route_agrees_with_direct_sum(re in 1.01f64..1.5, im in -10.0f64..10.0, a in 0.05f64..0.95, c in 0.01f64..1.0) {
        let p = LerchParams::new(Complex64::new(re, im), a, c);
        let strip = eval_strip(&p, &cfg()).unwrap().value;
        let direct = zeta_direct(&p, &cfg()).unwrap().value;
        prop_assert!((strip - direct).norm() < 1e-9, "{strip} vs {direct}");
    }

    #[test]
    fn functional_equation_on_critical_line(t in -20.0f64..20.0, a in 0.01f64..0.99, c in 0.01f64..0.99) {
        let p = LerchParams::new(Complex64::new(0.5, t), a, c);
        for parity in Parity::BOTH {
            let r = functional_equation_residual(&p, parity, &cfg()).unwrap();
            prop_assert!(r < 1e-7, "{parity:?}: {r:e}");
        }
    }

    #[test]
    fn lerch_star_is_twisted_periodic(re in -2.0f64..3.0, im in -10.0f64..10.0, a in 0.05f64..0.95, c in 0.05f64..0.95) {
        let s = Complex64::new(re, im);
        let at = |a: f64, c: f64| lerch_star(&LerchParams::new(s, a, c), &cfg()).unwrap().value;
        let base = at(a, c);
        let scale = 1.0 + base.norm();
        prop_assert!((at(a + 1.0, c) - base).norm() < 1e-10 * scale);
        prop_assert!((at(a, c + 1.0) - expi2pi(-a) * base).norm() < 1e-10 * scale);
    }

    #[test]
    fn c_derivative_lowers_s(re in 1.6f64..3.0, im in -5.0f64..5.0, a in 0.1f64..0.9, c in 0.2f64..0.8) {
        let s = Complex64::new(re, im);
        let f = TwistedFn::new("zeta", 1, move |a, c| Ok(lerch_zeta(&LerchParams::new(s, a, c), &cfg())?.value));
        let fd = apply_d(DiffKind::DPlus, &f, a, c, &StencilConfig::default()).unwrap();
        let exact = zeta_c_derivative(&LerchParams::new(s, a, c), &cfg()).unwrap();
        prop_assert!((fd - exact).norm() / (1.0 + exact.norm()) < 1e-8, "{fd} vs {exact}");
    }
}

#[test]
fn error_estimates_are_honest_on_basel() {
    let r = lerch_zeta(&LerchParams::real(2.0, 0.0, 1.0), &cfg()).unwrap();
    assert!((r.value.re - std::f64::consts::PI.powi(2) / 6.0).abs() <= r.error_estimate + 1e-15);
}
