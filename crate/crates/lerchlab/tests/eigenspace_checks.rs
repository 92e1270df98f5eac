use lerchlab::eigenspace::*;
use lerchlab::special_functions::Parity;
use lerchlab::twisted::{apply_r, TwistedFn};
use lerchlab::LerchError;
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn samples(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|k| {
            let t = k as f64;
            (0.05 + 0.9 * (t * 0.618034).fract(), 0.05 + 0.9 * (t * 0.41421 + 0.3).fract())
        })
        .collect()
}

#[test]
fn eigenspace_is_two_dimensional() {
    let pts = samples(20);
    for s in [c(2.0, 0.0), c(0.5, 0.0), c(0.5, 10.0), c(-1.5, 0.0), c(0.3, 2.0)] {
        let basis = build_eigenspace(s);
        let g = gram_analysis(&basis, &pts).unwrap();
        assert_eq!(g.rank, 2, "s={s}");
        assert!(g.gap > 1e6, "s={s}: gap {:e}", g.gap);
        assert!(functional_link_residual(&basis, &pts).unwrap() < 1e-8, "s={s}");
        assert!(j_residual(&basis, &pts).unwrap() < 1e-10, "s={s}");
        assert!(r_action_residual(s, &pts).unwrap() < 1e-8, "s={s}");
    }
}

#[test]
fn active_pair_follows_half_plane() {
    assert_eq!(build_eigenspace(c(2.0, 0.0)).active, ActivePair::L);
    assert_eq!(build_eigenspace(c(-1.5, 0.0)).active, ActivePair::R);
}

#[test]
fn integer_s_flags_vanishing_members() {
    let b = build_eigenspace(c(-2.0, 0.0));
    assert!(b.is_vanishing(BasisMember::LPlus));
    assert!(!b.is_vanishing(BasisMember::RPlus));
    let b = build_eigenspace(c(2.0, 0.0));
    assert!(b.is_vanishing(BasisMember::RMinus));
}

#[test]
fn j_split_is_an_eigen_split() {
    let pts = samples(20);
    let (fp, fm) = j_split(&build_eigenspace(c(0.5, 3.0))).unwrap();
    let jp = lerchlab::twisted::apply_j(&fp);
    let jm = lerchlab::twisted::apply_j(&fm);
    for &(a, cc) in &pts {
        assert!((jp.eval(a, cc).unwrap() - fp.eval(a, cc).unwrap()).norm() < 1e-10);
        assert!((jm.eval(a, cc).unwrap() + fm.eval(a, cc).unwrap()).norm() < 1e-10);
    }
}

#[test]
fn a_axis_slice_of_lerch_star() {
    let f = TwistedFn::lerch_star(c(2.0, 0.0));
    let slice = fourier_slice(&f, SliceAxis::AAxis, 0.4, 16).unwrap();
    for n in slice.n_range() {
        let want = if n >= 0 { (n as f64 + 0.4).powi(-2) } else { 0.0 };
        let got = slice.get(n).unwrap();
        assert!((got - want).norm() < 1e-10, "n={n}: {got}");
    }
    assert!(slice.decaying);
}

#[test]
fn c_axis_slice_of_rotated_lerch_star() {
    // R(zeta*(1-s)) at s = 0.7, sliced along c at a = 0.3
    let f = apply_r(&TwistedFn::lerch_star(c(0.3, 0.0)), 1);
    let slice = fourier_slice(&f, SliceAxis::CAxis, 0.3, 8).unwrap();
    for n in slice.n_range() {
        let want = if n <= 0 { (0.3 - n as f64).powf(-0.3) } else { 0.0 };
        let got = slice.get(n).unwrap();
        assert!((got - want).norm() < 1e-5, "n={n}: {got}");
    }
}

#[test]
fn coefficient_shift_identity() {
    let f = TwistedFn::lerch_star(c(1.5, 0.5));
    let base = fourier_slice(&f, SliceAxis::AAxis, 0.35, 12).unwrap();
    for l in 1..=2i64 {
        let shifted = fourier_slice(&f, SliceAxis::AAxis, 0.35 + l as f64, 12).unwrap();
        for n in -8..=8i64 {
            let d = (shifted.get(n).unwrap() - base.get(n + l).unwrap()).norm();
            assert!(d < 1e-10, "l={l} n={n}: {d:e}");
        }
    }
}

#[test]
fn characterize_recovers_constants() {
    let cases = [
        (TwistedFn::lerch_star(c(2.0, 0.0)), c(2.0, 0.0), CharPath::APath, c(1.0, 0.0), c(0.0, 0.0)),
        (TwistedFn::lerch_star(c(0.7, 0.0)), c(0.7, 0.0), CharPath::APath, c(1.0, 0.0), c(0.0, 0.0)),
        (TwistedFn::l_pm(c(0.7, 0.0), Parity::Plus), c(0.7, 0.0), CharPath::APath, c(1.0, 0.0), c(1.0, 0.0)),
        (TwistedFn::r_pm(c(0.4, 1.0), Parity::Minus), c(0.4, 1.0), CharPath::CPath, c(1.0, 0.0), c(-1.0, 0.0)),
    ];
    for (f, s, path, a, b) in cases {
        let r = characterize(&f, s, path, 32).unwrap();
        assert!((r.a - a).norm() < 1e-6, "{}: A={}", f.label(), r.a);
        assert!((r.b - b).norm() < 1e-6, "{}: B={}", f.label(), r.b);
        assert!(r.residual < 1e-8, "{}: residual {:e}", f.label(), r.residual);
    }
}

#[test]
fn characterize_rejects_untwisted_extension() {
    let f = TwistedFn::periodic("c^-2", |_, c| Ok(Complex64::new(c.powf(-2.0), 0.0)));
    let err = characterize(&f, c(2.0, 0.0), CharPath::APath, 32).unwrap_err();
    assert!(matches!(err, LerchError::IdentityViolation(_)), "{err}");
}

#[test]
fn characterize_checks_path_domain() {
    let f = TwistedFn::lerch_star(c(2.0, 0.0));
    assert!(matches!(characterize(&f, c(-0.5, 0.0), CharPath::APath, 32), Err(LerchError::Domain(_))));
    assert!(matches!(characterize(&f, c(2.0, 0.0), CharPath::CPath, 32), Err(LerchError::Domain(_))));
}

#[test]
fn milnor_baseline() {
    let cfg = Default::default();
    for s in [c(0.5, 3.0), c(-1.5, 0.0), c(2.5, 0.0)] {
        for m in 2..=12 {
            let r = milnor_residual(s, m, &[0.1, 0.37, 0.5, 0.81, 0.93], &cfg).unwrap();
            assert!(r < 1e-9, "s={s} m={m}: {r:e}");
        }
    }
}
