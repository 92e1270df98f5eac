//! Random (s, a, c) points against an mpmath reference table.

use lerchlab::lerch::{lerch_zeta, LerchParams, StrategyConfig};
use num_complex::Complex64;
use serde::Deserialize;

#[derive(Deserialize)]
struct Row {
    s: [f64; 2],
    a: f64,
    c: f64,
    value: [f64; 2],
}

fn rows() -> Vec<Row> {
    serde_json::from_str(include_str!("fixtures/lerch_zeta_mpmath.json")).unwrap()
}

#[test]
fn lerch_zeta_matches_reference_table() {
    let cfg = StrategyConfig::default();
    let mut worst = 0.0f64;
    let mut failures = Vec::new();
    for r in rows() {
        let s = Complex64::new(r.s[0], r.s[1]);
        if s == Complex64::new(1.0, 0.0) {
            continue;
        }
        let want = Complex64::new(r.value[0], r.value[1]);
        let p = LerchParams::new(s, r.a, r.c);
        match lerch_zeta(&p, &cfg) {
            Ok(got) => {
                let err = (got.value - want).norm() / want.norm().max(1.0);
                worst = worst.max(err);
                let abs_err = (got.value - want).norm();
                if abs_err > got.error_estimate + 1e-15 * want.norm() {
                    failures.push(format!("s={s} a={} c={}: estimate {:e} below actual {abs_err:e}", r.a, r.c, got.error_estimate));
                }
                if err > 1e-11 {
                    failures.push(format!("s={s} a={} c={}: got {} want {want} rel {err:e} est {:e} {:?}", r.a, r.c, got.value, got.error_estimate, got.strategy));
                }
            }
            Err(e) => failures.push(format!("s={s} a={} c={}: {e}", r.a, r.c)),
        }
    }
    println!("worst relative error {worst:e}");
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
