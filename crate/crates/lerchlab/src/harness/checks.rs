//! L² adjoint, norm and L^p checks for the Hecke operators, run on random
//! smooth twisted-periodic test functions ([`BumpSum`]).

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

use crate::error::{LerchError, Result};
use crate::quadrature::{lp_norm, sup_norm_sampled, QuadratureGrid};
use crate::report::ReportRecord;
use crate::twisted::{apply_hecke, apply_r, BumpSum, HeckeFamily, TwistedFn};

/// Largest m the quadrature checks accept.
pub const MAX_CHECK_M: u32 = 8;

/// An L^p exponent: finite p ≥ 1 or the sampled sup norm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    /// Sampled on an n×n lattice, which only bounds the true sup from below.
    Sup,
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Sup => f.write_str("inf"),
        }
    }
}

/// Test function number `k` of the family seeded by `seed`.
pub fn test_function(seed: u64, k: usize) -> TwistedFn {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    BumpSum::random(&mut rng).into_twisted(format!("bump[{seed}:{k}]"))
}

/// The quadrature grid used for index m: panels aligned with the 1/m lattice.
pub fn grid_for(m: u32, order: usize) -> QuadratureGrid {
    QuadratureGrid::new(m.max(2) as usize, order)
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 || m > MAX_CHECK_M {
        return Err(LerchError::Domain(format!("quadrature checks need 1 ≤ m ≤ {MAX_CHECK_M}, got {m}")));
    }
    Ok(())
}

/// max over `trials` pairs of |⟨T_m f, g⟩ − ⟨f, S_m g⟩|, tolerance 1e-7.
pub fn adjoint_check(m: u32, trials: usize, grid: &QuadratureGrid, seed: u64) -> Result<ReportRecord> {
    check_m(m)?;
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for k in 0..trials {
        let f = test_function(seed, 2 * k);
        let g = test_function(seed, 2 * k + 1);
        let tf = apply_hecke(HeckeFamily::T, m, &f)?;
        let sg = apply_hecke(HeckeFamily::S, m, &g)?;
        // one grid, no refinement: the identity is checked, not the integrals
        let lhs = grid.integrate(|a, c| Ok(tf.eval(a, c)? * g.eval(a, c)?.conj()))?;
        let rhs = grid.integrate(|a, c| Ok(f.eval(a, c)? * sg.eval(a, c)?.conj()))?;
        worst = worst.max((lhs - rhs).norm());
    }
    let params = format!("m={m}, trials={trials}, seed={seed}");
    Ok(ReportRecord::new("adjoint <T_m f, g> = <f, S_m g>", params, worst, 1e-7).timed(start))
}

/// max over trials of |‖X_m f‖₂ − m^(−1/2)‖f‖₂| and |‖√m X_m f‖₂ − ‖f‖₂| for
/// X = T, S; tolerance 1e-8.
pub fn norm_identity_check(m: u32, trials: usize, grid: &QuadratureGrid, seed: u64) -> Result<ReportRecord> {
    check_m(m)?;
    let start = Instant::now();
    let root = (m as f64).sqrt();
    let mut worst: f64 = 0.0;
    for k in 0..trials {
        let f = test_function(seed, k);
        let norm = lp_norm(&f, 2.0, grid)?;
        for family in [HeckeFamily::T, HeckeFamily::S] {
            let image = lp_norm(&apply_hecke(family, m, &f)?, 2.0, grid)?;
            worst = worst.max((image - norm / root).abs()).max((root * image - norm).abs());
        }
    }
    let params = format!("m={m}, trials={trials}, seed={seed}");
    Ok(ReportRecord::new("norm identity ||sqrt(m) T_m f||_2 = ||f||_2", params, worst, 1e-8).timed(start))
}

/// max over trials of |‖R f‖_p − ‖f‖_p|, tolerance 1e-9.
pub fn r_isometry_check(p: f64, trials: usize, grid: &QuadratureGrid, seed: u64) -> Result<ReportRecord> {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for k in 0..trials {
        let f = test_function(seed, k);
        worst = worst.max((lp_norm(&apply_r(&f, 1), p, grid)? - lp_norm(&f, p, grid)?).abs());
    }
    let params = format!("p={p}, trials={trials}, seed={seed}");
    Ok(ReportRecord::new("R isometry ||R f||_p = ||f||_p", params, worst, 1e-9).timed(start))
}

fn norm_of(f: &TwistedFn, p: Exponent, grid: &QuadratureGrid, sup_samples: usize) -> Result<f64> {
    match p {
        Exponent::Finite(p) => lp_norm(f, p, grid),
        Exponent::Sup => sup_norm_sampled(f, sup_samples),
    }
}

/// Largest ratio ‖X_m f‖_p / (m‖f‖_p) over trials and X = T, S. The bound
/// holds when the ratio is at most 1; `1 − ratio` is the slack.
pub fn lp_bound_check(
    m: u32,
    p: Exponent,
    trials: usize,
    grid: &QuadratureGrid,
    sup_samples: usize,
    seed: u64,
) -> Result<ReportRecord> {
    check_m(m)?;
    if let Exponent::Finite(p) = p {
        if !(p >= 1.0) {
            return Err(LerchError::Domain(format!("L^p bound needs p ≥ 1, got {p}")));
        }
    }
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for k in 0..trials {
        let f = test_function(seed, k);
        let norm = norm_of(&f, p, grid, sup_samples)?;
        for family in [HeckeFamily::T, HeckeFamily::S] {
            let image = norm_of(&apply_hecke(family, m, &f)?, p, grid, sup_samples)?;
            worst = worst.max(image / (m as f64 * norm));
        }
    }
    let params = format!("m={m}, p={p}, trials={trials}, seed={seed}");
    Ok(ReportRecord::new("L^p bound ||T_m f||_p <= m ||f||_p", params, worst, 1.0).timed(start))
}

/// Observed ‖T_m f‖_p / ‖f‖_p for a single test function.
pub fn lp_ratio(m: u32, p: Exponent, f: &TwistedFn, grid: &QuadratureGrid, sup_samples: usize) -> Result<f64> {
    Ok(norm_of(&apply_hecke(HeckeFamily::T, m, f)?, p, grid, sup_samples)? / norm_of(f, p, grid, sup_samples)?)
}

/// Plain (1+|x|)-relative distance, shared by the pointwise checks.
pub(crate) fn rel_diff(x: Complex64, y: Complex64) -> f64 {
    (x - y).norm() / (1.0 + y.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_index_is_exact() {
        let grid = grid_for(1, 16);
        assert!(adjoint_check(1, 2, &grid, 1).unwrap().residual < 1e-14);
        assert!(norm_identity_check(1, 2, &grid, 1).unwrap().residual < 1e-14);
        let r = lp_bound_check(1, Exponent::Finite(1.0), 2, &grid, 20, 1).unwrap();
        assert!((r.residual - 1.0).abs() < 1e-12);
    }

    #[test]
    fn adjoint_at_two() {
        let r = adjoint_check(2, 4, &grid_for(2, 16), 3).unwrap();
        assert!(r.passed && r.residual < 1e-8, "{:e}", r.residual);
    }

    #[test]
    fn l2_ratio_is_inverse_root() {
        let f = test_function(5, 0);
        let r = lp_ratio(2, Exponent::Finite(2.0), &f, &grid_for(2, 16), 20).unwrap();
        assert!((r - 0.5f64.sqrt()).abs() < 1e-10);
    }

    #[test]
    fn rejects_large_m() {
        assert!(adjoint_check(9, 1, &grid_for(9, 4), 0).is_err());
        assert!(lp_bound_check(2, Exponent::Finite(0.5), 1, &grid_for(2, 4), 4, 0).is_err());
    }
}
