//! Raising, lowering and Lerch differential operators by central differences.
//!
//! | operator | action |
//! |---|---|
//! | D⁺ | ∂/∂c |
//! | D⁻ | (1/2πi) ∂/∂a + c |
//! | D_L = D⁻D⁺ | (1/2πi) ∂²/∂a∂c + c ∂/∂c |
//! | Δ_L | D_L + ½ I |
//!
//! Derivatives are numerical so the same code applies to any [`TwistedFn`];
//! the series-side identities in [`crate::lerch`] give the independent check.

use num_complex::Complex64;
use std::f64::consts::PI;
use std::time::Instant;

use crate::error::{LerchError, Result};
use crate::lerch::series::dist_to_integer;
use crate::report::ReportRecord;
use crate::special_functions::Parity;
use crate::twisted::{apply_operator, OperatorSpec, TwistedFn};

/// Central-difference order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StencilOrder {
    Second,
    Fourth,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilConfig {
    pub h: f64,
    pub order: StencilOrder,
}

impl Default for StencilConfig {
    fn default() -> Self {
        StencilConfig { h: 1e-4, order: StencilOrder::Fourth }
    }
}

impl StencilConfig {
    pub fn new(h: f64, order: StencilOrder) -> Self {
        StencilConfig { h, order }
    }

    /// Offsets and weights of the first-derivative stencil, to be divided by h.
    fn weights(&self) -> &'static [(f64, f64)] {
        match self.order {
            StencilOrder::Second => &[(-1.0, -0.5), (1.0, 0.5)],
            StencilOrder::Fourth => &[(-2.0, 1.0 / 12.0), (-1.0, -8.0 / 12.0), (1.0, 8.0 / 12.0), (2.0, -1.0 / 12.0)],
        }
    }

    fn reach(&self) -> f64 {
        match self.order {
            StencilOrder::Second => self.h,
            StencilOrder::Fourth => 2.0 * self.h,
        }
    }
}

/// The four differential operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffKind {
    DPlus,
    DMinus,
    DL,
    DeltaL,
}

impl DiffKind {
    pub fn from_spec(op: OperatorSpec) -> Option<Self> {
        match op {
            OperatorSpec::DPlus => Some(DiffKind::DPlus),
            OperatorSpec::DMinus => Some(DiffKind::DMinus),
            OperatorSpec::DL => Some(DiffKind::DL),
            OperatorSpec::DeltaL => Some(DiffKind::DeltaL),
            _ => None,
        }
    }

    pub fn operator(self) -> OperatorSpec {
        match self {
            DiffKind::DPlus => OperatorSpec::DPlus,
            DiffKind::DMinus => OperatorSpec::DMinus,
            DiffKind::DL => OperatorSpec::DL,
            DiffKind::DeltaL => OperatorSpec::DeltaL,
        }
    }
}

fn check_stencil(f: &TwistedFn, a: f64, c: f64, cfg: &StencilConfig) -> Result<()> {
    let h = cfg.h;
    let scale = a.abs().max(c.abs()).max(1.0);
    if !(h.is_finite() && h > 0.0) || h < 1e3 * f64::EPSILON * scale {
        return Err(LerchError::StepUnderflow(h));
    }
    let d = f.denominator() as f64;
    let margin = cfg.reach();
    if dist_to_integer(a * d) / d <= margin || dist_to_integer(c * d) / d <= margin {
        return Err(LerchError::LatticeProximity { a, c });
    }
    Ok(())
}

fn d_da(f: &TwistedFn, a: f64, c: f64, cfg: &StencilConfig) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(k, w) in cfg.weights() {
        acc += w * f.eval(a + k * cfg.h, c)?;
    }
    Ok(acc / cfg.h)
}

fn d_dc(f: &TwistedFn, a: f64, c: f64, cfg: &StencilConfig) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(k, w) in cfg.weights() {
        acc += w * f.eval(a, c + k * cfg.h)?;
    }
    Ok(acc / cfg.h)
}

/// Mixed partial as the tensor product of two first-derivative stencils; at
/// second order this is the symmetric four-point cross.
fn d_da_dc(f: &TwistedFn, a: f64, c: f64, cfg: &StencilConfig) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &(ka, wa) in cfg.weights() {
        for &(kc, wc) in cfg.weights() {
            acc += wa * wc * f.eval(a + ka * cfg.h, c + kc * cfg.h)?;
        }
    }
    Ok(acc / (cfg.h * cfg.h))
}

/// Applies one differential operator to `f` at (a, c).
///
/// The point must be farther than the stencil reach from f's discontinuity lattice.
pub fn apply_d(kind: DiffKind, f: &TwistedFn, a: f64, c: f64, cfg: &StencilConfig) -> Result<Complex64> {
    check_stencil(f, a, c, cfg)?;
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    match kind {
        DiffKind::DPlus => d_dc(f, a, c, cfg),
        DiffKind::DMinus => Ok(d_da(f, a, c, cfg)? / two_pi_i + c * f.eval(a, c)?),
        DiffKind::DL => Ok(d_da_dc(f, a, c, cfg)? / two_pi_i + c * d_dc(f, a, c, cfg)?),
        DiffKind::DeltaL => {
            Ok(d_da_dc(f, a, c, cfg)? / two_pi_i + c * d_dc(f, a, c, cfg)? + 0.5 * f.eval(a, c)?)
        }
    }
}

/// The function (a, c) ↦ (kind f)(a, c), for composing with other operators.
pub fn d_fn(kind: DiffKind, f: &TwistedFn, cfg: StencilConfig) -> TwistedFn {
    let g = f.clone();
    let label = format!("{}({})", kind.operator(), f.label());
    TwistedFn::new(label, f.denominator(), move |a, c| apply_d(kind, &g, a, c, &cfg))
}

/// Applies any operator, differential or not.
pub fn apply_any(op: OperatorSpec, f: &TwistedFn, cfg: StencilConfig) -> Result<TwistedFn> {
    match DiffKind::from_spec(op) {
        Some(kind) => Ok(d_fn(kind, f, cfg)),
        None => apply_operator(op, f),
    }
}

/// ½(D⁺D⁻ + D⁻D⁺) by nested differences, the symmetrized form of Δ_L.
pub fn symmetrized_delta_l(f: &TwistedFn, a: f64, c: f64, cfg: &StencilConfig) -> Result<Complex64> {
    let plus = d_fn(DiffKind::DPlus, f, *cfg);
    let minus = d_fn(DiffKind::DMinus, f, *cfg);
    let pm = apply_d(DiffKind::DPlus, &minus, a, c, cfg)?;
    let mp = apply_d(DiffKind::DMinus, &plus, a, c, cfg)?;
    Ok(0.5 * (pm + mp))
}

/// The relation between two operators that [`commutator_residual`] checks, or
/// `None` when the pair has none.
pub fn relation_name(a: OperatorSpec, b: OperatorSpec) -> Option<&'static str> {
    use OperatorSpec::*;
    match (a, b) {
        (DPlus, DMinus) => Some("D+D- - D-D+ = I"),
        (DPlus, RPow(1)) => Some("D+R = -2 pi i R D-"),
        (DMinus, RPow(1)) => Some("D-R = (1/2 pi i) R D+"),
        (DL, RPow(1)) => Some("DL R + R DL = -R"),
        (DL, RPow(2)) | (DL, J) => Some("DL R^2 = R^2 DL"),
        (DeltaL, RPow(1)) => Some("DeltaL R + R DeltaL = 0"),
        (DeltaL, RPow(2)) | (DeltaL, J) => Some("DeltaL R^2 = R^2 DeltaL"),
        _ => None,
    }
}

/// Residual of one relation at (a, c).
fn relation_residual(a_op: OperatorSpec, b_op: OperatorSpec, f: &TwistedFn, a: f64, c: f64, cfg: StencilConfig) -> Result<f64> {
    use OperatorSpec::*;
    let ab = apply_any(a_op, &apply_any(b_op, f, cfg)?, cfg)?.eval(a, c)?;
    let ba = apply_any(b_op, &apply_any(a_op, f, cfg)?, cfg)?.eval(a, c)?;
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    let r = match (a_op, b_op) {
        (DPlus, DMinus) => ab - ba - f.eval(a, c)?,
        // here ba = R D, the operators in the other order
        (DPlus, RPow(1)) => {
            let r_dminus = apply_any(RPow(1), &apply_any(DMinus, f, cfg)?, cfg)?.eval(a, c)?;
            ab + two_pi_i * r_dminus
        }
        (DMinus, RPow(1)) => {
            let r_dplus = apply_any(RPow(1), &apply_any(DPlus, f, cfg)?, cfg)?.eval(a, c)?;
            ab - r_dplus / two_pi_i
        }
        (DL, RPow(1)) => ab + ba + apply_any(RPow(1), f, cfg)?.eval(a, c)?,
        (DeltaL, RPow(1)) => ab + ba,
        _ => ab - ba,
    };
    Ok(r.norm())
}

/// Max over `points` of the residual of the relation between `a` and `b`:
///
/// ```text
/// D⁺D⁻ − D⁻D⁺ = I          D⁺R = −2πi R D⁻        D⁻R = (1/2πi) R D⁺
/// D_L R + R D_L = −R       D_L R² = R² D_L
/// ```
///
/// plus the Δ_L forms Δ_L R + R Δ_L = 0 and Δ_L R² = R² Δ_L.
pub fn commutator_residual(
    a: OperatorSpec,
    b: OperatorSpec,
    f: &TwistedFn,
    points: &[(f64, f64)],
    cfg: StencilConfig,
) -> Result<ReportRecord> {
    let start = Instant::now();
    let name = relation_name(a, b).ok_or_else(|| LerchError::UnknownPair(a.to_string(), b.to_string()))?;
    let mut worst: f64 = 0.0;
    for &(x, y) in points {
        worst = worst.max(relation_residual(a, b, f, x, y, cfg)?);
    }
    let params = format!("f={}, h={:e}, points={}", f.label(), cfg.h, points.len());
    Ok(ReportRecord::new(format!("commutator: {name}"), params, worst, 1e-5).timed(start))
}

/// Rejects s if one of L^±_{s−1}, L^±_s, L^±_{s+1} vanishes identically, which
/// happens when the index is an integer ≤ 0.
fn check_nondegenerate(s: Complex64) -> Result<()> {
    for t in [s - 1.0, s, s + 1.0] {
        if t.im == 0.0 && t.re <= 0.0 && t.re == t.re.round() {
            return Err(LerchError::Degenerate(format!("L at s = {} has a vanishing member", t.re)));
        }
    }
    Ok(())
}

/// Checks D⁻L^±_s = L^∓_{s−1} and D⁺L^±_s = −s L^∓_{s+1} at the samples, with
/// residuals relative to 1 + |target|.
pub fn raising_lowering_scan(s: Complex64, samples: &[(f64, f64)], cfg: StencilConfig) -> Result<ReportRecord> {
    let start = Instant::now();
    check_nondegenerate(s)?;
    let mut worst: f64 = 0.0;
    for parity in Parity::BOTH {
        let l = TwistedFn::l_pm(s, parity);
        let lower = TwistedFn::l_pm(s - 1.0, parity.flip());
        let upper = TwistedFn::l_pm(s + 1.0, parity.flip());
        for &(a, c) in samples {
            let dm = apply_d(DiffKind::DMinus, &l, a, c, &cfg)?;
            let want = lower.eval(a, c)?;
            worst = worst.max((dm - want).norm() / (1.0 + want.norm()));
            let dp = apply_d(DiffKind::DPlus, &l, a, c, &cfg)?;
            let want = -s * upper.eval(a, c)?;
            worst = worst.max((dp - want).norm() / (1.0 + want.norm()));
        }
    }
    let params = format!("s={s}, h={:e}, samples={}", cfg.h, samples.len());
    Ok(ReportRecord::new("raising/lowering on L", params, worst, 1e-5).timed(start))
}

/// Checks D_L F = −s F and Δ_L F = −(s − ½) F on L^±_s, relative to 1 + |F|.
pub fn eigenvalue_scan(s: Complex64, samples: &[(f64, f64)], cfg: StencilConfig) -> Result<ReportRecord> {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for parity in Parity::BOTH {
        let l = TwistedFn::l_pm(s, parity);
        for &(a, c) in samples {
            let v = l.eval(a, c)?;
            let dl = apply_d(DiffKind::DL, &l, a, c, &cfg)?;
            let delta = apply_d(DiffKind::DeltaL, &l, a, c, &cfg)?;
            worst = worst.max((dl + s * v).norm() / (1.0 + v.norm()));
            worst = worst.max((delta + (s - 0.5) * v).norm() / (1.0 + v.norm()));
        }
    }
    let params = format!("s={s}, h={:e}, samples={}", cfg.h, samples.len());
    Ok(ReportRecord::new("D_L and Delta_L eigenvalues on L", params, worst, 1e-5).timed(start))
}
