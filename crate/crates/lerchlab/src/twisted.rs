//! Twisted-periodic functions and the operators acting on them.
//!
//! A [`TwistedFn`] is known through an evaluator on the open unit square and is
//! extended to the plane by
//!
//! ```text
//! F(a+1, c) = F(a, c),    F(a, c+1) = e^(−2πia) F(a, c).
//! ```
//!
//! Operators do not sample anything. They wrap the input in a new closure, so
//! `T_2(T_3(F))` is a small evaluator tree that is walked on demand. The
//! denominator `d` records the lattice (1/d)ℤ on which discontinuities may sit.
//! It is multiplied by `m` under every Hecke operator and unchanged under R.
//!
//! ```
//! use lerchlab::twisted::{apply_hecke, HeckeFamily, TwistedFn};
//! use num_complex::Complex64;
//!
//! let s = Complex64::new(3.0, 0.0);
//! let f = TwistedFn::lerch_star(s);
//! let t5 = apply_hecke(HeckeFamily::T, 5, &f).unwrap();
//! let (a, c) = (0.37, 0.52);
//! let lhs = t5.eval(a, c).unwrap();
//! let rhs = f.eval(a, c).unwrap() * 5f64.powf(-3.0);
//! assert!((lhs - rhs).norm() < 1e-12);
//! ```

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

use crate::error::{LerchError, Result};
use crate::lerch::{self, series::dist_to_integer, LerchParams, StrategyConfig};
use crate::special_functions::{expi2pi, Parity};

/// Distance below which a point counts as lying on the discontinuity lattice.
pub const GRID_TOL: f64 = 1e-13;

type Evaluator = Arc<dyn Fn(f64, f64) -> Result<Complex64> + Send + Sync>;

/// How values outside the unit square are obtained from the core.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extension {
    /// F(a+1,c) = F(a,c), F(a,c+1) = e^(−2πia)F(a,c).
    Twisted,
    /// Plain period-1 extension in both variables, for counterexamples.
    Periodic,
}

/// A function on ℝ×ℝ given by its values on the unit square.
#[derive(Clone)]
pub struct TwistedFn {
    core: Evaluator,
    denominator: u64,
    label: String,
    extension: Extension,
}

impl fmt::Debug for TwistedFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TwistedFn")
            .field("label", &self.label)
            .field("denominator", &self.denominator)
            .field("extension", &self.extension)
            .finish()
    }
}

impl TwistedFn {
    /// Wraps `core`, which must be valid on (0,1)² and is only called there by [`TwistedFn::eval`].
    pub fn new<F>(label: impl Into<String>, denominator: u64, core: F) -> Self
    where
        F: Fn(f64, f64) -> Result<Complex64> + Send + Sync + 'static,
    {
        assert!(denominator >= 1, "denominator must be positive");
        TwistedFn { core: Arc::new(core), denominator, label: label.into(), extension: Extension::Twisted }
    }

    /// Like [`TwistedFn::new`] but extended periodically, without the twist.
    pub fn periodic<F>(label: impl Into<String>, core: F) -> Self
    where
        F: Fn(f64, f64) -> Result<Complex64> + Send + Sync + 'static,
    {
        TwistedFn { core: Arc::new(core), denominator: 1, label: label.into(), extension: Extension::Periodic }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn extension(&self) -> Extension {
        self.extension
    }

    /// Same function under a new label.
    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Value at any point off the lattice, through the extension rules.
    pub fn eval(&self, a: f64, c: f64) -> Result<Complex64> {
        extend(self, a, c)
    }

    /// The core formula at (a, c) without reducing to the unit square.
    ///
    /// Operator outputs and the Lerch functions have globally valid formulas, so
    /// comparing this against [`TwistedFn::eval`] tests twisted-periodicity.
    pub fn eval_unreduced(&self, a: f64, c: f64) -> Result<Complex64> {
        self.check_grid(a, c)?;
        (self.core)(a, c)
    }

    fn check_grid(&self, a: f64, c: f64) -> Result<()> {
        let d = self.denominator as f64;
        if !a.is_finite() || !c.is_finite() {
            return Err(LerchError::Domain(format!("non-finite point ({a}, {c})")));
        }
        if dist_to_integer(a * d) / d < GRID_TOL || dist_to_integer(c * d) / d < GRID_TOL {
            return Err(LerchError::GridPoint { a, c, d: self.denominator });
        }
        Ok(())
    }

    /// ζ*(s, a, c) as a twisted-periodic function.
    pub fn lerch_star(s: Complex64) -> Self {
        Self::lerch_star_with(s, StrategyConfig::default())
    }

    pub fn lerch_star_with(s: Complex64, cfg: StrategyConfig) -> Self {
        TwistedFn::new(format!("zeta*({s})"), 1, move |a, c| {
            Ok(lerch::lerch_star(&LerchParams::new(s, a, c), &cfg)?.value)
        })
    }

    /// L^±(s, a, c).
    pub fn l_pm(s: Complex64, parity: Parity) -> Self {
        Self::l_pm_with(s, parity, StrategyConfig::default())
    }

    pub fn l_pm_with(s: Complex64, parity: Parity, cfg: StrategyConfig) -> Self {
        TwistedFn::new(format!("L{}({s})", parity.symbol()), 1, move |a, c| {
            Ok(lerch::l_pm(&LerchParams::new(s, a, c), parity, &cfg)?.value)
        })
    }

    /// R^±_s(a, c) = e^(−2πiac) L^±(1−s, 1−c, a).
    pub fn r_pm(s: Complex64, parity: Parity) -> Self {
        Self::r_pm_with(s, parity, StrategyConfig::default())
    }

    pub fn r_pm_with(s: Complex64, parity: Parity, cfg: StrategyConfig) -> Self {
        TwistedFn::new(format!("R{}({s})", parity.symbol()), 1, move |a, c| {
            let l = lerch::l_pm(&LerchParams::new(1.0 - s, 1.0 - c, a), parity, &cfg)?.value;
            Ok(expi2pi(-a * c) * l)
        })
    }

    /// A + B·G evaluated pointwise, with the larger denominator.
    pub fn linear_combination(&self, alpha: Complex64, other: &TwistedFn, beta: Complex64) -> TwistedFn {
        let (f, g) = (self.clone(), other.clone());
        let d = lcm(self.denominator, other.denominator);
        let label = format!("({alpha})*{} + ({beta})*{}", self.label, other.label);
        TwistedFn::new(label, d, move |a, c| Ok(alpha * f.eval(a, c)? + beta * g.eval(a, c)?))
    }

    /// Scalar multiple.
    pub fn scaled(&self, alpha: Complex64) -> TwistedFn {
        let f = self.clone();
        TwistedFn::new(format!("({alpha})*{}", self.label), self.denominator, move |a, c| Ok(alpha * f.eval(a, c)?))
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// F(a, c) from the core on the unit square: e^(−2πi·⌊c⌋·a′)·core(a′, c′),
/// a′ = a mod 1, c′ = c mod 1.
///
/// The a-reduction comes first; the c-shift then contributes its phase at a′,
/// which equals the phase at a because ⌊c⌋ is an integer.
pub fn extend(f: &TwistedFn, a: f64, c: f64) -> Result<Complex64> {
    f.check_grid(a, c)?;
    let a0 = a.rem_euclid(1.0);
    let fc = c.floor();
    let c0 = c - fc;
    let v = (f.core)(a0, c0)?;
    Ok(match f.extension {
        Extension::Twisted => expi2pi(-fc * a0) * v,
        Extension::Periodic => v,
    })
}

/// The four Hecke families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HeckeFamily {
    T,
    S,
    TVee,
    SVee,
}

impl HeckeFamily {
    pub const ALL: [HeckeFamily; 4] = [HeckeFamily::T, HeckeFamily::S, HeckeFamily::TVee, HeckeFamily::SVee];

    pub fn name(self) -> &'static str {
        match self {
            HeckeFamily::T => "T",
            HeckeFamily::S => "S",
            HeckeFamily::TVee => "Tv",
            HeckeFamily::SVee => "Sv",
        }
    }
}

/// One operator, for composition and residual bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperatorSpec {
    Hecke { family: HeckeFamily, m: u32 },
    /// R^k, k ∈ {0, 1, 2, 3}.
    RPow(u8),
    J,
    DPlus,
    DMinus,
    DL,
    DeltaL,
}

impl OperatorSpec {
    pub fn t(m: u32) -> Self {
        OperatorSpec::Hecke { family: HeckeFamily::T, m }
    }

    pub fn s(m: u32) -> Self {
        OperatorSpec::Hecke { family: HeckeFamily::S, m }
    }

    pub fn is_differential(self) -> bool {
        matches!(self, OperatorSpec::DPlus | OperatorSpec::DMinus | OperatorSpec::DL | OperatorSpec::DeltaL)
    }
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::Hecke { family, m } => write!(f, "{}{}", family.name(), m),
            OperatorSpec::RPow(k) => write!(f, "R^{k}"),
            OperatorSpec::J => write!(f, "J"),
            OperatorSpec::DPlus => write!(f, "D+"),
            OperatorSpec::DMinus => write!(f, "D-"),
            OperatorSpec::DL => write!(f, "DL"),
            OperatorSpec::DeltaL => write!(f, "DeltaL"),
        }
    }
}

impl std::str::FromStr for OperatorSpec {
    type Err = LerchError;

    /// Parses `T3`, `S2`, `Tv4`, `Sv5`, `R^1`, `J`, `D+`, `D-`, `DL`, `DeltaL`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || LerchError::Config(format!("unknown operator '{s}'"));
        match s {
            "J" => return Ok(OperatorSpec::J),
            "D+" => return Ok(OperatorSpec::DPlus),
            "D-" => return Ok(OperatorSpec::DMinus),
            "DL" => return Ok(OperatorSpec::DL),
            "DeltaL" => return Ok(OperatorSpec::DeltaL),
            _ => {}
        }
        if let Some(k) = s.strip_prefix("R^") {
            let k: u8 = k.parse().map_err(|_| bad())?;
            return if k < 4 { Ok(OperatorSpec::RPow(k)) } else { Err(bad()) };
        }
        let (family, rest) = if let Some(r) = s.strip_prefix("Tv") {
            (HeckeFamily::TVee, r)
        } else if let Some(r) = s.strip_prefix("Sv") {
            (HeckeFamily::SVee, r)
        } else if let Some(r) = s.strip_prefix('T') {
            (HeckeFamily::T, r)
        } else if let Some(r) = s.strip_prefix('S') {
            (HeckeFamily::S, r)
        } else {
            return Err(bad());
        };
        let m: u32 = rest.parse().map_err(|_| bad())?;
        if m == 0 {
            return Err(bad());
        }
        Ok(OperatorSpec::Hecke { family, m })
    }
}

/// Applies one of the four Hecke families with index `m`:
///
/// ```text
/// T_m f  = (1/m) Σ_k f((a+k)/m, mc)
/// S_m f  = (1/m) Σ_k e^(2πika) f(ma, (c+k)/m)
/// T∨_m f = (1/m) Σ_k e^(2πi((1−m)a+k)/m) f((a+k)/m, 1+m(c−1))
/// S∨_m f = (1/m) Σ_k e^(2πi(m−(k+1))a) f(1+m(a−1), (c+m−(k+1))/m)
/// ```
pub fn apply_hecke(family: HeckeFamily, m: u32, f: &TwistedFn) -> Result<TwistedFn> {
    if m == 0 {
        return Err(LerchError::Domain("Hecke index must be at least 1".into()));
    }
    let g = f.clone();
    let mf = m as f64;
    let inv = 1.0 / mf;
    let label = format!("{}{}({})", family.name(), m, f.label);
    let d = f.denominator * m as u64;
    let out = match family {
        HeckeFamily::T => TwistedFn::new(label, d, move |a, c| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..m {
                acc += g.eval((a + k as f64) * inv, mf * c)?;
            }
            Ok(acc * inv)
        }),
        HeckeFamily::S => TwistedFn::new(label, d, move |a, c| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..m {
                let k = k as f64;
                acc += expi2pi(k * a) * g.eval(mf * a, (c + k) * inv)?;
            }
            Ok(acc * inv)
        }),
        HeckeFamily::TVee => TwistedFn::new(label, d, move |a, c| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..m {
                let k = k as f64;
                let phase = expi2pi(((1.0 - mf) * a + k) * inv);
                acc += phase * g.eval((a + k) * inv, 1.0 + mf * (c - 1.0))?;
            }
            Ok(acc * inv)
        }),
        HeckeFamily::SVee => TwistedFn::new(label, d, move |a, c| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..m {
                let k1 = (k + 1) as f64;
                let phase = expi2pi((mf - k1) * a);
                acc += phase * g.eval(1.0 + mf * (a - 1.0), (c + mf - k1) * inv)?;
            }
            Ok(acc * inv)
        }),
    };
    Ok(out)
}

/// R^power: (RF)(a,c) = e^(−2πiac) F(1−c, a); R² = J, R⁴ = I.
pub fn apply_r(f: &TwistedFn, power: u8) -> TwistedFn {
    let g = f.clone();
    let label = format!("R^{}({})", power % 4, f.label);
    let d = f.denominator;
    match power % 4 {
        0 => f.clone(),
        1 => TwistedFn::new(label, d, move |a, c| Ok(expi2pi(-a * c) * g.eval(1.0 - c, a)?)),
        2 => TwistedFn::new(label, d, move |a, c| Ok(expi2pi(-a) * g.eval(1.0 - a, 1.0 - c)?)),
        _ => TwistedFn::new(label, d, move |a, c| Ok(expi2pi(c - a * c) * g.eval(c, 1.0 - a)?)),
    }
}

/// The involution J = R²: (JF)(a,c) = e^(−2πia) F(1−a, 1−c).
pub fn apply_j(f: &TwistedFn) -> TwistedFn {
    apply_r(f, 2).relabel(format!("J({})", f.label))
}

/// Applies a non-differential operator.
pub fn apply_operator(op: OperatorSpec, f: &TwistedFn) -> Result<TwistedFn> {
    match op {
        OperatorSpec::Hecke { family, m } => apply_hecke(family, m, f),
        OperatorSpec::RPow(k) => Ok(apply_r(f, k)),
        OperatorSpec::J => Ok(apply_j(f)),
        other => Err(LerchError::Domain(format!(
            "{other} is a differential operator; use diff_ops::apply_d"
        ))),
    }
}

/// The one-variable Kubert operator (1/m) Σ_{k<m} f((x+k)/m), x ∈ (0,1).
pub fn kubert_1d<F>(m: u32, f: F, x: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if m == 0 {
        return Err(LerchError::Domain("Kubert index must be at least 1".into()));
    }
    if !(x > 0.0 && x < 1.0) {
        return Err(LerchError::Domain(format!("Kubert operator needs x in (0,1), got {x}")));
    }
    let mf = m as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..m {
        acc += f((x + k as f64) / mf)?;
    }
    Ok(acc / mf)
}

/// The dilation f ↦ f(m·c).
pub fn dilation_1d<F>(m: u32, f: F, c: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if m == 0 {
        return Err(LerchError::Domain("dilation index must be at least 1".into()));
    }
    f(m as f64 * c)
}

/// Σ_{m=1..M} (T_m F)(a, c).
pub fn zeta_operator_partial(big_m: u32, f: &TwistedFn, a: f64, c: f64) -> Result<Complex64> {
    if big_m == 0 {
        return Err(LerchError::Domain("zeta operator needs M >= 1".into()));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 1..=big_m {
        acc += apply_hecke(HeckeFamily::T, m, f)?.eval(a, c)?;
    }
    Ok(acc)
}

/// Smooth twisted-periodic test functions F(a,c) = Σ_n e^(2πina) φ(n+c), where φ
/// is a finite sum of Gaussian bumps with complex weights.
///
/// Each F is real-analytic on the whole plane, so quadrature and finite
/// differences see no discontinuities; the truncated n-range makes it a
/// trigonometric polynomial in `a`.
#[derive(Debug, Clone)]
pub struct BumpSum {
    bumps: Vec<(Complex64, f64, f64)>,
}

impl BumpSum {
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let count = rng.gen_range(2..=4);
        let bumps = (0..count)
            .map(|_| {
                let w = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                let center = rng.gen_range(-0.5..1.5);
                let width = rng.gen_range(0.25..0.6);
                (w, center, width)
            })
            .collect();
        BumpSum { bumps }
    }

    /// Value of the Zak-type sum at any (a, c).
    pub fn value(&self, a: f64, c: f64) -> Complex64 {
        let step = expi2pi(a);
        let mut acc = Complex64::new(0.0, 0.0);
        for &(w, mu, sigma) in &self.bumps {
            // e^(−x²/2) < 1e-16 beyond 8.6 widths
            let reach = 8.6 * sigma;
            let lo = (mu - reach - c).ceil() as i64;
            let hi = (mu + reach - c).floor() as i64;
            let mut phase = expi2pi(lo as f64 * a);
            for n in lo..=hi {
                let x = n as f64 + c - mu;
                acc += phase * w * (-x * x / (2.0 * sigma * sigma)).exp();
                phase *= step;
            }
        }
        acc
    }

    pub fn into_twisted(self, label: impl Into<String>) -> TwistedFn {
        TwistedFn::new(label, 1, move |a, c| Ok(self.value(a, c)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bump(seed: u64) -> TwistedFn {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        BumpSum::random(&mut rng).into_twisted(format!("bump{seed}"))
    }

    #[test]
    fn extension_rules() {
        let f = TwistedFn::new("probe", 1, |a, c| Ok(Complex64::new(a, c)));
        let core = Complex64::new(0.3, 0.4);
        let v = f.eval(0.3, 2.4).unwrap();
        let want = expi2pi(-0.6) * core;
        assert!((v - want).norm() < 1e-13);
        assert!((f.eval(-0.7, 0.4).unwrap() - core).norm() < 1e-13);
        assert!((f.eval(1.3, 0.4).unwrap() - core).norm() < 1e-13);
    }

    #[test]
    fn grid_points_rejected() {
        let f = TwistedFn::new("probe", 3, |_, _| Ok(Complex64::new(1.0, 0.0)));
        assert!(matches!(f.eval(1.0 / 3.0, 0.5), Err(LerchError::GridPoint { .. })));
        assert!(matches!(f.eval(0.1, 2.0), Err(LerchError::GridPoint { .. })));
        assert!(f.eval(0.1, 0.5).is_ok());
    }

    #[test]
    fn bump_sums_are_twisted_periodic() {
        let f = bump(3);
        for &(a, c) in &[(0.2, 0.3), (0.77, 0.05), (0.5, 0.95)] {
            let base = f.eval_unreduced(a, c).unwrap();
            let up = f.eval_unreduced(a, c + 1.0).unwrap();
            let right = f.eval_unreduced(a + 1.0, c).unwrap();
            assert!((up - expi2pi(-a) * base).norm() < 1e-13);
            assert!((right - base).norm() < 1e-13);
        }
    }

    #[test]
    fn hecke_one_is_identity() {
        let f = bump(1);
        for fam in HeckeFamily::ALL {
            let g = apply_hecke(fam, 1, &f).unwrap();
            let (a, c) = (0.31, 0.72);
            assert!((g.eval(a, c).unwrap() - f.eval(a, c).unwrap()).norm() < 1e-14);
        }
    }

    #[test]
    fn hecke_denominators() {
        let f = bump(1);
        let g = apply_hecke(HeckeFamily::S, 3, &apply_hecke(HeckeFamily::T, 2, &f).unwrap()).unwrap();
        assert_eq!(g.denominator(), 6);
        assert_eq!(apply_r(&g, 1).denominator(), 6);
    }

    #[test]
    fn r_powers_compose() {
        let f = bump(2);
        let r1 = apply_r(&f, 1);
        let r2 = apply_r(&r1, 1);
        let r4 = apply_r(&apply_r(&r2, 1), 1);
        let j = apply_j(&f);
        let r3 = apply_r(&f, 3);
        for &(a, c) in &[(0.13, 0.42), (0.61, 0.87)] {
            let fv = f.eval(a, c).unwrap();
            assert!((r2.eval(a, c).unwrap() - j.eval(a, c).unwrap()).norm() < 1e-13);
            assert!((r4.eval(a, c).unwrap() - fv).norm() < 1e-13);
            assert!((apply_r(&r3, 1).eval(a, c).unwrap() - fv).norm() < 1e-13);
        }
    }

    #[test]
    fn operator_spec_roundtrip() {
        for s in ["T3", "S12", "Tv2", "Sv7", "R^3", "J", "D+", "D-", "DL", "DeltaL"] {
            let op: OperatorSpec = s.parse().unwrap();
            assert_eq!(op.to_string(), s);
        }
        assert!("T0".parse::<OperatorSpec>().is_err());
        assert!("R^4".parse::<OperatorSpec>().is_err());
        assert!("X2".parse::<OperatorSpec>().is_err());
    }

    #[test]
    fn kubert_and_dilation_basics() {
        let one = |_: f64| Ok(Complex64::new(1.0, 0.0));
        assert!((kubert_1d(2, one, 0.3).unwrap() - 1.0).norm() < 1e-15);
        let f = |x: f64| Ok(Complex64::new(x * x, 0.0));
        assert_eq!(kubert_1d(1, f, 0.4).unwrap(), f(0.4).unwrap());
        assert!(kubert_1d(2, f, 1.2).is_err());
        let inner = |c: f64| dilation_1d(3, f, c);
        let lhs = dilation_1d(2, inner, 0.1).unwrap();
        assert!((lhs - f(0.6).unwrap()).norm() < 1e-15);
        let periodic = |x: f64| Ok(Complex64::new((2.0 * std::f64::consts::PI * x).sin(), 0.0));
        let d0 = dilation_1d(3, periodic, 0.15).unwrap();
        let d1 = dilation_1d(3, periodic, 1.15).unwrap();
        assert!((d0 - d1).norm() < 1e-13);
    }

    #[test]
    fn zeta_operator_first_term() {
        let f = bump(4);
        let z = zeta_operator_partial(1, &f, 0.3, 0.6).unwrap();
        assert!((z - f.eval(0.3, 0.6).unwrap()).norm() < 1e-15);
    }
}
