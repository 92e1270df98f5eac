//! Planning and running the identity suite.
//!
//! [`plan`] builds every check up front, random points included, so the record
//! list and its inputs depend only on the config. [`run_checks`] then evaluates
//! the checks in parallel and keeps plan order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::str::FromStr;
use std::time::Instant;

use super::checks::{
    adjoint_check, grid_for, lp_bound_check, norm_identity_check, r_isometry_check, rel_diff, test_function, Exponent,
};
use super::SuiteConfig;
use crate::diff_ops::{commutator_residual, eigenvalue_scan, raising_lowering_scan, relation_name, StencilConfig, StencilOrder};
use crate::eigenspace::{
    build_eigenspace_with, characterize, functional_link_residual, gram_analysis, j_residual, milnor_residual,
    r_action_residual, CharPath,
};
use crate::error::{LerchError, Result};
use crate::lerch::{
    eval_strip, functional_equation_residual, hurwitz, l_pm, lerch_star, lerch_zeta, LerchParams,
};
use crate::report::ReportRecord;
use crate::special_functions::{complex_gamma, tate_gamma, Parity};
use crate::twisted::{apply_hecke, zeta_operator_partial, HeckeFamily, OperatorSpec, TwistedFn};

/// A named family of checks, selectable with `groups =` or `--group`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    SpecialFns,
    FunctionalEquations,
    HeckeEigen,
    Commutators,
    Adjoint,
    Characterization,
    MilnorBaseline,
    ZetaOperator,
}

impl Group {
    pub const ALL: [Group; 8] = [
        Group::SpecialFns,
        Group::FunctionalEquations,
        Group::HeckeEigen,
        Group::Commutators,
        Group::Adjoint,
        Group::Characterization,
        Group::MilnorBaseline,
        Group::ZetaOperator,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Group::SpecialFns => "special_fns",
            Group::FunctionalEquations => "functional_equations",
            Group::HeckeEigen => "hecke_eigen",
            Group::Commutators => "commutators",
            Group::Adjoint => "adjoint",
            Group::Characterization => "characterization",
            Group::MilnorBaseline => "milnor_baseline",
            Group::ZetaOperator => "zeta_operator",
        }
    }

    fn salt(self) -> u64 {
        Group::ALL.iter().position(|&g| g == self).unwrap() as u64 + 1
    }
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Group {
    type Err = LerchError;

    fn from_str(s: &str) -> Result<Self> {
        Group::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| LerchError::Config(format!("unknown group '{s}'")))
    }
}

type Job = Box<dyn Fn() -> Result<f64> + Send + Sync>;

/// One planned check: what it verifies, its inputs, and how to compute its residual.
pub struct Check {
    pub group: Group,
    pub identity: String,
    pub params: String,
    pub tolerance: f64,
    job: Job,
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check")
            .field("group", &self.group)
            .field("identity", &self.identity)
            .field("params", &self.params)
            .field("tolerance", &self.tolerance)
            .finish()
    }
}

impl Check {
    fn new<F>(group: Group, identity: impl Into<String>, params: impl Into<String>, tolerance: f64, job: F) -> Self
    where
        F: Fn() -> Result<f64> + Send + Sync + 'static,
    {
        Check { group, identity: identity.into(), params: params.into(), tolerance, job: Box::new(job) }
    }

    /// Runs the check. An error becomes a failing record whose params carry
    /// the message; f64::MAX stands in for the residual so the JSON stays valid.
    pub fn run(&self, timings: bool) -> ReportRecord {
        let start = Instant::now();
        let record = match (self.job)() {
            Ok(r) => ReportRecord::new(&self.identity, &self.params, r, self.tolerance),
            Err(e) => ReportRecord::new(&self.identity, format!("{}; error: {e}", self.params), f64::MAX, self.tolerance),
        };
        if timings {
            record.timed(start)
        } else {
            record
        }
    }

    /// `group<TAB>identity<TAB>params`, the line format of `verify --list`.
    pub fn plan_line(&self) -> String {
        format!("{}\t{}\t{}", self.group, self.identity, self.params)
    }
}

/// The outcome of a suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub records: Vec<ReportRecord>,
}

impl SuiteOutcome {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    /// 0 when every record passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

/// Every check selected by `cfg`, in the canonical group order.
pub fn plan(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    for group in Group::ALL {
        if !cfg.groups.contains(&group) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(group.salt());
        let checks = match group {
            Group::SpecialFns => special_fns(cfg, &mut rng),
            Group::FunctionalEquations => functional_equations(cfg, &mut rng),
            Group::HeckeEigen => hecke_eigen(cfg, &mut rng),
            Group::Commutators => commutators(cfg, &mut rng),
            Group::Adjoint => adjoint(cfg),
            Group::Characterization => characterization(cfg, &mut rng),
            Group::MilnorBaseline => milnor_baseline(cfg, &mut rng),
            Group::ZetaOperator => zeta_operator(cfg, &mut rng),
        };
        out.extend(checks);
    }
    out
}

/// Runs the checks in parallel, applying the config's global tolerance override.
pub fn run_checks(checks: &[Check], cfg: &SuiteConfig) -> Vec<ReportRecord> {
    checks
        .par_iter()
        .map(|c| {
            let r = c.run(cfg.timings);
            match cfg.tolerance {
                Some(t) => r.with_tolerance(t),
                None => r,
            }
        })
        .collect()
}

/// Plans and runs the suite.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteOutcome {
    SuiteOutcome { records: run_checks(&plan(cfg), cfg) }
}

fn fmt_c(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

fn fmt_list(zs: &[Complex64]) -> String {
    zs.iter().map(|&z| fmt_c(z)).collect::<Vec<_>>().join(" ")
}

fn dist_int(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// Points in [margin, 1 − margin]² with m·a and m·c at least 1e-9 from ℤ for all m ≤ `m_max`.
///
/// Enough for smooth test functions; see [`separated_points`] for Lerch functions.
fn off_lattice_points(rng: &mut ChaCha8Rng, n: usize, m_max: u32, margin: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let a = rng.gen_range(margin..1.0 - margin);
        let c = rng.gen_range(margin..1.0 - margin);
        if (1..=m_max).all(|m| dist_int(m as f64 * a) > 1e-9 && dist_int(m as f64 * c) > 1e-9) {
            out.push((a, c));
        }
    }
    out
}

/// Separation constant for [`separated_points`].
const KAPPA: f64 = 0.2;

/// Points with dist(m·x, ℤ) ≥ κ/m for x = a, c and every m ≤ `m_max`.
///
/// T_m F sums F(·, {mc}) over k, and for Lerch functions the (n + {mc})^(−s)
/// term is common to every k and cancels. When {mc} is tiny the cancellation
/// leaves rounding error of size ε·{mc}^(−Re s); this condition caps it at
/// ε·(m/κ)^(Re s).
fn separated_points(rng: &mut ChaCha8Rng, n: usize, m_max: u32) -> Vec<(f64, f64)> {
    let ok = |x: f64| (1..=m_max).all(|m| dist_int(m as f64 * x) * m as f64 >= KAPPA);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (a, c) = (rng.gen::<f64>(), rng.gen::<f64>());
        if ok(a) && ok(c) {
            out.push((a, c));
        }
    }
    out
}

fn special_fns(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let g = Group::SpecialFns;
    let strat = cfg.strategy;
    let zs: Vec<Complex64> =
        (0..10).map(|_| Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(-10.0..10.0))).collect();
    let gamma_zs = zs.clone();
    let strip: Vec<LerchParams> = (0..10)
        .map(|_| {
            let s = Complex64::new(rng.gen_range(0.05..0.95), rng.gen_range(-10.0..10.0));
            LerchParams::new(s, rng.gen_range(0.1..0.9), rng.gen_range(0.1..1.0))
        })
        .collect();
    let star: Vec<LerchParams> = (0..10)
        .map(|_| {
            let s = Complex64::new(rng.gen_range(-2.0..4.0), rng.gen_range(-10.0..10.0));
            LerchParams::new(s, rng.gen_range(0.1..0.9), rng.gen_range(0.1..0.9))
        })
        .collect();
    vec![
        Check::new(g, "gamma reflection G(z)G(1-z) = pi/sin(pi z)", "points=10", 1e-11, move || {
            let mut worst: f64 = 0.0;
            for &z in &gamma_zs {
                let lhs = complex_gamma(z).value * complex_gamma(1.0 - z).value;
                let rhs = PI / (z * PI).sin();
                worst = worst.max((lhs - rhs).norm() / rhs.norm());
            }
            Ok(worst)
        }),
        Check::new(g, "Tate gamma inversion g(s)g(1-s) = 1", "points=10, parities=+-", 1e-11, move || {
            let mut worst: f64 = 0.0;
            for &z in &zs {
                for p in Parity::BOTH {
                    let v = tate_gamma(z, p).value * tate_gamma(1.0 - z, p).value;
                    worst = worst.max((v - 1.0).norm());
                }
            }
            Ok(worst)
        }),
        Check::new(g, "zeta(2,0,1) = pi^2/6", "s=2, a=0, c=1", 1e-13, move || {
            let v = lerch_zeta(&LerchParams::real(2.0, 0.0, 1.0), &strat)?.value;
            Ok((v - PI * PI / 6.0).norm())
        }),
        Check::new(g, "zeta(2,1/2,1) = pi^2/12", "s=2, a=0.5, c=1", 1e-13, move || {
            let v = lerch_zeta(&LerchParams::real(2.0, 0.5, 1.0), &strat)?.value;
            Ok((v - PI * PI / 12.0).norm())
        }),
        Check::new(g, "Hurwitz zeta(2,1/2) = pi^2/2", "s=2, x=0.5", 1e-13, move || {
            let v = hurwitz(Complex64::new(2.0, 0.0), 0.5, &strat)?.value;
            Ok((v - PI * PI / 2.0).norm())
        }),
        Check::new(g, "strip: dispatcher agrees with Levin route", "points=10", 1e-9, move || {
            let mut worst: f64 = 0.0;
            for p in &strip {
                worst = worst.max(rel_diff(lerch_zeta(p, &strat)?.value, eval_strip(p, &strat)?.value));
            }
            Ok(worst)
        }),
        Check::new(g, "zeta* = (L+ + L-)/2", "points=10", 1e-12, move || {
            let mut worst: f64 = 0.0;
            for p in &star {
                let sum = l_pm(p, Parity::Plus, &strat)?.value + l_pm(p, Parity::Minus, &strat)?.value;
                worst = worst.max(rel_diff(lerch_star(p, &strat)?.value, sum / 2.0));
            }
            Ok(worst)
        }),
    ]
}

fn functional_equations(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let n = cfg.fe_points;
    let pts: Vec<LerchParams> = (0..n)
        .map(|k| {
            // first half on the critical line, second half anywhere in the strip
            let re = if k < n / 2 { 0.5 } else { rng.gen_range(0.01..0.99) };
            let s = Complex64::new(re, rng.gen_range(-20.0..20.0));
            LerchParams::new(s, rng.gen_range(0.01..0.99), rng.gen_range(0.01..0.99))
        })
        .collect();
    Parity::BOTH
        .into_iter()
        .map(|p| {
            let pts = pts.clone();
            let strat = cfg.strategy;
            let identity = format!("completed functional equation L^{}", p.symbol());
            Check::new(Group::FunctionalEquations, identity, format!("points={n}, |Im s|<=20"), 1e-7, move || {
                let mut worst: f64 = 0.0;
                for q in &pts {
                    worst = worst.max(functional_equation_residual(q, p, &strat)?);
                }
                Ok(worst)
            })
        })
        .collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// max over points of |lhs − scale·rhs|.
fn pointwise(lhs: &TwistedFn, rhs: &TwistedFn, scale: Complex64, pts: &[(f64, f64)]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &(a, c) in pts {
        worst = worst.max((lhs.eval(a, c)? - scale * rhs.eval(a, c)?).norm());
    }
    Ok(worst)
}

fn hecke_eigen(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let g = Group::HeckeEigen;
    let mut out = Vec::new();
    for &s in &cfg.hecke_s {
        let basis = build_eigenspace_with(s, cfg.strategy);
        let (f1, f2) = basis.active_members();
        let members = [f1.clone(), f2.clone()];
        let names = format!("{},{}", f1.label(), f2.label());
        let pts = separated_points(rng, cfg.hecke_points, cfg.hecke_m_max);
        let m_max = cfg.hecke_m_max;
        let params = format!("s={}, m=2..{m_max}, points={}, basis={names}", fmt_c(s), pts.len());
        let fam_pts = pts[..pts.len().min(10)].to_vec();
        let fam_members = members.clone();
        out.push(Check::new(g, "Hecke eigenfunction T_m F = m^-s F", params, 1e-8, move || {
            let mut worst: f64 = 0.0;
            for f in &members {
                let values: Vec<Complex64> = pts.iter().map(|&(a, c)| f.eval(a, c)).collect::<Result<_>>()?;
                for m in 2..=m_max {
                    let eig = Complex64::new(m as f64, 0.0).powc(-s);
                    let tf = apply_hecke(HeckeFamily::T, m, f)?;
                    for (&(a, c), &v) in pts.iter().zip(&values) {
                        worst = worst.max((tf.eval(a, c)? - eig * v).norm() / (1.0 + v.norm()));
                    }
                }
            }
            Ok(worst)
        }));
        let params = format!("s={}, m=2..6, points={}, families=S,Tv,Sv", fmt_c(s), fam_pts.len());
        out.push(Check::new(g, "Hecke invariance of E_s under S, Tv, Sv", params, 1e-8, move || {
            let mut worst: f64 = 0.0;
            for f in &fam_members {
                for m in 2..=6u32 {
                    let mf = Complex64::new(m as f64, 0.0);
                    for fam in [HeckeFamily::S, HeckeFamily::TVee, HeckeFamily::SVee] {
                        let eig = if fam == HeckeFamily::TVee { mf.powc(-s) } else { mf.powc(s - 1.0) };
                        let image = apply_hecke(fam, m, f)?;
                        for &(a, c) in &fam_pts {
                            let v = f.eval(a, c)?;
                            worst = worst.max((image.eval(a, c)? - eig * v).norm() / (1.0 + v.norm()));
                        }
                    }
                }
            }
            Ok(worst)
        }));
    }

    let m_max = cfg.algebra_m_max;
    let pts = off_lattice_points(rng, cfg.algebra_points, m_max * m_max * m_max, 0.0);
    let fns: Vec<TwistedFn> = (0..2).map(|k| test_function(cfg.seed, k)).collect();
    let params = format!("m,n<={m_max}, points={}, functions=2", pts.len());
    let job = |rule: fn(&TwistedFn, u32, u32, &[(f64, f64)]) -> Result<f64>| {
        let pts = pts.clone();
        let fns = fns.clone();
        move || {
            let mut worst: f64 = 0.0;
            for f in &fns {
                for m in 1..=m_max {
                    for n in 1..=m_max {
                        worst = worst.max(rule(f, m, n, &pts)?);
                    }
                }
            }
            Ok(worst)
        }
    };
    out.push(Check::new(g, "T_m T_n = T_mn", params.clone(), 1e-11, job(|f, m, n, pts| {
        let lhs = apply_hecke(HeckeFamily::T, m, &apply_hecke(HeckeFamily::T, n, f)?)?;
        pointwise(&lhs, &apply_hecke(HeckeFamily::T, m * n, f)?, Complex64::new(1.0, 0.0), pts)
    })));
    out.push(Check::new(g, "S_m T_mn = (1/m) T_n", params.clone(), 1e-11, job(|f, m, n, pts| {
        let lhs = apply_hecke(HeckeFamily::S, m, &apply_hecke(HeckeFamily::T, m * n, f)?)?;
        pointwise(&lhs, &apply_hecke(HeckeFamily::T, n, f)?, Complex64::new(1.0 / m as f64, 0.0), pts)
    })));
    out.push(Check::new(g, "Tv_m = T_m and Sv_m = S_m", params.clone(), 1e-11, job(|f, m, n, pts| {
        if n > 1 {
            return Ok(0.0);
        }
        let one = Complex64::new(1.0, 0.0);
        let t = pointwise(&apply_hecke(HeckeFamily::TVee, m, f)?, &apply_hecke(HeckeFamily::T, m, f)?, one, pts)?;
        let s = pointwise(&apply_hecke(HeckeFamily::SVee, m, f)?, &apply_hecke(HeckeFamily::S, m, f)?, one, pts)?;
        Ok(t.max(s))
    })));
    out.push(Check::new(g, "S_m T_n = T_n S_m for gcd(m,n) = 1", params, 1e-11, job(|f, m, n, pts| {
        if gcd(m, n) != 1 {
            return Ok(0.0);
        }
        let st = apply_hecke(HeckeFamily::S, m, &apply_hecke(HeckeFamily::T, n, f)?)?;
        let ts = apply_hecke(HeckeFamily::T, n, &apply_hecke(HeckeFamily::S, m, f)?)?;
        pointwise(&st, &ts, Complex64::new(1.0, 0.0), pts)
    })));
    out
}

const RELATIONS: [(OperatorSpec, OperatorSpec); 7] = [
    (OperatorSpec::DPlus, OperatorSpec::DMinus),
    (OperatorSpec::DPlus, OperatorSpec::RPow(1)),
    (OperatorSpec::DMinus, OperatorSpec::RPow(1)),
    (OperatorSpec::DL, OperatorSpec::RPow(1)),
    (OperatorSpec::DL, OperatorSpec::RPow(2)),
    (OperatorSpec::DeltaL, OperatorSpec::RPow(1)),
    (OperatorSpec::DeltaL, OperatorSpec::J),
];

/// Points far enough from the lattice for the h = 0.02 stencils.
const CONVERGENCE_POINTS: [(f64, f64); 3] = [(0.4, 0.45), (0.55, 0.6), (0.3, 0.7)];

fn commutators(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let g = Group::Commutators;
    let h = cfg.stencil_h;
    let mut out = Vec::new();
    let fns: Vec<TwistedFn> = (0..3).map(|k| test_function(cfg.seed, 100 + k)).collect();
    let pts = off_lattice_points(rng, 3, 1, 0.15);
    for (a, b) in RELATIONS {
        let name = relation_name(a, b).unwrap();
        let fns = fns.clone();
        let pts = pts.clone();
        let params = format!("h={h:e}, order=4, functions=3, points=3");
        out.push(Check::new(g, format!("commutator: {name}"), params, 1e-5, move || {
            let stencil = StencilConfig::new(h, StencilOrder::Fourth);
            let mut worst: f64 = 0.0;
            for f in &fns {
                worst = worst.max(commutator_residual(a, b, f, &pts, stencil)?.residual);
            }
            Ok(worst)
        }));
    }
    let f = test_function(cfg.seed, 200);
    for (a, b) in RELATIONS {
        let name = relation_name(a, b).unwrap();
        let f = f.clone();
        // residual is |observed order − 4|
        out.push(Check::new(g, format!("stencil order: {name}"), "h=0.02,0.01, order=4", 0.5, move || {
            let r = |h| -> Result<f64> {
                let stencil = StencilConfig::new(h, StencilOrder::Fourth);
                Ok(commutator_residual(a, b, &f, &CONVERGENCE_POINTS, stencil)?.residual)
            };
            let order = (r(0.02)? / r(0.01)?).log2();
            Ok((order - 4.0).abs())
        }));
    }
    let pts = off_lattice_points(rng, cfg.diff_points, 1, 0.05);
    for &s in &cfg.diff_s {
        let stencil = StencilConfig::new(h, StencilOrder::Fourth);
        let params = format!("s={}, h={h:e}, points={}", fmt_c(s), pts.len());
        let p1 = pts.clone();
        out.push(Check::new(g, "raising/lowering D-L_s = L_s-1, D+L_s = -s L_s+1", params.clone(), 1e-5, move || {
            Ok(raising_lowering_scan(s, &p1, stencil)?.residual)
        }));
        let p2 = pts.clone();
        out.push(Check::new(g, "D_L L_s = -s L_s and Delta_L L_s = (1/2 - s) L_s", params, 1e-5, move || {
            Ok(eigenvalue_scan(s, &p2, stencil)?.residual)
        }));
    }
    out
}

fn adjoint(cfg: &SuiteConfig) -> Vec<Check> {
    let g = Group::Adjoint;
    let (trials, order, seed, sup) = (cfg.trials, cfg.grid_order, cfg.seed, cfg.sup_samples);
    let mut out = Vec::new();
    for m in 1..=cfg.adjoint_m_max {
        let params = format!("m={m}, trials={trials}, grid={}x{order}", m.max(2));
        out.push(Check::new(g, "adjoint <T_m f, g> = <f, S_m g>", params.clone(), 1e-7, move || {
            Ok(adjoint_check(m, trials, &grid_for(m, order), seed)?.residual)
        }));
        out.push(Check::new(g, "norm identity ||sqrt(m) T_m f||_2 = ||f||_2", params, 1e-8, move || {
            Ok(norm_identity_check(m, trials, &grid_for(m, order), seed)?.residual)
        }));
    }
    for p in [1.0, 2.0] {
        let params = format!("p={p}, trials={trials}, grid=2x{order}");
        out.push(Check::new(g, "R isometry ||R f||_p = ||f||_p", params, 1e-9, move || {
            Ok(r_isometry_check(p, trials, &grid_for(2, order), seed)?.residual)
        }));
    }
    for m in 1..=cfg.adjoint_m_max {
        for p in [Exponent::Finite(1.0), Exponent::Finite(2.0), Exponent::Sup] {
            let params = format!("m={m}, p={p}, trials={trials}");
            // residual is the largest ||X_m f||_p / (m ||f||_p)
            out.push(Check::new(g, "L^p bound ||T_m f||_p <= m ||f||_p", params, 1.0, move || {
                Ok(lp_bound_check(m, p, trials, &grid_for(m, order), sup, seed)?.residual)
            }));
        }
    }
    out
}

fn characterization(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let g = Group::Characterization;
    let mut out = Vec::new();
    for &s in &cfg.eigen_s {
        let pts = off_lattice_points(rng, cfg.eigen_points, 1, 0.05);
        let strat = cfg.strategy;
        let params = format!("s={}, points={}", fmt_c(s), pts.len());
        let p = pts.clone();
        out.push(Check::new(g, "E_s Gram matrix rank = 2", params.clone(), 0.0, move || {
            Ok((gram_analysis(&build_eigenspace_with(s, strat), &p)?.rank as f64 - 2.0).abs())
        }));
        let p = pts.clone();
        // residual is 1/gap, so the tolerance asks for a gap above 1e6
        out.push(Check::new(g, "E_s singular-value gap", params.clone(), 1e-6, move || {
            Ok(1.0 / gram_analysis(&build_eigenspace_with(s, strat), &p)?.gap)
        }));
        let p = pts.clone();
        out.push(Check::new(g, "L_s = w gamma(1-s) R_s", params.clone(), 1e-8, move || {
            functional_link_residual(&build_eigenspace_with(s, strat), &p)
        }));
        let p = pts.clone();
        out.push(Check::new(g, "J eigenvalues +-1 on E_s", params.clone(), 1e-10, move || {
            j_residual(&build_eigenspace_with(s, strat), &p)
        }));
        out.push(Check::new(g, "R maps E_s to E_1-s", params, 1e-8, move || r_action_residual(s, &pts)));
    }
    let n = cfg.char_n;
    for &s in &cfg.char_s {
        let path = CharPath::for_s(s);
        let params = format!("s={}, path={path:?}, N={n}", fmt_c(s));
        let strat = cfg.strategy;
        out.push(Check::new(g, "characterize zeta*: (A, B) = (1, 0)", params.clone(), 1e-6, move || {
            let r = characterize(&TwistedFn::lerch_star_with(s, strat), s, path, n)?;
            Ok((r.a - 1.0).norm().max(r.b.norm()))
        }));
        out.push(Check::new(g, "characterize zeta*: reconstruction residual", params, 1e-6, move || {
            Ok(characterize(&TwistedFn::lerch_star_with(s, strat), s, path, n)?.residual)
        }));
    }
    if let Some(&s) = cfg.char_s.iter().find(|s| s.re > 0.0) {
        let params = format!("s={}, path=APath, N={n}", fmt_c(s));
        // residual 0 when rejected, 1 when accepted
        out.push(Check::new(g, "characterize rejects untwisted c^-s", params, 0.0, move || {
            let f = TwistedFn::periodic("c^-s", move |_, c| Ok((-s * c.ln()).exp()));
            match characterize(&f, s, CharPath::APath, n) {
                Err(LerchError::IdentityViolation(_)) => Ok(0.0),
                Ok(_) => Ok(1.0),
                Err(e) => Err(e),
            }
        }));
    }
    out
}

fn milnor_baseline(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let xs: Vec<f64> = (0..10).map(|_| rng.gen_range(0.01..0.99)).collect();
    let m_max = cfg.milnor_m_max;
    cfg.milnor_s
        .iter()
        .map(|&s| {
            let xs = xs.clone();
            let strat = cfg.strategy;
            let params = format!("s={}, m=2..{m_max}, points={}", fmt_c(s), xs.len());
            Check::new(Group::MilnorBaseline, "Kubert K_m zeta(1-s, x) = m^-s zeta(1-s, x)", params, 1e-9, move || {
                let mut worst: f64 = 0.0;
                for m in 2..=m_max {
                    worst = worst.max(milnor_residual(s, m, &xs, &strat)?);
                }
                Ok(worst)
            })
        })
        .collect()
}

/// Σ_{m>M} m^(−σ) < M^(1−σ)/(σ−1).
fn tail_bound(sigma: f64, big_m: u32) -> f64 {
    (big_m as f64).powf(1.0 - sigma) / (sigma - 1.0)
}

fn zeta_operator(cfg: &SuiteConfig, rng: &mut ChaCha8Rng) -> Vec<Check> {
    let (s, big_m, strat) = (cfg.zeta_op_s, cfg.zeta_op_terms, cfg.strategy);
    let pts = separated_points(rng, cfg.zeta_op_points, big_m);
    pts.into_iter()
        .map(|(a, c)| {
            let params = format!("s={}, M={big_m}, a={a:.6}, c={c:.6}", fmt_c(s));
            // residual is the error as a fraction of the tail bound
            Check::new(Group::ZetaOperator, "zeta operator sum_{m<=M} T_m zeta = zeta(s) zeta(s,a,c)", params, 1.0, move || {
                if s.re <= 1.0 {
                    return Err(LerchError::Domain(format!("zeta operator needs Re s > 1, got {s}")));
                }
                let f = TwistedFn::new(format!("zeta({})", fmt_c(s)), 1, move |a, c| {
                    Ok(lerch_zeta(&LerchParams::new(s, a, c), &strat)?.value)
                });
                let sum = zeta_operator_partial(big_m, &f, a, c)?;
                let value = f.eval(a, c)?;
                let riemann = hurwitz(s, 1.0, &strat)?.value;
                let bound = tail_bound(s.re, big_m) * value.norm();
                Ok((sum - riemann * value).norm() / bound)
            })
        })
        .collect()
}

/// Human-readable summary of the s-lists a config will exercise.
pub fn describe(cfg: &SuiteConfig) -> String {
    format!(
        "seed={} groups={} hecke_s=[{}] diff_s=[{}] eigen_s=[{}] char_s=[{}] milnor_s=[{}]",
        cfg.seed,
        cfg.groups.iter().map(|g| g.name()).collect::<Vec<_>>().join(","),
        fmt_list(&cfg.hecke_s),
        fmt_list(&cfg.diff_s),
        fmt_list(&cfg.eigen_s),
        fmt_list(&cfg.char_s),
        fmt_list(&cfg.milnor_s),
    )
}
