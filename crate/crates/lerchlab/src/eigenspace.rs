//! The Lerch eigenspace E_s and recovery of eigenfunctions from Fourier data.
//!
//! E_s is spanned by four functions of which any two independent ones suffice:
//!
//! ```text
//! L^±_s(a,c) = L^±(s, a, c)
//! R^±_s(a,c) = e^(−2πiac) L^±(1−s, 1−c, a)
//! L^±_s      = w_± γ^±(1−s) R^±_s
//! ```
//!
//! For Re s > 0 the L pair is used, otherwise the R pair. L^+_s vanishes
//! identically at s = 0, −2, −4, …, L^−_s at s = −1, −3, …; the R functions
//! vanish at the mirrored points s = 1, 3, … and s = 2, 4, ….
//!
//! [`characterize`] takes a candidate F, computes one family of Fourier
//! coefficients, checks the Hecke relations they must satisfy, fits the two
//! constants A and B, and rebuilds F from them.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{LerchError, Result};
use crate::lerch::{hurwitz, StrategyConfig};
use crate::quadrature::SliceRule;
use crate::special_functions::{expi2pi, root_number, tate_gamma, Parity};
use crate::twisted::{apply_j, apply_r, kubert_1d, TwistedFn};

/// One of the four spanning functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasisMember {
    LPlus,
    LMinus,
    RPlus,
    RMinus,
}

/// Which pair of spanning functions is the working basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ActivePair {
    L,
    R,
}

#[derive(Debug, Clone)]
pub struct EigenBasis {
    pub s: Complex64,
    pub l_plus: TwistedFn,
    pub l_minus: TwistedFn,
    pub r_plus: TwistedFn,
    pub r_minus: TwistedFn,
    pub active: ActivePair,
    /// Members that vanish identically at this s.
    pub vanishing: Vec<BasisMember>,
}

impl EigenBasis {
    pub fn member(&self, which: BasisMember) -> &TwistedFn {
        match which {
            BasisMember::LPlus => &self.l_plus,
            BasisMember::LMinus => &self.l_minus,
            BasisMember::RPlus => &self.r_plus,
            BasisMember::RMinus => &self.r_minus,
        }
    }

    pub const ORDER: [BasisMember; 4] = [BasisMember::LPlus, BasisMember::LMinus, BasisMember::RPlus, BasisMember::RMinus];

    pub fn is_vanishing(&self, which: BasisMember) -> bool {
        self.vanishing.contains(&which)
    }

    /// The (+, −) functions of the active pair.
    pub fn active_members(&self) -> (&TwistedFn, &TwistedFn) {
        match self.active {
            ActivePair::L => (&self.l_plus, &self.l_minus),
            ActivePair::R => (&self.r_plus, &self.r_minus),
        }
    }
}

/// Integer t ≤ 0 with the parity of `p`: 0, −2, … for +; −1, −3, … for −.
fn l_vanishes(t: Complex64, p: Parity) -> bool {
    if t.im != 0.0 || t.re > 0.0 || t.re != t.re.round() {
        return false;
    }
    let k = (-t.re) as i64;
    match p {
        Parity::Plus => k % 2 == 0,
        Parity::Minus => k % 2 == 1,
    }
}

/// Builds the four spanning functions and picks the active pair.
pub fn build_eigenspace(s: Complex64) -> EigenBasis {
    build_eigenspace_with(s, StrategyConfig::default())
}

pub fn build_eigenspace_with(s: Complex64, cfg: StrategyConfig) -> EigenBasis {
    let mut vanishing = Vec::new();
    for (p, l, r) in [(Parity::Plus, BasisMember::LPlus, BasisMember::RPlus), (Parity::Minus, BasisMember::LMinus, BasisMember::RMinus)] {
        if l_vanishes(s, p) {
            vanishing.push(l);
        }
        if l_vanishes(1.0 - s, p) {
            vanishing.push(r);
        }
    }
    EigenBasis {
        s,
        l_plus: TwistedFn::l_pm_with(s, Parity::Plus, cfg),
        l_minus: TwistedFn::l_pm_with(s, Parity::Minus, cfg),
        r_plus: TwistedFn::r_pm_with(s, Parity::Plus, cfg),
        r_minus: TwistedFn::r_pm_with(s, Parity::Minus, cfg),
        active: if s.re > 0.0 { ActivePair::L } else { ActivePair::R },
        vanishing,
    }
}

/// max |L^±_s − w_± γ^±(1−s) R^±_s| / (1 + |L^±_s|) over the samples.
///
/// Where γ^±(1−s) has a pole R^±_s vanishes and the pair is skipped.
pub fn functional_link_residual(basis: &EigenBasis, samples: &[(f64, f64)]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for p in Parity::BOTH {
        let g = tate_gamma(1.0 - basis.s, p);
        if g.is_pole {
            continue;
        }
        let k = root_number(p) * g.value;
        let (l, r) = match p {
            Parity::Plus => (&basis.l_plus, &basis.r_plus),
            Parity::Minus => (&basis.l_minus, &basis.r_minus),
        };
        for &(a, c) in samples {
            let lv = l.eval(a, c)?;
            worst = worst.max((lv - k * r.eval(a, c)?).norm() / (1.0 + lv.norm()));
        }
    }
    Ok(worst)
}

/// Singular values of the 4×4 Gram matrix of the spanning set on a sample set.
#[derive(Debug, Clone, Serialize)]
pub struct GramAnalysis {
    pub singular_values: Vec<f64>,
    pub rank: usize,
    /// σ₂/σ₃, the separation between the two kept and two dropped directions.
    pub gap: f64,
}

/// Relative threshold below which a Gram singular value counts as zero.
const RANK_TOL: f64 = 1e-9;

/// Each member is sampled and normalized to unit ℓ² norm (vanishing members
/// stay zero), then G = M M* is decomposed.
pub fn gram_analysis(basis: &EigenBasis, samples: &[(f64, f64)]) -> Result<GramAnalysis> {
    let k = samples.len();
    let mut m = DMatrix::<Complex64>::zeros(4, k);
    for (i, which) in EigenBasis::ORDER.into_iter().enumerate() {
        let f = basis.member(which);
        for (j, &(a, c)) in samples.iter().enumerate() {
            m[(i, j)] = f.eval(a, c)?;
        }
        let norm = m.row(i).norm();
        if norm > 0.0 && !basis.is_vanishing(which) {
            m.row_mut(i).scale_mut(1.0 / norm);
        } else {
            m.row_mut(i).fill(Complex64::new(0.0, 0.0));
        }
    }
    let gram = &m * m.adjoint();
    let mut sv: Vec<f64> = gram.singular_values().iter().copied().collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    let rank = sv.iter().filter(|&&x| x > RANK_TOL * sv[0]).count();
    let gap = if sv[2] > 0.0 { sv[1] / sv[2] } else { f64::INFINITY };
    Ok(GramAnalysis { singular_values: sv, rank, gap })
}

/// The J-eigenbasis (F⁺, F⁻) with J F^± = ±F^±: the active pair itself.
pub fn j_split(basis: &EigenBasis) -> Result<(TwistedFn, TwistedFn)> {
    let pair = match basis.active {
        ActivePair::L => [BasisMember::LPlus, BasisMember::LMinus],
        ActivePair::R => [BasisMember::RPlus, BasisMember::RMinus],
    };
    if let Some(v) = pair.iter().find(|w| basis.is_vanishing(**w)) {
        return Err(LerchError::Degenerate(format!("{v:?} vanishes identically at s = {}", basis.s)));
    }
    let (plus, minus) = basis.active_members();
    Ok((plus.clone(), minus.clone()))
}

/// max |J F^± ∓ F^±| / (1 + |F^±|) over all four members.
pub fn j_residual(basis: &EigenBasis, samples: &[(f64, f64)]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for (f, sign) in [(&basis.l_plus, 1.0), (&basis.l_minus, -1.0), (&basis.r_plus, 1.0), (&basis.r_minus, -1.0)] {
        let jf = apply_j(f);
        for &(a, c) in samples {
            let v = f.eval(a, c)?;
            worst = worst.max((jf.eval(a, c)? - sign * v).norm() / (1.0 + v.norm()));
        }
    }
    Ok(worst)
}

/// max |R(L^±_s) − w_±⁻¹ γ^±(1−s) L^±_{1−s}| / (1 + |R L^±_s|).
///
/// A parity where γ^±(1−s) has a pole is skipped: there L^±_{1−s} vanishes
/// and the right side is the indeterminate ∞·0. If both are skipped the
/// result is a degenerate error.
pub fn r_action_residual(s: Complex64, samples: &[(f64, f64)]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    for p in Parity::BOTH {
        let g = tate_gamma(1.0 - s, p);
        if g.is_pole {
            continue;
        }
        checked += 1;
        let k = g.value / root_number(p);
        let rl = apply_r(&TwistedFn::l_pm(s, p), 1);
        let target = TwistedFn::l_pm(1.0 - s, p);
        for &(a, c) in samples {
            let v = rl.eval(a, c)?;
            worst = worst.max((v - k * target.eval(a, c)?).norm() / (1.0 + v.norm()));
        }
    }
    if checked == 0 {
        return Err(LerchError::Degenerate(format!("both gamma factors have poles at 1-s = {}", 1.0 - s)));
    }
    Ok(worst)
}

/// The variable integrated over in a Fourier slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SliceAxis {
    /// f_n(c) = ∫₀¹ F(a,c) e^(−2πina) da at fixed c.
    AAxis,
    /// g_n(a) = ∫₀¹ e^(2πiac) F(a,c) e^(−2πinc) dc at fixed a.
    CAxis,
}

#[derive(Debug, Clone, Serialize)]
pub struct FourierSlice {
    pub axis: SliceAxis,
    pub fixed_coord: f64,
    pub n_min: i64,
    /// Coefficient of index n is `coefficients[n − n_min]`.
    pub coefficients: Vec<Complex64>,
    /// False when the top quarter of |n| is not smaller than the rest, which
    /// suggests F is not integrable on the slice.
    pub decaying: bool,
}

impl FourierSlice {
    pub fn n_range(&self) -> std::ops::RangeInclusive<i64> {
        self.n_min..=self.n_min + self.coefficients.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Option<Complex64> {
        if self.n_range().contains(&n) {
            Some(self.coefficients[(n - self.n_min) as usize])
        } else {
            None
        }
    }
}

/// Panels per lattice cell and Gauss–Legendre order for slices.
const SLICE_PANELS: usize = 24;
const SLICE_ORDER: usize = 20;

/// Coefficients n = −N..=N on one slice, by graded Gauss–Legendre with
/// breakpoints at F's lattice.
pub fn fourier_slice(f: &TwistedFn, axis: SliceAxis, fixed_coord: f64, n_max: i64) -> Result<FourierSlice> {
    if n_max < 1 {
        return Err(LerchError::Domain("fourier_slice needs N >= 1".into()));
    }
    let d = f.denominator();
    let breaks: Vec<f64> = (1..d).map(|k| k as f64 / d as f64).collect();
    let panels = (SLICE_PANELS as u64).div_ceil(d).max(2) as usize;
    let rule = SliceRule::graded(&breaks, panels, SLICE_ORDER);
    let values = match axis {
        SliceAxis::AAxis => rule.samples(|x| f.eval(x, fixed_coord))?,
        SliceAxis::CAxis => rule.samples(|x| Ok(expi2pi(fixed_coord * x) * f.eval(fixed_coord, x)?))?,
    };
    let (values, gaps) = rule.prepare(&values);
    let coefficients: Vec<Complex64> = (-n_max..=n_max)
        .map(|n| {
            let body: Complex64 = rule
                .nodes
                .iter()
                .zip(&values)
                .map(|(&(x, w), &v)| w * v * expi2pi(-(n as f64) * x))
                .sum();
            let gap: Complex64 = gaps.iter().map(|&(x, g)| g * expi2pi(-(n as f64) * x)).sum();
            body + gap
        })
        .collect();
    let mags: Vec<f64> = (-n_max..=n_max).map(|n| coefficients[(n + n_max) as usize].norm()).collect();
    let cut = 3 * n_max / 4;
    let tail = (-n_max..=n_max).filter(|n| n.abs() > cut).map(|n| mags[(n + n_max) as usize]).fold(0.0, f64::max);
    let head = (-n_max..=n_max).filter(|n| n.abs() <= cut).map(|n| mags[(n + n_max) as usize]).fold(0.0, f64::max);
    Ok(FourierSlice { axis, fixed_coord, n_min: -n_max, coefficients, decaying: tail <= 0.5 * head || head == 0.0 })
}

/// Which coefficient family drives the characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharPath {
    /// a-Fourier coefficients; needs Re s > 0.
    APath,
    /// c-Fourier coefficients of e^(2πiac)F; needs Re s < 1.
    CPath,
}

impl CharPath {
    /// The path whose basis cannot vanish at s.
    pub fn for_s(s: Complex64) -> Self {
        if s.re > 0.0 {
            CharPath::APath
        } else {
            CharPath::CPath
        }
    }
}

impl std::str::FromStr for CharPath {
    type Err = LerchError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "a_path" | "a-path" => Ok(CharPath::APath),
            "c" | "c_path" | "c-path" => Ok(CharPath::CPath),
            other => Err(LerchError::Config(format!("unknown characterization path '{other}'"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CharacterizationResult {
    pub a: Complex64,
    pub b: Complex64,
    /// max |F − H| over the test points.
    pub residual: f64,
    /// Largest deviation of a normalized coefficient from its fitted constant,
    /// relative to max(1, |A|, |B|).
    pub spread: f64,
    /// Largest violation of the Hecke and shift coefficient relations, same scale.
    pub relation_residual: f64,
    pub matched: TwistedFn,
}

/// Fixed coordinates used for slices; their 2- and 3-multiples stay at
/// least 0.05 away from the integers.
const SLICE_COORDS: [f64; 5] = [0.15, 0.3, 0.45, 0.6, 0.85];
/// Coefficient-relation tolerance, relative to max(1, |A|, |B|).
const RELATION_TOL: f64 = 1e-6;

/// |x|^z for real x ≠ 0.
fn abs_pow(x: f64, z: Complex64) -> Complex64 {
    (z * x.abs().ln()).exp()
}

/// One coefficient: index, which side of the jump it is on, the normalized
/// value f̃_n = |n + c|^s f_n(c) (a-path) or g̃_n = |a − n|^(1−s) g_n(a)
/// (c-path), and the raw value.
#[derive(Debug, Clone, Copy)]
struct Coef {
    n: i64,
    positive: bool,
    normalized: Complex64,
    raw: Complex64,
}

fn normalized(f: &TwistedFn, s: Complex64, path: CharPath, coord: f64, n_max: i64) -> Result<Vec<Coef>> {
    let out = match path {
        CharPath::APath => {
            let sl = fourier_slice(f, SliceAxis::AAxis, coord, n_max)?;
            sl.n_range()
                .map(|n| {
                    let x = n as f64 + coord;
                    let raw = sl.get(n).unwrap();
                    Coef { n, positive: x > 0.0, normalized: abs_pow(x, s) * raw, raw }
                })
                .collect()
        }
        CharPath::CPath => {
            let sl = fourier_slice(f, SliceAxis::CAxis, coord, n_max)?;
            sl.n_range()
                .map(|n| {
                    let x = coord - n as f64;
                    let raw = sl.get(n).unwrap();
                    Coef { n, positive: x > 0.0, normalized: abs_pow(x, 1.0 - s) * raw, raw }
                })
                .collect()
        }
    };
    Ok(out)
}

/// Recovers (A, B) with F = ½(A+B)·X⁺ + ½(A−B)·X⁻, X = L_s on the a-path and
/// R_s on the c-path.
///
/// Fails with [`LerchError::IdentityViolation`] when the normalized
/// coefficients are not piecewise constant, or when the Hecke relation
/// f_{mn}(mc) = m^(−s) f_n(c) (a-path), g_{mn−k}(a) = m^(s−1) g_n((a+k)/m)
/// (c-path) or the unit-shift relation fails.
pub fn characterize(f: &TwistedFn, s: Complex64, path: CharPath, n_max: i64) -> Result<CharacterizationResult> {
    match path {
        CharPath::APath if s.re <= 0.0 => {
            return Err(LerchError::Domain(format!("a-path needs Re s > 0, got {s}")));
        }
        CharPath::CPath if s.re >= 1.0 => {
            return Err(LerchError::Domain(format!("c-path needs Re s < 1, got {s}")));
        }
        _ => {}
    }
    let base: Vec<Vec<Coef>> = SLICE_COORDS.iter().map(|&x| normalized(f, s, path, x, n_max)).collect::<Result<_>>()?;

    // least squares of the raw coefficients against A·u_n and B·u_n, where
    // u_n = raw/normalized is the model profile; this weights the large,
    // accurately computed coefficients most
    let (mut num_a, mut den_a, mut num_b, mut den_b) = (Complex64::new(0.0, 0.0), 0.0, Complex64::new(0.0, 0.0), 0.0);
    for e in base.iter().flatten() {
        let u = if e.normalized.norm() > 0.0 { e.raw / e.normalized } else { continue };
        if e.positive {
            num_a += u.conj() * e.raw;
            den_a += u.norm_sqr();
        } else {
            num_b += u.conj() * e.raw;
            den_b += u.norm_sqr();
        }
    }
    let a_const = if den_a > 0.0 { num_a / den_a } else { Complex64::new(0.0, 0.0) };
    let b_const = if den_b > 0.0 { num_b / den_b } else { Complex64::new(0.0, 0.0) };
    let scale = 1f64.max(a_const.norm()).max(b_const.norm());
    let mut spread: f64 = 0.0;
    for e in base.iter().flatten() {
        let fit = if e.positive { a_const } else { b_const };
        spread = spread.max((e.normalized - fit).norm() / scale);
    }

    let relation = relation_residual(f, s, path, n_max, &base)? / scale;
    if spread > RELATION_TOL || relation > RELATION_TOL {
        return Err(LerchError::IdentityViolation(format!(
            "{}: normalized coefficients spread {spread:.3e}, coefficient relations {relation:.3e}",
            f.label()
        )));
    }

    let (plus, minus) = match path {
        CharPath::APath => (TwistedFn::l_pm(s, Parity::Plus), TwistedFn::l_pm(s, Parity::Minus)),
        CharPath::CPath => (TwistedFn::r_pm(s, Parity::Plus), TwistedFn::r_pm(s, Parity::Minus)),
    };
    let matched = plus.linear_combination(0.5 * (a_const + b_const), &minus, 0.5 * (a_const - b_const));
    let mut residual: f64 = 0.0;
    for &(x, y) in &test_points() {
        residual = residual.max((f.eval(x, y)? - matched.eval(x, y)?).norm());
    }
    Ok(CharacterizationResult { a: a_const, b: b_const, residual, spread, relation_residual: relation, matched })
}

/// Reconstruction test points, away from the lattices of small denominators.
fn test_points() -> Vec<(f64, f64)> {
    (0..12)
        .map(|k| {
            let t = k as f64;
            (0.1 + 0.8 * ((t * 0.618_033_988_75).fract()), 0.1 + 0.8 * ((t * 0.414_213_562_37 + 0.3).fract()))
        })
        .collect()
}

/// Hecke and unit-shift relations between normalized coefficients.
fn relation_residual(f: &TwistedFn, s: Complex64, path: CharPath, n_max: i64, base: &[Vec<Coef>]) -> Result<f64> {
    let lookup = |row: &[Coef], n: i64| row.iter().find(|e| e.n == n).map(|e| e.normalized);
    let mut worst: f64 = 0.0;
    for (i, &x) in SLICE_COORDS.iter().enumerate() {
        // unit shift: f̃_n(c+1) = f̃_{n+1}(c), g̃_n(a+1) = g̃_{n−1}(a)
        let shifted = normalized(f, s, path, x + 1.0, n_max)?;
        for &Coef { n, normalized: v, .. } in &shifted {
            let partner = match path {
                CharPath::APath => n + 1,
                CharPath::CPath => n - 1,
            };
            if let Some(w) = lookup(&base[i], partner) {
                worst = worst.max((v - w).norm());
            }
        }
    }
    match path {
        CharPath::APath => {
            // f̃_{mn}(mc) = f̃_n(c)
            for (i, &c) in SLICE_COORDS.iter().enumerate() {
                for m in [2i64, 3] {
                    let dilated = normalized(f, s, path, m as f64 * c, n_max)?;
                    for n in -(n_max / m)..=(n_max / m) {
                        if let (Some(u), Some(v)) = (lookup(&dilated, m * n), lookup(&base[i], n)) {
                            worst = worst.max((u - v).norm());
                        }
                    }
                }
            }
        }
        CharPath::CPath => {
            // g̃_{mn−k}(a) = g̃_n((a+k)/m), m = 2
            let m = 2i64;
            for (i, &a) in SLICE_COORDS.iter().enumerate() {
                for k in 0..m {
                    let shrunk = normalized(f, s, path, (a + k as f64) / m as f64, n_max)?;
                    for n in -(n_max / m)..=(n_max / m) {
                        if let (Some(u), Some(v)) = (lookup(&base[i], m * n - k), lookup(&shrunk, n)) {
                            worst = worst.max((u - v).norm());
                        }
                    }
                }
            }
        }
    }
    Ok(worst)
}

/// Kubert eigenfunction residual for the Hurwitz pair ζ(1−s, x), ζ(1−s, 1−x):
/// max |K_m f − m^(−s) f| / (1 + |f|) over the samples x ∈ (0,1).
pub fn milnor_residual(s: Complex64, m: u32, samples: &[f64], cfg: &StrategyConfig) -> Result<f64> {
    let sigma = 1.0 - s;
    let eig = Complex64::new(m as f64, 0.0).powc(-s);
    let plain = |x: f64| Ok(hurwitz(sigma, x, cfg)?.value);
    let mirrored = |x: f64| Ok(hurwitz(sigma, 1.0 - x, cfg)?.value);
    let mut worst: f64 = 0.0;
    for &x in samples {
        for (k, v) in [(kubert_1d(m, plain, x)?, plain(x)?), (kubert_1d(m, mirrored, x)?, mirrored(x)?)] {
            worst = worst.max((k - eig * v).norm() / (1.0 + v.norm()));
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vanishing_members_flagged() {
        let b = build_eigenspace(Complex64::new(3.0, 0.0));
        assert_eq!(b.vanishing, vec![BasisMember::RPlus]);
        let b = build_eigenspace(Complex64::new(-2.0, 0.0));
        assert_eq!(b.vanishing, vec![BasisMember::LPlus]);
        assert_eq!(b.active, ActivePair::R);
        let b = build_eigenspace(Complex64::new(0.5, 1.0));
        assert!(b.vanishing.is_empty());
        assert_eq!(b.active, ActivePair::L);
    }

    #[test]
    fn vanishing_member_is_zero() {
        let b = build_eigenspace(Complex64::new(3.0, 0.0));
        assert!(b.r_plus.eval(0.3, 0.6).unwrap().norm() < 1e-12);
        assert!(b.r_minus.eval(0.3, 0.6).unwrap().norm() > 1e-3);
    }

    #[test]
    fn path_parsing() {
        assert_eq!("a".parse::<CharPath>().unwrap(), CharPath::APath);
        assert_eq!("c_path".parse::<CharPath>().unwrap(), CharPath::CPath);
        assert!("b".parse::<CharPath>().is_err());
        assert_eq!(CharPath::for_s(Complex64::new(-1.0, 0.0)), CharPath::CPath);
    }

    #[test]
    fn path_preconditions() {
        let f = TwistedFn::lerch_star(Complex64::new(2.0, 0.0));
        assert!(characterize(&f, Complex64::new(2.0, 0.0), CharPath::CPath, 8).is_err());
        assert!(characterize(&f, Complex64::new(-1.0, 0.0), CharPath::APath, 8).is_err());
    }
}
