//! Gauss–Legendre quadrature on the unit interval and the unit square.
//!
//! Two kinds of rule are provided. [`QuadratureGrid`] is a tensor rule on
//! uniform panels, meant for smooth integrands such as the bump test functions.
//! [`SliceRule`] is a one-dimensional rule whose panels shrink geometrically
//! toward every breakpoint. It is used for Fourier slices of Lerch functions,
//! which carry integrable power singularities |x|^(σ−1) at the lattice lines.

use gauss_quad::legendre::GaussLegendre;
use num_complex::Complex64;
use rayon::prelude::*;
use std::num::NonZeroUsize;

use crate::error::{LerchError, Result};
use crate::twisted::{TwistedFn, GRID_TOL};

/// Gauss–Legendre nodes and weights mapped to [0, 1].
fn unit_rule(order: usize) -> Vec<(f64, f64)> {
    let n = NonZeroUsize::new(order.max(1)).expect("order is at least 1");
    GaussLegendre::new(n)
        .as_node_weight_pairs()
        .iter()
        .map(|&(x, w)| (0.5 * (x + 1.0), 0.5 * w))
        .collect()
}

/// Tensor-product rule on (0,1)² with `panels_per_axis` equal panels per axis.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    pub nodes: Vec<(f64, f64, f64)>,
    pub panels_per_axis: usize,
    pub order: usize,
}

impl QuadratureGrid {
    pub fn new(panels_per_axis: usize, order: usize) -> Self {
        let rule = unit_rule(order);
        let p = panels_per_axis.max(1);
        let h = 1.0 / p as f64;
        let line: Vec<(f64, f64)> = (0..p)
            .flat_map(|i| rule.iter().map(move |&(x, w)| ((i as f64 + x) * h, w * h)))
            .collect();
        let nodes = line
            .iter()
            .flat_map(|&(a, wa)| line.iter().map(move |&(c, wc)| (a, c, wa * wc)))
            .collect();
        QuadratureGrid { nodes, panels_per_axis: p, order }
    }

    /// A grid whose panel edges include the lattice (1/d)ℤ, so no panel straddles a discontinuity.
    pub fn aligned(denominator: u64, min_panels: usize, order: usize) -> Self {
        let d = denominator.max(1) as usize;
        let p = min_panels.max(1).div_ceil(d) * d;
        QuadratureGrid::new(p, order)
    }

    /// The same scheme with twice the panels per axis.
    pub fn refined(&self) -> Self {
        QuadratureGrid::new(2 * self.panels_per_axis, self.order)
    }

    pub fn integrate<F>(&self, f: F) -> Result<Complex64>
    where
        F: Fn(f64, f64) -> Result<Complex64> + Sync,
    {
        let parts: Result<Vec<Complex64>> = self.nodes.par_iter().map(|&(a, c, w)| Ok(w * f(a, c)?)).collect();
        Ok(parts?.into_iter().sum())
    }

    /// ∫∫ |F|^p da dc.
    pub fn integrate_abs_pow(&self, f: &TwistedFn, p: f64) -> Result<f64> {
        let parts: Result<Vec<f64>> =
            self.nodes.par_iter().map(|&(a, c, w)| Ok(w * f.eval(a, c)?.norm().powf(p))).collect();
        Ok(parts?.into_iter().sum())
    }
}

/// An inner product together with the change under one panel refinement.
#[derive(Debug, Clone, Copy)]
pub struct InnerProduct {
    pub value: Complex64,
    pub error_estimate: f64,
}

/// ⟨F, G⟩ = ∫∫ F·conj(G) da dc on `grid` and on its refinement; returns the refined value.
pub fn inner_product(f: &TwistedFn, g: &TwistedFn, grid: &QuadratureGrid) -> Result<InnerProduct> {
    let integrand = |a: f64, c: f64| Ok(f.eval(a, c)? * g.eval(a, c)?.conj());
    let coarse = grid.integrate(integrand)?;
    let fine = grid.refined().integrate(integrand)?;
    Ok(InnerProduct { value: fine, error_estimate: (fine - coarse).norm() })
}

/// L^p norm on the unit square, p ≥ 1.
pub fn lp_norm(f: &TwistedFn, p: f64, grid: &QuadratureGrid) -> Result<f64> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(LerchError::Domain(format!("L^p norm needs finite p >= 1, got {p}")));
    }
    Ok(grid.integrate_abs_pow(f, p)?.powf(1.0 / p))
}

/// Sampled sup norm over an n×n midpoint lattice. A lower bound for the true sup.
pub fn sup_norm_sampled(f: &TwistedFn, n: usize) -> Result<f64> {
    let h = 1.0 / n as f64;
    let vals: Result<Vec<f64>> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / n, k % n);
            // the irrational offset keeps samples off every small-denominator lattice
            let a = (i as f64 + 0.5 + 0.1 * std::f64::consts::FRAC_1_SQRT_2) * h;
            let c = (j as f64 + 0.5 + 0.1 * std::f64::consts::FRAC_1_SQRT_2) * h;
            Ok(f.eval(a, c)?.norm())
        })
        .collect();
    Ok(vals?.into_iter().fold(0.0, f64::max))
}

/// Ratio of successive panel widths in the geometric grading.
const GRADING: f64 = 0.15;
/// Grading stops once panels are this narrow. The gap of width 2·GRID_TOL left
/// at each breakpoint contributes about (2e-13)^σ/σ for an |x|^(σ−1) singularity.
const GRADE_FLOOR: f64 = 1e-12;

/// One-dimensional rule on (0, 1), graded toward each breakpoint.
///
/// Nodes stop 2·GRID_TOL short of every breakpoint. The skipped gap is filled
/// by [`SliceRule::prepare`], which fits v(t) ≈ C·t^(−α) through the two
/// nodes nearest the breakpoint and integrates the fit over the gap.
#[derive(Debug, Clone)]
pub struct SliceRule {
    pub nodes: Vec<(f64, f64)>,
    ends: Vec<GapEnd>,
    /// For graded nodes: the end they belong to and their intended distance.
    anchors: Vec<Option<(usize, f64)>>,
}

/// A breakpoint side: the node indices nearest to it and the gap width.
#[derive(Debug, Clone, Copy)]
struct GapEnd {
    breakpoint: f64,
    gap: f64,
    inner: usize,
    next: usize,
}

impl SliceRule {
    /// `breaks` are interior breakpoints in (0,1); 0 and 1 are always included.
    /// Each interval gets `panels` uniform panels, and its two end panels are
    /// subdivided geometrically.
    pub fn graded(breaks: &[f64], panels: usize, order: usize) -> Self {
        let rule = unit_rule(order);
        let mut pts = vec![0.0];
        pts.extend(breaks.iter().copied().filter(|&b| b > 0.0 && b < 1.0));
        pts.push(1.0);
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        let mut rule_out = SliceRule { nodes: Vec::new(), ends: Vec::new(), anchors: Vec::new() };
        let eps = 2.0 * GRID_TOL;
        for win in pts.windows(2) {
            let (lo, hi) = (win[0], win[1]);
            let p = panels.max(2);
            let h = (hi - lo) / p as f64;
            for i in 1..p - 1 {
                let a = lo + i as f64 * h;
                for &(x, w) in &rule {
                    rule_out.nodes.push((a + h * x, h * w));
                    rule_out.anchors.push(None);
                }
            }
            // graded end panels, laid out by distance t from the breakpoint
            for (bp, dir) in [(lo, 1.0), (hi, -1.0)] {
                let end = rule_out.ends.len();
                let mut w = h;
                let inner_pair = loop {
                    let inner = if w * GRADING >= GRADE_FLOOR { w * GRADING } else { eps };
                    let first = rule_out.nodes.len();
                    for &(x, wt) in &rule {
                        let t = inner + (w - inner) * x;
                        rule_out.nodes.push((bp + dir * t, (w - inner) * wt));
                        rule_out.anchors.push(Some((end, t)));
                    }
                    if inner == eps {
                        let mut idx: Vec<usize> = (first..rule_out.nodes.len()).collect();
                        idx.sort_by(|&i, &j| (rule_out.nodes[i].0 - bp).abs().total_cmp(&(rule_out.nodes[j].0 - bp).abs()));
                        break (idx[0], idx[1]);
                    }
                    w = inner;
                };
                rule_out.ends.push(GapEnd { breakpoint: bp, gap: eps, inner: inner_pair.0, next: inner_pair.1 });
            }
        }
        rule_out
    }

    /// Local exponent α of v(t) ≈ C·t^(−α) at each end, from the two nodes
    /// nearest the breakpoint; `None` where the values vanish.
    fn exponents(&self, values: &[Complex64]) -> Vec<Option<Complex64>> {
        self.ends
            .iter()
            .map(|e| {
                let (v1, v2) = (values[e.inner], values[e.next]);
                if v1.norm() == 0.0 || v2.norm() == 0.0 || !v1.is_finite() || !v2.is_finite() {
                    return None;
                }
                let t1 = (self.nodes[e.inner].0 - e.breakpoint).abs();
                let t2 = (self.nodes[e.next].0 - e.breakpoint).abs();
                let mut alpha = -(v2 / v1).ln() / (t2 / t1).ln();
                alpha.re = alpha.re.min(0.99);
                Some(alpha)
            })
            .collect()
    }

    /// Node values adjusted for coordinate rounding, and the gap terms as
    /// (breakpoint, integral over the gap) pairs.
    ///
    /// A node meant to sit at distance t from a breakpoint b lands at the
    /// float b ± t, whose true distance t′ can differ from t by ulp(b)/2.
    /// Near an |t|^(−α) singularity that moves the value by a relative α·δ/t,
    /// so values are rescaled by (t/t′)^(−α). The gap integral below the
    /// innermost node is v₁ t₁^α g^(1−α)/(1−α).
    pub fn prepare(&self, values: &[Complex64]) -> (Vec<Complex64>, Vec<(f64, Complex64)>) {
        let alphas = self.exponents(values);
        let adjusted = values
            .iter()
            .zip(&self.nodes)
            .zip(&self.anchors)
            .map(|((&v, &(x, _)), anchor)| match anchor {
                Some((end, t)) => match alphas[*end] {
                    Some(alpha) => {
                        let actual = (x - self.ends[*end].breakpoint).abs();
                        v * (-alpha * (t / actual).ln()).exp()
                    }
                    None => v,
                },
                None => v,
            })
            .collect();
        let gaps = self
            .ends
            .iter()
            .zip(&alphas)
            .filter_map(|(e, alpha)| {
                let alpha = (*alpha)?;
                let t1 = (self.nodes[e.inner].0 - e.breakpoint).abs();
                let one_minus = 1.0 - alpha;
                let w = (alpha * t1.ln() + one_minus * e.gap.ln()).exp() / one_minus;
                Some((e.breakpoint, values[e.inner] * w))
            })
            .collect();
        (adjusted, gaps)
    }

    /// Values f(xᵢ) at the nodes, evaluated in parallel.
    pub fn samples<F>(&self, f: F) -> Result<Vec<Complex64>>
    where
        F: Fn(f64) -> Result<Complex64> + Sync,
    {
        self.nodes.par_iter().map(|&(x, _)| f(x)).collect()
    }

    /// Σ wᵢ f(xᵢ) with the rounding adjustment and gap terms.
    pub fn integrate<F>(&self, f: F) -> Result<Complex64>
    where
        F: Fn(f64) -> Result<Complex64> + Sync,
    {
        let (v, gaps) = self.prepare(&self.samples(f)?);
        let gap: Complex64 = gaps.into_iter().map(|g| g.1).sum();
        Ok(self.nodes.iter().zip(&v).map(|(&(_, w), y)| w * y).sum::<Complex64>() + gap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_functions::expi2pi;

    fn constant() -> TwistedFn {
        TwistedFn::new("1", 1, |_, _| Ok(Complex64::new(1.0, 0.0)))
    }

    fn character() -> TwistedFn {
        TwistedFn::new("e(a)", 1, |a, _| Ok(expi2pi(a)))
    }

    #[test]
    fn weights_sum_to_one() {
        let g = QuadratureGrid::new(3, 10);
        let total: f64 = g.nodes.iter().map(|n| n.2).sum();
        assert!((total - 1.0).abs() < 1e-14);
        assert!(g.nodes.iter().all(|&(a, c, _)| a > 0.0 && a < 1.0 && c > 0.0 && c < 1.0));
        let s = SliceRule::graded(&[0.5], 4, 12);
        let total: f64 = s.nodes.iter().map(|n| n.1).sum();
        assert!((total - 1.0).abs() < 1e-11);
    }

    #[test]
    fn unit_inner_products() {
        let g = QuadratureGrid::new(2, 8);
        let one = inner_product(&constant(), &constant(), &g).unwrap();
        assert!((one.value - 1.0).norm() < 1e-14);
        let ee = inner_product(&character(), &character(), &g).unwrap();
        assert!((ee.value - 1.0).norm() < 1e-14);
        let e1 = inner_product(&character(), &constant(), &g).unwrap();
        assert!(e1.value.norm() < 1e-12);
    }

    #[test]
    fn aligned_grid_panels() {
        assert_eq!(QuadratureGrid::aligned(3, 4, 4).panels_per_axis, 6);
        assert_eq!(QuadratureGrid::aligned(1, 4, 4).panels_per_axis, 4);
    }

    #[test]
    fn graded_rule_handles_endpoint_singularity() {
        // ∫₀¹ x^(−0.3) dx = 1/0.7
        let s = SliceRule::graded(&[], 8, 16);
        let v = s.integrate(|x| Ok(Complex64::new(x.powf(-0.3), 0.0))).unwrap();
        assert!((v.re - 1.0 / 0.7).abs() < 1e-12, "{}", v.re - 1.0 / 0.7);
        // ∫₀¹ x^(−0.7) dx = 1/0.3; without the gap terms this is off by ~1e-3
        let v = s.integrate(|x| Ok(Complex64::new(x.powf(-0.7), 0.0))).unwrap();
        assert!((v.re - 1.0 / 0.3).abs() < 1e-11, "{}", v.re - 1.0 / 0.3);
        // singular at both ends and at an interior breakpoint
        let s = SliceRule::graded(&[0.5], 8, 16);
        let f = |x: f64| Ok(Complex64::new(x.powf(-0.6) + (1.0 - x).powf(-0.5) + (x - 0.5).abs().powf(-0.4), 0.0));
        let want = 1.0 / 0.4 + 1.0 / 0.5 + 2.0 * 0.5f64.powf(0.6) / 0.6;
        let v = s.integrate(f).unwrap();
        assert!((v.re - want).abs() < 1e-11, "{}", v.re - want);
    }

    #[test]
    fn lp_norm_rejects_bad_p() {
        assert!(lp_norm(&constant(), 0.5, &QuadratureGrid::new(1, 4)).is_err());
    }
}
