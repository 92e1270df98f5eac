//! Series kernels shared by the evaluation strategies.
//!
//! All kernels return `(value, error_estimate)` where the estimate adds the
//! size of the first neglected term to a rounding allowance.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::special_functions::{complex_gamma, digamma, expi2pi, BERNOULLI_OVER_FACTORIAL};

const EPS: f64 = f64::EPSILON;
const TWO_PI: f64 = 2.0 * PI;

/// Below this distance from ℤ, `a` is handled by the near-integer expansion.
pub(crate) const SPLIT_DISTANCE: f64 = 0.05;

/// Integer tolerance for the parameters `a` and `c`.
pub(crate) const INTEGRAL_TOL: f64 = 1e-14;

/// Distance from `x` to the nearest integer.
pub(crate) fn dist_to_integer(x: f64) -> f64 {
    (x - x.round()).abs()
}

/// x^(−s) for real x > 0.
#[inline]
pub(crate) fn pow_neg(x: f64, s: Complex64) -> Complex64 {
    (-s * x.ln()).exp()
}

/// Relative rounding amplification of x^(−s) = exp(−s ln x).
#[inline]
pub(crate) fn pow_condition(x: f64, s: Complex64) -> f64 {
    1.0 + s.norm() * x.ln().abs()
}

/// Hurwitz ζ(s, x) by Euler–Maclaurin, any s ≠ 1, x > 0.
pub(crate) fn hurwitz_em(s: Complex64, x: f64) -> (Complex64, f64) {
    let x_min = (s.norm() + 20.0) / PI;
    let n = if x >= x_min { 0 } else { (x_min - x).ceil() as usize };
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    for j in 0..n {
        let t = pow_neg(j as f64 + x, s);
        abs_sum += t.norm() * pow_condition(j as f64 + x, s);
        sum += t;
    }
    let big_x = n as f64 + x;
    let xs = pow_neg(big_x, s);
    let head = xs * big_x / (s - 1.0) + 0.5 * xs;
    abs_sum += head.norm();
    sum += head;

    let inv_x2 = 1.0 / (big_x * big_x);
    let mut poch = s;
    let mut pw = xs / big_x;
    let mut last = f64::INFINITY;
    for (k, &b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
        let term = b * poch * pw;
        sum += term;
        abs_sum += term.norm();
        last = term.norm();
        if last <= EPS * 0.1 * sum.norm() || poch == Complex64::new(0.0, 0.0) {
            break;
        }
        let k2 = 2.0 * (k as f64 + 1.0);
        poch *= (s + k2 - 1.0) * (s + k2);
        pw *= inv_x2;
    }
    (sum, last + 4.0 * EPS * abs_sum)
}

/// ζ(m, x) for m = 2..=kmax+1, real arguments, by direct sums plus an Euler–Maclaurin tail.
///
/// Entry `k` of the result holds ζ(k+1, x); entry 0 is unused.
fn hurwitz_integer_table(x: f64, kmax: usize) -> Vec<f64> {
    let m_terms = (kmax as f64 + 24.0 - x).max(0.0).ceil() as usize;
    let mut out = vec![0.0; kmax + 1];
    for j in 0..m_terms {
        let w = 1.0 / (j as f64 + x);
        let mut p = w;
        for slot in out.iter_mut().skip(1) {
            p *= w;
            *slot += p;
        }
    }
    let big_x = m_terms as f64 + x;
    let inv = 1.0 / big_x;
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        let m = (k + 1) as f64;
        let xm = inv.powi(k as i32 + 1);
        let mut tail = xm * big_x / (m - 1.0) + 0.5 * xm;
        let mut poch = m;
        let mut pw = xm * inv;
        for (j, &b) in BERNOULLI_OVER_FACTORIAL.iter().enumerate() {
            let term = b * poch * pw;
            tail += term;
            if term.abs() <= EPS * 1e-3 * tail.abs() {
                break;
            }
            let j2 = 2.0 * (j as f64 + 1.0);
            poch *= (m + j2 - 1.0) * (m + j2);
            pw *= inv * inv;
        }
        *slot += tail;
    }
    out
}

/// Li_{−k}(e^(2πia)) for k = 0..=kmax, with the k = 0 slot holding 1/(1−z).
///
/// Uses Li_{−k}(z) = k!(2πi)^(−k−1)[ζ(k+1, 1−a) + (−1)^(k+1) ζ(k+1, a)], 0 < a < 1.
fn polylog_neg_table(a: f64, kmax: usize) -> Vec<Complex64> {
    let z = expi2pi(a);
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(1.0 / (1.0 - z));
    let za = hurwitz_integer_table(a, kmax);
    let zb = hurwitz_integer_table(1.0 - a, kmax);
    let two_pi_i = Complex64::new(0.0, TWO_PI);
    let mut pref = 1.0 / two_pi_i;
    for k in 1..=kmax {
        pref *= k as f64 / two_pi_i;
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        out.push(pref * (zb[k] + sign * za[k]));
    }
    out
}

const TAIL_TERMS: usize = 34;

/// Number of leading terms summed before the Boole tail expansion takes over.
pub(crate) fn boole_cutoff(s: Complex64, a: f64, c: f64) -> usize {
    let d = dist_to_integer(a);
    let x_min = 0.64 * (s.norm() + TAIL_TERMS as f64) / d;
    (x_min - c).max(0.0).ceil() as usize
}

/// Σ_{n≥0} e^(2πina)(n+c)^(−s) as N explicit terms plus the Boole tail
/// e^(2πiNa)(N+c)^(−s) Σ_k C(−s,k)(N+c)^(−k) Li_{−k}(e^(2πia)).
///
/// Valid for every s once `a` is away from the integers; the caller bounds N.
pub(crate) fn boole_series(s: Complex64, a: f64, c: f64, n: usize) -> (Complex64, f64) {
    let a = a.rem_euclid(1.0);
    let z = expi2pi(a);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut zn = Complex64::new(1.0, 0.0);
    for j in 0..n {
        if j % 64 == 0 {
            zn = expi2pi(a * j as f64);
        }
        let t = zn * pow_neg(j as f64 + c, s);
        abs_sum += t.norm() * pow_condition(j as f64 + c, s);
        sum += t;
        zn *= z;
    }
    let big_x = n as f64 + c;
    let li = polylog_neg_table(a, TAIL_TERMS);
    let mut binom = Complex64::new(1.0, 0.0);
    let mut xk = 1.0;
    let mut tail = Complex64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    let mut prev = f64::INFINITY;
    for (k, lk) in li.iter().enumerate() {
        if k > 0 {
            binom *= (-s - (k as f64 - 1.0)) / k as f64;
            xk /= big_x;
        }
        let term = binom * xk * lk;
        tail += term;
        // Li_{-k} vanishes for even k at a = 1/2, so judge two terms at a time
        let cur = term.norm();
        last = cur.max(prev);
        prev = cur;
        if k > 2 && last <= EPS * 1e-2 * tail.norm() {
            break;
        }
    }
    let pref = expi2pi(a * n as f64) * pow_neg(big_x, s);
    let tail_v = pref * tail;
    let value = sum + tail_v;
    let err = 2.0 * last * pref.norm() + 4.0 * EPS * (abs_sum + tail_v.norm());
    (value, err)
}

/// Closest distance of `s` to an integer at which the integer-order expansion is used.
const INTEGER_S_TOL: f64 = 1e-9;

/// ζ(s, a, c) for a = k + δ with 0 < |δ| small, through
/// e^(−λc)[Γ(1−s)(−λ)^(s−1) + Σ_r ζ(s−r, c) λ^r / r!], λ = 2πiδ.
///
/// At integer s = n ≥ 1 the r = n−1 term is replaced by its finite part
/// (ψ(n) − ψ(c) − log(−λ)) λ^(n−1)/(n−1)!.
pub(crate) fn near_integer_split(s: Complex64, delta: f64, c: f64) -> (Complex64, f64) {
    let lam = Complex64::new(0.0, TWO_PI * delta);
    let n_round = s.re.round();
    let near_int = (s - n_round).norm() < INTEGER_S_TOL && n_round >= 1.0;
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut abs_sum = 0.0;
    if near_int {
        err += (s - n_round).norm() * 1e2;
    } else {
        let g = complex_gamma(1.0 - s);
        if !g.is_pole {
            let log_lam = (-lam).ln();
            let sing = g.value * ((s - 1.0) * log_lam).exp();
            total += sing;
            let w = (1.0 - s).norm();
            abs_sum += sing.norm() * (10.0 + w * log_lam.norm() + w * (2.0 + w).ln());
        }
    }
    let mut lam_r = Complex64::new(1.0, 0.0);
    let mut small_run = 0;
    for r in 0..80usize {
        if r > 0 {
            lam_r *= lam / r as f64;
        }
        let term = if near_int && r as f64 == n_round - 1.0 {
            let n = n_round;
            (digamma(n) - digamma(c) - (-lam).ln()) * lam_r
        } else {
            let (h, e) = hurwitz_em(s - r as f64, c);
            err += e * lam_r.norm();
            h * lam_r
        };
        total += term;
        abs_sum += term.norm();
        if term.norm() <= EPS * 1e-2 * total.norm() && r as f64 >= n_round {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
    }
    let pref = (-lam * c).exp();
    (pref * total, err + 4.0 * EPS * abs_sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hurwitz_values() {
        let (v, e) = hurwitz_em(c64(2.0, 0.0), 1.0);
        assert!((v.re - PI * PI / 6.0).abs() < 1e-15 && e < 1e-13);
        let (v, _) = hurwitz_em(c64(2.0, 0.0), 0.5);
        assert!((v.re - PI * PI / 2.0).abs() < 1e-14);
        let (v, _) = hurwitz_em(c64(0.5, 3.0), 0.3);
        assert!((v - c64(-1.4701339268676388718, -1.2700238816909224127)).norm() < 1e-13);
        let (v, _) = hurwitz_em(c64(-2.5, 0.0), 0.7);
        assert!((v.re - 0.0040023110606148412329).abs() < 1e-12);
    }

    #[test]
    fn integer_table_matches_em() {
        let t = hurwitz_integer_table(0.3, 30);
        for k in [1usize, 2, 5, 17, 30] {
            let (v, _) = hurwitz_em(c64(k as f64 + 1.0, 0.0), 0.3);
            assert!((t[k] - v.re).abs() <= 1e-14 * v.re.abs(), "k={k}");
        }
    }

    #[test]
    fn boole_matches_fixture() {
        let s = c64(3.0, 0.0);
        let n = boole_cutoff(s, 1.0 / 3.0, 0.5);
        let (v, e) = boole_series(s, 1.0 / 3.0, 0.5, n);
        let want = c64(7.8370270231168523659, 0.20643842913792822686);
        assert!((v - want).norm() < 1e-13, "{v} err {e}");
        assert!(e < 1e-12);
    }

    #[test]
    fn split_matches_fixtures() {
        let (v, _) = near_integer_split(c64(0.7, 0.0), 1e-4, 0.3);
        let want = c64(23.511205648416181391, 12.397656331072663036);
        assert!((v - want).norm() < 1e-12 * want.norm(), "{v}");
        let (v, _) = near_integer_split(c64(2.0, 0.0), -1e-7, 0.3);
        let want = c64(12.245363559149189512, -9.1306734128342046411e-6);
        assert!((v - want).norm() < 1e-12 * want.norm(), "{v}");
        let (v, _) = near_integer_split(c64(0.5, 3.0), -1e-3, 0.8);
        let want = c64(0.48762817594867790297, 0.44171301417089561041);
        assert!((v - want).norm() < 1e-12, "{v}");
    }
}
