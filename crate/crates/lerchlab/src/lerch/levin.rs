//! Levin t-transform on the partial sums of an oscillatory series.

use num_complex::Complex64;

/// One Levin t-transform L_k^(n) of the partial sums `sums` with remainder
/// estimates `omegas` (ω_j = a_j, the last term added to S_j).
pub(crate) fn levin_t(sums: &[Complex64], omegas: &[Complex64], n: usize, k: usize, beta: f64) -> Complex64 {
    let mut num = Complex64::new(0.0, 0.0);
    let mut den = Complex64::new(0.0, 0.0);
    let base = beta + (n + k) as f64;
    let mut binom = 1.0;
    for j in 0..=k {
        if j > 0 {
            binom *= (k - j + 1) as f64 / j as f64;
        }
        let ratio = ((beta + (n + j) as f64) / base).powi(k as i32 - 1);
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let w = sign * binom * ratio / omegas[n + j];
        num += w * sums[n + j];
        den += w;
    }
    num / den
}

/// Result of running the transform ladder.
pub(crate) struct LevinOutcome {
    pub value: Complex64,
    pub diff: f64,
}

/// Runs k = 1..=kmax at fixed start `n` and keeps the order whose difference
/// to its predecessor is smallest.
pub(crate) fn levin_ladder(sums: &[Complex64], omegas: &[Complex64], n: usize, kmax: usize, beta: f64) -> LevinOutcome {
    let mut prev = levin_t(sums, omegas, n, 1, beta);
    let mut best = LevinOutcome { value: prev, diff: f64::INFINITY };
    for k in 2..=kmax {
        let cur = levin_t(sums, omegas, n, k, beta);
        let diff = (cur - prev).norm();
        if diff < best.diff {
            best = LevinOutcome { value: cur, diff };
        }
        prev = cur;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_log2() {
        // Σ (−1)^n/(n+1) = ln 2
        let mut sums = Vec::new();
        let mut omegas = Vec::new();
        let mut acc = Complex64::new(0.0, 0.0);
        for n in 0..40 {
            let t = Complex64::new(if n % 2 == 0 { 1.0 } else { -1.0 } / (n as f64 + 1.0), 0.0);
            acc += t;
            sums.push(acc);
            omegas.push(t);
        }
        let out = levin_ladder(&sums, &omegas, 0, 16, 1.0);
        assert!((out.value.re - std::f64::consts::LN_2).abs() < 1e-13, "{}", out.value);
    }
}
