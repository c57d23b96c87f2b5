//! Scaling analysis: theoretical exponents, log-log slope fits, descriptive
//! statistics, and Monte Carlo verifiers for the order-statistics limits that
//! underpin the heavy-tailed throughput bounds.
//!
//! The Monte Carlo verifiers all draw Pareto(alpha) variates (CDF 1 - x^-alpha
//! on x >= 1, sampled as U^(-1/alpha) with U uniform on (0,1]) and check three
//! limit statements used by the analysis:
//!
//! - the normalized maximum: E[n^(1/alpha) / max lambda] tends to the constant
//!   alpha * integral_0^inf exp(-x^-alpha) x^-(alpha+2) dx, which
//!   `quadrature_inv_max` evaluates numerically;
//! - the central order statistic lambda_(n-m), which concentrates at
//!   (n/m)^(1/alpha) and is asymptotically normal under the exact normalizers
//!   a_n = F^-1(1 - m/n) and b_n = sqrt(m) / (n f(a_n));
//! - the sample mean of n rates, which concentrates at alpha/(alpha-1).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ScalingError {
    #[error("log-log fit needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("log-log fit needs at least 3 distinct sizes (degenerate design)")]
    DegenerateDesign,
    #[error("log-log fit requires strictly positive finite coordinates")]
    NonPositivePoint,
    #[error("statistics require at least {needed} samples, got {got}")]
    TooFewSamples { needed: usize, got: usize },
    #[error("samples must be finite")]
    NonFinite,
    #[error("order index m must satisfy 1 <= m < n, got m={m}, n={n}")]
    BadOrderIndex { m: usize, n: usize },
}

/// Compensated (Kahan) accumulator; keeps Monte Carlo aggregation independent
/// of summation batching.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Least-squares power-law fit T ~ c * n^slope, computed on (ln n, ln T).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingFit {
    pub slope: f64,
    /// Intercept in log space: ln c.
    pub intercept: f64,
    pub r_squared: f64,
    pub slope_stderr: f64,
}

/// Ordinary least squares on (ln n, ln T). Needs three distinct sizes so the
/// residual degrees of freedom for `slope_stderr` are positive.
pub fn fit_loglog(points: &[(f64, f64)]) -> Result<ScalingFit, ScalingError> {
    if points.len() < 3 {
        return Err(ScalingError::TooFewPoints(points.len()));
    }
    if points.iter().any(|&(n, t)| !(n > 0.0) || !(t > 0.0) || !n.is_finite() || !t.is_finite()) {
        return Err(ScalingError::NonPositivePoint);
    }
    let mut xs: Vec<f64> = points.iter().map(|&(n, _)| n.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, t)| t.ln()).collect();
    {
        let mut dedup = xs.clone();
        dedup.sort_by(f64::total_cmp);
        dedup.dedup();
        if dedup.len() < 3 {
            return Err(ScalingError::DegenerateDesign);
        }
    }
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter_mut().zip(&ys) {
        sxx += (*x - mx) * (*x - mx);
        sxy += (*x - mx) * (*y - my);
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let mut ssr = 0.0;
    let mut sst = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        let resid = y - (intercept + slope * x);
        ssr += resid * resid;
        sst += (y - my) * (y - my);
    }
    let r_squared = if sst == 0.0 { 1.0 } else { (1.0 - ssr / sst).clamp(0.0, 1.0) };
    let slope_stderr = (ssr / (k - 2.0) / sxx).sqrt();
    Ok(ScalingFit { slope, intercept, r_squared, slope_stderr })
}

/// Percentile by linear interpolation between order statistics at fractional
/// rank p * (k - 1).
fn percentile(sorted: &[f64], p: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&p));
    let rank = p * (sorted.len() - 1) as f64;
    let lo = rank.floor() as usize;
    let frac = rank - lo as f64;
    if frac == 0.0 || lo + 1 == sorted.len() {
        sorted[lo]
    } else {
        sorted[lo] + frac * (sorted[lo + 1] - sorted[lo])
    }
}

/// Five-number summary with whiskers at the 9th and 91st percentiles; values
/// strictly outside the whiskers are listed as outliers (ascending).
#[derive(Debug, Clone, PartialEq)]
pub struct BoxStats {
    pub median: f64,
    pub q25: f64,
    pub q75: f64,
    pub p9: f64,
    pub p91: f64,
    pub outliers: Vec<f64>,
}

pub fn box_stats(samples: &[f64]) -> Result<BoxStats, ScalingError> {
    if samples.is_empty() {
        return Err(ScalingError::TooFewSamples { needed: 1, got: 0 });
    }
    if samples.iter().any(|x| !x.is_finite()) {
        return Err(ScalingError::NonFinite);
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let p9 = percentile(&sorted, 0.09);
    let p91 = percentile(&sorted, 0.91);
    let outliers = sorted.iter().copied().filter(|&x| x < p9 || x > p91).collect();
    Ok(BoxStats {
        median: percentile(&sorted, 0.50),
        q25: percentile(&sorted, 0.25),
        q75: percentile(&sorted, 0.75),
        p9,
        p91,
        outliers,
    })
}

/// Two-sided 95% confidence interval for the mean via the t distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ci95 {
    pub mean: f64,
    pub half_width: f64,
    pub n_samples: usize,
}

/// 97.5% t quantile for the given degrees of freedom: exact table for
/// df 1..=30, the normal 1.96 beyond (within 1% for df >= 31).
pub fn t_quantile_975(df: usize) -> f64 {
    const TABLE: [f64; 30] = [
        12.706, 4.303, 3.182, 2.776, 2.571, 2.447, 2.365, 2.306, 2.262, 2.228,
        2.201, 2.179, 2.160, 2.145, 2.131, 2.120, 2.110, 2.101, 2.093, 2.086,
        2.080, 2.074, 2.069, 2.064, 2.060, 2.056, 2.052, 2.048, 2.045, 2.042,
    ];
    assert!(df >= 1, "degrees of freedom must be positive");
    if df <= 30 {
        TABLE[df - 1]
    } else {
        1.96
    }
}

pub fn ci95(samples: &[f64]) -> Result<Ci95, ScalingError> {
    let k = samples.len();
    if k < 2 {
        return Err(ScalingError::TooFewSamples { needed: 2, got: k });
    }
    if samples.iter().any(|x| !x.is_finite()) {
        return Err(ScalingError::NonFinite);
    }
    let mean = samples.iter().sum::<f64>() / k as f64;
    let var = samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (k - 1) as f64;
    let stderr = (var / k as f64).sqrt();
    Ok(Ci95 { mean, half_width: t_quantile_975(k - 1) * stderr, n_samples: k })
}

/// Traffic/scheduling combination whose theoretical throughput exponent is
/// wanted. All bounds are stated up to constants, so only exponents matter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundScheme {
    /// Equal rates, single phase: throughput grows like n^(1/2).
    Homogeneous,
    /// One session n^g times hotter, single phase: the hot session drags the
    /// completion time, n^(1/2 - g).
    OneDissimilarConventional { g_exponent: f64 },
    /// One hot session served in its own phase: n^(1/2) while the hot session
    /// is below sqrt(n), n^(1 - g) once it dominates.
    OneDissimilarPartitioned { g_exponent: f64 },
    /// Pareto(alpha) rates, single phase: the sample maximum costs a factor
    /// n^(1/alpha), leaving n^(1/2 - 1/alpha).
    HeavyTailedConventional { alpha: f64 },
    /// Pareto(alpha) rates with the optimal two-phase split m = n^(alpha/(alpha+2)):
    /// n^((alpha^2 + 2 alpha - 4) / (2 alpha^2 + 2 alpha)).
    HeavyTailedPartitioned { alpha: f64 },
}

impl BoundScheme {
    /// The scaling exponent e such that throughput grows like n^e.
    pub fn exponent(&self) -> f64 {
        match *self {
            BoundScheme::Homogeneous => 0.5,
            BoundScheme::OneDissimilarConventional { g_exponent } => {
                assert!((0.0..1.0).contains(&g_exponent), "g_exponent must be in (0,1)");
                0.5 - g_exponent
            }
            BoundScheme::OneDissimilarPartitioned { g_exponent } => {
                assert!((0.0..1.0).contains(&g_exponent), "g_exponent must be in (0,1)");
                if g_exponent <= 0.5 {
                    0.5
                } else {
                    1.0 - g_exponent
                }
            }
            BoundScheme::HeavyTailedConventional { alpha } => {
                assert!(alpha > 1.0, "alpha must exceed 1");
                0.5 - 1.0 / alpha
            }
            BoundScheme::HeavyTailedPartitioned { alpha } => {
                assert!(alpha > 1.0, "alpha must exceed 1");
                (alpha * alpha + 2.0 * alpha - 4.0) / (2.0 * alpha * alpha + 2.0 * alpha)
            }
        }
    }
}

/// Evaluates the bound's growth law at size n (constants set to 1): n^exponent.
pub fn bound(scheme: &BoundScheme, n: f64) -> f64 {
    assert!(n >= 1.0, "network size must be at least 1");
    n.powf(scheme.exponent())
}

/// Monte Carlo estimate of E[n^(1/alpha) / max_i lambda_i] over `reps`
/// independent draws of n Pareto(alpha) rates.
///
/// Uses max lambda = (min U)^(-1/alpha), so the ratio is (n * min U)^(1/alpha).
pub fn mc_inv_max(n: usize, alpha: f64, reps: usize, seed: u64) -> f64 {
    assert!(n >= 1 && reps >= 1, "need n >= 1 and reps >= 1");
    assert!(alpha > 0.0, "alpha must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = KahanSum::new();
    for _ in 0..reps {
        let mut min_u = f64::INFINITY;
        for _ in 0..n {
            let u = 1.0 - rng.random::<f64>();
            if u < min_u {
                min_u = u;
            }
        }
        acc.add((n as f64 * min_u).powf(1.0 / alpha));
    }
    acc.value() / reps as f64
}

/// The limit constant of `mc_inv_max` by adaptive Simpson quadrature of
/// alpha * integral_0^inf exp(-x^-alpha) x^-(alpha+2) dx to relative
/// tolerance ~1e-9.
pub fn quadrature_inv_max(alpha: f64) -> f64 {
    assert!(alpha > 0.0, "alpha must be positive");
    let g = move |x: f64| {
        if x <= 0.0 {
            return 0.0;
        }
        let t = x.powf(-alpha);
        if t > 700.0 {
            // exp(-t) underflows to 0 long before this; avoid 0 * inf.
            return 0.0;
        }
        alpha * (-t).exp() * x.powf(-(alpha + 2.0))
    };
    // Cutoff so the dropped tail, bounded by alpha B^-(alpha+1) / (alpha+1),
    // is negligible against the result.
    let tail_tol = 1e-12;
    let b = (alpha / ((alpha + 1.0) * tail_tol)).powf(1.0 / (alpha + 1.0));
    let rough = adaptive_simpson(&g, 0.0, b, 1e-6, 60);
    adaptive_simpson(&g, 0.0, b, 1e-9 * rough.abs().max(1e-3), 60)
}

fn adaptive_simpson(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, depth)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Monte Carlo study of the central order statistic lambda_(n-m) of n
/// Pareto(alpha) rates.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralOrderReport {
    /// Mean of lambda_(n-m) * (m/n)^(1/alpha) over reps; tends to 1.
    pub normalized_mean: f64,
    /// Centering constant F^-1(1 - m/n) = (n/m)^(1/alpha).
    pub a_n: f64,
    /// Scale constant sqrt(m) / (n f(a_n)), which equals a_n / (alpha sqrt(m)).
    pub b_n: f64,
    /// Per-rep standardized values (lambda_(n-m) - a_n) / b_n; asymptotically
    /// standard normal.
    pub standardized: Vec<f64>,
}

pub fn mc_central_order(
    n: usize,
    m: usize,
    alpha: f64,
    reps: usize,
    seed: u64,
) -> Result<CentralOrderReport, ScalingError> {
    if m < 1 || m >= n {
        return Err(ScalingError::BadOrderIndex { m, n });
    }
    assert!(alpha > 0.0, "alpha must be positive");
    assert!(reps >= 1, "need at least one repetition");

    let a_n = (n as f64 / m as f64).powf(1.0 / alpha);
    let b_n = a_n / (alpha * (m as f64).sqrt());
    let norm = (m as f64 / n as f64).powf(1.0 / alpha);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut uniforms = vec![0.0f64; n];
    let mut acc = KahanSum::new();
    let mut standardized = Vec::with_capacity(reps);
    for _ in 0..reps {
        for u in uniforms.iter_mut() {
            *u = 1.0 - rng.random::<f64>();
        }
        // lambda = U^(-1/alpha) is decreasing in U, so the (n-m)-th smallest
        // lambda corresponds to the (m+1)-th smallest uniform.
        let (_, &mut u_sel, _) = uniforms.select_nth_unstable_by(m, f64::total_cmp);
        let lambda = u_sel.powf(-1.0 / alpha);
        acc.add(lambda * norm);
        standardized.push((lambda - a_n) / b_n);
    }
    Ok(CentralOrderReport {
        normalized_mean: acc.value() / reps as f64,
        a_n,
        b_n,
        standardized,
    })
}

/// Sample mean of n Pareto(alpha) rates, averaged over reps, plus the
/// empirical variance of those per-rep means. The mean tends to
/// alpha/(alpha-1) and the variance shrinks with n (CLT concentration;
/// finite-variance premise needs alpha > 2).
pub fn mc_mean_concentration(n: usize, alpha: f64, reps: usize, seed: u64) -> (f64, f64) {
    assert!(n >= 1, "need n >= 1");
    assert!(reps >= 2, "variance needs at least two repetitions");
    assert!(alpha > 0.0, "alpha must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inv = -1.0 / alpha;
    let mut means = Vec::with_capacity(reps);
    for _ in 0..reps {
        let mut acc = KahanSum::new();
        for _ in 0..n {
            let u: f64 = 1.0 - rng.random::<f64>();
            acc.add(u.powf(inv));
        }
        means.push(acc.value() / n as f64);
    }
    let mut acc = KahanSum::new();
    for &m in &means {
        acc.add(m);
    }
    let grand = acc.value() / reps as f64;
    let var = means.iter().map(|x| (x - grand) * (x - grand)).sum::<f64>() / (reps - 1) as f64;
    (grand, var)
}

/// Kolmogorov-Smirnov distance between the empirical CDF of `samples` and the
/// given continuous CDF.
pub fn ks_distance(samples: &[f64], cdf: impl Fn(f64) -> f64) -> f64 {
    assert!(!samples.is_empty(), "KS distance of an empty sample");
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let k = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        d = d.max((f - i as f64 / k).abs()).max(((i + 1) as f64 / k - f).abs());
    }
    d
}
