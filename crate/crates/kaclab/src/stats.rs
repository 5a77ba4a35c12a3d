//! Small statistical helpers shared by the experiment harness and tests.

/// 97.5% standard-normal quantile; two-sided 95% coverage.
pub const Z95: f64 = 1.959_963_984_540_054;

/// Sample mean and unbiased sample variance.
pub fn mean_and_variance(xs: &[f64]) -> (f64, f64) {
    let n = xs.len();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = xs.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let ss = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>();
    (mean, ss / (n - 1) as f64)
}

/// Standard error of the sample mean.
pub fn standard_error(xs: &[f64]) -> f64 {
    let (_, var) = mean_and_variance(xs);
    (var / xs.len() as f64).sqrt()
}

/// Wilson score interval for a binomial proportion.
///
/// Behaves sensibly at zero counts, which is why it is used for the rare-event
/// tail probabilities instead of the normal approximation.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    assert!(trials > 0, "wilson_interval needs at least one trial");
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Two-sample z statistic for a difference of means.
pub fn two_sample_z(mean_a: f64, var_a: f64, n_a: usize, mean_b: f64, var_b: f64, n_b: usize) -> f64 {
    let se = (var_a / n_a as f64 + var_b / n_b as f64).sqrt();
    (mean_a - mean_b) / se
}

/// Ordinary least-squares fit `y = slope * x + intercept`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    assert_eq!(xs.len(), ys.len());
    assert!(xs.len() >= 2, "linear_fit needs at least two points");
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// Maximum gap between the empirical CDFs of two integer-valued samples.
pub fn max_cdf_distance(a: &[u64], b: &[u64]) -> f64 {
    let hi = a.iter().chain(b.iter()).copied().max().unwrap_or(0);
    let mut worst = 0.0f64;
    for k in 0..=hi {
        let fa = a.iter().filter(|&&x| x <= k).count() as f64 / a.len() as f64;
        let fb = b.iter().filter(|&&x| x <= k).count() as f64 / b.len() as f64;
        worst = worst.max((fa - fb).abs());
    }
    worst
}

/// Pearson correlation of two equally long samples.
pub fn correlation(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
        sxy += (x - mx) * (y - my);
    }
    sxy / (sxx * syy).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_at_zero_counts() {
        let (lo, hi) = wilson_interval(0, 100, Z95);
        assert_eq!(lo, 0.0);
        assert!(hi > 0.0 && hi < 0.05);
    }

    #[test]
    fn wilson_contains_point_estimate() {
        for &(s, n) in &[(1u64, 10u64), (5, 50), (999, 1000), (0, 7)] {
            let (lo, hi) = wilson_interval(s, n, Z95);
            let p = s as f64 / n as f64;
            assert!(lo <= p && p <= hi, "CI [{lo},{hi}] misses {p}");
        }
    }

    #[test]
    fn linear_fit_recovers_line() {
        let xs = [0.0, 1.0, 2.0, 3.0];
        let ys = [1.0, 3.0, 5.0, 7.0];
        let (slope, intercept) = linear_fit(&xs, &ys);
        assert!((slope - 2.0).abs() < 1e-12);
        assert!((intercept - 1.0).abs() < 1e-12);
    }

    #[test]
    fn cdf_distance_self_is_zero() {
        let a = [0u64, 1, 1, 2, 5];
        assert_eq!(max_cdf_distance(&a, &a), 0.0);
        let b = [10u64, 10, 10, 10, 10];
        assert_eq!(max_cdf_distance(&a, &b), 1.0);
    }
}
