//! Rank-based dependence measurement and the probability integral transform.
//!
//! Kendall's tau follows the sign-function definition: the numerator is the
//! sum over all index pairs of sgn(x_n - x_m) * sgn(y_n - y_m), so tied pairs
//! contribute zero and the denominator stays n(n-1)/2 (no tau-b correction).
//! The implementation counts discordances with a merge sort; a brute-force
//! O(n^2) evaluation is kept as the oracle for tests.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DependenceError {
    #[error("input vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("input contains a non-finite value")]
    NonFinite,
    #[error("need at least {need} observations, got {got}")]
    TooShort { need: usize, got: usize },
}

/// Kendall's tau with ties contributing zero to the numerator.
pub fn kendall_tau(x: &[f64], y: &[f64]) -> Result<f64, DependenceError> {
    if x.len() != y.len() {
        return Err(DependenceError::LengthMismatch(x.len(), y.len()));
    }
    let n = x.len();
    if n < 2 {
        return Err(DependenceError::TooShort { need: 2, got: n });
    }
    if x.iter().chain(y.iter()).any(|v| !v.is_finite()) {
        return Err(DependenceError::NonFinite);
    }

    // Sort by x, breaking x-ties by y so tied-x runs carry no inversions.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| {
        x[a].partial_cmp(&x[b])
            .unwrap()
            .then(y[a].partial_cmp(&y[b]).unwrap())
    });

    let tied_pairs = |count: u64| count * (count - 1) / 2;

    // Pairs tied in x, and tied in both coordinates.
    let mut t_x = 0u64;
    let mut t_xy = 0u64;
    {
        let mut i = 0;
        while i < n {
            let mut j = i + 1;
            while j < n && x[idx[j]] == x[idx[i]] {
                j += 1;
            }
            t_x += tied_pairs((j - i) as u64);
            let mut a = i;
            while a < j {
                let mut b = a + 1;
                while b < j && y[idx[b]] == y[idx[a]] {
                    b += 1;
                }
                t_xy += tied_pairs((b - a) as u64);
                a = b;
            }
            i = j;
        }
    }

    // Pairs tied in y.
    let mut ys: Vec<f64> = y.to_vec();
    ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut t_y = 0u64;
    {
        let mut i = 0;
        while i < n {
            let mut j = i + 1;
            while j < n && ys[j] == ys[i] {
                j += 1;
            }
            t_y += tied_pairs((j - i) as u64);
            i = j;
        }
    }

    // Discordant pairs = strict inversions of y in x-order.
    let mut seq: Vec<f64> = idx.iter().map(|&i| y[i]).collect();
    let mut buf = vec![0.0; n];
    let discordant = count_inversions(&mut seq, &mut buf);

    let total = tied_pairs(n as u64);
    let numerator =
        total as i128 - t_x as i128 - t_y as i128 + t_xy as i128 - 2 * discordant as i128;
    Ok(numerator as f64 / total as f64)
}

// Strict inversions (a[i] > a[j] with i < j) via merge sort.
fn count_inversions(a: &mut [f64], buf: &mut [f64]) -> u64 {
    let n = a.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let (left, right) = a.split_at_mut(mid);
    let mut inv =
        count_inversions(left, &mut buf[..mid]) + count_inversions(right, &mut buf[mid..]);
    let (mut i, mut j, mut k) = (0, 0, 0);
    while i < left.len() && j < right.len() {
        if right[j] < left[i] {
            inv += (left.len() - i) as u64;
            buf[k] = right[j];
            j += 1;
        } else {
            buf[k] = left[i];
            i += 1;
        }
        k += 1;
    }
    while i < left.len() {
        buf[k] = left[i];
        i += 1;
        k += 1;
    }
    while j < right.len() {
        buf[k] = right[j];
        j += 1;
        k += 1;
    }
    a.copy_from_slice(&buf[..n]);
    inv
}

/// O(n^2) evaluation of the sign-function formula; the reference
/// implementation used by oracle tests.
pub fn kendall_tau_brute(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len();
    let mut num = 0i64;
    for i in 0..n {
        for j in (i + 1)..n {
            let sx = (x[i] - x[j]).signum();
            let sy = (y[i] - y[j]).signum();
            if x[i] != x[j] && y[i] != y[j] {
                num += if sx == sy { 1 } else { -1 };
            }
        }
    }
    num as f64 / (n * (n - 1) / 2) as f64
}

/// Empirical distribution function of a sample, kept as the sorted sample.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    /// Build from a sample of at least two finite values.
    pub fn build(sample: &[f64]) -> Result<Self, DependenceError> {
        if sample.len() < 2 {
            return Err(DependenceError::TooShort {
                need: 2,
                got: sample.len(),
            });
        }
        if sample.iter().any(|v| !v.is_finite()) {
            return Err(DependenceError::NonFinite);
        }
        let mut sorted = sample.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Ok(Self { sorted })
    }

    pub fn n(&self) -> usize {
        self.sorted.len()
    }

    /// F_n(t) = #{x_i <= t} / n, the raw step function.
    pub fn evaluate(&self, t: f64) -> f64 {
        let count = self.sorted.partition_point(|&s| s <= t);
        count as f64 / self.sorted.len() as f64
    }

    /// Copula-scale transform: n/(n+1) * F_n(v), clamped into
    /// [1/(n+1), n/(n+1)] so pseudo-observations never touch 0 or 1.
    pub fn pit(&self, v: f64) -> Result<f64, DependenceError> {
        if !v.is_finite() {
            return Err(DependenceError::NonFinite);
        }
        let n = self.sorted.len() as f64;
        let scaled = self.evaluate(v) * n / (n + 1.0);
        Ok(scaled.clamp(1.0 / (n + 1.0), n / (n + 1.0)))
    }
}

/// Paired pseudo-observations on the open unit square.
#[derive(Debug, Clone)]
pub struct PseudoObservations {
    pub u1: Vec<f64>,
    pub u2: Vec<f64>,
}

impl PseudoObservations {
    pub fn new(u1: Vec<f64>, u2: Vec<f64>) -> Result<Self, DependenceError> {
        if u1.len() != u2.len() {
            return Err(DependenceError::LengthMismatch(u1.len(), u2.len()));
        }
        if u1
            .iter()
            .chain(u2.iter())
            .any(|&v| !v.is_finite() || v <= 0.0 || v >= 1.0)
        {
            return Err(DependenceError::NonFinite);
        }
        Ok(Self { u1, u2 })
    }

    /// Transform two raw samples through their own empirical CDFs.
    pub fn from_samples(s1: &[f64], s2: &[f64]) -> Result<Self, DependenceError> {
        let c1 = EmpiricalCdf::build(s1)?;
        let c2 = EmpiricalCdf::build(s2)?;
        let u1 = s1.iter().map(|&v| c1.pit(v)).collect::<Result<_, _>>()?;
        let u2 = s2.iter().map(|&v| c2.pit(v)).collect::<Result<_, _>>()?;
        Self::new(u1, u2)
    }

    pub fn len(&self) -> usize {
        self.u1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u1.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tau_perfect_concordance_and_discordance() {
        let x = [1.0, 2.0, 3.0];
        assert_abs_diff_eq!(kendall_tau(&x, &[1.0, 2.0, 3.0]).unwrap(), 1.0);
        assert_abs_diff_eq!(kendall_tau(&x, &[3.0, 2.0, 1.0]).unwrap(), -1.0);
    }

    #[test]
    fn tau_hand_enumerated_example() {
        // [1,2,3,4] vs [1,3,2,4]: five concordant pairs, one discordant.
        let tau = kendall_tau(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 4.0]).unwrap();
        assert_abs_diff_eq!(tau, 4.0 / 6.0, epsilon = 1e-15);
    }

    #[test]
    fn tau_matches_brute_force_with_ties() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..60 {
            let n = rng.gen_range(2..120);
            // Coarse integer grid forces plenty of ties.
            let x: Vec<f64> = (0..n).map(|_| rng.gen_range(0..8) as f64).collect();
            let y: Vec<f64> = (0..n)
                .map(|i| {
                    if trial % 3 == 0 {
                        x[i] + rng.gen_range(0..4) as f64
                    } else {
                        rng.gen_range(0..8) as f64
                    }
                })
                .collect();
            let fast = kendall_tau(&x, &y).unwrap();
            let brute = kendall_tau_brute(&x, &y);
            assert_abs_diff_eq!(fast, brute, epsilon = 1e-15);
        }
    }

    #[test]
    fn ecdf_counts_per_definition() {
        let cdf = EmpiricalCdf::build(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_abs_diff_eq!(cdf.evaluate(2.5), 0.5);
        assert_abs_diff_eq!(cdf.evaluate(0.0), 0.0);
        assert_abs_diff_eq!(cdf.evaluate(4.0), 1.0);
        assert_abs_diff_eq!(cdf.evaluate(2.0), 0.5);
    }

    #[test]
    fn pit_scaling_and_clamping() {
        let cdf = EmpiricalCdf::build(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        // Rank 2 of 4, scaled by n/(n+1) = 4/5.
        assert_abs_diff_eq!(cdf.pit(2.0).unwrap(), 0.4, epsilon = 1e-15);
        // Below the minimum clamps to the floor, above to the ceiling.
        assert_abs_diff_eq!(cdf.pit(0.5).unwrap(), 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(cdf.pit(9.0).unwrap(), 0.8, epsilon = 1e-15);
    }

    #[test]
    fn non_finite_inputs_are_rejected() {
        assert_eq!(
            EmpiricalCdf::build(&[1.0, f64::NAN]).unwrap_err(),
            DependenceError::NonFinite
        );
        assert_eq!(
            kendall_tau(&[1.0, f64::INFINITY], &[1.0, 2.0]).unwrap_err(),
            DependenceError::NonFinite
        );
    }

    proptest! {
        #[test]
        fn tau_symmetry_and_sign_flip(pairs in prop::collection::vec((0i32..50, 0i32..50), 2..80)) {
            let x: Vec<f64> = pairs.iter().map(|p| p.0 as f64).collect();
            let y: Vec<f64> = pairs.iter().map(|p| p.1 as f64).collect();
            let neg_y: Vec<f64> = y.iter().map(|v| -v).collect();
            let t_xy = kendall_tau(&x, &y).unwrap();
            let t_yx = kendall_tau(&y, &x).unwrap();
            let t_neg = kendall_tau(&x, &neg_y).unwrap();
            prop_assert!((t_xy - t_yx).abs() < 1e-15);
            prop_assert!((t_xy + t_neg).abs() < 1e-15);
            prop_assert!((-1.0..=1.0).contains(&t_xy));
        }

        #[test]
        fn tau_invariant_under_increasing_transform(xs in prop::collection::vec(-20.0f64..20.0, 2..60)) {
            let ys: Vec<f64> = xs.iter().rev().cloned().collect();
            let exp_x: Vec<f64> = xs.iter().map(|v| (v * 0.1).exp()).collect();
            let a = kendall_tau(&xs, &ys).unwrap();
            let b = kendall_tau(&exp_x, &ys).unwrap();
            prop_assert!((a - b).abs() < 1e-15);
        }

        #[test]
        fn pit_is_monotone_and_bounded(sample in prop::collection::vec(-100.0f64..100.0, 2..50),
                                       probes in prop::collection::vec(-150.0f64..150.0, 1..30)) {
            let cdf = EmpiricalCdf::build(&sample).unwrap();
            let n = sample.len() as f64;
            let mut sorted_probes = probes.clone();
            sorted_probes.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut last = 0.0;
            for (i, &p) in sorted_probes.iter().enumerate() {
                let u = cdf.pit(p).unwrap();
                prop_assert!(u >= 1.0 / (n + 1.0) - 1e-15);
                prop_assert!(u <= n / (n + 1.0) + 1e-15);
                if i > 0 {
                    prop_assert!(u >= last - 1e-15);
                }
                last = u;
            }
        }
    }
}
