//! One-dimensional landscape with four Gaussian peaks of differing heights;
//! the behavior characterization is the identity.

use crate::individual::{BehaviorVector, Genome};
use crate::metrics::BinSpec;
use crate::scalar::Real;

/// (amplitude, center, width) of the four peaks.
const PEAKS: [(f64, f64, f64); 4] = [
    (50.0, 10.0, 5.0),
    (150.0, 40.0, 3.0),
    (100.0, 70.0, 8.0),
    (200.0, 130.0, 5.0),
];

#[derive(Debug, Clone)]
pub struct FourPeaks<F: Real> {
    peaks: [(F, F, F); 4],
}

impl<F: Real> FourPeaks<F> {
    pub fn new() -> Self {
        FourPeaks {
            peaks: PEAKS.map(|(a, mu, sigma)| (F::of(a), F::of(mu), F::of(sigma))),
        }
    }

    /// Sum of the four weighted Gaussians at `x`.
    pub fn fitness_at(&self, x: F) -> F {
        let two = F::of(2.0);
        self.peaks
            .iter()
            .map(|&(a, mu, sigma)| {
                let d = x - mu;
                a * (-(d * d) / (two * sigma * sigma)).exp()
            })
            .sum()
    }

    pub fn evaluate(&self, genome: &Genome<F>) -> (F, BehaviorVector<F>) {
        let x = genome.genes()[0];
        (self.fitness_at(x), BehaviorVector::new(vec![x]))
    }

    /// Width-10 scoring bins centered on the peaks, closed intervals.
    pub fn peak_bins() -> BinSpec<F> {
        BinSpec::new(
            PEAKS
                .iter()
                .map(|&(_, mu, _)| (F::of(mu - 5.0), F::of(mu + 5.0)))
                .collect(),
        )
    }
}

impl<F: Real> Default for FourPeaks<F> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp() -> FourPeaks<f64> {
        FourPeaks::new()
    }

    #[test]
    fn peak_tops_match_direct_evaluation() {
        // Cross terms contribute < 1e-6 at the first and last peaks.
        assert!((fp().fitness_at(10.0) - 50.0).abs() < 1e-6);
        assert!((fp().fitness_at(130.0) - 200.0).abs() < 1e-6);
        // The middle peaks pick up small spillover from their neighbors.
        assert!((fp().fitness_at(40.0) - 150.0883833921925).abs() < 1e-9);
        assert!((fp().fitness_at(70.0) - 100.0).abs() < 1e-9);
    }

    #[test]
    fn sum_of_peak_tops_is_near_five_hundred() {
        let d = fp();
        let total: f64 = [10.0, 40.0, 70.0, 130.0].iter().map(|&x| d.fitness_at(x)).sum();
        assert!((total - 500.0).abs() < 0.1, "total {total}");
    }

    #[test]
    fn matches_independent_formula_on_a_grid() {
        let d = fp();
        let oracle = |x: f64| -> f64 {
            let g = |x: f64, mu: f64, s: f64| (-(x - mu).powi(2) / (2.0 * s * s)).exp();
            50.0 * g(x, 10.0, 5.0)
                + 150.0 * g(x, 40.0, 3.0)
                + 100.0 * g(x, 70.0, 8.0)
                + 200.0 * g(x, 130.0, 5.0)
        };
        let mut x = 0.0;
        while x <= 150.0 {
            let got = d.fitness_at(x);
            let want = oracle(x);
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "x = {x}: {got} vs {want}"
            );
            x += 0.37;
        }
    }

    #[test]
    fn nonnegative_and_bounded_on_the_range() {
        let d = fp();
        let mut x = 0.0;
        while x <= 150.0 {
            let f = d.fitness_at(x);
            assert!(f >= 0.0 && f < 500.0);
            x += 0.1;
        }
    }

    #[test]
    fn behavior_is_identity() {
        let d = fp();
        let (_, b) = d.evaluate(&Genome::new(vec![42.5]));
        assert_eq!(b.components(), &[42.5]);
    }
}
