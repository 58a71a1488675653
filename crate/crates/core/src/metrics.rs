//! Global novelty measures, behavior-bin scores, and the per-run log.

use crate::distance::l2_distance;
use crate::error::{CoreError, Result};
use crate::individual::EvaluatedIndividual;
use crate::scalar::Real;

/// Maximum behavior distance over all population pairs.
pub fn gnp<F: Real>(members: &[&EvaluatedIndividual<F>]) -> Result<F> {
    pairwise(members, |acc, d| if d > acc { d } else { acc })
}

/// Total behavior distance over all population pairs.
pub fn gnt<F: Real>(members: &[&EvaluatedIndividual<F>]) -> Result<F> {
    pairwise(members, |acc, d| acc + d)
}

fn pairwise<F: Real>(
    members: &[&EvaluatedIndividual<F>],
    fold: impl Fn(F, F) -> F,
) -> Result<F> {
    if members.len() < 2 {
        return Err(CoreError::TooFewMembers(members.len()));
    }
    let mut acc = F::zero();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            let d = l2_distance(members[i].behavior(), members[j].behavior())?;
            acc = fold(acc, d);
        }
    }
    Ok(acc)
}

/// Closed scoring intervals over the first behavior component.
#[derive(Debug, Clone)]
pub struct BinSpec<F: Real> {
    intervals: Vec<(F, F)>,
}

impl<F: Real> BinSpec<F> {
    pub fn new(intervals: Vec<(F, F)>) -> Self {
        debug_assert!(intervals.iter().all(|&(lo, hi)| lo <= hi));
        BinSpec { intervals }
    }

    pub fn empty() -> Self {
        BinSpec { intervals: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Index of the bin containing the behavior's first component, if any.
    /// Boundary points belong to the bin.
    pub fn bin_of(&self, behavior_head: F) -> Option<usize> {
        self.intervals
            .iter()
            .position(|&(lo, hi)| behavior_head >= lo && behavior_head <= hi)
    }
}

/// Running best-ever fitness per bin, fed with every individual created.
#[derive(Debug, Clone)]
pub struct BinHistory<F: Real> {
    best: Vec<Option<F>>,
}

impl<F: Real> BinHistory<F> {
    pub fn new(bins: &BinSpec<F>) -> Self {
        BinHistory {
            best: vec![None; bins.len()],
        }
    }

    /// Records one evaluation into its bin's best-ever slot.
    pub fn record(&mut self, bins: &BinSpec<F>, individual: &EvaluatedIndividual<F>) {
        if let Some(head) = individual.behavior().components().first() {
            if let Some(i) = bins.bin_of(*head) {
                let f = individual.fitness();
                if self.best[i].map_or(true, |b| f > b) {
                    self.best[i] = Some(f);
                }
            }
        }
    }

    /// Sum of best-ever fitness across bins; unvisited bins count zero.
    pub fn total_score(&self) -> F {
        self.best.iter().map(|b| b.unwrap_or_else(F::zero)).sum()
    }
}

/// (total, current) bin scores: best fitness ever achieved per bin, and
/// best per bin within the current members only. Current never exceeds
/// total.
pub fn bin_scores<F: Real>(
    history: &BinHistory<F>,
    current: &[&EvaluatedIndividual<F>],
    bins: &BinSpec<F>,
) -> (F, F) {
    let mut per_bin: Vec<Option<F>> = vec![None; bins.len()];
    for m in current {
        if let Some(head) = m.behavior().components().first() {
            if let Some(i) = bins.bin_of(*head) {
                if per_bin[i].map_or(true, |b| m.fitness() > b) {
                    per_bin[i] = Some(m.fitness());
                }
            }
        }
    }
    let current_score: F = per_bin.iter().map(|b| b.unwrap_or_else(F::zero)).sum();
    (history.total_score(), current_score)
}

/// One per-iteration record of the run time series.
#[derive(Debug, Clone, PartialEq)]
pub struct LogRow<F: Real> {
    pub iteration: u64,
    pub best_fitness: F,
    pub total_bin_score: F,
    pub current_bin_score: F,
    pub gnp: F,
    pub gnt: F,
    pub w: F,
}

/// Snapshot of one surviving individual at the end of a run.
#[derive(Debug, Clone)]
pub struct FinalMember<F: Real> {
    pub id: u64,
    pub fitness: F,
    pub behavior: Vec<F>,
    pub genome: Vec<F>,
}

/// Full per-iteration time series plus the final population.
#[derive(Debug, Clone)]
pub struct RunLog<F: Real> {
    pub rows: Vec<LogRow<F>>,
    pub final_population: Vec<FinalMember<F>>,
}

impl<F: Real> RunLog<F> {
    /// Best fitness achieved over the whole run.
    pub fn final_best_fitness(&self) -> F {
        self.rows.last().map(|r| r.best_fitness).unwrap_or_else(F::zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::individual::{BehaviorVector, Genome, Id};

    fn ind(id: u64, fitness: f64, b: f64) -> EvaluatedIndividual<f64> {
        EvaluatedIndividual::new(
            Id(id),
            Genome::new(vec![b]),
            fitness,
            BehaviorVector::new(vec![b]),
        )
    }

    fn refs<F: crate::scalar::Real>(
        v: &[EvaluatedIndividual<F>],
    ) -> Vec<&EvaluatedIndividual<F>> {
        v.iter().collect()
    }

    #[test]
    fn gnp_gnt_match_worked_values() {
        // P with x2 removed: behaviors {0, 10, 21}, pair distances
        // 10 + 21 + 11 = 42.
        let survivors = vec![ind(0, 0.0, 0.0), ind(1, 11.0, 10.0), ind(3, 0.0, 21.0)];
        assert_eq!(gnp(&refs(&survivors)).unwrap(), 21.0);
        assert_eq!(gnt(&refs(&survivors)).unwrap(), 42.0);

        // P' with x0 removed: behaviors {10, 11, 22}.
        let survivors = vec![ind(1, 11.0, 10.0), ind(2, 10.0, 11.0), ind(4, 0.0, 22.0)];
        assert_eq!(gnp(&refs(&survivors)).unwrap(), 12.0);
        assert_eq!(gnt(&refs(&survivors)).unwrap(), 24.0);
    }

    #[test]
    fn identical_behaviors_have_zero_novelty_measures() {
        let members = vec![ind(0, 1.0, 5.0), ind(1, 2.0, 5.0), ind(2, 3.0, 5.0)];
        assert_eq!(gnp(&refs(&members)).unwrap(), 0.0);
        assert_eq!(gnt(&refs(&members)).unwrap(), 0.0);
    }

    #[test]
    fn two_members_give_gnt_equal_gnp() {
        let members = vec![ind(0, 1.0, 2.0), ind(1, 2.0, 9.0)];
        assert_eq!(gnp(&refs(&members)).unwrap(), 7.0);
        assert_eq!(gnt(&refs(&members)).unwrap(), 7.0);
    }

    #[test]
    fn too_few_members_is_an_error() {
        let members = vec![ind(0, 1.0, 2.0)];
        assert!(gnp(&refs(&members)).is_err());
        assert!(gnt(&refs(&members)).is_err());
    }

    #[test]
    fn gnt_dominates_gnp() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let n = rng.gen_range(2..10);
            let members: Vec<_> = (0..n)
                .map(|i| ind(i, 0.0, rng.gen_range(0.0..100.0)))
                .collect();
            assert!(gnt(&refs(&members)).unwrap() >= gnp(&refs(&members)).unwrap());
        }
    }

    #[test]
    fn bin_scores_track_history_and_current() {
        let bins = BinSpec::new(vec![(5.0, 15.0), (35.0, 45.0), (65.0, 75.0), (125.0, 135.0)]);
        let mut history = BinHistory::new(&bins);
        let visitors = vec![
            ind(0, 50.0, 10.0),
            ind(1, 150.0, 40.0),
            ind(2, 100.0, 70.0),
            ind(3, 200.0, 130.0),
        ];
        for v in &visitors {
            history.record(&bins, v);
        }
        let (total, current) = bin_scores(&history, &refs(&visitors), &bins);
        assert_eq!(total, 500.0);
        assert_eq!(current, 500.0);

        // Population collapsed onto the highest peak only.
        let converged = vec![ind(4, 200.0, 130.0), ind(5, 199.0, 129.5)];
        history.record(&bins, &converged[0]);
        history.record(&bins, &converged[1]);
        let (total, current) = bin_scores(&history, &refs(&converged), &bins);
        assert_eq!(total, 500.0);
        assert_eq!(current, 200.0);
        assert!(current <= total);
    }

    #[test]
    fn boundary_points_belong_to_the_bin() {
        let bins = BinSpec::new(vec![(5.0, 15.0)]);
        assert_eq!(bins.bin_of(5.0), Some(0));
        assert_eq!(bins.bin_of(15.0), Some(0));
        assert_eq!(bins.bin_of(15.000001), None);
    }

    #[test]
    fn empty_history_scores_zero() {
        let bins = BinSpec::new(vec![(0.0, 1.0)]);
        let history = BinHistory::new(&bins);
        let (total, current) = bin_scores(&history, &[], &bins);
        assert_eq!(total, 0.0);
        assert_eq!(current, 0.0);
    }
}
