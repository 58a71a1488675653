//! Behavior-space elite map.

use std::collections::BTreeMap;

use crate::error::{CoreError, Result};
use crate::individual::{BehaviorVector, EvaluatedIndividual};
use crate::ranking::domination::BehaviorMetric;
use crate::scalar::Real;

/// Integer bin coordinates of a behavior: `floor(component / width)` per
/// dimension.
pub fn bin_coords<F: Real>(behavior: &BehaviorVector<F>, widths: &[F]) -> Vec<i64> {
    debug_assert_eq!(behavior.dim(), widths.len());
    behavior
        .components()
        .iter()
        .zip(widths)
        .map(|(&c, &w)| (c / w).floor().to_i64().expect("bin index in i64 range"))
        .collect()
}

/// Keeps the single highest-fitness individual per visited behavior bin.
/// The map only ever grows; incumbents survive fitness ties.
#[derive(Debug, Clone)]
pub struct EliteMap<F: Real> {
    widths: Vec<F>,
    bins: BTreeMap<Vec<i64>, EvaluatedIndividual<F>>,
}

impl<F: Real> EliteMap<F> {
    /// Same bin width across `dims` behavior dimensions.
    pub fn new(bin_width: F, dims: usize) -> Result<Self> {
        if bin_width <= F::zero() {
            return Err(CoreError::InvalidParameter(
                "bin width must be positive".into(),
            ));
        }
        Ok(EliteMap {
            widths: vec![bin_width; dims],
            bins: BTreeMap::new(),
        })
    }

    pub fn widths(&self) -> &[F] {
        &self.widths
    }

    pub fn len(&self) -> usize {
        self.bins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bins.is_empty()
    }

    /// Elites in deterministic (bin-coordinate) order.
    pub fn elites(&self) -> impl Iterator<Item = &EvaluatedIndividual<F>> {
        self.bins.values()
    }

    pub fn bin_of(&self, behavior: &BehaviorVector<F>) -> Vec<i64> {
        bin_coords(behavior, &self.widths)
    }

    /// Current elite of the bin this behavior falls into, if any.
    pub fn incumbent(&self, behavior: &BehaviorVector<F>) -> Option<&EvaluatedIndividual<F>> {
        self.bins.get(&self.bin_of(behavior))
    }

    /// Stores the candidate iff its bin is empty or its fitness strictly
    /// exceeds the incumbent's. Returns whether it was accepted.
    pub fn offer(&mut self, candidate: EvaluatedIndividual<F>) -> bool {
        let key = self.bin_of(candidate.behavior());
        match self.bins.get(&key) {
            Some(incumbent) if candidate.fitness() <= incumbent.fitness() => false,
            _ => {
                self.bins.insert(key, candidate);
                true
            }
        }
    }
}

/// The elite map's implied behavior distance: zero within a bin, infinite
/// across bins. Under this metric the non-dominated solutions are exactly
/// the elites.
#[derive(Debug, Clone)]
pub struct BinMetric<F: Real> {
    pub widths: Vec<F>,
}

impl<F: Real> BehaviorMetric<F> for BinMetric<F> {
    fn distance(&self, a: &BehaviorVector<F>, b: &BehaviorVector<F>) -> F {
        if bin_coords(a, &self.widths) == bin_coords(b, &self.widths) {
            F::zero()
        } else {
            F::infinity()
        }
    }
}
