//! The behavior-domination operator and fast non-dominated sorting.

use crate::individual::{BehaviorVector, EvaluatedIndividual};
use crate::scalar::Real;

/// Distance over behaviors, pluggable into the domination effect.
pub trait BehaviorMetric<F: Real> {
    fn distance(&self, a: &BehaviorVector<F>, b: &BehaviorVector<F>) -> F;
}

/// Euclidean distance scaled by `w`. Larger `w` shifts emphasis from fitness
/// toward behavioral separation.
#[derive(Debug, Clone, Copy)]
pub struct ScaledL2<F: Real> {
    pub w: F,
}

impl<F: Real> BehaviorMetric<F> for ScaledL2<F> {
    fn distance(&self, a: &BehaviorVector<F>, b: &BehaviorVector<F>) -> F {
        debug_assert_eq!(a.dim(), b.dim(), "behavior dimension mismatch");
        let sum: F = a
            .components()
            .iter()
            .zip(b.components())
            .map(|(&x, &y)| {
                let d = x - y;
                d * d
            })
            .sum();
        self.w * sum.sqrt()
    }
}

/// Signed effect of `x` on `y`: fitness gap minus behavior distance.
/// Positive means `x` suppresses `y`; `e(x, x) = 0`.
pub fn domination_effect<F: Real, M: BehaviorMetric<F>>(
    x: &EvaluatedIndividual<F>,
    y: &EvaluatedIndividual<F>,
    metric: &M,
) -> F {
    x.fitness() - y.fitness() - metric.distance(x.behavior(), y.behavior())
}

/// `x` dominates `y` when the domination effect is non-negative.
/// Reflexive: every solution dominates itself.
pub fn dominates<F: Real, M: BehaviorMetric<F>>(
    x: &EvaluatedIndividual<F>,
    y: &EvaluatedIndividual<F>,
    metric: &M,
) -> bool {
    domination_effect(x, y, metric) >= F::zero()
}

/// Strict form used for sorting. Mutual domination only happens for exact
/// coincidence (equal fitness, zero distance); those ties go to the elder so
/// the relation stays a strict partial order and fronts stay well defined.
pub fn strictly_dominates<F: Real, M: BehaviorMetric<F>>(
    x: &EvaluatedIndividual<F>,
    y: &EvaluatedIndividual<F>,
    metric: &M,
) -> bool {
    if domination_effect(x, y, metric) < F::zero() {
        return false;
    }
    domination_effect(y, x, metric) < F::zero() || x.id() < y.id()
}

/// One rank of a non-dominated sort; members are indices into the sorted
/// collection, in ascending input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Front {
    pub rank: usize,
    pub members: Vec<usize>,
}

/// Fast non-dominated sort. `dominates` must be a strict partial order
/// (irreflexive, asymmetric, transitive); front 0 holds items dominated by
/// none, front i items dominated only by earlier fronts.
pub fn fast_nondominated_sort<T>(
    items: &[T],
    dominates: impl Fn(&T, &T) -> bool,
) -> Vec<Front> {
    let n = items.len();
    if n == 0 {
        return Vec::new();
    }

    let mut dominated_by_count = vec![0usize; n];
    let mut dominated_set: Vec<Vec<usize>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if dominates(&items[i], &items[j]) {
                dominated_set[i].push(j);
                dominated_by_count[j] += 1;
            } else if dominates(&items[j], &items[i]) {
                dominated_set[j].push(i);
                dominated_by_count[i] += 1;
            }
        }
    }

    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| dominated_by_count[i] == 0).collect();
    let mut assigned = 0usize;
    let mut rank = 0usize;
    while !current.is_empty() {
        assigned += current.len();
        let mut next = Vec::new();
        for &i in &current {
            for &j in &dominated_set[i] {
                dominated_by_count[j] -= 1;
                if dominated_by_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        next.sort_unstable();
        fronts.push(Front {
            rank,
            members: current,
        });
        current = next;
        rank += 1;
    }
    assert_eq!(
        assigned, n,
        "dominance relation is not a strict partial order (cycle detected)"
    );
    fronts
}

/// Reference implementation: repeatedly peel off the set of items dominated
/// by no remaining item. Used as an oracle in tests.
pub fn peel_nondominated<T>(items: &[T], dominates: impl Fn(&T, &T) -> bool) -> Vec<Front> {
    let mut remaining: Vec<usize> = (0..items.len()).collect();
    let mut fronts = Vec::new();
    let mut rank = 0usize;
    while !remaining.is_empty() {
        let front: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&i| {
                !remaining
                    .iter()
                    .any(|&j| j != i && dominates(&items[j], &items[i]))
            })
            .collect();
        assert!(
            !front.is_empty(),
            "dominance relation is not a strict partial order (cycle detected)"
        );
        remaining.retain(|i| !front.contains(i));
        fronts.push(Front {
            rank,
            members: front,
        });
        rank += 1;
    }
    fronts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::individual::{Genome, Id};
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ind(id: u64, fitness: f64, behavior: &[f64]) -> EvaluatedIndividual<f64> {
        EvaluatedIndividual::new(
            Id(id),
            Genome::new(behavior.to_vec()),
            fitness,
            BehaviorVector::new(behavior.to_vec()),
        )
    }

    #[test]
    fn effect_matches_definition() {
        let m = ScaledL2 { w: 1.0 };
        let x = ind(0, 5.0, &[0.0]);
        let y = ind(1, 3.0, &[1.0]);
        assert_eq!(domination_effect(&x, &y, &m), 1.0);
        assert_eq!(domination_effect(&y, &x, &m), -3.0);
        assert_eq!(domination_effect(&x, &x, &m), 0.0);
    }

    #[test]
    fn effect_antisymmetry_identity() {
        // e(x, y) + e(y, x) = -2 d(b(x), b(y))
        let m = ScaledL2 { w: 2.0 };
        let x = ind(0, 7.5, &[3.0, 4.0]);
        let y = ind(1, -1.0, &[0.0, 0.0]);
        let sum = domination_effect(&x, &y, &m) + domination_effect(&y, &x, &m);
        assert_eq!(sum, -2.0 * m.distance(x.behavior(), y.behavior()));
    }

    #[test]
    fn dominates_boundary_is_inclusive() {
        let x = ind(0, 5.0, &[0.0]);
        let y = ind(1, 3.0, &[1.0]);
        assert!(dominates(&x, &y, &ScaledL2 { w: 1.0 })); // e = 1
        assert!(dominates(&x, &y, &ScaledL2 { w: 2.0 })); // e = 0, boundary
        assert!(!dominates(&x, &y, &ScaledL2 { w: 2.5 })); // e = -0.5
    }

    #[test]
    fn partial_order_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = ScaledL2 { w: 1.0 };
        for _ in 0..10_000 {
            let mk = |id: u64, rng: &mut ChaCha8Rng| {
                let f = rng.gen_range(-10.0..10.0);
                let b = [rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)];
                ind(id, f, &b)
            };
            let x = mk(0, &mut rng);
            let y = mk(1, &mut rng);
            let z = mk(2, &mut rng);
            assert!(dominates(&x, &x, &m));
            if dominates(&x, &y, &m) && dominates(&y, &x, &m) {
                assert_eq!(x.fitness(), y.fitness());
                assert_eq!(m.distance(x.behavior(), y.behavior()), 0.0);
            }
            if dominates(&x, &y, &m) && dominates(&y, &z, &m) {
                assert!(dominates(&x, &z, &m));
            }
        }
    }

    #[test]
    fn nondomination_is_stable_under_unrelated_edits() {
        // The pairwise verdict depends only on the two solutions involved.
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let m = ScaledL2 { w: 4.0 };
        for _ in 0..1_000 {
            let z = ind(0, rng.gen_range(0.0..10.0), &[rng.gen_range(0.0..20.0)]);
            let x = ind(1, rng.gen_range(0.0..10.0), &[rng.gen_range(0.0..20.0)]);
            let verdict = dominates(&z, &x, &m);
            // "Edit" the rest of the population arbitrarily; recompute.
            let _others: Vec<_> = (2..10)
                .map(|i| ind(i, rng.gen_range(0.0..10.0), &[rng.gen_range(0.0..20.0)]))
                .collect();
            assert_eq!(dominates(&z, &x, &m), verdict);
        }
    }

    #[test]
    fn four_mutually_nondominated_form_one_front() {
        let m = ScaledL2 { w: 1.0 };
        let pool = vec![
            ind(0, 0.0, &[0.0]),
            ind(1, 1.0, &[10.0]),
            ind(2, 2.0, &[20.0]),
            ind(3, 3.0, &[30.0]),
        ];
        let fronts = fast_nondominated_sort(&pool, |a, b| strictly_dominates(a, b, &m));
        assert_eq!(fronts.len(), 1);
        assert_eq!(fronts[0].members, vec![0, 1, 2, 3]);
    }

    #[test]
    fn coincident_duplicates_split_by_age() {
        let m = ScaledL2 { w: 1.0 };
        let pool = vec![ind(0, 2.0, &[5.0]), ind(1, 2.0, &[5.0])];
        assert!(dominates(&pool[0], &pool[1], &m));
        assert!(dominates(&pool[1], &pool[0], &m));
        assert!(strictly_dominates(&pool[0], &pool[1], &m));
        assert!(!strictly_dominates(&pool[1], &pool[0], &m));
        let fronts = fast_nondominated_sort(&pool, |a, b| strictly_dominates(a, b, &m));
        assert_eq!(fronts.len(), 2);
        assert_eq!(fronts[0].members, vec![0]);
        assert_eq!(fronts[1].members, vec![1]);
    }

    #[test]
    fn sort_matches_peeling_oracle_on_random_sets() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let n = rng.gen_range(1..=32);
            let w = rng.gen_range(0.1..4.0);
            let m = ScaledL2 { w };
            let pool: Vec<_> = (0..n)
                .map(|i| {
                    ind(
                        i,
                        rng.gen_range(0.0..10.0),
                        &[rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)],
                    )
                })
                .collect();
            let fast = fast_nondominated_sort(&pool, |a, b| strictly_dominates(a, b, &m));
            let slow = peel_nondominated(&pool, |a, b| strictly_dominates(a, b, &m));
            assert_eq!(fast, slow);
        }
    }
}
