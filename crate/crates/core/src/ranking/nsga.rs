//! NSGA-II style ranking on a pair of maximization objectives.

use crate::individual::Id;
use crate::ranking::domination::fast_nondominated_sort;
use crate::scalar::Real;

/// Standard maximization Pareto dominance: at least as good in both
/// objectives and strictly better in one.
pub fn pareto_dominates<F: Real>(a: &[F; 2], b: &[F; 2]) -> bool {
    a[0] >= b[0] && a[1] >= b[1] && (a[0] > b[0] || a[1] > b[1])
}

/// Crowding distance per member of one front, boundary points infinite.
fn crowding_distances<F: Real>(objectives: &[[F; 2]], front: &[usize]) -> Vec<F> {
    let n = front.len();
    let mut crowd = vec![F::zero(); n];
    if n <= 2 {
        return vec![F::infinity(); n];
    }
    for obj in 0..2 {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            objectives[front[a]][obj]
                .partial_cmp(&objectives[front[b]][obj])
                .expect("finite objectives")
        });
        crowd[order[0]] = F::infinity();
        crowd[order[n - 1]] = F::infinity();
        let lo = objectives[front[order[0]]][obj];
        let hi = objectives[front[order[n - 1]]][obj];
        let range = hi - lo;
        if range > F::zero() {
            for i in 1..n - 1 {
                let prev = objectives[front[order[i - 1]]][obj];
                let next = objectives[front[order[i + 1]]][obj];
                crowd[order[i]] += (next - prev) / range;
            }
        }
    }
    crowd
}

/// Total order from front rank (ascending), then crowding distance
/// (descending), then id (ascending). Returns indices best to worst, so the
/// last entry is the deletion candidate.
pub fn nsga2_rank<F: Real>(objectives: &[[F; 2]], ids: &[Id]) -> Vec<usize> {
    assert_eq!(objectives.len(), ids.len());
    let fronts = fast_nondominated_sort(objectives, |a, b| pareto_dominates(a, b));
    let n = objectives.len();
    let mut rank = vec![0usize; n];
    let mut crowd = vec![F::zero(); n];
    for front in &fronts {
        let c = crowding_distances(objectives, &front.members);
        for (pos, &i) in front.members.iter().enumerate() {
            rank[i] = front.rank;
            crowd[i] = c[pos];
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        rank[a]
            .cmp(&rank[b])
            .then_with(|| crowd[b].partial_cmp(&crowd[a]).expect("crowding is ordered"))
            .then_with(|| ids[a].cmp(&ids[b]))
    });
    order
}
