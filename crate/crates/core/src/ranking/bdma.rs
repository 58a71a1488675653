//! Non-dominated-sorting selection over the behavior-domination operator,
//! plus online adaptation of the distance scale.

use crate::distance::l2_distance;
use crate::error::{CoreError, Result};
use crate::individual::EvaluatedIndividual;
use crate::ranking::domination::{fast_nondominated_sort, strictly_dominates, ScaledL2};
use crate::ranking::novelty::novelty_score;
use crate::scalar::Real;

/// Scale and slot split for domination-based selection.
#[derive(Debug, Clone, Copy)]
pub struct DominationParams<F: Real> {
    /// Behavior-distance scale; must be positive.
    pub w: F,
    /// Slots filled front-by-front from the non-dominated sort.
    pub dom_slots: usize,
    /// Slots filled by novelty from the leftovers.
    pub nov_slots: usize,
}

impl<F: Real> DominationParams<F> {
    pub fn new(w: F, dom_slots: usize, nov_slots: usize) -> Result<Self> {
        if w <= F::zero() {
            return Err(CoreError::InvalidParameter("w must be positive".into()));
        }
        Ok(DominationParams {
            w,
            dom_slots,
            nov_slots,
        })
    }

    /// Default split for a given capacity: half the population selected by
    /// novelty alone, remainder (rounding up) by domination.
    pub fn with_capacity(w: F, capacity: usize) -> Result<Self> {
        let nov_slots = capacity / 2;
        Self::new(w, capacity - nov_slots, nov_slots)
    }
}

/// Two-phase survivor selection.
///
/// Phase 1 sorts the pool under behavior domination with a `w`-scaled L2
/// distance and fills `dom_slots` front by front. The first front that
/// overflows is trimmed by repeatedly finding the behaviorally closest pair
/// still on it and dropping the less fit of the two (fitness ties drop the
/// younger). Phase 2 fills `nov_slots` from the leftovers by descending
/// novelty over the full pool, no archive. Returns selected pool indices in
/// ascending order.
pub fn bdma2_select<F: Real>(
    pool: &[EvaluatedIndividual<F>],
    params: &DominationParams<F>,
    novelty_k: usize,
) -> Result<Vec<usize>> {
    let metric = ScaledL2 { w: params.w };
    let fronts = fast_nondominated_sort(pool, |a, b| strictly_dominates(a, b, &metric));

    let mut selected: Vec<usize> = Vec::with_capacity(params.dom_slots + params.nov_slots);
    for front in &fronts {
        let room = params.dom_slots - selected.len();
        if room == 0 {
            break;
        }
        if front.members.len() <= room {
            selected.extend_from_slice(&front.members);
        } else {
            let mut remaining = front.members.clone();
            while remaining.len() > room {
                let (_, loser) = closest_pair(pool, &remaining)?;
                remaining.retain(|&i| i != loser);
            }
            selected.extend_from_slice(&remaining);
        }
    }

    // Phase 2: novelty over the full pool decides the remaining slots.
    let mut leftovers: Vec<usize> = (0..pool.len()).filter(|i| !selected.contains(i)).collect();
    if pool.len() > 1 {
        let novelty: Vec<F> = leftovers
            .iter()
            .map(|&i| novelty_score(&pool[i], pool, None, novelty_k))
            .collect::<Result<_>>()?;
        let mut by_novelty: Vec<usize> = (0..leftovers.len()).collect();
        by_novelty.sort_by(|&a, &b| {
            novelty[b]
                .partial_cmp(&novelty[a])
                .expect("finite novelty")
                .then(pool[leftovers[a]].id().cmp(&pool[leftovers[b]].id()))
        });
        leftovers = by_novelty.into_iter().map(|i| leftovers[i]).collect();
    }
    // Unfilled domination slots spill over to novelty selection.
    let spill = params.dom_slots.saturating_sub(selected.len());
    selected.extend(leftovers.into_iter().take(params.nov_slots + spill));

    selected.sort_unstable();
    Ok(selected)
}

/// Behaviorally closest pair among `members`, first-found on distance ties.
/// Returns the pair's winner and the member to drop: the less fit of the
/// two, the younger on fitness ties.
fn closest_pair<F: Real>(
    pool: &[EvaluatedIndividual<F>],
    members: &[usize],
) -> Result<(usize, usize)> {
    debug_assert!(members.len() >= 2);
    let mut best: Option<(F, usize, usize)> = None;
    for (a, &i) in members.iter().enumerate() {
        for &j in &members[a + 1..] {
            let d = l2_distance(pool[i].behavior(), pool[j].behavior())?;
            if best.map_or(true, |(bd, _, _)| d < bd) {
                best = Some((d, i, j));
            }
        }
    }
    let (_, i, j) = best.ok_or(CoreError::TooFewMembers(members.len()))?;
    let (xi, xj) = (&pool[i], &pool[j]);
    let drop_i = match xi.fitness().partial_cmp(&xj.fitness()).expect("finite fitness") {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => xi.id() > xj.id(),
    };
    Ok(if drop_i { (j, i) } else { (i, j) })
}

/// Adapts `w` to the smallest scale at which neither endpoint of the most
/// distant behavior pair is dominated, nudged just above the threshold since
/// a zero effect still dominates. Falls back to `previous_w` when no member
/// out-fits an endpoint, or when an endpoint coincides behaviorally with a
/// strictly fitter member (non-domination unattainable at any scale).
pub fn bdma2a_adapt_w<F: Real>(population: &[EvaluatedIndividual<F>], previous_w: F) -> Result<F> {
    if population.len() < 2 {
        return Err(CoreError::TooFewMembers(population.len()));
    }
    let mut far: Option<(F, usize, usize)> = None;
    for i in 0..population.len() {
        for j in (i + 1)..population.len() {
            let d = l2_distance(population[i].behavior(), population[j].behavior())?;
            if far.map_or(true, |(fd, _, _)| d > fd) {
                far = Some((d, i, j));
            }
        }
    }
    let (_, u, v) = far.expect("population has at least one pair");

    let mut max_ratio: Option<F> = None;
    for &y in &[u, v] {
        let fy = population[y].fitness();
        for (z, other) in population.iter().enumerate() {
            if z == y || other.fitness() <= fy {
                continue;
            }
            let d = l2_distance(other.behavior(), population[y].behavior())?;
            if d == F::zero() {
                // A strictly fitter member sits on top of the endpoint:
                // no finite w makes it non-dominated.
                return Ok(previous_w);
            }
            let ratio = (other.fitness() - fy) / d;
            if max_ratio.map_or(true, |m| ratio > m) {
                max_ratio = Some(ratio);
            }
        }
    }
    match max_ratio {
        // Relative margin 1e-9 per the >= in the domination rule, floored at
        // a few ulps so the nudge survives rounding in f32.
        Some(w_star) => {
            let margin = F::of(1e-9).max(F::epsilon() * F::of(8.0));
            Ok(w_star * (F::one() + margin))
        }
        None => Ok(previous_w),
    }
}
