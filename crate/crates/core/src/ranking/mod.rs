//! Ranking and replacement strategies behind a single survivor-selection
//! interface.

pub mod bdma;
pub mod domination;
pub mod lsnf;
pub mod map_elites;
pub mod novelty;
pub mod nsga;

use crate::error::{CoreError, Result};
use crate::individual::{EvaluatedIndividual, Id};
use crate::population::{NoveltyArchive, Population};
use crate::scalar::Real;

pub use bdma::{bdma2a_adapt_w, bdma2_select, DominationParams};
pub use domination::{
    dominates, domination_effect, fast_nondominated_sort, peel_nondominated, strictly_dominates,
    BehaviorMetric, Front, ScaledL2,
};
pub use lsnf::{lsnf_rank, LsnfParams};
pub use map_elites::{bin_coords, BinMetric, EliteMap};
pub use novelty::{local_competition_score, novelty_score, NoveltyParams};
pub use nsga::{nsga2_rank, pareto_dominates};

/// Which of the eight ranking procedures a run uses, with its parameters.
#[derive(Debug, Clone)]
pub enum RankingStrategy<F: Real> {
    /// Rank by raw fitness; behavior is ignored.
    Fitness,
    /// Rank by novelty alone.
    Novelty(NoveltyParams<F>),
    /// Weighted sum of normalized fitness and normalized novelty.
    Lsnf(LsnfParams<F>, NoveltyParams<F>),
    /// NSGA-II over (fitness, novelty).
    NsgaNf(NoveltyParams<F>),
    /// NSGA-II over (local competition, novelty).
    Nslc(NoveltyParams<F>),
    /// One elite per behavior bin; the elite map is the population.
    MapElites { bin_width: F },
    /// Non-dominated sorting under behavior domination with fixed scale.
    Bdma2(DominationParams<F>, NoveltyParams<F>),
    /// Same, with the scale re-adapted from the population every iteration.
    Bdma2a(DominationParams<F>, NoveltyParams<F>),
}

impl<F: Real> RankingStrategy<F> {
    /// Canonical lowercase name, also accepted by the harness config.
    pub fn name(&self) -> &'static str {
        match self {
            RankingStrategy::Fitness => "fitness",
            RankingStrategy::Novelty(_) => "novelty",
            RankingStrategy::Lsnf(..) => "lsnf",
            RankingStrategy::NsgaNf(_) => "nsga_nf",
            RankingStrategy::Nslc(_) => "nslc",
            RankingStrategy::MapElites { .. } => "map_elites",
            RankingStrategy::Bdma2(..) => "bdma2",
            RankingStrategy::Bdma2a(..) => "bdma2a",
        }
    }

    /// Whether evaluated offspring feed the external novelty archive.
    pub fn uses_archive(&self) -> bool {
        match self {
            RankingStrategy::Novelty(p)
            | RankingStrategy::Lsnf(_, p)
            | RankingStrategy::NsgaNf(p)
            | RankingStrategy::Nslc(p) => p.use_archive,
            _ => false,
        }
    }

    pub fn is_map_elites(&self) -> bool {
        matches!(self, RankingStrategy::MapElites { .. })
    }
}

/// Per-step replacement diagnostics.
#[derive(Debug, Clone, Default)]
pub struct CullDiagnostics<F: Real> {
    /// Ids removed this step (for MAP-Elites: the rejected candidate or the
    /// displaced incumbent).
    pub deleted: Vec<Id>,
    /// Scale adapted this step, when the strategy adapts one.
    pub adapted_w: Option<F>,
}

/// Applies the strategy's replacement rule to population plus offspring and
/// returns the survivors at capacity, in ascending id order.
///
/// MAP-Elites is handled by the caller through [`EliteMap::offer`]; calling
/// this with a MAP-Elites strategy is a configuration error.
pub fn rank_and_cull<F: Real>(
    strategy: &RankingStrategy<F>,
    population: Population<F>,
    offspring: Vec<EvaluatedIndividual<F>>,
    archive: &NoveltyArchive<F>,
    current_w: F,
) -> Result<(Population<F>, CullDiagnostics<F>)> {
    let capacity = population.capacity();

    // The adaptive scale is recomputed from the incumbent population before
    // the offspring joins the pool.
    let adapted_w = match strategy {
        RankingStrategy::Bdma2a(..) => Some(bdma2a_adapt_w(population.members(), current_w)?),
        _ => None,
    };

    let mut pool = population.into_members();
    pool.extend(offspring);
    if pool.len() < capacity {
        return Err(CoreError::TooFewMembers(pool.len()));
    }

    let mut diagnostics = CullDiagnostics::default();
    let keep: Vec<usize> = match strategy {
        RankingStrategy::Fitness => {
            let scores: Vec<F> = pool.iter().map(|x| x.fitness()).collect();
            top_by_score(&pool, &scores, capacity)
        }
        RankingStrategy::Novelty(np) => {
            let archive = np.use_archive.then_some(archive);
            let scores: Vec<F> = pool
                .iter()
                .map(|x| novelty_score(x, &pool, archive, np.k))
                .collect::<Result<_>>()?;
            top_by_score(&pool, &scores, capacity)
        }
        RankingStrategy::Lsnf(lp, np) => {
            let archive = np.use_archive.then_some(archive);
            let order = lsnf_rank(&pool, lp, archive, np.k)?;
            let mut keep: Vec<usize> = order.into_iter().take(capacity).collect();
            keep.sort_unstable();
            keep
        }
        RankingStrategy::NsgaNf(np) => {
            let archive = np.use_archive.then_some(archive);
            let objectives: Vec<[F; 2]> = pool
                .iter()
                .map(|x| Ok([x.fitness(), novelty_score(x, &pool, archive, np.k)?]))
                .collect::<Result<_>>()?;
            top_by_nsga(&pool, &objectives, capacity)
        }
        RankingStrategy::Nslc(np) => {
            let archive = np.use_archive.then_some(archive);
            let objectives: Vec<[F; 2]> = pool
                .iter()
                .map(|x| {
                    let lc = local_competition_score(x, &pool, np.k)?;
                    Ok([F::of(lc as f64), novelty_score(x, &pool, archive, np.k)?])
                })
                .collect::<Result<_>>()?;
            top_by_nsga(&pool, &objectives, capacity)
        }
        RankingStrategy::MapElites { .. } => {
            return Err(CoreError::InvalidParameter(
                "MAP-Elites replacement goes through the elite map".into(),
            ))
        }
        RankingStrategy::Bdma2(dp, np) => {
            check_slots(dp, capacity)?;
            bdma2_select(&pool, dp, np.k)?
        }
        RankingStrategy::Bdma2a(dp, np) => {
            check_slots(dp, capacity)?;
            let w = adapted_w.expect("adapted above");
            diagnostics.adapted_w = Some(w);
            bdma2_select(&pool, &DominationParams { w, ..*dp }, np.k)?
        }
    };

    let mut survivors = Vec::with_capacity(capacity);
    for (i, ind) in pool.into_iter().enumerate() {
        if keep.binary_search(&i).is_ok() {
            survivors.push(ind);
        } else {
            diagnostics.deleted.push(ind.id());
        }
    }
    Ok((Population::new(survivors, capacity), diagnostics))
}

fn check_slots<F: Real>(dp: &DominationParams<F>, capacity: usize) -> Result<()> {
    if dp.dom_slots + dp.nov_slots != capacity {
        return Err(CoreError::InvalidParameter(format!(
            "slot split {} + {} must equal capacity {}",
            dp.dom_slots, dp.nov_slots, capacity
        )));
    }
    Ok(())
}

/// Indices of the `capacity` best by score, descending, ties broken by
/// ascending id so the youngest of a tie dies first. Ascending output.
fn top_by_score<F: Real>(
    pool: &[EvaluatedIndividual<F>],
    scores: &[F],
    capacity: usize,
) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pool.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .expect("finite scores")
            .then(pool[a].id().cmp(&pool[b].id()))
    });
    let mut keep: Vec<usize> = order.into_iter().take(capacity).collect();
    keep.sort_unstable();
    keep
}

fn top_by_nsga<F: Real>(
    pool: &[EvaluatedIndividual<F>],
    objectives: &[[F; 2]],
    capacity: usize,
) -> Vec<usize> {
    let ids: Vec<Id> = pool.iter().map(|x| x.id()).collect();
    let order = nsga2_rank(objectives, &ids);
    let mut keep: Vec<usize> = order.into_iter().take(capacity).collect();
    keep.sort_unstable();
    keep
}
