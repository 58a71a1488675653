//! Novelty scoring and local competition.

use crate::distance::l2_distance;
use crate::error::{CoreError, Result};
use crate::individual::EvaluatedIndividual;
use crate::population::NoveltyArchive;
use crate::scalar::Real;

/// Parameters shared by every novelty-consuming strategy.
#[derive(Debug, Clone)]
pub struct NoveltyParams<F: Real> {
    /// Number of nearest neighbors averaged into the score.
    pub k: usize,
    /// Probability of adding an evaluated offspring's behavior to the archive.
    pub p_add: F,
    /// Whether archive behaviors count as neighbors.
    pub use_archive: bool,
}

impl<F: Real> NoveltyParams<F> {
    pub fn new(k: usize, p_add: F, use_archive: bool) -> Result<Self> {
        if k == 0 {
            return Err(CoreError::InvalidParameter("novelty k must be >= 1".into()));
        }
        if p_add < F::zero() || p_add > F::one() {
            return Err(CoreError::InvalidParameter(
                "p_add must be in [0, 1]".into(),
            ));
        }
        Ok(NoveltyParams {
            k,
            p_add,
            use_archive,
        })
    }
}

impl<F: Real> Default for NoveltyParams<F> {
    /// k = 5, p_add = 0.01, archive enabled.
    fn default() -> Self {
        NoveltyParams {
            k: 5,
            p_add: F::of(0.01),
            use_archive: true,
        }
    }
}

/// Mean distance from `x` to the `k` nearest behaviors among the pool
/// (excluding `x`'s own entry) and, optionally, the archive. With fewer than
/// `k` neighbors available, averages over all of them.
pub fn novelty_score<F: Real>(
    x: &EvaluatedIndividual<F>,
    pool: &[EvaluatedIndividual<F>],
    archive: Option<&NoveltyArchive<F>>,
    k: usize,
) -> Result<F> {
    let mut dists: Vec<F> = Vec::with_capacity(pool.len());
    for other in pool {
        if other.id() == x.id() {
            continue;
        }
        dists.push(l2_distance(x.behavior(), other.behavior())?);
    }
    if let Some(archive) = archive {
        for b in archive.behaviors() {
            dists.push(l2_distance(x.behavior(), b)?);
        }
    }
    if dists.is_empty() {
        return Err(CoreError::DegeneratePopulation);
    }
    dists.sort_by(|a, b| a.partial_cmp(b).expect("finite distances"));
    let k = k.min(dists.len());
    let sum: F = dists[..k].iter().copied().sum();
    Ok(sum / F::of(k as f64))
}

/// Count of `x`'s `k` behavior-nearest pool neighbors with strictly lower
/// fitness. Neighbor ties are broken by ascending pool index.
pub fn local_competition_score<F: Real>(
    x: &EvaluatedIndividual<F>,
    pool: &[EvaluatedIndividual<F>],
    k: usize,
) -> Result<usize> {
    let mut dists: Vec<(F, usize)> = Vec::with_capacity(pool.len());
    for (i, other) in pool.iter().enumerate() {
        if other.id() == x.id() {
            continue;
        }
        dists.push((l2_distance(x.behavior(), other.behavior())?, i));
    }
    dists.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .expect("finite distances")
            .then(a.1.cmp(&b.1))
    });
    Ok(dists
        .iter()
        .take(k)
        .filter(|&&(_, i)| pool[i].fitness() < x.fitness())
        .count())
}
