//! Linear scalarization of novelty and fitness.

use crate::error::{CoreError, Result};
use crate::individual::EvaluatedIndividual;
use crate::population::NoveltyArchive;
use crate::ranking::novelty::novelty_score;
use crate::scalar::Real;

/// Trade-off weight between normalized fitness and normalized novelty.
#[derive(Debug, Clone, Copy)]
pub struct LsnfParams<F: Real> {
    pub p: F,
}

impl<F: Real> LsnfParams<F> {
    pub fn new(p: F) -> Result<Self> {
        if p < F::zero() || p > F::one() {
            return Err(CoreError::InvalidParameter("LSNF p must be in [0, 1]".into()));
        }
        Ok(LsnfParams { p })
    }
}

impl<F: Real> Default for LsnfParams<F> {
    fn default() -> Self {
        LsnfParams { p: F::of(0.5) }
    }
}

/// Scores `(1 - p) * norm_fitness + p * norm_novelty` over the pool, with
/// min/max normalization recomputed from the pool itself. A degenerate term
/// (max equals min) contributes 0 for every individual.
///
/// Returns pool indices ordered best to worst; score ties are broken by
/// ascending id, so the youngest of a tie is ranked worst.
pub fn lsnf_rank<F: Real>(
    pool: &[EvaluatedIndividual<F>],
    params: &LsnfParams<F>,
    archive: Option<&NoveltyArchive<F>>,
    novelty_k: usize,
) -> Result<Vec<usize>> {
    if pool.len() < 2 {
        return Err(CoreError::TooFewMembers(pool.len()));
    }
    let novelty: Vec<F> = pool
        .iter()
        .map(|x| novelty_score(x, pool, archive, novelty_k))
        .collect::<Result<_>>()?;

    let (f_min, f_max) = min_max(pool.iter().map(|x| x.fitness()));
    let (n_min, n_max) = min_max(novelty.iter().copied());

    let scores: Vec<F> = pool
        .iter()
        .zip(&novelty)
        .map(|(x, &n)| {
            let nf = normalized(x.fitness(), f_min, f_max);
            let nn = normalized(n, n_min, n_max);
            (F::one() - params.p) * nf + params.p * nn
        })
        .collect();

    let mut order: Vec<usize> = (0..pool.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .partial_cmp(&scores[a])
            .expect("finite scores")
            .then(pool[a].id().cmp(&pool[b].id()))
    });
    Ok(order)
}

fn min_max<F: Real>(values: impl Iterator<Item = F>) -> (F, F) {
    let mut min = F::infinity();
    let mut max = F::neg_infinity();
    for v in values {
        if v < min {
            min = v;
        }
        if v > max {
            max = v;
        }
    }
    (min, max)
}

fn normalized<F: Real>(v: F, min: F, max: F) -> F {
    if max > min {
        (v - min) / (max - min)
    } else {
        F::zero()
    }
}
