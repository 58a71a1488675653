//! Steady-state evolutionary loop shared by all strategies: one offspring
//! per iteration, uniform parent selection, uniform crossover, Gaussian
//! mutation, archive update, and replacement through `rank_and_cull`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::domains::Domain;
use crate::error::{CoreError, Result};
use crate::individual::{EvaluatedIndividual, Genome, Id};
use crate::metrics::{bin_scores, gnp, gnt, BinHistory, BinSpec, FinalMember, LogRow, RunLog};
use crate::population::{NoveltyArchive, Population};
use crate::ranking::{rank_and_cull, EliteMap, RankingStrategy};
use crate::scalar::Real;

/// Knobs of the underlying steady-state algorithm.
#[derive(Debug, Clone)]
pub struct EAParams<F: Real> {
    pub population_size: usize,
    pub offspring_per_iteration: usize,
    pub crossover_probability: F,
    pub mutation_sigma: F,
    pub iterations: u64,
    pub seed: u64,
}

impl<F: Real> EAParams<F> {
    /// Standard settings: population 20, one offspring per iteration,
    /// crossover always applied, 10,000 iterations.
    pub fn standard(mutation_sigma: F, seed: u64) -> Self {
        EAParams {
            population_size: 20,
            offspring_per_iteration: 1,
            crossover_probability: F::one(),
            mutation_sigma,
            iterations: 10_000,
            seed,
        }
    }
}

/// Everything a single run needs.
#[derive(Debug, Clone)]
pub struct RunConfig<F: Real> {
    pub domain: Domain<F>,
    pub strategy: RankingStrategy<F>,
    pub ea: EAParams<F>,
    pub bins: BinSpec<F>,
}

impl<F: Real> RunConfig<F> {
    /// Uses the domain's default mutation scale and scoring bins.
    pub fn new(domain: Domain<F>, strategy: RankingStrategy<F>, seed: u64) -> Self {
        let sigma = domain.default_sigma();
        let bins = domain.default_bins();
        RunConfig {
            domain,
            strategy,
            ea: EAParams::standard(sigma, seed),
            bins,
        }
    }

    /// Fails fast on configurations that could not run.
    pub fn validate(&self) -> Result<()> {
        if self.ea.population_size < 2 {
            return Err(CoreError::InvalidParameter(
                "population size must be at least 2".into(),
            ));
        }
        if self.ea.offspring_per_iteration == 0 {
            return Err(CoreError::InvalidParameter(
                "need at least one offspring per iteration".into(),
            ));
        }
        if !(self.ea.mutation_sigma > F::zero()) {
            return Err(CoreError::InvalidParameter(
                "mutation sigma must be positive".into(),
            ));
        }
        if self.ea.crossover_probability < F::zero() || self.ea.crossover_probability > F::one() {
            return Err(CoreError::InvalidParameter(
                "crossover probability must be in [0, 1]".into(),
            ));
        }
        match &self.strategy {
            RankingStrategy::Bdma2(dp, _) | RankingStrategy::Bdma2a(dp, _) => {
                if dp.dom_slots + dp.nov_slots != self.ea.population_size {
                    return Err(CoreError::InvalidParameter(format!(
                        "slot split {} + {} must equal population size {}",
                        dp.dom_slots, dp.nov_slots, self.ea.population_size
                    )));
                }
            }
            RankingStrategy::MapElites { bin_width } => {
                if !(*bin_width > F::zero()) {
                    return Err(CoreError::InvalidParameter(
                        "bin width must be positive".into(),
                    ));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// Child with each gene copied from either parent with probability 1/2.
pub fn uniform_crossover<F: Real, R: Rng + ?Sized>(
    p1: &Genome<F>,
    p2: &Genome<F>,
    rng: &mut R,
) -> Genome<F> {
    assert_eq!(p1.len(), p2.len(), "parent genome lengths differ");
    let genes = p1
        .genes()
        .iter()
        .zip(p2.genes())
        .map(|(&a, &b)| if rng.gen::<bool>() { a } else { b })
        .collect();
    Genome::new(genes)
}

/// Independent `Normal(0, sigma^2)` perturbation per gene, then clamping
/// back into the gene range.
pub fn gaussian_mutate<F: Real, R: Rng + ?Sized>(
    genome: &Genome<F>,
    sigma: F,
    rng: &mut R,
) -> Genome<F> {
    let mut child = genome.clone();
    for g in child.genes_mut() {
        *g = *g + sigma * F::sample_std_normal(rng);
    }
    child.clamp();
    child
}

/// Mutable state of one run.
#[derive(Debug)]
pub struct RunState<F: Real> {
    pub population: Population<F>,
    pub archive: NoveltyArchive<F>,
    pub elite_map: Option<EliteMap<F>>,
    pub iteration: u64,
    pub current_w: F,
    pub best_ever: F,
    bin_history: BinHistory<F>,
    next_id: u64,
    rng: ChaCha8Rng,
}

/// What one step changed, beyond the state itself.
#[derive(Debug, Clone, Default)]
pub struct StepDiagnostics<F: Real> {
    pub offspring_id: u64,
    pub deleted: Vec<Id>,
    pub adapted_w: Option<F>,
}

impl<F: Real> RunState<F> {
    /// Draws the initial population with every gene uniform in `[0, 1)`,
    /// evaluates it, and seeds all accumulators.
    pub fn initialize(config: &RunConfig<F>) -> Result<Self> {
        config.validate()?;
        let mut rng = ChaCha8Rng::seed_from_u64(config.ea.seed);
        let mut bin_history = BinHistory::new(&config.bins);
        let mut best_ever = F::neg_infinity();
        let mut members = Vec::with_capacity(config.ea.population_size);
        for id in 0..config.ea.population_size as u64 {
            let genes: Vec<F> = (0..config.domain.genome_len())
                .map(|_| F::sample_unit(&mut rng))
                .collect();
            let genome = Genome::new(genes);
            let (fitness, behavior) = config.domain.evaluate(&genome, &mut rng);
            let ind = EvaluatedIndividual::new(Id(id), genome, fitness, behavior);
            bin_history.record(&config.bins, &ind);
            if fitness > best_ever {
                best_ever = fitness;
            }
            members.push(ind);
        }

        let (population, elite_map) = if let RankingStrategy::MapElites { bin_width } =
            &config.strategy
        {
            let mut map = EliteMap::new(*bin_width, config.domain.behavior_len())?;
            for ind in members {
                map.offer(ind);
            }
            (Population::new(Vec::new(), 0), Some(map))
        } else {
            (
                Population::new(members, config.ea.population_size),
                None,
            )
        };

        let p_add = archive_p_add(&config.strategy);
        let current_w = initial_w(&config.strategy);
        Ok(RunState {
            population,
            archive: NoveltyArchive::new(p_add),
            elite_map,
            iteration: 0,
            current_w,
            best_ever,
            bin_history,
            next_id: config.ea.population_size as u64,
            rng,
        })
    }

    /// The live members: the population, or the elites for MAP-Elites.
    pub fn members(&self) -> Vec<&EvaluatedIndividual<F>> {
        match &self.elite_map {
            Some(map) => map.elites().collect(),
            None => self.population.iter().collect(),
        }
    }

    /// One steady-state iteration. Per offspring, the random stream is
    /// consumed in a fixed order: two parent picks, the crossover draw (only
    /// when the probability is below one), one crossover coin per gene, one
    /// normal per gene, the domain's evaluation draw if any, then the
    /// archive coin for archive-keeping strategies.
    pub fn step(&mut self, config: &RunConfig<F>) -> Result<StepDiagnostics<F>> {
        let mut diagnostics = StepDiagnostics {
            offspring_id: self.next_id,
            ..Default::default()
        };
        let mut offspring = Vec::with_capacity(config.ea.offspring_per_iteration);
        for _ in 0..config.ea.offspring_per_iteration {
            let child = self.breed(config)?;
            self.bin_history.record(&config.bins, &child);
            if child.fitness() > self.best_ever {
                self.best_ever = child.fitness();
            }
            if config.strategy.uses_archive() {
                self.archive.maybe_add(&child, &mut self.rng);
            }
            offspring.push(child);
        }

        if let Some(map) = &mut self.elite_map {
            for child in offspring {
                let candidate_id = child.id();
                let incumbent = map.incumbent(child.behavior()).map(|e| e.id());
                if map.offer(child) {
                    if let Some(previous) = incumbent {
                        diagnostics.deleted.push(previous);
                    }
                } else {
                    diagnostics.deleted.push(candidate_id);
                }
            }
        } else {
            let population = std::mem::replace(&mut self.population, Population::new(Vec::new(), 0));
            let (survivors, cull) = rank_and_cull(
                &config.strategy,
                population,
                offspring,
                &self.archive,
                self.current_w,
            )?;
            self.population = survivors;
            diagnostics.deleted = cull.deleted;
            diagnostics.adapted_w = cull.adapted_w;
            if let Some(w) = cull.adapted_w {
                self.current_w = w;
            }
        }
        self.iteration += 1;
        Ok(diagnostics)
    }

    fn breed(&mut self, config: &RunConfig<F>) -> Result<EvaluatedIndividual<F>> {
        let (g1, g2) = match &self.elite_map {
            Some(map) => {
                let elites: Vec<&EvaluatedIndividual<F>> = map.elites().collect();
                if elites.is_empty() {
                    return Err(CoreError::DegeneratePopulation);
                }
                let a = self.rng.gen_range(0..elites.len());
                let b = self.rng.gen_range(0..elites.len());
                (elites[a].genome().clone(), elites[b].genome().clone())
            }
            None => {
                let n = self.population.len();
                if n == 0 {
                    return Err(CoreError::DegeneratePopulation);
                }
                let a = self.rng.gen_range(0..n);
                let b = self.rng.gen_range(0..n);
                (
                    self.population.get(a).genome().clone(),
                    self.population.get(b).genome().clone(),
                )
            }
        };
        let crossed = if config.ea.crossover_probability >= F::one()
            || F::sample_unit(&mut self.rng) < config.ea.crossover_probability
        {
            uniform_crossover(&g1, &g2, &mut self.rng)
        } else {
            g1
        };
        let mutated = gaussian_mutate(&crossed, config.ea.mutation_sigma, &mut self.rng);
        let (fitness, behavior) = config.domain.evaluate(&mutated, &mut self.rng);
        let id = Id(self.next_id);
        self.next_id += 1;
        Ok(EvaluatedIndividual::new(id, mutated, fitness, behavior))
    }

    fn log_row(&self, bins: &BinSpec<F>) -> LogRow<F> {
        let members = self.members();
        let (total, current) = bin_scores(&self.bin_history, &members, bins);
        // Fewer than two members (a young elite map) logs zero novelty.
        let (gnp_v, gnt_v) = if members.len() >= 2 {
            (
                gnp(&members).expect("two or more members"),
                gnt(&members).expect("two or more members"),
            )
        } else {
            (F::zero(), F::zero())
        };
        LogRow {
            iteration: self.iteration,
            best_fitness: self.best_ever,
            total_bin_score: total,
            current_bin_score: current,
            gnp: gnp_v,
            gnt: gnt_v,
            w: self.current_w,
        }
    }
}

fn archive_p_add<F: Real>(strategy: &RankingStrategy<F>) -> F {
    match strategy {
        RankingStrategy::Novelty(np)
        | RankingStrategy::Lsnf(_, np)
        | RankingStrategy::NsgaNf(np)
        | RankingStrategy::Nslc(np)
            if np.use_archive =>
        {
            np.p_add
        }
        _ => F::zero(),
    }
}

fn initial_w<F: Real>(strategy: &RankingStrategy<F>) -> F {
    match strategy {
        RankingStrategy::Bdma2(dp, _) => dp.w,
        // The adaptive variant starts from 1 and adapts before its first
        // selection.
        RankingStrategy::Bdma2a(..) => F::one(),
        _ => F::zero(),
    }
}

/// Runs the configured number of iterations and returns the full log.
/// Bit-reproducible for a fixed `(config, seed)`.
pub fn run<F: Real>(config: &RunConfig<F>) -> Result<RunLog<F>> {
    let mut state = RunState::initialize(config)?;
    let mut rows = Vec::with_capacity(config.ea.iterations as usize + 1);
    rows.push(state.log_row(&config.bins));
    for _ in 0..config.ea.iterations {
        state.step(config)?;
        rows.push(state.log_row(&config.bins));
    }
    let final_population = state
        .members()
        .into_iter()
        .map(|m| FinalMember {
            id: m.id().0,
            fitness: m.fitness(),
            behavior: m.behavior().components().to_vec(),
            genome: m.genome().genes().to_vec(),
        })
        .collect();
    Ok(RunLog {
        rows,
        final_population,
    })
}
