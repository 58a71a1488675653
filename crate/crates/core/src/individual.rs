//! Genomes, behaviors, and evaluated individuals.

use crate::scalar::Real;

/// Lower bound of every gene.
pub const GENE_MIN: f64 = 0.0;
/// Upper bound of every gene.
pub const GENE_MAX: f64 = 150.0;

/// Birth-order identifier, unique within a run and strictly increasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Id(pub u64);

impl std::fmt::Display for Id {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Real-valued solution vector; every gene stays in `[GENE_MIN, GENE_MAX]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Genome<F: Real> {
    genes: Vec<F>,
}

impl<F: Real> Genome<F> {
    /// Builds a genome, clamping each gene into the legal range.
    pub fn new(genes: Vec<F>) -> Self {
        let mut g = Genome { genes };
        g.clamp();
        g
    }

    pub fn len(&self) -> usize {
        self.genes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.genes.is_empty()
    }

    pub fn genes(&self) -> &[F] {
        &self.genes
    }

    pub(crate) fn genes_mut(&mut self) -> &mut [F] {
        &mut self.genes
    }

    /// Clamps every gene to `[GENE_MIN, GENE_MAX]`.
    pub fn clamp(&mut self) {
        let lo = F::of(GENE_MIN);
        let hi = F::of(GENE_MAX);
        for g in &mut self.genes {
            if *g < lo {
                *g = lo;
            } else if *g > hi {
                *g = hi;
            }
        }
    }
}

/// Vector summarizing how a solution behaved during evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct BehaviorVector<F: Real> {
    components: Vec<F>,
}

impl<F: Real> BehaviorVector<F> {
    pub fn new(components: Vec<F>) -> Self {
        debug_assert!(
            components.iter().all(|c| c.is_finite()),
            "behavior components must be finite"
        );
        BehaviorVector { components }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[F] {
        &self.components
    }
}

impl<F: Real> From<Vec<F>> for BehaviorVector<F> {
    fn from(components: Vec<F>) -> Self {
        BehaviorVector::new(components)
    }
}

/// A genome together with its fitness and behavior, evaluated exactly once
/// at creation. Re-evaluation is deliberately impossible: the focused Ackley
/// domain draws random fitness outside its region, so cached values are what
/// keep ranking reproducible.
#[derive(Debug, Clone)]
pub struct EvaluatedIndividual<F: Real> {
    id: Id,
    genome: Genome<F>,
    fitness: F,
    behavior: BehaviorVector<F>,
}

impl<F: Real> EvaluatedIndividual<F> {
    pub fn new(id: Id, genome: Genome<F>, fitness: F, behavior: BehaviorVector<F>) -> Self {
        EvaluatedIndividual {
            id,
            genome,
            fitness,
            behavior,
        }
    }

    pub fn id(&self) -> Id {
        self.id
    }

    pub fn genome(&self) -> &Genome<F> {
        &self.genome
    }

    pub fn fitness(&self) -> F {
        self.fitness
    }

    pub fn behavior(&self) -> &BehaviorVector<F> {
        &self.behavior
    }
}
