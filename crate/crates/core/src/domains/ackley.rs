//! Focused Ackley domain: a deterministic corridor of the search space is
//! scored by an Ackley-style ripple that climbs away from the origin, and
//! everything outside the corridor returns uniform noise. The local maxima
//! lining the corridor are the stepping stones; the noise is the distraction.

use rand::Rng;

use crate::error::{CoreError, Result};
use crate::individual::{BehaviorVector, Genome};
use crate::scalar::Real;

const A: f64 = 500.0;
const B: f64 = 0.0005;

#[derive(Debug, Clone)]
pub struct FocusedAckley<F: Real> {
    dims: usize,
    a: F,
    b: F,
    c: F,
}

impl<F: Real> FocusedAckley<F> {
    /// `dims` is the genome and behavior dimension, at least 2.
    pub fn new(dims: usize) -> Result<Self> {
        if dims < 2 {
            return Err(CoreError::InvalidParameter(
                "focused Ackley needs at least 2 dimensions".into(),
            ));
        }
        Ok(FocusedAckley {
            dims,
            a: F::of(A),
            b: F::of(B),
            c: F::of(std::f64::consts::PI),
        })
    }

    pub fn dims(&self) -> usize {
        self.dims
    }

    /// Ackley ripple over the first two coordinates, oriented for
    /// maximization: zero at the origin, rising with radius, with local
    /// maxima on the odd-integer lattice (period 2 in each coordinate).
    pub fn ackley_value(&self, x0: F, x1: F) -> F {
        let two = F::of(2.0);
        let radial = self.a * (-self.b * ((x0 * x0 + x1 * x1) / two).sqrt()).exp();
        let ripple = (((self.c * x0).cos() + (self.c * x1).cos()) / two).exp();
        self.a + F::of(std::f64::consts::E) - radial - ripple
    }

    /// The deterministic region: the first two coordinates nearly agree and
    /// the remaining coordinates stay small in total.
    pub fn in_region(&self, genes: &[F]) -> bool {
        let tail: F = genes[2..].iter().copied().sum();
        (genes[0] - genes[1]).abs() < F::of(2.0) && tail < F::of(self.dims as f64) / F::of(2.0)
    }

    /// In-region fitness is the deterministic ripple value and consumes no
    /// randomness; out-of-region fitness is a single `U[0, 1)` draw, cached
    /// for the individual's lifetime by the caller.
    pub fn evaluate<R: Rng + ?Sized>(&self, genome: &Genome<F>, rng: &mut R) -> (F, BehaviorVector<F>) {
        let genes = genome.genes();
        let fitness = if self.in_region(genes) {
            self.ackley_value(genes[0], genes[1])
        } else {
            F::sample_unit(rng)
        };
        (fitness, BehaviorVector::new(genes.to_vec()))
    }
}
