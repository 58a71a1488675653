//! Benchmark environments: fitness evaluation plus behavior
//! characterization in a single call.

pub mod ackley;
pub mod etf;
pub mod four_peaks;

use rand::Rng;

use crate::error::{CoreError, Result};
use crate::individual::{BehaviorVector, Genome};
use crate::metrics::BinSpec;
use crate::scalar::Real;

pub use ackley::FocusedAckley;
pub use etf::{ClawGeometry, Etf};
pub use four_peaks::FourPeaks;

/// One of the three benchmark environments.
#[derive(Debug, Clone)]
pub enum Domain<F: Real> {
    FourPeaks(FourPeaks<F>),
    Etf(Etf<F>),
    FocusedAckley(FocusedAckley<F>),
}

impl<F: Real> Domain<F> {
    /// Builds a domain from its configuration name, with the behavior
    /// stretch `s` (ETF) and dimension `d` (focused Ackley) overrides.
    pub fn from_name(name: &str, s: Option<f64>, d: Option<usize>) -> Result<Self> {
        match name {
            "four_peaks" => Ok(Domain::FourPeaks(FourPeaks::new())),
            "etf" => Ok(Domain::Etf(Etf::new(F::of(s.unwrap_or(100.0))))),
            "focused_ackley" => Ok(Domain::FocusedAckley(FocusedAckley::new(d.unwrap_or(10))?)),
            other => Err(CoreError::UnknownName {
                kind: "domain",
                name: other.to_string(),
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Domain::FourPeaks(_) => "four_peaks",
            Domain::Etf(_) => "etf",
            Domain::FocusedAckley(_) => "focused_ackley",
        }
    }

    pub fn genome_len(&self) -> usize {
        match self {
            Domain::FourPeaks(_) => 1,
            Domain::Etf(_) => 2,
            Domain::FocusedAckley(a) => a.dims(),
        }
    }

    pub fn behavior_len(&self) -> usize {
        match self {
            Domain::FourPeaks(_) => 1,
            Domain::Etf(_) => 1,
            Domain::FocusedAckley(a) => a.dims(),
        }
    }

    /// Mutation scale used when the run config does not override it.
    pub fn default_sigma(&self) -> F {
        match self {
            Domain::FourPeaks(_) => F::one(),
            Domain::Etf(_) => F::of(0.1),
            Domain::FocusedAckley(_) => F::of(0.25),
        }
    }

    /// Behavior bins scored during a run; only four peaks defines any.
    pub fn default_bins(&self) -> BinSpec<F> {
        match self {
            Domain::FourPeaks(_) => FourPeaks::<F>::peak_bins(),
            _ => BinSpec::empty(),
        }
    }

    /// Evaluates a genome once, returning its fitness and behavior. Only the
    /// focused Ackley domain consumes randomness, and only outside its
    /// deterministic region.
    pub fn evaluate<R: Rng + ?Sized>(
        &self,
        genome: &Genome<F>,
        rng: &mut R,
    ) -> (F, BehaviorVector<F>) {
        debug_assert_eq!(genome.len(), self.genome_len());
        match self {
            Domain::FourPeaks(d) => d.evaluate(genome),
            Domain::Etf(d) => d.evaluate(genome),
            Domain::FocusedAckley(d) => d.evaluate(genome, rng),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_name_rejects_unknown() {
        assert!(Domain::<f64>::from_name("maze", None, None).is_err());
    }

    #[test]
    fn from_name_applies_overrides() {
        let d = Domain::<f64>::from_name("etf", Some(1000.0), None).unwrap();
        match d {
            Domain::Etf(e) => assert_eq!(e.stretch(), 1000.0),
            _ => panic!("expected etf"),
        }
        let d = Domain::<f64>::from_name("focused_ackley", None, Some(20)).unwrap();
        assert_eq!(d.genome_len(), 20);
    }
}
