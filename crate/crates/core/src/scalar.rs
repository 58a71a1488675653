//! Scalar abstraction for the search core.
//!
//! Everything numeric in this crate is generic over [`Real`], so the same
//! algorithms run in `f32` or `f64`. The CLI and experiment harness use the
//! `f64` aliases exported from the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::AddAssign;

use num_traits::{Float, FromPrimitive, ToPrimitive};
use rand::Rng;
use rand_distr::StandardNormal;

/// Floating-point scalar usable for fitness, behavior, and distance math.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + AddAssign + Sum + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` constant (domain parameters, config values).
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Draws from `U[0, 1)`.
    fn sample_unit<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Draws from the standard normal distribution.
    fn sample_std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;
}

impl Real for f32 {
    fn sample_unit<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen::<f32>()
    }

    fn sample_std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}

impl Real for f64 {
    fn sample_unit<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen::<f64>()
    }

    fn sample_std_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.sample(StandardNormal)
    }
}
