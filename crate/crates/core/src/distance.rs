//! Behavior-space distance primitives shared by every ranking strategy.

use crate::error::{CoreError, Result};
use crate::individual::BehaviorVector;
use crate::scalar::Real;

/// Euclidean distance between two behaviors of equal dimension.
pub fn l2_distance<F: Real>(a: &BehaviorVector<F>, b: &BehaviorVector<F>) -> Result<F> {
    if a.dim() != b.dim() {
        return Err(CoreError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let sum: F = a
        .components()
        .iter()
        .zip(b.components())
        .map(|(&x, &y)| {
            let d = x - y;
            d * d
        })
        .sum();
    Ok(sum.sqrt())
}

/// `min(k, |pool|)` nearest pool entries to `target`, as `(distance, index)`
/// pairs sorted ascending by distance, ties broken by ascending pool index.
///
/// The caller is responsible for excluding the target's own entry from the
/// pool. An empty pool yields an empty list.
pub fn k_nearest<F: Real>(
    target: &BehaviorVector<F>,
    pool: &[&BehaviorVector<F>],
    k: usize,
) -> Result<Vec<(F, usize)>> {
    let mut dists = Vec::with_capacity(pool.len());
    for (i, b) in pool.iter().enumerate() {
        dists.push((l2_distance(target, b)?, i));
    }
    dists.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .expect("behavior distances are finite")
            .then(a.1.cmp(&b.1))
    });
    dists.truncate(k);
    Ok(dists)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn bv(c: &[f64]) -> BehaviorVector<f64> {
        BehaviorVector::new(c.to_vec())
    }

    #[test]
    fn l2_matches_hand_cases() {
        assert_eq!(l2_distance(&bv(&[0.0]), &bv(&[0.0])).unwrap(), 0.0);
        assert_eq!(l2_distance(&bv(&[0.0]), &bv(&[10.0])).unwrap(), 10.0);
        assert_eq!(l2_distance(&bv(&[3.0, 4.0]), &bv(&[0.0, 0.0])).unwrap(), 5.0);
    }

    #[test]
    fn l2_rejects_dimension_mismatch() {
        assert!(l2_distance(&bv(&[0.0]), &bv(&[0.0, 1.0])).is_err());
    }

    #[test]
    fn metric_axioms_hold_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let dim = rng.gen_range(1..=4);
            let p: Vec<f64> = (0..dim).map(|_| rng.gen_range(-50.0..50.0)).collect();
            let q: Vec<f64> = (0..dim).map(|_| rng.gen_range(-50.0..50.0)).collect();
            let r: Vec<f64> = (0..dim).map(|_| rng.gen_range(-50.0..50.0)).collect();
            let (p, q, r) = (bv(&p), bv(&q), bv(&r));
            let dpq = l2_distance(&p, &q).unwrap();
            let dqp = l2_distance(&q, &p).unwrap();
            let dpr = l2_distance(&p, &r).unwrap();
            let dqr = l2_distance(&q, &r).unwrap();
            assert!(dpq >= 0.0);
            assert_eq!(dpq, dqp);
            assert_eq!(l2_distance(&p, &p).unwrap(), 0.0);
            // Small slack for floating-point round-off in the triangle check.
            assert!(dpr <= dpq + dqr + 1e-9);
        }
    }

    #[test]
    fn identity_of_indiscernibles() {
        let p = bv(&[1.5, -2.0]);
        let q = bv(&[1.5, -2.0]);
        assert_eq!(l2_distance(&p, &q).unwrap(), 0.0);
        let q = bv(&[1.5, -2.0 + 1e-12]);
        assert!(l2_distance(&p, &q).unwrap() > 0.0);
    }

    #[test]
    fn k_nearest_matches_worked_cases() {
        // Distances from b=0 to {10, 11, 21} with k=2.
        let pool_vals = [bv(&[10.0]), bv(&[11.0]), bv(&[21.0])];
        let pool: Vec<&BehaviorVector<f64>> = pool_vals.iter().collect();
        let got = k_nearest(&bv(&[0.0]), &pool, 2).unwrap();
        assert_eq!(got, vec![(10.0, 0), (11.0, 1)]);

        // Distances from b=11 to {0, 10, 21} with k=2.
        let pool_vals = [bv(&[0.0]), bv(&[10.0]), bv(&[21.0])];
        let pool: Vec<&BehaviorVector<f64>> = pool_vals.iter().collect();
        let got = k_nearest(&bv(&[11.0]), &pool, 2).unwrap();
        assert_eq!(got, vec![(1.0, 1), (10.0, 2)]);
    }

    #[test]
    fn k_larger_than_pool_returns_everything() {
        let pool_vals = [bv(&[5.0])];
        let pool: Vec<&BehaviorVector<f64>> = pool_vals.iter().collect();
        let got = k_nearest(&bv(&[5.0]), &pool, 3).unwrap();
        assert_eq!(got, vec![(0.0, 0)]);
    }

    #[test]
    fn empty_pool_returns_empty_list() {
        let pool: Vec<&BehaviorVector<f64>> = Vec::new();
        assert!(k_nearest(&bv(&[0.0]), &pool, 2).unwrap().is_empty());
    }

    #[test]
    fn k_nearest_is_prefix_of_full_sort() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let n = rng.gen_range(1..=256);
            let pool_vals: Vec<BehaviorVector<f64>> = (0..n)
                .map(|_| bv(&[rng.gen_range(0.0..150.0), rng.gen_range(0.0..150.0)]))
                .collect();
            let pool: Vec<&BehaviorVector<f64>> = pool_vals.iter().collect();
            let target = bv(&[rng.gen_range(0.0..150.0), rng.gen_range(0.0..150.0)]);
            let k = rng.gen_range(1..=n);
            let full = k_nearest(&target, &pool, n).unwrap();
            let got = k_nearest(&target, &pool, k).unwrap();
            assert_eq!(got.as_slice(), &full[..k]);
        }
    }
}
