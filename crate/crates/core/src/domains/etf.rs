//! Exponential-focus domain: a chain of claw-shaped fitness regions whose
//! value doubles-and-then-some from claw to claw. Each claw's vertical and
//! horizontal toe tips are complementary stepping stones: one uniform
//! crossover of the two tips lands exactly on the next claw's heel.

use crate::individual::{BehaviorVector, Genome, GENE_MAX};
use crate::scalar::Real;

/// Toe band width.
const EPSILON: f64 = 0.2;

#[derive(Debug, Clone, Copy)]
struct Claw<F: Real> {
    heel: [F; 2],
    heel_fitness: F,
    horizontal_len: F,
    vertical_len: F,
    diagonal_len: F,
    index: u32,
}

/// Placement of one claw, exposed for tests and tooling.
#[derive(Debug, Clone, PartialEq)]
pub struct ClawGeometry<F: Real> {
    pub heel: [F; 2],
    pub heel_fitness: F,
    pub vertical_tip: [F; 2],
    pub horizontal_tip: [F; 2],
    pub diagonal_tip: [F; 2],
}

#[derive(Debug, Clone)]
pub struct Etf<F: Real> {
    stretch: F,
    half_width: F,
    claws: Vec<Claw<F>>,
}

impl<F: Real> Etf<F> {
    /// `stretch` scales the first solution dimension into behavior space.
    ///
    /// Claw `i` sits at heel height `i` with a unit vertical toe, a
    /// horizontal toe of length `i + 2`, and a deceptive diagonal toe of
    /// length `5 i + 4` between them. The next heel at `heel + (i + 2, 1)`
    /// is exactly the component swap of the vertical and horizontal tips,
    /// so one uniform crossover of the two tips reaches it.
    ///
    /// The diagonal carries the claw's highest reward and, because it
    /// overshoots the horizontal tip in behavior space, also its highest
    /// novelty, while both crossover tips stay more than `200 i` behavior
    /// units away from any point of it. Under a distance scale proportional
    /// to `1 / stretch` that keeps the fitness gap `i` unable to reach
    /// across, sheltering the tips until the crossover fires. Claws are
    /// laid out until one would leave the gene range.
    pub fn new(stretch: F) -> Self {
        let mut claws = Vec::new();
        let mut heel_x = F::one();
        let mut fitness = F::one();
        let mut i = 1u32;
        loop {
            let horizontal_len = F::of(i as f64 + 2.0);
            let diagonal_len = F::of(5.0 * i as f64 + 4.0);
            let heel_y = F::of(i as f64);
            let diag_extent = diagonal_len / F::of(2.0).sqrt();
            let reach = (heel_x + horizontal_len)
                .max(heel_x + diag_extent)
                .max(heel_y + diag_extent)
                .max(heel_y + F::one());
            if reach > F::of(GENE_MAX) {
                break;
            }
            claws.push(Claw {
                heel: [heel_x, heel_y],
                heel_fitness: fitness,
                horizontal_len,
                vertical_len: F::one(),
                diagonal_len,
                index: i,
            });
            fitness = F::of(2.0) * (fitness + F::of(i as f64));
            heel_x = heel_x + horizontal_len;
            i += 1;
        }
        Etf {
            stretch,
            half_width: F::of(EPSILON / 2.0),
            claws,
        }
    }

    pub fn stretch(&self) -> F {
        self.stretch
    }

    pub fn claw_count(&self) -> usize {
        self.claws.len()
    }

    /// Heel and toe-tip placement of claw `i` (1-based). `None` once the claw
    /// would leave the gene range.
    pub fn geometry(&self, i: u32) -> Option<ClawGeometry<F>> {
        let claw = self.claws.iter().find(|c| c.index == i)?;
        let [hx, hy] = claw.heel;
        let diag = claw.diagonal_len / F::of(2.0).sqrt();
        Some(ClawGeometry {
            heel: claw.heel,
            heel_fitness: claw.heel_fitness,
            vertical_tip: [hx, hy + claw.vertical_len],
            horizontal_tip: [hx + claw.horizontal_len, hy],
            diagonal_tip: [hx + diag, hy + diag],
        })
    }

    /// Fitness is nonzero only within `EPSILON / 2` of a claw's heel or toe
    /// segments, rising linearly along each toe:
    /// `heel_fitness + i` at the vertical and horizontal tips,
    /// `heel_fitness + 2 i` at the diagonal tip. Overlapping bands take the
    /// maximum.
    pub fn fitness_at(&self, x0: F, x1: F) -> F {
        let mut best = F::zero();
        for claw in &self.claws {
            let geom = self.geometry(claw.index).expect("claw is in bounds");
            let bonus = F::of(claw.index as f64);
            let toes = [
                (geom.vertical_tip, bonus),
                (geom.horizontal_tip, bonus),
                (geom.diagonal_tip, bonus + bonus),
            ];
            for (tip, bonus) in toes {
                if let Some(f) =
                    segment_fitness([x0, x1], claw.heel, tip, claw.heel_fitness, bonus, self.half_width)
                {
                    if f > best {
                        best = f;
                    }
                }
            }
        }
        best
    }

    pub fn evaluate(&self, genome: &Genome<F>) -> (F, BehaviorVector<F>) {
        let x0 = genome.genes()[0];
        let x1 = genome.genes()[1];
        let fitness = self.fitness_at(x0, x1);
        (fitness, BehaviorVector::new(vec![self.stretch * x0 + x1]))
    }
}

/// Linear interpolation from `base` at the segment start to `base + bonus`
/// at its tip, for points within `tol` of the segment; `None` outside the
/// band. Proximity to either endpoint counts as on the band.
fn segment_fitness<F: Real>(
    p: [F; 2],
    a: [F; 2],
    b: [F; 2],
    base: F,
    bonus: F,
    tol: F,
) -> Option<F> {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let ap = [p[0] - a[0], p[1] - a[1]];
    let len_sq = ab[0] * ab[0] + ab[1] * ab[1];
    let t = ((ap[0] * ab[0] + ap[1] * ab[1]) / len_sq)
        .max(F::zero())
        .min(F::one());
    let closest = [a[0] + t * ab[0], a[1] + t * ab[1]];
    let dx = p[0] - closest[0];
    let dy = p[1] - closest[1];
    if (dx * dx + dy * dy).sqrt() <= tol {
        Some(base + t * bonus)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn etf() -> Etf<f64> {
        Etf::new(100.0)
    }

    #[test]
    fn first_heel_has_fitness_one() {
        assert_eq!(etf().fitness_at(1.0, 1.0), 1.0);
    }

    #[test]
    fn heel_fitness_recurrence() {
        let d = etf();
        let h: Vec<f64> = (1..=4).map(|i| d.geometry(i).unwrap().heel_fitness).collect();
        assert_eq!(h, vec![1.0, 4.0, 12.0, 30.0]);
    }

    #[test]
    fn heels_advance_by_the_tip_swap() {
        let d = etf();
        assert_eq!(d.geometry(1).unwrap().heel, [1.0, 1.0]);
        assert_eq!(d.geometry(2).unwrap().heel, [4.0, 2.0]);
        assert_eq!(d.geometry(3).unwrap().heel, [8.0, 3.0]);
        assert_eq!(d.geometry(4).unwrap().heel, [13.0, 4.0]);
        for i in 1..d.claw_count() as u32 {
            let g = d.geometry(i).unwrap();
            let next = d.geometry(i + 1).unwrap();
            assert_eq!(next.heel, [g.horizontal_tip[0], g.vertical_tip[1]]);
        }
    }

    #[test]
    fn twelve_claws_fit_in_range() {
        // Claw 13's diagonal would run out to x = 151.8.
        let d = etf();
        assert_eq!(d.claw_count(), 12);
        assert!(d.geometry(13).is_none());
    }

    #[test]
    fn tips_stay_clear_of_the_diagonal_at_the_reference_scale() {
        // Stepping-stone shelter: at the published distance scale
        // (w * stretch = 0.5), the deceptive diagonal tip must not dominate
        // either crossover tip, so both need more than `i / (w*s)` behavior
        // units of separation from it, with slack for the mutation jitter.
        let d = etf();
        let w = 0.005;
        let b = |p: [f64; 2]| 100.0 * p[0] + p[1];
        for i in 1..=d.claw_count() as u32 {
            let g = d.geometry(i).unwrap();
            let gap = i as f64; // the diagonal tip out-fits the tips by i
            let slack = 1.25;
            assert!(
                w * (b(g.diagonal_tip) - b(g.vertical_tip)).abs() > gap * slack,
                "v {i}"
            );
            assert!(
                w * (b(g.diagonal_tip) - b(g.horizontal_tip)).abs() > gap * slack,
                "h {i}"
            );
            // The trap: the diagonal tip is also the claw's novelty maximum.
            assert!(b(g.diagonal_tip) > b(g.horizontal_tip), "trap {i}");
        }
    }

    #[test]
    fn far_points_have_zero_fitness() {
        let d = etf();
        assert_eq!(d.fitness_at(75.0, 0.3), 0.0);
        assert_eq!(d.fitness_at(0.2, 0.2), 0.0);
        assert_eq!(d.fitness_at(145.0, 145.0), 0.0);
    }

    #[test]
    fn toe_tips_match_declared_values() {
        let d = etf();
        for i in 1..=4u32 {
            let g = d.geometry(i).unwrap();
            let h = g.heel_fitness;
            let tol = 1e-12;
            assert!((d.fitness_at(g.vertical_tip[0], g.vertical_tip[1]) - (h + i as f64)).abs() < tol);
            assert!((d.fitness_at(g.horizontal_tip[0], g.horizontal_tip[1]) - (h + i as f64)).abs() < tol);
            assert!(
                (d.fitness_at(g.diagonal_tip[0], g.diagonal_tip[1]) - (h + 2.0 * i as f64)).abs() < tol
            );
        }
    }

    #[test]
    fn toe_fitness_interpolates_linearly() {
        let d = etf();
        // Midpoint of claw 1's horizontal toe (heel (1,1), length 3).
        assert!((d.fitness_at(2.5, 1.0) - 1.5).abs() < 1e-12);
        // Fitness along a toe never decreases heel-to-tip.
        let g = d.geometry(3).unwrap();
        let mut prev = 0.0;
        for step in 0..=20 {
            let t = step as f64 / 20.0;
            let x = g.heel[0] + t * (g.horizontal_tip[0] - g.heel[0]);
            let f = d.fitness_at(x, g.heel[1]);
            assert!(f >= prev);
            prev = f;
        }
    }

    #[test]
    fn band_width_is_a_tenth_either_side() {
        let d = etf();
        assert!(d.fitness_at(1.5, 1.09) > 0.0);
        assert_eq!(d.fitness_at(1.5, 1.11), 0.0);
    }

    #[test]
    fn max_claw_fitness_is_at_the_diagonal_tip() {
        let d = etf();
        for i in 1..=4u32 {
            let g = d.geometry(i).unwrap();
            let diag = d.fitness_at(g.diagonal_tip[0], g.diagonal_tip[1]);
            assert!((diag - (g.heel_fitness + 2.0 * i as f64)).abs() < 1e-12);
        }
    }

    #[test]
    fn crossover_of_tips_reaches_the_next_heel() {
        let d = etf();
        for i in 1..=3u32 {
            let g = d.geometry(i).unwrap();
            let next = d.geometry(i + 1).unwrap();
            let p1 = g.vertical_tip;
            let p2 = g.horizontal_tip;
            // The four equiprobable per-gene picks.
            let children = [
                [p1[0], p1[1]],
                [p1[0], p2[1]],
                [p2[0], p1[1]],
                [p2[0], p2[1]],
            ];
            let hits = children.iter().filter(|c| **c == next.heel).count();
            assert_eq!(hits, 1, "claw {i}");
            // Counting a child's complement too, half the gene-swap masks
            // touch the heel.
            let pair_hits = children
                .iter()
                .zip(children.iter().rev())
                .filter(|(c, comp)| **c == next.heel || **comp == next.heel)
                .count();
            assert_eq!(pair_hits, 2);
        }
    }

    #[test]
    fn behavior_stretches_first_dimension() {
        let d = etf();
        let (_, b) = d.evaluate(&Genome::new(vec![2.0, 3.0]));
        assert_eq!(b.components(), &[203.0]);
    }
}
