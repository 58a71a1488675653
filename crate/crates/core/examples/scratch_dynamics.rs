//! Temporary scratch: check run dynamics against target thresholds.

use bdom_core::domains::Domain;
use bdom_core::evolution::{run, RunConfig};
use bdom_core::ranking::{DominationParams, NoveltyParams, RankingStrategy};

fn np(k: usize, archive: bool) -> NoveltyParams<f64> {
    NoveltyParams::new(k, 0.01, archive).unwrap()
}

fn main() {
    let which = std::env::args().nth(1).unwrap_or_else(|| "fp".into());
    match which.as_str() {
        "fp" => four_peaks(),
        "etf" => etf(),
        "ack" => ackley(),
        _ => panic!("unknown"),
    }
}

fn four_peaks() {
    for (name, strategy) in [
        ("fitness", RankingStrategy::Fitness),
        ("novelty", RankingStrategy::Novelty(np(5, true))),
        (
            "bdma2",
            RankingStrategy::Bdma2(DominationParams::with_capacity(16.0, 20).unwrap(), np(5, false)),
        ),
        (
            "bdma2a",
            RankingStrategy::Bdma2a(DominationParams::with_capacity(1.0, 20).unwrap(), np(5, false)),
        ),
        (
            "lsnf",
            RankingStrategy::Lsnf(Default::default(), np(5, true)),
        ),
    ] {
        let mut totals = vec![];
        let mut currents = vec![];
        for seed in 0..10u64 {
            let config = RunConfig::new(
                Domain::from_name("four_peaks", None, None).unwrap(),
                strategy.clone(),
                1000 + seed,
            );
            let log = run(&config).unwrap();
            let last = log.rows.last().unwrap();
            totals.push(last.total_bin_score);
            currents.push(last.current_bin_score);
        }
        let t_ge_475 = totals.iter().filter(|&&t| t >= 475.0).count();
        let mean_cur: f64 = currents.iter().sum::<f64>() / currents.len() as f64;
        println!(
            "{name:8} total>=475: {t_ge_475}/10  mean_current: {mean_cur:7.2}  totals: {:?}",
            totals.iter().map(|t| t.round()).collect::<Vec<_>>()
        );
    }
}

fn etf() {
    for s in [100.0, 1000.0, 10000.0] {
        let w = match s as u64 {
            100 => 0.005,
            1000 => 0.0005,
            _ => 0.00005,
        };
        for (name, strategy) in [
            ("fitness", RankingStrategy::Fitness),
            ("novelty", RankingStrategy::Novelty(np(5, true))),
            ("nslc", RankingStrategy::Nslc(np(5, true))),
            (
                "bdma2",
                RankingStrategy::Bdma2(DominationParams::with_capacity(w, 20).unwrap(), np(5, false)),
            ),
            (
                "bdma2a",
                RankingStrategy::Bdma2a(DominationParams::with_capacity(1.0, 20).unwrap(), np(5, false)),
            ),
        ] {
            let mut finals = vec![];
            for seed in 0..10u64 {
                let config = RunConfig::new(
                    Domain::from_name("etf", Some(s), None).unwrap(),
                    strategy.clone(),
                    1000 + seed,
                );
                let log = run(&config).unwrap();
                finals.push(log.final_best_fitness());
            }
            let mean: f64 = finals.iter().sum::<f64>() / finals.len() as f64;
            println!(
                "s={s:<7} {name:8} mean_max: {mean:8.3}  finals: {:?}",
                finals.iter().map(|t| (t * 10.0).round() / 10.0).collect::<Vec<_>>()
            );
        }
        println!();
    }
}

fn ackley() {
    for d in [10usize] {
        let w = 0.005;
        for (name, strategy) in [
            ("fitness", RankingStrategy::Fitness),
            ("novelty", RankingStrategy::Novelty(np(5, true))),
            ("nslc", RankingStrategy::Nslc(np(5, true))),
            (
                "bdma2",
                RankingStrategy::Bdma2(DominationParams::with_capacity(w, 20).unwrap(), np(5, false)),
            ),
            (
                "bdma2a",
                RankingStrategy::Bdma2a(DominationParams::with_capacity(1.0, 20).unwrap(), np(5, false)),
            ),
        ] {
            let mut finals = vec![];
            for seed in 0..10u64 {
                let config = RunConfig::new(
                    Domain::from_name("focused_ackley", None, Some(d)).unwrap(),
                    strategy.clone(),
                    1000 + seed,
                );
                let log = run(&config).unwrap();
                finals.push(log.final_best_fitness());
            }
            let mean: f64 = finals.iter().sum::<f64>() / finals.len() as f64;
            println!(
                "D={d:<3} {name:8} mean_max: {mean:8.4}  finals: {:?}",
                finals.iter().map(|t| (t * 1000.0).round() / 1000.0).collect::<Vec<_>>()
            );
        }
    }
}
