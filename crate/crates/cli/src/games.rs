use std::collections::BTreeMap;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tourney_core::query::{
    play_game, randomized_king_query, Alg3Prover, AlwaysDefer, CountingOracle, DeferFirst, Delayer, LexProver,
    Prover, RandomDelayer, RandomProver, TowardPivot,
};
use tourney_core::verify::trial_seed;
use tourney_core::Tournament;

use crate::Status;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProverKind {
    Alg3,
    Lex,
    Random,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum DelayerKind {
    /// Defer every query.
    Defer,
    /// Defer the first n − 1 queries, then turn edges toward the focus vertex.
    Adversarial,
    /// Never defer; turn every edge toward the focus vertex.
    Toward,
    /// Defer with probability --p-defer, otherwise a fair coin.
    Random,
}

#[derive(Args, Debug)]
#[command(after_help = "Summary CSV columns: n,prover,delayer,trials,mean_score,max_score,mean_queries,\
max_queries,invalid,score_histogram (score:count pairs joined by ';'). \
With --per-trial: n,trial,seed,score,queries,valid.")]
pub struct RankGameArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "alg3")]
    prover: ProverKind,
    #[arg(long, value_enum, default_value = "adversarial")]
    delayer: DelayerKind,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    p_defer: f64,
    #[arg(long)]
    per_trial: bool,
}

pub fn rank_game(args: &RankGameArgs) -> Result<Status> {
    let n = args.n;
    if n == 0 {
        bail!("--n must be at least 1");
    }
    if !(0.0..=1.0).contains(&args.p_defer) {
        bail!("--p-defer must lie in [0, 1]");
    }
    let games: Vec<(u64, usize, usize, bool)> = (0..args.trials)
        .into_par_iter()
        .map(|k| {
            let seed = trial_seed(args.seed, n, k);
            let mut prover: Box<dyn Prover> = match args.prover {
                ProverKind::Alg3 => Box::new(Alg3Prover::new(n)),
                ProverKind::Lex => Box::new(LexProver),
                ProverKind::Random => Box::new(RandomProver::new(seed)),
            };
            let mut delayer: Box<dyn Delayer> = match args.delayer {
                DelayerKind::Defer => Box::new(AlwaysDefer),
                DelayerKind::Adversarial => Box::new(DeferFirst::new(n - 1)),
                DelayerKind::Toward => Box::new(TowardPivot),
                DelayerKind::Random => Box::new(RandomDelayer::new(seed ^ 1, args.p_defer)),
            };
            let g = play_game(n, prover.as_mut(), delayer.as_mut());
            (seed, g.delayer_score, g.queries, g.valid)
        })
        .collect();
    let invalid = games.iter().filter(|g| !g.3).count();
    if args.per_trial {
        println!("n,trial,seed,score,queries,valid");
        for (k, (seed, score, queries, valid)) in games.iter().enumerate() {
            println!("{n},{k},{seed},{score},{queries},{}", u8::from(*valid));
        }
    } else {
        let mut hist = BTreeMap::new();
        for g in &games {
            *hist.entry(g.1).or_insert(0usize) += 1;
        }
        let count = games.len().max(1) as f64;
        let hist: Vec<String> = hist.iter().map(|(s, c)| format!("{s}:{c}")).collect();
        println!("n,prover,delayer,trials,mean_score,max_score,mean_queries,max_queries,invalid,score_histogram");
        println!(
            "{n},{},{},{},{:.3},{},{:.3},{},{invalid},{}",
            args.prover.to_possible_value().expect("named").get_name(),
            args.delayer.to_possible_value().expect("named").get_name(),
            games.len(),
            games.iter().map(|g| g.1).sum::<usize>() as f64 / count,
            games.iter().map(|g| g.1).max().unwrap_or(0),
            games.iter().map(|g| g.2).sum::<usize>() as f64 / count,
            games.iter().map(|g| g.2).max().unwrap_or(0),
            hist.join(";")
        );
    }
    Ok(if invalid == 0 { Status::Ok } else { Status::VerificationFailed })
}

#[derive(Args, Debug)]
#[command(after_help = "Summary CSV columns: n,trials,mean_queries,max_queries,queries_per_n,correct. \
With --per-trial: n,trial,seed,queries,correct.")]
pub struct QueryKingArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long)]
    per_trial: bool,
}

pub fn query_king(args: &QueryKingArgs) -> Result<Status> {
    let n = args.n;
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let runs: Vec<(u64, usize, bool)> = (0..args.trials)
        .into_par_iter()
        .map(|k| {
            let seed = trial_seed(args.seed, n, k);
            let t = Tournament::random(n, seed).expect("n ≥ 1");
            let mut o = CountingOracle::new(&t);
            let v = randomized_king_query(&mut o, &mut ChaCha8Rng::seed_from_u64(seed ^ 1));
            (seed, o.queries(), t.is_king(v))
        })
        .collect();
    let correct = runs.iter().filter(|r| r.2).count();
    if args.per_trial {
        println!("n,trial,seed,queries,correct");
        for (k, (seed, q, ok)) in runs.iter().enumerate() {
            println!("{n},{k},{seed},{q},{}", u8::from(*ok));
        }
    } else {
        let mean = runs.iter().map(|r| r.1).sum::<usize>() as f64 / runs.len().max(1) as f64;
        println!("n,trials,mean_queries,max_queries,queries_per_n,correct");
        println!(
            "{n},{},{mean:.2},{},{:.3},{correct}",
            runs.len(),
            runs.iter().map(|r| r.1).max().unwrap_or(0),
            mean / n as f64
        );
    }
    Ok(if correct == runs.len() { Status::Ok } else { Status::VerificationFailed })
}
