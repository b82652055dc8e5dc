use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use tourney_core::maxsum::{mod_protocol, ModMode};
use tourney_core::source::src_protocol;
use tourney_core::verify::{plant_source, trial_seed};
use tourney_core::{king_protocol, EdgePartition, Tournament};

use crate::io;
use crate::Status;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SweepProtocol {
    King,
    Src,
    ModDet,
    ModRand,
}

/// CSV columns: `n,trial,seed,bits,correct`. `seed` regenerates the row's
/// instance; `correct` is 1 when the output matches the oracle.
#[derive(Args, Debug)]
#[command(after_help = "CSV columns: n,trial,seed,bits,correct (one row per trial, ordered by n then trial). \
src sweeps plant a source in even-numbered trials.")]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    protocol: SweepProtocol,
    /// Smallest size; sizes double up to --n-max.
    #[arg(long, default_value_t = 8)]
    n_min: usize,
    #[arg(long, default_value_t = 256)]
    n_max: usize,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Row {
    n: usize,
    trial: usize,
    seed: u64,
    bits: usize,
    correct: bool,
}

fn one(protocol: SweepProtocol, n: usize, trial: usize, seed: u64) -> Result<Row> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tournament::random_with(n, &mut rng)?;
    let p = EdgePartition::random(n, rng.gen());
    let (bits, correct) = match protocol {
        SweepProtocol::King => {
            let out = king_protocol(&t, &p)?;
            (out.transcript.total_bits(), t.is_king(out.king))
        }
        SweepProtocol::Src => {
            if trial % 2 == 0 {
                t = plant_source(&t, rng.gen_range(1..=n));
            }
            let out = src_protocol(&t, &p)?;
            (out.transcript.total_bits(), out.source == t.source_of().unwrap_or(0))
        }
        SweepProtocol::ModDet | SweepProtocol::ModRand => {
            let mode = match protocol {
                SweepProtocol::ModDet => ModMode::Det,
                _ => ModMode::Rand { seed: rng.gen() },
            };
            let out = mod_protocol(&t, &p, mode)?;
            (out.transcript.total_bits(), t.max_out_degree_set().contains(&out.index))
        }
    };
    Ok(Row {
        n,
        trial,
        seed,
        bits,
        correct,
    })
}

pub fn sweep(args: &SweepArgs) -> Result<Status> {
    if args.n_min == 0 || args.n_min > args.n_max {
        bail!("need 1 ≤ --n-min ≤ --n-max");
    }
    let sizes: Vec<usize> =
        std::iter::successors(Some(args.n_min), |&n| n.checked_mul(2)).take_while(|&n| n <= args.n_max).collect();
    let jobs: Vec<(usize, usize)> = sizes.iter().flat_map(|&n| (0..args.trials).map(move |k| (n, k))).collect();
    let rows: Vec<Row> = jobs
        .par_iter()
        .map(|&(n, k)| one(args.protocol, n, k, trial_seed(args.seed, n, k)))
        .collect::<Result<_>>()?;
    let mut csv = String::from("n,trial,seed,bits,correct\n");
    for r in &rows {
        writeln!(csv, "{},{},{},{},{}", r.n, r.trial, r.seed, r.bits, u8::from(r.correct))?;
    }
    match &args.out {
        Some(path) => io::write(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(Status::Ok)
}
