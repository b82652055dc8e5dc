//! `tourneycc`: generate instances, run protocols, sweep costs, verify.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 for
//! usage or input errors.

mod games;
mod gen;
mod io;
mod run;
mod sweep;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "tourneycc", version, about = "Communication protocols and query games on tournaments")]
struct Cli {
    /// Worker threads for sweeps and suites.
    #[arg(long, global = true, env = "TOURNEYCC_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a tournament and an edge partition.
    Gen(gen::GenArgs),
    /// Run one protocol and report its output and cost.
    Run(run::RunArgs),
    /// Run a protocol over doubling sizes and emit CSV.
    Sweep(sweep::SweepArgs),
    /// Run invariant suites against the brute-force oracles.
    Verify(VerifyArgs),
    /// Play the Prover-Delayer game and summarize scores as CSV.
    RankGame(games::RankGameArgs),
    /// Run the randomized query king finder and summarize queries as CSV.
    QueryKing(games::QueryKingArgs),
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest size to check; exhaustive parts are capped per suite.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Random instances per size.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Outcome of a command that ran to completion.
pub enum Status {
    Ok,
    VerificationFailed,
}

fn verify(args: &VerifyArgs) -> anyhow::Result<Status> {
    use tourney_core::verify::{run, Scope, Suite};
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let scope = Scope {
        max_n: args.max_n,
        trials: args.trials,
        seed: args.seed,
    };
    let mut ok = true;
    for s in suites {
        let report = run(s, &scope)?;
        print!("{report}");
        ok &= report.passed();
    }
    Ok(if ok { Status::Ok } else { Status::VerificationFailed })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Gen(a) => gen::gen(a),
        Command::Run(a) => run::run(a),
        Command::Sweep(a) => sweep::sweep(a),
        Command::Verify(a) => verify(a),
        Command::RankGame(a) => games::rank_game(a),
        Command::QueryKing(a) => games::query_king(a),
    };
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
