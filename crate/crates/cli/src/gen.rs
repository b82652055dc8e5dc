use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tourney_core::hardness::fooling::{fooling_cross, fooling_partition, greedy_fooling_set};
use tourney_core::hardness::GSSigma;
use tourney_core::{EdgePartition, Permutation, Player, Tournament};

use crate::io;
use crate::Status;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Random,
    Transitive,
    Gssigma,
    Fooling,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PartitionKind {
    Random,
    Halves,
    Alice,
    Bob,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long = "type", value_enum)]
    kind: Kind,
    /// Vertices; for gssigma the size of the ground set (the tournament has 3n).
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// gssigma: the nonempty set S, e.g. `1,3`.
    #[arg(long)]
    set: Option<String>,
    /// Ranks σ(1),…,σ(m) as a comma list. transitive: m = n (random if
    /// absent); gssigma: m = n; fooling: Alice's σ with m = n/2 − 1.
    #[arg(long)]
    sigma: Option<String>,
    /// fooling: take Alice's σ from the greedy fooling set instead.
    #[arg(long)]
    sigma_index: Option<usize>,
    /// fooling: Bob's σ for a cross input (defaults to Alice's).
    #[arg(long)]
    bob_sigma: Option<String>,
    /// Edge split for random and transitive instances.
    #[arg(long, value_enum, default_value = "random")]
    partition: PartitionKind,
    /// Output prefix; writes PREFIX.tour and PREFIX.part.
    #[arg(long, default_value = "instance")]
    out: PathBuf,
}

fn split(kind: PartitionKind, n: usize, seed: u64) -> EdgePartition {
    match kind {
        PartitionKind::Random => EdgePartition::random(n, seed ^ 0x9e37_79b9_7f4a_7c15),
        PartitionKind::Halves => EdgePartition::split_halves(n),
        PartitionKind::Alice => EdgePartition::all(n, Player::Alice),
        PartitionKind::Bob => EdgePartition::all(n, Player::Bob),
    }
}

pub fn build(args: &GenArgs) -> Result<(Tournament, EdgePartition)> {
    let n = args.n;
    if n == 0 {
        bail!("--n must be at least 1");
    }
    Ok(match args.kind {
        Kind::Random => (Tournament::random(n, args.seed)?, split(args.partition, n, args.seed)),
        Kind::Transitive => {
            let sigma = match &args.sigma {
                Some(s) => io::permutation(s)?,
                None => Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(args.seed)),
            };
            if sigma.len() != n {
                bail!("--sigma has {} entries, expected {n}", sigma.len());
            }
            (Tournament::transitive(&sigma)?, split(args.partition, n, args.seed))
        }
        Kind::Gssigma => {
            let set = io::vertex_set(args.set.as_deref().context("gssigma needs --set")?)?;
            let sigma = io::permutation(args.sigma.as_deref().context("gssigma needs --sigma")?)?;
            if sigma.len() != n {
                bail!("--sigma has {} entries, expected {n}", sigma.len());
            }
            let g = GSSigma::build(&set, &sigma)?;
            (g.tournament, g.partition)
        }
        Kind::Fooling => {
            let alice = match (&args.sigma, args.sigma_index) {
                (Some(s), None) => io::permutation(s)?,
                (None, Some(k)) => {
                    let set = greedy_fooling_set(n)?;
                    let len = set.len();
                    set.into_iter()
                        .nth(k)
                        .with_context(|| format!("--sigma-index {k} out of range (fooling set has {len})"))?
                }
                _ => bail!("fooling needs exactly one of --sigma and --sigma-index"),
            };
            let bob = match &args.bob_sigma {
                Some(s) => io::permutation(s)?,
                None => alice.clone(),
            };
            (fooling_cross(n, &alice, &bob)?, fooling_partition(n)?)
        }
    })
}

pub fn gen(args: &GenArgs) -> Result<Status> {
    let (t, p) = build(args)?;
    let tour = PathBuf::from(format!("{}.tour", args.out.display()));
    let part = PathBuf::from(format!("{}.part", args.out.display()));
    io::write(&tour, &t.to_text())?;
    io::write(&part, &p.to_text())?;
    println!("{}", tour.display());
    println!("{}", part.display());
    Ok(Status::Ok)
}
