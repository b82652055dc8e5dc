use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use tourney_core::maxsum::{gt_protocol, maxsum_det, maxsum_rand, mod_protocol, ModMode};
use tourney_core::source::{cis_protocol, src_protocol, CisInstance};
use tourney_core::{king_protocol, EdgePartition, Tournament, Transcript};

use crate::io;
use crate::Status;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Protocol {
    King,
    Src,
    Cis,
    ModDet,
    ModRand,
    MaxsumDet,
    MaxsumRand,
    Gt,
}

#[derive(Args, Debug)]
pub struct RunArgs {
    #[arg(long, value_enum)]
    protocol: Protocol,
    /// Tournament file (king, src, mod-*).
    #[arg(long)]
    tournament: Option<PathBuf>,
    /// Partition file (king, src, mod-*).
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Graph file (cis).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Bob's clique (cis).
    #[arg(long)]
    clique: Option<String>,
    /// Alice's independent set (cis).
    #[arg(long)]
    indep: Option<String>,
    /// Alice's vector (maxsum-*).
    #[arg(long)]
    a: Option<String>,
    /// Bob's vector (maxsum-*).
    #[arg(long)]
    b: Option<String>,
    /// Public upper bound on vector entries; defaults to the largest entry.
    #[arg(long)]
    bound: Option<usize>,
    /// Alice's operand (gt).
    #[arg(long)]
    x: Option<usize>,
    /// Bob's operand (gt).
    #[arg(long)]
    y: Option<usize>,
    /// Operands lie in [1, universe]; defaults to max(x, y).
    #[arg(long)]
    universe: Option<usize>,
    /// Public-coin seed for randomized protocols.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print every message as `sender,length,bits` and a totals line.
    #[arg(long)]
    dump_transcript: bool,
}

fn instance(args: &RunArgs) -> Result<(Tournament, EdgePartition)> {
    let t = io::read_tournament(args.tournament.as_deref().context("this protocol needs --tournament")?)?;
    let p = io::read_partition(args.partition.as_deref().context("this protocol needs --partition")?)?;
    if t.n() != p.n() {
        bail!("tournament has {} vertices but the partition has {}", t.n(), p.n());
    }
    Ok((t, p))
}

fn vectors(args: &RunArgs) -> Result<(Vec<usize>, Vec<usize>, usize)> {
    let a = io::integers(args.a.as_deref().context("maxsum needs --a")?)?;
    let b = io::integers(args.b.as_deref().context("maxsum needs --b")?)?;
    let bound = args.bound.unwrap_or_else(|| a.iter().chain(&b).copied().max().unwrap_or(0));
    Ok((a, b, bound))
}

fn report<O>(output: &str, tr: &Transcript<O>, dump: bool) {
    println!("output: {output}");
    println!("bits_alice: {}", tr.bits_alice);
    println!("bits_bob: {}", tr.bits_bob);
    println!("bits: {}", tr.total_bits());
    println!("rounds: {}", tr.rounds);
    if dump {
        print!("{}", tr.dump());
    }
}

pub fn run(args: &RunArgs) -> Result<Status> {
    let dump = args.dump_transcript;
    match args.protocol {
        Protocol::King => {
            let (t, p) = instance(args)?;
            let out = king_protocol(&t, &p)?;
            report(&out.king.to_string(), &out.transcript, dump);
        }
        Protocol::Src => {
            let (t, p) = instance(args)?;
            let out = src_protocol(&t, &p)?;
            let shown = match out.source {
                0 => "0 (no source)".to_string(),
                s => s.to_string(),
            };
            report(&shown, &out.transcript, dump);
        }
        Protocol::Cis => {
            let g = io::read_graph(args.graph.as_deref().context("cis needs --graph")?)?;
            let clique = io::vertex_set(args.clique.as_deref().unwrap_or(""))?;
            let indep = io::vertex_set(args.indep.as_deref().unwrap_or(""))?;
            let out = cis_protocol(&CisInstance::new(g, clique, indep)?)?;
            let shown = out.answer.map_or("none".to_string(), |v| v.to_string());
            report(&shown, &out.transcript, dump);
        }
        Protocol::ModDet | Protocol::ModRand => {
            let (t, p) = instance(args)?;
            let mode = if args.protocol == Protocol::ModDet {
                ModMode::Det
            } else {
                ModMode::Rand { seed: args.seed }
            };
            let out = mod_protocol(&t, &p, mode)?;
            report(&out.index.to_string(), &out.transcript, dump);
        }
        Protocol::MaxsumDet | Protocol::MaxsumRand => {
            let (a, b, bound) = vectors(args)?;
            let out = if args.protocol == Protocol::MaxsumDet {
                maxsum_det(&a, &b, bound)?
            } else {
                maxsum_rand(&a, &b, bound, args.seed)?
            };
            report(&out.index.to_string(), &out.transcript, dump);
        }
        Protocol::Gt => {
            let x = args.x.context("gt needs --x")?;
            let y = args.y.context("gt needs --y")?;
            let universe = args.universe.unwrap_or(x.max(y));
            let (ge, tr) = gt_protocol(x, y, universe, args.seed)?;
            report(if ge { "1" } else { "0" }, &tr, dump);
        }
    }
    Ok(Status::Ok)
}
