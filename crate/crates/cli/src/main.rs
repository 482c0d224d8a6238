use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use polyideal::algebra::{buchberger, inner_minors, Budget, OrderSpec, Ring};
use polyideal::configurations::{
    closed_path_sequence, find_gamma_like_paths, find_l_configurations, find_ladders, find_skew_paths,
    is_prime_closed_path,
};
use polyideal::dimension::dimension_report;
use polyideal::koenig::{
    expected_height, search_certificate, verify_certificate, walk_order, KoenigCertificate, SearchLimits, SearchOutcome,
};
use polyideal::par::Execution;
use polyideal::workbench::{enumerate, render, run_harness, Dedup, EnumerationConfig, Filters, HarnessConfig};
use polyideal::{parse_polyomino, Error, Polyomino};

#[derive(Parser)]
#[command(name = "poly", version, about = "Polyomino ideals: Gröbner bases, dimension, König certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, vertices, holes, thinness and the closed-path configurations
    Classify { file: PathBuf },
    /// The inner 2-minors, one per line
    Minors { file: PathBuf },
    /// Reduced Gröbner basis of the polyomino ideal
    Gb {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Krull dimension of the coordinate ring
    Dim {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Height of the polyomino ideal
    Height {
        file: PathBuf,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Find a König certificate
    Koenig {
        file: PathBuf,
        /// walk construction (closed paths only), falling back to the search
        #[arg(long, conflicts_with = "search")]
        walk: bool,
        /// complete backtracking search (the default)
        #[arg(long)]
        search: bool,
        /// write the certificate here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a polyomino
    Verify { file: PathBuf, certificate: PathBuf },
    /// Enumerate polyominoes, or run the conjecture harness with --out
    Enumerate {
        #[arg(long)]
        max_rank: usize,
        /// comma-separated: closed-path, thin, non-simple, simple
        #[arg(long, default_value = "")]
        filter: String,
        #[arg(long, value_enum, default_value_t = DedupArg::Dihedral)]
        dedup: DedupArg,
        /// harness log (JSON lines)
        #[arg(long)]
        out: Option<PathBuf>,
        /// continue an existing log instead of refusing to touch it
        #[arg(long, requires = "out")]
        resume: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// ASCII picture
    Render { file: PathBuf },
}

#[derive(Args)]
struct OrderArg {
    /// lex1, lex1rev, yset:SPEC or weights:FILE
    #[arg(long, default_value = "lex1")]
    order: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    Translation,
    Dihedral,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        _ if e.is_budget() => 2,
        Error::Io(_) | Error::CorruptLog { .. } => 3,
        _ => 1,
    }
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn load(path: &Path) -> Result<Polyomino, Error> {
    parse_polyomino(&read(path)?)
}

/// `weights:FILE` takes either a serialized order or a certificate, whose
/// weights are then used.
fn parse_order(spec: &str) -> Result<OrderSpec, Error> {
    match spec.split_once(':') {
        None if spec == "lex1" => Ok(OrderSpec::Lex1),
        None if spec == "lex1rev" => Ok(OrderSpec::Lex1Rev),
        Some(("yset", y)) => OrderSpec::parse_yset(y),
        Some(("weights", file)) => {
            let text = read(Path::new(file))?;
            match serde_json::from_str::<OrderSpec>(&text) {
                Ok(o) => Ok(o),
                Err(_) => Ok(KoenigCertificate::from_json(&text)?.order_spec()),
            }
        }
        _ => Err(Error::Invalid(format!("unknown order {spec:?}"))),
    }
}

fn search_limits() -> SearchLimits {
    match std::env::var("POLY_BUDGET").ok().and_then(|s| s.trim().parse().ok()) {
        Some(max_nodes) => SearchLimits { max_nodes },
        None => SearchLimits::default(),
    }
}

fn print_json(v: serde_json::Value) -> Result<(), Error> {
    println!("{}", serde_json::to_string_pretty(&v)?);
    Ok(())
}

fn run(cli: Cli) -> Result<(), Error> {
    let budget = Budget::from_env();
    match cli.command {
        Command::Classify { file } => {
            let p = load(&file)?;
            let r = p.classify();
            let seq = closed_path_sequence(&p);
            print_json(json!({
                "rank": r.rank,
                "vertex_count": r.vertex_count,
                "simple": r.simple,
                "holes": r.holes.iter().map(|h| h.cells().to_vec()).collect::<Vec<_>>(),
                "thin": r.thin,
                "inner_intervals": p.inner_intervals().len(),
                "closed_path": seq.is_some(),
                "changes_of_direction": seq.as_ref().map(|s| s.changes_of_direction().len()),
                "l_configurations": seq.as_ref().map(|_| find_l_configurations(&p).len()),
                "ladders": seq.as_ref().map(|_| find_ladders(&p, 3).len()),
                "gamma_like_paths": find_gamma_like_paths(&p).len(),
                "skew_paths": find_skew_paths(&p).len(),
                "prime": is_prime_closed_path(&p).ok(),
            }))
        }
        Command::Minors { file } => {
            let p = load(&file)?;
            let ring = Ring::of(&p);
            for b in inner_minors(&p, &ring) {
                println!("{}", ring.format_binomial(&b));
            }
            Ok(())
        }
        Command::Gb { file, order } => {
            let p = load(&file)?;
            let ring = Ring::of(&p);
            let spec = parse_order(&order.order)?;
            let gb = buchberger(&inner_minors(&p, &ring), &spec.build(&ring)?, budget)?;
            for b in &gb.elements {
                println!("{}", ring.format_binomial(b));
            }
            let cert = gb.certify();
            eprintln!("{} elements under {}, {} S-pairs checked", gb.len(), spec.id(), cert.pairs_checked);
            if cert.ok() {
                Ok(())
            } else {
                Err(Error::Invalid("basis failed self-certification".into()))
            }
        }
        Command::Dim { file, order } => {
            let r = dimension_report(&load(&file)?, &parse_order(&order.order)?, budget)?;
            print_json(json!({ "dim": r.dim, "vertices": r.vertices, "rank": r.rank, "order": r.order }))
        }
        Command::Height { file, order } => {
            let r = dimension_report(&load(&file)?, &parse_order(&order.order)?, budget)?;
            print_json(json!({ "height": r.height, "rank": r.rank, "order": r.order }))
        }
        Command::Koenig { file, walk, search: _, out } => {
            let p = load(&file)?;
            let limits = search_limits();
            let certificate = if walk {
                let w = walk_order(&p, limits)?;
                eprintln!("walk seeded at {:?}{}", w.seed, if w.fallback { ", fell back to the search" } else { "" });
                w.certificate
            } else {
                let h = expected_height(&p, budget)?;
                match search_certificate(&p, h, limits)? {
                    SearchOutcome::Found { certificate, nodes } => {
                        eprintln!("found with h = {h} after {nodes} nodes");
                        certificate
                    }
                    SearchOutcome::Exhausted { nodes } => {
                        return Err(Error::Invalid(format!("no König certificate with h = {h} ({nodes} nodes searched)")))
                    }
                }
            };
            let text = certificate.to_json()?;
            match out {
                Some(path) => std::fs::write(path, text + "\n")?,
                None => println!("{text}"),
            }
            Ok(())
        }
        Command::Verify { file, certificate } => {
            let p = load(&file)?;
            let cert = KoenigCertificate::from_json(&read(&certificate)?)?;
            let report = verify_certificate(&p, &cert, budget)?;
            for c in &report.checks {
                if c.passed {
                    println!("{}: ok", c.check);
                } else {
                    println!("{}: FAILED ({})", c.check, c.detail);
                }
            }
            if report.passed() {
                Ok(())
            } else {
                Err(Error::Invalid("certificate rejected".into()))
            }
        }
        Command::Enumerate { max_rank, filter, dedup, out, resume, sequential } => {
            if max_rank == 0 {
                return Err(Error::Invalid("--max-rank must be at least 1".into()));
            }
            let filters = Filters::parse(&filter).map_err(Error::Invalid)?;
            let dedup = match dedup {
                DedupArg::Translation => Dedup::Translation,
                DedupArg::Dihedral => Dedup::Dihedral,
            };
            let config = EnumerationConfig::new(max_rank).with_filters(filters).with_dedup(dedup);
            let execution = if sequential { Execution::Sequential } else { Execution::Parallel };
            match out {
                None => {
                    for p in enumerate(&config, execution) {
                        println!("{}", serde_json::to_string(&json!({ "cells": p.cells() }))?);
                    }
                    Ok(())
                }
                Some(log) => {
                    let non_empty = std::fs::metadata(&log).map(|m| m.len() > 0).unwrap_or(false);
                    if non_empty && !resume {
                        return Err(Error::Invalid(format!("{} exists; pass --resume to continue it", log.display())));
                    }
                    let harness = HarnessConfig { execution, search: search_limits(), ..HarnessConfig::new(config) };
                    let summary = run_harness(&harness, &log)?;
                    print_json(serde_json::to_value(&summary)?)
                }
            }
        }
        Command::Render { file } => {
            println!("{}", render(&load(&file)?));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
