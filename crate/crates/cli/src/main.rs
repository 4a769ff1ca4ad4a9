//! `hirano`: classify, decompose and census ring elements, and check theorems on finite rings.

use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use hirano_core::census::{
    run_census_with, to_sorted_json, verify_theorem, CensusOptions, Strategy, TheoremId,
    VerifyOptions, DEFAULT_MAX_RING_SIZE, DEFAULT_SAMPLES, DEFAULT_SEED,
};
use hirano_core::inverse::{classify, tripotent_decomposition, InverseReport};
use hirano_core::lifting::PolynomialCertificate;
use hirano_core::par::Workers;
use hirano_core::ring::{parse_element, parse_ring};
use hirano_core::{Element, Error, RingSpec};

/// Matrices larger than this are refused; enumeration would be meaningless anyway.
const MAX_DIM: usize = 8;

#[derive(Parser)]
#[command(
    name = "hirano",
    version,
    about = "Exact Drazin, strongly Drazin and Hirano inverses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Emit one JSON object with sorted keys.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse rings with more elements than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RING_SIZE)]
    max_ring_size: u64,
    /// Worker threads for scans (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

impl Common {
    fn workers(&self) -> Workers {
        match self.workers {
            0 => Workers::Auto,
            k => Workers::Fixed(k),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Which inverses an element has, with the inverses themselves.
    Classify {
        ring: String,
        element: String,
        #[command(flatten)]
        common: Common,
    },
    /// Tripotent + nilpotent decomposition (needs 2 to be a unit).
    Decompose {
        ring: String,
        element: String,
        #[command(flatten)]
        common: Common,
    },
    /// Count every class of element in a finite ring.
    Census {
        ring: String,
        /// Seed for the sampled brute-force cross-check on large rings.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Check a theorem on every (or a sample of) hypothesis tuple of a finite ring.
    Verify {
        theorem: String,
        ring: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Sample this many tuples instead of scanning all of them. Without it the scan is
        /// exhaustive when the hypothesis space fits under --max-instances, sampled otherwise.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = VerifyOptions::default().max_instances)]
        max_instances: u64,
        #[command(flatten)]
        common: Common,
    },
}

fn ring_arg(src: &str) -> anyhow::Result<RingSpec> {
    let ring = parse_ring(src).with_context(|| format!("ring {src:?}"))?;
    if ring.dim() > MAX_DIM {
        anyhow::bail!("matrix dimension {} exceeds {MAX_DIM}", ring.dim());
    }
    Ok(ring)
}

fn element_arg(ring: &RingSpec, src: &str) -> anyhow::Result<Element> {
    parse_element(ring, src).with_context(|| format!("element {src:?}"))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_classify(r: &InverseReport) {
    println!("ring: {}", r.ring);
    println!("element: {}", r.element);
    match (r.has_drazin, &r.drazin) {
        (Some(true), Some(d)) => println!("drazin: yes (b = {}, index {})", d.inverse, d.index),
        (Some(_), _) => println!("drazin: no"),
        (None, _) => println!("drazin: undecided"),
    }
    match &r.strongly_drazin {
        Some(c) => println!("strongly drazin: yes (b = {})", c.inverse),
        None => println!("strongly drazin: no"),
    }
    match &r.hirano {
        Some(c) => println!("hirano: yes (b = {})", c.inverse),
        None => println!("hirano: no"),
    }
}

fn certificate(c: &PolynomialCertificate) -> String {
    let one = num_bigint::BigInt::from(1);
    if c.denominator == one {
        format!("({})(a)", c.polynomial)
    } else {
        format!("({})(a) / {}", c.polynomial, c.denominator)
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Classify {
            ring,
            element,
            common,
        } => {
            let ring = ring_arg(&ring)?;
            let a = element_arg(&ring, &element)?;
            let r = classify(&a)?;
            if common.json {
                println!("{}", to_sorted_json(&r));
            } else {
                print_classify(&r);
            }
        }
        Command::Decompose {
            ring,
            element,
            common,
        } => {
            let ring = ring_arg(&ring)?;
            let a = element_arg(&ring, &element)?;
            let d = tripotent_decomposition(&a)?;
            if common.json {
                println!("{}", to_sorted_json(&d));
            } else {
                println!("a = {}", d.subject);
                println!("p = {}", d.tripotent);
                println!(
                    "w = {} (nilpotent of index {})",
                    d.nilpotent, d.nilpotent_witness.index
                );
                println!("e = {}", d.idempotent_plus);
                println!("f = {}", d.idempotent_minus);
                println!("p = {}", certificate(&d.tripotent_certificate));
                println!("e = {}", certificate(&d.plus_certificate));
                println!("f = {}", certificate(&d.minus_certificate));
            }
        }
        Command::Census { ring, seed, common } => {
            let ring = ring_arg(&ring)?;
            let opts = CensusOptions {
                workers: common.workers(),
                max_ring_size: common.max_ring_size,
                seed,
            };
            let r = run_census_with(&ring, &opts)?;
            if common.json {
                println!("{}", r.to_json());
            } else {
                let c = &r.counts;
                println!("ring: {}", r.ring);
                println!("total: {}", c.total);
                for (name, v) in [
                    ("nilpotent", c.nilpotent),
                    ("idempotent", c.idempotent),
                    ("tripotent", c.tripotent),
                    ("unit", c.unit),
                    ("drazin", c.drazin),
                    ("strongly drazin", c.strongly_drazin),
                    ("hirano", c.hirano),
                ] {
                    println!("{name}: {v}");
                }
                println!("strongly 2-nil-clean: {}", yes(r.strongly_2_nil_clean));
                for w in &r.witnesses {
                    println!("{}: {} ({})", w.inclusion, w.element, w.reason);
                }
                println!(
                    "cross-check: {} ({} elements)",
                    r.cross_check, r.cross_checked
                );
            }
        }
        Command::Verify {
            theorem,
            ring,
            seed,
            samples,
            max_instances,
            common,
        } => {
            let id: TheoremId = theorem.parse()?;
            let ring = ring_arg(&ring)?;
            let size = ring.size_within(common.max_ring_size)?;
            let space = (size as u128).pow(id.arity());
            let strategy = match samples {
                Some(samples) => Strategy::Sampled { seed, samples },
                None if space > max_instances as u128 => Strategy::Sampled {
                    seed,
                    samples: DEFAULT_SAMPLES,
                },
                None => Strategy::Exhaustive,
            };
            let opts = VerifyOptions {
                strategy,
                workers: common.workers(),
                max_ring_size: common.max_ring_size,
                max_instances,
            };
            let r = verify_theorem(id, &ring, &opts)?;
            if common.json {
                println!("{}", r.to_json());
            } else {
                println!("theorem {} on {} ({})", r.theorem, r.ring, r.strategy);
                if let Some(s) = r.seed {
                    println!("seed: {s}");
                }
                println!("instances: {}, applicable: {}", r.instances, r.applicable);
                println!("violations: {}", r.violations.len());
                for v in &r.violations {
                    println!("  {}: {}", v.instance, v.detail);
                }
                for n in &r.notes {
                    println!("note: {n}");
                }
                if r.note_count > r.notes.len() as u64 {
                    println!("({} more notes)", r.note_count - r.notes.len() as u64);
                }
            }
            if !r.passed() {
                return Ok(ExitCode::from(2));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            let violation = err.chain().any(|e| {
                matches!(
                    e.downcast_ref::<Error>(),
                    Some(Error::TheoremViolation(_) | Error::Verification(_))
                )
            });
            ExitCode::from(if violation { 2 } else { 1 })
        }
    }
}
