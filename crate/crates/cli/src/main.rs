//! `rotary`: classify, verify and census orientably-regular embeddings of
//! complete multigraphs `K_q^{(t)}`.
//!
//! Exit codes: 0 success (including empty results), 1 verification failure,
//! 2 usage error, 3 resource limit.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use rotary::atlas::{atlas, table_view, to_csv, to_markdown};
use rotary::construct::{param_sets, presentation_of, verify_construction};
use rotary::cosetenum::{enumerate_cosets, order_of_generator, Enumeration, Presentation};
use rotary::crosscheck::oracle_vs_construction;
use rotary::ffield::{enumerate_primitive, PrimePower};
use rotary::grp::Gen;
use rotary::mapcore::classify;
use rotary::oracle::{census, is_default_feasible, CensusError, CensusLimits};

const VERIFICATION_FAILED: u8 = 1;
const RESOURCE_LIMIT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "rotary", version, about = "Orientably-regular embeddings of complete multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every orientably-regular embedding of K_q^(t) with its invariants.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build each group and check relators, orders, commutator subgroup and quotient.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        /// Print the full reports as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Brute-force census of regular rotation systems on K_r^(t).
    Census {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        r: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        /// Worker threads.
        #[arg(long, env = "ROTARY_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Match the census one-to-one against the classified maps.
        #[arg(long)]
        check: bool,
        /// Abort after this many complete rotation tuples.
        #[arg(long, default_value_t = 1 << 32)]
        max_leaves: u64,
        #[arg(long, default_value_t = 64)]
        max_darts: usize,
        /// Print the representatives in rotation-system text format.
        #[arg(long)]
        show: bool,
    },
    /// Write CSV, markdown and grouped table views for 2 ≤ q ≤ q_max, 1 ≤ t ≤ t_max.
    Atlas {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t_max: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Partition the maps of K_q^(t) into orbits of the Wilson operators.
    Wilson {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        #[arg(long)]
        json: bool,
    },
    /// List the primitive polynomials of degree k over F_p.
    Polys {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
    },
    /// Order of the group presented in FILE ('-' for stdin), by coset enumeration.
    Order {
        file: PathBuf,
        /// Maximum number of cosets.
        #[arg(long, default_value_t = 1 << 22)]
        limit: usize,
    },
    /// Print the presentation of one parameter set of K_q^(t).
    Presentation {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        q: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        /// Which parameter set, in classification order.
        #[arg(long, default_value_t = 0)]
        index: usize,
        /// List the parameter sets instead.
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(VERIFICATION_FAILED)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let mut out = io::stdout().lock();
    match command {
        Command::Classify { q, t, format } => {
            let c = classify(q, t).context("classification failed")?;
            match format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&c.records)?)?,
                Format::Csv => write!(out, "{}", to_csv(&c.records))?,
                Format::Md => write!(out, "{}", to_markdown(&c.records))?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { q, t, json } => verify(&mut out, q, t, json),
        Command::Census {
            r,
            t,
            jobs,
            check,
            max_leaves,
            max_darts,
            show,
        } => {
            let (r, t) = (r as usize, t as usize);
            if !is_default_feasible(r, t) {
                eprintln!("note: K_{r}^({t}) is outside the default census range and may take long");
            }
            let limits = CensusLimits {
                max_leaves,
                max_darts,
                jobs: jobs.max(1),
                ..CensusLimits::default()
            };
            if check {
                return census_check(&mut out, r, t, &limits);
            }
            match census(r, t, &limits) {
                Ok(c) => {
                    writeln!(out, "r={r} t={t} count={} leaves={} survivors={}", c.count(), c.leaves, c.survivors)?;
                    if show {
                        for rep in &c.representatives {
                            writeln!(out, "{}", rep.to_text())?;
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(e @ (CensusError::LimitExceeded { .. } | CensusError::TooLarge { .. })) => {
                    eprintln!("census stopped: {e}");
                    Ok(ExitCode::from(RESOURCE_LIMIT))
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Atlas { q_max, t_max, out: dir } => {
            let records = atlas(2..=q_max, 1..=t_max).context("classification failed")?;
            fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            for (name, body) in [
                ("atlas.csv", to_csv(&records)),
                ("atlas.md", to_markdown(&records)),
                ("tables.txt", table_view(&records)),
            ] {
                let path = dir.join(name);
                fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
            }
            writeln!(out, "{} maps written to {}", records.len(), dir.display())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Wilson { q, t, json } => {
            let c = classify(q, t).context("classification failed")?;
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&c.wilson)?)?;
                return Ok(ExitCode::SUCCESS);
            }
            writeln!(out, "{} maps in {} orbits", c.records.len(), c.wilson.orbits.len())?;
            for (k, orbit) in c.wilson.orbits.iter().enumerate() {
                let labels: Vec<String> = orbit.iter().map(|&i| c.records[i].params.label()).collect();
                writeln!(out, "orbit {k}: {}", labels.join("; "))?;
            }
            for link in &c.wilson.links {
                writeln!(
                    out,
                    "H_{}: {} -> {}",
                    link.j,
                    c.records[link.from].params.label(),
                    c.records[link.to].params.label()
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Polys { p, k } => {
            let pp = PrimePower::new(p, k).context("not a valid prime power")?;
            for mu in enumerate_primitive(pp) {
                writeln!(out, "{mu}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Order { file, limit } => {
            let text = if file.as_os_str() == "-" {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            } else {
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?
            };
            let p: Presentation = text.parse().context("malformed presentation")?;
            let e = enumerate_cosets(&p, limit.max(1))?;
            match &e {
                Enumeration::Complete(_) => {
                    let (ox, oy) = (order_of_generator(&e, Gen::X)?, order_of_generator(&e, Gen::Y)?);
                    writeln!(out, "order {}", e.order().expect("complete"))?;
                    writeln!(out, "ord(x) {ox}")?;
                    writeln!(out, "ord(y) {oy}")?;
                    Ok(ExitCode::SUCCESS)
                }
                Enumeration::Inconclusive { limit, live } => {
                    eprintln!("inconclusive: {live} live cosets when the limit of {limit} was reached");
                    Ok(ExitCode::from(RESOURCE_LIMIT))
                }
            }
        }
        Command::Presentation { q, t, index, list } => {
            let sets = param_sets(q, t);
            if list {
                for (i, ps) in sets.iter().enumerate() {
                    writeln!(out, "{i}: {}", ps.label())?;
                }
                return Ok(ExitCode::SUCCESS);
            }
            let Some(ps) = sets.get(index) else {
                bail!("K_{q}^({t}) has {} parameter sets, no index {index}", sets.len());
            };
            writeln!(out, "# q={q} t={t} {}", ps.label())?;
            writeln!(out, "# expected order {}", ps.group_order())?;
            write!(out, "{}", presentation_of(ps)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify(out: &mut impl Write, q: u64, t: u64, json: bool) -> Result<ExitCode> {
    if PrimePower::from_order(q).is_err() {
        writeln!(out, "q={q} is not a prime power: nothing to verify")?;
        return Ok(ExitCode::SUCCESS);
    }
    let sets = param_sets(q, t);
    if sets.is_empty() {
        writeln!(out, "K_{q}^({t}) has no orientably-regular embedding: nothing to verify")?;
        return Ok(ExitCode::SUCCESS);
    }
    let mut failed = false;
    let mut reports = Vec::new();
    for ps in &sets {
        let report = verify_construction(ps).with_context(|| ps.label())?;
        if !json {
            let status = if report.passed() { "ok  " } else { "FAIL" };
            writeln!(
                out,
                "{status} {}: order {} ord(x)={} ord(y)={} G'={} |G'∩<y>|={}",
                ps.label(),
                report.order,
                report.ord_x,
                report.ord_y,
                report.derived_type,
                report.derived_meets_y
            )?;
            for f in &report.failures {
                writeln!(out, "     {f}")?;
            }
        }
        failed |= !report.passed();
        reports.push(report);
    }
    // regularity, underlying graph and pairwise non-isomorphism
    let maps = match classify(q, t) {
        Ok(c) => Some(c.records.len()),
        Err(e) => {
            failed = true;
            if !json {
                writeln!(out, "FAIL maps: {e}")?;
            }
            None
        }
    };
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
    } else if let Some(n) = maps {
        writeln!(out, "ok   {n} maps: orientably regular on K_{q}^({t}), pairwise non-isomorphic")?;
    }
    Ok(if failed { ExitCode::from(VERIFICATION_FAILED) } else { ExitCode::SUCCESS })
}

fn census_check(out: &mut impl Write, r: usize, t: usize, limits: &CensusLimits) -> Result<ExitCode> {
    use rotary::crosscheck::CrosscheckError;
    match oracle_vs_construction(r, t, limits) {
        Ok(x) => {
            writeln!(out, "r={r} t={t} count={} constructed={}", x.oracle_count, x.constructed_count)?;
            for rep in &x.unmatched_oracle {
                writeln!(out, "unmatched census map:\n{}", rep.to_text())?;
            }
            for label in &x.unmatched_constructed {
                writeln!(out, "unmatched constructed map: {label}")?;
            }
            if x.agrees() {
                writeln!(out, "check: census matches the classification one-to-one")?;
                Ok(ExitCode::SUCCESS)
            } else {
                writeln!(out, "check: MISMATCH")?;
                Ok(ExitCode::from(VERIFICATION_FAILED))
            }
        }
        Err(CrosscheckError::Census(e @ (CensusError::LimitExceeded { .. } | CensusError::TooLarge { .. }))) => {
            eprintln!("census stopped: {e}");
            Ok(ExitCode::from(RESOURCE_LIMIT))
        }
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }
}
