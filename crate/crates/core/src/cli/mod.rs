//! Command-line front end.
//!
//! Exit status: 0 on success (including verifications that find nothing),
//! 1 on usage errors, 2 when a verifier finds a violation, 3 when a witness
//! search comes up empty.

mod args;

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command};

use crate::carrier::{is_in_s, PrimeLoop, SieveConfig};
use crate::error::{Error, Result};
use crate::explorer::{self, EqualEdgeCycle};
use crate::graph;
use crate::loop_ops::{self, AxiomMode};
use crate::report::{
    CommandResult, DotValue, NextValue, OutputFormat, Partner, Report, RunConfig, Triple,
};
use crate::SElement;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;

/// Run against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Run with explicit output streams; returns the exit status.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
            return code;
        }
    };
    let config = match validate(&cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match execute(&cli, &config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_not_found() {
                EXIT_NOT_FOUND
            } else {
                EXIT_USAGE
            }
        }
    }
}

fn require_s(what: &str, v: u64) -> Result<()> {
    if is_in_s(v) {
        Ok(())
    } else {
        Err(Error::invalid(format!(
            "{what} = {v} is not in S (1 or an odd prime)"
        )))
    }
}

fn positive(what: &str, v: u64) -> Result<()> {
    if v == 0 {
        return Err(Error::invalid(format!("{what} must be positive")));
    }
    Ok(())
}

/// Check every field and build the serializable run configuration.
pub fn validate(cli: &Cli) -> Result<RunConfig> {
    let threads = match cli.threads {
        Some(0) => return Err(Error::invalid("--threads must be at least 1")),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    if cli.format == OutputFormat::Dot && !cli.command.has_figure() {
        return Err(Error::invalid(format!(
            "--format dot is not available for `{}`",
            cli.command.name()
        )));
    }
    let mut c = RunConfig {
        subcommand: cli.command.name().to_string(),
        output_format: cli.format,
        threads,
        ..Default::default()
    };
    match &cli.command {
        Command::Dot { a, b } => {
            require_s("a", *a)?;
            require_s("b", *b)?;
            c.a = Some(*a);
            c.b = Some(*b);
        }
        Command::Next { x } => c.x = Some(*x),
        Command::Axioms {
            bound,
            sample,
            seed,
        } => {
            positive("--bound", *bound)?;
            if let Some(k) = sample {
                positive("--sample", *k)?;
                c.seed = Some(*seed);
            }
            c.bound = Some(*bound);
            c.sample = *sample;
        }
        Command::AssocWitness {
            bound,
            allow_repeats,
        } => {
            positive("--bound", *bound)?;
            c.bound = Some(*bound);
            c.distinct = Some(!allow_repeats);
        }
        Command::Absorb { s, limit } => {
            require_s("--s", *s)?;
            if limit < s {
                return Err(Error::invalid("--limit must be at least --s"));
            }
            c.s = Some(*s);
            c.limit = Some(*limit);
        }
        Command::Gap { min_run, limit } => {
            positive("--min-run", *min_run)?;
            positive("--limit", *limit)?;
            c.min_run = Some(*min_run);
            c.limit = Some(*limit);
        }
        Command::ApChain {
            n,
            bound,
            min_start,
        } => {
            if *n < 2 {
                return Err(Error::invalid("--n must be at least 2"));
            }
            positive("--bound", *bound)?;
            c.n = Some(*n);
            c.bound = Some(*bound);
            c.min_start = *min_start;
        }
        Command::Path {
            n,
            bound,
            edge,
            include_one,
        } => {
            if *n < 2 {
                return Err(Error::invalid("--n must be at least 2"));
            }
            positive("--bound", *bound)?;
            if let Some(v) = edge {
                require_s("--edge", *v)?;
            }
            c.n = Some(*n);
            c.bound = Some(*bound);
            c.edge_value = *edge;
            c.include_one = Some(*include_one);
        }
        Command::Triangles { bound } => {
            positive("--bound", *bound)?;
            c.bound = Some(*bound);
        }
        Command::TwinAdjacency { bound } => {
            if *bound < 5 {
                return Err(Error::invalid("--bound must be at least 5"));
            }
            c.bound = Some(*bound);
        }
        Command::Lemma { t_max } => {
            if *t_max < 2 || t_max % 2 != 0 {
                return Err(Error::invalid("--t-max must be an even integer ≥ 2"));
            }
            c.t_max = Some(*t_max);
        }
        Command::Bertrand { t_max } => {
            if *t_max < 2 {
                return Err(Error::invalid("--t-max must be at least 2"));
            }
            c.t_max = Some(*t_max);
        }
        Command::Fiber {
            x,
            bound,
            include_one,
        } => {
            require_s("--x", *x)?;
            positive("--bound", *bound)?;
            c.x = Some(*x);
            c.bound = Some(*bound);
            c.include_one = Some(*include_one);
        }
        Command::Quartets {
            bound,
            edge,
            no_one,
        } => {
            positive("--bound", *bound)?;
            if let Some(v) = edge {
                require_s("--edge", *v)?;
            }
            c.bound = Some(*bound);
            c.edge_value = *edge;
            c.include_one = Some(!no_one);
        }
        Command::Cycles { n, bound, no_one } => {
            if *n < 3 {
                return Err(Error::invalid("--n must be at least 3"));
            }
            positive("--bound", *bound)?;
            c.n = Some(*n);
            c.bound = Some(*bound);
            c.include_one = Some(!no_one);
        }
        Command::EmitDot { input } => c.input = Some(input.display().to_string()),
    }
    Ok(c)
}

fn execute(cli: &Cli, config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let sieve = SieveConfig {
        cache_dir: cli.cache_dir.clone(),
        ..SieveConfig::default()
    };
    let lp = PrimeLoop::with_config(1 << 16, sieve)?;

    if let Command::EmitDot { input } = &cli.command {
        let text = std::fs::read_to_string(input)?;
        let report = Report::from_json(&text)?;
        let figure = render_figure(&lp, &report.result, cli.tikz)?;
        out.write_all(figure.as_bytes())?;
        return Ok(EXIT_OK);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start thread pool: {e}")))?;
    let started = Instant::now();
    let result = pool.install(|| compute(&lp, &cli.command))?;
    let elapsed_ms = started.elapsed().as_millis() as u64;

    let code = match &result {
        CommandResult::Verification(r) if !r.holds() => EXIT_VIOLATION,
        CommandResult::Axioms(r) if !r.all_hold() => EXIT_VIOLATION,
        _ => EXIT_OK,
    };

    match cli.format {
        OutputFormat::Text => out.write_all(result.to_text().as_bytes())?,
        OutputFormat::Csv => result.write_csv(&mut *out)?,
        OutputFormat::Dot => out.write_all(render_figure(&lp, &result, cli.tikz)?.as_bytes())?,
        OutputFormat::Json => {
            let report = Report {
                command: config.subcommand.clone(),
                config: config.clone(),
                elapsed_ms: (!cli.no_timing).then_some(elapsed_ms),
                result,
            };
            out.write_all(report.to_json()?.as_bytes())?;
        }
    }
    Ok(code)
}

fn render_figure(lp: &PrimeLoop, result: &CommandResult, tikz: bool) -> Result<String> {
    match result {
        CommandResult::Chain(chain) => {
            chain.validate(lp)?;
            Ok(if tikz {
                graph::chain_to_tikz(chain)
            } else {
                graph::chain_to_dot(chain)
            })
        }
        CommandResult::Cycles(cycles) => {
            for c in cycles {
                c.validate(lp)?;
            }
            Ok(if tikz {
                cycles.iter().map(graph::cycle_to_tikz).collect()
            } else {
                graph::cycles_to_dot(cycles)
            })
        }
        _ => Err(Error::invalid(
            "report holds neither a chain nor a list of cycles",
        )),
    }
}

fn edge(v: &Option<u64>) -> Result<Option<SElement>> {
    v.map(SElement::new).transpose()
}

/// Dispatch one subcommand to the library.
pub fn compute(lp: &PrimeLoop, command: &Command) -> Result<CommandResult> {
    Ok(match command {
        Command::Dot { a, b } => CommandResult::Dot(DotValue {
            a: *a,
            b: *b,
            value: lp.dot(*a, *b)?.get(),
        }),
        Command::Next { x } => CommandResult::Next(NextValue {
            x: *x,
            value: lp.next_in_s(*x).get(),
        }),
        Command::Axioms {
            bound,
            sample,
            seed,
        } => {
            let mode = match sample {
                Some(pairs) => AxiomMode::Sample {
                    pairs: *pairs,
                    seed: *seed,
                },
                None => AxiomMode::Exhaustive,
            };
            CommandResult::Axioms(loop_ops::check_axioms(lp, *bound, mode)?)
        }
        Command::AssocWitness {
            bound,
            allow_repeats,
        } => {
            let [a, b, c] = loop_ops::require_nonassociative_witness(lp, *bound, !allow_repeats)?;
            CommandResult::AssocWitness(Triple { a, b, c })
        }
        Command::Absorb { s, limit } => CommandResult::Absorb(Partner {
            s: *s,
            partner: explorer::absorbing_partner(lp, *s, *limit)?.get(),
        }),
        Command::Gap { min_run, limit } => CommandResult::Gap(lp.gap_search(*min_run, *limit)?),
        Command::ApChain {
            n,
            bound,
            min_start,
        } => CommandResult::Chain(explorer::find_ap_chain(lp, *n, *bound, *min_start)?),
        Command::Path {
            n,
            bound,
            edge: e,
            include_one,
        } => CommandResult::Chain(explorer::find_equal_edge_path(
            lp,
            *n,
            *bound,
            edge(e)?,
            *include_one,
        )?),
        Command::Triangles { bound } => {
            CommandResult::Verification(explorer::verify_no_equal_triangle(lp, *bound)?)
        }
        Command::TwinAdjacency { bound } => {
            CommandResult::Verification(explorer::verify_twin_adjacency(lp, *bound)?)
        }
        Command::Lemma { t_max } => {
            CommandResult::Verification(explorer::verify_lemma_adjacent(lp, *t_max)?)
        }
        Command::Bertrand { t_max } => {
            CommandResult::Verification(explorer::verify_bertrand_bound(lp, *t_max)?)
        }
        Command::Fiber {
            x,
            bound,
            include_one,
        } => CommandResult::Fiber(explorer::fiber_solutions(lp, *x, *bound, *include_one)?),
        Command::Quartets {
            bound,
            edge: e,
            no_one,
        } => {
            let cycles: Vec<EqualEdgeCycle> =
                explorer::find_quartets(lp, *bound, edge(e)?, !no_one)?;
            CommandResult::Cycles(cycles)
        }
        Command::Cycles { n, bound, no_one } => {
            CommandResult::Cycles(explorer::find_equal_edge_cycle(lp, *n, *bound, !no_one)?)
        }
        Command::EmitDot { .. } => {
            return Err(Error::invalid("emit-dot renders an existing report"));
        }
    })
}
