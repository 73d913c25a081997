//! Command-line front end: instance generation, solving, exhaustive
//! oracles, randomized verification, and timing runs.
//!
//! Exit codes: 0 solved / clean verify; 2 infeasible or no solution;
//! 3 validation or usage error; 4 verify found mismatches.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use udgx::biclique::{self, PairMode, WeightedCloud};
use udgx::cycle::ConvexInstance;
use udgx::dispersion::{solve_dispersion3, solve_dispersion_capped};
use udgx::domset::{self, validate_dominating};
use udgx::harness::gen::{gen_cloud, gen_cloud_density, gen_convex, random_weights};
use udgx::harness::io::{read_instance, write_instance, AnyInstance};
use udgx::harness::oracle;
use udgx::harness::verify::{verify, Problem};
use udgx::indep::{max_cardinality_far_set_sq, solve_mwis_capped, triple_far_decision_sq, DEFAULT_MWIS_CAP};
use udgx::kcenter::solve_kcenter;
use udgx::scalar::Scalar;
use udgx::Error;

#[derive(Parser)]
#[command(name = "udgx", version, about = "Exact optimization on unit-disk graphs of planar point sets")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a random instance file
    Generate {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Solve a problem on an instance file
    Solve {
        #[command(subcommand)]
        problem: ProbCmd,
    },
    /// Exhaustive reference solution (small instances only)
    Oracle {
        #[command(subcommand)]
        problem: ProbCmd,
    },
    /// Randomized solver-vs-oracle comparison
    Verify {
        #[arg(long)]
        problem: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long = "n-max", default_value_t = 14)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Wall-clock timing across instance sizes (float mode)
    Bench {
        #[arg(long)]
        problem: String,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GenCmd {
    /// Random strictly convex polygon (unit weights, r = 1)
    Convex {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Approximate diameter in units of r
        #[arg(long, default_value_t = 3.0)]
        scale: f64,
        /// Attach random positive weights instead of unit weights
        #[arg(long)]
        weighted: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Uniform random cloud (unit weights, r = 1)
    Cloud {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Square side; overridden by --density when given
        #[arg(long, default_value_t = 10.0)]
        scale: f64,
        /// Expected unit-disk degree
        #[arg(long)]
        density: Option<f64>,
        /// Attach random mixed-sign weights
        #[arg(long)]
        weighted: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct SolveIo {
    file: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum ProbCmd {
    /// Smallest dominating set
    Dominating {
        #[command(flatten)]
        io: SolveIo,
    },
    /// Minimum-weight dominating set of size <= k (k defaults to n)
    DominatingWeighted {
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        io: SolveIo,
    },
    /// Discrete k-center
    Kcenter {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        io: SolveIo,
    },
    /// Maximum-weight independent set (convex)
    Mwis {
        /// Also print the complementary vertex cover
        #[arg(long)]
        complement: bool,
        /// Raise the instance-size cap of the cubic-memory table
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[command(flatten)]
        io: SolveIo,
    },
    /// Largest subset pairwise farther than r (convex)
    FarSet {
        #[arg(long)]
        r: f64,
        /// Use ">= r" instead of "> r"
        #[arg(long)]
        non_strict: bool,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[command(flatten)]
        io: SolveIo,
    },
    /// Three points pairwise at distance >= r (convex)
    TripleFar {
        #[arg(long)]
        r: f64,
        #[command(flatten)]
        io: SolveIo,
    },
    /// Max-min dispersion for general k (convex)
    Dispersion {
        #[arg(long)]
        k: usize,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[command(flatten)]
        io: SolveIo,
    },
    /// Max-min dispersion for k = 3 (convex)
    Dispersion3 {
        #[command(flatten)]
        io: SolveIo,
    },
    /// Maximum-weight independent set of size 3 (any position)
    Mwis3 {
        #[command(flatten)]
        io: SolveIo,
    },
    /// Maximum-weight clique of size 3 (any position)
    Clique3 {
        #[command(flatten)]
        io: SolveIo,
    },
    /// Maximum-weight far pair
    PairFar {
        #[command(flatten)]
        io: SolveIo,
    },
    /// Maximum-weight near pair
    PairNear {
        #[command(flatten)]
        io: SolveIo,
    },
    /// Minimum-weight independent set of size 3
    Min3Far {
        #[command(flatten)]
        io: SolveIo,
    },
    /// Minimum-weight clique of size 3
    Min3Near {
        #[command(flatten)]
        io: SolveIo,
    },
}

struct Outcome {
    value: Option<f64>,
    witness: Vec<u32>,
    note: Option<String>,
}

impl Outcome {
    fn found(value: f64, witness: Vec<u32>) -> Self {
        Outcome { value: Some(value), witness, note: None }
    }

    fn none() -> Self {
        Outcome { value: None, witness: Vec::new(), note: None }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Generate { what } => {
            generate(what)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Solve { problem } => dispatch(&problem, false),
        Cmd::Oracle { problem } => dispatch(&problem, true),
        Cmd::Verify { problem, trials, n_max, seed } => {
            let p = Problem::parse(&problem)
                .ok_or_else(|| Error::Parse(format!("unknown problem {problem:?}")))?;
            let report = verify(p, trials, n_max, seed)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report json"));
            Ok(if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(4) })
        }
        Cmd::Bench { problem, sizes, seed } => {
            bench(&problem, &sizes, seed)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn generate(what: GenCmd) -> Result<(), Error> {
    match what {
        GenCmd::Convex { n, seed, scale, weighted, out } => {
            let mut inst = gen_convex(n, seed, scale)?;
            if weighted {
                inst = inst.with_weights(random_weights(inst.n(), seed ^ 0x77, true))?;
            }
            write_instance(&out, &AnyInstance::FloatConvex(inst))?;
            println!("wrote {}", out.display());
            Ok(())
        }
        GenCmd::Cloud { n, seed, scale, density, weighted, out } => {
            let mut cloud = match density {
                Some(d) => gen_cloud_density(n, seed, d)?,
                None => gen_cloud(n, seed, scale)?,
            };
            if weighted {
                cloud = WeightedCloud::new(
                    cloud.points().to_vec(),
                    random_weights(n, seed ^ 0x99, false),
                    *cloud.r(),
                    cloud.tol().clone(),
                )?;
            }
            write_instance(&out, &AnyInstance::FloatCloud(cloud))?;
            println!("wrote {}", out.display());
            Ok(())
        }
    }
}

fn dispatch(problem: &ProbCmd, use_oracle: bool) -> Result<ExitCode, Error> {
    let io = solve_io(problem);
    let inst = read_instance(&io.file)?;
    let started = Instant::now();
    let outcome = match &inst {
        AnyInstance::FloatConvex(i) => run_convex(problem, i, use_oracle)?,
        AnyInstance::ExactConvex(i) => run_convex(problem, i, use_oracle)?,
        AnyInstance::FloatCloud(c) => run_cloud(problem, c, use_oracle)?,
        AnyInstance::ExactCloud(c) => run_cloud(problem, c, use_oracle)?,
    };
    let elapsed = started.elapsed().as_millis();

    if io.json {
        let json = serde_json::json!({
            "value": outcome.value,
            "witness": outcome.witness,
            "elapsed_ms": elapsed,
        });
        println!("{json}");
    } else {
        match outcome.value {
            Some(v) => println!("value: {v}"),
            None => println!("value: none"),
        }
        println!("witness: {:?}", outcome.witness);
        if let Some(note) = &outcome.note {
            println!("{note}");
        }
        println!("elapsed: {elapsed} ms");
    }
    Ok(if outcome.value.is_some() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn solve_io(problem: &ProbCmd) -> &SolveIo {
    match problem {
        ProbCmd::Dominating { io }
        | ProbCmd::DominatingWeighted { io, .. }
        | ProbCmd::Kcenter { io, .. }
        | ProbCmd::Mwis { io, .. }
        | ProbCmd::FarSet { io, .. }
        | ProbCmd::TripleFar { io, .. }
        | ProbCmd::Dispersion { io, .. }
        | ProbCmd::Dispersion3 { io }
        | ProbCmd::Mwis3 { io }
        | ProbCmd::Clique3 { io }
        | ProbCmd::PairFar { io }
        | ProbCmd::PairNear { io }
        | ProbCmd::Min3Far { io }
        | ProbCmd::Min3Near { io } => io,
    }
}

fn scalar_from_f64<S: Scalar>(v: f64) -> Result<S, Error> {
    S::from_f64(v).ok_or(Error::NonFinite)
}

fn run_convex<S: Scalar>(
    problem: &ProbCmd,
    inst: &ConvexInstance<S>,
    use_oracle: bool,
) -> Result<Outcome, Error> {
    match problem {
        ProbCmd::Dominating { .. } => {
            if use_oracle {
                let (k, centers) =
                    oracle::dominating_min_cardinality(inst.points(), inst.r_sq(), inst.tol())?;
                return Ok(Outcome::found(k as f64, centers));
            }
            let sol = domset::solve_unweighted(inst)?;
            if !validate_dominating(inst, inst.r_sq(), &sol.centers) {
                return Err(Error::Parse("solver witness failed re-validation".into()));
            }
            Ok(Outcome::found(sol.total_weight.to_f64(), sol.centers))
        }
        ProbCmd::DominatingWeighted { k, .. } => {
            let k = k.unwrap_or(inst.n());
            if use_oracle {
                let per_k = oracle::dominating_weighted_per_k(
                    inst.points(),
                    inst.weights(),
                    inst.r_sq(),
                    inst.tol(),
                )?;
                let k = k.clamp(1, inst.n());
                return Ok(match &per_k[k - 1] {
                    Some((w, centers)) => Outcome::found(w.to_f64(), centers.clone()),
                    None => Outcome::none(),
                });
            }
            match domset::solve_weighted_bounded(inst, k)? {
                Some(sol) => {
                    if sol.centers.len() > k || !validate_dominating(inst, inst.r_sq(), &sol.centers) {
                        return Err(Error::Parse("solver witness failed re-validation".into()));
                    }
                    Ok(Outcome::found(sol.total_weight.to_f64(), sol.centers))
                }
                None => Ok(Outcome::none()),
            }
        }
        ProbCmd::Kcenter { k, .. } => {
            if use_oracle {
                let r = oracle::kcenter(inst.points(), *k, inst.tol())?;
                return Ok(Outcome::found(r.to_f64().sqrt(), Vec::new()));
            }
            let sol = solve_kcenter(inst, *k)?;
            if !validate_dominating(inst, &sol.r_star_sq, &sol.centers) {
                return Err(Error::Parse("solver witness failed re-validation".into()));
            }
            Ok(Outcome::found(sol.r_star(), sol.centers))
        }
        ProbCmd::Mwis { complement, max_n, .. } => {
            if use_oracle {
                let (w, members) =
                    oracle::mwis(inst.points(), inst.weights(), inst.r_sq(), inst.tol(), true)?;
                return Ok(Outcome::found(w.to_f64(), members));
            }
            let cap = max_n.unwrap_or(DEFAULT_MWIS_CAP);
            let (w, members) = solve_mwis_capped(inst, cap)?;
            if !oracle::validate_pairwise(inst.points(), &members, inst.r_sq(), inst.tol(), PairMode::Far, true) {
                return Err(Error::Parse("solver witness failed re-validation".into()));
            }
            let note = complement.then(|| {
                let chosen: std::collections::HashSet<u32> = members.iter().copied().collect();
                let cover: Vec<u32> =
                    (0..inst.n() as u32).filter(|i| !chosen.contains(i)).collect();
                format!("vertex cover (complement): {cover:?}")
            });
            Ok(Outcome { value: Some(w.to_f64()), witness: members, note })
        }
        ProbCmd::FarSet { r, non_strict, max_n, .. } => {
            let strict = !non_strict;
            let r_s: S = scalar_from_f64(*r)?;
            let r_sq = r_s.clone() * r_s;
            if use_oracle {
                let ones = vec![S::one(); inst.n()];
                let (_, members) = oracle::mwis(inst.points(), &ones, &r_sq, inst.tol(), strict)?;
                return Ok(Outcome::found(members.len() as f64, members));
            }
            let cap = max_n.unwrap_or(DEFAULT_MWIS_CAP);
            let members = max_cardinality_far_set_sq(inst, &r_sq, strict, cap)?;
            if !oracle::validate_pairwise(inst.points(), &members, &r_sq, inst.tol(), PairMode::Far, strict) {
                return Err(Error::Parse("solver witness failed re-validation".into()));
            }
            Ok(Outcome::found(members.len() as f64, members))
        }
        ProbCmd::TripleFar { r, .. } => {
            let r_s: S = scalar_from_f64(*r)?;
            let r_sq = r_s.clone() * r_s;
            if use_oracle {
                return Ok(if oracle::triple_far_exists(inst.points(), &r_sq, inst.tol())? {
                    let (_, (a, b, c)) = oracle::dispersion3(inst.points(), inst.tol())?;
                    Outcome::found(3.0, vec![a, b, c])
                } else {
                    Outcome::none()
                });
            }
            match triple_far_decision_sq(inst, &r_sq)? {
                Some((a, b, c)) => {
                    let w = vec![a, b, c];
                    if !oracle::validate_pairwise(inst.points(), &w, &r_sq, inst.tol(), PairMode::Far, false) {
                        return Err(Error::Parse("solver witness failed re-validation".into()));
                    }
                    Ok(Outcome::found(3.0, w))
                }
                None => Ok(Outcome::none()),
            }
        }
        ProbCmd::Dispersion { k, max_n, .. } => {
            if use_oracle {
                let v = oracle::dispersion(inst.points(), *k, inst.tol())?;
                return Ok(Outcome::found(v.to_f64().sqrt(), Vec::new()));
            }
            let cap = max_n.unwrap_or(DEFAULT_MWIS_CAP);
            let sol = solve_dispersion_capped(inst, *k, cap)?;
            if let Some(r_sq) = &sol.r_star_sq {
                if !oracle::validate_pairwise(inst.points(), &sol.members, r_sq, inst.tol(), PairMode::Far, false) {
                    return Err(Error::Parse("solver witness failed re-validation".into()));
                }
            }
            Ok(Outcome::found(sol.r_star(), sol.members))
        }
        ProbCmd::Dispersion3 { .. } => {
            if use_oracle {
                let (v, (a, b, c)) = oracle::dispersion3(inst.points(), inst.tol())?;
                return Ok(Outcome::found(v.to_f64().sqrt(), vec![a, b, c]));
            }
            let sol = solve_dispersion3(inst)?;
            let r_sq = sol.r_star_sq.clone().expect("k = 3 is finite");
            if !oracle::validate_pairwise(inst.points(), &sol.members, &r_sq, inst.tol(), PairMode::Far, false) {
                return Err(Error::Parse("solver witness failed re-validation".into()));
            }
            Ok(Outcome::found(sol.r_star(), sol.members))
        }
        // point-cloud problems accept convex instances as clouds
        _ => {
            let cloud = WeightedCloud::new(
                inst.points().to_vec(),
                inst.weights().to_vec(),
                inst.r().clone(),
                inst.tol().clone(),
            )?;
            run_cloud(problem, &cloud, use_oracle)
        }
    }
}

fn run_cloud<S: Scalar>(
    problem: &ProbCmd,
    cloud: &WeightedCloud<S>,
    use_oracle: bool,
) -> Result<Outcome, Error> {
    let triple = |mode: PairMode, minimize: bool| -> Result<Outcome, Error> {
        if use_oracle {
            let target = if minimize { cloud.negated() } else {
                WeightedCloud::new(cloud.points().to_vec(), cloud.weights().to_vec(), cloud.r().clone(), cloud.tol().clone())?
            };
            let got = oracle::cloud_triple(target.points(), target.weights(), target.r_sq(), target.tol(), mode)?;
            return Ok(match got {
                Some((w, idx)) => {
                    let v = if minimize { -w.to_f64() } else { w.to_f64() };
                    Outcome::found(v, idx.to_vec())
                }
                None => Outcome::none(),
            });
        }
        let got = if minimize {
            biclique::solve_min_triple(cloud, mode)?
        } else {
            biclique::solve_triple(cloud, mode)?
        };
        Ok(match got {
            Some(sol) => {
                if !oracle::validate_pairwise(cloud.points(), &sol.indices, cloud.r_sq(), cloud.tol(), mode, true) {
                    return Err(Error::Parse("solver witness failed re-validation".into()));
                }
                Outcome::found(sol.total_weight.to_f64(), sol.indices.to_vec())
            }
            None => Outcome::none(),
        })
    };
    let pair = |mode: PairMode, minimize: bool| -> Result<Outcome, Error> {
        let got = if use_oracle {
            let target = if minimize { cloud.negated() } else {
                WeightedCloud::new(cloud.points().to_vec(), cloud.weights().to_vec(), cloud.r().clone(), cloud.tol().clone())?
            };
            oracle::cloud_pair(target.points(), target.weights(), target.r_sq(), target.tol(), mode)?
                .map(|(w, ij)| (ij, if minimize { -w } else { w }))
        } else if minimize {
            biclique::solve_min_pair(cloud, mode)?
        } else {
            biclique::solve_pair(cloud, mode)?
        };
        Ok(match got {
            Some(((i, j), w)) => Outcome::found(w.to_f64(), vec![i, j]),
            None => Outcome::none(),
        })
    };
    match problem {
        ProbCmd::Mwis3 { .. } => triple(PairMode::Far, false),
        ProbCmd::Clique3 { .. } => triple(PairMode::Near, false),
        ProbCmd::Min3Far { .. } => triple(PairMode::Far, true),
        ProbCmd::Min3Near { .. } => triple(PairMode::Near, true),
        ProbCmd::PairFar { .. } => pair(PairMode::Far, false),
        ProbCmd::PairNear { .. } => pair(PairMode::Near, false),
        _ => Err(Error::Parse("this problem needs a convex instance".into())),
    }
}

fn bench(problem: &str, sizes: &[usize], seed: u64) -> Result<(), Error> {
    if sizes.is_empty() {
        return Err(Error::Parse("--sizes must list at least one size".into()));
    }
    println!("{:>8}  {:>12}  problem={problem}", "n", "elapsed_ms");
    for &n in sizes {
        let started;
        let elapsed_ms;
        match problem {
            "dominating" => {
                let inst = gen_convex(n, seed, 6.0)?;
                started = Instant::now();
                let sol = domset::solve_unweighted(&inst)?;
                elapsed_ms = started.elapsed().as_millis();
                println!("{n:>8}  {elapsed_ms:>12}  (k = {})", sol.centers.len());
                continue;
            }
            "dominating-weighted" => {
                let inst = gen_convex(n, seed, 4.0)?
                    .with_weights(random_weights(n, seed ^ 0x77, true))?;
                started = Instant::now();
                let _ = domset::solve_weighted(&inst)?;
            }
            "kcenter" => {
                let inst = gen_convex(n, seed, 6.0)?;
                started = Instant::now();
                let _ = solve_kcenter(&inst, 4.min(n))?;
            }
            "mwis" => {
                let inst = gen_convex(n, seed, 3.0)?
                    .with_weights(random_weights(n, seed ^ 0x77, true))?;
                started = Instant::now();
                let _ = solve_mwis_capped(&inst, n)?;
            }
            "dispersion3" => {
                let inst = gen_convex(n, seed, 3.0)?;
                started = Instant::now();
                let _ = solve_dispersion3(&inst)?;
            }
            "mwis3" | "clique3" => {
                let cloud = gen_cloud_density(n, seed, 10.0)?;
                let cloud = WeightedCloud::new(
                    cloud.points().to_vec(),
                    random_weights(n, seed ^ 0x99, false),
                    *cloud.r(),
                    cloud.tol().clone(),
                )?;
                let mode = if problem == "mwis3" { PairMode::Far } else { PairMode::Near };
                started = Instant::now();
                let _ = biclique::solve_triple(&cloud, mode)?;
            }
            other => return Err(Error::Parse(format!("unknown bench problem {other:?}"))),
        }
        elapsed_ms = started.elapsed().as_millis();
        println!("{n:>8}  {elapsed_ms:>12}");
    }
    Ok(())
}
