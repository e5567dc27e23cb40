//! The `alexlab` command line: every subcommand prints one deterministic
//! JSON report on stdout. Exit codes: 0 when a verdict or report was
//! produced, 1 when a verification-style check failed, 2 on input errors
//! (with a single-line diagnostic on stderr).

use clap::{ArgGroup, Args, Parser, Subcommand};

use crate::bigpoly::IntPoly;
use crate::cyclores::{self, CycResSeq};
use crate::knot::{self, BraidWord, KnotInput, SeifertMatrix};
use crate::quotring::{
    annihilator, stable_annihilator_image, IdealLattice, RingElem, RingError, TruncRingCtx,
};
use crate::serial::{self, to_json};

/// Cap on pipeline levels; overridable through `ALEXLAB_LEVELS_MAX`.
pub const DEFAULT_LEVELS_MAX: u64 = 12;

#[derive(Parser)]
#[command(
    name = "alexlab",
    version,
    about = "Exact Alexander polynomials, cyclic resultants, and branched cyclic covers"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct KnotArgs {
    /// Braid word, e.g. "s1 s1 s1" (S<i> is the inverse generator)
    #[arg(long)]
    braid: Option<String>,
    /// Seifert matrix as JSON rows, e.g. "[[-1,1],[0,-1]]", or @path
    #[arg(long)]
    seifert: Option<String>,
    /// Name from the bundled table: unknot, 3_1, 4_1, 5_1, 5_2, 6_1, granny, square
    #[arg(long)]
    knot: Option<String>,
}

impl KnotArgs {
    fn to_input(&self) -> Result<KnotInput, String> {
        knot_input(self.braid.as_deref(), self.seifert.as_deref(), self.knot.as_deref())
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("side_j").required(true).multiple(false)))]
#[command(group(ArgGroup::new("side_k").required(true).multiple(false)))]
struct CompareArgs {
    /// Braid word for the first knot
    #[arg(long, group = "side_j")]
    braid_j: Option<String>,
    /// Seifert matrix (JSON rows or @path) for the first knot
    #[arg(long, group = "side_j")]
    seifert_j: Option<String>,
    /// Table name for the first knot
    #[arg(long, group = "side_j")]
    knot_j: Option<String>,
    /// Braid word for the second knot
    #[arg(long, group = "side_k")]
    braid_k: Option<String>,
    /// Seifert matrix (JSON rows or @path) for the second knot
    #[arg(long, group = "side_k")]
    seifert_k: Option<String>,
    /// Table name for the second knot
    #[arg(long, group = "side_k")]
    knot_k: Option<String>,
    /// Compare ideals at levels 1..=LEVELS (capped by ALEXLAB_LEVELS_MAX)
    #[arg(long)]
    levels: Option<u64>,
    /// Coefficient modulus of the layer rings (0 = integer coefficients)
    #[arg(long, default_value_t = 0)]
    modulus: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial of one knot
    Poly(KnotArgs),
    /// Absolute cyclic resultants |R(f, t^n - 1)| for n = 1..=max-n
    #[command(name = "cyclic-resultants")]
    CyclicResultants {
        /// Polynomial in t, e.g. "t^2 - 3t + 1"
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 12)]
        max_n: u64,
    },
    /// Homology of the n-fold branched cyclic cover of a knot
    #[command(name = "branched-homology")]
    BranchedHomology {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        n: u64,
    },
    /// Check |Z[t]/(f, t^n - 1)| against |R(f, t^n - 1)|
    #[command(name = "weber-check")]
    WeberCheck {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        n: u64,
    },
    /// Full comparison pipeline for two knots
    Compare(CompareArgs),
    /// Fried's pair for primes p, q: resultant agreement plus the smallest
    /// level at which the quotient groups differ
    #[command(name = "fried-pair")]
    FriedPair {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 60)]
        max_n: u64,
        /// Bound for the quotient-structure witness search
        #[arg(long, default_value_t = 36)]
        quotient_max_n: u64,
    },
    /// Recover reciprocal polynomials from a |r_n| sequence file
    Reconstruct {
        /// JSON file: {"N": ..., "abs_values": ["...", ...]}
        #[arg(long)]
        seq_file: String,
        #[arg(long)]
        deg_max: usize,
        #[arg(long)]
        height_max: u64,
    },
    /// Layer-ring operations
    Ring {
        #[command(subcommand)]
        op: RingOp,
    },
}

#[derive(Subcommand)]
enum RingOp {
    /// Compare the ideals (f(t^v)) and (g(t)) in Z/m[t]/(t^n - 1)
    #[command(name = "ideal-equal")]
    IdealEqual {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        modulus: u64,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Twist exponent v with gcd(v, n) = 1 applied to f
        #[arg(long, default_value_t = 1)]
        twist: i64,
    },
    /// Annihilator ideal lattice of f in the layer ring
    Annihilator {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        modulus: u64,
        #[arg(long)]
        f: String,
    },
    /// Mittag-Leffler test: stabilized annihilator image at a target layer
    /// under the doubling schedule (n·2^k, m·2^k) for k = 1..=steps
    #[command(name = "ml-test")]
    MlTest {
        #[arg(long)]
        f: String,
        #[arg(long)]
        target_n: u64,
        #[arg(long)]
        target_m: u64,
        #[arg(long, default_value_t = 5)]
        steps: u32,
    },
}

/// Parse the process arguments, run, print the report. Returns the exit code.
pub fn run_from_args() -> i32 {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok((json, code)) => {
            print!("{json}");
            code
        }
        Err(diag) => {
            eprintln!("error: {diag}");
            2
        }
    }
}

fn parse_poly(text: &str) -> Result<IntPoly, String> {
    text.parse::<IntPoly>().map_err(|e| e.to_string())
}

fn read_payload(text: &str) -> Result<String, String> {
    match text.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}")),
        None => Ok(text.to_string()),
    }
}

fn parse_seifert(text: &str) -> Result<SeifertMatrix, String> {
    let payload = read_payload(text)?;
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(&payload).map_err(|e| format!("bad Seifert matrix JSON: {e}"))?;
    let borrowed: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    SeifertMatrix::from_i64(&borrowed).map_err(|e| e.to_string())
}

fn knot_input(
    braid: Option<&str>,
    seifert: Option<&str>,
    table: Option<&str>,
) -> Result<KnotInput, String> {
    match (braid, seifert, table) {
        (Some(w), None, None) => Ok(KnotInput::Braid(BraidWord::parse(w).map_err(|e| e.to_string())?)),
        (None, Some(s), None) => Ok(KnotInput::Seifert(parse_seifert(s)?)),
        (None, None, Some(name)) => Ok(KnotInput::Table(name.to_string())),
        _ => Err("specify exactly one of --braid, --seifert, --knot".to_string()),
    }
}

fn levels_cap() -> u64 {
    std::env::var("ALEXLAB_LEVELS_MAX")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_LEVELS_MAX)
        .max(1)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn execute(command: Command) -> Result<(String, i32), String> {
    match command {
        Command::Poly(args) => {
            let data = args.to_input()?.resolve().map_err(|e| e.to_string())?;
            let report = serial::PolyReport {
                delta: serial::PolyRecord::from_poly(data.delta()),
                source: data.source().as_str().to_string(),
            };
            Ok((to_json(&report), 0))
        }
        Command::CyclicResultants { poly, max_n } => {
            let f = parse_poly(&poly)?;
            let seq = CycResSeq::compute(&f, max_n).map_err(|e| e.to_string())?;
            Ok((to_json(&serial::SeqRecord::from_seq(&seq)), 0))
        }
        Command::BranchedHomology { knot: knot_args, n } => {
            if n < 1 {
                return Err("--n must be at least 1".to_string());
            }
            let data = knot_args.to_input()?.resolve().map_err(|e| e.to_string())?;
            let group = knot::branched_cover_homology(&data, n);
            Ok((to_json(&serial::GroupRecord::from_group(&group)), 0))
        }
        Command::WeberCheck { poly, n } => {
            if n < 1 {
                return Err("--n must be at least 1".to_string());
            }
            let f = parse_poly(&poly)?;
            let report = cyclores::weber_check(&f, n).map_err(|e| e.to_string())?;
            let code = if report.passed { 0 } else { 1 };
            Ok((to_json(&serial::OrderCheckRecord::from_weber(&report)), code))
        }
        Command::Compare(args) => {
            let j = knot_input(args.braid_j.as_deref(), args.seifert_j.as_deref(), args.knot_j.as_deref())?;
            let k = knot_input(args.braid_k.as_deref(), args.seifert_k.as_deref(), args.knot_k.as_deref())?;
            let cap = levels_cap();
            let max_level = args.levels.unwrap_or(cap).min(cap).max(1);
            let levels = knot::levels_up_to(max_level);
            let report = knot::theorem_pipeline(&j, &k, &levels, args.modulus)
                .map_err(|e| e.to_string())?;
            let code = if report.consistent { 0 } else { 1 };
            Ok((to_json(&serial::CompareRecord::from_report(&report)), code))
        }
        Command::FriedPair { p, q, max_n, quotient_max_n } => {
            if !is_prime(p) || !is_prime(q) || p == q {
                return Err("--p and --q must be distinct primes".to_string());
            }
            let (f, g) = cyclores::fried_pair(p, q);
            let resultants = cyclores::fried_verify(&f, &g, max_n).map_err(|e| e.to_string())?;
            let witness = cyclores::quotient_distinguisher(&f, &g, quotient_max_n).map(
                |(level, qf, qg)| serial::QuotientWitnessRecord {
                    level,
                    f_group: serial::GroupRecord::from_group(&qf),
                    g_group: serial::GroupRecord::from_group(&qg),
                },
            );
            let code = if resultants.agree { 0 } else { 1 };
            let record = serial::FriedPairRecord {
                p,
                q,
                f: serial::PolyRecord::from_poly(&f),
                g: serial::PolyRecord::from_poly(&g),
                resultants: serial::FriedRecord::from_report(&resultants),
                quotient_witness: witness,
                finite_level_only: true,
            };
            Ok((to_json(&record), code))
        }
        Command::Reconstruct { seq_file, deg_max, height_max } => {
            let payload = std::fs::read_to_string(&seq_file).map_err(|e| format!("{seq_file}: {e}"))?;
            let record: serial::SeqRecord =
                serde_json::from_str(&payload).map_err(|e| format!("bad sequence file: {e}"))?;
            let values = record.parse_values()?;
            let report = cyclores::reconstruct_reciprocal(&values, deg_max, height_max)
                .map_err(|e| e.to_string())?;
            Ok((to_json(&serial::ReconstructRecord::from_report(&report)), 0))
        }
        Command::Ring { op } => execute_ring(op),
    }
}

fn execute_ring(op: RingOp) -> Result<(String, i32), String> {
    match op {
        RingOp::IdealEqual { n, modulus, f, g, twist } => {
            if n < 1 {
                return Err("--n must be at least 1".to_string());
            }
            let ctx = TruncRingCtx::new(n, modulus);
            let lhs = IdealLattice::from_poly(&parse_poly(&f)?, ctx)
                .twist(twist)
                .map_err(|e| e.to_string())?;
            let rhs = IdealLattice::from_poly(&parse_poly(&g)?, ctx);
            let record = serial::IdealEqualRecord {
                equal: lhs.ideal_equal(&rhs).map_err(|e| e.to_string())?,
                lhs: serial::LatticeRecord::from_lattice(&lhs),
                rhs: serial::LatticeRecord::from_lattice(&rhs),
            };
            Ok((to_json(&record), 0))
        }
        RingOp::Annihilator { n, modulus, f } => {
            if n < 1 {
                return Err("--n must be at least 1".to_string());
            }
            let ctx = TruncRingCtx::new(n, modulus);
            let ann = annihilator(&RingElem::reduce(&parse_poly(&f)?, ctx));
            Ok((to_json(&serial::LatticeRecord::from_lattice(&ann)), 0))
        }
        RingOp::MlTest { f, target_n, target_m, steps } => {
            if target_n < 1 || target_m < 1 {
                return Err("--target-n and --target-m must be at least 1".to_string());
            }
            let target = TruncRingCtx::new(target_n, target_m);
            let schedule = doubling_schedule(target, steps);
            let poly = parse_poly(&f)?;
            let schedule_records =
                schedule.iter().map(|c| serial::CtxRecord::from_ctx(*c)).collect();
            match stable_annihilator_image(&poly, target, &schedule) {
                Ok(image) => {
                    let record = serial::MlTestRecord {
                        target: serial::CtxRecord::from_ctx(target),
                        schedule: schedule_records,
                        stabilized: true,
                        image_is_zero_ideal: Some(image.is_zero_ideal()),
                        image: Some(serial::LatticeRecord::from_lattice(&image)),
                        finite_level_only: true,
                    };
                    Ok((to_json(&record), 0))
                }
                Err(RingError::NotStabilized) => {
                    let record = serial::MlTestRecord {
                        target: serial::CtxRecord::from_ctx(target),
                        schedule: schedule_records,
                        stabilized: false,
                        image_is_zero_ideal: None,
                        image: None,
                        finite_level_only: true,
                    };
                    Ok((to_json(&record), 1))
                }
                Err(e) => Err(e.to_string()),
            }
        }
    }
}

/// The schedule `(n·2^k, m·2^k)` for `k = 1..=steps`, ascending.
pub fn doubling_schedule(target: TruncRingCtx, steps: u32) -> Vec<TruncRingCtx> {
    (1..=steps)
        .map(|k| TruncRingCtx::new(target.n() << k, target.modulus() << k))
        .collect()
}
