//! `pbij`: map, check, count and verify partitions for the residue-restricted
//! multiplicity bijection.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partition_bijection::exec::with_jobs;
use partition_bijection::oracle::count_family_table;
use partition_bijection::series::{count_rows_csv, count_rows_json, family_series};
use partition_bijection::{
    forward, in_family, inverse, verify_bijection, Error, Family, Params, Partition, VerificationReport,
    DEFAULT_N_CAP, DEFAULT_SERIES_CAP,
};

#[derive(Parser)]
#[command(name = "pbij", version, about = "Partition bijection between residue-restricted multiplicities and congruence-restricted parts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    /// Modulus p (at least 2)
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
    /// Residue a with 1 <= a < p and gcd(a, p) = 1
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    /// Nonnegative shift r
    #[arg(long, allow_negative_numbers = true)]
    r: i64,
}

impl ParamArgs {
    fn validate(self) -> Result<Params, Error> {
        Params::new(self.p, self.a, self.r)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    B,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Enumerate,
    Series,
}

#[derive(Subcommand)]
enum Command {
    /// Map a family-A partition to its family-B image
    Map(MapArgs),
    /// Map a family-B partition back to its family-A preimage
    Unmap(MapArgs),
    /// Test membership of a partition in family A or B
    Member {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        partition: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exhaustively verify the bijection for every weight up to --max-n
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, alias = "n")]
        max_n: u64,
        /// Largest weight that may be enumerated
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        cap: u64,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Count family members of each weight 0..=max-n
    Count {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, alias = "n")]
        max_n: u64,
        #[arg(long, value_enum, default_value = "enumerate")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        cap: u64,
        #[arg(long, default_value_t = DEFAULT_SERIES_CAP)]
        series_cap: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Generating-function coefficients of one family up to q^max-n
    Series {
        #[arg(long, value_enum, ignore_case = true)]
        side: FamilyArg,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, alias = "n")]
        max_n: u64,
        #[arg(long, default_value_t = DEFAULT_SERIES_CAP)]
        series_cap: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct MapArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Partition as comma-separated `P` or `P^M` tokens
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

enum Outcome {
    Success(String),
    VerificationFailed(String),
}

fn render_partition(pt: &Partition, format: Format) -> String {
    match format {
        Format::Text => format!("{pt}\n"),
        Format::Json => format!("{}\n", serde_json::to_string(pt).expect("partition serializes")),
    }
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(report).expect("report serializes")),
        Format::Text => {
            let ps = &report.params;
            let mut out = format!(
                "params p={} a={} r={} M={} L={}\n",
                ps.p(),
                ps.a(),
                ps.r(),
                ps.block(),
                ps.modulus()
            );
            out.push_str("n,count_a,count_b,roundtrip,weight,membership,collision,missed\n");
            for rec in &report.per_n {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    rec.n,
                    rec.count_a,
                    rec.count_b,
                    rec.roundtrip_failures,
                    rec.weight_failures,
                    rec.membership_failures,
                    rec.collision_failures,
                    rec.missed_images
                ));
            }
            out.push_str(if report.pass { "PASS\n" } else { "FAIL\n" });
            out
        }
    }
}

fn report_outcome(report: &VerificationReport, format: Format) -> Outcome {
    let text = render_report(report, format);
    if report.pass {
        Outcome::Success(text)
    } else {
        Outcome::VerificationFailed(text)
    }
}

fn render_counts<T: std::fmt::Display>(counts: &[T], format: Format) -> String {
    match format {
        Format::Text => count_rows_csv(counts),
        Format::Json => format!("{}\n", count_rows_json(counts)),
    }
}

fn run(command: Command) -> Result<Outcome, Error> {
    match command {
        Command::Map(args) => {
            let ps = args.params.validate()?;
            let lam: Partition = args.partition.parse()?;
            Ok(Outcome::Success(render_partition(&forward(&ps, &lam)?, args.format)))
        }
        Command::Unmap(args) => {
            let ps = args.params.validate()?;
            let mu: Partition = args.partition.parse()?;
            Ok(Outcome::Success(render_partition(&inverse(&ps, &mu)?, args.format)))
        }
        Command::Member {
            family,
            params,
            partition,
            format,
        } => {
            let ps = params.validate()?;
            let pt: Partition = partition.parse()?;
            let family = Family::from(family);
            let member = in_family(&ps, family, &pt);
            Ok(Outcome::Success(match format {
                Format::Text => format!("{member}\n"),
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({ "family": family.to_string(), "member": member })
                ),
            }))
        }
        Command::Verify {
            params,
            max_n,
            cap,
            jobs,
            format,
        } => {
            let ps = params.validate()?;
            let report = with_jobs(jobs, || verify_bijection(&ps, max_n, cap))?;
            Ok(report_outcome(&report, format))
        }
        Command::Count {
            family,
            params,
            max_n,
            method,
            cap,
            series_cap,
            jobs,
            format,
        } => {
            let ps = params.validate()?;
            let family = Family::from(family);
            let text = match method {
                Method::Enumerate => {
                    let counts = with_jobs(jobs, || {
                        count_family_table(&ps, family, max_n, cap, Default::default())
                    })?;
                    render_counts(&counts, format)
                }
                Method::Series => {
                    render_counts(&family_series(&ps, family, max_n, series_cap)?.coeffs, format)
                }
            };
            Ok(Outcome::Success(text))
        }
        Command::Series {
            side,
            params,
            max_n,
            series_cap,
            format,
        } => {
            let ps = params.validate()?;
            let series = family_series(&ps, side.into(), max_n, series_cap)?;
            Ok(Outcome::Success(render_counts(&series.coeffs, format)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(Outcome::Success(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::VerificationFailed(out)) => {
            print!("{out}");
            eprintln!("pbij: verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("pbij: {e}");
            ExitCode::from(2)
        }
    }
}
