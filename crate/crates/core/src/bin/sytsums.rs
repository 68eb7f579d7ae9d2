//! Command-line front end: exact SYT counts, hook sums, sequences, hump
//! statistics, character decompositions, and identity verification.
//!
//! Exit status: 0 on success or pass, 1 on verification failure, 2 on
//! usage or domain errors. Set HOOKSUM_ENUM_CAP to raise or lower the
//! brute-force enumeration caps.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use sytsums::characters::{self, CharacterSum};
use sytsums::harness::{self, Profile};
use sytsums::hook_sums::{self, S21Variant, SumMethod};
use sytsums::motzkin::{self, AMethod};
use sytsums::partition::{HookBound, Partition};
use sytsums::paths::{self, HumpMethod, PathKind};
use sytsums::tableaux;
use sytsums::{Error, VerificationReport};

#[derive(Parser)]
#[command(name = "sytsums", version, about = "Exact SYT hook sums, Motzkin-sums characters, and path hump statistics")]
struct Cli {
    /// Emit machine-readable JSON records instead of plain text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// SYT counts for a shape
    Syt {
        #[command(subcommand)]
        which: SytCommand,
    },
    /// The hook sum S(k,l;n)
    Hooksum {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
        method: MethodArg,
    },
    /// The star sub-sum S*(2,2;n) over the rectangular family
    Starsum {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
        method: MethodArg,
    },
    /// Integer sequences over an index range
    Seq {
        #[arg(value_enum)]
        sequence: SeqArg,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Total humps over all paths of one kind and length
    Humps {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = HumpMethodArg::Enumerate)]
        method: HumpMethodArg,
    },
    /// Character sums and the coefficient-level p3 check
    Character {
        #[command(subcommand)]
        which: CharacterCommand,
    },
    /// Verify registered identities over index ranges
    Verify {
        /// Identity name, or "all"
        #[arg(long)]
        identity: String,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
    },
    /// S(k,l;n) over a range of n, as a table
    Table {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        l: u64,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Subcommand)]
enum SytCommand {
    /// Hook-length formula count
    Count(ShapeArg),
    /// Brute-force backtracking count (subject to the enumeration cap)
    Oracle(ShapeArg),
}

#[derive(Args)]
struct ShapeArg {
    /// Partition, e.g. "4,2^3,1"
    #[arg(long)]
    shape: String,
}

#[derive(Subcommand)]
enum CharacterCommand {
    /// The Motzkin-sums character psi(n)
    Psi {
        #[arg(long)]
        n: u64,
    },
    /// omega(n), the sum of psi(j) outer one-row characters
    Omega {
        #[arg(long)]
        n: u64,
    },
    /// Coefficient-level check of chi(2,0;n) + omega(n) = 2 chi(3,1;n)
    CheckP3 {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqArg {
    A,
    Motzkin,
    Catalan,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Dyck,
    Motzkin,
}

#[derive(Clone, Copy, ValueEnum)]
enum HumpMethodArg {
    Enumerate,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

/// One scalar result, rendered as an exact decimal string.
#[derive(Serialize, Deserialize)]
struct OutputRecord {
    query: String,
    parameters: BTreeMap<String, String>,
    value: String,
    method: String,
}

impl OutputRecord {
    fn new(query: &str, parameters: &[(&str, String)], value: &BigUint, method: &str) -> Self {
        OutputRecord {
            query: query.into(),
            parameters: parameters.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            value: value.to_string(),
            method: method.into(),
        }
    }
}

fn enum_cap(default: u64) -> u64 {
    match std::env::var("HOOKSUM_ENUM_CAP") {
        Ok(v) => v.parse().unwrap_or(default),
        Err(_) => default,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(json: bool, record: OutputRecord) {
    if json {
        println!("{}", serde_json::to_string(&record).expect("record serializes"));
    } else {
        println!("{}", record.value);
    }
}

fn run(cli: &Cli) -> sytsums::Result<ExitCode> {
    match &cli.command {
        Command::Syt { which } => {
            let (shape_str, method) = match which {
                SytCommand::Count(a) => (&a.shape, "hook-formula"),
                SytCommand::Oracle(a) => (&a.shape, "enumerate"),
            };
            let shape: Partition = shape_str.parse()?;
            let value = match which {
                SytCommand::Count(_) => tableaux::syt_count(&shape),
                SytCommand::Oracle(_) => tableaux::syt_enumerate_count_capped(
                    &shape,
                    enum_cap(tableaux::DEFAULT_ENUM_CAP),
                )?,
            };
            let params = [("shape", shape.to_string())];
            emit(cli.json, OutputRecord::new("syt", &params, &value, method));
            Ok(ExitCode::SUCCESS)
        }
        Command::Hooksum { k, l, n, method } => {
            let value = match method {
                MethodArg::Direct => hook_sums::hook_sum_direct(HookBound::new(*k, *l), *n),
                MethodArg::Closed => closed_hook_sum(*k, *l, *n)?,
            };
            let params = [("k", k.to_string()), ("l", l.to_string()), ("n", n.to_string())];
            emit(cli.json, OutputRecord::new("hooksum", &params, &value, method_name(*method)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Starsum { n, method } => {
            let value = hook_sums::star_sum(
                *n,
                match method {
                    MethodArg::Direct => SumMethod::Direct,
                    MethodArg::Closed => SumMethod::Closed,
                },
            )?;
            let params = [("n", n.to_string())];
            emit(cli.json, OutputRecord::new("starsum", &params, &value, method_name(*method)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Seq { sequence, from, to } => {
            if from > to {
                return Err(Error::InvalidRange { lo: *from, hi: *to });
            }
            let (name, f): (&str, fn(u64) -> BigUint) = match sequence {
                SeqArg::A => ("a", |n| motzkin::motzkin_sum_a(n, AMethod::Recurrence)),
                SeqArg::Motzkin => ("motzkin", motzkin::motzkin_number),
                SeqArg::Catalan => ("catalan", motzkin::catalan),
            };
            if cli.json {
                let records: Vec<OutputRecord> = (*from..=*to)
                    .map(|n| {
                        OutputRecord::new(
                            &format!("seq {name}"),
                            &[("n", n.to_string())],
                            &f(n),
                            "recurrence",
                        )
                    })
                    .collect();
                println!("{}", serde_json::to_string(&records).expect("records serialize"));
            } else {
                let values: Vec<String> = (*from..=*to).map(|n| f(n).to_string()).collect();
                println!("{}", values.join(","));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Humps { kind, n, method } => {
            let kind_val = match kind {
                KindArg::Dyck => PathKind::Dyck,
                KindArg::Motzkin => PathKind::Motzkin,
            };
            let cap_default = match kind_val {
                PathKind::Dyck => paths::DEFAULT_DYCK_CAP,
                PathKind::Motzkin => paths::DEFAULT_MOTZKIN_CAP,
            };
            let (method_val, method_str) = match method {
                HumpMethodArg::Enumerate => (HumpMethod::Enumerate, "enumerate"),
                HumpMethodArg::Closed => (HumpMethod::Closed, "closed"),
            };
            let value = paths::total_humps_capped(kind_val, *n, method_val, enum_cap(cap_default))?;
            let kind_str = match kind {
                KindArg::Dyck => "dyck",
                KindArg::Motzkin => "motzkin",
            };
            let params = [("kind", kind_str.to_string()), ("n", n.to_string())];
            emit(cli.json, OutputRecord::new("humps", &params, &value, method_str));
            Ok(ExitCode::SUCCESS)
        }
        Command::Character { which } => match which {
            CharacterCommand::Psi { n } => {
                print_character(cli.json, &characters::psi(*n));
                Ok(ExitCode::SUCCESS)
            }
            CharacterCommand::Omega { n } => {
                print_character(cli.json, &characters::omega(*n));
                Ok(ExitCode::SUCCESS)
            }
            CharacterCommand::CheckP3 { n } => {
                let report = characters::verify_p3(*n);
                print_report(cli.json, &report);
                Ok(exit_for(&[report]))
            }
        },
        Command::Verify { identity, from, to, profile } => {
            let profile_val = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let reports = if identity == "all" {
                harness::verify_all(profile_val)
            } else {
                let (lo, hi) = match (from, to) {
                    (Some(lo), Some(hi)) => (*lo, *hi),
                    _ => harness::default_range(identity, profile_val)?,
                };
                vec![harness::verify(identity, lo, hi)?]
            };
            for report in &reports {
                print_report(cli.json, report);
            }
            Ok(exit_for(&reports))
        }
        Command::Table { k, l, from, to, format } => {
            if from > to {
                return Err(Error::InvalidRange { lo: *from, hi: *to });
            }
            let h = HookBound::new(*k, *l);
            let rows: Vec<(u64, BigUint)> =
                (*from..=*to).map(|n| (n, hook_sums::hook_sum_direct(h, n))).collect();
            match format {
                FormatArg::Csv => {
                    println!("index,value,method");
                    for (n, v) in &rows {
                        println!("{n},{v},direct");
                    }
                }
                FormatArg::Text => {
                    println!("{:>6}  {:<40}  method", "index", "value");
                    for (n, v) in &rows {
                        println!("{n:>6}  {:<40}  direct", v.to_string());
                    }
                }
                FormatArg::Json => {
                    let records: Vec<OutputRecord> = rows
                        .iter()
                        .map(|(n, v)| {
                            OutputRecord::new(
                                "table",
                                &[
                                    ("k", k.to_string()),
                                    ("l", l.to_string()),
                                    ("n", n.to_string()),
                                ],
                                v,
                                "direct",
                            )
                        })
                        .collect();
                    println!("{}", serde_json::to_string(&records).expect("records serialize"));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn method_name(m: MethodArg) -> &'static str {
    match m {
        MethodArg::Direct => "direct",
        MethodArg::Closed => "closed",
    }
}

/// Dispatches the closed form for S(k,l;n), normalizing by conjugation
/// symmetry S(k,l;n) = S(l,k;n).
fn closed_hook_sum(k: u64, l: u64, n: u64) -> sytsums::Result<BigUint> {
    let (k, l) = if k >= l { (k, l) } else { (l, k) };
    match (k, l) {
        (1, 1) => hook_sums::hook_sum_closed_11(n),
        (2, 1) => hook_sums::hook_sum_closed_21(n, S21Variant::Rewritten),
        (3, 1) => hook_sums::hook_sum_closed_31(n),
        (k, 0) if (2..=5).contains(&k) => hook_sums::strip_sum_closed(k, n),
        _ => Err(Error::OutOfDomain(format!("no closed form is known for S({k},{l};n)"))),
    }
}

fn print_character(json: bool, cs: &CharacterSum) {
    #[derive(Serialize)]
    struct Term {
        partition: String,
        multiplicity: u64,
    }
    if json {
        let terms: Vec<Term> = cs
            .iter()
            .map(|(p, m)| Term { partition: p.to_string(), multiplicity: m })
            .collect();
        println!("{}", serde_json::to_string(&terms).expect("terms serialize"));
    } else {
        for (p, m) in cs.iter() {
            println!("{p} x{m}");
        }
    }
}

fn print_report(json: bool, report: &VerificationReport) {
    if json {
        println!("{}", serde_json::to_string(report).expect("report serializes"));
    } else {
        println!("{report}");
    }
}

fn exit_for(reports: &[VerificationReport]) -> ExitCode {
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
