use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invol_cli::commands::family_list_text;
use invol_cli::{
    cmd_construct, cmd_family, cmd_field, cmd_search, cmd_verify, family_list, CliError, ConstructRequest, ExitStatus,
    OracleMode, OracleOptions, RunReport, SearchOptions, SigmaSpec,
};

#[derive(Parser)]
#[command(name = "invol", version, about = "Verify, construct and search involutions x^r h(x^s) over finite fields")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// When to run the exhaustive oracle.
    #[arg(long, global = true, value_enum, default_value_t = OracleArg::Auto)]
    oracle: OracleArg,
    /// Largest field the oracle evaluates exhaustively.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    cap: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleArg {
    Auto,
    Force,
    Skip,
}

#[derive(Subcommand)]
enum Command {
    /// Show the field's modulus, primitive element and subgroups.
    Field {
        #[arg(long)]
        field: String,
    },
    /// Check a polynomial with the criterion and the oracle.
    Verify {
        #[arg(long)]
        field: String,
        #[arg(long)]
        poly: String,
        /// Use this s instead of the maximal one.
        #[arg(long)]
        s: Option<u64>,
    },
    /// Build an involution from one of the constructions.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Generate a member of an explicit family, or `family list`.
    Family {
        /// Family id, or `list`.
        id: String,
        #[arg(long)]
        field: Option<String>,
        /// Parameters as k=v,k=v; list values are separated by ';'.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Sweep s, r and a grid of h over a small field.
    Search {
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to one divisor of q-1.
        #[arg(long)]
        s: Option<u64>,
        /// Largest field accepted.
        #[arg(long, default_value_t = 64)]
        max_q: u64,
        /// Random h per (s, r) cell when the grid is too large.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Args)]
struct FieldArg {
    #[arg(long)]
    field: String,
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Interpolation from an involution sigma on mu_d.
    General {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        s: u64,
        /// inverse, identity or perm:l0,l1,...
        #[arg(long, default_value = "inverse")]
        sigma: String,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<u64>>,
    },
    /// Two cosets, odd q.
    D2 {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Three cosets with closed-form coefficients.
    D3 {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        r: u64,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        n: Vec<u64>,
    },
    /// r = 1 over F_(2^(2k)).
    CorR1 {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        n1: u64,
    },
    /// r = (q-4)/3 over F_(2^(2k)).
    CorRq43 {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        n0: u64,
        #[arg(long)]
        n1: u64,
    },
}

fn emit(report: &RunReport, json: bool) -> ExitCode {
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    ExitCode::from(report.exit_code() as u8)
}

fn fail(err: CliError, json: bool) -> ExitCode {
    if json {
        let body = serde_json::json!({ "schema": 1, "error": err.message, "status": err.status });
        println!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
    } else {
        eprintln!("error: {err}");
    }
    ExitCode::from(err.status.code() as u8)
}

fn construct_request(kind: ConstructKind) -> Result<(String, ConstructRequest), CliError> {
    Ok(match kind {
        ConstructKind::General { field, s, sigma, r, n } => {
            (field.field, ConstructRequest::General { s, sigma: sigma.parse::<SigmaSpec>()?, r, n })
        }
        ConstructKind::D2 { field, r, a, b } => (field.field, ConstructRequest::D2 { r, a, b }),
        ConstructKind::D3 { field, r, n } => {
            let n: [u64; 3] = n.try_into().map_err(|_| CliError::input("d3 needs --n n0,n1,n2"))?;
            (field.field, ConstructRequest::D3 { r, n })
        }
        ConstructKind::CorR1 { field, n1 } => (field.field, ConstructRequest::CorR1 { n1 }),
        ConstructKind::CorRq43 { field, n0, n1 } => (field.field, ConstructRequest::CorRq43 { n0, n1 }),
    })
}

fn run(cli: Cli) -> ExitCode {
    let json = cli.json;
    let oracle = OracleOptions {
        mode: match cli.oracle {
            OracleArg::Auto => OracleMode::Auto,
            OracleArg::Force => OracleMode::Force,
            OracleArg::Skip => OracleMode::Skip,
        },
        cap: cli.cap,
    };
    match cli.command {
        Command::Field { field } => match cmd_field(&field) {
            Ok(r) => {
                if json {
                    println!("{}", serde_json::to_string_pretty(&r).expect("serializes"));
                } else {
                    print!("{}", r.to_text());
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail(e, json),
        },
        Command::Verify { field, poly, s } => match cmd_verify(&field, &poly, s, oracle) {
            Ok(r) => emit(&r, json),
            Err(e) => fail(e, json),
        },
        Command::Construct { kind } => match construct_request(kind).and_then(|(f, req)| cmd_construct(&f, &req, oracle)) {
            Ok(r) => emit(&r, json),
            Err(e) => fail(e, json),
        },
        Command::Family { id, field, params } => {
            if id == "list" {
                if json {
                    let body = serde_json::json!({ "schema": 1, "families": family_list() });
                    println!("{}", serde_json::to_string_pretty(&body).expect("serializes"));
                } else {
                    print!("{}", family_list_text());
                }
                return ExitCode::SUCCESS;
            }
            let Some(field) = field else {
                return fail(CliError::input("family needs --field"), json);
            };
            match cmd_family(&field, &id, &params, oracle) {
                Ok(r) => emit(&r, json),
                Err(e) => fail(e, json),
            }
        }
        Command::Search { field, seed, s, max_q, samples } => {
            let opts = SearchOptions { seed, s, max_q, samples, ..SearchOptions::default() };
            match cmd_search(&field, &opts) {
                Ok(res) => {
                    if json {
                        print!("{}", res.to_json_lines());
                    } else {
                        print!("{}", res.to_text());
                    }
                    ExitCode::from(res.status().code() as u8)
                }
                Err(e) => fail(e, json),
            }
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { ExitStatus::Input.code() } else { 0 };
            let _ = e.print();
            ExitCode::from(code as u8)
        }
    }
}
