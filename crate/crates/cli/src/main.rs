//! Command-line front end: `verify` runs a congruence campaign over a prime
//! range, `identities` runs the exact rational identity suite, and
//! `two-squares` prints the normalized decomposition p = x^2 + y^2.

mod campaign;
mod emit;

use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;

use delannoy::identities::{
    chu_vandermonde_check, delannoy_dp, delannoy_two_forms_check, d_poly, guo_identity_check,
    product_identity_check, XFamily,
};
use delannoy::ntheory;
use delannoy::suite::StatementId;
use num_rational::BigRational;

use campaign::{run_campaign, CampaignConfig};
use emit::OutputFormat;

#[derive(Parser)]
#[command(
    name = "delannoy",
    about = "Verifies congruences for sums of squared Delannoy polynomial values over prime ranges",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run selected statements over every prime in [pmin, pmax]
    Verify(VerifyArgs),
    /// Run the exact rational identity suite
    Identities(IdentitiesArgs),
    /// Print the normalized two-squares decomposition of a prime p = 1 (mod 4)
    TwoSquares(TwoSquaresArgs),
}

fn parse_statement(s: &str) -> Result<StatementId, String> {
    s.parse().map_err(|e| format!("{e}; known tags: {}", tag_list()))
}

fn tag_list() -> String {
    StatementId::ALL.map(|t| t.name()).join(", ")
}

fn parse_rational(s: &str) -> Result<Rational64, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: i64 = num.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
    let den: i64 = den.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
    if den == 0 {
        return Err(format!("zero denominator in `{s}`"));
    }
    Ok(Rational64::new(num, den))
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated statement tags (e.g. MAIN1,MAIN2,CONJ_ZERO_MODP2)
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_statement)]
    statements: Vec<StatementId>,
    /// Lower end of the prime range (inclusive)
    #[arg(long)]
    pmin: u32,
    /// Upper end of the prime range (inclusive), below 2^31
    #[arg(long)]
    pmax: u32,
    /// Rational arguments a/b for DSQUARE_X and SUN_ALTERNATING
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_rational)]
    x: Vec<Rational64>,
    /// Worker threads; output is byte-identical for any value
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Record format
    #[arg(long, value_enum, default_value_t = OutputFormat::Human)]
    format: OutputFormat,
    /// Write records to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Stop dispatching new work after the first failure
    #[arg(long)]
    fail_fast: bool,
}

#[derive(Args)]
struct IdentitiesArgs {
    /// Largest n for the squared-polynomial identity
    #[arg(long, default_value_t = 20)]
    nmax: u64,
    /// Largest j for the four closed product forms
    #[arg(long, default_value_t = 50)]
    jmax: u64,
    /// Largest m for the alternating binomial collapse
    #[arg(long, default_value_t = 60)]
    mmax: u64,
}

#[derive(Args)]
struct TwoSquaresArgs {
    /// The prime to decompose; must be 1 modulo 4
    #[arg(long)]
    p: u32,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    if args.pmin > args.pmax {
        return usage_error("pmin must not exceed pmax");
    }
    if args.pmax >= 1 << 31 {
        return usage_error("pmax must be below 2^31");
    }
    if args.threads == 0 {
        return usage_error("threads must be positive");
    }
    let mut cfg = CampaignConfig {
        statements: args.statements,
        pmin: args.pmin,
        pmax: args.pmax,
        x_args: args.x,
        threads: args.threads,
        fail_fast: args.fail_fast,
    };
    cfg.normalize();
    let result = match &args.out {
        Some(path) => {
            let file = match File::create(path) {
                Ok(f) => f,
                Err(e) => return usage_error(&format!("cannot create {}: {e}", path.display())),
            };
            run_campaign(&cfg, args.format, &mut BufWriter::new(file))
        }
        None => {
            let stdout = io::stdout();
            run_campaign(&cfg, args.format, &mut BufWriter::new(stdout.lock()))
        }
    };
    match result {
        Ok(summary) => {
            eprint!("{}", summary.render());
            if summary.total_failed() > 0 {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => usage_error(&format!("i/o failure: {e}")),
    }
}

fn run_identities(args: IdentitiesArgs) -> ExitCode {
    let mut all_ok = true;
    let mut report = |name: String, ok: bool| {
        println!("{name}: {}", if ok { "ok" } else { "FAILED" });
        all_ok &= ok;
    };

    let guo = (0..=args.nmax).all(guo_identity_check);
    report(format!("squared d_n identity, n <= {}", args.nmax), guo);

    for family in XFamily::ALL {
        let ok = (0..=args.jmax).all(|j| product_identity_check(family, j));
        report(format!("product form for x = {}, j <= {}", family.label(), args.jmax), ok);
    }

    let mut chu = true;
    for m in 0..=args.mmax {
        for j in 0..=m {
            chu &= chu_vandermonde_check(m, j);
        }
    }
    report(format!("alternating binomial collapse, j <= m <= {}", args.mmax), chu);

    let mut grid = true;
    for m in 0..=12u64 {
        for n in 0..=12u64 {
            grid &= delannoy_two_forms_check(m, n);
            grid &= d_poly(n).eval(&BigRational::from_integer(m.into())) == delannoy_dp(m, n).into();
        }
    }
    report("Delannoy closed forms and polynomial on the 12 x 12 grid".to_string(), grid);

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_two_squares(args: TwoSquaresArgs) -> ExitCode {
    if !ntheory::is_prime(args.p) {
        return usage_error(&format!("{} is not prime", args.p));
    }
    match ntheory::two_squares(args.p) {
        Ok(ts) => {
            println!("{} {}", ts.x, ts.y);
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify(args) => run_verify(args),
        Cmd::Identities(args) => run_identities(args),
        Cmd::TwoSquares(args) => run_two_squares(args),
    }
}
