mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fano_core::albanese::{self, CandidateName};
use fano_core::fermat::CurveLabel;
use fano_core::fibrations::{self, LinearForm};
use fano_core::verify::{self, DEFAULT_SEED};
use fano_core::{group, Error};

#[derive(Parser)]
#[command(
    name = "fano",
    version,
    about = "Exact verification of lattice computations on Fano surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and print a report.
    Verify(VerifyArgs),
    /// Inspect the fibration of a linear form on the Fermat Fano surface.
    Form(FormArgs),
    /// Print the form omega on a candidate period lattice.
    Lattice(LatticeArgs),
    /// Facts about the group G(3,3,5).
    Group(GroupArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// One of arith, group, ns-fermat, period-lattice, ns-albanese, fibrations, twelve-family, all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Also write the report as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Seed for the sampled checks.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
struct FormArgs {
    /// Linear form such as "(1-w)*x1" or "x4 - w^2*x5".
    #[arg(long)]
    eval: String,
    /// Second form for the pair degree.
    #[arg(long)]
    pair: Option<String>,
}

#[derive(Args)]
struct LatticeArgs {
    /// One of L0, L1, Lw, Lw2, Lw-1, L.
    #[arg(long)]
    candidate: String,
}

#[derive(Args)]
struct GroupArgs {
    /// Enumerate the group and print its order.
    #[arg(long)]
    order: bool,
    /// Print the orbit of the line C(e_1 - e_2).
    #[arg(long)]
    orbit: bool,
}

enum Failure {
    /// Bad input: exit 2.
    Usage(String),
    /// Computation or claim failure: exit 1.
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnknownSuite(_) | Error::UnknownCandidate(_) | Error::UnknownCmCase(_) => {
                Failure::Usage(e.to_string())
            }
            Error::ZeroForm | Error::NotInDualModule => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

fn field(name: &str, value: impl std::fmt::Display) {
    println!("{name:<13}{value}");
}

fn verify_cmd(args: &VerifyArgs) -> Result<(), Failure> {
    let run = verify::run_named_suite(&args.suite, args.seed)?;
    print!("{}", report::render_table(&run));
    if let Some(path) = &args.json {
        report::write_json(&run, path).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    match report::exit_code(&run) {
        0 => Ok(()),
        _ => Err(Failure::Failed("some claims failed".into())),
    }
}

fn form_cmd(args: &FormArgs) -> Result<(), Failure> {
    let l: LinearForm = args.eval.parse()?;
    let member = fibrations::lambda_star_membership(&l);
    field("form", &l);
    field(
        "coefficients",
        l.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
    );
    field("member", member);
    if !member {
        return Err(Error::NotInDualModule.into());
    }
    let fi = fibrations::fiber_intersections(&l)?;
    field("F.C", fi.c);
    let nonzero: Vec<String> = CurveLabel::all()
        .into_iter()
        .zip(fi.curves)
        .filter(|(_, v)| *v != 0)
        .map(|(lab, v)| format!("{lab}:{v}"))
        .collect();
    field("F.E", nonzero.join(" "));
    let contracted: Vec<String> = CurveLabel::all()
        .into_iter()
        .zip(fi.curves)
        .filter(|(_, v)| *v == 0)
        .map(|(lab, _)| lab.to_string())
        .collect();
    field("contracted", contracted.join(" "));
    field("genus", fibrations::fiber_genus(&l)?);
    field("class", fibrations::fiber_class_coordinates(&l)?);
    if let Some(p) = &args.pair {
        let m: LinearForm = p.parse()?;
        field("pair degree", fibrations::fiber_pair_degree(&l, &m)?);
    }
    Ok(())
}

fn lattice_cmd(args: &LatticeArgs) -> Result<(), Failure> {
    let name: CandidateName = args.candidate.parse()?;
    let lat = albanese::candidate(name)?;
    let (omega, integral) = albanese::omega_on_lattice(&lat);
    field("candidate", name);
    println!("omega on the HNF basis:");
    print!("{}", omega.coeffs());
    field("det", omega.det()?);
    field("pfaffian", omega.pfaffian()?);
    field("integral", integral);
    Ok(())
}

fn group_cmd(args: &GroupArgs) -> Result<(), Failure> {
    let all = !args.order && !args.orbit;
    if args.order || all {
        let g = group::enumerate_group();
        let valid = g.iter().filter(|m| m.is_valid()).count();
        field("order", g.len());
        field("monomial", format!("{valid}/{}", g.len()));
    }
    if args.orbit || all {
        let start = CurveLabel::new(1, 2, 0)?;
        let orbit = group::line_orbit(&start.direction())?;
        let mut labels = orbit
            .iter()
            .map(CurveLabel::from_direction)
            .collect::<fano_core::Result<Vec<_>>>()?;
        labels.sort_by_key(CurveLabel::index);
        let labels: Vec<String> = labels.iter().map(ToString::to_string).collect();
        field("orbit", format!("{} lines", orbit.len()));
        field("lines", labels.join(" "));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(a) => verify_cmd(a),
        Command::Form(a) => form_cmd(a),
        Command::Lattice(a) => lattice_cmd(a),
        Command::Group(a) => group_cmd(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed(msg)) => {
            eprintln!("fano: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("fano: {msg}");
            ExitCode::from(2)
        }
    }
}
