use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use multispin::fixtures::{builtin_momenta, kappa_sweep};
use multispin::suite::momentum_suite;
use multispin::{
    parse_rational, run_all, Error, LightlikeMomentum, One, ProjectorSet, Rational,
    RepresentationSet, Zero,
};
use rayon::prelude::*;

mod report;

use report::Report;

/// Exact verification and polarization states for the 11-component
/// massless spin-0/spin-1 wave equation.
#[derive(Parser, Debug)]
#[command(name = "multispin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the structural and momentum-space identity suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Use only the first N built-in momenta.
        #[arg(long, value_name = "N")]
        sweep: Option<usize>,
    },
    /// Projectors, dyad solutions and oracle ranks at one momentum.
    Solve {
        #[command(flatten)]
        common: Common,
        /// Print only the named matrix.
        #[arg(long, value_name = "NAME")]
        dump: Option<String>,
    },
    /// Field components, E and H for each polarization state.
    States {
        #[command(flatten)]
        common: Common,
    },
    /// Print one named matrix.
    Dump {
        /// Matrix name, e.g. alpha1, eta, J12, gamma, Pi_plus.
        name: Option<String>,
        #[command(flatten)]
        common: Common,
        #[arg(long = "dump", value_name = "NAME")]
        dump_flag: Option<String>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Spatial momentum `k1,k2,k3` as exact rationals.
    #[arg(long, allow_hyphen_values = true, value_name = "K1,K2,K3")]
    k: Option<String>,
    /// Frequency k0 as an exact rational.
    #[arg(long, allow_hyphen_values = true, value_name = "V")]
    k0: Option<String>,
    /// Mass-like parameter of the wave operator.
    #[arg(long, allow_hyphen_values = true, value_name = "V")]
    kappa: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Failure modes that map onto exit codes.
enum Failure {
    Input(String),
    Io(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl Common {
    fn kappa(&self) -> Result<Option<Rational>, Failure> {
        let Some(s) = &self.kappa else {
            return Ok(None);
        };
        let v = parse_rational(s)?;
        if v.is_zero() {
            return Err(Error::ZeroKappa.into());
        }
        Ok(Some(v))
    }

    fn momentum(&self) -> Result<Option<LightlikeMomentum>, Failure> {
        match (&self.k, &self.k0) {
            (None, None) => Ok(None),
            (Some(k), Some(k0)) => Ok(Some(LightlikeMomentum::parse(k, k0)?)),
            _ => Err(Failure::Input("--k and --k0 must be given together".into())),
        }
    }

    fn required_momentum(&self) -> Result<LightlikeMomentum, Failure> {
        self.momentum()?.ok_or_else(|| {
            Failure::Input("a momentum is required: pass --k k1,k2,k3 --k0 v".into())
        })
    }

    fn projector_set(&self, rep: &RepresentationSet) -> Result<ProjectorSet, Failure> {
        let kappa = self.kappa()?.unwrap_or_else(Rational::one);
        let k = self.required_momentum()?;
        Ok(ProjectorSet::compute(rep, &k, &kappa)?)
    }
}

fn emit(report: &Report, common: &Common) -> Result<(), Failure> {
    let body = match common.format {
        Format::Json => {
            serde_json::to_string_pretty(&report.json).expect("report serializes") + "\n"
        }
        Format::Text => report.text.clone(),
    };
    match &common.out {
        Some(path) => std::fs::write(path, body)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Io),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn verify(
    common: &Common,
    sweep: Option<usize>,
    rep: &RepresentationSet,
) -> Result<Report, Failure> {
    let kappa = common.kappa()?;
    let momenta = match common.momentum()? {
        Some(k) => vec![k],
        None => {
            let all = builtin_momenta();
            let n = sweep.unwrap_or(all.len()).min(all.len());
            all.into_iter().take(n).collect()
        }
    };
    let kappas: Vec<Rational> = match kappa {
        Some(k) => vec![k],
        None => kappa_sweep().to_vec(),
    };
    let jobs: Vec<(&LightlikeMomentum, &Rational)> = momenta
        .iter()
        .flat_map(|k| kappas.iter().map(move |kap| (k, kap)))
        .collect();
    let per_momentum = jobs
        .par_iter()
        .map(|(k, kap)| momentum_suite(rep, k, kap))
        .collect::<Result<Vec<_>, Error>>()?;
    let names: Vec<String> = kappas.iter().map(|k| k.to_string()).collect();
    Ok(report::verify(run_all(rep), per_momentum, &momenta, &names))
}

fn dump(name: &str, common: &Common, rep: &RepresentationSet) -> Result<Report, Failure> {
    if let Some(m) = rep.by_name(name) {
        return Ok(report::dump(name, m, None));
    }
    if !multispin::momentum::PROJECTOR_NAMES.contains(&name) {
        let mut known = RepresentationSet::names();
        known.extend(
            multispin::momentum::PROJECTOR_NAMES
                .iter()
                .map(|s| s.to_string()),
        );
        return Err(Failure::Input(format!(
            "unknown matrix `{name}`; known names: {}",
            known.join(", ")
        )));
    }
    let set = common.projector_set(rep)?;
    let m = set.by_name(name).expect("checked above");
    Ok(report::dump(name, &m, Some(&set)))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let rep = RepresentationSet::standard();
    let (report, common) = match &cli.command {
        Command::Verify { common, sweep } => (verify(common, *sweep, &rep)?, common),
        Command::Solve {
            common,
            dump: Some(name),
        } => (dump(name, common, &rep)?, common),
        Command::Solve { common, dump: None } => {
            let set = common.projector_set(&rep)?;
            let checks = momentum_suite(&rep, &set.k, &set.kappa)?;
            (report::solve(&rep, &set, checks), common)
        }
        Command::States { common } => (report::states(&common.projector_set(&rep)?), common),
        Command::Dump {
            name,
            common,
            dump_flag,
        } => {
            let name = name
                .as_ref()
                .or(dump_flag.as_ref())
                .ok_or_else(|| Failure::Input("dump needs a matrix name".into()))?;
            (dump(name, common, &rep)?, common)
        }
    };
    emit(&report, common)?;
    Ok(report.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
