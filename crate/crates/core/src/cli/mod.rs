//! Command-line front end behind the `pondkit` binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.
//! Text output prints numbers with 12 significant digits; `--json` and
//! `--csv` switch formats.

pub mod report;
pub mod scenario;
pub mod units;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::minkowski::{norm3, FourVector, LorentzBoost, ThreeVector};
use crate::planewave::{
    from_laser_params, zf_photon_density, Envelope, LaserParams, PhysicalConstants, PlaneWaveField, Polarization,
};
use crate::pondshell::{multipole_residual, pole_momentum, DressedMomentum, ShellReport};
use crate::relmass::covariance_report;
use crate::trajectory::{convergence_estimate, cycle_averaged_four_momentum, exact_momentum, integrate};

use report::{trajectory_csv, unit, Column, RunReport, Table, Value};
use scenario::{Output, Scenario};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "pondkit", version, about = "Ponderomotive kinematics of an electron in a plane-wave field")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// U_p, z_f by two routes, a0 and photon density for laser parameters.
    Updata(UpdataArgs),
    /// Dressed mass shell of an electron, optionally in a boosted frame.
    Shell(ShellArgs),
    /// Integrate an electron through the field described by a scenario file.
    Trajectory(TrajectoryArgs),
    /// sqrt(p.p) and m gamma of one particle seen from several frames.
    Relmass(RelmassArgs),
    /// Run the invariant suite of every module.
    Verify(VerifyArgs),
}

fn intensity_arg(s: &str) -> std::result::Result<f64, String> {
    units::parse_intensity(s).map_err(|e| e.to_string())
}

fn wavelength_arg(s: &str) -> std::result::Result<f64, String> {
    units::parse_wavelength(s).map_err(|e| e.to_string())
}

fn triplet_arg(s: &str) -> std::result::Result<ThreeVector, String> {
    units::parse_triplet(s, "vector").map_err(|e| e.to_string())
}

fn pol_arg(s: &str) -> std::result::Result<Polarization, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct UpdataArgs {
    /// Peak intensity in W/cm^2; SI prefixes allowed (`100T`).
    #[arg(long, value_parser = intensity_arg)]
    pub intensity: f64,
    /// Wavelength with a unit: nm, um or m.
    #[arg(long, value_parser = wavelength_arg)]
    pub wavelength: f64,
    #[arg(long, value_parser = pol_arg, default_value = "linear")]
    pub pol: Polarization,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("field").required(true).args(["a0", "intensity"])))]
pub struct ShellArgs {
    /// Dimensionless amplitude, natural-unit form of the field.
    #[arg(long)]
    pub a0: Option<f64>,
    /// Angular frequency in units of m_e c^2 / hbar, with --a0.
    #[arg(long, requires = "a0", default_value_t = 1.0)]
    pub omega: f64,
    /// Peak intensity in W/cm^2, laboratory form of the field
    #[arg(long, value_parser = intensity_arg, requires = "wavelength")]
    pub intensity: Option<f64>,
    /// Wavelength with a unit, with --intensity
    #[arg(long, value_parser = wavelength_arg, requires = "intensity")]
    pub wavelength: Option<f64>,
    #[arg(long, value_parser = pol_arg, default_value = "linear")]
    pub pol: Polarization,
    /// Propagation direction of the wave.
    #[arg(long, value_parser = triplet_arg, allow_hyphen_values = true, default_value = "0,0,1")]
    pub direction: ThreeVector,
    /// Spatial momentum px,py,pz of the free electron in m_e c (default: rest).
    #[arg(long, value_parser = triplet_arg, allow_hyphen_values = true, default_value = "0,0,0")]
    pub momentum: ThreeVector,
    /// Re-evaluate in the frame reached by this boost, vx,vy,vz in c.
    #[arg(long, value_parser = triplet_arg, allow_hyphen_values = true)]
    pub boost: Option<ThreeVector>,
    /// Evaluate the n-th pole: the on-pole momentum with the given spatial
    /// momentum and its residual.
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TrajectoryArgs {
    /// Scenario file (flat `key = value` format).
    pub scenario: PathBuf,
    /// Print the trajectory as CSV instead of the summary.
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
    /// Write the trajectory CSV to this path; the summary still goes to
    /// standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RelmassArgs {
    /// Particle 3-velocity in c.
    #[arg(long, value_parser = triplet_arg, allow_hyphen_values = true, default_value = "0.6,0,0")]
    pub velocity: ThreeVector,
    /// Rest mass in m_e.
    #[arg(long, default_value_t = 1.0)]
    pub mass: f64,
    /// Extra frame, vx,vy,vz in c; may be repeated.
    #[arg(long, value_parser = triplet_arg, allow_hyphen_values = true)]
    pub boost: Vec<ThreeVector>,
    /// Number of random frames (|v| < 0.99) added after the explicit ones.
    #[arg(long, default_value_t = 4)]
    pub frames: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
                _ => {
                    let text = e.render().to_string();
                    let _ = writeln!(err, "pondkit: {}", text.lines().next().unwrap_or("usage error").trim_start_matches("error: "));
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "pondkit: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    let (text, code) = match command {
        Command::Updata(a) => {
            let r = cmd_updata(a)?;
            (render(&r, a.json), EXIT_OK)
        }
        Command::Shell(a) => {
            let r = cmd_shell(a)?;
            (render(&r, a.json), EXIT_OK)
        }
        Command::Trajectory(a) => (cmd_trajectory(a)?, EXIT_OK),
        Command::Relmass(a) => {
            let r = cmd_relmass(a)?;
            (render(&r, a.json), EXIT_OK)
        }
        Command::Verify(a) => {
            let r = verify::run_suite(a.seed);
            (render(&r, a.json), verify_exit_code(&r))
        }
    };
    out.write_all(text.as_bytes())?;
    Ok(code)
}

/// 0 when every invariant holds, 1 otherwise.
pub fn verify_exit_code(r: &RunReport) -> i32 {
    if r.all_checks_pass() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn render(r: &RunReport, json: bool) -> String {
    if json {
        r.to_json()
    } else {
        r.to_text()
    }
}

/// `pondkit updata`: ponderomotive energy and coupling constant for laser
/// parameters.
pub fn cmd_updata(a: &UpdataArgs) -> Result<RunReport> {
    let k = PhysicalConstants::codata2018();
    let params = LaserParams::new(a.intensity, a.wavelength, a.pol)?;
    let field = from_laser_params(&params, &k)?;
    let up = field.ponderomotive_potential()?;
    let mut r = RunReport::new("updata");
    r.input("intensity", Value::Number(a.intensity), unit::INTENSITY);
    r.input("wavelength", Value::Number(a.wavelength), unit::LENGTH);
    r.input("polarization", Value::Text(a.pol.to_string()), unit::DIMENSIONLESS);
    r.output("U_p", k.natural_to_ev(up), unit::EV);
    r.output("U_p", up, unit::ENERGY);
    r.output("z_f (2 U_p / m c^2)", field.zf()?, unit::DIMENSIONLESS);
    r.output("z_f (alpha rho 2 lambda lambdabar_C^2)", zf_photon_density(&params, &k)?, unit::DIMENSIONLESS);
    r.output("a0", field.a0(), unit::DIMENSIONLESS);
    r.output("photon density rho", params.photon_density(&k), unit::DENSITY);
    r.output("E_min", k.natural_to_ev(1.0 + up), unit::EV);
    Ok(r)
}

fn shell_field(a: &ShellArgs) -> Result<PlaneWaveField> {
    match (a.a0, a.intensity, a.wavelength) {
        (Some(a0), None, None) => PlaneWaveField::new(a.omega, a.direction, a.pol, a0, Envelope::Monochromatic),
        (None, Some(i), Some(w)) => {
            let f = from_laser_params(&LaserParams::new(i, w, a.pol)?, &PhysicalConstants::codata2018())?;
            PlaneWaveField::new(f.omega(), a.direction, a.pol, f.a0(), Envelope::Monochromatic)
        }
        _ => Err(Error::Usage("give the field either as --a0 or as --intensity with --wavelength".into())),
    }
}

fn on_shell(p3: ThreeVector) -> FourVector {
    FourVector::from_parts((1.0 + p3[0] * p3[0] + p3[1] * p3[1] + p3[2] * p3[2]).sqrt(), p3)
}

/// `pondkit shell`: dressed invariant, minimum energy and optional pole and
/// boosted-frame evaluations.
pub fn cmd_shell(a: &ShellArgs) -> Result<RunReport> {
    let field = shell_field(a)?;
    let p = on_shell(a.momentum);
    let d = DressedMomentum::new(p, &field)?;
    let zf = field.zf()?;
    let shell = ShellReport::from_dressed(&d, zf, 1.0);
    let mut r = RunReport::new("shell");
    r.input("a0", Value::Number(field.a0()), unit::DIMENSIONLESS);
    r.input("omega", Value::Number(field.omega()), unit::ENERGY);
    r.input("polarization", Value::Text(field.polarization().to_string()), unit::DIMENSIONLESS);
    r.input("direction", Value::Vector(field.direction().to_vec()), unit::DIMENSIONLESS);
    r.input("momentum", Value::Vector(a.momentum.to_vec()), unit::MOMENTUM);
    r.output("U_p", field.ponderomotive_potential()?, unit::ENERGY);
    r.output("z_f", zf, unit::DIMENSIONLESS);
    r.output("E_min", shell.e_min, unit::ENERGY);
    r.output_vector("p", &d.free_p, unit::MOMENTUM);
    r.output_vector("U", &d.pond_u, unit::MOMENTUM);
    r.output_vector("p + U", &d.total(), unit::MOMENTUM);
    r.output("(p+U).(p+U)", shell.dressed_invariant, unit::MOMENTUM_SQ);
    r.output("m^2 (1 + z_f)", shell.expected, unit::MOMENTUM_SQ);
    r.output("relative residual", shell.relative_residual(), unit::DIMENSIONLESS);
    let boost = a.boost.map(LorentzBoost::new).transpose()?;
    if let Some(b) = &boost {
        r.input("boost", Value::Vector(b.velocity().to_vec()), unit::VELOCITY);
        let moved = d.boosted(b);
        r.output_vector("boosted p", &moved.free_p, unit::MOMENTUM);
        r.output_vector("boosted U", &moved.pond_u, unit::MOMENTUM);
        r.output("boosted (p+U).(p+U)", moved.invariant(), unit::MOMENTUM_SQ);
        r.output(
            "boosted invariant change",
            (moved.invariant() - shell.dressed_invariant).abs() / shell.expected,
            unit::DIMENSIONLESS,
        );
    }
    if let Some(n) = a.n {
        r.input("n", Value::Number(n as f64), unit::COUNT);
        let q = pole_momentum(n, a.momentum, &field, 1.0)?;
        r.output_vector("pole momentum", &q, unit::MOMENTUM);
        r.output("pole residual", multipole_residual(&q, n, &field, 1.0)?, unit::MOMENTUM_SQ);
        r.output("free-momentum residual", multipole_residual(&p, n, &field, 1.0)?, unit::MOMENTUM_SQ);
        if let Some(b) = &boost {
            let moved = field.boosted(b)?;
            r.output("boosted pole residual", multipole_residual(&b.apply(&q), n, &moved, 1.0)?, unit::MOMENTUM_SQ);
        }
    }
    Ok(r)
}

/// Summary report for a scenario and, separately, the trajectory itself.
pub fn trajectory_report(s: &Scenario) -> Result<(RunReport, crate::trajectory::Trajectory)> {
    let k = PhysicalConstants::codata2018();
    let field = s.build_field(&k)?;
    let p0 = s.initial_momentum();
    let range = s.phase_range();
    let traj = integrate(&field, &p0, range, s.step)?;
    let mut r = RunReport::new("trajectory");
    r.input("a0", Value::Number(field.a0()), unit::DIMENSIONLESS);
    r.input("omega", Value::Number(field.omega()), unit::ENERGY);
    r.input("polarization", Value::Text(field.polarization().to_string()), unit::DIMENSIONLESS);
    r.input("direction", Value::Vector(field.direction().to_vec()), unit::DIMENSIONLESS);
    r.input("envelope", Value::Text(serde_json::to_string(&field.envelope()).expect("serializable")), unit::DIMENSIONLESS);
    r.input("phase range", Value::Vector(vec![range.0, range.1]), unit::PHASE);
    r.input("step", Value::Number(traj.step), unit::PHASE);
    r.output_vector("initial momentum", &p0, unit::MOMENTUM);
    for o in s.outputs() {
        match o {
            Output::Summary => {
                let exit = traj.last().momentum;
                r.output("samples", traj.len() as f64, unit::COUNT);
                r.output_vector("exit momentum", &exit, unit::MOMENTUM);
                r.output_vector("exact exit momentum", &exact_momentum(&field, &p0, range.1)?, unit::MOMENTUM);
                r.output("|exit - p0| / |p0|", exit.max_abs_diff(&p0) / p0.euclidean_norm(), unit::DIMENSIONLESS);
                r.output("max |p.p - m^2|", traj.max_shell_violation(), unit::MOMENTUM_SQ);
                r.output("max k.p drift", traj.max_light_front_drift(), unit::DIMENSIONLESS);
            }
            Output::Average => {
                let avg = cycle_averaged_four_momentum(&traj, s.cycles)?;
                let expected = DressedMomentum::new(p0, &field)?.total();
                r.output("averaged cycles", s.cycles as f64, unit::COUNT);
                r.output_vector("cycle-averaged momentum", &avg, unit::MOMENTUM);
                r.output_vector("p0 + U", &expected, unit::MOMENTUM);
                r.output("|avg - (p0 + U)| / |p0 + U|", avg.max_abs_diff(&expected) / expected.euclidean_norm(), unit::DIMENSIONLESS);
                r.output("avg.avg", avg.norm_sqr(), unit::MOMENTUM_SQ);
                r.output("m^2 (1 + z_f)", 1.0 + field.zf()?, unit::MOMENTUM_SQ);
            }
            Output::Convergence => {
                let c = convergence_estimate(&field, &p0, range, s.step)?;
                r.output("error at step", c.error_coarse, unit::MOMENTUM);
                r.output("error at step/2", c.error_fine, unit::MOMENTUM);
                r.output("error ratio", c.ratio, unit::DIMENSIONLESS);
                r.output("observed order", c.order, unit::DIMENSIONLESS);
            }
        }
    }
    Ok((r, traj))
}

/// `pondkit trajectory`: returns what goes to standard output; writes the
/// CSV file when `--out` is given.
pub fn cmd_trajectory(a: &TrajectoryArgs) -> Result<String> {
    let text = std::fs::read_to_string(&a.scenario)
        .map_err(|e| Error::Io(format!("{}: {e}", a.scenario.display())))?;
    let scenario = Scenario::parse(&text).map_err(|e| match e {
        Error::Parse { line, message } => Error::Usage(format!("{}:{line}: {message}", a.scenario.display())),
        other => other,
    })?;
    let (report, traj) = trajectory_report(&scenario)?;
    let csv = trajectory_csv(&traj);
    if let Some(path) = &a.out {
        std::fs::write(path, &csv).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(if a.csv {
        csv
    } else {
        render(&report, a.json)
    })
}

/// `pondkit relmass`: the rest mass and `m gamma` frame by frame.
pub fn cmd_relmass(a: &RelmassArgs) -> Result<RunReport> {
    let mut frames = vec![LorentzBoost::identity()];
    for v in &a.boost {
        frames.push(LorentzBoost::new(*v)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    for _ in 0..a.frames {
        frames.push(random_frame(&mut rng));
    }
    let report = covariance_report(a.mass, a.velocity, &frames)?;
    let mut r = RunReport::new("relmass");
    r.input("mass", Value::Number(a.mass), unit::ENERGY);
    r.input("velocity", Value::Vector(a.velocity.to_vec()), unit::VELOCITY);
    r.input("seed", Value::Number(a.seed as f64), unit::COUNT);
    r.output("sqrt(p.p) relative spread", report.invariant_mass_spread(), unit::DIMENSIONLESS);
    r.output("m gamma relative spread", report.m_gamma_spread(), unit::DIMENSIONLESS);
    r.output("covariance residual", report.covariance_residual, unit::MOMENTUM);
    let col = |name: &str, unit: &str| Column { name: name.into(), unit: unit.into() };
    r.tables.push(Table {
        title: "frames".into(),
        columns: vec![
            col("frame", unit::COUNT),
            col("vx", unit::VELOCITY),
            col("vy", unit::VELOCITY),
            col("vz", unit::VELOCITY),
            col("p0", unit::MOMENTUM),
            col("|p|", unit::MOMENTUM),
            col("sqrt(p.p)", unit::MOMENTUM),
            col("m gamma", unit::ENERGY),
        ],
        rows: report
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                vec![
                    i as f64,
                    row.boost[0],
                    row.boost[1],
                    row.boost[2],
                    row.energy,
                    row.momentum,
                    row.invariant_mass,
                    row.m_gamma,
                ]
            })
            .collect(),
    });
    Ok(r)
}

fn random_frame(rng: &mut ChaCha8Rng) -> LorentzBoost {
    use rand::Rng;
    loop {
        let v: ThreeVector = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let n = norm3(v);
        if n > 0.1 && n <= 1.0 {
            let s = rng.gen_range(0.0..0.99) / n;
            return LorentzBoost::new([v[0] * s, v[1] * s, v[2] * s]).expect("subluminal by construction");
        }
    }
}
