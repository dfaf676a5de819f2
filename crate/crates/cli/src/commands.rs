use std::fmt::Write as _;
use std::path::Path;

use sc_core::geomcore::{darboux_vector, frame_defect, successor_transform, FrenetApparatus, Interval, Vec3};
use sc_core::natural::{
    closure_residual, integrate_position, successor_frame_period, torsion_ratio, total_torsion, CurveSamples,
};
use sc_core::verify::run_suite;

use crate::args::{Command, ExportArgs, GenerateArgs, OutputKind, SuccessorArgs, VerifyArgs};
use crate::config::Config;
use crate::job::{build_curve, Curve, JobSpec};
use crate::table::{read_csv, with_suffix, write_csv, write_obj, Table, KAPPA, S, TAU};
use crate::{usage, Cli, CliError};

/// Points at which frames are compared one period apart.
const PERIOD_PROBES: usize = 64;

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate(a) => generate(&a, &Config::from_env()?),
        Command::Successor(a) => successor(&a, &Config::from_env()?),
        Command::Verify(a) => verify(&a),
        Command::Export(a) => export(&a),
    }
}

/// Key/value report printed on standard output.
#[derive(Debug, Default)]
struct Report(String);

impl Report {
    fn line(&mut self, key: &str, value: impl std::fmt::Display) {
        let _ = writeln!(self.0, "{key}: {value}");
    }
}

fn sci(v: f64) -> String {
    format!("{v:.3e}")
}

fn min_max(values: &[f64]) -> String {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    format!("{} .. {}", sci(lo), sci(hi))
}

struct Sampled {
    samples: CurveSamples,
    kappa: Vec<f64>,
    tau: Vec<f64>,
}

fn sample(app: &FrenetApparatus, grid: &[f64]) -> Result<Sampled, CliError> {
    let tabulated = match app.sample_grid() {
        Some(g) if g == grid => app.clone(),
        _ => app.tabulate(grid)?,
    };
    Ok(Sampled {
        samples: integrate_position(&tabulated, Vec3::ZERO)?,
        kappa: app.kappa().sample(grid)?,
        tau: app.tau().sample(grid)?,
    })
}

fn write_outputs(base: &Path, outputs: &[OutputKind], table: &Table) -> Result<(), CliError> {
    if let Some(dir) = base.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.to_path_buf(),
            source,
        })?;
    }
    for kind in outputs {
        match kind {
            OutputKind::Csv => write_csv(&with_suffix(base, "csv"), table)?,
            OutputKind::Obj => write_obj(&with_suffix(base, "obj"), table)?,
            OutputKind::Report => {}
        }
    }
    Ok(())
}

fn geometry_lines(report: &mut Report, sampled: &Sampled) {
    let defect = sampled
        .samples
        .frames
        .iter()
        .flatten()
        .map(frame_defect)
        .fold(0.0, f64::max);
    report.line("nodes", sampled.samples.len());
    report.line("max_frame_defect", sci(defect));
    report.line("unit_speed_defect", sci(sampled.samples.unit_speed_defect()));
    report.line("kappa", min_max(&sampled.kappa));
    report.line("tau", min_max(&sampled.tau));
}

/// Closure and frame residuals of `app` over one period from `start`.
fn period_lines(report: &mut Report, app: &FrenetApparatus, start: f64, period: f64, step: f64) {
    report.line("period", period);
    match closure_residual(app, start, period, step) {
        Ok(r) => report.line("closure_residual", sci(r)),
        Err(e) => report.line("closure_residual", format!("n/a ({e})")),
    }
    let frames = (0..PERIOD_PROBES)
        .map(|i| {
            let s = start + period * i as f64 / PERIOD_PROBES as f64;
            Ok(app.frame_at(s)?.max_component_diff(&app.frame_at(s + period)?))
        })
        .collect::<sc_core::Result<Vec<f64>>>();
    match frames {
        Ok(r) => report.line("frame_period_residual", sci(r.into_iter().fold(0.0, f64::max))),
        Err(e) => report.line("frame_period_residual", format!("n/a ({e})")),
    }
}

fn job_lines(report: &mut Report, job: &JobSpec, grid: &[f64]) {
    report.line("family", job.family_name());
    let params: Vec<String> = job.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut params = params.join(" ");
    if let Some(p) = &job.profile {
        params = format!("{params} profile={}", p.display()).trim().to_string();
    }
    report.line("parameters", params);
    report.line("range", format!("{}:{}", job.s_range.0, job.s_range.1));
    report.line("step", format!("{} (effective {})", job.step, grid[1] - grid[0]));
}

fn method(curve: &Curve) -> &'static str {
    if curve.closed_form {
        "closed-form"
    } else {
        sc_core::natural::IntegrationConfig::METHOD
    }
}

fn generate(args: &GenerateArgs, config: &Config) -> Result<(), CliError> {
    let phi0 = match args.phi0 {
        Some(v) => Some(v),
        None => config.number("phi0")?,
    };
    let job = JobSpec::resolve(&args.job, phi0, config, "curve", &[OutputKind::Csv, OutputKind::Report])?;
    let grid = job.grid()?;
    let curve = build_curve(&job)?;
    let sampled = sample(&curve.apparatus, &grid)?;
    write_outputs(&job.output, &job.outputs, &Table::from_samples(&sampled.samples, &sampled.kappa, &sampled.tau))?;
    if job.outputs.contains(&OutputKind::Report) {
        let mut report = Report::default();
        job_lines(&mut report, &job, &grid);
        report.line("frames", method(&curve));
        geometry_lines(&mut report, &sampled);
        match curve.period {
            Some(p) => {
                let app = curve.covering(curve.start + 2.0 * p)?;
                period_lines(&mut report, &app, curve.start, p, job.step);
            }
            None => report.line("period", "none"),
        }
        print!("{}", report.0);
    }
    Ok(())
}

/// Period of the successor of a curve with frame period `period`, from its
/// total torsion over that period.
fn next_period(app: &FrenetApparatus, start: f64, period: f64) -> sc_core::Result<Option<f64>> {
    let total = total_torsion(app.tau(), Interval::closed(start, start + period)?)?;
    Ok(successor_frame_period(period, torsion_ratio(total)))
}

fn successor(args: &SuccessorArgs, config: &Config) -> Result<(), CliError> {
    let job = JobSpec::resolve(&args.job, None, config, "successor", &[OutputKind::Csv, OutputKind::Report])?;
    let phis = if !args.phi0.is_empty() {
        args.phi0.clone()
    } else {
        vec![config.number("phi0")?.unwrap_or(0.0)]
    };
    let deg = args.job.deg || config.flag("deg")?;
    let phis: Vec<f64> = phis.into_iter().map(|p| if deg { p.to_radians() } else { p }).collect();
    let depth = match args.depth {
        Some(d) => d,
        None => config.number("depth")?.map_or(1, |d| d as usize),
    };
    if depth == 0 {
        return Err(usage("depth must be at least 1"));
    }
    let grid = job.grid()?;
    let curve = build_curve(&job)?;
    let reach = curve.period.map_or(job.s_range.1, |p| job.s_range.1.max(curve.start + 2.0 * p));
    let source = curve.covering(reach)?;

    let mut report = Report::default();
    job_lines(&mut report, &job, &grid);
    report.line("source_frames", method(&curve));
    report.line("depth", depth);
    for (i, &phi0) in phis.iter().enumerate() {
        let mut parent = source.clone();
        let mut period = curve.period;
        for _ in 1..depth {
            period = period.and_then(|p| next_period(&parent, curve.start, p).ok().flatten());
            parent = successor_transform(&parent, phi0)?;
        }
        period = period.and_then(|p| next_period(&parent, curve.start, p).ok().flatten());
        let member = successor_transform(&parent, phi0)?;
        let sampled = sample(&member, &grid)?;
        let base = if phis.len() == 1 {
            job.output.clone()
        } else {
            with_suffix(&job.output, &(i + 1).to_string())
        };
        write_outputs(&base, &job.outputs, &Table::from_samples(&sampled.samples, &sampled.kappa, &sampled.tau))?;

        let (mut normal, mut speed, mut darboux) = (0.0f64, 0.0f64, 0.0f64);
        for &s in &grid {
            let (f, g) = (parent.frame_at(s)?, member.frame_at(s)?);
            let k = parent.kappa().eval(s)?;
            let (ks, ts) = (member.kappa().eval(s)?, member.tau().eval(s)?);
            normal = normal.max((g.n1 - f.t).max_abs());
            speed = speed.max((ks * ks + ts * ts - k * k).abs());
            darboux = darboux.max((darboux_vector(&member, s)? - f.n2 * k).max_abs());
        }
        report.line("member", i + 1);
        report.line("phi0", phi0);
        geometry_lines(&mut report, &sampled);
        report.line("normal_identity_residual", sci(normal));
        report.line("angular_speed_residual", sci(speed));
        report.line("darboux_residual", sci(darboux));
        match period {
            Some(p) => period_lines(&mut report, &member, curve.start, p, job.step),
            None => report.line("period", "none"),
        }
    }
    if job.outputs.contains(&OutputKind::Report) {
        print!("{}", report.0);
    }
    Ok(())
}

fn verify(args: &VerifyArgs) -> Result<(), CliError> {
    let results = run_suite(&args.suite)?;
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.pass).count();
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::ChecksFailed(failed))
    }
}

fn export(args: &ExportArgs) -> Result<(), CliError> {
    let table = read_csv(&args.input)?;
    let outputs = args.out.clone().unwrap_or_else(|| vec![OutputKind::Obj]);
    let base = args.output.clone().unwrap_or_else(|| args.input.with_extension(""));
    write_outputs(&base, &outputs, &table)?;
    if outputs.contains(&OutputKind::Report) {
        let mut report = Report::default();
        report.line("rows", table.rows.len());
        if let Some(s) = table.column(S) {
            // re-import as sampled profiles validates the grid
            for (name, col) in [("kappa", KAPPA), ("tau", TAU)] {
                if let Some(values) = table.column(col) {
                    sc_core::geomcore::ScalarProfile::sampled(s.clone(), values.clone())?;
                    report.line(name, min_max(&values));
                }
            }
        }
        print!("{}", report.0);
    }
    Ok(())
}
