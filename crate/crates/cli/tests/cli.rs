use std::path::Path;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_sc");

fn sc(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("SC_CONFIG").output().unwrap()
}

fn sc_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .current_dir(dir)
        .env_remove("SC_CONFIG")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn report_value(report: &str, key: &str) -> String {
    report
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no {key} in report:\n{report}"))
        .to_string()
}

/// Column `name` of a CSV written by the tool.
fn column(path: &Path, name: &str) -> Vec<f64> {
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let j = lines.next().unwrap().split(',').position(|h| h == name).unwrap();
    lines.map(|l| l.split(',').nth(j).unwrap().parse().unwrap()).collect()
}

#[test]
fn constant_precession_csv_has_one_row_per_node() {
    let dir = tempfile::tempdir().unwrap();
    let o = sc_in(
        dir.path(),
        &["generate", "--family", "constant-precession", "--omega", "3", "--mu", "4", "--range", "0:10", "--step", "1e-3", "--out", "csv"],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(dir.path().join("curve.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "s,x,y,z,Tx,Ty,Tz,N1x,N1y,N1z,N2x,N2y,N2z,kappa,tau");
    assert_eq!(lines.count(), 10001);
    // nothing on stdout without a report
    assert!(o.stdout.is_empty());
}

#[test]
fn salkowski_range_must_stay_inside_the_domain() {
    let dir = tempfile::tempdir().unwrap();
    let ok = sc_in(dir.path(), &["generate", "--family", "salkowski", "--m", "0.5", "--range", "-1.9:1.9", "--step", "1e-3"]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = sc_in(dir.path(), &["generate", "--family", "salkowski", "--m", "0.5", "--range", "-2:2", "--step", "1e-3"]);
    assert_eq!(bad.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("outside the domain"));
}

#[test]
fn plane_circle_closes_over_its_period() {
    let dir = tempfile::tempdir().unwrap();
    let o = sc_in(dir.path(), &["generate", "--family", "plane", "--kappa-const", "1", "--range", "0:6.2832", "--out", "report"]);
    assert!(o.status.success());
    let residual: f64 = report_value(&stdout(&o), "closure_residual").parse().unwrap();
    assert!(residual <= 1e-7);
    assert!(!dir.path().join("curve.csv").exists());
}

#[test]
fn validation_failures_exit_with_two() {
    assert_eq!(sc(&["verify", "--suite", "none-such"]).status.code(), Some(2));
    assert_eq!(sc(&["generate", "--family", "helix", "--kappa-const", "1", "--range", "0:1"]).status.code(), Some(2));
    assert_eq!(sc(&["generate", "--family", "plane", "--kappa-const", "1", "--range", "1:0"]).status.code(), Some(2));
    assert_eq!(sc(&["generate", "--family", "none", "--range", "0:1"]).status.code(), Some(2));
    assert_eq!(
        sc(&["generate", "--family", "slant-helix", "--theta", "2", "--phi-rate", "1", "--range", "0:1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        sc(&["generate", "--family", "plane", "--kappa-const", "1", "--range", "0:1", "--step", "2"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_geomcore_reports_successor_normal_identity() {
    let o = sc(&["verify", "--suite", "geomcore"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("successor-normal-identity ")).unwrap();
    let fields: Vec<&str> = line.split_whitespace().collect();
    assert!(fields[1].parse::<f64>().unwrap() < 1e-12);
    assert_eq!(fields[3], "pass");
}

#[test]
fn verify_acceptance_passes() {
    let o = sc(&["verify", "--suite", "acceptance"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().count() >= 10);
}

#[test]
fn circle_successor_is_constant_helix() {
    let dir = tempfile::tempdir().unwrap();
    let phi0 = (std::f64::consts::FRAC_PI_2 - std::f64::consts::FRAC_PI_3).to_string();
    let o = sc_in(
        dir.path(),
        &["successor", "--family", "plane", "--kappa-const", "1", "--range", "0:5", "--step", "1e-2", "--phi0", &phi0, "--out", "csv"],
    );
    assert!(o.status.success());
    let csv = dir.path().join("successor.csv");
    let (s3, c3) = (std::f64::consts::FRAC_PI_3.sin(), 0.5);
    assert!(column(&csv, "kappa").iter().all(|k| (k - s3).abs() < 1e-15));
    assert!(column(&csv, "tau").iter().all(|t| (t - c3).abs() < 1e-15));
}

#[test]
fn circular_helix_successor_is_constant_precession() {
    let dir = tempfile::tempdir().unwrap();
    let o = sc_in(
        dir.path(),
        &["successor", "--family", "helix", "--kappa-const", "3", "--tau-const", "4", "--range", "0:10", "--phi0", "0", "--out", "csv"],
    );
    assert!(o.status.success());
    let csv = dir.path().join("successor.csv");
    let s = column(&csv, "s");
    for (s, k) in s.iter().zip(column(&csv, "kappa")) {
        assert!((k - 3.0 * (4.0 * s).cos()).abs() < 1e-12);
    }
}

#[test]
fn repeated_phi0_writes_one_file_per_member() {
    let dir = tempfile::tempdir().unwrap();
    let o = sc_in(
        dir.path(),
        &["successor", "--family", "plane", "--kappa-const", "1", "--range", "0:1", "--step", "1e-2", "--phi0", "0.2", "--phi0", "-0.7", "--depth", "2"],
    );
    assert!(o.status.success());
    assert!(dir.path().join("successor.1.csv").exists());
    assert!(dir.path().join("successor.2.csv").exists());
    // twice from the circle: κ = cos a · cos(a + s sin a)
    let csv = dir.path().join("successor.2.csv");
    let a: f64 = -0.7;
    for (s, k) in column(&csv, "s").iter().zip(column(&csv, "kappa")) {
        assert!((k - a.cos() * (a + s * a.sin()).cos()).abs() < 1e-14);
    }
}

#[test]
fn csv_round_trip_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    let o = sc_in(
        dir.path(),
        &["generate", "--family", "slant-helix", "--theta", "1.0471975511965976", "--phi-rate", "0.5773502691896258", "--range", "0:4", "--step", "1e-2", "--out", "csv", "--output", "a"],
    );
    assert!(o.status.success());
    let o = sc_in(dir.path(), &["export", "--input", "a.csv", "--out", "csv,obj", "--output", "b"]);
    assert!(o.status.success());
    let a = std::fs::read(dir.path().join("a.csv")).unwrap();
    assert_eq!(a, std::fs::read(dir.path().join("b.csv")).unwrap());

    let obj = std::fs::read_to_string(dir.path().join("b.obj")).unwrap();
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 401);
    assert!(obj.lines().any(|l| l.starts_with("l 1 2 3 ") && l.ends_with(" 401")));

    // the exported development, read back as sampled profiles on the same grid
    let o = sc_in(
        dir.path(),
        &["generate", "--family", "custom-profile", "--profile", "a.csv", "--range", "0:4", "--step", "1e-2", "--out", "csv", "--output", "c"],
    );
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for name in ["s", "kappa", "tau"] {
        let (x, y) = (column(&dir.path().join("a.csv"), name), column(&dir.path().join("c.csv"), name));
        assert!(x.iter().zip(&y).all(|(p, q)| p.to_bits() == q.to_bits()), "{name}");
    }
    // the integrated curve matches the closed form up to a rigid motion
    let tangents = |file: &str| -> Vec<[f64; 3]> {
        let c: Vec<Vec<f64>> = ["Tx", "Ty", "Tz"].iter().map(|n| column(&dir.path().join(file), n)).collect();
        (0..c[0].len()).map(|i| [c[0][i], c[1][i], c[2][i]]).collect()
    };
    let dot = |a: &[f64; 3], b: &[f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let (ta, tc) = (tangents("a.csv"), tangents("c.csv"));
    for (a, c) in ta.iter().zip(&tc) {
        assert!((dot(a, &ta[0]) - dot(c, &tc[0])).abs() < 1e-6);
    }
}

#[test]
fn identical_jobs_write_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    for base in ["one", "two"] {
        let o = sc_in(
            dir.path(),
            &["generate", "--family", "custom-profile", "--kappa-const", "1.2", "--tau-const", "-0.4", "--range", "0:3", "--out", "csv,obj", "--output", base],
        );
        assert!(o.status.success());
    }
    for ext in ["csv", "obj"] {
        assert_eq!(
            std::fs::read(dir.path().join(format!("one.{ext}"))).unwrap(),
            std::fs::read(dir.path().join(format!("two.{ext}"))).unwrap()
        );
    }
}

#[test]
fn config_file_supplies_defaults_below_flags() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("job.conf");
    std::fs::write(&config, "# job\nfamily = helix\nkappa-const = 2\ntheta = 30\ndeg = true\nrange = 0:1\nstep = 0.1\nout = csv\n").unwrap();
    let run = |extra: &[&str]| {
        let mut args = vec!["generate", "--output", "h"];
        args.extend_from_slice(extra);
        Command::new(BIN)
            .args(&args)
            .current_dir(dir.path())
            .env("SC_CONFIG", &config)
            .output()
            .unwrap()
    };
    assert!(run(&[]).status.success());
    let tz = column(&dir.path().join("h.csv"), "Tz");
    assert_eq!(tz.len(), 11);
    assert!(tz.iter().all(|t| (t - 30f64.to_radians().cos()).abs() < 1e-12));

    assert!(run(&["--theta", "60", "--step", "0.5"]).status.success());
    let tz = column(&dir.path().join("h.csv"), "Tz");
    assert_eq!(tz.len(), 3);
    assert!(tz.iter().all(|t| (t - 0.5).abs() < 1e-12));

    std::fs::write(&config, "colour = blue\n").unwrap();
    assert_eq!(run(&["--family", "plane"]).status.code(), Some(2));
}
