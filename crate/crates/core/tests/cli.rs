//! End-to-end runs of the `pondkit` binary.

use std::path::PathBuf;
use std::process::Command;

fn pondkit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pondkit")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn scenario(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", "scenarios", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = pondkit(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).expect("valid JSON")
}

fn output(v: &serde_json::Value, name: &str) -> serde_json::Value {
    v["outputs"].as_array().unwrap().iter().find(|q| q["name"] == name).unwrap_or_else(|| panic!("{name}"))["value"]
        .clone()
}

fn vec4(v: serde_json::Value) -> [f64; 4] {
    let a: Vec<f64> = serde_json::from_value(v).unwrap();
    [a[0], a[1], a[2], a[3]]
}

fn max_diff(a: [f64; 4], b: [f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[test]
fn verify_passes_and_exits_zero() {
    let (code, out, _) = pondkit(&["verify"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("invariants hold"));
    assert!(!out.contains("[FAIL]"));
}

#[test]
fn verify_json_is_deterministic_per_seed() {
    let (c1, a, _) = pondkit(&["verify", "--seed", "7", "--json"]);
    let (c2, b, _) = pondkit(&["verify", "--seed", "7", "--json"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    let (_, other, _) = pondkit(&["verify", "--seed", "8", "--json"]);
    assert_ne!(a, other);
}

#[test]
fn csv_and_relmass_are_deterministic() {
    let path = scenario("sin2_moving.scn");
    let (_, a, _) = pondkit(&["trajectory", &path, "--csv"]);
    let (_, b, _) = pondkit(&["trajectory", &path, "--csv"]);
    assert_eq!(a, b);
    let (_, a, _) = pondkit(&["relmass", "--seed", "3", "--json"]);
    let (_, b, _) = pondkit(&["relmass", "--seed", "3", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn updata_examples() {
    let v = json(&["updata", "--intensity", "0", "--wavelength", "800nm", "--json"]);
    assert_eq!(v["outputs"][0]["value"], 0.0);
    assert_eq!(output(&v, "z_f (2 U_p / m c^2)"), 0.0);

    let v = json(&["updata", "--intensity", "1e14", "--wavelength", "800nm", "--pol", "linear", "--json"]);
    let up = v["outputs"][0]["value"].as_f64().unwrap();
    assert_eq!(v["outputs"][0]["unit"], "eV");
    assert!((up - 5.97).abs() / 5.97 < 5e-3, "{up}");
    let a = output(&v, "z_f (2 U_p / m c^2)").as_f64().unwrap();
    let b = output(&v, "z_f (alpha rho 2 lambda lambdabar_C^2)").as_f64().unwrap();
    assert!((a - b).abs() / b < 1e-10);

    // same point spelled with an SI prefix and micrometres
    let w = json(&["updata", "--intensity", "100T", "--wavelength", "0.8um", "--json"]);
    let up2 = w["outputs"][0]["value"].as_f64().unwrap();
    assert!((up2 - up).abs() / up < 1e-14);
}

#[test]
fn shell_examples() {
    let v = json(&["shell", "--a0", "1", "--json"]);
    assert!((output(&v, "(p+U).(p+U)").as_f64().unwrap() - 1.5).abs() < 1e-12);
    let v = json(&["shell", "--a0", "1", "--boost", "0.6,0,0", "--json"]);
    assert!((output(&v, "boosted (p+U).(p+U)").as_f64().unwrap() - 1.5).abs() / 1.5 < 1e-9);
    let v = json(&["shell", "--a0", "1", "--n", "1", "--json"]);
    assert!(output(&v, "pole residual").as_f64().unwrap().abs() < 1e-12);
    let v = json(&["shell", "--intensity", "1e18", "--wavelength", "800nm", "--pol", "circular", "--json"]);
    assert!(output(&v, "relative residual").as_f64().unwrap() < 1e-12);
}

#[test]
fn trajectory_flat_top_summary() {
    let v = json(&["trajectory", &scenario("flat_top_rest.scn"), "--json"]);
    let avg = vec4(output(&v, "cycle-averaged momentum"));
    // linear a0 = 1: U_p = 1/4, so (m + U_p, 0, 0, U_p) along +z
    assert!(max_diff(avg, [1.25, 0.0, 0.0, 0.25]) / 1.25 < 1e-6);
    assert!((output(&v, "avg.avg").as_f64().unwrap() - 1.5).abs() / 1.5 < 1e-6);
}

#[test]
fn trajectory_pulse_exit_and_zero_field() {
    let v = json(&["trajectory", &scenario("sin2_moving.scn"), "--json"]);
    assert!(output(&v, "|exit - p0| / |p0|").as_f64().unwrap() < 1e-6);

    let (code, csv, err) = pondkit(&["trajectory", &scenario("no_field.scn"), "--csv"]);
    assert_eq!(code, 0, "{err}");
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("phase,t,x,y,z,p0,px,py,pz"));
    let first: Vec<String> = lines.next().unwrap().split(',').skip(5).map(String::from).collect();
    for line in lines {
        let p: Vec<String> = line.split(',').skip(5).map(String::from).collect();
        assert_eq!(p.len(), 4);
        for (a, b) in p.iter().zip(&first) {
            let (a, b): (f64, f64) = (a.parse().unwrap(), b.parse().unwrap());
            assert!((a - b).abs() <= 1e-15 * b.abs().max(1.0), "{line}");
        }
    }
}

#[test]
fn trajectory_out_writes_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("traj.csv");
    let path = scenario("sin2_moving.scn");
    let (code, summary, _) = pondkit(&["trajectory", &path, "--out", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(summary.starts_with("trajectory\n"));
    let (_, csv, _) = pondkit(&["trajectory", &path, "--csv"]);
    assert_eq!(std::fs::read_to_string(&file).unwrap(), csv);
}

#[test]
fn scenario_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.scn");
    std::fs::write(&file, "# header\na0 = 1\n\nenvelope = sin2 4\nwavelength = 800nm\n").unwrap();
    let (code, out, err) = pondkit(&["trajectory", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("bad.scn:5:"), "{err}");
    assert_eq!(err.lines().count(), 1);

    let (code, _, err) = pondkit(&["trajectory", dir.path().join("missing.scn").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("missing.scn"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["updata", "--intensity", "1e14"][..],
        &["updata", "--intensity", "1e14", "--wavelength", "800"],
        &["updata", "--intensity", "1e14", "--wavelength", "800nm", "--pol", "elliptic"],
        &["shell", "--a0", "1", "--boost", "1,0,0"],
        &["shell", "--a0", "1", "--momentum", "1,2"],
        &["relmass", "--velocity", "1.5,0,0"],
        &["verify", "--seed", "x"],
        &["nonsense"],
    ] {
        let (code, out, err) = pondkit(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert!(err.starts_with("pondkit: "), "{args:?}: {err}");
    }
}

#[test]
fn relmass_table_has_one_row_per_frame() {
    let v = json(&["relmass", "--velocity", "0.6,0,0", "--boost", "-0.6,0,0", "--frames", "2", "--json"]);
    let rows = v["tables"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    // boosting by -v brings the particle to rest: p0 = m gamma = 1
    assert!((rows[1][4].as_f64().unwrap() - 1.0).abs() < 1e-12);
    for r in rows {
        assert!((r[6].as_f64().unwrap() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn text_output_uses_twelve_significant_digits() {
    let (_, out, _) = pondkit(&["updata", "--intensity", "1e14", "--wavelength", "800nm"]);
    let line = out.lines().find(|l| l.contains("[eV]")).unwrap();
    let number = line.split_whitespace().nth(1).unwrap();
    let digits = number.chars().filter(|c| c.is_ascii_digit()).count();
    assert!(digits <= 12 && digits >= 10, "{number}");
}
