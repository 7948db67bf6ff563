use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use swt::io::read_spectrum;

fn swt_cmd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swt"))
        .args(args)
        .output()
        .expect("spawn swt")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn two_tone_json(dir: &Path) -> PathBuf {
    let out = dir.join("spec.json");
    let o = swt_cmd(&[
        "analyze",
        "--sin",
        "3:5",
        "--sin",
        "4:7",
        "--n",
        "10",
        "--dt",
        "1",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

const C10: [f64; 10] = [
    -7.23606797749979,
    3.61803398874987,
    10.8541019662497,
    -3.61803398874988,
    -7.23606797749981,
    2.23606797749979,
    3.6180339887499,
    -3.6180339887499,
    3.61803398874989,
    4.0,
];

const V10: [f64; 10] = [
    6.23606797749979,
    -1.76393202250021,
    -1.0,
    -1.7639320225002,
    6.23606797749978,
    -6.2360679774998,
    1.76393202250023,
    1.0,
    1.76393202250017,
    -6.23606797749977,
];

#[test]
fn analyze_two_tone_writes_the_ten_dyads() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("spec.json");
    let o = swt_cmd(&[
        "analyze",
        "--sin",
        "3:5",
        "--sin",
        "4:7",
        "--n",
        "10",
        "--dt",
        "1",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success());
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.contains("dyads: 10"), "{stdout}");
    assert!(stdout.contains("residual_inf: "), "{stdout}");

    let spec = read_spectrum(&out).unwrap();
    assert_eq!(spec.len(), 10);
    for (d, c) in spec.dyads().iter().zip(C10) {
        assert!((d.coefficient - c).abs() <= 1e-9);
    }
    assert_eq!(spec.dyads()[0].frequency, 0.5);
    assert_eq!(spec.dyads()[9].frequency, 5.0);
}

#[test]
fn analyze_csv_first_row() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("spec.csv");
    let o = swt_cmd(&[
        "analyze",
        "--sin",
        "3:5",
        "--sin",
        "4:7",
        "--n",
        "10",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,frequency,coefficient"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[0], "1");
    assert_eq!(first[1], "0.5");
    let c: f64 = first[2].parse().unwrap();
    assert!((c + 7.23606797749979).abs() <= 1e-12, "{c}");
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn analyze_eeg_at_160_hz_with_four_digits() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("eeg.csv");
    let o = swt_cmd(&[
        "analyze",
        "--input",
        s(&fixture("eeg160.txt")),
        "--rate",
        "160",
        "--out",
        s(&out),
        "--digits",
        "4",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let got = fs::read_to_string(&out).unwrap();
    let want = fs::read_to_string(fixture("eeg160_dyads.csv")).unwrap();
    assert_eq!(got.lines().count(), 161);
    for (g, w) in got.lines().zip(want.lines()).skip(1) {
        let g: Vec<&str> = g.split(',').collect();
        let w: Vec<&str> = w.split(',').collect();
        assert_eq!(g[0], w[0]);
        if w[0] != "154" {
            assert_eq!(g[1], w[1], "dyad {}", w[0]);
        }
        let gc: f64 = g[2].parse().unwrap();
        let wc: f64 = w[2].parse().unwrap();
        assert!((gc - wc).abs() <= 0.05, "dyad {}: {gc} vs {wc}", w[0]);
    }
}

#[test]
fn analyze_empty_file_fails_with_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.txt");
    fs::write(&input, "# nothing here\n").unwrap();
    let out = dir.path().join("out.json");
    let o = swt_cmd(&[
        "analyze",
        "--input",
        s(&input),
        "--dt",
        "1",
        "--out",
        s(&out),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("holds no values"), "{err}");
    assert!(!out.exists());
}

#[test]
fn analyze_rejects_conflicting_time_base() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.json");
    let o = swt_cmd(&[
        "analyze",
        "--input",
        s(&fixture("eeg160.txt")),
        "--dt",
        "1",
        "--rate",
        "160",
        "--out",
        s(&out),
    ]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("exactly one"));
}

#[test]
fn analyze_reports_malformed_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    fs::write(&input, "1\n2\nabc\n").unwrap();
    let o = swt_cmd(&[
        "analyze",
        "--input",
        s(&input),
        "--dt",
        "1",
        "--out",
        s(&dir.path().join("o.json")),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.txt:3"));
}

#[test]
fn reconstruct_hits_samples_at_midpoints() {
    let dir = tempfile::tempdir().unwrap();
    let spec = two_tone_json(dir.path());
    let out = dir.path().join("rec.csv");
    let plot = dir.path().join("rec.svg");
    // 20 points put every other grid instant on a midpoint.
    let o = swt_cmd(&[
        "reconstruct",
        "--input",
        s(&spec),
        "--grid",
        "20",
        "--out",
        s(&out),
        "--plot",
        s(&plot),
        "--sin",
        "3:5",
        "--sin",
        "4:7",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = fs::read_to_string(&out).unwrap();
    let rows: Vec<(f64, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (t, v) = l.split_once(',').unwrap();
            (t.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 20);
    for (j, v) in V10.iter().enumerate() {
        let (t, got) = rows[2 * j + 1];
        assert!((t - (j as f64 + 0.5) / 10.0).abs() < 1e-12);
        assert!((got - v).abs() <= 1e-8, "j={j}: {got} vs {v}");
    }
    let svg = fs::read_to_string(&plot).unwrap();
    assert!(svg.contains("stroke-dasharray"));
}

#[test]
fn reconstruct_single_point_is_sum_of_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let spec = two_tone_json(dir.path());
    let out = dir.path().join("rec.csv");
    let o = swt_cmd(&[
        "reconstruct",
        "--input",
        s(&spec),
        "--grid",
        "1",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 2);
    let (t, v) = rows[1].split_once(',').unwrap();
    assert_eq!(t, "0");
    let sum: f64 = C10.iter().sum();
    assert!((v.parse::<f64>().unwrap() - sum).abs() < 1e-9);
}

#[test]
fn reconstruct_zero_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("zero.json");
    let o = swt_cmd(&["analyze", "--sin", "0:3", "--n", "8", "--out", s(&spec)]);
    assert!(o.status.success());
    let out = dir.path().join("rec.csv");
    assert!(swt_cmd(&[
        "reconstruct",
        "--input",
        s(&spec),
        "--grid",
        "50",
        "--out",
        s(&out)
    ])
    .status
    .success());
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.lines().skip(1).all(|l| l.ends_with(",0")));
}

#[test]
fn reconstruct_rejects_other_schema_versions() {
    let dir = tempfile::tempdir().unwrap();
    let spec = two_tone_json(dir.path());
    let text = fs::read_to_string(&spec)
        .unwrap()
        .replace("\"schemaVersion\": 1", "\"schemaVersion\": 7");
    fs::write(&spec, text).unwrap();
    let out = dir.path().join("rec.csv");
    let o = swt_cmd(&["reconstruct", "--input", s(&spec), "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("schema version 7 "));
    assert!(!out.exists());
}

#[test]
fn compare_writes_one_document_per_resolution() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cmp");
    let o = swt_cmd(&[
        "compare",
        "--sin",
        "3:5",
        "--sin",
        "4:7",
        "--dt",
        "1",
        "--ns",
        "100,200,400",
        "--fmax",
        "15",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    for n in [100, 200, 400] {
        let spec = read_spectrum(out.join(format!("ns_{n}.json"))).unwrap();
        assert_eq!(spec.window().n(), n);
        assert!(spec.frequencies().all(|f| f <= 15.0));
        let expected = (1..=n)
            .filter(|&i| n as f64 / (2.0 * (n - i + 1) as f64) <= 15.0)
            .count();
        assert_eq!(spec.len(), expected);
    }
    let svg = fs::read_to_string(out.join("comparison.svg")).unwrap();
    assert_eq!(svg.matches("<g class=\"panel\"").count(), 3);
}

#[test]
fn compare_single_resolution_equals_full_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let full = two_tone_json(dir.path());
    let out = dir.path().join("cmp");
    let o = swt_cmd(&[
        "compare",
        "--sin",
        "3:5",
        "--sin",
        "4:7",
        "--ns",
        "10",
        "--fmax",
        "5",
        "--out",
        s(&out),
    ]);
    assert!(o.status.success());
    assert_eq!(
        read_spectrum(out.join("ns_10.json")).unwrap(),
        read_spectrum(&full).unwrap()
    );
}

#[test]
fn compare_rejects_zero_resolution() {
    let dir = tempfile::tempdir().unwrap();
    let o = swt_cmd(&[
        "compare",
        "--sin",
        "3:5",
        "--ns",
        "0",
        "--fmax",
        "15",
        "--out",
        s(dir.path()),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |tag: &str| {
        let out = dir.path().join(format!("{tag}.json"));
        let plot = dir.path().join(format!("{tag}.svg"));
        let o = swt_cmd(&[
            "analyze",
            "--input",
            s(&fixture("eeg160.txt")),
            "--rate",
            "160",
            "--out",
            s(&out),
            "--plot",
            s(&plot),
        ]);
        assert!(o.status.success());
        (fs::read(out).unwrap(), fs::read(plot).unwrap(), o.stdout)
    };
    assert_eq!(run("a"), run("b"));
}
