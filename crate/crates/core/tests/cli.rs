use std::fs;
use std::process::{Command, Output};

use cerenkov::dispersion::find_radiating_band;
use cerenkov::radiation::{scan_spectrum, Dimensionality};
use cerenkov::{DispersionModel, FrequencyGrid, Particle, UnitSystem};

fn cerenkov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cerenkov")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn help_for_every_subcommand() {
    for sub in ["spectrum", "threshold", "cone-angle", "verify", "photon-rate"] {
        let o = cerenkov(&[sub, "--help"]);
        assert_eq!(o.status.code(), Some(0), "{sub}");
        assert!(stdout(&o).contains("Usage"), "{sub}");
    }
    assert_eq!(cerenkov(&["--help"]).status.code(), Some(0));
    assert_eq!(cerenkov(&[]).status.code(), Some(1));
}

#[test]
fn unknown_flag_is_rejected() {
    let o = cerenkov(&["spectrum", "--n", "1.5", "--beta", "0.8", "--omega", "1:2:3", "--frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("--frobnicate"));
}

#[test]
fn mutually_exclusive_index_sources() {
    let o = cerenkov(&["spectrum", "--n", "1.5", "--dispersion-file", "d.csv", "--beta", "0.8", "--omega", "1:2:3"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("--n") && err.contains("--dispersion-file"), "{err}");
}

#[test]
fn weber_verification_output() {
    let o = cerenkov(&["verify", "--weber", "--a", "5", "--b", "3", "--tol", "1e-8"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("numeric      0.25000000"), "{out}");
    assert!(out.contains("closed-form  0.25"), "{out}");
    assert!(out.contains("abs diff"), "{out}");

    let o = cerenkov(&["verify", "--weber", "--a", "3", "--b", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bulk_csv_spectrum_is_linear_and_matches_library() {
    let o =
        cerenkov(&["spectrum", "--dim", "3", "--n", "1.5", "--beta", "0.8", "--omega", "1:10:10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut reader = csv::Reader::from_reader(out.as_bytes());
    assert_eq!(reader.headers().unwrap(), vec!["omega", "power_density", "photon_rate_density"]);
    let rows: Vec<Vec<f64>> =
        reader.records().map(|r| r.unwrap().iter().map(|f| f.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 10);

    let model = DispersionModel::constant(1.5).unwrap();
    let grid = FrequencyGrid::linear(1.0, 10.0, 10).unwrap();
    let p = Particle::with_beta(0.8).unwrap();
    let lib = scan_spectrum(Dimensionality::ThreeD, &model, 1.0, &p, &grid, &UnitSystem::reduced(), false).unwrap();
    for (row, pt) in rows.iter().zip(&lib.points) {
        assert_eq!(row[0].to_bits(), pt.omega.to_bits());
        assert_eq!(row[1].to_bits(), pt.power_density.to_bits());
        assert_eq!(row[2].to_bits(), pt.photon_rate_density.to_bits());
    }
    for w in rows.windows(2) {
        assert!(w[1][1] > w[0][1]);
    }
}

#[test]
fn json_output_carries_meta() {
    let o = cerenkov(&[
        "spectrum",
        "--n",
        "1.5",
        "--beta",
        "0.8",
        "--omega",
        "1:100:5",
        "--log",
        "--format",
        "json",
        "--doubled-prefactor",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["meta"]["doubled_prefactor"], true);
    assert_eq!(v["meta"]["dimensionality"], "2D");
    assert_eq!(v["meta"]["inputs"]["spacing"], "log");
    assert_eq!(v["meta"]["inputs"]["n"], 1.5);
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts.len(), 5);
    assert_eq!(pts[4]["omega"], 100.0);
    let flat = pts[0]["power_density"].as_f64().unwrap();
    assert!(flat > 0.0 && pts.iter().all(|p| p["power_density"].as_f64().unwrap() == flat));
}

#[test]
fn threshold_bands_match_library() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("d.csv");
    fs::write(&table, "omega,n\n1.0,1.05\n2.0,1.2\n3.0,1.05\n4.0,1.0\n5.0,1.3\n").unwrap();

    let o = cerenkov(&["threshold", "--dispersion-file", table.to_str().unwrap(), "--beta", "0.9"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);

    let model = DispersionModel::from_csv_path(&table).unwrap();
    let grid = FrequencyGrid::new(vec![1.0, 2.0, 3.0, 4.0, 5.0]).unwrap();
    let bands = find_radiating_band(&model, &Particle::with_beta(0.9).unwrap(), &grid, 1e-8).unwrap();
    assert_eq!(bands.len(), 2);
    let printed: Vec<(f64, f64)> = out
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split_whitespace().map(|x| x.parse::<f64>().unwrap());
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    assert_eq!(printed, bands);

    // dense-scan oracle: interior samples are radiating exactly inside the bands
    for i in 0..=4000 {
        let w = 1.0 + 4.0 * i as f64 / 4000.0;
        let inside = bands.iter().any(|&(lo, hi)| lo <= w && w <= hi);
        let radiates = model.n_of_omega(w).unwrap() * 0.9 > 1.0;
        let near_edge = bands.iter().any(|&(lo, hi)| (w - lo).abs() < 1e-6 || (w - hi).abs() < 1e-6);
        assert!(near_edge || inside == radiates, "omega = {w}");
    }
}

#[test]
fn malformed_dispersion_file_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("bad.csv");
    fs::write(&table, "omega,n\n1.0,1.5\n2.0,abc\n").unwrap();
    let o = cerenkov(&["threshold", "--dispersion-file", table.to_str().unwrap(), "--beta", "0.9"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn out_of_table_frequency_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("d.csv");
    fs::write(&table, "omega,n\n1.0,1.5\n2.0,1.6\n").unwrap();
    let o = cerenkov(&["spectrum", "--dispersion-file", table.to_str().unwrap(), "--beta", "0.9", "--omega", "1:3:5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("omega = 2.5"), "{}", stderr(&o));
}

#[test]
fn plot_and_output_files_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut artifacts = Vec::new();
    for run in 0..2 {
        let csv = dir.path().join(format!("s{run}.csv"));
        let svg = dir.path().join(format!("s{run}.svg"));
        let o = cerenkov(&[
            "spectrum",
            "--n",
            "2",
            "--beta",
            "0.99",
            "--omega",
            "0.5:10:7",
            "--output",
            csv.to_str().unwrap(),
            "--plot",
            svg.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
        artifacts.push((fs::read(&csv).unwrap(), fs::read_to_string(&svg).unwrap()));
    }
    assert_eq!(artifacts[0], artifacts[1]);
    let svg = &artifacts[0].1;
    assert!(svg.starts_with("<?xml") && svg.contains("<polyline") && svg.contains("n=2") && svg.contains("beta=0.99"));

    let o = cerenkov(&["spectrum", "--n", "2", "--beta", "0.99", "--omega", "1:2:3", "--plot", "/nonexistent/p.svg"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn config_file_drives_a_run() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(&cfg, "dim = 3\nn = 1.5\nbeta = 0.8\nomega = \"1:3:3\"\n").unwrap();
    let from_config = cerenkov(&["spectrum", "--config", cfg.to_str().unwrap()]);
    let from_flags = cerenkov(&["spectrum", "--dim", "3", "--n", "1.5", "--beta", "0.8", "--omega", "1:3:3"]);
    assert_eq!(from_config.status.code(), Some(0));
    assert_eq!(from_config.stdout, from_flags.stdout);
}

#[test]
fn photon_rate_and_cone_angle() {
    let o = cerenkov(&["photon-rate", "--power", "0.137363", "--omega", "1"]);
    assert_eq!(stdout(&o), "power_density = 0.137363\nphoton_rate_density = 0.137363\n");
    let o = cerenkov(&["cone-angle", "--n", "1.5", "--beta", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("below threshold"));
}
