use std::path::PathBuf;
use std::process::{Command, Output};

use kitaev_gaussian::compiler::GaussianCircuit;
use kitaev_gaussian::experiments::load_measurement_csv;

fn kitaev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kitaev")).args(args).env_remove("KITAEV_CONFIG").env_remove("KITAEV_OUT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("kitaev-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn compile_emits_six_two_qubit_gates() {
    let o = kitaev(&["compile", "--n", "3", "--t", "-1", "--delta", "1", "--mu", "1e-8"]);
    assert!(o.status.success());
    let c = GaussianCircuit::from_json(&stdout(&o)).unwrap();
    assert_eq!(c.count("RYXXY"), 6);
    assert_eq!(c.n_qubits(), 3);
}

#[test]
fn compile_exit_codes() {
    let o = kitaev(&["compile", "--mu", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate"));
    assert_eq!(kitaev(&["compile", "--n", "three"]).status.code(), Some(64));
    assert_eq!(kitaev(&["compile", "--excite", "5"]).status.code(), Some(64));
    assert_eq!(kitaev(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(kitaev(&["--help"]).status.code(), Some(0));
}

#[test]
fn compile_text_starts_with_x_gates() {
    let o = kitaev(&["compile", "--excite", "0,1,2", "--format", "text"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[2..5], ["x q[0];", "x q[1];", "x q[2];"]);
}

#[test]
fn default_sweep_row_count_and_determinism() {
    let dir = scratch("sweep");
    let o = Command::new(env!("CARGO_BIN_EXE_kitaev"))
        .args(["sweep", "--shots", "8192", "--seed", "7"])
        .env("KITAEV_OUT_DIR", &dir)
        .env_remove("KITAEV_CONFIG")
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let path = dir.join("sweep_3_-1_1.csv");
    let first = std::fs::read_to_string(&path).unwrap();
    let table = load_measurement_csv(&path).unwrap();
    // 8 labels × 21 points, each with exact and sampled values of 4 observables
    assert_eq!(table.len(), 8 * 21 * 8);
    assert_eq!(table.filter("energy").len(), 8 * 21);
    let again = kitaev(&["sweep", "--shots", "8192", "--seed", "7", "--out", "-"]);
    assert_eq!(stdout(&again), first);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn noise_flag_adds_noisy_energy() {
    let o = kitaev(&["sweep", "--noise", "1,0.5,0.1,3", "--observables", "energy", "--labels", "[0]", "--out", "-"]);
    let text = stdout(&o);
    assert!(text.contains(",noisy_energy,"));
    assert_eq!(text.lines().count(), 1 + 2 * 21);
}

#[test]
fn sweep_rejects_negative_grid() {
    assert_eq!(kitaev(&["sweep", "--grid", "-5e-8:5e-8:400", "--out", "-"]).status.code(), Some(64));
}

#[test]
fn topo_prints_critical_mu() {
    let o = kitaev(&["topo", "--n", "3", "--t", "-1", "--delta", "1"]);
    let first = stdout(&o).lines().next().unwrap().to_string();
    let v: f64 = first.strip_prefix("mu_cr = ").unwrap().parse().unwrap();
    assert!((v - 4.0 / 3.0).abs() < 1e-12);
}

#[test]
fn parity_scan_reports_flip() {
    let dir = scratch("parity");
    let out = dir.join("p.csv");
    let o = kitaev(&["parity-scan", "--delta", "1", "--grid", "-5e-8:5e-8:400", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    let flips = text.split("flips at [").nth(1).unwrap().split(']').next().unwrap();
    let flips: Vec<f64> = flips.split(", ").map(|f| f.parse().unwrap()).collect();
    assert_eq!(flips.len(), 1);
    assert!(flips[0].abs() <= 5e-8);
    assert_eq!(load_measurement_csv(&out).unwrap().len(), 400);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn fit_and_compare() {
    let dir = scratch("compare");
    let pred = dir.join("pred.csv");
    let meas = dir.join("meas.csv");
    std::fs::write(&pred, "mu,label,observable,value\n0,[0],edge,1\n1,[0],edge,0.5\n2,[0],edge,0.25\n3,[0],edge,0.125\n").unwrap();
    std::fs::write(&meas, "μ,label,observable,value\n0,[0],edge,0.9\n1,[0],edge,0.6\n2,[0],edge,0.25\n3,[0],edge,0.125\n").unwrap();
    let o = kitaev(&["compare", "--pred", pred.to_str().unwrap(), "--meas", meas.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("pairs = 4"));
    let me: f64 = text.lines().find_map(|l| l.strip_prefix("ME = ")).unwrap().parse().unwrap();
    assert!((me - 0.05).abs() < 1e-12);

    let o = kitaev(&["fit", "--csv", pred.to_str().unwrap(), "--label", "[0]"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("points = 4"));
    let o = kitaev(&["fit", "--label", "[1,2]"]);
    let res: f64 = stdout(&o).lines().find_map(|l| l.strip_prefix("residual = ")).unwrap().parse().unwrap();
    assert!(res < 0.05);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn config_file_presets_flags() {
    let dir = scratch("config");
    let conf = dir.join("k.conf");
    std::fs::write(&conf, "n = 2\n[compile]\nformat = text\n").unwrap();
    let o = kitaev(&["--config", conf.to_str().unwrap(), "compile"]);
    assert!(stdout(&o).starts_with("qubits 2;"));
    let o = kitaev(&["--config", conf.to_str().unwrap(), "compile", "--n", "4"]);
    assert!(stdout(&o).starts_with("qubits 4;"));
    std::fs::write(&conf, "[compile]\nshots = 3\n").unwrap();
    assert_eq!(kitaev(&["--config", conf.to_str().unwrap(), "compile"]).status.code(), Some(64));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn plot_flag_writes_svg() {
    let dir = scratch("plot");
    let out = dir.join("c.csv");
    let o = kitaev(&["corr", "--plot", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(dir.join("c.svg")).unwrap().starts_with("<svg"));
    std::fs::remove_dir_all(dir).unwrap();
}
