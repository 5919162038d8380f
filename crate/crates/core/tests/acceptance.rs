//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use common::{fock_kitaev, max_abs_diff, sorted_eigenvalues, Lcg};
use kitaev_gaussian::compiler::{CompileOptions, ExcitationSet, GaussianModel};
use kitaev_gaussian::experiments::*;
use kitaev_gaussian::fermion::{kitaev_pauli, ChainSpec};
use kitaev_gaussian::simulator::*;
use kitaev_gaussian::topology::*;
use kitaev_gaussian::Error;
use nalgebra::DVector;
use num_complex::Complex64;

struct Outcome {
    pass: bool,
    detail: String,
}

type Check = fn() -> Outcome;

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn set(s: &str) -> ExcitationSet {
    s.parse().unwrap()
}

fn reference_chain(mu: f64) -> ChainSpec {
    ChainSpec::uniform(3, mu, -1.0, 1.0).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut rng = Lcg(2024);
    let (mut worst_e, mut worst_r, mut points) = (0.0f64, 0.0f64, 0);
    for n in 2..=6 {
        let mut done = 0;
        while done < 50 {
            let spec = ChainSpec::uniform(n, rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)).unwrap();
            let model = match GaussianModel::from_spec(&spec, CompileOptions::default()) {
                Ok(m) => m,
                Err(Error::DegenerateHamiltonian { .. }) => continue,
                Err(e) => return outcome(false, format!("compile error {e}")),
            };
            let h = fock_kitaev(&spec);
            let hp = kitaev_pauli(&spec);
            let mut energies = Vec::new();
            for label in ExcitationSet::all(n) {
                let psi = apply_circuit(&model.circuit(&label).unwrap());
                let e = expectation(&hp, &psi).unwrap();
                let v = DVector::from_column_slice(psi.amplitudes());
                worst_r = worst_r.max((&h * &v - &v * Complex64::new(e, 0.0)).norm());
                energies.push(e);
            }
            energies.sort_by(f64::total_cmp);
            worst_e = worst_e.max(max_abs_diff(&energies, &sorted_eigenvalues(&h)));
            done += 1;
            points += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        worst_e < 1e-7 && worst_r < 1e-7 && secs < 120.0,
        format!("{points} chains, n=2..6: max |ΔE| = {worst_e:.2e}, max ‖Hψ−Eψ‖ = {worst_r:.2e}, {secs:.1} s"),
    )
}

const TABLE_MU: [f64; 10] = [1e-8, 0.155, 0.310, 0.465, 0.620, 0.775, 0.930, 1.085, 1.240, 1.395];
const TABLE_ANGLES: [[f64; 6]; 10] = [
    [0.5, 0.304, 0.333, 0.333, 0.304, 0.250],
    [0.5, 0.317, 0.337, 0.314, 0.301, 0.257],
    [0.5, 0.327, 0.342, 0.294, 0.298, 0.264],
    [0.5, 0.334, 0.347, 0.272, 0.294, 0.273],
    [0.5, 0.338, 0.353, 0.249, 0.290, 0.282],
    [0.5, 0.339, 0.359, 0.227, 0.286, 0.293],
    [0.5, 0.339, 0.366, 0.205, 0.282, 0.303],
    [0.5, 0.337, 0.372, 0.186, 0.270, 0.313],
    [0.5, 0.334, 0.379, 0.169, 0.275, 0.324],
    [0.5, 0.331, 0.385, 0.154, 0.273, 0.334],
];
const TABLE_DELTA_PERCENT: [f64; 6] = [0.0, 0.9, 1.5, 5.2, 0.9, 2.4];
/// Chemical potential against which the δ row is measured.
const DELTA_MU: f64 = 1.24;

fn tabulated_angles() -> Outcome {
    let mut failures = Vec::new();
    let mut worst = 0.0f64;
    for (mu, row) in TABLE_MU.iter().zip(TABLE_ANGLES) {
        let c = kitaev_gaussian::compiler::compile_eigenstate(&reference_chain(*mu), &ExcitationSet::empty()).unwrap();
        let mut got: Vec<f64> = c.ryxxy_angles().iter().map(|a| a.abs() / PI).collect();
        let mut want = row.to_vec();
        got.sort_by(f64::total_cmp);
        want.sort_by(f64::total_cmp);
        let d = max_abs_diff(&got, &want);
        worst = worst.max(d);
        if d > 5e-3 {
            failures.push(format!("μ={mu}: off by {d:.4}π"));
        }
    }
    let dev = kitaev_gaussian::compiler::gate_angle_deviation(&reference_chain(1e-8), &reference_chain(DELTA_MU)).unwrap();
    let delta_pct: Vec<f64> = dev.iter().map(|d| 100.0 * d / PI).collect();
    let delta_err = max_abs_diff(&delta_pct, &TABLE_DELTA_PERCENT);
    if delta_err > 0.2 {
        failures.push(format!("δ row off by {delta_err:.2} pp"));
    }
    let shown: Vec<String> = delta_pct.iter().map(|d| format!("{d:.2}")).collect();
    let summary = format!("max angle deviation {worst:.4}π; δ row [{}]% (max err {delta_err:.2} pp)", shown.join(", "));
    if failures.is_empty() {
        outcome(true, summary)
    } else {
        outcome(false, format!("{summary}; {}", failures.join("; ")))
    }
}

fn degeneracy() -> Outcome {
    let labels: Vec<ExcitationSet> = ["[]", "[0]", "[1,2]", "[0,1,2]"].iter().map(|s| set(s)).collect();
    let sweep = sweep_spectrum(&reference_chain(1e-8), &MuGrid::new(vec![1e-8]).unwrap(), &labels, None).unwrap();
    let e: Vec<f64> = sweep.rows.iter().map(|r| r.energy().unwrap()).collect();
    let (a, b) = ((e[0] - e[1]).abs(), (e[2] - e[3]).abs());
    outcome(a < 1e-6 && b < 1e-6, format!("|E([])−E([0])| = {a:.2e}, |E([1,2])−E([0,1,2])| = {b:.2e}"))
}

fn bdg_consistency() -> Outcome {
    let mut rng = Lcg(77);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let n = 2 + (rng.uniform(0.0, 6.0) as usize);
        let spec = ChainSpec::uniform(n, rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)).unwrap();
        let model = GaussianModel::from_spec(&spec, CompileOptions { allow_degenerate: true, ..Default::default() }).unwrap();
        worst = worst.max(max_abs_diff(&bdg_excitation_energies(&spec), &model.quasiparticle_energies()));
    }
    let zeros = bdg_spectrum(&reference_chain(0.0)).iter().filter(|e| e.abs() < 1e-10).count();
    outcome(worst < 1e-10 && zeros == 2, format!("100 chains: max |Δε| = {worst:.2e}; zero modes at μ=0: {zeros}"))
}

/// Bisects the change of winding number between `lo` (topological) and `hi`.
fn winding_boundary(n: usize) -> f64 {
    let cfg = WindingConfig::default();
    let w = |mu: f64| winding_number(mu, -1.0, 1.0, n, &cfg);
    let (mut lo, mut hi) = (0.0, 3.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        match w(mid) {
            Ok(0) => hi = mid,
            Ok(_) => lo = mid,
            Err(_) => return mid,
        }
    }
    0.5 * (lo + hi)
}

fn critical_potential() -> Outcome {
    let mut worst = 0.0f64;
    for n in 2..=8 {
        worst = worst.max((winding_boundary(n) - 2.0 * (1.0 - 1.0 / n as f64)).abs());
    }
    let b3 = winding_boundary(3);
    outcome(worst < 1e-3 && (b3 - 4.0 / 3.0).abs() < 1e-3, format!("n=2..8 max boundary error {worst:.2e}; n=3 boundary {b3:.6}"))
}

fn parity_switches() -> Outcome {
    let grid = MuGrid::default_sweep();
    let step = DEFAULT_STEP;
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in [3usize, 4] {
        for delta in [0.25, 0.5, 0.75] {
            let scan = ed_parity_scan(-1.0, &[delta], &grid, n).unwrap();
            let flips = scan.flips(0);
            let predicted = &scan.predictions[0].values;
            let ok = flips.len() == predicted.len() && flips.iter().zip(predicted).all(|(f, p)| (f - p).abs() <= step);
            checked += predicted.len();
            if !ok {
                failures.push(format!("n={n} Δ={delta}: {flips:?} vs {predicted:?}"));
            }
        }
    }
    let fine = parity_scan(-1.0, &[1.0], &MuGrid::fine_zero_crossing(), 3).unwrap();
    let f = fine.flips(0);
    if !(f.len() == 1 && f[0].abs() <= 5e-8) {
        failures.push(format!("Δ=1 fine-grid flips {f:?}"));
    }
    let summary = format!("{checked} predicted switches within one step; Δ=1 flip at {:.2e}", f.first().copied().unwrap_or(f64::NAN));
    outcome(failures.is_empty(), if failures.is_empty() { summary } else { failures.join("; ") })
}

fn edge_correlation() -> Outcome {
    let labels = [set("[0]"), set("[1,2]")];
    let sweep = sweep_spectrum(&reference_chain(1e-8), &MuGrid::default_sweep(), &labels, None).unwrap();
    let mut notes = Vec::new();
    let mut pass = true;
    for l in &labels {
        let edge: Vec<f64> = sweep.rows_for(l).map(|r| r.edge_corr().unwrap().abs()).collect();
        let at_zero = (edge[0] - 1.0).abs();
        let monotone = edge.windows(2).all(|w| w[1] <= w[0]);
        let fit = fit_edge_decay(&sweep, l).unwrap();
        pass &= at_zero < 1e-6 && monotone && fit.residual < 0.05;
        notes.push(format!("{l}: |1−|C(0⁺)|| = {at_zero:.1e}, monotone {monotone}, fit residual {:.4}", fit.residual));
    }
    match std::env::var_os("KITAEV_ARCHIVE_CSV") {
        Some(path) => match load_measurement_csv(&path) {
            Ok(table) => {
                let (xs, ys): (Vec<f64>, Vec<f64>) =
                    table.filter("edge").rows.iter().filter(|m| m.label == set("[0]")).map(|m| (m.mu, m.value.abs())).unzip();
                match fit_quadratic(&xs, &ys) {
                    Ok(f) => {
                        let close = [(f.c0, 0.57), (f.c1, -0.18), (f.c2, 0.03)].iter().all(|(a, b)| (a - b).abs() <= 0.005);
                        pass &= close;
                        notes.push(format!("archive fit ({:.3}, {:.3}, {:.3})", f.c0, f.c1, f.c2));
                    }
                    Err(e) => {
                        pass = false;
                        notes.push(format!("archive fit failed: {e}"));
                    }
                }
            }
            Err(e) => {
                pass = false;
                notes.push(format!("archive unreadable: {e}"));
            }
        },
        None => notes.push("archive comparison not run (KITAEV_ARCHIVE_CSV unset)".into()),
    }
    outcome(pass, notes.join("; "))
}

fn noise_model() -> Outcome {
    let start = Instant::now();
    let mut rng = Lcg(9);
    let mut composability = 0.0f64;
    for seed in 0..20 {
        let amps: Vec<Complex64> = (0..8).map(|_| Complex64::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))).collect();
        let norm = amps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let rho = to_density(&StateVector::from_amplitudes(amps.iter().map(|c| c / norm).collect()).unwrap());
        let (t1, t2) = (rng.uniform(0.0, 2.0), rng.uniform(0.0, 2.0));
        let m = |tau| NoiseModel::new(1.0, tau, 0.1, seed).unwrap();
        composability = composability.max((dephase(&dephase(&rho, &m(t1)), &m(t2)).rho() - dephase(&rho, &m(t1 + t2)).rho()).norm());
    }
    let ratios: Vec<f64> = (0..=30).map(|i| 0.1 * i as f64).collect();
    let pair = [set("[]"), set("[0]"), set("[1,2]"), set("[0,1,2]")];
    let ns = noise_sweep(&reference_chain(1e-8), &pair, &ratios, 1.0, 0.0, 3).unwrap();
    let split = ns
        .sweeps
        .iter()
        .map(|s| {
            let e: Vec<f64> = s.rows.iter().map(|r| r.noisy.unwrap().energy).collect();
            (e[0] - e[1]).abs().max((e[2] - e[3]).abs())
        })
        .fold(0.0, f64::max);
    let trivial = noise_sweep(&reference_chain(3.1), &ExcitationSet::all(3), &ratios, 1.0, 0.1, 3).unwrap();
    let maxima: Vec<f64> =
        trivial.sweeps.iter().map(|s| s.rows.iter().map(|r| r.noisy.unwrap().energy.abs()).fold(0.0, f64::max)).collect();
    let non_increasing = maxima.windows(2).all(|w| w[1] <= w[0] + 1e-12);
    let secs = start.elapsed().as_secs_f64();
    outcome(
        composability < 1e-12 && split < 1e-6 && non_increasing,
        format!("composability {composability:.1e}; MZM split ≤ {split:.1e} for τ/T2* ∈ [0,3]; trivial max|E| non-increasing {non_increasing} ({:.3} → {:.3}); {secs:.2} s", maxima[0], maxima[maxima.len() - 1]),
    )
}

fn shot_sampling() -> Outcome {
    let spec = reference_chain(0.775);
    let psi = apply_circuit(&kitaev_gaussian::compiler::compile_eigenstate(&spec, &set("[0]")).unwrap());
    let h = kitaev_pauli(&spec);
    let exact = expectation(&h, &psi).unwrap();
    let inside = (0..100u64)
        .filter(|&seed| {
            let (est, err) = sample_expectation(&psi, &h, 8192, seed).unwrap();
            (est - exact).abs() <= 5.0 * err
        })
        .count();
    outcome(inside >= 99, format!("{inside}/100 seeds within 5σ of the exact energy {exact:.6}"))
}

fn number_saturation() -> Outcome {
    let sweep = sweep_spectrum(&reference_chain(1e-8), &MuGrid::new(vec![3.1]).unwrap(), &[set("[0]"), set("[1,2]")], None).unwrap();
    let n0 = sweep.rows[0].values.unwrap().number;
    let n12 = sweep.rows[1].values.unwrap().number;
    outcome((n0 - 1.0).abs() < 0.05 && (n12 - 2.0).abs() < 0.05, format!("⟨N⟩([0]) = {n0:.4}, ⟨N⟩([1,2]) = {n12:.4} at μ = 3.1"))
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("oracle equivalence", oracle_equivalence),
        ("tabulated gate angles", tabulated_angles),
        ("topological degeneracy", degeneracy),
        ("BdG consistency", bdg_consistency),
        ("critical chemical potential", critical_potential),
        ("parity switches", parity_switches),
        ("edge correlation", edge_correlation),
        ("noise model", noise_model),
        ("shot sampling", shot_sampling),
        ("particle-number saturation", number_saturation),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!("criterion {:>2} {} {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
