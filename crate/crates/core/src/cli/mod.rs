mod args;
mod config;
mod plot;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::Parser;

use args::{ChainArgs, CircuitFormat, Cli, Command, ParityMethod};
use kitaev_gaussian::compiler::{compile_eigenstate_with, CompileOptions, ExcitationSet};
use kitaev_gaussian::experiments::{
    ed_parity_scan, fit_quadratic, fmt_float, load_measurement_csv, mean_absolute_error, noise_sweep, output_file_name, parity_scan,
    r_squared, site_correlation_profile, sweep_spectrum_with, write_sweep_csv, Measurement, MeasurementTable, MuGrid, Observable,
    SweepOptions, SweepResult,
};
use kitaev_gaussian::fermion::ChainSpec;
use kitaev_gaussian::simulator::NoiseModel;
use kitaev_gaussian::topology::{bdg_excitation_energies, critical_mu, winding_number, WindingConfig};
use kitaev_gaussian::Error;
use plot::{line_plot, Series};

pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidGrid(_) | Error::InvalidConfig(_) => CliError::Usage(e.to_string()),
            e => CliError::Domain(e),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Domain(Error::Io(e))
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(args: Vec<OsString>) -> i32 {
    let args = match config_path(&args) {
        Some(path) => match config::apply_config(args, &path) {
            Ok(a) => a,
            Err(e) => return report(e),
        },
        None => args,
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(CliError::Domain(Error::Io(e))) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(e) => report(e),
    }
}

fn report(e: CliError) -> i32 {
    match e {
        CliError::Usage(m) => {
            eprintln!("error: {m}");
            EXIT_USAGE
        }
        CliError::Domain(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

/// `--config` from the argument list, else `KITAEV_CONFIG`.
fn config_path(args: &[OsString]) -> Option<PathBuf> {
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    std::env::var_os("KITAEV_CONFIG").map(PathBuf::from)
}

fn chain(c: &ChainArgs, mu: f64) -> CliResult<ChainSpec> {
    ChainSpec::uniform(c.n, mu, c.t, c.delta).map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> CliResult<Vec<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse().map_err(|_| CliError::Usage(format!("bad {what} {p:?}"))))
        .collect()
}

/// `all`, or bracketed sets such as `[],[0],[1,2]`.
fn parse_labels(s: &str, n: usize) -> CliResult<Vec<ExcitationSet>> {
    let s = s.trim();
    if s == "all" {
        return Ok(ExcitationSet::all(n));
    }
    let mut out = Vec::new();
    let mut rest = s;
    while let Some(open) = rest.find('[') {
        let close = rest[open..].find(']').ok_or_else(|| CliError::Usage(format!("unbalanced brackets in {s:?}")))? + open;
        out.push(rest[open..=close].parse::<ExcitationSet>()?);
        rest = &rest[close + 1..];
    }
    if out.is_empty() {
        return Err(CliError::Usage(format!("labels must be `all` or bracketed sets like [0],[1,2]; got {s:?}")));
    }
    for l in &out {
        l.check_bound(n).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(out)
}

fn parse_noise(s: &str) -> CliResult<NoiseModel> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [t2, tau, b, seed] = parts.as_slice() else {
        return Err(CliError::Usage(format!("--noise expects t2,tau,b,seed; got {s:?}")));
    };
    let f = |v: &str| v.parse::<f64>().map_err(|_| CliError::Usage(format!("bad number {v:?} in --noise")));
    let seed = seed.parse::<u64>().map_err(|_| CliError::Usage(format!("bad seed {seed:?} in --noise")))?;
    NoiseModel::new(f(t2)?, f(tau)?, f(b)?, seed).map_err(|e| CliError::Usage(e.to_string()))
}

/// `None` or `-` selects standard output.
fn open_output(out: Option<&Path>) -> CliResult<Box<dyn Write>> {
    match out {
        None => Ok(Box::new(io::stdout().lock())),
        Some(p) if p.as_os_str() == "-" => Ok(Box::new(io::stdout().lock())),
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            Ok(Box::new(BufWriter::new(File::create(p)?)))
        }
    }
}

fn default_path(out: Option<PathBuf>, out_dir: &Path, experiment: &str, n: usize, t: f64, delta: f64) -> PathBuf {
    out.unwrap_or_else(|| out_dir.join(output_file_name(experiment, n, t, delta)))
}

fn write_plot(csv_path: &Path, svg: String) -> CliResult<()> {
    if csv_path.as_os_str() == "-" {
        return Err(CliError::Usage("--plot needs a file output".into()));
    }
    let path = csv_path.with_extension("svg");
    std::fs::write(&path, svg)?;
    eprintln!("plot written to {}", path.display());
    Ok(())
}

fn execute(cli: Cli) -> CliResult<()> {
    let out_dir = cli.out_dir;
    match cli.command {
        Command::Compile { chain: c, mu, excite, format, allow_degenerate, out } => {
            let spec = chain(&c, mu)?;
            let set: ExcitationSet = excite.parse()?;
            set.check_bound(c.n).map_err(|e| CliError::Usage(e.to_string()))?;
            let opts = CompileOptions { allow_degenerate, ..Default::default() };
            let circuit = compile_eigenstate_with(&spec, &set, opts)?;
            let text = match format {
                CircuitFormat::Json => circuit.to_json() + "\n",
                CircuitFormat::Text => circuit.to_text(),
            };
            open_output(out.as_deref())?.write_all(text.as_bytes())?;
            Ok(())
        }
        Command::Sweep { chain: c, observables, grid, labels, noise, shots, seed, out, plot } => {
            let spec = chain(&c, 1e-8)?;
            let grid: MuGrid = grid.parse()?;
            let labels = parse_labels(&labels, c.n)?;
            let observables: Vec<Observable> = parse_list(&observables, "observable")?;
            let opts = SweepOptions { noise: noise.as_deref().map(parse_noise).transpose()?, shots, seed, ..Default::default() };
            let sweep = sweep_spectrum_with(&spec, &grid, &labels, &opts)?;
            for r in sweep.failed_rows() {
                eprintln!("warning: μ={} {}: {}", r.mu, r.label, r.error.as_deref().unwrap_or(""));
            }
            let path = default_path(out, &out_dir, "sweep", c.n, c.t, c.delta);
            write_sweep_csv(&sweep, &observables, open_output(Some(&path))?)?;
            eprintln!("{} (μ, label) rows written to {}", sweep.rows.len(), path.display());
            if plot {
                write_plot(&path, sweep_plot(&sweep, c.n))?;
            }
            Ok(())
        }
        Command::Noise { chain: c, mu, taus, t2, jitter, seed, labels, out, plot } => {
            let spec = chain(&c, mu)?;
            let labels = parse_labels(&labels, c.n)?;
            let ratios: Vec<f64> = parse_list(&taus, "tau ratio")?;
            let ns = noise_sweep(&spec, &labels, &ratios, t2, jitter, seed)?;
            let mut table = MeasurementTable::default();
            for (ratio, sweep) in ns.ratios_and_sweeps() {
                for r in &sweep.rows {
                    if let (Some(v), Some(noisy)) = (r.values, r.noisy) {
                        let row =
                            |obs: String, value| Measurement { mu: r.mu, label: r.label.clone(), observable: obs, value, stderr: None };
                        if ratio == ratios[0] {
                            table.rows.push(row("energy".into(), v.energy));
                        }
                        table.rows.push(row(format!("noisy_energy_tau_{ratio}"), noisy.energy));
                    }
                }
            }
            let path = default_path(out, &out_dir, "noise", c.n, c.t, c.delta);
            table.write(open_output(Some(&path))?)?;
            let bdg: Vec<String> = ns.bdg.iter().map(|e| fmt_float(*e)).collect();
            println!("bdg quasiparticle energies: {}", bdg.join(" "));
            eprintln!("{} rows written to {}", table.len(), path.display());
            if plot {
                let series = labels
                    .iter()
                    .map(|l| Series {
                        name: l.to_string(),
                        points: ns
                            .ratios_and_sweeps()
                            .map(|(x, s)| (x, s.rows_for(l).next().and_then(|r| r.noisy).map_or(f64::NAN, |v| v.energy)))
                            .collect(),
                    })
                    .collect::<Vec<_>>();
                write_plot(&path, line_plot("Dephased energies", "tau / T2*", "E", &series))?;
            }
            Ok(())
        }
        Command::ParityScan { n, t, delta, grid, method, out, plot } => {
            let deltas: Vec<f64> = parse_list(&delta, "delta")?;
            let grid: MuGrid = grid.parse()?;
            let scan = match method {
                ParityMethod::Compiled => parity_scan(t, &deltas, &grid, n)?,
                ParityMethod::Exact => ed_parity_scan(t, &deltas, &grid, n)?,
            };
            let mut table = MeasurementTable::default();
            for (d, &delta) in deltas.iter().enumerate() {
                for (i, &mu) in scan.mu.iter().enumerate() {
                    table.rows.push(Measurement {
                        mu,
                        label: ExcitationSet::empty(),
                        observable: format!("parity_delta_{delta}"),
                        value: scan.parity[d][i] as f64,
                        stderr: None,
                    });
                }
                let flips: Vec<String> = scan.flips(d).iter().map(|f| format!("{f:.6e}")).collect();
                let pred = &scan.predictions[d];
                let predicted = if pred.imaginary {
                    "none (imaginary root, t² < Δ²)".to_string()
                } else {
                    pred.values.iter().map(|v| format!("±{v:.6}")).collect::<Vec<_>>().join(" ")
                };
                println!("delta={delta}: flips at [{}]; predicted {predicted}", flips.join(", "));
            }
            let path = default_path(out, &out_dir, "parity", n, t, deltas.first().copied().unwrap_or(0.0));
            table.write(open_output(Some(&path))?)?;
            eprintln!("{} rows written to {}", table.len(), path.display());
            if plot {
                let series = deltas
                    .iter()
                    .enumerate()
                    .map(|(d, delta)| Series {
                        name: format!("Δ={delta}"),
                        points: scan.mu.iter().zip(&scan.parity[d]).map(|(&m, &p)| (m, p as f64)).collect(),
                    })
                    .collect::<Vec<_>>();
                write_plot(&path, line_plot("Ground-state parity", "mu", "P", &series))?;
            }
            Ok(())
        }
        Command::Corr { chain: c, mu, labels, out, plot } => {
            let spec = chain(&c, 1e-8)?;
            let mus: Vec<f64> = parse_list(&mu, "mu")?;
            let labels = parse_labels(&labels, c.n)?;
            let rows = site_correlation_profile(&spec, &labels, &mus)?;
            let table = MeasurementTable {
                rows: rows
                    .iter()
                    .map(|r| Measurement {
                        mu: r.mu,
                        label: r.label.clone(),
                        observable: format!("site_corr_{}", r.m),
                        value: r.value,
                        stderr: None,
                    })
                    .collect(),
            };
            let path = default_path(out, &out_dir, "corr", c.n, c.t, c.delta);
            table.write(open_output(Some(&path))?)?;
            eprintln!("{} rows written to {}", table.len(), path.display());
            if plot {
                let mut series = Vec::new();
                for l in &labels {
                    for &m in &mus {
                        let points = rows.iter().filter(|r| &r.label == l && r.mu == m).map(|r| (r.m as f64, r.value)).collect();
                        series.push(Series { name: format!("{l} μ={m}"), points });
                    }
                }
                write_plot(&path, line_plot("Site correlation", "m", "<i g1 gm>", &series))?;
            }
            Ok(())
        }
        Command::Topo { chain: c, grid, k_samples, out } => {
            let cfg = WindingConfig::new(k_samples).map_err(|e| CliError::Usage(e.to_string()))?;
            let grid: MuGrid = grid.parse()?;
            println!("mu_cr = {}", critical_mu(c.n, c.t));
            let mut table = MeasurementTable::default();
            let mut w = open_output(out.as_deref())?;
            if out.is_none() {
                writeln!(w, "mu winding")?;
            }
            for &mu in grid.values() {
                let value = match winding_number(mu, c.t, c.delta, c.n, &cfg) {
                    Ok(v) => v as f64,
                    Err(Error::BoundaryPoint) => f64::NAN,
                    Err(e) => return Err(e.into()),
                };
                if out.is_none() {
                    let shown = if value.is_nan() { "boundary".to_string() } else { format!("{value}") };
                    writeln!(w, "{mu} {shown}")?;
                }
                let spec = chain(&c, mu)?;
                let row = |observable: String, value| Measurement { mu, label: ExcitationSet::empty(), observable, value, stderr: None };
                table.rows.push(row("winding".into(), value));
                for (k, e) in bdg_excitation_energies(&spec).into_iter().enumerate() {
                    table.rows.push(row(format!("bdg_{k}"), e));
                }
            }
            if out.is_some() {
                table.write(w)?;
            }
            Ok(())
        }
        Command::Fit { chain: c, csv, label, observable, grid } => {
            let label: ExcitationSet = label.parse()?;
            let (xs, ys): (Vec<f64>, Vec<f64>) = match csv {
                Some(path) => {
                    let table = load_measurement_csv(path)?;
                    table.filter(&observable).rows.iter().filter(|m| m.label == label).map(|m| (m.mu, m.value.abs())).unzip()
                }
                None => {
                    let obs: Observable = observable.parse()?;
                    let spec = chain(&c, 1e-8)?;
                    let sweep = sweep_spectrum_with(&spec, &grid.parse()?, std::slice::from_ref(&label), &SweepOptions::default())?;
                    let table = MeasurementTable::from_sweep(&sweep, &[obs]).filter(obs.name());
                    table.rows.iter().map(|m| (m.mu, m.value.abs())).unzip()
                }
            };
            let fit = fit_quadratic(&xs, &ys)?;
            println!("points = {}", xs.len());
            println!("c0 = {}\nc1 = {}\nc2 = {}\nresidual = {}", fit.c0, fit.c1, fit.c2, fit.residual);
            Ok(())
        }
        Command::Compare { pred, meas, observable } => {
            let (mut pred, mut meas) = (load_measurement_csv(pred)?, load_measurement_csv(meas)?);
            if let Some(o) = &observable {
                pred = pred.filter(o);
                meas = meas.filter(o);
            }
            let pairs = meas.join(&pred);
            let x: Vec<f64> = pairs.iter().map(|(m, _)| m.value).collect();
            let y: Vec<f64> = pairs.iter().map(|(_, p)| p.value).collect();
            println!("pairs = {}", pairs.len());
            println!("ME = {}", mean_absolute_error(&x, &y)?);
            println!("R2 = {}", r_squared(&x, &y)?);
            Ok(())
        }
    }
}

fn sweep_plot(sweep: &SweepResult, n: usize) -> String {
    let series: Vec<Series> = sweep
        .meta
        .labels
        .iter()
        .map(|l| Series { name: l.to_string(), points: sweep.rows_for(l).map(|r| (r.mu, r.energy().unwrap_or(f64::NAN))).collect() })
        .collect();
    line_plot(&format!("Eigenstate energies, n = {n}"), "mu", "E", &series)
}
