use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "kitaev", version, about = "Exact eigenstate circuits and sweeps for finite Kitaev chains")]
pub struct Cli {
    /// File of `key = value` lines presetting any flag.
    #[arg(long, global = true, env = "KITAEV_CONFIG")]
    pub config: Option<PathBuf>,

    /// Directory for output files when `--out` is not given.
    #[arg(long, global = true, env = "KITAEV_OUT_DIR", default_value = ".")]
    pub out_dir: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

/// Uniform chain parameters.
#[derive(Debug, Clone, Args)]
pub struct ChainArgs {
    /// Number of sites.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Hopping amplitude.
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    pub t: f64,
    /// Pairing amplitude.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub delta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CircuitFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityMethod {
    /// Parity of the compiled ground-state circuit.
    Compiled,
    /// Lower of the two parity-sector ground energies from exact diagonalization.
    Exact,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile the circuit preparing one eigenstate.
    #[command(args_override_self = true)]
    Compile {
        #[command(flatten)]
        chain: ChainArgs,
        /// Chemical potential.
        #[arg(long, default_value_t = 1e-8, allow_negative_numbers = true)]
        mu: f64,
        /// Occupied quasiparticle modes, e.g. "0,2".
        #[arg(long, default_value = "")]
        excite: String,
        #[arg(long, value_enum, default_value_t = CircuitFormat::Json)]
        format: CircuitFormat,
        /// Compile even when mode energies are degenerate.
        #[arg(long)]
        allow_degenerate: bool,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Measure observables of eigenstates over a grid of chemical potentials.
    #[command(args_override_self = true)]
    Sweep {
        #[command(flatten)]
        chain: ChainArgs,
        /// Comma-separated subset of energy,parity,number,edge,site_corr.
        #[arg(long, default_value = "energy,parity,number,edge")]
        observables: String,
        /// `start:stop:points`, or `default` for 1e-8 and 0.155·k, k = 1..20.
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        grid: String,
        /// `all` or a list of excitation sets such as "[],[0],[1,2]".
        #[arg(long, default_value = "all")]
        labels: String,
        /// Pure dephasing as `t2,tau,b,seed`.
        #[arg(long)]
        noise: Option<String>,
        /// Also estimate each observable from this many shots per Pauli string.
        #[arg(long)]
        shots: Option<u64>,
        /// Seed for shot sampling and dephasing jitter.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV (`-` for standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an SVG plot of the energies next to the CSV.
        #[arg(long)]
        plot: bool,
    },
    /// Dephased energies at one chemical potential for several τ/T2*.
    #[command(args_override_self = true)]
    Noise {
        #[command(flatten)]
        chain: ChainArgs,
        #[arg(long, default_value_t = 1e-8, allow_negative_numbers = true)]
        mu: f64,
        /// Comma-separated τ/T2* ratios.
        #[arg(long, default_value = "0,0.5,1,1.5,2,2.5,3")]
        taus: String,
        #[arg(long, default_value_t = 1.0)]
        t2: f64,
        /// Jitter half-width b of the effective T2*.
        #[arg(long, default_value_t = 0.1)]
        jitter: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "all")]
        labels: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        plot: bool,
    },
    /// Ground-state parity over (Δ, μ) with the predicted switch points.
    #[command(name = "parity-scan", args_override_self = true)]
    ParityScan {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
        t: f64,
        /// Comma-separated pairing amplitudes.
        #[arg(long, default_value = "0.25,0.5,0.75,1", allow_hyphen_values = true)]
        delta: String,
        /// `start:stop:points`; negative μ allowed.
        #[arg(long, default_value = "-3.1:3.1:401", allow_hyphen_values = true)]
        grid: String,
        #[arg(long, value_enum, default_value_t = ParityMethod::Compiled)]
        method: ParityMethod,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        plot: bool,
    },
    /// Site correlation ⟨iγ1γm⟩ for m = 2..2n.
    #[command(args_override_self = true)]
    Corr {
        #[command(flatten)]
        chain: ChainArgs,
        /// Comma-separated chemical potentials.
        #[arg(long, default_value = "1e-8,1,2,3.1", allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value = "[0],[1,2]")]
        labels: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        plot: bool,
    },
    /// Critical chemical potential and winding numbers.
    #[command(args_override_self = true)]
    Topo {
        #[command(flatten)]
        chain: ChainArgs,
        /// Grid for the winding-number table.
        #[arg(long, default_value = "0:3:31", allow_hyphen_values = true)]
        grid: String,
        /// Momentum samples for the winding integral (odd, at least 101).
        #[arg(long, default_value_t = 4001)]
        k_samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quadratic fit of |edge correlation| against μ.
    #[command(args_override_self = true)]
    Fit {
        #[command(flatten)]
        chain: ChainArgs,
        /// Measurement CSV to fit; an ideal sweep is used when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value = "[0]")]
        label: String,
        #[arg(long, default_value = "edge")]
        observable: String,
        #[arg(long, default_value = "default", allow_hyphen_values = true)]
        grid: String,
    },
    /// Mean absolute error and R² of measurements against predictions.
    #[command(args_override_self = true)]
    Compare {
        /// Predictions CSV.
        #[arg(long)]
        pred: PathBuf,
        /// Measurements CSV.
        #[arg(long)]
        meas: PathBuf,
        /// Restrict to one observable.
        #[arg(long)]
        observable: Option<String>,
    },
}
