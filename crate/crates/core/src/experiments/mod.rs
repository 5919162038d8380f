//! Sweeps over chemical potential, parity maps, correlation profiles, fits,
//! comparison metrics and CSV exchange.

mod csv_io;
mod fit;
mod grid;
mod metrics;
mod sweep;

pub use csv_io::{
    fmt_float, load_measurement_csv, output_file_name, write_sweep_csv, Measurement, MeasurementTable, Observable, CSV_HEADER,
};
pub use fit::{fit_edge_decay, fit_quadratic, QuadraticFit};
pub use grid::{MuGrid, DEFAULT_STEP, DEFAULT_STEPS, MU_ZERO_PLUS};
pub use metrics::{mean_absolute_error, r_squared};
pub use sweep::{
    ed_parity_scan, noise_sweep, parity_scan, site_correlation_profile, sweep_spectrum, sweep_spectrum_with, CorrelationRow, Estimate,
    NoiseSweep, ObservableValues, ParityScan, SampledValues, SweepMeta, SweepOptions, SweepResult, SweepRow,
};
