mod common;

use common::{fock_kitaev, max_abs_diff, Lcg};
use kitaev_gaussian::compiler::{CompileOptions, GaussianModel};
use kitaev_gaussian::experiments::{ed_parity_scan, MuGrid};
use kitaev_gaussian::fermion::ChainSpec;
use kitaev_gaussian::topology::*;
use kitaev_gaussian::Error;

#[test]
fn bdg_matches_compiler_energies() {
    let mut rng = Lcg(5);
    for _ in 0..40 {
        let n = 2 + (rng.uniform(0.0, 5.0) as usize);
        let spec = ChainSpec::uniform(n, rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)).unwrap();
        let model = GaussianModel::from_spec(&spec, CompileOptions { allow_degenerate: true, ..Default::default() }).unwrap();
        let bdg = bdg_excitation_energies(&spec);
        assert!(max_abs_diff(&bdg, &model.quasiparticle_energies()) < 1e-10);
        // ground energy c0 − Σε agrees with exact diagonalization
        let ev = common::sorted_eigenvalues(&fock_kitaev(&spec));
        assert!((ev[0] - model.ground_energy()).abs() < 1e-9);
    }
}

#[test]
fn bdg_spectrum_is_symmetric() {
    let spec = ChainSpec::uniform(4, 0.3, -1.0, 0.8).unwrap();
    let ev = bdg_spectrum(&spec);
    assert_eq!(ev.len(), 8);
    for i in 0..4 {
        assert!((ev[i] + ev[7 - i]).abs() < 1e-12);
    }
}

#[test]
fn sweet_spot_has_two_zero_modes() {
    let ev = bdg_spectrum(&ChainSpec::uniform(3, 0.0, -1.0, 1.0).unwrap());
    assert_eq!(ev.iter().filter(|e| e.abs() < 1e-12).count(), 2);
}

#[test]
fn winding_boundary_follows_effective_couplings() {
    let cfg = WindingConfig::default();
    for n in 2..=8 {
        let mc = critical_mu(n, -1.0);
        assert!((mc - 2.0 * (1.0 - 1.0 / n as f64)).abs() < 1e-15);
        assert_eq!(winding_number(mc - 1e-3, -1.0, 1.0, n, &cfg).unwrap().abs(), 1);
        assert_eq!(winding_number(mc + 1e-3, -1.0, 1.0, n, &cfg).unwrap(), 0);
        assert_eq!(winding_number(-(mc - 1e-3), -1.0, 1.0, n, &cfg).unwrap().abs(), 1);
        assert!(matches!(winding_number(mc, -1.0, 1.0, n, &cfg), Err(Error::BoundaryPoint)));
    }
    assert!((critical_mu(3, -1.0) - 4.0 / 3.0).abs() < 1e-15);
}

#[test]
fn winding_is_stable_in_sample_count() {
    for k in [101, 401, 4001] {
        let cfg = WindingConfig::new(k).unwrap();
        for mu in [0.0, 0.5, 1.2, 1.4, 3.0] {
            assert_eq!(
                winding_number(mu, -1.0, 0.7, 3, &cfg).unwrap(),
                winding_number(mu, -1.0, 0.7, 3, &WindingConfig::default()).unwrap()
            );
        }
    }
    assert!(WindingConfig::new(100).is_err());
    assert!(WindingConfig::new(99).is_err());
    assert!(matches!(winding_number(0.5, -1.0, 0.0, 3, &WindingConfig::default()), Err(Error::BoundaryPoint)));
}

#[test]
fn parity_switches_match_exact_diagonalization() {
    let grid = MuGrid::linspace(1e-8, 3.1, 311).unwrap();
    for n in [3usize, 4, 5] {
        for delta in [0.25, 0.5, 0.75] {
            let scan = ed_parity_scan(-1.0, &[delta], &grid, n).unwrap();
            let flips = scan.flips(0);
            let predicted = parity_switch_mu(-1.0, delta, n).values;
            assert_eq!(flips.len(), predicted.len(), "n={n} Δ={delta}: {flips:?} vs {predicted:?}");
            for (f, p) in flips.iter().zip(&predicted) {
                assert!((f - p).abs() <= grid.max_step(), "n={n} Δ={delta}");
            }
        }
    }
}

#[test]
fn parity_switch_formula_cases() {
    let p = parity_switch_mu(-1.0, 0.5, 3);
    assert_eq!(p.values.len(), 1);
    assert!((p.values[0] - 1.224_744_871_391_589).abs() < 1e-12);
    assert_eq!(parity_switch_mu(-1.0, 1.0, 3).values, vec![0.0]);
    let im = parity_switch_mu(-1.0, 1.25, 3);
    assert!(im.imaginary && im.values.is_empty());
    assert_eq!(parity_switch_mu(-1.0, 0.5, 4).values.len(), 2);
}
