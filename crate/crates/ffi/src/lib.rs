//! C ABI for compiling and simulating Kitaev-chain eigenstate circuits.
//!
//! Objects are opaque handles created by `*_new`/`*_compile` and released with
//! the matching `*_free`. Every fallible call returns a [`KgStatus`]; the
//! message of the last failure on the calling thread is available from
//! [`kg_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use kitaev_gaussian::compiler::{CompileOptions, ExcitationSet, Gate, GaussianCircuit, GaussianModel};
use kitaev_gaussian::fermion::ChainSpec;
use kitaev_gaussian::observables::measure_all;
use kitaev_gaussian::simulator::apply_circuit;
use kitaev_gaussian::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Degenerate = 3,
    IndexOutOfRange = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KgGateKind {
    X = 0,
    Rz = 1,
    Ryxxy = 2,
}

/// One gate; `q1` equals `q0` for single-qubit gates and `angle` is zero for X.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KgGate {
    pub kind: KgGateKind,
    pub q0: usize,
    pub q1: usize,
    pub angle: f64,
}

/// Ideal expectation values of a prepared eigenstate.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct KgMeasurement {
    pub energy: f64,
    pub parity: f64,
    pub number: f64,
    pub edge_corr: f64,
}

/// Diagonalized uniform Kitaev chain.
pub struct KgModel {
    model: GaussianModel,
    spec: ChainSpec,
}

/// Compiled eigenstate circuit.
pub struct KgCircuit {
    circuit: GaussianCircuit,
}

thread_local! {
    static LAST_ERROR: RefCell<Vec<u8>> = const { RefCell::new(Vec::new()) };
}

fn set_error(msg: &str) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.as_bytes().to_vec());
}

fn fail(status: KgStatus, msg: &str) -> KgStatus {
    set_error(msg);
    status
}

fn from_error(e: &Error) -> KgStatus {
    let status = match e {
        Error::DegenerateHamiltonian { .. } => KgStatus::Degenerate,
        Error::IndexOutOfRange { .. } => KgStatus::IndexOutOfRange,
        Error::InvalidSpec(_) | Error::Parse(_) | Error::DimensionCap { .. } => KgStatus::InvalidArgument,
        _ => KgStatus::Internal,
    };
    fail(status, &e.to_string())
}

fn guard(f: impl FnOnce() -> KgStatus) -> KgStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(KgStatus::Internal, "panic inside kitaev_gaussian"))
}

unsafe fn excitation_set(modes: *const usize, count: usize) -> Result<ExcitationSet, KgStatus> {
    if count == 0 {
        return Ok(ExcitationSet::empty());
    }
    if modes.is_null() {
        return Err(fail(KgStatus::NullPointer, "modes is null"));
    }
    ExcitationSet::new(std::slice::from_raw_parts(modes, count).to_vec()).map_err(|e| from_error(&e))
}

/// Copies the last error message (NUL-terminated, truncated to fit) into
/// `buf` and returns the full message length excluding the terminator.
///
/// # Safety
/// `buf` must be null or point to `len` writable bytes.
#[no_mangle]
pub unsafe extern "C" fn kg_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn kg_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version string"),
    };
    VERSION.as_ptr()
}

/// Builds and diagonalizes a uniform chain of `n` sites. With
/// `allow_degenerate` zero, degenerate spectra return `KG_STATUS_DEGENERATE`.
///
/// # Safety
/// `out` must be a valid pointer; on success it receives a handle to release
/// with [`kg_model_free`].
#[no_mangle]
pub unsafe extern "C" fn kg_model_new(n: usize, mu: f64, t: f64, delta: f64, allow_degenerate: bool, out: *mut *mut KgModel) -> KgStatus {
    guard(|| {
        if out.is_null() {
            return fail(KgStatus::NullPointer, "out is null");
        }
        *out = ptr::null_mut();
        if !(mu.is_finite() && t.is_finite() && delta.is_finite()) {
            return fail(KgStatus::InvalidArgument, "parameters must be finite");
        }
        let spec = match ChainSpec::uniform(n, mu, t, delta) {
            Ok(s) => s,
            Err(e) => return from_error(&e),
        };
        match GaussianModel::from_spec(&spec, CompileOptions { allow_degenerate, ..Default::default() }) {
            Ok(model) => {
                *out = Box::into_raw(Box::new(KgModel { model, spec }));
                KgStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `model` must be null or a handle from [`kg_model_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kg_model_free(model: *mut KgModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// Number of quasiparticle modes, or 0 for a null handle.
///
/// # Safety
/// `model` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kg_model_n_modes(model: *const KgModel) -> usize {
    model.as_ref().map_or(0, |m| m.model.n_modes())
}

/// Writes the `n` quasiparticle energies in ascending order.
///
/// # Safety
/// `model` must be a live handle and `out` must point to `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn kg_model_quasiparticle_energies(model: *const KgModel, out: *mut f64, len: usize) -> KgStatus {
    guard(|| {
        let (Some(m), false) = (model.as_ref(), out.is_null()) else {
            return fail(KgStatus::NullPointer, "null argument");
        };
        let e = m.model.quasiparticle_energies();
        if len < e.len() {
            return fail(KgStatus::BufferTooSmall, &format!("need {} doubles", e.len()));
        }
        ptr::copy_nonoverlapping(e.as_ptr(), out, e.len());
        KgStatus::Ok
    })
}

/// Energy of the eigenstate with the listed modes occupied.
///
/// # Safety
/// `model` must be a live handle, `modes` must point to `count` values (or be
/// null with `count == 0`) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn kg_model_energy(model: *const KgModel, modes: *const usize, count: usize, out: *mut f64) -> KgStatus {
    guard(|| {
        let (Some(m), false) = (model.as_ref(), out.is_null()) else {
            return fail(KgStatus::NullPointer, "null argument");
        };
        let set = match excitation_set(modes, count) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match m.model.energy(&set) {
            Ok(e) => {
                *out = e;
                KgStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// Compiles the circuit preparing the eigenstate with the listed modes occupied.
///
/// # Safety
/// As for [`kg_model_energy`]; on success `*out` receives a handle to release
/// with [`kg_circuit_free`].
#[no_mangle]
pub unsafe extern "C" fn kg_model_compile(model: *const KgModel, modes: *const usize, count: usize, out: *mut *mut KgCircuit) -> KgStatus {
    guard(|| {
        let (Some(m), false) = (model.as_ref(), out.is_null()) else {
            return fail(KgStatus::NullPointer, "null argument");
        };
        *out = ptr::null_mut();
        let set = match excitation_set(modes, count) {
            Ok(s) => s,
            Err(s) => return s,
        };
        match m.model.circuit(&set) {
            Ok(circuit) => {
                *out = Box::into_raw(Box::new(KgCircuit { circuit }));
                KgStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}

/// # Safety
/// `circuit` must be null or a handle from [`kg_model_compile`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kg_circuit_free(circuit: *mut KgCircuit) {
    if !circuit.is_null() {
        drop(Box::from_raw(circuit));
    }
}

/// Number of gates, or 0 for a null handle.
///
/// # Safety
/// `circuit` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn kg_circuit_gate_count(circuit: *const KgCircuit) -> usize {
    circuit.as_ref().map_or(0, |c| c.circuit.gates().len())
}

/// # Safety
/// `circuit` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn kg_circuit_gate(circuit: *const KgCircuit, index: usize, out: *mut KgGate) -> KgStatus {
    guard(|| {
        let (Some(c), false) = (circuit.as_ref(), out.is_null()) else {
            return fail(KgStatus::NullPointer, "null argument");
        };
        let Some(g) = c.circuit.gates().get(index) else {
            return fail(KgStatus::IndexOutOfRange, &format!("gate {index} of {}", c.circuit.gates().len()));
        };
        *out = match *g {
            Gate::X { q } => KgGate { kind: KgGateKind::X, q0: q, q1: q, angle: 0.0 },
            Gate::Rz { q, beta } => KgGate { kind: KgGateKind::Rz, q0: q, q1: q, angle: beta },
            Gate::Ryxxy { q, alpha } => KgGate { kind: KgGateKind::Ryxxy, q0: q, q1: q + 1, angle: alpha },
        };
        KgStatus::Ok
    })
}

/// Writes the JSON form of the circuit, NUL-terminated, into `buf`. The
/// required size including the terminator is stored in `needed` when it is
/// non-null; a short buffer returns `KG_STATUS_BUFFER_TOO_SMALL`.
///
/// # Safety
/// `circuit` must be a live handle; `buf` must be null or point to `len`
/// writable bytes; `needed` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn kg_circuit_to_json(circuit: *const KgCircuit, buf: *mut c_char, len: usize, needed: *mut usize) -> KgStatus {
    guard(|| {
        let Some(c) = circuit.as_ref() else {
            return fail(KgStatus::NullPointer, "circuit is null");
        };
        let json = c.circuit.to_json();
        if !needed.is_null() {
            *needed = json.len() + 1;
        }
        if buf.is_null() || len < json.len() + 1 {
            return fail(KgStatus::BufferTooSmall, &format!("need {} bytes", json.len() + 1));
        }
        ptr::copy_nonoverlapping(json.as_ptr(), buf.cast::<u8>(), json.len());
        *buf.add(json.len()) = 0;
        KgStatus::Ok
    })
}

/// Simulates `circuit` and measures energy, parity, particle number and edge
/// correlation with respect to `model`'s Hamiltonian.
///
/// # Safety
/// Both handles must be live and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn kg_measure(model: *const KgModel, circuit: *const KgCircuit, out: *mut KgMeasurement) -> KgStatus {
    guard(|| {
        let (Some(m), Some(c), false) = (model.as_ref(), circuit.as_ref(), out.is_null()) else {
            return fail(KgStatus::NullPointer, "null argument");
        };
        if c.circuit.n_qubits() != m.spec.n() {
            return fail(KgStatus::InvalidArgument, "circuit and model sizes differ");
        }
        let psi = apply_circuit(&c.circuit);
        match measure_all(&psi, &m.spec, c.circuit.excitation_set()) {
            Ok(r) => {
                *out = KgMeasurement { energy: r.energy, parity: r.parity, number: r.number, edge_corr: r.edge_corr };
                KgStatus::Ok
            }
            Err(e) => from_error(&e),
        }
    })
}
