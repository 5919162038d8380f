#ifndef KITAEV_GAUSSIAN_H
#define KITAEV_GAUSSIAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KgStatus {
  KG_STATUS_OK = 0,
  KG_STATUS_NULL_POINTER = 1,
  KG_STATUS_INVALID_ARGUMENT = 2,
  KG_STATUS_DEGENERATE = 3,
  KG_STATUS_INDEX_OUT_OF_RANGE = 4,
  KG_STATUS_BUFFER_TOO_SMALL = 5,
  KG_STATUS_INTERNAL = 6,
} KgStatus;

typedef enum KgGateKind {
  KG_GATE_KIND_X = 0,
  KG_GATE_KIND_RZ = 1,
  KG_GATE_KIND_RYXXY = 2,
} KgGateKind;

/**
 * Compiled eigenstate circuit.
 */
typedef struct KgCircuit KgCircuit;

/**
 * Diagonalized uniform Kitaev chain.
 */
typedef struct KgModel KgModel;

/**
 * One gate; `q1` equals `q0` for single-qubit gates and `angle` is zero for X.
 */
typedef struct KgGate {
  enum KgGateKind kind;
  size_t q0;
  size_t q1;
  double angle;
} KgGate;

/**
 * Ideal expectation values of a prepared eigenstate.
 */
typedef struct KgMeasurement {
  double energy;
  double parity;
  double number;
  double edge_corr;
} KgMeasurement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Copies the last error message (NUL-terminated, truncated to fit) into
 * `buf` and returns the full message length excluding the terminator.
 *
 * # Safety
 * `buf` must be null or point to `len` writable bytes.
 */
size_t kg_last_error_message(char *buf, size_t len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *kg_version(void);

/**
 * Builds and diagonalizes a uniform chain of `n` sites. With
 * `allow_degenerate` zero, degenerate spectra return `KG_STATUS_DEGENERATE`.
 *
 * # Safety
 * `out` must be a valid pointer; on success it receives a handle to release
 * with [`kg_model_free`].
 */
enum KgStatus kg_model_new(size_t n,
                           double mu,
                           double t,
                           double delta,
                           bool allow_degenerate,
                           struct KgModel **out);

/**
 * # Safety
 * `model` must be null or a handle from [`kg_model_new`] not yet freed.
 */
void kg_model_free(struct KgModel *model);

/**
 * Number of quasiparticle modes, or 0 for a null handle.
 *
 * # Safety
 * `model` must be null or a live handle.
 */
size_t kg_model_n_modes(const struct KgModel *model);

/**
 * Writes the `n` quasiparticle energies in ascending order.
 *
 * # Safety
 * `model` must be a live handle and `out` must point to `len` writable doubles.
 */
enum KgStatus kg_model_quasiparticle_energies(const struct KgModel *model, double *out, size_t len);

/**
 * Energy of the eigenstate with the listed modes occupied.
 *
 * # Safety
 * `model` must be a live handle, `modes` must point to `count` values (or be
 * null with `count == 0`) and `out` must be valid.
 */
enum KgStatus kg_model_energy(const struct KgModel *model,
                              const size_t *modes,
                              size_t count,
                              double *out);

/**
 * Compiles the circuit preparing the eigenstate with the listed modes occupied.
 *
 * # Safety
 * As for [`kg_model_energy`]; on success `*out` receives a handle to release
 * with [`kg_circuit_free`].
 */
enum KgStatus kg_model_compile(const struct KgModel *model,
                               const size_t *modes,
                               size_t count,
                               struct KgCircuit **out);

/**
 * # Safety
 * `circuit` must be null or a handle from [`kg_model_compile`] not yet freed.
 */
void kg_circuit_free(struct KgCircuit *circuit);

/**
 * Number of gates, or 0 for a null handle.
 *
 * # Safety
 * `circuit` must be null or a live handle.
 */
size_t kg_circuit_gate_count(const struct KgCircuit *circuit);

/**
 * # Safety
 * `circuit` must be a live handle and `out` valid.
 */
enum KgStatus kg_circuit_gate(const struct KgCircuit *circuit, size_t index, struct KgGate *out);

/**
 * Writes the JSON form of the circuit, NUL-terminated, into `buf`. The
 * required size including the terminator is stored in `needed` when it is
 * non-null; a short buffer returns `KG_STATUS_BUFFER_TOO_SMALL`.
 *
 * # Safety
 * `circuit` must be a live handle; `buf` must be null or point to `len`
 * writable bytes; `needed` must be null or valid.
 */
enum KgStatus kg_circuit_to_json(const struct KgCircuit *circuit,
                                 char *buf,
                                 size_t len,
                                 size_t *needed);

/**
 * Simulates `circuit` and measures energy, parity, particle number and edge
 * correlation with respect to `model`'s Hamiltonian.
 *
 * # Safety
 * Both handles must be live and `out` valid.
 */
enum KgStatus kg_measure(const struct KgModel *model,
                         const struct KgCircuit *circuit,
                         struct KgMeasurement *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KITAEV_GAUSSIAN_H */
