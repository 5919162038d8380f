#include <math.h>
#include <stdio.h>
#include <string.h>

#include "kitaev_gaussian.h"

int main(void) {
    KgModel *model = NULL;
    if (kg_model_new(3, 0.0, -1.0, 1.0, false, &model) != KG_STATUS_DEGENERATE || model != NULL) {
        return 1;
    }
    char msg[128];
    if (kg_last_error_message(msg, sizeof msg) == 0 || strstr(msg, "degenerate") == NULL) {
        return 2;
    }
    if (kg_model_new(3, 1e-8, -1.0, 1.0, false, &model) != KG_STATUS_OK) {
        return 3;
    }
    size_t modes[] = {1, 2};
    KgCircuit *circuit = NULL;
    if (kg_model_compile(model, modes, 2, &circuit) != KG_STATUS_OK) {
        return 4;
    }
    size_t ryxxy = 0;
    for (size_t i = 0; i < kg_circuit_gate_count(circuit); i++) {
        KgGate g;
        kg_circuit_gate(circuit, i, &g);
        if (g.kind == KG_GATE_KIND_RYXXY) {
            ryxxy++;
        }
    }
    KgMeasurement m;
    if (kg_measure(model, circuit, &m) != KG_STATUS_OK) {
        return 5;
    }
    double e = 0.0;
    kg_model_energy(model, modes, 2, &e);
    printf("%zu %.12f %.12f %.12f\n", ryxxy, m.energy, e, m.number);
    kg_circuit_free(circuit);
    kg_model_free(model);
    return ryxxy == 6 && fabs(m.energy - e) < 1e-9 ? 0 : 6;
}
