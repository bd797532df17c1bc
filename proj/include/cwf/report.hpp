#pragma once

#include <string>

namespace cwf {

enum class ResidualKind { hamilton_jacobi, continuity, schroedinger_like };

const char* to_string(ResidualKind k);

// Norms of a discretized equation residual together with the grid metadata
// needed to reproduce it.
struct ResidualReport {
    ResidualKind kind = ResidualKind::hamilton_jacobi;
    int n_r = 0;
    int n_phi = 0;
    double margin_fraction = 0.0;
    double h_r = 0.0;
    double h_phi = 0.0;
    double max_residual = 0.0;
    double rms_residual = 0.0;
    double normalization_scale = 0.0;
};

}  // namespace cwf
