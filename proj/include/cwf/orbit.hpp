#pragma once

#include <map>
#include <string>

#include "cwf/errors.hpp"

namespace cwf {

enum class System { kepler, oscillator };

const char* to_string(System s);
System system_from_string(const std::string& s);

// One central-force system: H = p_r^2/2m + l^2/2mr^2 + V(r) with
// V = -k/r (Kepler, coupling k > 0) or V = k'r^2/2 (oscillator, k' > 0).
struct OrbitParams {
    System system = System::kepler;
    double m = 1.0;       // mass
    double E = 0.0;       // total energy
    double l = 0.0;       // conserved angular momentum, nonzero
    double coupling = 1.0;

    void validate() const;  // m > 0, coupling > 0, l != 0
};

// Bound-orbit classification: Kepler needs E < 0 with a real eccentricity,
// the oscillator E' > 0 with real turning radii.
bool is_bound(const OrbitParams& p);

double potential(const OrbitParams& p, double r);            // bare V(r)
double effective_potential(const OrbitParams& p, double r);  // V + l^2/2mr^2

// f(r) = 2m(E - V_eff) = p_r^2; negative outside the accessible annulus.
double radial_momentum_sq(const OrbitParams& p, double r);

struct TurningPoints {
    double r_min = 0.0;
    double r_max = 0.0;
    // Kepler eccentricity e, or the oscillator analogue
    // sqrt(1 - l'^2 k'/(m E'^2)); both in [0, 1).
    double eccentricity_like = 0.0;

    double width() const { return r_max - r_min; }
};

// Closed-form roots of radial_momentum_sq, sorted ascending. Throws
// UnboundStateError for unbound parameters.
TurningPoints turning_points(const OrbitParams& p);

// Smooth positive factor g with f(r) = (r - r_min)(r_max - r) g(r) on the
// closed annulus; everything singular about the orbit integrals lives in the
// explicit root factors.
double edge_factor(const OrbitParams& p, const TurningPoints& tp, double r);

// Oscillation amplitude A of the l' -> 0 oscillator with the same (m, E', k'):
// A^2 = 2E'/k', i.e. r_max^2 of the degenerate radial orbit.
double oscillator_amplitude_sq(const OrbitParams& p);

// Flat key-value record (keys: system, m, E, l, coupling) used by the CLI
// config format.
std::map<std::string, std::string> to_key_values(const OrbitParams& p);
OrbitParams orbit_from_key_values(const std::map<std::string, std::string>& kv);

}  // namespace cwf
