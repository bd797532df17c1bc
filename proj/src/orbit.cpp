#include "cwf/orbit.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cwf {

const char* to_string(System s) {
    return s == System::kepler ? "kepler" : "oscillator";
}

System system_from_string(const std::string& s) {
    if (s == "kepler") return System::kepler;
    if (s == "oscillator") return System::oscillator;
    throw std::invalid_argument("unknown system '" + s +
                                "' (expected kepler or oscillator)");
}

void OrbitParams::validate() const {
    if (!(m > 0.0)) throw std::invalid_argument("mass must be positive");
    if (!(coupling > 0.0)) throw std::invalid_argument("coupling must be positive");
    if (l == 0.0)
        throw std::invalid_argument(
            "angular momentum must be nonzero (radial orbits are out of scope)");
}

bool is_bound(const OrbitParams& p) {
    p.validate();
    if (p.system == System::kepler)
        return p.E < 0.0 && 1.0 + 2.0 * p.l * p.l * p.E / (p.m * p.coupling * p.coupling) >= 0.0;
    return p.E > 0.0 && 1.0 - p.l * p.l * p.coupling / (p.m * p.E * p.E) >= 0.0;
}

double potential(const OrbitParams& p, double r) {
    if (!(r > 0.0)) throw std::domain_error("radius must be positive");
    return p.system == System::kepler ? -p.coupling / r
                                      : 0.5 * p.coupling * r * r;
}

double effective_potential(const OrbitParams& p, double r) {
    return potential(p, r) + p.l * p.l / (2.0 * p.m * r * r);
}

double radial_momentum_sq(const OrbitParams& p, double r) {
    if (!(r > 0.0)) throw std::domain_error("radius must be positive");
    if (p.system == System::kepler)
        return 2.0 * p.m * p.E + 2.0 * p.m * p.coupling / r - p.l * p.l / (r * r);
    return 2.0 * p.m * p.E - p.m * p.coupling * r * r - p.l * p.l / (r * r);
}

TurningPoints turning_points(const OrbitParams& p) {
    if (!is_bound(p))
        throw UnboundStateError(
            "unbound state: wave function is normalizable only for bound orbits");
    TurningPoints tp;
    if (p.system == System::kepler) {
        // roots of 2mE r^2 + 2mk r - l^2 = 0, written through the
        // root-consistent eccentricity e = sqrt(1 + 2 l^2 E / m k^2)
        const double e = std::sqrt(1.0 + 2.0 * p.l * p.l * p.E /
                                   (p.m * p.coupling * p.coupling));
        const double a = -p.coupling / (2.0 * p.E);  // semi-major axis
        tp.r_min = a * (1.0 - e);
        tp.r_max = a * (1.0 + e);
        tp.eccentricity_like = e;
    } else {
        // roots of m k' x^2 - 2 m E' x + l'^2 = 0 in x = r^2
        const double s = std::sqrt(1.0 - p.l * p.l * p.coupling / (p.m * p.E * p.E));
        const double x0 = p.E / p.coupling;
        tp.r_min = std::sqrt(x0 * (1.0 - s));
        tp.r_max = std::sqrt(x0 * (1.0 + s));
        tp.eccentricity_like = s;
    }
    return tp;
}

double edge_factor(const OrbitParams& p, const TurningPoints& tp, double r) {
    if (!(r > 0.0)) throw std::domain_error("radius must be positive");
    if (p.system == System::kepler)
        return 2.0 * p.m * std::abs(p.E) / (r * r);
    return p.m * p.coupling * (tp.r_max + r) * (r + tp.r_min) / (r * r);
}

double oscillator_amplitude_sq(const OrbitParams& p) {
    if (p.system != System::oscillator)
        throw std::invalid_argument("amplitude is defined for the oscillator");
    return 2.0 * p.E / p.coupling;
}

std::map<std::string, std::string> to_key_values(const OrbitParams& p) {
    char buf[40];
    std::map<std::string, std::string> kv;
    kv["system"] = to_string(p.system);
    auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        kv[key] = buf;
    };
    put("m", p.m);
    put("E", p.E);
    put("l", p.l);
    put("coupling", p.coupling);
    return kv;
}

OrbitParams orbit_from_key_values(const std::map<std::string, std::string>& kv) {
    auto get = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw std::invalid_argument(std::string("missing key '") + key + "'");
        return it->second;
    };
    auto num = [&](const char* key) {
        const std::string& s = get(key);
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw std::invalid_argument(std::string("bad numeric value for '") +
                                        key + "': " + s);
        return v;
    };
    OrbitParams p;
    p.system = system_from_string(get("system"));
    p.m = num("m");
    p.E = num("E");
    p.l = num("l");
    p.coupling = num("coupling");
    p.validate();
    return p;
}

}  // namespace cwf
