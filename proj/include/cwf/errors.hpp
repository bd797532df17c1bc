#pragma once

#include <stdexcept>
#include <string>

namespace cwf {

// Parameters outside the bound-orbit region: the classical wave function is
// normalizable only between two real turning points.
class UnboundStateError : public std::domain_error {
public:
    explicit UnboundStateError(const std::string& what = "unbound state")
        : std::domain_error(what) {}
};

// Grid or evaluation point touches/crosses a turning point, where the
// density diverges and radial derivatives lose meaning.
class SingularBoundaryError : public std::domain_error {
public:
    explicit SingularBoundaryError(const std::string& what = "singular boundary")
        : std::domain_error(what) {}
};

// Density requested at or beyond a turning point (momentum-squared <= 0).
class DensitySingularityError : public std::domain_error {
public:
    explicit DensitySingularityError(const std::string& what = "density singularity")
        : std::domain_error(what) {}
};

// Circular-orbit limit: the accessible annulus has measure zero and the
// normalization constant diverges.
class DegenerateAnnulusError : public std::domain_error {
public:
    explicit DegenerateAnnulusError(const std::string& what = "degenerate annulus")
        : std::domain_error(what) {}
};

// The two parameter sets handed to an equivalence operation are not related
// by the Levi-Civita identifications.
class UnmappedParametersError : public std::domain_error {
public:
    explicit UnmappedParametersError(const std::string& what = "unmapped parameters")
        : std::domain_error(what) {}
};

// Adaptive quadrature failed to reach the requested tolerance; carries the
// achieved error estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved error estimate " +
                             std::to_string(achieved) + ")"),
          achieved_error(achieved) {}
    double achieved_error;
};

}  // namespace cwf
