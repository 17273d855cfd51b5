#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace mif {

using complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Error hierarchy. Precondition violations throw; soft numeric-certification
// problems travel as flags on results instead (see EvalFlag).
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct InsufficientDataError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Evaluation requested at (or too close to) a point mass. Callers that build
// inner functions map this to the boundary value Theta = 1.
struct AtomPoleError : Error {
    AtomPoleError(double position, std::size_t atom_pos)
        : Error("evaluation point collides with atom at " + std::to_string(position)),
          position(position), atom(atom_pos) {}
    double position;
    std::size_t atom;
};

// Inconsistent branch selection detected in the interval-factor product.
struct BranchError : Error {
    using Error::Error;
};

struct RegionError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Evaluation configuration and flagged results
// ---------------------------------------------------------------------------

struct EvaluationConfig {
    double rel_tolerance = 1e-9;
    // 0 means "derive from the measure": max(1e-8, 1e-6 * separation).
    double atom_exclusion_radius = 0.0;
    std::size_t max_terms = 1u << 22;

    void validate() const {
        if (!(rel_tolerance > 0.0) || rel_tolerance > 1e-2)
            throw ParameterError("rel_tolerance must lie in (0, 1e-2]");
        if (atom_exclusion_radius < 0.0)
            throw ParameterError("atom_exclusion_radius must be >= 0");
    }
};

enum class EvalFlag {
    certified,          // tail estimate available and below rel_tolerance
    window_only,        // no tail bound for this provenance; window truncation
    tolerance_not_met,  // tail bound exists but exceeds the requested tolerance
};

template <class T>
struct Evaluated {
    T value{};
    EvalFlag flag = EvalFlag::window_only;
    double tail_bound = 0.0;  // absolute bound on the truncated remainder
};

inline const char* to_string(EvalFlag f) {
    switch (f) {
        case EvalFlag::certified: return "certified";
        case EvalFlag::window_only: return "window_only";
        case EvalFlag::tolerance_not_met: return "tolerance_not_met";
    }
    return "?";
}

}  // namespace mif
