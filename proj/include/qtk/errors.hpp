#pragma once

#include <stdexcept>

namespace qtk {

// A polynomial evaluated at roots of unity reduced to something outside Z.
struct NonIntegerValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The unitriangular Schur solve produced an impossible table entry.
struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Translation step incompatible with the cyclic symmetry of the content.
struct InvalidSymmetry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds the configured desk-scale bound.
struct SizeBound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hilbert series and Kostka-table sum disagree in both orientations.
struct CrosscheckMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qtk
