#pragma once

#include <stdexcept>
#include <string>

namespace tripres {

// Base for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (wrong row counts, out-of-range indices, bad tokens).
struct parse_error : error {
    using error::error;
};

// Structure parsed fine but violates the projective-plane axioms.
struct invalid_plane_error : error {
    using error::error;
};

// Point/line subsets that do not form the requested subplane.
struct subplane_error : error {
    using error::error;
};

// Degenerate geometric configuration (collinear triangle, not in perspective).
struct degenerate_config_error : error {
    using error::error;
};

// Inputs that violate an operation's precondition (bad sizes, non-bijections).
struct precondition_error : error {
    using error::error;
};

} // namespace tripres
