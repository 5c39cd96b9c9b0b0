#pragma once

#include <stdexcept>
#include <string>

namespace alliance {

// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (bad token, duplicate header line, empty input).
struct parse_error : error {
    using error::error;
};

// Edge list is not a tree: self-loop, duplicate edge, wrong edge count,
// cycle, or disconnection.
struct not_a_tree : error {
    using error::error;
};

// Vertex ids do not form the contiguous range {0..n-1}.
struct bad_vertex_ids : error {
    using error::error;
};

// Pruefer sequence has the wrong length or an out-of-range entry.
struct bad_sequence : error {
    using error::error;
};

// A vertex index is outside {0..n-1} for the tree at hand.
struct vertex_out_of_range : error {
    using error::error;
};

// Instance exceeds an enumeration or exact-solve size cap.
struct instance_too_large : error {
    using error::error;
};

// Operation is undefined on the degenerate one-vertex tree.
struct degenerate_instance : error {
    using error::error;
};

// The supplied set is not a global defensive alliance.
struct not_global_defensive : error {
    using error::error;
};

} // namespace alliance
