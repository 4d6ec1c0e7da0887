#pragma once

#include <stdexcept>
#include <string>

#include "detmax/sign_matrix.hpp"

namespace detmax {

struct MatrixParseError : std::runtime_error {
    int line;
    MatrixParseError(int line_, const std::string& what_)
        : std::runtime_error(what_ + " at line " + std::to_string(line_)), line(line_) {}
};

/// Matrix file format: line 1 is the order n, then n rows. A row is either
/// n space-separated values from {1, -1} or a compact string over {+, -}.
SignMatrix parse_matrix(const std::string& text);

/// Canonical renderer (numeric form, bit-exact): "n\n" then n rows of
/// space-separated 1 / -1.
std::string render_matrix(const SignMatrix& m);

}  // namespace detmax
