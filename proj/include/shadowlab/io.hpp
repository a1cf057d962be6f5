#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shadowlab/lattice.hpp"
#include "shadowlab/scode.hpp"

// Text formats for catalog data and user input. Blank lines and lines
// starting with '#' are ignored everywhere. Parse failures throw
// std::invalid_argument with a line reference.
namespace shadowlab::io {

/// "n", then n rows of n rationals (the Gram); optionally "BASIS" followed by
/// n rows of m rationals and then "METRIC" with one row of m rationals.
Lattice parse_gram(std::string_view text);
std::string format_gram(const Lattice& lattice);

struct GlueSpec {
    std::vector<std::string> roots;
    RatMatrix glue;
};

/// "ROOT A7 A7 D5", then one glue vector per line in root-basis coordinates.
GlueSpec parse_glue(std::string_view text);
Lattice build_glued(const GlueSpec& spec);

/// "n k", then k lines of n characters from {0,1}.
BinaryCode parse_generator_matrix(std::string_view text);
std::string format_generator_matrix(const BinaryCode& code);

std::string read_file(const std::string& path);

}  // namespace shadowlab::io
