#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cellalg/cellular.hpp"

namespace cellalg {

class SpecIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the line-oriented cellular spec format:
///
///   # comment
///   field Q              | field Fp <prime>
///   layer
///     vars x, y          | vars -
///     ideal x^2 - x, y^3 | ideal -
///     vdim 2
///     phi [[1, x], [x, 1]]
///     sigma x -> -x, y -> y     (optional; unlisted variables are fixed)
///   end
///
/// phi may continue over several lines until its brackets balance.  Throws
/// ParseError with line and column on any syntax or shape problem.  Semantic
/// checks (involution, compatibility) are left to validate_spec.
CellularAlgebraSpec parse_spec(std::string_view text);

/// Throws SpecIoError when the file cannot be read.
CellularAlgebraSpec parse_spec_file(const std::filesystem::path& path);

/// Canonical text; parse_spec(print_spec(s)) reproduces s.
std::string print_spec(const CellularAlgebraSpec& spec);

/// Field, variables, ideal generators, phi and sigma all coincide.
bool specs_identical(const CellularAlgebraSpec& a, const CellularAlgebraSpec& b);

}  // namespace cellalg
