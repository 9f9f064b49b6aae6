#pragma once

#include <stdexcept>
#include <string>

#include "hbl/hecke_operator.hpp"

namespace hbl {

/// Malformed R-matrix document: bad JSON, missing fields, wrong shape or an unparsable Scalar.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kConvention =
    "row-vector action: row a lists the image of basis vector a; basis x_k (x) x_l at index k*d+l, 0-based";

/// JSON text -> operator. `parameter` is "symbolic-p" or a rational p0; with a
/// rational, every entry and q are evaluated at p0. No axiom checks here.
HeckeOperator parse_rmatrix(const std::string& json_text);
HeckeOperator load_rmatrix_file(const std::string& path);

/// Canonical JSON (2-space indent, entries as canonical Scalar strings).
std::string serialize_rmatrix(const HeckeOperator& op);

/// Parses an optionally signed rational such as "3", "-2/5"; throws FormatError.
Rational parse_rational(const std::string& text);

}  // namespace hbl
