#pragma once

#include <string>

#include <json.hpp>

#include "sbinv/numeric.hpp"

namespace sbinv {

// All emitted documents use insertion-ordered keys so identical inputs
// produce byte-identical output.
using Json = nlohmann::ordered_json;

/// Arbitrary-precision integer to JSON: a plain number while the value
/// fits in 64 bits, a decimal string beyond that (large literals would
/// otherwise be parsed back through double and lose digits).
Json int_to_json(const Int& v);

/// Accepts either encoding produced by int_to_json.
Int int_from_json(const Json& j);

/// Canonical dump: two-space indent, trailing newline.
std::string dump_json(const Json& j);

} // namespace sbinv
