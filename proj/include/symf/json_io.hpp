#pragma once

#include "symf/symfn.hpp"

#include <string>

namespace symf {

/// {"basis":"s","terms":[{"partition":[2,1],"coeff":"4/3"}]}, terms in canonical order.
std::string to_json(const SymFn& f);

/// Inverse of to_json; throws UsageError on malformed documents.
SymFn symfn_from_json(const std::string& text);

} // namespace symf
