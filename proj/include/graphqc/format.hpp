#pragma once

#include <optional>
#include <string>

namespace graphqc {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double x);

/// CSV cell: empty for an absent value.
std::string format_cell(const std::optional<double>& x);

}  // namespace graphqc
