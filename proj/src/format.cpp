#include "graphqc/format.hpp"

#include <charconv>

namespace graphqc {

std::string format_double(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::string format_cell(const std::optional<double>& x) {
    return x ? format_double(*x) : std::string{};
}

}  // namespace graphqc
