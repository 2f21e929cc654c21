#include "lightlike/errors.hpp"

#include <cstdio>

namespace lightlike {

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return buf;
}

} // namespace

NotLightlike::NotLightlike(double det)
    : Error(ErrorKind::not_lightlike, "NotLightlike: det g = " + format_double(det)),
      det_(det) {}

Error missing_key_error(const std::string& key) {
    return Error(ErrorKind::missing_key, "missing key \"" + key + "\"");
}

Error bad_range_error(const std::string& key, double lo, double hi) {
    return Error(ErrorKind::bad_range, "bad range for " + key + ": [" + format_double(lo) +
                                           ", " + format_double(hi) + "] (need min < max)");
}

Error domain_error(const std::string& message) {
    return Error(ErrorKind::domain, "domain error: " + message);
}

Error rank_zero_error(const std::string& message) {
    return Error(ErrorKind::rank_zero, "RankZero: " + message);
}

Error degenerate_input_error(const std::string& message) {
    return Error(ErrorKind::degenerate_input, "DegenerateInput: " + message);
}

Error singular_decomposition_error(double condition) {
    return Error(ErrorKind::singular_decomposition,
                 "SingularDecomposition: frame basis condition number " + format_double(condition));
}

Error grid_failure_error(const std::string& message) {
    return Error(ErrorKind::grid_failure, "GridFailure: " + message);
}

Error unknown_surface_error(const std::string& name) {
    return Error(ErrorKind::unknown_surface, "UnknownSurface: \"" + name + "\"");
}

Error generation_failed_error(const std::string& message) {
    return Error(ErrorKind::generation_failed, "GenerationFailed: " + message);
}

Error io_error(const std::string& message) {
    return Error(ErrorKind::io, message);
}

Error bad_argument_error(const std::string& message) {
    return Error(ErrorKind::bad_argument, message);
}

} // namespace lightlike
