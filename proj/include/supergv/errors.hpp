#pragma once

#include <stdexcept>
#include <string>

namespace supergv {

// Domain errors carry a machine-readable kind so the CLI can map them to
// a JSON error object and exit code 2. Usage / syntax problems are a
// separate category (exit code 1), see parse_error below.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

inline domain_error signature_mismatch(const std::string& what) {
    return domain_error("SignatureMismatch", what);
}
inline domain_error unknown_coordinate(const std::string& name) {
    return domain_error("UnknownCoordinate", "unknown coordinate: " + name);
}
inline domain_error non_unit_body(const std::string& what) {
    return domain_error("NonUnitBody", what);
}
inline domain_error not_regular(const std::string& what) {
    return domain_error("NotRegular", what);
}
inline domain_error not_integrable(const std::string& what) {
    return domain_error("NotIntegrable", what);
}
inline domain_error not_closed(const std::string& what) {
    return domain_error("NotClosed", what);
}
inline domain_error not_flat(const std::string& what) {
    return domain_error("NotFlat", what);
}
inline domain_error not_adapted(const std::string& what) {
    return domain_error("NotAdapted", what);
}
inline domain_error not_involutive(const std::string& what) {
    return domain_error("NotInvolutive", what);
}
inline domain_error non_invertible_gauge(const std::string& what) {
    return domain_error("NonInvertibleGauge", what);
}
inline domain_error not_homogeneous(const std::string& what) {
    return domain_error("NotHomogeneous", what);
}
inline domain_error parity_mismatch(const std::string& what) {
    return domain_error("ParityMismatch", what);
}
inline domain_error guard_exceeded(const std::string& what) {
    return domain_error("GuardExceeded", what);
}
inline domain_error bad_structure(const std::string& what) {
    return domain_error("BadStructure", what);
}

// Parse-time failure with position info and the set of tokens that would
// have been accepted.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string kind, int line, int column, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)), line_(line), column_(column) {}

    const std::string& kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string kind_;
    int line_;
    int column_;
};

} // namespace supergv
