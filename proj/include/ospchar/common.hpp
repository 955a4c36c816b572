#ifndef OSPCHAR_COMMON_HPP
#define OSPCHAR_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ospchar {

using i64 = long long;

// Error taxonomy. Each maps to one named failure mode of the public API.
struct ParityError : std::runtime_error {
    explicit ParityError(const std::string& m) : std::runtime_error("parity: " + m) {}
};
struct NotDominant : std::runtime_error {
    explicit NotDominant(const std::string& m) : std::runtime_error("not dominant: " + m) {}
};
struct WrongFamily : std::runtime_error {
    explicit WrongFamily(const std::string& m) : std::runtime_error("wrong family: " + m) {}
};
struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& m) : std::runtime_error("too large: " + m) {}
};
struct MalformedDiagram : std::runtime_error {
    explicit MalformedDiagram(const std::string& m) : std::runtime_error("malformed diagram: " + m) {}
};
struct IllegalStep : std::runtime_error {
    explicit IllegalStep(const std::string& m) : std::runtime_error("illegal step: " + m) {}
};
struct NonCanonical : std::runtime_error {
    explicit NonCanonical(const std::string& m) : std::runtime_error("non-canonical diagram: " + m) {}
};
struct CycleDetected : std::runtime_error {
    explicit CycleDetected(const std::string& m) : std::runtime_error("cycle: " + m) {}
};
struct InversionMismatch : std::runtime_error {
    explicit InversionMismatch(const std::string& m) : std::runtime_error("inversion mismatch: " + m) {}
};
struct OutOfRegime : std::runtime_error {
    explicit OutOfRegime(const std::string& m) : std::runtime_error("recursion out of regime: " + m) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error("parse: " + m) {}
};
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& m) : std::logic_error("internal: " + m) {}
};

inline void check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

} // namespace ospchar

#endif
