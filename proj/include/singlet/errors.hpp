#ifndef SINGLET_ERRORS_HPP
#define SINGLET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace singlet {

/* All precondition violations throw a subclass of Error, so callers can
   distinguish "the math says no" (e.g. an unsupported screening mode on a
   sector) from genuine bugs, which use assertions instead. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Two vectors live in different charge sectors (or different p). */
struct SectorMismatch : Error {
    explicit SectorMismatch(const std::string& msg) : Error(msg) {}
};

/* A vertex-operator mode index outside the support lattice of the sector. */
struct UnsupportedMode : Error {
    explicit UnsupportedMode(const std::string& msg) : Error(msg) {}
};

/* An operation that requires a homogeneous (single-weight) vector. */
struct NonHomogeneous : Error {
    explicit NonHomogeneous(const std::string& msg) : Error(msg) {}
};

/* Index or parameter outside its documented range. */
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

/* A vector fails the top-level (lowest-weight) precondition. */
struct NotTopLevel : Error {
    explicit NotTopLevel(const std::string& msg) : Error(msg) {}
};

/* A search that is guaranteed to succeed found nothing; indicates a bug
   upstream or an out-of-theory parameter. */
struct NotFound : Error {
    explicit NotFound(const std::string& msg) : Error(msg) {}
};

/* Work estimate exceeds the configured budget.  The CLI maps this to a
   dedicated exit code so callers can tell "too big" from "wrong". */
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

} // namespace singlet

#endif
