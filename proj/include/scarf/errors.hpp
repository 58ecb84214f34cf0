#pragma once

#include <stdexcept>
#include <string>

namespace scarf {

// Exit-code buckets used by the CLI: input errors map to 2, numerical
// conditions to 3.
enum class ErrorKind { input, numerical };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ExactPoleError : Error {
    explicit ExactPoleError(const std::string& what) : Error(ErrorKind::input, what) {}
};

struct BelowKMinError : Error {
    explicit BelowKMinError(const std::string& what) : Error(ErrorKind::input, what) {}
};

struct KTooSmallError : Error {
    explicit KTooSmallError(const std::string& what) : Error(ErrorKind::input, what) {}
};

// A transmission evaluation landed exactly on a Gamma pole: a spectral
// singularity (or bound-state pole) hit head-on.
struct ExactSingularityError : Error {
    explicit ExactSingularityError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

struct TailTooLargeError : Error {
    explicit TailTooLargeError(const std::string& what) : Error(ErrorKind::input, what) {}
};

struct IllConditionedError : Error {
    explicit IllConditionedError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorKind::input, what) {}
};

// An invariance violation landed between hold_tol and fail_margin; the suite
// refuses to guess a verdict.
struct InconclusiveError : Error {
    explicit InconclusiveError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

struct SingularGridPointError : Error {
    explicit SingularGridPointError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

}  // namespace scarf
