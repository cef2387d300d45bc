#ifndef PYTUPLE_ERRORS_HPP
#define PYTUPLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pytuple {

enum class ErrorCode {
    Domain,            // input outside the operation's domain (zero leg, n = 0, bad digit string)
    InvalidDelta,      // delta fails divisibility, parity, or the size bound
    BudgetExceeded,    // factoring effort limit hit; no partial answer is returned
    OracleCapExceeded, // brute-force scan refused above its cap
    MagnitudeExceeded, // chain root already beyond the magnitude limit
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCode::Domain, what) {}
};

struct InvalidDeltaError : Error {
    explicit InvalidDeltaError(const std::string& what) : Error(ErrorCode::InvalidDelta, what) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& what) : Error(ErrorCode::BudgetExceeded, what) {}
};

struct OracleCapExceededError : Error {
    explicit OracleCapExceededError(const std::string& what) : Error(ErrorCode::OracleCapExceeded, what) {}
};

struct MagnitudeExceededError : Error {
    explicit MagnitudeExceededError(const std::string& what) : Error(ErrorCode::MagnitudeExceeded, what) {}
};

} // namespace pytuple

#endif
