#pragma once

#include <stdexcept>
#include <string>

namespace umbratrig {

enum class ErrorCode {
    Domain = 1,
    Pole,
    Overflow,
    Convergence,
    SupportMismatch,
    Quadrature,
    Divergence,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

#define UMBRATRIG_DEFINE_ERROR(Name)                                                   \
    class Name##Error : public Error {                                                 \
    public:                                                                            \
        explicit Name##Error(const std::string& what) : Error(ErrorCode::Name, what) {} \
    }

UMBRATRIG_DEFINE_ERROR(Domain);
UMBRATRIG_DEFINE_ERROR(Pole);
UMBRATRIG_DEFINE_ERROR(Overflow);
UMBRATRIG_DEFINE_ERROR(Convergence);
UMBRATRIG_DEFINE_ERROR(SupportMismatch);
UMBRATRIG_DEFINE_ERROR(Quadrature);
UMBRATRIG_DEFINE_ERROR(Divergence);

#undef UMBRATRIG_DEFINE_ERROR

} // namespace umbratrig
