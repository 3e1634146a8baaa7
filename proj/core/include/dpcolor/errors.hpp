#ifndef DPCOLOR_ERRORS_HPP
#define DPCOLOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dpcolor {

// Base error carrying a stable machine-readable code. The CLI maps any
// Error to exit status 2 and emits {"error": code, "message": ...}.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define DPCOLOR_DEFINE_ERROR(NAME)                                      \
    class NAME : public Error {                                         \
    public:                                                             \
        explicit NAME(const std::string& message)                       \
            : Error(#NAME, message) {}                                  \
    }

DPCOLOR_DEFINE_ERROR(InvalidGraph);
DPCOLOR_DEFINE_ERROR(InvalidCover);
DPCOLOR_DEFINE_ERROR(ParseError);
DPCOLOR_DEFINE_ERROR(TooLarge);
DPCOLOR_DEFINE_ERROR(SearchExhausted);
DPCOLOR_DEFINE_ERROR(ReductionUnsound);
DPCOLOR_DEFINE_ERROR(InvalidPivot);
DPCOLOR_DEFINE_ERROR(NotABlock);
DPCOLOR_DEFINE_ERROR(BadPartition);
DPCOLOR_DEFINE_ERROR(ParityMismatch);
DPCOLOR_DEFINE_ERROR(BadBijection);
DPCOLOR_DEFINE_ERROR(BadSplit);
DPCOLOR_DEFINE_ERROR(NotCritical);
DPCOLOR_DEFINE_ERROR(PreconditionFailed);

#undef DPCOLOR_DEFINE_ERROR

}  // namespace dpcolor

#endif
