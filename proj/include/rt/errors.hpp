#ifndef RT_ERRORS_HPP
#define RT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rt {

// All domain errors carry a stable machine-readable code alongside the
// human-readable message; the CLI maps them to exit status 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define RT_ERROR_KIND(Name)                               \
    class Name : public Error {                           \
    public:                                               \
        explicit Name(const std::string& what)            \
            : Error(#Name, what) {}                       \
    }

RT_ERROR_KIND(DimensionMismatch);
RT_ERROR_KIND(TraceViolation);
RT_ERROR_KIND(DegenerateSpectrum);
RT_ERROR_KIND(ZeroScale);
RT_ERROR_KIND(PoleInFormula);
RT_ERROR_KIND(DegenerateForm);
RT_ERROR_KIND(NotNormalized);
RT_ERROR_KIND(NotOnHyperplane);
RT_ERROR_KIND(OrderingViolation);
RT_ERROR_KIND(CoincidentSingularities);
RT_ERROR_KIND(SamplingExhausted);
RT_ERROR_KIND(NonIntegral);
RT_ERROR_KIND(NoFilling);
RT_ERROR_KIND(PoleAtPoint);
RT_ERROR_KIND(SchemaError);

#undef RT_ERROR_KIND

}  // namespace rt

#endif
