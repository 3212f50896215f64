#pragma once

#include <stdexcept>
#include <string>

namespace hopfcm {

// Base for every error raised by the library. The CLI maps DomainError to
// exit code 2 and UsageError to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

#define HOPFCM_DOMAIN_ERROR(Name)                                   \
    class Name : public DomainError {                               \
    public:                                                         \
        explicit Name(const std::string& what = #Name)              \
            : DomainError(std::string(#Name) + ": " + what) {}      \
    }

HOPFCM_DOMAIN_ERROR(DivisionByZero);
HOPFCM_DOMAIN_ERROR(PoleAtPoint);
HOPFCM_DOMAIN_ERROR(NotDivisible);
HOPFCM_DOMAIN_ERROR(NonConvergence);
HOPFCM_DOMAIN_ERROR(RegionUndefined);
HOPFCM_DOMAIN_ERROR(SingularTransform);
HOPFCM_DOMAIN_ERROR(NotHopf);
HOPFCM_DOMAIN_ERROR(BadTransform);
HOPFCM_DOMAIN_ERROR(NotRealSystem);
HOPFCM_DOMAIN_ERROR(DegenerateLambda);
HOPFCM_DOMAIN_ERROR(NotAFirstIntegralCandidate);
HOPFCM_DOMAIN_ERROR(BadPivots);
HOPFCM_DOMAIN_ERROR(TruncationTooLow);
HOPFCM_DOMAIN_ERROR(StiffnessFailure);
HOPFCM_DOMAIN_ERROR(NoReturn);

#undef HOPFCM_DOMAIN_ERROR

// Input documents that do not match the system schema.
class SchemaError : public UsageError {
public:
    explicit SchemaError(const std::string& what)
        : UsageError("SchemaError: " + what) {}
};

// Raised by the period module when a radial equation has a secular term.
// `order` is the radial order i of the failing equation; `value` is
// 2*pi*mean, the coefficient of rho0^(i+1) in the displacement.
class FocusObstruction : public DomainError {
public:
    FocusObstruction(int order, double value, std::string exact = {})
        : DomainError("FocusObstruction: secular term at order " + std::to_string(order)),
          order(order), value(value), exact_value(std::move(exact)) {}
    int order;
    double value;
    std::string exact_value;
};

}  // namespace hopfcm
