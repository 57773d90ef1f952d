#pragma once

#include <stdexcept>
#include <string>

namespace wbou {

/// Base class of every error raised by the library. Validation failures and
/// I/O failures are distinguished so the command-line front end can map them
/// onto distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's precondition.
class ValidationError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

#define WBOU_DEFINE_VALIDATION_ERROR(Name)          \
    class Name : public ValidationError {           \
    public:                                         \
        using ValidationError::ValidationError;     \
    }

WBOU_DEFINE_VALIDATION_ERROR(InvalidLambda);
WBOU_DEFINE_VALIDATION_ERROR(GridError);
WBOU_DEFINE_VALIDATION_ERROR(GridMismatch);
WBOU_DEFINE_VALIDATION_ERROR(NotASubordinator);
WBOU_DEFINE_VALIDATION_ERROR(DomainError);
WBOU_DEFINE_VALIDATION_ERROR(NegativeLag);
WBOU_DEFINE_VALIDATION_ERROR(BadLag);
WBOU_DEFINE_VALIDATION_ERROR(ExistenceViolation);
WBOU_DEFINE_VALIDATION_ERROR(DimensionMismatch);
WBOU_DEFINE_VALIDATION_ERROR(DegenerateSeries);
WBOU_DEFINE_VALIDATION_ERROR(LagTooLarge);
WBOU_DEFINE_VALIDATION_ERROR(EmptyRange);
WBOU_DEFINE_VALIDATION_ERROR(SkipTooLarge);
WBOU_DEFINE_VALIDATION_ERROR(MissingComponents);
WBOU_DEFINE_VALIDATION_ERROR(InvalidDriver);

#undef WBOU_DEFINE_VALIDATION_ERROR

}  // namespace wbou
