#pragma once

#include <stdexcept>
#include <string>

namespace jhplab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (CLI exit code 3).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A configured enumeration or dimension bound was hit (CLI exit code 4).
class ResourceError : public Error {
public:
    using Error::Error;
};

#define JHPLAB_DEFINE_ERROR(Name, Base)        \
    class Name : public Base {                 \
    public:                                    \
        using Base::Base;                      \
    };

JHPLAB_DEFINE_ERROR(NotSortable, PreconditionError)
JHPLAB_DEFINE_ERROR(RankMismatch, PreconditionError)
JHPLAB_DEFINE_ERROR(IndexOutOfRange, PreconditionError)
JHPLAB_DEFINE_ERROR(AlgebraMismatch, PreconditionError)
JHPLAB_DEFINE_ERROR(SingularSystem, PreconditionError)
JHPLAB_DEFINE_ERROR(NegativeMultiplicity, PreconditionError)
JHPLAB_DEFINE_ERROR(NotMember, PreconditionError)
JHPLAB_DEFINE_ERROR(InvalidSpec, PreconditionError)
JHPLAB_DEFINE_ERROR(InvalidClass, PreconditionError)
JHPLAB_DEFINE_ERROR(ParseError, PreconditionError)
JHPLAB_DEFINE_ERROR(DimensionBoundExceeded, ResourceError)
JHPLAB_DEFINE_ERROR(EnumerationOverflow, ResourceError)

#undef JHPLAB_DEFINE_ERROR

// Default dimension bound for brute-force enumeration; JHP_LAB_BOUND overrides it.
int default_dimension_bound();

} // namespace jhplab
