#pragma once

#include <stdexcept>
#include <string>

namespace featbench {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define FEATBENCH_ERROR_TYPE(NAME)                                        \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& what) : Error(what) {}           \
    };

// numerics / kernels / classifiers
FEATBENCH_ERROR_TYPE(DimensionMismatch)
FEATBENCH_ERROR_TYPE(NotPositiveDefinite)
FEATBENCH_ERROR_TYPE(NotSymmetric)
FEATBENCH_ERROR_TYPE(InvalidRange)
FEATBENCH_ERROR_TYPE(InvalidArgument)
FEATBENCH_ERROR_TYPE(EmptyDataset)
FEATBENCH_ERROR_TYPE(SingleClass)

// dataio
FEATBENCH_ERROR_TYPE(ParseError)
FEATBENCH_ERROR_TYPE(BadMagic)
FEATBENCH_ERROR_TYPE(TruncatedFile)
FEATBENCH_ERROR_TYPE(CountMismatch)
FEATBENCH_ERROR_TYPE(IoError)
FEATBENCH_ERROR_TYPE(InvalidConfig)

// experiments
FEATBENCH_ERROR_TYPE(InsufficientClassSize)
FEATBENCH_ERROR_TYPE(LengthMismatch)
FEATBENCH_ERROR_TYPE(EmptyInput)

#undef FEATBENCH_ERROR_TYPE

/// CSV row whose field count differs from the first row.
class RaggedRows : public ParseError {
public:
    explicit RaggedRows(const std::string& what) : ParseError(what) {}
};

/// Label field that is not a positive integer.
class UnknownLabel : public ParseError {
public:
    explicit UnknownLabel(const std::string& what) : ParseError(what) {}
};

}  // namespace featbench
