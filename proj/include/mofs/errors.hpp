#ifndef MOFS_ERRORS_HPP
#define MOFS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mofs {

// Base of the domain error taxonomy. Parse failures are kept separate so the
// command line can distinguish bad input files (exit 2) from domain failures
// (exit 1).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

#define MOFS_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& what = #Name)            \
            : Error(std::string(#Name) + ": " + what) {}          \
    }

MOFS_DEFINE_ERROR(OddOrder);
MOFS_DEFINE_ERROR(RowUnbalanced);
MOFS_DEFINE_ERROR(ColUnbalanced);
MOFS_DEFINE_ERROR(OrderMismatch);
MOFS_DEFINE_ERROR(EntryOutOfRange);
MOFS_DEFINE_ERROR(EmptySubset);
MOFS_DEFINE_ERROR(DimensionMismatch);
MOFS_DEFINE_ERROR(OrderTooLarge);
MOFS_DEFINE_ERROR(SubsetScanTooLarge);
MOFS_DEFINE_ERROR(OutOfRange);
MOFS_DEFINE_ERROR(InfeasibleParameters);
MOFS_DEFINE_ERROR(OrderNotSupported);
MOFS_DEFINE_ERROR(NotNormalized);
MOFS_DEFINE_ERROR(IsBachelor);
MOFS_DEFINE_ERROR(BadOrder);
MOFS_DEFINE_ERROR(EmptyCellSet);
MOFS_DEFINE_ERROR(StaleTrade);
MOFS_DEFINE_ERROR(PreconditionFailed);
MOFS_DEFINE_ERROR(NotStandardized);
MOFS_DEFINE_ERROR(WrongShape);
MOFS_DEFINE_ERROR(DivisibilityFailed);
MOFS_DEFINE_ERROR(TilingFailed);
MOFS_DEFINE_ERROR(UnsupportedOrder);
MOFS_DEFINE_ERROR(ShapeMismatch);
MOFS_DEFINE_ERROR(NotComplete);
MOFS_DEFINE_ERROR(CheckpointCorrupt);
MOFS_DEFINE_ERROR(DataNotFound);
MOFS_DEFINE_ERROR(ChecksumMismatch);

#undef MOFS_DEFINE_ERROR

}  // namespace mofs

#endif
