#pragma once

#include <stdexcept>
#include <string>

namespace orbitcalc {

/// Base class of every domain error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Comparing partitions of different weight.
struct UnequalWeight : Error { using Error::Error; };
// Enumeration request above the configured cap.
struct CapExceeded : Error { using Error::Error; };
// Operation mixing orbits of different groups.
struct GroupMismatch : Error { using Error::Error; };
// SO closure comparison between distinct very-even partitions; the order
// between their labelled orbits is deliberately left undefined.
struct LabelOrderUndefined : Error { using Error::Error; };
// Partition fails the parity rule of the group (or a construction invariant).
struct InvalidPartition : Error { using Error::Error; };
// Malformed group (e.g. symplectic group of odd dimension).
struct InvalidGroup : Error { using Error::Error; };
// Levi datum inconsistent with the ambient dimension.
struct DimensionMismatch : Error { using Error::Error; };
// Reconstruction input is not a genuine PL set.
struct InconsistentSet : Error { using Error::Error; };
// Matrix given to the Jordan-type oracle is not nilpotent.
struct NotNilpotent : Error { using Error::Error; };
// Poset covers contain a cycle.
struct CycleDetected : Error { using Error::Error; };
// Cover references an undeclared poset node.
struct UnknownNode : Error { using Error::Error; };
// Ingested data contradicts embedded reference data.
struct DataError : Error { using Error::Error; };

/// Syntax error in a serialized value or poset file; carries a 1-based
/// line number when the source is a file (0 otherwise).
struct ParseError : Error {
    explicit ParseError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                            : what),
          line(line_no) {}
    int line;
};

}  // namespace orbitcalc
