#ifndef SPERNER_ERRORS_HPP
#define SPERNER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sperner {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A mask has bits outside the ground set, or two objects disagree on n.
struct GroundMismatchError : Error { using Error::Error; };

// The operation needs a nonempty input.
struct EmptyInputError : Error { using Error::Error; };

// The operation needs a uniform family (all members of one cardinality).
struct UniformityError : Error { using Error::Error; };

// A parameter is outside its documented range.
struct RangeError : Error { using Error::Error; };

// A generator would exceed its configured size cap.
struct CapacityError : Error { using Error::Error; };

// No qualifying child exists during a chain descent; raised only when the
// branching precondition (enough children per node) was violated.
struct PigeonholeError : Error { using Error::Error; };

// Text input rejected; the message names the offending line.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace sperner

#endif
