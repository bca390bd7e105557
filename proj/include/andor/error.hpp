#ifndef ANDOR_ERROR_HPP
#define ANDOR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace andor {

enum class ErrorCode {
    DuplicateId,
    SparseIds,
    DanglingEdge,
    NegativeCost,
    TerminalWithChildren,
    UnknownNode,
    CyclicGraph,
    InvalidSolutionGraph,
    InconsistentTable,
    NonterminalLeaf,
    TooManyLeaves,
    NotAlternating,
    InvalidParams,
    UnknownFixture,
    DeadEnd,
    ParseError,
    ValidationError,
    IoError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace andor

#endif // ANDOR_ERROR_HPP
