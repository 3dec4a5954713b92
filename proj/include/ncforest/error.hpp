#pragma once

#include <stdexcept>
#include <string>

namespace ncf {

enum class ErrorCode {
    AsymmetricAdjacency,
    SelfLoop,
    DuplicateNeighbor,
    OuterDartNotEdge,
    EulerViolation,
    InvalidVertex,
    TerminalNotOnOuterFace,
    NoRootCandidate,
    BinarizationRoutingFailure,
    NotInTouch,
    UnclassifiableFace,
    CyclicInterference,
    InDegreeViolation,
    AlreadyLabeled,
    SpecialEdgeAbsent,
    MissingPrerequisite,
    UnlabeledPath,
    BudgetExhausted,
    PairNotInForest,
    ParameterOutOfRange,
    WitnessNotFound,
    InvalidInstance,
    ParseError,
};

const char* error_name(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(std::string(error_name(code)) + ": " + msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace ncf
