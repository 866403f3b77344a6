#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace a2w {

// Every CLI-reachable failure is one of these, carrying a stable string
// code so reports and callers can match on it without parsing messages.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse_error", msg) {}
};

struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& msg) : Error("invalid_parameter", msg) {}
};

struct InvalidRoot : Error {
    explicit InvalidRoot(const std::string& msg) : Error("invalid_root", msg) {}
};

struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg) : Error("singular_system", msg) {}
};

// Base point of a quadratic map: all three output coordinates vanish.
struct IndeterminatePoint : Error {
    IndeterminatePoint(int base_index, const std::string& msg)
        : Error("indeterminate_point", msg), base_index(base_index) {}
    int base_index;  // which of p1/p4/p6 the input hit
};

// Off-triangle input whose image lands on the triangle: the input sits on
// one of the contracted lines f14 = 0, f16 = 0, f46 = 0.
struct ContractedToBoundary : Error {
    ContractedToBoundary(std::string line, int target_index, const std::string& msg)
        : Error("contracted_to_boundary", msg), line(std::move(line)), target_index(target_index) {}
    std::string line;  // "f14" | "f16" | "f46"
    int target_index;  // exceptional point p1/p4/p6 of the target configuration
};

struct ChartUnavailable : Error {
    explicit ChartUnavailable(const std::string& msg) : Error("chart_unavailable", msg) {}
};

struct ShapeMismatch : Error {
    ShapeMismatch(std::string entry, const std::string& msg)
        : Error("shape_mismatch", msg), entry(std::move(entry)) {}
    std::string entry;  // e.g. "(2,3)"
};

struct NoGauge : Error {
    explicit NoGauge(const std::string& msg) : Error("no_gauge", msg) {}
};

struct OnContractedLine : Error {
    explicit OnContractedLine(const std::string& msg) : Error("on_contracted_line", msg) {}
};

struct BoundaryImage : Error {
    explicit BoundaryImage(const std::string& msg) : Error("boundary_image", msg) {}
};

struct HypothesisViolated : Error {
    HypothesisViolated(std::string condition, const std::string& msg)
        : Error("hypothesis_violated", msg), condition(std::move(condition)) {}
    std::string condition;
};

struct CalibrationFailed : Error {
    explicit CalibrationFailed(const std::string& msg) : Error("calibration_failed", msg) {}
};

// A generator application inside a word failed; position is 0-based,
// leftmost token first.
struct WordStepError : Error {
    WordStepError(std::size_t position, std::string inner_code, const std::string& msg)
        : Error("word_step_error", msg), position(position), inner_code(std::move(inner_code)) {}
    std::size_t position;
    std::string inner_code;
};

}  // namespace a2w
