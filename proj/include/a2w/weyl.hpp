#pragma once

#include "a2w/params.hpp"
#include "a2w/ppoint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace a2w {

// Word over {w0..w6, s1, s2}; tokens whitespace- or comma-separated,
// case-insensitive. Applied leftmost token first.
struct Word {
    std::vector<Generator> tokens;

    static Word parse(const std::string& text);
    std::string to_string() const;
};

enum class Via { Surface, MC };

struct ModuliState {
    ParamVector nu;
    PPoint point;

    friend bool operator==(const ModuliState&, const ModuliState&) = default;
};

// Folds generator actions over the state: w_i (i != 3) fix the point and act
// on nu; s1, s2 act by their linear plane maps; w3 by the quadratic map
// (via = Surface) or by the middle-convolution pipeline (via = MC). Typed
// evaluation errors are rethrown as WordStepError carrying the position.
ModuliState apply(const Word& word, const ModuliState& state, Via via);

struct OrbitError {
    std::size_t step;      // orbit step (1-based application count)
    std::size_t position;  // token position within the word
    std::string code;
    std::string message;
};
struct OrbitResult {
    std::vector<ModuliState> states;  // states[0] = initial; states.size() <= steps+1
    std::optional<OrbitError> error;  // set when iteration stopped early
};
OrbitResult orbit(const Word& word, const ModuliState& state, int steps, Via via);

// Structured verification report.
struct SuiteResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::vector<std::string> counterexamples;  // bounded
    bool ok() const { return failed == 0; }
};
struct VerifyReport {
    std::vector<SuiteResult> suites;
    std::vector<std::string> resolved_deviations;
    int trials = 0;
    std::uint64_t seed = 0;
    bool all_passed() const;
};

// Runs every suite: lattice Coxeter, nu-action relations, chi equivariance +
// oracle equivalence, point correspondence, cubic uniqueness, normal forms,
// sigma realizations + gauge roundtrips, main-theorem two-path equality,
// strong matrix equality, exponent prediction. trials scales the sampled
// sections; structural (symbolic) checks always run.
VerifyReport verify_all(int trials, std::uint64_t seed);
// Single suite by name ("coxeter", "nu-action", "chi", "points", "cubic",
// "normal-form", "sigma", "main-theorem", "strong-equality", "exponents").
VerifyReport verify_suite(const std::string& name, int trials, std::uint64_t seed);
std::vector<std::string> suite_names();

}  // namespace a2w
