#pragma once

#include "a2w/params.hpp"
#include "a2w/ppoint.hpp"
#include "a2w/rat.hpp"

#include <cstdint>
#include <utility>

namespace a2w {

// Deterministic, platform-independent stream (splitmix64). All randomness in
// the library flows from one explicit seed; trials own substreams derived
// from (seed, trial index).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n);
    // Uniform over numerators -max_num..max_num, denominators 1..max_den.
    Rat rat(int max_num = 8, int max_den = 9);
    Rat nonzero_rat(int max_num = 8, int max_den = 9);

    static Rng substream(std::uint64_t seed, std::uint64_t index);

private:
    std::uint64_t state_;
};

// Rejection samplers over the measure-zero-avoiding sets; bounded retries
// with seed advance, throws SingularSystem on exhaustion (does not happen at
// the shipped bounds).
ParamVector random_nu(Rng& rng, Membership need, int max_retries = 20000);

// Off-triangle moduli point: q not in {0,1}, arbitrary p.
std::pair<Rat, Rat> random_qp(Rng& rng);

// Additionally off the three f-lines of nu and with q f16/f14 off {0,1}
// (admissible input for the w3 pipelines).
std::pair<Rat, Rat> random_qp_admissible(Rng& rng, const ParamVector& nu, int max_retries = 20000);

}  // namespace a2w
