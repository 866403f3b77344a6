#include "a2w/rng.hpp"

#include "a2w/errors.hpp"
#include "a2w/surface.hpp"

namespace a2w {

std::uint64_t Rng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    // Modulo rejection keeps the stream platform-independent and unbiased.
    std::uint64_t limit = ~0ULL - (~0ULL % n);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % n;
}

Rat Rng::rat(int max_num, int max_den) {
    std::int64_t num = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(2 * max_num + 1))) - max_num;
    std::int64_t den = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(max_den))) + 1;
    return Rat(num, den);
}

Rat Rng::nonzero_rat(int max_num, int max_den) {
    for (;;) {
        Rat r = rat(max_num, max_den);
        if (r != 0) return r;
    }
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
    Rng base(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
    base.next();
    return base;
}

ParamVector random_nu(Rng& rng, Membership need, int max_retries) {
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        ParamVector nu;
        for (int i = 0; i < 3; ++i) {
            nu(i, 0) = rng.rat();
            nu(i, 1) = rng.rat();
            nu(i, 2) = (i == 2 ? Rat(2) : Rat(0)) - nu(i, 0) - nu(i, 1);
        }
        if (at_least(membership(nu), need)) return nu;
    }
    throw SingularSystem("random_nu: retry budget exhausted");
}

std::pair<Rat, Rat> random_qp(Rng& rng) {
    for (;;) {
        Rat q = rng.rat();
        if (q == 0 || q == 1) continue;
        return {q, rng.rat()};
    }
}

std::pair<Rat, Rat> random_qp_admissible(Rng& rng, const ParamVector& nu, int max_retries) {
    QuadMapData d = quad_map_data(nu);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        auto [q, p] = random_qp(rng);
        PPoint x(q, p, 1);
        Rat f14 = eval_lin(d.f14, x), f16 = eval_lin(d.f16, x), f46 = eval_lin(d.f46, x);
        if (f14 == 0 || f16 == 0 || f46 == 0) continue;
        Rat qbar = q * f16 / f14;
        if (qbar == 0 || qbar == 1) continue;
        return {q, p};
    }
    throw SingularSystem("random_qp_admissible: retry budget exhausted");
}

}  // namespace a2w
