#pragma once

#include "a2w/picard.hpp"
#include "a2w/rat.hpp"

#include <array>
#include <string>

namespace a2w {

// Local-exponent array nu_{i,j}, rows indexed i in {0, 1, inf} (stored 0,1,2),
// columns j in {0,1,2}. Membership in N requires row sums (0, 0, 2) and
// pairwise-distinct entries within each row.
struct ParamVector {
    std::array<std::array<Rat, 3>, 3> nu{};

    Rat& operator()(int i, int j) { return nu[i][j]; }
    const Rat& operator()(int i, int j) const { return nu[i][j]; }
    friend bool operator==(const ParamVector&, const ParamVector&) = default;

    std::string to_string() const;
};

// gamma = nu_{0,0} + nu_{1,0} + nu_{inf,0} - 1.
Rat gamma_of(const ParamVector& nu);

enum class Membership { None, N, N0, N00 };
std::string membership_name(Membership m);

// Strongest of N00 < N0 < N containing nu, or None.
Membership membership(const ParamVector& nu);
bool at_least(Membership have, Membership want);

// Throws InvalidParameter unless membership(nu) is at least `need`.
void require_membership(const ParamVector& nu, Membership need, const std::string& who);

// The action of each generator on nu. Reflections are attached to roots
// (w4 ~ E6-E7 swaps nu_{inf,0} <-> nu_{inf,1}, etc.), s1 swaps rows 0 and 1,
// s2 maps
// (row0, row1, rowinf) to (rowinf - 2/3, row1, row0 + 2/3), and w3 shifts
// column 0 by -2gamma/3 and columns 1,2 by +gamma/3.
ParamVector act_nu(Generator g, const ParamVector& nu);
ParamVector act_nu_word(const std::vector<Generator>& word, const ParamVector& nu);

// Period map on the root lattice. Values on simple roots come from the
// exceptional-class dictionary (E1,E2,E3 ~ row 1; E4,E5,E9 ~ row 0;
// E6,E7,E8 ~ row inf): chi(a3) = gamma and difference roots map to the
// corresponding parameter differences with one global sign. The calibrated
// sign (equivariance suite) is MINUS: chi(Ei - Ej) = -(nu(i) - nu(j)),
// giving chi(delta) = -1.
enum class ChiSign { Minus, Plus };
constexpr ChiSign kCalibratedChiSign = ChiSign::Minus;

// chi of any class in the span of a0..a6; throws InvalidRoot for classes
// outside the root lattice.
Rat chi(const PicClass& root, const ParamVector& nu, ChiSign sign = kCalibratedChiSign);

// Independent oracle for act_nu: solves the linear system obtained by
// replacing a_i by g(a_i) in the chi equations together with the row-sum
// conditions. Throws SingularSystem if the system is not uniquely solvable.
ParamVector derive_action_from_chi(Generator g, const ParamVector& nu,
                                   ChiSign sign = kCalibratedChiSign);

}  // namespace a2w
