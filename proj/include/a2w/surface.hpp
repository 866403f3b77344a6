#pragma once

#include "a2w/mat3.hpp"
#include "a2w/params.hpp"
#include "a2w/ppoint.hpp"
#include "a2w/rat.hpp"

#include <array>
#include <optional>
#include <variant>

namespace a2w {

// The nine blow-up points of the configuration:
//   p1 = (1 : nu_{1,0} : 1), p2, p3 on D1 = {x0 = x2},
//   p4 = (0 : -nu_{0,0} : 1), p5, p9 on D0 = {x0 = 0},
//   p6 = (1 : -nu_{inf,0}+1 : 0), p7, p8 on D2 = {x2 = 0}.
struct NinePoints {
    explicit NinePoints(const ParamVector& nu);
    const PPoint& point(int i) const;  // i in 1..9

    std::array<PPoint, 9> pts;  // index 0 = p1, ..., index 8 = p9
};

// Homogeneous cubic in (x0,x1,x2): coefficients in the monomial order
// x0^3, x0^2 x1, x0^2 x2, x0 x1^2, x0 x1 x2, x0 x2^2, x1^3, x1^2 x2, x1 x2^2, x2^3.
using Cubic = std::array<Rat, 10>;

// The unique cubic through the nine points: builds the 9x10 evaluation
// matrix, asserts kernel dimension exactly 1 and that the generator is
// proportional to x0 (x0 - x2) x2. Kernel dimension != 1 signals the
// sum(a_i) = 0 degeneration, excluded on N where the sum is 1.
Cubic unique_anticanonical_cubic(const NinePoints& points);

// Kernel dimension of the evaluation matrix for arbitrary points (exposed so
// degenerate configurations can be probed directly).
int cubic_kernel_dimension(const std::array<PPoint, 9>& pts);

// Shear normalization of a raw triangle configuration a1..a9 to the
// canonical gauge a1+a2+a3 = a4+a5+a9 = 0, a6+a7+a8 = 1.
struct ShearResult {
    Rat mu, nu, eta;              // (x0:x1:x2) -> (x0 : mu x0 + nu x1 + eta x2 : x2)
    std::array<Rat, 9> a;         // normalized a-values, order a1..a9 (a9 at index 8)
};
ShearResult normalize_configuration(const std::array<Rat, 9>& a);

// Linear form c0 x0 + c1 x1 + c2 x2.
using LinForm = std::array<Rat, 3>;
Rat eval_lin(const LinForm& f, const PPoint& x);

// The quadratic-transformation data of w3.
struct QuadMapData {
    Rat gamma, a, b, c;
    LinForm f14, f16, f46;
};
QuadMapData quad_map_data(const ParamVector& nu);

// Birational self-map of P^2 realizing one generator.
struct LinearPlaneMap {
    MatQ m;  // x -> m x on coordinates
};
struct QuadraticPlaneMap {
    QuadMapData data;
    ParamVector nu;  // source parameters, for diagnostics
};
struct PlaneMap {
    std::variant<LinearPlaneMap, QuadraticPlaneMap> map;
    bool is_quadratic() const { return std::holds_alternative<QuadraticPlaneMap>(map); }
};

// phi_g: identity for w_i (i != 3); s1: (x0:x1:x2) -> (x2-x0 : -x1 : x2);
// s2: (x0:x1:x2) -> (x2 : -x0/3 + x1 + x2/3 : x0), the unique triangle-line
// shear satisfying point correspondence; w3: the quadratic transformation
// based at p1, p4, p6.
PlaneMap phi_generator(Generator g, const ParamVector& nu);

// Evaluates and canonicalizes. Throws IndeterminatePoint at a base point of
// the quadratic map and ContractedToBoundary when an off-triangle input is
// sent to the triangle (input on one of the f-lines; the target exceptional
// point follows the lattice action: f46 -> p1, f16 -> p4, f14 -> p6).
PPoint eval_map(const PlaneMap& map, const PPoint& x);

}  // namespace a2w
