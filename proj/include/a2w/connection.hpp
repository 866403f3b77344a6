#pragma once

#include "a2w/mat3.hpp"
#include "a2w/params.hpp"
#include "a2w/ppoint.hpp"

#include <array>
#include <utility>

namespace a2w {

enum class Chart { U0, UInf };

// nabla = d + A(var) dvar/(var(var-1)) in a split-adapted frame of
// O(d0) + O(d1) + O(d2) (split_degrees), var = z on U0, w = 1/z on UInf.
// Entry degrees obey deg A_ij <= d_i - d_j + 1.
struct ConnectionForm {
    MatP A;
    Chart chart = Chart::U0;
    std::array<int, 3> split_degrees{0, -1, -1};

    int degree() const { return split_degrees[0] + split_degrees[1] + split_degrees[2]; }
    friend bool operator==(const ConnectionForm&, const ConnectionForm&) = default;
};

// Checks the split-frame degree bounds; throws ShapeMismatch naming the entry.
void check_degree_bounds(const ConnectionForm& conn);

// Normal form on chart U0 at (q, p) (template [[0, a12, a13], [1, -p, 0],
// [0, z-q, p]]) or on chart UInf at (q', p'). Requires nu in N0 and the chart
// coordinate off {0, 1} (ChartUnavailable otherwise).
ConnectionForm build_normal_form(const Rat& q, const Rat& p, const ParamVector& nu, Chart chart);

struct NormalFormPair {
    ConnectionForm u0;    // at (q, p)
    ConnectionForm uinf;  // at (q', p') = (1/q, p/q)
};
// Both charts at once for an off-triangle moduli point.
NormalFormPair build_normal_form(const MPoint& point, const ParamVector& nu);

// Residue of the connection at the pole t in {0, 1, inf}, as a matrix in the
// frame adapted to that pole (for the pole at the far end of the chart this
// applies the split-degree twist).
enum class Pole { Zero, One, Infinity };
MatQ residue_at_pole(const ConnectionForm& conn, Pole t);

// (q, p) of a chart-U0 matrix in normal shape; ShapeMismatch lists the first
// violated entry.
std::pair<Rat, Rat> apparent_pair(const ConnectionForm& conn);

// Unique admissible gauge g = [[u, lin, lin], [0, c, c], [0, c, c]] bringing a
// split-adapted O + O(-1) + O(-1) connection matrix to normal shape (chart
// template), realizing the canonical filtration E2 in E1 in E. Throws NoGauge
// when the input violates the irreducibility contract.
struct NormalizeResult {
    MatP gauge;
    ConnectionForm normal;
};
NormalizeResult normalize_split_frame(const ConnectionForm& conn);

// Transfer between charts (frame twist by the split degrees plus coordinate
// substitution). The result is generally not in normal shape.
ConnectionForm chart_transfer(const ConnectionForm& conn);

// Tensor by (O(+-1), d): pure bookkeeping on the chart-U0 matrix; only the
// split degrees shift (by +-1 each), moving the infinity exponents by -+1.
ConnectionForm tensor_twist(const ConnectionForm& conn, int sign);

// sigma realizations on normal forms:
//   s1: pull back by z -> 1-z (the one-form is anti-invariant), conjugate by
//       diag(-1,1,1); lands at (1-q, -p) already in normal shape.
//   s2: reread the U0 matrix as UInf data for the pulled-back frame, tensor
//       by the rank-one form (the -2/3 dz/z twist), transfer to U0 and
//       normalize.
ConnectionForm realize_sigma(Generator which, const ConnectionForm& conn);

// sum_{i,j} nu_{i,j} + degree (the Fuchs relation totals 0 for degree -2).
Rat fuchs_sum(const ParamVector& nu, int degree);

}  // namespace a2w
