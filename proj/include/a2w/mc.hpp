#pragma once

#include "a2w/connection.hpp"
#include "a2w/params.hpp"

#include <vector>

namespace a2w {

// Residues of the twisting one-form beta along the horizontal, vertical,
// exceptional and diagonal divisors, i in {0, 1, inf}:
//   bH_i = -nu_{i,0} + [i = inf],  bV_i = nu_{i,0} - [i = inf] - (2/3) gamma,
//   bT = gamma,  bU_i = bH_i + bV_i + bT,
// satisfying bT + sum bH = bT + sum bV = 0 exactly.
struct BetaForm {
    std::array<Rat, 3> H, V, U;
    Rat T;
};
BetaForm build_beta(const ParamVector& nu);  // requires nu in N00

// Rank/exponent prediction of the middle convolution (general (r, n)).
struct ExponentPrediction {
    int rank = 0;
    int delta = 0;                          // (n-2) r - sum m_i(-bH_i)
    std::vector<int> m;                     // m_i(-bH_i) per point
    std::vector<std::vector<Rat>> divisors; // predicted exponent multiset per point (sorted)
};
// beta data per point (H, V, U of length n) plus the diagonal residue T;
// mu = input exponent multisets. Throws HypothesisViolated naming the failed
// side condition.
ExponentPrediction predict_exponents(const std::vector<Rat>& betaH, const std::vector<Rat>& betaV,
                                     const std::vector<Rat>& betaU, const Rat& betaT,
                                     const std::vector<std::vector<Rat>>& mu, int r, int n);

// Gauss-Manin matrix of mc_beta on G = E (x) O(1) in the basis
// [eta7], [eta4], [eta2], bundle O(1) + O + O.
struct GMData {
    Rat q, p;
    ParamVector nu;
    BetaForm beta;
    Rat alpha0, alpha1, alphaInf;  // image-span coefficients at 0, 1, inf
    Rat calibrated_slot;           // the resolved "(alpha2 z + alpha0)" slot scalar
    ConnectionForm conn;           // A(z), chart U0, degrees {1, 0, 0}
};

// alphaInf computed operationally: second spanning vector of
// Im(res_inf nabla_G + bH_inf) in the inf-adapted frame, normalized to
// (x, 0, 1); returns its first coefficient (closed form -(nu_{inf,1}-1)(nu_{inf,2}-1)).
Rat alpha_inf_operational(const Rat& q, const Rat& p, const ParamVector& nu);

// Builds A(z) per the Step-2 template; the undefined slot is calibrated
// against the predicted residue exponents at infinity (CalibrationFailed if
// no scalar satisfies them). Requires nu in N00 and q off {0, 1}.
GMData gm_matrix(const Rat& q, const Rat& p, const ParamVector& nu);

// Change of basis to ([eta7], [xi4], [xi2/bT]) followed by the unique
// normalizing gauge; returns the exact normal form at (qbar, pbar) with
// qbar = q f16/f14 and pbar = c(qbar). Throws OnContractedLine if f14 = 0 and
// BoundaryImage if qbar lands in {0, 1}.
struct XiFrameResult {
    ConnectionForm normal;  // chart U0, degrees {0,-1,-1} (after the O(-1) twist)
    Rat qbar, pbar;
};
XiFrameResult xi_frame(const GMData& gm);

// Full pipeline ox_- o mc_beta o ox_+ on moduli coordinates.
struct McResult {
    Rat qbar, pbar;
    ParamVector nu_out;     // w3(nu)
    ConnectionForm normal;  // normal form of the convolved connection
    GMData gm;
};
McResult mc_pair(const Rat& q, const Rat& p, const ParamVector& nu);

}  // namespace a2w
