#include "a2w/mc.hpp"

#include "a2w/errors.hpp"

#include <algorithm>

namespace a2w {

BetaForm build_beta(const ParamVector& nu) {
    require_membership(nu, Membership::N, "build_beta");
    Rat g = gamma_of(nu);
    BetaForm b;
    b.T = g;
    for (int i = 0; i < 3; ++i) {
        Rat kron = (i == 2) ? 1 : 0;
        b.H[static_cast<std::size_t>(i)] = -nu(i, 0) + kron;
        b.V[static_cast<std::size_t>(i)] = nu(i, 0) - kron - Rat(2, 3) * g;
        b.U[static_cast<std::size_t>(i)] = b.H[static_cast<std::size_t>(i)] + b.V[static_cast<std::size_t>(i)] + b.T;
    }
    // Residue-theorem relations, exact.
    Rat sumH = b.H[0] + b.H[1] + b.H[2], sumV = b.V[0] + b.V[1] + b.V[2];
    if (b.T + sumH != 0 || b.T + sumV != 0)
        throw CalibrationFailed("beta residue relations violated");
    return b;
}

namespace {

// The counting formula alone; hypothesis checks live in predict_exponents.
ExponentPrediction predict_formula(const std::vector<Rat>& betaH, const std::vector<Rat>& betaV,
                                   const std::vector<Rat>& betaU,
                                   const std::vector<std::vector<Rat>>& mu, int r, int n) {
    ExponentPrediction out;
    out.m.resize(static_cast<std::size_t>(n));
    int sum_m = 0;
    for (int i = 0; i < n; ++i) {
        int mi = 0;
        for (const Rat& x : mu[static_cast<std::size_t>(i)])
            if (x == -betaH[static_cast<std::size_t>(i)]) ++mi;
        out.m[static_cast<std::size_t>(i)] = mi;
        sum_m += mi;
    }
    out.delta = (n - 2) * r - sum_m;
    out.rank = r + out.delta;
    for (int i = 0; i < n; ++i) {
        std::vector<Rat> div;
        int mult = out.m[static_cast<std::size_t>(i)] + out.delta;
        for (int k = 0; k < mult; ++k) div.push_back(betaV[static_cast<std::size_t>(i)]);
        for (const Rat& x : mu[static_cast<std::size_t>(i)])
            if (x + betaH[static_cast<std::size_t>(i)] != 0)
                div.push_back(x + betaU[static_cast<std::size_t>(i)]);
        std::sort(div.begin(), div.end());
        out.divisors.push_back(std::move(div));
    }
    return out;
}

}  // namespace

ExponentPrediction predict_exponents(const std::vector<Rat>& betaH, const std::vector<Rat>& betaV,
                                     const std::vector<Rat>& betaU, const Rat& betaT,
                                     const std::vector<std::vector<Rat>>& mu, int r, int n) {
    if (static_cast<int>(mu.size()) != n || static_cast<int>(betaH.size()) != n ||
        static_cast<int>(betaV.size()) != n || static_cast<int>(betaU.size()) != n)
        throw InvalidParameter("predict_exponents: need per-point data of length n");
    for (const auto& row : mu)
        if (static_cast<int>(row.size()) != r)
            throw InvalidParameter("predict_exponents: each point needs r exponents");

    // Convolution hypotheses, checked and reported by name.
    if (is_integer(betaT))
        throw HypothesisViolated("betaT not integer", "beta^T = " + rat_to_string(betaT) + " is an integer");
    for (int i = 0; i < n; ++i) {
        const auto& row = mu[static_cast<std::size_t>(i)];
        for (int a = 0; a < r; ++a)
            for (int b = a + 1; b < r; ++b) {
                Rat d = row[static_cast<std::size_t>(a)] - row[static_cast<std::size_t>(b)];
                if (d != 0 && is_integer(d))
                    throw HypothesisViolated(
                        "intra-point differences",
                        "mu_{" + std::to_string(i) + "," + std::to_string(a) + "} - mu_{" +
                            std::to_string(i) + "," + std::to_string(b) + "} = " + rat_to_string(d) +
                            " is a nonzero integer");
            }
        for (int a = 0; a < r; ++a) {
            Rat m1 = row[static_cast<std::size_t>(a)] + betaH[static_cast<std::size_t>(i)] + betaT;
            if (is_integer(m1))
                throw HypothesisViolated("mu + beta^H + beta^T not integer",
                                         "violated at point " + std::to_string(i));
            Rat m2 = row[static_cast<std::size_t>(a)] + betaH[static_cast<std::size_t>(i)];
            if (m2 != 0 && is_integer(m2))
                throw HypothesisViolated("mu + beta^H not in Z \\ {0}",
                                         "violated at point " + std::to_string(i));
        }
    }

    return predict_formula(betaH, betaV, betaU, mu, r, n);
}

namespace {

// Input exponents of G = E (x) O(1): the nu rows with the infinity row
// shifted by -1.
std::vector<std::vector<Rat>> g_exponents(const ParamVector& nu) {
    std::vector<std::vector<Rat>> mu(3);
    for (int i = 0; i < 3; ++i) {
        Rat kron = (i == 2) ? 1 : 0;
        for (int j = 0; j < 3; ++j) mu[static_cast<std::size_t>(i)].push_back(nu(i, j) - kron);
    }
    return mu;
}

// Predicted divisors for the w3 pipeline; the formula alone, since the slot
// calibration only needs the target eigenvalue sets (callers wanting the
// hypothesis gate use predict_exponents directly).
ExponentPrediction predict_for_pipeline(const ParamVector& nu, const BetaForm& b) {
    return predict_formula({b.H.begin(), b.H.end()}, {b.V.begin(), b.V.end()},
                           {b.U.begin(), b.U.end()}, g_exponents(nu), 3, 3);
}

MatP gm_template(const Rat& q, const Rat& p, const ParamVector& nu, const BetaForm& b,
                 const Rat& slot, const Rat& alpha0, const Rat& alpha1) {
    const Rat& bT = b.T;
    Rat n00 = nu(0, 0), n10 = nu(1, 0);
    MatP A;
    A(0, 0) = Poly({-p + n00 - bT / 3, Rat(2, 3) * bT - n00 - n10});
    // -bT z (slot (z-1) + alpha1)
    A(0, 1) = Poly({Rat(0), -bT * (alpha1 - slot), -bT * slot});
    // -bT (slot z + alpha0)(z-1)
    A(0, 2) = Poly({bT * alpha0, bT * (slot - alpha0), -bT * slot});
    A(1, 0) = Poly((q - 1) / bT);
    A(1, 1) = Poly({-n00 + Rat(2, 3) * bT, -bT / 3 + p + n00});
    A(1, 2) = Poly({-(p - n10), p - n10});
    A(2, 0) = Poly(-q / bT);
    A(2, 1) = Poly({Rat(0), -(p + n00)});
    A(2, 2) = Poly({-bT / 3 + p, -bT / 3 - p + n10});
    return A;
}

}  // namespace

Rat alpha_inf_operational(const Rat& q, const Rat& p, const ParamVector& nu) {
    // res_inf of nabla_G in the inf-adapted frame, G carrying the U0 normal
    // form matrix with split degrees (1,0,0).
    ConnectionForm g = tensor_twist(build_normal_form(q, p, nu, Chart::U0), +1);
    MatQ R = residue_at_pole(g, Pole::Infinity);
    BetaForm b = build_beta(nu);
    MatQ M = R + MatQ::identity().scaled(b.H[2]);
    // The image of M is two-dimensional; its unique member of the form
    // (x, 0, 1) determines alpha_inf. Solve M c = (x, 0, 1)^T: rows 2,3 give
    // two equations in c, then x follows (independent of the solution choice
    // since (1,0,0) is not in the image).
    MatX aug(2, 4);
    for (int j = 0; j < 3; ++j) {
        aug(0, static_cast<std::size_t>(j)) = M(1, j);
        aug(1, static_cast<std::size_t>(j)) = M(2, j);
    }
    aug(0, 3) = 0;
    aug(1, 3) = 1;
    auto pivots = aug.rref();
    std::array<Rat, 3> c{};
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == 3) throw CalibrationFailed("no image vector of the form (x,0,1) at infinity");
        c[pivots[k]] = aug(k, 3);
    }
    Rat x = M(0, 0) * c[0] + M(0, 1) * c[1] + M(0, 2) * c[2];
    return x;
}

GMData gm_matrix(const Rat& q, const Rat& p, const ParamVector& nu) {
    require_membership(nu, Membership::N, "gm_matrix");
    if (gamma_of(nu) == 0)
        throw InvalidParameter("gm_matrix: gamma = 0 (excluded on N0)");
    if (q == 0 || q == 1) throw ChartUnavailable("gm_matrix needs q off {0,1}");
    GMData gm;
    gm.q = q;
    gm.p = p;
    gm.nu = nu;
    gm.beta = build_beta(nu);
    gm.alpha0 = (p + nu(0, 1)) * (p + nu(0, 2)) / q;
    gm.alpha1 = (p - nu(1, 1)) * (p - nu(1, 2)) / (q - 1);
    gm.alphaInf = alpha_inf_operational(q, p, nu);
    // Closed-form cross-check of the operational computation (lambda = 1).
    if (gm.alphaInf != -(nu(2, 1) - 1) * (nu(2, 2) - 1))
        throw CalibrationFailed("operational alpha_inf disagrees with -(nu_inf1 - 1)(nu_inf2 - 1)");

    // Calibrate the undefined "(alpha2 z + alpha0)" slot: one scalar X, pinned
    // by the predicted residue exponents of G' at infinity (the z = 0, 1
    // residues are slot-independent). The condition is linear in X.
    ExponentPrediction pred = predict_for_pipeline(nu, gm.beta);
    auto predicted = [&pred](int i) {
        std::array<Rat, 3> e;
        for (int k = 0; k < 3; ++k) e[static_cast<std::size_t>(k)] = pred.divisors[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        return e;
    };
    auto residue_char_gap = [&](const Rat& X) {
        ConnectionForm conn{gm_template(q, p, nu, gm.beta, X, gm.alpha0, gm.alpha1), Chart::U0, {1, 0, 0}};
        MatQ R = residue_at_pole(conn, Pole::Infinity);
        auto e = predicted(2);
        Poly target({-e[0] * e[1] * e[2], e[0] * e[1] + e[1] * e[2] + e[2] * e[0],
                     -(e[0] + e[1] + e[2]), Rat(1)});
        return R.char_poly() - target;
    };
    // Affine in X: gap(X) = gap(0) + X (gap(1) - gap(0)); solve each
    // coefficient, demand a consistent common root.
    Poly g0 = residue_char_gap(0), g1 = residue_char_gap(1);
    Poly dgap = g1 - g0;
    bool have = false;
    Rat X = 0;
    for (int k = 0; k <= std::max(g0.degree(), dgap.degree()); ++k) {
        if (dgap.coeff(k) != 0) {
            Rat cand = -g0.coeff(k) / dgap.coeff(k);
            if (have && cand != X) throw CalibrationFailed("slot conditions are inconsistent");
            X = cand;
            have = true;
        }
    }
    if (!have) {
        if (!g0.is_zero()) throw CalibrationFailed("slot conditions unsatisfiable");
        X = gm.alphaInf;  // unconstrained (cannot happen at valid inputs)
    }
    if (!residue_char_gap(X).is_zero())
        throw CalibrationFailed("calibrated slot fails the infinity exponents");
    gm.calibrated_slot = X;
    if (X != gm.alphaInf)
        throw CalibrationFailed("calibrated slot " + rat_to_string(X) +
                                " differs from alpha_inf " + rat_to_string(gm.alphaInf));

    gm.conn = ConnectionForm{gm_template(q, p, nu, gm.beta, X, gm.alpha0, gm.alpha1),
                             Chart::U0,
                             {1, 0, 0}};
    check_degree_bounds(gm.conn);

    // Residues at 0 and 1 must carry the predicted exponent sets.
    if (!char_poly_matches(residue_at_pole(gm.conn, Pole::Zero), predicted(0)) ||
        !char_poly_matches(residue_at_pole(gm.conn, Pole::One), predicted(1)))
        throw CalibrationFailed("GM residues at 0/1 fail the predicted exponents");
    return gm;
}

XiFrameResult xi_frame(const GMData& gm) {
    const Rat& q = gm.q;
    const Rat& p = gm.p;
    const ParamVector& nu = gm.nu;
    const Rat& bT = gm.beta.T;
    Rat n00 = nu(0, 0), n10 = nu(1, 0);

    Rat f14 = (n10 + n00) * q - p - n00;
    Rat f16 = -(nu(2, 0) - 1) * q - p + n10 + nu(2, 0) - 1;
    Rat f46 = (nu(2, 0) - 1) * q + p + n00;
    if (f14 == 0)
        throw OnContractedLine("xi_frame: f14(q,p,1) = 0, image is an exceptional-divisor point");
    Rat qbar = q * f16 / f14;
    if (qbar == 0 || qbar == 1)
        throw BoundaryImage("xi_frame: qbar = " + rat_to_string(qbar) +
                            " lies on the chart boundary (f16 = 0 or qbar = 1 locus)");

    // Basis ([eta7], [xi4], [xi2]/bT): xi4 = -(q/bT) eta2 + ((q-1)/bT) eta4 +
    // ell(z) eta7, xi2 = (p + nu00) eta2 - (p - nu10) eta4; the 1/bT rescale
    // makes the (3,2) entry monic.
    Poly ell({-p + n00 - bT / 3, Rat(2, 3) * bT - n00 - n10});
    MatP P;
    P(0, 0) = Poly(Rat(1));
    P(0, 1) = ell;
    P(1, 1) = Poly((q - 1) / bT);
    P(2, 1) = Poly(-q / bT);
    P(1, 2) = Poly(-(p - n10) / bT);
    P(2, 2) = Poly((p + n00) / bT);
    MatP in_xi = gauge_transform(gm.conn.A, P);

    // E' = G' (x) O(-1): same matrix, degrees drop to (0,-1,-1); the final
    // admissible gauge lands exactly on the normal form.
    ConnectionForm eprime{in_xi, Chart::U0, {0, -1, -1}};
    check_degree_bounds(eprime);
    ConnectionForm normal = normalize_split_frame(eprime).normal;

    auto [qn, pn] = apparent_pair(normal);
    if (qn != qbar)
        throw CalibrationFailed("xi_frame apparent singularity " + rat_to_string(qn) +
                                " differs from q f16/f14 = " + rat_to_string(qbar));
    Rat c_at_qbar = (-bT * f14 * qbar + (3 * p - bT) * f14 - 3 * q * p * bT + 3 * q * bT * n10) /
                    (3 * f14);
    if (pn != c_at_qbar)
        throw CalibrationFailed("xi_frame dual parameter differs from c(qbar)");
    return XiFrameResult{normal, qn, pn};
}

McResult mc_pair(const Rat& q, const Rat& p, const ParamVector& nu) {
    // ox_+ : E -> G and ox_- : G' -> E' are bookkeeping on the U0 matrix;
    // gm_matrix works at the G level and xi_frame returns the E' normal form.
    McResult out;
    out.gm = gm_matrix(q, p, nu);
    XiFrameResult xf = xi_frame(out.gm);
    out.qbar = xf.qbar;
    out.pbar = xf.pbar;
    out.normal = xf.normal;
    out.nu_out = act_nu(Generator::W3, nu);
    return out;
}

}  // namespace a2w
