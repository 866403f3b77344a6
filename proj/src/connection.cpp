#include "a2w/connection.hpp"

#include "a2w/errors.hpp"

namespace a2w {

namespace {

Rat e2_row(const ParamVector& nu, int i) {
    return nu(i, 0) * nu(i, 1) + nu(i, 1) * nu(i, 2) + nu(i, 2) * nu(i, 0);
}

Rat e3_row(const ParamVector& nu, int i) { return nu(i, 0) * nu(i, 1) * nu(i, 2); }

std::string entry_name(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

void check_degree_bounds(const ConnectionForm& conn) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int bound = conn.split_degrees[static_cast<std::size_t>(i)] -
                        conn.split_degrees[static_cast<std::size_t>(j)] + 1;
            if (conn.A(i, j).degree() > bound)
                throw ShapeMismatch(entry_name(i, j),
                                    "entry " + entry_name(i, j) + " has degree " +
                                        std::to_string(conn.A(i, j).degree()) +
                                        " > bound " + std::to_string(bound));
        }
}

ConnectionForm build_normal_form(const Rat& q, const Rat& p, const ParamVector& nu, Chart chart) {
    require_membership(nu, Membership::N, "build_normal_form");
    if (q == 0 || q == 1)
        throw ChartUnavailable("normal form needs the chart coordinate off {0,1}, got " +
                               rat_to_string(q));
    ConnectionForm conn;
    conn.chart = chart;
    conn.split_degrees = {0, -1, -1};
    MatP& A = conn.A;
    if (chart == Chart::U0) {
        Poly a12 = interpolate_quadratic(-p * p - e2_row(nu, 0), -p * p - e2_row(nu, 1),
                                         1 - e2_row(nu, 2));
        Poly a13 = interpolate_quadratic(
            (p + nu(0, 0)) * (p + nu(0, 1)) * (p + nu(0, 2)) / q,
            (p - nu(1, 0)) * (p - nu(1, 1)) * (p - nu(1, 2)) / (q - 1),
            (1 - nu(2, 0)) * (1 - nu(2, 1)) * (1 - nu(2, 2)));
        A(0, 1) = a12;
        A(0, 2) = a13;
        A(1, 0) = Poly(Rat(1));
        A(1, 1) = Poly(-p);
        A(2, 1) = Poly({-q, Rat(1)});
        A(2, 2) = Poly(p);
    } else {
        // b13's leading coefficient must be -e3(nu_0) for the z = 0
        // exponents to come out right (see the check report's calibration
        // notes for the sign convention).
        Poly b12 = interpolate_quadratic(1 - p * p - e2_row(nu, 2), -p * p - e2_row(nu, 1),
                                         -e2_row(nu, 0));
        Poly b13 = interpolate_quadratic(
            (p - 1 + nu(2, 0)) * (p - 1 + nu(2, 1)) * (p - 1 + nu(2, 2)) / q,
            (p - nu(1, 0)) * (p - nu(1, 1)) * (p - nu(1, 2)) / (q - 1), -e3_row(nu, 0));
        A(0, 1) = b12;
        A(0, 2) = b13;
        A(1, 0) = Poly(Rat(1));
        A(1, 1) = Poly({-1 - p, Rat(1)});  // w - 1 - p'
        A(2, 1) = Poly({-q, Rat(1)});      // w - q'
        A(2, 2) = Poly({-1 + p, Rat(1)});  // w - 1 + p'
    }
    return conn;
}

NormalFormPair build_normal_form(const MPoint& point, const ParamVector& nu) {
    auto [q, p] = point.chart1();
    auto [qp, pp] = point.chart2();
    return NormalFormPair{build_normal_form(q, p, nu, Chart::U0),
                          build_normal_form(qp, pp, nu, Chart::UInf)};
}

namespace {

// Residue at the far end of the chart: with split degrees d and matrix
// entries A_ij = sum a_k var^k, the twist to the far-adapted frame gives
// res(i,j) = -a_{d_i - d_j + 1} - [i = j] d_i.
MatQ residue_far(const ConnectionForm& conn) {
    MatQ r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int k = conn.split_degrees[static_cast<std::size_t>(i)] -
                    conn.split_degrees[static_cast<std::size_t>(j)] + 1;
            Rat c = k >= 0 ? conn.A(i, j).coeff(k) : Rat(0);
            r(i, j) = -c;
            if (i == j) r(i, j) -= conn.split_degrees[static_cast<std::size_t>(i)];
        }
    return r;
}

}  // namespace

MatQ residue_at_pole(const ConnectionForm& conn, Pole t) {
    const bool u0 = conn.chart == Chart::U0;
    switch (t) {
        case Pole::Zero:
            return u0 ? residue_of_form(conn.A, 0) : residue_far(conn);
        case Pole::One:
            return residue_of_form(conn.A, 1);
        case Pole::Infinity:
            return u0 ? residue_far(conn) : residue_of_form(conn.A, 0);
    }
    throw InvalidParameter("unknown pole");
}

std::pair<Rat, Rat> apparent_pair(const ConnectionForm& conn) {
    if (conn.chart != Chart::U0)
        throw ShapeMismatch("chart", "apparent_pair expects a chart-U0 normal form");
    const MatP& A = conn.A;
    auto expect = [&](bool ok, int i, int j, const std::string& what) {
        if (!ok)
            throw ShapeMismatch(entry_name(i, j), "entry " + entry_name(i, j) + " " + what +
                                                      ", got " + A(i, j).to_string());
    };
    expect(A(0, 0).is_zero(), 0, 0, "must be 0");
    expect(A(1, 0) == Poly(Rat(1)), 1, 0, "must be 1");
    expect(A(2, 0).is_zero(), 2, 0, "must be 0");
    expect(A(1, 2).is_zero(), 1, 2, "must be 0");
    expect(A(1, 1).is_constant(), 1, 1, "must be constant");
    expect(A(2, 2).is_constant(), 2, 2, "must be constant");
    expect(A(2, 2) == -A(1, 1), 2, 2, "must be -(2,2)");
    expect(A(2, 1).degree() == 1 && A(2, 1).leading() == 1, 2, 1, "must be monic linear");
    Rat q = -A(2, 1).constant_term();
    Rat p = A(2, 2).constant_term();
    return {q, p};
}

NormalizeResult normalize_split_frame(const ConnectionForm& conn) {
    if (conn.split_degrees != std::array<int, 3>{0, -1, -1})
        throw NoGauge("normalize_split_frame expects bundle O + O(-1) + O(-1)");
    check_degree_bounds(conn);
    const MatP& A = conn.A;
    // The chart template's diagonal offset: 0 on U0, var - 1 on UInf.
    const bool u0 = conn.chart == Chart::U0;
    const Rat off_lead = u0 ? 0 : 1;

    // E2 is the O summand; nabla(E2) mod E2 has constant components by the
    // split-frame contract, and they determine E1.
    if (!A(1, 0).is_constant() || !A(2, 0).is_constant())
        throw NoGauge("column 1 is not split-adapted (lower block not constant)");
    Rat c1 = A(1, 0).constant_term(), c2 = A(2, 0).constant_term();
    if (c1 == 0 && c2 == 0)
        throw NoGauge("nabla preserves the O summand: input is reducible");
    MatP C = MatP::identity();
    if (c1 != 0) {
        C(1, 1) = Poly(c1);
        C(2, 1) = Poly(c2);
        C(1, 2) = Poly(Rat(0));
        C(2, 2) = Poly(Rat(1));
    } else {
        C(1, 1) = Poly(c1);
        C(2, 1) = Poly(c2);
        C(1, 2) = Poly(Rat(1));
        C(2, 2) = Poly(Rat(0));
    }
    MatP A1 = gauge_transform(A, C);

    // Unipotent stage: phi1 kills (1,1); the leading coefficient of (3,2)
    // sets the O(-1) scale; kappa flattens (2,2) to the template offset;
    // phi2 kills (2,3).
    Poly phi1 = A1(0, 0);
    Rat tt = A1(2, 1).coeff(1);
    if (tt == 0) throw NoGauge("entry (3,2) has no linear part: apparent singularity undefined");
    Rat kap = (phi1 + A1(1, 1)).coeff(1) - off_lead;
    Poly phi2 = Rat(kap * kap / tt) * A1(2, 1) + kap * A1(2, 2) - kap * A1(1, 1) - tt * A1(1, 2);
    MatP h = MatP::identity();
    h(0, 1) = phi1;
    h(0, 2) = phi2;
    h(1, 2) = Poly(kap);
    h(2, 2) = Poly(tt);
    MatP g = C * h;
    ConnectionForm out = conn;
    out.A = gauge_transform(A, g);

    // The construction must land exactly on the template; anything else means
    // the input violated the contract.
    const MatP& N = out.A;
    bool shape_ok = N(0, 0).is_zero() && N(1, 0) == Poly(Rat(1)) && N(2, 0).is_zero() &&
                    N(1, 2).is_zero() && N(2, 1).degree() == 1 && N(2, 1).leading() == 1;
    if (shape_ok) {
        Poly offset = u0 ? Poly() : Poly({Rat(-1), Rat(1)});
        Poly m22 = N(1, 1) - offset, m33 = N(2, 2) - offset;
        shape_ok = m22.is_constant() && m33.is_constant() && m33 == -m22;
    }
    if (!shape_ok) throw NoGauge("input is not gauge-equivalent to a normal form");
    return NormalizeResult{g, out};
}

ConnectionForm chart_transfer(const ConnectionForm& conn) {
    check_degree_bounds(conn);
    // From d + A(v) dv/(v(v-1)) in the v-chart frame to the other chart:
    // substitute v = 1/u, twist by diag(u^{-d_j}) and add the derivative term
    // -d_i (u-1) on the diagonal. Entrywise: A'_ij(u) = sum_k a_k u^{d_i-d_j+1-k},
    // polynomial exactly under the degree bounds.
    ConnectionForm out;
    out.chart = conn.chart == Chart::U0 ? Chart::UInf : Chart::U0;
    out.split_degrees = conn.split_degrees;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int shift = conn.split_degrees[static_cast<std::size_t>(i)] -
                        conn.split_degrees[static_cast<std::size_t>(j)] + 1;
            const Poly& e = conn.A(i, j);
            std::vector<Rat> coeffs(static_cast<std::size_t>(shift > 0 ? shift + 1 : 1), Rat(0));
            for (int k = 0; k <= e.degree(); ++k) {
                int pow = shift - k;
                if (e.coeff(k) == 0) continue;
                if (pow < 0)
                    throw ShapeMismatch(entry_name(i, j),
                                        "chart transfer leaves a pole in entry " + entry_name(i, j));
                if (pow >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(pow) + 1, Rat(0));
                coeffs[static_cast<std::size_t>(pow)] += e.coeff(k);
            }
            out.A(i, j) = Poly(std::move(coeffs));
        }
    Poly u_minus_1({Rat(-1), Rat(1)});
    for (int i = 0; i < 3; ++i)
        out.A(i, i) -= Rat(conn.split_degrees[static_cast<std::size_t>(i)]) * u_minus_1;
    return out;
}

ConnectionForm tensor_twist(const ConnectionForm& conn, int sign) {
    if (sign != 1 && sign != -1) throw InvalidParameter("tensor_twist: sign must be +-1");
    ConnectionForm out = conn;
    for (auto& d : out.split_degrees) d += sign;
    return out;
}

ConnectionForm realize_sigma(Generator which, const ConnectionForm& conn) {
    if (conn.chart != Chart::U0)
        throw ShapeMismatch("chart", "realize_sigma expects chart-U0 input");
    (void)apparent_pair(conn);  // normal-shape precondition
    if (which == Generator::S1) {
        // z -> 1-z; dz/(z(z-1)) is anti-invariant; conjugate by diag(-1,1,1).
        Poly one_minus_z({Rat(1), Rat(-1)});
        ConnectionForm out = conn;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Poly e = Rat(-1) * conn.A(i, j).compose(one_minus_z);
                if ((i == 0) != (j == 0)) e = Rat(-1) * e;  // diag(-1,1,1) conjugation
                out.A(i, j) = e;
            }
        return out;
    }
    if (which == Generator::S2) {
        // Rename the U0 data as UInf data for the pulled-back frame (s2 reads
        // z = w across the charts), tensor with the -2/3 dz/z twist (written
        // +2/3 dw/w in this chart), transfer to U0 and normalize.
        ConnectionForm pulled = conn;
        pulled.chart = Chart::UInf;
        Poly w_minus_1({Rat(-1), Rat(1)});
        for (int i = 0; i < 3; ++i) pulled.A(i, i) += Rat(2, 3) * w_minus_1;
        ConnectionForm onU0 = chart_transfer(pulled);
        return normalize_split_frame(onU0).normal;
    }
    throw InvalidParameter("realize_sigma: expected s1 or s2");
}

Rat fuchs_sum(const ParamVector& nu, int degree) {
    Rat s = degree;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += nu(i, j);
    return s;
}

}  // namespace a2w
