#include "a2w/surface.hpp"

#include "a2w/errors.hpp"

#include <vector>

namespace a2w {

NinePoints::NinePoints(const ParamVector& nu)
    : pts{PPoint(1, nu(1, 0), 1),      PPoint(1, nu(1, 1), 1),      PPoint(1, nu(1, 2), 1),
          PPoint(0, -nu(0, 0), 1),     PPoint(0, -nu(0, 1), 1),     PPoint(1, -nu(2, 0) + 1, 0),
          PPoint(1, -nu(2, 1) + 1, 0), PPoint(1, -nu(2, 2) + 1, 0), PPoint(0, -nu(0, 2), 1)} {}

const PPoint& NinePoints::point(int i) const {
    if (i < 1 || i > 9) throw InvalidParameter("point index must be 1..9");
    return pts[static_cast<std::size_t>(i - 1)];
}

namespace {

// Degree-3 monomials in the fixed order of Cubic.
std::array<Rat, 10> cubic_monomials(const PPoint& p) {
    const Rat& x0 = p[0];
    const Rat& x1 = p[1];
    const Rat& x2 = p[2];
    return {x0 * x0 * x0, x0 * x0 * x1, x0 * x0 * x2, x0 * x1 * x1, x0 * x1 * x2,
            x0 * x2 * x2, x1 * x1 * x1, x1 * x1 * x2, x1 * x2 * x2, x2 * x2 * x2};
}

std::vector<std::vector<Rat>> evaluation_kernel(const std::array<PPoint, 9>& pts) {
    MatX m(9, 10);
    for (std::size_t r = 0; r < 9; ++r) {
        auto mono = cubic_monomials(pts[r]);
        for (std::size_t c = 0; c < 10; ++c) m(r, c) = mono[c];
    }
    return m.nullspace();
}

}  // namespace

int cubic_kernel_dimension(const std::array<PPoint, 9>& pts) {
    return static_cast<int>(evaluation_kernel(pts).size());
}

Cubic unique_anticanonical_cubic(const NinePoints& points) {
    auto kernel = evaluation_kernel(points.pts);
    if (kernel.size() != 1)
        throw SingularSystem("anticanonical cubic kernel has dimension " +
                             std::to_string(kernel.size()) +
                             " (sum a_i = 0 degeneration, excluded on N)");
    Cubic c;
    for (std::size_t k = 0; k < 10; ++k) c[k] = kernel[0][k];
    // x0 (x0 - x2) x2 = x0^2 x2 - x0 x2^2: indices 2 and 5.
    Cubic triangle{};
    triangle[2] = 1;
    triangle[5] = -1;
    Rat scale;
    if (c[2] != 0)
        scale = triangle[2] / c[2];
    else if (c[5] != 0)
        scale = triangle[5] / c[5];
    else
        throw SingularSystem("anticanonical cubic is not the triangle");
    for (auto& x : c) x *= scale;
    if (c != triangle) throw SingularSystem("anticanonical cubic is not the triangle");
    return c;
}

ShearResult normalize_configuration(const std::array<Rat, 9>& a) {
    // Index 0..8 = a1..a9; rows: {a1,a2,a3} on D1, {a4,a5,a9} on D0,
    // {a6,a7,a8} on D2.
    Rat s1 = a[0] + a[1] + a[2];
    Rat s0 = a[3] + a[4] + a[8];
    Rat s2 = a[5] + a[6] + a[7];
    // Shear action on a-values: a_k -> n a_k - m - e (D1 rows),
    // n a_k + e (D0), n a_k + m (D2). (ptcond) gives a 3x3 system whose
    // solvability needs sum a_i != 0 (n = 1 / sum a_i).
    MatX sys(3, 3);  // unknowns (m, n, e)
    sys(0, 0) = -3; sys(0, 1) = s1; sys(0, 2) = -3;
    sys(1, 0) = 0;  sys(1, 1) = s0; sys(1, 2) = 3;
    sys(2, 0) = 3;  sys(2, 1) = s2; sys(2, 2) = 0;
    std::vector<Rat> sol = sys.solve({Rat(0), Rat(0), Rat(1)});
    ShearResult res;
    res.mu = sol[0];
    res.nu = sol[1];
    res.eta = sol[2];
    for (int k = 0; k < 3; ++k) res.a[static_cast<std::size_t>(k)] = res.nu * a[static_cast<std::size_t>(k)] - res.mu - res.eta;
    for (int k : {3, 4, 8}) res.a[static_cast<std::size_t>(k)] = res.nu * a[static_cast<std::size_t>(k)] + res.eta;
    for (int k : {5, 6, 7}) res.a[static_cast<std::size_t>(k)] = res.nu * a[static_cast<std::size_t>(k)] + res.mu;
    return res;
}

Rat eval_lin(const LinForm& f, const PPoint& x) {
    return f[0] * x[0] + f[1] * x[1] + f[2] * x[2];
}

QuadMapData quad_map_data(const ParamVector& nu) {
    QuadMapData d;
    d.gamma = gamma_of(nu);
    Rat g23 = Rat(2, 3) * d.gamma;
    d.a = nu(1, 0) - g23;
    d.b = nu(2, 0) - 1 - g23;
    d.c = nu(0, 0) - g23;
    d.f14 = {nu(1, 0) + nu(0, 0), Rat(-1), -nu(0, 0)};
    d.f16 = {-(nu(2, 0) - 1), Rat(-1), nu(1, 0) + nu(2, 0) - 1};
    d.f46 = {nu(2, 0) - 1, Rat(1), nu(0, 0)};
    return d;
}

PlaneMap phi_generator(Generator g, const ParamVector& nu) {
    require_membership(nu, Membership::N, "phi_generator");
    switch (g) {
        case Generator::S1: {
            MatQ m;
            m(0, 0) = -1; m(0, 2) = 1;
            m(1, 1) = -1;
            m(2, 2) = 1;
            return PlaneMap{LinearPlaneMap{m}};
        }
        case Generator::S2: {
            // Shear solved from point correspondence; see compatibility note.
            MatQ m;
            m(0, 2) = 1;
            m(1, 0) = Rat(-1, 3); m(1, 1) = 1; m(1, 2) = Rat(1, 3);
            m(2, 0) = 1;
            return PlaneMap{LinearPlaneMap{m}};
        }
        case Generator::W3: {
            if (gamma_of(nu) == 0)
                throw InvalidParameter("phi_generator(w3): gamma = 0 (excluded on N0)");
            return PlaneMap{QuadraticPlaneMap{quad_map_data(nu), nu}};
        }
        default:
            return PlaneMap{LinearPlaneMap{MatQ::identity()}};
    }
}

PPoint eval_map(const PlaneMap& map, const PPoint& x) {
    if (const auto* lin = std::get_if<LinearPlaneMap>(&map.map)) {
        std::array<Rat, 3> y{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) y[static_cast<std::size_t>(i)] += lin->m(i, j) * x[j];
        return PPoint(y[0], y[1], y[2]);
    }
    const auto& qm = std::get<QuadraticPlaneMap>(map.map);
    const QuadMapData& d = qm.data;
    Rat F14 = eval_lin(d.f14, x), F16 = eval_lin(d.f16, x), F46 = eval_lin(d.f46, x);
    Rat y0 = d.gamma * x[0] * F16;
    Rat y1 = d.a * F14 * F16 - d.b * F16 * F46 - d.c * F14 * F46;
    Rat y2 = d.gamma * x[2] * F14;
    if (y0 == 0 && y1 == 0 && y2 == 0) {
        int base = 0;
        if (F14 == 0 && F16 == 0) base = 1;       // p1 = f14 ^ f16
        else if (F14 == 0 && F46 == 0) base = 4;  // p4 = f14 ^ f46
        else if (F16 == 0 && F46 == 0) base = 6;  // p6 = f16 ^ f46
        throw IndeterminatePoint(base, "w3 map indeterminate at base point p" +
                                           std::to_string(base) + " " + x.to_string());
    }
    PPoint img(y0, y1, y2);
    if (!x.on_triangle() && img.on_triangle()) {
        // Contracted lines follow the lattice action: w3(E1) = E0-E4-E6 is the
        // line through p4, p6, i.e. f46 = 0, etc.
        std::string line = "?";
        int target = 0;
        if (F46 == 0) { line = "f46"; target = 1; }
        else if (F16 == 0) { line = "f16"; target = 4; }
        else if (F14 == 0) { line = "f14"; target = 6; }
        throw ContractedToBoundary(line, target,
                                   "input " + x.to_string() + " on " + line +
                                       " contracts to p" + std::to_string(target) +
                                       " of the target configuration");
    }
    return img;
}

}  // namespace a2w
