#include "a2w/params.hpp"

#include "a2w/errors.hpp"
#include "a2w/mat3.hpp"

#include <sstream>

namespace a2w {

Rat gamma_of(const ParamVector& nu) { return nu(0, 0) + nu(1, 0) + nu(2, 0) - 1; }

std::string ParamVector::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        os << (i ? "; " : "(");
        for (int j = 0; j < 3; ++j) os << (j ? "," : "") << rat_to_string(nu[i][j]);
    }
    os << ")";
    return os.str();
}

std::string membership_name(Membership m) {
    switch (m) {
        case Membership::None: return "none";
        case Membership::N: return "N";
        case Membership::N0: return "N0";
        case Membership::N00: return "N00";
    }
    return "?";
}

Membership membership(const ParamVector& nu) {
    for (int i = 0; i < 3; ++i) {
        Rat target = (i == 2) ? 2 : 0;
        if (nu(i, 0) + nu(i, 1) + nu(i, 2) != target) return Membership::None;
        if (nu(i, 0) == nu(i, 1) || nu(i, 1) == nu(i, 2) || nu(i, 2) == nu(i, 0))
            return Membership::None;
    }
    for (int j0 = 0; j0 < 3; ++j0)
        for (int j1 = 0; j1 < 3; ++j1)
            for (int j2 = 0; j2 < 3; ++j2)
                if (is_integer(nu(0, j0) + nu(1, j1) + nu(2, j2))) return Membership::N;
    for (int i = 0; i < 3; ++i)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (is_integer(nu(i, a) - nu(i, b))) return Membership::N0;
    return Membership::N00;
}

bool at_least(Membership have, Membership want) {
    auto level = [](Membership m) {
        switch (m) {
            case Membership::None: return 0;
            case Membership::N: return 1;
            case Membership::N0: return 2;
            case Membership::N00: return 3;
        }
        return 0;
    };
    return level(have) >= level(want);
}

void require_membership(const ParamVector& nu, Membership need, const std::string& who) {
    Membership have = membership(nu);
    if (!at_least(have, need))
        throw InvalidParameter(who + ": nu " + nu.to_string() + " is in " +
                               membership_name(have) + ", needs " + membership_name(need));
}

ParamVector act_nu(Generator g, const ParamVector& in) {
    ParamVector nu = in;
    auto swap_cols = [&nu](int row, int a, int b) { std::swap(nu(row, a), nu(row, b)); };
    switch (g) {
        case Generator::W1: swap_cols(1, 1, 2); break;
        case Generator::W2: swap_cols(1, 0, 1); break;
        case Generator::W4: swap_cols(2, 0, 1); break;  // root E6-E7
        case Generator::W5: swap_cols(2, 1, 2); break;  // root E7-E8
        case Generator::W6: swap_cols(0, 0, 1); break;  // root E4-E5
        case Generator::W0: swap_cols(0, 1, 2); break;  // root E5-E9
        case Generator::W3: {
            Rat g3 = gamma_of(in) / 3;
            for (int i = 0; i < 3; ++i) {
                nu(i, 0) -= 2 * g3;
                nu(i, 1) += g3;
                nu(i, 2) += g3;
            }
            break;
        }
        case Generator::S1:
            std::swap(nu.nu[0], nu.nu[1]);
            break;
        case Generator::S2: {
            Rat shift(2, 3);
            for (int j = 0; j < 3; ++j) {
                nu(0, j) = in(2, j) - shift;
                nu(2, j) = in(0, j) + shift;
            }
            break;
        }
    }
    return nu;
}

ParamVector act_nu_word(const std::vector<Generator>& word, const ParamVector& nu) {
    ParamVector cur = nu;
    for (Generator g : word) cur = act_nu(g, cur);
    return cur;
}

namespace {

// chi on basis classes under the calibrated dictionary: chi(E_k) is an affine
// expression in one nu entry. Exceptional index k -> (row, col).
struct Dict {
    int row, col;
};
Dict eps_dict(int k) {
    switch (k) {
        case 1: return {1, 0};
        case 2: return {1, 1};
        case 3: return {1, 2};
        case 4: return {0, 0};
        case 5: return {0, 1};
        case 9: return {0, 2};
        case 6: return {2, 0};
        case 7: return {2, 1};
        case 8: return {2, 2};
        default: throw InvalidParameter("no exceptional dictionary entry for E0");
    }
}

// Values of chi on the simple roots.
std::array<Rat, 7> chi_simple_values(const ParamVector& nu, ChiSign sign) {
    Rat s = (sign == ChiSign::Minus) ? -1 : 1;
    std::array<Rat, 7> vals;
    for (int i = 0; i < 7; ++i) {
        if (i == 3) {
            vals[static_cast<std::size_t>(i)] = gamma_of(nu);
            continue;
        }
        const PicClass& r = simple_root(i);
        int pos = -1, neg = -1;
        for (int k = 1; k <= 9; ++k) {
            if (r[k] == 1) pos = k;
            if (r[k] == -1) neg = k;
        }
        Dict dp = eps_dict(pos), dn = eps_dict(neg);
        vals[static_cast<std::size_t>(i)] = s * (nu(dp.row, dp.col) - nu(dn.row, dn.col));
    }
    return vals;
}

// Coordinates of a class in the simple-root basis; throws InvalidRoot when
// the class is outside the root lattice.
std::array<Rat, 7> root_coordinates(const PicClass& cls) {
    MatX m(10, 8);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 7; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rat(simple_root(j)[i]);
        m(static_cast<std::size_t>(i), 7) = Rat(cls[i]);
    }
    auto pivots = m.rref();
    std::array<Rat, 7> coords{};
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == 7)
            throw InvalidRoot("class " + cls.to_string() + " is not in the E6^(1) root lattice");
        coords[pivots[k]] = m(k, 7);
    }
    return coords;
}

}  // namespace

Rat chi(const PicClass& root, const ParamVector& nu, ChiSign sign) {
    std::array<Rat, 7> coords = root_coordinates(root);
    std::array<Rat, 7> vals = chi_simple_values(nu, sign);
    Rat acc = 0;
    for (int i = 0; i < 7; ++i) acc += coords[static_cast<std::size_t>(i)] * vals[static_cast<std::size_t>(i)];
    return acc;
}

ParamVector derive_action_from_chi(Generator g, const ParamVector& nu, ChiSign sign) {
    LatticeMap m = generator_lattice_map(g);
    // Unknowns x_{i,j} = (g nu)_{i,j}, flattened row-major. Equations:
    // chi(alpha_k, x) = chi(g(alpha_k), nu) for k = 0..6, plus row sums.
    MatX sys(10, 9);
    std::vector<Rat> rhs(10);
    Rat s = (sign == ChiSign::Minus) ? -1 : 1;
    for (int k = 0; k < 7; ++k) {
        // chi(alpha_k, x) as a linear form in x: dictionary differences for
        // k != 3, gamma-form for k = 3 (constant -1 moves to the rhs).
        Rat constant = 0;
        if (k == 3) {
            sys(static_cast<std::size_t>(k), 0) = 1;   // x_{0,0}
            sys(static_cast<std::size_t>(k), 3) = 1;   // x_{1,0}
            sys(static_cast<std::size_t>(k), 6) = 1;   // x_{inf,0}
            constant = -1;
        } else {
            const PicClass& r = simple_root(k);
            for (int e = 1; e <= 9; ++e) {
                if (r[e] == 0) continue;
                Dict d = eps_dict(e);
                sys(static_cast<std::size_t>(k), static_cast<std::size_t>(3 * d.row + d.col)) += s * Rat(r[e]);
            }
        }
        rhs[static_cast<std::size_t>(k)] = chi(m.apply(simple_root(k)), nu, sign) - constant;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) sys(static_cast<std::size_t>(7 + i), static_cast<std::size_t>(3 * i + j)) = 1;
        rhs[static_cast<std::size_t>(7 + i)] = (i == 2) ? 2 : 0;
    }
    std::vector<Rat> x = sys.solve(rhs);
    ParamVector out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out(i, j) = x[static_cast<std::size_t>(3 * i + j)];
    return out;
}

}  // namespace a2w
