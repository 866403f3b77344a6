#include "a2w/picard.hpp"

#include "a2w/errors.hpp"
#include "a2w/mat3.hpp"

#include <sstream>

namespace a2w {

std::string generator_name(Generator g) {
    switch (g) {
        case Generator::W0: return "w0";
        case Generator::W1: return "w1";
        case Generator::W2: return "w2";
        case Generator::W3: return "w3";
        case Generator::W4: return "w4";
        case Generator::W5: return "w5";
        case Generator::W6: return "w6";
        case Generator::S1: return "s1";
        case Generator::S2: return "s2";
    }
    return "?";
}

PicClass PicClass::basis(int i) {
    PicClass v;
    v[i] = 1;
    return v;
}

PicClass PicClass::operator+(const PicClass& o) const {
    PicClass r;
    for (int i = 0; i < 10; ++i) r[i] = (*this)[i] + o[i];
    return r;
}

PicClass PicClass::operator-(const PicClass& o) const {
    PicClass r;
    for (int i = 0; i < 10; ++i) r[i] = (*this)[i] - o[i];
    return r;
}

PicClass PicClass::scaled(std::int64_t s) const {
    PicClass r;
    for (int i = 0; i < 10; ++i) r[i] = s * (*this)[i];
    return r;
}

std::string PicClass::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 10; ++i) os << (i ? "," : "") << (*this)[i];
    os << "]";
    return os.str();
}

std::int64_t intersect(const PicClass& a, const PicClass& b) {
    std::int64_t s = a[0] * b[0];
    for (int i = 1; i < 10; ++i) s -= a[i] * b[i];
    return s;
}

LatticeMap LatticeMap::identity() {
    LatticeMap r;
    for (int i = 0; i < 10; ++i) r.m[i][i] = 1;
    return r;
}

PicClass LatticeMap::apply(const PicClass& v) const {
    PicClass r;
    for (int i = 0; i < 10; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < 10; ++j) s += m[i][j] * v[j];
        r[i] = s;
    }
    return r;
}

LatticeMap LatticeMap::operator*(const LatticeMap& o) const {
    LatticeMap r;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            std::int64_t s = 0;
            for (int k = 0; k < 10; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

bool LatticeMap::preserves_form() const {
    // (M e_i) . (M e_j) = e_i . e_j for all basis pairs.
    std::array<PicClass, 10> img;
    for (int i = 0; i < 10; ++i) img[i] = apply(PicClass::basis(i));
    for (int i = 0; i < 10; ++i)
        for (int j = i; j < 10; ++j)
            if (intersect(img[i], img[j]) != intersect(PicClass::basis(i), PicClass::basis(j)))
                return false;
    return true;
}

namespace {

PicClass make_class(std::initializer_list<std::pair<int, std::int64_t>> terms) {
    PicClass v;
    for (auto [i, c] : terms) v[i] = c;
    return v;
}

struct RootData {
    std::array<PicClass, 7> alpha;
    std::array<PicClass, 3> D;
    PicClass delta;

    RootData() {
        alpha[1] = make_class({{2, 1}, {3, -1}});
        alpha[2] = make_class({{1, 1}, {2, -1}});
        alpha[3] = make_class({{0, 1}, {1, -1}, {4, -1}, {6, -1}});
        alpha[4] = make_class({{6, 1}, {7, -1}});
        alpha[5] = make_class({{7, 1}, {8, -1}});
        alpha[6] = make_class({{4, 1}, {5, -1}});
        alpha[0] = make_class({{5, 1}, {9, -1}});
        D[0] = make_class({{0, 1}, {4, -1}, {5, -1}, {9, -1}});
        D[1] = make_class({{0, 1}, {1, -1}, {2, -1}, {3, -1}});
        D[2] = make_class({{0, 1}, {6, -1}, {7, -1}, {8, -1}});
        delta = D[0] + D[1] + D[2];
    }
};

const RootData& root_data() {
    static const RootData data;
    return data;
}

LatticeMap permutation_map(std::initializer_list<std::pair<int, int>> swaps) {
    LatticeMap r = LatticeMap::identity();
    for (auto [i, j] : swaps) {
        r.m[i][i] = r.m[j][j] = 0;
        r.m[i][j] = r.m[j][i] = 1;
    }
    return r;
}

}  // namespace

const PicClass& simple_root(int i) {
    if (i < 0 || i > 6) throw InvalidParameter("simple root index out of range");
    return root_data().alpha[static_cast<std::size_t>(i)];
}

const PicClass& triangle_class(int k) {
    if (k < 0 || k > 2) throw InvalidParameter("triangle class index out of range");
    return root_data().D[static_cast<std::size_t>(k)];
}

const PicClass& null_root() { return root_data().delta; }

PicClass reflect(const PicClass& root, const PicClass& d) {
    if (intersect(root, root) != -2)
        throw InvalidRoot("reflect: root self-intersection must be -2, got " +
                          std::to_string(intersect(root, root)));
    return d + root.scaled(intersect(d, root));
}

LatticeMap reflection_map(const PicClass& root) {
    LatticeMap r;
    for (int j = 0; j < 10; ++j) {
        PicClass img = reflect(root, PicClass::basis(j));
        for (int i = 0; i < 10; ++i) r.m[i][j] = img[i];
    }
    return r;
}

LatticeMap diagram_automorphism(Generator which) {
    if (which == Generator::S1) return permutation_map({{1, 4}, {2, 5}, {3, 9}});
    if (which == Generator::S2) return permutation_map({{4, 6}, {5, 7}, {8, 9}});
    throw InvalidParameter("diagram_automorphism: expected s1 or s2");
}

LatticeMap generator_lattice_map(Generator g) {
    switch (g) {
        case Generator::S1:
        case Generator::S2:
            return diagram_automorphism(g);
        default: {
            int idx = static_cast<int>(g);  // W0..W6 are 0..6
            return reflection_map(simple_root(idx));
        }
    }
}

std::array<int, 10> index_permutation(Generator g) {
    LatticeMap m = generator_lattice_map(g);
    std::array<int, 10> perm{};
    for (int i = 1; i <= 9; ++i) {
        PicClass img = m.apply(PicClass::basis(i));
        perm[i] = 0;
        for (int j = 1; j <= 9; ++j) {
            if (img == PicClass::basis(j)) {
                perm[i] = j;
                break;
            }
        }
    }
    return perm;
}

namespace {

// Exact Z-lattice facts about Q(E6^(1)) and Q(A2^(1)) inside Pic.
void lattice_rank_checks(CoxeterReport& rep) {
    auto& rd = root_data();
    auto fill = [](MatX& m, const std::vector<PicClass>& cols) {
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (int i = 0; i < 10; ++i) m(static_cast<std::size_t>(i), j) = Rat(cols[j][i]);
    };
    std::vector<PicClass> acols(rd.alpha.begin(), rd.alpha.end());
    std::vector<PicClass> dcols(rd.D.begin(), rd.D.end());
    std::vector<PicClass> all = acols;
    all.insert(all.end(), dcols.begin(), dcols.end());

    MatX ma(10, acols.size()), md(10, dcols.size()), ms(10, all.size());
    fill(ma, acols);
    fill(md, dcols);
    fill(ms, all);
    rep.rank_e6 = static_cast<int>(ma.rank());
    rep.rank_a2 = static_cast<int>(md.rank());
    rep.rank_sum = static_cast<int>(ms.rank());

    // Intersection: kernel of [alphas | -Ds]; expect dimension 1 whose
    // alpha-side combination, scaled primitive, is the null root.
    MatX k(10, 10);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 7; ++j) k(i, j) = Rat(rd.alpha[static_cast<std::size_t>(j)][i]);
        for (int j = 0; j < 3; ++j) k(i, 7 + j) = -Rat(rd.D[static_cast<std::size_t>(j)][i]);
    }
    auto ns = k.nullspace();
    rep.intersection_is_z_delta = false;
    if (ns.size() == 1) {
        // Clear denominators to the primitive integer vector.
        Int lcm = 1;
        for (const Rat& x : ns[0]) lcm = boost::multiprecision::lcm(lcm, denominator(x));
        Int gcd = 0;
        std::vector<Int> w;
        for (const Rat& x : ns[0]) {
            Int v = numerator(x) * (lcm / denominator(x));
            w.push_back(v);
            gcd = boost::multiprecision::gcd(gcd, v);
        }
        std::array<Rat, 10> combo{};
        for (int i = 0; i < 10; ++i) {
            Rat s = 0;
            for (int j = 0; j < 7; ++j) s += Rat(w[static_cast<std::size_t>(j)], gcd) * rd.alpha[static_cast<std::size_t>(j)][i];
            combo[static_cast<std::size_t>(i)] = s;
        }
        bool is_delta = true, is_minus_delta = true;
        for (int i = 0; i < 10; ++i) {
            if (combo[static_cast<std::size_t>(i)] != rd.delta[i]) is_delta = false;
            if (combo[static_cast<std::size_t>(i)] != -rd.delta[i]) is_minus_delta = false;
        }
        rep.intersection_is_z_delta = is_delta || is_minus_delta;
    }
}

}  // namespace

CoxeterReport verify_coxeter() {
    CoxeterReport rep;
    auto check = [&rep](bool ok, const std::string& what) {
        ++rep.checks;
        if (!ok) {
            rep.ok = false;
            rep.failures.push_back(what);
        }
    };

    const LatticeMap id = LatticeMap::identity();
    std::array<LatticeMap, 7> w;
    for (int i = 0; i < 7; ++i) w[static_cast<std::size_t>(i)] = reflection_map(simple_root(i));
    LatticeMap s1 = diagram_automorphism(Generator::S1);
    LatticeMap s2 = diagram_automorphism(Generator::S2);

    // Involutions and braid/commutation relations; adjacency from a_i . a_j.
    for (int i = 0; i < 7; ++i) check(w[i] * w[i] == id, "w" + std::to_string(i) + "^2 = id");
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            std::int64_t aij = intersect(simple_root(i), simple_root(j));
            std::string pair = "w" + std::to_string(i) + ",w" + std::to_string(j);
            if (aij == 0)
                check(w[i] * w[j] == w[j] * w[i], "commutation " + pair);
            else if (aij == 1)
                check(w[i] * w[j] * w[i] == w[j] * w[i] * w[j], "braid " + pair);
            else
                check(false, "unexpected adjacency " + pair + " = " + std::to_string(aij));
        }
    check(s1 * s1 == id, "s1^2 = id");
    check(s2 * s2 == id, "s2^2 = id");

    // sigma conjugation permutes the simple reflections per the induced node
    // permutation sigma(alpha_i) = alpha_{perm(i)}.
    for (auto [s, nodes, name] : {std::tuple{&s1, &rep.sigma1_nodes, "s1"},
                                  std::tuple{&s2, &rep.sigma2_nodes, "s2"}}) {
        for (int i = 0; i < 7; ++i) {
            PicClass img = s->apply(simple_root(i));
            int found = -1;
            for (int j = 0; j < 7; ++j)
                if (img == simple_root(j)) found = j;
            (*nodes)[static_cast<std::size_t>(i)] = found;
            check(found >= 0, std::string(name) + "(alpha_" + std::to_string(i) + ") is a simple root");
            if (found >= 0)
                check(*s * w[static_cast<std::size_t>(i)] * *s == w[static_cast<std::size_t>(found)],
                      std::string(name) + " w" + std::to_string(i) + " " + name + " = w" +
                          std::to_string(found));
        }
    }

    // Form preservation and delta fixing for every generator.
    for (Generator g : kAllGenerators) {
        LatticeMap m = generator_lattice_map(g);
        check(m.preserves_form(), generator_name(g) + " preserves the intersection form");
        check(m.apply(null_root()) == null_root(), generator_name(g) + " fixes delta");
    }

    // w3 images of all ten basis classes.
    auto expect_w3 = [](int j) -> PicClass {
        PicClass e0 = PicClass::basis(0);
        switch (j) {
            case 1: return e0 - PicClass::basis(4) - PicClass::basis(6);
            case 4: return e0 - PicClass::basis(1) - PicClass::basis(6);
            case 6: return e0 - PicClass::basis(1) - PicClass::basis(4);
            case 0:
                // w3(E0) = E0 + (E0 . a3) a3 = 2E0 - E1 - E4 - E6.
                return e0.scaled(2) - PicClass::basis(1) - PicClass::basis(4) - PicClass::basis(6);
            default: return PicClass::basis(j);
        }
    };
    for (int j = 0; j < 10; ++j)
        check(w[3].apply(PicClass::basis(j)) == expect_w3(j),
              "w3(E" + std::to_string(j) + ") basis image");

    // delta = a1 + 2a2 + 3a3 + 2a4 + a5 + 2a6 + a0 as an integer identity.
    PicClass marks = simple_root(1) + simple_root(2).scaled(2) + simple_root(3).scaled(3) +
                     simple_root(4).scaled(2) + simple_root(5) + simple_root(6).scaled(2) +
                     simple_root(0);
    check(marks == null_root(), "delta mark identity");
    for (int i = 0; i < 7; ++i)
        check(intersect(simple_root(i), simple_root(i)) == -2,
              "alpha_" + std::to_string(i) + " . alpha_" + std::to_string(i) + " = -2");

    lattice_rank_checks(rep);
    check(rep.rank_e6 == 7, "rank Q(E6) = 7");
    check(rep.rank_a2 == 3, "rank Q(A2) = 3");
    // The sum has rank 9 inside the rank-10 Pic (see compatibility notes).
    check(rep.rank_sum == 9, "rank (Q(E6)+Q(A2)) = 9");
    check(rep.intersection_is_z_delta, "Q(E6) intersect Q(A2) = Z delta");

    return rep;
}

}  // namespace a2w
