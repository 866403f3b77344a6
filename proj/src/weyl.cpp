#include "a2w/weyl.hpp"

#include "a2w/connection.hpp"
#include "a2w/errors.hpp"
#include "a2w/mc.hpp"
#include "a2w/rng.hpp"
#include "a2w/surface.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace a2w {

Word Word::parse(const std::string& text) {
    Word w;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        std::string t;
        for (char c : token) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (t.size() == 2 && t[0] == 'w' && t[1] >= '0' && t[1] <= '6')
            w.tokens.push_back(static_cast<Generator>(t[1] - '0'));
        else if (t == "s1")
            w.tokens.push_back(Generator::S1);
        else if (t == "s2")
            w.tokens.push_back(Generator::S2);
        else
            throw ParseError("bad word token '" + token + "' (expected w0..w6, s1, s2)");
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            token += c;
    }
    flush();
    return w;
}

std::string Word::to_string() const {
    std::string s;
    for (Generator g : tokens) {
        if (!s.empty()) s += " ";
        s += generator_name(g);
    }
    return s;
}

namespace {

ModuliState apply_one(Generator g, const ModuliState& state, Via via) {
    ParamVector nu_out = act_nu(g, state.nu);
    switch (g) {
        case Generator::S1:
        case Generator::S2:
            return ModuliState{nu_out, eval_map(phi_generator(g, state.nu), state.point)};
        case Generator::W3: {
            if (via == Via::Surface)
                return ModuliState{nu_out, eval_map(phi_generator(g, state.nu), state.point)};
            auto ch = state.point.chart1();
            if (!ch) {
                // x2 = 0 points sit on the triangle; the moduli contract
                // excludes them, so chart 1 always applies here.
                throw InvalidParameter("w3 via mc needs a chart-1 point");
            }
            McResult mc = mc_pair(ch->first, ch->second, state.nu);
            return ModuliState{nu_out, PPoint(mc.qbar, mc.pbar, 1)};
        }
        default:
            // w_i (i != 3): parabolic relabeling only, the point is fixed.
            return ModuliState{nu_out, state.point};
    }
}

}  // namespace

ModuliState apply(const Word& word, const ModuliState& state, Via via) {
    ModuliState cur = state;
    for (std::size_t k = 0; k < word.tokens.size(); ++k) {
        try {
            cur = apply_one(word.tokens[k], cur, via);
        } catch (const Error& e) {
            throw WordStepError(k, e.code(),
                                "token " + generator_name(word.tokens[k]) + " at position " +
                                    std::to_string(k) + ": " + e.what());
        }
    }
    return cur;
}

OrbitResult orbit(const Word& word, const ModuliState& state, int steps, Via via) {
    OrbitResult out;
    out.states.push_back(state);
    for (int s = 1; s <= steps; ++s) {
        try {
            out.states.push_back(apply(word, out.states.back(), via));
        } catch (const WordStepError& e) {
            out.error = OrbitError{static_cast<std::size_t>(s), e.position, e.inner_code, e.what()};
            break;
        }
    }
    return out;
}

namespace {

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& counterexample) {
        if (ok) {
            ++result_.passed;
        } else {
            ++result_.failed;
            if (result_.counterexamples.size() < 8) result_.counterexamples.push_back(counterexample);
        }
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

// Fixed verification fixture nu* from the worked examples.
ParamVector fixture_nu() {
    ParamVector nu;
    nu(0, 0) = Rat(1, 5); nu(0, 1) = Rat(2, 5); nu(0, 2) = Rat(-3, 5);
    nu(1, 0) = Rat(1, 7); nu(1, 1) = Rat(2, 7); nu(1, 2) = Rat(-3, 7);
    nu(2, 0) = Rat(1, 2); nu(2, 1) = Rat(5, 6); nu(2, 2) = Rat(2, 3);
    return nu;
}

ParamVector fixture2() {
    // A true N00 point: no intra-row integer gaps, no integral triple sums.
    ParamVector nu;
    nu(0, 0) = Rat(1, 4); nu(0, 1) = Rat(5, 12); nu(0, 2) = Rat(-2, 3);
    nu(1, 0) = Rat(1, 7); nu(1, 1) = Rat(2, 7); nu(1, 2) = Rat(-3, 7);
    nu(2, 0) = Rat(1, 2); nu(2, 1) = Rat(5, 6); nu(2, 2) = Rat(2, 3);
    return nu;
}

SuiteResult suite_coxeter() {
    Suite s("coxeter");
    CoxeterReport rep = verify_coxeter();
    int failed = static_cast<int>(rep.failures.size());
    for (int k = 0; k < rep.checks - failed; ++k) s.check(true, "");
    for (const auto& f : rep.failures) s.check(false, f);
    s.check(rep.rank_e6 == 7 && rep.rank_a2 == 3 && rep.rank_sum == 9,
            "lattice ranks (7,3,9) expected");
    s.check(rep.intersection_is_z_delta, "intersection Z delta");
    return s.take();
}

// Defining relations of the presentation as words (pairs of equal words).
std::vector<std::pair<std::vector<Generator>, std::vector<Generator>>> presentation_relations() {
    std::vector<std::pair<std::vector<Generator>, std::vector<Generator>>> rel;
    auto W = [](int i) { return static_cast<Generator>(i); };
    for (int i = 0; i < 7; ++i) rel.push_back({{W(i), W(i)}, {}});
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            if (intersect(simple_root(i), simple_root(j)) == 0)
                rel.push_back({{W(i), W(j)}, {W(j), W(i)}});
            else
                rel.push_back({{W(i), W(j), W(i)}, {W(j), W(i), W(j)}});
        }
    rel.push_back({{Generator::S1, Generator::S1}, {}});
    rel.push_back({{Generator::S2, Generator::S2}, {}});
    // sigma w_i sigma = w_{perm(i)}.
    for (Generator sg : {Generator::S1, Generator::S2}) {
        LatticeMap sm = diagram_automorphism(sg);
        for (int i = 0; i < 7; ++i) {
            PicClass img = sm.apply(simple_root(i));
            for (int j = 0; j < 7; ++j)
                if (img == simple_root(j)) rel.push_back({{sg, W(i), sg}, {W(j)}});
        }
    }
    return rel;
}

SuiteResult suite_nu_action(int trials, std::uint64_t seed) {
    Suite s("nu-action");
    auto rel = presentation_relations();
    int n = std::max(1, trials);
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 1000 + static_cast<std::uint64_t>(t));
        ParamVector nu = t == 0 ? fixture_nu() : random_nu(rng, Membership::N);
        for (const auto& [lhs, rhs] : rel) {
            ParamVector a = act_nu_word(lhs, nu), b = act_nu_word(rhs, nu);
            s.check(a == b, "relation failed at nu = " + nu.to_string());
        }
        // Row sums preserved by every generator.
        for (Generator g : kAllGenerators) {
            ParamVector out = act_nu(g, nu);
            bool sums = true;
            for (int i = 0; i < 3; ++i)
                if (out(i, 0) + out(i, 1) + out(i, 2) != (i == 2 ? 2 : 0)) sums = false;
            s.check(sums, generator_name(g) + " row sums at " + nu.to_string());
        }
    }
    // w3 maps N00 into N00 when membership is preserved (checked, not assumed).
    Rng rng = Rng::substream(seed, 999);
    for (int t = 0; t < std::max(1, trials / 4); ++t) {
        ParamVector nu = random_nu(rng, Membership::N00);
        Membership m = membership(act_nu(Generator::W3, nu));
        s.check(m == Membership::N00 || m == Membership::N0 || m == Membership::N,
                "w3 left N entirely at " + nu.to_string());
    }
    return s.take();
}

SuiteResult suite_chi(int trials, std::uint64_t seed) {
    Suite s("chi");
    // Fixture values from the worked examples.
    ParamVector nu = fixture_nu();
    s.check(chi(simple_root(3), nu) == Rat(-11, 70), "chi(alpha3) = gamma at fixture");
    s.check(chi(simple_root(2), nu) == Rat(1, 7), "chi(alpha2) = -(nu10 - nu11) at fixture");
    s.check(chi(null_root(), nu) == Rat(-1), "chi(delta) = -1");
    int n = std::max(1, trials / 2);
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 2000 + static_cast<std::uint64_t>(t));
        ParamVector v = t == 0 ? fixture_nu() : random_nu(rng, Membership::N);
        // Equivariance chi(w(alpha), nu) = chi(alpha, w(nu)) and the oracle
        // equivalence derive_action_from_chi == act_nu.
        for (Generator g : kAllGenerators) {
            LatticeMap m = generator_lattice_map(g);
            ParamVector moved = act_nu(g, v);
            bool eq = true;
            for (int i = 0; i < 7; ++i)
                if (chi(m.apply(simple_root(i)), v) != chi(simple_root(i), moved)) eq = false;
            s.check(eq, "equivariance " + generator_name(g) + " at " + v.to_string());
            s.check(derive_action_from_chi(g, v) == moved,
                    "oracle mismatch " + generator_name(g) + " at " + v.to_string());
        }
        s.check(chi(null_root(), v) == Rat(-1), "chi(delta) = -1 at " + v.to_string());
    }
    return s.take();
}

SuiteResult suite_points(int trials, std::uint64_t seed) {
    Suite s("points");
    int n = std::max(1, std::min(trials, 40));
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 3000 + static_cast<std::uint64_t>(t));
        ParamVector nu = t == 0 ? fixture_nu() : random_nu(rng, Membership::N0);
        NinePoints src(nu);
        for (Generator g : kAllGenerators) {
            ParamVector moved = act_nu(g, nu);
            NinePoints dst(moved);
            PlaneMap map = phi_generator(g, nu);
            std::array<int, 10> perm = index_permutation(g);
            for (int i = 1; i <= 9; ++i) {
                if (perm[static_cast<std::size_t>(i)] == 0) continue;  // blown up (w3 at 1,4,6)
                PPoint img = eval_map(map, src.point(i));
                s.check(img == dst.point(perm[static_cast<std::size_t>(i)]),
                        generator_name(g) + " p" + std::to_string(i) + " at " + nu.to_string());
            }
        }
        // w3 contracted lines: generic points of f46/f16/f14 = 0 go to
        // p1/p4/p6 of the target configuration.
        PlaneMap w3map = phi_generator(Generator::W3, nu);
        const auto& qd = std::get<QuadraticPlaneMap>(w3map.map).data;
        ParamVector moved = act_nu(Generator::W3, nu);
        NinePoints dst(moved);
        struct LineCase { const LinForm* f; int target; const char* name; };
        for (const auto& lc : {LineCase{&qd.f46, 1, "f46"}, LineCase{&qd.f16, 4, "f16"},
                               LineCase{&qd.f14, 6, "f14"}}) {
            // Solve for x1 on the line at x0 = 1, x2 = t + 2 (generic).
            const LinForm& f = *lc.f;
            Rat x0 = 1, x2 = Rat(t + 2);
            if (f[1] == 0) continue;
            Rat x1 = -(f[0] * x0 + f[2] * x2) / f[1];
            PPoint on_line(x0, x1, x2);
            if (on_line.on_triangle()) continue;
            bool hit = false;
            std::string got;
            try {
                eval_map(w3map, on_line);
            } catch (const ContractedToBoundary& e) {
                hit = e.target_index == lc.target && e.line == lc.name;
                got = e.line;
            } catch (const IndeterminatePoint&) {
                continue;  // hit a base point on the line; fine for these samples
            }
            s.check(hit, std::string("line ") + lc.name + " contraction at " + nu.to_string());
        }
        // Base points are indeterminate.
        for (int i : {1, 4, 6}) {
            bool indeterminate = false;
            try {
                eval_map(w3map, src.point(i));
            } catch (const IndeterminatePoint& e) {
                indeterminate = e.base_index == i;
            }
            s.check(indeterminate, "w3 base point p" + std::to_string(i));
        }
    }
    // Involutions at random off-line points.
    int m = std::max(1, trials / 2);
    for (int t = 0; t < m; ++t) {
        Rng rng = Rng::substream(seed, 3500 + static_cast<std::uint64_t>(t));
        ParamVector nu = random_nu(rng, Membership::N0);
        auto [q, p] = random_qp_admissible(rng, nu);
        PPoint x(q, p, 1);
        for (Generator g : {Generator::S1, Generator::S2, Generator::W3}) {
            if (g == Generator::W3 && membership(nu) != Membership::N00) continue;
            ParamVector moved = act_nu(g, nu);
            try {
                PPoint mid = eval_map(phi_generator(g, nu), x);
                PPoint back = eval_map(phi_generator(g, moved), mid);
                s.check(back == x, generator_name(g) + " involution at " + nu.to_string());
            } catch (const Error&) {
                // Image landed on a bad locus for the return trip; resample.
            }
        }
    }
    return s.take();
}

SuiteResult suite_cubic(int trials, std::uint64_t seed) {
    Suite s("cubic");
    int n = std::max(1, trials / 2);
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 4000 + static_cast<std::uint64_t>(t));
        ParamVector nu = t == 0 ? fixture_nu() : random_nu(rng, Membership::N);
        NinePoints pts(nu);
        bool ok = true;
        try {
            Cubic c = unique_anticanonical_cubic(pts);
            Cubic triangle{};
            triangle[2] = 1;
            triangle[5] = -1;
            ok = (c == triangle);
        } catch (const Error&) {
            ok = false;
        }
        s.check(ok, "cubic at " + nu.to_string());
    }
    // Degenerate configuration (sum a_i = 0) has kernel dimension >= 2.
    ParamVector nu = fixture_nu();
    NinePoints pts(nu);
    auto bad = pts.pts;
    // Move p8 so the infinity row of a-values sums to 0 instead of 1.
    Rat a6 = -nu(2, 0) + 1, a7 = -nu(2, 1) + 1;
    bad[7] = PPoint(1, -(a6 + a7), 0);
    s.check(cubic_kernel_dimension(bad) >= 2, "degenerate kernel dimension");
    return s.take();
}

SuiteResult suite_normal_form(int trials, std::uint64_t seed) {
    Suite s("normal-form");
    int n = std::max(1, trials);
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 5000 + static_cast<std::uint64_t>(t));
        ParamVector nu = t == 0 ? fixture_nu() : random_nu(rng, Membership::N0);
        auto [q, p] = random_qp(rng);
        ConnectionForm conn = build_normal_form(q, p, nu, Chart::U0);
        auto [q2, p2] = apparent_pair(conn);
        s.check(q2 == q && p2 == p, "roundtrip at " + nu.to_string());
        bool res_ok =
            char_poly_matches(residue_at_pole(conn, Pole::Zero), {nu(0, 0), nu(0, 1), nu(0, 2)}) &&
            char_poly_matches(residue_at_pole(conn, Pole::One), {nu(1, 0), nu(1, 1), nu(1, 2)}) &&
            char_poly_matches(residue_at_pole(conn, Pole::Infinity), {nu(2, 0), nu(2, 1), nu(2, 2)});
        s.check(res_ok, "U0 residues at " + nu.to_string());
        // Chart transfer consistency at (q', p') = (1/q, p/q).
        MPoint pt(q, p);
        NormalFormPair pair = build_normal_form(pt, nu);
        bool res_inf_ok =
            char_poly_matches(residue_at_pole(pair.uinf, Pole::Zero), {nu(0, 0), nu(0, 1), nu(0, 2)}) &&
            char_poly_matches(residue_at_pole(pair.uinf, Pole::One), {nu(1, 0), nu(1, 1), nu(1, 2)}) &&
            char_poly_matches(residue_at_pole(pair.uinf, Pole::Infinity), {nu(2, 0), nu(2, 1), nu(2, 2)});
        s.check(res_inf_ok, "UInf residues at " + nu.to_string());
        // Transferring the U0 form into the UInf chart and normalizing lands
        // on the (q', p') normal form exactly.
        ConnectionForm transferred = chart_transfer(pair.u0);
        ConnectionForm renorm = normalize_split_frame(transferred).normal;
        s.check(renorm.A == pair.uinf.A, "chart transfer matches UInf template at " + nu.to_string());
        s.check(fuchs_sum(nu, conn.degree()) == 0, "fuchs sum at " + nu.to_string());
    }
    return s.take();
}

SuiteResult suite_sigma(int trials, std::uint64_t seed) {
    Suite s("sigma");
    int n = std::max(1, trials / 2);
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 6000 + static_cast<std::uint64_t>(t));
        ParamVector nu = t == 0 ? fixture_nu() : random_nu(rng, Membership::N0);
        auto [q, p] = random_qp(rng);
        ConnectionForm conn = build_normal_form(q, p, nu, Chart::U0);

        // s1 lands at (1-q, -p) in normal shape.
        ConnectionForm c1 = realize_sigma(Generator::S1, conn);
        auto [q1, p1] = apparent_pair(c1);
        s.check(q1 == 1 - q && p1 == -p, "s1 pair at " + nu.to_string());
        if (q != Rat(1, 2)) {
            s.check(c1.A == build_normal_form(1 - q, -p, act_nu(Generator::S1, nu), Chart::U0).A,
                    "s1 matrix at " + nu.to_string());
            ConnectionForm c1back = realize_sigma(Generator::S1, c1);
            s.check(c1back.A == conn.A, "s1 involution at " + nu.to_string());
        }

        // s2 matches the calibrated plane map.
        PPoint img = eval_map(phi_generator(Generator::S2, nu), PPoint(q, p, 1));
        auto ch = img.chart1();
        if (ch && ch->first != 0 && ch->first != 1) {
            ConnectionForm c2 = realize_sigma(Generator::S2, conn);
            auto [q2, p2] = apparent_pair(c2);
            s.check(q2 == ch->first && p2 == ch->second, "s2 pair at " + nu.to_string());
            s.check(c2.A == build_normal_form(q2, p2, act_nu(Generator::S2, nu), Chart::U0).A,
                    "s2 matrix at " + nu.to_string());
        }

        // Gauge-roundtrip invariance of the normalization.
        MatP g = MatP::identity();
        g(0, 0) = Poly(rng.nonzero_rat());
        g(0, 1) = Poly({rng.rat(), rng.rat()});
        g(0, 2) = Poly({rng.rat(), rng.rat()});
        MatQ c;
        do {
            for (int i = 1; i < 3; ++i)
                for (int j = 1; j < 3; ++j) c(i, j) = rng.rat();
        } while (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1) == 0);
        for (int i = 1; i < 3; ++i)
            for (int j = 1; j < 3; ++j) g(i, j) = Poly(c(i, j));
        ConnectionForm scrambled = conn;
        scrambled.A = gauge_transform(conn.A, g);
        NormalizeResult norm = normalize_split_frame(scrambled);
        s.check(norm.normal.A == conn.A, "gauge roundtrip at " + nu.to_string());
    }
    return s.take();
}

SuiteResult suite_main_theorem(int trials, std::uint64_t seed) {
    Suite s("main-theorem");
    int n = std::max(1, trials);
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 7000 + static_cast<std::uint64_t>(t));
        ParamVector nu = t == 0 ? fixture2() : random_nu(rng, Membership::N00);
        auto [q, p] = random_qp_admissible(rng, nu);
        McResult mc = mc_pair(q, p, nu);
        PPoint surf = eval_map(phi_generator(Generator::W3, nu), PPoint(q, p, 1));
        auto ch = surf.chart1();
        s.check(ch && ch->first == mc.qbar && ch->second == mc.pbar,
                "two-path equality at " + nu.to_string() + " (q,p)=(" + rat_to_string(q) + "," +
                    rat_to_string(p) + ")");
        // Involution: applying the pipeline at the image returns (q, p).
        try {
            McResult back = mc_pair(mc.qbar, mc.pbar, mc.nu_out);
            s.check(back.qbar == q && back.pbar == p && back.nu_out == nu,
                    "mc involution at " + nu.to_string());
        } catch (const Error& e) {
            s.check(false, std::string("mc involution threw: ") + e.what());
        }
        // Output exponents are w3(nu).
        bool expo =
            char_poly_matches(residue_at_pole(mc.normal, Pole::Zero),
                              {mc.nu_out(0, 0), mc.nu_out(0, 1), mc.nu_out(0, 2)}) &&
            char_poly_matches(residue_at_pole(mc.normal, Pole::One),
                              {mc.nu_out(1, 0), mc.nu_out(1, 1), mc.nu_out(1, 2)}) &&
            char_poly_matches(residue_at_pole(mc.normal, Pole::Infinity),
                              {mc.nu_out(2, 0), mc.nu_out(2, 1), mc.nu_out(2, 2)});
        s.check(expo, "output exponents at " + nu.to_string());
    }
    return s.take();
}

SuiteResult suite_strong_equality(int trials, std::uint64_t seed) {
    Suite s("strong-equality");
    int n = std::max(1, trials / 2);
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 8000 + static_cast<std::uint64_t>(t));
        ParamVector nu = t == 0 ? fixture2() : random_nu(rng, Membership::N00);
        auto [q, p] = random_qp_admissible(rng, nu);
        McResult mc = mc_pair(q, p, nu);
        ConnectionForm expect = build_normal_form(mc.qbar, mc.pbar, mc.nu_out, Chart::U0);
        s.check(mc.normal.A == expect.A && mc.normal.split_degrees == expect.split_degrees,
                "strong equality at " + nu.to_string() + " (q,p)=(" + rat_to_string(q) + "," +
                    rat_to_string(p) + ")");
        // The beta V residues are the quadratic-map coefficients (a, b, c).
        QuadMapData qd = quad_map_data(nu);
        s.check(mc.gm.beta.V[1] == qd.a && mc.gm.beta.V[2] == qd.b && mc.gm.beta.V[0] == qd.c,
                "betaV = (a,b,c) dictionary at " + nu.to_string());
    }
    return s.take();
}

SuiteResult suite_exponents(int trials, std::uint64_t seed) {
    Suite s("exponents");
    int n = std::max(1, trials / 2);
    for (int t = 0; t < n; ++t) {
        Rng rng = Rng::substream(seed, 9000 + static_cast<std::uint64_t>(t));
        ParamVector nu = t == 0 ? fixture2() : random_nu(rng, Membership::N00);
        BetaForm b = build_beta(nu);
        std::vector<std::vector<Rat>> mu(3);
        for (int i = 0; i < 3; ++i) {
            Rat kron = (i == 2) ? 1 : 0;
            for (int j = 0; j < 3; ++j) mu[static_cast<std::size_t>(i)].push_back(nu(i, j) - kron);
        }
        ExponentPrediction pred;
        try {
            pred = predict_exponents({b.H.begin(), b.H.end()}, {b.V.begin(), b.V.end()},
                                     {b.U.begin(), b.U.end()}, b.T, mu, 3, 3);
        } catch (const Error& e) {
            s.check(false, std::string("prediction threw: ") + e.what());
            continue;
        }
        s.check(pred.rank == 3 && pred.delta == 0, "rank 3 delta 0 at " + nu.to_string());
        s.check(pred.m == std::vector<int>({1, 1, 1}), "m_i = 1 at " + nu.to_string());
        // Prediction equals w3(nu) with the infinity shift at the G' level.
        ParamVector nu3 = act_nu(Generator::W3, nu);
        bool match = true;
        for (int i = 0; i < 3; ++i) {
            Rat kron = (i == 2) ? 1 : 0;
            std::vector<Rat> want = {nu3(i, 0) - kron, nu3(i, 1) - kron, nu3(i, 2) - kron};
            std::sort(want.begin(), want.end());
            if (pred.divisors[static_cast<std::size_t>(i)] != want) match = false;
        }
        s.check(match, "predicted divisors at " + nu.to_string());
        // Fuchs relation for the prediction: sum + deg G' (= 1) is 0.
        Rat total = 0;
        for (const auto& div : pred.divisors)
            for (const Rat& x : div) total += x;
        s.check(total + 1 == 0, "prediction fuchs sum at " + nu.to_string());
        // And against the actual convolved connection.
        auto [q, p] = random_qp_admissible(rng, nu);
        GMData gm = gm_matrix(q, p, nu);
        bool actual = true;
        Pole poles[3] = {Pole::Zero, Pole::One, Pole::Infinity};
        for (int i = 0; i < 3; ++i) {
            const auto& d = pred.divisors[static_cast<std::size_t>(i)];
            if (!char_poly_matches(residue_at_pole(gm.conn, poles[i]), {d[0], d[1], d[2]}))
                actual = false;
        }
        s.check(actual, "actual residues at " + nu.to_string());
    }
    return s.take();
}

void append_deviations(VerifyReport& rep) {
    rep.resolved_deviations = {
        "sigma2 plane-map shear fixed by point correspondence: (s, t) = (-1/3, +1/3); the "
        "(-2/3, +2/3) variant fails correspondence at p4..p9",
        "chart-UInf normal form uses lim b13/w^2 = -nu00 nu01 nu02; the opposite sign is "
        "inconsistent with the z = 0 exponents",
        "Gauss-Manin entry (1,3) slot calibrated to alpha_inf = -(nu_inf1 - 1)(nu_inf2 - 1) "
        "by the infinity-exponent conditions",
        "beta residues use beta^H_i = -nu_i0 + [i = inf]; the variant without the "
        "Kronecker shift violates the residue-theorem relations",
        "chi sign convention calibrated to MINUS (chi(delta) = -1); the PLUS sign breaks "
        "equivariance",
        "simple-reflection names follow the root list (w4 ~ E6-E7, w5 ~ E7-E8, w6 ~ E4-E5, "
        "w0 ~ E5-E9); actions are attached to roots, so alternative labelings swapping "
        "4<->5 and 6<->0 differ only in names",
        "Q(E6)+Q(A2) has rank 9 inside the rank-10 Picard lattice; the intersection is "
        "exactly Z delta",
        "the xi-basis change alone is not the normal shape; the unique admissible gauge "
        "is appended so the strong matrix equality holds entrywise",
    };
}

}  // namespace

bool VerifyReport::all_passed() const {
    for (const auto& s : suites)
        if (!s.ok()) return false;
    return true;
}

std::vector<std::string> suite_names() {
    return {"coxeter",     "nu-action", "chi",          "points",          "cubic",
            "normal-form", "sigma",     "main-theorem", "strong-equality", "exponents"};
}

VerifyReport verify_suite(const std::string& name, int trials, std::uint64_t seed) {
    VerifyReport rep;
    rep.trials = trials;
    rep.seed = seed;
    if (name == "coxeter") rep.suites.push_back(suite_coxeter());
    else if (name == "nu-action") rep.suites.push_back(suite_nu_action(trials, seed));
    else if (name == "chi") rep.suites.push_back(suite_chi(trials, seed));
    else if (name == "points") rep.suites.push_back(suite_points(trials, seed));
    else if (name == "cubic") rep.suites.push_back(suite_cubic(trials, seed));
    else if (name == "normal-form") rep.suites.push_back(suite_normal_form(trials, seed));
    else if (name == "sigma") rep.suites.push_back(suite_sigma(trials, seed));
    else if (name == "main-theorem") rep.suites.push_back(suite_main_theorem(trials, seed));
    else if (name == "strong-equality") rep.suites.push_back(suite_strong_equality(trials, seed));
    else if (name == "exponents") rep.suites.push_back(suite_exponents(trials, seed));
    else if (name == "all") return verify_all(trials, seed);
    else throw ParseError("unknown suite '" + name + "'");
    append_deviations(rep);
    return rep;
}

VerifyReport verify_all(int trials, std::uint64_t seed) {
    VerifyReport rep;
    rep.trials = trials;
    rep.seed = seed;
    for (const std::string& n : suite_names()) {
        VerifyReport one = verify_suite(n, trials, seed);
        rep.suites.push_back(one.suites.front());
    }
    append_deviations(rep);
    return rep;
}

}  // namespace a2w
