// Acceptance suite: one pass/fail line per criterion, exact (zero-tolerance)
// checks throughout. Exit code 0 iff every criterion passes.

#include "a2w/cli.hpp"
#include "a2w/connection.hpp"
#include "a2w/errors.hpp"
#include "a2w/mc.hpp"
#include "a2w/rng.hpp"
#include "a2w/surface.hpp"
#include "a2w/weyl.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

using namespace a2w;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, double seconds, double budget,
            const std::string& detail = "") {
    bool in_time = seconds < budget;
    bool pass = ok && in_time;
    if (!pass) ++g_failures;
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << name << " ("
         << seconds << "s, budget " << budget << "s)";
    if (!ok && !detail.empty()) line << " -- " << detail;
    if (ok && !in_time) line << " -- over time budget";
    std::cout << line.str() << "\n";
}

template <typename F>
void criterion(int index, const std::string& name, double budget, F body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body();
        ok = detail.empty();
    } catch (const std::exception& e) {
        detail = e.what();
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(index, name, ok, sec, budget, detail);
}

std::string suite_gate(const std::string& suite, int trials, std::uint64_t seed) {
    VerifyReport rep = verify_suite(suite, trials, seed);
    for (const auto& s : rep.suites) {
        if (!s.ok())
            return s.name + ": " + std::to_string(s.failed) + " failures, first: " +
                   (s.counterexamples.empty() ? "?" : s.counterexamples.front());
    }
    return "";
}

ParamVector fixture() {
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

}  // namespace

int main() {
    const std::uint64_t seed = 0;

    criterion(1, "lattice Coxeter relations, form preservation, delta fixing", 1.0, [&] {
        CoxeterReport rep = verify_coxeter();
        if (!rep.ok) return rep.failures.front();
        return std::string();
    });

    criterion(2, "nu-action presentation at 100 random nu + chi oracle equivalence", 5.0, [&] {
        std::string r = suite_gate("nu-action", 101, seed);
        if (!r.empty()) return r;
        // Oracle equivalence for every generator at 100 random nu.
        Rng rng(seed + 11);
        for (int t = 0; t <= 100; ++t) {
            ParamVector nu = t == 0 ? fixture() : random_nu(rng, Membership::N);
            for (Generator g : kAllGenerators) {
                if (derive_action_from_chi(g, nu) != act_nu(g, nu))
                    return "oracle mismatch for " + generator_name(g) + " at " + nu.to_string();
            }
        }
        return std::string();
    });

    criterion(3, "point correspondence for every generator at 20 random nu in N0", 10.0, [&] {
        Rng rng(seed + 21);
        for (int t = 0; t <= 20; ++t) {
            ParamVector nu = t == 0 ? fixture() : random_nu(rng, Membership::N0);
            NinePoints src(nu);
            for (Generator g : kAllGenerators) {
                ParamVector moved = act_nu(g, nu);
                NinePoints dst(moved);
                PlaneMap map = phi_generator(g, nu);
                auto perm = index_permutation(g);
                for (int i = 1; i <= 9; ++i) {
                    if (perm[static_cast<std::size_t>(i)] == 0) continue;
                    if (eval_map(map, src.point(i)) != dst.point(perm[static_cast<std::size_t>(i)]))
                        return generator_name(g) + " fails at p" + std::to_string(i) + ", nu = " +
                               nu.to_string();
                }
            }
            // f-line contraction targets.
            QuadMapData d = quad_map_data(nu);
            ParamVector nu3 = act_nu(Generator::W3, nu);
            PlaneMap w3 = phi_generator(Generator::W3, nu);
            struct Case { LinForm f; int target; const char* name; };
            for (auto c : {Case{d.f46, 1, "f46"}, Case{d.f16, 4, "f16"}, Case{d.f14, 6, "f14"}}) {
                if (c.f[1] == 0) return std::string("degenerate f-line");
                bool hit = false;
                for (Rat x2 = 2; !hit && x2 < 12; x2 += 1) {
                    Rat x1 = -(c.f[0] + c.f[2] * x2) / c.f[1];
                    PPoint pt(Rat(1), x1, x2);
                    if (pt.on_triangle()) continue;
                    try {
                        eval_map(w3, pt);
                        return std::string(c.name) + " did not contract at " + nu.to_string();
                    } catch (const ContractedToBoundary& e) {
                        if (e.target_index != c.target)
                            return std::string(c.name) + " contracted to p" +
                                   std::to_string(e.target_index) + " instead of p" +
                                   std::to_string(c.target);
                        hit = true;
                    } catch (const IndeterminatePoint&) {
                        // base point on the line; try the next sample
                    }
                }
                if (!hit) return std::string("no generic point sampled on ") + c.name;
            }
        }
        return std::string();
    });

    criterion(4, "cubic uniqueness: kernel dim 1 = triangle at 50 random nu in N", 5.0, [&] {
        Rng rng(seed + 31);
        for (int t = 0; t <= 50; ++t) {
            ParamVector nu = t == 0 ? fixture() : random_nu(rng, Membership::N);
            Cubic c = unique_anticanonical_cubic(NinePoints(nu));
            Cubic triangle{};
            triangle[2] = 1;
            triangle[5] = -1;
            if (c != triangle) return "kernel is not the triangle at " + nu.to_string();
        }
        return std::string();
    });

    criterion(5, "normal forms: roundtrip, residue char polys, Fuchs, chart transfer", 10.0, [&] {
        Rng rng(seed + 41);
        for (int t = 0; t <= 100; ++t) {
            ParamVector nu = t == 0 ? fixture() : random_nu(rng, Membership::N0);
            auto [q, p] = random_qp(rng);
            MPoint pt(q, p);
            NormalFormPair pair = build_normal_form(pt, nu);
            auto [q2, p2] = apparent_pair(pair.u0);
            if (q2 != q || p2 != p) return std::string("roundtrip failed at ") + nu.to_string();
            auto [qp2, pp2] = pt.chart2();
            if (qp2 != 1 / q || pp2 != p / q) return std::string("chart relation failed");
            for (int i = 0; i < 3; ++i) {
                Pole pole = i == 0 ? Pole::Zero : i == 1 ? Pole::One : Pole::Infinity;
                std::array<Rat, 3> want = {nu(i, 0), nu(i, 1), nu(i, 2)};
                if (!char_poly_matches(residue_at_pole(pair.u0, pole), want) ||
                    !char_poly_matches(residue_at_pole(pair.uinf, pole), want))
                    return "residue exponents failed at " + nu.to_string();
            }
            if (fuchs_sum(nu, pair.u0.degree()) != 0) return std::string("Fuchs sum nonzero");
            if (normalize_split_frame(chart_transfer(pair.u0)).normal.A != pair.uinf.A)
                return std::string("chart transfer mismatch at ") + nu.to_string();
        }
        return std::string();
    });

    criterion(6, "main theorem: mc_pair = phi_w3 chart coords at 100 samples + involution", 30.0, [&] {
        Rng rng(seed + 51);
        for (int t = 0; t <= 100; ++t) {
            ParamVector nu = t == 0 ? fixture2() : random_nu(rng, Membership::N00);
            auto [q, p] = random_qp_admissible(rng, nu);
            McResult mc = mc_pair(q, p, nu);
            PPoint surf = eval_map(phi_generator(Generator::W3, nu), PPoint(q, p, 1));
            auto ch = surf.chart1();
            if (!ch || ch->first != mc.qbar || ch->second != mc.pbar)
                return "two-path mismatch at " + nu.to_string() + " (q,p)=(" + rat_to_string(q) +
                       "," + rat_to_string(p) + ")";
            McResult back = mc_pair(mc.qbar, mc.pbar, mc.nu_out);
            if (back.qbar != q || back.pbar != p || !(back.nu_out == nu))
                return "involution failed at " + nu.to_string();
        }
        return std::string();
    });

    criterion(7, "strong matrix equality: xi_frame = build_normal_form at 50 samples", 30.0, [&] {
        Rng rng(seed + 61);
        for (int t = 0; t <= 50; ++t) {
            ParamVector nu = t == 0 ? fixture2() : random_nu(rng, Membership::N00);
            auto [q, p] = random_qp_admissible(rng, nu);
            McResult mc = mc_pair(q, p, nu);
            ConnectionForm want = build_normal_form(mc.qbar, mc.pbar, mc.nu_out, Chart::U0);
            if (!(mc.normal.A == want.A))
                return "matrix mismatch at " + nu.to_string();
            if (mc.gm.calibrated_slot != mc.gm.alphaInf)
                return std::string("slot calibration drifted from alpha_inf");
        }
        return std::string();
    });

    criterion(8, "exponent prediction matches actual residue eigenvalues at 50 samples", 10.0, [&] {
        Rng rng(seed + 71);
        for (int t = 0; t <= 50; ++t) {
            ParamVector nu = t == 0 ? fixture2() : random_nu(rng, Membership::N00);
            BetaForm b = build_beta(nu);
            std::vector<std::vector<Rat>> mu(3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    mu[static_cast<std::size_t>(i)].push_back(nu(i, j) - (i == 2 ? 1 : 0));
            ExponentPrediction pred = predict_exponents(
                {b.H.begin(), b.H.end()}, {b.V.begin(), b.V.end()}, {b.U.begin(), b.U.end()}, b.T,
                mu, 3, 3);
            if (pred.rank != 3) return std::string("rank prediction != 3");
            // Closed form: nu_i0 - 2gamma/3, nu_i1 + gamma/3, nu_i2 + gamma/3
            // (with the infinity twist at the G' level).
            ParamVector nu3 = act_nu(Generator::W3, nu);
            auto [q, p] = random_qp_admissible(rng, nu);
            GMData gm = gm_matrix(q, p, nu);
            for (int i = 0; i < 3; ++i) {
                Pole pole = i == 0 ? Pole::Zero : i == 1 ? Pole::One : Pole::Infinity;
                const auto& d = pred.divisors[static_cast<std::size_t>(i)];
                if (!char_poly_matches(residue_at_pole(gm.conn, pole), {d[0], d[1], d[2]}))
                    return "actual residues disagree with prediction at " + nu.to_string();
                Rat kron = (i == 2) ? 1 : 0;
                std::vector<Rat> want = {nu3(i, 0) - kron, nu3(i, 1) - kron, nu3(i, 2) - kron};
                std::sort(want.begin(), want.end());
                if (d != want) return "prediction disagrees with the w3 table at " + nu.to_string();
            }
        }
        return std::string();
    });

    criterion(9, "sigma realizations and 50 gauge roundtrips", 10.0, [&] {
        Rng rng(seed + 81);
        int gauges = 0;
        for (int t = 0; gauges < 50 && t < 200; ++t) {
            ParamVector nu = t == 0 ? fixture() : random_nu(rng, Membership::N0);
            auto [q, p] = random_qp(rng);
            ConnectionForm conn = build_normal_form(q, p, nu, Chart::U0);
            ConnectionForm s1 = realize_sigma(Generator::S1, conn);
            auto [q1, p1] = apparent_pair(s1);
            if (q1 != 1 - q || p1 != -p) return std::string("sigma1 pair mismatch");
            PPoint img = eval_map(phi_generator(Generator::S2, nu), PPoint(q, p, 1));
            auto ch = img.chart1();
            if (ch && ch->first != 0 && ch->first != 1) {
                ConnectionForm s2 = realize_sigma(Generator::S2, conn);
                auto [q2, p2] = apparent_pair(s2);
                if (q2 != ch->first || p2 != ch->second)
                    return std::string("sigma2 disagrees with the calibrated plane map");
            }
            // Gauge roundtrip.
            MatP g = MatP::identity();
            g(0, 0) = Poly(rng.nonzero_rat());
            g(0, 1) = Poly({rng.rat(), rng.rat()});
            g(0, 2) = Poly({rng.rat(), rng.rat()});
            Rat c11, c12, c21, c22;
            do {
                c11 = rng.rat(); c12 = rng.rat(); c21 = rng.rat(); c22 = rng.rat();
            } while (c11 * c22 - c12 * c21 == 0);
            g(1, 1) = Poly(c11); g(1, 2) = Poly(c12); g(2, 1) = Poly(c21); g(2, 2) = Poly(c22);
            ConnectionForm scrambled = conn;
            scrambled.A = gauge_transform(conn.A, g);
            if (!(normalize_split_frame(scrambled).normal.A == conn.A))
                return std::string("gauge roundtrip changed (q,p)");
            ++gauges;
        }
        if (gauges < 50) return std::string("insufficient gauge samples");
        return std::string();
    });

    criterion(10, "byte-identical check and orbit outputs across reruns", 30.0, [&] {
        auto run_once = [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return std::pair<int, std::string>(code, out.str());
        };
        std::vector<std::string> check_args = {"check", "--suite", "all", "--trials", "5",
                                               "--seed", "7"};
        auto a = run_once(check_args);
        auto b = run_once(check_args);
        if (a.first != 0) return std::string("cmd_check failed");
        if (a.second != b.second) return std::string("cmd_check output not byte-identical");
        std::vector<std::string> orbit_args = {
            "orbit", "--word", "w3 s1", "--nu", "1/5,2/5,-3/5,1/7,2/7,-3/7,1/2,5/6,2/3",
            "--point", "2,3,1", "--steps", "4", "--format", "csv"};
        auto c = run_once(orbit_args);
        auto d = run_once(orbit_args);
        if (c.first != 0) return std::string("cmd_orbit failed");
        if (c.second != d.second) return std::string("cmd_orbit output not byte-identical");
        return std::string();
    });

    if (g_failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " acceptance criteria failed\n";
    return 1;
}
