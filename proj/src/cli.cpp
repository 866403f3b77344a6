#include "a2w/cli.hpp"

#include "a2w/errors.hpp"
#include "a2w/json_io.hpp"
#include "a2w/mc.hpp"
#include "a2w/weyl.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace a2w {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

ParamVector parse_nu_flag(const std::string& text) {
    auto parts = split_csv(text);
    if (parts.size() != 9)
        throw ParseError("--nu needs 9 comma-separated rationals (rows 0, 1, inf), got " +
                         std::to_string(parts.size()));
    ParamVector nu;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            try {
                nu(i, j) = parse_rat(parts[static_cast<std::size_t>(3 * i + j)]);
            } catch (const ParseError& e) {
                throw ParseError("--nu entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 "): " + e.what());
            }
        }
    return nu;
}

PPoint parse_point_flag(const std::string& text) {
    auto parts = split_csv(text);
    if (parts.size() != 3)
        throw ParseError("--point needs 3 comma-separated rationals");
    return PPoint(parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2]));
}

struct Output {
    std::string path;  // empty = stdout

    void write(std::ostream& fallback, const std::string& text) const {
        if (path.empty()) {
            fallback << text;
            if (!text.empty() && text.back() != '\n') fallback << "\n";
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error("io_error", "cannot open output file " + path);
        f << text;
    }
};

std::string orbit_csv(const OrbitResult& orb) {
    std::ostringstream os;
    os << "step,x0,x1,x2,q,p,nu00,nu01,nu02,nu10,nu11,nu12,nuinf0,nuinf1,nuinf2\n";
    for (std::size_t k = 0; k < orb.states.size(); ++k) {
        const ModuliState& st = orb.states[k];
        os << k;
        for (int i = 0; i < 3; ++i) os << "," << rat_to_string(st.point[i]);
        auto ch = st.point.chart1();
        os << "," << (ch ? rat_to_string(ch->first) : "") << ","
           << (ch ? rat_to_string(ch->second) : "");
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) os << "," << rat_to_string(st.nu(i, j));
        os << "\n";
    }
    if (orb.error)
        os << "# error step=" << orb.error->step << " position=" << orb.error->position
           << " code=" << orb.error->code << "\n";
    return os.str();
}

Json error_json(const Error& e) {
    Json j;
    j["error"] = {{"code", e.code()}, {"message", e.what()}};
    if (const auto* c = dynamic_cast<const ContractedToBoundary*>(&e)) {
        j["error"]["line"] = c->line;
        j["error"]["target_index"] = c->target_index;
    } else if (const auto* i = dynamic_cast<const IndeterminatePoint*>(&e)) {
        j["error"]["base_index"] = i->base_index;
    } else if (const auto* s = dynamic_cast<const ShapeMismatch*>(&e)) {
        j["error"]["entry"] = s->entry;
    } else if (const auto* h = dynamic_cast<const HypothesisViolated*>(&e)) {
        j["error"]["condition"] = h->condition;
    } else if (const auto* w = dynamic_cast<const WordStepError*>(&e)) {
        j["error"]["position"] = w->position;
        j["error"]["inner_code"] = w->inner_code;
    }
    return j;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact extended-affine-Weyl symmetry of A2(1)* surfaces via parabolic connections"};
    app.require_subcommand(1);

    // A2WC_SEED overrides the default only; an explicit --seed wins.
    std::uint64_t seed = 0;
    if (const char* env = std::getenv("A2WC_SEED")) {
        try {
            seed = std::stoull(env);
        } catch (...) {
            err << "warning: ignoring non-numeric A2WC_SEED\n";
        }
    }

    std::string nu_text, point_text, word_text, via_text = "surface", suite = "all";
    std::string out_path, format = "json", q_text, p_text;
    int steps = 1, trials = 100;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default stdout)");
        cmd->add_option("--seed", seed, "deterministic seed");
    };

    CLI::App* check = app.add_subcommand("check", "run verification suites");
    check->add_option("--suite", suite, "suite name or 'all'");
    check->add_option("--trials", trials, "random trials per suite");
    add_common(check);

    CLI::App* act = app.add_subcommand("act", "apply a word to (nu, point)");
    act->add_option("--nu", nu_text, "9 rationals, rows 0,1,inf")->required();
    act->add_option("--point", point_text, "projective point x0,x1,x2")->required();
    act->add_option("--word", word_text, "word over w0..w6,s1,s2")->required();
    act->add_option("--via", via_text, "surface|mc");
    add_common(act);

    CLI::App* orb = app.add_subcommand("orbit", "iterate a word");
    orb->add_option("--nu", nu_text)->required();
    orb->add_option("--point", point_text)->required();
    orb->add_option("--word", word_text)->required();
    orb->add_option("--steps", steps, "iteration count");
    orb->add_option("--via", via_text, "surface|mc");
    orb->add_option("--format", format, "json|csv");
    add_common(orb);

    CLI::App* mc = app.add_subcommand("mc", "middle-convolution pipeline at (q, p)");
    mc->add_option("--nu", nu_text)->required();
    mc->add_option("--q", q_text)->required();
    mc->add_option("--p", p_text)->required();
    add_common(mc);

    CLI::App* expo = app.add_subcommand("exponents", "rank/exponent prediction for the pipeline");
    expo->add_option("--nu", nu_text)->required();
    add_common(expo);

    try {
        std::vector<std::string> argv_copy = args;
        std::reverse(argv_copy.begin(), argv_copy.end());
        app.parse(argv_copy);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Output sink{out_path};
    try {
        if (*check) {
            VerifyReport rep = verify_suite(suite, trials, seed);
            sink.write(out, to_json(rep).dump(2));
            return rep.all_passed() ? 0 : 1;
        }

        ParamVector nu = parse_nu_flag(nu_text);
        if (*expo) {
            require_membership(nu, Membership::N00, "exponents");
            BetaForm b = build_beta(nu);
            std::vector<std::vector<Rat>> mu(3);
            for (int i = 0; i < 3; ++i) {
                Rat kron = (i == 2) ? 1 : 0;
                for (int j = 0; j < 3; ++j) mu[static_cast<std::size_t>(i)].push_back(nu(i, j) - kron);
            }
            ExponentPrediction pred = predict_exponents(
                {b.H.begin(), b.H.end()}, {b.V.begin(), b.V.end()}, {b.U.begin(), b.U.end()}, b.T,
                mu, 3, 3);
            Json j;
            j["input"]["nu"] = to_json(nu);
            j["beta"] = to_json(b);
            j["prediction"] = to_json(pred);
            sink.write(out, j.dump(2));
            return 0;
        }
        if (*mc) {
            Rat q = parse_rat(q_text), p = parse_rat(p_text);
            McResult res = mc_pair(q, p, nu);
            Json j;
            j["input"] = {{"q", rat_to_string(q)}, {"p", rat_to_string(p)}};
            j["input"]["nu"] = to_json(nu);
            j["beta"] = to_json(res.gm.beta);
            j["alpha"] = {{"alpha0", rat_to_string(res.gm.alpha0)},
                          {"alpha1", rat_to_string(res.gm.alpha1)},
                          {"alpha_inf", rat_to_string(res.gm.alphaInf)},
                          {"calibrated_slot", rat_to_string(res.gm.calibrated_slot)}};
            j["gm_matrix"] = to_json(res.gm.conn);
            j["qbar"] = rat_to_string(res.qbar);
            j["pbar"] = rat_to_string(res.pbar);
            j["nu_out"] = to_json(res.nu_out);
            j["normal_form"] = to_json(res.normal);
            // Exponent tables: per-point input/output eigenvalue sets, plus
            // the counting prediction when its hypotheses hold.
            Json expon;
            expon["input"] = to_json(nu);
            expon["output"] = to_json(res.nu_out);
            try {
                const BetaForm& b = res.gm.beta;
                std::vector<std::vector<Rat>> mu(3);
                for (int i = 0; i < 3; ++i)
                    for (int jj = 0; jj < 3; ++jj)
                        mu[static_cast<std::size_t>(i)].push_back(nu(i, jj) - (i == 2 ? 1 : 0));
                expon["prediction"] = to_json(predict_exponents(
                    {b.H.begin(), b.H.end()}, {b.V.begin(), b.V.end()}, {b.U.begin(), b.U.end()},
                    b.T, mu, 3, 3));
            } catch (const HypothesisViolated& e) {
                expon["prediction_unavailable"] = e.condition;
            }
            j["exponents"] = expon;
            sink.write(out, j.dump(2));
            return 0;
        }

        // act / orbit
        Word word = Word::parse(word_text);
        Via via;
        if (via_text == "surface") via = Via::Surface;
        else if (via_text == "mc") via = Via::MC;
        else throw ParseError("--via must be surface or mc");
        require_membership(nu, Membership::N0, "act/orbit");
        ModuliState state{nu, parse_point_flag(point_text)};
        if (state.point.on_triangle())
            throw InvalidParameter("point " + state.point.to_string() +
                                   " lies on the anti-canonical triangle");
        if (*act) {
            Json j;
            j["input"] = to_json(state);
            j["word"] = word.to_string();
            j["via"] = via_text;
            try {
                ModuliState res = apply(word, state, via);
                j["output"] = to_json(res);
                sink.write(out, j.dump(2));
                return 0;
            } catch (const WordStepError& e) {
                j["error"] = {{"code", e.inner_code}, {"position", e.position}, {"message", e.what()}};
                sink.write(out, j.dump(2));
                return 1;
            }
        }
        // orbit
        if (steps < 0) throw ParseError("--steps must be >= 0");
        OrbitResult res = orbit(word, state, steps, via);
        if (format == "csv") {
            sink.write(out, orbit_csv(res));
        } else if (format == "json") {
            Json j;
            j["word"] = word.to_string();
            j["via"] = via_text;
            j.update(to_json(res));
            sink.write(out, j.dump(2));
        } else {
            throw ParseError("--format must be json or csv");
        }
        return res.error ? 1 : 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        sink.write(out, error_json(e).dump(2));
        return 2;
    } catch (const InvalidParameter& e) {
        err << "error: " << e.what() << "\n";
        sink.write(out, error_json(e).dump(2));
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        sink.write(out, error_json(e).dump(2));
        return 1;
    }
}

}  // namespace a2w
