#include "a2w/json_io.hpp"

#include "a2w/errors.hpp"

namespace a2w {

Json to_json(const Rat& r) { return rat_to_string(r); }

Json to_json(const ParamVector& nu) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(rat_to_string(nu(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const PPoint& p) {
    Json arr = Json::array();
    for (int i = 0; i < 3; ++i) arr.push_back(rat_to_string(p[i]));
    return arr;
}

Json to_json(const PicClass& c) {
    Json arr = Json::array();
    for (int i = 0; i < 10; ++i) arr.push_back(c[i]);
    return arr;
}

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

Json to_json(const MatP& m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const ConnectionForm& c) {
    Json j;
    j["chart"] = c.chart == Chart::U0 ? "U0" : "UInf";
    j["degree"] = c.degree();
    j["split_degrees"] = c.split_degrees;
    j["matrix"] = to_json(c.A);
    return j;
}

Json to_json(const BetaForm& b) {
    Json j;
    const char* names[3] = {"0", "1", "inf"};
    for (int i = 0; i < 3; ++i) {
        j["H"][names[i]] = rat_to_string(b.H[static_cast<std::size_t>(i)]);
        j["V"][names[i]] = rat_to_string(b.V[static_cast<std::size_t>(i)]);
        j["U"][names[i]] = rat_to_string(b.U[static_cast<std::size_t>(i)]);
    }
    j["T"] = rat_to_string(b.T);
    return j;
}

Json to_json(const ExponentPrediction& e) {
    Json j;
    j["rank"] = e.rank;
    j["delta"] = e.delta;
    j["m"] = e.m;
    Json divs = Json::array();
    for (const auto& d : e.divisors) {
        Json row = Json::array();
        for (const Rat& x : d) row.push_back(rat_to_string(x));
        divs.push_back(row);
    }
    j["divisors"] = divs;
    return j;
}

Json to_json(const VerifyReport& r) {
    Json j;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["all_passed"] = r.all_passed();
    Json suites = Json::array();
    for (const auto& s : r.suites) {
        Json js;
        js["name"] = s.name;
        js["passed"] = s.passed;
        js["failed"] = s.failed;
        js["counterexamples"] = s.counterexamples;
        suites.push_back(js);
    }
    j["suites"] = suites;
    j["resolved_deviations"] = r.resolved_deviations;
    return j;
}

Json to_json(const ModuliState& s) {
    Json j;
    j["point"] = to_json(s.point);
    auto ch = s.point.chart1();
    if (ch) {
        j["q"] = rat_to_string(ch->first);
        j["p"] = rat_to_string(ch->second);
    }
    j["nu"] = to_json(s.nu);
    return j;
}

Json to_json(const OrbitResult& o) {
    Json j;
    Json steps = Json::array();
    for (std::size_t k = 0; k < o.states.size(); ++k) {
        Json st = to_json(o.states[k]);
        st["step"] = k;
        steps.push_back(st);
    }
    j["states"] = steps;
    if (o.error) {
        j["error"] = {{"step", o.error->step},
                      {"position", o.error->position},
                      {"code", o.error->code},
                      {"message", o.error->message}};
    }
    return j;
}

ParamVector nu_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("nu must be a 3x3 array");
    ParamVector nu;
    for (int i = 0; i < 3; ++i) {
        const Json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != 3) throw ParseError("nu must be a 3x3 array");
        for (int j2 = 0; j2 < 3; ++j2)
            nu(i, j2) = parse_rat(row[static_cast<std::size_t>(j2)].get<std::string>());
    }
    return nu;
}

PPoint ppoint_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("point must be a 3-array");
    return PPoint(parse_rat(j[0].get<std::string>()), parse_rat(j[1].get<std::string>()),
                  parse_rat(j[2].get<std::string>()));
}

}  // namespace a2w
