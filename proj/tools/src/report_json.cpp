#include "bnqcli/report_json.hpp"

namespace bnqcli {

using nlohmann::json;

json report_to_json(const bnq::VerificationReport& rep) {
    json j;
    j["tool_version"] = rep.tool_version;
    j["primes"] = rep.primes;

    j["rows"] = json::array();
    for (const auto& r : rep.rows)
        j["rows"].push_back({{"p", r.p},
                             {"n_U", r.n_U},
                             {"n_Y", r.n_Y},
                             {"t3", r.t3},
                             {"a_p", r.a_p},
                             {"match", r.match},
                             {"det_ok", r.det_ok},
                             {"parity_ok", r.parity_ok}});

    j["livne"] = {{"S", rep.livne.S},
                  {"m", rep.livne.m},
                  {"T", rep.livne.T},
                  {"beyond_standard", rep.livne.beyond_standard}};

    j["hodge"] = json::array();
    for (const auto& h : rep.hodge) {
        json hj = {{"p", h.p},
                   {"base", h.base},
                   {"n_count", h.n_count},
                   {"admissible", h.admissible}};
        if (h.determined()) {
            hj["h21"] = h.h21();
            hj["h11"] = h.h11();
            hj["h11_cy"] = h.h11_cy();
            hj["euler"] = h.euler();
        }
        j["hodge"].push_back(hj);
    }

    j["k_values"] = json::array();
    for (const auto& k : rep.k_values)
        j["k_values"].push_back({{"p", k.p}, {"n_Ytilde", k.n_Ytilde}, {"k", k.k}});

    j["bad_euler_factors"] = rep.bad_euler_factors;
    j["verdict"] = rep.verdict;
    return j;
}

bnq::VerificationReport report_from_json(const json& j) {
    bnq::VerificationReport rep;
    rep.tool_version = j.at("tool_version").get<std::string>();
    rep.primes = j.at("primes").get<std::vector<std::int64_t>>();

    for (const auto& rj : j.at("rows")) {
        bnq::TraceRow r;
        r.p = rj.at("p").get<std::int64_t>();
        r.n_U = rj.at("n_U").get<std::int64_t>();
        r.n_Y = rj.at("n_Y").get<std::int64_t>();
        r.t3 = rj.at("t3").get<std::int64_t>();
        r.a_p = rj.at("a_p").get<std::int64_t>();
        r.match = rj.at("match").get<bool>();
        r.det_ok = rj.at("det_ok").get<bool>();
        r.parity_ok = rj.at("parity_ok").get<bool>();
        rep.rows.push_back(r);
    }

    const auto& lj = j.at("livne");
    rep.livne.S = lj.at("S").get<std::vector<std::int64_t>>();
    rep.livne.m = lj.at("m").get<std::int64_t>();
    rep.livne.T = lj.at("T").get<std::vector<std::int64_t>>();
    rep.livne.beyond_standard = lj.at("beyond_standard").get<bool>();

    for (const auto& hj : j.at("hodge")) {
        bnq::HodgeSolution h;
        h.p = hj.at("p").get<std::int64_t>();
        h.base = hj.at("base").get<std::int64_t>();
        h.n_count = hj.at("n_count").get<std::int64_t>();
        h.admissible = hj.at("admissible").get<std::vector<std::int64_t>>();
        rep.hodge.push_back(h);
    }

    for (const auto& kj : j.at("k_values")) {
        bnq::KSolution k;
        k.p = kj.at("p").get<std::int64_t>();
        k.n_Ytilde = kj.at("n_Ytilde").get<std::int64_t>();
        k.k = kj.at("k").get<std::int64_t>();
        rep.k_values.push_back(k);
    }

    rep.bad_euler_factors = j.at("bad_euler_factors").get<std::string>();
    rep.verdict = j.at("verdict").get<std::string>();
    return rep;
}

json count_row_to_json(const bnq::CountRecord& rec, bool twisted) {
    json j = {{"p", rec.p},
              {"n_U", rec.n_U},
              {"n_Y", rec.n_Y},
              {"t3", rec.t3},
              {"method", rec.method}};
    if (twisted) {
        j["n_Utilde"] = rec.n_Utilde;
        j["n_Ytilde"] = rec.n_Ytilde;
        j["ytilde_branch"] = rec.ytilde_branch;
    }
    return j;
}

json roundtrip_to_json(const bnq::RoundtripReport& rep) {
    auto tally = [](const bnq::RoundtripTally& t) {
        return json{{"ok", t.ok}, {"indeterminate", t.indeterminate}, {"failed", t.failed}};
    };
    return json{{"p", rep.p},
                {"samples", rep.samples},
                {"exhaustive", rep.exhaustive},
                {"beauville", tally(rep.beauville)},
                {"verrill", tally(rep.verrill)},
                {"failures", rep.failures}};
}

json cayley_to_json(const bnq::CayleyCount& c, std::int64_t c2) {
    return json{{"p", c.p},
                {"c1", c.c1},
                {"c2", c2},
                {"cover_open", c.cover_open},
                {"cover", c.cover},
                {"cover_formula", c.cover_formula()},
                {"match", c.cover == c.cover_formula()}};
}

}  // namespace bnqcli
