#ifndef GROEMER_REPORT_HPP
#define GROEMER_REPORT_HPP

// Text and JSON renderings of verdicts, enumerations and cross-validation runs.
// JSON key order is fixed; every number is an exact integer.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "groemer/criteria.hpp"
#include "groemer/search.hpp"

namespace groemer {

using json = nlohmann::ordered_json;

inline const char* branch_name(WegnerBranch b) { return b == WegnerBranch::b2 ? "b2" : "b5"; }

inline json to_json(const Verdict& v) {
    json out;
    out["n"] = v.n;
    out["a"] = v.params.a;
    out["b"] = v.params.b;
    out["c"] = v.params.c;
    out["p0"] = v.p0;

    json wegner;
    wegner["exceptional"] = v.wegner_conjecture.has_value();
    wegner["m"] = v.wegner_conjecture ? json(v.wegner_conjecture->m) : json(nullptr);
    wegner["branch"] = v.wegner_conjecture ? json(branch_name(v.wegner_conjecture->branch)) : json(nullptr);
    out["wegner_conjecture"] = std::move(wegner);

    json br;
    br["exceptional"] = v.boeroeczky_ruzsa.has_value();
    br["k"] = v.boeroeczky_ruzsa ? json(v.boeroeczky_ruzsa->k) : json(nullptr);
    br["l"] = v.boeroeczky_ruzsa ? json(v.boeroeczky_ruzsa->l) : json(nullptr);
    br["discriminant"] = v.boeroeczky_ruzsa ? json(v.boeroeczky_ruzsa->discriminant) : json(nullptr);
    out["boeroeczky_ruzsa"] = std::move(br);

    json corrected;
    corrected["exceptional"] = v.corrected.has_value();
    corrected["k"] = v.corrected ? json(v.corrected->k) : json(nullptr);
    corrected["l"] = v.corrected ? json(v.corrected->l) : json(nullptr);
    out["corrected"] = std::move(corrected);

    if (v.oracle) {
        json oracle;
        oracle["exceptional"] = v.oracle->exceptional;
        oracle["solution_count"] = v.oracle->solution_count;
        oracle["solutions"] = v.oracle->solutions;
        out["oracle"] = std::move(oracle);
    }
    return out;
}

/// Inverse of to_json. The corrected discriminant is rebuilt as 9^l (3k - 1).
inline Verdict verdict_from_json(const json& j) {
    Verdict v;
    v.n = j.at("n").get<integer>();
    v.params = HexParams{j.at("a").get<integer>(), j.at("b").get<integer>(), j.at("c").get<integer>()};
    v.p0 = j.at("p0").get<integer>();

    const auto& wegner = j.at("wegner_conjecture");
    if (wegner.at("exceptional").get<bool>()) {
        v.wegner_conjecture = WegnerWitness{
            wegner.at("branch").get<std::string>() == "b2" ? WegnerBranch::b2 : WegnerBranch::b5,
            wegner.at("m").get<integer>()};
    }
    const auto& br = j.at("boeroeczky_ruzsa");
    if (br.at("exceptional").get<bool>()) {
        v.boeroeczky_ruzsa =
            BRWitness{br.at("k").get<integer>(), br.at("l").get<integer>(), br.at("discriminant").get<integer>()};
    }
    const auto& corrected = j.at("corrected");
    if (corrected.at("exceptional").get<bool>()) {
        const integer k = corrected.at("k").get<integer>();
        const integer l = corrected.at("l").get<integer>();
        v.corrected = BRWitness{k, l, narrow(checked_mul<wide>(pow9(l), 3 * wide{k} - 1))};
    }
    if (j.contains("oracle")) {
        const auto& oracle = j.at("oracle");
        OracleSummary summary;
        summary.exceptional = oracle.at("exceptional").get<bool>();
        summary.solution_count = oracle.at("solution_count").get<std::size_t>();
        summary.solutions = oracle.at("solutions").get<std::vector<std::array<integer, 6>>>();
        v.oracle = std::move(summary);
    }
    return v;
}

inline std::string format_seq(const std::array<integer, 6>& s) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < s.size(); ++i) {
        out << (i ? "," : "") << s[i];
    }
    out << ')';
    return out.str();
}

inline std::string format_verdict_text(const Verdict& v) {
    std::ostringstream out;
    out << "n=" << v.n << " a=" << v.params.a << " b=" << v.params.b << " c=" << v.params.c << " p0=" << v.p0 << '\n';
    out << "wegner_conjecture: ";
    if (v.wegner_conjecture) {
        out << "exceptional (branch " << branch_name(v.wegner_conjecture->branch) << ", m=" << v.wegner_conjecture->m
            << ")\n";
    } else {
        out << "not exceptional\n";
    }
    out << "boeroeczky_ruzsa: ";
    if (v.boeroeczky_ruzsa) {
        out << "exceptional (k=" << v.boeroeczky_ruzsa->k << ", l=" << v.boeroeczky_ruzsa->l
            << ", D=" << v.boeroeczky_ruzsa->discriminant << ")\n";
    } else {
        out << "not exceptional (D=" << br_discriminant(v.n) << ")\n";
    }
    out << "corrected: ";
    if (v.corrected) {
        out << "exceptional (k=" << v.corrected->k << ", l=" << v.corrected->l << ")\n";
    } else {
        out << "not exceptional\n";
    }
    if (v.oracle) {
        out << "oracle: " << (v.oracle->exceptional ? "exceptional" : "not exceptional") << " ("
            << v.oracle->solution_count << " canonical solutions)";
        if (v.n <= 6) {
            out << " [algebraic only]";
        }
        out << '\n';
        for (const auto& s : v.oracle->solutions) {
            out << "  " << format_seq(s) << '\n';
        }
    }
    return out.str();
}

inline std::string format_enumeration(integer n_max, Criterion criterion, const std::vector<integer>& values,
                                      bool as_json) {
    if (as_json) {
        json out;
        out["max"] = n_max;
        out["criterion"] = std::string(criterion_name(criterion));
        out["count"] = values.size();
        out["exceptional"] = values;
        return out.dump() + "\n";
    }
    std::ostringstream text;
    for (integer n : values) {
        text << n << '\n';
    }
    return text.str();
}

inline std::string format_cross_validation(const CrossValidation& cv, bool as_json) {
    if (as_json) {
        json out;
        out["max"] = cv.n_max;
        out["discrepancy_count"] = cv.discrepancies.size();
        out["conjecture_only"] = cv.conjecture_only();
        out["conjecture_missed"] = cv.conjecture_missed();
        out["oracle_confirms_br"] = cv.oracle_confirms_br();
        out["corrected_mismatches"] = cv.corrected_mismatches;
        json list = json::array();
        for (const auto& d : cv.discrepancies) {
            json item;
            item["n"] = d.n;
            item["conjecture"] = d.conjecture;
            item["boeroeczky_ruzsa"] = d.boeroeczky_ruzsa;
            item["oracle"] = d.oracle;
            item["oracle_solutions"] = d.oracle_solutions;
            list.push_back(std::move(item));
        }
        out["discrepancies"] = std::move(list);
        return out.dump() + "\n";
    }
    std::ostringstream text;
    text << "cross-validation up to " << cv.n_max << '\n';
    text << "discrepancies: " << cv.discrepancies.size() << " (conjecture-only " << cv.conjecture_only()
         << ", conjecture-missed " << cv.conjecture_missed() << ")\n";
    text << "corrected vs br mismatches: " << cv.corrected_mismatches.size() << '\n';
    for (const auto& d : cv.discrepancies) {
        const auto yn = [](bool x) { return x ? "exceptional" : "not-exceptional"; };
        text << d.n << " conjecture=" << yn(d.conjecture) << " br=" << yn(d.boeroeczky_ruzsa)
             << " oracle=" << yn(d.oracle) << " solutions=" << d.oracle_solutions << '\n';
    }
    text << "oracle confirms br at every discrepancy: " << (cv.oracle_confirms_br() ? "yes" : "no") << '\n';
    return text.str();
}

}

#endif
