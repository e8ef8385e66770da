#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schultz/closed_forms.hpp"
#include "schultz/colouring.hpp"
#include "schultz/error.hpp"
#include "schultz/graph.hpp"
#include "schultz/polynomial.hpp"
#include "schultz/schultz.hpp"

namespace schultz {

/// Closed form vs definitional oracle for one family instance. A mismatch is
/// a result, not an error — documenting where the closed forms deviate from
/// the definition is the point of the harness.
struct verification_record {
    theorem_id id = theorem_id::path_sigma_minus;
    family_spec spec;
    polynomial oracle;
    polynomial closed;
    std::vector<coeff_diff> diffs; // (degree, oracle coeff, closed coeff)

    bool match() const { return diffs.empty(); }
    bool operator==(const verification_record&) const = default;
};

struct theorem_tally {
    int match = 0;
    int mismatch = 0;
    bool operator==(const theorem_tally&) const = default;
};

struct verification_report {
    std::vector<verification_record> records;
    std::vector<std::pair<theorem_id, theorem_tally>> summary; // theorem order

    bool all_match() const {
        for (const auto& r : records)
            if (!r.match()) return false;
        return true;
    }
    bool operator==(const verification_report&) const = default;
};

inline verification_record verify_instance(theorem_id id, const family_spec& spec) {
    verification_record rec;
    rec.id = id;
    rec.spec = spec;
    const graph g = generate(spec);
    const colouring c = canonical_family_colouring(spec, theorem_direction(id));
    rec.oracle = chromatic_schultz(g, c, theorem_kernel(id));
    rec.closed = closed_form(id, spec);
    rec.diffs = diff_report(rec.oracle, rec.closed);
    return rec;
}

/// Run the requested theorems over a parameter range. Paths, cycles and
/// complete graphs take n from the range clamped to the family's minimum
/// (1, 3 and 2 respectively); complete bipartite theorems iterate
/// 1 <= b <= a <= a_max instead. Records are ordered by theorem, then n
/// ascending, then (a, b) lexicographic.
inline verification_report verify(const std::vector<theorem_id>& ids, int n_lo, int n_hi,
                                  int a_max) {
    if (n_lo < 1 || n_hi < n_lo)
        fail(errc::bad_params, "invalid range " + std::to_string(n_lo) + ".." + std::to_string(n_hi));
    if (a_max < 1) fail(errc::bad_params, "a-max must be >= 1");

    verification_report report;
    for (theorem_id id : all_theorem_ids) {
        bool requested = false;
        for (theorem_id want : ids)
            if (want == id) requested = true;
        if (!requested) continue;

        theorem_tally tally;
        auto run = [&](const family_spec& spec) {
            auto rec = verify_instance(id, spec);
            (rec.match() ? tally.match : tally.mismatch) += 1;
            report.records.push_back(std::move(rec));
        };

        switch (theorem_family(id)) {
            case family_spec::family::path:
                for (int n = std::max(n_lo, 1); n <= n_hi; ++n) run(family_spec::path(n));
                break;
            case family_spec::family::cycle:
                for (int n = std::max(n_lo, 3); n <= n_hi; ++n) run(family_spec::cycle(n));
                break;
            case family_spec::family::complete:
                for (int n = std::max(n_lo, 2); n <= n_hi; ++n) run(family_spec::complete(n));
                break;
            case family_spec::family::complete_bipartite:
                for (int a = 1; a <= a_max; ++a)
                    for (int b = 1; b <= a; ++b) run(family_spec::complete_bipartite(a, b));
                break;
        }
        report.summary.push_back({id, tally});
    }
    return report;
}

namespace detail {

inline nlohmann::ordered_json params_json(const family_spec& spec) {
    nlohmann::ordered_json p;
    if (spec.kind == family_spec::family::complete_bipartite) {
        p["a"] = spec.n;
        p["b"] = spec.b;
    } else {
        p["n"] = spec.n;
    }
    return p;
}

inline family_spec spec_from_params(family_spec::family kind, const nlohmann::json& p) {
    switch (kind) {
        case family_spec::family::path: return family_spec::path(p.at("n").get<int>());
        case family_spec::family::cycle: return family_spec::cycle(p.at("n").get<int>());
        case family_spec::family::complete: return family_spec::complete(p.at("n").get<int>());
        case family_spec::family::complete_bipartite:
            return family_spec::complete_bipartite(p.at("a").get<int>(), p.at("b").get<int>());
    }
    fail(errc::malformed_input, "unknown family");
}

} // namespace detail

inline std::string report_to_json(const verification_report& report) {
    nlohmann::ordered_json j;
    auto records = nlohmann::ordered_json::array();
    for (const auto& rec : report.records) {
        nlohmann::ordered_json r;
        r["theorem"] = theorem_name(rec.id);
        r["params"] = detail::params_json(rec.spec);
        r["oracle"] = rec.oracle.coeffs();
        r["closed"] = rec.closed.coeffs();
        auto diffs = nlohmann::ordered_json::array();
        for (const auto& d : rec.diffs) diffs.push_back({d.degree, d.left, d.right});
        r["diffs"] = std::move(diffs);
        r["status"] = rec.match() ? "match" : "mismatch";
        records.push_back(std::move(r));
    }
    j["records"] = std::move(records);
    nlohmann::ordered_json summary;
    for (const auto& [id, tally] : report.summary) {
        nlohmann::ordered_json t;
        t["match"] = tally.match;
        t["mismatch"] = tally.mismatch;
        summary[std::string(theorem_name(id))] = std::move(t);
    }
    j["summary"] = std::move(summary);
    return j.dump();
}

inline verification_report report_from_json(std::string_view text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::malformed_input, std::string("report JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("records") || !j.contains("summary"))
        fail(errc::malformed_input, "report JSON: expected {\"records\":[...],\"summary\":{...}}");

    verification_report report;
    for (const auto& r : j["records"]) {
        verification_record rec;
        rec.id = theorem_from_name(r.at("theorem").get<std::string>());
        rec.spec = detail::spec_from_params(theorem_family(rec.id), r.at("params"));
        rec.oracle = polynomial(r.at("oracle").get<std::vector<std::int64_t>>());
        rec.closed = polynomial(r.at("closed").get<std::vector<std::int64_t>>());
        for (const auto& d : r.at("diffs")) {
            if (!d.is_array() || d.size() != 3)
                fail(errc::malformed_input, "report JSON: diffs entries must be [degree,oracle,closed]");
            rec.diffs.push_back({d[0].get<int>(), d[1].get<std::int64_t>(), d[2].get<std::int64_t>()});
        }
        const auto status = r.at("status").get<std::string>();
        if (status != (rec.match() ? "match" : "mismatch"))
            fail(errc::malformed_input, "report JSON: status inconsistent with diffs");
        report.records.push_back(std::move(rec));
    }
    for (const auto& [name, t] : j["summary"].items()) {
        theorem_tally tally{t.at("match").get<int>(), t.at("mismatch").get<int>()};
        report.summary.push_back({theorem_from_name(name), tally});
    }
    return report;
}

} // namespace schultz
