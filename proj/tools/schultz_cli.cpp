// Command-line surface: generate family graphs, compute the polynomial
// variants definitionally, expand the closed forms, and run the
// verification harness that diffs the two.
//
// Exit codes: 0 success (verify: everything matched), 1 verify found a
// mismatch, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schultz/closed_forms.hpp"
#include "schultz/colouring.hpp"
#include "schultz/graph.hpp"
#include "schultz/polynomial.hpp"
#include "schultz/schultz.hpp"
#include "schultz/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) schultz::fail(schultz::errc::malformed_input, "cannot read file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

schultz::family_spec spec_from_cli(const std::string& family, int n, std::optional<int> b) {
    using schultz::family_spec;
    if (family == "path" || family == "cycle" || family == "complete") {
        if (b.has_value())
            schultz::fail(schultz::errc::bad_params, family + " takes a single parameter");
        if (family == "path") return family_spec::path(n);
        if (family == "cycle") return family_spec::cycle(n);
        return family_spec::complete(n);
    }
    if (family == "complete-bipartite") {
        if (!b.has_value())
            schultz::fail(schultz::errc::bad_params, "complete-bipartite needs both part sizes");
        return family_spec::complete_bipartite(n, *b);
    }
    schultz::fail(schultz::errc::bad_params,
                  "unknown family \"" + family + "\" (expected path|cycle|complete|complete-bipartite)");
}

void print_polynomial(const schultz::polynomial& p, bool as_json) {
    if (as_json)
        std::cout << nlohmann::json(p.coeffs()).dump() << "\n";
    else
        std::cout << schultz::format(p) << "\n";
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        schultz::fail(schultz::errc::bad_params, "range must look like 2..12, got \"" + text + "\"");
    try {
        const int lo = std::stoi(text.substr(0, pos));
        const int hi = std::stoi(text.substr(pos + 2));
        if (lo < 1 || hi < lo)
            schultz::fail(schultz::errc::bad_params, "empty range \"" + text + "\"");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        schultz::fail(schultz::errc::bad_params, "range must look like 2..12, got \"" + text + "\"");
    } catch (const std::out_of_range&) {
        schultz::fail(schultz::errc::bad_params, "range bounds out of range in \"" + text + "\"");
    }
}

std::string params_text(const schultz::family_spec& spec) {
    if (spec.kind == schultz::family_spec::family::complete_bipartite)
        return "a=" + std::to_string(spec.n) + " b=" + std::to_string(spec.b);
    return "n=" + std::to_string(spec.n);
}

int run_verify(const std::string& theorem, const std::string& range, std::optional<int> a_max,
               bool as_json) {
    std::vector<schultz::theorem_id> ids;
    if (theorem == "all")
        ids.assign(schultz::all_theorem_ids.begin(), schultz::all_theorem_ids.end());
    else
        ids.push_back(schultz::theorem_from_name(theorem));
    const auto [lo, hi] = parse_range(range);
    const auto report = schultz::verify(ids, lo, hi, a_max.value_or(hi));

    if (as_json) {
        std::cout << schultz::report_to_json(report) << "\n";
    } else {
        for (const auto& rec : report.records) {
            std::cout << schultz::theorem_name(rec.id) << " " << params_text(rec.spec) << ": ";
            if (rec.match()) {
                std::cout << "match\n";
                continue;
            }
            std::cout << "mismatch (";
            for (std::size_t i = 0; i < rec.diffs.size(); ++i) {
                const auto& d = rec.diffs[i];
                if (i) std::cout << "; ";
                std::cout << "deg " << d.degree << ": oracle " << d.left << ", closed " << d.right;
            }
            std::cout << ")\n";
        }
        int match = 0, mismatch = 0;
        for (const auto& [id, tally] : report.summary) {
            std::cout << schultz::theorem_name(id) << ": " << tally.match << " match, "
                      << tally.mismatch << " mismatch\n";
            match += tally.match;
            mismatch += tally.mismatch;
        }
        std::cout << "total: " << match << " match, " << mismatch << " mismatch\n";
    }
    return report.all_match() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic Schultz polynomials: family generators, definitional computation,\n"
                 "closed forms, and a coefficient-level verification harness"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family graph, printed as JSON");
    std::string gen_family;
    int gen_n = 0;
    std::optional<int> gen_b;
    gen->add_option("family", gen_family, "path|cycle|complete|complete-bipartite")->required();
    gen->add_option("n", gen_n, "vertex count (part size a for complete-bipartite)")->required();
    gen->add_option("b", gen_b, "second part size (complete-bipartite only)");

    // compute
    auto* compute = app.add_subcommand(
        "compute", "compute a polynomial variant from the definition (oracle path)");
    std::string compute_variant;
    std::string compute_family;
    int compute_n = 0;
    std::optional<int> compute_b;
    std::string compute_input;
    bool compute_json = false;
    compute->add_option("--variant", compute_variant, "sum-minus|sum-plus|prod-minus|prod-plus")
        ->required();
    compute->add_option("--family", compute_family, "family name (uses the canonical colouring)");
    compute->add_option("--n", compute_n, "family parameter n (or part size a)");
    compute->add_option("--b", compute_b, "part size b (complete-bipartite only)");
    compute->add_option("--input", compute_input, "graph file, JSON or \"n m\" edge list");
    compute->add_flag("--json", compute_json, "print the coefficient array instead of text");

    // closed-form
    auto* closed = app.add_subcommand("closed-form", "expand a stated closed form");
    std::string closed_theorem;
    int closed_n = 0;
    std::optional<int> closed_b;
    bool closed_json = false;
    closed->add_option("--theorem", closed_theorem, "theorem id, e.g. path-sigma-minus")->required();
    closed->add_option("--n", closed_n, "family parameter n (part size a for bicliques)")->required();
    closed->add_option("--b", closed_b, "part size b (biclique theorems only)");
    closed->add_flag("--json", closed_json, "print the coefficient array instead of text");

    // chromatic
    auto* chromatic = app.add_subcommand("chromatic", "chromatic number and chi-minus colouring");
    std::string chromatic_input;
    bool chromatic_json = false;
    chromatic->add_option("--input", chromatic_input, "graph file, JSON or \"n m\" edge list")
        ->required();
    chromatic->add_flag("--json", chromatic_json, "print as JSON");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "diff closed forms against the definitional oracle over a range");
    std::string verify_theorem;
    std::string verify_range;
    std::optional<int> verify_a_max;
    bool verify_json = false;
    verify->add_option("--theorem", verify_theorem, "theorem id or \"all\"")->required();
    verify->add_option("--n", verify_range, "parameter range lo..hi")->required();
    verify->add_option("--a-max", verify_a_max, "largest part size for biclique theorems (default: hi)");
    verify->add_flag("--json", verify_json, "print the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            const auto spec = spec_from_cli(gen_family, gen_n, gen_b);
            std::cout << schultz::serialize_graph(schultz::generate(spec)) << "\n";
            return 0;
        }
        if (compute->parsed()) {
            const auto v = schultz::variant_from_name(compute_variant);
            const bool has_family = !compute_family.empty();
            const bool has_input = !compute_input.empty();
            if (has_family == has_input)
                schultz::fail(schultz::errc::bad_params,
                              "compute needs exactly one of --family or --input");
            schultz::polynomial p;
            if (has_family) {
                if (compute->count("--n") == 0)
                    schultz::fail(schultz::errc::bad_params, "--family requires --n");
                p = schultz::variant_polynomial(spec_from_cli(compute_family, compute_n, compute_b), v);
            } else {
                p = schultz::variant_polynomial(schultz::parse_graph(read_file(compute_input)), v);
            }
            print_polynomial(p, compute_json);
            return 0;
        }
        if (closed->parsed()) {
            const auto id = schultz::theorem_from_name(closed_theorem);
            schultz::family_spec spec;
            switch (schultz::theorem_family(id)) {
                case schultz::family_spec::family::path:
                    spec = schultz::family_spec::path(closed_n);
                    break;
                case schultz::family_spec::family::cycle:
                    spec = schultz::family_spec::cycle(closed_n);
                    break;
                case schultz::family_spec::family::complete:
                    spec = schultz::family_spec::complete(closed_n);
                    break;
                case schultz::family_spec::family::complete_bipartite:
                    if (!closed_b.has_value())
                        schultz::fail(schultz::errc::bad_params,
                                      std::string(schultz::theorem_name(id)) + " needs --b");
                    spec = schultz::family_spec::complete_bipartite(closed_n, *closed_b);
                    break;
            }
            print_polynomial(schultz::closed_form(id, spec), closed_json);
            return 0;
        }
        if (chromatic->parsed()) {
            const auto g = schultz::parse_graph(read_file(chromatic_input));
            const int chi = schultz::chromatic_number(g);
            const auto c = schultz::chi_minus_colouring(g);
            const auto profile = schultz::colour_profile(c);
            if (chromatic_json) {
                nlohmann::ordered_json j;
                j["chi"] = chi;
                j["colouring"] = nlohmann::ordered_json::parse(schultz::colouring_to_json(c));
                j["profile"] = profile;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "chi: " << chi << "\n";
                std::cout << "zeta: " << nlohmann::json(c.zeta).dump() << "\n";
                std::cout << "profile: " << nlohmann::json(profile).dump() << "\n";
            }
            return 0;
        }
        if (verify->parsed())
            return run_verify(verify_theorem, verify_range, verify_a_max, verify_json);
    } catch (const schultz::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
