#pragma once

#include <array>
#include <string_view>

#include "schultz/error.hpp"
#include "schultz/graph.hpp"
#include "schultz/polynomial.hpp"
#include "schultz/schultz.hpp"

namespace schultz {

/// The thirteen closed forms under test, one per family/kernel/direction
/// combination that has a published formula.
enum class theorem_id {
    path_sigma_minus,
    path_sigma_plus,
    cycle_sigma_minus,
    cycle_sigma_plus,
    complete_sigma,
    biclique_sigma_minus,
    biclique_sigma_plus,
    path_mod_minus,
    path_mod_plus,
    cycle_mod_minus,
    cycle_mod_plus,
    biclique_mod_minus,
    biclique_mod_plus,
};

inline constexpr std::array<theorem_id, 13> all_theorem_ids = {
    theorem_id::path_sigma_minus,    theorem_id::path_sigma_plus,  theorem_id::cycle_sigma_minus,
    theorem_id::cycle_sigma_plus,    theorem_id::complete_sigma,   theorem_id::biclique_sigma_minus,
    theorem_id::biclique_sigma_plus, theorem_id::path_mod_minus,   theorem_id::path_mod_plus,
    theorem_id::cycle_mod_minus,     theorem_id::cycle_mod_plus,   theorem_id::biclique_mod_minus,
    theorem_id::biclique_mod_plus,
};

inline std::string_view theorem_name(theorem_id id) {
    switch (id) {
        case theorem_id::path_sigma_minus: return "path-sigma-minus";
        case theorem_id::path_sigma_plus: return "path-sigma-plus";
        case theorem_id::cycle_sigma_minus: return "cycle-sigma-minus";
        case theorem_id::cycle_sigma_plus: return "cycle-sigma-plus";
        case theorem_id::complete_sigma: return "complete-sigma";
        case theorem_id::biclique_sigma_minus: return "biclique-sigma-minus";
        case theorem_id::biclique_sigma_plus: return "biclique-sigma-plus";
        case theorem_id::path_mod_minus: return "path-mod-minus";
        case theorem_id::path_mod_plus: return "path-mod-plus";
        case theorem_id::cycle_mod_minus: return "cycle-mod-minus";
        case theorem_id::cycle_mod_plus: return "cycle-mod-plus";
        case theorem_id::biclique_mod_minus: return "biclique-mod-minus";
        case theorem_id::biclique_mod_plus: return "biclique-mod-plus";
    }
    return "?";
}

inline theorem_id theorem_from_name(std::string_view name) {
    for (theorem_id id : all_theorem_ids)
        if (theorem_name(id) == name) return id;
    fail(errc::bad_params, "unknown theorem \"" + std::string(name) + "\"");
}

inline family_spec::family theorem_family(theorem_id id) {
    switch (id) {
        case theorem_id::path_sigma_minus:
        case theorem_id::path_sigma_plus:
        case theorem_id::path_mod_minus:
        case theorem_id::path_mod_plus: return family_spec::family::path;
        case theorem_id::cycle_sigma_minus:
        case theorem_id::cycle_sigma_plus:
        case theorem_id::cycle_mod_minus:
        case theorem_id::cycle_mod_plus: return family_spec::family::cycle;
        case theorem_id::complete_sigma: return family_spec::family::complete;
        default: return family_spec::family::complete_bipartite;
    }
}

inline direction theorem_direction(theorem_id id) {
    switch (id) {
        case theorem_id::path_sigma_plus:
        case theorem_id::cycle_sigma_plus:
        case theorem_id::biclique_sigma_plus:
        case theorem_id::path_mod_plus:
        case theorem_id::cycle_mod_plus:
        case theorem_id::biclique_mod_plus: return direction::plus;
        default: return direction::minus;
    }
}

inline kernel theorem_kernel(theorem_id id) {
    switch (id) {
        case theorem_id::path_mod_minus:
        case theorem_id::path_mod_plus:
        case theorem_id::cycle_mod_minus:
        case theorem_id::cycle_mod_plus:
        case theorem_id::biclique_mod_minus:
        case theorem_id::biclique_mod_plus: return kernel::product;
        default: return kernel::sum;
    }
}

namespace detail {

inline std::int64_t half_exact(std::int64_t v) {
    if (v % 2 != 0)
        fail(errc::non_integer_coefficient, std::to_string(v) + "/2 is not an integer");
    return v / 2;
}

// The formulas below are transcribed exactly as stated, including the terms
// they produce beyond the true diameter and the coefficients the definitional
// computation disagrees with; the verifier exists to surface both. Summation
// limits that are fractional for the given parity are floored.

inline polynomial path_sigma(std::int64_t n, direction dir) {
    polynomial p;
    if (n % 2 != 0) {
        const std::int64_t even_shift = dir == direction::minus ? -1 : +1;
        for (std::int64_t i = 0; i <= (n - 1) / 2; ++i) {
            p.accumulate(3 * n - 6 * i + even_shift, static_cast<int>(2 * i));
            p.accumulate(3 * n - 6 * i - 3, static_cast<int>(2 * i + 1));
        }
    } else {
        for (std::int64_t i = 0; i <= n; ++i)
            p.accumulate(3 * (n - i), static_cast<int>(i));
    }
    return p;
}

inline polynomial cycle_sigma(std::int64_t n, direction dir) {
    polynomial p;
    if (n % 2 == 0) {
        for (std::int64_t i = 0; i < (n + 2) / 2; ++i) p.accumulate(3 * n, static_cast<int>(i));
    } else {
        const std::int64_t c = dir == direction::minus ? 3 * (n + 1) : 5 * n - 3;
        for (std::int64_t i = 0; i < (n + 3) / 2; ++i) p.accumulate(c, static_cast<int>(i));
    }
    return p;
}

inline polynomial path_mod(std::int64_t n, direction dir) {
    polynomial p;
    const std::int64_t odd_shift = dir == direction::minus ? -3 : +3;
    for (std::int64_t i = 0; i <= (n - 1) / 2; ++i) {
        const std::int64_t even_coeff =
            n % 2 != 0 ? half_exact(5 * n - 10 * i + odd_shift) : half_exact(5 * n - 10 * i);
        p.accumulate(even_coeff, static_cast<int>(2 * i));
        p.accumulate(2 * n - 4 * i - 2, static_cast<int>(2 * i + 1));
    }
    return p;
}

inline polynomial cycle_mod(std::int64_t n, direction dir) {
    polynomial p;
    if (n % 2 == 0) {
        for (std::int64_t i = 0; i <= n / 2; ++i) {
            p.accumulate(half_exact(5 * n), static_cast<int>(2 * i));
            p.accumulate(2 * n, static_cast<int>(2 * i + 1));
        }
        return p;
    }
    // Odd case: the stated sums start at i=1 and leave the x^1 coefficient
    // implicit; it is taken from the i=0 term of the odd-degree sum.
    if (dir == direction::minus) {
        p.accumulate(half_exact(5 * n + 17), 0);
        p.accumulate(2 * n + 10, 1);
        for (std::int64_t i = 1; i <= (n - 1) / 2; ++i) {
            p.accumulate(half_exact(5 * n - 18 * i + 13), static_cast<int>(2 * i));
            p.accumulate(2 * n + 9 * i + 10, static_cast<int>(2 * i + 1));
        }
    } else {
        p.accumulate(half_exact(13 * n - 11), 0);
        p.accumulate(6 * n - 7, 1);
        for (std::int64_t i = 1; i <= (n - 1) / 2; ++i) {
            p.accumulate(half_exact(13 * n - 2 * i - 15), static_cast<int>(2 * i));
            p.accumulate(6 * n + i - 7, static_cast<int>(2 * i + 1));
        }
    }
    return p;
}

inline polynomial biclique_sigma(std::int64_t a, std::int64_t b, direction dir) {
    if (dir == direction::minus)
        return polynomial({2 * a + 4 * b, 3 * a * b, a * (a - 1) + 2 * b * (b - 1)});
    return polynomial({4 * a + 2 * b, 3 * a * b, 2 * a * (a - 1) + b * (b - 1)});
}

inline polynomial biclique_mod(std::int64_t a, std::int64_t b, direction dir) {
    if (dir == direction::minus)
        return polynomial({a + 4 * b, 2 * a * b, half_exact(a * (a - 1)) + 2 * b * (b - 1)});
    return polynomial({4 * a + b, 2 * a * b, 2 * a * (a - 1) + half_exact(b * (b - 1))});
}

} // namespace detail

/// Expand the stated closed form for the given family instance into an
/// explicit coefficient list. The formulas are not corrected where they
/// disagree with the definitional computation; use the verifier to compare.
inline polynomial closed_form(theorem_id id, const family_spec& spec) {
    if (spec.kind != theorem_family(id))
        fail(errc::wrong_family, std::string(theorem_name(id)) + " does not apply to " +
                                     spec.description());
    const auto n = static_cast<std::int64_t>(spec.n);
    switch (id) {
        case theorem_id::path_sigma_minus: return detail::path_sigma(n, direction::minus);
        case theorem_id::path_sigma_plus: return detail::path_sigma(n, direction::plus);
        case theorem_id::cycle_sigma_minus: return detail::cycle_sigma(n, direction::minus);
        case theorem_id::cycle_sigma_plus: return detail::cycle_sigma(n, direction::plus);
        case theorem_id::complete_sigma:
            if (n < 2) fail(errc::bad_params, "complete-sigma is stated for n >= 2");
            return polynomial({n * n + n, 2 * n * n - n - 3});
        case theorem_id::biclique_sigma_minus:
            return detail::biclique_sigma(n, spec.b, direction::minus);
        case theorem_id::biclique_sigma_plus:
            return detail::biclique_sigma(n, spec.b, direction::plus);
        case theorem_id::path_mod_minus: return detail::path_mod(n, direction::minus);
        case theorem_id::path_mod_plus: return detail::path_mod(n, direction::plus);
        case theorem_id::cycle_mod_minus: return detail::cycle_mod(n, direction::minus);
        case theorem_id::cycle_mod_plus: return detail::cycle_mod(n, direction::plus);
        case theorem_id::biclique_mod_minus:
            return detail::biclique_mod(n, spec.b, direction::minus);
        case theorem_id::biclique_mod_plus:
            return detail::biclique_mod(n, spec.b, direction::plus);
    }
    fail(errc::bad_params, "unknown theorem id");
}

} // namespace schultz
