#pragma once

#include <string_view>

#include "schultz/colouring.hpp"
#include "schultz/error.hpp"
#include "schultz/graph.hpp"
#include "schultz/polynomial.hpp"

namespace schultz {

enum class kernel { sum, product };

/// One of the four polynomial variants: pair weight (sum or product of the
/// colour subscripts) times the colouring choice (chi-minus or chi-plus).
struct variant {
    kernel kern = kernel::sum;
    direction dir = direction::minus;
    bool operator==(const variant&) const = default;
};

inline std::string_view variant_name(variant v) {
    if (v.kern == kernel::sum) return v.dir == direction::minus ? "sum-minus" : "sum-plus";
    return v.dir == direction::minus ? "prod-minus" : "prod-plus";
}

inline variant variant_from_name(std::string_view name) {
    if (name == "sum-minus") return {kernel::sum, direction::minus};
    if (name == "sum-plus") return {kernel::sum, direction::plus};
    if (name == "prod-minus") return {kernel::product, direction::minus};
    if (name == "prod-plus") return {kernel::product, direction::plus};
    fail(errc::bad_params, "unknown variant \"" + std::string(name) +
                               "\" (expected sum-minus|sum-plus|prod-minus|prod-plus)");
}

/// Definitional computation: sum over unordered vertex pairs, diagonal
/// included, of the pair weight times x^d(u,v). The diagonal term for u is
/// 2*zeta(u) under the sum kernel and zeta(u)^2 under the product kernel;
/// every off-diagonal pair contributes exactly once. No closed-form
/// shortcuts here — this is the oracle the closed forms are judged against.
inline polynomial chromatic_schultz(const graph& g, const colouring& c, kernel kern) {
    if (!is_proper(g, c))
        fail(errc::improper_colouring, "colouring has a monochromatic edge");
    const distance_matrix dm(g);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(dm.diameter()) + 1, 0);
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        const auto zu = static_cast<std::int64_t>(c.zeta[static_cast<std::size_t>(u)]);
        for (int v = u; v < n; ++v) {
            const auto zv = static_cast<std::int64_t>(c.zeta[static_cast<std::size_t>(v)]);
            const std::int64_t w = kern == kernel::sum ? checked_add(zu, zv) : checked_mul(zu, zv);
            auto& slot = coeffs[static_cast<std::size_t>(dm.at(u, v))];
            slot = checked_add(slot, w);
        }
    }
    return polynomial(std::move(coeffs));
}

/// Variant polynomial of an arbitrary graph; the colouring comes from the
/// exact search, so the usual size limits apply.
inline polynomial variant_polynomial(const graph& g, variant v, int limit = 0) {
    const colouring c = v.dir == direction::minus ? chi_minus_colouring(g, limit)
                                                  : chi_plus_colouring(g, limit);
    return chromatic_schultz(g, c, v.kern);
}

/// Variant polynomial of a family instance; uses the canonical colouring, so
/// no search is involved and any family size is accepted.
inline polynomial variant_polynomial(const family_spec& spec, variant v) {
    const graph g = generate(spec);
    const colouring c = canonical_family_colouring(spec, v.dir);
    return chromatic_schultz(g, c, v.kern);
}

} // namespace schultz
