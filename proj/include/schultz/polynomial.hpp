#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schultz/error.hpp"

namespace schultz {

// All coefficient arithmetic is checked; a result outside the signed 64-bit
// range raises errc::integer_overflow instead of wrapping.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        fail(errc::integer_overflow,
             std::to_string(a) + " + " + std::to_string(b) + " exceeds 64-bit range");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        fail(errc::integer_overflow,
             std::to_string(a) + " * " + std::to_string(b) + " exceeds 64-bit range");
    return r;
}

/// Dense univariate polynomial with exact integer coefficients.
///
/// coeffs()[d] is the coefficient of x^d. The representation is normalized:
/// no trailing zeros are stored, and the zero polynomial is the empty vector
/// (degree() == -1).
class polynomial {
public:
    polynomial() = default;

    explicit polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    bool is_zero() const { return coeffs_.empty(); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    std::int64_t coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
        return coeffs_[static_cast<std::size_t>(d)];
    }

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

    // Accumulate c*x^d in place.
    void accumulate(std::int64_t c, int d) {
        if (d < 0) fail(errc::bad_params, "negative degree " + std::to_string(d));
        if (static_cast<std::size_t>(d) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(d) + 1, 0);
        coeffs_[static_cast<std::size_t>(d)] = checked_add(coeffs_[static_cast<std::size_t>(d)], c);
        normalize();
    }

    // Exact Horner evaluation.
    std::int64_t evaluate(std::int64_t x) const {
        std::int64_t acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = checked_add(checked_mul(acc, x), *it);
        return acc;
    }

    bool operator==(const polynomial&) const = default;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<std::int64_t> coeffs_;
};

inline polynomial poly_from_coeffs(std::vector<std::int64_t> coeffs) {
    return polynomial(std::move(coeffs));
}

inline polynomial add(const polynomial& p, const polynomial& q) {
    std::vector<std::int64_t> out(std::max(p.coeffs().size(), q.coeffs().size()), 0);
    for (std::size_t d = 0; d < out.size(); ++d)
        out[d] = checked_add(p.coeff(static_cast<int>(d)), q.coeff(static_cast<int>(d)));
    return polynomial(std::move(out));
}

inline polynomial scale(std::int64_t k, const polynomial& p) {
    std::vector<std::int64_t> out(p.coeffs());
    for (auto& c : out) c = checked_mul(k, c);
    return polynomial(std::move(out));
}

inline polynomial add_term(const polynomial& p, std::int64_t c, int d) {
    polynomial out = p;
    out.accumulate(c, d);
    return out;
}

inline std::int64_t evaluate(const polynomial& p, std::int64_t x) { return p.evaluate(x); }

/// One coefficient disagreement between two polynomials.
struct coeff_diff {
    int degree = 0;
    std::int64_t left = 0;
    std::int64_t right = 0;
    bool operator==(const coeff_diff&) const = default;
};

/// All degrees where p and q disagree, ascending. Empty iff p == q.
inline std::vector<coeff_diff> diff_report(const polynomial& p, const polynomial& q) {
    std::vector<coeff_diff> out;
    const int top = std::max(p.degree(), q.degree());
    for (int d = 0; d <= top; ++d)
        if (p.coeff(d) != q.coeff(d)) out.push_back({d, p.coeff(d), q.coeff(d)});
    return out;
}

/// Human form, ascending degree: "8 + 6x + 2x^2". The zero polynomial is "0".
inline std::string format(const polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int d = 0; d <= p.degree(); ++d) {
        const std::int64_t c = p.coeff(d);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string digits = std::to_string(c);
        if (c < 0) digits.erase(0, 1);
        const bool unit = (digits == "1" && d > 0);
        if (!unit) out += digits;
        if (d == 1)
            out += "x";
        else if (d >= 2)
            out += "x^" + std::to_string(d);
    }
    return out;
}

} // namespace schultz
