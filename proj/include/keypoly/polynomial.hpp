#pragma once

#include <map>
#include <string>
#include <vector>

#include "keypoly/error.hpp"
#include "keypoly/shapes.hpp"

namespace keypoly {

// Exact integer coefficients. The default is a checked 64-bit integer;
// configuring the build with KEYPOLY_WIDE_COEFF widens it to 128 bits.
// Overflow throws limit_error instead of wrapping.
#if defined(KEYPOLY_WIDE_COEFF)
using Coeff = __int128;
#else
using Coeff = long long;
#endif

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);
std::string coeff_to_string(Coeff c);

// Total order on exponent vectors: by total degree, then lexicographically
// with the earlier variable weighing more. Serialization and printing follow
// map order, so output is deterministic.
struct GradedLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse polynomial in x_1..x_n over the integers. Terms with coefficient
// zero are never stored.
class Polynomial {
public:
    explicit Polynomial(int n);
    static Polynomial monomial(int n, std::vector<int> exponents, Coeff c = 1);
    static Polynomial one(int n);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Coeff coeff(const std::vector<int>& exponents) const;
    const std::map<std::vector<int>, Coeff, GradedLex>& terms() const {
        return terms_;
    }

    void add_term(std::vector<int> exponents, Coeff c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const;

    Polynomial times_variable(int i) const;
    Polynomial times_monomial(const std::vector<int>& exponents) const;

    bool operator==(const Polynomial&) const = default;

    // "c * x1^a1 x2^a2" with zero exponents omitted, ^1 implicit and a unit
    // coefficient dropped; a constant prints as the bare coefficient and the
    // zero polynomial prints as "0".
    std::string to_text() const;

private:
    int n_;
    std::map<std::vector<int>, Coeff, GradedLex> terms_;
};

// Exchange x_i and x_{i+1} in every term.
Polynomial swap_vars(const Polynomial& p, int i);

// The isobaric divided difference: rho(p) = (x_i p - s_i(x_i p))/(x_i - x_{i+1}),
// an exact division. rho_by_division performs the division literally and
// throws internal_error on a nonzero remainder; rho_by_strings expands each
// monomial into its locally symmetric string directly. rho runs the string
// route and, except in NDEBUG builds, recomputes by division and compares,
// throwing internal_error on any mismatch.
Polynomial rho_by_division(const Polynomial& p, int i);
Polynomial rho_by_strings(const Polynomial& p, int i);
Polynomial rho(const Polynomial& p, int i);

// rho_bar = rho - 1.
Polynomial rho_bar(const Polynomial& p, int i);

// Apply operators along a word, first letter first.
Polynomial apply_rho_word(Polynomial p, const ReducedWord& word);
Polynomial apply_rho_bar_word(Polynomial p, const ReducedWord& word);

// Exact division of p by (x_i - x_{i+1}); throws internal_error when the
// remainder is nonzero.
Polynomial divide_by_var_difference(const Polynomial& p, int i);

} // namespace keypoly
