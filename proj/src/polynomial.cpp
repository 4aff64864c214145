#include "keypoly/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace keypoly {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_add_overflow(a, b, &out))
        throw limit_error("coefficient addition overflow");
    return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff out;
    if (__builtin_mul_overflow(a, b, &out))
        throw limit_error("coefficient multiplication overflow");
    return out;
}

std::string coeff_to_string(Coeff c) {
#if defined(KEYPOLY_WIDE_COEFF)
    if (c == 0) return "0";
    bool neg = c < 0;
    unsigned __int128 v = neg ? -static_cast<unsigned __int128>(c)
                              : static_cast<unsigned __int128>(c);
    std::string digits;
    while (v > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
#else
    return std::to_string(c);
#endif
}

bool GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a > b;  // within a degree, the x1-heavier term comes first
}

Polynomial::Polynomial(int n) : n_(n) {
    if (n_ < 1) throw validation_error("polynomial rank must be positive");
}

Polynomial Polynomial::monomial(int n, std::vector<int> exponents, Coeff c) {
    Polynomial p(n);
    p.add_term(std::move(exponents), c);
    return p;
}

Polynomial Polynomial::one(int n) {
    return monomial(n, std::vector<int>(static_cast<std::size_t>(n), 0));
}

Coeff Polynomial::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(std::vector<int> exponents, Coeff c) {
    if (static_cast<int>(exponents.size()) != n_)
        throw validation_error("exponent vector length " + std::to_string(exponents.size()) +
                               " does not match rank " + std::to_string(n_));
    for (int e : exponents)
        if (e < 0) throw validation_error("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exponents), c);
    if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.n_ != n_) throw validation_error("polynomial ranks differ");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.n_ != n_) throw validation_error("polynomial ranks differ");
    for (const auto& [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, checked_mul(c, -1));
    return out;
}

Polynomial Polynomial::times_variable(int i) const {
    if (i < 1 || i > n_)
        throw validation_error("variable index " + std::to_string(i) + " outside [1," +
                               std::to_string(n_) + "]");
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> shifted = e;
        ++shifted[static_cast<std::size_t>(i - 1)];
        out.add_term(std::move(shifted), c);
    }
    return out;
}

Polynomial Polynomial::times_monomial(const std::vector<int>& exponents) const {
    if (static_cast<int>(exponents.size()) != n_)
        throw validation_error("exponent vector length does not match rank");
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> shifted = e;
        for (std::size_t v = 0; v < shifted.size(); ++v) shifted[v] += exponents[v];
        out.add_term(std::move(shifted), c);
    }
    return out;
}

std::string Polynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool constant =
            std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        const bool coeff_printed = c != 1 || constant;
        if (coeff_printed) os << coeff_to_string(c);
        bool any_var = false;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (any_var)
                os << ' ';
            else if (coeff_printed)
                os << " * ";
            os << "x" << (v + 1);
            if (e[v] != 1) os << "^" << e[v];
            any_var = true;
        }
    }
    return os.str();
}

Polynomial swap_vars(const Polynomial& p, int i) {
    if (i < 1 || i >= p.n())
        throw validation_error("swap index " + std::to_string(i) + " outside [1," +
                               std::to_string(p.n() - 1) + "]");
    Polynomial out(p.n());
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> swapped = e;
        std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
        out.add_term(std::move(swapped), c);
    }
    return out;
}

Polynomial divide_by_var_difference(const Polynomial& p, int i) {
    if (i < 1 || i >= p.n())
        throw validation_error("variable pair index " + std::to_string(i) + " outside [1," +
                               std::to_string(p.n() - 1) + "]");
    const std::size_t ia = static_cast<std::size_t>(i - 1);
    const std::size_t ib = static_cast<std::size_t>(i);
    // Group terms by everything except the (x_i, x_{i+1}) pair and by the
    // pair's total degree s; each group divides independently by synthetic
    // division against x_i - x_{i+1}.
    std::map<std::vector<int>, std::vector<Coeff>> groups;
    for (const auto& [e, c] : p.terms()) {
        const int a = e[ia];
        const int s = a + e[ib];
        std::vector<int> gk = e;
        gk[ia] = s;
        gk[ib] = 0;
        auto& cs = groups[std::move(gk)];
        if (cs.size() < static_cast<std::size_t>(s) + 1)
            cs.resize(static_cast<std::size_t>(s) + 1, 0);
        cs[static_cast<std::size_t>(a)] = c;
    }
    Polynomial out(p.n());
    for (const auto& [gk, cs] : groups) {
        const int s = gk[ia];
        if (s == 0) {
            if (cs[0] != 0)
                throw internal_error("nonzero remainder dividing by x" + std::to_string(i) +
                                     " - x" + std::to_string(i + 1));
            continue;
        }
        std::vector<Coeff> d(static_cast<std::size_t>(s), 0);
        d[static_cast<std::size_t>(s - 1)] = cs[static_cast<std::size_t>(s)];
        for (int a = s - 1; a >= 1; --a)
            d[static_cast<std::size_t>(a - 1)] =
                checked_add(cs[static_cast<std::size_t>(a)], d[static_cast<std::size_t>(a)]);
        if (checked_add(cs[0], d[0]) != 0)
            throw internal_error("nonzero remainder dividing by x" + std::to_string(i) +
                                 " - x" + std::to_string(i + 1));
        for (int a = 0; a < s; ++a) {
            if (d[static_cast<std::size_t>(a)] == 0) continue;
            std::vector<int> e = gk;
            e[ia] = a;
            e[ib] = s - 1 - a;
            out.add_term(std::move(e), d[static_cast<std::size_t>(a)]);
        }
    }
    return out;
}

Polynomial rho_by_division(const Polynomial& p, int i) {
    Polynomial lifted = p.times_variable(i);
    Polynomial numerator = lifted - swap_vars(lifted, i);
    return divide_by_var_difference(numerator, i);
}

Polynomial rho_by_strings(const Polynomial& p, int i) {
    if (i < 1 || i >= p.n())
        throw validation_error("operator index " + std::to_string(i) + " outside [1," +
                               std::to_string(p.n() - 1) + "]");
    const std::size_t ia = static_cast<std::size_t>(i - 1);
    const std::size_t ib = static_cast<std::size_t>(i);
    Polynomial out(p.n());
    for (const auto& [e, c] : p.terms()) {
        const int a = e[ia];
        const int b = e[ib];
        if (a >= b) {
            // The locally symmetric string from x^a y^b down to x^b y^a.
            for (int t = b; t <= a; ++t) {
                std::vector<int> term = e;
                term[ia] = t;
                term[ib] = a + b - t;
                out.add_term(std::move(term), c);
            }
        } else {
            // Strictly between the endpoints, negated; empty when b = a+1.
            for (int t = a + 1; t <= b - 1; ++t) {
                std::vector<int> term = e;
                term[ia] = t;
                term[ib] = a + b - t;
                out.add_term(std::move(term), checked_mul(c, -1));
            }
        }
    }
    return out;
}

Polynomial rho(const Polynomial& p, int i) {
    Polynomial fast = rho_by_strings(p, i);
#if !defined(NDEBUG)
    Polynomial slow = rho_by_division(p, i);
    if (!(fast == slow))
        throw internal_error("string route disagrees with division route for rho_" +
                             std::to_string(i) + " on " + p.to_text());
#endif
    return fast;
}

Polynomial rho_bar(const Polynomial& p, int i) {
    return rho(p, i) - p;
}

Polynomial apply_rho_word(Polynomial p, const ReducedWord& word) {
    for (int letter : word) p = rho(p, letter);
    return p;
}

Polynomial apply_rho_bar_word(Polynomial p, const ReducedWord& word) {
    for (int letter : word) p = rho_bar(p, letter);
    return p;
}

} // namespace keypoly
