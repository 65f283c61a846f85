#ifndef LRSOS_MONOMIAL_HPP
#define LRSOS_MONOMIAL_HPP

#include <numeric>
#include <string>
#include <vector>

namespace lrsos {

/// Exponent vector over the ambient variables of the parametrizing space
/// (y0, y1, x1..xm for scrolls; x0..xm for Veronese and plane-cubic rings).
struct Monomial {
    std::vector<int> exponents;

    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

    bool operator==(const Monomial& other) const { return exponents == other.exponents; }

    bool divisible_by(const Monomial& d) const {
        if (d.exponents.size() != exponents.size()) return false;
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] < d.exponents[i]) return false;
        return true;
    }

    std::string str(const std::vector<std::string>& vars) const;
};

/// Graded reverse lexicographic comparison, first variable largest.
/// Returns true when a < b.
bool grevlex_less(const std::vector<int>& a, const std::vector<int>& b);

/// All monomials of the given total degree in nvars variables, listed in
/// exponent-lexicographic order (first variable's exponent descending).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace lrsos

#endif
