#include "lrsos/monomial.hpp"

#include <sstream>

namespace lrsos {

std::string Monomial::str(const std::vector<std::string>& vars) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (any) os << "*";
        os << vars[i];
        if (exponents[i] > 1) os << "^" << exponents[i];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

bool grevlex_less(const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da < db;
    // equal degree: a < b iff the last nonzero entry of a - b is positive
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    std::vector<int> cur(nvars, 0);
    // exponents assigned left to right, each taken as large as possible first
    auto rec = [&](auto&& self, int var, int rem) -> void {
        if (var == nvars - 1) {
            cur[var] = rem;
            out.push_back(Monomial{cur});
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, rem - e);
        }
    };
    if (nvars > 0) rec(rec, 0, degree);
    return out;
}

}  // namespace lrsos
