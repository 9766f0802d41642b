#include "trop/monomial.hpp"

#include <stdexcept>

namespace trop {

bool Monomial::is_unit() const {
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

long Monomial::degree() const {
    long d = 0;
    for (int e : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps_.size() != o.exps_.size())
        throw std::invalid_argument("monomial product: mismatched variable counts");
    std::vector<int> out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] + o.exps_[i];
    return Monomial(std::move(out));
}

std::string Monomial::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "T" + std::to_string(i + 1);
        if (exps_[i] != 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("graded lex: mismatched variable counts");
    long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() < b.exponents();
}

}  // namespace trop
