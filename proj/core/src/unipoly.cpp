#include "milnor/unipoly.hpp"

#include <stdexcept>
#include <utility>

namespace milnor {

namespace {
const Rational kZero = 0;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (c != 0) p.coeffs_ = {c};
    return p;
}

UniPoly UniPoly::monomial(const Rational& c, int exponent) {
    UniPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int UniPoly::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

Rational UniPoly::coeff(int exponent) const {
    if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(exponent)];
}

const Rational& UniPoly::lead() const {
    if (is_zero()) throw std::logic_error("UniPoly: lead() of zero");
    return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c == 0) return UniPoly();
    UniPoly r = *this;
    for (auto& k : r.coeffs_) k *= c;
    return r;
}

UniPoly UniPoly::shifted(int exponent) const {
    if (is_zero() || exponent == 0) return *this;
    UniPoly r;
    r.coeffs_.assign(coeffs_.size() + static_cast<std::size_t>(exponent), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i + static_cast<std::size_t>(exponent)] = coeffs_[i];
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / lead());
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& quotient,
                     UniPoly& remainder) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    quotient = UniPoly();
    remainder = a;
    while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
        int shift = remainder.degree() - b.degree();
        Rational c = remainder.lead() / b.lead();
        UniPoly t = UniPoly::monomial(c, shift);
        quotient = quotient + t;
        remainder = remainder - t * b;
    }
}

bool UniPoly::divided_exact(const UniPoly& d, UniPoly& quotient) const {
    UniPoly q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) return false;
    quotient = q;
    return true;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace milnor
