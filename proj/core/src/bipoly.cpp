#include "milnor/bipoly.hpp"

#include <algorithm>
#include <vector>

namespace milnor {

BiPoly BiPoly::constant(const Rational& c) {
    BiPoly p;
    p.add_term({0, 0}, c);
    return p;
}

BiPoly BiPoly::term(Monomial m, const Rational& c) {
    BiPoly p;
    p.add_term(m, c);
    return p;
}

BiPoly BiPoly::variable(Var v) {
    return v == Var::X ? term({1, 0}, 1) : term({0, 1}, 1);
}

bool BiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

std::optional<int> BiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // grlex max is the last term in the map
    return terms_.rbegin()->first.total();
}

ExtNat BiPoly::order_at_origin() const {
    if (terms_.empty()) return ExtNat::infinity();
    return ExtNat::of(static_cast<std::uint64_t>(terms_.begin()->first.total()));
}

Rational BiPoly::constant_term() const { return coeff({0, 0}); }

bool BiPoly::vanishes_at_origin() const { return constant_term() == 0; }

Rational BiPoly::coeff(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Monomial BiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("BiPoly: leading term of zero");
    return terms_.rbegin()->first;
}

Rational BiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("BiPoly: leading term of zero");
    return terms_.rbegin()->second;
}

void BiPoly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    r += b;
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    r -= b;
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.x + mb.x, ma.y + mb.y}, ca * cb);
    return r;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

BiPoly BiPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("BiPoly: negative exponent");
    BiPoly result = constant(1);
    BiPoly base = *this;
    int e = exponent;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

BiPoly BiPoly::integer_primitive_scaled() const {
    BiPoly r = *this;
    r.make_integer_primitive();
    return r;
}

void BiPoly::make_integer_primitive() {
    if (terms_.empty()) return;
    Integer den_lcm = 1;
    for (const auto& [m, c] : terms_)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    Integer num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        Integer scaled_num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled_num.get_mpz_t());
    }
    Rational factor = make_rational(den_lcm, num_gcd);
    if (factor == 1) return;
    for (auto& [m, c] : terms_) c *= factor;
}

void BiPoly::sub_scaled_shifted(const BiPoly& a, Monomial shift, const Rational& c) {
    for (const auto& [m, k] : a.terms_)
        add_term({m.x + shift.x, m.y + shift.y}, -(c * k));
}

void BiPoly::truncate_below(int level) {
    auto it = terms_.begin();
    while (it != terms_.end() && it->first.total() < level) ++it;
    terms_.erase(it, terms_.end());
}

BiPoly BiPoly::derivative(Var v) const {
    BiPoly r;
    for (const auto& [m, c] : terms_) {
        if (v == Var::X && m.x > 0) r.add_term({m.x - 1, m.y}, c * m.x);
        if (v == Var::Y && m.y > 0) r.add_term({m.x, m.y - 1}, c * m.y);
    }
    return r;
}

BiPoly BiPoly::lowest_form_poly() const {
    if (terms_.empty()) throw std::invalid_argument("BiPoly: lowest form of zero");
    int ord = terms_.begin()->first.total();
    BiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.total() > ord) break;  // grlex order groups degrees
        r.terms_.emplace(m, c);
    }
    return r;
}

BiPoly BiPoly::substitute_linear(const Rational& a, const Rational& b,
                                 const Rational& c, const Rational& d) const {
    const BiPoly sx = BiPoly::term({1, 0}, a) + BiPoly::term({0, 1}, b);
    const BiPoly sy = BiPoly::term({1, 0}, c) + BiPoly::term({0, 1}, d);

    // cache powers up to the needed exponents
    int maxx = 0, maxy = 0;
    for (const auto& [m, k] : terms_) {
        maxx = std::max(maxx, m.x);
        maxy = std::max(maxy, m.y);
    }
    std::vector<BiPoly> px(static_cast<std::size_t>(maxx) + 1);
    std::vector<BiPoly> py(static_cast<std::size_t>(maxy) + 1);
    px[0] = BiPoly::constant(1);
    py[0] = BiPoly::constant(1);
    for (int i = 1; i <= maxx; ++i) px[static_cast<std::size_t>(i)] = px[static_cast<std::size_t>(i - 1)] * sx;
    for (int j = 1; j <= maxy; ++j) py[static_cast<std::size_t>(j)] = py[static_cast<std::size_t>(j - 1)] * sy;

    BiPoly r;
    for (const auto& [m, k] : terms_)
        r += (px[static_cast<std::size_t>(m.x)] * py[static_cast<std::size_t>(m.y)]).scaled(k);
    return r;
}

UniPoly BiPoly::restrict_y_zero() const {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : terms_) {
        if (m.y != 0) continue;
        if (static_cast<int>(coeffs.size()) <= m.x)
            coeffs.resize(static_cast<std::size_t>(m.x) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(m.x)] = c;
    }
    return UniPoly(std::move(coeffs));
}

UniPoly BiPoly::restrict_x_zero() const {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : terms_) {
        if (m.x != 0) continue;
        if (static_cast<int>(coeffs.size()) <= m.y)
            coeffs.resize(static_cast<std::size_t>(m.y) + 1, Rational(0));
        coeffs[static_cast<std::size_t>(m.y)] = c;
    }
    return UniPoly(std::move(coeffs));
}

int BiPoly::degree_in_x() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
}

int BiPoly::degree_in_y() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.y);
    return d;
}

BiPoly BiPoly::divided_by_y() const {
    BiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.y < 1) throw std::logic_error("BiPoly: not divisible by y");
        r.terms_.emplace(Monomial{m.x, m.y - 1}, c);
    }
    return r;
}

BiPoly BiPoly::divided_by_x() const {
    BiPoly r;
    for (const auto& [m, c] : terms_) {
        if (m.x < 1) throw std::logic_error("BiPoly: not divisible by x");
        r.terms_.emplace(Monomial{m.x - 1, m.y}, c);
    }
    return r;
}

BinaryForm BinaryForm::of(const BiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("BinaryForm: zero polynomial");
    int deg = *p.total_degree();
    for (const auto& [m, c] : p.terms())
        if (m.total() != deg)
            throw std::invalid_argument("BinaryForm: polynomial is not homogeneous");
    return BinaryForm{p, deg};
}

BinaryForm lowest_form(const BiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("lowest_form: zero polynomial");
    return BinaryForm::of(p.lowest_form_poly());
}

}  // namespace milnor
