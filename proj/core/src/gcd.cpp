#include "milnor/gcd.hpp"

#include <utility>
#include <vector>

namespace milnor {

namespace {

// View of a BiPoly as an element of Q[x][y]: index = y-power, entry = x-poly.
using YPoly = std::vector<UniPoly>;

YPoly to_ypoly(const BiPoly& p) {
    YPoly out(static_cast<std::size_t>(p.degree_in_y() + 1));
    for (const auto& [m, c] : p.terms()) {
        auto& coeff = out[static_cast<std::size_t>(m.y)];
        coeff = coeff + UniPoly::monomial(c, m.x);
    }
    return out;
}

BiPoly from_ypoly(const YPoly& a) {
    BiPoly out;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const UniPoly& u = a[j];
        for (int i = 0; i <= u.degree(); ++i)
            out.add_term({i, static_cast<int>(j)}, u.coeff(i));
    }
    return out;
}

void ytrim(YPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int ydeg(const YPoly& a) { return static_cast<int>(a.size()) - 1; }

bool yzero(const YPoly& a) { return a.empty(); }

YPoly ymul_coeff(const YPoly& a, const UniPoly& c) {
    YPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    ytrim(out);
    return out;
}

YPoly ysub(const YPoly& a, const YPoly& b) {
    YPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        UniPoly ai = i < a.size() ? a[i] : UniPoly();
        UniPoly bi = i < b.size() ? b[i] : UniPoly();
        out[i] = ai - bi;
    }
    ytrim(out);
    return out;
}

YPoly yshift_mul(const YPoly& a, int yshift, const UniPoly& c) {
    YPoly out(a.size() + static_cast<std::size_t>(yshift));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i + static_cast<std::size_t>(yshift)] = a[i] * c;
    ytrim(out);
    return out;
}

// Exact division of every y-coefficient by d in Q[x].
YPoly ydiv_coeff_exact(const YPoly& a, const UniPoly& d) {
    YPoly out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        if (!a[i].divided_exact(d, out[i]))
            throw std::logic_error("gcd: inexact coefficient division");
    }
    ytrim(out);
    return out;
}

// Monic gcd in Q[x] of all y-coefficients; zero only for the zero polynomial.
UniPoly content_y(const YPoly& a) {
    UniPoly g;
    for (const auto& c : a) {
        if (c.is_zero()) continue;
        g = UniPoly::gcd(g, c);
        if (!g.is_zero() && g.degree() == 0) return UniPoly::constant(1);
    }
    return g.is_zero() ? g : g.monic();
}

// Pseudo-remainder: exactly lc(b)^(deg a - deg b + 1) * a mod b in Q[x][y].
// The trailing top-up keeps the full power of lc(b) even when a reduction
// step drops the degree by more than one; the subresultant divisions are
// exact only for this normalization.
YPoly yprem(YPoly a, const YPoly& b) {
    const UniPoly& lb = b.back();
    int db = ydeg(b);
    int e = ydeg(a) - db + 1;
    while (!yzero(a) && ydeg(a) >= db) {
        int shift = ydeg(a) - db;
        UniPoly la = a.back();
        a = ysub(ymul_coeff(a, lb), yshift_mul(b, shift, la));
        --e;
    }
    for (; e > 0; --e) a = ymul_coeff(a, lb);
    return a;
}

// Subresultant polynomial-remainder sequence on primitive inputs with
// deg_y >= 1 each; returns the primitive part of the last nonzero remainder
// of positive y-degree, or a constant when the inputs are coprime in y.
YPoly subresultant_prs(YPoly a, YPoly b) {
    if (ydeg(a) < ydeg(b)) std::swap(a, b);
    UniPoly g = UniPoly::constant(1);
    UniPoly h = UniPoly::constant(1);
    for (;;) {
        int delta = ydeg(a) - ydeg(b);
        YPoly r = yprem(a, b);
        if (yzero(r)) {
            return ydiv_coeff_exact(b, content_y(b));
        }
        if (ydeg(r) == 0) {
            return YPoly{UniPoly::constant(1)};
        }
        a = std::move(b);
        // divide by g * h^delta (exact by the subresultant theory)
        UniPoly divisor = g;
        for (int i = 0; i < delta; ++i) divisor = divisor * h;
        b = ydiv_coeff_exact(r, divisor);
        g = a.back();
        // h <- g^delta * h^(1-delta)
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            UniPoly num = UniPoly::constant(1);
            for (int i = 0; i < delta; ++i) num = num * g;
            UniPoly hd = UniPoly::constant(1);
            for (int i = 0; i < delta - 1; ++i) hd = hd * h;
            UniPoly q;
            if (!num.divided_exact(hd, q))
                throw std::logic_error("gcd: inexact h update");
            h = q;
        }
        // delta == 0 leaves h unchanged
    }
}

bool monomial_divides(const Monomial& d, const Monomial& m) {
    return d.x <= m.x && d.y <= m.y;
}

}  // namespace

BiPoly normalized_grlex_monic(const BiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading_coeff());
}

std::optional<BiPoly> divided_exact(const BiPoly& p, const BiPoly& d) {
    if (d.is_zero()) throw std::domain_error("divided_exact: zero divisor");
    BiPoly q;
    BiPoly r = p;
    const Monomial dm = d.leading_monomial();
    const Rational dc = d.leading_coeff();
    while (!r.is_zero()) {
        Monomial rm = r.leading_monomial();
        if (!monomial_divides(dm, rm)) return std::nullopt;
        BiPoly t = BiPoly::term({rm.x - dm.x, rm.y - dm.y}, r.leading_coeff() / dc);
        q += t;
        r -= t * d;
    }
    return q;
}

bool divides_exactly(const BiPoly& d, const BiPoly& p) {
    if (p.is_zero()) return true;
    return divided_exact(p, d).has_value();
}

BiPoly gcd_bivariate(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd_bivariate: both inputs zero");
    if (p.is_zero()) return normalized_grlex_monic(q);
    if (q.is_zero()) return normalized_grlex_monic(p);
    if (p.is_constant() || q.is_constant()) return BiPoly::constant(1);

    YPoly a = to_ypoly(p);
    YPoly b = to_ypoly(q);

    if (ydeg(a) == 0 && ydeg(b) == 0) {
        // both live in Q[x]
        UniPoly g = UniPoly::gcd(a[0], b[0]);
        YPoly out{g};
        return normalized_grlex_monic(from_ypoly(out));
    }

    UniPoly ca = content_y(a);
    UniPoly cb = content_y(b);
    YPoly pa = ydiv_coeff_exact(a, ca);
    YPoly pb = ydiv_coeff_exact(b, cb);
    UniPoly cg = UniPoly::gcd(ca, cb);

    YPoly pg;
    if (ydeg(pa) == 0 || ydeg(pb) == 0) {
        // a primitive part that is constant in y shares no y-structure
        pg = YPoly{UniPoly::constant(1)};
    } else {
        pg = subresultant_prs(pa, pb);
    }

    BiPoly result = from_ypoly(pg) * from_ypoly(YPoly{cg});
    return normalized_grlex_monic(result);
}

BinaryForm squarefree_part_binary(const BinaryForm& F) {
    if (F.degree == 0) return F;
    BiPoly fx = F.form.derivative(Var::X);
    BiPoly fy = F.form.derivative(Var::Y);
    // gcd(F, dF/dx, dF/dy); a zero partial is absorbed (gcd(p, 0) = p).
    BiPoly g = gcd_bivariate(F.form, fx);
    g = gcd_bivariate(g, fy);
    auto q = divided_exact(F.form, g);
    if (!q) throw std::logic_error("squarefree_part_binary: gcd does not divide");
    return BinaryForm::of(normalized_grlex_monic(*q));
}

}  // namespace milnor
