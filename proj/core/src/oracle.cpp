#include "milnor/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "milnor/gcd.hpp"

namespace milnor::oracle {

namespace {

// Column index of x^i y^j among monomials ordered by total degree, then by
// descending x-exponent. Deterministic matrices make failures reproducible.
std::size_t column_index(int i, int j) {
    int d = i + j;
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 +
           static_cast<std::size_t>(d - i);
}

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;  // sorted by column

// Truncation of x^a y^b * h to total degree < N as a sparse row.
SparseRow multiple_row(const BiPoly& h, int a, int b, int N) {
    SparseRow row;
    for (const auto& [m, c] : h.terms()) {
        int i = m.x + a, j = m.y + b;
        if (i + j >= N) continue;
        row.emplace_back(column_index(i, j), c);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    return row;
}

void axpy(SparseRow& target, const Rational& c, const SparseRow& source) {
    SparseRow out;
    out.reserve(target.size() + source.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < source.size()) {
        if (j == source.size() ||
            (i < target.size() && target[i].first < source[j].first)) {
            out.push_back(target[i++]);
        } else if (i == target.size() || source[j].first < target[i].first) {
            Rational v = c * source[j].second;
            if (v != 0) out.emplace_back(source[j].first, v);
            ++j;
        } else {
            Rational v = target[i].second + c * source[j].second;
            if (v != 0) out.emplace_back(target[i].first, v);
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

}  // namespace

unsigned truncated_quotient_dimension(const BiPoly& f, const BiPoly& g,
                                      TruncationLevel level) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("truncated_quotient_dimension: zero polynomial");
    const int N = level.value;
    const std::size_t columns =
        static_cast<std::size_t>(N) * static_cast<std::size_t>(N + 1) / 2;

    // Rows: truncations of x^a y^b * h for a + b + ord0(h) < N. Monomial
    // multipliers of higher degree contribute nothing below degree N.
    std::vector<SparseRow> rows;
    for (const BiPoly* h : {&f, &g}) {
        ExtNat ord = h->order_at_origin();
        if (ord.is_infinite() || ord.value() >= static_cast<std::uint64_t>(N)) continue;
        int budget = N - 1 - static_cast<int>(ord.value());
        for (int a = 0; a <= budget; ++a)
            for (int b = 0; a + b <= budget; ++b) {
                SparseRow row = multiple_row(*h, a, b, N);
                if (!row.empty()) rows.push_back(std::move(row));
            }
    }

    // Exact sparse row reduction; pivot per leading column.
    std::vector<SparseRow> pivot(columns);
    unsigned rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            std::size_t lead = row.front().first;
            if (pivot[lead].empty()) {
                // normalize so the pivot coefficient is 1
                Rational inv = Rational(1) / row.front().second;
                for (auto& [col, v] : row) v *= inv;
                pivot[lead] = std::move(row);
                ++rank;
                break;
            }
            axpy(row, -row.front().second, pivot[lead]);
        }
    }
    return static_cast<unsigned>(columns) - rank;
}

ExtNat local_quotient_dimension(const BiPoly& f, const BiPoly& g) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("local_quotient_dimension: zero polynomial");
    if (!f.vanishes_at_origin() || !g.vanishes_at_origin()) return ExtNat::of(0);
    if (gcd_bivariate(f, g).vanishes_at_origin()) return ExtNat::infinity();

    const long cap = 4L * *f.total_degree() * *g.total_degree() + 4;
    int n = 4;
    unsigned prev = truncated_quotient_dimension(f, g, TruncationLevel(n));
    for (;;) {
        if (2L * n > cap)
            throw CapExceeded(
                "local_quotient_dimension: truncation cap " + std::to_string(cap) +
                " exceeded before stabilization (degrees " +
                std::to_string(*f.total_degree()) + ", " +
                std::to_string(*g.total_degree()) + ")");
        unsigned cur = truncated_quotient_dimension(f, g, TruncationLevel(2 * n));
        if (cur == prev && cur <= static_cast<unsigned>(n - 1)) return ExtNat::of(cur);
        prev = cur;
        n *= 2;
    }
}

ExtNat milnor_oracle(const BiPoly& f) {
    if (f.is_constant())
        throw std::invalid_argument("milnor_oracle: constant polynomial");
    BiPoly fx = f.derivative(Var::X);
    BiPoly fy = f.derivative(Var::Y);
    if (fx.is_zero()) return fy.vanishes_at_origin() ? ExtNat::infinity() : ExtNat::of(0);
    if (fy.is_zero()) return fx.vanishes_at_origin() ? ExtNat::infinity() : ExtNat::of(0);
    return local_quotient_dimension(fx, fy);
}

}  // namespace milnor::oracle
