#ifndef ARCNEST_SERIES_HPP
#define ARCNEST_SERIES_HPP

#include <compare>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace arcnest {

using BigInt = boost::multiprecision::cpp_int;

// Exponent vector of one term.  s marks vertices and is the truncation
// variable; x, y, z, p track the block statistics of the counting formulas.
struct Monomial {
    int x = 0, y = 0, z = 0, p = 0, s = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    Monomial operator*(const Monomial& o) const {
        return {x + o.x, y + o.y, z + o.z, p + o.p, s + o.s};
    }
};

// Formal power series truncated at a fixed s-degree, with exact integer
// coefficients.  All operations drop terms whose s-degree exceeds the bound;
// operands must agree on the bound.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int s_bound) : bound_(s_bound) {}

    static TruncatedSeries one(int s_bound) {
        TruncatedSeries t(s_bound);
        t.add_term({}, 1);
        return t;
    }

    int s_bound() const { return bound_; }
    const std::map<Monomial, BigInt>& terms() const { return terms_; }

    void add_term(const Monomial& m, const BigInt& c);

    BigInt coeff(const Monomial& m) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    // Multiplies by s^delta; negative delta requires every term to have
    // s-degree at least -delta.
    TruncatedSeries shift_s(int delta) const;

    // 1 / (1 - this).  Every term must have positive s-degree, which makes
    // the geometric sum finite under truncation.
    TruncatedSeries geometric() const;

    // Coefficient sums per s-degree (all other variables evaluated at 1),
    // indices 0 .. s_bound.
    std::vector<BigInt> at_ones() const;

private:
    int bound_;
    std::map<Monomial, BigInt> terms_;
};

}  // namespace arcnest

#endif
