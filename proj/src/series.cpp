#include "arcnest/series.hpp"

#include <stdexcept>

namespace arcnest {

void TruncatedSeries::add_term(const Monomial& m, const BigInt& c) {
    if (m.s > bound_ || c == 0) return;
    BigInt& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
}

BigInt TruncatedSeries::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.bound_ != bound_) throw std::invalid_argument("series bounds differ");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    if (o.bound_ != bound_) throw std::invalid_argument("series bounds differ");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (o.bound_ != bound_) throw std::invalid_argument("series bounds differ");
    TruncatedSeries out(bound_);
    for (const auto& [ma, ca] : terms_) {
        if (ma.s > bound_) continue;
        for (const auto& [mb, cb] : o.terms_) {
            if (ma.s + mb.s > bound_) continue;
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::shift_s(int delta) const {
    TruncatedSeries out(bound_);
    for (const auto& [m, c] : terms_) {
        if (m.s + delta < 0) throw std::invalid_argument("negative s-degree after shift");
        Monomial shifted = m;
        shifted.s += delta;
        out.add_term(shifted, c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::geometric() const {
    for (const auto& [m, c] : terms_)
        if (m.s < 1) throw std::invalid_argument("geometric sum needs positive s-degrees");
    TruncatedSeries out = one(bound_);
    TruncatedSeries power = one(bound_);
    for (int i = 0; i < bound_; ++i) {
        power = power * *this;
        if (power.terms_.empty()) break;
        out += power;
    }
    return out;
}

std::vector<BigInt> TruncatedSeries::at_ones() const {
    std::vector<BigInt> out(static_cast<size_t>(bound_) + 1, BigInt(0));
    for (const auto& [m, c] : terms_) out[static_cast<size_t>(m.s)] += c;
    return out;
}

}  // namespace arcnest
