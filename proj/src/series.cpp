#include "logbb/series.hpp"

#include "logbb/errors.hpp"

#include <sstream>

namespace logbb {

TruncSeries::TruncSeries(AmbientPtr amb, int truncation)
    : amb_(std::move(amb)), trunc_(truncation) {}

void TruncSeries::add_term(const Expo& e, const Rat& c) {
    if (c == 0 || expo_total_degree(e) > trunc_) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncSeries TruncSeries::from_poly(const MPoly& p, int truncation) {
    TruncSeries s(p.ambient(), truncation);
    for (const auto& [e, c] : p.terms()) s.add_term(e, c);
    return s;
}

TruncSeries TruncSeries::from_poly_at(const MPoly& p, std::span<const Rat> point,
                                      int truncation) {
    return from_poly(p.translate(point), truncation);
}

Rat TruncSeries::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat TruncSeries::constant_term() const { return coeff(Expo(amb_->arity(), 0)); }

static void require_compatible(const TruncSeries& a, const TruncSeries& b) {
    if (!same_ambient(a.ambient(), b.ambient()))
        throw AmbientMismatch("series over different variable lists");
    if (a.truncation() != b.truncation())
        throw AmbientMismatch("series with different truncation bounds");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    require_compatible(*this, o);
    TruncSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    require_compatible(*this, o);
    TruncSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    require_compatible(*this, o);
    TruncSeries r(amb_, trunc_);
    for (const auto& [ea, ca] : terms_) {
        int da = expo_total_degree(ea);
        for (const auto& [eb, cb] : o.terms_) {
            if (da + expo_total_degree(eb) > trunc_) continue;
            r.add_term(expo_add(ea, eb), ca * cb);
        }
    }
    return r;
}

TruncSeries TruncSeries::inverse() const {
    Rat c0 = constant_term();
    if (c0 == 0) throw NotAUnit("series has zero constant term");
    // u = c0(1 + w) with ord(w) >= 1, so 1/u = (1/c0) * sum (-w)^k, k <= T.
    TruncSeries w = *this;
    Expo zero(amb_->arity(), 0);
    w.add_term(zero, -c0);
    for (auto& [e, c] : w.terms_) c /= c0;
    TruncSeries acc(amb_, trunc_);
    acc.add_term(zero, Rat(1));
    TruncSeries pw(amb_, trunc_);
    pw.add_term(zero, Rat(1));
    for (int k = 1; k <= trunc_; ++k) {
        pw = pw * w;
        if (pw.is_zero()) break;
        if (k % 2 == 1)
            acc = acc - pw;
        else
            acc = acc + pw;
    }
    for (auto& [e, c] : acc.terms_) c /= c0;
    return acc;
}

std::string TruncSeries::str() const {
    MPoly p(amb_);
    for (const auto& [e, c] : terms_) p.add_term(e, c);
    std::ostringstream out;
    out << p.str() << " + O(deg " << trunc_ + 1 << ")";
    return out.str();
}

} // namespace logbb
