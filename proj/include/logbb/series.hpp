#pragma once

#include "logbb/mpoly.hpp"

namespace logbb {

/// Multivariate power series truncated at a total-degree bound. Arithmetic is
/// closed under the truncation; terms beyond it are dropped eagerly.
class TruncSeries {
public:
    TruncSeries(AmbientPtr amb, int truncation);

    /// Poly coefficients up to the bound.
    static TruncSeries from_poly(const MPoly& p, int truncation);
    /// Taylor expansion of p at `point` (translate, then truncate).
    static TruncSeries from_poly_at(const MPoly& p, std::span<const Rat> point,
                                    int truncation);

    const AmbientPtr& ambient() const { return amb_; }
    int truncation() const { return trunc_; }
    Rat coeff(const Expo& e) const;
    Rat constant_term() const;
    bool is_zero() const { return terms_.empty(); }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;

    /// Multiplicative inverse up to the truncation. Throws NotAUnit when the
    /// constant term vanishes.
    TruncSeries inverse() const;

    std::string str() const;

private:
    AmbientPtr amb_;
    int trunc_;
    std::map<Expo, Rat, GrevlexGreater> terms_;

    void add_term(const Expo& e, const Rat& c);
};

} // namespace logbb
