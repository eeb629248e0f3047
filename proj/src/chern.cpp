#include "logbb/chern.hpp"

#include "logbb/errors.hpp"
#include "logbb/parser.hpp"

#include <sstream>

namespace logbb {

namespace {

// standard monomials of a zero-dimensional leading-term set
std::vector<Expo> staircase(const std::vector<Expo>& lts, std::size_t n) {
    std::vector<int> bound(n, -1);
    for (const auto& lt : lts) {
        int var = -1;
        bool pure = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (lt[i] == 0) continue;
            if (var >= 0) {
                pure = false;
                break;
            }
            var = static_cast<int>(i);
        }
        if (pure && var >= 0)
            bound[var] = bound[var] < 0 ? lt[var] : std::min(bound[var], lt[var]);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] < 0)
            throw InconsistentPresentation(
                "relations do not cut out a finite-dimensional quotient");
    std::vector<Expo> out;
    Expo e(n, 0);
    for (;;) {
        bool standard = true;
        for (const auto& lt : lts)
            if (expo_divides(lt, e)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(e);
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

} // namespace

CohomologyRing CohomologyRing::projective(int n) {
    if (n < 1) throw InconsistentPresentation("projective ring needs n >= 1");
    CohomologyRing R;
    R.projective_n_ = n;
    R.amb_ = make_ambient({"h"});
    R.degrees_ = {1};
    R.top_ = n;
    R.integral_expo_ = {n};
    R.integral_value_ = Rat(1);
    return R;
}

CohomologyRing CohomologyRing::presented(const PresentedRingSpec& spec) {
    CohomologyRing R;
    if (spec.generators.empty())
        throw InconsistentPresentation("presented ring needs generators");
    if (spec.generators.size() != spec.degrees.size())
        throw InconsistentPresentation("one degree per generator required");
    for (int d : spec.degrees)
        if (d < 1)
            throw InconsistentPresentation("generator degrees must be positive");
    R.amb_ = make_ambient(spec.generators);
    R.degrees_ = spec.degrees;

    Ideal I{R.amb_, {}};
    for (const auto& rel : spec.relations) {
        auto p = parse_poly(rel, R.amb_);
        if (p.is_zero()) continue;
        int d = R.weighted_degree(p.terms().begin()->first);
        for (const auto& [e, c] : p.terms())
            if (R.weighted_degree(e) != d)
                throw InconsistentPresentation("relation is not graded: " + rel);
        I.gens.push_back(std::move(p));
    }
    if (I.gens.empty())
        throw InconsistentPresentation("at least one relation is required");
    R.nf_ = groebner(I);

    auto im = parse_poly(spec.integral_monomial, R.amb_);
    if (im.terms().size() != 1 || im.terms().begin()->second != 1)
        throw InconsistentPresentation("integral monomial must be monic");
    R.integral_expo_ = im.terms().begin()->first;
    R.integral_value_ = spec.integral_value;
    if (R.integral_value_ == 0)
        throw InconsistentPresentation("integral value must be nonzero");
    R.top_ = R.weighted_degree(R.integral_expo_);

    std::vector<Expo> lts;
    for (const auto& b : R.nf_->basis)
        lts.push_back(leading_term(b, R.nf_->order).first);
    for (const auto& lt : lts)
        if (expo_total_degree(lt) == 0)
            throw InconsistentPresentation("relations generate the unit ideal");
    auto standard = staircase(lts, R.amb_->arity());
    int found_at_top = 0;
    for (const auto& e : standard) {
        int d = R.weighted_degree(e);
        if (d > R.top_)
            throw InconsistentPresentation(
                "standard monomial above the declared top degree");
        if (d == R.top_) {
            ++found_at_top;
            if (e != R.integral_expo_)
                throw InconsistentPresentation(
                    "top degree is not spanned by the integral monomial");
        }
    }
    if (found_at_top != 1)
        throw InconsistentPresentation("top degree is not one-dimensional");
    return R;
}

MPoly CohomologyRing::reduce(const MPoly& x) const {
    if (!same_ambient(x.ambient(), amb_))
        throw AmbientMismatch("ring element over a different ambient");
    if (is_projective()) {
        MPoly r(amb_);
        for (const auto& [e, c] : x.terms())
            if (e[0] <= top_) r.add_term(e, c);
        return r;
    }
    return ::logbb::reduce(x, *nf_).normal_form;
}

MPoly CohomologyRing::parse(std::string_view text) const {
    return reduce(parse_poly(text, amb_));
}

int CohomologyRing::weighted_degree(const Expo& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * degrees_[i];
    return d;
}

MPoly CohomologyRing::graded_piece(const MPoly& x, int d) const {
    MPoly r(amb_);
    for (const auto& [e, c] : x.terms())
        if (weighted_degree(e) == d) r.add_term(e, c);
    return r;
}

Rat CohomologyRing::integrate(const MPoly& x) const {
    auto nf = reduce(x);
    return nf.coeff(integral_expo_) * integral_value_;
}

TotalClass TotalClass::one(const CohomologyRing& R) {
    TotalClass t;
    t.c.assign(R.top_degree() + 1, MPoly::zero(R.ambient()));
    t.c[0] = MPoly::constant(R.ambient(), Rat(1));
    return t;
}

TotalClass TotalClass::line(const CohomologyRing& R, const MPoly& c1) {
    TotalClass t = one(R);
    if (R.top_degree() >= 1) t.c[1] = R.reduce(c1);
    return t;
}

TotalClass total_mul(const CohomologyRing& R, const TotalClass& a,
                     const TotalClass& b) {
    int top = R.top_degree();
    TotalClass r;
    r.c.assign(top + 1, MPoly::zero(R.ambient()));
    for (int i = 0; i <= top; ++i)
        for (int j = 0; i + j <= top; ++j)
            r.c[i + j] += R.reduce(a.c[i] * b.c[j]);
    for (auto& p : r.c) p = R.reduce(p);
    return r;
}

TotalClass total_inverse(const CohomologyRing& R, const TotalClass& a) {
    if (a.c.empty() || a.c[0] != MPoly::constant(R.ambient(), Rat(1)))
        throw DegreeMismatch("total class must start with c_0 = 1");
    int top = R.top_degree();
    TotalClass v = TotalClass::one(R);
    for (int k = 1; k <= top; ++k) {
        MPoly acc(R.ambient());
        for (int i = 1; i <= k; ++i) acc += a.c[i] * v.c[k - i];
        v.c[k] = R.reduce(-acc);
    }
    return v;
}

TotalClass total_chern_log_pn(const CohomologyRing& R,
                              const std::vector<int>& component_degrees) {
    if (!R.is_projective())
        throw DegreeMismatch("log tangent product formula lives on P^n");
    int n = R.top_degree();
    auto h = MPoly::variable(R.ambient(), 0);

    // c(Omega^1) = (1 - h)^{n+1}
    TotalClass omega = TotalClass::one(R);
    TotalClass one_minus_h = TotalClass::line(R, -h);
    for (int i = 0; i < n + 1; ++i) omega = total_mul(R, omega, one_minus_h);
    // times c(O_{D_i}) = 1/(1 - d_i h) = sum_k d_i^k h^k
    for (int d : component_degrees) {
        TotalClass geo;
        geo.c.assign(n + 1, MPoly::zero(R.ambient()));
        for (int k = 0; k <= n; ++k)
            geo.c[k] = R.reduce(h.pow(k) * rat_ipow(d, k));
        omega = total_mul(R, omega, geo);
    }
    // dualize
    TotalClass tangent = omega;
    for (int i = 1; i <= n; i += 2) tangent.c[i] = -tangent.c[i];
    return tangent;
}

Rat virtual_phi(const PhiSpec& phi, const TotalClass& E, const TotalClass& F,
                const CohomologyRing& R) {
    if (phi.n() != R.top_degree())
        throw DegreeMismatch("phi weighted degree " + std::to_string(phi.n()) +
                             " does not match ring top degree " +
                             std::to_string(R.top_degree()));
    TotalClass V = total_mul(R, E, total_inverse(R, F));
    std::vector<MPoly> chern(V.c.begin() + 1, V.c.end());
    return R.integrate(phi.expr().compose(R.ambient(), chern));
}

Rat log_chern_surface(const Rat& c2TX, const Rat& KdotD, const Rat& D2) {
    return c2TX + KdotD + D2;
}

PoincareVerdict poincare_bound_check(int n, long deg_D, long deg_F,
                                     const Rat& res_log_c1n_total) {
    PoincareVerdict v;
    v.n = n;
    v.deg_D = deg_D;
    v.deg_F = deg_F;
    v.total = res_log_c1n_total;
    v.n_odd = (n % 2 != 0);
    v.hypothesis_met = v.n_odd && res_log_c1n_total >= 0;
    v.bound_holds = deg_D <= deg_F + n;
    v.boundary = v.bound_holds && deg_D == deg_F + n && res_log_c1n_total == 0;
    std::ostringstream out;
    if (!v.n_odd) {
        out << "not applicable: n = " << n << " is even";
    } else if (!v.hypothesis_met) {
        out << "hypothesis not met: total " << rat_str(v.total)
            << " < 0; no bound asserted";
    } else if (v.boundary) {
        out << "boundary case: " << deg_D << " = " << deg_F << " + " << n
            << " with total 0";
    } else if (v.bound_holds) {
        out << "bound satisfied: " << deg_D << " <= " << deg_F << " + " << n;
    } else {
        out << "BOUND VIOLATED: " << deg_D << " > " << deg_F << " + " << n
            << " despite total " << rat_str(v.total) << " >= 0";
    }
    v.text = out.str();
    return v;
}

} // namespace logbb
