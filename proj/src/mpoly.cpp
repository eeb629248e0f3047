#include "logbb/mpoly.hpp"

#include "logbb/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace logbb {

int Ambient::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

AmbientPtr make_ambient(std::vector<std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j])
                throw ValidationError("duplicate variable name: " + names[i]);
    auto a = std::make_shared<Ambient>();
    a->vars = std::move(names);
    return a;
}

AmbientPtr make_ambient_xn(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return make_ambient(std::move(names));
}

bool same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

static void require_same_ambient(const AmbientPtr& a, const AmbientPtr& b) {
    if (!same_ambient(a, b))
        throw AmbientMismatch("operands live over different variable lists");
}

int expo_total_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

bool expo_divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool grevlex_greater(const Expo& a, const Expo& b) {
    int da = expo_total_degree(a), db = expo_total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0;
    }
    return false;
}

bool lex_greater(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0;
    }
    return false;
}

static bool grevlex_greater_range(const Expo& a, const Expo& b, std::size_t lo,
                                  std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db;
    for (std::size_t i = hi; i-- > lo;) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0;
    }
    return false;
}

static bool range_equal(const Expo& a, const Expo& b, std::size_t lo,
                        std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool MonomialOrder::greater(const Expo& a, const Expo& b) const {
    switch (kind) {
    case Kind::Grevlex:
        return grevlex_greater(a, b);
    case Kind::Lex:
        return lex_greater(a, b);
    case Kind::ElimFirst: {
        auto k = static_cast<std::size_t>(block);
        if (!range_equal(a, b, 0, k)) return grevlex_greater_range(a, b, 0, k);
        return grevlex_greater_range(a, b, k, a.size());
    }
    }
    return false;
}

std::string MonomialOrder::tag() const {
    switch (kind) {
    case Kind::Grevlex:
        return "grevlex";
    case Kind::Lex:
        return "lex";
    case Kind::ElimFirst:
        return "elim" + std::to_string(block);
    }
    return "?";
}

MPoly MPoly::constant(AmbientPtr amb, const Rat& c) {
    MPoly p(std::move(amb));
    if (c != 0) p.terms_.emplace(Expo(p.arity(), 0), c);
    return p;
}

MPoly MPoly::variable(AmbientPtr amb, int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= amb->arity())
        throw IndexOutOfRange("variable index " + std::to_string(i));
    MPoly p(std::move(amb));
    Expo e(p.arity(), 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

MPoly MPoly::monomial(AmbientPtr amb, Expo e, const Rat& c) {
    if (e.size() != amb->arity())
        throw IndexOutOfRange("exponent vector length mismatch");
    MPoly p(std::move(amb));
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && expo_total_degree(terms_.begin()->first) == 0);
}

Rat MPoly::constant_value() const {
    Expo zero(arity(), 0);
    return coeff(zero);
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // grevlex-leading term has maximal total degree
    return expo_total_degree(terms_.begin()->first);
}

bool MPoly::is_homogeneous(int* degree) const {
    if (terms_.empty()) {
        if (degree) *degree = 0;
        return true;
    }
    int d = expo_total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (expo_total_degree(e) != d) return false;
    if (degree) *degree = d;
    return true;
}

Rat MPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(amb_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    require_same_ambient(amb_, o.amb_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    require_same_ambient(amb_, o.amb_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    require_same_ambient(amb_, o.amb_);
    MPoly r(amb_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) r.add_term(expo_add(ea, eb), ca * cb);
    return r;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly r(amb_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::constant(amb_, Rat(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    return same_ambient(amb_, o.amb_) && terms_ == o.terms_;
}

MPoly MPoly::derive(int var) const {
    if (var < 0 || static_cast<std::size_t>(var) >= arity())
        throw IndexOutOfRange("derive: variable index " + std::to_string(var));
    MPoly r(amb_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Expo d = e;
        d[var] -= 1;
        r.add_term(d, c * Rat(e[var]));
    }
    return r;
}

Rat MPoly::eval(std::span<const Rat> point) const {
    if (point.size() != arity())
        throw IndexOutOfRange("eval: point length mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= rat_pow(point[i], static_cast<unsigned long>(e[i]));
        acc += t;
    }
    return acc;
}

MPoly MPoly::translate(std::span<const Rat> point) const {
    if (point.size() != arity())
        throw IndexOutOfRange("translate: point length mismatch");
    // memoized powers of (z_i + p_i)
    std::vector<std::vector<MPoly>> powers(arity());
    auto power_of = [&](std::size_t i, int e) -> const MPoly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back(MPoly::constant(amb_, Rat(1)));
            cache.push_back(MPoly::variable(amb_, static_cast<int>(i)) +
                            MPoly::constant(amb_, point[i]));
        }
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };
    MPoly r(amb_);
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(amb_, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power_of(i, e[i]);
        r += t;
    }
    return r;
}

MPoly MPoly::substitute(int var, const Rat& value) const {
    if (var < 0 || static_cast<std::size_t>(var) >= arity())
        throw IndexOutOfRange("substitute: variable index");
    MPoly r(amb_);
    for (const auto& [e, c] : terms_) {
        Rat k = c;
        if (e[var] > 0) k *= rat_pow(value, static_cast<unsigned long>(e[var]));
        Expo d = e;
        d[var] = 0;
        r.add_term(d, k);
    }
    return r;
}

MPoly MPoly::drop_var(int var, AmbientPtr target) const {
    if (target->arity() + 1 != arity())
        throw AmbientMismatch("drop_var: target arity mismatch");
    MPoly r(std::move(target));
    for (const auto& [e, c] : terms_) {
        if (e[var] != 0)
            throw AmbientMismatch("drop_var: variable still occurs");
        Expo d;
        d.reserve(e.size() - 1);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var) d.push_back(e[i]);
        r.terms_.emplace(std::move(d), c);
    }
    return r;
}

MPoly MPoly::compose(AmbientPtr target, const std::vector<MPoly>& images) const {
    if (images.size() != arity())
        throw AmbientMismatch("compose: one image per variable required");
    for (const auto& im : images) require_same_ambient(im.ambient(), target);
    std::vector<std::vector<MPoly>> powers(arity());
    auto power_of = [&](std::size_t i, int e) -> const MPoly& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back(MPoly::constant(target, Rat(1)));
            cache.push_back(images[i]);
        }
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(cache.back() * cache[1]);
        return cache[e];
    };
    MPoly r(target);
    for (const auto& [e, c] : terms_) {
        MPoly t = MPoly::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power_of(i, e[i]);
        r += t;
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (sgn(a) < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (sgn(a) < 0 ? " - " : " + ");
            if (sgn(a) < 0) a = -a;
        }
        first = false;
        bool has_vars = expo_total_degree(e) > 0;
        if (!has_vars || a != 1) {
            out << rat_str(a);
            if (has_vars) out << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << amb_->vars[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

std::pair<Expo, Rat> leading_term(const MPoly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw std::logic_error("leading_term of zero polynomial");
    if (ord.kind == MonomialOrder::Kind::Grevlex)
        return {p.terms().begin()->first, p.terms().begin()->second};
    auto best = p.terms().begin();
    for (auto it = std::next(best); it != p.terms().end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

std::optional<MPoly> try_divide_exact(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (!same_ambient(f.ambient(), g.ambient()))
        throw AmbientMismatch("try_divide_exact: ambient mismatch");
    MPoly q(f.ambient());
    MPoly r = f;
    const auto& [ge, gc] = g.leading();
    while (!r.is_zero()) {
        const auto& [re, rc] = r.leading();
        if (!expo_divides(ge, re)) return std::nullopt;
        MPoly m = MPoly::monomial(f.ambient(), expo_sub(re, ge), rc / gc);
        q += m;
        r -= m * g;
    }
    return q;
}

} // namespace logbb
