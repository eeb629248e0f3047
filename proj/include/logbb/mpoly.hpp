#pragma once

#include "logbb/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace logbb {

/// Ordered list of variable names. Polynomials over the same ambient are
/// compatible; everything else throws AmbientMismatch.
struct Ambient {
    std::vector<std::string> vars;

    std::size_t arity() const { return vars.size(); }
    int index_of(std::string_view name) const; // -1 when absent
    bool operator==(const Ambient& o) const { return vars == o.vars; }
};

using AmbientPtr = std::shared_ptr<const Ambient>;

AmbientPtr make_ambient(std::vector<std::string> names);
/// x1..xn
AmbientPtr make_ambient_xn(int n);
bool same_ambient(const AmbientPtr& a, const AmbientPtr& b);

/// Exponent vector; length equals the ambient arity.
using Expo = std::vector<int>;

int expo_total_degree(const Expo& e);
bool expo_divides(const Expo& a, const Expo& b); // a | b componentwise
Expo expo_add(const Expo& a, const Expo& b);
Expo expo_sub(const Expo& a, const Expo& b); // caller guarantees b | a

/// a > b in graded reverse lexicographic order.
bool grevlex_greater(const Expo& a, const Expo& b);
/// a > b in lexicographic order.
bool lex_greater(const Expo& a, const Expo& b);

/// Map comparator placing the grevlex-largest exponent first.
struct GrevlexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        return grevlex_greater(a, b);
    }
};

/// Monomial orders used by the Groebner engine. ElimFirst(k) is the block
/// order eliminating the first k variables.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, ElimFirst };
    Kind kind = Kind::Grevlex;
    int block = 0;

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder elim_first(int k) { return {Kind::ElimFirst, k}; }

    bool greater(const Expo& a, const Expo& b) const;
    std::string tag() const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are stored grevlex-descending with no zero coefficients.
class MPoly {
public:
    using Terms = std::map<Expo, Rat, GrevlexGreater>;

    MPoly() = default; // zero over the empty ambient; assign before use
    explicit MPoly(AmbientPtr amb) : amb_(std::move(amb)) {}

    static MPoly zero(AmbientPtr amb) { return MPoly(std::move(amb)); }
    static MPoly constant(AmbientPtr amb, const Rat& c);
    static MPoly variable(AmbientPtr amb, int i);
    static MPoly monomial(AmbientPtr amb, Expo e, const Rat& c);

    const AmbientPtr& ambient() const { return amb_; }
    std::size_t arity() const { return amb_->arity(); }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // 0 for the zero polynomial
    int total_degree() const;   // -1 for the zero polynomial
    bool is_homogeneous(int* degree = nullptr) const;

    Rat coeff(const Expo& e) const;
    /// Grevlex-leading term; polynomial must be nonzero.
    const std::pair<const Expo, Rat>& leading() const { return *terms_.begin(); }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly operator*(const Rat& c) const;
    MPoly pow(unsigned e) const;

    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    /// Formal partial derivative with respect to variable `var`.
    MPoly derive(int var) const;
    Rat eval(std::span<const Rat> point) const;
    /// z_i -> z_i + p_i for all i.
    MPoly translate(std::span<const Rat> point) const;
    /// Sets one variable to a constant; the ambient is unchanged.
    MPoly substitute(int var, const Rat& value) const;
    /// Removes a variable that no term uses.
    MPoly drop_var(int var, AmbientPtr target) const;
    /// Substitutes images[i] (over `target`) for variable i.
    MPoly compose(AmbientPtr target, const std::vector<MPoly>& images) const;

    /// Canonical text form; parse_poly round-trips it.
    std::string str() const;

    /// Internal: inserts c at e, summing with any existing coefficient.
    void add_term(const Expo& e, const Rat& c);

private:
    AmbientPtr amb_;
    Terms terms_;
};

inline MPoly operator*(const Rat& c, const MPoly& p) { return p * c; }

/// Leading term under an arbitrary order (linear scan; p nonzero).
std::pair<Expo, Rat> leading_term(const MPoly& p, const MonomialOrder& ord);

/// Quotient f/g when g divides f exactly, nullopt otherwise. g nonzero.
std::optional<MPoly> try_divide_exact(const MPoly& f, const MPoly& g);

} // namespace logbb
