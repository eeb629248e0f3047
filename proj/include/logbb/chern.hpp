#pragma once

#include "logbb/ideal.hpp"
#include "logbb/residues.hpp"

namespace logbb {

/// Presented graded intersection ring: generators with degrees, relation
/// polynomials, and a declared top-degree integration monomial.
struct PresentedRingSpec {
    std::vector<std::string> generators;
    std::vector<int> degrees;
    std::vector<std::string> relations; // over the generators
    std::string integral_monomial;
    Rat integral_value = Rat(1);
};

/// Graded commutative ring with an integration functional. Two backends:
/// P^n (dense coefficients of h^0..h^n) and Presented (Groebner normal
/// forms in the relation ideal).
class CohomologyRing {
public:
    static CohomologyRing projective(int n);
    static CohomologyRing presented(const PresentedRingSpec& spec);

    bool is_projective() const { return projective_n_ >= 0; }
    int top_degree() const { return top_; }
    const AmbientPtr& ambient() const { return amb_; }

    /// Element in normal form with all terms of degree <= top.
    MPoly reduce(const MPoly& x) const;
    MPoly parse(std::string_view text) const;
    int weighted_degree(const Expo& e) const;
    /// Degree-d graded piece of a (reduced) element.
    MPoly graded_piece(const MPoly& x, int d) const;
    /// Integration functional; vanishes outside the top degree.
    Rat integrate(const MPoly& x) const;

private:
    int projective_n_ = -1;
    AmbientPtr amb_;
    std::vector<int> degrees_;
    int top_ = 0;
    std::optional<GroebnerData> nf_; // presented backend
    Expo integral_expo_;
    Rat integral_value_ = Rat(1);
};

/// Total Chern class c_0 + c_1 + ... + c_top with c_0 = 1, each piece a
/// reduced ring element of pure degree.
struct TotalClass {
    std::vector<MPoly> c; // index = degree, size top+1

    static TotalClass one(const CohomologyRing& R);
    /// 1 + x for a degree-1 element (line bundle first class).
    static TotalClass line(const CohomologyRing& R, const MPoly& c1);
};

TotalClass total_mul(const CohomologyRing& R, const TotalClass& a,
                     const TotalClass& b);
/// Formal inverse of a total class, truncated at the top degree.
TotalClass total_inverse(const CohomologyRing& R, const TotalClass& a);

/// c(T_Pn(-log D)) for D a normal-crossing union of smooth hypersurfaces of
/// the given degrees: dualized c(Omega^1) * prod_i c(O_{D_i}).
TotalClass total_chern_log_pn(const CohomologyRing& R,
                              const std::vector<int>& component_degrees);

/// integral of phi(E - F): virtual total class c(E) * c(F)^{-1}, Chern roots
/// substituted into phi, integrated.
Rat virtual_phi(const PhiSpec& phi, const TotalClass& E, const TotalClass& F,
                const CohomologyRing& R);

/// c2 of the log tangent bundle on a surface: c2(TX) + K.D + D^2.
Rat log_chern_surface(const Rat& c2TX, const Rat& KdotD, const Rat& D2);

struct PoincareVerdict {
    int n = 0;
    long deg_D = 0;
    long deg_F = 0;
    Rat total;
    bool n_odd = false;
    bool hypothesis_met = false; // n odd and total >= 0
    bool bound_holds = false;    // deg D <= deg F + n
    bool boundary = false;       // equality with total zero
    std::string text;
};

/// Degree-bound verdict from the total log residue of c1^n.
PoincareVerdict poincare_bound_check(int n, long deg_D, long deg_F,
                                     const Rat& res_log_c1n_total);

} // namespace logbb
