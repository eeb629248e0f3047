#include "logbb/ideal.hpp"

#include "logbb/errors.hpp"

#include <algorithm>

namespace logbb {

namespace {

struct Entry {
    MPoly p;
    std::vector<MPoly> cof; // over original generators
    Expo lt;
    Rat lc;
};

Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool expo_coprime(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

struct Pair {
    std::size_t i, j; // i < j, indices into entries
    Expo lcm;
};

class Buchberger {
public:
    Buchberger(const Ideal& I, MonomialOrder order, const GbBudget& budget)
        : amb_(I.amb), ord_(order), budget_(budget), gens_(I.gens) {}

    GroebnerData run() {
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            if (gens_[g].is_zero()) continue;
            std::vector<MPoly> cof(gens_.size(), MPoly::zero(amb_));
            cof[g] = MPoly::constant(amb_, Rat(1));
            add_element(gens_[g], std::move(cof));
        }
        while (!pairs_.empty()) {
            auto it = std::min_element(
                pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                    int da = expo_total_degree(a.lcm), db = expo_total_degree(b.lcm);
                    if (da != db) return da < db;
                    return ord_.greater(b.lcm, a.lcm);
                });
            Pair pr = *it;
            pairs_.erase(it);
            process_pair(pr);
        }
        minimalize();
        interreduce();
        GroebnerData out{amb_, ord_, gens_, {}, {}};
        for (auto& e : entries_) {
            out.basis.push_back(std::move(e.p));
            out.cofactors.push_back(std::move(e.cof));
        }
        return out;
    }

    // Normal form of f against the current entries, accumulating the lift
    // over the original generators. Invariant: f_in = f + r + sum lift*gens.
    MPoly normal_form(MPoly f, std::vector<MPoly>& lift) {
        MPoly r(amb_);
        while (!f.is_zero()) {
            auto [le, lc] = leading_term(f, ord_);
            bool reduced = false;
            for (const auto& e : entries_) {
                if (!expo_divides(e.lt, le)) continue;
                tick();
                MPoly m = MPoly::monomial(amb_, expo_sub(le, e.lt), lc / e.lc);
                f -= m * e.p;
                for (std::size_t g = 0; g < lift.size(); ++g)
                    if (!e.cof[g].is_zero()) lift[g] += m * e.cof[g];
                reduced = true;
                break;
            }
            if (!reduced) {
                MPoly m = MPoly::monomial(amb_, le, lc);
                r += m;
                f -= m;
            }
        }
        return r;
    }

private:
    AmbientPtr amb_;
    MonomialOrder ord_;
    GbBudget budget_;
    std::vector<MPoly> gens_;
    std::vector<Entry> entries_;
    std::vector<Pair> pairs_;
    long steps_ = 0;

    void tick() {
        if (++steps_ > budget_.max_reductions)
            throw BudgetExceeded("Groebner reduction budget exhausted");
    }

    void add_element(MPoly p, std::vector<MPoly> cof) {
        std::vector<MPoly> lift(gens_.size(), MPoly::zero(amb_));
        MPoly nf = normal_form(std::move(p), lift);
        if (nf.is_zero()) return;
        for (std::size_t g = 0; g < cof.size(); ++g) cof[g] -= lift[g];
        auto [lt, lc] = leading_term(nf, ord_);
        install(Entry{std::move(nf), std::move(cof), std::move(lt), lc});
    }

    // Gebauer-Moller pair update on installing h.
    void install(Entry h) {
        std::size_t t = entries_.size();
        std::vector<Pair> cand;
        for (std::size_t i = 0; i < t; ++i)
            cand.push_back(Pair{i, t, expo_lcm(entries_[i].lt, h.lt)});

        std::vector<Pair> kept;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool dominated = false;
            for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
                if (a == b) continue;
                if (cand[b].lcm == cand[a].lcm) {
                    // keep the first of an equal-lcm class
                    if (b < a) dominated = true;
                } else if (expo_divides(cand[b].lcm, cand[a].lcm)) {
                    dominated = true;
                }
            }
            if (!dominated) kept.push_back(cand[a]);
        }
        std::erase_if(kept, [&](const Pair& pr) {
            return expo_coprime(entries_[pr.i].lt, h.lt);
        });

        std::erase_if(pairs_, [&](const Pair& pr) {
            if (!expo_divides(h.lt, pr.lcm)) return false;
            if (expo_lcm(entries_[pr.i].lt, h.lt) == pr.lcm) return false;
            if (expo_lcm(entries_[pr.j].lt, h.lt) == pr.lcm) return false;
            return true;
        });
        pairs_.insert(pairs_.end(), kept.begin(), kept.end());
        entries_.push_back(std::move(h));
    }

    void process_pair(const Pair& pr) {
        const Entry& a = entries_[pr.i];
        const Entry& b = entries_[pr.j];
        MPoly ma = MPoly::monomial(amb_, expo_sub(pr.lcm, a.lt), Rat(1) / a.lc);
        MPoly mb = MPoly::monomial(amb_, expo_sub(pr.lcm, b.lt), Rat(1) / b.lc);
        MPoly s = ma * a.p - mb * b.p;
        std::vector<MPoly> cof(gens_.size(), MPoly::zero(amb_));
        for (std::size_t g = 0; g < gens_.size(); ++g) {
            if (!a.cof[g].is_zero()) cof[g] += ma * a.cof[g];
            if (!b.cof[g].is_zero()) cof[g] -= mb * b.cof[g];
        }
        add_element(std::move(s), std::move(cof));
    }

    void minimalize() {
        std::vector<bool> redundant(entries_.size(), false);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            for (std::size_t j = 0; j < entries_.size() && !redundant[i]; ++j) {
                if (i == j || redundant[j]) continue;
                if (!expo_divides(entries_[j].lt, entries_[i].lt)) continue;
                if (entries_[j].lt == entries_[i].lt) {
                    if (j < i) redundant[i] = true;
                } else {
                    redundant[i] = true;
                }
            }
        }
        std::vector<Entry> kept;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!redundant[i]) kept.push_back(std::move(entries_[i]));
        entries_ = std::move(kept);
    }

    void interreduce() {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            Entry e = std::move(entries_[i]);
            std::vector<Entry> others;
            others.reserve(entries_.size() - 1);
            for (std::size_t j = 0; j < entries_.size(); ++j)
                if (j != i) others.push_back(entries_[j]);
            std::swap(entries_, others);
            std::vector<MPoly> lift(gens_.size(), MPoly::zero(amb_));
            MPoly nf = normal_form(std::move(e.p), lift);
            std::swap(entries_, others);
            for (std::size_t g = 0; g < gens_.size(); ++g) e.cof[g] -= lift[g];
            auto [lt, lc] = leading_term(nf, ord_);
            e.p = nf * (Rat(1) / lc);
            for (auto& c : e.cof) c = c * (Rat(1) / lc);
            e.lt = lt;
            e.lc = Rat(1);
            entries_[i] = std::move(e);
        }
    }
};

} // namespace

GroebnerData groebner(const Ideal& I, MonomialOrder order, const GbBudget& budget) {
    return Buchberger(I, order, budget).run();
}

Reduction reduce(const MPoly& f, const GroebnerData& G) {
    if (!same_ambient(f.ambient(), G.amb))
        throw AmbientMismatch("reduce: ambient mismatch");
    MPoly r(G.amb);
    MPoly rest = f;
    std::vector<MPoly> lift(G.gens.size(), MPoly::zero(G.amb));
    while (!rest.is_zero()) {
        auto [le, lc] = leading_term(rest, G.order);
        bool reduced = false;
        for (std::size_t k = 0; k < G.basis.size(); ++k) {
            auto [blt, blc] = leading_term(G.basis[k], G.order);
            if (!expo_divides(blt, le)) continue;
            MPoly m = MPoly::monomial(G.amb, expo_sub(le, blt), lc / blc);
            rest -= m * G.basis[k];
            for (std::size_t g = 0; g < lift.size(); ++g)
                if (!G.cofactors[k][g].is_zero()) lift[g] += m * G.cofactors[k][g];
            reduced = true;
            break;
        }
        if (!reduced) {
            MPoly m = MPoly::monomial(G.amb, le, lc);
            r += m;
            rest -= m;
        }
    }
    return Reduction{std::move(r), std::move(lift)};
}

std::optional<std::vector<MPoly>> member(const MPoly& f, const Ideal& I) {
    auto G = groebner(I);
    auto red = reduce(f, G);
    if (!red.normal_form.is_zero()) return std::nullopt;
    return red.lift;
}

namespace {

std::string fresh_name(const AmbientPtr& amb, std::string base) {
    while (amb->index_of(base) >= 0) base = "_" + base;
    return base;
}

MPoly embed_front(const MPoly& p, const AmbientPtr& ext) {
    MPoly r(ext);
    for (const auto& [e, c] : p.terms()) {
        Expo d(e.size() + 1, 0);
        std::copy(e.begin(), e.end(), d.begin() + 1);
        r.add_term(d, c);
    }
    return r;
}

} // namespace

Ideal saturate(const Ideal& I, const MPoly& s) {
    if (s.is_zero()) throw std::invalid_argument("saturate: s must be nonzero");
    std::vector<std::string> names{fresh_name(I.amb, "_t")};
    names.insert(names.end(), I.amb->vars.begin(), I.amb->vars.end());
    auto ext = make_ambient(std::move(names));

    Ideal J{ext, {}};
    for (const auto& g : I.gens)
        if (!g.is_zero()) J.gens.push_back(embed_front(g, ext));
    auto t = MPoly::variable(ext, 0);
    J.gens.push_back(MPoly::constant(ext, Rat(1)) - t * embed_front(s, ext));

    auto G = groebner(J, MonomialOrder::elim_first(1));
    Ideal out{I.amb, {}};
    for (const auto& b : G.basis) {
        bool has_t = false;
        for (const auto& [e, c] : b.terms())
            if (e[0] != 0) {
                has_t = true;
                break;
            }
        if (!has_t) out.gens.push_back(b.drop_var(0, I.amb));
    }
    if (out.gens.empty()) out.gens.push_back(MPoly::zero(I.amb));
    return out;
}

std::optional<long> quotient_dim(const Ideal& I) {
    auto n = I.amb->arity();
    auto G = groebner(I);
    if (G.basis.empty()) return n == 0 ? std::optional<long>(1) : std::nullopt;
    std::vector<Expo> lts;
    for (const auto& b : G.basis) lts.push_back(leading_term(b, G.order).first);
    for (const auto& lt : lts)
        if (expo_total_degree(lt) == 0) return 0; // unit ideal

    // zero-dimensionality: every variable has a pure-power head
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
        if (bound[i] < 0) return std::nullopt;

    // count standard monomials inside the pure-power box
    long count = 0;
    Expo e(n, 0);
    for (;;) {
        bool standard = true;
        for (const auto& lt : lts)
            if (expo_divides(lt, e)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

long local_multiplicity(const Ideal& I, std::span<const Rat> p, int cap) {
    if (p.size() != I.amb->arity())
        throw IndexOutOfRange("local_multiplicity: point length mismatch");
    Ideal J{I.amb, {}};
    for (const auto& g : I.gens)
        if (!g.is_zero()) J.gens.push_back(g.translate(p));

    auto n = I.amb->arity();
    long prev = -1;
    for (int k = 1; k <= cap; ++k) {
        Ideal K = J;
        // monomials of total degree exactly k
        Expo e(n, 0);
        e[0] = k;
        for (;;) {
            if (expo_total_degree(e) == k)
                K.gens.push_back(MPoly::monomial(I.amb, e, Rat(1)));
            // next composition
            std::size_t i = 0;
            while (i < n && e[i] == 0) ++i;
            if (i == n) break;
            if (i + 1 == n) break;
            int v = e[i];
            e[i] = 0;
            e[i + 1] += 1;
            e[0] = v - 1;
        }
        auto d = quotient_dim(K);
        if (!d) throw NotIsolated("quotient unexpectedly infinite");
        if (*d == prev) return *d;
        prev = *d;
    }
    throw NotIsolated("local dimension did not stabilize up to cap " +
                      std::to_string(cap));
}

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto amb = a.ambient();
    if (!same_ambient(amb, b.ambient()))
        throw AmbientMismatch("mpoly_gcd: ambient mismatch");
    auto monic = [](const MPoly& p) {
        return p * (Rat(1) / p.leading().second);
    };
    if (a.is_constant() || b.is_constant())
        return MPoly::constant(amb, Rat(1));

    // lcm through <t*a, (1-t)*b> ∩ Q[x]
    std::vector<std::string> names{fresh_name(amb, "_t")};
    names.insert(names.end(), amb->vars.begin(), amb->vars.end());
    auto ext = make_ambient(std::move(names));
    auto t = MPoly::variable(ext, 0);
    Ideal J{ext, {t * embed_front(a, ext),
                  (MPoly::constant(ext, Rat(1)) - t) * embed_front(b, ext)}};
    auto G = groebner(J, MonomialOrder::elim_first(1));
    std::vector<MPoly> tfree;
    for (const auto& g : G.basis) {
        bool has_t = false;
        for (const auto& [e, c] : g.terms())
            if (e[0] != 0) {
                has_t = true;
                break;
            }
        if (!has_t) tfree.push_back(g.drop_var(0, amb));
    }
    if (tfree.size() != 1)
        throw std::logic_error("principal intersection produced " +
                               std::to_string(tfree.size()) + " generators");
    auto q = try_divide_exact(a * b, tfree[0]);
    if (!q) throw std::logic_error("lcm does not divide the product");
    return monic(*q);
}

bool is_squarefree(const MPoly& f) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    MPoly g = f;
    for (std::size_t i = 0; i < f.arity(); ++i) {
        g = mpoly_gcd(g, f.derive(static_cast<int>(i)));
        if (g.is_constant()) return true;
    }
    return g.is_constant();
}

} // namespace logbb
