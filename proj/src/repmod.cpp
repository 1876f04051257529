#include "liecomp/repmod.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "internal/echelon.hpp"

namespace liecomp {

namespace {

template <class S>
class SparseOp {
public:
    explicit SparseOp(const Mat<S>& a) : rows_(a.rows()), cols_(static_cast<std::size_t>(a.cols())) {
        for (Index j = 0; j < a.cols(); ++j)
            for (Index i = 0; i < a.rows(); ++i)
                if (!is_zero(a(i, j))) cols_[static_cast<std::size_t>(j)].emplace_back(i, a(i, j));
    }

    Vec<S> apply(const Vec<S>& v) const {
        Vec<S> out = Vec<S>::Zero(rows_);
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            const S& c = v(static_cast<Index>(j));
            if (is_zero(c)) continue;
            for (const auto& [i, a] : cols_[j]) out(i) += a * c;
        }
        return out;
    }

private:
    Index rows_;
    std::vector<std::vector<std::pair<Index, S>>> cols_;
};

// raw[k] = ops[gen[k]] raw[parent[k]], or a seed when parent[k] < 0.
template <class S>
struct SpinTrace {
    std::vector<Vec<S>> raw;
    std::vector<int> parent;
    std::vector<int> gen;
    detail::EchelonBuilder<S> echelon;
};

template <class S>
class Spinner {
public:
    Spinner(const std::vector<Mat<S>>& actions, Index n) : n_(n) {
        for (const auto& a : actions) ops_.emplace_back(a);
    }

    SpinTrace<S> run(const std::vector<Vec<S>>& seeds) const {
        SpinTrace<S> t{{}, {}, {}, detail::EchelonBuilder<S>(n_)};
        for (const auto& s : seeds)
            if (t.echelon.add(s)) {
                t.raw.push_back(s);
                t.parent.push_back(-1);
                t.gen.push_back(-1);
            }
        for (std::size_t k = 0; k < t.raw.size() && t.echelon.dim() < n_; ++k)
            for (std::size_t g = 0; g < ops_.size() && t.echelon.dim() < n_; ++g) {
                Vec<S> w = ops_[g].apply(t.raw[k]);
                if (t.echelon.add(w)) {
                    t.raw.push_back(std::move(w));
                    t.parent.push_back(static_cast<int>(k));
                    t.gen.push_back(static_cast<int>(g));
                }
            }
        return t;
    }

    Index dim_of(const std::vector<Vec<S>>& seeds) const { return run(seeds).echelon.dim(); }
    Subspace<S> span_of(const std::vector<Vec<S>>& seeds) const { return run(seeds).echelon.space(); }

private:
    Index n_;
    std::vector<SparseOp<S>> ops_;
};

template <class S>
Vec<S> unit_vector(Index n, Index i) {
    Vec<S> v = Vec<S>::Zero(n);
    v(i) = S(1);
    return v;
}

std::uint64_t projective_count(std::uint64_t q, Index k, std::uint64_t cap) {
    // (q^k - 1)/(q - 1), saturating just above cap.
    std::uint64_t total = 0, power = 1;
    for (Index i = 0; i < k; ++i) {
        total += power;
        if (total > cap) return cap + 1;
        if (power > cap) power = cap + 1;
        else power *= q;
    }
    return total;
}

// Calls fn(c) for one representative c (leading entry 1) of every
// 1-dimensional subspace of F^k; stops when fn returns false.
template <class S, class Fn>
void for_each_point(Index k, Fn&& fn) {
    const std::vector<S> elems = FieldTraits<S>::elements();
    const std::size_t q = elems.size();
    for (Index lead = 0; lead < k; ++lead) {
        const Index tail = k - 1 - lead;
        std::vector<std::size_t> digit(static_cast<std::size_t>(tail), 0);
        while (true) {
            Vec<S> c = Vec<S>::Zero(k);
            c(lead) = S(1);
            for (Index t = 0; t < tail; ++t) c(lead + 1 + t) = elems[digit[static_cast<std::size_t>(t)]];
            if (!fn(c)) return;
            Index pos = 0;
            while (pos < tail && ++digit[static_cast<std::size_t>(pos)] == q) digit[static_cast<std::size_t>(pos++)] = 0;
            if (pos == tail) break;
        }
    }
}

template <class S>
std::string subspace_key(const Subspace<S>& u) {
    std::ostringstream os;
    os << u.dim() << ':';
    for (Index i = 0; i < u.dim(); ++i)
        for (Index j = 0; j < u.ambient_dim(); ++j) os << to_string(u.basis()(i, j)) << ',';
    return os.str();
}

template <class S>
Subspace<S> lift_from_sub(const Subspace<S>& u, const Subspace<S>& x) {
    if (x.dim() == 0) return Subspace<S>(u.ambient_dim());
    return Subspace<S>::span(Mat<S>(x.basis() * u.basis()));
}

template <class S>
Subspace<S> lift_from_quotient(const Subspace<S>& u, const Subspace<S>& y) {
    const auto free = u.free_columns();
    Mat<S> rows = Mat<S>::Zero(u.dim() + y.dim(), u.ambient_dim());
    rows.topRows(u.dim()) = u.basis();
    for (Index r = 0; r < y.dim(); ++r)
        for (std::size_t i = 0; i < free.size(); ++i) rows(u.dim() + r, free[i]) = y.basis()(r, static_cast<Index>(i));
    return Subspace<S>::span(rows);
}

template <class S>
Mat<S> random_element(const std::vector<Mat<S>>& gens, Index n, std::mt19937_64& rng) {
    Mat<S> a = Mat<S>::Zero(n, n);
    if (gens.empty()) return a;
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (const auto& g : gens) a += g * random_scalar<S>(rng);
    for (int t = 0; t < 2; ++t) a += sparse_product<S>(gens[pick(rng)], gens[pick(rng)]) * random_scalar<S>(rng);
    a += sparse_product<S>(sparse_product<S>(gens[pick(rng)], gens[pick(rng)]), gens[pick(rng)]) *
         random_scalar<S>(rng);
    return a;
}

template <class S>
Irreducibility<S> witness_result(Subspace<S> w, std::string method) {
    Irreducibility<S> r;
    r.verdict = Verdict::no;
    r.witness = std::move(w);
    r.method = std::move(method);
    return r;
}

template <class S>
Irreducibility<S> trivial_cases(const LieModule<S>& mod) {
    Irreducibility<S> r;
    if (mod.dim == 0) {
        r.verdict = Verdict::no;
        r.method = "zero module";
    } else if (mod.dim == 1) {
        r.verdict = Verdict::yes;
        r.method = "dimension 1";
    }
    return r;
}

// Keep the smallest witness; earlier ones win ties.
template <class S>
void consider(std::optional<Subspace<S>>& best, const Subspace<S>& s) {
    if (s.dim() == 0 || s.is_full()) return;
    if (!best || s.dim() < best->dim()) best = s;
}

template <class S>
Irreducibility<S> norton(const LieModule<S>& mod, std::uint64_t budget) {
    const Index n = mod.dim;
    const Spinner<S> spinner(mod.actions, n);
    const std::uint64_t q = FieldTraits<S>::current().order();

    std::optional<Subspace<S>> best;
    for (Index i = 0; i < std::min<Index>(n, 4); ++i) consider(best, spinner.span_of({unit_vector<S>(n, i)}));
    if (best) return witness_result(*best, "spin");

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n));
    const auto elems = FieldTraits<S>::elements();
    std::optional<Mat<S>> theta;
    Index nullity = 0;
    for (int attempt = 0; attempt < 24 && nullity != 1; ++attempt) {
        const Mat<S> a = random_element(mod.actions, n, rng);
        for (const S& lambda : elems) {
            Mat<S> t = a;
            for (Index i = 0; i < n; ++i) t(i, i) -= lambda;
            const Index k = n - rank<S>(t);
            if (k > 0 && (nullity == 0 || k < nullity)) {
                nullity = k;
                theta = std::move(t);
                if (k == 1) break;
            }
        }
    }
    if (!theta || projective_count(q, nullity, budget) > budget) return {};

    const Subspace<S> ker = kernel<S>(*theta);
    for_each_point<S>(ker.dim(), [&](const Vec<S>& c) {
        const Vec<S> v = ker.basis().transpose() * c;
        consider(best, spinner.span_of({v}));
        return true;
    });
    if (best) return witness_result(*best, "norton");

    const Subspace<S> coker = kernel<S>(Mat<S>(theta->transpose()));
    std::vector<Mat<S>> transposed;
    for (const auto& a : mod.actions) transposed.push_back(a.transpose());
    const Subspace<S> dual_spin = Spinner<S>(transposed, n).span_of({coker.vector(0)});
    if (!dual_spin.is_full()) return witness_result(annihilator(dual_spin), "norton (dual)");

    Irreducibility<S> r;
    r.verdict = Verdict::yes;
    r.method = "norton";
    return r;
}

template <class S>
std::vector<Mat<S>> action_mod_p(const std::vector<Mat<Rational>>& actions, bool& integral) {
    std::vector<Mat<S>> out;
    integral = true;
    for (const auto& a : actions) {
        Mat<S> b(a.rows(), a.cols());
        for (Index j = 0; j < a.cols(); ++j)
            for (Index i = 0; i < a.rows(); ++i) {
                const auto z = reduce_mod_p(a(i, j));
                if (!z) {
                    integral = false;
                    return {};
                }
                b(i, j) = *z;
            }
        out.push_back(std::move(b));
    }
    return out;
}

// Certify over GF(p) for primes p not dividing `avoid`; needs two successes.
Irreducibility<Rational> mod_p_only(const LieModule<Rational>& mod, std::uint64_t avoid, std::uint64_t budget) {
    std::vector<std::uint32_t> used;
    for (std::uint32_t p = 3; p < 200 && used.size() < 2; p += 2) {
        if (!is_prime(p) || (avoid != 0 && avoid % p == 0)) continue;
        FieldScope scope(FieldSpec::prime(p));
        bool integral = false;
        LieModule<Zp> red{mod.dim, mod.labels, action_mod_p<Zp>(mod.actions, integral)};
        if (!integral) continue;
        const auto r = norton(red, budget);
        if (r.verdict == Verdict::yes) used.push_back(p);
        if (used.empty() && p > 60) break;
    }
    Irreducibility<Rational> r;
    if (used.size() == 2) {
        r.verdict = Verdict::yes;
        r.method = "mod-p(" + std::to_string(used[0]) + "," + std::to_string(used[1]) + ")";
    } else {
        r.verdict = Verdict::refused;
        r.method = "mod-p inconclusive";
    }
    return r;
}

}  // namespace

template <class S>
LieModule<S> adjoint_module(const std::vector<Mat<S>>& elements, const Subspace<S>& ambient, Index m,
                            std::vector<std::string> labels) {
    LieModule<S> mod;
    mod.dim = ambient.dim();
    if (labels.empty())
        for (std::size_t i = 0; i < elements.size(); ++i) labels.push_back("x" + std::to_string(i + 1));
    mod.labels = std::move(labels);
    std::vector<Mat<S>> basis;
    for (Index j = 0; j < ambient.dim(); ++j) basis.push_back(unvec<S>(ambient.vector(j), m, m));
    for (const auto& x : elements) {
        Mat<S> act(mod.dim, mod.dim);
        for (Index j = 0; j < mod.dim; ++j) {
            const Vec<S> v = vec<S>(bracket<S>(x, basis[static_cast<std::size_t>(j)]));
            if (!all_zero<S>(ambient.reduce(v))) throw std::invalid_argument("adjoint_module: subspace is not invariant");
            act.col(j) = ambient.coordinates(v);
        }
        mod.actions.push_back(std::move(act));
    }
    return mod;
}

template <class S>
LieModule<S> adjoint_module(const MatLieAlg<S>& l, const Subspace<S>& ambient) {
    return adjoint_module(l.basis(), ambient, l.m);
}

template <class S>
LieModule<S> natural_module(const std::vector<Mat<S>>& elements, std::vector<std::string> labels) {
    LieModule<S> mod;
    mod.dim = elements.empty() ? 0 : elements.front().rows();
    if (labels.empty())
        for (std::size_t i = 0; i < elements.size(); ++i) labels.push_back("x" + std::to_string(i + 1));
    mod.labels = std::move(labels);
    mod.actions = elements;
    return mod;
}

template <class S>
LieModule<S> adjoint_module(const LieStructure<S>& l) {
    return LieModule<S>{l.dim(), l.names, l.ad};
}

template <class S>
bool is_invariant(const LieModule<S>& mod, const Subspace<S>& u) {
    for (const auto& a : mod.actions)
        for (Index i = 0; i < u.dim(); ++i)
            if (!u.contains(sparse_apply<S>(a, u.vector(i)))) return false;
    return true;
}

template <class S>
bool is_trivial(const LieModule<S>& mod) {
    return std::all_of(mod.actions.begin(), mod.actions.end(), [](const Mat<S>& a) { return all_zero<S>(a); });
}

template <class S>
LieModule<S> restrict_module(const LieModule<S>& mod, const Subspace<S>& u) {
    LieModule<S> out{u.dim(), mod.labels, {}};
    for (const auto& a : mod.actions) {
        Mat<S> act(u.dim(), u.dim());
        for (Index j = 0; j < u.dim(); ++j) {
            const Vec<S> w = sparse_apply<S>(a, u.vector(j));
            if (!u.contains(w)) throw std::invalid_argument("restrict_module: subspace is not invariant");
            act.col(j) = u.coordinates(w);
        }
        out.actions.push_back(std::move(act));
    }
    return out;
}

template <class S>
LieModule<S> quotient_module(const LieModule<S>& mod, const Subspace<S>& u) {
    const auto free = u.free_columns();
    const Index d = static_cast<Index>(free.size());
    LieModule<S> out{d, mod.labels, {}};
    for (const auto& a : mod.actions) {
        Mat<S> act(d, d);
        for (Index j = 0; j < d; ++j) act.col(j) = u.quotient_coordinates(a.col(free[static_cast<std::size_t>(j)]));
        out.actions.push_back(std::move(act));
    }
    return out;
}

template <class S>
LieModule<S> subquotient(const LieModule<S>& mod, const Subspace<S>& lower, const Subspace<S>& upper) {
    const LieModule<S> top = restrict_module(mod, upper);
    std::vector<Vec<S>> coords;
    for (Index i = 0; i < lower.dim(); ++i) {
        const Vec<S> v = lower.vector(i);
        if (!upper.contains(v)) throw std::invalid_argument("subquotient: lower is not contained in upper");
        coords.push_back(upper.coordinates(v));
    }
    return quotient_module(top, Subspace<S>::span(coords, upper.dim()));
}

template <class S>
Subspace<S> spin(const LieModule<S>& mod, const std::vector<Vec<S>>& seeds) {
    return Spinner<S>(mod.actions, mod.dim).span_of(seeds);
}

template <class S>
LieModule<S> dual_module(const LieModule<S>& mod) {
    LieModule<S> out{mod.dim, mod.labels, {}};
    for (const auto& a : mod.actions) out.actions.push_back(-a.transpose());
    return out;
}

template <class S>
Irreducibility<S> certify_irreducible_exhaustive(const LieModule<S>& mod, std::uint64_t budget) {
    if constexpr (!FieldTraits<S>::finite) {
        (void)mod;
        (void)budget;
        return {Verdict::refused, std::nullopt, "infinite field"};
    } else {
        auto r = trivial_cases(mod);
        if (r.verdict != Verdict::refused) return r;
        const std::uint64_t q = FieldTraits<S>::current().order();
        if (projective_count(q, mod.dim, budget) > budget) return {Verdict::budget_exceeded, std::nullopt, "exhaustive"};
        const Spinner<S> spinner(mod.actions, mod.dim);
        std::optional<Subspace<S>> best;
        for_each_point<S>(mod.dim, [&](const Vec<S>& v) {
            consider(best, spinner.span_of({v}));
            return !(best && best->dim() == 1);
        });
        if (best) return witness_result(*best, "exhaustive");
        return {Verdict::yes, std::nullopt, "exhaustive"};
    }
}

template <class S>
Irreducibility<S> certify_irreducible(const LieModule<S>& mod, std::uint64_t budget) {
    if constexpr (!FieldTraits<S>::finite) {
        (void)mod;
        (void)budget;
        return {Verdict::refused, std::nullopt, "infinite field"};
    } else {
        auto r = trivial_cases(mod);
        if (r.verdict != Verdict::refused) return r;
        r = norton(mod, budget);
        if (r.verdict != Verdict::refused) return r;
        return certify_irreducible_exhaustive(mod, budget);
    }
}

Irreducibility<Rational> certify_irreducible_mod_p(const LieModule<Rational>& mod, std::uint64_t avoid,
                                                   std::uint64_t budget) {
    auto r = trivial_cases(mod);
    if (r.verdict != Verdict::refused) return r;
    const Index n = mod.dim;
    const Spinner<Rational> spinner(mod.actions, n);
    std::optional<Subspace<Rational>> best;
    // A few cheap spins first; reduction mod p settles most irreducible cases.
    const Index quick = std::min<Index>(n, 3);
    for (Index i = 0; i < quick; ++i) consider(best, spinner.span_of({unit_vector<Rational>(n, i)}));
    if (best) return witness_result(*best, "spin");
    r = mod_p_only(mod, avoid, budget);
    if (r.verdict == Verdict::yes) return r;
    for (Index i = quick; i < n; ++i) consider(best, spinner.span_of({unit_vector<Rational>(n, i)}));
    const Index pair_limit = std::min<Index>(n, 12);
    for (Index i = 0; i < pair_limit && !best; ++i)
        for (Index j = i + 1; j < pair_limit; ++j) {
            Vec<Rational> v = unit_vector<Rational>(n, i);
            v(j) = Rational(1);
            consider(best, spinner.span_of({v}));
            v(j) = Rational(-1);
            consider(best, spinner.span_of({v}));
        }
    if (best) return witness_result(*best, "spin");
    return r;
}

template <class S>
std::optional<std::vector<Subspace<S>>> submodule_lattice(const LieModule<S>& mod, std::uint64_t budget) {
    if constexpr (!FieldTraits<S>::finite) {
        (void)mod;
        (void)budget;
        return std::nullopt;
    } else {
        const std::uint64_t q = FieldTraits<S>::current().order();
        if (projective_count(q, mod.dim, budget) > budget) return std::nullopt;
        const Spinner<S> spinner(mod.actions, mod.dim);
        std::map<std::string, Subspace<S>> found;
        const Subspace<S> zero(mod.dim);
        found.emplace(subspace_key(zero), zero);
        std::vector<Subspace<S>> cyclic;
        for_each_point<S>(mod.dim, [&](const Vec<S>& v) {
            Subspace<S> s = spinner.span_of({v});
            if (found.emplace(subspace_key(s), s).second) cyclic.push_back(s);
            return true;
        });
        // Every submodule is a sum of cyclic ones.
        std::vector<Subspace<S>> frontier = cyclic;
        while (!frontier.empty()) {
            std::vector<Subspace<S>> next;
            for (const auto& a : frontier)
                for (const auto& c : cyclic) {
                    Subspace<S> s = subspace_sum(a, c);
                    if (found.emplace(subspace_key(s), s).second) next.push_back(s);
                }
            frontier = std::move(next);
        }
        std::vector<std::pair<std::string, Subspace<S>>> items(found.begin(), found.end());
        std::stable_sort(items.begin(), items.end(),
                         [](const auto& x, const auto& y) { return x.second.dim() < y.second.dim(); });
        std::vector<Subspace<S>> out;
        for (auto& it : items) out.push_back(std::move(it.second));
        return out;
    }
}

namespace {

template <class S>
Irreducibility<S> certify_any(const LieModule<S>& mod, std::uint64_t budget, std::uint64_t avoid) {
    if constexpr (std::is_same_v<S, Rational>) {
        return certify_irreducible_mod_p(mod, avoid, budget);
    } else {
        (void)avoid;
        return certify_irreducible(mod, budget);
    }
}

// Chain from 0 to the whole module; methods[i] describes factor i.
template <class S>
void series_rec(const LieModule<S>& mod, std::uint64_t budget, std::uint64_t avoid, std::vector<Subspace<S>>& chain,
                std::vector<std::string>& methods, bool& certified) {
    chain.assign(1, Subspace<S>(mod.dim));
    methods.clear();
    if (mod.dim == 0) return;
    const auto r = certify_any(mod, budget, avoid);
    if (r.verdict != Verdict::no || !r.witness) {
        chain.push_back(Subspace<S>::full(mod.dim));
        methods.push_back(r.verdict == Verdict::yes ? r.method : to_string(r.verdict) + ": " + r.method);
        if (r.verdict != Verdict::yes) certified = false;
        return;
    }
    const Subspace<S>& u = *r.witness;
    std::vector<Subspace<S>> sub_chain, quo_chain;
    std::vector<std::string> sub_methods, quo_methods;
    series_rec(restrict_module(mod, u), budget, avoid, sub_chain, sub_methods, certified);
    series_rec(quotient_module(mod, u), budget, avoid, quo_chain, quo_methods, certified);
    chain.clear();
    for (const auto& x : sub_chain) chain.push_back(lift_from_sub(u, x));
    for (std::size_t i = 1; i < quo_chain.size(); ++i) chain.push_back(lift_from_quotient(u, quo_chain[i]));
    methods = sub_methods;
    methods.insert(methods.end(), quo_methods.begin(), quo_methods.end());
}

template <class S>
void fill_factors(const LieModule<S>& mod, CompSeries<S>& out) {
    out.factor_dims.clear();
    out.factor_trivial.clear();
    for (std::size_t i = 0; i + 1 < out.chain.size(); ++i) {
        out.factor_dims.push_back(out.chain[i + 1].dim() - out.chain[i].dim());
        out.factor_trivial.push_back(is_trivial(subquotient(mod, out.chain[i], out.chain[i + 1])));
    }
}

}  // namespace

template <class S>
CompSeries<S> composition_series(const LieModule<S>& mod, std::uint64_t budget, std::uint64_t avoid) {
    CompSeries<S> out;
    out.certified = true;
    series_rec(mod, budget, avoid, out.chain, out.methods, out.certified);
    fill_factors(mod, out);
    return out;
}

template <class S>
CompSeries<S> certify_series(const LieModule<S>& mod, const std::vector<Subspace<S>>& chain, std::uint64_t budget,
                             std::uint64_t avoid) {
    CompSeries<S> out;
    out.chain = chain;
    out.certified = false;
    if (chain.size() < 2 || !chain.front().is_zero_space() || !chain.back().is_full()) {
        out.methods.push_back("not a chain from 0 to the module");
        return out;
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].ambient_dim() != mod.dim || !is_invariant(mod, chain[i])) {
            out.methods.push_back("term " + std::to_string(i) + " is not a submodule");
            return out;
        }
        if (i > 0 && (chain[i].dim() <= chain[i - 1].dim() || !subspace_contains(chain[i], chain[i - 1]))) {
            out.methods.push_back("chain is not strictly increasing at term " + std::to_string(i));
            return out;
        }
    }
    fill_factors(mod, out);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const LieModule<S> f = subquotient(mod, chain[i], chain[i + 1]);
        if constexpr (std::is_same_v<S, Rational>) {
            auto r = trivial_cases(f);
            if (r.verdict == Verdict::refused) {
                r = certify_irreducible_mod_p(f, avoid, budget);
                if (r.verdict == Verdict::yes && r.method.rfind("mod-p", 0) == 0) r.method = "spin+" + r.method;
            }
            ok = ok && r.verdict == Verdict::yes;
            out.methods.push_back(r.verdict == Verdict::yes ? r.method : to_string(r.verdict) + ": " + r.method);
        } else {
            (void)avoid;
            const auto r = certify_irreducible(f, budget);
            ok = ok && r.verdict == Verdict::yes;
            out.methods.push_back(r.verdict == Verdict::yes ? r.method : to_string(r.verdict) + ": " + r.method);
        }
    }
    out.certified = ok;
    return out;
}

template <class S>
bool is_homomorphism(const LieModule<S>& m1, const LieModule<S>& m2, const Mat<S>& t) {
    if (m1.generator_count() != m2.generator_count() || t.rows() != m2.dim || t.cols() != m1.dim) return false;
    for (std::size_t g = 0; g < m1.actions.size(); ++g)
        if (sparse_product<S>(t, m1.actions[g]) != sparse_product<S>(m2.actions[g], t)) return false;
    return true;
}

namespace {

template <class S>
Subspace<S> hom_by_kron(const LieModule<S>& m1, const LieModule<S>& m2) {
    const Index n1 = m1.dim, n2 = m2.dim, n = n1 * n2;
    const std::size_t g = m1.actions.size();
    Mat<S> sys = Mat<S>::Zero(static_cast<Index>(g) * n, n);
    const Mat<S> i1 = identity<S>(n1), i2 = identity<S>(n2);
    for (std::size_t k = 0; k < g; ++k)
        sys.middleRows(static_cast<Index>(k) * n, n) =
            kron<S>(Mat<S>(m1.actions[k].transpose()), i2) - kron<S>(i1, m2.actions[k]);
    return kernel<S>(sys);
}

}  // namespace

template <class S>
Subspace<S> hom_space(const LieModule<S>& m1, const LieModule<S>& m2) {
    if (m1.generator_count() != m2.generator_count())
        throw std::invalid_argument("hom_space: modules have different generator counts");
    const Index n1 = m1.dim, n2 = m2.dim;
    if (n1 == 0 || n2 == 0) return Subspace<S>(n1 * n2);

    // If M1 = U(L) v, then T is determined by w = T v.
    const Spinner<S> spinner(m1.actions, n1);
    std::optional<SpinTrace<S>> trace;
    for (Index j = 0; j < n1 && !trace; ++j) {
        auto t = spinner.run({unit_vector<S>(n1, j)});
        if (t.echelon.dim() == n1) trace = std::move(t);
    }
    if (!trace) return hom_by_kron(m1, m2);

    Mat<S> b(n1, n1);
    for (Index k = 0; k < n1; ++k) b.col(k) = trace->raw[static_cast<std::size_t>(k)];
    const Mat<S> binv = *invert<S>(b);
    const std::size_t g = m1.actions.size();
    std::vector<Mat<S>> coeffs;  // column k: coordinates of A1_x b_k
    for (std::size_t x = 0; x < g; ++x) coeffs.push_back(sparse_product<S>(binv, sparse_product<S>(m1.actions[x], b)));

    // Unknown w = T v ranges over the column span of basis; wk[k] = W_k basis.
    Mat<S> basis = identity<S>(n2);
    std::vector<Mat<S>> wk(static_cast<std::size_t>(n1));
    auto refresh = [&] {
        for (std::size_t k = 0; k < wk.size(); ++k)
            wk[k] = trace->parent[k] < 0
                        ? basis
                        : sparse_product<S>(m2.actions[static_cast<std::size_t>(trace->gen[k])],
                                            wk[static_cast<std::size_t>(trace->parent[k])]);
    };
    refresh();
    for (std::size_t x = 0; x < g && basis.cols() > 0; ++x)
        for (Index k = 0; k < n1 && basis.cols() > 0; ++k) {
            Mat<S> r = -sparse_product<S>(m2.actions[x], wk[static_cast<std::size_t>(k)]);
            for (Index l = 0; l < n1; ++l)
                if (!is_zero(coeffs[x](l, k))) r += wk[static_cast<std::size_t>(l)] * coeffs[x](l, k);
            if (all_zero<S>(r)) continue;
            const Subspace<S> ker = kernel<S>(r);
            if (ker.dim() == basis.cols()) continue;
            Mat<S> kb(basis.cols(), ker.dim());
            for (Index i = 0; i < ker.dim(); ++i) kb.col(i) = ker.vector(i);
            basis = sparse_product<S>(basis, kb);
            refresh();
        }
    std::vector<Vec<S>> homs;
    for (Index i = 0; i < basis.cols(); ++i) {
        Mat<S> img(n2, n1);
        for (Index k = 0; k < n1; ++k) img.col(k) = wk[static_cast<std::size_t>(k)].col(i);
        const Mat<S> t = img * binv;
        if (!is_homomorphism(m1, m2, t)) throw std::logic_error("hom_space: solution fails to intertwine");
        homs.push_back(vec<S>(t));
    }
    return Subspace<S>::span(homs, n1 * n2);
}

template <class S>
std::vector<Weight<S>> weights(const std::vector<Mat<S>>& h) {
    std::vector<Weight<S>> out;
    if (h.empty()) return out;
    const Index n = h.front().rows();
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j)
            if (h[i] * h[j] != h[j] * h[i]) throw std::invalid_argument("weights: operators do not commute");

    auto candidates = [&](const Mat<S>& a) {
        std::vector<S> c;
        if constexpr (FieldTraits<S>::finite) {
            (void)a;
            c = FieldTraits<S>::elements();
        } else {
            mpq_class bound = 0;
            for (Index i = 0; i < a.rows(); ++i) {
                mpq_class row = 0;
                for (Index j = 0; j < a.cols(); ++j) row += abs(a(i, j).value());
                if (row > bound) bound = row;
            }
            mpz_class b = bound.get_num() / bound.get_den() + 1;
            for (mpz_class x = -b; x <= b; ++x) c.push_back(Rational(mpq_class(x)));
        }
        return c;
    };

    struct Partial {
        std::vector<S> values;
        Mat<S> basis;  // rows
    };
    std::vector<Partial> parts{{{}, identity<S>(n)}};
    for (const auto& a : h) {
        const auto cand = candidates(a);
        std::vector<Partial> next;
        for (const auto& part : parts) {
            const Mat<S> bt = part.basis.transpose();
            const Mat<S> image = a * bt;
            for (const S& lambda : cand) {
                const Subspace<S> coeff = kernel<S>(Mat<S>(image - bt * lambda));
                if (coeff.dim() == 0) continue;
                Partial p{part.values, Mat<S>(coeff.basis() * part.basis)};
                p.values.push_back(lambda);
                next.push_back(std::move(p));
            }
        }
        parts = std::move(next);
    }
    for (auto& p : parts) {
        Weight<S> w;
        w.values = p.values;
        w.space = Subspace<S>::span(p.basis);
        w.multiplicity = w.space.dim();
        out.push_back(std::move(w));
    }
    return out;
}

#define LIECOMP_INSTANTIATE_REPMOD(S)                                                                            \
    template LieModule<S> adjoint_module<S>(const std::vector<Mat<S>>&, const Subspace<S>&, Index,               \
                                            std::vector<std::string>);                                           \
    template LieModule<S> adjoint_module<S>(const MatLieAlg<S>&, const Subspace<S>&);                            \
    template LieModule<S> natural_module<S>(const std::vector<Mat<S>>&, std::vector<std::string>);               \
    template LieModule<S> adjoint_module<S>(const LieStructure<S>&);                                             \
    template bool is_invariant<S>(const LieModule<S>&, const Subspace<S>&);                                      \
    template bool is_trivial<S>(const LieModule<S>&);                                                            \
    template LieModule<S> restrict_module<S>(const LieModule<S>&, const Subspace<S>&);                           \
    template LieModule<S> quotient_module<S>(const LieModule<S>&, const Subspace<S>&);                           \
    template LieModule<S> subquotient<S>(const LieModule<S>&, const Subspace<S>&, const Subspace<S>&);           \
    template Subspace<S> spin<S>(const LieModule<S>&, const std::vector<Vec<S>>&);                               \
    template LieModule<S> dual_module<S>(const LieModule<S>&);                                                   \
    template Irreducibility<S> certify_irreducible<S>(const LieModule<S>&, std::uint64_t);                       \
    template Irreducibility<S> certify_irreducible_exhaustive<S>(const LieModule<S>&, std::uint64_t);            \
    template std::optional<std::vector<Subspace<S>>> submodule_lattice<S>(const LieModule<S>&, std::uint64_t);   \
    template CompSeries<S> composition_series<S>(const LieModule<S>&, std::uint64_t, std::uint64_t);             \
    template CompSeries<S> certify_series<S>(const LieModule<S>&, const std::vector<Subspace<S>>&, std::uint64_t, \
                                             std::uint64_t);                                                     \
    template Subspace<S> hom_space<S>(const LieModule<S>&, const LieModule<S>&);                                 \
    template bool is_homomorphism<S>(const LieModule<S>&, const LieModule<S>&, const Mat<S>&);                   \
    template std::vector<Weight<S>> weights<S>(const std::vector<Mat<S>>&);

LIECOMP_INSTANTIATE_REPMOD(Rational)
LIECOMP_INSTANTIATE_REPMOD(Zp)
LIECOMP_INSTANTIATE_REPMOD(Fp2)

}  // namespace liecomp
