#include "verify/runners.hpp"

namespace liecomp::vdetail {

namespace {

template <class S>
struct Diagonalized {
    Mat<S> p;           // P' A P = diag(d)
    std::vector<S> d;
    bool identity = false;
};

template <class S>
Diagonalized<S> diagonal_normalize(const Mat<S>& a) {
    const auto r = diagonalize_symmetric(a);
    Diagonalized<S> out{r.transform, {}, true};
    for (Index i = 0; i < a.rows(); ++i) {
        out.d.push_back(r.normal_form(i, i));
        out.identity = out.identity && r.normal_form(i, i) == S(1);
    }
    return out;
}

/// Proper nonzero submodules of `mod` (coordinates in `ambient`) versus the
/// expected list of matrices spans.
struct LatticeCheck {
    bool computed = false;
    bool present = false;  // every expected span is a submodule found by the search
    std::size_t proper = 0;
};

template <class S>
LatticeCheck check_lattice(const LieModule<S>& mod, const Subspace<S>& ambient,
                           const std::vector<std::vector<Mat<S>>>& expected, std::uint64_t budget) {
    LatticeCheck out;
    const auto lat = submodule_lattice(mod, budget);
    if (!lat) return out;
    out.computed = true;
    std::vector<Subspace<S>> proper;
    for (const auto& u : *lat)
        if (u.dim() > 0 && u.dim() < mod.dim) proper.push_back(u);
    out.proper = proper.size();
    out.present = true;
    for (const auto& mats : expected) {
        std::vector<Vec<S>> coords;
        for (const auto& x : mats) {
            const Vec<S> v = vec<S>(x);
            if (!ambient.contains(v)) {
                out.present = false;
                break;
            }
            coords.push_back(ambient.coordinates(v));
        }
        if (!out.present) break;
        const auto want = Subspace<S>::span(coords, mod.dim);
        out.present = std::any_of(proper.begin(), proper.end(), [&](const Subspace<S>& u) { return u == want; });
        if (!out.present) break;
    }
    return out;
}

template <class S>
void lattice_claims(ReportBuilder& rb, const std::string& names, const std::string& key, const LatticeCheck& c,
                    std::size_t expected) {
    rb.holds(names + " are submodules of M cap sl", key + "-present", c.computed && c.present, "submodule lattice");
    rb.eq("number of proper nonzero submodules of M cap sl", key + "-count", std::to_string(expected),
          c.computed ? std::to_string(c.proper) : std::string("budget exceeded"), "submodule lattice");
}

template <class S>
Mat<S> from_rows(Index m, std::initializer_list<S> entries) {
    Mat<S> x(m, m);
    auto it = entries.begin();
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j) x(i, j) = *it++;
    return x;
}

// The S + R splitting of L1 for D = I, m = 4 in characteristic 2.
template <class S>
void semidirect_claims(ReportBuilder& rb, const MatLieAlg<S>& l1, std::uint64_t budget) {
    const Index m = 4;
    auto a = [&](Index i, Index j) { return Mat<S>(unit_matrix<S>(m, i, j) + unit_matrix<S>(m, j, i)); };
    const std::vector<Mat<S>> f{a(0, 1), a(1, 2), a(0, 2)};
    const std::vector<Mat<S>> h{a(2, 3), a(0, 3), a(3, 1)};
    std::vector<Mat<S>> g;
    for (std::size_t i = 0; i < 3; ++i) g.push_back(f[i] + h[i]);
    const auto sa = matrix_span<S>(m, f), ra = matrix_span<S>(m, g);
    rb.holds("L1 = S + R as vector spaces", "m4-S-plus-R",
             sa.dim() == 3 && ra.dim() == 3 && subspace_sum(sa.space, ra.space) == l1.space &&
                 subspace_intersect(sa.space, ra.space).dim() == 0);
    rb.holds("S is a subalgebra", "m4-S-closed", is_bracket_closed(sa));
    const auto ss = is_simple(structure_constants(f), budget);
    rb.eq("S simple", "m4-S-simple", std::string("yes"), to_string(ss.verdict), ss.method);
    bool abelian = true;
    for (const auto& x : g)
        for (const auto& y : g) abelian = abelian && all_zero<S>(bracket<S>(x, y));
    rb.holds("R abelian", "m4-R-abelian", abelian);
    rb.holds("R ideal of L1", "m4-R-ideal", is_ideal(ra, l1));
    const auto rmod = adjoint_module(f, ra.space, m);
    const auto irr = certify_irreducible(rmod, budget);
    rb.eq("R irreducible S-module", "m4-R-irreducible", std::string("yes"), to_string(irr.verdict), irr.method);
    const Mat<S> c = bracket<S>(unit_matrix<S>(m, 0, 0), g[0]);
    rb.holds("[e11, g1] = f1 not in R", "m4-e11-g1", c == f[0] && !ra.contains(c));
}

}  // namespace

template <class S>
Report run_thm_1_2(const CaseSpec& spec) {
    if (characteristic<S>() != 2) throw HypothesisError("thm1.2 needs characteristic 2");
    const Mat<S> a = resolve_gram<S>(spec, FormNeed::symmetric);
    if (classify(a).alternating) throw HypothesisError("thm1.2 needs a non-alternating form");
    const Index m = a.rows();
    ReportBuilder rb("thm1.2", FieldTraits<S>::current(), m);
    const auto dn = diagonal_normalize(a);
    const Mat<S> dm = diagonal_gram<S>(dn.d);
    const auto l = skew_adjoint_algebra<S>(dm);
    rb.holds("L(A) = P L(D) P^-1", "basis-change", conjugate(skew_adjoint_algebra<S>(a), dn.p).space == l.space);
    const auto l1 = derived(l);
    const auto full = Subspace<S>::full(m * m);
    const auto gens = lie_generators(l);
    const auto glmod = adjoint_module(gens, full, m);

    rb.eq("dim L", "dim-L", binom2(m + 1), l.dim());
    rb.eq("dim L1", "dim-L1", binom2(m), l1.dim());
    if (m == 2) {
        rb.eq("dim L2", "m2-dim-L2", Index{0}, derived(l1).dim());
    }

    const auto cs = composition_series(glmod, spec.budget);
    rb.eq("composition factors", "factor-count", m + 2, static_cast<Index>(cs.length()), series_methods(cs));
    rb.holds("computed series certified", "series-certified", cs.certified, series_methods(cs));
    // For m = 2 the two outer factors are 1-dimensional but carry x -> tr(x), which is nonzero on L.
    rb.eq("trivial factors", "trivial-count", m, trivial_count(cs));

    std::mt19937_64 rng(static_cast<std::uint64_t>(m) * 104729);
    std::vector<Subspace<S>> chain{Subspace<S>(m * m), l1.space};
    for (auto& f : random_flag(l1.space, l.space, rng)) chain.push_back(f);
    chain.push_back(l.space);
    chain.push_back(full);
    const auto pc = certify_series(glmod, chain, spec.budget);
    rb.eq("stated chain factors", "chain-count", m + 2, static_cast<Index>(pc.length()));
    rb.holds("stated chain is a certified composition series", "chain-certified", pc.certified, series_methods(pc));
    rb.holds("L/L1 is trivial (insertions are free)", "insertions", is_trivial(subquotient(glmod, l1.space, l.space)));
    rb.ladder(chain_dims(chain));

    rb.holds("L = {d_i A_ij = d_j A_ji}", "form-L", weighted_symmetric_space(dn.d, false) == l.space);
    rb.holds("L1 = same with zero diagonal", "form-L1", weighted_symmetric_space(dn.d, true) == l1.space);

    const auto l1mod = adjoint_module(gens, l1.space, m);
    rb.holds("gl/L isomorphic to L1", "gl-mod-L", isomorphic(quotient_module(glmod, l.space), l1mod), "hom-space");
    if (m == 2) {
        bool by_trace = l1mod.dim == 1;
        for (std::size_t k = 0; k < gens.size() && by_trace; ++k)
            by_trace = l1mod.actions[k](0, 0) == trace_of<S>(gens[k]);
        rb.holds("L acts on L1 = Lambda^2 by the trace (m = 2)", "m2-L1-trace", by_trace);
    } else {
        rb.holds("L1 nontrivial module", "L1-nontrivial", !is_trivial(l1mod));
    }

    const auto ts = tensor_square<S>(dm, gens);
    rb.holds("Gamma is an isomorphism of modules", "gamma-iso",
             is_invertible<S>(ts.gamma) && is_homomorphism(ts.module, glmod, ts.gamma));
    rb.holds("Gamma(S^2) = L", "gamma-S2", image_of(ts.gamma, ts.sym) == l.space);
    rb.holds("Gamma(Lambda^2) = L1", "gamma-L2", image_of(ts.gamma, ts.alt) == l1.space);

    if (m == 3 || m >= 5) {
        const auto simple = simple_structure(structure_constants(l1.basis()), spec.budget, m);
        rb.eq("L1 simple", "L1-simple", std::string("yes"), to_string(simple.verdict), simple.method);
    }
    if (m == 4) {
        const auto irr = certify_irreducible(l1mod, spec.budget);
        rb.eq("L1 irreducible L-module", "m4-irreducible", std::string("yes"), to_string(irr.verdict), irr.method);
        const bool square = discriminant_is_square(classify(a));
        const auto simple = simple_structure(structure_constants(l1.basis()), spec.budget, m);
        rb.eq("L1 simple", "m4-L1-simple", yes_no(!square), to_string(simple.verdict), simple.method);
        if (dn.identity) semidirect_claims(rb, l1, spec.budget);
    }
    return rb.take();
}

template <class S>
Report run_thm_1_4(const CaseSpec& spec) {
    const std::uint32_t ell = characteristic<S>();
    if (ell == 2) throw HypothesisError("thm1.4 needs characteristic other than 2");
    const Mat<S> a = resolve_gram<S>(spec, FormNeed::symmetric);
    const Index m = a.rows();
    const bool divides = ell != 0 && m % ell == 0;
    const std::uint64_t avoid = 2 * static_cast<std::uint64_t>(m);
    ReportBuilder rb("thm1.4", FieldTraits<S>::current(), m);
    const auto dn = diagonal_normalize(a);
    const Mat<S> dm = diagonal_gram<S>(dn.d);
    const auto l = skew_adjoint_algebra<S>(dm);
    const auto mm = self_adjoint_module<S>(dm);
    rb.holds("L(A) = P L(D) P^-1", "basis-change", conjugate(skew_adjoint_algebra<S>(a), dn.p).space == l.space);
    const auto s = scalar_algebra<S>(m);
    const auto full = Subspace<S>::full(m * m);
    const auto m0 = traceless_part(mm.space, m);
    const auto gens = lie_generators(l);
    const auto glmod = adjoint_module(gens, full, m);
    const bool square = discriminant_is_square(classify(a));

    rb.eq("dim L", "dim-L", binom2(m), l.dim());
    rb.eq("dim M", "dim-M", binom2(m + 1), mm.dim());
    rb.holds("M = L^perp under the trace form", "M-perp", trace_orthogonal_complement(l.space, full, m) == mm.space);
    const auto wsym = weighted_symmetric_space(dn.d, false);
    rb.holds("M = {d_i A_ij = d_j A_ji}", "form-M", wsym == mm.space);
    rb.holds("M cap sl = same with tr(A) = 0", "form-M0", traceless_part(wsym, m) == m0);

    const auto ts = tensor_square<S>(dm, gens);
    rb.holds("Gamma is an isomorphism of modules", "gamma-iso",
             is_invertible<S>(ts.gamma) && is_homomorphism(ts.module, glmod, ts.gamma));
    rb.holds("Gamma(S^2) = M", "gamma-S2", image_of(ts.gamma, ts.sym) == mm.space);
    rb.holds("Gamma(Lambda^2) = L", "gamma-L2", image_of(ts.gamma, ts.alt) == l.space);
    rb.holds("Gamma(ker contraction on S^2) = M cap sl", "gamma-contraction",
             image_of(ts.gamma, subspace_intersect(ts.sym, kernel<S>(ts.omega))) == m0);

    if (!divides) {
        const bool orth = trace_orthogonal(l.space, m0, m) && trace_orthogonal(l.space, s.space, m) &&
                          trace_orthogonal(m0, s.space, m);
        const bool direct = l.dim() + m0.dim() + s.dim() == m * m &&
                            subspace_sum(subspace_sum(l.space, m0), s.space) == full;
        rb.holds("gl = L + (M cap sl) + s, pairwise orthogonal", "orthogonal-decomposition", orth && direct);
    }

    const auto m0mod = restrict_module(glmod, m0);
    if (m >= 4) {
        const auto factor = divides ? subquotient(glmod, s.space, m0) : m0mod;
        rb.eq(divides ? "dim (M cap sl)/s" : "dim M cap sl", "M0-dim",
              divides ? binom2(m + 1) - 2 : binom2(m + 1) - 1, factor.dim);
        const auto irr = certify(factor, spec.budget, avoid);
        rb.eq(divides ? "(M cap sl)/s irreducible" : "M cap sl irreducible", "M0-irreducible", std::string("yes"),
              to_string(irr.verdict), irr.method);
    } else if (m == 3) {
        if (ell != 3) {
            const auto irr = certify(m0mod, spec.budget, avoid);
            rb.eq("M cap sl irreducible (m = 3)", "m3-M0-irreducible", std::string("yes"), to_string(irr.verdict),
                  irr.method);
        } else if (const auto i = square_root(S(-1)); !i) {
            const auto irr = certify(subquotient(glmod, s.space, m0), spec.budget, avoid);
            rb.eq("(M cap sl)/s irreducible (m = 3, -1 not a square)", "m3-M0-quotient", std::string("yes"),
                  to_string(irr.verdict), irr.method);
        } else if (dn.identity && subspace_contains(m0, s.space)) {
            const S o(0), e(1), ii = *i;
            const Mat<S> id = identity<S>(3);
            const std::vector<Mat<S>> x{id, from_rows<S>(3, {o, o, o, o, e, ii, o, ii, -e}),
                                        from_rows<S>(3, {o, ii, -e, ii, o, o, -e, o, o})};
            const std::vector<Mat<S>> y{id, from_rows<S>(3, {o, o, o, o, -e, ii, o, ii, e}),
                                        from_rows<S>(3, {o, ii, e, ii, o, o, e, o, o})};
            lattice_claims<S>(rb, "X, Y and s", "m3-lattice", check_lattice(m0mod, m0, {x, y, {id}}, spec.budget), 3);
        }
    } else if (m == 2) {
        if (const auto i = square_root(S(-1)); !i) {
            const auto irr = certify(m0mod, spec.budget, avoid);
            rb.eq("M cap sl irreducible (m = 2, -1 not a square)", "m2-M0-irreducible", std::string("yes"),
                  to_string(irr.verdict), irr.method);
        } else if (dn.identity) {
            const S e(1), ii = *i;
            const Mat<S> x = from_rows<S>(2, {e, ii, ii, -e}), y = from_rows<S>(2, {-e, ii, ii, e});
            lattice_claims<S>(rb, "Fx and Fy", "m2-lattice", check_lattice(m0mod, m0, {{x}, {y}}, spec.budget), 2);
        }
    }

    if (m == 3 || m >= 5) {
        const auto simple = is_simple(l, spec.budget);
        rb.eq("L simple", "L-simple", std::string("yes"), to_string(simple.verdict), simple.method);
    } else if (m == 4) {
        const auto simple = is_simple(l, spec.budget);
        rb.eq("L simple (discriminant not a square)", "m4-L-simple", yes_no(!square), to_string(simple.verdict),
              simple.method);
        if (square) {
            // Ideal from a submodule witness of the adjoint module, then its orthogonal complement.
            const auto ad = adjoint_module(gens, l.space, m);
            const auto w = certify(ad, spec.budget, avoid);
            bool split = false;
            if (w.witness) {
                std::vector<Mat<S>> mats;
                for (Index k = 0; k < w.witness->dim(); ++k)
                    mats.push_back(unvec<S>(Vec<S>(l.space.basis().transpose() * w.witness->vector(k)), m, m));
                const auto i1 = matrix_span<S>(m, mats);
                const auto i2 = MatLieAlg<S>{m, trace_orthogonal_complement(i1.space, l.space, m), ""};
                bool commute = true;
                for (const auto& p : i1.basis())
                    for (const auto& q : i2.basis()) commute = commute && all_zero<S>(bracket<S>(p, q));
                split = i1.dim() == 3 && i2.dim() == 3 && is_ideal(i1, l) && is_ideal(i2, l) && commute &&
                        simple_structure(structure_constants(i1.basis()), spec.budget, m).verdict == Verdict::yes &&
                        simple_structure(structure_constants(i2.basis()), spec.budget, m).verdict == Verdict::yes;
            }
            rb.holds("L is a sum of two 3-dimensional simple ideals", "m4-L-split", split, w.method);
        }
    } else {
        rb.eq("dim L (m = 2)", "m2-dim-L", Index{1}, l.dim());
    }
    rb.holds("L isomorphic to gl/M", "L-gl-mod-M",
             isomorphic(adjoint_module(gens, l.space, m), quotient_module(glmod, mm.space)), "hom-space");

    if (m >= 4) {
        std::vector<Subspace<S>> chain{Subspace<S>(m * m)};
        if (divides) chain.push_back(s.space);
        chain.push_back(m0);
        chain.push_back(mm.space);
        chain.push_back(full);
        const std::vector<Index> dims = divides ? std::vector<Index>{1, binom2(m + 1) - 2, 1, binom2(m)}
                                                : std::vector<Index>{binom2(m + 1) - 1, 1, binom2(m)};
        const auto pc = certify_series(glmod, chain, spec.budget, avoid);
        rb.eq("series factor dimensions", "series-dims", join(dims), join(pc.factor_dims));
        rb.eq("series certified", "series-certified", !(m == 4 && square), pc.certified, series_methods(pc));
        rb.ladder(chain_dims(chain));
    }
    rb.holds("M/(M cap sl) trivial", "top-trivial", is_trivial(subquotient(glmod, m0, mm.space)));
    return rb.take();
}

#define LIECOMP_INSTANTIATE(S)                        \
    template Report run_thm_1_2<S>(const CaseSpec&); \
    template Report run_thm_1_4<S>(const CaseSpec&);
LIECOMP_INSTANTIATE(Rational)
LIECOMP_INSTANTIATE(Zp)
LIECOMP_INSTANTIATE(Fp2)

}  // namespace liecomp::vdetail
