#include "verify/runners.hpp"

namespace liecomp::vdetail {

namespace {

// Normal form of an alternating Gram matrix: P' A P = J.
template <class S>
std::pair<Mat<S>, Mat<S>> symplectic_normalize(const Mat<S>& a) {
    const auto r = symplectic_basis(a);
    return {r.transform, r.normal_form};
}

template <class S>
Report thm_1_1_small(ReportBuilder& rb, const MatLieAlg<S>& l, std::uint64_t budget) {
    // m = 2: L is h(1) and gl(V) has four trivial factors.
    const Index m = 2;
    const auto series = derived_series(l);
    std::vector<Index> dims;
    for (const auto& t : series) dims.push_back(t.dim());
    rb.eq("derived series dimensions", "m2-derived", std::string("3,1,0"), join(dims));

    const auto gens = lie_generators(l);
    const auto glmod = adjoint_module(gens, Subspace<S>::full(m * m), m);
    const auto cs = composition_series(glmod, budget);
    rb.eq("composition factors", "m2-factor-count", Index{4}, static_cast<Index>(cs.length()), series_methods(cs));
    rb.eq("trivial composition factors", "m2-trivial", Index{4}, trivial_count(cs));
    rb.ladder(chain_dims(cs.chain));

    const Mat<S> u = unit_matrix<S>(2, 0, 1), v = unit_matrix<S>(2, 1, 0);
    const Mat<S> z = bracket<S>(u, v);
    const auto q = structure_constants<S>({u, v, z});
    Mat<S> map = identity<S>(3);
    rb.holds("L(f) isomorphic to h(1) by structure constants", "m2-heisenberg",
             l.contains(u) && l.contains(v) && lie_isomorphic_by_structure(q, heisenberg<S>(1), map));

    const auto natural = natural_module<S>({u, v, z});
    const auto poly = heisenberg_poly_module<S>(1, 2, S(1));
    const auto homs = hom_space(natural, poly);
    rb.holds("natural module isomorphic to F[X]/(X^2)", "m2-natural", has_isomorphism(homs, 2, 2), "hom-space");
    return rb.take();
}

}  // namespace

template <class S>
Report run_thm_1_1(const CaseSpec& spec) {
    if (FieldTraits<S>::current().characteristic != 2) throw HypothesisError("thm1.1 needs characteristic 2");
    const Mat<S> a = resolve_gram<S>(spec, FormNeed::alternating);
    const Index m = a.rows(), n = m / 2;
    ReportBuilder rb("thm1.1", FieldTraits<S>::current(), m);
    const auto [p, j] = symplectic_normalize(a);
    const auto l = skew_adjoint_algebra<S>(j);
    rb.holds("L(A) = P L(J) P^-1", "basis-change", conjugate(skew_adjoint_algebra<S>(a), p).space == l.space);
    if (m == 2) return thm_1_1_small(rb, l, spec.budget);

    const bool four = m % 4 == 0;
    const auto l1 = derived(l), l2 = derived(l1);
    const auto s = scalar_algebra<S>(m), sl = sl_algebra<S>(m);
    const auto full = Subspace<S>::full(m * m);
    const auto gens = lie_generators(l);
    const auto glmod = adjoint_module(gens, full, m);

    rb.eq("dim L", "dim-L", binom2(m + 1), l.dim());
    const Index big = four ? binom2(m) - 2 : binom2(m) - 1;

    // computed series
    const auto cs = composition_series(glmod, spec.budget);
    rb.eq("composition factors", "factor-count", four ? m + 6 : m + 4, static_cast<Index>(cs.length()),
          series_methods(cs));
    rb.holds("computed series certified", "series-certified", cs.certified, series_methods(cs));
    rb.eq("nontrivial factor dimensions", "nontrivial-dims", std::to_string(big), join(nontrivial_dims(cs)));
    rb.eq("trivial factors", "trivial-count", four ? m + 4 : m + 2, trivial_count(cs));

    // x = diag(I_n, 0)
    Mat<S> x = Mat<S>::Zero(m, m);
    for (Index i = 0; i < n; ++i) x(i, i) = S(1);
    bool normalizes = true;
    for (const auto& y : l.basis()) normalizes = normalizes && l.contains(bracket<S>(x, y));
    rb.holds("[x, L(f)] in L(f)", "x-normalizes", normalizes);
    rb.eq("x in sl(V)", "x-traceless", four, sl.contains(x));

    // predicted chain with m-1 random insertions between L1 and L
    std::mt19937_64 rng(static_cast<std::uint64_t>(m) * 7919);
    std::vector<Subspace<S>> chain{Subspace<S>(m * m)};
    if (four) chain.push_back(s.space);
    chain.push_back(l2.space);
    chain.push_back(l1.space);
    for (auto& f : random_flag(l1.space, l.space, rng)) chain.push_back(f);
    chain.push_back(l.space);
    const auto u = subspace_sum(l.space, span_of<S>({x}, m));
    if (four) chain.push_back(u);
    chain.push_back(sl.space);
    chain.push_back(full);
    const auto pc = certify_series(glmod, chain, spec.budget);
    rb.eq("stated chain factors", "chain-count", four ? m + 6 : m + 4, static_cast<Index>(pc.length()));
    rb.holds("stated chain is a certified composition series", "chain-certified", pc.certified, series_methods(pc));
    rb.holds("L/L1 is trivial (insertions are free)", "insertions",
             is_trivial(subquotient(glmod, l1.space, l.space)));
    rb.ladder(chain_dims(chain));

    // the nontrivial factors
    const auto low = four ? subquotient(glmod, s.space, l2.space) : restrict_module(glmod, l2.space);
    const auto high = subquotient(glmod, four ? u : l.space, sl.space);
    rb.eq(four ? "dim L2/s" : "dim L2", "low-dim", big, low.dim);
    rb.holds(four ? "L2/s isomorphic to sl/U" : "L2 isomorphic to sl/L", "low-high-iso", isomorphic(low, high),
             "hom-space");
    rb.eq("s in L2", "s-in-L2", four, subspace_contains(l2.space, s.space));

    const LieStructure<S> q = four ? quotient_algebra(l2, s).structure : structure_constants(l2.basis());
    const auto simple = simple_structure(q, spec.budget, m);
    rb.eq(four ? "L2/s simple" : "L2 simple", "simple", std::string(four && m == 4 ? "no" : "yes"),
          to_string(simple.verdict), simple.method);
    if (m == 4) {
        const auto irr = certify_irreducible(low, spec.budget);
        rb.eq("L2/s irreducible as L-module", "m4-irreducible", std::string("yes"), to_string(irr.verdict),
              irr.method);
    }

    // matrix descriptions
    const auto glb = gl_basis<S>(n), sym = symmetric_basis<S>(n), alt = alternating_basis<S>(n);
    rb.holds("L = [[A,B],[C,A']] with B,C symmetric", "form-L", block_form_space<S>(n, glb, sym, sym, S(1)) == l.space);
    rb.holds("L1 = same with B,C alternating", "form-L1", block_form_space<S>(n, glb, alt, alt, S(1)) == l1.space);
    rb.holds("L2 = same with tr(A) = 0", "form-L2",
             block_form_space<S>(n, sl_basis<S>(n), alt, alt, S(1)) == l2.space);

    // tensor square
    const auto ts = tensor_square<S>(j, gens);
    rb.holds("Gamma is an isomorphism of modules", "gamma-iso",
             is_invertible<S>(ts.gamma) && is_homomorphism(ts.module, glmod, ts.gamma));
    rb.holds("Gamma(S^2) = L", "gamma-S2", image_of(ts.gamma, ts.sym) == l.space);
    rb.holds("Gamma(Lambda^2) = L1", "gamma-L2", image_of(ts.gamma, ts.alt) == l1.space);
    rb.holds("Gamma(ker Delta) = L2", "gamma-ker-delta",
             ts.delta_kernel && image_of(ts.gamma, *ts.delta_kernel) == l2.space);

    // L/L2 and h(n)
    const Mat<S> zn = Mat<S>::Zero(n, n);
    std::vector<Mat<S>> reps{block2<S>(unit_matrix<S>(n, 0, 0), zn, zn, unit_matrix<S>(n, 0, 0))};
    for (Index i = 0; i < n; ++i) reps.push_back(block2<S>(zn, unit_matrix<S>(n, i, i), zn, zn));
    for (Index i = 0; i < n; ++i) reps.push_back(block2<S>(zn, zn, unit_matrix<S>(n, i, i), zn));
    const auto quo = quotient_algebra(l, l2, reps);
    Mat<S> map = Mat<S>::Zero(2 * n + 1, 2 * n + 1);
    map(2 * n, 0) = S(1);
    for (Index i = 0; i < 2 * n; ++i) map(i, i + 1) = S(1);
    rb.holds("L/L2 isomorphic to h(n)", "heisenberg-quotient",
             lie_isomorphic_by_structure(quo.structure, heisenberg<S>(n), map), "structure constants");
    return rb.take();
}

template <class S>
Report run_thm_1_3(const CaseSpec& spec) {
    const std::uint32_t ell = characteristic<S>();
    if (ell == 2) throw HypothesisError("thm1.3 needs characteristic other than 2");
    const Mat<S> a = resolve_gram<S>(spec, FormNeed::alternating);
    const Index m = a.rows(), n = m / 2;
    const bool divides = ell != 0 && m % ell == 0;
    const std::uint64_t avoid = 2 * static_cast<std::uint64_t>(m);
    ReportBuilder rb("thm1.3", FieldTraits<S>::current(), m);
    const auto [p, j] = symplectic_normalize(a);
    const auto l = skew_adjoint_algebra<S>(j);
    const auto mm = self_adjoint_module<S>(j);
    rb.holds("L(A) = P L(J) P^-1", "basis-change", conjugate(skew_adjoint_algebra<S>(a), p).space == l.space);
    const auto s = scalar_algebra<S>(m);
    const auto full = Subspace<S>::full(m * m);
    const auto m0 = traceless_part(mm.space, m);
    const auto gens = lie_generators(l);
    const auto glmod = adjoint_module(gens, full, m);

    rb.eq("dim L", "dim-L", binom2(m + 1), l.dim());
    rb.eq("dim M", "dim-M", binom2(m), mm.dim());
    rb.holds("M = L^perp under the trace form", "M-perp", trace_orthogonal_complement(l.space, full, m) == mm.space);

    const auto glb = gl_basis<S>(n), sym = symmetric_basis<S>(n), alt = alternating_basis<S>(n);
    rb.holds("M = [[A,B],[C,A']] with B,C skew-symmetric", "form-M",
             block_form_space<S>(n, glb, alt, alt, S(1)) == mm.space);
    rb.holds("M cap sl = same with tr(A) = 0", "form-M0", block_form_space<S>(n, sl_basis<S>(n), alt, alt, S(1)) == m0);
    rb.holds("L = [[A,B],[C,-A']] with B,C symmetric", "form-L",
             block_form_space<S>(n, glb, sym, sym, S(-1)) == l.space);

    const auto ts = tensor_square<S>(j, gens);
    rb.holds("Gamma is an isomorphism of modules", "gamma-iso",
             is_invertible<S>(ts.gamma) && is_homomorphism(ts.module, glmod, ts.gamma));
    rb.holds("Gamma(Lambda^2) = M", "gamma-L2", image_of(ts.gamma, ts.alt) == mm.space);
    rb.holds("Gamma(S^2) = L", "gamma-S2", image_of(ts.gamma, ts.sym) == l.space);
    rb.holds("Gamma(ker contraction on Lambda^2) = M cap sl", "gamma-contraction",
             image_of(ts.gamma, subspace_intersect(ts.alt, kernel<S>(ts.omega))) == m0);
    rb.holds("Omega = trace of Gamma", "omega-trace", [&] {
        for (Index c = 0; c < m * m; ++c)
            if (ts.omega(0, c) != trace_of<S>(unvec<S>(ts.gamma.col(c), m, m))) return false;
        return true;
    }());

    if (m > 2) {
        const auto factor = divides ? subquotient(glmod, s.space, m0) : restrict_module(glmod, m0);
        rb.eq(divides ? "dim (M cap sl)/s" : "dim M cap sl", "M0-dim", divides ? binom2(m) - 2 : binom2(m) - 1,
              factor.dim);
        const auto irr = certify(factor, spec.budget, avoid);
        rb.eq(divides ? "(M cap sl)/s irreducible" : "M cap sl irreducible", "M0-irreducible", std::string("yes"),
              to_string(irr.verdict), irr.method);
    }
    const auto simple = is_simple(l, spec.budget);
    rb.eq("L simple", "L-simple", std::string("yes"), to_string(simple.verdict), simple.method);
    rb.holds("L isomorphic to gl/M", "L-gl-mod-M",
             isomorphic(adjoint_module(gens, l.space, m), quotient_module(glmod, mm.space)), "hom-space");

    std::vector<Subspace<S>> chain{Subspace<S>(m * m)};
    std::vector<Index> dims;
    if (m == 2) {
        chain.push_back(mm.space);
        dims = {1, 3};
        rb.holds("M = s", "m2-M-scalar", mm.space == s.space);
    } else {
        if (divides) chain.push_back(s.space);
        chain.push_back(m0);
        chain.push_back(mm.space);
        dims = divides ? std::vector<Index>{1, binom2(m) - 2, 1, binom2(m + 1)}
                       : std::vector<Index>{binom2(m) - 1, 1, binom2(m + 1)};
    }
    chain.push_back(full);
    const auto pc = certify_series(glmod, chain, spec.budget, avoid);
    rb.eq("series factor dimensions", "series-dims", join(dims), join(pc.factor_dims));
    rb.holds("series certified", "series-certified", pc.certified, series_methods(pc));
    rb.holds("M/(M cap sl) trivial", "top-trivial", is_trivial(subquotient(glmod, m0, mm.space)));
    rb.ladder(chain_dims(chain));
    return rb.take();
}

#define LIECOMP_INSTANTIATE(S)                        \
    template Report run_thm_1_1<S>(const CaseSpec&); \
    template Report run_thm_1_3<S>(const CaseSpec&);
LIECOMP_INSTANTIATE(Rational)
LIECOMP_INSTANTIATE(Zp)
LIECOMP_INSTANTIATE(Fp2)

}  // namespace liecomp::vdetail
