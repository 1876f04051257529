#include "verify/runners.hpp"

namespace liecomp::vdetail {

namespace {

/// Representation matrices of every basis element, flattened; rank = dim L iff faithful.
template <class S>
Index representation_rank(const std::vector<Mat<S>>& actions) {
    if (actions.empty()) return 0;
    const Index d = actions.front().rows();
    Mat<S> stack(static_cast<Index>(actions.size()), d * d);
    for (std::size_t k = 0; k < actions.size(); ++k) stack.row(static_cast<Index>(k)) = vec<S>(actions[k]).transpose();
    return rank<S>(stack);
}

template <class S>
bool preserves_form(const std::vector<Mat<S>>& actions, const Mat<S>& g) {
    for (const auto& x : actions)
        if (!all_zero<S>(Mat<S>(x.transpose() * g + g * x))) return false;
    return true;
}

/// Congruence to the identity when every diagonal entry of a diagonal form of G is a square.
template <class S>
void square_upgrade(ReportBuilder& rb, const Mat<S>& g, const std::string& what) {
    const auto r = diagonalize_symmetric(g);
    Mat<S> scale = Mat<S>::Zero(g.rows(), g.rows());
    for (Index i = 0; i < g.rows(); ++i) {
        const auto root = square_root(r.normal_form(i, i));
        if (!root || is_zero(*root)) return;
        scale(i, i) = inverse(*root);
    }
    const Mat<S> q = r.transform * scale;
    rb.holds("G congruent to the identity, so the image is " + what, "square-upgrade",
             q.transpose() * g * q == identity<S>(g.rows()), "diagonalize");
}

/// Column j: coordinates of the image of basis vector j under `f`, for maps between subspaces of vec(M_n).
template <class S, class F>
Mat<S> linear_map(const Subspace<S>& from, const Subspace<S>& to, Index n, F&& f) {
    Mat<S> out(to.dim(), from.dim());
    for (Index j = 0; j < from.dim(); ++j) {
        const Vec<S> v = vec<S>(f(unvec<S>(from.vector(j), n, n)));
        if (!to.contains(v)) throw std::logic_error("linear_map: image outside target");
        out.col(j) = to.coordinates(v);
    }
    return out;
}

template <class S>
bool in_hom_space(const Subspace<S>& homs, const Mat<S>& t) {
    return homs.contains(vec<S>(t));
}

}  // namespace

template <class S>
Report run_sl_series(const CaseSpec& spec) {
    const std::uint32_t ell = characteristic<S>();
    const Index m = spec.m;
    if (m < 2) throw HypothesisError("sl-series needs m >= 2");
    if (m == 2 && ell == 2) throw HypothesisError("sl-series excludes m = 2 in characteristic 2");
    const bool divides = ell != 0 && m % ell == 0;
    const std::uint64_t avoid = 2 * static_cast<std::uint64_t>(m);
    ReportBuilder rb("sl-series", FieldTraits<S>::current(), m);
    const auto sl = sl_algebra<S>(m);
    const auto s = scalar_algebra<S>(m);
    const auto full = Subspace<S>::full(m * m);
    const auto gens = lie_generators(sl);
    const auto glmod = adjoint_module(gens, full, m);

    std::vector<Subspace<S>> chain{Subspace<S>(m * m)};
    if (divides) chain.push_back(s.space);
    chain.push_back(sl.space);
    chain.push_back(full);
    const auto pc = certify_series(glmod, chain, spec.budget, avoid);
    const std::vector<Index> dims = divides ? std::vector<Index>{1, m * m - 2, 1} : std::vector<Index>{m * m - 1, 1};
    rb.eq("series factor dimensions", "series-dims", join(dims), join(pc.factor_dims));
    rb.holds("series certified", "series-certified", pc.certified, series_methods(pc));
    rb.ladder(chain_dims(chain));

    const auto cs = composition_series(glmod, spec.budget, avoid);
    std::vector<Index> got = cs.factor_dims, want = dims;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    rb.eq("computed factor dimensions (sorted)", "computed-dims", join(want), join(got), series_methods(cs));

    if (divides) {
        rb.holds("s is contained in sl", "s-in-sl", subspace_contains(sl.space, s.space));
        rb.holds("the series is the only composition series", "unique", is_uniserial(glmod, chain), "socle count");
        const auto slmod = restrict_module(glmod, sl.space);
        const auto s_in_sl = Subspace<S>::span(std::vector<Vec<S>>{sl.space.coordinates(vec<S>(identity<S>(m)))},
                                               sl.dim());
        rb.holds("s is the only proper nonzero ideal of sl", "only-ideal",
                 is_uniserial(slmod, {Subspace<S>(sl.dim()), s_in_sl, Subspace<S>::full(sl.dim())}), "socle count");
        const auto q = quotient_algebra(sl, s);
        const auto simple = simple_structure(q.structure, spec.budget, m);
        rb.eq("sl(" + std::to_string(m) + ")/s simple", "quotient-simple", std::string("yes"), to_string(simple.verdict), simple.method);
    } else {
        rb.holds("gl = sl + s", "direct-sum",
                 subspace_intersect(sl.space, s.space).dim() == 0 && sl.dim() + s.dim() == m * m);
        // gl = sl + s, so 0 < s < gl is a second composition series.
        const auto alt = certify_series(glmod, {Subspace<S>(m * m), s.space, full}, spec.budget, avoid);
        rb.holds("0 < s < gl is also a composition series", "second-series", alt.certified, series_methods(alt));
        const auto simple = simple_structure(structure_constants(sl.basis()), spec.budget, m);
        rb.eq("sl(" + std::to_string(m) + ") simple", "sl-simple", std::string("yes"), to_string(simple.verdict), simple.method);
    }
    return rb.take();
}

template <class S>
Report run_sp_so_embedding(const CaseSpec& spec) {
    const std::uint32_t ell = characteristic<S>();
    const Index n = spec.m, m = 2 * n;
    if (n < 2) throw HypothesisError("sp-so-embedding needs n >= 2");
    if (ell != 0 && (2 * n) % ell == 0) throw HypothesisError("sp-so-embedding needs the characteristic not to divide 2n");
    ReportBuilder rb("sp-so-embedding", FieldTraits<S>::current(), n);
    const Mat<S> j = symplectic_gram<S>(m);
    const auto l = skew_adjoint_algebra<S>(j);
    const auto mm = self_adjoint_module<S>(j);
    const auto s = scalar_algebra<S>(m);
    const auto m0 = traceless_part(mm.space, m);
    const auto full = Subspace<S>::full(m * m);
    const Index d = 2 * n * n - n - 1;

    const bool orth = trace_orthogonal(l.space, m0, m) && trace_orthogonal(l.space, s.space, m) &&
                      trace_orthogonal(m0, s.space, m);
    const bool direct = l.dim() + m0.dim() + s.dim() == m * m &&
                        subspace_sum(subspace_sum(l.space, m0), s.space) == full;
    rb.holds("gl = L + (M cap sl) + s, pairwise orthogonal", "decomposition", orth && direct);
    rb.eq("dim M cap sl", "dim-M0", d, m0.dim());

    const auto rep = adjoint_module(l.basis(), m0, m);
    const Index r = representation_rank(rep.actions);
    rb.eq("rank of the representation on M cap sl (faithful)", "faithful", l.dim(), r);

    std::vector<Mat<S>> m0basis;
    for (Index k = 0; k < m0.dim(); ++k) m0basis.push_back(unvec<S>(m0.vector(k), m, m));
    const Mat<S> g = trace_form_gram(m0basis);
    const auto cls = classify(g);
    rb.holds("G symmetric", "G-symmetric", cls.symmetric);
    rb.holds("G nondegenerate", "G-nondegenerate", cls.nondegenerate);
    rb.holds("G not alternating", "G-non-alternating", !cls.alternating);
    rb.holds("G invariant", "G-invariant", preserves_form(rep.actions, g));

    const auto lg = skew_adjoint_algebra<S>(g);
    rb.eq("dim L(G)", "dim-LG", binom2(d), lg.dim());
    bool inside = true;
    for (const auto& x : rep.actions) inside = inside && lg.contains(x);
    rb.holds("image inside L(G), injective", "injective", inside && r == l.dim());
    if (n == 2) rb.eq("image = L(G)", "n2-onto", lg.dim(), r);
    square_upgrade(rb, g, n == 2 ? "so(5)" : "so(" + std::to_string(d) + ")");
    return rb.take();
}

template <class S>
Report run_sl4_so6(const CaseSpec&) {
    if (characteristic<S>() == 2) throw HypothesisError("sl4-so6 needs characteristic other than 2");
    const Index n = 4;
    ReportBuilder rb("sl4-so6", FieldTraits<S>::current(), n);
    const auto sl = sl_algebra<S>(n);
    const auto gens = lie_generators(sl);
    const auto bm = block_modules<S>(n, gens);
    const Mat<S> h = linear_map(bm.t_space, bm.c_space, n, [](const Mat<S>& x) { return star_map<S>(x); });
    rb.holds("star map T -> C bijective", "star-bijective", is_invertible<S>(h));
    rb.holds("star map equivariant", "star-equivariant", is_homomorphism(bm.t, bm.c, h));
    rb.holds("star map in Hom(T, C)", "star-hom-space", in_hom_space(hom_space(bm.t, bm.c), h), "hom-space");

    std::vector<Mat<S>> tb;
    for (Index k = 0; k < bm.t_space.dim(); ++k) tb.push_back(unvec<S>(bm.t_space.vector(k), n, n));
    Mat<S> g(bm.t.dim, bm.t.dim);
    for (Index a = 0; a < bm.t.dim; ++a)
        for (Index b = 0; b < bm.t.dim; ++b)
            g(a, b) = trace_of<S>(Mat<S>(star_map<S>(tb[static_cast<std::size_t>(a)]) * tb[static_cast<std::size_t>(b)]));
    const auto cls = classify(g);
    rb.holds("g symmetric", "g-symmetric", cls.symmetric);
    rb.holds("g nondegenerate", "g-nondegenerate", cls.nondegenerate);

    const auto all = block_modules<S>(n, sl.basis());
    rb.holds("g invariant", "g-invariant", preserves_form(all.t.actions, g));
    const Index r = representation_rank(all.t.actions);
    const auto lg = skew_adjoint_algebra<S>(g);
    bool inside = true;
    for (const auto& x : all.t.actions) inside = inside && lg.contains(x);
    rb.eq("rank of sl(4) -> gl(T)", "injective", Index{15}, r);
    rb.eq("dim L(g)", "dim-Lg", Index{15}, lg.dim());
    rb.holds("sl(4) onto L(g)", "onto", inside && r == lg.dim());
    square_upgrade(rb, g, "so(6)");

    // s -> phi_{s*}: functional t -> tr(s* t); in dual coordinates this is g itself.
    const auto tdual = dual_module(bm.t);
    rb.holds("s -> phi_{s*} is an isomorphism T -> T*", "T-self-dual",
             is_homomorphism(bm.t, tdual, Mat<S>(g.transpose())) && is_invertible<S>(g));
    rb.holds("phi o star in Hom(T, T*)", "T-hom-space", in_hom_space(hom_space(bm.t, tdual), Mat<S>(g.transpose())),
             "hom-space");

    const auto b3 = block_modules<S>(3, lie_generators(sl_algebra<S>(3)));
    rb.eq("dim Hom_sl(3)(T, T*)", "n3-not-self-dual", Index{0}, hom_space(b3.t, dual_module(b3.t)).dim(), "hom-space");
    return rb.take();
}

template <class S>
Report run_block_irreducibles(const CaseSpec& spec) {
    const std::uint32_t ell = characteristic<S>();
    const Index n = spec.m;
    if (n < 2) throw HypothesisError("block-irreducibles needs n >= 2");
    const std::uint64_t avoid = 2 * static_cast<std::uint64_t>(n);
    ReportBuilder rb("block-irreducibles", FieldTraits<S>::current(), n);
    const auto bm = block_modules<S>(n, lie_generators(sl_algebra<S>(n)));
    rb.eq("dim T", "dim-T", binom2(n), bm.t.dim);
    rb.eq("dim C", "dim-C", binom2(n), bm.c.dim);
    if (n == 2) {
        rb.holds("T trivial", "n2-T-trivial", is_trivial(bm.t));
    } else {
        for (const auto& [mod, key] : {std::pair{&bm.t, "T"}, std::pair{&bm.c, "C"}}) {
            const auto irr = certify(*mod, spec.budget, avoid);
            rb.eq(std::string(key) + " irreducible", std::string(key) + "-irreducible", std::string("yes"),
                  to_string(irr.verdict), irr.method);
        }
    }
    if (ell != 2) {
        rb.eq("dim S", "dim-S", binom2(n + 1), bm.s.dim);
        rb.eq("dim B", "dim-B", binom2(n + 1), bm.b.dim);
        for (const auto& [mod, key] : {std::pair{&bm.s, "S"}, std::pair{&bm.b, "B"}}) {
            const auto irr = certify(*mod, spec.budget, avoid);
            rb.eq(std::string(key) + " irreducible", std::string(key) + "-irreducible", std::string("yes"),
                  to_string(irr.verdict), irr.method);
        }
    }
    rb.holds("phi : A -> Z* isomorphism (r = n)", "duality", block_duality_check<S>(n, n), "hom-space");
    rb.holds("phi : A -> Z* isomorphism (r = n + 1)", "duality-rect", block_duality_check<S>(n + 1, n), "hom-space");
    return rb.take();
}

namespace {

// Lower-degree claims for L = L(J), m = 4, characteristic 2.
template <class S>
void exceptional_chain(ReportBuilder& rb, std::uint64_t budget) {
    const Index m = 4, n = 2;
    const Mat<S> j = symplectic_gram<S>(m);
    const auto l = skew_adjoint_algebra<S>(j);
    const auto l1 = derived(l), l2 = derived(l1), l3 = derived(l2), l4 = derived(l3);
    rb.eq("derived series dimensions", "m4-derived",
          std::string("10,6,5,1,0"), join({l.dim(), l1.dim(), l2.dim(), l3.dim(), l4.dim()}));
    rb.holds("L3 = s", "m4-L3-scalar", l3.space == scalar_algebra<S>(m).space);

    const Mat<S> z2 = Mat<S>::Zero(n, n), sym = unit_matrix<S>(n, 0, 1) + unit_matrix<S>(n, 1, 0);
    const Mat<S> e12 = unit_matrix<S>(n, 0, 1), e21 = unit_matrix<S>(n, 1, 0);
    const Mat<S> x = block2<S>(z2, sym, z2, z2), y = block2<S>(z2, z2, sym, z2);
    const Mat<S> e = block2<S>(e12, z2, z2, e21), f = block2<S>(e21, z2, z2, e12);
    const Mat<S> z = identity<S>(m);
    const std::vector<Mat<S>> hb{x, e, y, f, z};
    bool in_l2 = true;
    for (const auto& v : hb) in_l2 = in_l2 && l2.contains(v);
    rb.holds("L2 isomorphic to h(2) (x, e, y, f, z)", "m4-L2-heisenberg",
             in_l2 && lie_isomorphic_by_structure(structure_constants(hb), heisenberg<S>(2), identity<S>(5)),
             "structure constants");

    const Mat<S> a = block2<S>(unit_matrix<S>(n, 0, 0), z2, z2, unit_matrix<S>(n, 0, 0));
    std::vector<Mat<S>> reps{a};
    for (Index i = 0; i < n; ++i) reps.push_back(block2<S>(z2, unit_matrix<S>(n, i, i), z2, z2));
    for (Index i = 0; i < n; ++i) reps.push_back(block2<S>(z2, z2, unit_matrix<S>(n, i, i), z2));
    const auto quo = quotient_algebra(l, l2, reps);
    Mat<S> map = Mat<S>::Zero(5, 5);
    map(4, 0) = S(1);
    for (Index i = 0; i < 4; ++i) map(i, i + 1) = S(1);
    rb.holds("L/L2 isomorphic to h(2)", "m4-quotient-heisenberg",
             lie_isomorphic_by_structure(quo.structure, heisenberg<S>(2), map), "structure constants");

    // U = L2/L3 with basis e, x, f, y.
    Mat<S> rows(5, m * m);
    const std::vector<Mat<S>> ub{e, x, f, y, z};
    for (Index k = 0; k < 5; ++k) rows.row(k) = vec<S>(ub[static_cast<std::size_t>(k)]).transpose();
    const CoordinateSystem<S> cs(rows);
    auto rmat = [&](const Mat<S>& w) {
        Mat<S> out(4, 4);
        for (Index c = 0; c < 4; ++c) out.col(c) = cs.coordinates(vec<S>(bracket<S>(w, ub[static_cast<std::size_t>(c)])))->head(4);
        return out;
    };
    const Mat<S> sym4 = block2<S>(z2, sym, z2, z2);
    const std::vector<Mat<S>> expected{identity<S>(4), sym4, block2<S>(e21, z2, z2, e12),
                                       block2<S>(z2, z2, sym, z2), block2<S>(e12, z2, z2, e21)};
    std::vector<Mat<S>> rs;
    for (const auto& w : reps) rs.push_back(rmat(w));
    // reps order: a, b1, b2, c1, c2
    rb.holds("R(a), R(b1), R(b2), R(c1), R(c2) as displayed", "m4-R-matrices", rs == expected);

    Mat<S> gram(4, 4);
    bool central = true;
    for (Index p = 0; p < 4; ++p)
        for (Index q = 0; q < 4; ++q) {
            const Vec<S> c = *cs.coordinates(vec<S>(bracket<S>(ub[static_cast<std::size_t>(p)], ub[static_cast<std::size_t>(q)])));
            central = central && all_zero<S>(Mat<S>(c.head(4)));
            gram(p, q) = c(4);
        }
    rb.holds("bracket on L2 lands in s", "m4-bracket-central", central);
    rb.holds("Gram of g is J", "m4-gram-J", gram == j);
    std::vector<Mat<S>> rl;
    for (const auto& w : l.basis()) rl.push_back(rmat(w));
    rb.holds("g is L-invariant", "m4-g-invariant", preserves_form(rl, gram));

    Mat<S> stack(l.dim(), 16);
    for (Index k = 0; k < l.dim(); ++k) stack.row(k) = vec<S>(rl[static_cast<std::size_t>(k)]).transpose();
    const auto ker = kernel<S>(Mat<S>(stack.transpose()));
    std::vector<Mat<S>> kmats;
    for (Index k = 0; k < ker.dim(); ++k) {
        Mat<S> acc = Mat<S>::Zero(m, m);
        for (Index t = 0; t < l.dim(); ++t) acc += l.element(t) * ker.vector(k)(t);
        kmats.push_back(acc);
    }
    rb.holds("kernel of R is L2", "m4-kernel", matrix_span<S>(m, kmats).space == l2.space);
    const auto image = matrix_span<S>(4, rl);
    const auto lg = skew_adjoint_algebra<S>(gram);
    rb.holds("R(L) is a 5-dimensional subalgebra of L(g)", "m4-image",
             image.dim() == 5 && is_bracket_closed(image) && subspace_contains(lg.space, image.space));
    const auto irr = certify_irreducible(natural_module(image.basis()), budget);
    rb.eq("U irreducible", "m4-U-irreducible", std::string("yes"), to_string(irr.verdict), irr.method);

    // F[X1,X2]/(X1^2,X2^2) in the order X2, 1, X1, X1X2.
    const auto poly = heisenberg_poly_module<S>(2, 2, S(1));
    const std::array<Index, 4> order{2, 0, 1, 3};
    std::vector<Mat<S>> perm;
    for (const auto& act : poly.actions) {
        Mat<S> p(4, 4);
        for (Index r = 0; r < 4; ++r)
            for (Index c = 0; c < 4; ++c) p(r, c) = act(order[static_cast<std::size_t>(r)], order[static_cast<std::size_t>(c)]);
        perm.push_back(p);
    }
    // poly generators u1, u2, v1, v2, z against b1, b2, c1, c2, a
    rb.holds("U matches F[X1,X2]/(X1^2,X2^2)", "m4-poly-match",
             perm[0] == rs[1] && perm[1] == rs[2] && perm[2] == rs[3] && perm[3] == rs[4] && perm[4] == rs[0]);
}

}  // namespace

template <class S>
Report run_heisenberg(const CaseSpec& spec) {
    const std::uint32_t ell = characteristic<S>();
    if (ell == 0) throw HypothesisError("heisenberg needs a field of prime characteristic");
    const Index n = spec.m;
    if (n < 1) throw HypothesisError("heisenberg needs n >= 1");
    const S alpha = FieldTraits<S>::parse(spec.alpha);
    if (is_zero(alpha)) throw HypothesisError("heisenberg needs alpha != 0");
    ReportBuilder rb("heisenberg", FieldTraits<S>::current(), n);
    const auto mod = heisenberg_poly_module<S>(n, ell, alpha);
    Index expected_dim = 1;
    for (Index i = 0; i < n; ++i) expected_dim *= ell;
    rb.eq("dim", "dim", expected_dim, mod.dim);

    const auto h = heisenberg<S>(n);
    bool axioms = true;
    for (Index p = 0; p < h.dim(); ++p)
        for (Index q = 0; q < h.dim(); ++q) {
            const auto& ap = mod.actions[static_cast<std::size_t>(p)];
            const auto& aq = mod.actions[static_cast<std::size_t>(q)];
            Mat<S> want = Mat<S>::Zero(mod.dim, mod.dim);
            const Vec<S> c = h.ad[static_cast<std::size_t>(p)].col(q);
            for (Index k = 0; k < h.dim(); ++k)
                if (!is_zero(c(k))) want += mod.actions[static_cast<std::size_t>(k)] * c(k);
            axioms = axioms && Mat<S>(ap * aq - aq * ap) == want;
        }
    rb.holds("module axioms", "axioms", axioms);
    rb.eq("rank of the representation (faithful)", "faithful", 2 * n + 1, representation_rank(mod.actions));
    const auto irr = certify_irreducible(mod, spec.budget);
    rb.eq("irreducible", "irreducible", std::string("yes"), to_string(irr.verdict), irr.method);

    if (n == 1 && ell == 2) {
        const Mat<S> e = unit_matrix<S>(2, 0, 1), f = unit_matrix<S>(2, 1, 0);
        const Mat<S> hh = unit_matrix<S>(2, 0, 0) - unit_matrix<S>(2, 1, 1);
        rb.holds("h(1) isomorphic to sl(2)", "n1-sl2",
                 lie_isomorphic_by_structure(structure_constants<S>({e, f, hh}), h, identity<S>(3)),
                 "structure constants");
    }
    if (n == 2 && ell == 2 && alpha == S(1)) exceptional_chain<S>(rb, spec.budget);
    return rb.take();
}

#define LIECOMP_INSTANTIATE(S)                                   \
    template Report run_sl_series<S>(const CaseSpec&);          \
    template Report run_sp_so_embedding<S>(const CaseSpec&);    \
    template Report run_sl4_so6<S>(const CaseSpec&);            \
    template Report run_block_irreducibles<S>(const CaseSpec&); \
    template Report run_heisenberg<S>(const CaseSpec&);
LIECOMP_INSTANTIATE(Rational)
LIECOMP_INSTANTIATE(Zp)
LIECOMP_INSTANTIATE(Fp2)

}  // namespace liecomp::vdetail
