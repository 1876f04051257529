// Modules given by explicit action matrices: spinning, irreducibility
// certificates, composition series, duals, Hom spaces and weights.
#ifndef LIECOMP_REPMOD_HPP
#define LIECOMP_REPMOD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liecomp/liealg.hpp"

namespace liecomp {

template <class S>
struct LieModule {
    Index dim = 0;
    std::vector<std::string> labels;
    std::vector<Mat<S>> actions;

    std::size_t generator_count() const { return actions.size(); }
};

/// Action of the given elements of gl(m) on an ad-invariant subspace of
/// gl(m), in the coordinates of its RREF basis. Throws std::invalid_argument
/// when the subspace is not invariant.
template <class S>
LieModule<S> adjoint_module(const std::vector<Mat<S>>& elements, const Subspace<S>& ambient, Index m,
                            std::vector<std::string> labels = {});

template <class S>
LieModule<S> adjoint_module(const MatLieAlg<S>& l, const Subspace<S>& ambient);

/// Natural module F^m.
template <class S>
LieModule<S> natural_module(const std::vector<Mat<S>>& elements, std::vector<std::string> labels = {});

/// Adjoint module of an abstract algebra.
template <class S>
LieModule<S> adjoint_module(const LieStructure<S>& l);

template <class S>
bool is_invariant(const LieModule<S>& mod, const Subspace<S>& u);

/// Every generator acts as zero.
template <class S>
bool is_trivial(const LieModule<S>& mod);

/// Module structure on an invariant subspace (RREF coordinates).
template <class S>
LieModule<S> restrict_module(const LieModule<S>& mod, const Subspace<S>& u);

/// Module structure on M/U in the basis indexed by u.free_columns().
template <class S>
LieModule<S> quotient_module(const LieModule<S>& mod, const Subspace<S>& u);

/// upper/lower for invariant lower <= upper; basis: free columns of lower
/// inside the RREF coordinates of upper.
template <class S>
LieModule<S> subquotient(const LieModule<S>& mod, const Subspace<S>& lower, const Subspace<S>& upper);

/// Smallest invariant subspace containing the seeds.
template <class S>
Subspace<S> spin(const LieModule<S>& mod, const std::vector<Vec<S>>& seeds);

/// Negated transposes.
template <class S>
LieModule<S> dual_module(const LieModule<S>& mod);

template <class S>
struct Irreducibility {
    Verdict verdict = Verdict::refused;  // yes: irreducible, no: witness found
    std::optional<Subspace<S>> witness;
    std::string method;
};

/// Finite fields only. Uses a singular element of the enveloping algebra and
/// its kernel (Norton's criterion); falls back to spinning every
/// 1-dimensional subspace when that is within budget.
template <class S>
Irreducibility<S> certify_irreducible(const LieModule<S>& mod, std::uint64_t budget = default_budget);

/// Spins one representative of every 1-dimensional subspace.
template <class S>
Irreducibility<S> certify_irreducible_exhaustive(const LieModule<S>& mod, std::uint64_t budget = default_budget);

/// Over Q. Spins basis vectors and their pairwise sums and differences looking
/// for a witness; otherwise reduces the actions modulo primes not dividing
/// `avoid` with p-integral entries and needs two of them to certify. When
/// neither happens the verdict is `refused` (inconclusive).
Irreducibility<Rational> certify_irreducible_mod_p(const LieModule<Rational>& mod, std::uint64_t avoid,
                                                   std::uint64_t budget = default_budget);

/// All submodules, sorted by dimension then basis. Finite fields, within budget.
template <class S>
std::optional<std::vector<Subspace<S>>> submodule_lattice(const LieModule<S>& mod, std::uint64_t budget = default_budget);

template <class S>
struct CompSeries {
    std::vector<Subspace<S>> chain;
    std::vector<Index> factor_dims;
    std::vector<bool> factor_trivial;
    std::vector<std::string> methods;
    bool certified = false;

    std::size_t length() const { return factor_dims.size(); }
};

/// Finite fields: recursive search for invariant subspaces. Over Q the
/// module is refined by spinning and each factor certified modulo primes.
template <class S>
CompSeries<S> composition_series(const LieModule<S>& mod, std::uint64_t budget = default_budget,
                                  std::uint64_t avoid = 2);

/// Checks a proposed chain: each term invariant, strictly increasing, and
/// each factor irreducible (over Q: no spin of a factor basis vector is a
/// proper nonzero subspace, and mod-p certification).
template <class S>
CompSeries<S> certify_series(const LieModule<S>& mod, const std::vector<Subspace<S>>& chain,
                             std::uint64_t budget = default_budget, std::uint64_t avoid = 2);

/// {T : T A1(x) = A2(x) T for all generators x}, as vec(T) with T of shape dim2 x dim1.
template <class S>
Subspace<S> hom_space(const LieModule<S>& m1, const LieModule<S>& m2);

template <class S>
bool is_homomorphism(const LieModule<S>& m1, const LieModule<S>& m2, const Mat<S>& t);

template <class S>
struct Weight {
    std::vector<S> values;  // one per element of H
    Index multiplicity = 0;
    Subspace<S> space;
};

/// Simultaneous eigenspaces of commuting operators with eigenvalues in the
/// base field (over Q: integer eigenvalues within the Gershgorin bound).
template <class S>
std::vector<Weight<S>> weights(const std::vector<Mat<S>>& h);

}  // namespace liecomp

#endif  // LIECOMP_REPMOD_HPP
