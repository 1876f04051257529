#ifndef LIECOMP_INTERNAL_ECHELON_HPP
#define LIECOMP_INTERNAL_ECHELON_HPP

#include <vector>

#include "liecomp/linalg.hpp"

namespace liecomp::detail {

// Incremental semi-echelon span used by closures.
template <class S>
class EchelonBuilder {
public:
    explicit EchelonBuilder(Index n) : n_(n) {}

    // Adds v if new; returns true when the span grew.
    bool add(Vec<S> v) {
        reduce_in_place(v);
        Index p = 0;
        while (p < n_ && is_zero(v(p))) ++p;
        if (p == n_) return false;
        const S inv = inverse(v(p));
        for (Index i = 0; i < n_; ++i)
            if (!is_zero(v(i))) v(i) *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    void reduce_in_place(Vec<S>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const S c = v(pivots_[k]);
            if (is_zero(c)) continue;
            const Vec<S>& r = rows_[k];
            for (Index i = 0; i < n_; ++i)
                if (!is_zero(r(i))) v(i) -= c * r(i);
        }
    }

    Index dim() const { return static_cast<Index>(rows_.size()); }
    const std::vector<Vec<S>>& rows() const { return rows_; }

    Subspace<S> space() const { return Subspace<S>::span(rows_, n_); }

private:
    Index n_;
    std::vector<Vec<S>> rows_;
    std::vector<Index> pivots_;
};


}  // namespace liecomp::detail

#endif
