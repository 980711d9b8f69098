#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopf/cyclotomic.hpp"

namespace hopf {

/// Sparse vector: index -> nonzero coefficient.
using SVec = std::map<int, Cyc>;

inline void sv_set(SVec& v, int i, const Cyc& c) {
    if (c.is_zero())
        v.erase(i);
    else
        v.insert_or_assign(i, c);
}

/// dst += c * src.
inline void sv_add_scaled(SVec& dst, const SVec& src, const Cyc& c) {
    if (c.is_zero()) return;
    for (const auto& [i, a] : src) {
        auto it = dst.find(i);
        if (it == dst.end()) {
            dst.emplace(i, a * c);
        } else {
            it->second = it->second + a * c;
            if (it->second.is_zero()) dst.erase(it);
        }
    }
}

inline SVec sv_from_dense(const std::vector<Cyc>& d) {
    SVec v;
    for (size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) v.emplace(static_cast<int>(i), d[i]);
    return v;
}

inline std::vector<Cyc> sv_to_dense(const SVec& v, int n, const CycField* F) {
    std::vector<Cyc> d(static_cast<size_t>(n), Cyc::zero(F));
    for (const auto& [i, c] : v) d[static_cast<size_t>(i)] = c;
    return d;
}

/// Row-reduced echelon basis of a subspace, built incrementally. Rows are
/// monic at their pivot and fully reduced against each other, so reduction
/// against the basis is canonical.
class Echelon {
  public:
    /// Remainder of v after eliminating every entry that sits on a pivot
    /// column. Zero remainder == membership.
    SVec reduce(SVec v) const {
        SVec out;
        while (!v.empty()) {
            auto e = v.begin();
            auto row = rows_.find(e->first);
            if (row == rows_.end()) {
                out.insert(*e);
                v.erase(e);
            } else {
                // Row is monic at its pivot, so this cancels the entry.
                Cyc c = e->second;
                sv_add_scaled(v, row->second, c * Cyc(c.field(), -1));
            }
        }
        return out;
    }

    /// Add v to the span; true when the rank grew.
    bool insert(SVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        int p = v.begin()->first;
        Cyc inv = v.begin()->second.inv();
        SVec row;
        for (const auto& [i, c] : v) row.emplace(i, c * inv);
        // Back-eliminate the new pivot from existing rows.
        for (auto& [q, r] : rows_) {
            auto it = r.find(p);
            if (it == r.end()) continue;
            Cyc c = it->second;
            r.erase(it);
            SVec scaled;
            for (const auto& [i, a] : row)
                if (i != p) scaled.emplace(i, a);
            sv_add_scaled(r, scaled, c * Cyc(c.field(), -1));
        }
        rows_.emplace(p, std::move(row));
        return true;
    }

    bool contains(SVec v) const { return reduce(std::move(v)).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SVec>& rows() const { return rows_; }

    bool contains_all(const Echelon& o) const {
        for (const auto& [p, r] : o.rows_)
            if (!contains(r)) return false;
        return true;
    }
    bool same_span(const Echelon& o) const { return rank() == o.rank() && contains_all(o); }

  private:
    std::map<int, SVec> rows_;  // pivot index -> monic reduced row
};

/// Any solution x of A x = b (A row-major n x m, so x has m entries), or
/// nullopt if the system is inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Cyc>> linear_solve(std::vector<std::vector<Cyc>> A,
                                                    std::vector<Cyc> b, const CycField* F) {
    size_t n = A.size();
    size_t m = n == 0 ? 0 : A[0].size();
    std::vector<int> pivot_col;  // per eliminated row
    size_t r = 0;
    for (size_t c = 0; c < m && r < n; ++c) {
        size_t p = r;
        while (p < n && A[p][c].is_zero()) ++p;
        if (p == n) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        Cyc inv = A[r][c].inv();
        for (size_t j = c; j < m; ++j) A[r][j] = A[r][j] * inv;
        b[r] = b[r] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            Cyc f = A[i][c];
            for (size_t j = c; j < m; ++j) A[i][j] = A[i][j] - f * A[r][j];
            b[i] = b[i] - f * b[r];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < n; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<Cyc> x(m, Cyc::zero(F));
    for (size_t i = 0; i < r; ++i) x[static_cast<size_t>(pivot_col[i])] = b[i];
    return x;
}

/// Basis of the kernel of A (row-major n x m), as m-vectors.
inline std::vector<std::vector<Cyc>> kernel_basis(std::vector<std::vector<Cyc>> A,
                                                  const CycField* F) {
    size_t n = A.size();
    size_t m = n == 0 ? 0 : A[0].size();
    std::vector<int> pivot_of_col(m, -1);
    size_t r = 0;
    for (size_t c = 0; c < m && r < n; ++c) {
        size_t p = r;
        while (p < n && A[p][c].is_zero()) ++p;
        if (p == n) continue;
        std::swap(A[p], A[r]);
        Cyc inv = A[r][c].inv();
        for (size_t j = c; j < m; ++j) A[r][j] = A[r][j] * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            Cyc f = A[i][c];
            for (size_t j = c; j < m; ++j) A[i][j] = A[i][j] - f * A[r][j];
        }
        pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }
    std::vector<std::vector<Cyc>> out;
    for (size_t c = 0; c < m; ++c) {
        if (pivot_of_col[c] != -1) continue;
        std::vector<Cyc> v(m, Cyc::zero(F));
        v[c] = Cyc::one(F);
        for (size_t j = 0; j < m; ++j)
            if (pivot_of_col[j] != -1)
                v[j] = Cyc::zero(F) - A[static_cast<size_t>(pivot_of_col[j])][c];
        out.push_back(std::move(v));
    }
    return out;
}

inline int dense_rank(std::vector<std::vector<Cyc>> A) {
    size_t n = A.size();
    size_t m = n == 0 ? 0 : A[0].size();
    size_t r = 0;
    for (size_t c = 0; c < m && r < n; ++c) {
        size_t p = r;
        while (p < n && A[p][c].is_zero()) ++p;
        if (p == n) continue;
        std::swap(A[p], A[r]);
        for (size_t i = r + 1; i < n; ++i) {
            if (A[i][c].is_zero()) continue;
            Cyc f = A[i][c] * A[r][c].inv();
            for (size_t j = c; j < m; ++j) A[i][j] = A[i][j] - f * A[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace hopf
