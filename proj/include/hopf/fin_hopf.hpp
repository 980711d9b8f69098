#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hopf/group.hpp"
#include "hopf/linalg.hpp"

namespace hopf {

/// Sparse row: (index, coefficient) pairs, strictly increasing indices, no
/// zero coefficients. The frozen form of an SVec accumulator.
using SRow = std::vector<std::pair<int, Cyc>>;

inline SRow srow_from(const SVec& v) { return SRow(v.begin(), v.end()); }
inline SVec svec_from(const SRow& r) { return SVec(r.begin(), r.end()); }

/// Finite-dimensional Hopf algebra as explicit structure tensors over a
/// cyclotomic field. Basis indices are 0..dim-1; tensor-square indices are
/// composite a*dim+b.
struct FinHopf {
    const CycField* F = nullptr;
    int dim = 0;
    std::vector<std::string> labels;
    std::vector<SRow> mult;     // [i*dim+j]: e_i e_j as a sparse vector
    std::vector<Cyc> unit;      // coordinates of 1
    std::vector<SRow> comult;   // [i]: Delta(e_i), indices a*dim+b
    std::vector<Cyc> counit;    // eps(e_i)
    std::vector<SRow> antipode; // [j]: S(e_j) as a sparse vector
    nlohmann::json provenance;  // construction record (machine-readable)

    const SRow& mrow(int i, int j) const {
        return mult[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
    }
    int pair_index(int a, int b) const { return a * dim + b; }
    std::pair<int, int> split_pair(int ab) const { return {ab / dim, ab % dim}; }
};

using Vec = std::vector<Cyc>;

inline Vec zero_vec(const FinHopf& H) { return Vec(static_cast<size_t>(H.dim), Cyc::zero(H.F)); }
inline Vec basis_vec(const FinHopf& H, int i) {
    Vec v = zero_vec(H);
    v[static_cast<size_t>(i)] = Cyc::one(H.F);
    return v;
}

inline Vec mul_vec(const FinHopf& H, const Vec& x, const Vec& y) {
    SVec acc;
    for (int i = 0; i < H.dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < H.dim; ++j) {
            if (y[static_cast<size_t>(j)].is_zero()) continue;
            Cyc c = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
            for (const auto& [k, m] : H.mrow(i, j)) {
                auto it = acc.find(k);
                if (it == acc.end())
                    acc.emplace(k, m * c);
                else {
                    it->second = it->second + m * c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
    }
    return sv_to_dense(acc, H.dim, H.F);
}

/// Delta(x) as a sparse vector over pair indices.
inline SVec comult_vec(const FinHopf& H, const Vec& x) {
    SVec acc;
    for (int i = 0; i < H.dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        SVec row = svec_from(H.comult[static_cast<size_t>(i)]);
        sv_add_scaled(acc, row, x[static_cast<size_t>(i)]);
    }
    return acc;
}

inline Cyc counit_vec(const FinHopf& H, const Vec& x) {
    Cyc c = Cyc::zero(H.F);
    for (int i = 0; i < H.dim; ++i) c = c + x[static_cast<size_t>(i)] * H.counit[static_cast<size_t>(i)];
    return c;
}

inline Vec antipode_vec(const FinHopf& H, const Vec& x) {
    SVec acc;
    for (int j = 0; j < H.dim; ++j) {
        if (x[static_cast<size_t>(j)].is_zero()) continue;
        SVec col = svec_from(H.antipode[static_cast<size_t>(j)]);
        sv_add_scaled(acc, col, x[static_cast<size_t>(j)]);
    }
    return sv_to_dense(acc, H.dim, H.F);
}

inline bool is_commutative(const FinHopf& H) {
    for (int i = 0; i < H.dim; ++i)
        for (int j = i + 1; j < H.dim; ++j)
            if (H.mrow(i, j) != H.mrow(j, i)) return false;
    return true;
}

inline bool is_cocommutative(const FinHopf& H) {
    for (int i = 0; i < H.dim; ++i) {
        SVec flipped;
        for (const auto& [ab, c] : H.comult[static_cast<size_t>(i)]) {
            auto [a, b] = H.split_pair(ab);
            flipped.emplace(H.pair_index(b, a), c);
        }
        if (flipped != svec_from(H.comult[static_cast<size_t>(i)])) return false;
    }
    return true;
}

/// Exact equality of all structure tensors (labels and provenance ignored
/// unless requested). Same basis order is required; this is equality of
/// presentations, not an isomorphism test.
inline bool structure_equal(const FinHopf& A, const FinHopf& B, bool check_labels = false) {
    if (A.F->conductor != B.F->conductor || A.dim != B.dim) return false;
    if (check_labels && A.labels != B.labels) return false;
    return A.mult == B.mult && A.unit == B.unit && A.comult == B.comult &&
           A.counit == B.counit && A.antipode == B.antipode;
}

struct VerifyResult {
    bool ok = true;
    std::string witness;  // first failing law with basis indices
};

namespace detail {
inline void acc_add(SVec& acc, int k, const Cyc& c) {
    auto it = acc.find(k);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
    }
}
inline void acc_add_ll(std::map<long long, Cyc>& acc, long long k, const Cyc& c) {
    auto it = acc.find(k);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(k, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
    }
}
}  // namespace detail

/// Check every Hopf algebra axiom on basis elements. Exact arithmetic, no
/// tolerances; the witness names the first broken law.
inline VerifyResult verify_hopf(const FinHopf& H) {
    VerifyResult r;
    auto fail = [&](std::string w) {
        r.ok = false;
        r.witness = std::move(w);
        return r;
    };
    size_t n = static_cast<size_t>(H.dim);
    if (H.labels.size() != n || H.mult.size() != n * n || H.unit.size() != n ||
        H.comult.size() != n || H.counit.size() != n || H.antipode.size() != n)
        return fail("tensor shape mismatch");

    // Unit laws: 1 * e_i = e_i * 1 = e_i.
    for (int i = 0; i < H.dim; ++i) {
        SVec left, right, want;
        for (int u = 0; u < H.dim; ++u) {
            if (H.unit[static_cast<size_t>(u)].is_zero()) continue;
            for (const auto& [k, c] : H.mrow(u, i))
                detail::acc_add(left, k, c * H.unit[static_cast<size_t>(u)]);
            for (const auto& [k, c] : H.mrow(i, u))
                detail::acc_add(right, k, c * H.unit[static_cast<size_t>(u)]);
        }
        want.emplace(i, Cyc::one(H.F));
        if (left != want) return fail("unit law fails on the left at basis " + std::to_string(i));
        if (right != want) return fail("unit law fails on the right at basis " + std::to_string(i));
    }

    // Associativity.
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            const SRow& ij = H.mrow(i, j);
            for (int k = 0; k < H.dim; ++k) {
                SVec lhs, rhs;
                for (const auto& [l, c] : ij)
                    for (const auto& [m, d] : H.mrow(l, k)) detail::acc_add(lhs, m, c * d);
                for (const auto& [l, c] : H.mrow(j, k))
                    for (const auto& [m, d] : H.mrow(i, l)) detail::acc_add(rhs, m, c * d);
                if (lhs != rhs)
                    return fail("associativity fails at (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }

    // Counit laws: (eps x id) Delta = id = (id x eps) Delta.
    for (int i = 0; i < H.dim; ++i) {
        SVec left, right, want;
        for (const auto& [ab, c] : H.comult[static_cast<size_t>(i)]) {
            auto [a, b] = H.split_pair(ab);
            detail::acc_add(left, b, c * H.counit[static_cast<size_t>(a)]);
            detail::acc_add(right, a, c * H.counit[static_cast<size_t>(b)]);
        }
        want.emplace(i, Cyc::one(H.F));
        if (left != want) return fail("left counit law fails at basis " + std::to_string(i));
        if (right != want) return fail("right counit law fails at basis " + std::to_string(i));
    }

    // Coassociativity.
    for (int i = 0; i < H.dim; ++i) {
        std::map<long long, Cyc> lhs, rhs;
        long long D = H.dim;
        for (const auto& [ab, c] : H.comult[static_cast<size_t>(i)]) {
            auto [a, b] = H.split_pair(ab);
            for (const auto& [a12, d] : H.comult[static_cast<size_t>(a)]) {
                auto [a1, a2] = H.split_pair(a12);
                detail::acc_add_ll(lhs, (static_cast<long long>(a1) * D + a2) * D + b, c * d);
            }
            for (const auto& [b12, d] : H.comult[static_cast<size_t>(b)]) {
                auto [b1, b2] = H.split_pair(b12);
                detail::acc_add_ll(rhs, (static_cast<long long>(a) * D + b1) * D + b2, c * d);
            }
        }
        if (lhs != rhs) return fail("coassociativity fails at basis " + std::to_string(i));
    }

    // Delta and eps are algebra maps; Delta(1) = 1 x 1, eps(1) = 1.
    {
        SVec d1, want;
        Cyc e1 = Cyc::zero(H.F);
        for (int u = 0; u < H.dim; ++u) {
            if (H.unit[static_cast<size_t>(u)].is_zero()) continue;
            SVec row = svec_from(H.comult[static_cast<size_t>(u)]);
            sv_add_scaled(d1, row, H.unit[static_cast<size_t>(u)]);
            e1 = e1 + H.unit[static_cast<size_t>(u)] * H.counit[static_cast<size_t>(u)];
        }
        for (int a = 0; a < H.dim; ++a)
            for (int b = 0; b < H.dim; ++b) {
                Cyc c = H.unit[static_cast<size_t>(a)] * H.unit[static_cast<size_t>(b)];
                if (!c.is_zero()) want.emplace(H.pair_index(a, b), c);
            }
        if (d1 != want) return fail("comultiplication does not send 1 to 1 x 1");
        if (!(e1 == Cyc::one(H.F))) return fail("counit does not send 1 to 1");
    }
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j) {
            SVec lhs;
            Cyc el = Cyc::zero(H.F);
            for (const auto& [k, c] : H.mrow(i, j)) {
                SVec row = svec_from(H.comult[static_cast<size_t>(k)]);
                sv_add_scaled(lhs, row, c);
                el = el + c * H.counit[static_cast<size_t>(k)];
            }
            SVec rhs;
            for (const auto& [ab1, c1] : H.comult[static_cast<size_t>(i)]) {
                auto [a1, b1] = H.split_pair(ab1);
                for (const auto& [ab2, c2] : H.comult[static_cast<size_t>(j)]) {
                    auto [a2, b2] = H.split_pair(ab2);
                    Cyc c12 = c1 * c2;
                    for (const auto& [p, u] : H.mrow(a1, a2))
                        for (const auto& [q, v] : H.mrow(b1, b2))
                            detail::acc_add(rhs, H.pair_index(p, q), c12 * u * v);
                }
            }
            if (lhs != rhs)
                return fail("comultiplication is not multiplicative at (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
            if (!(el == H.counit[static_cast<size_t>(i)] * H.counit[static_cast<size_t>(j)]))
                return fail("counit is not multiplicative at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }

    // Antipode axiom on both sides.
    for (int i = 0; i < H.dim; ++i) {
        SVec left, right, want;
        for (const auto& [ab, c] : H.comult[static_cast<size_t>(i)]) {
            auto [a, b] = H.split_pair(ab);
            for (const auto& [s, u] : H.antipode[static_cast<size_t>(a)])
                for (const auto& [k, m] : H.mrow(s, b)) detail::acc_add(left, k, c * u * m);
            for (const auto& [s, u] : H.antipode[static_cast<size_t>(b)])
                for (const auto& [k, m] : H.mrow(a, s)) detail::acc_add(right, k, c * u * m);
        }
        for (int u = 0; u < H.dim; ++u) {
            Cyc c = H.counit[static_cast<size_t>(i)] * H.unit[static_cast<size_t>(u)];
            if (!c.is_zero()) want.emplace(u, c);
        }
        if (left != want)
            return fail("antipode axiom (left) fails at basis " + std::to_string(i));
        if (right != want)
            return fail("antipode axiom (right) fails at basis " + std::to_string(i));
    }
    return r;
}

/// Group algebra kG: basis = group elements, grouplike coproduct.
inline FinHopf group_algebra(const GroupTable& G, const CycField* F) {
    FinHopf H;
    H.F = F;
    H.dim = G.size();
    size_t n = static_cast<size_t>(H.dim);
    H.labels.reserve(n);
    for (const auto& p : G.elements) H.labels.push_back(perm_to_string(p));
    H.mult.assign(n * n, {});
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j)
            H.mult[static_cast<size_t>(i) * n + static_cast<size_t>(j)] = {{G.mul(i, j), Cyc::one(F)}};
    H.unit.assign(n, Cyc::zero(F));
    H.unit[0] = Cyc::one(F);
    H.comult.assign(n, {});
    for (int i = 0; i < H.dim; ++i) H.comult[static_cast<size_t>(i)] = {{H.pair_index(i, i), Cyc::one(F)}};
    H.counit.assign(n, Cyc::one(F));
    H.antipode.assign(n, {});
    for (int i = 0; i < H.dim; ++i) H.antipode[static_cast<size_t>(i)] = {{G.inv(i), Cyc::one(F)}};
    std::vector<std::string> gen_strs;
    for (const auto& g : G.gens) gen_strs.push_back(perm_to_string(g));
    H.provenance = {{"kind", "group_algebra"},
                    {"degree", G.degree},
                    {"gens", gen_strs},
                    {"order", G.size()}};
    return H;
}

/// Function algebra k^G: basis of point evaluations delta_g.
inline FinHopf dual_group_algebra(const GroupTable& G, const CycField* F) {
    FinHopf H;
    H.F = F;
    H.dim = G.size();
    size_t n = static_cast<size_t>(H.dim);
    for (const auto& p : G.elements) H.labels.push_back("d:" + perm_to_string(p));
    H.mult.assign(n * n, {});
    for (int i = 0; i < H.dim; ++i)
        H.mult[static_cast<size_t>(i) * n + static_cast<size_t>(i)] = {{i, Cyc::one(F)}};
    H.unit.assign(n, Cyc::one(F));  // 1 = sum of all delta_g
    H.comult.assign(n, {});
    for (int g = 0; g < H.dim; ++g) {
        SRow row;
        std::map<int, Cyc> acc;
        for (int a = 0; a < H.dim; ++a) {
            int b = G.mul(G.inv(a), g);  // ab = g
            acc.emplace(H.pair_index(a, b), Cyc::one(F));
        }
        H.comult[static_cast<size_t>(g)] = srow_from(acc);
    }
    H.counit.assign(n, Cyc::zero(F));
    H.counit[0] = Cyc::one(F);
    H.antipode.assign(n, {});
    for (int g = 0; g < H.dim; ++g) H.antipode[static_cast<size_t>(g)] = {{G.inv(g), Cyc::one(F)}};
    std::vector<std::string> gen_strs;
    for (const auto& g : G.gens) gen_strs.push_back(perm_to_string(g));
    H.provenance = {{"kind", "dual_group_algebra"},
                    {"degree", G.degree},
                    {"gens", gen_strs},
                    {"order", G.size()}};
    return H;
}

/// Dual Hopf algebra on the dual basis (antipode transposed; finite dimension
/// makes this exact).
inline FinHopf dual_hopf(const FinHopf& H) {
    FinHopf D;
    D.F = H.F;
    D.dim = H.dim;
    size_t n = static_cast<size_t>(H.dim);
    for (const auto& l : H.labels) D.labels.push_back("*" + l);
    // f^i f^j = sum_k <f^i x f^j, Delta e_k> f^k.
    std::vector<SVec> macc(n * n);
    for (int k = 0; k < H.dim; ++k)
        for (const auto& [ab, c] : H.comult[static_cast<size_t>(k)])
            detail::acc_add(macc[static_cast<size_t>(ab)], k, c);
    D.mult.resize(n * n);
    for (size_t ij = 0; ij < n * n; ++ij) D.mult[ij] = srow_from(macc[ij]);
    D.unit = H.counit;
    // Delta f^k = sum_{i,j} <f^k, e_i e_j> f^i x f^j.
    std::vector<SVec> cacc(n);
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j)
            for (const auto& [k, c] : H.mrow(i, j))
                detail::acc_add(cacc[static_cast<size_t>(k)], H.pair_index(i, j), c);
    D.comult.resize(n);
    for (size_t k = 0; k < n; ++k) D.comult[k] = srow_from(cacc[k]);
    D.counit = H.unit;
    std::vector<SVec> sacc(n);
    for (int i = 0; i < H.dim; ++i)
        for (const auto& [s, c] : H.antipode[static_cast<size_t>(i)])
            detail::acc_add(sacc[static_cast<size_t>(s)], i, c);
    D.antipode.resize(n);
    for (size_t j = 0; j < n; ++j) D.antipode[j] = srow_from(sacc[j]);
    D.provenance = {{"kind", "dual"}, {"of", H.provenance}};
    return D;
}

/// Tensor product Hopf algebra A x B with index (a,b) -> a*dim(B)+b.
inline FinHopf tensor_hopf(const FinHopf& A, const FinHopf& B) {
    if (A.F != B.F) throw std::invalid_argument("tensor factors over different fields");
    FinHopf T;
    T.F = A.F;
    T.dim = A.dim * B.dim;
    size_t n = static_cast<size_t>(T.dim);
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b)
            T.labels.push_back(A.labels[static_cast<size_t>(a)] + "(x)" + B.labels[static_cast<size_t>(b)]);
    auto idx = [&](int a, int b) { return a * B.dim + b; };
    T.mult.assign(n * n, {});
    for (int a1 = 0; a1 < A.dim; ++a1)
        for (int b1 = 0; b1 < B.dim; ++b1)
            for (int a2 = 0; a2 < A.dim; ++a2)
                for (int b2 = 0; b2 < B.dim; ++b2) {
                    SVec acc;
                    for (const auto& [p, u] : A.mrow(a1, a2))
                        for (const auto& [q, v] : B.mrow(b1, b2))
                            detail::acc_add(acc, idx(p, q), u * v);
                    T.mult[static_cast<size_t>(idx(a1, b1)) * n + static_cast<size_t>(idx(a2, b2))] =
                        srow_from(acc);
                }
    T.unit.assign(n, Cyc::zero(T.F));
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b)
            T.unit[static_cast<size_t>(idx(a, b))] = A.unit[static_cast<size_t>(a)] * B.unit[static_cast<size_t>(b)];
    T.comult.assign(n, {});
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b) {
            SVec acc;
            for (const auto& [a12, c] : A.comult[static_cast<size_t>(a)]) {
                auto [x1, x2] = A.split_pair(a12);
                for (const auto& [b12, d] : B.comult[static_cast<size_t>(b)]) {
                    auto [y1, y2] = B.split_pair(b12);
                    detail::acc_add(acc, T.pair_index(idx(x1, y1), idx(x2, y2)), c * d);
                }
            }
            T.comult[static_cast<size_t>(idx(a, b))] = srow_from(acc);
        }
    T.counit.assign(n, Cyc::zero(T.F));
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b)
            T.counit[static_cast<size_t>(idx(a, b))] =
                A.counit[static_cast<size_t>(a)] * B.counit[static_cast<size_t>(b)];
    T.antipode.assign(n, {});
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b) {
            SVec acc;
            for (const auto& [p, u] : A.antipode[static_cast<size_t>(a)])
                for (const auto& [q, v] : B.antipode[static_cast<size_t>(b)])
                    detail::acc_add(acc, idx(p, q), u * v);
            T.antipode[static_cast<size_t>(idx(a, b))] = srow_from(acc);
        }
    T.provenance = {{"kind", "tensor"}, {"left", A.provenance}, {"right", B.provenance}};
    return T;
}

/// Linear map between based spaces; column j is the image of source basis j.
struct LinMap {
    int src_dim = 0, dst_dim = 0;
    std::vector<SRow> cols;

    Vec apply(const FinHopf& dst, const Vec& x) const {
        SVec acc;
        for (int j = 0; j < src_dim; ++j) {
            if (x[static_cast<size_t>(j)].is_zero()) continue;
            SVec col = svec_from(cols[static_cast<size_t>(j)]);
            sv_add_scaled(acc, col, x[static_cast<size_t>(j)]);
        }
        return sv_to_dense(acc, dst_dim, dst.F);
    }

    SVec apply_sv(const SVec& x) const {
        SVec acc;
        for (const auto& [j, c] : x) {
            SVec col = svec_from(cols[static_cast<size_t>(j)]);
            sv_add_scaled(acc, col, c);
        }
        return acc;
    }

    bool is_bijective() const {
        if (src_dim != dst_dim) return false;
        Echelon e;
        for (const auto& c : cols)
            if (!e.insert(svec_from(c))) return false;
        return true;
    }

    int rank() const {
        Echelon e;
        for (const auto& c : cols) e.insert(svec_from(c));
        return e.rank();
    }
};

inline LinMap identity_map(int n, const CycField* F) {
    LinMap f;
    f.src_dim = f.dst_dim = n;
    f.cols.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) f.cols[static_cast<size_t>(j)] = {{j, Cyc::one(F)}};
    return f;
}

inline LinMap compose(const LinMap& g, const LinMap& f) {  // g after f
    if (f.dst_dim != g.src_dim) throw std::invalid_argument("composition dimension mismatch");
    LinMap h;
    h.src_dim = f.src_dim;
    h.dst_dim = g.dst_dim;
    h.cols.resize(static_cast<size_t>(f.src_dim));
    for (int j = 0; j < f.src_dim; ++j)
        h.cols[static_cast<size_t>(j)] = srow_from(g.apply_sv(svec_from(f.cols[static_cast<size_t>(j)])));
    return h;
}

/// f(xy) = f(x)f(y) on all basis pairs and f(1) = 1.
inline bool is_algebra_map(const LinMap& f, const FinHopf& A, const FinHopf& B) {
    if (f.src_dim != A.dim || f.dst_dim != B.dim) return false;
    SVec f1 = f.apply_sv(sv_from_dense(A.unit));
    if (f1 != sv_from_dense(B.unit)) return false;
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < A.dim; ++j) {
            SVec lhs = f.apply_sv(svec_from(A.mrow(i, j)));
            SVec rhs;
            for (const auto& [p, u] : f.cols[static_cast<size_t>(i)])
                for (const auto& [q, v] : f.cols[static_cast<size_t>(j)])
                    for (const auto& [k, m] : B.mrow(p, q)) detail::acc_add(rhs, k, u * v * m);
            if (lhs != rhs) return false;
        }
    return true;
}

/// (f x f) Delta_A = Delta_B f on all basis elements and eps_B f = eps_A.
inline bool is_coalgebra_map(const LinMap& f, const FinHopf& A, const FinHopf& B) {
    if (f.src_dim != A.dim || f.dst_dim != B.dim) return false;
    for (int i = 0; i < A.dim; ++i) {
        Cyc e = Cyc::zero(A.F);
        for (const auto& [p, u] : f.cols[static_cast<size_t>(i)])
            e = e + u * B.counit[static_cast<size_t>(p)];
        if (!(e == A.counit[static_cast<size_t>(i)])) return false;

        SVec lhs;
        for (const auto& [ab, c] : A.comult[static_cast<size_t>(i)]) {
            auto [a, b] = A.split_pair(ab);
            for (const auto& [p, u] : f.cols[static_cast<size_t>(a)])
                for (const auto& [q, v] : f.cols[static_cast<size_t>(b)])
                    detail::acc_add(lhs, B.pair_index(p, q), c * u * v);
        }
        SVec rhs;
        for (const auto& [p, u] : f.cols[static_cast<size_t>(i)]) {
            SVec row = svec_from(B.comult[static_cast<size_t>(p)]);
            sv_add_scaled(rhs, row, u);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

inline bool commutes_with_antipode(const LinMap& f, const FinHopf& A, const FinHopf& B) {
    for (int i = 0; i < A.dim; ++i) {
        SVec lhs = f.apply_sv(svec_from(A.antipode[static_cast<size_t>(i)]));
        SVec rhs;
        for (const auto& [p, u] : f.cols[static_cast<size_t>(i)]) {
            SVec col = svec_from(B.antipode[static_cast<size_t>(p)]);
            sv_add_scaled(rhs, col, u);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

/// Bijective algebra and coalgebra map (antipode compatibility is then
/// automatic, but checked anyway for certification).
inline bool is_hopf_iso(const LinMap& f, const FinHopf& A, const FinHopf& B) {
    return f.is_bijective() && is_algebra_map(f, A, B) && is_coalgebra_map(f, A, B) &&
           commutes_with_antipode(f, A, B);
}

inline bool is_hopf_map(const LinMap& f, const FinHopf& A, const FinHopf& B) {
    return is_algebra_map(f, A, B) && is_coalgebra_map(f, A, B) &&
           commutes_with_antipode(f, A, B);
}

inline nlohmann::json linmap_to_json(const LinMap& f) {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& col : f.cols) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& [i, v] : col) c.push_back({i, v.to_string()});
        cols.push_back(std::move(c));
    }
    return {{"src", f.src_dim}, {"dst", f.dst_dim}, {"cols", std::move(cols)}};
}

inline nlohmann::json svec_to_json(const SVec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [i, c] : v) out.push_back({i, c.to_string()});
    return out;
}

inline SVec svec_from_json(const nlohmann::json& j) {
    SVec v;
    for (const auto& entry : j)
        v.emplace(entry.at(0).get<int>(), Cyc::parse(entry.at(1).get<std::string>()));
    return v;
}

inline LinMap linmap_from_json(const nlohmann::json& j) {
    LinMap f;
    f.src_dim = j.at("src").get<int>();
    f.dst_dim = j.at("dst").get<int>();
    for (const auto& col : j.at("cols")) {
        SRow row;
        for (const auto& entry : col)
            row.emplace_back(entry.at(0).get<int>(), Cyc::parse(entry.at(1).get<std::string>()));
        f.cols.push_back(std::move(row));
    }
    if (static_cast<int>(f.cols.size()) != f.src_dim)
        throw std::invalid_argument("linear map column count disagrees with source dimension");
    return f;
}

/// Record the inclusion/projection of an extension in the provenance, so the
/// sequence survives serialization and can be re-certified after a reload.
inline void attach_sequence_maps(FinHopf& H, const LinMap& iota, const LinMap& pi) {
    H.provenance["sequence"] = {{"iota", linmap_to_json(iota)}, {"pi", linmap_to_json(pi)}};
}

inline LinMap sequence_iota(const FinHopf& H) {
    return linmap_from_json(H.provenance.at("sequence").at("iota"));
}

inline LinMap sequence_pi(const FinHopf& H) {
    return linmap_from_json(H.provenance.at("sequence").at("pi"));
}

/// Span of the given vectors is stable under the left adjoint action
/// h . v = h1 v S(h2) of every basis element h.
inline bool left_adjoint_stable(const FinHopf& H, const std::vector<Vec>& vecs) {
    Echelon span;
    for (const auto& v : vecs) span.insert(sv_from_dense(v));
    for (int h = 0; h < H.dim; ++h)
        for (const auto& v : vecs) {
            SVec acc;
            for (const auto& [h12, c] : H.comult[static_cast<size_t>(h)]) {
                auto [h1, h2] = H.split_pair(h12);
                for (const auto& [s, cs] : H.antipode[static_cast<size_t>(h2)]) {
                    // h1 * v * s
                    for (int j = 0; j < H.dim; ++j) {
                        if (v[static_cast<size_t>(j)].is_zero()) continue;
                        for (const auto& [m, cm] : H.mrow(h1, j))
                            for (const auto& [k, ck] : H.mrow(m, s))
                                detail::acc_add(acc, k, c * cs * cm * ck * v[static_cast<size_t>(j)]);
                    }
                }
            }
            if (!span.contains(acc)) return false;
        }
    return true;
}

}  // namespace hopf
