#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "hopf/cyclotomic.hpp"
#include "hopf/group.hpp"

namespace hopf {

/// Invariant-factor presentation of a finite abelian group: independent
/// generators gens[j] of order orders[j], orders[0] | orders[1] | ...; every
/// element has unique mixed-radix coordinates coords[e][j] in [0, orders[j]).
struct AbelianDecomp {
    std::vector<int> gens;
    std::vector<long> orders;
    std::vector<std::vector<long>> coords;
};

namespace detail {

/// Smith normal form of the k x m relation matrix (columns = relations),
/// tracking inv_u with U * M * V = D so that new generator j has exponent
/// vector inv_u column j over the old generators. Returns the diagonal.
inline std::vector<long long> smith_diagonal(std::vector<std::vector<long long>>& M, size_t k,
                                             std::vector<std::vector<long long>>& inv_u) {
    size_t m = M.empty() ? 0 : M[0].size();
    inv_u.assign(k, std::vector<long long>(k, 0));
    for (size_t i = 0; i < k; ++i) inv_u[i][i] = 1;

    auto row_swap = [&](size_t a, size_t b) {
        std::swap(M[a], M[b]);
        for (size_t i = 0; i < k; ++i) std::swap(inv_u[i][a], inv_u[i][b]);  // columns of U^-1
    };
    auto row_addmul = [&](size_t dst, size_t src, long long c) {  // row dst += c * row src
        for (size_t j = 0; j < m; ++j) M[dst][j] += c * M[src][j];
        for (size_t i = 0; i < k; ++i) inv_u[i][src] -= c * inv_u[i][dst];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < k; ++i) std::swap(M[i][a], M[i][b]);
    };
    auto col_addmul = [&](size_t dst, size_t src, long long c) {
        for (size_t i = 0; i < k; ++i) M[i][dst] += c * M[i][src];
    };

    size_t t = 0;
    while (t < k && t < m) {
        // Find a nonzero pivot of least magnitude in the remaining block.
        size_t pi = t, pj = t;
        long long best = 0;
        for (size_t i = t; i < k; ++i)
            for (size_t j = t; j < m; ++j)
                if (M[i][j] != 0 && (best == 0 || std::abs(M[i][j]) < std::abs(best))) {
                    best = M[i][j];
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);
        bool clean = true;
        for (size_t i = t + 1; i < k; ++i)
            if (M[i][t] != 0) {
                row_addmul(i, t, -(M[i][t] / M[t][t]));
                if (M[i][t] != 0) clean = false;
            }
        for (size_t j = t + 1; j < m; ++j)
            if (M[t][j] != 0) {
                col_addmul(j, t, -(M[t][j] / M[t][t]));
                if (M[t][j] != 0) clean = false;
            }
        if (!clean) continue;  // remainders left; repeat with smaller pivot
        // Pivot must divide everything below-right for the divisibility chain.
        bool divides = true;
        for (size_t i = t + 1; i < k && divides; ++i)
            for (size_t j = t + 1; j < m && divides; ++j)
                if (M[i][j] % M[t][t] != 0) {
                    row_addmul(t, i, 1);
                    divides = false;
                }
        if (!divides) continue;
        if (M[t][t] < 0) {
            for (size_t j = t; j < m; ++j) M[t][j] = -M[t][j];
            for (size_t i = 0; i < k; ++i) inv_u[i][t] = -inv_u[i][t];
        }
        ++t;
    }
    std::vector<long long> diag;
    for (size_t i = 0; i < t; ++i) diag.push_back(M[i][i]);
    return diag;
}

}  // namespace detail

inline AbelianDecomp abelian_decomposition(const GroupTable& G) {
    if (!G.is_abelian()) throw std::invalid_argument("abelian decomposition of nonabelian group");
    std::vector<int> gidx = G.gen_indices();
    if (gidx.empty()) gidx.push_back(0);
    size_t k = gidx.size();
    std::vector<long> ords;
    long long box = 1;
    for (int g : gidx) {
        ords.push_back(G.order_of(g));
        box *= ords.back();
        if (box > 100000) throw std::runtime_error("abelian relation search box too large");
    }

    // Relation lattice of the generating tuple: order relations plus all
    // collisions discovered while sweeping the exponent box.
    std::set<std::vector<long long>> rels;
    for (size_t i = 0; i < k; ++i) {
        std::vector<long long> r(k, 0);
        r[i] = ords[i];
        rels.insert(r);
    }
    std::map<int, std::vector<long long>> first_seen;
    std::vector<long long> tup(k, 0);
    while (true) {
        int e = 0;
        for (size_t i = 0; i < k; ++i)
            for (long long c = 0; c < tup[i]; ++c) e = G.mul(e, gidx[i]);
        auto it = first_seen.find(e);
        if (it == first_seen.end()) {
            first_seen.emplace(e, tup);
        } else {
            std::vector<long long> d(k);
            bool nonzero = false;
            for (size_t i = 0; i < k; ++i) {
                d[i] = tup[i] - it->second[i];
                nonzero = nonzero || d[i] != 0;
            }
            if (nonzero) rels.insert(d);
        }
        size_t pos = 0;
        while (pos < k && ++tup[pos] == ords[pos]) tup[pos++] = 0;
        if (pos == k) break;
    }
    if (static_cast<int>(first_seen.size()) != G.size())
        throw std::logic_error("generators do not generate the group");

    // Columns = relations.
    std::vector<std::vector<long long>> M(k, std::vector<long long>(rels.size(), 0));
    size_t col = 0;
    for (const auto& r : rels) {
        for (size_t i = 0; i < k; ++i) M[i][col] = r[i];
        ++col;
    }
    std::vector<std::vector<long long>> inv_u;
    auto diag = detail::smith_diagonal(M, k, inv_u);
    if (diag.size() != k) throw std::logic_error("relation lattice not full rank");

    AbelianDecomp dec;
    for (size_t j = 0; j < k; ++j) {
        if (diag[j] == 1) continue;
        int h = 0;
        for (size_t i = 0; i < k; ++i) {
            long long n = ords[i];
            long long e = ((inv_u[i][j] % n) + n) % n;
            for (long long c = 0; c < e; ++c) h = G.mul(h, gidx[i]);
        }
        dec.gens.push_back(h);
        dec.orders.push_back(static_cast<long>(diag[j]));
        if (G.order_of(h) != diag[j]) throw std::logic_error("invariant factor order mismatch");
    }

    // Coordinates: sweep the (now exact) mixed-radix box; must be a bijection.
    dec.coords.assign(static_cast<size_t>(G.size()), {});
    std::vector<bool> assigned(static_cast<size_t>(G.size()), false);
    long long total = 1;
    for (long d : dec.orders) total *= d;
    if (total != G.size()) throw std::logic_error("invariant factors do not multiply to |G|");
    std::vector<long> t2(dec.orders.size(), 0);
    for (long long cnt = 0; cnt < total; ++cnt) {
        int e = 0;
        for (size_t i = 0; i < dec.gens.size(); ++i)
            for (long c = 0; c < t2[i]; ++c) e = G.mul(e, dec.gens[i]);
        if (assigned[static_cast<size_t>(e)])
            throw std::logic_error("coordinate collision in abelian decomposition");
        assigned[static_cast<size_t>(e)] = true;
        dec.coords[static_cast<size_t>(e)] = std::vector<long>(t2.begin(), t2.end());
        size_t pos = 0;
        while (pos < t2.size() && ++t2[pos] == dec.orders[pos]) t2[pos++] = 0;
    }
    return dec;
}

/// Full character table of a finite abelian group over Q(zeta_N); requires
/// exponent | N. Characters are indexed in the same mixed-radix scheme as the
/// element coordinates, so the character group operations are coordinate-wise.
class CharacterTable {
  public:
    const CycField* F = nullptr;
    AbelianDecomp dec;

    static CharacterTable build(const GroupTable& G, const CycField* F) {
        CharacterTable t;
        t.F = F;
        t.dec = abelian_decomposition(G);
        t.n_ = G.size();
        for (long d : t.dec.orders)
            if (F->conductor % d != 0)
                throw std::runtime_error(
                    "conductor lacks required roots of unity; enlarge the scene conductor");
        t.val_.assign(static_cast<size_t>(t.n_), std::vector<Cyc>(static_cast<size_t>(t.n_)));
        for (int chi = 0; chi < t.n_; ++chi) {
            std::vector<long> m = t.decode(chi);
            for (int e = 0; e < t.n_; ++e) {
                const auto& a = t.dec.coords[static_cast<size_t>(e)];
                long exp = 0;
                for (size_t j = 0; j < m.size(); ++j)
                    exp = (exp + m[j] * a[j] % F->conductor * (F->conductor / t.dec.orders[j])) % F->conductor;
                t.val_[static_cast<size_t>(chi)][static_cast<size_t>(e)] = Cyc::root_of_unity(F, exp);
            }
        }
        return t;
    }

    int count() const { return n_; }
    const Cyc& value(int chi, int elem) const {
        return val_[static_cast<size_t>(chi)][static_cast<size_t>(elem)];
    }

    std::vector<long> decode(int chi) const {
        std::vector<long> m(dec.orders.size());
        for (size_t j = 0; j < dec.orders.size(); ++j) {
            m[j] = chi % dec.orders[j];
            chi /= static_cast<int>(dec.orders[j]);
        }
        return m;
    }
    int encode(const std::vector<long>& m) const {
        int chi = 0;
        for (size_t j = dec.orders.size(); j-- > 0;)
            chi = chi * static_cast<int>(dec.orders[j]) + static_cast<int>(m[j]);
        return chi;
    }

    int trivial_char() const { return 0; }
    int char_mul(int a, int b) const {
        auto ma = decode(a), mb = decode(b);
        for (size_t j = 0; j < ma.size(); ++j) ma[j] = (ma[j] + mb[j]) % dec.orders[j];
        return encode(ma);
    }
    int char_inv(int a) const {
        auto m = decode(a);
        for (size_t j = 0; j < m.size(); ++j) m[j] = (dec.orders[j] - m[j]) % dec.orders[j];
        return encode(m);
    }
    /// chi -> chi . f (precompose character with an automorphism of the group).
    int char_pullback(int chi, const GroupAut& f) const {
        for (int cand = 0; cand < n_; ++cand) {
            bool ok = true;
            for (int e = 0; e < n_ && ok; ++e)
                ok = value(cand, e) == value(chi, f.img[static_cast<size_t>(e)]);
            if (ok) return cand;
        }
        throw std::logic_error("character pullback not found (map is not an automorphism?)");
    }

  private:
    int n_ = 0;
    std::vector<std::vector<Cyc>> val_;
};

/// 2-cocycle on the character group of an abelian group S, as a dense table.
struct TwoCocycle {
    CharacterTable chars;
    std::vector<std::vector<Cyc>> w;  // w[chi][eta]

    const Cyc& operator()(int chi, int eta) const {
        return w[static_cast<size_t>(chi)][static_cast<size_t>(eta)];
    }

    bool is_cocycle() const {
        int n = chars.count();
        const CycField* F = chars.F;
        for (int a = 0; a < n; ++a) {
            if (!((*this)(chars.trivial_char(), a) == Cyc::one(F))) return false;
            if (!((*this)(a, chars.trivial_char()) == Cyc::one(F))) return false;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!((*this)(a, b) * (*this)(chars.char_mul(a, b), c) ==
                          (*this)(b, c) * (*this)(a, chars.char_mul(b, c))))
                        return false;
        return true;
    }

    /// Alternating bicharacter beta(a,b) = w(a,b)/w(b,a); it determines the
    /// cohomology class of w.
    Cyc alternating(int a, int b) const { return (*this)(a, b) * (*this)(b, a).inv(); }

    bool is_nondegenerate() const {
        int n = chars.count();
        for (int a = 0; a < n; ++a) {
            if (a == chars.trivial_char()) continue;
            bool radical = true;
            for (int b = 0; b < n && radical; ++b)
                radical = alternating(a, b) == Cyc::one(chars.F);
            if (radical) return false;
        }
        return true;
    }

    /// Whether the class of w is fixed by the automorphism f of S (compared
    /// via the alternating form, which classifies the class).
    bool invariant_under(const GroupAut& f) const {
        int n = chars.count();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!(alternating(chars.char_pullback(a, f), chars.char_pullback(b, f)) ==
                      alternating(a, b)))
                    return false;
        return true;
    }
};

inline TwoCocycle trivial_two_cocycle(const GroupTable& S, const CycField* F) {
    TwoCocycle t;
    t.chars = CharacterTable::build(S, F);
    int n = t.chars.count();
    t.w.assign(static_cast<size_t>(n), std::vector<Cyc>(static_cast<size_t>(n), Cyc::one(F)));
    return t;
}

/// Nondegenerate 2-cocycle on the character group of S. Requires S of square
/// type A x A, detected from the invariant factors pairing up; the cocycle is
/// the standard pairing of the two halves, e.g. for S = Z/2 x Z/2 it is
/// w(chi, eta) = (-1)^(chi_2 * eta_1) in coordinates.
inline TwoCocycle nondegenerate_two_cocycle(const GroupTable& S, const CycField* F) {
    TwoCocycle t;
    t.chars = CharacterTable::build(S, F);
    const auto& d = t.chars.dec.orders;
    if (d.size() % 2 != 0) throw std::invalid_argument("S admits no A x A decomposition");
    for (size_t i = 0; i + 1 < d.size(); i += 2)
        if (d[i] != d[i + 1]) throw std::invalid_argument("S admits no A x A decomposition");
    int n = t.chars.count();
    long N = F->conductor;
    t.w.assign(static_cast<size_t>(n), std::vector<Cyc>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a) {
        auto ma = t.chars.decode(a);
        for (int b = 0; b < n; ++b) {
            auto mb = t.chars.decode(b);
            long exp = 0;
            for (size_t i = 0; i + 1 < d.size(); i += 2)
                exp = (exp + ma[i + 1] * mb[i] % N * (N / d[i])) % N;
            t.w[static_cast<size_t>(a)][static_cast<size_t>(b)] = Cyc::root_of_unity(F, exp);
        }
    }
    return t;
}

}  // namespace hopf
