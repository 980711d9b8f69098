#pragma once

#include <stdexcept>
#include <vector>

#include "hopf/group.hpp"

namespace hopf {

/// Matched pair of groups (F, G): a left action |> of G on the set F and a
/// right action <| of F on the set G satisfying
///   g |> (xy) = (g |> x)((g <| x) |> y)
///   (gh) <| x = (g <| (h |> x))(h <| x)
/// with both maps normalized at identities. Stored as dense index tables.
struct MatchedPair {
    GroupTable F, G;
    std::vector<std::vector<int>> l_act;  // l_act[g][x] = g |> x, an F-index
    std::vector<std::vector<int>> r_act;  // r_act[g][x] = g <| x, a G-index

    int lact(int g, int x) const { return l_act[static_cast<size_t>(g)][static_cast<size_t>(x)]; }
    int ract(int g, int x) const { return r_act[static_cast<size_t>(g)][static_cast<size_t>(x)]; }

    bool verify() const {
        int nF = F.size(), nG = G.size();
        for (int g = 0; g < nG; ++g) {
            if (lact(g, 0) != 0) return false;  // g |> e = e
            if (ract(g, 0) != g) return false;  // g <| e = g
        }
        for (int x = 0; x < nF; ++x) {
            if (lact(0, x) != x) return false;  // e |> x = x
            if (ract(0, x) != 0) return false;  // e <| x = e
        }
        for (int g = 0; g < nG; ++g)
            for (int h = 0; h < nG; ++h)
                for (int x = 0; x < nF; ++x) {
                    // action axioms
                    if (lact(G.mul(g, h), x) != lact(g, lact(h, x))) return false;
                    // (gh) <| x = (g <| (h |> x))(h <| x)
                    if (ract(G.mul(g, h), x) != G.mul(ract(g, lact(h, x)), ract(h, x)))
                        return false;
                }
        for (int g = 0; g < nG; ++g)
            for (int x = 0; x < nF; ++x)
                for (int y = 0; y < nF; ++y) {
                    if (ract(g, F.mul(x, y)) != ract(ract(g, x), y)) return false;
                    // g |> (xy) = (g |> x)((g <| x) |> y)
                    if (lact(g, F.mul(x, y)) != F.mul(lact(g, x), lact(ract(g, x), y)))
                        return false;
                }
        return true;
    }
};

/// Matched pair from an exact factorization L = FG, F cap G = {e}: each
/// product g x (g in G, x in F) decomposes uniquely as (g |> x)(g <| x).
inline MatchedPair matched_pair_from_factorization(const GroupTable& L, const PermGroup& Fg,
                                                   const PermGroup& Gg) {
    MatchedPair mp;
    mp.F = GroupTable::enumerate(Fg);
    mp.G = GroupTable::enumerate(Gg);
    for (const auto& p : mp.F.elements)
        if (!L.contains(p)) throw std::invalid_argument("F is not a subgroup of L");
    for (const auto& p : mp.G.elements)
        if (!L.contains(p)) throw std::invalid_argument("G is not a subgroup of L");
    if (static_cast<long long>(mp.F.size()) * mp.G.size() != L.size())
        throw std::invalid_argument("|F| * |G| != |L|: not an exact factorization");
    for (const auto& p : mp.F.elements)
        if (mp.G.contains(p) && !perm_is_identity(p))
            throw std::invalid_argument("F and G intersect nontrivially");

    int nF = mp.F.size(), nG = mp.G.size();
    mp.l_act.assign(static_cast<size_t>(nG), std::vector<int>(static_cast<size_t>(nF), -1));
    mp.r_act.assign(static_cast<size_t>(nG), std::vector<int>(static_cast<size_t>(nF), -1));
    for (int g = 0; g < nG; ++g) {
        for (int x = 0; x < nF; ++x) {
            Perm gx = perm_mul(mp.G.elements[static_cast<size_t>(g)], mp.F.elements[static_cast<size_t>(x)]);
            bool found = false;
            for (int xp = 0; xp < nF; ++xp) {
                Perm rest = perm_mul(perm_inv(mp.F.elements[static_cast<size_t>(xp)]), gx);
                if (mp.G.contains(rest)) {
                    mp.l_act[static_cast<size_t>(g)][static_cast<size_t>(x)] = xp;
                    mp.r_act[static_cast<size_t>(g)][static_cast<size_t>(x)] = mp.G.index_of(rest);
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("factorization decomposition failed");
        }
    }
    if (!mp.verify()) throw std::logic_error("factorization produced an invalid matched pair");
    return mp;
}

}  // namespace hopf
