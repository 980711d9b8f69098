#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/perm.hpp"

namespace hopf {

/// Finitely generated permutation group, not yet enumerated. Safe to hold for
/// groups far beyond the element cap (only generators are stored).
struct PermGroup {
    int degree = 0;
    std::vector<Perm> gens;

    static PermGroup from_strings(int degree, const std::vector<std::string>& gen_strs) {
        PermGroup g;
        g.degree = degree;
        for (const auto& s : gen_strs) g.gens.push_back(perm_parse(s, degree));
        return g;
    }
};

inline long element_cap_from_env(long fallback = 100000) {
    if (const char* v = std::getenv("HOPF_ELEMENT_CAP")) {
        long cap = std::atol(v);
        if (cap > 0) return cap;
    }
    return fallback;
}

/// Fully enumerated group: elements sorted lexicographically by image vector
/// (so the identity is always index 0), with multiplication and inverse
/// tables. All downstream element indices refer to this order.
class GroupTable {
  public:
    int degree = 0;
    std::vector<Perm> gens;
    std::vector<Perm> elements;

    static GroupTable enumerate(const PermGroup& g, long cap = element_cap_from_env()) {
        std::set<Perm> seen;
        seen.insert(perm_identity(g.degree));
        std::vector<Perm> frontier(seen.begin(), seen.end());
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const auto& p : frontier) {
                for (const auto& s : g.gens) {
                    Perm q = perm_mul(p, s);
                    if (seen.insert(q).second) {
                        next.push_back(std::move(q));
                        if (static_cast<long>(seen.size()) > cap)
                            throw std::runtime_error(
                                "group element cap exceeded (HOPF_ELEMENT_CAP=" +
                                std::to_string(cap) + ")");
                    }
                }
            }
            frontier = std::move(next);
        }
        GroupTable t;
        t.degree = g.degree;
        t.gens = g.gens;
        t.elements.assign(seen.begin(), seen.end());
        t.build_tables();
        return t;
    }

    int size() const { return static_cast<int>(elements.size()); }

    int index_of(const Perm& p) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), p);
        if (it == elements.end() || *it != p)
            throw std::invalid_argument("permutation not in group: " + perm_to_string(p));
        return static_cast<int>(it - elements.begin());
    }
    bool contains(const Perm& p) const {
        auto it = std::lower_bound(elements.begin(), elements.end(), p);
        return it != elements.end() && *it == p;
    }

    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * elements.size() + static_cast<size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }
    int identity() const { return 0; }  // lex-least image vector

    long order_of(int a) const {
        long n = 1;
        int cur = a;
        while (cur != 0) {
            cur = mul(cur, a);
            ++n;
        }
        return n;
    }

    long exponent() const {
        long e = 1;
        for (int i = 0; i < size(); ++i) e = std::lcm(e, order_of(i));
        return e;
    }

    bool is_abelian() const {
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (mul(i, j) != mul(j, i)) return false;
        return true;
    }

    std::vector<int> gen_indices() const {
        std::vector<int> out;
        for (const auto& g : gens) out.push_back(index_of(g));
        return out;
    }

    /// Subgroup generated by the given element indices, as a sorted index set.
    /// Positive words suffice: in a finite group s^-1 = s^(ord-1).
    std::vector<int> closure(const std::vector<int>& seed) const {
        std::set<int> in{0};
        std::vector<int> frontier{0};
        while (!frontier.empty()) {
            std::vector<int> next;
            for (int a : frontier)
                for (int s : seed) {
                    int q = mul(a, s);
                    if (in.insert(q).second) next.push_back(q);
                }
            frontier = std::move(next);
        }
        return std::vector<int>(in.begin(), in.end());
    }

    bool is_subgroup(const std::vector<int>& elems) const {
        std::set<int> in(elems.begin(), elems.end());
        if (!in.count(0)) return false;
        for (int a : elems)
            for (int b : elems)
                if (!in.count(mul(a, b))) return false;
        for (int a : elems)
            if (!in.count(inv(a))) return false;
        return true;
    }

    /// Elements commuting with every element of S.
    std::vector<int> centralizer(const std::vector<int>& S) const {
        std::vector<int> out;
        for (int c = 0; c < size(); ++c) {
            bool ok = true;
            for (int s : S)
                if (mul(c, s) != mul(s, c)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(c);
        }
        return out;
    }

    std::vector<int> center() const {
        std::vector<int> all(static_cast<size_t>(size()));
        std::iota(all.begin(), all.end(), 0);
        return centralizer(all);
    }

    bool is_normal(const std::vector<int>& S) const {
        std::set<int> in(S.begin(), S.end());
        for (int g = 0; g < size(); ++g)
            for (int s : S)
                if (!in.count(mul(mul(g, s), inv(g)))) return false;
        return true;
    }

    std::vector<std::vector<int>> conjugacy_classes() const {
        std::vector<std::vector<int>> classes;
        std::vector<bool> done(static_cast<size_t>(size()), false);
        for (int a = 0; a < size(); ++a) {
            if (done[static_cast<size_t>(a)]) continue;
            std::set<int> cls;
            for (int g = 0; g < size(); ++g) cls.insert(mul(mul(g, a), inv(g)));
            for (int x : cls) done[static_cast<size_t>(x)] = true;
            classes.emplace_back(cls.begin(), cls.end());
        }
        return classes;
    }

    std::vector<int> normal_closure(const std::vector<int>& seed) const {
        std::set<int> conj;
        for (int s : seed)
            for (int g = 0; g < size(); ++g) conj.insert(mul(mul(g, s), inv(g)));
        return closure(std::vector<int>(conj.begin(), conj.end()));
    }

    /// No proper nontrivial normal subgroup; decided by normal closures of
    /// conjugacy-class representatives (complete for enumerated groups).
    bool is_simple() const {
        if (size() == 1) return false;
        for (const auto& cls : conjugacy_classes()) {
            if (cls.size() == 1 && cls[0] == 0) continue;
            auto nc = normal_closure({cls[0]});
            if (static_cast<int>(nc.size()) != size()) return false;
        }
        return true;
    }

    /// All normal subgroups, as sorted index sets, ordered by (size, content).
    /// Computed as joins of normal closures of class representatives.
    std::vector<std::vector<int>> normal_subgroups() const {
        std::vector<std::vector<int>> closures;
        for (const auto& cls : conjugacy_classes()) closures.push_back(normal_closure({cls[0]}));
        std::set<std::vector<int>> out;
        out.insert({0});
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<int>> cur(out.begin(), out.end());
            for (const auto& H : cur)
                for (const auto& C : closures) {
                    std::vector<int> seed = H;
                    seed.insert(seed.end(), C.begin(), C.end());
                    if (out.insert(closure(seed)).second) grew = true;
                }
        }
        std::vector<std::vector<int>> res(out.begin(), out.end());
        std::stable_sort(res.begin(), res.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return res;
    }

    /// Every subgroup (desk-scale only), ordered by (size, content).
    std::vector<std::vector<int>> all_subgroups() const {
        std::set<std::vector<int>> out;
        out.insert({0});
        std::vector<std::vector<int>> frontier(out.begin(), out.end());
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& H : frontier) {
                for (int g = 1; g < size(); ++g) {
                    if (std::binary_search(H.begin(), H.end(), g)) continue;
                    std::vector<int> seed = H;
                    seed.push_back(g);
                    auto K = closure(seed);
                    if (out.insert(K).second) next.push_back(std::move(K));
                }
            }
            frontier = std::move(next);
        }
        std::vector<std::vector<int>> res(out.begin(), out.end());
        std::stable_sort(res.begin(), res.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return res;
    }

    /// Left regular representation; element order of the result matches the
    /// lex order of its own degree-|G| permutations, not this group's order.
    PermGroup regular_representation() const {
        PermGroup reg;
        reg.degree = size();
        for (const auto& g : gens) {
            int gi = index_of(g);
            Perm p(static_cast<size_t>(size()));
            for (int x = 0; x < size(); ++x) p[static_cast<size_t>(x)] = mul(gi, x);
            reg.gens.push_back(std::move(p));
        }
        return reg;
    }

  private:
    std::vector<int> mul_;
    std::vector<int> inv_;

    void build_tables() {
        size_t n = elements.size();
        if (n > 4096) throw std::runtime_error("group too large for dense tables");
        std::map<Perm, int> idx;
        for (size_t i = 0; i < n; ++i) idx[elements[i]] = static_cast<int>(i);
        mul_.resize(n * n);
        inv_.resize(n);
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b)
                mul_[a * n + b] = idx.at(perm_mul(elements[a], elements[b]));
            inv_[a] = idx.at(perm_inv(elements[a]));
        }
        if (!perm_is_identity(elements[0]))
            throw std::logic_error("identity not at index 0");
    }
};

/// Group automorphism as an index map on an enumerated group.
struct GroupAut {
    std::vector<int> img;  // img[a] = image of element a

    static GroupAut identity(const GroupTable& G) {
        GroupAut f;
        f.img.resize(static_cast<size_t>(G.size()));
        std::iota(f.img.begin(), f.img.end(), 0);
        return f;
    }
    /// Ad(c): a -> c a c^-1.
    static GroupAut conjugation(const GroupTable& G, int c) {
        GroupAut f;
        f.img.resize(static_cast<size_t>(G.size()));
        for (int a = 0; a < G.size(); ++a) f.img[static_cast<size_t>(a)] = G.mul(G.mul(c, a), G.inv(c));
        return f;
    }
    /// Ad(c) for an external permutation normalizing G (index_of rejects c
    /// that fail to normalize).
    static GroupAut conjugation(const GroupTable& G, const Perm& c) {
        GroupAut f;
        f.img.resize(static_cast<size_t>(G.size()));
        Perm ci = perm_inv(c);
        for (int a = 0; a < G.size(); ++a)
            f.img[static_cast<size_t>(a)] =
                G.index_of(perm_mul(perm_mul(c, G.elements[static_cast<size_t>(a)]), ci));
        return f;
    }
    bool verify(const GroupTable& G) const {
        std::vector<bool> hit(img.size(), false);
        for (int v : img) {
            if (v < 0 || static_cast<size_t>(v) >= img.size() || hit[static_cast<size_t>(v)]) return false;
            hit[static_cast<size_t>(v)] = true;
        }
        for (int a = 0; a < G.size(); ++a)
            for (int b = 0; b < G.size(); ++b)
                if (img[static_cast<size_t>(G.mul(a, b))] != G.mul(img[static_cast<size_t>(a)], img[static_cast<size_t>(b)]))
                    return false;
        return true;
    }
    /// Fixes every element of S pointwise.
    bool fixes(const std::vector<int>& S) const {
        for (int s : S)
            if (img[static_cast<size_t>(s)] != s) return false;
        return true;
    }
    GroupAut compose(const GroupAut& o) const {  // this after o
        GroupAut f;
        f.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) f.img[i] = img[static_cast<size_t>(o.img[i])];
        return f;
    }
    GroupAut inverse() const {
        GroupAut f;
        f.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) f.img[static_cast<size_t>(img[i])] = static_cast<int>(i);
        return f;
    }
};

/// The automorphisms Ad(c) with c centralizing S: the inner automorphisms of
/// the host that restrict to the identity on S.
inline std::vector<GroupAut> inner_automorphisms_fixing(const GroupTable& N,
                                                        const std::vector<int>& S) {
    std::vector<GroupAut> out;
    for (int c : N.centralizer(S)) out.push_back(GroupAut::conjugation(N, c));
    return out;
}

}  // namespace hopf
