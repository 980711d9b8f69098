#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/abelian.hpp"
#include "hopf/fin_hopf.hpp"

namespace hopf {

/// Invertible element J of H x H used to deform the comultiplication.
/// Both J and its inverse are stored; constructors fill both.
struct Twist {
    SVec J;     // over pair indices of the host
    SVec Jinv;
    nlohmann::json provenance;
};

namespace detail {

/// Product of two sparse tensor-square elements of H x H.
inline SVec tensor_square_mul(const FinHopf& H, const SVec& X, const SVec& Y) {
    SVec acc;
    for (const auto& [ab, c] : X) {
        int a = ab / H.dim, b = ab % H.dim;
        for (const auto& [cd, d] : Y) {
            int p = cd / H.dim, q = cd % H.dim;
            Cyc f = c * d;
            for (const auto& [u, cu] : H.mrow(a, p))
                for (const auto& [v, cv] : H.mrow(b, q))
                    acc_add(acc, H.pair_index(u, v), f * cu * cv);
        }
    }
    return acc;
}

inline SVec tensor_square_unit(const FinHopf& H) {
    SVec one;
    for (int a = 0; a < H.dim; ++a)
        for (int b = 0; b < H.dim; ++b) {
            Cyc c = H.unit[static_cast<size_t>(a)] * H.unit[static_cast<size_t>(b)];
            if (!c.is_zero()) one.emplace(H.pair_index(a, b), c);
        }
    return one;
}

/// Triple-tensor product with long long composite indices (a*dim+b)*dim+c.
inline std::map<long long, Cyc> tensor_cube_mul(const FinHopf& H, const std::map<long long, Cyc>& X,
                                                const std::map<long long, Cyc>& Y) {
    std::map<long long, Cyc> acc;
    long long D = H.dim;
    for (const auto& [abc, c0] : X) {
        int a = static_cast<int>(abc / (D * D)), b = static_cast<int>((abc / D) % D),
            c = static_cast<int>(abc % D);
        for (const auto& [pqr, d0] : Y) {
            int p = static_cast<int>(pqr / (D * D)), q = static_cast<int>((pqr / D) % D),
                r = static_cast<int>(pqr % D);
            Cyc f = c0 * d0;
            for (const auto& [u, cu] : H.mrow(a, p))
                for (const auto& [v, cv] : H.mrow(b, q))
                    for (const auto& [w, cw] : H.mrow(c, r))
                        acc_add_ll(acc, (static_cast<long long>(u) * D + v) * D + w,
                                   f * cu * cv * cw);
        }
    }
    return acc;
}

/// (Delta x id)(X) for X in H x H, into triple indices.
inline std::map<long long, Cyc> comult_left(const FinHopf& H, const SVec& X) {
    std::map<long long, Cyc> out;
    long long D = H.dim;
    for (const auto& [ab, c] : X) {
        int a = ab / H.dim, b = ab % H.dim;
        for (const auto& [a12, d] : H.comult[static_cast<size_t>(a)]) {
            int a1 = a12 / H.dim, a2 = a12 % H.dim;
            acc_add_ll(out, (static_cast<long long>(a1) * D + a2) * D + b, c * d);
        }
    }
    return out;
}

/// (id x Delta)(X) for X in H x H, into triple indices.
inline std::map<long long, Cyc> comult_right(const FinHopf& H, const SVec& X) {
    std::map<long long, Cyc> out;
    long long D = H.dim;
    for (const auto& [ab, c] : X) {
        int a = ab / H.dim, b = ab % H.dim;
        for (const auto& [b12, d] : H.comult[static_cast<size_t>(b)]) {
            int b1 = b12 / H.dim, b2 = b12 % H.dim;
            acc_add_ll(out, (static_cast<long long>(a) * D + b1) * D + b2, c * d);
        }
    }
    return out;
}

/// Embed X in H x H into H x H x H as X x 1 (slots 1,2) or 1 x X (slots 2,3).
inline std::map<long long, Cyc> embed12(const FinHopf& H, const SVec& X) {
    std::map<long long, Cyc> out;
    long long D = H.dim;
    for (const auto& [ab, c] : X) {
        int a = ab / H.dim, b = ab % H.dim;
        for (int u = 0; u < H.dim; ++u) {
            Cyc f = c * H.unit[static_cast<size_t>(u)];
            if (!f.is_zero()) acc_add_ll(out, (static_cast<long long>(a) * D + b) * D + u, f);
        }
    }
    return out;
}
inline std::map<long long, Cyc> embed23(const FinHopf& H, const SVec& X) {
    std::map<long long, Cyc> out;
    long long D = H.dim;
    for (const auto& [ab, c] : X) {
        int a = ab / H.dim, b = ab % H.dim;
        for (int u = 0; u < H.dim; ++u) {
            Cyc f = c * H.unit[static_cast<size_t>(u)];
            if (!f.is_zero()) acc_add_ll(out, (static_cast<long long>(u) * D + a) * D + b, f);
        }
    }
    return out;
}

}  // namespace detail

/// Counit normalization, invertibility, and the comultiplication 2-cocycle
/// identity (Delta x id)(J) (J x 1) = (id x Delta)(J) (1 x J).
inline bool verify_twist(const FinHopf& H, const Twist& T, std::string* witness = nullptr) {
    auto fail = [&](const char* w) {
        if (witness) *witness = w;
        return false;
    };
    // (eps x id) J = 1 = (id x eps) J.
    SVec left, right;
    for (const auto& [ab, c] : T.J) {
        int a = ab / H.dim, b = ab % H.dim;
        detail::acc_add(left, b, c * H.counit[static_cast<size_t>(a)]);
        detail::acc_add(right, a, c * H.counit[static_cast<size_t>(b)]);
    }
    if (left != sv_from_dense(H.unit)) return fail("counit normalization fails on the left leg");
    if (right != sv_from_dense(H.unit)) return fail("counit normalization fails on the right leg");

    if (detail::tensor_square_mul(H, T.J, T.Jinv) != detail::tensor_square_unit(H))
        return fail("stored inverse is not an inverse");

    auto lhs = detail::tensor_cube_mul(H, detail::comult_left(H, T.J), detail::embed12(H, T.J));
    auto rhs = detail::tensor_cube_mul(H, detail::comult_right(H, T.J), detail::embed23(H, T.J));
    if (lhs != rhs) return fail("comultiplication 2-cocycle identity fails");
    if (witness) witness->clear();
    return true;
}

/// J = sum over character pairs of w(chi,eta) e_chi x e_eta, supported on the
/// group-algebra image of the abelian subgroup S of the host's basis group.
/// The host must have the group-algebra basis of G (basis index == element
/// index). e_chi are the orthogonal idempotents of kS.
inline Twist twist_from_cocycle(const FinHopf& H, const GroupTable& G, const GroupTable& S,
                                const TwoCocycle& w) {
    if (H.dim != G.size()) throw std::invalid_argument("host basis is not the group basis");
    int ns = S.size();
    // Map S-local element index to host basis index.
    std::vector<int> emb(static_cast<size_t>(ns));
    for (int t = 0; t < ns; ++t) emb[static_cast<size_t>(t)] = G.index_of(S.elements[static_cast<size_t>(t)]);
    const CycField* F = H.F;
    Rat inv_ns(1, static_cast<unsigned long>(ns));
    // Idempotents e_chi = (1/|S|) sum_s chi(s^-1) s.
    std::vector<SVec> idem(static_cast<size_t>(ns));
    for (int chi = 0; chi < ns; ++chi)
        for (int s = 0; s < ns; ++s) {
            Cyc c = w.chars.value(chi, S.inv(s)) * Cyc(F, inv_ns);
            if (!c.is_zero()) idem[static_cast<size_t>(chi)].emplace(emb[static_cast<size_t>(s)], c);
        }
    Twist T;
    for (int chi = 0; chi < ns; ++chi)
        for (int eta = 0; eta < ns; ++eta) {
            const Cyc& wv = w(chi, eta);
            Cyc wi = wv.inv();
            for (const auto& [i, a] : idem[static_cast<size_t>(chi)])
                for (const auto& [j, b] : idem[static_cast<size_t>(eta)]) {
                    detail::acc_add(T.J, H.pair_index(i, j), wv * a * b);
                    detail::acc_add(T.Jinv, H.pair_index(i, j), wi * a * b);
                }
        }
    std::vector<std::string> sgens;
    for (const auto& p : S.gens) sgens.push_back(perm_to_string(p));
    T.provenance = {{"kind", "cocycle_twist_element"}, {"subgroup_gens", sgens},
                    {"subgroup_order", ns},  {"host_dim", H.dim},
                    {"J", svec_to_json(T.J)}, {"Jinv", svec_to_json(T.Jinv)}};
    return T;
}

/// Reconstruct a twist element from its recorded provenance (exact values).
inline Twist twist_from_json(const nlohmann::json& j) {
    Twist T;
    T.J = svec_from_json(j.at("J"));
    T.Jinv = svec_from_json(j.at("Jinv"));
    T.provenance = j;
    return T;
}

/// Push a twist along an injective algebra map into a bigger host.
inline Twist inflate_twist(const Twist& T, const LinMap& embed, const FinHopf& dst) {
    Twist out;
    auto push = [&](const SVec& X, SVec& Y) {
        for (const auto& [ab, c] : X) {
            int a = ab / embed.src_dim, b = ab % embed.src_dim;
            for (const auto& [p, u] : embed.cols[static_cast<size_t>(a)])
                for (const auto& [q, v] : embed.cols[static_cast<size_t>(b)])
                    detail::acc_add(Y, dst.pair_index(p, q), c * u * v);
        }
    };
    push(T.J, out.J);
    push(T.Jinv, out.Jinv);
    out.provenance = {{"kind", "inflated_twist"}, {"of", T.provenance},
                      {"host_dim", dst.dim},
                      {"J", svec_to_json(out.J)}, {"Jinv", svec_to_json(out.Jinv)}};
    return out;
}

/// Left-multiplication matrix of x, row-major (columns index the right factor).
inline std::vector<std::vector<Cyc>> left_mul_matrix(const FinHopf& H, const Vec& x) {
    std::vector<std::vector<Cyc>> M(static_cast<size_t>(H.dim),
                                    std::vector<Cyc>(static_cast<size_t>(H.dim), Cyc::zero(H.F)));
    for (int i = 0; i < H.dim; ++i) {
        if (x[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < H.dim; ++j)
            for (const auto& [k, c] : H.mrow(i, j))
                M[static_cast<size_t>(k)][static_cast<size_t>(j)] =
                    M[static_cast<size_t>(k)][static_cast<size_t>(j)] + c * x[static_cast<size_t>(i)];
    }
    return M;
}

/// Inverse of an invertible element, by solving x * y = 1.
inline Vec element_inverse(const FinHopf& H, const Vec& x) {
    auto y = linear_solve(left_mul_matrix(H, x), H.unit, H.F);
    if (!y) throw std::invalid_argument("element is not invertible");
    // Left inverse in a finite-dimensional algebra is two-sided; certify.
    if (!(mul_vec(H, x, *y) == H.unit) || !(mul_vec(H, *y, x) == H.unit))
        throw std::logic_error("inverse certification failed");
    return *y;
}

/// Deformed Hopf algebra H^J: same algebra, comultiplication conjugated by J,
/// antipode conjugated by u = m(S x id)(J). The antipode axiom is re-checked
/// here; a failure means the twist data was invalid.
inline FinHopf apply_twist(const FinHopf& H, const Twist& T) {
    FinHopf out = H;
    for (int i = 0; i < H.dim; ++i) {
        SVec di = svec_from(H.comult[static_cast<size_t>(i)]);
        SVec tw = detail::tensor_square_mul(H, T.Jinv, detail::tensor_square_mul(H, di, T.J));
        out.comult[static_cast<size_t>(i)] = srow_from(tw);
    }
    // u = sum S(J(1)) J(2).
    Vec u = zero_vec(H);
    for (const auto& [ab, c] : T.J) {
        int a = ab / H.dim, b = ab % H.dim;
        for (const auto& [s, cs] : H.antipode[static_cast<size_t>(a)])
            for (const auto& [k, m] : H.mrow(s, b)) {
                u[static_cast<size_t>(k)] = u[static_cast<size_t>(k)] + c * cs * m;
            }
    }
    Vec uinv = element_inverse(H, u);
    auto conjugated_antipode = [&](const Vec& left, const Vec& right) {
        std::vector<SRow> cols(static_cast<size_t>(H.dim));
        for (int j = 0; j < H.dim; ++j) {
            Vec sj = sv_to_dense(svec_from(H.antipode[static_cast<size_t>(j)]), H.dim, H.F);
            cols[static_cast<size_t>(j)] = srow_from(sv_from_dense(mul_vec(H, left, mul_vec(H, sj, right))));
        }
        return cols;
    };
    auto antipode_ok = [&](const FinHopf& C) {
        for (int i = 0; i < C.dim; ++i) {
            SVec left, want;
            for (const auto& [ab, c] : C.comult[static_cast<size_t>(i)]) {
                int a = ab / C.dim, b = ab % C.dim;
                for (const auto& [s, cu] : C.antipode[static_cast<size_t>(a)])
                    for (const auto& [k, m] : C.mrow(s, b)) detail::acc_add(left, k, c * cu * m);
            }
            for (int v = 0; v < C.dim; ++v) {
                Cyc c = C.counit[static_cast<size_t>(i)] * C.unit[static_cast<size_t>(v)];
                if (!c.is_zero()) want.emplace(v, c);
            }
            if (left != want) return false;
        }
        return true;
    };
    out.antipode = conjugated_antipode(uinv, u);
    if (!antipode_ok(out)) {
        out.antipode = conjugated_antipode(u, uinv);
        if (!antipode_ok(out)) throw std::invalid_argument("twist produced no valid antipode");
    }
    out.provenance = {{"kind", "twisted"}, {"of", H.provenance}, {"twist", T.provenance}};
    return out;
}

/// Dual-side deformation: twist the multiplication of K by a 2-cocycle,
/// computed through the linear dual (twist the comultiplication of K*, then
/// dualize back onto the same basis).
inline FinHopf cocycle_twist_algebra(const FinHopf& K, const Twist& T_on_dual) {
    FinHopf D = dual_hopf(K);
    FinHopf DT = apply_twist(D, T_on_dual);
    FinHopf out = dual_hopf(DT);
    out.labels = K.labels;
    out.provenance = {{"kind", "cocycle_twisted_algebra"}, {"of", K.provenance},
                      {"twist", T_on_dual.provenance}};
    return out;
}

/// Indices of basis elements of the host group whose group elements appear in
/// flip(J)^-1 * J; their closure is the minimal subgroup supporting the
/// noncocommutativity of the twist.
inline std::vector<int> twist_support_subgroup(const FinHopf& H, const GroupTable& G,
                                               const Twist& T) {
    if (H.dim != G.size()) throw std::invalid_argument("host basis is not the group basis");
    SVec j21inv;
    for (const auto& [ab, c] : T.Jinv) {
        int a = ab / H.dim, b = ab % H.dim;
        detail::acc_add(j21inv, H.pair_index(b, a), c);
    }
    SVec prod = detail::tensor_square_mul(H, j21inv, T.J);
    std::set<int> support;
    for (const auto& [ab, c] : prod) {
        support.insert(ab / H.dim);
        support.insert(ab % H.dim);
    }
    return G.closure(std::vector<int>(support.begin(), support.end()));
}

}  // namespace hopf
