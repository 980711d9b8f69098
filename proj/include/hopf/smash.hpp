#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/abelian.hpp"
#include "hopf/fin_hopf.hpp"

namespace hopf {

/// Left coaction rho: R -> K (x) R making R a comodule bialgebra with central
/// image. rho[i] is indexed by k * R.dim + j (coacting component first).
struct CoactionData {
    FinHopf R;
    FinHopf K;
    std::vector<SVec> rho;
    nlohmann::json provenance;

    int pair_index(int k, int j) const { return k * R.dim + j; }
};

/// The comodule axioms plus the three structure conditions: comultiplication
/// and counit, multiplication and unit are comodule maps, and the coaction
/// components centralize K.
inline bool verify_coaction(const CoactionData& cd, std::string* witness = nullptr) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    const FinHopf& R = cd.R;
    const FinHopf& K = cd.K;
    if (R.F != K.F) return fail("component algebras live over different fields");
    if (static_cast<int>(cd.rho.size()) != R.dim) return fail("coaction table has wrong shape");
    long long KD = K.dim, RD = R.dim;

    for (int i = 0; i < R.dim; ++i) {
        // (eps_K x id) rho = id.
        SVec counit_leg;
        for (const auto& [kj, c] : cd.rho[static_cast<size_t>(i)]) {
            int k = kj / R.dim, j = kj % R.dim;
            detail::acc_add(counit_leg, j, c * K.counit[static_cast<size_t>(k)]);
        }
        SVec ei;
        ei.emplace(i, Cyc::one(R.F));
        if (counit_leg != ei) return fail("coaction counit law fails at basis " + std::to_string(i));

        // (Delta_K x id) rho = (id x rho) rho, in K x K x R.
        std::map<long long, Cyc> lhs, rhs;
        for (const auto& [kj, c] : cd.rho[static_cast<size_t>(i)]) {
            int k = kj / R.dim, j = kj % R.dim;
            for (const auto& [k12, d] : K.comult[static_cast<size_t>(k)]) {
                auto [k1, k2] = K.split_pair(k12);
                detail::acc_add_ll(lhs, (static_cast<long long>(k1) * KD + k2) * RD + j, c * d);
            }
            for (const auto& [kj2, d] : cd.rho[static_cast<size_t>(j)]) {
                int kp = kj2 / R.dim, jp = kj2 % R.dim;
                detail::acc_add_ll(rhs, (static_cast<long long>(k) * KD + kp) * RD + jp, c * d);
            }
        }
        if (lhs != rhs)
            return fail("coaction coassociativity fails at basis " + std::to_string(i));
    }

    // (1) Delta_R is a comodule map, in K x R x R.
    for (int i = 0; i < R.dim; ++i) {
        std::map<long long, Cyc> lhs, rhs;
        for (const auto& [ab, c] : R.comult[static_cast<size_t>(i)]) {
            auto [a, b] = R.split_pair(ab);
            for (const auto& [kj, d] : cd.rho[static_cast<size_t>(a)]) {
                int k = kj / R.dim, a0 = kj % R.dim;
                for (const auto& [kj2, d2] : cd.rho[static_cast<size_t>(b)]) {
                    int k2 = kj2 / R.dim, b0 = kj2 % R.dim;
                    Cyc f = c * d * d2;
                    for (const auto& [km, cm] : K.mrow(k, k2))
                        detail::acc_add_ll(rhs, (static_cast<long long>(km) * RD + a0) * RD + b0,
                                           f * cm);
                }
            }
        }
        for (const auto& [kj, c] : cd.rho[static_cast<size_t>(i)]) {
            int k = kj / R.dim, j = kj % R.dim;
            for (const auto& [ab, d] : R.comult[static_cast<size_t>(j)]) {
                auto [a, b] = R.split_pair(ab);
                detail::acc_add_ll(lhs, (static_cast<long long>(k) * RD + a) * RD + b, c * d);
            }
        }
        if (lhs != rhs)
            return fail("comultiplication is not a comodule map at basis " + std::to_string(i));
    }

    // (1) eps_R is a comodule map.
    for (int i = 0; i < R.dim; ++i) {
        SVec got;
        for (const auto& [kj, c] : cd.rho[static_cast<size_t>(i)]) {
            int k = kj / R.dim, j = kj % R.dim;
            detail::acc_add(got, k, c * R.counit[static_cast<size_t>(j)]);
        }
        SVec want;
        for (int k = 0; k < K.dim; ++k) {
            Cyc c = R.counit[static_cast<size_t>(i)] * K.unit[static_cast<size_t>(k)];
            if (!c.is_zero()) want.emplace(k, c);
        }
        if (got != want) return fail("counit is not a comodule map at basis " + std::to_string(i));
    }

    // (2) m_R is a comodule map.
    for (int i = 0; i < R.dim; ++i)
        for (int j = 0; j < R.dim; ++j) {
            SVec lhs, rhs;
            for (const auto& [m, c] : R.mrow(i, j)) {
                for (const auto& [kj, d] : cd.rho[static_cast<size_t>(m)])
                    detail::acc_add(lhs, kj, c * d);
            }
            for (const auto& [kj, c] : cd.rho[static_cast<size_t>(i)]) {
                int k = kj / R.dim, a = kj % R.dim;
                for (const auto& [kj2, d] : cd.rho[static_cast<size_t>(j)]) {
                    int k2 = kj2 / R.dim, b = kj2 % R.dim;
                    Cyc f = c * d;
                    for (const auto& [km, cm] : K.mrow(k, k2))
                        for (const auto& [rm, cr] : R.mrow(a, b))
                            detail::acc_add(rhs, cd.pair_index(km, rm), f * cm * cr);
                }
            }
            if (lhs != rhs)
                return fail("multiplication is not a comodule map at (" + std::to_string(i) +
                            ", " + std::to_string(j) + ")");
        }

    // (2) u_R is a comodule map.
    {
        SVec lhs, rhs;
        for (int i = 0; i < R.dim; ++i) {
            if (R.unit[static_cast<size_t>(i)].is_zero()) continue;
            for (const auto& [kj, c] : cd.rho[static_cast<size_t>(i)])
                detail::acc_add(lhs, kj, c * R.unit[static_cast<size_t>(i)]);
        }
        for (int k = 0; k < K.dim; ++k)
            for (int j = 0; j < R.dim; ++j) {
                Cyc c = K.unit[static_cast<size_t>(k)] * R.unit[static_cast<size_t>(j)];
                if (!c.is_zero()) rhs.emplace(cd.pair_index(k, j), c);
            }
        if (lhs != rhs) return fail("unit is not a comodule map");
    }

    // (3) r_{(-1)} k (x) r_0 = k r_{(-1)} (x) r_0.
    for (int i = 0; i < R.dim; ++i)
        for (int l = 0; l < K.dim; ++l) {
            SVec lhs, rhs;
            for (const auto& [kj, c] : cd.rho[static_cast<size_t>(i)]) {
                int k = kj / R.dim, j = kj % R.dim;
                for (const auto& [m, cm] : K.mrow(k, l))
                    detail::acc_add(lhs, cd.pair_index(m, j), c * cm);
                for (const auto& [m, cm] : K.mrow(l, k))
                    detail::acc_add(rhs, cd.pair_index(m, j), c * cm);
            }
            if (lhs != rhs)
                return fail("coaction components do not centralize at (" + std::to_string(i) +
                            ", " + std::to_string(l) + ")");
        }

    if (witness) witness->clear();
    return true;
}

/// Left action of K on T making T a module bialgebra with cocommutative
/// image. act[a][i] is the action of K-basis a on T-basis i.
struct ActionData {
    FinHopf T;
    FinHopf K;
    std::vector<std::vector<SVec>> act;
    nlohmann::json provenance;

    SVec apply(int a, const SVec& v) const {
        SVec out;
        for (const auto& [i, c] : v)
            sv_add_scaled(out, act[static_cast<size_t>(a)][static_cast<size_t>(i)], c);
        return out;
    }
};

inline bool verify_action(const ActionData& ad, std::string* witness = nullptr) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    const FinHopf& T = ad.T;
    const FinHopf& K = ad.K;
    if (T.F != K.F) return fail("component algebras live over different fields");
    if (static_cast<int>(ad.act.size()) != K.dim) return fail("action table has wrong shape");
    for (const auto& row : ad.act)
        if (static_cast<int>(row.size()) != T.dim) return fail("action table has wrong shape");

    // 1_K acts as the identity.
    for (int i = 0; i < T.dim; ++i) {
        SVec got;
        for (int a = 0; a < K.dim; ++a) {
            if (K.unit[static_cast<size_t>(a)].is_zero()) continue;
            sv_add_scaled(got, ad.act[static_cast<size_t>(a)][static_cast<size_t>(i)],
                          K.unit[static_cast<size_t>(a)]);
        }
        SVec ei;
        ei.emplace(i, Cyc::one(T.F));
        if (got != ei) return fail("unit of the acting algebra does not act as identity");
    }

    // (ab).t = a.(b.t).
    for (int a = 0; a < K.dim; ++a)
        for (int b = 0; b < K.dim; ++b)
            for (int i = 0; i < T.dim; ++i) {
                SVec lhs;
                for (const auto& [m, c] : K.mrow(a, b))
                    sv_add_scaled(lhs, ad.act[static_cast<size_t>(m)][static_cast<size_t>(i)], c);
                SVec rhs = ad.apply(a, ad.act[static_cast<size_t>(b)][static_cast<size_t>(i)]);
                if (lhs != rhs)
                    return fail("action is not associative at (" + std::to_string(a) + ", " +
                                std::to_string(b) + ", " + std::to_string(i) + ")");
            }

    // (4) Delta_T and eps_T are module maps.
    for (int a = 0; a < K.dim; ++a)
        for (int i = 0; i < T.dim; ++i) {
            SVec lhs;
            for (const auto& [j, c] : ad.act[static_cast<size_t>(a)][static_cast<size_t>(i)]) {
                SVec row = svec_from(T.comult[static_cast<size_t>(j)]);
                sv_add_scaled(lhs, row, c);
            }
            SVec rhs;
            for (const auto& [k12, c] : K.comult[static_cast<size_t>(a)]) {
                auto [k1, k2] = K.split_pair(k12);
                for (const auto& [t12, d] : T.comult[static_cast<size_t>(i)]) {
                    auto [t1, t2] = T.split_pair(t12);
                    Cyc f = c * d;
                    for (const auto& [p, u] : ad.act[static_cast<size_t>(k1)][static_cast<size_t>(t1)])
                        for (const auto& [q, v] : ad.act[static_cast<size_t>(k2)][static_cast<size_t>(t2)])
                            detail::acc_add(rhs, T.pair_index(p, q), f * u * v);
                }
            }
            if (lhs != rhs)
                return fail("comultiplication is not a module map at (" + std::to_string(a) +
                            ", " + std::to_string(i) + ")");

            Cyc e = Cyc::zero(T.F);
            for (const auto& [j, c] : ad.act[static_cast<size_t>(a)][static_cast<size_t>(i)])
                e = e + c * T.counit[static_cast<size_t>(j)];
            if (!(e == K.counit[static_cast<size_t>(a)] * T.counit[static_cast<size_t>(i)]))
                return fail("counit is not a module map at (" + std::to_string(a) + ", " +
                            std::to_string(i) + ")");
        }

    // (5) m_T and u_T are module maps.
    for (int a = 0; a < K.dim; ++a) {
        for (int i = 0; i < T.dim; ++i)
            for (int j = 0; j < T.dim; ++j) {
                SVec lhs = ad.apply(a, svec_from(T.mrow(i, j)));
                SVec rhs;
                for (const auto& [k12, c] : K.comult[static_cast<size_t>(a)]) {
                    auto [k1, k2] = K.split_pair(k12);
                    for (const auto& [p, u] : ad.act[static_cast<size_t>(k1)][static_cast<size_t>(i)])
                        for (const auto& [q, v] : ad.act[static_cast<size_t>(k2)][static_cast<size_t>(j)])
                            for (const auto& [m, w] : T.mrow(p, q))
                                detail::acc_add(rhs, m, c * u * v * w);
                }
                if (lhs != rhs)
                    return fail("multiplication is not a module map at (" + std::to_string(a) +
                                ", " + std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        SVec lhs = ad.apply(a, sv_from_dense(T.unit));
        SVec rhs = sv_from_dense(T.unit);
        for (auto& [k, v] : rhs) v = v * K.counit[static_cast<size_t>(a)];
        for (auto it = rhs.begin(); it != rhs.end();)
            it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
        if (lhs != rhs) return fail("unit is not a module map at " + std::to_string(a));
    }

    // (6) k_1 (x) k_2.t = k_2 (x) k_1.t.
    for (int a = 0; a < K.dim; ++a)
        for (int i = 0; i < T.dim; ++i) {
            SVec lhs, rhs;
            for (const auto& [k12, c] : K.comult[static_cast<size_t>(a)]) {
                auto [k1, k2] = K.split_pair(k12);
                for (const auto& [j, u] : ad.act[static_cast<size_t>(k2)][static_cast<size_t>(i)])
                    detail::acc_add(lhs, k1 * T.dim + j, c * u);
                for (const auto& [j, u] : ad.act[static_cast<size_t>(k1)][static_cast<size_t>(i)])
                    detail::acc_add(rhs, k2 * T.dim + j, c * u);
            }
            if (lhs != rhs)
                return fail("action legs are not symmetric at (" + std::to_string(a) + ", " +
                            std::to_string(i) + ")");
        }

    if (witness) witness->clear();
    return true;
}

/// Extend generator images to a full homomorphism table theta: G -> GL(R) by
/// breadth-first products. Validation happens in the callers.
inline std::vector<LinMap> extend_theta(const GroupTable& G, const CycField* F, int dim,
                                        const std::vector<LinMap>& gen_images) {
    if (gen_images.size() != G.gen_indices().size())
        throw std::invalid_argument("one image per generator is required");
    std::vector<LinMap> theta(static_cast<size_t>(G.size()));
    std::vector<bool> known(static_cast<size_t>(G.size()), false);
    theta[0] = identity_map(dim, F);
    known[0] = true;
    const std::vector<int>& gidx = G.gen_indices();
    for (size_t k = 0; k < gidx.size(); ++k) {
        theta[static_cast<size_t>(gidx[k])] = gen_images[k];
        known[static_cast<size_t>(gidx[k])] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < G.size(); ++a) {
            if (!known[static_cast<size_t>(a)]) continue;
            for (int g : gidx) {
                int t = G.mul(a, g);
                if (known[static_cast<size_t>(t)]) continue;
                theta[static_cast<size_t>(t)] =
                    compose(theta[static_cast<size_t>(a)], theta[static_cast<size_t>(g)]);
                known[static_cast<size_t>(t)] = true;
                grew = true;
            }
        }
    }
    for (bool b : known)
        if (!b) throw std::logic_error("generator closure did not reach the whole group");
    return theta;
}

/// Validate a full automorphism table: every entry a Hopf automorphism and
/// theta(a) theta(b) = theta(ab).
inline void require_theta_valid(const FinHopf& R, const GroupTable& G,
                                const std::vector<LinMap>& theta) {
    if (static_cast<int>(theta.size()) != G.size())
        throw std::invalid_argument("one automorphism per group element is required");
    for (int a = 0; a < G.size(); ++a)
        if (!is_hopf_iso(theta[static_cast<size_t>(a)], R, R))
            throw std::invalid_argument("automorphism table entry is not a Hopf automorphism");
    for (int a = 0; a < G.size(); ++a)
        for (int b = 0; b < G.size(); ++b) {
            LinMap ab = compose(theta[static_cast<size_t>(a)], theta[static_cast<size_t>(b)]);
            if (ab.cols != theta[static_cast<size_t>(G.mul(a, b))].cols)
                throw std::invalid_argument("automorphism table is not a homomorphism");
        }
}

/// rho(r) = sum over gamma of delta_gamma (x) theta(gamma^{-1})(r), a coaction
/// of the function algebra of G.
inline CoactionData coaction_from_theta(const FinHopf& R, const GroupTable& G,
                                        const std::vector<LinMap>& theta) {
    require_theta_valid(R, G, theta);
    CoactionData cd;
    cd.R = R;
    cd.K = dual_group_algebra(G, R.F);
    cd.rho.assign(static_cast<size_t>(R.dim), {});
    for (int i = 0; i < R.dim; ++i)
        for (int g = 0; g < G.size(); ++g) {
            const SRow& col = theta[static_cast<size_t>(G.inv(g))].cols[static_cast<size_t>(i)];
            for (const auto& [j, c] : col) detail::acc_add(cd.rho[static_cast<size_t>(i)], cd.pair_index(g, j), c);
        }
    std::vector<std::string> gens;
    for (const auto& p : G.gens) gens.push_back(perm_to_string(p));
    nlohmann::json tg = nlohmann::json::array();
    for (int gi : G.gen_indices()) tg.push_back(linmap_to_json(theta[static_cast<size_t>(gi)]));
    cd.provenance = {{"kind", "theta_coaction"}, {"group_gens", gens},
                     {"group_degree", G.degree}, {"theta_gens", std::move(tg)},
                     {"of", R.provenance}};
    std::string w;
    if (!verify_coaction(cd, &w)) throw std::invalid_argument("coaction conditions fail: " + w);
    return cd;
}

/// The action of kF on T where each group element acts by its automorphism.
inline ActionData action_from_theta(const FinHopf& T, const GroupTable& F,
                                    const std::vector<LinMap>& theta) {
    require_theta_valid(T, F, theta);
    ActionData ad;
    ad.T = T;
    ad.K = group_algebra(F, T.F);
    ad.act.assign(static_cast<size_t>(F.size()), std::vector<SVec>(static_cast<size_t>(T.dim)));
    for (int a = 0; a < F.size(); ++a)
        for (int i = 0; i < T.dim; ++i)
            ad.act[static_cast<size_t>(a)][static_cast<size_t>(i)] =
                svec_from(theta[static_cast<size_t>(a)].cols[static_cast<size_t>(i)]);
    std::vector<std::string> gens;
    for (const auto& p : F.gens) gens.push_back(perm_to_string(p));
    nlohmann::json tg = nlohmann::json::array();
    for (int gi : F.gen_indices()) tg.push_back(linmap_to_json(theta[static_cast<size_t>(gi)]));
    ad.provenance = {{"kind", "theta_action"}, {"group_gens", gens},
                     {"group_degree", F.degree}, {"theta_gens", std::move(tg)},
                     {"of", T.provenance}};
    std::string w;
    if (!verify_action(ad, &w)) throw std::invalid_argument("action conditions fail: " + w);
    return ad;
}

/// Smash coproduct: tensor algebra R (x) K with comultiplication
/// Delta(r#k) = r1 # (r2)_{(-1)} k1 (x) (r2)_0 # k2 and antipode
/// S(r#k) = S(r_0) # S(r_{(-1)} k).
inline FinHopf smash_coproduct(const CoactionData& cd) {
    std::string w;
    if (!verify_coaction(cd, &w)) throw std::invalid_argument("coaction conditions fail: " + w);
    const FinHopf& R = cd.R;
    const FinHopf& K = cd.K;
    FinHopf H;
    H.F = R.F;
    H.dim = R.dim * K.dim;
    auto idx = [&](int r, int k) { return r * K.dim + k; };
    int n = H.dim;
    H.labels.resize(static_cast<size_t>(n));
    for (int i = 0; i < R.dim; ++i)
        for (int a = 0; a < K.dim; ++a)
            H.labels[static_cast<size_t>(idx(i, a))] =
                R.labels[static_cast<size_t>(i)] + "#" + K.labels[static_cast<size_t>(a)];

    H.mult.assign(static_cast<size_t>(n) * static_cast<size_t>(n), {});
    for (int i = 0; i < R.dim; ++i)
        for (int a = 0; a < K.dim; ++a)
            for (int j = 0; j < R.dim; ++j)
                for (int b = 0; b < K.dim; ++b) {
                    SVec acc;
                    for (const auto& [m, c] : R.mrow(i, j))
                        for (const auto& [p, d] : K.mrow(a, b))
                            detail::acc_add(acc, idx(m, p), c * d);
                    H.mult[static_cast<size_t>(idx(i, a)) * static_cast<size_t>(n) +
                           static_cast<size_t>(idx(j, b))] = srow_from(acc);
                }

    H.unit.assign(static_cast<size_t>(n), Cyc::zero(H.F));
    H.counit.assign(static_cast<size_t>(n), Cyc::zero(H.F));
    for (int i = 0; i < R.dim; ++i)
        for (int a = 0; a < K.dim; ++a) {
            H.unit[static_cast<size_t>(idx(i, a))] =
                R.unit[static_cast<size_t>(i)] * K.unit[static_cast<size_t>(a)];
            H.counit[static_cast<size_t>(idx(i, a))] =
                R.counit[static_cast<size_t>(i)] * K.counit[static_cast<size_t>(a)];
        }

    H.comult.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < R.dim; ++i)
        for (int a = 0; a < K.dim; ++a) {
            SVec acc;
            for (const auto& [r12, c] : R.comult[static_cast<size_t>(i)]) {
                auto [r1, r2] = R.split_pair(r12);
                for (const auto& [kj, d] : cd.rho[static_cast<size_t>(r2)]) {
                    int km = kj / R.dim, r20 = kj % R.dim;
                    for (const auto& [k12, e] : K.comult[static_cast<size_t>(a)]) {
                        auto [k1, k2] = K.split_pair(k12);
                        Cyc f = c * d * e;
                        for (const auto& [kk, g] : K.mrow(km, k1))
                            detail::acc_add(acc,
                                            H.pair_index(idx(r1, kk), idx(r20, k2)), f * g);
                    }
                }
            }
            H.comult[static_cast<size_t>(idx(i, a))] = srow_from(acc);
        }

    H.antipode.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < R.dim; ++i)
        for (int a = 0; a < K.dim; ++a) {
            SVec acc;
            for (const auto& [kj, d] : cd.rho[static_cast<size_t>(i)]) {
                int km = kj / R.dim, r0 = kj % R.dim;
                for (const auto& [s, cs] : R.antipode[static_cast<size_t>(r0)])
                    for (const auto& [kp, cp] : K.mrow(km, a))
                        for (const auto& [q, cq] : K.antipode[static_cast<size_t>(kp)])
                            detail::acc_add(acc, idx(s, q), d * cs * cp * cq);
            }
            H.antipode[static_cast<size_t>(idx(i, a))] = srow_from(acc);
        }

    H.provenance = {{"kind", "smash_coproduct"},
                    {"coaction", cd.provenance},
                    {"r", R.provenance},
                    {"k", K.provenance}};

    LinMap iota;
    iota.src_dim = K.dim;
    iota.dst_dim = n;
    iota.cols.resize(static_cast<size_t>(K.dim));
    for (int a = 0; a < K.dim; ++a) {
        SVec col;
        for (int i = 0; i < R.dim; ++i)
            if (!R.unit[static_cast<size_t>(i)].is_zero())
                col.emplace(idx(i, a), R.unit[static_cast<size_t>(i)]);
        iota.cols[static_cast<size_t>(a)] = srow_from(col);
    }
    LinMap pi;
    pi.src_dim = n;
    pi.dst_dim = R.dim;
    pi.cols.resize(static_cast<size_t>(n));
    for (int i = 0; i < R.dim; ++i)
        for (int a = 0; a < K.dim; ++a)
            if (!K.counit[static_cast<size_t>(a)].is_zero())
                pi.cols[static_cast<size_t>(idx(i, a))] = {{i, K.counit[static_cast<size_t>(a)]}};
    if (!is_hopf_map(iota, K, H) || iota.rank() != K.dim)
        throw std::logic_error("inclusion certification failed");
    if (!is_hopf_map(pi, H, R) || pi.rank() != R.dim)
        throw std::logic_error("projection certification failed");
    attach_sequence_maps(H, iota, pi);
    return H;
}

/// Smash product: tensor coalgebra T (x) K with multiplication
/// (t#k)(u#l) = t (k1.u) # k2 l and antipode S(t#k) = S(k2).S(t) # S(k1).
inline FinHopf smash_product(const ActionData& ad) {
    std::string w;
    if (!verify_action(ad, &w)) throw std::invalid_argument("action conditions fail: " + w);
    const FinHopf& T = ad.T;
    const FinHopf& K = ad.K;
    FinHopf H;
    H.F = T.F;
    H.dim = T.dim * K.dim;
    auto idx = [&](int t, int k) { return t * K.dim + k; };
    int n = H.dim;
    H.labels.resize(static_cast<size_t>(n));
    for (int i = 0; i < T.dim; ++i)
        for (int a = 0; a < K.dim; ++a)
            H.labels[static_cast<size_t>(idx(i, a))] =
                T.labels[static_cast<size_t>(i)] + "#" + K.labels[static_cast<size_t>(a)];

    H.mult.assign(static_cast<size_t>(n) * static_cast<size_t>(n), {});
    for (int i = 0; i < T.dim; ++i)
        for (int a = 0; a < K.dim; ++a)
            for (int j = 0; j < T.dim; ++j)
                for (int b = 0; b < K.dim; ++b) {
                    SVec acc;
                    for (const auto& [k12, c] : K.comult[static_cast<size_t>(a)]) {
                        auto [k1, k2] = K.split_pair(k12);
                        for (const auto& [m, cm] :
                             ad.act[static_cast<size_t>(k1)][static_cast<size_t>(j)])
                            for (const auto& [tm, ct] : T.mrow(i, m))
                                for (const auto& [kk, ck] : K.mrow(k2, b))
                                    detail::acc_add(acc, idx(tm, kk), c * cm * ct * ck);
                    }
                    H.mult[static_cast<size_t>(idx(i, a)) * static_cast<size_t>(n) +
                           static_cast<size_t>(idx(j, b))] = srow_from(acc);
                }

    H.unit.assign(static_cast<size_t>(n), Cyc::zero(H.F));
    H.counit.assign(static_cast<size_t>(n), Cyc::zero(H.F));
    for (int i = 0; i < T.dim; ++i)
        for (int a = 0; a < K.dim; ++a) {
            H.unit[static_cast<size_t>(idx(i, a))] =
                T.unit[static_cast<size_t>(i)] * K.unit[static_cast<size_t>(a)];
            H.counit[static_cast<size_t>(idx(i, a))] =
                T.counit[static_cast<size_t>(i)] * K.counit[static_cast<size_t>(a)];
        }

    H.comult.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < T.dim; ++i)
        for (int a = 0; a < K.dim; ++a) {
            SVec acc;
            for (const auto& [t12, c] : T.comult[static_cast<size_t>(i)]) {
                auto [t1, t2] = T.split_pair(t12);
                for (const auto& [k12, d] : K.comult[static_cast<size_t>(a)]) {
                    auto [k1, k2] = K.split_pair(k12);
                    detail::acc_add(acc, H.pair_index(idx(t1, k1), idx(t2, k2)), c * d);
                }
            }
            H.comult[static_cast<size_t>(idx(i, a))] = srow_from(acc);
        }

    H.antipode.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < T.dim; ++i)
        for (int a = 0; a < K.dim; ++a) {
            SVec acc;
            for (const auto& [k12, c] : K.comult[static_cast<size_t>(a)]) {
                auto [k1, k2] = K.split_pair(k12);
                for (const auto& [q2, c2] : K.antipode[static_cast<size_t>(k2)])
                    for (const auto& [s, cs] : T.antipode[static_cast<size_t>(i)])
                        for (const auto& [m, cm] :
                             ad.act[static_cast<size_t>(q2)][static_cast<size_t>(s)])
                            for (const auto& [q1, c1] : K.antipode[static_cast<size_t>(k1)])
                                detail::acc_add(acc, idx(m, q1), c * c2 * cs * cm * c1);
            }
            H.antipode[static_cast<size_t>(idx(i, a))] = srow_from(acc);
        }

    H.provenance = {{"kind", "smash_product"},
                    {"action", ad.provenance},
                    {"t", T.provenance},
                    {"k", K.provenance}};

    LinMap iota;
    iota.src_dim = T.dim;
    iota.dst_dim = n;
    iota.cols.resize(static_cast<size_t>(T.dim));
    for (int i = 0; i < T.dim; ++i) {
        SVec col;
        for (int a = 0; a < K.dim; ++a)
            if (!K.unit[static_cast<size_t>(a)].is_zero())
                col.emplace(idx(i, a), K.unit[static_cast<size_t>(a)]);
        iota.cols[static_cast<size_t>(i)] = srow_from(col);
    }
    LinMap pi;
    pi.src_dim = n;
    pi.dst_dim = K.dim;
    pi.cols.resize(static_cast<size_t>(n));
    for (int i = 0; i < T.dim; ++i)
        for (int a = 0; a < K.dim; ++a)
            if (!T.counit[static_cast<size_t>(i)].is_zero())
                pi.cols[static_cast<size_t>(idx(i, a))] = {{a, T.counit[static_cast<size_t>(i)]}};
    if (!is_hopf_map(iota, T, H) || iota.rank() != T.dim)
        throw std::logic_error("inclusion certification failed");
    if (!is_hopf_map(pi, H, K) || pi.rank() != K.dim)
        throw std::logic_error("projection certification failed");
    attach_sequence_maps(H, iota, pi);
    return H;
}

/// Transfer a coaction to the linear duals: the dual of the coacting algebra
/// acts on the dual of the comodule by <alpha.f, r> = <alpha, S^2(r_{(-1)})>
/// <f, r_0>. Together with dual_hopf this realizes (R x| K)* = R* # K*.
inline ActionData dual_coaction(const CoactionData& cd) {
    const FinHopf& R = cd.R;
    const FinHopf& K = cd.K;
    ActionData ad;
    ad.T = dual_hopf(R);
    ad.K = dual_hopf(K);
    ad.act.assign(static_cast<size_t>(K.dim), std::vector<SVec>(static_cast<size_t>(R.dim)));
    // S^2 on K, as columns.
    std::vector<SVec> s2(static_cast<size_t>(K.dim));
    for (int m = 0; m < K.dim; ++m)
        for (const auto& [p, cp] : K.antipode[static_cast<size_t>(m)])
            for (const auto& [q, cq] : K.antipode[static_cast<size_t>(p)])
                detail::acc_add(s2[static_cast<size_t>(m)], q, cp * cq);
    for (int i = 0; i < R.dim; ++i)
        for (const auto& [kj, d] : cd.rho[static_cast<size_t>(i)]) {
            int km = kj / R.dim, r0 = kj % R.dim;
            for (const auto& [a, ca] : s2[static_cast<size_t>(km)])
                detail::acc_add(ad.act[static_cast<size_t>(a)][static_cast<size_t>(r0)], i,
                                d * ca);
        }
    ad.provenance = {{"kind", "dual_coaction"}, {"of", cd.provenance}};
    std::string w;
    if (!verify_action(ad, &w))
        throw std::invalid_argument("dual action conditions fail: " + w);
    return ad;
}

/// Homogeneous components of the grading equivalent to a group-algebra
/// coaction: R_g = { v : rho(v) = g (x) v }.
struct Grading {
    std::vector<std::vector<Vec>> pieces;  // indexed by group element
    std::vector<int> support;              // indices with a nonzero piece
};

inline Grading grading_from_coaction(const CoactionData& cd, const GroupTable& G) {
    const FinHopf& R = cd.R;
    const FinHopf& K = cd.K;
    if (K.dim != G.size())
        throw std::invalid_argument("coacting algebra is not the expected group algebra");
    Grading gr;
    gr.pieces.resize(static_cast<size_t>(G.size()));
    Echelon all;
    int total = 0;
    for (int g = 0; g < G.size(); ++g) {
        // rows indexed by (k, j'): sum_j v_j rho[j][(k,j')] - [k==g] v_{j'} = 0.
        int rows = K.dim * R.dim;
        std::vector<std::vector<Cyc>> A(static_cast<size_t>(rows),
                                        std::vector<Cyc>(static_cast<size_t>(R.dim), Cyc::zero(R.F)));
        for (int j = 0; j < R.dim; ++j)
            for (const auto& [kj, c] : cd.rho[static_cast<size_t>(j)])
                A[static_cast<size_t>(kj)][static_cast<size_t>(j)] =
                    A[static_cast<size_t>(kj)][static_cast<size_t>(j)] + c;
        for (int jp = 0; jp < R.dim; ++jp) {
            size_t row = static_cast<size_t>(g * R.dim + jp);
            A[row][static_cast<size_t>(jp)] = A[row][static_cast<size_t>(jp)] - Cyc::one(R.F);
        }
        for (const auto& kv : kernel_basis(A, R.F)) {
            gr.pieces[static_cast<size_t>(g)].push_back(kv);
            if (!all.insert(sv_from_dense(kv)))
                throw std::invalid_argument("homogeneous components are not independent");
            ++total;
        }
        if (!gr.pieces[static_cast<size_t>(g)].empty()) gr.support.push_back(g);
    }
    if (total != R.dim)
        throw std::invalid_argument("homogeneous components do not span (invalid coaction)");
    std::vector<int> center = G.center();
    for (int g : gr.support) {
        bool central = false;
        for (int z : center) central = central || z == g;
        if (!central)
            throw std::invalid_argument("grading support escapes the center (invalid coaction)");
        if (g != 0)
            for (const auto& v : gr.pieces[static_cast<size_t>(g)]) {
                Cyc e = Cyc::zero(R.F);
                for (int j = 0; j < R.dim; ++j)
                    e = e + v[static_cast<size_t>(j)] * R.counit[static_cast<size_t>(j)];
                if (!e.is_zero())
                    throw std::invalid_argument(
                        "counit does not vanish off the identity component");
            }
    }
    return gr;
}

/// Dense inverse of a square linear map.
inline LinMap invert_linmap(const LinMap& f, const CycField* F) {
    if (f.src_dim != f.dst_dim) throw std::invalid_argument("linear map is not invertible");
    int n = f.src_dim;
    std::vector<std::vector<Cyc>> A(static_cast<size_t>(n),
                                    std::vector<Cyc>(static_cast<size_t>(n), Cyc::zero(F)));
    for (int j = 0; j < n; ++j)
        for (const auto& [i, c] : f.cols[static_cast<size_t>(j)])
            A[static_cast<size_t>(i)][static_cast<size_t>(j)] = c;
    LinMap g;
    g.src_dim = g.dst_dim = n;
    g.cols.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Vec e(static_cast<size_t>(n), Cyc::zero(F));
        e[static_cast<size_t>(i)] = Cyc::one(F);
        auto y = linear_solve(A, e, F);
        if (!y) throw std::invalid_argument("linear map is not invertible");
        g.cols[static_cast<size_t>(i)] = srow_from(sv_from_dense(*y));
    }
    return g;
}

/// The algebra isomorphism kF -> kG determined by a bijection pi from the
/// characters of G to the characters of F: the inverse sends g to
/// (1/n) sum over chi, x of chi(g) pi(chi)(x^{-1}) x.
inline LinMap group_algebra_iso_from_char_bijection(const GroupTable& Fg, const GroupTable& Gg,
                                                    const std::vector<int>& pi,
                                                    const CycField* field) {
    int n = Fg.size();
    if (Gg.size() != n) throw std::invalid_argument("groups must have equal order");
    if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("pi is not bijective");
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int v : pi) {
        if (v < 0 || v >= n || hit[static_cast<size_t>(v)])
            throw std::invalid_argument("pi is not bijective");
        hit[static_cast<size_t>(v)] = true;
    }
    CharacterTable chF = CharacterTable::build(Fg, field);
    CharacterTable chG = CharacterTable::build(Gg, field);
    Cyc inv_n(field, Rat(1, static_cast<unsigned long>(n)));
    LinMap phi_inv;
    phi_inv.src_dim = phi_inv.dst_dim = n;
    phi_inv.cols.resize(static_cast<size_t>(n));
    for (int g = 0; g < n; ++g) {
        SVec col;
        for (int chi = 0; chi < n; ++chi) {
            Cyc cg = chG.value(chi, g) * inv_n;
            for (int x = 0; x < n; ++x)
                detail::acc_add(col, x, cg * chF.value(pi[static_cast<size_t>(chi)], Fg.inv(x)));
        }
        phi_inv.cols[static_cast<size_t>(g)] = srow_from(col);
    }
    return invert_linmap(phi_inv, field);
}

/// A Hopf algebra section of the projection of a smash product, built from a
/// group-like-valued homomorphism phi with g.t = phi(g) t phi(g^{-1}).
struct Section {
    LinMap s;            // kF -> T # kF
    LinMap psi;          // T # kF -> T (x) kF, the splitting isomorphism
    FinHopf tensor_model;
};

inline Section section_from_phi(const ActionData& ad, const GroupTable& F, const FinHopf& H,
                                const std::vector<Vec>& phi) {
    const FinHopf& T = ad.T;
    const FinHopf& K = ad.K;
    if (K.dim != F.size() || H.dim != T.dim * K.dim)
        throw std::invalid_argument("section data does not match the smash product");
    if (static_cast<int>(phi.size()) != F.size())
        throw std::invalid_argument("one group-like image per group element is required");

    for (int g = 0; g < F.size(); ++g) {
        const Vec& v = phi[static_cast<size_t>(g)];
        SVec dv = comult_vec(T, v), want;
        for (int i = 0; i < T.dim; ++i)
            for (int j = 0; j < T.dim; ++j) {
                Cyc c = v[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
                if (!c.is_zero()) want.emplace(T.pair_index(i, j), c);
            }
        if (dv != want || !(counit_vec(T, v) == Cyc::one(T.F)))
            throw std::invalid_argument("phi image is not group-like");
    }
    for (int a = 0; a < F.size(); ++a)
        for (int b = 0; b < F.size(); ++b)
            if (!(mul_vec(T, phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)]) ==
                  phi[static_cast<size_t>(F.mul(a, b))]))
                throw std::invalid_argument("phi is not a group homomorphism");
    for (int g = 0; g < F.size(); ++g) {
        const Vec& u = phi[static_cast<size_t>(g)];
        const Vec& ui = phi[static_cast<size_t>(F.inv(g))];
        for (int i = 0; i < T.dim; ++i) {
            Vec e = zero_vec(T);
            e[static_cast<size_t>(i)] = Cyc::one(T.F);
            Vec conj = mul_vec(T, mul_vec(T, u, e), ui);
            Vec acted = sv_to_dense(ad.act[static_cast<size_t>(g)][static_cast<size_t>(i)],
                                    T.dim, T.F);
            if (!(conj == acted))
                throw std::invalid_argument("conjugation condition fails at (" +
                                            std::to_string(g) + ", " + std::to_string(i) + ")");
        }
    }

    auto idx = [&](int t, int k) { return t * K.dim + k; };
    Section out;
    out.s.src_dim = K.dim;
    out.s.dst_dim = H.dim;
    out.s.cols.resize(static_cast<size_t>(K.dim));
    for (int g = 0; g < F.size(); ++g) {
        SVec col;
        const Vec& v = phi[static_cast<size_t>(F.inv(g))];
        for (int i = 0; i < T.dim; ++i)
            if (!v[static_cast<size_t>(i)].is_zero()) col.emplace(idx(i, g), v[static_cast<size_t>(i)]);
        out.s.cols[static_cast<size_t>(g)] = srow_from(col);
    }
    if (!is_hopf_map(out.s, K, H)) throw std::logic_error("section certification failed");
    LinMap proj = sequence_pi(H);
    if (compose(proj, out.s).cols != identity_map(K.dim, K.F).cols)
        throw std::logic_error("section does not split the projection");
    std::vector<Vec> image;
    for (const auto& c : out.s.cols) image.push_back(sv_to_dense(svec_from(c), H.dim, H.F));
    if (!left_adjoint_stable(H, image))
        throw std::logic_error("section image is not adjoint-stable");

    out.tensor_model = tensor_hopf(T, K);
    out.psi.src_dim = H.dim;
    out.psi.dst_dim = H.dim;
    out.psi.cols.resize(static_cast<size_t>(H.dim));
    for (int i = 0; i < T.dim; ++i) {
        Vec e = zero_vec(T);
        e[static_cast<size_t>(i)] = Cyc::one(T.F);
        for (int g = 0; g < F.size(); ++g) {
            Vec tphi = mul_vec(T, e, phi[static_cast<size_t>(g)]);
            SVec col;
            for (int m = 0; m < T.dim; ++m)
                if (!tphi[static_cast<size_t>(m)].is_zero())
                    col.emplace(idx(m, g), tphi[static_cast<size_t>(m)]);
            out.psi.cols[static_cast<size_t>(idx(i, g))] = srow_from(col);
        }
    }
    if (!is_hopf_iso(out.psi, H, out.tensor_model))
        throw std::logic_error("splitting isomorphism certification failed");
    return out;
}

}  // namespace hopf
