#pragma once

#include <string>
#include <vector>

#include "hopf/scene.hpp"

namespace hopf {

/// One analysis section of a report.  `failed` marks a broken exact identity
/// (verification failure); `conclusive` is false when the section could not
/// settle anything either way.
struct ReportSection {
    std::string heading;
    std::vector<std::string> lines;
    bool failed = false;
    bool conclusive = true;
};

namespace detail {

inline std::string order_multiset(const GroupTable& G) {
    std::map<int, int> hist;
    for (int i = 0; i < G.size(); ++i) ++hist[G.order_of(i)];
    std::string out;
    for (const auto& [ord, count] : hist) {
        if (!out.empty()) out += ", ";
        out += std::to_string(ord) + (count > 1 ? "^" + std::to_string(count) : "");
    }
    return out;
}

inline GroupTable cyclic_group(int d) {
    if (d == 1) return GroupTable::enumerate(PermGroup::from_strings(1, {}));
    std::string cyc = "(";
    for (int i = 1; i <= d; ++i) cyc += (i > 1 ? " " : "") + std::to_string(i);
    cyc += ")";
    return GroupTable::enumerate(PermGroup::from_strings(d, {cyc}));
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

/// Human name for a composition factor, certified where claimed: prime-dim
/// factors are matched against the cyclic model by a witnessed isomorphism;
/// larger factors are described by which side's group-likes span them.
inline std::string factor_name(const FinHopf& Hf) {
    int d = Hf.dim;
    if (d == 1) return "k";
    if (is_prime(d)) {
        FinHopf model = group_algebra(cyclic_group(d), Hf.F);
        IsoVerdict v = isomorphism_search(Hf, model);
        if (v.kind == IsoVerdict::Kind::iso) return "k^(Z/" + std::to_string(d) + ")";
    }
    try {
        auto gl = group_likes(Hf);
        if (static_cast<int>(gl.size()) == d) {
            auto gs = grouplike_group(Hf, gl);
            return std::string("k[G], |G| = ") + std::to_string(d) +
                   (gs.table.is_abelian() ? " (abelian)" : " (nonabelian)");
        }
        FinHopf Hd = dual_hopf(Hf);
        auto gld = group_likes(Hd);
        if (static_cast<int>(gld.size()) == d) {
            auto gs = grouplike_group(Hd, gld);
            return std::string("k^(G), |G| = ") + std::to_string(d) +
                   (gs.table.is_abelian() ? " (abelian)" : " (nonabelian)");
        }
    } catch (const std::runtime_error&) {
        // conductor too small for the eigenvalue stock: fall through
    }
    return "dim " + std::to_string(d) + " (unidentified)";
}

}  // namespace detail

inline ReportSection group_likes_report(const FinHopf& H) {
    ReportSection s;
    s.heading = "group-likes";
    try {
        auto gl = group_likes(H);
        auto gs = grouplike_group(H, gl);
        s.lines.push_back("group-like elements: " + std::to_string(gl.size()));
        s.lines.push_back(std::string("group structure: ") +
                          (gs.table.is_abelian() ? "abelian" : "nonabelian") +
                          ", element orders " + detail::order_multiset(gs.table));
    } catch (const std::runtime_error& e) {
        s.lines.push_back(std::string("group-like computation inconclusive: ") + e.what());
        s.conclusive = false;
    }
    return s;
}

inline ReportSection composition_series_report(const FinHopf& H) {
    ReportSection s;
    s.heading = "composition-series";
    try {
        CompositionSeries cs = composition_series(H);
        s.lines.push_back("composition series: length " + std::to_string(cs.factors.size()) +
                          (cs.certified ? " (every split certified)" : " (uncertified)"));
        for (size_t i = 0; i < cs.factors.size(); ++i)
            s.lines.push_back("factor " + std::to_string(i + 1) + ": dim " +
                              std::to_string(cs.factors[i].dim) + ", " +
                              detail::factor_name(cs.factors[i]));
        if (!cs.certified) s.conclusive = false;
    } catch (const std::runtime_error& e) {
        s.lines.push_back(std::string("composition series inconclusive: ") + e.what());
        s.conclusive = false;
    }
    return s;
}

inline ReportSection obstructions_report(const FinHopf& H) {
    ReportSection s;
    s.heading = "obstructions";
    std::string qt = "inconclusive", cqt = "inconclusive";
    bool tri_known = false;
    TriangularityReport tri;
    try {
        tri = triangularity_obstructions(H);
        tri_known = true;
        qt = tri.not_quasitriangular() ? "established" : "inconclusive";
        cqt = tri.not_coquasitriangular() ? "established" : "inconclusive";
    } catch (const std::runtime_error& e) {
        s.lines.push_back(std::string("triangularity screen inconclusive: ") + e.what());
    }
    AbelianExtensionReport ab = abelian_extension_obstruction(H);
    std::string abv = ab.witness_found ? "refuted" : (ab.search_complete ? "established" : "inconclusive");
    s.lines.push_back("not quasitriangular: " + qt + "; not coquasitriangular: " + cqt +
                      "; not abelian extension over searched candidates: " + abv);
    if (tri_known) {
        s.lines.push_back("group-likes: |G(H)| = " + std::to_string(tri.group_like_order) +
                          (tri.group_likes_abelian ? " (abelian)" : " (nonabelian)") +
                          ", |G(H*)| = " + std::to_string(tri.dual_group_like_order) +
                          (tri.dual_group_likes_abelian ? " (abelian)" : " (nonabelian)"));
    }
    s.lines.push_back(ab.summary);
    if (ab.witness_found)
        s.lines.push_back("abelian-extension witness: normal commutative subalgebra of dim " +
                          std::to_string(ab.witness_dim) + " with cocommutative quotient");
    CandidateSearch cs = normal_candidates(H);
    s.lines.push_back("searched candidates: " + std::to_string(cs.candidates.size()) +
                      std::string(cs.complete ? " (normal list classified complete)"
                                              : " (search incomplete)"));
    for (const auto& c : cs.candidates)
        s.lines.push_back("  - dim " + std::to_string(c.basis.size()) + ", origin " + c.origin +
                          (c.normal ? ", normal Hopf subalgebra"
                                    : (c.closed ? ", Hopf subalgebra (not normal)"
                                                : ", not closed")));
    s.conclusive = (qt == "established") || (cqt == "established") || (abv != "inconclusive");
    return s;
}

inline ReportSection exactness_report(const FinHopf& H) {
    ReportSection s;
    s.heading = "exactness";
    ExactSequenceCert cert;
    try {
        cert = certify_recorded_sequence(H);
    } catch (const std::invalid_argument& e) {
        throw VerificationError(e.what());
    }
    s.lines.push_back("exact sequence: k -> " + std::to_string(cert.iota.src_dim) + " -> " +
                      std::to_string(H.dim) + " -> " + std::to_string(cert.pi.dst_dim) + " -> k");
    if (!cert.ok()) {
        s.failed = true;
        s.lines.push_back("certificate fails: " + cert.failure);
        return s;
    }
    s.lines.push_back("inclusion injective: yes");
    s.lines.push_back("projection surjective: yes");
    s.lines.push_back("kernel of projection = ideal on the augmentation part: yes");
    s.lines.push_back("coinvariants = included subalgebra: yes");
    s.lines.push_back(std::string("dimensions multiply: ") +
                      (cert.dims_multiplicative ? "yes" : "no"));
    return s;
}

/// Structural comparison of two artifacts.  Exit semantics: 0 when settled
/// either way (identical, certified isomorphism, or a named distinguishing
/// invariant), 3 when the search is inconclusive.
struct DiffReport {
    std::vector<std::string> lines;
    bool conclusive = true;
};

inline DiffReport diff_artifacts(const FinHopf& A, const FinHopf& B) {
    if (A.F->conductor != B.F->conductor)
        throw InputError("conductor mismatch: " + std::to_string(A.F->conductor) + " vs " +
                         std::to_string(B.F->conductor));
    if (A.dim != B.dim)
        throw InputError("dimension mismatch: " + std::to_string(A.dim) + " vs " +
                         std::to_string(B.dim));
    DiffReport r;
    if (structure_equal(A, B)) {
        r.lines.push_back("identical structure constants");
        return r;
    }
    IsoVerdict v = isomorphism_search(A, B);
    switch (v.kind) {
        case IsoVerdict::Kind::iso:
            r.lines.push_back("isomorphic: certified change of basis (" + v.detail + ")");
            break;
        case IsoVerdict::Kind::distinct:
            r.lines.push_back("distinct: " + v.detail);
            break;
        case IsoVerdict::Kind::unknown:
            r.lines.push_back("inconclusive: " + v.detail);
            r.conclusive = false;
            break;
    }
    return r;
}

}  // namespace hopf
