#pragma once

#include <cassert>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopf/rational.hpp"

namespace hopf {

namespace poly {

// Dense univariate polynomials over Q, ascending coefficients, no trailing
// zeros (normalized). Only what the cyclotomic layer needs.

inline void normalize(std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::vector<Rat> mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    normalize(out);
    return out;
}

/// Euclidean division a = q*b + r, deg r < deg b. b must be nonzero.
inline void divmod(std::vector<Rat> a, const std::vector<Rat>& b, std::vector<Rat>& q,
                   std::vector<Rat>& r) {
    assert(!b.empty());
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
    const Rat& lead = b.back();
    while (a.size() >= b.size()) {
        Rat f = a.back() / lead;
        size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        normalize(a);
        if (a.empty()) break;
        if (a.size() >= b.size() && a.back() == 0) normalize(a);
    }
    normalize(q);
    r = std::move(a);
}

/// The N-th cyclotomic polynomial, computed by exact division of x^N-1 by all
/// proper-divisor cyclotomics. Memoized; coefficients are integers.
inline const std::vector<Rat>& cyclotomic(long N) {
    static std::map<long, std::vector<Rat>> memo;
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    std::vector<Rat> num(static_cast<size_t>(N) + 1, Rat(0));
    num[0] = -1;
    num[static_cast<size_t>(N)] = 1;  // x^N - 1
    for (long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        std::vector<Rat> q, r;
        divmod(num, cyclotomic(d), q, r);
        assert(r.empty());
        num = std::move(q);
    }
    return memo.emplace(N, std::move(num)).first->second;
}

}  // namespace poly

/// Q(zeta_N) presented as Q[x]/(Phi_N). One immutable instance per conductor,
/// owned by a process-wide registry so Cyc values can share a raw pointer.
class CycField {
  public:
    long conductor;
    int deg;                            // deg Phi_N
    std::vector<Rat> phi;               // Phi_N, ascending, monic
    std::vector<std::vector<Rat>> red;  // red[k] = x^(deg+k) mod Phi_N, k = 0..deg-2

    static const CycField* get(long N) {
        if (N < 1 || N > 100000) throw std::invalid_argument("conductor out of range");
        static std::map<long, std::unique_ptr<CycField>> registry;
        auto it = registry.find(N);
        if (it == registry.end())
            it = registry.emplace(N, std::unique_ptr<CycField>(new CycField(N))).first;
        return it->second.get();
    }

  private:
    explicit CycField(long N) : conductor(N) {
        phi = poly::cyclotomic(N);
        deg = static_cast<int>(phi.size()) - 1;
        // red[0] = x^deg mod Phi (Phi monic); red[k] = x * red[k-1] mod Phi.
        if (deg > 1) {
            red.reserve(static_cast<size_t>(deg - 1));
            std::vector<Rat> cur(phi.begin(), phi.end() - 1);
            for (auto& c : cur) c = -c;
            red.push_back(cur);
            for (int k = 1; k + 1 < deg; ++k) {
                std::vector<Rat> nxt(static_cast<size_t>(deg), Rat(0));
                const Rat top = cur[static_cast<size_t>(deg - 1)];
                for (int j = deg - 1; j >= 1; --j)
                    nxt[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
                if (top != 0)
                    for (int j = 0; j < deg; ++j)
                        nxt[static_cast<size_t>(j)] += top * red[0][static_cast<size_t>(j)];
                cur = std::move(nxt);
                red.push_back(cur);
            }
        }
    }
};

/// Element of Q(zeta_N): dense coefficient vector of length deg Phi_N over Q,
/// always reduced mod Phi_N. Canonical form, so == is structural.
class Cyc {
  public:
    Cyc() : F_(nullptr) {}
    Cyc(const CycField* F, long v) : F_(F), c_(static_cast<size_t>(F->deg), Rat(0)) { c_[0] = v; }
    Cyc(const CycField* F, const Rat& v) : F_(F), c_(static_cast<size_t>(F->deg), Rat(0)) {
        c_[0] = v;
        c_[0].canonicalize();
    }
    Cyc(const CycField* F, std::vector<Rat> coeffs) : F_(F), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<size_t>(F->deg))
            throw std::invalid_argument("cyc coefficient count != deg Phi_N");
        for (auto& x : c_) x.canonicalize();  // mpq_class(n, d) does not canonicalize
    }

    static Cyc zero(const CycField* F) { return Cyc(F, 0); }
    static Cyc one(const CycField* F) { return Cyc(F, 1); }

    /// zeta_N^k, k arbitrary (reduced mod N). Cached per field.
    static Cyc root_of_unity(const CycField* F, long k) {
        static std::map<const CycField*, std::vector<Cyc>> cache;
        auto& pows = cache[F];
        if (pows.empty()) {
            pows.reserve(static_cast<size_t>(F->conductor));
            Cyc cur = one(F);
            Cyc z = zeta_raw(F);
            for (long i = 0; i < F->conductor; ++i) {
                pows.push_back(cur);
                cur = cur * z;
            }
        }
        k %= F->conductor;
        if (k < 0) k += F->conductor;
        return pows[static_cast<size_t>(k)];
    }
    static Cyc zeta(const CycField* F) { return root_of_unity(F, 1); }

    const CycField* field() const { return F_; }
    bool is_null() const { return F_ == nullptr; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_one() const {
        if (c_[0] != 1) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    /// Rational part if the element lies in Q, else nullptr.
    const Rat* as_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return nullptr;
        return &c_[0];
    }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        a.check(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    Cyc& operator+=(const Cyc& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyc& operator-=(const Cyc& o) {
        check(o);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator-(Cyc a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        a.check(b);
        const int deg = a.F_->deg;
        if (deg == 1) {
            Cyc r(a.F_, 0);
            r.c_[0] = a.c_[0] * b.c_[0];
            return r;
        }
        std::vector<Rat> prod(static_cast<size_t>(2 * deg - 1), Rat(0));
        for (int i = 0; i < deg; ++i) {
            if (a.c_[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < deg; ++j)
                prod[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
        Cyc r(a.F_, 0);
        for (int j = 0; j < deg; ++j) r.c_[static_cast<size_t>(j)] = std::move(prod[static_cast<size_t>(j)]);
        for (int k = deg; k <= 2 * deg - 2; ++k) {
            const Rat& hi = prod[static_cast<size_t>(k)];
            if (hi == 0) continue;
            const auto& row = a.F_->red[static_cast<size_t>(k - deg)];
            for (int j = 0; j < deg; ++j) r.c_[static_cast<size_t>(j)] += hi * row[static_cast<size_t>(j)];
        }
        return r;
    }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    friend Cyc operator*(const Cyc& a, const Rat& s) {
        Cyc r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    friend Cyc operator*(const Rat& s, const Cyc& a) { return a * s; }

    /// Multiplicative inverse via extended Euclid against Phi_N.
    Cyc inv() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(zeta_N)");
        std::vector<Rat> r0 = F_->phi;
        std::vector<Rat> r1 = c_;
        poly::normalize(r1);
        std::vector<Rat> t0, t1{Rat(1)};
        while (!r1.empty() && r1.size() > 1) {
            std::vector<Rat> q, rem;
            poly::divmod(r0, r1, q, rem);
            r0 = std::move(r1);
            r1 = std::move(rem);
            std::vector<Rat> t2 = t0;  // t2 = t0 - q*t1
            std::vector<Rat> qt = poly::mul(q, t1);
            if (t2.size() < qt.size()) t2.resize(qt.size(), Rat(0));
            for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
            poly::normalize(t2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r1 is a nonzero constant (Phi_N irreducible over Q).
        assert(r1.size() == 1 && r1[0] != 0);
        Cyc out(F_, 0);
        Rat scale = Rat(1) / r1[0];
        for (size_t i = 0; i < t1.size() && i < out.c_.size(); ++i) out.c_[i] = t1[i] * scale;
        if (t1.size() > out.c_.size()) {
            // Reduce the (rare) overflow degrees mod Phi_N.
            for (size_t k = out.c_.size(); k < t1.size(); ++k) {
                if (t1[k] == 0) continue;
                const auto& row = F_->red[k - out.c_.size()];
                for (size_t j = 0; j < out.c_.size(); ++j) out.c_[j] += t1[k] * scale * row[j];
            }
        }
        return out;
    }
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

    Cyc pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Cyc base = *this, acc = one(F_);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    /// Canonical literal, e.g. "cyc(N=4)[0/1, 1/1]" = zeta_4.
    std::string to_string() const {
        std::ostringstream os;
        os << "cyc(N=" << F_->conductor << ")[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ", ";
            os << rat_to_string(c_[i]);
        }
        os << "]";
        return os.str();
    }

    static Cyc parse(const std::string& s) {
        auto fail = [&]() { throw std::invalid_argument("bad cyc literal: " + s); };
        if (s.rfind("cyc(N=", 0) != 0) fail();
        size_t p = s.find(')', 6);
        if (p == std::string::npos) fail();
        long N = std::stol(s.substr(6, p - 6));
        if (p + 1 >= s.size() || s[p + 1] != '[' || s.back() != ']') fail();
        const CycField* F = CycField::get(N);
        std::vector<Rat> coeffs;
        std::string body = s.substr(p + 2, s.size() - p - 3);
        size_t start = 0;
        while (start <= body.size() && !body.empty()) {
            size_t comma = body.find(',', start);
            std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            size_t a = tok.find_first_not_of(' ');
            size_t b = tok.find_last_not_of(' ');
            if (a == std::string::npos) fail();
            coeffs.push_back(rat_from_string(tok.substr(a, b - a + 1)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (coeffs.size() != static_cast<size_t>(F->deg)) fail();
        return Cyc(F, std::move(coeffs));
    }

  private:
    static Cyc zeta_raw(const CycField* F) {
        Cyc z(F, 0);
        if (F->deg == 1) {
            z.c_[0] = -F->phi[0];  // x = -phi0 mod (x + phi0)
        } else {
            z.c_[1] = 1;
        }
        return z;
    }
    void check(const Cyc& o) const {
        if (F_ != o.F_) throw std::invalid_argument("conductor mismatch between scalars");
    }

    const CycField* F_;
    std::vector<Rat> c_;
};

}  // namespace hopf
