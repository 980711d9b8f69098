#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hopf {

/// Permutation of {0..d-1} as an image vector: p[i] is the image of i.
/// Products compose right-to-left: (p*q)(x) = p(q(x)).
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
    Perm p(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}

inline bool perm_is_valid(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || static_cast<size_t>(v) >= p.size() || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    return true;
}

inline Perm perm_mul(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("permutation degree mismatch");
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<size_t>(q[i])];
    return r;
}

inline Perm perm_inv(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return r;
}

inline bool perm_is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

inline long perm_order(const Perm& p) {
    Perm cur = p;
    long n = 1;
    while (!perm_is_identity(cur)) {
        cur = perm_mul(cur, p);
        ++n;
        if (n > 1000000) throw std::runtime_error("permutation order overflow");
    }
    return n;
}

/// Canonical cycle notation, 1-based, fixed points omitted, cycles sorted by
/// least moved point; the identity prints as "e".
inline std::string perm_to_string(const Perm& p) {
    std::ostringstream os;
    std::vector<bool> done(p.size(), false);
    bool any = false;
    for (size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == static_cast<int>(i)) continue;
        any = true;
        os << "(";
        size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = true;
            if (!first) os << " ";
            os << (j + 1);
            first = false;
            j = static_cast<size_t>(p[j]);
        }
        os << ")";
    }
    return any ? os.str() : "e";
}

/// Parses "(1 2)(3 4)" style input (commas also accepted inside cycles);
/// "e" or "()" is the identity. Points are 1-based and must be <= degree.
inline Perm perm_parse(const std::string& s, int degree) {
    Perm p = perm_identity(degree);
    size_t i = 0;
    auto skip_ws = [&]() { while (i < s.size() && (s[i] == ' ' || s[i] == ',')) ++i; };
    skip_ws();
    if (i < s.size() && (s.compare(i, 1, "e") == 0)) {
        ++i;
        skip_ws();
        if (i != s.size()) throw std::invalid_argument("bad permutation literal: " + s);
        return p;
    }
    std::vector<bool> used(static_cast<size_t>(degree), false);
    while (i < s.size()) {
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] != '(') throw std::invalid_argument("bad permutation literal: " + s);
        ++i;
        std::vector<int> cycle;
        while (true) {
            skip_ws();
            if (i >= s.size()) throw std::invalid_argument("unterminated cycle: " + s);
            if (s[i] == ')') {
                ++i;
                break;
            }
            size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw std::invalid_argument("bad permutation literal: " + s);
            int v = std::stoi(s.substr(i, j - i));
            if (v < 1 || v > degree) throw std::invalid_argument("point out of range in: " + s);
            if (used[static_cast<size_t>(v - 1)])
                throw std::invalid_argument("point repeated in: " + s);
            used[static_cast<size_t>(v - 1)] = true;
            cycle.push_back(v - 1);
            i = j;
        }
        for (size_t k = 0; k < cycle.size(); ++k)
            p[static_cast<size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    if (!perm_is_valid(p)) throw std::invalid_argument("bad permutation literal: " + s);
    return p;
}

}  // namespace hopf
