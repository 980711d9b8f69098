#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hopf/fin_hopf.hpp"

namespace hopf {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(const std::string& s) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(s);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

/// Text form of a structure-tensor artifact.  Sections are emitted in a fixed
/// order with sorted sparse entries, so identical objects serialize to
/// identical bytes; the trailing line carries a checksum of everything above
/// it.  Exact coefficients travel as cyc literals.
inline std::string hstore_bytes(const FinHopf& H) {
    std::ostringstream os;
    os << "hstore 1\n";
    os << "conductor " << H.F->conductor << "\n";
    os << "dim " << H.dim << "\n";
    os << "labels " << nlohmann::json(H.labels).dump() << "\n";
    os << "provenance " << H.provenance.dump() << "\n";

    std::ostringstream mult;
    long mult_nnz = 0;
    for (int i = 0; i < H.dim; ++i)
        for (int j = 0; j < H.dim; ++j)
            for (const auto& [k, c] : H.mrow(i, j)) {
                mult << i << " " << j << " " << k << " " << c.to_string() << "\n";
                ++mult_nnz;
            }
    os << "mult " << mult_nnz << "\n" << mult.str();

    std::ostringstream unit;
    long unit_nnz = 0;
    for (int k = 0; k < H.dim; ++k)
        if (!H.unit[static_cast<size_t>(k)].is_zero()) {
            unit << k << " " << H.unit[static_cast<size_t>(k)].to_string() << "\n";
            ++unit_nnz;
        }
    os << "unit " << unit_nnz << "\n" << unit.str();

    std::ostringstream comult;
    long comult_nnz = 0;
    for (int i = 0; i < H.dim; ++i)
        for (const auto& [ab, c] : H.comult[static_cast<size_t>(i)]) {
            auto [a, b] = H.split_pair(ab);
            comult << i << " " << a << " " << b << " " << c.to_string() << "\n";
            ++comult_nnz;
        }
    os << "comult " << comult_nnz << "\n" << comult.str();

    std::ostringstream counit;
    long counit_nnz = 0;
    for (int i = 0; i < H.dim; ++i)
        if (!H.counit[static_cast<size_t>(i)].is_zero()) {
            counit << i << " " << H.counit[static_cast<size_t>(i)].to_string() << "\n";
            ++counit_nnz;
        }
    os << "counit " << counit_nnz << "\n" << counit.str();

    std::ostringstream antipode;
    long antipode_nnz = 0;
    for (int j = 0; j < H.dim; ++j)
        for (const auto& [k, c] : H.antipode[static_cast<size_t>(j)]) {
            antipode << j << " " << k << " " << c.to_string() << "\n";
            ++antipode_nnz;
        }
    os << "antipode " << antipode_nnz << "\n" << antipode.str();

    std::string body = os.str();
    return body + "end " + fnv1a64_hex(body) + "\n";
}

inline void save_hstore(const FinHopf& H, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << hstore_bytes(H);
    if (!f) throw std::runtime_error("write failed: " + path);
}

namespace detail {

inline std::string hstore_take_line(const std::string& s, size_t& pos, const std::string& path) {
    if (pos >= s.size()) throw std::runtime_error("artifact truncated: " + path);
    size_t nl = s.find('\n', pos);
    if (nl == std::string::npos) throw std::runtime_error("artifact truncated: " + path);
    std::string line = s.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
}

inline long hstore_header(const std::string& line, const std::string& key,
                          const std::string& path) {
    if (line.rfind(key + " ", 0) != 0)
        throw std::runtime_error("artifact malformed (expected '" + key + "'): " + path);
    return std::stol(line.substr(key.size() + 1));
}

}  // namespace detail

inline FinHopf load_hstore_string(const std::string& bytes, const std::string& path) {
    size_t endpos = bytes.rfind("end ");
    if (endpos == std::string::npos || (endpos != 0 && bytes[endpos - 1] != '\n'))
        throw std::runtime_error("artifact corrupt (missing checksum line): " + path);
    std::string body = bytes.substr(0, endpos);
    std::string tail = bytes.substr(endpos);
    if (tail != "end " + fnv1a64_hex(body) + "\n")
        throw std::runtime_error("artifact corrupt (round-trip hash mismatch): " + path);

    size_t pos = 0;
    auto line = [&]() { return detail::hstore_take_line(body, pos, path); };
    if (line() != "hstore 1")
        throw std::runtime_error("artifact malformed (unknown format version): " + path);
    long conductor = detail::hstore_header(line(), "conductor", path);
    const CycField* F = CycField::get(conductor);
    long dim = detail::hstore_header(line(), "dim", path);
    if (dim <= 0) throw std::runtime_error("artifact malformed (bad dimension): " + path);

    FinHopf H;
    H.F = F;
    H.dim = static_cast<int>(dim);
    size_t n = static_cast<size_t>(dim);

    std::string lab_line = line();
    if (lab_line.rfind("labels ", 0) != 0)
        throw std::runtime_error("artifact malformed (expected 'labels'): " + path);
    nlohmann::json labels = nlohmann::json::parse(lab_line.substr(7));
    if (!labels.is_array() || labels.size() != n)
        throw std::runtime_error("artifact malformed (label count): " + path);
    for (const auto& l : labels) H.labels.push_back(l.get<std::string>());

    std::string prov_line = line();
    if (prov_line.rfind("provenance ", 0) != 0)
        throw std::runtime_error("artifact malformed (expected 'provenance'): " + path);
    H.provenance = nlohmann::json::parse(prov_line.substr(11));

    auto parse_entry = [&](const std::string& l, int ints, int* out) {
        std::istringstream is(l);
        for (int t = 0; t < ints; ++t)
            if (!(is >> out[t]) || out[t] < 0 || out[t] >= H.dim)
                throw std::runtime_error("artifact malformed (tensor index): " + path);
        std::string rest;
        std::getline(is, rest);
        size_t a = rest.find_first_not_of(' ');
        if (a == std::string::npos)
            throw std::runtime_error("artifact malformed (missing coefficient): " + path);
        Cyc c = Cyc::parse(rest.substr(a));
        if (c.field() != F)
            throw std::runtime_error("artifact malformed (coefficient conductor): " + path);
        if (c.is_zero())
            throw std::runtime_error("artifact malformed (stored zero entry): " + path);
        return c;
    };

    long mult_nnz = detail::hstore_header(line(), "mult", path);
    std::vector<SVec> macc(n * n);
    for (long e = 0; e < mult_nnz; ++e) {
        int idx[3];
        Cyc c = parse_entry(line(), 3, idx);
        if (!macc[static_cast<size_t>(idx[0]) * n + static_cast<size_t>(idx[1])]
                 .emplace(idx[2], c)
                 .second)
            throw std::runtime_error("artifact malformed (duplicate tensor entry): " + path);
    }
    H.mult.resize(n * n);
    for (size_t ij = 0; ij < n * n; ++ij) H.mult[ij] = srow_from(macc[ij]);

    long unit_nnz = detail::hstore_header(line(), "unit", path);
    H.unit.assign(n, Cyc::zero(F));
    for (long e = 0; e < unit_nnz; ++e) {
        int idx[1];
        Cyc c = parse_entry(line(), 1, idx);
        H.unit[static_cast<size_t>(idx[0])] = c;
    }

    long comult_nnz = detail::hstore_header(line(), "comult", path);
    std::vector<SVec> cacc(n);
    for (long e = 0; e < comult_nnz; ++e) {
        int idx[3];
        Cyc c = parse_entry(line(), 3, idx);
        if (!cacc[static_cast<size_t>(idx[0])].emplace(H.pair_index(idx[1], idx[2]), c).second)
            throw std::runtime_error("artifact malformed (duplicate tensor entry): " + path);
    }
    H.comult.resize(n);
    for (size_t i = 0; i < n; ++i) H.comult[i] = srow_from(cacc[i]);

    long counit_nnz = detail::hstore_header(line(), "counit", path);
    H.counit.assign(n, Cyc::zero(F));
    for (long e = 0; e < counit_nnz; ++e) {
        int idx[1];
        Cyc c = parse_entry(line(), 1, idx);
        H.counit[static_cast<size_t>(idx[0])] = c;
    }

    long antipode_nnz = detail::hstore_header(line(), "antipode", path);
    std::vector<SVec> sacc(n);
    for (long e = 0; e < antipode_nnz; ++e) {
        int idx[2];
        Cyc c = parse_entry(line(), 2, idx);
        if (!sacc[static_cast<size_t>(idx[0])].emplace(idx[1], c).second)
            throw std::runtime_error("artifact malformed (duplicate tensor entry): " + path);
    }
    H.antipode.resize(n);
    for (size_t j = 0; j < n; ++j) H.antipode[j] = srow_from(sacc[j]);

    if (pos != body.size())
        throw std::runtime_error("artifact malformed (trailing data): " + path);
    return H;
}

inline FinHopf load_hstore(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open artifact: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return load_hstore_string(buf.str(), path);
}

}  // namespace hopf
