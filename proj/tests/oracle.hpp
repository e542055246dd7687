#pragma once

// Reference computations used by the tests. Nothing here calls into the
// library except for reading compiled tangles; determinants come from the
// per-label coloring system, solved over the rationals.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Pd {
    std::vector<std::array<int, 4>> x;
    int loops = 0;
};

inline Pd parse(const std::string& text) {
    Pd out;
    static const std::regex cross(R"(X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
    static const std::regex loop(R"(U\[\s*(\d+)\s*\])");
    for (std::sregex_iterator it(text.begin(), text.end(), cross), end; it != end; ++it) {
        out.x.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
    }
    for (std::sregex_iterator it(text.begin(), text.end(), loop), end; it != end; ++it) {
        out.loops += std::stoi((*it)[1]);
    }
    if (out.x.empty() && out.loops == 0) out.loops = 1;
    return out;
}

inline std::vector<int> labels(const Pd& d) {
    std::set<int> s;
    for (const auto& c : d.x) s.insert(c.begin(), c.end());
    return {s.begin(), s.end()};
}

class Dsu {
public:
    int find(int a) {
        auto it = parent_.find(a);
        if (it == parent_.end()) return parent_[a] = a;
        if (it->second == a) return a;
        return it->second = find(it->second);
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::map<int, int> parent_;
};

inline int components(const Pd& d) {
    Dsu u;
    for (const auto& c : d.x) {
        u.unite(c[0], c[2]);
        u.unite(c[1], c[3]);
    }
    std::set<int> roots;
    for (int a : labels(d)) roots.insert(u.find(a));
    return static_cast<int>(roots.size()) + d.loops;
}

inline Int rational_det(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m[r][k] == 0) continue;
            Rat f = m[r][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[r][j] -= f * m[k][j];
        }
    }
    Int num = boost::multiprecision::numerator(det);
    return num < 0 ? Int(-num) : num;
}

// One unknown per PD label. Each crossing contributes "over labels agree"
// and "2 over - under - under = 0"; drop the last relation and the last
// unknown and take the absolute determinant.
inline Int determinant(const Pd& d) {
    if (d.x.empty()) return d.loops == 1 ? 1 : 0;
    if (d.loops > 0) return 0;
    const auto ls = labels(d);
    std::map<int, std::size_t> col;
    for (std::size_t i = 0; i < ls.size(); ++i) col[ls[i]] = i;
    std::vector<std::vector<Rat>> rows;
    for (const auto& c : d.x) {
        std::vector<Rat> eq(ls.size(), 0), rel(ls.size(), 0);
        eq[col[c[1]]] += 1;
        eq[col[c[3]]] -= 1;
        rel[col[c[1]]] += 2;
        rel[col[c[0]]] -= 1;
        rel[col[c[2]]] -= 1;
        rows.push_back(eq);
        rows.push_back(rel);
    }
    rows.pop_back();
    for (auto& r : rows) r.pop_back();
    if (rows.size() != ls.size() - 1) return 0;
    return rational_det(std::move(rows));
}

inline Int determinant(const std::string& pd) { return determinant(parse(pd)); }
inline int components(const std::string& pd) { return components(parse(pd)); }

// Which boundary positions (0..3 = NW, NE, SW, SE) a compiled tangle joins.
// Returns the partner of each boundary position.
inline std::array<int, 4> boundary_pairing(const std::vector<std::array<int, 4>>& crossings,
                                           const std::array<int, 4>& boundary) {
    Dsu u;
    for (const auto& c : crossings) {
        u.unite(c[0], c[2]);
        u.unite(c[1], c[3]);
    }
    std::array<int, 4> partner{-1, -1, -1, -1};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i != j && u.find(boundary[i]) == u.find(boundary[j])) partner[i] = j;
        }
    }
    return partner;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

}  // namespace oracle
