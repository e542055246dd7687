#include "detskein/coloring.hpp"

#include <map>
#include <stdexcept>

#include "detskein/error.hpp"
#include "union_find.hpp"

namespace detskein {

ColoringMatrix coloring_matrix(const LinkDiagram& d) {
    if (!d.slots().empty()) throw DomainError("diagram has unfilled slots");
    if (d.crossings().empty()) throw DomainError("coloring matrix needs at least one crossing");
    // Arcs joined through an over-pass carry one color.
    UnionFind<ArcId> uf;
    for (const auto& x : d.crossings()) uf.unite(x.arcs[1], x.arcs[3]);
    std::map<ArcId, std::size_t> column;
    for (const auto& x : d.crossings()) {
        for (ArcId a : x.arcs) column.try_emplace(uf.find(a), 0);
    }
    std::size_t next = 0;
    for (auto& [root, c] : column) c = next++;

    ColoringMatrix m;
    m.rows = d.crossings().size();
    m.cols = column.size() + static_cast<std::size_t>(d.free_loops());
    m.entries.assign(m.rows * m.cols, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const auto& a = d.crossings()[r].arcs;
        m.entries[r * m.cols + column.at(uf.find(a[1]))] += 2;
        m.entries[r * m.cols + column.at(uf.find(a[0]))] -= 1;
        m.entries[r * m.cols + column.at(uf.find(a[2]))] -= 1;
    }
    return m;
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt minor_determinant(const ColoringMatrix& m, std::size_t row, std::size_t col) {
    if (m.rows != m.cols) throw DomainError("minor of a non-square coloring matrix");
    std::vector<std::vector<BigInt>> sub;
    for (std::size_t r = 0; r < m.rows; ++r) {
        if (r == row) continue;
        std::vector<BigInt> line;
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (c != col) line.emplace_back(m.at(r, c));
        }
        sub.push_back(std::move(line));
    }
    return bareiss_determinant(std::move(sub));
}

BigInt determinant(const LinkDiagram& d) {
    if (!d.slots().empty()) throw DomainError("diagram has unfilled slots");
    if (d.crossings().empty()) return components(d) == 1 ? 1 : 0;
    ColoringMatrix m = coloring_matrix(d);
    // Each free loop and each extra over-arc class beyond the crossing count
    // means a split diagram.
    if (m.cols != m.rows) return 0;
    BigInt det = minor_determinant(m, m.rows - 1, m.cols - 1);
    return det < 0 ? BigInt(-det) : det;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) return false;
    }
    return true;
}

namespace {

void require_prime(int n) {
    if (!is_prime(n)) throw DomainError(std::to_string(n) + " is not prime");
}

}  // namespace

bool colorable_by_rank(const LinkDiagram& d, int n) {
    require_prime(n);
    if (!d.slots().empty()) throw DomainError("diagram has unfilled slots");
    std::size_t rows = 0;
    std::size_t cols = static_cast<std::size_t>(d.free_loops());
    std::vector<std::vector<std::int64_t>> a;
    if (!d.crossings().empty()) {
        ColoringMatrix m = coloring_matrix(d);
        rows = m.rows;
        cols = m.cols;
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<std::int64_t> line;
            for (std::size_t c = 0; c < cols; ++c) line.push_back(((m.at(r, c) % n) + n) % n);
            a.push_back(std::move(line));
        }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        std::int64_t inv = 1;
        for (std::int64_t e = n - 2, b = a[rank][c]; e > 0; e >>= 1, b = b * b % n) {
            if (e & 1) inv = inv * b % n;
        }
        for (auto& v : a[rank]) v = v * inv % n;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            std::int64_t f = a[r][c];
            for (std::size_t k = 0; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % n + n) % n;
        }
        ++rank;
    }
    return cols - rank >= 2;
}

bool colorable_by_determinant(const LinkDiagram& d, int n) {
    require_prime(n);
    return determinant(d) % n == 0;
}

bool n_colorable(const LinkDiagram& d, int n) {
    bool by_rank = colorable_by_rank(d, n);
    if (by_rank != colorable_by_determinant(d, n)) {
        throw std::logic_error("rank and divisibility colorability criteria disagree");
    }
    return by_rank;
}

}  // namespace detskein
