#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcdc::testing {

namespace {
using u64 = std::uint64_t;
using u32 = std::uint32_t;

u32 fmul(const Field& F, u32 a, u32 b) { return static_cast<u32>(F.mul_packed(a, b)); }
u32 fadd(const Field& F, u32 a, u32 b) { return static_cast<u32>(F.add_packed(a, b)); }
u32 fneg(const Field& F, u32 a) { return static_cast<u32>(F.packed(F.neg(F.from_packed(a)))); }
u32 finv(const Field& F, u32 a) { return static_cast<u32>(F.packed(F.inv(F.from_packed(a)))); }

// row-reduce in place, returning pivot columns
std::vector<std::size_t> rref(const Field& F, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        u32 inv = finv(F, m[row][col]);
        for (auto& v : m[row]) v = fmul(F, v, inv);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            u32 c = fneg(F, m[r][col]);
            for (std::size_t j = 0; j < cols; ++j) m[r][j] = fadd(F, m[r][j], fmul(F, c, m[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}
}  // namespace

Matrix generator_matrix(const CyclicCode& c) {
    Matrix m(c.k, std::vector<u32>(c.n, 0));
    for (u64 i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.g.coeffs().size(); ++j) m[i][i + j] = c.g.coeffs()[j];
    return m;
}

std::size_t rank(const Field& F, Matrix m) { return rref(F, m).size(); }

Matrix null_space(const Field& F, const Matrix& m_in) {
    Matrix m = m_in;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<std::size_t> pivots = rref(F, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<u32> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = fneg(F, m[r][free]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t intersection_dim(const Field& F, const Matrix& a, const Matrix& b) {
    Matrix stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return rank(F, a) + rank(F, b) - rank(F, stacked);
}

bool same_row_space(const Field& F, const Matrix& a, const Matrix& b) {
    Matrix stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    std::size_t ra = rank(F, a), rb = rank(F, b);
    return ra == rb && rank(F, stacked) == ra;
}

std::uint64_t exhaustive_min_weight(const CyclicCode& c) {
    const Field& F = *c.field;
    u64 q = static_cast<u64>(F.size());
    u64 total = 1;
    for (u64 i = 0; i < c.k; ++i) {
        if (total > (u64(1) << 40) / q) throw std::invalid_argument("oracle enumeration too large");
        total *= q;
    }
    std::vector<u32> msg(c.k, 0);
    u64 best = c.n + 1;
    for (u64 idx = 1; idx < total; ++idx) {
        std::size_t i = 0;
        while (true) {
            msg[i] = static_cast<u32>((msg[i] + 1) % q);
            if (msg[i] != 0) break;
            ++i;
        }
        std::vector<u32> cw = encode(c, msg);
        u64 w = static_cast<u64>(std::count_if(cw.begin(), cw.end(), [](u32 v) { return v != 0; }));
        best = std::min(best, w);
    }
    return best;
}

}  // namespace lcdc::testing
