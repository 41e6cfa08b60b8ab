#include "massey/fp_linalg.hpp"

#include <stdexcept>
#include <utility>

#include "massey/modarith.hpp"

namespace massey {

namespace {

// Row operations via the public interface; matrices here stay small.
void swap_rows(FpMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) {
        const long long t = m(a, c);
        m.set(a, c, m(b, c));
        m.set(b, c, t);
    }
}

void scale_row(FpMatrix& m, int r, long long factor) {
    for (int c = 0; c < m.cols(); ++c)
        m.set(r, c, m(r, c) * factor % m.modulus());
}

// row[dst] += factor * row[src]
void add_scaled_row(FpMatrix& m, int dst, int src, long long factor) {
    for (int c = 0; c < m.cols(); ++c)
        m.add_at(dst, c, factor * m(src, c) % m.modulus());
}

}

FpMatrix::FpMatrix(int rows, int cols, long long p) : p_(p), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("FpMatrix: negative shape");
    if (p < 2 || p >= (1LL << 31) || !is_prime(p))
        throw std::invalid_argument("FpMatrix: modulus must be a prime below 2^31");
    a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

FpMatrix FpMatrix::from_rows(long long p, const std::vector<std::vector<long long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    FpMatrix m(r, c, p);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw std::invalid_argument("FpMatrix::from_rows: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void FpMatrix::set(int r, int c, long long value) {
    a_[index(r, c)] = normalize_mod(value, p_);
}

void FpMatrix::add_at(int r, int c, long long value) {
    a_[index(r, c)] = normalize_mod(a_[index(r, c)] + value, p_);
}

std::size_t FpMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("FpMatrix: index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

FpMatrix transpose(const FpMatrix& m) {
    FpMatrix t(m.cols(), m.rows(), m.modulus());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) t.set(c, r, m(r, c));
    return t;
}

FpVector operator*(const FpMatrix& m, const FpVector& x) {
    if (x.p != m.modulus() || static_cast<int>(x.v.size()) != m.cols())
        throw std::invalid_argument("FpMatrix * FpVector: shape mismatch");
    FpVector y{m.modulus(), std::vector<long long>(static_cast<std::size_t>(m.rows()), 0)};
    for (int r = 0; r < m.rows(); ++r) {
        long long acc = 0;
        for (int c = 0; c < m.cols(); ++c)
            acc = normalize_mod(acc + m(r, c) * normalize_mod(x.v[c], m.modulus()), m.modulus());
        y.v[r] = acc;
    }
    return y;
}

RrefResult rref(const FpMatrix& m) {
    FpMatrix r = m;
    const long long p = m.modulus();
    std::vector<int> pivots;
    int lead = 0;
    for (int col = 0; col < r.cols() && lead < r.rows(); ++col) {
        int pivot = -1;
        for (int i = lead; i < r.rows(); ++i) {
            if (r(i, col) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        swap_rows(r, lead, pivot);
        scale_row(r, lead, mod_inverse(r(lead, col), p));
        for (int i = 0; i < r.rows(); ++i) {
            if (i == lead || r(i, col) == 0) continue;
            add_scaled_row(r, i, lead, p - r(i, col));
        }
        pivots.push_back(col);
        ++lead;
    }
    const int rank = static_cast<int>(pivots.size());
    return {std::move(r), std::move(pivots), rank};
}

std::optional<FpVector> solve(const FpMatrix& m, const FpVector& b) {
    if (b.p != m.modulus() || static_cast<int>(b.v.size()) != m.rows())
        throw std::invalid_argument("solve: shape mismatch");
    FpMatrix aug(m.rows(), m.cols() + 1, m.modulus());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m(r, c));
        aug.set(r, m.cols(), b.v[r]);
    }
    const RrefResult rr = rref(aug);
    for (int k = 0; k < rr.rank; ++k)
        if (rr.pivots[k] == m.cols()) return std::nullopt;
    FpVector x{m.modulus(), std::vector<long long>(static_cast<std::size_t>(m.cols()), 0)};
    for (int k = 0; k < rr.rank; ++k) x.v[rr.pivots[k]] = rr.r(k, m.cols());
    return x;
}

std::vector<FpVector> nullspace(const FpMatrix& m) {
    const RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
    for (int col : rr.pivots) is_pivot[static_cast<std::size_t>(col)] = true;
    std::vector<FpVector> basis;
    for (int j = 0; j < m.cols(); ++j) {
        if (is_pivot[static_cast<std::size_t>(j)]) continue;
        FpVector v{m.modulus(), std::vector<long long>(static_cast<std::size_t>(m.cols()), 0)};
        v.v[j] = 1;
        for (int k = 0; k < rr.rank; ++k)
            v.v[rr.pivots[k]] = normalize_mod(-rr.r(k, j), m.modulus());
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<long long>> in_span(const FpVector& v, std::span<const FpVector> basis) {
    for (const FpVector& b : basis)
        if (b.p != v.p || b.v.size() != v.v.size())
            throw std::invalid_argument("in_span: incompatible vectors");
    FpMatrix m(static_cast<int>(v.v.size()), static_cast<int>(basis.size()), v.p);
    for (int j = 0; j < static_cast<int>(basis.size()); ++j)
        for (int i = 0; i < static_cast<int>(v.v.size()); ++i)
            m.set(i, j, basis[j].v[i]);
    FpVector target{v.p, v.v};
    for (long long& e : target.v) e = normalize_mod(e, v.p);
    const std::optional<FpVector> x = solve(m, target);
    if (!x) return std::nullopt;
    return x->v;
}

}
