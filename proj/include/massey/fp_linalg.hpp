#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace massey {

// Dense matrix over the prime field F_p; entries are kept in [0, p).
class FpMatrix {
public:
    // Zero matrix. Requires rows, cols >= 0 and p a prime below 2^31.
    FpMatrix(int rows, int cols, long long p);

    // All rows must have equal length; entries are reduced mod p.
    static FpMatrix from_rows(long long p, const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long modulus() const { return p_; }

    long long operator()(int r, int c) const { return a_[index(r, c)]; }
    void set(int r, int c, long long value);
    void add_at(int r, int c, long long value);

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    long long p_;
    int rows_;
    int cols_;
    std::vector<long long> a_;

    std::size_t index(int r, int c) const;
};

// Vector over F_p; entries are expected in [0, p).
struct FpVector {
    long long p;
    std::vector<long long> v;

    friend bool operator==(const FpVector&, const FpVector&) = default;
};

FpMatrix transpose(const FpMatrix& m);
FpVector operator*(const FpMatrix& m, const FpVector& x);

struct RrefResult {
    FpMatrix r;
    std::vector<int> pivots;  // pivot column of each of the first `rank` rows
    int rank;
};

// Reduced row echelon form. Deterministic: for each column the first row with
// a nonzero entry, scanned top to bottom, becomes the pivot row.
RrefResult rref(const FpMatrix& m);

// One solution of m x = b with every free variable set to zero, or nullopt
// when the system is inconsistent.
std::optional<FpVector> solve(const FpMatrix& m, const FpVector& b);

// Basis of the right kernel, one vector per free column, in column order.
std::vector<FpVector> nullspace(const FpMatrix& m);

// Coefficients expressing v in the given spanning vectors, or nullopt when v
// lies outside their span. An empty spanning set spans only the zero vector.
std::optional<std::vector<long long>> in_span(const FpVector& v, std::span<const FpVector> basis);

}
