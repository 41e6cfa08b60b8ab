#pragma once

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "massey/word.hpp"

namespace massey {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient domain for Magnus expansions: a prime modulus, or 0 for the integers.
class Modulus {
public:
    Modulus() : p_(0) {}
    explicit Modulus(long long p);

    long long value() const { return p_; }
    bool is_integers() const { return p_ == 0; }

private:
    long long p_;
};

// Coefficient of the tensor monomial t_{i_1} ... t_{i_q} in the Magnus expansion
// of the word, where each generator x_i maps to 1 + t_i. Computed by a
// deconcatenation fold over the letters; the empty index yields 1. Results over
// a prime modulus are normalized into [0, p).
BigInt eps(std::span<const int> index, std::span<const Letter> letters, const Modulus& m);
BigInt eps(std::span<const int> index, const Word& w, const Modulus& m);

// All Magnus coefficients of one word up to a fixed order, over F_p
// (Scalar = long long, requires a prime modulus) or over the integers
// (Scalar = BigInt; a prime modulus reduces the results).
template <class Scalar>
class EpsTable {
public:
    EpsTable(const Word& w, int num_generators, int max_order, Modulus m);

    int num_generators() const { return n_; }
    int max_order() const { return max_order_; }
    const Modulus& modulus() const { return m_; }

    // Coefficient for an index tuple with entries in 1..num_generators and
    // length at most max_order.
    const Scalar& at(std::span<const int> index) const;

    // Row-major coefficients of one order: the tuple (i_1, .., i_q) sits at
    // flat position sum((i_t - 1) * n^(q - t)).
    std::span<const Scalar> level(int order) const;

private:
    int n_;
    int max_order_;
    Modulus m_;
    std::vector<std::vector<Scalar>> levels_;

    void apply_letter(const Letter& l);
};

extern template class EpsTable<long long>;
extern template class EpsTable<BigInt>;

// Coefficients of the commutator u v u^-1 v^-1, evaluated over the integers
// by closed formulas in lower-order coefficients of u and v.
BigInt eps2_commutator(int k, int l, const Word& u, const Word& v);
BigInt eps3_commutator(int k, int l, int m, const Word& u, const Word& v);

// Generator conjugated inside a relator: conjugator * x_base * conjugator^-1.
struct ConjugatedGenerator {
    int base;
    Word conjugator;

    Word flatten() const;

    friend bool operator==(const ConjugatedGenerator&, const ConjugatedGenerator&) = default;
};

// First- and second-order coefficients of a product y_1 ... y_n of conjugated
// generators, as closed formulas in the bases and conjugator exponent sums.
long long eps1_conjugated_product(std::span<const ConjugatedGenerator> ys, int k);
long long eps2_conjugated_product(std::span<const ConjugatedGenerator> ys, int k, int l);

// Ordered tuple of conjugated generators (y_1, .., y_n). Its relators are the
// commutators [y_1 .. y_j, y_(j+1) .. y_n] for j = 1 .. n-1.
struct RelatorFamily {
    std::string name;
    std::vector<ConjugatedGenerator> members;

    int relator_count() const { return static_cast<int>(members.size()) - 1; }
    Word left_product(int j) const;
    Word right_product(int j) const;
    Word relator_word(int j) const;
    // Plain family name when there is a single relator, "<name>^j" otherwise.
    std::string relator_name(int j) const;

    friend bool operator==(const RelatorFamily&, const RelatorFamily&) = default;
};

// Closed case formulas for coefficients of the j-th family relator, in terms
// of member positions and conjugator exponent sums only.
long long eps2_family(const RelatorFamily& f, int j, int k, int l);
long long eps3_family(const RelatorFamily& f, int j, int k, int l, int m);

struct FamilyFormMismatch {
    std::string relator;
    std::vector<int> index;
    BigInt closed_form;
    BigInt oracle;
};

// Compares eps2_family and eps3_family against the Magnus expansion of every
// relator of the family over the integers, across all index tuples with
// entries in 1..num_generators. Returns the disagreements in deterministic
// order: by relator, then order 2 before order 3, then lexicographic index.
std::vector<FamilyFormMismatch> audit_family_forms(const RelatorFamily& f, int num_generators);

}
