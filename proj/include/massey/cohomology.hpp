#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "massey/fp_linalg.hpp"
#include "massey/magnus.hpp"
#include "massey/presentation.hpp"

namespace massey {

// Raised when a triple product is requested for classes whose cup products
// do not all vanish.
class UndefinedProductError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Degree-one cohomology class over F_p: one residue per generator.
struct OneClass {
    long long p;
    std::vector<long long> c;

    friend bool operator==(const OneClass&, const OneClass&) = default;
};

// Degree-two class, expressed by its values on the relators in relator order.
struct TwoClass {
    long long p;
    std::vector<long long> c;

    friend bool operator==(const TwoClass&, const TwoClass&) = default;
};

struct MasseyOutcome {
    TwoClass representative;
    std::vector<TwoClass> indeterminacy_basis;
    bool vanishes = false;
    // Coefficients over the indeterminacy basis when the product vanishes.
    std::optional<std::vector<long long>> witness;
};

// Low-degree F_p cohomology of a presentation, computed from the Magnus
// coefficients of its relators. Tables for every relator are built once.
class Cohomology {
public:
    Cohomology(Presentation pres, long long p, int max_order = 3);

    const Presentation& presentation() const { return pres_; }
    long long prime() const { return p_; }

    // Cup product of two degree-one classes, evaluated on every relator.
    TwoClass cup(const OneClass& a, const OneClass& b) const;

    // Representative of the triple product <a, b, c>. Requires cup(a, b) = 0
    // and cup(b, c) = 0; otherwise raises UndefinedProductError naming the
    // first relator where the precondition fails.
    TwoClass massey(const OneClass& a, const OneClass& b, const OneClass& c) const;

    // Row-reduced basis of cup(a, H^1) + cup(H^1, c), the indeterminacy
    // subspace of <a, ., c>.
    std::vector<TwoClass> indeterminacy(const OneClass& a, const OneClass& c) const;

    // Triple product together with its coset data: vanishes exactly when the
    // representative lies in the indeterminacy subspace.
    MasseyOutcome massey_mod_indeterminacy(const OneClass& a, const OneClass& b,
                                           const OneClass& c) const;

    // For nonzero lambda: a partner class outside span{lambda} whose cup
    // product with lambda vanishes, or nullopt when no such partner exists.
    std::optional<OneClass> in_resonance(const OneClass& lambda) const;

private:
    Presentation pres_;
    long long p_;
    int max_order_;
    std::vector<EpsTable<long long>> tables_;

    void check_class(const OneClass& a, const char* where) const;
    void require_zero_cup(const OneClass& a, const OneClass& b, const char* label) const;
    OneClass basis_class(int generator) const;
};

// Linear system cutting out the isotropic component of the degree-one
// resonance variety of the order-r monomial group that supports the
// non-vanishing triple products, together with its solution basis.
struct ResonanceComponent {
    long long p;
    int r;
    FpMatrix equations;
    std::vector<FpVector> basis;
    int dim;
};

ResonanceComponent monomial_resonance_component(int r, long long p);

// The two classes in that component whose triple product <alpha, alpha, beta>
// does not vanish on the order-p monomial group. Requires an odd prime.
struct ClassPair {
    OneClass alpha;
    OneClass beta;
};

ClassPair nonvanishing_pair(long long p);

}
