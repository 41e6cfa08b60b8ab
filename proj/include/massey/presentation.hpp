#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "massey/magnus.hpp"
#include "massey/word.hpp"

namespace massey {

class PresentationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Relator of a finitely presented group. Relators expanded from a family
// carry the family's index and their split position within it.
struct Relator {
    std::string name;
    Word word;
    int family = -1;
    int split = 0;

    friend bool operator==(const Relator&, const Relator&) = default;
};

// Finitely presented group whose relators all abelianize to zero, so that
// first homology is free of rank num_generators.
class Presentation {
public:
    explicit Presentation(int num_generators, std::string origin = "");

    int num_generators() const { return num_generators_; }
    const std::string& origin() const { return origin_; }

    // Requires a fresh nonempty name, generators within range, and a word
    // with zero exponent sum for every generator.
    void add_relator(std::string name, Word w);

    // Validates the family, then appends its relators in split order.
    void add_family(RelatorFamily f);

    const std::vector<Relator>& relators() const { return relators_; }
    const std::vector<RelatorFamily>& families() const { return families_; }

    // Group of order-r monomial symmetry type on 3r + 3 generators, with
    // relator families A, B, C, D_{1,s}, D_{2,s}, D_{3,s}, T_s, U_{t,s},
    // V_{s,t}. Requires r >= 2.
    static Presentation monomial(int r);

    // Three-generator group with relators R1 = [x3 x1 x3, x1],
    // R2 = [x3 x2 x3, x2], R3 = [x3 x1 x3^-1, x2].
    static Presentation kty();

    static Presentation load(std::istream& in);
    static Presentation load_file(const std::string& path);
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;

    // Origin is informational and excluded from equality.
    friend bool operator==(const Presentation& a, const Presentation& b) {
        return a.num_generators_ == b.num_generators_ && a.relators_ == b.relators_ &&
               a.families_ == b.families_;
    }

private:
    int num_generators_;
    std::string origin_;
    std::vector<Relator> relators_;
    std::vector<RelatorFamily> families_;

    void check_fresh_relator_name(const std::string& name) const;
};

}
