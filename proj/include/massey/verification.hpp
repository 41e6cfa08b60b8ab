#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "massey/cohomology.hpp"

namespace massey {

// The coordinates the triple product <alpha, alpha, beta> of nonvanishing_pair
// must take on the order-p monomial presentation, read off relator by relator
// from the family names. Throws std::invalid_argument on any name outside the
// monomial naming scheme.
TwoClass expected_monomial_class(const Presentation& pres, long long p);

struct VerifyStage {
    std::string name;
    bool ok = false;
    std::string detail;
};

// End-to-end check that the order-p monomial group has a non-vanishing triple
// product: presentation shape, component membership, cup vanishing, the
// product itself, comparison against the expected coordinates (exactly and
// modulo indeterminacy), and the final verdict.
struct MainTheoremReport {
    long long p = 0;
    bool ok = false;
    std::vector<VerifyStage> stages;
    std::vector<std::string> relator_names;
    MasseyOutcome outcome;
};

MainTheoremReport verify_main_theorem(long long p);

struct KtyPair {
    OneClass alpha;
    OneClass beta;
    bool defined = false;
    bool vanishes = false;
};

struct KtyWitness {
    OneClass alpha;
    bool found = false;
    OneClass beta;
};

// Exhaustive F_2 survey of the three-generator curve group: the basis cup
// table, all 64 (alpha, beta) pairs with <alpha, alpha, beta>, and for every
// alpha outside {0, (1,1,1)} the search for a beta making the product defined
// and non-vanishing.
struct KtyReport {
    bool cup_table_ok = false;
    std::vector<KtyPair> pairs;
    std::vector<KtyWitness> witnesses;
    bool ok = false;
};

KtyReport verify_kty();

// Canonical one-line-per-pair rendering of the 64-row table.
std::string kty_table_text(const KtyReport& report);

nlohmann::ordered_json to_json(const MasseyOutcome& out,
                               const std::vector<std::string>& relator_names);
nlohmann::ordered_json to_json(const MainTheoremReport& report);
nlohmann::ordered_json to_json(const KtyReport& report);

}
