#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <string>
#include <vector>

#include "massey/cohomology.hpp"
#include "massey/modarith.hpp"

using namespace massey;

namespace {

OneClass cls(long long p, std::vector<long long> c) { return {p, std::move(c)}; }

bool all_zero(const TwoClass& v) {
    for (long long e : v.c)
        if (e != 0) return false;
    return true;
}

TwoClass add(const TwoClass& a, const TwoClass& b) {
    TwoClass out{a.p, a.c};
    for (std::size_t i = 0; i < out.c.size(); ++i)
        out.c[i] = normalize_mod(out.c[i] + b.c[i], a.p);
    return out;
}

OneClass combine(long long p, const std::vector<FpVector>& basis,
                 const std::vector<long long>& coef) {
    OneClass out{p, std::vector<long long>(basis.front().v.size(), 0)};
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < out.c.size(); ++i)
            out.c[i] = normalize_mod(out.c[i] + coef[k] * basis[k].v[i], p);
    return out;
}

Word random_word(std::mt19937& rng, int num_generators, int length) {
    std::uniform_int_distribution<int> gen(1, num_generators);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Letter> ls;
    for (int i = 0; i < length; ++i) ls.push_back({gen(rng), coin(rng) ? 1 : -1});
    return Word(std::span<const Letter>(ls));
}

// Relators built from commutators always abelianize to zero.
Presentation random_presentation(std::mt19937& rng, int num_generators, int num_relators) {
    Presentation p(num_generators);
    std::uniform_int_distribution<int> pieces(1, 2);
    for (int i = 0; i < num_relators; ++i) {
        Word w;
        for (int k = pieces(rng); k > 0; --k)
            w = w * commutator(random_word(rng, num_generators, 4),
                               random_word(rng, num_generators, 4));
        p.add_relator("R" + std::to_string(i), std::move(w));
    }
    return p;
}

OneClass random_class(std::mt19937& rng, long long p, int n) {
    std::uniform_int_distribution<long long> entry(0, p - 1);
    OneClass a{p, std::vector<long long>(static_cast<std::size_t>(n), 0)};
    for (auto& e : a.c) e = entry(rng);
    return a;
}

}

TEST_CASE("cup product on a single commutator relation") {
    Presentation pres(2);
    pres.add_relator("R", commutator(Word::parse("x1"), Word::parse("x2")));
    for (long long p : {2LL, 3LL, 7LL}) {
        const Cohomology h(pres, p);
        CHECK(h.cup(cls(p, {1, 0}), cls(p, {0, 1})).c == std::vector<long long>{1});
        CHECK(h.cup(cls(p, {0, 1}), cls(p, {1, 0})).c == std::vector<long long>{p - 1});
        CHECK(all_zero(h.cup(cls(p, {1, 0}), cls(p, {1, 0}))));
    }
}

TEST_CASE("cup is bilinear, antisymmetric, and self-annihilating") {
    std::mt19937 rng(3301);
    for (long long p : {2LL, 3LL, 5LL}) {
        for (int trial = 0; trial < 12; ++trial) {
            const Presentation pres = random_presentation(rng, 3, 3);
            const Cohomology h(pres, p);
            const OneClass a = random_class(rng, p, 3);
            const OneClass b = random_class(rng, p, 3);
            const OneClass c = random_class(rng, p, 3);

            OneClass ab{p, {}};
            for (std::size_t i = 0; i < a.c.size(); ++i)
                ab.c.push_back(normalize_mod(a.c[i] + b.c[i], p));
            CHECK(h.cup(ab, c) == add(h.cup(a, c), h.cup(b, c)));
            CHECK(h.cup(c, ab) == add(h.cup(c, a), h.cup(c, b)));

            CHECK(all_zero(h.cup(a, a)));
            CHECK(all_zero(add(h.cup(a, b), h.cup(b, a))));
        }
    }
}

TEST_CASE("three-generator fixture group: cup pairing lives on the third relator") {
    const Cohomology h(Presentation::kty(), 2);
    for (int am = 0; am < 8; ++am) {
        for (int bm = 0; bm < 8; ++bm) {
            const OneClass a = cls(2, {am & 1, (am >> 1) & 1, (am >> 2) & 1});
            const OneClass b = cls(2, {bm & 1, (bm >> 1) & 1, (bm >> 2) & 1});
            const TwoClass q = h.cup(a, b);
            CHECK(q.c[0] == 0);
            CHECK(q.c[1] == 0);
            CHECK(q.c[2] == normalize_mod(a.c[0] * b.c[1] + a.c[1] * b.c[0], 2));
        }
    }
}

TEST_CASE("three-generator fixture group: triple products") {
    const Cohomology h(Presentation::kty(), 2);
    const OneClass e1 = cls(2, {1, 0, 0});
    const OneClass e2 = cls(2, {0, 1, 0});
    const OneClass e3 = cls(2, {0, 0, 1});

    CHECK(h.massey(e1, e1, e3).c == std::vector<long long>{1, 0, 0});

    try {
        h.massey(e1, e1, e2);
        FAIL("expected UndefinedProductError");
    } catch (const UndefinedProductError& e) {
        const std::string what = e.what();
        CHECK(what.find("cup(beta,gamma)") != std::string::npos);
        CHECK(what.find("relator R3") != std::string::npos);
    }
    try {
        h.massey(e2, e1, e1);
        FAIL("expected UndefinedProductError");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("cup(alpha,beta)") != std::string::npos);
    }

    const auto basis = h.indeterminacy(e1, e3);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].c == std::vector<long long>{0, 0, 1});

    const MasseyOutcome out = h.massey_mod_indeterminacy(e1, e1, e3);
    CHECK(out.representative.c == std::vector<long long>{1, 0, 0});
    CHECK_FALSE(out.vanishes);
    CHECK_FALSE(out.witness.has_value());

    // e3 cups to zero with everything, so thereis no indeterminacy and the
    // zero representative vanishes with an empty witness.
    const MasseyOutcome z = h.massey_mod_indeterminacy(e3, e3, e3);
    CHECK(all_zero(z.representative));
    CHECK(z.indeterminacy_basis.empty());
    CHECK(z.vanishes);
    REQUIRE(z.witness.has_value());
    CHECK(z.witness->empty());

    // <e1,e1,e1> is zero and the indeterminacy subspace is one-dimensional.
    const MasseyOutcome w = h.massey_mod_indeterminacy(e1, e1, e1);
    CHECK(all_zero(w.representative));
    REQUIRE(w.indeterminacy_basis.size() == 1);
    CHECK(w.vanishes);
    REQUIRE(w.witness.has_value());
    CHECK(*w.witness == std::vector<long long>{0});
}

TEST_CASE("triple product representative matches the order-three expansion directly") {
    const Presentation pres = Presentation::kty();
    const Cohomology h(pres, 2);
    const OneClass e1 = cls(2, {1, 0, 0});
    const OneClass e3 = cls(2, {0, 0, 1});
    const TwoClass rep = h.massey(e1, e1, e3);
    for (std::size_t l = 0; l < pres.relators().size(); ++l) {
        const BigInt expected = eps(std::array{1, 1, 3}, pres.relators()[l].word, Modulus(2));
        CHECK(rep.c[l] == expected.convert_to<long long>());
    }
}

TEST_CASE("resonance component of the monomial groups has dimension 2, or 3 at p | r") {
    for (int r = 2; r <= 8; ++r) {
        for (long long p : {2LL, 3LL, 5LL, 7LL}) {
            const ResonanceComponent comp = monomial_resonance_component(r, p);
            CAPTURE(r);
            CAPTURE(p);
            CHECK(comp.equations.rows() == r * r + 3);
            CHECK(comp.equations.cols() == 3 * r + 3);
            CHECK(comp.dim == (r % p == 0 ? 3 : 2));
            CHECK(static_cast<int>(comp.basis.size()) == comp.dim);
        }
    }
    CHECK_THROWS_AS(monomial_resonance_component(1, 3), std::invalid_argument);
}

TEST_CASE("the distinguished pair lies in the component, for every odd prime") {
    for (long long p : {3LL, 5LL, 7LL}) {
        const ClassPair pair = nonvanishing_pair(p);
        const ResonanceComponent comp = monomial_resonance_component(static_cast<int>(p), p);
        CHECK(all_zero({p, (comp.equations * FpVector{p, pair.alpha.c}).v}));
        CHECK(all_zero({p, (comp.equations * FpVector{p, pair.beta.c}).v}));
    }
    CHECK_THROWS_AS(nonvanishing_pair(2), std::invalid_argument);
    CHECK_THROWS_AS(nonvanishing_pair(9), std::invalid_argument);
}

TEST_CASE("the component is isotropic for the cup product") {
    std::mt19937 rng(3302);
    for (const auto& [r, p] : std::vector<std::pair<int, long long>>{{3, 3}, {3, 5}, {5, 3}, {4, 2}}) {
        const ResonanceComponent comp = monomial_resonance_component(r, p);
        const Cohomology h(Presentation::monomial(r), p, 2);
        std::uniform_int_distribution<long long> entry(0, p - 1);
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<long long> ca, cb;
            for (int k = 0; k < comp.dim; ++k) {
                ca.push_back(entry(rng));
                cb.push_back(entry(rng));
            }
            const OneClass lam = combine(p, comp.basis, ca);
            const OneClass mu = combine(p, comp.basis, cb);
            CHECK(all_zero(h.cup(lam, mu)));
        }
    }
}

TEST_CASE("triple products over the component are linear in each slot") {
    const long long p = 5;
    const ResonanceComponent comp = monomial_resonance_component(3, p);
    const Cohomology h(Presentation::monomial(3), p);
    std::mt19937 rng(3303);
    std::uniform_int_distribution<long long> entry(0, p - 1);
    auto pick = [&] {
        std::vector<long long> c;
        for (int k = 0; k < comp.dim; ++k) c.push_back(entry(rng));
        return combine(p, comp.basis, c);
    };
    for (int trial = 0; trial < 5; ++trial) {
        const OneClass a1 = pick(), a2 = pick(), b = pick(), c = pick();
        OneClass sum{p, {}};
        for (std::size_t i = 0; i < a1.c.size(); ++i)
            sum.c.push_back(normalize_mod(a1.c[i] + a2.c[i], p));
        CHECK(h.massey(sum, b, c) == add(h.massey(a1, b, c), h.massey(a2, b, c)));
        CHECK(h.massey(b, sum, c) == add(h.massey(b, a1, c), h.massey(b, a2, c)));
        CHECK(h.massey(b, c, sum) == add(h.massey(b, c, a1), h.massey(b, c, a2)));
    }
}

TEST_CASE("order-three monomial group at p = 3: the distinguished triple product") {
    const long long p = 3;
    const Presentation pres = Presentation::monomial(3);
    const Cohomology h(pres, p);
    const ClassPair pair = nonvanishing_pair(p);

    CHECK(all_zero(h.cup(pair.alpha, pair.alpha)));
    CHECK(all_zero(h.cup(pair.alpha, pair.beta)));

    const std::map<std::string, long long> expected{
        {"C^2", 1},       {"C^3", 2},       {"C^4", 2},       {"T_1^2", 2},
        {"T_2^2", 2},     {"T_3^2", 2},     {"U_{1,2}^1", 1}, {"U_{1,2}^2", 1},
        {"U_{1,3}^1", 1}, {"U_{1,3}^2", 1}, {"U_{2,3}^1", 2}, {"U_{2,3}^2", 1},
        {"V_{1,1}^1", 1}, {"V_{1,1}^2", 1}, {"V_{1,2}^1", 2}, {"V_{1,2}^2", 1},
        {"V_{2,2}^1", 2}, {"V_{2,2}^2", 1},
    };
    const TwoClass rep = h.massey(pair.alpha, pair.alpha, pair.beta);
    for (std::size_t l = 0; l < pres.relators().size(); ++l) {
        const std::string& name = pres.relators()[l].name;
        const auto it = expected.find(name);
        CAPTURE(name);
        CHECK(rep.c[l] == (it == expected.end() ? 0 : it->second));
    }

    const MasseyOutcome out = h.massey_mod_indeterminacy(pair.alpha, pair.alpha, pair.beta);
    CHECK_FALSE(out.vanishes);
    CHECK_FALSE(out.witness.has_value());
}

TEST_CASE("resonance membership of degree-one classes") {
    Presentation one_rel(2);
    one_rel.add_relator("R", commutator(Word::parse("x1"), Word::parse("x2")));
    const Cohomology surface(one_rel, 3);
    CHECK_FALSE(surface.in_resonance(cls(3, {1, 0})).has_value());
    CHECK_FALSE(surface.in_resonance(cls(3, {1, 2})).has_value());

    Presentation free_two(2);
    const Cohomology free_h(free_two, 3);
    const auto partner = free_h.in_resonance(cls(3, {1, 0}));
    REQUIRE(partner.has_value());
    CHECK(all_zero(free_h.cup(cls(3, {1, 0}), *partner)));

    const long long p = 3;
    const Cohomology mono(Presentation::monomial(3), p, 2);
    const ClassPair pair = nonvanishing_pair(p);
    const auto mate = mono.in_resonance(pair.alpha);
    REQUIRE(mate.has_value());
    CHECK(all_zero(mono.cup(pair.alpha, *mate)));
    CHECK_FALSE(in_span(FpVector{p, mate->c}, std::vector<FpVector>{{p, pair.alpha.c}}).has_value());

    CHECK_THROWS_AS(mono.in_resonance(cls(p, std::vector<long long>(12, 0))),
                    std::invalid_argument);
}

TEST_CASE("argument validation") {
    const Cohomology h(Presentation::kty(), 2);
    CHECK_THROWS_AS(h.cup(cls(3, {1, 0, 0}), cls(2, {0, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(h.cup(cls(2, {1, 0}), cls(2, {0, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(Cohomology(Presentation::kty(), 4), std::invalid_argument);
    CHECK_THROWS_AS(Cohomology(Presentation::kty(), 0), std::invalid_argument);
    CHECK_THROWS_AS(Cohomology(Presentation::kty(), 2, 1), std::invalid_argument);

    const Cohomology cup_only(Presentation::kty(), 2, 2);
    CHECK_NOTHROW(cup_only.cup(cls(2, {1, 0, 0}), cls(2, {0, 0, 1})));
    CHECK_THROWS_AS(cup_only.massey(cls(2, {1, 0, 0}), cls(2, {1, 0, 0}), cls(2, {0, 0, 1})),
                    std::logic_error);
}
