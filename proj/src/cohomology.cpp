#include "massey/cohomology.hpp"

#include "massey/modarith.hpp"

namespace massey {

Cohomology::Cohomology(Presentation pres, long long p, int max_order)
    : pres_(std::move(pres)), p_(p), max_order_(max_order) {
    if (max_order < 2)
        throw std::invalid_argument("Cohomology: max_order must be at least 2");
    const Modulus m(p);
    if (m.is_integers())
        throw std::invalid_argument("Cohomology: modulus must be a prime");
    tables_.reserve(pres_.relators().size());
    for (const Relator& r : pres_.relators())
        tables_.emplace_back(r.word, pres_.num_generators(), max_order_, m);
}

void Cohomology::check_class(const OneClass& a, const char* where) const {
    if (a.p != p_)
        throw std::invalid_argument(std::string(where) + ": class modulus differs from the field");
    if (static_cast<int>(a.c.size()) != pres_.num_generators())
        throw std::invalid_argument(std::string(where) + ": class length differs from the generator count");
}

OneClass Cohomology::basis_class(int generator) const {
    OneClass e{p_, std::vector<long long>(static_cast<std::size_t>(pres_.num_generators()), 0)};
    e.c[static_cast<std::size_t>(generator) - 1] = 1;
    return e;
}

TwoClass Cohomology::cup(const OneClass& a, const OneClass& b) const {
    check_class(a, "cup");
    check_class(b, "cup");
    const int n = pres_.num_generators();
    TwoClass out{p_, std::vector<long long>(tables_.size(), 0)};
    for (std::size_t l = 0; l < tables_.size(); ++l) {
        const std::span<const long long> lvl = tables_[l].level(2);
        long long val = 0;
        for (int i = 0; i < n; ++i) {
            const long long ai = normalize_mod(a.c[static_cast<std::size_t>(i)], p_);
            if (ai == 0) continue;
            for (int j = 0; j < n; ++j) {
                const long long bj = normalize_mod(b.c[static_cast<std::size_t>(j)], p_);
                if (bj == 0) continue;
                const long long e = lvl[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                        static_cast<std::size_t>(j)];
                val = (val + ai * bj % p_ * e) % p_;
            }
        }
        out.c[l] = val;
    }
    return out;
}

void Cohomology::require_zero_cup(const OneClass& a, const OneClass& b, const char* label) const {
    const TwoClass q = cup(a, b);
    for (std::size_t l = 0; l < q.c.size(); ++l)
        if (q.c[l] != 0)
            throw UndefinedProductError(std::string("undefined product: ") + label +
                                        " != 0 at relator " + pres_.relators()[l].name);
}

TwoClass Cohomology::massey(const OneClass& a, const OneClass& b, const OneClass& c) const {
    if (max_order_ < 3)
        throw std::logic_error("Cohomology: triple products need max_order >= 3");
    check_class(a, "massey");
    check_class(b, "massey");
    check_class(c, "massey");
    require_zero_cup(a, b, "cup(alpha,beta)");
    require_zero_cup(b, c, "cup(beta,gamma)");

    const int n = pres_.num_generators();
    const std::size_t un = static_cast<std::size_t>(n);
    TwoClass out{p_, std::vector<long long>(tables_.size(), 0)};
    for (std::size_t l = 0; l < tables_.size(); ++l) {
        const std::span<const long long> lvl = tables_[l].level(3);
        long long val = 0;
        for (int i = 0; i < n; ++i) {
            const long long ai = normalize_mod(a.c[static_cast<std::size_t>(i)], p_);
            if (ai == 0) continue;
            for (int j = 0; j < n; ++j) {
                const long long bj = normalize_mod(b.c[static_cast<std::size_t>(j)], p_);
                if (bj == 0) continue;
                const long long ab = ai * bj % p_;
                const std::size_t base = (static_cast<std::size_t>(i) * un +
                                          static_cast<std::size_t>(j)) * un;
                for (int k = 0; k < n; ++k) {
                    const long long ck = normalize_mod(c.c[static_cast<std::size_t>(k)], p_);
                    if (ck == 0) continue;
                    val = (val + ab * ck % p_ * lvl[base + static_cast<std::size_t>(k)]) % p_;
                }
            }
        }
        out.c[l] = val;
    }
    return out;
}

std::vector<TwoClass> Cohomology::indeterminacy(const OneClass& a, const OneClass& c) const {
    check_class(a, "indeterminacy");
    check_class(c, "indeterminacy");
    const int n = pres_.num_generators();
    const int m = static_cast<int>(tables_.size());
    FpMatrix rows(2 * n, m, p_);
    for (int j = 1; j <= n; ++j) {
        const TwoClass left = cup(a, basis_class(j));
        const TwoClass right = cup(basis_class(j), c);
        for (int l = 0; l < m; ++l) {
            rows.set(j - 1, l, left.c[static_cast<std::size_t>(l)]);
            rows.set(n + j - 1, l, right.c[static_cast<std::size_t>(l)]);
        }
    }
    const RrefResult rr = rref(rows);
    std::vector<TwoClass> basis;
    basis.reserve(static_cast<std::size_t>(rr.rank));
    for (int k = 0; k < rr.rank; ++k) {
        TwoClass v{p_, std::vector<long long>(static_cast<std::size_t>(m), 0)};
        for (int l = 0; l < m; ++l) v.c[static_cast<std::size_t>(l)] = rr.r(k, l);
        basis.push_back(std::move(v));
    }
    return basis;
}

MasseyOutcome Cohomology::massey_mod_indeterminacy(const OneClass& a, const OneClass& b,
                                                   const OneClass& c) const {
    TwoClass rep = massey(a, b, c);
    std::vector<TwoClass> basis = indeterminacy(a, c);
    std::vector<FpVector> span;
    span.reserve(basis.size());
    for (const TwoClass& v : basis) span.push_back({p_, v.c});
    std::optional<std::vector<long long>> witness = in_span(FpVector{p_, rep.c}, span);
    const bool vanishes = witness.has_value();
    return {std::move(rep), std::move(basis), vanishes, std::move(witness)};
}

std::optional<OneClass> Cohomology::in_resonance(const OneClass& lambda) const {
    check_class(lambda, "in_resonance");
    FpVector lam{p_, lambda.c};
    for (long long& e : lam.v) e = normalize_mod(e, p_);
    bool zero = true;
    for (long long e : lam.v) zero = zero && e == 0;
    if (zero) throw std::invalid_argument("in_resonance: class must be nonzero");

    const int n = pres_.num_generators();
    const int m = static_cast<int>(tables_.size());
    FpMatrix k(m, n, p_);
    for (int j = 1; j <= n; ++j) {
        const TwoClass col = cup(lambda, basis_class(j));
        for (int l = 0; l < m; ++l) k.set(l, j - 1, col.c[static_cast<std::size_t>(l)]);
    }
    const std::vector<FpVector> line{lam};
    for (const FpVector& v : nullspace(k))
        if (!in_span(v, line)) return OneClass{p_, v.v};
    return std::nullopt;
}

ResonanceComponent monomial_resonance_component(int r, long long p) {
    if (r < 2)
        throw std::invalid_argument("monomial_resonance_component: r must be at least 2");
    const int n = 3 * r + 3;
    FpMatrix eq(r * r + 3, n, p);
    int row = 0;
    auto put = [&eq, &row](int generator) { eq.add_at(row, generator - 1, 1); };
    for (int i = 1; i <= r; ++i) {
        put(i);
        put(2 * r);
        put(2 * r + i);
        ++row;
    }
    for (int t = 1; t <= r; ++t)
        for (int s = t + 1; s <= r; ++s) {
            put(s);
            put(2 * r - t);
            put(2 * r + s - t);
            ++row;
        }
    for (int s = 1; s <= r - 1; ++s)
        for (int t = s; t <= r - 1; ++t) {
            put(s);
            put(2 * r - t);
            put(3 * r + s - t);
            ++row;
        }
    for (int g = 3 * r + 1; g <= 3 * r + 3; ++g) {
        put(g);
        ++row;
    }
    std::vector<FpVector> basis = nullspace(eq);
    const int dim = static_cast<int>(basis.size());
    return {p, r, std::move(eq), std::move(basis), dim};
}

ClassPair nonvanishing_pair(long long p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("nonvanishing_pair: p must be an odd prime");
    const int r = static_cast<int>(p);
    const std::size_t n = static_cast<std::size_t>(3 * r + 3);
    OneClass alpha{p, std::vector<long long>(n, 0)};
    OneClass beta{p, std::vector<long long>(n, 0)};
    for (int i = 1; i <= r; ++i) {
        alpha.c[static_cast<std::size_t>(i) - 1] = 1;
        alpha.c[static_cast<std::size_t>(r + i) - 1] = p - 1;
        beta.c[static_cast<std::size_t>(r + i) - 1] = 1;
        beta.c[static_cast<std::size_t>(2 * r + i) - 1] = p - 1;
    }
    return {std::move(alpha), std::move(beta)};
}

}
