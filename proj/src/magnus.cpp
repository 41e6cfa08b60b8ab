#include "massey/magnus.hpp"

#include <array>
#include <stdexcept>
#include <type_traits>

#include "massey/modarith.hpp"

namespace massey {

Modulus::Modulus(long long p) : p_(p) {
    if (p == 0) return;
    if (p < 2 || p >= (1LL << 31) || !is_prime(p))
        throw std::invalid_argument("Modulus: expected 0 (for integers) or a prime below 2^31");
}

BigInt eps(std::span<const int> index, std::span<const Letter> letters, const Modulus& m) {
    for (int v : index)
        if (v < 1) throw std::invalid_argument("eps: index entries are 1-based generator indices");
    const int q = static_cast<int>(index.size());
    // s[j] tracks the coefficient of the length-j prefix of the index over the
    // letters consumed so far; appending a letter only feeds s[j] from lower j.
    std::vector<BigInt> s(static_cast<std::size_t>(q) + 1);
    s[0] = 1;
    for (const Letter& l : letters) {
        if (l.sign > 0) {
            for (int j = q; j >= 1; --j)
                if (index[j - 1] == l.gen) s[j] += s[j - 1];
        } else {
            for (int j = q; j >= 1; --j) {
                BigInt acc = 0;
                long long sign = -1;
                for (int t = 1; t <= j && index[j - t] == l.gen; ++t) {
                    acc += sign * s[j - t];
                    sign = -sign;
                }
                s[j] += acc;
            }
        }
        if (!m.is_integers())
            for (BigInt& x : s) x %= m.value();
    }
    BigInt r = s[static_cast<std::size_t>(q)];
    if (!m.is_integers()) {
        r %= m.value();
        if (r < 0) r += m.value();
    }
    return r;
}

BigInt eps(std::span<const int> index, const Word& w, const Modulus& m) {
    return eps(index, std::span<const Letter>(w.letters()), m);
}

template <class Scalar>
EpsTable<Scalar>::EpsTable(const Word& w, int num_generators, int max_order, Modulus m)
    : n_(num_generators), max_order_(max_order), m_(m) {
    if constexpr (std::is_same_v<Scalar, long long>) {
        if (m.is_integers())
            throw std::invalid_argument("EpsTable: integer coefficients need the big-integer scalar");
    }
    if (num_generators < 1)
        throw std::invalid_argument("EpsTable: need at least one generator");
    if (num_generators < w.max_generator())
        throw std::invalid_argument("EpsTable: word uses a generator above num_generators");
    if (max_order < 0)
        throw std::invalid_argument("EpsTable: negative order");

    constexpr std::size_t kMaxEntries = 20'000'000;
    std::size_t size = 1;
    std::size_t total = 0;
    levels_.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int q = 0; q <= max_order; ++q) {
        total += size;
        if (total > kMaxEntries)
            throw std::invalid_argument("EpsTable: requested table exceeds the size limit");
        levels_.emplace_back(size, Scalar(0));
        size *= static_cast<std::size_t>(n_);
    }
    levels_[0][0] = 1;

    for (const Letter& l : w) apply_letter(l);

    if constexpr (std::is_same_v<Scalar, BigInt>) {
        if (!m_.is_integers()) {
            const long long p = m_.value();
            for (auto& lvl : levels_)
                for (BigInt& x : lvl) {
                    x %= p;
                    if (x < 0) x += p;
                }
        }
    }
}

template <class Scalar>
void EpsTable<Scalar>::apply_letter(const Letter& l) {
    const std::size_t n = static_cast<std::size_t>(n_);
    const std::size_t g = static_cast<std::size_t>(l.gen) - 1;
    const long long p = m_.value();
    // Descending order: level q reads only levels below it, which still hold
    // the values from before this letter.
    for (int q = max_order_; q >= 1; --q) {
        auto& cur = levels_[static_cast<std::size_t>(q)];
        if (l.sign > 0) {
            const auto& prev = levels_[static_cast<std::size_t>(q) - 1];
            for (std::size_t f = g; f < cur.size(); f += n) {
                if constexpr (std::is_same_v<Scalar, long long>)
                    cur[f] = (cur[f] + prev[f / n]) % p;
                else
                    cur[f] += prev[f / n];
            }
        } else {
            for (std::size_t f = g; f < cur.size(); f += n) {
                // Indices whose last t entries all equal the letter's generator
                // contribute with alternating sign.
                Scalar acc = 0;
                long long sign = -1;
                std::size_t fk = f;
                for (int t = 1; t <= q && fk % n == g; ++t) {
                    fk /= n;
                    acc += sign * levels_[static_cast<std::size_t>(q - t)][fk];
                    sign = -sign;
                    if constexpr (std::is_same_v<Scalar, long long>) acc %= p;
                }
                if constexpr (std::is_same_v<Scalar, long long>)
                    cur[f] = normalize_mod(cur[f] + acc, p);
                else
                    cur[f] += acc;
            }
        }
    }
}

template <class Scalar>
const Scalar& EpsTable<Scalar>::at(std::span<const int> index) const {
    if (static_cast<int>(index.size()) > max_order_)
        throw std::out_of_range("EpsTable::at: index longer than max_order");
    std::size_t f = 0;
    for (int v : index) {
        if (v < 1 || v > n_)
            throw std::out_of_range("EpsTable::at: index entry out of range");
        f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
    }
    return levels_[index.size()][f];
}

template <class Scalar>
std::span<const Scalar> EpsTable<Scalar>::level(int order) const {
    if (order < 0 || order > max_order_)
        throw std::out_of_range("EpsTable::level: order out of range");
    return levels_[static_cast<std::size_t>(order)];
}

template class EpsTable<long long>;
template class EpsTable<BigInt>;

BigInt eps2_commutator(int k, int l, const Word& u, const Word& v) {
    const Modulus z;
    auto e1 = [&](int a, const Word& w) { return eps(std::array{a}, w, z); };
    return e1(k, u) * e1(l, v) - e1(k, v) * e1(l, u);
}

BigInt eps3_commutator(int k, int l, int m, const Word& u, const Word& v) {
    const Modulus z;
    auto e1 = [&](int a, const Word& w) { return eps(std::array{a}, w, z); };
    auto e2 = [&](int a, int b, const Word& w) { return eps(std::array{a, b}, w, z); };
    return e1(k, u) * e2(l, m, v) - e1(m, u) * e2(k, l, v) + e2(k, l, u) * e1(m, v)
         - e1(k, v) * e2(l, m, u)
         + (e1(k, v) * e1(l, u) - e1(k, u) * e1(l, v)) * (e1(m, u) + e1(m, v));
}

Word ConjugatedGenerator::flatten() const {
    const Letter x{base, 1};
    return conjugate(Word(std::span<const Letter>(&x, 1)), conjugator);
}

long long eps1_conjugated_product(std::span<const ConjugatedGenerator> ys, int k) {
    long long sum = 0;
    for (const ConjugatedGenerator& y : ys)
        if (y.base == k) sum += 1;
    return sum;
}

long long eps2_conjugated_product(std::span<const ConjugatedGenerator> ys, int k, int l) {
    long long sum = 0;
    for (const ConjugatedGenerator& y : ys) {
        if (y.base == l) sum += exponent_sum(y.conjugator, k);
        if (y.base == k) sum -= exponent_sum(y.conjugator, l);
    }
    for (std::size_t a = 0; a < ys.size(); ++a)
        for (std::size_t b = a + 1; b < ys.size(); ++b)
            if (ys[a].base == k && ys[b].base == l) sum += 1;
    return sum;
}

namespace {

void check_relator_index(const RelatorFamily& f, int j) {
    if (j < 1 || j > f.relator_count())
        throw std::out_of_range("RelatorFamily: relator index out of range");
}

// 1-based position of the first member with the given base among the first j
// members (left) or among the rest (right); 0 when absent.
int left_position(const RelatorFamily& f, int j, int g) {
    for (int a = 1; a <= j; ++a)
        if (f.members[static_cast<std::size_t>(a) - 1].base == g) return a;
    return 0;
}

int right_position(const RelatorFamily& f, int j, int g) {
    for (int b = j + 1; b <= static_cast<int>(f.members.size()); ++b)
        if (f.members[static_cast<std::size_t>(b) - 1].base == g) return b;
    return 0;
}

}

Word RelatorFamily::left_product(int j) const {
    check_relator_index(*this, j);
    Word w;
    for (int a = 0; a < j; ++a) w = w * members[static_cast<std::size_t>(a)].flatten();
    return w;
}

Word RelatorFamily::right_product(int j) const {
    check_relator_index(*this, j);
    Word w;
    for (std::size_t a = static_cast<std::size_t>(j); a < members.size(); ++a)
        w = w * members[a].flatten();
    return w;
}

Word RelatorFamily::relator_word(int j) const {
    return commutator(left_product(j), right_product(j));
}

std::string RelatorFamily::relator_name(int j) const {
    check_relator_index(*this, j);
    if (relator_count() == 1) return name;
    return name + "^" + std::to_string(j);
}

long long eps2_family(const RelatorFamily& f, int j, int k, int l) {
    check_relator_index(f, j);
    if (left_position(f, j, k) && right_position(f, j, l)) return 1;
    if (right_position(f, j, k) && left_position(f, j, l)) return -1;
    return 0;
}

long long eps3_family(const RelatorFamily& f, int j, int k, int l, int m) {
    check_relator_index(f, j);
    const int ka = left_position(f, j, k), kb = right_position(f, j, k);
    const int la = left_position(f, j, l), lb = right_position(f, j, l);
    const int ma = left_position(f, j, m), mb = right_position(f, j, m);
    auto E = [&f](int g, int pos) {
        return exponent_sum(f.members[static_cast<std::size_t>(pos) - 1].conjugator, g);
    };
    if (ka && lb) {
        if (!ma && !mb) return E(m, lb);
        if (ma) return E(k, lb) - E(m, lb) - 1;
        return E(l, mb) - E(l, ka) - E(m, lb) + (lb <= mb ? 1 : 0) - 1;
    }
    if (kb && la) {
        if (!ma && !mb) return -E(m, la);
        if (mb) return E(k, la) - E(m, la) + 1;
        return E(l, ma) - E(l, kb) - E(m, la) + (la <= ma ? 1 : 0) + 1;
    }
    if (ka && la && mb) return E(l, mb) + E(k, la) - E(l, ka) + (ka <= la ? 1 : 0);
    if (kb && lb && ma) return E(l, ma) + E(k, lb) - E(l, kb) + (kb <= lb ? 1 : 0);
    return 0;
}

std::vector<FamilyFormMismatch> audit_family_forms(const RelatorFamily& f, int num_generators) {
    std::vector<FamilyFormMismatch> out;
    const Modulus integers;
    for (int j = 1; j <= f.relator_count(); ++j) {
        const EpsTable<BigInt> table(f.relator_word(j), num_generators, 3, integers);
        const std::string relator = f.relator_name(j);
        for (int k = 1; k <= num_generators; ++k) {
            for (int l = 1; l <= num_generators; ++l) {
                const std::array<int, 2> index{k, l};
                const BigInt closed = eps2_family(f, j, k, l);
                const BigInt& oracle = table.at(index);
                if (closed != oracle)
                    out.push_back({relator, {k, l}, closed, oracle});
            }
        }
        for (int k = 1; k <= num_generators; ++k) {
            for (int l = 1; l <= num_generators; ++l) {
                for (int m = 1; m <= num_generators; ++m) {
                    const std::array<int, 3> index{k, l, m};
                    const BigInt closed = eps3_family(f, j, k, l, m);
                    const BigInt& oracle = table.at(index);
                    if (closed != oracle)
                        out.push_back({relator, {k, l, m}, closed, oracle});
                }
            }
        }
    }
    return out;
}

}
