#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace massey {

// One letter of a group word: a generator index (1-based) with exponent +1 or -1.
struct Letter {
    int gen;
    int sign;

    friend bool operator==(const Letter&, const Letter&) = default;
};

class WordParseError : public std::runtime_error {
public:
    WordParseError(const std::string& what, std::size_t position);

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Freely reduced word in a free group. The letter sequence never contains an
// adjacent inverse pair; every constructor and operation restores that form.
class Word {
public:
    Word() = default;
    explicit Word(std::span<const Letter> letters);

    // Grammar: atoms separated by whitespace or '*', each atom "x<i>" or
    // "x<i>^<e>" with i >= 1 and e a nonzero integer; a bare "1" denotes the
    // identity. When num_generators > 0, indices above it are rejected.
    static Word parse(std::string_view text, int num_generators = 0);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    // Largest generator index occurring in the word; 0 for the identity.
    int max_generator() const;

    // Inverse of parse: "1" for the identity, runs compressed as in "x2^3 x1^-2".
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);

// a * x * a^-1
Word conjugate(const Word& x, const Word& a);

// u * v * u^-1 * v^-1
Word commutator(const Word& u, const Word& v);

// Signed count of occurrences of one generator.
long long exponent_sum(const Word& w, int gen);

// Exponent sums for generators 1..num_generators, at indices 0..num_generators-1.
// Requires num_generators >= w.max_generator().
std::vector<long long> abelianize(const Word& w, int num_generators);

}
