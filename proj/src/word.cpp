#include "massey/word.hpp"

#include <algorithm>
#include <cctype>

namespace massey {

namespace {

constexpr long long kMaxExponent = 1'000'000;
constexpr long long kMaxGeneratorIndex = 1'000'000;

std::string format_parse_error(const std::string& what, std::size_t position) {
    return "word parse error at position " + std::to_string(position) + ": " + what;
}

}

WordParseError::WordParseError(const std::string& what, std::size_t position)
    : std::runtime_error(format_parse_error(what, position)), position_(position) {}

Word::Word(std::span<const Letter> letters) {
    letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.gen < 1)
            throw std::invalid_argument("Word: generator index must be at least 1");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("Word: letter sign must be +1 or -1");
        if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

Word Word::parse(std::string_view text, int num_generators) {
    std::vector<Letter> ls;
    std::size_t i = 0;
    const std::size_t n = text.size();

    auto at_separator = [&] {
        return i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*');
    };
    auto skip_separators = [&] {
        while (at_separator()) ++i;
    };
    auto read_number = [&](bool allow_sign) {
        std::size_t start = i;
        long long sign = 1;
        if (allow_sign && i < n && (text[i] == '+' || text[i] == '-')) {
            if (text[i] == '-') sign = -1;
            ++i;
        }
        if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw WordParseError("expected an integer", i);
        long long value = 0;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            if (value > kMaxExponent * 10)
                throw WordParseError("number too large", start);
            ++i;
        }
        return sign * value;
    };

    skip_separators();
    while (i < n) {
        if (text[i] == '1') {
            ++i;
            if (i < n && !at_separator())
                throw WordParseError("unexpected character after identity '1'", i);
        } else if (text[i] == 'x') {
            std::size_t atom_start = i;
            ++i;
            long long gen = read_number(false);
            if (gen < 1)
                throw WordParseError("generator index must be at least 1", atom_start);
            if (gen > kMaxGeneratorIndex)
                throw WordParseError("generator index too large", atom_start);
            if (num_generators > 0 && gen > num_generators)
                throw WordParseError("generator index out of range", atom_start);
            long long exponent = 1;
            if (i < n && text[i] == '^') {
                std::size_t exp_start = ++i;
                exponent = read_number(true);
                if (exponent == 0)
                    throw WordParseError("exponent must be nonzero", exp_start);
                if (exponent > kMaxExponent || exponent < -kMaxExponent)
                    throw WordParseError("exponent too large", exp_start);
            }
            const Letter letter{static_cast<int>(gen), exponent > 0 ? 1 : -1};
            for (long long k = std::abs(exponent); k > 0; --k) ls.push_back(letter);
        } else {
            throw WordParseError("expected 'x' or '1'", i);
        }
        if (i < n && !at_separator())
            throw WordParseError("expected a separator", i);
        skip_separators();
    }
    return Word(std::span<const Letter>(ls));
}

int Word::max_generator() const {
    int m = 0;
    for (const Letter& l : letters_) m = std::max(m, l.gen);
    return m;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        const long long exponent = static_cast<long long>(j - i) * letters_[i].sign;
        if (!out.empty()) out += ' ';
        out += 'x';
        out += std::to_string(letters_[i].gen);
        if (exponent != 1) {
            out += '^';
            out += std::to_string(exponent);
        }
        i = j;
    }
    return out;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> ls;
    ls.reserve(a.size() + b.size());
    ls.insert(ls.end(), a.letters().begin(), a.letters().end());
    ls.insert(ls.end(), b.letters().begin(), b.letters().end());
    return Word(std::span<const Letter>(ls));
}

Word inverse(const Word& w) {
    std::vector<Letter> ls;
    ls.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        ls.push_back({it->gen, -it->sign});
    return Word(std::span<const Letter>(ls));
}

Word conjugate(const Word& x, const Word& a) {
    return a * x * inverse(a);
}

Word commutator(const Word& u, const Word& v) {
    return u * v * inverse(u) * inverse(v);
}

long long exponent_sum(const Word& w, int gen) {
    long long sum = 0;
    for (const Letter& l : w)
        if (l.gen == gen) sum += l.sign;
    return sum;
}

std::vector<long long> abelianize(const Word& w, int num_generators) {
    if (num_generators < w.max_generator())
        throw std::invalid_argument("abelianize: word uses a generator above num_generators");
    std::vector<long long> e(static_cast<std::size_t>(num_generators), 0);
    for (const Letter& l : w) e[static_cast<std::size_t>(l.gen) - 1] += l.sign;
    return e;
}

}
