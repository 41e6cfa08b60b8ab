#include "massey/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace massey {

namespace {

constexpr int kMaxGenerators = 1'000'000;

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool has_space(const std::string& s) {
    for (char c : s)
        if (std::isspace(static_cast<unsigned char>(c))) return true;
    return false;
}

[[noreturn]] void fail_line(int line, const std::string& what) {
    throw PresentationError("line " + std::to_string(line) + ": " + what);
}

// Member syntax: "x<i>" or "x<i> ^ (<word>)".
ConjugatedGenerator parse_member(const std::string& text, int num_generators, int line) {
    const std::string t = trim(text);
    if (t.empty() || t[0] != 'x') fail_line(line, "family member must start with a generator");
    std::size_t i = 1;
    long long base = 0;
    if (i >= t.size() || !std::isdigit(static_cast<unsigned char>(t[i])))
        fail_line(line, "family member must start with a generator");
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        base = base * 10 + (t[i] - '0');
        if (base > kMaxGenerators) fail_line(line, "generator index too large");
        ++i;
    }
    if (base < 1 || base > num_generators)
        fail_line(line, "family member generator out of range");
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    Word conjugator;
    if (i < t.size()) {
        if (t[i] != '^') fail_line(line, "expected '^ (<word>)' after family member base");
        ++i;
        while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
        if (i >= t.size() || t[i] != '(' || t.back() != ')')
            fail_line(line, "conjugator must be parenthesized");
        const std::string inner = t.substr(i + 1, t.size() - i - 2);
        try {
            conjugator = Word::parse(inner, num_generators);
        } catch (const WordParseError& e) {
            fail_line(line, std::string("in conjugator: ") + e.what());
        }
    }
    return {static_cast<int>(base), std::move(conjugator)};
}

std::string member_text(const ConjugatedGenerator& m) {
    std::string out = "x" + std::to_string(m.base);
    if (!m.conjugator.empty()) out += " ^ (" + m.conjugator.str() + ")";
    return out;
}

}

Presentation::Presentation(int num_generators, std::string origin)
    : num_generators_(num_generators), origin_(std::move(origin)) {
    if (num_generators < 1 || num_generators > kMaxGenerators)
        throw PresentationError("presentation needs between 1 and 1000000 generators");
}

void Presentation::check_fresh_relator_name(const std::string& name) const {
    if (name.empty()) throw PresentationError("relator name must be nonempty");
    if (has_space(name)) throw PresentationError("relator name must not contain whitespace");
    for (const Relator& r : relators_)
        if (r.name == name) throw PresentationError("duplicate relator name: " + name);
}

void Presentation::add_relator(std::string name, Word w) {
    check_fresh_relator_name(name);
    if (w.max_generator() > num_generators_)
        throw PresentationError("relator " + name + " uses a generator out of range");
    for (long long e : abelianize(w, num_generators_))
        if (e != 0)
            throw PresentationError("relator " + name + " does not abelianize to zero");
    relators_.push_back({std::move(name), std::move(w), -1, 0});
}

void Presentation::add_family(RelatorFamily f) {
    if (f.name.empty()) throw PresentationError("family name must be nonempty");
    if (has_space(f.name)) throw PresentationError("family name must not contain whitespace");
    for (const RelatorFamily& g : families_)
        if (g.name == f.name) throw PresentationError("duplicate family name: " + f.name);
    if (f.members.size() < 2)
        throw PresentationError("family " + f.name + " needs at least two members");
    for (const ConjugatedGenerator& m : f.members) {
        if (m.base < 1 || m.base > num_generators_)
            throw PresentationError("family " + f.name + " uses a generator out of range");
        if (m.conjugator.max_generator() > num_generators_)
            throw PresentationError("family " + f.name + " uses a conjugator generator out of range");
    }
    const int family_index = static_cast<int>(families_.size());
    for (int j = 1; j <= f.relator_count(); ++j) {
        const std::string name = f.relator_name(j);
        check_fresh_relator_name(name);
        relators_.push_back({name, f.relator_word(j), family_index, j});
    }
    families_.push_back(std::move(f));
}

Presentation Presentation::monomial(int r) {
    if (r < 2) throw PresentationError("monomial presentation needs r >= 2");
    const int n = 3 * r + 3;
    Presentation p(n, "monomial r=" + std::to_string(r));

    auto plain = [](int base) { return ConjugatedGenerator{base, Word()}; };
    auto run = [](int from, int to) {
        // x_from x_(from+1) .. x_to; identity when from > to
        std::vector<Letter> ls;
        for (int g = from; g <= to; ++g) ls.push_back({g, 1});
        return Word(std::span<const Letter>(ls));
    };

    RelatorFamily a{"A", {}};
    a.members.push_back(plain(3 * r + 1));
    for (int i = 1; i <= r - 1; ++i) a.members.push_back(plain(i));
    a.members.push_back(plain(3 * r + 2));
    a.members.push_back(plain(r));
    p.add_family(std::move(a));

    RelatorFamily b{"B", {}};
    b.members.push_back(plain(3 * r + 1));
    for (int i = 1; i <= r - 1; ++i) b.members.push_back(plain(2 * r + i));
    b.members.push_back(plain(3 * r + 3));
    b.members.push_back(plain(3 * r));
    p.add_family(std::move(b));

    RelatorFamily c{"C", {}};
    c.members.push_back(plain(3 * r + 2));
    for (int s = 1; s <= r - 1; ++s) {
        const Word head = Word::parse("x" + std::to_string(r)) *
                          Word::parse("x" + std::to_string(3 * r + 1));
        const Word conj = head * run(1, r - s) *
                          inverse(Word::parse("x" + std::to_string(3 * r + 1)));
        c.members.push_back({r + s, conj});
    }
    c.members.push_back(plain(3 * r + 3));
    c.members.push_back(plain(2 * r));
    p.add_family(std::move(c));

    for (int s = 1; s <= r; ++s)
        p.add_family({"D_{1," + std::to_string(s) + "}", {plain(3 * r + 1), plain(r + s)}});
    for (int s = 1; s <= r; ++s)
        p.add_family({"D_{2," + std::to_string(s) + "}", {plain(3 * r + 3), plain(s)}});
    for (int s = 1; s <= r; ++s) {
        RelatorFamily d{"D_{3," + std::to_string(s) + "}", {}};
        d.members.push_back({3 * r + 2, run(s, r - 1)});
        d.members.push_back({2 * r + s, Word::parse("x" + std::to_string(2 * r))});
        p.add_family(std::move(d));
    }

    for (int s = 1; s <= r; ++s)
        p.add_family({"T_" + std::to_string(s), {plain(s), plain(2 * r + s), plain(2 * r)}});

    for (int t = 1; t <= r; ++t)
        for (int s = t + 1; s <= r; ++s) {
            RelatorFamily u{"U_{" + std::to_string(t) + "," + std::to_string(s) + "}", {}};
            u.members.push_back(plain(s));
            u.members.push_back(plain(2 * r - t));
            u.members.push_back({2 * r + s - t, run(2 * r - t + 1, 2 * r - 1)});
            p.add_family(std::move(u));
        }

    for (int s = 1; s <= r - 1; ++s)
        for (int t = s; t <= r - 1; ++t) {
            RelatorFamily v{"V_{" + std::to_string(s) + "," + std::to_string(t) + "}", {}};
            v.members.push_back({s, Word::parse("x" + std::to_string(3 * r + 1))});
            v.members.push_back(plain(2 * r - t));
            v.members.push_back({3 * r + s - t, run(2 * r - t + 1, 2 * r - 1)});
            p.add_family(std::move(v));
        }

    return p;
}

Presentation Presentation::kty() {
    Presentation p(3, "kty");
    const Word x1 = Word::parse("x1");
    const Word x2 = Word::parse("x2");
    const Word x3 = Word::parse("x3");
    p.add_relator("R1", commutator(x3 * x1 * x3, x1));
    p.add_relator("R2", commutator(x3 * x2 * x3, x2));
    p.add_relator("R3", commutator(x3 * x1 * inverse(x3), x2));
    return p;
}

Presentation Presentation::load(std::istream& in) {
    std::string line;
    int line_number = 0;
    int num_generators = 0;
    bool have_generators = false;
    std::vector<std::pair<int, std::string>> body;

    while (std::getline(in, line)) {
        ++line_number;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_generators) {
            std::istringstream header(t);
            std::string keyword;
            header >> keyword;
            if (keyword != "generators")
                fail_line(line_number, "expected a 'generators <count>' line first");
            if (!(header >> num_generators) || num_generators < 1 || num_generators > kMaxGenerators)
                fail_line(line_number, "invalid generator count");
            std::string rest;
            if (header >> rest) fail_line(line_number, "trailing text after generator count");
            have_generators = true;
            continue;
        }
        body.emplace_back(line_number, t);
    }
    if (!have_generators) throw PresentationError("missing 'generators <count>' line");

    Presentation p(num_generators, "file");
    for (const auto& [ln, text] : body) {
        const std::size_t space = text.find_first_of(" \t");
        const std::string keyword = text.substr(0, space);
        const std::string rest = space == std::string::npos ? "" : text.substr(space + 1);
        const std::size_t colon = rest.find(':');
        if (colon == std::string::npos) fail_line(ln, "expected ':' after the name");
        const std::string name = trim(rest.substr(0, colon));
        const std::string payload = rest.substr(colon + 1);

        try {
            if (keyword == "relator") {
                Word w;
                try {
                    w = Word::parse(payload, num_generators);
                } catch (const WordParseError& e) {
                    fail_line(ln, e.what());
                }
                p.add_relator(name, std::move(w));
            } else if (keyword == "family") {
                RelatorFamily f{name, {}};
                std::size_t start = 0;
                while (true) {
                    const std::size_t semi = payload.find(';', start);
                    const std::string piece = payload.substr(
                        start, semi == std::string::npos ? std::string::npos : semi - start);
                    f.members.push_back(parse_member(piece, num_generators, ln));
                    if (semi == std::string::npos) break;
                    start = semi + 1;
                }
                p.add_family(std::move(f));
            } else {
                fail_line(ln, "unknown keyword: " + keyword);
            }
        } catch (const PresentationError& e) {
            const std::string what = e.what();
            if (what.rfind("line ", 0) == 0) throw;
            fail_line(ln, what);
        }
    }
    return p;
}

Presentation Presentation::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PresentationError("cannot open file: " + path);
    return load(in);
}

void Presentation::save(std::ostream& out) const {
    out << "generators " << num_generators_ << "\n";
    // Walk the relators so interleaving of families and standalone relators
    // survives a round trip; a family is written at its first split.
    for (const Relator& r : relators_) {
        if (r.family < 0) {
            out << "relator " << r.name << " : " << r.word.str() << "\n";
        } else if (r.split == 1) {
            const RelatorFamily& f = families_[static_cast<std::size_t>(r.family)];
            out << "family " << f.name << " :";
            for (std::size_t i = 0; i < f.members.size(); ++i)
                out << (i == 0 ? " " : " ; ") << member_text(f.members[i]);
            out << "\n";
        }
    }
}

void Presentation::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw PresentationError("cannot open file: " + path);
    save(out);
    out.flush();
    if (!out) throw PresentationError("failed writing file: " + path);
}

}
