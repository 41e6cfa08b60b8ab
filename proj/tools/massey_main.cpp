#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "massey/cohomology.hpp"
#include "massey/magnus.hpp"
#include "massey/modarith.hpp"
#include "massey/presentation.hpp"
#include "massey/verification.hpp"

namespace {

using nlohmann::ordered_json;
using namespace massey;

// Argument errors detected after flag parsing; mapped to the usage exit code.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<long long> parse_csv(const std::string& text, const char* flag) {
    if (text.empty()) throw UsageError(std::string(flag) + ": expected comma-separated integers");
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string token =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": bad integer '" + token + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

OneClass parse_class(const std::string& text, long long p, const char* flag) {
    OneClass out{p, parse_csv(text, flag)};
    for (auto& e : out.c) e = normalize_mod(e, p);
    return out;
}

struct SourceOpts {
    int monomial = 0;
    bool kty = false;
    std::string file;
};

void add_source_options(CLI::App* cmd, SourceOpts& s) {
    auto* group = cmd->add_option_group("source", "Presentation source (exactly one)");
    group->add_option("--monomial", s.monomial, "Built-in monomial presentation, parameter r")
        ->check(CLI::Range(2, 1000));
    group->add_flag("--kty", s.kty, "Built-in three-generator curve group");
    group->add_option("--file", s.file, "Presentation file")->check(CLI::ExistingFile);
    group->require_option(1);
}

Presentation build_source(const SourceOpts& s) {
    if (s.kty) return Presentation::kty();
    if (!s.file.empty()) return Presentation::load_file(s.file);
    return Presentation::monomial(s.monomial);
}

const CLI::Validator prime_validator(
    [](std::string& value) -> std::string {
        try {
            const long long v = std::stoll(value);
            if (is_prime(v)) return {};
        } catch (const std::exception&) {
        }
        return "expected a prime";
    },
    "PRIME");

const CLI::Validator zero_or_prime_validator(
    [](std::string& value) -> std::string {
        try {
            const long long v = std::stoll(value);
            if (v == 0 || is_prime(v)) return {};
        } catch (const std::exception&) {
        }
        return "expected 0 or a prime";
    },
    "PRIME|0");

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_present(const SourceOpts& src, bool json) {
    const Presentation pres = build_source(src);
    if (!json) {
        pres.save(std::cout);
        return 0;
    }
    ordered_json j;
    j["generators"] = pres.num_generators();
    j["relators"] = ordered_json::array();
    for (const Relator& rel : pres.relators())
        j["relators"].push_back({{"name", rel.name}, {"word", rel.word.str()}});
    j["families"] = ordered_json::array();
    for (const RelatorFamily& fam : pres.families()) {
        ordered_json members = ordered_json::array();
        for (const ConjugatedGenerator& m : fam.members)
            members.push_back({{"base", m.base}, {"conjugator", m.conjugator.str()}});
        j["families"].push_back({{"name", fam.name}, {"members", std::move(members)}});
    }
    emit(j);
    return 0;
}

int run_magnus(const std::string& word_text, const std::string& index_text, long long mod,
               int generators, bool json) {
    const Word w = Word::parse(word_text, generators);
    std::vector<int> index;
    for (long long e : parse_csv(index_text, "--index")) {
        if (e < 1 || (generators > 0 && e > generators))
            throw UsageError("--index: entry " + std::to_string(e) + " out of range");
        index.push_back(static_cast<int>(e));
    }
    const BigInt value = eps(index, w, Modulus(mod));
    if (!json) {
        std::cout << value << "\n";
        return 0;
    }
    ordered_json j;
    j["word"] = w.str();
    j["index"] = index;
    j["mod"] = mod;
    j["value"] = value.str();
    emit(j);
    return 0;
}

std::vector<std::string> relator_names(const Presentation& pres) {
    std::vector<std::string> names;
    names.reserve(pres.relators().size());
    for (const Relator& rel : pres.relators()) names.push_back(rel.name);
    return names;
}

std::string csv(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

int run_cup(const SourceOpts& src, long long mod, const std::string& alpha_text,
            const std::string& beta_text, bool json) {
    const Presentation pres = build_source(src);
    const Cohomology h(pres, mod, 2);
    const OneClass alpha = parse_class(alpha_text, mod, "--alpha");
    const OneClass beta = parse_class(beta_text, mod, "--beta");
    const TwoClass q = h.cup(alpha, beta);
    const bool zero = std::all_of(q.c.begin(), q.c.end(), [](long long e) { return e == 0; });
    if (!json) {
        std::cout << "values: " << csv(q.c) << "\n";
        std::cout << "zero: " << (zero ? "yes" : "no") << "\n";
        return 0;
    }
    ordered_json j;
    j["relator_names"] = relator_names(pres);
    j["values"] = q.c;
    j["zero"] = zero;
    emit(j);
    return 0;
}

int run_massey(const SourceOpts& src, long long mod, const std::string& alpha_text,
               const std::string& beta_text, const std::string& gamma_text, bool json) {
    const Presentation pres = build_source(src);
    const Cohomology h(pres, mod);
    const MasseyOutcome out = h.massey_mod_indeterminacy(parse_class(alpha_text, mod, "--alpha"),
                                                         parse_class(beta_text, mod, "--beta"),
                                                         parse_class(gamma_text, mod, "--gamma"));
    if (json) {
        emit(to_json(out, relator_names(pres)));
        return 0;
    }
    std::cout << "representative: " << csv(out.representative.c) << "\n";
    std::cout << "indeterminacy rank: " << out.indeterminacy_basis.size() << "\n";
    std::cout << "vanishes: " << (out.vanishes ? "yes" : "no") << "\n";
    if (out.witness) std::cout << "witness: " << csv(*out.witness) << "\n";
    return 0;
}

int run_resonance(int r, long long mod, bool want_component, const std::string& test_text,
                  bool json) {
    if (want_component) {
        const ResonanceComponent comp = monomial_resonance_component(r, mod);
        if (!json) {
            std::cout << "dim: " << comp.dim << "\n";
            for (const FpVector& b : comp.basis) std::cout << "basis: " << csv(b.v) << "\n";
            return 0;
        }
        ordered_json j;
        j["r"] = r;
        j["mod"] = mod;
        j["dim"] = comp.dim;
        j["basis"] = ordered_json::array();
        for (const FpVector& b : comp.basis) j["basis"].push_back(b.v);
        emit(j);
        return 0;
    }
    const Cohomology h(Presentation::monomial(r), mod, 2);
    const OneClass lambda = parse_class(test_text, mod, "--test");
    const std::optional<OneClass> partner = h.in_resonance(lambda);
    if (!json) {
        std::cout << "in_resonance: " << (partner ? "yes" : "no") << "\n";
        if (partner) std::cout << "partner: " << csv(partner->c) << "\n";
        return 0;
    }
    ordered_json j;
    j["class"] = lambda.c;
    j["in_resonance"] = partner.has_value();
    if (partner)
        j["partner"] = partner->c;
    else
        j["partner"] = nullptr;
    emit(j);
    return 0;
}

int run_verify(const std::string& theorem, long long prime, bool json) {
    if (theorem == "kty") {
        const KtyReport report = verify_kty();
        if (json) {
            emit(to_json(report));
        } else {
            std::cout << "cup table: " << (report.cup_table_ok ? "ok" : "WRONG") << "\n";
            std::cout << kty_table_text(report);
            for (const KtyWitness& w : report.witnesses) {
                std::cout << "alpha=(" << csv(w.alpha.c) << ") witness: ";
                if (w.found)
                    std::cout << "beta=(" << csv(w.beta.c) << ")\n";
                else
                    std::cout << "none\n";
            }
            std::cout << "ok: " << (report.ok ? "yes" : "no") << "\n";
        }
        return report.ok ? 0 : 3;
    }
    const MainTheoremReport report = verify_main_theorem(prime);
    if (json) {
        emit(to_json(report));
    } else {
        for (const VerifyStage& s : report.stages) {
            std::cout << (s.ok ? "[PASS] " : "[FAIL] ") << s.name;
            if (!s.detail.empty()) std::cout << " (" << s.detail << ")";
            std::cout << "\n";
        }
        std::cout << "ok: " << (report.ok ? "yes" : "no") << "\n";
    }
    return report.ok ? 0 : 3;
}

}

int main(int argc, char** argv) {
    CLI::App app{"F_p cohomology of finitely presented groups: cup products, triple Massey "
                 "products, resonance"};
    app.require_subcommand(1);

    SourceOpts present_src, cup_src, massey_src;
    bool present_json = false, magnus_json = false, cup_json = false, massey_json = false,
         resonance_json = false, verify_json = false;

    auto* present = app.add_subcommand("present", "Build and print a presentation");
    add_source_options(present, present_src);
    present->add_flag("--json", present_json, "JSON output");

    auto* magnus = app.add_subcommand("magnus", "One Magnus coefficient of a word");
    std::string magnus_word, magnus_index;
    long long magnus_mod = 0;
    int magnus_generators = 0;
    magnus->add_option("--word", magnus_word, "Word in x1, x2, ...")->required();
    magnus->add_option("--index", magnus_index, "Coefficient index, e.g. 1,2,2")->required();
    magnus->add_option("--mod", magnus_mod, "Prime modulus, or 0 for integers")
        ->required()
        ->check(zero_or_prime_validator);
    magnus->add_option("--generators", magnus_generators, "Ambient generator count")
        ->check(CLI::Range(1, 1000000));
    magnus->add_flag("--json", magnus_json, "JSON output");

    auto* cup = app.add_subcommand("cup", "Cup product of two degree-one classes");
    std::string cup_alpha, cup_beta;
    long long cup_mod = 0;
    add_source_options(cup, cup_src);
    cup->add_option("--mod", cup_mod, "Prime modulus")->required()->check(prime_validator);
    cup->add_option("--alpha", cup_alpha, "Class, comma-separated residues")->required();
    cup->add_option("--beta", cup_beta, "Class, comma-separated residues")->required();
    cup->add_flag("--json", cup_json, "JSON output");

    auto* massey = app.add_subcommand("massey", "Triple Massey product modulo indeterminacy");
    std::string massey_alpha, massey_beta, massey_gamma;
    long long massey_mod = 0;
    add_source_options(massey, massey_src);
    massey->add_option("--mod", massey_mod, "Prime modulus")->required()->check(prime_validator);
    massey->add_option("--alpha", massey_alpha, "Class, comma-separated residues")->required();
    massey->add_option("--beta", massey_beta, "Class, comma-separated residues")->required();
    massey->add_option("--gamma", massey_gamma, "Class, comma-separated residues")->required();
    massey->add_flag("--json", massey_json, "JSON output");

    auto* resonance = app.add_subcommand("resonance", "Resonance data of a monomial presentation");
    int resonance_r = 0;
    long long resonance_mod = 0;
    bool resonance_component = false;
    std::string resonance_test;
    resonance->add_option("--monomial", resonance_r, "Monomial presentation parameter r")
        ->required()
        ->check(CLI::Range(2, 1000));
    resonance->add_option("--mod", resonance_mod, "Prime modulus")
        ->required()
        ->check(prime_validator);
    auto* mode = resonance->add_option_group("mode", "Exactly one action");
    mode->add_flag("--cpi", resonance_component, "Print the distinguished component");
    mode->add_option("--test", resonance_test, "Test a class for resonance membership");
    mode->require_option(1);
    resonance->add_flag("--json", resonance_json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Re-derive a built-in result end to end");
    std::string verify_theorem = "main";
    long long verify_prime = 3;
    verify->add_option("--theorem", verify_theorem, "main or kty")
        ->check(CLI::IsMember({"main", "kty"}));
    auto* prime_opt = verify->add_option("--prime", verify_prime, "Odd prime for --theorem main")
                          ->check(prime_validator);
    verify->add_flag("--json", verify_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (present->parsed()) return run_present(present_src, present_json);
        if (magnus->parsed())
            return run_magnus(magnus_word, magnus_index, magnus_mod, magnus_generators,
                              magnus_json);
        if (cup->parsed()) return run_cup(cup_src, cup_mod, cup_alpha, cup_beta, cup_json);
        if (massey->parsed())
            return run_massey(massey_src, massey_mod, massey_alpha, massey_beta, massey_gamma,
                              massey_json);
        if (resonance->parsed())
            return run_resonance(resonance_r, resonance_mod, resonance_component, resonance_test,
                                 resonance_json);
        if (verify->parsed()) {
            if (verify_theorem == "kty" && prime_opt->count() > 0)
                throw UsageError("--prime applies only to --theorem main");
            if (verify_theorem == "main" && verify_prime == 2)
                throw UsageError("--theorem main requires an odd prime");
            return run_verify(verify_theorem, verify_prime, verify_json);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
