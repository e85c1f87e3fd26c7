// autoshift: subshift languages, controlled automorphisms, and the word
// problem on product shifts.
//
// Exit codes: 0 Yes/success, 1 No, 2 Unknown (budget), 64 usage, 65 data.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "autoshift/acceptance.hpp"
#include "autoshift/io.hpp"
#include "autoshift/reduction.hpp"

namespace {

using namespace autoshift;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

int default_budget() {
    if (const char* e = std::getenv("AUTOSHIFT_BUDGET")) {
        try {
            const int b = std::stoi(e);
            if (b > 0) return b;
        } catch (...) {
        }
        std::cerr << "warning: ignoring malformed AUTOSHIFT_BUDGET\n";
    }
    return 8;
}

Window bounding_window(const Window& supp, int dim) {
    long long xlo = supp.cells().front().x, xhi = xlo;
    long long ylo = supp.cells().front().y, yhi = ylo;
    for (const Coord& c : supp.cells()) {
        xlo = std::min(xlo, c.x);
        xhi = std::max(xhi, c.x);
        if (dim == 2) {
            ylo = std::min(ylo, c.y);
            yhi = std::max(yhi, c.y);
        }
    }
    std::vector<Coord> cells;
    for (long long x = xlo; x <= xhi; ++x)
        for (long long y = ylo; y <= yhi; ++y) cells.push_back({x, y});
    return Window(std::move(cells));
}

std::size_t pow_sz(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
}

int run_check(const std::string& spec_path, const std::string& pattern_path,
              int budget) {
    const SubshiftSpec spec = spec_from_json(load_json_file(spec_path));
    const Pattern w =
        pattern_from_json(load_json_file(pattern_path), spec.dim(), spec.alphabet());
    if (w.empty()) {
        std::cout << "Yes\n";
        return kExitYes;
    }

    const LangAnswer ans = language_contains(spec, w, budget);
    if (ans.is_yes()) {
        std::cout << "Yes\n";
        return kExitYes;
    }
    if (ans.is_unknown()) {
        std::cout << "Unknown (budget exhausted after " << budget << " windows)\n";
        return kExitUnknown;
    }

    // Try to certify the No with a window on which every extension fails;
    // the bounding box goes first so the certificate stays small.
    std::vector<Window> schedule{bounding_window(w.support(), spec.dim())};
    for (Window& v : default_schedule(spec, w, budget))
        schedule.push_back(std::move(v));
    if (auto i = colang_semidecide(spec, w, schedule)) {
        const std::size_t n = pow_sz(
            static_cast<std::size_t>(spec.alphabet().size()),
            schedule[static_cast<std::size_t>(*i)].size() - w.size());
        std::cout << "No (flagged at window " << *i << ": all " << n
                  << " extensions locally inadmissible)\n";
    } else {
        std::cout << "No\n";
    }
    return kExitNo;
}

int run_compile(const std::string& pattern_path, std::string prime_csv,
                std::string cycle_csv, bool trace) {
    int dim = 0;
    const auto [u, a] = pattern_from_json_inferred(load_json_file(pattern_path), dim);

    std::vector<std::string> prime_names;
    {
        std::istringstream is(prime_csv);
        std::string tok;
        while (std::getline(is, tok, ',')) prime_names.push_back(tok);
    }
    if (prime_names.size() < 5) {
        std::cerr << "error: --prime needs at least 5 distinct symbols ("
                  << prime_names.size() << " given)\n";
        return kExitUsage;
    }

    Alphabet b;
    CompileParams params;
    try {
        b = Alphabet(prime_names);
        params.b_size = b.size();
        params.dim = dim;
        for (Symbol s = 0; s < b.size(); ++s) params.prime.push_back(s);
        std::vector<std::string> cycle_names;
        if (cycle_csv.empty()) {
            cycle_names.assign(prime_names.begin(), prime_names.begin() + 3);
        } else {
            std::istringstream is(cycle_csv);
            std::string tok;
            while (std::getline(is, tok, ',')) cycle_names.push_back(tok);
        }
        if (cycle_names.size() != 3)
            throw std::invalid_argument("--cycle needs exactly 3 symbols");
        for (int k = 0; k < 3; ++k) {
            auto s = b.index(cycle_names[static_cast<std::size_t>(k)]);
            if (!s)
                throw std::invalid_argument("cycle symbol \"" +
                                            cycle_names[static_cast<std::size_t>(k)] +
                                            "\" is not in --prime");
            params.cycle[static_cast<std::size_t>(k)] = *s;
        }
        params.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<std::string> trace_lines;
    const GenWord word = compile(u, params, trace ? &trace_lines : nullptr);
    for (const std::string& line : trace_lines) std::cerr << line << "\n";
    std::cout << genword_to_json(word, dim, a, b).dump(2) << "\n";
    return kExitYes;
}

int run_eval(const std::string& word_path, const std::string& pattern_path,
             const std::string& specx_path, const std::string& specy_path) {
    const SubshiftSpec x = spec_from_json(load_json_file(specx_path));
    const SubshiftSpec y = spec_from_json(load_json_file(specy_path));
    if (x.dim() != y.dim()) throw DataError("spec dimensions differ");

    const Alphabet prod = product_alphabet(x.alphabet(), y.alphabet());
    const GenWord w =
        genword_from_json(load_json_file(word_path), x.dim(), x.alphabet(), y.alphabet());
    const Pattern p = pattern_from_json(load_json_file(pattern_path), x.dim(), prod);

    try {
        const Pattern out = evaluate_word_naive(w, p, x.alphabet(), y.alphabet(), x.dim());
        std::cout << pattern_to_json(out, x.dim(), prod).dump(2) << "\n";
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    } catch (const std::length_error& e) {
        throw DataError(e.what());
    }
    return kExitYes;
}

int crosscheck_word(const GenWord& w, const Cpnf& n, const SubshiftSpec& x,
                    const SubshiftSpec& y) {
    long long r = 0;
    for (const GenLetter& l : w)
        if (l.kind == GenLetter::Kind::Shift) r += l.shift.max_norm();
    const Window supp = ball(x.dim(), r);

    const SubshiftSpec prod = SubshiftSpec::product(x, y);
    const std::size_t nsym = static_cast<std::size_t>(prod.alphabet().size());
    std::size_t total = 1;
    for (std::size_t i = 0; i < supp.size() && total <= 4096; ++i) total *= nsym;

    // Exhaustive at tiny sizes, deterministic admissible sample otherwise.
    std::vector<Pattern> inputs;
    bool sampled = false;
    if (total <= 4096) {
        inputs = language_enumerate(prod, supp);
    } else {
        sampled = true;
        std::mt19937 rng(0);
        std::uniform_int_distribution<int> ax(0, x.alphabet().size() - 1);
        std::uniform_int_distribution<int> ay(0, y.alphabet().size() - 1);
        while (inputs.size() < 200) {
            std::vector<Symbol> left(supp.size()), syms(supp.size());
            for (auto& s : left) s = ax(rng);
            if (!locally_admissible(x, Pattern(supp, left))) continue;
            for (std::size_t i = 0; i < supp.size(); ++i)
                syms[i] = pair_symbol(left[i], ay(rng), y.alphabet().size());
            if (!locally_admissible(prod, Pattern(supp, syms))) continue;
            inputs.emplace_back(supp, std::move(syms));
        }
    }

    for (const Pattern& p : inputs) {
        const Pattern naive =
            evaluate_word_naive(w, p, x.alphabet(), y.alphabet(), x.dim());
        const Pattern via = apply_cpnf_to_pattern(n, p);
        for (const Coord& c : naive.support().cells()) {
            if (!via.at(c) || *via.at(c) != *naive.at(c)) {
                std::cout << "crosscheck FAILED on "
                          << render_pattern(p, x.dim(), prod.alphabet()) << "\n";
                return kExitData;
            }
        }
    }
    std::cout << "crosscheck: OK (" << inputs.size() << " patterns"
              << (sampled ? ", sampled" : "") << ")\n";
    return kExitYes;
}

int run_wordpb(const std::string& word_path, const std::string& specx_path,
               const std::string& specy_path, int budget, bool crosscheck) {
    const SubshiftSpec x = spec_from_json(load_json_file(specx_path));
    const SubshiftSpec y = spec_from_json(load_json_file(specy_path));
    if (x.dim() != y.dim()) throw DataError("spec dimensions differ");
    const GenWord w =
        genword_from_json(load_json_file(word_path), x.dim(), x.alphabet(), y.alphabet());

    Cpnf n;
    LangAnswer ans = LangAnswer::unknown();
    try {
        n = cpnf_of_word(w, x.alphabet().size(), y.alphabet().size(), x.dim());
        ans = is_identity_on(n, x, y, budget);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        throw DataError(e.what());
    }

    if (n.shift != Coord{0, 0}) {
        std::cout << "net shift (" << n.shift.x;
        if (x.dim() == 2) std::cout << "," << n.shift.y;
        std::cout << ") is nonzero\n";
    }

    // Every condition pattern with a nontrivial permutation, with its
    // language verdict; the word is the identity iff all verdicts are No.
    const Cpnf t = cpnf_trim(n);
    std::vector<Symbol> digits(t.window.size(), 0);
    for (std::size_t idx = 0; idx < t.rho.size(); ++idx) {
        if (!t.rho[idx].is_identity()) {
            const Pattern p(t.window, digits);
            const LangAnswer pa = language_contains(x, p, budget);
            std::cout << "nontrivial on " << render_pattern(p, x.dim(), x.alphabet())
                      << ": "
                      << (pa.is_yes() ? "Yes" : pa.is_no() ? "No" : "Unknown") << "\n";
        }
        for (std::size_t j = digits.size(); j-- > 0;) {
            if (++digits[j] < t.a_size) break;
            digits[j] = 0;
        }
    }

    if (crosscheck) {
        const int rc = crosscheck_word(w, n, x, y);
        if (rc != kExitYes) return rc;
    }

    if (ans.is_yes()) {
        std::cout << "identity: Yes\n";
        return kExitYes;
    }
    if (ans.is_no()) {
        std::cout << "identity: No\n";
        return kExitNo;
    }
    std::cout << "identity: Unknown (budget " << budget << " exhausted)\n";
    return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subshift languages, controlled automorphisms, and the word problem"};
    app.require_subcommand(1);
    const int budget0 = default_budget();

    std::string spec_path, pattern_path, word_path, specx_path, specy_path;
    std::string prime_csv = "a,b,c,d,e", cycle_csv;
    int budget = budget0;
    bool trace = false, crosscheck = false;

    auto* check = app.add_subcommand("check", "decide pattern language membership");
    check->add_option("spec", spec_path, "subshift spec JSON")->required();
    check->add_option("pattern", pattern_path, "pattern JSON")->required();
    check->add_option("--budget", budget, "window budget");

    auto* compile_cmd =
        app.add_subcommand("compile", "compile a pattern to a generator word");
    compile_cmd->add_option("pattern", pattern_path, "pattern JSON")->required();
    compile_cmd->add_option("--prime", prime_csv, "comma-separated Y symbols (>= 5)");
    compile_cmd->add_option("--cycle", cycle_csv,
                            "comma-separated 3-cycle (default: first 3 of --prime)");
    compile_cmd->add_flag("--trace", trace, "print the recursion tree to stderr");

    auto* eval_cmd = app.add_subcommand("eval", "apply a generator word to a pattern");
    eval_cmd->add_option("word", word_path, "generator word JSON")->required();
    eval_cmd->add_option("pattern", pattern_path, "product pattern JSON")->required();
    eval_cmd->add_option("specx", specx_path, "X spec JSON")->required();
    eval_cmd->add_option("specy", specy_path, "Y spec JSON")->required();

    auto* wordpb = app.add_subcommand("wordpb", "decide whether a word is the identity");
    wordpb->add_option("word", word_path, "generator word JSON")->required();
    wordpb->add_option("specx", specx_path, "X spec JSON")->required();
    wordpb->add_option("specy", specy_path, "Y spec JSON")->required();
    wordpb->add_option("--budget", budget, "window budget");
    wordpb->add_flag("--crosscheck", crosscheck,
                     "also compare the two evaluators on small inputs");

    auto* verify = app.add_subcommand("verify", "run the acceptance sweeps");
    (void)verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(spec_path, pattern_path, budget);
        if (compile_cmd->parsed())
            return run_compile(pattern_path, prime_csv, cycle_csv, trace);
        if (eval_cmd->parsed())
            return run_eval(word_path, pattern_path, specx_path, specy_path);
        if (wordpb->parsed())
            return run_wordpb(word_path, specx_path, specy_path, budget, crosscheck);
        return autoshift::run_acceptance(std::cout) ? kExitYes : kExitNo;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
