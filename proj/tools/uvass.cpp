// uvass -- command-line front end
//
// Exit codes: 0 property holds, 1 property fails (witness in the report),
// 2 inconclusive or budget exhausted, 3 usage or parse error, 4 oracle and
// decision procedure disagree.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "uvass/ambiguity.hpp"
#include "uvass/bounds.hpp"
#include "uvass/coverability.hpp"
#include "uvass/generators.hpp"
#include "uvass/semantics.hpp"
#include "uvass/universality.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace uvass;

constexpr const char* kVersion = "0.1.0";

enum Exit { kHolds = 0, kFails = 1, kInconclusive = 2, kUsage = 3, kDisagree = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a64(const std::string& data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Input {
    std::string path;
    std::string text;
    Vass vass;
};

Input load(const std::string& path)
{
    Input in{path, read_file(path), {}};
    in.vass = parse_vass(in.text);
    return in;
}

json input_json(const Input& in)
{
    return json{{"path", in.path}, {"digest", "fnv1a64:" + fnv1a64(in.text)}};
}

json run_json(const Vass& v, const Run& run)
{
    json steps = json::array();
    for (TransitionId t : run) {
        const Transition& tr = v.transition(t);
        json effect = json::array();
        for (const auto& x : tr.effect) effect.push_back(x.get_str());
        steps.push_back(json{{"src", v.state_name(tr.src)},
                             {"label", v.label_name(tr.label)},
                             {"effect", effect},
                             {"dst", v.state_name(tr.dst)}});
    }
    return steps;
}

json caps_json(const std::vector<Integer>& caps)
{
    json out = json::array();
    for (const auto& c : caps) out.push_back(c.get_str());
    return out;
}

struct Flags {
    std::optional<std::string> max_profile;
    std::size_t node_cap = kDefaultNodeCap;
    std::size_t eps_budget = 0;
    std::size_t max_len = 5;
    std::size_t state_budget = kDefaultStateBudget;
};

json flags_json(const Flags& f)
{
    return json{{"max_profile", f.max_profile ? json(*f.max_profile) : json(nullptr)},
                {"node_cap", f.node_cap},
                {"eps_budget", f.eps_budget},
                {"max_len", f.max_len},
                {"state_budget", f.state_budget}};
}

UniversalityOptions universality_options(const Flags& f)
{
    UniversalityOptions o;
    o.state_budget = f.state_budget;
    if (f.max_profile) {
        Integer top;
        if (top.set_str(*f.max_profile, 10) != 0 || top < 0) throw UsageError("--max-profile needs a natural number");
        for (Integer c = 1; c < top; c *= 2) o.cap_schedule.push_back(c);
        o.cap_schedule.push_back(top);
    }
    return o;
}

class Report {
public:
    explicit Report(std::string command) : start_(std::chrono::steady_clock::now())
    {
        doc_["tool"] = "uvass";
        doc_["version"] = kVersion;
        doc_["command"] = std::move(command);
    }

    json& operator[](const char* key) { return doc_[key]; }

    int emit(int code)
    {
        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_);
        doc_["stats"]["wall_ms"] = elapsed.count();
        doc_["exit_code"] = code;
        std::cout << doc_.dump(2) << "\n";
        return code;
    }

private:
    json doc_;
    std::chrono::steady_clock::time_point start_;
};

int cmd_validate(const std::string& path)
{
    Input in = load(path);
    Report r("validate");
    r["input"] = input_json(in);
    r["verdict"] = json{{"valid", true},
                        {"dim", in.vass.dim()},
                        {"states", in.vass.num_states()},
                        {"symbols", in.vass.num_symbols()},
                        {"transitions", in.vass.num_transitions()},
                        {"norm", norm(in.vass).get_str()}};
    r["canonical"] = serialize_vass(in.vass);
    return r.emit(kHolds);
}

int check_empty(const Input& in, const Flags& f, Report& r)
{
    EmptinessResult e = emptiness(in.vass, f.node_cap);
    r["verdict"] = json{{"empty", e.empty}};
    r["stats"]["nodes"] = e.nodes;
    if (e.empty) return kHolds;
    if (e.witness) {
        r["witness"] = json{{"word", format_word(in.vass, run_word(in.vass, *e.witness))},
                            {"run", run_json(in.vass, *e.witness)}};
    } else {
        r["witness"] = json{{"omitted", "node cap reached before a run was found"}};
    }
    return kFails;
}

int check_member(const Input& in, const std::string& text, Report& r)
{
    Word w = parse_word(in.vass, text);
    bool member = membership(in.vass, w);
    r["verdict"] = json{{"member", member}, {"word", format_word(in.vass, w)}};
    return member ? kHolds : kFails;
}

int check_unamb(const Input& in, const Flags& f, Report& r)
{
    AmbiguityVerdict a = check_unambiguous(in.vass, f.node_cap);
    r["verdict"] = json{{"unambiguous", a.unambiguous}};
    r["stats"]["product_states"] = a.product_states;
    r["stats"]["nodes"] = a.nodes;
    if (a.unambiguous) return kHolds;
    json w;
    if (a.word) w["word"] = format_word(in.vass, *a.word);
    else w["omitted"] = "node cap reached before a witness was extracted";
    if (a.first) w["first_run"] = run_json(in.vass, *a.first);
    if (a.second) w["second_run"] = run_json(in.vass, *a.second);
    r["witness"] = w;
    return kFails;
}

int universal_exit(UniversalityAnswer a)
{
    switch (a) {
    case UniversalityAnswer::universal: return kHolds;
    case UniversalityAnswer::not_universal: return kFails;
    default: return kInconclusive;
    }
}

json universality_stats(const UniversalityVerdict& u)
{
    return json{{"caps_tried", caps_json(u.caps_tried)},
                {"cap", u.cap ? json(u.cap->get_str()) : json(nullptr)},
                {"profile_states", u.profile_states},
                {"basis_size", u.basis_size}};
}

int check_univ(const Input& in, const Flags& f, Report& r)
{
    UniversalityVerdict u = check_universal(in.vass, universality_options(f));
    r["verdict"] = json{{"answer", to_string(u.answer)}};
    if (!u.note.empty()) r["verdict"]["note"] = u.note;
    if (u.witness) {
        r["witness"] = json{{"word", format_word(in.vass, *u.witness)},
                            {"abstraction_runs", u.count ? u.count->get_str() : "0"}};
    }
    r["stats"].update(universality_stats(u));
    return universal_exit(u.answer);
}

int check_equiv(const Input& in, const std::string& dfa_path, const Flags& f, Report& r)
{
    Input dfa = load(dfa_path);
    r["regular"] = input_json(dfa);
    EquivalenceVerdict e = check_equivalence_with_regular(in.vass, dfa.vass, universality_options(f));
    r["verdict"] = json{{"answer", to_string(e.answer)}};
    if (!e.reason.empty()) r["verdict"]["reason"] = e.reason;
    if (e.witness) r["witness"] = json{{"word", format_word(in.vass, *e.witness)}};
    if (e.universality) r["stats"].update(universality_stats(*e.universality));
    switch (e.answer) {
    case EquivalenceAnswer::equivalent: return kHolds;
    case EquivalenceAnswer::not_equivalent: return kFails;
    default: return kInconclusive;
    }
}

int cmd_check(const std::string& path, const std::string& problem, const std::string& arg, const Flags& f)
{
    Input in = load(path);
    Report r("check");
    r["input"] = input_json(in);
    r["parameters"] = flags_json(f);
    r["parameters"]["problem"] = problem;
    r["verdict"] = nullptr;
    r["witness"] = nullptr;
    r["stats"] = json::object();
    int code;
    if (problem == "empty") code = check_empty(in, f, r);
    else if (problem == "member") code = check_member(in, arg, r);
    else if (problem == "unambiguous") code = check_unamb(in, f, r);
    else if (problem == "universal") code = check_univ(in, f, r);
    else if (problem == "equiv-regular") {
        if (arg.empty()) throw UsageError("equiv-regular needs a DFA file");
        code = check_equiv(in, arg, f, r);
    } else {
        throw UsageError("unknown problem '" + problem + "'");
    }
    return r.emit(code);
}

std::vector<Integer> parse_set(const std::string& text)
{
    std::vector<Integer> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Integer x;
        if (item.empty() || x.set_str(item, 10) != 0) throw UsageError("bad set element '" + item + "'");
        out.push_back(x);
    }
    if (out.empty()) throw UsageError("partition needs a non-empty --set");
    return out;
}

struct GenerateArgs {
    std::string kind;
    std::string set;
    std::string automaton;
    std::string bound;
    std::string target_state;
    std::string target_value;
    std::string letter = "a";
    RandomParams random;
    std::string output;
};

Integer parse_natural(const std::string& text, const char* what)
{
    Integer x;
    if (text.empty() || x.set_str(text, 10) != 0 || x < 0) throw UsageError(std::string(what) + " needs a natural number");
    return x;
}

BoundedOcaInstance oca_instance(const GenerateArgs& g)
{
    if (g.automaton.empty()) throw UsageError("--automaton is required");
    BoundedOcaInstance inst;
    inst.automaton = parse_vass(read_file(g.automaton));
    inst.bound = parse_natural(g.bound, "--bound");
    inst.value = parse_natural(g.target_value, "--target-value");
    auto p = inst.automaton.find_state(g.target_state);
    if (!p) throw UsageError("unknown --target-state '" + g.target_state + "'");
    inst.target = *p;
    return inst;
}

int cmd_generate(const GenerateArgs& g)
{
    Vass v;
    try {
        if (g.kind == "partition") v = gen_partition(parse_set(g.set));
        else if (g.kind == "partition-ambiguous") v = gen_partition_ambiguous(parse_set(g.set));
        else if (g.kind == "bounded-oca") v = gen_bounded_oca(oca_instance(g));
        else if (g.kind == "unamb-variant") v = gen_unamb_check_variant(oca_instance(g));
        else if (g.kind == "empty-wrap") {
            if (g.automaton.empty()) throw UsageError("--automaton is required");
            v = gen_empty_wrap(parse_vass(read_file(g.automaton)), g.letter);
        } else if (g.kind == "random") v = random_vass(g.random);
        else throw UsageError("unknown generator kind '" + g.kind + "'");
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::string text = serialize_vass(v);
    if (g.output.empty() || g.output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(g.output, std::ios::binary);
        if (!out) throw UsageError("cannot write " + g.output);
        out << text;
    }
    return kHolds;
}

int cmd_oracle(const std::string& path, const std::string& mode, const Flags& f)
{
    Input in = load(path);
    Report r("oracle");
    r["input"] = input_json(in);
    r["parameters"] = flags_json(f);
    r["parameters"]["mode"] = mode;
    r["verdict"] = nullptr;
    r["witness"] = nullptr;
    r["stats"] = json::object();
    const Vass& v = in.vass;

    if (mode == "universal") {
        std::optional<Word> missing;
        try {
            missing = brute_universal_up_to(v, f.max_len, f.eps_budget);
        } catch (const BudgetExhausted& e) {
            r["verdict"] = json{{"oracle", "inconclusive"}, {"note", e.what()}};
            return r.emit(kInconclusive);
        }
        UniversalityVerdict u = check_universal(v, universality_options(f));
        r["verdict"] = json{{"oracle", missing ? "not-universal" : "universal-up-to-length"},
                            {"decision", to_string(u.answer)}};
        if (missing) r["witness"] = json{{"word", format_word(v, *missing)}};
        bool disagree = (missing && u.answer == UniversalityAnswer::universal) ||
                        (!missing && u.answer == UniversalityAnswer::not_universal && u.witness &&
                         u.witness->size() <= f.max_len);
        r["verdict"]["agree"] = !disagree;
        if (disagree) return r.emit(kDisagree);
        return r.emit(missing ? kFails : kHolds);
    }
    if (mode == "unambiguous") {
        std::optional<AmbiguityWitness> amb;
        try {
            amb = brute_unambiguous_up_to(v, f.max_len, f.eps_budget);
        } catch (const BudgetExhausted& e) {
            r["verdict"] = json{{"oracle", "inconclusive"}, {"note", e.what()}};
            return r.emit(kInconclusive);
        }
        AmbiguityVerdict a = check_unambiguous(v, f.node_cap);
        r["verdict"] = json{{"oracle", amb ? "ambiguous" : "unambiguous-up-to-length"},
                            {"decision", a.unambiguous ? "unambiguous" : "ambiguous"}};
        if (amb) {
            r["witness"] = json{{"word", format_word(v, amb->word)},
                                {"runs", amb->count.unbounded ? "unbounded" : amb->count.value.get_str()}};
        }
        bool disagree = (amb && a.unambiguous) || (!amb && !a.unambiguous && a.word && a.word->size() <= f.max_len);
        r["verdict"]["agree"] = !disagree;
        if (disagree) return r.emit(kDisagree);
        return r.emit(amb ? kFails : kHolds);
    }
    throw UsageError("unknown oracle mode '" + mode + "'");
}

json big_json(const Integer& x)
{
    if (decimal_digits(x) <= 60) return x.get_str();
    return json{{"decimal_digits", decimal_digits(x)}};
}

int cmd_bounds(const std::string& path, const std::string& norm_text, std::size_t dim, std::size_t states)
{
    Report r("bounds");
    Integer m;
    if (!path.empty()) {
        Input in = load(path);
        r["input"] = input_json(in);
        m = norm(in.vass);
        dim = in.vass.dim();
        states = in.vass.num_states();
    } else {
        m = parse_natural(norm_text, "--norm");
    }
    if (dim == 0) throw UsageError("bounds need dimension >= 1");
    if (states == 0) throw UsageError("bounds need at least one state");
    const Integer n = static_cast<unsigned long>(states);
    r["parameters"] = json{{"norm", m.get_str()}, {"dim", dim}, {"states", states}};
    json verdict;
    auto put = [&](const char* key, auto&& compute) {
        try {
            verdict[key] = big_json(compute());
        } catch (const BoundTooLarge&) {
            verdict[key] = json{{"too_large", true}};
        }
    };
    put("A", [&] { return rackoff_bound(m, dim, n); });
    put("B", [&] { return profile_threshold(m, dim, n); });
    put("C", [&] { return truncation_threshold(m, dim, n); });
    put("omega", [&] { return omega_closed_form(m, dim, n); });
    verdict["omega_log2_estimate"] = omega_log2_estimate(m, dim, n);
    r["verdict"] = verdict;
    return r.emit(kHolds);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decision procedures for VASS coverability languages"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Flags flags;
    auto add_flags = [&](CLI::App* sub) {
        sub->add_option("--max-profile", flags.max_profile, "largest profile cap (default: 1,2,4,... up to omega)");
        sub->add_option("--node-cap", flags.node_cap, "forward-search node cap")->capture_default_str();
        sub->add_option("--eps-budget", flags.eps_budget, "epsilon-step budget for run counting (0: automatic)")
            ->capture_default_str();
        sub->add_option("--max-len", flags.max_len, "oracle word length")->capture_default_str();
        sub->add_option("--state-budget", flags.state_budget, "profile automaton state budget")->capture_default_str();
    };

    std::string file;
    auto* validate = app.add_subcommand("validate", "parse a model and print its canonical form");
    validate->add_option("file", file)->required();

    std::string problem, arg;
    auto* check = app.add_subcommand("check", "empty | member WORD | unambiguous | universal | equiv-regular DFA");
    check->add_option("file", file)->required();
    check->add_option("problem", problem)->required();
    check->add_option("argument", arg);
    add_flags(check);

    GenerateArgs g;
    auto* generate = app.add_subcommand("generate", "partition | partition-ambiguous | bounded-oca | unamb-variant | "
                                                    "empty-wrap | random");
    generate->add_option("kind", g.kind)->required();
    generate->add_option("--set", g.set, "comma-separated multiset");
    generate->add_option("--automaton", g.automaton, "input model file");
    generate->add_option("--bound", g.bound);
    generate->add_option("--target-state", g.target_state);
    generate->add_option("--target-value", g.target_value);
    generate->add_option("--letter", g.letter)->capture_default_str();
    generate->add_option("--states", g.random.states)->capture_default_str();
    generate->add_option("--dim", g.random.dim)->capture_default_str();
    generate->add_option("--norm", g.random.norm)->capture_default_str();
    generate->add_option("--symbols", g.random.symbols)->capture_default_str();
    generate->add_option("--density", g.random.density)->capture_default_str();
    generate->add_option("--seed", g.random.seed)->capture_default_str();
    generate->add_option("-o,--output", g.output, "output file (default: stdout)");

    std::string mode;
    auto* oracle = app.add_subcommand("oracle", "brute-force cross-check: universal | unambiguous");
    oracle->add_option("file", file)->required();
    oracle->add_option("mode", mode)->required();
    add_flags(oracle);

    std::string norm_text;
    std::size_t dim = 0, states = 0;
    auto* bounds = app.add_subcommand("bounds", "bound calculators for a model or for --norm/--dim/--states");
    bounds->add_option("file", file);
    bounds->add_option("--norm", norm_text);
    bounds->add_option("--dim", dim);
    bounds->add_option("--states", states);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*check) return cmd_check(file, problem, arg, flags);
        if (*generate) return cmd_generate(g);
        if (*oracle) return cmd_oracle(file, mode, flags);
        if (*bounds) {
            if (file.empty() && norm_text.empty()) throw UsageError("bounds needs a file or --norm/--dim/--states");
            return cmd_bounds(file, norm_text, dim, states);
        }
    } catch (const ParseError& e) {
        std::cerr << "uvass: parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const ModelError& e) {
        std::cerr << "uvass: invalid model: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "uvass: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "uvass: " << e.what() << "\n";
        return kInconclusive;
    }
    return kUsage;
}
