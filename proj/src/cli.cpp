#include "pmv/cli.hpp"

#include <fstream>
#include <sstream>

#include "pmv/errors.hpp"
#include "pmv/ideals.hpp"
#include "pmv/search.hpp"
#include "pmv/spec_format.hpp"
#include "pmv/sqrt.hpp"
#include "pmv/suites.hpp"

namespace pmv {

namespace {

struct Args {
    std::vector<std::string> positional;
    std::size_t budget = 512;
    uint64_t seed = 0;
    std::size_t depth = 8;
    std::size_t max_size = 6;
    std::string property;
    std::optional<std::string> element;
    bool json = false;
};

struct UsageError : Error {
    using Error::Error;
};

long long parse_number(const std::string& flag, const std::string& value) {
    try {
        size_t pos = 0;
        long long n = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return n;
    } catch (const std::exception&) {
        throw UsageError(flag + " expects an integer, got \"" + value + "\"");
    }
}

Args parse_args(const std::vector<std::string>& argv, std::size_t start) {
    Args args;
    for (std::size_t i = start; i < argv.size(); i++) {
        const std::string& a = argv[i];
        auto value = [&](const char* flag) -> const std::string& {
            if (i + 1 >= argv.size()) throw UsageError(std::string(flag) + " needs a value");
            return argv[++i];
        };
        if (a == "--json") {
            args.json = true;
        } else if (a == "--budget") {
            long long n = parse_number(a, value("--budget"));
            if (n < 1) throw UsageError("--budget must be >= 1");
            args.budget = static_cast<std::size_t>(n);
        } else if (a == "--seed") {
            args.seed = static_cast<uint64_t>(parse_number(a, value("--seed")));
        } else if (a == "--depth") {
            long long n = parse_number(a, value("--depth"));
            if (n < 1) throw UsageError("--depth must be >= 1");
            args.depth = static_cast<std::size_t>(n);
        } else if (a == "--max-size") {
            long long n = parse_number(a, value("--max-size"));
            if (n < 1) throw UsageError("--max-size must be >= 1");
            args.max_size = static_cast<std::size_t>(n);
        } else if (a == "--property") {
            args.property = value("--property");
        } else if (a == "--element") {
            args.element = value("--element");
        } else if (!a.empty() && a[0] == '-') {
            throw UsageError("unknown flag " + a);
        } else {
            args.positional.push_back(a);
        }
    }
    return args;
}

ParsedSpec load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open spec file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
}

std::string describe_witness(const AlgebraPtr& M, const SqrtWitness& w) {
    return w.form_name() + " (verified " + verify_level_name(w.verified()) + "), r(0) = " +
           M->print(w(M->zero()));
}

JsonValue base_json(const std::string& command) {
    JsonValue v = JsonValue::object();
    v.add("command", JsonValue::string(command));
    return v;
}

// Report JSON augmented with the counterexample's elements as parseable
// literals, so a failing run can be replayed through the library.
JsonValue report_json(const AlgebraPtr& M, const SuiteReport& rep) {
    JsonValue v = rep.to_json();
    if (rep.counterexample) {
        JsonValue elems = JsonValue::array();
        bool serializable = true;
        for (const auto& e : rep.counterexample->elements) {
            try {
                elems.push(element_to_json(M, e));
            } catch (const Error&) {
                serializable = false;
                break;
            }
        }
        if (serializable) v.add("counterexample_elements", std::move(elems));
    }
    return v;
}

CommandResult cmd_check_axioms(const Args& args) {
    if (args.positional.size() != 1) throw UsageError("check-axioms needs exactly one spec file");
    ParsedSpec spec = load_spec(args.positional[0]);
    SuiteReport rep = check_axioms(spec.algebra, CheckOptions{args.budget, args.seed});
    CommandResult res;
    std::string text = spec.algebra->describe() + "\n";
    for (const auto& sub : rep.sub) text += "  " + sub.summary_line() + "\n";
    text += rep.summary_line() + "\n";
    res.out = text;
    res.code = rep.passed() ? 0 : 1;
    if (args.json) {
        JsonValue v = base_json("check-axioms");
        v.add("algebra", JsonValue::string(spec.algebra->describe()));
        v.add("report", report_json(spec.algebra, rep));
        res.json = std::move(v);
    }
    return res;
}

CommandResult cmd_sqrt(const Args& args) {
    if (args.positional.size() != 1) throw UsageError("sqrt needs exactly one spec file");
    ParsedSpec spec = load_spec(args.positional[0]);
    const AlgebraPtr& M = spec.algebra;
    CandidateResult cand = find_sqrt(M, CheckOptions{args.budget, args.seed});
    CommandResult res;
    JsonValue v = base_json("sqrt");
    v.add("algebra", JsonValue::string(M->describe()));
    if (!cand.witness) {
        std::string text = "no square root";
        if (cand.violation) {
            text += "; " + cand.violation->property + " violated";
            if (!cand.violation->printed.empty()) text += " at x=" + cand.violation->printed[0];
            if (!cand.violation->trace.empty())
                text += " by candidate: " + cand.violation->trace;
            v.add("violation", cand.violation->to_json());
        } else if (!cand.note.empty()) {
            text += "; " + cand.note;
            v.add("note", JsonValue::string(cand.note));
        }
        res.out = text + "\n";
        res.code = 1;
        v.add("status", JsonValue::string("absent"));
        if (args.json) res.json = std::move(v);
        return res;
    }
    const SqrtWitness& w = *cand.witness;
    std::string text = "square root: " + describe_witness(M, w) + "\n";
    v.add("status", JsonValue::string("present"));
    v.add("form", JsonValue::string(w.form_name()));
    v.add("verified", JsonValue::string(verify_level_name(w.verified())));
    v.add("r0", element_to_json(M, w(M->zero())));
    if (args.element) {
        JsonValue ev = json_parse(*args.element);
        PmvElement x = parse_element(M, ev);
        PmvElement rx = w(x);
        text += "r(" + M->print(x) + ") = " + M->print(rx) + "\n";
        v.add("element", element_to_json(M, x));
        v.add("r_element", element_to_json(M, rx));
    }
    res.out = text;
    res.code = 0;
    if (args.json) res.json = std::move(v);
    return res;
}

CommandResult cmd_classify(const Args& args) {
    if (args.positional.size() != 1) throw UsageError("classify needs exactly one spec file");
    ParsedSpec spec = load_spec(args.positional[0]);
    const AlgebraPtr& M = spec.algebra;
    CheckOptions copts{args.budget, args.seed};
    CandidateResult cand = find_sqrt(M, copts);
    CommandResult res;
    JsonValue v = base_json("classify");
    v.add("algebra", JsonValue::string(M->describe()));
    if (!cand.witness) {
        res.out = "no square root; classification needs a witness" +
                  (cand.note.empty() ? std::string() : "; " + cand.note) + "\n";
        res.code = 1;
        v.add("status", JsonValue::string("absent"));
        if (args.json) res.json = std::move(v);
        return res;
    }
    ClassifyResult cls = w_and_classify(M, *cand.witness, copts);
    std::string text = class_name(cls.kind) + "; w=" + M->print(cls.w) + "; v=" + M->print(cls.v);
    if (cls.kind == AlgebraClass::Mixed) {
        text += "; Boolean part [0,v]";
        if (cls.boolean_part->is_finite())
            text += " with " + std::to_string(cls.boolean_part->size()) + " elements";
        text += "; strict part [0,v-] = " + cls.strict_part->describe();
    }
    text += "\n";
    v.add("class", JsonValue::string(class_name(cls.kind)));
    v.add("w", element_to_json(M, cls.w));
    v.add("v", element_to_json(M, cls.v));
    bool ok = cls.details.passed();
    if (cls.kind == AlgebraClass::Mixed) {
        for (const auto& sub : cls.details.sub) text += "  " + sub.summary_line() + "\n";
        v.add("checks", report_json(M, cls.details));
    }
    res.out = text;
    res.code = ok ? 0 : 1;
    if (args.json) res.json = std::move(v);
    return res;
}

CommandResult cmd_suite(const Args& args) {
    if (args.positional.size() != 2)
        throw UsageError("suite needs a suite name and one spec file");
    const std::string& name = args.positional[0];
    bool known = false;
    for (const auto& s : suite_catalog()) known = known || s == name;
    if (!known) throw UsageError("unknown suite \"" + name + "\"");
    ParsedSpec spec = load_spec(args.positional[1]);
    const AlgebraPtr& M = spec.algebra;
    CheckOptions copts{args.budget, args.seed};
    CandidateResult cand = find_sqrt(M, copts);
    CommandResult res;
    JsonValue v = base_json("suite");
    v.add("algebra", JsonValue::string(M->describe()));
    if (!cand.witness) {
        res.out = "no square root on " + M->describe() + "; suite " + name + " needs a witness\n";
        res.code = 1;
        v.add("status", JsonValue::string("no-witness"));
        if (args.json) res.json = std::move(v);
        return res;
    }
    SuiteOptions sopts;
    sopts.budget = args.budget;
    sopts.seed = args.seed;
    sopts.depth = args.depth;
    SuiteReport rep = run_property_suite(name, M, &*cand.witness, sopts);
    res.out = rep.summary_line() + "\n";
    res.code = rep.passed() ? 0 : 1;
    if (args.json) {
        v.add("report", report_json(M, rep));
        res.json = std::move(v);
    }
    return res;
}

CommandResult cmd_ideals(const Args& args) {
    if (args.positional.size() != 1) throw UsageError("ideals needs exactly one spec file");
    ParsedSpec spec = load_spec(args.positional[0]);
    const AlgebraPtr& M = spec.algebra;
    auto ideals = enumerate_ideals(M, args.max_size);
    auto elems = M->enumerate();
    CommandResult res;
    std::string text = M->describe() + ": " + std::to_string(ideals.size()) + " ideals\n";
    JsonValue v = base_json("ideals");
    v.add("algebra", JsonValue::string(M->describe()));
    JsonValue list = JsonValue::array();
    std::size_t normal = 0, prime = 0, maximal = 0;
    for (const auto& I : ideals) {
        bool is_n = ideal_predicate(M, I, IdealKind::Normal);
        bool is_p = ideal_predicate(M, I, IdealKind::Prime);
        bool is_m = ideal_predicate(M, I, IdealKind::Maximal);
        normal += is_n;
        prime += is_p;
        maximal += is_m;
        std::string desc = "{";
        JsonValue members = JsonValue::array();
        for (std::size_t k = 0; k < I.members.size(); k++) {
            if (k) desc += ",";
            desc += M->print(elems[I.members[k]]);
            members.push(element_to_json(M, elems[I.members[k]]));
        }
        desc += "}";
        text += "  " + desc + ":";
        if (is_n) text += " normal";
        if (is_p) text += " prime";
        if (is_m) text += " maximal";
        text += "\n";
        JsonValue item = JsonValue::object();
        item.add("members", std::move(members));
        item.add("normal", JsonValue::number(is_n));
        item.add("prime", JsonValue::number(is_p));
        item.add("maximal", JsonValue::number(is_m));
        list.push(std::move(item));
    }
    bool rep = is_representable(M);
    text += std::to_string(normal) + " normal, " + std::to_string(prime) + " prime, " +
            std::to_string(maximal) + " maximal; representable: " + (rep ? "true" : "false") +
            "\n";
    v.add("ideals", std::move(list));
    v.add("representable", JsonValue::number(rep));
    res.out = text;
    res.code = 0;
    if (args.json) res.json = std::move(v);
    return res;
}

CommandResult cmd_counterexample(const Args& args) {
    if (args.property.empty()) throw UsageError("counterexample needs --property <name>");
    if (!args.positional.empty()) throw UsageError("counterexample takes no positional arguments");
    auto found = counterexample_search(args.property, args.max_size,
                                       SearchOptions{args.budget, args.seed});
    CommandResult res;
    JsonValue v = base_json("counterexample");
    v.add("property", JsonValue::string(args.property));
    v.add("max_size", JsonValue::number(static_cast<long long>(args.max_size)));
    if (!found) {
        res.out = "no violator among valid models of size <= " + std::to_string(args.max_size) +
                  "\n";
        res.code = 0;
        v.add("status", JsonValue::string("absent"));
        if (args.json) res.json = std::move(v);
        return res;
    }
    std::string text = "violator: " + found->shape + " (";
    JsonValue chains = JsonValue::array();
    for (std::size_t i = 0; i < found->chain_lengths.size(); i++) {
        if (i) text += " x ";
        text += "mv_chain n=" + std::to_string(found->chain_lengths[i]);
        chains.push(JsonValue::number(found->chain_lengths[i]));
    }
    text += ")\n" + found->failure.summary_line() + "\n";
    res.out = text;
    res.code = 1;
    v.add("status", JsonValue::string("found"));
    v.add("chain_lengths", std::move(chains));
    v.add("report", report_json(found->model, found->failure));
    if (args.json) res.json = std::move(v);
    return res;
}

} // namespace

std::string usage_text() {
    return "usage:\n"
           "  pmv check-axioms <spec> [--budget N] [--seed S] [--json]\n"
           "  pmv sqrt <spec> [--element E] [--budget N] [--seed S] [--json]\n"
           "  pmv classify <spec> [--budget N] [--seed S] [--json]\n"
           "  pmv suite <name> <spec> [--budget N] [--seed S] [--depth D] [--json]\n"
           "  pmv ideals <spec> [--max-size K] [--json]\n"
           "  pmv counterexample --property <name> [--max-size K] [--seed S] [--json]\n"
           "exit codes: 0 pass, 1 property failure, 2 usage/parse error\n";
}

CommandResult run_command(const std::vector<std::string>& argv) {
    CommandResult res;
    try {
        if (argv.empty()) throw UsageError("missing command");
        const std::string& cmd = argv[0];
        Args args = parse_args(argv, 1);
        if (cmd == "check-axioms") return cmd_check_axioms(args);
        if (cmd == "sqrt") return cmd_sqrt(args);
        if (cmd == "classify") return cmd_classify(args);
        if (cmd == "suite") return cmd_suite(args);
        if (cmd == "ideals") return cmd_ideals(args);
        if (cmd == "counterexample") return cmd_counterexample(args);
        throw UsageError("unknown command \"" + cmd + "\"");
    } catch (const UsageError& e) {
        res.code = 2;
        res.out = std::string("error: ") + e.what() + "\n" + usage_text();
        return res;
    } catch (const ParseError& e) {
        res.code = 2;
        res.out = std::string("parse error: ") + e.what() + "\n";
        return res;
    } catch (const Error& e) {
        res.code = 2;
        res.out = std::string("error: ") + e.what() + "\n";
        return res;
    }
}

} // namespace pmv
