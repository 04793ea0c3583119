#include "bridge_order/cli.hpp"

#include "bridge_order/diagram.hpp"
#include "bridge_order/errors.hpp"
#include "bridge_order/json_io.hpp"
#include "bridge_order/oracle.hpp"
#include "bridge_order/order.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <iostream>
#include <regex>

namespace bridge_order::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::regex kFractionSyntax(R"(\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?)");
const std::regex kWordSyntax(R"(\s*\[\s*([+-]?\d+\s*(,\s*[+-]?\d+\s*)*)?\]\s*)");

Fraction fraction_arg(const std::string& text) {
    if (!std::regex_match(text, kFractionSyntax)) {
        throw UsageError("'" + text + "' is not a fraction p/q");
    }
    return Fraction::parse(text, true);
}

// Accepts an expanded word, or a word of nonzero even integers to expand.
ExpandedWord word_arg(const std::string& text) {
    if (!std::regex_match(text, kWordSyntax)) {
        throw UsageError("'" + text + "' is not a word such as [2,-2,0,-2]");
    }
    const auto entries = parse_integer_list(text);
    std::vector<int> small;
    for (const auto& x : entries) {
        if (!x.fits_sint_p()) throw InvalidInput("word entry " + x.get_str() + " is too large");
        small.push_back(static_cast<int>(x.get_si()));
    }
    if (small.empty() || is_expanded(small)) return ExpandedWord(small);
    return expand(EvenWord(entries));
}

TwoBridgeClass knot_arg(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        const auto w = word_arg(text);
        return w.empty() ? TwoBridgeClass::unknot() : phi(w);
    }
    return knot_class(fraction_arg(text));
}

std::string echo(const std::string& input, const TwoBridgeClass& k) {
    return input + " -> " + k.to_string();
}

Json with_schema(Json body) {
    Json out{{"schema", kSchema}};
    for (auto& [key, value] : body.items()) out[key] = value;
    return out;
}

long threads_from_env() {
    if (const char* v = std::getenv("BRIDGE_ORDER_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(v, &end, 10);
        if (end != v && *end == '\0' && n >= 1) return n;
        throw UsageError(std::string("BRIDGE_ORDER_THREADS must be a positive integer, got '") + v + "'");
    }
    return 1;
}

struct Options {
    bool json = false;
    std::vector<std::string> args;
    bool include_unknot = false;
    long q_max = 6;
    std::size_t budget = SearchBudget{}.max_candidates;
    std::size_t max_len = 6;
    std::size_t search_len = 40;
    double time_limit = 600;
    std::string output;
    std::string format = "svg";
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    int info() {
        const auto f = fraction_arg(o_.args[0]);
        const auto k = knot_class(f);
        Json expansions = Json::array();
        for (const auto& e : even_expansion(f)) expansions.push_back(to_json(e));
        Json classes = word_classes(k);
        if (o_.json) {
            emit(Json{{"input", o_.args[0]}, {"knot", to_json(k)}, {"expansions", expansions}, {"word_classes", classes}});
        } else {
            out_ << echo(o_.args[0], k) << "\n";
            out_ << "kind: " << to_json(k)["kind"].get<std::string>() << "\n";
            for (const auto& e : expansions) {
                out_ << "expansion: " << e["integer_part"].get<std::string>() << " + " << e["word"].dump() << "\n";
            }
            for (const auto& c : classes) out_ << "word class: " << c.dump() << "\n";
        }
        return kOk;
    }

    int word() {
        const auto k = knot_class(fraction_arg(o_.args[0]));
        const auto classes = word_classes(k);
        if (o_.json) {
            emit(Json{{"input", o_.args[0]}, {"knot", to_json(k)}, {"words", classes}});
        } else {
            out_ << echo(o_.args[0], k) << "\n";
            for (const auto& c : classes) out_ << c.dump() << "\n";
        }
        return kOk;
    }

    int knot() {
        const auto w = word_arg(o_.args[0]);
        const auto k = w.empty() ? TwoBridgeClass::unknot() : phi(w);
        if (o_.json) {
            emit(Json{{"word", to_json(w)}, {"canonical", to_json(class_of(w).canonical())}, {"knot", to_json(k)}});
        } else {
            out_ << w.to_string() << " -> " << k.to_string() << "\n";
        }
        return kOk;
    }

    int compare_cmd() {
        const auto r = compare(knot_arg(o_.args[0]), knot_arg(o_.args[1]));
        if (o_.json) {
            emit(Json{{"relation", to_string(r.relation)}, {"result", to_json(r)}});
        } else {
            out_ << echo(o_.args[0], r.left) << "\n" << echo(o_.args[1], r.right) << "\n";
            out_ << "relation: " << to_string(r.relation) << "\n";
            if (r.witness) print_parsing(*r.witness);
        }
        return kOk;
    }

    int lower_bounds_cmd() {
        const auto k = knot_arg(o_.args[0]);
        const auto bounds = lower_bounds(k, o_.include_unknot);
        if (o_.json) {
            Json list = Json::array();
            for (const auto& b : bounds) list.push_back(to_json(b));
            emit(Json{{"knot", to_json(k)}, {"lower_bounds", list}});
        } else {
            out_ << echo(o_.args[0], k) << "\n";
            for (const auto& b : bounds) out_ << b.to_string() << " " << knot_word(b) << "\n";
        }
        return kOk;
    }

    int upper_bound() {
        std::vector<TwoBridgeClass> knots;
        for (const auto& a : o_.args) knots.push_back(knot_arg(a));
        Json certificate = nullptr;
        if (knots.size() == 2) certificate = to_json(upper_bound_exists(knots[0], knots[1]));
        std::optional<SetUpperBound> bound;
        std::string reason;
        try {
            bound = construct_upper_bound(knots);
        } catch (const NoUpperBound& e) {
            reason = e.what();
        }
        if (o_.json) {
            emit(Json{{"exists", bound.has_value()},
                      {"certificate", certificate},
                      {"bound", bound ? to_json(*bound) : Json(nullptr)},
                      {"reason", bound ? Json(nullptr) : Json(reason)}});
            return kOk;
        }
        for (std::size_t i = 0; i < knots.size(); ++i) out_ << echo(o_.args[i], knots[i]) << "\n";
        out_ << "exists: " << (bound ? "true" : "false") << "\n";
        if (!bound) {
            out_ << "reason: " << reason << "\n";
            return kOk;
        }
        const auto k = bound->word.empty() ? TwoBridgeClass::unknot() : phi(bound->word);
        out_ << "word: " << bound->word.to_string() << "\n";
        out_ << "length: " << bound->word.size() << "\n";
        out_ << "knot: " << k.to_string() << "\n";
        if (bound->base) out_ << "exponent: " << bound->exponent << " (2Q+1 = " << 2 * bound->exponent + 1 << ")\n";
        return kOk;
    }

    int lub() {
        const auto k1 = knot_arg(o_.args[0]);
        const auto k2 = knot_arg(o_.args[1]);
        const auto words = shortest_lubs(k1, k2);
        if (o_.json) {
            Json list = Json::array();
            for (const auto& w : words) {
                list.push_back(Json{{"word", to_json(w)}, {"knot", to_json(w.empty() ? TwoBridgeClass::unknot() : phi(w))}});
            }
            emit(Json{{"left", to_json(k1)}, {"right", to_json(k2)}, {"shortest_lubs", list}});
        } else {
            out_ << echo(o_.args[0], k1) << "\n" << echo(o_.args[1], k2) << "\n";
            for (const auto& w : words) {
                out_ << w.to_string() << " " << (w.empty() ? TwoBridgeClass::unknot() : phi(w)).to_string() << "\n";
            }
        }
        return kOk;
    }

    int partners() {
        const auto k = knot_arg(o_.args[0]);
        if (o_.q_max < 1) throw UsageError("--q-max must be at least 1");
        const auto list = incomparable_partners(k, o_.q_max);
        if (o_.json) {
            for (const auto& p : list) emit(to_json(p));
        } else {
            out_ << echo(o_.args[0], k) << "\n";
            for (const auto& p : list) {
                out_ << p.knot.to_string() << " " << p.word.to_string() << " q=" << p.exponent << " p="
                     << p.form.exponent << "\n";
            }
        }
        return kOk;
    }

    int stdform() {
        const auto w = word_arg(o_.args[0]);
        const auto forms = std_forms(w);
        if (o_.json) {
            Json list = Json::array();
            for (const auto& f : forms) list.push_back(to_json(f));
            emit(Json{{"word", to_json(w)}, {"std_forms", list}});
        } else {
            out_ << w.to_string() << "\n";
            if (forms.empty()) out_ << "no standard form\n";
            for (const auto& f : forms) {
                out_ << "e=" << f.e.to_string() << " m=" << f.m << " n=" << f.n << " exponent=" << f.exponent << "\n";
            }
        }
        return kOk;
    }

    int diagram() {
        const auto d = build_diagram(word_arg(o_.args[0]), word_arg(o_.args[1]), word_arg(o_.args[2]));
        if (o_.json) {
            emit(to_json(d));
            return kOk;
        }
        const auto text = render(d, diagram_format(o_.format));
        if (o_.output.empty()) {
            out_ << text;
        } else {
            std::ofstream file(o_.output, std::ios::binary);
            if (!file || !(file << text)) throw Error("cannot write " + o_.output);
            out_ << "wrote " << o_.output << "\n";
        }
        return kOk;
    }

    int oracle_verify() {
        const auto threads = static_cast<unsigned>(threads_from_env());
        const auto report = agreement_sweep(o_.max_len, budget(), threads);
        if (o_.json) {
            for (const auto& row : report.rows) emit(to_json(row));
            emit(Json{{"pairs", report.rows.size()}, {"disagreements", report.disagreements}, {"exhausted", report.exhausted}});
        } else {
            for (const auto& row : report.rows) {
                if (row.agrees) continue;
                out_ << row.a.canonical().to_string() << " " << row.b.canonical().to_string() << ": theorem "
                     << (row.theorem ? "bound" : "none") << ", search " << to_string(row.search.status) << "\n";
            }
            out_ << "pairs: " << report.rows.size() << "\ndisagreements: " << report.disagreements
                 << "\nexhausted: " << report.exhausted << "\n";
        }
        if (report.exhausted > 0) return kBudgetExhausted;
        return report.disagreements == 0 ? kOk : kDomainError;
    }

    int oracle_search() {
        const auto a = class_of(word_arg(o_.args[0]));
        const auto b = class_of(word_arg(o_.args[1]));
        auto bud = budget();
        bud.max_word_length = o_.search_len;
        const auto r = search_double_parsing(a, b, bud);
        if (o_.json) {
            emit(to_json(r));
        } else {
            out_ << "status: " << to_string(r.status) << "\n";
            out_ << "required length: " << r.required_length << "\n";
            out_ << "searched length: " << r.searched_length << "\n";
            for (const auto& w : r.witnesses) {
                out_ << w.c.to_string() << " over " << w.a.to_string() << " and " << w.b.to_string() << "\n";
            }
        }
        return r.status == SearchStatus::BudgetExhausted ? kBudgetExhausted : kOk;
    }

    int oracle_lemmas() {
        const auto r = verify_parsing_lemmas(word_arg(o_.args[2]), word_arg(o_.args[0]), word_arg(o_.args[1]));
        if (o_.json) {
            emit(to_json(r));
        } else {
            for (const auto& c : r.checks) {
                out_ << (c.passed ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            }
            out_ << "mixed seams: " << r.mixed_seams << "\n";
        }
        return r.passed() ? kOk : kDomainError;
    }

    int oracle_enumerate() {
        enumerate_S(o_.max_len, false, [&](const ExpandedWord& w) {
            if (o_.json) {
                emit(Json{{"word", to_json(w)}});
            } else {
                out_ << w.to_string() << "\n";
            }
            return true;
        });
        return kOk;
    }

private:
    void emit(const Json& body) { out_ << with_schema(body).dump() << "\n"; }

    static std::string knot_word(const TwoBridgeClass& k) {
        return k.is_unknot() ? "[]" : phi_inverse_knot(k).canonical().to_string();
    }

    static Json word_classes(const TwoBridgeClass& k) {
        Json out = Json::array();
        switch (k.kind()) {
        case BridgeKind::Unknot: out.push_back(Json::array()); break;
        case BridgeKind::Knot: out.push_back(to_json(phi_inverse_knot(k).canonical())); break;
        case BridgeKind::Link: {
            const auto pre = phi_inverse_link(k);
            out.push_back(to_json(pre.first.canonical()));
            if (!pre.coincident) out.push_back(to_json(pre.second.canonical()));
            break;
        }
        }
        return out;
    }

    void print_parsing(const Parsing& p) {
        out_ << "witness: " << p.word().to_string() << " over " << p.tile().to_string() << "\n";
        for (const auto& piece : p.pieces()) {
            if (piece.kind == Piece::Kind::Tile) {
                out_ << "  tile " << (piece.sign > 0 ? "+" : "-") << (piece.forward ? "a" : "a^-1") << "\n";
            } else {
                out_ << "  connector " << ConnectorWord(piece.value).sum() << "\n";
            }
        }
    }

    SearchBudget budget() const {
        SearchBudget b;
        b.max_candidates = o_.budget;
        b.time_limit = std::chrono::milliseconds(static_cast<long>(o_.time_limit * 1000));
        return b;
    }

    const Options& o_;
    std::ostream& out_;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Order relation on 2-bridge knots via parsings of expanded even continued fractions",
                 "bridge-order"};
    app.require_subcommand(1);
    Options o;
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Print JSON"); };
    // Positional words are collected as extras: CLI11 would otherwise split
    // "[2,-2]" into a list of values.
    std::map<CLI::App*, std::pair<std::size_t, std::string>> arity;
    auto positional = [&](CLI::App* sub, std::size_t n, const std::string& what) {
        sub->allow_extras();
        arity[sub] = {n, what};
    };
    auto knot_args = [&](CLI::App* sub, std::size_t n, const std::string& what) {
        positional(sub, n, what);
        json_flag(sub);
    };

    std::map<CLI::App*, int (Runner::*)()> handlers;
    auto add = [&](const std::string& name, const std::string& desc, int (Runner::*fn)()) {
        auto* sub = app.add_subcommand(name, desc);
        handlers[sub] = fn;
        return sub;
    };

    knot_args(add("info", "Knot class, expansions and word classes of p/q", &Runner::info), 1, "p/q");
    knot_args(add("word", "Word class of K(p/q)", &Runner::word), 1, "p/q");
    knot_args(add("knot", "Knot class of a word", &Runner::knot), 1, "word");
    knot_args(add("compare", "Compare two knots", &Runner::compare_cmd), 2, "two knots (p/q or word)");
    auto* lower = add("lower-bounds", "All knots below a knot", &Runner::lower_bounds_cmd);
    knot_args(lower, 1, "knot (p/q or word)");
    lower->add_flag("--include-unknot", o.include_unknot, "List the unknot too");
    auto* upper = add("upper-bound", "Upper bound existence and construction", &Runner::upper_bound);
    positional(upper, 0, "one or more knots (p/q or word)");
    json_flag(upper);
    knot_args(add("lub", "Shortest least upper bounds of two knots", &Runner::lub), 2, "two knots (p/q or word)");
    auto* partners = add("partners", "Incomparable knots sharing an upper bound", &Runner::partners);
    knot_args(partners, 1, "knot (p/q or word)");
    partners->add_option("--q-max", o.q_max, "Largest exponent")->capture_default_str();
    knot_args(add("stdform", "Standard forms of a word", &Runner::stdform), 1, "word");
    auto* diagram = add("diagram", "Path of c in the product of a and b", &Runner::diagram);
    positional(diagram, 3, "words a b c");
    auto* dj = diagram->add_flag("--json", o.json, "Print the diagram summary as JSON");
    auto* output = diagram->add_option("--output,-o", o.output, "Write the rendering to a file");
    diagram->add_option("--format", o.format, "svg or ascii")->capture_default_str();
    dj->excludes(output);

    auto* oracle = app.add_subcommand("oracle", "Brute-force checks");
    oracle->require_subcommand(1);
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "Candidate limit")->capture_default_str();
        sub->add_option("--time-limit", o.time_limit, "Seconds")->capture_default_str();
        json_flag(sub);
    };
    auto* verify = oracle->add_subcommand("verify", "Theorem/search agreement on all pairs of short classes");
    handlers[verify] = &Runner::oracle_verify;
    verify->add_option("--max-len", o.max_len, "Longest word class")->capture_default_str();
    add_budget(verify);
    auto* search = oracle->add_subcommand("search", "Shortest double parsings of two word classes");
    handlers[search] = &Runner::oracle_search;
    positional(search, 2, "words a b");
    search->add_option("--max-len", o.search_len, "Longest word searched")->capture_default_str();
    add_budget(search);
    auto* lemmas = oracle->add_subcommand("lemmas", "Structural checks on a shortest double parsing");
    handlers[lemmas] = &Runner::oracle_lemmas;
    positional(lemmas, 3, "words a b c");
    json_flag(lemmas);
    auto* enumerate = oracle->add_subcommand("enumerate", "List expanded words up to a length");
    handlers[enumerate] = &Runner::oracle_enumerate;
    enumerate->add_option("--max-len", o.max_len, "Longest word")->capture_default_str();
    json_flag(enumerate);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    CLI::App* chosen = app.get_subcommands().front();
    if (chosen == oracle) chosen = oracle->get_subcommands().front();
    Runner runner(o, out);
    try {
        if (auto it = arity.find(chosen); it != arity.end()) {
            o.args = chosen->remaining();
            for (const auto& a : o.args) {
                if (a.rfind("--", 0) == 0) throw UsageError("unknown option " + a);
            }
            const auto [n, what] = it->second;
            if (n == 0 ? o.args.empty() : o.args.size() != n) {
                throw UsageError(chosen->get_name() + " expects " + what + ", got " + std::to_string(o.args.size()) +
                                 " argument(s)");
            }
        } else if (!chosen->remaining().empty()) {
            throw UsageError("unexpected argument " + chosen->remaining().front());
        }
        return (runner.*handlers.at(chosen))();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetExhausted;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

} // namespace bridge_order::cli
