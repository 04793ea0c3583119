#include "bridge_order/json_io.hpp"

#include "bridge_order/errors.hpp"

namespace bridge_order {

namespace {

template <class T, class F>
Json optional_json(const std::optional<T>& v, F&& f) {
    return v ? f(*v) : Json(nullptr);
}

const char* kind_name(BridgeKind k) {
    switch (k) {
    case BridgeKind::Unknot: return "unknot";
    case BridgeKind::Knot: return "knot";
    case BridgeKind::Link: return "link";
    }
    return "unknown";
}

} // namespace

Json to_json(const Fraction& f) { return f.to_string(); }

Json to_json(const ExpandedWord& w) { return Json(w.vector()); }

Json to_json(const EvenWord& w) {
    Json out = Json::array();
    for (const auto& x : w.entries()) {
        if (x.fits_slong_p()) {
            out.push_back(x.get_si());
        } else {
            out.push_back(x.get_str());
        }
    }
    return out;
}

Json to_json(const CFExpansion& e) {
    return Json{{"integer_part", e.integer_part.get_str()}, {"word", to_json(e.word)}};
}

Json to_json(const TwoBridgeClass& k) {
    return Json{{"class", k.to_string()}, {"fraction", to_json(k.fraction())}, {"kind", kind_name(k.kind())}};
}

Json to_json(const Parsing& p) {
    return Json{{"word", to_json(p.word())},
                {"tile", to_json(p.tile())},
                {"signs", p.signs()},
                {"connectors", p.connectors()}};
}

Json to_json(const StdForm& f) {
    return Json{{"e", to_json(f.e)}, {"m", f.m}, {"n", f.n}, {"exponent", f.exponent}};
}

Json to_json(const OrderRelation& r) {
    return Json{{"left", to_json(r.left)},
                {"right", to_json(r.right)},
                {"relation", to_string(r.relation)},
                {"witness", optional_json(r.witness, [](const Parsing& p) { return to_json(p); })}};
}

Json to_json(const SharedBase& b) {
    return Json{{"a", to_json(b.a)}, {"b", to_json(b.b)}, {"e", to_json(b.e)}, {"m", b.m},
                {"n", b.n},          {"p", b.p},          {"q", b.q}};
}

Json to_json(const UpperBoundCertificate& c) {
    return Json{{"exists", c.exists},
                {"relation", to_string(c.relation)},
                {"larger", optional_json(c.larger, [](const TwoBridgeClass& k) { return to_json(k); })},
                {"base", optional_json(c.base, [](const SharedBase& b) { return to_json(b); })}};
}

Json to_json(const SetUpperBound& s) {
    Json maximal = Json::array();
    for (const auto& k : s.maximal) maximal.push_back(to_json(k));
    return Json{{"word", to_json(s.word)},
                {"length", s.word.size()},
                {"knot", s.word.empty() ? to_json(TwoBridgeClass::unknot()) : to_json(phi(s.word))},
                {"maximal", maximal},
                {"base", optional_json(s.base, [](const StdForm& f) { return to_json(f); })},
                {"exponent", s.exponent}};
}

Json to_json(const Partner& p) {
    return Json{{"knot", to_json(p.knot)}, {"word", to_json(p.word)}, {"form", to_json(p.form)},
                {"exponent", p.exponent}};
}

Json to_json(const Witness& w) { return Json{{"c", to_json(w.c)}, {"a", to_json(w.a)}, {"b", to_json(w.b)}}; }

Json to_json(const SearchResult& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return Json{{"status", to_string(r.status)},
                {"length", r.length()},
                {"required_length", r.required_length},
                {"searched_length", r.searched_length},
                {"candidates", r.candidates},
                {"witnesses", witnesses}};
}

Json to_json(const LemmaReport& r) {
    Json checks = Json::object();
    Json failures = Json::array();
    for (const auto& c : r.checks) {
        checks[c.name] = c.passed;
        if (!c.passed) failures.push_back(Json{{"check", c.name}, {"detail", c.detail}});
    }
    return Json{{"passed", r.passed()},
                {"witness", to_json(r.witness)},
                {"checks", checks},
                {"failures", failures},
                {"mixed_seams", r.mixed_seams},
                {"pure_seams", r.pure_seams},
                {"counterexample", r.passed() ? Json(nullptr) : to_json(r.witness.c)}};
}

Json to_json(const SweepRow& r) {
    return Json{{"a", to_json(r.a.canonical())},
                {"b", to_json(r.b.canonical())},
                {"upper_bound", r.theorem},
                {"search", to_string(r.search.status)},
                {"search_length", r.search.length()},
                {"construction_length", r.construction_length},
                {"agrees", r.agrees}};
}

Json to_json(const ProductDiagram& d) {
    Json seams = Json::array();
    for (const auto& m : d.seams) {
        seams.push_back(Json{{"position", m.seam.position},
                             {"kind", m.seam.kind == SeamKind::Mixed ? "mixed" : "pure"},
                             {"corner", Json::array({m.corner.x, m.corner.y})}});
    }
    return Json{{"a", to_json(d.a)},
                {"b", to_json(d.b)},
                {"c", to_json(d.c)},
                {"vertical_traversals", d.vertical_traversals},
                {"horizontal_traversals", d.horizontal_traversals},
                {"mixed_seams", d.mixed_seam_count()},
                {"seams", seams}};
}

ExpandedWord word_from_json(const Json& j) {
    try {
        return ExpandedWord(j.get<std::vector<int>>());
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("word must be an array of integers: ") + e.what());
    }
}

Parsing parsing_from_json(const Json& j) {
    try {
        return Parsing::from_record(word_from_json(j.at("tile")), j.at("signs").get<std::vector<int>>(),
                                    j.at("connectors").get<std::vector<long>>());
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed parsing record: ") + e.what());
    }
}

StdForm std_form_from_json(const Json& j) {
    try {
        StdForm f{word_from_json(j.at("e")), j.at("m").get<long>(), j.at("n").get<long>(),
                  j.at("exponent").get<long>()};
        if (f.m % 2 != 0 || f.n % 2 != 0 || f.exponent < 1) {
            throw InvalidInput("standard form needs even m, n and a positive exponent");
        }
        f.assemble(f.exponent);
        return f;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed standard form: ") + e.what());
    }
}

} // namespace bridge_order
