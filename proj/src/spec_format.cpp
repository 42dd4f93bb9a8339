#include "pmv/spec_format.hpp"

#include <climits>

#include "pmv/errors.hpp"
#include "pmv/ideals.hpp"

namespace pmv {

namespace {

[[noreturn]] void fail_at(const JsonValue& v, const std::string& msg) {
    throw ParseError(v.line, v.col, msg);
}

long get_long(const JsonValue& v, const char* what) {
    if (!v.is_int()) fail_at(v, std::string(what) + " must be an integer");
    return static_cast<long>(v.integer);
}

Rational parse_scalar(const JsonValue& v) {
    if (v.is_int()) return Rational(static_cast<long>(v.integer));
    if (v.is_string()) {
        auto r = Rational::parse(v.str);
        if (!r) fail_at(v, "malformed rational \"" + v.str + "\" (expected \"p/q\")");
        return *r;
    }
    fail_at(v, "expected an integer or a \"p/q\" string");
}

JsonValue scalar_to_json(const Rational& r) {
    if (r.is_integer()) {
        mpz_class n = r.num();
        if (n.fits_slong_p()) return JsonValue::number(n.get_si());
    }
    return JsonValue::string(r.str());
}

std::vector<Rational> parse_coords(const JsonValue& v, int dims) {
    std::vector<Rational> coords;
    if (dims == 1 && !v.is_array()) {
        coords.push_back(parse_scalar(v));
        return coords;
    }
    if (!v.is_array()) fail_at(v, "expected an array of " + std::to_string(dims) + " coordinates");
    if (static_cast<int>(v.items.size()) != dims)
        fail_at(v, "expected " + std::to_string(dims) + " coordinates, got " +
                       std::to_string(v.items.size()));
    for (const auto& item : v.items) coords.push_back(parse_scalar(item));
    return coords;
}

DescriptorPtr parse_group(const JsonValue& v, JsonValue& canon) {
    if (!v.is_object()) fail_at(v, "group descriptor must be an object");
    const JsonValue& kind = v.at("kind");
    if (!kind.is_string()) fail_at(kind, "group kind must be a string");
    canon = JsonValue::object();
    canon.add("kind", JsonValue::string(kind.str));
    if (kind.str == "cocycle_q4") return GroupDescriptor::cocycle_q4();
    if (kind.str == "int_vector" || kind.str == "rat_vector") {
        long dims = get_long(v.at("dims"), "dims");
        if (dims < 0) fail_at(v.at("dims"), "dims must be >= 0");
        VecOrder order = VecOrder::Product;
        if (const JsonValue* o = v.find("order")) {
            if (!o->is_string() || (o->str != "product" && o->str != "lex"))
                fail_at(*o, "order must be \"product\" or \"lex\"");
            order = o->str == "lex" ? VecOrder::Lex : VecOrder::Product;
        }
        canon.add("dims", JsonValue::number(dims));
        canon.add("order", JsonValue::string(order == VecOrder::Lex ? "lex" : "product"));
        return kind.str == "int_vector" ? GroupDescriptor::int_vector(static_cast<int>(dims), order)
                                        : GroupDescriptor::rat_vector(static_cast<int>(dims), order);
    }
    if (kind.str == "lex_pair") {
        JsonValue ch, cg;
        DescriptorPtr h = parse_group(v.at("h"), ch);
        DescriptorPtr g = parse_group(v.at("g"), cg);
        canon.add("h", std::move(ch));
        canon.add("g", std::move(cg));
        try {
            return GroupDescriptor::lex_pair(h, g);
        } catch (const Error& e) {
            fail_at(v, e.what());
        }
    }
    fail_at(kind, "unknown group kind \"" + kind.str + "\"");
}

struct Builder {
    AlgebraPtr algebra;
    JsonValue canon;
};

Builder build_spec(const JsonValue& v);

PmvElement parse_element_impl(const AlgebraPtr& M, const JsonValue& v) {
    switch (M->form()) {
        case Algebra::Form::Table: {
            long i = get_long(v, "table element");
            if (i < 0 || static_cast<std::size_t>(i) >= M->table_data().n)
                fail_at(v, "table index out of range");
            return PmvElement(static_cast<std::size_t>(i));
        }
        case Algebra::Form::Gamma: {
            const auto& G = M->group();
            std::vector<Rational> coords = parse_coords(v, G.desc->dims());
            PmvElement e{GroupElement{}};
            try {
                e = PmvElement(g_make(G.desc, std::move(coords)));
            } catch (const Error& err) {
                fail_at(v, err.what());
            }
            if (!M->contains(e)) fail_at(v, "element " + M->print(e) + " outside " + M->describe());
            return e;
        }
        case Algebra::Form::Product: {
            if (!v.is_array()) fail_at(v, "product element must be an array of components");
            if (v.items.size() != M->factors().size())
                fail_at(v, "expected " + std::to_string(M->factors().size()) + " components, got " +
                               std::to_string(v.items.size()));
            std::vector<PmvElement> t;
            t.reserve(v.items.size());
            for (std::size_t i = 0; i < v.items.size(); i++)
                t.push_back(parse_element_impl(M->factors()[i], v.items[i]));
            return PmvElement(std::move(t));
        }
        case Algebra::Form::Interval: {
            PmvElement e = parse_element_impl(M->interval_base(), v);
            if (!M->contains(e)) fail_at(v, "element outside the interval bound");
            return e;
        }
    }
    fail_at(v, "bad algebra form");
}

Builder build_spec(const JsonValue& v) {
    if (!v.is_object()) fail_at(v, "algebra spec must be an object");
    const JsonValue& kind = v.at("kind");
    if (!kind.is_string()) fail_at(kind, "kind must be a string");
    Builder b;
    b.canon = JsonValue::object();
    b.canon.add("kind", JsonValue::string(kind.str));

    if (kind.str == "mv_chain") {
        long n = get_long(v.at("n"), "n");
        if (n < 0) fail_at(v.at("n"), "n must be >= 0");
        b.canon.add("n", JsonValue::number(n));
        b.algebra = mv_chain(n);
        return b;
    }
    if (kind.str == "boolean") {
        long dims = get_long(v.at("dims"), "dims");
        if (dims < 1) fail_at(v.at("dims"), "dims must be >= 1");
        if (dims > 16) fail_at(v.at("dims"), "dims must be <= 16");
        b.canon.add("dims", JsonValue::number(dims));
        b.algebra = boolean_cube(static_cast<int>(dims));
        return b;
    }
    if (kind.str == "gamma") {
        JsonValue gcanon;
        DescriptorPtr desc = parse_group(v.at("group"), gcanon);
        const JsonValue& unit_v = v.at("unit");
        std::vector<Rational> coords = parse_coords(unit_v, desc->dims());
        UnitalGroup G{desc, GroupElement{}};
        try {
            G = UnitalGroup::make(desc, g_make(desc, coords));
        } catch (const Error& e) {
            fail_at(unit_v, e.what());
        }
        b.canon.add("group", std::move(gcanon));
        JsonValue unit_canon;
        if (desc->dims() == 1) {
            unit_canon = scalar_to_json(coords[0]);
        } else {
            unit_canon = JsonValue::array();
            for (const auto& c : coords) unit_canon.push(scalar_to_json(c));
        }
        b.canon.add("unit", std::move(unit_canon));
        b.algebra = gamma_construct(G);
        return b;
    }
    if (kind.str == "product") {
        const JsonValue& fv = v.at("factors");
        if (!fv.is_array() || fv.items.empty())
            fail_at(fv, "factors must be a non-empty array");
        std::vector<AlgebraPtr> parts;
        JsonValue fcanon = JsonValue::array();
        for (const auto& item : fv.items) {
            Builder sub = build_spec(item);
            parts.push_back(sub.algebra);
            fcanon.push(std::move(sub.canon));
        }
        b.canon.add("factors", std::move(fcanon));
        b.algebra = product_algebra(std::move(parts));
        return b;
    }
    if (kind.str == "interval") {
        Builder base = build_spec(v.at("base"));
        PmvElement at = parse_element_impl(base.algebra, v.at("at"));
        b.canon.add("base", std::move(base.canon));
        b.canon.add("at", element_to_json(base.algebra, at));
        b.algebra = interval_algebra(base.algebra, at);
        return b;
    }
    if (kind.str == "quotient") {
        Builder base = build_spec(v.at("base"));
        const JsonValue& iv = v.at("ideal");
        if (!iv.is_array()) fail_at(iv, "ideal must be an array of elements");
        std::vector<PmvElement> members;
        JsonValue icanon = JsonValue::array();
        for (const auto& item : iv.items) {
            PmvElement e = parse_element_impl(base.algebra, item);
            members.push_back(e);
            icanon.push(element_to_json(base.algebra, e));
        }
        b.canon.add("base", std::move(base.canon));
        b.canon.add("ideal", std::move(icanon));
        try {
            IdealSet I = ideal_from_elements(base.algebra, members);
            b.algebra = quotient_algebra(base.algebra, I);
        } catch (const Error& e) {
            fail_at(iv, e.what());
        }
        return b;
    }
    fail_at(kind, "unknown kind \"" + kind.str + "\"");
}

} // namespace

ParsedSpec parse_spec(std::string_view text) {
    JsonValue root = json_parse(text);
    Builder b = build_spec(root);
    return ParsedSpec{std::move(b.algebra), std::move(b.canon)};
}

std::string print_spec(const ParsedSpec& spec) { return spec.canonical.dump(); }

PmvElement parse_element(const AlgebraPtr& M, const JsonValue& v) {
    return parse_element_impl(M, v);
}

JsonValue element_to_json(const AlgebraPtr& M, const PmvElement& x) {
    switch (M->form()) {
        case Algebra::Form::Table:
            return JsonValue::number(static_cast<long long>(x.index()));
        case Algebra::Form::Gamma: {
            const auto& coords = x.group().coords;
            if (coords.size() == 1) return scalar_to_json(coords[0]);
            JsonValue arr = JsonValue::array();
            for (const auto& c : coords) arr.push(scalar_to_json(c));
            return arr;
        }
        case Algebra::Form::Product: {
            JsonValue arr = JsonValue::array();
            for (std::size_t i = 0; i < M->factors().size(); i++)
                arr.push(element_to_json(M->factors()[i], x.tuple()[i]));
            return arr;
        }
        case Algebra::Form::Interval:
            return element_to_json(M->interval_base(), x);
    }
    throw Error("bad algebra form");
}

} // namespace pmv
