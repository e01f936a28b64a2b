#include "grsets/json_io.hpp"

#include <limits>
#include <sstream>

namespace grsets::io {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw parse_error(std::string("missing field: ") + key);
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        throw parse_error(std::string("field must be an integer: ") + key);
    return v.get<int>();
}

std::vector<int> int_vector(const json& v, const char* what) {
    if (!v.is_array())
        throw parse_error(std::string("expected an integer array: ") + what);
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number_integer())
            throw parse_error(std::string("expected an integer array: ") + what);
        out.push_back(x.get<int>());
    }
    return out;
}

Int int_from_json(const json& v) {
    if (v.is_number_integer())
        return Int(v.get<long long>());
    if (v.is_number_unsigned())
        return Int(v.get<unsigned long long>());
    if (v.is_string())
        return Int(v.get<std::string>());
    throw parse_error("coefficient must be an integer or a decimal string");
}

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi)
        return json(static_cast<long long>(v));
    return json(v.str());
}

} // namespace

GroupPtr parse_group(const json& j) {
    if (!j.is_object())
        throw parse_error("group descriptor must be an object");
    if (j.contains("cayley")) {
        const json& t = j.at("cayley");
        if (!t.is_array())
            throw parse_error("cayley must be an array of rows");
        std::vector<std::vector<Elem>> table;
        table.reserve(t.size());
        for (const auto& row : t)
            table.push_back(int_vector(row, "cayley row"));
        return make_group(std::move(table));
    }
    if (j.contains("named")) {
        const json& nm = j.at("named");
        const json& kind = field(nm, "kind");
        if (!kind.is_string())
            throw parse_error("named group kind must be a string");
        const std::string k = kind.get<std::string>();
        const int m = int_field(nm, "m");
        if (k == "cyclic")
            return make_named_group(Group::Kind::cyclic, m);
        if (k == "dihedral")
            return make_named_group(Group::Kind::dihedral, m);
        throw unsupported_kind("unknown named group kind: " + k);
    }
    throw parse_error("group descriptor needs \"cayley\" or \"named\"");
}

json group_to_json(const Group& g) {
    return json{{"cayley", g.cayley()}};
}

Orbit parse_orbit(const json& j, const GroupPtr& group, int r) {
    Subgroup stab(group, int_vector(field(j, "stabilizer"), "stabilizer"));

    const json& chi_j = field(j, "character");
    if (!chi_j.is_object())
        throw parse_error("character must be an object of element -> residue");
    if (chi_j.size() != stab.elements().size())
        throw parse_error("character must list a value for each stabilizer element");
    std::vector<int> values;
    values.reserve(stab.elements().size());
    for (Elem e : stab.elements()) {
        const std::string key = std::to_string(e);
        if (!chi_j.contains(key))
            throw parse_error("character misses stabilizer element " + key);
        if (!chi_j.at(key).is_number_integer())
            throw parse_error("character values must be integers");
        values.push_back(chi_j.at(key).get<int>());
    }
    Character chi(stab, std::move(values));

    const json& pts_j = field(j, "points");
    if (!pts_j.is_array())
        throw parse_error("points must be an array");
    std::vector<std::pair<Elem, Weight>> pts;
    pts.reserve(pts_j.size());
    for (const auto& p : pts_j) {
        const int rep = int_field(p, "rep");
        pts.emplace_back(rep, int_vector(field(p, "weight"), "weight"));
    }
    return Orbit::make(group, stab, chi, pts, r);
}

json orbit_to_json(const Orbit& o) {
    json chi = json::object();
    const auto& elems = o.stabilizer().elements();
    for (size_t i = 0; i < elems.size(); ++i)
        chi[std::to_string(elems[i])] = o.base_character().values()[i];
    json pts = json::array();
    for (int i = 0; i < o.size(); ++i)
        pts.push_back(json{{"rep", o.transversal()[static_cast<size_t>(i)]},
                           {"weight", o.weight(i)}});
    return json{{"stabilizer", elems}, {"character", chi}, {"points", pts}};
}

namespace {

Context parse_context(const json& j) {
    Context ctx;
    ctx.group = parse_group(field(j, "group"));
    ctx.r = int_field(j, "r");
    ctx.bound = int_vector(field(j, "bound"), "bound");
    return ctx;
}

} // namespace

RingElement parse_ring_element(const json& j) {
    Context ctx = parse_context(j);
    RingElement acc = RingElement::zero(ctx);
    const json& terms = field(j, "terms");
    if (!terms.is_array())
        throw parse_error("terms must be an array");
    for (const auto& t : terms) {
        Int coeff = int_from_json(field(t, "coeff"));
        Orbit orbit = parse_orbit(field(t, "orbit"), ctx.group, ctx.r);
        acc = acc.add(RingElement::from_orbit(orbit, ctx).scaled(coeff));
    }
    return acc;
}

json ring_element_to_json(const RingElement& e) {
    json terms = json::array();
    for (const auto& [orbit, coeff] : e.terms())
        terms.push_back(json{{"coeff", int_to_json(coeff)}, {"orbit", orbit_to_json(orbit)}});
    return json{{"group", group_to_json(*e.context().group)},
                {"r", e.context().r},
                {"bound", e.context().bound},
                {"terms", terms}};
}

json series_to_json(const MultiIndexSeries& s) {
    json coeffs = json::array();
    for (const auto& [index, c] : s.coefficients())
        coeffs.push_back(json{{"index", index}, {"coeff", int_to_json(c)}});
    return json{{"r", s.r()}, {"bound", s.bound()}, {"coefficients", coeffs}};
}

json series_to_json(const EquivariantSeries& s) {
    json coeffs = json::array();
    for (const auto& [index, cell] : s.coefficients()) {
        json terms = json::array();
        for (const auto& [chi, c] : cell) {
            json chi_j = json::object();
            const auto& elems = chi.domain().elements();
            for (size_t i = 0; i < elems.size(); ++i)
                chi_j[std::to_string(elems[i])] = chi.values()[i];
            terms.push_back(json{{"coeff", int_to_json(c)}, {"character", chi_j}});
        }
        coeffs.push_back(json{{"index", index}, {"terms", terms}});
    }
    return json{{"group", group_to_json(*s.group())},
                {"r", s.r()},
                {"bound", s.bound()},
                {"coefficients", coeffs}};
}

ResolutionSpec parse_spec(const json& j) {
    ResolutionSpec spec;
    if (j.contains("name")) {
        if (!j.at("name").is_string())
            throw parse_error("spec name must be a string");
        spec.name = j.at("name").get<std::string>();
    }
    spec.group = parse_group(field(j, "group"));
    spec.r = int_field(j, "r");
    spec.bound = int_vector(field(j, "bound"), "bound");
    const json& kind = field(j, "kind");
    if (!kind.is_string())
        throw parse_error("kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "divisorial")
        spec.kind = FiltrationKind::divisorial;
    else if (k == "curve")
        spec.kind = FiltrationKind::curve;
    else
        throw parse_error("kind must be \"divisorial\" or \"curve\"");
    const json& strata = field(j, "strata");
    if (!strata.is_array())
        throw parse_error("strata must be an array");
    for (const auto& s : strata) {
        const json& name = field(s, "name");
        if (!name.is_string())
            throw parse_error("stratum name must be a string");
        const json& euler = field(s, "euler");
        if (!euler.is_number_integer())
            throw parse_error("euler must be an integer");
        Orbit orbit = parse_orbit(field(s, "orbit"), spec.group, spec.r);
        spec.strata.push_back({name.get<std::string>(), euler.get<long long>(), orbit});
    }
    validate_spec(spec);
    return spec;
}

json spec_to_json(const ResolutionSpec& s) {
    json strata = json::array();
    for (const Stratum& st : s.strata)
        strata.push_back(json{{"name", st.name},
                              {"euler", st.euler},
                              {"orbit", orbit_to_json(st.curvette)}});
    return json{{"group", group_to_json(*s.group)},
                {"r", s.r},
                {"bound", s.bound},
                {"kind", s.kind == FiltrationKind::divisorial ? "divisorial" : "curve"},
                {"strata", strata}};
}

namespace {

RingElement eval_node(const json& node, const Context& ctx) {
    const json& op_j = field(node, "op");
    if (!op_j.is_string())
        throw parse_error("expression op must be a string");
    const std::string op = op_j.get<std::string>();

    if (op == "zero")
        return RingElement::zero(ctx);
    if (op == "one")
        return RingElement::one(ctx);
    if (op == "int")
        return RingElement::one(ctx).scaled(int_from_json(field(node, "value")));
    if (op == "orbit")
        return RingElement::from_orbit(parse_orbit(field(node, "orbit"), ctx.group, ctx.r), ctx);
    if (op == "neg")
        return eval_node(field(node, "arg"), ctx).neg();
    if (op == "add" || op == "mul") {
        const json& args = field(node, "args");
        if (!args.is_array() || args.empty())
            throw parse_error("args must be a nonempty array");
        RingElement acc = eval_node(args.front(), ctx);
        for (size_t i = 1; i < args.size(); ++i) {
            RingElement next = eval_node(args[i], ctx);
            acc = (op == "add") ? acc.add(next) : acc.mul(next);
        }
        return acc;
    }
    if (op == "sub") {
        const json& args = field(node, "args");
        if (!args.is_array() || args.size() != 2)
            throw parse_error("sub takes exactly two args");
        return eval_node(args[0], ctx).sub(eval_node(args[1], ctx));
    }
    if (op == "pow") {
        const int k = int_field(node, "exp");
        if (k < 0)
            throw parse_error("pow exponent must be nonnegative");
        return eval_node(field(node, "base"), ctx).pow(k);
    }
    if (op == "geom") {
        const json& euler = field(node, "euler");
        if (!euler.is_number_integer())
            throw parse_error("euler must be an integer");
        return geometric_inverse_power(eval_node(field(node, "arg"), ctx),
                                       euler.get<long long>());
    }
    throw parse_error("unknown expression op: " + op);
}

} // namespace

RingElement eval_expression(const json& j) {
    Context ctx = parse_context(j);
    return eval_node(field(j, "expr"), ctx);
}

std::string render_orbit(const Orbit& o) {
    std::ostringstream os;
    os << "{stab=[";
    const auto& elems = o.stabilizer().elements();
    for (size_t i = 0; i < elems.size(); ++i)
        os << (i ? "," : "") << elems[i];
    os << "]; chi=[";
    for (size_t i = 0; i < o.base_character().values().size(); ++i)
        os << (i ? "," : "") << o.base_character().values()[i];
    os << "]; pts=[";
    for (int i = 0; i < o.size(); ++i) {
        if (i)
            os << ", ";
        os << o.transversal()[static_cast<size_t>(i)] << ":(";
        const Weight& w = o.weight(i);
        for (size_t jx = 0; jx < w.size(); ++jx)
            os << (jx ? "," : "") << w[jx];
        os << ")";
    }
    os << "]}";
    return os.str();
}

std::string render_ring_element(const RingElement& e) {
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [orbit, coeff] : e.terms()) {
        const bool negative = coeff < 0;
        Int mag = negative ? Int(-coeff) : coeff;
        if (first) {
            if (negative)
                os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (orbit.is_unit())
            os << mag.str();
        else if (mag == 1)
            os << render_orbit(orbit);
        else
            os << mag.str() << "*" << render_orbit(orbit);
    }
    return os.str();
}

} // namespace grsets::io
