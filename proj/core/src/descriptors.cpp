#include "moncoh/descriptors.hpp"

#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace moncoh {

using nlohmann::json;

namespace {

json load_json(const std::string& text, const std::string& what) {
    const std::string body = !text.empty() && text.front() == '@' ? read_text_file(text.substr(1)) : text;
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw DescriptorError(what, std::string("invalid JSON: ") + e.what());
    }
}

const json& field(const json& j, const std::string& key, const std::string& at) {
    if (!j.is_object()) throw DescriptorError(at.empty() ? "/" : at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw DescriptorError(at + "/" + key, "missing field");
    return *it;
}

long integer(const json& j, const std::string& at) {
    if (!j.is_number_integer()) throw DescriptorError(at, "expected an integer");
    return j.get<long>();
}

Integer big_integer(const json& j, const std::string& at) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) == 0) return v;
    }
    throw DescriptorError(at, "expected an integer");
}

std::vector<Element> parse_key(const std::string& key, std::size_t arity, const std::string& at) {
    std::vector<Element> out;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(part, &used);
            if (used != part.size()) throw std::invalid_argument("trailing");
            out.push_back(v);
        } catch (const std::exception&) {
            throw DescriptorError(at, "malformed key '" + key + "'");
        }
    }
    if (out.size() != arity)
        throw DescriptorError(at, "key '" + key + "' needs " + std::to_string(arity) + " elements");
    return out;
}

FGAbelianGroup group_from_json(const json& j, const std::string& at) {
    AbGroupInvariants inv;
    const long r = integer(field(j, "free_rank", at), at + "/free_rank");
    if (r < 0) throw DescriptorError(at + "/free_rank", "must be nonnegative");
    inv.free_rank = static_cast<std::size_t>(r);
    const json& t = field(j, "torsion", at);
    if (!t.is_array()) throw DescriptorError(at + "/torsion", "expected an array");
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string p = at + "/torsion/" + std::to_string(i);
        Integer d = big_integer(t[i], p);
        if (d < 2) throw DescriptorError(p, "torsion orders must be at least 2");
        inv.torsion.push_back(d);
    }
    return FGAbelianGroup::from_invariants(inv);
}

IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& at) {
    if (!j.is_array() || j.size() != rows)
        throw DescriptorError(at, "expected " + std::to_string(rows) + " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string p = at + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != cols)
            throw DescriptorError(p, "expected " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = big_integer(j[i][k], p + "/" + std::to_string(k));
    }
    return m;
}

std::shared_ptr<const Monoid> monoid_from_json(const json& j) {
    const json& kind = field(j, "kind", "");
    if (!kind.is_string()) throw DescriptorError("/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "infinite-cyclic") return make_infinite_cyclic();
    if (k == "cyclic") {
        const long m = integer(field(j, "index", ""), "/index");
        const long q = integer(field(j, "period", ""), "/period");
        if (m < 0) throw DescriptorError("/index", "must be nonnegative");
        if (q < 1) throw DescriptorError("/period", "must be positive");
        return make_cyclic(static_cast<int>(m), static_cast<int>(q));
    }
    if (k == "table") {
        const long n = integer(field(j, "size", ""), "/size");
        if (n < 1) throw DescriptorError("/size", "must be positive");
        const long e = integer(field(j, "identity", ""), "/identity");
        const json& t = field(j, "table", "");
        if (!t.is_array() || static_cast<long>(t.size()) != n)
            throw DescriptorError("/table", "expected " + std::to_string(n) + " rows");
        std::vector<std::vector<Element>> table;
        for (long i = 0; i < n; ++i) {
            const std::string p = "/table/" + std::to_string(i);
            const json& row = t[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<long>(row.size()) != n)
                throw DescriptorError(p, "expected " + std::to_string(n) + " entries");
            std::vector<Element> r;
            for (long c = 0; c < n; ++c) r.push_back(integer(row[static_cast<std::size_t>(c)], p + "/" + std::to_string(c)));
            table.push_back(std::move(r));
        }
        try {
            return std::make_shared<const FiniteCommutativeMonoid>(std::move(table), e, "table");
        } catch (const MonoidLawError& err) {
            std::string w;
            for (Element x : err.witness()) w += (w.empty() ? "" : ",") + std::to_string(x);
            throw DescriptorError("/table", err.law() + " fails at (" + w + ")");
        }
    }
    throw DescriptorError("/kind", "unknown monoid kind '" + k + "'");
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DescriptorError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::shared_ptr<const Monoid> parse_monoid(const std::string& text) {
    if (text == "infinite-cyclic") return make_infinite_cyclic();
    static const std::regex cyclic(R"(cyclic:(\d+),(\d+))");
    std::smatch mt;
    if (std::regex_match(text, mt, cyclic)) {
        const int m = std::stoi(mt[1]);
        const int q = std::stoi(mt[2]);
        if (q < 1) throw DescriptorError(text, "period must be positive");
        return make_cyclic(m, q);
    }
    if (!text.empty() && (text.front() == '@' || text.front() == '{')) return monoid_from_json(load_json(text, "monoid"));
    throw DescriptorError(text, "expected cyclic:m,q, infinite-cyclic, @file.json or a JSON object");
}

FGAbelianGroup parse_group(const std::string& text) {
    static const std::regex free_part(R"(Z(\^(\d+))?)");
    static const std::regex torsion_part(R"(Z/(\d+))");
    AbGroupInvariants inv;
    std::vector<Integer> orders;
    std::stringstream ss(text);
    std::string part;
    bool any = false;
    while (std::getline(ss, part, '+')) {
        any = true;
        std::smatch mt;
        if (std::regex_match(part, mt, torsion_part)) {
            Integer n(mt[1].str());
            if (n < 1) throw DescriptorError(text, "Z/0 is not allowed; write Z");
            orders.push_back(n);
        } else if (std::regex_match(part, mt, free_part)) {
            const long r = mt[2].matched ? std::stol(mt[2]) : 1;
            for (long i = 0; i < r; ++i) orders.push_back(0);
        } else {
            throw DescriptorError(text, "cannot parse summand '" + part + "'");
        }
    }
    if (!any) throw DescriptorError(text, "empty group");
    return FGAbelianGroup::from_invariants(canonical_invariants(orders));
}

HModule parse_coefficients(const std::string& text, std::shared_ptr<const Monoid> monoid) {
    if (text.empty() || (text.front() != '@' && text.front() != '{')) return HModule::constant(monoid, parse_group(text));
    const json j = load_json(text, "coeff");
    const json& kind = field(j, "kind", "");
    if (!kind.is_string()) throw DescriptorError("/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "constant") return HModule::constant(monoid, group_from_json(field(j, "group", ""), "/group"));
    if (k != "tabular") throw DescriptorError("/kind", "unknown coefficient kind '" + k + "'");

    std::map<Element, FGAbelianGroup> groups;
    const json& gj = field(j, "groups", "");
    if (!gj.is_object()) throw DescriptorError("/groups", "expected an object");
    for (const auto& [key, value] : gj.items()) {
        const std::string at = "/groups/" + key;
        const Element x = parse_key(key, 1, at).front();
        if (!monoid->contains(x)) throw DescriptorError(at, "not a monoid element");
        groups.emplace(x, group_from_json(value, at));
    }
    std::map<std::pair<Element, Element>, IntMatrix> actions;
    if (j.contains("actions")) {
        const json& aj = j["actions"];
        if (!aj.is_object()) throw DescriptorError("/actions", "expected an object");
        for (const auto& [key, value] : aj.items()) {
            const std::string at = "/actions/" + key;
            const auto t = parse_key(key, 2, at);
            if (!monoid->contains(t[0]) || !monoid->contains(t[1])) throw DescriptorError(at, "not a monoid element");
            const Element xy = monoid->multiply(t[0], t[1]);
            auto src = groups.find(t[0]);
            auto tgt = groups.find(xy);
            if (src == groups.end() || tgt == groups.end()) throw DescriptorError(at, "group missing for source or target");
            actions.emplace(std::pair{t[0], t[1]},
                            matrix_from_json(value, tgt->second.generators(), src->second.generators(), at));
        }
    }
    try {
        if (auto fin = std::dynamic_pointer_cast<const FiniteCommutativeMonoid>(monoid)) {
            std::vector<FGAbelianGroup> list;
            for (Element x = 0; x < static_cast<Element>(*fin->size()); ++x) {
                auto it = groups.find(x);
                if (it == groups.end()) throw DescriptorError("/groups/" + std::to_string(x), "missing field");
                list.push_back(it->second);
            }
            HModule a = HModule::tabular(fin, std::move(list), std::move(actions));
            if (auto v = validate_module(a)) throw DescriptorError("/actions", v->message);
            return a;
        }
        return HModule::sampled(monoid, std::move(groups), std::move(actions));
    } catch (const DescriptorError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw DescriptorError("/actions", e.what());
    }
}

FiveCochain parse_cocycle(const std::string& text) {
    const json j = load_json(text, "cocycle");
    if (!j.is_object()) throw DescriptorError("/", "expected an object");
    FiveCochain c;
    auto read = [&](const char* name, std::size_t arity, ValueTable& out) {
        if (!j.contains(name)) return;
        const json& t = j[name];
        const std::string at = std::string("/") + name;
        if (!t.is_object()) throw DescriptorError(at, "expected an object");
        for (const auto& [key, value] : t.items()) {
            const std::string p = at + "/" + key;
            auto tuple = parse_key(key, arity, p);
            if (!value.is_array()) throw DescriptorError(p, "expected an array of coefficients");
            std::vector<Integer> v;
            for (std::size_t i = 0; i < value.size(); ++i) v.push_back(big_integer(value[i], p + "/" + std::to_string(i)));
            out.emplace(std::move(tuple), std::move(v));
        }
    };
    read("g", 3, c.g);
    read("mu", 2, c.mu);
    for (const auto& [key, value] : j.items())
        if (key != "g" && key != "mu") throw DescriptorError("/" + key, "unknown field");
    return c;
}

}  // namespace moncoh
