#include "donsw/json_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace donsw {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json class_to_json(const Class& k) {
    ordered_json arr = ordered_json::array();
    for (const auto& v : k.c)
        arr.push_back(v.str());
    return arr;
}

Int int_from_json(const ordered_json& v) {
    if (v.is_number_integer())
        return Int(v.get<long long>());
    if (v.is_string())
        return Int(v.get<std::string>());
    throw input_error("expected an integer");
}

Class class_from_json(const ordered_json& arr, std::size_t rank) {
    if (!arr.is_array() || arr.size() != rank)
        throw input_error("class vector has wrong length");
    Class k;
    for (const auto& v : arr)
        k.c.push_back(int_from_json(v));
    return k;
}

}  // namespace

std::string lattice_to_json(const Lattice& l) {
    ordered_json j;
    j["rank"] = l.rank();
    ordered_json gram = ordered_json::array();
    for (const auto& row : l.gram()) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row)
            r.push_back(v.str());
        gram.push_back(std::move(r));
    }
    j["gram"] = std::move(gram);
    return j.dump(2) + "\n";
}

std::string manifold_to_json(const FourManifold& x, const std::map<std::string, Class>& names) {
    ordered_json j;
    j["lattice"]["rank"] = x.lattice().rank();
    ordered_json gram = ordered_json::array();
    for (const auto& row : x.lattice().gram()) {
        ordered_json r = ordered_json::array();
        for (const auto& v : row)
            r.push_back(v.str());
        gram.push_back(std::move(r));
    }
    j["lattice"]["gram"] = std::move(gram);
    ordered_json sw = ordered_json::array();
    for (const auto& [k, v] : x.sw().entries()) {
        ordered_json entry;
        entry["class"] = class_to_json(k);
        entry["value"] = v.str();
        sw.push_back(std::move(entry));
    }
    j["sw"] = std::move(sw);
    if (!names.empty()) {
        ordered_json nm;
        for (const auto& [name, k] : names)
            nm[name] = class_to_json(k);
        j["names"] = std::move(nm);
    }
    return j.dump(2) + "\n";
}

ManifoldFile manifold_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("manifold JSON does not parse: ") + e.what());
    }
    try {
        if (!j.contains("lattice") || !j["lattice"].contains("gram"))
            throw input_error("manifold JSON is missing the lattice gram matrix");
        const auto& gram_json = j["lattice"]["gram"];
        if (!gram_json.is_array() || gram_json.empty())
            throw input_error("gram matrix must be a nonempty array of rows");
        std::vector<std::vector<Int>> gram;
        for (const auto& row : gram_json) {
            if (!row.is_array())
                throw input_error("gram matrix rows must be arrays");
            std::vector<Int> r;
            for (const auto& v : row)
                r.push_back(int_from_json(v));
            gram.push_back(std::move(r));
        }
        if (j["lattice"].contains("rank") && j["lattice"]["rank"].get<std::size_t>() != gram.size())
            throw input_error("declared rank disagrees with the gram matrix");
        Lattice lat(std::move(gram));
        const std::size_t rank = lat.rank();

        std::map<Class, Int> entries;
        if (j.contains("sw")) {
            for (const auto& e : j["sw"]) {
                Class k = class_from_json(e.at("class"), rank);
                Int v = int_from_json(e.at("value"));
                if (entries.count(k))
                    throw input_error("duplicate SW table entry");
                entries.emplace(std::move(k), std::move(v));
            }
        }
        ManifoldFile out{FourManifold(std::move(lat), SWTable(std::move(entries))), {}};
        if (j.contains("names"))
            for (const auto& [name, arr] : j["names"].items())
                out.names.emplace(name, class_from_json(arr, rank));
        return out;
    } catch (const input_error&) {
        throw;
    } catch (const std::exception& e) {
        // invariant violations and structural issues both count as bad input here
        throw input_error(std::string("manifold JSON rejected: ") + e.what());
    }
}

namespace {

// tiny recursive-descent parser for class expressions
struct SpecParser {
    const std::string& s;
    std::size_t pos = 0;
    std::size_t rank;
    const std::map<std::string, Class>& names;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int digits() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw input_error("class spec: expected an integer at '" + s.substr(start) + "'");
        return Int(s.substr(start, pos - start));
    }

    Class named() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        const std::string name = s.substr(start, pos - start);
        auto it = names.find(name);
        if (it == names.end())
            throw input_error("class spec: unknown class name '" + name + "'");
        return it->second;
    }

    Class factor() {
        skip();
        if (eat('(')) {
            Class inner = expr();
            if (!eat(')'))
                throw input_error("class spec: missing ')'");
            return inner;
        }
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            return named();
        throw input_error("class spec: expected a name or parenthesized expression");
    }

    Class term() {
        skip();
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-')
                sign = -sign;
            ++pos;
            skip();
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            const Int coef = Int(sign) * digits();
            skip();
            eat('*');  // optional between a coefficient and its factor
            return coef * factor();
        }
        Class f = factor();
        return sign < 0 ? -f : f;
    }

    Class expr() {
        Class acc = term();
        for (;;) {
            skip();
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }
};

std::vector<std::string> split_commas(std::string text) {
    // strip optional brackets
    auto l = text.find_first_not_of(" \t");
    auto r = text.find_last_not_of(" \t");
    if (l == std::string::npos)
        throw input_error("empty vector literal");
    text = text.substr(l, r - l + 1);
    if (!text.empty() && text.front() == '[' && text.back() == ']')
        text = text.substr(1, text.size() - 2);
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        auto comma = text.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

}  // namespace

Class parse_class_spec(const std::string& spec, std::size_t rank, const std::map<std::string, Class>& names) {
    const bool has_alpha = std::any_of(spec.begin(), spec.end(), [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    });
    if (has_alpha) {
        SpecParser p{spec, 0, rank, names};
        Class k = p.expr();
        p.skip();
        if (p.pos != spec.size())
            throw input_error("class spec: trailing garbage at '" + spec.substr(p.pos) + "'");
        if (k.rank() != rank)
            throw input_error("class spec: named class has wrong rank");
        return k;
    }
    Class k;
    for (const auto& part : split_commas(spec)) {
        try {
            k.c.push_back(Int(part));
        } catch (const std::exception&) {
            throw input_error("class spec: malformed integer '" + part + "'");
        }
    }
    if (k.rank() != rank)
        throw input_error("class spec: expected " + std::to_string(rank) + " coordinates, got " + std::to_string(k.rank()));
    return k;
}

HClass parse_h_vector(const std::string& text, std::size_t rank) {
    HClass h;
    for (const auto& part : split_commas(text))
        h.c.push_back(parse_rat(part));
    if (h.rank() != rank)
        throw input_error("h vector: expected " + std::to_string(rank) + " coordinates, got " + std::to_string(h.rank()));
    return h;
}

std::string compute_report_to_json(const ComputeReport& r) {
    ordered_json j;
    ordered_json query;
    query["w"] = class_to_json(r.query.w);
    if (r.lambda)
        query["lambda"] = class_to_json(*r.lambda);
    query["delta"] = r.query.delta;
    query["m"] = r.query.m;
    ordered_json h = ordered_json::array();
    for (const auto& v : r.query.h.c)
        h.push_back(rat_string(v));
    query["h"] = std::move(h);
    j["query"] = std::move(query);
    if (r.witten)
        j["witten"] = rat_string(*r.witten);
    if (!r.cobordism.empty()) {
        ordered_json arr = ordered_json::array();
        for (const auto& run : r.cobordism) {
            ordered_json e;
            e["seed"] = run.seed;
            e["value"] = rat_string(run.value);
            arr.push_back(std::move(e));
        }
        j["cobordism"] = std::move(arr);
    }
    if (r.equal)
        j["equal"] = *r.equal;
    if (r.seed_independent)
        j["seed_independent"] = *r.seed_independent;
    if (r.scst)
        j["scst"] = *r.scst;
    return j.dump(2) + "\n";
}

}  // namespace donsw
