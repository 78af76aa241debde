#include "hulltop/structure_file.hpp"

#include <fstream>
#include <sstream>

#include "hulltop/error.hpp"

namespace hulltop {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

// Splits "{0 1 7} {0}" into brace groups.
std::vector<std::string> split_braced(const std::string& s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        if (s[i] != '{') throw Error(Err::ParseError, "expected '{' in: " + s);
        auto close = s.find('}', i);
        if (close == std::string::npos) throw Error(Err::ParseError, "missing '}' in: " + s);
        out.push_back(s.substr(i, close - i + 1));
        i = close + 1;
    }
    return out;
}

std::uint32_t parse_u32(const std::string& s) {
    try {
        unsigned long v = std::stoul(s);
        if (v > 0xffffffffUL) throw Error(Err::ParseError, "number out of range: " + s);
        return static_cast<std::uint32_t>(v);
    } catch (const std::logic_error&) {
        throw Error(Err::ParseError, "expected a number, got '" + s + "'");
    }
}

struct Section {
    std::string type;
    std::string name;
    // Repeated keys preserved in order.
    std::vector<std::pair<std::string, std::string>> entries;

    std::optional<std::string> get(const std::string& key) const {
        std::optional<std::string> out;
        for (const auto& [k, v] : entries)
            if (k == key) {
                if (out) throw Error(Err::ParseError, "duplicate key '" + key + "' in [" + type + " " + name + "]");
                out = v;
            }
        return out;
    }
    std::string require(const std::string& key) const {
        auto v = get(key);
        if (!v) throw Error(Err::ParseError, "missing key '" + key + "' in [" + type + " " + name + "]");
        return *v;
    }
    std::vector<std::string> all(const std::string& key) const {
        std::vector<std::string> out;
        for (const auto& [k, v] : entries)
            if (k == key) out.push_back(v);
        return out;
    }
    void expect_keys(std::initializer_list<const char*> allowed) const {
        for (const auto& [k, v] : entries) {
            bool ok = false;
            for (auto a : allowed) ok = ok || k == a;
            if (!ok)
                throw Error(Err::ParseError, "unknown key '" + k + "' in [" + type + " " + name + "]");
        }
    }
};

MonoidPtr build_monoid(const Section& sec) {
    sec.expect_keys({"kind", "size", "zero", "row", "inverse", "le"});
    auto kind_toks = split_ws(sec.require("kind"));
    if (kind_toks.empty()) throw Error(Err::ParseError, "empty monoid kind");
    const std::string& kind = kind_toks[0];
    auto arg = [&](std::size_t i) {
        if (i >= kind_toks.size())
            throw Error(Err::ParseError, "monoid kind " + kind + " needs more arguments");
        return parse_u32(kind_toks[i]);
    };
    if (kind == "cyclic") return make_cyclic(arg(1));
    if (kind == "boolean_sym_diff") return make_boolean_sym_diff(arg(1));
    if (kind == "boolean_join") return make_boolean_join(arg(1));
    if (kind == "saturating_cube") return make_saturating_cube(arg(1), arg(2));
    if (kind != "explicit") throw Error(Err::ParseError, "unknown monoid kind: " + kind);

    std::uint32_t size = parse_u32(sec.require("size"));
    std::uint32_t zero = parse_u32(sec.require("zero"));
    std::vector<std::uint16_t> op;
    for (const auto& row : sec.all("row")) {
        auto toks = split_ws(row);
        if (toks.size() != size) throw Error(Err::ParseError, "row arity mismatch in monoid " + sec.name);
        for (const auto& t : toks) op.push_back(static_cast<std::uint16_t>(parse_u32(t)));
    }
    std::optional<std::vector<std::uint32_t>> inverse;
    if (auto inv = sec.get("inverse")) {
        inverse.emplace();
        for (const auto& t : split_ws(*inv)) inverse->push_back(parse_u32(t));
    }
    std::optional<PartialOrder> order;
    auto les = sec.all("le");
    if (!les.empty()) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (const auto& le : les) {
            auto toks = split_ws(le);
            if (toks.size() != 2) throw Error(Err::ParseError, "le needs two elements");
            pairs.emplace_back(parse_u32(toks[0]), parse_u32(toks[1]));
        }
        order = PartialOrder::from_pairs(size, pairs);
    }
    return make_explicit(sec.name, size, zero, std::move(op), std::move(inverse), std::move(order));
}

} // namespace

std::string serialize_subset(const Subset& s) { return s.str(); }

Subset parse_subset_token(const std::string& token, std::uint32_t carrier) {
    std::string t = trim(token);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw Error(Err::ParseError, "expected a braced set, got '" + token + "'");
    Subset out(carrier);
    for (const auto& e : split_ws(t.substr(1, t.size() - 2))) {
        std::uint32_t v = parse_u32(e);
        if (v >= carrier) throw Error(Err::ParseError, "element " + e + " outside the carrier");
        out.set(v);
    }
    return out;
}

namespace {

MonoidPtr build_product(const Section& sec, const std::map<std::string, MonoidPtr>& monoids) {
    auto toks = split_ws(sec.require("kind"));
    if (toks.size() < 3)
        throw Error(Err::ParseError, "product needs at least two factor names");
    MonoidPtr acc;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        auto it = monoids.find(toks[i]);
        if (it == monoids.end())
            throw Error(Err::ParseError, "unknown monoid '" + toks[i] + "' in product");
        acc = acc ? make_product(acc, it->second) : it->second;
    }
    return acc;
}

} // namespace

StructureFile parse_structure_file(std::istream& is) {
    std::vector<Section> sections;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw Error(Err::ParseError, "line " + std::to_string(lineno) + ": malformed section header");
            auto toks = split_ws(line.substr(1, line.size() - 2));
            if (toks.empty() || toks.size() > 2)
                throw Error(Err::ParseError, "line " + std::to_string(lineno) + ": malformed section header");
            Section sec;
            sec.type = toks[0];
            sec.name = toks.size() == 2 ? toks[1] : "";
            if (sec.type != "witness" && sec.name.empty())
                throw Error(Err::ParseError, "line " + std::to_string(lineno) + ": section needs a name");
            sections.push_back(std::move(sec));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos || sections.empty())
            throw Error(Err::ParseError, "line " + std::to_string(lineno) + ": expected 'key = value'");
        sections.back().entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }

    StructureFile out;
    auto monoid_of = [&](const Section& sec) -> MonoidPtr {
        std::string name = sec.require("monoid");
        auto it = out.monoids.find(name);
        if (it == out.monoids.end())
            throw Error(Err::ParseError, "unknown monoid '" + name + "' in [" + sec.type + " " + sec.name + "]");
        return it->second;
    };

    for (const auto& sec : sections) {
        for (const auto& [t, n] : out.declared)
            if (t == sec.type && n == sec.name && sec.type != "witness")
                throw Error(Err::ParseError, "duplicate section [" + sec.type + " " + sec.name + "]");
        out.declared.emplace_back(sec.type, sec.name);

        if (sec.type == "monoid") {
            auto kind = split_ws(sec.require("kind"));
            if (!kind.empty() && kind[0] == "product")
                out.monoids.emplace(sec.name, build_product(sec, out.monoids));
            else
                out.monoids.emplace(sec.name, build_monoid(sec));
        } else if (sec.type == "hull") {
            sec.expect_keys({"monoid", "kind"});
            auto m = monoid_of(sec);
            auto h = make_builtin(sec.require("kind"), m);
            certify_one_algebraic(*h);
            hull_capabilities(m, *h);
            out.hulls.emplace(sec.name, std::move(h));
        } else if (sec.type == "filter") {
            sec.expect_keys({"monoid", "base"});
            auto m = monoid_of(sec);
            std::vector<Subset> base;
            for (const auto& tok : split_braced(sec.require("base")))
                base.push_back(parse_subset_token(tok, m->size()));
            out.filters.emplace(sec.name, ZeroFilter(m, std::move(base)));
        } else if (sec.type == "string") {
            sec.expect_keys({"monoid", "prefix", "tail", "hull"});
            auto m = monoid_of(sec);
            std::vector<Subset> prefix;
            for (const auto& tok : split_braced(sec.require("prefix")))
                prefix.push_back(parse_subset_token(tok, m->size()));
            Subset tail = parse_subset_token(sec.require("tail"), m->size());
            QString s(m, std::move(prefix), std::move(tail));
            if (auto hull_name = sec.get("hull")) {
                auto it = out.hulls.find(*hull_name);
                if (it == out.hulls.end())
                    throw Error(Err::ParseError, "unknown hull '" + *hull_name + "'");
                auto cert = validate_string(m, *it->second, s);
                if (!cert) throw Error(Err::InvalidString, sec.name + ": " + cert.witness);
                out.notes.push_back("string " + sec.name + " valid against hull " + *hull_name);
            }
            out.strings.emplace(sec.name, std::move(s));
        } else if (sec.type == "pnorm") {
            sec.expect_keys({"monoid", "values"});
            auto m = monoid_of(sec);
            std::vector<Dyadic> values;
            for (const auto& tok : split_ws(sec.require("values"))) values.push_back(Dyadic::parse(tok));
            out.pnorms.emplace(sec.name, PseudoNorm(m, std::move(values)));
        } else if (sec.type == "polytope") {
            sec.expect_keys({"dim", "vertex"});
            unsigned dim = parse_u32(sec.require("dim"));
            std::vector<RationalVector> verts;
            for (const auto& v : sec.all("vertex")) {
                RationalVector vec;
                for (const auto& t : split_ws(v)) vec.push_back(parse_rational(t));
                verts.push_back(std::move(vec));
            }
            out.polytopes.emplace(sec.name, RationalPolytope::make(dim, std::move(verts)));
        } else if (sec.type == "witness") {
            for (const auto& [k, v] : sec.entries) out.witness[k] = v;
        } else {
            throw Error(Err::ParseError, "unknown section type '" + sec.type + "'");
        }
    }
    return out;
}

StructureFile load_structure_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error(Err::ParseError, "cannot open " + path);
    return parse_structure_file(is);
}

void write_monoid_section(std::ostream& os, const std::string& name, const FiniteCommMonoid& m) {
    os << "[monoid " << name << "]\n";
    os << "kind = explicit\n";
    os << "size = " << m.size() << "\n";
    os << "zero = " << m.zero() << "\n";
    for (std::uint32_t a = 0; a < m.size(); ++a) {
        os << "row =";
        for (std::uint32_t b = 0; b < m.size(); ++b) os << ' ' << m.add(a, b);
        os << "\n";
    }
    if (m.is_group()) {
        os << "inverse =";
        for (std::uint32_t g = 0; g < m.size(); ++g) os << ' ' << m.inverse(g);
        os << "\n";
    }
    if (m.has_order()) {
        for (std::uint32_t a = 0; a < m.size(); ++a)
            for (std::uint32_t b = 0; b < m.size(); ++b)
                if (a != b && m.order().le(a, b)) os << "le = " << a << ' ' << b << "\n";
    }
}

void write_string_section(std::ostream& os, const std::string& name, const std::string& monoid_name,
                          const QString& s) {
    os << "[string " << name << "]\n";
    os << "monoid = " << monoid_name << "\n";
    os << "prefix =";
    for (const auto& u : s.prefix()) os << ' ' << u.str();
    os << "\n";
    os << "tail = " << s.tail().str() << "\n";
}

void write_filter_section(std::ostream& os, const std::string& name, const std::string& monoid_name,
                          const ZeroFilter& f) {
    os << "[filter " << name << "]\n";
    os << "monoid = " << monoid_name << "\n";
    os << "base =";
    for (const auto& u : f.base()) os << ' ' << u.str();
    os << "\n";
}

} // namespace hulltop
