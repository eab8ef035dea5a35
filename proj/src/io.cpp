#include "sperner/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "sperner/constructions.hpp"

namespace sperner {

namespace {

std::string strip(const std::string& raw) {
    std::string s = raw;
    if (auto pos = s.find('#'); pos != std::string::npos) s.erase(pos);
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

int parse_int(const std::string& tok, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

// "key=value,key=value" with a fixed key set, all required.
std::map<std::string, int> parse_kv(const std::string& body, const std::vector<std::string>& keys,
                                    const std::string& what) {
    std::map<std::string, int> out;
    for (const std::string& part : split(body, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw Error(what + ": expected key=value, got '" + part + "'");
        std::string key = part.substr(0, eq);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw Error(what + ": unknown key '" + key + "'");
        if (out.count(key)) throw Error(what + ": duplicate key '" + key + "'");
        out[key] = parse_int(part.substr(eq + 1), 0);
    }
    for (const std::string& key : keys) {
        if (!out.count(key)) throw Error(what + ": missing key '" + key + "'");
    }
    return out;
}

}  // namespace

SetFamily parse_family(std::istream& in) {
    std::string raw;
    int line = 0;
    int n = -1;
    std::vector<Mask> members;
    std::unordered_map<Mask, int> first_seen;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = strip(raw);
        if (s.empty()) continue;
        if (n < 0) {
            if (s.rfind("n=", 0) != 0) throw ParseError(line, "expected 'n=<int>' header");
            n = parse_int(s.substr(2), line);
            if (n < 1 || n > 64) throw ParseError(line, "n must be in 1..64");
            continue;
        }
        Mask m = 0;
        if (s != "-") {
            int prev = 0;
            for (const std::string& tok : split(s, ',')) {
                int e = parse_int(strip(tok), line);
                if (e < 1 || e > n)
                    throw ParseError(line, "element " + std::to_string(e) + " outside 1.." + std::to_string(n));
                if (e <= prev) throw ParseError(line, "elements must be strictly increasing");
                prev = e;
                m |= Mask{1} << (e - 1);
            }
        }
        if (auto it = first_seen.find(m); it != first_seen.end())
            throw ParseError(line, "duplicate set (first seen on line " + std::to_string(it->second) + ")");
        first_seen.emplace(m, line);
        members.push_back(m);
    }
    if (n < 0) throw ParseError(line, "missing 'n=<int>' header");
    return SetFamily(Ground(n), std::move(members));
}

SetFamily parse_family_string(const std::string& text) {
    std::istringstream in(text);
    return parse_family(in);
}

SetFamily parse_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open family file: " + path);
    return parse_family(in);
}

std::string format_set(Mask m) {
    if (m == 0) return "-";
    std::string out;
    for (int b : bit_positions(m)) {
        if (!out.empty()) out += ',';
        out += std::to_string(b + 1);
    }
    return out;
}

std::string write_family(const SetFamily& family) {
    std::string out = "n=" + std::to_string(family.ground().n()) + "\n";
    for (Mask m : family.members()) {
        out += format_set(m);
        out += '\n';
    }
    return out;
}

TreePoset parse_poset(std::istream& in) {
    std::string raw;
    int line = 0;
    int nodes = -1;
    std::vector<int> parent;
    std::vector<char> seen;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = strip(raw);
        if (s.empty()) continue;
        if (nodes < 0) {
            if (s.rfind("nodes=", 0) != 0) throw ParseError(line, "expected 'nodes=<int>' header");
            nodes = parse_int(s.substr(6), line);
            if (nodes < 1) throw ParseError(line, "nodes must be >= 1");
            parent.assign(nodes, -1);
            seen.assign(nodes, 0);
            continue;
        }
        if (s.rfind("parent(", 0) != 0) throw ParseError(line, "expected 'parent(<i>)=<j>'");
        auto close = s.find(')');
        auto eq = s.find('=', close == std::string::npos ? 0 : close);
        if (close == std::string::npos || eq == std::string::npos)
            throw ParseError(line, "expected 'parent(<i>)=<j>'");
        int i = parse_int(strip(s.substr(7, close - 7)), line);
        int j = parse_int(strip(s.substr(eq + 1)), line);
        if (i < 1 || i >= nodes) throw ParseError(line, "node index out of range");
        if (seen[i]) throw ParseError(line, "duplicate parent line for node " + std::to_string(i));
        if (j < 0 || j >= nodes) throw ParseError(line, "parent index out of range");
        seen[i] = 1;
        parent[i] = j;
    }
    if (nodes < 0) throw ParseError(line, "missing 'nodes=<int>' header");
    for (int i = 1; i < nodes; ++i) {
        if (!seen[i]) throw ParseError(line, "missing parent line for node " + std::to_string(i));
    }
    return TreePoset(std::move(parent));
}

TreePoset parse_poset_string(const std::string& text) {
    std::istringstream in(text);
    return parse_poset(in);
}

TreePoset poset_from_spec(const std::string& spec) {
    if (spec.rfind("chain:", 0) == 0) {
        return build_chain_poset(parse_int(spec.substr(6), 0));
    }
    if (spec.rfind("tree:", 0) == 0) {
        auto kv = parse_kv(spec.substr(5), {"h", "c"}, "tree");
        return build_complete_tree_poset(kv["h"], kv["c"]);
    }
    std::ifstream in(spec);
    if (!in) throw Error("cannot open poset file: " + spec);
    return parse_poset(in);
}

SetFamily construct_family(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error("construct: expected '<kind>:<params>'");
    std::string kind = spec.substr(0, colon);
    std::string body = spec.substr(colon + 1);
    if (kind == "level") {
        auto kv = parse_kv(body, {"n", "i"}, "level");
        return level(Ground(kv["n"]), kv["i"]);
    }
    if (kind == "band") {
        auto kv = parse_kv(body, {"n", "lo", "hi"}, "band");
        return band(BandSpec(Ground(kv["n"]), kv["lo"], kv["hi"]));
    }
    if (kind == "low") {
        auto kv = parse_kv(body, {"n", "l"}, "low");
        return low_levels(Ground(kv["n"]), kv["l"]);
    }
    if (kind == "midband") {
        auto kv = parse_kv(body, {"n", "k", "lp"}, "midband");
        return midband(Ground(kv["n"]), kv["k"], kv["lp"]);
    }
    throw Error("construct: unknown kind '" + kind + "'");
}

}  // namespace sperner
