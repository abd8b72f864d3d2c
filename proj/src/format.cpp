#include "arcnest/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace arcnest {

namespace {

// Tiny cursor over the input line.
struct Scanner {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "' at column " + std::to_string(i + 1));
    }
    int number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected a number at column " + std::to_string(start + 1));
        return std::stoi(s.substr(start, i - start));
    }
};

int parse_header(Scanner& sc) {
    sc.expect('n');
    sc.expect('=');
    int n = sc.number();
    sc.expect(';');
    return n;
}

ArcDiagram parse_matching(Scanner& sc, int n) {
    ArcDiagram d;
    d.n = n;
    if (sc.eof()) return d;
    do {
        Arc a;
        a.open = sc.number();
        sc.expect('-');
        a.close = sc.number();
        if (sc.eat(':')) a.colour = sc.number();
        d.upper.push_back(a);
    } while (sc.eat(','));
    if (!sc.eof()) throw ParseError("trailing input after arc list");
    canonicalize(d);
    return d;
}

ArcDiagram parse_partition(Scanner& sc, int n) {
    ArcDiagram d;
    d.n = n;
    while (!sc.eof()) {
        sc.expect('{');
        std::vector<int> elems;
        std::vector<int> arc_colours;  // colour of the arc closing at elems[i], i >= 1; 0 = unset
        bool any_elem_colour = false;
        do {
            elems.push_back(sc.number());
            int c = 0;
            if (sc.eat(':')) {
                if (elems.size() == 1) throw ParseError("colour suffix on a block's first element");
                c = sc.number();
                any_elem_colour = true;
            }
            if (elems.size() > 1) arc_colours.push_back(c);
        } while (sc.eat(','));
        sc.expect('}');
        if (sc.eat(':')) {
            if (any_elem_colour) throw ParseError("block colour and element colours cannot be mixed");
            int c = sc.number();
            std::fill(arc_colours.begin(), arc_colours.end(), c);
        }
        if (!std::is_sorted(elems.begin(), elems.end()) ||
            std::adjacent_find(elems.begin(), elems.end()) != elems.end())
            throw ParseError("block elements must be strictly increasing");
        for (size_t i = 1; i < elems.size(); ++i)
            d.upper.push_back({elems[i - 1], elems[i], arc_colours[i - 1] ? arc_colours[i - 1] : 1});
    }
    canonicalize(d);
    return d;
}

ArcDiagram parse_permutation(Scanner& sc, int n) {
    std::vector<int> sigma;
    sigma.reserve(static_cast<size_t>(n));
    while (!sc.eof()) sigma.push_back(sc.number());
    if (static_cast<int>(sigma.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " images, got " + std::to_string(sigma.size()));
    try {
        return from_one_line(sigma);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void append_arc(std::string& out, const Arc& a) {
    out += std::to_string(a.open);
    out += '-';
    out += std::to_string(a.close);
    if (a.colour != 1) {
        out += ':';
        out += std::to_string(a.colour);
    }
}

std::string serialize_partition_blocks(const ArcDiagram& d) {
    // Rebuild blocks by walking each chain of arcs.
    std::vector<int> next(static_cast<size_t>(d.n) + 1, 0), colour(static_cast<size_t>(d.n) + 1, 0);
    std::vector<char> has_in(static_cast<size_t>(d.n) + 1, 0), touched(static_cast<size_t>(d.n) + 1, 0);
    for (const Arc& a : d.upper) {
        next[a.open] = a.close;
        colour[a.open] = a.colour;
        has_in[a.close] = 1;
        touched[a.open] = touched[a.close] = 1;
    }
    std::string out;
    for (int v = 1; v <= d.n; ++v) {
        if (has_in[v] || (touched[v] && !next[v])) continue;  // not a chain head
        std::vector<int> elems{v};
        std::vector<int> cols;
        for (int w = v; next[w]; w = next[w]) {
            cols.push_back(colour[w]);
            elems.push_back(next[w]);
        }
        bool uniform = std::all_of(cols.begin(), cols.end(), [&](int c) { return c == cols.front(); });
        out += '{';
        for (size_t i = 0; i < elems.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(elems[i]);
            if (i && !uniform) {
                out += ':';
                out += std::to_string(cols[i - 1]);
            }
        }
        out += '}';
        if (!cols.empty() && uniform && cols.front() != 1) {
            out += ':';
            out += std::to_string(cols.front());
        }
    }
    return out;
}

}  // namespace

std::pair<ObjectClass, ArcDiagram> parse(const std::string& line) {
    Scanner sc{line};
    sc.skip_ws();
    if (sc.eof()) throw ParseError("empty input");
    char tag = sc.s[sc.i++];
    ObjectClass cls;
    switch (tag) {
        case 'M': cls = ObjectClass::Matching; break;
        case 'P': cls = ObjectClass::SetPartition; break;
        case 'S': cls = ObjectClass::Permutation; break;
        default: throw ParseError("unknown class tag; expected M, P, or S");
    }
    int n = parse_header(sc);
    ArcDiagram d;
    switch (cls) {
        case ObjectClass::Matching: d = parse_matching(sc, n); break;
        case ObjectClass::SetPartition: d = parse_partition(sc, n); break;
        case ObjectClass::Permutation: d = parse_permutation(sc, n); break;
    }
    try {
        validate(cls, d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return {cls, d};
}

std::string serialize(ObjectClass cls, const ArcDiagram& d) {
    ArcDiagram c = d;
    canonicalize(c);
    std::string out;
    switch (cls) {
        case ObjectClass::Matching: {
            out = "M n=" + std::to_string(c.n) + ";";
            for (size_t i = 0; i < c.upper.size(); ++i) {
                out += i ? "," : " ";
                append_arc(out, c.upper[i]);
            }
            break;
        }
        case ObjectClass::SetPartition: {
            out = "P n=" + std::to_string(c.n) + ";";
            std::string blocks = serialize_partition_blocks(c);
            if (!blocks.empty()) out += " " + blocks;
            break;
        }
        case ObjectClass::Permutation: {
            out = "S n=" + std::to_string(c.n) + ";";
            for (int img : to_one_line(c)) out += " " + std::to_string(img);
            break;
        }
    }
    return out;
}

}  // namespace arcnest
