#include "gmol/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

namespace gmol {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
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
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i);
    }
    bool done() {
        skip_ws();
        return i == s.size();
    }
};

Factor parse_factor(Cursor& c, const Signature& sig, int f) {
    c.skip_ws();
    size_t start = c.i;
    int dim = 0;
    bool any = false;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        dim = dim * 10 + (c.s[c.i] - '0');
        if (dim > 127) throw ParseError("dimension too large", start);
        ++c.i;
        any = true;
    }
    if (!any) throw ParseError("expected dimension digits", c.i);
    if (c.i >= c.s.size()) throw ParseError("expected sign", c.i);
    char sc = c.s[c.i++];
    Sign sign;
    if (sc == '+')
        sign = plus;
    else if (sc == '-')
        sign = minus;
    else if (sc == '*')
        sign = top;
    else
        throw ParseError("expected '+', '-' or '*'", c.i - 1);
    Factor out{static_cast<int8_t>(dim), sign};
    if (sig.caps) {
        int cap = (*sig.caps)[static_cast<size_t>(f)];
        if (dim > cap) throw ParseError("dimension exceeds cap", start);
        if (sign == top && dim != cap) throw ParseError("'*' only valid at the cap dimension", start);
    } else if (sign == top) {
        throw ParseError("'*' requires a capped signature", start);
    }
    return out;
}

Atom parse_atom_at(Cursor& c, const Signature& sig) {
    c.expect('(');
    Atom a;
    a.arity = static_cast<int8_t>(sig.arity);
    for (int f = 0; f < sig.arity; ++f) {
        if (f) c.expect(',');
        a[f] = parse_factor(c, sig, f);
    }
    if (c.eat(',')) throw ParseError("too many factors for signature", c.i - 1);
    c.expect(')');
    return a;
}

}  // namespace

Atom parse_atom(const std::string& text, const Signature& sig) {
    Cursor c{text};
    Atom a = parse_atom_at(c, sig);
    if (!c.done()) throw ParseError("trailing input", c.i);
    return a;
}

Subcomplex parse_subcomplex(const std::string& text, const Signature& sig) {
    Cursor c{text};
    if (c.eat('{')) {
        c.expect('}');
        if (!c.done()) throw ParseError("trailing input", c.i);
        return Subcomplex{sig, {}};
    }
    std::vector<Atom> ms;
    ms.push_back(parse_atom_at(c, sig));
    while (c.eat(';')) ms.push_back(parse_atom_at(c, sig));
    if (!c.done()) throw ParseError("trailing input", c.i);
    return normalize(sig, std::move(ms));
}

std::vector<std::string> catalog_lines(const std::vector<Subcomplex>& entries) {
    std::vector<std::string> lines;
    lines.reserve(entries.size());
    for (const Subcomplex& e : entries) lines.push_back(format_subcomplex(e));
    std::sort(lines.begin(), lines.end());
    return lines;
}

void write_catalog(const std::string& path, const std::vector<Subcomplex>& entries) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_catalog: cannot open " + path);
    std::vector<std::string> lines = catalog_lines(entries);
    out << "# count " << lines.size() << "\n";
    for (const std::string& l : lines) out << l << "\n";
    if (!out) throw std::runtime_error("write_catalog: write failed for " + path);
}

std::vector<Subcomplex> read_catalog(const std::string& path, const Signature& sig) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_catalog: cannot open " + path);
    std::vector<Subcomplex> out;
    std::string line, prev;
    long expected = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            size_t at = line.find("count");
            if (expected < 0 && at != std::string::npos)
                expected = std::stol(line.substr(at + 5));
            continue;
        }
        if (!prev.empty() && !(prev < line))
            throw std::runtime_error("read_catalog: file not sorted at line '" + line + "'");
        prev = line;
        out.push_back(parse_subcomplex(line, sig));
    }
    if (expected >= 0 && static_cast<size_t>(expected) != out.size())
        throw std::runtime_error("read_catalog: count header mismatch");
    return out;
}

}  // namespace gmol
