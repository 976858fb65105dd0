#include "unavoidable/io.hpp"

#include <fstream>
#include <sstream>

#include "unavoidable/errors.hpp"

namespace unav {

namespace {

struct LineReader {
    std::istringstream in;
    int lineno = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // next non-empty line; empty optional-style via ok flag
    bool next(std::string& line) {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    }
};

void expect_header(LineReader& r, const std::string& header) {
    std::string line;
    if (!r.next(line)) r.fail("missing header, expected \"" + header + "\"");
    if (line != header) {
        if (line.rfind(header.substr(0, header.find(' ')), 0) == 0)
            r.fail("version mismatch: got \"" + line + "\", expected \"" + header + "\"");
        r.fail("bad header: got \"" + line + "\", expected \"" + header + "\"");
    }
}

int expect_n(LineReader& r) {
    std::string line;
    if (!r.next(line)) r.fail("missing \"n\" line");
    std::istringstream ls(line);
    std::string key;
    long long n = -1;
    ls >> key >> n;
    if (key != "n" || n < 1) r.fail("expected \"n <count>\"");
    return (int)n;
}

void expect_section(LineReader& r, const std::string& name) {
    std::string line;
    if (!r.next(line)) r.fail("missing section \"" + name + "\"");
    if (line != name) r.fail("expected section \"" + name + "\", got \"" + line + "\"");
}

std::pair<int, int> parse_pair_line(LineReader& r, const std::string& line, int n) {
    std::istringstream ls(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) r.fail("expected \"u v\" pair");
    if (u < 0 || v < 0 || u >= n || v >= n) r.fail("vertex index out of range (n=" + std::to_string(n) + ")");
    if (u == v) r.fail("self-loop");
    return {(int)u, (int)v};
}

std::vector<int> parse_vertex_list(LineReader& r, const std::string& line,
                                   const std::string& key) {
    std::istringstream ls(line);
    std::string k;
    ls >> k;
    if (k != key + ":") r.fail("expected \"" + key + ":\" list");
    std::vector<int> out;
    long long v;
    while (ls >> v) {
        if (v < 0) r.fail("negative vertex index");
        out.push_back((int)v);
    }
    return out;
}

std::string list_line(const std::string& key, const std::vector<int>& vs) {
    std::string s = key + ":";
    for (int v : vs) s += " " + std::to_string(v);
    return s + "\n";
}

} // namespace

std::string serialize(const ColoredCompleteGraph& g) {
    std::ostringstream out;
    out << "UNAVOIDABLE-COLORING v1\n";
    out << "n " << g.n() << "\n";
    out << "red:\n";
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.is_red(u, v)) out << u << " " << v << "\n";
    return out.str();
}

ColoredCompleteGraph parse_coloring(const std::string& text) {
    LineReader r(text);
    expect_header(r, "UNAVOIDABLE-COLORING v1");
    int n = expect_n(r);
    expect_section(r, "red:");
    ColoredCompleteGraph g(n);
    std::string line;
    while (r.next(line)) {
        auto [u, v] = parse_pair_line(r, line, n);
        if (g.is_red(u, v)) r.fail("duplicate pair " + std::to_string(u) + " " + std::to_string(v));
        g.set_color(u, v, Color::Red);
    }
    return g;
}

std::string serialize(const Tournament& t) {
    std::ostringstream out;
    out << "UNAVOIDABLE-TOURNAMENT v1\n";
    out << "n " << t.n() << "\n";
    out << "arcs:\n";
    for (int u = 0; u < t.n(); ++u)
        for (int v = u + 1; v < t.n(); ++v) {
            if (t.arc(u, v)) out << u << " " << v << "\n";
            else out << v << " " << u << "\n";
        }
    return out.str();
}

Tournament parse_tournament(const std::string& text) {
    LineReader r(text);
    expect_header(r, "UNAVOIDABLE-TOURNAMENT v1");
    int n = expect_n(r);
    expect_section(r, "arcs:");
    Tournament t(n);
    std::vector<char> seen((size_t)n * n, 0);
    std::string line;
    long long arcs = 0;
    while (r.next(line)) {
        auto [u, v] = parse_pair_line(r, line, n);
        size_t key = (size_t)std::min(u, v) * n + std::max(u, v);
        if (seen[key]) r.fail("duplicate pair " + std::to_string(u) + " " + std::to_string(v));
        seen[key] = 1;
        t.orient(u, v);
        ++arcs;
    }
    if (arcs != (long long)n * (n - 1) / 2)
        throw ParseError("arcs section incomplete: got " + std::to_string(arcs) +
                         " arcs, need " + std::to_string((long long)n * (n - 1) / 2));
    return t;
}

std::string serialize(const FkWitness& w) {
    std::ostringstream out;
    out << "FK-WITNESS v1\n";
    out << "k " << w.a_set.size() << "\n";
    out << "color " << color_name(w.color) << "\n";
    out << "variant " << (w.variant == FkWitness::Variant::OneClique ? "one-clique" : "two-cliques") << "\n";
    out << list_line("a", w.a_set);
    out << list_line("b", w.b_set);
    return out.str();
}

FkWitness parse_fk_witness(const std::string& text) {
    LineReader r(text);
    expect_header(r, "FK-WITNESS v1");
    std::string line;
    FkWitness w;
    if (!r.next(line)) r.fail("missing \"k\" line");
    {
        std::istringstream ls(line);
        std::string key; long long k = -1;
        ls >> key >> k;
        if (key != "k" || k < 1) r.fail("expected \"k <size>\"");
    }
    if (!r.next(line)) r.fail("missing \"color\" line");
    {
        std::istringstream ls(line);
        std::string key, val;
        ls >> key >> val;
        if (key != "color" || (val != "red" && val != "blue")) r.fail("expected \"color red|blue\"");
        w.color = (val == "red") ? Color::Red : Color::Blue;
    }
    if (!r.next(line)) r.fail("missing \"variant\" line");
    {
        std::istringstream ls(line);
        std::string key, val;
        ls >> key >> val;
        if (key != "variant" || (val != "one-clique" && val != "two-cliques"))
            r.fail("expected \"variant one-clique|two-cliques\"");
        w.variant = (val == "one-clique") ? FkWitness::Variant::OneClique
                                          : FkWitness::Variant::TwoCliques;
    }
    if (!r.next(line)) r.fail("missing \"a:\" list");
    w.a_set = parse_vertex_list(r, line, "a");
    if (!r.next(line)) r.fail("missing \"b:\" list");
    w.b_set = parse_vertex_list(r, line, "b");
    return w;
}

std::string serialize(const DkWitness& w) {
    std::ostringstream out;
    out << "DK-WITNESS v1\n";
    out << "k " << w.u0.size() << "\n";
    out << list_line("u0", w.u0);
    out << list_line("u1", w.u1);
    out << list_line("u2", w.u2);
    return out.str();
}

DkWitness parse_dk_witness(const std::string& text) {
    LineReader r(text);
    expect_header(r, "DK-WITNESS v1");
    std::string line;
    if (!r.next(line)) r.fail("missing \"k\" line");
    {
        std::istringstream ls(line);
        std::string key; long long k = -1;
        ls >> key >> k;
        if (key != "k" || k < 1) r.fail("expected \"k <size>\"");
    }
    DkWitness w;
    if (!r.next(line)) r.fail("missing \"u0:\" list");
    w.u0 = parse_vertex_list(r, line, "u0");
    if (!r.next(line)) r.fail("missing \"u1:\" list");
    w.u1 = parse_vertex_list(r, line, "u1");
    if (!r.next(line)) r.fail("missing \"u2:\" list");
    w.u2 = parse_vertex_list(r, line, "u2");
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

} // namespace unav
