#include "fcad/cxt_io.hpp"

#include <fstream>
#include <sstream>

namespace fcad {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool parse_count(const std::string& s, int& out) {
    if (s.empty()) return false;
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
        if (v > 1000000) return false;
    }
    out = v;
    return true;
}

}  // namespace

FormalContext read_cxt(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    std::size_t i = 0;
    auto need = [&](const char* what) -> const std::string& {
        if (i >= lines.size()) fail_input(std::string("cxt: unexpected end of file, expected ") + what);
        return lines[i++];
    };

    if (need("header 'B'") != "B") fail_input("cxt: first line must be 'B'");

    // Optional name line: present when the next line is not already the
    // object count followed by the attribute count.
    int nobj = 0, nattr = 0;
    if (i + 1 < lines.size() && parse_count(lines[i], nobj) && parse_count(lines[i + 1], nattr)) {
        i += 2;
    } else {
        ++i;  // name line, ignored
        if (!parse_count(need("object count"), nobj)) fail_input("cxt: bad object count");
        if (!parse_count(need("attribute count"), nattr)) fail_input("cxt: bad attribute count");
    }

    // Tolerate the customary blank separator line.
    if (i < lines.size() && lines[i].empty()) ++i;

    std::vector<std::string> objects, attributes;
    objects.reserve(static_cast<std::size_t>(nobj));
    attributes.reserve(static_cast<std::size_t>(nattr));
    for (int k = 0; k < nobj; ++k) objects.push_back(need("object name"));
    for (int k = 0; k < nattr; ++k) attributes.push_back(need("attribute name"));

    std::vector<IndexSet> rows(static_cast<std::size_t>(nobj));
    for (int o = 0; o < nobj; ++o) {
        const std::string& r = need("incidence row");
        if (static_cast<int>(r.size()) != nattr)
            fail_input("cxt: row " + std::to_string(o) + " has " + std::to_string(r.size()) +
                       " cells, expected " + std::to_string(nattr));
        for (int a = 0; a < nattr; ++a) {
            char c = r[static_cast<std::size_t>(a)];
            if (c == 'X' || c == 'x') rows[static_cast<std::size_t>(o)].set(a);
            else if (c != '.') fail_input(std::string("cxt: bad cell character '") + c + "'");
        }
    }
    return FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext read_cxt_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_input("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_cxt(ss.str());
}

std::string write_cxt(const FormalContext& ctx) {
    std::string out = "B\n\n";
    out += std::to_string(ctx.object_count()) + "\n";
    out += std::to_string(ctx.attribute_count()) + "\n\n";
    for (const auto& o : ctx.objects()) out += o + "\n";
    for (const auto& a : ctx.attributes()) out += a + "\n";
    for (int o = 0; o < ctx.object_count(); ++o) {
        for (int a = 0; a < ctx.attribute_count(); ++a) out += ctx.incident(o, a) ? 'X' : '.';
        out += '\n';
    }
    return out;
}

void write_cxt_file(const FormalContext& ctx, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail_input("cannot open file for writing: " + path);
    out << write_cxt(ctx);
}

}  // namespace fcad
