// Table file parsing, serialization and closed-form groups.

#include <cctype>
#include <fstream>
#include <sstream>

#include "nielsen/homotopy_data.hpp"

namespace nielsen {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

SemanticError::SemanticError(std::string path, const std::string& what)
    : std::runtime_error(path + ": " + what), path_(std::move(path))
{
}

// ---------------------------------------------------------------------------
// Closed forms

bool is_closed_form(int m, int q)
{
    return q <= 1 || m < q || m == q;
}

SphereGroupEntry closed_form_entry(int m, int q)
{
    if (m < 1 || q < 0 || !is_closed_form(m, q))
        throw DomainError("pi_" + std::to_string(m) + "(S^" + std::to_string(q) + ") has no closed form");
    SphereGroupEntry e;
    e.m = m;
    e.q = q;
    e.closed_form = true;
    e.source = "closed form";
    const bool identity = (q == 1 && m == 1) || (q >= 2 && m == q);
    if (!identity)
        return e;
    e.group = FgAbGroup::integers();
    GeneratorRecord g;
    g.name = "iota_" + std::to_string(q);
    g.susp = std::vector<Int>{1};
    g.stab = StableCoords{0, {1}};
    g.antip = std::vector<Int>{q % 2 == 1 ? 1 : -1};
    g.source = "identity class";
    e.generators.push_back(std::move(g));
    return e;
}

// ---------------------------------------------------------------------------
// Tokenizer

namespace {

struct Token {
    std::string text;
    int column = 0;
    bool quoted = false;
};

std::vector<Token> tokenize(const std::string& line, int lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#')
            break;
        Token t;
        t.column = static_cast<int>(i) + 1;
        if (c == '"') {
            t.quoted = true;
            ++i;
            bool closed = false;
            while (i < line.size()) {
                char d = line[i++];
                if (d == '\\' && i < line.size()) {
                    t.text.push_back(line[i++]);
                } else if (d == '"') {
                    closed = true;
                    break;
                } else {
                    t.text.push_back(d);
                }
            }
            if (!closed)
                throw ParseError(lineno, t.column, "unterminated string");
        } else {
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#' &&
                   line[i] != '"')
                t.text.push_back(line[i++]);
        }
        out.push_back(std::move(t));
    }
    return out;
}

bool valid_name(const std::string& s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '(' ||
              c == ')'))
            return false;
    return true;
}

class LineParser {
public:
    LineParser(std::vector<Token> tokens, int line) : tokens_(std::move(tokens)), line_(line) {}

    std::size_t size() const { return tokens_.size(); }

    void expect_count(std::size_t n, const char* usage) const
    {
        if (tokens_.size() != n) {
            int col = tokens_.size() > n ? tokens_[n].column : (tokens_.empty() ? 1 : tokens_.back().column);
            throw ParseError(line_, col, std::string("expected: ") + usage);
        }
    }

    Int integer(std::size_t i) const
    {
        const Token& t = tokens_.at(i);
        Int v = 0;
        std::size_t pos = 0;
        try {
            v = std::stoll(t.text, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (t.quoted || pos == 0 || pos != t.text.size())
            throw ParseError(line_, t.column, "expected an integer, got '" + t.text + "'");
        return v;
    }

    int small(std::size_t i) const
    {
        Int v = integer(i);
        if (v < 0 || v > 100000)
            throw ParseError(line_, tokens_[i].column, "value out of range: " + tokens_[i].text);
        return static_cast<int>(v);
    }

    std::vector<Int> vector(std::size_t i) const
    {
        const Token& t = tokens_.at(i);
        if (t.quoted)
            throw ParseError(line_, t.column, "expected a coefficient vector");
        std::vector<Int> out;
        if (t.text == "-")
            return out;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = t.text.find(',', start);
            std::string piece = t.text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            std::size_t pos = 0;
            Int v = 0;
            try {
                v = std::stoll(piece, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (piece.empty() || pos != piece.size())
                throw ParseError(line_, t.column + static_cast<int>(start), "bad vector entry '" + piece + "'");
            out.push_back(v);
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        return out;
    }

    std::string name(std::size_t i) const
    {
        const Token& t = tokens_.at(i);
        if (t.quoted || !valid_name(t.text))
            throw ParseError(line_, t.column, "invalid name '" + t.text + "'");
        return t.text;
    }

    std::string string(std::size_t i) const
    {
        const Token& t = tokens_.at(i);
        if (!t.quoted)
            throw ParseError(line_, t.column, "expected a quoted string");
        return t.text;
    }

    void literal(std::size_t i, const char* word) const
    {
        const Token& t = tokens_.at(i);
        if (t.quoted || t.text != word)
            throw ParseError(line_, t.column, std::string("expected '") + word + "'");
    }

    const Token& operator[](std::size_t i) const { return tokens_[i]; }
    int line() const { return line_; }

private:
    std::vector<Token> tokens_;
    int line_;
};

struct RawStem {
    int k = 0, free = 0, line = 0;
    std::vector<Int> torsion;
    std::vector<std::string> names;
    std::string source;
};

struct RawGroup {
    int m = 0, q = 0, free = 0, line = 0;
    std::vector<Int> torsion;
    std::vector<GeneratorRecord> gens;
    std::vector<int> gen_lines;
    std::string source;
};

struct RawTables {
    std::vector<RawStem> stems;
    std::vector<RawGroup> groups;
    std::vector<std::pair<ProductRecord, int>> products;
    std::vector<std::pair<StableNameRecord, int>> snames;
    std::vector<std::pair<NamedElementRecord, int>> names;
};

enum class Current { None, Stem, Group, Gen, Prod, SName, Name };

RawTables parse_raw(std::string_view source)
{
    RawTables raw;
    Current cur = Current::None;
    std::istringstream in{std::string(source)};
    std::string text;
    int lineno = 0;
    while (std::getline(in, text)) {
        ++lineno;
        LineParser p(tokenize(text, lineno), lineno);
        if (p.size() == 0)
            continue;
        if (p[0].quoted)
            throw ParseError(lineno, p[0].column, "expected a record keyword");
        const std::string& kw = p[0].text;

        auto need_gen = [&](const char* what) -> GeneratorRecord& {
            if (cur != Current::Gen)
                throw ParseError(lineno, 1, std::string(what) + " must follow a generator of a group");
            return raw.groups.back().gens.back();
        };

        if (kw == "stem") {
            p.expect_count(4, "stem K FREE TORSION");
            RawStem s;
            s.k = p.small(1);
            s.free = p.small(2);
            s.torsion = p.vector(3);
            s.line = lineno;
            raw.stems.push_back(std::move(s));
            cur = Current::Stem;
        } else if (kw == "group") {
            p.expect_count(5, "group M Q FREE TORSION");
            RawGroup g;
            g.m = p.small(1);
            g.q = p.small(2);
            g.free = p.small(3);
            g.torsion = p.vector(4);
            g.line = lineno;
            raw.groups.push_back(std::move(g));
            cur = Current::Group;
        } else if (kw == "gen") {
            p.expect_count(2, "gen NAME");
            std::string name = p.name(1);
            if (cur == Current::Stem) {
                raw.stems.back().names.push_back(std::move(name));
            } else if (cur == Current::Group || cur == Current::Gen) {
                GeneratorRecord g;
                g.name = std::move(name);
                raw.groups.back().gens.push_back(std::move(g));
                raw.groups.back().gen_lines.push_back(lineno);
                cur = Current::Gen;
            } else {
                throw ParseError(lineno, 1, "gen must follow a stem or group");
            }
        } else if (kw == "susp") {
            p.expect_count(2, "susp VEC");
            auto& g = need_gen("susp");
            if (g.susp)
                throw ParseError(lineno, 1, "duplicate susp");
            g.susp = p.vector(1);
        } else if (kw == "stab") {
            p.expect_count(3, "stab DEG VEC");
            auto& g = need_gen("stab");
            if (g.stab)
                throw ParseError(lineno, 1, "duplicate stab");
            g.stab = StableCoords{p.small(1), p.vector(2)};
        } else if (kw == "gamma") {
            p.expect_count(4, "gamma K DEG VEC");
            auto& g = need_gen("gamma");
            int k = p.small(1);
            if (k < 2)
                throw ParseError(lineno, p[1].column, "gamma components start at k = 2");
            if (g.gamma.count(k))
                throw ParseError(lineno, p[1].column, "duplicate gamma component");
            g.gamma[k] = StableCoords{p.small(2), p.vector(3)};
        } else if (kw == "antip") {
            p.expect_count(2, "antip VEC");
            auto& g = need_gen("antip");
            if (g.antip)
                throw ParseError(lineno, 1, "duplicate antip");
            g.antip = p.vector(1);
        } else if (kw == "prod") {
            p.expect_count(6, "prod A B -> DEG VEC");
            p.literal(3, "->");
            ProductRecord r{p.name(1), p.name(2), p.small(4), p.vector(5), {}};
            raw.products.emplace_back(std::move(r), lineno);
            cur = Current::Prod;
        } else if (kw == "sname") {
            p.expect_count(4, "sname NAME DEG VEC");
            StableNameRecord r{p.name(1), p.small(2), p.vector(3), {}};
            raw.snames.emplace_back(std::move(r), lineno);
            cur = Current::SName;
        } else if (kw == "name") {
            p.expect_count(5, "name NAME M Q VEC");
            NamedElementRecord r{p.name(1), p.small(2), p.small(3), p.vector(4), {}};
            raw.names.emplace_back(std::move(r), lineno);
            cur = Current::Name;
        } else if (kw == "src") {
            p.expect_count(2, "src \"TEXT\"");
            std::string s = p.string(1);
            std::string* target = nullptr;
            switch (cur) {
            case Current::None: throw ParseError(lineno, 1, "src without a preceding record");
            case Current::Stem: target = &raw.stems.back().source; break;
            case Current::Group: target = &raw.groups.back().source; break;
            case Current::Gen: target = &raw.groups.back().gens.back().source; break;
            case Current::Prod: target = &raw.products.back().first.source; break;
            case Current::SName: target = &raw.snames.back().first.source; break;
            case Current::Name: target = &raw.names.back().first.source; break;
            }
            if (!target->empty())
                throw ParseError(lineno, 1, "duplicate src");
            *target = std::move(s);
        } else {
            throw ParseError(lineno, p[0].column, "unknown record '" + kw + "'");
        }
    }
    return raw;
}

std::string group_path(int m, int q, int line)
{
    return "line " + std::to_string(line) + ": group " + std::to_string(m) + " " + std::to_string(q);
}

FgAbGroup make_group(int free, const std::vector<Int>& torsion, const std::string& path)
{
    try {
        return FgAbGroup(free, torsion);
    } catch (const DomainError& e) {
        throw SemanticError(path, e.what());
    }
}

void check_column(const FgAbGroup& target, const std::vector<Int>& v, Int gen_order, const std::string& path,
                  const std::string& what)
{
    if (v.size() != target.num_generators())
        throw SemanticError(path, what + " vector has length " + std::to_string(v.size()) + ", expected " +
                                      std::to_string(target.num_generators()));
    if (!column_respects_order(target, v, gen_order))
        throw SemanticError(path, what + " is not compatible with the generator order " + std::to_string(gen_order));
}

}  // namespace

// ---------------------------------------------------------------------------
// Loading

TableSet load_tables(std::string_view source)
{
    RawTables raw = parse_raw(source);
    TableSet t;

    for (auto& s : raw.stems) {
        std::string path = "line " + std::to_string(s.line) + ": stem " + std::to_string(s.k);
        StableStem stem{s.k, make_group(s.free, s.torsion, path), s.names, s.source};
        try {
            t.ring.add_stem(std::move(stem));
        } catch (const DomainError& e) {
            throw SemanticError(path, e.what());
        }
    }
    for (auto& [p, line] : raw.products) {
        try {
            t.ring.add_product(p);
        } catch (const std::exception& e) {
            throw SemanticError("line " + std::to_string(line) + ": prod " + p.left + " " + p.right, e.what());
        }
    }
    for (auto& [n, line] : raw.snames) {
        try {
            t.ring.add_name(n);
        } catch (const std::exception& e) {
            throw SemanticError("line " + std::to_string(line) + ": sname " + n.name, e.what());
        }
    }

    // Groups first, so annotations may refer to entries declared later in the file.
    for (auto& g : raw.groups) {
        std::string path = group_path(g.m, g.q, g.line);
        if (g.m < 1 || g.q < 0)
            throw SemanticError(path, "indices out of range");
        if (is_closed_form(g.m, g.q))
            throw SemanticError(path, "closed-form groups are synthesized and must not be tabulated");
        if (t.entries.count({g.m, g.q}))
            throw SemanticError(path, "group declared twice");
        SphereGroupEntry e;
        e.m = g.m;
        e.q = g.q;
        e.group = make_group(g.free, g.torsion, path);
        e.source = g.source;
        if (g.gens.size() != e.group.num_generators())
            throw SemanticError(path, "declares " + std::to_string(g.gens.size()) + " generators, group " +
                                          e.group.to_string() + " has " +
                                          std::to_string(e.group.num_generators()));
        for (std::size_t i = 0; i < g.gens.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (g.gens[i].name == g.gens[j].name)
                    throw SemanticError(path, "generator name '" + g.gens[i].name + "' used twice");
        e.generators = g.gens;
        t.entries.emplace(std::make_pair(g.m, g.q), std::move(e));
    }

    for (const auto& g : raw.groups) {
        const SphereGroupEntry& e = t.entries.at({g.m, g.q});
        for (std::size_t i = 0; i < e.generators.size(); ++i) {
            const GeneratorRecord& gen = e.generators[i];
            std::string path = "line " + std::to_string(g.gen_lines[i]) + ": group " + std::to_string(g.m) + " " +
                               std::to_string(g.q) + " / gen " + gen.name;
            const Int order = e.group.generator_order(i);
            if (gen.susp) {
                if (!t.covers(g.m + 1, g.q + 1))
                    throw SemanticError(path + " / susp", "suspension target pi_" + std::to_string(g.m + 1) + "(S^" +
                                                              std::to_string(g.q + 1) + ") is not tabulated");
                check_column(t.lookup(g.m + 1, g.q + 1).group, *gen.susp, order, path + " / susp", "suspension");
            }
            if (gen.stab) {
                if (gen.stab->degree != g.m - g.q)
                    throw SemanticError(path + " / stab", "degree " + std::to_string(gen.stab->degree) +
                                                              ", expected " + std::to_string(g.m - g.q));
                if (!t.ring.has_stem(gen.stab->degree))
                    throw SemanticError(path + " / stab", "stem not tabulated");
                check_column(t.ring.stem(gen.stab->degree).group, gen.stab->coeffs, order, path + " / stab",
                             "stabilization");
            }
            for (const auto& [k, c] : gen.gamma) {
                std::string gp = path + " / gamma " + std::to_string(k);
                if (k > gamma_kmax(g.m, g.q))
                    throw SemanticError(gp, "component index exceeds " + std::to_string(gamma_kmax(g.m, g.q)));
                if (c.degree != gamma_degree(g.m, g.q, k))
                    throw SemanticError(gp, "degree " + std::to_string(c.degree) + ", expected " +
                                                std::to_string(gamma_degree(g.m, g.q, k)));
                if (!t.ring.has_stem(c.degree))
                    throw SemanticError(gp, "stem not tabulated");
                check_column(t.ring.stem(c.degree).group, c.coeffs, order, gp, "gamma component");
            }
            if (gen.antip)
                check_column(e.group, *gen.antip, order, path + " / antip", "antipodal image");
        }
    }

    for (auto& [n, line] : raw.names) {
        std::string path = "line " + std::to_string(line) + ": name " + n.name;
        if (t.find_name(n.name))
            throw SemanticError(path, "name registered twice");
        if (!t.covers(n.m, n.q))
            throw SemanticError(path, "group not tabulated");
        const auto entry = t.lookup(n.m, n.q);
        if (n.coeffs.size() != entry.group.num_generators())
            throw SemanticError(path, "coefficient vector has wrong length");
        t.names.push_back(n);
    }
    return t;
}

TableSet load_tables_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open table file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_tables(buf.str());
}

const TableSet& default_tables()
{
    static const TableSet tables = load_tables(embedded_tables());
    return tables;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string vec(const std::vector<Int>& v)
{
    if (v.empty())
        return "-";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string quoted(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

void emit_src(std::ostringstream& os, const std::string& s)
{
    if (!s.empty())
        os << "src " << quoted(s) << "\n";
}

}  // namespace

std::string serialize_tables(const TableSet& t)
{
    std::ostringstream os;
    for (const auto& [k, s] : t.ring.stems()) {
        os << "stem " << k << " " << s.group.free_rank() << " " << vec(s.group.torsion()) << "\n";
        for (const auto& n : s.generator_names)
            os << "gen " << n << "\n";
        emit_src(os, s.source);
    }
    for (const auto& p : t.ring.products()) {
        os << "prod " << p.left << " " << p.right << " -> " << p.degree << " " << vec(p.coeffs) << "\n";
        emit_src(os, p.source);
    }
    for (const auto& n : t.ring.names()) {
        os << "sname " << n.name << " " << n.degree << " " << vec(n.coeffs) << "\n";
        emit_src(os, n.source);
    }
    for (const auto& [key, e] : t.entries) {
        os << "group " << e.m << " " << e.q << " " << e.group.free_rank() << " " << vec(e.group.torsion()) << "\n";
        emit_src(os, e.source);
        for (const auto& g : e.generators) {
            os << "gen " << g.name << "\n";
            if (g.susp)
                os << "susp " << vec(*g.susp) << "\n";
            if (g.stab)
                os << "stab " << g.stab->degree << " " << vec(g.stab->coeffs) << "\n";
            for (const auto& [k, c] : g.gamma)
                os << "gamma " << k << " " << c.degree << " " << vec(c.coeffs) << "\n";
            if (g.antip)
                os << "antip " << vec(*g.antip) << "\n";
            emit_src(os, g.source);
        }
    }
    for (const auto& n : t.names) {
        os << "name " << n.name << " " << n.m << " " << n.q << " " << vec(n.coeffs) << "\n";
        emit_src(os, n.source);
    }
    return os.str();
}

}  // namespace nielsen
