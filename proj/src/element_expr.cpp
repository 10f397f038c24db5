#include "nielsen/element_expr.hpp"

#include <cctype>

namespace nielsen {

ExprError::ExprError(std::size_t column, const std::string& what)
    : std::runtime_error("column " + std::to_string(column) + ": " + what), column_(column)
{
}

namespace {

bool name_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool name_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

std::string group_label(int m, int q)
{
    return "pi_" + std::to_string(m) + "(S^" + std::to_string(q) + ")";
}

class Parser {
public:
    Parser(const TableSet& t, std::string_view text, std::size_t offset) : t_(t), s_(text), offset_(offset) {}

    SphereElement parse_all(int m, int q)
    {
        SphereElement x = expr(m, q);
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ExprError(offset_ + pos_ + 1, what); }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!eat(c))
            fail(std::string("expected '") + c + "'");
    }

    Int integer()
    {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && s_[pos_] == '-')
            ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        std::string digits(s_.substr(start, pos_ - start));
        if (digits.empty() || digits == "-") {
            pos_ = start;
            fail("expected an integer");
        }
        try {
            return std::stoll(digits);
        } catch (const std::exception&) {
            pos_ = start;
            fail("integer out of range");
        }
    }

    std::string name()
    {
        skip_ws();
        if (pos_ >= s_.size() || !name_start(s_[pos_]))
            fail("expected a name");
        std::size_t start = pos_;
        while (pos_ < s_.size() && name_char(s_[pos_]))
            ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    SphereElement expr(int m, int q)
    {
        SphereElement acc = term(m, q);
        while (eat('+'))
            acc = acc + term(m, q);
        return acc;
    }

    SphereElement term(int m, int q)
    {
        skip_ws();
        Int coeff = 1;
        if (pos_ < s_.size() && (s_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
            if (s_[pos_] == '-' && (pos_ + 1 >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
                ++pos_;
                coeff = -1;
            } else {
                coeff = integer();
                expect('*');
            }
        }
        return atom(m, q).scale(coeff);
    }

    SphereElement atom(int m, int q)
    {
        skip_ws();
        const std::size_t start = pos_;
        std::string id = name();
        auto lookup = [&]() {
            try {
                return t_.lookup(m, q);
            } catch (const OutOfTabulatedRange& e) {
                pos_ = start;
                fail(e.what());
            }
        };
        if (id == "susp" && eat('('))
            return suspension(m, q, start);
        if (id == "whitehead" && eat('(')) {
            Int k = integer();
            expect(')');
            return registered("whitehead(" + std::to_string(k) + ")", m, q, start);
        }
        if (id == "zero")
            return {m, q, lookup().group.zero()};
        if (id == "iota") {
            if (m != q) {
                pos_ = start;
                fail("iota lies in " + group_label(q, q) + ", expected " + group_label(m, q));
            }
            return {m, q, lookup().group.generator(0)};
        }
        if (t_.find_name(id))
            return registered(id, m, q, start);
        const SphereGroupEntry e = lookup();
        for (std::size_t i = 0; i < e.generators.size(); ++i)
            if (e.generators[i].name == id)
                return {m, q, e.group.generator(i)};
        pos_ = start;
        std::string avail;
        for (const auto& g : e.generators)
            avail += " " + g.name;
        fail("unknown name '" + id + "' in " + group_label(m, q) + "; generators:" + (avail.empty() ? " none" : avail));
    }

    SphereElement registered(const std::string& id, int m, int q, std::size_t start)
    {
        const NamedElementRecord* rec = t_.find_name(id);
        if (!rec) {
            pos_ = start;
            fail("unknown element '" + id + "'");
        }
        if (rec->m != m || rec->q != q) {
            pos_ = start;
            fail(id + " lies in " + group_label(rec->m, rec->q) + ", expected " + group_label(m, q));
        }
        return t_.named(id);
    }

    SphereElement suspension(int m, int q, std::size_t start)
    {
        // The inner expression is parsed once the suspension count is known.
        skip_ws();
        const std::size_t inner_start = pos_;
        int depth = 0;
        while (pos_ < s_.size() && !(depth == 0 && s_[pos_] == ',')) {
            if (s_[pos_] == '(')
                ++depth;
            else if (s_[pos_] == ')') {
                if (depth == 0)
                    break;
                --depth;
            }
            ++pos_;
        }
        const std::size_t inner_end = pos_;
        expect(',');
        Int k = integer();
        expect(')');
        if (k < 0 || k > m || k > q) {
            pos_ = start;
            fail("invalid suspension count " + std::to_string(k));
        }
        Parser inner(t_, s_.substr(inner_start, inner_end - inner_start), offset_ + inner_start);
        SphereElement x = inner.parse_all(m - static_cast<int>(k), q - static_cast<int>(k));
        Partial<SphereElement> y = nielsen::suspend(t_, x, static_cast<int>(k));
        if (!y.is_known()) {
            pos_ = start;
            fail(y.reason);
        }
        return *y;
    }

    const TableSet& t_;
    std::string_view s_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace

SphereElement parse_element(const TableSet& t, int m, int q, std::string_view text)
{
    return Parser(t, text, 0).parse_all(m, q);
}

}  // namespace nielsen
