#include <monpow/io.hpp>

#include <cctype>
#include <charconv>
#include <vector>

namespace monpow
{

namespace
{

class parser
{
public:
    explicit parser(std::string_view text) : m_text(text) {}

    monomial_ideal run()
    {
        skip_space(true);
        std::vector<monomial> gens = peek() == '[' ? pair_list() : term_list();
        skip_space(true);
        if (!done()) {
            fail("unexpected trailing input");
        }
        if (gens.empty()) {
            fail("no generators");
        }
        return minimalize(std::move(gens));
    }

private:
    bool done() const
    {
        return m_pos >= m_text.size();
    }
    char peek() const
    {
        return done() ? '\0' : m_text[m_pos];
    }
    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error(what, m_pos);
    }

    void skip_space(bool newlines)
    {
        while (!done()) {
            const char c = m_text[m_pos];
            if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                ++m_pos;
            } else {
                break;
            }
        }
    }

    void expect(char c)
    {
        skip_space(true);
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++m_pos;
    }

    exponent number()
    {
        skip_space(false);
        const char *first = m_text.data() + m_pos;
        const char *last = m_text.data() + m_text.size();
        exponent value = 0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) {
            fail("exponent out of range");
        }
        if (ec != std::errc() || ptr == first) {
            fail("expected a non-negative integer");
        }
        m_pos += static_cast<std::size_t>(ptr - first);
        return value;
    }

    std::vector<monomial> pair_list()
    {
        std::vector<monomial> gens;
        expect('[');
        skip_space(true);
        if (peek() == ']') {
            ++m_pos;
            return gens;
        }
        while (true) {
            expect('(');
            const auto a = number();
            expect(',');
            const auto b = number();
            expect(')');
            gens.push_back({a, b});
            skip_space(true);
            if (peek() == ',') {
                ++m_pos;
                continue;
            }
            expect(']');
            return gens;
        }
    }

    static bool is_separator(char c)
    {
        return c == ';' || c == ',' || c == '+' || c == '\n';
    }

    std::vector<monomial> term_list()
    {
        skip_space(true);
        const bool paren = peek() == '(';
        if (paren) {
            ++m_pos;
        }
        std::vector<monomial> gens;
        while (true) {
            skip_space(true);
            gens.push_back(term());
            skip_space(false);
            if (!done() && is_separator(peek())) {
                ++m_pos;
                // Allow a trailing separator before the end or a newline run.
                skip_space(true);
                if (done() || (paren && peek() == ')')) {
                    break;
                }
                continue;
            }
            break;
        }
        if (paren) {
            expect(')');
        }
        return gens;
    }

    monomial term()
    {
        monomial m;
        bool any = false;
        while (true) {
            skip_space(false);
            const char c = peek();
            if (c == 'x' || c == 'y') {
                ++m_pos;
                exponent e = 1;
                skip_space(false);
                if (peek() == '^') {
                    ++m_pos;
                    e = number();
                }
                (c == 'x' ? m.a : m.b) = checked_add(c == 'x' ? m.a : m.b, e);
                any = true;
            } else if (c == '1' && !any) {
                const auto pos = m_pos;
                if (number() != 1) {
                    m_pos = pos;
                    fail("only the constant 1 is allowed");
                }
                any = true;
            } else {
                break;
            }
            skip_space(false);
            if (peek() == '*') {
                ++m_pos;
                skip_space(false);
                if (peek() != 'x' && peek() != 'y') {
                    fail("expected 'x' or 'y' after '*'");
                }
            }
        }
        if (!any) {
            fail("expected a monomial");
        }
        return m;
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace

monomial_ideal parse_ideal(std::string_view text)
{
    return parser(text).run();
}

std::string to_pairs(const monomial_ideal &i)
{
    std::string out = "[";
    for (std::size_t k = 0; k < i.size(); ++k) {
        if (k) {
            out += ',';
        }
        out += '(' + std::to_string(i[k].a) + ',' + std::to_string(i[k].b) + ')';
    }
    return out + ']';
}

std::string to_term(const monomial &m)
{
    if (m == monomial{}) {
        return "1";
    }
    std::string out;
    auto var = [&out](char v, exponent e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += v;
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    };
    var('x', m.a);
    var('y', m.b);
    return out;
}

std::string to_terms(const monomial_ideal &i)
{
    std::string out;
    for (std::size_t k = 0; k < i.size(); ++k) {
        if (k) {
            out += ", ";
        }
        out += to_term(i[k]);
    }
    return out;
}

} // namespace monpow
