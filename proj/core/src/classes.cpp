#include <powerstruct/classes.hpp>

#include <powerstruct/errors.hpp>

#include <cctype>
#include <vector>

namespace powerstruct {

MotivicClass projective_space(unsigned n)
{
    std::vector<MotivicClass::term_type> terms;
    for (unsigned i = 0; i <= n; ++i) terms.emplace_back(Rational(i), Integer(1));
    return MotivicClass::from_terms(std::move(terms));
}

namespace {

std::string power_suffix(const char *var, const Rational &e)
{
    if (e == Rational(1)) return var;
    if (e.is_integer() && e.num() > 0) return std::string(var) + "^" + std::to_string(e.num());
    std::string inner = e.is_integer() ? std::to_string(e.num()) : std::to_string(e.num()) + "/" + std::to_string(e.den());
    return std::string(var) + "^{" + inner + "}";
}

// Appends one signed term; `body` is empty for a constant term.
void append_term(std::string &out, const Integer &c, const std::string &body)
{
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (negative) {
        out += '-';
    } else if (!out.empty()) {
        out += '+';
    }
    if (body.empty()) {
        out += mag.get_str();
    } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += body;
    }
}

class ClassParser {
public:
    explicit ClassParser(std::string_view text) : text_(text) {}

    MotivicClass parse()
    {
        std::vector<MotivicClass::term_type> terms;
        skip_ws();
        if (at_end()) fail("empty class literal");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            terms.push_back(term(sign));
            first = false;
            skip_ws();
        }
        return MotivicClass::from_terms(std::move(terms));
    }

private:
    MotivicClass::term_type term(int sign)
    {
        Integer coeff = 1;
        bool have_coeff = false;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Integer(digits());
            have_coeff = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (at_end() || peek() != 'L') fail("expected 'L' after '*'");
            }
        }
        Rational exponent(0);
        if (!at_end() && peek() == 'L') {
            ++pos_;
            exponent = Rational(1);
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                exponent = power();
            }
        } else if (!have_coeff) {
            fail("expected integer or 'L'");
        }
        if (sign < 0) coeff = -coeff;
        return {exponent, coeff};
    }

    Rational power()
    {
        if (at_end()) fail("missing exponent");
        const char open = peek();
        if (open == '{' || open == '(') {
            const char close = open == '{' ? '}' : ')';
            ++pos_;
            const auto end = text_.find(close, pos_);
            if (end == std::string_view::npos) fail("unterminated exponent");
            const auto inner = text_.substr(pos_, end - pos_);
            pos_ = end + 1;
            return Rational::parse(inner);
        }
        std::string s;
        if (peek() == '-' || peek() == '+') s += text_[pos_++];
        skip_ws();
        s += digits();
        return Rational::parse(s);
    }

    std::string digits()
    {
        std::string s;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) s += text_[pos_++];
        if (s.empty()) fail("expected digits");
        return s;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError("class literal '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(const MotivicClass &a)
{
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto &[e, c] : a.terms()) append_term(out, c, e.is_zero() ? std::string{} : power_suffix("L", e));
    return out;
}

std::string to_string(const EPolynomial &p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto &[e, c] : p.terms()) {
        std::string body;
        if (!e.u.is_zero()) body = power_suffix("u", e.u);
        if (!e.v.is_zero()) body += (body.empty() ? "" : "*") + power_suffix("v", e.v);
        append_term(out, c, body);
    }
    return out;
}

MotivicClass parse_class(std::string_view text) { return ClassParser(text).parse(); }

} // namespace powerstruct
