#include "kpalg/expr.hpp"

#include "kpalg/error.hpp"

#include <cctype>

namespace kpalg {

namespace {

constexpr unsigned max_exponent = 4096;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    RationalFunction parse()
    {
        skip_space();
        if (at_end())
            throw ParseError(pos_, "empty expression");
        RationalFunction out = expr();
        skip_space();
        if (!at_end())
            throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
        return out;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (!at_end() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr()
    {
        RationalFunction acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    RationalFunction term()
    {
        RationalFunction acc = unary();
        while (true) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                skip_space();
                const std::size_t at = pos_;
                RationalFunction rhs = unary();
                if (rhs.is_zero())
                    throw Error(ErrorCode::division_by_zero, "division by zero at offset " + std::to_string(at));
                acc /= rhs;
            } else {
                return acc;
            }
        }
    }

    RationalFunction unary()
    {
        if (accept('-'))
            return -unary();
        return factor();
    }

    RationalFunction factor()
    {
        RationalFunction b = base();
        if (accept('^')) {
            skip_space();
            const std::size_t at = pos_;
            mpz_class e = digits();
            if (e > max_exponent)
                throw ParseError(at, "exponent too large");
            return b.pow(e.get_si());
        }
        return b;
    }

    RationalFunction base()
    {
        skip_space();
        if (at_end())
            throw ParseError(pos_, "unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expr();
            if (!accept(')'))
                throw ParseError(pos_, "expected ')'");
            return inner;
        }
        if (c == 'x' || c == 'y' || c == 'i') {
            ++pos_;
            if (!at_end() && std::isalnum(static_cast<unsigned char>(src_[pos_])))
                throw ParseError(pos_, "unexpected identifier character");
            if (c == 'x')
                return RationalFunction::x();
            if (c == 'y')
                return RationalFunction::y();
            return RationalFunction(GaussianRational::i());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return RationalFunction(GaussianRational(mpq_class(digits())));
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    mpz_class digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (start == pos_)
            throw ParseError(pos_, "expected unsigned integer");
        if (!at_end() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
            throw ParseError(pos_, "implicit multiplication is not allowed");
        return mpz_class(std::string(src_.substr(start, pos_ - start)));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// re < 0, or re = 0 and im < 0.
bool negative_ish(const GaussianRational& c)
{
    return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

bool mixed(const GaussianRational& c)
{
    return sgn(c.re()) != 0 && sgn(c.im()) != 0;
}

std::string imaginary_text(const mpq_class& im)
{
    if (im == 1)
        return "i";
    if (im == -1)
        return "-i";
    return im.get_str() + "*i";
}

std::string monomial_text(const Monomial& m)
{
    std::string out;
    auto append = [&out](char var, unsigned e) {
        if (e == 0)
            return;
        if (!out.empty())
            out += '*';
        out += var;
        if (e > 1)
            out += '^' + std::to_string(e);
    };
    append('x', m.dx);
    append('y', m.dy);
    return out;
}

// Coefficient prefix for a monomial with a coefficient that is not negative-ish.
std::string coefficient_prefix(const GaussianRational& c)
{
    if (c.is_one())
        return "";
    if (mixed(c))
        return "(" + format_constant(c) + ")*";
    return format_constant(c) + "*";
}

} // namespace

RationalFunction parse_expr(std::string_view source)
{
    return Parser(source).parse();
}

GaussianRational parse_constant(std::string_view source)
{
    RationalFunction f = parse_expr(source);
    if (!f.is_constant())
        throw Error(ErrorCode::invalid_argument, "expected a constant expression, got '" + std::string(source) + "'");
    return f.constant_value();
}

std::string format_constant(const GaussianRational& c)
{
    if (c.is_real())
        return c.re().get_str();
    if (sgn(c.re()) == 0)
        return imaginary_text(c.im());
    std::string out = c.re().get_str();
    if (sgn(c.im()) < 0)
        out += " - " + imaginary_text(-c.im());
    else
        out += " + " + imaginary_text(c.im());
    return out;
}

std::string format_polynomial(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    if (p.is_constant())
        return format_constant(p.constant_term());
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        const GaussianRational& c = it->second;
        const bool negative = negative_ish(c);
        const GaussianRational magnitude = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (m == Monomial{}) {
            out += mixed(magnitude) ? "(" + format_constant(magnitude) + ")" : format_constant(magnitude);
        } else {
            out += coefficient_prefix(magnitude) + monomial_text(m);
        }
        first = false;
    }
    return out;
}

std::string format_expr(const RationalFunction& f)
{
    std::string num = format_polynomial(f.num());
    if (f.den() == Polynomial(1))
        return num;
    if (f.num().size() > 1 || (f.num().is_constant() && mixed(f.num().constant_term())))
        num = "(" + num + ")";
    std::string den = format_polynomial(f.den());
    const bool bare_power = f.den().is_monomial() && f.den().leading_coefficient().is_one()
                            && (f.den().leading_monomial().dx == 0 || f.den().leading_monomial().dy == 0);
    if (!bare_power)
        den = "(" + den + ")";
    return num + "/" + den;
}

} // namespace kpalg
