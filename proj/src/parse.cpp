#include "sodlab/parse.hpp"

#include <cctype>

namespace sodlab {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarSpecPtr& vars) : text_(text), vars_(vars) {}

    QPoly parse() {
        QPoly result = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned exponent() {
        std::string d = digits();
        if (d.size() > 4) fail("exponent too large");
        return static_cast<unsigned>(std::stoul(d));
    }

    QPoly expr() {
        skip_space();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        QPoly acc = term();
        if (negate) acc = -acc;
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    QPoly term() {
        QPoly acc = factor();
        while (accept('*')) acc *= factor();
        return acc;
    }

    QPoly factor() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
        if (accept('(')) {
            QPoly inner = expr();
            if (!accept(')')) fail("expected ')'");
            if (accept('^')) inner = inner.pow(exponent());
            return inner;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    QPoly rational() {
        mpz_class num(digits());
        mpz_class den(1);
        std::size_t save = pos_;
        if (accept('/')) {
            skip_space();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = save;
                fail("malformed rational: expected positive denominator");
            }
            den = mpz_class(digits());
            if (den == 0) fail("malformed rational: zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return QPoly::constant(vars_, q);
    }

    QPoly identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        int index = vars_->index_of(name);
        if (index < 0) {
            pos_ = start;
            fail("undeclared identifier '" + name + "'");
        }
        QPoly v = QPoly::variable(vars_, static_cast<std::size_t>(index));
        if (accept('^')) v = v.pow(exponent());
        return v;
    }

    std::string_view text_;
    const VarSpecPtr& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text, const VarSpecPtr& vars) {
    return Parser(text, vars).parse();
}

}  // namespace sodlab
