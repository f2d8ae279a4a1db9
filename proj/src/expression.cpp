#include "cmspace/expression.hpp"

#include "cmspace/errors.hpp"
#include "cmspace/hurwitz.hpp"

#include <cctype>
#include <string>

namespace cmspace {

namespace {

class Parser {
public:
    Parser(std::string_view text, long precision_bits) : text_(text), wp_(precision_bits) {}

    BigFloat parse() {
        BigFloat value = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw UsageError("cannot parse expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                         ": " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char ch) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch) {
        if (!accept(ch)) {
            fail(std::string("expected '") + ch + "'");
        }
    }

    bool accept_word(std::string_view word) {
        skip_space();
        if (text_.substr(pos_, word.size()) == word) {
            const std::size_t end = pos_ + word.size();
            if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) {
                return false;
            }
            pos_ = end;
            return true;
        }
        return false;
    }

    long integer() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            ++pos_;
        }
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        const std::string digits(text_.substr(start, pos_ - start));
        try {
            std::size_t used = 0;
            const long value = std::stol(digits, &used);
            if (used == digits.size()) {
                return value;
            }
        } catch (const std::exception&) {
        }
        pos_ = start;
        fail("expected an integer");
    }

    BigFloat expr() {
        BigFloat value = term();
        for (;;) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    BigFloat term() {
        BigFloat value = unary();
        for (;;) {
            if (accept('*')) {
                value *= unary();
            } else if (accept('/')) {
                const BigFloat divisor = unary();
                if (divisor.is_zero()) {
                    fail("division by zero");
                }
                value /= divisor;
            } else {
                return value;
            }
        }
    }

    BigFloat unary() {
        if (accept('-')) {
            return -unary();
        }
        return power();
    }

    BigFloat power() {
        BigFloat base = atom();
        if (accept('^')) {
            const long e = integer();
            if (e < 0) {
                if (base.is_zero()) {
                    fail("zero to a negative power");
                }
                return BigFloat(1L, wp_) / pow(base, static_cast<unsigned long>(-e));
            }
            return pow(base, static_cast<unsigned long>(e));
        }
        return base;
    }

    BigFloat atom() {
        if (accept('(')) {
            BigFloat inner = expr();
            expect(')');
            return inner;
        }
        if (accept_word("pi")) {
            return pi(wp_);
        }
        if (accept_word("sqrt")) {
            expect('(');
            BigFloat inner = expr();
            expect(')');
            if (inner.sign() < 0) {
                fail("square root of a negative number");
            }
            return sqrt(inner);
        }
        if (accept_word("zeta")) {
            expect('(');
            const long k = integer();
            long a = 1;
            long q = 1;
            if (accept(',')) {
                a = integer();
                expect('/');
                q = integer();
            }
            expect(')');
            return hurwitz_zeta(k, a, q, wp_);
        }
        return number();
    }

    BigFloat number() {
        skip_space();
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
        };
        digits();
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ > start && pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            const std::size_t mark = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                ++pos_;
            }
            const std::size_t exp_start = pos_;
            digits();
            if (pos_ == exp_start) {
                pos_ = mark;
            }
        }
        if (pos_ == start) {
            fail("expected a number, pi, zeta(...) or sqrt(...)");
        }
        return BigFloat::from_decimal(text_.substr(start, pos_ - start), wp_);
    }

    std::string_view text_;
    long wp_;
    std::size_t pos_ = 0;
};

}  // namespace

BigFloat evaluate_expression(std::string_view text, long precision_bits) {
    require_precision(precision_bits);
    return Parser(text, precision_bits + kGuardBits).parse();
}

}  // namespace cmspace
