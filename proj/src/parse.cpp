#include "levo/parse.hpp"

#include <cctype>

#include "levo/errors.hpp"

namespace levo {

namespace {

class Parser {
public:
    Parser(const std::string& s, const Ring& r) : s_(s), ring_(r) {}

    Polynomial run() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("cannot parse polynomial \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " +
                         what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial p = product();
        for (;;) {
            if (eat('+')) p += product();
            else if (eat('-')) p -= product();
            else return p;
        }
    }

    Polynomial product() {
        Polynomial p = unary();
        for (;;) {
            if (eat('*')) {
                p = p * unary();
            } else if (eat('/')) {
                Polynomial d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                p *= mpq_class(1 / d.constant_coeff());
            } else {
                return p;
            }
        }
    }

    Polynomial unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            unsigned long k = std::stoul(s_.substr(start, pos_ - start));
            if (k > 10000) fail("exponent too large");
            return base.pow(static_cast<unsigned>(k));
        }
        return base;
    }

    Polynomial primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Polynomial::constant(ring_, mpq_class(mpz_class(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int i = ring_->index(name);
            if (i < 0) fail("unknown variable '" + name + "'");
            return Polynomial::variable(ring_, i);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const Ring& ring) {
    return Parser(text, ring).run();
}

}  // namespace levo
