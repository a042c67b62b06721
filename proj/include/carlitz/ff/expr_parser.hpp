/*
   Copyright 2026 The carlitz-shtuka Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CARLITZ_FF_EXPR_PARSER_HPP
#define CARLITZ_FF_EXPR_PARSER_HPP

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "carlitz/errors.hpp"

namespace carlitz::ff {

/// Recursive-descent parser for `+ - * ^ ( )` expressions with integer
/// literals and single-letter variables, evaluated in an arbitrary ring.
///
/// The ring is described by callbacks so that the same grammar serves
/// field elements, polynomials in t, Laurent polynomials and the bivariate
/// curve equations.
template <class R>
struct RingOps {
    std::function<R(long long)> from_int;
    std::function<R(char)> variable;  // throws ParseError for unknown names
    std::function<R(const R&, const R&)> add;
    std::function<R(const R&, const R&)> sub;
    std::function<R(const R&, const R&)> mul;
    std::function<R(const R&)> neg;
    std::function<R(const R&, long long)> pow;  // exponent may be negative for invertible variables
    std::function<R(const R&, const R&)> div;   // optional
};

template <class R>
class ExprParser {
public:
    ExprParser(std::string_view text, const RingOps<R>& ops) : ops_(ops) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
    }

    R parse() {
        if (s_.empty()) throw ParseError("empty expression");
        R r = expr();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

    R expr() {
        R acc = [&] {
            if (peek('-')) {
                ++pos_;
                return ops_.neg(term());
            }
            if (peek('+')) ++pos_;
            return term();
        }();
        while (peek('+') || peek('-')) {
            const char op = s_[pos_++];
            R rhs = term();
            acc = op == '+' ? ops_.add(acc, rhs) : ops_.sub(acc, rhs);
        }
        return acc;
    }

    R term() {
        R acc = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = ops_.mul(acc, power());
            } else if (peek('/')) {
                ++pos_;
                if (!ops_.div) fail("division is not allowed here");
                acc = ops_.div(acc, power());
            } else if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                acc = ops_.mul(acc, power());  // implicit product such as 2t or 3(t+1)
            } else {
                break;
            }
        }
        return acc;
    }

    R power() {
        R base = atom();
        if (peek('^')) {
            ++pos_;
            long long sign = 1;
            if (peek('-')) {
                sign = -1;
                ++pos_;
            }
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
            long long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return ops_.pow(base, sign * e);
        }
        return base;
    }

    R atom() {
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            R r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_] - '0');
                if (v > 1'000'000'000LL) fail("integer literal too large");
                ++pos_;
            }
            return ops_.from_int(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            return ops_.variable(c);
        }
        fail("unexpected character");
    }

    const RingOps<R>& ops_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace carlitz::ff

#endif  // CARLITZ_FF_EXPR_PARSER_HPP
