#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hallwc/bigrational.hpp"
#include "hallwc/errors.hpp"

namespace hallwc {

/// Recursive-descent parser for the shared arithmetic grammar
///
///   expr   := [+-] term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := base ('^' [+-]int)?
///   base   := int | atom | '(' expr ')'
///
/// `Ring` supplies the value semantics:
///   T from_int(const BigInt&); T add(T, T); T sub(T, T); T mul(T, T);
///   T div(T, T, std::size_t pos); T pow(T, long, std::size_t pos); T neg(T);
///   std::optional<T> atom(std::string_view text, std::size_t& pos);
/// `atom` consumes input on success and leaves `pos` untouched otherwise.
template <class Ring>
class ExprParser {
public:
    using T = decltype(std::declval<Ring&>().from_int(BigInt{}));

    ExprParser(Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

    T parse() {
        T v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    T expr() {
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        T acc = term();
        if (negate) acc = ring_.neg(std::move(acc));
        for (;;) {
            if (accept('+')) acc = ring_.add(std::move(acc), term());
            else if (accept('-')) acc = ring_.sub(std::move(acc), term());
            else return acc;
        }
    }

    T term() {
        T acc = factor();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('*')) acc = ring_.mul(std::move(acc), factor());
            else if (accept('/')) acc = ring_.div(std::move(acc), factor(), at);
            else return acc;
        }
    }

    T factor() {
        T b = base();
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('^')) return b;
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", pos_);
        if (pos_ - start > 6) throw ParseError("exponent too large", start);
        long e = std::stol(std::string(text_.substr(start, pos_ - start)));
        return ring_.pow(std::move(b), negate ? -e : e, at);
    }

    T base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ring_.from_int(BigInt(std::string(text_.substr(start, pos_ - start)), 10));
        }
        if (c == '(') {
            ++pos_;
            T v = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (auto a = ring_.atom(text_, pos_)) return std::move(*a);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    Ring& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace hallwc
