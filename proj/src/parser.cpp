/*
   Copyright 2026 The gri Authors

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

#include "gri/parser.hpp"

#include <cctype>
#include <string>

namespace gri {

namespace {

using Kind = RatNode::Kind;

class Parser {
  public:
    Parser(std::string_view text, AmbientPtr ambient) : text_(text), ambient_(std::move(ambient)) {}

    RatExpr parse() {
        RatExpr e = expr();
        skip_space();
        if (pos_ < text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

  private:
    const AlgebraDescriptor& algebra() const { return *ambient_->algebra; }

    [[noreturn]] void error(const std::string& message) const { error_at(pos_, message); }

    [[noreturn]] void error_at(std::size_t at, const std::string& message) const {
        std::size_t line = 1, column = 1;
        for (std::size_t p = 0; p < at && p < text_.size(); ++p) {
            if (text_[p] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        fail(ErrorKind::ParseError,
             "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) {
            error(pos_ < text_.size() ? "expected '" + std::string(1, c) + "'"
                                      : "expected '" + std::string(1, c) + "' at end of input");
        }
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint32_t index(const std::string& d, std::size_t at) const {
        if (d.empty()) error_at(at, "expected digits");
        if (d.size() > 9) error_at(at, "index too large");
        return static_cast<std::uint32_t>(std::stoul(d));
    }

    // ------------------------------------------------------------ folding

    RatExpr constant(const Element& v) const { return RatExpr::constant(ambient_, v); }

    static bool is_const(const RatExpr& e) { return e.kind() == Kind::Const; }
    static const Element& value(const RatExpr& e) { return *e.node().value; }

    RatExpr make_sum(std::vector<RatExpr> terms) const {
        std::vector<RatExpr> out;
        for (auto& t : terms) {
            if (!out.empty() && is_const(out.back()) && is_const(t)) {
                out.back() = constant(value(out.back()) + value(t));
            } else {
                out.push_back(std::move(t));
            }
        }
        return RatExpr::sum(out);
    }

    RatExpr make_product(std::vector<RatExpr> factors) const {
        std::vector<RatExpr> out;
        for (auto& f : factors) {
            if (!out.empty() && is_const(out.back()) && is_const(f)) {
                out.back() = constant(value(out.back()) * value(f));
            } else {
                out.push_back(std::move(f));
            }
        }
        return RatExpr::product(out);
    }

    RatExpr make_neg(const RatExpr& e) const { return is_const(e) ? constant(-value(e)) : RatExpr::negate(e); }

    RatExpr make_inv(const RatExpr& e) const {
        if (is_const(e)) {
            if (auto inv = try_inverse(value(e))) return constant(*inv);
        }
        return RatExpr::inverse(e);
    }

    // ------------------------------------------------------------ grammar

    RatExpr expr() {
        std::vector<RatExpr> terms{term()};
        for (;;) {
            if (accept('+')) {
                terms.push_back(term());
            } else if (accept('-')) {
                terms.push_back(make_neg(term()));
            } else {
                break;
            }
        }
        return make_sum(std::move(terms));
    }

    RatExpr term() {
        std::vector<RatExpr> factors{factor()};
        while (accept('*')) factors.push_back(factor());
        return make_product(std::move(factors));
    }

    RatExpr factor() {
        skip_space();
        if (accept('-')) return make_neg(factor());
        if (text_.substr(pos_, 3) == "inv" && pos_ + 3 <= text_.size()) {
            const std::size_t save = pos_;
            pos_ += 3;
            if (accept('(')) {
                RatExpr inner = expr();
                expect(')');
                return postfix(make_inv(inner));
            }
            pos_ = save;
        }
        return postfix(atom());
    }

    RatExpr postfix(RatExpr e) {
        while (peek('^')) {
            const std::size_t at = pos_;
            ++pos_;
            if (text_.substr(pos_, 2) != "-1") error_at(at, "expected '^-1'");
            pos_ += 2;
            e = make_inv(e);
        }
        return e;
    }

    RatExpr atom() {
        skip_space();
        if (pos_ >= text_.size()) error("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatExpr inner = expr();
            expect(')');
            return inner;
        }
        if (c == '[') return constant(matrix_literal());
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        error("unexpected '" + std::string(1, c) + "'");
    }

    Element number() {
        const std::size_t start = pos_;
        std::string literal = digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::string den = digits();
            if (den.empty()) error("expected denominator");
            literal += "/" + den;
        }
        try {
            return algebra().from_scalar(algebra().field().parse(literal));
        } catch (const Error& e) {
            error_at(start, e.what());
        }
    }

    Scalar signed_scalar() {
        skip_space();
        const bool negative = accept('-');
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) error("expected a number");
        Scalar s = number()[0];
        return negative ? -s : s;
    }

    Element matrix_literal() {
        const std::size_t start = pos_;
        const std::size_t n = algebra().matrix_size();
        if (n == 0) error("matrix literal in a non-matrix algebra");
        expect('[');
        linalg::Matrix rows;
        do {
            expect('[');
            std::vector<Scalar> row{signed_scalar()};
            while (accept(',')) row.push_back(signed_scalar());
            expect(']');
            rows.push_back(std::move(row));
        } while (accept(','));
        expect(']');
        if (rows.size() != n) error_at(start, "matrix literal must have " + std::to_string(n) + " rows");
        for (const auto& row : rows) {
            if (row.size() != n) error_at(start, "matrix literal rows must have " + std::to_string(n) + " entries");
        }
        return algebra().from_matrix(rows);
    }

    RatExpr identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string word(text_.substr(start, pos_ - start));

        if (word.size() > 1 && word[0] == 'x' && word.find_first_not_of("0123456789", 1) == std::string::npos) {
            const std::uint32_t var = index(word.substr(1), start + 1);
            if (var == 0) error_at(start, "variable indices start at 1");
            std::uint32_t twist = 0;
            if (pos_ + 1 < text_.size() && text_[pos_] == '^' && text_[pos_ + 1] == 's') {
                pos_ += 2;
                const std::size_t at = pos_;
                twist = index(digits(), at);
            }
            return RatExpr::indeterminate(ambient_, var, twist);
        }
        if (auto label = algebra().label_index(word)) return constant(algebra().basis_element(*label));
        const std::size_t n = algebra().matrix_size();
        if (n > 0 && word.size() == 3 && word[0] == 'E' && std::isdigit(static_cast<unsigned char>(word[1])) &&
            std::isdigit(static_cast<unsigned char>(word[2]))) {
            const std::size_t r = word[1] - '0', c = word[2] - '0';
            if (r >= 1 && r <= n && c >= 1 && c <= n) return constant(algebra().matrix_unit(r, c));
        }
        error_at(start, "unknown identifier '" + word + "' in " + algebra().name());
    }

    std::string_view text_;
    AmbientPtr ambient_;
    std::size_t pos_ = 0;
};

}  // namespace

RatExpr parse_rational(std::string_view text, const AmbientPtr& ambient) { return Parser(text, ambient).parse(); }

Parsed parse_expression(std::string_view text, const AmbientPtr& ambient) {
    RatExpr e = parse_rational(text, ambient);
    if (auto poly = e.to_genpoly()) return *poly;
    return e;
}

Element parse_element(std::string_view text, const AlgebraPtr& algebra) {
    const RatExpr e = parse_rational(text, make_ambient(algebra));
    if (!e.variables().empty()) fail(ErrorKind::ParseError, "expected a constant, got '" + std::string(text) + "'");
    auto v = eval_rat(e, {});
    if (!v) fail(ErrorKind::NotInvertible, "constant '" + std::string(text) + "' inverts a non-invertible element");
    return *v;
}

}  // namespace gri
