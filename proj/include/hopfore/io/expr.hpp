/*
   Copyright 2026 The hopfore Authors

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

/*
   Ring expressions over module labels:

     expr   := ["-"] term (("+"|"-") term)*
     term   := factor ("*" factor)*
     factor := atom ("^" uint)?
     atom   := int | ident | ident "[" cyclo "]" | label | "(" expr ")"
     label  := "V" "[" uint "]" "(" simple (";" cyclo)? ")"

   In dihedral mode x, y, z stand for V[1](1), V[2](eps), V[3](eps), and
   w[b], y[b] for V[1](eps;b). A bare simple name such as lam is V[1](lam).
*/

#ifndef HOPFORE_IO_EXPR_HPP
#define HOPFORE_IO_EXPR_HPP

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hopfore/greenring/ring.hpp"

namespace hopfore {

struct LabelExpr {
    enum class Op { Int, Atom, Neg, Add, Sub, Mul, Pow };
    Op op = Op::Int;
    long value = 0;           ///< Int literal, or exponent for Pow
    std::string spelling;     ///< Atom as written: an alias name or a full label
    IndecLabel label;         ///< Atom after alias resolution
    std::vector<std::shared_ptr<const LabelExpr>> args;
};

using ExprPtr = std::shared_ptr<const LabelExpr>;

namespace detail {

class ExprParser {
   public:
    ExprParser(std::string_view src, const AlgebraData& alg) : src_(src), alg_(alg) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

   private:
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw Error(ErrorKind::SyntaxError, msg + " at position " + std::to_string(at) + " in '" + std::string(src_) + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    static ExprPtr node(LabelExpr::Op op, std::vector<ExprPtr> args, long value = 0) {
        auto e = std::make_shared<LabelExpr>();
        e->op = op;
        e->args = std::move(args);
        e->value = value;
        return e;
    }

    long uint_literal() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected unsigned integer");
        const std::string digits(src_.substr(start, pos_ - start));
        if (digits.size() > 18) fail("integer literal too large", start);
        return std::stol(digits);
    }

    std::string identifier() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    // Text up to the closing delimiter at nesting depth zero.
    std::string_view enclosed(char close) {
        const std::size_t start = pos_;
        int depth = 0;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '(' || c == '[') ++depth;
            if (c == ')' || c == ']') {
                if (depth == 0) break;
                --depth;
            }
            ++pos_;
        }
        if (pos_ >= src_.size() || src_[pos_] != close) fail(std::string("expected '") + close + "'");
        return src_.substr(start, pos_ - start);
    }

    Cyclotomic cyclo(char close) {
        skip();
        const std::size_t start = pos_;
        const std::string_view text = enclosed(close);
        try {
            return parse_cyclotomic(text, alg_.field_order());
        } catch (const Error& e) {
            fail(std::string("bad scalar: ") + e.what(), start);
        }
    }

    SimpleIndex simple_name(std::size_t at) {
        const std::string name = identifier();
        if (name.empty()) fail("expected simple module name");
        auto i = alg_.find(name);
        if (!i) throw Error(ErrorKind::UnknownLabel, "unknown simple '" + name + "' at position " + std::to_string(at));
        return *i;
    }

    ExprPtr atom_node(const IndecLabel& L, std::string spelling, std::size_t at) {
        if (!L.is_nil() && L.beta.is_zero())
            fail("beta = 0 does not name an eigen module; write V[" + std::to_string(L.t * alg_.s()) + "](" + alg_.name(L.i) + ") instead", at);
        check_label(alg_, L);
        auto e = std::make_shared<LabelExpr>();
        e->op = LabelExpr::Op::Atom;
        e->label = L;
        e->spelling = std::move(spelling);
        return e;
    }

    ExprPtr expr() {
        ExprPtr acc;
        if (eat('-'))
            acc = node(LabelExpr::Op::Neg, {term()});
        else
            acc = term();
        while (true) {
            if (eat('+'))
                acc = node(LabelExpr::Op::Add, {acc, term()});
            else if (eat('-'))
                acc = node(LabelExpr::Op::Sub, {acc, term()});
            else
                return acc;
        }
    }

    ExprPtr term() {
        ExprPtr acc = factor();
        while (eat('*')) acc = node(LabelExpr::Op::Mul, {acc, factor()});
        return acc;
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (eat('^')) return node(LabelExpr::Op::Pow, {base}, uint_literal());
        return base;
    }

    ExprPtr atom() {
        skip();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        const std::size_t at = pos_;
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return node(LabelExpr::Op::Int, {}, uint_literal());
        const std::string name = identifier();
        if (name.empty()) fail("unexpected '" + std::string(1, c) + "'");
        if (name == "V" && peek('[')) return label(at);

        const bool dihedral = alg_.dihedral_m().has_value();
        if (dihedral && (name == "w" || name == "y") && peek('[')) {
            expect('[');
            const Cyclotomic beta = cyclo(']');
            expect(']');
            const SimpleIndex eps = alg_.trivial();
            return atom_node(IndecLabel::eig(1, eps, beta), name + "[" + beta.to_string() + "]", at);
        }
        if (dihedral && name == "x") return atom_node(IndecLabel::nil(1, *alg_.find("1")), name, at);
        if (dihedral && name == "y") return atom_node(IndecLabel::nil(2, alg_.trivial()), name, at);
        if (dihedral && name == "z") return atom_node(IndecLabel::nil(3, alg_.trivial()), name, at);
        if (auto i = alg_.find(name)) return atom_node(IndecLabel::nil(1, *i), name, at);
        throw Error(ErrorKind::UnknownLabel, "unknown name '" + name + "' at position " + std::to_string(at));
    }

    ExprPtr label(std::size_t at) {
        expect('[');
        const long t = uint_literal();
        expect(']');
        expect('(');
        skip();
        const SimpleIndex i = simple_name(pos_);
        IndecLabel L = IndecLabel::nil(static_cast<int>(t), i);
        if (eat(';')) L = IndecLabel::eig(static_cast<int>(t), i, cyclo(')'));
        expect(')');
        if (t < 1) fail("module length must be positive", at);
        return atom_node(L, format_label(alg_, L), at);
    }

    std::string_view src_;
    const AlgebraData& alg_;
    std::size_t pos_ = 0;
};

inline int precedence(const LabelExpr& e) {
    switch (e.op) {
        case LabelExpr::Op::Add:
        case LabelExpr::Op::Sub:
        case LabelExpr::Op::Neg:
            return 1;
        case LabelExpr::Op::Mul:
            return 2;
        case LabelExpr::Op::Pow:
            return 3;
        default:
            return 4;
    }
}

}  // namespace detail

inline ExprPtr parse_expr(std::string_view src, const AlgebraData& alg) { return detail::ExprParser(src, alg).parse(); }

/// Prints with minimal parentheses; parse_expr of the result gives the same tree.
inline std::string print_expr(const LabelExpr& e) {
    auto wrap = [](const LabelExpr& child, int min_prec) {
        const std::string s = print_expr(child);
        return detail::precedence(child) < min_prec ? "(" + s + ")" : s;
    };
    switch (e.op) {
        case LabelExpr::Op::Int:
            return std::to_string(e.value);
        case LabelExpr::Op::Atom:
            return e.spelling;
        case LabelExpr::Op::Neg:
            return "-" + wrap(*e.args[0], 2);
        case LabelExpr::Op::Add:
            return print_expr(*e.args[0]) + " + " + wrap(*e.args[1], 2);
        case LabelExpr::Op::Sub:
            return print_expr(*e.args[0]) + " - " + wrap(*e.args[1], 2);
        case LabelExpr::Op::Mul:
            return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
        case LabelExpr::Op::Pow:
            return wrap(*e.args[0], 4) + "^" + std::to_string(e.value);
    }
    return {};
}

/// Evaluates in the Green ring (IndecLabel) or the Grothendieck ring (SimpleLabel).
template <class Label>
RingElement<Label> evaluate_expr(const LabelExpr& e, const AlgebraPtr& alg) {
    using E = RingElement<Label>;
    switch (e.op) {
        case LabelExpr::Op::Int:
            return E::integer(alg, e.value);
        case LabelExpr::Op::Atom:
            if constexpr (std::is_same_v<Label, IndecLabel>)
                return E::basis(alg, e.label);
            else
                return to_groth(GreenElement::basis(alg, e.label));
        case LabelExpr::Op::Neg:
            return -evaluate_expr<Label>(*e.args[0], alg);
        case LabelExpr::Op::Add:
            return evaluate_expr<Label>(*e.args[0], alg) + evaluate_expr<Label>(*e.args[1], alg);
        case LabelExpr::Op::Sub:
            return evaluate_expr<Label>(*e.args[0], alg) - evaluate_expr<Label>(*e.args[1], alg);
        case LabelExpr::Op::Mul:
            return evaluate_expr<Label>(*e.args[0], alg) * evaluate_expr<Label>(*e.args[1], alg);
        case LabelExpr::Op::Pow:
            return evaluate_expr<Label>(*e.args[0], alg).pow(static_cast<unsigned long>(e.value));
    }
    throw Error(ErrorKind::InternalInconsistency, "unhandled expression node");
}

/// A single label, e.g. "V[2](eps;1/2)" or an alias such as "z".
inline IndecLabel parse_label(std::string_view src, const AlgebraData& alg) {
    ExprPtr e = parse_expr(src, alg);
    if (e->op != LabelExpr::Op::Atom) throw Error(ErrorKind::SyntaxError, "expected a single module label, got '" + std::string(src) + "'");
    return e->label;
}

}  // namespace hopfore

#endif
