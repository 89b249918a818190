// Copyright 2026 The qseqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qseq/qasm/parser.hpp"

#include <charconv>
#include <set>
#include <string>

#include "qseq/gate.hpp"
#include "qseq/qasm/lexer.hpp"

namespace qseq::qasm {

namespace {

const std::set<std::string, std::less<>> kUnsupportedKeywords = {
    "gate",   "def",   "defcal", "cal",      "opaque", "let",      "const",  "int",       "uint",
    "float",  "angle", "bool",   "complex",  "duration", "stretch", "box",   "delay",     "break",
    "continue", "return", "input", "output", "qreg",  "creg",     "extern", "array",     "pragma",
    "end",    "inv",   "pow",    "negctrl",  "durationof", "sizeof", "defcalgrammar", "true", "false"};

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Program program() {
        Program p;
        while (!at_end()) {
            p.statements.push_back(statement());
        }
        return p;
    }

  private:
    std::vector<Token> tokens_;
    std::size_t at_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        return tokens_[std::min(at_ + ahead, tokens_.size() - 1)];
    }
    bool at_end() const { return peek().kind == TokenKind::End; }
    Token next() {
        Token t = peek();
        if (!at_end()) ++at_;
        return t;
    }
    bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
        return peek(ahead).kind == TokenKind::Symbol && peek(ahead).text == s;
    }
    bool is_word(std::string_view s, std::size_t ahead = 0) const {
        return peek(ahead).kind == TokenKind::Identifier && peek(ahead).text == s;
    }
    bool accept(std::string_view sym) {
        if (is_symbol(sym)) {
            ++at_;
            return true;
        }
        return false;
    }

    static std::string describe(const Token& t) {
        switch (t.kind) {
            case TokenKind::End: return "end of input";
            case TokenKind::String: return "string \"" + t.text + "\"";
            default: return "'" + t.text + "'";
        }
    }

    [[noreturn]] void syntax(const std::string& expected) const {
        fail(code::kSyntax, "expected " + expected + ", found " + describe(peek()), peek().pos);
    }

    void expect(std::string_view sym, const char* context) {
        if (!accept(sym)) {
            syntax("'" + std::string(sym) + "' " + context);
        }
    }

    std::string identifier(const char* what) {
        if (peek().kind != TokenKind::Identifier) {
            syntax(what);
        }
        return next().text;
    }

    std::uint64_t integer(const char* what) {
        if (peek().kind != TokenKind::Integer) {
            syntax(what);
        }
        Token t = next();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
            fail(code::kSyntax, "integer literal out of range: " + t.text, t.pos);
        }
        return v;
    }

    std::uint32_t size_spec() {
        expect("[", "before register size");
        SourcePos pos = peek().pos;
        if (peek().kind == TokenKind::Identifier) {
            fail(code::kUnsupportedConstruct, "register sizes must be integer literals", pos);
        }
        std::uint64_t n = integer("register size");
        if (n == 0 || n > (1u << 20)) {
            fail(code::kSyntax, "register size must be between 1 and 2^20", pos);
        }
        expect("]", "after register size");
        return static_cast<std::uint32_t>(n);
    }

    // INT | ID | ID + INT | ID - INT | - INT (bounds only)
    IndexExpr index_expr(bool allow_negative) {
        IndexExpr e;
        if (allow_negative && is_symbol("-") && peek(1).kind == TokenKind::Integer) {
            next();
            e.offset = -static_cast<std::int64_t>(integer("integer"));
            return e;
        }
        if (peek().kind == TokenKind::Integer) {
            e.offset = static_cast<std::int64_t>(integer("integer"));
            return e;
        }
        if (peek().kind != TokenKind::Identifier) {
            syntax("index expression");
        }
        e.var = next().text;
        if (is_symbol("+") || is_symbol("-")) {
            bool minus = next().text == "-";
            if (peek().kind != TokenKind::Integer) {
                fail(code::kUnsupportedConstruct, "index arithmetic is limited to loop variable plus or minus a literal",
                     peek().pos);
            }
            auto v = static_cast<std::int64_t>(integer("integer"));
            e.offset = minus ? -v : v;
        }
        return e;
    }

    Operand operand(const char* what) {
        Operand o;
        o.pos = peek().pos;
        o.name = identifier(what);
        if (accept("[")) {
            o.index = index_expr(false);
            if (is_symbol(":") || is_symbol(",")) {
                fail(code::kUnsupportedConstruct, "index ranges and sets are not supported", peek().pos);
            }
            expect("]", "to close index");
        }
        return o;
    }

    Condition condition() {
        expect("(", "before condition");
        Condition c;
        if (is_symbol("!") || is_symbol("~")) {
            fail(code::kUnsupportedConstruct, "guard conditions must compare a bit or register with == or !=",
                 peek().pos);
        }
        c.lhs = operand("bit or register in condition");
        if (is_symbol("==") || is_symbol("!=")) {
            c.equal = next().text == "==";
        } else if (is_symbol(")")) {
            fail(code::kUnsupportedConstruct, "guard conditions must compare against an integer literal", peek().pos);
        } else if (peek().kind == TokenKind::Symbol) {
            fail(code::kUnsupportedConstruct, "unsupported operator '" + peek().text + "' in guard condition",
                 peek().pos);
        } else {
            syntax("'==' or '!='");
        }
        if (peek().kind != TokenKind::Integer) {
            fail(code::kUnsupportedConstruct, "guard conditions must compare against an integer literal", peek().pos);
        }
        c.value = integer("integer literal");
        if (!is_symbol(")")) {
            if (peek().kind == TokenKind::Symbol) {
                fail(code::kUnsupportedConstruct, "compound guard conditions are not supported", peek().pos);
            }
        }
        expect(")", "after condition");
        return c;
    }

    Body block() {
        Body body;
        if (accept("{")) {
            while (!is_symbol("}")) {
                if (at_end()) {
                    syntax("'}'");
                }
                body.push_back(statement());
            }
            next();
        } else {
            body.push_back(statement());
        }
        return body;
    }

    Body braced_block(const char* context) {
        if (!is_symbol("{")) {
            syntax(std::string("'{' ") + context);
        }
        return block();
    }

    Statement statement() {
        const Token& t = peek();
        SourcePos pos = t.pos;
        if (t.kind != TokenKind::Identifier) {
            if (is_symbol("{")) {
                fail(code::kUnsupportedConstruct, "bare scopes are not supported", pos);
            }
            syntax("statement");
        }
        const std::string word = t.text;

        if (word == "OPENQASM") {
            next();
            if (peek().kind != TokenKind::Float && peek().kind != TokenKind::Integer) {
                syntax("version number");
            }
            VersionStmt v{next().text};
            if (v.version != "3" && v.version.rfind("3.", 0) != 0) {
                fail(code::kUnsupportedConstruct, "only OpenQASM 3 is supported", pos);
            }
            expect(";", "after version");
            return {v, pos};
        }
        if (word == "include") {
            next();
            if (peek().kind != TokenKind::String) {
                syntax("file name string");
            }
            IncludeStmt inc{next().text};
            expect(";", "after include");
            return {inc, pos};
        }
        if (word == "qubit") {
            next();
            QubitDecl d;
            if (is_symbol("[")) d.size = size_spec();
            d.name = identifier("qubit name");
            expect(";", "after qubit declaration");
            return {d, pos};
        }
        if (word == "bit") {
            next();
            BitDecl d;
            if (is_symbol("[")) d.size = size_spec();
            d.name = identifier("bit name");
            if (accept("=")) {
                if (peek().kind == TokenKind::Integer) {
                    d.init = BitInit{false, next().text};
                } else if (peek().kind == TokenKind::String) {
                    d.init = BitInit{true, next().text};
                } else if (is_word("measure")) {
                    fail(code::kUnsupportedConstruct, "declare the bit first, then assign the measurement", peek().pos);
                } else {
                    fail(code::kUnsupportedConstruct, "bit initializers must be literals", peek().pos);
                }
            }
            expect(";", "after bit declaration");
            return {d, pos};
        }
        if (word == "measure") {
            next();
            MeasureStmt m;
            m.qubit = operand("qubit to measure");
            if (accept("->")) {
                m.target = operand("bit to store the outcome");
                m.arrow = true;
            }
            expect(";", "after measurement");
            return {m, pos};
        }
        if (word == "reset") {
            next();
            ResetStmt r{operand("qubit to reset")};
            expect(";", "after reset");
            return {r, pos};
        }
        if (word == "barrier") {
            next();
            BarrierStmt b;
            if (!is_symbol(";")) {
                b.operands.push_back(operand("qubit"));
                while (accept(",")) b.operands.push_back(operand("qubit"));
            }
            expect(";", "after barrier");
            return {b, pos};
        }
        if (word == "if") {
            next();
            IfStmt s;
            s.cond = condition();
            s.then_body = block();
            if (is_word("else")) {
                next();
                s.else_body = block();
            }
            return {std::move(s), pos};
        }
        if (word == "switch") {
            next();
            expect("(", "after switch");
            SwitchStmt s;
            s.selector = operand("bit or register");
            expect(")", "after switch selector");
            expect("{", "to open switch");
            while (is_word("case")) {
                next();
                SwitchCase c;
                c.values.push_back(integer("case value"));
                while (accept(",")) c.values.push_back(integer("case value"));
                c.body = braced_block("after case values");
                s.cases.push_back(std::move(c));
            }
            if (is_word("default")) {
                next();
                s.default_body = braced_block("after default");
            }
            expect("}", "to close switch");
            if (s.cases.empty()) {
                fail(code::kSyntax, "switch needs at least one case", pos);
            }
            return {std::move(s), pos};
        }
        if (word == "for") {
            next();
            ForStmt f;
            const bool typed = (peek(1).kind == TokenKind::Identifier && peek(1).text != "in") || is_symbol("[", 1);
            if (typed) {
                f.type = identifier("loop variable type");
                if (accept("[")) {
                    f.type += "[" + std::to_string(integer("type width")) + "]";
                    expect("]", "after type width");
                }
            }
            f.var = identifier("loop variable");
            if (!is_word("in")) syntax("'in'");
            next();
            if (is_symbol("{")) {
                fail(code::kUnsupportedConstruct, "for loops over sets are not supported; use [lo:hi]", peek().pos);
            }
            expect("[", "to open range");
            f.lo = index_expr(true);
            expect(":", "in range");
            f.hi = index_expr(true);
            if (is_symbol(":")) {
                fail(code::kUnsupportedConstruct, "ranges with a step are not supported", peek().pos);
            }
            expect("]", "to close range");
            f.body = block();
            return {std::move(f), pos};
        }
        if (word == "while") {
            next();
            WhileStmt w;
            w.cond = condition();
            w.body = block();
            return {std::move(w), pos};
        }
        if (word == "ctrl") {
            return gate(pos);
        }
        if (kUnsupportedKeywords.count(word) != 0) {
            fail(code::kUnsupportedConstruct, "unsupported construct '" + word + "'", pos);
        }
        // Assignment: `c = measure q;` or `c[i] = measure q;`.
        std::size_t after = 1;
        if (is_symbol("[", 1)) {
            while (peek(after).kind != TokenKind::End && !is_symbol("]", after)) ++after;
            ++after;
        }
        if (is_symbol("=", after)) {
            Operand target = operand("bit");
            next();  // '='
            if (!is_word("measure")) {
                fail(code::kUnsupportedConstruct, "classical assignments other than measurement are not supported",
                     peek().pos);
            }
            next();
            MeasureStmt m;
            m.qubit = operand("qubit to measure");
            m.target = target;
            expect(";", "after measurement");
            return {m, pos};
        }
        return gate(pos);
    }

    Statement gate(SourcePos pos) {
        GateStmt g;
        while (is_word("ctrl") || is_word("negctrl") || is_word("inv") || is_word("pow")) {
            if (!is_word("ctrl")) {
                fail(code::kUnsupportedConstruct, "gate modifier '" + peek().text + "' is not supported", peek().pos);
            }
            next();
            std::uint64_t count = 1;
            if (accept("(")) {
                count = integer("control count");
                expect(")", "after control count");
                if (count == 0) {
                    fail(code::kSyntax, "control count must be positive", pos);
                }
            }
            expect("@", "after gate modifier");
            g.ctrl += static_cast<std::uint32_t>(count);
        }
        Token name = peek();
        g.name = identifier("gate name");
        std::optional<GateKind> kind = gate_from_name(g.name);
        if (!kind) {
            fail(code::kUnsupportedGate, "unsupported gate: " + g.name, name.pos);
        }
        if (g.ctrl > 0 && g.name != "x" && g.name != "z") {
            fail(code::kUnsupportedGate, "unsupported gate: ctrl @ " + g.name + " (modifiers apply to x and z only)",
                 name.pos);
        }
        if (is_symbol("(")) {
            fail(code::kUnsupportedGate, "unsupported gate: " + g.name + " takes no parameters", peek().pos);
        }
        g.operands.push_back(operand("gate operand"));
        while (accept(",")) g.operands.push_back(operand("gate operand"));
        expect(";", "after gate operands");
        return {g, pos};
    }
};

}  // namespace

ParseResult parse(std::string_view source) {
    ParseResult r;
    try {
        Parser p(tokenize(source));
        r.program = p.program();
    } catch (const DiagnosticError& e) {
        r.diagnostics.push_back(e.diagnostic());
    }
    return r;
}

}  // namespace qseq::qasm
