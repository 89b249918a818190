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

#include "qseq/qasm/lexer.hpp"

#include <array>
#include <cctype>

namespace qseq::qasm {

std::ostream& operator<<(std::ostream& out, const Diagnostic& d) {
    return out << d.code << " " << d.pos.line << ":" << d.pos.col << ": " << d.message;
}

namespace {

constexpr std::array<std::string_view, 10> kTwoCharSymbols = {"==", "!=", "->", "<=", ">=", "&&", "||", "<<", ">>", "++"};
constexpr std::string_view kOneCharSymbols = ";,[](){}=@:+-<>!*/%^&|~";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    int line = 1;
    int col = 1;
    auto advance = [&](std::size_t count) {
        for (std::size_t j = 0; j < count && i < src.size(); ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };

    while (i < src.size()) {
        const char c = src[i];
        const SourcePos pos{line, col};
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (src.substr(i, 2) == "//") {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (src.substr(i, 2) == "/*") {
            std::size_t end = src.find("*/", i + 2);
            if (end == std::string_view::npos) {
                fail(code::kLexical, "unterminated block comment", pos);
            }
            advance(end + 2 - i);
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < src.size() && ident_char(src[j])) ++j;
            out.push_back({TokenKind::Identifier, std::string(src.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }
        if (digit(c) || (c == '.' && i + 1 < src.size() && digit(src[i + 1]))) {
            std::size_t j = i;
            bool is_float = false;
            while (j < src.size() && digit(src[j])) ++j;
            if (j < src.size() && src[j] == '.') {
                is_float = true;
                ++j;
                while (j < src.size() && digit(src[j])) ++j;
            }
            if (j < src.size() && (src[j] == 'e' || src[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
                if (k < src.size() && digit(src[k])) {
                    is_float = true;
                    j = k;
                    while (j < src.size() && digit(src[j])) ++j;
                }
            }
            if (j < src.size() && ident_char(src[j])) {
                fail(code::kLexical, "malformed number '" + std::string(src.substr(i, j - i + 1)) + "'", pos);
            }
            out.push_back({is_float ? TokenKind::Float : TokenKind::Integer, std::string(src.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }
        if (c == '"') {
            std::size_t end = src.find_first_of("\"\n", i + 1);
            if (end == std::string_view::npos || src[end] != '"') {
                fail(code::kLexical, "unterminated string literal", pos);
            }
            out.push_back({TokenKind::String, std::string(src.substr(i + 1, end - i - 1)), pos});
            advance(end + 1 - i);
            continue;
        }
        bool matched = false;
        for (std::string_view sym : kTwoCharSymbols) {
            if (src.substr(i, 2) == sym) {
                out.push_back({TokenKind::Symbol, std::string(sym), pos});
                advance(2);
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (kOneCharSymbols.find(c) != std::string_view::npos) {
            out.push_back({TokenKind::Symbol, std::string(1, c), pos});
            advance(1);
            continue;
        }
        fail(code::kLexical, std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({TokenKind::End, "", {line, col}});
    return out;
}

}  // namespace qseq::qasm
