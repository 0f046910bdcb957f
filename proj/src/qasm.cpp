// SPDX-License-Identifier: Apache-2.0
#include "csyn/qasm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "csyn/errors.hpp"

namespace csyn {
namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    double number = 0.0;
    std::size_t line = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_space_and_comments();
        Token t;
        t.line = line_;
        if (pos_ >= src_.size()) return t;
        const char ch = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
            }
            t.type = Tok::Ident;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            return number(t);
        }
        if (ch == '"') {
            const std::size_t close = src_.find('"', pos_ + 1);
            if (close == std::string_view::npos) throw SyntaxError("unterminated string", line_);
            t.type = Tok::String;
            t.text = std::string(src_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            return t;
        }
        if (ch == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            t.type = Tok::Symbol;
            t.text = "->";
            pos_ += 2;
            return t;
        }
        static constexpr std::string_view symbols = ";,[]()+-*/{}=<>";
        if (symbols.find(ch) != std::string_view::npos) {
            t.type = Tok::Symbol;
            t.text = std::string(1, ch);
            ++pos_;
            return t;
        }
        throw SyntaxError(std::string("unexpected character '") + ch + "'", line_);
    }

private:
    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char ch = src_[pos_];
            if (ch == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else if (src_.substr(pos_, 2) == "//") {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    Token number(Token t) {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            digits();
        }
        t.type = Tok::Number;
        t.text = std::string(src_.substr(start, pos_ - start));
        const auto* first = t.text.data();
        const auto* last = first + t.text.size();
        auto [ptr, ec] = std::from_chars(first, last, t.number);
        if (ec != std::errc{} || ptr != last) throw SyntaxError("malformed number '" + t.text + "'", t.line);
        return t;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

struct Register {
    std::size_t offset = 0;
    std::size_t size = 0;
};

// An argument is either one qubit or a whole register (broadcast).
struct Arg {
    std::string reg;
    std::optional<std::size_t> index;
    std::size_t line = 0;
};

struct GateSpec {
    GateKind kind;
    std::size_t arity;
};

const std::map<std::string, GateSpec, std::less<>>& gate_table() {
    static const std::map<std::string, GateSpec, std::less<>> table = {
        {"h", {GateKind::H, 1}},     {"x", {GateKind::X, 1}},       {"y", {GateKind::Y, 1}},
        {"z", {GateKind::Z, 1}},     {"s", {GateKind::S, 1}},       {"sdg", {GateKind::SDG, 1}},
        {"t", {GateKind::T, 1}},     {"tdg", {GateKind::TDG, 1}},   {"rx", {GateKind::RX, 1}},
        {"ry", {GateKind::RY, 1}},   {"rz", {GateKind::RZ, 1}},     {"cx", {GateKind::CNOT, 2}},
        {"CX", {GateKind::CNOT, 2}}, {"swap", {GateKind::SWAP, 2}},
    };
    return table;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { advance(); }

    Circuit parse(std::string name) {
        while (cur_.type != Tok::End) statement();
        return Circuit(std::move(name), num_qubits_, std::move(gates_));
    }

private:
    void advance() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, cur_.line); }

    bool at_symbol(std::string_view s) const { return cur_.type == Tok::Symbol && cur_.text == s; }

    void expect_symbol(std::string_view s) {
        if (!at_symbol(s)) {
            fail("expected '" + std::string(s) + "' but found " + describe(cur_));
        }
        advance();
    }

    std::string expect_ident() {
        if (cur_.type != Tok::Ident) fail("expected identifier but found " + describe(cur_));
        std::string s = cur_.text;
        advance();
        return s;
    }

    std::size_t expect_index() {
        if (cur_.type != Tok::Number || cur_.text.find_first_not_of("0123456789") != std::string::npos) {
            fail("expected non-negative integer but found " + describe(cur_));
        }
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), v);
        if (ec != std::errc{}) fail("integer out of range: " + cur_.text);
        advance();
        return v;
    }

    static std::string describe(const Token& t) {
        switch (t.type) {
            case Tok::End: return "end of input";
            case Tok::String: return "string \"" + t.text + "\"";
            default: return "'" + t.text + "'";
        }
    }

    void statement() {
        if (cur_.type != Tok::Ident) fail("expected statement but found " + describe(cur_));
        const std::size_t line = cur_.line;
        const std::string word = cur_.text;
        advance();
        if (word == "OPENQASM") {
            if (cur_.type != Tok::Number || cur_.number != 2.0) fail("only OPENQASM 2.0 is supported");
            advance();
            expect_symbol(";");
        } else if (word == "include") {
            if (cur_.type != Tok::String) fail("expected file name after include");
            if (cur_.text != "qelib1.inc") fail("cannot include \"" + cur_.text + "\"");
            advance();
            expect_symbol(";");
        } else if (word == "qreg" || word == "creg") {
            declare(word == "qreg" ? qregs_ : cregs_, word == "qreg");
        } else if (word == "barrier") {
            barrier();
        } else if (word == "measure") {
            measure();
        } else if (word == "if") {
            fail("classical conditionals are not supported");
        } else if (word == "gate" || word == "opaque" || word == "reset") {
            throw UnsupportedGate("'" + word + "' statements are not supported", line);
        } else {
            application(word, line);
        }
    }

    void declare(std::map<std::string, Register, std::less<>>& regs, bool quantum) {
        const std::string name = expect_ident();
        expect_symbol("[");
        const std::size_t size = expect_index();
        expect_symbol("]");
        expect_symbol(";");
        if (qregs_.count(name) || cregs_.count(name)) fail("register '" + name + "' redeclared");
        if (size == 0) fail("register '" + name + "' has zero size");
        if (quantum) {
            regs[name] = {num_qubits_, size};
            num_qubits_ += size;
        } else {
            regs[name] = {0, size};
        }
    }

    Arg argument() {
        Arg a;
        a.line = cur_.line;
        a.reg = expect_ident();
        if (at_symbol("[")) {
            advance();
            a.index = expect_index();
            expect_symbol("]");
        }
        return a;
    }

    const Register& lookup(const std::map<std::string, Register, std::less<>>& regs, const Arg& a,
                           std::string_view what) const {
        auto it = regs.find(a.reg);
        if (it == regs.end()) {
            throw SyntaxError("unknown " + std::string(what) + " register '" + a.reg + "'", a.line);
        }
        if (a.index && *a.index >= it->second.size) {
            throw QubitIndexError("index " + std::to_string(*a.index) + " out of range for " + a.reg + "[" +
                                      std::to_string(it->second.size) + "]",
                                  a.line);
        }
        return it->second;
    }

    // Expands register arguments; all broadcast registers must agree in size.
    std::vector<std::vector<Qubit>> expand(const std::vector<Arg>& args) const {
        std::optional<std::size_t> width;
        for (const Arg& a : args) {
            const Register& r = lookup(qregs_, a, "quantum");
            if (!a.index) {
                if (width && *width != r.size) throw SyntaxError("broadcast over registers of different sizes", a.line);
                width = r.size;
            }
        }
        std::vector<std::vector<Qubit>> rows(width.value_or(1));
        for (std::size_t k = 0; k < rows.size(); ++k) {
            for (const Arg& a : args) {
                const Register& r = qregs_.at(a.reg);
                rows[k].push_back(static_cast<Qubit>(r.offset + (a.index ? *a.index : k)));
            }
        }
        return rows;
    }

    std::vector<Arg> argument_list() {
        std::vector<Arg> args{argument()};
        while (at_symbol(",")) {
            advance();
            args.push_back(argument());
        }
        expect_symbol(";");
        return args;
    }

    void barrier() {
        const auto args = argument_list();
        std::vector<Qubit> qs;
        for (const Arg& a : args) {
            const Register& r = lookup(qregs_, a, "quantum");
            for (std::size_t k = 0; k < r.size; ++k) {
                if (a.index && k != *a.index) continue;
                const auto q = static_cast<Qubit>(r.offset + k);
                if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
            }
        }
        gates_.push_back(Gate::barrier(std::move(qs)));
    }

    void measure() {
        const Arg src = argument();
        expect_symbol("->");
        const Arg dst = argument();
        expect_symbol(";");
        const Register& qr = lookup(qregs_, src, "quantum");
        const Register& cr = lookup(cregs_, dst, "classical");
        const std::size_t qn = src.index ? 1 : qr.size;
        const std::size_t cn = dst.index ? 1 : cr.size;
        if (qn != cn) throw SyntaxError("measure operands differ in size", src.line);
        for (std::size_t k = 0; k < qn; ++k) {
            gates_.push_back(Gate::measure(static_cast<Qubit>(qr.offset + (src.index ? *src.index : k))));
        }
    }

    void application(const std::string& word, std::size_t line) {
        std::vector<double> params;
        if (at_symbol("(")) {
            advance();
            if (!at_symbol(")")) {
                params.push_back(expression());
                while (at_symbol(",")) {
                    advance();
                    params.push_back(expression());
                }
            }
            expect_symbol(")");
        }
        const bool toffoli = word == "ccx";
        const auto& table = gate_table();
        const auto it = table.find(word);
        if (!toffoli && it == table.end()) throw UnsupportedGate("unsupported gate '" + word + "'", line);
        const std::size_t arity = toffoli ? 3 : it->second.arity;
        const std::size_t nparams = (!toffoli && is_parameterized(it->second.kind)) ? 1 : 0;
        if (params.size() != nparams) {
            fail("gate '" + word + "' takes " + std::to_string(nparams) + " parameter(s), got " +
                 std::to_string(params.size()));
        }
        const auto args = argument_list();
        if (args.size() != arity) {
            fail("gate '" + word + "' takes " + std::to_string(arity) + " qubit(s), got " +
                 std::to_string(args.size()));
        }
        for (const auto& qs : expand(args)) {
            for (std::size_t i = 0; i < qs.size(); ++i) {
                for (std::size_t j = i + 1; j < qs.size(); ++j) {
                    if (qs[i] == qs[j]) throw SyntaxError("gate '" + word + "' repeats a qubit argument", line);
                }
            }
            if (toffoli) {
                toffoli_network(qs[0], qs[1], qs[2]);
            } else if (arity == 2) {
                gates_.push_back(Gate{it->second.kind, {qs[0], qs[1]}, {}});
            } else {
                std::optional<double> p;
                if (nparams) p = params[0];
                gates_.push_back(Gate::single(it->second.kind, qs[0], p));
            }
        }
    }

    // Standard 6-CNOT Toffoli network with H/T/Tdg on the target.
    void toffoli_network(Qubit a, Qubit b, Qubit c) {
        using K = GateKind;
        gates_.push_back(Gate::single(K::H, c));
        gates_.push_back(Gate::cnot(b, c));
        gates_.push_back(Gate::single(K::TDG, c));
        gates_.push_back(Gate::cnot(a, c));
        gates_.push_back(Gate::single(K::T, c));
        gates_.push_back(Gate::cnot(b, c));
        gates_.push_back(Gate::single(K::TDG, c));
        gates_.push_back(Gate::cnot(a, c));
        gates_.push_back(Gate::single(K::T, b));
        gates_.push_back(Gate::single(K::T, c));
        gates_.push_back(Gate::single(K::H, c));
        gates_.push_back(Gate::cnot(a, b));
        gates_.push_back(Gate::single(K::T, a));
        gates_.push_back(Gate::single(K::TDG, b));
        gates_.push_back(Gate::cnot(a, b));
    }

    // expr := term (('+'|'-') term)*
    double expression() {
        double v = term();
        while (at_symbol("+") || at_symbol("-")) {
            const bool plus = cur_.text == "+";
            advance();
            const double rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double term() {
        double v = unary();
        while (at_symbol("*") || at_symbol("/")) {
            const bool mul = cur_.text == "*";
            advance();
            const double rhs = unary();
            if (!mul && rhs == 0.0) fail("division by zero in angle expression");
            v = mul ? v * rhs : v / rhs;
        }
        return v;
    }

    double unary() {
        if (at_symbol("-")) {
            advance();
            return -unary();
        }
        if (cur_.type == Tok::Number) {
            const double v = cur_.number;
            advance();
            return v;
        }
        if (cur_.type == Tok::Ident && cur_.text == "pi") {
            advance();
            return std::numbers::pi;
        }
        if (at_symbol("(")) {
            advance();
            const double v = expression();
            expect_symbol(")");
            return v;
        }
        fail("malformed angle expression at " + describe(cur_));
    }

    Lexer lex_;
    Token cur_;
    std::map<std::string, Register, std::less<>> qregs_;
    std::map<std::string, Register, std::less<>> cregs_;
    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
};

std::string format_angle(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace

Circuit parse_qasm(std::string_view source, std::string name) {
    return Parser(source).parse(std::move(name));
}

Circuit parse_qasm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_qasm(ss.str(), path.stem().string());
}

std::string to_qasm(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << c.num_qubits() << "];\n";
    const bool measures = std::any_of(c.begin(), c.end(), [](const Gate& g) { return g.kind == GateKind::MEASURE; });
    if (measures) out << "creg c[" << c.num_qubits() << "];\n";
    for (const Gate& g : c) {
        if (g.kind == GateKind::MEASURE) {
            out << "measure q[" << g.qubits[0] << "] -> c[" << g.qubits[0] << "];\n";
            continue;
        }
        out << gate_name(g.kind);
        if (g.param) out << '(' << format_angle(*g.param) << ')';
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            out << (i ? "," : " ") << "q[" << g.qubits[i] << ']';
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace csyn
