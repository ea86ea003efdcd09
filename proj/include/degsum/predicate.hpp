// Expected-exception predicate files.
//
// Line format (# starts a comment):
//   case <id> family=<tag> cond=<expr>
//   iso <label> <label> ...
//
// The condition grammar is a small integer expression language over the
// cell variables n, q, p, ell (r is an alias for n):
//   expr   := or
//   or     := and ('||' and)*
//   and    := cmp ('&&' cmp)*
//   cmp    := sum (('=='|'!='|'<='|'>='|'<'|'>') sum)?
//   sum    := term (('+'|'-') term)*
//   term   := atom (('*'|'/'|'%') atom)*
//   atom   := integer | variable | '!' atom | '(' expr ')'
//           | 'is_pow(' expr ',' expr ')' | 'gcd(' expr ',' expr ')'
// is_pow(x, b) is true when x = b^t for some t >= 1.
// iso lines list labels of the same abstract simple group, so a combined
// sweep does not report one group twice under different family names.

#pragma once

#include <degsum/numtheory.hpp>

#include <cctype>
#include <numeric>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

namespace degsum {

struct PredicateEnv {
    std::int64_t n = 0, q = 0, p = 0, ell = 0;
};

namespace predicate_detail {

struct Node {
    virtual ~Node() = default;
    virtual std::int64_t eval(const PredicateEnv&) const = 0;
};
using NodePtr = std::unique_ptr<Node>;

struct Literal : Node {
    std::int64_t v;
    explicit Literal(std::int64_t x) : v(x) {}
    std::int64_t eval(const PredicateEnv&) const override { return v; }
};
struct Variable : Node {
    char which;
    explicit Variable(char w) : which(w) {}
    std::int64_t eval(const PredicateEnv& e) const override {
        switch (which) {
            case 'n': return e.n;
            case 'q': return e.q;
            case 'p': return e.p;
            case 'l': return e.ell;
        }
        throw std::logic_error("predicate: bad variable");
    }
};
struct Unary : Node {
    NodePtr a;
    std::int64_t eval(const PredicateEnv& e) const override { return a->eval(e) == 0; }
};
struct Binary : Node {
    std::string op;
    NodePtr a, b;
    std::int64_t eval(const PredicateEnv& e) const override {
        std::int64_t x = a->eval(e);
        if (op == "&&") return x != 0 && b->eval(e) != 0;
        if (op == "||") return x != 0 || b->eval(e) != 0;
        std::int64_t y = b->eval(e);
        if (op == "+") return x + y;
        if (op == "-") return x - y;
        if (op == "*") return x * y;
        if (op == "/") { if (!y) throw std::runtime_error("predicate: division by zero"); return x / y; }
        if (op == "%") { if (!y) throw std::runtime_error("predicate: modulo by zero"); return x % y; }
        if (op == "==") return x == y;
        if (op == "!=") return x != y;
        if (op == "<=") return x <= y;
        if (op == ">=") return x >= y;
        if (op == "<") return x < y;
        if (op == ">") return x > y;
        throw std::logic_error("predicate: bad operator " + op);
    }
};
struct Call : Node {
    std::string name;
    NodePtr a, b;
    std::int64_t eval(const PredicateEnv& e) const override {
        std::int64_t x = a->eval(e), y = b->eval(e);
        if (name == "is_pow") {
            if (x < 2 || y < 2) return 0;
            return is_power_of(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y));
        }
        if (name == "gcd") return std::gcd(x, y);
        throw std::logic_error("predicate: unknown function " + name);
    }
};

class Parser {
public:
    explicit Parser(std::string_view src) : s_(src) {}
    NodePtr parse() {
        NodePtr n = parse_or();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return n;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::runtime_error("predicate parse error at offset " + std::to_string(pos_) +
                                 ": " + what + " in '" + std::string(s_) + "'");
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) { pos_ += tok.size(); return true; }
        return false;
    }
    NodePtr parse_or() {
        NodePtr n = parse_and();
        while (eat("||")) {
            auto b = std::make_unique<Binary>();
            b->op = "||"; b->a = std::move(n); b->b = parse_and();
            n = std::move(b);
        }
        return n;
    }
    NodePtr parse_and() {
        NodePtr n = parse_cmp();
        while (eat("&&")) {
            auto b = std::make_unique<Binary>();
            b->op = "&&"; b->a = std::move(n); b->b = parse_cmp();
            n = std::move(b);
        }
        return n;
    }
    NodePtr parse_cmp() {
        NodePtr n = parse_sum();
        for (const char* op : {"==", "!=", "<=", ">=", "<", ">"}) {
            if (eat(op)) {
                auto b = std::make_unique<Binary>();
                b->op = op; b->a = std::move(n); b->b = parse_sum();
                return b;
            }
        }
        return n;
    }
    NodePtr parse_sum() {
        NodePtr n = parse_term();
        for (;;) {
            if (eat("+")) { auto b = std::make_unique<Binary>(); b->op = "+"; b->a = std::move(n); b->b = parse_term(); n = std::move(b); }
            else if (eat("-")) { auto b = std::make_unique<Binary>(); b->op = "-"; b->a = std::move(n); b->b = parse_term(); n = std::move(b); }
            else return n;
        }
    }
    NodePtr parse_term() {
        NodePtr n = parse_atom();
        for (;;) {
            if (eat("*")) { auto b = std::make_unique<Binary>(); b->op = "*"; b->a = std::move(n); b->b = parse_atom(); n = std::move(b); }
            else if (eat("/")) { auto b = std::make_unique<Binary>(); b->op = "/"; b->a = std::move(n); b->b = parse_atom(); n = std::move(b); }
            else if (eat("%")) { auto b = std::make_unique<Binary>(); b->op = "%"; b->a = std::move(n); b->b = parse_atom(); n = std::move(b); }
            else return n;
        }
    }
    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr n = parse_or();
            if (!eat(")")) fail("expected )");
            return n;
        }
        if (c == '!') {
            ++pos_;
            auto u = std::make_unique<Unary>();
            u->a = parse_atom();
            return u;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return std::make_unique<Literal>(std::stoll(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (eat("(")) {
                auto call = std::make_unique<Call>();
                call->name = name;
                call->a = parse_or();
                if (!eat(",")) fail("expected ,");
                call->b = parse_or();
                if (!eat(")")) fail("expected )");
                return call;
            }
            if (name == "n" || name == "r") return std::make_unique<Variable>('n');
            if (name == "q") return std::make_unique<Variable>('q');
            if (name == "p") return std::make_unique<Variable>('p');
            if (name == "ell") return std::make_unique<Variable>('l');
            fail("unknown identifier " + name);
        }
        fail("unexpected character");
    }
};

} // namespace predicate_detail

struct PredicateCase {
    std::string id;
    std::string family;  // Alt | PSL2 | Sp4 | ...
    std::string source;  // the condition text as written
    std::shared_ptr<predicate_detail::Node> cond;

    bool matches(const PredicateEnv& env) const { return cond->eval(env) != 0; }
};

struct ExpectedList {
    std::vector<PredicateCase> cases;
    std::vector<std::vector<std::string>> iso_classes;

    // case ids whose condition holds for this family/cell
    std::vector<std::string> matching(const std::string& family, const PredicateEnv& env) const {
        std::vector<std::string> out;
        for (const auto& c : cases)
            if (c.family == family && c.matches(env)) out.push_back(c.id);
        return out;
    }

    std::string canonical_label(const std::string& label) const {
        for (const auto& cls : iso_classes)
            for (const auto& member : cls)
                if (member == label) return cls.front();
        return label;
    }
};

inline ExpectedList parse_expected_list(std::istream& in) {
    ExpectedList out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "case") {
            PredicateCase c;
            std::string famtok;
            if (!(ls >> c.id >> famtok))
                throw std::runtime_error("expected list: malformed case line: " + line);
            if (famtok.rfind("family=", 0) != 0)
                throw std::runtime_error("expected list: missing family= in: " + line);
            c.family = famtok.substr(7);
            std::string rest;
            std::getline(ls, rest);
            auto condpos = rest.find("cond=");
            if (condpos == std::string::npos)
                throw std::runtime_error("expected list: missing cond= in: " + line);
            c.source = rest.substr(condpos + 5);
            c.cond = predicate_detail::Parser(c.source).parse();
            out.cases.push_back(std::move(c));
        } else if (head == "iso") {
            std::vector<std::string> cls;
            std::string label;
            while (ls >> label) cls.push_back(label);
            if (cls.size() < 2) throw std::runtime_error("expected list: iso needs two labels");
            out.iso_classes.push_back(std::move(cls));
        } else {
            throw std::runtime_error("expected list: unknown directive " + head);
        }
    }
    return out;
}

inline ExpectedList load_expected_list(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("expected list: cannot open " + file.string());
    return parse_expected_list(in);
}

} // namespace degsum
