#include "cralg/parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <sstream>

namespace cralg {

namespace {

struct Token {
    enum Kind { Ident, Int, Punct, End } kind;
    std::string text;
    int line;
    int col;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t k) {
        for (size_t j = 0; j < k; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            int l = line, cl = col;
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Int, text.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int l = line, cl = col;
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            out.push_back({Token::Ident, text.substr(i, j - i), l, cl});
            advance(j - i);
        } else if (std::string("+-*^()=;,/").find(c) != std::string::npos) {
            out.push_back({Token::Punct, std::string(1, c), line, col});
            advance(1);
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'", line, col);
        }
    }
    out.push_back({Token::End, "", line, col});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    ProblemFile parse() {
        ProblemFile pf;
        std::map<int, MultiPolynomial> rho, rhop, fnum, fden;
        while (peek().kind != Token::End) {
            Token name = expect(Token::Ident, "statement name");
            expect_punct("=");
            if (name.text == "n" || name.text == "np" || name.text == "order" ||
                name.text == "qmax" || name.text == "kmax" || name.text == "degree" ||
                name.text == "samples") {
                int v = parse_int();
                if (name.text == "n")
                    pf.n = v;
                else if (name.text == "np")
                    pf.np = v;
                else if (name.text == "order")
                    pf.order = v;
                else if (name.text == "qmax")
                    pf.qmax = v;
                else if (name.text == "kmax")
                    pf.kmax = v;
                else if (name.text == "degree")
                    pf.degree = v;
                else
                    pf.samples = v;
            } else if (name.text == "basepoint") {
                expect_punct("(");
                TablePtr empty = std::make_shared<VariableTable>();
                pf.basepoint.clear();
                for (;;) {
                    MultiPolynomial v = parse_expr(empty);
                    pf.basepoint.push_back(v.constant_term());
                    if (is_punct(",")) {
                        next();
                        continue;
                    }
                    break;
                }
                expect_punct(")");
            } else if (int idx = numbered(name.text, "rho"); idx > 0) {
                rho.emplace(idx, parse_real_defining(name, source_table(pf, name)));
            } else if (int idxp = numbered(name.text, "rhop"); idxp > 0) {
                rhop.emplace(idxp, parse_real_defining(name, target_table(pf, name)));
            } else if (int idxf = numbered(name.text, "F"); idxf > 0) {
                MultiPolynomial num = parse_expr(source_table(pf, name));
                MultiPolynomial den = MultiPolynomial::constant(pf.table, GaussianRational(1));
                if (is_punct("/")) {
                    next();
                    den = parse_expr(pf.table);
                }
                check_holomorphic(num, name);
                check_holomorphic(den, name);
                fnum.emplace(idxf, std::move(num));
                fden.emplace(idxf, std::move(den));
            } else {
                throw ParseError("unknown statement '" + name.text + "'", name.line, name.col);
            }
            expect_punct(";");
        }
        if (pf.np == 0) pf.np = pf.n;
        collect(rho, pf.rho, "rho");
        collect(rhop, pf.rhop, "rhop");
        collect(fnum, pf.fnum, "F");
        collect(fden, pf.fden, "F");
        if (pf.basepoint.empty()) pf.basepoint.assign(pf.n, GaussianRational(0));
        if (static_cast<int>(pf.basepoint.size()) != pf.n)
            throw ParseError("basepoint has " + std::to_string(pf.basepoint.size()) +
                                 " coordinates, expected " + std::to_string(pf.n),
                             1, 1);
        return pf;
    }

    MultiPolynomial parse_series(const TablePtr& table) {
        Token name = expect(Token::Ident, "statement name");
        if (name.text != "f")
            throw ParseError("series file must define 'f'", name.line, name.col);
        expect_punct("=");
        MultiPolynomial p = parse_expr(table);
        expect_punct(";");
        if (peek().kind != Token::End)
            throw ParseError("trailing input after the series definition", peek().line,
                             peek().col);
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    Token expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw ParseError("expected " + what + ", found '" + peek().text + "'", peek().line,
                             peek().col);
        return next();
    }
    bool is_punct(const std::string& p) const {
        return peek().kind == Token::Punct && peek().text == p;
    }
    void expect_punct(const std::string& p) {
        if (!is_punct(p))
            throw ParseError("expected '" + p + "', found '" + peek().text + "'", peek().line,
                             peek().col);
        next();
    }

    static int numbered(const std::string& name, const std::string& prefix) {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return 0;
        int v = 0;
        for (size_t i = prefix.size(); i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
            v = v * 10 + (name[i] - '0');
        }
        return v;
    }

    TablePtr source_table(ProblemFile& pf, const Token& at) {
        if (pf.n <= 0) throw ParseError("'n' must be declared first", at.line, at.col);
        if (!pf.table) pf.table = make_zzb_table(pf.n);
        return pf.table;
    }
    TablePtr target_table(ProblemFile& pf, const Token& at) {
        if (pf.np == 0) pf.np = pf.n;
        if (pf.np <= 0) throw ParseError("'n' or 'np' must be declared first", at.line, at.col);
        if (!pf.target_table) pf.target_table = make_zzb_table(pf.np);
        return pf.target_table;
    }

    MultiPolynomial parse_real_defining(const Token& name, const TablePtr& table) {
        MultiPolynomial p = parse_expr(table);
        MultiPolynomial diff = p - p.conjugate_swap();
        if (!diff.is_zero())
            throw ParseError(name.text + " is not real; conjugation mismatch " +
                                 polynomial_text(diff),
                             name.line, name.col);
        return p;
    }

    void check_holomorphic(const MultiPolynomial& p, const Token& at) {
        const TablePtr& t = p.table();
        for (int v = 0; v < t->size(); ++v)
            if (t->kind(v) == VarKind::Conjugate && p.depends_on(v))
                throw ParseError("map component uses the conjugate variable " + t->name(v),
                                 at.line, at.col);
    }

    int parse_int() {
        Token t = expect(Token::Int, "integer");
        return std::stoi(t.text);
    }

    MultiPolynomial parse_expr(const TablePtr& table) {
        MultiPolynomial acc = parse_term(table);
        while (is_punct("+") || is_punct("-")) {
            bool minus = next().text == "-";
            MultiPolynomial rhs = parse_term(table);
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    MultiPolynomial parse_term(const TablePtr& table) {
        MultiPolynomial acc = parse_unary(table);
        while (is_punct("*")) {
            next();
            acc = acc * parse_unary(table);
        }
        return acc;
    }

    MultiPolynomial parse_unary(const TablePtr& table) {
        if (is_punct("-")) {
            next();
            return -parse_unary(table);
        }
        if (is_punct("+")) next();
        return parse_factor(table);
    }

    MultiPolynomial parse_factor(const TablePtr& table) {
        MultiPolynomial base = parse_atom(table);
        if (is_punct("^")) {
            next();
            int e = parse_int();
            MultiPolynomial acc = MultiPolynomial::constant(table, GaussianRational(1));
            for (int j = 0; j < e; ++j) acc = acc * base;
            return acc;
        }
        return base;
    }

    MultiPolynomial parse_atom(const TablePtr& table) {
        const Token& t = peek();
        if (t.kind == Token::Int) {
            next();
            mpq_class q(t.text);
            // A '/' between bare integer literals forms a rational constant.
            if (is_punct("/") && toks_[pos_ + 1].kind == Token::Int) {
                next();
                Token den = next();
                q = mpq_class(t.text + "/" + den.text);
                q.canonicalize();
            }
            return MultiPolynomial::constant(table, GaussianRational(q));
        }
        if (t.kind == Token::Ident) {
            next();
            if (t.text == "i") return MultiPolynomial::constant(table, GaussianRational::i());
            if (t.text == "conj") {
                expect_punct("(");
                Token v = expect(Token::Ident, "variable");
                expect_punct(")");
                if (!table->contains(v.text))
                    throw ParseError("undeclared variable '" + v.text + "'", v.line, v.col);
                int idx = table->index_of(v.text);
                if (!table->has_partner(idx))
                    throw ParseError("'" + v.text + "' has no conjugate", v.line, v.col);
                return MultiPolynomial::variable(table, table->partner(idx));
            }
            if (!table->contains(t.text))
                throw ParseError("undeclared variable '" + t.text + "'", t.line, t.col);
            return MultiPolynomial::variable(table, t.text);
        }
        if (is_punct("(")) {
            next();
            MultiPolynomial e = parse_expr(table);
            expect_punct(")");
            return e;
        }
        throw ParseError("expected an expression, found '" + t.text + "'", t.line, t.col);
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;

    void collect(std::map<int, MultiPolynomial>& src, std::vector<MultiPolynomial>& dst,
                 const std::string& what) {
        for (auto& [idx, p] : src) {
            if (idx != static_cast<int>(dst.size()) + 1)
                throw ParseError("missing definition of " + what + std::to_string(dst.size() + 1),
                                 1, 1);
            dst.push_back(std::move(p));
        }
    }
};

}  // namespace

ProblemFile parse_input(const std::string& text) { return Parser(text).parse(); }

std::string polynomial_text(const MultiPolynomial& p) {
    if (p.is_zero()) return "0";
    const TablePtr& t = p.table();
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            os << "*" << t->name(static_cast<int>(v));
            if (exps[v] > 1) os << "^" << exps[v];
        }
    }
    return os.str();
}

std::string print_problem(const ProblemFile& p) {
    std::ostringstream os;
    os << "n = " << p.n << ";\n";
    os << "np = " << p.np << ";\n";
    os << "order = " << p.order << ";\n";
    os << "qmax = " << p.qmax << ";\n";
    os << "kmax = " << p.kmax << ";\n";
    os << "degree = " << p.degree << ";\n";
    os << "samples = " << p.samples << ";\n";
    os << "basepoint = (";
    for (size_t i = 0; i < p.basepoint.size(); ++i) {
        if (i) os << ", ";
        os << p.basepoint[i].str();
    }
    os << ");\n";
    for (size_t j = 0; j < p.rho.size(); ++j)
        os << "rho" << j + 1 << " = " << polynomial_text(p.rho[j]) << ";\n";
    for (size_t j = 0; j < p.rhop.size(); ++j)
        os << "rhop" << j + 1 << " = " << polynomial_text(p.rhop[j]) << ";\n";
    for (size_t j = 0; j < p.fnum.size(); ++j)
        os << "F" << j + 1 << " = (" << polynomial_text(p.fnum[j]) << ")/("
           << polynomial_text(p.fden[j]) << ");\n";
    return os.str();
}

MultiPolynomial parse_series_file(const std::string& text) {
    auto table = std::make_shared<VariableTable>();
    table->add("t", VarKind::Parameter);
    return Parser(text).parse_series(table);
}

}  // namespace cralg
