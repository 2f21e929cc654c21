#include "lightlike/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "lightlike/errors.hpp"

namespace lightlike {

struct Expr::Node {
    ExprKind kind;
    double number = 0.0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make_node(ExprKind kind, NodePtr a = nullptr, NodePtr b = nullptr, double number = 0.0) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->number = number;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

bool is_unary_fn(ExprKind k) {
    switch (k) {
        case ExprKind::sin:
        case ExprKind::cos:
        case ExprKind::tan:
        case ExprKind::sinh:
        case ExprKind::cosh:
        case ExprKind::exp:
        case ExprKind::log:
        case ExprKind::sqrt:
            return true;
        default:
            return false;
    }
}

const char* fn_name(ExprKind k) {
    switch (k) {
        case ExprKind::sin: return "sin";
        case ExprKind::cos: return "cos";
        case ExprKind::tan: return "tan";
        case ExprKind::sinh: return "sinh";
        case ExprKind::cosh: return "cosh";
        case ExprKind::exp: return "exp";
        case ExprKind::log: return "ln";
        case ExprKind::sqrt: return "sqrt";
        default: return "?";
    }
}

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// ---------------------------------------------------------------------------
// Tokenizer / parser
// ---------------------------------------------------------------------------

struct Token {
    enum class Kind { number, ident, op, end } kind;
    std::string text;
    double number = 0.0;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) {
                ++i;
            }
            if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
                if (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                    i = j;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                }
            }
            std::string lit(text.substr(start, i - start));
            char* end = nullptr;
            const double v = std::strtod(lit.c_str(), &end);
            if (end != lit.c_str() + lit.size()) {
                throw SyntaxError(start, "malformed number \"" + lit + "\"");
            }
            out.push_back({Token::Kind::number, lit, v, start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
            }
            out.push_back({Token::Kind::ident, std::string(text.substr(start, i - start)), 0.0, start});
            continue;
        }
        if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
            out.push_back({Token::Kind::op, std::string(1, c), 0.0, i});
            ++i;
            continue;
        }
        throw SyntaxError(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Kind::end, "", 0.0, text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    NodePtr run() {
        NodePtr e = parse_sum();
        if (!at_end()) throw SyntaxError(peek().offset, "unexpected trailing input \"" + peek().text + "\"");
        return e;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;

    const Token& peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().kind == Token::Kind::end; }
    const Token& advance() { return tokens_[pos_++]; }

    bool match_op(char c) {
        if (peek().kind == Token::Kind::op && peek().text[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_op(char c, const char* what) {
        if (!match_op(c)) {
            throw SyntaxError(peek().offset, std::string("expected '") + c + "' " + what);
        }
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_term();
        for (;;) {
            if (match_op('+')) {
                lhs = make_node(ExprKind::add, lhs, parse_term());
            } else if (match_op('-')) {
                lhs = make_node(ExprKind::sub, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            if (match_op('*')) {
                lhs = make_node(ExprKind::mul, lhs, parse_factor());
            } else if (match_op('/')) {
                lhs = make_node(ExprKind::div, lhs, parse_factor());
            } else {
                return lhs;
            }
        }
    }

    // factor handles unary minus; pow binds tighter, so -u^2 is -(u^2)
    NodePtr parse_factor() {
        if (match_op('-')) return make_node(ExprKind::neg, parse_factor());
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (!match_op('^')) return base;
        const std::size_t exp_offset = peek().offset;
        NodePtr exponent = parse_factor(); // right associative, allows u^-2
        return make_node(ExprKind::pow, base, nullptr, fold_exponent(exponent, exp_offset));
    }

    double fold_exponent(const NodePtr& e, std::size_t offset) {
        switch (e->kind) {
            case ExprKind::number: return e->number;
            case ExprKind::const_pi: return M_PI;
            case ExprKind::const_e: return M_E;
            case ExprKind::neg: return -fold_exponent(e->a, offset);
            case ExprKind::add: return fold_exponent(e->a, offset) + fold_exponent(e->b, offset);
            case ExprKind::sub: return fold_exponent(e->a, offset) - fold_exponent(e->b, offset);
            case ExprKind::mul: return fold_exponent(e->a, offset) * fold_exponent(e->b, offset);
            case ExprKind::div: return fold_exponent(e->a, offset) / fold_exponent(e->b, offset);
            case ExprKind::pow: return e->number; // already folded
            default:
                throw SyntaxError(offset, "pow exponent must be a constant expression");
        }
    }

    NodePtr parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::number) {
            advance();
            return make_node(ExprKind::number, nullptr, nullptr, t.number);
        }
        if (t.kind == Token::Kind::ident) {
            advance();
            if (t.text == "u") return make_node(ExprKind::var_u);
            if (t.text == "v") return make_node(ExprKind::var_v);
            if (t.text == "pi") return make_node(ExprKind::const_pi);
            if (t.text == "e") return make_node(ExprKind::const_e);
            static const std::map<std::string, ExprKind> fns = {
                {"sin", ExprKind::sin},   {"cos", ExprKind::cos},   {"tan", ExprKind::tan},
                {"sinh", ExprKind::sinh}, {"cosh", ExprKind::cosh}, {"exp", ExprKind::exp},
                {"ln", ExprKind::log},    {"sqrt", ExprKind::sqrt},
            };
            auto it = fns.find(t.text);
            if (it == fns.end()) throw unknown_identifier_error(t.offset, t.text);
            expect_op('(', "after function name");
            NodePtr arg = parse_sum();
            expect_op(')', "to close function argument");
            return make_node(it->second, arg);
        }
        if (match_op('(')) {
            NodePtr inner = parse_sum();
            expect_op(')', "to close parenthesis");
            return inner;
        }
        throw SyntaxError(t.offset, t.kind == Token::Kind::end
                                         ? "unexpected end of input"
                                         : "unexpected token \"" + t.text + "\"");
    }
};

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

// precedence levels: add 1, mul 2, unary 3, pow 4, atom 5
int precedence(const Expr::Node& n) {
    switch (n.kind) {
        case ExprKind::add:
        case ExprKind::sub:
            return 1;
        case ExprKind::mul:
        case ExprKind::div:
            return 2;
        case ExprKind::neg:
            return 3;
        case ExprKind::pow:
            return 4;
        default:
            return 5;
    }
}

void print_node(std::ostringstream& os, const Expr::Node& n, int min_level) {
    const int level = precedence(n);
    const bool parens = level < min_level;
    if (parens) os << '(';
    switch (n.kind) {
        case ExprKind::number: os << format_number(n.number); break;
        case ExprKind::var_u: os << 'u'; break;
        case ExprKind::var_v: os << 'v'; break;
        case ExprKind::const_pi: os << "pi"; break;
        case ExprKind::const_e: os << 'e'; break;
        case ExprKind::neg:
            os << '-';
            print_node(os, *n.a, 3);
            break;
        case ExprKind::add:
            print_node(os, *n.a, 1);
            os << " + ";
            print_node(os, *n.b, 2);
            break;
        case ExprKind::sub:
            print_node(os, *n.a, 1);
            os << " - ";
            print_node(os, *n.b, 2);
            break;
        case ExprKind::mul:
            print_node(os, *n.a, 2);
            os << '*';
            print_node(os, *n.b, 3);
            break;
        case ExprKind::div:
            print_node(os, *n.a, 2);
            os << '/';
            print_node(os, *n.b, 3);
            break;
        case ExprKind::pow:
            print_node(os, *n.a, 5);
            os << '^' << format_number(n.number);
            break;
        default:
            os << fn_name(n.kind) << '(';
            print_node(os, *n.a, 1);
            os << ')';
            break;
    }
    if (parens) os << ')';
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

template <typename S>
struct Scalars;

template <>
struct Scalars<double> {
    static double constant(double c) { return c; }
    static double value(double x) { return x; }
};

template <>
struct Scalars<Jet3> {
    static Jet3 constant(double c) { return Jet3::constant(c); }
    static double value(const Jet3& x) { return x.value(); }
};

// The double path mirrors the jet domain checks so that both evaluators are
// defined on exactly the same inputs and the constant jet coefficient is
// bit-identical to plain evaluation.
template <typename S>
S eval_node(const Expr::Node& n, const S& u, const S& v) {
    using Sc = Scalars<S>;
    switch (n.kind) {
        case ExprKind::number: return Sc::constant(n.number);
        case ExprKind::var_u: return u;
        case ExprKind::var_v: return v;
        case ExprKind::const_pi: return Sc::constant(M_PI);
        case ExprKind::const_e: return Sc::constant(M_E);
        case ExprKind::neg: return -eval_node(*n.a, u, v);
        case ExprKind::add: return eval_node(*n.a, u, v) + eval_node(*n.b, u, v);
        case ExprKind::sub: return eval_node(*n.a, u, v) - eval_node(*n.b, u, v);
        case ExprKind::mul: return eval_node(*n.a, u, v) * eval_node(*n.b, u, v);
        case ExprKind::div: {
            S a = eval_node(*n.a, u, v);
            S b = eval_node(*n.b, u, v);
            if constexpr (std::is_same_v<S, double>) {
                if (std::abs(b) < 1e-13) throw domain_error("division by a value too close to zero");
            }
            return a / b;
        }
        case ExprKind::pow: {
            S a = eval_node(*n.a, u, v);
            if constexpr (std::is_same_v<S, double>) {
                const double p = n.number;
                const bool integral = std::isfinite(p) && p == std::floor(p);
                if (a < 0.0 && !integral) throw domain_error("pow of a negative base with a non-integer exponent");
                if (std::abs(a) < 1e-13 && (!integral || p < 0.0)) {
                    throw domain_error("pow at zero with a non-integer or negative exponent");
                }
                return std::pow(a, p);
            } else {
                return pow(a, n.number);
            }
        }
        default: {
            S a = eval_node(*n.a, u, v);
            if constexpr (std::is_same_v<S, double>) {
                switch (n.kind) {
                    case ExprKind::sin: return std::sin(a);
                    case ExprKind::cos: return std::cos(a);
                    case ExprKind::tan:
                        if (std::abs(std::cos(a)) < 1e-13) throw domain_error("tan at a pole");
                        return std::tan(a);
                    case ExprKind::sinh: return std::sinh(a);
                    case ExprKind::cosh: return std::cosh(a);
                    case ExprKind::exp: return std::exp(a);
                    case ExprKind::log:
                        if (!(a > 0.0)) throw domain_error("ln of a non-positive value");
                        return std::log(a);
                    case ExprKind::sqrt:
                        if (!(a > 0.0)) throw domain_error("sqrt of a non-positive value");
                        return std::sqrt(a);
                    default: break;
                }
            } else {
                switch (n.kind) {
                    case ExprKind::sin: return sin(a);
                    case ExprKind::cos: return cos(a);
                    case ExprKind::tan: return tan(a);
                    case ExprKind::sinh: return sinh(a);
                    case ExprKind::cosh: return cosh(a);
                    case ExprKind::exp: return exp(a);
                    case ExprKind::log: return log(a);
                    case ExprKind::sqrt: return sqrt(a);
                    default: break;
                }
            }
            throw bad_argument_error("corrupt expression node");
        }
    }
}

const Expr::Node& deref(const std::shared_ptr<const Expr::Node>& node) {
    if (!node) throw bad_argument_error("empty expression");
    return *node;
}

} // namespace

// ---------------------------------------------------------------------------
// Expr
// ---------------------------------------------------------------------------

Expr Expr::parse(std::string_view text) {
    return Expr(Parser(text).run());
}

Expr Expr::number(double value) {
    if (std::signbit(value)) {
        return Expr(make_node(ExprKind::neg, make_node(ExprKind::number, nullptr, nullptr, -value)));
    }
    return Expr(make_node(ExprKind::number, nullptr, nullptr, value));
}

Expr Expr::variable(Param which) {
    return Expr(make_node(which == Param::u ? ExprKind::var_u : ExprKind::var_v));
}

Expr Expr::named_pi() { return Expr(make_node(ExprKind::const_pi)); }
Expr Expr::named_e() { return Expr(make_node(ExprKind::const_e)); }

ExprKind Expr::kind() const { return deref(node_).kind; }

double Expr::number_value() const {
    const Node& n = deref(node_);
    if (n.kind == ExprKind::number) return n.number;
    if (n.kind == ExprKind::pow) return n.number;
    throw bad_argument_error("node has no numeric payload");
}

Expr Expr::child(int i) const {
    const Node& n = deref(node_);
    const auto& c = (i == 0) ? n.a : n.b;
    if (!c) throw bad_argument_error("expression node has no such child");
    return Expr(c);
}

std::string Expr::str() const {
    std::ostringstream os;
    print_node(os, deref(node_), 0);
    return os.str();
}

double Expr::eval(double u, double v) const {
    return eval_node<double>(deref(node_), u, v);
}

Jet3 Expr::eval_jet(double u, double v) const {
    return eval_node<Jet3>(deref(node_), Jet3::variable(Param::u, u), Jet3::variable(Param::v, v));
}

bool Expr::operator==(const Expr& rhs) const {
    struct Cmp {
        static bool eq(const Node* a, const Node* b) {
            if (a == b) return true;
            if (!a || !b) return false;
            if (a->kind != b->kind || a->number != b->number) return false;
            return eq(a->a.get(), b->a.get()) && eq(a->b.get(), b->b.get());
        }
    };
    return Cmp::eq(node_.get(), rhs.node_.get());
}

Expr Expr::operator-() const { return Expr(make_node(ExprKind::neg, node_)); }

Expr operator+(const Expr& a, const Expr& b) { return Expr(make_node(ExprKind::add, a.node_, b.node_)); }
Expr operator-(const Expr& a, const Expr& b) { return Expr(make_node(ExprKind::sub, a.node_, b.node_)); }
Expr operator*(const Expr& a, const Expr& b) { return Expr(make_node(ExprKind::mul, a.node_, b.node_)); }
Expr operator/(const Expr& a, const Expr& b) { return Expr(make_node(ExprKind::div, a.node_, b.node_)); }

Expr sin(const Expr& a) { return Expr(make_node(ExprKind::sin, a.node_)); }
Expr cos(const Expr& a) { return Expr(make_node(ExprKind::cos, a.node_)); }
Expr tan(const Expr& a) { return Expr(make_node(ExprKind::tan, a.node_)); }
Expr sinh(const Expr& a) { return Expr(make_node(ExprKind::sinh, a.node_)); }
Expr cosh(const Expr& a) { return Expr(make_node(ExprKind::cosh, a.node_)); }
Expr exp(const Expr& a) { return Expr(make_node(ExprKind::exp, a.node_)); }
Expr log(const Expr& a) { return Expr(make_node(ExprKind::log, a.node_)); }
Expr sqrt(const Expr& a) { return Expr(make_node(ExprKind::sqrt, a.node_)); }
Expr pow(const Expr& base, double exponent) {
    return Expr(make_node(ExprKind::pow, base.node_, nullptr, exponent));
}

// ---------------------------------------------------------------------------
// Surface files
// ---------------------------------------------------------------------------

std::string Gauge::str() const {
    if (kind == GaugeKind::unit) return "unit";
    return "scale:" + scale.str();
}

Jet3 gauge_jet(const Gauge& gauge, double u, double v) {
    if (gauge.kind == GaugeKind::unit) return Jet3::constant(1.0);
    return gauge.scale.eval_jet(u, v);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct RawValue {
    std::string text;
    std::size_t offset = 0; // byte offset of the value in the file
};

Expr parse_expr_at(const RawValue& raw) {
    try {
        return Expr::parse(raw.text);
    } catch (const SyntaxError& e) {
        throw SyntaxError(raw.offset + e.offset(), e.what());
    } catch (const UnknownIdentifier& e) {
        throw UnknownIdentifier(raw.offset + e.offset(), e.name());
    }
}

Interval parse_range(const std::string& key, const RawValue& raw) {
    std::string_view s = trim(raw.text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw SyntaxError(raw.offset, "expected a bracketed range [lo, hi] for key \"" + key + "\"");
    }
    s = s.substr(1, s.size() - 2);
    const std::size_t comma = s.find(',');
    if (comma == std::string_view::npos) {
        throw SyntaxError(raw.offset, "range for \"" + key + "\" needs two comma-separated values");
    }
    auto parse_double = [&](std::string_view part) {
        const std::string text(trim(part));
        char* end = nullptr;
        const double x = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size()) {
            throw SyntaxError(raw.offset, "malformed number \"" + text + "\" in range for \"" + key + "\"");
        }
        return x;
    };
    Interval out{parse_double(s.substr(0, comma)), parse_double(s.substr(comma + 1))};
    if (!(out.lo < out.hi)) throw bad_range_error(key, out.lo, out.hi);
    return out;
}

RawValue unquote(const std::string& key, const RawValue& raw) {
    std::string_view s = trim(raw.text);
    if (s.size() < 2 || s.front() != '"' || s.back() != '"') {
        throw SyntaxError(raw.offset, "expected a quoted string for key \"" + key + "\"");
    }
    const std::size_t inner_off = raw.offset + (s.data() - raw.text.data()) + 1;
    return {std::string(s.substr(1, s.size() - 2)), inner_off};
}

} // namespace

SurfaceDef parse_surface(std::string_view text) {
    std::map<std::string, RawValue> values;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);

        // strip comments; quotes in this format never contain '#'
        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);

        if (!trim(line).empty()) {
            const std::size_t eq = line.find('=');
            if (eq == std::string_view::npos) {
                throw SyntaxError(line_start, "expected key = value");
            }
            const std::string key{trim(line.substr(0, eq))};
            static const char* known[] = {"name", "x0", "x1", "x2", "u", "v", "gauge"};
            bool ok = false;
            for (const char* k : known) ok = ok || key == k;
            if (!ok) throw SyntaxError(line_start, "unknown key \"" + key + "\"");
            if (values.count(key)) throw SyntaxError(line_start, "duplicate key \"" + key + "\"");
            std::string_view val = line.substr(eq + 1);
            values[key] = {std::string(val), line_start + eq + 1};
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }

    for (const char* k : {"name", "x0", "x1", "x2", "u", "v"}) {
        if (!values.count(k)) throw missing_key_error(k);
    }

    SurfaceDef out;
    out.name = unquote("name", values.at("name")).text;
    out.x0 = parse_expr_at(unquote("x0", values.at("x0")));
    out.x1 = parse_expr_at(unquote("x1", values.at("x1")));
    out.x2 = parse_expr_at(unquote("x2", values.at("x2")));
    out.u_range = parse_range("u", values.at("u"));
    out.v_range = parse_range("v", values.at("v"));
    if (values.count("gauge")) {
        const RawValue g = unquote("gauge", values.at("gauge"));
        if (g.text == "unit") {
            out.gauge = Gauge::unit();
        } else if (g.text.rfind("scale:", 0) == 0) {
            RawValue inner{g.text.substr(6), g.offset + 6};
            out.gauge = Gauge::scaled(parse_expr_at(inner));
        } else {
            throw SyntaxError(g.offset, "gauge must be \"unit\" or \"scale:<expr>\"");
        }
    }
    return out;
}

std::string print_surface(const SurfaceDef& surface) {
    std::ostringstream os;
    os << "name = \"" << surface.name << "\"\n";
    os << "x0 = \"" << surface.x0.str() << "\"\n";
    os << "x1 = \"" << surface.x1.str() << "\"\n";
    os << "x2 = \"" << surface.x2.str() << "\"\n";
    os << "u = [" << format_number(surface.u_range.lo) << ", " << format_number(surface.u_range.hi)
       << "]\n";
    os << "v = [" << format_number(surface.v_range.lo) << ", " << format_number(surface.v_range.hi)
       << "]\n";
    os << "gauge = \"" << surface.gauge.str() << "\"\n";
    return os.str();
}

} // namespace lightlike
