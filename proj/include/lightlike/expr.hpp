#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "lightlike/jet.hpp"

namespace lightlike {

enum class ExprKind {
    number,
    var_u,
    var_v,
    const_pi,
    const_e,
    neg,
    sin,
    cos,
    tan,
    sinh,
    cosh,
    exp,
    log,
    sqrt,
    add,
    sub,
    mul,
    div,
    pow,
};

/// Immutable expression tree in the variables u and v.
///
/// Grammar: pow binds tighter than unary minus, which binds tighter than
/// * and /, which bind tighter than + and -. Everything is left
/// associative except pow. Function application requires parentheses.
/// pow exponents are restricted to constant subexpressions and folded to a
/// number at parse time.
class Expr {
public:
    Expr() = default;

    static Expr parse(std::string_view text);

    static Expr number(double value);
    static Expr variable(Param which);
    static Expr named_pi();
    static Expr named_e();

    bool valid() const { return node_ != nullptr; }

    ExprKind kind() const;
    double number_value() const; // kind() == number
    Expr child(int i) const;     // 0 for unary, 0/1 for binary

    /// Canonical text form; parse(str()) is structurally equal to *this.
    std::string str() const;

    double eval(double u, double v) const;
    Jet3 eval_jet(double u, double v) const;

    bool operator==(const Expr& rhs) const;
    bool operator!=(const Expr& rhs) const { return !(*this == rhs); }

    Expr operator-() const;
    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);

    friend Expr sin(const Expr& a);
    friend Expr cos(const Expr& a);
    friend Expr tan(const Expr& a);
    friend Expr sinh(const Expr& a);
    friend Expr cosh(const Expr& a);
    friend Expr exp(const Expr& a);
    friend Expr log(const Expr& a);
    friend Expr sqrt(const Expr& a);
    friend Expr pow(const Expr& base, double exponent);

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

enum class GaugeKind { unit, scale };

/// Scaling of the radical field: xi -> s(u,v) xi, N -> N / s.
struct Gauge {
    GaugeKind kind = GaugeKind::unit;
    Expr scale; // valid iff kind == scale

    static Gauge unit() { return {}; }
    static Gauge scaled(Expr expr) { return {GaugeKind::scale, std::move(expr)}; }
    std::string str() const;
};

/// A parametrized surface (x0, x1, x2)(u, v) with its domain box and the
/// gauge to apply to the radical field. x0 is the timelike coordinate.
struct SurfaceDef {
    std::string name;
    Expr x0, x1, x2;
    Interval u_range, v_range;
    Gauge gauge;

    SurfaceDef with_gauge(Gauge g) const {
        SurfaceDef out = *this;
        out.gauge = std::move(g);
        return out;
    }
};

/// Parses the line-based `key = value` surface format. Required keys:
/// name, x0, x1, x2 (quoted expressions), u, v (two-element bracketed
/// ranges). Optional: gauge ("unit" or "scale:<expr>"). '#' starts a
/// comment; unknown keys are an error.
SurfaceDef parse_surface(std::string_view text);

std::string print_surface(const SurfaceDef& surface);

/// Gauge scale as a jet at (u, v); the unit gauge is the constant 1.
Jet3 gauge_jet(const Gauge& gauge, double u, double v);

} // namespace lightlike
