#pragma once

#include <array>
#include <iosfwd>

namespace lightlike {

/// Parameter identifiers for the two independent variables.
enum class Param { u, v };

/// Univariate smooth functions available for jet composition.
enum class UnaryFn { sin, cos, tan, sinh, cosh, exp, log, sqrt, pow_const };

/// Truncated bivariate Taylor expansion of total order <= 3.
///
/// Ten coefficients are stored for the monomials
///   1, du, dv, du^2, du dv, dv^2, du^3, du^2 dv, du dv^2, dv^3
/// about the evaluation point, as Taylor coefficients (partial derivative
/// divided by the factorials of the exponents). Arithmetic is exact
/// truncation: for polynomial input of degree <= 3 the result is exact up
/// to roundoff, and the constant coefficient always equals the pointwise
/// value of the represented function.
///
/// order() tracks how many total degrees are trustworthy. Fresh seeds and
/// constants carry order 3; a partial derivative loses one order and
/// combining jets keeps the minimum. Coefficients above the valid order are
/// kept at zero.
class Jet3 {
public:
    static constexpr int coeff_count = 10;

    /// Zero jet (exact, order 3).
    Jet3() = default;

    static Jet3 constant(double value);

    /// Seed for one of the two variables: constant coefficient `value`,
    /// matching linear coefficient 1, everything else 0.
    static Jet3 variable(Param which, double value);

    /// Raw construction, mainly for tests and serialization.
    static Jet3 from_coeffs(const std::array<double, coeff_count>& coeffs, int order = 3);

    double value() const { return c_[0]; }

    /// Taylor coefficient of du^i dv^j (0 <= i + j <= 3).
    double coeff(int i, int j) const;

    double operator[](int k) const { return c_[k]; }

    int order() const { return order_; }

    Jet3 operator-() const;
    Jet3& operator+=(const Jet3& rhs);
    Jet3& operator-=(const Jet3& rhs);
    Jet3& operator*=(const Jet3& rhs);
    Jet3& operator/=(const Jet3& rhs);
    Jet3& operator+=(double rhs);
    Jet3& operator-=(double rhs);
    Jet3& operator*=(double rhs);
    Jet3& operator/=(double rhs);

    friend Jet3 operator+(Jet3 lhs, const Jet3& rhs) { return lhs += rhs; }
    friend Jet3 operator-(Jet3 lhs, const Jet3& rhs) { return lhs -= rhs; }
    friend Jet3 operator*(Jet3 lhs, const Jet3& rhs) { return lhs *= rhs; }
    friend Jet3 operator/(Jet3 lhs, const Jet3& rhs) { return lhs /= rhs; }
    friend Jet3 operator+(Jet3 lhs, double rhs) { return lhs += rhs; }
    friend Jet3 operator-(Jet3 lhs, double rhs) { return lhs -= rhs; }
    friend Jet3 operator*(Jet3 lhs, double rhs) { return lhs *= rhs; }
    friend Jet3 operator/(Jet3 lhs, double rhs) { return lhs /= rhs; }
    friend Jet3 operator+(double lhs, Jet3 rhs) { return rhs += lhs; }
    friend Jet3 operator*(double lhs, Jet3 rhs) { return rhs *= lhs; }
    friend Jet3 operator-(double lhs, const Jet3& rhs);
    friend Jet3 operator/(double lhs, const Jet3& rhs);

    /// Partial derivative in the given direction; order drops by one.
    Jet3 partial(Param which) const;
    Jet3 partial_u() const { return partial(Param::u); }
    Jet3 partial_v() const { return partial(Param::v); }

private:
    std::array<double, coeff_count> c_{};
    int order_ = 3;

    void truncate();
    friend Jet3 compose(UnaryFn fn, const Jet3& a, double param);
};

/// Faa-di-Bruno style composition f(a) through order 3. `param` is the
/// exponent for pow_const and ignored otherwise. Throws a domain error when
/// the constant coefficient of `a` violates the domain of `fn`.
Jet3 compose(UnaryFn fn, const Jet3& a, double param = 0.0);

Jet3 sin(const Jet3& a);
Jet3 cos(const Jet3& a);
Jet3 tan(const Jet3& a);
Jet3 sinh(const Jet3& a);
Jet3 cosh(const Jet3& a);
Jet3 exp(const Jet3& a);
Jet3 log(const Jet3& a);
Jet3 sqrt(const Jet3& a);
Jet3 pow(const Jet3& a, double exponent);

/// X^u d_u(field) + X^v d_v(field) for a coordinate-constant direction.
Jet3 directional(const Jet3& field, double xu, double xv);

/// Derivative along a vector field whose parameter components are
/// themselves jets; this is what nested curve derivatives need.
Jet3 directional(const Jet3& field, const Jet3& xu, const Jet3& xv);

std::ostream& operator<<(std::ostream& os, const Jet3& jet);

} // namespace lightlike
