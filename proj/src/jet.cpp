#include "lightlike/jet.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "lightlike/errors.hpp"

namespace lightlike {

namespace {

constexpr int kExpU[Jet3::coeff_count] = {0, 1, 0, 2, 1, 0, 3, 2, 1, 0};
constexpr int kExpV[Jet3::coeff_count] = {0, 0, 1, 0, 1, 2, 0, 1, 2, 3};
constexpr int kDegree[Jet3::coeff_count] = {0, 1, 1, 2, 2, 2, 3, 3, 3, 3};

// flat index for exponents (i, j), -1 when i + j > 3
constexpr int kIndex[4][4] = {
    {0, 2, 5, 9},
    {1, 4, 8, -1},
    {3, 7, -1, -1},
    {6, -1, -1, -1},
};

constexpr double kDivisionFloor = 1e-13;

} // namespace

Jet3 Jet3::constant(double value) {
    Jet3 out;
    out.c_[0] = value;
    return out;
}

Jet3 Jet3::variable(Param which, double value) {
    Jet3 out;
    out.c_[0] = value;
    out.c_[which == Param::u ? 1 : 2] = 1.0;
    return out;
}

Jet3 Jet3::from_coeffs(const std::array<double, coeff_count>& coeffs, int order) {
    Jet3 out;
    out.c_ = coeffs;
    out.order_ = std::clamp(order, 0, 3);
    out.truncate();
    return out;
}

double Jet3::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > 3) throw bad_argument_error("jet coefficient index out of range");
    return c_[kIndex[i][j]];
}

void Jet3::truncate() {
    for (int k = 0; k < coeff_count; ++k) {
        if (kDegree[k] > order_) c_[k] = 0.0;
    }
}

Jet3 Jet3::operator-() const {
    Jet3 out = *this;
    for (double& c : out.c_) c = -c;
    return out;
}

Jet3& Jet3::operator+=(const Jet3& rhs) {
    for (int k = 0; k < coeff_count; ++k) c_[k] += rhs.c_[k];
    order_ = std::min(order_, rhs.order_);
    truncate();
    return *this;
}

Jet3& Jet3::operator-=(const Jet3& rhs) {
    for (int k = 0; k < coeff_count; ++k) c_[k] -= rhs.c_[k];
    order_ = std::min(order_, rhs.order_);
    truncate();
    return *this;
}

Jet3& Jet3::operator*=(const Jet3& rhs) {
    std::array<double, coeff_count> out{};
    for (int p = 0; p < coeff_count; ++p) {
        if (c_[p] == 0.0) continue;
        for (int q = 0; q < coeff_count; ++q) {
            if (kDegree[p] + kDegree[q] > 3) continue;
            if (rhs.c_[q] == 0.0) continue;
            out[kIndex[kExpU[p] + kExpU[q]][kExpV[p] + kExpV[q]]] += c_[p] * rhs.c_[q];
        }
    }
    c_ = out;
    order_ = std::min(order_, rhs.order_);
    truncate();
    return *this;
}

Jet3& Jet3::operator/=(const Jet3& rhs) {
    if (std::abs(rhs.c_[0]) < kDivisionFloor) {
        throw domain_error("jet division by a value too close to zero");
    }
    // Graded long division: flat index order is ascending in total degree,
    // so q[m] only depends on earlier q entries.
    std::array<double, coeff_count> q{};
    for (int m = 0; m < coeff_count; ++m) {
        double acc = c_[m];
        for (int r = 1; r < coeff_count; ++r) {
            int iu = kExpU[m] - kExpU[r];
            int iv = kExpV[m] - kExpV[r];
            if (iu < 0 || iv < 0) continue;
            acc -= q[kIndex[iu][iv]] * rhs.c_[r];
        }
        q[m] = acc / rhs.c_[0];
    }
    c_ = q;
    order_ = std::min(order_, rhs.order_);
    truncate();
    return *this;
}

Jet3& Jet3::operator+=(double rhs) {
    c_[0] += rhs;
    return *this;
}

Jet3& Jet3::operator-=(double rhs) {
    c_[0] -= rhs;
    return *this;
}

Jet3& Jet3::operator*=(double rhs) {
    for (double& c : c_) c *= rhs;
    return *this;
}

Jet3& Jet3::operator/=(double rhs) {
    if (std::abs(rhs) < kDivisionFloor) {
        throw domain_error("jet division by a value too close to zero");
    }
    for (double& c : c_) c /= rhs;
    return *this;
}

Jet3 operator-(double lhs, const Jet3& rhs) {
    Jet3 out = -rhs;
    out.c_[0] += lhs;
    return out;
}

Jet3 operator/(double lhs, const Jet3& rhs) {
    return Jet3::constant(lhs) /= rhs;
}

Jet3 Jet3::partial(Param which) const {
    Jet3 out;
    for (int k = 0; k < coeff_count; ++k) {
        int iu = kExpU[k];
        int iv = kExpV[k];
        if (which == Param::u) {
            ++iu;
        } else {
            ++iv;
        }
        if (iu + iv > 3) continue;
        int src = kIndex[iu][iv];
        out.c_[k] = (which == Param::u ? iu : iv) * c_[src];
    }
    out.order_ = std::max(order_ - 1, 0);
    out.truncate();
    return out;
}

Jet3 compose(UnaryFn fn, const Jet3& a, double param) {
    const double x = a.c_[0];
    // Taylor coefficients of fn about x: f(x), f'(x), f''(x)/2, f'''(x)/6.
    double f[4];
    switch (fn) {
        case UnaryFn::sin:
            f[0] = std::sin(x);
            f[1] = std::cos(x);
            f[2] = -f[0] / 2.0;
            f[3] = -f[1] / 6.0;
            break;
        case UnaryFn::cos:
            f[0] = std::cos(x);
            f[1] = -std::sin(x);
            f[2] = -f[0] / 2.0;
            f[3] = -f[1] / 6.0;
            break;
        case UnaryFn::tan: {
            if (std::abs(std::cos(x)) < 1e-13) throw domain_error("tan at a pole");
            const double t = std::tan(x);
            const double s = 1.0 + t * t;
            f[0] = t;
            f[1] = s;
            f[2] = t * s;
            f[3] = s * (1.0 + 3.0 * t * t) / 3.0;
            break;
        }
        case UnaryFn::sinh:
            f[0] = std::sinh(x);
            f[1] = std::cosh(x);
            f[2] = f[0] / 2.0;
            f[3] = f[1] / 6.0;
            break;
        case UnaryFn::cosh:
            f[0] = std::cosh(x);
            f[1] = std::sinh(x);
            f[2] = f[0] / 2.0;
            f[3] = f[1] / 6.0;
            break;
        case UnaryFn::exp: {
            const double e = std::exp(x);
            f[0] = e;
            f[1] = e;
            f[2] = e / 2.0;
            f[3] = e / 6.0;
            break;
        }
        case UnaryFn::log:
            if (!(x > 0.0)) throw domain_error("ln of a non-positive value");
            f[0] = std::log(x);
            f[1] = 1.0 / x;
            f[2] = -1.0 / (2.0 * x * x);
            f[3] = 1.0 / (3.0 * x * x * x);
            break;
        case UnaryFn::sqrt: {
            if (!(x > 0.0)) throw domain_error("sqrt of a non-positive value");
            const double s = std::sqrt(x);
            f[0] = s;
            f[1] = 1.0 / (2.0 * s);
            f[2] = -1.0 / (8.0 * x * s);
            f[3] = 1.0 / (16.0 * x * x * s);
            break;
        }
        case UnaryFn::pow_const: {
            const double p = param;
            const bool integral = std::isfinite(p) && p == std::floor(p);
            if (x < 0.0 && !integral) throw domain_error("pow of a negative base with a non-integer exponent");
            if (std::abs(x) < kDivisionFloor && (!integral || p < 0.0)) {
                throw domain_error("pow at zero with a non-integer or negative exponent");
            }
            const double k1 = p;
            const double k2 = p * (p - 1.0) / 2.0;
            const double k3 = p * (p - 1.0) * (p - 2.0) / 6.0;
            f[0] = std::pow(x, p);
            f[1] = k1 == 0.0 ? 0.0 : k1 * std::pow(x, p - 1.0);
            f[2] = k2 == 0.0 ? 0.0 : k2 * std::pow(x, p - 2.0);
            f[3] = k3 == 0.0 ? 0.0 : k3 * std::pow(x, p - 3.0);
            break;
        }
    }

    Jet3 h = a;
    h -= x; // small part: no constant term, so h^4 only feeds degree > 3
    Jet3 out = Jet3::constant(f[3]);
    out *= h;
    out += f[2];
    out *= h;
    out += f[1];
    out *= h;
    out.c_[0] = 0.0;
    out += f[0];
    out.order_ = a.order_;
    out.truncate();
    return out;
}

Jet3 sin(const Jet3& a) { return compose(UnaryFn::sin, a); }
Jet3 cos(const Jet3& a) { return compose(UnaryFn::cos, a); }
Jet3 tan(const Jet3& a) { return compose(UnaryFn::tan, a); }
Jet3 sinh(const Jet3& a) { return compose(UnaryFn::sinh, a); }
Jet3 cosh(const Jet3& a) { return compose(UnaryFn::cosh, a); }
Jet3 exp(const Jet3& a) { return compose(UnaryFn::exp, a); }
Jet3 log(const Jet3& a) { return compose(UnaryFn::log, a); }
Jet3 sqrt(const Jet3& a) { return compose(UnaryFn::sqrt, a); }
Jet3 pow(const Jet3& a, double exponent) { return compose(UnaryFn::pow_const, a, exponent); }

Jet3 directional(const Jet3& field, double xu, double xv) {
    Jet3 out = field.partial_u();
    out *= xu;
    Jet3 dv = field.partial_v();
    dv *= xv;
    out += dv;
    return out;
}

Jet3 directional(const Jet3& field, const Jet3& xu, const Jet3& xv) {
    return field.partial_u() * xu + field.partial_v() * xv;
}

std::ostream& operator<<(std::ostream& os, const Jet3& jet) {
    os << "jet3[";
    for (int k = 0; k < Jet3::coeff_count; ++k) {
        if (k) os << ", ";
        os << jet[k];
    }
    return os << "; order " << jet.order() << "]";
}

} // namespace lightlike
