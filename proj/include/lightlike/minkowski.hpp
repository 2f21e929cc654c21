#pragma once

#include <cmath>

#include "lightlike/jet.hpp"

namespace lightlike {

/// Ambient vector of R^3_1 over any scalar ring (double for point values,
/// Jet3 for differentiable fields). x0 is the timelike coordinate.
template <typename S>
struct Vec3 {
    S x0{}, x1{}, x2{};

    Vec3& operator+=(const Vec3& rhs) {
        x0 += rhs.x0;
        x1 += rhs.x1;
        x2 += rhs.x2;
        return *this;
    }
    Vec3& operator-=(const Vec3& rhs) {
        x0 -= rhs.x0;
        x1 -= rhs.x1;
        x2 -= rhs.x2;
        return *this;
    }
    friend Vec3 operator+(Vec3 lhs, const Vec3& rhs) { return lhs += rhs; }
    friend Vec3 operator-(Vec3 lhs, const Vec3& rhs) { return lhs -= rhs; }
    Vec3 operator-() const { return {-x0, -x1, -x2}; }

    template <typename T>
    friend Vec3 operator*(const Vec3& lhs, const T& s) {
        return {lhs.x0 * s, lhs.x1 * s, lhs.x2 * s};
    }
    template <typename T>
    friend Vec3 operator*(const T& s, const Vec3& rhs) {
        return rhs * s;
    }
    template <typename T>
    friend Vec3 operator/(const Vec3& lhs, const T& s) {
        return {lhs.x0 / s, lhs.x1 / s, lhs.x2 / s};
    }
};

using Vec3M = Vec3<double>;
using JetVec3 = Vec3<Jet3>;

/// The metric: g(a, b) = -a0 b0 + a1 b1 + a2 b2.
template <typename S>
S mdot(const Vec3<S>& a, const Vec3<S>& b) {
    return -(a.x0 * b.x0) + a.x1 * b.x1 + a.x2 * b.x2;
}

/// Euclidean dot product, used for scale estimates and degeneracy tests.
template <typename S>
S edot(const Vec3<S>& a, const Vec3<S>& b) {
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2;
}

/// Coordinate cross product of R^3 (no metric twist).
template <typename S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
    return {a.x1 * b.x2 - a.x2 * b.x1,
            a.x2 * b.x0 - a.x0 * b.x2,
            a.x0 * b.x1 - a.x1 * b.x0};
}

/// Index lowering: flips the sign of the timelike component, so that
/// g(a, b) equals the Euclidean dot of flip(a) with b.
template <typename S>
Vec3<S> metric_flip(const Vec3<S>& a) {
    return {-a.x0, a.x1, a.x2};
}

inline double enorm(const Vec3M& a) { return std::sqrt(edot(a, a)); }

inline Vec3M value(const JetVec3& a) {
    return {a.x0.value(), a.x1.value(), a.x2.value()};
}

inline JetVec3 partial(const JetVec3& a, Param which) {
    return {a.x0.partial(which), a.x1.partial(which), a.x2.partial(which)};
}

/// Derivative of an ambient field along a tangent field with parameter
/// components (xu, xv); realizes the flat ambient connection.
inline JetVec3 directional(const JetVec3& field, const Jet3& xu, const Jet3& xv) {
    return {directional(field.x0, xu, xv),
            directional(field.x1, xu, xv),
            directional(field.x2, xu, xv)};
}

inline JetVec3 to_jets(const Vec3M& a) {
    return {Jet3::constant(a.x0), Jet3::constant(a.x1), Jet3::constant(a.x2)};
}

enum class CausalCharacter { zero, null, spacelike, timelike };

/// Classifies a vector relative to `tol`: zero when the Euclidean norm is
/// at most tol, null when |g(a,a)| <= tol * |a|_e^2, otherwise by the sign
/// of g(a,a).
CausalCharacter causal_character(const Vec3M& a, double tol);

/// Determinant of the 3x3 matrix with rows a, b, c. Vanishing is the
/// linear-dependence test behind planarity of normal sections.
double triple_product(const Vec3M& a, const Vec3M& b, const Vec3M& c);

/// The unique N with g(N, xi) = 1, g(N, N) = 0, g(N, w) = 0 for a null
/// nonzero xi and a spacelike w orthogonal to it. Built by picking a helper
/// V orthogonal to w with g(V, xi) != 0 and normalizing
/// V - g(V,V)/(2 g(V,xi)) xi by g(V, xi).
Vec3M solve_transversal(const Vec3M& xi, const Vec3M& w);

/// Same construction over jet fields; the helper V is built from the fields
/// themselves so the orthogonality constraints hold identically, not just
/// at the base point.
JetVec3 solve_transversal(const JetVec3& xi, const JetVec3& w);

} // namespace lightlike
