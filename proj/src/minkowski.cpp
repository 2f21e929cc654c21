#include "lightlike/minkowski.hpp"

#include <cmath>

#include "lightlike/errors.hpp"

namespace lightlike {

CausalCharacter causal_character(const Vec3M& a, double tol) {
    if (!(tol > 0.0)) throw bad_argument_error("causal_character: tol must be positive");
    const double en2 = edot(a, a);
    if (std::sqrt(en2) <= tol) return CausalCharacter::zero;
    const double m = mdot(a, a);
    if (std::abs(m) <= tol * en2) return CausalCharacter::null;
    return m > 0.0 ? CausalCharacter::spacelike : CausalCharacter::timelike;
}

double triple_product(const Vec3M& a, const Vec3M& b, const Vec3M& c) {
    return edot(a, cross(b, c));
}

namespace {

// Helper V for the transversal formula: any field orthogonal to w with
// g(V, xi) != 0 works and the result is V-independent. cross(flip(w), xi)
// is orthogonal to w by construction and never pairs to zero with a valid
// null xi; the axis fallbacks guard against degenerate input.
template <typename S>
Vec3<S> transversal_from(const Vec3<S>& xi, const Vec3<S>& w, const Vec3<S>& helper, const S& pairing) {
    const S half_vv = mdot(helper, helper) / (pairing * 2.0);
    return (helper - xi * half_vv) / pairing;
}

double scalar_value(double x) { return x; }
double scalar_value(const Jet3& x) { return x.value(); }

template <typename S>
Vec3<S> solve_transversal_impl(const Vec3<S>& xi, const Vec3<S>& w) {
    const Vec3M xi0 = {scalar_value(xi.x0), scalar_value(xi.x1), scalar_value(xi.x2)};
    const Vec3M w0 = {scalar_value(w.x0), scalar_value(w.x1), scalar_value(w.x2)};
    const double scale = enorm(xi0) * enorm(w0);

    Vec3<S> v = cross(metric_flip(w), xi);
    S q = mdot(v, xi);
    if (std::abs(scalar_value(q)) > 1e-12 * scale * enorm(xi0)) {
        return transversal_from(xi, w, v, q);
    }

    const Vec3M axes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    int best = -1;
    double best_pairing = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double p = std::abs(mdot(cross(metric_flip(w0), axes[i]), xi0));
        if (p > best_pairing) {
            best_pairing = p;
            best = i;
        }
    }
    if (best < 0 || best_pairing <= 1e-12 * enorm(w0) * enorm(xi0)) {
        throw degenerate_input_error("no transversal helper pairs with xi; input is not a valid null frame");
    }
    Vec3<S> axis{};
    axis.x0 = S{} + (best == 0 ? 1.0 : 0.0);
    axis.x1 = S{} + (best == 1 ? 1.0 : 0.0);
    axis.x2 = S{} + (best == 2 ? 1.0 : 0.0);
    v = cross(metric_flip(w), axis);
    q = mdot(v, xi);
    return transversal_from(xi, w, v, q);
}

} // namespace

Vec3M solve_transversal(const Vec3M& xi, const Vec3M& w) {
    const CausalCharacter cxi = causal_character(xi, 1e-9);
    if (cxi != CausalCharacter::null) {
        throw degenerate_input_error("xi must be null and nonzero");
    }
    if (causal_character(w, 1e-9) != CausalCharacter::spacelike) {
        throw degenerate_input_error("w must be spacelike");
    }
    if (std::abs(mdot(xi, w)) > 1e-9 * enorm(xi) * enorm(w)) {
        throw degenerate_input_error("w must be orthogonal to xi");
    }
    return solve_transversal_impl(xi, w);
}

JetVec3 solve_transversal(const JetVec3& xi, const JetVec3& w) {
    return solve_transversal_impl(xi, w);
}

} // namespace lightlike
