#pragma once

// Isometries of the upper half-plane, orientation-preserving (PSL(2,R)) and
// orientation-reversing (z -> (a*conj(z)+b)/(c*conj(z)+d), ad-bc = -1), as they
// act on the real boundary line.  Both kinds are stored as a real 2x2
// coefficient matrix with |det| = 1; the determinant sign is the orientation.

#include "funnelgroup/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace funnelgroup {

inline constexpr double default_tolerance = 1e-9;

template <typename Scalar>
struct BoundaryInterval {
    Scalar lo{};
    Scalar hi{};

    Scalar length() const { return hi - lo; }
    Scalar midpoint() const { return (lo + hi) / 2; }

    /// Open-interval membership.
    bool contains(Scalar x) const { return lo < x && x < hi; }

    /// True when `inner` lies in the open interior of *this.
    bool strictly_contains(const BoundaryInterval& inner) const
    {
        return lo < inner.lo && inner.hi < hi;
    }

    bool operator==(const BoundaryInterval&) const = default;
};

enum class IsometryKind { Identity, Hyperbolic, Parabolic, Elliptic, Reflection, GlideReflection };

inline std::string_view to_string(IsometryKind kind)
{
    switch (kind) {
    case IsometryKind::Identity: return "Identity";
    case IsometryKind::Hyperbolic: return "Hyperbolic";
    case IsometryKind::Parabolic: return "Parabolic";
    case IsometryKind::Elliptic: return "Elliptic";
    case IsometryKind::Reflection: return "Reflection";
    case IsometryKind::GlideReflection: return "GlideReflection";
    }
    return "Unknown";
}

template <typename Scalar>
struct AxisData {
    Scalar repelling{};
    Scalar attracting{};
    Scalar translation_length{};
};

template <typename Scalar>
class ExtendedMobius {
public:
    using Matrix = Eigen::Matrix<Scalar, 2, 2>;

    ExtendedMobius() : m_(Matrix::Identity()), orientation_(1) {}

    ExtendedMobius(Scalar a, Scalar b, Scalar c, Scalar d)
    {
        Matrix m;
        m << a, b, c, d;
        assign(m);
    }

    explicit ExtendedMobius(const Matrix& m) { assign(m); }

    static ExtendedMobius identity() { return ExtendedMobius(); }

    /// For products and adjugates of normalized maps, whose determinant is
    /// +-1 exactly but whose computed determinant cancels catastrophically
    /// once the coefficients grow.  Only the sign convention is applied.
    static ExtendedMobius from_unit_determinant(const Matrix& m, int orientation)
    {
        ExtendedMobius f;
        f.m_ = m;
        f.orientation_ = orientation;
        f.apply_sign_convention();
        return f;
    }

    Scalar a() const { return m_(0, 0); }
    Scalar b() const { return m_(0, 1); }
    Scalar c() const { return m_(1, 0); }
    Scalar d() const { return m_(1, 1); }

    const Matrix& matrix() const { return m_; }

    /// +1 orientation-preserving, -1 orientation-reversing.
    int orientation() const { return orientation_; }

    Scalar trace() const { return m_.trace(); }

    /// Boundary pole -d/c, absent for affine maps.
    std::optional<Scalar> pole() const
    {
        if (c() == Scalar(0))
            return std::nullopt;
        return -d() / c();
    }

private:
    void assign(const Matrix& m)
    {
        using std::abs;
        using std::sqrt;
        const Scalar det = m.determinant();
        const Scalar scale = m.cwiseAbs().maxCoeff();
        if (!(scale > Scalar(0)) || abs(det) <= Scalar(64) * std::numeric_limits<Scalar>::epsilon() * scale * scale)
            throw std::invalid_argument("ExtendedMobius: singular coefficient matrix");

        orientation_ = det > Scalar(0) ? 1 : -1;
        m_ = m / sqrt(abs(det));
        apply_sign_convention();
    }

    void apply_sign_convention()
    {
        using std::abs;
        // Sign convention: the first coefficient (a, b, c, d order) that is not
        // round-off relative to the largest one is made positive.
        const Scalar cutoff = Scalar(64) * std::numeric_limits<Scalar>::epsilon() * m_.cwiseAbs().maxCoeff();
        const Scalar ordered[4] = {m_(0, 0), m_(0, 1), m_(1, 0), m_(1, 1)};
        for (Scalar v : ordered) {
            if (abs(v) > cutoff) {
                if (v < Scalar(0))
                    m_ = -m_;
                break;
            }
        }
    }

    Matrix m_;
    int orientation_;
};

using ExtendedMobiusMap = ExtendedMobius<double>;
using Interval = BoundaryInterval<double>;
using Axis = AxisData<double>;

template <typename Scalar>
ExtendedMobius<Scalar> compose(const ExtendedMobius<Scalar>& f, const ExtendedMobius<Scalar>& g)
{
    return ExtendedMobius<Scalar>::from_unit_determinant(f.matrix() * g.matrix(), f.orientation() * g.orientation());
}

template <typename Scalar>
ExtendedMobius<Scalar> operator*(const ExtendedMobius<Scalar>& f, const ExtendedMobius<Scalar>& g)
{
    return compose(f, g);
}

template <typename Scalar>
ExtendedMobius<Scalar> inverse(const ExtendedMobius<Scalar>& f)
{
    // The adjugate is det * inverse; for det = -1 this is the same map up to sign.
    typename ExtendedMobius<Scalar>::Matrix adj;
    adj << f.d(), -f.b(), -f.c(), f.a();
    return ExtendedMobius<Scalar>::from_unit_determinant(adj, f.orientation());
}

template <typename Scalar>
Scalar coefficient_distance(const ExtendedMobius<Scalar>& f, const ExtendedMobius<Scalar>& g)
{
    if (f.orientation() != g.orientation())
        return std::numeric_limits<Scalar>::infinity();
    const Scalar same = (f.matrix() - g.matrix()).cwiseAbs().maxCoeff();
    const Scalar flipped = (f.matrix() + g.matrix()).cwiseAbs().maxCoeff();
    return std::min(same, flipped);
}

template <typename Scalar>
bool approx_equal(const ExtendedMobius<Scalar>& f, const ExtendedMobius<Scalar>& g,
                  Scalar eps = Scalar(default_tolerance))
{
    return coefficient_distance(f, g) <= eps;
}

template <typename Scalar>
bool is_identity(const ExtendedMobius<Scalar>& f, Scalar eps = Scalar(default_tolerance))
{
    return approx_equal(f, ExtendedMobius<Scalar>::identity(), eps);
}

template <typename Scalar>
IsometryKind classify(const ExtendedMobius<Scalar>& f, Scalar eps = Scalar(default_tolerance))
{
    using std::abs;
    if (f.orientation() < 0)
        return is_identity(compose(f, f), eps) ? IsometryKind::Reflection : IsometryKind::GlideReflection;

    const Scalar t = abs(f.trace());
    if (t > Scalar(2) + eps)
        return IsometryKind::Hyperbolic;
    if (t < Scalar(2) - eps)
        return IsometryKind::Elliptic;
    return is_identity(f, eps) ? IsometryKind::Identity : IsometryKind::Parabolic;
}

/// Signed boundary derivative det/(cx+d)^2; negative for orientation-reversing maps.
template <typename Scalar>
Scalar derivative(const ExtendedMobius<Scalar>& f, Scalar x)
{
    const Scalar denom = f.c() * x + f.d();
    return Scalar(f.orientation()) / (denom * denom);
}

template <typename Scalar>
Scalar apply_boundary(const ExtendedMobius<Scalar>& f, Scalar x, Scalar eps = Scalar(default_tolerance))
{
    using std::abs;
    const Scalar denom = f.c() * x + f.d();
    if (abs(denom) <= eps)
        throw PoleHit("apply_boundary: denominator vanishes at x = " + std::to_string(double(x)));
    return (f.a() * x + f.b()) / denom;
}

template <typename Scalar>
BoundaryInterval<Scalar> image_interval(const ExtendedMobius<Scalar>& f, const BoundaryInterval<Scalar>& interval,
                                        Scalar eps = Scalar(default_tolerance))
{
    using std::abs;
    if (const auto p = f.pole(); p && interval.lo <= *p && *p <= interval.hi)
        throw PoleInsideInterval("image_interval: pole " + std::to_string(double(*p))
                                 + " lies in [" + std::to_string(double(interval.lo)) + ", "
                                 + std::to_string(double(interval.hi)) + "]");
    Scalar x = 0;
    Scalar y = 0;
    try {
        x = apply_boundary(f, interval.lo, eps);
        y = apply_boundary(f, interval.hi, eps);
    } catch (const PoleHit& e) {
        throw PoleInsideInterval(e.what());
    }
    return {std::min(x, y), std::max(x, y)};
}

/// Boundary fixed points and translation length of a hyperbolic map or a glide reflection.
template <typename Scalar>
AxisData<Scalar> axis(const ExtendedMobius<Scalar>& f, Scalar eps = Scalar(default_tolerance))
{
    using std::abs;
    using std::sqrt;
    const IsometryKind kind = classify(f, eps);
    if (kind != IsometryKind::Hyperbolic && kind != IsometryKind::GlideReflection)
        throw NotHyperbolic(std::string("axis: map is ") + std::string(to_string(kind)));
    if (abs(f.c()) <= eps)
        throw InfiniteFixedPoint("axis: c = 0, one fixed point is infinity");

    // c x^2 + (d - a) x - b = 0, discriminant tr^2 - 4 det.
    const Scalar p = f.d() - f.a();
    const Scalar disc = f.trace() * f.trace() - Scalar(4) * Scalar(f.orientation());
    const Scalar root = sqrt(std::max(disc, Scalar(0)));
    const Scalar q = Scalar(-0.5) * (p + (p >= Scalar(0) ? root : -root));
    const Scalar x1 = q / f.c();
    const Scalar x2 = -f.b() / q;

    AxisData<Scalar> out;
    if (abs(derivative(f, x1)) < abs(derivative(f, x2))) {
        out.attracting = x1;
        out.repelling = x2;
    } else {
        out.attracting = x2;
        out.repelling = x1;
    }
    const Scalar half = abs(f.trace()) / Scalar(2);
    out.translation_length = kind == IsometryKind::Hyperbolic ? Scalar(2) * std::acosh(half)
                                                               : Scalar(2) * std::asinh(half);
    return out;
}

/// Reflection in the geodesic semicircle of given centre and radius: x -> c + r^2/(x - c).
template <typename Scalar>
ExtendedMobius<Scalar> reflection_in_semicircle(Scalar center, Scalar radius)
{
    if (!(radius > Scalar(0)))
        throw std::invalid_argument("reflection_in_semicircle: radius must be positive");
    return ExtendedMobius<Scalar>(center, radius * radius - center * center, Scalar(1), -center);
}

/// x -> -x.
template <typename Scalar>
ExtendedMobius<Scalar> reflection_in_imaginary_axis()
{
    return ExtendedMobius<Scalar>(Scalar(-1), Scalar(0), Scalar(0), Scalar(1));
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const ExtendedMobius<Scalar>& f)
{
    return os << "(" << f.a() << ", " << f.b() << ", " << f.c() << ", " << f.d()
              << "; " << (f.orientation() > 0 ? "+" : "-") << ")";
}

} // namespace funnelgroup
