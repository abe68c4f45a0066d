#pragma once

#include <array>
#include <cmath>

#include "errors.hpp"
#include "mathutil.hpp"

namespace mcshane {

/// Real 2x2 matrix normalized to |det| = 1; the PGL(2,R) representative of
/// a geodesic's conjugacy class.  The sign of the determinant is kept: +1
/// for orientation-preserving (two-sided) classes, -1 for one-sided ones.
class Mat2 {
  public:
    Mat2() : a_(1), b_(0), c_(0), d_(1), det_sign_(1) {}

    Mat2(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {
        normalize();
    }

    static Mat2 identity() { return Mat2(); }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }
    double d() const { return d_; }
    int det_sign() const { return det_sign_; }

    double trace() const { return a_ + d_; }
    double det() const { return a_ * d_ - b_ * c_; }

    /// Adjugate M^+ with M * adj(M) = det(M) * I.  Entry swap and negation only.
    Mat2 adjugate() const {
        Mat2 r;
        r.a_ = d_;
        r.b_ = -b_;
        r.c_ = -c_;
        r.d_ = a_;
        r.det_sign_ = det_sign_;
        return r;
    }

    Mat2 inverse() const {
        Mat2 adj = adjugate();
        if (det_sign_ < 0) return Mat2(-adj.a_, -adj.b_, -adj.c_, -adj.d_);
        return adj;
    }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                    x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
    }

  private:
    void normalize() {
        double det = a_ * d_ - b_ * c_;
        if (std::fabs(det) < 1e-300)
            throw DomainError("Mat2: singular matrix cannot represent an isometry");
        det_sign_ = det > 0 ? 1 : -1;
        double s = std::sqrt(std::fabs(det));
        a_ /= s;
        b_ /= s;
        c_ /= s;
        d_ /= s;
    }

    double a_, b_, c_, d_;
    int det_sign_;
};

} // namespace mcshane
