#ifndef RQMF_QUATERNION_HPP
#define RQMF_QUATERNION_HPP

#include <cmath>

namespace rqmf {

/// Full real quaternion s + i*x1 + j*x2 + k*x3.
///
/// The library works with reduced quaternions (vanishing k-part), but
/// quaternion products of reduced values produce k-components, so the
/// full algebra is kept around and k is never dropped silently.
struct Quaternion {
    double s  = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    Quaternion() = default;
    Quaternion(double s_, double x1_, double x2_, double x3_)
        : s(s_), x1(x1_), x2(x2_), x3(x3_) {}

    Quaternion operator+(const Quaternion& o) const { return {s + o.s, x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    Quaternion operator-(const Quaternion& o) const { return {s - o.s, x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    Quaternion operator-() const { return {-s, -x1, -x2, -x3}; }
    Quaternion operator*(double c) const { return {c * s, c * x1, c * x2, c * x3}; }

    // Hamilton product, i*j = k, j*k = i, k*i = j.
    Quaternion operator*(const Quaternion& o) const {
        return {
            s * o.s  - x1 * o.x1 - x2 * o.x2 - x3 * o.x3,
            s * o.x1 + x1 * o.s  + x2 * o.x3 - x3 * o.x2,
            s * o.x2 + x2 * o.s  + x3 * o.x1 - x1 * o.x3,
            s * o.x3 + x3 * o.s  + x1 * o.x2 - x2 * o.x1,
        };
    }

    Quaternion conjugate() const { return {s, -x1, -x2, -x3}; }

    double norm_sq() const { return s * s + x1 * x1 + x2 * x2 + x3 * x3; }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Quaternion operator*(double c, const Quaternion& q) { return q * c; }

/// Element of span{1, i, j}: the value type of every function family in
/// this library.
struct ReducedQuaternion {
    double s  = 0.0;  ///< scalar part [.]_0
    double x1 = 0.0;  ///< i-component
    double x2 = 0.0;  ///< j-component

    ReducedQuaternion() = default;
    ReducedQuaternion(double s_, double x1_, double x2_) : s(s_), x1(x1_), x2(x2_) {}

    ReducedQuaternion operator+(const ReducedQuaternion& o) const { return {s + o.s, x1 + o.x1, x2 + o.x2}; }
    ReducedQuaternion operator-(const ReducedQuaternion& o) const { return {s - o.s, x1 - o.x1, x2 - o.x2}; }
    ReducedQuaternion operator-() const { return {-s, -x1, -x2}; }
    ReducedQuaternion operator*(double c) const { return {c * s, c * x1, c * x2}; }

    ReducedQuaternion conjugate() const { return {s, -x1, -x2}; }

    Quaternion full() const { return {s, x1, x2, 0.0}; }

    double norm_sq() const { return s * s + x1 * x1 + x2 * x2; }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline ReducedQuaternion operator*(double c, const ReducedQuaternion& q) { return q * c; }

inline double sc(const ReducedQuaternion& a) { return a.s; }
inline double sc(const Quaternion& a) { return a.s; }

inline ReducedQuaternion vec(const ReducedQuaternion& a) { return {0.0, a.x1, a.x2}; }

/// Sc(conj(a) * b) = a0 b0 + a1 b1 + a2 b2 for reduced values.
inline double scalar_product(const ReducedQuaternion& a, const ReducedQuaternion& b) {
    return a.s * b.s + a.x1 * b.x1 + a.x2 * b.x2;
}

}  // namespace rqmf

#endif
