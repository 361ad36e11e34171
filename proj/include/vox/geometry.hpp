#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace vox {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3() = default;
  Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3 operator-() const { return {-x, -y, -z}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline double distance2(const Vec3& a, const Vec3& b) { return norm2(a - b); }
inline Vec3 normalized(const Vec3& a) {
  double n = norm(a);
  return n > 1e-300 ? a / n : Vec3{1, 0, 0};
}

// Column-major is not needed; store rows. r[i] is row i.
struct Mat3 {
  std::array<Vec3, 3> r;

  static Mat3 identity() { return {{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}}; }

  Vec3 operator*(const Vec3& v) const {
    return {dot(r[0], v), dot(r[1], v), dot(r[2], v)};
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 m;
    for (int i = 0; i < 3; ++i) {
      m.r[i] = {r[i].x * o.r[0].x + r[i].y * o.r[1].x + r[i].z * o.r[2].x,
                r[i].x * o.r[0].y + r[i].y * o.r[1].y + r[i].z * o.r[2].y,
                r[i].x * o.r[0].z + r[i].y * o.r[1].z + r[i].z * o.r[2].z};
    }
    return m;
  }
  Mat3 transposed() const {
    return {{Vec3{r[0].x, r[1].x, r[2].x}, Vec3{r[0].y, r[1].y, r[2].y},
             Vec3{r[0].z, r[1].z, r[2].z}}};
  }
};

// Rotation about a unit axis by angle (radians), Rodrigues form.
inline Mat3 rotation_about_axis(const Vec3& axis, double angle) {
  Vec3 u = normalized(axis);
  double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
  Mat3 m;
  m.r[0] = {t * u.x * u.x + c, t * u.x * u.y - s * u.z, t * u.x * u.z + s * u.y};
  m.r[1] = {t * u.x * u.y + s * u.z, t * u.y * u.y + c, t * u.y * u.z - s * u.x};
  m.r[2] = {t * u.x * u.z - s * u.y, t * u.y * u.z + s * u.x, t * u.z * u.z + c};
  return m;
}

// Exponential map: rotation vector (axis * angle) to matrix.
inline Mat3 rotation_from_vector(const Vec3& w) {
  double angle = norm(w);
  if (angle < 1e-12) return Mat3::identity();
  return rotation_about_axis(w / angle, angle);
}

// Z-Y-X Euler composition: R = Rz(a) * Ry(b) * Rx(c).
inline Mat3 rotation_from_euler(double a, double b, double c) {
  return rotation_about_axis({0, 0, 1}, a) * rotation_about_axis({0, 1, 0}, b) *
         rotation_about_axis({1, 0, 0}, c);
}

struct Quat {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  Quat normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
  }
  Mat3 to_matrix() const {
    Mat3 m;
    m.r[0] = {1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w)};
    m.r[1] = {2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w)};
    m.r[2] = {2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)};
    return m;
  }
  static Quat from_matrix(const Mat3& m) {
    Quat q;
    double tr = m.r[0].x + m.r[1].y + m.r[2].z;
    if (tr > 0) {
      double s = std::sqrt(tr + 1.0) * 2;
      q.w = 0.25 * s;
      q.x = (m.r[2].y - m.r[1].z) / s;
      q.y = (m.r[0].z - m.r[2].x) / s;
      q.z = (m.r[1].x - m.r[0].y) / s;
    } else if (m.r[0].x > m.r[1].y && m.r[0].x > m.r[2].z) {
      double s = std::sqrt(1.0 + m.r[0].x - m.r[1].y - m.r[2].z) * 2;
      q.w = (m.r[2].y - m.r[1].z) / s;
      q.x = 0.25 * s;
      q.y = (m.r[0].y + m.r[1].x) / s;
      q.z = (m.r[0].z + m.r[2].x) / s;
    } else if (m.r[1].y > m.r[2].z) {
      double s = std::sqrt(1.0 + m.r[1].y - m.r[0].x - m.r[2].z) * 2;
      q.w = (m.r[0].z - m.r[2].x) / s;
      q.x = (m.r[0].y + m.r[1].x) / s;
      q.y = 0.25 * s;
      q.z = (m.r[1].z + m.r[2].y) / s;
    } else {
      double s = std::sqrt(1.0 + m.r[2].z - m.r[0].x - m.r[1].y) * 2;
      q.w = (m.r[1].x - m.r[0].y) / s;
      q.x = (m.r[0].z + m.r[2].x) / s;
      q.y = (m.r[1].z + m.r[2].y) / s;
      q.z = 0.25 * s;
    }
    return q.normalized();
  }
};

// Rigid-body motion: p -> R*p + t. Quaternion kept unit-norm.
struct RigidTransform {
  Quat rotation;
  Vec3 translation;

  static RigidTransform identity() { return {}; }

  Vec3 apply(const Vec3& p) const { return rotation.to_matrix() * p + translation; }

  std::vector<Vec3> apply(const std::vector<Vec3>& pts) const {
    Mat3 m = rotation.to_matrix();
    std::vector<Vec3> out;
    out.reserve(pts.size());
    for (const Vec3& p : pts) out.push_back(m * p + translation);
    return out;
  }
};

// Eigen-decomposition of a symmetric 3x3 matrix by cyclic Jacobi sweeps.
// Returns eigenvalues (descending) and matching unit eigenvectors forming a
// right-handed basis. Deterministic.
struct SymEigen3 {
  std::array<double, 3> values;
  std::array<Vec3, 3> vectors;
};

SymEigen3 sym_eigen3(double xx, double xy, double xz, double yy, double yz, double zz);

// Best-fit plane through points: returns (centroid, unit normal).
std::pair<Vec3, Vec3> fit_plane(const std::vector<Vec3>& pts);

}  // namespace vox
