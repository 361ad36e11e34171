#include "vox/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace vox {

SymEigen3 sym_eigen3(double xx, double xy, double xz, double yy, double yz, double zz) {
  // Cyclic Jacobi on the symmetric matrix; 30 sweeps is far beyond what
  // 3x3 needs for full double precision.
  double a[3][3] = {{xx, xy, xz}, {xy, yy, yz}, {xz, yz, zz}};
  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int sweep = 0; sweep < 30; ++sweep) {
    double off = std::abs(a[0][1]) + std::abs(a[0][2]) + std::abs(a[1][2]);
    if (off < 1e-15) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < 3; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  int order[3] = {0, 1, 2};
  std::sort(order, order + 3, [&](int i, int j) { return a[i][i] > a[j][j]; });
  SymEigen3 out;
  for (int i = 0; i < 3; ++i) {
    int k = order[i];
    out.values[i] = a[k][k];
    out.vectors[i] = {v[0][k], v[1][k], v[2][k]};
  }
  // Sign convention: largest |component| positive, then force right-handed.
  for (int i = 0; i < 3; ++i) {
    Vec3& e = out.vectors[i];
    double ax = std::abs(e.x), ay = std::abs(e.y), az = std::abs(e.z);
    double lead = (ax >= ay && ax >= az) ? e.x : (ay >= az ? e.y : e.z);
    if (lead < 0) e = -e;
  }
  if (dot(cross(out.vectors[0], out.vectors[1]), out.vectors[2]) < 0) {
    out.vectors[2] = -out.vectors[2];
  }
  return out;
}

std::pair<Vec3, Vec3> fit_plane(const std::vector<Vec3>& pts) {
  Vec3 c{0, 0, 0};
  for (const Vec3& p : pts) c += p;
  c = c / double(pts.size());
  double xx = 0, xy = 0, xz = 0, yy = 0, yz = 0, zz = 0;
  for (const Vec3& p : pts) {
    Vec3 d = p - c;
    xx += d.x * d.x; xy += d.x * d.y; xz += d.x * d.z;
    yy += d.y * d.y; yz += d.y * d.z; zz += d.z * d.z;
  }
  SymEigen3 eig = sym_eigen3(xx, xy, xz, yy, yz, zz);
  return {c, eig.vectors[2]};  // smallest-variance direction
}

}  // namespace vox
