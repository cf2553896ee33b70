#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/Dense>

#include "clvf/dynamics.hpp"

namespace clvf {

/// {u : normal . u = offset}
struct Hyperplane {
  ControlVector normal;
  double offset = 0.0;
};

/// Calls visit(u) for every point of the box at which m = box.dim() linearly
/// independent equations meet, chosen among the box faces and `planes`. Every
/// vertex of the arrangement cut into the box by `planes` is visited, so the
/// minimum of any function that is linear on each cell is found among them.
template <typename Visit>
void for_each_arrangement_vertex(const std::vector<Hyperplane>& planes,
                                 const ControlBox& box, Visit&& visit) {
  const int m = box.dim();
  if (m == 1) {
    ControlVector u(1);
    u(0) = box.lower(0);
    visit(static_cast<const ControlVector&>(u));
    u(0) = box.upper(0);
    visit(static_cast<const ControlVector&>(u));
    for (const Hyperplane& p : planes) {
      if (p.normal(0) == 0.0) continue;
      const double r = p.offset / p.normal(0);
      if (r > box.lower(0) && r < box.upper(0)) {
        u(0) = r;
        visit(static_cast<const ControlVector&>(u));
      }
    }
    return;
  }
  using Square = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0,
                               kMaxControlDim, kMaxControlDim>;
  std::vector<Hyperplane> pool;
  pool.reserve(planes.size() + 2 * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    Hyperplane face{ControlVector::Zero(m), box.lower(j)};
    face.normal(j) = 1.0;
    pool.push_back(face);
    face.offset = box.upper(j);
    pool.push_back(face);
  }
  for (const Hyperplane& p : planes) {
    if (p.normal.cwiseAbs().maxCoeff() > 0.0) pool.push_back(p);
  }

  const int count = static_cast<int>(pool.size());
  std::vector<int> pick(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) pick[static_cast<std::size_t>(j)] = j;
  Square a(m, m);
  ControlVector b(m);
  while (true) {
    for (int r = 0; r < m; ++r) {
      const Hyperplane& p = pool[static_cast<std::size_t>(pick[static_cast<std::size_t>(r)])];
      for (int j = 0; j < m; ++j) a(r, j) = p.normal(j);
      b(r) = p.offset;
    }
    Eigen::FullPivLU<Square> lu(a);
    if (lu.rank() == m) {
      ControlVector u = lu.solve(b);
      if (box.contains(u, 1e-12)) {
        for (int j = 0; j < m; ++j) u(j) = std::clamp(u(j), box.lower(j), box.upper(j));
        visit(static_cast<const ControlVector&>(u));
      }
    }
    int r = m - 1;
    while (r >= 0 && pick[static_cast<std::size_t>(r)] == count - m + r) --r;
    if (r < 0) break;
    ++pick[static_cast<std::size_t>(r)];
    for (int s = r + 1; s < m; ++s) {
      pick[static_cast<std::size_t>(s)] = pick[static_cast<std::size_t>(s - 1)] + 1;
    }
  }
}

}  // namespace clvf
