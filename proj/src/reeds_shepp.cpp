// Copyright 2026 The parkplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parkplan/reeds_shepp.hpp"

#include <cassert>
#include <cmath>
#include <limits>

// Word solving follows the classical sufficient family of forward/backward
// curvature-bounded shortest paths: every candidate word is one of twelve
// base forms composed with the time-flip, reflection and reversal symmetries.
// Lengths are solved in the unit-radius frame and carry their drive direction
// as a sign.

namespace parkplan {

namespace {

constexpr double kZeroLen = 1e-10;  // admissibility slack for signed lengths
constexpr double kHalfPi = 0.5 * kPi;

double wrap_pi(double a) {
  double v = std::fmod(a, kTau);
  if (v < -kPi) {
    v += kTau;
  } else if (v > kPi) {
    v -= kTau;
  }
  return v;
}

void polar(double x, double y, double& r, double& th) {
  r = std::sqrt(x * x + y * y);
  th = std::atan2(y, x);
}

// --- base word solvers, unit turning radius ------------------------------
// Each returns the three defining signed lengths of the base form; callers
// apply the symmetry mapping to the full five-slot word.

bool solve_lp_sp_lp(double x, double y, double phi, double sphi, double cphi,
                    double& t, double& u, double& v) {
  polar(x - sphi, y - 1.0 + cphi, u, t);
  if (t < -kZeroLen) return false;
  v = wrap_pi(phi - t);
  return v >= -kZeroLen;
}

bool solve_lp_sp_rp(double x, double y, double phi, double sphi, double cphi,
                    double& t, double& u, double& v) {
  double r, th;
  polar(x + sphi, y - 1.0 - cphi, r, th);
  const double r2 = r * r;
  if (r2 < 4.0) return false;
  u = std::sqrt(r2 - 4.0);
  t = wrap_pi(th + std::atan2(2.0, u));
  v = wrap_pi(t - phi);
  return t >= -kZeroLen && v >= -kZeroLen;
}

bool solve_lp_rm_l(double x, double y, double phi, double sphi, double cphi,
                   double& t, double& u, double& v) {
  double r, th;
  polar(x - sphi, y - 1.0 + cphi, r, th);
  if (r > 4.0) return false;
  u = -2.0 * std::asin(0.25 * r);
  t = wrap_pi(th + 0.5 * u + kPi);
  v = wrap_pi(phi - t + u);
  return t >= -kZeroLen && u <= kZeroLen;
}

void tau_omega(double u, double v, double xi, double eta, double phi,
               double& tau, double& omega) {
  const double delta = wrap_pi(u - v);
  const double a = std::sin(u) - std::sin(delta);
  const double b = std::cos(u) - std::cos(delta) - 1.0;
  const double t1 = std::atan2(eta * a - xi * b, xi * a + eta * b);
  const double t2 = 2.0 * (std::cos(delta) - std::cos(v) - std::cos(u)) + 3.0;
  tau = (t2 < 0.0) ? wrap_pi(t1 + kPi) : wrap_pi(t1);
  omega = wrap_pi(tau - u + v - phi);
}

bool solve_lp_rup_lum_rm(double x, double y, double phi, double sphi,
                         double cphi, double& t, double& u, double& v) {
  const double xi = x + sphi;
  const double eta = y - 1.0 - cphi;
  const double rho = 0.25 * (2.0 + std::sqrt(xi * xi + eta * eta));
  if (rho > 1.0) return false;
  u = std::acos(rho);
  tau_omega(u, -u, xi, eta, phi, t, v);
  return t >= -kZeroLen && v <= kZeroLen;
}

bool solve_lp_rum_lum_rp(double x, double y, double phi, double sphi,
                         double cphi, double& t, double& u, double& v) {
  const double xi = x + sphi;
  const double eta = y - 1.0 - cphi;
  const double rho = (20.0 - xi * xi - eta * eta) / 16.0;
  if (rho < 0.0 || rho > 1.0) return false;
  u = -std::acos(rho);
  if (u < -kHalfPi) return false;
  tau_omega(u, u, xi, eta, phi, t, v);
  return t >= -kZeroLen && v >= -kZeroLen;
}

bool solve_lp_rm_sm_lm(double x, double y, double phi, double sphi,
                       double cphi, double& t, double& u, double& v) {
  double r, th;
  polar(x - sphi, y - 1.0 + cphi, r, th);
  if (r < 2.0) return false;
  const double w = std::sqrt(r * r - 4.0);
  u = 2.0 - w;
  t = wrap_pi(th + std::atan2(w, -2.0));
  v = wrap_pi(phi - kHalfPi - t);
  return t >= -kZeroLen && u <= kZeroLen && v <= kZeroLen;
}

bool solve_lp_rm_sm_rm(double x, double y, double phi, double sphi,
                       double cphi, double& t, double& u, double& v) {
  const double xi = x + sphi;
  const double eta = y - 1.0 - cphi;
  double r, th;
  polar(-eta, xi, r, th);
  if (r < 2.0) return false;
  t = th;
  u = 2.0 - r;
  v = wrap_pi(t + kHalfPi - phi);
  return t >= -kZeroLen && u <= kZeroLen && v <= kZeroLen;
}

bool solve_lp_rm_s_lm_rp(double x, double y, double phi, double sphi,
                         double cphi, double& t, double& u, double& v) {
  const double xi = x + sphi;
  const double eta = y - 1.0 - cphi;
  double r, th;
  polar(xi, eta, r, th);
  if (r < 2.0) return false;
  u = 4.0 - std::sqrt(r * r - 4.0);
  if (u > kZeroLen) return false;
  t = wrap_pi(
      std::atan2((4.0 - u) * xi - 2.0 * eta, -2.0 * xi + (u - 4.0) * eta));
  v = wrap_pi(t - phi);
  return t >= -kZeroLen && v >= -kZeroLen;
}

// --- candidate enumeration ------------------------------------------------

struct PatternRow {
  std::uint8_t n;
  RSSegKind k[5];
};

constexpr RSSegKind L = RSSegKind::Left;
constexpr RSSegKind S = RSSegKind::Straight;
constexpr RSSegKind R = RSSegKind::Right;

constexpr PatternRow kPatterns[18] = {
    {3, {L, R, L}},        // 0
    {3, {R, L, R}},        // 1
    {4, {L, R, L, R}},     // 2
    {4, {R, L, R, L}},     // 3
    {4, {L, R, S, L}},     // 4
    {4, {R, L, S, R}},     // 5
    {4, {L, S, R, L}},     // 6
    {4, {R, S, L, R}},     // 7
    {4, {L, R, S, R}},     // 8
    {4, {R, L, S, L}},     // 9
    {4, {R, S, R, L}},     // 10
    {4, {L, S, L, R}},     // 11
    {3, {L, S, R}},        // 12
    {3, {R, S, L}},        // 13
    {3, {L, S, L}},        // 14
    {3, {R, S, R}},        // 15
    {5, {L, R, S, L, R}},  // 16
    {5, {R, L, S, R, L}},  // 17
};

struct Word {
  int pattern = -1;
  double len[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
  double total = std::numeric_limits<double>::infinity();
};

// Strict comparison keeps the first candidate in evaluation order on ties.
inline void consider(Word& best, int pattern, double a, double b, double c,
                     double d = 0.0, double e = 0.0) {
  const double total = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d) +
                       std::abs(e);
  if (total < best.total) {
    best.pattern = pattern;
    best.len[0] = a;
    best.len[1] = b;
    best.len[2] = c;
    best.len[3] = d;
    best.len[4] = e;
    best.total = total;
  }
}

void add_csc(double x, double y, double phi, double sp, double cp,
             Word& best) {
  double t, u, v;
  if (solve_lp_sp_lp(x, y, phi, sp, cp, t, u, v)) consider(best, 14, t, u, v);
  if (solve_lp_sp_lp(-x, y, -phi, -sp, cp, t, u, v))
    consider(best, 14, -t, -u, -v);
  if (solve_lp_sp_lp(x, -y, -phi, -sp, cp, t, u, v)) consider(best, 15, t, u, v);
  if (solve_lp_sp_lp(-x, -y, phi, sp, cp, t, u, v))
    consider(best, 15, -t, -u, -v);
  if (solve_lp_sp_rp(x, y, phi, sp, cp, t, u, v)) consider(best, 12, t, u, v);
  if (solve_lp_sp_rp(-x, y, -phi, -sp, cp, t, u, v))
    consider(best, 12, -t, -u, -v);
  if (solve_lp_sp_rp(x, -y, -phi, -sp, cp, t, u, v)) consider(best, 13, t, u, v);
  if (solve_lp_sp_rp(-x, -y, phi, sp, cp, t, u, v))
    consider(best, 13, -t, -u, -v);
}

void add_ccc(double x, double y, double phi, double sp, double cp,
             Word& best) {
  double t, u, v;
  if (solve_lp_rm_l(x, y, phi, sp, cp, t, u, v)) consider(best, 0, t, u, v);
  if (solve_lp_rm_l(-x, y, -phi, -sp, cp, t, u, v))
    consider(best, 0, -t, -u, -v);
  if (solve_lp_rm_l(x, -y, -phi, -sp, cp, t, u, v)) consider(best, 1, t, u, v);
  if (solve_lp_rm_l(-x, -y, phi, sp, cp, t, u, v))
    consider(best, 1, -t, -u, -v);
  // reversed words, solved in the flipped frame
  const double xb = x * cp + y * sp;
  const double yb = x * sp - y * cp;
  if (solve_lp_rm_l(xb, yb, phi, sp, cp, t, u, v)) consider(best, 0, v, u, t);
  if (solve_lp_rm_l(-xb, yb, -phi, -sp, cp, t, u, v))
    consider(best, 0, -v, -u, -t);
  if (solve_lp_rm_l(xb, -yb, -phi, -sp, cp, t, u, v)) consider(best, 1, v, u, t);
  if (solve_lp_rm_l(-xb, -yb, phi, sp, cp, t, u, v))
    consider(best, 1, -v, -u, -t);
}

void add_cccc(double x, double y, double phi, double sp, double cp,
              Word& best) {
  double t, u, v;
  if (solve_lp_rup_lum_rm(x, y, phi, sp, cp, t, u, v))
    consider(best, 2, t, u, -u, v);
  if (solve_lp_rup_lum_rm(-x, y, -phi, -sp, cp, t, u, v))
    consider(best, 2, -t, -u, u, -v);
  if (solve_lp_rup_lum_rm(x, -y, -phi, -sp, cp, t, u, v))
    consider(best, 3, t, u, -u, v);
  if (solve_lp_rup_lum_rm(-x, -y, phi, sp, cp, t, u, v))
    consider(best, 3, -t, -u, u, -v);
  if (solve_lp_rum_lum_rp(x, y, phi, sp, cp, t, u, v))
    consider(best, 2, t, u, u, v);
  if (solve_lp_rum_lum_rp(-x, y, -phi, -sp, cp, t, u, v))
    consider(best, 2, -t, -u, -u, -v);
  if (solve_lp_rum_lum_rp(x, -y, -phi, -sp, cp, t, u, v))
    consider(best, 3, t, u, u, v);
  if (solve_lp_rum_lum_rp(-x, -y, phi, sp, cp, t, u, v))
    consider(best, 3, -t, -u, -u, -v);
}

void add_ccsc(double x, double y, double phi, double sp, double cp,
              Word& best) {
  double t, u, v;
  if (solve_lp_rm_sm_lm(x, y, phi, sp, cp, t, u, v))
    consider(best, 4, t, -kHalfPi, u, v);
  if (solve_lp_rm_sm_lm(-x, y, -phi, -sp, cp, t, u, v))
    consider(best, 4, -t, kHalfPi, -u, -v);
  if (solve_lp_rm_sm_lm(x, -y, -phi, -sp, cp, t, u, v))
    consider(best, 5, t, -kHalfPi, u, v);
  if (solve_lp_rm_sm_lm(-x, -y, phi, sp, cp, t, u, v))
    consider(best, 5, -t, kHalfPi, -u, -v);
  if (solve_lp_rm_sm_rm(x, y, phi, sp, cp, t, u, v))
    consider(best, 8, t, -kHalfPi, u, v);
  if (solve_lp_rm_sm_rm(-x, y, -phi, -sp, cp, t, u, v))
    consider(best, 8, -t, kHalfPi, -u, -v);
  if (solve_lp_rm_sm_rm(x, -y, -phi, -sp, cp, t, u, v))
    consider(best, 9, t, -kHalfPi, u, v);
  if (solve_lp_rm_sm_rm(-x, -y, phi, sp, cp, t, u, v))
    consider(best, 9, -t, kHalfPi, -u, -v);
  const double xb = x * cp + y * sp;
  const double yb = x * sp - y * cp;
  if (solve_lp_rm_sm_lm(xb, yb, phi, sp, cp, t, u, v))
    consider(best, 6, v, u, -kHalfPi, t);
  if (solve_lp_rm_sm_lm(-xb, yb, -phi, -sp, cp, t, u, v))
    consider(best, 6, -v, -u, kHalfPi, -t);
  if (solve_lp_rm_sm_lm(xb, -yb, -phi, -sp, cp, t, u, v))
    consider(best, 7, v, u, -kHalfPi, t);
  if (solve_lp_rm_sm_lm(-xb, -yb, phi, sp, cp, t, u, v))
    consider(best, 7, -v, -u, kHalfPi, -t);
  if (solve_lp_rm_sm_rm(xb, yb, phi, sp, cp, t, u, v))
    consider(best, 10, v, u, -kHalfPi, t);
  if (solve_lp_rm_sm_rm(-xb, yb, -phi, -sp, cp, t, u, v))
    consider(best, 10, -v, -u, kHalfPi, -t);
  if (solve_lp_rm_sm_rm(xb, -yb, -phi, -sp, cp, t, u, v))
    consider(best, 11, v, u, -kHalfPi, t);
  if (solve_lp_rm_sm_rm(-xb, -yb, phi, sp, cp, t, u, v))
    consider(best, 11, -v, -u, kHalfPi, -t);
}

void add_ccscc(double x, double y, double phi, double sp, double cp,
               Word& best) {
  double t, u, v;
  if (solve_lp_rm_s_lm_rp(x, y, phi, sp, cp, t, u, v))
    consider(best, 16, t, -kHalfPi, u, -kHalfPi, v);
  if (solve_lp_rm_s_lm_rp(-x, y, -phi, -sp, cp, t, u, v))
    consider(best, 16, -t, kHalfPi, -u, kHalfPi, -v);
  if (solve_lp_rm_s_lm_rp(x, -y, -phi, -sp, cp, t, u, v))
    consider(best, 17, t, -kHalfPi, u, -kHalfPi, v);
  if (solve_lp_rm_s_lm_rp(-x, -y, phi, sp, cp, t, u, v))
    consider(best, 17, -t, kHalfPi, -u, kHalfPi, -v);
}

Word solve_words(double x, double y, double phi) {
  const double sp = std::sin(phi);
  const double cp = std::cos(phi);
  Word best;
  add_csc(x, y, phi, sp, cp, best);
  add_ccc(x, y, phi, sp, cp, best);
  add_cccc(x, y, phi, sp, cp, best);
  add_ccsc(x, y, phi, sp, cp, best);
  add_ccscc(x, y, phi, sp, cp, best);
  assert(best.pattern >= 0);
  return best;
}

struct Normalized {
  double x, y, phi;
};

Normalized to_normalized(const Pose& a, const Pose& b, double radius) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double c = std::cos(a.theta);
  const double s = std::sin(a.theta);
  return {(c * dx + s * dy) / radius, (-s * dx + c * dy) / radius,
          wrap_pi(b.theta - a.theta)};
}

Pose advance_along(const Pose& p, RSSegKind kind, Direction dir, double arc,
                   double radius) {
  const double d = (dir == Direction::Forward) ? arc : -arc;
  switch (kind) {
    case RSSegKind::Straight:
      return {p.x + d * std::cos(p.theta), p.y + d * std::sin(p.theta),
              p.theta};
    case RSSegKind::Left: {
      const double t = d / radius;
      return {p.x + radius * (std::sin(p.theta + t) - std::sin(p.theta)),
              p.y - radius * (std::cos(p.theta + t) - std::cos(p.theta)),
              p.theta + t};
    }
    case RSSegKind::Right: {
      const double t = d / radius;
      return {p.x - radius * (std::sin(p.theta - t) - std::sin(p.theta)),
              p.y + radius * (std::cos(p.theta - t) - std::cos(p.theta)),
              p.theta - t};
    }
  }
  return p;
}

inline int sample_count(double length, double step) {
  return std::max(1, static_cast<int>(std::ceil(length / step - 1e-12)));
}

}  // namespace

RSPath rs_path(const Pose& a, const Pose& b, double turning_radius) {
  const Normalized n = to_normalized(a, b, turning_radius);
  const Word w = solve_words(n.x, n.y, n.phi);
  RSPath path;
  path.start = a;
  path.goal = b;
  path.turning_radius = turning_radius;
  const PatternRow& row = kPatterns[w.pattern];
  for (int i = 0; i < row.n; ++i) {
    const double li = w.len[i];
    if (std::abs(li) <= 1e-12) continue;
    path.segments.push_back({row.k[i],
                             li > 0.0 ? Direction::Forward : Direction::Backward,
                             std::abs(li) * turning_radius});
    path.total_length += path.segments.back().length;
  }
  return path;
}

double rs_distance(const Pose& a, const Pose& b, double turning_radius) {
  const Normalized n = to_normalized(a, b, turning_radius);
  return solve_words(n.x, n.y, n.phi).total * turning_radius;
}

Path rs_sample(const RSPath& path, double step) {
  Path out;
  Pose cur = path.start;
  out.push_back({cur, path.segments.empty() ? Direction::Forward
                                            : path.segments.front().dir});
  for (const RSSegment& seg : path.segments) {
    const int n = sample_count(seg.length, step);
    for (int k = 1; k <= n; ++k) {
      out.push_back({advance_along(cur, seg.kind, seg.dir,
                                   seg.length * k / n, path.turning_radius),
                     seg.dir});
    }
    cur = out.back().pose;
  }
  return out;
}

Path steer(const Pose& a, const Pose& b, double turning_radius, double step) {
  return rs_sample(rs_path(a, b, turning_radius), step);
}

Direction rs_arrival_direction(const Pose& a, const Pose& b,
                               double turning_radius) {
  const Normalized n = to_normalized(a, b, turning_radius);
  const Word w = solve_words(n.x, n.y, n.phi);
  const PatternRow& row = kPatterns[w.pattern];
  for (int i = row.n - 1; i >= 0; --i) {
    if (std::abs(w.len[i]) > 1e-12) {
      return w.len[i] > 0.0 ? Direction::Forward : Direction::Backward;
    }
  }
  return Direction::Forward;
}

bool edge_collides(const Pose& a, const Pose& b, double turning_radius,
                   double step, const Car& car, const ObstacleSet& obstacles) {
  if (collide_pose(a, car, obstacles)) return true;
  const Normalized n = to_normalized(a, b, turning_radius);
  const Word w = solve_words(n.x, n.y, n.phi);
  const PatternRow& row = kPatterns[w.pattern];
  Pose cur = a;
  for (int i = 0; i < row.n; ++i) {
    const double li = w.len[i];
    if (std::abs(li) <= 1e-12) continue;
    const Direction dir =
        li > 0.0 ? Direction::Forward : Direction::Backward;
    const double length = std::abs(li) * turning_radius;
    const int count = sample_count(length, step);
    Pose next = cur;
    for (int k = 1; k <= count; ++k) {
      next = advance_along(cur, row.k[i], dir, length * k / count,
                           turning_radius);
      if (collide_pose(next, car, obstacles)) return true;
    }
    cur = next;
  }
  return false;
}

}  // namespace parkplan
