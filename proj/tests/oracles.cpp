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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parkplan/reeds_shepp.hpp"

namespace parkplan::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double owrap(double a) {
  while (a > kPi) a -= kTau;
  while (a < -kPi) a += kTau;
  return a;
}

// ---------------------------------------------------------------------------
// Reeds-Shepp reference: generic word shapes solved numerically.
//
// A word shape is a sequence of at most five segments, each a left turn,
// straight or right turn with a fixed drive direction. Magnitudes are either
// one of three free variables, or pinned to pi/2 (the fixed interior turns of
// the long families). Variable 1 may be shared by two segments (the tied
// middle turns of the four-turn family). Variable 2 is always a turn that
// appears exactly once, so the heading-closure equation can be solved for it;
// the remaining two variables are found with Newton iterations on the
// position residual from many starting points.
// ---------------------------------------------------------------------------

struct OSeg {
  int kind;         // 0 = left, 1 = straight, 2 = right
  int sign;         // +1 forward, -1 backward
  int var;          // free magnitude index, or -1
  double fixed_mag; // used when var < 0
};

struct OWord {
  int n = 0;
  OSeg seg[5];
};

// Arc motion written via the turn-center construction.
void o_advance(double& x, double& y, double& th, int kind, double slen) {
  if (kind == 1) {
    x += slen * std::cos(th);
    y += slen * std::sin(th);
    return;
  }
  if (kind == 0) {
    const double cx = x - std::sin(th);
    const double cy = y + std::cos(th);
    const double nth = th + slen;
    x = cx + std::sin(nth);
    y = cy - std::cos(nth);
    th = nth;
  } else {
    const double cx = x + std::sin(th);
    const double cy = y - std::cos(th);
    const double nth = th - slen;
    x = cx - std::sin(nth);
    y = cy + std::cos(nth);
    th = nth;
  }
}

void o_endpoint(const OWord& w, const double m[3], double& x, double& y,
                double& th) {
  x = 0.0;
  y = 0.0;
  th = 0.0;
  for (int i = 0; i < w.n; ++i) {
    const OSeg& s = w.seg[i];
    const double mag = s.var >= 0 ? m[s.var] : s.fixed_mag;
    o_advance(x, y, th, s.kind, s.sign * mag);
  }
}

int heading_coef(const OSeg& s) {
  const int turn = s.kind == 0 ? 1 : (s.kind == 2 ? -1 : 0);
  return turn * s.sign;
}

std::vector<OWord> build_words() {
  std::vector<OWord> words;
  const auto push = [&](std::initializer_list<int> kinds,
                        std::initializer_list<int> vars, int signmask) {
    OWord w;
    w.n = static_cast<int>(kinds.size());
    int i = 0;
    auto vi = vars.begin();
    for (int k : kinds) {
      w.seg[i].kind = k;
      w.seg[i].sign = (signmask >> i) & 1 ? -1 : 1;
      w.seg[i].var = *vi;
      w.seg[i].fixed_mag = *vi < 0 ? 0.5 * kPi : 0.0;
      ++i;
      ++vi;
    }
    words.push_back(w);
  };

  const int pat3[6][3] = {{0, 1, 0}, {0, 1, 2}, {0, 2, 0},
                          {2, 1, 2}, {2, 1, 0}, {2, 0, 2}};
  for (const auto& p : pat3) {
    for (int s = 0; s < 8; ++s) push({p[0], p[1], p[2]}, {0, 1, 2}, s);
  }
  const int pat4cccc[2][4] = {{0, 2, 0, 2}, {2, 0, 2, 0}};
  for (const auto& p : pat4cccc) {
    for (int s = 0; s < 16; ++s)
      push({p[0], p[1], p[2], p[3]}, {0, 1, 1, 2}, s);
  }
  const int pat4ccsc[4][4] = {
      {0, 2, 1, 0}, {2, 0, 1, 2}, {0, 2, 1, 2}, {2, 0, 1, 0}};
  for (const auto& p : pat4ccsc) {
    for (int s = 0; s < 16; ++s)
      push({p[0], p[1], p[2], p[3]}, {0, -1, 1, 2}, s);
  }
  const int pat4cscc[4][4] = {
      {0, 1, 2, 0}, {2, 1, 0, 2}, {2, 1, 2, 0}, {0, 1, 0, 2}};
  for (const auto& p : pat4cscc) {
    for (int s = 0; s < 16; ++s)
      push({p[0], p[1], p[2], p[3]}, {0, 1, -1, 2}, s);
  }
  const int pat5[2][5] = {{0, 2, 1, 0, 2}, {2, 0, 1, 2, 0}};
  for (const auto& p : pat5) {
    for (int s = 0; s < 32; ++s)
      push({p[0], p[1], p[2], p[3], p[4]}, {0, -1, 1, -1, 2}, s);
  }
  return words;
}

struct WordSolveContext {
  const OWord& w;
  double gx, gy, gphi;
  double fixed_heading;  // heading contribution of the fixed segments
  double c[3];           // heading coefficients of the free variables
  double cap1;           // magnitude cap of variable 1
  double straight_cap;
};

// m2 from the heading closure for wrap index k; NaN when out of turn range.
double eliminate_m2(const WordSolveContext& ctx, double m0, double m1, int k) {
  const double rhs = ctx.gphi - ctx.fixed_heading - ctx.c[0] * m0 -
                     ctx.c[1] * m1 + k * kTau;
  const double m2 = rhs / ctx.c[2];
  if (m2 < -0.5 || m2 > kPi + 0.5) return std::numeric_limits<double>::quiet_NaN();
  return m2;
}

void position_residual(const WordSolveContext& ctx, double m0, double m1,
                       double m2, double& fx, double& fy) {
  double x, y, th;
  const double m[3] = {m0, m1, m2};
  o_endpoint(ctx.w, m, x, y, th);
  fx = x - ctx.gx;
  fy = y - ctx.gy;
}

// Newton on (m0, m1) with m2 eliminated; returns the accepted word length.
std::optional<double> solve_from(const WordSolveContext& ctx, double s0,
                                 double s1, int k) {
  double m0 = s0;
  double m1 = s1;
  const double h = 1e-7;
  for (int iter = 0; iter < 30; ++iter) {
    const double m2 = eliminate_m2(ctx, m0, m1, k);
    if (!std::isfinite(m2)) return std::nullopt;
    double fx, fy;
    position_residual(ctx, m0, m1, m2, fx, fy);
    if (std::abs(fx) < 1e-12 && std::abs(fy) < 1e-12) break;
    double fx0p, fy0p, fx0m, fy0m, fx1p, fy1p, fx1m, fy1m;
    double m2v = eliminate_m2(ctx, m0 + h, m1, k);
    if (!std::isfinite(m2v)) return std::nullopt;
    position_residual(ctx, m0 + h, m1, m2v, fx0p, fy0p);
    m2v = eliminate_m2(ctx, m0 - h, m1, k);
    position_residual(ctx, m0 - h, m1, m2v, fx0m, fy0m);
    m2v = eliminate_m2(ctx, m0, m1 + h, k);
    position_residual(ctx, m0, m1 + h, m2v, fx1p, fy1p);
    m2v = eliminate_m2(ctx, m0, m1 - h, k);
    position_residual(ctx, m0, m1 - h, m2v, fx1m, fy1m);
    const double j00 = (fx0p - fx0m) / (2 * h);
    const double j10 = (fy0p - fy0m) / (2 * h);
    const double j01 = (fx1p - fx1m) / (2 * h);
    const double j11 = (fy1p - fy1m) / (2 * h);
    const double det = j00 * j11 - j01 * j10;
    if (std::abs(det) < 1e-14) return std::nullopt;
    m0 -= (fx * j11 - fy * j01) / det;
    m1 -= (fy * j00 - fx * j10) / det;
    if (std::abs(m0) > 50.0 || std::abs(m1) > ctx.straight_cap + 50.0)
      return std::nullopt;
  }

  const double m2 = eliminate_m2(ctx, m0, m1, k);
  if (!std::isfinite(m2)) return std::nullopt;
  constexpr double kSlack = 1e-9;
  if (m0 < -kSlack || m0 > kPi + kSlack) return std::nullopt;
  if (m1 < -kSlack || m1 > ctx.cap1 + kSlack) return std::nullopt;
  if (m2 < -kSlack || m2 > kPi + kSlack) return std::nullopt;
  const double m[3] = {std::max(m0, 0.0), std::max(m1, 0.0),
                       std::max(m2, 0.0)};
  double x, y, th;
  o_endpoint(ctx.w, m, x, y, th);
  if (std::abs(x - ctx.gx) > 1e-8 || std::abs(y - ctx.gy) > 1e-8 ||
      std::abs(owrap(th - ctx.gphi)) > 1e-8) {
    return std::nullopt;
  }
  double length = 0.0;
  for (int i = 0; i < ctx.w.n; ++i) {
    const OSeg& s = ctx.w.seg[i];
    length += s.var >= 0 ? m[s.var] : s.fixed_mag;
  }
  return length;
}

}  // namespace

double rs_reference_distance(double x, double y, double phi,
                             double straight_cap) {
  static const std::vector<OWord> kWords = build_words();
  const double gphi = owrap(phi);
  double best = kInf;

  const double turn_starts[5] = {0.15, 0.8, 1.6, 2.4, 3.0};
  std::vector<double> straight_starts = {0.2, 1.0, 3.0};
  for (double f : {0.25, 0.5, 0.75, 1.0}) {
    if (f * straight_cap > 3.5) straight_starts.push_back(f * straight_cap);
  }

  for (const OWord& w : kWords) {
    WordSolveContext ctx{w, x, y, gphi, 0.0, {0.0, 0.0, 0.0}, kPi,
                         straight_cap};
    bool var1_straight = false;
    for (int i = 0; i < w.n; ++i) {
      const OSeg& s = w.seg[i];
      const int coef = heading_coef(s);
      if (s.var >= 0) {
        ctx.c[s.var] += coef;
        if (s.var == 1 && s.kind == 1) var1_straight = true;
      } else {
        ctx.fixed_heading += coef * s.fixed_mag;
      }
    }
    if (ctx.c[2] == 0.0) continue;  // cannot close the heading; not a shape we need
    ctx.cap1 = var1_straight ? straight_cap : kPi;
    const auto starts1 = var1_straight
                             ? std::span<const double>(straight_starts)
                             : std::span<const double>(turn_starts, 5);
    for (double s0 : turn_starts) {
      for (double s1 : starts1) {
        for (int k = -3; k <= 3; ++k) {
          if (!std::isfinite(eliminate_m2(ctx, s0, s1, k))) continue;
          if (const auto len = solve_from(ctx, s0, s1, k)) {
            best = std::min(best, *len);
          }
        }
      }
    }
  }
  return best;
}

double rs_reference_distance(const Pose& a, const Pose& b, double radius) {
  const double dx = (b.x - a.x) / radius;
  const double dy = (b.y - a.y) / radius;
  const double c = std::cos(a.theta);
  const double s = std::sin(a.theta);
  const double lx = c * dx + s * dy;
  const double ly = -s * dx + c * dy;
  const double cap = std::hypot(lx, ly) + 10.0;
  return rs_reference_distance(lx, ly, owrap(b.theta - a.theta), cap) * radius;
}

double rs_grid_search_ccc(double x, double y, double phi, double grid,
                          double pos_tol) {
  const int pats[2][3] = {{0, 2, 0}, {2, 0, 2}};
  const double gphi = owrap(phi);
  double best = kInf;
  const int steps = static_cast<int>(std::ceil(kPi / grid));
  for (const auto& p : pats) {
    for (int smask = 0; smask < 8; ++smask) {
      const int sg[3] = {(smask & 1) ? -1 : 1, (smask & 2) ? -1 : 1,
                         (smask & 4) ? -1 : 1};
      const int c0 = (p[0] == 0 ? 1 : -1) * sg[0];
      const int c1 = (p[1] == 0 ? 1 : -1) * sg[1];
      const int c2 = (p[2] == 0 ? 1 : -1) * sg[2];
      for (int i = 0; i <= steps; ++i) {
        const double m0 = std::min(i * grid, kPi);
        for (int j = 0; j <= steps; ++j) {
          const double m1 = std::min(j * grid, kPi);
          for (int k = -2; k <= 2; ++k) {
            const double m2 = (gphi - c0 * m0 - c1 * m1 + k * kTau) / c2;
            if (m2 < 0.0 || m2 > kPi) continue;
            double ex = 0.0, ey = 0.0, eth = 0.0;
            o_advance(ex, ey, eth, p[0], sg[0] * m0);
            o_advance(ex, ey, eth, p[1], sg[1] * m1);
            o_advance(ex, ey, eth, p[2], sg[2] * m2);
            if (std::hypot(ex - x, ey - y) <= pos_tol) {
              best = std::min(best, m0 + m1 + m2);
            }
          }
        }
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// collision reference
// ---------------------------------------------------------------------------

namespace {

struct OBox {
  double xmin, xmax, ymin, ymax;
};

OBox o_body(const Car& car) {
  const double rear = 0.5 * (car.length - car.wheelbase);
  const double front = car.length - rear;
  return {-rear, front, -0.5 * car.width, 0.5 * car.width};
}

Vec2 o_to_world(const Pose& p, double lx, double ly) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return {p.x + c * lx - s * ly, p.y + s * lx + c * ly};
}

Vec2 o_to_local(const Pose& p, double wx, double wy) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  const double dx = wx - p.x;
  const double dy = wy - p.y;
  return {c * dx + s * dy, -s * dx + c * dy};
}

double seg_seg_distance(const Vec2& a, const Vec2& b, const Vec2& c,
                        const Vec2& d);

double point_seg_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0.0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

int orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
}

bool segs_intersect(const Vec2& a, const Vec2& b, const Vec2& c,
                    const Vec2& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  const auto on = [](const Vec2& p, const Vec2& q, const Vec2& r) {
    return orient(p, q, r) == 0 && r.x >= std::min(p.x, q.x) - 1e-15 &&
           r.x <= std::max(p.x, q.x) + 1e-15 &&
           r.y >= std::min(p.y, q.y) - 1e-15 && r.y <= std::max(p.y, q.y) + 1e-15;
  };
  return on(a, b, c) || on(a, b, d) || on(c, d, a) || on(c, d, b);
}

double seg_seg_distance(const Vec2& a, const Vec2& b, const Vec2& c,
                        const Vec2& d) {
  if (segs_intersect(a, b, c, d)) return 0.0;
  return std::min(std::min(point_seg_distance(a, c, d), point_seg_distance(b, c, d)),
                  std::min(point_seg_distance(c, a, b), point_seg_distance(d, a, b)));
}

}  // namespace

bool collides_circle_sampled(const Pose& pose, const Car& car,
                             const CircleObstacle& obstacle,
                             double boundary_res, double interior_res) {
  const OBox box = o_body(car);
  const double r2 = obstacle.r * obstacle.r;
  const auto hit = [&](double lx, double ly) {
    const Vec2 w = o_to_world(pose, lx, ly);
    const double dx = w.x - obstacle.x;
    const double dy = w.y - obstacle.y;
    return dx * dx + dy * dy <= r2;
  };
  const auto walk_edge = [&](double x0, double y0, double x1, double y1) {
    const double len = std::hypot(x1 - x0, y1 - y0);
    const int n = std::max(1, static_cast<int>(std::ceil(len / boundary_res)));
    for (int i = 0; i <= n; ++i) {
      const double f = static_cast<double>(i) / n;
      if (hit(x0 + f * (x1 - x0), y0 + f * (y1 - y0))) return true;
    }
    return false;
  };
  if (walk_edge(box.xmin, box.ymin, box.xmax, box.ymin)) return true;
  if (walk_edge(box.xmax, box.ymin, box.xmax, box.ymax)) return true;
  if (walk_edge(box.xmax, box.ymax, box.xmin, box.ymax)) return true;
  if (walk_edge(box.xmin, box.ymax, box.xmin, box.ymin)) return true;
  for (double lx = box.xmin; lx <= box.xmax; lx += interior_res) {
    for (double ly = box.ymin; ly <= box.ymax; ly += interior_res) {
      if (hit(lx, ly)) return true;
    }
  }
  return false;
}

bool collides_segment_sampled(const Pose& pose, const Car& car,
                              const SegmentObstacle& obstacle, double res) {
  const OBox box = o_body(car);
  const double len = std::hypot(obstacle.x2 - obstacle.x1,
                                obstacle.y2 - obstacle.y1);
  const int n = std::max(1, static_cast<int>(std::ceil(len / res)));
  for (int i = 0; i <= n; ++i) {
    const double f = static_cast<double>(i) / n;
    const Vec2 l = o_to_local(pose, obstacle.x1 + f * (obstacle.x2 - obstacle.x1),
                              obstacle.y1 + f * (obstacle.y2 - obstacle.y1));
    if (l.x >= box.xmin && l.x <= box.xmax && l.y >= box.ymin &&
        l.y <= box.ymax) {
      return true;
    }
  }
  return false;
}

double circle_footprint_margin(const Pose& pose, const Car& car,
                               const CircleObstacle& obstacle) {
  const OBox box = o_body(car);
  const Vec2 c = o_to_local(pose, obstacle.x, obstacle.y);
  const double px = std::clamp(c.x, box.xmin, box.xmax);
  const double py = std::clamp(c.y, box.ymin, box.ymax);
  return std::abs(std::hypot(c.x - px, c.y - py) - obstacle.r);
}

double segment_footprint_margin(const Pose& pose, const Car& car,
                                const SegmentObstacle& obstacle) {
  const OBox box = o_body(car);
  const Vec2 a = o_to_local(pose, obstacle.x1, obstacle.y1);
  const Vec2 b = o_to_local(pose, obstacle.x2, obstacle.y2);
  // inside the box entirely?
  const auto inside = [&](const Vec2& p) {
    return p.x >= box.xmin && p.x <= box.xmax && p.y >= box.ymin &&
           p.y <= box.ymax;
  };
  if (inside(a) || inside(b)) return 0.0;
  const Vec2 c0{box.xmin, box.ymin}, c1{box.xmax, box.ymin},
      c2{box.xmax, box.ymax}, c3{box.xmin, box.ymax};
  double d = kInf;
  d = std::min(d, seg_seg_distance(a, b, c0, c1));
  d = std::min(d, seg_seg_distance(a, b, c1, c2));
  d = std::min(d, seg_seg_distance(a, b, c2, c3));
  d = std::min(d, seg_seg_distance(a, b, c3, c0));
  return d;
}

// ---------------------------------------------------------------------------
// nearest-neighbor reference
// ---------------------------------------------------------------------------

std::uint32_t linear_scan_nearest(
    const std::vector<ScanItem>& items,
    const std::function<double(const Pose&)>& cost) {
  double best = kInf;
  std::uint32_t best_id = 0;
  bool found = false;
  for (const ScanItem& item : items) {
    const double c = cost(item.pose);
    if (!found || c < best || (c == best && item.id < best_id)) {
      best = c;
      best_id = item.id;
      found = true;
    }
  }
  return best_id;
}

std::vector<std::uint32_t> linear_scan_near(
    const std::vector<ScanItem>& items,
    const std::function<double(const Pose&)>& cost, double dist) {
  std::vector<std::uint32_t> out;
  for (const ScanItem& item : items) {
    if (cost(item.pose) < dist) out.push_back(item.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// tip-route reference
// ---------------------------------------------------------------------------

double exhaustive_tip_route_cost(const Path& path, const Car& car,
                                 const ObstacleSet& obstacles, double radius,
                                 double step) {
  // independent tip extraction: first pose, arriving/departing direction
  // flips, last pose
  std::vector<std::size_t> tips{0};
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (path[i].dir != Direction::None &&
        path[i + 1].dir != Direction::None && path[i].dir != path[i + 1].dir) {
      tips.push_back(i);
    }
  }
  tips.push_back(path.size() - 1);
  const std::size_t m = tips.size();

  std::vector<double> leg(m - 1, 0.0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t k = tips[i]; k < tips[i + 1]; ++k) {
      leg[i] += rs_distance(path[k].pose, path[k + 1].pose, radius);
    }
  }
  std::vector<signed char> free_cache(m * m, -1);
  const auto steered_free = [&](std::size_t i, std::size_t j) {
    signed char& f = free_cache[i * m + j];
    if (f < 0) {
      f = edge_collides(path[tips[i]].pose, path[tips[j]].pose, radius, step,
                        car, obstacles)
              ? 0
              : 1;
    }
    return f == 1;
  };

  const std::size_t interior = m - 2;
  double best = kInf;
  for (std::uint64_t mask = 0; mask < (1ULL << interior); ++mask) {
    std::vector<std::size_t> seq{0};
    for (std::size_t b = 0; b < interior; ++b) {
      if (mask & (1ULL << b)) seq.push_back(b + 1);
    }
    seq.push_back(m - 1);
    double cost = 0.0;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      const std::size_t i = seq[k];
      const std::size_t j = seq[k + 1];
      if (steered_free(i, j)) {
        cost += rs_distance(path[tips[i]].pose, path[tips[j]].pose, radius);
      } else if (j == i + 1) {
        cost += leg[i];
      } else {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min(best, cost);
  }
  return best;
}

}  // namespace parkplan::oracle
