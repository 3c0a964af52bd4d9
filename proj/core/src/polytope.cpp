#include "wernerdec/polytope.hpp"

#include "wernerdec/symmetric.hpp"

#include <algorithm>
#include <stdexcept>

namespace wernerdec {

HalfspaceSystem build_system(int d) {
  const Rational a = alpha_ratio(d);
  HalfspaceSystem sys;
  sys.d = d;
  sys.rows = {
      {{Rational(1), Rational(-1), Rational(0)}, Rational(0)},     // x - y >= 0
      {{Rational(1), a, Rational(0)}, Rational(0)},                // x + a y >= 0
      {{Rational(0), Rational(1), Rational(-1)}, Rational(0)},     // y - z >= 0
      {{Rational(0), Rational(1), a}, Rational(0)},                // y + a z >= 0
      {{Rational(-1), Rational(-1), Rational(-2)}, Rational(-1)},  // 1 - x - y - 2z >= 0
      {{Rational(-1), Rational(-1), a - 1}, Rational(-1)},         // 1 - x - y + (a-1)z >= 0
      {{Rational(2), Rational(1), Rational(1)}, Rational(1)},      // 2x + y + z >= 1
      {{Rational(1) - a, -a, -a}, -a},                             // x + a(1-x-y-z) >= 0
  };
  return sys;
}

bool is_feasible(const HalfspaceSystem& sys, const std::array<Rational, 3>& point) {
  for (const auto& row : sys.rows) {
    Rational lhs = 0;
    for (int i = 0; i < 3; ++i) lhs += row.normal[i] * point[i];
    if (lhs < row.rhs) return false;
  }
  return true;
}

namespace {

// Cramer solve of a 3x3 system; false when singular.
bool solve3(const std::array<const Halfspace*, 3>& rows, std::array<Rational, 3>& out) {
  const auto det3 = [](const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  std::array<std::array<Rational, 3>, 3> a;
  for (int r = 0; r < 3; ++r) a[r] = rows[r]->normal;
  const Rational det = det3(a);
  if (det == 0) return false;
  for (int col = 0; col < 3; ++col) {
    std::array<std::array<Rational, 3>, 3> ac = a;
    for (int r = 0; r < 3; ++r) ac[r][col] = rows[r]->rhs;
    out[col] = det3(ac) / det;
  }
  return true;
}

}  // namespace

std::vector<std::array<Rational, 3>> enumerate_vertices(const HalfspaceSystem& sys) {
  const int n = static_cast<int>(sys.rows.size());
  std::vector<std::array<Rational, 3>> found;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        std::array<Rational, 3> point;
        if (!solve3({&sys.rows[i], &sys.rows[j], &sys.rows[k]}, point)) continue;
        if (is_feasible(sys, point)) found.push_back(point);
      }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<std::array<Rational, 3>> reference_vertices(int d) {
  const Rational dd(d);
  std::vector<std::array<Rational, 3>> out = {
      {(dd + 1) / (2 * (dd + 2)), (dd + 1) / (2 * (dd + 2)), -(dd - 1) / (2 * (dd + 2))},
      {Rational(1), Rational(0), Rational(0)},
      {Rational(1, 4), Rational(1, 4), Rational(1, 4)},
      {Rational(1, 2), Rational(0), Rational(0)},
      {Rational(1, 2), Rational(1, 2), Rational(0)},
  };
  std::sort(out.begin(), out.end());
  return out;
}

PlaneSection plane_section(int d) {
  const HalfspaceSystem sys = build_system(d);
  // Substitute y = (1 - x - z)/2 into n.(x,y,z) >= r:
  //   (nx - ny/2) x + (nz - ny/2) z >= r - ny/2.
  std::vector<PlaneInequality> raw;
  for (const auto& row : sys.rows) {
    PlaneInequality q;
    q.x_coeff = row.normal[0] - row.normal[1] / 2;
    q.z_coeff = row.normal[2] - row.normal[1] / 2;
    q.rhs = row.rhs - row.normal[1] / 2;
    raw.push_back(q);
  }
  // Canonicalize by the positive factor that makes the leading coefficient +-1,
  // then deduplicate; the eight rows collapse pairwise onto four.
  const auto canonical = [](PlaneInequality q) {
    Rational lead = q.x_coeff != 0 ? q.x_coeff : q.z_coeff;
    if (lead == 0) throw std::logic_error("plane_section: degenerate row");
    Rational scale = lead < 0 ? -lead : lead;
    q.x_coeff /= scale;
    q.z_coeff /= scale;
    q.rhs /= scale;
    return q;
  };
  PlaneSection section;
  section.d = d;
  for (const auto& q : raw) {
    const PlaneInequality c = canonical(q);
    const bool seen = std::any_of(section.rows.begin(), section.rows.end(), [&](const PlaneInequality& r) {
      return r.x_coeff == c.x_coeff && r.z_coeff == c.z_coeff && r.rhs == c.rhs;
    });
    if (!seen) section.rows.push_back(c);
  }
  // Fixed presentation order: 3x+z>=1, then the x+3z<=1 row, then the
  // redundant row, then -x+(2a-1)z>=-1.
  std::vector<PlaneInequality> ordered;
  const auto take = [&](std::size_t raw_index) {
    const PlaneInequality c = canonical(raw[raw_index]);
    for (const auto& r : section.rows)
      if (r.x_coeff == c.x_coeff && r.z_coeff == c.z_coeff && r.rhs == c.rhs) {
        ordered.push_back(r);
        return;
      }
  };
  take(0);  // from x - y >= 0
  take(2);  // from y - z >= 0
  take(1);  // from x + a y >= 0 (redundant for the section)
  take(3);  // from y + a z >= 0
  section.rows = ordered;
  if (section.rows.size() != 4) throw std::logic_error("plane_section: expected four distinct rows");
  return section;
}

std::vector<std::array<Rational, 2>> plane_vertices(const PlaneSection& section, int skip_row) {
  const auto rows = section.rows;
  const int n = static_cast<int>(rows.size());
  std::vector<std::array<Rational, 2>> found;
  const auto feasible = [&](const std::array<Rational, 2>& pt) {
    for (int i = 0; i < n; ++i) {
      if (i == skip_row) continue;
      if (rows[i].x_coeff * pt[0] + rows[i].z_coeff * pt[1] < rows[i].rhs) return false;
    }
    return true;
  };
  for (int i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == skip_row) continue;
      const Rational det = rows[i].x_coeff * rows[j].z_coeff - rows[i].z_coeff * rows[j].x_coeff;
      if (det == 0) continue;
      std::array<Rational, 2> pt;
      pt[0] = (rows[i].rhs * rows[j].z_coeff - rows[i].z_coeff * rows[j].rhs) / det;
      pt[1] = (rows[i].x_coeff * rows[j].rhs - rows[i].rhs * rows[j].x_coeff) / det;
      if (feasible(pt)) found.push_back(pt);
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace wernerdec
