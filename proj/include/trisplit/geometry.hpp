#pragma once

#include "trisplit/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace trisplit {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

inline int dim_of(Axis a) { return static_cast<int>(a); }
Axis axis_from_dim(int d);
char axis_name(Axis a);
std::optional<Axis> axis_from_name(char c);

// The two coordinate dimensions transverse to `a`, in increasing order.
std::pair<int, int> transverse_dims(Axis a);

// An infinite line parallel to one coordinate axis. c1 and c2 are the fixed
// coordinates in the two transverse dimensions, in increasing dimension
// order: an X-line stores (y, z), a Y-line (x, z), a Z-line (x, y).
struct Line {
  Axis axis;
  Rational c1;
  Rational c2;

  // Fixed coordinate in dimension d; d must differ from the line's axis.
  const Rational& coord(int d) const;

  // Base point of the parameterization p + lambda * e_axis, with
  // coordinate 0 along the line's own axis.
  std::array<Rational, 3> base_point() const;

  friend bool operator==(const Line&, const Line&) = default;
};

// Canonical order: (axis, c1, c2).
bool operator<(const Line& a, const Line& b);

// Plane {p[axis] = offset}.
struct AxisPlane {
  Axis axis;
  Rational offset;

  friend bool operator==(const AxisPlane&, const AxisPlane&) = default;
};

// Plane {normal . p + offset = 0}, stored with the first nonzero normal
// component scaled to +1 so equal planes compare equal.
class GeneralPlane {
 public:
  GeneralPlane(std::array<Rational, 3> normal, Rational offset);

  const std::array<Rational, 3>& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }

  friend bool operator==(const GeneralPlane&, const GeneralPlane&) = default;

 private:
  std::array<Rational, 3> normal_;
  Rational offset_;
};

using Plane = std::variant<AxisPlane, GeneralPlane>;

bool plane_equal(const Plane& a, const Plane& b);

// Affine form f(p) = normal . p + constant vanishing on the plane.
// AxisPlane{a, o} maps to normal = e_a, constant = -o, so both encodings of
// the same plane produce identical signs.
struct PlaneForm {
  std::array<Rational, 3> normal;
  Rational constant;
};
PlaneForm plane_form(const Plane& h);

struct PlaneTriple {
  std::array<Plane, 3> planes;
};

// How a line sits relative to a plane: it either pierces it at a unique
// parameter, stays strictly on one side, or lies inside it.
struct SideResult {
  enum class Kind { Crossing, Side, Contained };
  Kind kind;
  Rational lambda;  // crossing parameter, valid for Kind::Crossing
  int sign = 0;     // +1 or -1, valid for Kind::Side
};

SideResult side_of(const Line& line, const Plane& plane);

// Cells of the arrangement are identified with sign vectors in {+,-}^3;
// index bit 2^(2-i) is set iff the sign w.r.t. plane i is +.
int cell_index(int s0, int s1, int s2);
std::string cell_name(int index);                      // e.g. "+-+"
std::optional<int> cell_index_from_name(const std::string& name);

struct LoadReport {
  std::array<std::int64_t, 8> counts{};  // by cell_index
  std::int64_t max_load = 0;
  // (line index, plane index) for every containment; contained lines are
  // excluded from all cell counts.
  std::vector<std::pair<std::size_t, std::size_t>> contained;

  std::int64_t total() const;

  friend bool operator==(const LoadReport&, const LoadReport&) = default;
};

// Counts, for every open cell of the arrangement of the three planes, how
// many of the lines meet it. A line meets the cell of sign vector s iff the
// set of parameters realizing s along the line is a nonempty open set.
LoadReport load_report(const std::vector<Line>& lines, const PlaneTriple& triple);

// Number of maximal open line pieces the triple cuts the lines into, summed
// over lines not contained in any of the three planes. Always equals the
// sum of the cell counts of load_report.
std::int64_t fragment_total(const std::vector<Line>& lines, const PlaneTriple& triple);

// The unique plane containing two distinct parallel lines; its normal has
// zero component along the shared axis. Throws if the lines are equal.
GeneralPlane plane_through_parallel_lines(const Line& a, const Line& b);

// Signed permutation of the coordinate frame: maps a point p to q with
// q[perm[d]] = sign[d] * p[d]. The 48 of these are the symmetries of the
// axis frame.
struct SignedAxisPermutation {
  std::array<int, 3> perm = {0, 1, 2};
  std::array<int, 3> sign = {1, 1, 1};

  static SignedAxisPermutation identity() { return {}; }
  // Transposition of dimensions a and b, no sign flips.
  static SignedAxisPermutation swap_dims(int a, int b);
  // Sign flip of dimension d.
  static SignedAxisPermutation flip_dim(int d);

  Line apply(const Line& l) const;
  Plane apply(const Plane& h) const;
  PlaneTriple apply(const PlaneTriple& t) const;
  std::vector<Line> apply(const std::vector<Line>& lines) const;

  SignedAxisPermutation inverse() const;
  // Composition: (*this) after `first`.
  SignedAxisPermutation after(const SignedAxisPermutation& first) const;
};

std::vector<SignedAxisPermutation> all_signed_permutations();

}  // namespace trisplit
