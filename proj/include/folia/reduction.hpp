#pragma once

#include "folia/forms.hpp"
#include "folia/unipoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace folia {

/// Germ at the origin of a polynomial 1-form A dx + B dy in the variables
/// x, y, with gcd(A, B) = 1 (normalized as in remove_common_factor).
struct PlaneGerm {
  MultiPoly a;
  MultiPoly b;

  static PlaneGerm make(const MultiPoly& a, const MultiPoly& b);
  static PlaneGerm from_form(const DiffForm& form);
  DiffForm form() const;
  bool is_singular() const;

  friend bool operator==(const PlaneGerm& g, const PlaneGerm& h) { return g.a == h.a && g.b == h.b; }
};

/// Lowest order of A and B at the origin.
int multiplicity(const PlaneGerm& g);
/// x A_nu + y B_nu vanishes identically.
bool is_dicritical(const PlaneGerm& g);

enum class LinearClass { NilpotentOrZero, SaddleNode, HyperbolicReduced, ResonantNonreduced, IrrationalReduced };

std::string to_string(LinearClass c);

struct LinearPartClass {
  Rational trace;
  Rational det;
  LinearClass classification = LinearClass::NilpotentOrZero;

  bool reduced() const;
};

/// Classifies the linear part of the dual field (-B, A) at the origin.
LinearPartClass is_reduced(const PlaneGerm& g);

/// Singular point on the exceptional divisor: chart 'A' at (0, v) or the
/// origin of chart 'B'.
struct ExceptionalPoint {
  char chart = 'A';
  Rational v;
};

/// Strict transform in one chart, in the variables x, y of the chart.
struct ChartTransform {
  PlaneGerm strict;
  /// Strict transform before gcd normalization: the pullback equals
  /// E^divided_power times this form, E the exceptional coordinate.
  DiffForm raw;
  int divided_power = 0;
};

/// Chart A is (x, y) -> (x, x y) with E = {x = 0}; chart B is
/// (x, y) -> (x y, y) with E = {y = 0}.
struct BlowUpResult {
  int multiplicity = 0;
  bool dicritical = false;
  ChartTransform chart_a;
  ChartTransform chart_b;
  std::vector<ExceptionalPoint> singular_points;  ///< chart A by v ascending, then chart B
  /// Squarefree factor of the chart-A singular-point polynomial with no
  /// rational roots, in v; constant when every singular direction is rational.
  UniPoly obstruction;
};

BlowUpResult blow_up(const PlaneGerm& g);

/// Checks pullback(chart map, form) = E^k raw and raw = f * strict for both
/// charts.
bool verify_blow_up(const PlaneGerm& g, const BlowUpResult& r);

/// Germ moved so that (x, y) = (0, v) becomes the origin.
PlaneGerm recenter(const PlaneGerm& g, const Rational& v);

enum class NodeStatus { Reduced, Regular, DicriticalResolved, Interior };

std::string to_string(NodeStatus s);

struct ReductionNode {
  int id = 0;
  int parent = -1;
  std::vector<std::string> chart_path;
  PlaneGerm germ;
  NodeStatus status = NodeStatus::Regular;
  std::optional<LinearPartClass> linear_class;  ///< set for singular germs
  int depth = 0;
};

struct ReductionTree {
  std::vector<ReductionNode> nodes;  ///< breadth-first, parents before children
  int depth = 0;
  int blowup_count = 0;
};

/// Blows up every non-reduced singular node until all leaves are reduced or
/// regular. Throws NeedsFieldExtension (details list the obstruction
/// polynomials) or MaxDepthExceeded.
ReductionTree reduce(const PlaneGerm& g, int max_depth = 64);

}  // namespace folia
