#pragma once

#include <vector>

#include "rmcode/variety.hpp"

namespace rmcode {

/// Standard indicator functions f_1..f_m of a point set, one per point.
struct IndicatorSet {
  TermOrder order;
  std::vector<Poly> fs;               // leading coefficient 1
  std::vector<Elem> values;           // f_i(P_i)
  std::vector<int> degrees;           // v_i = deg f_i
  std::vector<int> v_sorted;          // nondecreasing rearrangement of degrees
  std::vector<Monomial> essential;    // in every support, descending order
};

IndicatorSet standard_indicators(const ProjectivePointSet& x, const GroebnerBasis& g);

struct VNumbers {
  int v = 0;                 // min_i v_i
  std::vector<int> local;    // v_i per point
  std::vector<int> v_r;      // sorted; equals the regularity indices R_r
};

VNumbers v_numbers(const IndicatorSet& is);

/// Re-checks f_i: vanishes off P_i, not at P_i, standard, and no standard
/// polynomial of degree v_i - 1 separates P_i. Throws InternalInconsistency.
Poly colon_witness(const ProjectivePointSet& x, const GroebnerBasis& g, const IndicatorSet& is, std::size_t i);

/// Whether some standard polynomial of degree d separates point i.
bool separable_in_degree(const ProjectivePointSet& x, const GroebnerBasis& g, std::size_t i, int d);

}  // namespace rmcode
