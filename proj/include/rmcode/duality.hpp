#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmcode/artinian.hpp"
#include "rmcode/codes.hpp"
#include "rmcode/error.hpp"

namespace rmcode {

struct FailureWitness {
  int d = 0;
  std::string reason;
};

struct DualityCertificate {
  bool symmetric_sum = false;  // H(d) + H(r0-d-1) = m for 0 <= d <= r0
  bool v_all_r0 = false;       // every local v-number equals r0
  bool holds = false;
  std::vector<Elem> beta;      // empty unless holds; last entry 1
  std::vector<int> verified_degrees;
  std::optional<FailureWitness> failure_witness;
};

/// Spanning vector of C_X(r0-1)^perp scaled to end in 1. Throws NotApplicable
/// unless that dual is a line with no zero coordinate.
std::vector<Elem> parity_check_vector(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd);

/// (lc(f_1) f_1(P_1)^{-1}, ..., lc(f_m) f_m(P_m)^{-1}).
std::vector<Elem> indicator_beta(const ProjectivePointSet& x, const IndicatorSet& is);

/// Evaluates the numeric criterion, and when it holds builds beta and checks
/// C_X(d)^perp = beta * C_X(r0-d-1) for every 0 <= d <= r0. A disagreement
/// between the criterion and the direct check throws InternalInconsistency.
DualityCertificate global_duality(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd,
                                  const IndicatorSet& is);

/// cert.holds must equal cls.gorenstein; throws InternalInconsistency otherwise.
/// Returns the shared verdict.
bool gorenstein_crosscheck(const DualityCertificate& cert, const ArtinianClassification& cls);

class ConditionFailure : public Error {
 public:
  ConditionFailure(int condition, const std::string& what)
      : Error(ErrorKind::ConditionFailed, "condition " + std::to_string(condition) + ": " + what),
        condition_(condition) {}
  int condition() const noexcept { return condition_; }

 private:
  int condition_;
};

struct LocalDualityVerdict {
  int d = 0;
  int k = 0;
  std::vector<Elem> gamma;
};

/// Checks, in this order: t_e essential (NotEssential), the projective-mode
/// preconditions (PreconditionFailed), |G1| + |G2| = m, d + k = r0 (d + k <= r0
/// in projective mode), and that t_e is absent from every remainder of u1 u2
/// (ConditionFailure). Then verifies gamma * ev_d(K G1) = ev_k(K G2)^perp.
/// An empty list takes the degree that satisfies the degree condition.
LocalDualityVerdict local_duality_verify(const ProjectivePointSet& x, const GroebnerBasis& g, const HilbertData& hd,
                                         const IndicatorSet& is, const std::vector<Monomial>& gamma1,
                                         const std::vector<Monomial>& gamma2, const Monomial& te,
                                         bool projective_mode);

/// C_X(d) inside its dual, via the sum of every degree-2d standard monomial
/// over the points; cross-checked against the codes (InternalInconsistency).
bool self_orthogonal(const ProjectivePointSet& x, const GroebnerBasis& g, int d);
/// Self-orthogonal and m = 2 H(d).
bool self_dual(const ProjectivePointSet& x, const GroebnerBasis& g, int d);

struct SelfDualRow {
  int d = 0;
  bool monomially_self_dual = false;  // r0 = 2d + 1
  bool self_dual = false;
  std::optional<bool> column_criterion;  // d = 1, last coordinates 1, no linear form in I
};

/// For each 1 <= d <= r0 on a Gorenstein X. Throws NotGorenstein.
std::vector<SelfDualRow> gorenstein_selfdual_classify(const ProjectivePointSet& x, const GroebnerBasis& g,
                                                      const HilbertData& hd, const ArtinianClassification& cls);

struct AffineDuality {
  ProjectivePointSet closure;
  GroebnerBasis g;
  HilbertData hd;  // the affine Hilbert function of X equals H_Y
  DualityCertificate certificate;
};

/// Global duality of Y = [X, 1] for affine points X in K^n; `order` has n + 1 variables.
AffineDuality affine_duality(const FieldPtr& field, int n, const std::vector<Point>& affine, const TermOrder& order);

}  // namespace rmcode
