#pragma once

#include <optional>
#include <vector>

#include "rmcode/indicators.hpp"

namespace rmcode {

/// Linear form avoiding every point, possibly over an extension F_{q^e}.
struct RegularForm {
  Poly h;
  int extension_degree = 1;
  std::optional<FieldEmbedding> embedding;  // set when extension_degree > 1
};

/// Prefers the smallest variable of `order`, then the other variables, then
/// general forms with first nonzero coefficient 1; extends scalars when no
/// form over F_q avoids X.
RegularForm find_regular_linear_form(const ProjectivePointSet& x, const TermOrder& order);

/// Coefficients mapped through the embedding.
Poly lift_poly(const Poly& f, const FieldEmbedding& emb);
GroebnerBasis lift_basis(const GroebnerBasis& g, const FieldEmbedding& emb);

/// Reduced Groebner basis of J = (I, h). Uses G u {t_s} directly when h is
/// the smallest variable of a GRevLex order. Throws NotRegular.
GroebnerBasis artinian_reduce(const GroebnerBasis& g, const Poly& h);

struct SocleElement {
  Poly f;  // standard with respect to J, monic
  int degree = 0;
};

struct SocleData {
  std::vector<long long> hilbert;       // dim (S/J)_d for d = 0..top
  std::vector<SocleElement> socle;      // basis of (J : m)/J
  int type = 0;
  bool level = false;
  bool gorenstein = false;
  int s_number = 0;                     // minimal socle degree
  std::vector<int> socle_degrees;       // ascending, distinct
  std::optional<Monomial> socle_monomial;  // the top standard monomial when Gorenstein
};

/// Socle of the Artinian ring S/J, degree by degree, as the common kernel of
/// multiplication by the variables. Throws NotArtinian.
SocleData socle(const GroebnerBasis& j);

struct ArtinianClassification {
  RegularForm form;
  GroebnerBasis j;
  SocleData data;
  bool reg_check = false;               // top degree of S/J equals r0
  bool complete_intersection = false;   // s - 1 minimal generators
};

/// Full pipeline on X: choose h (or use the given one), reduce, compute the
/// socle, and check the structural invariants (InternalInconsistency).
ArtinianClassification classify_artinian(const ProjectivePointSet& x, const GroebnerBasis& g,
                                         const HilbertData& hd, const std::optional<Poly>& h = std::nullopt);

struct SocleIdentityReport {
  std::vector<Elem> lambdas;       // f_i = lambda_i t^a mod J
  bool essential_form_checked = false;  // h is t_s under GRevLex with t_s(P_i) = 1
};

/// Identities tying the indicator functions to the socle monomial of a
/// Gorenstein reduction. Throws PreconditionFailed when not Gorenstein and
/// IdentityViolated when an identity fails.
SocleIdentityReport verify_socle_identities(const ArtinianClassification& cls, const ProjectivePointSet& x,
                                            const GroebnerBasis& g, const HilbertData& hd,
                                            const IndicatorSet& is);

}  // namespace rmcode
