#ifndef SEMIGLUE_GLUING_HPP
#define SEMIGLUE_GLUING_HPP

#include <optional>
#include <string>
#include <vector>

#include "semiglue/hilbert.hpp"
#include "semiglue/semigroup.hpp"
#include "semiglue/tangent_cone.hpp"
#include "semiglue/toric.hpp"

namespace semiglue {

/// Gluing data (S1, S2, p, q). `b` represents p in S1 and `a` represents q
/// in S2; these witnesses build the connecting binomial x^b - y^a.
struct GluingSpec {
  NumericalSemigroup s1;
  NumericalSemigroup s2;
  Int p = 0;
  Int q = 0;
  Representation b;
  Representation a;
  bool nice = false;

  std::size_t l() const { return s1.embedding_dimension(); }
  std::size_t k() const { return s2.embedding_dimension(); }
  /// Exponent of y1 in the connecting binomial.
  Int a1() const { return a.coefficients.front(); }
};

/// Checks every gluing condition and picks the witnesses. Niceness is decided
/// over all representations: q = a1*n1 and some representation b of p with
/// a1 <= sum(b). Among nice witnesses the lexicographically smallest b wins;
/// otherwise b maximizes sum(b) (lexicographically smallest on ties) and a is
/// concentrated on n1 when possible.
/// Throws Error{NotPositive | GcdViolation | NotInSemigroup |
/// PIsMinimalGenerator | QIsMinimalGenerator | GeneratorCollision}.
GluingSpec validate_gluing(const NumericalSemigroup& s1, const NumericalSemigroup& s2, Int p, Int q);

/// Curve on q*m_1..q*m_l (slots x1..xl) then p*n_1..p*n_k (slots y1..yk).
MonomialCurve glued_curve(const GluingSpec& spec);

/// G1 (x-block) + G2 (y-block) + x^b - y^a over the joint l+k slots, stored
/// under `order`, each element monic. G1 and G2 may be given over any order of their own ring.
std::vector<Polynomial> glued_ideal(const GluingSpec& spec, const std::vector<Polynomial>& g1,
                                    const std::vector<Polynomial>& g2, OrderPtr order);
/// Convenience overload: component ideals from the elimination route,
/// result under degrevlex with the natural priority.
std::vector<Polynomial> glued_ideal(const GluingSpec& spec);

/// x2 > ... > xl > x1 for a component on l slots.
std::vector<std::size_t> component_priority(std::size_t l);
/// y2 > ... > yk > y1 > x2 > ... > xl > x1 on the joint slots.
std::vector<std::size_t> gluing_priority(std::size_t l, std::size_t k);

struct ComponentSummary {
  bool cohen_macaulay = true;
  HilbertData hilbert;
  std::vector<Monomial> leading_monomials;  // under component_priority
};

struct VerificationReport {
  GluingSpec spec;
  std::vector<Int> glued_generators;
  std::vector<Polynomial> glued_ideal;
  ComponentSummary c1;
  ComponentSummary c2;
  TangentConeReport glued_cone;
  HilbertData glued_hilbert;

  bool smallest_generator_rule = false;  // q*m1 is the strictly smallest glued generator
  std::optional<bool> ideal_agreement;    // Rosales set vs elimination route
  std::optional<bool> oracle_agreement;   // HF vs order filtration oracle
  bool gorenstein = false;                // symmetric glued semigroup
  bool complete_intersection = false;

  // Nice gluing of two curves with CM tangent cones has a CM tangent cone.
  bool cm_theorem_applicable = false;
  bool cm_theorem_confirmed = false;
  // Nice gluing with HF(C1) nondecreasing and C2 CM has nondecreasing HF.
  bool hf_theorem_applicable = false;
  bool hf_theorem_confirmed = false;
  std::optional<bool> leading_ideal_decomposition;
  std::optional<bool> factorization_ok;

  bool rossi_candidate() const { return gorenstein && !glued_hilbert.nondecreasing; }
  /// Human-readable list of falsified claims; empty for a clean instance.
  std::vector<std::string> violations() const;
};

struct VerifyOptions {
  bool cross_check_ideal = true;
  bool check_oracle = true;
  Int hf_limit = 20;
};

VerificationReport verify_instance(const GluingSpec& spec, const VerifyOptions& options = {});

}  // namespace semiglue

#endif  // SEMIGLUE_GLUING_HPP
