#ifndef SEMIGLUE_SEMIGROUP_HPP
#define SEMIGLUE_SEMIGROUP_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace semiglue {

using Int = std::int64_t;

/// Sieves and residue tables are sized by the generators.
constexpr Int kMaxGenerator = Int{1} << 26;

/// A value written as a non-negative combination of the generators.
struct Representation {
  std::vector<Int> coefficients;
  Int value = 0;

  Int length() const;  // sum of coefficients
  bool operator==(const Representation&) const = default;
};

/// Numerical semigroup held by its minimal generating set (strictly
/// increasing, gcd 1). The Apery set with respect to the smallest generator
/// is computed at construction; membership is then a table lookup.
class NumericalSemigroup {
 public:
  /// Normalizes an arbitrary generating list to the minimal one.
  /// Throws Error{Empty | NotPositive | GcdNotOne | Overflow}.
  static NumericalSemigroup from_generators(std::span<const Int> raw);

  const std::vector<Int>& generators() const { return gens_; }
  std::size_t embedding_dimension() const { return gens_.size(); }
  Int multiplicity() const { return gens_.front(); }
  Int largest_generator() const { return gens_.back(); }

  /// Largest integer outside the semigroup; -1 for the semigroup N = <1>.
  Int frobenius() const { return frobenius_; }
  /// apery()[r] is the least element congruent to r mod multiplicity().
  const std::vector<Int>& apery() const { return apery_; }

  bool is_member(Int n) const;
  bool is_generator(Int n) const;

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

 private:
  explicit NumericalSemigroup(std::vector<Int> gens);

  std::vector<Int> gens_;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
};

NumericalSemigroup minimal_generators(std::span<const Int> raw);

/// Some representation of n, or nullopt when n is not in S.
std::optional<Representation> contains(const NumericalSemigroup& s, Int n);

/// Every representation of n, coefficient vectors in lexicographic order.
std::vector<Representation> all_representations(const NumericalSemigroup& s, Int n);

struct FrobeniusApery {
  Int frobenius;
  std::vector<Int> apery;  // sorted ascending
};
FrobeniusApery frobenius_and_apery(const NumericalSemigroup& s);

bool is_symmetric(const NumericalSemigroup& s);

/// Hilbert function H(0..limit) of the associated graded ring computed from
/// the order filtration: H(n) counts elements s whose maximal representation
/// length is n. Independent of any polynomial machinery.
std::vector<Int> order_filtration_hilbert(const NumericalSemigroup& s, Int limit);

Int gcd_of(std::span<const Int> values);

}  // namespace semiglue

#endif  // SEMIGLUE_SEMIGROUP_HPP
