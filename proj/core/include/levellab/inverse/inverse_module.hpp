#pragma once

#include "levellab/macaulay/hvector.hpp"
#include "levellab/poly/form.hpp"
#include "levellab/poly/span.hpp"
#include "levellab/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace levellab::inverse {

/// R-submodule of S = k[y_1..y_r] generated by forms of one degree e. When the
/// generators are independent this is the inverse system of a level algebra of
/// type t = #generators and socle degree e.
class InverseModule {
 public:
  /// Throws InvalidArgument unless every generator has degree `e`, `r`
  /// variables and the given field.
  InverseModule(std::size_t r, std::uint32_t e, std::vector<poly::Form> generators,
                poly::PrimeField field = poly::PrimeField{});

  static InverseModule from_forms(std::vector<poly::Form> generators);

  std::size_t r() const noexcept { return r_; }
  std::uint32_t e() const noexcept { return e_; }
  const poly::PrimeField& field() const noexcept { return field_; }
  const std::vector<poly::Form>& generators() const noexcept { return generators_; }
  bool empty() const noexcept { return generators_.empty(); }

 private:
  std::size_t r_;
  std::uint32_t e_;
  poly::PrimeField field_;
  std::vector<poly::Form> generators_;
};

/// h-vector of a module together with the data needed to replay it.
struct HProfile {
  HVector h;
  std::vector<std::size_t> dimensions;
  std::uint64_t prime = poly::kDefaultPrime;
  std::vector<std::uint64_t> seeds;
  std::size_t generator_count = 0;

  /// True when the generators were linearly independent (h_e == count).
  bool independent() const noexcept {
    return static_cast<std::size_t>(h.last()) == generator_count;
  }

  /// One-line record: `h=1,3,6,10,4 dims=1,3,6,10,4 prime=... seeds=... generators=4`.
  std::string to_record() const;
};

/// h_j = dimension of the degree-j derivative space, j = 0..e. A dependent
/// generator set is reported through HProfile::independent(), not reduced.
/// Throws InvalidArgument for the zero module.
HProfile h_vector(const InverseModule& m);

bool is_level_presentation(const InverseModule& m);
std::size_t type_of(const InverseModule& m);

struct GorensteinCheck {
  bool gorenstein = false;
  HProfile profile;
};

/// Type 1 check. Throws SoundnessError if a type-1 module has an asymmetric
/// profile.
GorensteinCheck is_gorenstein(const InverseModule& m);

/// d_i = dim(A_i ∩ B_i) for the degree-i derivative spaces A_i of f and B_i of
/// g, computed as dim A_i + dim B_i - dim(A_i + B_i).
std::vector<std::int64_t> common_derivative_dims(const poly::Form& f, const poly::Form& g);

struct Subquotient {
  InverseModule module;
  /// c x t matrix of the random combination, row-major.
  std::vector<poly::Residue> combination;
};

/// Module generated by c random combinations of m's generators; the
/// combination matrix is resampled until it has full rank c. Throws
/// InvalidArgument unless 1 <= c <= type(m).
Subquotient generic_subquotient(const InverseModule& m, std::size_t c, Rng& rng);

/// Module generated by a basis of the degree-e' derivative space of m; its
/// h-vector is the prefix h_0..h_{e'}. Throws InvalidArgument unless
/// 1 <= e' <= e.
InverseModule truncate_level(const InverseModule& m, std::uint32_t new_degree);

}  // namespace levellab::inverse
