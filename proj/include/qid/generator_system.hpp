#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qid/frequency.hpp"
#include "qid/rational.hpp"

namespace qid {

// One real generator beta, optionally with an exact rational value.  When an
// exact value is present the floating value is derived from it.
struct Generator {
  double value = 0.0;
  std::optional<Rational> exact;
};

// Per-coordinate generator lists spanning the lifted lattice Z^M.
//
// Z-linear independence of the generators within each coordinate is declared
// by the caller at construction and never inferred from the floating values;
// equality of real frequencies is not decidable in floating point, so all
// frequency arithmetic happens on integer coefficient vectors and the reals
// here serve only for embeddings.
//
// A coordinate may carry zero generators; its embedded component is then
// identically zero (the coordinate is elided, in the sense that no atom puts
// mass away from zero there).
class GeneratorSystem {
 public:
  static std::shared_ptr<const GeneratorSystem> create(
      std::vector<std::vector<Generator>> generators);
  static std::shared_ptr<const GeneratorSystem> create_values(
      const std::vector<std::vector<double>>& values);
  // rank coordinates, one generator each, all equal to 1: the standard Z^M.
  static std::shared_ptr<const GeneratorSystem> integer_lattice(std::size_t rank);

  std::size_t dimension() const { return counts_.size(); }  // d
  std::size_t rank() const { return flat_.size(); }         // M
  std::size_t count(std::size_t coord) const { return counts_[coord]; }
  std::size_t offset(std::size_t coord) const { return offsets_[coord]; }
  const Generator& generator(std::size_t coord, std::size_t index) const {
    return flat_[offsets_[coord] + index];
  }
  const Generator& flat(std::size_t k) const { return flat_[k]; }

  // Independence of the declared generators is trusted, not verified.
  bool declared_independent() const { return true; }
  bool is_integer_lattice() const { return integer_lattice_; }
  bool all_rational() const { return all_rational_; }

  // Real embedding of a lattice frequency into R^d.
  std::vector<double> embed(const Frequency& z) const;
  // Exact embedding; available only when every generator is rational.
  std::optional<std::vector<Rational>> embed_exact(const Frequency& z) const;

  bool same_as(const GeneratorSystem& other) const;

 private:
  GeneratorSystem() = default;

  std::vector<Generator> flat_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> offsets_;
  bool integer_lattice_ = false;
  bool all_rational_ = false;
};

using GeneratorSystemPtr = std::shared_ptr<const GeneratorSystem>;

}  // namespace qid
