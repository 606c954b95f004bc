#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qid/spectrum.hpp"

namespace qid::lattice {

struct RationalBasis {
  Rational generator;                   // positive
  std::vector<long long> coefficients;  // coefficients[i] * generator == coords[i]
};

// gcd/lcm reduction of exact rational coordinates onto a single positive
// generator: generator = g/L with L the lcm of denominators and g the gcd of
// the scaled numerators.  Throws std::invalid_argument when every coordinate
// is zero (the coordinate should be elided instead).
RationalBasis rational_basis(const std::vector<Rational>& coords);

// Bookkeeping for a lifted law: the generator system, the per-atom integer
// coefficient rows, and the embedding back into <X> in R^d.
class LiftMap {
 public:
  LiftMap(GeneratorSystemPtr gs, std::vector<Frequency> rows);

  const GeneratorSystemPtr& generator_system() const { return gs_; }
  std::size_t atom_count() const { return rows_.size(); }
  const Frequency& forward(std::size_t atom_index) const { return rows_[atom_index]; }
  const std::vector<Frequency>& rows() const { return rows_; }
  std::vector<double> embed(const Frequency& z) const { return gs_->embed(z); }

 private:
  GeneratorSystemPtr gs_;
  std::vector<Frequency> rows_;
};

struct LiftResult {
  Spectrum lattice_spectrum;  // coefficients on the standard Z^M lattice
  LiftMap map;
};

// Lifts a law onto Z^M.  The diagonal section of the lifted function along
// (beta_l^{(j)} t^{(j)}) reproduces the law's characteristic function.
LiftResult lift(const DiscreteLaw& law);

// Deterministic mixed-radix weight vector with base B = 2*max|z|+1: distinct
// frequencies in the input set receive distinct integer images <w, z>.
// Throws std::invalid_argument on an empty set.
std::vector<std::int64_t> injective_functional(const std::vector<Frequency>& freqs);

struct GenericDirection {
  std::vector<double> values;                   // c in R^d
  std::optional<std::vector<Rational>> exact;   // present when exactly representable
};

// A deterministic direction c such that distinct lifted atoms project to
// distinct reals: identity for d = 1, the injective-functional weights divided
// by the per-coordinate generator when every coordinate has one generator, and
// a verified power-base construction otherwise.
GenericDirection generic_direction(const LiftMap& map);

// Builds a law from exact rational atom positions, deriving one generator per
// coordinate with rational_basis.  Coordinates that are zero across all atoms
// are elided (zero generators).
DiscreteLaw law_from_rational_positions(const std::vector<std::vector<Rational>>& positions,
                                        const std::vector<double>& weights,
                                        double tau_prob = 1e-12);

}  // namespace qid::lattice
