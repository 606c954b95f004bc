#pragma once

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qid/generator_system.hpp"

namespace qid {

// A finitely supported complex coefficient map over a lifted frequency
// lattice, identified with the absolutely convergent Fourier series
//
//   s(t) = sum_y q_y exp(i <t, embed(y)>),   t in R^d.
//
// Values are immutable after construction and every operation below is a pure
// function of its inputs, so concurrent use of shared spectra is safe.
//
// Coefficients with modulus at or below the drop threshold are pruned at
// construction; the cumulative l1 mass removed this way is carried in
// pruned_l1() so that reported sup-norm bounds can account for it.
class Spectrum {
 public:
  using CoeffMap = std::map<Frequency, std::complex<double>>;

  static constexpr double default_drop_threshold = 1e-15;

  Spectrum(GeneratorSystemPtr gs, CoeffMap coeffs,
           double drop_threshold = default_drop_threshold,
           double carried_pruned_l1 = 0.0);

  static Spectrum zero(GeneratorSystemPtr gs);
  static Spectrum point_mass(GeneratorSystemPtr gs, Frequency at,
                             std::complex<double> mass = 1.0);

  const GeneratorSystemPtr& generator_system() const { return gs_; }
  const CoeffMap& coefficients() const { return coeffs_; }
  std::size_t term_count() const { return coeffs_.size(); }
  double drop_threshold() const { return drop_threshold_; }
  double pruned_l1() const { return pruned_l1_; }

  double l1_norm() const;
  std::complex<double> sum() const;  // equals evaluate at t = 0
  std::complex<double> coefficient(const Frequency& z) const;

  // Direct evaluation; absolute error is bounded by pruned_l1().
  std::complex<double> evaluate(std::span<const double> t) const;

 private:
  GeneratorSystemPtr gs_;
  CoeffMap coeffs_;
  double drop_threshold_ = default_drop_threshold;
  double pruned_l1_ = 0.0;
};

// Convolution of the underlying measures: coefficient at w is
// sum_{u+v=w} a(u) b(v); evaluations multiply pointwise.
Spectrum convolve(const Spectrum& a, const Spectrum& b);

Spectrum add(const Spectrum& a, const Spectrum& b);
Spectrum scale(const Spectrum& s, std::complex<double> factor);

// Negates all frequencies and conjugates coefficients, so evaluations turn
// into their complex conjugates.
Spectrum reflect(const Spectrum& s);

// l1 distance of the stored coefficient maps over the union support.
double l1_distance(const Spectrum& a, const Spectrum& b);

// The same coefficients reinterpreted over the standard lattice Z^M,
// forgetting the real embedding.  This is the phi-tilde trick: the supremum
// behaviour of the series on R^d matches the lattice function on the M-torus
// when the generators are Z-independent.
Spectrum lattice_view(const Spectrum& s);

struct TruncationResult {
  Spectrum head;         // renormalized to sum exactly 1
  double achieved_tail;  // l1 mass of the dropped tail
  std::size_t kept;      // number of retained terms
};

// Keeps the n largest-modulus terms with n minimal such that the sup-norm
// error bound (2A+1) * tail is at most epsilon * mu_lower (or epsilon when no
// mu_lower is supplied), then renormalizes the head to sum exactly 1.
// Requires epsilon in (0, 1/4) and |head partial sum| >= 1/2.
TruncationResult truncate_normalize(const Spectrum& s, double epsilon,
                                    std::optional<double> mu_lower = std::nullopt,
                                    double tau_prob = 1e-12);

// exp in the convolution algebra: sum_m s^{*m} / m! with the factorial tail
// below tau_tail.  Uses exp(s) = exp(s/2^k)^(2^k) when ||s||_1 > 1 to keep
// intermediate l1 growth under control.
Spectrum exp_spectrum(const Spectrum& s, double tau_tail);

// Reciprocal in the Wiener algebra: returns r with evaluate(r,t)*evaluate(s,t)
// staying within tau_tail of 1.  mu_lower must be a valid positive lower bound
// for inf |s|; it is cross-checked against a freshly computed certificate and
// a certificate_error is thrown when refuted.  Implemented as exp of the
// negated distinguished logarithm (see torus_analysis.hpp, which also offers
// an overload taking an existing certificate).
Spectrum invert(const Spectrum& s, double mu_lower, double tau_tail);

// A Spectrum whose coefficients are real, nonnegative, and sum to 1 within
// tau_prob: a discrete probability law identified with its characteristic
// function.
class DiscreteLaw {
 public:
  static DiscreteLaw from_spectrum(Spectrum s, double tau_prob = 1e-12);
  static DiscreteLaw from_atoms(GeneratorSystemPtr gs, std::vector<Frequency> rows,
                                const std::vector<double>& weights,
                                double tau_prob = 1e-12);
  // Validates that the declared integer rows reproduce the given real atom
  // positions within position_tolerance before lifting.
  static DiscreteLaw from_positions(GeneratorSystemPtr gs, std::vector<Frequency> rows,
                                    const std::vector<std::vector<double>>& positions,
                                    const std::vector<double>& weights,
                                    double position_tolerance = 1e-9,
                                    double tau_prob = 1e-12);

  const Spectrum& spectrum() const { return spectrum_; }
  const GeneratorSystemPtr& generator_system() const { return spectrum_.generator_system(); }

  struct Atom {
    Frequency frequency;
    double weight;
  };
  std::vector<Atom> atoms() const;
  std::size_t atom_count() const { return spectrum_.term_count(); }

 private:
  explicit DiscreteLaw(Spectrum s) : spectrum_(std::move(s)) {}
  Spectrum spectrum_;
};

}  // namespace qid
