#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qtb {

/// Sum tolerance accepted from user input (without the normalize flag).
inline constexpr double kInputSumTolerance = 1e-9;

/// Sum tolerance guaranteed after construction.
inline constexpr double kStoredSumTolerance = 1e-12;

/// Cap on product-alphabet size.
inline constexpr std::size_t kMaxProductAlphabet = 1000000;

/// Ordered list of distinct, non-empty symbols.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels);

  /// Default labels "s0", "s1", ...
  static Alphabet indexed(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

/// Immutable probability vector over an Alphabet. Entries lie in [0,1], the
/// sum is within kStoredSumTolerance of 1, and the support is non-empty.
/// Zero entries are kept explicitly; the q = 0 theory depends on support sets.
class Distribution {
 public:
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }

  /// Indices with probability strictly greater than zero. The threshold is
  /// exact zero, not an epsilon: the restriction is set-theoretic.
  std::vector<std::size_t> support() const;
  std::size_t support_size() const;

  friend Distribution make_distribution(Alphabet alphabet, std::vector<double> weights,
                                        bool normalize);

 private:
  Distribution(Alphabet alphabet, std::vector<double> probs);

  Alphabet alphabet_;
  std::vector<double> probs_;
};

/// Build a distribution from non-negative weights. With `normalize` the
/// weights are rescaled to sum 1; without it the sum must already be within
/// kInputSumTolerance of 1. Either way the stored values are renormalized
/// exactly once (skipped when the sum is exactly 1, so already-normalized
/// input is kept verbatim).
Distribution make_distribution(Alphabet alphabet, std::vector<double> weights,
                               bool normalize);

/// Uniform distribution on n >= 1 symbols with indexed labels.
Distribution uniform(std::size_t n);

/// Point mass at index i on n symbols with indexed labels.
Distribution point_mass(std::size_t n, std::size_t i);

/// True iff every index with x_i > 0 has y_i > 0. Requires equal alphabets.
bool support_contains(const Distribution& x, const Distribution& y);

/// Deterministic sample from the flat measure on the simplex
/// (exponential-spacings construction). Full support by construction.
Distribution random_distribution(std::size_t n, std::uint64_t seed);

/// Product distribution on the product alphabet with labels "a⊗b"
/// (x labels outer, y labels inner). Throws when the product alphabet would
/// exceed kMaxProductAlphabet.
Distribution product_distribution(const Distribution& x, const Distribution& y);

}  // namespace qtb
