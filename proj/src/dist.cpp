#include "qtb/dist.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "qtb/numeric.hpp"

namespace qtb {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw std::domain_error("Alphabet: needs at least one symbol");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      throw std::domain_error("Alphabet: empty label");
    }
    if (!seen.insert(label).second) {
      throw std::domain_error("Alphabet: duplicate label '" + label + "'");
    }
  }
}

Alphabet Alphabet::indexed(std::size_t n) {
  if (n == 0) {
    throw std::domain_error("Alphabet: needs at least one symbol");
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("s" + std::to_string(i));
  }
  return Alphabet(std::move(labels));
}

Distribution::Distribution(Alphabet alphabet, std::vector<double> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {}

std::vector<std::size_t> Distribution::support() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] > 0.0) idx.push_back(i);
  }
  return idx;
}

std::size_t Distribution::support_size() const {
  std::size_t count = 0;
  for (double p : probs_) {
    if (p > 0.0) ++count;
  }
  return count;
}

Distribution make_distribution(Alphabet alphabet, std::vector<double> weights,
                               bool normalize) {
  if (weights.size() != alphabet.size()) {
    throw std::domain_error("make_distribution: weights do not match alphabet size");
  }
  NeumaierSum acc;
  bool any_positive = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::domain_error("make_distribution: weight for '" +
                              alphabet.labels()[i] + "' is negative or not finite");
    }
    if (w > 0.0) any_positive = true;
    acc.add(w);
  }
  if (!any_positive) {
    throw std::domain_error("make_distribution: all weights are zero");
  }
  const double sum = acc.value();
  if (!normalize && std::abs(sum - 1.0) > kInputSumTolerance) {
    throw std::domain_error("make_distribution: weights sum to " +
                            std::to_string(sum) + ", pass normalize to rescale");
  }
  if (sum != 1.0) {
    for (double& w : weights) w /= sum;
  }
  return Distribution(std::move(alphabet), std::move(weights));
}

Distribution uniform(std::size_t n) {
  return make_distribution(Alphabet::indexed(n), std::vector<double>(n, 1.0), true);
}

Distribution point_mass(std::size_t n, std::size_t i) {
  if (i >= n) {
    throw std::domain_error("point_mass: index " + std::to_string(i) +
                            " out of range for n = " + std::to_string(n));
  }
  std::vector<double> w(n, 0.0);
  w[i] = 1.0;
  return make_distribution(Alphabet::indexed(n), std::move(w), false);
}

bool support_contains(const Distribution& x, const Distribution& y) {
  if (!(x.alphabet() == y.alphabet())) {
    throw std::domain_error("support_contains: alphabet mismatch");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.probs()[i] > 0.0 && !(y.probs()[i] > 0.0)) return false;
  }
  return true;
}

Distribution random_distribution(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw std::domain_error("random_distribution: n must be positive");
  }
  std::mt19937_64 rng(seed);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Uniform draw strictly inside (0,1), so -log is strictly positive and
    // every coordinate ends up in the support.
    const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    w[i] = -std::log(u);
  }
  return make_distribution(Alphabet::indexed(n), std::move(w), true);
}

Distribution product_distribution(const Distribution& x, const Distribution& y) {
  const std::size_t nx = x.size(), ny = y.size();
  if (nx > kMaxProductAlphabet / ny) {
    throw std::domain_error("product_distribution: product alphabet exceeds cap");
  }
  std::vector<std::string> labels;
  std::vector<double> w;
  labels.reserve(nx * ny);
  w.reserve(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      labels.push_back(x.alphabet().labels()[i] + "⊗" + y.alphabet().labels()[j]);
      w.push_back(x.probs()[i] * y.probs()[j]);
    }
  }
  return make_distribution(Alphabet(std::move(labels)), std::move(w), true);
}

}  // namespace qtb
