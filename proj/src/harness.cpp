#include "khoform/harness.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace khoform {

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("KHOFORM_THREADS")) {
    try {
      long v = std::stol(cap);
      if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("KHOFORM_THREADS is not a number: ") + cap);
    }
  }
  return n;
}

namespace {

int letter_at(int k, int strands) {
  const int g = strands - 1;
  return k < g ? k + 1 : -(k - g + 1);
}

}  // namespace

BraidWord random_word(std::mt19937_64& rng, std::size_t length, int strands) {
  std::uniform_int_distribution<int> pick(0, 2 * (strands - 1) - 1);
  std::vector<int> gens(length);
  for (auto& g : gens) g = letter_at(pick(rng), strands);
  return BraidWord::from_generators(strands, gens);
}

BraidWord random_word_up_to(std::mt19937_64& rng, std::size_t max_length, int strands) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_word(rng, len(rng), strands);
}

std::uint64_t word_count(std::size_t length, int strands) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < length; ++i) n *= static_cast<std::uint64_t>(2 * (strands - 1));
  return n;
}

BraidWord nth_word(std::size_t length, std::uint64_t index, int strands) {
  const auto base = static_cast<std::uint64_t>(2 * (strands - 1));
  std::vector<int> gens(length);
  for (std::size_t i = length; i-- > 0;) {
    gens[i] = letter_at(static_cast<int>(index % base), strands);
    index /= base;
  }
  return BraidWord::from_generators(strands, gens);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace khoform
