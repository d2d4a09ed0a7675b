#include "lll/tape.hpp"

namespace lll {

namespace {

// 2^64 as an exact rational denominator for uniform draws.
const Rational& two_to_64() {
  static const Rational value = [] {
    BigInt t;
    mpz_ui_pow_ui(t.get_mpz_t(), 2, 64);
    return Rational(t);
  }();
  return value;
}

}  // namespace

RandomTape::RandomTape(std::uint64_t seed) : seed_(seed), engine_(seed) {}

RandomTape::RandomTape(std::vector<int> draws, std::uint64_t seed, bool fallback)
    : seed_(seed), engine_(seed), forced_(draws.begin(), draws.end()), fallback_(fallback) {}

RandomTape RandomTape::forced(std::vector<int> draws) {
  return RandomTape(std::move(draws), 0, false);
}

RandomTape RandomTape::forced_then_seeded(std::vector<int> draws, std::uint64_t seed) {
  return RandomTape(std::move(draws), seed, true);
}

int RandomTape::draw(const VariableSpec& var) {
  ++consumed_;
  if (!forced_.empty()) {
    const int value = forced_.front();
    forced_.pop_front();
    if (value < 0 || value >= var.domain_size) {
      throw TapeError("forced draw " + std::to_string(value) + " outside domain of size " +
                      std::to_string(var.domain_size));
    }
    return value;
  }
  if (!fallback_) throw TapeError("forced tape exhausted");
  // Exact inverse-CDF on a 2^64 grid: pick the least value whose cumulative
  // weight exceeds r / 2^64. Comparisons are exact rationals.
  const std::uint64_t r = engine_();
  Rational u{BigInt(r)};
  u /= two_to_64();
  Rational cum = 0;
  for (int value = 0; value < var.domain_size; ++value) {
    cum += var.weights[value];
    if (u < cum) return value;
  }
  return var.domain_size - 1;  // unreachable: weights sum to 1 > u
}

Assignment sample(const EventSystem& system, RandomTape& tape) {
  Assignment a;
  a.values.resize(system.num_variables());
  for (std::size_t v = 0; v < system.num_variables(); ++v) {
    a.values[v] = tape.draw(system.variable(v));
  }
  return a;
}

Assignment resample_step(const EventSystem& system, const Event& event, const Assignment& current,
                         RandomTape& tape) {
  Assignment a = current;
  for (int v : event.scope) {
    a.values[v] = tape.draw(system.variable(v));
  }
  return a;
}

}  // namespace lll
