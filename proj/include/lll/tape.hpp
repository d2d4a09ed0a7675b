#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <vector>

#include "lll/model.hpp"

namespace lll {

// Seeded, replayable stream of variable draws. Identical seeds yield
// identical draw sequences; every consumer draws per-variable in increasing
// variable-id order, which is what makes executions replayable.
//
// A forced prefix serves scripted value indices before the generator takes
// over; a purely forced tape throws TapeError once exhausted.
class RandomTape {
 public:
  explicit RandomTape(std::uint64_t seed);
  static RandomTape forced(std::vector<int> draws);
  static RandomTape forced_then_seeded(std::vector<int> draws, std::uint64_t seed);

  // Next value index for a variable, weighted by its spec.
  int draw(const VariableSpec& var);

  std::uint64_t draws_consumed() const { return consumed_; }
  std::uint64_t seed() const { return seed_; }

 private:
  RandomTape(std::vector<int> draws, std::uint64_t seed, bool fallback);

  std::uint64_t seed_ = 0;
  std::mt19937_64 engine_;
  std::deque<int> forced_;
  bool fallback_ = true;
  std::uint64_t consumed_ = 0;
};

// Draws every variable in increasing id order.
Assignment sample(const EventSystem& system, RandomTape& tape);

// Redraws exactly the variables in the event's scope (increasing id order),
// leaving all others untouched.
Assignment resample_step(const EventSystem& system, const Event& event, const Assignment& current,
                         RandomTape& tape);

}  // namespace lll
