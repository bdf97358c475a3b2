#include "thompson/subgroups.hpp"

#include "thompson/normal_form.hpp"

namespace thompson {

void validate(const SubgroupParams& params) {
  if (params.s < 2) {
    throw Error("subgroup parameter s must be at least 2");
  }
  if (params.M == 0) {
    throw Error("target length M must be positive");
  }
}

bool in_A(const NormalWord& w, std::uint32_t s) {
  const auto& pos = w.pos();
  const auto& neg = w.neg();
  if (pos.size() != neg.size()) {
    return false;
  }
  for (std::size_t k = 1; k <= pos.size(); ++k) {
    const auto bound = static_cast<std::int64_t>(k) + s;
    if (static_cast<std::int64_t>(pos[k - 1]) >= bound ||
        static_cast<std::int64_t>(neg[k - 1]) >= bound) {
      return false;
    }
  }
  return true;
}

bool in_B(const NormalWord& w, std::uint32_t s) {
  // rewriting never lowers the minimum index, so a word in the generators
  // x_{s+1}, x_{s+2}, ... keeps all indices above s in normal form
  const auto floor = static_cast<Index>(s) + 1;
  return (w.pos().empty() || w.pos().front() >= floor) &&
         (w.neg().empty() || w.neg().front() >= floor);
}

std::vector<NormalWord> a_generators(std::uint32_t s) {
  std::vector<NormalWord> out;
  out.reserve(s);
  for (std::uint32_t k = 1; k <= s; ++k) {
    out.push_back(NormalWord::from_parts({0}, {k}));
  }
  return out;
}

std::vector<NormalWord> b_generators(std::uint32_t s) {
  std::vector<NormalWord> out;
  out.reserve(s);
  for (std::uint32_t k = s + 1; k <= 2 * s; ++k) {
    out.push_back(NormalWord::from_parts({k}, {}));
  }
  return out;
}

std::vector<NormalWord> base_generators(std::uint32_t s) {
  std::vector<NormalWord> out;
  out.reserve(s + 3);
  for (std::uint32_t k = 0; k <= s + 2; ++k) {
    out.push_back(NormalWord::from_parts({k}, {}));
  }
  return out;
}

namespace {

NormalWord grow_random_element(const std::vector<NormalWord>& generators,
                               std::uint64_t target_length, SplitMix64& rng,
                               const char* what) {
  NormalWord element;
  const std::uint64_t step_cap = 64 * target_length;
  for (std::uint64_t step = 0; step < step_cap; ++step) {
    const std::uint64_t pick = rng.next_below(2 * generators.size());
    const NormalWord& g = generators[pick / 2];
    const SeminormalWord factor =
        (pick % 2 == 0) ? g.body() : inverse(g.body());
    element = normal_product({&element.body(), &factor});
    if (element.length() >= target_length) {
      return element;
    }
  }
  throw GenerationStalledError(std::string(what) +
                               " generation made no progress after " +
                               std::to_string(step_cap) + " steps");
}

}  // namespace

NormalWord gen_A(const SubgroupParams& params, SplitMix64& rng) {
  validate(params);
  return grow_random_element(a_generators(params.s), params.M, rng, "A_s");
}

NormalWord gen_B(const SubgroupParams& params, SplitMix64& rng) {
  validate(params);
  return grow_random_element(b_generators(params.s), params.M, rng, "B_s");
}

NormalWord gen_base_word(const SubgroupParams& params, SplitMix64& rng) {
  validate(params);
  return grow_random_element(base_generators(params.s), params.M, rng,
                             "base word");
}

}  // namespace thompson
