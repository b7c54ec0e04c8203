#pragma once

#include <numeric>
#include <random>
#include <string>

#include "gts/braidq.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) { return std::string(GTS_FIXTURES) + "/" + name; }

inline gts::QuotientsPtr load_q(const std::string& name) { return gts::build_quotients(gts::load_spec(fixture(name))); }

inline gts::Perm random_perm(std::mt19937_64& rng, uint32_t n) {
  std::vector<uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return gts::Perm::from_images0(img);
}

inline gts::Word random_word(std::mt19937_64& rng, const gts::Alphabet& a, int len) {
  std::vector<gts::Letter> raw;
  for (int i = 0; i < len; ++i)
    raw.push_back({static_cast<int>(rng() % static_cast<uint64_t>(a.size())), (rng() % 2) ? 1 : -1});
  return gts::Word(a, raw);
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> n = {"philadelphia.spec", "mighty_dandy.spec", "ab2.spec", "ab3.spec", "ab4.spec",
                                             "ab5.spec", "ab6.spec", "ab7.spec", "ab8.spec", "trivial.spec"};
  return n;
}

}  // namespace testutil
