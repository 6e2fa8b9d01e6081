#pragma once

#include <random>
#include <string>

#include "mcg/moves.hpp"
#include "mcg/registry.hpp"
#include "mcg/word.hpp"

#ifndef MCG_DATA_DIR
#error "MCG_DATA_DIR must point at data/"
#endif

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(MCG_DATA_DIR) + "/" + name; }

inline mcg::WordInput load_word(const std::string& name) {
  return mcg::parse_word_input(mcg::read_file(data_path(name)));
}

inline mcg::DerivationCertificate derive(const std::string& word_file, const std::string& script_file) {
  return mcg::run_script(load_word(word_file), mcg::parse_script(mcg::read_file(data_path(script_file))),
                         mcg::Registry::standard());
}

// Random word over bare and conjugated registry curves, exponents +-1.
inline mcg::TwistWord random_word(std::mt19937_64& rng, std::size_t len, bool positive = false) {
  static const char* bases[] = {"c1", "c2", "c3", "c4", "c5", "delta", "x", "kbar", "hbar", "k", "h"};
  static const char* letters[] = {"c1", "c2", "c3", "c4", "c5"};
  std::uniform_int_distribution<int> base(0, 10), letter(0, 4), coin(0, 1), conj_len(0, 3);
  mcg::TwistWord w;
  for (std::size_t i = 0; i < len; ++i) {
    mcg::LetterWord u;
    for (int k = conj_len(rng); k > 0; --k) u.push_back(mcg::Letter{letters[letter(rng)], coin(rng) ? 1 : -1});
    const int e = positive || coin(rng) ? 1 : -1;
    w.tokens.emplace_back(mcg::CurveRef(u, bases[base(rng)]), e);
  }
  return w;
}

}  // namespace testing
