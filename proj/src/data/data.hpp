#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/types.hpp"

namespace intervalcast::data {

// One train/test row pair from an M4-format corpus.
struct M4Item {
  std::string id;
  std::vector<double> train;
  std::vector<double> test;
};

struct M4Corpus {
  Frequency frequency = Frequency::Yearly;
  std::vector<M4Item> items;
};

Frequency parse_frequency(const std::string& name);
std::string frequency_name(Frequency f);

// M4-format CSVs: one series per row, id first, values after, trailing
// empty cells allowed. Train and test files must agree on ids; test rows
// must have exactly the frequency's horizon length.
M4Corpus load_m4_corpus(const std::string& train_path,
                        const std::string& test_path, Frequency frequency);

void save_m4_corpus(const M4Corpus& corpus, const std::string& train_path,
                    const std::string& test_path);

// Single numeric column, optional header line.
std::vector<double> load_generic_csv(const std::string& path);

// Deterministic proportional subsample (round half up on fraction * n),
// preserving original order.
M4Corpus sample_corpus(const M4Corpus& corpus, double fraction,
                       std::uint64_t seed);

}  // namespace intervalcast::data
