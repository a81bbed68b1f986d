#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sakhr/csv.hpp"

namespace sakhr {

// One labeled record in the shared-task schema.
struct Sample {
  std::string text;
  int sarcastic = 0;  // 1 = sarcastic
  std::optional<std::string> dialect;
  std::optional<std::string> rephrase;

  bool operator==(const Sample&) const = default;
};

struct Dataset {
  std::vector<Sample> samples;
  std::string source;      // file path or "synthetic"
  bool has_labels = true;  // false when the label column was absent

  std::size_t size() const { return samples.size(); }
  std::vector<int> labels() const;
};

// Logical field -> CSV column mapping. `text` and (unless require_label is
// off) the label column must exist; dialect/rephrase are optional.
struct CsvSchema {
  std::string text_column = "text";
  std::string label_column = "sarcastic";
  std::string dialect_column = "dialect";
  std::string rephrase_column = "rephrase";
  bool require_label = true;
};

// Accepted label spellings, case-insensitive: "1"/"0", "true"/"false",
// "sarcastic"/"non_sarcastic". Anything else throws a schema error.
int parse_label(std::string_view raw);

Dataset dataset_from_table(const CsvTable& table, const CsvSchema& schema, std::string source);
Dataset load_dataset(const std::string& path, const CsvSchema& schema = {});

CsvTable dataset_to_table(const Dataset& dataset);

// Seeded Fisher-Yates permutation of the samples; same seed and input give
// the same order on every platform.
Dataset shuffle_dataset(const Dataset& dataset, std::uint64_t seed);

// SHA-256 (hex) of the canonicalized sample list; records what a model was
// trained on.
std::string dataset_fingerprint(const Dataset& dataset);

}  // namespace sakhr
