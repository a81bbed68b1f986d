#include "sakhr/corpus.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cctype>

#include <nlohmann/json.hpp>

#include "sakhr/errors.hpp"
#include "sakhr/rng.hpp"

namespace sakhr {

std::vector<int> Dataset::labels() const {
  std::vector<int> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.sarcastic);
  return out;
}

int parse_label(std::string_view raw) {
  std::string lower(raw);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "1" || lower == "true" || lower == "sarcastic") return 1;
  if (lower == "0" || lower == "false" || lower == "non_sarcastic") return 0;
  throw Error(ErrorKind::schema, "unparseable label value '" + std::string(raw) + "'");
}

Dataset dataset_from_table(const CsvTable& table, const CsvSchema& schema, std::string source) {
  const std::size_t text_col = table.require_column(schema.text_column, source);
  std::optional<std::size_t> label_col = table.column(schema.label_column);
  if (schema.require_label && !label_col) {
    table.require_column(schema.label_column, source);  // throws with the column name
  }
  const auto dialect_col = table.column(schema.dialect_column);
  const auto rephrase_col = table.column(schema.rephrase_column);

  Dataset dataset;
  dataset.source = std::move(source);
  dataset.has_labels = label_col.has_value();
  dataset.samples.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    Sample sample;
    sample.text = row[text_col];
    if (sample.text.empty()) {
      throw Error(ErrorKind::schema,
                  dataset.source + ": row " + std::to_string(r + 1) + ": empty text");
    }
    if (label_col) {
      try {
        sample.sarcastic = parse_label(row[*label_col]);
      } catch (const Error& e) {
        throw Error(ErrorKind::schema,
                    dataset.source + ": row " + std::to_string(r + 1) + ": " + e.what());
      }
    }
    if (dialect_col && !row[*dialect_col].empty()) sample.dialect = row[*dialect_col];
    if (rephrase_col && !row[*rephrase_col].empty()) sample.rephrase = row[*rephrase_col];
    dataset.samples.push_back(std::move(sample));
  }
  return dataset;
}

Dataset load_dataset(const std::string& path, const CsvSchema& schema) {
  return dataset_from_table(read_csv(path), schema, path);
}

CsvTable dataset_to_table(const Dataset& dataset) {
  CsvTable table;
  table.header = {"text", "sarcastic", "dialect", "rephrase"};
  table.rows.reserve(dataset.samples.size());
  for (const auto& s : dataset.samples) {
    table.rows.push_back({s.text, std::to_string(s.sarcastic), s.dialect.value_or(""),
                          s.rephrase.value_or("")});
  }
  return table;
}

Dataset shuffle_dataset(const Dataset& dataset, std::uint64_t seed) {
  Dataset out = dataset;
  SplitMix64 rng(derive_seed(seed, 0));
  rng.shuffle(out.samples);
  return out;
}

std::string dataset_fingerprint(const Dataset& dataset) {
  // Canonical form: compact JSON array of [text, label, dialect, rephrase].
  nlohmann::json canon = nlohmann::json::array();
  for (const auto& s : dataset.samples) {
    canon.push_back({s.text, s.sarcastic,
                     s.dialect ? nlohmann::json(*s.dialect) : nlohmann::json(nullptr),
                     s.rephrase ? nlohmann::json(*s.rephrase) : nlohmann::json(nullptr)});
  }
  const std::string payload = canon.dump();

  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int digest_len = 0;
  if (EVP_Digest(payload.data(), payload.size(), digest.data(), &digest_len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorKind::io, "fingerprint: SHA-256 computation failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(digest_len * 2);
  for (unsigned int i = 0; i < digest_len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0x0f]);
  }
  return out;
}

}  // namespace sakhr
