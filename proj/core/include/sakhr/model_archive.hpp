#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "sakhr/corpus.hpp"
#include "sakhr/ensemble.hpp"
#include "sakhr/learners.hpp"
#include "sakhr/preprocess.hpp"
#include "sakhr/tfidf.hpp"

namespace sakhr {

inline constexpr std::string_view kArchiveMagic = "SAKHR";
inline constexpr int kArchiveFormatVersion = 1;

struct TrainingMeta {
  std::uint64_t seed = 0;
  std::string dataset_fingerprint;
  std::string dataset_source;
};

// Everything needed to reproduce predictions: preprocessing settings, the
// fitted vocabulary, the fitted learner (single or voting) and provenance.
// Serialized as one JSON document; "magic" and "format_version" are the
// first two fields and every floating-point value is written as a decimal
// with 17 significant digits, so save -> load round-trips doubles exactly.
struct ModelArchive {
  PreprocessConfig preprocess;
  TfidfConfig tfidf;
  Vocabulary vocabulary;
  std::variant<TrainedModel, VotingModel> model;
  TrainingMeta meta;
};

std::string archive_to_json(const ModelArchive& archive);
ModelArchive archive_from_json(std::string_view text, std::string_view source_name);

void save_model(const ModelArchive& archive, const std::string& path);
// Throws a format error when the file is not a sakhr archive, a version
// error when format_version is not supported.
ModelArchive load_model(const std::string& path);

// clean -> tokenize -> transform -> predict with the archived settings.
int predict_text(const ModelArchive& archive, const std::string& raw_text);

}  // namespace sakhr
