#include "sakhr/reporting.hpp"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace sakhr {

namespace {

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

}  // namespace

std::string format_cv_table(const std::vector<CvReport>& rows) {
  std::size_t name_width = std::string("Classifier").size();
  for (const auto& row : rows) name_width = std::max(name_width, row.classifier_name.size());

  std::string out;
  out += pad_right("Classifier", name_width) + "  " + pad_left("Accuracy", 8) + "  " + "STD\n";
  for (const auto& row : rows) {
    out += pad_right(row.classifier_name, name_width) + "  " +
           pad_left(fixed(row.mean_accuracy * 100.0, 1) + "%", 8) + "  " +
           fixed(row.std_accuracy, 3) + "\n";
  }
  return out;
}

std::string format_cv_json(const std::vector<CvReport>& rows) {
  nlohmann::ordered_json doc;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json r;
    r["classifier"] = row.classifier_name;
    r["mean_accuracy"] = row.mean_accuracy;
    r["std_accuracy"] = row.std_accuracy;
    r["per_fold_accuracy"] = row.per_fold_accuracy;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2) + "\n";
}

std::string format_test_report(const MetricsReport& report) {
  const std::pair<const char*, double> measures[] = {
      {"F-1 sarcastic", report.f1_sarcastic}, {"F-score", report.macro_f1},
      {"Precision (P)", report.precision_sarcastic}, {"Recall (R)", report.recall_sarcastic},
      {"Accuracy", report.accuracy},
  };
  std::size_t name_width = std::string("Measure").size();
  for (const auto& [name, value] : measures) {
    name_width = std::max(name_width, std::string(name).size());
  }

  std::string out;
  out += pad_right("Measure", name_width) + "  Value\n";
  for (const auto& [name, value] : measures) {
    out += pad_right(name, name_width) + "  " + fixed(value, 4) + "\n";
  }
  for (const auto& note : report.degenerate_notes) {
    out += "note: " + note + "\n";
  }
  return out;
}

std::string format_test_report_json(const MetricsReport& report) {
  nlohmann::ordered_json doc;
  doc["f1_sarcastic"] = report.f1_sarcastic;
  doc["f_score"] = report.macro_f1;
  doc["precision"] = report.precision_sarcastic;
  doc["recall"] = report.recall_sarcastic;
  doc["accuracy"] = report.accuracy;
  doc["f1_per_class"] = {report.f1_per_class[0], report.f1_per_class[1]};
  doc["notes"] = report.degenerate_notes;
  return doc.dump(2) + "\n";
}

}  // namespace sakhr
