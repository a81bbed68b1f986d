#pragma once

#include <string>
#include <vector>

#include "sakhr/evaluation.hpp"

namespace sakhr {

// Aligned text table with the columns Classifier / Accuracy / STD; accuracy
// as a percentage with one decimal, STD with three decimals.
std::string format_cv_table(const std::vector<CvReport>& rows);
std::string format_cv_json(const std::vector<CvReport>& rows);

// Five-row test report: F-1 sarcastic, F-score (macro), Precision (P),
// Recall (R), Accuracy — four decimals each. Degenerate-metric notes are
// appended after the table.
std::string format_test_report(const MetricsReport& report);
std::string format_test_report_json(const MetricsReport& report);

}  // namespace sakhr
