// Acceptance suite: one test per release criterion, each printed as a
// PASS/FAIL line. Run via ctest or directly:
//   ./acceptance_test
#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "sakhr/cli.hpp"
#include "sakhr/corpus.hpp"
#include "sakhr/ensemble.hpp"
#include "sakhr/evaluation.hpp"
#include "sakhr/model_archive.hpp"
#include "sakhr/preprocess.hpp"
#include "sakhr/reporting.hpp"
#include "sakhr/unicode.hpp"

using namespace sakhr;
using sakhr::test::random_documents;
using sakhr::test::sparse;
using sakhr::test::TempDir;
using sakhr::test::xor_fixture;

namespace {

const std::string kSyntheticCorpus = std::string(SAKHR_DATA_DIR) + "/synthetic.csv";

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CriterionPrinter : public ::testing::EmptyTestEventListener {
  void OnTestEnd(const ::testing::TestInfo& info) override {
    std::printf("[ACCEPT] %s: %s\n", info.name(), info.result()->Passed() ? "PASS" : "FAIL");
    std::fflush(stdout);
  }
};

// Pipeline fixture shared by the voting / round-trip criteria.
struct PipelineFixture {
  Dataset dataset;
  Vocabulary vocabulary;
  std::vector<SparseVector> vectors;
};

PipelineFixture load_pipeline(std::size_t max_samples) {
  PipelineFixture fx;
  fx.dataset = load_dataset(kSyntheticCorpus);
  if (fx.dataset.samples.size() > max_samples) {
    fx.dataset.samples.resize(max_samples);
  }
  std::vector<TokenList> docs;
  for (const auto& s : fx.dataset.samples) docs.push_back(tokenize(clean(s.text)));
  auto [vocab, vectors] = fit_transform(docs);
  fx.vocabulary = std::move(vocab);
  fx.vectors = std::move(vectors);
  return fx;
}

}  // namespace

// ---------------------------------------------------------------------------

TEST(Acceptance, C01_TfidfMatchesDenseOracle) {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto docs = random_documents(rng, 10, 15, 12);
    bool any = false;
    for (const auto& d : docs) any |= !d.empty();
    if (!any) docs.push_back({"alpha"});

    // Independent dense recount.
    std::map<std::string, std::size_t> df;
    for (const auto& doc : docs) {
      std::set<std::string> seen(doc.begin(), doc.end());
      for (const auto& t : seen) df[t] += 1;
    }
    const auto n = static_cast<double>(docs.size());

    const auto [vocab, vectors] = fit_transform(docs);
    for (std::size_t d = 0; d < docs.size(); ++d) {
      std::map<std::string, std::size_t> tf;
      for (const auto& t : docs[d]) tf[t] += 1;
      for (std::size_t j = 0; j < vocab.size(); ++j) {
        const auto& token = vocab.tokens[j];
        const double expected =
            tf.count(token) == 0
                ? 0.0
                : static_cast<double>(tf.at(token)) *
                      std::log((n + 1.0) / (static_cast<double>(df.at(token)) + 1.0));
        ASSERT_NEAR(vectors[d].at(j), expected, 1e-12);
      }
    }
  }
  EXPECT_LT(seconds_since(start), 5.0);
}

TEST(Acceptance, C02_UbiquitousTokenWeighsExactlyZero) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto docs = random_documents(rng, 8, 10, 6);
    for (auto& doc : docs) doc.push_back("ubiquitous");
    const auto [vocab, vectors] = fit_transform(docs);
    const auto idx = vocab.token_to_index.at("ubiquitous");
    for (const auto& vec : vectors) {
      ASSERT_EQ(vec.at(idx), 0.0);
    }
  }
}

TEST(Acceptance, C03_MetricsMatchRecountOracleAndReportShape) {
  SplitMix64 rng(90);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng.next_below(200);
    std::vector<int> gold(n), pred(n);
    for (std::size_t i = 0; i < n; ++i) {
      gold[i] = static_cast<int>(rng.next_below(2));
      pred[i] = static_cast<int>(rng.next_below(2));
    }
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    for (std::size_t i = 0; i < n; ++i) {
      tp += gold[i] == 1 && pred[i] == 1;
      fp += gold[i] == 0 && pred[i] == 1;
      fn += gold[i] == 1 && pred[i] == 0;
      tn += gold[i] == 0 && pred[i] == 0;
    }
    const MetricsReport m = metrics(confusion(gold, pred));
    ASSERT_EQ(m.accuracy, static_cast<double>(tp + tn) / static_cast<double>(n));
    const double p = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
    const double r = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
    ASSERT_EQ(m.precision_sarcastic, p);
    ASSERT_EQ(m.recall_sarcastic, r);
  }

  for (double p = 0.0; p <= 1.0; p += 0.05) {
    for (double r = 0.0; r <= 1.0; r += 0.05) {
      const double expected = p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
      ASSERT_NEAR(f1_score(p, r), expected, 1e-12);
    }
  }

  // The evaluate report lists exactly the five measures.
  TempDir dir;
  const std::string gold_path = dir.file("gold.csv");
  const std::string pred_path = dir.file("pred.csv");
  write_file(gold_path, "text,sarcastic\nمرحبا,1\nاهلا,0\n");
  write_file(pred_path, "text,predicted\nمرحبا,1\nاهلا,1\n");
  const auto result = run_cli({"evaluate", "--pred", pred_path, "--gold", gold_path});
  ASSERT_EQ(result.code, 0);
  std::istringstream lines(result.out);
  std::string line;
  std::getline(lines, line);
  std::vector<std::string> measures;
  while (std::getline(lines, line)) {
    if (line.rfind("note:", 0) == 0) continue;
    measures.push_back(line.substr(0, line.find("  ")));
  }
  EXPECT_EQ(measures, (std::vector<std::string>{"F-1 sarcastic", "F-score", "Precision (P)",
                                                "Recall (R)", "Accuracy"}));
}

TEST(Acceptance, C04_XorDiscrimination) {
  const auto start = std::chrono::steady_clock::now();
  const auto fx = xor_fixture();

  auto accuracy = [&](const TrainedModel& model) {
    const auto pred = predict_all(model, fx.vectors);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) correct += pred[i] == fx.labels[i];
    return static_cast<double>(correct) / 4.0;
  };

  LearnerSpec linear{LearnerKind::svm_linear, {}, 3};
  EXPECT_LE(accuracy(fit(linear, fx.vectors, fx.labels, fx.n_features)), 0.75);

  LearnerSpec rbf{LearnerKind::svm_rbf, {}, 3};  // gamma = 2, C = 1 defaults
  EXPECT_DOUBLE_EQ(accuracy(fit(rbf, fx.vectors, fx.labels, fx.n_features)), 1.0);

  LearnerSpec mlp{LearnerKind::mlp, {}, 3};  // 20 logistic hidden units, Adam
  mlp.hp.mlp.max_epochs = 4000;
  mlp.hp.mlp.tol = 0.0;
  EXPECT_DOUBLE_EQ(accuracy(fit(mlp, fx.vectors, fx.labels, fx.n_features)), 1.0);

  EXPECT_LT(seconds_since(start), 10.0);
}

TEST(Acceptance, C05_MlpGradientsMatchFiniteDifferences) {
  SplitMix64 rng(404);
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  for (int i = 0; i < 5; ++i) {
    SparseVector x;
    for (std::size_t j = 0; j < 8; ++j) {
      if (rng.next_below(3) != 0) x.entries.push_back({j, rng.next_in(-1.5, 1.5)});
    }
    xs.push_back(x);
    ys.push_back(i % 2);
  }
  MlpParams params;
  params.input_size = 8;
  params.hidden_size = 20;
  params.theta.resize(params.parameter_count());
  for (auto& w : params.theta) w = rng.next_in(-0.5, 0.5);

  const auto grads = mlp_gradients(params, xs, ys);
  const double h = 1e-5;
  double max_rel = 0.0;
  for (std::size_t i = 0; i < params.theta.size(); ++i) {
    MlpParams plus = params;
    MlpParams minus = params;
    plus.theta[i] += h;
    minus.theta[i] -= h;
    const double fd = (mlp_loss(plus, xs, ys) - mlp_loss(minus, xs, ys)) / (2.0 * h);
    const double denom = std::max({std::abs(grads[i]), std::abs(fd), 1e-6});
    max_rel = std::max(max_rel, std::abs(grads[i] - fd) / denom);
  }
  EXPECT_LT(max_rel, 1e-4);
}

TEST(Acceptance, C06_SeparableCorpusEndToEnd) {
  const auto start = std::chrono::steady_clock::now();
  const auto result =
      run_cli({"cv", kSyntheticCorpus, "--classifier", "all", "--folds", "5", "--seed", "7"});
  ASSERT_EQ(result.code, 0) << result.err;

  std::istringstream lines(result.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_TRUE(std::regex_search(header, std::regex("Classifier\\s+Accuracy\\s+STD")));

  const std::vector<std::string> expected_names = {"SVM-Linear", "SVM-RBF", "MNB",
                                                   "SGD",        "MLP",     "RF",
                                                   "KNN",        "AdaBoost", "Voting"};
  const std::regex row_pattern(R"(^(\S+)\s+(\d+\.\d)%\s+(\d\.\d{3})$)");
  std::string line;
  std::size_t row_index = 0;
  while (std::getline(lines, line)) {
    std::smatch match;
    ASSERT_TRUE(std::regex_match(line, match, row_pattern)) << "bad row: " << line;
    ASSERT_LT(row_index, expected_names.size());
    EXPECT_EQ(match[1].str(), expected_names[row_index]);
    const double accuracy = std::stod(match[2].str()) / 100.0;
    EXPECT_GE(accuracy, 0.95) << expected_names[row_index];
    ++row_index;
  }
  EXPECT_EQ(row_index, expected_names.size());
  EXPECT_LT(seconds_since(start), 60.0);
}

TEST(Acceptance, C07_VotingEqualsBruteForceMajority) {
  const PipelineFixture fx = load_pipeline(120);
  const auto labels = fx.dataset.labels();

  LearnerHyperparams hp;
  hp.random_forest.n_trees = 51;
  hp.svm_rbf.epochs = 60;
  hp.mlp.max_epochs = 60;

  std::array<std::size_t, 2> class_counts{0, 0};
  for (int y : labels) ++class_counts[y];

  std::vector<TrainedModel> pool;
  for (LearnerKind kind : kAllLearnerKinds) {
    pool.push_back(fit(LearnerSpec{kind, hp, 5}, fx.vectors, labels, fx.vocabulary.size()));
  }

  SplitMix64 rng(606);
  for (int subset_trial = 0; subset_trial < 20; ++subset_trial) {
    std::vector<std::size_t> indices(pool.size());
    std::iota(indices.begin(), indices.end(), 0);
    rng.shuffle(indices);
    const std::size_t member_count = 2 + rng.next_below(pool.size() - 1);

    VotingModel voting;
    voting.n_features = fx.vocabulary.size();
    voting.training_class_counts = class_counts;
    for (std::size_t m = 0; m < member_count; ++m) voting.members.push_back(pool[indices[m]]);

    for (std::size_t i = 0; i < 50 && i < fx.vectors.size(); ++i) {
      std::vector<int> member_labels;
      for (const auto& member : voting.members) {
        member_labels.push_back(predict(member, fx.vectors[i]));
      }
      ASSERT_EQ(predict(voting, fx.vectors[i]),
                hard_vote(member_labels, voting.tie_break, voting.training_class_counts));
    }
  }

  // hard_vote permutation invariance, 1000 cases.
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<int> votes;
    const std::size_t n = 1 + rng.next_below(9);
    for (std::size_t i = 0; i < n; ++i) votes.push_back(static_cast<int>(rng.next_below(2)));
    const std::array<std::size_t, 2> prior{rng.next_below(30), rng.next_below(30)};
    const TieBreak tie =
        rng.next_below(2) ? TieBreak::majority_class_prior : TieBreak::fixed_zero;
    const int expected = hard_vote(votes, tie, prior);
    auto shuffled = votes;
    rng.shuffle(shuffled);
    ASSERT_EQ(hard_vote(shuffled, tie, prior), expected);
  }
}

TEST(Acceptance, C08_FoldPartitionStratificationAndNoLeakage) {
  SplitMix64 rng(808);
  for (std::size_t n = 10; n <= 50; ++n) {
    // Random balanced labels: half positive (rounded up), shuffled.
    std::vector<int> labels(n, 0);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) labels[i] = 1;
    rng.shuffle(labels);

    const std::size_t k = 5;
    const auto folds = kfold_split(n, k, labels, rng.next());

    std::set<std::size_t> seen;
    std::array<std::size_t, 2> totals{0, 0};
    for (int y : labels) ++totals[y];

    for (const auto& fold : folds) {
      for (std::size_t i : fold.test) ASSERT_TRUE(seen.insert(i).second);
      std::array<std::size_t, 2> counts{0, 0};
      for (std::size_t i : fold.test) ++counts[labels[i]];
      for (int c = 0; c < 2; ++c) {
        const double proportional =
            static_cast<double>(totals[c]) / static_cast<double>(k);
        ASSERT_LE(std::abs(static_cast<double>(counts[c]) - proportional), 1.0);
      }
    }
    ASSERT_EQ(seen.size(), n);

    // Leakage: documents carry one shared token plus a per-sample unique
    // token; fold vocabularies must never contain test-only tokens.
    std::vector<TokenList> docs;
    for (std::size_t i = 0; i < n; ++i) {
      docs.push_back({"مشترك", "وحيد" + std::to_string(i)});
    }
    for (const auto& fold : folds) {
      std::vector<TokenList> train_docs;
      for (std::size_t i : fold.train) train_docs.push_back(docs[i]);
      const Vocabulary vocab = fit_vocabulary(train_docs);
      for (std::size_t i : fold.test) {
        ASSERT_EQ(vocab.token_to_index.count("وحيد" + std::to_string(i)), 0u);
      }
    }
  }
}

TEST(Acceptance, C09_DeterminismAndRoundTrip) {
  // Byte-identical CV reports for the same seed.
  const std::vector<std::string> args = {"cv",      kSyntheticCorpus, "--classifier", "all",
                                         "--folds", "5",              "--seed",       "7"};
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  ASSERT_EQ(second.code, 0);
  EXPECT_EQ(first.out, second.out);

  // Save/load round trip preserves predictions on 100 fixture inputs.
  TempDir dir;
  const std::string model_path = dir.file("voting.json");
  const auto train_result = run_cli({"train", kSyntheticCorpus, "--classifier", "voting",
                                     "--model", model_path, "--seed", "7", "--quiet"});
  ASSERT_EQ(train_result.code, 0) << train_result.err;

  const ModelArchive loaded = load_model(model_path);
  const ModelArchive reloaded = [&] {
    const std::string copy_path = dir.file("copy.json");
    save_model(loaded, copy_path);
    return load_model(copy_path);
  }();

  const Dataset corpus = load_dataset(kSyntheticCorpus);
  for (std::size_t i = 0; i < 100; ++i) {
    ASSERT_EQ(predict_text(loaded, corpus.samples[i].text),
              predict_text(reloaded, corpus.samples[i].text));
  }
}

TEST(Acceptance, C10_PreprocessingConformance) {
  EXPECT_EQ(collapse_repeats("hhhhhhhh", 2), "hh");

  const PreprocessConfig config;
  SplitMix64 rng(1010);
  static const std::u32string pool =
      U"مرحباهيص "
      U"ًَُّٰـ"
      U"abzZ019 +-=$%#!؟،.❤\U0001f602\t\n\r";
  for (int trial = 0; trial < 500; ++trial) {
    std::u32string raw;
    const std::size_t len = rng.next_below(60);
    for (std::size_t i = 0; i < len; ++i) {
      const char32_t cp = pool[rng.next_below(pool.size())];
      raw.push_back(cp);
      if (rng.next_below(6) == 0) raw.append(rng.next_below(7), cp);
    }
    const std::string cleaned = clean(utf8_encode(raw), config);
    ASSERT_EQ(clean(cleaned, config), cleaned);
    for (char32_t cp : utf8_decode(cleaned)) {
      const bool ok = cp == U' ' || (cp >= U'0' && cp <= U'9') || config.is_arabic_letter(cp);
      ASSERT_TRUE(ok) << "unexpected codepoint " << static_cast<std::uint32_t>(cp);
    }
  }
}

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::UnitTest::GetInstance()->listeners().Append(new CriterionPrinter);
  return RUN_ALL_TESTS();
}
