#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "sakhr/corpus.hpp"
#include "sakhr/ensemble.hpp"
#include "sakhr/evaluation.hpp"
#include "sakhr/learners.hpp"
#include "sakhr/preprocess.hpp"
#include "sakhr/rng.hpp"
#include "sakhr/tfidf.hpp"

namespace {

using namespace sakhr;

const std::vector<std::string>& word_pool() {
  static const std::vector<std::string> pool = {
      "رائع",  "عظيم",  "ممتاز", "مبهر",  "تحفة",  "كفو",   "حزين", "تعبان",
      "مرهق",  "زحام",  "دوام",  "سيارة", "مدرسة", "قهوة",  "صباح", "مساء",
      "اليوم", "والله", "جدا",   "يا",    "في",    "من",    "على",  "هذا",
  };
  return pool;
}

// Noisy tweet text: class words plus elongations, Latin fillers and emoji.
std::string make_tweet(SplitMix64& rng, int label) {
  const auto& pool = word_pool();
  std::string text;
  const std::size_t words = 5 + rng.next_below(5);
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t base = label == 1 ? 0 : 6;
    const auto& word = pool[base + rng.next_below(6)];
    if (!text.empty()) text += " ";
    text += word;
    if (rng.next_below(6) == 0) text += "!!!";
  }
  if (rng.next_below(4) == 0) text += " lol \U0001f602";
  return text;
}

Dataset make_dataset(std::size_t n, std::uint64_t seed = 7) {
  SplitMix64 rng(seed);
  Dataset d;
  d.source = "synthetic";
  for (std::size_t i = 0; i < n; ++i) {
    const int label = static_cast<int>(i % 2);
    d.samples.push_back({make_tweet(rng, label), label, std::nullopt, std::nullopt});
  }
  return d;
}

struct VectorizedData {
  Vocabulary vocabulary;
  std::vector<SparseVector> vectors;
  std::vector<int> labels;
};

VectorizedData vectorize_dataset(const Dataset& d) {
  std::vector<TokenList> docs;
  for (const auto& s : d.samples) docs.push_back(tokenize(clean(s.text)));
  auto [vocab, vectors] = fit_transform(docs);
  return {std::move(vocab), std::move(vectors), d.labels()};
}

void BM_Clean(benchmark::State& state) {
  const Dataset d = make_dataset(static_cast<std::size_t>(state.range(0)));
  const PreprocessConfig config;
  for (auto _ : state) {
    for (const auto& s : d.samples) {
      benchmark::DoNotOptimize(clean(s.text, config));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Clean)->Arg(200)->Arg(1000);

void BM_FitTransform(benchmark::State& state) {
  const Dataset d = make_dataset(static_cast<std::size_t>(state.range(0)));
  std::vector<TokenList> docs;
  for (const auto& s : d.samples) docs.push_back(tokenize(clean(s.text)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_transform(docs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FitTransform)->Arg(200)->Arg(1000);

void BM_TransformOnly(benchmark::State& state) {
  const Dataset d = make_dataset(200);
  std::vector<TokenList> docs;
  for (const auto& s : d.samples) docs.push_back(tokenize(clean(s.text)));
  const auto [vocab, unused] = fit_transform(docs);
  for (auto _ : state) {
    for (const auto& doc : docs) {
      benchmark::DoNotOptimize(transform(doc, vocab));
    }
  }
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_TransformOnly);

template <LearnerKind Kind>
void BM_Fit(benchmark::State& state) {
  const VectorizedData data = vectorize_dataset(make_dataset(static_cast<std::size_t>(state.range(0))));
  LearnerSpec spec;
  spec.kind = Kind;
  spec.seed = 11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit(spec, data.vectors, data.labels, data.vocabulary.size()));
  }
}
BENCHMARK_TEMPLATE(BM_Fit, LearnerKind::mnb)->Arg(200);
BENCHMARK_TEMPLATE(BM_Fit, LearnerKind::svm_linear)->Arg(200);
BENCHMARK_TEMPLATE(BM_Fit, LearnerKind::sgd_hinge)->Arg(200);
BENCHMARK_TEMPLATE(BM_Fit, LearnerKind::svm_rbf)->Arg(200);
BENCHMARK_TEMPLATE(BM_Fit, LearnerKind::mlp)->Arg(200);
BENCHMARK_TEMPLATE(BM_Fit, LearnerKind::random_forest)->Arg(200);
BENCHMARK_TEMPLATE(BM_Fit, LearnerKind::knn)->Arg(200);
BENCHMARK_TEMPLATE(BM_Fit, LearnerKind::adaboost)->Arg(200);

void BM_PredictVoting(benchmark::State& state) {
  const VectorizedData data = vectorize_dataset(make_dataset(200));
  LearnerHyperparams hp;
  hp.random_forest.n_trees = 100;
  const auto model = fit_voting(default_voting_members(hp, 11), data.vectors, data.labels,
                                data.vocabulary.size());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(predict(model, data.vectors[i]));
    i = (i + 1) % data.vectors.size();
  }
}
BENCHMARK(BM_PredictVoting);

void BM_KfoldSplit(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i % 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kfold_split(n, 5, labels, 3));
  }
}
BENCHMARK(BM_KfoldSplit)->Arg(200)->Arg(2000);

void BM_CrossValidateMnb(benchmark::State& state) {
  const Dataset d = make_dataset(200);
  CvOptions options;
  options.seed = 3;
  LearnerSpec spec;
  spec.kind = LearnerKind::mnb;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_validate(spec, d, options));
  }
}
BENCHMARK(BM_CrossValidateMnb);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
