#pragma once

#include <atomic>
#include <filesystem>
#include <string>
#include <vector>

#include "sakhr/csv.hpp"
#include "sakhr/rng.hpp"
#include "sakhr/tfidf.hpp"

namespace sakhr::test {

// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("sakhr_test_" + std::to_string(counter.fetch_add(1)) + "_" +
             std::to_string(reinterpret_cast<std::uintptr_t>(this) & 0xffff));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

inline SparseVector sparse(std::initializer_list<SparseEntry> entries) {
  SparseVector v;
  v.entries = entries;
  return v;
}

// Two linearly separable clusters in 2 features: class 1 near (3, 0), class 0
// near (0, 3); n samples alternating labels.
struct SeparableFixture {
  std::vector<SparseVector> vectors;
  std::vector<int> labels;
  std::size_t n_features = 2;
};

inline SeparableFixture separable_clusters(std::size_t n, std::uint64_t seed = 11) {
  SeparableFixture fx;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = static_cast<int>(i % 2);
    const double major = 3.0 + rng.next_in(-0.5, 0.5);
    const double minor = rng.next_in(0.0, 0.4);
    if (label == 1) {
      fx.vectors.push_back(sparse({{0, major}, {1, minor}}));
    } else {
      fx.vectors.push_back(sparse({{0, minor}, {1, major}}));
    }
    fx.labels.push_back(label);
  }
  return fx;
}

// The 4-point XOR fixture over 2 binary features.
struct XorFixture {
  std::vector<SparseVector> vectors;
  std::vector<int> labels;
  std::size_t n_features = 2;
};

inline XorFixture xor_fixture() {
  XorFixture fx;
  fx.vectors = {sparse({}), sparse({{0, 1.0}}), sparse({{1, 1.0}}), sparse({{0, 1.0}, {1, 1.0}})};
  fx.labels = {0, 1, 1, 0};
  return fx;
}

// Random token documents over a small pool; used by vectorizer oracles and
// leakage checks.
inline std::vector<TokenList> random_documents(SplitMix64& rng, std::size_t max_docs,
                                               std::size_t pool_size, std::size_t max_len) {
  static const char* kPool[] = {"alpha", "beta",  "gamma", "delta", "epsilon",
                                "zeta",  "eta",   "theta", "iota",  "kappa",
                                "lam",   "mu",    "nu",    "xi",    "omicron"};
  const std::size_t pool = std::min<std::size_t>(pool_size, std::size(kPool));
  const std::size_t n_docs = 1 + rng.next_below(max_docs);
  std::vector<TokenList> docs(n_docs);
  for (auto& doc : docs) {
    const std::size_t len = rng.next_below(max_len + 1);
    for (std::size_t t = 0; t < len; ++t) {
      doc.push_back(kPool[rng.next_below(pool)]);
    }
  }
  return docs;
}

}  // namespace sakhr::test
