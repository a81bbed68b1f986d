#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sakhr {

struct SparseEntry {
  std::size_t index;
  double weight;

  bool operator==(const SparseEntry&) const = default;
};

// Sorted (index, weight) pairs; indices strictly increasing, exact zeros are
// never stored.
struct SparseVector {
  std::vector<SparseEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }

  double dot(const SparseVector& other) const;
  double squared_distance(const SparseVector& other) const;
  double norm() const;

  // Value at an index (0 when absent); binary search over entries.
  double at(std::size_t index) const;
  // Largest stored index + 1, or 0 for an empty vector.
  std::size_t index_bound() const;

  bool operator==(const SparseVector&) const = default;
};

struct TfidfConfig {
  // When set, uses the smoothed-plus-one idf (idf + 1) and L2-normalizes
  // each vector. Off by default: the plain tf * ln((N+1)/(df+1)) weighting
  // is the default behavior.
  bool compat_mode = false;
  // Vocabulary pruning knobs; the defaults keep every token.
  std::size_t min_df = 1;
  double max_df_ratio = 1.0;
};

// Token <-> index map over the training corpus. Indices are contiguous and
// assigned in lexicographic token order, so fitting is deterministic.
struct Vocabulary {
  std::vector<std::string> tokens;                  // index -> token
  std::vector<std::size_t> document_frequency;      // index -> df
  std::size_t n_documents = 0;
  std::unordered_map<std::string, std::size_t> token_to_index;

  std::size_t size() const { return tokens.size(); }
};

using TokenList = std::vector<std::string>;

// ln((N+1)/(df+1)); natural logarithm. Total over 0 <= df <= N.
double idf(std::size_t df, std::size_t n_documents);

// df is document-level: a token counts once per document it occurs in.
// Throws a fit error when no document contributes a single token.
Vocabulary fit_vocabulary(const std::vector<TokenList>& documents, const TfidfConfig& config = {});

// weight(token) = tf * idf(df, N) for in-vocabulary tokens; out-of-vocabulary
// tokens are dropped. Exact-zero weights (df == N) are not stored.
SparseVector transform(const TokenList& document, const Vocabulary& vocab,
                       const TfidfConfig& config = {});

std::pair<Vocabulary, std::vector<SparseVector>> fit_transform(
    const std::vector<TokenList>& documents, const TfidfConfig& config = {});

}  // namespace sakhr
