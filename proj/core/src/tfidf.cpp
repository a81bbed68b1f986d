#include "sakhr/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sakhr/errors.hpp"

namespace sakhr {

double SparseVector::dot(const SparseVector& other) const {
  double sum = 0.0;
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() && b != other.entries.end()) {
    if (a->index == b->index) {
      sum += a->weight * b->weight;
      ++a;
      ++b;
    } else if (a->index < b->index) {
      ++a;
    } else {
      ++b;
    }
  }
  return sum;
}

double SparseVector::squared_distance(const SparseVector& other) const {
  double sum = 0.0;
  auto a = entries.begin();
  auto b = other.entries.begin();
  while (a != entries.end() || b != other.entries.end()) {
    if (b == other.entries.end() || (a != entries.end() && a->index < b->index)) {
      sum += a->weight * a->weight;
      ++a;
    } else if (a == entries.end() || b->index < a->index) {
      sum += b->weight * b->weight;
      ++b;
    } else {
      const double d = a->weight - b->weight;
      sum += d * d;
      ++a;
      ++b;
    }
  }
  return sum;
}

double SparseVector::norm() const {
  double sum = 0.0;
  for (const auto& e : entries) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

double SparseVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != entries.end() && it->index == index) return it->weight;
  return 0.0;
}

std::size_t SparseVector::index_bound() const {
  return entries.empty() ? 0 : entries.back().index + 1;
}

double idf(std::size_t df, std::size_t n_documents) {
  return std::log(static_cast<double>(n_documents + 1) / static_cast<double>(df + 1));
}

Vocabulary fit_vocabulary(const std::vector<TokenList>& documents, const TfidfConfig& config) {
  if (documents.empty()) {
    throw Error(ErrorKind::fit, "vectorize: cannot fit a vocabulary on an empty corpus");
  }
  // std::map keeps tokens in lexicographic order, which fixes the indexing.
  std::map<std::string, std::size_t> df;
  for (const auto& doc : documents) {
    std::map<std::string, bool> seen;
    for (const auto& token : doc) {
      if (!seen.emplace(token, true).second) continue;
      ++df[token];
    }
  }
  if (df.empty()) {
    throw Error(ErrorKind::fit, "vectorize: corpus contains no tokens");
  }

  const auto n = documents.size();
  const auto max_df =
      static_cast<std::size_t>(config.max_df_ratio * static_cast<double>(n));
  Vocabulary vocab;
  vocab.n_documents = n;
  for (const auto& [token, count] : df) {
    if (count < config.min_df || count > max_df) continue;
    vocab.token_to_index.emplace(token, vocab.tokens.size());
    vocab.tokens.push_back(token);
    vocab.document_frequency.push_back(count);
  }
  if (vocab.tokens.empty()) {
    throw Error(ErrorKind::fit, "vectorize: df pruning removed every token");
  }
  return vocab;
}

SparseVector transform(const TokenList& document, const Vocabulary& vocab,
                       const TfidfConfig& config) {
  // Occurrence counts of the in-vocabulary tokens, keyed by index.
  std::map<std::size_t, std::size_t> tf;
  for (const auto& token : document) {
    auto it = vocab.token_to_index.find(token);
    if (it == vocab.token_to_index.end()) continue;
    ++tf[it->second];
  }

  SparseVector vec;
  vec.entries.reserve(tf.size());
  for (const auto& [index, count] : tf) {
    double idf_value = idf(vocab.document_frequency[index], vocab.n_documents);
    if (config.compat_mode) idf_value += 1.0;
    const double weight = static_cast<double>(count) * idf_value;
    if (weight != 0.0) vec.entries.push_back({index, weight});
  }

  if (config.compat_mode) {
    const double n = vec.norm();
    if (n > 0.0) {
      for (auto& e : vec.entries) e.weight /= n;
    }
  }
  return vec;
}

std::pair<Vocabulary, std::vector<SparseVector>> fit_transform(
    const std::vector<TokenList>& documents, const TfidfConfig& config) {
  Vocabulary vocab = fit_vocabulary(documents, config);
  std::vector<SparseVector> vectors;
  vectors.reserve(documents.size());
  for (const auto& doc : documents) {
    vectors.push_back(transform(doc, vocab, config));
  }
  return {std::move(vocab), std::move(vectors)};
}

}  // namespace sakhr
