#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "helpers.hpp"
#include "sakhr/errors.hpp"
#include "sakhr/tfidf.hpp"

using namespace sakhr;
using sakhr::test::random_documents;

namespace {

// Independent dense oracle: recounts df and tf with its own bookkeeping and
// evaluates tf * ln((N+1)/(df+1)) for every (document, token) cell.
struct DenseOracle {
  std::vector<std::string> tokens;               // sorted
  std::map<std::string, std::size_t> df;
  std::size_t n_docs = 0;
  std::vector<std::map<std::string, double>> weights;  // per document
};

DenseOracle dense_tfidf(const std::vector<TokenList>& docs) {
  DenseOracle oracle;
  oracle.n_docs = docs.size();
  for (const auto& doc : docs) {
    std::set<std::string> seen(doc.begin(), doc.end());
    for (const auto& token : seen) oracle.df[token] += 1;
  }
  for (const auto& [token, unused] : oracle.df) oracle.tokens.push_back(token);
  for (const auto& doc : docs) {
    std::map<std::string, std::size_t> tf;
    for (const auto& token : doc) tf[token] += 1;
    std::map<std::string, double> row;
    for (const auto& [token, count] : tf) {
      row[token] = static_cast<double>(count) *
                   std::log(static_cast<double>(oracle.n_docs + 1) /
                            static_cast<double>(oracle.df.at(token) + 1));
    }
    oracle.weights.push_back(std::move(row));
  }
  return oracle;
}

}  // namespace

TEST(FitVocabulary, CountsDocumentFrequencies) {
  const std::vector<TokenList> docs = {{"a", "b"}, {"b", "c"}};
  const Vocabulary vocab = fit_vocabulary(docs);
  ASSERT_EQ(vocab.size(), 3u);
  EXPECT_EQ(vocab.n_documents, 2u);
  EXPECT_EQ(vocab.tokens, (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(vocab.document_frequency, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(vocab.token_to_index.at("b"), 1u);
}

TEST(FitVocabulary, RepeatsInsideOneDocumentCountOnce) {
  const Vocabulary vocab = fit_vocabulary({{"a", "a", "a"}});
  ASSERT_EQ(vocab.size(), 1u);
  EXPECT_EQ(vocab.document_frequency[0], 1u);
  EXPECT_EQ(vocab.n_documents, 1u);
}

TEST(FitVocabulary, IdenticalDocumentsAccumulateDf) {
  const Vocabulary vocab = fit_vocabulary({{"a"}, {"a"}});
  EXPECT_EQ(vocab.document_frequency[0], 2u);
}

TEST(FitVocabulary, AllEmptyCorpusIsFitError) {
  try {
    fit_vocabulary({{}, {}});
    FAIL() << "expected fit error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::fit);
  }
  EXPECT_THROW(fit_vocabulary({}), Error);
}

TEST(FitVocabulary, PruningKnobs) {
  TfidfConfig config;
  config.min_df = 2;
  const Vocabulary vocab = fit_vocabulary({{"a", "b"}, {"b", "c"}}, config);
  EXPECT_EQ(vocab.tokens, (std::vector<std::string>{"b"}));

  TfidfConfig all_pruned;
  all_pruned.min_df = 5;
  EXPECT_THROW(fit_vocabulary({{"a"}, {"b"}}, all_pruned), Error);
}

TEST(Idf, TokenInEveryDocumentScoresExactlyZero) {
  EXPECT_EQ(idf(7, 7), 0.0);
  EXPECT_EQ(idf(1, 1), 0.0);
}

TEST(Idf, ClosedFormValues) {
  EXPECT_DOUBLE_EQ(idf(1, 3), std::log(2.0));
  EXPECT_DOUBLE_EQ(idf(0, 9), std::log(10.0));
}

TEST(Idf, StrictlyDecreasingInDf) {
  const std::size_t n = 50;
  for (std::size_t df = 0; df + 1 <= n; ++df) {
    EXPECT_GT(idf(df, n), idf(df + 1, n));
  }
}

TEST(Transform, HandComputedWeight) {
  const Vocabulary vocab = fit_vocabulary({{"a", "b"}, {"b", "c"}});
  const SparseVector vec = transform({"a", "a"}, vocab);
  ASSERT_EQ(vec.nnz(), 1u);
  EXPECT_EQ(vec.entries[0].index, vocab.token_to_index.at("a"));
  EXPECT_DOUBLE_EQ(vec.entries[0].weight, 2.0 * std::log(3.0 / 2.0));
}

TEST(Transform, OutOfVocabularyTokensDropped) {
  const Vocabulary vocab = fit_vocabulary({{"a", "b"}, {"b", "c"}});
  EXPECT_TRUE(transform({"zzz", "qqq"}, vocab).empty());
}

TEST(Transform, DfEqualsNWeightDropped) {
  const Vocabulary vocab = fit_vocabulary({{"a", "b"}, {"b", "c"}});
  EXPECT_TRUE(transform({"b"}, vocab).empty());
}

TEST(Transform, EntriesSortedAndSparse) {
  const Vocabulary vocab = fit_vocabulary({{"a", "b", "c", "d"}, {"a"}});
  const SparseVector vec = transform({"d", "b", "c", "b"}, vocab);
  for (std::size_t i = 1; i < vec.entries.size(); ++i) {
    EXPECT_LT(vec.entries[i - 1].index, vec.entries[i].index);
  }
  EXPECT_LE(vec.nnz(), 3u);
}

TEST(FitTransform, MatchesPerDocumentTransform) {
  const std::vector<TokenList> docs = {{"a", "b"}, {"b", "c"}};
  const auto [vocab, vectors] = fit_transform(docs);
  ASSERT_EQ(vectors.size(), 2u);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    EXPECT_EQ(vectors[i], transform(docs[i], vocab));
  }
}

TEST(FitTransform, SingleDocumentCorpusIsAllZeros) {
  const auto [vocab, vectors] = fit_transform({{"a", "b", "a"}});
  ASSERT_EQ(vectors.size(), 1u);
  EXPECT_TRUE(vectors[0].empty());  // N=1, df=1 -> ln(2/2) = 0
  EXPECT_EQ(vocab.size(), 2u);
}

TEST(FitTransform, Deterministic) {
  SplitMix64 rng(5);
  const auto docs = random_documents(rng, 10, 15, 12);
  const auto run1 = fit_transform(docs);
  const auto run2 = fit_transform(docs);
  EXPECT_EQ(run1.first.tokens, run2.first.tokens);
  EXPECT_EQ(run1.first.document_frequency, run2.first.document_frequency);
  EXPECT_EQ(run1.second, run2.second);
}

TEST(Transform, MatchesDenseOracleOnRandomCorpora) {
  SplitMix64 rng(123);
  for (int trial = 0; trial < 200; ++trial) {
    auto docs = random_documents(rng, 10, 15, 12);
    bool any_token = false;
    for (const auto& d : docs) any_token |= !d.empty();
    if (!any_token) docs.push_back({"alpha"});

    const auto [vocab, vectors] = fit_transform(docs);
    const DenseOracle oracle = dense_tfidf(docs);

    ASSERT_EQ(vocab.tokens, oracle.tokens);
    for (std::size_t d = 0; d < docs.size(); ++d) {
      for (std::size_t j = 0; j < vocab.size(); ++j) {
        const auto it = oracle.weights[d].find(vocab.tokens[j]);
        const double expected = it == oracle.weights[d].end() ? 0.0 : it->second;
        EXPECT_NEAR(vectors[d].at(j), expected, 1e-12);
      }
    }
  }
}

TEST(Transform, ZeroLawForUbiquitousToken) {
  std::vector<TokenList> docs;
  for (int d = 0; d < 6; ++d) {
    TokenList doc = {"everywhere"};
    if (d % 2 == 0) doc.push_back("sometimes");
    docs.push_back(doc);
  }
  const auto [vocab, vectors] = fit_transform(docs);
  const std::size_t idx = vocab.token_to_index.at("everywhere");
  for (const auto& vec : vectors) {
    EXPECT_EQ(vec.at(idx), 0.0);
    for (const auto& e : vec.entries) EXPECT_NE(e.weight, 0.0);
  }
}

TEST(Transform, CompatModeNormalizesAndKeepsUbiquitousTokens) {
  TfidfConfig config;
  config.compat_mode = true;
  const std::vector<TokenList> docs = {{"a", "b"}, {"a", "c"}};
  const auto [vocab, vectors] = fit_transform(docs, config);
  const std::size_t idx_a = vocab.token_to_index.at("a");
  for (const auto& vec : vectors) {
    EXPECT_GT(vec.at(idx_a), 0.0);  // idf+1 keeps df==N tokens
    EXPECT_NEAR(vec.norm(), 1.0, 1e-12);
  }
}

TEST(SparseVector, DotAndDistance) {
  const auto x = sakhr::test::sparse({{0, 1.0}, {2, 2.0}});
  const auto z = sakhr::test::sparse({{1, 3.0}, {2, 1.0}});
  EXPECT_DOUBLE_EQ(x.dot(z), 2.0);
  EXPECT_DOUBLE_EQ(x.squared_distance(z), 1.0 + 9.0 + 1.0);
  EXPECT_DOUBLE_EQ(x.at(2), 2.0);
  EXPECT_DOUBLE_EQ(x.at(1), 0.0);
  EXPECT_EQ(x.index_bound(), 3u);
  EXPECT_EQ(SparseVector{}.index_bound(), 0u);
}
