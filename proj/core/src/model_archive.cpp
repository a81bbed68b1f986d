#include "sakhr/model_archive.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include <nlohmann/json.hpp>

#include "sakhr/errors.hpp"

namespace sakhr {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Serialization with a fixed decimal float format. nlohmann always dumps the
// shortest round-trip representation, so the writer below walks the document
// itself and prints every float with 17 significant digits.

void dump_value(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      out.push_back('{');
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        out += Json(it.key()).dump();
        out.push_back(':');
        dump_value(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    case Json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& item : value) {
        if (!first) out.push_back(',');
        first = false;
        dump_value(item, out);
      }
      out.push_back(']');
      break;
    }
    case Json::value_t::number_float: {
      const double d = value.get<double>();
      if (!std::isfinite(d)) {
        throw Error(ErrorKind::format, "archive: non-finite number cannot be serialized");
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", d);
      out += buf;
      break;
    }
    default:
      out += value.dump();
      break;
  }
}

Json ranges_to_json(const std::vector<CodepointRange>& ranges) {
  Json arr = Json::array();
  for (const auto& r : ranges) {
    arr.push_back({static_cast<std::uint32_t>(r.lo), static_cast<std::uint32_t>(r.hi)});
  }
  return arr;
}

std::vector<CodepointRange> ranges_from_json(const Json& arr) {
  std::vector<CodepointRange> out;
  for (const auto& item : arr) {
    out.push_back({static_cast<char32_t>(item.at(0).get<std::uint32_t>()),
                   static_cast<char32_t>(item.at(1).get<std::uint32_t>())});
  }
  return out;
}

Json preprocess_to_json(const PreprocessConfig& config) {
  Json j;
  j["collapse_repeats_to"] = config.collapse_repeats_to;
  j["strip_tatweel"] = config.strip_tatweel;
  j["arabic_letter_ranges"] = ranges_to_json(config.arabic_letter_ranges);
  Json diacritics = Json::array();
  for (char32_t cp : config.diacritic_codepoints) {
    diacritics.push_back(static_cast<std::uint32_t>(cp));
  }
  j["diacritic_codepoints"] = std::move(diacritics);
  return j;
}

PreprocessConfig preprocess_from_json(const Json& j) {
  PreprocessConfig config;
  config.collapse_repeats_to = j.at("collapse_repeats_to").get<int>();
  config.strip_tatweel = j.at("strip_tatweel").get<bool>();
  config.arabic_letter_ranges = ranges_from_json(j.at("arabic_letter_ranges"));
  config.diacritic_codepoints.clear();
  for (const auto& cp : j.at("diacritic_codepoints")) {
    config.diacritic_codepoints.push_back(static_cast<char32_t>(cp.get<std::uint32_t>()));
  }
  return config;
}

Json tfidf_to_json(const TfidfConfig& config) {
  Json j;
  j["compat_mode"] = config.compat_mode;
  j["min_df"] = config.min_df;
  j["max_df_ratio"] = config.max_df_ratio;
  return j;
}

TfidfConfig tfidf_from_json(const Json& j) {
  TfidfConfig config;
  config.compat_mode = j.at("compat_mode").get<bool>();
  config.min_df = j.at("min_df").get<std::size_t>();
  config.max_df_ratio = j.at("max_df_ratio").get<double>();
  return config;
}

Json vocabulary_to_json(const Vocabulary& vocab) {
  Json j;
  j["tokens"] = vocab.tokens;
  j["document_frequency"] = vocab.document_frequency;
  j["n_documents"] = vocab.n_documents;
  return j;
}

Vocabulary vocabulary_from_json(const Json& j) {
  Vocabulary vocab;
  vocab.tokens = j.at("tokens").get<std::vector<std::string>>();
  vocab.document_frequency = j.at("document_frequency").get<std::vector<std::size_t>>();
  vocab.n_documents = j.at("n_documents").get<std::size_t>();
  if (vocab.tokens.size() != vocab.document_frequency.size()) {
    throw Error(ErrorKind::format, "archive: vocabulary token/df length mismatch");
  }
  for (std::size_t i = 0; i < vocab.tokens.size(); ++i) {
    vocab.token_to_index.emplace(vocab.tokens[i], i);
  }
  return vocab;
}

Json sparse_to_json(const SparseVector& vec) {
  Json indices = Json::array();
  Json weights = Json::array();
  for (const auto& e : vec.entries) {
    indices.push_back(e.index);
    weights.push_back(e.weight);
  }
  Json j;
  j["indices"] = std::move(indices);
  j["weights"] = std::move(weights);
  return j;
}

SparseVector sparse_from_json(const Json& j) {
  const auto indices = j.at("indices").get<std::vector<std::size_t>>();
  const auto weights = j.at("weights").get<std::vector<double>>();
  if (indices.size() != weights.size()) {
    throw Error(ErrorKind::format, "archive: sparse vector index/weight length mismatch");
  }
  SparseVector vec;
  vec.entries.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    vec.entries.push_back({indices[i], weights[i]});
  }
  return vec;
}

// ---------------------------------------------------------------------------
// Hyperparameter blocks.

Json hyperparams_to_json(const LearnerHyperparams& hp) {
  Json j;
  j["svm_linear"] = {{"c", hp.svm_linear.c},
                     {"max_iter", hp.svm_linear.max_iter},
                     {"tol", hp.svm_linear.tol}};
  j["svm_rbf"] = {{"gamma", hp.svm_rbf.gamma}, {"c", hp.svm_rbf.c}, {"epochs", hp.svm_rbf.epochs}};
  j["mnb"] = {{"alpha", hp.mnb.alpha}};
  j["sgd_hinge"] = {{"c", hp.sgd_hinge.c},
                    {"max_iter", hp.sgd_hinge.max_iter},
                    {"t0", hp.sgd_hinge.t0}};
  j["mlp"] = {{"hidden_size", hp.mlp.hidden_size},
              {"learning_rate", hp.mlp.learning_rate},
              {"beta1", hp.mlp.beta1},
              {"beta2", hp.mlp.beta2},
              {"epsilon", hp.mlp.epsilon},
              {"max_epochs", hp.mlp.max_epochs},
              {"batch_size", hp.mlp.batch_size},
              {"tol", hp.mlp.tol},
              {"patience", hp.mlp.patience}};
  j["random_forest"] = {{"n_trees", hp.random_forest.n_trees},
                        {"bootstrap", hp.random_forest.bootstrap}};
  j["knn"] = {{"k", hp.knn.k}};
  j["adaboost"] = {{"n_rounds", hp.adaboost.n_rounds}};
  return j;
}

LearnerHyperparams hyperparams_from_json(const Json& j) {
  LearnerHyperparams hp;
  const auto& lin = j.at("svm_linear");
  hp.svm_linear.c = lin.at("c").get<double>();
  hp.svm_linear.max_iter = lin.at("max_iter").get<int>();
  hp.svm_linear.tol = lin.at("tol").get<double>();
  const auto& rbf = j.at("svm_rbf");
  hp.svm_rbf.gamma = rbf.at("gamma").get<double>();
  hp.svm_rbf.c = rbf.at("c").get<double>();
  hp.svm_rbf.epochs = rbf.at("epochs").get<int>();
  hp.mnb.alpha = j.at("mnb").at("alpha").get<double>();
  const auto& sgd = j.at("sgd_hinge");
  hp.sgd_hinge.c = sgd.at("c").get<double>();
  hp.sgd_hinge.max_iter = sgd.at("max_iter").get<int>();
  hp.sgd_hinge.t0 = sgd.at("t0").get<std::int64_t>();
  const auto& mlp = j.at("mlp");
  hp.mlp.hidden_size = mlp.at("hidden_size").get<int>();
  hp.mlp.learning_rate = mlp.at("learning_rate").get<double>();
  hp.mlp.beta1 = mlp.at("beta1").get<double>();
  hp.mlp.beta2 = mlp.at("beta2").get<double>();
  hp.mlp.epsilon = mlp.at("epsilon").get<double>();
  hp.mlp.max_epochs = mlp.at("max_epochs").get<int>();
  hp.mlp.batch_size = mlp.at("batch_size").get<int>();
  hp.mlp.tol = mlp.at("tol").get<double>();
  hp.mlp.patience = mlp.at("patience").get<int>();
  const auto& rf = j.at("random_forest");
  hp.random_forest.n_trees = rf.at("n_trees").get<int>();
  hp.random_forest.bootstrap = rf.at("bootstrap").get<bool>();
  hp.knn.k = j.at("knn").at("k").get<int>();
  hp.adaboost.n_rounds = j.at("adaboost").at("n_rounds").get<int>();
  return hp;
}

// ---------------------------------------------------------------------------
// Learner parameter blocks, one named schema per kind.

Json params_to_json(const LearnerParams& params) {
  return std::visit(
      [](const auto& p) -> Json {
        using P = std::decay_t<decltype(p)>;
        Json j;
        if constexpr (std::is_same_v<P, LinearModelParams>) {
          j["weights"] = p.weights;
          j["bias"] = p.bias;
        } else if constexpr (std::is_same_v<P, RbfSvmParams>) {
          j["gamma"] = p.gamma;
          j["support_coefficients"] = p.support_coefficients;
          Json svs = Json::array();
          for (const auto& sv : p.support_vectors) svs.push_back(sparse_to_json(sv));
          j["support_vectors"] = std::move(svs);
          j["bias"] = p.bias;
        } else if constexpr (std::is_same_v<P, NbParams>) {
          j["class_log_prior"] = p.class_log_prior;
          j["feature_log_likelihood"] = {p.feature_log_likelihood[0],
                                         p.feature_log_likelihood[1]};
          j["alpha"] = p.alpha;
        } else if constexpr (std::is_same_v<P, MlpParams>) {
          j["input_size"] = p.input_size;
          j["hidden_size"] = p.hidden_size;
          const auto w1 = p.w1();
          const auto b1 = p.b1();
          const auto w2 = p.w2();
          j["w1"] = std::vector<double>(w1.begin(), w1.end());
          j["b1"] = std::vector<double>(b1.begin(), b1.end());
          j["w2"] = std::vector<double>(w2.begin(), w2.end());
          j["b2"] = p.b2();
          j["adam_state"] = {{"m", p.adam_state.m}, {"v", p.adam_state.v}, {"t", p.adam_state.t}};
        } else if constexpr (std::is_same_v<P, ForestParams>) {
          Json trees = Json::array();
          for (const auto& tree : p.trees) {
            Json nodes = Json::array();
            for (const auto& node : tree.nodes) {
              nodes.push_back({{"feature", node.feature},
                               {"threshold", node.threshold},
                               {"left", node.left},
                               {"right", node.right},
                               {"label", node.label}});
            }
            trees.push_back(std::move(nodes));
          }
          j["trees"] = std::move(trees);
        } else if constexpr (std::is_same_v<P, KnnParams>) {
          j["k"] = p.k;
          Json vecs = Json::array();
          for (const auto& v : p.training_vectors) vecs.push_back(sparse_to_json(v));
          j["training_vectors"] = std::move(vecs);
          j["training_labels"] = p.training_labels;
        } else {
          static_assert(std::is_same_v<P, AdaboostParams>);
          Json stumps = Json::array();
          for (const auto& s : p.stumps) {
            stumps.push_back(
                {{"feature", s.feature}, {"threshold", s.threshold}, {"polarity", s.polarity}});
          }
          j["stumps"] = std::move(stumps);
          j["stump_weights"] = p.stump_weights;
        }
        return j;
      },
      params);
}

LearnerParams params_from_json(LearnerKind kind, const Json& j) {
  switch (kind) {
    case LearnerKind::svm_linear:
    case LearnerKind::sgd_hinge: {
      LinearModelParams p;
      p.weights = j.at("weights").get<std::vector<double>>();
      p.bias = j.at("bias").get<double>();
      return p;
    }
    case LearnerKind::svm_rbf: {
      RbfSvmParams p;
      p.gamma = j.at("gamma").get<double>();
      p.support_coefficients = j.at("support_coefficients").get<std::vector<double>>();
      for (const auto& sv : j.at("support_vectors")) {
        p.support_vectors.push_back(sparse_from_json(sv));
      }
      p.bias = j.at("bias").get<double>();
      if (p.support_coefficients.size() != p.support_vectors.size()) {
        throw Error(ErrorKind::format, "archive: support coefficient/vector count mismatch");
      }
      return p;
    }
    case LearnerKind::mnb: {
      NbParams p;
      const auto prior = j.at("class_log_prior").get<std::vector<double>>();
      if (prior.size() != 2) {
        throw Error(ErrorKind::format, "archive: class_log_prior must have 2 entries");
      }
      p.class_log_prior = {prior[0], prior[1]};
      p.feature_log_likelihood[0] = j.at("feature_log_likelihood").at(0).get<std::vector<double>>();
      p.feature_log_likelihood[1] = j.at("feature_log_likelihood").at(1).get<std::vector<double>>();
      p.alpha = j.at("alpha").get<double>();
      return p;
    }
    case LearnerKind::mlp: {
      MlpParams p;
      p.input_size = j.at("input_size").get<std::size_t>();
      p.hidden_size = j.at("hidden_size").get<std::size_t>();
      const auto w1 = j.at("w1").get<std::vector<double>>();
      const auto b1 = j.at("b1").get<std::vector<double>>();
      const auto w2 = j.at("w2").get<std::vector<double>>();
      if (w1.size() != p.input_size * p.hidden_size || b1.size() != p.hidden_size ||
          w2.size() != p.hidden_size) {
        throw Error(ErrorKind::format, "archive: mlp parameter shapes do not match sizes");
      }
      p.theta.reserve(p.parameter_count());
      p.theta.insert(p.theta.end(), w1.begin(), w1.end());
      p.theta.insert(p.theta.end(), b1.begin(), b1.end());
      p.theta.insert(p.theta.end(), w2.begin(), w2.end());
      p.theta.push_back(j.at("b2").get<double>());
      const auto& adam = j.at("adam_state");
      p.adam_state.m = adam.at("m").get<std::vector<double>>();
      p.adam_state.v = adam.at("v").get<std::vector<double>>();
      p.adam_state.t = adam.at("t").get<std::int64_t>();
      return p;
    }
    case LearnerKind::random_forest: {
      ForestParams p;
      for (const auto& tree_json : j.at("trees")) {
        DecisionTree tree;
        for (const auto& node_json : tree_json) {
          TreeNode node;
          node.feature = node_json.at("feature").get<int>();
          node.threshold = node_json.at("threshold").get<double>();
          node.left = node_json.at("left").get<int>();
          node.right = node_json.at("right").get<int>();
          node.label = node_json.at("label").get<int>();
          tree.nodes.push_back(node);
        }
        p.trees.push_back(std::move(tree));
      }
      return p;
    }
    case LearnerKind::knn: {
      KnnParams p;
      p.k = j.at("k").get<int>();
      for (const auto& v : j.at("training_vectors")) {
        p.training_vectors.push_back(sparse_from_json(v));
      }
      p.training_labels = j.at("training_labels").get<std::vector<int>>();
      return p;
    }
    case LearnerKind::adaboost: {
      AdaboostParams p;
      for (const auto& s : j.at("stumps")) {
        p.stumps.push_back(Stump{s.at("feature").get<std::size_t>(),
                                 s.at("threshold").get<double>(),
                                 s.at("polarity").get<int>()});
      }
      p.stump_weights = j.at("stump_weights").get<std::vector<double>>();
      if (p.stumps.size() != p.stump_weights.size()) {
        throw Error(ErrorKind::format, "archive: stump/weight count mismatch");
      }
      return p;
    }
  }
  throw Error(ErrorKind::format, "archive: unknown learner kind");
}

Json trained_model_to_json(const TrainedModel& model) {
  Json j;
  j["kind"] = std::string(learner_id(model.kind));
  j["n_features"] = model.n_features;
  j["seed"] = model.seed;
  j["params"] = params_to_json(model.params);
  return j;
}

TrainedModel trained_model_from_json(const Json& j, const LearnerHyperparams& hp) {
  TrainedModel model;
  model.kind = learner_kind_from_id(j.at("kind").get<std::string>());
  model.n_features = j.at("n_features").get<std::size_t>();
  model.seed = j.at("seed").get<std::uint64_t>();
  model.hp = hp;
  model.params = params_from_json(model.kind, j.at("params"));
  return model;
}

}  // namespace

std::string archive_to_json(const ModelArchive& archive) {
  Json doc;
  doc["magic"] = std::string(kArchiveMagic);
  doc["format_version"] = kArchiveFormatVersion;
  doc["preprocess_config"] = preprocess_to_json(archive.preprocess);
  doc["tfidf_config"] = tfidf_to_json(archive.tfidf);
  doc["vocabulary"] = vocabulary_to_json(archive.vocabulary);

  const LearnerHyperparams* hp = nullptr;
  if (const auto* single = std::get_if<TrainedModel>(&archive.model)) {
    doc["learner_kind"] = std::string(learner_id(single->kind));
    doc["learner_params"] = trained_model_to_json(*single);
    hp = &single->hp;
  } else {
    const auto& voting = std::get<VotingModel>(archive.model);
    doc["learner_kind"] = "voting";
    Json j;
    j["tie_break"] = voting.tie_break == TieBreak::fixed_zero ? "fixed_zero"
                                                              : "majority_class_prior";
    j["training_class_counts"] = voting.training_class_counts;
    j["n_features"] = voting.n_features;
    Json members = Json::array();
    for (const auto& member : voting.members) members.push_back(trained_model_to_json(member));
    j["members"] = std::move(members);
    doc["learner_params"] = std::move(j);
    if (!voting.members.empty()) hp = &voting.members.front().hp;
  }

  Json meta;
  meta["seed"] = archive.meta.seed;
  meta["hyperparameters"] = hp ? hyperparams_to_json(*hp) : Json::object();
  meta["dataset_fingerprint"] = archive.meta.dataset_fingerprint;
  meta["dataset_source"] = archive.meta.dataset_source;
  doc["training_meta"] = std::move(meta);

  std::string out;
  dump_value(doc, out);
  out.push_back('\n');
  return out;
}

ModelArchive archive_from_json(std::string_view text, std::string_view source_name) {
  const std::string src(source_name);
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw Error(ErrorKind::format, src + ": not a sakhr model archive (invalid JSON)");
  }
  if (!doc.contains("magic") || !doc["magic"].is_string() ||
      doc["magic"].get<std::string>() != kArchiveMagic) {
    throw Error(ErrorKind::format, src + ": missing or wrong magic header");
  }
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer()) {
    throw Error(ErrorKind::format, src + ": missing format_version");
  }
  const int version = doc["format_version"].get<int>();
  if (version != kArchiveFormatVersion) {
    throw Error(ErrorKind::version, src + ": format_version " + std::to_string(version) +
                                        " is not supported (this build reads version " +
                                        std::to_string(kArchiveFormatVersion) + ")");
  }

  try {
    ModelArchive archive;
    archive.preprocess = preprocess_from_json(doc.at("preprocess_config"));
    archive.tfidf = tfidf_from_json(doc.at("tfidf_config"));
    archive.vocabulary = vocabulary_from_json(doc.at("vocabulary"));

    const auto& meta = doc.at("training_meta");
    archive.meta.seed = meta.at("seed").get<std::uint64_t>();
    archive.meta.dataset_fingerprint = meta.at("dataset_fingerprint").get<std::string>();
    archive.meta.dataset_source = meta.at("dataset_source").get<std::string>();
    const LearnerHyperparams hp = hyperparams_from_json(meta.at("hyperparameters"));

    const auto kind_id = doc.at("learner_kind").get<std::string>();
    if (kind_id == "voting") {
      const auto& j = doc.at("learner_params");
      VotingModel voting;
      voting.tie_break = j.at("tie_break").get<std::string>() == "fixed_zero"
                             ? TieBreak::fixed_zero
                             : TieBreak::majority_class_prior;
      const auto counts = j.at("training_class_counts").get<std::vector<std::size_t>>();
      if (counts.size() != 2) {
        throw Error(ErrorKind::format, "archive: training_class_counts must have 2 entries");
      }
      voting.training_class_counts = {counts[0], counts[1]};
      voting.n_features = j.at("n_features").get<std::size_t>();
      for (const auto& member : j.at("members")) {
        voting.members.push_back(trained_model_from_json(member, hp));
      }
      if (voting.members.empty()) {
        throw Error(ErrorKind::format, "archive: voting model has no members");
      }
      archive.model = std::move(voting);
    } else {
      archive.model = trained_model_from_json(doc.at("learner_params"), hp);
    }
    return archive;
  } catch (const Error&) {
    throw;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::format, src + ": malformed archive: " + e.what());
  }
}

void save_model(const ModelArchive& archive, const std::string& path) {
  write_file(path, archive_to_json(archive));
}

ModelArchive load_model(const std::string& path) {
  return archive_from_json(read_file(path), path);
}

int predict_text(const ModelArchive& archive, const std::string& raw_text) {
  const auto tokens = tokenize(clean(raw_text, archive.preprocess));
  const SparseVector vec = transform(tokens, archive.vocabulary, archive.tfidf);
  if (const auto* single = std::get_if<TrainedModel>(&archive.model)) {
    return predict(*single, vec);
  }
  return predict(std::get<VotingModel>(archive.model), vec);
}

}  // namespace sakhr
