#include "sakhr/cli.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sakhr/corpus.hpp"
#include "sakhr/ensemble.hpp"
#include "sakhr/errors.hpp"
#include "sakhr/evaluation.hpp"
#include "sakhr/model_archive.hpp"
#include "sakhr/preprocess.hpp"
#include "sakhr/reporting.hpp"

namespace sakhr::cli {

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::io: return 2;
    case ErrorKind::schema: return 3;
    case ErrorKind::format: return 4;
    case ErrorKind::version: return 5;
    case ErrorKind::fit: return 6;
    case ErrorKind::input: return 7;
    case ErrorKind::config: return 8;
  }
  return 1;
}

struct RunConfig {
  std::uint64_t seed = 42;
  bool quiet = false;
  bool json = false;
  std::string config_path;
  std::string text_column = "text";
  std::string label_column = "sarcastic";
  PreprocessConfig preprocess;
  TfidfConfig tfidf;
  LearnerHyperparams hp;
};

struct CommandArgs {
  std::string input;
  std::string output;
  std::string model_path;
  std::string pred_path;
  std::string gold_path;
  std::string classifier = "all";
  std::size_t folds = 5;
  bool show_config = false;
};

// ---------------------------------------------------------------------------
// Config file support. The file is TOML-style: `key = value` pairs, optional
// `[section]` headers, `#` comments. Sections named after a subcommand apply
// only when that subcommand runs; every other section maps onto the dotted
// option of the same name (e.g. `[mlp] max_epochs = 500` sets
// --mlp.max_epochs). Command-line flags override config values; unknown keys
// are rejected.

struct ConfigItem {
  std::string key;  // "seed", "mlp.max_epochs", "cv.folds", ...
  std::string value;
  std::size_t line;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<ConfigItem> parse_config_file(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<ConfigItem> items;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw Error(ErrorKind::config,
                    path + ":" + std::to_string(line_no) + ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw Error(ErrorKind::config,
                    path + ":" + std::to_string(line_no) + ": empty section name");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::config,
                  path + ":" + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(ErrorKind::config, path + ":" + std::to_string(line_no) + ": empty key");
    }
    if (!value.empty() && (value.front() == '"' || value.front() == '\'')) {
      const char quote = value.front();
      const auto close = value.find(quote, 1);
      if (close == std::string::npos) {
        throw Error(ErrorKind::config,
                    path + ":" + std::to_string(line_no) + ": unterminated quoted value");
      }
      value = value.substr(1, close - 1);
    } else {
      const auto hash = value.find('#');
      if (hash != std::string::npos) value = trim(value.substr(0, hash));
    }
    items.push_back({section.empty() ? key : section + "." + key, value, line_no});
  }
  return items;
}

bool parse_bool_value(const std::string& value) {
  if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "off" || value == "no") return false;
  throw Error(ErrorKind::config, "expected a boolean, got '" + value + "'");
}

template <typename T>
T parse_number_value(const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = value.data() + value.size();
  std::from_chars_result result{};
  if constexpr (std::is_floating_point_v<T>) {
    result = std::from_chars(first, last, out);
  } else {
    result = std::from_chars(first, last, out, 10);
  }
  if (result.ec != std::errc{} || result.ptr != last) {
    throw Error(ErrorKind::config, "expected a number, got '" + value + "'");
  }
  return out;
}

// One configurable knob: the CLI option (for override detection), a setter
// parsing the config value, and an optional owning subcommand.
struct ConfigBinding {
  CLI::Option* option = nullptr;
  std::function<void(const std::string&)> apply;
  std::string scope;  // empty = global, else subcommand name
};

class ConfigRegistry {
 public:
  void add(std::string key, CLI::Option* option, std::function<void(const std::string&)> apply,
           std::string scope = "") {
    bindings_.emplace(std::move(key), ConfigBinding{option, std::move(apply), std::move(scope)});
  }

  void apply_file(const std::string& path, const std::string& active_command) const {
    for (const auto& item : parse_config_file(path)) {
      const auto it = bindings_.find(item.key);
      if (it == bindings_.end()) {
        throw Error(ErrorKind::config, path + ":" + std::to_string(item.line) +
                                           ": unknown config key '" + item.key + "'");
      }
      const ConfigBinding& binding = it->second;
      if (!binding.scope.empty() && binding.scope != active_command) continue;
      if (binding.option != nullptr && binding.option->count() > 0) continue;
      try {
        binding.apply(item.value);
      } catch (const Error& e) {
        throw Error(ErrorKind::config,
                    path + ":" + std::to_string(item.line) + ": " + item.key + ": " + e.what());
      }
    }
  }

 private:
  std::map<std::string, ConfigBinding> bindings_;
};

// ---------------------------------------------------------------------------

struct OptionSet {
  ConfigRegistry registry;

  template <typename T>
  void number(CLI::App& app, ConfigRegistry& reg, const std::string& name, T& target,
              const std::string& help) {
    auto* opt = app.add_option("--" + name, target, help)->capture_default_str();
    reg.add(name, opt, [&target](const std::string& v) { target = parse_number_value<T>(v); });
  }

  void boolean(CLI::App& app, ConfigRegistry& reg, const std::string& name, bool& target,
               const std::string& help) {
    auto* opt = app.add_flag("--" + name, target, help);
    reg.add(name, opt, [&target](const std::string& v) { target = parse_bool_value(v); });
  }

  void text(CLI::App& app, ConfigRegistry& reg, const std::string& name, std::string& target,
            const std::string& help) {
    auto* opt = app.add_option("--" + name, target, help)->capture_default_str();
    reg.add(name, opt, [&target](const std::string& v) { target = v; });
  }
};

void add_shared_options(CLI::App& app, RunConfig& rc, OptionSet& opts) {
  auto& reg = opts.registry;
  opts.number(app, reg, "seed", rc.seed, "Seed for every random decision");
  opts.boolean(app, reg, "quiet", rc.quiet, "Suppress informational log lines");
  opts.boolean(app, reg, "json", rc.json, "Emit machine-readable JSON reports");
  opts.text(app, reg, "text-column", rc.text_column, "CSV column holding the text");
  opts.text(app, reg, "label-column", rc.label_column, "CSV column holding the 0/1 label");

  opts.number(app, reg, "clean.collapse_repeats_to", rc.preprocess.collapse_repeats_to,
              "Max repeated-codepoint run kept by cleaning");
  opts.boolean(app, reg, "clean.strip_tatweel", rc.preprocess.strip_tatweel,
               "Strip the tatweel character during cleaning");

  opts.boolean(app, reg, "tfidf.compat_mode", rc.tfidf.compat_mode,
               "Use idf+1 weighting with L2-normalized vectors");
  opts.number(app, reg, "tfidf.min_df", rc.tfidf.min_df, "Drop tokens seen in fewer documents");
  opts.number(app, reg, "tfidf.max_df_ratio", rc.tfidf.max_df_ratio,
              "Drop tokens seen in more than this fraction of documents");

  opts.number(app, reg, "svm_linear.c", rc.hp.svm_linear.c, "Linear SVM C");
  opts.number(app, reg, "svm_linear.max_iter", rc.hp.svm_linear.max_iter, "Linear SVM epoch cap");
  opts.number(app, reg, "svm_linear.tol", rc.hp.svm_linear.tol,
              "Linear SVM convergence tolerance");
  opts.number(app, reg, "svm_rbf.gamma", rc.hp.svm_rbf.gamma, "RBF kernel gamma");
  opts.number(app, reg, "svm_rbf.c", rc.hp.svm_rbf.c, "RBF SVM C");
  opts.number(app, reg, "svm_rbf.epochs", rc.hp.svm_rbf.epochs, "RBF SVM training epochs");
  opts.number(app, reg, "mnb.alpha", rc.hp.mnb.alpha, "Naive Bayes smoothing");
  opts.number(app, reg, "sgd.c", rc.hp.sgd_hinge.c, "SGD (hinge) C");
  opts.number(app, reg, "sgd.max_iter", rc.hp.sgd_hinge.max_iter, "SGD total update steps");
  opts.number(app, reg, "mlp.hidden_size", rc.hp.mlp.hidden_size, "MLP hidden units");
  opts.number(app, reg, "mlp.learning_rate", rc.hp.mlp.learning_rate, "MLP Adam learning rate");
  opts.number(app, reg, "mlp.max_epochs", rc.hp.mlp.max_epochs, "MLP epoch cap");
  opts.number(app, reg, "mlp.batch_size", rc.hp.mlp.batch_size,
              "MLP batch size (0 = min(200, n))");
  opts.number(app, reg, "mlp.tol", rc.hp.mlp.tol, "MLP early-stop loss tolerance (<=0 disables)");
  opts.number(app, reg, "mlp.patience", rc.hp.mlp.patience, "MLP early-stop patience in epochs");
  opts.number(app, reg, "rf.n_trees", rc.hp.random_forest.n_trees, "Forest size");
  opts.boolean(app, reg, "rf.bootstrap", rc.hp.random_forest.bootstrap,
               "Bootstrap-resample each tree's training set");
  opts.number(app, reg, "knn.k", rc.hp.knn.k, "Neighbors considered by KNN");
  opts.number(app, reg, "ada.n_rounds", rc.hp.adaboost.n_rounds, "AdaBoost rounds");
}

std::string log_prefix(const std::string& command, const std::string& stage) {
  return "sakhr " + command + " [" + stage + "]: ";
}

// ---------------------------------------------------------------------------

int cmd_preprocess(const RunConfig& rc, const CommandArgs& args, std::ostream& out,
                   std::ostream& err) {
  rc.preprocess.validate();
  if (args.show_config) {
    nlohmann::ordered_json j;
    j["collapse_repeats_to"] = rc.preprocess.collapse_repeats_to;
    j["strip_tatweel"] = rc.preprocess.strip_tatweel;
    auto ranges = nlohmann::ordered_json::array();
    for (const auto& r : rc.preprocess.arabic_letter_ranges) {
      ranges.push_back({static_cast<std::uint32_t>(r.lo), static_cast<std::uint32_t>(r.hi)});
    }
    j["arabic_letter_ranges"] = std::move(ranges);
    auto diacritics = nlohmann::ordered_json::array();
    for (char32_t cp : rc.preprocess.diacritic_codepoints) {
      diacritics.push_back(static_cast<std::uint32_t>(cp));
    }
    j["diacritic_codepoints"] = std::move(diacritics);
    out << j.dump(2) << "\n";
    if (args.input.empty()) return 0;
  }

  CsvTable table = read_csv(args.input);
  const std::size_t text_col = table.require_column(rc.text_column, args.input);

  std::vector<std::size_t> emptied;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::string& cell = table.rows[r][text_col];
    const std::string cleaned = clean(cell, rc.preprocess);
    if (cleaned.empty() && !cell.empty()) emptied.push_back(r + 1);
    cell = cleaned;
  }
  write_csv(table, args.output);

  if (!emptied.empty() && !rc.quiet) {
    err << log_prefix("preprocess", "clean") << emptied.size()
        << " row(s) empty after cleaning (rows:";
    for (std::size_t r : emptied) err << " " << r;
    err << ")\n";
  }
  if (!rc.quiet) {
    err << log_prefix("preprocess", "done") << table.rows.size() << " rows -> " << args.output
        << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct FittedPipeline {
  Vocabulary vocabulary;
  std::vector<SparseVector> vectors;
};

FittedPipeline fit_pipeline(const Dataset& dataset, const RunConfig& rc) {
  std::vector<TokenList> documents;
  documents.reserve(dataset.size());
  for (const auto& sample : dataset.samples) {
    documents.push_back(tokenize(clean(sample.text, rc.preprocess)));
  }
  auto [vocab, vectors] = fit_transform(documents, rc.tfidf);
  return {std::move(vocab), std::move(vectors)};
}

int cmd_train(const RunConfig& rc, const CommandArgs& args, std::ostream&, std::ostream& err,
              std::string& stage) {
  stage = "load";
  CsvSchema schema;
  schema.text_column = rc.text_column;
  schema.label_column = rc.label_column;
  const Dataset dataset = load_dataset(args.input, schema);

  stage = "preprocess";
  rc.preprocess.validate();

  stage = "vectorize";
  FittedPipeline pipeline = fit_pipeline(dataset, rc);

  stage = "fit";
  ModelArchive archive;
  archive.preprocess = rc.preprocess;
  archive.tfidf = rc.tfidf;
  archive.meta = {rc.seed, dataset_fingerprint(dataset), dataset.source};

  const auto labels = dataset.labels();
  if (args.classifier == "voting") {
    archive.model = fit_voting(default_voting_members(rc.hp, rc.seed), pipeline.vectors, labels,
                               pipeline.vocabulary.size());
  } else {
    const LearnerSpec spec{learner_kind_from_id(args.classifier), rc.hp, rc.seed};
    archive.model = fit(spec, pipeline.vectors, labels, pipeline.vocabulary.size());
  }
  archive.vocabulary = std::move(pipeline.vocabulary);

  stage = "save";
  save_model(archive, args.model_path);

  if (!rc.quiet) {
    err << log_prefix("train", "done") << args.classifier << " on " << dataset.size()
        << " samples (" << archive.vocabulary.size() << " features) -> " << args.model_path
        << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_cv(const RunConfig& rc, const CommandArgs& args, std::ostream& out, std::ostream&,
           std::string& stage) {
  stage = "load";
  CsvSchema schema;
  schema.text_column = rc.text_column;
  schema.label_column = rc.label_column;
  const Dataset dataset = load_dataset(args.input, schema);

  stage = "preprocess";
  rc.preprocess.validate();

  stage = "evaluate";
  CvOptions options{args.folds, rc.seed, rc.preprocess, rc.tfidf};

  std::vector<CvReport> rows;
  if (args.classifier == "all") {
    for (LearnerKind kind : kAllLearnerKinds) {
      rows.push_back(cross_validate(LearnerSpec{kind, rc.hp, rc.seed}, dataset, options));
    }
    rows.push_back(
        cross_validate_voting(default_voting_members(rc.hp, rc.seed), dataset, options));
  } else if (args.classifier == "voting") {
    rows.push_back(
        cross_validate_voting(default_voting_members(rc.hp, rc.seed), dataset, options));
  } else {
    const LearnerSpec spec{learner_kind_from_id(args.classifier), rc.hp, rc.seed};
    rows.push_back(cross_validate(spec, dataset, options));
  }

  out << (rc.json ? format_cv_json(rows) : format_cv_table(rows));
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_predict(const RunConfig& rc, const CommandArgs& args, std::ostream&, std::ostream& err,
                std::string& stage) {
  stage = "load-model";
  const ModelArchive archive = load_model(args.model_path);

  stage = "load";
  CsvTable table = read_csv(args.input);
  const std::size_t text_col = table.require_column(rc.text_column, args.input);

  stage = "predict";
  std::optional<std::size_t> predicted_col = table.column("predicted");
  if (!predicted_col) {
    table.header.push_back("predicted");
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const std::string& text = table.rows[r][text_col];
    if (text.empty()) {
      throw Error(ErrorKind::schema,
                  args.input + ": row " + std::to_string(r + 1) + ": empty text");
    }
    const int label = predict_text(archive, text);
    if (predicted_col) {
      table.rows[r][*predicted_col] = std::to_string(label);
    } else {
      table.rows[r].push_back(std::to_string(label));
    }
  }

  stage = "write";
  write_csv(table, args.output);

  if (!rc.quiet) {
    err << log_prefix("predict", "done") << table.rows.size() << " rows -> " << args.output
        << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

std::vector<int> read_label_column(const std::string& path, const std::string& column) {
  const CsvTable table = read_csv(path);
  const std::size_t col = table.require_column(column, path);
  std::vector<int> labels;
  labels.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    try {
      labels.push_back(parse_label(table.rows[r][col]));
    } catch (const Error& e) {
      throw Error(ErrorKind::schema, path + ": row " + std::to_string(r + 1) + ": " + e.what());
    }
  }
  return labels;
}

int cmd_evaluate(const RunConfig& rc, const CommandArgs& args, std::ostream& out, std::ostream&,
                 std::string& stage) {
  stage = "evaluate";
  const std::vector<int> pred = read_label_column(args.pred_path, "predicted");
  const std::vector<int> gold = read_label_column(args.gold_path, rc.label_column);
  if (pred.size() != gold.size()) {
    throw Error(ErrorKind::input, "predictions have " + std::to_string(pred.size()) +
                                      " rows but gold has " + std::to_string(gold.size()));
  }
  const MetricsReport report = metrics(confusion(gold, pred));
  out << (rc.json ? format_test_report_json(report) : format_test_report(report));
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig rc;
  CommandArgs cmd_args;
  OptionSet opts;

  CLI::App app{"Arabic sarcasm detection with TF-IDF and classical classifiers", "sakhr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "sakhr 1.0.0");
  app.add_option("--config", rc.config_path,
                 "Read options from a TOML-style config file (sections map onto dotted "
                 "option names; command-line flags win)");
  add_shared_options(app, rc, opts);

  const std::string classifier_help =
      "one of svm_linear, svm_rbf, mnb, sgd, mlp, rf, knn, adaboost, voting";

  auto* preprocess_cmd = app.add_subcommand("preprocess", "Clean the text column of a CSV file");
  preprocess_cmd->add_option("input", cmd_args.input, "Input CSV");
  preprocess_cmd->add_option("--output,-o", cmd_args.output, "Cleaned output CSV");
  preprocess_cmd->add_flag("--show-config", cmd_args.show_config,
                           "Print the effective cleaning configuration");

  auto* train_cmd = app.add_subcommand("train", "Fit a classifier and write a model archive");
  train_cmd->add_option("data", cmd_args.input, "Training CSV")->required();
  auto* train_classifier =
      train_cmd->add_option("--classifier", cmd_args.classifier, classifier_help)->required();
  train_cmd->add_option("--model", cmd_args.model_path, "Output model archive path")->required();
  opts.registry.add(
      "train.classifier", train_classifier,
      [&cmd_args](const std::string& v) { cmd_args.classifier = v; }, "train");

  auto* cv_cmd = app.add_subcommand("cv", "Stratified k-fold cross-validation report");
  cv_cmd->add_option("data", cmd_args.input, "Training CSV")->required();
  auto* cv_classifier =
      cv_cmd->add_option("--classifier", cmd_args.classifier, classifier_help + ", or all")
          ->capture_default_str();
  auto* cv_folds = cv_cmd->add_option("--folds", cmd_args.folds, "Number of folds")
                       ->capture_default_str();
  opts.registry.add(
      "cv.classifier", cv_classifier,
      [&cmd_args](const std::string& v) { cmd_args.classifier = v; }, "cv");
  opts.registry.add(
      "cv.folds", cv_folds,
      [&cmd_args](const std::string& v) {
        cmd_args.folds = parse_number_value<std::size_t>(v);
      },
      "cv");

  auto* predict_cmd = app.add_subcommand("predict", "Label a CSV file with a trained model");
  predict_cmd->add_option("input", cmd_args.input, "Input CSV")->required();
  predict_cmd->add_option("--model", cmd_args.model_path, "Model archive path")->required();
  predict_cmd->add_option("--output,-o", cmd_args.output, "Output CSV with a predicted column")
      ->required();

  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against gold labels");
  evaluate_cmd->add_option("--pred", cmd_args.pred_path, "CSV with a predicted column")
      ->required();
  evaluate_cmd->add_option("--gold", cmd_args.gold_path, "CSV with gold labels")->required();

  try {
    // CLI11's string-vector overload expects the arguments reversed.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::string command = "unknown";
  if (preprocess_cmd->parsed()) command = "preprocess";
  if (train_cmd->parsed()) command = "train";
  if (cv_cmd->parsed()) command = "cv";
  if (predict_cmd->parsed()) command = "predict";
  if (evaluate_cmd->parsed()) command = "evaluate";

  std::string stage = "config";
  try {
    if (!rc.config_path.empty()) {
      opts.registry.apply_file(rc.config_path, command);
    }

    if (command == "preprocess") {
      stage = "preprocess";
      if (!cmd_args.show_config && cmd_args.input.empty()) {
        throw Error(ErrorKind::config, "an input CSV is required (or pass --show-config)");
      }
      if (!cmd_args.input.empty() && cmd_args.output.empty()) {
        throw Error(ErrorKind::config, "--output is required when cleaning a file");
      }
      return cmd_preprocess(rc, cmd_args, out, err);
    }
    if (command == "train") return cmd_train(rc, cmd_args, out, err, stage);
    if (command == "cv") return cmd_cv(rc, cmd_args, out, err, stage);
    if (command == "predict") return cmd_predict(rc, cmd_args, out, err, stage);
    if (command == "evaluate") return cmd_evaluate(rc, cmd_args, out, err, stage);
    err << "sakhr: no command selected\n";
    return 1;
  } catch (const Error& e) {
    err << log_prefix(command, stage) << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << log_prefix(command, stage) << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sakhr::cli
