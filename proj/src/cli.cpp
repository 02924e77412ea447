#include "featbench/cli.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "featbench/dataio.hpp"
#include "featbench/errors.hpp"
#include "featbench/experiments.hpp"
#include "featbench/synthetic.hpp"

namespace featbench {

namespace {

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::vector<Method> parse_methods(const std::string& list) {
    std::vector<Method> methods;
    std::stringstream ss(list);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        if (token == "all") {
            methods.assign(kAllMethods, kAllMethods + 5);
            continue;
        }
        const auto m = parse_method(token);
        if (!m) throw InvalidConfig("--methods: unknown method '" + token + "'");
        methods.push_back(*m);
    }
    if (methods.empty()) throw InvalidConfig("--methods: no methods selected");
    return methods;
}

std::string methods_string(const std::vector<Method>& methods) {
    std::string out;
    for (const Method m : methods) {
        if (!out.empty()) out += ',';
        std::string name(method_name(m));
        for (char& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        out += name;
    }
    return out;
}

struct BenchOpts {
    int setting = 1;
    std::string methods = "all";
    std::string layer = "raw";
    std::size_t splits = 20;
    std::uint64_t seed = 0;
    std::string data_dir;
    std::string out;
    std::string chart;
    int threads = 1;
    double svm_c = 1000.0;
    double svm_sigma = 1.0;
    double elm_c = 100.0;
    std::size_t elm_hidden = 5000;
    double kelm_c = 100.0;
    double kelm_sigma = 0.01;
    bool normalize = false;
};

std::vector<FeatureDataset> load_bench_dir(const std::string& dir, Layer layer) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw InvalidConfig("--data-dir: '" + dir + "' is not a directory");
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext != ".dcf1" && ext != ".csv") continue;
        if (tags_from_filename(entry.path().string()).layer != layer) continue;
        paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty())
        throw InvalidConfig("--data-dir: no '*_" + std::string(layer_name(layer)) +
                            ".dcf1' or matching .csv dataset files in '" + dir + "'");

    std::vector<FeatureDataset> datasets;
    datasets.reserve(paths.size());
    bool any_object_domain = false;
    for (const std::string& path : paths) {
        datasets.push_back(load_dataset(path));
        any_object_domain |= datasets.back().domain.kind != Domain::Kind::Synthetic;
    }
    if (any_object_domain) {
        // An object-domain directory must be complete: every cross-domain
        // table column needs all four domains.
        const Domain required[] = {{Domain::Kind::Amazon, {}},
                                   {Domain::Kind::Dslr, {}},
                                   {Domain::Kind::Webcam, {}},
                                   {Domain::Kind::Caltech, {}}};
        for (const Domain& dom : required) {
            bool found = false;
            for (const FeatureDataset& ds : datasets) found |= ds.domain == dom;
            if (!found)
                throw InvalidConfig("--data-dir: missing domain file '" +
                                    canonical_filename(dom, layer) + "' in '" + dir + "'");
        }
    }
    return datasets;
}

int cmd_bench(const BenchOpts& opts) {
    const auto layer = parse_layer(opts.layer);
    if (!layer) throw InvalidConfig("--layer: expected f6, f7, or raw");
    ExperimentConfig config;
    config.setting = static_cast<Setting>(opts.setting);
    config.methods = parse_methods(opts.methods);
    config.layer = *layer;
    config.splits = opts.splits;
    config.seed = opts.seed;
    config.threads = opts.threads;
    config.normalize = opts.normalize;
    config.params.svm_c = opts.svm_c;
    config.params.svm_sigma = opts.svm_sigma;
    config.params.elm_c = opts.elm_c;
    config.params.elm_hidden = opts.elm_hidden;
    config.params.kelm_c = opts.kelm_c;
    config.params.kelm_sigma = opts.kelm_sigma;

    std::cout << "# featbench " << kVersion << "\n# command: featbench bench --setting "
              << opts.setting << " --methods " << methods_string(config.methods) << " --layer "
              << layer_name(config.layer) << " --splits " << config.splits << " --seed "
              << config.seed << " --data-dir " << opts.data_dir
              << (opts.out.empty() ? "" : " --out " + opts.out)
              << (opts.chart.empty() ? "" : " --chart " + opts.chart) << " --threads "
              << config.threads << " --svm-c " << fmt_num(opts.svm_c) << " --svm-sigma "
              << fmt_num(opts.svm_sigma) << " --elm-c " << fmt_num(opts.elm_c) << " --elm-L "
              << opts.elm_hidden << " --kelm-c " << fmt_num(opts.kelm_c) << " --kelm-sigma "
              << fmt_num(opts.kelm_sigma) << (opts.normalize ? " --normalize" : "") << "\n";

    const std::vector<FeatureDataset> datasets = load_bench_dir(opts.data_dir, config.layer);
    const ResultTable table = run_experiment(config, datasets);

    const bool markdown = opts.out.ends_with(".md") || opts.out.ends_with(".markdown");
    const std::string text =
        render_table(table, markdown ? TableStyle::Markdown : TableStyle::Tsv);
    if (!opts.out.empty()) {
        std::ofstream file(opts.out, std::ios::binary | std::ios::trunc);
        if (!file) throw IoError("cannot create '" + opts.out + "'");
        file << text;
        if (!file) throw IoError("write failed for '" + opts.out + "'");
    }
    std::cout << text;
    if (!opts.chart.empty()) render_chart(table, opts.chart);

    if (table.has_failures()) {
        std::cout << "# failed cells:\n" << render_diagnostics(table);
        return 2;
    }
    return 0;
}

struct SynthOpts {
    std::size_t domains = 4;
    std::size_t classes = 10;
    std::size_t dim = 64;
    std::size_t per_class = 30;
    double shift = 0.0;
    std::uint64_t seed = 0;
    std::string out_dir;
};

int cmd_synth(const SynthOpts& opts) {
    std::cout << "# featbench " << kVersion << "\n# command: featbench synth --domains "
              << opts.domains << " --classes " << opts.classes << " --dim " << opts.dim
              << " --per-class " << opts.per_class << " --shift " << fmt_num(opts.shift)
              << " --seed " << opts.seed << " --out-dir " << opts.out_dir << "\n";
    SyntheticConfig config;
    config.domains = opts.domains;
    config.classes = opts.classes;
    config.dim = opts.dim;
    config.per_class.assign(opts.classes, opts.per_class);
    config.shift_magnitude = opts.shift;
    config.seed = opts.seed;

    std::filesystem::create_directories(opts.out_dir);
    for (const FeatureDataset& ds : generate_synthetic_domains(config)) {
        const std::string path =
            (std::filesystem::path(opts.out_dir) / canonical_filename(ds.domain, ds.layer))
                .string();
        save_binary(ds, path);
        std::cout << path << ": " << ds.sample_count() << " samples, dim " << ds.dim() << "\n";
    }
    return 0;
}

struct ConvertOpts {
    std::string in;
    std::string out;
};

int cmd_convert(const ConvertOpts& opts) {
    std::cout << "# featbench " << kVersion << "\n# command: featbench convert --in " << opts.in
              << " --out " << opts.out << "\n";
    const FeatureDataset ds = load_dataset(opts.in);
    const std::string ext = std::filesystem::path(opts.out).extension().string();
    if (ext == ".dcf1") save_binary(ds, opts.out);
    else if (ext == ".csv") save_csv(ds, opts.out);
    else throw InvalidConfig("--out: unsupported extension '" + ext + "'");
    std::cout << opts.out << ": " << ds.sample_count() << " samples, dim " << ds.dim() << "\n";
    return 0;
}

struct TrainOpts {
    std::string data;
    std::string method = "kelm";
    double c = -1.0;      // <0 means method default
    double sigma = -1.0;  // <0 means method default
    std::size_t elm_hidden = 5000;
    std::uint64_t seed = 0;
    std::string eval;
    std::string query;
    bool normalize = false;
};

MethodParams params_for(Method method, const TrainOpts& opts) {
    MethodParams params;
    params.elm_hidden = opts.elm_hidden;
    const bool has_c = opts.c >= 0.0, has_sigma = opts.sigma >= 0.0;
    switch (method) {
        case Method::Svm:
            if (has_c) params.svm_c = opts.c;
            if (has_sigma) params.svm_sigma = opts.sigma;
            break;
        case Method::Lssvm:
            if (has_c) params.lssvm_c = opts.c;
            if (has_sigma) params.lssvm_sigma = opts.sigma;
            break;
        case Method::Elm:
            if (has_c) params.elm_c = opts.c;
            break;
        case Method::Kelm:
            if (has_c) params.kelm_c = opts.c;
            if (has_sigma) params.kelm_sigma = opts.sigma;
            break;
        case Method::Nn:
            break;
    }
    return params;
}

void print_train_header(const char* cmd, const TrainOpts& opts, std::ostream& out) {
    out << "# featbench " << kVersion << "\n# command: featbench " << cmd << " --method "
        << opts.method;
    if (!opts.data.empty()) out << " --data " << opts.data;
    if (!opts.query.empty()) out << " --train " << opts.data << " --query " << opts.query;
    if (opts.c >= 0.0) out << " --C " << fmt_num(opts.c);
    if (opts.sigma >= 0.0) out << " --sigma " << fmt_num(opts.sigma);
    out << " --elm-L " << opts.elm_hidden << " --seed " << opts.seed;
    if (!opts.eval.empty()) out << " --eval " << opts.eval;
    if (opts.normalize) out << " --normalize";
    out << "\n";
}

std::pair<AnyModel, FeatureDataset> fit_from_file(const TrainOpts& opts, Method method) {
    FeatureDataset train = load_dataset(opts.data);
    if (opts.normalize) train.features = l2_normalize_rows(train.features);
    const MethodParams params = params_for(method, opts);
    RngStream rng(opts.seed, combine_stream_id({hash_bytes("cli-model")}));
    AnyModel model = fit_classifier(method, train.features, train.labels, params, rng);
    return {std::move(model), std::move(train)};
}

int cmd_train(const TrainOpts& opts) {
    const auto method = parse_method(opts.method);
    if (!method) throw InvalidConfig("--method: expected nn, svm, lssvm, elm, or kelm");
    print_train_header("train", opts, std::cout);

    const auto start = std::chrono::steady_clock::now();
    auto [model, train] = fit_from_file(opts, *method);
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    const double train_acc = accuracy(predict_classifier(model, train.features), train.labels);
    char acc_buf[32];
    std::snprintf(acc_buf, sizeof acc_buf, "%.4f", train_acc);
    std::cout << "train accuracy: " << acc_buf << " (" << train.sample_count() << " samples, dim "
              << train.dim() << ")\n";
    std::snprintf(acc_buf, sizeof acc_buf, "%.1f", elapsed);
    std::cout << "fit time: " << acc_buf << " ms\n";

    if (!opts.eval.empty()) {
        FeatureDataset eval = load_dataset(opts.eval);
        if (opts.normalize) eval.features = l2_normalize_rows(eval.features);
        if (eval.dim() != train.dim())
            throw DimensionMismatch("--eval: dimension " + std::to_string(eval.dim()) +
                                    " differs from training dimension " +
                                    std::to_string(train.dim()));
        std::snprintf(acc_buf, sizeof acc_buf, "%.4f",
                      accuracy(predict_classifier(model, eval.features), eval.labels));
        std::cout << "eval accuracy: " << acc_buf << " (" << eval.sample_count()
                  << " samples)\n";
    }
    return 0;
}

int cmd_predict(const TrainOpts& opts) {
    const auto method = parse_method(opts.method);
    if (!method) throw InvalidConfig("--method: expected nn, svm, lssvm, elm, or kelm");
    print_train_header("predict", opts, std::cerr);

    auto [model, train] = fit_from_file(opts, *method);
    Matrix queries = std::filesystem::path(opts.query).extension() == ".dcf1"
                         ? load_binary(opts.query).features
                         : load_features_csv(opts.query);
    if (opts.normalize) queries = l2_normalize_rows(queries);
    if (queries.cols() != train.dim())
        throw DimensionMismatch("--query: dimension " + std::to_string(queries.cols()) +
                                " differs from training dimension " +
                                std::to_string(train.dim()));
    for (int label : predict_classifier(model, queries)) std::cout << label << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"classical classifiers and cross-domain benchmarks over feature datasets"};
    app.require_subcommand(1);

    BenchOpts bench;
    CLI::App* cmd = app.add_subcommand("bench", "run an evaluation protocol over a data directory");
    cmd->add_option("--setting", bench.setting, "protocol: 1 single-domain, 2 cross-domain source-only, 3 source+target")
        ->required()
        ->check(CLI::Range(1, 3));
    cmd->add_option("--methods", bench.methods, "comma list of nn,svm,lssvm,elm,kelm or 'all'");
    cmd->add_option("--layer", bench.layer, "feature layer tag: f6, f7, or raw");
    cmd->add_option("--splits", bench.splits, "random train/test splits per task");
    cmd->add_option("--seed", bench.seed, "master seed");
    cmd->add_option("--data-dir", bench.data_dir, "directory of <domain>_<layer>.dcf1 files")
        ->required();
    cmd->add_option("--out", bench.out, "result table file (.md selects markdown, else TSV)");
    cmd->add_option("--chart", bench.chart, "grouped bar chart SVG file");
    cmd->add_option("--threads", bench.threads, "worker cap; results do not depend on it");
    cmd->add_option("--svm-c", bench.svm_c, "SVM penalty C");
    cmd->add_option("--svm-sigma", bench.svm_sigma, "SVM RBF width");
    cmd->add_option("--elm-c", bench.elm_c, "ELM penalty C");
    cmd->add_option("--elm-L", bench.elm_hidden, "ELM hidden neuron count");
    cmd->add_option("--kelm-c", bench.kelm_c, "KELM penalty C");
    cmd->add_option("--kelm-sigma", bench.kelm_sigma, "KELM RBF width");
    cmd->add_flag("--normalize", bench.normalize, "L2-normalize feature rows");

    SynthOpts synth;
    cmd = app.add_subcommand("synth", "generate a synthetic multi-domain corpus");
    cmd->add_option("--domains", synth.domains, "number of domains");
    cmd->add_option("--classes", synth.classes, "number of classes");
    cmd->add_option("--dim", synth.dim, "feature dimension");
    cmd->add_option("--per-class", synth.per_class, "samples per class per domain");
    cmd->add_option("--shift", synth.shift, "cross-domain translation magnitude");
    cmd->add_option("--seed", synth.seed, "generator seed");
    cmd->add_option("--out-dir", synth.out_dir, "output directory")->required();

    ConvertOpts convert;
    cmd = app.add_subcommand("convert", "convert between CSV and DCF1 dataset files");
    cmd->add_option("--in", convert.in, "input file (.csv or .dcf1)")->required();
    cmd->add_option("--out", convert.out, "output file (.csv or .dcf1)")->required();

    TrainOpts train;
    cmd = app.add_subcommand("train", "fit one classifier and report training accuracy");
    cmd->add_option("--data", train.data, "labeled dataset (.csv or .dcf1)")->required();
    cmd->add_option("--method", train.method, "nn, svm, lssvm, elm, or kelm");
    cmd->add_option("--C", train.c, "penalty C for the chosen method");
    cmd->add_option("--sigma", train.sigma, "RBF width for the chosen method");
    cmd->add_option("--elm-L", train.elm_hidden, "ELM hidden neuron count");
    cmd->add_option("--seed", train.seed, "model seed (ELM draws, LSSVM folds)");
    cmd->add_option("--eval", train.eval, "labeled file to evaluate after training");
    cmd->add_flag("--normalize", train.normalize, "L2-normalize feature rows");

    TrainOpts predict;
    cmd = app.add_subcommand("predict", "fit on a training file and print one class id per query line");
    cmd->add_option("--train", predict.data, "labeled training dataset")->required();
    cmd->add_option("--query", predict.query, "feature-only CSV (or DCF1, labels ignored)")
        ->required();
    cmd->add_option("--method", predict.method, "nn, svm, lssvm, elm, or kelm");
    cmd->add_option("--C", predict.c, "penalty C for the chosen method");
    cmd->add_option("--sigma", predict.sigma, "RBF width for the chosen method");
    cmd->add_option("--elm-L", predict.elm_hidden, "ELM hidden neuron count");
    cmd->add_option("--seed", predict.seed, "model seed (ELM draws, LSSVM folds)");
    cmd->add_flag("--normalize", predict.normalize, "L2-normalize feature rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand("bench")) return cmd_bench(bench);
        if (app.got_subcommand("synth")) return cmd_synth(synth);
        if (app.got_subcommand("convert")) return cmd_convert(convert);
        if (app.got_subcommand("train")) return cmd_train(train);
        if (app.got_subcommand("predict")) return cmd_predict(predict);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace featbench
