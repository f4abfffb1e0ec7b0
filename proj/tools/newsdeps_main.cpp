// Copyright 2026 The NewsDeps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// newsdeps: batch analysis and HTTP service.
//
//   newsdeps analyze --input F [--measure {tfidf|jaccard|sherlock|gst}]
//                    [--threshold T] [--no-normalize] [--seed N] [--out DIR]
//   newsdeps serve [--port P] [--data DIR] [--host H]

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "newsdeps/analysis.hpp"
#include "newsdeps/errors.hpp"
#include "newsdeps/http_server.hpp"
#include "newsdeps/layout.hpp"
#include "newsdeps/service.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitFlags = 1;
constexpr int kExitInput = 2;

struct AnalyzeOptions {
  std::string input;
  std::string measure = "gst";
  double threshold = newsdeps::LayoutConfig{}.threshold;
  bool no_normalize = false;
  std::uint64_t seed = newsdeps::LayoutConfig{}.seed;
  std::string out = ".";
};

struct ServeOptions {
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string data;
};

newsdeps::HttpServer* g_server = nullptr;

void handle_signal(int) {
  if (g_server) g_server->stop();
}

bool write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return static_cast<bool>(out);
}

int run_analyze(const AnalyzeOptions& opt) {
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read input file '" << opt.input << "'\n";
    return kExitInput;
  }
  std::ostringstream bytes;
  bytes << in.rdbuf();

  newsdeps::AnalysisConfig config;
  config.measure = *newsdeps::parse_measure(opt.measure);
  config.normalize = !opt.no_normalize;
  config.layout.threshold = opt.threshold;
  config.layout.seed = opt.seed;

  try {
    config.validate();
  } catch (const newsdeps::InvalidConfig& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFlags;
  }

  try {
    const newsdeps::Corpus corpus = newsdeps::parse_article_json(bytes.str());
    for (const auto& w : corpus.warnings()) std::cerr << "warning: " << w << "\n";
    const newsdeps::SimilarityMatrix matrix = newsdeps::analyze_corpus(corpus, config);
    const newsdeps::TfdLayout layout =
        newsdeps::run_tfd_layout(matrix, corpus, config.layout);

    const fs::path out_dir(opt.out);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (!write_file(out_dir / "matrix.json", newsdeps::export_matrix(matrix)) ||
        !write_file(out_dir / "layout.json", newsdeps::export_layout(layout, matrix))) {
      std::cerr << "error: cannot write output to '" << opt.out << "'\n";
      return kExitInput;
    }
    std::cout << "articles: " << corpus.size() << "\n"
              << "measure: " << newsdeps::measure_name(matrix.measure) << "\n"
              << "entries: " << matrix.entries.size() << "\n"
              << "edges: " << layout.edges.size() << "\n"
              << "lod: " << newsdeps::lod_name(newsdeps::auto_lod(layout, config.layout))
              << "\n";
  } catch (const newsdeps::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}

int run_serve(const ServeOptions& opt) {
  const fs::path data = opt.data.empty() ? newsdeps::default_data_dir() : fs::path(opt.data);
  newsdeps::Service service(data);
  newsdeps::HttpServer server(service);
  const int port = server.bind(opt.host, opt.port);
  if (port < 0) {
    std::cerr << "error: cannot bind " << opt.host << ":" << opt.port << "\n";
    return kExitInput;
  }
  g_server = &server;
  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  std::cout << "serving on http://" << opt.host << ":" << port << " (data: " << data.string()
            << ")" << std::endl;
  server.listen_after_bind();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"News information reuse analysis"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compute matrix.json and layout.json");
  analyze_cmd->add_option("--input", analyze.input, "Article JSON file")->required();
  analyze_cmd->add_option("--measure", analyze.measure, "tfidf|jaccard|sherlock|gst")
      ->check(CLI::Validator(
          [](std::string& value) -> std::string {
            if (newsdeps::parse_measure(value)) return {};
            return "unknown measure '" + value +
                   "'; valid measures: tfidf, jaccard, sherlock, gst";
          },
          "MEASURE"));
  analyze_cmd->add_option("--threshold", analyze.threshold, "Similarity threshold")
      ->check(CLI::Range(0.0, 1.0));
  analyze_cmd->add_flag("--no-normalize", analyze.no_normalize, "Keep raw scores");
  analyze_cmd->add_option("--seed", analyze.seed, "Layout seed");
  analyze_cmd->add_option("--out", analyze.out, "Output directory");

  ServeOptions serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--port", serve.port, "TCP port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_option("--data", serve.data, "Data directory (default $NEWSDEPS_DATA)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitFlags;
  }

  if (*analyze_cmd) return run_analyze(analyze);
  return run_serve(serve);
}
