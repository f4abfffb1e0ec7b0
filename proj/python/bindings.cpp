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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "newsdeps/analysis.hpp"
#include "newsdeps/errors.hpp"
#include "newsdeps/html_extract.hpp"
#include "newsdeps/tokenize.hpp"

namespace py = pybind11;
using namespace newsdeps;
using json = nlohmann::json;

namespace {

TokenStream stream(std::vector<std::string> tokens) {
  TokenStream t;
  t.tokens = std::move(tokens);
  return t;
}

Measure measure_from(const std::string& name) {
  const auto m = parse_measure(name);
  if (!m) throw InvalidConfig("unknown measure '" + name + "'");
  return *m;
}

AnalysisConfig config_from(const std::string& text) {
  return analysis_config_from_json(text.empty() ? json::object() : json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of newsdeps";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<MalformedInput>(m, "MalformedInput", base.ptr());
  py::register_exception<InvalidArticle>(m, "InvalidArticle", base.ptr());
  py::register_exception<ParseFailure>(m, "ParseFailure", base.ptr());
  py::register_exception<CorpusTooSmall>(m, "CorpusTooSmall", base.ptr());
  py::register_exception<InvalidConfig>(m, "InvalidConfig", base.ptr());
  py::register_exception<MismatchedIds>(m, "MismatchedIds", base.ptr());
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", base.ptr());

  m.def("tokenize", [](const std::string& text) { return tokenize(text).tokens; }, py::arg("text"));
  m.def("fnv1a64", [](const std::string& s) { return fnv1a64(s); });

  m.def("jaccard",
        [](std::vector<std::string> a, std::vector<std::string> b) {
          return jaccard(stream(std::move(a)), stream(std::move(b)));
        },
        py::arg("a"), py::arg("b"));
  m.def("tfidf_cosine",
        [](const std::vector<std::vector<std::string>>& docs, std::size_t i, std::size_t j) {
          std::vector<TokenStream> streams;
          for (const auto& d : docs) streams.push_back(stream(d));
          return tfidf_cosine(streams, i, j);
        },
        py::arg("docs"), py::arg("i"), py::arg("j"));
  m.def("sherlock_score",
        [](std::vector<std::string> a, std::vector<std::string> b, int ngram, int zerobits) {
          MeasureParams p;
          p.sherlock_ngram = ngram;
          p.sherlock_zerobits = zerobits;
          p.validate();
          return sherlock_score(sherlock_signatures(stream(std::move(a)), p),
                                sherlock_signatures(stream(std::move(b)), p));
        },
        py::arg("a"), py::arg("b"), py::arg("ngram") = 3, py::arg("zerobits") = 3);
  m.def("gst_tiles",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b,
           std::size_t min_match) {
          std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> out;
          for (const auto& t : gst_tiles(a, b, min_match)) out.emplace_back(t.start_a, t.start_b, t.length);
          return out;
        },
        py::arg("a"), py::arg("b"), py::arg("min_match") = 7);
  m.def("gst_score",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b,
           std::size_t min_match) {
          const auto tiles = gst_tiles(a, b, min_match);
          return gst_score(tiles, a.size(), b.size());
        },
        py::arg("a"), py::arg("b"), py::arg("min_match") = 7);

  py::class_<Corpus>(m, "Corpus")
      .def_static("from_json", [](const std::string& text) { return parse_article_json(text); },
                  py::arg("text"))
      .def("__len__", &Corpus::size)
      .def_property_readonly("chronological_ids", &Corpus::chronological_ids)
      .def_property_readonly("warnings", &Corpus::warnings)
      .def("to_json", [](const Corpus& c) { return serialize_articles(c); });

  py::class_<SimilarityMatrix>(m, "SimilarityMatrix")
      .def_property_readonly("measure", [](const SimilarityMatrix& s) {
        return std::string(measure_name(s.measure));
      })
      .def_readonly("normalized", &SimilarityMatrix::normalized)
      .def_readonly("article_ids", &SimilarityMatrix::article_ids)
      .def_property_readonly("entries", [](const SimilarityMatrix& s) {
        std::vector<std::tuple<std::size_t, std::size_t, double>> out;
        for (const auto& e : s.entries) out.emplace_back(e.i, e.j, e.s);
        return out;
      })
      .def_property_readonly("k", &SimilarityMatrix::k)
      .def("score", &SimilarityMatrix::score, py::arg("i"), py::arg("j"))
      .def("to_json", &export_matrix)
      .def("__eq__", [](const SimilarityMatrix& a, const SimilarityMatrix& b) { return a == b; });

  m.def("build_matrix",
        [](const Corpus& c, const std::string& measure) {
          return build_d2d_matrix(c, measure_from(measure));
        },
        py::arg("corpus"), py::arg("measure") = "gst");
  m.def("normalize_matrix", &normalize_matrix, py::arg("matrix"));
  m.def("analyze",
        [](const Corpus& c, const std::string& config) {
          return analyze_corpus(c, config_from(config));
        },
        py::arg("corpus"), py::arg("config") = "",
        "Matrix for an AnalysisConfig given as JSON text.");
  m.def("layout",
        [](const SimilarityMatrix& s, const Corpus& c, const std::string& config) {
          const auto cfg = config_from(config);
          return export_layout(run_tfd_layout(s, c, cfg.layout), s);
        },
        py::arg("matrix"), py::arg("corpus"), py::arg("config") = "",
        "Layout export JSON for the layout part of an AnalysisConfig.");
  m.def("auto_lod",
        [](const SimilarityMatrix& s, const Corpus& c, const std::string& config) {
          const auto cfg = config_from(config);
          return std::string(lod_name(auto_lod(run_tfd_layout(s, c, cfg.layout), cfg.layout)));
        },
        py::arg("matrix"), py::arg("corpus"), py::arg("config") = "");
  m.def("extract_from_html",
        [](const std::string& html, const std::string& url) {
          Article a = extract_from_html(html, url);
          json out = json::object();
          out["publisher"] = a.publisher;
          out["title"] = a.title;
          out["main_text"] = a.main_text;
          out["published_at"] = a.published_at.text();
          if (a.url) out["url"] = *a.url;
          if (a.image_url) out["image_url"] = *a.image_url;
          return out.dump();
        },
        py::arg("html"), py::arg("url"));
}
