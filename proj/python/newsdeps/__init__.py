# Copyright 2026 The NewsDeps Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the newsdeps core."""

import json

from ._core import (
    Corpus,
    CorpusTooSmall,
    Error,
    IndexOutOfRange,
    InvalidArticle,
    InvalidConfig,
    MalformedInput,
    MismatchedIds,
    ParseFailure,
    SimilarityMatrix,
    analyze,
    auto_lod,
    build_matrix,
    fnv1a64,
    gst_score,
    gst_tiles,
    jaccard,
    layout,
    normalize_matrix,
    sherlock_score,
    tfidf_cosine,
    tokenize,
)
from ._core import extract_from_html as _extract_from_html

__all__ = [
    "Corpus",
    "CorpusTooSmall",
    "Error",
    "IndexOutOfRange",
    "InvalidArticle",
    "InvalidConfig",
    "MalformedInput",
    "MismatchedIds",
    "ParseFailure",
    "SimilarityMatrix",
    "analyze",
    "analyze_file",
    "auto_lod",
    "build_matrix",
    "extract_from_html",
    "fnv1a64",
    "gst_score",
    "gst_tiles",
    "jaccard",
    "layout",
    "normalize_matrix",
    "sherlock_score",
    "tfidf_cosine",
    "tokenize",
]


def extract_from_html(html, url):
    """Article dict extracted from a news page."""
    return json.loads(_extract_from_html(html, url))


def analyze_file(path, config=None):
    """Runs the CLI pipeline on an article file; returns (matrix, layout) dicts."""
    with open(path, encoding="utf-8") as f:
        corpus = Corpus.from_json(f.read())
    text = json.dumps(config or {})
    matrix = analyze(corpus, text)
    return json.loads(matrix.to_json()), json.loads(layout(matrix, corpus, text))
