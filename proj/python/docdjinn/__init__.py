# Copyright 2026 The DocDjinn Authors.
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

"""Python bindings for the docdjinn document synthesis toolkit."""

import json as _json

from ._core import (
    Error,
    FrechetError,
    cluster_probabilities,
    estimate_baseline,
    final_score,
    fit_gaussian,
    frechet_distance,
    nls,
    normalized_entropy,
    percentile,
    segment_word,
)
from . import _core

__all__ = [
    "Error",
    "FrechetError",
    "cluster_probabilities",
    "estimate_baseline",
    "final_score",
    "fit_gaussian",
    "frechet_distance",
    "load_definition",
    "nls",
    "normalized_entropy",
    "percentile",
    "run_stub",
    "segment_word",
]


def load_definition(path):
    """Parsed dataset definition as a dict."""
    return _json.loads(_core._load_definition(str(path)))


def run_stub(config, out_dir, seed=0, target=0, workers=1, max_calls=0):
    """Runs the pipeline on offline stub backends; returns the run summary."""
    return _json.loads(
        _core._run_stub(str(config), str(out_dir), seed=seed, target=target,
                        workers=workers, max_calls=max_calls))
