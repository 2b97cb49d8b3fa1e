# Copyright 2026 The nodeunlearn Authors.
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

import json
import os
import pickle
import subprocess
from collections import defaultdict

import numpy as np
import pytest
import scipy.sparse as sp

from nodeunlearn_dataprep import convert as convert_mod
from nodeunlearn_dataprep.cli import main


def write_fake_planetoid(root, name, with_gap):
    # 6 training-pool nodes, then test ids 6..9 with id 8 missing when
    # with_gap, as in the citeseer distribution.
    rng = np.random.default_rng(1)
    d, c = 5, 3
    test_index = [9, 6, 7] if with_gap else [9, 6, 8, 7]
    allx = sp.csr_matrix(rng.integers(0, 2, (6, d)).astype(float))
    tx = sp.csr_matrix(rng.integers(0, 2, (len(test_index), d)).astype(float))
    ally = np.eye(c)[[0, 1, 2, 0, 1, 2]]
    ty = np.eye(c)[[(i % c) for i in range(len(test_index))]]
    graph = defaultdict(list)
    for u, v in [(0, 1), (1, 2), (2, 3), (3, 6), (6, 7), (7, 9), (4, 4), (5, 0)]:
        graph[u].append(v)
        graph[v].append(u)
    parts = {"x": allx[:3], "tx": tx, "allx": allx, "y": ally[:3], "ty": ty,
             "ally": ally, "graph": dict(graph)}
    for key, value in parts.items():
        with open(os.path.join(root, f"ind.{name}.{key}"), "wb") as f:
            pickle.dump(value, f)
    with open(os.path.join(root, f"ind.{name}.test.index"), "w") as f:
        f.write("\n".join(map(str, test_index)) + "\n")


@pytest.fixture
def fake_counts(monkeypatch):
    # nodes, raw edges (self loop counted once), features, classes
    monkeypatch.setitem(convert_mod.EXPECTED, "citeseer", (10, 8, 5, 3))
    monkeypatch.setitem(convert_mod.EXPECTED, "cora", (10, 8, 5, 3))


def read_csv_rows(path):
    with open(path) as f:
        return [line.rstrip("\n").split(",") for line in f][1:]


def test_convert_fills_gaps_and_writes_layout(tmp_path, fake_counts):
    src = tmp_path / "src"
    src.mkdir()
    write_fake_planetoid(src, "citeseer", with_gap=True)
    out = tmp_path / "out"
    m = convert_mod.convert(str(src), str(out), "citeseer", seed=3)
    assert (m.nodes, m.features, m.classes) == (10, 5, 3)
    assert m.edges == 7  # self loop dropped
    edges = [tuple(map(int, r)) for r in read_csv_rows(out / "edges.csv")]
    assert edges == sorted(edges)
    assert all(u < v for u, v in edges)
    split = json.loads((out / "split.json").read_text())
    assert 8 not in split["train"] + split["test"]
    assert len(split["train"]) + len(split["test"]) == 9
    features = read_csv_rows(out / "features.csv")
    assert features[8] == ["0"] * 5
    meta = json.loads((out / "meta.json").read_text())
    assert meta == {"n": 10, "d": 5, "num_classes": 3, "name": "citeseer"}


def test_rerun_is_byte_identical(tmp_path, fake_counts):
    src = tmp_path / "src"
    src.mkdir()
    write_fake_planetoid(src, "cora", with_gap=False)
    a = convert_mod.convert(str(src), str(tmp_path / "a"), "cora")
    b = convert_mod.convert(str(src), str(tmp_path / "b"), "cora")
    assert a.checksums == b.checksums


def test_count_mismatch_is_fatal(tmp_path, monkeypatch):
    monkeypatch.setitem(convert_mod.EXPECTED, "cora", (10, 9, 5, 3))
    src = tmp_path / "src"
    src.mkdir()
    write_fake_planetoid(src, "cora", with_gap=False)
    with pytest.raises(convert_mod.ConversionError):
        convert_mod.convert(str(src), str(tmp_path / "out"), "cora")
    assert main(["convert", "--source", str(src), "--out", str(tmp_path / "o"),
                 "--name", "cora"]) == 1


def test_primary_loader_accepts_output(tmp_path, fake_counts):
    cli = os.environ.get("NODEUNLEARN_CLI")
    if not cli:
        pytest.skip("NODEUNLEARN_CLI not set")
    src = tmp_path / "src"
    src.mkdir()
    write_fake_planetoid(src, "citeseer", with_gap=True)
    out = tmp_path / "ds"
    convert_mod.convert(str(src), str(out), "citeseer")
    run = subprocess.run([cli, "train", "--set", f"dataset={out}", "--set", "eval.mia=false",
                          "--out", str(tmp_path / "run")], capture_output=True, text=True)
    assert run.returncode == 0, run.stderr
