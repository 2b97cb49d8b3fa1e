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

"""Converts public graph datasets into the nodeunlearn interchange layout.

Supported sources:
  planetoid  directory with ind.<name>.{x,tx,allx,y,ty,ally,graph,test.index}
             (cora, citeseer)
  coauthor   directory with <name>.npz in the Shchur et al. layout (cs)
"""

import hashlib
import json
import os
import pickle
from dataclasses import asdict, dataclass, field

import networkx as nx
import numpy as np
import scipy.sparse as sp

# nodes, raw edge records, features, classes
EXPECTED = {
    "cora": (2708, 5429, 1433, 7),
    "citeseer": (3327, 4732, 3703, 6),
    "cs": (18333, 163788, 6805, 15),
}

EMITTED = ("meta.json", "features.csv", "labels.csv", "edges.csv", "split.json")


class ConversionError(Exception):
    pass


@dataclass
class ConversionManifest:
    name: str
    source_format: str
    nodes: int
    raw_edges: int
    edges: int
    features: int
    classes: int
    train: int
    test: int
    checksums: dict = field(default_factory=dict)


@dataclass
class RawGraph:
    features: np.ndarray
    labels: np.ndarray
    labeled: np.ndarray  # bool mask; unlabeled nodes stay out of the split
    pairs: set
    raw_edges: int
    source_format: str


def _load_pickle(path):
    with open(path, "rb") as f:
        return pickle.load(f, encoding="latin1")


def read_planetoid(source, name):
    parts = {}
    for key in ("x", "tx", "allx", "y", "ty", "ally", "graph"):
        parts[key] = _load_pickle(os.path.join(source, f"ind.{name}.{key}"))
    with open(os.path.join(source, f"ind.{name}.test.index"), encoding="utf-8") as f:
        test_index = [int(line) for line in f if line.strip()]
    test_sorted = np.sort(test_index)

    tx, ty = parts["tx"], parts["ty"]
    # Citeseer lists test ids with gaps; the missing ids become unlabeled,
    # featureless nodes so that the node count matches the distribution.
    span = test_sorted[-1] - test_sorted[0] + 1
    if span != len(test_index):
        tx_full = sp.lil_matrix((span, tx.shape[1]))
        tx_full[test_sorted - test_sorted[0], :] = tx
        tx = tx_full
        ty_full = np.zeros((span, ty.shape[1]))
        ty_full[test_sorted - test_sorted[0], :] = ty
        ty = ty_full

    features = sp.vstack((parts["allx"], tx)).tolil()
    features[test_index, :] = features[test_sorted, :]
    onehot = np.vstack((parts["ally"], ty))
    onehot[test_index, :] = onehot[test_sorted, :]

    labeled = onehot.sum(axis=1) > 0
    labels = np.where(labeled, onehot.argmax(axis=1), 0)
    graph = nx.from_dict_of_lists(parts["graph"])
    pairs = {(min(u, v), max(u, v)) for u, v in graph.edges() if u != v}
    return RawGraph(np.asarray(features.todense(), dtype=np.float64), labels, labeled,
                    pairs, graph.number_of_edges(), "planetoid")


def read_coauthor(source, name):
    path = os.path.join(source, f"{name}.npz")
    with np.load(path, allow_pickle=True) as z:
        adj = sp.csr_matrix((z["adj_data"], z["adj_indices"], z["adj_indptr"]),
                            shape=tuple(z["adj_shape"]))
        attr = sp.csr_matrix((z["attr_data"], z["attr_indices"], z["attr_indptr"]),
                             shape=tuple(z["attr_shape"]))
        labels = np.asarray(z["labels"], dtype=np.int64)
    coo = adj.tocoo()
    pairs = {(min(u, v), max(u, v)) for u, v in zip(coo.row.tolist(), coo.col.tolist())
             if u != v}
    return RawGraph(attr.toarray().astype(np.float64), labels,
                    np.ones(len(labels), dtype=bool), pairs, int(adj.nnz), "coauthor")


def row_normalize(features):
    sums = features.sum(axis=1, keepdims=True)
    sums[sums == 0] = 1.0
    return features / sums


def split_nodes(labeled, train_frac, seed):
    ids = np.flatnonzero(labeled)
    rng = np.random.default_rng(seed)
    rng.shuffle(ids)
    cut = int(round(train_frac * len(ids)))
    return sorted(ids[:cut].tolist()), sorted(ids[cut:].tolist())


def _sha256(path):
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(1 << 20), b""):
            h.update(block)
    return h.hexdigest()


def write_interchange(out_dir, name, raw, train, test, num_classes):
    os.makedirs(out_dir, exist_ok=True)
    n, d = raw.features.shape
    with open(os.path.join(out_dir, "meta.json"), "w", encoding="utf-8") as f:
        json.dump({"n": n, "d": d, "num_classes": num_classes, "name": name}, f,
                  indent=2, sort_keys=True)
        f.write("\n")
    with open(os.path.join(out_dir, "features.csv"), "w", encoding="utf-8") as f:
        f.write(",".join(f"f{k}" for k in range(d)) + "\n")
        for row in raw.features:
            f.write(",".join("0" if v == 0 else repr(float(v)) for v in row) + "\n")
    with open(os.path.join(out_dir, "labels.csv"), "w", encoding="utf-8") as f:
        f.write("id,label\n")
        for i, label in enumerate(raw.labels.tolist()):
            f.write(f"{i},{label}\n")
    with open(os.path.join(out_dir, "edges.csv"), "w", encoding="utf-8") as f:
        f.write("src,dst\n")
        for u, v in sorted(raw.pairs):
            f.write(f"{u},{v}\n")
    with open(os.path.join(out_dir, "split.json"), "w", encoding="utf-8") as f:
        json.dump({"test": test, "train": train}, f, separators=(",", ":"), sort_keys=True)
        f.write("\n")


def convert(source, out_dir, name, train_frac=0.9, seed=0, normalize=True):
    name = name.lower()
    if name not in EXPECTED:
        raise ConversionError(f"unknown dataset '{name}'")
    raw = read_coauthor(source, name) if name == "cs" else read_planetoid(source, name)
    if normalize:
        raw.features = row_normalize(raw.features)
    num_classes = int(raw.labels[raw.labeled].max()) + 1
    n, d = raw.features.shape
    got = (n, raw.raw_edges, d, num_classes)
    if got != EXPECTED[name]:
        raise ConversionError(
            f"{name}: counts (nodes, edges, features, classes) = {got}, "
            f"expected {EXPECTED[name]}")

    train, test = split_nodes(raw.labeled, train_frac, seed)
    write_interchange(out_dir, name, raw, train, test, num_classes)
    manifest = ConversionManifest(
        name=name, source_format=raw.source_format, nodes=n, raw_edges=raw.raw_edges,
        edges=len(raw.pairs), features=d, classes=num_classes, train=len(train),
        test=len(test),
        checksums={f: _sha256(os.path.join(out_dir, f)) for f in EMITTED})
    with open(os.path.join(out_dir, "manifest.json"), "w", encoding="utf-8") as f:
        json.dump(asdict(manifest), f, indent=2, sort_keys=True)
        f.write("\n")
    return manifest
