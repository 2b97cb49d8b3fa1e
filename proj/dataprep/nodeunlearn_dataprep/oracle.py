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

"""Reference values for the C++ tests, computed with numpy/scikit-learn."""

import json

import numpy as np
from sklearn.metrics import roc_auc_score


def mat(a):
    a = np.asarray(a, dtype=np.float64)
    return {"rows": a.shape[0], "cols": a.shape[1], "data": a.ravel().tolist()}


def pinv_cases(rng):
    cases = [
        np.eye(2),
        np.array([[1.0, 2.0], [2.0, 4.0]]),
        np.zeros((3, 2)),
        np.diag([3.0, 1e-3, 0.0]),
    ]
    for rows, cols in [(5, 3), (3, 5), (7, 16), (16, 7), (4, 4)]:
        cases.append(rng.standard_normal((rows, cols)))
    for rows, cols, rank in [(6, 4, 2), (4, 6, 1), (5, 5, 3)]:
        cases.append(rng.standard_normal((rows, rank)) @ rng.standard_normal((rank, cols)))
    return [{"a": mat(a), "pinv": mat(np.linalg.pinv(a, rcond=1e-10))} for a in cases]


def softmax(x):
    x = np.asarray(x, dtype=np.float64)
    e = np.exp(x - x.max())
    return e / e.sum()


def kl(p, q):
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    mask = p > 0
    return float(np.sum(p[mask] * np.log(p[mask] / q[mask])))


def cross_entropy(logits, label):
    logits = np.asarray(logits, dtype=np.float64)
    m = logits.max()
    return float(m + np.log(np.exp(logits - m).sum()) - logits[label])


def normalized_adjacency(n, edges):
    a = np.eye(n)
    for u, v in edges:
        a[u, v] = a[v, u] = 1.0
    d = 1.0 / np.sqrt(a.sum(axis=1))
    return d[:, None] * a * d[None, :]


def mlp_case(rng):
    dims = [3, 4, 2]
    layers = []
    for din, dout in zip(dims[:-1], dims[1:]):
        layers.append((rng.standard_normal((dout, din)), rng.standard_normal(dout)))
    x = rng.standard_normal((5, dims[0]))
    h = x
    for k, (w, b) in enumerate(layers):
        h = h @ w.T + b
        if k + 1 < len(layers):
            h = np.maximum(h, 0.0)
    return {
        "layers": [{"weight": mat(w), "bias": b.tolist()} for w, b in layers],
        "input": mat(x),
        "output": mat(h),
    }


def backbone_cases(rng):
    path = [(0, 1), (1, 2), (2, 3)]
    a = normalized_adjacency(4, path)
    x = rng.standard_normal((4, 3))
    w1 = rng.standard_normal((3, 5))
    w2 = rng.standard_normal((5, 2))
    hidden = np.maximum(a @ x @ w1, 0.0)
    gcn = {
        "edges": path, "features": mat(x), "w1": mat(w1), "w2": mat(w2),
        "adjacency": mat(a), "hidden": mat(hidden), "logits": mat(a @ hidden @ w2),
    }
    w = rng.standard_normal((3, 2))
    prop = a @ a @ x
    sgc_path = {"edges": path, "features": mat(x), "w": mat(w), "k_hops": 2,
                "hidden": mat(prop), "logits": mat(prop @ w)}
    tri = [(0, 1), (0, 2), (1, 2)]
    at = normalized_adjacency(3, tri)
    xt = np.eye(3)
    sgc_triangle = {"edges": tri, "features": mat(xt), "k_hops": 2,
                    "hidden": mat(at @ at @ xt), "adjacency": mat(at)}
    return gcn, sgc_path, sgc_triangle


def adam_case():
    lr, b1, b2, eps, wd = 0.1, 0.9, 0.999, 1e-8, 0.01
    p = np.array([1.0, -2.0, 0.5])
    grads = [np.array([0.3, -0.1, 0.0]), np.array([0.2, 0.4, -1.0]),
             np.array([-0.5, 0.1, 2.0])]
    m = np.zeros(3)
    v = np.zeros(3)
    trace = []
    for t, g in enumerate(grads, start=1):
        g = g + wd * p
        m = b1 * m + (1 - b1) * g
        v = b2 * v + (1 - b2) * g * g
        mhat = m / (1 - b1 ** t)
        vhat = v / (1 - b2 ** t)
        p = p - lr * mhat / (np.sqrt(vhat) + eps)
        trace.append(p.tolist())
    return {"learning_rate": lr, "weight_decay": wd, "initial": [1.0, -2.0, 0.5],
            "grads": [g.tolist() for g in grads], "params": trace}


def auc_cases(rng):
    out = []
    for n_pos, n_neg in [(5, 20), (30, 70)]:
        pos = rng.integers(0, 6, n_pos).astype(float)
        neg = rng.integers(0, 5, n_neg).astype(float)
        y = np.r_[np.ones(n_pos), np.zeros(n_neg)]
        out.append({"positive": pos.tolist(), "negative": neg.tolist(),
                    "auc": float(roc_auc_score(y, np.r_[pos, neg]))})
    return out


def kde_case(rng):
    pts = np.c_[rng.uniform(0, 4, 12), rng.uniform(0, np.pi, 12)]
    h = 0.7
    queries = np.c_[rng.uniform(-1, 5, 6), rng.uniform(-1, 4, 6)]
    dens = []
    for q in queries:
        d2 = ((pts - q) ** 2).sum(axis=1)
        dens.append(float(np.exp(-d2 / (2 * h * h)).sum() / (2 * np.pi * len(pts) * h * h)))
    return {"points": pts.tolist(), "bandwidth": h, "queries": queries.tolist(),
            "density": dens}


def build_fixtures():
    rng = np.random.default_rng(20260101)

    gcn, sgc_path, sgc_triangle = backbone_cases(rng)
    fixtures = {
        "pinv": pinv_cases(rng),
        "softmax": [
            {"logits": [0.0, 0.0], "probs": softmax([0, 0]).tolist()},
            {"logits": [1000.0] * 3, "probs": softmax([1000.0] * 3).tolist()},
            {"logits": [0.0, float(np.log(3.0))],
             "probs": softmax([0.0, np.log(3.0)]).tolist()},
        ],
        "kl": [
            {"p": [0.5, 0.5], "q": [0.25, 0.75], "value": kl([0.5, 0.5], [0.25, 0.75])},
            {"p": [1.0, 0.0], "q": [0.5, 0.5], "value": kl([1.0, 0.0], [0.5, 0.5])},
        ],
        "cross_entropy": [
            {"logits": [0.0, 0.0], "label": 0, "value": cross_entropy([0, 0], 0)},
            {"logits": [10.0, -10.0], "label": 0, "value": cross_entropy([10, -10], 0)},
            {"logits": [1.0, 2.0, 3.0], "label": 2, "value": cross_entropy([1, 2, 3], 2)},
        ],
        "mlp": mlp_case(rng),
        "gcn": gcn,
        "sgc_path": sgc_path,
        "sgc_triangle": sgc_triangle,
        "adam": adam_case(),
        "auc": auc_cases(rng),
        "kde": kde_case(rng),
    }
    return fixtures


def write_fixtures(path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(build_fixtures(), f, indent=1, sort_keys=True)
        f.write("\n")
