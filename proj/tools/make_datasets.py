#!/usr/bin/env python3
"""Regenerates the bundled CSV datasets under data/.

iris, wine and breast_cancer are the small UCI sets shipped with
scikit-learn. blobs is a synthetic benchmark of overlapping Gaussian
classes drawn with a fixed seed.
"""
import csv
import pathlib

import numpy as np
from sklearn import datasets

OUT = pathlib.Path(__file__).resolve().parent.parent / "data"


def write(name, features, labels, feature_names):
    path = OUT / f"{name}.csv"
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(list(feature_names) + ["label"])
        for row, label in zip(features, labels):
            w.writerow([repr(float(v)) for v in row] + [label])
    print(f"{path}: n={len(labels)} m={features.shape[1]} k={len(set(labels))}")


def check_consistent(features, labels):
    seen = {}
    for row, label in zip(features, labels):
        key = tuple(row)
        if seen.setdefault(key, label) != label:
            raise SystemExit(f"contradictory duplicate: {key}")


def sklearn_set(name, loader):
    ds = loader()
    labels = [str(ds.target_names[t]).replace(" ", "_") for t in ds.target]
    names = [str(n).replace(" ", "_") for n in ds.feature_names]
    check_consistent(ds.data, labels)
    write(name, ds.data, labels, names)


def blobs():
    rng = np.random.default_rng(20240917)
    centers = np.array([[0.0, 0.0, 0.0, 0.0],
                        [1.6, 1.0, 0.0, 0.5],
                        [0.4, 2.0, 1.2, 0.0]])
    per_class = 200
    features, labels = [], []
    for c, center in enumerate(centers):
        pts = center + rng.normal(scale=1.0, size=(per_class, centers.shape[1]))
        features.append(np.round(pts, 4))
        labels += [f"c{c}"] * per_class
    features = np.vstack(features)
    check_consistent(features, labels)
    write("blobs", features, labels, [f"x{i}" for i in range(features.shape[1])])


if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    sklearn_set("iris", datasets.load_iris)
    sklearn_set("wine", datasets.load_wine)
    sklearn_set("breast_cancer", datasets.load_breast_cancer)
    blobs()
