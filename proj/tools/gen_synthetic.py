#!/usr/bin/env python3
# Copyright 2026 The FairCC Authors.
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

"""Writes the two synthetic tabular datasets used by the trend test.

Rows come from a handful of latent groups. Each group has a prototype for
every attribute and a skewed share of the protected value, so similarity
clusters end up color-imbalanced. The first data row always carries the
minority protected value, which makes it color 0 after ingestion.
"""

import argparse
import csv
import json
import os
import random


def make_rows(rng, n, groups, columns, protected, minority_share):
    protos = []
    for _ in range(groups):
        proto = {}
        for name, kind, values in columns:
            if kind == "categorical":
                proto[name] = rng.choice(values)
            else:
                proto[name] = rng.uniform(*values)
        protos.append(proto)

    rows = []
    for i in range(n):
        g = rng.randrange(groups)
        row = {"id": str(i + 1)}
        for name, kind, values in columns:
            if kind == "categorical":
                row[name] = (protos[g][name] if rng.random() < 0.8 else
                             rng.choice(values))
            else:
                lo, hi = values
                x = protos[g][name] + rng.gauss(0.0, (hi - lo) * 0.08)
                row[name] = str(round(min(hi, max(lo, x))))
        share = minority_share[g]
        row[protected[0]] = protected[1] if rng.random() < share else protected[2]
        rows.append(row)
    # Put a minority row first so it becomes color 0.
    first = next(i for i, r in enumerate(rows) if r[protected[0]] == protected[1])
    rows.insert(0, rows.pop(first))
    for i, r in enumerate(rows):
        r["id"] = str(i + 1)
    return rows


DATASETS = {
    "bank": dict(
        n=600, groups=5, seed=20260101,
        columns=[
            ("job", "categorical", ["admin", "technician", "services",
                                    "management", "retired", "student"]),
            ("contact", "categorical", ["cellular", "telephone", "unknown"]),
            ("education", "categorical", ["primary", "secondary", "tertiary"]),
            ("age", "numeric", (18, 90)),
            ("balance", "numeric", (0, 20000)),
        ],
        protected=("marital", "single", "not_single"),
        minority_share=[0.15, 0.25, 0.45, 0.6, 0.3],
    ),
    "adult": dict(
        n=600, groups=6, seed=20260202,
        columns=[
            ("workclass", "categorical", ["private", "self-emp", "gov",
                                          "without-pay"]),
            ("occupation", "categorical", ["craft", "sales", "exec", "clerical",
                                           "service", "tech"]),
            ("relationship", "categorical", ["husband", "wife", "own-child",
                                             "unmarried"]),
            ("age", "numeric", (17, 90)),
            ("hours", "numeric", (1, 99)),
        ],
        protected=("sex", "female", "male"),
        minority_share=[0.1, 0.2, 0.5, 0.65, 0.35, 0.25],
    ),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="tests/data")
    args = parser.parse_args()
    os.makedirs(args.out_dir, exist_ok=True)
    for name, cfg in DATASETS.items():
        rng = random.Random(cfg["seed"])
        rows = make_rows(rng, cfg["n"], cfg["groups"], cfg["columns"],
                         cfg["protected"], cfg["minority_share"])
        header = ["id"] + [c[0] for c in cfg["columns"]] + [cfg["protected"][0]]
        with open(os.path.join(args.out_dir, name + ".csv"), "w",
                  newline="") as f:
            writer = csv.DictWriter(f, fieldnames=header, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        schema = {"columns": [{"name": "id", "kind": "id"}] +
                  [{"name": c[0], "kind": c[1]} for c in cfg["columns"]] +
                  [{"name": cfg["protected"][0], "kind": "protected"}]}
        with open(os.path.join(args.out_dir, name + ".schema.json"), "w") as f:
            json.dump(schema, f, indent=2)
            f.write("\n")


if __name__ == "__main__":
    main()
