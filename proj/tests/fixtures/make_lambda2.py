# Copyright 2026 The pbe Authors. All Rights Reserved.
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
"""Writes lambda2.jsonl: ten classic list functions, 10 train + 5 holdout
examples each. Outputs come from the Python definitions below, so the file is
an oracle that shares no code with the C++ interpreter.

    python3 make_lambda2.py > lambda2.jsonl
"""
import json
import random


def dedup(xs):
    out = []
    for x in xs:
        if x not in out:
            out.append(x)
    return out


def dropmax(xs):
    return [x for x in xs if x != max(xs)] if xs else []


FUNCTIONS = {
    "dedup": dedup,
    "reverse": lambda xs: xs[::-1],
    "droplast": lambda xs: xs[:-1],
    "dropmax": dropmax,
    "dupli": lambda xs: [y for x in xs for y in (x, x)],
    "evens": lambda xs: [x for x in xs if x % 2 == 0],
    "multfirst": lambda xs: [xs[0]] * len(xs),
    "multlast": lambda xs: [xs[-1]] * len(xs),
    "shiftl": lambda xs: xs[1:] + xs[:1],
    "shiftr": lambda xs: xs[-1:] + xs[:-1],
}


def main():
    rng = random.Random(20240917)
    for name, fn in FUNCTIONS.items():
        examples = []
        seen = set()
        while len(examples) < 15:
            n = rng.randint(1, 8)
            # small range so duplicates and repeated maxima are common
            xs = [rng.randint(-9, 9) for _ in range(n)]
            if tuple(xs) in seen:
                continue
            seen.add(tuple(xs))
            examples.append({"in": xs, "out": fn(xs)})
        task = {"id": "lambda2-" + name, "domain": "list",
                "train": examples[:10], "holdout": examples[10:],
                "match": {"kind": "exact"}}
        print(json.dumps(task, separators=(",", ":")))


if __name__ == "__main__":
    main()
