#!/usr/bin/env python3
"""Count the sample edge list the slow way and write the sidecar.

Deliberately independent of the library: plain line splitting, a dict of
normalized triples, no shared code. Re-run after editing the fixture:

    python3 tests/fixtures/make_sidecar.py
"""
import json
import os

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURE = os.path.join(HERE, "snap_sample.txt")
SIDECAR = os.path.join(HERE, "snap_sample.json")


def main():
    data_lines = 0
    self_loops = 0
    duplicates = 0
    triples = set()
    vertices = set()
    times = []
    with open(FIXTURE) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            a, b, t = line.split()
            u, v, t = int(a), int(b), int(t)
            data_lines += 1
            vertices.add(u)
            vertices.add(v)
            if u == v:
                self_loops += 1
                continue
            key = (min(u, v), max(u, v), t)
            if key in triples:
                duplicates += 1
                continue
            triples.add(key)
            times.append(t)
    counts = {
        "data_lines": data_lines,
        "self_loops": self_loops,
        "duplicates": duplicates,
        "unique_edges": len(triples),
        "vertices": len(vertices),
        "t_min": min(times),
        "t_max": max(times),
    }
    with open(SIDECAR, "w") as fh:
        json.dump(counts, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(json.dumps(counts, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
