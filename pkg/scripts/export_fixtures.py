"""Write the poset and graph fixture suites as JSON input files.

Usage:
    python scripts/export_fixtures.py [--out fixtures]
"""

import argparse
import json
import string
from pathlib import Path

from orbitpoly.fixtures import graph_suite, poset_suite
from orbitpoly.formats import graph_to_json, group_to_json, poset_to_json


def names_for(k):
    return list(string.ascii_lowercase[:k])


def write(path, data):
    path.write_text(json.dumps(data, indent=2) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="fixtures")
    args = parser.parse_args()
    out = Path(args.out)
    (out / "posets").mkdir(parents=True, exist_ok=True)
    (out / "graphs").mkdir(parents=True, exist_ok=True)
    for case in poset_suite():
        names = names_for(case.poset.size)
        write(out / "posets" / f"{case.name}.poset.json", poset_to_json(case.poset, names))
        write(out / "posets" / f"{case.name}.group.json", group_to_json(case.group, names))
    for case in graph_suite():
        names = names_for(case.graph.vertex_count)
        write(out / "graphs" / f"{case.name}.graph.json", graph_to_json(case.graph, names))
        write(out / "graphs" / f"{case.name}.group.json", group_to_json(case.group, names))
    print(f"wrote {len(poset_suite())} poset and {len(graph_suite())} graph fixtures to {out}")


if __name__ == "__main__":
    main()
