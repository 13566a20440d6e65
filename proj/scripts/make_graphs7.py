#!/usr/bin/env python3
"""Writes data/graphs7.g6: every graph on 7 vertices up to isomorphism.

The list comes from the networkx graph atlas, so it is independent of the
library's own enumerator.
"""
import pathlib
import sys

import networkx as nx


def main() -> int:
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "data/graphs7.g6")
    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 7]
    with out.open("w", newline="\n") as f:
        for g in graphs:
            f.write(nx.to_graph6_bytes(g, header=False).decode("ascii").strip() + "\n")
    print(f"wrote {len(graphs)} graphs to {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
