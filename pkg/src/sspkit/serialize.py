"""JSON wire formats and DOT export.

Labels may be ints, strings, or (nested) tuples of those; tuples travel as
JSON arrays and come back as tuples. All writers emit sorted keys and
two-space indentation so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Any, Sequence

from .families import Poset, build_relation_graph
from .geometry import Inequality, make_inequality, normalized_int_form
from .graphs import GroundSet, Label, SimpleGraph
from .matroids import (
    Matroid,
    build_graphic,
    build_partition,
    build_uniform,
)
from .skeleton import Skeleton, ZeroOnePolytope


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def encode_label(lab: Label) -> Any:
    if isinstance(lab, tuple):
        return [encode_label(x) for x in lab]
    return lab


def decode_label(obj: Any) -> Label:
    if isinstance(obj, list):
        return tuple(decode_label(x) for x in obj)
    return obj


def graph_to_json(g: SimpleGraph) -> dict:
    labels = g.ground.labels
    return {
        "labels": [encode_label(x) for x in labels],
        "edges": [
            [encode_label(labels[i]), encode_label(labels[j])]
            for i, j in g.edges()
        ],
    }


def graph_from_json(obj: dict) -> SimpleGraph:
    labels = [decode_label(x) for x in obj["labels"]]
    edges = [(decode_label(a), decode_label(b)) for a, b in obj["edges"]]
    return SimpleGraph.from_edges(labels, edges)


def polytope_to_json(p: ZeroOnePolytope) -> dict:
    out: dict[str, Any] = {
        "kind": p.kind,
        "ground": [encode_label(x) for x in p.ground.labels],
        "vertices": [
            [encode_label(x) for x in p.ground.labels_of(v)]
            for v in p.vertices
        ],
        "rank": p.rank,
    }
    if p.graph is not None:
        out["graph"] = {
            "edges": graph_to_json(p.graph)["edges"],
        }
    return out


def polytope_from_json(obj: dict) -> ZeroOnePolytope:
    ground = GroundSet(decode_label(x) for x in obj["ground"])
    vertices = [
        ground.mask_of(decode_label(x) for x in subset)
        for subset in obj["vertices"]
    ]
    graph = None
    if "graph" in obj:
        edges = [
            (decode_label(a), decode_label(b)) for a, b in obj["graph"]["edges"]
        ]
        graph = SimpleGraph.from_edges(ground.labels, edges)
    return ZeroOnePolytope(
        ground, vertices, obj["kind"], graph=graph, rank=obj.get("rank")
    )


def skeleton_to_json(p: ZeroOnePolytope, s: Skeleton) -> dict:
    if s.vertex_count != len(p.vertices):
        raise ValueError("skeleton does not match the polytope")
    return {
        "vertices": [
            [encode_label(x) for x in p.ground.labels_of(v)]
            for v in p.vertices
        ],
        "edges": [[i, j] for i, j in s.edges],
        "provenance": s.provenance,
    }


def skeleton_from_json(obj: dict) -> tuple[list[tuple[Label, ...]], Skeleton]:
    verts = [
        tuple(decode_label(x) for x in subset) for subset in obj["vertices"]
    ]
    s = Skeleton.make(
        len(verts), [(i, j) for i, j in obj["edges"]], obj["provenance"]
    )
    return verts, s


def facets_to_json(facets: Sequence[Inequality]) -> dict:
    out = []
    for q in facets:
        coeffs, rhs = normalized_int_form(q)
        out.append({"coeffs": list(coeffs), "rhs": rhs})
    return {"facets": out}


def facets_from_json(obj: dict) -> list[Inequality]:
    return [
        make_inequality(item["coeffs"], item["rhs"]) for item in obj["facets"]
    ]


def matroid_to_json(m: Matroid) -> dict:
    return {
        "ground": [encode_label(x) for x in m.ground.labels],
        "independents": [
            [encode_label(x) for x in m.ground.labels_of(s)]
            for s in m.independents
        ],
    }


def matroid_from_json(obj: dict) -> Matroid:
    if "uniform" in obj:
        n, k = obj["uniform"]
        return build_uniform(n, k)
    if "partition" in obj:
        return build_partition(list(obj["partition"]))
    if "graphic" in obj:
        edges = [tuple(decode_label(x) for x in e) for e in obj["graphic"]]
        return build_graphic(edges)
    ground = GroundSet(decode_label(x) for x in obj["ground"])
    fam = [
        ground.mask_of(decode_label(x) for x in subset)
        for subset in obj["independents"]
    ]
    return Matroid(ground, fam)


def relation_graph_from_json(obj: dict) -> SimpleGraph:
    labels = [decode_label(x) for x in obj["labels"]]
    pairs = [(decode_label(a), decode_label(b)) for a, b in obj["pairs"]]
    return build_relation_graph(labels, pairs)


def poset_from_json(obj: dict) -> Poset:
    labels = [decode_label(x) for x in obj["labels"]]
    pairs = [(decode_label(a), decode_label(b)) for a, b in obj["less_than"]]
    return Poset.from_relation(labels, pairs)


def _dot_name(subset: Sequence[Label]) -> str:
    inner = ",".join(str(x) for x in subset)
    return "{" + inner + "}"


def skeleton_to_dot(vertices: Sequence[Sequence[Label]], s: Skeleton) -> str:
    """Undirected DOT graph; node names are the subset labels."""
    lines = ["graph skeleton {"]
    lines.append(f'  // provenance: {s.provenance}')
    for i, subset in enumerate(vertices):
        lines.append(f'  v{i} [label="{_dot_name(subset)}"];')
    for i, j in s.edges:
        lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
