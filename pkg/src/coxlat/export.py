"""JSON and DOT serialisation of lattices, congruences and homomorphisms."""

from __future__ import annotations

import json

from .lattice import Lattice


def _label(L, lab) -> str:
    if lab is None:
        return ""
    diagram = getattr(L, "diagram", None)
    if diagram is not None and isinstance(lab, int):
        return diagram.names[lab]
    return str(lab)


def lattice_to_dict(L: Lattice, polygons: bool = False) -> dict:
    diagram = getattr(L, "diagram", None)
    if diagram is not None:
        elements = [{"word": [diagram.names[s] for s in w], "inv_size": len(w)} for w in L.words]
        label = diagram.label
    else:
        elements = [{"word": L.names[i], "inv_size": L.rank[i]} for i in range(L.n)]
        label = ""
    out = {
        "type": label,
        "elements": elements,
        "covers": [[i, j, _label(L, lab)] for i, j, lab in L.covers()],
    }
    if polygons:
        out["polygons"] = [
            {"bottom": p.bottom, "top": p.top, "left": list(p.left), "right": list(p.right)}
            for p in L.polygons()
        ]
    return out


def congruence_to_dict(theta) -> dict:
    return {
        "classes": theta.classes(),
        "contracted_ji": sorted(int(j) for j in theta.contracted_ji()),
    }


def hom_to_dict(h) -> dict:
    return {"kind": h.kind, "map": [int(x) for x in h.map]}


def dumps(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True)


def to_dot(L: Lattice, name: str = "lattice", highlight=None, classes=None) -> str:
    """Hasse diagram with one rank per layer; ``classes`` colours congruence classes."""
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=box, fontsize=10];"]
    by_rank: dict[int, list[int]] = {}
    for i in range(L.n):
        by_rank.setdefault(L.rank[i], []).append(i)
    highlight = set(highlight or ())
    for r in sorted(by_rank):
        members = " ".join(f"n{i};" for i in by_rank[r])
        lines.append(f"  {{ rank=same; {members} }}")
    for i in range(L.n):
        attrs = [f'label="{L.names[i]}"']
        if i in highlight:
            attrs.append("style=filled, fillcolor=lightblue")
        if classes is not None:
            attrs.append(f'group="c{int(classes[i])}"')
        lines.append(f"  n{i} [{', '.join(attrs)}];")
    for i, j, lab in L.covers():
        style = ""
        if classes is not None and classes[i] == classes[j]:
            style = ", style=bold, color=red"
        lines.append(f'  n{i} -> n{j} [label="{_label(L, lab)}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(nodes, edges, name: str = "digraph") -> str:
    lines = [f'digraph "{name}" {{', "  node [shape=ellipse, fontsize=10];"]
    for k, label in enumerate(nodes):
        lines.append(f'  n{k} [label="{label}"];')
    for a, b in edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
