"""JSON (de)serialization and the short reference syntax for algebras and modules.

Algebra references: ``gl:m,n``, ``w:n``, ``s:n`` or ``@file.json``.
Module references: ``trivial``, ``natural``, ``dual``, ``adjoint``,
``kac:<weight>``, ``dualkac:<weight>``, ``simple:<weight>`` (gl(1|1) only),
``@file.json``, and tensor products written ``A*B``.  Weights are
comma-separated rationals, one per cartan element.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .algebra import LieSuperalgebra, SuperSpace, build_gl, build_S, build_W
from .linalg import Mat, rat, rat_str
from .modules import Supermodule

_ALGEBRAS: dict[str, LieSuperalgebra] = {}


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def algebra_ref(g: LieSuperalgebra) -> Optional[str]:
    if g.kind and g.kind[0] == "gl":
        return f"gl:{g.kind[1]},{g.kind[2]}"
    if g.kind and g.kind[0] == "W":
        return f"w:{g.kind[1]}"
    if g.kind and g.kind[0] == "S":
        return f"s:{g.kind[1]}"
    return None


def parse_algebra(ref: str) -> LieSuperalgebra:
    """Algebra from a reference string; builders are memoised so modules share one object."""
    ref = ref.strip()
    if ref.startswith("@"):
        return algebra_from_json(json.loads(Path(ref[1:]).read_text()))
    key = ref.lower().replace(" ", "")
    got = _ALGEBRAS.get(key)
    if got is not None:
        return got
    tag, _, args = key.partition(":")
    try:
        nums = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise ValueError(f"bad algebra reference {ref!r}") from None
    if tag == "gl" and len(nums) == 2:
        g = build_gl(*nums)
    elif tag == "w" and len(nums) == 1:
        g = build_W(nums[0])
    elif tag == "s" and len(nums) == 1:
        g = build_S(nums[0], W=parse_algebra(f"w:{nums[0]}")).algebra
    else:
        raise ValueError(f"bad algebra reference {ref!r} (expected gl:m,n, w:n, s:n or @file.json)")
    _ALGEBRAS[key] = g
    return g


def algebra_to_json(g: LieSuperalgebra) -> dict:
    basis = []
    for i, lab in enumerate(g.labels):
        entry = {"label": lab, "parity": "odd" if g.parity[i] else "even"}
        if g.zdegree is not None:
            entry["zdegree"] = g.zdegree[i]
        basis.append(entry)
    brackets = [[i, j, [[k, rat_str(c)] for k, c in sorted(v.items())]] for (i, j), v in g.stored_brackets()]
    out = {"name": g.name, "basis": basis, "brackets": brackets, "cartan": [g.labels[h] for h in g.cartan]}
    ref = algebra_ref(g)
    if ref:
        out["ref"] = ref
    return out


def algebra_from_json(obj: dict) -> LieSuperalgebra:
    if "ref" in obj:
        return parse_algebra(obj["ref"])
    labels = tuple(b["label"] for b in obj["basis"])
    parity = tuple(1 if b["parity"] in ("odd", 1) else 0 for b in obj["basis"])
    zdeg = None
    if all("zdegree" in b for b in obj["basis"]):
        zdeg = tuple(int(b["zdegree"]) for b in obj["basis"])
    space = SuperSpace(labels, parity, zdeg)
    table = {}
    for i, j, vec in obj["brackets"]:
        table[(int(i), int(j))] = {int(k): rat(c) for k, c in vec}
    cartan = [labels.index(c) if isinstance(c, str) else int(c) for c in obj.get("cartan", [])]
    g = LieSuperalgebra(space, table, cartan=cartan, name=obj.get("name", ""))
    return g.verify()


def module_to_json(M: Supermodule) -> dict:
    g = M.algebra
    ref = algebra_ref(g)
    out = {
        "algebra": ref if ref else algebra_to_json(g),
        "basis": [{"label": l, "parity": "odd" if p else "even"} for l, p in zip(M.labels, M.parity)],
        "action": {g.labels[i]: M.action[i].to_json() for i in range(g.dim)},
        "name": M.name,
    }
    if M.weights is not None:
        out["weights"] = [[rat_str(c) for c in w] for w in M.weights]
    return out


def module_from_json(obj: dict, algebra: Optional[LieSuperalgebra] = None) -> Supermodule:
    ref = obj["algebra"]
    g = algebra_from_json(ref) if isinstance(ref, dict) else parse_algebra(ref)
    if algebra is not None:
        if algebra_ref(algebra) != algebra_ref(g) or algebra.labels != g.labels:
            raise ValueError("module file is over a different algebra")
        g = algebra
    labels = [b["label"] for b in obj["basis"]]
    parity = [1 if b["parity"] in ("odd", 1) else 0 for b in obj["basis"]]
    n = len(labels)
    action = []
    for lab in g.labels:
        m = obj["action"].get(lab)
        action.append(Mat.from_json(m) if m is not None else Mat.zeros(n, n))
    weights = None
    if obj.get("weights") is not None:
        weights = [tuple(rat(c) for c in w) for w in obj["weights"]]
    return Supermodule(g, SuperSpace(tuple(labels), tuple(parity)), action, weights=weights,
                       name=obj.get("name", ""))


def parse_weight(text: str) -> list:
    text = text.strip().replace("|", ",")
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return [rat(Fraction(t.strip())) for t in text.split(",") if t.strip()]


def parse_module(spec: str, g: LieSuperalgebra) -> Supermodule:
    from .modules import (adjoint_module, character_module, dual, dual_kac_module, kac_module,
                          natural_module, tensor, trivial_module)
    parts = [p.strip() for p in spec.split("*")]
    mods = []
    for part in parts:
        kind, _, arg = part.partition(":")
        kind = kind.lower()
        if part.startswith("@"):
            M = module_from_json(json.loads(Path(part[1:]).read_text()), algebra=g)
        elif kind == "trivial":
            M = trivial_module(g)
        elif kind == "natural":
            M = natural_module(g)
        elif kind == "dual":
            M = dual(natural_module(g))
        elif kind == "adjoint":
            M = adjoint_module(g)
        elif kind == "kac":
            M = kac_module(g, character_module(g, parse_weight(arg)))
        elif kind == "dualkac":
            M = dual_kac_module(g, character_module(g, parse_weight(arg)))
        elif kind == "simple":
            from .varieties import simple_module_gl11
            M = simple_module_gl11(g, parse_weight(arg))
        else:
            raise ValueError(f"unknown module {part!r}")
        M.name = M.name or part
        mods.append(M)
    out = mods[0]
    for M in mods[1:]:
        out = tensor(out, M)
    out.name = spec
    return out
