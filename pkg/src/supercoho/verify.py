"""Bundled verification suites.

Each suite returns a list of ``Check`` records (computed vs expected); failures
are reported, never raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .algebra import (basis_subalgebra, build_gl, build_S, build_W, detecting_e, detecting_f,
                      detecting_f_W, detecting_fbar, graded_part, normalizer_group_W)
from .cohomology import (build_relative_complex, giso_comparison, group_operator, invariant_cohomology_dims,
                         invariant_ring_dims, restriction, torus_action_on)
from .modules import (adjoint_module, character_module, degree_zero, direct_sum, dual, dual_kac_module,
                      kac_module, natural_module, tensor, trivial_module)
from .varieties import (atypicality, atypicality_bruteforce, probe_points, projectivity_in_category,
                        simple_module_gl11, support_variety, tensor_property_check)


@dataclass
class Check:
    name: str
    passed: bool
    computed: object
    expected: object

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "computed": self.computed, "expected": self.expected}


def _check(name, computed, expected) -> Check:
    return Check(name, computed == expected, computed, expected)


def _relative_even(sub):
    return basis_subalgebra(sub.algebra, sub.even_indices(), name=f"{sub.name}_0")


# ---------------------------------------------------------------------------
# module batteries

def battery_gl22(g) -> list:
    V = natural_module(g)
    Vd = dual(V)
    return [
        trivial_module(g), V, Vd,
        tensor(V, V), tensor(V, Vd), tensor(Vd, V), tensor(Vd, Vd),
        kac_module(g, character_module(g, (0, 0, 0, 0))),
        kac_module(g, character_module(g, (1, 1, 0, 0))),
        dual_kac_module(g, character_module(g, (0, 0, 0, 0))),
        dual_kac_module(g, character_module(g, (-1, -1, 1, 1))),
        adjoint_module(g),
    ]


def battery_gl11(g) -> list:
    V = natural_module(g)
    Vd = dual(V)
    return [
        trivial_module(g), V, Vd, tensor(V, V), tensor(V, Vd), tensor(Vd, Vd), adjoint_module(g),
        kac_module(g, character_module(g, (0, 0))),
        kac_module(g, character_module(g, (1, 0))),
        dual_kac_module(g, character_module(g, (-1, 1))),
        dual_kac_module(g, character_module(g, (-2, 2))),
    ]


# ---------------------------------------------------------------------------
# suites

def suite_gl11() -> list:
    g = build_gl(1, 1)
    g0 = degree_zero(g)
    out = []
    for k in range(7):
        K = dual_kac_module(g, character_module(g, (-k, k)))
        dims = build_relative_complex(g, g0, K, 7).cohomology().dims
        out.append(_check(f"H^n(gl(1|1), g0, K-(-{k}|{k})), n=0..6", dims, [1 if n == k else 0 for n in range(7)]))
    e, _ = detecting_e(g)
    K = dual_kac_module(g, character_module(g, (-1, 1)))
    r = restriction((g, g0), (e, _relative_even(e)), K, 6)
    out.append(_check("restriction to e, degree 1: injective", r.injective[1], False))
    out.append(_check("restriction to e, degree 1: kernel witness", 1 in r.kernel_witness, True))
    out.append(_check("H^1 over g and over e", [r.dims_g[1], r.dims_h[1]], [1, 0]))
    out.append(_check("restriction to e injective in degrees 2..5", r.injective[2:6], [True] * 4))
    return out


def suite_invariants() -> list:
    out = []
    g = build_gl(2, 2)
    odd = g.indices_of_parity(1)
    lie = invariant_ring_dims(len(odd), torus_action_on(g, odd, g.indices_of_degree(0)), None, 4)
    e, W = detecting_e(g)
    fin = invariant_ring_dims(len(e.odd_indices()), [], W, 4)
    coh = build_relative_complex(g, degree_zero(g), trivial_module(g), 5).cohomology().dims
    out.append(_check("gl(2|2): S(g1*)^g0 dims", lie, [1, 0, 1, 0, 2]))
    out.append(_check("gl(2|2): S(e1*)^W dims", fin, [1, 0, 1, 0, 2]))
    out.append(_check("gl(2|2): H^d(g, g0, C) dims", coh, [1, 0, 1, 0, 2]))
    g1 = build_gl(1, 1)
    odd = g1.indices_of_parity(1)
    lie1 = invariant_ring_dims(len(odd), torus_action_on(g1, odd, g1.indices_of_degree(0)), None, 4)
    coh1 = build_relative_complex(g1, degree_zero(g1), trivial_module(g1), 5).cohomology().dims
    e1, W1 = detecting_e(g1)
    fin1 = invariant_ring_dims(1, [], W1, 4)
    out.append(_check("gl(1|1): S(g1*)^g0 dims", lie1, [1, 0, 1, 0, 1]))
    out.append(_check("gl(1|1): S(e1*)^W dims", fin1, [1, 0, 1, 0, 1]))
    out.append(_check("gl(1|1): H^d(g, g0, C) dims", coh1, [1, 0, 1, 0, 1]))
    return out


def suite_jacobi() -> list:
    out = []
    algebras = [build_gl(1, 1), build_gl(2, 2), build_W(2), build_S(2).algebra, build_W(3)]
    for g in algebras:
        try:
            g.check_skew()
            g.check_parity()
            g.check_zgrading()
            n = g.check_jacobi()
            out.append(Check(f"{g.name}: skew, parity, grading, Jacobi", True, n, g.dim ** 3))
        except Exception as exc:  # reported, not raised
            out.append(Check(f"{g.name}: skew, parity, grading, Jacobi", False, str(exc), "no violation"))
    return out


def suite_injectivity_gl22(max_degree: int = 3) -> list:
    g = build_gl(2, 2)
    g0 = degree_zero(g)
    f = detecting_f(g)
    f0 = _relative_even(f)
    out = []
    for M in battery_gl22(g):
        r = restriction((g, g0), (f, f0), M, max_degree + 1)
        out.append(_check(f"res to f injective, degrees 1..{max_degree}: {M.name}",
                          r.injective[1:max_degree + 1], [True] * max_degree))
    return out


def suite_giso(max_degree: int = 3) -> list:
    out = []
    for g, bat in ((build_gl(1, 1), battery_gl11), (build_gl(2, 2), battery_gl22)):
        for M in bat(g):
            lhs, rhs = giso_comparison(g, M, max_degree + 1)
            out.append(Check(f"{g.name} {M.name}: relative vs invariant Koszul", lhs == rhs, lhs, rhs))
    return out


def witt_comparison(n: int, dmax: int = 3) -> tuple[list, list]:
    w = build_W(n)
    g0 = graded_part(w, [0])
    lhs = build_relative_complex(w, g0, trivial_module(w), dmax + 1).cohomology().dims
    f = detecting_f_W(w)
    f0 = _relative_even(f)
    cf = build_relative_complex(f.algebra, f0, trivial_module(f.algebra), dmax + 1)
    N = normalizer_group_W(n)
    rhs = invariant_cohomology_dims(cf, [group_operator(cf, G) for G in N.generators])
    return lhs, rhs


def suite_witt() -> list:
    lhs, rhs = witt_comparison(2, 3)
    out = [Check("W(2): H^d(g, g0, C) = H^d(f, f0, C)^N, d=0..3", lhs == rhs, lhs, rhs)]
    lhs3, rhs3 = witt_comparison(3, 4)
    out.append(Check("W(3): H^d(g, g0, C) = H^d(f, f0, C)^N, d=0..4", lhs3 == rhs3, lhs3, rhs3))
    return out


def tensor_pool(g) -> list:
    V = natural_module(g)
    Vd = dual(V)
    return [trivial_module(g), V, Vd, tensor(V, Vd),
            kac_module(g, character_module(g, (0, 0, 0, 0))),
            dual_kac_module(g, character_module(g, (0, 0, 0, 0))),
            dual_kac_module(g, character_module(g, (-1, -1, 1, 1))),
            adjoint_module(g)]


def suite_tensor(seed: int = 0, pairs: int = 5, points: int = 20) -> list:
    g = build_gl(2, 2)
    fb = detecting_fbar(g)
    pool = tensor_pool(g)
    rng = random.Random(seed)
    out = []
    for k in range(pairs):
        M, N = rng.choice(pool), rng.choice(pool)
        pts = probe_points(f"random:{seed * 1000 + k}:{points}", len(fb.odd_indices()))
        res = tensor_property_check(M, N, fb, pts)
        out.append(Check(f"fbar tensor property {M.name} (x) {N.name}", res.ok and res.checked == points,
                         res.checked if res.ok else res.counterexample.to_json(), points))
    return out


def suite_support() -> list:
    g = build_gl(1, 1)
    out = []
    for k in range(-3, 4):
        K = dual_kac_module(g, character_module(g, (k, -k)))
        out.append(_check(f"support of K-({k}|{-k}) is the origin", support_variety(K).is_origin(), True))
        out.append(_check(f"K-({k}|{-k}) not projective in the category", projectivity_in_category(K), False))
    T = trivial_module(g)
    sv = support_variety(T)
    out.append(_check("trivial module: every probed point is a member", sv.is_everything(), True))
    out.append(_check("trivial module not projective in the category", projectivity_in_category(T), False))
    return out


def suite_atypicality(seed: int = 0, samples: int = 200) -> list:
    rng = random.Random(seed)
    out = []
    for m in range(1, 5):
        for n in range(1, 5):
            bad = []
            for _ in range(samples):
                w = [rng.randint(-3, 3) for _ in range(m + n)]
                a = atypicality(w, m, n).atypicality
                if a != atypicality_bruteforce(w, m, n) or a > min(m, n):
                    bad.append(w)
            out.append(Check(f"gl({m}|{n}): matching = exhaustive oracle on {samples} weights",
                             not bad, bad[:3], []))
    out.append(_check("atyp(0) for gl(1|1)", atypicality((0, 0), 1, 1).atypicality, 1))
    out.append(_check("atyp(0) for gl(2|2)", atypicality((0, 0, 0, 0), 2, 2).atypicality, 2))
    out.extend(consistency_triangle_gl11())
    g2 = build_gl(2, 2)
    sv = support_variety(trivial_module(g2))
    out.append(_check("gl(2|2): trivial module support fills e1 (dimension = atyp(0) = 2)",
                      sv.is_everything() and all(sv.axes_profile), True))
    return out


def consistency_triangle_gl11(span: int = 3) -> list:
    g = build_gl(1, 1)
    g0 = degree_zero(g)
    out = []
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            typical = atypicality((a, b), 1, 1).atypicality == 0
            L = simple_module_gl11(g, (a, b))
            origin = support_variety(L).is_origin()
            K = dual_kac_module(g, character_module(g, (a, b)))
            kor = support_variety(K).is_origin()
            h1 = build_relative_complex(g, g0, K, 2).cohomology().dims[1]
            ok = (typical == origin) and kor and (h1 == 0 or not typical)
            out.append(Check(f"gl(1|1) weight ({a}|{b}): atyp=0 <-> support(L) origin; K- support origin; H^1",
                             ok, [typical, origin, kor, h1], [origin, typical, True, 0 if typical else h1]))
    return out


SUITES: dict[str, Callable[[], list]] = {
    "gl11": suite_gl11,
    "invariants-gl22": suite_invariants,
    "jacobi": suite_jacobi,
    "injectivity-gl22": suite_injectivity_gl22,
    "giso": suite_giso,
    "witt": suite_witt,
    "tensor": suite_tensor,
    "support": suite_support,
    "atypicality": suite_atypicality,
}


def run_suite(name: str) -> dict:
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    report = {"suites": []}
    for n in names:
        checks = SUITES[n]()
        report["suites"].append({"suite": n, "pass": all(c.passed for c in checks),
                                 "checks": [c.to_json() for c in checks]})
    report["pass"] = all(s["pass"] for s in report["suites"])
    return report
