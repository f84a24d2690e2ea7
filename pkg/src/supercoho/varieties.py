"""Rank varieties over odd subspaces, sampled support varieties, atypicality."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import LieSuperalgebra, Subalgebra, detecting_e
from .errors import StructureError, UndeterminedProjectivity, UnsupportedShapeError
from .linalg import Echelon, Mat, kernel_basis, rank, rat
from .modules import Supermodule

ZERO_POINT = "zero-point"
CLIFFORD = "clifford-invertible"
KOSZUL = "koszul-exactness"
MIXED = "mixed-split"


@dataclass(frozen=True)
class OddPoint:
    """Coordinates in the odd basis of a subalgebra (its own odd basis vectors, in order)."""
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(rat(c) for c in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def scaled(self, c) -> "OddPoint":
        return OddPoint(tuple(c * x for x in self.coords))

    def to_json(self) -> list:
        from .linalg import rat_str
        return [rat_str(c) for c in self.coords]


@dataclass
class RankReport:
    point: OddPoint
    self_bracket: dict
    projective: bool
    method: str

    @property
    def member(self) -> bool:
        return self.point.is_zero() or not self.projective


def point_vector(h: Subalgebra, x: OddPoint) -> dict:
    odd = h.odd_indices()
    if len(x.coords) != len(odd):
        raise ValueError(f"point needs {len(odd)} coordinates, got {len(x.coords)}")
    return h.image({k: c for k, c in zip(odd, x.coords) if c})


def _vectors_rank(vecs: Sequence[dict], n: int) -> int:
    ech = Echelon(n)
    for v in vecs:
        ech.insert(v)
    return ech.rank


def _generalized_kernel(E: Mat) -> tuple[list, int]:
    """Basis of the generalized 0-eigenspace of E and the power at which it stabilises."""
    n = E.rows
    k = 1
    P = E
    prev = None
    while True:
        basis = kernel_basis(P)
        if prev is not None and len(basis) == len(prev):
            return prev, k - 1
        if len(basis) == n:
            return basis, k
        prev = basis
        P = P @ E
        k += 1


def is_projective_over(M: Supermodule, x: OddPoint, h: Subalgebra) -> RankReport:
    """Projectivity of M over the subalgebra generated by one odd element x of h."""
    g = h.parent
    if M.algebra is not g:
        raise StructureError("module must be over the parent algebra of h")
    xv = point_vector(h, x)
    if not xv:
        return RankReport(x, {}, True, ZERO_POINT)
    sb = g.bracket_vectors(xv, xv)
    D = M.rho(xv)
    E = M.rho(sb)
    if D @ D != E.scale(Fraction(1, 2)):
        raise StructureError("rho(x)^2 differs from rho([x,x])/2")
    n = M.dim
    if E.is_zero():
        return RankReport(x, sb, n == 2 * rank(D), KOSZUL)
    if rank(E) == n:
        return RankReport(x, sb, True, CLIFFORD)
    basis, power = _generalized_kernel(E)
    vecs = [{i: v for i, v in enumerate(b) if v} for b in basis]
    if power > 1 or any(E.apply(v) for v in vecs):
        raise UndeterminedProjectivity(
            "undetermined projectivity: [x,x] acts nonzero-nilpotently on the 0-block")
    rk = _vectors_rank([D.apply(v) for v in vecs], n)
    return RankReport(x, sb, len(vecs) == 2 * rk, MIXED)


@dataclass
class ProbeResult:
    reports: list
    membership: list
    zero_member: bool = True

    def members(self) -> list:
        return [r.point for r, m in zip(self.reports, self.membership) if m]


def rank_variety_probe(M: Supermodule, h: Subalgebra, points: Sequence[OddPoint],
                       scale: int = 3) -> ProbeResult:
    """Membership of each point in the rank variety of M over h (0 is always a member).

    Scaling invariance is checked at every nonzero point with the factor ``scale``.
    """
    reports, member = [], []
    for x in points:
        rep = is_projective_over(M, x, h)
        if not x.is_zero():
            other = is_projective_over(M, x.scaled(scale), h)
            if other.projective != rep.projective:
                raise StructureError(f"membership not invariant under scaling at {x.coords}")
        reports.append(rep)
        member.append(rep.member)
    return ProbeResult(reports, member, True)


def probe_points(spec: str, r: int) -> list[OddPoint]:
    """Probe sets: "axes", "grid" (two-axis points with coordinates in {+-1, +-2}),
    "random:<seed>:<count>" (rational coordinates), or a combination joined by "+"."""
    out: list[OddPoint] = []
    for part in spec.split("+"):
        part = part.strip()
        if part == "axes":
            for k in range(r):
                out.append(OddPoint(tuple(1 if i == k else 0 for i in range(r))))
        elif part == "grid":
            vals = (1, -1, 2, -2)
            for k, l in itertools.combinations(range(r), 2):
                for a in vals:
                    for b in vals:
                        c = [0] * r
                        c[k], c[l] = a, b
                        out.append(OddPoint(tuple(c)))
            if r == 1:
                out.extend(OddPoint((v,)) for v in vals)
        elif part.startswith("random"):
            bits = part.split(":")
            if len(bits) != 3:
                raise ValueError("random points are given as random:<seed>:<count>")
            seed, count = int(bits[1]), int(bits[2])
            rng = random.Random(seed)
            made = 0
            while made < count:
                c = tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(r))
                if any(c):
                    out.append(OddPoint(c))
                    made += 1
        else:
            raise ValueError(f"unknown point set {part!r}")
    return out


# ---------------------------------------------------------------------------
# support varieties of gl(r|r)-modules

def elementary_symmetric(values: Sequence) -> list:
    """e_1..e_k of the given values."""
    e = [1] + [0] * len(values)
    for v in values:
        for k in range(len(values), 0, -1):
            e[k] = e[k] + e[k - 1] * v
    return [rat(x) for x in e[1:]]


def invariant_coords(x: OddPoint) -> list:
    return elementary_symmetric([c * c for c in x.coords])


@dataclass
class SupportDescription:
    ambient_dim: int
    sampled: list          # (OddPoint, invariant coords, member)
    axes_profile: list

    @property
    def members(self) -> list:
        return [(x, inv) for x, inv, m in self.sampled if m and not x.is_zero()]

    def is_origin(self) -> bool:
        return not self.members

    def is_everything(self) -> bool:
        return all(m for x, _, m in self.sampled)

    def to_json(self) -> dict:
        from .linalg import rat_str
        return {
            "ambientDim": self.ambient_dim,
            "axesProfile": self.axes_profile,
            "points": [{"point": x.to_json(), "invariant": [rat_str(c) for c in inv], "member": m}
                       for x, inv, m in self.sampled],
            "originOnly": self.is_origin(),
        }


def support_variety(M: Supermodule, points: str = "axes+grid+random:0:8") -> SupportDescription:
    """Sampled chart of the support of M via the rank variety over e, modulo W."""
    g = M.algebra
    e, W = detecting_e(g)
    r = len(e.odd_indices())
    pts = probe_points(points, r)
    if not any(p.is_zero() for p in pts):
        pts = [OddPoint((0,) * r)] + pts
    probe = rank_variety_probe(M, e, pts)
    elements = W.elements()
    sampled = []
    for x, m in zip(pts, probe.membership):
        for G in elements:
            y = OddPoint(tuple(G.apply(list(x.coords))))
            if is_projective_over(M, y, e).member != m:
                raise StructureError(f"membership not constant on the W-orbit of {x.coords}")
        sampled.append((x, invariant_coords(x), m))
    axes = []
    for k in range(r):
        x = OddPoint(tuple(1 if i == k else 0 for i in range(r)))
        axes.append(is_projective_over(M, x, e).member)
    return SupportDescription(r, sampled, axes)


@dataclass
class TensorCheck:
    ok: bool
    counterexample: Optional[OddPoint] = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


def tensor_property_check(M: Supermodule, N: Supermodule, h: Subalgebra,
                          points: Sequence[OddPoint]) -> TensorCheck:
    from .modules import tensor
    MN = tensor(M, N)
    n = 0
    for x in points:
        a = is_projective_over(M, x, h).member
        b = is_projective_over(N, x, h).member
        c = is_projective_over(MN, x, h).member
        n += 1
        if c != (a and b):
            return TensorCheck(False, x, n)
    return TensorCheck(True, None, n)


# ---------------------------------------------------------------------------
# atypicality

@dataclass
class AtypicalityReport:
    weight: tuple
    rho: tuple
    edges: list
    atypicality: int

    def to_json(self) -> dict:
        from .linalg import rat_str
        return {"weight": [rat_str(c) for c in self.weight], "rho": [rat_str(c) for c in self.rho],
                "edges": [[i, j] for i, j in self.edges], "atypicality": self.atypicality}


def rho_vector(m: int, n: int) -> tuple:
    """Half sum of even positive roots minus half sum of odd positive roots (standard Borel)."""
    eps = [Fraction(m - 2 * i + 1, 2) - Fraction(n, 2) for i in range(1, m + 1)]
    dlt = [Fraction(n - 2 * j + 1, 2) + Fraction(m, 2) for j in range(1, n + 1)]
    return tuple(rat(c) for c in eps + dlt)


def _max_matching(m: int, n: int, edges: Sequence[tuple]) -> int:
    import networkx as nx
    from networkx.algorithms.bipartite import hopcroft_karp_matching
    G = nx.Graph()
    left = [("e", i) for i in range(1, m + 1)]
    G.add_nodes_from(left)
    G.add_nodes_from(("d", j) for j in range(1, n + 1))
    G.add_edges_from((("e", i), ("d", j)) for i, j in edges)
    # the matching dict lists both endpoints of every matched edge
    return len(hopcroft_karp_matching(G, top_nodes=left)) // 2


def atypicality(weight: Sequence, m: int, n: int) -> AtypicalityReport:
    weight = tuple(rat(c) for c in weight)
    if len(weight) != m + n:
        raise ValueError(f"weight needs {m + n} coordinates, got {len(weight)}")
    rho = rho_vector(m, n)
    s = [a + b for a, b in zip(weight, rho)]
    edges = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1) if s[i - 1] + s[m + j - 1] == 0]
    return AtypicalityReport(weight, rho, edges, _max_matching(m, n, edges))


def atypicality_bruteforce(weight: Sequence, m: int, n: int) -> int:
    """Largest set of independent, mutually orthogonal isotropic positive roots orthogonal to weight + rho."""
    N = m + n
    form = [1] * m + [-1] * n

    def pair(u, v):
        return sum(f * a * b for f, a, b in zip(form, u, v))

    lam = [rat(a) + b for a, b in zip(weight, rho_vector(m, n))]
    roots = []
    for i in range(m):
        for j in range(n):
            v = [0] * N
            v[i] = 1
            v[m + j] = -1
            if pair(v, v) == 0 and pair(lam, v) == 0:
                roots.append(v)
    best = 0

    def dfs(start, chosen):
        nonlocal best
        if len(chosen) > best and rank(Mat.from_columns(chosen, rows=N)) == len(chosen):
            best = len(chosen)
        for k in range(start, len(roots)):
            v = roots[k]
            if all(pair(v, u) == 0 for u in chosen):
                chosen.append(v)
                if rank(Mat.from_columns(chosen, rows=N)) == len(chosen):
                    dfs(k + 1, chosen)
                chosen.pop()

    dfs(0, [])
    return best


# ---------------------------------------------------------------------------
# projectivity in the relative category (gl(1|1))

def simple_module_gl11(g: LieSuperalgebra, weight: Sequence) -> Supermodule:
    """Simple gl(1|1)-module of highest weight (a|b): one-dimensional when a + b = 0, else K(a|b)."""
    from .modules import kac_module, character_module, _space
    if g.kind != ("gl", 1, 1):
        raise UnsupportedShapeError("simple modules are only built for gl(1|1)")
    a, b = (rat(c) for c in weight)
    if a + b == 0:
        action = [Mat.zeros(1, 1)] * g.dim
        for h, w in zip(g.cartan, (a, b)):
            action[h] = Mat(1, 1, {(0, 0): w})
        return Supermodule(g, _space([f"L({a}|{b})"], [0]), action, name=f"L({a}|{b})")
    return kac_module(g, character_module(g, (a, b)))


def projectivity_in_category(M: Supermodule, test_weights: Optional[Sequence] = None) -> bool:
    """True iff H^1(g, g_0; Hom(S, M)) = 0 for every supplied test simple S.

    The default test set is the atypical weights (k|-k) for k in -3..3 together
    with every k within 2 of the first coordinate of a weight of M.
    """
    from .cohomology import build_relative_complex
    from .modules import hom_module, degree_zero
    g = M.algebra
    if test_weights is None:
        # atypical simples (k|-k) near the weights of M; typical simples are projective
        ks = set(range(-3, 4))
        if M.weights:
            firsts = [int(w[0]) for w in M.weights if Fraction(w[0]).denominator == 1]
            if firsts:
                ks |= set(range(min(firsts) - 2, max(firsts) + 3))
        test_weights = [(k, -k) for k in sorted(ks)]
    g0 = degree_zero(g)
    for w in test_weights:
        S = simple_module_gl11(g, w)
        cx = build_relative_complex(g, g0, hom_module(S, M), 2)
        if cx.cohomology().dims[1] != 0:
            return False
    return True
