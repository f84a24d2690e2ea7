"""Lie superalgebras with exact structure constants.

Builders for gl(m|n), the Witt-type algebra W(n) of superderivations of the
Grassmann algebra, its divergence-free part S(n), and the detecting
subalgebras f, e and f-bar together with the finite groups acting on them.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import NotClosedError, StructureError, UnsupportedShapeError
from .linalg import Mat, rank, rat, rat_str, solve

EVEN, ODD = 0, 1


@dataclass(frozen=True)
class SuperSpace:
    labels: tuple
    parity: tuple
    zdegree: Optional[tuple] = None

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("basis labels must be unique")
        if len(self.parity) != len(self.labels):
            raise ValueError("one parity per basis element")
        if any(p not in (EVEN, ODD) for p in self.parity):
            raise ValueError("parity must be 0 (even) or 1 (odd)")
        if self.zdegree is not None:
            if len(self.zdegree) != len(self.labels):
                raise ValueError("one Z-degree per basis element")
            for p, d in zip(self.parity, self.zdegree):
                if p != d % 2:
                    raise ValueError("parity must equal the Z-degree mod 2")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def sdim(self) -> tuple[int, int]:
        odd = sum(self.parity)
        return (self.dim - odd, odd)


def _sign(p: int, q: int) -> int:
    return -1 if (p & q) else 1


class LieSuperalgebra:
    """Finite-dimensional Lie superalgebra on an ordered homogeneous basis.

    Structure constants are stored sparsely for ``i <= j`` only; the other half
    follows from super skew-symmetry.  ``kind`` tags the family the algebra was
    built from, e.g. ``("gl", 2, 2)`` or ``("W", 3)``.
    """

    def __init__(self, space: SuperSpace, brackets: dict, cartan: Sequence[int] = (),
                 name: str = "", kind: tuple = ()):
        self.space = space
        self._br: dict[tuple[int, int], dict[int, object]] = {}
        n = space.dim
        for (i, j), vec in brackets.items():
            if not (0 <= i <= j < n):
                raise ValueError("brackets must be keyed by (i, j) with i <= j")
            clean = {k: rat(v) for k, v in vec.items() if v}
            if clean:
                self._br[(i, j)] = clean
        self.cartan = tuple(cartan)
        self.name = name
        self.kind = tuple(kind)
        self._ad = None
        self.ambient = None  # set when the algebra was built as a subalgebra of another

    @classmethod
    def from_full_table(cls, space: SuperSpace, table: dict, **kw) -> "LieSuperalgebra":
        """Build from brackets of all ordered pairs, verifying super skew-symmetry."""
        n = space.dim
        par = space.parity
        for i in range(n):
            for j in range(n):
                a = table.get((i, j), {})
                b = table.get((j, i), {})
                s = -_sign(par[i], par[j])
                keys = set(a) | set(b)
                if any(a.get(k, 0) != s * b.get(k, 0) for k in keys):
                    raise StructureError(f"super skew-symmetry fails for ({i}, {j})")
        half = {(i, j): v for (i, j), v in table.items() if i <= j}
        return cls(space, half, **kw)

    # -- basic data --------------------------------------------------------
    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self) -> tuple:
        return self.space.labels

    @property
    def parity(self) -> tuple:
        return self.space.parity

    @property
    def zdegree(self) -> Optional[tuple]:
        return self.space.zdegree

    def index(self, label: str) -> int:
        return self.space.labels.index(label)

    def __repr__(self) -> str:
        e, o = self.space.sdim()
        return f"<LieSuperalgebra {self.name or '?'} dim {e}|{o}>"

    def indices_of_parity(self, p: int) -> list[int]:
        return [i for i, q in enumerate(self.parity) if q == p]

    def indices_of_degree(self, d: int) -> list[int]:
        if self.zdegree is None:
            raise ValueError(f"{self.name} carries no Z-grading")
        return [i for i, q in enumerate(self.zdegree) if q == d]

    def is_type_one(self) -> bool:
        z = self.zdegree
        if z is None or not set(z) <= {-1, 0, 1}:
            return False
        return all((d == 0) == (p == EVEN) for d, p in zip(z, self.parity))

    # -- brackets ----------------------------------------------------------
    def bracket(self, i: int, j: int) -> dict:
        if i <= j:
            return self._br.get((i, j), {})
        v = self._br.get((j, i))
        if not v:
            return {}
        s = -_sign(self.parity[i], self.parity[j])
        return {k: s * c for k, c in v.items()}

    def bracket_vectors(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: rat(c) for k, c in out.items() if c}

    def ad(self, i: int) -> Mat:
        if self._ad is None:
            self._ad = {}
        m = self._ad.get(i)
        if m is None:
            n = self.dim
            m = Mat(n, n, {(k, j): c for j in range(n) for k, c in self.bracket(i, j).items()})
            self._ad[i] = m
        return m

    def ad_vector(self, u: dict) -> Mat:
        n = self.dim
        out = Mat.zeros(n, n)
        for i, a in u.items():
            out = out + self.ad(i).scale(a)
        return out

    def stored_brackets(self):
        return sorted(self._br.items())

    # -- structural checks -------------------------------------------------
    def check_skew(self):
        for (i, j), v in self._br.items():
            if i == j and self.parity[i] == EVEN and v:
                raise StructureError(f"[x, x] must vanish for even {self.labels[i]}")

    def check_parity(self):
        par = self.parity
        for (i, j), v in self._br.items():
            for k in v:
                if par[k] != (par[i] + par[j]) % 2:
                    raise StructureError(f"bracket of {self.labels[i]}, {self.labels[j]} not homogeneous")

    def check_zgrading(self):
        z = self.zdegree
        if z is None:
            return
        for (i, j), v in self._br.items():
            for k in v:
                if z[k] != z[i] + z[j]:
                    raise StructureError(f"bracket of {self.labels[i]}, {self.labels[j]} breaks the Z-grading")

    def jacobi_defect(self, i: int, j: int, k: int) -> dict:
        """(-1)^{|x||z|}[x,[y,z]] + cyclic, as a coefficient vector (zero when Jacobi holds)."""
        par = self.parity
        out: dict = {}

        def acc(a, b, c):
            s = _sign(par[a], par[c])
            inner = self.bracket(b, c)
            for t, cf in inner.items():
                for u, cf2 in self.bracket(a, t).items():
                    out[u] = out.get(u, 0) + s * cf * cf2

        acc(i, j, k)
        acc(j, k, i)
        acc(k, i, j)
        return {u: c for u, c in out.items() if c}

    def check_jacobi(self, exhaustive_limit: int = 64, samples: int = 4000, seed: int = 0) -> int:
        """Check the super Jacobi identity; returns the number of triples tested."""
        n = self.dim
        if n <= exhaustive_limit:
            triples: Iterable = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples)]
        count = 0
        for i, j, k in triples:
            if self.jacobi_defect(i, j, k):
                raise StructureError(
                    f"Jacobi identity fails for ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")
            count += 1
        return count

    def verify(self):
        self.check_skew()
        self.check_parity()
        self.check_zgrading()
        self.check_jacobi()
        return self


# ---------------------------------------------------------------------------
# subalgebras

def format_vector(labels: Sequence[str], vec: dict) -> str:
    parts = []
    for k in sorted(vec):
        c = vec[k]
        if c == 1:
            term = labels[k]
        elif c == -1:
            term = "-" + labels[k]
        else:
            term = f"{rat_str(c)}*{labels[k]}"
        parts.append(term)
    s = "+".join(parts).replace("+-", "-")
    return s or "0"


class Subalgebra:
    """A subalgebra given by an inclusion matrix into its parent.

    Column ``k`` of ``inclusion`` is the ``k``-th basis vector of the
    subalgebra written in parent coordinates; ``algebra`` is the subalgebra as
    a Lie superalgebra in its own right, with brackets pulled back along the
    inclusion.
    """

    def __init__(self, parent: LieSuperalgebra, inclusion: Mat, algebra: LieSuperalgebra, name: str = ""):
        self.parent = parent
        self.inclusion = inclusion
        self.algebra = algebra
        self.name = name or algebra.name

    def __repr__(self) -> str:
        return f"<Subalgebra {self.name} of {self.parent.name}, dim {self.dim}>"

    @property
    def dim(self) -> int:
        return self.inclusion.cols

    def vector(self, k: int) -> dict:
        return self.inclusion.column(k)

    def image(self, coords: dict) -> dict:
        """Parent coordinates of an element given in subalgebra coordinates."""
        out: dict = {}
        for k, a in coords.items():
            for i, b in self.inclusion.column(k).items():
                out[i] = out.get(i, 0) + a * b
        return {i: rat(v) for i, v in out.items() if v}

    def coords(self, vec) -> Optional[list]:
        """Subalgebra coordinates of a parent vector, or None if it is not inside."""
        if isinstance(vec, dict):
            dense = [0] * self.parent.dim
            for i, v in vec.items():
                dense[i] = v
            vec = dense
        return solve(self.inclusion, vec)

    def contains(self, vec) -> bool:
        return self.coords(vec) is not None

    def even_indices(self) -> list[int]:
        return self.algebra.indices_of_parity(EVEN)

    def odd_indices(self) -> list[int]:
        return self.algebra.indices_of_parity(ODD)

    def check_closed(self):
        """Brackets of included vectors stay in the span and match the own brackets."""
        n = self.dim
        cols = [self.vector(k) for k in range(n)]
        for i in range(n):
            for j in range(i, n):
                br = self.parent.bracket_vectors(cols[i], cols[j])
                own = self.image(self.algebra.bracket(i, j))
                if br != own:
                    raise NotClosedError(f"inclusion of {self.name} does not intertwine brackets at ({i}, {j})")


def _homogeneous_data(parent: LieSuperalgebra, vec: dict) -> tuple[int, Optional[int]]:
    pars = {parent.parity[i] for i in vec}
    if len(pars) != 1:
        raise StructureError("subalgebra basis vectors must be parity-homogeneous")
    deg = None
    if parent.zdegree is not None:
        degs = {parent.zdegree[i] for i in vec}
        if len(degs) == 1:
            deg = degs.pop()
    return pars.pop(), deg


def make_subalgebra(parent: LieSuperalgebra, vectors: Sequence[dict], labels: Optional[Sequence[str]] = None,
                    name: str = "", cartan: Optional[Sequence[int]] = None, kind: tuple = ()) -> Subalgebra:
    """Subalgebra spanned by the given parent-coordinate vectors (sparse dicts).

    Raises ``NotClosedError`` if the span is not closed under the bracket.
    """
    vectors = [{i: rat(v) for i, v in vec.items() if v} for vec in vectors]
    if any(not v for v in vectors):
        raise ValueError("zero vector in subalgebra basis")
    inc = Mat.from_columns(vectors, rows=parent.dim)
    if rank(inc) != len(vectors):
        raise StructureError("subalgebra basis vectors are linearly dependent")
    if labels is None:
        labels = [format_vector(parent.labels, v) for v in vectors]
    par, deg = [], []
    for v in vectors:
        p, d = _homogeneous_data(parent, v)
        par.append(p)
        deg.append(d)
    zdeg = tuple(deg) if all(d is not None for d in deg) and parent.zdegree is not None else None
    space = SuperSpace(tuple(labels), tuple(par), zdeg)
    n = len(vectors)
    table = {}
    for i in range(n):
        for j in range(i, n):
            br = parent.bracket_vectors(vectors[i], vectors[j])
            if not br:
                continue
            dense = [0] * parent.dim
            for k, c in br.items():
                dense[k] = c
            x = solve(inc, dense)
            if x is None:
                raise NotClosedError(f"[{labels[i]}, {labels[j]}] leaves the span of {name or 'the subalgebra'}")
            table[(i, j)] = {k: c for k, c in enumerate(x) if c}
    if cartan is None:
        pc = set(parent.cartan)
        cartan = [k for k, v in enumerate(vectors) if set(v) <= pc]
    alg = LieSuperalgebra(space, table, cartan=cartan, name=name, kind=kind)
    return Subalgebra(parent, inc, alg, name=name)


def basis_subalgebra(g: LieSuperalgebra, indices: Sequence[int], name: str = "") -> Subalgebra:
    """Subalgebra spanned by a subset of the basis (labels inherited)."""
    indices = list(indices)
    return make_subalgebra(g, [{i: 1} for i in indices], labels=[g.labels[i] for i in indices],
                           name=name, kind=("sub",) + g.kind)


def even_part(g: LieSuperalgebra) -> Subalgebra:
    return basis_subalgebra(g, g.indices_of_parity(EVEN), name=f"{g.name}_0bar")


def graded_part(g: LieSuperalgebra, degrees: Iterable[int], name: str = "") -> Subalgebra:
    degs = set(degrees)
    idx = [i for i, d in enumerate(g.zdegree) if d in degs]
    return basis_subalgebra(g, idx, name=name or f"{g.name}{sorted(degs)}")


def zero_subalgebra(g: LieSuperalgebra) -> Subalgebra:
    alg = LieSuperalgebra(SuperSpace((), (), () if g.zdegree is not None else None), {}, name="0")
    return Subalgebra(g, Mat.zeros(g.dim, 0), alg, name="0")


def whole(g: LieSuperalgebra) -> Subalgebra:
    return Subalgebra(g, Mat.identity(g.dim), g, name=g.name)


# ---------------------------------------------------------------------------
# finite groups acting on odd subspaces

class FiniteGroupAction:
    """Finite matrix group given by generators, with its order verified by closure."""

    def __init__(self, generators: Sequence[Mat], order: int, dim: Optional[int] = None, name: str = ""):
        self.generators = tuple(generators)
        if dim is None:
            if not self.generators:
                raise ValueError("dimension needed for a group without generators")
            dim = self.generators[0].rows
        self.dim = dim
        self.order = order
        self.name = name
        self._elements = None
        for g in self.generators:
            if g.shape != (dim, dim) or rank(g) != dim:
                raise StructureError("group generators must be invertible square matrices")
        if len(self.elements()) != order:
            raise StructureError(f"generators produce a group of order {len(self.elements())}, not {order}")

    def elements(self, limit: int = 100000) -> list[Mat]:
        if self._elements is None:
            ident = Mat.identity(self.dim)
            seen = {ident}
            out = [ident]
            frontier = [ident]
            while frontier:
                nxt = []
                for h in frontier:
                    for g in self.generators:
                        x = g @ h
                        if x not in seen:
                            seen.add(x)
                            out.append(x)
                            nxt.append(x)
                            if len(out) > limit:
                                raise StructureError("group closure exceeded the enumeration limit")
                frontier = nxt
            self._elements = out
        return self._elements


def signed_permutation_group(r: int) -> FiniteGroupAction:
    """The hyperoctahedral group acting on Q^r by signed coordinate permutations."""
    gens = []
    for k in range(r - 1):
        ent = {(i, i): 1 for i in range(r) if i not in (k, k + 1)}
        ent[(k, k + 1)] = 1
        ent[(k + 1, k)] = 1
        gens.append(Mat(r, r, ent))
    flip = {(i, i): 1 for i in range(1, r)}
    flip[(0, 0)] = -1
    gens.append(Mat(r, r, flip))
    order = 2 ** r
    for k in range(2, r + 1):
        order *= k
    return FiniteGroupAction(gens, order, dim=r, name=f"hyperoctahedral({r})")


def permutation_group(n: int, moved: Sequence[int]) -> FiniteGroupAction:
    """Symmetric group permuting the coordinates listed in ``moved`` of Q^n."""
    moved = list(moved)
    gens = []
    for a, b in zip(moved, moved[1:]):
        ent = {(i, i): 1 for i in range(n) if i not in (a, b)}
        ent[(a, b)] = 1
        ent[(b, a)] = 1
        gens.append(Mat(n, n, ent))
    order = 1
    for k in range(2, len(moved) + 1):
        order *= k
    return FiniteGroupAction(gens, order, dim=n, name=f"Sym({len(moved)})")


# ---------------------------------------------------------------------------
# gl(m|n)

def gl_index(m: int, n: int, i: int, j: int) -> int:
    """Basis position of the matrix unit E_{i,j} (1-based i, j)."""
    return (i - 1) * (m + n) + (j - 1)


def build_gl(m: int, n: int) -> LieSuperalgebra:
    if m < 1 or n < 1:
        raise ValueError("gl(m|n) needs m, n >= 1")
    N = m + n

    def par(i):
        return 0 if i <= m else 1

    labels, parity, zdeg = [], [], []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            labels.append(f"E{i},{j}")
            p = (par(i) + par(j)) % 2
            parity.append(p)
            if p == 0:
                zdeg.append(0)
            else:
                zdeg.append(1 if i <= m else -1)
    space = SuperSpace(tuple(labels), tuple(parity), tuple(zdeg))
    table = {}
    for a, b, c, d in itertools.product(range(1, N + 1), repeat=4):
        x, y = gl_index(m, n, a, b), gl_index(m, n, c, d)
        out = {}
        if b == c:
            k = gl_index(m, n, a, d)
            out[k] = out.get(k, 0) + 1
        if d == a:
            k = gl_index(m, n, c, b)
            out[k] = out.get(k, 0) - _sign(parity[x], parity[y])
        out = {k: v for k, v in out.items() if v}
        if out:
            table[(x, y)] = out
    cartan = [gl_index(m, n, i, i) for i in range(1, N + 1)]
    return LieSuperalgebra.from_full_table(space, table, cartan=cartan, name=f"gl({m}|{n})", kind=("gl", m, n))


def _square_gl(g: LieSuperalgebra) -> int:
    if not g.kind or g.kind[0] != "gl":
        raise UnsupportedShapeError(f"detecting subalgebras of this kind need gl(r|r), got {g.name}")
    _, m, n = g.kind
    if m != n:
        raise UnsupportedShapeError(f"unsupported shape gl({m}|{n}): only gl(r|r) is supported")
    return m


def _primitive_vec(vec: dict) -> dict:
    from math import gcd
    from fractions import Fraction
    den = 1
    for v in vec.values():
        d = Fraction(v).denominator
        den = den * d // gcd(den, d)
    ints = {k: int(Fraction(v) * den) for k, v in vec.items()}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    if ints[min(ints)] < 0:
        g = -g
    return {k: v // g for k, v in ints.items()}


def _span_of_brackets(g: LieSuperalgebra, vectors: Sequence[dict]) -> list[dict]:
    """Greedy independent list of the (primitive) nonzero brackets [v_i, v_j], i <= j."""
    out: list[dict] = []
    for i in range(len(vectors)):
        for j in range(i, len(vectors)):
            br = g.bracket_vectors(vectors[i], vectors[j])
            if not br:
                continue
            cand = _primitive_vec(br)
            mat = Mat.from_columns(out + [cand], rows=g.dim)
            if rank(mat) == len(out) + 1:
                out.append(cand)
    return out


def detecting_f(g: LieSuperalgebra) -> Subalgebra:
    r = _square_gl(g)
    odd = [{gl_index(r, r, i, i + r): 1} for i in range(1, r + 1)]
    odd += [{gl_index(r, r, i + r, i): 1} for i in range(1, r + 1)]
    even = _span_of_brackets(g, odd)
    return make_subalgebra(g, even + odd, name="f", kind=("f", r))


def detecting_fbar(g: LieSuperalgebra) -> Subalgebra:
    r = _square_gl(g)
    odd = [{gl_index(r, r, i, i + r): 1} for i in range(1, r + 1)]
    odd += [{gl_index(r, r, i + r, i): 1} for i in range(1, r + 1)]
    even = [{gl_index(r, r, i, i): 1, gl_index(r, r, i + r, i + r): 1} for i in range(1, r + 1)]
    return make_subalgebra(g, even + odd, name="fbar", kind=("fbar", r))


def detecting_e(g: LieSuperalgebra) -> tuple[Subalgebra, FiniteGroupAction]:
    r = _square_gl(g)
    odd = [{gl_index(r, r, i, i + r): 1, gl_index(r, r, i + r, i): 1} for i in range(1, r + 1)]
    even = _span_of_brackets(g, odd)
    sub = make_subalgebra(g, even + odd, name="e", kind=("e", r))
    return sub, signed_permutation_group(r)


# ---------------------------------------------------------------------------
# W(n) and S(n)

def _merge(I: tuple, J: tuple) -> Optional[tuple[int, tuple]]:
    """xi_I * xi_J = sign * xi_K, or None when the product vanishes."""
    if set(I) & set(J):
        return None
    seq = list(I) + list(J)
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1 if inv % 2 else 1), tuple(sorted(seq))


def _partial(i: int, J: tuple) -> Optional[tuple[int, tuple]]:
    if i not in J:
        return None
    pos = J.index(i)
    return (-1 if pos % 2 else 1), J[:pos] + J[pos + 1:]


def apply_derivation(I: tuple, i: int, elem: dict) -> dict:
    """Apply xi_I d_i to an element of the Grassmann algebra ({monomial: coeff})."""
    out: dict = {}
    for J, c in elem.items():
        p = _partial(i, J)
        if p is None:
            continue
        s1, K = p
        m = _merge(I, K)
        if m is None:
            continue
        s2, L = m
        out[L] = out.get(L, 0) + s1 * s2 * c
    return {k: v for k, v in out.items() if v}


def w_basis(n: int) -> list[tuple[tuple, int]]:
    out = []
    for size in range(n + 1):
        for I in itertools.combinations(range(1, n + 1), size):
            for i in range(1, n + 1):
                out.append((I, i))
    return out


def w_label(I: tuple, i: int) -> str:
    return "".join(f"x{k}" for k in I) + f"d{i}"


def build_W(n: int) -> LieSuperalgebra:
    if n < 2:
        raise ValueError("W(n) needs n >= 2")
    basis = w_basis(n)
    pos = {b: k for k, b in enumerate(basis)}
    labels = [w_label(I, i) for I, i in basis]
    zdeg = [len(I) - 1 for I, _ in basis]
    parity = [d % 2 for d in zdeg]
    space = SuperSpace(tuple(labels), tuple(parity), tuple(zdeg))
    table = {}
    for a, (I, i) in enumerate(basis):
        for b, (J, j) in enumerate(basis):
            s = _sign(parity[a], parity[b])
            out: dict = {}
            for k in range(1, n + 1):
                gen = {(k,): 1}
                t1 = apply_derivation(I, i, apply_derivation(J, j, gen))
                t2 = apply_derivation(J, j, apply_derivation(I, i, gen))
                for K, c in t1.items():
                    out[pos[(K, k)]] = out.get(pos[(K, k)], 0) + c
                for K, c in t2.items():
                    out[pos[(K, k)]] = out.get(pos[(K, k)], 0) - s * c
            out = {k: v for k, v in out.items() if v}
            if out:
                table[(a, b)] = out
    cartan = [pos[((i,), i)] for i in range(1, n + 1)]
    return LieSuperalgebra.from_full_table(space, table, cartan=cartan, name=f"W({n})", kind=("W", n))


def divergence_matrix(g: LieSuperalgebra) -> tuple[Mat, list[tuple]]:
    """Matrix of f d_i -> d_i(f) from W(n) to the Grassmann algebra; rows indexed by monomials."""
    if not g.kind or g.kind[0] != "W":
        raise UnsupportedShapeError("divergence is defined on W(n)")
    n = g.kind[1]
    monos = [I for size in range(n + 1) for I in itertools.combinations(range(1, n + 1), size)]
    mpos = {I: k for k, I in enumerate(monos)}
    ent = {}
    for col, (I, i) in enumerate(w_basis(n)):
        p = _partial(i, I)
        if p is not None:
            s, K = p
            ent[(mpos[K], col)] = s
    return Mat(len(monos), g.dim, ent), monos


def build_S(n: int, W: Optional[LieSuperalgebra] = None) -> Subalgebra:
    """Divergence-free superderivations, as a subalgebra of W(n)."""
    from .linalg import kernel_basis
    g = W if W is not None else build_W(n)
    div, _ = divergence_matrix(g)
    kern = kernel_basis(div)
    # order by Z-degree, then by position of the leading entry
    vecs = [{k: v for k, v in enumerate(vec) if v} for vec in kern]
    vecs.sort(key=lambda v: (g.zdegree[min(v)], min(v)))
    vecs = [_primitive_vec(v) for v in vecs]
    sub = make_subalgebra(g, vecs, name=f"S({n})", kind=("S", n))
    sub.check_closed()
    sub.algebra.ambient = sub
    return sub


def _w_n(g: LieSuperalgebra) -> int:
    if not g.kind or g.kind[0] != "W":
        raise UnsupportedShapeError(f"expected W(n), got {g.name}")
    return g.kind[1]


def detecting_f_W(g: LieSuperalgebra) -> Subalgebra:
    n = _w_n(g)
    even = [{g.index(w_label((i,), i)): 1} for i in range(1, n + 1)]
    odd = [{g.index("d1"): 1}] + [{g.index(w_label((1, i), i)): 1} for i in range(2, n + 1)]
    return make_subalgebra(g, even + odd, name="f", kind=("fW", n))


def normalizer_group_W(n: int) -> FiniteGroupAction:
    """Sym(n-1) permuting the vectors xi_1 xi_i d_i (i >= 2) of the odd part of f for W(n).

    Coordinates follow the odd basis of ``detecting_f_W``: d1, x1x2d2, ..., x1xnd_n.
    """
    return permutation_group(n, list(range(1, n)))
