"""Finite-dimensional supermodules and their constructors."""

from __future__ import annotations

import itertools
from typing import Optional, Sequence

from .algebra import (EVEN, LieSuperalgebra, SuperSpace, Subalgebra, _sign, apply_derivation,
                      basis_subalgebra, gl_index)
from .errors import NonAbelianizableWeight, StructureError, UnsupportedShapeError
from .linalg import Mat, rat


class Supermodule:
    """A representation of ``algebra`` on a super vector space.

    ``action[i]`` is the matrix of the ``i``-th algebra basis element.  The
    module axioms are checked on construction unless ``check=False``.
    """

    def __init__(self, algebra: LieSuperalgebra, space: SuperSpace, action: Sequence[Mat],
                 weights: Optional[Sequence[tuple]] = None, check: bool = True, name: str = ""):
        self.algebra = algebra
        self.space = space
        self.action = tuple(action)
        self.name = name
        if len(self.action) != algebra.dim:
            raise ValueError("need one action matrix per algebra basis element")
        n = space.dim
        for m in self.action:
            if m.shape != (n, n):
                raise ValueError(f"action matrices must be {n}x{n}")
        if weights is None:
            weights = self._diagonal_weights()
        else:
            weights = [tuple(rat(c) for c in w) for w in weights]
            if len(weights) != n or any(len(w) != len(algebra.cartan) for w in weights):
                raise ValueError("one weight per basis vector, one coordinate per cartan element")
        self.weights = None if weights is None else tuple(weights)
        if check:
            self.verify()

    def _diagonal_weights(self):
        if not self.algebra.cartan:
            return None
        mats = [self.action[h] for h in self.algebra.cartan]
        if not all(m.is_diagonal() for m in mats):
            return None
        diags = [m.diagonal() for m in mats]
        return [tuple(d[v] for d in diags) for v in range(self.dim)]

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def parity(self) -> tuple:
        return self.space.parity

    @property
    def labels(self) -> tuple:
        return self.space.labels

    def __repr__(self) -> str:
        e, o = self.space.sdim()
        return f"<Supermodule {self.name or '?'} over {self.algebra.name}, dim {e}|{o}>"

    def rho(self, coords: dict) -> Mat:
        """Action matrix of an algebra element given by basis coordinates."""
        out = Mat.zeros(self.dim, self.dim)
        for i, c in coords.items():
            out = out + self.action[i].scale(c)
        return out

    def parity_operator(self) -> Mat:
        return Mat.diag([-1 if p else 1 for p in self.parity])

    # -- invariants --------------------------------------------------------
    def check_parity(self):
        par = self.parity
        for i, m in enumerate(self.action):
            pi = self.algebra.parity[i]
            for (r, c) in m.entries:
                if par[r] != (par[c] + pi) % 2:
                    raise StructureError(f"{self.algebra.labels[i]} does not shift parity by {pi}")

    def check_brackets(self):
        g = self.algebra
        par = g.parity
        for i in range(g.dim):
            for j in range(i, g.dim):
                lhs = self.rho(g.bracket(i, j))
                rhs = self.action[i] @ self.action[j] - (self.action[j] @ self.action[i]).scale(_sign(par[i], par[j]))
                if lhs != rhs:
                    raise StructureError(
                        f"bracket compatibility fails for ({g.labels[i]}, {g.labels[j]}) on {self.name or 'module'}")

    def check_weights(self):
        if self.weights is None:
            return
        for k, h in enumerate(self.algebra.cartan):
            expect = Mat.diag([w[k] for w in self.weights])
            if self.action[h] != expect:
                raise StructureError(f"cartan element {self.algebra.labels[h]} does not act by the stated weights")

    def verify(self):
        self.check_parity()
        self.check_weights()
        self.check_brackets()
        return self

    def same_action(self, other: "Supermodule") -> bool:
        return self.parity == other.parity and self.action == other.action


def _space(labels, parity) -> SuperSpace:
    return SuperSpace(tuple(labels), tuple(parity))


def trivial_module(g: LieSuperalgebra) -> Supermodule:
    return Supermodule(g, _space(["1"], [EVEN]), [Mat.zeros(1, 1)] * g.dim, name="trivial")


def natural_module(g: LieSuperalgebra) -> Supermodule:
    """Defining representation: C^{m|n} for gl(m|n), the Grassmann algebra for W(n)."""
    kind = g.kind[0] if g.kind else None
    if kind == "gl":
        _, m, n = g.kind
        N = m + n
        labels = [f"v{i}" for i in range(1, N + 1)]
        parity = [0] * m + [1] * n
        action = []
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                action.append(Mat(N, N, {(i - 1, j - 1): 1}))
        return Supermodule(g, _space(labels, parity), action, name="natural")
    if kind == "W":
        n = g.kind[1]
        monos = [I for size in range(n + 1) for I in itertools.combinations(range(1, n + 1), size)]
        pos = {I: k for k, I in enumerate(monos)}
        labels = ["".join(f"x{k}" for k in I) or "1" for I in monos]
        parity = [len(I) % 2 for I in monos]
        from .algebra import w_basis
        action = []
        for I, i in w_basis(n):
            ent = {}
            for J in monos:
                for K, c in apply_derivation(I, i, {J: 1}).items():
                    ent[(pos[K], pos[J])] = c
            action.append(Mat(len(monos), len(monos), ent))
        return Supermodule(g, _space(labels, parity), action, name="natural")
    if kind == "S" and g.ambient is not None:
        M = restrict(natural_module(g.ambient.parent), g.ambient)
        M.name = "natural"
        return M
    raise UnsupportedShapeError(f"no natural module for {g.name}")


def adjoint_module(g: LieSuperalgebra) -> Supermodule:
    return Supermodule(g, _space(g.labels, g.parity), [g.ad(i) for i in range(g.dim)], name="adjoint")


def dual(M: Supermodule) -> Supermodule:
    """Dual module with (x.phi)(v) = -(-1)^{|x||phi|} phi(x.v)."""
    par = M.parity
    gp = M.algebra.parity
    action = []
    for x, m in enumerate(M.action):
        ent = {(c, r): -_sign(gp[x], par[r]) * v for (r, c), v in m.entries.items()}
        action.append(Mat(M.dim, M.dim, ent))
    labels = [f"{l}*" for l in M.labels]
    weights = None if M.weights is None else [tuple(-c for c in w) for w in M.weights]
    return Supermodule(M.algebra, _space(labels, par), action, weights=weights,
                       name=f"({M.name})*")


def double_dual_identification(M: Supermodule) -> Supermodule:
    """dual(dual(M)) conjugated by the parity operator; its action equals that of M."""
    DD = dual(dual(M))
    J = M.parity_operator()
    action = [J @ a @ J for a in DD.action]
    return Supermodule(M.algebra, M.space, action, weights=M.weights, name=M.name)


def tensor(M: Supermodule, N: Supermodule) -> Supermodule:
    """M (x) N on the basis m (x) n, index m * dim N + n."""
    if M.algebra is not N.algebra:
        raise StructureError("tensor product of modules over different algebras")
    gp = M.algebra.parity
    IN = Mat.identity(N.dim)
    Psign = M.parity_operator()
    IM = Mat.identity(M.dim)
    action = []
    for x in range(M.algebra.dim):
        a = M.action[x].kron(IN)
        b = (Psign if gp[x] else IM).kron(N.action[x])
        action.append(a + b)
    labels = [f"{a}.{b}" for a in M.labels for b in N.labels]
    parity = [(p + q) % 2 for p in M.parity for q in N.parity]
    weights = None
    if M.weights is not None and N.weights is not None:
        weights = [tuple(u + v for u, v in zip(wm, wn)) for wm in M.weights for wn in N.weights]
    return Supermodule(M.algebra, _space(labels, parity), action, weights=weights,
                       name=f"{M.name}(x){N.name}")


def direct_sum(M: Supermodule, N: Supermodule) -> Supermodule:
    if M.algebra is not N.algebra:
        raise StructureError("direct sum of modules over different algebras")
    d = M.dim + N.dim
    action = []
    for a, b in zip(M.action, N.action):
        ent = dict(a.entries)
        ent.update({(r + M.dim, c + M.dim): v for (r, c), v in b.entries.items()})
        action.append(Mat(d, d, ent))
    labels = [f"{l}#1" for l in M.labels] + [f"{l}#2" for l in N.labels]
    weights = None
    if M.weights is not None and N.weights is not None:
        weights = list(M.weights) + list(N.weights)
    return Supermodule(M.algebra, _space(labels, M.parity + N.parity), action, weights=weights,
                       name=f"{M.name}+{N.name}")


def hom_module(M: Supermodule, N: Supermodule) -> Supermodule:
    """Hom(M, N) realized as dual(M) (x) N."""
    H = tensor(dual(M), N)
    H.name = f"Hom({M.name},{N.name})"
    return H


def identity_vector(M: Supermodule) -> dict:
    """Coordinates of id_M inside hom_module(M, M).

    With (phi (x) n)(m) = (-1)^{|phi||n|} phi(m) n the identity is
    sum_i (-1)^{|v_i|} v_i* (x) v_i.
    """
    return {i * M.dim + i: (-1 if p else 1) for i, p in enumerate(M.parity)}


def restrict(M: Supermodule, h: Subalgebra, check: bool = True) -> Supermodule:
    if h.parent is not M.algebra:
        raise StructureError("restriction to a subalgebra of a different algebra")
    action = [M.rho(h.vector(k)) for k in range(h.dim)]
    return Supermodule(h.algebra, M.space, action, check=check,
                       name=f"{M.name}|{h.name}")


# ---------------------------------------------------------------------------
# characters and induced modules

def degree_zero(g: LieSuperalgebra) -> Subalgebra:
    """g_0 of a Type I algebra (equal to the even part)."""
    if not g.is_type_one():
        raise UnsupportedShapeError(f"{g.name} is not Type I graded")
    return basis_subalgebra(g, g.indices_of_degree(0), name=f"{g.name}_0")


def character_module(g: LieSuperalgebra, weight: Sequence, even: Optional[Subalgebra] = None) -> Supermodule:
    """One-dimensional g_0-module: cartan acts by ``weight``, other g_0 basis vectors by 0.

    ``weight`` has one coordinate per cartan element of ``g``.  The module is over
    ``even.algebra`` (default: the degree-zero part of ``g``).
    """
    weight = [rat(c) for c in weight]
    if len(weight) != len(g.cartan):
        raise ValueError(f"weight needs {len(g.cartan)} coordinates")
    if even is None:
        even = degree_zero(g)
    a = even.algebra
    value = {h: w for h, w in zip(g.cartan, weight)}

    def functional(vec: dict):
        return sum((value.get(i, 0) * c for i, c in vec.items()), 0)

    vals = []
    for k in range(a.dim):
        vec = even.vector(k)
        if set(vec) <= set(g.cartan):
            vals.append(rat(functional(vec)))
        elif any(i in value for i in vec):
            raise UnsupportedShapeError("basis of the even part mixes torus and non-torus vectors")
        else:
            vals.append(0)
    for i in range(a.dim):
        for j in range(i, a.dim):
            br = a.bracket(i, j)
            if sum((vals[k] * c for k, c in br.items()), 0) != 0:
                raise NonAbelianizableWeight(
                    f"non-abelianizable weight {tuple(weight)}: nonzero on [{a.labels[i]}, {a.labels[j]}]")
    action = [Mat(1, 1, {(0, 0): v}) for v in vals]
    label = "(" + ",".join(str(w) for w in weight) + ")"
    return Supermodule(a, _space([f"1_{label}"], [EVEN]), action, name=f"C{label}")


def _canon(seq: Sequence[int]) -> Optional[tuple[int, tuple]]:
    """Sort a product of anticommuting odd generators; None when a factor repeats."""
    if len(set(seq)) != len(seq):
        return None
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1 if inv % 2 else 1), tuple(sorted(seq))


def induced_module(g: LieSuperalgebra, L0: Supermodule, free_degree: int = -1) -> Supermodule:
    """Induce a g_0-module to g, letting g_{-d} kill L0 and g_{d} act freely (d = free_degree).

    free_degree = -1 gives the Kac module U(g) (x)_{U(g_0 + g_1)} L0.
    """
    if not g.is_type_one():
        raise UnsupportedShapeError(f"{g.name} is not Type I graded")
    if free_degree not in (-1, 1):
        raise ValueError("free_degree must be -1 or 1")
    Y = g.indices_of_degree(free_degree)
    X = g.indices_of_degree(-free_degree)
    H = g.indices_of_degree(0)
    ypos = {y: t for t, y in enumerate(Y)}
    try:
        hmap = {h: L0.algebra.index(g.labels[h]) for h in H}
    except ValueError:
        raise StructureError("L0 must be a module over the degree-zero part of g") from None
    d0 = L0.dim
    subsets = [S for size in range(len(Y) + 1) for S in itertools.combinations(range(len(Y)), size)]
    spos = {S: k for k, S in enumerate(subsets)}
    dim = len(subsets) * d0

    def add(out, key, c):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    def act_h(h, S, v):
        """h in g_0 on y_S (x) v."""
        out: dict = {}
        for i, s in enumerate(S):
            for u, c in g.bracket(h, Y[s]).items():
                r = _canon(S[:i] + (ypos[u],) + S[i + 1:])
                if r is not None:
                    add(out, (r[1], v), r[0] * c)
        for w, c in L0.action[hmap[h]].column(v).items():
            add(out, (S, w), c)
        return out

    def act_y(t, S, v):
        r = _canon((t,) + S)
        return {} if r is None else {(r[1], v): r[0]}

    def act_x(x, S, v):
        out: dict = {}
        for i, s in enumerate(S):
            sgn = -1 if i % 2 else 1
            for h, c in g.bracket(x, Y[s]).items():
                for (T, w), c2 in act_h(h, S[i + 1:], v).items():
                    r = _canon(S[:i] + T)
                    if r is not None:
                        add(out, (r[1], w), sgn * c * c2 * r[0])
        return out

    action = []
    for b in range(g.dim):
        ent = {}
        for S in subsets:
            for v in range(d0):
                col = spos[S] * d0 + v
                if b in ypos:
                    res = act_y(ypos[b], S, v)
                elif b in hmap:
                    res = act_h(b, S, v)
                else:
                    res = act_x(b, S, v)
                for (T, w), c in res.items():
                    ent[(spos[T] * d0 + w, col)] = c
        action.append(Mat(dim, dim, ent))
    labels, parity = [], []
    for S in subsets:
        mono = "".join(f"[{g.labels[Y[s]]}]" for s in S) or "1"
        for v in range(d0):
            labels.append(f"{mono}{L0.labels[v]}")
            parity.append((len(S) + L0.parity[v]) % 2)
    return Supermodule(g, _space(labels, parity), action, name=f"Ind{free_degree:+d}({L0.name})")


def kac_module(g: LieSuperalgebra, L0: Supermodule) -> Supermodule:
    K = induced_module(g, L0, free_degree=-1)
    K.name = f"K({L0.name})"
    return K


def dual_kac_module(g: LieSuperalgebra, L0: Supermodule) -> Supermodule:
    """Coinduced module Hom_{U(g_0 + g_{-1})}(U(g), L0), built as the dual of an induced module."""
    K = dual(induced_module(g, dual(L0), free_degree=1))
    K.name = f"K-({L0.name})"
    return K


def centralizer_dim(M: Supermodule) -> tuple[int, int]:
    """(dim of the even centralizer of the action, dim of its nilpotent radical).

    The module is indecomposable when the quotient has dimension 1 (local
    endomorphism ring); we compute the centralizer of all action matrices among
    even (parity-preserving) endomorphisms.
    """
    from .linalg import kernel_basis
    n = M.dim
    par = M.parity
    slots = [(i, j) for i in range(n) for j in range(n) if par[i] == par[j]]
    spos = {s: k for k, s in enumerate(slots)}
    rows = {}
    r = 0
    for A in M.action:
        # A X - X A = 0 (even X commutes with everything in the super sense too)
        for i in range(n):
            for j in range(n):
                row = {}
                for k, a in A.row(i).items():
                    if (k, j) in spos:
                        row[spos[(k, j)]] = row.get(spos[(k, j)], 0) + a
                for k in range(n):
                    a = A[k, j]
                    if a and (i, k) in spos:
                        row[spos[(i, k)]] = row.get(spos[(i, k)], 0) - a
                row = {c: v for c, v in row.items() if v}
                if row:
                    for c, v in row.items():
                        rows[(r, c)] = v
                    r += 1
    eq = Mat(max(r, 1), len(slots), rows)
    basis = kernel_basis(eq)
    mats = []
    for vec in basis:
        mats.append(Mat(n, n, {slots[k]: v for k, v in enumerate(vec) if v}))
    # the nilpotent radical of a commutative-or-not finite algebra: elements x
    # with tr(x y) = 0 for all y in the algebra (characteristic zero)
    from .linalg import rank as _rank
    gram = Mat(len(mats), len(mats), {(a, b): _trace(mats[a] @ mats[b])
                                       for a in range(len(mats)) for b in range(len(mats))})
    rad = len(mats) - _rank(gram) if mats else 0
    return len(mats), rad


def _trace(m: Mat):
    return sum(m.diagonal(), 0)


def is_indecomposable(M: Supermodule) -> bool:
    total, rad = centralizer_dim(M)
    return total - rad == 1
