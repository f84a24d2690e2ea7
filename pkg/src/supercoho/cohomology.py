"""Relative cochain complexes, cohomology, invariant rings and restriction maps.

Cochains of the pair (g, a) are super-alternating maps on g/a with values in
a module M.  The quotient g/a is modelled by a complement of a spanned by
standard basis vectors of g (even ones first); a cochain of degree p is
stored by its values on canonical p-tuples of complement vectors: weakly
increasing index tuples in which even vectors do not repeat.  The "weak"
cochain space is spanned by the functionals phi_{T,m} sending the canonical
tuple T to the module basis vector m; its index is ``T * dim M + m``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from contextlib import contextmanager
from typing import Callable, Optional, Sequence

from .algebra import EVEN, ODD, LieSuperalgebra, Subalgebra, _sign, basis_subalgebra, zero_subalgebra
from .errors import DimensionCapExceeded, IncompatiblePairs, StructureError
from .linalg import Echelon, Mat, kernel_from_rref, left_annihilator, rank, rat, rref, solve
from .modules import Supermodule, restrict

DEFAULT_MAX_DIM = 20000

_TRACKERS: list = []


@contextmanager
def track_complexes():
    """Collect every complex built inside the ``with`` block (for auditing)."""
    log: list = []
    _TRACKERS.append(log)
    try:
        yield log
    finally:
        _TRACKERS.remove(log)


def max_dim() -> int:
    return int(os.environ.get("SUPERCOHO_MAX_DIM", DEFAULT_MAX_DIM))


def _acc(d: dict, k, v):
    s = d.get(k, 0) + v
    if s:
        d[k] = s
    else:
        d.pop(k, None)


class PairShape:
    """Combinatorial data of the super-exterior powers of g/a.

    ``comp`` lists the g-basis indices spanning the complement of a, even ones
    first.  ``cbr[(i, j)]`` is the complement part of [c_i, c_j] and
    ``a_act[k]`` the matrix of ad(a_k) on the complement, modulo a.
    """

    def __init__(self, g: LieSuperalgebra, a: Subalgebra):
        if a.parent is not g:
            raise StructureError("a must be a subalgebra of g")
        for k in range(a.dim):
            if any(g.parity[i] != EVEN for i in a.vector(k)):
                raise StructureError("the subalgebra a must be purely even")
        self.g = g
        self.a = a
        n = g.dim
        ech = Echelon(n)
        for k in range(a.dim):
            if not ech.insert(a.vector(k)):
                raise StructureError("a basis is linearly dependent")
        comp = []
        for i in range(n):
            if ech.insert({i: 1}):
                comp.append(i)
        comp.sort(key=lambda i: (g.parity[i], i))
        self.comp = tuple(comp)
        self.cpar = tuple(g.parity[i] for i in comp)
        self.q = len(comp)
        cols = [a.vector(k) for k in range(a.dim)] + [{i: 1} for i in comp]
        P = Mat.from_columns(cols, rows=n)
        # inverse of the adapted basis matrix, column by column
        inv_cols = []
        for k in range(n):
            e = [0] * n
            e[k] = 1
            inv_cols.append(solve(P, e))
        self._Pinv = Mat.from_columns(inv_cols, rows=n)
        self._cpos = {i: t for t, i in enumerate(comp)}
        na = a.dim
        self.cbr = {}
        for s in range(self.q):
            for t in range(s, self.q):
                v = self.project(g.bracket(comp[s], comp[t]))
                if v:
                    self.cbr[(s, t)] = v
        self.a_act = []
        for k in range(na):
            hv = a.vector(k)
            ent = {}
            for t in range(self.q):
                for s, c in self.project(g.bracket_vectors(hv, {comp[t]: 1})).items():
                    ent[(s, t)] = c
            self.a_act.append(Mat(self.q, self.q, ent))
        self._tuples = {}
        self._term1 = {}
        self._term2 = {}

    def split(self, vec: dict) -> tuple[dict, dict]:
        """Adapted coordinates of a g-vector: (a part, complement part)."""
        coords = self._Pinv.apply(vec)
        na = self.a.dim
        apart = {k: c for k, c in coords.items() if k < na}
        cpart = {k - na: c for k, c in coords.items() if k >= na}
        return apart, cpart

    def project(self, vec: dict) -> dict:
        return self.split(vec)[1] if vec else {}

    def bracket_mod_a(self, s: int, t: int) -> dict:
        if s <= t:
            return self.cbr.get((s, t), {})
        v = self.cbr.get((t, s))
        if not v:
            return {}
        sg = -_sign(self.cpar[s], self.cpar[t])
        return {k: sg * c for k, c in v.items()}

    # -- tuples ------------------------------------------------------------
    def tuples(self, p: int) -> tuple[list, dict]:
        got = self._tuples.get(p)
        if got is None:
            ne = sum(1 for x in self.cpar if x == EVEN)
            evens = range(ne)
            odds = range(ne, self.q)
            out = []
            for k in range(min(p, ne) + 1):
                for E in itertools.combinations(evens, k):
                    for O in itertools.combinations_with_replacement(odds, p - k):
                        out.append(E + O)
            got = (out, {T: i for i, T in enumerate(out)})
            self._tuples[p] = got
        return got

    def count(self, p: int) -> int:
        return len(self.tuples(p)[0])

    def canon(self, seq: Sequence[int]) -> Optional[tuple[int, tuple]]:
        """Canonical form of a tuple of complement positions: (sign, sorted tuple) or None if zero."""
        par = self.cpar
        sign = 1
        n = len(seq)
        for x in range(n):
            for y in range(x + 1, n):
                a, b = seq[x], seq[y]
                if a > b:
                    sign *= -_sign(par[a], par[b])
                elif a == b and par[a] == EVEN:
                    return None
        return sign, tuple(sorted(seq))

    # -- differential pieces -----------------------------------------------
    def term1(self, p: int) -> dict:
        """T -> list of (i, T', coeff): phi_T contributes coeff * rho(c_i) at T' (before the |m| sign)."""
        got = self._term1.get(p)
        if got is None:
            par = self.cpar
            got = {}
            for T1 in self.tuples(p + 1)[0]:
                pre = 0
                for j, i in enumerate(T1):
                    T = T1[:j] + T1[j + 1:]
                    pT = sum(par[t] for t in T)
                    c = (-1) ** j * _sign(par[i], pre) * _sign(par[i], pT)
                    got.setdefault(T, []).append((i, T1, c))
                    pre += par[i]
            # merge duplicate (i, T') produced by repeated odd entries
            for T, lst in got.items():
                acc: dict = {}
                for i, T1, c in lst:
                    _acc(acc, (i, T1), c)
                got[T] = [(i, T1, c) for (i, T1), c in sorted(acc.items())]
            self._term1[p] = got
        return got

    def term2(self, p: int) -> dict:
        """T -> list of (T', coeff): the bracket part of d on phi_T."""
        got = self._term2.get(p)
        if got is None:
            par = self.cpar
            acc: dict = {}
            for T1 in self.tuples(p + 1)[0]:
                pref = [0]
                for t in T1:
                    pref.append(pref[-1] + par[t])
                for j in range(len(T1)):
                    for l in range(j + 1, len(T1)):
                        br = self.bracket_mod_a(T1[j], T1[l])
                        if not br:
                            continue
                        xj, xl = par[T1[j]], par[T1[l]]
                        e = (j + l) + xj * pref[j] + xl * pref[l] + xj * xl
                        eps = -1 if e % 2 else 1
                        rest = T1[:j] + T1[j + 1:l] + T1[l + 1:]
                        for k, c in br.items():
                            r = self.canon((k,) + rest)
                            if r is None:
                                continue
                            sg, T = r
                            _acc(acc.setdefault(T, {}), T1, eps * c * sg)
            got = {T: sorted(v.items()) for T, v in acc.items()}
            self._term2[p] = got
        return got

    def derivation_on_tuples(self, X: Mat, p: int) -> dict:
        """Extension of a complement endomorphism X as a derivation: T -> {T'': coeff}."""
        out = {}
        cols = [X.column(t) for t in range(self.q)]
        for T in self.tuples(p)[0]:
            acc: dict = {}
            for j, t in enumerate(T):
                for u, c in cols[t].items():
                    r = self.canon(T[:j] + (u,) + T[j + 1:])
                    if r is not None:
                        _acc(acc, r[1], r[0] * c)
            out[T] = acc
        return out


def multilinear_pullback(src: PairShape, dst: PairShape, L: Sequence[dict], p: int) -> dict:
    """Matrix of phi -> phi(L-, ..., L-) on canonical tuples.

    ``L[i]`` gives dst-complement coordinates of the image of src-complement
    vector ``i``.  Returns {T_src: {T_dst: coeff}} with
    (pullback phi)(x_T_src) = sum coeff * phi(y_T_dst).
    """
    out = {}
    for T in src.tuples(p)[0]:
        acc: dict = {}
        for choice in itertools.product(*[sorted(L[t].items()) for t in T]):
            c = 1
            seq = []
            for u, cu in choice:
                c *= cu
                seq.append(u)
            r = dst.canon(seq)
            if r is not None:
                _acc(acc, r[1], r[0] * c)
        out[T] = acc
    return out


_SHAPES: dict = {}


def pair_shape(g: LieSuperalgebra, a: Subalgebra) -> PairShape:
    key = (id(g), id(a))
    got = _SHAPES.get(key)
    if got is None or got.g is not g or got.a is not a:
        got = PairShape(g, a)
        _SHAPES[key] = got
    return got


@dataclass
class CohomologyResult:
    dims: list
    representatives: list
    complex_dims: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "complexDims": list(self.complex_dims)}


class RelativeCochainComplex:
    """Complex of a-invariant cochains on g/a with values in M, degrees 0..pmax."""

    def __init__(self, g: LieSuperalgebra, a: Subalgebra, M: Supermodule, pmax: int = 4,
                 check: bool = True):
        if pmax < 1:
            raise ValueError("pmax must be at least 1")
        if M.algebra is not g:
            raise StructureError("coefficient module is over a different algebra")
        self.g, self.a, self.M, self.pmax = g, a, M, pmax
        self.shape = pair_shape(g, a)
        self._sign_flip = False
        self._setup_invariants()
        self._build_differentials()
        if check:
            self.check_d_squared()
        for log in _TRACKERS:
            log.append(self)

    # -- invariant cochains --------------------------------------------------
    def _torus(self) -> tuple[list, list]:
        """Split a-basis into elements acting diagonally (on complement and M) and the rest."""
        torus, rest = [], []
        sh, M = self.shape, self.M
        for k in range(self.a.dim):
            act = sh.a_act[k]
            rho = M.rho(self.a.vector(k))
            if act.is_diagonal() and rho.is_diagonal():
                torus.append((k, act.diagonal(), rho.diagonal()))
            else:
                rest.append((k, rho))
        return torus, rest

    def _setup_invariants(self):
        sh, M = self.shape, self.M
        dM = M.dim
        torus, rest = self._torus()
        cap = max_dim()
        total = 0
        self.basis = []      # per degree: list of sparse weak vectors
        self.free = []       # per degree: weak indices serving as coordinates
        self.weak_dims = []
        for p in range(self.pmax + 1):
            tuples, tpos = sh.tuples(p)
            self.weak_dims.append(len(tuples) * dM)
            cand = []
            for ti, T in enumerate(tuples):
                wT = [sum(diag[t] for t in T) for _, diag, _ in torus]
                for m in range(dM):
                    if all(rho_d[m] == w for (_, _, rho_d), w in zip(torus, wT)):
                        cand.append(ti * dM + m)
            total += len(cand)
            if total > cap:
                raise DimensionCapExceeded(
                    f"cochain spaces exceed {cap} dimensions (set SUPERCOHO_MAX_DIM to raise the cap)")
            cpos = {w: k for k, w in enumerate(cand)}
            rows = {}
            r = 0
            if rest and cand:
                for k, rho in rest:
                    E = sh.derivation_on_tuples(sh.a_act[k], p)
                    # (h.phi)_{T,m'} = sum_m rho[m',m] c_{T,m} - sum_{T''} E[T][T''] c_{T'',m'}
                    for ti, T in enumerate(tuples):
                        fT = [(tpos[T2], c) for T2, c in E[T].items()]
                        for m2 in range(dM):
                            row = {}
                            for m, c in rho.row(m2).items():
                                w = ti * dM + m
                                if w in cpos:
                                    _acc(row, cpos[w], c)
                            for t2, c in fT:
                                w = t2 * dM + m2
                                if w in cpos:
                                    _acc(row, cpos[w], -c)
                            if row:
                                for j, v in row.items():
                                    rows[(r, j)] = v
                                r += 1
            if r:
                red, freec = rref(Mat(r, len(cand), rows))
                kern = kernel_from_rref(red, freec)
                basis = [{cand[j]: v for j, v in vec.items()} for vec in kern]
                free = [cand[j] for j in freec]
            else:
                basis = [{w: 1} for w in cand]
                free = list(cand)
            self.basis.append(basis)
            self.free.append(free)

    @property
    def dims(self) -> list:
        return [len(b) for b in self.basis]

    def coords(self, p: int, weak: dict, verify: bool = True) -> list:
        """Coordinates of an invariant weak cochain in the degree-p basis."""
        free = self.free[p]
        x = [weak.get(w, 0) for w in free]
        if verify:
            back: dict = {}
            for k, c in enumerate(x):
                if c:
                    for w, v in self.basis[p][k].items():
                        _acc(back, w, c * v)
            if back != {w: v for w, v in weak.items() if v}:
                raise StructureError(f"cochain of degree {p} is not a-invariant")
        return x

    def weak_vector(self, p: int, coords: Sequence) -> dict:
        out: dict = {}
        for k, c in enumerate(coords):
            if c:
                for w, v in self.basis[p][k].items():
                    _acc(out, w, c * v)
        return out

    # -- differential --------------------------------------------------------
    def apply_weak_d(self, p: int, weak: dict) -> dict:
        sh, M = self.shape, self.M
        dM = M.dim
        tuples, _ = sh.tuples(p)
        _, tpos1 = sh.tuples(p + 1)
        t1 = sh.term1(p)
        t2 = sh.term2(p)
        mpar = M.parity
        out: dict = {}
        for w, cw in weak.items():
            ti, m = divmod(w, dM)
            T = tuples[ti]
            for i, T1, c in t1.get(T, ()):
                x = sh.comp[i]
                s = c
                if sh.cpar[i] and mpar[m]:
                    s = -s
                if self._sign_flip and sh.cpar[i] and (mpar[m] + sum(sh.cpar[t] for t in T)) % 2:
                    s = -s
                col = M.action[x].column(m)
                base = tpos1[T1] * dM
                for m2, v in col.items():
                    _acc(out, base + m2, cw * s * v)
            for T1, c in t2.get(T, ()):
                _acc(out, tpos1[T1] * dM + m, cw * c)
        return out

    def _build_differentials(self):
        self.d = []
        for p in range(self.pmax):
            ent = {}
            for k, vec in enumerate(self.basis[p]):
                img = self.apply_weak_d(p, vec)
                x = self.coords(p + 1, img)
                for r, c in enumerate(x):
                    if c:
                        ent[(r, k)] = c
            self.d.append(Mat(len(self.basis[p + 1]), len(self.basis[p]), ent))

    def check_d_squared(self):
        for p in range(self.pmax - 1):
            if not (self.d[p + 1] @ self.d[p]).is_zero():
                raise StructureError(f"d o d != 0 in degree {p}")
        return True

    # -- cohomology ------------------------------------------------------------
    def ranks(self) -> list:
        if not hasattr(self, "_ranks"):
            self._ranks = [rank(m) for m in self.d]
        return self._ranks

    def cohomology(self) -> CohomologyResult:
        rk = self.ranks()
        dims, reps = [], []
        for p in range(self.pmax):
            prev = rk[p - 1] if p > 0 else 0
            dims.append(len(self.basis[p]) - rk[p] - prev)
            reps.append(self.representatives(p))
        for p in range(self.pmax):
            if len(reps[p]) != dims[p]:
                raise StructureError("representative count disagrees with rank count")
        return CohomologyResult(dims, reps, self.dims)

    def cocycles(self, p: int) -> list:
        red, free = rref(self.d[p])
        return kernel_from_rref(red, free)

    def coboundaries(self, p: int) -> list:
        """Spanning set of B^p as sparse coordinate vectors."""
        if p == 0:
            return []
        return [c for c in self.d[p - 1].columns() if c]

    def representatives(self, p: int) -> list:
        ech = Echelon(len(self.basis[p]))
        for b in self.coboundaries(p):
            ech.insert(b)
        reps = []
        for z in self.cocycles(p):
            if ech.insert(z):
                reps.append(z)
        return reps

    def euler_check(self) -> Optional[bool]:
        """Alternating-sum identity, when the top cochain space vanishes (None otherwise)."""
        if self.dims[self.pmax] != 0:
            return None
        h = self.cohomology().dims
        lhs = sum((-1) ** p * d for p, d in enumerate(self.dims[:self.pmax]))
        rhs = sum((-1) ** p * d for p, d in enumerate(h))
        return lhs == rhs


def build_relative_complex(g: LieSuperalgebra, a: Subalgebra, M: Supermodule, pmax: int = 4,
                           check: bool = True) -> RelativeCochainComplex:
    return RelativeCochainComplex(g, a, M, pmax, check=check)


def cohomology(cx: RelativeCochainComplex) -> CohomologyResult:
    return cx.cohomology()


# ---------------------------------------------------------------------------
# invariants of cohomology under operators commuting with d

def invariant_cohomology_dims(cx: RelativeCochainComplex, ops: Sequence[Callable[[int, dict], dict]]) -> list:
    """Dimensions of {[z] in H^p : op[z] = 0 for every op} (ops act on weak cochains).

    Each op maps an invariant weak p-cochain to another one; "fixed" conditions
    are expressed by passing ``lambda p, v: g(v) - v``.
    """
    out = []
    for p in range(cx.pmax):
        n = len(cx.basis[p])
        Z = cx.cocycles(p)
        Bs = cx.coboundaries(p)
        rk_b = cx.ranks()[p - 1] if p > 0 else 0
        if not Z:
            out.append(0)
            continue
        Bmat = Mat.from_columns(Bs, rows=n) if Bs else Mat.zeros(n, 0)
        ann = left_annihilator(Bmat)
        rows = {}
        r = 0
        for op in ops:
            imgs = []
            for z in Z:
                weak = cx.weak_vector(p, [z.get(j, 0) for j in range(n)])
                imgs.append(cx.coords(p, op(p, weak)))
            for arow_i in range(ann.rows):
                arow = ann.row(arow_i)
                if not arow:
                    continue
                row = {}
                for k, img in enumerate(imgs):
                    v = sum((c * img[j] for j, c in arow.items()), 0)
                    if v:
                        row[k] = v
                if row:
                    for k, v in row.items():
                        rows[(r, k)] = v
                    r += 1
        if r:
            red, free = rref(Mat(r, len(Z), rows))
            kern = kernel_from_rref(red, free)
        else:
            kern = [{k: 1} for k in range(len(Z))]
        ech = Echelon(n)
        for b in Bs:
            ech.insert(b)
        cnt = 0
        for kv in kern:
            vec: dict = {}
            for k, c in kv.items():
                for j, v in Z[k].items():
                    _acc(vec, j, c * v)
            if ech.insert(vec):
                cnt += 1
        out.append(cnt)
        assert ech.rank - cnt == rk_b
    return out


def lie_operator(cx: RelativeCochainComplex, X: Mat, rho: Mat) -> Callable[[int, dict], dict]:
    """(h.phi)(x_T) = rho(h) phi(x_T) - phi(ad_h x_T) with ad_h given on complement coordinates."""
    sh = cx.shape
    dM = cx.M.dim
    cache = {}

    def op(p, weak):
        if p not in cache:
            tuples, tpos = sh.tuples(p)
            E = sh.derivation_on_tuples(X, p)
            # phi(ad_h x_T) picks up c_{T''} * E[T][T''] for every T'' in the image of T
            cache[p] = {tpos[T]: [(tpos[T2], c) for T2, c in img.items()] for T, img in E.items()}
        images = cache[p]
        vals: dict = {}
        for w, c in weak.items():
            vals.setdefault(w // dM, []).append((w % dM, c))
        out: dict = {}
        for w, c in weak.items():
            ti, m = divmod(w, dM)
            for m2, v in rho.column(m).items():
                _acc(out, ti * dM + m2, c * v)
        for ti, lst in images.items():
            for t2, e in lst:
                for m, c in vals.get(t2, ()):
                    _acc(out, ti * dM + m, -c * e)
        return out

    return op


def group_operator(cx: RelativeCochainComplex, G: Mat, rho: Optional[Mat] = None) -> Callable[[int, dict], dict]:
    """phi -> rho(g) phi(g^{-1} -) - phi, with g given on complement coordinates.

    With ``rho`` omitted the coefficients are fixed.  Kills exactly the g-fixed cochains.
    """
    sh = cx.shape
    dM = cx.M.dim
    from .linalg import rref as _rref
    n = G.rows
    aug = G.hstack(Mat.identity(n))
    red, _ = _rref(aug)
    Ginv = Mat(n, n, {(c, j - n): v for c, r in red.items() for j, v in r.items() if j >= n})
    L = [Ginv.column(t) for t in range(n)]
    cache = {}

    def op(p, weak):
        if p not in cache:
            cache[p] = multilinear_pullback(sh, sh, L, p)
        pb = cache[p]
        tuples, tpos = sh.tuples(p)
        vals: dict = {}
        for w, c in weak.items():
            ti, m = divmod(w, dM)
            vals[(ti, m)] = c
        out: dict = {}
        for ti, T in enumerate(tuples):
            for T2, e in pb[T].items():
                t2 = tpos[T2]
                for m in range(dM):
                    c = vals.get((t2, m))
                    if c:
                        if rho is None:
                            _acc(out, ti * dM + m, e * c)
                        else:
                            for m2, v in rho.column(m).items():
                                _acc(out, ti * dM + m2, e * c * v)
        for w, c in weak.items():
            _acc(out, w, -c)
        return out

    return op


def absolute_odd_cohomology(v: Subalgebra, M: Supermodule, pmax: int = 4) -> tuple[CohomologyResult, RelativeCochainComplex]:
    """Cohomology of an odd abelian subalgebra v with coefficients in M (restricted to v)."""
    va = v.algebra
    if any(p != ODD for p in va.parity):
        raise StructureError("v must be purely odd")
    for i in range(va.dim):
        for j in range(i, va.dim):
            if va.bracket(i, j):
                raise StructureError("v must be abelian")
    Mv = restrict(M, v) if M.algebra is v.parent else M
    cx = RelativeCochainComplex(va, zero_subalgebra(va), Mv, pmax)
    return cx.cohomology(), cx


def normalizer_operators(cx: RelativeCochainComplex, v: Subalgebra, g0: Subalgebra, M: Supermodule) -> list:
    """Operators of the degree-zero elements on the Koszul complex of v (must normalize v)."""
    g = v.parent
    ops = []
    for k in range(g0.dim):
        hv = g0.vector(k)
        ent = {}
        for t in range(v.dim):
            br = g.bracket_vectors(hv, v.vector(t))
            x = v.coords(br)
            if x is None:
                raise StructureError("degree-zero element does not normalize v")
            for s, c in enumerate(x):
                if c:
                    ent[(s, t)] = c
        X = Mat(v.dim, v.dim, ent)
        ops.append(lie_operator(cx, X, M.rho(hv)))
    return ops


def giso_comparison(g: LieSuperalgebra, M: Supermodule, pmax: int = 4) -> tuple[list, list]:
    """H^n(g+, g_0; M) two ways: relative complex, and g_0-invariants of H^n(g_1; M)."""
    from .modules import degree_zero
    from .algebra import graded_part
    gplus = graded_part(g, [0, 1], name="g+")
    gp = gplus.algebra
    g0_in_gp = basis_subalgebra(gp, [i for i, d in enumerate(gp.zdegree) if d == 0], name="g0")
    Mp = restrict(M, gplus)
    lhs = RelativeCochainComplex(gp, g0_in_gp, Mp, pmax).cohomology().dims
    g1 = graded_part(g, [1], name="g1")
    _, cx = absolute_odd_cohomology(g1, M, pmax)
    g0 = degree_zero(g)
    rhs = invariant_cohomology_dims(cx, normalizer_operators(cx, g1, g0, M))
    return lhs, rhs


# ---------------------------------------------------------------------------
# polynomial invariants

def _monomials(q: int, d: int) -> list:
    out = []
    for combo in itertools.combinations_with_replacement(range(q), d):
        e = [0] * q
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def invariant_ring_dims(q: int, lie_action: Sequence[Mat] = (), group=None, dmax: int = 4) -> list:
    """dim of invariant polynomials of degree d on a q-dimensional space, d = 0..dmax.

    ``lie_action`` are q x q matrices X acting on the space; a polynomial f is
    Lie-invariant when sum_ij X[i,j] u_j df/du_i = 0.  ``group`` (a
    FiniteGroupAction on the same space) is handled by Reynolds averaging of
    f(g u) over all elements.
    """
    torus = [X.diagonal() for X in lie_action if X.is_diagonal()]
    others = [X for X in lie_action if not X.is_diagonal()]
    dims = []
    for d in range(dmax + 1):
        monos = _monomials(q, d)
        mpos = {e: k for k, e in enumerate(monos)}
        cand = [e for e in monos if all(sum(w[i] * e[i] for i in range(q)) == 0 for w in torus)]
        cpos = {e: k for k, e in enumerate(cand)}
        rows = {}
        r = 0
        for X in others:
            # image of each candidate monomial, then read rows per target monomial
            images: dict = {}
            for k, e in enumerate(cand):
                for i in range(q):
                    if not e[i]:
                        continue
                    for j, x in X.row(i).items():
                        f = list(e)
                        f[i] -= 1
                        f[j] += 1
                        _acc(images.setdefault(tuple(f), {}), k, x * e[i])
            for tgt in sorted(images):
                row = images[tgt]
                if row:
                    for k, v in row.items():
                        rows[(r, k)] = v
                    r += 1
        if r:
            red, free = rref(Mat(r, len(cand), rows))
            kern = kernel_from_rref(red, free)
        else:
            kern = [{k: 1} for k in range(len(cand))]
        if group is None or not kern:
            dims.append(len(kern))
            continue
        subs = [_substitution(G, monos, mpos, q, d) for G in group.elements()]
        ech = Echelon(len(monos))
        for kv in kern:
            f = {mpos[cand[k]]: c for k, c in kv.items()}
            avg: dict = {}
            for S in subs:
                for mi, c in f.items():
                    for mj, v in S[mi].items():
                        _acc(avg, mj, c * v)
            ech.insert(avg)
        dims.append(ech.rank)
    return dims


def _substitution(G: Mat, monos, mpos, q, d) -> list:
    """For each monomial u^e, the expansion of (G u)^e."""
    lin = [G.row(i) for i in range(q)]
    out = []
    for e in monos:
        poly = {tuple([0] * q): 1}
        for i in range(q):
            for _ in range(e[i]):
                new: dict = {}
                for mono, c in poly.items():
                    for j, x in lin[i].items():
                        f = list(mono)
                        f[j] += 1
                        _acc(new, tuple(f), c * x)
                poly = new
        out.append({mpos[m]: c for m, c in poly.items()})
    return out


def torus_action_on(g: LieSuperalgebra, sub_indices: Sequence[int], acting: Sequence[int]) -> list:
    """Matrices of ad(h), h in ``acting``, on the span of basis vectors ``sub_indices``."""
    pos = {i: k for k, i in enumerate(sub_indices)}
    mats = []
    for h in acting:
        ent = {}
        for t, i in enumerate(sub_indices):
            for k, c in g.bracket(h, i).items():
                if k not in pos:
                    raise StructureError("acting element does not preserve the subspace")
                ent[(pos[k], t)] = c
        mats.append(Mat(len(sub_indices), len(sub_indices), ent))
    return mats


# ---------------------------------------------------------------------------
# restriction maps

@dataclass
class RestrictionResult:
    cochain_maps: list
    induced_maps: list
    injective: list
    kernel_witness: dict
    dims_g: list
    dims_h: list

    def to_json(self) -> dict:
        return {"dimsG": self.dims_g, "dimsH": self.dims_h, "injective": self.injective,
                "kernelWitnessDegrees": sorted(self.kernel_witness)}


def restriction(g_pair: tuple, h_pair: tuple, M: Supermodule, pmax: int = 4) -> RestrictionResult:
    """Restriction H^p(g, a_g; M) -> H^p(h, a_h; M|h) with injectivity certificates.

    ``g_pair = (g, a_g)``, ``h_pair = (h, a_h)`` where h is a Subalgebra of g and
    a_h a Subalgebra of h.algebra.
    """
    g, a_g = g_pair
    h, a_h = h_pair
    if not isinstance(h, Subalgebra) or h.parent is not g:
        raise IncompatiblePairs("h must be a subalgebra of g")
    if a_h.parent is not h.algebra:
        raise IncompatiblePairs("a_h must be a subalgebra of h")
    cg = RelativeCochainComplex(g, a_g, M, pmax)
    Mh = restrict(M, h)
    ch = RelativeCochainComplex(h.algebra, a_h, Mh, pmax)
    sg, shh = cg.shape, ch.shape
    for k in range(a_h.dim):
        img = h.image(a_h.vector(k))
        if sg.split(img)[1]:
            raise IncompatiblePairs("a_h does not map into a_g")
    L = [sg.project(h.image({c: 1})) for c in shh.comp]
    dM = M.dim
    maps = []
    for p in range(pmax + 1):
        pb = multilinear_pullback(shh, sg, L, p)
        tuples_h, _ = shh.tuples(p)
        _, tpos_g = sg.tuples(p)
        ent = {}
        for k, vec in enumerate(cg.basis[p]):
            vals: dict = {}
            for w, c in vec.items():
                vals[w] = c
            img: dict = {}
            for ti, T in enumerate(tuples_h):
                for Tg, e in pb[T].items():
                    base = tpos_g[Tg] * dM
                    for m in range(dM):
                        c = vals.get(base + m)
                        if c:
                            _acc(img, ti * dM + m, e * c)
            x = ch.coords(p, img)
            for r, c in enumerate(x):
                if c:
                    ent[(r, k)] = c
        maps.append(Mat(len(ch.basis[p]), len(cg.basis[p]), ent))
    for p in range(pmax):
        if maps[p + 1] @ cg.d[p] != ch.d[p] @ maps[p]:
            raise StructureError(f"restriction is not a chain map in degree {p}")
    hg, hh = cg.cohomology(), ch.cohomology()
    injective, witness, induced = [], {}, []
    for p in range(pmax):
        ng, nh = len(cg.basis[p]), len(ch.basis[p])
        Zg = cg.cocycles(p)
        Bh = ch.coboundaries(p)
        Bg = cg.coboundaries(p)
        # kernel of [R Z_g | -B_h]
        cols = [maps[p].apply(z) for z in Zg] + [{j: -v for j, v in b.items()} for b in Bh]
        if Zg:
            big = Mat.from_columns(cols, rows=nh) if cols else Mat.zeros(nh, 0)
            red, free = rref(big)
            kern = kernel_from_rref(red, free)
        else:
            kern = []
        ech = Echelon(ng)
        for b in Bg:
            ech.insert(b)
        kdim = 0
        wit = None
        for kv in kern:
            vec: dict = {}
            for k, c in kv.items():
                if k < len(Zg):
                    for j, v in Zg[k].items():
                        _acc(vec, j, c * v)
            if vec and ech.insert(vec):
                kdim += 1
                if wit is None:
                    wit = vec
        injective.append(kdim == 0)
        if wit is not None:
            witness[p] = wit
        # induced map on chosen representatives
        reps_h = hh.representatives[p]
        basis_cols = reps_h + Bh
        ent = {}
        if hg.representatives[p] and reps_h:
            A = Mat.from_columns(basis_cols, rows=nh)
            for k, z in enumerate(hg.representatives[p]):
                x = solve(A, [maps[p].apply(z).get(j, 0) for j in range(nh)])
                if x is None:
                    raise StructureError("restricted cocycle is not a cocycle")
                for r in range(len(reps_h)):
                    if x[r]:
                        ent[(r, k)] = x[r]
        induced.append(Mat(len(reps_h), len(hg.representatives[p]), ent))
        # coboundaries map to coboundaries
        if Bg:
            Bhm = Mat.from_columns(Bh, rows=nh) if Bh else Mat.zeros(nh, 0)
            ech_h = Echelon(nh)
            for b in Bh:
                ech_h.insert(b)
            for b in Bg:
                img = maps[p].apply(b)
                if img and ech_h.reduce_full(img):
                    raise StructureError("image of a coboundary is not a coboundary")
    return RestrictionResult(maps, induced, injective, witness, hg.dims, hh.dims)
