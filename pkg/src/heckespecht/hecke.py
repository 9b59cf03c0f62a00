"""The Hecke algebra action on permutation modules and Specht modules.

A permutation-module vector is a sparse map from minimal coset
representatives (one-line permutation tuples) to scalars.  The generator
action follows the three-case multiplication rule for x-generated
modules: absorb a q on a same-row pair, move to the swapped
representative when the rows increase, and produce the mixed two-term
combination otherwise.  Everything else (words, algebra elements, the
Specht generator, spinning out a basis with exact Gaussian elimination)
is built on that single rule.

The full group-algebra ``HeckeElement`` is also provided; module code
never expands vectors over the n! basis, but the tests use it as an
independent multiplication oracle.
"""

from __future__ import annotations

import itertools
from bisect import insort

from .partitions import check_composition, check_partition, conjugate
from .qfield import FieldSpec
from .tableaux import (
    perm_identity,
    perm_length,
    perm_times_s,
    reduced_word,
    shape_row_of_position,
    standard_count,
    w_lambda,
)


# ---------------------------------------------------------------------------
# sparse vectors over coset representatives

class ModuleVector:
    """Element of the permutation module of a composition shape."""

    __slots__ = ("field", "shape", "coeffs")

    def __init__(self, field: FieldSpec, shape, coeffs=None):
        self.field = field
        self.shape = tuple(shape)
        self.coeffs = {} if coeffs is None else coeffs

    def copy(self) -> "ModuleVector":
        return ModuleVector(self.field, self.shape, dict(self.coeffs))

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, d):
        rep = self.coeffs.get(tuple(d))
        return self.field.scalar(self.field.zero_rep if rep is None else rep)

    def support(self):
        return sorted(self.coeffs)

    def add(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        out = dict(self.coeffs)
        f = self.field
        for k, rep in other.coeffs.items():
            _acc(f, out, k, rep)
        return ModuleVector(f, self.shape, out)

    def sub(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        out = dict(self.coeffs)
        f = self.field
        for k, rep in other.coeffs.items():
            _acc(f, out, k, f.neg(rep))
        return ModuleVector(f, self.shape, out)

    def scale(self, scalar) -> "ModuleVector":
        f = self.field
        rep = scalar.rep if hasattr(scalar, "rep") else scalar
        if f.is_zero(rep):
            return ModuleVector(f, self.shape, {})
        return ModuleVector(f, self.shape, {k: f.mul(v, rep) for k, v in self.coeffs.items()})

    def _check(self, other):
        if self.field != other.field or self.shape != other.shape:
            raise ValueError("vectors live in different modules")

    def __eq__(self, other):
        return (
            isinstance(other, ModuleVector)
            and self.field == other.field
            and self.shape == other.shape
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("ModuleVector is not hashable")

    def __repr__(self):
        items = ", ".join(
            f"{d}: {self.field.format_rep(c)}" for d, c in sorted(self.coeffs.items())
        )
        return f"ModuleVector({self.shape}; {{{items}}})"

    def to_json(self) -> dict:
        """Keys rendered as the row-standard tableaux indexing the basis."""
        rows = []
        for d, c in sorted(self.coeffs.items()):
            start, tab = 0, []
            for part in self.shape:
                tab.append(list(d[start:start + part]))
                start += part
            rows.append({"tableau": tab, "scalar": self.field.format_rep(c)})
        return {"shape": list(self.shape), "coefficients": rows}


def basis_vector(field: FieldSpec, shape, d=None) -> ModuleVector:
    shape = check_composition(shape)
    n = sum(shape)
    d = perm_identity(n) if d is None else tuple(d)
    return ModuleVector(field, shape, {d: field.one_rep})


def _acc(field, coeffs: dict, key, rep):
    old = coeffs.get(key)
    if old is None:
        if not field.is_zero(rep):
            coeffs[key] = rep
        return
    new = field.add(old, rep)
    if field.is_zero(new):
        del coeffs[key]
    else:
        coeffs[key] = new


def _act_dict(field, shape, rowpos, coeffs: dict, i: int) -> dict:
    """Right action of the i-th generator on a coefficient dict."""
    out: dict = {}
    q = field.q_rep
    qm1 = field.sub(q, field.one_rep)
    mul = field.mul
    for d, c in coeffs.items():
        pi = d.index(i)
        pj = d.index(i + 1)
        ri = rowpos[pi]
        rj = rowpos[pj]
        if ri == rj:
            _acc(field, out, d, mul(q, c))
        else:
            swapped = list(d)
            swapped[pi], swapped[pj] = i + 1, i
            swapped = tuple(swapped)
            if ri < rj:
                _acc(field, out, swapped, c)
            else:
                _acc(field, out, swapped, mul(q, c))
                _acc(field, out, d, mul(qm1, c))
    return out


def act_gen(v: ModuleVector, i: int) -> ModuleVector:
    """v . T_i for a single generator index 1 <= i < n."""
    n = sum(v.shape)
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range for n={n}")
    rowpos = shape_row_of_position(v.shape)
    return ModuleVector(v.field, v.shape, _act_dict(v.field, v.shape, rowpos, v.coeffs, i))


def act_word(v: ModuleVector, w) -> ModuleVector:
    """v . T_w along a reduced word of w (the result is word independent)."""
    rowpos = shape_row_of_position(v.shape)
    coeffs = v.coeffs
    for i in reduced_word(tuple(w)):
        coeffs = _act_dict(v.field, v.shape, rowpos, coeffs, i)
    return ModuleVector(v.field, v.shape, coeffs)


def act_element(v: ModuleVector, h: "HeckeElement") -> ModuleVector:
    if v.field != h.field:
        raise ValueError("vector and element over different fields")
    out: dict = {}
    f = v.field
    for w, c in h.coeffs.items():
        moved = act_word(v, w)
        for k, rep in moved.coeffs.items():
            _acc(f, out, k, f.mul(c, rep))
    return ModuleVector(f, v.shape, out)


# ---------------------------------------------------------------------------
# the group algebra, used as a multiplication oracle and for y-sums

class HeckeElement:
    """Sparse element of the Hecke algebra over the n! basis."""

    __slots__ = ("field", "n", "coeffs")

    def __init__(self, field: FieldSpec, n: int, coeffs=None):
        self.field = field
        self.n = n
        self.coeffs = {} if coeffs is None else coeffs

    @classmethod
    def from_perm(cls, field, w, scalar=None) -> "HeckeElement":
        w = tuple(w)
        rep = field.one_rep if scalar is None else (
            scalar.rep if hasattr(scalar, "rep") else scalar
        )
        return cls(field, len(w), {w: rep})

    def is_zero(self) -> bool:
        return not self.coeffs

    def add(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coeffs)
        for k, rep in other.coeffs.items():
            _acc(self.field, out, k, rep)
        return HeckeElement(self.field, self.n, out)

    def scale(self, scalar) -> "HeckeElement":
        f = self.field
        rep = scalar.rep if hasattr(scalar, "rep") else scalar
        if f.is_zero(rep):
            return HeckeElement(f, self.n, {})
        return HeckeElement(f, self.n, {k: f.mul(v, rep) for k, v in self.coeffs.items()})

    def times_gen(self, i: int) -> "HeckeElement":
        f = self.field
        q = f.q_rep
        qm1 = f.sub(q, f.one_rep)
        out: dict = {}
        for w, c in self.coeffs.items():
            ws = perm_times_s(w, i)
            if perm_length(ws) > perm_length(w):
                _acc(f, out, ws, c)
            else:
                _acc(f, out, ws, f.mul(q, c))
                _acc(f, out, w, f.mul(qm1, c))
        return HeckeElement(f, self.n, out)

    def times_word(self, w) -> "HeckeElement":
        out = self
        for i in reduced_word(tuple(w)):
            out = out.times_gen(i)
        return out

    def times(self, other: "HeckeElement") -> "HeckeElement":
        acc = HeckeElement(self.field, self.n, {})
        for w, c in other.coeffs.items():
            acc = acc.add(self.times_word(w).scale(c))
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("HeckeElement is not hashable")

    def __repr__(self):
        items = ", ".join(
            f"T{d}*{self.field.format_rep(c)}" for d, c in sorted(self.coeffs.items())
        )
        return f"HeckeElement({items})"


def row_stabilizer(shape, n: int | None = None):
    """Yield (w, length) over the row stabiliser of the row filling of the
    shape, as permutations of 1..n."""
    shape = check_composition(shape)
    total = sum(shape)
    if n is None:
        n = total
    blocks = []
    start = 1
    for part in shape:
        blocks.append(tuple(range(start, start + part)))
        start += part
    tail = tuple(range(total + 1, n + 1))

    def inversions(seq):
        return sum(
            1
            for a in range(len(seq))
            for b in range(a + 1, len(seq))
            if seq[a] > seq[b]
        )

    for pieces in itertools.product(*(itertools.permutations(b) for b in blocks)):
        w = tuple(itertools.chain.from_iterable(pieces)) + tail
        yield w, sum(inversions(p) for p in pieces)


def x_element(field: FieldSpec, shape) -> HeckeElement:
    out: dict = {}
    for w, _ in row_stabilizer(shape):
        out[w] = field.one_rep
    return HeckeElement(field, sum(shape), out)


def y_element(field: FieldSpec, shape) -> HeckeElement:
    out: dict = {}
    for w, length in row_stabilizer(shape):
        rep = field.q_power(-length)
        if length % 2:
            rep = field.neg(rep)
        out[w] = rep
    return HeckeElement(field, sum(shape), out)


def _stabilizer_generators(shape):
    """Generator indices i with i, i+1 in the same row block."""
    gens = []
    start = 1
    for part in shape:
        gens.extend(range(start, start + part - 1))
        start += part
    return gens


def apply_signed_stabilizer_sum(v: ModuleVector, shape) -> ModuleVector:
    """v . y for the signed sum y over the row stabiliser of the shape.

    Walks the stabiliser along length-increasing generator steps so each
    group element costs a single generator action."""
    field = v.field
    gens = _stabilizer_generators(shape)
    n = sum(v.shape)
    rowpos = shape_row_of_position(v.shape)
    ident = perm_identity(n)
    layer = {ident: v.coeffs}
    acc: dict = dict(v.coeffs)
    length = 0
    neg = field.neg
    qinv_pow = field.q_power
    while layer:
        nxt: dict = {}
        length += 1
        sign_rep = qinv_pow(-length)
        if length % 2:
            sign_rep = neg(sign_rep)
        for w, coeffs in layer.items():
            for i in gens:
                ws = perm_times_s(w, i)
                if perm_length(ws) != length or ws in nxt:
                    continue
                nxt[ws] = _act_dict(field, v.shape, rowpos, coeffs, i)
        for coeffs in nxt.values():
            for k, rep in coeffs.items():
                _acc(field, acc, k, field.mul(sign_rep, rep))
        layer = nxt
    return ModuleVector(field, v.shape, acc)


# ---------------------------------------------------------------------------
# the Specht generator and spinning

_GEN_CACHE: dict = {}
_SPIN_CACHE: dict = {}


def specht_generator(field: FieldSpec, lam) -> ModuleVector:
    """The canonical generator of the Specht submodule, expanded over the
    coset basis of the permutation module."""
    lam = check_partition(lam)
    key = (field, lam)
    cached = _GEN_CACHE.get(key)
    if cached is None:
        v = basis_vector(field, lam)
        v = act_word(v, w_lambda(lam))
        cached = apply_signed_stabilizer_sum(v, conjugate(lam))
        if cached.is_zero():
            raise AssertionError("Specht generator vanished")
        _GEN_CACHE[key] = cached
    return cached.copy()


class SpechtModule:
    """An echelonised basis of the Specht submodule together with the
    exact matrices of the generator action on that basis."""

    __slots__ = ("field", "shape", "basis", "matrices")

    def __init__(self, field, shape, basis, matrices):
        self.field = field
        self.shape = shape
        self.basis = basis
        self.matrices = matrices

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def matrix(self, i: int):
        """Row-major matrix of the right action of the i-th generator."""
        return self.matrices[i - 1]

    def matrices_json(self) -> dict:
        f = self.field
        return {
            "shape": list(self.shape),
            "fieldSpec": f.name,
            "matrices": {
                str(i + 1): [[f.format_rep(c) for c in row] for row in mat]
                for i, mat in enumerate(self.matrices)
            },
        }

    def coordinates(self, v: ModuleVector):
        """Coordinates of v in the echelon basis; raises if v is outside."""
        f = self.field
        coeffs = dict(v.coeffs)
        out = []
        for pivot, row in self.basis_rows():
            c = coeffs.get(pivot)
            if c is None:
                out.append(f.zero_rep)
                continue
            out.append(c)
            for k, rep in row.items():
                _acc(f, coeffs, k, f.neg(f.mul(c, rep)))
        if coeffs:
            raise ValueError("vector lies outside the spun module")
        return out

    def basis_rows(self):
        return [(min(b.coeffs), b.coeffs) for b in self.basis]


def spin_specht(field: FieldSpec, lam) -> SpechtModule:
    """Close the cyclic module generated by the Specht generator under the
    generator action; the echelonised result is cached per (field, shape)."""
    lam = check_partition(lam)
    key = (field, lam)
    cached = _SPIN_CACHE.get(key)
    if cached is not None:
        return cached

    n = sum(lam)
    rowpos = shape_row_of_position(lam)
    f = field
    rows: list[tuple] = []  # (pivot, normalised coeff dict), pivot-sorted

    def reduce(coeffs: dict) -> dict:
        for pivot, row in rows:
            c = coeffs.get(pivot)
            if c is None:
                continue
            nc = f.neg(c)
            for k, rep in row.items():
                _acc(f, coeffs, k, f.mul(nc, rep))
        return coeffs

    def insert(coeffs: dict) -> bool:
        coeffs = reduce(coeffs)
        if not coeffs:
            return False
        pivot = min(coeffs)
        inv = f.inv(coeffs[pivot])
        normal = {k: f.mul(inv, rep) for k, rep in coeffs.items()}
        insort(rows, (pivot, normal), key=lambda item: item[0])
        return True

    insert(dict(specht_generator(field, lam).coeffs))
    changed = True
    while changed:
        changed = False
        for _, row in list(rows):
            for i in range(1, n):
                candidate = _act_dict(f, lam, rowpos, row, i)
                if insert(candidate):
                    changed = True

    basis = [ModuleVector(f, lam, dict(row)) for _, row in rows]
    expected = standard_count(lam)
    if len(basis) != expected:
        raise AssertionError(
            f"spun dimension {len(basis)} differs from standard count {expected} for {lam}"
        )

    matrices = []
    module = SpechtModule(f, lam, basis, [])
    for i in range(1, n):
        mat = []
        for b in basis:
            image = ModuleVector(f, lam, _act_dict(f, lam, rowpos, b.coeffs, i))
            mat.append(module.coordinates(image))
        matrices.append(mat)
    module.matrices.extend(matrices)
    _SPIN_CACHE[key] = module
    return module


def cyclic_closure_dimension(v: ModuleVector) -> int:
    """Dimension of the submodule generated by v, by spinning v under the
    generator action with exact elimination."""
    if v.is_zero():
        return 0
    n = sum(v.shape)
    rowpos = shape_row_of_position(v.shape)
    f = v.field
    rows: list[tuple] = []

    def insert(coeffs: dict) -> bool:
        for pivot, row in rows:
            c = coeffs.get(pivot)
            if c is None:
                continue
            nc = f.neg(c)
            for k, rep in row.items():
                _acc(f, coeffs, k, f.mul(nc, rep))
        if not coeffs:
            return False
        pivot = min(coeffs)
        inv = f.inv(coeffs[pivot])
        insort(rows, (pivot, {k: f.mul(inv, rep) for k, rep in coeffs.items()}),
               key=lambda item: item[0])
        return True

    insert(dict(v.coeffs))
    changed = True
    while changed:
        changed = False
        for _, row in list(rows):
            for i in range(1, n):
                if insert(_act_dict(f, v.shape, rowpos, row, i)):
                    changed = True
    return len(rows)


# ---------------------------------------------------------------------------
# ascending/descending run-sum identity (test hook)

def _prefix_run_sum(v: ModuleVector, lo: int, hi: int, ascending: bool) -> ModuleVector:
    """Sum over the telescoping words I, T_a, T_a T_b, ... between lo and hi."""
    acc = v.copy()
    t = v
    if ascending:
        letters = range(lo, hi)
    else:
        letters = range(hi - 1, lo - 1, -1)
    for i in letters:
        t = act_gen(t, i)
        acc = acc.add(t)
    return acc


def run_sum_identity_holds(field: FieldSpec, mu, d: int, z: int) -> bool:
    """Direct check that pushing the ascending run sum across a descending
    ladder of generators equals the q-shifted descending run sum.

    mu must end in a part equal to 1; d picks the merged row pair and
    z ranges over the ladder top, y <= z <= n."""
    mu = check_partition(mu)
    if mu[-1] != 1:
        raise ValueError("base partition must end in 1")
    s = len(mu) - 1
    if not 1 <= d < s:
        raise ValueError(f"need 1 <= d < {s}")
    n = sum(mu)
    nu = list(mu)
    nu[d - 1] += 1
    nu[d] -= 1
    nu = tuple(nu)
    x = sum(mu[:d]) + 2
    y = sum(mu[:d + 1]) + 1
    if not y <= z <= n:
        raise ValueError(f"need {y} <= z <= {n}")

    lhs = basis_vector(field, nu)
    for i in range(z - 1, x - 1, -1):
        lhs = act_gen(lhs, i)
    lhs = _prefix_run_sum(lhs, x, y, ascending=True)

    rhs = basis_vector(field, nu)
    for i in range(z - 1, y - 1, -1):
        rhs = act_gen(rhs, i)
    rhs = _prefix_run_sum(rhs, x, y, ascending=False)
    rhs = rhs.scale(field.q_power(y - x))
    return lhs == rhs
