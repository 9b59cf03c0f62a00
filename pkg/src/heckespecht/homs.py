"""Homomorphisms between permutation and Specht modules.

A homomorphism out of a Specht module is stored as its coefficient
vector over row-standard (usually semistandard) source tableaux; since
Specht modules are cyclic, evaluating at the canonical generator is
faithful, and membership of the image in the target Specht module is
decided by pushing the value through every one-row-merge map and testing
for zero.

The symbolic composition rule rewrites a merge map composed with a basis
homomorphism as an explicit Gaussian-binomial combination of basis
homomorphisms; the brute-force evaluation path stays available as an
oracle for it.  Hom-space dimensions are computed module-theoretically,
by solving the exact intertwiner system on spun-out generator matrices.
"""

from __future__ import annotations

from bisect import insort

from .hecke import (
    ModuleVector,
    _acc,
    act_word,
    specht_generator,
    spin_specht,
)
from .partitions import (
    check_composition,
    check_partition,
    drop_trailing_zeros,
    nu_composition,
)
from .qfield import FieldSpec, Scalar, parse_field, qbinom
from .tableaux import (
    Tableau,
    coset_reps,
    perm_of_tableau,
    row_equiv_class,
)


class HomSpec:
    """A homomorphism from the Specht module of ``source`` into the
    permutation module of ``target``, as scalar coefficients over
    row-standard source tableaux of the target type."""

    __slots__ = ("field", "source", "target", "coeffs")

    def __init__(self, field: FieldSpec, source, target, coeffs):
        self.field = field
        self.source = check_partition(source)
        self.target = check_composition(target)
        clean = {}
        for tab, rep in coeffs.items():
            if hasattr(rep, "rep"):
                rep = rep.rep
            if field.is_zero(rep):
                continue
            if tab.shape != self.source:
                raise ValueError(f"tableau {tab} does not have shape {self.source}")
            if not tab.is_row_standard():
                raise ValueError(f"tableau {tab} is not row standard")
            content = tab.content()
            if drop_trailing_zeros(content) != drop_trailing_zeros(self.target):
                raise ValueError(f"tableau {tab} does not have type {self.target}")
            clean[tab] = rep
        self.coeffs = clean

    def is_zero_spec(self) -> bool:
        return not self.coeffs

    def is_semistandard_form(self) -> bool:
        return all(tab.is_semistandard() for tab in self.coeffs)

    def coefficient(self, tab: Tableau) -> Scalar:
        rep = self.coeffs.get(tab)
        return self.field.scalar(self.field.zero_rep if rep is None else rep)

    def scaled(self, scalar) -> "HomSpec":
        rep = scalar.rep if hasattr(scalar, "rep") else scalar
        f = self.field
        return HomSpec(
            f, self.source, self.target,
            {tab: f.mul(rep, c) for tab, c in self.coeffs.items()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, HomSpec)
            and self.field == other.field
            and self.source == other.source
            and self.target == other.target
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        body = ", ".join(f"{t}: {self.field.format_rep(c)}" for t, c in sorted(
            self.coeffs.items(), key=lambda item: item[0].reading_word()))
        return f"HomSpec({self.source} -> M^{self.target}; {{{body}}})"

    def to_json(self) -> dict:
        return {
            "source": list(self.source),
            "target": list(self.target),
            "fieldSpec": self.field.name,
            "coefficients": [
                {"tableau": tab.to_lists(), "scalar": self.field.format_rep(rep)}
                for tab, rep in sorted(
                    self.coeffs.items(), key=lambda item: item[0].reading_word()
                )
            ],
        }

    @classmethod
    def from_json(cls, data: dict, field: FieldSpec | None = None) -> "HomSpec":
        if field is None:
            field = parse_field(data["fieldSpec"])
        coeffs = {}
        for item in data["coefficients"]:
            tab = Tableau(item["tableau"])
            coeffs[tab] = field.parse_rep(item["scalar"])
        return cls(field, tuple(data["source"]), tuple(data["target"]), coeffs)


def identity_hom(field: FieldSpec, lam) -> HomSpec:
    lam = check_partition(lam)
    rows = [(i,) * part for i, part in enumerate(lam, start=1)]
    return HomSpec(field, lam, lam, {Tableau(rows): field.one_rep})


# ---------------------------------------------------------------------------
# the basis homomorphisms and the merge maps

def theta_image_of_x(field: FieldSpec, tab: Tableau, target=None) -> ModuleVector:
    """Image of the source cyclic generator under the basis homomorphism
    attached to tab: the sum of coset basis vectors over the row
    equivalence class."""
    if target is None:
        target = tab.content()
    elif drop_trailing_zeros(target) != drop_trailing_zeros(tab.content()):
        raise ValueError("target does not match the tableau type")
    out: dict = {}
    for other in row_equiv_class(tab):
        _acc(field, out, perm_of_tableau(other), field.one_rep)
    return ModuleVector(field, tuple(target), out)


def push_through(base: ModuleVector, v: ModuleVector) -> ModuleVector:
    """Image of v under the homomorphism sending the source generator to
    base: sum of v's coefficients times base pushed by the basis words."""
    f = base.field
    out: dict = {}
    for key, c in v.coeffs.items():
        moved = act_word(base, key)
        for k, rep in moved.coeffs.items():
            _acc(f, out, k, f.mul(c, rep))
    return ModuleVector(f, base.shape, out)


def theta_on_generator(field: FieldSpec, tab: Tableau) -> ModuleVector:
    """Value of the restricted basis homomorphism at the Specht generator
    of the tableau's shape."""
    lam = check_partition(tab.shape)
    return push_through(theta_image_of_x(field, tab), specht_generator(field, lam))


_PSI_BASE_CACHE: dict = {}


def _psi_base(field: FieldSpec, mu, d: int, t: int) -> ModuleVector:
    key = (field, tuple(mu), d, t)
    cached = _PSI_BASE_CACHE.get(key)
    if cached is None:
        mu = check_composition(mu)
        nu = nu_composition(mu, d, t)
        merged = mu[d] - t
        rows = []
        for i, part in enumerate(mu, start=1):
            if i == d + 1:
                rows.append((d,) * merged + (d + 1,) * t)
            else:
                rows.append((i,) * part)
        tab = Tableau(rows)
        out: dict = {}
        for other in row_equiv_class(tab):
            _acc(field, out, perm_of_tableau(other), field.one_rep)
        cached = ModuleVector(field, nu, out)
        _PSI_BASE_CACHE[key] = cached
    return cached


def psi_dt(v: ModuleVector, d: int, t: int) -> ModuleVector:
    """The one-row-merge homomorphism applied to a permutation module
    vector."""
    return push_through(_psi_base(v.field, v.shape, d, t), v)


def specht_membership(v: ModuleVector) -> bool:
    """Whether v lies in the Specht submodule of its permutation module:
    all one-row-merge maps send it to zero."""
    mu = check_partition(v.shape)
    if v.is_zero():
        return True
    for d in range(1, len(mu)):
        for t in range(mu[d]):
            if not psi_dt(v, d, t).is_zero():
                return False
    return True


def compose_psi_theta(field: FieldSpec, tab: Tableau, d: int, t: int) -> HomSpec:
    """Symbolic composition of a one-row-merge map with a basis
    homomorphism, as a Gaussian-binomial combination of basis
    homomorphisms into the merged type."""
    if not tab.is_row_standard():
        raise ValueError("tableau must be row standard")
    lam = tab.shape
    mu = tab.content()
    nu = nu_composition(mu, d, t)
    tbar = mu[d] - t
    # positions of the value d+1 in each row; replacements keep rows weakly
    # increasing only if the leftmost occurrences are replaced
    counts = [sum(1 for v in row if v == d + 1) for row in tab.rows]
    below = [0] * (len(tab.rows) + 1)
    for i in range(len(tab.rows) - 1, -1, -1):
        below[i] = below[i + 1] + sum(1 for v in tab.rows[i] if v == d)
    out: dict = {}
    for combo in _bounded_compositions(tbar, counts):
        rows = []
        coeff = field.one_rep
        for i, row in enumerate(tab.rows):
            beta = combo[i]
            if beta:
                first = row.index(d + 1)
                row = row[:first] + (d,) * beta + row[first + beta:]
            rows.append(row)
            y_i = sum(1 for v in row if v == d)
            if beta:
                x_i = below[i + 1]
                coeff = field.mul(coeff, field.q_power(x_i * beta))
                coeff = field.mul(coeff, qbinom(field, y_i, beta).rep)
        new_tab = Tableau(rows)
        _acc(field, out, new_tab, coeff)
    return HomSpec(field, lam, nu, out)


def _bounded_compositions(total, bounds):
    """All tuples 0 <= c_i <= bounds[i] with sum equal to total."""
    if total < 0:
        return
    if not bounds:
        if total == 0:
            yield ()
        return
    first = bounds[0]
    for c in range(min(first, total), -1, -1):
        for rest in _bounded_compositions(total - c, bounds[1:]):
            yield (c,) + rest


def evaluate_on_generator(hom: HomSpec) -> ModuleVector:
    """Value of the restricted homomorphism at the Specht generator of
    its source."""
    field = hom.field
    lam = check_partition(hom.source)
    combined: dict = {}
    for tab, c in hom.coeffs.items():
        for other in row_equiv_class(tab):
            _acc(field, combined, perm_of_tableau(other), c)
    base = ModuleVector(field, hom.target, combined)
    return push_through(base, specht_generator(field, lam))


def restriction_is_zero(hom: HomSpec) -> bool:
    return evaluate_on_generator(hom).is_zero()


def restriction_into_specht(hom: HomSpec) -> bool:
    target = check_partition(drop_trailing_zeros(hom.target))
    value = evaluate_on_generator(hom)
    value = ModuleVector(hom.field, target, value.coeffs)
    return specht_membership(value)


# ---------------------------------------------------------------------------
# hom-space dimensions via the intertwiner system

def hom_space_dim(field: FieldSpec, lam, mu) -> int:
    """Dimension of the space of module maps from the Specht module of
    lam to the Specht module of mu.

    The general route solves the exact intertwiner system on spun-out
    generator matrices.  Maps out of the trivial one-row module are
    special-cased: the q-symmetric vectors of the permutation module form
    a line, spanned by the all-ones vector, so the dimension is 1 or 0
    according to whether that vector lies in the Specht submodule."""
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    if lam == (sum(mu),):
        ones = ModuleVector(
            field, mu, {d: field.one_rep for d in coset_reps(mu)}
        )
        return 1 if specht_membership(ones) else 0
    sa = spin_specht(field, lam)
    sb = spin_specht(field, mu)
    return _intertwiner_dimension(field, sa.matrices, sb.matrices)


def _intertwiner_dimension(field, mats_a, mats_b) -> int:
    ma = len(mats_a[0])
    mb = len(mats_b[0])
    total = ma * mb
    rows: list[tuple] = []  # (pivot, normalised sparse row), pivot-sorted
    f = field

    def insert(row: dict) -> bool:
        for pivot, existing in rows:
            c = row.get(pivot)
            if c is None:
                continue
            nc = f.neg(c)
            for k, rep in existing.items():
                _acc_int(f, row, k, f.mul(nc, rep))
        if not row:
            return False
        pivot = min(row)
        inv = f.inv(row[pivot])
        normal = {k: f.mul(inv, rep) for k, rep in row.items()}
        insort(rows, (pivot, normal), key=lambda item: item[0])
        return True

    rank = 0
    for A, B in zip(mats_a, mats_b):
        for r in range(ma):
            for c in range(mb):
                row: dict = {}
                for k in range(ma):
                    v = A[r][k]
                    if not f.is_zero(v):
                        _acc_int(f, row, k * mb + c, v)
                for k in range(mb):
                    v = B[k][c]
                    if not f.is_zero(v):
                        _acc_int(f, row, r * mb + k, f.neg(v))
                if insert(row):
                    rank += 1
                    if rank == total:
                        return 0
    return total - rank


def _acc_int(field, row: dict, key: int, rep):
    old = row.get(key)
    if old is None:
        if not field.is_zero(rep):
            row[key] = rep
        return
    new = field.add(old, rep)
    if field.is_zero(new):
        del row[key]
    else:
        row[key] = new


# ---------------------------------------------------------------------------
# row and column removal transfers

def transfer_row_removal(hom: HomSpec, first_row: int) -> HomSpec:
    """Lift a homomorphism across the removal of equal first rows: prepend
    a first row of the given length to both shapes and shift the
    coefficient tableaux along the positional bijection."""
    lam_bar = hom.source
    mu_bar = check_partition(drop_trailing_zeros(hom.target))
    if lam_bar and first_row < lam_bar[0]:
        raise ValueError("first row too short for the source")
    if mu_bar and first_row < mu_bar[0]:
        raise ValueError("first row too short for the target")
    lam = (first_row,) + lam_bar
    mu = (first_row,) + mu_bar
    coeffs = {}
    for tab, rep in hom.coeffs.items():
        rows = [(1,) * first_row]
        rows.extend(tuple(v + 1 for v in row) for row in tab.rows)
        coeffs[Tableau(rows)] = rep
    return HomSpec(hom.field, lam, mu, coeffs)


def restrict_row_removal(hom: HomSpec) -> HomSpec:
    """Inverse direction: drop equal first rows."""
    lam = hom.source
    mu = check_partition(drop_trailing_zeros(hom.target))
    if not lam or not mu or lam[0] != mu[0]:
        raise ValueError("first rows must be equal")
    coeffs = {}
    for tab, rep in hom.coeffs.items():
        first = tab.rows[0]
        if set(first) != {1}:
            raise ValueError("coefficient tableau has a mixed first row")
        rows = [tuple(v - 1 for v in row) for row in tab.rows[1:]]
        coeffs[Tableau(rows)] = rep
    return HomSpec(hom.field, lam[1:], mu[1:], coeffs)


def transfer_column_removal(hom: HomSpec, rows_count: int) -> HomSpec:
    """Lift a homomorphism across the removal of equal first columns:
    prepend a full first column of the given height to both shapes."""
    lam_bar = hom.source
    mu_bar = check_partition(drop_trailing_zeros(hom.target))
    if rows_count < max(len(lam_bar), len(mu_bar), 1):
        raise ValueError("column too short for the shapes")
    lam = tuple((lam_bar[i] if i < len(lam_bar) else 0) + 1 for i in range(rows_count))
    mu = tuple((mu_bar[i] if i < len(mu_bar) else 0) + 1 for i in range(rows_count))
    coeffs = {}
    for tab, rep in hom.coeffs.items():
        if any(v > rows_count for row in tab.rows for v in row):
            raise ValueError("tableau entry exceeds the new row count")
        rows = []
        for i in range(rows_count):
            old = tab.rows[i] if i < len(tab.rows) else ()
            rows.append((i + 1,) + old)
        coeffs[Tableau(rows)] = rep
    return HomSpec(hom.field, lam, mu, coeffs)


def restrict_column_removal(hom: HomSpec) -> HomSpec:
    lam = hom.source
    mu = check_partition(drop_trailing_zeros(hom.target))
    if len(lam) != len(mu):
        raise ValueError("first columns must be equal")
    coeffs = {}
    for tab, rep in hom.coeffs.items():
        for i, row in enumerate(tab.rows, start=1):
            if not row or row[0] != i:
                raise ValueError("coefficient tableau has a non-canonical first column")
        rows = [row[1:] for row in tab.rows]
        rows = [row for row in rows if row]
        coeffs[Tableau(rows)] = rep
    return HomSpec(
        hom.field,
        drop_trailing_zeros(x - 1 for x in lam),
        drop_trailing_zeros(x - 1 for x in mu),
        coeffs,
    )


# ---------------------------------------------------------------------------
# the linear conditions for one-node homomorphisms

def _merge_rewrite(field: FieldSpec, mu, entries, d: int):
    """Rewrite the image of a one-node basis homomorphism under the d-th
    top merge map as (coefficient, code of a semistandard target tableau),
    or None when it vanishes."""
    s = len(mu) - 1
    lam_d = mu[0] + 1 if d == 1 else mu[d - 1]
    r = entries.index(d + 1) + 1
    if r < d:
        new = list(entries)
        new[r - 1] = d
        return field.q_power(mu[d - 1]), tuple(new)
    # after the rewrite, row d is constant; if row d-1 has the same length
    # and also ends in d, the target tableau has a column clash and the
    # image vanishes (rows 1 and 2 never clash: row 1 is one cell longer)
    clash = d >= 3 and mu[d - 2] == mu[d - 1] and entries[d - 2] == d
    if r == d:
        if clash:
            return None
        mu_next = mu[d]
        coeff = field.mul(
            field.q_power(mu_next - 1),
            _qint_rep(field, lam_d - mu_next + 1),
        )
        new = list(entries)
        new[d - 1] = d
        return coeff, tuple(new)
    # the moved value d+1 sits just below the merge row
    if entries[d - 1] == d or clash:
        return None
    i_d = entries[d - 1]
    l = 1
    while d + l <= s and mu[d + l] == mu[d]:
        l += 1
    qexp = field.q_power(mu[d] - 1)
    if d + l == s + 1:
        tail = sorted((i_d,) + entries[d + 1:])
        new = entries[:d - 1] + (d,) + tuple(tail)
        sign = i_d - d - 1
    else:
        i_dl = entries[d + l - 1]
        run = tuple(range(d + 2, d + l + 1))
        if i_d < i_dl:
            new = entries[:d - 1] + (d,) + run + entries[d + l - 1:]
            sign = i_d - d - 1
        else:
            new = entries[:d - 1] + (d,) + run + (i_d,) + entries[d + l:]
            sign = l
    coeff = field.neg(qexp) if sign % 2 else qexp
    return coeff, new


def _qint_rep(field, alpha: int):
    out = field.zero_rep
    for k in range(alpha):
        out = field.add(out, field.q_power(k))
    return out


def one_node_conditions_check(field: FieldSpec, mu, coeffs) -> bool:
    """Whether a coefficient assignment over one-node codes satisfies the
    linear conditions equivalent to the restricted map landing in the
    Specht submodule of the target.

    mu is the full base partition (last part 1); coeffs maps code entry
    tuples to scalars."""
    mu = check_partition(mu)
    if mu[-1] != 1:
        raise ValueError("base partition must end in 1")
    s = len(mu) - 1
    lam = drop_trailing_zeros((mu[0] + 1,) + mu[1:-1])
    clean = {}
    for entries, rep in coeffs.items():
        entries = tuple(entries)
        if sorted(entries) != list(range(2, s + 2)):
            raise ValueError(f"code {entries} is not a permutation of 2..{s + 1}")
        for a, v in enumerate(entries, start=1):
            if v < a:
                raise ValueError(f"code {entries} puts {v} in slot {a}")
            if a < s and lam[a - 1] == lam[a] and v >= entries[a]:
                raise ValueError(f"code {entries} is not semistandard")
        if hasattr(rep, "rep"):
            rep = rep.rep
        clean[entries] = rep
    for d in range(1, s + 1):
        groups: dict = {}
        for entries, rep in clean.items():
            rewritten = _merge_rewrite(field, mu, entries, d)
            if rewritten is None:
                continue
            coeff, target = rewritten
            _acc_group(field, groups, target, field.mul(coeff, rep))
        if groups:
            return False
    return True


def _acc_group(field, groups: dict, key, rep):
    old = groups.get(key)
    new = rep if old is None else field.add(old, rep)
    if field.is_zero(new):
        groups.pop(key, None)
    else:
        groups[key] = new
