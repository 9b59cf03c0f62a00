"""Tableaux of a given shape and type, and the permutation combinatorics
attached to them.

Permutations are tuples in one-line notation with 1-based values:
``w[i-1]`` is the image of i under the right action.  Tableaux are stored
as immutable row tuples.  Everything enumerates in a fixed deterministic
order (lexicographic on reading words), which also realises the total
order used to triangularise one-node coefficient systems.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .partitions import check_composition, check_partition, drop_trailing_zeros


# ---------------------------------------------------------------------------
# permutations

def perm_identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def perm_mul(u, v):
    """Apply u, then v (right action composition)."""
    return tuple(v[x - 1] for x in u)


def perm_inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[x - 1] = i
    return tuple(out)


def perm_length(w) -> int:
    """Coxeter length as the inversion count of the one-line word."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_times_s(w, i: int):
    """w s_i: swap the values i and i+1 in the one-line word."""
    pi = w.index(i)
    pj = w.index(i + 1)
    out = list(w)
    out[pi], out[pj] = i + 1, i
    return tuple(out)


@lru_cache(maxsize=262144)
def reduced_word(w) -> tuple[int, ...]:
    """A reduced word for w, letters applied left to right."""
    word = []
    cur = w
    pos = [0] * (len(w) + 1)
    while True:
        for i, x in enumerate(cur):
            pos[x] = i
        for i in range(1, len(w)):
            if pos[i + 1] < pos[i]:
                break
        else:
            break
        word.append(i)
        cur = perm_times_s(cur, i)
    word.reverse()
    return tuple(word)


# ---------------------------------------------------------------------------
# tableaux

class Tableau:
    """Immutable filling of a composition shape by positive integers."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = hash(self.rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def content(self) -> tuple[int, ...]:
        """The type: entry v occurs content()[v-1] times."""
        counts: dict[int, int] = {}
        top = 0
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
                top = max(top, v)
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def entry(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def is_row_standard(self) -> bool:
        return all(row[k] <= row[k + 1] for row in self.rows for k in range(len(row) - 1))

    def is_semistandard(self) -> bool:
        if not self.is_row_standard():
            return False
        for i in range(len(self.rows) - 1):
            upper, lower = self.rows[i], self.rows[i + 1]
            if len(lower) > len(upper):
                return False
            for j in range(len(lower)):
                if lower[j] <= upper[j]:
                    return False
        return True

    def reading_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Tableau(%s)" % (self.to_lists(),)

    def __str__(self):
        return "[" + ",".join("[" + ",".join(map(str, r)) + "]" for r in self.rows) + "]"

    def to_lists(self):
        return [list(r) for r in self.rows]


def t_row(shape) -> Tableau:
    """1..n along the rows."""
    shape = check_composition(shape)
    rows, k = [], 1
    for part in shape:
        rows.append(tuple(range(k, k + part)))
        k += part
    return Tableau(rows)


def t_col(shape) -> Tableau:
    """1..n down the columns."""
    shape = check_partition(shape)
    grid = [[0] * part for part in shape]
    conj_width = shape[0] if shape else 0
    k = 1
    for j in range(conj_width):
        for i in range(len(shape)):
            if shape[i] > j:
                grid[i][j] = k
                k += 1
    return Tableau(grid)


def w_lambda(shape) -> tuple[int, ...]:
    """The permutation sending the row filling to the column filling."""
    a = t_row(shape).reading_word()
    b = t_col(shape).reading_word()
    out = [0] * len(a)
    for x, y in zip(a, b):
        out[x - 1] = y
    return tuple(out)


def shape_row_of_position(shape) -> tuple[int, ...]:
    """Row index of each position of the row filling, 1-based positions."""
    out = []
    for r, part in enumerate(shape, start=1):
        out.extend([r] * part)
    return tuple(out)


def _row_fillings(length, values_ok, counts):
    """Weakly increasing rows of a given length drawn from a multiset."""
    if length == 0:
        yield ()
        return
    for row in itertools.combinations_with_replacement(values_ok, length):
        ok = True
        used: dict[int, int] = {}
        for v in row:
            used[v] = used.get(v, 0) + 1
            if used[v] > counts[v]:
                ok = False
                break
        if ok:
            yield row


def enumerate_row_standard(shape, mu) -> list[Tableau]:
    """All row-standard tableaux of the given shape and type, in reading
    word order."""
    shape = check_composition(shape)
    mu = check_composition(mu)
    if sum(shape) != sum(mu):
        raise ValueError("shape and type must have equal sizes")
    values = [v for v in range(1, len(mu) + 1)]
    out: list[Tableau] = []

    def fill(i, remaining, rows):
        if i == len(shape):
            out.append(Tableau(rows))
            return
        usable = [v for v in values if remaining[v]]
        for row in _row_fillings(shape[i], usable, remaining):
            for v in row:
                remaining[v] -= 1
            fill(i + 1, remaining, rows + [row])
            for v in row:
                remaining[v] += 1

    fill(0, {v: mu[v - 1] for v in values}, [])
    out.sort(key=lambda t: t.reading_word())
    return out


def enumerate_semistandard(shape, mu) -> list[Tableau]:
    """All semistandard tableaux of the given shape and type, reading word
    order."""
    shape = check_composition(shape)
    mu = check_composition(mu)
    if sum(shape) != sum(mu):
        raise ValueError("shape and type must have equal sizes")
    values = list(range(1, len(mu) + 1))
    out: list[Tableau] = []

    def fill(i, remaining, rows):
        if i == len(shape):
            out.append(Tableau(rows))
            return
        above = rows[i - 1] if i else None
        if above is not None and shape[i] > len(above):
            return

        def build(j, row):
            if j == shape[i]:
                fill(i + 1, remaining, rows + [tuple(row)])
                return
            lo = row[-1] if row else 1
            if above is not None:
                lo = max(lo, above[j] + 1)
            for v in values:
                if v < lo or not remaining[v]:
                    continue
                remaining[v] -= 1
                row.append(v)
                build(j + 1, row)
                row.pop()
                remaining[v] += 1

        build(0, [])

    fill(0, {v: mu[v - 1] for v in values}, [])
    out.sort(key=lambda t: t.reading_word())
    return out


def enumerate_tableaux(shape, mu) -> list[Tableau]:
    """Every filling of the shape with the given type (desk scale only)."""
    shape = check_composition(shape)
    mu = check_composition(mu)
    if sum(shape) != sum(mu):
        raise ValueError("shape and type must have equal sizes")
    entries = [v for v, count in enumerate(mu, start=1) for _ in range(count)]
    words = sorted(set(itertools.permutations(entries)))
    out = []
    for word in words:
        rows, k = [], 0
        for part in shape:
            rows.append(word[k:k + part])
            k += part
        out.append(Tableau(rows))
    return out


def enumerate_standard(shape) -> list[Tableau]:
    shape = check_partition(shape)
    return enumerate_semistandard(shape, (1,) * sum(shape))


@lru_cache(maxsize=4096)
def standard_count(shape) -> int:
    return len(enumerate_standard(shape))


def row_equiv_class(tab: Tableau) -> list[Tableau]:
    """All tableaux row-equivalent to tab (all orderings within rows),
    deterministic order."""
    per_row = []
    for row in tab.rows:
        seen = sorted(set(itertools.permutations(row)))
        per_row.append(seen)
    out = [Tableau(rows) for rows in itertools.product(*per_row)]
    return out


def perm_of_tableau(tab: Tableau) -> tuple[int, ...]:
    """The minimal coset representative attached to a tableau of type mu:
    the reading word of the row-sorted preimage tableau."""
    mu_rows: list[list[int]] = [[] for _ in range(max((v for r in tab.rows for v in r), default=0))]
    k = 1
    for row in tab.rows:
        for v in row:
            if v < 1 or v > len(mu_rows):
                raise ValueError("malformed tableau entry")
            mu_rows[v - 1].append(k)
            k += 1
    out = []
    for row in mu_rows:
        out.extend(sorted(row))
    return tuple(out)


@lru_cache(maxsize=4096)
def coset_reps(shape) -> tuple[tuple[int, ...], ...]:
    """Minimal coset representatives for the row stabiliser of the given
    shape: reading words of row-standard fillings by 1..n, sorted."""
    shape = check_composition(shape)
    n = sum(shape)
    reps = []

    def split(rest, shape_idx, acc):
        if shape_idx == len(shape):
            reps.append(tuple(acc))
            return
        k = shape[shape_idx]
        for chosen in itertools.combinations(rest, k):
            remaining = [x for x in rest if x not in chosen]
            split(remaining, shape_idx + 1, acc + list(chosen))

    split(list(range(1, n + 1)), 0, [])
    reps.sort()
    return tuple(reps)


def coset_decompose(shape, w):
    """Write w = v d with v in the row stabiliser of the shape and d the
    minimal coset representative; returns (length of v, d)."""
    start = 0
    d = []
    lv = 0
    for part in shape:
        block = w[start:start + part]
        order = sorted(block)
        pattern = tuple(order.index(x) + 1 for x in block)
        lv += perm_length(pattern)
        d.extend(order)
        start += part
    return lv, tuple(d)


# ---------------------------------------------------------------------------
# one-node codes

class OneNodeCode:
    """Compact code for semistandard tableaux arising from one-node moves.

    The base is a partition mu = (mu_1, ..., mu_s, 1) and the shape is
    lam = (mu_1 + 1, mu_2, ..., mu_s).  Row a of the tableau is constant
    equal to a except for its last entry, recorded as entries[a-1]."""

    __slots__ = ("base", "entries")

    def __init__(self, base, entries):
        base = check_partition(base)
        if not base or base[-1] != 1:
            raise ValueError("base must end in a part equal to 1")
        s = len(base) - 1
        entries = tuple(entries)
        if len(entries) != s:
            raise ValueError(f"expected {s} entries, got {len(entries)}")
        if sorted(entries) != list(range(2, s + 2)):
            raise ValueError("entries must be a permutation of 2..s+1")
        for a, v in enumerate(entries, start=1):
            if v < a:
                raise ValueError(f"entry {v} in slot {a} is too small")
        self.base = base
        self.entries = entries

    @property
    def shape(self) -> tuple[int, ...]:
        mu = self.base
        return drop_trailing_zeros((mu[0] + 1,) + mu[1:-1])

    def position_of(self, value: int) -> int:
        """Slot index holding the given value (the r-style accessors)."""
        return self.entries.index(value) + 1

    def is_semistandard(self) -> bool:
        lam = self.shape
        for a in range(len(lam) - 1):
            if lam[a] == lam[a + 1] and self.entries[a] >= self.entries[a + 1]:
                return False
        return True

    def to_tableau(self) -> Tableau:
        lam = self.shape
        rows = []
        for a, part in enumerate(lam, start=1):
            row = [a] * (part - 1) + [self.entries[a - 1]]
            rows.append(row)
        return Tableau(rows)

    @classmethod
    def from_tableau(cls, base, tab: Tableau) -> "OneNodeCode":
        entries = []
        for a, row in enumerate(tab.rows, start=1):
            for j, v in enumerate(row[:-1], start=1):
                if v != a:
                    raise ValueError("tableau is not in one-node form")
            entries.append(row[-1])
        return cls(base, entries)

    def __eq__(self, other):
        return (
            isinstance(other, OneNodeCode)
            and self.base == other.base
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.base, self.entries))

    def __str__(self):
        ent = ",".join(str(v) for v in self.entries)
        base = ",".join(str(v) for v in self.base)
        return f"mu:{ent}|base={base}"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "OneNodeCode":
        if not text.startswith("mu:") or "|base=" not in text:
            raise ValueError(f"cannot parse one-node code {text!r}")
        ent_text, base_text = text[3:].split("|base=", 1)
        entries = [int(v) for v in ent_text.split(",") if v]
        base = [int(v) for v in base_text.split(",") if v]
        return cls(base, entries)


def one_node_codes(base) -> list[OneNodeCode]:
    """All semistandard one-node codes over the given base, in the
    lexicographic order of their entry sequences."""
    base = check_partition(base)
    s = len(base) - 1
    out = []
    for perm in itertools.permutations(range(2, s + 2)):
        if all(v >= a for a, v in enumerate(perm, start=1)):
            code = OneNodeCode(base, perm)
            if code.is_semistandard():
                out.append(code)
    out.sort(key=lambda c: c.entries)
    return out
