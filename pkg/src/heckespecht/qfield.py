"""Exact coefficient fields and quantum-integer arithmetic.

Three constructible families of pairs (F, q) are provided, enough to
realise every finite pair (e, p) of quantum characteristic and ordinary
characteristic that the homomorphism criteria need:

* ``PrimeField(p, q)``     -- F_p with q a nonzero residue,
* ``Cyclotomic(e)``        -- Q(zeta_e) realised as rational polynomials
                              reduced modulo the e-th cyclotomic polynomial,
                              with q the class of the indeterminate,
* ``PrimeExtension(p, g)`` -- F_p[x]/(g) with g irreducible, q a unit of
                              the quotient (by default the class of x for
                              g an irreducible factor of Phi_e over F_p).

Scalars are kept in a canonical form, so equality is exact and decidable,
and all values are immutable.  The module also houses the quantum
integers, factorials and Gaussian binomials (computed by the Pascal-type
recurrence, never by division, so they are valid at roots of unity), the
enumerative sum oracle for the Gaussian binomial, and the small
arithmetic helpers (ell_p, bstar, vanish_run, nu_ep) used by the
eligibility criteria.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# integer polynomials, ascending coefficient tuples

def _trim(coeffs):
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


def _poly_div_monic(a, b):
    """Exact division of a by a monic b over the integers."""
    a = list(a)
    db = len(b) - 1
    if db < 0 or b[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] -= c * b[j]
    if any(a[:db]):
        raise ValueError("division is not exact")
    return _trim(q)


_CYCLOTOMIC_CACHE: dict[int, tuple[int, ...]] = {}


def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Coefficients of Phi_e, ascending, computed by exact division of
    x^e - 1 by the product of the Phi_d over proper divisors d."""
    if e < 1:
        raise ValueError("e must be positive")
    cached = _CYCLOTOMIC_CACHE.get(e)
    if cached is not None:
        return cached
    poly = tuple([-1] + [0] * (e - 1) + [1])
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_div_monic(poly, cyclotomic_polynomial(d))
    _CYCLOTOMIC_CACHE[e] = poly
    return poly


# ---------------------------------------------------------------------------
# polynomials over F_p, used for the extension-field machinery

def _pmod_trim(coeffs, p):
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pmod_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod_trim(out, p)


def _pmod_divmod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = (a[i] * inv_lead) % p
        if c == 0:
            continue
        q[i - db] = c
        for j in range(db + 1):
            a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _pmod_trim(q, p), _pmod_trim(a[:db], p)


def _pmod_monic_polys(degree, p):
    for tail in itertools.product(range(p), repeat=degree):
        yield tuple(tail) + (1,)


def poly_is_irreducible_mod_p(poly, p: int) -> bool:
    """Exhaustive trial-division irreducibility check, desk scale only."""
    poly = _pmod_trim(poly, p)
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for g in _pmod_monic_polys(d, p):
            _, r = _pmod_divmod(poly, g, p)
            if not r:
                return False
    return True


def _first_irreducible_factor(e: int, p: int):
    """First (lexicographically smallest) irreducible factor of Phi_e over
    F_p.  Requires p not dividing e; every factor then has degree equal to
    the multiplicative order of p mod e."""
    if e % p == 0:
        raise ValueError("p must not divide e for the automatic modulus")
    d = 1
    r = p % e
    while r != 1:
        r = (r * p) % e
        d += 1
    phi = _pmod_trim(cyclotomic_polynomial(e), p)
    for g in _pmod_monic_polys(d, p):
        q, rem = _pmod_divmod(phi, g, p)
        if not rem and poly_is_irreducible_mod_p(g, p):
            return g
    raise ValueError(f"no degree-{d} factor of Phi_{e} over F_{p}")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# profiles and scalars

class QuantumProfile:
    """The derived pair (e, p): e is minimal > 1 with 1+q+...+q^{e-1} = 0,
    None standing for infinite, and p is the field characteristic."""

    __slots__ = ("e", "p")

    def __init__(self, e, p):
        self.e = e
        self.p = p

    @property
    def finite(self) -> bool:
        return self.e is not None

    def __eq__(self, other):
        return isinstance(other, QuantumProfile) and (self.e, self.p) == (other.e, other.p)

    def __hash__(self):
        return hash((self.e, self.p))

    def __repr__(self):
        e = "inf" if self.e is None else self.e
        return f"QuantumProfile(e={e}, p={self.p})"


class Scalar:
    """An element of a FieldSpec, in canonical form."""

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError("scalars from different fields")
            return other.rep
        if isinstance(other, int):
            return self.field.int_rep(other)
        return NotImplemented

    def __add__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.rep, rep))

    __radd__ = __add__

    def __sub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.sub(self.rep, rep))

    def __rsub__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.sub(rep, self.rep))

    def __mul__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.rep, rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        rep = self._coerce(other)
        if rep is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.rep, self.field.inv(rep)))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.rep))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        f = self.field
        if k < 0:
            base, k = f.inv(self.rep), -k
        else:
            base = self.rep
        out = f.one_rep
        for _ in range(k):
            out = f.mul(out, base)
        return Scalar(f, out)

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.rep))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.rep)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.rep == other.rep
        if isinstance(other, int):
            return self.rep == self.field.int_rep(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.rep))

    def __str__(self):
        return self.field.format_rep(self.rep)

    def __repr__(self):
        return f"Scalar({self.field.name}, {self})"


class FieldSpec:
    """Common plumbing for the three field families.

    Subclasses implement arithmetic directly on raw representations
    (ints or coefficient tuples); ``Scalar`` wraps a (field, rep) pair
    for the public API.  Hot paths work on reps.
    """

    name: str

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<field {self.name}>"

    # Scalar-level conveniences -------------------------------------------
    @property
    def zero(self) -> Scalar:
        return Scalar(self, self.zero_rep)

    @property
    def one(self) -> Scalar:
        return Scalar(self, self.one_rep)

    @property
    def q(self) -> Scalar:
        return Scalar(self, self.q_rep)

    def of(self, k: int) -> Scalar:
        return Scalar(self, self.int_rep(k))

    def scalar(self, rep) -> Scalar:
        return Scalar(self, rep)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def q_power(self, k: int):
        cache = self._qpow
        rep = cache.get(k)
        if rep is None:
            if k >= 0:
                rep = self.one_rep
                for _ in range(k):
                    rep = self.mul(rep, self.q_rep)
            else:
                qinv = self.inv(self.q_rep)
                rep = self.one_rep
                for _ in range(-k):
                    rep = self.mul(rep, qinv)
            cache[k] = rep
        return rep

    def parse_scalar(self, text: str) -> Scalar:
        return Scalar(self, self.parse_rep(text))


class PrimeField(FieldSpec):
    """F_p with q a nonzero residue; reps are canonical residues."""

    def __init__(self, p: int, q: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        q %= p
        if q == 0:
            raise ValueError("q must be invertible")
        self.p = p
        self.q_rep = q
        self.zero_rep = 0
        self.one_rep = 1 % p
        self.name = f"p={p},q={q}"
        self._qpow = {}
        self._profile = None

    def int_rep(self, k: int):
        return k % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a == 0

    def profile(self) -> QuantumProfile:
        if self._profile is None:
            if self.q_rep == self.one_rep:
                e = self.p
            else:
                e, acc = 1, self.q_rep
                while acc != 1:
                    acc = (acc * self.q_rep) % self.p
                    e += 1
            self._profile = QuantumProfile(e, self.p)
        return self._profile

    def format_rep(self, a) -> str:
        return str(a)

    def parse_rep(self, text: str):
        return int(text.strip()) % self.p


def _fold_modulus(coeffs, modulus_tail, deg, mul, add_into):
    """Reduce a coefficient list in place modulo a monic polynomial whose
    non-leading coefficients are modulus_tail (length deg)."""
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = 0
            for j in range(deg):
                add_into(coeffs, i - deg + j, mul(c, modulus_tail[j]))


class Cyclotomic(FieldSpec):
    """Q(zeta_e) as Q[x]/(Phi_e); reps are (numerator tuple, denominator)
    with integer numerators of fixed length deg(Phi_e), gcd-normalised."""

    def __init__(self, e: int):
        if e < 2:
            raise ValueError("e must be at least 2")
        self.e = e
        phi = cyclotomic_polynomial(e)
        self.degree = len(phi) - 1
        # x^degree = -(tail) after reduction
        self._neg_tail = tuple(-c for c in phi[:-1])
        self.zero_rep = ((0,) * self.degree, 1)
        one = [0] * self.degree
        one[0] = 1
        self.one_rep = (tuple(one), 1)
        qv = [0] * self.degree
        if self.degree == 1:
            qv[0] = self._neg_tail[0]  # x reduces to a constant (e = 2)
        else:
            qv[1] = 1
        self.q_rep = self._norm(qv, 1)
        self.name = f"cyclotomic:e={e}"
        self._qpow = {}
        self._profile = QuantumProfile(e, 0)

    def _norm(self, num, den):
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            den //= g
            num = [c // g for c in num]
        return (tuple(num), den)

    def int_rep(self, k: int):
        num = [0] * self.degree
        num[0] = k
        return (tuple(num), 1)

    def add(self, a, b):
        (na, da), (nb, db) = a, b
        if da == db:
            return self._norm([x + y for x, y in zip(na, nb)], da)
        return self._norm([x * db + y * da for x, y in zip(na, nb)], da * db)

    def mul(self, a, b):
        (na, da), (nb, db) = a, b
        deg = self.degree
        out = [0] * (2 * deg - 1)
        for i, ai in enumerate(na):
            if ai:
                for j, bj in enumerate(nb):
                    if bj:
                        out[i + j] += ai * bj
        tail = self._neg_tail
        for i in range(len(out) - 1, deg - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(deg):
                    t = tail[j]
                    if t:
                        out[i - deg + j] += c * t
        return self._norm(out[:deg], da * db)

    def neg(self, a):
        num, den = a
        return (tuple(-c for c in num), den)

    def is_zero(self, a):
        return not any(a[0])

    def inv(self, a):
        num, den = a
        if not any(num):
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[x] against Phi_e
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.e)]
        f = [Fraction(c) for c in num]
        r0, r1 = phi, f
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) == 1:
                break
            q, r = _fracpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fracpoly_sub(s0, _fracpoly_mul(q, s1))
        lead = r1[0]
        inv_poly = [c / lead for c in s1]
        inv_poly += [Fraction(0)] * (self.degree - len(inv_poly))
        common = 1
        for c in inv_poly:
            common = common * c.denominator // gcd(common, c.denominator)
        ints = [int(c * common) for c in inv_poly[: self.degree]]
        return self._norm([c * den for c in ints], common)

    def profile(self) -> QuantumProfile:
        return self._profile

    def format_rep(self, a) -> str:
        num, den = a
        return format_poly([Fraction(c, den) for c in num])

    def parse_rep(self, text: str):
        coeffs = parse_poly(text, self.degree)
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return self._norm([int(c * den) for c in coeffs], den)


def _fracpoly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 0)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lead
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    r = a[:db]
    while r and r[-1] == 0:
        r.pop()
    return q, (r or [Fraction(0)])


def _fracpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _fracpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, c in enumerate(b):
        a[i] -= c
    return a


class PrimeExtension(FieldSpec):
    """F_p[x]/(g) for g irreducible over F_p; reps are coefficient tuples
    of fixed length deg(g)."""

    def __init__(self, p: int, modulus, q=None, label: str | None = None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        modulus = _pmod_trim(modulus, p)
        if len(modulus) < 2:
            raise ValueError("modulus must have positive degree")
        if modulus[-1] != 1:
            inv = pow(modulus[-1], -1, p)
            modulus = _pmod_trim([c * inv for c in modulus], p)
        if not poly_is_irreducible_mod_p(modulus, p):
            raise ValueError("modulus is reducible")
        self.p = p
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self._neg_tail = tuple((-c) % p for c in modulus[:-1])
        self.zero_rep = (0,) * self.degree
        one = [0] * self.degree
        one[0] = 1
        self.one_rep = tuple(one)
        if q is None:
            if self.degree == 1:
                q = ((-modulus[0]) % p,)
            else:
                qv = [0] * self.degree
                qv[1] = 1
                q = tuple(qv)
        else:
            q = tuple(list(q) + [0] * (self.degree - len(q)))[: self.degree]
            q = tuple(c % p for c in q)
        if not any(q):
            raise ValueError("q must be a unit")
        self.q_rep = q
        if label is None:
            label = f"ext:p={p},mod={';'.join(str(c) for c in modulus)}"
        self.name = label
        self._qpow = {}
        self._profile = None

    def int_rep(self, k: int):
        out = [0] * self.degree
        out[0] = k % self.p
        return tuple(out)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def mul(self, a, b):
        p = self.p
        deg = self.degree
        out = [0] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] = (out[i + j] + ai * bj) % p
        tail = self._neg_tail
        for i in range(len(out) - 1, deg - 1, -1):
            c = out[i]
            if c:
                out[i] = 0
                for j in range(deg):
                    t = tail[j]
                    if t:
                        out[i - deg + j] = (out[i - deg + j] + c * t) % p
        return tuple(out[:deg])

    def neg(self, a):
        p = self.p
        return tuple((-c) % p for c in a)

    def is_zero(self, a):
        return not any(a)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        p = self.p
        r0, r1 = self.modulus, _pmod_trim(a, p)
        s0, s1 = (), (1,)
        while len(r1) > 1:
            q, r = _pmod_divmod(r0, r1, p)
            r0, r1 = r1, r
            t = _pmod_mul(q, s1, p)
            n = max(len(s0), len(t))
            s = [(x - y) % p for x, y in itertools.zip_longest(s0, t, fillvalue=0)]
            s0, s1 = s1, _pmod_trim(s, p)
        inv_lead = pow(r1[0], -1, p)
        out = [(c * inv_lead) % p for c in s1]
        out += [0] * (self.degree - len(out))
        return tuple(out[: self.degree])

    def profile(self) -> QuantumProfile:
        if self._profile is None:
            if self.q_rep == self.one_rep:
                e = self.p
            else:
                e, acc = 1, self.q_rep
                while acc != self.one_rep:
                    acc = self.mul(acc, self.q_rep)
                    e += 1
            self._profile = QuantumProfile(e, self.p)
        return self._profile

    def format_rep(self, a) -> str:
        return format_poly(list(a))

    def parse_rep(self, text: str):
        coeffs = parse_poly(text, self.degree)
        return tuple(int(c) % self.p for c in coeffs)


def prime_extension_auto(p: int, e: int) -> PrimeExtension:
    """F_p[x]/(g) for the first irreducible factor g of Phi_e over F_p,
    so q = x + (g) has multiplicative order e."""
    g = _first_irreducible_factor(e, p)
    field = PrimeExtension(p, g, label=f"ext:p={p},e={e}")
    prof = field.profile()
    if prof.e != e:
        raise ValueError(f"automatic modulus gave e={prof.e}, expected {e}")
    return field


# ---------------------------------------------------------------------------
# polynomial scalar formatting ("z" is the generator)

def format_poly(coeffs) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            z = "z" if k == 1 else f"z^{k}"
            a = abs(c)
            body = z if a == 1 else f"{a}*{z}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TERM_RE = re.compile(
    r"^(?P<coeff>\d+(?:/\d+)?)?\s*\*?\s*(?P<z>z(?:\^(?P<pow>\d+))?)?$"
)


def parse_poly(text: str, degree: int):
    """Parse the canonical polynomial form back into Fraction coefficients."""
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    chunks = re.split(r"(?=[+-])", text.replace(" ", ""))
    coeffs = [Fraction(0)] * max(degree, 1)
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and m.group("z") is None):
            raise ValueError(f"cannot parse scalar term {chunk!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("z"):
            power = int(m.group("pow") or 1)
        else:
            power = 0
        if power >= len(coeffs):
            raise ValueError(f"power {power} out of range for this field")
        coeffs[power] += sign * coeff
    return coeffs


# ---------------------------------------------------------------------------
# field spec parsing

def parse_field(text: str) -> FieldSpec:
    """Parse "p=7,q=2", "cyclotomic:e=3" or "ext:p=2,e=3"."""
    text = text.strip()
    if text.startswith("cyclotomic:"):
        body = dict(_split_kv(text[len("cyclotomic:"):]))
        return Cyclotomic(int(body["e"]))
    if text.startswith("ext:"):
        body = dict(_split_kv(text[len("ext:"):]))
        p = int(body["p"])
        if "e" in body:
            return prime_extension_auto(p, int(body["e"]))
        if "mod" in body:
            coeffs = [int(c) for c in body["mod"].split(";")]
            return PrimeExtension(p, coeffs)
        raise ValueError("ext field needs e=... or mod=...")
    body = dict(_split_kv(text))
    if set(body) != {"p", "q"}:
        raise ValueError(f"cannot parse field spec {text!r}")
    return PrimeField(int(body["p"]), int(body["q"]))


def _split_kv(text: str):
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        yield k.strip(), v.strip()


def spec_for_profile(e: int, p: int) -> FieldSpec:
    """A field spec realising quantum characteristic e in characteristic p.

    Raises ValueError for the unrealisable combinations (p dividing e with
    e different from p)."""
    if e < 2:
        raise ValueError("e must be at least 2")
    if p == 0:
        return Cyclotomic(e)
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e == p:
        return PrimeField(p, 1)
    if e % p == 0:
        raise ValueError(f"no field of characteristic {p} has e={e}")
    if (p - 1) % e == 0:
        for q in range(2, p):
            order, acc = 1, q
            while acc != 1:
                acc = (acc * q) % p
                order += 1
            if order == e:
                return PrimeField(p, q)
    return prime_extension_auto(p, e)


# ---------------------------------------------------------------------------
# quantum integers, factorials, Gaussian binomials

def quantum_char(spec: FieldSpec) -> QuantumProfile:
    return spec.profile()


def qint(spec: FieldSpec, alpha: int) -> Scalar:
    """[alpha] = 1 + q + ... + q^(alpha-1), with [0] = 0."""
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    out = spec.zero_rep
    for k in range(alpha):
        out = spec.add(out, spec.q_power(k))
    return Scalar(spec, out)


def qfact(spec: FieldSpec, alpha: int) -> Scalar:
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    out = spec.one_rep
    for k in range(1, alpha + 1):
        out = spec.mul(out, qint(spec, k).rep)
    return Scalar(spec, out)


def qbinom(spec: FieldSpec, alpha: int, beta: int) -> Scalar:
    """Gaussian binomial, by the recurrence
    [a, b] = [a-1, b] + q^(a-b) [a-1, b-1]; valid at roots of unity."""
    if beta < 0 or alpha < beta:
        raise ValueError("need 0 <= beta <= alpha")
    cache = getattr(spec, "_qbinom_cache", None)
    if cache is None:
        cache = spec._qbinom_cache = {}
    rep = cache.get((alpha, beta))
    if rep is None:
        prev = [spec.one_rep]
        for a in range(1, alpha + 1):
            row = [spec.one_rep]
            for b in range(1, a):
                row.append(spec.add(prev[b], spec.mul(spec.q_power(a - b), prev[b - 1])))
            row.append(spec.one_rep)
            for b, r in enumerate(row):
                cache[(a, b)] = r
            prev = row
        cache[(0, 0)] = spec.one_rep
        rep = cache[(alpha, beta)]
    return Scalar(spec, rep)


def qbinom_sum_oracle(spec: FieldSpec, alpha: int, beta: int) -> Scalar:
    """Sum of q^G(I) over increasing beta-tuples I from {1..alpha}, with
    G(I) = sum_j (alpha - i_j - beta + j).  Enumerative oracle for qbinom."""
    if beta < 0 or alpha < beta:
        raise ValueError("need 0 <= beta <= alpha")
    out = spec.zero_rep
    for comb in itertools.combinations(range(1, alpha + 1), beta):
        g = sum(alpha - i - beta + j for j, i in enumerate(comb, start=1))
        out = spec.add(out, spec.q_power(g))
    return Scalar(spec, out)


def ell_p(p: int, b: int) -> int:
    """Minimal l with b < p^l."""
    if p < 2 or not _is_prime(p):
        raise ValueError("p must be prime")
    if b < 0:
        raise ValueError("b must be nonnegative")
    l, power = 0, 1
    while b >= power:
        power *= p
        l += 1
    return l


def bstar(e: int, b: int) -> int:
    """The quotient in b = b* e + b' with 0 <= b' < e."""
    if e < 2:
        raise ValueError("e must be at least 2")
    if b < 0:
        raise ValueError("b must be nonnegative")
    return b // e


def vanish_run(profile: QuantumProfile, alpha: int, beta: int) -> bool:
    """Whether the Gaussian binomials [alpha+1, 1], ..., [alpha+beta, beta]
    all vanish, by the closed-form criterion."""
    if alpha < 0 or beta < 1:
        raise ValueError("need alpha >= 0 and beta >= 1")
    if not profile.finite:
        return False
    if profile.p == 0:
        return (alpha + 1) % profile.e == 0 and beta < profile.e
    modulus = profile.e * profile.p ** ell_p(profile.p, bstar(profile.e, beta))
    return (alpha + 1) % modulus == 0


def vanish_run_direct(spec: FieldSpec, alpha: int, beta: int) -> bool:
    """Direct evaluation of the same run of Gaussian binomials."""
    return all(qbinom(spec, alpha + g, g).is_zero() for g in range(1, beta + 1))


def nu_ep(profile: QuantumProfile, h: int) -> int:
    """0 if e does not divide h, else nu_p(h/e) + 1 (nu_p = 0 when p = 0)."""
    if h < 1:
        raise ValueError("h must be positive")
    if not profile.finite:
        return 0
    if h % profile.e:
        return 0
    if profile.p == 0:
        return 1
    k, v = h // profile.e, 0
    while k % profile.p == 0:
        k //= profile.p
        v += 1
    return v + 1
