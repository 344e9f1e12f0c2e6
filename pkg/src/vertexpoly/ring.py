"""Exact arithmetic: sparse multivariate polynomials and rational functions.

A polynomial is a dict mapping exponent tuples (one non-negative int per
variable) to nonzero big-rational coefficients.  The zero polynomial is the
empty dict, so two polynomials are equal iff their term dicts are equal.
Coefficients are arbitrary-precision rationals (gmpy2.mpq when available,
fractions.Fraction otherwise); no floating point is used anywhere.

Monomials are ordered by graded lexicographic order over the variable table,
which fixes the notion of "leading term" used for normalization and for
division.  Rational functions are stored as a num/den pair; normalization
scales the denominator's leading coefficient to +1 and cancels cheap common
factors (monomial content, and exact polynomial division when it succeeds).
Full gcd reduction is deliberately not attempted; the normative equality test
is cross-multiplication.
"""

from __future__ import annotations

import json
import numbers
import random
from itertools import combinations

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ

__all__ = [
    "QQ",
    "VarTable",
    "MultiPoly",
    "RatFunc",
    "RingError",
    "NonExactDivision",
    "exact_divide",
    "try_exact_divide",
    "determinant",
    "random_point",
    "poly_to_json",
    "poly_from_json",
    "ratfunc_to_json",
    "ratfunc_from_json",
]


class RingError(Exception):
    """Base error for the exact-arithmetic layer."""


class NonExactDivision(RingError):
    """Raised when a division required to be exact leaves a remainder."""


def _is_rational(x):
    return isinstance(x, (int, numbers.Rational))


class VarTable:
    """Ordered, immutable table of variable names.

    The index of each name is stable, so exponent tuples from different
    polynomials over the same table are directly comparable.
    """

    __slots__ = ("names", "_index")

    def __init__(self, names):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise RingError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable({list(self.names)})"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise RingError(f"unknown variable {name!r}") from None

    def var(self, name):
        """The polynomial consisting of the single variable `name`."""
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return MultiPoly(self, {tuple(exps): QQ(1)})

    def const(self, value):
        """The constant polynomial `value`."""
        value = QQ(value)
        if value == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * len(self.names): value})

    def zero(self):
        return MultiPoly(self, {})

    def one(self):
        return self.const(1)


def canonical_vartable(n_u=0, n_w=0, free_params=("t", "a", "b", "c", "d"),
                       beta=False):
    """Variable table in the canonical order: model parameters, then beta,
    then spectral parameters u_j, then inhomogeneities w_j."""
    names = list(free_params)
    if beta:
        names.append("beta")
    names += [f"u{j}" for j in range(1, n_u + 1)]
    names += [f"w{j}" for j in range(1, n_w + 1)]
    return VarTable(names)


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """Sparse multivariate polynomial with big-rational coefficients.

    Treated as immutable: all operations return new objects.  No stored
    coefficient is zero, so dict equality is canonical equality.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vartable, terms):
        self.vars = vartable
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- construction helpers -------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise RingError("variable-table mismatch")
            return other
        if _is_rational(other):
            return self.vars.const(other)
        return None

    # -- queries --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if self.is_zero():
            return QQ(0)
        if not self.is_constant():
            raise RingError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise RingError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise RingError("polynomial power must be a non-negative int")
        result = self.vars.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __truediv__(self, other):
        if _is_rational(other):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            inv = QQ(1) / QQ(other)
            return MultiPoly(self.vars, {e: c * inv for e, c in self.terms.items()})
        if isinstance(other, MultiPoly):
            return RatFunc(self, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if _is_rational(other):
            return self == self.vars.const(other)
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- evaluation / substitution --------------------------------------

    def evaluate(self, point):
        """Evaluate at a map name -> rational; every variable must be bound."""
        vals = [QQ(point[n]) for n in self.vars.names]
        total = QQ(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v ** k
            total += term
        return total

    def substitute(self, bindings):
        """Simultaneously substitute variables by RatFunc/rational values.

        Unbound variables persist.  Returns a RatFunc over the same table.
        """
        vals = {}
        for name, val in bindings.items():
            i = self.vars.index(name)
            if isinstance(val, MultiPoly):
                val = RatFunc(val, val.vars.one())
            elif _is_rational(val):
                val = RatFunc(self.vars.const(val), self.vars.one())
            elif not isinstance(val, RatFunc):
                raise RingError(f"cannot substitute value {val!r}")
            if val.num.vars != self.vars:
                raise RingError("variable-table mismatch in substitution")
            vals[i] = val
        one = RatFunc(self.vars.one(), self.vars.one())
        total = RatFunc(self.vars.zero(), self.vars.one())
        for e, c in self.terms.items():
            residual = [0] * len(e)
            term = one
            for i, k in enumerate(e):
                if not k:
                    continue
                if i in vals:
                    term = term * vals[i] ** k
                else:
                    residual[i] = k
            mono = MultiPoly(self.vars, {tuple(residual): c})
            total = total + term * RatFunc(mono, self.vars.one())
        return total

    # -- rendering ------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            factors = []
            for name, k in zip(self.vars.names, e):
                if k == 1:
                    factors.append(name)
                elif k > 1:
                    factors.append(f"{name}^{k}")
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            elif c == -1:
                body = "-" + "*".join(factors)
            else:
                body = str(c) + "*" + "*".join(factors)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def try_exact_divide(num, den):
    """Quotient num/den if den divides num exactly, else None.

    Single-divisor polynomial division under graded lex: exactness holds iff
    no leading-term step ever fails, so the first failure aborts cheaply.
    """
    if num.vars != den.vars:
        raise RingError("variable-table mismatch")
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return num.vars.zero()
    if den.is_constant():
        return num / den.constant_value()
    de, dc = den.leading()
    quotient = {}
    rem = dict(num.terms)
    while rem:
        re = max(rem, key=_grlex_key)
        qe = tuple(a - b for a, b in zip(re, de))
        if any(k < 0 for k in qe):
            return None
        qc = rem[re] / dc
        quotient[qe] = quotient.get(qe, 0) + qc
        for e, c in den.terms.items():
            te = tuple(a + b for a, b in zip(qe, e))
            s = rem.get(te, 0) - qc * c
            if s == 0:
                rem.pop(te, None)
            else:
                rem[te] = s
    return MultiPoly(num.vars, quotient)


def exact_divide(num, den):
    """num/den with the remainder asserted to be zero."""
    q = try_exact_divide(num, den)
    if q is None:
        raise NonExactDivision("polynomial division left a remainder")
    return q


class RatFunc:
    """Quotient of two MultiPoly over the same variable table.

    Normalized so the denominator's graded-lex leading coefficient is +1;
    cheap cancellations (monomial content, exact division) are applied.
    Equality is decided by cross-multiplication, which agrees with the
    normalized form whenever both cancel fully.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.vars.one()
        if num.vars != den.vars:
            raise RingError("variable-table mismatch")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = num
            self.den = num.vars.one()
            return
        num, den = _cancel_monomial_content(num, den)
        if not den.is_constant():
            q = try_exact_divide(num, den)
            if q is not None:
                num, den = q, num.vars.one()
            else:
                q = try_exact_divide(den, num)
                if q is not None and not num.is_constant():
                    num, den = num.vars.one(), q
        lc = den.leading()[1]
        if lc != 1:
            num = num / lc
            den = den / lc
        self.num = num
        self.den = den

    @property
    def vars(self):
        return self.num.vars

    # -- queries --------------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def is_poly(self):
        return self.den == self.vars.one()

    def as_poly(self):
        """The underlying polynomial; raises if a denominator survives."""
        if self.den.is_constant():
            return self.num / self.den.constant_value()
        raise NonExactDivision("rational function is not a polynomial")

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.vars != self.vars:
                raise RingError("variable-table mismatch")
            return other
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise RingError("variable-table mismatch")
            return RatFunc(other, self.vars.one())
        if _is_rational(other):
            return RatFunc(self.vars.const(other), self.vars.one())
        return None

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        q = try_exact_divide(other.den, self.den)
        if q is not None:
            return RatFunc(self.num * q + other.num, other.den)
        q = try_exact_divide(self.den, other.den)
        if q is not None:
            return RatFunc(self.num + other.num * q, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RatFunc)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n1, d2 = _cross_cancel(self.num, other.den)
        n2, d1 = _cross_cancel(other.num, self.den)
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * RatFunc(other.den, other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise RingError("power must be an int")
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den ** (-n), self.num ** (-n))
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.num is other.num and self.den is other.den:
            return True
        return self.num * other.den == other.num * self.den

    # -- evaluation / substitution --------------------------------------

    def evaluate(self, point):
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num.evaluate(point) / d

    def substitute(self, bindings):
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise ZeroDivisionError("substitution produced a zero denominator")
        return self.num.substitute(bindings) / den

    def __str__(self):
        if self.den == self.vars.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def _cancel_monomial_content(num, den):
    """Cancel the largest common monomial factor of num and den."""
    if num.is_zero() or den.is_zero():
        return num, den
    nvars = len(num.vars)
    g = [min(min(e[i] for e in num.terms), min(e[i] for e in den.terms))
         for i in range(nvars)]
    if not any(g):
        return num, den

    def shift(p):
        return MultiPoly(p.vars, {tuple(a - b for a, b in zip(e, g)): c
                                  for e, c in p.terms.items()})

    return shift(num), shift(den)


def _cross_cancel(num, den):
    """Opportunistic cancellation of num against den before a product."""
    if den.is_constant() or num.is_zero():
        return num, den
    q = try_exact_divide(num, den)
    if q is not None:
        return q, num.vars.one()
    q = try_exact_divide(den, num)
    if q is not None and not num.is_constant():
        return num.vars.one(), q
    return num, den


# -- determinants -------------------------------------------------------


def determinant(matrix):
    """Determinant of a square matrix of scalars.

    RatFunc entries: fraction-free Bareiss elimination after clearing row
    denominators, so intermediate values stay polynomial.  Rational entries:
    ordinary Gaussian elimination.  The 0x0 determinant is 1 (empty product).
    Mixing scalar modes is an error.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise RingError("determinant requires a square matrix")
    if n == 0:
        return QQ(1)
    flat = [x for row in matrix for x in row]
    if all(isinstance(x, RatFunc) for x in flat):
        return _det_exact(matrix)
    if all(_is_rational(x) for x in flat):
        return _det_eval([[QQ(x) for x in row] for row in matrix])
    raise RingError("determinant entries mix scalar modes")


def _det_exact(matrix):
    """Exact symbolic determinant, division-free.

    Each row is first cleared to a common denominator, then the polynomial
    determinant is computed by Laplace expansion with dynamic programming
    over column subsets (minors of row prefixes).  This avoids the exact
    polynomial divisions of fraction-free elimination, which dominate the
    cost on large multivariate entries.
    """
    n = len(matrix)
    vt = matrix[0][0].vars
    one = vt.one()
    rows = []
    total_den = one
    for row in matrix:
        d = one
        for x in row:
            if try_exact_divide(d, x.den) is None:
                d = d * x.den
        rows.append([x.num * exact_divide(d, x.den) for x in row])
        total_den = total_den * d
    minors = {(j,): rows[0][j] for j in range(n)}
    for r in range(1, n):
        next_minors = {}
        for cols in combinations(range(n), r + 1):
            acc = None
            for idx, j in enumerate(cols):
                entry = rows[r][j]
                if entry.is_zero():
                    continue
                term = minors[cols[:idx] + cols[idx + 1:]] * entry
                if (r + idx) % 2:
                    term = -term
                acc = term if acc is None else acc + term
            next_minors[cols] = vt.zero() if acc is None else acc
        minors = next_minors
    return RatFunc(minors[tuple(range(n))], total_den)


def _det_eval(rows):
    n = len(rows)
    det = QQ(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if rows[i][k] != 0), None)
        if pivot_row is None:
            return QQ(0)
        if pivot_row != k:
            rows[k], rows[pivot_row] = rows[pivot_row], rows[k]
            det = -det
        pivot = rows[k][k]
        det *= pivot
        for i in range(k + 1, n):
            factor = rows[i][k] / pivot
            if factor == 0:
                continue
            rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
    return det


# -- randomized evaluation points ---------------------------------------

_MAX_RESAMPLE = 100


def random_point(seed, vartable, avoid=()):
    """Deterministic-from-seed rational point avoiding given zero loci.

    Numerators and denominators are uniform in [1, 10^6]; the point is
    resampled (at most 100 rounds) until no avoid-polynomial vanishes.
    """
    rng = random.Random(seed)
    for _ in range(_MAX_RESAMPLE):
        point = {name: QQ(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))
                 for name in vartable.names}
        if all(p.evaluate(point) != 0 for p in avoid):
            return point
    raise RingError("random_point: resampling exhausted")


# -- JSON serialization -------------------------------------------------


def _coeff_str(c):
    return f"{c.numerator}/{c.denominator}"


def poly_to_json(p):
    terms = [{"coeff": _coeff_str(p.terms[e]), "exps": list(e)}
             for e in sorted(p.terms, key=_grlex_key, reverse=True)]
    return {"vars": list(p.vars.names), "terms": terms}


def poly_from_json(obj):
    vt = VarTable(obj["vars"])
    terms = {}
    for t in obj["terms"]:
        num, _, den = t["coeff"].partition("/")
        coeff = QQ(int(num), int(den)) if den else QQ(int(num))
        terms[tuple(t["exps"])] = coeff
    return MultiPoly(vt, terms)


def ratfunc_to_json(r):
    return {"num": poly_to_json(r.num), "den": poly_to_json(r.den)}


def ratfunc_from_json(obj):
    return RatFunc(poly_from_json(obj["num"]), poly_from_json(obj["den"]))


def dumps(value):
    """JSON text for a MultiPoly or RatFunc."""
    if isinstance(value, MultiPoly):
        return json.dumps(poly_to_json(value))
    if isinstance(value, RatFunc):
        return json.dumps(ratfunc_to_json(value))
    raise RingError(f"cannot serialize {type(value).__name__}")
