"""Model parameter sets for the six-vertex weights.

The weight parameters t, a, b, c, d, e, f must satisfy cd + af = 0 and
t*cd + be = 0 exactly.  The constraint surface is rationally parameterized
by the five free values (t, a, b, c, d): we always derive f = -cd/a and
e = -t*cd/b, which makes invalid parameter sets unrepresentable except
through the explicit `unchecked` constructor used for fault injection.

A ParamSet is either numeric (big-rational scalars) or symbolic (RatFunc
scalars over one shared variable table); all scalars in one set share the
mode and downstream computations inherit it.
"""

from __future__ import annotations

import random

from .ring import QQ, RatFunc, RingError, VarTable, canonical_vartable

__all__ = ["ParamSet", "ParamError"]


class ParamError(RingError):
    """Invalid model parameters."""


class ParamSet:
    """The weight parameters, with optional site inhomogeneities w."""

    __slots__ = ("t", "a", "b", "c", "d", "e", "f", "w", "symbolic")

    def __init__(self, t, a, b, c, d, w=None, *, allow_degenerate=False):
        self.t, self.a, self.b, self.c, self.d = t, a, b, c, d
        try:
            self.f = -(c * d) / a
            self.e = -(t * c * d) / b
        except ZeroDivisionError:
            raise ParamError("parameters a and b must be nonzero")
        self.w = list(w) if w is not None else None
        self.symbolic = isinstance(t, RatFunc)
        self._validate(allow_degenerate)

    @classmethod
    def unchecked(cls, t, a, b, c, d, e, f, w=None):
        """Explicit (possibly constraint-violating) parameters.

        Used for fault injection and for studying the identity failure
        before the constraints are imposed.
        """
        obj = object.__new__(cls)
        obj.t, obj.a, obj.b, obj.c, obj.d = t, a, b, c, d
        obj.e, obj.f = e, f
        obj.w = list(w) if w is not None else None
        obj.symbolic = isinstance(t, RatFunc)
        return obj

    def _validate(self, allow_degenerate):
        if self.c * self.d + self.a * self.f != 0:
            raise ParamError("constraint cd + af = 0 violated")
        if self.t * self.c * self.d + self.b * self.e != 0:
            raise ParamError("constraint t*cd + be = 0 violated")
        if allow_degenerate:
            return
        for name in ("t", "a", "b", "c", "d", "e", "f"):
            v = getattr(self, name)
            if _scalar_is_zero(v):
                raise ParamError(f"parameter {name} must be nonzero")
        if self.t == _one_like(self.t):
            raise ParamError("t = 1 is excluded")

    # -- constructors ---------------------------------------------------

    @classmethod
    def sample(cls, seed, n_w=0):
        """Seeded random numeric parameters on the constraint surface.

        t, a, b, c, d are positive rationals with t not in {0, 1}; the
        derived e, f are then automatically nonzero.  Optionally samples
        n_w inhomogeneities.
        """
        rng = random.Random(seed * 1000003 + 17)

        def draw():
            return QQ(rng.randint(1, 10 ** 6), rng.randint(1, 10 ** 6))

        t = draw()
        while t == 1:
            t = draw()
        w = [draw() for _ in range(n_w)] or None
        if w and len(set(w)) != len(w):
            return cls.sample(seed + 10 ** 9, n_w)
        return cls(t, draw(), draw(), draw(), draw(), w=w)

    @classmethod
    def symbolic_over(cls, vartable, n_w=0):
        """Symbolic parameters (t, a, b, c, d free symbols) over `vartable`.

        The table must contain t, a, b, c, d and, if n_w > 0, the
        inhomogeneity symbols w1..w{n_w}.
        """
        sym = {n: RatFunc(vartable.var(n)) for n in ("t", "a", "b", "c", "d")}
        w = [RatFunc(vartable.var(f"w{j}")) for j in range(1, n_w + 1)] or None
        return cls(sym["t"], sym["a"], sym["b"], sym["c"], sym["d"], w=w)

    @classmethod
    def symbolic_canonical(cls, n_u=0, n_w=0, beta=False):
        """Symbolic parameters over a fresh canonical variable table."""
        vt = canonical_vartable(n_u=n_u, n_w=n_w, beta=beta)
        return cls.symbolic_over(vt, n_w=n_w)

    # -- scalar-mode helpers --------------------------------------------

    @property
    def vars(self):
        if not self.symbolic:
            raise ParamError("numeric ParamSet has no variable table")
        return self.t.vars

    def zero(self):
        return RatFunc(self.vars.zero()) if self.symbolic else QQ(0)

    def one(self):
        return RatFunc(self.vars.one()) if self.symbolic else QQ(1)

    def lift(self, value):
        """Coerce a rational into this ParamSet's scalar mode."""
        if self.symbolic:
            if isinstance(value, RatFunc):
                return value
            return RatFunc(self.vars.const(value))
        return QQ(value)

    def spectral(self, n):
        """The symbolic spectral parameters u1..un (symbolic mode only)."""
        return [RatFunc(self.vars.var(f"u{j}")) for j in range(1, n + 1)]

    def w_at(self, j):
        """Inhomogeneity for site j (1-based); defaults to 1."""
        if self.w is None:
            return self.one()
        return self.w[j - 1]

    def map(self, fn):
        """ParamSet with every scalar (including w) passed through fn."""
        out = ParamSet.unchecked(*(fn(getattr(self, n))
                                   for n in ("t", "a", "b", "c", "d", "e", "f")),
                                 w=[fn(x) for x in self.w] if self.w else None)
        return out

    def __repr__(self):
        kind = "symbolic" if self.symbolic else "numeric"
        return f"ParamSet<{kind}>(t={self.t}, a={self.a}, b={self.b}, " \
               f"c={self.c}, d={self.d}, e={self.e}, f={self.f})"


def _scalar_is_zero(v):
    return v.is_zero() if isinstance(v, RatFunc) else v == 0


def _one_like(v):
    return RatFunc(v.vars.one()) if isinstance(v, RatFunc) else QQ(1)
