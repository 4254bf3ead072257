"""Exact polynomial arithmetic over arbitrary-precision integers.

Two value types back everything else in the package:

* ``UniPoly`` is a dense univariate polynomial: a tuple of integer
  coefficients indexed by degree, with no trailing zeros (the zero
  polynomial is the empty tuple).  Counts of independent sets reach 2^n,
  so coefficients must be unbounded Python ints; anything fixed-width
  would overflow silently.

* ``MultiPoly4`` is a sparse polynomial in the four variables v, x, y, z,
  stored as a map from exponent 4-tuples to nonzero integer coefficients.

Both are immutable values in canonical form: every operation returns a
new object, instances are safe to share between threads and to use as
cache entries.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class DegreeExceedsWindow(ValueError):
    """Reciprocal transform requested with a window smaller than the degree."""


class BadSubstitution(ValueError):
    """A 4-variable substitution must keep exactly one slot symbolic."""


class UniPoly:
    """Dense univariate polynomial with integer coefficients.

    ``UniPoly([1, 3, 3])`` is 1 + 3x + 3x^2.  Trailing zeros are stripped
    on construction; the zero polynomial has an empty coefficient tuple
    and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficients must be int, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> UniPoly:
        return cls()

    @classmethod
    def one(cls) -> UniPoly:
        return cls((1,))

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> UniPoly:
        """coeff * x^degree."""
        if degree < 0:
            raise ValueError("degree must be non-negative")
        return cls((0,) * degree + (coeff,))

    @classmethod
    def one_plus_x_power(cls, n: int) -> UniPoly:
        """(1 + x)^n via the binomial row; exact for any n >= 0."""
        from math import comb

        if n < 0:
            raise ValueError("n must be non-negative")
        return cls(comb(n, k) for k in range(n + 1))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __getitem__(self, degree: int) -> int:
        """Coefficient at the given degree (0 beyond the stored range)."""
        if 0 <= degree < len(self._coeffs):
            return self._coeffs[degree]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self._coeffs)

    def __add__(self, other: UniPoly) -> UniPoly:
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: UniPoly) -> UniPoly:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: UniPoly | int) -> UniPoly:
        if isinstance(other, int):
            return UniPoly(c * other for c in self._coeffs)
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly(out)

    def __rmul__(self, other: int) -> UniPoly:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> UniPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative int")
        result = UniPoly.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> UniPoly:
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        if not self._coeffs:
            return self
        return UniPoly((0,) * k + self._coeffs)

    def __call__(self, t: int) -> int:
        """Exact evaluation at an integer point (Horner)."""
        if not isinstance(t, int):
            raise TypeError("evaluation point must be int")
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * t + c
        return acc

    def reciprocal(self, n: int) -> UniPoly:
        """x^n * p(1/x): the coefficient sequence reversed within a degree-n window.

        Applying it twice with the same window is the identity.
        """
        if n < 0:
            raise ValueError("window must be non-negative")
        if self.degree > n:
            raise DegreeExceedsWindow(f"degree {self.degree} exceeds window {n}")
        out = [0] * (n + 1)
        for i, c in enumerate(self._coeffs):
            out[n - i] = c
        return UniPoly(out)

    def json_coeffs(self) -> list[str]:
        """Coefficients as decimal strings, index = degree (platform-stable)."""
        return [str(c) for c in self._coeffs]

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for deg, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if deg == 0:
                body = str(mag)
            elif deg == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{deg}" if mag == 1 else f"{mag}*x^{deg}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({list(self._coeffs)!r})"


Exponents = tuple[int, int, int, int]

_VAR_NAMES = ("v", "x", "y", "z")


class MultiPoly4:
    """Sparse polynomial in the four variables v, x, y, z.

    Terms map an exponent 4-tuple (e_v, e_x, e_y, e_z) to a nonzero
    integer coefficient; zero terms are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Exponents, int] | None = None) -> None:
        clean: dict[Exponents, int] = {}
        if terms:
            for exps, c in terms.items():
                key = tuple(exps)
                if len(key) != 4 or not all(isinstance(e, int) and e >= 0 for e in key):
                    raise ValueError(f"exponents must be 4 non-negative ints, got {exps!r}")
                if not isinstance(c, int):
                    raise TypeError(f"coefficients must be int, got {type(c).__name__}")
                if c:
                    clean[key] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> MultiPoly4:
        return cls()

    @classmethod
    def one(cls) -> MultiPoly4:
        return cls({(0, 0, 0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> MultiPoly4:
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def monomial(cls, exponents: Exponents, coeff: int = 1) -> MultiPoly4:
        return cls({tuple(exponents): coeff})

    @classmethod
    def var(cls, name: str) -> MultiPoly4:
        """The single-variable monomial for one of "v", "x", "y", "z"."""
        if name not in _VAR_NAMES:
            raise ValueError(f"unknown variable {name!r}")
        exps = [0, 0, 0, 0]
        exps[_VAR_NAMES.index(name)] = 1
        return cls({tuple(exps): 1})

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly4):
            return self._terms == other._terms
        return NotImplemented

    def __neg__(self) -> MultiPoly4:
        return MultiPoly4({k: -c for k, c in self._terms.items()})

    def __add__(self, other: MultiPoly4) -> MultiPoly4:
        if not isinstance(other, MultiPoly4):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        result = MultiPoly4()
        result._terms = out
        return result

    def __sub__(self, other: MultiPoly4) -> MultiPoly4:
        if not isinstance(other, MultiPoly4):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: MultiPoly4 | int) -> MultiPoly4:
        if isinstance(other, int):
            return MultiPoly4({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, MultiPoly4):
            return NotImplemented
        out: dict[Exponents, int] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                k = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3])
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        result = MultiPoly4()
        result._terms = out
        return result

    def __rmul__(self, other: int) -> MultiPoly4:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> MultiPoly4:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative int")
        result = MultiPoly4.one()
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def substitute(
        self,
        v: int | None,
        x: int | None,
        y: int | None,
        z: int | None,
    ) -> UniPoly:
        """Substitute integer constants, collapsing to a univariate polynomial.

        Exactly one of the four slots must be None, which marks the
        variable kept symbolic.  0**0 evaluates to 1, so terms whose
        exponent is 0 in a zero-substituted slot survive.
        """
        vals = (v, x, y, z)
        symbolic = [i for i, val in enumerate(vals) if val is None]
        if len(symbolic) != 1:
            raise BadSubstitution("exactly one of v, x, y, z must be None")
        for val in vals:
            if val is not None and not isinstance(val, int):
                raise BadSubstitution("substituted values must be int")
        keep = symbolic[0]
        acc: dict[int, int] = {}
        for exps, c in self._terms.items():
            w = c
            for i, val in enumerate(vals):
                if i != keep:
                    w *= val ** exps[i]  # 0**0 == 1 by Python convention
            if w:
                acc[exps[keep]] = acc.get(exps[keep], 0) + w
        if not acc:
            return UniPoly()
        out = [0] * (max(acc) + 1)
        for deg, c in acc.items():
            out[deg] = c
        return UniPoly(out)

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in ascending lexicographic exponent order (e_v, e_x, e_y, e_z)."""
        return sorted(self._terms.items())

    def json_terms(self) -> list[dict[str, object]]:
        """Terms as JSON-ready dicts with decimal-string coefficients."""
        return [
            {"v": k[0], "x": k[1], "y": k[2], "z": k[3], "coeff": str(c)}
            for k, c in self.sorted_terms()
        ]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps, c in self.sorted_terms():
            mag = abs(c)
            factors = []
            for name, e in zip(_VAR_NAMES, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly4({dict(self.sorted_terms())!r})"
