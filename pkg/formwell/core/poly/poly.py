"""
Polynomials in the four commuting symbols z1, zb1, z2, zb2 with Gaussian
rational coefficients.

z and zb are independent symbols, so the Wirtinger derivatives are plain
formal partial derivatives.
"""

from enum import IntEnum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Type, TypeVar, Union

from formwell.core.scalar import GaussianRational, ScalarLike, format_rational


class Var(IntEnum):
    """Symbols, valued by their exponent slot in a Monomial."""

    Z1 = 0
    ZB1 = 1
    Z2 = 2
    ZB2 = 3

    @property
    def conjugate(self) -> "Var":
        return Var(self.value ^ 1)


class Monomial(NamedTuple):
    e1: int = 0
    eb1: int = 0
    e2: int = 0
    eb2: int = 0

    @property
    def degree(self) -> int:
        return self.e1 + self.eb1 + self.e2 + self.eb2

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(*(a + b for a, b in zip(self, other)))

    def conjugate(self) -> "Monomial":
        return Monomial(self.eb1, self.e1, self.eb2, self.e2)

    def sort_key(self) -> Tuple[int, ...]:
        # descending total degree, then descending lex on the exponents
        return (-self.degree,) + tuple(-e for e in self)


ONE_MONOMIAL = Monomial()

P = TypeVar("P", bound="Poly")
PolyLike = Union["Poly", GaussianRational, int, Fraction]


class Poly:
    """
    Sparse polynomial, `terms` maps Monomial -> nonzero GaussianRational.

    Subclasses only change VAR_NAMES (the real-coordinate oracle reuses the
    same arithmetic over x0..x3).
    """

    __slots__ = ("_terms", "_hash")
    VAR_NAMES: Tuple[str, str, str, str] = ("z1", "zb1", "z2", "zb2")

    def __init__(self, terms: Optional[Mapping[Sequence[int], ScalarLike]] = None):
        cleaned: Dict[Monomial, GaussianRational] = {}
        for mono, coeff in (terms or {}).items():
            key = Monomial(*mono)
            if any(e < 0 for e in key):
                raise ValueError(f"negative exponent in {tuple(mono)}")
            value = cleaned.get(key, GaussianRational(0)) + GaussianRational.coerce(coeff)
            if value:
                cleaned[key] = value
            else:
                cleaned.pop(key, None)
        self._terms = cleaned
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls: Type[P], terms: Dict[Monomial, GaussianRational]) -> P:
        obj = cls.__new__(cls)
        obj._terms = {m: c for m, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls: Type[P]) -> P:
        return cls._from_clean({})

    @classmethod
    def constant(cls: Type[P], value: ScalarLike) -> P:
        return cls._from_clean({ONE_MONOMIAL: GaussianRational.coerce(value)})

    @classmethod
    def var(cls: Type[P], slot: int) -> P:
        exps = [0, 0, 0, 0]
        exps[int(slot)] = 1
        return cls._from_clean({Monomial(*exps): GaussianRational(1)})

    def _coerce(self: P, other: PolyLike) -> P:
        if isinstance(other, Poly):
            return other  # type: ignore[return-value]
        return type(self).constant(GaussianRational.coerce(other))

    @property
    def terms(self) -> List[Tuple[Monomial, GaussianRational]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def __iter__(self) -> Iterator[Tuple[Monomial, GaussianRational]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mono: Sequence[int]) -> GaussianRational:
        return self._terms.get(Monomial(*mono), GaussianRational(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def constant_value(self) -> Optional[GaussianRational]:
        """The value if this polynomial is constant (zero included), else None."""
        if not self._terms:
            return GaussianRational(0)
        if len(self._terms) == 1 and ONE_MONOMIAL in self._terms:
            return self._terms[ONE_MONOMIAL]
        return None

    def uses(self, slot: int) -> bool:
        return any(m[int(slot)] for m in self._terms)

    def __add__(self: P, other: PolyLike) -> P:
        if not isinstance(other, (Poly, GaussianRational, int, Fraction)):
            return NotImplemented
        o = self._coerce(other)
        acc = dict(self._terms)
        for mono, coeff in o._terms.items():
            acc[mono] = acc.get(mono, GaussianRational(0)) + coeff
        return type(self)._from_clean(acc)

    __radd__ = __add__

    def __neg__(self: P) -> P:
        return type(self)._from_clean({m: -c for m, c in self._terms.items()})

    def __sub__(self: P, other: PolyLike) -> P:
        if not isinstance(other, (Poly, GaussianRational, int, Fraction)):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self: P, other: PolyLike) -> P:
        return (-self) + other

    def scale(self: P, factor: ScalarLike) -> P:
        c = GaussianRational.coerce(factor)
        if not c:
            return type(self).zero()
        return type(self)._from_clean({m: v * c for m, v in self._terms.items()})

    def __mul__(self: P, other: PolyLike) -> P:
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        acc: Dict[Monomial, GaussianRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = m1.times(m2)
                acc[mono] = acc.get(mono, GaussianRational(0)) + c1 * c2
        return type(self)._from_clean(acc)

    __rmul__ = __mul__

    def __pow__(self: P, exponent: int) -> P:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = type(self).constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def partial(self: P, slot: int) -> P:
        """Formal derivative with respect to the symbol in `slot`."""
        slot = int(slot)
        acc: Dict[Monomial, GaussianRational] = {}
        for mono, coeff in self._terms.items():
            e = mono[slot]
            if e:
                exps = list(mono)
                exps[slot] = e - 1
                acc[Monomial(*exps)] = coeff * e
        return type(self)._from_clean(acc)

    def conjugate(self: P) -> P:
        return type(self)._from_clean({m.conjugate(): c.conjugate() for m, c in self._terms.items()})

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Replace the symbol in slot k by images[k]; result has the images' class."""
        target = type(images[0])
        result = target.zero()
        powers: Dict[Tuple[int, int], Poly] = {}
        for mono, coeff in self._terms.items():
            term = target.constant(coeff)
            for slot, e in enumerate(mono):
                if e:
                    key = (slot, e)
                    if key not in powers:
                        powers[key] = images[slot] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def evaluate(self, values: Sequence[complex]) -> complex:
        """Float evaluation with values[k] assigned to the symbol in slot k."""
        total = 0j
        for mono, coeff in self._terms.items():
            term = coeff.to_complex()
            for value, e in zip(values, mono):
                if e:
                    term *= value**e
            total += term
        return total

    def evaluate_exact(self, values: Sequence[GaussianRational]) -> GaussianRational:
        total = GaussianRational(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for value, e in zip(values, mono):
                if e:
                    term = term * value**e
            total = total + term
        return total

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return type(self).VAR_NAMES == type(other).VAR_NAMES and self._terms == other._terms
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def render(self) -> str:
        if not self._terms:
            return "0"
        pieces: List[str] = []
        for index, (mono, coeff) in enumerate(self.terms):
            negative, body = _render_term(coeff, mono, self.VAR_NAMES)
            if index == 0:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    __str__ = render

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()!r})"


def _paren(q: Fraction) -> str:
    text = format_rational(q)
    return text if q.denominator == 1 else f"({text})"


def _imaginary_text(magnitude: Fraction) -> str:
    return "i" if magnitude == 1 else f"{_paren(magnitude)}*i"


def _render_term(coeff: GaussianRational, mono: Monomial, names: Sequence[str]) -> Tuple[bool, str]:
    mono_text = "*".join(name if e == 1 else f"{name}^{e}" for name, e in zip(names, mono) if e)
    if coeff.im == 0 or coeff.re == 0:
        imaginary = coeff.re == 0
        value = coeff.im if imaginary else coeff.re
        negative, magnitude = value < 0, abs(value)
        if imaginary:
            scalar = _imaginary_text(magnitude)
        elif mono_text and magnitude == 1:
            scalar = ""
        elif mono_text:
            scalar = _paren(magnitude)
        else:
            scalar = format_rational(magnitude)
    else:
        sign = "+" if coeff.im > 0 else "-"
        negative = False
        scalar = f"({format_rational(coeff.re)} {sign} {_imaginary_text(abs(coeff.im))})"
    if not mono_text:
        return negative, scalar
    if not scalar:
        return negative, mono_text
    return negative, f"{scalar}*{mono_text}"


def as_poly(value: PolyLike) -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.constant(GaussianRational.coerce(value))


def z1() -> Poly:
    return Poly.var(Var.Z1)


def zb1() -> Poly:
    return Poly.var(Var.ZB1)


def z2() -> Poly:
    return Poly.var(Var.Z2)


def zb2() -> Poly:
    return Poly.var(Var.ZB2)


def poly_sum(polys: Iterable[Poly]) -> Poly:
    total = Poly.zero()
    for p in polys:
        total = total + p
    return total
