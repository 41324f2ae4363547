"""
Graded exterior forms on C^2 with polynomial coefficients.

A basis index is a strictly ascending tuple of generators. Any other
ordering is sorted on construction, picking up the permutation sign;
repeated generators vanish.
"""

from enum import IntEnum
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Type, TypeVar

from formwell.core.poly.poly import Poly, PolyLike, Var, as_poly
from formwell.core.scalar import GaussianRational


class Gen(IntEnum):
    """Complex cotangent generators in canonical order."""

    DZ1 = 0
    DZ2 = 1
    DZB1 = 2
    DZB2 = 3

    @property
    def var(self) -> Var:
        return _GEN_TO_VAR[self]

    @classmethod
    def of(cls, v: Var) -> "Gen":
        return _VAR_TO_GEN[Var(v)]

    @property
    def conjugate(self) -> "Gen":
        return Gen.of(self.var.conjugate)

    @property
    def label(self) -> str:
        return GEN_NAMES[self]


class RealGen(IntEnum):
    DX0 = 0
    DX1 = 1
    DX2 = 2
    DX3 = 3

    @property
    def label(self) -> str:
        return f"dx{self.value}"


_GEN_TO_VAR = {Gen.DZ1: Var.Z1, Gen.DZ2: Var.Z2, Gen.DZB1: Var.ZB1, Gen.DZB2: Var.ZB2}
_VAR_TO_GEN = {v: g for g, v in _GEN_TO_VAR.items()}
GEN_NAMES = {Gen.DZ1: "dz1", Gen.DZ2: "dz2", Gen.DZB1: "dzb1", Gen.DZB2: "dzb2"}

BasisIndex = Tuple[Gen, ...]


def sort_with_sign(index: Sequence[int]) -> Tuple[int, tuple]:
    """
    Sort generators into ascending order.

    Returns:
        Tuple[int, tuple]: (sign, sorted index); sign is 0 when a generator repeats.
    """
    if len(set(index)) != len(index):
        return 0, ()
    inversions = sum(1 for a in range(len(index)) for b in range(a + 1, len(index)) if index[a] > index[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(index))


F = TypeVar("F", bound="ExteriorForm")


class ExteriorForm:
    """Mapping basis index -> nonzero Poly; shared by Form and RealForm."""

    __slots__ = ("_coeffs", "_hash")
    GENERATOR: Type[IntEnum] = Gen

    def __init__(self, coeffs: Optional[Mapping[Sequence[int], PolyLike]] = None):
        acc: Dict[tuple, Poly] = {}
        for index, value in (coeffs or {}).items():
            _accumulate(acc, self.GENERATOR, index, as_poly(value))
        self._coeffs = {k: v for k, v in acc.items() if v}
        self._hash: Optional[int] = None

    @classmethod
    def from_terms(cls: Type[F], terms: Iterable[Tuple[Sequence[int], Poly]]) -> F:
        acc: Dict[tuple, Poly] = {}
        for index, poly in terms:
            _accumulate(acc, cls.GENERATOR, index, poly)
        return cls._from_clean(acc)

    @classmethod
    def _from_clean(cls: Type[F], coeffs: Dict[tuple, Poly]) -> F:
        obj = cls.__new__(cls)
        obj._coeffs = {k: v for k, v in coeffs.items() if v}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls: Type[F]) -> F:
        return cls._from_clean({})

    @classmethod
    def scalar(cls: Type[F], value: PolyLike) -> F:
        return cls._from_clean({(): as_poly(value)})

    @classmethod
    def basis(cls: Type[F], *gens: int, coeff: PolyLike = 1) -> F:
        return cls.from_terms([(gens, as_poly(coeff))])

    def items(self) -> List[Tuple[tuple, Poly]]:
        """Terms sorted by degree, then basis index."""
        return sorted(self._coeffs.items(), key=lambda item: (len(item[0]), tuple(int(g) for g in item[0])))

    def coefficient(self, *gens: int) -> Poly:
        sign, key = sort_with_sign(gens)
        if sign == 0:
            return Poly.zero()
        key = tuple(self.GENERATOR(g) for g in key)
        return self._coeffs.get(key, Poly.zero()).scale(sign)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def degrees(self) -> List[int]:
        return sorted({len(k) for k in self._coeffs})

    @property
    def degree(self) -> Optional[int]:
        """Degree of a homogeneous nonzero form, None otherwise."""
        degrees = self.degrees()
        return degrees[0] if len(degrees) == 1 else None

    def is_homogeneous(self, k: int) -> bool:
        return all(len(index) == k for index in self._coeffs)

    def grade(self: F, k: int) -> F:
        return type(self)._from_clean({i: p for i, p in self._coeffs.items() if len(i) == k})

    def map_coefficients(self: F, fn: Callable[[Poly], Poly]) -> F:
        return type(self)._from_clean({i: fn(p) for i, p in self._coeffs.items()})

    def __add__(self: F, other: F) -> F:
        if not isinstance(other, ExteriorForm) or other.GENERATOR is not self.GENERATOR:
            return NotImplemented
        acc = dict(self._coeffs)
        for index, poly in other._coeffs.items():
            acc[index] = acc[index] + poly if index in acc else poly
        return type(self)._from_clean(acc)

    def __neg__(self: F) -> F:
        return self.map_coefficients(lambda p: -p)

    def __sub__(self: F, other: F) -> F:
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return self + (-other)

    def scale(self: F, factor: PolyLike) -> F:
        """Multiply every coefficient by a function or scalar."""
        factor = as_poly(factor)
        return self.map_coefficients(lambda p: p * factor)

    def __mul__(self: F, other: PolyLike) -> F:
        if isinstance(other, ExteriorForm):
            return self.wedge(other)
        if not isinstance(other, (Poly, GaussianRational, int, Fraction)):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self: F, other: PolyLike) -> F:
        if not isinstance(other, (Poly, GaussianRational, int, Fraction)):
            return NotImplemented
        return self.scale(other)

    def wedge(self: F, other: F) -> F:
        terms = []
        for i, p in self._coeffs.items():
            for j, q in other._coeffs.items():
                terms.append((i + j, p * q))
        return type(self).from_terms(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExteriorForm):
            return NotImplemented
        return self.GENERATOR is other.GENERATOR and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @classmethod
    def index_label(cls, index: Sequence[int]) -> str:
        if not index:
            return "1"
        return "/\\".join(cls.GENERATOR(g).label for g in index)  # type: ignore[attr-defined]

    def render(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for index, poly in self.items():
            if index:
                pieces.append(f"({poly.render()})*{self.index_label(index)}")
            else:
                pieces.append(f"({poly.render()})")
        return " + ".join(pieces)

    __str__ = render

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()!r})"


def _accumulate(acc: Dict[tuple, Poly], generator: Type[IntEnum], index: Sequence[int], poly: Poly) -> None:
    if not poly:
        return
    sign, key = sort_with_sign(tuple(int(g) for g in index))
    if sign == 0:
        return
    key = tuple(generator(g) for g in key)
    value = poly if sign > 0 else -poly
    acc[key] = acc[key] + value if key in acc else value


class Form(ExteriorForm):
    """Form in the complex basis dz1, dz2, dzb1, dzb2."""

    __slots__ = ()
    GENERATOR = Gen

    @classmethod
    def gen(cls, g: Gen, coeff: PolyLike = 1) -> "Form":
        return cls.basis(g, coeff=coeff)


class RealForm(ExteriorForm):
    """Form in the real basis dx0..dx3; coefficients stay z-polynomials."""

    __slots__ = ()
    GENERATOR = RealGen

    @classmethod
    def gen(cls, k: int, coeff: PolyLike = 1) -> "RealForm":
        return cls.basis(k, coeff=coeff)


DZ_FULL: BasisIndex = (Gen.DZ1, Gen.DZ2, Gen.DZB1, Gen.DZB2)


def all_basis_indices() -> List[BasisIndex]:
    """The 16 canonical basis indices, by degree then index."""
    out: List[BasisIndex] = []
    for k in range(5):
        out.extend(tuple(c) for c in combinations(tuple(Gen), k))
    return out
