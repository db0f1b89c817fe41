"""Finite graded-commutative algebras over the rationals.

A :class:`RingPresentation` is the tensor product of a free exterior algebra
on odd-degree generators with a finite algebra given by a structure-constant
table (normally concentrated in even degrees).  Its canonical basis consists
of pairs ``(S, j)``: ``S`` a strictly increasing tuple of odd-generator
indices and ``j`` an index into the table basis, ``0`` being the unit.  The
element ``(S, j)`` stands for ``x_{s1} x_{s2} ... x_{sr} e_j``.

>>> p = RingPresentation.build(odd=[("x3", 3), ("x5", 5)])
>>> {d: len(b) for d, b in p.basis.items()}
{0: 1, 3: 1, 5: 1, 8: 1}
>>> x3, x5 = p.element("x3"), p.element("x5")
>>> x5 * x3
-x3*x5
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .polynomial import Polynomial, fraction_str

UNIT = "1"


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int


@dataclass(frozen=True, order=True)
class BasisElement:
    odd_part: tuple[int, ...] = ()
    even_part: int = 0


ONE = BasisElement()


def koszul_sign(s: Iterable[int], t: Iterable[int]) -> int:
    """Sign of the shuffle that sorts the concatenation of ``s`` and ``t``.

    >>> koszul_sign((2, 3), (1,))
    1
    """
    s, t = tuple(s), tuple(t)
    if set(s) & set(t):
        raise ValueError(f"overlapping index sets {s} and {t}")
    inversions = sum(1 for i in s for j in t if i > j)
    return -1 if inversions % 2 else 1


def _clean(terms: Mapping) -> dict:
    return {k: v if type(v) is Fraction else Fraction(v) for k, v in terms.items() if v}


@dataclass(frozen=True)
class EvenAlgebraTable:
    """Structure constants of a finite unital commutative algebra.

    ``basis`` lists ``(name, degree)`` for every basis class except the unit,
    sorted by degree.  ``products`` maps an ordered pair of table indices
    (1-based; 0 is the unit) to the result as a tuple of ``(index, coeff)``.
    Pairs that are not listed multiply to zero; a pair listed in one order
    only is read symmetrically.
    """

    basis: tuple[tuple[str, int], ...] = ()
    products: tuple[tuple[tuple[int, int], tuple[tuple[int, Fraction], ...]], ...] = ()

    @classmethod
    def build(cls, basis: Iterable[tuple[str, int]] = (), products=()) -> EvenAlgebraTable:
        """Build from names.

        ``products`` is either a mapping ``{(left, right): {name: coeff}}`` or an
        iterable of ``(left, right, {name: coeff})`` triples; ``"1"`` names the
        unit.  Giving the same ordered pair twice with different results is an
        error; giving both orders is allowed and checked by validation.
        """
        basis = sorted(((str(n), int(d)) for n, d in basis), key=lambda nd: nd[1])
        index = {UNIT: 0}
        for k, (n, _) in enumerate(basis, start=1):
            if n in index:
                raise ValueError(f"duplicate table class name {n!r}")
            index[n] = k
        if isinstance(products, Mapping):
            products = [(l, r, res) for (l, r), res in products.items()]
        table: dict[tuple[int, int], tuple] = {}
        for left, right, result in products:
            try:
                key = (index[left], index[right])
                res = tuple(sorted(
                    (index[n], Fraction(c)) for n, c in result.items() if Fraction(c)
                ))
            except KeyError as exc:
                raise ValueError(f"unknown table class {exc.args[0]!r}") from None
            if key in table and table[key] != res:
                raise ValueError(f"conflicting products given for ({left}, {right})")
            table[key] = res
        return cls(tuple(basis), tuple(sorted(table.items())))

    @cached_property
    def _lookup(self) -> dict:
        return {k: dict(v) for k, v in self.products}

    @property
    def size(self) -> int:
        return len(self.basis)

    def degree(self, j: int) -> int:
        return 0 if j == 0 else self.basis[j - 1][1]

    def name(self, j: int) -> str:
        return UNIT if j == 0 else self.basis[j - 1][0]

    def index(self, name: str) -> int:
        if name == UNIT:
            return 0
        for k, (n, _) in enumerate(self.basis, start=1):
            if n == name:
                return k
        raise KeyError(name)

    def product(self, i: int, j: int) -> dict[int, Fraction]:
        if i == 0:
            return {j: Fraction(1)}
        if j == 0:
            return {i: Fraction(1)}
        lookup = self._lookup
        if (i, j) in lookup:
            return lookup[(i, j)]
        return lookup.get((j, i), {})

    def multiply(self, a: Mapping[int, Fraction], b: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = defaultdict(Fraction)
        for i, ca in a.items():
            for j, cb in b.items():
                for k, c in self.product(i, j).items():
                    out[k] += ca * cb * c
        return _clean(out)

    def has_odd_classes(self) -> bool:
        return any(d % 2 for _, d in self.basis)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    axiom: str = ""
    witness: tuple = ()
    message: str = ""

    def __bool__(self):
        return self.ok


class PresentationError(ValueError):
    def __init__(self, result: ValidationResult):
        super().__init__(result.message)
        self.result = result


def _fail(axiom: str, witness: tuple, message: str) -> ValidationResult:
    return ValidationResult(False, axiom, witness, message)


@dataclass(frozen=True)
class RingPresentation:
    """``Λ(odd_generators) ⊗ even``; see the module docstring.

    ``odd_products_vanish`` admits odd-degree classes in the table provided
    every product of two of them is zero.  That is how rings which are not a
    free exterior algebra on their odd classes are written down.
    """

    odd_generators: tuple[GeneratorSpec, ...] = ()
    even: EvenAlgebraTable = field(default_factory=EvenAlgebraTable)
    name: str = ""
    odd_products_vanish: bool = False

    @classmethod
    def build(cls, odd=(), even_basis=(), even_products=(), name="",
              odd_products_vanish=False) -> RingPresentation:
        """Convenience constructor from plain names and degrees; validates."""
        p = cls(
            tuple(GeneratorSpec(str(n), int(d)) for n, d in odd),
            EvenAlgebraTable.build(even_basis, even_products),
            name,
            odd_products_vanish,
        )
        p.check()
        return p

    def check(self) -> RingPresentation:
        result = self._memo.get("validation")
        if result is None:
            result = self._memo["validation"] = validate_presentation(self)
        if not result:
            raise PresentationError(result)
        return self

    # -- basis bookkeeping ------------------------------------------------

    @property
    def n_odd(self) -> int:
        return len(self.odd_generators)

    def degree_of(self, b: BasisElement) -> int:
        return (sum(self.odd_generators[i].degree for i in b.odd_part)
                + self.even.degree(b.even_part))

    @cached_property
    def basis(self) -> dict[int, tuple[BasisElement, ...]]:
        """Canonical basis by degree, degrees ascending."""
        by_degree = defaultdict(list)
        idx = range(self.n_odd)
        for r in range(self.n_odd + 1):
            for s in combinations(idx, r):
                for j in range(self.even.size + 1):
                    b = BasisElement(s, j)
                    by_degree[self.degree_of(b)].append(b)
        return {d: tuple(sorted(by_degree[d])) for d in sorted(by_degree)}

    @cached_property
    def position(self) -> dict[BasisElement, int]:
        return {b: k for elems in self.basis.values() for k, b in enumerate(elems)}

    def dim(self, degree: int) -> int:
        return len(self.basis.get(degree, ()))

    @property
    def degrees(self) -> list[int]:
        return list(self.basis)

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.basis.values())

    @property
    def top_degree(self) -> int:
        return max(self.basis)

    def betti(self) -> tuple[int, ...]:
        return tuple(self.dim(d) for d in range(self.top_degree + 1))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(b) for d, b in self.basis.items())

    @cached_property
    def _names(self) -> dict[str, BasisElement]:
        names = {UNIT: ONE}
        for i, g in enumerate(self.odd_generators):
            names[g.name] = BasisElement((i,), 0)
        for j in range(1, self.even.size + 1):
            names[self.even.name(j)] = BasisElement((), j)
        return names

    def format_basis(self, b: BasisElement) -> str:
        parts = [self.odd_generators[i].name for i in b.odd_part]
        if b.even_part:
            parts.append(self.even.name(b.even_part))
        return "*".join(parts) if parts else UNIT

    # -- elements ---------------------------------------------------------

    def element(self, name: str) -> AlgebraElement:
        """The generator or table class called ``name`` (``"1"`` is the unit)."""
        try:
            return AlgebraElement(self, {self._names[name]: 1})
        except KeyError:
            raise KeyError(f"no generator or table class named {name!r}") from None

    def monomial(self, odd_names: Iterable[str] = (), even: str | None = None,
                 coeff=1) -> AlgebraElement:
        """``coeff * x_a x_b ... e`` with the odd factors in the order given."""
        gens = [g.name for g in self.odd_generators]
        try:
            idx = [gens.index(n) for n in odd_names]
        except ValueError as exc:
            raise KeyError(f"unknown odd generator in {list(odd_names)}") from exc
        j = 0 if even in (None, UNIT) else self.even.index(even)
        if len(set(idx)) != len(idx):
            return AlgebraElement(self, {})
        inversions = sum(1 for a, b in combinations(idx, 2) if a > b)
        sign = -1 if inversions % 2 else 1
        return AlgebraElement(self, {BasisElement(tuple(sorted(idx)), j): sign * Fraction(coeff)})

    def unit(self) -> AlgebraElement:
        return AlgebraElement(self, {ONE: 1})

    def basis_element(self, b: BasisElement) -> AlgebraElement:
        return AlgebraElement(self, {b: 1})

    def from_vector(self, degree: int, vec) -> AlgebraElement:
        return AlgebraElement(self, dict(zip(self.basis.get(degree, ()), vec)))

    # -- multiplication ---------------------------------------------------

    @cached_property
    def _products(self) -> dict:
        return {}

    @cached_property
    def _memo(self) -> dict:
        # derived data computed elsewhere (validation, quotient basis, shape)
        return {}

    def multiply_basis(self, a: BasisElement, b: BasisElement) -> dict[BasisElement, Fraction]:
        key = (a, b)
        cache = self._products
        if key in cache:
            return cache[key]
        if set(a.odd_part) & set(b.odd_part):
            out = {}
        else:
            sign = koszul_sign(a.odd_part, b.odd_part)
            # move e_a past the odd generators of b
            if self.even.degree(a.even_part) % 2 and len(b.odd_part) % 2:
                sign = -sign
            s = tuple(sorted(a.odd_part + b.odd_part))
            out = {BasisElement(s, k): sign * c
                   for k, c in self.even.product(a.even_part, b.even_part).items()}
        cache[key] = out
        return out

    def poincare_polynomial(self) -> Polynomial:
        return Polynomial(self.betti())


def validate_presentation(p: RingPresentation) -> ValidationResult:
    """Check every axiom; report the first failure with its witness."""
    seen = set()
    for g in p.odd_generators:
        if g.degree < 1 or g.degree % 2 == 0:
            return _fail("odd generator degree", (g.name,),
                         f"odd generator {g.name} has degree {g.degree}, expected a positive odd degree")
    names = [g.name for g in p.odd_generators] + [n for n, _ in p.even.basis]
    for n in names:
        if n in seen or n == UNIT:
            return _fail("unique names", (n,), f"name {n!r} is used twice or reserved")
        seen.add(n)
    table = p.even
    for n, d in table.basis:
        if d < 1:
            return _fail("positive degree", (n,), f"table class {n} has degree {d}")
        if d % 2 and not p.odd_products_vanish:
            return _fail("even degrees", (n,), f"odd degree in even table: {n} has degree {d}")
    if list(table.basis) != sorted(table.basis, key=lambda nd: nd[1]):
        return _fail("table order", (), "table basis is not sorted by degree")
    m = table.size
    for (i, j), res in table.products:
        if not (0 <= i <= m and 0 <= j <= m) or any(not 0 <= k <= m for k, _ in res):
            return _fail("index range", (i, j), f"product entry ({i}, {j}) out of range")
    lookup = table._lookup
    for (i, j), res in lookup.items():
        if (j, i) in lookup and lookup[(j, i)] != res:
            pair = (table.name(i), table.name(j))
            return _fail("symmetric", pair, f"table not symmetric at pair {pair}")
    for (i, j), res in lookup.items():
        if 0 in (i, j):
            expected = {j if i == 0 else i: Fraction(1)}
            if res != expected:
                pair = (table.name(i), table.name(j))
                return _fail("unital", pair, f"unit does not act as identity at pair {pair}")
    for (i, j), res in lookup.items():
        for k in res:
            if table.degree(k) != table.degree(i) + table.degree(j):
                pair = (table.name(i), table.name(j))
                return _fail("degree-additive", pair,
                             f"product {pair[0]}*{pair[1]} has a term {table.name(k)} "
                             f"of degree {table.degree(k)}")
    if p.odd_products_vanish:
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                if table.degree(i) % 2 and table.degree(j) % 2 and table.product(i, j):
                    pair = (table.name(i), table.name(j))
                    return _fail("odd products vanish", pair,
                                 f"product of odd classes {pair} is nonzero")
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            ij = table.product(i, j)
            for k in range(1, m + 1):
                left = table.multiply(ij, {k: 1})
                right = table.multiply({i: 1}, table.product(j, k))
                if left != right:
                    triple = (table.name(i), table.name(j), table.name(k))
                    return _fail("associative", triple, f"table not associative at {triple}")
    return ValidationResult(True, message="ok")


def build_basis(p: RingPresentation) -> dict[int, tuple[BasisElement, ...]]:
    return p.basis


def poincare_polynomial(p: RingPresentation) -> Polynomial:
    return p.poincare_polynomial()


class AlgebraElement:
    """Sparse rational combination of canonical basis elements."""

    __slots__ = ("presentation", "terms")

    def __init__(self, presentation: RingPresentation, terms: Mapping[BasisElement, object]):
        self.presentation = presentation
        self.terms: dict[BasisElement, Fraction] = _clean(terms)

    @property
    def degree(self) -> int | None:
        """Common degree of the terms; ``None`` when zero or inhomogeneous."""
        degs = {self.presentation.degree_of(b) for b in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.degree is not None

    def coefficient(self, b: BasisElement) -> Fraction:
        return self.terms.get(b, Fraction(0))

    def vector(self, degree: int) -> tuple[Fraction, ...]:
        return tuple(self.coefficient(b) for b in self.presentation.basis.get(degree, ()))

    def _same(self, other: AlgebraElement):
        if other.presentation is not self.presentation and other.presentation != self.presentation:
            raise ValueError("elements belong to different presentations")

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.presentation.unit() * other if other else AlgebraElement(self.presentation, {})
        self._same(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, 0) + c
        return AlgebraElement(self.presentation, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.presentation, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return cup(self, other)
        c = Fraction(other)
        return AlgebraElement(self.presentation, {b: c * v for b, v in self.terms.items()})

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.presentation == other.presentation and self.terms == other.terms
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        out = ""
        for b in sorted(self.terms, key=lambda b: (self.presentation.degree_of(b), b)):
            c = self.terms[b]
            name = self.presentation.format_basis(b)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            body = name if a == 1 else (fraction_str(a) if name == UNIT else f"{fraction_str(a)}*{name}")
            out += (("-" if sign == "-" else "") + body) if not out else f" {sign} {body}"
        return out


def cup(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Cup product, the bilinear extension of the basis rule with Koszul signs."""
    a._same(b)
    p = a.presentation
    out: dict[BasisElement, Fraction] = defaultdict(Fraction)
    for ba, ca in a.terms.items():
        for bb, cb in b.terms.items():
            for bc, c in p.multiply_basis(ba, bb).items():
                out[bc] += ca * cb * c
    return AlgebraElement(p, out)
