"""Algebra signatures, weights, and the equivalence relations that classify them.

A signature selects one of the four superalgebra families: the Weyl algebra
on generators x_i, d_i, the Clifford algebra on xi_i, eta_i, and their
"daggered" variants in which the positive-index generators carry the
opposite Z2-parity.  Indices are nonzero integers; positive indices run up
to ``pos_rank`` and negative indices down to ``-neg_rank`` (either rank may
be infinite).

A weight assigns an exact rational to every nonzero index.  We only ever
need weights that are eventually constant on each side, so a ``Weight``
stores a finite set of explicit entries plus one tail value per side.  One
side of every signature is *fermionic*: its coordinates are constrained to
{0, 1} (negative indices for Weyl, positive for Clifford).  The other side
is *bosonic* and unconstrained.

Three equivalence relations drive everything downstream:

* ``same_block``: the difference is a finitely supported integer vector.
* ``approx_equiv``: same block, and the two weights have nonnegative-integer
  coordinates at exactly the same index set.  This relation classifies the
  simple weight modules.
* ``approx_equiv_zero``: additionally the total coordinate sum of the
  difference vanishes (degree-zero sublattice).

All values are immutable and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import IndexRangeError, SignatureError

Rational = Fraction | int

ZERO = Fraction(0)
ONE = Fraction(1)

#: Sentinel for an infinite rank.  ``None`` rather than ``math.inf`` keeps
#: every stored number an exact rational.
INFINITE = None

Rank = int | None


class AlgebraKind(Enum):
    WEYL = "weyl"
    CLIFFORD = "clifford"


class Hom(Enum):
    """The named homomorphisms from enveloping algebras into the kernels."""

    PHI = "phi"
    PSI = "psi"
    THETA = "theta"
    UPSILON_PLUS = "upsilon+"
    UPSILON_MINUS = "upsilon-"


def _rank_contains(rank: Rank, magnitude: int) -> bool:
    return rank is INFINITE or magnitude <= rank


@dataclass(frozen=True)
class AlgebraSignature:
    """Which superalgebra is in play.

    ``daggered`` toggles the Z2-parity of the positive-index generators; it
    never changes the multiplication, only the parity bookkeeping.
    """

    kind: AlgebraKind
    pos_rank: Rank
    neg_rank: Rank
    daggered: bool = False

    def __post_init__(self):
        for rank in (self.pos_rank, self.neg_rank):
            if rank is not INFINITE and (not isinstance(rank, int) or rank < 0):
                raise SignatureError(f"rank must be a nonnegative integer or infinite, got {rank!r}")

    @property
    def fermionic_side(self) -> int:
        """+1 or -1: the sign of the indices constrained to {0, 1}."""
        return -1 if self.kind is AlgebraKind.WEYL else 1

    def is_fermionic_index(self, index: int) -> bool:
        return (index > 0) == (self.fermionic_side > 0)

    def in_rank(self, index: int) -> bool:
        if index == 0:
            return False
        if index > 0:
            return _rank_contains(self.pos_rank, index)
        return _rank_contains(self.neg_rank, -index)

    def check_index(self, index: int) -> None:
        if index == 0:
            raise IndexRangeError("index must be nonzero")
        if not self.in_rank(index):
            raise IndexRangeError(f"index {index} outside ranks of {self}")

    def index_parity(self, index: int) -> int:
        """Z2-parity of the generators at ``index`` under this signature."""
        plain = 0 if index > 0 else 1
        if self.daggered and index > 0:
            plain ^= 1
        return plain

    def dagger(self) -> "AlgebraSignature":
        return AlgebraSignature(self.kind, self.pos_rank, self.neg_rank, not self.daggered)

    def indices(self) -> Iterator[int]:
        """All indices, smallest magnitude first; requires finite ranks."""
        if self.pos_rank is INFINITE or self.neg_rank is INFINITE:
            raise SignatureError("cannot enumerate indices of an infinite-rank signature")
        for m in range(1, max(self.pos_rank, self.neg_rank) + 1):
            if m <= self.neg_rank:
                yield -m
            if m <= self.pos_rank:
                yield m

    def __str__(self):
        def fmt(rank: Rank) -> str:
            return "inf" if rank is INFINITE else str(rank)

        name = "D" if self.kind is AlgebraKind.WEYL else "Cl"
        dag = "+" if self.daggered else ""
        return f"{name}{dag}({fmt(self.pos_rank)}|{fmt(self.neg_rank)})"


def weyl(pos_rank: Rank, neg_rank: Rank, daggered: bool = False) -> AlgebraSignature:
    return AlgebraSignature(AlgebraKind.WEYL, pos_rank, neg_rank, daggered)


def clifford(pos_rank: Rank, neg_rank: Rank, daggered: bool = False) -> AlgebraSignature:
    return AlgebraSignature(AlgebraKind.CLIFFORD, pos_rank, neg_rank, daggered)


def _normalize_entries(
    entries: Mapping[int, Rational] | Iterable[tuple[int, Rational]],
    pos_tail: Fraction,
    neg_tail: Fraction,
) -> tuple[tuple[int, Fraction], ...]:
    items: dict[int, Fraction] = {}
    pairs = entries.items() if isinstance(entries, Mapping) else entries
    for index, value in pairs:
        if index == 0:
            raise IndexRangeError("index must be nonzero")
        items[index] = Fraction(value)
    kept = []
    for index in sorted(items):
        tail = pos_tail if index > 0 else neg_tail
        if items[index] != tail:
            kept.append((index, items[index]))
    return tuple(kept)


@dataclass(frozen=True)
class Weight:
    """A tail-constant assignment of exact rationals to nonzero indices.

    Entries equal to their side's tail are never stored, so structural
    equality is value equality.  ``window`` is presentation metadata (the
    radius the explicit entries were computed for) and does not take part
    in comparisons.
    """

    entries: tuple[tuple[int, Fraction], ...] = ()
    pos_tail: Fraction = ZERO
    neg_tail: Fraction = ZERO
    window: int = field(default=0, compare=False)

    @staticmethod
    def make(
        entries: Mapping[int, Rational] | Iterable[tuple[int, Rational]] = (),
        pos_tail: Rational = 0,
        neg_tail: Rational = 0,
        window: int | None = None,
    ) -> "Weight":
        pos_tail = Fraction(pos_tail)
        neg_tail = Fraction(neg_tail)
        kept = _normalize_entries(entries, pos_tail, neg_tail)
        span = max((abs(i) for i, _ in kept), default=0)
        if window is None:
            window = span
        elif window < span:
            raise IndexRangeError(f"window {window} does not cover explicit index span {span}")
        return Weight(kept, pos_tail, neg_tail, window)

    def __getitem__(self, index: int) -> Fraction:
        if index == 0:
            raise IndexRangeError("index must be nonzero")
        for i, value in self.entries:
            if i == index:
                return value
        return self.pos_tail if index > 0 else self.neg_tail

    @property
    def stored_indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def set(self, index: int, value: Rational) -> "Weight":
        updated = dict(self.entries)
        updated[index] = Fraction(value)
        return Weight.make(updated, self.pos_tail, self.neg_tail)

    def shift(self, index: int, delta: Rational) -> "Weight":
        return self.set(index, self[index] + Fraction(delta))

    def add(self, other: "Weight") -> "Weight":
        indices = set(self.stored_indices) | set(other.stored_indices)
        return Weight.make(
            {i: self[i] + other[i] for i in indices},
            self.pos_tail + other.pos_tail,
            self.neg_tail + other.neg_tail,
        )

    def sub(self, other: "Weight") -> "Weight":
        indices = set(self.stored_indices) | set(other.stored_indices)
        return Weight.make(
            {i: self[i] - other[i] for i in indices},
            self.pos_tail - other.pos_tail,
            self.neg_tail - other.neg_tail,
        )

    def add_root(self, alpha: "RootVector") -> "Weight":
        updated = dict(self.entries)
        for i, c in alpha.entries:
            updated[i] = self[i] + c
        return Weight.make(updated, self.pos_tail, self.neg_tail)

    def is_finitely_supported(self) -> bool:
        return self.pos_tail == 0 and self.neg_tail == 0

    def is_integral(self) -> bool:
        tails_ok = self.pos_tail.denominator == 1 and self.neg_tail.denominator == 1
        return tails_ok and all(v.denominator == 1 for _, v in self.entries)

    def total(self) -> Fraction:
        """Sum of all deviations from the tails plus nothing from the tails.

        Only meaningful for comparing weights with equal tails; used for the
        degree-zero sublattice test.
        """
        out = ZERO
        for i, value in self.entries:
            out += value - (self.pos_tail if i > 0 else self.neg_tail)
        return out

    def __str__(self):
        parts = [f"z[{i}]={value}" for i, value in self.entries]
        if self.pos_tail:
            parts.append(f"tail+={self.pos_tail}")
        if self.neg_tail:
            parts.append(f"tail-={self.neg_tail}")
        return "(" + ", ".join(parts) + ")" if parts else "(0)"


@dataclass(frozen=True)
class RootVector:
    """A finitely supported integer vector: an element of the lattice Q_A."""

    entries: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def make(entries: Mapping[int, int] | Iterable[tuple[int, int]]) -> "RootVector":
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        items: dict[int, int] = {}
        for index, value in pairs:
            if index == 0:
                raise IndexRangeError("index must be nonzero")
            if value:
                items[index] = items.get(index, 0) + int(value)
        return RootVector(tuple((i, items[i]) for i in sorted(items) if items[i]))

    def __getitem__(self, index: int) -> int:
        for i, value in self.entries:
            if i == index:
                return value
        return 0

    def total(self) -> int:
        return sum(value for _, value in self.entries)

    def neg_total(self) -> int:
        return sum(value for i, value in self.entries if i < 0)

    def parity(self) -> int:
        """The parity homomorphism on Q_A: counts the negative-side part."""
        return self.neg_total() % 2

    def to_weight(self) -> Weight:
        return Weight.make({i: Fraction(v) for i, v in self.entries})

    def neg(self) -> "RootVector":
        return RootVector.make({i: -v for i, v in self.entries})

    def __str__(self):
        if not self.entries:
            return "0"
        parts = []
        for i, v in self.entries:
            term = f"z[{i}]" if abs(v) == 1 else f"{abs(v)}*z[{i}]"
            parts.append(("-" if v < 0 else "+") + term)
        head = parts[0].lstrip("+")
        return head + " " + " ".join(p[0] + " " + p[1:] for p in parts[1:]) if len(parts) > 1 else head


def weight_difference(mu: Weight, nu: Weight) -> RootVector | None:
    """``mu - nu`` as a lattice vector, or None if it is not one.

    The difference is a lattice vector exactly when the tails agree and all
    coordinatewise differences are integers.
    """
    if mu.pos_tail != nu.pos_tail or mu.neg_tail != nu.neg_tail:
        return None
    indices = set(mu.stored_indices) | set(nu.stored_indices)
    out = {}
    for i in indices:
        delta = mu[i] - nu[i]
        if delta.denominator != 1:
            return None
        if delta:
            out[i] = int(delta)
    return RootVector.make(out)


def is_in_h_vee(mu: Weight, sig: AlgebraSignature) -> bool:
    """Membership in the weight set of the signature.

    Every fermionic-side coordinate (tail included) must lie in {0, 1}, and
    every stored entry must sit inside the signature's ranks.
    """
    fermionic_tail = mu.neg_tail if sig.fermionic_side < 0 else mu.pos_tail
    if fermionic_tail not in (0, 1):
        return False
    for i, value in mu.entries:
        if not sig.in_rank(i):
            return False
        if sig.is_fermionic_index(i) and value not in (0, 1):
            return False
    return True


def same_block(mu: Weight, nu: Weight) -> bool:
    return weight_difference(mu, nu) is not None


def approx_equiv(mu: Weight, nu: Weight, sig: AlgebraSignature) -> bool:
    """The module-classifying relation.

    True iff ``mu - nu`` lies in the lattice and the index sets where the
    coordinates are nonnegative integers coincide.  Tails are compared as
    values, which settles all indices beyond both windows at once.
    """
    if weight_difference(mu, nu) is None:
        return False
    for i in set(mu.stored_indices) | set(nu.stored_indices):
        if _nonneg_int(mu[i]) != _nonneg_int(nu[i]):
            return False
    return True


def approx_equiv_zero(mu: Weight, nu: Weight, sig: AlgebraSignature) -> bool:
    if not approx_equiv(mu, nu, sig):
        return False
    return mu.sub(nu).total() == 0


def _nonneg_int(value: Fraction) -> bool:
    return value.denominator == 1 and value >= 0


def weight_parity(mu: Weight, sig: AlgebraSignature) -> int:
    """The fixed extension of the parity function to all weights.

    On the lattice this is the count of negative-side coordinates mod 2
    (plus the positive side when the signature is daggered); floors make it
    well defined and lattice-compatible on arbitrary tail-constant weights.
    """
    total = 0
    for i, value in mu.entries:
        if i < 0:
            total += _floor(value - mu.neg_tail)
        elif sig.daggered:
            total += _floor(value - mu.pos_tail)
    return total % 2


def _floor(value: Fraction) -> int:
    return value.numerator // value.denominator


@dataclass(frozen=True)
class ClassicalWeight:
    """A finite epsilon/delta combination plus a symbolic tau tail.

    ``tau`` stands for the formal half-sum (1/2)(sum eps_i - sum delta_j);
    it is kept as a coefficient rather than expanded.
    """

    eps: tuple[tuple[int, Fraction], ...] = ()
    delta: tuple[tuple[int, Fraction], ...] = ()
    tau: Fraction = ZERO

    @staticmethod
    def make(
        eps: Mapping[int, Rational] = (),
        delta: Mapping[int, Rational] = (),
        tau: Rational = 0,
    ) -> "ClassicalWeight":
        def norm(pairs) -> tuple[tuple[int, Fraction], ...]:
            items = dict(pairs.items() if isinstance(pairs, Mapping) else pairs)
            return tuple(
                (i, Fraction(items[i])) for i in sorted(items) if Fraction(items[i]) != 0
            )

        return ClassicalWeight(norm(eps), norm(delta), Fraction(tau))

    def eps_coeff(self, i: int) -> Fraction:
        return dict(self.eps).get(i, ZERO)

    def delta_coeff(self, j: int) -> Fraction:
        return dict(self.delta).get(j, ZERO)

    def add(self, other: "ClassicalWeight") -> "ClassicalWeight":
        eps = dict(self.eps)
        for i, c in other.eps:
            eps[i] = eps.get(i, ZERO) + c
        delta = dict(self.delta)
        for j, c in other.delta:
            delta[j] = delta.get(j, ZERO) + c
        return ClassicalWeight.make(eps, delta, self.tau + other.tau)

    def __str__(self):
        parts = []
        for i, c in self.eps:
            parts.append(_coeff_str(c, f"e[{i}]"))
        for j, c in self.delta:
            parts.append(_coeff_str(c, f"f[{j}]"))
        if self.tau:
            parts.append(_coeff_str(self.tau, "tau"))
        if not parts:
            return "0"
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out


def _coeff_str(coeff: Fraction, symbol: str) -> str:
    if coeff == 1:
        return symbol
    if coeff == -1:
        return "-" + symbol
    return f"{coeff}*{symbol}"


def signature_for_hom(hom: Hom, a: Rank, b: Rank) -> AlgebraSignature:
    """The kernel signature each homomorphism lands in, for ranks (a, b)."""
    if hom is Hom.PHI:
        return weyl(a, b)
    if hom in (Hom.PSI, Hom.THETA):
        return clifford(a, b)
    if hom is Hom.UPSILON_PLUS:
        return weyl(a, b)
    return weyl(b, a)


def f_linear(mu: Weight | RootVector, hom: Hom) -> ClassicalWeight:
    """The linear index renaming underlying the weight correspondence.

    For the orthosymplectic maps the positive side renames to epsilon for
    Clifford targets and to delta for Weyl targets; the Upsilon maps use
    the gl conventions (plus: z_i -> eps_i, z_{-j} -> delta_j; minus the
    mirror).
    """
    pairs = mu.entries if isinstance(mu, RootVector) else mu.entries
    eps: dict[int, Fraction] = {}
    delta: dict[int, Fraction] = {}
    for i, raw in pairs:
        value = Fraction(raw)
        if hom in (Hom.PSI, Hom.THETA):
            target, key = (eps, i) if i > 0 else (delta, -i)
        elif hom is Hom.PHI:
            target, key = (delta, i) if i > 0 else (eps, -i)
        elif hom is Hom.UPSILON_PLUS:
            target, key = (eps, i) if i > 0 else (delta, -i)
        else:  # UPSILON_MINUS
            target, key = (delta, i) if i > 0 else (eps, -i)
        target[key] = target.get(key, ZERO) + value
    return ClassicalWeight.make(eps, delta)


def f_correspondence(mu: Weight, hom: Hom, a: Rank = INFINITE, b: Rank = INFINITE) -> ClassicalWeight:
    """Affine weight correspondence induced by the homomorphism ``hom``.

    For PHI/PSI/THETA the image is the linear renaming of ``mu`` shifted by
    ``-tau``; the shift is what makes the correspondence compatible with
    adding lattice vectors.  For the Upsilon maps the correspondence is
    plain linear.  Requires ``mu`` to be a weight of the matching signature
    (finitely supported relative to zero tails).
    """
    sig = signature_for_hom(hom, a, b)
    if not is_in_h_vee(mu, sig):
        raise SignatureError(f"{mu} is not a weight of {sig}")
    if not mu.is_finitely_supported():
        raise SignatureError("weight correspondence needs zero tails; truncate first")
    linear = f_linear(mu, hom)
    if hom in (Hom.UPSILON_PLUS, Hom.UPSILON_MINUS):
        return linear
    return ClassicalWeight.make(dict(linear.eps), dict(linear.delta), Fraction(-1))
