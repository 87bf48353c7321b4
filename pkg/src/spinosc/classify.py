"""Executable classification results: reflections, twins, and support formulas.

This module turns the structural statements about bounded weight modules
into finite computations: odd-reflection traces for highest weight
patterns, the even/odd twin decomposition of Clifford-type modules, the
weight formula for symmetric powers of the sl(n|n) natural module with its
brute-force check, integrability and faithfulness tests for degree-zero
modules, hook-length dimension counts, and the fixed lists of bounded
primitive ideals.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ModuleError, RootError, SignatureError
from .modules import (
    Acting,
    Box,
    BoxedSupport,
    ExplicitModule,
    ModuleKind,
    realize,
    support_box,
)
from .roots import Root, RootFamily, RootSystemDescriptor, form_pairing
from .weights import (
    INFINITE,
    AlgebraKind,
    AlgebraSignature,
    ClassicalWeight,
    Hom,
    Weight,
    f_linear,
    is_in_h_vee,
    same_block,
    weight_parity,
    weyl,
)

ZERO = Fraction(0)
HALF = Fraction(1, 2)


# -- odd reflections ----------------------------------------------------------


class Typicality(Enum):
    TYPICAL = "typical"
    ATYPICAL = "atypical"


@dataclass(frozen=True)
class BorelChain:
    reflections: tuple[Root, ...]


@dataclass(frozen=True)
class ReflectionStep:
    weight: ClassicalWeight
    root: Root | None
    typicality: Typicality | None


def odd_reflect(
    lam: ClassicalWeight, alpha: Root, rs: RootSystemDescriptor
) -> tuple[ClassicalWeight, Typicality]:
    """One odd reflection of a highest weight.

    Typical when the weight pairs nontrivially with the root (the weight
    shifts by -alpha); atypical otherwise (nothing moves).  Only odd
    isotropic roots are admissible; the non-isotropic odd roots of the odd
    orthosymplectic family are rejected.
    """
    if lam.tau != 0:
        raise RootError("highest weights must not carry a tau tail")
    if not rs.is_root(alpha):
        raise RootError(f"{alpha} is not a root")
    if not rs.is_odd(alpha):
        raise RootError(f"{alpha} is not odd")
    if not rs.is_isotropic(alpha):
        raise RootError(f"{alpha} is not isotropic")
    if form_pairing(lam, alpha) == 0:
        return lam, Typicality.ATYPICAL
    shifted = lam.add(alpha.neg().to_classical())
    return shifted, Typicality.TYPICAL


def reflect_chain(
    lam: ClassicalWeight, chain: BorelChain | Sequence[Root], rs: RootSystemDescriptor
) -> list[ReflectionStep]:
    """Sequential odd reflections; the full trace starts with the input."""
    roots = chain.reflections if isinstance(chain, BorelChain) else tuple(chain)
    trace = [ReflectionStep(lam, None, None)]
    current = lam
    for alpha in roots:
        current, typ = odd_reflect(current, alpha, rs)
        trace.append(ReflectionStep(current, alpha, typ))
    return trace


def typical_count(trace: Iterable[ReflectionStep]) -> int:
    return sum(1 for step in trace if step.typicality is Typicality.TYPICAL)


# -- bounded highest-weight patterns -------------------------------------------


class IdealClass(Enum):
    AUGMENTATION = "augmentation"
    DEFINING_ANNIHILATOR = "defining-annihilator"
    SPINOR_OSCILLATOR_KERNEL = "spinor-oscillator-kernel"
    OTHER = "other"


@dataclass(frozen=True)
class HwClassification:
    ideal: IdealClass
    note: str | None = None


def classify_bounded_hw(lam: ClassicalWeight, rs: RootSystemDescriptor) -> HwClassification:
    """Pattern-match a highest weight against the bounded-ideal shapes.

    The decidable output of the case analysis: zero weight, defining
    weight, or one of the half-sum spinor-oscillator shapes; anything else
    is OTHER.  The shape with one delta-coordinate lowered to -3/2 requires
    the even family; for the odd family it is reported as OTHER with a
    note.
    """
    if rs.family not in (RootFamily.OSP_EVEN, RootFamily.OSP_ODD):
        raise RootError("bounded highest-weight patterns are stated for osp")
    if lam.tau != 0:
        raise RootError("highest weights must not carry a tau tail")
    for i, _ in lam.eps:
        if not 1 <= i <= rs.rank_eps:
            raise RootError(f"eps index {i} outside rank {rs.rank_eps}")
    for j, _ in lam.delta:
        if not 1 <= j <= rs.rank_delta:
            raise RootError(f"delta index {j} outside rank {rs.rank_delta}")
    eps_vals = [lam.eps_coeff(i) for i in range(1, rs.rank_eps + 1)]
    delta_vals = [lam.delta_coeff(j) for j in range(1, rs.rank_delta + 1)]
    nonzero = [v for v in eps_vals + delta_vals if v]
    if not nonzero:
        return HwClassification(IdealClass.AUGMENTATION)
    if len(nonzero) == 1 and abs(nonzero[0]) == 1:
        return HwClassification(IdealClass.DEFINING_ANNIHILATOR)
    if all(v == HALF for v in eps_vals):
        deltas = sorted(delta_vals)
        n = rs.rank_delta
        if deltas == [-HALF] * n:
            return HwClassification(IdealClass.SPINOR_OSCILLATOR_KERNEL)
        if n >= 1 and deltas == [Fraction(-3, 2)] + [-HALF] * (n - 1):
            if rs.family is RootFamily.OSP_EVEN:
                return HwClassification(IdealClass.SPINOR_OSCILLATOR_KERNEL)
            return HwClassification(
                IdealClass.OTHER,
                note="half-sum shape with a -3/2 delta entry needs the even family",
            )
    return HwClassification(IdealClass.OTHER)


# -- twin decomposition --------------------------------------------------------


class Side(Enum):
    SPINOR = "spinor"
    OSCILLATOR = "oscillator"


@dataclass(frozen=True)
class SideClass:
    """One tensor factor of a twin decomposition.

    ``base`` is a reference support weight of the factor (positive-index
    part for the spinor side, negative-index part for the oscillator side).
    ``parity_bit`` is the common degree parity of the deviations from the
    reference, or None when the factor is not halved (then the class is its
    own twin).
    """

    side: Side
    signature: AlgebraSignature
    base: Weight
    parity_bit: int | None


def twin_of(part_class: SideClass) -> SideClass:
    if part_class.parity_bit is None:
        return part_class
    return SideClass(
        part_class.side,
        part_class.signature,
        part_class.base,
        part_class.parity_bit ^ 1,
    )


@dataclass(frozen=True)
class SpinorOscillatorDescriptor:
    s_class: SideClass
    t_class: SideClass
    s_twin_class: SideClass
    t_twin_class: SideClass
    s_support: frozenset[Weight]
    t_support: frozenset[Weight]
    s_twin_support: frozenset[Weight]
    t_twin_support: frozenset[Weight]


def _project_side(w: Weight, positive: bool) -> Weight:
    entries = {i: v for i, v in w.entries if (i > 0) == positive}
    if positive:
        return Weight.make(entries, pos_tail=w.pos_tail)
    return Weight.make(entries, neg_tail=w.neg_tail)


def _deviation_degree(w: Weight, ref: Weight) -> Fraction:
    return w.sub(ref).total()


def _side_class(
    members: frozenset[Weight], side: Side, sig: AlgebraSignature, full_each: frozenset[Weight]
) -> SideClass:
    """Build the side descriptor; halved iff the full projection is bigger."""
    ref = min(members, key=str)
    halved = members != full_each
    bit = 0 if halved else None
    side_sig = (
        AlgebraSignature(sig.kind, sig.pos_rank, 0)
        if side is Side.SPINOR
        else AlgebraSignature(sig.kind, 0, sig.neg_rank)
    )
    return SideClass(side, side_sig, ref, bit)


def decompose_even_odd(
    m: ExplicitModule, box: Box, trunc: int | None = None
) -> SpinorOscillatorDescriptor:
    """Split a Clifford-type module into its even/odd tensor factors.

    The boxed support is split by the Z2-parity of the weights (total
    degree parity when the parity functional is trivial, i.e. without
    negative indices), each half is projected to its positive and negative
    parts, and the projections must recover the half as a product set.
    """
    sig = m.signature
    if sig.kind is not AlgebraKind.CLIFFORD:
        raise ModuleError("twin decomposition is stated for Clifford signatures")
    supp = support_box(m, box, trunc)
    if not supp:
        raise ModuleError("empty boxed support")

    if sig.neg_rank == 0:
        functional = lambda w: int(w.total()) % 2
    else:
        functional = lambda w: weight_parity(w, sig)
    anchor = functional(min(supp, key=str))
    even = frozenset(w for w in supp if functional(w) == anchor)
    odd = frozenset(w for w in supp if functional(w) != anchor)

    def analyze(half: frozenset[Weight]):
        pairs = {(_project_side(w, True), _project_side(w, False)) for w in half}
        s_set = frozenset(p for p, _ in pairs)
        t_set = frozenset(q for _, q in pairs)
        if pairs != {(p, q) for p in s_set for q in t_set}:
            raise ModuleError("support is not a product of its side projections")
        return s_set, t_set

    s_set, t_set = analyze(even)
    full_s = frozenset(_project_side(w, True) for w in supp)
    full_t = frozenset(_project_side(w, False) for w in supp)
    s_class = _side_class(s_set, Side.SPINOR, sig, full_s)
    t_class = _side_class(t_set, Side.OSCILLATOR, sig, full_t)
    if odd:
        s2_set, t2_set = analyze(odd)
        s_twin = _side_class(s2_set, Side.SPINOR, sig, full_s)
        t_twin = _side_class(t2_set, Side.OSCILLATOR, sig, full_t)
    else:
        s2_set, t2_set = s_set, t_set
        s_twin, t_twin = twin_of(s_class), twin_of(t_class)
    return SpinorOscillatorDescriptor(
        s_class, t_class, s_twin, t_twin,
        frozenset(s_set), frozenset(t_set), frozenset(s2_set), frozenset(t2_set),
    )


# -- sl(inf|inf) support machinery ----------------------------------------------


def mu_from_pairs(
    pairs: Sequence[tuple[int, int]], n_max: int | None = None
) -> Weight:
    """The weight attached to a sequence of (power, parity-bit) pairs.

    In the minus-map convention the epsilon coordinates sit at negative
    indices and carry the bits; the delta coordinate at +i is the power
    increment minus the bit.
    """
    if n_max is None:
        n_max = len(pairs)
    if n_max > len(pairs):
        raise ModuleError(f"n_max {n_max} exceeds the {len(pairs)} pairs given")
    prev = 0
    prev_bit = None
    entries: dict[int, Fraction] = {}
    for idx in range(n_max):
        a, bit = pairs[idx]
        if not isinstance(a, int) or a <= 0:
            raise ModuleError("powers must be positive integers")
        if bit not in (0, 1):
            raise ModuleError("bits must be 0 or 1")
        if a < prev:
            raise ModuleError("powers must be nondecreasing")
        if a == prev and prev_bit is not None and bit != prev_bit:
            raise ModuleError("equal consecutive powers must share their bit")
        entries[-(idx + 1)] = Fraction(bit)
        entries[idx + 1] = Fraction(a - prev - bit)
        prev, prev_bit = a, bit
    return Weight.make(entries)


def symmetric_power_weights(a: int, b: int, n: int) -> set[ClassicalWeight]:
    """Weights of the b-twisted a-th symmetric power of the sl(n|n) natural module.

    Monomials of total degree ``a`` in n commuting delta-variables and n
    anticommuting eps-variables; the parity twist does not move weights.
    """
    out = set()
    for fermions in itertools.chain.from_iterable(
        itertools.combinations(range(1, n + 1), k) for k in range(0, min(a, n) + 1)
    ):
        remaining = a - len(fermions)
        for split in itertools.combinations(range(remaining + n - 1), n - 1):
            degrees = []
            prev = -1
            for cut in split + (remaining + n - 1,):
                degrees.append(cut - prev - 1)
                prev = cut
            out.add(
                ClassicalWeight.make(
                    {i: 1 for i in fermions},
                    {j + 1: degrees[j] for j in range(n) if degrees[j]},
                )
            )
    return out


def schur_power_support_check(
    pairs: Sequence[tuple[int, int]], n: int, box_radius: int = 3
) -> bool:
    """Does the realized degree-zero module reproduce the symmetric-power support?

    Compares the brute-force monomial weights of the twisted symmetric power
    with the image of the realized Y-module support under the minus-map
    renaming, both restricted to the same coordinate box.
    """
    if n > len(pairs):
        raise ModuleError("need at least n pairs")
    mu = mu_from_pairs(pairs, n)
    a_n, b_n = pairs[n - 1]
    sig = weyl(n, n)
    module = realize(ModuleKind.Y_MODULE, mu, sig)
    box = (-box_radius, box_radius)
    realized = {
        _classical_key(f_linear(w, Hom.UPSILON_MINUS))
        for w in support_box(module, box)
    }
    brute = {
        _classical_key(w)
        for w in symmetric_power_weights(a_n, b_n, n)
        if all(abs(c) <= box_radius for _, c in list(w.eps) + list(w.delta))
    }
    return realized == brute


def _classical_key(w: ClassicalWeight):
    return (w.eps, w.delta)


# -- integrability and faithfulness ---------------------------------------------


def is_integrable_y(mu: Weight, sig: AlgebraSignature) -> bool:
    """All bosonic coordinates in Z>=0, or all in Z<0 (tails included)."""
    if sig.kind is not AlgebraKind.WEYL:
        raise SignatureError("integrability criterion is stated for Weyl signatures")
    if not is_in_h_vee(mu, sig):
        raise ModuleError(f"{mu} is not a weight of {sig}")
    values = [v for i, v in mu.entries if i > 0] + [mu.pos_tail]
    nonneg = all(v.denominator == 1 and v >= 0 for v in values)
    negative = all(v.denominator == 1 and v < 0 for v in values)
    return nonneg or negative


def is_faithful_y(mu: Weight, sig: AlgebraSignature) -> bool:
    """Faithfulness of the degree-zero module at doubly infinite rank.

    The module is faithful exactly when some bosonic coordinate takes
    infinitely many values over the support.  That happens when a bosonic
    coordinate can drift with an unlimited compensation budget: a
    non-integral or negative-integer coordinate drifts downward against the
    infinitely many nonnegative lines, and a positive bosonic tail or an
    occupied fermionic tail provides unlimited upward budget.  Otherwise
    the nonnegative coordinates are capped by the finite deviation budget.
    """
    if sig.kind is not AlgebraKind.WEYL or sig.daggered:
        raise SignatureError("faithfulness criterion is stated for plain Weyl signatures")
    if sig.pos_rank is not INFINITE or sig.neg_rank is not INFINITE:
        raise SignatureError("faithfulness criterion needs both ranks infinite")
    if not is_in_h_vee(mu, sig):
        raise ModuleError(f"{mu} is not a weight of {sig}")
    bosonic = [v for i, v in mu.entries if i > 0] + [mu.pos_tail]
    if any(v.denominator != 1 for v in bosonic):
        return True
    if any(v < 0 for v in bosonic):
        return True
    if mu.pos_tail > 0:
        return True
    if mu.neg_tail == 1:
        return True
    return False


# -- support-based isomorphism ---------------------------------------------------


class IsoVerdict(Enum):
    ISOMORPHIC_UP_TO_PI = "isomorphic-up-to-parity"
    NOT_ISOMORPHIC = "not-isomorphic"
    INCONCLUSIVE_BOX = "inconclusive-box"


def modules_isomorphic_by_support(
    supp1: BoxedSupport, supp2: BoxedSupport
) -> IsoVerdict:
    """Compare two boxed supports as isomorphism evidence.

    Equality over a saturating box pins the module up to a parity change;
    any difference separates the modules outright; equality over a
    non-saturating box stays inconclusive.
    """
    if supp1.box != supp2.box:
        raise ModuleError("supports were computed over different boxes")
    if supp1.weights != supp2.weights:
        return IsoVerdict.NOT_ISOMORPHIC
    if supp1.saturating and supp2.saturating:
        return IsoVerdict.ISOMORPHIC_UP_TO_PI
    return IsoVerdict.INCONCLUSIVE_BOX


# -- hook lengths ----------------------------------------------------------------


def schur_degree(partition: Sequence[int]) -> int:
    """Number of standard Young tableaux of the given shape (hook lengths)."""
    shape = list(partition)
    if not shape or any(not isinstance(p, int) or p <= 0 for p in shape):
        raise ModuleError("partition entries must be positive integers")
    if any(shape[k] < shape[k + 1] for k in range(len(shape) - 1)):
        raise ModuleError("partition must be nonincreasing")
    n = sum(shape)
    conjugate = [sum(1 for row in shape if row > j) for j in range(shape[0])]
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j) + (conjugate[j] - i) - 1
    assert math.factorial(n) % hooks == 0
    return math.factorial(n) // hooks


# -- bounded primitive ideals ------------------------------------------------------


class IdealFamily(Enum):
    SL_INF = "sl-inf"
    OSP_INF_EVEN = "osp-inf-even"
    OSP_INF_ODD = "osp-inf-odd"


@dataclass(frozen=True)
class IdealDescriptor:
    name: str
    construction: str
    hom: Hom | None = None


_SL_IDEALS = (
    IdealDescriptor("ann-schur-natural", "annihilator of a Schur power of the natural module"),
    IdealDescriptor("ann-schur-conatural", "annihilator of a Schur power of the conatural module"),
    IdealDescriptor("ker-upsilon-plus", "kernel of the plus map onto the degree-zero subalgebra", Hom.UPSILON_PLUS),
    IdealDescriptor("ker-upsilon-minus", "kernel of the minus map onto the degree-zero subalgebra", Hom.UPSILON_MINUS),
)

_OSP_EVEN_IDEALS = (
    IdealDescriptor("augmentation", "augmentation ideal"),
    IdealDescriptor("ann-natural", "annihilator of the natural module"),
    IdealDescriptor("ker-psi", "kernel of the map onto the even Clifford subalgebra", Hom.PSI),
)

_OSP_ODD_IDEALS = (
    IdealDescriptor("augmentation", "augmentation ideal"),
    IdealDescriptor("ann-natural", "annihilator of the natural module"),
    IdealDescriptor("ker-theta", "kernel of the map onto the Clifford algebra", Hom.THETA),
)


def bounded_primitive_ideal_list(family: IdealFamily) -> tuple[IdealDescriptor, ...]:
    if family is IdealFamily.SL_INF:
        return _SL_IDEALS
    if family is IdealFamily.OSP_INF_EVEN:
        return _OSP_EVEN_IDEALS
    return _OSP_ODD_IDEALS


# -- parity obstruction -------------------------------------------------------------


def parity_ext_obstruction(mu: Weight, nu: Weight, flip_second: bool = True) -> bool:
    """Is an extension excluded by block or parity comparison?

    Extensions require the two weights to share a degree-zero block; within
    one block a parity flip on the second module makes every common weight
    space disagree in parity, so the extension is excluded exactly when the
    blocks are disjoint or the flip is present.
    """
    blocks_meet = same_block(mu, nu) and mu.sub(nu).total() == 0
    if not blocks_meet:
        return True
    return flip_second
