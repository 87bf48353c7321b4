"""Concrete multiplicity-free weight modules and their structure theory.

Every module here has one-dimensional weight spaces indexed by weights of
the algebra, with closed-form generator actions:

* bosonic raising sends v(w) to v(w + z_i) when the target stays inside the
  module, bosonic lowering multiplies by the coordinate w_i;
* fermionic raising/lowering move within {0, 1} and carry the exterior sign
  that counts occupied fermionic slots below the index;
* in a Clifford algebra the bosonic generators additionally pick up the
  total fermionic parity, because there the two sides anticommute.

The supported kinds are the defining module (the polynomial or exterior
model), the indecomposable F-module covering a whole block, the simple
X-module supported on one equivalence class, the Y-module for the
degree-zero subalgebra, and restrictions to index-two sublattices.  A
brute-force induced-module oracle recomputes the X-module supports by
exact linear algebra, independently of the closed forms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Iterator

import networkx as nx

from .algebra import (
    AlgebraElement,
    Subalgebra,
    gradings,
    multiply,
    subalgebra_member,
    u_element,
)
from .errors import ModuleError, SignatureError, TruncationError
from .linalg import SparseEchelon, scalar_ratio
from .weights import (
    INFINITE,
    AlgebraKind,
    AlgebraSignature,
    Rational,
    RootVector,
    Weight,
    approx_equiv,
    approx_equiv_zero,
    is_in_h_vee,
    same_block,
    weight_difference,
    weight_parity,
)

ZERO = Fraction(0)


class Domain(Enum):
    """Per-coordinate shape of a support class."""

    NONNEG_INT_LINE = "nonneg"
    NEG_INT_LINE = "neg"
    FULL_SHIFT_LINE = "shift"
    FERMION_01 = "fermion"
    FROZEN = "frozen"


def _canonical_coordinate(value: Fraction, fermionic: bool, tail: Fraction) -> Fraction:
    if fermionic:
        return tail  # both values of a fermionic slot lie in one class
    if value.denominator == 1:
        return ZERO if value >= 0 else Fraction(-1)
    return value - (value.numerator // value.denominator)


def class_representative(mu: Weight, sig: AlgebraSignature) -> Weight:
    """The canonical member of the equivalence class of ``mu``.

    Integral bosonic coordinates collapse to 0 or -1 by sign, non-integral
    ones to their fractional part, fermionic ones to the tail value.  Two
    weights are equivalent exactly when their representatives coincide.
    """
    entries = {}
    for i, value in mu.entries:
        entries[i] = _canonical_coordinate(value, sig.is_fermionic_index(i), ZERO)
    return Weight.make(entries, mu.pos_tail, mu.neg_tail)


@dataclass(frozen=True)
class ClassDescriptor:
    """One equivalence class of weights, named by its canonical member."""

    signature: AlgebraSignature
    base: Weight

    @staticmethod
    def of(mu: Weight, sig: AlgebraSignature) -> "ClassDescriptor":
        if not is_in_h_vee(mu, sig):
            raise ModuleError(f"{mu} is not a weight of {sig}")
        return ClassDescriptor(sig, class_representative(mu, sig))

    def contains(self, candidate: Weight) -> bool:
        return is_in_h_vee(candidate, self.signature) and approx_equiv(
            candidate, self.base, self.signature
        )

    def coordinate_domain(self, index: int) -> Domain:
        if self.signature.is_fermionic_index(index):
            return Domain.FERMION_01
        value = self.base[index]
        if value.denominator != 1:
            return Domain.FULL_SHIFT_LINE
        return Domain.NONNEG_INT_LINE if value >= 0 else Domain.NEG_INT_LINE

    def domains(self) -> dict[str, str]:
        """Serialized per-coordinate view, including the two tails."""
        out = {}
        for i, _ in self.base.entries:
            out[str(i)] = self.coordinate_domain(i).value
        pos_fermionic = self.signature.fermionic_side > 0
        out["pos_tail"] = (
            Domain.FERMION_01 if pos_fermionic else _tail_domain(self.base.pos_tail)
        ).value
        out["neg_tail"] = (
            Domain.FERMION_01 if not pos_fermionic else _tail_domain(self.base.neg_tail)
        ).value
        return out

    def sort_key(self):
        return (str(self.signature), self.base.entries, self.base.pos_tail, self.base.neg_tail)


def _tail_domain(tail: Fraction) -> Domain:
    if tail.denominator != 1:
        return Domain.FULL_SHIFT_LINE
    return Domain.NONNEG_INT_LINE if tail >= 0 else Domain.NEG_INT_LINE


class ModuleKind(Enum):
    DEFINING = "defining"
    F_MODULE = "f"
    X_MODULE = "x"
    Y_MODULE = "y"
    RESTRICTED = "restricted"


class Acting(Enum):
    A = "a"
    A0 = "a0"
    AEV = "aev"
    A0BAR = "a0bar"


_ACTING_TO_SUBALGEBRA = {
    Acting.A0: Subalgebra.A0,
    Acting.AEV: Subalgebra.AEV,
    Acting.A0BAR: Subalgebra.A0BAR,
}


class SublatticeTag(Enum):
    DEGREE = "degree"    # total Z-degree mod 2; fixed by A_ev
    PARITY = "parity"    # Z2-parity of the step; fixed by A_0bar


@dataclass(frozen=True)
class ExplicitModule:
    """A multiplicity-free weight module with closed-form action."""

    kind: ModuleKind
    signature: AlgebraSignature
    base: Weight
    acting: Acting = Acting.A
    parity_flip: bool = False
    restriction: tuple[SublatticeTag, Weight] | None = None
    parent: "ExplicitModule | None" = None

    def membership(self, candidate: Weight) -> bool:
        if not is_in_h_vee(candidate, self.signature):
            return False
        if self.kind is ModuleKind.RESTRICTED:
            tag, anchor = self.restriction
            if not self.parent.membership(candidate):
                return False
            step = weight_difference(candidate, anchor)
            if step is None:
                return False
            if tag is SublatticeTag.DEGREE:
                return step.total() % 2 == 0
            return step.parity() == 0
        if weight_difference(candidate, self.base) is None:
            return False
        if self.kind is ModuleKind.F_MODULE:
            return True
        if self.kind in (ModuleKind.DEFINING, ModuleKind.X_MODULE):
            return approx_equiv(candidate, self.base, self.signature)
        # Y-module: class intersected with the degree-zero coset
        return (
            approx_equiv(candidate, self.base, self.signature)
            and candidate.sub(self.base).total() == 0
        )

    def weight_space_parity(self, candidate: Weight) -> int:
        return (weight_parity(candidate, self.signature) + int(self.parity_flip)) % 2

    def support_class(self) -> ClassDescriptor:
        return ClassDescriptor.of(self.base, self.signature)

    def flipped(self) -> "ExplicitModule":
        return replace(self, parity_flip=not self.parity_flip)


def realize(
    kind: ModuleKind,
    mu: Weight | None,
    sig: AlgebraSignature,
    acting: Acting | None = None,
) -> ExplicitModule:
    """Construct the module of the given kind anchored at ``mu``."""
    if kind is ModuleKind.DEFINING:
        mu = Weight.make({})
    if mu is None:
        raise ModuleError("a base weight is required")
    if not is_in_h_vee(mu, sig):
        raise ModuleError(f"{mu} is not a weight of {sig}")
    if kind is ModuleKind.RESTRICTED:
        raise ModuleError("use restrict_to_sublattice for restricted modules")
    if acting is None:
        acting = Acting.A0 if kind is ModuleKind.Y_MODULE else Acting.A
    if kind is ModuleKind.Y_MODULE and acting is not Acting.A0:
        raise ModuleError("Y-modules live over the degree-zero subalgebra")
    return ExplicitModule(kind, sig, mu, acting)


def restrict_to_sublattice(
    m: ExplicitModule, tag: SublatticeTag, anchor: Weight
) -> ExplicitModule:
    """The index-two restriction of ``m`` to one coset of a sublattice."""
    if tag is SublatticeTag.PARITY and m.signature.neg_rank == 0:
        raise ModuleError("parity functional is trivial without negative indices")
    if not m.membership(anchor):
        raise ModuleError(f"coset anchor {anchor} does not meet the support")
    acting = Acting.AEV if tag is SublatticeTag.DEGREE else Acting.A0BAR
    return ExplicitModule(
        ModuleKind.RESTRICTED,
        m.signature,
        anchor,
        acting,
        m.parity_flip,
        (tag, anchor),
        m,
    )


# -- the action --------------------------------------------------------------


class WeightVector:
    """A finite rational combination of weight-space basis vectors."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Weight, Fraction] | None = None):
        self.terms: dict[Weight, Fraction] = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[w] = c

    @staticmethod
    def basis(w: Weight) -> "WeightVector":
        return WeightVector({w: Fraction(1)})

    def add(self, other: "WeightVector") -> "WeightVector":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, ZERO) + c
        return WeightVector(out)

    def sub(self, other: "WeightVector") -> "WeightVector":
        return self.add(other.scale(-1))

    def scale(self, value: Rational) -> "WeightVector":
        c = Fraction(value)
        return WeightVector({w: v * c for w, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, WeightVector):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*v{w}" for w, c in sorted(self.terms.items(), key=lambda t: str(t[0])))


def _fermionic_deviation_count(w: Weight, sig: AlgebraSignature) -> int:
    return sum(1 for i, _ in w.entries if sig.is_fermionic_index(i))


def _exterior_sign(w: Weight, sig: AlgebraSignature, index: int) -> int:
    """Sign counting occupied fermionic slots strictly below ``index``.

    Occupation is measured as deviation from the fermionic tail, which makes
    the sign well defined for tail-one weights of infinite rank as well.
    """
    count = 0
    for j, _ in w.entries:
        if j < index and sig.is_fermionic_index(j):
            count += 1
    return -1 if count % 2 else 1


def _apply_generator(
    m: ExplicitModule, lowering: bool, index: int, vec: WeightVector
) -> WeightVector:
    sig = m.signature
    fermionic = sig.is_fermionic_index(index)
    clifford_boson = sig.kind is AlgebraKind.CLIFFORD and not fermionic
    out: dict[Weight, Fraction] = {}
    for w, coeff in vec.terms.items():
        value = w[index]
        if fermionic:
            if lowering:
                if value != 1:
                    continue
                target = w.shift(index, -1)
                scalar = Fraction(_exterior_sign(w, sig, index))
            else:
                if value != 0:
                    continue
                target = w.shift(index, 1)
                scalar = Fraction(_exterior_sign(w, sig, index))
        else:
            if lowering:
                if value == 0:
                    continue
                target = w.shift(index, -1)
                scalar = value
            else:
                target = w.shift(index, 1)
                scalar = Fraction(1)
            if clifford_boson and _fermionic_deviation_count(w, sig) % 2:
                scalar = -scalar
        if not m.membership(target):
            continue
        out[target] = out.get(target, ZERO) + coeff * scalar
        if not out[target]:
            del out[target]
    return WeightVector(out)


def act(e: AlgebraElement, v: WeightVector, m: ExplicitModule) -> WeightVector:
    """Apply an algebra element to a vector of the module."""
    if e.signature != m.signature:
        raise SignatureError(f"element of {e.signature} acting on module over {m.signature}")
    sub = _ACTING_TO_SUBALGEBRA.get(m.acting)
    if sub is not None and not subalgebra_member(e, sub):
        raise ModuleError(f"element is outside the acting subalgebra {m.acting.value}")
    for w in v.terms:
        if not m.membership(w):
            raise ModuleError(f"vector at {w} is outside the module")
    result = WeightVector()
    for (raising, lower), coeff in e.terms.items():
        current = v.scale(coeff)
        factors: list[tuple[bool, int]] = []
        for i, exp in raising:
            factors.extend((False, i) for _ in range(exp))
        for i, exp in lower:
            factors.extend((True, i) for _ in range(exp))
        for lowering_flag, index in reversed(factors):
            if current.is_zero():
                break
            current = _apply_generator(m, lowering_flag, index, current)
        result = result.add(current)
    return result


# -- support enumeration ------------------------------------------------------

Box = tuple[int, int]


def _active_indices(sig: AlgebraSignature, trunc: int | None) -> list[int]:
    if sig.pos_rank is INFINITE or sig.neg_rank is INFINITE:
        if trunc is None:
            raise TruncationError("infinite rank: pass a truncation radius")
        pos = trunc if sig.pos_rank is INFINITE else min(sig.pos_rank, trunc)
        neg = trunc if sig.neg_rank is INFINITE else min(sig.neg_rank, trunc)
    else:
        pos, neg = sig.pos_rank, sig.neg_rank
    return [i for i in range(-neg, pos + 1) if i != 0]


def _coordinate_candidates(
    m: ExplicitModule, index: int, box: Box
) -> list[Fraction]:
    lo, hi = Fraction(box[0]), Fraction(box[1])
    sig = m.signature
    if sig.is_fermionic_index(index):
        return [v for v in (ZERO, Fraction(1)) if lo <= v <= hi]
    base = m.base[index]
    frac = base - (base.numerator // base.denominator)
    first = lo + ((frac - lo) % 1)
    out = []
    value = first
    while value <= hi:
        out.append(value)
        value += 1
    return out


def support_box(
    m: ExplicitModule, box: Box, trunc: int | None = None
) -> set[Weight]:
    """All support weights whose in-range coordinates lie inside the box."""
    indices = _active_indices(m.signature, trunc)
    candidate_lists = [_coordinate_candidates(m, i, box) for i in indices]
    out = set()
    for combo in itertools.product(*candidate_lists):
        entries = dict(m.base.entries)
        for i, value in zip(indices, combo):
            entries[i] = value
        w = Weight.make(entries, m.base.pos_tail, m.base.neg_tail)
        if m.membership(w):
            out.add(w)
    return out


@dataclass(frozen=True)
class BoxedSupport:
    """A support computed inside a box, tagged with saturation information."""

    weights: frozenset[Weight]
    box: Box
    saturating: bool


def boxed_support(m: ExplicitModule, box: Box, trunc: int | None = None) -> BoxedSupport:
    weights = frozenset(support_box(m, box, trunc))
    lo, hi = box
    margin = all(
        lo + 1 <= value <= hi - 1
        for w in (m.base,)
        for _, value in w.entries
    )
    return BoxedSupport(weights, box, margin and lo < 0 < hi)


# -- relation harness ---------------------------------------------------------


def _generating_elements(sig: AlgebraSignature, acting: Acting) -> list[AlgebraElement]:
    singles = []
    for i in sig.indices():
        singles.append(AlgebraElement.raising(sig, i))
        singles.append(AlgebraElement.lowering(sig, i))
    if acting is Acting.A:
        return singles
    pairs = []
    for g, h in itertools.product(singles, repeat=2):
        prod = multiply(g, h)
        if prod.is_zero():
            continue
        sub = _ACTING_TO_SUBALGEBRA[acting]
        if subalgebra_member(prod, sub):
            pairs.append(prod)
    return pairs


@dataclass
class RelationFailure:
    left: str
    right: str
    weight: Weight
    discrepancy: str


@dataclass
class RelationReport:
    module: str
    vectors_checked: int = 0
    pairs_checked: int = 0
    failures: list[RelationFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_module_relations(
    m: ExplicitModule,
    box: Box,
    trunc: int | None = None,
    max_vectors: int | None = None,
) -> RelationReport:
    """Check that the closed-form action satisfies the algebra relations.

    For all pairs p, q from a generating set of the acting algebra and every
    (sampled) basis vector v in the box: act(p, act(q, v)) must equal
    act(p * q, v).  With p, q single generators this contains every defining
    relation, and it is exactly the associativity of the action, so one
    sweep pins down all sign conventions.
    """
    report = RelationReport(module=f"{m.kind.value} over {m.signature}")
    weights = sorted(support_box(m, box, trunc), key=str)
    if max_vectors is not None and len(weights) > max_vectors:
        step = len(weights) / max_vectors
        weights = [weights[int(k * step)] for k in range(max_vectors)]
    generators = _generating_elements(m.signature, m.acting)
    products = {}
    for a, b in itertools.product(range(len(generators)), repeat=2):
        products[(a, b)] = multiply(generators[a], generators[b])
    for w in weights:
        report.vectors_checked += 1
        v = WeightVector.basis(w)
        images = [act(g, v, m) for g in generators]
        for (a, b), prod in products.items():
            report.pairs_checked += 1
            sequential = act(generators[a], images[b], m)
            direct = act(prod, v, m)
            if sequential != direct:
                report.failures.append(
                    RelationFailure(
                        str(generators[a]), str(generators[b]), w,
                        f"{sequential!r} != {direct!r}",
                    )
                )
    return report


# -- induced-module oracle ----------------------------------------------------


def _monomials_of_weight(
    sig: AlgebraSignature, beta: RootVector, max_length: int
) -> list[tuple]:
    """Normal monomial keys with adjoint weight ``beta`` and bounded length."""
    indices = list(sig.indices())
    base_r = {i: max(beta[i], 0) for i in indices}
    base_l = {i: max(-beta[i], 0) for i in indices}
    floor_length = sum(base_r.values()) + sum(base_l.values())
    if floor_length > max_length:
        return []
    if any(
        sig.is_fermionic_index(i) and (base_r[i] > 1 or base_l[i] > 1)
        for i in indices
    ):
        return []
    budget = (max_length - floor_length) // 2
    slack_caps = []
    for i in indices:
        if sig.is_fermionic_index(i):
            cap = 1 - max(base_r[i], base_l[i])
        else:
            cap = budget
        slack_caps.append(cap)
    out = []
    for slack in itertools.product(*(range(c + 1) for c in slack_caps)):
        if sum(slack) > budget:
            continue
        raising = tuple(
            (i, base_r[i] + s) for i, s in zip(indices, slack) if base_r[i] + s
        )
        lowering = tuple(
            (i, base_l[i] + s) for i, s in zip(indices, slack) if base_l[i] + s
        )
        raising = tuple(sorted(raising))
        lowering = tuple(sorted(lowering))
        out.append((raising, lowering))
    return out


def _element_from_key(sig: AlgebraSignature, key: tuple) -> AlgebraElement:
    return AlgebraElement(sig, {key: Fraction(1)})


def induced_oracle(
    mu: Weight, sig: AlgebraSignature, degree_cap: int
) -> dict[Weight, int]:
    """Brute-force weight-space dimensions of the simple module at ``mu``.

    Builds the induced module from the weight-``mu`` character, computing
    each weight space as the span of monomials modulo the right-module
    relations m*u_i = mu_i * m, then quotients by the largest submodule
    missing ``mu`` (computed as a reachability closure over the nonzero
    single-generator maps).  This is the independent check of the
    closed-form realizations.
    """
    if sig.pos_rank is INFINITE or sig.neg_rank is INFINITE:
        raise TruncationError("the oracle needs finite ranks")
    if not is_in_h_vee(mu, sig):
        raise ModuleError(f"{mu} is not a weight of {sig}")
    indices = list(sig.indices())
    max_length = degree_cap + 6

    betas = []
    spans = range(-degree_cap, degree_cap + 1)
    for combo in itertools.product(spans, repeat=len(indices)):
        if sum(abs(c) for c in combo) <= degree_cap:
            betas.append(RootVector.make(dict(zip(indices, combo))))

    echelons: dict[RootVector, SparseEchelon] = {}
    reps: dict[RootVector, dict] = {}
    for beta in betas:
        monomials = _monomials_of_weight(sig, beta, max_length)
        echelon = SparseEchelon()
        for key in monomials:
            if sum(e for _, e in key[0]) + sum(e for _, e in key[1]) > max_length - 2:
                continue
            element = _element_from_key(sig, key)
            for i in indices:
                shifted = multiply(element, u_element(sig, i))
                relation = dict(shifted.terms)
                relation[key] = relation.get(key, ZERO) - mu[i]
                echelon.insert(relation)
        echelons[beta] = echelon
        base_key = (
            tuple((i, beta[i]) for i in sorted(indices) if beta[i] > 0),
            tuple((i, -beta[i]) for i in sorted(indices) if beta[i] < 0),
        )
        residue = echelon.reduce({base_key: Fraction(1)})
        if residue:
            reps[beta] = residue

    # nonzero single-generator maps between the one-dimensional spaces
    graph = nx.DiGraph()
    graph.add_nodes_from(reps)
    for beta, residue in reps.items():
        for i in indices:
            for lowering in (False, True):
                step = RootVector.make({i: -1 if lowering else 1})
                target = RootVector.make(
                    {j: beta[j] + step[j] for j in indices}
                )
                if target not in reps:
                    continue
                gen = (
                    AlgebraElement.lowering(sig, i)
                    if lowering
                    else AlgebraElement.raising(sig, i)
                )
                moved: dict = {}
                for key, coeff in residue.items():
                    product = multiply(gen, _element_from_key(sig, key))
                    for pkey, pc in product.terms.items():
                        moved[pkey] = moved.get(pkey, ZERO) + coeff * pc
                image = echelons[target].reduce(moved)
                ratio = scalar_ratio(image, reps[target])
                if ratio:
                    graph.add_edge(beta, target)

    zero = RootVector.make({})
    reachable = {zero}
    if zero in graph:
        reversed_graph = graph.reverse(copy=False)
        reachable |= set(nx.descendants(reversed_graph, zero))

    out: dict[Weight, int] = {}
    for beta in betas:
        w = mu.add_root(beta)
        dim = 1 if (beta in reps and beta in reachable) else 0
        out[w] = dim
    return out


# -- socle and condensation ---------------------------------------------------


def socle_class(f: ExplicitModule) -> ClassDescriptor:
    """The class generating the simple socle of an F-module.

    Integral bosonic coordinates flatten to zero; fermionic and non-integral
    coordinates stay.  Stated for Weyl signatures, where the F-module is the
    shifted Laurent model.
    """
    if f.kind is not ModuleKind.F_MODULE:
        raise ModuleError("socle_class expects an F-module")
    if f.signature.kind is not AlgebraKind.WEYL:
        raise ModuleError("socle_class is stated for Weyl signatures")
    mu = f.base
    entries = {}
    for i, value in mu.entries:
        if i < 0 or value.denominator != 1:
            entries[i] = value
    pos_tail = mu.pos_tail if mu.pos_tail.denominator != 1 else ZERO
    tilde = Weight.make(entries, pos_tail, mu.neg_tail)
    return ClassDescriptor.of(tilde, f.signature)


def block_classes(f: ExplicitModule) -> list[ClassDescriptor]:
    """All equivalence classes inside the block of an F-module (finite rank)."""
    sig = f.signature
    if sig.pos_rank is INFINITE or sig.neg_rank is INFINITE:
        raise TruncationError("class enumeration needs finite ranks")
    bosonic = [i for i in sig.indices() if not sig.is_fermionic_index(i)]
    integral = [i for i in bosonic if f.base[i].denominator == 1]
    out = []
    for signs in itertools.product((ZERO, Fraction(-1)), repeat=len(integral)):
        rep = class_representative(f.base, sig)
        entries = dict(rep.entries)
        for i, s in zip(integral, signs):
            entries[i] = s
        out.append(ClassDescriptor.of(Weight.make(entries, rep.pos_tail, rep.neg_tail), sig))
    return sorted(set(out), key=lambda c: c.sort_key())


def class_action_graph(f: ExplicitModule) -> nx.DiGraph:
    """Directed graph of nontrivial generator crossings between classes.

    Within an F-module the only cross-class moves are bosonic raisings over
    the -1 -> 0 boundary; the graph is built by acting on each class's
    boundary weights and recording where the images land.
    """
    classes = block_classes(f)
    by_base = {c.base: c for c in classes}
    graph = nx.DiGraph()
    graph.add_nodes_from(classes)
    sig = f.signature
    for c in classes:
        for i in sig.indices():
            for lowering in (False, True):
                vec = WeightVector.basis(c.base)
                image = _apply_generator(f, lowering, i, vec)
                for target_weight in image.terms:
                    target = ClassDescriptor.of(target_weight, sig)
                    if target != c and target in by_base.values():
                        graph.add_edge(c, target, generator=(lowering, i))
    return graph


def condensation_filtration(f: ExplicitModule) -> list[ClassDescriptor]:
    """Linearize the class graph into a filtration order, socle first.

    Every strongly connected component of the action graph should be a
    single class; the condensation is a DAG whose sinks are submodules, so a
    sinks-first topological order realizes a strict filtration with simple
    quotients.
    """
    if f.kind is not ModuleKind.F_MODULE:
        raise ModuleError("condensation_filtration expects an F-module")
    graph = class_action_graph(f)
    components = list(nx.strongly_connected_components(graph))
    for component in components:
        if len(component) != 1:
            raise ModuleError(f"classes unexpectedly merged: {component}")
    order = nx.lexicographical_topological_sort(
        graph.reverse(copy=True), key=lambda c: c.sort_key()
    )
    return list(order)


# -- block counting and isomorphism -------------------------------------------


def count_simples_in_block(
    gamma: Weight, sig: AlgebraSignature, truncation: int | None = None
) -> int | None:
    """Number of classes in the block of ``gamma``; None means infinite.

    Each integral bosonic coordinate contributes a factor two (two sign
    patterns); at infinite rank an integral bosonic tail makes the count
    infinite unless a truncation radius limits the enumerated coordinates.
    """
    if not is_in_h_vee(gamma, sig):
        raise ModuleError(f"{gamma} is not a weight of {sig}")
    bosonic_rank = sig.neg_rank if sig.fermionic_side > 0 else sig.pos_rank
    bosonic_sign = -1 if sig.fermionic_side > 0 else 1
    bosonic_tail = gamma.neg_tail if bosonic_sign < 0 else gamma.pos_tail
    if bosonic_rank is INFINITE and truncation is None:
        if bosonic_tail.denominator == 1:
            return None
        limit = max((abs(i) for i, _ in gamma.entries), default=0)
    else:
        limit = bosonic_rank if truncation is None else (
            truncation if bosonic_rank is INFINITE else min(bosonic_rank, truncation)
        )
    count = 1
    for magnitude in range(1, limit + 1):
        value = gamma[bosonic_sign * magnitude]
        if value.denominator == 1:
            count *= 2
    return count


def is_isomorphic(mu: Weight, nu: Weight, sig: AlgebraSignature) -> bool:
    """Whether the simple modules anchored at the two weights coincide."""
    return approx_equiv(mu, nu, sig)


def y_is_isomorphic(mu: Weight, nu: Weight, sig: AlgebraSignature) -> bool:
    return approx_equiv_zero(mu, nu, sig)


def is_preferred(m: ExplicitModule) -> bool:
    """A module is preferred when its parities agree with the fixed extension."""
    return not m.parity_flip
