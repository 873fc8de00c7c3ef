"""Left ideals of a finite semigroup and their lattice structure.

Ideals are bitmasks over the carrier.  Triviality convention: an ideal
is trivial iff it is all of S, or {z} when S has a zero z; an
intersection is trivial iff it is empty or contained in {z}.  Without
the zero clause the disjointness of distinct minimal ideals fails, since
every left ideal of a semigroup with zero contains the zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .semigroup import CayleyTable, l_class_partition, principal_left_ideal_mask, zero_element

IDEAL_CLOSURE_CAP = 1 << 20


class IdealOverflowError(RuntimeError):
    """Raised when the union closure exceeds the configured cap."""


def mask_to_elements(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class LeftIdeal:
    elements: tuple[int, ...]
    mask: int
    is_trivial: bool
    is_minimal: bool
    is_maximal: bool

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def to_json_dict(self) -> dict:
        return {
            "elements": list(self.elements),
            "trivial": self.is_trivial,
            "minimal": self.is_minimal,
            "maximal": self.is_maximal,
        }


@dataclass(frozen=True)
class IdealFamily:
    """Every left ideal of one semigroup, with the derived index lists."""

    order: int
    zero: int | None
    all: tuple[LeftIdeal, ...]
    nontrivial: tuple[int, ...]
    minimal: tuple[int, ...]
    maximal: tuple[int, ...]
    union_of_minimals: int  # bitmask U, 0 when there are no minimal ideals
    s_equals_union: bool

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def zero_mask(self) -> int:
        return 0 if self.zero is None else 1 << self.zero

    def trivial_intersection(self, a: int, b: int) -> bool:
        return (a & b) & ~self.zero_mask == 0

    def minimal_masks(self) -> tuple[int, ...]:
        return tuple(self.all[i].mask for i in self.minimal)

    def contained_minimals(self, mask: int) -> frozenset[int]:
        """Indices (into self.minimal) of the minimal ideals inside mask."""
        return frozenset(
            k for k, i in enumerate(self.minimal) if self.all[i].mask & ~mask == 0
        )

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "order": self.order,
            "zero": self.zero,
            "ideals": [li.to_json_dict() for li in self.all],
            "nontrivial": list(self.nontrivial),
            "minimal": list(self.minimal),
            "maximal": list(self.maximal),
            "union_of_minimals": list(mask_to_elements(self.union_of_minimals)),
            "s_equals_union": self.s_equals_union,
        }


def is_left_ideal(table: CayleyTable, subset) -> bool:
    """Direct SI subseteq I check; the oracle for the closure construction."""
    if isinstance(subset, int):
        mask = subset
    else:
        mask = 0
        for x in subset:
            mask |= 1 << x
    if mask == 0:
        return False
    rows = table.rows
    n = table.order
    for x in range(n):
        if not mask >> x & 1:
            continue
        for s in range(n):
            if not mask >> rows[s][x] & 1:
                return False
    return True


def left_ideal_masks(table: CayleyTable, cap: int = IDEAL_CLOSURE_CAP) -> list[int]:
    """All left ideals as bitmasks: principal ideals closed under union."""
    principals = sorted({principal_left_ideal_mask(table, a) for a in range(table.order)})
    ideals = set(principals)
    frontier = list(principals)
    while frontier:
        nxt = []
        for m in frontier:
            for p in principals:
                u = m | p
                if u not in ideals:
                    ideals.add(u)
                    nxt.append(u)
                    if len(ideals) > cap:
                        raise IdealOverflowError(
                            f"more than {cap} left ideals; raise the cap to proceed"
                        )
        frontier = nxt
    return sorted(ideals)


def all_left_ideals(table: CayleyTable, cap: int = IDEAL_CLOSURE_CAP) -> IdealFamily:
    n = table.order
    full = (1 << n) - 1
    zero = zero_element(table)
    zmask = 0 if zero is None else 1 << zero

    masks = left_ideal_masks(table, cap=cap)

    def trivial(m: int) -> bool:
        return m == full or (zero is not None and m == zmask)

    nontrivial_masks = [m for m in masks if not trivial(m)]
    # canonical order: by size then by sorted element list
    nontrivial_masks.sort(key=lambda m: (m.bit_count(), mask_to_elements(m)))
    trivial_masks = sorted(
        (m for m in masks if trivial(m)),
        key=lambda m: (m.bit_count(), mask_to_elements(m)),
    )
    ordered = nontrivial_masks + trivial_masks

    nt = nontrivial_masks
    minimal = [
        m for m in nt if not any(o != m and o & ~m == 0 for o in nt)
    ]
    maximal = [
        m for m in nt if not any(o != m and m & ~o == 0 for o in nt)
    ]
    u = 0
    for m in minimal:
        u |= m

    minimal_set = set(minimal)
    maximal_set = set(maximal)
    ideals = []
    index_of = {}
    for i, m in enumerate(ordered):
        index_of[m] = i
        ideals.append(
            LeftIdeal(
                elements=mask_to_elements(m),
                mask=m,
                is_trivial=trivial(m),
                is_minimal=m in minimal_set,
                is_maximal=m in maximal_set,
            )
        )
    return IdealFamily(
        order=n,
        zero=zero,
        all=tuple(ideals),
        nontrivial=tuple(index_of[m] for m in nontrivial_masks),
        minimal=tuple(index_of[m] for m in minimal),
        maximal=tuple(index_of[m] for m in maximal),
        union_of_minimals=u,
        s_equals_union=bool(minimal) and u == full,
    )


def maximality_via_lclass(table: CayleyTable, ideal_mask: int) -> bool:
    """A nontrivial left ideal is maximal iff its complement is one L-class."""
    n = table.order
    full = (1 << n) - 1
    comp = full & ~ideal_mask
    part = l_class_partition(table)
    for block in part.classes:
        bm = 0
        for x in block:
            bm |= 1 << x
        if bm == comp:
            return True
    return False


@dataclass(frozen=True)
class ChromaticBoundData:
    """The vertex partition behind the coloring upper bound.

    x1 holds the vertices containing the union U of all minimal ideals,
    x2 those strictly inside U, x3 the rest; rho groups x3 by the set of
    minimal ideals contained in the vertex.
    """

    x1: tuple[int, ...]
    x2: tuple[int, ...]
    x3: tuple[int, ...]
    rho_classes: tuple[tuple[int, ...], ...]
    m: int
    n_min: int
    bound: int


def chromatic_bound_data(family: IdealFamily) -> ChromaticBoundData:
    if not family.minimal:
        raise ValueError("chromatic bound needs at least one minimal ideal")
    u = family.union_of_minimals
    x1, x2, x3 = [], [], []
    for i in family.nontrivial:
        m = family.all[i].mask
        if u & ~m == 0:
            x1.append(i)
        elif m & ~u == 0 and m != u:
            x2.append(i)
        else:
            x3.append(i)
    by_minset: dict[frozenset[int], list[int]] = {}
    for i in x3:
        by_minset.setdefault(family.contained_minimals(family.all[i].mask), []).append(i)
    rho = tuple(tuple(cls) for cls in by_minset.values())
    m = max((len(c) for c in rho), default=0)
    n = len(family.minimal)
    half = (1 << (n - 1)) - 1
    return ChromaticBoundData(
        x1=tuple(x1),
        x2=tuple(x2),
        x3=tuple(x3),
        rho_classes=rho,
        m=m,
        n_min=n,
        bound=len(x1) + half + half * m,
    )
