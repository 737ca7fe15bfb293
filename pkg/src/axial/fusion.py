"""Fusion laws: a finite value set with a symmetric set-valued product,
containment, zero-augmentation, and exhaustive C2-grading search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations

from .errors import AxialError, FieldMismatchError
from .scalars import FieldTag, Scalar, sort_key


def _cell_key(lam, mu):
    return (lam, mu) if sort_key(lam) <= sort_key(mu) else (mu, lam)


class FusionLaw:
    """(values, star): star maps unordered value pairs to subsets of values.

    table: {(lam, mu): iterable of Scalars}; missing cells are empty. The
    table is symmetrized on construction and membership is validated.
    """

    def __init__(self, values, table, tag=None):
        values = tuple(sorted(set(values), key=sort_key))
        if not values:
            raise AxialError("fusion law needs at least one value")
        if tag is None:
            tag = values[0].tag
        for v in values:
            if v.tag is not tag:
                raise FieldMismatchError("fusion-law value from a different field")
        vset = set(values)
        canon = {}
        for (lam, mu), cell in table.items():
            if lam not in vset or mu not in vset:
                raise AxialError(f"cell index ({lam}, {mu}) outside the value set")
            cell = frozenset(cell)
            for v in cell:
                if v not in vset:
                    raise AxialError(f"cell entry {v} outside the value set")
            key = _cell_key(lam, mu)
            prev = canon.get(key)
            if prev is not None and prev != cell:
                raise AxialError(f"asymmetric cells for pair ({key[0]}, {key[1]})")
            canon[key] = cell
        self.values = values
        self.tag = tag
        self.table = {k: c for k, c in canon.items() if c}

    def star(self, lam, mu):
        return self.table.get(_cell_key(lam, mu), frozenset())

    def value_set(self):
        return frozenset(self.values)

    def has_value(self, v):
        return v in self.value_set()

    def __eq__(self, other):
        if not isinstance(other, FusionLaw):
            return NotImplemented
        return self.values == other.values and self.table == other.table

    def __hash__(self):
        return hash((self.values, frozenset(self.table.items())))

    def cells(self):
        """All cells, including empty ones, keyed by sorted value pairs."""
        out = {}
        for a in range(len(self.values)):
            for b in range(a, len(self.values)):
                key = (self.values[a], self.values[b])
                out[key] = self.table.get(key, frozenset())
        return out

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"FusionLaw({{{vals}}}, {len(self.table)} nonempty cells)"


def law_contains(small, big):
    """True iff small's values and every star cell sit inside big's."""
    if not small.value_set() <= big.value_set():
        return False
    return all(cell <= big.star(*key) for key, cell in small.table.items())


def augment_with_zero(law, mode="empty_row"):
    """Adjoin 0 to the value set.

    mode 'empty_row': new cells involving 0 are empty.
    mode 'absorbed': new cells involving 0 are {0}.
    A law already containing 0 is returned unchanged.
    """
    zero = Scalar.zero(law.tag)
    if law.has_value(zero):
        return law
    if mode not in ("empty_row", "absorbed"):
        raise AxialError(f"unknown augmentation mode {mode!r}")
    values = law.values + (zero,)
    table = dict(law.table)
    if mode == "absorbed":
        for v in values:
            table[_cell_key(zero, v)] = frozenset({zero})
    return FusionLaw(values, table, law.tag)


@dataclass(frozen=True)
class C2Grading:
    plus: frozenset
    minus: frozenset
    sigma0: int | None  # sign of 0 when 0 is a law value, else None

    def sign(self, v):
        if v in self.plus:
            return 1
        if v in self.minus:
            return -1
        raise AxialError(f"value {v} not covered by the grading")


def grading_is_valid(law, plus, minus):
    for key, cell in law.table.items():
        lam, mu = key
        s = 1 if lam in plus else -1
        t = 1 if mu in plus else -1
        part = plus if s * t == 1 else minus
        if not cell <= part:
            return False
    return True


def find_c2_gradings(law, size_cap=16):
    """All sign partitions with 1 in the plus part satisfying
    star(F_s, F_t) subset of F_{st}."""
    if len(law.values) > size_cap:
        raise AxialError(f"value set larger than the search cap {size_cap}")
    one = Scalar.one(law.tag)
    zero = Scalar.zero(law.tag)
    rest = [v for v in law.values if v != one]
    out = []
    for r in range(len(rest) + 1):
        for combo in combinations(rest, r):
            minus = frozenset(combo)
            plus = frozenset(v for v in law.values if v not in minus)
            if one not in plus:
                continue
            if grading_is_valid(law, plus, minus):
                sigma0 = None
                if law.has_value(zero):
                    sigma0 = 1 if zero in plus else -1
                out.append(C2Grading(plus, minus, sigma0))
    return out


# ---------------------------------------------------------------------------
# canonical small laws

def _q(a, b=1, tag=FieldTag.QQ):
    return Scalar.rational(a, b, tag)


def jordan_half_law(tag=FieldTag.QQ):
    """The law on {1, 0, 1/2} obeyed by Jordan-algebra idempotents."""
    one, zero, half = _q(1, tag=tag), _q(0, tag=tag), _q(1, 2, tag)
    table = {
        (one, one): {one},
        (one, half): {half},
        (zero, zero): {zero},
        (zero, half): {half},
        (half, half): {one, zero},
    }
    return FusionLaw((one, zero, half), table, tag)


def monster_law(tag=FieldTag.QQ):
    """The law on {1, 0, 2, 1/2} of the four-dimensional highly symmetric
    example: 2*2={1,0}, 2*1/2={1/2}, 1/2*1/2={1,0,2}, 0*2={2}, 0*1/2={1/2},
    0*0={0}, plus unit rows."""
    one, zero, two, half = _q(1, tag=tag), _q(0, tag=tag), _q(2, tag=tag), _q(1, 2, tag)
    table = {
        (one, one): {one},
        (one, two): {two},
        (one, half): {half},
        (zero, zero): {zero},
        (zero, two): {two},
        (zero, half): {half},
        (two, two): {one, zero},
        (two, half): {half},
        (half, half): {one, zero, two},
    }
    return FusionLaw((one, zero, two, half), table, tag)
