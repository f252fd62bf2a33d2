"""Constructive maps that realize the descent-table recurrences.

``theta_A``/``psi_A`` pair a permutation with a marked position against a
one-smaller permutation with a marked grid point, via single-square deletion
and insertion.  For involutions the transfers must respect the grid's mirror
symmetry, so squares move as a symmetric off-diagonal pair (``xi``) or as a
rising/falling adjacent pair astride the main diagonal (``eta``,
``eta_prime``); the piecewise maps ``theta_I``/``psi_I`` (involutions) and
``theta_J``/``psi_J`` (fixed-point-free involutions) dispatch on the local
shape of the grid around the marked position.

Every output element is classified into a labelled subset (B1..B5 families
for involutions, D1..D5 for the fixed-point-free case, with finer sub-labels
such as "B3_1" or "D5_2").  Classification is always recomputed from the grid
itself (delta types, diagonal contacts of the traced paths), never assumed
from the branch that produced the element; the exhaustive round-trip tests
rely on that independence.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvariantError
from .grid import DType, GridPoint, Square, delete, dtype, insert
from .perm import Permutation, iter_fixed_point_free_involutions, iter_involutions
from .paths import trace_paths

B_FAMILIES = ("B1", "B2", "B3", "B4", "B5")
D_FAMILIES = ("D1", "D2", "D3", "D4", "D5")

# Family of an element of the involution map, keyed by how much smaller the
# output is (size shift, descent shift) relative to the input.
_B_FAMILY_BY_SHIFT = {
    (1, 0): "B1",
    (1, 1): "B2",
    (2, 0): "B3",
    (2, 1): "B4",
    (2, 2): "B5",
}

_MIXED = (DType(0, 1), DType(1, 0))


@dataclass(frozen=True)
class TaggedElement:
    """A smaller permutation with a marked grid point, labelled by the subset
    it belongs to.  ``tag`` distinguishes the two copies of a doubled diagonal
    element (D3/D5 families only)."""

    sigma: Permutation
    point: GridPoint
    family: str
    subset: str
    tag: int | None = None

    @property
    def target_nk(self) -> tuple[int, int]:
        return (self.sigma.n, self.sigma.des)

    def to_json_obj(self) -> dict:
        return {
            "perm": str(self.sigma),
            "point": [self.point.row, self.point.col],
            "family": self.family,
            "subset": self.subset,
            "tag": self.tag,
            "target_nk": list(self.target_nk),
        }


@dataclass(frozen=True)
class ThetaTrace:
    """One application of a piecewise theta map: input, branch, output."""

    source: Permutation
    position: int
    case: str
    element: TaggedElement

    def to_json_obj(self) -> dict:
        el = self.element
        return {
            "input_perm": str(self.source),
            "i": self.position,
            "case": self.case,
            "output_perm": str(el.sigma),
            "point": [el.point.row, el.point.col],
            "tag": el.tag,
            "subset": el.subset,
            "target_nk": list(el.target_nk),
        }


def chi(i: int, j: int) -> int:
    """Marked row of the permutation produced by a symmetric pair insertion
    at the off-diagonal point (i, j).

    >>> chi(1, 3), chi(3, 1)
    (1, 4)
    """
    if i == j:
        raise ValueError("chi is undefined on the diagonal")
    return i if i < j else i + 1


# ---------------------------------------------------------------------------
# Single-square transfer on all permutations
# ---------------------------------------------------------------------------


def theta_A(pi: Permutation, k: int) -> tuple[Permutation, GridPoint]:
    """Remove the square in row k and remember where it sat.

    >>> sigma, pt = theta_A(Permutation.parse("3751642"), 3)
    >>> str(sigma), tuple(pt)
    ('3,6,1,5,4,2', (3, 5))
    """
    if pi.n < 2:
        raise ValueError("theta_A needs size >= 2")
    value = pi(k)
    return delete(pi, Square(k, value)), GridPoint(k, value)


def psi_A(sigma: Permutation, point: tuple[int, int]) -> tuple[Permutation, int]:
    """Inverse of :func:`theta_A`: insert at the marked point, mark its row."""
    pt = GridPoint(*point)
    return insert(sigma, pt), pt.row


# ---------------------------------------------------------------------------
# Symmetry-preserving double insertions and deletions
# ---------------------------------------------------------------------------


def _require_involution(pi: Permutation, who: str) -> None:
    if not pi.is_involution():
        raise ValueError(f"{who} needs an involution, got {pi}")


def xi(pi: Permutation, point: tuple[int, int]) -> Permutation:
    """Insert a mirror pair of squares at grid points (i, j) and (j, i).

    Symmetric in the two coordinates; the result has the new squares at
    <a, b+1> and <b+1, a> where a < b are the sorted coordinates, and its
    descent count grows by p + q where (p, q) is the delta type of the point.

    >>> str(xi(Permutation.parse("132"), GridPoint(1, 3)))
    '4,2,5,1,3'
    """
    _require_involution(pi, "xi")
    i, j = point
    if i == j:
        raise ValueError("xi needs an off-diagonal point")
    a, b = min(i, j), max(i, j)
    if not (1 <= a and b <= pi.n + 1):
        raise ValueError(f"grid point ({i}, {j}) outside [1, {pi.n + 1}]^2")
    # Second insertion lands one row lower because the first added row a <= b.
    return insert(insert(pi, GridPoint(a, b)), GridPoint(b + 1, a))


def xi_inv(sigma: Permutation, point: tuple[int, int]) -> Permutation:
    """Delete the mirror pair of squares that :func:`xi` creates at ``point``."""
    _require_involution(sigma, "xi_inv")
    i, j = point
    if i == j:
        raise ValueError("xi_inv needs an off-diagonal point")
    a, b = min(i, j), max(i, j)
    if not (b + 1 <= sigma.n and sigma(a) == b + 1 and sigma(b + 1) == a):
        raise ValueError(f"squares <{a}, {b + 1}> and <{b + 1}, {a}> are not filled")
    smaller = delete(sigma, Square(b + 1, a))
    return delete(smaller, Square(a, b))


def eta(pi: Permutation, i: int) -> Permutation:
    """Insert a rising adjacent pair of squares centred at diagonal point (i, i).

    >>> str(eta(Permutation.parse("213"), 2))
    '4,2,3,1,5'
    """
    _require_involution(pi, "eta")
    if not 1 <= i <= pi.n + 1:
        raise ValueError(f"diagonal index {i} out of range 1..{pi.n + 1}")
    return insert(insert(pi, GridPoint(i, i)), GridPoint(i + 1, i + 1))


def eta_prime(pi: Permutation, i: int) -> Permutation:
    """Insert a falling adjacent pair centred at diagonal point (i, i).

    >>> str(eta_prime(Permutation.parse("213"), 4))
    '2,1,3,5,4'
    """
    _require_involution(pi, "eta_prime")
    if not 1 <= i <= pi.n + 1:
        raise ValueError(f"diagonal index {i} out of range 1..{pi.n + 1}")
    return insert(insert(pi, GridPoint(i, i)), GridPoint(i + 1, i))


def eta_inv(sigma: Permutation, i: int) -> Permutation:
    """Delete the rising pair <i, i>, <i+1, i+1>; inverse of :func:`eta`."""
    _require_involution(sigma, "eta_inv")
    if not (1 <= i < sigma.n and sigma(i) == i and sigma(i + 1) == i + 1):
        raise ValueError(f"no rising pair at <{i}, {i}>, <{i + 1}, {i + 1}>")
    return delete(delete(sigma, Square(i + 1, i + 1)), Square(i, i))


def eta_prime_inv(sigma: Permutation, i: int) -> Permutation:
    """Delete the falling pair <i, i+1>, <i+1, i>; inverse of :func:`eta_prime`."""
    _require_involution(sigma, "eta_prime_inv")
    if not (1 <= i < sigma.n and sigma(i) == i + 1 and sigma(i + 1) == i):
        raise ValueError(f"no falling pair at <{i}, {i + 1}>, <{i + 1}, {i}>")
    return delete(delete(sigma, Square(i + 1, i)), Square(i, i))


# ---------------------------------------------------------------------------
# Subset classification (predicate-based, independent of the theta branches)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _diagonal_contacts(
    word: tuple[int, ...],
) -> tuple[frozenset[GridPoint], tuple[tuple[GridPoint, str], ...]]:
    """Diagonal contact marks of the horizontal paths of an involution grid.

    Returns the set of last diagonal points of the kind-0 paths, and, for each
    kind-1 path, its first contact with either the diagonal itself ("B2_2")
    or a filled diagonal square ("B2_1", met at the square's lower-left
    corner).
    """
    if not word:
        return frozenset(), ()
    ps = trace_paths(Permutation(word))
    last_touch = set()
    for path in ps.h0:
        diag = [p for p in path.points if p.row == p.col]
        if diag:
            last_touch.add(diag[-1])
    first_contact: dict[GridPoint, str] = {}
    for path in ps.h1:
        for p in path.points:
            if p.row == p.col:
                first_contact[p] = "B2_2"
                break
            if p.row == p.col + 1 and word[p.col - 1] == p.col:
                first_contact[p] = "B2_1"
                break
    return frozenset(last_touch), tuple(sorted(first_contact.items()))


def _side(point: GridPoint) -> str:
    return "1" if point.row < point.col else "2"


def _classify_b(sigma: Permutation, point: GridPoint, family: str) -> str:
    """Sub-label of ``(sigma, point)`` within the given family, validating the
    family's defining predicate along the way."""
    r, c = point
    if family == "B1":
        last, _ = _diagonal_contacts(sigma.word)
        if point not in last:
            raise InvariantError(f"{point} is not a last diagonal touch in {sigma}")
        return "B1"
    if family == "B2":
        _, contacts = _diagonal_contacts(sigma.word)
        label = dict(contacts).get(point)
        if label is None:
            raise InvariantError(f"{point} is not a first diagonal contact in {sigma}")
        return label
    d = dtype(sigma, point)
    if family == "B3":
        if d != DType(0, 0):
            raise InvariantError(f"{point} has delta {tuple(d)} in {sigma}, not (0,0)")
        return "B4_3" if r == c else f"B3_{_side(point)}"
    if family == "B4":
        if r == c:
            if d == DType(0, 0):
                return "B4_3"
            if d == DType(1, 1):
                return "B5_3"
            raise InvariantError(f"asymmetric delta {tuple(d)} on the diagonal of {sigma}")
        if d in _MIXED:
            return f"B4_{_side(point)}"
        raise InvariantError(f"{point} has delta {tuple(d)} in {sigma}, not mixed")
    if family == "B5":
        if d != DType(1, 1):
            raise InvariantError(f"{point} has delta {tuple(d)} in {sigma}, not (1,1)")
        return "B5_3" if r == c else f"B5_{_side(point)}"
    raise ValueError(f"unknown family {family!r}")


def _classify_d(sigma: Permutation, point: GridPoint, tag: int | None, family: str) -> str:
    r, c = point
    d = dtype(sigma, point)
    if family in ("D3", "D5"):
        if tag not in (1, 2):
            raise InvariantError(f"doubled family {family} element lacks a tag")
        want = DType(0, 0) if family == "D3" else DType(1, 1)
        if r != c or d != want:
            raise InvariantError(
                f"{point} with delta {tuple(d)} in {sigma} is not a diagonal {tuple(want)} point"
            )
        return f"{family}_{tag}"
    if tag is not None:
        raise InvariantError(f"off-diagonal family {family} element carries a tag")
    if family == "D1":
        if r == c or d != DType(0, 0):
            raise InvariantError(f"{point} is not an off-diagonal (0,0) point of {sigma}")
    elif family == "D2":
        if d not in _MIXED:
            raise InvariantError(f"{point} has delta {tuple(d)} in {sigma}, not mixed")
    elif family == "D4":
        if r == c or d != DType(1, 1):
            raise InvariantError(f"{point} is not an off-diagonal (1,1) point of {sigma}")
    else:
        raise ValueError(f"unknown family {family!r}")
    return f"{family}_{_side(point)}"


# ---------------------------------------------------------------------------
# Piecewise maps for involutions
# ---------------------------------------------------------------------------


def theta_I(pi: Permutation, i: int) -> ThetaTrace:
    """Strip the marked position i out of an involution, producing a smaller
    involution with a marked grid point (plus its subset label)."""
    _require_involution(pi, "theta_I")
    n = pi.n
    if n < 3:
        raise ValueError("theta_I needs size >= 3")
    v = pi(i)
    if v > i + 1:
        case = "far_above"
        sigma, point = xi_inv(pi, (i, v - 1)), GridPoint(i, v - 1)
    elif v < i - 1:
        case = "far_below"
        sigma, point = xi_inv(pi, (i - 1, v)), GridPoint(i - 1, v)
    elif v == i + 1:
        case = "adjacent_above"
        sigma, point = eta_prime_inv(pi, i), GridPoint(i, i)
    elif v == i - 1:
        case = "adjacent_below"
        sigma, point = delete(pi, Square(i, v)), GridPoint(i, v)
    elif i < n and pi(i + 1) == i + 1:
        case = "fixed_paired"
        sigma, point = eta_inv(pi, i), GridPoint(i, i)
    else:
        case = "fixed_isolated"
        sigma, point = delete(pi, Square(i, i)), GridPoint(i, i)

    shift = (n - sigma.n, pi.des - sigma.des)
    family = _B_FAMILY_BY_SHIFT.get(shift)
    if family is None:
        raise InvariantError(f"theta_I produced an impossible shift {shift} from ({pi}, {i})")
    subset = _classify_b(sigma, point, family)
    return ThetaTrace(pi, i, case, TaggedElement(sigma, point, family, subset))


def psi_I(element: TaggedElement) -> tuple[Permutation, int]:
    """Inverse of :func:`theta_I`; rejects elements that fail their subset
    predicate."""
    sigma, pt = element.sigma, element.point
    if _classify_b(sigma, pt, element.family) != element.subset:
        raise ValueError(f"element {element} does not satisfy its subset predicate")
    r, c = pt
    family = element.family
    if family in ("B1", "B2"):
        return insert(sigma, pt), r
    if r != c:
        return xi(sigma, pt), chi(r, c)
    if family == "B3":
        return eta(sigma, r), r
    if family == "B4":
        # Diagonal members of this family: a (1,1) point takes the rising
        # pair, a (0,0) point the falling pair; both add one descent.
        return (eta(sigma, r), r) if element.subset == "B5_3" else (eta_prime(sigma, r), r)
    if family == "B5":
        return eta_prime(sigma, r), r
    raise ValueError(f"unknown family {family!r}")


def build_B_sets(n: int, k: int) -> dict[str, tuple[TaggedElement, ...]]:
    """Materialize the five labelled collections over involutions of size n
    with k descents, in deterministic (lex, then point) order."""
    sets: dict[str, list[TaggedElement]] = {f: [] for f in B_FAMILIES}
    if k >= 0:
        for sigma in iter_involutions(n):
            if sigma.des != k:
                continue
            for element in _b_elements_single(sigma):
                sets[element.family].append(element)
            for element in _b_elements_double(sigma):
                sets[element.family].append(element)
    return {f: tuple(v) for f, v in sets.items()}


def _b_elements_single(sigma: Permutation) -> list[TaggedElement]:
    """B1/B2 elements contributed by one involution (single-square branches)."""
    last, contacts = _diagonal_contacts(sigma.word)
    out = [TaggedElement(sigma, pt, "B1", "B1") for pt in sorted(last)]
    out.extend(TaggedElement(sigma, pt, "B2", label) for pt, label in contacts)
    return out


def _b_elements_double(sigma: Permutation) -> list[TaggedElement]:
    """B3/B4/B5 elements contributed by one involution (pair branches)."""
    out = []
    n = sigma.n
    for r in range(1, n + 2):
        for c in range(1, n + 2):
            pt = GridPoint(r, c)
            d = dtype(sigma, pt)
            if d == DType(0, 0):
                out.append(TaggedElement(sigma, pt, "B3", "B4_3" if r == c else f"B3_{_side(pt)}"))
            if r == c:
                out.append(TaggedElement(sigma, pt, "B4", "B4_3" if d == DType(0, 0) else "B5_3"))
            elif d in _MIXED:
                out.append(TaggedElement(sigma, pt, "B4", f"B4_{_side(pt)}"))
            if d == DType(1, 1):
                out.append(TaggedElement(sigma, pt, "B5", "B5_3" if r == c else f"B5_{_side(pt)}"))
    return out


# ---------------------------------------------------------------------------
# Piecewise maps for fixed-point-free involutions
# ---------------------------------------------------------------------------


def theta_J(pi: Permutation, i: int) -> ThetaTrace:
    """Strip the marked position out of a fixed-point-free involution."""
    if not pi.is_fixed_point_free_involution():
        raise ValueError(f"theta_J needs a fixed-point-free involution, got {pi}")
    n = pi.n
    if n < 4:
        raise ValueError("theta_J needs size >= 4")
    v = pi(i)
    tag: int | None = None
    if v > i + 1:
        case = "far_above"
        sigma, point = xi_inv(pi, (i, v - 1)), GridPoint(i, v - 1)
    elif v < i - 1:
        case = "far_below"
        sigma, point = xi_inv(pi, (i - 1, v)), GridPoint(i - 1, v)
    elif v == i + 1:
        case = "adjacent_above"
        sigma, point, tag = eta_prime_inv(pi, i), GridPoint(i, i), 1
    else:  # v == i - 1; v == i is impossible without a fixed point
        case = "adjacent_below"
        sigma, point, tag = eta_prime_inv(pi, i - 1), GridPoint(i - 1, i - 1), 2

    diag = point.row == point.col
    shift = pi.des - sigma.des
    family = {0: "D1", 1: "D3" if diag else "D2", 2: "D5" if diag else "D4"}.get(shift)
    if family is None:
        raise InvariantError(f"theta_J produced an impossible descent shift {shift}")
    subset = _classify_d(sigma, point, tag, family)
    return ThetaTrace(pi, i, case, TaggedElement(sigma, point, family, subset, tag))


def psi_J(element: TaggedElement) -> tuple[Permutation, int]:
    """Inverse of :func:`theta_J`."""
    sigma, pt = element.sigma, element.point
    if _classify_d(sigma, pt, element.tag, element.family) != element.subset:
        raise ValueError(f"element {element} does not satisfy its subset predicate")
    if element.family in ("D1", "D2", "D4"):
        return xi(sigma, pt), chi(pt.row, pt.col)
    # Doubled diagonal elements: the two copies mark the two rows of the
    # inserted falling pair.
    position = pt.row if element.tag == 1 else pt.row + 1
    return eta_prime(sigma, pt.row), position


def build_D_sets(n: int, k: int) -> dict[str, tuple[TaggedElement, ...]]:
    """Materialize the five labelled collections over fixed-point-free
    involutions of size n with k descents (all empty for odd n)."""
    sets: dict[str, list[TaggedElement]] = {f: [] for f in D_FAMILIES}
    if k >= 0 and n % 2 == 0:
        for sigma in iter_fixed_point_free_involutions(n):
            if sigma.des != k:
                continue
            for element in _d_elements(sigma):
                sets[element.family].append(element)
    return {f: tuple(v) for f, v in sets.items()}


def _d_elements(sigma: Permutation) -> list[TaggedElement]:
    out = []
    n = sigma.n
    for r in range(1, n + 2):
        for c in range(1, n + 2):
            pt = GridPoint(r, c)
            d = dtype(sigma, pt)
            if r == c:
                family = "D3" if d == DType(0, 0) else "D5"
                out.append(TaggedElement(sigma, pt, family, f"{family}_1", 1))
                out.append(TaggedElement(sigma, pt, family, f"{family}_2", 2))
            elif d == DType(0, 0):
                out.append(TaggedElement(sigma, pt, "D1", f"D1_{_side(pt)}"))
            elif d in _MIXED:
                out.append(TaggedElement(sigma, pt, "D2", f"D2_{_side(pt)}"))
            else:
                out.append(TaggedElement(sigma, pt, "D4", f"D4_{_side(pt)}"))
    return out
