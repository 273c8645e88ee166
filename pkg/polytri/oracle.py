"""
Brute force ground truth for the counting formulas. Points are labelled ``0 .. n-1`` counterclockwise on a convex
polygon, so two diagonals cross exactly when their endpoints interleave and no coordinates are ever needed. The side
subdivisions are recorded by a :class:`Layout`, which knows where the corners are and which points share a string.

+--------------------------------------+-------------------------------------------------------------------+
| function                             | purpose                                                           |
+======================================+===================================================================+
| :func:`.enumerate_convex`            | Every triangulation of the convex n-gon, once each.               |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.enumerate_legal`             | Every triangulation that avoids same-string diagonals.            |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.count_legal`                 | Counts legal triangulations, pruned or by post-filtering.         |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.classify`                    | T/D classification of a triangulation of a subdivided triangle.   |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.enumerate_fundamental_sets`  | Every fundamental set of a subdivided triangle.                   |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.bijection_forward`           | Triangulation to fundamental set.                                 |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.bijection_inverse`           | Fundamental set to triangulation through the block rules.         |
+--------------------------------------+-------------------------------------------------------------------+
| :func:`.triangulation_dump`          | JSON ready description of a triangulation.                        |
+--------------------------------------+-------------------------------------------------------------------+

"""
import enum
import itertools
import logging
from typing import NamedTuple, Optional, Any
from collections.abc import Callable, Iterator, Sequence

from polytri.counting import CrossCheckError, TriangleParams
from polytri.numeric import Count

# Set up the logger for the module
logging.basicConfig(
    level=logging.DEBUG,
    format="%(asctime)s %(levelname)s %(name)s [%(lineno)d] %(message)s "
)

# Get the logger
logger: logging.Logger = logging.getLogger("polytri.oracle")

Diagonal = tuple[int, int]
"""A chord between two boundary positions, smaller position first."""

MODES: tuple[str, ...] = ("prune", "filter")
"""Counting modes of :func:`count_legal`."""


class BoundaryLabel(NamedTuple):
    """Point ``position`` of string ``string``; position 0 is the corner the string starts at."""
    string: int
    position: int


class Triangulation(NamedTuple):
    """A set of n-3 pairwise non-crossing diagonals of the convex n-gon."""
    n: int
    diagonals: frozenset[Diagonal]


class TriClass(str, enum.Enum):
    """Triangulations of a subdivided triangle either have a central triangle or corner-side diagonals at A, B or C."""
    T = "T"
    D_A = "D_A"
    D_B = "D_B"
    D_C = "D_C"


class TriClassification(NamedTuple):
    """Result of :func:`classify`."""
    cls: TriClass
    ear_count: int
    has_central_triangle: bool


class FundamentalSet(NamedTuple):
    """
    Pairwise disjoint diagonals between interior points of different sides of a subdivided triangle.
    ``type_vector[i]`` counts the diagonals that separate corner i.
    """
    diagonals: frozenset[Diagonal]
    type_vector: tuple[int, int, int]


CORNER_CLASS: dict[int, TriClass] = {0: TriClass.D_B, 1: TriClass.D_C, 2: TriClass.D_A}
"""Corner 0 is B, corner 1 is C and corner 2 is A, so that side i carries the i-th of (a, b, c)."""


def _check_sides(func: str, sides: Sequence[int], min_sides: int) -> None:
    """Validate a list of per-side subdivision counts."""
    if not isinstance(sides, (list, tuple)) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in sides):
        logger.critical(func + " - Incorrect Input Type")
        raise TypeError("Sides Not A List Of Integers")

    if len(sides) < min_sides:
        logger.critical(func + " - Too Few Sides")
        raise ValueError("Too Few Sides")

    if min(sides) < 0:
        logger.critical(func + " - Negative Side")
        raise ValueError("Negative Subdivision Count")

    if len(sides) + sum(sides) < 3:
        logger.critical(func + " - Too Few Points")
        raise ValueError("Too Few Points")


class Layout:
    """
    A convex polygon whose i-th side carries ``sides[i]`` interior points. Corner i sits at position
    ``corners[i]`` and string i runs from corner i to corner i+1, both included.

    :ivar tuple[int, ...] sides: Interior points per side.
    :ivar int n: Number of boundary points.
    :ivar tuple[int, ...] corners: Corner positions.
    :ivar logging.Logger logger: The logger for this class.

    .. automethod:: __init__
    """
    def __init__(self, sides: Sequence[int]) -> None:
        """
        :raises TypeError: If sides is not a list of integers.
        :raises ValueError: If there are fewer than two sides or three points.
        :param Sequence[int] sides: Interior points per side, in counterclockwise order.
        """
        self.logger: logging.Logger = logging.getLogger("polytri.oracle.Layout")

        _check_sides("Layout", sides, 2)

        self.sides: tuple[int, ...] = tuple(sides)
        self.n: int = len(sides) + sum(sides)

        corners: list[int] = [0]
        for s in self.sides[:-1]:
            corners.append(corners[-1] + s + 1)
        self.corners: tuple[int, ...] = tuple(corners)

        # The strings through each point; a corner lies on two strings.
        self._strings: list[frozenset[int]] = []
        k: int = len(self.sides)
        p: int
        for p in range(self.n):
            i: int = max(idx for idx, c in enumerate(self.corners) if c <= p)
            if p == self.corners[i]:
                self._strings.append(frozenset({i, (i - 1) % k}))
            else:
                self._strings.append(frozenset({i}))

        self._legal: list[list[bool]] = [
            [self._is_legal(p, q) for q in range(self.n)] for p in range(self.n)
        ]

    def __repr__(self) -> str:
        return f"Layout(sides={list(self.sides)})"

    def adjacent(self, p: int, q: int) -> bool:
        """Whether p and q are neighbours on the boundary."""
        return (p - q) % self.n in (1, self.n - 1)

    def same_string(self, p: int, q: int) -> bool:
        """Whether p and q lie on a common string."""
        return bool(self._strings[p] & self._strings[q])

    def _is_legal(self, p: int, q: int) -> bool:
        return p != q and not self.adjacent(p, q) and not self.same_string(p, q)

    def legal(self, p: int, q: int) -> bool:
        """Whether pq is a diagonal that a legal triangulation may use."""
        return self._legal[p][q]

    def is_corner(self, p: int) -> bool:
        return len(self._strings[p]) == 2

    def interior_side(self, p: int) -> Optional[int]:
        """The side p is interior to, or None for a corner."""
        if self.is_corner(p):
            return None
        return next(iter(self._strings[p]))

    def position(self, string: int, j: int) -> int:
        """The position of point j of string ``string``; ``j = sides[string] + 1`` is the next corner."""
        return (self.corners[string % len(self.sides)] + j) % self.n

    def label(self, p: int) -> BoundaryLabel:
        """The canonical label of a position, the corner belonging to the string it starts."""
        i: int = max(idx for idx, c in enumerate(self.corners) if c <= p)
        return BoundaryLabel(i, p - self.corners[i])


def triangle_layout(params: TriangleParams) -> Layout:
    """Layout of :math:`\\Delta(a,b,c)`: B at 0, C at a+1, A at a+b+2."""
    params.validate(allow_empty=True)
    return Layout([params.a, params.b, params.c])


def balanced_layout(k: int, r: int) -> Layout:
    """k sides with r-1 interior points each."""
    return Layout([r - 1] * k)


def partial_sides(N: int, s: int, interleaved: bool = False) -> list[int]:
    """
    Sides of the polygon with N points of which s sides carry one point. By default the subdivided sides come first;
    ``interleaved`` spreads them out, which must not change the count.
    """
    k: int = N - s
    if not interleaved:
        return [1] * s + [0] * (k - s)

    sides: list[int] = [0] * k
    step: float = k / s if s else 0.0
    for idx in range(s):
        sides[int(idx * step)] = 1
    return sides


def _crosses(d: Diagonal, e: Diagonal) -> bool:
    """Chords of a convex polygon cross exactly when their endpoints interleave."""
    a, b = d
    c, f = e
    return a < c < b < f or c < a < f < b


def _triangulations(lo: int, hi: int, allowed: Callable[[int, int], bool]) -> Iterator[tuple[Diagonal, ...]]:
    """
    Triangulations of the sub-polygon ``lo .. hi`` below the edge (lo, hi). The apex of the triangle on that edge is
    tried in increasing order, which fixes the enumeration order.
    """
    if hi - lo < 2:
        yield ()
        return

    m: int
    for m in range(lo + 1, hi):
        if m - lo >= 2 and not allowed(lo, m):
            continue
        if hi - m >= 2 and not allowed(m, hi):
            continue
        own: tuple[Diagonal, ...] = tuple(d for d in ((lo, m), (m, hi)) if d[1] - d[0] >= 2)
        for left in _triangulations(lo, m, allowed):
            for right in _triangulations(m, hi, allowed):
                yield own + left + right


def enumerate_convex(n: int) -> Iterator[Triangulation]:
    """
    Yields each of the :math:`C_{n-2}` triangulations of the convex n-gon once, rooted at the edge (0, n-1).

    >>> from polytri.oracle import enumerate_convex
    >>> sum(1 for _ in enumerate_convex(6))
    14

    :raises ValueError: If n < 3.
    :param int n: Number of vertices.
    :rtype: Iterator[Triangulation]
    :return: A stream of triangulations.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        logger.critical("enumerate_convex - Incorrect Input Type")
        raise TypeError("n Not An Integer")

    if n < 3:
        logger.critical("enumerate_convex - Too Few Points")
        raise ValueError("Too Few Points")

    for diagonals in _triangulations(0, n - 1, lambda p, q: True):
        yield Triangulation(n, frozenset(diagonals))


def enumerate_legal(layout: Layout) -> Iterator[Triangulation]:
    """Triangulations that use no same-string diagonal, pruned during the recursion."""
    for diagonals in _triangulations(0, layout.n - 1, layout.legal):
        yield Triangulation(layout.n, frozenset(diagonals))


def _count_pruned(layout: Layout) -> Count:
    """Interval recursion over contiguous vertex ranges, counting without enumerating."""
    n: int = layout.n
    ways: list[list[int]] = [[0] * n for _ in range(n)]

    lo: int
    hi: int
    for length in range(1, n):
        for lo in range(n - length):
            hi = lo + length
            if length == 1:
                ways[lo][hi] = 1
                continue
            total: int = 0
            for m in range(lo + 1, hi):
                if m - lo >= 2 and not layout.legal(lo, m):
                    continue
                if hi - m >= 2 and not layout.legal(m, hi):
                    continue
                total += ways[lo][m] * ways[m][hi]
            ways[lo][hi] = total

    return ways[0][n - 1]


def _count_filtered(layout: Layout) -> Count:
    """Enumerates all convex triangulations and keeps those without an essentially forbidden diagonal."""
    n: int = layout.n
    count: int = 0
    seen: int = 0

    for triangulation in enumerate_convex(n):
        seen += 1
        if any(min(q - p, n - q + p) == 2 and layout.same_string(p, q) for p, q in triangulation.diagonals):
            continue

        # A survivor must not use a longer same-string diagonal either.
        if any(layout.same_string(p, q) for p, q in triangulation.diagonals):
            logger.critical("count_legal - Long Same String Diagonal Survived")
            raise CrossCheckError("Same string diagonal survived the distance two filter")
        count += 1

    logger.debug(f"count_legal - filtered {seen} triangulations of {layout!r} down to {count}")
    return count


def count_legal(sides: Sequence[int], mode: str = "prune") -> Count:
    """
    Counts the triangulations of the inflated configuration that use no diagonal inside a string. These are in
    bijection with the triangulations of the subdivided polygon.

    >>> from polytri.oracle import count_legal
    >>> count_legal([2, 2, 2])
    29

    :raises ValueError: If the mode is unknown, or there are fewer than two sides or three points.
    :param Sequence[int] sides: Interior points per side.
    :param str mode: ``prune`` never builds an illegal diagonal, ``filter`` post-filters the full convex enumeration.
    :rtype: Count
    :return: The number of legal triangulations.
    """
    if mode not in MODES:
        logger.critical("count_legal - Unknown Mode " + str(mode))
        raise ValueError("Unknown Mode " + str(mode))

    layout: Layout = Layout(sides)

    if mode == "prune":
        return _count_pruned(layout)
    return _count_filtered(layout)


def check_legal(triangulation: Triangulation, layout: Layout) -> None:
    """
    :raises ValueError: Unless the triangulation has n-3 legal, pairwise non-crossing diagonals.
    """
    diagonals: list[Diagonal] = sorted(triangulation.diagonals)

    if triangulation.n != layout.n or len(diagonals) != layout.n - 3:
        logger.critical("check_legal - Wrong Size")
        raise ValueError("Not A Triangulation Of This Layout")

    if not all(p < q and layout.legal(p, q) for p, q in diagonals):
        logger.critical("check_legal - Illegal Diagonal")
        raise ValueError("Illegal Diagonal")

    if any(_crosses(d, e) for d, e in itertools.combinations(diagonals, 2)):
        logger.critical("check_legal - Crossing Diagonals")
        raise ValueError("Crossing Diagonals")


def _edge_set(triangulation: Triangulation) -> set[Diagonal]:
    """Diagonals together with the boundary edges."""
    n: int = triangulation.n
    edges: set[Diagonal] = set(triangulation.diagonals)
    edges.update((p, p + 1) for p in range(n - 1))
    edges.add((0, n - 1))
    return edges


def triangles(triangulation: Triangulation) -> list[tuple[int, int, int]]:
    """
    The faces of a triangulation. In a maximal outerplanar graph every 3-cycle bounds a face.
    """
    neighbours: dict[int, set[int]] = {p: set() for p in range(triangulation.n)}
    for p, q in _edge_set(triangulation):
        neighbours[p].add(q)
        neighbours[q].add(p)

    return sorted(
        (p, q, r) for p in neighbours for q in neighbours[p] if q > p
        for r in neighbours[p] & neighbours[q] if r > q
    )


def classify(triangulation: Triangulation, params: TriangleParams) -> TriClassification:
    """
    Sorts a triangulation of :math:`\\Delta(a,b,c)` into T (three ears around a central triangle) or D_A, D_B, D_C
    (two ears and corner-side diagonals from the remaining corner). An ear is the triangle formed by a corner and its
    two boundary neighbours.

    :raises ValueError: If the triangulation is not legal, or the dichotomy fails.
    :param Triangulation triangulation: A legal triangulation.
    :param TriangleParams params: The triangle.
    :rtype: TriClassification
    :return: Class, number of ears and whether a central triangle exists.
    """
    params.validate()
    layout: Layout = triangle_layout(params)
    check_legal(triangulation, layout)

    n: int = layout.n
    faces: set[tuple[int, int, int]] = set(triangles(triangulation))

    ears: int = sum(
        1 for c in layout.corners if tuple(sorted(((c - 1) % n, c, (c + 1) % n))) in faces
    )
    central: bool = any(
        len({layout.interior_side(p) for p in face} - {None}) == 3
        and all(not layout.is_corner(p) for p in face)
        for face in faces
    )
    corner_side: set[int] = {
        idx for idx, c in enumerate(layout.corners)
        for p, q in triangulation.diagonals if c in (p, q)
    }

    if not corner_side and central and ears == 3:
        return TriClassification(TriClass.T, ears, True)

    if len(corner_side) == 1 and not central and ears == 2:
        return TriClassification(CORNER_CLASS[corner_side.pop()], ears, False)

    logger.critical(f"classify - Dichotomy Violated ears={ears} central={central} corners={corner_side}")
    raise ValueError("Neither T Nor D Triangulation")


def _separated_corner(d: Diagonal, layout: Layout) -> tuple[int, int, int]:
    """
    For a diagonal between interior points of two sides, the corner i it separates together with its endpoint on
    side i-1 and its endpoint on side i.
    """
    p, q = d
    side_p: Optional[int] = layout.interior_side(p)
    side_q: Optional[int] = layout.interior_side(q)

    if side_p is None or side_q is None or side_p == side_q:
        logger.critical("_separated_corner - Not Between Two Side Interiors")
        raise ValueError("Diagonal Not Between Interiors Of Two Sides")

    if (side_q - side_p) % 3 == 1:
        return side_q, p, q
    return side_p, q, p


def bijection_forward(triangulation: Triangulation, params: TriangleParams) -> FundamentalSet:
    """
    The fundamental set of a triangulation: :math:`P_{i-1,\\ell}P_{i,m}` is kept when it and
    :math:`P_{i-1,\\ell}P_{i,m+1}` are in T but :math:`P_{i-1,\\ell}P_{i,m+2}` is not, for interior points only
    (:math:`1 \\leq \\ell \\leq s_{i-1}`, :math:`1 \\leq m \\leq s_i`). At :math:`m = s_i` the successor is the
    corner-side diagonal to :math:`P_{i+1}` and the last condition holds trivially.

    :raises ValueError: If the triangulation is not legal.
    :param Triangulation triangulation: A legal triangulation of the triangle.
    :param TriangleParams params: The triangle.
    :rtype: FundamentalSet
    :return: The image of the triangulation.
    """
    layout: Layout = triangle_layout(params)
    check_legal(triangulation, layout)

    s: tuple[int, ...] = layout.sides
    edges: set[Diagonal] = _edge_set(triangulation)

    def has(p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in edges

    chosen: set[Diagonal] = set()
    alpha: list[int] = [0, 0, 0]

    i: int
    for i in range(3):
        for ell in range(1, s[i - 1] + 1):
            u: int = layout.position(i - 1, ell)
            for m in range(1, s[i] + 1):
                if not has(u, layout.position(i, m)) or not has(u, layout.position(i, m + 1)):
                    continue
                if m < s[i] and has(u, layout.position(i, m + 2)):
                    continue
                v: int = layout.position(i, m)
                chosen.add((min(u, v), max(u, v)))
                alpha[i] += 1

    return FundamentalSet(frozenset(chosen), (alpha[0], alpha[1], alpha[2]))


def enumerate_fundamental_sets(params: TriangleParams) -> Iterator[FundamentalSet]:
    """
    Yields every fundamental set of :math:`\\Delta(a,b,c)` once, by type and then by endpoint choice. A set of type
    :math:`(\\alpha_0,\\alpha_1,\\alpha_2)` has :math:`\\alpha_i+\\alpha_{i+1}` endpoints on side i; the
    :math:`\\alpha_i` closest to corner i pair up, nested, with the :math:`\\alpha_i` endpoints of side i-1 closest to
    the same corner.

    >>> from polytri.counting import TriangleParams
    >>> from polytri.oracle import enumerate_fundamental_sets
    >>> sum(1 for _ in enumerate_fundamental_sets(TriangleParams(1, 1, 1)))
    4
    """
    layout: Layout = triangle_layout(params)
    s: tuple[int, ...] = layout.sides

    alpha: tuple[int, ...]
    for alpha in itertools.product(*(range(min(s[i - 1], s[i]) + 1) for i in range(3))):
        if any(alpha[i] + alpha[(i + 1) % 3] > s[i] for i in range(3)):
            continue

        choices = [itertools.combinations(range(1, s[i] + 1), alpha[i] + alpha[(i + 1) % 3]) for i in range(3)]
        for ends in itertools.product(*(list(c) for c in choices)):
            diagonals: set[Diagonal] = set()
            for i in range(3):
                before: tuple[int, ...] = ends[i - 1]
                after: tuple[int, ...] = ends[i]
                for rank in range(alpha[i]):
                    p: int = layout.position(i - 1, before[len(before) - 1 - rank])
                    q: int = layout.position(i, after[rank])
                    diagonals.add((min(p, q), max(p, q)))
            yield FundamentalSet(frozenset(diagonals), (alpha[0], alpha[1], alpha[2]))


def _check_fundamental(fundamental: FundamentalSet, layout: Layout) -> None:
    """
    :raises ValueError: Unless the set is pairwise disjoint, non-crossing, between side interiors and of the stated
                        type.
    """
    alpha: list[int] = [0, 0, 0]
    endpoints: list[int] = []

    for d in fundamental.diagonals:
        corner, _, _ = _separated_corner(d, layout)
        alpha[corner] += 1
        endpoints.extend(d)

    if len(endpoints) != len(set(endpoints)):
        logger.critical("_check_fundamental - Shared Endpoints")
        raise ValueError("Diagonals Share Endpoints")

    if any(_crosses(d, e) for d, e in itertools.combinations(sorted(fundamental.diagonals), 2)):
        logger.critical("_check_fundamental - Crossing Diagonals")
        raise ValueError("Crossing Diagonals")

    if tuple(alpha) != tuple(fundamental.type_vector):
        logger.critical("_check_fundamental - Type Mismatch")
        raise ValueError("Type Vector Mismatch")


def _faces(n: int, diagonals: set[Diagonal]) -> list[list[int]]:
    """Cuts the n-gon along non-crossing diagonals; every face keeps counterclockwise order."""
    faces: list[list[int]] = [list(range(n))]

    for p, q in sorted(diagonals):
        for idx, face in enumerate(faces):
            if p not in face or q not in face:
                continue
            ip, iq = sorted((face.index(p), face.index(q)))
            if iq - ip < 2 or (ip == 0 and iq == len(face) - 1):
                continue
            faces[idx:idx + 1] = [face[ip:iq + 1], face[iq:] + face[:ip + 1]]
            break
        else:
            logger.critical("_faces - Diagonal Does Not Cut A Face")
            raise ValueError("Crossing Diagonals")

    return faces


def _run_starts(face: list[int], n: int) -> list[int]:
    """Vertices entered through a diagonal rather than a boundary edge."""
    return [v for idx, v in enumerate(face) if (v - face[idx - 1]) % n != 1]


def _complete_face(face: list[int], layout: Layout) -> tuple[Diagonal, ...]:
    """
    Triangulates a face that has exactly one legal triangulation.

    :raises ValueError: If the face has none or several.
    """
    def allowed(x: int, y: int) -> bool:
        return layout.legal(face[x], face[y])

    options: list[tuple[Diagonal, ...]] = list(itertools.islice(_triangulations(0, len(face) - 1, allowed), 2))

    if len(options) != 1:
        logger.critical(f"_complete_face - {len(options)} Completions For {face}")
        raise ValueError("Block Completion Not Unique")

    return tuple(
        (min(face[x], face[y]), max(face[x], face[y])) for x, y in options[0]
    )


def _d_corner(shifted: set[Diagonal], layout: Layout) -> Optional[int]:
    """
    The corner whose corner-side diagonals the triangulation uses, or None for a T-triangulation. When the modified
    set shows no corner-side diagonal, an empty side forces the corner i with side i-1 empty and side i+1 not.
    """
    s: tuple[int, ...] = layout.sides
    corners: set[int] = {
        layout.corners.index(p) for d in shifted for p in d if layout.is_corner(p)
    }

    if len(corners) > 1:
        logger.critical("_d_corner - Corner Side Diagonals At Several Corners")
        raise ValueError("Invalid Fundamental Set")

    if corners:
        return corners.pop()

    if min(s) >= 1:
        return None

    return next(i for i in range(3) if s[i - 1] == 0 and s[(i + 1) % 3] >= 1)


def bijection_inverse(fundamental: FundamentalSet, params: TriangleParams) -> Triangulation:
    """
    Rebuilds the unique triangulation with the given fundamental set.

    Each diagonal is shifted one step away from the corner it separates, ear diagonals are added at every corner
    without a corner-side diagonal, a block bounded by two of these gets the diagonal between the starts of its two
    boundary runs, the block bounded by three gets the triangle on its three run starts, and the remaining faces have
    a single legal completion each.

    >>> from polytri.counting import TriangleParams
    >>> from polytri.oracle import FundamentalSet, bijection_inverse
    >>> sorted(bijection_inverse(FundamentalSet(frozenset(), (0, 0, 0)), TriangleParams(1, 1, 1)).diagonals)
    [(1, 3), (1, 5), (3, 5)]

    :raises ValueError: If the fundamental set is invalid or the reconstruction fails.
    :param FundamentalSet fundamental: A fundamental set of the triangle.
    :param TriangleParams params: The triangle.
    :rtype: Triangulation
    :return: The triangulation T with :math:`F_T` equal to the input.
    """
    layout: Layout = triangle_layout(params)
    _check_fundamental(fundamental, layout)

    n: int = layout.n
    if n == 3:
        return Triangulation(3, frozenset())

    # Shift every element one step away from the corner it separates.
    shifted: set[Diagonal] = set()
    for d in fundamental.diagonals:
        corner, outer, inner = _separated_corner(d, layout)
        moved: int = (inner + 1) % n
        shifted.add((min(outer, moved), max(outer, moved)))

    skip: Optional[int] = _d_corner(shifted, layout)
    for i, c in enumerate(layout.corners):
        if i != skip:
            before, after = (c - 1) % n, (c + 1) % n
            shifted.add((min(before, after), max(before, after)))

    # Block rules.
    added: set[Diagonal] = set(shifted)
    for face in _faces(n, shifted):
        starts: list[int] = _run_starts(face, n)
        if len(starts) > 3:
            logger.critical(f"bijection_inverse - Block With {len(starts)} Diagonals")
            raise ValueError("Invalid Fundamental Set")
        if len(starts) < 2:
            continue
        for p, q in itertools.combinations(starts, 2):
            if (face.index(p) - face.index(q)) % len(face) not in (1, len(face) - 1):
                added.add((min(p, q), max(p, q)))

    for face in _faces(n, added):
        if len(face) > 3:
            added.update(_complete_face(face, layout))

    result: Triangulation = Triangulation(n, frozenset(added))
    check_legal(result, layout)
    return result


def triangulation_dump(triangulation: Triangulation, layout: Layout) -> dict[str, Any]:
    """A plain dictionary for external tooling: points with labels, corners and diagonals."""
    return {
        "n": triangulation.n,
        "sides": list(layout.sides),
        "corners": list(layout.corners),
        "labels": [list(layout.label(p)) for p in range(layout.n)],
        "diagonals": [list(d) for d in sorted(triangulation.diagonals)],
    }
