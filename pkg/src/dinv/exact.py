"""Exact integer matrix algebra and finite abelian group combinatorics.

Everything in this package is exact: arbitrary-precision integers, stdlib
``fractions.Fraction`` for rational values, Smith normal forms with unimodular
transform matrices, and explicit element enumeration for finite abelian
groups.  Group orders in scope are knot determinants, so a few thousand at
the very most; the enumeration routines are written for correctness and
testability at that scale, not for asymptotic heroics.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm, prod


class IntMatrix:
    """Immutable rectangular matrix with arbitrary-precision integer entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix must be rectangular")
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.entries = rows

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]})"

    def row(self, i):
        return self.entries[i]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.entries)))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i)
        )

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.entries))
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                  for row in self.entries)
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in row) for row in self.entries))

    def apply(self, vec):
        """Matrix times integer (or Fraction) column vector."""
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum(a * b for a, b in zip(row, vec)) for row in self.entries]

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @staticmethod
    def diagonal(diag) -> "IntMatrix":
        n = len(diag)
        return IntMatrix(tuple(tuple(diag[i] if i == j else 0 for j in range(n))
                               for i in range(n)))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        a = [list(r) for r in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if piv is None:
                    return 0
                a[k], a[piv] = a[piv], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def rational_inverse(self):
        """Inverse as a list of rows of Fractions.  Raises on singular input."""
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
             for i, row in enumerate(self.entries)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular matrix")
            a[c], a[piv] = a[piv], a[c]
            inv = 1 / a[c][c]
            a[c] = [x * inv for x in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return [row[n:] for row in a]


def smith_normal_form(M: IntMatrix):
    """Smith normal form with transforms: returns (U, D, V) with U*M*V = D.

    D is diagonal with d_1 | d_2 | ... and d_i >= 0; U and V are unimodular.
    """
    U, D, V, _ = smith_normal_form_with_inverse(M)
    return U, D, V


def smith_normal_form_with_inverse(M: IntMatrix):
    """As ``smith_normal_form`` but also returns U^{-1} (tracked, not inverted)."""
    n, m = M.rows, M.cols
    A = [list(r) for r in M.entries]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    Uinv = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(m)] for i in range(m)]

    def row_sub(i, j, q):
        # row_i -= q * row_j ; inverse op on Uinv is col_j += q * col_i
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]
        for r in range(n):
            Uinv[r][j] += q * Uinv[r][i]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in range(n):
            Uinv[r][i], Uinv[r][j] = Uinv[r][j], Uinv[r][i]

    def row_negate(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]
        for r in range(n):
            Uinv[r][i] = -Uinv[r][i]

    def col_sub(j, i, q):
        for r in range(n):
            A[r][j] -= q * A[r][i]
        for r in range(m):
            V[r][j] -= q * V[r][i]

    def col_swap(i, j):
        for r in range(n):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(m):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def clear_pivot(s):
        """Make A[s][s] the gcd of its row+column and clear both."""
        while True:
            piv = None
            for i in range(s, n):
                for j in range(s, m):
                    if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])
                                         or (abs(A[i][j]) == abs(A[piv[0]][piv[1]]) and (i, j) < piv)):
                        piv = (i, j)
            if piv is None:
                return False
            if piv[0] != s:
                row_swap(s, piv[0])
            if piv[1] != s:
                col_swap(s, piv[1])
            dirty = False
            for i in range(s + 1, n):
                q = A[i][s] // A[s][s]
                if q:
                    row_sub(i, s, q)
                if A[i][s]:
                    dirty = True
            for j in range(s + 1, m):
                q = A[s][j] // A[s][s]
                if q:
                    col_sub(j, s, q)
                if A[s][j]:
                    dirty = True
            if not dirty:
                if A[s][s] < 0:
                    row_negate(s)
                return True

    rank = 0
    for s in range(min(n, m)):
        if clear_pivot(s):
            rank += 1
        else:
            break

    # Enforce the divisibility chain d_i | d_{i+1}.  Folding trick: if d_i does
    # not divide d_{i+1}, add column i+1 to column i (creates an off-diagonal
    # entry) and re-clear; the new pivot is gcd(d_i, d_{i+1}).
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if a and b % a != 0:
                col_sub(i, i + 1, -1)      # col_i += col_{i+1}
                clear_pivot(i)
                clear_pivot(i + 1)
                changed = True

    return (IntMatrix(U), IntMatrix(A), IntMatrix(V), IntMatrix(Uinv))


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group in invariant-factor form.

    ``factors`` is a tuple (d_1, ..., d_m) with d_1 | d_2 | ... and each
    d_i >= 2; the empty tuple is the trivial group.  Elements are integer
    tuples (a_1, ..., a_m) with 0 <= a_i < d_i, ordered lexicographically.
    """

    factors: tuple

    def __post_init__(self):
        fs = tuple(int(d) for d in self.factors)
        object.__setattr__(self, "factors", fs)
        if any(d < 2 for d in fs):
            raise ValueError("invariant factors must be >= 2 (drop trivial ones)")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors must form a divisibility chain: {fs}")

    @property
    def order(self) -> int:
        return prod(self.factors)

    @property
    def zero(self):
        return tuple(0 for _ in self.factors)

    def elements(self):
        """All elements in lexicographic (canonical) order."""
        return list(itertools.product(*[range(d) for d in self.factors]))

    def add(self, a, b):
        return tuple((x + y) % d for x, y, d in zip(a, b, self.factors))

    def neg(self, a):
        return tuple((-x) % d for x, d in zip(a, self.factors))

    def sub(self, a, b):
        return tuple((x - y) % d for x, y, d in zip(a, b, self.factors))

    def scale(self, k, a):
        return tuple((k * x) % d for x, d in zip(a, self.factors))

    def element_order(self, a) -> int:
        return lcm(*[d // gcd(d, x) for x, d in zip(a, self.factors)]) if self.factors else 1

    def contains(self, a) -> bool:
        return len(a) == len(self.factors) and all(0 <= x < d for x, d in zip(a, self.factors))

    def __str__(self):
        if not self.factors:
            return "0"
        return " + ".join(f"Z/{d}" for d in self.factors)


def group_from_factors(factors) -> FinAbGroup:
    """FinAbGroup from an arbitrary list of cyclic orders (1s dropped, chain fixed)."""
    fs = [int(d) for d in factors if int(d) != 1]
    if any(d < 1 for d in fs):
        raise ValueError("cyclic orders must be positive")
    if not fs:
        return FinAbGroup(())
    D = IntMatrix.diagonal(fs)
    _, S, _ = smith_normal_form(D)
    inv = [S[i, i] for i in range(S.rows) if S[i, i] > 1]
    return FinAbGroup(tuple(inv))


def cokernel(M: IntMatrix) -> FinAbGroup:
    """Z^n / M Z^n as a FinAbGroup.  M must be square and nonsingular."""
    return cokernel_with_maps(M)[0]


def cokernel_with_maps(M: IntMatrix):
    """Cokernel of a nonsingular square M, with explicit coordinate maps.

    Returns (G, to_group, lift) where ``to_group`` maps an integer vector to
    its class in G (coordinates in invariant factors), and ``lift`` maps a
    group element back to some integer vector representative.
    """
    if M.rows != M.cols:
        raise ValueError("cokernel requires a square matrix")
    n = M.rows
    U, D, V, Uinv = smith_normal_form_with_inverse(M)
    diag = [D[i, i] for i in range(n)]
    if any(d == 0 for d in diag):
        raise ZeroDivisionError("singular presentation matrix: infinite cokernel")
    keep = [i for i in range(n) if diag[i] > 1]
    G = FinAbGroup(tuple(diag[i] for i in keep))

    def to_group(x):
        y = U.apply(list(x))
        return tuple(y[i] % diag[i] for i in keep)

    def lift(t):
        full = [0] * n
        for pos, i in enumerate(keep):
            full[i] = t[pos]
        return Uinv.apply(full)

    return G, to_group, lift


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a FinAbGroup, stored with an explicit sorted element list.

    ``generators`` is a canonical independent generating set realizing the
    subgroup's own invariant-factor decomposition (computed in
    ``subgroup_from_elements``); ``elements`` is the full element tuple in
    lexicographic order.
    """

    parent: FinAbGroup
    generators: tuple
    elements: tuple
    factors: tuple          # invariant factors of the subgroup itself
    _coords: dict = field(default=None, compare=False, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, a) -> bool:
        return a in set(self.elements)

    def coordinates(self):
        """dict element -> coordinates with respect to ``generators`` (cached)."""
        if self._coords is None:
            coords = {}
            G = self.parent
            ranges = [range(e) for e in self.factors]
            for cs in itertools.product(*ranges):
                el = G.zero
                for c, g in zip(cs, self.generators):
                    el = G.add(el, G.scale(c, g))
                coords.setdefault(el, cs)
            assert len(coords) == self.order
            object.__setattr__(self, "_coords", coords)
        return self._coords

    def as_group(self) -> FinAbGroup:
        return FinAbGroup(self.factors)


def close_under_group(G: FinAbGroup, gens) -> frozenset:
    """Closure of ``gens`` under the group operation (subgroup generated)."""
    seen = {G.zero}
    frontier = [G.zero]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = G.add(x, g)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def subgroup_from_elements(G: FinAbGroup, elements) -> Subgroup:
    """Build the canonical Subgroup record for a closed element set.

    The invariant-factor decomposition of the subgroup is computed via Smith
    normal form: the subgroup lattice L <= Z^m contains D Z^m (D = diagonal of
    parent factors), and H = L / D Z^m = coker(B^{-1} D) for any basis matrix
    B of L.
    """
    elements = sorted(elements)
    els = set(elements)
    assert G.zero in els
    m = len(G.factors)
    if not elements or len(elements) == 1:
        return Subgroup(G, (), (G.zero,), ()) if m else Subgroup(G, (), ((),), ())
    if m == 0:
        return Subgroup(G, (), ((),), ())
    # columns: all subgroup elements plus parent relations
    cols = [list(e) for e in elements if any(e)] + [list(r) for r in IntMatrix.diagonal(G.factors).entries]
    A = IntMatrix(tuple(zip(*cols)))  # m x k, columns generate L
    # Hermite-like: use SNF of A to get a basis of the column lattice L = B Z^m
    UA, DA, VA, UAinv = smith_normal_form_with_inverse(A)
    # L = A Z^k = UA^{-1} DA Z^k ; basis matrix B = UA^{-1} * DA' (nonzero part)
    diag = [DA[i, i] for i in range(min(DA.rows, DA.cols))]
    assert all(d != 0 for d in diag[:m]), "subgroup lattice must have full rank"
    B = UAinv * IntMatrix.diagonal(diag[:m])
    # X = B^{-1} D  (integer since D Z^m <= L)
    Binv = B.rational_inverse()
    Dm = IntMatrix.diagonal(G.factors)
    X = []
    for i in range(m):
        row = []
        for j in range(m):
            v = sum(Binv[i][k] * Dm[k, j] for k in range(m))
            assert v.denominator == 1
            row.append(int(v))
        X.append(row)
    H, to_H, lift_H = cokernel_with_maps(IntMatrix(X)) if IntMatrix(X).det() != 0 else (None, None, None)
    if H is None:
        raise AssertionError("subgroup quotient must be finite")
    # generators of H as elements of G: g_i = B * lift(e_i) mod parent factors
    gens = []
    for pos in range(len(H.factors)):
        e = tuple(1 if t == pos else 0 for t in range(len(H.factors)))
        v = B.apply(lift_H(e))
        gens.append(tuple(x % d for x, d in zip(v, G.factors)))
    sub = Subgroup(G, tuple(gens), tuple(elements), H.factors)
    assert prod(H.factors) == len(elements)
    return sub


def all_subgroups(G: FinAbGroup):
    """Every subgroup of G, canonically sorted.

    A subgroup of a group with m invariant factors is generated by at most m
    elements, so closing all generator subsets of size <= m is exhaustive.
    """
    m = len(G.factors)
    els = G.elements()
    seen = {}
    trivial = frozenset({G.zero})
    seen[trivial] = None
    for size in range(1, m + 1):
        for combo in itertools.combinations(els[1:], size):
            cl = close_under_group(G, combo)
            if cl not in seen:
                seen[cl] = None
    subs = [subgroup_from_elements(G, s) for s in seen]
    subs.sort(key=lambda h: (h.order, h.elements))
    return subs


def subgroups_of_order(G: FinAbGroup, n: int):
    """All subgroups of order n, duplicate-free, canonically ordered.

    Returns the empty list when n does not divide |G|.
    """
    if n < 1 or G.order % n != 0:
        return []
    if n == 1:
        return [subgroup_from_elements(G, [G.zero])]
    if n == G.order:
        return [subgroup_from_elements(G, G.elements())]
    if len(G.factors) == 1:
        # cyclic: unique subgroup per divisor, generated by |G|/n
        g = (G.factors[0] // n,)
        return [subgroup_from_elements(G, close_under_group(G, [g]))]
    return [h for h in all_subgroups(G) if h.order == n]


@dataclass(frozen=True)
class GroupMap:
    """Homomorphism from a FinAbGroup or Subgroup into a FinAbGroup.

    ``images`` lists the images of the source's canonical generators (the
    standard basis for a FinAbGroup source; ``Subgroup.generators`` for a
    subgroup source).
    """

    source: object
    target: FinAbGroup
    images: tuple

    def source_group(self) -> FinAbGroup:
        return self.source if isinstance(self.source, FinAbGroup) else self.source.as_group()

    def source_elements(self):
        if isinstance(self.source, FinAbGroup):
            return self.source.elements()
        return list(self.source.elements)

    def apply(self, el):
        T = self.target
        if isinstance(self.source, FinAbGroup):
            coords = el
        else:
            coords = self.source.coordinates()[el]
        out = T.zero
        for c, im in zip(coords, self.images):
            out = T.add(out, T.scale(c, im))
        return out

    def image_elements(self) -> frozenset:
        return frozenset(self.apply(e) for e in self.source_elements())

    def is_surjective(self) -> bool:
        return len(self.image_elements()) == self.target.order

    def is_injective(self) -> bool:
        src = self.source_elements()
        return len(set(self.apply(e) for e in src)) == len(src)


def _hom_images(source_factors, target: FinAbGroup):
    """Iterate image tuples defining all homomorphisms from prod Z/e_i to target.

    The image of a generator of order e must be killed by e: its target order
    divides e.  Candidates are enumerated in lexicographic order.
    """
    per_gen = []
    for e in source_factors:
        cands = [t for t in target.elements() if target.scale(e, t) == target.zero]
        per_gen.append(cands)
    return itertools.product(*per_gen)


def epimorphisms(H, r: int):
    """All surjective homomorphisms H -> Z/r (r >= 1), duplicate-free.

    H may be a FinAbGroup or a Subgroup.  For r = 1 the unique map to the
    trivial group is returned.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    target = FinAbGroup((r,)) if r > 1 else FinAbGroup(())
    factors = H.factors if isinstance(H, (FinAbGroup,)) else H.factors
    out = []
    for images in _hom_images(factors, target):
        if r == 1:
            out.append(GroupMap(H, target, images))
            break
        # surjective onto Z/r iff gcd of image coordinates with r is 1
        g = gcd(r, *[im[0] for im in images]) if images else r
        if g == 1:
            out.append(GroupMap(H, target, images))
    return out


def homomorphisms(G: FinAbGroup, H: FinAbGroup):
    """All homomorphisms G -> H (complete enumeration)."""
    return [GroupMap(G, H, images) for images in _hom_images(G.factors, H)]


def isomorphisms(G: FinAbGroup, H: FinAbGroup):
    """All isomorphisms G -> H; empty when the invariant factors differ."""
    if G.factors != H.factors:
        return []
    if not G.factors:
        return [GroupMap(G, H, ())]
    if len(G.factors) == 1:
        # cyclic fast path: multiplication by units
        r = G.factors[0]
        return [GroupMap(G, H, ((u,),)) for u in range(1, r) if gcd(u, r) == 1]
    out = []
    for images in _hom_images(G.factors, H):
        phi = GroupMap(G, H, images)
        # bijectivity: generated subgroup of images is everything
        if close_under_group(H, images) == frozenset(H.elements()):
            out.append(phi)
    return out


def odd_square_factorizations(n: int):
    """All factorizations n = r * s^2 with r, s >= 1, as (r, s) pairs, r descending."""
    out = []
    s = 1
    while s * s <= n:
        if n % (s * s) == 0:
            out.append((n // (s * s), s))
        s += 1
    out.sort(key=lambda rs: -rs[0])
    return out
