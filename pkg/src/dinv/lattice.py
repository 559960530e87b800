"""Integral quadratic forms and their characteristic-covector minimization.

The central computation: for a definite form Q, partition the characteristic
covectors Char(Q) = diag(Q) + 2Z^n into the |det Q| cosets of 2Q Z^n and
minimize xi^T Q^{-1} xi exactly on each coset.  For a sharp four-manifold
bounded by Y these minima are the d-invariants of Y.

Minimization is a closest-vector problem: writing xi = xi_0 + 2Qv,

    xi^T Q^{-1} xi = 4 (v + Q^{-1} xi_0 / 2)^T Q (v + Q^{-1} xi_0 / 2),

so each coset is an exact CVP for the lattice Z^n under Q, solved by
Schnorr-Euchner enumeration in rational arithmetic.  (The printed search box
``g_ii <= xi_i < -g_ii`` in the source material is sign-garbled for definite
forms; the enumerative route needs no such box and is certified by
construction.)

Also here: the complete enumeration of positive-definite forms of
half-integer surgery type [[A, I], [I, 2I]] with prescribed determinant and
diagonal parity, and negative-definite plumbing matrices for lens spaces and
for the Brieskorn manifolds M(2,p,q).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm, prod

from .exact import (FinAbGroup, IntMatrix, smith_normal_form_with_inverse)
from .profiles import DProfile


class QuadForm:
    """Symmetric nondegenerate definite integer form with a definiteness sign.

    ``sign`` is +1 for positive definite, -1 for negative definite;
    sign * matrix is verified positive definite via exact leading minors.
    """

    __slots__ = ("matrix", "sign")

    def __init__(self, matrix, sign: int):
        M = matrix if isinstance(matrix, IntMatrix) else IntMatrix(matrix)
        if not M.is_symmetric():
            raise ValueError("form matrix must be symmetric")
        if sign not in (+1, -1):
            raise ValueError("sign must be +1 or -1")
        P = M if sign == +1 else -M
        if not _is_positive_definite(P):
            raise ValueError("sign * matrix is not positive definite")
        self.matrix = M
        self.sign = sign

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def det(self) -> int:
        return self.matrix.det()

    def abs_det(self) -> int:
        return abs(self.det())

    def positive_part(self) -> IntMatrix:
        return self.matrix if self.sign == +1 else -self.matrix

    def __eq__(self, other):
        return (isinstance(other, QuadForm) and self.sign == other.sign
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.sign, self.matrix))

    def __repr__(self):
        return f"QuadForm(sign={self.sign:+d}, {self.matrix!r})"


def _is_positive_definite(M: IntMatrix) -> bool:
    n = M.rows
    return all(IntMatrix([row[:k] for row in M.entries[:k]]).det() > 0
               for k in range(1, n + 1))


# ---------------------------------------------------------------------------
# exact closest-vector enumeration
# ---------------------------------------------------------------------------

def _ldl(P):
    """P = L D L^T with L unit lower triangular, exact Fractions; P pos. def."""
    n = len(P)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = Fraction(P[j][j]) - sum(L[j][k] ** 2 * D[k] for k in range(j))
        assert D[j] > 0, "LDL requires a positive definite matrix"
        for i in range(j + 1, n):
            L[i][j] = (Fraction(P[i][j]) - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / D[j]
    return L, D


def _round_frac(x: Fraction) -> int:
    """Nearest integer, ties toward negative infinity (any fixed rule works)."""
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def cvp_minimum(P_ldl, center):
    """min over v in Z^n of (v - c)^T P (v - c), with an attaining v.

    ``P_ldl`` is the (L, D) pair from :func:`_ldl`.  Schnorr-Euchner zig-zag
    enumeration; exact rational arithmetic throughout, so the return value is
    the true minimum.
    """
    L, D = P_ldl
    n = len(D)
    c = [Fraction(x) for x in center]

    # initial upper bound: rounded back-substitution
    guess = [0] * n
    for i in range(n - 1, -1, -1):
        mu = c[i] - sum(L[j][i] * (guess[j] - c[j]) for j in range(i + 1, n))
        guess[i] = _round_frac(mu)

    def value_at(v):
        tot = Fraction(0)
        for i in range(n):
            s = (v[i] - c[i]) + sum(L[j][i] * (v[j] - c[j]) for j in range(i + 1, n))
            tot += D[i] * s * s
        return tot

    best_val = value_at(guess)
    best_vec = list(guess)
    v = [0] * n

    def descend(i, partial):
        nonlocal best_val, best_vec
        if i < 0:
            if partial < best_val:
                best_val = partial
                best_vec = list(v)
            return
        mu = c[i] - sum(L[j][i] * (v[j] - c[j]) for j in range(i + 1, n))
        v0 = _round_frac(mu)
        # zig-zag v0, v0+1, v0-1, v0+2, ...
        k = 0
        while True:
            hit = False
            for cand in ([v0] if k == 0 else [v0 + k, v0 - k]):
                s = cand - mu
                term = D[i] * s * s
                if partial + term < best_val:
                    v[i] = cand
                    descend(i - 1, partial + term)
                    hit = True
            if k > 0 and not hit:
                break
            k += 1

    descend(n - 1, Fraction(0))
    return best_val, best_vec


# ---------------------------------------------------------------------------
# characteristic cosets and coset minimization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharCoset:
    """One coset of Char(Q)/2QZ^n: a representative covector and its label in
    the spin-centered coset group."""

    representative: tuple
    element: tuple


class _CosetSystem:
    """Shared machinery: the coset group of Char(Q)/2QZ^n with spin at 0.

    Writing xi = diag(Q) + 2x, cosets correspond to x in Z^n/QZ^n = coker(Q);
    the conjugation xi -> -xi fixes exactly one coset for odd determinant,
    and that coset is taken as the group origin.
    """

    def __init__(self, Q: QuadForm):
        n = Q.rank
        P = Q.positive_part()
        U, S, V, Uinv = smith_normal_form_with_inverse(P)
        diag = [S[i, i] for i in range(n)]
        keep = [i for i in range(n) if diag[i] > 1]
        self.Q = Q
        self.n = n
        self.group = FinAbGroup(tuple(diag[i] for i in keep))
        if self.group.order % 2 == 0:
            raise ValueError("even-order coset group: only odd determinants in scope")
        self._U, self._Uinv, self._diag, self._keep = U, Uinv, diag, keep
        self.delta = [Q.matrix[i, i] for i in range(n)]
        dG = self._to_group(self.delta)
        fs = self.group.factors
        inv2 = [pow(2, -1, f) for f in fs]
        self.spin = tuple((-dG[i] * inv2[i]) % fs[i] for i in range(len(fs)))

    def _to_group(self, x):
        y = self._U.apply(list(x))
        return tuple(y[i] % self._diag[i] for i in self._keep)

    def _lift(self, t):
        full = [0] * self.n
        for pos, i in enumerate(self._keep):
            full[i] = t[pos]
        return self._Uinv.apply(full)

    def representative(self, element) -> tuple:
        """A characteristic covector in the coset labelled by ``element``."""
        t = self.group.add(self.spin, element)
        x = self._lift(t)
        return tuple(d + 2 * xi for d, xi in zip(self.delta, x))

    def element_of(self, xi) -> tuple:
        """Group label (spin-centered) of the coset containing covector xi."""
        if any((a - b) % 2 for a, b in zip(xi, self.delta)):
            raise ValueError("not a characteristic covector")
        x = [(a - b) // 2 for a, b in zip(xi, self.delta)]
        return self.group.sub(self._to_group(x), self.spin)


def char_cosets(Q: QuadForm):
    """All |det Q| cosets of Char(Q)/2QZ^n, spin coset labelled 0."""
    sys = _CosetSystem(Q)
    return [CharCoset(sys.representative(t), t) for t in sys.group.elements()]


@dataclass(frozen=True)
class MinTable:
    """Exact per-coset extrema of the covector square.

    For sign +1: m_Q(j) = min (xi^T Q^{-1} xi - n)/4 over the coset j.
    For sign -1: M_Q(j) = max (xi^T Q^{-1} xi + n)/4 over the coset j.
    ``minimizers`` records an attaining covector per coset.
    """

    form: QuadForm
    group: FinAbGroup
    values: dict
    minimizers: dict


def min_square(Q: QuadForm) -> MinTable:
    """Certified coset-by-coset minimization of the characteristic square."""
    sys = _CosetSystem(Q)
    n = Q.rank
    P = Q.positive_part()
    Pinv = P.rational_inverse()
    ldl = _ldl([list(r) for r in P.entries])
    values, minimizers = {}, {}
    for t in sys.group.elements():
        xi0 = sys.representative(t)
        # min over coset of xi^T P^{-1} xi = 4 * min_v (v + P^{-1}xi0/2)^T P (v + ...)
        c = [sum(Pinv[i][j] * xi0[j] for j in range(n)) / 2 for i in range(n)]
        m, v = cvp_minimum(ldl, [-ci for ci in c])
        minsq = 4 * m
        xi = tuple(x0 + 2 * sum(P[i, j] * v[j] for j in range(n)) for i, x0 in enumerate(xi0))
        if Q.sign == +1:
            values[t] = (minsq - n) / 4
        else:
            values[t] = (n - minsq) / 4
        minimizers[t] = xi
    return MinTable(Q, sys.group, values, minimizers)


def d_from_sharp(Q: QuadForm) -> DProfile:
    """d-invariants of the boundary of a sharp definite four-manifold.

    Positive definite Q: d(Y, t) = m_Q(t); negative definite Q:
    d(Y, t) = M_Q(t).  Only odd determinants are in scope (the coset group of
    a knot double cover has odd order).
    """
    table = min_square(Q)
    sgn = "+" if Q.sign > 0 else "-"
    return DProfile(table.group, dict(table.values),
                    label=f"d(sharp {sgn}form rank {Q.rank}, det {Q.det()})")


def serialize_min_table(T: MinTable) -> str:
    lines = ["group: " + ",".join(str(d) for d in T.group.factors)]
    for t in T.group.elements():
        v = T.values[t]
        lines.append(",".join(str(a) for a in t) + " : " + f"{v.numerator}/{v.denominator}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# half-integer surgery type forms
# ---------------------------------------------------------------------------

def half_integer_block(A: IntMatrix) -> IntMatrix:
    """The 2k x 2k form [[A, I], [I, 2I]]."""
    k = A.rows
    rows = []
    for i in range(k):
        rows.append(tuple(A[i, j] for j in range(k)) + tuple(int(i == j) for j in range(k)))
    for i in range(k):
        rows.append(tuple(int(i == j) for j in range(k)) + tuple(2 * int(i == j) for j in range(k)))
    return IntMatrix(rows)


def _parity_core(Qbig: IntMatrix):
    """Recover A (and M = 2A - I) from a form [[A, I],[I, 2I]]."""
    k = Qbig.rows // 2
    A = IntMatrix([[Qbig[i, j] for j in range(k)] for i in range(k)])
    M = IntMatrix([[2 * A[i, j] - int(i == j) for j in range(k)] for i in range(k)])
    return A, M


def _minkowski_candidates(k: int, det: int):
    """All symmetric positive-definite integer k x k forms satisfying the
    Minkowski reduction inequalities with determinant ``det``.

    Box: m_11 <= ... <= m_kk, 2|m_ij| <= m_ii (i < j), prod m_ii <= c_k * det
    with c_2 = 4/3, c_3 = 2, c_4 = 4 (van der Waerden).  Every congruence
    class of determinant ``det`` has a Minkowski-reduced representative inside
    the box, so the list is complete up to congruence (with duplicates).
    """
    c_k = {1: Fraction(1), 2: Fraction(4, 3), 3: Fraction(2), 4: Fraction(4)}.get(k)
    if c_k is None:
        raise NotImplementedError("form enumeration implemented for rank k <= 4")
    bound = c_k * det
    out = []

    diag = [0] * k

    def fill_diag(i, lo, partial_prod):
        if i == k:
            if partial_prod >= det:
                fill_offdiag(diag)
            return
        d = lo
        while partial_prod * d ** (k - i) <= bound:
            diag[i] = d
            fill_diag(i + 1, d, partial_prod * d)
            d += 1

    def fill_offdiag(dd):
        positions = [(i, j) for i in range(k) for j in range(i + 1, k)]
        M = [[dd[i] if i == j else 0 for j in range(k)] for i in range(k)]

        def rec(p):
            if p == len(positions):
                mat = IntMatrix(M)
                if mat.det() == det and _is_positive_definite(mat):
                    out.append(mat)
                return
            i, j = positions[p]
            half = dd[i] // 2
            for v in range(-half, half + 1):
                M[i][j] = M[j][i] = v
                rec(p + 1)
            M[i][j] = M[j][i] = 0

        rec(0)

    fill_diag(0, 1, 1)
    return out


def _gl2_f2_factor_lift(T):
    """Lift an invertible 0/1 matrix mod 2 to GL_k(Z) via an elementary
    factorization of its mod-2 reduction (each factor lifts unimodularly)."""
    k = len(T)
    A = [[T[i][j] % 2 for j in range(k)] for i in range(k)]
    ops = []  # sequence of ('swap', i, j) or ('add', i, j): row_i += row_j
    # Gaussian elimination over F2 recording row operations: reduce A to I
    for c in range(k):
        piv = next((r for r in range(c, k) if A[r][c]), None)
        assert piv is not None, "matrix not invertible mod 2"
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            ops.append(("swap", c, piv))
        for r in range(k):
            if r != c and A[r][c]:
                A[r] = [(x + y) % 2 for x, y in zip(A[r], A[c])]
                ops.append(("add", r, c))
    # A = (product of ops) * T = I  =>  T = product of inverse ops reversed
    L = [[int(i == j) for j in range(k)] for i in range(k)]
    for op in reversed(ops):
        kind, i, j = op
        if kind == "swap":
            L[i], L[j] = L[j], L[i]
        else:
            L[i] = [x + y for x, y in zip(L[i], L[j])]   # inverse of add is add over F2; lift as add
    M = IntMatrix(L)
    assert abs(M.det()) == 1
    return M


def _f2_orthogonal_transforms(M: IntMatrix):
    """All T in GL_k(F2) with T^t (M mod 2) T = identity, as unimodular
    integer lifts.  Exists iff the form has an odd vector (is not even)."""
    k = M.rows
    B = [[M[i, j] % 2 for j in range(k)] for i in range(k)]
    out = []
    cols = list(itertools.product([0, 1], repeat=k))[1:]   # nonzero columns

    def bil(u, v):
        return sum(u[i] * B[i][j] * v[j] for i in range(k) for j in range(k)) % 2

    chosen = []

    def rec():
        if len(chosen) == k:
            T = [[chosen[j][i] for j in range(k)] for i in range(k)]
            out.append(_gl2_f2_factor_lift(T))
            return
        for v in cols:
            if bil(v, v) != 1:
                continue
            if any(bil(v, u) for u in chosen):
                continue
            chosen.append(v)
            rec()
            chosen.pop()

    rec()
    return out


def lattice_congruent(M1: IntMatrix, M2: IntMatrix) -> bool:
    """Decide integral congruence of positive definite forms by mapping a
    basis of M1 onto vectors of matching Gram data in M2 (complete
    backtracking over the finitely many vectors of each required norm)."""
    k = M1.rows
    if k != M2.rows or M1.det() != M2.det():
        return False
    if M1 == M2:
        return True
    norms = [M1[i, i] for i in range(k)]
    maxnorm = max(norms)
    # all vectors of M2-norm <= maxnorm
    vecs = _vectors_up_to_norm(M2, maxnorm)
    by_norm = {}
    for v, nv in vecs:
        by_norm.setdefault(nv, []).append(v)

    cols = []

    def gram_ok(v):
        i = len(cols)
        for j, u in enumerate(cols):
            g = sum(u[a] * M2[a, b] * v[b] for a in range(k) for b in range(k))
            if g != M1[j, i]:
                return False
        return True

    def rec():
        if len(cols) == k:
            T = IntMatrix([[cols[j][i] for j in range(k)] for i in range(k)])
            return abs(T.det()) == 1
        i = len(cols)
        for v in by_norm.get(norms[i], []):
            if gram_ok(v):
                cols.append(v)
                if rec():
                    return True
                cols.pop()
        return False

    return rec()


def _vectors_up_to_norm(M: IntMatrix, bound):
    """All nonzero integer vectors with v^T M v <= bound (pos. definite M)."""
    n = M.rows
    L, D = _ldl([list(r) for r in M.entries])
    out = []
    v = [0] * n

    def rec(i, partial):
        if i < 0:
            if any(v):
                out.append((tuple(v), int(partial)))
            return
        mu = -sum(L[j][i] * Fraction(v[j]) for j in range(i + 1, n))
        v0 = _round_frac(mu)
        kk = 0
        while True:
            hit = False
            for cand in ([v0] if kk == 0 else [v0 + kk, v0 - kk]):
                term = D[i] * (cand - mu) ** 2
                if partial + term <= bound:
                    v[i] = cand
                    rec(i - 1, partial + term)
                    hit = True
            if kk > 0 and not hit:
                break
            kk += 1
        v[i] = 0

    rec(n - 1, Fraction(0))
    return out


def enumerate_half_integer_forms(k: int, det: int, odd_count: int):
    """Complete list, up to integral congruence of the 2k x 2k form, of
    positive-definite forms [[A, I], [I, 2I]] with det(2A - I) = det and
    exactly ``odd_count`` odd entries on diag(A).

    Method: every such form corresponds to a parity basis (odd diagonal,
    even off-diagonal) of the rank-k lattice M = 2A - I.  Candidate lattices
    come from a certified Minkowski-reduction box; parity bases are produced
    by lifting every mod-2 congruence T with T^t M T = I (the relevant
    mod-4 diagonal data only depends on T mod 2, so this captures every
    achievable diagonal parity pattern); member classes are separated by an
    explicit congruence test on the 2k x 2k forms.  The empty list is a
    meaningful result.
    """
    if det < 1 or det % 2 == 0:
        raise ValueError("determinant must be odd and positive")
    if not (0 <= odd_count <= k):
        raise ValueError("odd_count must lie in [0, k]")
    seen_cores = []   # list of (Mbig, coreM) for congruence dedup
    results = []
    for M in _minkowski_candidates(k, det):
        if all(M[i, i] % 2 == 0 for i in range(k)):
            continue   # even lattice: no parity basis
        for T in _f2_orthogonal_transforms(M):
            Mp = T.transpose() * M * T
            assert all(Mp[i, i] % 2 == 1 for i in range(k))
            assert all(Mp[i, j] % 2 == 0 for i in range(k) for j in range(i))
            cnt = sum(1 for i in range(k) if Mp[i, i] % 4 == 1)
            if cnt != odd_count:
                continue
            A = IntMatrix([[(Mp[i, j] + int(i == j)) // 2 for j in range(k)] for i in range(k)])
            big = half_integer_block(A)
            if any(lattice_congruent(big, prev) for prev in results):
                continue
            results.append(big)
    results.sort(key=lambda m: (sorted(m[i, i] for i in range(k)), m.entries))
    return [QuadForm(m, +1) for m in results]


def parity_box_forms_rank2(det: int, odd_count: int):
    """Independent rank-2 route: direct enumeration of parity-reduced
    matrices M = [[a, b], [b, c]], a,c odd, b even, |b| < a <= c.

    Any parity basis can be brought into this box by even shears and swaps,
    which preserve the congruence class of the associated 4x4 form; used as
    a cross-check oracle for :func:`enumerate_half_integer_forms`.
    """
    out = []
    a = 1
    while a <= det + 1:
        for b in range(0, a, 2):
            for bb in ({b, -b} if b else {0}):
                num = det + bb * bb
                if num % a:
                    continue
                c = num // a
                if c < a or c % 2 == 0:
                    continue
                M = IntMatrix([[a, bb], [bb, c]])
                cnt = sum(1 for i in range(2) if M[i, i] % 4 == 1)
                if cnt != odd_count:
                    continue
                A = IntMatrix([[(M[i, j] + int(i == j)) // 2 for j in range(2)] for i in range(2)])
                big = half_integer_block(A)
                if not any(lattice_congruent(big, p) for p in out):
                    out.append(big)
        a += 2
    out.sort(key=lambda m: (sorted(m[i, i] for i in range(2)), m.entries))
    return [QuadForm(m, +1) for m in out]


# ---------------------------------------------------------------------------
# plumbings
# ---------------------------------------------------------------------------

def hirzebruch_jung(p: int, q: int):
    """p/q = a_1 - 1/(a_2 - 1/(...)) with all a_i >= 2 (0 < q < p)."""
    if not (0 < q < p):
        raise ValueError("need 0 < q < p")
    out = []
    while q:
        a = -((-p) // q)
        out.append(a)
        p, q = q, a * q - p
    assert all(a >= 2 for a in out)
    return out


def linear_plumbing(p: int, q: int) -> QuadForm:
    """Negative-definite linear plumbing (chain of unknots) for the lens
    space with parameters p/q: weights -a_i from the Hirzebruch-Jung
    expansion of p/q."""
    if gcd(p, q) != 1:
        raise ValueError("p, q must be coprime")
    cf = hirzebruch_jung(p, q % p)
    n = len(cf)
    M = [[0] * n for _ in range(n)]
    for i, a in enumerate(cf):
        M[i][i] = -a
        if i:
            M[i][i - 1] = M[i - 1][i] = 1
    return QuadForm(M, -1)


def _seifert_data_brieskorn(a1: int, a2: int, a3: int):
    """Unnormalized Seifert invariants of the Brieskorn manifold M(a1,a2,a3)
    with its link orientation (boundary of the negative-definite resolution).

    The S^1-action on the link has weights w_i = lcm/a_i; the singular orbit
    over the i-th coordinate curve has multiplicity alpha_i = gcd of the
    complementary weights, appears gcd(a_j, a_k) times, and carries the
    slice rotation w_i, giving beta_i = -w_i^{-1} mod alpha_i.  The central
    weight is pinned by e = -a1 a2 a3 / lcm^2 and comes out integral.
    """
    d = lcm(a1, lcm(a2, a3))
    aa = [a1, a2, a3]
    w = [d // x for x in aa]
    fibers = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        count = gcd(aa[j], aa[k])
        alpha = d // lcm(aa[j], aa[k])
        if alpha == 1:
            continue
        beta = (-pow(w[i] % alpha, -1, alpha)) % alpha
        fibers.extend([(alpha, beta)] * count)
    e = Fraction(-a1 * a2 * a3, d * d)
    b = e - sum(Fraction(beta, alpha) for alpha, beta in fibers)
    assert b.denominator == 1, (a1, a2, a3, b)
    return int(b), sorted(fibers)


def _star_plumbing(b: int, fibers) -> QuadForm:
    """Star-shaped plumbing: central weight b, one Hirzebruch-Jung leg with
    weights -a_i per singular fiber (alpha/beta)."""
    legs = [hirzebruch_jung(alpha, beta) for alpha, beta in fibers]
    n = 1 + sum(len(l) for l in legs)
    M = [[0] * n for _ in range(n)]
    M[0][0] = b
    idx = 1
    for leg in legs:
        prev = 0
        for a in leg:
            M[idx][idx] = -a
            M[idx][prev] = M[prev][idx] = 1
            prev = idx
            idx += 1
    return QuadForm(M, -1)


def brieskorn_plumbing(p: int, q: int) -> QuadForm:
    """Negative-definite plumbing bounded by the Brieskorn sphere
    Sigma(2,p,q); requires 2, p, q pairwise coprime (so p, q odd)."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError("need p, q >= 2 coprime")
    if p % 2 == 0 or q % 2 == 0:
        raise ValueError(f"Sigma(2,{p},{q}) is not an integer homology sphere: "
                         "indices must be pairwise coprime (see torus_cover_plumbing)")
    Q = _star_plumbing(*_seifert_data_brieskorn(2, p, q))
    assert Q.abs_det() == 1
    return Q


def torus_cover_plumbing(p: int, q: int) -> QuadForm:
    """Negative-definite plumbing bounded by M(2,p,q), the double branched
    cover of the (p,q) torus knot; allows even q (multiple singular fibers
    of equal multiplicity)."""
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise ValueError("need p, q >= 2 coprime")
    return _star_plumbing(*_seifert_data_brieskorn(2, p, q))


# ---------------------------------------------------------------------------
# form file format
# ---------------------------------------------------------------------------

def serialize_form(Q: QuadForm) -> str:
    lines = ["sign: " + ("+" if Q.sign > 0 else "-")]
    for row in Q.matrix.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_form(text: str) -> QuadForm:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or not lines[0].startswith("sign:"):
        raise ValueError("form text must start with a 'sign: +|-' header")
    s = lines[0].split(":", 1)[1].strip()
    if s not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    return QuadForm(rows, +1 if s == "+" else -1)
