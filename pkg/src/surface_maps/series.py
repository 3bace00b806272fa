"""Exact truncated multivariate power series and the generating series
used by the map decomposition: blossoming-tree series, weighted Motzkin
walk series, interval products, and a rational-function probe.

Coefficients are exact rationals throughout; truncation is by total
degree.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, isqrt

from .errors import BadRange, InsufficientTruncation, NonContractive, SqrtUndefined


class SeriesRing:
    """A polynomial ring with named variables, truncated by total degree."""

    def __init__(self, variables, trunc):
        self.variables = tuple(variables)
        self.trunc = int(trunc)
        self.index = {v: i for i, v in enumerate(self.variables)}

    def zero(self):
        return TruncatedSeries(self, {})

    def one(self):
        return self.const(1)

    def const(self, q):
        q = Fraction(q)
        if q == 0:
            return self.zero()
        return TruncatedSeries(self, {(0,) * len(self.variables): q})

    def var(self, name, power=1):
        e = [0] * len(self.variables)
        e[self.index[name]] = power
        return TruncatedSeries(self, {tuple(e): Fraction(1)})

    def monomial(self, exponents, coeff=1):
        return TruncatedSeries(self, {tuple(exponents): Fraction(coeff)})

    def with_trunc(self, trunc):
        return SeriesRing(self.variables, trunc)

    def __eq__(self, other):
        return (
            isinstance(other, SeriesRing)
            and self.variables == other.variables
            and self.trunc == other.trunc
        )

    def __repr__(self):
        return "SeriesRing(%r, trunc=%d)" % (self.variables, self.trunc)


class TruncatedSeries:
    """Element of a SeriesRing: exponent vector -> nonzero Fraction."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        t = ring.trunc
        self.coeffs = {
            e: q for e, q in coeffs.items() if q != 0 and sum(e) <= t
        }

    # -- ring operations -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            if other.ring.variables != self.ring.variables:
                raise ValueError("mixed variable registries")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for e, q in other.coeffs.items():
            out[e] = out.get(e, 0) + q
        return TruncatedSeries(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.ring, {e: -q for e, q in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            q0 = Fraction(other)
            return TruncatedSeries(
                self.ring, {e: q * q0 for e, q in self.coeffs.items()}
            )
        other = self._coerce(other)
        t = self.ring.trunc
        out = {}
        small, big = self.coeffs, other.coeffs
        if len(small) > len(big):
            small, big = big, small
        for e1, q1 in small.items():
            d1 = sum(e1)
            for e2, q2 in big.items():
                if d1 + sum(e2) > t:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + q1 * q2
        return TruncatedSeries(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            return self.reciprocal() ** (-n)
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.ring.variables == other.ring.variables and (
                self.coeffs == other.coeffs
            )
        return self.coeffs == self.ring.const(other).coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- structure -----------------------------------------------------------

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0,) * len(self.ring.variables), Fraction(0))

    def coefficient(self, **exponents) -> Fraction:
        e = [0] * len(self.ring.variables)
        for v, k in exponents.items():
            e[self.ring.index[v]] = k
        return self.coeffs.get(tuple(e), Fraction(0))

    def valuation(self) -> int:
        if not self.coeffs:
            return self.ring.trunc + 1
        return min(sum(e) for e in self.coeffs)

    def truncate(self, trunc) -> "TruncatedSeries":
        ring = self.ring.with_trunc(trunc)
        return TruncatedSeries(ring, self.coeffs)

    def map_coefficients(self, f):
        return TruncatedSeries(self.ring, {e: f(q) for e, q in self.coeffs.items()})

    # -- analytic-style operations --------------------------------------------

    def reciprocal(self) -> "TruncatedSeries":
        c = self.constant_term()
        if c == 0:
            raise ZeroDivisionError("reciprocal of a series without constant term")
        u = self.ring.one() - self * (Fraction(1) / c)
        out = self.ring.one()
        power = self.ring.one()
        for _ in range(self.ring.trunc):
            power = power * u
            if not power.coeffs:
                break
            out = out + power
        return out * (Fraction(1) / c)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.reciprocal()
        return self * (Fraction(1) / Fraction(other))

    def divide_exact(self, other) -> "TruncatedSeries":
        """Exact division when ``other`` has a zero constant term.

        Writes other = m*(c + higher) with m the minimal monomials,
        only valid here for a single-monomial valuation; used to peel
        monomial factors such as ``4 t t'`` from even series.  The
        result is exact to trunc - val(other); asserts divisibility.
        """
        ov = other.valuation()
        mono = [e for e in other.coeffs if sum(e) == ov]
        if len(mono) != 1:
            raise ZeroDivisionError("divisor valuation is not a single monomial")
        m = mono[0]
        c = other.coeffs[m]
        shifted = {}
        for e, q in other.coeffs.items():
            e2 = tuple(a - b for a, b in zip(e, m))
            if min(e2) < 0:
                raise ZeroDivisionError("divisor is not monomial-regular")
            shifted[e2] = q
        num = {}
        for e, q in self.coeffs.items():
            e2 = tuple(a - b for a, b in zip(e, m))
            if min(e2) < 0:
                raise ZeroDivisionError("series not divisible by monomial")
            num[e2] = q
        ring2 = self.ring.with_trunc(self.ring.trunc - ov)
        return TruncatedSeries(ring2, num) / TruncatedSeries(ring2, shifted)

    def sqrt(self) -> "TruncatedSeries":
        c = self.constant_term()
        if c <= 0:
            raise SqrtUndefined("constant term must be a positive rational square")
        cn, cd = c.numerator, c.denominator
        rn, rd = isqrt(cn), isqrt(cd)
        if rn * rn != cn or rd * rd != cd:
            raise SqrtUndefined("constant term is not a rational square")
        r = Fraction(rn, rd)
        u = self * (Fraction(1) / c) - self.ring.one()
        out = self.ring.zero()
        power = self.ring.one()
        for k in range(self.ring.trunc + 1):
            coef = Fraction((-1) ** ((k - 1) % 2) * comb(2 * k, k), 4**k * (2 * k - 1))
            out = out + power * coef
            power = power * u
            if not power.coeffs:
                break
        return out * r

    def substitute(self, ring=None, **images) -> "TruncatedSeries":
        """Substitute series for variables; unnamed variables map to
        the same-named variable of the target ring."""
        if ring is None:
            ring = next(iter(images.values())).ring if images else self.ring
        base = {}
        for v in self.ring.variables:
            if v in images:
                base[v] = images[v]
            else:
                base[v] = ring.var(v)
        out = ring.zero()
        cache = {}

        def power_of(v, k):
            if k == 0:
                return ring.one()
            if (v, k) not in cache:
                cache[(v, k)] = power_of(v, k - 1) * base[v]
            return cache[(v, k)]

        for e, q in sorted(self.coeffs.items()):
            term = ring.const(q)
            for v, k in zip(self.ring.variables, e):
                if k:
                    term = term * power_of(v, k)
            out = out + term
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e in sorted(self.coeffs, key=lambda e: (sum(e), e)):
            q = self.coeffs[e]
            mono = "*".join(
                "%s^%d" % (v, k) if k > 1 else v
                for v, k in zip(self.ring.variables, e)
                if k
            )
            bits.append("%s%s" % (q, "*" + mono if mono else ""))
        return " + ".join(bits)


def fixed_point_solve(ring, equations, n_unknowns, max_iter=None):
    """Solve x_i = F_i(x) by iteration from zero.

    ``equations(xs)`` returns the new tuple of series.  Requires the
    system to be a contraction in the degree filtration; raises
    NonContractive if iteration has not stabilized after trunc+2 steps.
    """
    xs = tuple(ring.zero() for _ in range(n_unknowns))
    limit = (ring.trunc + 2) if max_iter is None else max_iter
    for _ in range(limit):
        nxt = tuple(equations(xs))
        if all(a == b for a, b in zip(nxt, xs)):
            return xs
        xs = nxt
    raise NonContractive("fixed point did not stabilize within the filtration")


def delta(i, j, x, y):
    """Product of x over even and y over odd integers in [i, j)."""
    if i > j:
        raise BadRange("delta requires i <= j")
    out = x.ring.one()
    for k in range(i, j):
        out = out * (x if k % 2 == 0 else y)
    return out


# -- blossoming tree series ---------------------------------------------------


def tree_series_four_valent(ring, zb="x", zw="y"):
    """(T_black, T_white): 4-valent blossoming tree series.

    T_black = zb + T_black^2 + 2 T_white T_black, and symmetrically;
    the empty tree counts with its stem color weight.
    """
    zbs, zws = ring.var(zb), ring.var(zw)

    def eqs(xs):
        tb, tw = xs
        return (zbs + tb * tb + 2 * tw * tb, zws + tw * tw + 2 * tw * tb)

    return fixed_point_solve(ring, eqs, 2)


def _compositions_bounded(k, total):
    """All (i_1..i_k) of nonnegative ints with sum <= total."""
    if k == 0:
        if total >= 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions_bounded(k - 1, total - first):
            yield (first,) + rest


def tree_series_general(ring, max_k, x="x", y="y", z_prefix="z"):
    """(T_black, T_white) with one z_k per vertex of degree 2k, k <= max_k.

    The fixed-point system sums, for each root degree 2k, over the
    placements of the k-1 non-root buds between the k subtree slots;
    the parity of buds seen so far swaps the subtree's color argument.
    """
    xs_, ys_ = ring.var(x), ring.var(y)

    def eqs(ts):
        A, B = ts  # A = T(z, x, y), B = T(z, y, x)
        outA = xs_
        outB = ys_
        for k in range(1, max_k + 1):
            zk = ring.var("%s%d" % (z_prefix, k))
            sA = ring.zero()
            sB = ring.zero()
            for comp in _compositions_bounded(k, k - 1):
                termA = ring.one()
                termB = ring.one()
                acc = 0
                for j in range(1, k + 1):
                    acc += comp[j - 1]
                    sign = (-1) ** (j - 1 + acc)
                    termA = termA * (A if sign == 1 else B)
                    termB = termB * (B if sign == 1 else A)
                sA = sA + termA
                sB = sB + termB
            outA = outA + zk * sA
            outB = outB + zk * sB
        return (outA, outB)

    return fixed_point_solve(ring, eqs, 2)


# -- Motzkin walk series -------------------------------------------------------


def motzkin_ring(trunc):
    return SeriesRing(("tb", "tw"), trunc)


def motzkin_series(ring):
    """(D_black, D_white, B, D, a) by the decomposition fixed point.

    D_black counts primitive walks (increment -1, step heights >= 0)
    with horizontal weight 2(tb+tw) and down/up steps weighted tb at
    even height, tw at odd; D_white swaps the step weights; B counts
    bridges.  D = D_black/tb = D_white/tw, and a is the square root
    appearing in the closed forms.
    """
    pad = ring.with_trunc(ring.trunc + 1)
    tb, tw = pad.var("tb"), pad.var("tw")
    h = 2 * (tb + tw)

    def eqs(xs):
        db, dw, b = xs
        return (
            tb + h * db + tb * dw * db,
            tw + h * dw + tw * db * dw,
            pad.one() + h * b + 2 * tb * dw * b,
        )

    db, dw, b = fixed_point_solve(pad, eqs, 3)
    d = db.divide_exact(tb)
    d2 = dw.divide_exact(tw)
    if d != d2:
        raise ArithmeticError("D_black/tb != D_white/tw")
    db, dw, b, d = (s.truncate(ring.trunc) for s in (db, dw, b, d))
    a = closed_form_a(ring)
    return db, dw, b, d, a


def closed_form_a(ring):
    tb, tw = ring.var("tb"), ring.var("tw")
    return ((1 - 2 * tb - 2 * tw) ** 2 - 4 * tb * tw).sqrt()


def motzkin_series_closed(ring):
    """(D_black, D_white, B, D) from the closed forms with the series
    square root; exact to the ring truncation."""
    pad = ring.with_trunc(ring.trunc + 2)
    tb, tw = pad.var("tb"), pad.var("tw")
    a = closed_form_a(pad)
    num = 1 - 2 * (tb + tw) - a
    d = num.divide_exact(2 * tb * tw).truncate(ring.trunc)
    b = closed_form_a(ring).reciprocal()
    tb0, tw0 = ring.var("tb"), ring.var("tw")
    return (tb0 * d).truncate(ring.trunc), (tw0 * d).truncate(ring.trunc), b, d


def motzkin_series_direct(ring):
    """(D_black, D_white, B) by explicit weighted walk enumeration.

    Dynamic programming over walk length; every step carries total
    degree >= 1 so length is bounded by the truncation.
    """
    n = ring.trunc
    tb, tw = ring.var("tb"), ring.var("tw")
    h = 2 * (tb + tw)

    def step_down_weight(height, swap):
        even = height % 2 == 0
        if swap:
            even = not even
        return tb if even else tw

    # primitive walks: nonnegative step heights, single visit to -1
    def primitive(swap):
        out = ring.zero()
        state = {0: ring.one()}
        for _ in range(n):
            out = out + state.get(0, ring.zero()) * step_down_weight(0, swap)
            nxt = {}

            def put(hh, s):
                if s.coeffs:
                    nxt[hh] = nxt.get(hh, ring.zero()) + s

            for hh, s in state.items():
                put(hh, s * h)
                put(hh + 1, s * step_down_weight(hh, swap))
                if hh >= 1:
                    put(hh - 1, s * step_down_weight(hh, swap))
            state = nxt
            if not state:
                break
        return out

    # bridges: increment 0, heights unconstrained
    bout = ring.one()
    state = {0: ring.one()}
    for _ in range(n):
        nxt = {}

        def put(hh, s):
            if s.coeffs:
                nxt[hh] = nxt.get(hh, ring.zero()) + s

        for hh, s in state.items():
            w = tb if hh % 2 == 0 else tw
            put(hh, s * h)
            put(hh + 1, s * w)
            put(hh - 1, s * w)
        state = nxt
        bout = bout + state.get(0, ring.zero())
        if not state:
            break
    return primitive(False), primitive(True), bout


# -- rational reconstruction ---------------------------------------------------


def _monomials_upto(nvars, deg):
    if nvars == 0:
        yield ()
        return
    for first in range(deg + 1):
        for rest in _monomials_upto(nvars - 1, deg - first):
            yield (first,) + rest


def rationality_probe(series, deg_p, deg_q, margin=2):
    """Search P, Q with Q(0)=1, deg P <= deg_p, deg Q <= deg_q and
    Q*series = P exactly up to the series truncation.

    Returns (P, Q) as TruncatedSeries (polynomials), or None when no
    witness exists at these degrees.  The truncation must exceed
    deg_p + deg_q + margin, so that a found witness is meaningful.
    """
    ring = series.ring
    n = ring.trunc
    if n < deg_p + deg_q + margin:
        raise InsufficientTruncation(
            "truncation %d too small for degrees (%d, %d)" % (n, deg_p, deg_q)
        )
    nv = len(ring.variables)
    p_mons = [e for e in _monomials_upto(nv, deg_p)]
    q_mons = [e for e in _monomials_upto(nv, deg_q) if sum(e) > 0]
    rows = [e for e in _monomials_upto(nv, n)]
    # unknowns: q coefficients then p coefficients
    cols = len(q_mons) + len(p_mons)
    p_index = {e: len(q_mons) + i for i, e in enumerate(p_mons)}
    matrix = []
    rhs = []
    for r in rows:
        row = [Fraction(0)] * cols
        for i, qm in enumerate(q_mons):
            diff = tuple(a - b for a, b in zip(r, qm))
            if min(diff) >= 0:
                row[i] = series.coeffs.get(diff, Fraction(0))
        if r in p_index:
            row[p_index[r]] = Fraction(-1)
        matrix.append(row)
        rhs.append(-series.coeffs.get(r, Fraction(0)))
    sol = _solve_exact(matrix, rhs, cols)
    if sol is None:
        return None
    q = TruncatedSeries(ring, {(0,) * nv: Fraction(1)}) + TruncatedSeries(
        ring, {e: sol[i] for i, e in enumerate(q_mons)}
    )
    p = TruncatedSeries(ring, {e: sol[p_index[e]] for e in p_mons})
    if not (q * series - p).coeffs == {}:
        return None
    return p, q


def _solve_exact(matrix, rhs, cols):
    """Gaussian elimination over Q; None when inconsistent."""
    rows = len(matrix)
    aug = [list(matrix[i]) + [rhs[i]] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if aug[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if aug[i][cols] != 0:
            return None
    sol = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][cols]
    return sol
