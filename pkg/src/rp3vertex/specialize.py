"""Exact Schur / skew Schur / Macdonald evaluations at geometric-tail
alphabets.

An alphabet here is a finite prefix of monomials followed by an infinite
geometric tail whose ratio is a pure power of one variable, which keeps
every complete homogeneous value an exact rational function.
"""

from .partitions import EMPTY
from .ring import (Laurent, QSeries, RationalFunction, RF_ONE, RF_ZERO,
                   canonical_series)


class Alphabet:
    """prefix monomials then tail_start * tail_ratio^k for k >= 0.

    Monomials are doubled (q-exp, t-exp) pairs with unit coefficient; the
    ratio must be a positive pure power of q or t so tails have closed forms.
    """

    __slots__ = ("prefix", "tail_start", "tail_ratio")

    def __init__(self, prefix, tail_start, tail_ratio):
        rq, rt = tail_ratio
        if not ((rq > 0 and rt == 0) or (rq == 0 and rt > 0)):
            raise ValueError(f"tail ratio must be a positive pure power, got {tail_ratio}")
        object.__setattr__(self, "prefix", tuple(prefix))
        object.__setattr__(self, "tail_start", tuple(tail_start))
        object.__setattr__(self, "tail_ratio", (rq, rt))

    def __setattr__(self, name, value):
        raise AttributeError("Alphabet is immutable")

    def __eq__(self, other):
        return (isinstance(other, Alphabet)
                and self.prefix == other.prefix
                and self.tail_start == other.tail_start
                and self.tail_ratio == other.tail_ratio)

    def __hash__(self):
        return hash((self.prefix, self.tail_start, self.tail_ratio))

    def __repr__(self):
        return f"Alphabet(prefix={self.prefix}, start={self.tail_start}, ratio={self.tail_ratio})"

    @property
    def main_var(self):
        return "q" if self.tail_ratio[0] else "t"

    def letter(self, i):
        """Doubled exponent pair of the 1-based i-th letter."""
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        k = i - 1 - len(self.prefix)
        sq, st = self.tail_start
        rq, rt = self.tail_ratio
        return (sq + k * rq, st + k * rt)


def principal(main, shift=EMPTY, shift_var=None):
    """The alphabet main^(-rho) shifted by a partition in shift_var.

    principal('q', chi) is {q^(1/2 - chi_1), q^(3/2 - chi_2), ...}; passing
    shift_var='q' with main 't' builds t^(-rho) q^(-chi), and so on.
    """
    if main not in ("q", "t"):
        raise ValueError("main variable must be 'q' or 't'")
    if shift_var is None:
        shift_var = main
    prefix = []
    for i, part in enumerate(shift.parts, 1):
        main_e = 2 * i - 1
        shift_e = -2 * part
        if shift_var == main:
            e = (main_e + shift_e, 0) if main == "q" else (0, main_e + shift_e)
        else:
            e = (shift_e, main_e) if main == "t" else (main_e, shift_e)
        prefix.append(e)
    ell = len(shift.parts)
    start = (2 * ell + 1, 0) if main == "q" else (0, 2 * ell + 1)
    ratio = (2, 0) if main == "q" else (0, 2)
    return Alphabet(prefix, start, ratio)


_H_CACHE = {}


def complete_homogeneous(k, alphabet):
    """h_k of the alphabet, exact; the tail uses the closed geometric form."""
    if k < 0:
        return RF_ZERO
    if k == 0:
        return RF_ONE
    key = (alphabet, k)
    cached = _H_CACHE.get(key)
    if cached is not None:
        return cached

    # prefix part: iteratively extend h_0..h_k one letter at a time
    hs = [Laurent.const(1)] + [Laurent() for _ in range(k)]
    for (eq, et) in alphabet.prefix:
        for j in range(1, k + 1):
            hs[j] = hs[j] + hs[j - 1].shift(eq, et)

    sq, st = alphabet.tail_start
    rq, rt = alphabet.tail_ratio
    terms = []
    for j in range(k + 1):
        if hs[j].is_zero():
            continue
        m = k - j
        num = hs[j].shift(sq * m, st * m)
        bag = {}
        for i in range(1, m + 1):
            f = Laurent({(0, 0): 1, (rq * i, rt * i): -1})
            bag[f] = bag.get(f, 0) + 1
        terms.append(RationalFunction._make(num, bag))
    value = RationalFunction.sum_of(terms)
    _H_CACHE.setdefault(key, value)
    return value


_SKEW_CACHE = {}


def skew_schur(lam, eta, alphabet):
    """s_{lam/eta} at the alphabet via the Jacobi-Trudi determinant.

    Returns 0 when eta is not contained in lam, 1 for the empty shape.
    """
    if not lam.contains(eta):
        return RF_ZERO
    n = len(lam)
    if n == 0:
        return RF_ONE
    key = (lam, eta, alphabet)
    cached = _SKEW_CACHE.get(key)
    if cached is not None:
        return cached

    rows = [[complete_homogeneous(lam.part(i) - eta.part(j) - i + j, alphabet)
             for j in range(1, n + 1)] for i in range(1, n + 1)]
    value = _det(rows)
    _SKEW_CACHE.setdefault(key, value)
    return value


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    memo = {}

    def minor(r, cols):
        if r == n:
            return RF_ONE
        got = memo.get(cols)
        if got is not None:
            return got
        terms = []
        sign = 1
        for idx, j in enumerate(_bits(cols)):
            entry = rows[r][j]
            if not entry.is_zero():
                sub = minor(r + 1, cols & ~(1 << j))
                term = entry * sub
                terms.append(term if sign > 0 else -term)
            sign = -sign
        value = RationalFunction.sum_of(terms)
        memo[cols] = value
        return value

    return minor(0, (1 << n) - 1)


def _bits(mask):
    j = 0
    while mask:
        if mask & 1:
            yield j
        mask >>= 1
        j += 1


class OracleTruncationError(ValueError):
    """The truncated alphabet cannot certify the requested order."""


def schur_tableau_oracle(lam, eta, alphabet, order, letters=None):
    """Brute-force skew Schur series: sum over semistandard tableaux with
    entries in a truncated alphabet, as a series in the alphabet's tail
    variable to the given order.

    Only a verification oracle; independent of the determinant path.
    """
    if not lam.contains(eta):
        return QSeries(Laurent.const(1), {}, 2 * order, alphabet.main_var)
    ncells = lam.size - eta.size
    if ncells == 0:
        return QSeries(Laurent.const(1), {0: {0: 1}}, 2 * order, alphabet.main_var)

    main_q = alphabet.main_var == "q"

    def main_exp(e):
        return e[0] if main_q else e[1]

    # smallest possible single-cell contribution, in doubled units
    probe = [alphabet.letter(i) for i in range(1, len(alphabet.prefix) + 2)]
    min_e = min(main_exp(e) for e in probe)

    # weight of the greedy column-strict filling: an upper bound on the
    # minimal tableau weight, so series orders are counted from there
    prev = {}
    greedy = 0
    for i in range(1, len(lam) + 1):
        left = 1
        nxt = {}
        for j in range(eta.part(i) + 1, lam.part(i) + 1):
            letter = max(left, prev.get(j, 0) + 1)
            greedy += main_exp(alphabet.letter(letter))
            nxt[j] = letter
            left = letter
        prev = nxt
    bound = greedy + 2 * order

    def enough(count):
        nxt_e = main_exp(alphabet.letter(count + 1))
        return nxt_e + (ncells - 1) * min_e > bound

    if letters is None:
        letters = max(len(alphabet.prefix) + 1, 1)
        while not enough(letters):
            letters += 1
    elif not enough(letters):
        raise OracleTruncationError(
            f"{letters} letters cannot certify order {order}; more letters needed")

    letter_exps = [alphabet.letter(i) for i in range(1, letters + 1)]
    nrows = len(lam)
    slices = {}

    def fill(row, prev_row_entries, acc_q, acc_t):
        if row == nrows:
            m, o = (acc_q, acc_t) if main_q else (acc_t, acc_q)
            slices.setdefault(m, {})
            slices[m][o] = slices[m].get(o, 0) + 1
            return
        lo, hi = eta.part(row + 1), lam.part(row + 1)
        width = hi - lo

        def fill_row(col, min_letter, entries, acc_q2, acc_t2):
            if col == width:
                fill(row + 1, entries, acc_q2, acc_t2)
                return
            j = lo + col + 1  # absolute column index
            floor = min_letter
            above = prev_row_entries.get(j)
            if above is not None:
                floor = max(floor, above + 1)
            for letter in range(floor, letters + 1):
                eq, et = letter_exps[letter - 1]
                nq, nt = acc_q2 + eq, acc_t2 + et
                me = nq if main_q else nt
                if me + (ncells_left(row, col) - 1) * min_e > bound:
                    if letter > len(alphabet.prefix):
                        break  # tail letters only grow from here on
                    continue
                fill_row(col + 1, letter, {**entries, j: letter}, nq, nt)

        if width == 0:
            fill(row + 1, {}, acc_q, acc_t)
        else:
            fill_row(0, 1, {}, acc_q, acc_t)

    def ncells_left(row, col):
        done = sum(lam.part(i) - eta.part(i) for i in range(1, row + 1)) + col
        return ncells - done

    fill(0, {}, 0, 0)
    series = canonical_series(slices, 2 * order, alphabet.main_var)
    if alphabet.main_var == "t":
        series = QSeries(series.prefactor.swap_qt(), series.coeffs,
                         series.order, "t")
    return series


def macdonald_tilde_z(nu, first="t"):
    """Refined box-counting function: the hook product over the diagram with
    (first, second) = (t, q) or (q, t) argument order.

    The first argument pairs with the column direction (leg + 1) and the
    second with the row direction (arm); at equal arguments this is the
    plain hook product.
    """
    bag = {}
    for (i, j) in nu.cells():
        a = nu.arm(i, j)
        l = nu.leg(i, j)
        if first == "t":
            e = (2 * a, 2 * (l + 1))      # t^(l+1) q^a
        else:
            e = (2 * (l + 1), 2 * a)      # q^(l+1) t^a
        f = Laurent({(0, 0): 1, e: -1})
        bag[f] = bag.get(f, 0) + 1
    return RationalFunction._make(Laurent.const(1), bag)


def macdonald_p_at_rho(nu, swap=False):
    """Principal Macdonald value P_{nu^t}(t^(-rho); q, t) through the hook
    identity; swap exchanges the roles of t and q throughout."""
    n2 = nu.norm_sq
    if swap:
        return RationalFunction.monomial(n2, 0) * macdonald_tilde_z(nu, "q")
    return RationalFunction.monomial(0, n2) * macdonald_tilde_z(nu, "t")
