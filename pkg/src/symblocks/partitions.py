"""Partitions, hooks, beta-sets, the p-abacus, and degree formulas.

A partition is a tuple of weakly decreasing positive integers; () is the
unique partition of 0.  The abacus convention is fixed once and for all:

* the beta-set of a partition with m beads lists the parts in ascending
  order (padded with zeros to length m) plus the offsets 0, 1, ..., m-1;
* m is the least multiple of p that is >= the number of parts;
* runner i (1-indexed, i = 1..p) carries the beta-entries congruent to
  i - 1 mod p, and the level of an entry b on its runner is b // p.

Pushing all beads down gives the p-core; the level sequences of the runners
give the p-quotient.  Adding one bead to every runner leaves both unchanged,
so the convention is stable under padding.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial

from .algebra import ExactnessError, Poly

Partition = tuple[int, ...]


def check_partition(pi: Partition) -> None:
    """Raise ValueError unless pi is weakly decreasing with positive parts."""
    if any(x <= 0 for x in pi):
        raise ValueError(f"parts must be positive: {pi}")
    if any(pi[i] < pi[i + 1] for i in range(len(pi) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {pi}")


def parse_partition(text: str) -> Partition:
    """Parse the list form used in reports, e.g. "[3,1]" or "[]".

    >>> parse_partition("[3,1]")
    (3, 1)
    >>> parse_partition("[]")
    ()
    """
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"not a partition literal: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    pi = tuple(int(tok) for tok in inner.split(","))
    check_partition(pi)
    return pi


def format_partition(pi: Partition) -> str:
    """Inverse of parse_partition.

    >>> format_partition((3, 1))
    '[3,1]'
    >>> format_partition(())
    '[]'
    """
    return "[" + ",".join(str(x) for x in pi) + "]"


def enumerate_partitions(n: int, max_part: int | None = None):
    """Yield all partitions of n in reverse lexicographic order.

    The first partition is (n) and the last is (1,)*n.

    >>> list(enumerate_partitions(4))
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in enumerate_partitions(n - first, first):
            yield (first,) + rest


def conjugate(pi: Partition) -> Partition:
    """Transpose of the Young diagram.

    >>> conjugate((3, 1))
    (2, 1, 1)
    >>> conjugate(conjugate((5, 3, 3, 1))) == (5, 3, 3, 1)
    True
    """
    if not pi:
        return ()
    out = []
    for j in range(1, pi[0] + 1):
        out.append(sum(1 for part in pi if part >= j))
    return tuple(out)


def is_self_dual(pi: Partition) -> bool:
    return conjugate(pi) == pi


@lru_cache(maxsize=None)
def hook_lengths(pi: Partition) -> tuple[int, ...]:
    """Multiset of hook lengths, sorted descending.

    >>> hook_lengths((2, 2))
    (3, 2, 2, 1)
    >>> hook_lengths((3, 1))
    (4, 2, 1, 1)
    """
    conj = conjugate(pi)
    out = []
    for i, row in enumerate(pi):
        for j in range(row):
            out.append((row - j) + (conj[j] - i) - 1)
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def degree(pi: Partition) -> int:
    """n! divided by the product of all hook lengths; the division is exact.

    >>> degree((2, 2))
    2
    >>> degree((5,))
    1
    """
    n = sum(pi)
    prod = 1
    for h in hook_lengths(pi):
        prod *= h
    q, r = divmod(factorial(n), prod)
    if r:
        raise ExactnessError(f"hook product does not divide {n}! for {pi}")
    return q


# ---------------------------------------------------------------------------
# beta-sets and the p-abacus


def beta_set(pi: Partition, beads: int) -> tuple[int, ...]:
    """Strictly increasing beta-set of pi with the given number of beads.

    >>> beta_set((3, 1), 4)
    (0, 1, 3, 6)
    """
    if beads < len(pi):
        raise ValueError("bead count smaller than the number of parts")
    padded = [0] * (beads - len(pi)) + list(reversed(pi))
    return tuple(part + j for j, part in enumerate(padded))


def partition_from_beta(entries) -> Partition:
    """Recover the partition from any finite set of distinct non-negative ints.

    >>> partition_from_beta((0, 1, 3, 6))
    (3, 1)
    """
    ent = sorted(entries)
    parts = [e - j for j, e in enumerate(ent)]
    return tuple(x for x in reversed(parts) if x > 0)


def _abacus_levels(pi: Partition, p: int) -> list[list[int]]:
    """Bead levels per runner under the fixed bead-count convention."""
    m = -(-len(pi) // p) * p
    runners: list[list[int]] = [[] for _ in range(p)]
    for b in beta_set(pi, m):
        runners[b % p].append(b // p)
    return runners


def core_and_quotient(
    pi: Partition, p: int
) -> tuple[Partition, tuple[Partition, ...], int]:
    """p-core, p-quotient (one component per runner) and weight of pi.

    Any modulus p >= 1 works; with a single runner the core is empty and
    the quotient is the partition itself.

    >>> core_and_quotient((3, 1), 2)
    ((), ((2,), ()), 2)
    >>> core_and_quotient((2,), 3)
    ((2,), ((), (), ()), 0)
    >>> core_and_quotient((2, 1), 1)
    ((), ((2, 1),), 3)
    """
    if p < 1:
        raise ValueError("need p >= 1")
    runners = _abacus_levels(pi, p)
    core_beta = [
        i + p * lvl for i, levels in enumerate(runners) for lvl in range(len(levels))
    ]
    core = partition_from_beta(core_beta)
    quotient = tuple(partition_from_beta(levels) for levels in runners)
    weight = sum(sum(nu) for nu in quotient)
    if sum(pi) != sum(core) + p * weight:
        raise ExactnessError("abacus bookkeeping failed")  # pragma: no cover
    return core, quotient, weight


def is_p_core(pi: Partition, p: int) -> bool:
    return all(h % p for h in hook_lengths(pi))


def combine(core: Partition, quotient: tuple[Partition, ...], p: int) -> Partition:
    """Unique partition with the given p-core and p-quotient.

    Inverse of core_and_quotient under the fixed convention.

    >>> combine((), ((2,), ()), 2)
    (3, 1)
    >>> combine((2,), ((), (), ()), 3)
    (2,)
    """
    if len(quotient) != p:
        raise ValueError(f"quotient must have exactly {p} components")
    if not is_p_core(core, p):
        raise ValueError(f"{core} has a hook length divisible by {p}")
    runners = _abacus_levels(core, p)
    counts = [len(r) for r in runners]
    # a core's beads sit at the bottom of each runner
    for i, levels in enumerate(runners):
        assert levels == list(range(counts[i]))
    # pad with full bead rows until every runner can hold its component
    extra = max(
        [len(nu) - counts[i] for i, nu in enumerate(quotient)] + [0]
    )
    if extra > 0:
        counts = [c + extra for c in counts]
    final_beta = []
    for i, nu in enumerate(quotient):
        for lvl in beta_set(nu, counts[i]):
            final_beta.append(i + p * lvl)
    return partition_from_beta(final_beta)


def runner_bead_counts(pi: Partition, p: int) -> tuple[int, ...]:
    """Beads per runner for pi's abacus under the fixed convention."""
    return tuple(len(r) for r in _abacus_levels(pi, p))


# ---------------------------------------------------------------------------
# degree polynomial for the general linear group


def b_statistic(pi: Partition) -> int:
    """sum (i-1) * pi_i over the rows (i starting at 1)."""
    return sum(i * part for i, part in enumerate(pi))


@lru_cache(maxsize=None)
def gl_degree_poly(pi: Partition) -> Poly:
    """Generic degree of the unipotent character of GL_n indexed by pi.

    The hook-type formula x**b(pi) * prod_{k<=n}(x^k - 1) / prod_h(x^l(h) - 1);
    all divisions are exact, and evaluation at 1 recovers degree(pi).

    >>> print(gl_degree_poly((1, 1)))
    x
    >>> print(gl_degree_poly((2,)))
    1
    """
    n = sum(pi)
    num = Counter(range(1, n + 1))
    num.subtract(hook_lengths(pi))
    poly = Poly.one().shift(b_statistic(pi))
    rest: list[tuple[int, int]] = []
    for k, mult in sorted(num.items()):
        if mult > 0:
            poly = poly * Poly.x_power_minus_one(k) ** mult
        elif mult < 0:
            rest.append((k, -mult))
    for k, mult in rest:
        for _ in range(mult):
            poly = poly.exact_div(Poly.x_power_minus_one(k))
    return poly
