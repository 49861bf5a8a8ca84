"""Signed set partitions and permutation pairs with their statistics.

Partitions of ``[n]_2 = {1_1, 1_2, ..., n_1, n_2}`` are grown by inserting
the two copies of ``n`` into a partition of ``[n-1]_2``, which reaches every
valid object exactly once.  Permutations are brute-forced with
:func:`itertools.permutations` and bucketed by their set of cycle minima.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator

from .exactscalars import Laurent

__all__ = [
    "SignedPartition",
    "IndexedPermutation",
    "records",
    "b_code_and_sorting",
    "enumerate_js_partitions",
    "enumerate_perm_pairs",
    "enumerate_double_signed",
    "enumerate_pairs_zero",
    "iter_pairs_zero",
    "js_partition_polynomial",
    "perm_pair_polynomial",
    "double_signed_polynomial",
    "pairs_zero_polynomial",
    "inversions",
]

Symbol = tuple[int, int]  # (number, subscript)


def _fmt_symbol(s: Symbol) -> str:
    return f"{s[0]}_{s[1]}"


def _fmt_block(block, tag: str = "") -> str:
    return "{" + ",".join(_fmt_symbol(s) for s in sorted(block)) + "}" + tag


@dataclass(frozen=True)
class SignedPartition:
    """Zero block(s) followed by nonzero blocks in increasing order of minima.

    ``zero2`` is ``None`` for Jacobi-Stirling partitions and the second zero
    block (subscript-2 symbols only) for double signed partitions.
    """

    n: int
    zero: frozenset
    blocks: tuple
    zero2: frozenset | None = None

    @property
    def k(self) -> int:
        return len(self.blocks)

    def canonical(self) -> str:
        parts = [_fmt_block(self.zero, "_0")]
        if self.zero2 is not None:
            parts.append(_fmt_block(self.zero2, "_0'"))
        parts.extend(_fmt_block(b) for b in self.blocks)
        return " ".join(parts)

    __str__ = canonical

    def zero_count(self) -> int:
        """Subscript-1 symbols in the zero block."""
        return sum(1 for _, s in self.zero if s == 1)

    def zero2_count(self) -> int:
        return 0 if self.zero2 is None else len(self.zero2)

    def check(self) -> None:
        """Raise ValueError unless the structural rules hold."""
        seen = set(self.zero) | set(self.zero2 or ())
        for b in self.blocks:
            seen |= b
        want = {(m, s) for m in range(1, self.n + 1) for s in (1, 2)}
        total = len(self.zero) + len(self.zero2 or ()) + sum(len(b) for b in self.blocks)
        if seen != want or total != 2 * self.n:
            raise ValueError("blocks do not partition [n]_2")
        for blk in (self.zero, self.zero2 or frozenset()):
            if len({m for m, _ in blk}) != len(blk):
                raise ValueError("zero block holds both copies of a number")
        if self.zero2 and any(s != 2 for _, s in self.zero2):
            raise ValueError("second zero block holds a subscript-1 symbol")
        mins = []
        for b in self.blocks:
            lo = min(m for m, _ in b)
            mins.append(lo)
            if (lo, 1) not in b or (lo, 2) not in b:
                raise ValueError("block misses a copy of its minimum")
            nums = [m for m, _ in b if m != lo]
            if len(nums) != len(set(nums)):
                raise ValueError("block holds both copies of a non-minimal number")
        if mins != sorted(mins):
            raise ValueError("blocks are not ordered by minima")


def _insert_all(parts, m: int, double: bool):
    """All ways to add m_1, m_2 to each partition in ``parts``."""
    for zero, zero2, blocks in parts:
        yield zero, zero2, blocks + (frozenset({(m, 1), (m, 2)}),)
        k = len(blocks)
        # targets: -1 -> zero block, -2 -> second zero block, j -> blocks[j]
        one_targets = [-1] + list(range(k))
        two_targets = [-1] + ([-2] if double else []) + list(range(k))
        for t1 in one_targets:
            for t2 in two_targets:
                if t1 == t2:
                    continue
                z, z2, bl = set(zero), set(zero2) if zero2 is not None else None, list(blocks)
                for sym, t in (((m, 1), t1), ((m, 2), t2)):
                    if t == -1:
                        z.add(sym)
                    elif t == -2:
                        z2.add(sym)
                    else:
                        bl[t] = bl[t] | {sym}
                yield frozenset(z), (frozenset(z2) if z2 is not None else None), tuple(bl)


@lru_cache(maxsize=None)
def _partitions(n: int, double: bool) -> tuple:
    if n == 0:
        return ((frozenset(), frozenset() if double else None, ()),)
    return tuple(_insert_all(_partitions(n - 1, double), n, double))


def inversions(p: SignedPartition) -> tuple[int, int]:
    """``(inv_1, inv_2)``.

    A type-1 inversion pairs a subscript-1 symbol ``b_1`` in a nonzero block
    with a later block holding some ``c_1 < b_1``.  A type-2 inversion pairs
    ``b_2`` in any block (zero block included) with a later block holding
    some ``c_2 < b_2`` and not holding ``b_1``.
    """
    blocks = [p.zero] + list(p.blocks)
    mins1 = [min((m for m, s in b if s == 1), default=None) for b in blocks]
    mins2 = [min((m for m, s in b if s == 2), default=None) for b in blocks]
    inv1 = inv2 = 0
    for i, bi in enumerate(blocks):
        for b, s in bi:
            for j in range(i + 1, len(blocks)):
                if s == 1:
                    if i >= 1 and mins1[j] is not None and mins1[j] < b:
                        inv1 += 1
                elif mins2[j] is not None and mins2[j] < b and (b, 1) not in blocks[j]:
                    inv2 += 1
    return inv1, inv2


def _js_objects(n: int, k: int) -> list[SignedPartition]:
    out = []
    for zero, _, blocks in _partitions(n, False):
        if len(blocks) == k:
            out.append(SignedPartition(n, zero, tuple(sorted(blocks, key=lambda b: min(b)))))
    return out


def enumerate_js_partitions(n: int, k: int, i: int | None = None) -> list[tuple[SignedPartition, dict]]:
    """Jacobi-Stirling k-partitions of [n]_2 whose zero block has i subscript-1 symbols.

    Each item is ``(partition, {"inv1", "inv2", "inv", "i"})``.
    """
    out = []
    for p in _js_objects(n, k):
        zi = p.zero_count()
        if i is not None and zi != i:
            continue
        a, b = inversions(p)
        out.append((p, {"inv1": a, "inv2": b, "inv": b - a, "i": zi}))
    return out


def js_partition_polynomial(n: int, k: int, i: int) -> Laurent:
    """Sum of ``q^inv`` over the partitions of :func:`enumerate_js_partitions`."""
    terms: dict[int, int] = defaultdict(int)
    for _, st in enumerate_js_partitions(n, k, i):
        terms[st["inv"]] += 1
    return Laurent("q", terms)


def enumerate_double_signed(n: int, k: int) -> list[tuple[SignedPartition, dict]]:
    """Double signed k-partitions of [n]_2 with ``s`` and ``t`` attached."""
    out = []
    for zero, zero2, blocks in _partitions(n, True):
        if len(blocks) != k:
            continue
        p = SignedPartition(n, zero, tuple(sorted(blocks, key=lambda b: min(b))), zero2)
        out.append((p, {"s": p.zero_count(), "t": p.zero2_count()}))
    return out


def _zw(terms: dict[tuple[int, int], int]) -> Laurent:
    by_z: dict[int, dict[int, int]] = defaultdict(dict)
    for (s, t), c in terms.items():
        by_z[s][t] = by_z[s].get(t, 0) + c
    return Laurent("z", {s: Laurent("w", d) for s, d in by_z.items()})


def double_signed_polynomial(n: int, k: int) -> Laurent:
    terms: dict = defaultdict(int)
    for _, st in enumerate_double_signed(n, k):
        terms[(st["s"], st["t"])] += 1
    return _zw(terms)


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def records(word) -> tuple[list, int, int]:
    """Left-to-right minima of ``word``: ``(records, rec, rec - 1)``."""
    word = list(word)
    if len(set(word)) != len(word):
        raise ValueError("word letters must be distinct")
    recs = []
    for letter in word:
        if not recs or letter < recs[-1]:
            recs.append(letter)
    return recs, len(recs), len(recs) - 1


@dataclass(frozen=True)
class IndexedPermutation:
    """Bijection of ``{start, ..., n}``; ``images[j - start]`` is the image of j."""

    images: tuple
    start: int = 1

    def __post_init__(self):
        dom = list(range(self.start, self.start + len(self.images)))
        if sorted(self.images) != dom:
            raise ValueError(f"{self.images} is not a bijection of {dom}")

    @classmethod
    def from_cycles(cls, cycles, n: int, start: int = 1) -> "IndexedPermutation":
        img = {j: j for j in range(start, n + 1)}
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(tuple(img[j] for j in range(start, n + 1)), start)

    @property
    def n(self) -> int:
        return self.start + len(self.images) - 1

    def __call__(self, j: int) -> int:
        return self.images[j - self.start]

    def inverse_map(self) -> dict:
        return {self(j): j for j in range(self.start, self.n + 1)}

    def cycles(self) -> list[tuple]:
        seen = set()
        out = []
        for j in range(self.start, self.n + 1):
            if j in seen:
                continue
            cyc = [j]
            seen.add(j)
            nxt = self(j)
            while nxt != j:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def canonical(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    __str__ = canonical

    def positive_minima(self) -> frozenset:
        """Numbers j >= 1 that are the least positive element of their cycle."""
        out = set()
        for c in self.cycles():
            pos = [j for j in c if j >= 1]
            if pos:
                out.add(min(pos))
        return frozenset(out)

    def zero_word(self) -> list[int]:
        """``sigma(0), sigma^2(0), ...`` up to (not including) the return to 0."""
        if self.start != 0:
            raise ValueError("zero word needs a permutation of [n]_0")
        w = []
        j = self(0)
        while j != 0:
            w.append(j)
            j = self(j)
        return w


def b_code_and_sorting(sigma: IndexedPermutation) -> tuple[tuple, int, int | None]:
    """B-code, its sorting index, and (for [n]_0) the modified code and index.

    ``b_i`` is ``sigma^{-k}(i)`` for the least ``k >= 1`` with
    ``sigma^{-k}(i) <= i``.  On [n]_0 the modified code uses ``b'_i = i``
    when ``sigma^{-1}(i) = 0`` and ``b'_i = i - 1`` when the backward walk
    from ``i`` first lands on 0 after passing larger letters.  The second
    rule is what makes the pair statistic follow the first-kind recurrence
    once the zero word has two or more records; for ``i = 1`` it agrees
    with taking ``b'_1 = 0``.  On [n] the third entry is ``None``.
    """
    if not isinstance(sigma, IndexedPermutation):
        sigma = IndexedPermutation(tuple(sigma))
    inv = sigma.inverse_map()
    code = []
    for i in range(1, sigma.n + 1):
        j = inv[i]
        while j > i:
            j = inv[j]
        code.append(j)
    sor = sum(i - b for i, b in zip(range(1, sigma.n + 1), code))
    if sigma.start != 0:
        return tuple(code), sor, None
    code0 = []
    for i, b in zip(range(1, sigma.n + 1), code):
        if inv[i] == 0:
            code0.append(i)
        elif b == 0:
            code0.append(i - 1)
        else:
            code0.append(b)
    sor0 = sum(i - b for i, b in zip(range(1, sigma.n + 1), code0))
    return tuple(code0), sum(i - b for i, b in zip(range(1, sigma.n + 1), code)), sor0


@lru_cache(maxsize=None)
def _perms(n: int, start: int) -> tuple:
    return tuple(IndexedPermutation(p, start) for p in permutations(range(start, n + 1)))


def enumerate_perm_pairs(n: int, k: int, i: int | None = None) -> list[tuple[IndexedPermutation, IndexedPermutation, dict]]:
    """Pairs (sigma on [n]_0, tau on [n]) with k cycles each, 0 and 1 together
    in sigma, equal positive cycle minima and ``rec_0`` of the zero word = i."""
    taus = defaultdict(list)
    for tau in _perms(n, 1):
        if len(tau.cycles()) == k:
            taus[tau.positive_minima()].append((tau, b_code_and_sorting(tau)[1]))
    out = []
    for sigma in _perms(n, 0):
        if len(sigma.cycles()) != k:
            continue
        word = sigma.zero_word()
        if 1 not in word:
            continue
        r0 = records(word)[2]
        if i is not None and r0 != i:
            continue
        code0, _, sor0 = b_code_and_sorting(sigma)
        for tau, sor_t in taus.get(sigma.positive_minima(), ()):
            out.append(
                (sigma, tau, {"rec0": r0, "sor_tau": sor_t, "sor0_sigma": sor0, "sor": sor_t - sor0, "b0_code": code0})
            )
    return out


def perm_pair_polynomial(n: int, k: int, i: int) -> Laurent:
    terms: dict[int, int] = defaultdict(int)
    for *_, st in enumerate_perm_pairs(n, k, i):
        terms[st["sor"]] += 1
    return Laurent("q", terms)


def _zero_buckets(n: int, k: int) -> dict:
    """Permutations of [n]_0 with k cycles avoiding 0, keyed by their minima."""
    buckets = defaultdict(list)
    for p in _perms(n, 0):
        cyc = [c for c in p.cycles() if 0 not in c]
        if len(cyc) != k:
            continue
        mins = frozenset(min(c) for c in cyc)
        buckets[mins].append((p, records(p.zero_word())[1]))
    return buckets


def iter_pairs_zero(n: int, k: int) -> Iterator[tuple[IndexedPermutation, IndexedPermutation, dict]]:
    """Pairs of permutations of [n]_0 with k cycles avoiding 0 and equal minima
    of those cycles; stats are the record counts of the two zero words."""
    for group in _zero_buckets(n, k).values():
        for sigma, rs in group:
            for tau, rt in group:
                yield sigma, tau, {"rec_sigma": rs, "rec_tau": rt}


def enumerate_pairs_zero(n: int, k: int) -> list:
    return list(iter_pairs_zero(n, k))


def pairs_zero_polynomial(n: int, k: int) -> Laurent:
    """Sum of ``z^rec(sigma) w^rec(tau)``, computed per bucket as a product."""
    total = Laurent.zero("z")
    for group in _zero_buckets(n, k).values():
        zs: dict[int, int] = defaultdict(int)
        for _, r in group:
            zs[r] += 1
        total = total + Laurent("z", zs) * Laurent("w", zs)
    return total
