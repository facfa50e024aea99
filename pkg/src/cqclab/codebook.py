"""Prefix-free codebooks priced in scheduler time slots.

A codeword is a binary string whose transmission cost is one slot per
'0' and two slots per '1'.  Codebooks are the leaves of a binary tree
(left edge appends '0', right edge appends '1'), which makes them
prefix-free and uniquely decodable.  The variable-length builder grows
the tree greedily by always splitting a cheapest leaf; the fixed-length
builder picks the cheapest single tree level that can host all
messages.  Brute-force oracles over small instances back both builders.
"""

import heapq
import math
from dataclasses import dataclass
from functools import lru_cache


class NoSuchPath(Exception):
    """A bit string walked off the codeword tree."""


def codeword_cost(bits: str) -> int:
    """Slots needed to transmit ``bits``: n0 + 2*n1."""
    if not bits or bits.strip("01"):
        raise ValueError(f"not a nonempty binary string: {bits!r}")
    ones = bits.count("1")
    return (len(bits) - ones) + 2 * ones


@dataclass(frozen=True)
class Codeword:
    bits: str
    cost: int

    def __post_init__(self):
        if self.cost != codeword_cost(self.bits):
            raise ValueError(f"cost {self.cost} inconsistent for {self.bits!r}")


def make_codeword(bits: str) -> Codeword:
    return Codeword(bits, codeword_cost(bits))


@dataclass(frozen=True)
class Codebook:
    codewords: tuple
    kind: str  # "variable" or "fixed"

    def __post_init__(self):
        if self.kind not in ("variable", "fixed"):
            raise ValueError(f"unknown codebook kind {self.kind!r}")
        if len(self.codewords) < 2:
            raise ValueError("a codebook holds at least two codewords")
        words = [c.bits for c in self.codewords]
        for prev, cur in zip(sorted(words), sorted(words)[1:]):
            if cur.startswith(prev):
                raise ValueError(f"not prefix-free: {prev!r} prefixes {cur!r}")
        if self.kind == "fixed" and len({len(w) for w in words}) != 1:
            raise ValueError("fixed-length codebook has unequal word lengths")

    def __len__(self):
        return len(self.codewords)

    @property
    def total_cost(self) -> int:
        return sum(c.cost for c in self.codewords)


@dataclass(frozen=True)
class RatePoint:
    M: int
    rate: float  # bits per time slot
    total_cost: int


def codebook_rate(book: Codebook) -> RatePoint:
    """Information rate M*log2(M) / total cost."""
    M = len(book)
    total = book.total_cost
    return RatePoint(M, M * math.log2(M) / total, total)


# Tie-breaking orders for equal-cost leaves.  Totals are invariant to the
# choice (splitting a leaf adds cost eta+3 whatever its bits are); the
# lexicographic order is the documented default and keeps output stable.
_TIE_ORDERS = {
    "lex": lambda w: w,
    "antilex": lambda w: w.translate(str.maketrans("01", "10")),
}


def _grow_tree(m_target: int, tie_break: str = "lex"):
    """Greedy leaf expansion up to ``m_target`` leaves.

    Returns the final heap of (cost, tiekey, bits) and a dict mapping
    every intermediate size to its total cost.
    """
    if m_target < 2:
        raise ValueError("need at least two codewords")
    key = _TIE_ORDERS[tie_break]
    heap = [(1, key("0"), "0"), (2, key("1"), "1")]
    heapq.heapify(heap)
    total = 3
    totals = {2: 3}
    while len(heap) < m_target:
        cost, _, word = heapq.heappop(heap)
        heapq.heappush(heap, (cost + 1, key(word + "0"), word + "0"))
        heapq.heappush(heap, (cost + 2, key(word + "1"), word + "1"))
        total += cost + 3
        totals[len(heap)] = total
    return heap, totals


def build_variable(M: int, tie_break: str = "lex") -> Codebook:
    """Cheapest variable-length codebook with ``M`` codewords.

    Starts from {0, 1} and repeatedly replaces a minimum-cost codeword
    by its two children until the book holds ``M`` words; equal costs
    are resolved by lexicographically smallest bits.
    """
    heap, _ = _grow_tree(M, tie_break)
    words = sorted(word for _, _, word in heap)
    return Codebook(tuple(make_codeword(w) for w in words), "variable")


def variable_cost_curve(m_max: int) -> dict:
    """Total cost of the greedy variable-length book for every M <= m_max."""
    _, totals = _grow_tree(m_max)
    return totals


def _level_ones(M: int, level: int):
    """Fewest total '1's over any M distinct words of ``level`` bits."""
    ones = 0
    left = M
    for k in range(level + 1):
        take = min(math.comb(level, k), left)
        ones += k * take
        left -= take
        if left == 0:
            return ones
    return None  # fewer than M words exist at this level


def fixed_level_costs(M: int) -> dict:
    """Cost of the best M-word book at each candidate tree level.

    Levels run from ceil(log2 M) to twice that; shallower levels cannot
    host M words and deeper ones are provably worse.
    """
    if M < 2:
        raise ValueError("need at least two codewords")
    lhat = (M - 1).bit_length()
    costs = {}
    for level in range(lhat, 2 * lhat + 1):
        ones = _level_ones(M, level)
        if ones is not None:
            costs[level] = M * level + ones
    return costs


def _level_words(M: int, level: int) -> list:
    """The M words of ``level`` bits with fewest '1's, ties lex-smallest.

    Same-weight words are enumerated in increasing numeric order (equal
    to lexicographic order at fixed width) via Gosper's hack.
    """
    words = []
    limit = 1 << level
    for k in range(level + 1):
        if len(words) == M:
            break
        if k == 0:
            words.append("0" * level)
            continue
        v = (1 << k) - 1
        while v < limit and len(words) < M:
            words.append(format(v, f"0{level}b"))
            low = v & -v
            lifted = v + low
            v = lifted | (((v ^ lifted) >> 2) // low)
    return words


def build_fixed(M: int) -> Codebook:
    """Cheapest fixed-length codebook with ``M`` codewords.

    Evaluates each candidate level's best book and keeps the cheapest,
    preferring the smallest level on ties.
    """
    costs = fixed_level_costs(M)
    best_level = min(costs, key=lambda l: (costs[l], l))
    words = _level_words(M, best_level)
    return Codebook(tuple(make_codeword(w) for w in words), "fixed")


def fixed_total_cost(M: int) -> int:
    """Total cost of ``build_fixed(M)`` without materializing the words."""
    costs = fixed_level_costs(M)
    return min(costs.values())


@lru_cache(maxsize=None)
def _min_tree_cost(leaves: int) -> int:
    # Enumerates every split of the leaves between the root's subtrees
    # and both edge labelings; exponential tree shapes collapse into
    # this recursion without assuming anything about the greedy builder.
    if leaves == 1:
        return 0
    best = None
    for i in range(1, leaves // 2 + 1):
        j = leaves - i
        sub = _min_tree_cost(i) + _min_tree_cost(j)
        root = min(i + 2 * j, j + 2 * i)
        cand = sub + root
        if best is None or cand < best:
            best = cand
    return best


def exhaustive_min_cost(M: int) -> int:
    """Minimum total cost over all prefix-free M-word books (M <= 10)."""
    if not 2 <= M <= 10:
        raise ValueError("oracle supports 2 <= M <= 10")
    return _min_tree_cost(M)


def decode_message(bits: str, book: Codebook):
    """Index of the codeword matched by ``bits``, or None on a proper prefix.

    Raises :class:`NoSuchPath` when ``bits`` is neither a codeword nor a
    prefix of one, i.e. the walk left the codeword tree.
    """
    words = {c.bits: i for i, c in enumerate(book.codewords)}
    if bits in words:
        return words[bits]
    if any(w.startswith(bits) for w in words):
        return None
    raise NoSuchPath(f"{bits!r} is not on the codeword tree")


def codebook_lines(book: Codebook) -> str:
    """Serialized form: one codeword per line, ASCII '0'/'1'."""
    return "\n".join(c.bits for c in book.codewords) + "\n"
