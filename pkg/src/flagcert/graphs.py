"""Small simple graphs with exact isomorphism-class machinery.

Graphs are stored as an order ``n`` (1..9) plus an edge bitmask over the
upper triangle.  Bit ``j*(j-1)//2 + i`` holds the pair ``(i, j)`` with
``i < j``, i.e. pairs are indexed column by column: (0,1), (0,2), (1,2),
(0,3), ...  This matches the bit order of the graph6 format and lets a
graph grow by one vertex by appending a column of bits.

Canonical forms are computed by branch-and-bound over vertex placements:
the canonical code is the lexicographically minimal column-major bit
string over all orderings.  Candidates that are twins (swapping them is
an automorphism) are explored once, which keeps highly symmetric graphs
(empty, complete, balanced multipartite) cheap.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

MAX_ORDER = 9

_INF = 1 << 62


def _pair_index(i: int, j: int) -> int:
    """Column-major index of pair (i, j), i < j."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True, order=True)
class SmallGraph:
    """Immutable simple graph on ``n`` labelled vertices (1 <= n <= 9)."""

    n: int
    mask: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order {self.n} outside 1..{MAX_ORDER}")
        if self.mask < 0 or self.mask >> (self.n * (self.n - 1) // 2):
            raise ValueError("edge mask has bits outside the upper triangle")

    @property
    def pair_count(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def edge_count(self) -> int:
        return bin(self.mask).count("1")

    def adjacent(self, i: int, j: int) -> bool:
        if i == j or not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"bad vertex pair ({i}, {j})")
        return bool(self.mask >> _pair_index(i, j) & 1)

    def rows(self) -> tuple[int, ...]:
        """Adjacency rows as bitmasks (row v = neighbours of v)."""
        return _rows(self.n, self.mask)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for j in range(self.n)
            for i in range(j)
            if self.mask >> _pair_index(i, j) & 1
        ]

    def degree(self, v: int) -> int:
        return bin(self.rows()[v]).count("1")

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(bin(r).count("1") for r in self.rows()))

    def induced(self, vertices: tuple[int, ...]) -> "SmallGraph":
        """Subgraph induced on the given distinct vertices, relabelled 0.."""
        rows = self.rows()
        mask = 0
        for b in range(1, len(vertices)):
            base = b * (b - 1) // 2
            rv = rows[vertices[b]]
            for a in range(b):
                if rv >> vertices[a] & 1:
                    mask |= 1 << base + a
        return SmallGraph(len(vertices), mask)

    def relabelled(self, perm: tuple[int, ...]) -> "SmallGraph":
        """Image under the permutation sending vertex v to perm[v]."""
        mask = 0
        for j in range(self.n):
            for i in range(j):
                if self.mask >> _pair_index(i, j) & 1:
                    mask |= 1 << _pair_index(perm[i], perm[j])
        return SmallGraph(self.n, mask)

    def canonical_code(self) -> "CanonicalCode":
        return CanonicalCode(self.n, _min_code(self.n, self.rows()))

    def canonical_form(self) -> "SmallGraph":
        code = self.canonical_code()
        return SmallGraph(code.n, _code_to_mask(code.n, code.bits))

    def complement(self) -> "SmallGraph":
        full = (1 << self.pair_count) - 1
        return SmallGraph(self.n, self.mask ^ full)

    def __str__(self) -> str:
        return emit_paircode(self)


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Minimal column-major adjacency bit string, packed first-bit-highest.

    Two graphs are isomorphic iff their codes compare equal.  Codes of
    equal order compare lexicographically (== numerically).
    """

    n: int
    bits: int


@lru_cache(maxsize=None)
def _rows(n: int, mask: int) -> tuple[int, ...]:
    rows = [0] * n
    for j in range(n):
        for i in range(j):
            if mask >> _pair_index(i, j) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)


def _min_code(n: int, rows: tuple[int, ...], fixed: int = 0) -> int:
    """Minimal packed code over placements keeping 0..fixed-1 pinned.

    Branch and bound: place one vertex at a time, emitting the column of
    adjacency bits toward already-placed vertices; keep only placements
    whose column prefix can still reach the running minimum.  ``fixed``
    pins that many vertices to their own positions (used for rooted
    graphs, i.e. flags).
    """
    return _min_code_cached(n, rows, fixed)


@lru_cache(maxsize=None)
def _min_code_cached(n: int, rows: tuple[int, ...], fixed: int) -> int:
    best = [_INF] * n
    for d in range(fixed):
        col = 0
        for i in range(d):
            col = col << 1 | rows[d] >> i & 1
        best[d] = col

    def dfs(placed: list[int], placed_mask: int, depth: int) -> None:
        if depth == n:
            return
        cands = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            col = 0
            rv = rows[v]
            for u in placed:
                col = col << 1 | rv >> u & 1
            cands.append((col, v))
        cands.sort()
        chosen: list[int] = []
        for col, v in cands:
            if col > best[depth]:
                break
            # swapping twins is an automorphism: explore one representative
            twin = False
            for u in chosen:
                keep = ~(1 << u | 1 << v)
                if rows[u] & keep == rows[v] & keep:
                    twin = True
                    break
            if twin:
                continue
            chosen.append(v)
            if col < best[depth]:
                best[depth] = col
                for t in range(depth + 1, n):
                    best[t] = _INF
            placed.append(v)
            dfs(placed, placed_mask | 1 << v, depth + 1)
            placed.pop()

    dfs(list(range(fixed)), (1 << fixed) - 1, fixed)
    code = 0
    for d in range(n):
        code = code << d | best[d]
    return code


def _code_to_mask(n: int, bits: int) -> int:
    mask = 0
    shift = n * (n - 1) // 2
    for d in range(n):
        shift -= d
        col = bits >> shift & (1 << d) - 1
        base = d * (d - 1) // 2
        for i in range(d):
            if col >> (d - 1 - i) & 1:
                mask |= 1 << base + i
    return mask


def mask_to_code_bits(n: int, mask: int) -> int:
    """Pack a mask into code bit order without minimising (identity order)."""
    bits = 0
    for j in range(n):
        for i in range(j):
            bits = bits << 1 | mask >> _pair_index(i, j) & 1
    return bits


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def _enumerate(l: int) -> tuple[SmallGraph, ...]:
    if l == 1:
        return (SmallGraph(1, 0),)
    base = l * (l - 1) // 2 - (l - 1)
    seen: dict[int, SmallGraph] = {}
    for g in _enumerate(l - 1):
        for nbrs in range(1 << (l - 1)):
            cand = SmallGraph(l, g.mask | nbrs << base)
            code = cand.canonical_code()
            if code.bits not in seen:
                seen[code.bits] = cand.canonical_form()
    return tuple(seen[b] for b in sorted(seen))


def enumerate_graphs(l: int) -> tuple[SmallGraph, ...]:
    """All isomorphism classes of order ``l``, sorted by canonical code.

    Counts for l = 1..7: 1, 2, 4, 11, 34, 156, 1044.
    """
    if not 1 <= l <= 7:
        raise ValueError(f"order {l} outside 1..7")
    return _enumerate(l)


def _enumerate_unchecked(l: int) -> tuple[SmallGraph, ...]:
    """Enumeration without the public order cap (internal, l <= 9)."""
    if not 1 <= l <= MAX_ORDER:
        raise ValueError(f"order {l} outside 1..{MAX_ORDER}")
    return _enumerate(l)


# ---------------------------------------------------------------------------
# induced counting


@lru_cache(maxsize=None)
def _canon_bits(n: int, mask: int) -> int:
    return _min_code(n, _rows(n, mask))


def _induced_mask(rows: tuple[int, ...], vertices: tuple[int, ...]) -> int:
    mask = 0
    for b in range(1, len(vertices)):
        base = b * (b - 1) // 2
        rv = rows[vertices[b]]
        for a in range(b):
            if rv >> vertices[a] & 1:
                mask |= 1 << base + a
    return mask


def count_induced(h: SmallGraph, g: SmallGraph) -> int:
    """Number of |h|-subsets of V(g) inducing a copy of h.

    Returns 0 when |h| > |g|.
    """
    m, n = h.n, g.n
    if m > n:
        return 0
    target = _canon_bits(m, h.mask)
    rows = g.rows()
    total = 0
    for sub in itertools.combinations(range(n), m):
        if _canon_bits(m, _induced_mask(rows, sub)) == target:
            total += 1
    return total


def induced_density(h: SmallGraph, g: SmallGraph) -> Fraction:
    """p(h, g): probability a random |h|-subset of g induces h."""
    if h.n > g.n:
        raise ValueError("density needs |h| <= |g|")
    return Fraction(count_induced(h, g), math.comb(g.n, h.n))


def automorphism_count(g: SmallGraph) -> int:
    """Order of the automorphism group, by backtracking."""
    rows = g.rows()
    n = g.n
    degs = [bin(r).count("1") for r in rows]

    def extend(image: list[int], used: int) -> int:
        v = len(image)
        if v == n:
            return 1
        total = 0
        for w in range(n):
            if used >> w & 1 or degs[w] != degs[v]:
                continue
            ok = True
            for u in range(v):
                if (rows[v] >> u & 1) != (rows[w] >> image[u] & 1):
                    ok = False
                    break
            if ok:
                image.append(w)
                total += extend(image, used | 1 << w)
                image.pop()
        return total

    return extend([], 0)


# ---------------------------------------------------------------------------
# composition


def union(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    """Disjoint union."""
    n = g.n + h.n
    if n > MAX_ORDER:
        raise ValueError(f"union order {n} exceeds {MAX_ORDER}")
    mask = g.mask
    for j in range(h.n):
        for i in range(j):
            if h.mask >> _pair_index(i, j) & 1:
                mask |= 1 << _pair_index(g.n + i, g.n + j)
    return SmallGraph(n, mask)


def join(g: SmallGraph, h: SmallGraph) -> SmallGraph:
    """Disjoint union plus all edges across."""
    out = union(g, h)
    mask = out.mask
    for i in range(g.n):
        for j in range(g.n, out.n):
            mask |= 1 << _pair_index(i, j)
    return SmallGraph(out.n, mask)


def complete(n: int) -> SmallGraph:
    return SmallGraph(n, (1 << n * (n - 1) // 2) - 1)


def empty(n: int) -> SmallGraph:
    return SmallGraph(n, 0)


def turan(k: int, n: int) -> SmallGraph:
    """Complete k-partite graph on n vertices with near-equal parts."""
    if k < 1 or n < 1:
        raise ValueError("turan needs k >= 1 and n >= 1")
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds {MAX_ORDER}; use closed forms instead")
    mask = 0
    for j in range(n):
        for i in range(j):
            if i % k != j % k:
                mask |= 1 << _pair_index(i, j)
    return SmallGraph(n, mask)


def blowup_graph(base: SmallGraph, sizes: tuple[int, ...]) -> SmallGraph:
    """Replace base vertex v by an independent set of sizes[v] vertices."""
    if len(sizes) != base.n or any(s < 0 for s in sizes):
        raise ValueError("sizes must list one nonnegative count per base vertex")
    n = sum(sizes)
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"blown-up order {n} outside 1..{MAX_ORDER}")
    owner = [v for v, s in enumerate(sizes) for _ in range(s)]
    rows = base.rows()
    mask = 0
    for j in range(n):
        for i in range(j):
            if owner[i] != owner[j] and rows[owner[i]] >> owner[j] & 1:
                mask |= 1 << _pair_index(i, j)
    return SmallGraph(n, mask)


# ---------------------------------------------------------------------------
# serialization


def parse_paircode(text: str) -> SmallGraph:
    """Parse a pair-digit code: one digit per pair, 2 = edge, 1 = non-edge.

    Pairs run in lexicographic order (1,2), (1,3), ..., (n-1,n).  Digits
    may be separated by spaces or commas.  A single vertex is "-".
    """
    cleaned = text.replace(",", " ").strip()
    if cleaned == "-":
        return SmallGraph(1, 0)
    digits = cleaned.split() if " " in cleaned else list(cleaned)
    if not digits or any(d not in ("1", "2") for d in digits):
        raise ValueError(f"pair code must be digits 1/2, got {text!r}")
    m = len(digits)
    n = int((1 + math.isqrt(1 + 8 * m)) // 2)
    if n * (n - 1) // 2 != m:
        raise ValueError(f"pair code length {m} is not a triangular number")
    mask = 0
    t = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            if digits[t] == "2":
                mask |= 1 << _pair_index(i, j)
            t += 1
    return SmallGraph(n, mask)


def emit_paircode(g: SmallGraph) -> str:
    if g.n == 1:
        return "-"
    digits = []
    for i in range(g.n - 1):
        for j in range(i + 1, g.n):
            digits.append("2" if g.mask >> _pair_index(i, j) & 1 else "1")
    return " ".join(digits)


def to_graph6(g: SmallGraph) -> str:
    """Encode in graph6 (column-major upper-triangle bits, 6 per byte)."""
    out = [chr(g.n + 63)]
    bits = mask_to_code_bits(g.n, g.mask)
    m = g.pair_count
    pad = -m % 6
    bits <<= pad
    for chunk in range((m + pad) // 6 - 1, -1, -1):
        out.append(chr((bits >> 6 * chunk & 63) + 63))
    return "".join(out)


def from_graph6(text: str) -> SmallGraph:
    text = text.strip()
    if not text:
        raise ValueError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in text):
        raise ValueError(f"graph6 bytes outside printable range in {text!r}")
    n = ord(text[0]) - 63
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"graph6 order {n} outside 1..{MAX_ORDER}")
    m = n * (n - 1) // 2
    need = (m + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise ValueError(f"graph6 body length {len(body)}, expected {need}")
    bits = 0
    for c in body:
        bits = bits << 6 | ord(c) - 63
    pad = -m % 6
    if bits & (1 << pad) - 1:
        raise ValueError("nonzero padding bits in graph6 string")
    bits >>= pad
    mask = 0
    t = m
    for j in range(n):
        for i in range(j):
            t -= 1
            if bits >> t & 1:
                mask |= 1 << _pair_index(i, j)
    return SmallGraph(n, mask)


def parse_graph(text: str) -> SmallGraph:
    """Parse either serialization: pair digits or graph6."""
    s = text.strip()
    if s == "-" or (s and set(s) <= set("12 ,")):
        return parse_paircode(s)
    return from_graph6(s)
