"""Graded invariants of S((V + 1^n)* (x) (V + 1^n)) as pair-strings.

A pair-string of degree m is a word of m symbol pairs, each pair holding a
white slot (circle = V*-leg, or square(i) = the i-th trivial summand) and a
black slot (circle = V-leg, or square(j)); circle legs are matched by arcs
(white to black).  Every such invariant decomposes into connected pieces:
chains a_k (square ends, k-1 interior V-hops) and cycles b_k (closed
V-loops).  The graded dimension is verified three independent ways:
multiset enumeration of connected types, the power series
prod_k (1-q^k)^{-(n^2+1)}, and the exact nullity of the gl_N action on the
symmetric power.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .centralizer import BlockConvention, psi
from .linalg import rank_sparse

# ---------------------------------------------------------------------------
# Pair strings.


@dataclass(frozen=True)
class PairSymbol:
    """One white-black pair; None marks a circle, an int a square index."""

    left: int | None   # white slot
    right: int | None  # black slot

    def to_text(self) -> str:
        w = "Wc" if self.left is None else f"Ws({self.left})"
        b = "Bc" if self.right is None else f"Bs({self.right})"
        return w + b


@dataclass(frozen=True)
class PairString:
    pairs: tuple[PairSymbol, ...]
    arcs: frozenset  # of frozensets {white leg, black leg}, legs 1-based

    def __post_init__(self):
        whites = {2 * p + 1 for p, s in enumerate(self.pairs) if s.left is None}
        blacks = {2 * p + 2 for p, s in enumerate(self.pairs) if s.right is None}
        seen: set[int] = set()
        for arc in self.arcs:
            a, b = sorted(arc)
            if not ((a in whites and b in blacks) or (a in blacks and b in whites)):
                raise ValueError(f"arc {sorted(arc)} must join a white circle "
                                 "to a black circle")
            if a in seen or b in seen:
                raise ValueError("leg matched twice")
            seen.update((a, b))
        if seen != whites | blacks:
            raise ValueError("every circle leg must be matched")

    @property
    def degree(self) -> int:
        return len(self.pairs)

    def to_text(self) -> str:
        body = "".join(s.to_text() for s in self.pairs)
        arcs = "".join(f"({a},{b})" for a, b in sorted(tuple(sorted(x))
                                                       for x in self.arcs))
        return f"{body};arcs={arcs}"

    @classmethod
    def from_text(cls, text: str) -> "PairString":
        body, _, arcpart = text.partition(";arcs=")
        toks = re.findall(r"Wc|Ws\((\d+)\)|Bc|Bs\((\d+)\)|(.)", body)
        symbols = []
        slots: list[int | None] = []
        for ws, bs, junk in toks:
            if junk:
                raise ValueError(f"bad token {junk!r} in pair string")
            slots.append(int(ws) if ws else int(bs) if bs else None)
        raw = re.findall(r"Wc|Ws\(\d+\)|Bc|Bs\(\d+\)", body)
        if len(raw) % 2:
            raise ValueError("odd number of slots")
        for p in range(0, len(raw), 2):
            if not raw[p].startswith("W") or not raw[p + 1].startswith("B"):
                raise ValueError("each pair must be white slot then black slot")
            symbols.append(PairSymbol(slots[p], slots[p + 1]))
        arcs = frozenset(frozenset((int(a), int(b)))
                         for a, b in re.findall(r"\((\d+),(\d+)\)", arcpart))
        return cls(tuple(symbols), arcs)


@dataclass(frozen=True, order=True)
class ConnectedType:
    """Cycle(k) or Chain(k, i, j) with gl_n endpoint indices i, j."""

    kind: str  # "cycle" | "chain"
    k: int
    i: int | None = None
    j: int | None = None

    def __post_init__(self):
        if self.kind not in ("cycle", "chain") or self.k < 1:
            raise ValueError("bad connected type")
        if (self.kind == "chain") != (self.i is not None and self.j is not None):
            raise ValueError("chains carry endpoint indices; cycles do not")


def decompose(s: PairString) -> tuple[ConnectedType, ...]:
    """Split a pair string into its chains and cycles (sorted multiset)."""
    arc_of: dict[int, int] = {}
    for arc in s.arcs:
        a, b = tuple(arc)
        arc_of[a] = b
        arc_of[b] = a
    visited: set[int] = set()
    out: list[ConnectedType] = []

    def walk(p: int) -> tuple[int, int | None]:
        """Consume pairs starting at pair p; return (#pairs, end index)."""
        count = 0
        while True:
            visited.add(p)
            count += 1
            sym = s.pairs[p]
            if sym.right is not None:
                return count, sym.right
            nxt_leg = arc_of[2 * p + 2]
            nxt = (nxt_leg - 1) // 2
            if nxt in visited:
                return count, None  # closed the cycle
            p = nxt

    for p, sym in enumerate(s.pairs):
        if p in visited or sym.left is None:
            continue
        k, j = walk(p)
        out.append(ConnectedType("chain", k, sym.left, j))
    for p, sym in enumerate(s.pairs):
        if p not in visited:
            k, _ = walk(p)
            out.append(ConnectedType("cycle", k))
    return tuple(sorted(out))


def all_pair_strings(m: int, n: int):
    """Every valid pair string of degree m with square indices in 1..n."""
    white_opts = [None] + list(range(1, n + 1))
    black_opts = [None] + list(range(1, n + 1))
    for symbols in itertools.product(
            [PairSymbol(w, b) for w in white_opts for b in black_opts],
            repeat=m):
        whites = [2 * p + 1 for p, s in enumerate(symbols) if s.left is None]
        blacks = [2 * p + 2 for p, s in enumerate(symbols) if s.right is None]
        if len(whites) != len(blacks):
            continue
        for perm in itertools.permutations(blacks):
            arcs = frozenset(frozenset((w, b)) for w, b in zip(whites, perm))
            yield PairString(tuple(symbols), arcs)


# ---------------------------------------------------------------------------
# Symmetric algebra S(gl_M): monomials are sorted tuples of (a, b) entries.


def sym_mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            key = tuple(sorted(m1 + m2))
            nv = out.get(key, Fraction(0)) + c1 * c2
            if nv:
                out[key] = nv
            else:
                out.pop(key, None)
    return out


SYM_ONE = {(): Fraction(1)}


def expand_type(c: ConnectedType, conv: BlockConvention) -> dict:
    """The connected type as an element of S(gl_M), V-block summed out."""
    big = conv.large_block
    out: dict = {}
    if c.kind == "chain":
        for mids in itertools.product(big, repeat=c.k - 1):
            path = (c.i,) + mids + (c.j,)
            key = tuple(sorted(zip(path, path[1:])))
            out[key] = out.get(key, Fraction(0)) + 1
    else:
        for loop in itertools.product(big, repeat=c.k):
            key = tuple(sorted(zip(loop, loop[1:] + (loop[0],))))
            out[key] = out.get(key, Fraction(0)) + 1
    return out


def expand_multiset(types, conv: BlockConvention) -> dict:
    acc = SYM_ONE
    for c in types:
        acc = sym_mul(acc, expand_type(c, conv))
    return acc


def realize_string(s: PairString, conv: BlockConvention) -> dict:
    """Direct realization: one V-index per arc, product of matrix entries."""
    arcs = sorted(tuple(sorted(a)) for a in s.arcs)
    leg_arc = {leg: ai for ai, arc in enumerate(arcs) for leg in arc}
    out: dict = {}
    for assign in itertools.product(conv.large_block, repeat=len(arcs)):
        factors = []
        for p, sym in enumerate(s.pairs):
            a = sym.left if sym.left is not None else assign[leg_arc[2 * p + 1]]
            b = sym.right if sym.right is not None else assign[leg_arc[2 * p + 2]]
            factors.append((a, b))
        key = tuple(sorted(factors))
        out[key] = out.get(key, Fraction(0)) + 1
    return out


# ---------------------------------------------------------------------------
# Graded dimensions, three ways.


def connected_types(k: int, n: int) -> list[ConnectedType]:
    return [ConnectedType("cycle", k)] + [
        ConnectedType("chain", k, i, j)
        for i in range(1, n + 1) for j in range(1, n + 1)]


def type_multisets(m: int, n: int) -> list[tuple[ConnectedType, ...]]:
    """All multisets of connected types of total degree exactly m."""
    pool = [c for k in range(1, m + 1) for c in connected_types(k, n)]
    out: list[tuple[ConnectedType, ...]] = []

    def rec(start: int, acc: list, deg: int):
        if deg == m:
            out.append(tuple(acc))
            return
        for ci in range(start, len(pool)):
            if deg + pool[ci].k <= m:
                acc.append(pool[ci])
                rec(ci, acc, deg + pool[ci].k)
                acc.pop()

    rec(0, [], 0)
    return out


def dim_graded(m: int, n: int) -> int:
    """Number of degree-m invariant types, by exhaustive enumeration."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    return len(type_multisets(m, n))


def hilbert_series(n: int, m_max: int) -> list[int]:
    """Coefficients of prod_{k>=1} (1 - q^k)^{-(n^2 + 1)} up to q^m_max."""
    series = [1] + [0] * m_max
    for k in range(1, m_max + 1):
        for _ in range(n * n + 1):
            # multiply by 1/(1-q^k): running prefix sums with stride k
            for d in range(k, m_max + 1):
                series[d] += series[d - k]
    return series


def _sym_weight(mono: tuple, conv: BlockConvention) -> tuple:
    """gl_N torus weight of a monomial in the E_ab coordinates."""
    w = [0] * conv.N
    for a, b in mono:
        if a > conv.n:
            w[a - conv.n - 1] += 1
        if b > conv.n:
            w[b - conv.n - 1] -= 1
    return tuple(w)


def _sym_act(a: int, b: int, mono: tuple) -> dict:
    """Derivation action of E_ab on a monomial: E_cd -> d_bc E_ad - d_da E_cb."""
    out: dict = {}
    for pos, (c, d) in enumerate(mono):
        rest = mono[:pos] + mono[pos + 1:]
        if b == c:
            key = tuple(sorted(rest + ((a, d),)))
            out[key] = out.get(key, Fraction(0)) + 1
        if d == a:
            key = tuple(sorted(rest + ((c, b),)))
            out[key] = out.get(key, Fraction(0)) - 1
    return {k: v for k, v in out.items() if v}


def invariant_rank(m: int, n: int, N: int) -> int:
    """dim of gl_N-block invariants in S^m(gl_M), by exact nullity of the
    action restricted to the torus-weight-zero subspace."""
    conv = BlockConvention(n, N)
    gens = [(a, b) for a in range(1, conv.M + 1) for b in range(1, conv.M + 1)]
    zero_wt = [mono for mono in
               itertools.combinations_with_replacement(sorted(gens), m)
               if not any(_sym_weight(mono, conv))]
    block = list(conv.large_block)
    rows = []
    for mono in zero_wt:
        row: dict = {}
        for a in block:
            for b in block:
                if a == b:
                    continue  # weight-zero vectors are torus-invariant already
                for img, c in _sym_act(a, b, mono).items():
                    row[(a, b, img)] = c
        rows.append((mono, row))
    rank_of_action = rank_sparse(r for _, r in rows)
    return len(zero_wt) - rank_of_action


def dim_match_check(m: int, n: int, N: int) -> dict:
    """Three-way graded dimension comparison."""
    by_types = dim_graded(m, n)
    by_series = hilbert_series(n, m)[m]
    by_rank = invariant_rank(m, n, N)
    ok = by_types == by_series == by_rank
    return {"check": "graded dimension three-way match",
            "parameters": {"m": m, "n": n, "N": N},
            "expected": by_types,
            "got": {"types": by_types, "series": by_series, "rank": by_rank},
            "pass": ok}


def roundtrip_check(m: int, n: int, N: int) -> dict:
    """expand_multiset(decompose(s)) == realize_string(s), all strings."""
    conv = BlockConvention(n, N)
    bad = []
    total = 0
    for s in all_pair_strings(m, n):
        total += 1
        if expand_multiset(decompose(s), conv) != realize_string(s, conv):
            bad.append(s.to_text())
    return {"check": "decompose/expand round-trip",
            "parameters": {"m": m, "n": n, "N": N, "strings": total},
            "expected": [], "got": bad, "pass": not bad}


def leading_symbol_check(conv: BlockConvention, kmax: int) -> dict:
    """gr(psi(t^{(k)}_{ij})) = Chain(k,i,j) modulo the span of type multisets
    containing a Chain(1) factor."""
    bad = []
    for k in range(1, kmax + 1):
        span = [expand_multiset(ms, conv) for ms in type_multisets(k, conv.n)
                if any(c.kind == "chain" and c.k == 1 for c in ms)]
        base_rank = rank_sparse(span)
        for i in conv.small_block:
            for j in conv.small_block:
                top = psi(conv, k, i, j, kmax).top_part()
                diff = dict(top.terms)
                chain = expand_type(ConnectedType("chain", k, i, j), conv)
                for mono, c in chain.items():
                    nv = diff.get(mono, Fraction(0)) - c
                    if nv:
                        diff[mono] = nv
                    else:
                        diff.pop(mono, None)
                if diff and rank_sparse(span + [diff]) != base_rank:
                    bad.append([k, i, j])
    return {"check": "psi leading symbol is the k-chain modulo Chain(1) span",
            "parameters": {"n": conv.n, "N": conv.N, "kmax": kmax},
            "expected": [], "got": bad, "pass": not bad}
