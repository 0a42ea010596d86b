"""Rank-defect strata of the nilradical and the decomposition of the
complement of the dense orbit.

For a composition d, the nilradical consists of the strictly upper
block-triangular matrices.  A matrix A is *defective* at (i, j, k) when the
rank of the k-th power of its window A[i,j] falls below the maximal value
attained on the dense orbit.  The stratum of a pair (i, j) imposes the defect
at the threshold exponent kappa(i, j); the strata of the pairs in
lambda_pairs(d) are exactly the irreducible components of the complement.

Everything here is exact: predicates on rational matrices use fraction-free
elimination, predicates on prime-field matrices use modular elimination.
The witness search runs its candidate screening mod p and certifies the
result over the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .compositions import (
    Composition,
    as_composition,
    dominance_leq,
    gamma_pairs,
    kappa,
    lambda_pairs,
    low_intermediates,
    richardson_partition,
)
from .diagrams import (
    LineDiagram,
    complete_diagram,
    max_window_rank,
    tableau_diagram,
    vertex_id,
)
from .matrices import DEFAULT_PRIME, ExactMatrix
from .tableaux import YoungTableau, minimal_movement


class WitnessSearchError(RuntimeError):
    """Raised when the witness search exhausts its trial budget."""


# ---------------------------------------------------------------------------
# membership predicates

def in_nilradical(a: ExactMatrix, d) -> bool:
    """True when all entries outside the strict upper block pattern vanish."""
    d = as_composition(d)
    if not a.is_square() or a.n != d.n:
        raise ValueError(f"matrix size {a.nrows} does not match n={d.n}")
    o = d.offsets
    blk = []
    for i in range(d.t):
        blk.extend([i] * d.parts[i])
    for r in range(a.n):
        for c in range(a.n):
            if blk[r] >= blk[c] and a.entry(r, c) != 0:
                return False
    return True


def _require_nilradical(a: ExactMatrix, d: Composition) -> None:
    if not in_nilradical(a, d):
        raise ValueError("matrix is not in the nilradical pattern of d")


def rank_defect(a: ExactMatrix, d, i: int, j: int, k: int) -> bool:
    """True when rank(A[i,j]^k) < max_window_rank(d, i, j, k).

    Always False for k > j - i, where the threshold is zero.
    """
    d = as_composition(d)
    d.check_pair(i, j)
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    _require_nilradical(a, d)
    if k > j - i:
        return False
    thr = max_window_rank(d, i, j, k)
    return a.window(d, i, j).power(k).rank() < thr


def in_stratum(a: ExactMatrix, d, i: int, j: int) -> bool:
    """Membership in the stratum of (i, j): the defect at exponent kappa(i, j)."""
    return rank_defect(a, d, i, j, kappa(d, i, j))


def is_richardson(a: ExactMatrix, d) -> bool:
    """True when A has the generic Jordan type richardson_partition(d); inside
    the nilradical this characterizes the dense orbit."""
    d = as_composition(d)
    _require_nilradical(a, d)
    return a.jordan_type() == richardson_partition(d)


def defect_profile(a: ExactMatrix, d) -> list[tuple[int, int, int]]:
    """All (i, j, k) with k <= j - i where A is rank-defective.

    Empty exactly when A is of generic Jordan type.
    """
    d = as_composition(d)
    _require_nilradical(a, d)
    out = []
    for i in range(1, d.t):
        for j in range(i + 1, d.t + 1):
            w = a.window(d, i, j)
            wk = w
            for k in range(1, j - i + 1):
                if wk.rank() < max_window_rank(d, i, j, k):
                    out.append((i, j, k))
                if k < j - i:
                    wk = wk.mul(w)
    return out


# ---------------------------------------------------------------------------
# decomposition descriptor

@dataclass(frozen=True)
class StratumSpec:
    """Computational identity card of one irreducible component."""

    pair: tuple[int, int]
    kappa: int
    rank_threshold: int
    codim: int
    mu: tuple[int, ...]
    tableau: YoungTableau

    def to_json_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "kappa": self.kappa,
            "rank_threshold": self.rank_threshold,
            "codim": self.codim,
            "mu": list(self.mu),
            "tableau": self.tableau.to_json_dict(),
        }


@dataclass(frozen=True)
class Decomposition:
    d: Composition
    lam: tuple[int, ...]
    strata: tuple[StratumSpec, ...]

    def to_json_dict(self) -> dict:
        return {
            "d": list(self.d.parts),
            "lambda": list(self.lam),
            "components": [s.to_json_dict() for s in self.strata],
        }


def decompose(d) -> Decomposition:
    """One fully populated StratumSpec per pair in lambda_pairs(d)."""
    d = as_composition(d)
    lam = richardson_partition(d)
    strata = []
    for i, j in sorted(lambda_pairs(d)):
        kap = kappa(d, i, j)
        move = minimal_movement(d, i, j)
        if not (dominance_leq(move.shape, lam) and move.shape != lam):
            raise AssertionError(f"movement shape {move.shape} not strictly below {lam}")
        strata.append(
            StratumSpec(
                pair=(i, j),
                kappa=kap,
                rank_threshold=max_window_rank(d, i, j, kap),
                codim=move.drop,
                mu=move.shape,
                tableau=move.tableau,
            )
        )
    return Decomposition(d=d, lam=lam, strata=tuple(strata))


# ---------------------------------------------------------------------------
# shared numeric tables (used here and by the verifier)

@dataclass(frozen=True, eq=False)
class WindowTables:
    """Per-composition arrays driving the mod-p kernels and flag algebra."""

    d: Composition
    pairs: tuple[tuple[int, int], ...]
    starts: np.ndarray
    stops: np.ndarray
    spans: np.ndarray
    kmax: int
    thresholds: np.ndarray          # (P, kmax), -1 beyond the span
    kappas: np.ndarray              # (P,)
    gamma: np.ndarray               # (P,) bool
    lam: np.ndarray                 # (P,) bool
    full_index: int
    positions: np.ndarray           # (m, 2) free entries of the pattern
    # lemma rule indices, precomputed once per d
    low_rules: tuple[tuple[int, int], ...]               # (pair, l) with l < kappa
    high_rules: tuple[tuple[int, int, tuple[tuple[int, int], ...]], ...]
    # ^ (pair, l > kappa, flanking (i,m),(m,j) options over the small mids)
    split_rules: tuple[int, ...]    # non-gamma pairs; targets are the Gamma strata
    absorb_rules: tuple[int, ...]   # gamma-minus-lambda pairs; targets the components


def _pair_index(i: int, j: int, t: int) -> int:
    # lexicographic position of (i, j) among all 1 <= i < j <= t
    return (i - 1) * (2 * t - i) // 2 + (j - i - 1)


def window_tables(d) -> WindowTables:
    return _window_tables(as_composition(d))


@lru_cache(maxsize=None)
def _window_tables(d: Composition) -> WindowTables:
    t = d.t
    o = d.offsets
    pairs = [(i, j) for i in range(1, t) for j in range(i + 1, t + 1)]
    npairs = len(pairs)
    starts = np.array([o[i - 1] for i, _ in pairs], dtype=np.int64)
    stops = np.array([o[j] for _, j in pairs], dtype=np.int64)
    spans = np.array([j - i for i, j in pairs], dtype=np.int64)
    kmax = t - 1
    thresholds = np.full((npairs, kmax), -1, dtype=np.int64)
    kappas = np.zeros(npairs, dtype=np.int64)
    for pi, (i, j) in enumerate(pairs):
        kappas[pi] = kappa(d, i, j)
        for k in range(1, j - i + 1):
            thresholds[pi, k - 1] = max_window_rank(d, i, j, k)
    gset = gamma_pairs(d)
    lset = lambda_pairs(d)
    gamma = np.array([p in gset for p in pairs], dtype=bool)
    lam = np.array([p in lset for p in pairs], dtype=bool)
    full_index = _pair_index(1, t, t) if t > 1 else 0

    positions = []
    for bi in range(1, t):
        for bj in range(bi + 1, t + 1):
            for r in range(o[bi - 1], o[bi]):
                for c in range(o[bj - 1], o[bj]):
                    positions.append((r, c))
    positions = np.array(positions, dtype=np.int64).reshape(-1, 2)

    low_rules = []
    high_rules = []
    split_rules = []
    absorb_rules = []
    for pi, (i, j) in enumerate(pairs):
        kap = int(kappas[pi])
        for l in range(1, kap):
            low_rules.append((pi, l))
        low = low_intermediates(d, i, j)
        if low:
            options = tuple(
                (_pair_index(i, m, t), _pair_index(m, j, t)) for m in sorted(low)
            )
            for l in range(kap + 1, j - i + 1):
                high_rules.append((pi, l, options))
        if not gamma[pi]:
            split_rules.append(pi)
        if gamma[pi] and not lam[pi]:
            absorb_rules.append(pi)

    return WindowTables(
        d=d,
        pairs=tuple(pairs),
        starts=starts,
        stops=stops,
        spans=spans,
        kmax=kmax,
        thresholds=thresholds,
        kappas=kappas,
        gamma=gamma,
        lam=lam,
        full_index=full_index,
        positions=positions,
        low_rules=tuple(low_rules),
        high_rules=tuple(high_rules),
        split_rules=tuple(split_rules),
        absorb_rules=tuple(absorb_rules),
    )


def rank_tables(mats: np.ndarray, tab: WindowTables, p: int) -> np.ndarray:
    """Batched window rank table R[b, pair, k-1] over F_p; -1 beyond spans."""
    if mats.ndim == 2:
        mats = mats[None, :, :]
    return _kernels.window_rank_table(
        np.ascontiguousarray(mats, dtype=np.int64),
        tab.starts, tab.stops, tab.spans, tab.kmax, p,
    )


def defect_flags(ranks: np.ndarray, tab: WindowTables) -> np.ndarray:
    """Boolean defect array aligned with the rank table."""
    thr = tab.thresholds
    return (thr >= 0) & (ranks < thr)


# ---------------------------------------------------------------------------
# separating witnesses

def _segment_edges(d: Composition, i: int, j: int) -> list[tuple[int, tuple[int, int]]]:
    """Candidate edges to break, as (height, edge): the window edges of every
    complete-diagram chain long enough to contribute at the threshold
    exponent, deepest height first.  Splitting any of them drops the window's
    rank at that exponent."""
    kap = kappa(d, i, j)
    out = []
    for h in range(max(d.parts[i - 1 : j]), 0, -1):
        cols = [c for c in range(i, j + 1) if d.parts[c - 1] >= h]
        if len(cols) - 1 < kap:
            continue
        for a, b in zip(cols, cols[1:]):
            out.append((h, (vertex_id(d, a, h), vertex_id(d, b, h))))
    return out


def _reattachment_options(diagram: LineDiagram, u: int, v: int, height: int):
    """Edges reconnecting the loose ends u (needs a right partner) and v
    (needs a left partner) to vertices on strictly deeper rows."""
    has_right = {a for a, _ in diagram.edges}
    has_left = {b for _, b in diagram.edges}
    left_fixes = [None]
    right_fixes = [None]
    for w in range(1, diagram.n + 1):
        if diagram.vertex_height(w) <= height:
            continue
        if w not in has_left and diagram.vertex_column(w) > diagram.vertex_column(u):
            left_fixes.append((u, w))
        if w not in has_right and diagram.vertex_column(w) < diagram.vertex_column(v):
            right_fixes.append((w, v))
    return left_fixes, right_fixes


def _diagram_candidates(d: Composition, i: int, j: int):
    """Deterministic witness candidates, in order: break one edge of a chain
    contributing to the window's threshold rank (deepest chain first),
    optionally reconnecting the loose ends to deeper rows; then the diagram
    realization of the moved tableau of (i, j)."""
    base = complete_diagram(d)
    for height, edge in _segment_edges(d, i, j):
        broken = LineDiagram(d, base.edges - {edge})
        u, v = edge
        left_fixes, right_fixes = _reattachment_options(broken, u, v, height)
        for lf in left_fixes:
            for rf in right_fixes:
                if lf is not None and rf is not None and lf == rf:
                    continue
                extra = {e for e in (lf, rf) if e is not None}
                yield LineDiagram(d, broken.edges | extra)
    yield tableau_diagram(minimal_movement(d, i, j).tableau, d)


def _separates(flags_row: np.ndarray, tab: WindowTables, pi_target: int) -> bool:
    lam_idx = np.nonzero(tab.lam)[0]
    member = flags_row[lam_idx, tab.kappas[lam_idx] - 1]
    want = lam_idx == pi_target
    return bool(np.all(member == want))


def witness(d, pair: tuple[int, int], seed: int = 0, budget: int = 100_000,
            p: int = DEFAULT_PRIME) -> ExactMatrix:
    """A nilradical matrix lying in the stratum of ``pair`` and in no other
    component stratum.

    Deterministic candidates first: break one contributing chain edge of the
    complete diagram with optional reconnections to deeper rows, then the
    diagram realization of the pair's moved tableau.  The fallback is a
    seeded randomized walk in diagram space (random break, then random edge
    removals and reconnections between free chain ends), screened mod p.
    The result is certified with exact rational predicates.  Raises
    WitnessSearchError after ``budget`` random trials.
    """
    d = as_composition(d)
    i, j = pair
    lam = lambda_pairs(d)
    if (i, j) not in lam:
        raise ValueError(f"pair ({i},{j}) is not in lambda_pairs({d})")
    tab = window_tables(d)
    pi_target = _pair_index(i, j, d.t)

    def certify(a: ExactMatrix) -> ExactMatrix:
        assert in_stratum(a, d, i, j)
        for k, l in lam:
            if (k, l) != (i, j) and in_stratum(a, d, k, l):
                raise AssertionError("mod-p screening accepted a non-separator")
        return a

    chunk: list[LineDiagram] = []

    def scan(diagrams: list[LineDiagram]) -> ExactMatrix | None:
        mats = np.stack([diag.to_matrix().to_numpy() for diag in diagrams])
        flags = defect_flags(rank_tables(mats, tab, p), tab)
        for b, diag in enumerate(diagrams):
            if _separates(flags[b], tab, pi_target):
                return certify(diag.to_matrix())
        return None

    for cand in _diagram_candidates(d, i, j):
        chunk.append(cand)
        if len(chunk) == 64:
            found = scan(chunk)
            if found is not None:
                return found
            chunk = []
    if chunk:
        found = scan(chunk)
        if found is not None:
            return found

    # randomized fallback: per-trial streams derived from (seed, trial)
    breaks = _segment_edges(d, i, j)
    base = complete_diagram(d)
    moved = tableau_diagram(minimal_movement(d, i, j).tableau, d)
    for trial in range(budget):
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((seed, trial))))
        if rng.integers(2):
            edges = set(moved.edges)
        else:
            _, edge = breaks[int(rng.integers(len(breaks)))]
            edges = set(base.edges) - {edge}
        for _ in range(int(rng.integers(1, 5))):
            if edges and rng.integers(2):
                edges.discard(sorted(edges)[int(rng.integers(len(edges)))])
            diagram = LineDiagram(d, frozenset(edges))
            has_right = {a for a, _ in diagram.edges}
            has_left = {b for _, b in diagram.edges}
            free = [
                (u, v)
                for u in range(1, d.n + 1) if u not in has_right
                for v in range(1, d.n + 1) if v not in has_left
                and diagram.vertex_column(u) < diagram.vertex_column(v)
            ]
            if free and rng.integers(2):
                edges.add(free[int(rng.integers(len(free)))])
        candidate = LineDiagram(d, frozenset(edges))
        flags = defect_flags(
            rank_tables(candidate.to_matrix().to_numpy(), tab, p), tab
        )
        if _separates(flags[0], tab, pi_target):
            return certify(candidate.to_matrix())
    raise WitnessSearchError(
        f"no separating witness for {pair} within {budget} trials; "
        "this signals a bug or a degenerate configuration worth inspecting"
    )
