"""Low-index subgroup enumeration by coset-table backtracking.

Given a finite presentation, we enumerate conjugacy classes of subgroups of
index at most ``max_index`` by a depth-first search over partial coset
tables.  A table has one row per coset (row 0 being the subgroup itself) and
one column per generator and per inverse generator; entry (c, g) is the
coset reached from c by g.

Search discipline: the first undefined entry in row-major scan order gets
defined next, trying every existing coset whose matching inverse slot is
free and then a single brand-new coset.  New cosets therefore enter in scan
order, which gives every subgroup exactly one completed table.  After each
definition, every relator is scanned at every coset from both ends; a scan
meeting in the middle with one missing edge fills that edge (a deduction),
and a scan meeting with a mismatch kills the branch.  In this strict search
there are no coset coincidences: tables only grow or die.

Conjugate subgroups differ only by the choice of base coset, so classes are
deduplicated by renumbering each completed table from every base point in
the same row-major discipline and keeping the lexicographically least
variant.  Normality is decided by the order of the permutation group that
the generators induce on the cosets: the point stabilizer equals the kernel
of the action exactly when that group has order equal to the index.

The default node budget (10**7 definitions) is a hard stop for runaway
searches; enumeration at index <= 8 on desk-scale presentations sits far
below it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .artin import GroupPresentation
from .errors import BudgetExceeded


@dataclass(frozen=True)
class SubgroupRecord:
    """One conjugacy class of subgroups, as a canonical coset table."""

    index: int
    coset_table: tuple[tuple[int, ...], ...]
    is_normal: bool


def low_index_subgroups(
    presentation: GroupPresentation,
    max_index: int,
    *,
    index_cap: int = 8,
    node_budget: int = 10_000_000,
) -> list[SubgroupRecord]:
    """All subgroups of index <= max_index up to conjugacy, sorted by index
    and then by table."""
    if max_index < 1:
        raise ValueError("max_index must be at least 1")
    if max_index > index_cap:
        raise ValueError(
            f"max_index {max_index} exceeds the desk-scale cap {index_cap}; raise index_cap explicitly"
        )
    rank = presentation.generator_count
    ncols = 2 * rank
    relator_cols = [_word_to_cols(r.letters()) for r in presentation.relators]

    tables: list[tuple[tuple[int, ...], ...]] = []
    budget = [node_budget]
    table: list[list[int | None]] = [[None] * ncols]
    _search(table, relator_cols, max_index, budget, tables)

    classes: dict[tuple, tuple[tuple[int, ...], ...]] = {}
    for t in tables:
        canon = _canonical_table(t, ncols)
        classes.setdefault(canon, canon)
    records = [
        SubgroupRecord(index=len(t), coset_table=t, is_normal=_is_normal(t, rank))
        for t in classes.values()
    ]
    records.sort(key=lambda r: (r.index, r.coset_table))
    return records


def _word_to_cols(letters: list[int]) -> tuple[int, ...]:
    # column 2*(g-1) is generator g, column 2*(g-1)+1 its inverse
    return tuple(2 * (abs(k) - 1) + (0 if k > 0 else 1) for k in letters)


def _search(table, relators, max_index, budget, out):
    slot = _first_undefined(table)
    if slot is None:
        out.append(tuple(tuple(row) for row in table))
        return
    alpha, col = slot
    candidates = [beta for beta in range(len(table)) if table[beta][col ^ 1] is None]
    if len(table) < max_index:
        candidates.append(len(table))
    for beta in candidates:
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("coset-table search exceeded its node budget")
        trail: list[tuple[int, int]] = []
        new_row = beta == len(table)
        if new_row:
            table.append([None] * len(table[0]))
        _define(table, alpha, col, beta, trail)
        if _close_under_relators(table, relators, trail):
            _search(table, relators, max_index, budget, out)
        for a, c in reversed(trail):
            table[a][c] = None
        if new_row:
            table.pop()


def _first_undefined(table):
    for alpha, row in enumerate(table):
        for col, entry in enumerate(row):
            if entry is None:
                return alpha, col
    return None


def _define(table, alpha, col, beta, trail):
    table[alpha][col] = beta
    trail.append((alpha, col))
    if table[beta][col ^ 1] is None:
        table[beta][col ^ 1] = alpha
        trail.append((beta, col ^ 1))


def _close_under_relators(table, relators, trail) -> bool:
    """Scan every relator at every coset, filling forced edges, until either
    a fixpoint is reached (True) or a scan mismatches (False)."""
    changed = True
    while changed:
        changed = False
        for word in relators:
            for start in range(len(table)):
                status = _scan(table, start, word, trail)
                if status == "dead":
                    return False
                if status == "deduced":
                    changed = True
    return True


def _scan(table, start, word, trail):
    length = len(word)
    f = start
    i = 0
    while i < length and table[f][word[i]] is not None:
        f = table[f][word[i]]
        i += 1
    if i == length:
        return "ok" if f == start else "dead"
    b = start
    j = length
    while j > i and table[b][word[j - 1] ^ 1] is not None:
        b = table[b][word[j - 1] ^ 1]
        j -= 1
    if j == i:
        return "ok" if f == b else "dead"
    if j == i + 1:
        # one missing edge with both endpoints known: forced definition
        if table[b][word[i] ^ 1] is not None and table[b][word[i] ^ 1] != f:
            return "dead"
        _define(table, f, word[i], b, trail)
        return "deduced"
    return "ok"


def _relabel_from(table, base, ncols):
    """Renumber cosets in row-major discovery order starting at ``base``."""
    order = [base]
    position = {base: 0}
    idx = 0
    while idx < len(order):
        for col in range(ncols):
            target = table[order[idx]][col]
            if target not in position:
                position[target] = len(order)
                order.append(target)
        idx += 1
    return tuple(
        tuple(position[table[coset][col]] for col in range(ncols)) for coset in order
    )


def _canonical_table(table, ncols):
    return min(_relabel_from(table, base, ncols) for base in range(len(table)))


def _is_normal(table, rank) -> bool:
    index = len(table)
    gens = [tuple(row[2 * g] for row in table) for g in range(rank)]
    return _permutation_group_order(gens, index) == index


def _permutation_group_order(gens, degree) -> int:
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[x] for x in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def trace_word(table: tuple[tuple[int, ...], ...], start: int, letters: list[int]) -> int:
    """Follow a word through a complete coset table; used by consumers to
    verify that relators act trivially."""
    coset = start
    for col in _word_to_cols(letters):
        coset = table[coset][col]
    return coset
