"""Iterative evaluation of the weighted path recursions.

Every multiplicity in latpath has the shape ``f(node) = leaf`` or
``f(node) = Σ weight · f(child)``; ``evaluate`` computes it with an explicit
stack so deep recursions never hit the interpreter's call limit.
"""

from __future__ import annotations

from typing import Callable, Hashable, MutableMapping, Sequence, Union

Expansion = Union[int, Sequence[tuple[int, Hashable]]]


def evaluate(
    root: Hashable,
    expand: Callable[[Hashable], Expansion],
    memo: MutableMapping[Hashable, int],
) -> int:
    if root in memo:
        return memo[root]
    pending: dict[Hashable, Sequence[tuple[int, Hashable]]] = {}
    stack = [root]
    while stack:
        node = stack[-1]
        if node in memo:
            stack.pop()
            continue
        terms = pending.get(node)
        if terms is None:
            terms = expand(node)
            if isinstance(terms, int):
                memo.setdefault(node, terms)
                stack.pop()
                continue
            terms = [(w, c) for w, c in terms if w != 0]
            pending[node] = terms
        missing = [c for _, c in terms if c not in memo]
        if missing:
            stack.extend(missing)
            continue
        # setdefault: a concurrent writer may have stored the same value first.
        memo.setdefault(node, sum(w * memo[c] for w, c in terms))
        del pending[node]
        stack.pop()
    return memo[root]
