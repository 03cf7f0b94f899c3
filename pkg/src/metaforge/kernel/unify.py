"""First-order unification by reduction to solved form.

The solver applies the classic transformation steps (reorder, drop trivial,
term reduction, variable elimination) with a fixed deterministic strategy:
pairs are processed first-in-first-out and decomposition is left to right, so
variables are eliminated in first-occurrence order and the same problem always
yields the same most general unifier.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .terms import App, Subst, Term, Var, occurs, renorm


class UnifyTypeError(Exception):
    """Pair of terms whose categories cannot match."""


def _walk(t: Term, bind: dict[str, Term]) -> Term:
    while isinstance(t, Var) and t.name in bind:
        t = bind[t.name]
    return t


def _resolve(t: Term, bind: dict[str, Term]) -> Term:
    t = _walk(t, bind)
    if isinstance(t, Var) or not t.args:
        return t
    return renorm(App(t.fn, tuple(_resolve(a, bind) for a in t.args), t.cat))


def _occurs_bound(name: str, t: Term, bind: dict[str, Term]) -> bool:
    t = _walk(t, bind)
    if isinstance(t, Var):
        return t.name == name
    return any(_occurs_bound(name, a, bind) for a in t.args)


def unify(pairs: Iterable[tuple[Term, Term]]) -> Subst | None:
    """Most general unifier of the pair set, or None if not unifiable."""
    work: deque[tuple[Term, Term]] = deque(pairs)
    bind: dict[str, Term] = {}
    while work:
        a, b = work.popleft()
        a = _walk(a, bind)
        b = _walk(b, bind)
        if isinstance(a, Var) and isinstance(b, Var) and a.name == b.name:
            continue
        if isinstance(b, Var) and not isinstance(a, Var):
            a, b = b, a
        if isinstance(a, Var):
            if a.cat != b.cat:
                raise UnifyTypeError(f"category mismatch: {a!r} vs {b!r}")
            if _occurs_bound(a.name, b, bind):
                return None
            bind[a.name] = b
            continue
        assert isinstance(a, App) and isinstance(b, App)
        if a.fn != b.fn or len(a.args) != len(b.args):
            return None
        if a.cat != b.cat:
            raise UnifyTypeError(f"category mismatch: {a!r} vs {b!r}")
        work.extend(zip(a.args, b.args))
    return Subst({k: _resolve(v, bind) for k, v in bind.items()})


def unify_terms(a: Term, b: Term) -> Subst | None:
    return unify([(a, b)])


def unifies(s: Subst, pairs: Sequence[tuple[Term, Term]]) -> bool:
    return all(s.term(a) == s.term(b) for a, b in pairs)
