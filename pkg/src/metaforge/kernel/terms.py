"""First-order terms, substitutions, replacement, and inversion.

Terms are variables or constructor applications; constants are zero-ary
applications.  A few reserved constructor spellings carry builtin literal
families and derived constants:

* ``#i:<n>``    opaque integer literal
* ``#n:<name>`` name literal
* ``#set``      finite set of name terms (args normalized: sorted, deduped)
* ``#union``    symbolic set union (args normalized ACUI: flattened, literals
                merged, deduped, sorted; collapses to its only part)
* ``#unk:<cat>`` the unknown constant of an extensible category
* ``z`` / ``s`` the prelude natural numbers

Every application node carries its result category so terms are
self-describing; substitution is category-respecting.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

NSET = "nset"
NAT = "nat"


@dataclass(frozen=True)
class Var:
    name: str
    cat: str

    def __repr__(self) -> str:
        return f"{self.name}:{self.cat}"


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple["Term", ...]
    cat: str

    def __repr__(self) -> str:
        if not self.args:
            return self.fn
        return f"{self.fn}({', '.join(map(repr, self.args))})"


Term = Var | App


def con(fn: str, cat: str, *args: Term) -> App:
    return App(fn, tuple(args), cat)


def int_lit(value: int, cat: str = "i") -> App:
    return App(f"#i:{value}", (), cat)


def name_lit(name: str, cat: str = "n") -> App:
    return App(f"#n:{name}", (), cat)


def unknown(cat: str) -> App:
    return App(f"#unk:{cat}", (), cat)


def is_unknown(t: Term) -> bool:
    return isinstance(t, App) and t.fn.startswith("#unk:")


def nat(n: int) -> App:
    t: App = App("z", (), NAT)
    for _ in range(n):
        t = App("s", (t,), NAT)
    return t


def term_key(t: Term):
    """Total order key used to canonicalize set arguments."""
    if isinstance(t, Var):
        return (0, t.name, t.cat)
    return (1, t.fn, t.cat, tuple(term_key(a) for a in t.args))


def set_lit(elems: Iterable[Term]) -> App:
    uniq: list[Term] = []
    for e in sorted(elems, key=term_key):
        if not uniq or uniq[-1] != e:
            uniq.append(e)
    return App("#set", tuple(uniq), NSET)


def union(*parts: Term) -> Term:
    """Normalized set union; accepts any mix of sets, unions, and variables."""
    flat: list[Term] = []
    lit_elems: list[Term] = []
    for p in parts:
        if isinstance(p, App) and p.fn == "#union":
            for q in p.args:
                if isinstance(q, App) and q.fn == "#set":
                    lit_elems.extend(q.args)
                else:
                    flat.append(q)
        elif isinstance(p, App) and p.fn == "#set":
            lit_elems.extend(p.args)
        else:
            flat.append(p)
    uniq: list[Term] = []
    for q in sorted(flat, key=term_key):
        if not uniq or uniq[-1] != q:
            uniq.append(q)
    if lit_elems:
        uniq.append(set_lit(lit_elems))
        uniq.sort(key=term_key)
    if not uniq:
        return set_lit(())
    if len(uniq) == 1:
        return uniq[0]
    return App("#union", tuple(uniq), NSET)


def renorm(t: Term) -> Term:
    """Re-establish set/union normal forms bottom-up (after substitution)."""
    if isinstance(t, Var) or not t.args:
        return t
    args = tuple(renorm(a) for a in t.args)
    if t.fn == "#union":
        return union(*args)
    if t.fn == "#set":
        out = set_lit(args)
        return out
    if args == t.args:
        return t
    return App(t.fn, args, t.cat)


def term_vars(t: Term, acc: dict[str, str] | None = None) -> dict[str, str]:
    """Free variables of ``t`` as a name -> category map."""
    if acc is None:
        acc = {}
    if isinstance(t, Var):
        acc[t.name] = t.cat
    else:
        for a in t.args:
            term_vars(a, acc)
    return acc


def occurs(name: str, t: Term) -> bool:
    if isinstance(t, Var):
        return t.name == name
    return any(occurs(name, a) for a in t.args)


class Subst(Mapping[str, Term]):
    """A finite, idempotent variable -> term map (identity pairs dropped)."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: Mapping[str, Term] | None = None):
        items = {}
        if mapping:
            for k, v in mapping.items():
                if not (isinstance(v, Var) and v.name == k):
                    items[k] = v
        self.mapping: dict[str, Term] = items

    def __getitem__(self, k: str) -> Term:
        return self.mapping[k]

    def __iter__(self) -> Iterator[str]:
        return iter(self.mapping)

    def __len__(self) -> int:
        return len(self.mapping)

    def __repr__(self) -> str:
        inside = ", ".join(f"{k} -> {v!r}" for k, v in sorted(self.mapping.items()))
        return "{" + inside + "}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Subst) and self.mapping == other.mapping

    def __hash__(self):
        return hash(tuple(sorted((k, term_key(v)) for k, v in self.mapping.items())))

    def term(self, t: Term) -> Term:
        out = self._apply(t)
        return renorm(out) if out is not t else t

    def _apply(self, t: Term) -> Term:
        if isinstance(t, Var):
            return self.mapping.get(t.name, t)
        if not t.args:
            return t
        args = tuple(self._apply(a) for a in t.args)
        if args == t.args:
            return t
        return App(t.fn, args, t.cat)

    def compose(self, other: "Subst") -> "Subst":
        """``other.compose(self)`` is wrong way round; see :func:`compose`."""
        return compose(other, self)


EMPTY_SUBST = Subst()


def compose(second: Subst, first: Subst) -> Subst:
    """The substitution applying ``first`` then ``second``."""
    out: dict[str, Term] = {}
    for k, v in first.mapping.items():
        out[k] = second.term(v)
    for k, v in second.mapping.items():
        if k not in first.mapping:
            out[k] = v
    return Subst(out)


def replace_term(new: Term, old: Term, t: Term) -> Term:
    """Replace every occurrence of ``old`` in ``t`` by ``new``."""
    if t == old:
        return new
    if isinstance(t, Var) or not t.args:
        return t
    args = tuple(replace_term(new, old, a) for a in t.args)
    if args == t.args:
        return t
    return renorm(App(t.fn, args, t.cat))


def replace_in_subst(new: Term, old: Term, s: Subst) -> Subst:
    return Subst({k: replace_term(new, old, v) for k, v in s.mapping.items()})


def invert_constructor(fn: str, t: Term) -> Term:
    """Rewrite every subterm headed by ``fn`` to the unknown of its category."""
    if isinstance(t, Var):
        return t
    if t.fn == fn:
        return unknown(t.cat)
    if not t.args:
        return t
    args = tuple(invert_constructor(fn, a) for a in t.args)
    if args == t.args:
        return t
    return renorm(App(t.fn, args, t.cat))


def invert_subst(fn: str, s: Subst) -> Subst:
    return Subst({k: invert_constructor(fn, v) for k, v in s.mapping.items()})


class FreshNames:
    """Deterministic fresh-name supply: base, base1, base2, ... avoiding taken."""

    def __init__(self, taken: Iterable[str] = ()):
        self.taken = set(taken)

    def add(self, name: str) -> None:
        self.taken.add(name)

    def fresh(self, base: str) -> str:
        base = base.rstrip("0123456789") or base
        if base not in self.taken:
            self.taken.add(base)
            return base
        i = 1
        while f"{base}{i}" in self.taken:
            i += 1
        name = f"{base}{i}"
        self.taken.add(name)
        return name
