"""Monomial orders as sort keys: a larger key is a larger monomial.

The variable ranking is the ring's variable order (first variable largest).
"""

from dataclasses import dataclass


def _degrevlex_key(e):
    return (sum(e),) + tuple(-x for x in reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    kind: str  # "lex" | "degrevlex" | "block" | "wdegrevlex"
    block: int = 0  # size of the leading (eliminated) block for "block"
    weights: tuple = ()  # for "wdegrevlex"

    def key(self, e):
        if self.kind == "degrevlex":
            return _degrevlex_key(e)
        if self.kind == "lex":
            return tuple(e)
        if self.kind == "block":
            k = self.block
            return _degrevlex_key(e[:k]) + _degrevlex_key(e[k:])
        if self.kind == "wdegrevlex":
            return (sum(w * x for w, x in zip(self.weights, e)),) + tuple(-x for x in reversed(e))
        raise ValueError(f"unknown monomial order {self.kind!r}")

    def describe(self):
        if self.kind == "block":
            return f"block({self.block}; degrevlex, degrevlex)"
        return self.kind


LEX = MonomialOrder("lex")
DEGREVLEX = MonomialOrder("degrevlex")


def block_order(k):
    """Elimination order: the first ``k`` variables are infinitely larger than the rest."""
    return MonomialOrder("block", block=k)


def weighted_degrevlex(weights):
    return MonomialOrder("wdegrevlex", weights=tuple(weights))
