"""Fricke trace polynomials by recursive rewriting with trace identities.

For any word w in F2 there is a unique integer polynomial f_w with
f_w(tr A, tr B, tr AB) = tr w(A, B) for all A, B in SU(2).  The engine
computes f_w by structural rewriting:

  base cases   tr(1)=2, tr(a)=x, tr(b)=y, tr(ab)=z
  powers       tr(g^k) = tr(g) tr(g^(k-1)) - tr(g^(k-2))
  inverses     tr(u g^-1) = tr(g) tr(u) - tr(u g)
  splits       tr(u g v g) = tr(u g) tr(v g) - tr(u v^-1)

after replacing the word by its canonical trace key (cyclic reduction,
minimum over rotations of the word and its inverse).  Every result is
memoized under that key.

Termination: a word and its inverse share a trace, so the inverse rule may
first replace the word by whichever of w, w^-1 has fewer inverse letters.
Then (length, inverse-letter count) decreases strictly lexicographically at
every rewrite, with the count measured on that normalized representative.
"""

from __future__ import annotations

from .polynomials import TracePolynomial, TWO, X, Y, Z
from .words import Word, canonical_key


class EngineBudgetError(RuntimeError):
    """Raised when a single query decomposes more subwords than the budget."""


_VAR_POLY = {0: X, 1: Y}

# combine kinds
_AFFINE = 0   # var * P(d0) - P(d1)
_SPLIT = 1    # P(d0) * P(d1) - P(d2)


class TraceEngine:
    """Memoizing trace-polynomial engine.

    The memo table is shared across queries on the same instance; concurrent
    use requires external synchronization or per-task engines.  Results are
    deterministic and independent of query order.
    """

    def __init__(self, node_budget: int = 10_000_000):
        self.node_budget = node_budget
        self.nodes_decomposed = 0
        self._memo: dict[tuple[int, ...], TracePolynomial] = {
            (): TWO,
            (0,): X,
            (2,): Y,
            (0, 2): Z,
        }

    def trace_poly(self, w: Word) -> TracePolynomial:
        """The Fricke trace polynomial of w."""
        root = canonical_key(w.letters)
        memo = self._memo
        if root in memo:
            return memo[root]
        pending: dict[tuple[int, ...], tuple[int, list, int]] = {}
        stack = [root]
        while stack:
            key = stack[-1]
            if key in memo:
                stack.pop()
                continue
            entry = pending.get(key)
            if entry is None:
                entry = self._decompose(key)
                pending[key] = entry
            kind, deps, aux = entry
            values = []
            for d in deps:
                v = memo.get(d)
                if v is None:
                    stack.append(d)
                else:
                    values.append(v)
            if len(values) < len(deps):
                continue
            if kind == _AFFINE:
                memo[key] = _VAR_POLY[aux] * values[0] - values[1]
            else:
                memo[key] = values[0] * values[1] - values[2]
            del pending[key]
            stack.pop()
        return memo[root]

    # -- rewriting ----------------------------------------------------------

    def _decompose(self, t: tuple[int, ...]) -> tuple[int, list, int]:
        self.nodes_decomposed += 1
        if self.nodes_decomposed > self.node_budget:
            raise EngineBudgetError(
                f"exceeded node budget of {self.node_budget} subwords"
            )
        n = len(t)
        first = t[0]
        if all(l == first for l in t):
            # canonical keys never hold pure inverse powers
            gen = first >> 1
            return (_AFFINE, [t[:-1], t[:-2]], gen)
        inv_count = sum(l & 1 for l in t)
        if inv_count:
            if 2 * inv_count > n:
                t = tuple(l ^ 1 for l in reversed(t))
            return self._inverse_rule(t)
        return self._split_rule(t)

    @staticmethod
    def _inverse_rule(t: tuple[int, ...]) -> tuple[int, list, int]:
        """tr(u g^-1) = tr(g) tr(u) - tr(u g), rightmost inverse rotated last."""
        i = max(idx for idx, l in enumerate(t) if l & 1)
        t = t[i + 1:] + t[: i + 1]
        g_inv = t[-1]
        u = t[:-1]
        if u and u[-1] == g_inv:
            ug = u[:-1]
        else:
            ug = u + (g_inv ^ 1,)
        return (_AFFINE, [canonical_key(u), canonical_key(ug)], g_inv >> 1)

    @staticmethod
    def _split_rule(t: tuple[int, ...]) -> tuple[int, list, int]:
        """Split a positive word at a repeated generator.

        Adjacent repeats give tr(u g g) = tr(g) tr(u g) - tr(u); otherwise
        tr(u g v g) = tr(u g) tr(v g) - tr(u v^-1).
        """
        n = len(t)
        for i in range(n - 1):
            if t[i] == t[i + 1]:
                rot = t[i + 2:] + t[: i + 2]
                return (
                    _AFFINE,
                    [canonical_key(rot[:-1]), canonical_key(rot[:-2])],
                    rot[-1] >> 1,
                )
        for g in (0, 2):
            positions = [i for i, l in enumerate(t) if l == g]
            if len(positions) >= 2:
                i, j = positions[0], positions[1]
                rot = t[j + 1:] + t[: j + 1]
                p = i + n - j - 1
                u, v = rot[:p], rot[p + 1: n - 1]
                uv_inv = _concat_reduce(u, tuple(l ^ 1 for l in reversed(v)))
                return (
                    _SPLIT,
                    [
                        canonical_key(rot[: p + 1]),
                        canonical_key(rot[p + 1:]),
                        canonical_key(uv_inv),
                    ],
                    0,
                )
        raise AssertionError(f"unreachable: no repeated generator in {t}")


def _concat_reduce(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    out = list(u)
    for l in v:
        if out and out[-1] == l ^ 1:
            out.pop()
        else:
            out.append(l)
    return tuple(out)
