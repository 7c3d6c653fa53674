"""Words of the free group F2 = <a, b>.

Letters are small integers: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1, so that
``letter ^ 1`` inverts a letter and ``letter >> 1`` is its generator index.
The induced tuple order (a < A < b < B) is the order used for canonical
trace keys.  Words are stored freely reduced and are immutable.
"""

from __future__ import annotations

from typing import Iterable, Iterator

LETTER_CHARS = "aAbB"
_CHAR_TO_LETTER = {c: i for i, c in enumerate(LETTER_CHARS)}

MAX_WORD_LETTERS = 10**6
MAX_EXPONENT = 2**63 - 1


class WordSyntaxError(ValueError):
    """Raised for malformed word text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class WordLengthError(ValueError):
    """Raised when a word would exceed MAX_WORD_LETTERS letters."""


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Freely reduce a letter sequence with a stack; O(len)."""
    out: list[int] = []
    for l in letters:
        if out and out[-1] == l ^ 1:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


class Word:
    """A freely reduced word; the empty word is the identity.

    >>> Word.from_letters([0, 1])
    Word('')
    >>> parse_word("[a,b]")
    Word('abAB')
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        reduced = _reduce(letters)
        if len(reduced) > MAX_WORD_LETTERS:
            raise WordLengthError(
                f"word of {len(reduced)} letters exceeds cap {MAX_WORD_LETTERS}"
            )
        object.__setattr__(self, "letters", reduced)

    @classmethod
    def from_letters(cls, letters: Iterable[int]) -> "Word":
        return cls(letters)

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat(self, other)

    def __invert__(self) -> "Word":
        return inverse(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __repr__(self) -> str:
        return f"Word({render(self)!r})"

    def is_identity(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        """True when no letter is an inverse generator."""
        return all(not (l & 1) for l in self.letters)


_IDENTITY = Word()

GEN_A = Word((0,))
GEN_B = Word((2,))


def concat(u: Word, v: Word) -> Word:
    """Freely reduced product u*v."""
    left = list(u.letters)
    for l in v.letters:
        if left and left[-1] == l ^ 1:
            left.pop()
        else:
            left.append(l)
    if len(left) > MAX_WORD_LETTERS:
        raise WordLengthError(f"product of {len(left)} letters exceeds cap")
    w = Word.__new__(Word)
    object.__setattr__(w, "letters", tuple(left))
    return w


def inverse(u: Word) -> Word:
    w = Word.__new__(Word)
    object.__setattr__(w, "letters", tuple(l ^ 1 for l in reversed(u.letters)))
    return w


def power(u: Word, k: int) -> Word:
    """u^k, freely reduced; linear in the output length.

    Writing u = s c s^-1 with c cyclically reduced gives u^k = s c^k s^-1
    with no cancellation inside c^k.
    """
    if k == 0:
        return _IDENTITY
    base = u.letters if k > 0 else tuple(l ^ 1 for l in reversed(u.letters))
    k = abs(k)
    lo, hi = 0, len(base)
    while hi - lo >= 2 and base[lo] == base[hi - 1] ^ 1:
        lo += 1
        hi -= 1
    core = base[lo:hi]
    if not core:
        return _IDENTITY
    total = 2 * lo + k * len(core)
    if total > MAX_WORD_LETTERS:
        raise WordLengthError(f"power of {total} letters exceeds cap")
    letters = base[:lo] + core * k + base[hi:]
    w = Word.__new__(Word)
    object.__setattr__(w, "letters", letters)
    return w


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1, freely reduced."""
    return concat(concat(u, v), concat(inverse(u), inverse(v)))


def conjugate(u: Word, g: Word) -> Word:
    """g u g^-1."""
    return concat(concat(g, u), inverse(g))


def cyclically_reduce(u: Word) -> Word:
    t = u.letters
    lo, hi = 0, len(t)
    while hi - lo >= 2 and t[lo] == t[hi - 1] ^ 1:
        lo += 1
        hi -= 1
    w = Word.__new__(Word)
    object.__setattr__(w, "letters", t[lo:hi])
    return w


def canonical_key(t: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical trace key of a reduced letter tuple.

    Cyclically reduces, then takes the minimum over all rotations of the
    result and of its inverse.  Two words with equal keys have equal traces
    (trace is invariant under cyclic rotation and inversion).
    """
    lo, hi = 0, len(t)
    while hi - lo >= 2 and t[lo] == t[hi - 1] ^ 1:
        lo += 1
        hi -= 1
    t = t[lo:hi]
    n = len(t)
    if n == 0:
        return t
    inv = tuple(l ^ 1 for l in reversed(t))
    best = t
    for i in range(n):
        c = t[i:] + t[:i]
        if c < best:
            best = c
        c = inv[i:] + inv[:i]
        if c < best:
            best = c
    return best


def canonical_trace_key(u: Word) -> Word:
    """Representative word with the same trace polynomial as u.

    >>> canonical_trace_key(parse_word("ba")) == canonical_trace_key(parse_word("ab"))
    True
    """
    w = Word.__new__(Word)
    object.__setattr__(w, "letters", canonical_key(u.letters))
    return w


def render(u: Word) -> str:
    """Compact text form; runs of a letter collapse to '^k' powers.

    parse_word(render(u)) == u for every word u.
    """
    if not u.letters:
        return ""
    parts = []
    run_letter = u.letters[0]
    run_len = 1
    for l in u.letters[1:]:
        if l == run_letter:
            run_len += 1
        else:
            parts.append(_render_run(run_letter, run_len))
            run_letter, run_len = l, 1
    parts.append(_render_run(run_letter, run_len))
    return "".join(parts)


def _render_run(letter: int, n: int) -> str:
    c = LETTER_CHARS[letter]
    return c if n == 1 else f"{c}^{n}"


class _Parser:
    """Recursive-descent parser for the word grammar.

    word := term+ ; term := atom ('^' int)? ;
    atom := 'a'|'b'|'A'|'B' | '(' word ')' | '[' word ',' word ']' ;
    int := '-'? digit+ ; whitespace ignored.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> WordSyntaxError:
        return WordSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        if self.pos >= len(self.text):
            return None
        return self.text[self.pos]

    def parse_word(self, stop: str = "") -> Word:
        out = Word.identity()
        saw_term = False
        while True:
            c = self.peek()
            if c is None or c in stop:
                break
            out = concat(out, self.parse_term())
            saw_term = True
        if not saw_term:
            raise self.error("expected a word")
        return out

    def parse_term(self) -> Word:
        atom = self.parse_atom()
        if self.peek() == "^":
            self.pos += 1
            k = self.parse_int()
            return power(atom, k)
        return atom

    def parse_atom(self) -> Word:
        c = self.peek()
        if c is None:
            raise self.error("unexpected end of input")
        if c in _CHAR_TO_LETTER:
            self.pos += 1
            return Word((_CHAR_TO_LETTER[c],))
        if c == "(":
            self.pos += 1
            w = self.parse_word(stop=")")
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return w
        if c == "[":
            self.pos += 1
            u = self.parse_word(stop=",")
            if self.peek() != ",":
                raise self.error("expected ',' in commutator")
            self.pos += 1
            v = self.parse_word(stop="]")
            if self.peek() != "]":
                raise self.error("expected ']'")
            self.pos += 1
            return commutator(u, v)
        raise self.error(f"unexpected character {c!r}")

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise self.error("expected an integer exponent")
        value = int(self.text[start:self.pos])
        if abs(value) > MAX_EXPONENT:
            raise WordSyntaxError("exponent overflow beyond 2^63-1", start)
        return value


def parse_word(text: str) -> Word:
    """Parse word text into a freely reduced Word.

    >>> render(parse_word("a^3 b^-2"))
    'a^3B^2'
    >>> parse_word("a A").is_identity()
    True
    """
    p = _Parser(text)
    w = p.parse_word()
    if p.peek() is not None:
        raise p.error(f"unexpected character {p.peek()!r}")
    return w
