"""The base-d digit-sum word as a morphic fixed point: finite prefixes and streams.

Letters are returned as bytes (one letter per byte), which caps the supported
radix at 256 for this module; the arithmetic modules have no such cap.
"""

from ._backend import kernels

MAX_PREFIX_LETTERS = 1 << 31


def _check_letter_radix(d):
    if d < 2:
        raise ValueError(f"radix must be >= 2, got {d}")
    if d > 256:
        raise ValueError(f"letters are stored as bytes: radix {d} exceeds 256")


def morphism_image(c, d):
    """Image of letter c: the cyclic shift (c, c+1, ..., c+d-1), each reduced mod d."""
    _check_letter_radix(d)
    if not 0 <= c < d:
        raise ValueError(f"letter {c} outside [0, {d - 1}]")
    return bytes((c + a) % d for a in range(d))


def prefix(d, length):
    """First `length` letters of the fixed-point word; position k holds t(k, d).

    Generated block by block (block r is the image of the letter at position
    r), never by per-position digit sums.
    """
    if length > MAX_PREFIX_LETTERS:
        raise MemoryError(
            f"prefix of {length} letters exceeds the {MAX_PREFIX_LETTERS}-byte budget"
        )
    return kernels.prefix_letters(d, length)


class LetterStream:
    """Unbounded iterator over the fixed-point word of one radix.

    Emits letters in index order. Pending letters are kept in a buffer that
    the block generator re-reads (block r needs the letter at position r, and
    r always lies behind the generation frontier), so each letter costs
    amortized constant work and no digit sums. Single-owner mutable state: may
    be handed between threads but not shared.
    """

    def __init__(self, d):
        _check_letter_radix(d)
        self.radix = d
        self._letters = bytearray(range(d))  # block 0: image of the seed letter 0
        self._cursor = 0

    @property
    def cursor(self):
        """Index of the next letter to be emitted."""
        return self._cursor

    def __iter__(self):
        return self

    def __next__(self):
        letters = self._letters
        if self._cursor == len(letters):
            self._extend_block()
        value = letters[self._cursor]
        self._cursor += 1
        return value

    def take(self, count):
        """Next `count` letters as bytes."""
        if count < 0:
            raise ValueError(f"expected a nonnegative count, got {count}")
        end = self._cursor + count
        while len(self._letters) < end:
            self._extend_block()
        out = bytes(self._letters[self._cursor : end])
        self._cursor = end
        return out

    def _extend_block(self):
        d = self.radix
        letters = self._letters
        c = letters[len(letters) // d]
        v = c
        for _ in range(d):
            letters.append(v)
            v += 1
            if v == d:
                v = 0


def stream(d):
    """LetterStream emitting t(0, d), t(1, d), ... indefinitely."""
    return LetterStream(d)
