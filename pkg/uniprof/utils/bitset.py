"""Packed bitset rows.

Row ``v`` of an ``(n, n_words(n))`` array of ``uint64`` holds bit ``u`` in
word ``u >> 6`` at position ``u & 63``.  Padding bits at positions ``>= n``
are always clear.
"""

import numpy as np

ONE = np.uint64(1)
ALL = np.uint64(0xFFFFFFFFFFFFFFFF)
ZERO = np.uint64(0)


def n_words(n):
    """Number of 64-bit words needed for n bits."""
    return (n + 63) >> 6


def _bit(idx):
    idx = np.asarray(idx, dtype=np.intp)
    return ONE << (idx & 63).astype(np.uint64)


def pack_rows(dense):
    """Pack a boolean (k, n) matrix into (k, n_words(n)) uint64 rows."""
    dense = np.asarray(dense, dtype=bool)
    if dense.ndim != 2:
        raise ValueError("pack_rows expects a 2-d boolean matrix")
    k, width = dense.shape
    padded = np.zeros((k, n_words(width) * 64), dtype=bool)
    padded[:, :width] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_rows(rows, width):
    """Inverse of :func:`pack_rows`; returns a (k, width) boolean matrix."""
    rows = np.ascontiguousarray(rows, dtype="<u8")
    bits = np.unpackbits(rows.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :width].astype(bool)


def row_popcounts(rows):
    """Population count of every row as int64."""
    return np.bitwise_count(rows).sum(axis=-1, dtype=np.int64)


def tail_mask(n):
    """Word vector with exactly the bits 0..n-1 set."""
    mask = np.full(n_words(n), ALL, dtype=np.uint64)
    r = n & 63
    if r:
        mask[-1] = np.uint64((1 << r) - 1)
    return mask


def range_mask(n, start, stop):
    """Word vector with the bits start..stop-1 set."""
    mask = np.zeros(n_words(n), dtype=np.uint64)
    idx = np.arange(start, stop)
    np.bitwise_or.at(mask, idx >> 6, _bit(idx))
    return mask


def get_bits(rows, a, b):
    """Vectorised lookup of bit ``b`` in row ``a``."""
    a = np.asarray(a, dtype=np.intp)
    b = np.asarray(b, dtype=np.intp)
    words = rows[a, b >> 6]
    return ((words >> (b & 63).astype(np.uint64)) & ONE).astype(bool)


def set_bits(rows, a, b):
    """Set bit ``b`` of row ``a`` in place (repeated pairs allowed)."""
    a = np.asarray(a, dtype=np.intp)
    b = np.asarray(b, dtype=np.intp)
    np.bitwise_or.at(rows, (a, b >> 6), _bit(b))


def clear_diagonal(rows):
    """Clear bit v of row v in place."""
    idx = np.arange(rows.shape[0])
    rows[idx, idx >> 6] &= ~_bit(idx)


def diagonal_is_clear(rows):
    idx = np.arange(rows.shape[0])
    return not get_bits(rows, idx, idx).any()


def above_masks(n, start=0, stop=None):
    """Rows start..stop-1 of the matrix whose row v has bits v+1..n-1."""
    if stop is None:
        stop = n
    v = np.arange(start, stop)
    w = np.arange(n_words(n))
    word = (v >> 6)[:, None]
    # bits strictly above v inside its own word; 2 << 63 wraps to 0
    partial = ~((np.uint64(2) << (v & 63).astype(np.uint64)) - ONE)
    masks = np.where(w[None, :] > word, ALL, ZERO)
    masks = np.where(w[None, :] == word, partial[:, None], masks)
    return masks & tail_mask(n)


def below_masks(n, start=0, stop=None):
    """Rows start..stop-1 of the matrix whose row v has bits 0..v-1."""
    if stop is None:
        stop = n
    masks = ~above_masks(n, start, stop) & tail_mask(n)
    idx = np.arange(start, stop)
    masks[idx - start, idx >> 6] &= ~_bit(idx)
    return masks


def transpose_rows(rows, n, block=1024):
    """Bit-matrix transpose of packed rows, processed in column blocks."""
    out = np.empty_like(rows)
    for start in range(0, n, block):
        stop = min(n, start + block)
        cols = unpack_rows(rows[:, start >> 6:n_words(stop)], stop - start)
        out[start:stop] = pack_rows(cols.T)
    return out


def to_int_rows(rows):
    """Rows as Python integers (bit u of row v is ``(r[v] >> u) & 1``)."""
    rows = np.ascontiguousarray(rows, dtype="<u8")
    return [int.from_bytes(r.tobytes(), "little") for r in rows]


def iter_bits(x):
    """Ascending indices of the set bits of a Python integer."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low
