"""Independent reference implementations used to check the differ.

Nothing here may import from corename.chunks internals: these are the
yardsticks the production diff is measured against.
"""

import itertools

import numpy as np


def lcs_length(a, b):
    """Textbook longest-common-subsequence DP over a full matrix."""
    m, n = len(a), len(b)
    if m == 0 or n == 0:
        return 0
    grid = [[0] * (n + 1) for _ in range(m + 1)]
    for i in range(1, m + 1):
        ai = a[i - 1]
        row, above = grid[i], grid[i - 1]
        for j in range(1, n + 1):
            if ai == b[j - 1]:
                row[j] = above[j - 1] + 1
            else:
                x, y = above[j], row[j - 1]
                row[j] = x if x >= y else y
    return grid[m][n]


def min_changed_words(a, b):
    """Minimum changed-word total over contiguous-run edit scripts.

    Every script keeps some words of ``a`` unchanged (a monotone matching
    of equal words) and edits the contiguous gaps between them, so the
    minimum equals len(a) + len(b) - 2 * LCS.  ``enumerate_script_minimum``
    verifies this identity exhaustively on small inputs.
    """
    return len(a) + len(b) - 2 * lcs_length(a, b)


def batched_min_changed_words(a_batch, b_batch):
    """``min_changed_words`` for many same-length pairs at once.

    Runs the same textbook LCS recurrence with the pair axis vectorized;
    sequences must be byte strings (or equal-length int tuples).  Returns
    a list of totals.
    """
    m = len(a_batch[0])
    n = len(b_batch[0])
    count = len(a_batch)
    if m == 0 or n == 0:
        return [m + n] * count
    if isinstance(a_batch[0], bytes):
        a = np.frombuffer(b"".join(a_batch), dtype=np.uint8).reshape(count, m)
        b = np.frombuffer(b"".join(b_batch), dtype=np.uint8).reshape(count, n)
    else:
        a = np.array(a_batch, dtype=np.uint8)
        b = np.array(b_batch, dtype=np.uint8)
    prev = np.zeros((count, n + 1), dtype=np.int8)
    for i in range(m):
        cur = np.zeros((count, n + 1), dtype=np.int8)
        matches = a[:, i : i + 1] == b
        for j in range(n):
            cur[:, j + 1] = np.where(
                matches[:, j],
                prev[:, j] + 1,
                np.maximum(prev[:, j + 1], cur[:, j]),
            )
        prev = cur
    return (m + n - 2 * prev[:, n].astype(np.int64)).tolist()


def enumerate_script_minimum(a, b):
    """Brute-force enumeration of every contiguous-run edit script.

    At each position a script either keeps a matching word or spends a
    chunk deleting ``da`` words and inserting ``db`` words (da + db >= 1).
    Returns the smallest changed-word total over all scripts.  Exponential;
    only usable for short sequences.
    """
    m, n = len(a), len(b)
    best = [m + n]

    def walk(i, j, changed):
        if changed > best[0]:
            return
        if i == m and j == n:
            best[0] = min(best[0], changed)
            return
        if i < m and j < n and a[i] == b[j]:
            walk(i + 1, j + 1, changed)
        for da in range(m - i + 1):
            for db in range(n - j + 1):
                if da + db == 0:
                    continue
                walk(i + da, j + db, changed + da + db)

    walk(0, 0, 0)
    return best[0]


def canonical_pairs(max_len, alphabet_size):
    """All sequence pairs with lengths <= max_len over the alphabet, up to
    symbol relabeling.

    Pairs are enumerated as restricted-growth byte strings over the
    concatenation, so every concrete pair over an alphabet of the given
    size is a relabeling of exactly one yielded pair.  Word-level diffing
    only compares words for equality, so checking one representative per
    class checks the whole class.
    """
    def growth_strings(length, cap):
        if length == 0:
            yield b""
            return
        stack = [(b"", 0)]
        push = stack.append
        while stack:
            prefix, used = stack.pop()
            nxt = min(used + 1, cap)
            for v in range(nxt - 1, -1, -1):
                new = prefix + bytes((v,))
                if len(new) == length:
                    yield new
                else:
                    push((new, used if v < used else v + 1))

    for m in range(max_len + 1):
        for n in range(max_len + 1):
            for joint in growth_strings(m + n, alphabet_size):
                yield joint[:m], joint[m:]


def random_pair(rng, min_len, max_len, alphabet):
    a = tuple(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))
    b = tuple(rng.choice(alphabet) for _ in range(rng.randint(min_len, max_len)))
    return a, b


def all_sequences(max_len, alphabet):
    for length in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=length)
