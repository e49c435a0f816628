"""Independent brute-force oracles used to freeze expected values.

These deliberately avoid the package's enumeration machinery: shapes are
plain lists, fillings are dicts, and every candidate is generated and
filtered rather than pruned.
"""

def brute_partition_count(n, max_part=None, max_rows=None):
    """Count partitions of n with bounded part size and row count."""
    max_part = n if max_part is None else max_part
    max_rows = n if max_rows is None else max_rows
    if n == 0:
        return 1
    if max_rows == 0:
        return 0
    return sum(
        brute_partition_count(n - p, p, max_rows - 1)
        for p in range(1, min(n, max_part) + 1)
    )


def brute_multipartition_count(n, m):
    """Convolution of bounded-row partition counts over component sizes."""
    r = len(m)
    if r == 1:
        return brute_partition_count(n, max_rows=m[0])
    return sum(
        brute_partition_count(k, max_rows=m[0])
        * brute_multipartition_count(n - k, m[1:])
        for k in range(n + 1)
    )


def brute_cells(multipartition):
    """1-based cells (i, j, k) of a multipartition given as nested lists."""
    out = []
    for k, comp in enumerate(multipartition, start=1):
        for i, rowlen in enumerate(comp, start=1):
            for j in range(1, rowlen + 1):
                out.append((i, j, k))
    return out


def brute_entry_le(e1, e2):
    (a1, c1), (a2, c2) = e1, e2
    return c1 < c2 or (c1 == c2 and a1 <= a2)


def brute_is_semistandard(cells, filling):
    for (i, j, k) in cells:
        a, c = filling[(i, j, k)]
        if c < k:
            return False
        if (i, j + 1, k) in filling and not brute_entry_le(
            filling[(i, j, k)], filling[(i, j + 1, k)]
        ):
            return False
        if (i + 1, j, k) in filling:
            below = filling[(i + 1, j, k)]
            if not brute_entry_le(filling[(i, j, k)], below) or below == (a, c):
                return False
    return True


def brute_multipartition_tableaux(multipartition, weight):
    """All semistandard fillings, by filtering every assignment of entries.

    weight[k-1][i-1] is the multiplicity of entry (i, k), 1-based. Exponential;
    keep the inputs tiny.
    """
    cells = brute_cells(multipartition)
    entries = []
    for k, row in enumerate(weight, start=1):
        for i, count in enumerate(row, start=1):
            entries.extend([(i, k)] * count)
    if len(entries) != len(cells):
        return []
    seen = set()
    out = []
    from itertools import permutations

    for perm in permutations(entries):
        if perm in seen:
            continue
        seen.add(perm)
        filling = dict(zip(cells, perm))
        if brute_is_semistandard(cells, filling):
            out.append(filling)
    return out


def brute_ssyt_count(shape, weight):
    """Single-component semistandard count by row-wise generation."""
    shape = [x for x in shape if x]
    if sum(shape) != sum(weight):
        return 0
    if not shape:
        return 1
    letters = len(weight)

    def rows(length, lo_row):
        # lo_row[j] is the strict lower bound from the row above.
        def rec(j, prev):
            if j == length:
                yield ()
                return
            for v in range(max(prev, lo_row[j] + 1), letters + 1):
                for rest in rec(j + 1, v):
                    yield (v,) + rest

        return rec(0, 1)

    total = 0

    def fill(i, above, remaining):
        nonlocal total
        if i == len(shape):
            if all(x == 0 for x in remaining):
                total += 1
            return
        lo = [above[j] if j < len(above) else 0 for j in range(shape[i])]
        for row in rows(shape[i], lo):
            counts = list(remaining)
            ok = True
            for v in row:
                counts[v - 1] -= 1
                if counts[v - 1] < 0:
                    ok = False
                    break
            if ok:
                fill(i + 1, row, counts)

    fill(0, [], list(weight))
    return total


def brute_lattice_word(word):
    """Every prefix of the word (letters 1-based) has weakly decreasing counts."""
    counts = {}
    for a in word:
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts.get(a - 1, 0) < counts[a]:
            return False
    return True


def brute_lr(nu, la, mu):
    """LR coefficient: skew SSYT of nu/la, weight mu, reverse-reading lattice.

    Fully independent row-by-row generation with a final lattice filter.
    """
    nu = list(nu)
    la = list(la) + [0] * (len(nu) - len(la))
    if sum(nu) - sum(la) != sum(mu):
        return 0
    if any(l > n for n, l in zip(nu, la)):
        return 0
    letters = len(mu)
    rows = len(nu)

    def gen_row(i, above):
        length = nu[i] - la[i]
        cols = range(la[i], nu[i])

        def rec(j, prev):
            if j == length:
                yield ()
                return
            col = la[i] + j
            lo = 1 if prev is None else prev
            floor = above.get(col, 0) + 1
            for v in range(max(lo, floor), letters + 1):
                for rest in rec(j + 1, v):
                    yield (v,) + rest

        return rec(0, None)

    total = 0

    def fill(i, above, acc):
        nonlocal total
        if i == rows:
            word = []
            for row_vals, start in acc:
                word.extend(reversed(row_vals))
            counts = [0] * (letters + 1)
            ok = True
            for a in word:
                counts[a] += 1
            if counts[1:] != list(mu) + [0] * (letters - len(mu)):
                return
            if brute_lattice_word(word):
                total += 1
            return
        for row_vals in gen_row(i, above):
            new_above = {la[i] + j: v for j, v in enumerate(row_vals)}
            fill(i + 1, new_above, acc + [(row_vals, la[i])])

    fill(0, {}, [])
    return total
