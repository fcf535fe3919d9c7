"""Jeu de taquin, rectification, range restriction, promotion, and the
bijections built from promotion composites.

Skew and ragged tableaux are dicts mapping boxes (x, y) to an entry, with
None marking a hole.
"""

from __future__ import annotations

from .tableaux import Rows, validate_ssyt

Cells = dict[tuple[int, int], int | None]


def cells_from_rows(T: Rows) -> Cells:
    return {(x, y): e for y, row in enumerate(T, start=1) for x, e in enumerate(row, start=1)}


def rows_from_cells(cells: Cells) -> Rows:
    """Convert a straight-shape support back to rows; reject ragged supports."""
    if not cells:
        return []
    height = max(y for _, y in cells)
    rows: Rows = []
    for y in range(1, height + 1):
        width = sum(1 for box in cells if box[1] == y)
        row = []
        for x in range(1, width + 1):
            if (x, y) not in cells:
                raise ValueError("support is not left-justified")
            row.append(cells[(x, y)])
        rows.append(row)
    if any(len(rows[i]) < len(rows[i + 1]) for i in range(len(rows) - 1)):
        raise ValueError("support is not a partition shape")
    if any(e is None for row in rows for e in row):
        raise ValueError("holes remain")
    return rows


def _slide_forward(cells: Cells, start: tuple[int, int]) -> tuple[int, int]:
    """Slide the box at start toward the outside, mutating cells in place.

    At each step the traveling box swaps with its right or below neighbor;
    with both present it moves right iff the right entry is strictly
    smaller, otherwise down.  Holes (None) never get swapped into; the box
    rests when no real neighbor remains.  Returns the final box.
    """
    x, y = start
    while True:
        rv = cells.get((x + 1, y))
        bv = cells.get((x, y + 1))
        if rv is None and bv is None:
            return (x, y)
        if rv is not None and bv is not None:
            go_right = rv < bv
        else:
            go_right = rv is not None
        nxt = (x + 1, y) if go_right else (x, y + 1)
        cells[(x, y)], cells[nxt] = cells[nxt], cells[(x, y)]
        x, y = nxt


def _slide_reverse(cells: Cells, start: tuple[int, int], blocked: int | None = None) -> tuple[int, int]:
    """Slide the box at start toward the inside (left/up), mutating cells.

    With both neighbors present it moves left iff the left entry is
    strictly larger, otherwise up.  Cells holding the blocked value are
    not swap targets: a traveler that already settled must not be dragged
    along by a later one.  Returns the final box.
    """
    x, y = start
    while True:
        lv = cells.get((x - 1, y))
        av = cells.get((x, y - 1))
        if blocked is not None:
            lv = None if lv == blocked else lv
            av = None if av == blocked else av
        if lv is None and av is None:
            return (x, y)
        if lv is not None and av is not None:
            go_left = lv > av
        else:
            go_left = lv is not None
        nxt = (x - 1, y) if go_left else (x, y - 1)
        cells[(x, y)], cells[nxt] = cells[nxt], cells[(x, y)]
        x, y = nxt


def jdt_slide(cells: Cells, start: tuple[int, int]) -> Cells:
    """Jeu-de-taquin slide of the box at start; support is unchanged."""
    if start not in cells:
        raise ValueError(f"start {start} outside support")
    out = dict(cells)
    _slide_forward(out, start)
    return out


def restrict(T: Rows, a: int, b: int, c: int, d: int) -> Cells:
    """Remove boxes whose entry lies outside [a, b] union [c, d]."""
    if not a <= b <= c <= d:
        raise ValueError("bands must satisfy a <= b <= c <= d")
    return {
        box: e
        for box, e in cells_from_rows(T).items()
        if a <= e <= b or c <= e <= d
    }


def rect(cells: Cells) -> Rows:
    """Rectify: repeatedly slide a corner hole out and delete it.

    A hole is a corner when the boxes to its right and below are not holes
    (absent positions count as non-holes).  The canonical order picks the
    topmost, then leftmost, corner hole; the result is order-independent.
    """
    work = dict(cells)
    while True:
        holes = [box for box, e in work.items() if e is None]
        if not holes:
            break
        corners = [
            (x, y)
            for x, y in holes
            if work.get((x + 1, y), 0) is not None and work.get((x, y + 1), 0) is not None
        ]
        if not corners:
            raise ValueError("holes remain but none is a corner")
        start = min(corners, key=lambda box: (box[1], box[0]))
        final = _slide_forward(work, start)
        del work[final]
    return rows_from_cells(work)


def res(T: Rows, a: int, b: int, c: int, d: int) -> Rows:
    """Rectification of the restriction of T to [a, b] union [c, d].

    Boxes with entries below a or strictly between the bands become holes;
    entries above d are dropped.
    """
    if not a <= b <= c <= d:
        raise ValueError("bands must satisfy a <= b <= c <= d")
    cells: Cells = {}
    for box, e in cells_from_rows(T).items():
        if a <= e <= b or c <= e <= d:
            cells[box] = e
        elif e < a or b < e < c:
            cells[box] = None
    return rect(cells)


def pr_inv(T: Rows, a: int, b: int) -> Rows:
    """Inverse promotion on the letter window [a, b].

    Entries a become b and slide outward; the other in-window entries
    decrease by 1.  Out-of-window boxes are untouched.
    """
    if a == b:
        return [list(row) for row in T]
    full = cells_from_rows(T)
    window = {box for box, e in full.items() if a <= e <= b}
    work: Cells = {}
    movers = []
    for box in window:
        if full[box] == a:
            work[box] = b
            movers.append(box)
        else:
            work[box] = full[box] - 1
    movers.sort(key=lambda box: (-box[0], box[1]))
    for box in movers:
        _slide_forward(work, box)
    out = dict(full)
    out.update(work)
    result = rows_from_cells(out)
    if not validate_ssyt(result):
        raise ValueError("inverse promotion broke semistandardness")
    return result


def pr(T: Rows, a: int, b: int) -> Rows:
    """Promotion on the letter window [a, b]; two-sided inverse of pr_inv.

    Entries b slide inward and become a; the other in-window entries
    increase by 1.
    """
    if a == b:
        return [list(row) for row in T]
    full = cells_from_rows(T)
    window = {box for box, e in full.items() if a <= e <= b}
    work: Cells = {box: full[box] for box in window}
    movers = [box for box in window if full[box] == b]
    movers.sort(key=lambda box: (box[0], -box[1]))
    for box in movers:
        _slide_reverse(work, box, blocked=b)
    for box in work:
        work[box] = a if work[box] == b else work[box] + 1
    out = dict(full)
    out.update(work)
    result = rows_from_cells(out)
    if not validate_ssyt(result):
        raise ValueError("promotion broke semistandardness")
    return result


def phi_factors(n: int) -> list[tuple[int, int]]:
    """Window sequence for phi, in application order (first applied first)."""
    factors: list[tuple[int, int]] = []
    if n % 2 == 1:
        factors.append((n, n + 1))
    for k in range(n - 1, 0, -1):
        bar = 2 * n - k + 1
        factors.append((k + 1, bar) if k % 2 == 0 else (k, bar))
    return factors


def psi_factors(n: int) -> list[tuple[int, int]]:
    """Window sequence for psi, in application order."""
    factors: list[tuple[int, int]] = []
    if n % 2 == 0:
        factors.append((n, n + 1))
    for k in range(n - 1, 0, -1):
        bar = 2 * n - k + 1
        factors.append((k, bar) if k % 2 == 0 else (k + 1, bar))
    return factors


def phi(T: Rows, n: int) -> Rows:
    """The composite promotion carrying dominant tableaux to highest ones."""
    for a, b in phi_factors(n):
        T = pr(T, a, b)
    return T


def psi(T: Rows, n: int) -> Rows:
    """The composite promotion carrying dominant tableaux to lowest ones."""
    for a, b in psi_factors(n):
        T = pr(T, a, b)
    return T


def res_via_promotion(T: Rows, a: int, b: int, c: int, d: int) -> Rows:
    """Evaluate the two-band restriction through inverse promotions.

    Applies pr_inv on the windows [c-k, d-k+1] for k = 1..c-b-1, restricts
    to the single band [a, b+1+d-c], and shifts the top part back up.
    """
    if any(e < a for row in T for e in row):
        raise ValueError("entries below the lower band")
    U = [list(row) for row in T]
    for k in range(1, c - b):
        U = pr_inv(U, c - k, d - k + 1)
    top = b + 1 + d - c
    kept = restrict(U, a, top, top, top)
    rows = rows_from_cells(kept)
    return [[e + (c - b - 1) if e > b else e for e in row] for row in rows]


def skew_row_word(cells: Cells) -> list[int]:
    """Row word of the non-hole entries: bottom row first, left to right."""
    entries = [(y, x, e) for (x, y), e in cells.items() if e is not None]
    entries.sort(key=lambda t: (-t[0], t[1]))
    return [e for _, _, e in entries]
