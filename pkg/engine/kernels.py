"""JIT-kompilierte Gitter-Kernel (BFS, Relaxations-Sweep, Sichtkegel).

Arbeiten direkt auf den numpy-Arrays von GridMap / DistanceField.
Zellcodes: 0 = Wand, 1 = ungesehen, 2 = gesehen; -1 = UNREACHED.
"""

import math

import numpy as np

from utils.jit import njit

WALL = 0
UNSEEN = 1
SEEN = 2
UNREACHED = -1

# Toleranz für Grenzfälle (45°-Diagonale, ganzzahlige Reichweite)
EPS = 1e-9


@njit(cache=True)
def bfs_kernel(cells, values):
    """Multi-Source-BFS von allen ungesehenen Zellen durch begehbare Zellen."""
    h, w = cells.shape
    queue = np.empty(h * w, dtype=np.int64)
    head = 0
    tail = 0
    for y in range(h):
        for x in range(w):
            if cells[y, x] == UNSEEN:
                values[y, x] = 0
                queue[tail] = y * w + x
                tail += 1
            else:
                values[y, x] = UNREACHED

    while head < tail:
        idx = queue[head]
        head += 1
        y = idx // w
        x = idx - y * w
        d = values[y, x] + 1
        if y > 0 and cells[y - 1, x] != WALL and values[y - 1, x] == UNREACHED:
            values[y - 1, x] = d
            queue[tail] = idx - w
            tail += 1
        if x < w - 1 and cells[y, x + 1] != WALL and values[y, x + 1] == UNREACHED:
            values[y, x + 1] = d
            queue[tail] = idx + 1
            tail += 1
        if y < h - 1 and cells[y + 1, x] != WALL and values[y + 1, x] == UNREACHED:
            values[y + 1, x] = d
            queue[tail] = idx + w
            tail += 1
        if x > 0 and cells[y, x - 1] != WALL and values[y, x - 1] == UNREACHED:
            values[y, x - 1] = d
            queue[tail] = idx - 1
            tail += 1
    return tail


@njit(cache=True)
def _value(cells, values, y, x):
    # Quellen lesen immer 0, unabhängig vom gespeicherten Wert
    if cells[y, x] == UNSEEN:
        return 0
    return values[y, x]


@njit(cache=True)
def _neighbor_min(cells, values, y, x):
    h, w = cells.shape
    best = UNREACHED
    if y > 0 and cells[y - 1, x] != WALL:
        v = _value(cells, values, y - 1, x)
        if v != UNREACHED and (best == UNREACHED or v < best):
            best = v
    if x < w - 1 and cells[y, x + 1] != WALL:
        v = _value(cells, values, y, x + 1)
        if v != UNREACHED and (best == UNREACHED or v < best):
            best = v
    if y < h - 1 and cells[y + 1, x] != WALL:
        v = _value(cells, values, y + 1, x)
        if v != UNREACHED and (best == UNREACHED or v < best):
            best = v
    if x > 0 and cells[y, x - 1] != WALL:
        v = _value(cells, values, y, x - 1)
        if v != UNREACHED and (best == UNREACHED or v < best):
            best = v
    return best


@njit(cache=True)
def relax_kernel(cells, values):
    """Ein In-place-Durchlauf in Zeilenreihenfolge. Gibt zurück, ob sich etwas geändert hat."""
    h, w = cells.shape
    cap = h * w
    changed = False
    for y in range(h):
        for x in range(w):
            state = cells[y, x]
            if state == WALL:
                new = UNREACHED
            elif state == UNSEEN:
                new = 0
            else:
                best = _neighbor_min(cells, values, y, x)
                if best == UNREACHED or best + 1 >= cap:
                    new = UNREACHED
                else:
                    new = best + 1
            if values[y, x] != new:
                values[y, x] = new
                changed = True
    return changed


@njit(cache=True)
def los_kernel(cells, ax, ay, bx, by):
    """Bresenham von a nach b; blockiert nur durch Wände strikt zwischen den Endpunkten."""
    dx = abs(bx - ax)
    dy = abs(by - ay)
    sx = 1 if ax < bx else -1
    sy = 1 if ay < by else -1
    err = dx - dy
    x = ax
    y = ay
    while True:
        if x == bx and y == by:
            return True
        if (x != ax or y != ay) and cells[y, x] == WALL:
            return False
        e2 = 2 * err
        if e2 > -dy:
            err -= dy
            x += sx
        if e2 < dx:
            err += dx
            y += sy


@njit(cache=True)
def cone_kernel(cells, px, py, hx, hy, reach, cos_half, out):
    """Markiert in `out` alle Zellen im Sichtkegel mit freier Sichtlinie."""
    h, w = cells.shape
    r = int(math.floor(reach + EPS))
    reach_sq = reach * reach + EPS
    out[py, px] = True
    for ty in range(max(0, py - r), min(h, py + r + 1)):
        for tx in range(max(0, px - r), min(w, px + r + 1)):
            dx = tx - px
            dy = ty - py
            d_sq = dx * dx + dy * dy
            if d_sq == 0 or d_sq > reach_sq:
                continue
            dot = dx * hx + dy * hy
            if dot < math.sqrt(d_sq) * cos_half - EPS:
                continue
            if los_kernel(cells, px, py, tx, ty):
                out[ty, tx] = True
