import math

from twyang.combinatorics.diagram import Diagram, ShiftedDiagram
from twyang.combinatorics.patterns import TrapPattern

CELL = '#'
EMPTY = '.'
WIDTH = 4


def _window(diag: Diagram, margin: int) -> tuple[int, int]:
    finite = [int(x) for lo, hi in diag.rows.values() for x in (lo, hi) if not math.isinf(x)]
    low = min([0, *finite]) - margin
    high = max([0, *finite]) + margin
    return low, high


def render_diagram(diag: Diagram, shift: int = 0, margin: int = 3) -> str:
    """Rows as rulers over a column window; ``|`` marks column 0, ``<``/``>`` mark rays."""
    low, high = _window(diag, margin)
    view: Diagram | ShiftedDiagram = diag.shifted(shift) if shift else diag
    first_row = -diag.n - shift
    last_row = diag.n + 1 - shift
    lines = [f'{"":>4}  ' + ''.join('|' if j == 0 else ' ' for j in range(low, high + 1))]
    for i in range(first_row, last_row + 1):
        lo, hi = view.row(i)
        cells = []
        for j in range(low, high + 1):
            cells.append(CELL if (i, j) in view else EMPTY)
        left = '<' if math.isinf(lo) and lo < hi else ' '
        right = '>' if math.isinf(hi) and lo < hi else ' '
        lines.append(f'{i:>4} {left}' + ''.join(cells) + right)
    return '\n'.join(lines)


def render_pattern(pattern: TrapPattern) -> str:
    """The trapezium with unprimed rows shifted half a step to the right."""
    lines = []
    for t, row in enumerate(pattern.rows):
        lines.append(' ' * (WIDTH // 2) + ''.join(f'{x:>{WIDTH}}' for x in row))
        if t < len(pattern.primed):
            lines.append(''.join(f'{x:>{WIDTH}}' for x in pattern.primed[t]))
    return '\n'.join(lines)
