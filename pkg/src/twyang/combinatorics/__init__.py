"""Diagrams, the Drinfeld diagram rule and trapezium patterns."""

from twyang.combinatorics.diagram import (
    Cell,
    Diagram,
    DrinfeldData,
    ShiftedDiagram,
    content,
    diagram,
    drinfeld_diagram,
    intersect_shifted,
)
from twyang.combinatorics.patterns import (
    TrapPattern,
    count_patterns,
    enumerate_patterns,
    extended_entry,
    lambda0,
    maximal_weights,
    mid,
    nonempty_violation,
    pattern_weight,
    weight_precedes,
)
from twyang.combinatorics.render import render_diagram, render_pattern

__all__ = [
    'Cell',
    'Diagram',
    'DrinfeldData',
    'ShiftedDiagram',
    'TrapPattern',
    'content',
    'count_patterns',
    'diagram',
    'drinfeld_diagram',
    'enumerate_patterns',
    'extended_entry',
    'intersect_shifted',
    'lambda0',
    'maximal_weights',
    'mid',
    'nonempty_violation',
    'pattern_weight',
    'render_diagram',
    'render_pattern',
    'weight_precedes',
]
