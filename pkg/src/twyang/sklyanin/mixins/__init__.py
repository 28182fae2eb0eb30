from twyang.sklyanin.mixins.comatrix import ComatrixMixin
from twyang.sklyanin.mixins.minors import MinorsMixin, formula_shape, reorder_sign

__all__ = ['ComatrixMixin', 'MinorsMixin', 'formula_shape', 'reorder_sign']
