# SpecDoc / ClassifiedDoc live in idem2.datamodel.spec; they depend on idem2.core
# and are kept out of this namespace so the oracle can import the wire models alone.
from idem2.datamodel.model import (
    TermDoc, SeriesDoc, MatrixDoc, ErrorDoc, GridCell, GridConfig, DEFAULT_GRID_CELLS,
)

__all__ = ['TermDoc', 'SeriesDoc', 'MatrixDoc', 'ErrorDoc', 'GridCell', 'GridConfig', 'DEFAULT_GRID_CELLS']
