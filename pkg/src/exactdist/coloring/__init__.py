from .bounds import BoundRecord, chi_bound_formulas
from .constructions import (
    complement_level_coloring, grid_pattern_coloring, k831_cases, k831_color, k831_coloring,
    kneser_coloring, translate_coloring,
)
from .core import Coloring, ColoringError, ValidationResult, validate_coloring
from .layered import LayeredReport, johnson_coloring, layered_coloring, load_certificate
from .solver import (
    ChromaticResult, exact_chromatic, greedy_coloring, improve_coloring, max_clique, tabu_coloring,
)
from .table1 import PRINTED, Table1Cell, format_table, table1_report
