from leibniz.families.nilpotent import BlockShape, build_N, build_abelian, nilpotent_products  # noqa: F401
from leibniz.families.simple import build_sl2, sl2_module_action  # noqa: F401
from leibniz.families.solvable import (  # noqa: F401
    Table2Params, build_R_A, build_R_N, build_table2, drop_complement, heisenberg_params,
    table2_examples, table2_from_R_N,
)
