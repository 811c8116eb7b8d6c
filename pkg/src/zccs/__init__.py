"""Complementary code sets with zero-correlation zones, built from
generalized Boolean functions and verified by exhaustive correlation.
"""

__version__ = "0.1.0"

from .gbf import (
    BIT_ORDERS,
    GBF,
    Literal,
    PhaseSequence,
    Term,
    bits_to_index,
    eval_gbf,
    get_default_bit_order,
    index_to_bits,
    psi,
    psi_prefix,
    psi_suffix,
    resolve_bit_order,
    set_default_bit_order,
    substitute_complement,
    truth_table,
    z,
    zbar,
)
from .graphs import (
    LabeledGraph,
    NotAPathError,
    PathCertificate,
    enumerate_admissible_deletions,
    graph_of_quadratic,
    validate_deletion_path,
)
from .constructions import (
    CodeSet,
    Lemma1Params,
    Lemma2Params,
    Theorem1Params,
    Theorem2Params,
    build_f_an,
    build_g,
    build_g_an,
    build_h_an,
    build_s_an,
    lemma1_ccc,
    lemma2_ccc,
    theorem1_zccs,
    theorem2_zccs,
    theorem3_zccs,
)
from .correlation import (
    CorrelationReport,
    CorrelationValue,
    Violation,
    accs,
    is_optimal,
    measure_zcz,
    set_accs,
    verify_zccs,
)
from .oracle import oracle_regenerate, phase_mismatches
from .io import (
    CodeSetFormatError,
    code_set_from_document,
    code_set_to_document,
    dumps_code_set,
    export_csv,
    import_csv,
    load_code_set,
    loads_code_set,
    save_code_set,
    save_report,
    report_to_document,
)

__all__ = [
    "BIT_ORDERS",
    "GBF",
    "Literal",
    "PhaseSequence",
    "Term",
    "bits_to_index",
    "eval_gbf",
    "get_default_bit_order",
    "index_to_bits",
    "psi",
    "psi_prefix",
    "psi_suffix",
    "resolve_bit_order",
    "set_default_bit_order",
    "substitute_complement",
    "truth_table",
    "z",
    "zbar",
    "LabeledGraph",
    "NotAPathError",
    "PathCertificate",
    "enumerate_admissible_deletions",
    "graph_of_quadratic",
    "validate_deletion_path",
    "CodeSet",
    "Lemma1Params",
    "Lemma2Params",
    "Theorem1Params",
    "Theorem2Params",
    "build_f_an",
    "build_g",
    "build_g_an",
    "build_h_an",
    "build_s_an",
    "lemma1_ccc",
    "lemma2_ccc",
    "theorem1_zccs",
    "theorem2_zccs",
    "theorem3_zccs",
    "CorrelationReport",
    "CorrelationValue",
    "Violation",
    "accs",
    "is_optimal",
    "measure_zcz",
    "set_accs",
    "verify_zccs",
    "oracle_regenerate",
    "phase_mismatches",
    "CodeSetFormatError",
    "code_set_from_document",
    "code_set_to_document",
    "dumps_code_set",
    "export_csv",
    "import_csv",
    "load_code_set",
    "loads_code_set",
    "save_code_set",
    "save_report",
    "report_to_document",
]
