from .envelopes import EnvelopeKind, envelope, REFERENCE, THEOREMS, THEOREM_FAMILY, FAMILY_THEOREM
from .records import SweepRecord, CSV_HEADER
from .config import SweepConfig, config_from_dict, load_sweep_config, pilot_config, resolve_size
from .sweep import (
    plan_cells, query_params, measure, run_cell, run_sweep, estimate_implied_constant, freeze_constants, check_constants,
    save_constants, load_constants, crossover_violations, upper_bound_violations)
from .audits import AuditReport, audit_lemma, audit_weil, audit_l1_claim
from .report import write_report, read_report, read_records
