"""Module defining various utilities."""
from eprop.utils.misc import aeq, as_exact, is_exact, format_float, \
    double_tensor
from eprop.utils.report_manager import ReportMgr, build_report_manager

__all__ = ["aeq", "as_exact", "is_exact", "format_float", "double_tensor",
           "ReportMgr", "build_report_manager"]
