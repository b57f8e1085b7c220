from .csv_export import write_records_csv, write_summary_csv, write_trace_csv
from .runner import run_bench
from .summary import summarize

__all__ = [
    "run_bench",
    "summarize",
    "write_records_csv",
    "write_summary_csv",
    "write_trace_csv",
]
