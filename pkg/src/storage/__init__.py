# Storage module

from src.storage.database import ReportDatabase
from src.storage.models import ReportRecord, RunRecord

__all__ = ["ReportDatabase", "ReportRecord", "RunRecord"]
