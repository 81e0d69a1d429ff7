from .database import get_db_connection, record_run, run_certificates
from .models import Base, CertificateDB, RunDB

__all__ = ["Base", "CertificateDB", "RunDB", "get_db_connection", "record_run", "run_certificates"]
