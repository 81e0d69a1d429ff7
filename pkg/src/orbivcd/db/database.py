import logging
import uuid
from collections.abc import Iterable
from datetime import datetime, timezone

from sqlalchemy import create_engine
from sqlalchemy.orm import Session, sessionmaker

from ..models.certificate import Certificate
from ..models.options import EnumOptions
from .models import Base, CertificateDB, RunDB

logger = logging.getLogger(__name__)


def get_db_connection(db_url: str = "sqlite:///:memory:") -> Session:
    engine = create_engine(db_url)
    Base.metadata.create_all(engine)
    Session = sessionmaker(bind=engine)
    return Session()


def record_run(
    session: Session,
    claim: str,
    params: dict[str, any],
    options: EnumOptions,
    certs: Iterable[Certificate],
) -> str:
    """Store one check run with its certificates in canonical order; returns the run id."""
    certs = list(certs)
    run = RunDB(
        id=str(uuid.uuid4()),
        claim=claim,
        params=params,
        options=options.as_dict(),
        options_key=options.fingerprint(),
        started_at=datetime.now(timezone.utc),
        fails=sum(c.failed for c in certs),
    )
    session.add(run)
    session.add_all(
        CertificateDB(run_id=run.id, position=i, **c.as_dict()) for i, c in enumerate(certs)
    )
    session.commit()
    logger.info("recorded %s run %s with %d certificates", claim, run.id, len(certs))
    return run.id


def run_certificates(session: Session, run_id: str) -> list[Certificate]:
    rows = (
        session.query(CertificateDB)
        .filter(CertificateDB.run_id == run_id)
        .order_by(CertificateDB.position)
        .all()
    )
    return [
        Certificate.from_text(
            "\t".join([r.claim_id, r.case_label, r.operands, r.verdict, r.subject])
        )
        for r in rows
    ]
