from sqlalchemy import JSON, Column, DateTime, ForeignKey, Integer, String
from sqlalchemy.ext.declarative import declarative_base
from sqlalchemy.orm import relationship

Base = declarative_base()


class RunDB(Base):
    __tablename__ = "runs"
    id = Column(String, primary_key=True)
    claim = Column(String, nullable=False)
    params = Column(JSON, nullable=False)
    options = Column(JSON, nullable=False)
    options_key = Column(String, nullable=False)
    started_at = Column(DateTime, nullable=False)
    fails = Column(Integer, nullable=False, default=0)
    certificates = relationship("CertificateDB", backref="run", lazy="dynamic")


class CertificateDB(Base):
    __tablename__ = "certificates"
    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(String, ForeignKey("runs.id"), nullable=False)
    position = Column(Integer, nullable=False)
    claim_id = Column(String, nullable=False)
    subject = Column(String, nullable=False)
    case_label = Column(String, nullable=False)
    operands = Column(String, nullable=False)
    verdict = Column(String, nullable=False)
