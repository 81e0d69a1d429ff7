from orbivcd.db import CertificateDB, RunDB, get_db_connection, record_run, run_certificates
from orbivcd.models import EnumOptions
from orbivcd.verification import check_eq5_consistency


def test_record_run_roundtrip():
    session = get_db_connection()
    certs = check_eq5_consistency(range(0, 4), range(0, 5))
    run_id = record_run(session, "eq5", {"genus_max": 3, "k_max": 4}, EnumOptions(), certs)

    run = session.query(RunDB).filter(RunDB.id == run_id).one()
    assert run.claim == "eq5"
    assert run.fails == 0
    assert run.options_key == EnumOptions().fingerprint()
    assert session.query(CertificateDB).count() == len(certs)
    assert run_certificates(session, run_id) == certs


def test_runs_are_separate():
    session = get_db_connection()
    first = record_run(session, "eq5", {}, EnumOptions(), check_eq5_consistency([2], [0, 1]))
    second = record_run(session, "eq5", {}, EnumOptions(max_order=12), check_eq5_consistency([0], [6]))
    assert first != second
    assert len(run_certificates(session, first)) == 2
    assert len(run_certificates(session, second)) == 1
