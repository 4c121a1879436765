import logging

import pytest

from shufsq import CheckpointError, CheckpointManager, ScanOptions, WorkerPool
from shufsq.checkpoint_manager import CHECKPOINT_MAGIC, CHECKPOINT_VERSION
from shufsq.worker_pool import IN_FLIGHT_PER_WORKER, WORKERS_ENV, chunked, default_workers

STATE = {"last": "0001", "s_min": 2, "representatives": ["0011"], "processed": 7}

# --- Checkpoint files ---


def test_missing_checkpoint_loads_none(tmp_path):
    assert CheckpointManager(tmp_path / "none.ck", "anti-square", {"length": 8}).load() is None


def test_save_and_load(tmp_path):
    manager = CheckpointManager(tmp_path / "scan.ck", "anti-square", {"length": 8})
    assert manager.save(STATE)
    raw = (tmp_path / "scan.ck").read_bytes()
    assert raw.startswith(CHECKPOINT_MAGIC)
    assert manager.load() == STATE
    assert not (tmp_path / "scan.ck.tmp").exists()


def test_clear(tmp_path):
    manager = CheckpointManager(tmp_path / "scan.ck", "anti-square", {"length": 8})
    manager.save(STATE)
    manager.clear()
    manager.clear()
    assert manager.load() is None


def test_parameter_mismatch(tmp_path):
    CheckpointManager(tmp_path / "scan.ck", "anti-square", {"length": 8}).save(STATE)
    with pytest.raises(CheckpointError):
        CheckpointManager(tmp_path / "scan.ck", "anti-square", {"length": 10}).load()
    with pytest.raises(CheckpointError):
        CheckpointManager(tmp_path / "scan.ck", "dihedral", {"length": 8}).load()


def test_corrupt_body_fails_hash_check(tmp_path):
    path = tmp_path / "scan.ck"
    CheckpointManager(path, "anti-square", {"length": 8}).save(STATE)
    raw = bytearray(path.read_bytes())
    raw[-1] ^= 0xFF
    path.write_bytes(bytes(raw))
    with pytest.raises(CheckpointError, match="hash"):
        CheckpointManager(path, "anti-square", {"length": 8}).load()


def test_wrong_version(tmp_path):
    path = tmp_path / "scan.ck"
    CheckpointManager(path, "anti-square", {"length": 8}).save(STATE)
    raw = bytearray(path.read_bytes())
    offset = len(CHECKPOINT_MAGIC)
    raw[offset:offset + 2] = (CHECKPOINT_VERSION + 1).to_bytes(2, "big")
    path.write_bytes(bytes(raw))
    with pytest.raises(CheckpointError, match="version"):
        CheckpointManager(path, "anti-square", {"length": 8}).load()


def test_not_a_checkpoint(tmp_path):
    path = tmp_path / "scan.ck"
    path.write_bytes(b"x" * 100)
    with pytest.raises(CheckpointError):
        CheckpointManager(path, "anti-square", {"length": 8}).load()


def test_unwritable_checkpoint_is_reported(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("")
    manager = CheckpointManager(blocker / "scan.ck", "anti-square", {"length": 8})
    with caplog.at_level(logging.WARNING, logger="shufsq"):
        assert manager.save(STATE) is False
    assert any("Could not write checkpoint" in r.getMessage() for r in caplog.records)


# --- Worker configuration ---


def test_default_workers_from_environment(monkeypatch):
    monkeypatch.setenv(WORKERS_ENV, "3")
    assert default_workers() == 3
    monkeypatch.setenv(WORKERS_ENV, "many")
    assert default_workers() == 1
    monkeypatch.setenv(WORKERS_ENV, "0")
    assert default_workers() == 1
    monkeypatch.delenv(WORKERS_ENV)
    assert default_workers() == 1


def test_scan_options_validation(tmp_path):
    assert ScanOptions(workers=None).workers == 1
    assert ScanOptions(checkpoint=str(tmp_path / "a.ck")).checkpoint == tmp_path / "a.ck"
    with pytest.raises(ValueError):
        ScanOptions(workers=0)
    with pytest.raises(ValueError):
        ScanOptions(chunk_size=0)


def test_chunked():
    assert list(chunked(range(7), 3)) == [[0, 1, 2], [3, 4, 5], [6]]
    assert list(chunked([], 3)) == []


def _square(x):
    return x * x


@pytest.mark.parametrize("workers", [1, 2])
def test_worker_pool_keeps_order(workers):
    assert list(WorkerPool(workers).map(_square, range(20))) == [x * x for x in range(20)]


def test_worker_pool_with_progress():
    assert list(WorkerPool(1, progress=True).map(_square, range(5), total=5)) == [0, 1, 4, 9, 16]


def test_worker_pool_pulls_items_lazily():
    pulled = []

    def items():
        for x in range(50):
            pulled.append(x)
            yield x

    results = WorkerPool(2).map(_square, items())
    assert next(results) == 0
    assert len(pulled) == 2 * IN_FLIGHT_PER_WORKER
    assert next(results) == 1
    assert len(pulled) == 2 * IN_FLIGHT_PER_WORKER + 1
    assert list(results) == [x * x for x in range(2, 50)]
    assert len(pulled) == 50
