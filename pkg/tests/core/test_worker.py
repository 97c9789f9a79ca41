from ls_path_crystal import core, constants


def test_run_batches_keeps_order():
    items = list(range(23))
    assert core.worker.run_batches(lambda x: x * x, items, 1) == [x * x for x in items]
    assert core.worker.run_batches(lambda x: x * x, items, 3) == [x * x for x in items]


def test_run_batches_empty():
    assert core.worker.run_batches(lambda x: x, [], 4) == []


def test_thread_cap(monkeypatch):
    monkeypatch.setenv(constants.ENV_THREADS, "2")
    assert core.worker.effective_threads(8) == 2
    assert core.worker.effective_threads(None) == 1

    monkeypatch.setenv(constants.ENV_THREADS, "many")
    assert core.worker.thread_cap() is None
    assert core.worker.effective_threads(8) == 8

    monkeypatch.delenv(constants.ENV_THREADS)
    assert core.worker.effective_threads(0) == 1
